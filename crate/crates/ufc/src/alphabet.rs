//! Letters, ordered alphabets, and words.
//!
//! Alphabets are kept strictly increasing by character code; every iteration
//! over letters anywhere in the crate follows that order, which is what makes
//! breadth-first numbering and report output reproducible.

use std::fmt;
use std::str::FromStr;

use crate::error::{letters_display, Error, Result};

/// A single input symbol.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter(char);

impl Letter {
    pub fn new(c: char) -> Letter {
        Letter(c)
    }

    pub fn as_char(self) -> char {
        self.0
    }
}

impl From<char> for Letter {
    fn from(c: char) -> Letter {
        Letter(c)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An ordered set of distinct letters.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Alphabet {
    letters: Vec<Letter>,
}

impl Alphabet {
    /// Builds an alphabet from letters that must already be strictly
    /// increasing; anything else is rejected as malformed.
    pub fn new(letters: impl IntoIterator<Item = Letter>) -> Result<Alphabet> {
        let letters: Vec<Letter> = letters.into_iter().collect();
        for pair in letters.windows(2) {
            if pair[0] >= pair[1] {
                return Err(Error::MalformedAlphabet(format!(
                    "'{}' does not precede '{}'",
                    pair[0], pair[1]
                )));
            }
        }
        Ok(Alphabet { letters })
    }

    /// Convenience constructor from a string of characters, e.g. `"abc"`.
    pub fn from_chars(s: &str) -> Result<Alphabet> {
        Alphabet::new(s.chars().map(Letter::new))
    }

    /// Builds an alphabet from letters in any order, sorting and rejecting
    /// duplicates.
    pub fn from_unordered(letters: impl IntoIterator<Item = Letter>) -> Result<Alphabet> {
        let mut letters: Vec<Letter> = letters.into_iter().collect();
        letters.sort();
        for pair in letters.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::MalformedAlphabet(format!("duplicate '{}'", pair[0])));
            }
        }
        Ok(Alphabet { letters })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn iter(&self) -> impl Iterator<Item = Letter> + '_ {
        self.letters.iter().copied()
    }

    pub fn get(&self, index: usize) -> Letter {
        self.letters[index]
    }

    pub fn index_of(&self, letter: Letter) -> Option<usize> {
        self.letters.binary_search(&letter).ok()
    }

    pub fn contains(&self, letter: Letter) -> bool {
        self.index_of(letter).is_some()
    }

    pub fn is_subset_of(&self, other: &Alphabet) -> bool {
        self.iter().all(|l| other.contains(l))
    }

    /// Merged alphabet, still strictly increasing.
    pub fn union(&self, other: &Alphabet) -> Alphabet {
        let mut letters: Vec<Letter> = self.letters.clone();
        letters.extend(other.iter());
        letters.sort();
        letters.dedup();
        Alphabet { letters }
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", letters_display(self.letters.iter()))
    }
}

/// A finite sequence of letters; the empty word is epsilon.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn epsilon() -> Word {
        Word::default()
    }

    pub fn new(letters: impl IntoIterator<Item = Letter>) -> Word {
        Word {
            letters: letters.into_iter().collect(),
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&mut self, letter: Letter) {
        self.letters.push(letter);
    }

    pub fn reversed(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().copied().collect(),
        }
    }
}

impl From<&str> for Word {
    fn from(s: &str) -> Word {
        Word::new(s.chars().map(Letter::new))
    }
}

impl FromStr for Word {
    type Err = std::convert::Infallible;

    fn from_str(s: &str) -> std::result::Result<Word, Self::Err> {
        Ok(Word::from(s))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "ε");
        }
        for l in &self.letters {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alphabet_requires_strict_order() {
        assert!(Alphabet::from_chars("abc").is_ok());
        assert!(matches!(
            Alphabet::from_chars("acb"),
            Err(Error::MalformedAlphabet(_))
        ));
        assert!(matches!(
            Alphabet::from_chars("aab"),
            Err(Error::MalformedAlphabet(_))
        ));
    }

    #[test]
    fn alphabet_union_merges_in_order() {
        let ab = Alphabet::from_chars("ab").unwrap();
        let bd = Alphabet::from_chars("bd").unwrap();
        assert_eq!(ab.union(&bd), Alphabet::from_chars("abd").unwrap());
    }

    #[test]
    fn word_display_and_reverse() {
        let w = Word::from("ba");
        assert_eq!(w.to_string(), "ba");
        assert_eq!(w.reversed().to_string(), "ab");
        assert_eq!(Word::epsilon().to_string(), "ε");
    }
}
