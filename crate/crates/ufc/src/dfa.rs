//! Deterministic finite automata.
//!
//! States are `0..state_count`. Transitions are stored per letter, in alphabet
//! order, and may be absent (`None`) — a DFA is *complete* when no entry is
//! absent. Reading a letter outside the alphabet, or a missing transition,
//! lands in an implicit dead state: [`Dfa::accepts`] simply rejects.

use std::collections::BTreeSet;

use crate::alphabet::{Alphabet, Letter, Word};
use crate::error::{letters_display, Error, Result};

pub type State = usize;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Dfa {
    state_count: usize,
    alphabet: Alphabet,
    /// `transitions[letter_index][state]`
    transitions: Vec<Vec<Option<State>>>,
    initial: State,
    finals: BTreeSet<State>,
}

impl Dfa {
    /// A DFA with all transitions absent; fill them in with
    /// [`Dfa::set_transition`] or [`Dfa::set_column`].
    pub fn new(
        state_count: usize,
        alphabet: Alphabet,
        initial: State,
        finals: impl IntoIterator<Item = State>,
    ) -> Result<Dfa> {
        if state_count == 0 {
            return Err(Error::NoStates);
        }
        if initial >= state_count {
            return Err(Error::StateOutOfRange {
                state: initial,
                count: state_count,
            });
        }
        let finals: BTreeSet<State> = finals.into_iter().collect();
        if let Some(&bad) = finals.iter().find(|&&q| q >= state_count) {
            return Err(Error::StateOutOfRange {
                state: bad,
                count: state_count,
            });
        }
        Ok(Dfa {
            state_count,
            transitions: vec![vec![None; state_count]; alphabet.len()],
            alphabet,
            initial,
            finals,
        })
    }

    pub fn set_transition(&mut self, from: State, letter: Letter, to: State) -> Result<()> {
        let li = self
            .alphabet
            .index_of(letter)
            .ok_or(Error::ForeignLetter(letter))?;
        let n = self.state_count();
        for q in [from, to] {
            if q >= n {
                return Err(Error::StateOutOfRange { state: q, count: n });
            }
        }
        self.transitions[li][from] = Some(to);
        Ok(())
    }

    /// Sets the whole column for one letter: `targets[q]` is the successor of
    /// state `q`.
    pub fn set_column(&mut self, letter: Letter, targets: &[State]) -> Result<()> {
        let li = self
            .alphabet
            .index_of(letter)
            .ok_or(Error::ForeignLetter(letter))?;
        let n = self.state_count();
        if targets.len() != n {
            return Err(Error::Interchange(format!(
                "column for '{letter}' has {} entries, expected {n}",
                targets.len()
            )));
        }
        if let Some(&bad) = targets.iter().find(|&&q| q >= n) {
            return Err(Error::StateOutOfRange {
                state: bad,
                count: n,
            });
        }
        self.transitions[li] = targets.iter().map(|&q| Some(q)).collect();
        Ok(())
    }

    pub fn state_count(&self) -> usize {
        self.state_count
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn initial(&self) -> State {
        self.initial
    }

    pub fn finals(&self) -> &BTreeSet<State> {
        &self.finals
    }

    pub fn is_final(&self, q: State) -> bool {
        self.finals.contains(&q)
    }

    /// Successor under one letter, if defined. Foreign letters yield `None`.
    pub fn step(&self, q: State, letter: Letter) -> Option<State> {
        let li = self.alphabet.index_of(letter)?;
        self.transitions[li][q]
    }

    pub(crate) fn step_by_index(&self, q: State, letter_index: usize) -> Option<State> {
        self.transitions[letter_index][q]
    }

    /// Runs the word from `q`; `None` once the implicit dead state is hit.
    pub fn run(&self, q: State, w: &Word) -> Option<State> {
        let mut cur = q;
        for &l in w.letters() {
            cur = self.step(cur, l)?;
        }
        Some(cur)
    }

    /// Word membership. Undefined transitions and foreign letters reject.
    pub fn accepts(&self, w: &Word) -> bool {
        match self.run(self.initial, w) {
            Some(q) => self.is_final(q),
            None => false,
        }
    }

    pub fn is_complete(&self) -> bool {
        self.transitions
            .iter()
            .all(|col| col.iter().all(Option::is_some))
    }

    /// Completes the automaton over `over` without changing its language.
    ///
    /// If nothing is missing the automaton is returned unchanged; otherwise a
    /// single non-final sink state is appended and every absent transition
    /// points at it.
    pub fn complete(&self, over: &Alphabet) -> Result<Dfa> {
        if !self.alphabet.is_subset_of(over) {
            return Err(Error::AlphabetNotContained {
                found: letters_display(self.alphabet.iter()),
                required: letters_display(over.iter()),
            });
        }
        if self.alphabet == *over && self.is_complete() {
            return Ok(self.clone());
        }
        let n = self.state_count();
        let sink = n;
        let mut transitions = Vec::with_capacity(over.len());
        for letter in over.iter() {
            let mut col: Vec<Option<State>> = match self.alphabet.index_of(letter) {
                Some(li) => self.transitions[li].clone(),
                None => vec![None; n],
            };
            col.push(None); // sink row
            transitions.push(col.into_iter().map(|t| Some(t.unwrap_or(sink))).collect());
        }
        Ok(Dfa {
            state_count: n + 1,
            alphabet: over.clone(),
            transitions,
            initial: self.initial,
            finals: self.finals.clone(),
        })
    }

    /// Completes over the automaton's own alphabet.
    pub fn complete_over_self(&self) -> Dfa {
        self.complete(&self.alphabet.clone())
            .expect("own alphabet always contains itself")
    }

    /// States reachable from the initial state, in breadth-first discovery
    /// order with letters explored in alphabet order.
    pub fn reachable_states(&self) -> Vec<State> {
        let mut seen = vec![false; self.state_count()];
        let mut order = Vec::with_capacity(self.state_count());
        seen[self.initial] = true;
        order.push(self.initial);
        let mut head = 0;
        while head < order.len() {
            let q = order[head];
            head += 1;
            for col in &self.transitions {
                if let Some(t) = col[q] {
                    if !seen[t] {
                        seen[t] = true;
                        order.push(t);
                    }
                }
            }
        }
        order
    }

    /// Renumbers states canonically (breadth-first from the initial state,
    /// letters in alphabet order) and drops unreachable states.
    pub fn canonicalize(&self) -> Dfa {
        let order = self.reachable_states();
        let mut rename = vec![usize::MAX; self.state_count()];
        for (new, &old) in order.iter().enumerate() {
            rename[old] = new;
        }
        let transitions = self
            .transitions
            .iter()
            .map(|col| {
                order
                    .iter()
                    .map(|&old| col[old].map(|t| rename[t]))
                    .collect()
            })
            .collect();
        Dfa {
            state_count: order.len(),
            alphabet: self.alphabet.clone(),
            transitions,
            initial: 0,
            finals: self
                .finals
                .iter()
                .filter(|&&q| rename[q] != usize::MAX)
                .map(|&q| rename[q])
                .collect(),
        }
    }

    /// Left quotient: the same automaton started from `δ(initial, w)`.
    pub fn quotient(&self, w: &Word) -> Result<Dfa> {
        if !self.is_complete() {
            return Err(Error::NotComplete);
        }
        if let Some(&foreign) = w.letters().iter().find(|&&l| !self.alphabet.contains(l)) {
            return Err(Error::ForeignLetter(foreign));
        }
        let initial = self
            .run(self.initial, w)
            .expect("complete automaton cannot fall off");
        Ok(Dfa {
            state_count: self.state_count,
            alphabet: self.alphabet.clone(),
            transitions: self.transitions.clone(),
            initial,
            finals: self.finals.clone(),
        })
    }

    /// Complexity of each quotient: for every reachable state (ascending),
    /// the complexity of this automaton restarted there.
    pub fn quotient_complexities(&self) -> Result<Vec<usize>> {
        if !self.is_complete() {
            return Err(Error::NotComplete);
        }
        let mut reachable = self.reachable_states();
        reachable.sort_unstable();
        reachable
            .into_iter()
            .map(|q| {
                let mut shifted = self.clone();
                shifted.initial = q;
                Ok(shifted.minimize().state_count())
            })
            .collect()
    }

    /// The alphabet of the recognized language: letters that occur in at
    /// least one accepted word.
    pub fn language_alphabet(&self) -> Alphabet {
        let n = self.state_count();
        let mut reachable = vec![false; n];
        for q in self.reachable_states() {
            reachable[q] = true;
        }
        // states that can still reach a final state
        let mut live = vec![false; n];
        let mut stack: Vec<State> = self.finals.iter().copied().collect();
        for &q in &stack {
            live[q] = true;
        }
        let mut preds: Vec<Vec<State>> = vec![Vec::new(); n];
        for col in &self.transitions {
            for (q, t) in col.iter().enumerate() {
                if let Some(t) = t {
                    preds[*t].push(q);
                }
            }
        }
        while let Some(q) = stack.pop() {
            for &p in &preds[q] {
                if !live[p] {
                    live[p] = true;
                    stack.push(p);
                }
            }
        }
        let letters = self.alphabet.iter().enumerate().filter_map(|(li, letter)| {
            let used = (0..n).any(|q| {
                reachable[q] && live[q] && matches!(self.transitions[li][q], Some(t) if live[t])
            });
            used.then_some(letter)
        });
        Alphabet::new(letters).expect("subsequence of an ordered alphabet stays ordered")
    }

    /// Restricts the automaton to the alphabet of its language, dropping
    /// letters that appear in no accepted word. The language is unchanged.
    pub fn with_language_alphabet(&self) -> Dfa {
        let keep = self.language_alphabet();
        if keep == self.alphabet {
            return self.clone();
        }
        let transitions = keep
            .iter()
            .map(|l| self.transitions[self.alphabet.index_of(l).unwrap()].clone())
            .collect();
        Dfa {
            state_count: self.state_count,
            alphabet: keep,
            transitions,
            initial: self.initial,
            finals: self.finals.clone(),
        }
    }

    /// Complexity over the language's own alphabet: the usual convention
    /// when operands with different alphabets are compared.
    pub fn language_complexity(&self) -> usize {
        self.with_language_alphabet().minimize().state_count()
    }

    pub(crate) fn raw_parts(
        state_count: usize,
        alphabet: Alphabet,
        transitions: Vec<Vec<Option<State>>>,
        initial: State,
        finals: BTreeSet<State>,
    ) -> Dfa {
        Dfa {
            state_count,
            alphabet,
            transitions,
            initial,
            finals,
        }
    }

    pub(crate) fn columns(&self) -> &[Vec<Option<State>>] {
        &self.transitions
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::witness::{make_witness, DialectSpec};

    fn w(n: usize, dialect: &str) -> Dfa {
        make_witness(n, &dialect.parse::<DialectSpec>().unwrap()).unwrap()
    }

    #[test]
    fn witness_accepts_ba_chain() {
        // 0 -b-> 1 -a-> 2 (final at n = 3)
        let d = w(3, "a,b,c");
        assert!(d.accepts(&Word::from("ba")));
        assert!(!d.accepts(&Word::from("b")));
        assert!(!d.accepts(&Word::from("")));
    }

    #[test]
    fn epsilon_accepted_iff_initial_final() {
        let mut d = Dfa::new(1, Alphabet::from_chars("a").unwrap(), 0, [0]).unwrap();
        d.set_column(Letter::new('a'), &[0]).unwrap();
        assert!(d.accepts(&Word::epsilon()));
    }

    #[test]
    fn foreign_letters_reject() {
        let d = w(4, "a,b,c");
        assert!(!d.accepts(&Word::from("d")));
    }

    #[test]
    fn complete_adds_single_sink() {
        let d = w(3, "a,b");
        let abc = Alphabet::from_chars("abc").unwrap();
        let c = d.complete(&abc).unwrap();
        assert_eq!(c.state_count(), 4);
        assert!(c.is_complete());
        // sink self-loops on every letter, and every original state moves to
        // it on the new letter
        for l in abc.iter() {
            assert_eq!(c.step(3, l), Some(3));
        }
        for q in 0..3 {
            assert_eq!(c.step(q, Letter::new('c')), Some(3));
        }
        // membership unchanged on words over the original alphabet
        for len in 0..=8 {
            for w in crate::test_support::words(&d.alphabet().clone(), len) {
                assert_eq!(d.accepts(&w), c.accepts(&w));
            }
        }
    }

    #[test]
    fn complete_is_idempotent_and_noop_when_complete() {
        let d = w(3, "a,b,c");
        let abc = d.alphabet().clone();
        let once = d.complete(&abc).unwrap();
        assert_eq!(once, d);
        let partial = w(3, "a,b");
        let ab_c = Alphabet::from_chars("abc").unwrap();
        let c1 = partial.complete(&ab_c).unwrap();
        let c2 = c1.complete(&ab_c).unwrap();
        assert_eq!(c1, c2);
    }

    #[test]
    fn complete_rejects_shrinking_alphabet() {
        let d = w(3, "a,b,c");
        let ab = Alphabet::from_chars("ab").unwrap();
        assert!(matches!(
            d.complete(&ab),
            Err(Error::AlphabetNotContained { .. })
        ));
    }

    #[test]
    fn quotient_of_epsilon_is_identity() {
        let d = w(4, "a,b");
        let q = d.quotient(&Word::epsilon()).unwrap();
        assert_eq!(q, d);
    }

    #[test]
    fn quotient_moves_initial() {
        // b: (0,1), so reading "b" starts the language at state 1
        let d = w(4, "a,b");
        let q = d.quotient(&Word::from("b")).unwrap();
        assert_eq!(q.initial(), 1);
    }

    #[test]
    fn quotient_rejects_foreign_letter() {
        let d = w(4, "a,b");
        assert_eq!(
            d.quotient(&Word::from("z")),
            Err(Error::ForeignLetter(Letter::new('z')))
        );
    }

    #[test]
    fn quotient_complexities_of_witness() {
        let d = w(4, "a,b,c");
        assert_eq!(d.quotient_complexities().unwrap(), vec![4, 4, 4, 4]);
    }

    #[test]
    fn single_state_sigma_star() {
        let mut d = Dfa::new(1, Alphabet::from_chars("ab").unwrap(), 0, [0]).unwrap();
        d.set_column(Letter::new('a'), &[0]).unwrap();
        d.set_column(Letter::new('b'), &[0]).unwrap();
        assert_eq!(d.quotient_complexities().unwrap(), vec![1]);
        assert_eq!(d.minimize().state_count(), 1);
    }

    #[test]
    fn distinct_quotient_languages_count_the_complexity() {
        let d = w(3, "a,b");
        let mut canonical: Vec<Dfa> = Vec::new();
        for len in 0..=4 {
            for word in crate::test_support::words(d.alphabet(), len) {
                let q = d.quotient(&word).unwrap().minimize();
                if !canonical.contains(&q) {
                    canonical.push(q);
                }
            }
        }
        assert_eq!(canonical.len(), d.complexity());
    }

    #[test]
    fn language_alphabet_drops_dead_letters() {
        // L = words over {a,b} that are in fact all-a: b leads to a sink
        let mut d = Dfa::new(2, Alphabet::from_chars("ab").unwrap(), 0, [0]).unwrap();
        d.set_column(Letter::new('a'), &[0, 1]).unwrap();
        d.set_column(Letter::new('b'), &[1, 1]).unwrap();
        assert_eq!(d.language_alphabet(), Alphabet::from_chars("a").unwrap());
        assert_eq!(d.language_complexity(), 1);
    }
}
