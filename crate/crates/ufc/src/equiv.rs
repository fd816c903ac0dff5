//! Language equivalence and isomorphism checks for DFAs.

use crate::alphabet::Word;
use crate::dfa::{Dfa, State};
use crate::error::{Error, Result};

/// Shortest word on which two automata disagree, or `None` when the
/// languages are equal.
///
/// Alphabets may differ: both automata are completed over the union alphabet
/// first. Among shortest counterexamples, the lexicographically least (in
/// alphabet order) is returned, found by breadth-first search over the
/// product automaton.
pub fn shortest_difference(d1: &Dfa, d2: &Dfa) -> Option<Word> {
    let over = d1.alphabet().union(d2.alphabet());
    let c1 = d1.complete(&over).expect("union contains both alphabets");
    let c2 = d2.complete(&over).expect("union contains both alphabets");
    let n2 = c2.state_count();

    let pair_id = |p: State, q: State| p * n2 + q;
    let mut seen = vec![false; c1.state_count() * n2];
    // discovery list doubles as the BFS queue; parents rebuild the word
    let mut queue: Vec<(State, State)> = vec![(c1.initial(), c2.initial())];
    let mut parent: Vec<(usize, usize)> = vec![(usize::MAX, usize::MAX)];
    seen[pair_id(c1.initial(), c2.initial())] = true;

    let mut head = 0;
    while head < queue.len() {
        let (p, q) = queue[head];
        if c1.is_final(p) != c2.is_final(q) {
            // rebuild the word along parent links
            let mut letters = Vec::new();
            let mut at = head;
            while parent[at].0 != usize::MAX {
                let (prev, li) = parent[at];
                letters.push(over.get(li));
                at = prev;
            }
            letters.reverse();
            return Some(Word::new(letters));
        }
        for li in 0..over.len() {
            let tp = c1.step_by_index(p, li).expect("completed");
            let tq = c2.step_by_index(q, li).expect("completed");
            if !seen[pair_id(tp, tq)] {
                seen[pair_id(tp, tq)] = true;
                queue.push((tp, tq));
                parent.push((head, li));
            }
        }
        head += 1;
    }
    None
}

/// True when both automata accept the same language.
pub fn equivalent(d1: &Dfa, d2: &Dfa) -> bool {
    shortest_difference(d1, d2).is_none()
}

/// Structural identity of two minimal complete DFAs up to renumbering.
///
/// Errors when either input is not minimal (the check is only meaningful on
/// canonical representatives).
pub fn isomorphic(d1: &Dfa, d2: &Dfa) -> Result<bool> {
    for d in [d1, d2] {
        if !d.is_complete() {
            return Err(Error::NotComplete);
        }
        if !d.is_minimal() {
            return Err(Error::NotMinimal);
        }
    }
    Ok(d1.canonicalize() == d2.canonicalize())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::witness::{make_witness, DialectSpec};

    fn w(n: usize, dialect: &str) -> Dfa {
        make_witness(n, &dialect.parse::<DialectSpec>().unwrap()).unwrap()
    }

    #[test]
    fn witness_pipeline_is_equivalent_to_itself() {
        let d = w(4, "a,b,c");
        assert_eq!(shortest_difference(&d, &d.minimize()), None);
    }

    #[test]
    fn swapped_roles_differ_and_counterexample_is_shortest() {
        let d1 = w(3, "a,b");
        let d2 = w(3, "b,a");
        let word = shortest_difference(&d1, &d2).expect("languages differ");
        assert!(word.len() <= 9);
        assert_ne!(d1.accepts(&word), d2.accepts(&word));
        // no shorter or lexicographically smaller separating word exists
        for len in 0..word.len() {
            for v in crate::test_support::words(&d1.alphabet().union(d2.alphabet()), len) {
                assert_eq!(d1.accepts(&v), d2.accepts(&v), "shorter witness {v}");
            }
        }
        for v in crate::test_support::words(&d1.alphabet().union(d2.alphabet()), word.len()) {
            if v == word {
                break;
            }
            assert_eq!(d1.accepts(&v), d2.accepts(&v), "smaller witness {v}");
        }
    }

    #[test]
    fn isomorphic_requires_minimality() {
        let d = w(3, "a,b");
        let doubled = {
            // unreachable duplicate state makes it non-minimal
            let mut big = Dfa::new(4, d.alphabet().clone(), 0, [2]).unwrap();
            for letter in d.alphabet().clone().iter() {
                for q in 0..3 {
                    big.set_transition(q, letter, d.step(q, letter).unwrap())
                        .unwrap();
                }
                big.set_transition(3, letter, 3).unwrap();
            }
            big
        };
        assert_eq!(isomorphic(&doubled, &d), Err(Error::NotMinimal));
        assert!(isomorphic(&d.minimize(), &d.minimize()).unwrap());
    }

    #[test]
    fn different_languages_are_not_isomorphic() {
        let d1 = w(3, "a,b").minimize();
        let d2 = w(3, "b,a").minimize();
        assert!(!isomorphic(&d1, &d2).unwrap());
    }
}
