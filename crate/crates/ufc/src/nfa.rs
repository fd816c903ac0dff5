//! Nondeterministic finite automata (without epsilon transitions) and the
//! accessible subset construction.

use std::collections::{BTreeSet, HashMap};

use crate::alphabet::{Alphabet, Letter, Word};
use crate::dfa::{Dfa, State};
use crate::error::{Error, Result};

/// Hard cap on the number of source states [`Nfa::determinize`] accepts.
pub const SUBSET_CAPACITY: usize = 1024;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Nfa {
    state_count: usize,
    alphabet: Alphabet,
    /// `transitions[letter_index][state]` is the successor set.
    transitions: Vec<Vec<BTreeSet<State>>>,
    initials: BTreeSet<State>,
    finals: BTreeSet<State>,
}

impl Nfa {
    pub fn new(
        state_count: usize,
        alphabet: Alphabet,
        initials: impl IntoIterator<Item = State>,
        finals: impl IntoIterator<Item = State>,
    ) -> Result<Nfa> {
        if state_count == 0 {
            return Err(Error::NoStates);
        }
        let initials: BTreeSet<State> = initials.into_iter().collect();
        let finals: BTreeSet<State> = finals.into_iter().collect();
        for &q in initials.iter().chain(finals.iter()) {
            if q >= state_count {
                return Err(Error::StateOutOfRange {
                    state: q,
                    count: state_count,
                });
            }
        }
        Ok(Nfa {
            state_count,
            transitions: vec![vec![BTreeSet::new(); state_count]; alphabet.len()],
            alphabet,
            initials,
            finals,
        })
    }

    pub fn add_transition(&mut self, from: State, letter: Letter, to: State) -> Result<()> {
        let li = self
            .alphabet
            .index_of(letter)
            .ok_or(Error::ForeignLetter(letter))?;
        for q in [from, to] {
            if q >= self.state_count {
                return Err(Error::StateOutOfRange {
                    state: q,
                    count: self.state_count,
                });
            }
        }
        self.transitions[li][from].insert(to);
        Ok(())
    }

    pub fn state_count(&self) -> usize {
        self.state_count
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn initials(&self) -> &BTreeSet<State> {
        &self.initials
    }

    pub fn finals(&self) -> &BTreeSet<State> {
        &self.finals
    }

    pub fn successors(&self, q: State, letter: Letter) -> Option<&BTreeSet<State>> {
        let li = self.alphabet.index_of(letter)?;
        Some(&self.transitions[li][q])
    }

    /// Word membership: some path from some initial state spells `w` and
    /// ends final. Letters outside the alphabet yield the empty successor
    /// set, so such words are rejected.
    pub fn accepts(&self, w: &Word) -> bool {
        let mut current: BTreeSet<State> = self.initials.clone();
        for &l in w.letters() {
            let Some(li) = self.alphabet.index_of(l) else {
                return false;
            };
            let mut next = BTreeSet::new();
            for &q in &current {
                next.extend(self.transitions[li][q].iter().copied());
            }
            current = next;
            if current.is_empty() {
                return false;
            }
        }
        current.iter().any(|q| self.finals.contains(q))
    }

    /// Accessible subset construction.
    ///
    /// The result is a complete DFA over the same alphabet (the empty subset
    /// acts as the sink when reachable), numbered canonically: state 0 is the
    /// initial subset and the rest follow in breadth-first discovery order
    /// with letters in alphabet order.
    pub fn determinize(&self) -> Result<Dfa> {
        let n = self.state_count;
        if n > SUBSET_CAPACITY {
            return Err(Error::SubsetCapacity {
                got: n,
                cap: SUBSET_CAPACITY,
            });
        }
        let blocks = n.div_ceil(64);
        let set_of = |states: &BTreeSet<State>| -> Box<[u64]> {
            let mut bits = vec![0u64; blocks];
            for &q in states {
                bits[q / 64] |= 1 << (q % 64);
            }
            bits.into_boxed_slice()
        };
        // per-letter, per-state successor masks
        let masks: Vec<Vec<Box<[u64]>>> = self
            .transitions
            .iter()
            .map(|col| col.iter().map(&set_of).collect())
            .collect();
        let final_mask = set_of(&self.finals);

        let initial = set_of(&self.initials);
        let mut index: HashMap<Box<[u64]>, usize> = HashMap::new();
        let mut subsets: Vec<Box<[u64]>> = vec![initial.clone()];
        index.insert(initial, 0);
        let mut columns: Vec<Vec<Option<State>>> = vec![Vec::new(); self.alphabet.len()];
        let mut finals: BTreeSet<State> = BTreeSet::new();

        let mut head = 0;
        while head < subsets.len() {
            let current = subsets[head].clone();
            if current
                .iter()
                .zip(final_mask.iter())
                .any(|(a, b)| a & b != 0)
            {
                finals.insert(head);
            }
            for (li, letter_masks) in masks.iter().enumerate() {
                let mut succ = vec![0u64; blocks];
                for (block, word) in current.iter().enumerate() {
                    let mut bits = *word;
                    while bits != 0 {
                        let q = block * 64 + bits.trailing_zeros() as usize;
                        bits &= bits - 1;
                        for (s, m) in succ.iter_mut().zip(letter_masks[q].iter()) {
                            *s |= m;
                        }
                    }
                }
                let succ = succ.into_boxed_slice();
                let id = match index.get(&succ) {
                    Some(&id) => id,
                    None => {
                        let id = subsets.len();
                        subsets.push(succ.clone());
                        index.insert(succ, id);
                        id
                    }
                };
                columns[li].push(Some(id));
            }
            head += 1;
        }

        Ok(Dfa::raw_parts(
            subsets.len(),
            self.alphabet.clone(),
            columns,
            0,
            finals,
        ))
    }
}
