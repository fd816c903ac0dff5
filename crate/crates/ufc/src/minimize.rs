//! DFA minimization by Hopcroft partition refinement.
//!
//! The partition is kept as one array of states grouped by class, with
//! per-class windows and a marked prefix, so splitting is O(marked). This
//! comfortably handles the transformation-monoid automata (tens of thousands
//! of states) that the atom construction minimizes.

use crate::dfa::{Dfa, State};

impl Dfa {
    /// The unique minimal complete DFA for this automaton's language,
    /// canonically numbered (breadth-first from the initial state, letters in
    /// alphabet order). Partial automata are completed over their own
    /// alphabet first; a dead state survives only if it is reachable.
    pub fn minimize(&self) -> Dfa {
        let trimmed = self.complete_over_self().canonicalize();
        let class_of = refine(&trimmed);
        let class_count = 1 + class_of.iter().copied().max().unwrap_or(0) as usize;

        let mut representative = vec![usize::MAX; class_count];
        for (q, &c) in class_of.iter().enumerate() {
            if representative[c as usize] == usize::MAX {
                representative[c as usize] = q;
            }
        }
        let transitions = trimmed
            .columns()
            .iter()
            .map(|col| {
                representative
                    .iter()
                    .map(|&rep| col[rep].map(|t| class_of[t] as State))
                    .collect()
            })
            .collect();
        let finals = trimmed
            .finals()
            .iter()
            .map(|&q| class_of[q] as State)
            .collect();
        Dfa::raw_parts(
            class_count,
            trimmed.alphabet().clone(),
            transitions,
            class_of[trimmed.initial()] as State,
            finals,
        )
        .canonicalize()
    }

    /// State complexity: the size of the minimal DFA.
    pub fn complexity(&self) -> usize {
        self.minimize().state_count()
    }

    /// A complete DFA is minimal when every state is reachable and no two
    /// states are equivalent.
    pub fn is_minimal(&self) -> bool {
        self.is_complete() && self.minimize().state_count() == self.state_count()
    }
}

/// Hopcroft's algorithm on a complete, all-reachable DFA. Returns the class
/// of every state; class ids are arbitrary but constant within a run.
fn refine(d: &Dfa) -> Vec<u32> {
    let n = d.state_count();
    let letters = d.alphabet().len();

    let mut partition = Partition::new(n, |q| d.is_final(q));
    if partition.class_count() == 1 || n == 1 {
        return vec![0; n];
    }

    // inverse transitions, CSR per letter
    let mut pred_start = vec![vec![0u32; n + 1]; letters];
    let mut pred_list = vec![vec![0u32; n]; letters];
    for (li, col) in d.columns().iter().enumerate() {
        for t in col.iter().flatten() {
            pred_start[li][*t + 1] += 1;
        }
        for q in 0..n {
            pred_start[li][q + 1] += pred_start[li][q];
        }
        let mut cursor = pred_start[li].clone();
        for (q, t) in col.iter().enumerate() {
            let t = t.expect("refine requires a complete DFA");
            pred_list[li][cursor[t] as usize] = q as u32;
            cursor[t] += 1;
        }
    }

    let mut worklist: Vec<u32> = vec![0, 1];
    let mut in_worklist = vec![true, true];
    let mut touched: Vec<u32> = Vec::new();
    let mut splitter: Vec<u32> = Vec::new();

    while let Some(a) = worklist.pop() {
        in_worklist[a as usize] = false;
        splitter.clear();
        splitter.extend_from_slice(partition.class_elems(a));
        for li in 0..letters {
            touched.clear();
            for &s in &splitter {
                let lo = pred_start[li][s as usize] as usize;
                let hi = pred_start[li][s as usize + 1] as usize;
                for &p in &pred_list[li][lo..hi] {
                    let c = partition.class_of(p);
                    if partition.marked(c) == 0 {
                        touched.push(c);
                    }
                    partition.mark(p);
                }
            }
            for &c in &touched {
                let Some(new_class) = partition.split(c) else {
                    continue;
                };
                in_worklist.push(false);
                if in_worklist[c as usize] {
                    in_worklist[new_class as usize] = true;
                    worklist.push(new_class);
                } else {
                    let smaller = if partition.len(new_class) < partition.len(c) {
                        new_class
                    } else {
                        c
                    };
                    in_worklist[smaller as usize] = true;
                    worklist.push(smaller);
                }
            }
        }
    }

    (0..n).map(|q| partition.class_of(q as u32)).collect()
}

struct Partition {
    elems: Vec<u32>,
    pos: Vec<u32>,
    class_of: Vec<u32>,
    first: Vec<u32>,
    len: Vec<u32>,
    marked: Vec<u32>,
}

impl Partition {
    fn new(n: usize, is_final: impl Fn(usize) -> bool) -> Partition {
        let finals: Vec<u32> = (0..n as u32).filter(|&q| is_final(q as usize)).collect();
        let nonfinals: Vec<u32> = (0..n as u32).filter(|&q| !is_final(q as usize)).collect();
        let two = !finals.is_empty() && !nonfinals.is_empty();

        let mut elems = Vec::with_capacity(n);
        let mut class_of = vec![0u32; n];
        let mut first = vec![0u32];
        let mut len = Vec::new();
        for (c, group) in [nonfinals, finals]
            .iter()
            .filter(|g| !g.is_empty())
            .enumerate()
        {
            for &q in group {
                class_of[q as usize] = c as u32;
            }
            elems.extend_from_slice(group);
            len.push(group.len() as u32);
            if two && c == 0 {
                first.push(group.len() as u32);
            }
        }
        let mut pos = vec![0u32; n];
        for (i, &q) in elems.iter().enumerate() {
            pos[q as usize] = i as u32;
        }
        let classes = len.len();
        Partition {
            elems,
            pos,
            class_of,
            first,
            len,
            marked: vec![0; classes],
        }
    }

    fn class_count(&self) -> usize {
        self.len.len()
    }

    fn class_of(&self, q: u32) -> u32 {
        self.class_of[q as usize]
    }

    fn len(&self, c: u32) -> u32 {
        self.len[c as usize]
    }

    fn marked(&self, c: u32) -> u32 {
        self.marked[c as usize]
    }

    fn class_elems(&self, c: u32) -> &[u32] {
        let first = self.first[c as usize] as usize;
        &self.elems[first..first + self.len[c as usize] as usize]
    }

    /// Moves `q` into the marked prefix of its class; idempotent.
    fn mark(&mut self, q: u32) {
        let c = self.class_of[q as usize] as usize;
        let p = self.pos[q as usize];
        let boundary = self.first[c] + self.marked[c];
        if p < boundary {
            return; // already marked
        }
        let other = self.elems[boundary as usize];
        self.elems[boundary as usize] = q;
        self.elems[p as usize] = other;
        self.pos[q as usize] = boundary;
        self.pos[other as usize] = p;
        self.marked[c] += 1;
    }

    /// Splits the marked prefix of `c` off as a new class. Returns `None`
    /// (and just clears marks) when the class was entirely marked.
    fn split(&mut self, c: u32) -> Option<u32> {
        let ci = c as usize;
        let m = self.marked[ci];
        self.marked[ci] = 0;
        if m == 0 || m == self.len[ci] {
            return None;
        }
        let new_class = self.len.len() as u32;
        self.first.push(self.first[ci]);
        self.len.push(m);
        self.marked.push(0);
        self.first[ci] += m;
        self.len[ci] -= m;
        let start = self.first[new_class as usize] as usize;
        for i in start..start + m as usize {
            self.class_of[self.elems[i] as usize] = new_class;
        }
        Some(new_class)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::{Alphabet, Letter, Word};
    use crate::witness::{make_witness, DialectSpec};

    fn w(n: usize, dialect: &str) -> Dfa {
        make_witness(n, &dialect.parse::<DialectSpec>().unwrap()).unwrap()
    }

    #[test]
    fn witness_is_already_minimal() {
        for n in 3..=8 {
            let d = w(n, "a,b,c,d");
            let m = d.minimize();
            assert_eq!(m.state_count(), n);
            assert_eq!(m, d.canonicalize());
            assert!(d.is_minimal());
        }
    }

    #[test]
    fn minimize_is_idempotent() {
        let d = w(5, "a,b").minimize();
        assert_eq!(d.minimize(), d);
    }

    #[test]
    fn duplicate_copies_collapse() {
        // two disjoint isomorphic copies of D_4(a,b); the second is
        // unreachable garbage plus an initial that behaves identically
        let base = w(4, "a,b");
        let n = base.state_count();
        let alphabet = base.alphabet().clone();
        let mut doubled = Dfa::new(2 * n, alphabet.clone(), 0, [n - 1, 2 * n - 1]).unwrap();
        for letter in alphabet.iter() {
            let mut col = Vec::new();
            for copy in 0..2 {
                for q in 0..n {
                    col.push(copy * n + base.step(q, letter).unwrap());
                }
            }
            doubled.set_column(letter, &col).unwrap();
        }
        // make the second copy reachable by rerouting one edge to its twin
        doubled
            .set_transition(n - 1, Letter::new('a'), n + 1)
            .unwrap();
        let m = doubled.minimize();
        assert_eq!(m.state_count(), n);
        for len in 0..=(2 * n) {
            for word in crate::test_support::words(&alphabet, len) {
                assert_eq!(doubled.accepts(&word), m.accepts(&word), "word {word}");
            }
        }
    }

    #[test]
    fn minimize_agrees_with_moore_on_random_dfas() {
        let mut rng = crate::test_support::XorShift::new(0x5eed);
        for _ in 0..200 {
            let d = crate::test_support::random_complete_dfa(&mut rng, 7, 3);
            let fast = d.minimize();
            assert_eq!(fast.state_count(), moore_class_count(&d), "dfa {d:?}");
            assert_eq!(fast.minimize(), fast);
        }
    }

    /// Independent oracle: Moore refinement to fixpoint over reachable states.
    fn moore_class_count(d: &Dfa) -> usize {
        let d = d.complete_over_self().canonicalize();
        let n = d.state_count();
        let mut class: Vec<usize> = (0..n).map(|q| d.is_final(q) as usize).collect();
        loop {
            let mut sigs: std::collections::HashMap<Vec<usize>, usize> =
                std::collections::HashMap::new();
            let mut next = Vec::with_capacity(n);
            for q in 0..n {
                let mut sig = vec![class[q]];
                for col in d.columns() {
                    sig.push(class[col[q].unwrap()]);
                }
                let fresh = sigs.len();
                next.push(*sigs.entry(sig).or_insert(fresh));
            }
            if next == class {
                let mut distinct = next.clone();
                distinct.sort_unstable();
                distinct.dedup();
                return distinct.len();
            }
            class = next;
        }
    }

    #[test]
    fn dead_state_kept_only_when_reachable() {
        // partial: no 'b' transition anywhere; completion introduces a sink
        let mut d = Dfa::new(2, Alphabet::from_chars("ab").unwrap(), 0, [1]).unwrap();
        d.set_column(Letter::new('a'), &[1, 1]).unwrap();
        let m = d.minimize();
        assert_eq!(m.state_count(), 3);
        assert!(m.is_complete());
        assert!(m.accepts(&Word::from("a")));
        assert!(!m.accepts(&Word::from("ab")));
    }
}
