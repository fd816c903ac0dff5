//! Shared helpers for the integration suites: deterministic random inputs
//! and brute-force oracles that stay independent of the construction paths
//! they check.

use ufc::alphabet::{Alphabet, Letter, Word};
use ufc::dfa::Dfa;
use ufc::ops::reverse_nfa;
use ufc::witness::{make_witness, DialectSpec};

/// xorshift64*, fixed seeds only: the suites must be reproducible.
pub struct XorShift(u64);

impl XorShift {
    pub fn new(seed: u64) -> XorShift {
        XorShift(seed.max(1))
    }

    pub fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.0 = x;
        x.wrapping_mul(0x2545_f491_4f6c_dd1d)
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.next() % n as u64) as usize
    }
}

pub fn witness(n: usize, dialect: &str) -> Dfa {
    make_witness(n, &dialect.parse::<DialectSpec>().unwrap()).unwrap()
}

/// All words of length at most `max_len`, shortest first, alphabet order
/// within a length.
pub fn words_up_to(alphabet: &Alphabet, max_len: usize) -> Vec<Word> {
    let mut all = vec![Word::epsilon()];
    let mut layer = vec![Word::epsilon()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * alphabet.len());
        for w in &layer {
            for l in alphabet.iter() {
                let mut longer = w.clone();
                longer.push(l);
                next.push(longer);
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all
}

/// Random complete DFA over a random prefix of {a,b,c}.
pub fn random_complete_dfa(rng: &mut XorShift, max_states: usize, max_letters: usize) -> Dfa {
    let n = 1 + rng.below(max_states);
    let k = 1 + rng.below(max_letters);
    let alphabet = Alphabet::new("abc".chars().take(k).map(Letter::new)).unwrap();
    let finals: Vec<usize> = (0..n).filter(|_| rng.below(3) == 0).collect();
    let mut d = Dfa::new(n, alphabet.clone(), 0, finals).unwrap();
    for l in alphabet.iter() {
        let column: Vec<usize> = (0..n).map(|_| rng.below(n)).collect();
        d.set_column(l, &column).unwrap();
    }
    d
}

/// Double-reversal minimization, used as an oracle against the partition
/// refinement path.
pub fn brzozowski_minimize(d: &Dfa) -> Dfa {
    let once = reverse_nfa(d).unwrap().determinize().unwrap();
    reverse_nfa(&once).unwrap().determinize().unwrap()
}

/// `w ∈ L1·L2` by trying every split.
pub fn concat_oracle(d1: &Dfa, d2: &Dfa, w: &Word) -> bool {
    let letters = w.letters();
    (0..=letters.len()).any(|i| {
        d1.accepts(&Word::new(letters[..i].iter().copied()))
            && d2.accepts(&Word::new(letters[i..].iter().copied()))
    })
}

/// `w ∈ L*` by dynamic programming over factorizations.
pub fn star_oracle(d: &Dfa, w: &Word) -> bool {
    let letters = w.letters();
    let mut reachable = vec![false; letters.len() + 1];
    reachable[0] = true;
    for end in 1..=letters.len() {
        reachable[end] = (0..end).any(|start| {
            reachable[start] && d.accepts(&Word::new(letters[start..end].iter().copied()))
        });
    }
    reachable[letters.len()]
}

/// A second, structurally different closure: saturate the set under all
/// pairwise products until nothing new appears.
pub fn saturation_closure_size(generators: &[Vec<usize>]) -> usize {
    use std::collections::BTreeSet;
    let mut set: BTreeSet<Vec<usize>> = generators.iter().cloned().collect();
    loop {
        let snapshot: Vec<Vec<usize>> = set.iter().cloned().collect();
        let before = set.len();
        for s in &snapshot {
            for t in &snapshot {
                let product: Vec<usize> = s.iter().map(|&q| t[q]).collect();
                set.insert(product);
            }
        }
        if set.len() == before {
            return before;
        }
    }
}

/// The letter actions of a complete DFA as plain image vectors.
pub fn letter_images(d: &Dfa) -> Vec<Vec<usize>> {
    d.alphabet()
        .iter()
        .map(|l| {
            (0..d.state_count())
                .map(|q| d.step(q, l).unwrap())
                .collect()
        })
        .collect()
}
