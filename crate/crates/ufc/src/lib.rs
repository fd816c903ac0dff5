//! A state-complexity laboratory for deterministic union-free regular
//! languages.
//!
//! The crate is built around one family of witness automata: the n-state
//! one-cycle-free-path DFAs of [`witness::make_witness`] and their dialects.
//! On top of the usual automaton toolkit (subset construction, Hopcroft
//! minimization, language equivalence), it measures the quantities that make
//! this family "most complex" among deterministic union-free languages:
//!
//! * the syntactic semigroup, via transformation closure ([`transform`]),
//! * quotient complexities ([`Dfa::quotient_complexities`]),
//! * reversal, star, product and boolean operations, built exactly as their
//!   complexity proofs build them ([`ops`]),
//! * the number and complexities of atoms ([`atoms`]),
//! * the union-free expression for the witness language, with union
//!   elimination ([`regex`]),
//! * the one-cycle-free-path property itself ([`witness::ocfp_check`]).
//!
//! [`report::run_verify`] sweeps parameter grids over all of these and
//! renders pass/fail tables; the `ufc` binary exposes the same machinery on
//! the command line. Each capability also has a runnable demo under
//! `examples/`.
//!
//! ```
//! use ufc::witness::{make_witness, ocfp_check};
//! use ufc::ops::{star, reverse};
//!
//! let d = make_witness(4, &"a,b".parse().unwrap()).unwrap();
//! assert!(ocfp_check(&d).passed());
//! assert_eq!(star(&d).unwrap().complexity(), 12);
//!
//! let t = make_witness(4, &"a,b,c".parse().unwrap()).unwrap();
//! assert_eq!(reverse(&t).unwrap().complexity(), 16);
//! ```

pub mod alphabet;
pub mod atoms;
pub mod dfa;
pub mod equiv;
pub mod error;
pub mod interchange;
mod minimize;
pub mod nfa;
pub mod ops;
pub mod regex;
pub mod report;
pub mod transform;
pub mod witness;

pub use alphabet::{Alphabet, Letter, Word};
pub use dfa::{Dfa, State};
pub use error::{Error, Result};
pub use nfa::Nfa;


#[cfg(test)]
pub(crate) mod test_support {
    use crate::alphabet::{Alphabet, Letter, Word};
    use crate::dfa::Dfa;
    use crate::regex::RegexNode;

    /// Plain xorshift64*, good enough for reproducible test inputs.
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

    /// All words of exactly `len` letters, in lexicographic order.
    pub fn words(alphabet: &Alphabet, len: usize) -> Vec<Word> {
        let mut out = vec![Word::epsilon()];
        for _ in 0..len {
            let mut next = Vec::with_capacity(out.len() * alphabet.len());
            for w in &out {
                for l in alphabet.iter() {
                    let mut longer = w.clone();
                    longer.push(l);
                    next.push(longer);
                }
            }
            out = next;
        }
        out
    }

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

    /// Random expression whose unions all sit under stars, so that
    /// elimination must succeed.
    pub fn random_starred_union_regex(rng: &mut XorShift, depth: usize) -> RegexNode {
        // the top level avoids bare unions
        match rng.below(3) {
            0 => random_union_free(rng, depth),
            1 => random_any(rng, depth).star(),
            _ => RegexNode::concat(vec![
                random_union_free(rng, depth.saturating_sub(1)),
                random_any(rng, depth.saturating_sub(1)).star(),
            ]),
        }
    }

    fn random_letter(rng: &mut XorShift) -> RegexNode {
        let c = ['a', 'b', 'c'][rng.below(3)];
        RegexNode::Letter(Letter::new(c))
    }

    fn random_union_free(rng: &mut XorShift, depth: usize) -> RegexNode {
        if depth == 0 {
            return random_letter(rng);
        }
        match rng.below(4) {
            0 => random_letter(rng),
            1 => RegexNode::Epsilon,
            2 => RegexNode::concat(vec![
                random_union_free(rng, depth - 1),
                random_union_free(rng, depth - 1),
            ]),
            _ => random_any(rng, depth - 1).star(),
        }
    }

    /// May contain unions anywhere; only ever used under a star.
    fn random_any(rng: &mut XorShift, depth: usize) -> RegexNode {
        if depth == 0 {
            return random_letter(rng);
        }
        match rng.below(4) {
            0 => random_letter(rng),
            1 => RegexNode::union(vec![random_any(rng, depth - 1), random_any(rng, depth - 1)]),
            2 => RegexNode::concat(vec![random_any(rng, depth - 1), random_any(rng, depth - 1)]),
            _ => random_any(rng, depth - 1).star(),
        }
    }
}
