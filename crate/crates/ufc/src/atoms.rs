//! Atoms of a regular language.
//!
//! Fix the minimal DFA of a language and let `L_i` be the language of state
//! `i`. For a subset `S` of states, the atom `A_S` is the intersection of
//! the `L_i` with `i ∈ S` and the complements of the others. Nonempty atoms
//! partition all words: a word `w` lies in exactly the atom indexed by the
//! set of states from which `w` is accepted.
//!
//! Atoms are built over the transformation monoid rather than a pair
//! construction: the states of the atom automaton are the word-induced
//! transformations (the identity represents the empty word), `t` steps to
//! `t∘σ` on letter `σ`, and `t` is final exactly when
//! `{ i : i·t ∈ F } = S`. This reuses the semigroup closure and stays within
//! the minimizer's contract even at the monoid sizes of n = 6.

use std::fmt;

use crate::dfa::{Dfa, State};
use crate::error::{Error, Result};
use crate::ops::reverse;
use crate::transform::{letter_transformations, Transformation, DEFAULT_CLOSURE_CAP};

/// A subset of the minimal DFA's states, as a bit set over at most 64
/// states.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct AtomIndex {
    bits: u64,
}

impl AtomIndex {
    pub fn empty() -> AtomIndex {
        AtomIndex { bits: 0 }
    }

    pub fn full(n: usize) -> AtomIndex {
        debug_assert!(n <= 64);
        AtomIndex {
            bits: if n == 64 { u64::MAX } else { (1 << n) - 1 },
        }
    }

    pub fn from_bits(bits: u64) -> AtomIndex {
        AtomIndex { bits }
    }

    pub fn from_states(states: impl IntoIterator<Item = State>) -> AtomIndex {
        let mut bits = 0;
        for q in states {
            debug_assert!(q < 64);
            bits |= 1 << q;
        }
        AtomIndex { bits }
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    pub fn contains(self, q: State) -> bool {
        q < 64 && self.bits & (1 << q) != 0
    }

    pub fn card(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn states(self) -> impl Iterator<Item = State> {
        (0..64).filter(move |&q| self.bits & (1 << q) != 0)
    }
}

impl fmt::Display for AtomIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let states: Vec<String> = self.states().map(|q| q.to_string()).collect();
        write!(f, "{{{}}}", states.join(","))
    }
}

/// The atom automaton scaffolding: the transformation monoid of `d` with its
/// right-multiplication action, plus each element's behaviour set
/// `{ i : i·t ∈ F }`.
struct MonoidAutomaton {
    columns: Vec<Vec<Option<State>>>,
    behaviors: Vec<u64>,
}

fn monoid_automaton(d: &Dfa, cap: usize) -> Result<MonoidAutomaton> {
    let generators = letter_transformations(d)?;
    let mut index: std::collections::HashMap<Transformation, usize> = Default::default();
    let identity = Transformation::identity(d.state_count());
    let mut elements = vec![identity.clone()];
    index.insert(identity, 0);
    let mut columns: Vec<Vec<Option<State>>> = vec![Vec::new(); generators.len()];
    let mut head = 0;
    while head < elements.len() {
        for (li, g) in generators.iter().enumerate() {
            let next = elements[head].compose(g).expect("equal degrees");
            let id = match index.get(&next) {
                Some(&id) => id,
                None => {
                    let id = elements.len();
                    if id > cap {
                        return Err(Error::ClosureCapacity { cap });
                    }
                    index.insert(next.clone(), id);
                    elements.push(next);
                    id
                }
            };
            columns[li].push(Some(id));
        }
        head += 1;
    }
    let behaviors = elements
        .iter()
        .map(|t| {
            let mut bits = 0u64;
            for i in 0..d.state_count() {
                if d.is_final(t.apply(i)) {
                    bits |= 1 << i;
                }
            }
            bits
        })
        .collect();
    Ok(MonoidAutomaton { columns, behaviors })
}

fn check_atom_input(d: &Dfa) -> Result<()> {
    if !d.is_complete() {
        return Err(Error::NotComplete);
    }
    if !d.is_minimal() {
        return Err(Error::NotMinimal);
    }
    if d.state_count() > 64 {
        return Err(Error::AtomWidth(d.state_count()));
    }
    Ok(())
}

fn atom_from_monoid(d: &Dfa, monoid: &MonoidAutomaton, s: AtomIndex) -> Option<Dfa> {
    let finals: Vec<State> = monoid
        .behaviors
        .iter()
        .enumerate()
        .filter(|(_, &b)| b == s.bits())
        .map(|(i, _)| i)
        .collect();
    if finals.is_empty() {
        return None;
    }
    let automaton = Dfa::raw_parts(
        monoid.behaviors.len(),
        d.alphabet().clone(),
        monoid.columns.clone(),
        0,
        finals.into_iter().collect(),
    );
    Some(automaton.minimize())
}

/// Minimal DFA of the atom `A_S`, or `None` when that atom is empty.
pub fn atom(d: &Dfa, s: AtomIndex) -> Result<Option<Dfa>> {
    atom_with_cap(d, s, DEFAULT_CLOSURE_CAP)
}

pub fn atom_with_cap(d: &Dfa, s: AtomIndex, cap: usize) -> Result<Option<Dfa>> {
    check_atom_input(d)?;
    let n = d.state_count();
    if n < 64 && s.bits() >> n != 0 {
        return Err(Error::AtomIndexRange {
            index: s.bits(),
            count: n,
        });
    }
    let monoid = monoid_automaton(d, cap)?;
    Ok(atom_from_monoid(d, &monoid, s))
}

/// Number of nonempty atoms. Computed from the monoid's distinct behaviour
/// sets and cross-checked against the reversal complexity, which it
/// provably equals.
pub fn atom_count(d: &Dfa) -> Result<usize> {
    atom_count_with_cap(d, DEFAULT_CLOSURE_CAP)
}

pub fn atom_count_with_cap(d: &Dfa, cap: usize) -> Result<usize> {
    check_atom_input(d)?;
    let monoid = monoid_automaton(d, cap)?;
    let mut behaviors = monoid.behaviors.clone();
    behaviors.sort_unstable();
    behaviors.dedup();
    let count = behaviors.len();
    let via_reversal = reverse(d)?.complexity();
    assert_eq!(
        count, via_reversal,
        "atom count must match the reversal complexity"
    );
    Ok(count)
}

/// Closed form for the maximal complexity of an atom over `n` states with
/// `|S| = s`: `2^n - 1` at the trivial subsets, otherwise
/// `1 + Σ_{x=1..s} Σ_{y=1..n-s} C(n,x)·C(n-x,y)`.
pub fn atom_complexity_formula(n: usize, s: usize) -> Result<u64> {
    if s > n || n == 0 {
        return Err(Error::AtomParameter { n, s });
    }
    if s == 0 || s == n {
        return Ok(pow2_minus_one(n));
    }
    let mut total: u128 = 1;
    for x in 1..=s {
        for y in 1..=(n - s) {
            total += binomial(n, x) * binomial(n - x, y);
        }
    }
    u64::try_from(total).map_err(|_| Error::AtomParameter { n, s })
}

fn pow2_minus_one(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut result: u128 = 1;
    for i in 0..k {
        result = result * (n - i) as u128 / (i + 1) as u128;
    }
    result
}

/// One row of the per-subset atom sweep.
#[derive(Clone, Debug)]
pub struct AtomRow {
    pub subset: AtomIndex,
    pub nonempty: bool,
    /// Complexity of the atom's minimal DFA, when nonempty.
    pub complexity: Option<usize>,
    /// The closed-form maximum for this subset size.
    pub formula: u64,
    /// Whether the measured complexity meets the formula exactly (the
    /// witness family does; arbitrary languages may fall short).
    pub matches_formula: Option<bool>,
}

#[derive(Clone, Debug)]
pub struct AtomReport {
    pub state_count: usize,
    pub rows: Vec<AtomRow>,
    /// Number of nonempty atoms.
    pub atom_count: usize,
}

/// Guard rails for the exponential sweep.
#[derive(Clone, Copy, Debug)]
pub struct AtomLimits {
    /// Refuse automata with more states than this (the sweep is 2^n
    /// minimizations of monoid-sized automata).
    pub max_states: usize,
    pub closure_cap: usize,
}

impl Default for AtomLimits {
    fn default() -> AtomLimits {
        AtomLimits {
            max_states: 6,
            closure_cap: DEFAULT_CLOSURE_CAP,
        }
    }
}

/// Sweeps every subset `S`, comparing each nonempty atom's complexity with
/// the closed form.
pub fn atoms_report(d: &Dfa) -> Result<AtomReport> {
    atoms_report_with(d, AtomLimits::default())
}

pub fn atoms_report_with(d: &Dfa, limits: AtomLimits) -> Result<AtomReport> {
    check_atom_input(d)?;
    let n = d.state_count();
    if n > limits.max_states {
        return Err(Error::AtomSweepRefused {
            got: n,
            limit: limits.max_states,
        });
    }
    let monoid = monoid_automaton(d, limits.closure_cap)?;
    let mut rows = Vec::with_capacity(1 << n);
    let mut nonempty_count = 0;
    for bits in 0..(1u64 << n) {
        let subset = AtomIndex::from_bits(bits);
        let formula = atom_complexity_formula(n, subset.card())?;
        let atom = atom_from_monoid(d, &monoid, subset);
        let complexity = atom.as_ref().map(Dfa::state_count);
        if complexity.is_some() {
            nonempty_count += 1;
        }
        rows.push(AtomRow {
            subset,
            nonempty: complexity.is_some(),
            complexity,
            formula,
            matches_formula: complexity.map(|c| c as u64 == formula),
        });
    }
    Ok(AtomReport {
        state_count: n,
        rows,
        atom_count: nonempty_count,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::witness::{make_witness, DialectSpec};

    fn w(n: usize, dialect: &str) -> Dfa {
        make_witness(n, &dialect.parse::<DialectSpec>().unwrap()).unwrap()
    }

    #[test]
    fn formula_instances() {
        assert_eq!(atom_complexity_formula(3, 0).unwrap(), 7);
        assert_eq!(atom_complexity_formula(3, 3).unwrap(), 7);
        assert_eq!(atom_complexity_formula(3, 1).unwrap(), 10);
        assert_eq!(atom_complexity_formula(3, 2).unwrap(), 10);
        assert_eq!(atom_complexity_formula(4, 2).unwrap(), 43);
        assert!(matches!(
            atom_complexity_formula(3, 4),
            Err(Error::AtomParameter { .. })
        ));
    }

    #[test]
    fn formula_against_independent_double_sum() {
        // recompute with a naïve factorial-based evaluator
        fn fact(n: usize) -> u128 {
            (1..=n as u128).product::<u128>().max(1)
        }
        fn choose(n: usize, k: usize) -> u128 {
            if k > n {
                0
            } else {
                fact(n) / (fact(k) * fact(n - k))
            }
        }
        for n in 1..=12 {
            for s in 1..n {
                let mut expect: u128 = 1;
                for x in 1..=s {
                    for y in 1..=(n - s) {
                        expect += choose(n, x) * choose(n - x, y);
                    }
                }
                assert_eq!(
                    atom_complexity_formula(n, s).unwrap() as u128,
                    expect,
                    "n={n} s={s}"
                );
            }
        }
    }

    #[test]
    fn witness_atoms_at_n3() {
        let d = w(3, "a,b,c");
        let expected = [7, 10, 10, 10, 10, 10, 10, 7];
        let report = atoms_report(&d).unwrap();
        assert_eq!(report.atom_count, 8);
        for (bits, want) in expected.iter().enumerate() {
            let row = &report.rows[bits];
            assert!(row.nonempty);
            assert_eq!(row.complexity, Some(*want as usize), "S = {}", row.subset);
            assert_eq!(row.matches_formula, Some(true));
        }
    }

    #[test]
    fn single_atom_lookup() {
        let d = w(3, "a,b,c");
        let a = atom(&d, AtomIndex::from_states([0])).unwrap().unwrap();
        assert_eq!(a.state_count(), 10);
        let full = atom(&d, AtomIndex::full(3)).unwrap().unwrap();
        assert_eq!(full.state_count(), 7);
    }

    #[test]
    fn atom_count_matches_reversal() {
        for n in 3..=5 {
            let d = w(n, "a,b,c");
            assert_eq!(atom_count(&d).unwrap(), 1 << n, "n = {n}");
        }
        // a dialect with fewer letters has fewer atoms; both routes agree
        let d = w(3, "a,b");
        let count = atom_count(&d).unwrap();
        assert_eq!(count, reverse(&d).unwrap().complexity());
    }

    #[test]
    fn atoms_partition_sampled_words() {
        let d = w(3, "a,b,c").minimize();
        let report = atoms_report(&d).unwrap();
        let atoms: Vec<(u64, Dfa)> = report
            .rows
            .iter()
            .filter(|r| r.nonempty)
            .map(|r| {
                (
                    r.subset.bits(),
                    atom(&d, r.subset).unwrap().expect("nonempty"),
                )
            })
            .collect();
        for len in 0..=6 {
            for word in crate::test_support::words(d.alphabet(), len) {
                // exactly the atom indexed by the accepting quotients matches
                let mut expected_bits = 0u64;
                for q in 0..d.state_count() {
                    if d.run(q, &word).map(|t| d.is_final(t)).unwrap() {
                        expected_bits |= 1 << q;
                    }
                }
                let members: Vec<u64> = atoms
                    .iter()
                    .filter(|(_, a)| a.accepts(&word))
                    .map(|(bits, _)| *bits)
                    .collect();
                assert_eq!(members, vec![expected_bits], "word {word}");
            }
        }
    }

    #[test]
    fn empty_atom_is_none() {
        // a single-state Σ*-acceptor has one atom (S = {0}); S = {} is empty
        let mut d = Dfa::new(
            1,
            crate::alphabet::Alphabet::from_chars("a").unwrap(),
            0,
            [0],
        )
        .unwrap();
        d.set_column(crate::alphabet::Letter::new('a'), &[0])
            .unwrap();
        assert_eq!(atom_count(&d).unwrap(), 1);
        assert!(atom(&d, AtomIndex::empty()).unwrap().is_none());
        assert!(atom(&d, AtomIndex::full(1)).unwrap().is_some());
    }

    #[test]
    fn non_minimal_inputs_are_rejected() {
        let d = w(3, "a,b,c");
        let padded = {
            let mut p = Dfa::new(4, d.alphabet().clone(), 0, [2]).unwrap();
            for letter in d.alphabet().clone().iter() {
                for q in 0..3 {
                    p.set_transition(q, letter, d.step(q, letter).unwrap())
                        .unwrap();
                }
                p.set_transition(3, letter, 3).unwrap();
            }
            p
        };
        assert_eq!(atom(&padded, AtomIndex::empty()), Err(Error::NotMinimal));
    }

    #[test]
    fn arbitrary_languages_stay_under_the_formula() {
        let mut rng = crate::test_support::XorShift::new(0xa705);
        for _ in 0..25 {
            let d = crate::test_support::random_complete_dfa(&mut rng, 5, 3).minimize();
            let report = atoms_report(&d).unwrap();
            for row in &report.rows {
                if let Some(c) = row.complexity {
                    assert!(
                        c as u64 <= row.formula,
                        "S={} complexity {c} beats the formula {}",
                        row.subset,
                        row.formula
                    );
                }
            }
        }
    }

    #[test]
    fn sweep_guard() {
        let d = w(7, "a,b,c");
        assert!(matches!(
            atoms_report(&d),
            Err(Error::AtomSweepRefused { got: 7, limit: 6 })
        ));
    }
}
