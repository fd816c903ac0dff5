//! Reversal, star, product, and boolean operations, built the way their
//! complexity proofs build them: an epsilon-free NFA (or direct product),
//! then the subset construction, then minimization.

use std::fmt;

use crate::alphabet::Alphabet;
use crate::dfa::{Dfa, State};
use crate::error::{letters_display, Error, Result};
use crate::nfa::Nfa;

/// A binary boolean operation as a truth table over
/// (in first language, in second language).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct BoolOp {
    /// indexed by `(a as usize) << 1 | b as usize`
    table: [bool; 4],
    name: &'static str,
}

impl BoolOp {
    pub const UNION: BoolOp = BoolOp {
        table: [false, true, true, true],
        name: "union",
    };
    pub const INTERSECTION: BoolOp = BoolOp {
        table: [false, false, false, true],
        name: "intersection",
    };
    pub const DIFFERENCE: BoolOp = BoolOp {
        table: [false, false, true, false],
        name: "difference",
    };
    pub const SYMMETRIC_DIFFERENCE: BoolOp = BoolOp {
        table: [false, true, true, false],
        name: "symmetric-difference",
    };

    /// The four named proper operations.
    pub const PROPER: [BoolOp; 4] = [
        BoolOp::UNION,
        BoolOp::INTERSECTION,
        BoolOp::DIFFERENCE,
        BoolOp::SYMMETRIC_DIFFERENCE,
    ];

    pub fn custom(table: [bool; 4]) -> BoolOp {
        BoolOp {
            table,
            name: "custom",
        }
    }

    pub fn apply(self, a: bool, b: bool) -> bool {
        self.table[(a as usize) << 1 | b as usize]
    }

    /// Proper means the table depends on both arguments.
    pub fn is_proper(self) -> bool {
        let depends_first = (0..2).any(|b| self.table[b] != self.table[2 | b]);
        let depends_second = (0..2).any(|a| self.table[a << 1] != self.table[a << 1 | 1]);
        depends_first && depends_second
    }

    pub fn name(self) -> &'static str {
        self.name
    }
}

impl fmt::Display for BoolOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}

/// Restricted operations require identical operand alphabets; unrestricted
/// operations work over the union alphabet.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Mode {
    Restricted,
    Unrestricted,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Restricted => write!(f, "restricted"),
            Mode::Unrestricted => write!(f, "unrestricted"),
        }
    }
}

/// A minimal result automaton together with construction statistics.
#[derive(Clone, Debug)]
pub struct OpResult {
    /// Minimal DFA for the operation's result.
    pub result: Dfa,
    /// Size of the intermediate automaton before minimization (subset count,
    /// or reachable product size for boolean operations).
    pub raw_states: usize,
    pub construction: String,
    /// Regular-language upper bound for this operation at the operand
    /// complexities; saturating at `u128::MAX`.
    pub bound: u128,
}

impl OpResult {
    pub fn complexity(&self) -> usize {
        self.result.state_count()
    }

    /// False would contradict the corresponding upper-bound theorem (or
    /// reveal a construction bug); reported rather than fatal.
    pub fn within_bound(&self) -> bool {
        (self.complexity() as u128) <= self.bound
    }

    fn new(result: Dfa, raw_states: usize, construction: String, bound: u128) -> OpResult {
        let r = OpResult {
            result,
            raw_states,
            construction,
            bound,
        };
        debug_assert!(r.complexity() <= r.raw_states);
        r
    }
}

fn pow2(e: usize) -> u128 {
    if e >= 127 {
        u128::MAX
    } else {
        1u128 << e
    }
}

/// The reversal NFA: transitions flipped, the finals become the initial set,
/// the old initial becomes the single final state.
pub fn reverse_nfa(d: &Dfa) -> Result<Nfa> {
    if !d.is_complete() {
        return Err(Error::NotComplete);
    }
    let mut nfa = Nfa::new(
        d.state_count(),
        d.alphabet().clone(),
        d.finals().iter().copied(),
        [d.initial()],
    )?;
    for letter in d.alphabet().clone().iter() {
        for q in 0..d.state_count() {
            let t = d.step(q, letter).expect("complete");
            nfa.add_transition(t, letter, q)?;
        }
    }
    Ok(nfa)
}

/// Minimal DFA of the reversed language.
pub fn reverse(d: &Dfa) -> Result<OpResult> {
    let det = reverse_nfa(d)?.determinize()?;
    let bound = pow2(d.complexity());
    Ok(OpResult::new(
        det.minimize(),
        det.state_count(),
        "reverse".into(),
        bound,
    ))
}

/// Minimal DFA of the Kleene star.
///
/// The epsilon-free NFA adds one new initial-and-final state `s` that copies
/// the initial state's outgoing transitions; every transition into a final
/// state gets a twin into the old initial state. `s` is added even when the
/// initial state is already final.
pub fn star(d: &Dfa) -> Result<OpResult> {
    if !d.is_complete() {
        return Err(Error::NotComplete);
    }
    let n = d.state_count();
    let s = n;
    let mut nfa = Nfa::new(
        n + 1,
        d.alphabet().clone(),
        [s],
        d.finals().iter().copied().chain([s]),
    )?;
    for letter in d.alphabet().clone().iter() {
        for q in 0..n {
            let t = d.step(q, letter).expect("complete");
            nfa.add_transition(q, letter, t)?;
            if d.is_final(t) {
                nfa.add_transition(q, letter, d.initial())?;
            }
        }
        // s duplicates the initial state's transitions, twins included
        let copies: Vec<State> = nfa
            .successors(d.initial(), letter)
            .expect("letter in alphabet")
            .iter()
            .copied()
            .collect();
        for t in copies {
            nfa.add_transition(s, letter, t)?;
        }
    }
    let det = nfa.determinize()?;
    let m = d.complexity();
    let bound = if m == 1 {
        2
    } else {
        pow2(m - 1).saturating_add(pow2(m - 2))
    };
    Ok(OpResult::new(
        det.minimize(),
        det.state_count(),
        "star".into(),
        bound,
    ))
}

/// Minimal DFA of the product (concatenation) of two languages.
///
/// Epsilon-free NFA on the disjoint union: the first automaton's finals turn
/// non-final, every transition into one of them gets a twin into the second
/// automaton's initial state, and that state joins the initial set when the
/// first automaton accepts the empty word. In unrestricted mode, letters
/// missing from one operand's alphabet simply have no transitions in that
/// component.
pub fn concat(d1: &Dfa, d2: &Dfa, mode: Mode) -> Result<OpResult> {
    let over = joint_alphabet(d1, d2, mode)?;
    let m = d1.state_count();
    let offset = m;
    let mut initials = vec![d1.initial()];
    if d1.is_final(d1.initial()) {
        initials.push(offset + d2.initial());
    }
    let mut nfa = Nfa::new(
        m + d2.state_count(),
        over.clone(),
        initials,
        d2.finals().iter().map(|&q| offset + q),
    )?;
    for letter in over.iter() {
        for q in 0..m {
            if let Some(t) = d1.step(q, letter) {
                nfa.add_transition(q, letter, t)?;
                if d1.is_final(t) {
                    nfa.add_transition(q, letter, offset + d2.initial())?;
                }
            }
        }
        for q in 0..d2.state_count() {
            if let Some(t) = d2.step(q, letter) {
                nfa.add_transition(offset + q, letter, offset + t)?;
            }
        }
    }
    let det = nfa.determinize()?;
    let (km, kn) = (d1.complexity(), d2.complexity());
    let bound = match mode {
        Mode::Restricted => pow2(kn)
            .saturating_mul(km.saturating_sub(1) as u128)
            .saturating_add(pow2(kn.saturating_sub(1))),
        Mode::Unrestricted => pow2(kn)
            .saturating_mul(km as u128)
            .saturating_add(pow2(kn.saturating_sub(1))),
    };
    Ok(OpResult::new(
        det.minimize(),
        det.state_count(),
        format!("concat[{mode}]"),
        bound,
    ))
}

/// Minimal DFA of a binary boolean operation via the direct product of the
/// completed operands, reachable part only.
pub fn boolean(d1: &Dfa, d2: &Dfa, op: BoolOp, mode: Mode) -> Result<OpResult> {
    let over = joint_alphabet(d1, d2, mode)?;
    let c1 = d1.complete(&over)?;
    let c2 = d2.complete(&over)?;
    let n2 = c2.state_count();

    let mut index = vec![usize::MAX; c1.state_count() * n2];
    let mut pairs: Vec<(State, State)> = vec![(c1.initial(), c2.initial())];
    index[c1.initial() * n2 + c2.initial()] = 0;
    let mut columns: Vec<Vec<Option<State>>> = vec![Vec::new(); over.len()];
    let mut head = 0;
    while head < pairs.len() {
        let (p, q) = pairs[head];
        for (li, column) in columns.iter_mut().enumerate() {
            let tp = c1.step_by_index(p, li).expect("completed");
            let tq = c2.step_by_index(q, li).expect("completed");
            let slot = tp * n2 + tq;
            if index[slot] == usize::MAX {
                index[slot] = pairs.len();
                pairs.push((tp, tq));
            }
            column.push(Some(index[slot]));
        }
        head += 1;
    }
    let finals = pairs
        .iter()
        .enumerate()
        .filter(|(_, &(p, q))| op.apply(c1.is_final(p), c2.is_final(q)))
        .map(|(i, _)| i)
        .collect();
    let product = Dfa::raw_parts(pairs.len(), over, columns, 0, finals);
    let (km, kn) = (d1.complexity() as u128, d2.complexity() as u128);
    let bound = match mode {
        Mode::Restricted => km * kn,
        Mode::Unrestricted => (km + 1) * (kn + 1),
    };
    Ok(OpResult::new(
        product.minimize(),
        product.state_count(),
        format!("{op}[{mode}]"),
        bound,
    ))
}

fn joint_alphabet(d1: &Dfa, d2: &Dfa, mode: Mode) -> Result<Alphabet> {
    match mode {
        Mode::Restricted => {
            if d1.alphabet() != d2.alphabet() {
                return Err(Error::AlphabetMismatch {
                    left: letters_display(d1.alphabet().iter()),
                    right: letters_display(d2.alphabet().iter()),
                });
            }
            Ok(d1.alphabet().clone())
        }
        Mode::Unrestricted => Ok(d1.alphabet().union(d2.alphabet())),
    }
}
