//! The witness family of one-cycle-free-path DFAs and its dialects.
//!
//! For n ≥ 3 the base automaton has states 0..n-1, initial state 0, final
//! state n-1, and four letter roles:
//!
//! * role a: the cycle (1,…,n-1), fixing 0
//! * role b: the transposition (0,1)
//! * role c: the unary send (1→0)
//! * role d: the identity
//!
//! A dialect assigns a concrete letter to each role or deletes it, written
//! the way the literature does: `a,b,-,c` deletes role c and lets letter `c`
//! play role d.

use std::fmt;
use std::str::FromStr;

use crate::alphabet::{Alphabet, Letter};
use crate::dfa::{Dfa, State};
use crate::error::{Error, Result};
use crate::transform::Transformation;

pub const ROLE_COUNT: usize = 4;

/// Letter assignment for the four roles; `None` means the role is deleted.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DialectSpec {
    slots: [Option<Letter>; ROLE_COUNT],
}

impl DialectSpec {
    pub fn new(slots: [Option<Letter>; ROLE_COUNT]) -> Result<DialectSpec> {
        let assigned: Vec<Letter> = slots.iter().flatten().copied().collect();
        if assigned.is_empty() {
            return Err(Error::Dialect("at least one role must be assigned".into()));
        }
        for (i, a) in assigned.iter().enumerate() {
            if assigned[..i].contains(a) {
                return Err(Error::Dialect(format!("letter '{a}' assigned twice")));
            }
        }
        Ok(DialectSpec { slots })
    }

    pub fn slots(&self) -> &[Option<Letter>; ROLE_COUNT] {
        &self.slots
    }

    /// The assigned letters in alphabet order.
    pub fn alphabet(&self) -> Alphabet {
        Alphabet::from_unordered(self.slots.iter().flatten().copied())
            .expect("DialectSpec letters are distinct")
    }
}

impl FromStr for DialectSpec {
    type Err = Error;

    /// Parses the `a,b,-,c` notation. Up to four comma-separated slots, each
    /// a single character or `-` for a deleted role; missing trailing slots
    /// count as deleted, so `a,b` is the two-letter dialect.
    fn from_str(s: &str) -> Result<DialectSpec> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() > ROLE_COUNT {
            return Err(Error::Dialect(format!(
                "expected at most {ROLE_COUNT} slots, got {}",
                parts.len()
            )));
        }
        let mut slots = [None; ROLE_COUNT];
        for (i, part) in parts.iter().enumerate() {
            slots[i] = match *part {
                "-" | "" => None,
                one => {
                    let mut chars = one.chars();
                    let c = chars.next().expect("non-empty");
                    if chars.next().is_some() {
                        return Err(Error::Dialect(format!("slot '{one}' is not one letter")));
                    }
                    Some(Letter::new(c))
                }
            };
        }
        DialectSpec::new(slots)
    }
}

impl fmt::Display for DialectSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self
            .slots
            .iter()
            .rposition(Option::is_some)
            .expect("at least one role assigned");
        let rendered: Vec<String> = self.slots[..=last]
            .iter()
            .map(|slot| slot.map_or("-".to_string(), |l| l.to_string()))
            .collect();
        write!(f, "{}", rendered.join(","))
    }
}

/// The transformation each role induces on `0..n-1`.
pub fn role_transformations(n: usize) -> Result<[Transformation; ROLE_COUNT]> {
    if n < 3 {
        return Err(Error::WitnessTooSmall(n));
    }
    let cycle: Vec<State> = (1..n).collect();
    Ok([
        Transformation::k_cycle(n, &cycle)?,
        Transformation::k_cycle(n, &[0, 1])?,
        Transformation::send(n, 1, 0)?,
        Transformation::identity(n),
    ])
}

/// Builds the n-state witness for a dialect. Deleted roles contribute no
/// letter; the automaton is complete over its own alphabet because every
/// remaining role is a total transformation.
pub fn make_witness(n: usize, dialect: &DialectSpec) -> Result<Dfa> {
    let roles = role_transformations(n)?;
    let mut d = Dfa::new(n, dialect.alphabet(), 0, [n - 1])?;
    for (role, slot) in dialect.slots().iter().enumerate() {
        if let Some(letter) = slot {
            let images: Vec<State> = (0..n).map(|q| roles[role].apply(q)).collect();
            d.set_column(*letter, &images)?;
        }
    }
    Ok(d)
}

/// The two dialects used for unrestricted boolean operations: the m-state
/// automaton over {a,b,c} with c as the identity, and the n-state automaton
/// over {a,b,d} with a and b exchanged and d as the identity.
pub fn boolean_witness_pair(m: usize, n: usize) -> Result<(Dfa, Dfa)> {
    let first = make_witness(m, &"a,b,-,c".parse()?)?;
    let second = make_witness(n, &"b,a,-,d".parse()?)?;
    Ok((first, second))
}

/// Reasons an automaton is not a one-cycle-free-path DFA.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum OcfpViolation {
    /// Exactly one final state is required.
    FinalCount(usize),
    /// This state cannot reach the final state at all.
    CannotReachFinal(State),
    /// At least two distinct cycle-free paths lead from this state to the
    /// final state.
    MultipleSimplePaths(State),
}

impl fmt::Display for OcfpViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OcfpViolation::FinalCount(k) => write!(f, "{k} final states (need exactly 1)"),
            OcfpViolation::CannotReachFinal(q) => {
                write!(f, "state {q} cannot reach the final state")
            }
            OcfpViolation::MultipleSimplePaths(q) => {
                write!(f, "two simple paths from {q} to the final state")
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OcfpReport {
    pub violations: Vec<OcfpViolation>,
}

impl OcfpReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for OcfpReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "pass");
        }
        let rendered: Vec<String> = self.violations.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", rendered.join("; "))
    }
}

/// Checks the one-cycle-free-path property: one final state, and from every
/// state exactly one simple path (transitions with no repeated state) to it.
///
/// Paths are counted by exhaustive depth-first enumeration with early exit
/// once a second path is found; parallel transitions between the same pair
/// of states count as distinct paths.
pub fn ocfp_check(d: &Dfa) -> OcfpReport {
    let mut violations = Vec::new();
    if d.finals().len() != 1 {
        violations.push(OcfpViolation::FinalCount(d.finals().len()));
        return OcfpReport { violations };
    }
    let target = *d.finals().iter().next().expect("one final");
    let n = d.state_count();
    for q in 0..n {
        let mut on_path = vec![false; n];
        let count = count_simple_paths(d, q, target, &mut on_path, 2);
        match count {
            0 => violations.push(OcfpViolation::CannotReachFinal(q)),
            1 => {}
            _ => violations.push(OcfpViolation::MultipleSimplePaths(q)),
        }
    }
    OcfpReport { violations }
}

fn count_simple_paths(
    d: &Dfa,
    from: State,
    target: State,
    on_path: &mut Vec<bool>,
    limit: usize,
) -> usize {
    if from == target {
        return 1; // the empty path; extensions would revisit the target
    }
    on_path[from] = true;
    let mut found = 0;
    for li in 0..d.alphabet().len() {
        if let Some(t) = d.step_by_index(from, li) {
            if on_path[t] {
                continue;
            }
            found += count_simple_paths(d, t, target, on_path, limit - found);
            if found >= limit {
                break;
            }
        }
    }
    on_path[from] = false;
    found
}
