//! Transformations of the state set, cycle notation, and transition
//! semigroups.
//!
//! Composition is written the way transition semigroups multiply: `q(st) =
//! (qs)t`, i.e. `s` acts first.

use std::collections::HashMap;
use std::fmt;

use crate::alphabet::Word;
use crate::dfa::{Dfa, State};
use crate::error::{Error, Result};

/// Default cap on semigroup closures (n = 7 at 823543 elements fits; n = 8
/// does not). Overridable wherever a cap parameter is taken.
pub const DEFAULT_CLOSURE_CAP: usize = 2_000_000;

/// A self-map of `{0,…,degree-1}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Transformation {
    images: Box<[u32]>,
}

impl Transformation {
    pub fn identity(degree: usize) -> Transformation {
        Transformation {
            images: (0..degree as u32).collect(),
        }
    }

    pub fn from_images(images: impl IntoIterator<Item = State>) -> Result<Transformation> {
        let images: Vec<u32> = images.into_iter().map(|q| q as u32).collect();
        let degree = images.len();
        if let Some(&bad) = images.iter().find(|&&q| q as usize >= degree) {
            return Err(Error::StateOutOfRange {
                state: bad as usize,
                count: degree,
            });
        }
        Ok(Transformation {
            images: images.into_boxed_slice(),
        })
    }

    /// The k-cycle `(q0,q1,…,qk-1)`, fixing everything else.
    pub fn k_cycle(degree: usize, cycle: &[State]) -> Result<Transformation> {
        let mut t = Transformation::identity(degree);
        for (i, &q) in cycle.iter().enumerate() {
            if q >= degree {
                return Err(Error::StateOutOfRange {
                    state: q,
                    count: degree,
                });
            }
            if cycle[..i].contains(&q) {
                return Err(Error::CycleNotation(format!("state {q} repeated in cycle")));
            }
        }
        for (i, &q) in cycle.iter().enumerate() {
            t.images[q] = cycle[(i + 1) % cycle.len()] as u32;
        }
        Ok(t)
    }

    /// The unary send `(p -> q)`, fixing everything else.
    pub fn send(degree: usize, p: State, q: State) -> Result<Transformation> {
        for s in [p, q] {
            if s >= degree {
                return Err(Error::StateOutOfRange {
                    state: s,
                    count: degree,
                });
            }
        }
        let mut t = Transformation::identity(degree);
        t.images[p] = q as u32;
        Ok(t)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, q: State) -> State {
        self.images[q] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = State> + '_ {
        self.images.iter().map(|&q| q as usize)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(q, &t)| q as u32 == t)
    }

    /// Number of distinct images.
    pub fn rank(&self) -> usize {
        let mut hit = vec![false; self.degree()];
        let mut count = 0;
        for &q in self.images.iter() {
            if !hit[q as usize] {
                hit[q as usize] = true;
                count += 1;
            }
        }
        count
    }

    pub fn is_permutation(&self) -> bool {
        self.rank() == self.degree()
    }

    /// `self` then `other`: `q(st) = (qs)t`.
    pub fn compose(&self, other: &Transformation) -> Result<Transformation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.compose_unchecked(other))
    }

    fn compose_unchecked(&self, other: &Transformation) -> Transformation {
        Transformation {
            images: self
                .images
                .iter()
                .map(|&mid| other.images[mid as usize])
                .collect(),
        }
    }
}

impl fmt::Display for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_cycles(self))
    }
}

/// Parses cycle notation at a fixed degree: a product of k-cycles
/// `(q0,q1,…)` and unary sends `(p->q)`, applied left to right; unmentioned
/// states are fixed; the empty string is the identity.
pub fn parse_cycles(spec: &str, degree: usize) -> Result<Transformation> {
    let mut result = Transformation::identity(degree);
    let mut rest = spec.trim();
    while !rest.is_empty() {
        if !rest.starts_with('(') {
            return Err(Error::CycleNotation(format!(
                "expected '(' at '{}'",
                truncate(rest)
            )));
        }
        let close = rest
            .find(')')
            .ok_or_else(|| Error::CycleNotation(format!("unclosed '(' at '{}'", truncate(rest))))?;
        let body = &rest[1..close];
        let factor = if let Some((p, q)) = body.split_once("->") {
            Transformation::send(degree, parse_state(p, degree)?, parse_state(q, degree)?)?
        } else {
            let states: Vec<State> = body
                .split(',')
                .map(|s| parse_state(s, degree))
                .collect::<Result<_>>()?;
            if states.len() < 2 {
                return Err(Error::CycleNotation(format!(
                    "cycle '({body})' needs at least two states"
                )));
            }
            Transformation::k_cycle(degree, &states)?
        };
        result = result.compose(&factor)?;
        rest = rest[close + 1..].trim_start();
    }
    Ok(result)
}

fn parse_state(text: &str, degree: usize) -> Result<State> {
    let q: State = text
        .trim()
        .parse()
        .map_err(|_| Error::CycleNotation(format!("'{}' is not a state", text.trim())))?;
    if q >= degree {
        return Err(Error::StateOutOfRange {
            state: q,
            count: degree,
        });
    }
    Ok(q)
}

fn truncate(s: &str) -> String {
    s.chars().take(16).collect()
}

/// Renders a transformation in cycle notation such that
/// `parse_cycles(format_cycles(t), t.degree()) == t`.
///
/// The permutation part (states on cycles of the functional graph) is
/// written as disjoint cycles sorted by least element; the remaining states
/// are written as unary sends, ordered so that each state is moved only
/// after its target has settled. Fixed points are omitted; the identity
/// renders as the empty string.
pub fn format_cycles(t: &Transformation) -> String {
    let n = t.degree();
    // states on cycles: iterate the functional graph n times
    let mut on_cycle = vec![false; n];
    {
        let mut reach: Vec<State> = (0..n).collect();
        for _ in 0..n {
            for q in reach.iter_mut() {
                *q = t.apply(*q);
            }
        }
        for &q in &reach {
            on_cycle[q] = true;
        }
    }
    let mut pieces: Vec<String> = Vec::new();
    let mut seen = vec![false; n];
    for start in 0..n {
        if !on_cycle[start] || seen[start] {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut q = t.apply(start);
        while q != start {
            seen[q] = true;
            cycle.push(q);
            q = t.apply(q);
        }
        if cycle.len() >= 2 {
            let body: Vec<String> = cycle.iter().map(|q| q.to_string()).collect();
            pieces.push(format!("({})", body.join(",")));
        }
    }
    // tree states, shallow first so later sends do not disturb earlier ones
    let mut depth = vec![0usize; n];
    for q in 0..n {
        if on_cycle[q] {
            continue;
        }
        let mut steps = 0;
        let mut cur = q;
        while !on_cycle[cur] {
            steps += 1;
            cur = t.apply(cur);
        }
        depth[q] = steps;
    }
    let mut tree: Vec<State> = (0..n).filter(|&q| !on_cycle[q]).collect();
    tree.sort_by_key(|&q| (depth[q], q));
    for q in tree {
        pieces.push(format!("({}->{})", q, t.apply(q)));
    }
    pieces.join("")
}

/// The transformation a word induces on the states of a complete DFA.
pub fn word_transformation(d: &Dfa, w: &Word) -> Result<Transformation> {
    if !d.is_complete() {
        return Err(Error::NotComplete);
    }
    let mut images: Vec<State> = (0..d.state_count()).collect();
    for &letter in w.letters() {
        if !d.alphabet().contains(letter) {
            return Err(Error::ForeignLetter(letter));
        }
        for q in images.iter_mut() {
            *q = d.step(*q, letter).expect("complete");
        }
    }
    Transformation::from_images(images)
}

/// The transformations the single letters induce, in alphabet order.
pub fn letter_transformations(d: &Dfa) -> Result<Vec<Transformation>> {
    d.alphabet()
        .iter()
        .map(|l| word_transformation(d, &Word::new([l])))
        .collect()
}

/// Outcome of a semigroup closure.
#[derive(Clone, Debug)]
pub struct ClosureReport {
    /// Number of elements found. Exact when `complete`; otherwise the count
    /// at the moment the cap was exceeded.
    pub size: usize,
    pub complete: bool,
    /// Elements in breadth-first discovery order (generators first, then
    /// products by word length, generator order fixed).
    pub elements: Vec<Transformation>,
}

/// Closes a generating set under composition, breadth-first by word length.
///
/// Generators stand for the length-1 words, so the identity is counted only
/// if some non-empty word induces it. Exceeding `cap` is a reported outcome,
/// not an error.
pub fn semigroup_closure(generators: &[Transformation], cap: usize) -> Result<ClosureReport> {
    if let Some(first) = generators.first() {
        for g in generators {
            if g.degree() != first.degree() {
                return Err(Error::DegreeMismatch(first.degree(), g.degree()));
            }
        }
    }
    let mut index: HashMap<Transformation, usize> = HashMap::new();
    let mut elements: Vec<Transformation> = Vec::new();
    for g in generators {
        if !index.contains_key(g) {
            index.insert(g.clone(), elements.len());
            elements.push(g.clone());
        }
        if elements.len() > cap {
            return Ok(ClosureReport {
                size: elements.len(),
                complete: false,
                elements,
            });
        }
    }
    let mut head = 0;
    while head < elements.len() {
        for g in generators {
            let product = elements[head].compose_unchecked(g);
            if !index.contains_key(&product) {
                index.insert(product.clone(), elements.len());
                elements.push(product);
                if elements.len() > cap {
                    return Ok(ClosureReport {
                        size: elements.len(),
                        complete: false,
                        elements,
                    });
                }
            }
        }
        head += 1;
    }
    Ok(ClosureReport {
        size: elements.len(),
        complete: true,
        elements,
    })
}

/// Size of the transition semigroup of a minimal complete DFA, which is
/// isomorphic to the syntactic semigroup of its language. Minimality is a
/// precondition because that identification needs it.
pub fn transition_semigroup_size(d: &Dfa, cap: usize) -> Result<ClosureReport> {
    if !d.is_complete() {
        return Err(Error::NotComplete);
    }
    if !d.is_minimal() {
        return Err(Error::NotMinimal);
    }
    semigroup_closure(&letter_transformations(d)?, cap)
}
