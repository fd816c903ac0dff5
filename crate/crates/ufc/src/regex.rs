//! Regular expressions, the union-free expression for the witness language,
//! and union elimination.
//!
//! Union elimination rests on the identity
//! `(E_1 ∪ E_2 ∪ … ∪ E_k)* = (E_1* E_2* ⋯ E_k*)*` for starred unions,
//! together with flattening of nested unions and distribution of
//! concatenation over union to surface unions directly under their
//! dominating star. A union that ends up under no star at all is not
//! eliminable this way.

use std::fmt;

use crate::alphabet::{Alphabet, Letter};
use crate::error::{Error, Result};
use crate::nfa::Nfa;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RegexNode {
    Empty,
    Epsilon,
    Letter(Letter),
    /// At least two children.
    Union(Vec<RegexNode>),
    /// At least two children.
    Concat(Vec<RegexNode>),
    Star(Box<RegexNode>),
}

impl RegexNode {
    pub fn letter(c: char) -> RegexNode {
        RegexNode::Letter(Letter::new(c))
    }

    /// Union of the children; a singleton list collapses to its element.
    pub fn union(mut children: Vec<RegexNode>) -> RegexNode {
        assert!(!children.is_empty(), "union of nothing");
        if children.len() == 1 {
            children.pop().unwrap()
        } else {
            RegexNode::Union(children)
        }
    }

    /// Concatenation of the children; a singleton list collapses.
    pub fn concat(mut children: Vec<RegexNode>) -> RegexNode {
        assert!(!children.is_empty(), "concatenation of nothing");
        if children.len() == 1 {
            children.pop().unwrap()
        } else {
            RegexNode::Concat(children)
        }
    }

    pub fn star(self) -> RegexNode {
        RegexNode::Star(Box::new(self))
    }

    pub fn nullable(&self) -> bool {
        match self {
            RegexNode::Empty | RegexNode::Letter(_) => false,
            RegexNode::Epsilon | RegexNode::Star(_) => true,
            RegexNode::Union(cs) => cs.iter().any(RegexNode::nullable),
            RegexNode::Concat(cs) => cs.iter().all(RegexNode::nullable),
        }
    }

    /// Letters that occur in the expression, in order.
    pub fn alphabet(&self) -> Alphabet {
        let mut letters = Vec::new();
        self.collect_letters(&mut letters);
        Alphabet::from_unordered({
            letters.sort();
            letters.dedup();
            letters
        })
        .expect("sorted and deduplicated")
    }

    fn collect_letters(&self, out: &mut Vec<Letter>) {
        match self {
            RegexNode::Empty | RegexNode::Epsilon => {}
            RegexNode::Letter(l) => out.push(*l),
            RegexNode::Union(cs) | RegexNode::Concat(cs) => {
                cs.iter().for_each(|c| c.collect_letters(out))
            }
            RegexNode::Star(c) => c.collect_letters(out),
        }
    }

    pub fn union_count(&self) -> usize {
        match self {
            RegexNode::Empty | RegexNode::Epsilon | RegexNode::Letter(_) => 0,
            RegexNode::Union(cs) => 1 + cs.iter().map(RegexNode::union_count).sum::<usize>(),
            RegexNode::Concat(cs) => cs.iter().map(RegexNode::union_count).sum(),
            RegexNode::Star(c) => c.union_count(),
        }
    }
}

/// How to print the union operator.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum UnionStyle {
    #[default]
    Unicode,
    Ascii,
}

/// Renders with minimal parentheses: star binds tightest, then
/// concatenation (juxtaposition), then union.
pub fn render(r: &RegexNode, style: UnionStyle) -> String {
    fn go(r: &RegexNode, style: UnionStyle, out: &mut String) {
        match r {
            RegexNode::Empty => out.push('∅'),
            RegexNode::Epsilon => out.push('ε'),
            RegexNode::Letter(l) => out.push(l.as_char()),
            RegexNode::Union(cs) => {
                for (i, c) in cs.iter().enumerate() {
                    if i > 0 {
                        out.push_str(match style {
                            UnionStyle::Unicode => "∪",
                            UnionStyle::Ascii => "|",
                        });
                    }
                    go(c, style, out);
                }
            }
            RegexNode::Concat(cs) => {
                for c in cs {
                    if matches!(c, RegexNode::Union(_)) {
                        out.push('(');
                        go(c, style, out);
                        out.push(')');
                    } else {
                        go(c, style, out);
                    }
                }
            }
            RegexNode::Star(c) => {
                if matches!(**c, RegexNode::Union(_) | RegexNode::Concat(_)) {
                    out.push('(');
                    go(c, style, out);
                    out.push(')');
                } else {
                    go(c, style, out);
                }
                out.push('*');
            }
        }
    }
    let mut out = String::new();
    go(r, style, &mut out);
    out
}

impl fmt::Display for RegexNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render(self, UnionStyle::Unicode))
    }
}

/// The expression for the witness language L_n over {a,b,c,d}, with unions:
/// a starred bracket of returns to the initial state, then one committed
/// climb `b (d ∪ E(b∪c∪d)*a)* E (b∪c∪d)*`, where `E = (a(b∪c∪d)*)^{n-2}`
/// spells the climb from state 1 to the final state.
pub fn witness_expression(n: usize) -> Result<RegexNode> {
    if n < 3 {
        return Err(Error::WitnessTooSmall(n));
    }
    let a = || RegexNode::letter('a');
    let b = || RegexNode::letter('b');
    let c = || RegexNode::letter('c');
    let d = || RegexNode::letter('d');
    let bcd = || RegexNode::union(vec![b(), c(), d()]).star();
    let climb = RegexNode::concat(
        (0..n - 2)
            .map(|_| RegexNode::concat(vec![a(), bcd()]))
            .collect(),
    );
    let wander = || {
        RegexNode::union(vec![
            d(),
            RegexNode::concat(vec![climb.clone(), bcd(), a()]),
        ])
        .star()
    };
    let bracket = RegexNode::union(vec![
        a(),
        c(),
        d(),
        RegexNode::concat(vec![b(), wander(), RegexNode::union(vec![b(), c()])]),
    ])
    .star();
    Ok(RegexNode::concat(vec![
        bracket,
        b(),
        wander(),
        climb,
        bcd(),
    ]))
}

/// The union-free expression for the witness language: the expression above
/// with every union eliminated.
pub fn union_free_regex(n: usize) -> Result<RegexNode> {
    eliminate_unions(&witness_expression(n)?)
}

/// Rewrites the expression into a union-free one with the same language.
///
/// Fails with [`Error::NotEliminable`] when some union is not dominated by
/// any star after flattening and distribution.
pub fn eliminate_unions(r: &RegexNode) -> Result<RegexNode> {
    let normalized = normalize(r);
    if normalized.union_count() > 0 {
        return Err(Error::NotEliminable);
    }
    Ok(normalized)
}

/// Bottom-up normal form: the result is union-free, or a single top-level
/// union of union-free branches.
fn normalize(r: &RegexNode) -> RegexNode {
    match r {
        RegexNode::Empty | RegexNode::Epsilon | RegexNode::Letter(_) => r.clone(),
        RegexNode::Star(child) => match normalize(child) {
            // (E1 ∪ … ∪ Ek)* = (E1* E2* … Ek*)*
            RegexNode::Union(branches) => RegexNode::concat(
                branches
                    .into_iter()
                    .map(RegexNode::star)
                    .collect::<Vec<_>>(),
            )
            .star(),
            other => other.star(),
        },
        RegexNode::Union(children) => {
            let mut flat = Vec::new();
            for child in children {
                match normalize(child) {
                    RegexNode::Union(inner) => flat.extend(inner),
                    other => flat.push(other),
                }
            }
            RegexNode::union(flat)
        }
        RegexNode::Concat(children) => {
            let normalized: Vec<RegexNode> = children.iter().map(normalize).collect();
            if !normalized.iter().any(|c| matches!(c, RegexNode::Union(_))) {
                return RegexNode::Concat(normalized);
            }
            // distribute concatenation over union
            let mut combos: Vec<Vec<RegexNode>> = vec![Vec::new()];
            for child in normalized {
                let options: Vec<RegexNode> = match child {
                    RegexNode::Union(branches) => branches,
                    other => vec![other],
                };
                let mut next = Vec::with_capacity(combos.len() * options.len());
                for combo in &combos {
                    for option in &options {
                        let mut extended = combo.clone();
                        extended.push(option.clone());
                        next.push(extended);
                    }
                }
                combos = next;
            }
            RegexNode::union(combos.into_iter().map(RegexNode::concat).collect())
        }
    }
}

/// Position (Glushkov) construction: an epsilon-free NFA with one state per
/// letter occurrence plus an initial state, which is final exactly when the
/// expression is nullable.
pub fn regex_to_nfa(r: &RegexNode) -> Nfa {
    struct Build {
        letters: Vec<Letter>,
        follow: Vec<Vec<usize>>,
    }
    struct Info {
        nullable: bool,
        first: Vec<usize>,
        last: Vec<usize>,
    }
    fn go(r: &RegexNode, b: &mut Build) -> Info {
        match r {
            RegexNode::Empty => Info {
                nullable: false,
                first: vec![],
                last: vec![],
            },
            RegexNode::Epsilon => Info {
                nullable: true,
                first: vec![],
                last: vec![],
            },
            RegexNode::Letter(l) => {
                let p = b.letters.len();
                b.letters.push(*l);
                b.follow.push(Vec::new());
                Info {
                    nullable: false,
                    first: vec![p],
                    last: vec![p],
                }
            }
            RegexNode::Union(cs) => {
                let mut info = Info {
                    nullable: false,
                    first: vec![],
                    last: vec![],
                };
                for c in cs {
                    let part = go(c, b);
                    info.nullable |= part.nullable;
                    info.first.extend(part.first);
                    info.last.extend(part.last);
                }
                info
            }
            RegexNode::Concat(cs) => {
                let mut acc = Info {
                    nullable: true,
                    first: vec![],
                    last: vec![],
                };
                for c in cs {
                    let part = go(c, b);
                    for &p in &acc.last {
                        b.follow[p].extend(part.first.iter().copied());
                    }
                    if acc.nullable {
                        acc.first.extend(part.first.iter().copied());
                    }
                    if part.nullable {
                        acc.last.extend(part.last.iter().copied());
                    } else {
                        acc.last = part.last;
                    }
                    acc.nullable &= part.nullable;
                }
                acc
            }
            RegexNode::Star(c) => {
                let part = go(c, b);
                for &p in &part.last {
                    b.follow[p].extend(part.first.iter().copied());
                }
                Info {
                    nullable: true,
                    first: part.first,
                    last: part.last,
                }
            }
        }
    }

    let mut build = Build {
        letters: Vec::new(),
        follow: Vec::new(),
    };
    let info = go(r, &mut build);
    let positions = build.letters.len();
    let alphabet = r.alphabet();
    let mut finals: Vec<usize> = info.last.iter().map(|&p| p + 1).collect();
    if info.nullable {
        finals.push(0);
    }
    let mut nfa =
        Nfa::new(positions + 1, alphabet, [0], finals).expect("at least the initial state");
    for &p in &info.first {
        nfa.add_transition(0, build.letters[p], p + 1)
            .expect("letter present");
    }
    for (p, follows) in build.follow.iter().enumerate() {
        for &q in follows {
            nfa.add_transition(p + 1, build.letters[q], q + 1)
                .expect("letter present");
        }
    }
    nfa
}
