//! The automaton interchange format: JSON with fixed field names.
//!
//! ```text
//! {"kind":"dfa","states":3,"alphabet":["a","b"],"initial":0,"finals":[2],
//!  "transitions":{"a":[0,2,1],"b":[1,0,2]}}
//! ```
//!
//! A DFA column holds one target per state, `-1` for an absent transition.
//! The NFA variant uses `"initials":[..]` and per-state target lists:
//! `"transitions":{"a":[[1,2],[],[0]]}`. Values round-trip exactly.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::alphabet::{Alphabet, Letter};
use crate::dfa::{Dfa, State};
use crate::error::{Error, Result};
use crate::nfa::Nfa;

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", deny_unknown_fields)]
enum FileAutomaton {
    #[serde(rename = "dfa")]
    Dfa {
        states: usize,
        alphabet: Vec<String>,
        initial: usize,
        finals: Vec<usize>,
        transitions: BTreeMap<String, Vec<i64>>,
    },
    #[serde(rename = "nfa")]
    Nfa {
        states: usize,
        alphabet: Vec<String>,
        initials: Vec<usize>,
        finals: Vec<usize>,
        transitions: BTreeMap<String, Vec<Vec<usize>>>,
    },
}

/// Either kind of automaton, as read from a file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Automaton {
    Dfa(Dfa),
    Nfa(Nfa),
}

impl Automaton {
    /// The DFA view: NFAs are determinized.
    pub fn into_dfa(self) -> Result<Dfa> {
        match self {
            Automaton::Dfa(d) => Ok(d),
            Automaton::Nfa(n) => n.determinize(),
        }
    }
}

pub fn dfa_to_json(d: &Dfa) -> String {
    let transitions = d
        .alphabet()
        .iter()
        .map(|l| {
            let column = (0..d.state_count())
                .map(|q| d.step(q, l).map_or(-1, |t| t as i64))
                .collect();
            (l.to_string(), column)
        })
        .collect();
    let file = FileAutomaton::Dfa {
        states: d.state_count(),
        alphabet: d.alphabet().iter().map(|l| l.to_string()).collect(),
        initial: d.initial(),
        finals: d.finals().iter().copied().collect(),
        transitions,
    };
    serde_json::to_string(&file).expect("serializable")
}

pub fn nfa_to_json(n: &Nfa) -> String {
    let transitions = n
        .alphabet()
        .iter()
        .map(|l| {
            let rows = (0..n.state_count())
                .map(|q| {
                    n.successors(q, l)
                        .map(|set| set.iter().copied().collect())
                        .unwrap_or_default()
                })
                .collect();
            (l.to_string(), rows)
        })
        .collect();
    let file = FileAutomaton::Nfa {
        states: n.state_count(),
        alphabet: n.alphabet().iter().map(|l| l.to_string()).collect(),
        initials: n.initials().iter().copied().collect(),
        finals: n.finals().iter().copied().collect(),
        transitions,
    };
    serde_json::to_string(&file).expect("serializable")
}

pub fn to_json(a: &Automaton) -> String {
    match a {
        Automaton::Dfa(d) => dfa_to_json(d),
        Automaton::Nfa(n) => nfa_to_json(n),
    }
}

pub fn automaton_from_json(text: &str) -> Result<Automaton> {
    let file: FileAutomaton = serde_json::from_str(text)?;
    match file {
        FileAutomaton::Dfa {
            states,
            alphabet,
            initial,
            finals,
            transitions,
        } => {
            let alphabet = parse_alphabet(&alphabet)?;
            check_transition_keys(&alphabet, transitions.keys())?;
            let mut dfa = Dfa::new(states, alphabet.clone(), initial, finals)?;
            for (key, column) in &transitions {
                let letter = Letter::new(key.chars().next().expect("validated"));
                if column.len() != states {
                    return Err(Error::Interchange(format!(
                        "transitions[\"{key}\"] has {} entries, expected {states}",
                        column.len()
                    )));
                }
                for (q, &target) in column.iter().enumerate() {
                    match target {
                        -1 => {}
                        t if t >= 0 && (t as usize) < states => {
                            dfa.set_transition(q, letter, t as State)?;
                        }
                        t => {
                            return Err(Error::Interchange(format!(
                                "transitions[\"{key}\"][{q}] = {t} out of range (states = {states})"
                            )))
                        }
                    }
                }
            }
            Ok(Automaton::Dfa(dfa))
        }
        FileAutomaton::Nfa {
            states,
            alphabet,
            initials,
            finals,
            transitions,
        } => {
            let alphabet = parse_alphabet(&alphabet)?;
            check_transition_keys(&alphabet, transitions.keys())?;
            let mut nfa = Nfa::new(states, alphabet.clone(), initials, finals)?;
            for (key, rows) in &transitions {
                let letter = Letter::new(key.chars().next().expect("validated"));
                if rows.len() != states {
                    return Err(Error::Interchange(format!(
                        "transitions[\"{key}\"] has {} rows, expected {states}",
                        rows.len()
                    )));
                }
                for (q, row) in rows.iter().enumerate() {
                    for &t in row {
                        if t >= states {
                            return Err(Error::Interchange(format!(
                                "transitions[\"{key}\"][{q}] mentions state {t} (states = {states})"
                            )));
                        }
                        nfa.add_transition(q, letter, t)?;
                    }
                }
            }
            Ok(Automaton::Nfa(nfa))
        }
    }
}

pub fn dfa_from_json(text: &str) -> Result<Dfa> {
    match automaton_from_json(text)? {
        Automaton::Dfa(d) => Ok(d),
        Automaton::Nfa(_) => Err(Error::Interchange(
            "expected kind \"dfa\", found \"nfa\"".into(),
        )),
    }
}

fn parse_alphabet(entries: &[String]) -> Result<Alphabet> {
    let mut letters = Vec::with_capacity(entries.len());
    for entry in entries {
        let mut chars = entry.chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) => letters.push(Letter::new(c)),
            _ => {
                return Err(Error::Interchange(format!(
                    "alphabet entry \"{entry}\" is not a single character"
                )))
            }
        }
    }
    Alphabet::new(letters)
}

fn check_transition_keys<'a>(
    alphabet: &Alphabet,
    keys: impl Iterator<Item = &'a String>,
) -> Result<()> {
    let keys: Vec<&String> = keys.collect();
    if keys.len() != alphabet.len() {
        return Err(Error::Interchange(format!(
            "transitions cover {} letters, alphabet has {}",
            keys.len(),
            alphabet.len()
        )));
    }
    for key in keys {
        let mut chars = key.chars();
        let ok = matches!((chars.next(), chars.next()),
            (Some(c), None) if alphabet.contains(Letter::new(c)));
        if !ok {
            return Err(Error::Interchange(format!(
                "transition key \"{key}\" is not an alphabet letter"
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::witness::{make_witness, DialectSpec};

    #[test]
    fn dfa_round_trip() {
        let spec: DialectSpec = "a,b,c,d".parse().unwrap();
        let d = make_witness(5, &spec).unwrap();
        let text = dfa_to_json(&d);
        assert_eq!(automaton_from_json(&text).unwrap(), Automaton::Dfa(d));
    }

    #[test]
    fn exact_shape() {
        let spec: DialectSpec = "a,b".parse().unwrap();
        let d = make_witness(3, &spec).unwrap();
        assert_eq!(
            dfa_to_json(&d),
            r#"{"kind":"dfa","states":3,"alphabet":["a","b"],"initial":0,"finals":[2],"transitions":{"a":[0,2,1],"b":[1,0,2]}}"#
        );
    }

    #[test]
    fn nfa_round_trip() {
        let spec: DialectSpec = "a,b,c".parse().unwrap();
        let d = make_witness(4, &spec).unwrap();
        let nfa = crate::ops::reverse_nfa(&d).unwrap();
        let text = nfa_to_json(&nfa);
        assert_eq!(automaton_from_json(&text).unwrap(), Automaton::Nfa(nfa));
    }

    #[test]
    fn partial_transitions_use_minus_one() {
        let json = r#"{"kind":"dfa","states":2,"alphabet":["a"],"initial":0,"finals":[1],"transitions":{"a":[1,-1]}}"#;
        let d = dfa_from_json(json).unwrap();
        assert!(!d.is_complete());
        assert_eq!(dfa_to_json(&d), json);
    }

    #[test]
    fn malformed_inputs_are_diagnosed() {
        let cases = [
            // out-of-range target
            r#"{"kind":"dfa","states":2,"alphabet":["a"],"initial":0,"finals":[],"transitions":{"a":[2,0]}}"#,
            // wrong column length
            r#"{"kind":"dfa","states":2,"alphabet":["a"],"initial":0,"finals":[],"transitions":{"a":[0]}}"#,
            // key not in alphabet
            r#"{"kind":"dfa","states":1,"alphabet":["a"],"initial":0,"finals":[],"transitions":{"b":[0]}}"#,
            // unordered alphabet
            r#"{"kind":"dfa","states":1,"alphabet":["b","a"],"initial":0,"finals":[],"transitions":{"a":[0],"b":[0]}}"#,
            // initial out of range
            r#"{"kind":"dfa","states":1,"alphabet":["a"],"initial":3,"finals":[],"transitions":{"a":[0]}}"#,
        ];
        for text in cases {
            assert!(automaton_from_json(text).is_err(), "{text}");
        }
        // syntax errors carry position info
        let err = automaton_from_json("{\"kind\":\"dfa\",").unwrap_err();
        assert!(matches!(err, Error::Json(_)));
    }
}
