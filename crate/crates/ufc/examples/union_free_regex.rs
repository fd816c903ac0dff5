//! The union-free expression for the witness language: build the expression
//! with unions, eliminate them, and check both against the automaton.
//!
//! ```bash
//! cargo run --example union_free_regex
//! ```

use ufc::equiv::shortest_difference;
use ufc::regex::{regex_to_nfa, render, union_free_regex, witness_expression, UnionStyle};
use ufc::witness::{make_witness, DialectSpec};

fn main() {
    let spec: DialectSpec = "a,b,c,d".parse().unwrap();
    for n in 3..=5 {
        let with_unions = witness_expression(n).unwrap();
        let eliminated = union_free_regex(n).unwrap();
        println!("n = {n}");
        println!("  with unions ({} unions):", with_unions.union_count());
        println!("    {}", render(&with_unions, UnionStyle::Ascii));
        println!("  union-free ({} unions):", eliminated.union_count());
        println!("    {}", render(&eliminated, UnionStyle::Ascii));
        let automaton = regex_to_nfa(&eliminated).determinize().unwrap();
        let witness = make_witness(n, &spec).unwrap();
        match shortest_difference(&automaton, &witness) {
            None => println!("  equivalent to L_{n}(a,b,c,d): yes"),
            Some(w) => println!("  NOT equivalent, differs on: {w}"),
        }
        println!();
    }
}
