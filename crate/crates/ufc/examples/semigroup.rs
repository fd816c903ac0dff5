//! Transition-semigroup sizes of the ternary witness: n^n with three
//! letters, strictly less with any two.
//!
//! ```bash
//! cargo run --release --example semigroup
//! ```

use ufc::transform::{letter_transformations, semigroup_closure, DEFAULT_CLOSURE_CAP};
use ufc::witness::{make_witness, DialectSpec};

fn main() {
    println!("n    |T(L_n(a,b,c))|   n^n");
    for n in 3..=6 {
        let spec: DialectSpec = "a,b,c".parse().unwrap();
        let d = make_witness(n, &spec).unwrap();
        let gens = letter_transformations(&d).unwrap();
        let report = semigroup_closure(&gens, DEFAULT_CLOSURE_CAP).unwrap();
        println!("{n}    {:<16} {}", report.size, n.pow(n as u32));
    }

    println!("\ntwo-letter generator subsets fall short:");
    for n in [3, 4] {
        let spec: DialectSpec = "a,b,c".parse().unwrap();
        let d = make_witness(n, &spec).unwrap();
        let gens = letter_transformations(&d).unwrap();
        for (label, i, j) in [("a,b", 0, 1), ("a,c", 0, 2), ("b,c", 1, 2)] {
            let sub = [gens[i].clone(), gens[j].clone()];
            let report = semigroup_closure(&sub, DEFAULT_CLOSURE_CAP).unwrap();
            println!("  n={n} {{{label}}}: {} < {}", report.size, n.pow(n as u32));
        }
    }
}
