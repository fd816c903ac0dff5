//! Reversal complexity and atom count of the ternary witness: both 2^n.
//!
//! ```bash
//! cargo run --release --example reversal
//! ```

use ufc::atoms::atom_count;
use ufc::ops::reverse;
use ufc::witness::{make_witness, DialectSpec};

fn main() {
    let spec: DialectSpec = "a,b,c".parse().unwrap();
    println!("n    reversal   raw subsets   atoms   2^n");
    for n in 3..=6 {
        let d = make_witness(n, &spec).unwrap();
        let rev = reverse(&d).unwrap();
        let atoms = atom_count(&d).unwrap();
        println!(
            "{n}    {:<10} {:<13} {:<7} {}",
            rev.complexity(),
            rev.raw_states,
            atoms,
            1 << n
        );
    }
    for n in 7..=8 {
        let d = make_witness(n, &spec).unwrap();
        let rev = reverse(&d).unwrap();
        println!(
            "{n}    {:<10} {:<13} (atoms skipped)   {}",
            rev.complexity(),
            rev.raw_states,
            1 << n
        );
    }
}
