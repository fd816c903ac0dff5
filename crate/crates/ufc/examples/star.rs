//! Star complexity of the binary witness: 2^(n-1) + 2^(n-2).
//!
//! ```bash
//! cargo run --release --example star
//! ```

use ufc::ops::star;
use ufc::witness::{make_witness, DialectSpec};

fn main() {
    let spec: DialectSpec = "a,b".parse().unwrap();
    println!("n    star   raw subsets   2^(n-1)+2^(n-2)");
    for n in 3..=10 {
        let d = make_witness(n, &spec).unwrap();
        let result = star(&d).unwrap();
        println!(
            "{n:<4} {:<6} {:<13} {}",
            result.complexity(),
            result.raw_states,
            (1 << (n - 1)) + (1 << (n - 2))
        );
    }
}
