//! Quotient complexities of the binary witness: every quotient of L_n(a,b)
//! has complexity n.
//!
//! ```bash
//! cargo run --example quotients
//! ```

use ufc::witness::{make_witness, DialectSpec};

fn main() {
    let spec: DialectSpec = "a,b".parse().unwrap();
    for n in 3..=10 {
        let d = make_witness(n, &spec).unwrap();
        let complexities = d.quotient_complexities().unwrap();
        println!("L_{n}(a,b): {complexities:?}");
    }
}
