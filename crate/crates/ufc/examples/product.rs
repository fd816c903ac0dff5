//! Product (concatenation) complexities on the ternary witness, restricted
//! and unrestricted.
//!
//! ```bash
//! cargo run --release --example product
//! ```

use ufc::ops::{concat, Mode};
use ufc::witness::{make_witness, DialectSpec};

fn main() {
    let abc: DialectSpec = "a,b,c".parse().unwrap();
    let abcd: DialectSpec = "a,b,c,d".parse().unwrap();
    println!("m  n   restricted  (m-1)2^n+2^(n-1)   unrestricted  m*2^n+2^(n-1)");
    for m in 3..=6 {
        for n in 3..=6 {
            let d1 = make_witness(m, &abc).unwrap();
            let d2 = make_witness(n, &abc).unwrap();
            let restricted = concat(&d1, &d2, Mode::Restricted).unwrap();
            let d2u = make_witness(n, &abcd).unwrap();
            let unrestricted = concat(&d1, &d2u, Mode::Unrestricted).unwrap();
            println!(
                "{m}  {n}   {:<11} {:<18} {:<13} {}",
                restricted.complexity(),
                (m - 1) * (1 << n) + (1 << (n - 1)),
                unrestricted.complexity(),
                m * (1 << n) + (1 << (n - 1)),
            );
        }
    }
}
