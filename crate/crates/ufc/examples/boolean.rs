//! Boolean operations on witness dialects: mn in the restricted case, and
//! the unrestricted values on the identity-letter pair, measured over each
//! result's own language alphabet. The (3,3) cells are genuinely smaller:
//! the two permutation actions lock signs and reach only part of the
//! product.
//!
//! ```bash
//! cargo run --release --example boolean
//! ```

use ufc::ops::{boolean, BoolOp, Mode};
use ufc::witness::{boolean_witness_pair, make_witness, DialectSpec};

fn main() {
    let ab: DialectSpec = "a,b".parse().unwrap();
    let ba: DialectSpec = "b,a".parse().unwrap();
    println!("restricted, L_m(a,b) vs L_n(b,a):");
    println!("m  n   union  inter  diff  symdiff  mn");
    for m in 3..=5 {
        for n in 3..=5 {
            let d1 = make_witness(m, &ab).unwrap();
            let d2 = make_witness(n, &ba).unwrap();
            let values: Vec<usize> = BoolOp::PROPER
                .iter()
                .map(|&op| {
                    boolean(&d1, &d2, op, Mode::Restricted)
                        .unwrap()
                        .complexity()
                })
                .collect();
            println!(
                "{m}  {n}   {:<6} {:<6} {:<5} {:<8} {}",
                values[0],
                values[1],
                values[2],
                values[3],
                m * n
            );
        }
    }

    println!("\nunrestricted, L_m(a,b,-,c) vs L_n(b,a,-,d), own-alphabet complexity:");
    println!("m  n   union ((m+1)(n+1))   inter (mn)   n-minuend diff (mn+n)");
    for m in 3..=5 {
        for n in 3..=5 {
            let (dm, dn) = boolean_witness_pair(m, n).unwrap();
            let kappa = |first: &ufc::Dfa, second: &ufc::Dfa, op| {
                boolean(first, second, op, Mode::Unrestricted)
                    .unwrap()
                    .result
                    .language_complexity()
            };
            let union = format!("{} ({})", kappa(&dm, &dn, BoolOp::UNION), (m + 1) * (n + 1));
            let inter = format!("{} ({})", kappa(&dm, &dn, BoolOp::INTERSECTION), m * n);
            let diff = format!("{} ({})", kappa(&dn, &dm, BoolOp::DIFFERENCE), m * n + n);
            println!("{m}  {n}   {union:<20} {inter:<12} {diff}");
        }
    }
}
