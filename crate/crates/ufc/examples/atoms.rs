//! Per-subset atom complexities of the ternary witness against the closed
//! form.
//!
//! ```bash
//! cargo run --release --example atoms
//! ```

use ufc::atoms::atoms_report;
use ufc::witness::{make_witness, DialectSpec};

fn main() {
    let spec: DialectSpec = "a,b,c".parse().unwrap();
    for n in [3, 4] {
        let d = make_witness(n, &spec).unwrap();
        let report = atoms_report(&d).unwrap();
        println!("L_{n}(a,b,c): {} atoms", report.atom_count);
        println!("  S          complexity   formula   match");
        for row in &report.rows {
            println!(
                "  {:<10} {:<12} {:<9} {}",
                row.subset.to_string(),
                row.complexity.map_or("-".into(), |c| c.to_string()),
                row.formula,
                row.matches_formula.map_or("-".into(), |m| m.to_string()),
            );
        }
        println!();
    }
}
