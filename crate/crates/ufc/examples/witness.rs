//! Build witness automata and dialects, show their transition tables, and
//! check minimality and the one-cycle-free-path property.
//!
//! ```bash
//! cargo run --example witness
//! ```

use ufc::interchange::dfa_to_json;
use ufc::witness::{make_witness, ocfp_check, DialectSpec};

fn main() {
    for (n, dialect) in [(5, "a,b,c,d"), (4, "a,b"), (4, "b,a,-,d"), (4, "a,b,-,c")] {
        let spec: DialectSpec = dialect.parse().unwrap();
        let d = make_witness(n, &spec).unwrap();
        println!(
            "L_{n}({spec})  states: {}, alphabet: {}",
            d.state_count(),
            d.alphabet()
        );
        for letter in d.alphabet().clone().iter() {
            let row: Vec<String> = (0..d.state_count())
                .map(|q| d.step(q, letter).unwrap().to_string())
                .collect();
            println!("  {letter}: [{}]", row.join(" "));
        }
        println!(
            "  complexity: {}  minimal: {}  ocfp: {}",
            d.complexity(),
            if d.is_minimal() { "yes" } else { "no" },
            ocfp_check(&d)
        );
        println!("  interchange: {}", dfa_to_json(&d));
        println!();
    }
}
