//! The one-cycle-free-path check: witnesses pass; small mutations fail.
//!
//! ```bash
//! cargo run --example ocfp
//! ```

use ufc::alphabet::{Alphabet, Letter};
use ufc::dfa::Dfa;
use ufc::witness::{make_witness, ocfp_check, DialectSpec};

fn main() {
    let spec: DialectSpec = "a,b,c,d".parse().unwrap();
    for n in 3..=8 {
        let d = make_witness(n, &spec).unwrap();
        println!("L_{n}(a,b,c,d): {}", ocfp_check(&d));
    }

    // an extra accepting state breaks the single-final requirement
    let base = make_witness(3, &"a,b,c".parse().unwrap()).unwrap();
    let mut two_finals = Dfa::new(3, base.alphabet().clone(), 0, [1, 2]).unwrap();
    for l in base.alphabet().clone().iter() {
        for q in 0..3 {
            two_finals
                .set_transition(q, l, base.step(q, l).unwrap())
                .unwrap();
        }
    }
    println!("two finals: {}", ocfp_check(&two_finals));

    // a shortcut edge creates a second simple path to the final state
    let mut shortcut = Dfa::new(3, Alphabet::from_chars("abce").unwrap(), 0, [2]).unwrap();
    for l in base.alphabet().clone().iter() {
        for q in 0..3 {
            shortcut
                .set_transition(q, l, base.step(q, l).unwrap())
                .unwrap();
        }
    }
    shortcut.set_transition(0, Letter::new('e'), 2).unwrap();
    println!("shortcut edge: {}", ocfp_check(&shortcut));
}
