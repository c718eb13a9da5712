//! Cyclic reduction and its conjugator witness: every word factors
//! uniquely as ρ(w) = t ∘ core ∘ t⁻¹ with a cyclically reduced core.
//! Run with `cargo run --example cyclic_reduction`.

use cycred::word::{format_word, parse_word};

fn main() {
    for text in ["xyX", "YXyxy", "yy", "xYyXxy"] {
        let w = parse_word(text).unwrap();
        let cw = w.cyc_reduce();
        println!(
            "{text}: t={} c={}",
            format_word(&cw.conjugator).unwrap(),
            format_word(&cw.core).unwrap()
        );
        // the factorization is literal on the reduced form
        let rebuilt = cw.conjugator.concat(&cw.core).concat(&cw.conjugator.invert());
        assert_eq!(rebuilt, w.reduce());
        assert!(cw.core.is_cyclically_reduced());
    }

    // conjugation never changes the core up to rotation, and not at all
    // when the conjugated concatenation stays reduced
    let w = parse_word("xy").unwrap();
    let t = parse_word("yx").unwrap();
    let conjugated = t.concat(&w).concat(&t.invert());
    let core = conjugated.cyc_core();
    println!(
        "core of (yx)(xy)(yx)^-1 = {}",
        format_word(&core).unwrap()
    );
    assert!(core.is_rotation_of(&w.cyc_core()));
}
