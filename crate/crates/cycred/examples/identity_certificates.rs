//! Two-sided identities, their normal forms, and the line format used by
//! `cycred identity`. Run with `cargo run --example identity_certificates`.

use cycred::identities::{format_identity, format_terms, parse_identity};

fn main() {
    // a normal-form identity: empty right side
    let id = parse_identity("(x;y)*(y;x)*(y;X)*(x;Y)==").unwrap();
    let (nf1, nf2) = id.normal_forms().unwrap();
    println!("nf1: {}", format_terms(&nf1).unwrap());
    println!("nf2: {}", format_terms(&nf2).unwrap());
    println!("nf1 basic: {}", nf1.is_basic().unwrap());
    println!("nf2 basic: {}", nf2.is_basic().unwrap());

    // a two-sided identity whose normal form is strictly basic
    let id = parse_identity("(x;y)==(x;y)").unwrap();
    let (nf1, _) = id.normal_forms().unwrap();
    println!("two-sided line: {}", format_identity(&id).unwrap());
    println!("its normal form: {}", format_terms(&nf1).unwrap());
    println!("strictly basic: {}", nf1.is_strictly_basic().unwrap());

    // basicness is a property of the term letters, not of their values:
    // (1;xyX) and (x;y) evaluate to the same word yet never cancel as
    // letters, so this identity is not basic
    let id = parse_identity("(1;xyX)==(x;y)").unwrap();
    assert_eq!(id.lhs.evaluate(), id.rhs.evaluate());
    let (nf1, _) = id.normal_forms().unwrap();
    assert!(nf1.evaluate().is_empty());
    println!("contrast line: {}", format_identity(&id).unwrap());
    println!("its normal form: {}", format_terms(&nf1).unwrap());
    println!("basic: {}", nf1.is_basic().unwrap());
}
