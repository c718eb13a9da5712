//! Sequences of conjugated relators, their evaluation, and the Peiffer
//! moves that rewrite them without changing it.
//! Run with `cargo run --example peiffer_moves`.

use cycred::identities::{ConjugatedRelator, ExchangeKind, IdentitySequence};
use cycred::word::{format_word, parse_word};

fn seq(terms: &[(&str, &str)]) -> IdentitySequence {
    IdentitySequence::new(
        terms
            .iter()
            .map(|(a, r)| ConjugatedRelator::new(&parse_word(a).unwrap(), &parse_word(r).unwrap()))
            .collect(),
    )
}

fn main() {
    let h = seq(&[("x", "y"), ("y", "x"), ("y", "X"), ("x", "Y")]);
    println!("evaluation: {}", format_word(&h.evaluate()).unwrap());

    // exchanges move a term past its neighbour, conjugating to compensate
    let swapped = h.exchange(1, ExchangeKind::A).unwrap();
    assert_eq!(swapped.evaluate(), h.evaluate());
    // A then B at the same spot restores the original sequence
    assert_eq!(swapped.exchange(1, ExchangeKind::B).unwrap(), h);

    // deletions remove an adjacent (a, r), (a, r⁻¹) pair
    let shorter = h.peiffer_delete(1).unwrap();
    println!("after deleting the middle pair: {} terms", shorter.len());

    // this sequence evaluates to 1, so it is an identity among relations;
    // a breadth-first search finds a collapse trace
    let trace = h.collapse_search(6).unwrap().expect("collapses");
    let steps: Vec<String> = trace.iter().map(|m| m.to_string()).collect();
    println!("collapse trace: {}", steps.join(" "));

    // it is basic (free reduction over term letters empties it) but not
    // strictly basic (the coefficients x and y differ)
    println!("basic: {}", h.is_basic().unwrap());
    println!("strictly basic: {}", h.is_strictly_basic().unwrap());
    let uniform = seq(&[("x", "y"), ("x", "x"), ("x", "X"), ("x", "Y")]);
    println!("uniform variant strictly basic: {}", uniform.is_strictly_basic().unwrap());
}
