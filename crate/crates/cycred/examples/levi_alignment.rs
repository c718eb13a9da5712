//! Word equations: Levi's lemma, multi-factor alignments, and maximal
//! cancellation. Run with `cargo run --example levi_alignment`.

use cycred::equations::{align_factorizations, levi_split, max_cancellation};
use cycred::word::{format_word, parse_word, Word};

fn w(text: &str) -> Word {
    parse_word(text).unwrap()
}

fn main() {
    // xy . y = x . yy: the overlap sits at the end of the longer first part
    let sol = levi_split(&w("xy"), &w("y"), &w("x"), &w("yy")).unwrap();
    println!(
        "levi: side {:?}, p = {}",
        sol.side,
        format_word(&sol.p).unwrap()
    );

    // two factorizations of xyxy, bar counts on each side
    let u_parts = [w("x"), w("yx"), Word::empty(), w("y")];
    let v_parts = [w("xy"), w("x"), w("y")];
    let bp = align_factorizations(&u_parts, &v_parts).unwrap();
    println!("bars_in_u = {:?}", bp.bars_in_u);
    println!("bars_in_v = {:?}", bp.bars_in_v);
    let fragments: Vec<String> = bp
        .fragments
        .iter()
        .map(|f| format_word(f).unwrap())
        .collect();
    println!("fragments = {fragments:?}");

    // maximal cancellation between reduced words: u = left∘a, v = a⁻¹∘right
    for (u, v) in [("xy", "YYx"), ("xy", "xy"), ("xy", "YX")] {
        let (left, cancelled, right) = max_cancellation(&w(u), &w(v));
        println!(
            "{u} against {v}: left={} a={} right={}",
            format_word(&left).unwrap(),
            format_word(&cancelled).unwrap(),
            format_word(&right).unwrap()
        );
    }
}
