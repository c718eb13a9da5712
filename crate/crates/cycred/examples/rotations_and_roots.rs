//! Rotations, canonical representatives, rotation witnesses, and
//! primitive roots. Run with `cargo run --example rotations_and_roots`.

use cycred::word::{format_word, parse_word, reduced_power};

fn main() {
    let w = parse_word("xYxy").unwrap();
    println!("rotations of xYxy:");
    for r in w.rotations() {
        println!("  {}", format_word(&r).unwrap());
    }
    println!(
        "canonical rotation: {}",
        format_word(&w.canonical_rotation()).unwrap()
    );

    // u ~ v exactly when some p satisfies u p = p v letter-for-letter
    let u = parse_word("xy").unwrap();
    let v = parse_word("yx").unwrap();
    let p = u.cyclic_perm_witness(&v).unwrap();
    println!(
        "witness for xy ~ yx: p = {}  (up = {})",
        format_word(&p).unwrap(),
        format_word(&u.concat(&p)).unwrap()
    );
    assert_eq!(u.concat(&p), p.concat(&v));

    // primitive roots see through the conjugating shell: xyyX = (xyX)^2
    for text in ["xyxy", "x", "xyyX", "xYxyy"] {
        let w = parse_word(text).unwrap();
        let root = w.primitive_root().unwrap();
        println!(
            "{text} = ({})^{}",
            format_word(&root.root).unwrap(),
            root.exponent
        );
        assert_eq!(reduced_power(&root.root, root.exponent), w);
    }
}
