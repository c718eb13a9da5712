//! Basic word arithmetic: parsing, reduction, inversion, and the two
//! products. Run with `cargo run --example word_arithmetic`.

use cycred::word::{format_word, parse_word, Word};

fn show(label: &str, w: &Word) {
    println!("{label} = {}", format_word(w).unwrap());
}

fn main() {
    // lowercase letters are generators, uppercase their inverses
    let w = parse_word("xyYxxX").unwrap();
    show("w", &w);
    show("reduce(w)", &w.reduce());
    show("invert(w)", &w.invert());
    show("reverse(w)", &w.reverse());

    // the reduced product is the group multiplication on reduced words
    let u = parse_word("xy").unwrap();
    let v = parse_word("Yx").unwrap();
    show("u . v", &u.reduced_product(&v));

    // the cyclically reduced product also strips matching outer letters
    let (result, conjugator) = u.cyc_reduced_product(&parse_word("X").unwrap());
    show("u * X", &result);
    show("  conjugator", &conjugator);

    // it is not associative: (xy * X) * x versus xy * (X * x)
    let x = parse_word("x").unwrap();
    let xinv = parse_word("X").unwrap();
    let left = u.star(&xinv).star(&x);
    let right = u.star(&xinv.star(&x));
    show("(xy * X) * x", &left);
    show("xy * (X * x)", &right);
    assert_ne!(left, right);
}
