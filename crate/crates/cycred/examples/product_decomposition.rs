//! Where the cyclically reduced core of ρ(uv) sits: inside v's surviving
//! part, astride the cancellation boundary, or inside u's surviving part.
//! Run with `cargo run --example product_decomposition`.

use cycred::equations::{decompose_product, ProductDecomposition};
use cycred::word::{format_word, parse_word, Word};

fn w(text: &str) -> Word {
    parse_word(text).unwrap()
}

fn f(word: &Word) -> String {
    format_word(word).unwrap()
}

fn main() {
    let pairs = [("xy", "Yx"), ("xy", "YxyyXX"), ("Yxxx", "Xy")];
    for (u_text, v_text) in pairs {
        let u = w(u_text);
        let v = w(v_text);
        let core = u.star(&v);
        println!("u = {u_text}, v = {v_text}, u*v = {}", f(&core));
        match decompose_product(&u, &v).unwrap() {
            ProductDecomposition::CoreSplit { c1, c2, t, a } => {
                println!(
                    "  core astride the boundary: c1={} c2={} t={} a={}",
                    f(&c1),
                    f(&c2),
                    f(&t),
                    f(&a)
                );
                // the split halves commute into v*u
                println!("  v*u = {}", f(&v.star(&u)));
                assert_eq!(v.star(&u), c2.concat(&c1));
            }
            ProductDecomposition::CoreInSecond { u1, a, s } => {
                println!(
                    "  core inside v: u1={} a={} s={}",
                    f(&u1),
                    f(&a),
                    f(&s)
                );
                assert_eq!(u1.concat(&a), u);
            }
            ProductDecomposition::CoreInFirst { v1, s, a } => {
                println!(
                    "  core inside u: v1={} s={} a={}",
                    f(&v1),
                    f(&s),
                    f(&a)
                );
                assert_eq!(a.invert().concat(&v1), v);
            }
        }
    }
}
