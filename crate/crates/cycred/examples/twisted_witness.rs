//! The repair witness for u * (u⁻¹ * w): a rotation of u recovers ρ̂(w) up
//! to rotation, or w rotates onto a literal conjugated concatenation. Run
//! with `cargo run --example twisted_witness`.

use cycred::twisted::{
    symmetric_witness, twisted_associativity, verify_witness, AssocWitness, WitnessRecord,
};
use cycred::word::{format_word, parse_word, Word};

fn f(word: &Word) -> String {
    format_word(word).unwrap()
}

fn main() {
    // the plain products miss: u * (u⁻¹ * w) is not a rotation of w here
    let u = parse_word("xYxyy").unwrap();
    let w = parse_word("xxYXyy").unwrap();
    let naive = u.star(&u.invert().star(&w));
    println!("u * (u⁻¹ * w) = {} (len {})", f(&naive), naive.len());
    println!("ρ̂(w) = {} (len {})", f(&w.cyc_core()), w.cyc_core().len());

    // but the right rotations of u repair both sides
    let witness = twisted_associativity(&u, &w);
    if let AssocWitness::CaseA { u_prime, u_dblprime, cert1, cert2 } = &witness {
        println!("u' = {}  u'' = {}", f(u_prime), f(u_dblprime));
        println!(
            "u' * (u⁻¹ * w) = {} ~ w",
            f(&u_prime.star(&u.invert().star(&w)))
        );
        println!(
            "(w * u⁻¹) * u'' = {} ~ w",
            f(&w.star(&u.invert()).star(u_dblprime))
        );
        println!("cert1 strictly basic: {}", cert1.is_strictly_basic().unwrap());
        println!("cert2 strictly basic: {}", cert2.is_strictly_basic().unwrap());
    }
    assert!(verify_witness(&u, &w, &witness).pass());

    // when w literally contains a conjugated copy of u⁻¹*w, no rotation
    // can work and the witness switches shape
    let u = parse_word("xxy").unwrap();
    let w = parse_word("xyxyxYYxy").unwrap();
    let witness = twisted_associativity(&u, &w);
    if let AssocWitness::CaseB { u_prime, h, .. } = &witness {
        let fw = u.invert().star(&w);
        println!(
            "conjugated shape: u' = {}, h = {}, f = {}",
            f(u_prime),
            f(&h.clone()),
            f(&fw)
        );
        let rotated = u_prime.concat(h).concat(&fw).concat(&h.invert());
        println!("u' h f h⁻¹ = {} is a rotation of w", f(&rotated));
        assert!(rotated.is_rotation_of(&w));
        // in this shape the two one-sided products coincide
        assert_eq!(fw, w.star(&u.invert()));
    }
    assert!(verify_witness(&u, &w, &witness).pass());

    // the symmetric view and the line-oriented record
    let c = symmetric_witness(&u, &w);
    println!("symmetric form: h = {}, f = g = {}", f(&c.h), f(&c.f));
    let record = WitnessRecord::build(&u, &w, &witness).unwrap();
    println!("record: {}", record.to_json());
}
