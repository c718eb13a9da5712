//! Exhaustive verification over all small reduced pairs, with brute-force
//! oracle cross-checking. Run with `cargo run --example exhaustive_sweep`.

use cycred::sweep::{enumerate_reduced_words, run_sweep, SweepConfig};
use cycred::twisted::oracle_witness_search;
use cycred::word::{format_word, parse_word};

fn main() {
    // 2k(2k-1)^(n-1) reduced words of each exact length
    for len in 0..=4 {
        println!(
            "reduced words of length {len} over 2 generators: {}",
            enumerate_reduced_words(2, len).len()
        );
    }

    // witnesses are not unique; the oracle lists every one
    let u = parse_word("xYxy").unwrap();
    let w = parse_word("xxYXy").unwrap();
    let oracle = oracle_witness_search(&u, &w, 6).unwrap();
    let primes: Vec<String> = oracle
        .u_primes
        .iter()
        .map(|r| format_word(r).unwrap())
        .collect();
    let dblprimes: Vec<String> = oracle
        .u_dblprimes
        .iter()
        .map(|r| format_word(r).unwrap())
        .collect();
    println!("valid u' rotations: {primes:?}");
    println!("valid u'' rotations: {dblprimes:?}");

    // check every pair with |u| <= 3 and |w| <= 4, oracle included
    let report = run_sweep(&SweepConfig {
        alphabet_size: 2,
        max_len_u: 3,
        max_len_w: 4,
        parallelism: 4,
        oracle_bound: Some(4),
        output_path: None,
    })
    .unwrap();
    println!(
        "pairs: {} case A: {} case B: {} failures: {} ({:.2}s)",
        report.pairs_checked,
        report.case_a_count,
        report.case_b_count,
        report.failures,
        report.wall_time_secs
    );
    assert_eq!(report.failures, 0);
}
