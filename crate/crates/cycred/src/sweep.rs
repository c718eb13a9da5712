//! Exhaustive desk-scale verification: enumerate all reduced words up to a
//! length bound and check the twisted-associativity witness, its
//! verification report, and (within a bound) membership in the brute-force
//! oracle, for every pair.

use std::path::PathBuf;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::twisted::{
    oracle_witness_search, twisted_associativity, verify_witness, AssocWitness,
};
use crate::word::{format_word, Letter, Sign, Word};

/// All reduced words of exactly `len` letters over the first
/// `alphabet_size` generators, in lexicographic order under
/// `a < A < b < B < …`. The count is `2k·(2k−1)^(n−1)` for `n ≥ 1`.
pub fn enumerate_reduced_words(alphabet_size: usize, len: usize) -> Vec<Word> {
    let letters: Vec<Letter> = (1..=alphabet_size as u32)
        .flat_map(|g| [Letter::new(g, Sign::Plus), Letter::new(g, Sign::Minus)])
        .collect();
    let mut acc = vec![Word::empty()];
    for _ in 0..len {
        let mut next = Vec::with_capacity(acc.len() * letters.len());
        for word in &acc {
            for &l in &letters {
                if word.last() != Some(l.inverse()) {
                    next.push(word.concat(&Word::from_letters(vec![l])));
                }
            }
        }
        acc = next;
    }
    acc
}

/// All reduced words of length at most `max_len`, shorter words first,
/// lexicographic within a length.
pub fn reduced_words_up_to(alphabet_size: usize, max_len: usize) -> Vec<Word> {
    (0..=max_len)
        .flat_map(|len| enumerate_reduced_words(alphabet_size, len))
        .collect()
}

/// Configuration of one verification sweep.
#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub alphabet_size: usize,
    pub max_len_u: usize,
    pub max_len_w: usize,
    pub parallelism: usize,
    /// Check oracle membership for pairs whose words are both at most this
    /// long; `None` disables the oracle.
    pub oracle_bound: Option<usize>,
    /// Where to write the report as JSON, if anywhere.
    pub output_path: Option<PathBuf>,
}

impl Default for SweepConfig {
    fn default() -> SweepConfig {
        SweepConfig {
            alphabet_size: 2,
            max_len_u: 3,
            max_len_w: 3,
            parallelism: 1,
            oracle_bound: None,
            output_path: None,
        }
    }
}

/// One failed pair, in text notation, with the checks it failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FailureSample {
    pub u: String,
    pub w: String,
    pub reason: String,
}

/// Outcome of a sweep. Deterministic for a fixed config apart from
/// `wall_time_secs`; failure samples are capped at 100, in pair order.
#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub pairs_checked: usize,
    pub case_a_count: usize,
    pub case_b_count: usize,
    pub failures: usize,
    pub failure_samples: Vec<FailureSample>,
    pub wall_time_secs: f64,
}

pub const FAILURE_SAMPLE_CAP: usize = 100;

#[derive(Debug, Error)]
pub enum SweepError {
    #[error("invalid config: {0}")]
    InvalidConfig(&'static str),
    #[error("cannot build thread pool: {0}")]
    ThreadPool(#[from] rayon::ThreadPoolBuildError),
    #[error("cannot write report: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Default)]
struct Tally {
    case_a: usize,
    case_b: usize,
    failures: Vec<(usize, String)>,
}

fn check_pair(u: &Word, w: &Word, oracle_bound: Option<usize>) -> Result<bool, String> {
    let witness = twisted_associativity(u, w);
    let report = verify_witness(u, w, &witness);
    if !report.pass() {
        return Err(format!("verification failed: {:?}", report.failures()));
    }
    if let Some(bound) = oracle_bound {
        if u.len() <= bound && w.len() <= bound {
            let oracle = oracle_witness_search(u, w, bound)
                .expect("lengths were checked against the bound");
            let member = match &witness {
                AssocWitness::CaseA {
                    u_prime,
                    u_dblprime,
                    ..
                } => {
                    oracle.u_primes.contains(u_prime) && oracle.u_dblprimes.contains(u_dblprime)
                }
                AssocWitness::CaseB { u_prime, h, .. } => oracle
                    .conjugated
                    .contains(&(u_prime.clone(), h.clone())),
            };
            if !member {
                return Err("witness not in oracle output".to_string());
            }
        }
    }
    Ok(matches!(witness, AssocWitness::CaseA { .. }))
}

/// Runs the full pair sweep; pure apart from the optional report file.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepReport, SweepError> {
    if config.alphabet_size == 0 {
        return Err(SweepError::InvalidConfig("alphabet_size must be at least 1"));
    }
    if config.parallelism == 0 {
        return Err(SweepError::InvalidConfig("parallelism must be at least 1"));
    }
    let start = Instant::now();
    let us = reduced_words_up_to(config.alphabet_size, config.max_len_u);
    let ws = reduced_words_up_to(config.alphabet_size, config.max_len_w);
    let total = us.len() * ws.len();
    let oracle_bound = config.oracle_bound;

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.parallelism)
        .build()?;
    let outcomes: Vec<Tally> = pool.install(|| {
        (0..total)
            .into_par_iter()
            .fold(Tally::default, |mut tally, index| {
                let u = &us[index / ws.len()];
                let w = &ws[index % ws.len()];
                match check_pair(u, w, oracle_bound) {
                    Ok(true) => tally.case_a += 1,
                    Ok(false) => tally.case_b += 1,
                    Err(reason) => tally.failures.push((index, reason)),
                }
                tally
            })
            .collect()
    });

    let mut case_a_count = 0;
    let mut case_b_count = 0;
    let mut failures: Vec<(usize, String)> = Vec::new();
    for tally in outcomes {
        case_a_count += tally.case_a;
        case_b_count += tally.case_b;
        failures.extend(tally.failures);
    }
    failures.sort();
    let failure_samples = failures
        .iter()
        .take(FAILURE_SAMPLE_CAP)
        .map(|(index, reason)| FailureSample {
            u: format_word(&us[index / ws.len()]).expect("small alphabet"),
            w: format_word(&ws[index % ws.len()]).expect("small alphabet"),
            reason: reason.clone(),
        })
        .collect();

    let report = SweepReport {
        pairs_checked: total,
        case_a_count,
        case_b_count,
        failures: failures.len(),
        failure_samples,
        wall_time_secs: start.elapsed().as_secs_f64(),
    };
    if let Some(path) = &config.output_path {
        let file = std::fs::File::create(path)?;
        serde_json::to_writer_pretty(file, &report).map_err(std::io::Error::from)?;
    }
    Ok(report)
}
