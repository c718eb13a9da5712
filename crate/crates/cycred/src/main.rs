use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use cycred::identities::parse_identity;
use cycred::sweep::{run_sweep, SweepConfig};
use cycred::twisted::{twisted_associativity, verify_witness, VerificationReport, WitnessRecord};
use cycred::word::{format_word, parse_word, Word};

/// Word arithmetic over a signed alphabet: reduction, cyclic reduction,
/// the cyclically reduced product, identity checking, and exhaustively
/// verified twisted-associativity witnesses.
///
/// Words are written with lowercase letters as generators, uppercase as
/// their inverses, and "1" for the empty word.
#[derive(Parser)]
#[command(name = "cycred", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the reduced form of a word
    Reduce {
        word: String,
        #[arg(long)]
        json: bool,
    },
    /// Print the cyclic-reduction conjugator t and core c, ρ(w) = t c t⁻¹
    Cycreduce {
        word: String,
        #[arg(long)]
        json: bool,
    },
    /// Print the cyclically reduced product u * v
    Crprod {
        u: String,
        v: String,
        #[arg(long)]
        json: bool,
    },
    /// Print all rotations of a word, one per line
    Rotations {
        word: String,
        #[arg(long)]
        json: bool,
    },
    /// Print the primitive root of a reduced word as root^exponent
    Root {
        word: String,
        #[arg(long)]
        json: bool,
    },
    /// Construct and verify the twisted-associativity witness for a pair
    Witness {
        u: String,
        w: String,
        #[arg(long)]
        json: bool,
    },
    /// Check every reduced pair up to the given lengths
    Verify {
        /// Number of generators
        #[arg(long, default_value_t = 2)]
        alphabet: usize,
        /// Maximum length of u
        #[arg(long = "max-u", default_value_t = 3)]
        max_u: usize,
        /// Maximum length of w
        #[arg(long = "max-w", default_value_t = 3)]
        max_w: usize,
        /// Worker threads
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Write the report as JSON to this path
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also check oracle membership for pairs with both words at most
        /// this long
        #[arg(long = "oracle-bound")]
        oracle_bound: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Check identities from a file, one identity per line
    Identity {
        path: PathBuf,
        /// One of: basic, strict, collapse:N
        #[arg(long, default_value = "basic")]
        mode: String,
    },
}

fn parse_or_exit(label: &str, text: &str) -> Result<Word, ExitCode> {
    parse_word(text).map_err(|err| {
        eprintln!("error: word {text:?} for {label}: {err}");
        ExitCode::from(2)
    })
}

fn fmt(word: &Word) -> String {
    format_word(word).expect("words built from the 26-letter notation")
}

#[derive(Serialize)]
struct WitnessOutput {
    #[serde(flatten)]
    record: WitnessRecord,
    checks: VerificationReport,
    verified: bool,
}

fn cmd_witness(u_text: &str, w_text: &str, json: bool) -> Result<ExitCode, ExitCode> {
    let u = parse_or_exit("u", u_text)?;
    let w = parse_or_exit("w", w_text)?;
    let witness = twisted_associativity(&u, &w);
    let checks = verify_witness(&u, &w, &witness);
    let record = WitnessRecord::build(&u, &w, &witness).expect("notation-sized inputs");
    if json {
        let output = WitnessOutput {
            record,
            checks,
            verified: checks.pass(),
        };
        println!("{}", serde_json::to_string(&output).expect("serializable"));
    } else {
        println!("case: {}", record.case);
        println!("u: {}", record.u);
        println!("w: {}", record.w);
        println!("u_prime: {}", record.u_prime);
        if let Some(u_dblprime) = &record.u_dblprime {
            println!("u_dblprime: {u_dblprime}");
        }
        if let Some(h) = &record.h {
            println!("h: {h}");
        }
        println!("f: {}", record.f);
        println!("g: {}", record.g);
        println!("rot1: {} rot2: {}", record.rot1, record.rot2);
        println!("cert1: {}", record.cert1);
        println!("cert2: {}", record.cert2);
        for name in checks.failures() {
            println!("failed: {name}");
        }
        println!("verified: {}", checks.pass());
    }
    Ok(if checks.pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_verify(
    alphabet: usize,
    max_u: usize,
    max_w: usize,
    jobs: usize,
    out: Option<PathBuf>,
    oracle_bound: Option<usize>,
    json: bool,
) -> Result<ExitCode, ExitCode> {
    let config = SweepConfig {
        alphabet_size: alphabet,
        max_len_u: max_u,
        max_len_w: max_w,
        parallelism: jobs,
        oracle_bound,
        output_path: out,
    };
    let report = run_sweep(&config).map_err(|err| {
        eprintln!("error: {err}");
        ExitCode::from(2)
    })?;
    if json {
        println!("{}", serde_json::to_string(&report).expect("serializable"));
    } else {
        println!(
            "pairs: {} case A: {} case B: {} failures: {} ({:.2}s)",
            report.pairs_checked,
            report.case_a_count,
            report.case_b_count,
            report.failures,
            report.wall_time_secs,
        );
        for sample in &report.failure_samples {
            println!("failed pair u={} w={}: {}", sample.u, sample.w, sample.reason);
        }
    }
    Ok(if report.failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

enum IdentityMode {
    Basic,
    Strict,
    Collapse(usize),
}

fn parse_mode(mode: &str) -> Option<IdentityMode> {
    match mode {
        "basic" => Some(IdentityMode::Basic),
        "strict" => Some(IdentityMode::Strict),
        _ => mode
            .strip_prefix("collapse:")
            .and_then(|n| n.parse().ok())
            .map(IdentityMode::Collapse),
    }
}

fn cmd_identity(path: &PathBuf, mode: &str) -> Result<ExitCode, ExitCode> {
    let mode = parse_mode(mode).ok_or_else(|| {
        eprintln!("error: --mode must be basic, strict, or collapse:N");
        ExitCode::from(2)
    })?;
    let contents = std::fs::read_to_string(path).map_err(|err| {
        eprintln!("error: cannot read {}: {err}", path.display());
        ExitCode::from(2)
    })?;
    let mut all_ok = true;
    for (number, line) in contents.lines().enumerate() {
        let number = number + 1;
        if line.trim().is_empty() {
            continue;
        }
        let identity = match parse_identity(line.trim()) {
            Ok(identity) => identity,
            Err(err) => {
                println!("line {number}: error: {err}");
                all_ok = false;
                continue;
            }
        };
        let normal = match identity.normal_forms() {
            Ok((nf, _)) => nf,
            Err(err) => {
                println!("line {number}: error: {err}");
                all_ok = false;
                continue;
            }
        };
        match mode {
            IdentityMode::Basic => {
                let verdict = normal.is_basic().expect("normal form evaluates to 1");
                println!("line {number}: {verdict}");
                all_ok &= verdict;
            }
            IdentityMode::Strict => {
                let verdict = normal.is_strictly_basic().expect("normal form evaluates to 1");
                println!("line {number}: {verdict}");
                all_ok &= verdict;
            }
            IdentityMode::Collapse(bound) => {
                match normal.collapse_search(bound).expect("normal form evaluates to 1") {
                    Some(trace) => {
                        let steps: Vec<String> = trace.iter().map(|m| m.to_string()).collect();
                        println!("line {number}: collapses in {} moves: {}", trace.len(), steps.join(" "));
                    }
                    None => {
                        println!("line {number}: no collapse within {bound} moves");
                        all_ok = false;
                    }
                }
            }
        }
    }
    Ok(if all_ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn run() -> Result<ExitCode, ExitCode> {
    let cli = Cli::parse();
    match cli.command {
        Command::Reduce { word, json } => {
            let w = parse_or_exit("word", &word)?;
            let reduced = fmt(&w.reduce());
            if json {
                println!("{}", serde_json::json!({ "result": reduced }));
            } else {
                println!("{reduced}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Cycreduce { word, json } => {
            let w = parse_or_exit("word", &word)?;
            let cw = w.cyc_reduce();
            if json {
                println!(
                    "{}",
                    serde_json::json!({ "t": fmt(&cw.conjugator), "c": fmt(&cw.core) })
                );
            } else {
                println!("t={} c={}", fmt(&cw.conjugator), fmt(&cw.core));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Crprod { u, v, json } => {
            let u = parse_or_exit("u", &u)?;
            let v = parse_or_exit("v", &v)?;
            let (result, conjugator) = u.cyc_reduced_product(&v);
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "result": fmt(&result),
                        "conjugator": fmt(&conjugator)
                    })
                );
            } else {
                println!("{}", fmt(&result));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Rotations { word, json } => {
            let w = parse_or_exit("word", &word)?;
            let rotations: Vec<String> = w.rotations().iter().map(fmt).collect();
            if json {
                println!("{}", serde_json::json!({ "rotations": rotations }));
            } else {
                for r in rotations {
                    println!("{r}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Root { word, json } => {
            let w = parse_or_exit("word", &word)?;
            let root = w.primitive_root().map_err(|err| {
                eprintln!("error: {err}");
                ExitCode::from(2)
            })?;
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "root": fmt(&root.root),
                        "exponent": root.exponent
                    })
                );
            } else {
                println!("{}^{}", fmt(&root.root), root.exponent);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Witness { u, w, json } => cmd_witness(&u, &w, json),
        Command::Verify {
            alphabet,
            max_u,
            max_w,
            jobs,
            out,
            oracle_bound,
            json,
        } => cmd_verify(alphabet, max_u, max_w, jobs, out, oracle_bound, json),
        Command::Identity { path, mode } => cmd_identity(&path, &mode),
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(code) => code,
    }
}
