//! Command-line front end: evaluate words in semigroup models, check and
//! enumerate word problems, run automata, build Cayley automata, refute
//! candidate recognizers, classify partial injections, and export DOT.
//!
//! Exit codes: 0 on success, 1 on a negative verdict (a rejected pair, an
//! unequal word pair), 2 on input errors.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use rwp_core::{
    cayley_afsa, kernel_equal_up_to, parse_model_file, refute_fi_recognizer, verify_witness, Afsa,
    Error, GeneratedSemigroup, MonogenicType, PartialInjection, RefutationWitness, WordPair,
};

#[derive(Parser)]
#[command(
    name = "rwp",
    about = "Two-tape word problems, asynchronous automata, and inverse semigroup models",
    version
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Seed for randomized operations. Reserved: every current command is
    /// deterministic, so the seed does not change any output.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a word in a semigroup model.
    Eval {
        /// Inline model name (freeinverse, freemonoid:a,b, bicyclic, c2, ...)
        /// or a model file path.
        #[arg(long)]
        model: String,
        #[arg(long)]
        word: String,
    },
    /// Decide whether two words represent the same element.
    WpCheck {
        #[arg(long)]
        model: String,
        u: String,
        v: String,
    },
    /// Enumerate the word problem up to a length bound.
    WpEnum {
        #[arg(long)]
        model: String,
        #[arg(long)]
        max_len: usize,
    },
    /// Run an automaton on a pair of words (`-` denotes the empty word).
    AfsaAccept {
        #[arg(long)]
        afsa: PathBuf,
        u: String,
        v: String,
    },
    /// Enumerate the pairs an automaton accepts up to a length bound.
    AfsaEnum {
        #[arg(long)]
        afsa: PathBuf,
        #[arg(long)]
        max_len: usize,
    },
    /// Build the Cayley-graph automaton of a finite model.
    CayleyAfsa {
        #[arg(long)]
        model: String,
        /// Write the automaton here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Produce a verified witness that an automaton over {x, X} fails to
    /// recognize the free monogenic inverse word problem.
    RefuteFi {
        #[arg(long)]
        afsa: PathBuf,
    },
    /// Classify a partial injection: index, period, inverse-closure size,
    /// and a bounded kernel comparison against the canonical model of the
    /// same type.
    Classify {
        /// Injection in `n; i->j, i->j, ...` form.
        injection: String,
        /// Give up on the closure beyond this many elements.
        #[arg(long, default_value_t = 10_000)]
        cap: usize,
        /// Word length bound for the kernel comparison.
        #[arg(long, default_value_t = 6)]
        depth: usize,
    },
    /// Export an automaton as a DOT graph.
    ExportDot {
        #[arg(long)]
        afsa: PathBuf,
        /// Write the graph here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, String> {
    match &cli.command {
        Command::Eval { model, word } => {
            let gs = load_model(model)?;
            let element = gs.project(word).map_err(|e| e.to_string())?;
            let text = gs.model().element_text(&element);
            emit(
                cli.format,
                &text,
                json!({ "element": text, "word": word }),
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::WpCheck { model, u, v } => {
            let gs = load_model(model)?;
            let equal = gs.wp_contains(u, v).map_err(|e| e.to_string())?;
            emit(
                cli.format,
                if equal { "equal" } else { "different" },
                json!({ "equal": equal, "u": u, "v": v }),
            );
            Ok(verdict(equal))
        }
        Command::WpEnum { model, max_len } => {
            let gs = load_model(model)?;
            let pairs = gs.enumerate_word_problem(*max_len);
            emit_pairs(cli.format, *max_len, &pairs);
            Ok(ExitCode::SUCCESS)
        }
        Command::AfsaAccept { afsa, u, v } => {
            let afsa = load_afsa(afsa)?;
            let pair = WordPair::new(word_arg(u), word_arg(v));
            let accepted = afsa.accepts(&pair).map_err(|e| e.to_string())?;
            emit(
                cli.format,
                if accepted { "accepted" } else { "rejected" },
                json!({ "accepted": accepted, "u": pair.first, "v": pair.second }),
            );
            Ok(verdict(accepted))
        }
        Command::AfsaEnum { afsa, max_len } => {
            let afsa = load_afsa(afsa)?;
            let pairs = afsa.enumerate_accepted(*max_len);
            emit_pairs(cli.format, *max_len, &pairs);
            Ok(ExitCode::SUCCESS)
        }
        Command::CayleyAfsa { model, out } => {
            let gs = load_model(model)?;
            let afsa = cayley_afsa(&gs).map_err(|e| e.to_string())?;
            let text = afsa.to_text();
            match out {
                Some(path) => {
                    fs::write(path, &text)
                        .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
                    emit(
                        cli.format,
                        &format!("wrote {} ({} states)", path.display(), afsa.state_count()),
                        json!({ "out": path.display().to_string(), "states": afsa.state_count() }),
                    );
                }
                None => emit(
                    cli.format,
                    text.trim_end(),
                    json!({ "states": afsa.state_count(), "text": text }),
                ),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::RefuteFi { afsa } => {
            let afsa = load_afsa(afsa)?;
            let witness = refute_fi_recognizer(&afsa).map_err(|e| e.to_string())?;
            let verified = verify_witness(&afsa, &witness);
            let mut text = witness.to_text();
            text.push_str(&format!("verified: {verified}\n"));
            emit(
                cli.format,
                text.trim_end(),
                witness_json(&witness, verified),
            );
            if !verified {
                return Err("internal: witness failed re-verification".into());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify {
            injection,
            cap,
            depth,
        } => {
            let f: PartialInjection = injection.parse().map_err(|e: Error| e.to_string())?;
            classify(cli.format, &f, *cap, *depth)
        }
        Command::ExportDot { afsa, out } => {
            let afsa = load_afsa(afsa)?;
            let dot = afsa.to_dot();
            match out {
                Some(path) => {
                    fs::write(path, &dot)
                        .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
                    emit(
                        cli.format,
                        &format!("wrote {}", path.display()),
                        json!({ "out": path.display().to_string() }),
                    );
                }
                None => emit(cli.format, dot.trim_end(), json!({ "dot": dot })),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn verdict(positive: bool) -> ExitCode {
    if positive {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn emit(format: Format, text: &str, json: Value) {
    match format {
        Format::Text => println!("{text}"),
        Format::Json => println!("{json}"),
    }
}

/// `-` on the command line denotes the empty word.
fn word_arg(s: &str) -> String {
    if s == "-" {
        String::new()
    } else {
        s.to_string()
    }
}

fn show_word(w: &str) -> &str {
    if w.is_empty() {
        "-"
    } else {
        w
    }
}

fn emit_pairs(format: Format, max_len: usize, pairs: &[WordPair]) {
    match format {
        Format::Text => {
            for p in pairs {
                println!("{} {}", show_word(&p.first), show_word(&p.second));
            }
        }
        Format::Json => {
            let items: Vec<Value> = pairs
                .iter()
                .map(|p| json!({ "u": p.first, "v": p.second }))
                .collect();
            println!("{}", json!({ "max_len": max_len, "pairs": items }));
        }
    }
}

fn witness_json(witness: &RefutationWitness, verified: bool) -> Value {
    match witness {
        RefutationWitness::RejectedValidPair { pair, n, lhs, rhs } => json!({
            "kind": "rejected-valid-pair",
            "u": pair.first,
            "v": pair.second,
            "n": n,
            "lhs": lhs.to_string(),
            "rhs": rhs.to_string(),
            "verified": verified,
        }),
        RefutationWitness::AcceptedInvalidPair {
            pair,
            n,
            i,
            j,
            lhs,
            rhs,
        } => json!({
            "kind": "accepted-invalid-pair",
            "u": pair.first,
            "v": pair.second,
            "n": n,
            "i": i,
            "j": j,
            "lhs": lhs.to_string(),
            "rhs": rhs.to_string(),
            "verified": verified,
        }),
    }
}

fn classify(
    format: Format,
    f: &PartialInjection,
    cap: usize,
    depth: usize,
) -> Result<ExitCode, String> {
    let (index, period) = f.index_period();
    let closure_size = match f.inverse_closure(cap) {
        Ok(members) => Ok(members.len()),
        Err(Error::ClosureCapExceeded { partial, .. }) => Err(partial.len()),
        Err(other) => return Err(other.to_string()),
    };
    let canonical = MonogenicType::Periodic { index, period }
        .generator(1)
        .map_err(|e| e.to_string())?;
    let gs = GeneratedSemigroup::injections(&[('x', f.clone()), ('X', f.inverse())])
        .map_err(|e| e.to_string())?;
    let canonical_gs =
        GeneratedSemigroup::injections(&[('x', canonical.clone()), ('X', canonical.inverse())])
            .map_err(|e| e.to_string())?;
    let witness = kernel_equal_up_to(&gs, &canonical_gs, depth).map_err(|e| e.to_string())?;

    match format {
        Format::Text => {
            println!("injection: {f}");
            println!("index: {index}");
            println!("period: {period}");
            match closure_size {
                Ok(size) => println!("closure-size: {size}"),
                Err(partial) => println!("closure-size: exceeds cap {cap} ({partial} elements found)"),
            }
            println!("kernel-depth: {depth}");
            match &witness {
                None => println!("kernel-matches-canonical-model: yes"),
                Some(pair) => println!(
                    "kernel-matches-canonical-model: no (witness {} {})",
                    pair.first, pair.second
                ),
            }
        }
        Format::Json => {
            let mut doc = BTreeMap::new();
            doc.insert("cap", json!(cap));
            doc.insert("closure_exceeds_cap", json!(closure_size.is_err()));
            doc.insert("closure_size", match closure_size {
                Ok(size) => json!(size),
                Err(_) => Value::Null,
            });
            doc.insert("index", json!(index));
            doc.insert("injection", json!(f.to_string()));
            doc.insert("kernel_depth", json!(depth));
            doc.insert(
                "kernel_witness",
                match &witness {
                    None => Value::Null,
                    Some(p) => json!({ "u": p.first, "v": p.second }),
                },
            );
            doc.insert("period", json!(period));
            println!("{}", serde_json::to_string(&doc).expect("serializable"));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn load_afsa(path: &Path) -> Result<Afsa, String> {
    let text =
        fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    Afsa::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

/// Inline model names are tried first; anything else is read as a model
/// file.
fn load_model(name_or_path: &str) -> Result<GeneratedSemigroup, String> {
    match name_or_path {
        "freeinverse" => return Ok(GeneratedSemigroup::free_inverse()),
        "bicyclic" => return Ok(GeneratedSemigroup::bicyclic()),
        _ => {}
    }
    if let Some(symbols) = name_or_path.strip_prefix("freemonoid:") {
        let mut alphabet = Vec::new();
        for part in symbols.split(',') {
            let mut chars = part.trim().chars();
            match (chars.next(), chars.next()) {
                (Some(c), None) => alphabet.push(c),
                _ => return Err(format!("bad free-monoid symbol '{part}'")),
            }
        }
        return GeneratedSemigroup::free_monoid(&alphabet).map_err(|e| e.to_string());
    }
    if let Some(order) = name_or_path.strip_prefix('c').and_then(|d| d.parse::<usize>().ok()) {
        return GeneratedSemigroup::cyclic(order, 'g').map_err(|e| e.to_string());
    }
    let text =
        fs::read_to_string(name_or_path).map_err(|e| format!("cannot read model '{name_or_path}': {e}"))?;
    parse_model_file(&text).map_err(|e| format!("{name_or_path}: {e}"))
}
