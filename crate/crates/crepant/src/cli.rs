//! Command-line dispatch: every module behind a subcommand, with
//! deterministic text or JSON reports.
//!
//! Exit codes: 0 on success, 1 when an invariant check fails (an identity
//! the library asserts did not hold), 2 on invalid input (including
//! argument parsing, which clap also reports with exit 2). JSON reports are
//! emitted with stable key order and a `schema_version` field, so they can
//! be golden-tested byte for byte.

use crate::cfrac::{hj_expand, rank_sequence};
use crate::kkalg::{hj_dual_terms, kk_basis, kk_relations};
use crate::ktheory::{
    collection_checks, cyclic_twist, dualize, mutate_collection, ChernP2,
    Direction as MutationDirection, NumericalCollection,
};
use crate::markov::{enumerate_tree, markov_descent, mutate as markov_mutate, MarkovTriple};
use crate::ncdef::{extension_ladder, verify_descent};
use crate::singularity::{normalize, ClassTData, CyclicQuotient};
use crate::smoothing::{build_chain, dimension_conservation, orthogonality_closure};
use crate::suites::{run_all, run_suite, SuiteParams, SuiteReport};
use crate::wpp::{chi_divisorial, hilbert, kks_rank_report, singular_locus, WeightedPlane};
use crate::{parse_int, rat_str, Error, Int, Result};
use clap::{Args, Parser, Subcommand};
use num::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(
    name = "crepant",
    version,
    about = "Exact invariants of cyclic quotient singularities, their monomial \
             deformation algebras, and the mutation combinatorics around them"
)]
struct Cli {
    /// Emit a machine-readable JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hirzebruch-Jung continued fraction of NUMERATOR/DENOMINATOR.
    Hj {
        numerator: String,
        denominator: String,
    },
    /// Monomial deformation algebra of the quotient singularity 1/R(1,A).
    Kk { r: String, a: String },
    /// Degree matrix, extension ladder and descent data for 1/R(1,A).
    Ncdef { r: String, a: String },
    /// Markov triples: mutate/descend a given triple, or enumerate the tree.
    Markov {
        /// Optional triple; omit it to enumerate the tree.
        #[arg(num_args = 3, value_names = ["A", "B", "C"])]
        triple: Option<Vec<String>>,
        /// Largest entry kept during tree enumeration.
        #[arg(long, default_value_t = 1000)]
        max_entry: u64,
    },
    /// Apply a mutation/twist/dual word to the initial triple on the plane.
    Mutate {
        /// Operations: l1, l2 (left mutation at pair 1, 2), r1, r2 (right),
        /// t (cyclic twist), d (dualize).
        #[arg(value_name = "OP")]
        operations: Vec<String>,
        /// Apply this many random operations instead of an explicit word.
        #[arg(long, conflicts_with = "operations")]
        random: Option<u64>,
        /// Seed for --random.
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Weighted projective plane P(W1,W2,W3): Hilbert data, chi, singular
    /// locus, and the per-vertex rank table.
    Wpp {
        w1: String,
        w2: String,
        w3: String,
    },
    /// Crepant chain of the class-T singularity (R,A,S): points, form,
    /// orthogonality closure, dimension conservation.
    Smooth { r: String, a: String, s: String },
    /// Run invariant suites.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name, or "all".
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = 60)]
    max_r: u64,
    #[arg(long, default_value_t = 8)]
    max_s: u64,
    #[arg(long, default_value_t = 1000)]
    max_entry: u64,
    /// Seed for the randomized sweeps.
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

/// Parses arguments from the process environment and runs the invocation;
/// returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::InvariantViolation(_) => 1,
                _ => 2,
            }
        }
    }
}

fn dispatch(cli: &Cli) -> Result<i32> {
    let (value, text, code) = match &cli.command {
        Command::Hj {
            numerator,
            denominator,
        } => cmd_hj(numerator, denominator)?,
        Command::Kk { r, a } => cmd_kk(r, a)?,
        Command::Ncdef { r, a } => cmd_ncdef(r, a)?,
        Command::Markov { triple, max_entry } => cmd_markov(triple.as_deref(), *max_entry)?,
        Command::Mutate {
            operations,
            random,
            seed,
        } => cmd_mutate(operations, *random, *seed)?,
        Command::Wpp { w1, w2, w3 } => cmd_wpp(w1, w2, w3)?,
        Command::Smooth { r, a, s } => cmd_smooth(r, a, s)?,
        Command::Verify(args) => cmd_verify(args)?,
    };
    if cli.json {
        emit(&serde_json::to_string_pretty(&value).expect("reports serialize"));
    } else {
        emit(text.trim_end());
    }
    Ok(code)
}

/// Writes a report line-buffered; a downstream pipe closing early (as in
/// `crepant ... | head`) is not an error.
fn emit(s: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{s}");
}

/// A BigInt as a JSON number (arbitrary precision is enabled).
fn int_value(x: &Int) -> Value {
    Value::Number(x.to_string().parse().expect("integer literal"))
}

fn int_list(xs: &[Int]) -> Value {
    Value::Array(xs.iter().map(int_value).collect())
}

fn chern_value(c: &ChernP2) -> Value {
    json!({
        "rank": int_value(c.rank()),
        "degree": int_value(c.degree()),
        "ch2": rat_str(c.ch2()),
    })
}

fn collection_value(c: &NumericalCollection) -> Value {
    Value::Array(c.members().iter().map(chern_value).collect())
}

fn join<T: std::fmt::Display>(xs: impl IntoIterator<Item = T>, sep: &str) -> String {
    xs.into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

fn cmd_hj(numerator: &str, denominator: &str) -> Result<(Value, String, i32)> {
    let e = hj_expand(parse_int(numerator)?, parse_int(denominator)?)?;
    let ranks = rank_sequence(e.terms());
    let value = json!({
        "schema_version": SCHEMA_VERSION,
        "command": "hj",
        "numerator": int_value(e.numerator()),
        "denominator": int_value(e.denominator()),
        "terms": int_list(e.terms()),
        "value": rat_str(&e.value()),
        "ranks": int_list(ranks.values()),
    });
    let text = format!(
        "{}/{} = [{}]\nranks: {}",
        e.numerator(),
        e.denominator(),
        join(e.terms(), ","),
        join(ranks.values(), " "),
    );
    Ok((value, text, 0))
}

fn cmd_kk(r: &str, a: &str) -> Result<(Value, String, i32)> {
    let r = parse_int(r)?;
    let a = parse_int(a)?;
    let quotient = normalize(&CyclicQuotient::new(r.clone(), Int::one(), a.clone())?)?;
    let dual_terms = hj_dual_terms(&r, &a)?;
    let p = kk_relations(&dual_terms)?;
    let basis = kk_basis(&p);
    let value = json!({
        "schema_version": SCHEMA_VERSION,
        "command": "kk",
        "order": int_value(&r),
        "weight": int_value(&a),
        "quotient": quotient.to_string(),
        "dual_numerator": int_value(&r),
        "dual_denominator": int_value(&(&r - &a)),
        "dual_terms": int_list(&dual_terms),
        "generators": p.generator_count(),
        "forbidden": p.forbidden().iter().map(|w| w.to_string()).collect::<Vec<_>>(),
        "dimension": int_value(basis.dimension()),
        "hilbert": int_list(basis.hilbert()),
        "basis": basis.words().iter().map(|w| w.to_string()).collect::<Vec<_>>(),
    });
    let text = format!(
        "algebra of {quotient} from {}/{} = [{}]\ngenerators: {}\nforbidden: {}\ndimension: {}\nhilbert: {}\nbasis: {}",
        r,
        &r - &a,
        join(&dual_terms, ","),
        p.generator_count(),
        join(p.forbidden(), ", "),
        basis.dimension(),
        join(basis.hilbert(), " "),
        join(basis.words(), ", "),
    );
    Ok((value, text, 0))
}

fn cmd_ncdef(r: &str, a: &str) -> Result<(Value, String, i32)> {
    let r = parse_int(r)?;
    let a = parse_int(a)?;
    let e = hj_expand(r.clone(), a.clone())?;
    let matrix = crate::ncdef::deg_matrix(e.terms());
    let ladder = extension_ladder(e.terms());
    let descent = verify_descent(e.terms())?;
    let value = json!({
        "schema_version": SCHEMA_VERSION,
        "command": "ncdef",
        "numerator": int_value(&r),
        "denominator": int_value(&a),
        "terms": int_list(e.terms()),
        "deg_matrix": matrix.rows().iter().map(|row| int_list(row)).collect::<Vec<_>>(),
        "ranks": int_list(ladder.ranks().values()),
        "ext_dims": int_list(ladder.ext_dims()),
        "multiplicities": int_list(ladder.multiplicities()),
        "column_sums": int_list(&descent.column_sums),
        "total_rank": int_value(&descent.total_rank),
    });
    let mut text = format!(
        "{r}/{a} = [{}]\nranks: {}\next dims: {}\nmultiplicities: {}\n",
        join(e.terms(), ","),
        join(ladder.ranks().values(), " "),
        join(ladder.ext_dims(), " "),
        join(ladder.multiplicities(), " "),
    );
    text.push_str("deg matrix:\n");
    for row in matrix.rows() {
        text.push_str(&format!("  [{}]\n", join(row, ", ")));
    }
    text.push_str(&format!(
        "descent column sums: {} (total rank {})",
        join(&descent.column_sums, " "),
        descent.total_rank,
    ));
    Ok((value, text, 0))
}

fn triple_value(t: &MarkovTriple) -> Value {
    int_list(t.entries())
}

fn cmd_markov(triple: Option<&[String]>, max_entry: u64) -> Result<(Value, String, i32)> {
    match triple {
        Some(args) => {
            let t = MarkovTriple::new(
                parse_int(&args[0])?,
                parse_int(&args[1])?,
                parse_int(&args[2])?,
            )?;
            let mutations: Vec<MarkovTriple> = (1..=3)
                .map(|p| markov_mutate(&t, p))
                .collect::<Result<_>>()?;
            let descent = markov_descent(&t)?;
            let value = json!({
                "schema_version": SCHEMA_VERSION,
                "command": "markov",
                "triple": triple_value(&t),
                "mutations": mutations.iter().map(triple_value).collect::<Vec<_>>(),
                "descent": descent.iter().map(triple_value).collect::<Vec<_>>(),
            });
            let text = format!(
                "triple: {t}\nmutations: {}\ndescent: {}",
                join(&mutations, " "),
                join(&descent, " -> "),
            );
            Ok((value, text, 0))
        }
        None => {
            let tree = enumerate_tree(&Int::from(max_entry));
            let numbers: std::collections::BTreeSet<Int> = tree
                .iter()
                .flat_map(|t| t.entries().iter().cloned())
                .collect();
            let numbers: Vec<Int> = numbers.into_iter().collect();
            let value = json!({
                "schema_version": SCHEMA_VERSION,
                "command": "markov",
                "max_entry": max_entry,
                "count": tree.len(),
                "triples": tree.iter().map(triple_value).collect::<Vec<_>>(),
                "numbers": int_list(&numbers),
            });
            let text = format!(
                "{} triples with entries <= {max_entry}:\n{}\nMarkov numbers: {}",
                tree.len(),
                join(&tree, "\n"),
                join(&numbers, " "),
            );
            Ok((value, text, 0))
        }
    }
}

fn cmd_mutate(operations: &[String], random: Option<u64>, seed: u64) -> Result<(Value, String, i32)> {
    let ops: Vec<String> = match random {
        Some(count) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..count)
                .map(|_| ["l1", "l2", "r1", "r2", "t", "d"][rng.gen_range(0..6)].to_string())
                .collect()
        }
        None => operations.to_vec(),
    };
    let mut c = NumericalCollection::initial_triple();
    let mut steps = Vec::new();
    let mut text_steps = Vec::new();
    for op in &ops {
        c = match op.as_str() {
            "l1" => mutate_collection(&c, 1, MutationDirection::Left)?,
            "l2" => mutate_collection(&c, 2, MutationDirection::Left)?,
            "r1" => mutate_collection(&c, 1, MutationDirection::Right)?,
            "r2" => mutate_collection(&c, 2, MutationDirection::Right)?,
            "t" => cyclic_twist(&c)?,
            "d" => dualize(&c),
            other => {
                return Err(Error::InvalidInput(format!(
                    "unknown operation '{other}' (expected l1, l2, r1, r2, t, d)"
                )))
            }
        };
        let report = collection_checks(&c);
        steps.push(json!({
            "op": op,
            "collection": collection_value(&c),
            "ranks": int_list(&c.ranks()),
            "all_checks_pass": report.all_pass(),
        }));
        text_steps.push(format!(
            "{op}: {c} ranks ({}) checks {}",
            join(&c.ranks(), ","),
            if report.all_pass() { "pass" } else { "FAIL" },
        ));
    }
    let final_report = collection_checks(&c);
    let value = json!({
        "schema_version": SCHEMA_VERSION,
        "command": "mutate",
        "operations": ops,
        "steps": steps,
        "final": {
            "collection": collection_value(&c),
            "ranks": int_list(&c.ranks()),
            "gram_upper": final_report.gram_upper.iter().map(rat_str).collect::<Vec<_>>(),
            "all_checks_pass": final_report.all_pass(),
        },
    });
    let text = format!(
        "start: {}\n{}\nfinal ranks ({}), checks {}",
        NumericalCollection::initial_triple(),
        text_steps.join("\n"),
        join(&c.ranks(), ","),
        if final_report.all_pass() { "pass" } else { "FAIL" },
    );
    let code = if final_report.all_pass() { 0 } else { 1 };
    Ok((value, text, code))
}

fn cmd_wpp(w1: &str, w2: &str, w3: &str) -> Result<(Value, String, i32)> {
    let p = WeightedPlane::new(parse_int(w1)?, parse_int(w2)?, parse_int(w3)?)?;
    let sum = p.weight_sum();
    let hilbert_prefix: Vec<Int> = (0..=10).map(|n| hilbert(&p, &Int::from(n))).collect();
    let locus = singular_locus(&p);
    let kks = match kks_rank_report(&p) {
        Ok(report) => json!({
            "class_t": true,
            "vertices": report.vertices.iter().map(|v| json!({
                "vertex": v.vertex,
                "weight": int_value(&v.weight),
                "singularity": v.singularity.as_ref().map(|q| q.to_string()),
                "block_rank": int_value(&v.block_rank),
                "block_count": int_value(&v.block_count),
                "multiplicity": int_value(&v.multiplicity),
                "rank": int_value(&v.rank_f),
            })).collect::<Vec<_>>(),
        }),
        Err(e) => json!({
            "class_t": false,
            "error": e.to_string(),
        }),
    };
    let value = json!({
        "schema_version": SCHEMA_VERSION,
        "command": "wpp",
        "weights": int_list(p.weights()),
        "weight_sum": int_value(&sum),
        "canonical_degree": int_value(&p.canonical_degree()),
        "hilbert_0_to_10": int_list(&hilbert_prefix),
        "chi_zero": int_value(&chi_divisorial(&p, &Int::zero())),
        "chi_canonical": int_value(&chi_divisorial(&p, &p.canonical_degree())),
        "singular_locus": locus.iter().map(|(v, q)| json!({
            "vertex": v,
            "type": q.to_string(),
        })).collect::<Vec<_>>(),
        "kks": kks,
    });
    let mut text = format!(
        "{p}\nhilbert 0..10: {}\nchi(O) = {}, chi(K) = {}\nsingular locus: {}",
        join(&hilbert_prefix, " "),
        chi_divisorial(&p, &Int::zero()),
        chi_divisorial(&p, &p.canonical_degree()),
        if locus.is_empty() {
            "smooth".to_string()
        } else {
            join(locus.iter().map(|(v, q)| format!("vertex {v}: {q}")), "; ")
        },
    );
    match kks_rank_report(&p) {
        Ok(report) => {
            for v in &report.vertices {
                text.push_str(&format!(
                    "\nvertex {}: weight {} = {} x rank-{} bundle (x{})",
                    v.vertex, v.weight, v.block_count, v.block_rank, v.multiplicity,
                ));
            }
        }
        Err(e) => text.push_str(&format!("\nrank table unavailable: {e}")),
    }
    Ok((value, text, 0))
}

fn cmd_smooth(r: &str, a: &str, s: &str) -> Result<(Value, String, i32)> {
    let t = ClassTData::new(parse_int(r)?, parse_int(a)?, parse_int(s)?)?;
    let chain = build_chain(&t);
    let n = chain.curve_count();
    let closure = orthogonality_closure(
        t.s().to_usize().expect("desk-scale s"),
    )?;
    let dims = dimension_conservation(&t)?;
    let form: Vec<Vec<String>> = (0..n)
        .map(|i| (0..n).map(|j| chain.form_entry(i, j).to_string()).collect())
        .collect();
    let value = json!({
        "schema_version": SCHEMA_VERSION,
        "command": "smooth",
        "class_t": {
            "r": int_value(t.r()),
            "a": int_value(t.a()),
            "s": int_value(t.s()),
        },
        "singularity": dims.quotient.to_string(),
        "milnor_number": int_value(&(t.s() - 1)),
        "points": chain.points().iter().map(|q| q.to_string()).collect::<Vec<_>>(),
        "curve_count": n,
        "form": form,
        "closure": {
            "initial_pairs": closure.initial_pairs,
            "closure_pairs": closure.closure_pairs,
            "total_pairs": closure.total_pairs,
        },
        "dimension": {
            "expansion_terms": int_list(&dims.expansion_terms),
            "kk_dimension": int_value(&dims.kk_dimension),
            "versal_rank": int_value(&dims.versal_rank),
            "matrix_dimension": int_value(&dims.matrix_dimension),
            "block_sum": int_value(&dims.block_sum),
        },
    });
    let mut text = format!(
        "chain for {t} smoothing {}\npoints: {}\nform:\n",
        dims.quotient,
        join(chain.points(), ", "),
    );
    for row in &form {
        text.push_str(&format!("  [{}]\n", row.join(", ")));
    }
    text.push_str(&format!(
        "closure: {} initial -> {} of {} ordered pairs\ndimension: kk {} = versal {} = matrix {} = blocks {}",
        closure.initial_pairs,
        closure.closure_pairs,
        closure.total_pairs,
        dims.kk_dimension,
        dims.versal_rank,
        dims.matrix_dimension,
        dims.block_sum,
    ));
    Ok((value, text, 0))
}

fn cmd_verify(args: &VerifyArgs) -> Result<(Value, String, i32)> {
    let params = SuiteParams {
        max_r: args.max_r,
        max_s: args.max_s,
        max_entry: args.max_entry,
        seed: args.seed,
    };
    let reports: Vec<SuiteReport> = if args.suite == "all" {
        run_all(&params)
    } else {
        vec![run_suite(&args.suite, &params)?]
    };
    let passed = reports.iter().all(SuiteReport::passed);
    let value = json!({
        "schema_version": SCHEMA_VERSION,
        "command": "verify",
        "params": {
            "suite": args.suite,
            "max_r": args.max_r,
            "max_s": args.max_s,
            "max_entry": args.max_entry,
            "seed": args.seed,
        },
        "suites": reports,
        "passed": passed,
    });
    let mut lines = Vec::new();
    for report in &reports {
        for check in &report.checks {
            if check.passed {
                lines.push(format!(
                    "PASS {}/{} ({} cases)",
                    report.suite, check.name, check.cases
                ));
            } else {
                lines.push(format!(
                    "FAIL {}/{} ({} of {} cases): {}",
                    report.suite,
                    check.name,
                    check.failures,
                    check.cases,
                    check.detail.join(" | "),
                ));
            }
        }
    }
    lines.push(if passed {
        "all checks passed".to_string()
    } else {
        "some checks FAILED".to_string()
    });
    Ok((json!(value), lines.join("\n"), if passed { 0 } else { 1 }))
}
