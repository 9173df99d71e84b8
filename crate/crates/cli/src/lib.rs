//! The `signbit` command-line tool.
//!
//! Every command writes line-oriented text (or JSON with `--json`) to the
//! writer it is given. Numbers are always printed as reduced fractions.
//! Failures map to exit status 1 (usage, parse and file errors) or 2
//! (inputs that break an operation's contract).

pub mod expr;

use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use signed_bit::ideals::{
    cauchy_check, cauchy_from_sequence, check_c_properties, is_unblocked, limit_bounds, truncate_ideal, Kind,
};
use signed_bit::rational::{pow2, ratio, Fraction};
use signed_bit::riesz::{
    chi_member, close_for_probes, induced_family, reconstruct_hom, ChiAssignment, RieszElement,
};
use signed_bit::sequences::{compute_modulus, parse_sequence, ConvergenceWitness, Modulus, RationalSequence, SequenceError};
use signed_bit::{parse_rational, Rational};

const AFTER_HELP: &str = "\
Error budget for `eval`: every operator returns a number whose depth-N
midpoint is within 2^-N of its exact value, so composing operators adds
nothing and the output of `eval ... --bits N` is within 2^-N of the exact
value of the whole expression.

  operator       inputs read at precision       budget
  literal, -x    exact digits                   0
  a + b, a - b   k+1                            0
  avg(a, b)      k                              0
  q * a          k+max(0, ceil(log2|q|)+1)      0
  a * b          k+2+ceil(log2(Ba+Bb+1))        0
  min, max       k                              0

Ba bounds |a| by the position of its first digit.

Exit status: 0 on success, 1 for usage, parse or file errors, 2 when the
inputs break an operation's contract.";

#[derive(Debug, Parser)]
#[command(name = "signbit", version, about = "Signed-bit reals on the pseudotree of dyadic intervals", after_help = AFTER_HELP)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate an expression and print its digits to a given depth.
    Eval {
        /// An expression over fractions with + - * min avg max.
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Last digit index to print.
        #[arg(long)]
        bits: i64,
        #[arg(long)]
        json: bool,
    },
    /// Print the O-ideal of a rational over levels 1..=depth.
    Oideal {
        r: String,
        #[arg(long)]
        depth: i64,
        #[arg(long)]
        json: bool,
    },
    /// Print the C-ideal of a rational over levels 1..=depth.
    Cideal {
        r: String,
        #[arg(long)]
        depth: i64,
        /// Also check the six c-ideal conditions.
        #[arg(long)]
        check: bool,
        /// Chain length for the bounded endpoint condition (default depth - 1).
        #[arg(long)]
        bound: Option<u32>,
        #[arg(long)]
        json: bool,
    },
    /// Build the downset generated by a sequence file and check it.
    CauchyFromSeq {
        file: PathBuf,
        #[arg(long)]
        depth: i64,
        /// Treat the sequence as regular and declare the induced modulus.
        #[arg(long)]
        regular: bool,
        #[arg(long)]
        json: bool,
    },
    /// Extract mu_m for p from a regular sequence q with the same limit.
    Modulus {
        #[arg(long)]
        p: PathBuf,
        #[arg(long)]
        q: PathBuf,
        #[arg(long)]
        m: u64,
        /// K0 in the witness K(eps) = ceil(K0 / eps), valid when |p_n - r| <= K0/n.
        #[arg(long)]
        witness: String,
        #[arg(long)]
        json: bool,
    },
    /// Read a coordinate projection of Q^dim back from its o-ideals.
    RieszDemo {
        #[arg(long)]
        dim: usize,
        /// Coordinate to project onto, from 1 to dim.
        #[arg(long)]
        coord: usize,
        #[arg(long)]
        depth: i64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Contract(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Contract(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Contract(m) => f.write_str(m),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn usage(message: impl fmt::Display) -> CliError {
    CliError::Usage(message.to_string())
}

pub fn run(command: Command, out: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Eval { expr, bits, json } => eval(&expr, bits, json, out),
        Command::Oideal { r, depth, json } => ideal(Kind::O, &r, depth, None, json, out),
        Command::Cideal { r, depth, check, bound, json } => {
            let bound = check.then(|| bound.unwrap_or((depth - 1).max(1) as u32));
            ideal(Kind::C, &r, depth, bound, json, out)
        }
        Command::CauchyFromSeq { file, depth, regular, json } => cauchy(&file, depth, regular, json, out),
        Command::Modulus { p, q, m, witness, json } => modulus(&p, &q, m, &witness, json, out),
        Command::RieszDemo { dim, coord, depth, seed } => riesz_demo(dim, coord, depth, seed, out),
    }
}

fn eval(text: &str, bits: i64, json: bool, out: &mut dyn Write) -> Result<(), CliError> {
    if bits < 1 {
        return Err(usage("--bits must be at least 1"));
    }
    let expr = expr::parse(text).map_err(|e| usage(format!("cannot parse expression: {e}")))?;
    let number = expr.evaluate();
    let digits = number.truncate(bits);
    let midpoint = digits.midpoint();
    if json {
        let symbols: String = digits.digits.iter().map(|d| d.symbol()).collect();
        let value = json!({
            "start": digits.start,
            "digits": symbols,
            "depth": digits.depth,
            "midpoint": Fraction(&midpoint).to_string(),
        });
        writeln!(out, "{value}")?;
    } else {
        writeln!(out, "{digits}")?;
        writeln!(out, "midpoint={}", Fraction(&midpoint))?;
    }
    Ok(())
}

fn rational_arg(text: &str) -> Result<Rational, CliError> {
    parse_rational(text).map_err(|e| usage(format!("cannot parse rational '{text}': {e}")))
}

fn ideal(kind: Kind, r: &str, depth: i64, bound: Option<u32>, json: bool, out: &mut dyn Write) -> Result<(), CliError> {
    if depth < 1 {
        return Err(usage("--depth must be at least 1"));
    }
    if let Some(bound) = bound {
        if i64::from(bound) > (depth - 1).max(1) {
            return Err(usage(format!("--bound {bound} exceeds the window height {}", depth - 1)));
        }
    }
    let r = rational_arg(r)?;
    let t = truncate_ideal(kind, &r, 1, depth);
    let report = bound.map(|b| check_c_properties(&t, b));
    if json {
        let nodes: Vec<String> = t.nodes().iter().map(ToString::to_string).collect();
        let mut value = json!({
            "kind": kind.to_string(),
            "r": Fraction(&r).to_string(),
            "levels": [1, depth],
            "nodes": nodes,
        });
        if let Some(report) = &report {
            let properties: Vec<_> = report
                .properties
                .iter()
                .map(|p| json!({ "property": p.number, "holds": p.holds, "detail": p.detail }))
                .collect();
            value["check"] = json!({ "depth_bound": report.depth_bound, "properties": properties });
        }
        writeln!(out, "{value}")?;
    } else {
        writeln!(out, "{t}")?;
        if let Some(report) = &report {
            writeln!(out, "{report}")?;
        }
    }
    match report {
        Some(report) if !report.all_pass() => Err(CliError::Contract("c-ideal check failed".into())),
        _ => Ok(()),
    }
}

fn read_sequence(path: &Path) -> Result<Vec<Rational>, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    parse_sequence(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn cauchy(file: &Path, depth: i64, regular: bool, json: bool, out: &mut dyn Write) -> Result<(), CliError> {
    if depth < 1 {
        return Err(usage("--depth must be at least 1"));
    }
    let terms = read_sequence(file)?;
    if (terms.len() as i64) < depth {
        return Err(CliError::Contract(format!(
            "{}: depth {depth} needs {depth} terms, the file has {}",
            file.display(),
            terms.len()
        )));
    }
    let sequence = RationalSequence::from_terms(terms);
    let mu = Modulus::identity();
    let s = cauchy_from_sequence(&sequence, depth, regular.then_some(&mu));
    let passes = cauchy_check(&s);
    let unblocked = is_unblocked(&s);
    let bounds: BTreeMap<i64, (Rational, Rational)> = s
        .modulus
        .keys()
        .filter_map(|&p| limit_bounds(&s, p).ok().map(|b| (p, b)))
        .collect();
    let verdict = |b: bool| if b { "PASS" } else { "FAIL" };
    if json {
        let nodes: Vec<String> = s.nodes.iter().map(ToString::to_string).collect();
        let modulus: Vec<_> = s
            .modulus
            .iter()
            .map(|(p, l)| {
                let (lo, hi) = &bounds[p];
                json!({ "p": p, "level": l, "limit": [Fraction(lo).to_string(), Fraction(hi).to_string()] })
            })
            .collect();
        let value = json!({
            "levels": [1, depth],
            "nodes": nodes,
            "modulus": modulus,
            "cauchy": passes,
            "unblocked": unblocked,
        });
        writeln!(out, "{value}")?;
    } else {
        writeln!(out, "subset levels=1..{depth}")?;
        for node in &s.nodes {
            writeln!(out, "{node}")?;
        }
        for (p, l) in &s.modulus {
            let (lo, hi) = &bounds[p];
            writeln!(out, "modulus p={p} level={l} limit in [{}, {}]", Fraction(lo), Fraction(hi))?;
        }
        writeln!(out, "cauchy: {}", verdict(passes))?;
        writeln!(out, "unblocked: {}", verdict(unblocked))?;
    }
    if passes {
        Ok(())
    } else {
        Err(CliError::Contract("the generated subset fails the Cauchy conditions".into()))
    }
}

fn modulus(p: &Path, q: &Path, m: u64, witness: &str, json: bool, out: &mut dyn Write) -> Result<(), CliError> {
    if m < 1 {
        return Err(usage("--m must be at least 1"));
    }
    let k0 = rational_arg(witness)?;
    if k0 <= ratio(0, 1) {
        return Err(usage("--witness must be positive"));
    }
    let p = RationalSequence::from_terms(read_sequence(p)?);
    let q = RationalSequence::from_terms(read_sequence(q)?);
    let witness = ConvergenceWitness::linear(k0);
    let mu = compute_modulus(&p, &q, &witness, m).map_err(|e| match e {
        SequenceError::Parse { .. } => usage(e),
        _ => CliError::Contract(e.to_string()),
    })?;
    let k = witness.at(&ratio(1, 6 * m as i64));
    let bound = ratio(1, 2 * m as i64);
    if json {
        let value = json!({ "m": m, "mu": mu, "k": k, "bound": Fraction(&bound).to_string() });
        writeln!(out, "{value}")?;
    } else {
        writeln!(out, "mu={mu}")?;
        writeln!(
            out,
            "verified |p(n) - q({})| <= {} for n = {mu}..{k}, so |p(n) - r| <= 1/{m} for n >= {mu}",
            3 * m,
            Fraction(&bound)
        )?;
    }
    Ok(())
}

fn riesz_demo(dim: usize, coord: usize, depth: i64, seed: u64, out: &mut dyn Write) -> Result<(), CliError> {
    if dim < 1 || !(1..=dim).contains(&coord) {
        return Err(usage("--coord must lie between 1 and --dim"));
    }
    if depth < 4 {
        return Err(usage("--depth must be at least 4"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let random_element = |rng: &mut ChaCha8Rng| {
        RieszElement::new((0..dim).map(|_| ratio(rng.gen_range(-20..=20), rng.gen_range(1..=8))).collect())
    };
    let base: Vec<RieszElement> = (0..3).map(|_| random_element(&mut rng)).collect();
    let probes = [(0, 1), (1, 2), (2, 0)];
    let scalars = [ratio(rng.gen_range(-9..=9), rng.gen_range(1..=4))];
    let x = close_for_probes(&base, &probes, &scalars).map_err(usage)?;
    let family = induced_family(coord - 1, &x, depth);

    writeln!(out, "projection onto coordinate {coord} of Q^{dim}, levels 1..{depth}")?;
    for (i, (element, t)) in x.iter().zip(&family).enumerate() {
        writeln!(out, "x{i} = {element}")?;
        writeln!(out, "{t}")?;
    }

    let sample: ChiAssignment = family
        .iter()
        .enumerate()
        .map(|(i, t)| {
            let nodes: Vec<_> = t.nodes().iter().collect();
            (i, (*nodes.choose(&mut rng).expect("nonempty truncation")).clone())
        })
        .collect();
    let member = chi_member(&x, &sample);
    let entries: Vec<String> = sample.iter().map(|(i, n)| format!("x{i}={n}")).collect();
    writeln!(out, "sample {} member={member}", entries.join(" "))?;

    // 2^-depth < eps/4
    let eps = pow2(3 - depth);
    writeln!(out, "reconstruction at eps={}", Fraction(&eps))?;
    let report = reconstruct_hom(&x, &family, &probes, &scalars, &eps).map_err(|e| CliError::Contract(e.to_string()))?;
    writeln!(out, "{report}")?;
    if member && report.passed() {
        Ok(())
    } else {
        Err(CliError::Contract("the induced family is not an o-ideal through X_T".into()))
    }
}
