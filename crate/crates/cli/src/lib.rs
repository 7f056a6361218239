//! Subcommands of the `projdec` binary. Each returns the text to print and
//! an exit status; `main` only parses arguments and prints.

use std::fmt::Write as _;
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use itertools::Itertools;
use projdec::bitlin::{BinaryLinearCode, BitVector, CosetTable};
use projdec::decoder::{Branch, DecoderContext};
use projdec::gf4::format_matrix;
use projdec::projection::{construct, to_array, Variant};
use projdec::quaternary::{c4_10, c4_9, QuaternaryCode};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, ValueEnum, Serialize, Deserialize)]
pub enum CodeId {
    #[value(name = "o36")]
    #[serde(rename = "o36")]
    O36,
    #[value(name = "e36")]
    #[serde(rename = "e36")]
    E36,
    #[value(name = "o40")]
    #[serde(rename = "o40")]
    O40,
    #[value(name = "e40")]
    #[serde(rename = "e40")]
    E40,
    #[value(name = "c4-9")]
    #[serde(rename = "c4-9")]
    C4_9,
    #[value(name = "c4-10")]
    #[serde(rename = "c4-10")]
    C4_10,
}

impl CodeId {
    pub fn name(self) -> &'static str {
        match self {
            CodeId::O36 => "o36",
            CodeId::E36 => "e36",
            CodeId::O40 => "o40",
            CodeId::E40 => "e40",
            CodeId::C4_9 => "c4-9",
            CodeId::C4_10 => "c4-10",
        }
    }

    pub fn c4(self) -> QuaternaryCode {
        match self {
            CodeId::O36 | CodeId::E36 | CodeId::C4_9 => c4_9(),
            _ => c4_10(),
        }
    }

    /// `None` for the GF(4) codes.
    pub fn variant(self) -> Option<Variant> {
        match self {
            CodeId::O36 | CodeId::O40 => Some(Variant::O),
            CodeId::E36 | CodeId::E40 => Some(Variant::E),
            CodeId::C4_9 | CodeId::C4_10 => None,
        }
    }

    pub fn decoder(self) -> Result<DecoderContext, CliError> {
        let variant = self.variant().ok_or_else(|| {
            CliError::Usage(format!(
                "{} is a GF(4) code; use o36, e36, o40 or e40",
                self.name()
            ))
        })?;
        Ok(DecoderContext::new(self.c4(), variant)?)
    }

    pub fn binary(self) -> Result<BinaryLinearCode, CliError> {
        Ok(self.decoder()?.code().clone())
    }
}

impl FromStr for CodeId {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        <CodeId as ValueEnum>::from_str(s, true)
            .map_err(|_| CliError::Usage(format!("unknown code {s:?}")))
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Code(#[from] projdec::Error),
    #[error("cannot serialize report: {0}")]
    Json(#[from] serde_json::Error),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Success,
    /// Decode or verification failure.
    Failure,
}

impl Status {
    pub fn exit_code(self) -> u8 {
        match self {
            Status::Success => 0,
            Status::Failure => 1,
        }
    }
}

/// Exit code for a [`CliError`].
pub const USAGE_EXIT: u8 = 2;

#[derive(Debug)]
pub struct Output {
    pub stdout: String,
    pub status: Status,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output {
            stdout,
            status: Status::Success,
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "projdec",
    version,
    about = "Projection decoding of the [36,19,8] and [40,22,8] codes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

/// The code, given positionally or with `--code`.
#[derive(Args, Debug, Clone)]
pub struct CodeArg {
    #[arg(value_name = "CODE")]
    positional: Option<CodeId>,
    #[arg(long = "code", value_name = "CODE", conflicts_with = "positional")]
    flag: Option<CodeId>,
}

impl CodeArg {
    pub fn resolve(&self) -> Result<CodeId, CliError> {
        self.flag.or(self.positional).ok_or_else(|| {
            CliError::Usage("no code given (o36, e36, o40, e40, c4-9, c4-10)".into())
        })
    }
}

/// A code and a word: `CODE WORD`, or `--code CODE WORD`.
#[derive(Args, Debug, Clone)]
pub struct CodeWordArgs {
    #[arg(long = "code", value_name = "CODE")]
    flag: Option<CodeId>,
    /// `[CODE] WORD`; spaces inside a quoted word are ignored.
    #[arg(value_name = "ARGS", num_args = 1..=2, required = true)]
    positional: Vec<String>,
}

impl CodeWordArgs {
    pub fn resolve(&self) -> Result<(CodeId, String), CliError> {
        match (self.flag, self.positional.as_slice()) {
            (Some(code), [word]) => Ok((code, word.clone())),
            (None, [code, word]) => Ok((code.parse()?, word.clone())),
            (Some(_), _) => Err(CliError::Usage("with --code, give only the word".into())),
            (None, _) => Err(CliError::Usage("expected CODE WORD".into())),
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print a generator matrix and the code parameters.
    Gen {
        #[command(flatten)]
        code: CodeArg,
        /// Also compute the minimum distance by enumeration.
        #[arg(long)]
        mindist: bool,
        #[arg(long)]
        json: bool,
    },
    /// Print the weight distribution.
    Wdist {
        #[command(flatten)]
        code: CodeArg,
        #[arg(long)]
        json: bool,
    },
    /// Encode a k-bit message.
    Encode {
        #[command(flatten)]
        args: CodeWordArgs,
    },
    /// Decode a received word of length n.
    Decode {
        #[command(flatten)]
        args: CodeWordArgs,
        /// Print the received and corrected arrays.
        #[arg(long)]
        trace: bool,
        /// Cross-check against a coset-leader decoder.
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        json: bool,
    },
    /// Decode every error pattern up to a weight on sampled codewords.
    Exhaust {
        #[command(flatten)]
        code: CodeArg,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u8).range(0..=3))]
        max_weight: u8,
        /// Random codewords in addition to the zero codeword.
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Plant errors of a fixed weight on random codewords and decode.
    Simulate {
        #[command(flatten)]
        code: CodeArg,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        /// Number of bit errors planted per trial.
        #[arg(long, default_value_t = 3)]
        weight: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Report the mean decode time; the report then varies between runs.
        #[arg(long)]
        timing: bool,
        #[arg(long)]
        json: bool,
    },
    /// Print the minimum distance.
    Mindist {
        #[command(flatten)]
        code: CodeArg,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenReport {
    pub code: CodeId,
    pub n: usize,
    /// Dimension, or `log2` of the size for the additive GF(4) codes.
    pub k: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub d: Option<usize>,
    pub generator: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WdistReport {
    pub code: CodeId,
    pub n: usize,
    pub k: usize,
    /// Nonzero `(weight, count)` pairs.
    pub distribution: Vec<(usize, u64)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecodeReport {
    pub code: CodeId,
    pub n: usize,
    pub k: usize,
    pub received: String,
    pub decoded: Option<String>,
    /// 1-based coordinates.
    pub error_positions: Vec<usize>,
    pub branch: Option<Branch>,
    pub syndrome: String,
    pub p: usize,
    pub error_weight: Option<usize>,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub oracle_agrees: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExhaustReport {
    pub code: CodeId,
    pub max_weight: usize,
    pub samples: usize,
    pub seed: u64,
    pub codewords: usize,
    pub patterns: usize,
    pub decodes: usize,
    pub successes: usize,
    pub oracle_mismatches: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SimReport {
    pub code: CodeId,
    pub trials: u64,
    pub planted_weight: usize,
    pub successes: u64,
    pub failures: u64,
    pub miscorrections: u64,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub mean_decode_ns: Option<f64>,
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Gen {
            code,
            mindist,
            json,
        } => {
            let report = gen(code.resolve()?, *mindist)?;
            Ok(Output::ok(if *json {
                to_json(&report)?
            } else {
                gen_text(&report)
            }))
        }
        Command::Wdist { code, json } => {
            let report = wdist(code.resolve()?)?;
            Ok(Output::ok(if *json {
                to_json(&report)?
            } else {
                wdist_text(&report)
            }))
        }
        Command::Encode { args } => {
            let (code, message) = args.resolve()?;
            Ok(Output::ok(format!("{}\n", encode(code, &message)?)))
        }
        Command::Decode {
            args,
            trace,
            oracle,
            json,
        } => {
            let (code, word) = args.resolve()?;
            decode(code, &word, *trace, *oracle, *json)
        }
        Command::Exhaust {
            code,
            max_weight,
            samples,
            seed,
            json,
        } => {
            let report = exhaust(code.resolve()?, usize::from(*max_weight), *samples, *seed)?;
            let status = if report.successes == report.decodes && report.oracle_mismatches == 0 {
                Status::Success
            } else {
                Status::Failure
            };
            let stdout = if *json {
                to_json(&report)?
            } else {
                exhaust_text(&report)
            };
            Ok(Output { stdout, status })
        }
        Command::Simulate {
            code,
            trials,
            weight,
            seed,
            timing,
            json,
        } => {
            let report = simulate(code.resolve()?, *trials, *weight, *seed, *timing)?;
            Ok(Output::ok(if *json {
                to_json(&report)?
            } else {
                simulate_text(&report)
            }))
        }
        Command::Mindist { code } => {
            let code = code.resolve()?;
            let d = match code.variant() {
                Some(_) => code.binary()?.min_distance()?,
                None => code.c4().min_distance()?,
            };
            Ok(Output::ok(format!("{d}\n")))
        }
    }
}

fn to_json<T: Serialize>(report: &T) -> Result<String, CliError> {
    Ok(serde_json::to_string_pretty(report)? + "\n")
}

/// Parses a `0`/`1` word of exactly `len` bits.
pub fn parse_word(text: &str, len: usize) -> Result<BitVector, CliError> {
    let word: BitVector = text
        .parse()
        .map_err(|e| CliError::Usage(format!("bad word: {e}")))?;
    if word.len() != len {
        return Err(CliError::Usage(format!(
            "word has {} bits, expected {len}",
            word.len()
        )));
    }
    Ok(word)
}

pub fn gen(code: CodeId, with_distance: bool) -> Result<GenReport, CliError> {
    Ok(match code.variant() {
        Some(variant) => {
            let binary = construct(&code.c4(), variant)?;
            GenReport {
                code,
                n: binary.n(),
                k: binary.k(),
                d: with_distance.then(|| binary.min_distance()).transpose()?,
                generator: binary
                    .generator()
                    .rows()
                    .iter()
                    .map(|r| r.to_grouped_string(4))
                    .collect(),
            }
        }
        None => {
            let c4 = code.c4();
            GenReport {
                code,
                n: c4.m(),
                k: c4.r(),
                d: with_distance.then(|| c4.min_distance()).transpose()?,
                generator: format_matrix(c4.generators())
                    .lines()
                    .map(str::to_owned)
                    .collect(),
            }
        }
    })
}

fn gen_text(r: &GenReport) -> String {
    let mut out = format!("code {}\n", r.code.name());
    if r.code.variant().is_some() {
        let _ = writeln!(out, "n = {}\nk = {}", r.n, r.k);
    } else {
        let _ = writeln!(out, "m = {}\nsize = 2^{}", r.n, r.k);
    }
    if let Some(d) = r.d {
        let _ = writeln!(out, "d = {d}");
    }
    out.push('\n');
    for row in &r.generator {
        let _ = writeln!(out, "{row}");
    }
    out
}

pub fn wdist(code: CodeId) -> Result<WdistReport, CliError> {
    let (n, k, dist) = match code.variant() {
        Some(_) => {
            let b = code.binary()?;
            (b.n(), b.k(), b.weight_distribution()?)
        }
        None => {
            let c4 = code.c4();
            (c4.m(), c4.r(), c4.weight_distribution()?)
        }
    };
    Ok(WdistReport {
        code,
        n,
        k,
        distribution: dist.nonzero().collect(),
    })
}

fn wdist_text(r: &WdistReport) -> String {
    let mut out = String::from("weight\tcount\n");
    for (i, a) in &r.distribution {
        let _ = writeln!(out, "{i}\t{a}");
    }
    out
}

pub fn encode(code: CodeId, message: &str) -> Result<BitVector, CliError> {
    let binary = code.binary()?;
    let msg = parse_word(message, binary.k())?;
    Ok(binary.encode(&msg)?)
}

pub fn decode_report(
    ctx: &DecoderContext,
    code: CodeId,
    y: &BitVector,
    oracle: bool,
) -> DecodeReport {
    let array = to_array(y).expect("length is a multiple of 4");
    let profile = array.parity_profile();
    let syndrome = ctx
        .c4()
        .syndrome(&array.project())
        .expect("projection has length m");
    let outcome = ctx.decode(y);
    let oracle_agrees = oracle.then(|| {
        let table = CosetTable::build_up_to(ctx.code(), projdec::decoder::CORRECTION_RADIUS)
            .expect("redundancy is within the table budget");
        table.decode(ctx.code(), y) == outcome.as_ref().ok().map(|d| d.codeword)
    });
    let mut report = DecodeReport {
        code,
        n: ctx.n(),
        k: ctx.code().k(),
        received: y.to_string(),
        decoded: None,
        error_positions: vec![],
        branch: None,
        syndrome: syndrome.compact(),
        p: profile.p,
        error_weight: None,
        status: "success".into(),
        reason: None,
        oracle_agrees,
    };
    match outcome {
        Ok(d) => {
            report.decoded = Some(d.codeword.to_string());
            report.error_positions = d.error.ones().map(|i| i + 1).collect();
            report.branch = Some(d.trace.branch);
            report.error_weight = Some(d.trace.error_weight);
        }
        Err(f) => {
            report.status = "failure".into();
            report.reason = Some(f.reason().into());
        }
    }
    report
}

fn decode(
    code: CodeId,
    word: &str,
    trace: bool,
    oracle: bool,
    json: bool,
) -> Result<Output, CliError> {
    let ctx = code.decoder()?;
    let y = parse_word(word, ctx.n())?;
    let report = decode_report(&ctx, code, &y, oracle);
    let ok = report.decoded.is_some() && report.oracle_agrees != Some(false);
    let mut out = String::new();
    if trace {
        match ctx.decode(&y) {
            Ok(d) => out.push_str(&d.render_trace()),
            Err(f) => {
                let _ = write!(
                    out,
                    "received:\n{}\np = {}\nsyndrome s = {}\n{f}\n",
                    to_array(&y).expect("checked length").render(),
                    report.p,
                    report.syndrome
                );
            }
        }
        out.push('\n');
    }
    if json {
        out.push_str(&to_json(&report)?);
    } else {
        match (&report.decoded, &report.reason) {
            (Some(c), _) => {
                let _ = writeln!(out, "{c}");
            }
            (None, reason) => {
                let _ = writeln!(
                    out,
                    "decoding failed: {}",
                    reason.as_deref().unwrap_or("unknown")
                );
            }
        }
        if report.oracle_agrees == Some(false) {
            out.push_str("oracle disagrees\n");
        }
    }
    Ok(Output {
        stdout: out,
        status: if ok { Status::Success } else { Status::Failure },
    })
}

/// Codeword for trial or sample `index` of a seeded run. Each index gets
/// its own ChaCha stream, so results do not depend on scheduling.
fn rng_for(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn random_codeword(code: &BinaryLinearCode, rng: &mut ChaCha8Rng) -> BitVector {
    let msg =
        BitVector::from_bits(rng.gen::<u64>() & ((1 << code.k()) - 1), code.k()).expect("k <= 64");
    code.encode(&msg).expect("message has length k")
}

pub fn exhaust(
    code: CodeId,
    max_weight: usize,
    samples: usize,
    seed: u64,
) -> Result<ExhaustReport, CliError> {
    if max_weight > projdec::decoder::CORRECTION_RADIUS {
        return Err(CliError::Usage(format!(
            "--max-weight {max_weight} is above 3"
        )));
    }
    let ctx = code.decoder()?;
    let binary = ctx.code();
    let table = CosetTable::build_up_to(binary, max_weight)?;
    let n = ctx.n();
    let patterns: Vec<BitVector> = (0..=max_weight)
        .flat_map(|w| (0..n).combinations(w))
        .map(|pos| BitVector::from_positions(&pos, n))
        .collect();
    let mut words = vec![BitVector::zeros(n)];
    words.extend((0..samples as u64).map(|i| random_codeword(binary, &mut rng_for(seed, i))));
    let (successes, oracle_mismatches) = words
        .par_iter()
        .map(|c| {
            patterns.iter().fold((0, 0), |(ok, bad), e| {
                let y = *c ^ *e;
                let ours = ctx.decode(&y).ok().map(|d| d.codeword);
                (
                    ok + usize::from(ours == Some(*c)),
                    bad + usize::from(table.decode(binary, &y) != ours),
                )
            })
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    Ok(ExhaustReport {
        code,
        max_weight,
        samples,
        seed,
        codewords: words.len(),
        patterns: patterns.len(),
        decodes: words.len() * patterns.len(),
        successes,
        oracle_mismatches,
    })
}

fn exhaust_text(r: &ExhaustReport) -> String {
    format!(
        "code {}\ncodewords {} (zero + {} sampled, seed {})\npatterns {} (weight <= {})\ndecodes {}\nsuccesses {}\noracle mismatches {}\n",
        r.code.name(),
        r.codewords,
        r.samples,
        r.seed,
        r.patterns,
        r.max_weight,
        r.decodes,
        r.successes,
        r.oracle_mismatches
    )
}

pub fn simulate(
    code: CodeId,
    trials: u64,
    weight: usize,
    seed: u64,
    timing: bool,
) -> Result<SimReport, CliError> {
    let ctx = code.decoder()?;
    let n = ctx.n();
    if weight > n {
        return Err(CliError::Usage(format!(
            "--weight {weight} exceeds the length {n}"
        )));
    }
    let (successes, failures, miscorrections, nanos) = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = rng_for(seed, t);
            let c = random_codeword(ctx.code(), &mut rng);
            let positions = sample(&mut rng, n, weight).into_vec();
            let y = c ^ BitVector::from_positions(&positions, n);
            let start = timing.then(Instant::now);
            let outcome = ctx.decode(&y);
            let nanos = start.map_or(0, |s| s.elapsed().as_nanos());
            match outcome {
                Ok(d) if d.codeword == c => (1, 0, 0, nanos),
                Ok(_) => (0, 0, 1, nanos),
                Err(_) => (0, 1, 0, nanos),
            }
        })
        .reduce(
            || (0, 0, 0, 0),
            |a, b| (a.0 + b.0, a.1 + b.1, a.2 + b.2, a.3 + b.3),
        );
    let mean_decode_ns = (timing && trials > 0).then(|| nanos as f64 / trials as f64);
    Ok(SimReport {
        code,
        trials,
        planted_weight: weight,
        successes,
        failures,
        miscorrections,
        seed,
        mean_decode_ns,
    })
}

fn simulate_text(r: &SimReport) -> String {
    let mut out = format!(
        "code {}\ntrials {}\nplanted weight {}\nseed {}\nsuccesses {}\nfailures {}\nmiscorrections {}\n",
        r.code.name(),
        r.trials,
        r.planted_weight,
        r.seed,
        r.successes,
        r.failures,
        r.miscorrections
    );
    if let Some(ns) = r.mean_decode_ns {
        let _ = writeln!(out, "mean decode time {ns:.0} ns");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("projdec").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn command_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn code_ids_round_trip() {
        for id in CodeId::value_variants() {
            assert_eq!(id.name().parse::<CodeId>().unwrap(), *id);
            assert_eq!(
                serde_json::to_string(id).unwrap(),
                format!("\"{}\"", id.name())
            );
        }
        assert!("o37".parse::<CodeId>().is_err());
    }

    #[test]
    fn code_may_be_positional_or_flagged() {
        for args in [
            &["decode", "e36", "0101"][..],
            &["decode", "--code", "e36", "0101"],
        ] {
            let Command::Decode { args, .. } = parse(args).command else {
                panic!()
            };
            assert_eq!(args.resolve().unwrap(), (CodeId::E36, "0101".to_string()));
        }
        let Command::Mindist { code } = parse(&["mindist", "--code", "c4-9"]).command else {
            panic!()
        };
        assert_eq!(code.resolve().unwrap(), CodeId::C4_9);
        let Command::Mindist { code } = parse(&["mindist"]).command else {
            panic!()
        };
        assert!(matches!(code.resolve(), Err(CliError::Usage(_))));
    }

    #[test]
    fn simulation_does_not_depend_on_thread_count() {
        let serial = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap();
        let a = serial.install(|| simulate(CodeId::O36, 500, 5, 3, false).unwrap());
        let b = simulate(CodeId::O36, 500, 5, 3, false).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.successes + a.failures + a.miscorrections, 500);
    }

    #[test]
    fn exhaust_counts() {
        let r = exhaust(CodeId::E40, 2, 3, 1).unwrap();
        assert_eq!((r.codewords, r.patterns), (4, 1 + 40 + 780));
        assert_eq!((r.successes, r.oracle_mismatches), (r.decodes, 0));
    }
}
