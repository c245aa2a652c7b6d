//! Command-line front end.
//!
//! Exit codes: 0 success, 2 usage, 3 domain precondition (frame violation,
//! odd frame), 4 the open odd×odd case, 5 verification mismatch.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use crate::decomp::{
    count_asymmetric, count_half_partitions, count_symmetric_enumerated, decompose_census,
    gw_grassmannian, CountMethod, Provenance, SpectrumDecomposition, Subject,
};
use crate::error::Error;
use crate::json::{to_json_string, CensusJson, DecompositionJson};
use crate::oracle;
use crate::rootdata::classify_box;
use crate::young::{Frame, Partition};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_OPEN_CASE: i32 = 4;
pub const EXIT_MISMATCH: i32 = 5;

#[derive(Debug, Parser)]
#[command(
    name = "gwgrass",
    version,
    about = "Young-diagram duality and Grothendieck-Witt decompositions of even Grassmannians"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the partitions in a d x e frame (decreasing lexicographic order).
    Enumerate {
        #[arg(long = "d", value_parser = clap::value_parser!(u32).range(1..))]
        d: u32,
        #[arg(long = "e", value_parser = clap::value_parser!(u32).range(1..))]
        e: u32,
        /// Only partitions of this degree.
        #[arg(long)]
        degree: Option<u64>,
        /// Only partitions fixed by the frame duality (needs e even).
        #[arg(long)]
        symmetric_only: bool,
        #[arg(long)]
        json: bool,
    },
    /// Print the dual partition e - w0(alpha).
    Dual {
        #[arg(long = "d", value_parser = clap::value_parser!(u32).range(1..))]
        d: u32,
        #[arg(long = "e", value_parser = clap::value_parser!(u32).range(1..))]
        e: u32,
        /// Comma-separated parts, e.g. 4,3,3,1.
        #[arg(long, allow_hyphen_values = true)]
        partition: Partition,
        /// Draw both diagrams inside the frame.
        #[arg(long)]
        render: bool,
        /// Use '#' and '.' for filled and empty cells.
        #[arg(long)]
        ascii: bool,
    },
    /// Decompose GW^[shift](Gr(d, d+e)) into copies of GW(k) and K(k).
    Decompose {
        #[arg(long = "d", value_parser = clap::value_parser!(u32).range(1..))]
        d: u32,
        #[arg(long = "e", value_parser = clap::value_parser!(u32).range(1..))]
        e: u32,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        shift: i64,
        #[arg(long)]
        json: bool,
        /// Recount p and q by brute force and fail on disagreement.
        #[arg(long)]
        verify: bool,
    },
    /// Sort GL_rank dominant weights with |m_i| <= bound by sign.
    Classify {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        rank: u32,
        #[arg(long)]
        bound: u32,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        shift: i64,
        #[arg(long)]
        json: bool,
    },
    /// Count half partitions of a d x e frame.
    Count {
        #[arg(long = "d", value_parser = clap::value_parser!(u32).range(1..))]
        d: u32,
        #[arg(long = "e", value_parser = clap::value_parser!(u32).range(1..))]
        e: u32,
        #[arg(long, value_enum, default_value_t = MethodArg::All)]
        method: MethodArg,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Enumerate,
    Recursive,
    ClosedSymmetric,
    All,
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Why a command did not succeed.
#[derive(Debug)]
pub enum Failure {
    Domain(Error),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type CmdResult = std::result::Result<String, Failure>;

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::OddDimension { .. } => EXIT_OPEN_CASE,
        _ => EXIT_DOMAIN,
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let code = err.exit_code();
            let text = err.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    ..Outcome::default()
                }
            } else {
                Outcome {
                    code: EXIT_USAGE,
                    stderr: text,
                    ..Outcome::default()
                }
            };
        }
    };
    match execute(cli.command) {
        Ok(stdout) => Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        },
        Err(failure) => failure_outcome(failure),
    }
}

/// Maps a failed command to its exit code and message.
pub fn failure_outcome(failure: Failure) -> Outcome {
    match failure {
        Failure::Domain(err) => Outcome {
            code: exit_code(&err),
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
        },
        Failure::Mismatch(msg) => Outcome {
            code: EXIT_MISMATCH,
            stdout: String::new(),
            stderr: format!("verification failed: {msg}\n"),
        },
    }
}

fn execute(cmd: Command) -> CmdResult {
    match cmd {
        Command::Enumerate {
            d,
            e,
            degree,
            symmetric_only,
            json,
        } => cmd_enumerate(d as usize, e as usize, degree, symmetric_only, json),
        Command::Dual {
            d,
            e,
            partition,
            render,
            ascii,
        } => cmd_dual(d as usize, e as usize, &partition, render, ascii),
        Command::Decompose {
            d,
            e,
            shift,
            json,
            verify,
        } => cmd_decompose(d as usize, e as usize, shift, json, verify),
        Command::Classify {
            rank,
            bound,
            shift,
            json,
        } => Ok(cmd_classify(rank as usize, bound, shift, json)),
        Command::Count { d, e, method } => cmd_count(d as usize, e as usize, method),
    }
}

fn cmd_enumerate(
    d: usize,
    e: usize,
    degree: Option<u64>,
    symmetric_only: bool,
    json: bool,
) -> CmdResult {
    let frame = Frame::new(d, e)?;
    if symmetric_only {
        frame.require_even()?;
    }
    let iter = match degree {
        Some(k) => frame.partitions_of_degree(k),
        None => frame.partitions(),
    };
    let mut selected = Vec::new();
    for alpha in iter {
        if !symmetric_only || frame.is_symmetric(&alpha)? {
            selected.push(alpha);
        }
    }
    if json {
        let rows: Vec<&[u32]> = selected.iter().map(Partition::parts).collect();
        return Ok(serde_json::to_string(&rows).expect("integer arrays serialize") + "\n");
    }
    Ok(selected.iter().map(|a| format!("{a}\n")).collect())
}

/// Two glyphs for filled and empty cells of a frame.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Glyphs {
    pub filled: char,
    pub empty: char,
}

impl Glyphs {
    pub const UNICODE: Glyphs = Glyphs {
        filled: '■',
        empty: '□',
    };
    pub const ASCII: Glyphs = Glyphs {
        filled: '#',
        empty: '.',
    };
}

/// A Young diagram drawn inside its frame, one string per row, top row first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderedDiagram {
    pub lines: Vec<String>,
}

impl RenderedDiagram {
    pub fn new(alpha: &Partition, frame: Frame, glyphs: Glyphs) -> Result<Self, Error> {
        if !frame.contains(alpha) {
            return Err(Error::FrameViolation {
                partition: alpha.to_string(),
                d: frame.rows(),
                e: frame.cols(),
            });
        }
        let lines = (0..frame.rows())
            .map(|i| {
                let filled = alpha.part(i) as usize;
                (0..frame.cols())
                    .map(|j| {
                        if j < filled {
                            glyphs.filled
                        } else {
                            glyphs.empty
                        }
                    })
                    .collect()
            })
            .collect();
        Ok(Self { lines })
    }

    /// Places `self` and `other` next to each other, separated by `gap` spaces.
    pub fn beside(&self, other: &RenderedDiagram, gap: usize) -> Vec<String> {
        self.lines
            .iter()
            .zip(&other.lines)
            .map(|(a, b)| format!("{a}{}{b}", " ".repeat(gap)))
            .collect()
    }
}

fn cmd_dual(d: usize, e: usize, alpha: &Partition, render: bool, ascii: bool) -> CmdResult {
    let frame = Frame::new(d, e)?;
    let dual = frame.dual(alpha)?;
    if !render {
        return Ok(format!("{}\n", dual.to_csv()));
    }
    let glyphs = if ascii {
        Glyphs::ASCII
    } else {
        Glyphs::UNICODE
    };
    let left = RenderedDiagram::new(alpha, frame, glyphs)?;
    let right = RenderedDiagram::new(&dual, frame, glyphs)?;
    let mut out = String::new();
    for line in left.beside(&right, 4) {
        writeln!(out, "{line}").unwrap();
    }
    writeln!(out).unwrap();
    writeln!(out, "alpha = {}", alpha.padded(d).to_csv()).unwrap();
    writeln!(out, "dual  = {}", dual.to_csv()).unwrap();
    Ok(out)
}

/// Recounts a Grassmannian decomposition with the brute-force oracle.
pub fn verify_decomposition(decomp: &SpectrumDecomposition) -> std::result::Result<(), Failure> {
    let Subject::Grassmannian { d, e, transposed } = decomp.subject else {
        return Err(Failure::Mismatch("not a Grassmannian decomposition".into()));
    };
    let (rows, cols) = if transposed { (e, d) } else { (d, e) };
    let p = oracle::brute_symmetric_count(rows, cols)?;
    let total = oracle::brute_enumerate_partitions(rows, cols)?.len() as u64;
    let q = (total - p) / 2;
    let (got_p, got_q) = (decomp.gw_count(), decomp.k_count());
    if got_p != BigUint::from(p) || got_q != BigUint::from(q) {
        return Err(Failure::Mismatch(format!(
            "expected p={p}, q={q}; computed p={got_p}, q={got_q}"
        )));
    }
    Ok(())
}

fn cmd_decompose(d: usize, e: usize, shift: i64, json: bool, verify: bool) -> CmdResult {
    let decomp = gw_grassmannian(d, e, shift)?;
    if verify {
        verify_decomposition(&decomp)?;
    }
    if json {
        return Ok(to_json_string(&DecompositionJson::from(&decomp)) + "\n");
    }
    let (p, q) = (decomp.gw_count(), decomp.k_count());
    let mut out = String::new();
    writeln!(
        out,
        "GW^[{shift}](Gr({d},{n})) = {p}·GW^[{shift}](k) ⊕ {q}·K(k)",
        n = d + e
    )
    .unwrap();
    if let Subject::Grassmannian {
        transposed: true, ..
    } = decomp.subject
    {
        writeln!(
            out,
            "computed in the transposed {e}x{d} frame (Gr({d},{n}) = Gr({e},{n}))",
            n = d + e
        )
        .unwrap();
    }
    if verify {
        writeln!(out, "verified against brute-force enumeration").unwrap();
    }
    if decomp.provenance.is_empty() {
        writeln!(
            out,
            "provenance omitted: {} generators",
            decomp.generator_count()
        )
        .unwrap();
        return Ok(out);
    }
    writeln!(out, "provenance:").unwrap();
    for label in &decomp.provenance {
        match label {
            Provenance::SelfDual(a) => writeln!(out, "  GW  {a}").unwrap(),
            Provenance::DualPair(a, b) => writeln!(out, "  K   {{{a}, {b}}}").unwrap(),
            other => writeln!(out, "  {other:?}").unwrap(),
        }
    }
    Ok(out)
}

fn cmd_classify(rank: usize, bound: u32, shift: i64, json: bool) -> String {
    let census = classify_box(rank, bound);
    let decomp = decompose_census(&census, shift);
    if json {
        return to_json_string(&CensusJson::new(&census, &decomp)) + "\n";
    }
    let list = |ws: Vec<String>| {
        if ws.is_empty() {
            "none".to_string()
        } else {
            ws.join(" ")
        }
    };
    let mut out = String::new();
    writeln!(
        out,
        "GL_{rank} dominant weights with |m_i| <= {bound}: {} weights, {} orbits",
        census.weight_count(),
        census.orbit_count()
    )
    .unwrap();
    writeln!(
        out,
        "C0+ (symmetric):      {}",
        list(census.symmetric.iter().map(ToString::to_string).collect())
    )
    .unwrap();
    writeln!(
        out,
        "C0- (anti-symmetric): {}",
        list(
            census
                .antisymmetric
                .iter()
                .map(ToString::to_string)
                .collect()
        )
    )
    .unwrap();
    writeln!(
        out,
        "D (dual pairs):       {}",
        list(
            census
                .dual_pairs
                .iter()
                .map(|(a, b)| format!("{{{a}, {b}}}"))
                .collect()
        )
    )
    .unwrap();
    let gw: Vec<String> = decomp
        .gw_shifts()
        .into_iter()
        .map(|(s, n)| format!("{n}·GW^[{s}](k)"))
        .collect();
    writeln!(
        out,
        "truncated GW^[{shift}]_GL_{rank}(k) = {} ⊕ {}·K(k)",
        list(gw),
        decomp.k_count()
    )
    .unwrap();
    out
}

fn cmd_count(d: usize, e: usize, method: MethodArg) -> CmdResult {
    let single = |m| count_half_partitions(d, e, m).map(|n| format!("{n}\n"));
    match method {
        MethodArg::Enumerate => return Ok(single(CountMethod::Enumerate)?),
        MethodArg::Recursive => return Ok(single(CountMethod::Recursive)?),
        MethodArg::ClosedSymmetric => return Ok(single(CountMethod::ClosedSymmetric)?),
        MethodArg::All => {}
    }
    let frame = Frame::new(d, e)?;
    let enumerated = count_half_partitions(d, e, CountMethod::Enumerate)?;
    let recursive = count_half_partitions(d, e, CountMethod::Recursive)?;
    let closed = count_half_partitions(d, e, CountMethod::ClosedSymmetric)?;
    let symmetric = BigUint::from(count_symmetric_enumerated(frame)?);
    let asymmetric = count_asymmetric(frame)?;

    let mut out = String::new();
    writeln!(out, "half partitions (enumerate): {enumerated}").unwrap();
    writeln!(out, "half partitions (recursive): {recursive}").unwrap();
    writeln!(out, "symmetric (closed form):     {closed}").unwrap();
    writeln!(out, "symmetric (enumerate):       {symmetric}").unwrap();
    writeln!(out, "asymmetric:                  {asymmetric}").unwrap();
    let agree = enumerated == recursive && closed == symmetric && asymmetric % 2 == 0;
    writeln!(out, "agreement: {}", if agree { "yes" } else { "no" }).unwrap();
    if &enumerated % 2u32 == BigUint::from(1u32) {
        writeln!(
            out,
            "note: the total is odd; only the asymmetric count is forced to be even"
        )
        .unwrap();
    }
    if !agree {
        return Err(Failure::Mismatch(out));
    }
    Ok(out)
}
