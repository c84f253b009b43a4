use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "deodhar-lab", version, about = "Go-diagrams, restricted paths and Deodhar components")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: Global,
}

#[derive(Args, Debug)]
pub struct Global {
    /// Read the diagram from a file (JSON or text).
    #[arg(long = "in", global = true, value_name = "PATH")]
    pub input: Option<PathBuf>,
    /// Diagram given inline, rows separated by '/', e.g. "+++/+*+/++o".
    #[arg(long, global = true, value_name = "TEXT", conflicts_with = "input")]
    pub inline: Option<String>,
    /// Write output here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// `rat` for symbolic output, `q<p>` to evaluate at seeded values in F_p.
    #[arg(long, global = true, default_value = "rat", value_parser = parse_field)]
    pub field: Field,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Reading::Row)]
    pub reading: Reading,
    /// Size guard; `DEODHAR_LAB_GUARD` overrides the per-command default.
    #[arg(long, global = true, env = "DEODHAR_LAB_GUARD")]
    pub guard: Option<usize>,
    /// Allow heuristic, non-theorem subcommands.
    #[arg(long, global = true)]
    pub exploratory: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Svg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Reading {
    Row,
    Col,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Field {
    Rat,
    Prime(u64),
}

pub const PRIMES: [u64; 8] = [2, 3, 5, 7, 11, 13, 17, 19];

fn parse_field(s: &str) -> Result<Field, String> {
    if s == "rat" {
        return Ok(Field::Rat);
    }
    let p: u64 = s
        .strip_prefix('q')
        .and_then(|p| p.parse().ok())
        .ok_or_else(|| format!("expected rat or q<p>, got {s:?}"))?;
    if PRIMES.contains(&p) {
        Ok(Field::Prime(p))
    } else {
        Err(format!("supported primes are {PRIMES:?}"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ClassArg {
    All,
    Go,
    Le,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MatrixArg {
    All,
    /// Talaska–Williams `W_D`.
    W,
    /// Full restricted-path matrix `R̃_D`.
    Rt,
    R,
    /// Corner-weight matrix `S_D`.
    S,
    /// Dual matrix `R*_D`.
    Rstar,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Minor,
    Lgv,
    Toggle,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Conj1,
    Conj2,
}

#[derive(Args, Debug)]
pub struct ShapeArgs {
    /// Parts of λ, e.g. "3,2,1" (minimal box unless --k/--n are given).
    #[arg(long, value_delimiter = ',')]
    pub shape: Option<Vec<usize>>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List fillings of a shape, or of every shape in a k×(n−k) box.
    Enumerate {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, value_enum, default_value_t = ClassArg::Go)]
        class: ClassArg,
    },
    /// Go / Le / not Go, with the stone grid.
    Classify,
    /// Pipe routes, boundary labels, permutation and exits per cell.
    Trace,
    /// Weight matrices of the diagram.
    Weights {
        #[arg(long, value_enum, default_value_t = MatrixArg::All)]
        matrix: MatrixArg,
    },
    /// Plücker coordinates of `R_D`.
    Plucker {
        /// Column set, 1-based, e.g. "4,5,6"; all nonzero coordinates when omitted.
        #[arg(long = "I", value_delimiter = ',')]
        index: Option<Vec<usize>>,
        #[arg(long, value_enum, default_value_t = MethodArg::Minor)]
        method: MethodArg,
    },
    /// The toggling graph of restricted diagrams.
    Toggles,
    /// Dual matrices and the duality checks.
    Dual,
    /// Verify the closure relation for a crossing–uncrossing pair of D′.
    ClosureCheck {
        /// 0-based cells "r1,c1:r2,c2" of the crossing and the uncrossing.
        #[arg(long, value_parser = parse_pair)]
        pair: Option<PairArg>,
        /// Pad to the identity permutation first.
        #[arg(long, conflicts_with = "identity")]
        general: bool,
        /// Require the identity permutation and verify directly.
        #[arg(long)]
        identity: bool,
        /// Dump every factor table of the distortion.
        #[arg(long)]
        trace: bool,
    },
    /// Point count of Gr(k,n) over F_q from the Go-diagram cover.
    Census {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Draw the diagram (text = ASCII grid, svg, json).
    Render,
    /// Heuristic scan of non-adjacent pairs (needs --exploratory).
    Scan {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, value_enum, default_value_t = ModeArg::Conj1)]
        mode: ModeArg,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairArg {
    pub c: (usize, usize),
    pub c_prime: (usize, usize),
}

fn parse_cell(s: &str) -> Result<(usize, usize), String> {
    let (r, c) = s.split_once(',').ok_or_else(|| format!("expected r,c in {s:?}"))?;
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad coordinate {t:?}"));
    Ok((num(r)?, num(c)?))
}

fn parse_pair(s: &str) -> Result<PairArg, String> {
    let (a, b) = s.split_once(':').ok_or_else(|| format!("expected r1,c1:r2,c2, got {s:?}"))?;
    Ok(PairArg { c: parse_cell(a)?, c_prime: parse_cell(b)? })
}
