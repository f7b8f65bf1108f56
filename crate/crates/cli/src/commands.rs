//! Command implementations. Each returns the text to print and the exit
//! code, so the binary only does argument parsing and I/O.

use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use coxeter_boundary::boundary::{
    dyadic, format_decimal, liminf_experiment, liminf_witness, limsup_profile, limsup_scan, obstruction_profile,
    obstruction_scan, MetricSeries, Ray, SimError, PROXY_DISCLAIMER,
};
use coxeter_boundary::decision::{
    boundary_size_class, check_theorem71_condition, decide, BoundaryClass, Certificate, DecisionError, Outcome,
    Verdict,
};
use coxeter_boundary::racg::is_hyperbolic_racg;
use coxeter_boundary::{CoxeterSystem, Generator, SystemError, Word};
use num_rational::BigRational;
use thiserror::Error;

use crate::system_file::{ParseError, SystemFile};

pub const EXIT_SCRAMBLED: u8 = 0;
pub const EXIT_NOT_SCRAMBLED: u8 = 1;
pub const EXIT_UNDECIDED: u8 = 2;
pub const EXIT_USAGE: u8 = 64;
pub const EXIT_DATA: u8 = 65;
pub const EXIT_NO_INPUT: u8 = 66;
pub const EXIT_CANT_CREATE: u8 = 73;

/// Prefix length of the rays used to pick `x` when `--x` is not given.
pub const WITNESS_PREFIX: usize = 8;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Parse { path: PathBuf, source: ParseError },
    #[error("cannot read {}: {source}", path.display())]
    Read { path: PathBuf, source: io::Error },
    #[error("cannot write {}: {source}", path.display())]
    Write { path: PathBuf, source: io::Error },
    #[error("{0}")]
    Word(SystemError),
    #[error("no ray named {0:?} in the system file")]
    UnknownRay(String),
    #[error("{0}")]
    Sim(#[from] SimError),
    #[error("{0}")]
    Decision(#[from] DecisionError),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse { .. } | CliError::Word(_) | CliError::UnknownRay(_) => EXIT_USAGE,
            CliError::Read { .. } => EXIT_NO_INPUT,
            CliError::Write { .. } => EXIT_CANT_CREATE,
            CliError::Sim(_) | CliError::Decision(_) => EXIT_DATA,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub code: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }
}

pub fn load(path: &Path) -> Result<SystemFile, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })?;
    text.parse().map_err(|source| CliError::Parse {
        path: path.to_path_buf(),
        source,
    })
}

fn word(sys: &CoxeterSystem, text: &str) -> Result<Word, CliError> {
    sys.parse_word(text).map_err(CliError::Word)
}

fn generator(sys: &CoxeterSystem, label: &str) -> Result<Generator, CliError> {
    sys.index_of(label)
        .ok_or_else(|| CliError::Word(SystemError::UnknownGenerator(label.to_string())))
}

fn ray<'a>(file: &'a SystemFile, name: &str) -> Result<&'a Ray, CliError> {
    file.ray(name).ok_or_else(|| CliError::UnknownRay(name.to_string()))
}

/// Exit status for a verdict: 0 scrambled, 1 not scrambled, 2 when the
/// boundary is too small or the question is open.
pub fn verdict_exit_code(verdict: &Verdict) -> u8 {
    match (&verdict.outcome, &verdict.certificate) {
        (_, Certificate::BoundaryTooSmall) => EXIT_UNDECIDED,
        (Outcome::Scrambled, _) => EXIT_SCRAMBLED,
        (Outcome::NotScrambled, _) => EXIT_NOT_SCRAMBLED,
        (Outcome::Unknown, _) => EXIT_UNDECIDED,
    }
}

pub fn describe_certificate(sys: &CoxeterSystem, certificate: &Certificate) -> String {
    match certificate {
        Certificate::IrreducibleTilde(t) => format!("irreducible S~ = {}", sys.format_subset(*t)),
        Certificate::ProductObstruction(a, b) => format!(
            "product obstruction W_S~ = W_{} x W_{}, both infinite",
            sys.format_subset(*a),
            sys.format_subset(*b)
        ),
        Certificate::ReflectionCriterion(s) => format!("generator {} has finite centralizer", sys.label(*s)),
        Certificate::Theorem71Witness { s0, t0, k } => format!(
            "contraction condition holds for s0 = {}, t0 = {}, K = {k}",
            sys.label(*s0),
            sys.label(*t0)
        ),
        Certificate::BoundaryTooSmall => "boundary has at most two points".into(),
        Certificate::OutOfScope(why) => format!("out of scope: {why}"),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn analyze(path: &Path) -> Result<Output, CliError> {
    let file = load(path)?;
    let sys = &file.system;
    let mut out = String::new();
    writeln!(out, "rank: {}", sys.rank()).unwrap();
    writeln!(out, "right-angled: {}", yes_no(sys.is_right_angled())).unwrap();
    let components: Vec<String> = sys.irreducible_components().into_iter().map(|c| sys.format_subset(c)).collect();
    writeln!(out, "irreducible components: {}", components.join(" ")).unwrap();
    writeln!(out, "S~: {}", sys.format_subset(sys.tilde_s())).unwrap();
    let class = boundary_size_class(sys);
    writeln!(out, "boundary: {class}").unwrap();
    if sys.is_right_angled() {
        let hyperbolic = is_hyperbolic_racg(sys).expect("right-angled");
        writeln!(out, "hyperbolic: {}", yes_no(hyperbolic)).unwrap();
        if class == BoundaryClass::MoreThanTwo {
            writeln!(out, "expansive: {}", yes_no(hyperbolic)).unwrap();
        }
    } else {
        writeln!(out, "hyperbolic: not determined (not right-angled)").unwrap();
    }
    let verdict = decide(sys);
    writeln!(out, "verdict: {}", verdict.outcome).unwrap();
    writeln!(out, "certificate: {}", describe_certificate(sys, &verdict.certificate)).unwrap();
    if sys.is_right_angled() && class == BoundaryClass::MoreThanTwo {
        writeln!(out, "minimal: {} (equivalent for right-angled systems)", yes_no(verdict.outcome == Outcome::Scrambled)).unwrap();
    }
    Ok(Output {
        text: out,
        code: verdict_exit_code(&verdict),
    })
}

pub fn reduce(path: &Path, text: &str) -> Result<Output, CliError> {
    let file = load(path)?;
    let sys = &file.system;
    let reduced = sys.reduce(&word(sys, text)?);
    Ok(Output::ok(format!("{}\nlength: {}\n", sys.format_word(&reduced), reduced.len())))
}

pub fn descent(path: &Path, text: &str) -> Result<Output, CliError> {
    let file = load(path)?;
    let sys = &file.system;
    let descents = sys.descent_set(&word(sys, text)?);
    Ok(Output::ok(format!("{}\n", sys.format_subset(descents))))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Liminf,
    Limsup,
    Obstruction,
}

#[derive(Clone, Debug)]
pub struct SimulateArgs {
    pub path: PathBuf,
    pub ray_a: String,
    pub ray_b: String,
    pub mode: Mode,
    pub depth: Option<usize>,
    pub radius: Option<usize>,
    pub k_max: Option<usize>,
    pub s0: Option<String>,
    pub t0: Option<String>,
    pub x: Option<String>,
    pub out: Option<PathBuf>,
}

fn show(d: &BigRational) -> String {
    format!("{} ({d})", format_decimal(d, 12))
}

pub fn simulate(args: &SimulateArgs) -> Result<Output, CliError> {
    let file = load(&args.path)?;
    let sys = &file.system;
    let a = ray(&file, &args.ray_a)?;
    let b = ray(&file, &args.ray_b)?;
    let mut summary = String::new();
    let series: MetricSeries = match args.mode {
        Mode::Liminf => {
            let depth = args.depth.unwrap_or(32);
            let k_max = args.k_max.unwrap_or(40);
            let s0 = match &args.s0 {
                Some(label) => generator(sys, label)?,
                None => (0..sys.rank())
                    .find(|&s| !sys.free_with(s).is_empty())
                    .ok_or(SimError::NoInfinitePartner(0))?,
            };
            let t0 = match &args.t0 {
                Some(label) => generator(sys, label)?,
                None => sys.free_with(s0).first().ok_or(SimError::NoInfinitePartner(s0))?,
            };
            let x = match &args.x {
                Some(text) => word(sys, text)?,
                None => liminf_witness(sys, a, b, s0, WITNESS_PREFIX)?.x,
            };
            let series = liminf_experiment(sys, a, b, s0, t0, &x, k_max, depth)?;
            writeln!(
                summary,
                "mode: liminf, s0 = {}, t0 = {}, x = {}, depth = {depth}, kmax = {k_max}",
                sys.label(s0),
                sys.label(t0),
                sys.format_word(&x)
            )
            .unwrap();
            if let (Some(min), Some(max)) = (series.min(), series.max()) {
                writeln!(summary, "min distance: {}", show(min)).unwrap();
                writeln!(summary, "max distance: {}", show(max)).unwrap();
            }
            match series.first_below(&dyadic(8)) {
                Some(k) => writeln!(
                    summary,
                    "below 2^-8 from k = {k}; non-increasing afterwards: {}",
                    yes_no(series.non_increasing_from(k))
                )
                .unwrap(),
                None => writeln!(summary, "below 2^-8: never").unwrap(),
            }
            series
        }
        Mode::Limsup | Mode::Obstruction => {
            let depth = args.depth.unwrap_or(16);
            let radius = args.radius.unwrap_or(6);
            let (scan, series, label) = if args.mode == Mode::Limsup {
                (limsup_scan(sys, a, b, radius, depth)?, limsup_profile(sys, a, b, radius, depth)?, "max")
            } else {
                (
                    obstruction_scan(sys, a, b, radius, depth)?,
                    obstruction_profile(sys, a, b, radius, depth)?,
                    "min",
                )
            };
            let mode = if args.mode == Mode::Limsup { "limsup" } else { "obstruction" };
            writeln!(summary, "mode: {mode}, L = {radius}, depth = {depth}, elements = {}", scan.elements).unwrap();
            let g = if scan.witness.is_empty() { "1".to_string() } else { sys.format_word(&scan.witness) };
            writeln!(summary, "{label} distance: {} at g = {g}", show(&scan.value)).unwrap();
            writeln!(summary, "positive: {}", yes_no(scan.value > BigRational::default())).unwrap();
            if args.mode == Mode::Obstruction && radius >= 1 {
                let n = series.entries.len();
                let stable = series.entries[n - 1].1 == series.entries[n - 2].1;
                writeln!(summary, "unchanged from L = {} to L = {radius}: {}", radius - 1, yes_no(stable)).unwrap();
            }
            series
        }
    };
    writeln!(summary, "{PROXY_DISCLAIMER}").unwrap();

    let csv = series.to_csv();
    let text = match &args.out {
        Some(path) => {
            fs::write(path, &csv).map_err(|source| CliError::Write {
                path: path.clone(),
                source,
            })?;
            writeln!(summary, "wrote {} rows to {}", series.entries.len(), path.display()).unwrap();
            summary
        }
        None => csv + &summary,
    };
    Ok(Output::ok(text))
}

pub fn check71(path: &Path, s0: &str, t0: &str, k: usize, l: usize) -> Result<Output, CliError> {
    let file = load(path)?;
    let sys = &file.system;
    let (s0, t0) = (generator(sys, s0)?, generator(sys, t0)?);
    let check = check_theorem71_condition(sys, s0, t0, k, l)?;
    let fmt = |w: &Word| if w.is_empty() { "1".to_string() } else { sys.format_word(w) };
    let mut out = String::new();
    writeln!(
        out,
        "s0 = {}, t0 = {}, K = {k}, L = {l}: {} ({} pairs checked)",
        sys.label(s0),
        sys.label(t0),
        if check.holds { "holds" } else { "fails" },
        check.pairs
    )
    .unwrap();
    if let Some((w, v)) = &check.failure {
        writeln!(out, "no x for w = {}, v = {}", fmt(w), fmt(v)).unwrap();
    }
    writeln!(out, "w | v | x").unwrap();
    for ((w, v), x) in &check.witnesses {
        writeln!(out, "{} | {} | {}", fmt(w), fmt(v), fmt(x)).unwrap();
    }
    Ok(Output {
        text: out,
        code: if check.holds { 0 } else { 1 },
    })
}
