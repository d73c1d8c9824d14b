//! `hailstone` command line.
//!
//! Exit codes: 0 success, 1 failed verification or I/O error, 2 usage error,
//! 3 trajectory hit the step limit, 4 trajectory overflowed, 5 resource cap.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::collatz::{trajectory, Formulation, Termination};
use crate::dataset::{
    histogram_to_csv, histogram_to_json, sequence_to_csv, sequence_to_json, FigureDataset,
};
use crate::experiments::{
    figure1_dataset, figure2_dataset, figure3_dataset, figure4_dataset, figure5_dataset,
    mass_ratio_report, MAX_STREAM_BITS,
};
use crate::numtheory::{mersenne, odd_part, tz_in_frame, tzs_value_histogram};
use crate::reflection::{PalindromeSequence, ReflectionTable};
use crate::runlength::{rld_distribution, FrameMode, RldSequence};
use crate::verify::{Suite, SuiteParams};
use crate::{BitLen, Error, Natural, MAX_TABLE_BITS};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_STEP_LIMIT: i32 = 3;
pub const EXIT_OVERFLOW: i32 = 4;
pub const EXIT_RESOURCE: i32 = 5;

/// Default cap on materialized sequences.
pub const SEQ_CAP_BITS: BitLen = 20;
/// Default cap on streamed statistics.
pub const STREAM_CAP_BITS: BitLen = 24;

#[derive(Debug, Parser)]
#[command(
    name = "hailstone",
    version,
    about = "Collatz map, reflections and run-length statistics"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emit an integer sequence over s(L).
    Seq(SeqArgs),
    /// Iterate one formulation of the map.
    Traj(TrajArgs),
    /// Run exhaustive verification suites.
    Verify(VerifyArgs),
    /// Write figure datasets as CSV and JSON.
    Figures(FigureArgs),
    /// Interval statistics and histograms.
    Stats(StatsArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SequenceName {
    Tzs,
    OddPart,
    Reflect,
    Palindromes,
    Rld,
    DigitSum,
    SortedTzs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormulationArg {
    Branched,
    Accelerated,
    MirrorPalindrome,
    MirrorReflection,
}

impl From<FormulationArg> for Formulation {
    fn from(f: FormulationArg) -> Self {
        match f {
            FormulationArg::Branched => Formulation::Branched,
            FormulationArg::Accelerated => Formulation::Accelerated,
            FormulationArg::MirrorPalindrome => Formulation::MirrorPalindrome,
            FormulationArg::MirrorReflection => Formulation::MirrorReflection,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FrameArg {
    Minimal,
    Fixed,
}

impl From<FrameArg> for FrameMode {
    fn from(f: FrameArg) -> Self {
        match f {
            FrameArg::Minimal => FrameMode::Minimal,
            FrameArg::Fixed => FrameMode::Fixed,
        }
    }
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SeqArgs {
    #[arg(value_enum)]
    pub name: SequenceName,
    /// Interval length.
    #[arg(long = "L", short = 'L')]
    pub len: Option<BitLen>,
    /// Palindrome half-length.
    #[arg(long = "k", short = 'k')]
    pub k: Option<BitLen>,
    #[command(flatten)]
    pub output: OutputArgs,
    /// Lift the default size caps.
    #[arg(long)]
    pub unsafe_large: bool,
}

#[derive(Debug, Args)]
pub struct TrajArgs {
    pub x0: Natural,
    #[arg(long, value_enum, default_value_t = FormulationArg::Accelerated)]
    pub formulation: FormulationArg,
    #[arg(long, default_value_t = 10_000)]
    pub max_steps: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Suites to run, or `all`.
    #[arg(required = true)]
    pub suites: Vec<String>,
    #[arg(long = "L", short = 'L')]
    pub len: Option<BitLen>,
    #[arg(long = "k", short = 'k')]
    pub k: Option<BitLen>,
    #[arg(long)]
    pub max: Option<Natural>,
}

#[derive(Debug, Args)]
pub struct FigureArgs {
    /// Figure number, 1 to 5.
    #[arg(value_parser = clap::value_parser!(u8).range(1..=5))]
    pub id: u8,
    #[arg(long = "L", short = 'L', default_value_t = 10)]
    pub len: BitLen,
    #[arg(long = "Lmin", default_value_t = 4)]
    pub l_min: BitLen,
    #[arg(long = "Lmax", default_value_t = 20)]
    pub l_max: BitLen,
    #[arg(long, value_enum, default_value_t = FrameArg::Minimal)]
    pub frame: FrameArg,
    /// Output directory.
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
    #[arg(long)]
    pub unsafe_large: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StatsKind {
    /// p- and q-counts over odd x in s(L).
    MassRatio,
    RldHist,
    DigitSumHist,
    TzsHist,
}

#[derive(Debug, Args)]
pub struct StatsArgs {
    #[arg(value_enum)]
    pub kind: StatsKind,
    #[arg(long = "L", short = 'L')]
    pub len: BitLen,
    #[arg(long, value_enum, default_value_t = FrameArg::Minimal)]
    pub frame: FrameArg,
    #[command(flatten)]
    pub output: OutputArgs,
    #[arg(long)]
    pub unsafe_large: bool,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Resource(String),
    Failed(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::LengthTooLarge { .. } => CliError::Resource(e.to_string()),
            Error::InvalidParameter(_) | Error::LengthTooSmall { .. } | Error::OddLength(_) => {
                CliError::Usage(e.to_string())
            }
            _ => CliError::Failed(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Failed(e.to_string())
    }
}

type CliResult = std::result::Result<i32, CliError>;

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return e.exit_code();
        }
    };
    let result = match cli.command {
        Command::Seq(a) => run_seq(&a, stdout),
        Command::Traj(a) => run_traj(&a, stdout),
        Command::Verify(a) => run_verify(&a, stdout),
        Command::Figures(a) => run_figures(&a, stdout),
        Command::Stats(a) => run_stats(&a, stdout),
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            let (code, msg) = match err {
                CliError::Usage(m) => (EXIT_USAGE, m),
                CliError::Resource(m) => (EXIT_RESOURCE, m),
                CliError::Failed(m) => (EXIT_FAILURE, m),
            };
            let _ = writeln!(stderr, "hailstone: {msg}");
            code
        }
    }
}

fn cap(
    len: BitLen,
    default_cap: BitLen,
    hard_cap: BitLen,
    unsafe_large: bool,
) -> Result<(), CliError> {
    let limit = if unsafe_large { hard_cap } else { default_cap };
    if len > limit {
        let hint = if unsafe_large || default_cap == hard_cap {
            String::new()
        } else {
            " (use --unsafe-large to raise it)".to_owned()
        };
        return Err(CliError::Resource(format!(
            "L={len} exceeds the cap of {limit} bits{hint}"
        )));
    }
    Ok(())
}

/// Writes `contents` to `path` through a temporary file in the same
/// directory, so a failed run leaves no partial file.
pub fn write_atomic(path: &Path, contents: &str) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.flush()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

fn emit(output: &OutputArgs, contents: &str, stdout: &mut dyn Write) -> Result<(), CliError> {
    match &output.out {
        Some(path) => write_atomic(path, contents)?,
        None => stdout.write_all(contents.as_bytes())?,
    }
    Ok(())
}

fn require_len(len: Option<BitLen>) -> Result<BitLen, CliError> {
    len.ok_or_else(|| CliError::Usage("--L is required".into()))
}

fn render_sequence<T: std::fmt::Display + serde::Serialize>(
    name: &str,
    values: &[T],
    format: Format,
) -> String {
    match format {
        Format::Csv => sequence_to_csv(name, values),
        Format::Json => sequence_to_json(name, values),
    }
}

fn run_seq(a: &SeqArgs, stdout: &mut dyn Write) -> CliResult {
    let label = a
        .name
        .to_possible_value()
        .map(|v| v.get_name().to_owned())
        .unwrap_or_default();
    let text = if a.name == SequenceName::Palindromes {
        let k = match (a.k, a.len) {
            (Some(k), _) => k,
            (None, Some(len)) if len % 2 == 0 => len / 2,
            (None, Some(len)) => return Err(Error::OddLength(len).into()),
            (None, None) => return Err(CliError::Usage("--k or an even --L is required".into())),
        };
        cap(k, SEQ_CAP_BITS, MAX_TABLE_BITS, a.unsafe_large)?;
        let seq = PalindromeSequence::new(k)?;
        render_sequence(&label, seq.as_slice(), a.output.format)
    } else {
        let len = require_len(a.len)?;
        cap(len, SEQ_CAP_BITS, MAX_TABLE_BITS, a.unsafe_large)?;
        if len == 0 {
            return Err(CliError::Usage("--L must be at least 1".into()));
        }
        let interval = 0..=mersenne(len);
        match a.name {
            SequenceName::Tzs => {
                let v: Vec<BitLen> = interval.map(|n| tz_in_frame(n, len)).collect();
                render_sequence(&label, &v, a.output.format)
            }
            SequenceName::OddPart => {
                // odd part is undefined at 0, so this one runs over [1, 2^L]
                let v = (1..=(1 << len))
                    .map(odd_part)
                    .collect::<crate::Result<Vec<_>>>()?;
                render_sequence(&label, &v, a.output.format)
            }
            SequenceName::Reflect => {
                let t = ReflectionTable::new(len)?;
                render_sequence(&label, t.as_slice(), a.output.format)
            }
            SequenceName::Rld => {
                let s = RldSequence::new(len)?;
                render_sequence(&label, s.as_slice(), a.output.format)
            }
            SequenceName::DigitSum => {
                let v: Vec<BitLen> = interval.map(crate::numtheory::digit_sum).collect();
                render_sequence(&label, &v, a.output.format)
            }
            SequenceName::SortedTzs => {
                let t = ReflectionTable::new(len)?;
                let v: Vec<BitLen> = t.as_slice().iter().map(|&r| tz_in_frame(r, len)).collect();
                render_sequence(&label, &v, a.output.format)
            }
            SequenceName::Palindromes => unreachable!(),
        }
    };
    emit(&a.output, &text, stdout)?;
    Ok(EXIT_OK)
}

fn run_traj(a: &TrajArgs, stdout: &mut dyn Write) -> CliResult {
    if a.x0 == 0 {
        return Err(CliError::Usage("x0 must be at least 1".into()));
    }
    let traj = trajectory(a.x0, a.formulation.into(), a.max_steps)?;
    let text = match a.output.format {
        Format::Csv => {
            let mut s = String::from("step_index,value,t_value\n");
            for (i, step) in traj.steps.iter().enumerate() {
                s.push_str(&format!("{i},{},{}\n", step.value, step.t_value));
            }
            s
        }
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&traj).expect("trajectory serializes");
            s.push('\n');
            s
        }
    };
    emit(&a.output, &text, stdout)?;
    Ok(match traj.terminated {
        Termination::FixedPoint | Termination::PowerOfTwo | Termination::Cycle => EXIT_OK,
        Termination::StepLimit => EXIT_STEP_LIMIT,
        Termination::Overflow => EXIT_OVERFLOW,
    })
}

fn run_verify(a: &VerifyArgs, stdout: &mut dyn Write) -> CliResult {
    let suites: Vec<Suite> = if a.suites.iter().any(|s| s == "all") {
        Suite::ALL.to_vec()
    } else {
        a.suites
            .iter()
            .map(|s| s.parse())
            .collect::<crate::Result<_>>()?
    };
    let params = SuiteParams {
        len: a.len,
        k: a.k,
        max: a.max,
    };
    let mut all_passed = true;
    for suite in suites {
        let report = suite.run(&params)?;
        all_passed &= report.passed;
        writeln!(stdout, "{suite}: {report}")?;
    }
    Ok(if all_passed { EXIT_OK } else { EXIT_FAILURE })
}

fn run_figures(a: &FigureArgs, stdout: &mut dyn Write) -> CliResult {
    let datasets: Vec<FigureDataset> = match a.id {
        1..=4 => {
            cap(a.len, SEQ_CAP_BITS, SEQ_CAP_BITS, a.unsafe_large)?;
            match a.id {
                1 => vec![figure1_dataset(a.len)?],
                2 => vec![figure2_dataset(a.len)?],
                3 => vec![figure3_dataset(a.len)?],
                _ => figure4_dataset(a.len)?.to_vec(),
            }
        }
        _ => {
            cap(a.l_max, STREAM_CAP_BITS, STREAM_CAP_BITS, a.unsafe_large)?;
            vec![figure5_dataset(a.l_min, a.l_max, a.frame.into())?]
        }
    };
    std::fs::create_dir_all(&a.out)?;
    for ds in &datasets {
        let stem = ds.file_stem();
        let csv = a.out.join(format!("{stem}.csv"));
        let json = a.out.join(format!("{stem}.json"));
        write_atomic(&csv, &ds.to_csv())?;
        write_atomic(&json, &ds.to_json())?;
        writeln!(stdout, "{}", csv.display())?;
        writeln!(stdout, "{}", json.display())?;
    }
    Ok(EXIT_OK)
}

fn run_stats(a: &StatsArgs, stdout: &mut dyn Write) -> CliResult {
    cap(a.len, STREAM_CAP_BITS, MAX_STREAM_BITS, a.unsafe_large)?;
    let format = a.output.format;
    let text = match a.kind {
        StatsKind::MassRatio => {
            let r = mass_ratio_report(a.len, a.frame.into())?;
            match format {
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&r).expect("report serializes");
                    s.push('\n');
                    s
                }
                Format::Csv => {
                    let opt = |v: Option<f64>| v.map(|v| v.to_string()).unwrap_or_default();
                    format!(
                        "L,frame_mode,p_less,p_greater,p_equal,p_ratio,q_less,q_greater,q_equal,q_ratio,gap_mean\n\
                         {},{},{},{},{},{},{},{},{},{},{}\n",
                        r.len,
                        r.frame_mode,
                        r.p.less,
                        r.p.greater,
                        r.p.equal,
                        opt(r.p_ratio()),
                        r.q.signs.less,
                        r.q.signs.greater,
                        r.q.signs.equal,
                        opt(r.q_ratio()),
                        r.q.mean
                    )
                }
            }
        }
        StatsKind::RldHist | StatsKind::DigitSumHist => {
            let d = rld_distribution(a.len)?;
            let h = if a.kind == StatsKind::RldHist {
                &d.rld
            } else {
                &d.digit_sum
            };
            match format {
                Format::Csv => histogram_to_csv(h),
                Format::Json => histogram_to_json(h),
            }
        }
        StatsKind::TzsHist => {
            let h = tzs_value_histogram(a.len)?;
            match format {
                Format::Csv => histogram_to_csv(&h),
                Format::Json => histogram_to_json(&h),
            }
        }
    };
    emit(&a.output, &text, stdout)?;
    Ok(EXIT_OK)
}
