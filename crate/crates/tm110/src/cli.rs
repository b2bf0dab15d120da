//! Command-line surface: seed computation, automaton and machine runs,
//! cross-verification, fuzzing, and diagram rendering.
//!
//! Exit codes: 0 success, 1 verification failure, 2 domain error (a run or
//! construction could not be carried out), 64 usage error.

use std::ffi::OsString;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::machine::{build_theorem_tape, build_wolfram_tape, run_with_switches, TmConfiguration};
use crate::render::{
    ca_rows, render_spacetime, trace_rows, trace_window, wolfram_rows, RenderRow, RenderStyle,
    RowSelection,
};
use crate::rule110::{future_grid, wrapped_run, CaState};
use crate::verifier::{
    fuzz_verify, verify_emulation, verify_wolfram_limited, FuzzConfig, VerificationReport,
};
use crate::words::{Alphabet, BitWord, Word};
use crate::wrap::{left_seed_stem, right_seed_stem};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION_FAILED: i32 = 1;
pub const EXIT_DOMAIN_ERROR: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

/// Entry point: parses `argv`, dispatches, and returns the process exit code.
pub fn main<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return EXIT_OK;
            }
            eprint!("{e}");
            return EXIT_USAGE;
        }
    };
    match run(cli) {
        Ok(()) => EXIT_OK,
        Err(Failure::Verification) => EXIT_VERIFICATION_FAILED,
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            EXIT_DOMAIN_ERROR
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
    }
}

enum Failure {
    Usage(String),
    Domain(Error),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

#[derive(Parser)]
#[command(
    name = "tm110",
    version,
    about = "Simulate and cross-verify the Rule 110 automaton and the 2-state 5-symbol machine that emulates it"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the stem and seed words that encode background words on the
    /// machine tape
    Seeds(SeedsArgs),
    /// Evolve the automaton from an infinite state with repeating
    /// backgrounds and print a spacetime window
    RunCa(RunCaArgs),
    /// Evolve the wrapped (circular) automaton until a row repeats
    RunWrapped(RunWrappedArgs),
    /// Run the machine and snapshot its tape at each left switch
    RunTm(RunTmArgs),
    /// Check the machine against the automaton over the causal future of
    /// the core word
    Verify(VerifyArgs),
    /// Run the verifier on many pseudorandom cases
    Fuzz(FuzzArgs),
    /// Draw a spacetime diagram of a run
    Render(RenderArgs),
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Seeds(args) => run_seeds(args),
        Command::RunCa(args) => run_ca(args),
        Command::RunWrapped(args) => run_wrapped(args),
        Command::RunTm(args) => run_tm(args),
        Command::Verify(args) => run_verify(args),
        Command::Fuzz(args) => run_fuzz(args),
        Command::Render(args) => run_render(args),
    }
}

/// Parses a binary word flag, mapping bad characters to a usage error that
/// names the character and its position.
fn parse_bits(flag: &str, text: &str) -> Result<BitWord, Failure> {
    Word::parse(text).map_err(|e| Failure::Usage(format!("--{flag}: {e}")))
}

fn require_nonempty(flag: &str, word: &BitWord) -> Result<(), Failure> {
    if word.is_empty() {
        Err(Failure::Usage(format!("--{flag}: word must be nonempty")))
    } else {
        Ok(())
    }
}

#[derive(Args)]
struct SeedsArgs {
    /// Left background word (binary)
    #[arg(long)]
    left: String,
    /// Right background word (binary)
    #[arg(long)]
    right: String,
}

fn run_seeds(args: SeedsArgs) -> Result<(), Failure> {
    let x = parse_bits("left", &args.left)?;
    let y = parse_bits("right", &args.right)?;
    require_nonempty("left", &x)?;
    require_nonempty("right", &y)?;
    let left = left_seed_stem(&x)?;
    let right = right_seed_stem(&y)?;
    println!("left_stem={}", left.stem);
    println!("left_seed={}", left.seed);
    println!("right_stem={}", right.stem);
    println!("right_seed={}", right.seed);
    Ok(())
}

#[derive(Args)]
struct RunCaArgs {
    /// Left background word (binary)
    #[arg(long)]
    left: String,
    /// Core word on cells 0..l (binary, may be empty)
    #[arg(long)]
    input: String,
    /// Right background word (binary)
    #[arg(long)]
    right: String,
    /// Number of steps to evolve
    #[arg(long)]
    horizon: usize,
    /// Wrap the causal-future cells of each row in [ ] markers
    #[arg(long)]
    emphasis: bool,
}

fn run_ca(args: RunCaArgs) -> Result<(), Failure> {
    let x = parse_bits("left", &args.left)?;
    let i = parse_bits("input", &args.input)?;
    let y = parse_bits("right", &args.right)?;
    require_nonempty("left", &x)?;
    require_nonempty("right", &y)?;
    let state = CaState::backgrounds(x, i.clone(), y);
    let grid = future_grid(&state, args.horizon);
    let t = args.horizon as i64;
    let rows = ca_rows(&grid, i.len(), -t, i.len() as i64 + t);
    let style = RenderStyle {
        emphasize: args.emphasis,
        ..RenderStyle::default()
    };
    print!("{}", render_spacetime(&rows, &style));
    Ok(())
}

#[derive(Args)]
struct RunWrappedArgs {
    /// The word to evolve circularly (binary, nonempty)
    #[arg(long)]
    word: String,
    /// Print the onset of periodicity and the period before the matrix
    #[arg(long)]
    show_alpha_delta: bool,
    /// Step budget override
    #[arg(long)]
    max_steps: Option<usize>,
}

fn run_wrapped(args: RunWrappedArgs) -> Result<(), Failure> {
    let w = parse_bits("word", &args.word)?;
    require_nonempty("word", &w)?;
    let run = wrapped_run(&w, args.max_steps)?;
    if args.show_alpha_delta {
        println!("alpha={} delta={}", run.alpha(), run.delta());
    }
    for row in run.matrix().rows() {
        println!("{row}");
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TmRender {
    None,
    Ascii,
}

#[derive(Args)]
struct RunTmArgs {
    /// Core word on cells 0..l (binary, may be empty)
    #[arg(long)]
    input: String,
    /// Left background word; encoded as seed/stem zones on the tape
    #[arg(long, required_unless_present = "wolfram", conflicts_with = "wolfram")]
    left: Option<String>,
    /// Right background word; encoded as seed/stem zones on the tape
    #[arg(long, required_unless_present = "wolfram", conflicts_with = "wolfram")]
    right: Option<String>,
    /// Use the 0-background tape (marked zeros to the left, zeros to the
    /// right) instead of seed/stem backgrounds
    #[arg(long)]
    wolfram: bool,
    /// Number of left switches to collect
    #[arg(long)]
    switches: usize,
    /// Diagram output: none (switch summary only) or ascii
    #[arg(long, value_enum, default_value_t = TmRender::Ascii)]
    render: TmRender,
    /// Step budget override
    #[arg(long)]
    max_steps: Option<u64>,
}

fn build_start_tape(
    input: &BitWord,
    left: Option<&str>,
    right: Option<&str>,
    wolfram: bool,
) -> Result<TmConfiguration, Failure> {
    if wolfram {
        return Ok(build_wolfram_tape(input));
    }
    let x = parse_bits("left", left.expect("clap enforces --left"))?;
    let y = parse_bits("right", right.expect("clap enforces --right"))?;
    require_nonempty("left", &x)?;
    require_nonempty("right", &y)?;
    Ok(build_theorem_tape(&x, input, &y)?)
}

fn run_tm(args: RunTmArgs) -> Result<(), Failure> {
    let i = parse_bits("input", &args.input)?;
    let start = build_start_tape(&i, args.left.as_deref(), args.right.as_deref(), args.wolfram)?;
    let trace = run_with_switches(start, args.switches, args.max_steps)?;
    println!("steps={}", trace.total_steps);
    for (idx, snap) in trace.snapshots.iter().enumerate() {
        println!("switch {idx}: t={} cell={}", snap.time(), snap.head());
    }
    if args.render == TmRender::Ascii {
        let rows = if args.wolfram {
            wolfram_rows(&trace, i.len())
        } else {
            let (lo, hi) = trace_window(&trace);
            trace_rows(&trace, i.len(), lo, hi)
        };
        let style = RenderStyle {
            selection: RowSelection::LeftSwitches,
            ..RenderStyle::default()
        };
        print!("{}", render_spacetime(&rows, &style));
    }
    Ok(())
}

#[derive(Args)]
struct VerifyArgs {
    /// Core word on cells 0..l (binary, may be empty)
    #[arg(long)]
    input: String,
    /// Left background word (binary, must contain a 0)
    #[arg(long, required_unless_present = "wolfram", conflicts_with = "wolfram")]
    left: Option<String>,
    /// Right background word (binary, must contain a 0)
    #[arg(long, required_unless_present = "wolfram", conflicts_with = "wolfram")]
    right: Option<String>,
    /// Check the limited 0-background emulation instead
    #[arg(long)]
    wolfram: bool,
    /// Last time step to check
    #[arg(long)]
    horizon: usize,
}

fn print_report(report: &VerificationReport) -> Result<(), Failure> {
    println!(
        "verdict={}",
        if report.passed() { "PASS" } else { "FAIL" }
    );
    println!("horizon={}", report.horizon);
    println!("checked_events={}", report.checked_events);
    if let Some(m) = report.first_mismatch {
        println!(
            "first_mismatch t={} c={} ca={} tm={}",
            m.t,
            m.c,
            m.ca.to_char(),
            m.tm.to_char()
        );
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn run_verify(args: VerifyArgs) -> Result<(), Failure> {
    let i = parse_bits("input", &args.input)?;
    let report = if args.wolfram {
        verify_wolfram_limited(&i, args.horizon)?
    } else {
        let x = parse_bits("left", args.left.as_deref().expect("clap enforces --left"))?;
        let y = parse_bits("right", args.right.as_deref().expect("clap enforces --right"))?;
        verify_emulation(&x, &i, &y, args.horizon)?
    };
    print_report(&report)
}

#[derive(Args)]
struct FuzzArgs {
    /// Seed for the pseudorandom generator
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Number of cases to run
    #[arg(long, default_value_t = 200)]
    count: usize,
    /// Horizon per case
    #[arg(long, default_value_t = 40)]
    horizon: usize,
}

fn run_fuzz(args: FuzzArgs) -> Result<(), Failure> {
    let summary = fuzz_verify(&FuzzConfig::new(args.seed, args.count, args.horizon));
    println!(
        "cases={} passes={} regenerated={} failures={}",
        summary.cases,
        summary.passes,
        summary.regenerated,
        summary.failures.len()
    );
    for f in &summary.failures {
        let detail = match &f.outcome {
            Ok(report) => match report.first_mismatch {
                Some(m) => format!(
                    "mismatch t={} c={} ca={} tm={}",
                    m.t,
                    m.c,
                    m.ca.to_char(),
                    m.tm.to_char()
                ),
                None => "incomplete comparison".to_string(),
            },
            Err(e) => format!("error: {e}"),
        };
        println!("failure case={} x={} i={} y={} {detail}", f.case, f.x, f.i, f.y);
    }
    if summary.all_passed() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RowsArg {
    /// Every automaton step
    EveryStep,
    /// Machine tape at each left switch
    LeftSwitches,
    /// Machine tape at each right sweep end
    RightSwitches,
    /// Left switches and right sweep ends in time order
    Interleaved,
}

impl From<RowsArg> for RowSelection {
    fn from(r: RowsArg) -> Self {
        match r {
            RowsArg::EveryStep => RowSelection::EveryStep,
            RowsArg::LeftSwitches => RowSelection::LeftSwitches,
            RowsArg::RightSwitches => RowSelection::RightSwitches,
            RowsArg::Interleaved => RowSelection::Interleaved,
        }
    }
}

#[derive(Args)]
struct RenderArgs {
    /// Core word on cells 0..l (binary, may be empty)
    #[arg(long)]
    input: String,
    /// Left background word (binary)
    #[arg(long, required_unless_present = "wolfram", conflicts_with = "wolfram")]
    left: Option<String>,
    /// Right background word (binary)
    #[arg(long, required_unless_present = "wolfram", conflicts_with = "wolfram")]
    right: Option<String>,
    /// Use the 0-background setting on both sides
    #[arg(long)]
    wolfram: bool,
    /// Last row index to draw
    #[arg(long)]
    horizon: usize,
    /// Which rows to draw: every-step draws the automaton run, the switch
    /// modes draw machine snapshots
    #[arg(long, value_enum, default_value_t = RowsArg::EveryStep)]
    rows: RowsArg,
    /// Wrap the causal-future cells of each row in [ ] markers
    #[arg(long)]
    emphasis: bool,
}

fn run_render(args: RenderArgs) -> Result<(), Failure> {
    let i = parse_bits("input", &args.input)?;
    let l = i.len();
    let horizon = args.horizon;
    let style = RenderStyle {
        emphasize: args.emphasis,
        selection: args.rows.into(),
        ..RenderStyle::default()
    };
    let rows: Vec<RenderRow> = if args.rows == RowsArg::EveryStep {
        let (x, y) = if args.wolfram {
            let zero: BitWord = Word::parse("0").expect("literal");
            (zero.clone(), zero)
        } else {
            let x = parse_bits("left", args.left.as_deref().expect("clap enforces --left"))?;
            let y = parse_bits("right", args.right.as_deref().expect("clap enforces --right"))?;
            require_nonempty("left", &x)?;
            require_nonempty("right", &y)?;
            (x, y)
        };
        let state = CaState::backgrounds(x, i.clone(), y);
        let grid = future_grid(&state, horizon);
        ca_rows(&grid, l, -(horizon as i64), (l + horizon) as i64)
    } else {
        let start = build_start_tape(&i, args.left.as_deref(), args.right.as_deref(), args.wolfram)?;
        let trace = run_with_switches(start, horizon + 1, None)?;
        if args.wolfram && args.rows == RowsArg::LeftSwitches {
            wolfram_rows(&trace, l)
        } else {
            let (mut lo, mut hi) = trace_window(&trace);
            if args.emphasis {
                // widen so every row's cone markers fit inside the window
                lo = lo.min(-(horizon as i64));
                hi = hi.max((l + horizon) as i64);
            }
            trace_rows(&trace, l, lo, hi)
        }
    };
    print!("{}", render_spacetime(&rows, &style));
    Ok(())
}
