//! Cross-simulation checks: exact equality between the automaton run and
//! the machine trace over the causal future of the core word, the limited
//! 0-background variant, and a seeded fuzz driver over random words.

use std::ops::RangeInclusive;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::machine::{build_theorem_tape, build_wolfram_tape, run_with_switches, EmulationTrace};
use crate::rule110::{future_grid, CaState, LightConeGrid};
use crate::words::{Bit, BitWord, Sym, Word};
use crate::Error;

/// Outcome of a verification run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

/// A failing event: the automaton and the machine disagree at `(t, c)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Mismatch {
    pub t: usize,
    pub c: i64,
    pub ca: Bit,
    pub tm: Sym,
}

/// Result of comparing a run against a trace up to a horizon.
///
/// `verdict` is `Pass` exactly when no mismatch was found and every event in
/// scope was checked; `first_mismatch`, when present, is the
/// lexicographically least failing `(t, c)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub horizon: usize,
    pub checked_events: u64,
    pub verdict: Verdict,
    pub first_mismatch: Option<Mismatch>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

fn ensure_contains_zero(word: &BitWord, role: &str) -> Result<(), Error> {
    if word.iter().any(|b| b == Bit::Zero) {
        Ok(())
    } else {
        Err(Error::PreconditionViolated(format!(
            "{role} must contain a 0, got {word}"
        )))
    }
}

/// Shared comparison loop: walk the events in scope in lexicographic (t, c)
/// order, counting checks and stopping at the first disagreement.
fn compare(
    horizon: usize,
    cells_at: impl Fn(usize) -> (i64, i64),
    ca_at: impl Fn(usize, i64) -> Bit,
    tm_at: impl Fn(usize, i64) -> Sym,
    accept: impl Fn(Bit, Sym) -> bool,
) -> VerificationReport {
    let mut checked: u64 = 0;
    let mut first_mismatch = None;
    'scan: for t in 0..=horizon {
        let (lo, hi) = cells_at(t);
        for c in lo..hi {
            let ca = ca_at(t, c);
            let tm = tm_at(t, c);
            checked += 1;
            if !accept(ca, tm) {
                first_mismatch = Some(Mismatch { t, c, ca, tm });
                break 'scan;
            }
        }
    }
    let expected: u64 = (0..=horizon)
        .map(|t| {
            let (lo, hi) = cells_at(t);
            (hi - lo) as u64
        })
        .sum();
    let verdict = if first_mismatch.is_none() && checked == expected {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    VerificationReport {
        horizon,
        checked_events: checked,
        verdict,
        first_mismatch,
    }
}

/// Compares a materialized automaton run against a machine trace over the
/// causal future of a length-`l` core word: at every event `(t, c)` with
/// `t ≤ horizon` and `−t ≤ c < l + t`, snapshot `t` must hold exactly the
/// plain symbol of the automaton's bit. Marked or `?` symbols never match.
fn compare_theorem(
    grid: &LightConeGrid,
    trace: &EmulationTrace,
    l: usize,
    horizon: usize,
) -> VerificationReport {
    compare(
        horizon,
        |t| (-(t as i64), (l + t) as i64),
        |t, c| grid.at(t, c),
        |t, c| trace.snapshots[t].at(c),
        |ca, tm| tm == Sym::plain(ca),
    )
}

/// Checks the causal-future emulation equality for backgrounds `X`, `Y` and
/// core `I`: the automaton run of `⟨←X I Y→⟩` against the machine started on
/// `⟨←seed(X) stem(X) I stem(Y) seed(Y)→⟩`, over all events in the causal
/// future of `I` up to `horizon`.
///
/// `X` and `Y` must each contain a `0`; the wrap construction must apply to
/// both (no all-zero row in their wrapped runs).
pub fn verify_emulation(
    x: &BitWord,
    i: &BitWord,
    y: &BitWord,
    horizon: usize,
) -> Result<VerificationReport, Error> {
    ensure_contains_zero(x, "left background")?;
    ensure_contains_zero(y, "right background")?;
    let state = CaState::backgrounds(x.clone(), i.clone(), y.clone());
    let grid = future_grid(&state, horizon);
    let start = build_theorem_tape(x, i, y)?;
    let trace = run_with_switches(start, horizon + 1, None)?;
    Ok(compare_theorem(&grid, &trace, i.len(), horizon))
}

/// Checks the limited 0-background emulation: the machine on
/// `⟨0̲-rep 0 I 0-rep⟩` against the automaton on `⟨←0 I 0→⟩`, comparing
/// snapshot `i` with row `i` after mapping `0̲ ↦ 0`, over the window
/// `−(i+1) ..= l+i` that the `i`-th leftward sweep has reached.
pub fn verify_wolfram_limited(i: &BitWord, horizon: usize) -> Result<VerificationReport, Error> {
    let zero: BitWord = Word::new(vec![Bit::Zero]);
    let state = CaState::backgrounds(zero.clone(), i.clone(), zero);
    let grid = future_grid(&state, horizon);
    let start = build_wolfram_tape(i);
    let trace = run_with_switches(start, horizon + 1, None)?;
    let l = i.len();
    Ok(compare(
        horizon,
        |t| (-(t as i64) - 1, (l + t) as i64 + 1),
        |t, c| grid.at(t, c),
        |t, c| trace.snapshots[t].at(c),
        |ca, tm| {
            let unmarked = if tm == Sym::MarkedZero { Sym::Zero } else { tm };
            unmarked == Sym::plain(ca)
        },
    ))
}

/// Parameters of a fuzz run. Lengths default to backgrounds of 2..=8 and
/// cores of 0..=10 symbols.
#[derive(Debug, Clone)]
pub struct FuzzConfig {
    pub seed: u64,
    pub count: usize,
    pub horizon: usize,
    pub background_lengths: RangeInclusive<usize>,
    pub core_lengths: RangeInclusive<usize>,
}

impl FuzzConfig {
    pub fn new(seed: u64, count: usize, horizon: usize) -> Self {
        FuzzConfig {
            seed,
            count,
            horizon,
            background_lengths: 2..=8,
            core_lengths: 0..=10,
        }
    }
}

/// One fuzz case that did not pass: either the comparison found a mismatch
/// (`outcome` is `Ok` with a `Fail` verdict) or the construction itself
/// errored (`outcome` is `Err`).
#[derive(Debug, Clone)]
pub struct FuzzFailure {
    pub case: usize,
    pub x: BitWord,
    pub i: BitWord,
    pub y: BitWord,
    pub outcome: Result<VerificationReport, Error>,
}

/// Aggregate outcome of a fuzz run. `regenerated` counts cases thrown away
/// because the wrap construction did not apply (an all-zero row), which the
/// generator treats as out of scope rather than as failures.
#[derive(Debug, Clone, Default)]
pub struct FuzzSummary {
    pub cases: usize,
    pub passes: usize,
    pub regenerated: usize,
    pub failures: Vec<FuzzFailure>,
}

impl FuzzSummary {
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty() && self.passes == self.cases
    }
}

fn random_background(rng: &mut impl Rng, lengths: &RangeInclusive<usize>) -> BitWord {
    loop {
        let len = rng.gen_range(lengths.clone());
        let word: BitWord = (0..len)
            .map(|_| if rng.gen::<bool>() { Bit::One } else { Bit::Zero })
            .collect();
        if word.iter().any(|b| b == Bit::Zero) {
            return word;
        }
    }
}

fn random_core(rng: &mut impl Rng, lengths: &RangeInclusive<usize>) -> BitWord {
    let len = rng.gen_range(lengths.clone());
    (0..len)
        .map(|_| if rng.gen::<bool>() { Bit::One } else { Bit::Zero })
        .collect()
}

/// Runs [`verify_emulation`] on `count` pseudorandom cases, deterministic
/// for a fixed seed. Backgrounds always contain a `0`; cases whose wrap
/// construction hits an all-zero row are regenerated, not counted.
pub fn fuzz_verify(config: &FuzzConfig) -> FuzzSummary {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut summary = FuzzSummary::default();
    for case in 0..config.count {
        let (x, i, y, outcome) = loop {
            let x = random_background(&mut rng, &config.background_lengths);
            let y = random_background(&mut rng, &config.background_lengths);
            let i = random_core(&mut rng, &config.core_lengths);
            match verify_emulation(&x, &i, &y, config.horizon) {
                Err(Error::AllZeroRow { .. }) => {
                    summary.regenerated += 1;
                }
                other => break (x, i, y, other),
            }
        };
        summary.cases += 1;
        match outcome {
            Ok(report) if report.passed() => summary.passes += 1,
            outcome => summary.failures.push(FuzzFailure {
                case,
                x,
                i,
                y,
                outcome,
            }),
        }
    }
    summary
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::machine::{run_with_switches_impl, write_symbol, HeadState};

    fn bits(s: &str) -> BitWord {
        Word::parse(s).unwrap()
    }

    #[test]
    fn worked_example_passes_with_exact_event_count() {
        let report =
            verify_emulation(&bits("111011"), &bits("10011"), &bits("1101"), 12).unwrap();
        assert!(report.passed());
        assert_eq!(report.first_mismatch, None);
        // Σ_{t=0..12} (5 + 2t) = 13·5 + 2·78
        assert_eq!(report.checked_events, 221);
    }

    #[test]
    fn pass_is_stable_under_horizon_extension() {
        for horizon in [0, 1, 5, 30] {
            let report =
                verify_emulation(&bits("111011"), &bits("10011"), &bits("1101"), horizon)
                    .unwrap();
            assert!(report.passed(), "failed at horizon {horizon}");
        }
    }

    #[test]
    fn cone_events_are_always_plain_symbols() {
        let x = bits("111011");
        let i = bits("10011");
        let y = bits("1101");
        let start = build_theorem_tape(&x, &i, &y).unwrap();
        let trace = run_with_switches(start, 13, None).unwrap();
        for t in 0..=12usize {
            for c in -(t as i64)..(i.len() + t) as i64 {
                let sym = trace.snapshots[t].at(c);
                assert!(
                    sym.plain_bit().is_some(),
                    "snapshot {t} holds {sym:?} at cell {c}"
                );
            }
        }
    }

    #[test]
    fn empty_core_passes() {
        let report = verify_emulation(&bits("111011"), &BitWord::empty(), &bits("1101"), 8)
            .unwrap();
        assert!(report.passed());
        // Σ_{t=0..8} 2t = 72
        assert_eq!(report.checked_events, 72);
    }

    #[test]
    fn precondition_requires_a_zero_on_both_sides() {
        let err = verify_emulation(&bits("111"), &bits("10011"), &bits("1101"), 3).unwrap_err();
        assert!(matches!(err, Error::PreconditionViolated(_)));
        let err = verify_emulation(&bits("0101"), &bits("10011"), &bits("11"), 3).unwrap_err();
        assert!(matches!(err, Error::PreconditionViolated(_)));
    }

    #[test]
    fn all_zero_row_propagates() {
        // 01 passes the contains-a-0 precondition but its wrapped run dies:
        // 01 → 11 → 00.
        let err = verify_emulation(&bits("01"), &bits("1"), &bits("1101"), 3).unwrap_err();
        assert!(matches!(err, Error::AllZeroRow { .. }));
    }

    #[test]
    fn corrupted_write_rule_is_caught_with_a_witness() {
        let x = bits("111011");
        let i = bits("10011");
        let y = bits("1101");
        let state = CaState::backgrounds(x.clone(), i.clone(), y.clone());
        let grid = future_grid(&state, 12);
        let start = build_theorem_tape(&x, &i, &y).unwrap();
        // Corrupt one entry of the write rule: carrying over a 1 leaves 1
        // instead of ?, so the carry is double-counted.
        let trace = run_with_switches_impl(start, 13, None, |state, read| {
            if state == HeadState::Carry && read == Sym::One {
                Sym::One
            } else {
                write_symbol(state, read)
            }
        })
        .unwrap();
        let report = compare_theorem(&grid, &trace, i.len(), 12);
        assert_eq!(report.verdict, Verdict::Fail);
        let witness = report.first_mismatch.expect("must produce a witness");
        // fail fast: the witness is found well before the full event count
        assert!(report.checked_events < 221);
        assert!(witness.t <= 12);
    }

    #[test]
    fn wolfram_limited_matches_early_rows() {
        let report = verify_wolfram_limited(&bits("111011"), 3).unwrap();
        assert!(report.passed());
        // rows of widths 8, 10, 12, 14
        assert_eq!(report.checked_events, 44);
    }

    #[test]
    fn wolfram_limited_trivial_and_extended() {
        assert!(verify_wolfram_limited(&BitWord::empty(), 2).unwrap().passed());
        assert!(verify_wolfram_limited(&bits("10011"), 10).unwrap().passed());
    }

    #[test]
    fn fuzz_zero_cases_is_empty() {
        let summary = fuzz_verify(&FuzzConfig::new(7, 0, 10));
        assert_eq!(summary.cases, 0);
        assert_eq!(summary.passes, 0);
        assert!(summary.failures.is_empty());
        assert!(summary.all_passed());
    }

    #[test]
    fn fuzz_is_deterministic_for_a_fixed_seed() {
        let a = fuzz_verify(&FuzzConfig::new(42, 5, 12));
        let b = fuzz_verify(&FuzzConfig::new(42, 5, 12));
        assert_eq!(a.cases, b.cases);
        assert_eq!(a.passes, b.passes);
        assert_eq!(a.regenerated, b.regenerated);
        assert!(a.all_passed());
    }
}
