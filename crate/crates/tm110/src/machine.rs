//! The Wolfram-Cook 2-state 5-symbol Turing machine: configurations on
//! infinite eventually-periodic tapes, the deterministic step relation,
//! sweep/switch detection, and the snapshot trace that constitutes the
//! emulation.

use std::sync::Arc;

use crate::words::{BitWord, Sym, SymWord, Word};
use crate::wrap::{left_seed_stem, right_seed_stem};
use crate::{floored_mod, Error};

/// The head's two states: `•` remembers that the last-read symbol carried a
/// one (`1` or `1̲`), `∘` that it did not.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HeadState {
    NoCarry,
    Carry,
}

/// Movement law: the head moves left exactly from the plain symbols.
pub fn moves_left(read: Sym) -> bool {
    matches!(read, Sym::Zero | Sym::One)
}

/// Carry law: the next state is `•` exactly after reading `1` or `1̲`.
pub fn next_state(read: Sym) -> HeadState {
    if matches!(read, Sym::One | Sym::MarkedOne) {
        HeadState::Carry
    } else {
        HeadState::NoCarry
    }
}

/// Write law, as the five pairs per state: in `∘` the head marks what it
/// read (`0↦0̲`, `1↦1̲`, `?↦0`) or unmarks (`0̲↦0`, `1̲↦1`); in `•` it writes
/// the updated cell value (`0↦1̲`, `1↦?`, `?↦1`) or unmarks likewise.
pub fn write_symbol(state: HeadState, read: Sym) -> Sym {
    match (state, read) {
        (HeadState::NoCarry, Sym::Zero) => Sym::MarkedZero,
        (HeadState::NoCarry, Sym::One) => Sym::MarkedOne,
        (HeadState::NoCarry, Sym::Unknown) => Sym::Zero,
        (HeadState::Carry, Sym::Zero) => Sym::MarkedOne,
        (HeadState::Carry, Sym::One) => Sym::Unknown,
        (HeadState::Carry, Sym::Unknown) => Sym::One,
        (_, Sym::MarkedZero) => Sym::Zero,
        (_, Sym::MarkedOne) => Sym::One,
    }
}

/// The five-zone description of an infinite tape: core word on cells
/// `0..l`, stems adjacent to it, seeds repeating outward forever.
///
/// Shared immutably between a live tape and all snapshots taken from it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TapeZones {
    pub left_seed: SymWord,
    pub left_stem: SymWord,
    pub core: SymWord,
    pub right_stem: SymWord,
    pub right_seed: SymWord,
}

impl TapeZones {
    /// The unmodified tape symbol at any cell.
    pub fn at(&self, c: i64) -> Sym {
        let l = self.core.len() as i64;
        let p = self.left_stem.len() as i64;
        let q = self.right_stem.len() as i64;
        if (0..l).contains(&c) {
            self.core.at(c as usize)
        } else if (-p..0).contains(&c) {
            self.left_stem.at((c + p) as usize)
        } else if (l..l + q).contains(&c) {
            self.right_stem.at((c - l) as usize)
        } else if c < -p {
            assert!(!self.left_seed.is_empty(), "left seed must be nonempty");
            self.left_seed.at(floored_mod(c + p, self.left_seed.len()))
        } else {
            assert!(!self.right_seed.is_empty(), "right seed must be nonempty");
            self.right_seed
                .at(floored_mod(c - l - q, self.right_seed.len()))
        }
    }
}

/// A machine tape: the zone description plus a finite mutable window of
/// materialized cells. Cells outside the window read from the zones.
#[derive(Debug, Clone)]
pub struct TmTape {
    zones: Arc<TapeZones>,
    window: Vec<Sym>,
    base: i64,
}

impl TmTape {
    pub fn new(zones: TapeZones) -> Self {
        TmTape {
            zones: Arc::new(zones),
            window: Vec::new(),
            base: 0,
        }
    }

    pub fn zones(&self) -> &TapeZones {
        &self.zones
    }

    pub fn at(&self, c: i64) -> Sym {
        let idx = c - self.base;
        if (0..self.window.len() as i64).contains(&idx) {
            self.window[idx as usize]
        } else {
            self.zones.at(c)
        }
    }

    /// Grows the window (doubling, so materialization stays amortized O(1))
    /// until it covers `c`; new cells take their zone values.
    fn materialize(&mut self, c: i64) {
        if self.window.is_empty() {
            self.base = c;
            self.window.push(self.zones.at(c));
            return;
        }
        if c < self.base {
            let needed = (self.base - c) as usize;
            let grow = needed.max(self.window.len());
            let new_base = self.base - grow as i64;
            let mut grown = Vec::with_capacity(self.window.len() + grow);
            grown.extend((new_base..self.base).map(|cell| self.zones.at(cell)));
            grown.extend_from_slice(&self.window);
            self.window = grown;
            self.base = new_base;
        }
        let end = self.base + self.window.len() as i64;
        if c >= end {
            let needed = (c - end + 1) as usize;
            let grow = needed.max(self.window.len());
            self.window
                .extend((end..end + grow as i64).map(|cell| self.zones.at(cell)));
        }
    }

    pub fn write(&mut self, c: i64, s: Sym) {
        self.materialize(c);
        self.window[(c - self.base) as usize] = s;
    }

    fn snapshot(&self, time: u64, head: i64, state: HeadState) -> TapeSnapshot {
        TapeSnapshot {
            time,
            head,
            state,
            window: self.window.clone(),
            base: self.base,
            zones: Arc::clone(&self.zones),
        }
    }
}

/// A machine configuration: tape, head cell, head state.
#[derive(Debug, Clone)]
pub struct TmConfiguration {
    pub tape: TmTape,
    pub head: i64,
    pub state: HeadState,
}

impl TmConfiguration {
    /// One deterministic step: read, write, move, set carry.
    pub fn step(&mut self) {
        let read = self.tape.at(self.head);
        self.tape.write(self.head, write_symbol(self.state, read));
        self.head += if moves_left(read) { -1 } else { 1 };
        self.state = next_state(read);
    }
}

/// One deterministic step of the machine (method form: [`TmConfiguration::step`]).
pub fn tm_step(cfg: &mut TmConfiguration) {
    cfg.step();
}

/// An immutable copy of the tape as it stood at one instant, with head
/// position and state. The zone description is shared, not copied.
#[derive(Debug, Clone)]
pub struct TapeSnapshot {
    time: u64,
    head: i64,
    state: HeadState,
    window: Vec<Sym>,
    base: i64,
    zones: Arc<TapeZones>,
}

impl TapeSnapshot {
    pub fn time(&self) -> u64 {
        self.time
    }

    pub fn head(&self) -> i64 {
        self.head
    }

    pub fn state(&self) -> HeadState {
        self.state
    }

    /// The tape symbol at any cell, consulting the zones outside the
    /// materialized window.
    pub fn at(&self, c: i64) -> Sym {
        let idx = c - self.base;
        if (0..self.window.len() as i64).contains(&idx) {
            self.window[idx as usize]
        } else {
            self.zones.at(c)
        }
    }
}

/// The trace of a run: one tape snapshot per left switch (the emulation
/// proper), plus the right-sweep-end snapshots for rendering.
#[derive(Debug, Clone)]
pub struct EmulationTrace {
    pub snapshots: Vec<TapeSnapshot>,
    pub right_sweep_ends: Vec<TapeSnapshot>,
    pub total_steps: u64,
}

impl EmulationTrace {
    /// The times `L(i)` of the left switches.
    pub fn switch_times(&self) -> impl Iterator<Item = u64> + '_ {
        self.snapshots.iter().map(|s| s.time())
    }
}

/// Snapshot `i` of the trace at cell `c` (the emulation evaluated at `(i, c)`).
pub fn snapshot_cell(trace: &EmulationTrace, i: usize, c: i64) -> Sym {
    trace.snapshots[i].at(c)
}

/// The tape `⟨seed(X)-rep  stem(X)  I  stem(Y)  seed(Y)-rep⟩` with the head
/// on the cell immediately right of `I`, no carry.
pub fn build_theorem_tape(x: &BitWord, i: &BitWord, y: &BitWord) -> Result<TmConfiguration, Error> {
    let left = left_seed_stem(x)?;
    let right = right_seed_stem(y)?;
    let core: SymWord = i.iter().map(Sym::plain).collect();
    let head = core.len() as i64;
    Ok(TmConfiguration {
        tape: TmTape::new(TapeZones {
            left_seed: left.seed,
            left_stem: left.stem,
            core,
            right_stem: right.stem,
            right_seed: right.seed,
        }),
        head,
        state: HeadState::NoCarry,
    })
}

/// The 0-background tape `⟨0̲-rep  0  I  0-rep⟩` with the head immediately
/// right of `I`, no carry. This is the limited-emulation setting: it only
/// works because the all-zero background never changes.
pub fn build_wolfram_tape(i: &BitWord) -> TmConfiguration {
    let core: SymWord = i.iter().map(Sym::plain).collect();
    let head = core.len() as i64;
    TmConfiguration {
        tape: TmTape::new(TapeZones {
            left_seed: Word::new(vec![Sym::MarkedZero]),
            left_stem: Word::new(vec![Sym::Zero]),
            core,
            right_stem: Word::empty(),
            right_seed: Word::new(vec![Sym::Zero]),
        }),
        head,
        state: HeadState::NoCarry,
    }
}

/// Default step budget for a run collecting `switches` left switches over a
/// core of length `l`: the sweep pattern is quadratic, so a generous
/// quadratic bound with a safety factor.
pub fn default_step_budget(switches: usize, l: usize) -> u64 {
    let base = (switches + l + 10) as u64;
    64 * base * base
}

/// Runs the machine until `max_left_switches` left switches have been
/// observed, snapshotting the tape at each one (and at each right sweep end
/// along the way).
///
/// The head switches left at time `t > 0` when `h(t+1) = h(t−1) = h(t) − 1`,
/// and at time `0` when `h(1) = h(0) − 1`. Snapshots capture the tape *at*
/// the switch time, before that step's write. `max_steps` defaults to
/// [`default_step_budget`].
pub fn run_with_switches(
    cfg: TmConfiguration,
    max_left_switches: usize,
    max_steps: Option<u64>,
) -> Result<EmulationTrace, Error> {
    run_with_switches_impl(cfg, max_left_switches, max_steps, write_symbol)
}

/// Same as [`run_with_switches`] but with an injectable write rule, so tests
/// can corrupt the machine and watch the verifier catch it.
pub(crate) fn run_with_switches_impl(
    mut cfg: TmConfiguration,
    max_left_switches: usize,
    max_steps: Option<u64>,
    write_rule: impl Fn(HeadState, Sym) -> Sym,
) -> Result<EmulationTrace, Error> {
    let budget = max_steps
        .unwrap_or_else(|| default_step_budget(max_left_switches, cfg.tape.zones().core.len()));
    let mut snapshots = Vec::with_capacity(max_left_switches);
    let mut right_sweep_ends = Vec::new();
    let mut prev_head: Option<i64> = None;
    let mut t: u64 = 0;
    while snapshots.len() < max_left_switches {
        if t >= budget {
            return Err(Error::StepBudgetExceeded {
                max_steps: budget,
                switches_seen: snapshots.len(),
            });
        }
        let read = cfg.tape.at(cfg.head);
        let next_head = cfg.head + if moves_left(read) { -1 } else { 1 };
        let switches_left = match prev_head {
            None => next_head == cfg.head - 1,
            Some(prev) => next_head == prev && prev == cfg.head - 1,
        };
        if switches_left {
            snapshots.push(cfg.tape.snapshot(t, cfg.head, cfg.state));
        } else if let Some(prev) = prev_head {
            if next_head == prev && prev == cfg.head + 1 {
                right_sweep_ends.push(cfg.tape.snapshot(t, cfg.head, cfg.state));
            }
        }
        cfg.tape.write(cfg.head, write_rule(cfg.state, read));
        cfg.state = next_state(read);
        prev_head = Some(cfg.head);
        cfg.head = next_head;
        t += 1;
    }
    Ok(EmulationTrace {
        snapshots,
        right_sweep_ends,
        total_steps: t,
    })
}
