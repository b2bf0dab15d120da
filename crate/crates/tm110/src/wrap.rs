//! The wrap construction: walk a cursor over the matrix of a wrapped run,
//! read off a word of tape symbols, and split it into the periodic *seed*
//! and finite *stem* that build the machine's infinite tape.
//!
//! The two sides are genuinely different walks, not mirror images: the left
//! side follows a trajectory and then expands each visited cell into one or
//! two symbols, while the right side is a two-mode scan that emits exactly
//! one symbol per step.

use crate::rule110::{wrapped_run, Matrix};
use crate::words::{Bit, BitWord, Sym, SymWord, Word, WordOfWords};
use crate::Error;

/// A cursor walk over a matrix, recorded up to its first revisited point.
///
/// `points` holds indices `0..first_recurrence()`; `start` (the start of
/// cyclicity) is the index whose point is revisited, and `period` the
/// distance of the revisit, so `points[start] = points[start + period]`
/// with both values least.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trajectory {
    points: Vec<(usize, usize)>,
    start: usize,
    period: usize,
}

impl Trajectory {
    pub fn points(&self) -> &[(usize, usize)] {
        &self.points
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn period(&self) -> usize {
        self.period
    }

    /// `start + period`, the length of the recorded prefix.
    pub fn first_recurrence(&self) -> usize {
        self.start + self.period
    }
}

/// Which side of the core word a seed/stem pair extends.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// The periodic word (`seed`) and finite prefix (`stem`) extracted from a
/// trajectory. The tape later repeats the seed outward forever, with the
/// stem between the repetition and the core.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeedStem {
    pub side: Side,
    pub stem: SymWord,
    pub seed: SymWord,
}

/// One step of the trajectory's time coordinate: drop one row, wrapping from
/// the bottom row back into the periodic band `[alpha, alpha+delta)`.
fn next_row(t: usize, alpha: usize, delta: usize) -> usize {
    let next = t + 1;
    if next >= alpha + delta {
        alpha + (next - alpha) % delta
    } else {
        next
    }
}

fn walk(
    m: &Matrix,
    start: (usize, usize),
    advance: impl Fn(usize, usize, usize) -> (usize, usize),
) -> Result<Trajectory, Error> {
    if let Some(row) = m.all_zero_row() {
        return Err(Error::AllZeroRow { row });
    }
    let n = m.width();
    let mut first_visit = std::collections::HashMap::new();
    let mut points = Vec::new();
    let (mut t, mut c) = start;
    loop {
        if let Some(&seen_at) = first_visit.get(&(t, c)) {
            let period = points.len() - seen_at;
            return Ok(Trajectory {
                points,
                start: seen_at,
                period,
            });
        }
        first_visit.insert((t, c), points.len());
        points.push((t, c));
        let (nt, nc) = advance(t, c, n);
        t = nt;
        c = nc;
    }
}

/// The left wrap trajectory: starts at the top-right cell `(0, n−1)`; on a 1
/// it moves one cell left in the same row, on a 0 it moves two cells left and
/// one row down (cells and time both wrapping).
///
/// Any all-zero matrix row makes the walk meaningless (it could never leave
/// the row), so that is rejected eagerly.
pub fn left_trajectory(m: &Matrix, alpha: usize, delta: usize) -> Result<Trajectory, Error> {
    walk(m, (0, m.width() - 1), |t, c, n| {
        if m.at(t, c) == Bit::One {
            (t, (c + n - 1) % n)
        } else {
            (next_row(t, alpha, delta), (c + n - 2) % n)
        }
    })
}

/// The scanning mode of the right-side walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RightMode {
    /// Emit the marked copy of each cell scanned; a 0 opens a zero run.
    Mark,
    /// Inside a run of 0s: emit marked zeros until the 1 that closes the
    /// run, which is emitted plain and drops the cursor one row down.
    ZeroRun,
}

/// The right-side walk: a cursor scanning rows rightward (columns wrapping)
/// in two modes, recorded up to its first revisited `(mode, cell)` state.
///
/// In [`RightMode::Mark`] the cursor emits the marked copy of the cell and
/// moves one cell right, switching to [`RightMode::ZeroRun`] after a 0. In
/// `ZeroRun` it keeps emitting marked 0s; the 1 closing the run is emitted
/// *plain* and moves the cursor right and one row down (the time coordinate
/// wrapping back into the periodic band like the left trajectory's).
///
/// Exactly one symbol is emitted per visited state, so `emissions()[i]`
/// belongs to `points()[i]` and the stem/seed split falls at `start()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RightWalk {
    points: Vec<(RightMode, usize, usize)>,
    emissions: SymWord,
    start: usize,
    period: usize,
}

impl RightWalk {
    pub fn points(&self) -> &[(RightMode, usize, usize)] {
        &self.points
    }

    pub fn emissions(&self) -> &SymWord {
        &self.emissions
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn period(&self) -> usize {
        self.period
    }

    /// `start + period`, the length of the recorded prefix.
    pub fn first_recurrence(&self) -> usize {
        self.start + self.period
    }
}

/// Runs the right-side walk over a matrix, starting at the top-left cell in
/// [`RightMode::Mark`].
///
/// Note the revisit check is on the full cursor state: a cell revisited in
/// the *other* mode continues the walk (its future differs), which happens
/// whenever a zero run wraps past the walk's starting cell.
pub fn right_walk(m: &Matrix, alpha: usize, delta: usize) -> Result<RightWalk, Error> {
    if let Some(row) = m.all_zero_row() {
        return Err(Error::AllZeroRow { row });
    }
    let n = m.width();
    let mut first_visit = std::collections::HashMap::new();
    let mut points = Vec::new();
    let mut emissions = Vec::new();
    let (mut mode, mut t, mut c) = (RightMode::Mark, 0, 0);
    loop {
        if let Some(&seen_at) = first_visit.get(&(mode, t, c)) {
            let period = points.len() - seen_at;
            return Ok(RightWalk {
                points,
                emissions: Word::new(emissions),
                start: seen_at,
                period,
            });
        }
        first_visit.insert((mode, t, c), points.len());
        points.push((mode, t, c));
        let s = m.at(t, c);
        match mode {
            RightMode::Mark => {
                emissions.push(Sym::marked(s));
                c = (c + 1) % n;
                if s == Bit::Zero {
                    mode = RightMode::ZeroRun;
                }
            }
            RightMode::ZeroRun => {
                if s == Bit::Zero {
                    emissions.push(Sym::MarkedZero);
                    c = (c + 1) % n;
                } else {
                    emissions.push(Sym::One);
                    t = next_row(t, alpha, delta);
                    c = (c + 1) % n;
                    mode = RightMode::Mark;
                }
            }
        }
    }
}

/// The matrix symbols along the trajectory, in visiting order.
pub fn trajectory_symbols(m: &Matrix, traj: &Trajectory) -> BitWord {
    traj.points().iter().map(|&(t, c)| m.at(t, c)).collect()
}

/// The left U-word: entry `i` is `1` where the trajectory reads a 1, and
/// `0` followed by the *underlined* wrapped-left neighbour where it reads
/// a 0.
pub fn build_left_u(m: &Matrix, traj: &Trajectory) -> WordOfWords<Sym> {
    let n = m.width();
    let entries = traj
        .points()
        .iter()
        .map(|&(t, c)| {
            if m.at(t, c) == Bit::One {
                Word::new(vec![Sym::One])
            } else {
                let neighbour = m.at(t, (c + n - 1) % n);
                Word::new(vec![Sym::Zero, Sym::marked(neighbour)])
            }
        })
        .collect();
    WordOfWords::new(entries)
}

/// Runs the whole left construction for a binary word `X`: wrapped run,
/// trajectory, U-word, then stem = reverse of the flattened pre-cyclic part
/// and seed = reduction of the reverse of the flattened cyclic part.
pub fn left_seed_stem(x: &BitWord) -> Result<SeedStem, Error> {
    let run = wrapped_run(x, None)?;
    let m = run.matrix();
    let traj = left_trajectory(&m, run.alpha(), run.delta())?;
    let u = build_left_u(&m, &traj);
    let (pre, cyc) = u.split_at(traj.start());
    Ok(SeedStem {
        side: Side::Left,
        stem: pre.flatten().reverse(),
        seed: cyc.flatten().reverse().reduce(),
    })
}

/// Runs the whole right construction for a binary word `Y`: wrapped run,
/// two-mode walk, then stem = the emissions before the cycle and seed = the
/// reduction of one cycle of emissions (no reversals on this side).
pub fn right_seed_stem(y: &BitWord) -> Result<SeedStem, Error> {
    let run = wrapped_run(y, None)?;
    let walk = right_walk(&run.matrix(), run.alpha(), run.delta())?;
    let (pre, cyc) = walk.emissions().split_at(walk.start());
    Ok(SeedStem {
        side: Side::Right,
        stem: pre,
        seed: cyc.reduce(),
    })
}
