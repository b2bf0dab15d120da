//! Rule 110 dynamics: the local rule, wrapped (circular) runs with period
//! detection, and finite light-cone evaluation of runs on infinite
//! eventually-periodic states.

use std::collections::HashMap;

use crate::words::{Bit, BitWord, Word};
use crate::{floored_mod, Error};

/// The Rule 110 local rule as a lookup of the three-cell neighborhood.
pub fn local_rule(left: Bit, center: Bit, right: Bit) -> Bit {
    use Bit::{One, Zero};
    match (left, center, right) {
        (Zero, Zero, Zero) => Zero,
        (Zero, Zero, One) => One,
        (Zero, One, Zero) => One,
        (Zero, One, One) => One,
        (One, Zero, Zero) => Zero,
        (One, Zero, One) => One,
        (One, One, Zero) => One,
        (One, One, One) => Zero,
    }
}

/// The same rule in its change-condition form: a cell flips iff a 1 is born
/// (cell is 0 and its right neighbour is 1) or dies by overcrowding (cell and
/// both neighbours are 1). Kept as a second code path; an exhaustive test
/// pins the equivalence with [`local_rule`].
pub fn local_rule_causality(left: Bit, center: Bit, right: Bit) -> Bit {
    let birth = center == Bit::Zero && right == Bit::One;
    let death = left == Bit::One && center == Bit::One && right == Bit::One;
    if birth {
        Bit::One
    } else if death {
        Bit::Zero
    } else {
        center
    }
}

/// One synchronous step of the n-wrapped run: cell `n−1` is the left
/// neighbour of cell `0` and vice versa.
pub fn step_wrapped(row: &BitWord) -> BitWord {
    let n = row.len();
    assert!(n >= 1, "wrapped step needs a nonempty row");
    (0..n)
        .map(|c| {
            local_rule(
                row.at((c + n - 1) % n),
                row.at(c),
                row.at((c + 1) % n),
            )
        })
        .collect()
}

/// A wrapped run evolved to its first repeated row.
///
/// `alpha` is the onset of periodicity (least time whose row recurs), `delta`
/// the period, and `rows` holds times `0..beta()` — exactly the matrix of the
/// run. Once a row repeats the whole future is determined, so nothing after
/// `beta()−1` is retained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WrappedRun {
    rows: Vec<BitWord>,
    alpha: usize,
    delta: usize,
}

impl WrappedRun {
    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn delta(&self) -> usize {
        self.delta
    }

    /// Time of first repetition: `alpha + delta`.
    pub fn beta(&self) -> usize {
        self.alpha + self.delta
    }

    pub fn rows(&self) -> &[BitWord] {
        &self.rows
    }

    /// The run restricted to times `0..beta()` as an indexed grid.
    pub fn matrix(&self) -> Matrix {
        Matrix {
            rows: self.rows.clone(),
        }
    }
}

/// The matrix of a wrapped run: rows `0..β` of width `n`, indexed by
/// (time, cell).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: Vec<BitWord>,
}

impl Matrix {
    pub fn height(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.rows[0].len()
    }

    pub fn at(&self, t: usize, c: usize) -> Bit {
        self.rows[t].at(c)
    }

    pub fn rows(&self) -> &[BitWord] {
        &self.rows
    }

    /// The time of the first all-zero row, if any.
    pub fn all_zero_row(&self) -> Option<usize> {
        self.rows
            .iter()
            .position(|r| r.iter().all(|b| b == Bit::Zero))
    }
}

/// Default step cap for [`wrapped_run`]: a repetition must occur within `2^n`
/// steps, capped at 10^6 to keep accidental huge words from stalling.
pub fn default_max_steps(n: usize) -> usize {
    if n >= 20 {
        1_000_000
    } else {
        (1usize << n).min(1_000_000)
    }
}

/// Evolves the wrapped run until a row repeats, returning the run with its
/// onset of periodicity and period.
///
/// Detection uses a map from row to first occurrence time, so both `alpha`
/// and `delta` come out exact in one pass. `max_steps` defaults to
/// [`default_max_steps`].
pub fn wrapped_run(initial: &BitWord, max_steps: Option<usize>) -> Result<WrappedRun, Error> {
    assert!(!initial.is_empty(), "wrapped run needs a nonempty word");
    let max_steps = max_steps.unwrap_or_else(|| default_max_steps(initial.len()));
    let mut first_seen: HashMap<BitWord, usize> = HashMap::new();
    let mut rows = vec![initial.clone()];
    first_seen.insert(initial.clone(), 0);
    for t in 1..=max_steps {
        let next = step_wrapped(rows.last().expect("rows nonempty"));
        if let Some(&alpha) = first_seen.get(&next) {
            let delta = t - alpha;
            rows.truncate(alpha + delta);
            return Ok(WrappedRun { rows, alpha, delta });
        }
        first_seen.insert(next.clone(), t);
        rows.push(next);
    }
    Err(Error::PeriodNotFound { max_steps })
}

/// An infinite automaton state: core word `I` on cells `0..l`, optional
/// inserts `P` (left) and `Q` (right) adjacent to it, and words `A`, `B`
/// repeating outwards forever.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaState {
    pub left: BitWord,
    pub left_insert: BitWord,
    pub core: BitWord,
    pub right_insert: BitWord,
    pub right: BitWord,
}

impl CaState {
    /// State with no inserts: `⟨ ←A  I  B→ ⟩`.
    pub fn backgrounds(left: BitWord, core: BitWord, right: BitWord) -> Self {
        CaState {
            left,
            left_insert: Word::empty(),
            core,
            right_insert: Word::empty(),
            right,
        }
    }

    /// The cell value at any integer index, resolving the five zones:
    /// core, inserts, then `A`/`B` repeated outward (floored modulus, so
    /// negative cells index `A` from its right end).
    pub fn at(&self, c: i64) -> Bit {
        let l = self.core.len() as i64;
        let p = self.left_insert.len() as i64;
        let q = self.right_insert.len() as i64;
        if (0..l).contains(&c) {
            self.core.at(c as usize)
        } else if (-p..0).contains(&c) {
            self.left_insert.at((c + p) as usize)
        } else if (l..l + q).contains(&c) {
            self.right_insert.at((c - l) as usize)
        } else if c < -p {
            assert!(!self.left.is_empty(), "left background must be nonempty");
            self.left.at(floored_mod(c + p, self.left.len()))
        } else {
            assert!(!self.right.is_empty(), "right background must be nonempty");
            self.right.at(floored_mod(c - l - q, self.right.len()))
        }
    }
}

/// A finite spacetime window of an infinite run, exact on a light cone.
///
/// Row `t` is guaranteed on cells `[base_offset + t, right_edge − t]`; reading
/// outside that trapezoid is a contract violation and panics.
#[derive(Debug, Clone)]
pub struct LightConeGrid {
    base_offset: i64,
    rows: Vec<BitWord>,
}

impl LightConeGrid {
    pub fn horizon(&self) -> usize {
        self.rows.len() - 1
    }

    /// Leftmost guaranteed cell of row `t`.
    pub fn guaranteed_left(&self, t: usize) -> i64 {
        self.base_offset + t as i64
    }

    /// Rightmost guaranteed cell of row `t`.
    pub fn guaranteed_right(&self, t: usize) -> i64 {
        self.base_offset + self.rows[0].len() as i64 - 1 - t as i64
    }

    pub fn at(&self, t: usize, c: i64) -> Bit {
        assert!(
            c >= self.guaranteed_left(t) && c <= self.guaranteed_right(t),
            "cell {c} at time {t} is outside the guaranteed region"
        );
        self.rows[t].at((c - self.base_offset) as usize)
    }
}

/// Materializes the run of `state` far enough to answer every query in the
/// causal future of the core word up to time `horizon`.
///
/// The initial window spans `[−2T−2, l+2T+2)`; each step shrinks the valid
/// region by one cell per side, which still leaves two spare cells beyond the
/// strict cone at the horizon.
pub fn future_grid(state: &CaState, horizon: usize) -> LightConeGrid {
    let t = horizon as i64;
    let l = state.core.len() as i64;
    let lo = -2 * t - 2;
    let hi = l + 2 * t + 2;
    let mut rows = Vec::with_capacity(horizon + 1);
    let first: BitWord = (lo..hi).map(|c| state.at(c)).collect();
    rows.push(first);
    for _ in 0..horizon {
        let prev = rows.last().expect("rows nonempty");
        // Edge cells keep their old value as padding; they fall outside the
        // guaranteed region immediately, so nothing ever reads them.
        let next: BitWord = (0..prev.len())
            .map(|i| {
                if i == 0 || i == prev.len() - 1 {
                    prev.at(i)
                } else {
                    local_rule(prev.at(i - 1), prev.at(i), prev.at(i + 1))
                }
            })
            .collect();
        rows.push(next);
    }
    LightConeGrid {
        base_offset: lo,
        rows,
    }
}

/// Is event `(t, c)` in the causal future of a length-`l` core word, i.e.
/// `−t ≤ c < l + t`?
pub fn causal_future_contains(l: usize, t: usize, c: i64) -> bool {
    -(t as i64) <= c && c < l as i64 + t as i64
}
