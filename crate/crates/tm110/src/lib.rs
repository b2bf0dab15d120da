#![forbid(unsafe_code)]

//! Simulation and exact cross-verification of the Rule 110 cellular automaton
//! against the Wolfram-Cook 2-state 5-symbol Turing machine.
//!
//! The machine runs on an infinite, eventually-periodic tape assembled from
//! "seeds" and "stems" — words extracted from the periodic part of a wrapped
//! Rule 110 run. The [`verifier`] module checks, event by event, that the tape
//! snapshots taken at the machine's left switches agree with the automaton on
//! the entire causal future of the input word.

pub mod machine;
pub mod render;
pub mod rule110;
pub mod verifier;
pub mod words;
pub mod wrap;

pub mod cli;

/// Errors shared by the simulation and construction routines.
///
/// Word parse errors are deliberately separate (see
/// [`words::ParseWordError`]): they are usage errors, while these signal that
/// a mathematically-defined operation does not apply or a budget ran out.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A wrapped run reached the all-zero word, which the wrap construction
    /// cannot handle (the trajectory would have no 1 to follow).
    #[error("matrix row {row} is all zeros; the wrap construction does not apply")]
    AllZeroRow { row: usize },

    /// A wrapped run failed to repeat a row within the step budget. A
    /// repetition always exists within 2^n steps, so this signals the cap,
    /// not mathematical absence.
    #[error("no repeated row within {max_steps} steps of the wrapped run")]
    PeriodNotFound { max_steps: usize },

    /// A machine run exhausted its step budget before collecting the
    /// requested number of left switches.
    #[error("step budget of {max_steps} exhausted after {switches_seen} left switches")]
    StepBudgetExceeded { max_steps: u64, switches_seen: usize },

    /// An input violates a stated precondition of the theorem being checked.
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
}

/// Floored modulus: the unique representative of `c` in `{0, …, m−1}`.
///
/// `%` in Rust truncates toward zero, which is wrong for negative cell
/// indices; every cell-to-zone lookup in the crate goes through this.
pub(crate) fn floored_mod(c: i64, m: usize) -> usize {
    let m = m as i64;
    (((c % m) + m) % m) as usize
}
