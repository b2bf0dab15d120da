//! ASCII rendering of spacetime diagrams: glyph mapping, causal-future
//! emphasis markers, and row selection over automaton runs and machine
//! traces. Output is deterministic byte-for-byte for fixed inputs.

use crate::machine::EmulationTrace;
use crate::rule110::LightConeGrid;
use crate::words::{Sym, SymWord};

/// Mapping from tape symbols to display glyphs.
///
/// Must be injective so distinct symbols stay distinguishable; the renderer
/// asserts this before drawing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlyphMap {
    pub zero: char,
    pub marked_zero: char,
    pub unknown: char,
    pub marked_one: char,
    pub one: char,
}

impl Default for GlyphMap {
    fn default() -> Self {
        GlyphMap {
            zero: '.',
            marked_zero: 'o',
            unknown: '?',
            marked_one: 'i',
            one: '#',
        }
    }
}

impl GlyphMap {
    pub fn glyph(&self, s: Sym) -> char {
        match s {
            Sym::Zero => self.zero,
            Sym::MarkedZero => self.marked_zero,
            Sym::Unknown => self.unknown,
            Sym::MarkedOne => self.marked_one,
            Sym::One => self.one,
        }
    }

    pub fn is_injective(&self) -> bool {
        let glyphs = [
            self.zero,
            self.marked_zero,
            self.unknown,
            self.marked_one,
            self.one,
        ];
        glyphs
            .iter()
            .enumerate()
            .all(|(i, g)| glyphs[i + 1..].iter().all(|h| h != g))
    }
}

/// Which rows of a spacetime collection a rendering shows.
///
/// `EveryStep` keeps all rows it is given (an automaton run has one row per
/// step); the switch selections filter machine-trace rows by provenance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowSelection {
    EveryStep,
    LeftSwitches,
    RightSwitches,
    Interleaved,
}

/// How a diagram is drawn: glyphs, causal-future emphasis, row selection.
#[derive(Debug, Clone)]
pub struct RenderStyle {
    pub glyphs: GlyphMap,
    pub emphasize: bool,
    pub selection: RowSelection,
}

impl Default for RenderStyle {
    fn default() -> Self {
        RenderStyle {
            glyphs: GlyphMap::default(),
            emphasize: false,
            selection: RowSelection::EveryStep,
        }
    }
}

/// Provenance of a renderable row: automaton step `t`, machine snapshot at
/// the `i`-th left switch, or machine snapshot at the `j`-th right sweep end.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowKind {
    CaStep(usize),
    LeftSwitch(usize),
    RightSweepEnd(usize),
}

/// One renderable row: provenance, cell index of the first symbol, the
/// symbols, and the inclusive causal-future cell range to emphasize, if any.
#[derive(Debug, Clone)]
pub struct RenderRow {
    pub kind: RowKind,
    pub start: i64,
    pub symbols: SymWord,
    pub cone: Option<(i64, i64)>,
}

fn selected(kind: RowKind, selection: RowSelection) -> bool {
    match selection {
        RowSelection::EveryStep => true,
        RowSelection::LeftSwitches => matches!(kind, RowKind::LeftSwitch(_)),
        RowSelection::RightSwitches => matches!(kind, RowKind::RightSweepEnd(_)),
        RowSelection::Interleaved => {
            matches!(kind, RowKind::LeftSwitch(_) | RowKind::RightSweepEnd(_))
        }
    }
}

/// The causal-future cells of a length-`l` core at time `t`, as an inclusive
/// range; `None` when the cone is empty.
pub fn cone_bounds(l: usize, t: usize) -> Option<(i64, i64)> {
    if l + 2 * t == 0 {
        None
    } else {
        Some((-(t as i64), (l + t) as i64 - 1))
    }
}

/// Draws the selected rows, one text line per row, in the order given.
///
/// With emphasis on, a row's cone cells are wrapped in `[` and `]` markers;
/// rows without a cone are drawn bare.
pub fn render_spacetime(rows: &[RenderRow], style: &RenderStyle) -> String {
    assert!(style.glyphs.is_injective(), "glyph map must be injective");
    let mut out = String::new();
    for row in rows.iter().filter(|r| selected(r.kind, style.selection)) {
        let cone = if style.emphasize { row.cone } else { None };
        if let Some((lo, hi)) = cone {
            let last = row.start + row.symbols.len() as i64 - 1;
            assert!(
                lo >= row.start && hi <= last,
                "cone {lo}..={hi} sticks out of the row window {}..={last}",
                row.start
            );
        }
        for (i, s) in row.symbols.iter().enumerate() {
            let c = row.start + i as i64;
            if cone.is_some_and(|(lo, _)| c == lo) {
                out.push('[');
            }
            out.push(style.glyphs.glyph(s));
            if cone.is_some_and(|(_, hi)| c == hi) {
                out.push(']');
            }
        }
        out.push('\n');
    }
    out
}

/// Rows `0..=horizon` of a materialized automaton run over the fixed cell
/// window `[lo, hi)`, tagged with the causal future of a length-`l` core.
pub fn ca_rows(grid: &LightConeGrid, l: usize, lo: i64, hi: i64) -> Vec<RenderRow> {
    (0..=grid.horizon())
        .map(|t| {
            let symbols: SymWord = (lo..hi).map(|c| Sym::plain(grid.at(t, c))).collect();
            RenderRow {
                kind: RowKind::CaStep(t),
                start: lo,
                symbols,
                cone: cone_bounds(l, t),
            }
        })
        .collect()
}

/// A window `[lo, hi)` covering every cell any sweep of the trace reached,
/// plus one untouched background cell on each side.
pub fn trace_window(trace: &EmulationTrace) -> (i64, i64) {
    let heads = || {
        trace
            .snapshots
            .iter()
            .chain(trace.right_sweep_ends.iter())
            .map(|s| s.head())
    };
    let lo = heads().min().unwrap_or(0) - 1;
    let hi = heads().max().unwrap_or(0) + 2;
    (lo, hi)
}

/// All switch rows of a machine trace over a fixed window `[lo, hi)`, merged
/// into time order: the `i`-th left switch carries the cone of core length
/// `l` at time `i`; right sweep ends carry no cone.
pub fn trace_rows(trace: &EmulationTrace, l: usize, lo: i64, hi: i64) -> Vec<RenderRow> {
    let mut rows: Vec<(u64, RenderRow)> = Vec::new();
    for (i, snap) in trace.snapshots.iter().enumerate() {
        rows.push((
            snap.time(),
            RenderRow {
                kind: RowKind::LeftSwitch(i),
                start: lo,
                symbols: (lo..hi).map(|c| snap.at(c)).collect(),
                cone: cone_bounds(l, i),
            },
        ));
    }
    for (j, snap) in trace.right_sweep_ends.iter().enumerate() {
        rows.push((
            snap.time(),
            RenderRow {
                kind: RowKind::RightSweepEnd(j),
                start: lo,
                symbols: (lo..hi).map(|c| snap.at(c)).collect(),
                cone: None,
            },
        ));
    }
    rows.sort_by_key(|(time, _)| *time);
    rows.into_iter().map(|(_, row)| row).collect()
}

/// The staircase view of a 0-background trace: snapshot `i` over cells
/// `−(i+1) ..= l+i`, one background cell beyond each sweep frontier.
pub fn wolfram_rows(trace: &EmulationTrace, l: usize) -> Vec<RenderRow> {
    trace
        .snapshots
        .iter()
        .enumerate()
        .map(|(i, snap)| {
            let lo = -(i as i64) - 1;
            let hi = (l + i) as i64 + 1;
            RenderRow {
                kind: RowKind::LeftSwitch(i),
                start: lo,
                symbols: (lo..hi).map(|c| snap.at(c)).collect(),
                cone: cone_bounds(l, i),
            }
        })
        .collect()
}
