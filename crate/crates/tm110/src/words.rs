//! Word algebra: finite symbol sequences with concatenation, reversal,
//! repetition, reduction (minimal period), flattening, and splitting.
//!
//! Two alphabets are used throughout: the automaton's bits `{0, 1}` and the
//! machine's five tape symbols `{0, 0̲, ?, 1̲, 1}`. Their textual encoding is
//! fixed as `'0'`, `'o'`, `'?'`, `'i'`, `'1'`: single unambiguous characters,
//! with digits reserved for the plain bits.

use std::fmt;

/// A symbol set with a fixed one-character textual encoding.
pub trait Alphabet: Copy + Eq {
    /// Human-readable description of the accepted characters, used in parse
    /// diagnostics.
    const DESCRIPTION: &'static str;

    fn from_char(ch: char) -> Option<Self>;
    fn to_char(self) -> char;
}

/// A cell value of the cellular automaton.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Bit {
    Zero,
    One,
}

impl Bit {
    pub fn is_one(self) -> bool {
        self == Bit::One
    }
}

impl Alphabet for Bit {
    const DESCRIPTION: &'static str = "'0' or '1'";

    fn from_char(ch: char) -> Option<Self> {
        match ch {
            '0' => Some(Bit::Zero),
            '1' => Some(Bit::One),
            _ => None,
        }
    }

    fn to_char(self) -> char {
        match self {
            Bit::Zero => '0',
            Bit::One => '1',
        }
    }
}

/// A tape symbol of the Turing machine.
///
/// `Marked*` are the underlined variants: a marked cell is one the head has
/// already read on the current rightward pass (or seeded that way), and
/// `Unknown` is the placeholder written over a 1 while its successor value is
/// still undetermined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sym {
    Zero,
    MarkedZero,
    Unknown,
    MarkedOne,
    One,
}

impl Sym {
    /// The plain symbol carrying the given bit.
    pub fn plain(b: Bit) -> Sym {
        match b {
            Bit::Zero => Sym::Zero,
            Bit::One => Sym::One,
        }
    }

    /// The underlined symbol carrying the given bit.
    pub fn marked(b: Bit) -> Sym {
        match b {
            Bit::Zero => Sym::MarkedZero,
            Bit::One => Sym::MarkedOne,
        }
    }

    /// The bit of a plain symbol; `None` for `0̲`, `1̲`, and `?`.
    pub fn plain_bit(self) -> Option<Bit> {
        match self {
            Sym::Zero => Some(Bit::Zero),
            Sym::One => Some(Bit::One),
            _ => None,
        }
    }
}

impl Alphabet for Sym {
    const DESCRIPTION: &'static str = "one of '0', 'o', '?', 'i', '1'";

    fn from_char(ch: char) -> Option<Self> {
        match ch {
            '0' => Some(Sym::Zero),
            'o' => Some(Sym::MarkedZero),
            '?' => Some(Sym::Unknown),
            'i' => Some(Sym::MarkedOne),
            '1' => Some(Sym::One),
            _ => None,
        }
    }

    fn to_char(self) -> char {
        match self {
            Sym::Zero => '0',
            Sym::MarkedZero => 'o',
            Sym::Unknown => '?',
            Sym::MarkedOne => 'i',
            Sym::One => '1',
        }
    }
}

/// A word failed to parse because of a character outside the alphabet.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid character {ch:?} at position {position}; expected {expected}")]
pub struct ParseWordError {
    pub ch: char,
    pub position: usize,
    pub expected: &'static str,
}

/// An immutable finite word over alphabet `S`.
///
/// All operations return fresh words; nothing aliases, so snapshots taken
/// later in the pipeline cannot be invalidated. Indexing out of range is a
/// contract violation and panics.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word<S>(Vec<S>);

pub type BitWord = Word<Bit>;
pub type SymWord = Word<Sym>;

impl<S: Alphabet> Word<S> {
    pub fn parse(text: &str) -> Result<Self, ParseWordError> {
        text.chars()
            .enumerate()
            .map(|(position, ch)| {
                S::from_char(ch).ok_or(ParseWordError {
                    ch,
                    position,
                    expected: S::DESCRIPTION,
                })
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }
}

impl<S: Alphabet> fmt::Display for Word<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.0 {
            write!(f, "{}", s.to_char())?;
        }
        Ok(())
    }
}

impl<S: Copy + Eq> Word<S> {
    pub fn new(symbols: Vec<S>) -> Self {
        Word(symbols)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn at(&self, i: usize) -> S {
        self.0[i]
    }

    pub fn symbols(&self) -> &[S] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = S> + '_ {
        self.0.iter().copied()
    }

    pub fn concat(&self, other: &Self) -> Self {
        Word(self.iter().chain(other.iter()).collect())
    }

    pub fn reverse(&self) -> Self {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn repeat(&self, n: usize) -> Self {
        let mut out = Vec::with_capacity(self.len() * n);
        for _ in 0..n {
            out.extend_from_slice(&self.0);
        }
        Word(out)
    }

    /// The shortest word `r` with `self = r^n` for some `n ≥ 1`.
    ///
    /// Uses the border characterization of the minimal period: the length-`k`
    /// word has minimal period `k − b` where `b` is the length of its longest
    /// proper border (computed by the KMP failure function), and that period
    /// generates the word exactly when it divides `k`. `reduce(ε) = ε`.
    pub fn reduce(&self) -> Self {
        let k = self.len();
        if k == 0 {
            return self.clone();
        }
        let mut failure = vec![0usize; k];
        let mut b = 0;
        for i in 1..k {
            while b > 0 && self.0[i] != self.0[b] {
                b = failure[b - 1];
            }
            if self.0[i] == self.0[b] {
                b += 1;
            }
            failure[i] = b;
        }
        let period = k - failure[k - 1];
        if k.is_multiple_of(period) {
            Word(self.0[..period].to_vec())
        } else {
            self.clone()
        }
    }

    /// Splits into `(prefix of length a, rest)`; `a` out of range panics.
    pub fn split_at(&self, a: usize) -> (Self, Self) {
        assert!(a <= self.len(), "split index {a} out of range 0..={}", self.len());
        let (lo, hi) = self.0.split_at(a);
        (Word(lo.to_vec()), Word(hi.to_vec()))
    }
}

impl<S> std::ops::Index<usize> for Word<S> {
    type Output = S;

    fn index(&self, i: usize) -> &S {
        &self.0[i]
    }
}

impl<S: Copy + Eq> FromIterator<S> for Word<S> {
    fn from_iter<I: IntoIterator<Item = S>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

/// A word whose entries are themselves words (the `U`-words of the wrap
/// construction are built as these, then flattened).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordOfWords<S>(Vec<Word<S>>);

impl<S: Copy + Eq> WordOfWords<S> {
    pub fn new(entries: Vec<Word<S>>) -> Self {
        WordOfWords(entries)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[Word<S>] {
        &self.0
    }

    /// Concatenation of all entries in order.
    pub fn flatten(&self) -> Word<S> {
        Word(self.0.iter().flat_map(|w| w.iter()).collect())
    }

    pub fn split_at(&self, a: usize) -> (Self, Self) {
        assert!(a <= self.len(), "split index {a} out of range 0..={}", self.len());
        let (lo, hi) = self.0.split_at(a);
        (WordOfWords(lo.to_vec()), WordOfWords(hi.to_vec()))
    }
}
