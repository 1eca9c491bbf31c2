//! Symbols of defect zero (type D) and their equivalence classes.
//!
//! A symbol is a pair of strictly increasing rows of equal length `m`.
//! Two symbols are equivalent when they are related by a sequence of
//! shifts (prepend `0` to both rows and add one to every other entry) and
//! row swaps. Each class is represented here by a [`SymbolClass`] holding
//! the fully reduced symbol with its lexicographically smaller row on top.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymbolError {
    #[error("symbol rows have different lengths ({top} and {bottom})")]
    UnequalRows { top: usize, bottom: usize },
    #[error("symbol rows must be nonempty")]
    EmptyRows,
    #[error("symbol row {row} is not strictly increasing: {entries:?}")]
    NotIncreasing { row: &'static str, entries: Vec<u32> },
    #[error("symbol has negative rank")]
    NegativeRank,
    #[error("symbol has rank 0")]
    RankZero,
    #[error("cannot parse symbol {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

/// Two strictly increasing rows of non-negative integers of the same length.
///
/// Ordering is lexicographic on `(top, bottom)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawSymbol")]
pub struct Symbol {
    top: Vec<u32>,
    bottom: Vec<u32>,
}

#[derive(Deserialize)]
struct RawSymbol {
    top: Vec<u32>,
    bottom: Vec<u32>,
}

impl TryFrom<RawSymbol> for Symbol {
    type Error = SymbolError;

    fn try_from(raw: RawSymbol) -> Result<Self, Self::Error> {
        Symbol::new(raw.top, raw.bottom)
    }
}

fn check_row(row: &'static str, entries: &[u32]) -> Result<(), SymbolError> {
    if entries.windows(2).all(|w| w[0] < w[1]) {
        Ok(())
    } else {
        Err(SymbolError::NotIncreasing { row, entries: entries.to_vec() })
    }
}

impl Symbol {
    pub fn new(top: Vec<u32>, bottom: Vec<u32>) -> Result<Self, SymbolError> {
        if top.len() != bottom.len() {
            return Err(SymbolError::UnequalRows { top: top.len(), bottom: bottom.len() });
        }
        if top.is_empty() {
            return Err(SymbolError::EmptyRows);
        }
        check_row("top", &top)?;
        check_row("bottom", &bottom)?;
        Ok(Symbol { top, bottom })
    }

    pub fn top(&self) -> &[u32] {
        &self.top
    }

    pub fn bottom(&self) -> &[u32] {
        &self.bottom
    }

    /// Row length `m`.
    pub fn len(&self) -> usize {
        self.top.len()
    }

    /// Always false; kept for clippy's `len_without_is_empty`.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Largest entry in either row.
    pub fn max_entry(&self) -> u32 {
        // Rows are increasing and nonempty.
        self.top[self.len() - 1].max(self.bottom[self.len() - 1])
    }

    /// `n = Σλ + Σμ − m² + m`.
    pub fn rank(&self) -> Result<u32, SymbolError> {
        let m = self.len() as i64;
        let total: i64 = self.top.iter().chain(&self.bottom).map(|&x| x as i64).sum();
        let n = total - m * m + m;
        u32::try_from(n).map_err(|_| SymbolError::NegativeRank)
    }

    /// The same symbol with its rows exchanged.
    pub fn swapped(&self) -> Symbol {
        Symbol { top: self.bottom.clone(), bottom: self.top.clone() }
    }

    /// `(λ | μ) ↦ (0, λ+1 | 0, μ+1)`.
    pub fn shift_up(&self) -> Symbol {
        let lift = |row: &[u32]| -> Vec<u32> {
            std::iter::once(0).chain(row.iter().map(|&x| x + 1)).collect()
        };
        Symbol { top: lift(&self.top), bottom: lift(&self.bottom) }
    }

    /// Undo shifts while both rows start with `0`.
    ///
    /// Fails with [`SymbolError::RankZero`] if reduction would consume the
    /// whole symbol, which happens exactly for symbols of rank 0.
    pub fn reduce(&self) -> Result<Symbol, SymbolError> {
        let k = self
            .top
            .iter()
            .zip(&self.bottom)
            .enumerate()
            .take_while(|&(i, (&a, &b))| a == i as u32 && b == i as u32)
            .count();
        if k == self.len() {
            return Err(SymbolError::RankZero);
        }
        let k32 = k as u32;
        let drop = |row: &[u32]| -> Vec<u32> { row[k..].iter().map(|&x| x - k32).collect() };
        Ok(Symbol { top: drop(&self.top), bottom: drop(&self.bottom) })
    }

    pub fn is_reduced(&self) -> bool {
        !(self.top[0] == 0 && self.bottom[0] == 0)
    }

    /// True iff the two rows coincide. Shifts preserve this, so the answer
    /// is the same for every representative of the class.
    pub fn is_degenerate(&self) -> bool {
        self.top == self.bottom
    }

    pub fn canonical(&self) -> Result<SymbolClass, SymbolError> {
        SymbolClass::new(self)
    }

    /// Whether `self` and `other` lie in the same class.
    pub fn is_equivalent(&self, other: &Symbol) -> Result<bool, SymbolError> {
        Ok(self.canonical()? == other.canonical()?)
    }

    /// Build the symbol `λ_i = α_i + (i − 1)`, `μ_i = β_i + (i − 1)` after
    /// padding both partitions with zeros to a common length.
    pub fn from_bipartition(b: &Bipartition) -> Symbol {
        let m = b.alpha.len().max(b.beta.len()).max(1);
        let row = |parts: &[u32]| -> Vec<u32> {
            let pad = m - parts.len();
            (0..m)
                .map(|i| {
                    let part = if i < pad { 0 } else { parts[i - pad] };
                    part + i as u32
                })
                .collect()
        };
        Symbol { top: row(&b.alpha), bottom: row(&b.beta) }
    }

    pub fn to_bipartition(&self) -> Bipartition {
        let unshift = |row: &[u32]| -> Vec<u32> {
            row.iter().enumerate().map(|(i, &x)| x - i as u32).collect()
        };
        Bipartition::new(unshift(&self.top), unshift(&self.bottom))
            .expect("symbol rows unshift to partitions")
    }
}

fn write_row(f: &mut fmt::Formatter<'_>, row: &[u32]) -> fmt::Result {
    for (i, x) in row.iter().enumerate() {
        if i > 0 {
            f.write_str(" ")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

/// Text form `"l1 l2 ... lm / u1 u2 ... um"`.
impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_row(f, &self.top)?;
        f.write_str(" / ")?;
        write_row(f, &self.bottom)
    }
}

impl FromStr for Symbol {
    type Err = SymbolError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse_err = |reason: String| SymbolError::Parse { input: s.to_string(), reason };
        let (top, bottom) = s
            .split_once('/')
            .ok_or_else(|| parse_err("expected `top / bottom`".into()))?;
        let parse_row = |text: &str| -> Result<Vec<u32>, SymbolError> {
            text.split_whitespace()
                .map(|tok| tok.parse::<u32>().map_err(|e| parse_err(format!("{tok:?}: {e}"))))
                .collect()
        };
        Symbol::new(parse_row(top)?, parse_row(bottom)?)
    }
}

/// Canonical representative of a class of symbols of positive rank.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymbolClass {
    rep: Symbol,
}

impl SymbolClass {
    /// Reduce, then put the lexicographically smaller row on top.
    pub fn new(s: &Symbol) -> Result<Self, SymbolError> {
        let reduced = s.reduce()?;
        let rep = match reduced.top.cmp(&reduced.bottom) {
            Ordering::Greater => reduced.swapped(),
            _ => reduced,
        };
        Ok(SymbolClass { rep })
    }

    pub fn representative(&self) -> &Symbol {
        &self.rep
    }

    pub fn rank(&self) -> u32 {
        self.rep.rank().expect("class representatives have non-negative rank")
    }

    pub fn is_degenerate(&self) -> bool {
        self.rep.is_degenerate()
    }
}

impl fmt::Display for SymbolClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.rep.fmt(f)
    }
}

impl Serialize for SymbolClass {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.rep.serialize(serializer)
    }
}

/// A pair of partitions `(alpha, beta)`, parts smallest first.
///
/// Zero parts are accepted on input and stripped, so two bipartitions that
/// differ only by zero padding compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Bipartition {
    alpha: Vec<u32>,
    beta: Vec<u32>,
}

impl Bipartition {
    pub fn new(alpha: Vec<u32>, beta: Vec<u32>) -> Result<Self, SymbolError> {
        let normalize = |row: &'static str, parts: Vec<u32>| -> Result<Vec<u32>, SymbolError> {
            if !parts.windows(2).all(|w| w[0] <= w[1]) {
                return Err(SymbolError::NotIncreasing { row, entries: parts });
            }
            Ok(parts.into_iter().filter(|&p| p > 0).collect())
        };
        Ok(Bipartition { alpha: normalize("alpha", alpha)?, beta: normalize("beta", beta)? })
    }

    pub fn alpha(&self) -> &[u32] {
        &self.alpha
    }

    pub fn beta(&self) -> &[u32] {
        &self.beta
    }

    /// `|alpha| + |beta|`.
    pub fn size(&self) -> u32 {
        self.alpha.iter().chain(&self.beta).sum()
    }
}

/// Shorthand for tests and examples: `sym("0 1 / 5 6")`.
///
/// Panics on malformed input.
pub fn sym(text: &str) -> Symbol {
    text.parse().unwrap_or_else(|e| panic!("{e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bip(alpha: &[u32], beta: &[u32]) -> Bipartition {
        Bipartition::new(alpha.to_vec(), beta.to_vec()).unwrap()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(sym("0 1 2 3 4 / 2 3 4 5 6").rank().unwrap(), 10);
        assert_eq!(sym("2 / 2").rank().unwrap(), 4);
        assert_eq!(sym("0 1 / 5 6").rank().unwrap(), 10);
    }

    #[test]
    fn shift_up_examples() {
        assert_eq!(sym("0 / 4").shift_up(), sym("0 1 / 0 5"));
        assert_eq!(sym("2 / 2").shift_up(), sym("0 3 / 0 3"));
        let s = sym("0 1 2 3 4 / 2 3 4 5 6");
        assert_eq!(s.shift_up().rank().unwrap(), 10);
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(sym("0 1 / 0 5").reduce().unwrap(), sym("0 / 4"));
        let s = sym("0 1 2 3 4 / 2 3 4 5 6");
        assert_eq!(s.reduce().unwrap(), s);
        assert_eq!(sym("0 3 / 0 3").reduce().unwrap(), sym("2 / 2"));
        assert_eq!(sym("0 1 2 / 0 1 4").reduce().unwrap(), sym("0 / 2"));
    }

    #[test]
    fn rank_zero_is_rejected() {
        assert_eq!(sym("0 / 0").reduce(), Err(SymbolError::RankZero));
        assert_eq!(sym("0 1 / 0 1").canonical(), Err(SymbolError::RankZero));
        // Not reducible at all, but still rank 0 is impossible here.
        assert_eq!(sym("0 1 / 0 2").rank().unwrap(), 1);
    }

    #[test]
    fn canonical_examples() {
        let a = sym("2 3 4 5 6 / 0 1 2 3 4").canonical().unwrap();
        let b = sym("0 1 2 3 4 / 2 3 4 5 6").canonical().unwrap();
        assert_eq!(a, b);
        assert_eq!(b.representative(), &sym("0 1 2 3 4 / 2 3 4 5 6"));
        assert_eq!(sym("2 / 2").canonical().unwrap().representative(), &sym("2 / 2"));
        let s = sym("1 4 / 0 2");
        assert_eq!(s.shift_up().canonical().unwrap(), s.canonical().unwrap());
        assert_eq!(s.canonical().unwrap().representative(), &sym("0 2 / 1 4"));
    }

    #[test]
    fn degeneracy() {
        assert!(sym("2 / 2").is_degenerate());
        assert!(!sym("0 1 2 3 4 / 2 3 4 5 6").is_degenerate());
        assert!(sym("0 3 / 0 3").is_degenerate());
    }

    #[test]
    fn bipartition_bridge() {
        let s = Symbol::from_bipartition(&bip(&[2], &[2]));
        assert_eq!(s, sym("2 / 2"));
        assert_eq!(s.rank().unwrap(), 4);

        let s = Symbol::from_bipartition(&bip(&[0, 1], &[1, 2]));
        assert_eq!(s, sym("0 2 / 1 3"));
        assert_eq!(s.rank().unwrap(), 4);

        let s = Symbol::from_bipartition(&bip(&[], &[7]));
        assert_eq!(s, sym("0 / 7"));
        assert_eq!(s.rank().unwrap(), 7);

        assert_eq!(sym("0 / 4").to_bipartition(), bip(&[], &[4]));
        assert_eq!(sym("0 2 / 1 3").to_bipartition(), bip(&[0, 1], &[1, 2]));
        assert_eq!(sym("2 / 2").to_bipartition(), bip(&[2], &[2]));
        assert_eq!(sym("0 2 / 1 3").to_bipartition().alpha(), &[1]);
    }

    #[test]
    fn degenerate_iff_equal_partitions() {
        assert!(Symbol::from_bipartition(&bip(&[1, 2], &[1, 2])).is_degenerate());
        assert!(!Symbol::from_bipartition(&bip(&[3], &[1, 2])).is_degenerate());
    }

    #[test]
    fn text_format() {
        let s = sym("0 1 2 3 4 / 2 3 4 5 6");
        assert_eq!(s.to_string(), "0 1 2 3 4 / 2 3 4 5 6");
        assert!(matches!("0 2 1 / 1 2 3".parse::<Symbol>(), Err(SymbolError::NotIncreasing { .. })));
        assert!(matches!("0 1 / 1".parse::<Symbol>(), Err(SymbolError::UnequalRows { .. })));
        assert!(matches!("0 -1 / 1 2".parse::<Symbol>(), Err(SymbolError::Parse { .. })));
        assert!(matches!("0 1 1 2".parse::<Symbol>(), Err(SymbolError::Parse { .. })));
        assert!(matches!(" / ".parse::<Symbol>(), Err(SymbolError::EmptyRows)));
    }

    #[test]
    fn json_format() {
        let s = sym("0 1 / 5 6");
        let text = serde_json::to_string(&s).unwrap();
        assert_eq!(text, r#"{"top":[0,1],"bottom":[5,6]}"#);
        assert_eq!(serde_json::from_str::<Symbol>(&text).unwrap(), s);
        assert!(serde_json::from_str::<Symbol>(r#"{"top":[1,0],"bottom":[5,6]}"#).is_err());
        assert!(serde_json::from_str::<Symbol>(r#"{"top":[0],"bottom":[5,6]}"#).is_err());
        assert!(serde_json::from_str::<Symbol>(r#"{"top":[-1],"bottom":[5]}"#).is_err());
    }
}
