//! Irreducible representations of W(D_n) as symbol classes, and the
//! almost special (`Y_n`) and 2-special (`X_n`) subsets.
//!
//! A non-degenerate class gives one irreducible representation; a
//! degenerate class gives two, tagged [`Marker::I`] and [`Marker::II`].
//! Degenerate labels belong to both subsets unconditionally.
//!
//! Membership conditions are checked on the reduced representative in both
//! row orders. Prepending a `(0, 0)` column only adds the vacuous
//! constraints `0 ≤ 0` and `0 ≤ λ_1 + 4`, so the reduced form decides.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::partitions::partitions;
use crate::symbols::{Bipartition, Symbol, SymbolClass};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassificationError {
    #[error("class {0} is degenerate; use the label predicates instead")]
    Degenerate(SymbolClass),
    #[error("rank {0} is out of range (need n >= {1})")]
    RankOutOfRange(u32, u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Marker {
    I,
    II,
}

impl fmt::Display for Marker {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Marker::I => "I",
            Marker::II => "II",
        })
    }
}

/// An element of Irr(W(D_n)).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IrrLabelD {
    class: SymbolClass,
    marker: Option<Marker>,
}

impl IrrLabelD {
    /// Label of a non-degenerate class.
    pub fn new(class: SymbolClass) -> Result<Self, ClassificationError> {
        if class.is_degenerate() {
            return Err(ClassificationError::Degenerate(class));
        }
        Ok(IrrLabelD { class, marker: None })
    }

    /// One of the two labels of a degenerate class.
    ///
    /// Panics if `class` is not degenerate.
    pub fn degenerate(class: SymbolClass, marker: Marker) -> Self {
        assert!(class.is_degenerate(), "{class} is not degenerate");
        IrrLabelD { class, marker: Some(marker) }
    }

    /// All labels carried by `class`: one, or two when degenerate.
    pub fn labels_of(class: SymbolClass) -> Vec<IrrLabelD> {
        if class.is_degenerate() {
            vec![
                IrrLabelD::degenerate(class.clone(), Marker::I),
                IrrLabelD::degenerate(class, Marker::II),
            ]
        } else {
            vec![IrrLabelD { class, marker: None }]
        }
    }

    pub fn class(&self) -> &SymbolClass {
        &self.class
    }

    pub fn marker(&self) -> Option<Marker> {
        self.marker
    }

    pub fn is_degenerate(&self) -> bool {
        self.marker.is_some()
    }
}

impl fmt::Display for IrrLabelD {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.marker {
            None => write!(f, "{}", self.class),
            Some(m) => write!(f, "{} [{m}]", self.class),
        }
    }
}

/// `λ_i ≤ μ_i` for all `i`, at least one strict.
fn dominated_strictly(lower: &[u32], upper: &[u32]) -> bool {
    lower.iter().zip(upper).all(|(l, u)| l <= u) && lower != upper
}

/// `μ_i ≤ λ_{i+1} + 3` for `i = 1, …, m − 1`.
fn gaps_bounded(lower: &[u32], upper: &[u32]) -> bool {
    upper.iter().zip(&lower[1..]).all(|(&u, &l)| u <= l + 3)
}

/// Y-condition on a single row order, on any representative.
pub fn y_condition(s: &Symbol) -> bool {
    dominated_strictly(s.top(), s.bottom())
}

/// X-condition on a single row order, on any representative.
pub fn x_condition(s: &Symbol) -> bool {
    y_condition(s) && gaps_bounded(s.top(), s.bottom())
}

fn either_order(c: &SymbolClass, cond: fn(&Symbol) -> bool) -> Result<bool, ClassificationError> {
    if c.is_degenerate() {
        return Err(ClassificationError::Degenerate(c.clone()));
    }
    let rep = c.representative();
    Ok(cond(rep) || cond(&rep.swapped()))
}

/// Membership of a non-degenerate class in `Y_n`.
pub fn in_y(c: &SymbolClass) -> Result<bool, ClassificationError> {
    either_order(c, y_condition)
}

/// Membership of a non-degenerate class in `X_n`.
pub fn in_x(c: &SymbolClass) -> Result<bool, ClassificationError> {
    either_order(c, x_condition)
}

pub fn is_almost_special(l: &IrrLabelD) -> bool {
    l.is_degenerate() || in_y(&l.class).expect("non-degenerate label")
}

pub fn is_two_special(l: &IrrLabelD) -> bool {
    l.is_degenerate() || in_x(&l.class).expect("non-degenerate label")
}

/// All symbol classes of rank `n`, sorted.
///
/// Each unordered pair of partitions `{α, β}` with `|α| + |β| = n` is
/// visited once.
pub fn enumerate_classes(n: u32) -> BTreeSet<SymbolClass> {
    let by_size: Vec<Vec<Vec<u32>>> = (0..=n).map(partitions).collect();
    let mut classes = BTreeSet::new();
    for small in 0..=n / 2 {
        let large = n - small;
        let (ps, pl) = (&by_size[small as usize], &by_size[large as usize]);
        for (i, alpha) in ps.iter().enumerate() {
            // Same-size pairs: only i <= j.
            let start = if small == large { i } else { 0 };
            for beta in &pl[start..] {
                let b = Bipartition::new(alpha.clone(), beta.clone()).expect("partitions");
                let class = Symbol::from_bipartition(&b)
                    .canonical()
                    .expect("n >= 1 gives positive rank");
                classes.insert(class);
            }
        }
    }
    classes
}

/// Irr(W(D_n)) as labels, sorted by class then marker.
pub fn enumerate_irr(n: u32) -> Result<Vec<IrrLabelD>, ClassificationError> {
    if n == 0 {
        return Err(ClassificationError::RankOutOfRange(n, 1));
    }
    Ok(enumerate_classes(n).into_iter().flat_map(IrrLabelD::labels_of).collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub rank: u32,
    pub total: usize,
    pub almost_special: usize,
    pub two_special: usize,
    /// Labels that are 2-special but not almost special.
    pub violations: Vec<String>,
}

impl ClassificationReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Check `X_n ⊔ 2·Sy''_n ⊆ Y_n ⊔ 2·Sy''_n` by exhaustive enumeration.
pub fn verify_two_special_in_almost_special(
    n: u32,
) -> Result<ClassificationReport, ClassificationError> {
    if n < 4 {
        return Err(ClassificationError::RankOutOfRange(n, 4));
    }
    let labels = enumerate_irr(n)?;
    let mut report = ClassificationReport {
        rank: n,
        total: labels.len(),
        almost_special: 0,
        two_special: 0,
        violations: Vec::new(),
    };
    for label in &labels {
        let a = is_almost_special(label);
        let x = is_two_special(label);
        report.almost_special += a as usize;
        report.two_special += x as usize;
        if x && !a {
            report.violations.push(label.to_string());
        }
    }
    Ok(report)
}
