//! Strata of a family and their finite groups `H'/H`.
//!
//! Each listed stratum is named by its 2-special representation and comes
//! with a pair of cataloged subgroups `H ◁ H'` of the family group. The
//! attached group is recomputed from the pair and compared with the
//! recorded isomorphism type.

#![allow(clippy::result_large_err)]

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::exceptional_tables::{GroupType, RepLabel};
use crate::perm_groups::{identify, resolve_pair, GroupError, GroupKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StrataError {
    #[error("stratum {rep}: {source}")]
    Group { rep: RepLabel, source: GroupError },
    #[error("stratum {rep}: {upper}/{lower} computes to {computed}, recorded as {claimed}")]
    KindMismatch { rep: RepLabel, upper: &'static str, lower: &'static str, computed: GroupKind, claimed: GroupKind },
    #[error("unknown strata table {0:?} (expected E8_S5, F4_S4 or G2_S3)")]
    UnknownTable(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum StrataTable {
    E8S5,
    F4S4,
    G2S3,
}

impl StrataTable {
    pub const ALL: [StrataTable; 3] = [StrataTable::E8S5, StrataTable::F4S4, StrataTable::G2S3];

    pub fn group_type(self) -> GroupType {
        match self {
            StrataTable::E8S5 => GroupType::E8,
            StrataTable::F4S4 => GroupType::F4,
            StrataTable::G2S3 => GroupType::G2,
        }
    }

    /// The family group `Γ_c`.
    pub fn family_group(self) -> GroupKind {
        match self {
            StrataTable::E8S5 => GroupKind::S5,
            StrataTable::F4S4 => GroupKind::S4,
            StrataTable::G2S3 => GroupKind::S3,
        }
    }
}

impl fmt::Display for StrataTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StrataTable::E8S5 => "E8_S5",
            StrataTable::F4S4 => "F4_S4",
            StrataTable::G2S3 => "G2_S3",
        })
    }
}

impl FromStr for StrataTable {
    type Err = StrataError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "E8_S5" => Ok(StrataTable::E8S5),
            "F4_S4" => Ok(StrataTable::F4S4),
            "G2_S3" => Ok(StrataTable::G2S3),
            _ => Err(StrataError::UnknownTable(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StratumEntry {
    pub rep: RepLabel,
    pub family_group: GroupKind,
    /// `H'`
    pub upper_name: &'static str,
    /// `H`
    pub lower_name: &'static str,
    pub claimed_kind: GroupKind,
    /// Over the complex numbers, whether the stratum contains a unipotent
    /// class.
    pub has_unipotent_class: bool,
}

type Row = (u32, u32, &'static str, &'static str, GroupKind, bool);

const E8_S5: [Row; 8] = [
    (4480, 16, "S5", "1", GroupKind::S5, true),
    (7168, 17, "S3S2", "S2", GroupKind::S3, true),
    (4200, 18, "D8", "S2S2", GroupKind::S2, true),
    (3150, 18, "S3S2", "S3", GroupKind::S2, true),
    (2016, 19, "S3S2", "S3S2", GroupKind::Trivial, true),
    (1344, 19, "S4", "S4", GroupKind::Trivial, true),
    (420, 20, "S5", "S5", GroupKind::Trivial, true),
    (168, 24, "D8", "D8", GroupKind::Trivial, false),
];

const F4_S4: [Row; 8] = [
    (12, 4, "S4", "1", GroupKind::S4, true),
    (16, 5, "S2S2", "S2", GroupKind::S2, true),
    (9, 6, "D8", "S2S2", GroupKind::S2, true),
    (6, 6, "S3", "S3", GroupKind::Trivial, true),
    (4, 7, "S2S2", "S2", GroupKind::S2, true),
    (9, 6, "S3", "1", GroupKind::S3, false),
    (4, 7, "S4", "S4", GroupKind::Trivial, false),
    (4, 8, "S2S2", "S2S2", GroupKind::Trivial, false),
];

const G2_S3: [Row; 4] = [
    (2, 1, "S3", "1", GroupKind::S3, true),
    (2, 2, "S2", "S2", GroupKind::Trivial, true),
    (1, 3, "S3", "S3", GroupKind::Trivial, true),
    (1, 3, "S2", "1", GroupKind::S2, false),
];

/// The listed strata of a family, in listing order.
///
/// Repeated labels get increasing variant numbers in listing order.
pub fn strata_table(t: StrataTable) -> Vec<StratumEntry> {
    let rows: &[Row] = match t {
        StrataTable::E8S5 => &E8_S5,
        StrataTable::F4S4 => &F4_S4,
        StrataTable::G2S3 => &G2_S3,
    };
    let group = t.group_type();
    let mut out: Vec<StratumEntry> = Vec::with_capacity(rows.len());
    for &(dim, sub, upper, lower, ref kind, unipotent) in rows {
        let base = RepLabel::new(group, dim, sub);
        let earlier = out.iter().filter(|e| e.rep.with_variant(1) == base).count() as u32;
        out.push(StratumEntry {
            rep: base.with_variant(earlier + 1),
            family_group: t.family_group(),
            upper_name: upper,
            lower_name: lower,
            claimed_kind: kind.clone(),
            has_unipotent_class: unipotent,
        });
    }
    out
}

/// Recompute `H'/H` for an entry and check it against the recorded kind.
pub fn gamma_sigma(entry: &StratumEntry) -> Result<GroupKind, StrataError> {
    let group_err = |source| StrataError::Group { rep: entry.rep, source };
    let pair = resolve_pair(&entry.family_group, entry.upper_name, entry.lower_name).map_err(group_err)?;
    let q = pair.quotient().map_err(group_err)?;
    let computed = identify(&q.table);
    if computed != entry.claimed_kind {
        return Err(StrataError::KindMismatch {
            rep: entry.rep,
            upper: entry.upper_name,
            lower: entry.lower_name,
            computed,
            claimed: entry.claimed_kind.clone(),
        });
    }
    Ok(computed)
}

/// The group attached to the stratum with the special unipotent class,
/// which is `Γ_c / 1 = Γ_c`.
pub fn special_stratum_kind(t: StrataTable) -> Result<GroupKind, StrataError> {
    let full = t.family_group().to_string();
    let entry = strata_table(t)
        .into_iter()
        .find(|e| e.lower_name == "1" && e.upper_name == full)
        .expect("every table lists the pair (1, Γ_c)");
    gamma_sigma(&entry)
}
