//! Almost special representations of W(E6), W(E7), W(E8).
//!
//! The tables are embedded text files, one family per line, members as
//! `dim_subscript` separated by commas. Members wrapped in `((...))` are
//! almost special but not 2-special. Every other member is 2-special.
//!
//! Subscripts are treated as opaque label components. When a
//! `(dim, subscript)` pair repeats within a table, later occurrences get
//! increasing variant numbers in listing order.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use sha2::{Digest, Sha256};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("no table of almost special representations for {0}")]
    NotProvided(GroupType),
    #[error("embedded {group} table digest mismatch: expected {expected}, got {actual}")]
    Integrity { group: GroupType, expected: String, actual: String },
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("{group} transcription check failed: {}", .problems.join("; "))]
    Transcription { group: GroupType, problems: Vec<String> },
    #[error("unknown group type {0:?}")]
    UnknownGroup(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum GroupType {
    E6,
    E7,
    E8,
    F4,
    G2,
}

impl GroupType {
    pub const SIMPLY_LACED_EXCEPTIONAL: [GroupType; 3] = [GroupType::E6, GroupType::E7, GroupType::E8];

    /// Subscript of the sign representation, i.e. the number of reflections.
    pub fn sign_subscript(self) -> u32 {
        match self {
            GroupType::E6 => 36,
            GroupType::E7 => 63,
            GroupType::E8 => 120,
            GroupType::F4 => 24,
            GroupType::G2 => 6,
        }
    }
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for GroupType {
    type Err = TableError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "E6" => Ok(GroupType::E6),
            "E7" => Ok(GroupType::E7),
            "E8" => Ok(GroupType::E8),
            "F4" => Ok(GroupType::F4),
            "G2" => Ok(GroupType::G2),
            _ => Err(TableError::UnknownGroup(s.to_string())),
        }
    }
}

/// An irreducible representation of an exceptional Weyl group, named
/// `dim_subscript`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RepLabel {
    pub group: GroupType,
    pub dim: u32,
    pub subscript: u32,
    /// 1 for the first occurrence of `(dim, subscript)` in listing order.
    pub variant: u32,
}

impl RepLabel {
    pub const fn new(group: GroupType, dim: u32, subscript: u32) -> Self {
        RepLabel { group, dim, subscript, variant: 1 }
    }

    pub const fn with_variant(self, variant: u32) -> Self {
        RepLabel { variant, ..self }
    }
}

/// `dim_subscript`, with `#k` appended for variant `k > 1`.
impl fmt::Display for RepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.dim, self.subscript)?;
        if self.variant > 1 {
            write!(f, "#{}", self.variant)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyMember {
    pub label: RepLabel,
    pub two_special: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyRow {
    pub members: Vec<FamilyMember>,
}

impl FamilyRow {
    pub fn contains(&self, label: &RepLabel) -> bool {
        self.members.iter().any(|m| &m.label == label)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExcTable {
    pub group: GroupType,
    pub rows: Vec<FamilyRow>,
}

impl ExcTable {
    /// Parse the line format described in the module docs.
    pub fn parse(group: GroupType, text: &str) -> Result<Self, TableError> {
        let mut seen: BTreeMap<(u32, u32), u32> = BTreeMap::new();
        let mut rows = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            let line_no = idx + 1;
            let err = |reason: String| TableError::Parse { line: line_no, reason };
            let mut members = Vec::new();
            for raw in line.split(',') {
                let raw = raw.trim();
                let (body, two_special) = match raw.strip_prefix("((").and_then(|r| r.strip_suffix("))")) {
                    Some(inner) => (inner, false),
                    None => (raw, true),
                };
                let (dim, sub) = body
                    .split_once('_')
                    .ok_or_else(|| err(format!("expected dim_subscript, got {raw:?}")))?;
                let dim: u32 = dim.parse().map_err(|e| err(format!("dimension {dim:?}: {e}")))?;
                let subscript: u32 = sub.parse().map_err(|e| err(format!("subscript {sub:?}: {e}")))?;
                if dim == 0 {
                    return Err(err("dimension must be positive".into()));
                }
                let variant = seen.entry((dim, subscript)).or_insert(0);
                *variant += 1;
                let label = RepLabel::new(group, dim, subscript).with_variant(*variant);
                members.push(FamilyMember { label, two_special });
            }
            rows.push(FamilyRow { members });
        }
        Ok(ExcTable { group, rows })
    }

    /// Inverse of [`ExcTable::parse`]; reproduces the data file byte for byte.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let items: Vec<String> = row
                .members
                .iter()
                .map(|m| {
                    let body = format!("{}_{}", m.label.dim, m.label.subscript);
                    if m.two_special {
                        body
                    } else {
                        format!("(({body}))")
                    }
                })
                .collect();
            out.push_str(&items.join(","));
            out.push('\n');
        }
        out
    }

    pub fn members(&self) -> impl Iterator<Item = &FamilyMember> {
        self.rows.iter().flat_map(|r| r.members.iter())
    }

    pub fn almost_special(&self) -> BTreeSet<RepLabel> {
        self.members().map(|m| m.label).collect()
    }

    pub fn two_special(&self) -> BTreeSet<RepLabel> {
        self.members().filter(|m| m.two_special).map(|m| m.label).collect()
    }

    pub fn not_two_special(&self) -> BTreeSet<RepLabel> {
        self.members().filter(|m| !m.two_special).map(|m| m.label).collect()
    }

    pub fn member(&self, label: &RepLabel) -> Option<&FamilyMember> {
        self.members().find(|m| &m.label == label)
    }

    pub fn row_of(&self, label: &RepLabel) -> Option<&FamilyRow> {
        self.rows.iter().find(|r| r.contains(label))
    }

    /// Look up a label by its text `dim_subscript` (variant 1).
    pub fn label(&self, text: &str) -> Option<RepLabel> {
        let (dim, sub) = text.split_once('_')?;
        let label = RepLabel::new(self.group, dim.parse().ok()?, sub.parse().ok()?);
        self.member(&label).map(|m| m.label)
    }
}

const E6_DATA: &str = include_str!("../data/e6.txt");
const E7_DATA: &str = include_str!("../data/e7.txt");
const E8_DATA: &str = include_str!("../data/e8.txt");

const E6_DIGEST: &str = "946766b5703396c2ac013e3ff58ca24d0b7e6d2efe35ba54b60002561455a7f5";
const E7_DIGEST: &str = "b4f520445efcac2a272ecdccf15a649d3912c0cc524ef23bae3b5f3f086fb9a6";
const E8_DIGEST: &str = "6418899a855547b2c0c8d58aa13a5a71c2f5c5274ae2725e78bed25912fcd94e";

/// Hex SHA-256 of a table file.
pub fn content_digest(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

/// Embedded data and its pinned digest.
pub fn embedded_data(group: GroupType) -> Result<(&'static str, &'static str), TableError> {
    match group {
        GroupType::E6 => Ok((E6_DATA, E6_DIGEST)),
        GroupType::E7 => Ok((E7_DATA, E7_DIGEST)),
        GroupType::E8 => Ok((E8_DATA, E8_DIGEST)),
        other => Err(TableError::NotProvided(other)),
    }
}

/// Number of `((...))` entries each table must contain.
pub fn expected_marked_count(group: GroupType) -> Option<usize> {
    match group {
        GroupType::E6 => Some(0),
        GroupType::E7 => Some(1),
        GroupType::E8 => Some(2),
        _ => None,
    }
}

/// Parse `text` as the `group` table after checking it against `digest`.
pub fn load_table_checked(group: GroupType, text: &str, digest: &str) -> Result<ExcTable, TableError> {
    let actual = content_digest(text);
    if actual != digest {
        return Err(TableError::Integrity { group, expected: digest.to_string(), actual });
    }
    let table = ExcTable::parse(group, text)?;
    if let Some(expected) = expected_marked_count(group) {
        let found = table.not_two_special().len();
        if found != expected {
            return Err(TableError::Transcription {
                group,
                problems: vec![format!("{found} entries marked ((?)), expected {expected}")],
            });
        }
    }
    Ok(table)
}

pub fn load_table(group: GroupType) -> Result<ExcTable, TableError> {
    let (text, digest) = embedded_data(group)?;
    load_table_checked(group, text, digest)
}

pub fn almost_special_set(group: GroupType) -> Result<BTreeSet<RepLabel>, TableError> {
    Ok(load_table(group)?.almost_special())
}

pub fn two_special_set(group: GroupType) -> Result<BTreeSet<RepLabel>, TableError> {
    Ok(load_table(group)?.two_special())
}

/// Almost special minus 2-special.
pub fn diff_ca_cs2(group: GroupType) -> Result<BTreeSet<RepLabel>, TableError> {
    let table = load_table(group)?;
    let diff: BTreeSet<_> = table.almost_special().difference(&table.two_special()).copied().collect();
    // load_table already pinned the count; recheck against the set form.
    if Some(diff.len()) != expected_marked_count(group) {
        return Err(TableError::Transcription {
            group,
            problems: vec![format!("difference has {} elements", diff.len())],
        });
    }
    Ok(diff)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Provenance {
    /// Read off the tables together with the listed exceptions.
    Paper,
    /// Forced: trivial ⊗ sign = sign.
    Trivial,
    /// Supplied from outside; never used by the closure checks.
    External,
}

/// `left ⊗ sgn = right`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignPairFact {
    pub left: RepLabel,
    pub right: RepLabel,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum SignTwistFact {
    Pair(SignPairFact),
    /// `label` is almost special but `label ⊗ sgn` is not.
    LeavesAlmostSpecial { label: RepLabel, provenance: Provenance },
}

/// 2-special representations whose sign twist is almost special but not
/// 2-special, with their partners.
type DimSub = (u32, u32);

const TWO_SPECIAL_EXCEPTIONS: [(GroupType, DimSub, DimSub); 3] = [
    (GroupType::E7, (15, 28), (15, 7)),
    (GroupType::E8, (50, 56), (50, 8)),
    (GroupType::E8, (700, 28), (700, 16)),
];

/// Dimension of the almost special representations whose twist leaves the
/// almost special set.
fn leaving_dimension(group: GroupType) -> Option<u32> {
    match group {
        GroupType::E7 => Some(512),
        GroupType::E8 => Some(4096),
        _ => None,
    }
}

/// The sign-twist facts available for `group` without character tables.
///
/// Empty for F4 and G2.
pub fn sign_twist_facts(group: GroupType) -> Result<Vec<SignTwistFact>, TableError> {
    if !GroupType::SIMPLY_LACED_EXCEPTIONAL.contains(&group) {
        return Ok(Vec::new());
    }
    let table = load_table(group)?;
    let mut facts = vec![SignTwistFact::Pair(SignPairFact {
        left: RepLabel::new(group, 1, 0),
        right: RepLabel::new(group, 1, group.sign_subscript()),
        provenance: Provenance::Trivial,
    })];
    for (g, (ld, ls), (rd, rs)) in TWO_SPECIAL_EXCEPTIONS {
        if g == group {
            facts.push(SignTwistFact::Pair(SignPairFact {
                left: RepLabel::new(group, ld, ls),
                right: RepLabel::new(group, rd, rs),
                provenance: Provenance::Paper,
            }));
        }
    }
    if let Some(dim) = leaving_dimension(group) {
        for m in table.members().filter(|m| m.label.dim == dim) {
            facts.push(SignTwistFact::LeavesAlmostSpecial {
                label: m.label,
                provenance: Provenance::Paper,
            });
        }
    }
    Ok(facts)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignClosureReport {
    pub group: GroupType,
    pub checked: usize,
    pub violations: Vec<String>,
}

/// Check `facts` against `table`. External facts are skipped.
pub fn check_sign_facts(table: &ExcTable, facts: &[SignTwistFact]) -> SignClosureReport {
    let mut report = SignClosureReport { group: table.group, checked: 0, violations: Vec::new() };
    for fact in facts {
        match fact {
            SignTwistFact::Pair(p) => {
                if p.provenance == Provenance::External {
                    continue;
                }
                report.checked += 1;
                let (left, right) = (table.member(&p.left), table.member(&p.right));
                let (Some(left), Some(right)) = (left, right) else {
                    report.violations.push(format!("{} <-> {}: endpoint not almost special", p.left, p.right));
                    continue;
                };
                if p.left.dim != p.right.dim {
                    report.violations.push(format!("{} <-> {}: dimensions differ", p.left, p.right));
                }
                if p.provenance == Provenance::Paper && !(left.two_special && !right.two_special) {
                    report.violations.push(format!(
                        "{} <-> {}: expected 2-special and marked ((?)) endpoints",
                        p.left, p.right
                    ));
                }
                if p.provenance == Provenance::Trivial && !(left.two_special && right.two_special) {
                    report.violations.push(format!("{} <-> {}: expected both 2-special", p.left, p.right));
                }
            }
            SignTwistFact::LeavesAlmostSpecial { label, provenance } => {
                if *provenance == Provenance::External {
                    continue;
                }
                report.checked += 1;
                let Some(row) = table.row_of(label) else {
                    report.violations.push(format!("{label}: not almost special"));
                    continue;
                };
                let partners = row.members.iter().filter(|m| m.label != *label && m.label.dim == label.dim);
                if partners.count() > 0 {
                    report.violations.push(format!("{label}: family has another member of the same dimension"));
                }
            }
        }
    }
    report
}

/// Check the sign-twist facts for `group` against its table.
pub fn check_sign_closure(group: GroupType) -> Result<SignClosureReport, TableError> {
    let table = load_table(group)?;
    let report = check_sign_facts(&table, &sign_twist_facts(group)?);
    if report.violations.is_empty() {
        Ok(report)
    } else {
        Err(TableError::Transcription { group, problems: report.violations })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use GroupType::*;

    fn names(set: &BTreeSet<RepLabel>) -> Vec<String> {
        set.iter().map(|l| l.to_string()).collect()
    }

    #[test]
    fn first_rows_and_anchors() {
        let e6 = load_table(E6).unwrap();
        assert_eq!(e6.rows.len(), 17);
        assert_eq!(e6.rows[0].members.len(), 1);
        assert_eq!(e6.rows[0].members[0].label, RepLabel::new(E6, 1, 0));

        let e7 = load_table(E7).unwrap();
        assert_eq!(e7.rows.len(), 35);
        let row = e7.row_of(&RepLabel::new(E7, 120, 4)).unwrap();
        assert_eq!(
            row.members,
            vec![
                FamilyMember { label: RepLabel::new(E7, 120, 4), two_special: true },
                FamilyMember { label: RepLabel::new(E7, 15, 7), two_special: false },
            ]
        );

        let e8 = load_table(E8).unwrap();
        assert_eq!(e8.rows.len(), 46);
        let row = e8.row_of(&RepLabel::new(E8, 4480, 16)).unwrap();
        assert_eq!(row.members.len(), 8);
        assert_eq!(row.members.last().unwrap().label, RepLabel::new(E8, 168, 24));
    }

    #[test]
    fn membership() {
        assert!(almost_special_set(E6).unwrap().contains(&RepLabel::new(E6, 80, 7)));
        assert!(almost_special_set(E8).unwrap().contains(&RepLabel::new(E8, 700, 16)));
        assert_eq!(almost_special_set(G2), Err(TableError::NotProvided(G2)));
        assert_eq!(two_special_set(F4), Err(TableError::NotProvided(F4)));

        let e7 = two_special_set(E7).unwrap();
        assert!(!e7.contains(&RepLabel::new(E7, 15, 7)));
        assert!(e7.contains(&RepLabel::new(E7, 15, 28)));
        let e8 = two_special_set(E8).unwrap();
        assert!(!e8.contains(&RepLabel::new(E8, 50, 8)));
        assert!(e8.contains(&RepLabel::new(E8, 50, 56)));
        assert_eq!(two_special_set(E6).unwrap(), almost_special_set(E6).unwrap());
    }

    #[test]
    fn differences() {
        assert!(diff_ca_cs2(E6).unwrap().is_empty());
        assert_eq!(names(&diff_ca_cs2(E7).unwrap()), ["15_7"]);
        assert_eq!(names(&diff_ca_cs2(E8).unwrap()), ["50_8", "700_16"]);
    }

    #[test]
    fn render_is_byte_faithful() {
        for g in GroupType::SIMPLY_LACED_EXCEPTIONAL {
            let (text, _) = embedded_data(g).unwrap();
            assert_eq!(load_table(g).unwrap().render(), text);
        }
    }

    #[test]
    fn labels_are_unique_and_single_variant() {
        for g in GroupType::SIMPLY_LACED_EXCEPTIONAL {
            let t = load_table(g).unwrap();
            assert_eq!(t.almost_special().len(), t.members().count());
            assert!(t.members().all(|m| m.label.variant == 1));
        }
    }

    #[test]
    fn tampered_data_fails_integrity() {
        let (text, digest) = embedded_data(E7).unwrap();
        let tampered = text.replace("((15_7))", "15_7");
        assert!(matches!(
            load_table_checked(E7, &tampered, digest),
            Err(TableError::Integrity { group: E7, .. })
        ));
        // A re-pinned digest still trips the marked-entry count.
        let repinned = content_digest(&tampered);
        assert!(matches!(
            load_table_checked(E7, &tampered, &repinned),
            Err(TableError::Transcription { .. })
        ));
    }

    #[test]
    fn variants_in_listing_order() {
        let t = ExcTable::parse(F4, "9_6,4_7\n9_6,((4_7))\n").unwrap();
        let labels: Vec<_> = t.members().map(|m| m.label.to_string()).collect();
        assert_eq!(labels, ["9_6", "4_7", "9_6#2", "4_7#2"]);
        assert!(ExcTable::parse(F4, "9-6").is_err());
        assert!(ExcTable::parse(F4, "0_6").is_err());
    }

    #[test]
    fn twist_facts() {
        let e8 = sign_twist_facts(E8).unwrap();
        assert!(e8.contains(&SignTwistFact::Pair(SignPairFact {
            left: RepLabel::new(E8, 50, 56),
            right: RepLabel::new(E8, 50, 8),
            provenance: Provenance::Paper,
        })));
        let leaving: Vec<_> = e8
            .iter()
            .filter_map(|f| match f {
                SignTwistFact::LeavesAlmostSpecial { label, .. } => Some(label.to_string()),
                _ => None,
            })
            .collect();
        assert_eq!(leaving, ["4096_11", "4096_26"]);

        let e6 = sign_twist_facts(E6).unwrap();
        assert_eq!(
            e6,
            vec![SignTwistFact::Pair(SignPairFact {
                left: RepLabel::new(E6, 1, 0),
                right: RepLabel::new(E6, 1, 36),
                provenance: Provenance::Trivial,
            })]
        );
        assert!(sign_twist_facts(G2).unwrap().is_empty());
    }

    #[test]
    fn closure_checks() {
        for g in GroupType::SIMPLY_LACED_EXCEPTIONAL {
            let report = check_sign_closure(g).unwrap();
            assert!(report.violations.is_empty());
        }
        assert_eq!(check_sign_closure(E6).unwrap().checked, 1);
        assert_eq!(check_sign_closure(E7).unwrap().checked, 3);
        assert_eq!(check_sign_closure(E8).unwrap().checked, 5);
    }

    #[test]
    fn closure_check_catches_bad_facts() {
        let table = load_table(E8).unwrap();
        let bogus = [
            SignTwistFact::Pair(SignPairFact {
                left: RepLabel::new(E8, 50, 8),
                right: RepLabel::new(E8, 50, 56),
                provenance: Provenance::Paper,
            }),
            SignTwistFact::Pair(SignPairFact {
                left: RepLabel::new(E8, 8, 1),
                right: RepLabel::new(E8, 8, 92),
                provenance: Provenance::Trivial,
            }),
            SignTwistFact::LeavesAlmostSpecial { label: RepLabel::new(E8, 4096, 12), provenance: Provenance::Paper },
            SignTwistFact::Pair(SignPairFact {
                left: RepLabel::new(E8, 8, 1),
                right: RepLabel::new(E8, 9, 1),
                provenance: Provenance::External,
            }),
        ];
        let report = check_sign_facts(&table, &bogus);
        assert_eq!(report.checked, 3);
        assert_eq!(report.violations.len(), 3);
    }

    #[test]
    fn marked_dimensions_recur_as_two_special() {
        for g in GroupType::SIMPLY_LACED_EXCEPTIONAL {
            let t = load_table(g).unwrap();
            for marked in t.not_two_special() {
                assert!(t.two_special().iter().any(|l| l.dim == marked.dim), "{marked}");
            }
        }
    }
}
