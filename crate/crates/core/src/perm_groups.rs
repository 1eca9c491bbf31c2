//! Permutation groups on at most five points.
//!
//! Enough machinery for subquotients of S3, S4 and S5: closure of generator
//! sets, normality, coset quotients, and identification of small groups by
//! an isomorphism fingerprint (order, multiset of element orders, whether
//! the group is abelian).

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::Serialize;
use thiserror::Error;

pub const MAX_DEGREE: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("degree {0} exceeds the supported maximum of {MAX_DEGREE}")]
    DegreeTooLarge(usize),
    #[error("images {0:?} do not form a permutation")]
    NotBijective(Vec<usize>),
    #[error("generators of degree {found} in a group of degree {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("not a subgroup: {0} is missing from the larger group")]
    NotSubgroup(Permutation),
    #[error("not normal: conjugating {element} by {conjugator} leaves the subgroup")]
    NotNormal { conjugator: Permutation, element: Permutation },
    #[error("unknown subgroup name {0:?}")]
    UnknownName(String),
    #[error("{name} is not a cataloged subgroup of {ambient}")]
    NotInAmbient { name: String, ambient: GroupKind },
    #[error("{0} is not a supported ambient group (use S3, S4 or S5)")]
    BadAmbient(GroupKind),
    #[error("no conjugate of {lower} is a normal subgroup of {upper} in {ambient}")]
    NoNormalEmbedding { ambient: GroupKind, upper: String, lower: String },
    #[error("cannot parse permutation {0:?}")]
    Parse(String),
}

/// A bijection of `{1, …, k}`, stored zero-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation { images: (0..degree as u8).collect() }
    }

    /// From one-based images: `images[i - 1]` is the image of `i`.
    pub fn from_images(images: &[usize]) -> Result<Self, GroupError> {
        if images.len() > MAX_DEGREE {
            return Err(GroupError::DegreeTooLarge(images.len()));
        }
        let mut seen = [false; MAX_DEGREE];
        for &x in images {
            if x == 0 || x > images.len() || seen[x - 1] {
                return Err(GroupError::NotBijective(images.to_vec()));
            }
            seen[x - 1] = true;
        }
        Ok(Permutation { images: images.iter().map(|&x| (x - 1) as u8).collect() })
    }

    /// From disjoint-or-not cycles in one-based points, composed right to left.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self, GroupError> {
        if degree > MAX_DEGREE {
            return Err(GroupError::DegreeTooLarge(degree));
        }
        let mut result = Permutation::identity(degree);
        for cycle in cycles.iter().rev() {
            let mut images: Vec<usize> = (1..=degree).collect();
            let distinct: BTreeSet<_> = cycle.iter().collect();
            if distinct.len() != cycle.len() || cycle.iter().any(|&p| p == 0 || p > degree) {
                return Err(GroupError::NotBijective(cycle.to_vec()));
            }
            for (i, &p) in cycle.iter().enumerate() {
                images[p - 1] = cycle[(i + 1) % cycle.len()];
            }
            result = Permutation::from_images(&images)?.compose(&result);
        }
        Ok(result)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the one-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation { images: other.images.iter().map(|&x| self.images[x as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u8; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u8;
        }
        Permutation { images }
    }

    /// `g ∘ self ∘ g⁻¹`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        g.compose(self).compose(&g.inverse())
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// Disjoint cycles of length at least two, one-based, each starting at
    /// its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x] as usize;
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }
}

/// Cycle notation, e.g. `(1 2 3)(4 5)`; the identity prints as `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let points: Vec<String> = c.iter().map(|p| p.to_string()).collect();
            write!(f, "({})", points.join(" "))?;
        }
        Ok(())
    }
}

/// Parse `"5:(1 2 3)(4 5)"`: degree, a colon, then cycles.
impl FromStr for Permutation {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || GroupError::Parse(s.to_string());
        let (degree, body) = s.split_once(':').ok_or_else(err)?;
        let degree: usize = degree.trim().parse().map_err(|_| err())?;
        let mut cycles = Vec::new();
        for chunk in body.split(')') {
            let chunk = chunk.trim();
            if chunk.is_empty() {
                continue;
            }
            let inner = chunk.strip_prefix('(').ok_or_else(err)?;
            let points: Vec<usize> = inner
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| err()))
                .collect::<Result<_, _>>()?;
            if !points.is_empty() {
                cycles.push(points);
            }
        }
        let refs: Vec<&[usize]> = cycles.iter().map(|c| c.as_slice()).collect();
        Permutation::from_cycles(degree, &refs)
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A permutation group given by its full element list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermGroup {
    degree: usize,
    elements: Vec<Permutation>,
    generators: Vec<Permutation>,
}

impl PermGroup {
    /// Closure of `gens` under composition.
    pub fn generate(degree: usize, gens: &[Permutation]) -> Result<Self, GroupError> {
        if degree > MAX_DEGREE {
            return Err(GroupError::DegreeTooLarge(degree));
        }
        if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
            return Err(GroupError::DegreeMismatch { expected: degree, found: g.degree() });
        }
        let id = Permutation::identity(degree);
        let mut elements = BTreeSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y = g.compose(&x);
                if elements.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        Ok(PermGroup { degree, elements: elements.into_iter().collect(), generators: gens.to_vec() })
    }

    /// Generated by permutations written in cycle notation.
    pub fn from_cycle_gens(degree: usize, gens: &[&[&[usize]]]) -> Result<Self, GroupError> {
        let gens: Vec<_> = gens
            .iter()
            .map(|cycles| Permutation::from_cycles(degree, cycles))
            .collect::<Result<_, _>>()?;
        PermGroup::generate(degree, &gens)
    }

    pub fn symmetric(degree: usize) -> Result<Self, GroupError> {
        let mut gens = Vec::new();
        if degree >= 2 {
            gens.push(Permutation::from_cycles(degree, &[&(1..=degree).collect::<Vec<_>>()])?);
            gens.push(Permutation::from_cycles(degree, &[&[1, 2]])?);
        }
        PermGroup::generate(degree, &gens)
    }

    pub fn trivial(degree: usize) -> Result<Self, GroupError> {
        PermGroup::generate(degree, &[])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.elements.iter().all(|p| other.contains(p))
    }

    /// `g H g⁻¹`.
    pub fn conjugate_by(&self, g: &Permutation) -> PermGroup {
        let mut elements: Vec<_> = self.elements.iter().map(|h| h.conjugate_by(g)).collect();
        elements.sort();
        let generators = self.generators.iter().map(|h| h.conjugate_by(g)).collect();
        PermGroup { degree: self.degree, elements, generators }
    }

    pub fn cayley_table(&self) -> CayleyTable {
        let index: HashMap<&Permutation, usize> = self.elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let table = self
            .elements
            .iter()
            .map(|a| self.elements.iter().map(|b| index[&a.compose(b)]).collect())
            .collect();
        let identity = index[&Permutation::identity(self.degree)];
        CayleyTable { table, identity }
    }
}

/// Checks that `h` is a subgroup of `g`, then that it is normal.
pub fn is_normal(h: &PermGroup, g: &PermGroup) -> Result<bool, GroupError> {
    Ok(normality_witness(h, g)?.is_none())
}

/// A conjugation taking `h` outside itself, if any.
fn normality_witness(h: &PermGroup, g: &PermGroup) -> Result<Option<(Permutation, Permutation)>, GroupError> {
    if h.degree != g.degree {
        return Err(GroupError::DegreeMismatch { expected: g.degree, found: h.degree });
    }
    if let Some(p) = h.elements.iter().find(|p| !g.contains(p)) {
        return Err(GroupError::NotSubgroup(p.clone()));
    }
    // Conjugating the generators of h by the generators of g suffices, but
    // the groups are tiny, so check everything.
    for x in &g.elements {
        for y in &h.elements {
            if !h.contains(&y.conjugate_by(x)) {
                return Ok(Some((x.clone(), y.clone())));
            }
        }
    }
    Ok(None)
}

/// A finite group given by its multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyTable {
    /// `table[a][b]` is the index of `a · b`.
    table: Vec<Vec<usize>>,
    identity: usize,
}

impl CayleyTable {
    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Whether the table is associative with a two-sided identity and left
    /// and right inverses. Used to sanity-check quotient tables.
    pub fn is_group(&self) -> bool {
        let n = self.order();
        let assoc = (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c)))));
        let ident = (0..n).all(|a| self.mul(self.identity, a) == a && self.mul(a, self.identity) == a);
        let inverses = (0..n).all(|a| (0..n).any(|b| self.mul(a, b) == self.identity));
        assoc && ident && inverses
    }

    pub fn fingerprint(&self) -> Fingerprint {
        let mut element_orders = BTreeMap::new();
        for a in 0..self.order() {
            *element_orders.entry(self.element_order(a)).or_insert(0) += 1;
        }
        Fingerprint { order: self.order(), element_orders, abelian: self.is_abelian() }
    }
}

/// Isomorphism invariants that separate every group occurring here.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Fingerprint {
    pub order: usize,
    /// element order → number of elements of that order
    pub element_orders: BTreeMap<usize, usize>,
    pub abelian: bool,
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let orders: Vec<String> = self.element_orders.iter().map(|(o, c)| format!("{o}^{c}")).collect();
        write!(
            f,
            "order {} [{}]{}",
            self.order,
            orders.join(" "),
            if self.abelian { " abelian" } else { "" }
        )
    }
}

/// The quotient `G / H` together with its coset data.
#[derive(Debug, Clone)]
pub struct Quotient {
    /// One representative per coset; coset `i` is `reps[i] · H`.
    pub reps: Vec<Permutation>,
    pub table: CayleyTable,
}

impl Quotient {
    pub fn order(&self) -> usize {
        self.table.order()
    }
}

pub fn quotient(g: &PermGroup, h: &PermGroup) -> Result<Quotient, GroupError> {
    if let Some((conjugator, element)) = normality_witness(h, g)? {
        return Err(GroupError::NotNormal { conjugator, element });
    }
    let mut coset_of: HashMap<&Permutation, usize> = HashMap::new();
    let mut reps = Vec::new();
    for x in &g.elements {
        if coset_of.contains_key(x) {
            continue;
        }
        let i = reps.len();
        reps.push(x.clone());
        for y in &h.elements {
            let member = g.elements.binary_search(&x.compose(y)).expect("closed under composition");
            coset_of.insert(&g.elements[member], i);
        }
    }
    let table = reps
        .iter()
        .map(|a| {
            reps.iter()
                .map(|b| {
                    let product = a.compose(b);
                    let k = g.elements.binary_search(&product).expect("closed under composition");
                    coset_of[&g.elements[k]]
                })
                .collect()
        })
        .collect();
    let identity = coset_of[&Permutation::identity(g.degree)];
    Ok(Quotient { reps, table: CayleyTable { table, identity } })
}

/// Isomorphism type of a small group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum GroupKind {
    Trivial,
    S2,
    S3,
    S4,
    S5,
    /// Klein four group.
    K4,
    /// Dihedral group of order 8.
    D8,
    S3xS2,
    /// Reserved: no reference realization on five points, so never
    /// returned by [`identify`].
    S2xS2xS2,
    Unknown(Fingerprint),
}

impl GroupKind {
    /// The eight kinds with reference fingerprints.
    pub const REFERENCE: [GroupKind; 8] = [
        GroupKind::Trivial,
        GroupKind::S2,
        GroupKind::S3,
        GroupKind::K4,
        GroupKind::S4,
        GroupKind::D8,
        GroupKind::S3xS2,
        GroupKind::S5,
    ];

    /// A concrete permutation group of this kind, if one exists on ≤ 5 points.
    pub fn reference_group(&self) -> Option<PermGroup> {
        let g = match self {
            GroupKind::Trivial => PermGroup::trivial(1),
            GroupKind::S2 => PermGroup::symmetric(2),
            GroupKind::S3 => PermGroup::symmetric(3),
            GroupKind::S4 => PermGroup::symmetric(4),
            GroupKind::S5 => PermGroup::symmetric(5),
            GroupKind::K4 => PermGroup::from_cycle_gens(4, &[&[&[1, 2], &[3, 4]], &[&[1, 3], &[2, 4]]]),
            GroupKind::D8 => PermGroup::from_cycle_gens(4, &[&[&[1, 2, 3, 4]], &[&[1, 3]]]),
            GroupKind::S3xS2 => PermGroup::from_cycle_gens(5, &[&[&[1, 2, 3]], &[&[1, 2]], &[&[4, 5]]]),
            GroupKind::S2xS2xS2 | GroupKind::Unknown(_) => return None,
        };
        Some(g.expect("reference generators are valid"))
    }

    pub fn degree(&self) -> Option<usize> {
        match self {
            GroupKind::S3 => Some(3),
            GroupKind::S4 => Some(4),
            GroupKind::S5 => Some(5),
            _ => None,
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupKind::Trivial => f.pad("1"),
            GroupKind::S2 => f.pad("S2"),
            GroupKind::S3 => f.pad("S3"),
            GroupKind::S4 => f.pad("S4"),
            GroupKind::S5 => f.pad("S5"),
            GroupKind::K4 => f.pad("K4"),
            GroupKind::D8 => f.pad("D8"),
            GroupKind::S3xS2 => f.pad("S3xS2"),
            GroupKind::S2xS2xS2 => f.pad("S2xS2xS2"),
            GroupKind::Unknown(fp) => write!(f, "unknown({fp})"),
        }
    }
}

impl FromStr for GroupKind {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "1" | "trivial" => GroupKind::Trivial,
            "S2" => GroupKind::S2,
            "S3" => GroupKind::S3,
            "S4" => GroupKind::S4,
            "S5" => GroupKind::S5,
            "K4" => GroupKind::K4,
            "D8" => GroupKind::D8,
            "S3xS2" => GroupKind::S3xS2,
            "S2xS2xS2" => GroupKind::S2xS2xS2,
            _ => return Err(GroupError::UnknownName(s.to_string())),
        })
    }
}

/// Fingerprints of [`GroupKind::REFERENCE`], computed once from the
/// reference groups.
pub fn reference_fingerprints() -> &'static [(GroupKind, Fingerprint)] {
    static CELL: OnceLock<Vec<(GroupKind, Fingerprint)>> = OnceLock::new();
    CELL.get_or_init(|| {
        GroupKind::REFERENCE
            .iter()
            .map(|k| {
                let g = k.reference_group().expect("reference kinds have groups");
                (k.clone(), g.cayley_table().fingerprint())
            })
            .collect()
    })
}

pub fn identify(q: &CayleyTable) -> GroupKind {
    let fp = q.fingerprint();
    reference_fingerprints()
        .iter()
        .find(|(_, r)| *r == fp)
        .map(|(k, _)| k.clone())
        .unwrap_or(GroupKind::Unknown(fp))
}

/// Cataloged subgroup names and their generators, one-based cycles.
const CATALOG: &[(&str, &[&[&[usize]]])] = &[
    ("1", &[]),
    ("S2", &[&[&[1, 2]]]),
    ("S3", &[&[&[1, 2, 3]], &[&[1, 2]]]),
    ("S4", &[&[&[1, 2, 3, 4]], &[&[1, 2]]]),
    ("S5", &[&[&[1, 2, 3, 4, 5]], &[&[1, 2]]]),
    ("S2S2", &[&[&[1, 2]], &[&[3, 4]]]),
    ("S3S2", &[&[&[1, 2, 3]], &[&[1, 2]], &[&[4, 5]]]),
    ("D8", &[&[&[1, 2, 3, 4]], &[&[1, 3]]]),
];

pub fn catalog_names() -> impl Iterator<Item = &'static str> {
    CATALOG.iter().map(|(name, _)| *name)
}

fn ambient_degree(ambient: &GroupKind) -> Result<usize, GroupError> {
    ambient.degree().ok_or_else(|| GroupError::BadAmbient(ambient.clone()))
}

/// The cataloged subgroup `name` of the symmetric group `ambient`.
pub fn named_subgroup(ambient: &GroupKind, name: &str) -> Result<PermGroup, GroupError> {
    let degree = ambient_degree(ambient)?;
    let (_, gens) = CATALOG
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| GroupError::UnknownName(name.to_string()))?;
    let max_point = gens.iter().flat_map(|g| g.iter()).flat_map(|c| c.iter()).copied().max().unwrap_or(1);
    if max_point > degree {
        return Err(GroupError::NotInAmbient { name: name.to_string(), ambient: ambient.clone() });
    }
    PermGroup::from_cycle_gens(degree, gens)
}

/// Every cataloged subgroup available in `ambient`.
pub fn catalog(ambient: &GroupKind) -> Result<Vec<(&'static str, PermGroup)>, GroupError> {
    ambient_degree(ambient)?;
    Ok(catalog_names().filter_map(|n| named_subgroup(ambient, n).ok().map(|g| (n, g))).collect())
}

/// Concrete groups `H ◁ H'` for a pair of catalog names.
#[derive(Debug, Clone)]
pub struct SubgroupPair {
    pub upper: PermGroup,
    pub lower: PermGroup,
}

impl SubgroupPair {
    pub fn quotient(&self) -> Result<Quotient, GroupError> {
        quotient(&self.upper, &self.lower)
    }
}

/// Realize `upper / lower` inside `ambient`.
///
/// A name denotes its subgroup up to conjugacy in the ambient group. The
/// cataloged `upper` is used as is; for `lower`, the cataloged group is
/// used if it is normal in `upper`, otherwise the first ambient conjugate
/// (in element order of the conjugator) that is contained and normal in
/// `upper`.
pub fn resolve_pair(ambient: &GroupKind, upper: &str, lower: &str) -> Result<SubgroupPair, GroupError> {
    let upper_group = named_subgroup(ambient, upper)?;
    let lower_group = named_subgroup(ambient, lower)?;
    let full = PermGroup::symmetric(ambient_degree(ambient)?)?;
    let fits = |h: &PermGroup| h.is_subgroup_of(&upper_group) && matches!(is_normal(h, &upper_group), Ok(true));
    if fits(&lower_group) {
        return Ok(SubgroupPair { upper: upper_group, lower: lower_group });
    }
    full.elements
        .iter()
        .map(|g| lower_group.conjugate_by(g))
        .find(|h| fits(h))
        .map(|lower_group| SubgroupPair { upper: upper_group.clone(), lower: lower_group })
        .ok_or_else(|| GroupError::NoNormalEmbedding {
            ambient: ambient.clone(),
            upper: upper.to_string(),
            lower: lower.to_string(),
        })
}
