//! Tensoring with the sign character, realized on symbols.
//!
//! Pick a cutoff `N` at least every entry of the symbol. Let `A` (resp.
//! `B`) be the complement of the top (resp. bottom) row in `{0, …, N}`,
//! listed increasingly; both have length `N − m + 1`. The twisted symbol
//! has rows `A'_i = N − A_{N−m+2−i}` and `B'_i = N − B_{N−m+2−i}`, i.e. the
//! complements reflected through `N`. The class of the result does not
//! depend on `N`.

use thiserror::Error;

use crate::dn_classification::IrrLabelD;
use crate::symbols::{Symbol, SymbolClass, SymbolError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TwistError {
    #[error("cutoff {cutoff} is too small for {symbol} (need at least {min})")]
    CutoffTooSmall { symbol: Symbol, cutoff: u32, min: u32 },
    #[error("{0} has no componentwise dominated row order")]
    NotDominated(Symbol),
    #[error(transparent)]
    Symbol(#[from] SymbolError),
}

/// Complements of the two rows of a symbol in `{0, …, N}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplementData {
    pub cutoff: u32,
    /// Complement of the top row.
    pub top: Vec<u32>,
    /// Complement of the bottom row.
    pub bottom: Vec<u32>,
}

/// Smallest valid cutoff: `max(max entry, m)`.
pub fn default_cutoff(s: &Symbol) -> u32 {
    s.max_entry().max(s.len() as u32)
}

fn complement(row: &[u32], cutoff: u32) -> Vec<u32> {
    let mut taken = row.iter().peekable();
    (0..=cutoff)
        .filter(|x| {
            if taken.peek() == Some(&x) {
                taken.next();
                false
            } else {
                true
            }
        })
        .collect()
}

pub fn complements(s: &Symbol, cutoff: u32) -> Result<ComplementData, TwistError> {
    let min = default_cutoff(s);
    if cutoff < min {
        return Err(TwistError::CutoffTooSmall { symbol: s.clone(), cutoff, min });
    }
    Ok(ComplementData {
        cutoff,
        top: complement(s.top(), cutoff),
        bottom: complement(s.bottom(), cutoff),
    })
}

/// Check `B_h ≤ A_h` for every `h`, where the symbol is first oriented so
/// that its top row is dominated by its bottom row.
///
/// The complement of the dominated row is `A`.
pub fn check_complement_domination(s: &Symbol, cutoff: u32) -> Result<bool, TwistError> {
    let dominated = |t: &Symbol| t.top().iter().zip(t.bottom()).all(|(a, b)| a <= b);
    let oriented = if dominated(s) {
        s.clone()
    } else if dominated(&s.swapped()) {
        s.swapped()
    } else {
        return Err(TwistError::NotDominated(s.clone()));
    };
    let data = complements(&oriented, cutoff)?;
    Ok(data.bottom.iter().zip(&data.top).all(|(b, a)| b <= a))
}

pub fn tensor_sign(s: &Symbol, cutoff: u32) -> Result<Symbol, TwistError> {
    let data = complements(s, cutoff)?;
    let reflect = |row: &[u32]| -> Vec<u32> { row.iter().rev().map(|&x| cutoff - x).collect() };
    Ok(Symbol::new(reflect(&data.top), reflect(&data.bottom))?)
}

pub fn tensor_sign_class(c: &SymbolClass) -> SymbolClass {
    let rep = c.representative();
    tensor_sign(rep, default_cutoff(rep))
        .expect("default cutoff is valid")
        .canonical()
        .expect("twist preserves positive rank")
}

/// Twist a label; degenerate labels keep their marker.
pub fn tensor_sign_label(l: &IrrLabelD) -> IrrLabelD {
    let twisted = tensor_sign_class(l.class());
    match l.marker() {
        None => IrrLabelD::new(twisted).expect("twist preserves non-degeneracy"),
        Some(m) => IrrLabelD::degenerate(twisted, m),
    }
}
