use thiserror::Error;

use super::group::{GroupError, GroupHom};
use super::triple::{Character, Derivation, Violation, YdData, YdTriple};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TransportError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("automorphism belongs to a different group")]
    GroupMismatch,
    #[error("transported data is not a triple: {0:?}")]
    Invalid(Vec<Violation>),
}

/// 𝒟^f = (f(g), χ∘f⁻¹, η∘f⁻¹).
pub fn transport_triple(t: &YdTriple, f: &GroupHom) -> Result<YdTriple, TransportError> {
    if f.group() != t.group() {
        return Err(TransportError::GroupMismatch);
    }
    let inv = f.inverse()?;
    let chi = inv.images().iter().map(|h| t.chi_at(h)).collect();
    let eta = inv.images().iter().map(|h| t.eta_at(h)).collect();
    let data = YdData {
        group: t.group().clone(),
        g: f.apply(t.g()),
        chi: Character::new(chi),
        eta: Derivation::new(eta),
    };
    YdTriple::new(data).map_err(TransportError::Invalid)
}
