//! Finitely generated abelian groups, characters and (χ,χ)-derivations, and
//! the Yetter–Drinfeld triples (g, χ, η) built from them.

mod classify;
mod group;
mod transport;
mod triple;

pub use classify::{classify_dim2, module_of, ClassifyError, Dim2Class, Dim2Module};
pub use group::{FGAbelianGroup, GroupElem, GroupError, GroupHom};
pub use transport::{transport_triple, TransportError};
pub use triple::{
    realize_braiding, realize_braiding_permissive, standard_triple, validate_yd_triple, Character, Derivation,
    TripleKind, Violation, YdData, YdTriple, AUTOMATIC_CONDITIONS,
};
