//! Exact computations with Jordan and super Jordan planes, block+point
//! braidings, Yetter–Drinfeld triples over abelian groups and the liftings
//! U(D, λ) of these Nichols algebras.

pub mod braided;
pub mod cli;
mod expr;
pub mod freealg;
pub mod lifting;
pub mod lincomb;
pub mod nichols;
pub mod rewrite;
pub mod scalar;
pub mod smash;
pub mod ydcat;
