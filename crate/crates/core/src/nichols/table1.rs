//! Block+point braidings whose Nichols algebra has finite GKdim, as guarded
//! rows. A parameter set matching no row has infinite GKdim.

use std::fmt;

use super::NicholsError;
use crate::braided::ghost_formula;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductCell {
    One,
    MinusOne,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EpsCell {
    Plus,
    Minus,
    Either,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Q22Cell {
    One,
    MinusOne,
    /// 1, or not a root of unity.
    OneOrNotRoot,
    /// A root of unity other than 1.
    RootNotOne,
    /// A primitive cube root of unity.
    PrimitiveCube,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GhostCell {
    Value(i64),
    Discrete,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GkFormula {
    Const(u64),
    GhostPlus(u64),
}

impl fmt::Display for GkFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GkFormula::Const(n) => write!(f, "{n}"),
            GkFormula::GhostPlus(n) => write!(f, "G + {n}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Table1Row {
    pub q12q21: ProductCell,
    pub eps: EpsCell,
    pub q22: Q22Cell,
    pub ghost: GhostCell,
    pub gkdim: GkFormula,
}

const fn row(q12q21: ProductCell, eps: EpsCell, q22: Q22Cell, ghost: GhostCell, gkdim: GkFormula) -> Table1Row {
    Table1Row { q12q21, eps, q22, ghost, gkdim }
}

use EpsCell::{Either, Minus, Plus};
use GhostCell::{Discrete, Value};
use GkFormula::{Const, GhostPlus};
use ProductCell::{MinusOne as P_1, One as P1};

/// Transcribed row by row; shared cells are repeated.
#[rustfmt::skip]
pub const TABLE1: [Table1Row; 8] = [
    //  q12q21  ϵ       q22                     𝒢            GKdim
    row(P1,  Either, Q22Cell::OneOrNotRoot,  Value(0),  Const(3)),
    row(P1,  Either, Q22Cell::RootNotOne,    Value(0),  Const(2)),
    row(P1,  Plus,   Q22Cell::One,           Discrete,  GhostPlus(3)),
    row(P1,  Plus,   Q22Cell::MinusOne,      Discrete,  Const(2)),
    row(P1,  Plus,   Q22Cell::PrimitiveCube, Value(1),  Const(2)),
    row(P1,  Minus,  Q22Cell::One,           Discrete,  GhostPlus(3)),
    row(P1,  Minus,  Q22Cell::MinusOne,      Discrete,  GhostPlus(2)),
    row(P_1, Minus,  Q22Cell::MinusOne,      Value(1),  Const(2)),
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GkdimVerdict {
    Finite { formula: GkFormula, value: u64, row: usize },
    Infinite,
    /// ϵ is not a sign, so the datum is not a block+point braiding.
    NotInTable,
}

impl fmt::Display for GkdimVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GkdimVerdict::Finite { value, .. } => write!(f, "finite gkdim = {value}"),
            GkdimVerdict::Infinite => write!(f, "infinite gkdim"),
            GkdimVerdict::NotInTable => write!(f, "not in table"),
        }
    }
}

/// The ghost together with whether it is discrete (a non-negative integer).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ghost {
    pub value: Scalar,
    pub discrete: bool,
}

impl fmt::Display for Ghost {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ghost = {} ({})", self.value, if self.discrete { "discrete" } else { "not discrete" })
    }
}

fn natural(s: &Scalar) -> Option<u64> {
    s.as_integer().and_then(|n| u64::try_from(n).ok())
}

pub fn ghost_of(eps: &Scalar, a: &Scalar) -> Result<Ghost, NicholsError> {
    let value = ghost_formula(eps, a).ok_or_else(|| NicholsError::EpsNotSign(eps.to_string()))?;
    let discrete = natural(&value).is_some();
    Ok(Ghost { value, discrete })
}

fn sign_of(s: &Scalar) -> Option<i64> {
    if s.is_one() {
        Some(1)
    } else if *s == s.field().integer(-1) {
        Some(-1)
    } else {
        None
    }
}

/// First matching row of [`TABLE1`], or `Infinite`.
pub fn table1_lookup(q12q21: &Scalar, eps: &Scalar, q22: &Scalar, ghost: &Scalar) -> Result<GkdimVerdict, NicholsError> {
    if q12q21.is_zero() {
        return Err(NicholsError::ZeroParameter("q12q21"));
    }
    if q22.is_zero() {
        return Err(NicholsError::ZeroParameter("q22"));
    }
    let Some(eps) = sign_of(eps) else {
        return Ok(GkdimVerdict::NotInTable);
    };
    let order = q22.is_root_of_unity()?;
    let product = sign_of(q12q21);
    let ghost_n = natural(ghost);
    for (i, r) in TABLE1.iter().enumerate() {
        let product_ok = match r.q12q21 {
            ProductCell::One => product == Some(1),
            ProductCell::MinusOne => product == Some(-1),
        };
        let eps_ok = match r.eps {
            EpsCell::Plus => eps == 1,
            EpsCell::Minus => eps == -1,
            EpsCell::Either => true,
        };
        let q22_ok = match r.q22 {
            Q22Cell::One => order == Some(1),
            Q22Cell::MinusOne => order == Some(2),
            Q22Cell::OneOrNotRoot => matches!(order, None | Some(1)),
            Q22Cell::RootNotOne => matches!(order, Some(k) if k > 1),
            Q22Cell::PrimitiveCube => order == Some(3),
        };
        let ghost_ok = match r.ghost {
            GhostCell::Value(v) => *ghost == ghost.field().integer(v),
            GhostCell::Discrete => ghost_n.is_some(),
        };
        if product_ok && eps_ok && q22_ok && ghost_ok {
            let value = match r.gkdim {
                GkFormula::Const(n) => n,
                GkFormula::GhostPlus(n) => ghost_n.expect("discrete ghost") + n,
            };
            return Ok(GkdimVerdict::Finite { formula: r.gkdim, value, row: i + 1 });
        }
    }
    Ok(GkdimVerdict::Infinite)
}
