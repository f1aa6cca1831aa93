//! U(D, λ) ≅ U(D', λ') iff D' = f(D) for some f ∈ Aut(G) and λ = cλ' with
//! c ≠ 0. Over an algebraically closed field the second condition is
//! λ = 0 ⟺ λ' = 0.

use std::fmt;

use super::{LiftError, LiftingPresentation};
use crate::scalar::Scalar;
use crate::ydcat::{transport_triple, GroupElem, GroupHom};

/// Free-block entries of candidate automorphisms range over [−B, B].
pub const DEFAULT_AUT_BOUND: i64 = 3;
const MAX_CANDIDATES: u64 = 2_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScalingClass {
    /// λ = cλ' for exactly this c.
    Unique(Scalar),
    /// λ = λ' = 0: every c works.
    Any,
}

impl fmt::Display for ScalingClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalingClass::Unique(c) => write!(f, "c = {c}"),
            ScalingClass::Any => write!(f, "any c"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoVerdict {
    Isomorphic { witness: GroupHom, scaling: ScalingClass },
    NotIsomorphic { obstruction: String },
    /// The bounded search found no automorphism, but Aut(G) is larger than the search.
    Inconclusive { searched: u64 },
}

impl fmt::Display for IsoVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IsoVerdict::Isomorphic { witness, scaling } => {
                let images: Vec<String> = witness.images().iter().map(GroupElem::to_string).collect();
                write!(f, "isomorphic\nwitness = [{}]\nscaling = {scaling} (lambda = c lambda')", images.join(", "))
            }
            IsoVerdict::NotIsomorphic { obstruction } => write!(f, "not isomorphic\nobstruction = {obstruction}"),
            IsoVerdict::Inconclusive { searched } => write!(f, "inconclusive\nsearched = {searched}"),
        }
    }
}

pub fn iso_classify(p: &LiftingPresentation, q: &LiftingPresentation) -> Result<IsoVerdict, LiftError> {
    iso_classify_with_bound(p, q, DEFAULT_AUT_BOUND)
}

/// Candidate images per generator: free generators go anywhere with free
/// part in [−B, B]^r, torsion generators go to torsion elements.
fn candidate_images(p: &LiftingPresentation, bound: i64) -> Vec<Vec<GroupElem>> {
    let group = p.triple().group();
    let r = group.free_rank();
    let torsion = group.torsion_elements();
    let mut free_parts: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 0..r {
        free_parts = free_parts
            .into_iter()
            .flat_map(|v| {
                (-bound..=bound).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    (0..group.num_generators())
        .map(|i| {
            if i < r {
                let mut out = Vec::new();
                for fp in &free_parts {
                    for t in &torsion {
                        let mut coords = t.coords().to_vec();
                        coords[..r].copy_from_slice(fp);
                        out.push(group.element(coords).expect("right length"));
                    }
                }
                out
            } else {
                torsion.clone()
            }
        })
        .collect()
}

pub fn iso_classify_with_bound(
    p: &LiftingPresentation,
    q: &LiftingPresentation,
    bound: i64,
) -> Result<IsoVerdict, LiftError> {
    let group = p.triple().group();
    if group != q.triple().group() {
        return Err(LiftError::GroupMismatch);
    }
    if p.case() != q.case() {
        return Ok(IsoVerdict::NotIsomorphic { obstruction: format!("{} vs {}", p.case(), q.case()) });
    }
    let scaling = match (p.lambda().is_zero(), q.lambda().is_zero()) {
        (true, true) => ScalingClass::Any,
        (false, false) => ScalingClass::Unique(p.lambda().checked_div(q.lambda()).expect("nonzero lambda'")),
        _ => {
            return Ok(IsoVerdict::NotIsomorphic {
                obstruction: format!("lambda = {} and lambda' = {} are not both zero or both nonzero", p.lambda(), q.lambda()),
            })
        }
    };
    let candidates = candidate_images(p, bound);
    let total: u64 = candidates.iter().map(|c| c.len() as u64).try_fold(1u64, |a, b| a.checked_mul(b)).unwrap_or(u64::MAX);
    let n = candidates.len();
    let mut idx = vec![0usize; n];
    let mut searched = 0u64;
    loop {
        if searched >= MAX_CANDIDATES {
            return Ok(IsoVerdict::Inconclusive { searched });
        }
        searched += 1;
        let images: Vec<GroupElem> = idx.iter().enumerate().map(|(i, &k)| candidates[i][k].clone()).collect();
        if let Ok(f) = GroupHom::new(group, images) {
            if f.apply(p.triple().g()) == *q.triple().g() && f.is_automorphism() {
                if let Ok(t) = transport_triple(p.triple(), &f) {
                    if t == *q.triple() {
                        return Ok(IsoVerdict::Isomorphic { witness: f, scaling });
                    }
                }
            }
        }
        // odometer
        let mut pos = 0;
        while pos < n {
            idx[pos] += 1;
            if idx[pos] < candidates[pos].len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
        if pos == n {
            break;
        }
    }
    // Aut(ℤ) = {±1} lies inside any bound ≥ 1, so for free rank ≤ 1 the search is exhaustive.
    if group.free_rank() <= 1 && bound >= 1 && searched == total {
        Ok(IsoVerdict::NotIsomorphic { obstruction: "no automorphism of the group carries one triple to the other".into() })
    } else {
        Ok(IsoVerdict::Inconclusive { searched })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lifting::build_lifting_to;
    use crate::scalar::CyclotomicField;
    use crate::ydcat::standard_triple;

    #[test]
    fn integers() {
        let f = CyclotomicField::new(12).unwrap();
        let t = standard_triple(&f.one()).unwrap();
        let lift = |t: &crate::ydcat::YdTriple, l: i64| build_lifting_to(t, &f.integer(l), 3).unwrap();
        match iso_classify(&lift(&t, 1), &lift(&t, 4)).unwrap() {
            IsoVerdict::Isomorphic { scaling, .. } => assert_eq!(scaling, ScalingClass::Unique(f.fraction(1, 4))),
            other => panic!("{other:?}"),
        }
        assert!(matches!(iso_classify(&lift(&t, 0), &lift(&t, 1)).unwrap(), IsoVerdict::NotIsomorphic { .. }));
        let group = t.group().clone();
        let inv = GroupHom::new(&group, vec![group.element(vec![-1]).unwrap()]).unwrap();
        let tf = transport_triple(&t, &inv).unwrap();
        match iso_classify(&lift(&t, 1), &lift(&tf, 7)).unwrap() {
            IsoVerdict::Isomorphic { witness, .. } => assert_eq!(witness, inv),
            other => panic!("{other:?}"),
        }
        let sup = standard_triple(&f.integer(-1)).unwrap();
        assert!(matches!(iso_classify(&lift(&t, 1), &lift(&sup, 1)).unwrap(), IsoVerdict::NotIsomorphic { .. }));
    }
}
