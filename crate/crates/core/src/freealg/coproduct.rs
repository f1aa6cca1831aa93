use std::collections::BTreeMap;

use super::{apply_sigma, homogeneous_degree, FreeAlgError, FreeElement, TensorSquareElement, Word};
use crate::braided::BraidedVectorSpace;
use crate::lincomb::LinComb;

/// c(u⊗v) on T(V)⊗T(V): each letter of v is moved leftward past all of u.
pub fn braid_words(space: &BraidedVectorSpace, u: &Word, v: &Word) -> TensorSquareElement {
    let field = space.field();
    let (p, q) = (u.len(), v.len());
    let mut acc = FreeElement::monomial(field, u.concat(v));
    if p > 0 {
        for j in 1..=q {
            for i in (j..p + j).rev() {
                acc = apply_sigma(space, i, &acc);
            }
        }
    }
    LinComb::from_terms(field, acc.iter().map(|(w, c)| ((w.slice(0, q), w.slice(q, p + q)), c.clone())))
}

/// Product in the braided tensor square: (a⊗b)(a'⊗b') = a·c(b⊗a')·b'.
pub fn tensor_mul(
    space: &BraidedVectorSpace,
    x: &TensorSquareElement,
    y: &TensorSquareElement,
) -> TensorSquareElement {
    let mut cache: BTreeMap<(Word, Word), TensorSquareElement> = BTreeMap::new();
    let mut out = LinComb::zero(space.field());
    for ((a, b), c) in x.iter() {
        for ((a2, b2), d) in y.iter() {
            let swapped = cache.entry((b.clone(), a2.clone())).or_insert_with(|| braid_words(space, b, a2));
            let coeff = c * d;
            for ((s, t), e) in swapped.iter() {
                out.add_term((a.concat(s), t.concat(b2)), &coeff * e);
            }
        }
    }
    out
}

/// The braided coproduct, the algebra map with Δ(x_i) = x_i⊗1 + 1⊗x_i.
pub fn braided_coproduct(space: &BraidedVectorSpace, e: &FreeElement) -> TensorSquareElement {
    let field = space.field();
    let mut generators = BTreeMap::new();
    let mut out = LinComb::zero(field);
    for (w, c) in e.iter() {
        let mut acc = LinComb::monomial(field, (Word::empty(), Word::empty()));
        for &l in w.letters() {
            let dl = generators.entry(l).or_insert_with(|| {
                LinComb::from_terms(
                    field,
                    [((Word::letter(l), Word::empty()), field.one()), ((Word::empty(), Word::letter(l)), field.one())],
                )
            });
            acc = tensor_mul(space, &acc, dl);
        }
        out.add_scaled(&acc, c);
    }
    out
}

/// Δ(e) − e⊗1 − 1⊗e for a homogeneous element of positive degree.
pub fn primitivity_defect(space: &BraidedVectorSpace, e: &FreeElement) -> Result<TensorSquareElement, FreeAlgError> {
    if e.is_zero() {
        return Ok(LinComb::zero(space.field()));
    }
    match homogeneous_degree(e) {
        None => Err(FreeAlgError::Inhomogeneous),
        Some(0) => Err(FreeAlgError::DegreeZero),
        Some(_) => {
            let mut defect = braided_coproduct(space, e);
            let minus = space.field().integer(-1);
            for (w, c) in e.iter() {
                defect.add_term((w.clone(), Word::empty()), c * &minus);
                defect.add_term((Word::empty(), w.clone()), c * &minus);
            }
            Ok(defect)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braided::make_block;
    use crate::freealg::parse_free;
    use crate::scalar::CyclotomicField;

    #[test]
    fn block_relations_are_primitive() {
        let f = CyclotomicField::new(12).unwrap();
        let jordan = make_block(&f.one(), 2).unwrap();
        let y = parse_free("x2 x1 - x1 x2 + 1/2 x1 x1", f, 2).unwrap();
        assert!(primitivity_defect(&jordan, &y).unwrap().is_zero());
        let sup = make_block(&f.integer(-1), 2).unwrap();
        let x11 = parse_free("x1 x1", f, 2).unwrap();
        assert!(primitivity_defect(&sup, &x11).unwrap().is_zero());
        let x1 = parse_free("x1", f, 2).unwrap();
        assert!(primitivity_defect(&sup, &x1).unwrap().is_zero());
    }

    #[test]
    fn jordan_x1x2_defect() {
        // Δ(x1)Δ(x2) has bidegree (1,1) part x1⊗x2 + c(x1⊗x2) = x1⊗x2 + (x2 + x1)⊗x1
        let f = CyclotomicField::new(12).unwrap();
        let jordan = make_block(&f.one(), 2).unwrap();
        let e = parse_free("x1 x2", f, 2).unwrap();
        let defect = primitivity_defect(&jordan, &e).unwrap();
        let w = |l: &[u8]| Word::new(l.to_vec());
        let expected = LinComb::from_terms(
            f,
            [((w(&[1]), w(&[2])), f.one()), ((w(&[2]), w(&[1])), f.one()), ((w(&[1]), w(&[1])), f.one())],
        );
        assert_eq!(defect, expected);
    }

    #[test]
    fn errors() {
        let f = CyclotomicField::new(12).unwrap();
        let v = make_block(&f.one(), 2).unwrap();
        assert_eq!(primitivity_defect(&v, &parse_free("x1 + x1 x2", f, 2).unwrap()), Err(FreeAlgError::Inhomogeneous));
        assert_eq!(primitivity_defect(&v, &parse_free("3", f, 2).unwrap()), Err(FreeAlgError::DegreeZero));
    }
}
