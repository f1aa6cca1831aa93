use super::NicholsError;
use crate::braided::BlockPointParams;
use crate::freealg::{homogeneous_degree, FreeElement};
use crate::rewrite::RewriteSystem;
use crate::smash::{SmashAlgebra, SmashElement};
use crate::ydcat::{GroupElem, YdTriple};

/// Block+point parameters of V ⊕ kz for a primitive z of x-degree m.
///
/// z must be a weight vector for every group generator, modulo `modulo` when
/// given (the relations already known to hold). Then
/// q12 = weight of z at g, q21 = χ(g)^m, q22 = q12^m and a = η(g^m)/χ(g^m).
pub fn adjoin_primitive_params(
    t: &YdTriple,
    z: &FreeElement,
    m: usize,
    modulo: Option<&RewriteSystem>,
) -> Result<BlockPointParams, NicholsError> {
    if homogeneous_degree(z) != Some(m) {
        return Err(if z.is_zero() { NicholsError::ZeroElement } else { NicholsError::NotHomogeneous(m) });
    }
    let alg = SmashAlgebra::from_triple(t);
    let reduce = |e: SmashElement| -> Result<SmashElement, NicholsError> {
        match modulo {
            Some(sys) => Ok(sys.normal_form(&e)?),
            None => Ok(e),
        }
    };
    let zs = reduce(alg.from_free(z))?;
    let (lead, lead_c) = zs.max_term().map(|(k, c)| (k.clone(), c.clone())).ok_or(NicholsError::ZeroElement)?;
    let weight = |h: &GroupElem| -> Result<_, NicholsError> {
        let moved = reduce(alg.conjugate(h, &zs))?;
        let w = moved.coeff(&lead).checked_div(&lead_c)?;
        let defect = &moved - &zs.scale(&w);
        if let Some((m, c)) = defect.max_term() {
            let term = SmashElement::term(c.field(), m.clone(), c.clone()).to_string();
            return Err(NicholsError::NotWeightVector { generator: h.to_string(), term });
        }
        Ok(w)
    };
    let group = t.group();
    for i in 0..group.num_generators() {
        weight(&group.generator(i))?;
    }
    let q12 = weight(t.g())?;
    let gm = group.pow(t.g(), m as i64);
    let chi_m = t.chi_at(&gm);
    let a = t.eta_at(&gm).checked_div(&chi_m)?;
    let q22 = q12.pow(m as i64)?;
    Ok(BlockPointParams { q12, q21: chi_m, q22, eps: t.eps(), a })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braided::{braid_check, make_block_point};
    use crate::freealg::parse_free;
    use crate::rewrite::{complete_free, MonomialOrder};
    use crate::scalar::CyclotomicField;
    use crate::ydcat::standard_triple;

    #[test]
    fn adjoined_parameters() {
        let f = CyclotomicField::new(12).unwrap();
        let jordan = standard_triple(&f.one()).unwrap();
        let y = parse_free("x2 x1 - x1 x2 + 1/2 x1 x1", f, 2).unwrap();
        let p = adjoin_primitive_params(&jordan, &y, 2, None).unwrap();
        assert_eq!((p.q12.clone(), p.q21.clone(), p.q22.clone(), p.a.clone()), (f.one(), f.one(), f.one(), f.integer(2)));
        assert_eq!(p.ghost(), f.integer(-4));
        braid_check(&make_block_point(&p).unwrap()).unwrap();

        let sup = standard_triple(&f.integer(-1)).unwrap();
        let x11 = parse_free("x1 x1", f, 2).unwrap();
        let p = adjoin_primitive_params(&sup, &x11, 2, None).unwrap();
        assert_eq!((p.q12.clone(), p.q21.clone(), p.q22.clone(), p.a.clone()), (f.one(), f.one(), f.one(), f.integer(-2)));
        braid_check(&make_block_point(&p).unwrap()).unwrap();

        let r = parse_free("x2 (x2 x1 + x1 x2) - (x2 x1 + x1 x2) x2 - x1 (x2 x1 + x1 x2)", f, 2).unwrap();
        let err = adjoin_primitive_params(&sup, &r, 3, None).unwrap_err();
        assert!(matches!(err, NicholsError::NotWeightVector { .. }), "{err}");
        let sys = complete_free(f, 2, &[x11], MonomialOrder::deglex(2), 3).unwrap();
        let p = adjoin_primitive_params(&sup, &r, 3, Some(&sys)).unwrap();
        let minus = f.integer(-1);
        assert_eq!((p.q12.clone(), p.q21.clone(), p.q22.clone(), p.a.clone()), (minus.clone(), minus.clone(), minus, f.integer(-3)));
        assert_eq!(p.ghost(), f.integer(-3));
        braid_check(&make_block_point(&p).unwrap()).unwrap();
    }

    #[test]
    fn rejects_bad_input() {
        let f = CyclotomicField::new(12).unwrap();
        let t = standard_triple(&f.one()).unwrap();
        assert!(matches!(adjoin_primitive_params(&t, &parse_free("x2", f, 2).unwrap(), 1, None), Err(NicholsError::NotWeightVector { .. })));
        assert!(matches!(adjoin_primitive_params(&t, &parse_free("x1 + x1 x1", f, 2).unwrap(), 2, None), Err(NicholsError::NotHomogeneous(2))));
        assert!(matches!(adjoin_primitive_params(&t, &parse_free("0", f, 2).unwrap(), 2, None), Err(NicholsError::ZeroElement)));
    }
}
