//! Algebraic invariants on random inputs. Each case draws a seed and builds
//! its data from a ChaCha stream so failures replay exactly.

mod common;

use common::{field, random_diagonal, random_scalar, random_unit};
use jordan_lift::braided::{make_block, BraidedVectorSpace};
use jordan_lift::freealg::{
    braided_coproduct, from_dense, primitivity_defect, symmetrizer_apply, tensor_mul, to_dense, FreeElement,
    SymmetrizerTower, TensorSquareElement, Word,
};
use jordan_lift::lifting::{build_lifting_to, iso_classify, IsoVerdict};
use jordan_lift::lincomb::LinComb;
use jordan_lift::nichols::{ghost_of, relation_generators};
use jordan_lift::rewrite::{complete_to_degree, MonomialOrder};
use jordan_lift::scalar::{Matrix, Scalar};
use jordan_lift::smash::{SmashAlgebra, SmashElement, SmashMonomial, SmashTensor};
use jordan_lift::ydcat::{
    classify_dim2, module_of, standard_triple, transport_triple, Character, Derivation, Dim2Class,
    FGAbelianGroup, GroupElem, GroupHom, YdData, YdTriple,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn sign(rng: &mut ChaCha8Rng) -> i64 {
    if rng.gen_bool(0.5) {
        1
    } else {
        -1
    }
}

fn random_word(rng: &mut ChaCha8Rng, max: usize, d: usize) -> Word {
    let n = rng.gen_range(0..=max);
    Word::new((0..n).map(|_| rng.gen_range(1..=d as u8)).collect())
}

fn random_free(rng: &mut ChaCha8Rng, max: usize, d: usize) -> FreeElement {
    let f = field();
    let mut e = FreeElement::zero(f);
    for _ in 0..rng.gen_range(1..=3) {
        e.add_term(random_word(rng, max, d), f.integer(rng.gen_range(-3..=3)));
    }
    e
}

/// A valid triple over ℤ² (g = h1) or ℤ×ℤ/3 (g = h1, χ(h2) a cube root of unity).
fn random_triple(rng: &mut ChaCha8Rng) -> YdTriple {
    let f = field();
    let eps = f.integer(sign(rng));
    let data = if rng.gen_bool(0.5) {
        let group = FGAbelianGroup::free(2);
        YdData {
            g: group.generator(0),
            chi: Character::new(vec![eps, random_unit(rng, f)]),
            eta: Derivation::new(vec![f.one(), f.integer(rng.gen_range(-3..=3))]),
            group,
        }
    } else {
        let group = FGAbelianGroup::new(1, vec![3]).unwrap();
        YdData {
            g: group.generator(0),
            chi: Character::new(vec![eps, f.zeta_pow(4 * rng.gen_range(0..3))]),
            eta: Derivation::new(vec![f.one(), f.zero()]),
            group,
        }
    };
    YdTriple::new(data).unwrap()
}

fn random_elem(rng: &mut ChaCha8Rng, group: &FGAbelianGroup) -> GroupElem {
    group.element((0..group.num_generators()).map(|_| rng.gen_range(-3..=3)).collect()).unwrap()
}

fn random_smash(rng: &mut ChaCha8Rng, alg: &SmashAlgebra, max: usize) -> SmashElement {
    let f = field();
    let mut e = SmashElement::zero(f);
    for _ in 0..rng.gen_range(1..=3) {
        let word = random_word(rng, max, alg.dim());
        let group = random_elem(rng, alg.group());
        e.add_term(SmashMonomial { word, group }, f.integer(rng.gen_range(-2..=2)));
    }
    e
}

fn some_space(rng: &mut ChaCha8Rng) -> BraidedVectorSpace {
    let f = field();
    match rng.gen_range(0..3) {
        0 => make_block(&f.one(), 2).unwrap(),
        1 => make_block(&f.integer(-1), 2).unwrap(),
        _ => random_diagonal(rng, 2),
    }
}

type Triple<M> = LinComb<((M, M), M)>;

fn free_left(space: &BraidedVectorSpace, t: &TensorSquareElement) -> Triple<Word> {
    let mut out = Triple::zero(space.field());
    for ((a, b), c) in t.iter() {
        for ((a1, a2), d) in braided_coproduct(space, &FreeElement::monomial(space.field(), a.clone())).iter() {
            out.add_term(((a1.clone(), a2.clone()), b.clone()), c * d);
        }
    }
    out
}

fn free_right(space: &BraidedVectorSpace, t: &TensorSquareElement) -> Triple<Word> {
    let mut out = Triple::zero(space.field());
    for ((a, b), c) in t.iter() {
        for ((b1, b2), d) in braided_coproduct(space, &FreeElement::monomial(space.field(), b.clone())).iter() {
            out.add_term(((a.clone(), b1.clone()), b2.clone()), c * d);
        }
    }
    out
}

fn smash_left(alg: &SmashAlgebra, t: &SmashTensor) -> Triple<SmashMonomial> {
    let mut out = Triple::zero(alg.field());
    for ((a, b), c) in t.iter() {
        for ((a1, a2), d) in alg.coproduct(&SmashElement::monomial(alg.field(), a.clone())).iter() {
            out.add_term(((a1.clone(), a2.clone()), b.clone()), c * d);
        }
    }
    out
}

fn smash_right(alg: &SmashAlgebra, t: &SmashTensor) -> Triple<SmashMonomial> {
    let mut out = Triple::zero(alg.field());
    for ((a, b), c) in t.iter() {
        for ((b1, b2), d) in alg.coproduct(&SmashElement::monomial(alg.field(), b.clone())).iter() {
            out.add_term(((a.clone(), b1.clone()), b2.clone()), c * d);
        }
    }
    out
}

fn config() -> ProptestConfig {
    ProptestConfig { cases: 24, ..ProptestConfig::default() }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn field_axioms(seed in any::<u64>()) {
        let mut r = rng(seed);
        let f = field();
        let (a, b, c) = (random_scalar(&mut r, f), random_scalar(&mut r, f), random_scalar(&mut r, f));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
        // printed form is canonical: it parses back to the same element
        prop_assert_eq!(f.parse(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn kernel_is_annihilated(seed in any::<u64>()) {
        let mut r = rng(seed);
        let f = field();
        let (rows, cols) = (r.gen_range(1..=6), r.gen_range(1..=6));
        let entries = (0..rows * cols)
            .map(|_| if r.gen_bool(0.4) { f.zero() } else { random_unit(&mut r, f) })
            .collect();
        let m = Matrix::from_entries(f, rows, cols, entries);
        let (rank, kernel) = m.rank_and_kernel();
        prop_assert_eq!(rank + kernel.len(), cols);
        prop_assert_eq!(rank, m.transpose().rank());
        for v in &kernel {
            prop_assert!(m.apply(v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn derivation_rule(seed in any::<u64>()) {
        let mut r = rng(seed);
        let t = random_triple(&mut r);
        let (a, b) = (random_elem(&mut r, t.group()), random_elem(&mut r, t.group()));
        let ab = t.group().mul(&a, &b);
        prop_assert_eq!(t.chi_at(&ab), &t.chi_at(&a) * &t.chi_at(&b));
        prop_assert_eq!(t.eta_at(&ab), &(&t.chi_at(&a) * &t.eta_at(&b)) + &(&t.eta_at(&a) * &t.chi_at(&b)));
    }

    #[test]
    fn transport_is_functorial(seed in any::<u64>()) {
        let mut r = rng(seed);
        let f = field();
        let group = FGAbelianGroup::free(2);
        let t = YdTriple::new(YdData {
            g: group.generator(0),
            chi: Character::new(vec![f.integer(sign(&mut r)), random_unit(&mut r, f)]),
            eta: Derivation::new(vec![f.one(), f.integer(r.gen_range(-3..=3))]),
            group: group.clone(),
        })
        .unwrap();
        let mut auto = || {
            // an elementary matrix times a sign pattern
            let k = r.gen_range(-2..=2);
            let (s1, s2) = (sign(&mut r), sign(&mut r));
            let images = if r.gen_bool(0.5) {
                vec![group.element(vec![s1, 0]).unwrap(), group.element(vec![k, s2]).unwrap()]
            } else {
                vec![group.element(vec![s1, k]).unwrap(), group.element(vec![0, s2]).unwrap()]
            };
            GroupHom::new(&group, images).unwrap()
        };
        let (p, q) = (auto(), auto());
        let twice = transport_triple(&transport_triple(&t, &p).unwrap(), &q).unwrap();
        prop_assert_eq!(&twice, &transport_triple(&t, &q.compose(&p)).unwrap());
        prop_assert_eq!(transport_triple(&t, &GroupHom::identity(&group)).unwrap(), t);
    }

    #[test]
    fn classify_round_trip(seed in any::<u64>()) {
        let mut r = rng(seed);
        let t = random_triple(&mut r);
        let module = module_of(t.data());
        let Dim2Class::Block { data, .. } = classify_dim2(&module).unwrap() else {
            return Err(TestCaseError::fail("triple module classified as diagonal"));
        };
        prop_assert_eq!(&data, t.data());
        // and after a change of basis x2 ↦ x2 + c x1, the class data is unchanged
        let f = field();
        let c = f.integer(r.gen_range(-3..=3));
        let p = Matrix::from_rows(f, vec![vec![f.one(), c.clone()], vec![f.zero(), f.one()]]);
        let p_inv = Matrix::from_rows(f, vec![vec![f.one(), -&c], vec![f.zero(), f.one()]]);
        let moved = jordan_lift::ydcat::Dim2Module {
            actions: module.actions.iter().map(|a| p_inv.mul(a).mul(&p)).collect(),
            ..module.clone()
        };
        let Dim2Class::Block { data: again, .. } = classify_dim2(&moved).unwrap() else {
            return Err(TestCaseError::fail("conjugated module classified as diagonal"));
        };
        prop_assert_eq!(&again, t.data());
    }

    #[test]
    fn braided_coproduct_is_coassociative_and_multiplicative(seed in any::<u64>()) {
        let mut r = rng(seed);
        let space = some_space(&mut r);
        let e = random_free(&mut r, 4, space.dim());
        let de = braided_coproduct(&space, &e);
        prop_assert_eq!(free_left(&space, &de), free_right(&space, &de));
        let (u, v) = (random_free(&mut r, 3, space.dim()), random_free(&mut r, 2, space.dim()));
        let uv = jordan_lift::freealg::free_mul(&u, &v);
        prop_assert_eq!(
            braided_coproduct(&space, &uv),
            tensor_mul(&space, &braided_coproduct(&space, &u), &braided_coproduct(&space, &v))
        );
    }

    #[test]
    fn quadratic_kernel_is_primitive(seed in any::<u64>()) {
        let mut r = rng(seed);
        let space = some_space(&mut r);
        let d = space.dim();
        let mut tower = SymmetrizerTower::new(&space);
        for v in tower.kernel(2).unwrap() {
            let e = from_dense(space.field(), &v, 2, d);
            prop_assert!(primitivity_defect(&space, &e).unwrap().is_zero());
        }
    }

    #[test]
    fn smash_bialgebra_axioms(seed in any::<u64>()) {
        let mut r = rng(seed);
        let t = random_triple(&mut r);
        let alg = SmashAlgebra::from_triple(&t);
        let (a, b, c) = (random_smash(&mut r, &alg, 2), random_smash(&mut r, &alg, 2), random_smash(&mut r, &alg, 1));
        prop_assert_eq!(alg.mul(&alg.mul(&a, &b), &c), alg.mul(&a, &alg.mul(&b, &c)));
        let da = alg.coproduct(&a);
        prop_assert_eq!(smash_left(&alg, &da), smash_right(&alg, &da));
        prop_assert_eq!(alg.coproduct(&alg.mul(&a, &b)), alg.tensor_mul(&da, &alg.coproduct(&b)));
        // (ε ⊗ id)Δ = id = (id ⊗ ε)Δ
        let mut left = SmashElement::zero(alg.field());
        let mut right = SmashElement::zero(alg.field());
        for ((x, y), k) in da.iter() {
            let ex = alg.counit(&SmashElement::monomial(alg.field(), x.clone()));
            let ey = alg.counit(&SmashElement::monomial(alg.field(), y.clone()));
            left.add_term(y.clone(), k * &ex);
            right.add_term(x.clone(), k * &ey);
        }
        prop_assert_eq!(&left, &a);
        prop_assert_eq!(&right, &a);
        prop_assert_eq!(alg.counit(&alg.mul(&a, &b)), &alg.counit(&a) * &alg.counit(&b));
    }

    #[test]
    fn g_squared_on_x2(seed in any::<u64>()) {
        let mut r = rng(seed);
        let t = random_triple(&mut r);
        let alg = SmashAlgebra::from_triple(&t);
        let g2 = t.group().pow(t.g(), 2);
        let f = field();
        let expected = FreeElement::from_terms(f, [(Word::letter(2), f.one()), (Word::letter(1), &f.integer(2) * &t.eps())]);
        prop_assert_eq!(alg.act_word(&g2, &Word::letter(2)), expected);
    }

    #[test]
    fn ghost_formula(num in -20i64..20, den in 1i64..5, minus in any::<bool>()) {
        let f = field();
        let a = f.fraction(num, den);
        let eps = f.integer(if minus { -1 } else { 1 });
        let ghost = ghost_of(&eps, &a).unwrap();
        let expected = if minus { a.clone() } else { &f.integer(-2) * &a };
        prop_assert_eq!(&ghost.value, &expected);
        let natural = expected.as_integer().is_some_and(|n| n >= 0.into());
        prop_assert_eq!(ghost.discrete, natural);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 12, ..ProptestConfig::default() })]

    #[test]
    fn normal_forms_are_confluent(seed in any::<u64>(), sup in any::<bool>(), lambda in -2i64..=2) {
        let mut r = rng(seed);
        let f = field();
        let t = standard_triple(&f.integer(if sup { -1 } else { 1 })).unwrap();
        let p = build_lifting_to(&t, &f.integer(lambda), 5).unwrap();
        let e = random_smash(&mut r, p.algebra(), 5);
        let nf = p.system().normal_form(&e).unwrap();
        for _ in 0..3 {
            prop_assert_eq!(&p.system().normal_form_randomized(&e, &mut r).unwrap(), &nf);
        }
        // normal forms are irreducible and idempotent
        prop_assert!(nf.keys().all(|m| p.system().is_irreducible(&m.word)));
        prop_assert_eq!(p.system().normal_form(&nf).unwrap(), nf);
    }

    #[test]
    fn completion_is_idempotent(sup in any::<bool>(), lambda in -2i64..=2) {
        let f = field();
        let t = standard_triple(&f.integer(if sup { -1 } else { 1 })).unwrap();
        let p = build_lifting_to(&t, &f.integer(lambda), 3).unwrap();
        let rels: Vec<SmashElement> = p.relations().iter().map(|r| r.element.clone()).collect();
        let mut sys = complete_to_degree(p.algebra(), &rels, MonomialOrder::deglex(2), 6).unwrap();
        prop_assert_eq!(sys.complete().unwrap(), 0);
    }

    #[test]
    fn iso_is_reflexive_and_symmetric(a in -3i64..=3, b in -3i64..=3, sup in any::<bool>(), flip in any::<bool>()) {
        let f = field();
        let t = standard_triple(&f.integer(if sup { -1 } else { 1 })).unwrap();
        let group = t.group().clone();
        let other = if flip {
            let inv = GroupHom::new(&group, vec![group.element(vec![-1]).unwrap()]).unwrap();
            transport_triple(&t, &inv).unwrap()
        } else {
            t.clone()
        };
        let p = build_lifting_to(&t, &f.integer(a), 3).unwrap();
        let q = build_lifting_to(&other, &f.integer(b), 3).unwrap();
        let reflexive = matches!(iso_classify(&p, &p).unwrap(), IsoVerdict::Isomorphic { .. });
        prop_assert!(reflexive);
        let forward = matches!(iso_classify(&p, &q).unwrap(), IsoVerdict::Isomorphic { .. });
        let backward = matches!(iso_classify(&q, &p).unwrap(), IsoVerdict::Isomorphic { .. });
        prop_assert_eq!(forward, backward);
        prop_assert_eq!(forward, (a == 0) == (b == 0));
    }

    #[test]
    fn relation_generators_are_annihilated(seed in any::<u64>(), n in 2usize..=4) {
        let mut r = rng(seed);
        let space = some_space(&mut r);
        let d = space.dim();
        for rel in relation_generators(&space, n).unwrap() {
            let v = to_dense(&rel, n, d);
            prop_assert!(symmetrizer_apply(&space, n, &v).iter().all(Scalar::is_zero));
        }
    }
}
