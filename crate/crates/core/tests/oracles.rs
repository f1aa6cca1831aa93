//! DERIVED values checked against independent computations.

mod common;

use std::collections::BTreeMap;

use common::{brute_symmetrizer, field, matrix_rows, naive_rank, random_diagonal, sigma};
use jordan_lift::braided::{make_block, BraidedVectorSpace};
use jordan_lift::freealg::{
    braid_word_action, default_degree_cap, parse_free, primitivity_defect, symmetrizer_matrix, to_dense, Word,
};
use jordan_lift::lifting::{build_lifting_to, zero_divisor_witness};
use jordan_lift::nichols::{nichols_dims, relation_generators};
use jordan_lift::scalar::{Matrix, Scalar};
use jordan_lift::ydcat::{
    classify_dim2, standard_triple, transport_triple, Dim2Class, Dim2Module, FGAbelianGroup, GroupHom,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn block(eps: i64) -> BraidedVectorSpace {
    make_block(&field().integer(eps), 2).unwrap()
}

#[test]
fn factorized_symmetrizer_equals_matsumoto_sum() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let diag = random_diagonal(&mut rng, 3);
    for space in [block(1), block(-1), diag] {
        for n in 0..=5 {
            let m = symmetrizer_matrix(&space, n, default_degree_cap(space.dim())).unwrap();
            assert_eq!(matrix_rows(&m), brute_symmetrizer(&space, n), "dim {} n {n}", space.dim());
        }
    }
}

#[test]
fn rank_agrees_with_naive_elimination() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let f = field();
    use rand::Rng;
    for _ in 0..60 {
        let rows = rng.gen_range(1..=8);
        let cols = rng.gen_range(1..=8);
        let inner = rng.gen_range(1..=8);
        let a = Matrix::from_rows(f, (0..rows).map(|_| (0..inner).map(|_| small(&mut rng)).collect()).collect());
        let b = Matrix::from_rows(f, (0..inner).map(|_| (0..cols).map(|_| small(&mut rng)).collect()).collect());
        let m = a.mul(&b);
        let (rank, kernel) = m.rank_and_kernel();
        assert_eq!(rank, naive_rank(&matrix_rows(&m)));
        assert_eq!(rank + kernel.len(), cols);
        for v in &kernel {
            assert!(m.apply(v).iter().all(Scalar::is_zero));
        }
    }
}

fn small(rng: &mut ChaCha8Rng) -> Scalar {
    use rand::Rng;
    let f = field();
    match rng.gen_range(0..4) {
        0 => f.zero(),
        1 => f.zeta_pow(rng.gen_range(0..12)),
        _ => f.integer(rng.gen_range(-3..=3)),
    }
}

#[test]
fn symmetrizer_ranks_match_basis_counts() {
    // x1^a x2^b with a + b = n, and x1^a x21^b x2^c with a ≤ 1, a + 2b + c = n
    let jordan: Vec<u64> = (0..=6u64).map(|n| n + 1).collect();
    let sup: Vec<u64> = (0..=6u64)
        .map(|n| {
            let mut count = 0;
            for a in 0..=1 {
                for b in 0..=n {
                    if a + 2 * b <= n {
                        count += 1;
                    }
                }
            }
            count
        })
        .collect();
    assert_eq!(nichols_dims(&block(1), 6).unwrap().dims, jordan);
    assert_eq!(nichols_dims(&block(-1), 6).unwrap().dims, sup);
    // the dense matrix for V(-1,2), n = 3
    let m = symmetrizer_matrix(&block(-1), 3, 12).unwrap();
    assert_eq!(naive_rank(&matrix_rows(&m)), 4);
}

#[test]
fn jordan_has_no_cubic_relations() {
    // ker 𝔖_3 against the span of V·K + K·V, both by naive elimination
    let f = field();
    let space = block(1);
    let s3 = brute_symmetrizer(&space, 3);
    let kernel_dim = 8 - naive_rank(&s3);
    let y = parse_free("x2 x1 - x1 x2 + 1/2 x1 x1", f, 2).unwrap();
    let mut span = Vec::new();
    for l in 1..=2u8 {
        let x = parse_free(&format!("x{l}"), f, 2).unwrap();
        for e in [jordan_lift::freealg::free_mul(&x, &y), jordan_lift::freealg::free_mul(&y, &x)] {
            span.push(to_dense(&e, 3, 2));
        }
    }
    assert_eq!(kernel_dim, 4);
    assert_eq!(naive_rank(&span), 4);
    assert!(relation_generators(&space, 3).unwrap().is_empty());
}

#[test]
fn longest_element_lifts_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let f = field();
    for space in [block(1), block(-1), random_diagonal(&mut rng, 3)] {
        let d = space.dim();
        for w in Word::all(3, d) {
            let v = jordan_lift::lincomb::LinComb::monomial(f, w.clone());
            let a = braid_word_action(&space, 3, &[1, 2, 1], &v).unwrap();
            let b = braid_word_action(&space, 3, &[2, 1, 2], &v).unwrap();
            assert_eq!(a, b);
            // and against the oracle σ
            let mut e = vec![f.zero(); d.pow(3)];
            e[w.index(d)] = f.one();
            let o = sigma(&space, 3, 1, &sigma(&space, 3, 2, &sigma(&space, 3, 1, &e)));
            assert_eq!(to_dense(&a, 3, d), o);
        }
    }
    // c(x2⊗x1) = x1⊗x2 for V(1,2)
    let v = parse_free("x2 x1", f, 2).unwrap();
    assert_eq!(braid_word_action(&block(1), 2, &[1], &v).unwrap(), parse_free("x1 x2", f, 2).unwrap());
}

#[test]
fn defect_of_x1x2_by_hand() {
    // (x1⊗1 + 1⊗x1)(x2⊗1 + 1⊗x2) has cross terms x1⊗x2 and c(x1⊗x2) = (x2 + x1)⊗x1
    let f = field();
    let e = parse_free("x1 x2", f, 2).unwrap();
    let d = primitivity_defect(&block(1), &e).unwrap();
    let mut expected = BTreeMap::new();
    expected.insert((Word::new(vec![1]), Word::new(vec![2])), f.one());
    expected.insert((Word::new(vec![2]), Word::new(vec![1])), f.one());
    expected.insert((Word::new(vec![1]), Word::new(vec![1])), f.one());
    assert_eq!(d.into_terms(), expected);
}

#[test]
fn derivation_unfolds() {
    let f = field();
    let t = standard_triple(&f.integer(-1)).unwrap();
    let g = t.group().clone();
    let (mut chi, mut eta) = (f.one(), f.zero());
    for k in 1..=6i64 {
        // η(g^k) = χ(g)η(g^{k−1}) + η(g)χ(g^{k−1})
        eta = &(&f.integer(-1) * &eta) + &chi;
        chi = &chi * &f.integer(-1);
        let gk = g.pow(t.g(), k);
        assert_eq!(t.eta_at(&gk), eta);
        let sign = if k % 2 == 1 { 1 } else { -1 };
        assert_eq!(t.eta_at(&gk), f.integer(k * sign));
    }
    assert_eq!(t.eta_at(&g.pow(t.g(), 2)), f.integer(-2));
}

#[test]
fn transport_by_inversion() {
    let f = field();
    let t = standard_triple(&f.one()).unwrap();
    let z = t.group().clone();
    let inv = GroupHom::new(&z, vec![z.element(vec![-1]).unwrap()]).unwrap();
    let moved = transport_triple(&t, &inv).unwrap();
    for k in -4..=4 {
        // η'(g^k) = η(f⁻¹(g^k)) = η(g^{−k}) = −k
        assert_eq!(moved.eta_at(&z.element(vec![k]).unwrap()), f.integer(-k));
    }
    assert_eq!(moved.eta_at(moved.g()), f.one());
}

#[test]
fn classify_rescales_x1() {
    let f = field();
    let z = FGAbelianGroup::free(1);
    let a = Matrix::from_rows(f, vec![vec![f.one(), f.integer(5)], vec![f.zero(), f.one()]]);
    let module = Dim2Module { group: z.clone(), degree: z.generator(0), actions: vec![a.clone()] };
    let Dim2Class::Block { data, basis } = classify_dim2(&module).unwrap() else { panic!("expected a block") };
    assert_eq!(data.eta.values()[0], f.one());
    // P = diag(5, 1): P⁻¹ A P = [[1,1],[0,1]]
    let p = Matrix::from_rows(f, vec![vec![basis[0][0].clone(), basis[1][0].clone()], vec![basis[0][1].clone(), basis[1][1].clone()]]);
    assert_eq!(matrix_rows(&p), vec![vec![f.integer(5), f.zero()], vec![f.zero(), f.one()]]);
    let pinv = Matrix::from_rows(f, vec![vec![f.fraction(1, 5), f.zero()], vec![f.zero(), f.one()]]);
    assert_eq!(matrix_rows(&pinv.mul(&a).mul(&p)), vec![vec![f.one(), f.one()], vec![f.zero(), f.one()]]);
}

/// Elements Σ c x1^e g^k (e ≤ 1) of U(D, λ) for the super Jordanian triple,
/// multiplied with g x1 = −x1 g and x1² = λ(1 − g²).
fn tiny_product(a: &BTreeMap<(u8, i64), Scalar>, b: &BTreeMap<(u8, i64), Scalar>, lambda: &Scalar) -> BTreeMap<(u8, i64), Scalar> {
    let f = field();
    let mut out: BTreeMap<(u8, i64), Scalar> = BTreeMap::new();
    let mut add = |key: (u8, i64), c: Scalar| {
        let slot = out.entry(key).or_insert_with(|| f.zero());
        *slot = &*slot + &c;
    };
    for (&(e1, k1), c1) in a {
        for (&(e2, k2), c2) in b {
            let sign = if e2 == 1 && k1.rem_euclid(2) == 1 { f.integer(-1) } else { f.one() };
            let c = &(c1 * c2) * &sign;
            if e1 + e2 == 2 {
                add((0, k1 + k2), &c * lambda);
                add((0, k1 + k2 + 2), -&(&c * lambda));
            } else {
                add((e1 + e2, k1 + k2), c);
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

#[test]
fn zero_divisors_by_hand() {
    let f = field();
    let t = standard_triple(&f.integer(-1)).unwrap();
    for (lambda, root) in [(1, 1), (4, 2)] {
        let (l, s) = (f.integer(lambda), f.integer(root));
        let a = BTreeMap::from([((0, 1), s.clone()), ((0, 0), -&s), ((1, 0), f.one())]);
        let b = BTreeMap::from([((0, 1), s.clone()), ((0, 0), s.clone()), ((1, 0), f.one())]);
        assert!(tiny_product(&a, &b, &l).is_empty());
        let p = build_lifting_to(&t, &l, 3).unwrap();
        assert!(zero_divisor_witness(&p, &s).unwrap().is_zero());
    }
}

#[test]
fn one_dim_rep_by_hand() {
    // the group-free relation x2x1 − x1x2 + ½x1² − λ at x1 = x2 = 1, λ = 1
    let f = field();
    let t = standard_triple(&f.one()).unwrap();
    let p = build_lifting_to(&t, &f.one(), 3).unwrap();
    assert_eq!(jordan_lift::lifting::one_dim_rep(&p, &f.one(), &f.one()), vec![f.fraction(-1, 2)]);
}
