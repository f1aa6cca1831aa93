//! Braid group action on tensor powers, quantum symmetrizers and the
//! braided coproduct of T(V).

use jordan_lift::braided::make_block;
use jordan_lift::freealg::{
    braid_word_action, default_degree_cap, parse_free, primitivity_defect, symmetrizer_matrix,
};
use jordan_lift::scalar::CyclotomicField;

fn main() {
    let f = CyclotomicField::new(12).unwrap();
    let jordan = make_block(&f.one(), 2).unwrap();
    let sup = make_block(&f.integer(-1), 2).unwrap();

    let v = parse_free("x2 x1 x1", f, 2).unwrap();
    let a = braid_word_action(&jordan, 3, &[1, 2, 1], &v).unwrap();
    let b = braid_word_action(&jordan, 3, &[2, 1, 2], &v).unwrap();
    println!("s1 s2 s1 and s2 s1 s2 agree on x2 x1 x1: {}", a == b);

    for (name, space) in [("jordan", &jordan), ("super jordan", &sup)] {
        let ranks: Vec<usize> = (0..=4)
            .map(|n| symmetrizer_matrix(space, n, default_degree_cap(2)).unwrap().rank())
            .collect();
        println!("{name}: rank S_n for n = 0..4: {ranks:?}");
    }

    for (name, space, e) in [("jordan", &jordan, "x2 x1 - x1 x2 + 1/2 x1 x1"), ("super jordan", &sup, "x1 x1"), ("jordan", &jordan, "x1 x2")] {
        let e = parse_free(e, f, 2).unwrap();
        println!("{name}: defect of {e} = {}", primitivity_defect(space, &e).unwrap());
    }
}
