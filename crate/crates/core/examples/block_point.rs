//! Adjoining a primitive element to a plane gives a block+point braiding;
//! its ghost and the GKdim table decide the growth of the bigger Nichols
//! algebra.

use jordan_lift::freealg::parse_free;
use jordan_lift::nichols::{adjoin_primitive_params, ghost_of, table1_lookup};
use jordan_lift::rewrite::{complete_free, MonomialOrder};
use jordan_lift::scalar::CyclotomicField;
use jordan_lift::ydcat::standard_triple;

fn main() {
    let f = CyclotomicField::new(12).unwrap();
    let jordan = standard_triple(&f.one()).unwrap();
    let sup = standard_triple(&f.integer(-1)).unwrap();
    let x11 = parse_free("x1 x1", f, 2).unwrap();
    let modulo = complete_free(f, 2, std::slice::from_ref(&x11), MonomialOrder::deglex(2), 3).unwrap();
    let r = parse_free("x2 x2 x1 - x1 x2 x2 - x1 x2 x1", f, 2).unwrap();
    let cases = [
        ("y in the Jordan plane", &jordan, parse_free("x2 x1 - x1 x2 + 1/2 x1 x1", f, 2).unwrap(), 2, None),
        ("x1^2 in T(V) for super Jordan", &sup, x11, 2, None),
        ("r modulo x1^2", &sup, r, 3, Some(&modulo)),
    ];
    for (name, t, z, m, sys) in cases {
        let p = adjoin_primitive_params(t, &z, m, sys).unwrap();
        let ghost = ghost_of(&p.eps, &p.a).unwrap();
        let verdict = table1_lookup(&p.q12q21(), &p.eps, &p.q22, &ghost.value).unwrap();
        println!("{name}: q12 = {}, q21 = {}, q22 = {}, a = {}, {ghost}, {verdict}", p.q12, p.q21, p.q22, p.a);
    }
    let one = f.one();
    println!("(1, 1, 1, ghost 2): {}", table1_lookup(&one, &one, &one, &f.integer(2)).unwrap());
}
