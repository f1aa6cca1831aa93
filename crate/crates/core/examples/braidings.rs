//! The block braidings V(eps, l), block+point braidings and diagonal ones,
//! each checked against the braid equation.

use jordan_lift::braided::{braid_check, make_block, make_block_point, make_diagonal, BlockPointParams};
use jordan_lift::scalar::CyclotomicField;

fn main() {
    let f = CyclotomicField::new(12).unwrap();
    for (name, eps, ell) in [("V(1,2)", f.one(), 2), ("V(-1,2)", f.integer(-1), 2), ("V(zeta3,2)", f.zeta_pow(4), 2), ("V(1,3)", f.one(), 3)] {
        let v = make_block(&eps, ell).unwrap();
        println!("{name}: braid equation {}", if braid_check(&v).is_ok() { "holds" } else { "fails" });
    }
    let v = make_block(&f.one(), 2).unwrap();
    println!("c(x2 ⊗ x2) has x1 ⊗ x2 coefficient {}", v.coeff(2, 2, 1, 2));

    // the space W' attached to the super Jordan plane and r
    let m = f.integer(-1);
    let params = BlockPointParams { q12: m.clone(), q21: m.clone(), q22: m.clone(), eps: m.clone(), a: f.integer(-3) };
    let w = make_block_point(&params).unwrap();
    println!("W': dim {}, ghost {}, braid equation {}", w.dim(), params.ghost(), braid_check(&w).is_ok());

    let q = vec![vec![f.integer(-1), f.zeta()], vec![f.zeta_pow(-1), f.integer(2)]];
    println!("diagonal: braid equation {}", braid_check(&make_diagonal(&q).unwrap()).is_ok());

    let broken = v.with_coeff(2, 2, 1, 2, f.integer(7));
    match braid_check(&broken) {
        Ok(()) => println!("corrupted block passes?"),
        Err(e) => println!("corrupted block: {e}"),
    }
}
