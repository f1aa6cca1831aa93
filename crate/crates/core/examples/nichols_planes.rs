//! Graded dimensions and minimal relations of the Jordan and super Jordan
//! planes, and a block of size 3 for comparison.

use jordan_lift::braided::make_block;
use jordan_lift::freealg::SymmetrizerTower;
use jordan_lift::nichols::{nichols_dims, relation_generators_in};
use jordan_lift::scalar::CyclotomicField;

fn main() {
    let f = CyclotomicField::new(12).unwrap();
    for (name, eps) in [("jordan", f.one()), ("super jordan", f.integer(-1))] {
        let space = make_block(&eps, 2).unwrap();
        println!("{name}: dims {}", nichols_dims(&space, 8).unwrap());
        let mut tower = SymmetrizerTower::new(&space);
        for n in 2..=5 {
            for r in relation_generators_in(&mut tower, n).unwrap() {
                println!("  degree {n}: {r}");
            }
        }
    }
    // V(1,3) grows faster than any plane
    println!("V(1,3): dims {}", nichols_dims(&make_block(&f.one(), 3).unwrap(), 4).unwrap());
}
