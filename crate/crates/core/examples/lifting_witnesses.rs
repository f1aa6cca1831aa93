//! Characters of the liftings and the zero divisors of the super Jordanian
//! ones.

use jordan_lift::lifting::{build_lifting_to, one_dim_rep, zero_divisor_witness};
use jordan_lift::scalar::CyclotomicField;
use jordan_lift::ydcat::standard_triple;

fn main() {
    let f = CyclotomicField::new(12).unwrap();
    let jordan = standard_triple(&f.one()).unwrap();
    let sup = standard_triple(&f.integer(-1)).unwrap();

    // x1 ↦ c, x2 ↦ 1 with c² = 2λ
    let p = build_lifting_to(&jordan, &f.fraction(1, 2), 3).unwrap();
    println!("jordan, lambda 1/2: {:?}", one_dim_rep(&p, &f.one(), &f.one()).iter().map(ToString::to_string).collect::<Vec<_>>());
    let p = build_lifting_to(&jordan, &f.one(), 3).unwrap();
    println!("jordan, lambda 1: {:?}", one_dim_rep(&p, &f.one(), &f.one()).iter().map(ToString::to_string).collect::<Vec<_>>());
    let p = build_lifting_to(&sup, &f.one(), 3).unwrap();
    println!("super, lambda 1: {:?}", one_dim_rep(&p, &f.one(), &f.zero()).iter().map(ToString::to_string).collect::<Vec<_>>());

    for (lambda, root) in [(1, 1), (4, 2), (0, 0)] {
        let p = build_lifting_to(&sup, &f.integer(lambda), 3).unwrap();
        let ab = zero_divisor_witness(&p, &f.integer(root)).unwrap();
        println!("lambda {lambda}: ab = {ab}");
    }
}
