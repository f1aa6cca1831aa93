//! The bosonization T(V)#kZ of a super Jordanian triple: products,
//! coproducts and the coproduct of r.

use jordan_lift::scalar::CyclotomicField;
use jordan_lift::smash::SmashAlgebra;
use jordan_lift::ydcat::standard_triple;

fn main() {
    let f = CyclotomicField::new(12).unwrap();
    let jordan = SmashAlgebra::from_triple(&standard_triple(&f.one()).unwrap());
    println!("jordan: g x2 = {}", jordan.parse("g x2").unwrap());

    let alg = SmashAlgebra::from_triple(&standard_triple(&f.integer(-1)).unwrap());
    println!("super: g x1 = {}", alg.mul(&alg.g_pow(1), &alg.x(1)));
    let r = alg.parse("x2 (x2 x1 + x1 x2) - (x2 x1 + x1 x2) x2 - x1 (x2 x1 + x1 x2)").unwrap();
    println!("r = {r}");
    println!("Δ(r) = {}", alg.coproduct(&r));
    println!("Δ(g^3) = {}", alg.coproduct(&alg.g_pow(3)));
    let e = alg.parse("x2 g^-1 x1 + 3 x1").unwrap();
    println!("counit of {e} is {}", alg.counit(&e));
}
