//! The liftings U(D, λ): defining relations, skew-primitivity and the
//! bounded-degree PBW check.

use jordan_lift::lifting::{build_lifting_to, hopf_ideal_check, pbw_check};
use jordan_lift::scalar::CyclotomicField;
use jordan_lift::ydcat::standard_triple;

fn main() {
    let f = CyclotomicField::new(12).unwrap();
    for eps in [1, -1] {
        let t = standard_triple(&f.integer(eps)).unwrap();
        for lambda in [0, 1] {
            let p = build_lifting_to(&t, &f.integer(lambda), 6).unwrap();
            println!("{} with lambda = {lambda}", p.case());
            for r in p.relations() {
                println!("  {} = 0", r.element);
            }
            println!("  {}", hopf_ideal_check(&p).unwrap());
            let pbw = pbw_check(&p, 6).unwrap();
            println!("  pbw ok: {}, counts {:?}", pbw.is_ok(), pbw.counts);
        }
    }
}
