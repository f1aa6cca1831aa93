//! Deciding U(D, λ) ≅ U(D', λ') over Z.

use jordan_lift::lifting::{build_lifting_to, iso_classify};
use jordan_lift::scalar::CyclotomicField;
use jordan_lift::ydcat::{standard_triple, transport_triple, GroupHom};

fn main() {
    let f = CyclotomicField::new(12).unwrap();
    let t = standard_triple(&f.one()).unwrap();
    let z = t.group().clone();
    let inv = GroupHom::new(&z, vec![z.element(vec![-1]).unwrap()]).unwrap();
    let tf = transport_triple(&t, &inv).unwrap();
    let lift = |t, l| build_lifting_to(t, &f.integer(l), 3).unwrap();
    for (name, p, q) in [
        ("(D,1) vs (D,4)", lift(&t, 1), lift(&t, 4)),
        ("(D,0) vs (D,1)", lift(&t, 0), lift(&t, 1)),
        ("(D,1) vs (D^f,7)", lift(&t, 1), lift(&tf, 7)),
    ] {
        println!("{name}:");
        for line in iso_classify(&p, &q).unwrap().to_string().lines() {
            println!("  {line}");
        }
    }
}
