//! YD-triples over abelian groups: validation, evaluation, the braiding
//! they realize, classification of 2-dimensional modules and transport.

use jordan_lift::braided::make_block;
use jordan_lift::scalar::{CyclotomicField, Matrix};
use jordan_lift::ydcat::{
    classify_dim2, realize_braiding, standard_triple, transport_triple, validate_yd_triple, Character, Derivation,
    Dim2Class, Dim2Module, FGAbelianGroup, GroupHom, YdData,
};

fn main() {
    let f = CyclotomicField::new(12).unwrap();
    let sup = standard_triple(&f.integer(-1)).unwrap();
    let group = sup.group().clone();
    for k in 1..=6 {
        let gk = group.pow(sup.g(), k);
        println!("eta(g^{k}) = {}", sup.eta_at(&gk));
    }
    println!("realizes V(-1,2): {}", realize_braiding(&sup) == make_block(&f.integer(-1), 2).unwrap());

    // Z × Z/2 with eta nonzero on the torsion generator
    let g2 = FGAbelianGroup::new(1, vec![2]).unwrap();
    let bad = YdData {
        group: g2.clone(),
        g: g2.generator(0),
        chi: Character::new(vec![f.one(), f.one()]),
        eta: Derivation::new(vec![f.one(), f.one()]),
    };
    for v in validate_yd_triple(&bad) {
        println!("violation: {v}");
    }

    let z = FGAbelianGroup::free(1);
    let module = Dim2Module {
        group: z.clone(),
        degree: z.generator(0),
        actions: vec![Matrix::from_rows(f, vec![vec![f.one(), f.integer(5)], vec![f.zero(), f.one()]])],
    };
    if let Dim2Class::Block { data, basis } = classify_dim2(&module).unwrap() {
        println!("block with eta(g) = {}, new x1 = {:?}", data.eta.values()[0], basis[0].iter().map(ToString::to_string).collect::<Vec<_>>());
    }

    let jordan = standard_triple(&f.one()).unwrap();
    let inv = GroupHom::new(&z, vec![z.element(vec![-1]).unwrap()]).unwrap();
    let moved = transport_triple(&jordan, &inv).unwrap();
    println!("transported: g' = {}, eta'(g) = {}, eta'(g') = {}", moved.g(), moved.eta_at(&z.generator(0)), moved.eta_at(moved.g()));
}
