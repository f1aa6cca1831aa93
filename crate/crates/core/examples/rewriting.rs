//! Completion of the plane presentations, normal forms, Hilbert functions
//! and the text format of a rewriting system.

use jordan_lift::freealg::parse_free;
use jordan_lift::rewrite::{complete_free, MonomialOrder, RewriteSystem};
use jordan_lift::scalar::CyclotomicField;
use jordan_lift::smash::SmashAlgebra;

fn main() {
    let f = CyclotomicField::new(12).unwrap();
    let jordan = complete_free(f, 2, &[parse_free("x2 x1 - x1 x2 + 1/2 x1 x1", f, 2).unwrap()], MonomialOrder::deglex(2), 8).unwrap();
    print!("{}", jordan.to_text());
    println!("nf(x2 x2 x1) = {}", jordan.normal_form_free(&parse_free("x2 x2 x1", f, 2).unwrap()).unwrap());
    println!("hilbert: {:?}", jordan.hilbert_function(6));

    let rels = [parse_free("x1 x1", f, 2).unwrap(), parse_free("x2 x2 x1 - x1 x2 x2 - x1 x2 x1", f, 2).unwrap()];
    let sup = complete_free(f, 2, &rels, MonomialOrder::deglex(2), 8).unwrap();
    println!("super jordan: {} rules, hilbert {:?}", sup.rules().len(), sup.hilbert_function(8));
    let words: Vec<String> = sup.irreducible_words(3).iter().map(ToString::to_string).collect();
    println!("irreducible words of degree 3: {}", words.join(", "));

    let back = RewriteSystem::from_text(SmashAlgebra::free(f, 2), &sup.to_text()).unwrap();
    println!("text round trip: {}", back.to_text() == sup.to_text());

    let free = complete_free(f, 2, &[], MonomialOrder::deglex(2), 3).unwrap();
    println!("free algebra: {:?}", free.hilbert_function(3));
}
