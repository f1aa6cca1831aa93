//! Exact arithmetic in Q(zeta_12) and exact linear algebra.

use jordan_lift::scalar::{parse_scalar, CyclotomicField, Matrix};

fn main() {
    let f = CyclotomicField::new(12).expect("valid conductor");
    let w = parse_scalar("z^4", 12).unwrap();
    println!("z^4 = {w}, order {:?}", w.is_root_of_unity().unwrap());
    println!("1 + w + w^2 = {}", &(&f.one() + &w) + &(&w * &w));
    let i = f.zeta_pow(3);
    println!("i = {i}, i^2 = {}", i.pow(2).unwrap());

    let m = Matrix::from_rows(
        f,
        vec![vec![f.one(), f.integer(2), f.integer(3)], vec![f.integer(2), f.integer(4), f.integer(6)], vec![f.zero(), f.one(), w.clone()]],
    );
    let (rank, kernel) = m.rank_and_kernel();
    println!("rank = {rank}");
    for v in &kernel {
        let image = m.apply(v);
        println!("kernel vector {:?} maps to zero: {}", v.iter().map(ToString::to_string).collect::<Vec<_>>(), image.iter().all(|x| x.is_zero()));
    }
}
