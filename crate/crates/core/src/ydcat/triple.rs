use std::fmt;

use thiserror::Error;

use super::group::{FGAbelianGroup, GroupElem};
use crate::braided::{BraidError, BraidedVectorSpace};
use crate::scalar::{CyclotomicField, Scalar};

/// A character given by its values on the generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    values: Vec<Scalar>,
}

impl Character {
    pub fn new(values: Vec<Scalar>) -> Self {
        Character { values }
    }

    pub fn trivial(field: CyclotomicField, group: &FGAbelianGroup) -> Self {
        Character { values: vec![field.one(); group.num_generators()] }
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    /// χ(h) = Π χ(h_i)^{e_i}.
    ///
    /// # Panics
    /// If a generator with nonzero exponent has value 0.
    pub fn eval(&self, h: &GroupElem) -> Scalar {
        let field = self.values[0].field();
        let mut acc = field.one();
        for (v, &e) in self.values.iter().zip(h.coords()) {
            if e != 0 {
                acc = &acc * &v.pow(e).expect("character values are nonzero");
            }
        }
        acc
    }
}

/// A (χ,χ)-derivation given by its values on the generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    values: Vec<Scalar>,
}

impl Derivation {
    pub fn new(values: Vec<Scalar>) -> Self {
        Derivation { values }
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    /// Extends the generator values by η(ab) = χ(a)η(b) + η(a)χ(b), using
    /// η(h^k) = k χ(h)^{k−1} η(h) for each generator power.
    pub fn eval(&self, chi: &Character, h: &GroupElem) -> Scalar {
        let field = self.values[0].field();
        let mut chi_acc = field.one();
        let mut eta_acc = field.zero();
        for ((eta_i, chi_i), &k) in self.values.iter().zip(chi.values()).zip(h.coords()) {
            if k == 0 {
                continue;
            }
            let chi_pow = chi_i.pow(k).expect("character values are nonzero");
            let eta_pow = &(&field.integer(k) * &chi_i.pow(k - 1).expect("nonzero")) * eta_i;
            eta_acc = &(&chi_acc * &eta_pow) + &(&eta_acc * &chi_pow);
            chi_acc = &chi_acc * &chi_pow;
        }
        eta_acc
    }
}

/// A candidate (g, χ, η); not yet checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YdData {
    pub group: FGAbelianGroup,
    pub g: GroupElem,
    pub chi: Character,
    pub eta: Derivation,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Violation {
    #[error("expected {expected} values for {what}, got {got}")]
    WrongLength { what: &'static str, expected: usize, got: usize },
    #[error("g has {got} coordinates, the group has {expected} generators")]
    BadDegree { expected: usize, got: usize },
    #[error("character value on h{generator} is zero")]
    ZeroCharacter { generator: usize },
    #[error("character value {value} on h{generator} is not an {order}-th root of unity")]
    CharacterTorsion { generator: usize, order: u32, value: String },
    #[error("derivation must vanish on torsion generator h{generator}, got {value}")]
    DerivationOnTorsion { generator: usize, value: String },
    #[error("eta(g) must be 1, got {value}")]
    EtaNotNormalized { value: String },
    #[error("chi(g) = {value} is not 1 or -1; not a (super) Jordanian triple")]
    EpsNotSign { value: String },
    #[error("g has finite order {order}; g^2 acts on x2 by x2 + 2 eps x1, so g has infinite order")]
    FiniteOrder { order: u64 },
}

/// Jordanian when χ(g) = 1, super Jordanian when χ(g) = −1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TripleKind {
    Jordanian,
    SuperJordanian,
}

impl fmt::Display for TripleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TripleKind::Jordanian => write!(f, "jordanian"),
            TripleKind::SuperJordanian => write!(f, "super-jordanian"),
        }
    }
}

/// Compatibility conditions of a YD-pair/triple that hold automatically
/// over an abelian group, reported alongside validation.
pub const AUTOMATIC_CONDITIONS: [&str; 2] =
    ["g is central (abelian group)", "eta is conjugation invariant (abelian group)"];

/// Lists every violated constraint; empty means the candidate is a valid
/// (super) Jordanian triple.
pub fn validate_yd_triple(data: &YdData) -> Vec<Violation> {
    let group = &data.group;
    let n = group.num_generators();
    let mut out = Vec::new();
    if data.chi.values.len() != n {
        out.push(Violation::WrongLength { what: "chi", expected: n, got: data.chi.values.len() });
    }
    if data.eta.values.len() != n {
        out.push(Violation::WrongLength { what: "eta", expected: n, got: data.eta.values.len() });
    }
    if data.g.coords().len() != n {
        out.push(Violation::BadDegree { expected: n, got: data.g.coords().len() });
    }
    if n == 0 {
        out.push(Violation::FiniteOrder { order: 1 });
    }
    if !out.is_empty() {
        return out;
    }
    for (i, v) in data.chi.values.iter().enumerate() {
        if v.is_zero() {
            out.push(Violation::ZeroCharacter { generator: i + 1 });
        }
    }
    if !out.is_empty() {
        return out;
    }
    for i in group.free_rank()..n {
        let m = group.generator_order(i).expect("torsion generator");
        let chi = &data.chi.values[i];
        if !chi.pow(m as i64).expect("nonzero").is_one() {
            out.push(Violation::CharacterTorsion { generator: i + 1, order: m, value: chi.to_string() });
        }
        let eta = &data.eta.values[i];
        if !eta.is_zero() {
            out.push(Violation::DerivationOnTorsion { generator: i + 1, value: eta.to_string() });
        }
    }
    let eta_g = data.eta.eval(&data.chi, &data.g);
    if !eta_g.is_one() {
        out.push(Violation::EtaNotNormalized { value: eta_g.to_string() });
    }
    let eps = data.chi.eval(&data.g);
    let field = eps.field();
    if !eps.is_one() && eps != field.integer(-1) {
        out.push(Violation::EpsNotSign { value: eps.to_string() });
    }
    if let Some(order) = group.order(&data.g) {
        out.push(Violation::FiniteOrder { order });
    }
    out
}

/// A validated (super) Jordanian YD-triple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YdTriple {
    data: YdData,
}

impl YdTriple {
    pub fn new(data: YdData) -> Result<Self, Vec<Violation>> {
        let violations = validate_yd_triple(&data);
        if violations.is_empty() {
            Ok(YdTriple { data })
        } else {
            Err(violations)
        }
    }

    pub fn data(&self) -> &YdData {
        &self.data
    }

    pub fn group(&self) -> &FGAbelianGroup {
        &self.data.group
    }

    pub fn g(&self) -> &GroupElem {
        &self.data.g
    }

    pub fn chi(&self) -> &Character {
        &self.data.chi
    }

    pub fn eta(&self) -> &Derivation {
        &self.data.eta
    }

    pub fn field(&self) -> CyclotomicField {
        self.data.chi.values[0].field()
    }

    /// ϵ = χ(g).
    pub fn eps(&self) -> Scalar {
        self.data.chi.eval(&self.data.g)
    }

    pub fn kind(&self) -> TripleKind {
        if self.eps().is_one() {
            TripleKind::Jordanian
        } else {
            TripleKind::SuperJordanian
        }
    }

    pub fn chi_at(&self, h: &GroupElem) -> Scalar {
        self.data.chi.eval(h)
    }

    pub fn eta_at(&self, h: &GroupElem) -> Scalar {
        self.data.eta.eval(&self.data.chi, h)
    }

    /// True when χ(h)² = 1 for every h.
    pub fn chi_squared_trivial(&self) -> bool {
        self.data.chi.values.iter().all(|v| (v * v).is_one())
    }
}

/// The standard triple over ℤ = ⟨g⟩ with χ(g) = eps and η(g) = 1.
pub fn standard_triple(eps: &Scalar) -> Result<YdTriple, Vec<Violation>> {
    let field = eps.field();
    let group = FGAbelianGroup::free(1);
    YdTriple::new(YdData {
        g: group.generator(0),
        group,
        chi: Character::new(vec![eps.clone()]),
        eta: Derivation::new(vec![field.one()]),
    })
}

/// c(x_i⊗x_j) = (g·x_j)⊗x_i on V_g(χ, η), where g·x1 = χ(g)x1 and
/// g·x2 = χ(g)x2 + η(g)x1. Equals the block 𝒱(χ(g), 2).
pub fn realize_braiding(t: &YdTriple) -> BraidedVectorSpace {
    realize_braiding_permissive(t.data()).expect("a valid triple yields a braiding")
}

/// Like [`realize_braiding`] for unchecked data; η(g) = 0 gives a diagonal braiding.
pub fn realize_braiding_permissive(data: &YdData) -> Result<BraidedVectorSpace, BraidError> {
    let eps = data.chi.eval(&data.g);
    let eta = data.eta.eval(&data.chi, &data.g);
    let field = eps.field();
    let mut coeffs = vec![field.zero(); 16];
    let idx = |i: usize, j: usize, k: usize, l: usize| (((i - 1) * 2 + (j - 1)) * 2 + (k - 1)) * 2 + (l - 1);
    for i in 1..=2 {
        coeffs[idx(i, 1, 1, i)] = eps.clone();
        coeffs[idx(i, 2, 2, i)] = eps.clone();
        coeffs[idx(i, 2, 1, i)] = eta.clone();
    }
    BraidedVectorSpace::from_tensor(field, 2, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braided::make_block;

    fn f() -> CyclotomicField {
        CyclotomicField::new(12).unwrap()
    }

    #[test]
    fn derivation_rule_on_powers() {
        let f = f();
        let t = standard_triple(&f.integer(-1)).unwrap();
        let group = t.group().clone();
        let g = group.generator(0);
        assert_eq!(t.eta_at(&group.pow(&g, 2)), f.integer(-2));
        for k in -6i64..=6 {
            let expected = f.integer(k) * f.integer(-1).pow(k - 1).unwrap();
            assert_eq!(t.eta_at(&group.pow(&g, k)), expected, "k = {k}");
        }
        assert!(t.eta_at(&group.identity()).is_zero());
        assert!(t.chi_at(&group.identity()).is_one());
    }

    #[test]
    fn validation() {
        let f = f();
        assert!(standard_triple(&f.one()).is_ok());
        let err = standard_triple(&f.zeta_pow(4)).unwrap_err();
        assert!(matches!(err.as_slice(), [Violation::EpsNotSign { .. }]));

        let group = FGAbelianGroup::new(1, vec![2]).unwrap();
        let data = YdData {
            g: group.generator(0),
            group: group.clone(),
            chi: Character::new(vec![f.one(), f.integer(-1)]),
            eta: Derivation::new(vec![f.one(), f.one()]),
        };
        let v = validate_yd_triple(&data);
        assert!(v.contains(&Violation::DerivationOnTorsion { generator: 2, value: "1".into() }));

        let z4 = FGAbelianGroup::new(0, vec![4]).unwrap();
        let finite = YdData {
            g: z4.generator(0),
            group: z4,
            chi: Character::new(vec![f.one()]),
            eta: Derivation::new(vec![f.one()]),
        };
        assert!(validate_yd_triple(&finite).contains(&Violation::FiniteOrder { order: 4 }));
    }

    #[test]
    fn realization_is_the_block() {
        let f = f();
        for eps in [f.one(), f.integer(-1)] {
            let t = standard_triple(&eps).unwrap();
            assert_eq!(realize_braiding(&t), make_block(&eps, 2).unwrap());
        }
        let group = FGAbelianGroup::free(1);
        let diagonal = YdData {
            g: group.generator(0),
            group,
            chi: Character::new(vec![f.integer(-1)]),
            eta: Derivation::new(vec![f.zero()]),
        };
        let v = realize_braiding_permissive(&diagonal).unwrap();
        assert!(v.coeff(2, 2, 1, 2).is_zero());
        assert_eq!(*v.coeff(1, 2, 2, 1), f.integer(-1));
    }
}
