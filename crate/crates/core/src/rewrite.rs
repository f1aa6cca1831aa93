//! Degree-truncated Bergman completion over T(V)#kG.
//!
//! Monomials are compared by x-length, then deglex with a configurable
//! letter order, then by group tag. Tails may carry group letters and have
//! lower x-length, so deformed presentations such as U(D, λ) fit as well.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use rand::Rng;
use thiserror::Error;

use crate::freealg::{FreeElement, Word};
use crate::lincomb::LinComb;
use crate::scalar::{CyclotomicField, Scalar};
use crate::smash::{SmashAlgebra, SmashElement, SmashError, SmashMonomial};
use crate::ydcat::GroupElem;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RewriteError {
    #[error("cannot orient {element}: {reason}")]
    Unorientable { element: String, reason: String },
    #[error("x-degree {degree} exceeds the bound {bound}")]
    DegreeExceeded { degree: usize, bound: usize },
    #[error("letter order must be a permutation of 1..={0}")]
    BadOrder(usize),
    #[error("malformed system text at line {line}: {msg}")]
    Format { line: usize, msg: String },
    #[error(transparent)]
    Smash(#[from] SmashError),
}

/// Deglex with a configurable letter order; `letters` lists x-indices from
/// smallest to largest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialOrder {
    letters: Vec<u8>,
    rank: Vec<u8>,
}

impl MonomialOrder {
    /// x1 < x2 < … < x_dim.
    pub fn deglex(dim: usize) -> Self {
        Self::with_letters((1..=dim as u8).collect()).expect("identity permutation")
    }

    pub fn with_letters(letters: Vec<u8>) -> Result<Self, RewriteError> {
        let dim = letters.len();
        let mut rank = vec![u8::MAX; dim];
        for (pos, &l) in letters.iter().enumerate() {
            if l == 0 || l as usize > dim || rank[l as usize - 1] != u8::MAX {
                return Err(RewriteError::BadOrder(dim));
            }
            rank[l as usize - 1] = pos as u8;
        }
        Ok(MonomialOrder { letters, rank })
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn compare_words(&self, a: &Word, b: &Word) -> Ordering {
        a.len().cmp(&b.len()).then_with(|| {
            let ra = a.letters().iter().map(|&l| self.rank[l as usize - 1]);
            let rb = b.letters().iter().map(|&l| self.rank[l as usize - 1]);
            ra.cmp(rb)
        })
    }

    fn key(&self, m: &SmashMonomial) -> SortKey {
        SortKey {
            len: m.word.len(),
            ranked: m.word.letters().iter().map(|&l| self.rank[l as usize - 1]).collect(),
            group: m.group.clone(),
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.letters.iter().map(|l| format!("x{l}")).collect();
        write!(f, "{}", names.join(" < "))
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
struct SortKey {
    len: usize,
    ranked: Vec<u8>,
    group: GroupElem,
}

/// Which ambiguity produced a rule. Indices refer to earlier rules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RuleOrigin {
    Input(usize),
    Overlap { left: usize, right: usize, shift: usize },
    Inclusion { outer: usize, inner: usize, pos: usize },
    GroupStability { rule: usize, generator: i64 },
}

impl fmt::Display for RuleOrigin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleOrigin::Input(i) => write!(f, "input {i}"),
            RuleOrigin::Overlap { left, right, shift } => write!(f, "overlap {left} {right} {shift}"),
            RuleOrigin::Inclusion { outer, inner, pos } => write!(f, "inclusion {outer} {inner} {pos}"),
            RuleOrigin::GroupStability { rule, generator } => write!(f, "group {rule} {generator}"),
        }
    }
}

impl RuleOrigin {
    fn parse(text: &str) -> Option<Self> {
        let parts: Vec<&str> = text.split_whitespace().collect();
        let n = |i: usize| parts.get(i).and_then(|s| s.parse::<usize>().ok());
        match *parts.first()? {
            "input" => Some(RuleOrigin::Input(n(1)?)),
            "overlap" => Some(RuleOrigin::Overlap { left: n(1)?, right: n(2)?, shift: n(3)? }),
            "inclusion" => Some(RuleOrigin::Inclusion { outer: n(1)?, inner: n(2)?, pos: n(3)? }),
            "group" => Some(RuleOrigin::GroupStability { rule: n(1)?, generator: parts.get(2)?.parse().ok()? }),
            _ => None,
        }
    }
}

/// `lhs → rhs`, every rhs term strictly below lhs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteRule {
    pub lhs: Word,
    pub rhs: SmashElement,
    pub origin: RuleOrigin,
}

#[derive(Clone, Debug)]
pub struct RewriteSystem {
    alg: SmashAlgebra,
    rules: Vec<RewriteRule>,
    order: MonomialOrder,
    degree_bound: usize,
    confluent_up_to: usize,
    by_lhs: HashMap<Word, usize>,
    lhs_lengths: BTreeSet<usize>,
}

fn x_degree(e: &SmashElement) -> usize {
    e.keys().map(|m| m.word.len()).max().unwrap_or(0)
}

impl RewriteSystem {
    /// A system with no rules, certified up to `degree_bound`.
    pub fn empty(alg: SmashAlgebra, order: MonomialOrder, degree_bound: usize) -> Self {
        RewriteSystem {
            alg,
            rules: Vec::new(),
            order,
            degree_bound,
            confluent_up_to: degree_bound,
            by_lhs: HashMap::new(),
            lhs_lengths: BTreeSet::new(),
        }
    }

    pub fn algebra(&self) -> &SmashAlgebra {
        &self.alg
    }

    pub fn field(&self) -> CyclotomicField {
        self.alg.field()
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    pub fn confluent_up_to(&self) -> usize {
        self.confluent_up_to
    }

    /// Rules not coming from the input relations.
    pub fn derived_rules(&self) -> impl Iterator<Item = &RewriteRule> {
        self.rules.iter().filter(|r| !matches!(r.origin, RuleOrigin::Input(_)))
    }

    /// Leading monomial of a nonzero element, with an error when the top
    /// x-word occurs with several group tags or has x-length 0.
    pub fn orient(&self, e: &SmashElement) -> Result<(Word, GroupElem, Scalar), RewriteError> {
        let unorientable = |reason: &str| RewriteError::Unorientable { element: e.to_string(), reason: reason.into() };
        let mut best: Option<(&SmashMonomial, &Scalar)> = None;
        let mut tie = false;
        for (m, c) in e.iter() {
            match best {
                None => best = Some((m, c)),
                Some((b, _)) => match self.order.compare_words(&m.word, &b.word) {
                    Ordering::Greater => {
                        best = Some((m, c));
                        tie = false;
                    }
                    Ordering::Equal => tie = true,
                    Ordering::Less => {}
                },
            }
        }
        let (m, c) = best.ok_or_else(|| unorientable("element is zero"))?;
        if tie {
            return Err(unorientable("leading word occurs with several group tags"));
        }
        if m.word.is_empty() {
            return Err(unorientable("relation lies in the group algebra"));
        }
        Ok((m.word.clone(), m.group.clone(), c.clone()))
    }

    fn push_rule(&mut self, e: &SmashElement, origin: RuleOrigin) -> Result<(), RewriteError> {
        let (word, tag, c) = self.orient(e)?;
        let inv_tag = self.alg.grouplike(self.alg.group().inv(&tag));
        let inv_c = c.inv().expect("nonzero leading coefficient");
        let normalized = self.alg.mul(e, &inv_tag).scale(&inv_c);
        let lead = SmashMonomial { word: word.clone(), group: self.alg.group().identity() };
        let mut rhs = -&normalized;
        rhs.remove(&lead);
        debug_assert!(rhs.keys().all(|m| self.order.key(m) < self.order.key(&lead)));
        self.by_lhs.insert(word.clone(), self.rules.len());
        self.lhs_lengths.insert(word.len());
        self.rules.push(RewriteRule { lhs: word, rhs, origin });
        Ok(())
    }

    fn find_redex(&self, w: &Word) -> Option<(usize, usize)> {
        for &len in &self.lhs_lengths {
            if len > w.len() {
                break;
            }
            for pos in 0..=w.len() - len {
                if let Some(&r) = self.by_lhs.get(&w.slice(pos, pos + len)) {
                    return Some((r, pos));
                }
            }
        }
        None
    }

    fn all_redexes(&self, w: &Word) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for &len in &self.lhs_lengths {
            if len > w.len() {
                break;
            }
            for pos in 0..=w.len() - len {
                if let Some(&r) = self.by_lhs.get(&w.slice(pos, pos + len)) {
                    out.push((r, pos));
                }
            }
        }
        out
    }

    /// u · rhs · (v h) for the monomial u lhs v h.
    fn rewrite_at(&self, m: &SmashMonomial, rule: usize, pos: usize) -> SmashElement {
        let r = &self.rules[rule];
        let id = self.alg.group().identity();
        let u = SmashMonomial { word: m.word.slice(0, pos), group: id };
        let v = SmashMonomial { word: m.word.slice(pos + r.lhs.len(), m.word.len()), group: m.group.clone() };
        let field = self.field();
        let left = self.alg.mul(&LinComb::monomial(field, u), &r.rhs);
        self.alg.mul(&left, &LinComb::monomial(field, v))
    }

    fn check_degree(&self, e: &SmashElement) -> Result<(), RewriteError> {
        let degree = x_degree(e);
        if degree > self.degree_bound {
            return Err(RewriteError::DegreeExceeded { degree, bound: self.degree_bound });
        }
        Ok(())
    }

    fn reduce(&self, e: &SmashElement) -> SmashElement {
        let field = self.field();
        let mut work: BTreeMap<SortKey, (SmashMonomial, Scalar)> = BTreeMap::new();
        let push = |work: &mut BTreeMap<SortKey, (SmashMonomial, Scalar)>, m: &SmashMonomial, c: Scalar| {
            let key = self.order.key(m);
            match work.get_mut(&key) {
                Some(entry) => {
                    entry.1 += &c;
                    if entry.1.is_zero() {
                        work.remove(&key);
                    }
                }
                None => {
                    work.insert(key, (m.clone(), c));
                }
            }
        };
        for (m, c) in e.iter() {
            push(&mut work, m, c.clone());
        }
        let mut out = LinComb::zero(field);
        while let Some((_, (m, c))) = work.pop_last() {
            match self.find_redex(&m.word) {
                None => out.add_term(m, c),
                Some((rule, pos)) => {
                    for (m2, c2) in self.rewrite_at(&m, rule, pos).iter() {
                        push(&mut work, m2, &c * c2);
                    }
                }
            }
        }
        out
    }

    /// Reduces by always rewriting the largest reducible term at its
    /// leftmost shortest redex.
    pub fn normal_form(&self, e: &SmashElement) -> Result<SmashElement, RewriteError> {
        self.check_degree(e)?;
        Ok(self.reduce(e))
    }

    /// Reduces by rewriting a random reducible term at a random redex.
    pub fn normal_form_randomized<R: Rng + ?Sized>(&self, e: &SmashElement, rng: &mut R) -> Result<SmashElement, RewriteError> {
        self.check_degree(e)?;
        let mut current = e.clone();
        loop {
            let reducible: Vec<(SmashMonomial, Vec<(usize, usize)>)> = current
                .keys()
                .map(|m| (m.clone(), self.all_redexes(&m.word)))
                .filter(|(_, r)| !r.is_empty())
                .collect();
            if reducible.is_empty() {
                return Ok(current);
            }
            let (m, redexes) = &reducible[rng.gen_range(0..reducible.len())];
            let (rule, pos) = redexes[rng.gen_range(0..redexes.len())];
            let c = current.remove(m).expect("term present");
            current.add_scaled(&self.rewrite_at(m, rule, pos), &c);
        }
    }

    pub fn normal_form_free(&self, e: &FreeElement) -> Result<FreeElement, RewriteError> {
        let nf = self.normal_form(&self.alg.from_free(e))?;
        Ok(LinComb::from_terms(self.field(), nf.iter().map(|(m, c)| (m.word.clone(), c.clone()))))
    }

    pub fn is_irreducible(&self, w: &Word) -> bool {
        self.find_redex(w).is_none()
    }

    /// Irreducible x-words in each degree 0..=n.
    pub fn hilbert_function(&self, n: usize) -> Vec<u64> {
        let mut counts = vec![0u64; n + 1];
        let mut word = Vec::with_capacity(n);
        self.count_from(&mut word, n, &mut counts);
        counts
    }

    /// Irreducible words of length `n`, ascending.
    pub fn irreducible_words(&self, n: usize) -> Vec<Word> {
        let mut out: Vec<Word> = Word::all(n, self.alg.dim()).filter(|w| self.is_irreducible(w)).collect();
        out.sort_by(|a, b| self.order.compare_words(a, b));
        out
    }

    fn count_from(&self, word: &mut Vec<u8>, n: usize, counts: &mut [u64]) {
        counts[word.len()] += 1;
        if word.len() == n {
            return;
        }
        for l in 1..=self.alg.dim() as u8 {
            word.push(l);
            // a prefix-irreducible word stays irreducible unless a suffix becomes a lhs
            let w = Word::new(word.clone());
            let blocked = self
                .lhs_lengths
                .iter()
                .take_while(|&&len| len <= w.len())
                .any(|&len| self.by_lhs.contains_key(&w.slice(w.len() - len, w.len())));
            if !blocked {
                self.count_from(word, n, counts);
            }
            word.pop();
        }
    }

    /// Adds every unresolved ambiguity of x-degree at most `degree_bound` as a
    /// new rule, until all resolve. Returns the number of rules added.
    pub fn complete(&mut self) -> Result<usize, RewriteError> {
        let before = self.rules.len();
        let mut done_pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
        let mut done_group: BTreeSet<usize> = BTreeSet::new();
        loop {
            let mut found: Vec<(SmashElement, RuleOrigin)> = Vec::new();
            let n = self.rules.len();
            for i in 0..n {
                if done_group.insert(i) {
                    found.extend(self.group_ambiguities(i));
                }
                for j in 0..n {
                    if done_pairs.insert((i, j)) {
                        found.extend(self.overlap_ambiguities(i, j));
                    }
                }
            }
            let mut added = false;
            for (s, origin) in found {
                let nf = self.reduce(&s);
                if !nf.is_zero() {
                    self.push_rule(&nf, origin)?;
                    added = true;
                }
            }
            if !added {
                break;
            }
        }
        self.confluent_up_to = self.degree_bound;
        Ok(self.rules.len() - before)
    }

    fn rule_element(&self, i: usize) -> SmashElement {
        let r = &self.rules[i];
        &self.alg.word(r.lhs.letters()) - &r.rhs
    }

    fn group_ambiguities(&self, i: usize) -> Vec<(SmashElement, RuleOrigin)> {
        let group = self.alg.group();
        let e = self.rule_element(i);
        let mut out = Vec::new();
        for k in 0..group.num_generators() {
            let h = group.generator(k);
            let signs: &[i64] = if group.generator_order(k).is_some() { &[1] } else { &[1, -1] };
            for &s in signs {
                let moved = self.alg.conjugate(&group.pow(&h, s), &e);
                out.push((moved, RuleOrigin::GroupStability { rule: i, generator: s * (k as i64 + 1) }));
            }
        }
        out
    }

    fn overlap_ambiguities(&self, i: usize, j: usize) -> Vec<(SmashElement, RuleOrigin)> {
        let (a, b) = (&self.rules[i], &self.rules[j]);
        let (la, lb) = (a.lhs.len(), b.lhs.len());
        let field = self.field();
        let id = self.alg.group().identity();
        let mono = |w: Word| LinComb::monomial(field, SmashMonomial { word: w, group: id.clone() });
        let mut out = Vec::new();
        // a = u·t, b = t·v with t nonempty and u, v nonempty
        for shift in 1..la {
            let overlap = la - shift;
            if overlap >= lb || la + lb - overlap > self.degree_bound {
                continue;
            }
            if a.lhs.slice(shift, la) == b.lhs.slice(0, overlap) {
                let u = mono(a.lhs.slice(0, shift));
                let v = mono(b.lhs.slice(overlap, lb));
                let s = &self.alg.mul(&a.rhs, &v) - &self.alg.mul(&u, &b.rhs);
                out.push((s, RuleOrigin::Overlap { left: i, right: j, shift }));
            }
        }
        if i != j && lb <= la {
            for pos in 0..=la - lb {
                if a.lhs.slice(pos, pos + lb) == b.lhs {
                    let u = mono(a.lhs.slice(0, pos));
                    let v = mono(a.lhs.slice(pos + lb, la));
                    let s = &a.rhs - &self.alg.mul(&self.alg.mul(&u, &b.rhs), &v);
                    out.push((s, RuleOrigin::Inclusion { outer: i, inner: j, pos }));
                }
            }
        }
        out
    }

    /// Text form: header lines, then one `rule` line per rule in order.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("order {}\n", self.order));
        out.push_str(&format!("degree-bound {}\n", self.degree_bound));
        out.push_str(&format!("confluent-up-to {}\n", self.confluent_up_to));
        for r in &self.rules {
            out.push_str(&format!("rule {} -> {} [{}]\n", r.lhs, r.rhs, r.origin));
        }
        out
    }

    /// Reads the output of [`RewriteSystem::to_text`] back over `alg`.
    pub fn from_text(alg: SmashAlgebra, text: &str) -> Result<Self, RewriteError> {
        let bad = |line: usize, msg: &str| RewriteError::Format { line, msg: msg.into() };
        let mut order = MonomialOrder::deglex(alg.dim());
        let mut bound = None;
        let mut confluent = None;
        let mut rules = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (head, rest) = line.split_once(' ').ok_or_else(|| bad(line_no, "expected a keyword and a value"))?;
            match head {
                "order" => {
                    let letters = rest
                        .split('<')
                        .map(|s| s.trim().strip_prefix('x').and_then(|n| n.parse::<u8>().ok()))
                        .collect::<Option<Vec<u8>>>()
                        .ok_or_else(|| bad(line_no, "bad letter order"))?;
                    order = MonomialOrder::with_letters(letters)?;
                }
                "degree-bound" => bound = Some(rest.trim().parse().map_err(|_| bad(line_no, "bad integer"))?),
                "confluent-up-to" => confluent = Some(rest.trim().parse().map_err(|_| bad(line_no, "bad integer"))?),
                "rule" => {
                    let (lhs, tail) = rest.split_once("->").ok_or_else(|| bad(line_no, "missing ->"))?;
                    let (rhs, origin) = tail.rsplit_once('[').ok_or_else(|| bad(line_no, "missing origin"))?;
                    let origin = origin.strip_suffix(']').and_then(RuleOrigin::parse).ok_or_else(|| bad(line_no, "bad origin"))?;
                    let lhs_elem = alg.parse(lhs)?;
                    let lhs = match lhs_elem.iter().next() {
                        Some((m, c)) if lhs_elem.len() == 1 && c.is_one() && alg.group().is_identity(&m.group) => m.word.clone(),
                        _ => return Err(bad(line_no, "lhs must be a word")),
                    };
                    rules.push(RewriteRule { lhs, rhs: alg.parse(rhs)?, origin });
                }
                _ => return Err(bad(line_no, "unknown keyword")),
            }
        }
        let bound = bound.ok_or_else(|| bad(0, "missing degree-bound"))?;
        let mut sys = RewriteSystem::empty(alg, order, bound);
        sys.confluent_up_to = confluent.unwrap_or(0);
        for r in rules {
            sys.by_lhs.insert(r.lhs.clone(), sys.rules.len());
            sys.lhs_lengths.insert(r.lhs.len());
            sys.rules.push(r);
        }
        Ok(sys)
    }
}

/// Orients `relations` and completes up to x-degree `d`.
pub fn complete_to_degree(
    alg: &SmashAlgebra,
    relations: &[SmashElement],
    order: MonomialOrder,
    d: usize,
) -> Result<RewriteSystem, RewriteError> {
    if order.letters().len() != alg.dim() {
        return Err(RewriteError::BadOrder(alg.dim()));
    }
    let mut sys = RewriteSystem::empty(alg.clone(), order, d);
    for (i, rel) in relations.iter().enumerate() {
        sys.check_degree(rel)?;
        let nf = sys.reduce(rel);
        if !nf.is_zero() {
            sys.push_rule(&nf, RuleOrigin::Input(i))?;
        }
    }
    sys.complete()?;
    Ok(sys)
}

/// Completion for relations in the free algebra (trivial group).
pub fn complete_free(
    field: CyclotomicField,
    dim: usize,
    relations: &[FreeElement],
    order: MonomialOrder,
    d: usize,
) -> Result<RewriteSystem, RewriteError> {
    let alg = SmashAlgebra::free(field, dim);
    let rels: Vec<SmashElement> = relations.iter().map(|r| alg.from_free(r)).collect();
    complete_to_degree(&alg, &rels, order, d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::parse_free;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn field() -> CyclotomicField {
        CyclotomicField::new(12).unwrap()
    }

    fn jordan() -> RewriteSystem {
        let f = field();
        let rel = parse_free("x2 x1 - x1 x2 + 1/2 x1 x1", f, 2).unwrap();
        complete_free(f, 2, &[rel], MonomialOrder::deglex(2), 8).unwrap()
    }

    fn super_jordan() -> RewriteSystem {
        let f = field();
        let rels = [
            parse_free("x1 x1", f, 2).unwrap(),
            parse_free("x2 (x2 x1 + x1 x2) - (x2 x1 + x1 x2) x2 - x1 (x2 x1 + x1 x2)", f, 2).unwrap(),
        ];
        complete_free(f, 2, &rels, MonomialOrder::deglex(2), 8).unwrap()
    }

    #[test]
    fn jordan_single_rule() {
        let sys = jordan();
        assert_eq!(sys.rules().len(), 1);
        assert_eq!(sys.rules()[0].rhs.to_string(), "x1 x2 - 1/2·x1 x1");
        let f = field();
        let nf = sys.normal_form_free(&parse_free("x2 x1", f, 2).unwrap()).unwrap();
        assert_eq!(nf, parse_free("x1 x2 - 1/2 x1 x1", f, 2).unwrap());
        assert_eq!(sys.hilbert_function(6), vec![1, 2, 3, 4, 5, 6, 7]);
    }

    #[test]
    fn super_jordan_rules() {
        let sys = super_jordan();
        assert_eq!(sys.derived_rules().count(), 0);
        assert_eq!(sys.hilbert_function(6), vec![1, 2, 3, 4, 5, 6, 7]);
        let f = field();
        assert!(sys.normal_form_free(&parse_free("x1 x1", f, 2).unwrap()).unwrap().is_zero());
        let irreducible = parse_free("x1 x2 x1 x2", f, 2).unwrap();
        assert_eq!(sys.normal_form_free(&irreducible).unwrap(), irreducible);
    }

    #[test]
    fn free_and_errors() {
        let f = field();
        let sys = complete_free(f, 2, &[], MonomialOrder::deglex(2), 3).unwrap();
        assert_eq!(sys.hilbert_function(3), vec![1, 2, 4, 8]);
        let long = parse_free("x1 x1 x1 x1", f, 2).unwrap();
        assert!(matches!(sys.normal_form_free(&long), Err(RewriteError::DegreeExceeded { degree: 4, bound: 3 })));
        assert!(matches!(MonomialOrder::with_letters(vec![1, 1]), Err(RewriteError::BadOrder(2))));
        let scalar = parse_free("1", f, 2).unwrap();
        assert!(matches!(
            complete_free(f, 2, &[scalar], MonomialOrder::deglex(2), 3),
            Err(RewriteError::Unorientable { .. })
        ));
    }

    #[test]
    fn reversed_order_orients_differently() {
        let f = field();
        let rel = parse_free("x2 x1 - x1 x2 + 1/2 x1 x1", f, 2).unwrap();
        let order = MonomialOrder::with_letters(vec![2, 1]).unwrap();
        let sys = complete_free(f, 2, &[rel], order, 5).unwrap();
        assert_eq!(sys.rules()[0].lhs, Word::new(vec![1, 1]));
        assert_eq!(sys.hilbert_function(5), vec![1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn overlap_creates_rule() {
        // x2 x1 → x1 x2 and x1 x1 → x2: the overlap x2 x1 x1 forces more rules
        let f = field();
        let rels = [parse_free("x2 x1 - x1 x2", f, 2).unwrap(), parse_free("x1 x1 - 0", f, 2).unwrap()];
        let sys = complete_free(f, 2, &rels, MonomialOrder::deglex(2), 4).unwrap();
        assert_eq!(sys.derived_rules().count(), 0);
        let rels = [parse_free("x2 x2 - x1 x1", f, 2).unwrap(), parse_free("x2 x1", f, 2).unwrap()];
        let sys = complete_free(f, 2, &rels, MonomialOrder::deglex(2), 4).unwrap();
        assert!(sys.derived_rules().any(|r| matches!(r.origin, RuleOrigin::Overlap { .. })));
    }

    #[test]
    fn randomized_agrees() {
        let sys = super_jordan();
        let f = field();
        let e = parse_free("x2 x2 x1 x1 x2 + 3 x2 x1 x2 x2 x1 - x1 x1 x2", f, 2).unwrap();
        let expected = sys.normal_form_free(&e).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..5 {
            let nf = sys.normal_form_randomized(&sys.algebra().from_free(&e), &mut rng).unwrap();
            assert_eq!(nf, sys.algebra().from_free(&expected));
        }
    }

    #[test]
    fn text_round_trip() {
        let sys = super_jordan();
        let text = sys.to_text();
        assert!(text.starts_with("order x1 < x2\ndegree-bound 8\n"));
        let back = RewriteSystem::from_text(sys.algebra().clone(), &text).unwrap();
        assert_eq!(back.rules(), sys.rules());
        assert_eq!(back.to_text(), text);
    }
}
