use super::{FreeAlgError, FreeElement, Word};
use crate::braided::BraidedVectorSpace;

/// σ_i = id^⊗(i−1) ⊗ c ⊗ id^⊗(n−i−1) applied to every word (1-based i).
///
/// # Panics
/// If some word is shorter than i + 1.
pub fn apply_sigma(space: &BraidedVectorSpace, i: usize, v: &FreeElement) -> FreeElement {
    let mut out = FreeElement::zero(v.field());
    for (w, c) in v.iter() {
        let letters = w.letters();
        assert!(i >= 1 && i < letters.len(), "σ_{i} needs at least {} letters", i + 1);
        for (k, l, coeff) in space.image(letters[i - 1], letters[i]) {
            let mut next = letters.to_vec();
            next[i - 1] = *k;
            next[i] = *l;
            out.add_term(Word::new(next), c * coeff);
        }
    }
    out
}

/// A reduced word for the permutation s_{w1} s_{w2} ⋯ s_{wk} of n letters.
pub fn reduced_word(n: usize, word: &[usize]) -> Result<Vec<usize>, FreeAlgError> {
    let mut perm: Vec<usize> = (0..n).collect();
    // p = s_{w1} ∘ ⋯ ∘ s_{wk}; composing with s_i on the right swaps entries i, i+1
    for &i in word.iter().rev() {
        if i == 0 || i >= n {
            return Err(FreeAlgError::GeneratorOutOfRange { index: i, n });
        }
        perm.swap(i - 1, i);
    }
    let mut peeled = Vec::new();
    while let Some(i) = (0..n.saturating_sub(1)).find(|&i| perm[i] > perm[i + 1]) {
        perm.swap(i, i + 1);
        peeled.push(i + 1);
    }
    peeled.reverse();
    Ok(peeled)
}

/// The Matsumoto lift of the permutation given by `word` (any word in the
/// generators s_1..s_{n−1}) applied to `v ∈ V^⊗n`.
pub fn braid_word_action(
    space: &BraidedVectorSpace,
    n: usize,
    word: &[usize],
    v: &FreeElement,
) -> Result<FreeElement, FreeAlgError> {
    for (w, _) in v.iter() {
        if w.len() != n {
            return Err(FreeAlgError::WrongLength { expected: n, got: w.len() });
        }
        if let Some(&l) = w.letters().iter().find(|&&l| l as usize > space.dim()) {
            return Err(FreeAlgError::LetterOutOfRange { letter: l as usize, dim: space.dim() });
        }
    }
    let reduced = reduced_word(n, word)?;
    let mut out = v.clone();
    for &i in reduced.iter().rev() {
        out = apply_sigma(space, i, &out);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braided::make_block;
    use crate::freealg::word_element;
    use crate::scalar::CyclotomicField;

    #[test]
    fn transposition_on_jordan_block() {
        let f = CyclotomicField::new(12).unwrap();
        let v = make_block(&f.one(), 2).unwrap();
        let out = braid_word_action(&v, 2, &[1], &word_element(f, &[2, 1])).unwrap();
        assert_eq!(out, word_element(f, &[1, 2]));
        let same = braid_word_action(&v, 2, &[], &word_element(f, &[2, 1])).unwrap();
        assert_eq!(same, word_element(f, &[2, 1]));
    }

    #[test]
    fn reduction() {
        assert_eq!(reduced_word(3, &[1, 1]).unwrap(), Vec::<usize>::new());
        assert_eq!(reduced_word(3, &[1, 2, 1]).unwrap().len(), 3);
        assert_eq!(reduced_word(3, &[2, 1, 2, 2, 2]).unwrap().len(), 3);
        assert_eq!(reduced_word(3, &[2]).unwrap(), vec![2]);
        assert!(reduced_word(3, &[3]).is_err());
    }

    #[test]
    fn longest_element_words_agree() {
        let f = CyclotomicField::new(12).unwrap();
        let v = make_block(&f.integer(-1), 2).unwrap();
        for w in Word::all(3, 2) {
            let e = FreeElement::monomial(f, w);
            let a = apply_sigma(&v, 1, &apply_sigma(&v, 2, &apply_sigma(&v, 1, &e)));
            let b = apply_sigma(&v, 2, &apply_sigma(&v, 1, &apply_sigma(&v, 2, &e)));
            assert_eq!(a, b);
            assert_eq!(braid_word_action(&v, 3, &[2, 1, 2], &e).unwrap(), a);
        }
    }
}
