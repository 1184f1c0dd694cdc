use num_traits::Zero;
use rand::Rng;

use super::module::ModuleVector;
use crate::algebra::{Generator, Polynomial, Rational, Word};

/// A uniformly random word of degree `<= max_degree` over `size` letters
/// (degree first, then letters).
pub fn random_word(rng: &mut impl Rng, size: usize, max_degree: usize) -> Word {
    let degree = rng.random_range(0..=max_degree);
    Word::from_letters((0..degree).map(|_| Generator(rng.random_range(0..size) as u16)).collect::<Vec<_>>())
}

/// `Σ c_w w` over `terms` draws from `words`, coefficients in `{-2..2}`.
pub fn random_element(rng: &mut impl Rng, words: &[Word], terms: usize) -> Polynomial {
    let mut p = Polynomial::zero();
    if words.is_empty() {
        return p;
    }
    for _ in 0..terms {
        let w = &words[rng.random_range(0..words.len())];
        let c = Rational::from_integer(rng.random_range(-2i64..=2).into());
        if !c.is_zero() {
            p.add_term(w.clone(), c);
        }
    }
    p
}

pub fn random_vector(rng: &mut impl Rng, rank: usize, words: &[Word], terms: usize) -> ModuleVector {
    ModuleVector::from_components((0..rank).map(|_| random_element(rng, words, terms)).collect())
}
