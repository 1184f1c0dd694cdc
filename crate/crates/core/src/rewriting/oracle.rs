use std::collections::HashMap;

use crate::algebra::{Alphabet, Polynomial, Word};
use crate::linalg::{rank, RationalMatrix};
use crate::rewriting::ao_relations;
use crate::{Error, Result};

/// Size cap for dense word enumerations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_words: usize,
}

impl OracleLimits {
    pub const ENV_VAR: &'static str = "AOQ_MAX_WORDS";
    pub const DEFAULT_MAX_WORDS: usize = 50_000;

    /// Reads `AOQ_MAX_WORDS`, falling back to the default.
    pub fn from_env() -> Self {
        let max_words = std::env::var(Self::ENV_VAR)
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(Self::DEFAULT_MAX_WORDS);
        OracleLimits { max_words }
    }

    pub fn check(&self, what: &str, needed: usize) -> Result<()> {
        if needed > self.max_words {
            Err(Error::ResourceLimit { what: what.to_string(), needed, cap: self.max_words })
        } else {
            Ok(())
        }
    }
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits { max_words: Self::DEFAULT_MAX_WORDS }
    }
}

/// Dimension of the image of all words of degree `<= d` in the quotient,
/// computed without rewriting: the number of words minus the rank of
/// `{x · rel · y : deg <= d}` over the word basis.
pub fn filtration_dim_oracle(
    alphabet_size: usize,
    relations: &[Polynomial],
    d: usize,
    limits: OracleLimits,
) -> Result<usize> {
    let mut count = 0usize;
    let mut layer = 1usize;
    for _ in 0..=d {
        count = count.saturating_add(layer);
        layer = layer.saturating_mul(alphabet_size);
    }
    limits.check("filtration oracle", count)?;
    let words = Word::all_up_to(alphabet_size, d);
    let index: HashMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let layers: Vec<Vec<Word>> = (0..=d).map(|k| Word::all_of_degree(alphabet_size, k)).collect();

    let mut rows = Vec::new();
    for rel in relations {
        let Some(r) = rel.degree() else { continue };
        if r > d {
            continue;
        }
        for total in 0..=d - r {
            for xlen in 0..=total {
                for x in &layers[xlen] {
                    for y in &layers[total - xlen] {
                        rows.push(rel.sandwich(x, y));
                    }
                }
            }
        }
    }
    let mut m = RationalMatrix::zeros(rows.len(), words.len());
    for (i, p) in rows.iter().enumerate() {
        for (w, c) in p.terms() {
            m.set(i, index[w], c.clone());
        }
    }
    Ok(words.len() - rank(&m))
}

pub fn ao_filtration_dim_oracle(n: usize, d: usize, limits: OracleLimits) -> Result<usize> {
    let a = Alphabet::matrix(n);
    let rels: Vec<Polynomial> = ao_relations(&a)?.into_iter().map(|r| r.poly).collect();
    filtration_dim_oracle(a.len(), &rels, d, limits)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        let lim = OracleLimits::default();
        assert_eq!(ao_filtration_dim_oracle(1, 5, lim).unwrap(), 2);
        for n in 1..=3 {
            assert_eq!(ao_filtration_dim_oracle(n, 1, lim).unwrap(), 1 + n * n);
        }
    }

    #[test]
    fn resource_cap() {
        let lim = OracleLimits { max_words: 100 };
        assert!(matches!(ao_filtration_dim_oracle(3, 3, lim), Err(Error::ResourceLimit { .. })));
    }
}
