use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{Alphabet, Polynomial};
use crate::{Error, Result};

/// Provenance of a relation or rewrite rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum RelationTag {
    /// Row orthogonality `Σ_j u_ij u_kj - δ_ik`.
    R(usize, usize),
    /// Column orthogonality `Σ_j u_ji u_jk - δ_ik`.
    L(usize, usize),
    /// The `k`-th relation of a user presentation.
    Input(usize),
    /// A polynomial produced during completion.
    Derived(usize),
}

impl RelationTag {
    pub fn is_original(&self) -> bool {
        !matches!(self, RelationTag::Derived(_))
    }
}

impl fmt::Display for RelationTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RelationTag::R(i, k) => write!(f, "R({i},{k})"),
            RelationTag::L(i, k) => write!(f, "L({i},{k})"),
            RelationTag::Input(k) => write!(f, "I{k}"),
            RelationTag::Derived(k) => write!(f, "D{k}"),
        }
    }
}

impl FromStr for RelationTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Format(format!("bad relation tag `{s}`"));
        let pair = |body: &str| -> Result<(usize, usize)> {
            let body = body.strip_prefix('(').and_then(|b| b.strip_suffix(')')).ok_or_else(bad)?;
            let (a, b) = body.split_once(',').ok_or_else(bad)?;
            Ok((a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?))
        };
        if let Some(rest) = s.strip_prefix('R') {
            let (i, k) = pair(rest)?;
            Ok(RelationTag::R(i, k))
        } else if let Some(rest) = s.strip_prefix('L') {
            let (i, k) = pair(rest)?;
            Ok(RelationTag::L(i, k))
        } else if let Some(rest) = s.strip_prefix('I') {
            Ok(RelationTag::Input(rest.parse().map_err(|_| bad())?))
        } else if let Some(rest) = s.strip_prefix('D') {
            Ok(RelationTag::Derived(rest.parse().map_err(|_| bad())?))
        } else {
            Err(bad())
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub poly: Polynomial,
    pub tag: RelationTag,
}

/// The `2n²` defining relations `R(i,k)` then `L(i,k)`, each family in
/// row-major order of `(i, k)`.
pub fn ao_relations(alphabet: &Alphabet) -> Result<Vec<Relation>> {
    let n = alphabet.matrix_dim().ok_or(Error::NotMatrixAlphabet)?;
    if n == 0 {
        return Err(Error::ZeroDimension);
    }
    let u = |i, j| Polynomial::generator(alphabet.u(i, j));
    let delta = |i: usize, k: usize| Polynomial::from_int(i64::from(i == k));
    let mut out = Vec::with_capacity(2 * n * n);
    for i in 1..=n {
        for k in 1..=n {
            let mut p = -&delta(i, k);
            for j in 1..=n {
                p = &p + &(&u(i, j) * &u(k, j));
            }
            out.push(Relation { poly: p, tag: RelationTag::R(i, k) });
        }
    }
    for i in 1..=n {
        for k in 1..=n {
            let mut p = -&delta(i, k);
            for j in 1..=n {
                p = &p + &(&u(j, i) * &u(j, k));
            }
            out.push(Relation { poly: p, tag: RelationTag::L(i, k) });
        }
    }
    Ok(out)
}

/// Tags the relations of a user presentation `I0, I1, ...`.
pub fn input_relations(polys: &[Polynomial]) -> Vec<Relation> {
    polys
        .iter()
        .enumerate()
        .map(|(k, p)| Relation { poly: p.clone(), tag: RelationTag::Input(k) })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Hopf;
    use num_traits::Zero;

    #[test]
    fn relation_counts_and_counit() {
        assert!(matches!(ao_relations(&Alphabet::matrix(0)), Err(Error::ZeroDimension)));
        for n in 1..=4 {
            let a = Alphabet::matrix(n);
            let h = Hopf::new(&a).unwrap();
            let rels = ao_relations(&a).unwrap();
            assert_eq!(rels.len(), 2 * n * n);
            assert!(rels.iter().all(|r| h.counit(&r.poly).is_zero()));
        }
    }

    #[test]
    fn small_relations() {
        let a = Alphabet::matrix(1);
        let rels = ao_relations(&a).unwrap();
        let expected = Polynomial::parse("u11*u11 - 1", &a).unwrap();
        assert_eq!(rels[0].poly, expected);
        assert_eq!(rels[1].poly, expected);

        let a = Alphabet::matrix(2);
        let rels = ao_relations(&a).unwrap();
        let r12 = rels.iter().find(|r| r.tag == RelationTag::R(1, 2)).unwrap();
        assert_eq!(r12.poly, Polynomial::parse("u11*u21 + u12*u22", &a).unwrap());
    }

    #[test]
    fn tag_text_roundtrip() {
        for t in [RelationTag::R(1, 2), RelationTag::L(3, 1), RelationTag::Input(4), RelationTag::Derived(17)] {
            assert_eq!(t.to_string().parse::<RelationTag>().unwrap(), t);
        }
        assert!("Q1".parse::<RelationTag>().is_err());
    }
}
