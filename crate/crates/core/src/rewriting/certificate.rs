use std::collections::BTreeMap;

use num_traits::Zero;

use super::RelationTag;
use crate::algebra::{Polynomial, Rational, Word};

/// One summand `coeff * left * relation * right` of a certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertSummand {
    pub coeff: Rational,
    pub left: Word,
    pub tag: RelationTag,
    pub right: Word,
}

impl CertSummand {
    /// Left cofactor as a polynomial (coefficient folded in).
    pub fn left_poly(&self) -> Polynomial {
        Polynomial::monomial(self.coeff.clone(), self.left.clone())
    }

    pub fn right_poly(&self) -> Polynomial {
        Polynomial::word(self.right.clone())
    }
}

/// An ideal member written as `Σ left · relation · right`, with cofactors
/// expanded into words and like summands merged.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Certificate {
    terms: BTreeMap<(RelationTag, Word, Word), Rational>,
}

impl Certificate {
    pub fn new() -> Self {
        Certificate::default()
    }

    pub fn single(tag: RelationTag) -> Self {
        let mut c = Certificate::new();
        c.add(Rational::from_integer(1.into()), Word::one(), tag, Word::one());
        c
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn add(&mut self, coeff: Rational, left: Word, tag: RelationTag, right: Word) {
        if coeff.is_zero() {
            return;
        }
        let key = (tag, left, right);
        let e = self.terms.entry(key.clone()).or_insert_with(Rational::zero);
        *e += coeff;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// `self += c * left * other * right`
    pub fn add_sandwiched(&mut self, c: &Rational, left: &Word, other: &Certificate, right: &Word) {
        for ((tag, l, r), d) in &other.terms {
            self.add(
                c * d,
                left.concat(l),
                *tag,
                r.concat(right),
            );
        }
    }

    pub fn add_scaled(&mut self, c: &Rational, other: &Certificate) {
        self.add_sandwiched(c, &Word::one(), other, &Word::one());
    }

    pub fn scale(&self, c: &Rational) -> Certificate {
        let mut out = Certificate::new();
        out.add_scaled(c, self);
        out
    }

    pub fn summands(&self) -> impl Iterator<Item = CertSummand> + '_ {
        self.terms.iter().map(|((tag, left, right), c)| CertSummand {
            coeff: c.clone(),
            left: left.clone(),
            tag: *tag,
            right: right.clone(),
        })
    }

    pub fn tags(&self) -> impl Iterator<Item = RelationTag> + '_ {
        self.terms.keys().map(|(t, _, _)| *t)
    }

    /// Evaluates `Σ coeff · left · relation · right` in the free algebra.
    pub fn replay<'a>(&self, relation: impl Fn(&RelationTag) -> Option<&'a Polynomial>) -> Option<Polynomial> {
        let mut out = Polynomial::zero();
        for ((tag, left, right), c) in &self.terms {
            out.add_sandwiched(c, left, relation(tag)?, right);
        }
        Some(out)
    }
}
