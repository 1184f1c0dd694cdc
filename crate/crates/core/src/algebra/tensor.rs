use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{Polynomial, Rational, Word};

/// An element of the `k`-fold tensor power of the free algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorPolynomial {
    legs: usize,
    terms: BTreeMap<Vec<Word>, Rational>,
}

impl TensorPolynomial {
    pub fn zero(legs: usize) -> Self {
        TensorPolynomial { legs, terms: BTreeMap::new() }
    }

    /// `1 ⊗ ... ⊗ 1`
    pub fn one(legs: usize) -> Self {
        let mut t = TensorPolynomial::zero(legs);
        t.add_term(vec![Word::one(); legs], Rational::one());
        t
    }

    pub fn pure(factors: &[&Polynomial]) -> Self {
        let mut t = TensorPolynomial::one(0);
        for p in factors {
            t = t.extend_by(p);
        }
        t
    }

    fn extend_by(&self, p: &Polynomial) -> Self {
        let mut out = TensorPolynomial::zero(self.legs + 1);
        for (ws, c) in &self.terms {
            for (w, d) in p.terms() {
                let mut key = ws.clone();
                key.push(w.clone());
                out.add_term(key, c * d);
            }
        }
        out
    }

    pub fn legs(&self) -> usize {
        self.legs
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Word>, &Rational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, words: Vec<Word>, c: Rational) {
        assert_eq!(words.len(), self.legs, "tensor arity mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(words) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, c: &Rational, other: &TensorPolynomial) {
        assert_eq!(self.legs, other.legs, "tensor arity mismatch");
        for (ws, d) in &other.terms {
            self.add_term(ws.clone(), c * d);
        }
    }

    /// Legwise product `(a1 ⊗ a2)(b1 ⊗ b2) = a1 b1 ⊗ a2 b2`.
    pub fn mul(&self, other: &TensorPolynomial) -> TensorPolynomial {
        assert_eq!(self.legs, other.legs, "tensor arity mismatch");
        let mut out = TensorPolynomial::zero(self.legs);
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                let key = a.iter().zip(b).map(|(x, y)| x.concat(y)).collect();
                out.add_term(key, c * d);
            }
        }
        out
    }

    /// Replaces leg `leg` by the image of a linear map into `k` legs,
    /// producing a tensor with `legs - 1 + k` legs.
    pub fn expand_leg(&self, leg: usize, k: usize, f: impl Fn(&Word) -> TensorPolynomial) -> TensorPolynomial {
        let mut out = TensorPolynomial::zero(self.legs - 1 + k);
        for (ws, c) in &self.terms {
            let image = f(&ws[leg]);
            assert_eq!(image.legs, k, "leg map arity mismatch");
            for (inner, d) in &image.terms {
                let mut key = Vec::with_capacity(out.legs);
                key.extend_from_slice(&ws[..leg]);
                key.extend(inner.iter().cloned());
                key.extend_from_slice(&ws[leg + 1..]);
                out.add_term(key, c * d);
            }
        }
        out
    }

    /// Applies a linear map on one leg, leg count unchanged.
    pub fn map_leg(&self, leg: usize, f: impl Fn(&Word) -> Polynomial) -> TensorPolynomial {
        self.expand_leg(leg, 1, |w| TensorPolynomial::pure(&[&f(w)]))
    }

    /// Applies a scalar-valued map to one leg, removing it.
    pub fn contract_leg(&self, leg: usize, f: impl Fn(&Word) -> Rational) -> TensorPolynomial {
        self.expand_leg(leg, 0, |w| {
            let mut t = TensorPolynomial::zero(0);
            t.add_term(Vec::new(), f(w));
            t
        })
    }

    /// Identifies a one-leg tensor with a polynomial.
    pub fn to_polynomial(&self) -> Option<Polynomial> {
        (self.legs == 1).then(|| {
            Polynomial::from_terms(self.terms.iter().map(|(ws, c)| (ws[0].clone(), c.clone())))
        })
    }
}
