use num_traits::{One, Zero};

use super::{Alphabet, Generator, Polynomial, Rational, TensorPolynomial, Word};
use crate::{Error, Result};

/// Counit, antipode and coproduct of `A_o(n)`, computed on free-algebra
/// representatives.
///
/// - `ε(u_ij) = δ_ij`, extended multiplicatively.
/// - `S(u_ij) = u_ji`, extended anti-multiplicatively.
/// - `Δ(u_ij) = Σ_k u_ik ⊗ u_kj`, extended multiplicatively.
#[derive(Clone, Copy, Debug)]
pub struct Hopf<'a> {
    alphabet: &'a Alphabet,
    n: usize,
}

impl<'a> Hopf<'a> {
    pub fn new(alphabet: &'a Alphabet) -> Result<Self> {
        let n = alphabet.matrix_dim().ok_or(Error::NotMatrixAlphabet)?;
        Ok(Hopf { alphabet, n })
    }

    pub fn alphabet(&self) -> &'a Alphabet {
        self.alphabet
    }

    fn entry(&self, g: Generator) -> (usize, usize) {
        self.alphabet.entry(g).expect("matrix alphabet")
    }

    pub fn counit_word(&self, w: &Word) -> Rational {
        let diagonal = w.letters().iter().all(|&g| {
            let (i, j) = self.entry(g);
            i == j
        });
        if diagonal {
            Rational::one()
        } else {
            Rational::zero()
        }
    }

    pub fn counit(&self, p: &Polynomial) -> Rational {
        p.evaluate(|w| self.counit_word(w))
    }

    pub fn antipode_word(&self, w: &Word) -> Word {
        Word::from_letters(
            w.letters()
                .iter()
                .rev()
                .map(|&g| {
                    let (i, j) = self.entry(g);
                    self.alphabet.u(j, i)
                })
                .collect::<Vec<_>>(),
        )
    }

    pub fn antipode(&self, p: &Polynomial) -> Polynomial {
        Polynomial::from_terms(p.terms().map(|(w, c)| (self.antipode_word(w), c.clone())))
    }

    pub fn coproduct_generator(&self, g: Generator) -> TensorPolynomial {
        let (i, j) = self.entry(g);
        let mut t = TensorPolynomial::zero(2);
        for k in 1..=self.n {
            t.add_term(
                vec![Word::letter(self.alphabet.u(i, k)), Word::letter(self.alphabet.u(k, j))],
                Rational::one(),
            );
        }
        t
    }

    pub fn coproduct_word(&self, w: &Word) -> TensorPolynomial {
        w.letters()
            .iter()
            .fold(TensorPolynomial::one(2), |acc, &g| acc.mul(&self.coproduct_generator(g)))
    }

    pub fn coproduct(&self, p: &Polynomial) -> TensorPolynomial {
        let mut out = TensorPolynomial::zero(2);
        for (w, c) in p.terms() {
            out.add_scaled(c, &self.coproduct_word(w));
        }
        out
    }
}
