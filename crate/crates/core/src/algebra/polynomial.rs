use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{format_rational, Alphabet, Generator, Word};

pub type Rational = BigRational;

/// A finitely supported rational combination of words.
///
/// Terms are kept in a `BTreeMap` keyed by the monomial order, so iteration
/// is ascending and the leading term is the last entry. Zero coefficients are
/// never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Word, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::monomial(c, Word::one())
    }

    pub fn from_int(c: i64) -> Self {
        Polynomial::constant(Rational::from_integer(c.into()))
    }

    pub fn word(w: Word) -> Self {
        Polynomial::monomial(Rational::one(), w)
    }

    pub fn generator(g: Generator) -> Self {
        Polynomial::word(Word::letter(g))
    }

    pub fn monomial(c: Rational, w: Word) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(w, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, Rational)>) -> Self {
        let mut p = Polynomial::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest word degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next_back().map(Word::degree)
    }

    pub fn leading_term(&self) -> Option<(&Word, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_word(&self) -> Option<&Word> {
        self.terms.keys().next_back()
    }

    pub fn coefficient(&self, w: &Word) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &Rational)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn words(&self) -> impl DoubleEndedIterator<Item = &Word> {
        self.terms.keys()
    }

    pub fn into_terms(self) -> BTreeMap<Word, Rational> {
        self.terms
    }

    pub fn add_term(&mut self, w: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
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

    /// Removes and returns the leading term.
    pub fn pop_leading(&mut self) -> Option<(Word, Rational)> {
        self.terms.pop_last()
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, c: &Rational, other: &Polynomial) {
        if c.is_zero() {
            return;
        }
        for (w, d) in &other.terms {
            self.add_term(w.clone(), c * d);
        }
    }

    /// `self += c * left * other * right`
    pub fn add_sandwiched(&mut self, c: &Rational, left: &Word, other: &Polynomial, right: &Word) {
        if c.is_zero() {
            return;
        }
        for (w, d) in &other.terms {
            self.add_term(w.sandwich(left.letters(), right.letters()), c * d);
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(w, d)| (w.clone(), c * d)).collect(),
        }
    }

    /// `left * self * right` for words `left`, `right`.
    pub fn sandwich(&self, left: &Word, right: &Word) -> Polynomial {
        // concatenating fixed words on both sides is strictly monotone
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.sandwich(left.letters(), right.letters()), c.clone()))
                .collect(),
        }
    }

    pub fn mul_word_left(&self, left: &Word) -> Polynomial {
        self.sandwich(left, &Word::one())
    }

    pub fn mul_word_right(&self, right: &Word) -> Polynomial {
        self.sandwich(&Word::one(), right)
    }

    /// Applies a linear map defined on words.
    pub fn map_linear(&self, mut f: impl FnMut(&Word) -> Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (w, c) in &self.terms {
            out.add_scaled(c, &f(w));
        }
        out
    }

    /// Sum of `coefficient * f(word)` for a scalar-valued `f`.
    pub fn evaluate(&self, mut f: impl FnMut(&Word) -> Rational) -> Rational {
        self.terms
            .iter()
            .fold(Rational::zero(), |acc, (w, c)| acc + c * f(w))
    }

    /// Makes the leading coefficient one; zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_term() {
            Some((_, c)) if !c.is_one() => self.scale(&c.recip()),
            _ => self.clone(),
        }
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        PolyDisplay { poly: self, alphabet: Some(alphabet) }
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", PolyDisplay { poly: self, alphabet: None })
    }
}

struct PolyDisplay<'a> {
    poly: &'a Polynomial,
    alphabet: Option<&'a Alphabet>,
}

impl fmt::Display for PolyDisplay<'_> {
    // canonical syntax: decreasing monomial order, "c*word", unit coefficient elided
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.poly.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            let word = match self.alphabet {
                Some(a) => w.display(a).to_string(),
                None => format!("{w:?}"),
            };
            if abs.is_one() {
                write!(f, "{word}")?;
            } else if w.is_one() {
                write!(f, "{}", format_rational(&abs))?;
            } else {
                write!(f, "{}*{word}", format_rational(&abs))?;
            }
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.add_scaled(&Rational::one(), rhs);
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.add_scaled(&-Rational::one(), rhs);
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (a, c) in &self.terms {
            for (b, d) in &rhs.terms {
                out.add_term(a.concat(b), c * d);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g(i: u16) -> Polynomial {
        Polynomial::generator(Generator(i))
    }

    #[test]
    fn multiply_examples() {
        let a = Alphabet::matrix(2);
        let (u11, u12) = (Polynomial::generator(a.u(1, 1)), Polynomial::generator(a.u(1, 2)));
        assert_eq!((&u11 * &u12).display(&a).to_string(), "u11*u12");
        assert_eq!(&u11 * &Polynomial::one(), u11);
        let p = &(&u11 + &u12) * &(&u11 - &u12);
        assert_eq!(p.display(&a).to_string(), "-u12*u12 + u12*u11 - u11*u12 + u11*u11");
    }

    #[test]
    fn zero_coefficients_vanish() {
        let p = &g(0) - &g(0);
        assert!(p.is_zero());
        assert_eq!(p.degree(), None);
        assert_eq!(format!("{p:?}"), "0");
    }

    fn poly_strategy() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((prop::collection::vec(0u16..3, 0..3), -3i64..=3), 0..4).prop_map(
            |terms| {
                Polynomial::from_terms(terms.into_iter().map(|(w, c)| {
                    (
                        Word::from_letters(w.into_iter().map(Generator).collect::<Vec<_>>()),
                        Rational::from_integer(c.into()),
                    )
                }))
            },
        )
    }

    proptest! {
        #[test]
        fn ring_axioms(p in poly_strategy(), q in poly_strategy(), r in poly_strategy()) {
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
            prop_assert_eq!(&(&p + &q) * &r, &(&p * &r) + &(&q * &r));
            prop_assert_eq!(&p * &Polynomial::one(), p.clone());
            prop_assert_eq!(&Polynomial::one() * &p, p.clone());
            prop_assert!(p.terms().all(|(_, c)| !c.is_zero()));
        }
    }
}
