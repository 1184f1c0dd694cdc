use std::cmp::Ordering;
use std::fmt;

use super::{Alphabet, Generator};

/// A monomial of the free algebra; the empty word is the unit.
///
/// `Ord` is the degree-lexicographic order: shorter words first, equal
/// lengths compared letter by letter using generator precedence.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Generator>);

impl Word {
    pub fn one() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: impl Into<Vec<Generator>>) -> Self {
        Word(letters.into())
    }

    pub fn letter(g: Generator) -> Self {
        Word(vec![g])
    }

    pub fn letters(&self) -> &[Generator] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `left * self * right`
    pub fn sandwich(&self, left: &[Generator], right: &[Generator]) -> Word {
        let mut v = Vec::with_capacity(left.len() + self.0.len() + right.len());
        v.extend_from_slice(left);
        v.extend_from_slice(&self.0);
        v.extend_from_slice(right);
        Word(v)
    }

    pub fn push(&mut self, g: Generator) {
        self.0.push(g);
    }

    /// Splits off the last letter: `w = prefix * last`.
    pub fn split_last(&self) -> Option<(Word, Generator)> {
        self.0
            .split_last()
            .map(|(last, rest)| (Word(rest.to_vec()), *last))
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Leftmost occurrence of `factor` as a contiguous subword.
    pub fn find(&self, factor: &[Generator]) -> Option<usize> {
        if factor.is_empty() {
            return Some(0);
        }
        self.0.windows(factor.len()).position(|w| w == factor)
    }

    pub fn contains(&self, factor: &[Generator]) -> bool {
        self.find(factor).is_some()
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        WordDisplay { word: self, alphabet }
    }

    /// All words of exactly `degree` letters over an alphabet of `size`
    /// letters, in increasing order.
    pub fn all_of_degree(size: usize, degree: usize) -> Vec<Word> {
        let mut out = vec![Word::one()];
        for _ in 0..degree {
            out = out
                .iter()
                .flat_map(|w| {
                    (0..size as u16).map(move |g| {
                        let mut next = w.clone();
                        next.push(Generator(g));
                        next
                    })
                })
                .collect();
        }
        out
    }

    /// All words of degree at most `degree`, in increasing order.
    pub fn all_up_to(size: usize, degree: usize) -> Vec<Word> {
        (0..=degree).flat_map(|d| Word::all_of_degree(size, d)).collect()
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|g| format!("x{}", g.0)).collect();
        write!(f, "{}", parts.join("*"))
    }
}

struct WordDisplay<'a> {
    word: &'a Word,
    alphabet: &'a Alphabet,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_one() {
            return write!(f, "1");
        }
        for (i, g) in self.word.letters().iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "{}", self.alphabet.name(*g))?;
        }
        Ok(())
    }
}

/// The only monomial order in use: degree-lexicographic, with the letter
/// precedence carried by the alphabet (generator ids are precedence ranks).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MonomialOrder;

impl MonomialOrder {
    pub const KIND: &'static str = "deglex";

    pub fn compare(&self, a: &Word, b: &Word) -> Ordering {
        a.cmp(b)
    }
}

pub fn compare_words(a: &Word, b: &Word, order: &MonomialOrder) -> Ordering {
    order.compare(a, b)
}
