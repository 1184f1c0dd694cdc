use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// A letter of the free algebra.
///
/// The numeric id doubles as the precedence rank: `Generator(a) < Generator(b)`
/// exactly when `a` precedes `b` in the monomial order. A non-default
/// precedence is obtained by building the alphabet in a different order.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct Generator(pub u16);

#[derive(Clone, Debug, PartialEq, Eq)]
struct MatrixShape {
    n: usize,
    // row-major (row, col) index -> generator id
    id_of: Vec<u16>,
    // generator id -> (row, col), both 1-based
    entry_of: Vec<(usize, usize)>,
}

/// The generator set of a presentation, listed in precedence order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
    index: HashMap<String, u16>,
    matrix: Option<MatrixShape>,
}

fn matrix_name(base: &str, n: usize, row: usize, col: usize) -> String {
    if n < 10 {
        format!("{base}{row}{col}")
    } else {
        format!("{base}{row}_{col}")
    }
}

impl Alphabet {
    /// Plain alphabet; precedence follows the order of `names`.
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Self {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let index = names
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i as u16))
            .collect();
        Alphabet { names, index, matrix: None }
    }

    /// The `n*n` generators `u_ij` with row-major precedence `u11 < u12 < ... < unn`.
    pub fn matrix(n: usize) -> Self {
        let order: Vec<(usize, usize)> =
            (1..=n).flat_map(|r| (1..=n).map(move |c| (r, c))).collect();
        Self::matrix_with_precedence(n, &order).expect("row-major order is a permutation")
    }

    /// Matrix alphabet whose precedence lists the entries `(row, col)` from
    /// smallest to largest. Returns `None` unless `order` is a permutation of
    /// all `n*n` entries.
    pub fn matrix_with_precedence(n: usize, order: &[(usize, usize)]) -> Option<Self> {
        if order.len() != n * n {
            return None;
        }
        let mut id_of = vec![u16::MAX; n * n];
        let mut entry_of = Vec::with_capacity(n * n);
        for (id, &(r, c)) in order.iter().enumerate() {
            if r == 0 || c == 0 || r > n || c > n || id_of[(r - 1) * n + c - 1] != u16::MAX {
                return None;
            }
            id_of[(r - 1) * n + c - 1] = id as u16;
            entry_of.push((r, c));
        }
        let mut alphabet =
            Alphabet::new(entry_of.iter().map(|&(r, c)| matrix_name("u", n, r, c)));
        alphabet.matrix = Some(MatrixShape { n, id_of, entry_of });
        Some(alphabet)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn generators(&self) -> impl Iterator<Item = Generator> + '_ {
        (0..self.names.len() as u16).map(Generator)
    }

    pub fn name(&self, g: Generator) -> &str {
        &self.names[g.0 as usize]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn lookup(&self, name: &str) -> Option<Generator> {
        self.index.get(name).copied().map(Generator)
    }

    /// Side length `n` when the alphabet is `{u_ij}`.
    pub fn matrix_dim(&self) -> Option<usize> {
        self.matrix.as_ref().map(|m| m.n)
    }

    /// The generator `u_{row,col}` (1-based). Panics on a non-matrix alphabet
    /// or out-of-range indices.
    pub fn u(&self, row: usize, col: usize) -> Generator {
        let m = self.matrix.as_ref().expect("matrix alphabet");
        assert!((1..=m.n).contains(&row) && (1..=m.n).contains(&col), "index out of range");
        Generator(m.id_of[(row - 1) * m.n + col - 1])
    }

    /// `(row, col)` of a matrix generator.
    pub fn entry(&self, g: Generator) -> Option<(usize, usize)> {
        self.matrix.as_ref().map(|m| m.entry_of[g.0 as usize])
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.names.join(" < "))
    }
}
