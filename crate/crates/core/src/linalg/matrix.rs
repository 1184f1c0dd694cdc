use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::algebra::{format_rational, Rational};

/// Sparse vector: column index -> nonzero entry.
pub type SparseVector = BTreeMap<usize, Rational>;

/// Row-major sparse matrix with exact rational entries.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<SparseVector>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols, data: vec![SparseVector::new(); rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RationalMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::from_integer(1.into()));
        }
        m
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = RationalMatrix::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, Rational::from_integer(x.into()));
            }
        }
        m
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[SparseVector]) -> Self {
        let mut m = RationalMatrix::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            for (&i, x) in col {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn set(&mut self, i: usize, j: usize, x: Rational) {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        if x.is_zero() {
            self.data[i].remove(&j);
        } else {
            self.data[i].insert(j, x);
        }
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.data[i].get(&j).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn row(&self, i: usize) -> &SparseVector {
        &self.data[i]
    }

    pub fn column(&self, j: usize) -> SparseVector {
        self.data
            .iter()
            .enumerate()
            .filter_map(|(i, row)| row.get(&j).map(|x| (i, x.clone())))
            .collect()
    }

    pub fn columns(&self) -> Vec<SparseVector> {
        let mut cols = vec![SparseVector::new(); self.cols];
        for (i, row) in self.data.iter().enumerate() {
            for (&j, x) in row {
                cols[j].insert(i, x.clone());
            }
        }
        cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BTreeMap::is_empty)
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(BTreeMap::len).sum()
    }

    pub fn transpose(&self) -> RationalMatrix {
        RationalMatrix::from_columns(self.cols, &self.data)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        self.data
            .iter()
            .map(|row| {
                row.iter()
                    .fold(Rational::zero(), |acc, (&j, x)| acc + x * &v[j])
            })
            .collect()
    }

    pub fn mul(&self, other: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = RationalMatrix::zeros(self.rows, other.cols);
        for (i, row) in self.data.iter().enumerate() {
            let mut acc = SparseVector::new();
            for (&k, x) in row {
                for (&j, y) in &other.data[k] {
                    *acc.entry(j).or_insert_with(Rational::zero) += x * y;
                }
            }
            acc.retain(|_, x| !x.is_zero());
            out.data[i] = acc;
        }
        out
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| format_rational(&self.get(i, j))).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
