use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{RationalMatrix, SparseVector};
use crate::algebra::Rational;

/// Primitive integer row, sorted by column, leading entry positive.
type IntRow = Vec<(usize, BigInt)>;

/// Clears denominators of a rational sparse vector. Returns the integer row
/// and the factor `s` with `row = s * v`.
fn to_integer_row(v: &SparseVector) -> (IntRow, Rational) {
    let lcm = v
        .values()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let row: IntRow = v
        .iter()
        .map(|(&j, x)| (j, x.numer() * (&lcm / x.denom())))
        .collect();
    (row, Rational::from_integer(lcm))
}

/// Divides by the content and fixes the sign of the leading entry. Returns
/// the divisor applied (signed).
fn make_primitive(row: &mut IntRow) -> BigInt {
    let Some((_, lead)) = row.first() else {
        return BigInt::one();
    };
    let mut g = row.iter().fold(BigInt::zero(), |acc, (_, x)| acc.gcd(x));
    if lead.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for (_, x) in row.iter_mut() {
            *x /= &g;
        }
    }
    g
}

/// `p*a - q*b`, merged by column.
fn combine(p: &BigInt, a: &IntRow, q: &BigInt, b: &IntRow) -> IntRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push((a[i].0, p * &a[i].1));
            i += 1;
        } else if take_b {
            out.push((b[j].0, -(q * &b[j].1)));
            j += 1;
        } else {
            let x = p * &a[i].1 - q * &b[j].1;
            if !x.is_zero() {
                out.push((a[i].0, x));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn combine_rational(p: &Rational, a: &SparseVector, q: &Rational, b: &SparseVector) -> SparseVector {
    let mut out: SparseVector = a.iter().map(|(&k, x)| (k, p * x)).collect();
    for (&k, y) in b {
        *out.entry(k).or_insert_with(Rational::zero) -= q * y;
    }
    out.retain(|_, x| !x.is_zero());
    out
}

/// Row echelon form built incrementally; `combos` optionally tracks each
/// pivot row as a rational combination of the inserted vectors.
#[derive(Default)]
struct Echelon {
    pivots: BTreeMap<usize, IntRow>,
    combos: BTreeMap<usize, SparseVector>,
    track: bool,
}

impl Echelon {
    fn tracking() -> Self {
        Echelon { track: true, ..Default::default() }
    }

    /// Reduces `row` against the pivots. Returns the remainder with its
    /// combination (`remainder = scale * input - combo · inserted`).
    fn reduce(&self, mut row: IntRow, mut combo: SparseVector, mut scale: Rational) -> (IntRow, SparseVector, Rational) {
        while let Some((col, lead)) = row.first().cloned() {
            let Some(pivot) = self.pivots.get(&col) else {
                break;
            };
            let p = pivot[0].1.clone();
            let g = p.gcd(&lead);
            let (p, q) = (&p / &g, &lead / &g);
            row = combine(&p, &row, &q, pivot);
            if self.track {
                let pr = Rational::from_integer(p.clone());
                let qr = Rational::from_integer(q.clone());
                // combo tracks `scale * input - row`
                combo = combine_rational(&pr, &combo, &-qr, &self.combos[&col]);
                scale *= &pr;
            }
            let d = make_primitive(&mut row);
            if self.track && !d.is_one() {
                let dr = Rational::from_integer(d);
                scale /= &dr;
                for x in combo.values_mut() {
                    *x /= &dr;
                }
            }
        }
        (row, combo, scale)
    }

    /// Inserts a vector; returns whether it enlarged the span.
    fn insert(&mut self, v: &SparseVector, id: usize) -> bool {
        let (mut row, s) = to_integer_row(v);
        let d = make_primitive(&mut row);
        // row = (s/d) * v
        let scale = s / Rational::from_integer(d);
        let (row, combo, scale) = self.reduce(row, SparseVector::new(), scale);
        let Some(&(col, _)) = row.first() else {
            return false;
        };
        if self.track {
            // row = scale * v_id - combo  =>  express row over inserted vectors
            let mut c: SparseVector = combo.into_iter().map(|(k, x)| (k, -x)).collect();
            *c.entry(id).or_insert_with(Rational::zero) += scale;
            c.retain(|_, x| !x.is_zero());
            self.combos.insert(col, c);
        }
        self.pivots.insert(col, row);
        true
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Clears entries above every pivot (reduced row echelon form).
    fn back_substitute(&mut self) {
        let cols: Vec<usize> = self.pivots.keys().rev().copied().collect();
        for &c in &cols {
            let pivot = self.pivots[&c].clone();
            let p = pivot[0].1.clone();
            for &other in cols.iter().filter(|&&o| o < c) {
                let row = &self.pivots[&other];
                let Some(q) = row.iter().find(|(j, _)| *j == c).map(|(_, x)| x.clone()) else {
                    continue;
                };
                let g = p.gcd(&q);
                let mut next = combine(&(&p / &g), row, &(&q / &g), &pivot);
                make_primitive(&mut next);
                self.pivots.insert(other, next);
            }
        }
    }
}

fn int_row_at(row: &IntRow, col: usize) -> Option<&BigInt> {
    row.binary_search_by_key(&col, |(j, _)| *j).ok().map(|k| &row[k].1)
}

fn echelon_of_rows(m: &RationalMatrix) -> Echelon {
    let mut e = Echelon::default();
    for i in 0..m.rows() {
        e.insert(m.row(i), i);
    }
    e
}

pub fn rank(m: &RationalMatrix) -> usize {
    echelon_of_rows(m).rank()
}

/// Basis of `{x : M x = 0}`, one vector per free column with a `1` there.
/// Each vector is checked by exact multiplication before return.
pub fn kernel_basis(m: &RationalMatrix) -> Vec<Vec<Rational>> {
    let mut e = echelon_of_rows(m);
    e.back_substitute();
    let pivot_cols: Vec<usize> = e.pivots.keys().copied().collect();
    let mut basis = Vec::new();
    for free in (0..m.cols()).filter(|c| !e.pivots.contains_key(c)) {
        let mut x = vec![Rational::zero(); m.cols()];
        x[free] = Rational::one();
        for &pc in &pivot_cols {
            let row = &e.pivots[&pc];
            if let Some(b) = int_row_at(row, free) {
                x[pc] = -Rational::new(b.clone(), row[0].1.clone());
            }
        }
        assert!(
            m.mul_vec(&x).iter().all(Zero::is_zero),
            "kernel vector failed replay"
        );
        basis.push(x);
    }
    basis
}

/// Column span of a fixed matrix, prepared for repeated membership queries.
pub struct SpanSolver {
    matrix: RationalMatrix,
    echelon: Echelon,
}

impl SpanSolver {
    pub fn new(m: &RationalMatrix) -> Self {
        let mut echelon = Echelon::tracking();
        for (j, col) in m.columns().iter().enumerate() {
            echelon.insert(col, j);
        }
        SpanSolver { matrix: m.clone(), echelon }
    }

    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    pub fn contains(&self, v: &SparseVector) -> bool {
        let (row, _) = to_integer_row(v);
        self.echelon_reduce_untracked(row).is_empty()
    }

    fn echelon_reduce_untracked(&self, row: IntRow) -> IntRow {
        let mut row = row;
        make_primitive(&mut row);
        while let Some((col, lead)) = row.first().cloned() {
            let Some(pivot) = self.echelon.pivots.get(&col) else {
                break;
            };
            let p = pivot[0].1.clone();
            let g = p.gcd(&lead);
            row = combine(&(&p / &g), &row, &(&lead / &g), pivot);
            make_primitive(&mut row);
        }
        row
    }

    /// Coefficients `x` with `M x = v`, or `None` when `v` is outside the
    /// column span. A returned solution has been verified exactly.
    pub fn solve(&self, v: &SparseVector) -> Option<Vec<Rational>> {
        let (row, s) = to_integer_row(v);
        let (rem, combo, scale) = self.echelon.reduce(row, SparseVector::new(), s);
        if !rem.is_empty() {
            return None;
        }
        // 0 = scale * v - combo · columns
        let mut x = vec![Rational::zero(); self.matrix.cols()];
        for (j, c) in combo {
            x[j] = c / &scale;
        }
        let image = self.matrix.mul_vec(&x);
        let ok = (0..self.matrix.rows())
            .all(|i| image[i] == v.get(&i).cloned().unwrap_or_else(Rational::zero));
        assert!(ok, "span solution failed replay");
        Some(x)
    }
}

pub fn solve_in_span(m: &RationalMatrix, v: &[Rational]) -> Option<Vec<Rational>> {
    assert_eq!(v.len(), m.rows(), "dimension mismatch");
    let sparse: SparseVector = v
        .iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect();
    SpanSolver::new(m).solve(&sparse)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(x: i64) -> Rational {
        Rational::from_integer(x.into())
    }

    /// Textbook Gauss-Jordan over rationals, used as an independent rank oracle.
    fn naive_rank(m: &RationalMatrix) -> usize {
        let mut a: Vec<Vec<Rational>> =
            (0..m.rows()).map(|i| (0..m.cols()).map(|j| m.get(i, j)).collect()).collect();
        let mut r = 0;
        for c in 0..m.cols() {
            let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
            a.swap(r, p);
            let pivot = a[r].clone();
            for (i, row) in a.iter_mut().enumerate() {
                if i != r && !row[c].is_zero() {
                    let f = &row[c] / &pivot[c];
                    for (x, y) in row.iter_mut().zip(&pivot) {
                        *x -= &f * y;
                    }
                }
            }
            r += 1;
        }
        r
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&RationalMatrix::identity(3)), 3);
        assert_eq!(rank(&RationalMatrix::from_i64(&[vec![1, 1], vec![1, 1]])), 1);
        assert_eq!(rank(&RationalMatrix::zeros(2, 5)), 0);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_basis(&RationalMatrix::zeros(2, 2)).len(), 2);
        assert!(kernel_basis(&RationalMatrix::from_i64(&[vec![2, 1], vec![1, 1]])).is_empty());
        let k = kernel_basis(&RationalMatrix::from_i64(&[vec![1, 2, 3], vec![2, 4, 6]]));
        assert_eq!(k, vec![vec![q(-2), q(1), q(0)], vec![q(-3), q(0), q(1)]]);
    }

    #[test]
    fn solve_examples() {
        let v = vec![q(3), Rational::new(1.into(), 2.into()), q(-7)];
        assert_eq!(solve_in_span(&RationalMatrix::identity(3), &v), Some(v.clone()));
        let m = RationalMatrix::from_i64(&[vec![1, 0, 2], vec![0, 1, 0], vec![1, 1, 0]]);
        assert_eq!(solve_in_span(&m, &[q(1), q(1), q(2)]), Some(vec![q(1), q(1), q(0)]));
        let m = RationalMatrix::from_i64(&[vec![1], vec![0]]);
        assert_eq!(solve_in_span(&m, &[q(0), q(1)]), None);
    }

    fn matrix_strategy() -> impl Strategy<Value = RationalMatrix> {
        (1usize..7, 1usize..7).prop_flat_map(|(r, c)| {
            prop::collection::vec(prop::collection::vec(
                prop_oneof![3 => Just(0i64), 2 => -3i64..=3], c), r)
                .prop_map(|rows| RationalMatrix::from_i64(&rows))
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(m in matrix_strategy()) {
            let r = rank(&m);
            prop_assert_eq!(r, naive_rank(&m));
            prop_assert_eq!(r + kernel_basis(&m).len(), m.cols());
            prop_assert_eq!(SpanSolver::new(&m).rank(), r);
        }

        #[test]
        fn rank_is_permutation_invariant(m in matrix_strategy(), seed in any::<u64>()) {
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut rows: Vec<usize> = (0..m.rows()).collect();
            let mut cols: Vec<usize> = (0..m.cols()).collect();
            rows.shuffle(&mut rng);
            cols.shuffle(&mut rng);
            let mut p = RationalMatrix::zeros(m.rows(), m.cols());
            for (i, &ri) in rows.iter().enumerate() {
                for (j, &cj) in cols.iter().enumerate() {
                    p.set(i, j, m.get(ri, cj));
                }
            }
            prop_assert_eq!(rank(&p), rank(&m));
        }

        #[test]
        fn combinations_of_columns_are_solved(m in matrix_strategy(), coeffs in prop::collection::vec(-3i64..=3, 7)) {
            let x: Vec<Rational> = (0..m.cols()).map(|j| q(coeffs[j])).collect();
            let v = m.mul_vec(&x);
            let sol = solve_in_span(&m, &v).expect("in span");
            prop_assert_eq!(m.mul_vec(&sol), v);
        }
    }
}
