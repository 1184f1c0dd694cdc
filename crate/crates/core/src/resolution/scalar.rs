use serde::Serialize;

use super::maps::StandardMaps;
use super::module::ModuleMap;
use crate::algebra::{Alphabet, Hopf};
use crate::linalg::{kernel_basis, rank, RationalMatrix};
use crate::{Error, Result};

/// `Q ⊗_A C_*`: the resolution with every matrix entry replaced by its
/// counit. Matrices act on column vectors, so column `s` is the image of
/// source generator `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarComplex {
    pub n: usize,
    pub phi1: RationalMatrix,
    pub phi2: RationalMatrix,
    pub phi3: RationalMatrix,
    pub epsilon: RationalMatrix,
}

fn scalar_matrix(map: &ModuleMap, hopf: Hopf<'_>) -> RationalMatrix {
    let mut m = RationalMatrix::zeros(map.target_rank(), map.source_rank());
    for s in 0..map.source_rank() {
        for t in 0..map.target_rank() {
            m.set(t, s, hopf.counit(map.entry(s, t)));
        }
    }
    m
}

pub fn trivialize(n: usize) -> Result<ScalarComplex> {
    if n == 0 {
        return Err(Error::ZeroDimension);
    }
    let alphabet = Alphabet::matrix(n);
    let maps = StandardMaps::new(&alphabet)?;
    let hopf = Hopf::new(&alphabet)?;
    Ok(ScalarComplex {
        n,
        phi1: scalar_matrix(&maps.phi1, hopf),
        phi2: scalar_matrix(&maps.phi2, hopf),
        phi3: scalar_matrix(&maps.phi3, hopf),
        epsilon: scalar_matrix(&maps.epsilon, hopf),
    })
}

/// Homology of the scalar complex `0 -> Q -> M_n Q -> M_n Q -> Q -> 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyReport {
    pub n: usize,
    /// `H_0 .. H_3`
    pub dims: [usize; 4],
    pub euler: i64,
    /// Ranks of `φ3, φ2, φ1`.
    pub ranks: [usize; 3],
    pub compositions_vanish: bool,
    pub kernel_phi2_is_skew: bool,
    pub image_phi2_is_symmetric: bool,
    pub provenance: String,
}

fn is_transpose_signed(v: &[crate::algebra::Rational], n: usize, sign: i64) -> bool {
    let s = crate::algebra::Rational::from_integer(sign.into());
    (0..n).all(|i| (0..n).all(|j| v[i * n + j] == &s * &v[j * n + i]))
}

pub fn scalar_homology(n: usize) -> Result<HomologyReport> {
    let c = trivialize(n)?;
    let rank_sq = n * n;
    let r3 = rank(&c.phi3);
    let r2 = rank(&c.phi2);
    let r1 = rank(&c.phi1);
    let dims = [1 - r3, rank_sq - r3 - r2, rank_sq - r2 - r1, 1 - r1];
    let euler = dims[0] as i64 - dims[1] as i64 + dims[2] as i64 - dims[3] as i64;
    let compositions_vanish = c.epsilon.mul(&c.phi3).is_zero() && c.phi3.mul(&c.phi2).is_zero() && c.phi2.mul(&c.phi1).is_zero();
    let kernel_phi2_is_skew = kernel_basis(&c.phi2).iter().all(|v| is_transpose_signed(v, n, -1));
    let image_phi2_is_symmetric = (0..rank_sq).all(|s| {
        let col: Vec<_> = (0..rank_sq).map(|t| c.phi2.get(t, s)).collect();
        is_transpose_signed(&col, n, 1)
    });
    Ok(HomologyReport {
        n,
        dims,
        euler,
        ranks: [r3, r2, r1],
        compositions_vanish,
        kernel_phi2_is_skew,
        image_phi2_is_symmetric,
        provenance: "counit applied to the defining matrices; no truncation".to_string(),
    })
}
