use num_traits::One;

use super::module::{slot, MapName, ModuleMap, ModuleVector, Target};
use crate::algebra::{Alphabet, Polynomial, Rational};
use crate::{Error, Result};

fn u_minus_delta(alphabet: &Alphabet, i: usize, j: usize) -> Polynomial {
    let u = Polynomial::generator(alphabet.u(i, j));
    if i == j {
        u - Polynomial::one()
    } else {
        u
    }
}

/// The elements `r_ik` and `l_ik` of `M_n A`.
#[derive(Clone, Debug)]
pub struct StructureElements {
    n: usize,
    r: Vec<ModuleVector>,
    l: Vec<ModuleVector>,
}

impl StructureElements {
    pub fn new(alphabet: &Alphabet) -> Result<Self> {
        let n = alphabet.matrix_dim().ok_or(Error::NotMatrixAlphabet)?;
        let rank = n * n;
        let mut r = Vec::with_capacity(rank);
        let mut l = Vec::with_capacity(rank);
        for i in 1..=n {
            for k in 1..=n {
                // r_ik = e_ik + Σ_j u_ij e_kj
                let mut v = ModuleVector::basis(rank, slot(n, i, k));
                for j in 1..=n {
                    let c = v.component_mut(slot(n, k, j));
                    *c = &*c + &Polynomial::generator(alphabet.u(i, j));
                }
                r.push(v);
                // l_ik = e_ki + Σ_j u_ji e_jk
                let mut v = ModuleVector::basis(rank, slot(n, k, i));
                for j in 1..=n {
                    let c = v.component_mut(slot(n, j, k));
                    *c = &*c + &Polynomial::generator(alphabet.u(j, i));
                }
                l.push(v);
            }
        }
        Ok(StructureElements { n, r, l })
    }

    pub fn r(&self, i: usize, k: usize) -> &ModuleVector {
        &self.r[slot(self.n, i, k)]
    }

    pub fn l(&self, i: usize, k: usize) -> &ModuleVector {
        &self.l[slot(self.n, i, k)]
    }
}

/// `φ1, φ2, φ3, ε` of the resolution.
#[derive(Clone, Debug)]
pub struct StandardMaps {
    pub n: usize,
    pub phi1: ModuleMap,
    pub phi2: ModuleMap,
    pub phi3: ModuleMap,
    pub epsilon: ModuleMap,
    pub elements: StructureElements,
}

impl StandardMaps {
    pub fn new(alphabet: &Alphabet) -> Result<Self> {
        let n = alphabet.matrix_dim().ok_or(Error::NotMatrixAlphabet)?;
        let rank = n * n;
        let elements = StructureElements::new(alphabet)?;

        let mut column = ModuleVector::zero(rank);
        for i in 1..=n {
            for j in 1..=n {
                *column.component_mut(slot(n, i, j)) = u_minus_delta(alphabet, i, j);
            }
        }
        let phi1 = ModuleMap { name: MapName::Phi1, target: Target::Free(rank), images: vec![column] };

        let mut images = Vec::with_capacity(rank);
        for i in 1..=n {
            for j in 1..=n {
                images.push(elements.r(i, j).clone());
            }
        }
        let phi2 = ModuleMap { name: MapName::Phi2, target: Target::Free(rank), images };

        let mut images = Vec::with_capacity(rank);
        for i in 1..=n {
            for j in 1..=n {
                images.push(ModuleVector::from_components(vec![u_minus_delta(alphabet, i, j)]));
            }
        }
        let phi3 = ModuleMap { name: MapName::Phi3, target: Target::Free(1), images };

        let epsilon = ModuleMap {
            name: MapName::Epsilon,
            target: Target::Trivial,
            images: vec![ModuleVector::from_components(vec![Polynomial::constant(Rational::one())])],
        };
        Ok(StandardMaps { n, phi1, phi2, phi3, epsilon, elements })
    }

    /// `φ̃3: M_n F -> F`, `Σ a_ij e_ij ↦ Σ a_ij (u_ij - δ_ij)`, without reduction.
    pub fn phi3_tilde(&self, v: &ModuleVector) -> Polynomial {
        let mut out = Polynomial::zero();
        for (e, a) in v.components().iter().enumerate() {
            if !a.is_zero() {
                out = out + a * self.phi3.entry(e, 0);
            }
        }
        out
    }

    /// `φ2` evaluated in the free algebra, without reduction.
    pub fn phi2_free(&self, v: &ModuleVector) -> ModuleVector {
        let mut out = ModuleVector::zero(self.n * self.n);
        for (e, a) in v.components().iter().enumerate() {
            if !a.is_zero() {
                out.add_assign(&self.phi2.images[e].left_mul(a));
            }
        }
        out
    }
}
