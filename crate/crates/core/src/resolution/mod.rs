//! The free resolution
//!
//! ```text
//! 0 -> A --φ1--> M_n A --φ2--> M_n A --φ3--> A --ε--> Q -> 0
//! ```
//!
//! of the counit of `A = A_o(n)`, with `φ1(1) = Σ (u_ij - δ_ij) e_ij`,
//! `φ2(e_ij) = r_ij = e_ij + Σ_k u_ik e_jk` and `φ3(e_ij) = u_ij - δ_ij`.
//! All modules are free left modules; elements are vectors of normal forms
//! modulo a certified truncated Gröbner basis.

mod checks;
mod exactness;
mod maps;
mod module;
mod preimage;
mod random;
mod scalar;

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

pub use checks::{
    phi3tilde_injectivity, verify_comput1, verify_complex, verify_complex_with, verify_duality, verify_hopf,
    verify_phi3tilde_images, CheckResult, Failure, InjectivityReport,
};
pub use exactness::{CohomologyReport, ExactnessReport, PositionReport};
pub use maps::{StandardMaps, StructureElements};
pub use module::{generator_name, slot, MapName, ModuleMap, ModuleVector, Target};
pub use preimage::Phi2Preimage;
pub use random::{random_element, random_vector, random_word};
pub use scalar::{scalar_homology, trivialize, HomologyReport, ScalarComplex};

use crate::algebra::{Alphabet, Hopf, Polynomial};
use crate::rewriting::{ao_relations, complete, TruncatedGroebnerBasis};
use crate::{Error, Result};

/// `A_o(n)` together with a certified truncated basis of its relation ideal.
#[derive(Debug)]
pub struct Resolution {
    n: usize,
    basis: Arc<TruncatedGroebnerBasis>,
    maps: StandardMaps,
    // quotient-level φ2-preimages of derived relations, by derived id
    lift_cache: Mutex<HashMap<usize, ModuleVector>>,
}

impl Resolution {
    /// Completes the relations of `A_o(n)` up to `degree` and builds the maps.
    pub fn new(n: usize, degree: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroDimension);
        }
        let alphabet = Alphabet::matrix(n);
        let relations = ao_relations(&alphabet)?;
        let basis = complete(&alphabet, &relations, degree)?;
        Resolution::with_basis(Arc::new(basis))
    }

    pub fn with_basis(basis: Arc<TruncatedGroebnerBasis>) -> Result<Self> {
        let n = basis.alphabet().matrix_dim().ok_or(Error::NotMatrixAlphabet)?;
        let maps = StandardMaps::new(basis.alphabet())?;
        Ok(Resolution { n, basis, maps, lift_cache: Mutex::new(HashMap::new()) })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> &TruncatedGroebnerBasis {
        &self.basis
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.basis.alphabet()
    }

    pub fn hopf(&self) -> Hopf<'_> {
        Hopf::new(self.alphabet()).expect("matrix alphabet")
    }

    pub fn maps(&self) -> &StandardMaps {
        &self.maps
    }

    pub fn u(&self, i: usize, j: usize) -> Polynomial {
        Polynomial::generator(self.alphabet().u(i, j))
    }

    pub fn reduce_vector(&self, v: &ModuleVector) -> ModuleVector {
        v.map(|p| self.basis.normal_form(p))
    }

    /// `Σ_e v_e · map(e)` with components reduced; the result must stay
    /// within the certified degree.
    pub fn apply(&self, map: &ModuleMap, v: &ModuleVector) -> Result<ModuleVector> {
        self.check_apply(map, v)?;
        Ok(self.reduce_vector(&map.apply_free(v, self.hopf())))
    }

    /// Right-module evaluation `Σ_e map(e) · v_e`, used for dual maps.
    pub fn apply_right(&self, map: &ModuleMap, v: &ModuleVector) -> Result<ModuleVector> {
        self.check_apply(map, v)?;
        Ok(self.reduce_vector(&map.apply_free_right(v, self.hopf())))
    }

    fn check_apply(&self, map: &ModuleMap, v: &ModuleVector) -> Result<()> {
        if v.rank() != map.source_rank() {
            return Err(Error::Precondition(format!(
                "{} expects rank {}, got {}",
                map.name,
                map.source_rank(),
                v.rank()
            )));
        }
        if let Some(d) = v.degree() {
            self.basis.check_degree(d + map.degree_raise())?;
        }
        Ok(())
    }

    pub fn is_zero_in_quotient(&self, v: &ModuleVector) -> bool {
        self.reduce_vector(v).is_zero()
    }
}

#[cfg(test)]
mod tests;
