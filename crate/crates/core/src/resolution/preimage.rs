use std::collections::HashMap;

use super::module::{slot, ModuleVector};
use super::Resolution;
use crate::algebra::Polynomial;
use crate::rewriting::{Certificate, RelationTag};
use crate::{Error, Result};

/// A certified `φ2`-preimage.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Phi2Preimage {
    pub preimage: ModuleVector,
    /// Number of summands in the certificate of `φ̃3(a)`.
    pub certificate_terms: usize,
    pub witness_degree: Option<usize>,
}

impl Resolution {
    /// `b` with `φ3(b) = a - ε(a)`, by peeling the rightmost letter of each
    /// word: `w·u_ij ↦ w·e_ij + δ_ij·(preimage of w)`.
    pub fn counit_preimage(&self, a: &Polynomial) -> Result<ModuleVector> {
        if let Some(d) = a.degree() {
            self.basis().check_degree(d)?;
        }
        let n = self.n();
        let a = self.basis().normal_form(a);
        let mut b = ModuleVector::zero(n * n);
        for (w, c) in a.terms() {
            let mut rest = w.clone();
            while let Some((prefix, g)) = rest.split_last() {
                let (i, j) = self.alphabet().entry(g).expect("matrix alphabet");
                b.component_mut(slot(n, i, j)).add_term(prefix.clone(), c.clone());
                if i != j {
                    break;
                }
                rest = prefix;
            }
        }
        let b = self.reduce_vector(&b);
        let image = self.apply(&self.maps().phi3, &b)?;
        let expected = a.clone() - Polynomial::constant(self.hopf().counit(&a));
        if image.component(0) != &self.basis().normal_form(&expected) {
            return Err(Error::SelfCheck(format!(
                "counit preimage of {} does not round-trip",
                a.display(self.alphabet())
            )));
        }
        Ok(b)
    }

    /// `b` with `φ2(b) = a` for `a ∈ ker φ3`. The certificate of `φ̃3(a)`
    /// is turned into a preimage summand by summand: `c·x·T·y` contributes
    /// `c·ε(y)·x·ψ(T)` with `ψ(R_ik) = e_ik`, `ψ(L_ik) = Σ_m u_mi e_mk`,
    /// and `ψ` of a derived relation obtained from its derivation.
    pub fn phi2_preimage(&self, a: &ModuleVector) -> Result<Phi2Preimage> {
        let n = self.n();
        if a.rank() != n * n {
            return Err(Error::Precondition(format!("expected rank {}, got {}", n * n, a.rank())));
        }
        if let Some(d) = a.degree() {
            self.basis().check_degree(d + 1)?;
        }
        let f = self.maps().phi3_tilde(a);
        let (rest, certificate) = self.basis().reduce(&f);
        if !rest.is_zero() {
            return Err(Error::Precondition(format!(
                "phi3 of the input reduces to {}, not 0",
                rest.display(self.alphabet())
            )));
        }
        let b = {
            let mut cache = self.lift_cache.lock().expect("lift cache poisoned");
            self.lift_certificate(&certificate, &mut cache)?
        };
        let image = self.apply(&self.maps().phi2, &b)?;
        if image != self.reduce_vector(a) {
            return Err(Error::SelfCheck(format!(
                "phi2 preimage does not round-trip: got {}",
                image.display(self.alphabet())
            )));
        }
        Ok(Phi2Preimage { witness_degree: b.degree(), preimage: b, certificate_terms: certificate.len() })
    }

    fn lift_certificate(&self, cert: &Certificate, cache: &mut HashMap<usize, ModuleVector>) -> Result<ModuleVector> {
        let hopf = self.hopf();
        let mut out = ModuleVector::zero(self.n() * self.n());
        for s in cert.summands() {
            let c = s.coeff * hopf.counit_word(&s.right);
            if num_traits::Zero::is_zero(&c) {
                continue;
            }
            let base = self.lift_tag(&s.tag, cache)?;
            let x = Polynomial::monomial(c, s.left.clone());
            out.add_assign(&base.left_mul(&x));
        }
        Ok(self.reduce_vector(&out))
    }

    fn lift_tag(&self, tag: &RelationTag, cache: &mut HashMap<usize, ModuleVector>) -> Result<ModuleVector> {
        let n = self.n();
        match *tag {
            RelationTag::R(i, k) => Ok(ModuleVector::basis(n * n, slot(n, i, k))),
            RelationTag::L(i, k) => {
                let mut v = ModuleVector::zero(n * n);
                for m in 1..=n {
                    *v.component_mut(slot(n, m, k)) = self.u(m, i);
                }
                Ok(v)
            }
            RelationTag::Derived(id) => {
                if let Some(v) = cache.get(&id) {
                    return Ok(v.clone());
                }
                let derived = self.basis().derived().get(&id).ok_or(Error::MissingDerivation(id))?;
                let derivation = derived.derivation().ok_or(Error::MissingDerivation(id))?.clone();
                let v = self.lift_certificate(&derivation, cache)?;
                cache.insert(id, v.clone());
                Ok(v)
            }
            RelationTag::Input(_) => {
                Err(Error::Precondition(format!("relation {tag} is not one of the defining relations")))
            }
        }
    }
}

