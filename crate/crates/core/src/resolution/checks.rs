use std::collections::HashMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::maps::StandardMaps;
use super::module::{generator_name, slot, ModuleVector};
use super::random::random_word;
use super::Resolution;
use crate::algebra::{Alphabet, Hopf, Polynomial, TensorPolynomial, Word};
use crate::linalg::{rank, RationalMatrix};
use crate::rewriting::{ao_relations, OracleLimits, RelationTag};
use crate::Result;

/// One nonzero residue found by a check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stage: Option<usize>,
    pub item: String,
    pub residue: String,
}

/// Outcome of an identity check over a finite list of items.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub n: usize,
    pub passed: bool,
    pub checked: usize,
    pub failures: Vec<Failure>,
}

impl CheckResult {
    fn new(name: &str, n: usize) -> Self {
        CheckResult { name: name.to_string(), n, passed: true, checked: 0, failures: Vec::new() }
    }

    fn record(&mut self, stage: Option<usize>, item: String, residue: Option<String>) {
        self.checked += 1;
        if let Some(residue) = residue {
            self.passed = false;
            self.failures.push(Failure { stage, item, residue });
        }
    }
}

fn vector_residue(res: &Resolution, v: &ModuleVector) -> Option<String> {
    let v = res.reduce_vector(v);
    (!v.is_zero()).then(|| v.display(res.alphabet()).to_string())
}

fn poly_residue(res: &Resolution, p: &Polynomial) -> Option<String> {
    let p = res.basis().normal_form(p);
    (!p.is_zero()).then(|| p.display(res.alphabet()).to_string())
}

/// `ε∘φ3`, `φ3∘φ2`, `φ2∘φ1` on every generator. Stages count the source
/// module's homological degree plus one, with the trivial module at stage 0.
pub fn verify_complex(res: &Resolution) -> Result<CheckResult> {
    verify_complex_with(res, res.maps())
}

pub fn verify_complex_with(res: &Resolution, maps: &StandardMaps) -> Result<CheckResult> {
    let n = res.n();
    let rank = n * n;
    let mut out = CheckResult::new("complex", n);
    let composites = [
        (2, "epsilon.phi3", &maps.phi3, &maps.epsilon, rank),
        (3, "phi3.phi2", &maps.phi2, &maps.phi3, rank),
        (4, "phi2.phi1", &maps.phi1, &maps.phi2, 1),
    ];
    for (stage, label, first, second, source_rank) in composites {
        for e in 0..source_rank {
            let g = ModuleVector::basis(source_rank, e);
            let image = res.apply(second, &res.apply(first, &g)?)?;
            let item = format!("{label}({})", generator_name(n, source_rank, e));
            out.record(Some(stage), item, vector_residue(res, &image));
        }
    }
    Ok(out)
}

/// `r_jk = Σ_i u_ji l_ik` and `l_jk = Σ_i u_ij r_ik` in `M_n A`.
pub fn verify_comput1(res: &Resolution) -> Result<CheckResult> {
    let n = res.n();
    let el = &res.maps().elements;
    let mut out = CheckResult::new("comput1", n);
    res.basis().check_degree(2)?;
    for j in 1..=n {
        for k in 1..=n {
            let mut diff = el.r(j, k).clone();
            for i in 1..=n {
                diff = diff.sub(&el.l(i, k).left_mul(&res.u(j, i)));
            }
            out.record(None, format!("r{j}{k}"), vector_residue(res, &diff));
            let mut diff = el.l(j, k).clone();
            for i in 1..=n {
                diff = diff.sub(&el.r(i, k).left_mul(&res.u(i, j)));
            }
            out.record(None, format!("l{j}{k}"), vector_residue(res, &diff));
        }
    }
    Ok(out)
}

/// `φ̃3(r_ik) = R_ik` and `φ̃3(l_ik) = L_ik`, exactly in the free algebra.
pub fn verify_phi3tilde_images(res: &Resolution) -> CheckResult {
    let n = res.n();
    let maps = res.maps();
    let mut out = CheckResult::new("phi3tilde-images", n);
    for i in 1..=n {
        for k in 1..=n {
            for (tag, v) in [
                (RelationTag::R(i, k), maps.elements.r(i, k)),
                (RelationTag::L(i, k), maps.elements.l(i, k)),
            ] {
                let relation = res.basis().relation_poly(&tag).expect("original relation");
                let diff = maps.phi3_tilde(v) - relation.clone();
                let residue = (!diff.is_zero()).then(|| diff.display(res.alphabet()).to_string());
                out.record(None, format!("{tag}"), residue);
            }
        }
    }
    out
}

/// Matrix-level self-duality: `transpose(mat φ1) = mat φ3` and
/// `transpose(mat φ2)(e_ij) = l_ji`.
pub fn verify_duality(res: &Resolution) -> Result<CheckResult> {
    let n = res.n();
    let rank = n * n;
    let maps = res.maps();
    let mut out = CheckResult::new("duality", n);
    let phi1_t = maps.phi1.transposed(super::MapName::Custom("phi1^t".into()));
    for e in 0..rank {
        let diff = phi1_t.entry(e, 0) - maps.phi3.entry(e, 0);
        out.record(None, format!("phi1^t({})", generator_name(n, rank, e)), poly_residue(res, &diff));
    }
    let phi2_t = maps.phi2.transposed(super::MapName::Custom("phi2^t".into()));
    for i in 1..=n {
        for j in 1..=n {
            let image = res.apply(&phi2_t, &ModuleVector::basis(rank, slot(n, i, j)))?;
            let diff = image.sub(maps.elements.l(j, i));
            out.record(None, format!("phi2^t(e{i}{j}) - l{j}{i}"), vector_residue(res, &diff));
        }
    }
    Ok(out)
}

/// Dimensions of `φ̃3` restricted to `M_n F_{<= d}` over the free word basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InjectivityReport {
    pub n: usize,
    pub degree: usize,
    pub columns: usize,
    pub rows: usize,
    pub rank: usize,
    pub kernel_dim: usize,
}

pub fn phi3tilde_injectivity(n: usize, d: usize, limits: OracleLimits) -> Result<InjectivityReport> {
    if n == 0 {
        return Err(crate::Error::ZeroDimension);
    }
    let size = n * n;
    let targets: usize = (0..=d + 1).map(|k| size.saturating_pow(k as u32)).fold(0, usize::saturating_add);
    limits.check("phi3tilde matrix", targets)?;
    let alphabet = Alphabet::matrix(n);
    let maps = StandardMaps::new(&alphabet)?;
    let sources = Word::all_up_to(size, d);
    let target_words = Word::all_up_to(size, d + 1);
    let index: HashMap<&Word, usize> = target_words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut m = RationalMatrix::zeros(target_words.len(), sources.len() * size);
    let mut col = 0;
    for w in &sources {
        for e in 0..size {
            let image = Polynomial::word(w.clone()) * maps.phi3.entry(e, 0).clone();
            for (word, c) in image.terms() {
                m.set(index[word], col, c.clone());
            }
            col += 1;
        }
    }
    let r = rank(&m);
    Ok(InjectivityReport {
        n,
        degree: d,
        columns: m.cols(),
        rows: m.rows(),
        rank: r,
        kernel_dim: m.cols() - r,
    })
}

fn reduce_legs(res: &Resolution, t: &TensorPolynomial) -> TensorPolynomial {
    let mut t = t.clone();
    for leg in 0..t.legs() {
        t = t.map_leg(leg, |w| res.basis().normal_form(&Polynomial::word(w.clone())));
    }
    t
}

fn tensor_residue(res: &Resolution, t: &TensorPolynomial) -> Option<String> {
    if t.is_zero() {
        return None;
    }
    let a = res.alphabet();
    let text = t
        .terms()
        .map(|(ws, c)| {
            let legs: Vec<String> = ws.iter().map(|w| w.display(a).to_string()).collect();
            format!("{c}*[{}]", legs.join(" (x) "))
        })
        .collect::<Vec<_>>()
        .join(" + ");
    Some(text)
}

/// Hopf structure: `S² = id` and the anti-homomorphism law on seeded random
/// words, coassociativity and counit axioms on generators, and descent of
/// `Δ` and `S` to the quotient.
pub fn verify_hopf(res: &Resolution, seed: u64, samples: usize) -> Result<CheckResult> {
    let n = res.n();
    let hopf: Hopf<'_> = res.hopf();
    let alphabet = res.alphabet();
    let size = alphabet.len();
    let mut out = CheckResult::new("hopf", n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let v = random_word(&mut rng, size, 6);
        let w = random_word(&mut rng, size, 6);
        let twice = hopf.antipode_word(&hopf.antipode_word(&v));
        let residue = (twice != v).then(|| twice.display(alphabet).to_string());
        out.record(None, format!("S^2({})", v.display(alphabet)), residue);
        let lhs = hopf.antipode_word(&v.concat(&w));
        let rhs = hopf.antipode_word(&w).concat(&hopf.antipode_word(&v));
        let residue = (lhs != rhs).then(|| lhs.display(alphabet).to_string());
        out.record(None, format!("S({}*{})", v.display(alphabet), w.display(alphabet)), residue);
    }
    for g in alphabet.generators() {
        let name = alphabet.name(g).to_string();
        let delta = hopf.coproduct_generator(g);
        let left = delta.expand_leg(0, 2, |w| hopf.coproduct_word(w));
        let right = delta.expand_leg(1, 2, |w| hopf.coproduct_word(w));
        let mut diff = left.clone();
        diff.add_scaled(&-num_traits::one::<crate::algebra::Rational>(), &right);
        out.record(None, format!("coassociativity({name})"), tensor_residue(res, &diff));
        let x = Polynomial::generator(g);
        for leg in 0..2 {
            let contracted = delta.contract_leg(leg, |w| hopf.counit_word(w)).to_polynomial().expect("one leg");
            let diff = contracted - x.clone();
            let residue = (!diff.is_zero()).then(|| diff.display(alphabet).to_string());
            out.record(None, format!("counit-leg{leg}({name})"), residue);
        }
    }
    for rel in ao_relations(alphabet)? {
        let delta = reduce_legs(res, &hopf.coproduct(&rel.poly));
        out.record(None, format!("coproduct({})", rel.tag), tensor_residue(res, &delta));
        let s = hopf.antipode(&rel.poly);
        out.record(None, format!("antipode({})", rel.tag), poly_residue(res, &s));
    }
    Ok(out)
}
