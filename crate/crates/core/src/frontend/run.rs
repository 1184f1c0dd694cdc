use std::sync::Arc;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::report::CheckEntry;
use super::{Check, Report, RunConfig};
use crate::rewriting::{ao_filtration_dim_oracle, BasisDocument, OracleLimits};
use crate::resolution::{
    phi3tilde_injectivity, random_vector, scalar_homology, verify_comput1, verify_complex, verify_duality,
    verify_hopf, verify_phi3tilde_images, CheckResult, Resolution,
};
use crate::{Error, Result};

fn staged<T>(stage: &str, r: Result<T>) -> Result<T> {
    r.map_err(|e| Error::Stage { stage: stage.to_string(), source: Box::new(e) })
}

/// Runs the selected checks in a fixed order. Given the same config the
/// report is byte-identical apart from `timings`.
pub fn run(config: &RunConfig) -> Result<Report> {
    config.validate()?;
    let mut report = Report::new(config.clone());
    let mut resolution: Option<Arc<Resolution>> = None;
    if config.checks.iter().any(|c| c.needs_basis()) {
        let res = staged("gb", Resolution::new(config.n, config.degree))?;
        resolution = Some(Arc::new(res));
    }
    let mut checks = config.checks.clone();
    checks.sort();
    checks.dedup();
    for check in checks {
        let start = Instant::now();
        let entry = staged(check.name(), run_check(check, config, resolution.as_deref()))?;
        report.push(entry, start.elapsed().as_secs_f64() * 1000.0);
    }
    Ok(report)
}

fn check_entry(check: Check, result: &CheckResult) -> Result<CheckEntry> {
    let summary = json!({ "checked": result.checked, "failures": result.failures.len() });
    Ok(CheckEntry::new(check, result.passed, summary, serde_json::to_value(result)?))
}

fn run_check(check: Check, config: &RunConfig, res: Option<&Resolution>) -> Result<CheckEntry> {
    let n = config.n;
    let res = || res.expect("basis computed for this check");
    match check {
        Check::Gb => {
            let basis = res().basis();
            let unresolved = basis.unresolved_ambiguities().len();
            let counts = basis.normal_word_counts(basis.complete_to())?;
            let summary = json!({
                "rules": basis.rules().len(),
                "derived": basis.derived().len(),
                "complete_to": basis.complete_to(),
                "skipped_total": basis.skipped_total(),
                "unresolved": unresolved,
                "normal_word_counts": counts,
            });
            let doc = serde_json::to_value(BasisDocument::from_basis(basis))?;
            Ok(CheckEntry::new(check, unresolved == 0, summary, doc))
        }
        Check::VerifyComplex => check_entry(check, &verify_complex(res())?),
        Check::Comput1 => check_entry(check, &verify_comput1(res())?),
        Check::Duality => check_entry(check, &verify_duality(res())?),
        Check::Hopf => check_entry(check, &verify_hopf(res(), config.seed, config.samples)?),
        Check::Injectivity => {
            let d = config.degree.saturating_sub(1);
            let kernel = phi3tilde_injectivity(n, d, OracleLimits::from_env())?;
            let images = verify_phi3tilde_images(&Resolution::new(n, 2)?);
            let ok = kernel.kernel_dim == 0 && images.passed;
            let summary = json!({ "degree": d, "kernel_dim": kernel.kernel_dim, "images_checked": images.checked });
            let witness = json!({ "matrix": kernel, "images": images });
            Ok(CheckEntry::new(check, ok, summary, witness))
        }
        Check::Homology => {
            let h = scalar_homology(n)?;
            let half = n * (n - 1) / 2;
            let ok = h.dims == [1, half, half, 1]
                && h.euler == 0
                && h.compositions_vanish
                && h.kernel_phi2_is_skew
                && h.image_phi2_is_symmetric;
            let summary = json!({ "dims": h.dims, "euler": h.euler });
            Ok(CheckEntry::new(check, ok, summary, serde_json::to_value(&h)?))
        }
        Check::Exactness => {
            let r = res().exactness_report(config.window(), config.margin)?;
            let summary = json!({
                "degree": r.degree,
                "margin": r.margin,
                "kernel_dims": r.positions.iter().map(|p| (p.position.clone(), p.kernel_dim)).collect::<std::collections::BTreeMap<_, _>>(),
                "uncovered": r.positions.iter().map(|p| p.uncovered.len()).sum::<usize>(),
            });
            Ok(CheckEntry::new(check, r.passed, summary, serde_json::to_value(&r)?))
        }
        Check::Dual => {
            let r = res().dual_complex_report(config.window(), config.margin)?;
            let summary = json!({ "degree": r.degree, "margin": r.margin, "dims": r.dims });
            Ok(CheckEntry::new(check, r.passed, summary, serde_json::to_value(&r)?))
        }
        Check::Hilbert => {
            let d = config.window().min(res().basis().complete_to());
            let counts = res().basis().normal_word_counts(d)?;
            let cumulative: Vec<usize> = counts
                .iter()
                .scan(0, |acc, c| {
                    *acc += c;
                    Some(*acc)
                })
                .collect();
            let limits = OracleLimits::from_env();
            let mut oracle = Vec::new();
            for k in 0..=d {
                match ao_filtration_dim_oracle(n, k, limits) {
                    Ok(v) => oracle.push(Value::from(v)),
                    Err(Error::ResourceLimit { .. }) => oracle.push(Value::Null),
                    Err(e) => return Err(e),
                }
            }
            let ok = oracle.iter().zip(&cumulative).all(|(o, c)| o.as_u64().is_none_or(|o| o == *c as u64));
            let compared = oracle.iter().filter(|o| !o.is_null()).count();
            let summary = json!({ "degree": d, "counts": counts, "oracle_compared": compared });
            let witness = json!({ "counts": counts, "cumulative": cumulative, "oracle": oracle });
            Ok(CheckEntry::new(check, ok, summary, witness))
        }
        Check::Preimages => preimages(config, res()),
    }
}

/// Round trips of the constructive preimages: `counit_preimage` on every
/// normal word up to degree 4 and `phi2_preimage` on seeded `φ2(v)`.
fn preimages(config: &RunConfig, res: &Resolution) -> Result<CheckEntry> {
    let top = res.basis().complete_to();
    let word_degree = top.min(4);
    let words = res.basis().normal_words(word_degree)?;
    let mut counit_ok = 0;
    let mut witnesses = Vec::new();
    for w in &words {
        let a = crate::algebra::Polynomial::word(w.clone());
        if let Ok(b) = res.counit_preimage(&a) {
            counit_ok += 1;
            witnesses.push(json!([w.display(res.alphabet()).to_string(), b.display(res.alphabet()).to_string()]));
        }
    }
    let v_degree = top.saturating_sub(2).min(3);
    let v_words = res.basis().normal_words(v_degree)?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let rank = res.n() * res.n();
    let mut phi2_ok = 0;
    let mut max_degree = None;
    let mut phi2_witnesses = Vec::new();
    for _ in 0..config.samples {
        let v = random_vector(&mut rng, rank, &v_words, 3);
        let a = res.apply(&res.maps().phi2, &v)?;
        if let Ok(b) = res.phi2_preimage(&a) {
            phi2_ok += 1;
            max_degree = max_degree.max(b.witness_degree);
            phi2_witnesses.push(b.preimage.display(res.alphabet()).to_string());
        }
    }
    let ok = counit_ok == words.len() && phi2_ok == config.samples;
    let summary = json!({
        "counit_degree": word_degree,
        "counit_words": words.len(),
        "counit_round_trips": counit_ok,
        "phi2_input_degree": v_degree,
        "phi2_samples": config.samples,
        "phi2_round_trips": phi2_ok,
        "phi2_max_witness_degree": max_degree,
    });
    let witness = json!({ "counit": witnesses, "phi2": phi2_witnesses });
    Ok(CheckEntry::new(Check::Preimages, ok, summary, witness))
}
