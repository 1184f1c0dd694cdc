use std::collections::HashMap;

use num_traits::Zero;
use serde::Serialize;

use super::module::{MapName, ModuleMap, ModuleVector};
use super::Resolution;
use crate::algebra::{Polynomial, Rational, Word};
use crate::linalg::{kernel_basis, rank, RationalMatrix, SparseVector, SpanSolver};
use crate::{Error, Result};

/// `(F_d)^slots` over the normal-word basis, coordinates slot-major.
struct Space {
    slots: usize,
    words: Vec<Word>,
    index: HashMap<Word, usize>,
}

impl Space {
    fn new(res: &Resolution, slots: usize, degree: usize) -> Result<Self> {
        let words = res.basis().normal_words(degree)?;
        let index = words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        Ok(Space { slots, words, index })
    }

    fn dim(&self) -> usize {
        self.slots * self.words.len()
    }

    fn coords(&self, v: &ModuleVector) -> Result<SparseVector> {
        let mut out = SparseVector::new();
        for (s, p) in v.components().iter().enumerate() {
            for (w, c) in p.terms() {
                let i = self.index.get(w).ok_or_else(|| {
                    Error::SelfCheck(format!("word of degree {} outside the truncated space", w.degree()))
                })?;
                out.insert(s * self.words.len() + i, c.clone());
            }
        }
        Ok(out)
    }

    fn vector(&self, x: &[Rational]) -> ModuleVector {
        let mut v = ModuleVector::zero(self.slots);
        for (k, c) in x.iter().enumerate() {
            if !c.is_zero() {
                let (s, i) = (k / self.words.len(), k % self.words.len());
                v.component_mut(s).add_term(self.words[i].clone(), c.clone());
            }
        }
        v
    }

    fn basis_vector(&self, k: usize) -> ModuleVector {
        let (s, i) = (k / self.words.len(), k % self.words.len());
        let mut v = ModuleVector::zero(self.slots);
        *v.component_mut(s) = Polynomial::word(self.words[i].clone());
        v
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    Left,
    Right,
}

fn map_matrix(res: &Resolution, map: &ModuleMap, side: Side, src: &Space, tgt: &Space) -> Result<RationalMatrix> {
    let mut columns = Vec::with_capacity(src.dim());
    for k in 0..src.dim() {
        let v = src.basis_vector(k);
        let image = match side {
            Side::Left => res.apply(map, &v)?,
            Side::Right => res.apply_right(map, &v)?,
        };
        columns.push(tgt.coords(&image)?);
    }
    Ok(RationalMatrix::from_columns(tgt.dim(), &columns))
}

/// Kernel versus image at one position of a truncated complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PositionReport {
    pub position: String,
    pub provenance: String,
    pub kernel_degree: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub image_degree: Option<usize>,
    pub source_dim: usize,
    pub kernel_dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub image_rank: Option<usize>,
    pub covered: usize,
    pub uncovered: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub constructive_witnesses: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_witness_degree: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cross_validated: Option<bool>,
    pub status: String,
}

impl PositionReport {
    pub fn passed(&self) -> bool {
        self.status == "pass"
    }
}

struct Position<'a> {
    name: &'a str,
    provenance: &'a str,
    side: Side,
    map: &'a ModuleMap,
    source_slots: usize,
    target_slots: usize,
    /// `None` for the trivial module
    target_degree_shift: Option<usize>,
    kernel_degree: usize,
    image: Option<(&'a ModuleMap, usize)>,
}

struct Analysis {
    report: PositionReport,
    kernel: Vec<ModuleVector>,
    covered_flags: Vec<bool>,
}

fn analyze(res: &Resolution, p: Position<'_>, image_degree: usize) -> Result<Analysis> {
    let src = Space::new(res, p.source_slots, p.kernel_degree)?;
    let tgt = match p.target_degree_shift {
        Some(shift) => Space::new(res, p.target_slots, p.kernel_degree + shift)?,
        None => Space::new(res, 1, 0)?,
    };
    let m = map_matrix(res, p.map, p.side, &src, &tgt)?;
    let kernel: Vec<ModuleVector> = kernel_basis(&m).iter().map(|x| src.vector(x)).collect();
    let mut covered_flags = vec![false; kernel.len()];
    let mut image_rank = None;
    if let Some((next, next_slots)) = p.image {
        let image_src = Space::new(res, next_slots, image_degree)?;
        let image_tgt = Space::new(res, p.source_slots, image_degree + 1)?;
        let solver = SpanSolver::new(&map_matrix(res, next, p.side, &image_src, &image_tgt)?);
        image_rank = Some(solver.rank());
        for (flag, v) in covered_flags.iter_mut().zip(&kernel) {
            *flag = solver.solve(&image_tgt.coords(v)?).is_some();
        }
    }
    let covered = covered_flags.iter().filter(|&&f| f).count();
    let uncovered: Vec<String> = kernel
        .iter()
        .zip(&covered_flags)
        .filter(|(_, &f)| !f)
        .map(|(v, _)| v.display(res.alphabet()).to_string())
        .collect();
    let status = if uncovered.is_empty() { "pass" } else { "margin-insufficient" };
    let report = PositionReport {
        position: p.name.to_string(),
        provenance: p.provenance.to_string(),
        kernel_degree: p.kernel_degree,
        image_degree: p.image.map(|_| image_degree),
        source_dim: src.dim(),
        kernel_dim: kernel.len(),
        image_rank,
        covered,
        uncovered,
        constructive_witnesses: None,
        max_witness_degree: None,
        cross_validated: None,
        status: status.to_string(),
    };
    Ok(Analysis { report, kernel, covered_flags })
}

/// Truncated exactness of the resolution at `ε`, `φ3`, `φ2` and `φ1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactnessReport {
    pub n: usize,
    pub degree: usize,
    pub margin: usize,
    pub complete_to: usize,
    pub positions: Vec<PositionReport>,
    pub passed: bool,
}

fn check_window(res: &Resolution, d: usize, margin: usize) -> Result<usize> {
    res.basis().check_degree(d + 1)?;
    d.checked_sub(margin)
        .ok_or_else(|| Error::Precondition(format!("margin {margin} exceeds degree {d}")))
}

impl Resolution {
    /// Kernels on `F_{d-margin}` against images from `F_d`. Positions `ε`
    /// and `φ3` are also covered by the constructive preimages, which are
    /// cross-checked against the linear algebra.
    pub fn exactness_report(&self, d: usize, margin: usize) -> Result<ExactnessReport> {
        let low = check_window(self, d, margin)?;
        let maps = self.maps();
        let sq = self.n() * self.n();

        let mut eps = analyze(
            self,
            Position {
                name: "epsilon",
                provenance: "constructive",
                side: Side::Left,
                map: &maps.epsilon,
                source_slots: 1,
                target_slots: 1,
                target_degree_shift: None,
                kernel_degree: low,
                image: Some((&maps.phi3, sq)),
            },
            d,
        )?;
        let mut witnesses = 0;
        let mut max_degree = None;
        for (v, &covered) in eps.kernel.iter().zip(&eps.covered_flags) {
            let b = self.counit_preimage(v.component(0))?;
            max_degree = max_degree.max(b.degree());
            if covered && b.degree().is_none_or(|k| k <= d) {
                witnesses += 1;
            }
        }
        eps.report.constructive_witnesses = Some(witnesses);
        eps.report.max_witness_degree = max_degree;
        eps.report.cross_validated = Some(witnesses == eps.kernel.len());

        let mut phi3 = analyze(
            self,
            Position {
                name: "phi3",
                provenance: "constructive",
                side: Side::Left,
                map: &maps.phi3,
                source_slots: sq,
                target_slots: 1,
                target_degree_shift: Some(1),
                kernel_degree: low,
                image: Some((&maps.phi2, sq)),
            },
            d,
        )?;
        let mut witnesses = 0;
        let mut max_degree = None;
        for (v, &covered) in phi3.kernel.iter().zip(&phi3.covered_flags) {
            let b = self.phi2_preimage(v)?;
            max_degree = max_degree.max(b.witness_degree);
            if covered {
                witnesses += 1;
            }
        }
        phi3.report.constructive_witnesses = Some(witnesses);
        phi3.report.max_witness_degree = max_degree;
        phi3.report.cross_validated = Some(witnesses == phi3.kernel.len());

        let phi2 = analyze(
            self,
            Position {
                name: "phi2",
                provenance: "empirical",
                side: Side::Left,
                map: &maps.phi2,
                source_slots: sq,
                target_slots: sq,
                target_degree_shift: Some(1),
                kernel_degree: low,
                image: Some((&maps.phi1, 1)),
            },
            d,
        )?;
        let phi1 = analyze(
            self,
            Position {
                name: "phi1",
                provenance: "injectivity",
                side: Side::Left,
                map: &maps.phi1,
                source_slots: 1,
                target_slots: sq,
                target_degree_shift: Some(1),
                kernel_degree: d,
                image: None,
            },
            d,
        )?;
        let positions: Vec<PositionReport> =
            [eps, phi3, phi2, phi1].into_iter().map(|a| a.report).collect();
        let passed = positions.iter().all(|p| p.passed())
            && positions.iter().all(|p| p.cross_validated != Some(false));
        Ok(ExactnessReport {
            n: self.n(),
            degree: d,
            margin,
            complete_to: self.basis().complete_to(),
            positions,
            passed,
        })
    }

    /// The transposed-matrix complex `A -> M_n A -> M_n A -> A` of right
    /// modules, analysed like [`Resolution::exactness_report`].
    pub fn dual_complex_report(&self, d: usize, margin: usize) -> Result<CohomologyReport> {
        let low = check_window(self, d, margin)?;
        let maps = self.maps();
        let sq = self.n() * self.n();
        let d0 = maps.phi3.transposed(MapName::Custom("phi3^t".into()));
        let d1 = maps.phi2.transposed(MapName::Custom("phi2^t".into()));
        let d2 = maps.phi1.transposed(MapName::Custom("phi1^t".into()));

        let h0 = analyze(
            self,
            Position {
                name: "H0",
                provenance: "empirical",
                side: Side::Right,
                map: &d0,
                source_slots: 1,
                target_slots: sq,
                target_degree_shift: Some(1),
                kernel_degree: low,
                image: None,
            },
            d,
        )?;
        let h1 = analyze(
            self,
            Position {
                name: "H1",
                provenance: "empirical",
                side: Side::Right,
                map: &d1,
                source_slots: sq,
                target_slots: sq,
                target_degree_shift: Some(1),
                kernel_degree: low,
                image: Some((&d0, 1)),
            },
            d,
        )?;
        let h2 = analyze(
            self,
            Position {
                name: "H2",
                provenance: "empirical",
                side: Side::Right,
                map: &d2,
                source_slots: sq,
                target_slots: 1,
                target_degree_shift: Some(1),
                kernel_degree: low,
                image: Some((&d1, sq)),
            },
            d,
        )?;

        // H3: dim(F_low + im d2) - dim(im d2) inside F_{d+1}
        let src = Space::new(self, sq, d)?;
        let tgt = Space::new(self, 1, d + 1)?;
        let image = map_matrix(self, &d2, Side::Right, &src, &tgt)?;
        let image_rank = rank(&image);
        let mut columns = image.columns();
        let low_words = self.basis().normal_words(low)?;
        for w in &low_words {
            columns.push(tgt.coords(&ModuleVector::from_components(vec![Polynomial::word(w.clone())]))?);
        }
        let top = rank(&RationalMatrix::from_columns(tgt.dim(), &columns)) - image_rank;
        let hopf = self.hopf();
        let counit_kills_image = (0..image.cols()).all(|j| {
            let v = tgt.vector(&dense(&image.column(j), tgt.dim()));
            hopf.counit(v.component(0)).is_zero()
        });

        let reversed = (0..sq).all(|s| {
            let a = self.basis().normal_form(d0.entry(0, s));
            let b = self.basis().normal_form(maps.phi1.entry(0, s));
            let c = self.basis().normal_form(d2.entry(s, 0));
            let e = self.basis().normal_form(maps.phi3.entry(s, 0));
            let sym = (0..sq).all(|t| {
                self.basis().normal_form(d1.entry(s, t)) == self.basis().normal_form(maps.phi2.entry(s, t))
            });
            a == b && c == e && sym
        });

        let positions: Vec<PositionReport> = [h0, h1, h2].into_iter().map(|a| a.report).collect();
        let dims = [
            positions[0].kernel_dim,
            positions[1].uncovered.len(),
            positions[2].uncovered.len(),
            top,
        ];
        let passed = dims == [0, 0, 0, 1] && counit_kills_image;
        Ok(CohomologyReport {
            n: self.n(),
            degree: d,
            margin,
            complete_to: self.basis().complete_to(),
            dims,
            top_image_rank: image_rank,
            counit_kills_top_image: counit_kills_image,
            matches_reversed_original: reversed,
            positions,
            passed,
        })
    }
}

fn dense(v: &SparseVector, len: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); len];
    for (&i, c) in v {
        out[i] = c.clone();
    }
    out
}

/// Truncated cohomology of the transposed complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyReport {
    pub n: usize,
    pub degree: usize,
    pub margin: usize,
    pub complete_to: usize,
    /// `H^0 .. H^3`; lower degrees count uncovered kernel vectors.
    pub dims: [usize; 4],
    pub top_image_rank: usize,
    pub counit_kills_top_image: bool,
    pub matches_reversed_original: bool,
    pub positions: Vec<PositionReport>,
    pub passed: bool,
}
