use std::fmt;

use crate::algebra::{Alphabet, Hopf, Polynomial};

/// Position of `e_ij` (1-based) in a rank-`n²` module.
pub fn slot(n: usize, i: usize, j: usize) -> usize {
    (i - 1) * n + (j - 1)
}

/// An element of a free module `A^rank`, one polynomial per basis generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleVector {
    components: Vec<Polynomial>,
}

impl ModuleVector {
    pub fn zero(rank: usize) -> Self {
        ModuleVector { components: vec![Polynomial::zero(); rank] }
    }

    pub fn basis(rank: usize, index: usize) -> Self {
        let mut v = ModuleVector::zero(rank);
        v.components[index] = Polynomial::one();
        v
    }

    pub fn from_components(components: Vec<Polynomial>) -> Self {
        ModuleVector { components }
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn component(&self, index: usize) -> &Polynomial {
        &self.components[index]
    }

    pub fn component_mut(&mut self, index: usize) -> &mut Polynomial {
        &mut self.components[index]
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }

    /// Filtration degree: the largest component degree.
    pub fn degree(&self) -> Option<usize> {
        self.components.iter().filter_map(Polynomial::degree).max()
    }

    pub fn map(&self, f: impl Fn(&Polynomial) -> Polynomial) -> ModuleVector {
        ModuleVector { components: self.components.iter().map(f).collect() }
    }

    /// `a · self`
    pub fn left_mul(&self, a: &Polynomial) -> ModuleVector {
        self.map(|p| a * p)
    }

    /// `self · a`, componentwise (right-module action).
    pub fn right_mul(&self, a: &Polynomial) -> ModuleVector {
        self.map(|p| p * a)
    }

    pub fn add(&self, other: &ModuleVector) -> ModuleVector {
        assert_eq!(self.rank(), other.rank(), "rank mismatch");
        ModuleVector {
            components: self.components.iter().zip(&other.components).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &ModuleVector) -> ModuleVector {
        assert_eq!(self.rank(), other.rank(), "rank mismatch");
        ModuleVector {
            components: self.components.iter().zip(&other.components).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn add_assign(&mut self, other: &ModuleVector) {
        assert_eq!(self.rank(), other.rank(), "rank mismatch");
        for (a, b) in self.components.iter_mut().zip(&other.components) {
            *a = &*a + b;
        }
    }

    /// `Σ_ij component_ij · e_ij` in canonical syntax.
    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        VectorDisplay { v: self, alphabet }
    }
}

struct VectorDisplay<'a> {
    v: &'a ModuleVector,
    alphabet: &'a Alphabet,
}

impl fmt::Display for VectorDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.v.is_zero() {
            return write!(f, "0");
        }
        let rank = self.v.rank();
        let n = self.alphabet.matrix_dim().unwrap_or(0);
        let mut first = true;
        for (k, p) in self.v.components.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let name = generator_name(n, rank, k);
            write!(f, "({})*{name}", p.display(self.alphabet))?;
        }
        Ok(())
    }
}

/// `e_ij` for rank `n²`, `1` for rank one, `e[k]` otherwise.
pub fn generator_name(n: usize, rank: usize, k: usize) -> String {
    if rank == 1 {
        "1".to_string()
    } else if rank == n * n && n > 0 {
        format!("e{}{}", k / n + 1, k % n + 1)
    } else {
        format!("e[{k}]")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MapName {
    Phi1,
    Phi2,
    Phi3,
    Epsilon,
    Custom(String),
}

impl fmt::Display for MapName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MapName::Phi1 => write!(f, "phi1"),
            MapName::Phi2 => write!(f, "phi2"),
            MapName::Phi3 => write!(f, "phi3"),
            MapName::Epsilon => write!(f, "epsilon"),
            MapName::Custom(s) => write!(f, "{s}"),
        }
    }
}

/// Codomain of a module map.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Free(usize),
    /// The trivial module `Q`, on which `A` acts through the counit.
    Trivial,
}

/// An `A`-linear map given by the images of the source generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMap {
    pub name: MapName,
    pub target: Target,
    pub images: Vec<ModuleVector>,
}

impl ModuleMap {
    pub fn source_rank(&self) -> usize {
        self.images.len()
    }

    pub fn target_rank(&self) -> usize {
        match self.target {
            Target::Free(r) => r,
            Target::Trivial => 1,
        }
    }

    /// Upper bound on how much the map raises filtration degree.
    pub fn degree_raise(&self) -> usize {
        self.images.iter().filter_map(ModuleVector::degree).max().unwrap_or(0)
    }

    /// Matrix over the free algebra: `entry(src, dst)` is the coefficient of
    /// `e_dst` in the image of `e_src`.
    pub fn entry(&self, src: usize, dst: usize) -> &Polynomial {
        self.images[src].component(dst)
    }

    /// The map whose matrix is the transpose of this one, entries unchanged.
    pub fn transposed(&self, name: MapName) -> ModuleMap {
        let target_rank = self.target_rank();
        let images = (0..target_rank)
            .map(|t| {
                ModuleVector::from_components(
                    (0..self.source_rank()).map(|s| self.entry(s, t).clone()).collect(),
                )
            })
            .collect();
        ModuleMap { name, target: Target::Free(self.source_rank()), images }
    }

    /// `Σ_e v_e · map(e)` in the free algebra, without reduction.
    pub fn apply_free(&self, v: &ModuleVector, hopf: Hopf<'_>) -> ModuleVector {
        let mut out = ModuleVector::zero(self.target_rank());
        for (e, coeff) in v.components().iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            match self.target {
                Target::Free(_) => out.add_assign(&self.images[e].left_mul(coeff)),
                Target::Trivial => {
                    let scalar = hopf.counit(coeff) * hopf.counit(self.images[e].component(0));
                    out.add_assign(&ModuleVector::from_components(vec![Polynomial::constant(scalar)]));
                }
            }
        }
        out
    }

    /// `Σ_e map(e) · v_e`: the same matrix acting on a right module.
    pub fn apply_free_right(&self, v: &ModuleVector, hopf: Hopf<'_>) -> ModuleVector {
        let mut out = ModuleVector::zero(self.target_rank());
        for (e, coeff) in v.components().iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            match self.target {
                Target::Free(_) => out.add_assign(&self.images[e].right_mul(coeff)),
                Target::Trivial => {
                    let scalar = hopf.counit(self.images[e].component(0)) * hopf.counit(coeff);
                    out.add_assign(&ModuleVector::from_components(vec![Polynomial::constant(scalar)]));
                }
            }
        }
        out
    }
}
