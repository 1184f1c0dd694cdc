use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    Gb,
    VerifyComplex,
    Comput1,
    Duality,
    Injectivity,
    Homology,
    Exactness,
    Dual,
    Hilbert,
    Hopf,
    Preimages,
}

impl Check {
    pub const ALL: [Check; 11] = [
        Check::Gb,
        Check::VerifyComplex,
        Check::Comput1,
        Check::Duality,
        Check::Injectivity,
        Check::Homology,
        Check::Exactness,
        Check::Dual,
        Check::Hilbert,
        Check::Hopf,
        Check::Preimages,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Gb => "gb",
            Check::VerifyComplex => "verify-complex",
            Check::Comput1 => "comput1",
            Check::Duality => "duality",
            Check::Injectivity => "injectivity",
            Check::Homology => "homology",
            Check::Exactness => "exactness",
            Check::Dual => "dual",
            Check::Hilbert => "hilbert",
            Check::Hopf => "hopf",
            Check::Preimages => "preimages",
        }
    }

    /// Whether the check needs the completed basis.
    pub fn needs_basis(self) -> bool {
        !matches!(self, Check::Homology | Check::Injectivity)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = match s {
            "complex" => "verify-complex",
            other => other,
        };
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown check `{s}`")))
    }
}

/// Everything that determines a run; echoed into every report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub n: usize,
    /// Degree bound for Gröbner completion.
    pub degree: usize,
    /// Filtration degree for exactness, duality and Hilbert counts;
    /// defaults to `degree - 1`.
    pub window: Option<usize>,
    pub margin: usize,
    pub seed: u64,
    /// Number of random samples for property checks.
    pub samples: usize,
    pub checks: Vec<Check>,
    pub output: Option<PathBuf>,
}

impl RunConfig {
    pub const DEFAULT_MARGIN: usize = 2;
    pub const DEFAULT_SAMPLES: usize = 100;

    pub fn new(n: usize, degree: usize, checks: Vec<Check>) -> Self {
        RunConfig {
            n,
            degree,
            window: None,
            margin: Self::DEFAULT_MARGIN,
            seed: 0,
            samples: Self::DEFAULT_SAMPLES,
            checks,
            output: None,
        }
    }

    pub fn window(&self) -> usize {
        self.window.unwrap_or(self.degree.saturating_sub(1))
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::ZeroDimension);
        }
        if self.checks.is_empty() {
            return Err(Error::Precondition("no checks selected".into()));
        }
        let needs_complex = self
            .checks
            .iter()
            .any(|c| matches!(c, Check::VerifyComplex | Check::Comput1 | Check::Duality | Check::Preimages));
        if needs_complex && self.degree < 3 {
            return Err(Error::Precondition(format!("degree bound {} is below 3", self.degree)));
        }
        if self.checks.iter().any(|c| c.needs_basis()) && self.degree < 2 {
            return Err(Error::Precondition("degree bound must be at least 2".into()));
        }
        let windowed = self.checks.iter().any(|c| matches!(c, Check::Exactness | Check::Dual));
        if windowed && self.window() + 1 > self.degree {
            return Err(Error::Precondition(format!(
                "window {} needs a basis certified to degree {}",
                self.window(),
                self.window() + 1
            )));
        }
        if windowed && self.margin > self.window() {
            return Err(Error::Precondition(format!("margin {} exceeds window {}", self.margin, self.window())));
        }
        if self.checks.contains(&Check::Hilbert) && self.window() > self.degree {
            return Err(Error::Precondition("hilbert window exceeds the degree bound".into()));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_names_round_trip() {
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
            assert_eq!(serde_json::to_string(&c).unwrap(), format!("\"{}\"", c.name()));
        }
        assert_eq!("complex".parse::<Check>().unwrap(), Check::VerifyComplex);
        assert!("nope".parse::<Check>().is_err());
    }

    #[test]
    fn validation() {
        assert!(RunConfig::new(2, 3, vec![Check::VerifyComplex]).validate().is_ok());
        assert!(RunConfig::new(2, 2, vec![Check::VerifyComplex]).validate().is_err());
        assert!(RunConfig::new(0, 3, vec![Check::Homology]).validate().is_err());
        assert!(RunConfig::new(2, 3, vec![]).validate().is_err());
        let mut c = RunConfig::new(2, 5, vec![Check::Exactness]);
        c.window = Some(5);
        assert!(c.validate().is_err());
        c.window = Some(4);
        assert!(c.validate().is_ok());
    }
}
