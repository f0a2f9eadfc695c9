use std::fmt;

use serde::{Deserialize, Serialize};

use super::rational::Rational;

/// Coordinate basis of a lattice vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Basis {
    /// Coefficients `b_i` over the simple roots `α_i`.
    Root,
    /// Coefficients `a_i` over the fundamental weights `ω_i`.
    Weight,
}

/// Integer coefficient vector in the root or weight basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticeVector {
    pub coeffs: Vec<i64>,
    pub basis: Basis,
}

impl LatticeVector {
    pub fn weight(coeffs: impl Into<Vec<i64>>) -> Self {
        Self {
            coeffs: coeffs.into(),
            basis: Basis::Weight,
        }
    }

    pub fn root(coeffs: impl Into<Vec<i64>>) -> Self {
        Self {
            coeffs: coeffs.into(),
            basis: Basis::Root,
        }
    }

    pub fn zero(rank: usize, basis: Basis) -> Self {
        Self {
            coeffs: vec![0; rank],
            basis,
        }
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        let tag = match self.basis {
            Basis::Root => "α",
            Basis::Weight => "ω",
        };
        write!(f, "({}){tag}", body.join(","))
    }
}

/// Result of converting a vector between bases. Weight-to-root conversion can
/// leave the integers, in which case `integral` is false.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvertedVector {
    pub coeffs: Vec<Rational>,
    pub basis: Basis,
    pub integral: bool,
}

impl ConvertedVector {
    /// The integer vector, if every coefficient is an integer.
    pub fn to_lattice(&self) -> Option<LatticeVector> {
        if !self.integral {
            return None;
        }
        Some(LatticeVector {
            coeffs: self.coeffs.iter().map(|c| c.to_integer()).collect(),
            basis: self.basis,
        })
    }
}
