use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::coxeter::{Family, GroupId, LatticeVector, RootSystemData};
use crate::error::{Error, Result};

/// Point budget used when none is configured.
pub const DEFAULT_POINT_BUDGET: u64 = 50_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LatticeKind {
    Root,
    Weight,
}

impl fmt::Display for LatticeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LatticeKind::Root => "root",
            LatticeKind::Weight => "weight",
        })
    }
}

impl FromStr for LatticeKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "root" => Ok(LatticeKind::Root),
            "weight" => Ok(LatticeKind::Weight),
            other => Err(Error::InvalidArgument(format!("unknown lattice kind {other:?}"))),
        }
    }
}

/// Integer basis whose `[-N, N]^n` box is enumerated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generators {
    /// `Σ b_i α_i`.
    SimpleRoots,
    /// `Σ a_i ω_i`.
    FundamentalWeights,
    /// `Σ_{i<n} a_i ω_i + 2 a_n ω_n`: the root lattice of `B_n` written in
    /// weight coordinates (even last coordinate).
    EvenLastWeight,
}

impl Generators {
    /// Generators spanning `kind` as stated: simple roots for the root
    /// lattice, fundamental weights for the weight lattice.
    pub fn standard(kind: LatticeKind) -> Self {
        match kind {
            LatticeKind::Root => Generators::SimpleRoots,
            LatticeKind::Weight => Generators::FundamentalWeights,
        }
    }

    /// Generators the projection pipeline uses. They span the same lattice
    /// as [`Generators::standard`] but have short dual vectors, so a box of
    /// range `N` covers a larger disc of the parallel plane.
    pub fn preferred(group: GroupId, kind: LatticeKind) -> Self {
        match (group.family(), kind) {
            // self-dual: root and weight lattices coincide
            (Family::F, _) => Generators::FundamentalWeights,
            (Family::B, LatticeKind::Root) => Generators::EvenLastWeight,
            _ => Generators::standard(kind),
        }
    }

    /// Row `k` is generator `k` in weight coordinates.
    pub fn weight_rows(self, data: &RootSystemData) -> Vec<Vec<i64>> {
        let n = data.rank();
        match self {
            Generators::SimpleRoots => data.cartan.clone(),
            Generators::FundamentalWeights | Generators::EvenLastWeight => (0..n)
                .map(|k| {
                    let mut row = vec![0; n];
                    row[k] = if self == Generators::EvenLastWeight && k == n - 1 { 2 } else { 1 };
                    row
                })
                .collect(),
        }
    }
}

/// Lexicographic walk over `[-N, N]^n` coefficient tuples, emitted in weight
/// coordinates.
#[derive(Debug, Clone)]
pub struct LatticeIter {
    rows: Vec<Vec<i64>>,
    range: i64,
    current: Option<Vec<i64>>,
    remaining: u64,
}

impl LatticeIter {
    pub fn total(&self) -> u64 {
        self.remaining
    }
}

impl Iterator for LatticeIter {
    type Item = LatticeVector;

    fn next(&mut self) -> Option<LatticeVector> {
        let coeffs = self.current.as_mut()?;
        let n = coeffs.len();
        let mut a = vec![0i64; n];
        for (c, row) in coeffs.iter().zip(&self.rows) {
            if *c != 0 {
                for (aj, r) in a.iter_mut().zip(row) {
                    *aj += c * r;
                }
            }
        }
        self.remaining -= 1;
        // advance odometer
        let mut k = n;
        loop {
            if k == 0 {
                self.current = None;
                break;
            }
            k -= 1;
            if coeffs[k] < self.range {
                coeffs[k] += 1;
                break;
            }
            coeffs[k] = -self.range;
        }
        Some(LatticeVector::weight(a))
    }

    /// Jumps the odometer, so disjoint blocks of the box can be walked
    /// independently.
    fn nth(&mut self, k: usize) -> Option<LatticeVector> {
        let k = k as u64;
        if k >= self.remaining {
            self.current = None;
            self.remaining = 0;
            return None;
        }
        if let Some(coeffs) = self.current.as_mut() {
            let side = (2 * self.range + 1) as u64;
            let mut carry = k;
            for c in coeffs.iter_mut().rev() {
                if carry == 0 {
                    break;
                }
                let digit = (*c + self.range) as u64 + carry;
                *c = (digit % side) as i64 - self.range;
                carry = digit / side;
            }
            self.remaining -= k;
        }
        self.next()
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let r = self.remaining as usize;
        (r, Some(r))
    }
}

/// All lattice vectors with generator coefficients in `[-range, range]`, in
/// weight coordinates; `(2N+1)^n` of them.
pub fn enumerate_lattice(
    data: &RootSystemData,
    kind: LatticeKind,
    range: u32,
    budget: u64,
) -> Result<LatticeIter> {
    enumerate_with(data, Generators::standard(kind), range, budget)
}

pub fn enumerate_with(
    data: &RootSystemData,
    generators: Generators,
    range: u32,
    budget: u64,
) -> Result<LatticeIter> {
    let n = data.rank() as u32;
    let side = 2 * range as u64 + 1;
    let total = side.checked_pow(n).unwrap_or(u64::MAX);
    if total > budget {
        return Err(Error::BudgetExceeded {
            budget,
            required: total,
        });
    }
    let range = range as i64;
    Ok(LatticeIter {
        rows: generators.weight_rows(data),
        range,
        current: Some(vec![-range; n as usize]),
        remaining: total,
    })
}
