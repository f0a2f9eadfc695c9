use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::rational::{Rational, RationalMatrix};
use crate::error::{Error, Result};

/// Cartan-Killing family of a crystallographic root system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

/// A crystallographic Coxeter-Weyl group, e.g. `F4` or `E6`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupId {
    family: Family,
    rank: usize,
}

impl GroupId {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(Self { family, rank })
        } else {
            Err(Error::InvalidRank { family, rank })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }

    pub const F4: GroupId = GroupId {
        family: Family::F,
        rank: 4,
    };
    pub const B6: GroupId = GroupId {
        family: Family::B,
        rank: 6,
    };
    pub const E6: GroupId = GroupId {
        family: Family::E,
        rank: 6,
    };
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for GroupId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(Error::ParseGroup(s.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::ParseGroup(s.to_string()))?;
        GroupId::new(family, rank)
    }
}

/// Cartan matrix, simple-root norms and Coxeter invariants of a root system.
///
/// Node order follows the chain convention: for `B_n`, `C_n`, `F4` and `G2`
/// the chain runs long-to-short or short-to-long with the special bond at
/// the end, for `D_n` the two spin nodes are last, and for `E_n` the chain
/// `1 - 2 - ... - (n-1)` carries node `n` on node 3.
#[derive(Debug, Clone, PartialEq)]
pub struct RootSystemData {
    pub group: GroupId,
    /// `cartan[i][j] = 2 (α_i, α_j) / (α_j, α_j)`.
    pub cartan: Vec<Vec<i64>>,
    /// `(α_i, α_i)`, long roots normalised to 2.
    pub root_norms: Vec<Rational>,
    /// Coxeter exponents, ascending.
    pub exponents: Vec<i64>,
    pub coxeter_number: i64,
}

impl RootSystemData {
    pub fn rank(&self) -> usize {
        self.group.rank
    }

    /// `(α_i, α_j)` as an exact rational.
    pub fn root_inner(&self, i: usize, j: usize) -> Rational {
        Rational::from_integer(self.cartan[i][j]) * self.root_norms[j] / 2
    }

    /// Gram matrix of the simple roots, `B_ij = (α_i, α_j)`.
    pub fn root_gram(&self) -> RationalMatrix {
        let n = self.rank();
        RationalMatrix::from_fn(n, |i, j| self.root_inner(i, j))
    }

    pub fn cartan_rational(&self) -> RationalMatrix {
        let n = self.rank();
        RationalMatrix::from_fn(n, |i, j| Rational::from_integer(self.cartan[i][j]))
    }

    /// Nodes `i != j` joined by an edge of the Coxeter diagram.
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.cartan[i][j] != 0
    }

    /// `2 cos(m π / h)` subtracted from 2: the Cartan eigenvalue belonging to
    /// exponent `m`.
    pub fn closed_form_eigenvalue(&self, exponent: i64) -> f64 {
        let h = self.coxeter_number as f64;
        2.0 * (1.0 - (exponent as f64 * std::f64::consts::PI / h).cos())
    }
}

/// Cartan data for `group`.
pub fn cartan_matrix(group: GroupId) -> RootSystemData {
    let n = group.rank;
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let link = |c: &mut Vec<Vec<i64>>, i: usize, j: usize| {
        c[i][j] = -1;
        c[j][i] = -1;
    };
    let two = Rational::from_integer(2);
    let one = Rational::from_integer(1);
    let mut norms = vec![two; n];

    match group.family {
        Family::A => {
            for i in 1..n {
                link(&mut c, i - 1, i);
            }
        }
        Family::B => {
            for i in 1..n {
                link(&mut c, i - 1, i);
            }
            // α_n short, norm 1
            c[n - 2][n - 1] = -2;
            norms[n - 1] = one;
        }
        Family::C => {
            for i in 1..n {
                link(&mut c, i - 1, i);
            }
            // α_1 .. α_{n-1} short, α_n long
            c[n - 1][n - 2] = -2;
            for norm in norms.iter_mut().take(n - 1) {
                *norm = one;
            }
        }
        Family::D => {
            for i in 1..n - 1 {
                link(&mut c, i - 1, i);
            }
            link(&mut c, n - 3, n - 1);
        }
        Family::E => {
            for i in 1..n - 1 {
                link(&mut c, i - 1, i);
            }
            link(&mut c, 2, n - 1);
        }
        Family::F => {
            link(&mut c, 0, 1);
            link(&mut c, 1, 2);
            link(&mut c, 2, 3);
            c[1][2] = -2;
            norms[2] = one;
            norms[3] = one;
        }
        Family::G => {
            link(&mut c, 0, 1);
            c[0][1] = -3;
            norms[1] = Rational::new(2, 3);
        }
    }

    let (exponents, h) = exponents(group);
    RootSystemData {
        group,
        cartan: c,
        root_norms: norms,
        exponents,
        coxeter_number: h,
    }
}

fn exponents(group: GroupId) -> (Vec<i64>, i64) {
    let n = group.rank as i64;
    let (mut m, h): (Vec<i64>, i64) = match group.family {
        Family::A => ((1..=n).collect(), n + 1),
        Family::B | Family::C => ((1..=n).map(|k| 2 * k - 1).collect(), 2 * n),
        Family::D => {
            let mut m: Vec<i64> = (1..n).map(|k| 2 * k - 1).collect();
            m.push(n - 1);
            (m, 2 * (n - 1))
        }
        Family::E => match n {
            6 => (vec![1, 4, 5, 7, 8, 11], 12),
            7 => (vec![1, 5, 7, 9, 11, 13, 17], 18),
            _ => (vec![1, 7, 11, 13, 17, 19, 23, 29], 30),
        },
        Family::F => (vec![1, 5, 7, 11], 12),
        Family::G => (vec![1, 5], 6),
    };
    m.sort_unstable();
    (m, h)
}
