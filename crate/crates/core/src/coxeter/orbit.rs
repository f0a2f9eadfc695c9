use std::collections::HashSet;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::cartan::RootSystemData;
use super::rational::Rational;
use super::reflect_weight_in_place;
use crate::error::{Error, Result};

/// Orbit budget used when the caller does not give one. Large enough for
/// `W(E7)` acting on a generic vector.
pub const DEFAULT_ORBIT_BUDGET: u64 = 4_000_000;

/// A Weyl orbit in weight coordinates. The actual vertices are
/// `scale · Σ a_i ω_i` for each integer tuple in `points`, so fractional
/// seeds such as `⅓(0,0,1,0,0,0)` stay integer-keyed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Orbit {
    pub seed: Vec<i64>,
    #[serde(serialize_with = "ser_ratio", deserialize_with = "de_ratio")]
    pub scale: Rational,
    /// Lexicographically sorted.
    pub points: Vec<Vec<i64>>,
}

impl Orbit {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

fn ser_ratio<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

fn de_ratio<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
    let s = String::deserialize(d)?;
    parse_ratio(&s).ok_or_else(|| serde::de::Error::custom(format!("bad rational {s:?}")))
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_ratio(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let q: i64 = q.trim().parse().ok()?;
            if q == 0 {
                return None;
            }
            Some(Rational::new(p.trim().parse().ok()?, q))
        }
        None => Some(Rational::from_integer(s.parse().ok()?)),
    }
}

/// Breadth-first closure of `seed` under the simple reflections, failing
/// once more than `budget` distinct points have been found.
pub fn orbit_points(data: &RootSystemData, seed: &[i64], budget: u64) -> Result<Vec<Vec<i64>>> {
    let n = data.rank();
    if seed.len() != n {
        return Err(Error::RankMismatch {
            expected: n,
            found: seed.len(),
        });
    }
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    seen.insert(seed.to_vec());
    let mut frontier = vec![seed.to_vec()];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for v in &frontier {
            for i in 0..n {
                if v[i] == 0 {
                    // fixed by r_i
                    continue;
                }
                let mut w = v.clone();
                reflect_weight_in_place(data, &mut w, i);
                if !seen.contains(&w) {
                    if seen.len() as u64 >= budget {
                        return Err(Error::BudgetExceeded {
                            budget,
                            required: seen.len() as u64 + 1,
                        });
                    }
                    seen.insert(w.clone());
                    next.push(w);
                }
            }
        }
        frontier = next;
    }
    let mut points: Vec<Vec<i64>> = seen.into_iter().collect();
    points.sort_unstable();
    Ok(points)
}
