//! Exact layer: Cartan data, reflections, Weyl orbits, basis changes and the
//! invariant bilinear form.

mod cartan;
mod orbit;
mod rational;
mod vector;

pub use cartan::{cartan_matrix, Family, GroupId, RootSystemData};
pub use orbit::{orbit_points, parse_ratio, Orbit, DEFAULT_ORBIT_BUDGET};
pub use rational::{ratio_to_f64, Rational, RationalMatrix};
pub use vector::{Basis, ConvertedVector, LatticeVector};

use num_traits::Zero;

use crate::error::{Error, Result};

/// Exact inverse of the Cartan matrix; row `i` holds the root coordinates of
/// `ω_i`.
pub fn cartan_inverse(data: &RootSystemData) -> RationalMatrix {
    data.cartan_rational()
        .inverse()
        .expect("Cartan matrices of finite type are nonsingular")
}

/// `G_ij = (ω_i, ω_j) = (C⁻¹)_ij (α_j, α_j) / 2`.
pub fn metric_tensor(data: &RootSystemData) -> RationalMatrix {
    let inv = cartan_inverse(data);
    RationalMatrix::from_fn(data.rank(), |i, j| inv[(i, j)] * data.root_norms[j] / 2)
}

fn check_len(data: &RootSystemData, v: &LatticeVector) -> Result<()> {
    if v.len() != data.rank() {
        return Err(Error::RankMismatch {
            expected: data.rank(),
            found: v.len(),
        });
    }
    Ok(())
}

/// `a_j ← a_j − a_i C_ij`.
pub(crate) fn reflect_weight_in_place(data: &RootSystemData, a: &mut [i64], i: usize) {
    let ai = a[i];
    if ai == 0 {
        return;
    }
    for (aj, cij) in a.iter_mut().zip(&data.cartan[i]) {
        *aj -= ai * cij;
    }
}

/// Applies the simple reflection `r_i` (0-based node index) in the basis of
/// `v`.
pub fn simple_reflection(data: &RootSystemData, v: &LatticeVector, i: usize) -> Result<LatticeVector> {
    check_len(data, v)?;
    if i >= data.rank() {
        return Err(Error::NodeOutOfRange {
            index: i,
            rank: data.rank(),
        });
    }
    let mut coeffs = v.coeffs.clone();
    match v.basis {
        Basis::Weight => reflect_weight_in_place(data, &mut coeffs, i),
        Basis::Root => {
            // b_i ← b_i − Σ_j b_j C_ji
            let pairing: i64 = v.coeffs.iter().enumerate().map(|(j, b)| b * data.cartan[j][i]).sum();
            coeffs[i] -= pairing;
        }
    }
    Ok(LatticeVector {
        coeffs,
        basis: v.basis,
    })
}

/// Weyl orbit of a weight-basis seed with an external rational scale.
pub fn weyl_orbit(data: &RootSystemData, seed: &LatticeVector, scale: Rational) -> Result<Orbit> {
    weyl_orbit_bounded(data, seed, scale, DEFAULT_ORBIT_BUDGET)
}

pub fn weyl_orbit_bounded(
    data: &RootSystemData,
    seed: &LatticeVector,
    scale: Rational,
    budget: u64,
) -> Result<Orbit> {
    check_len(data, seed)?;
    let seed = to_weight(data, seed)?;
    let points = orbit_points(data, &seed.coeffs, budget)?;
    Ok(Orbit {
        seed: seed.coeffs,
        scale,
        points,
    })
}

/// `|W|` as the orbit size of the strictly dominant vector `(1, 2, …, n)`.
pub fn group_order(data: &RootSystemData) -> Result<u64> {
    group_order_bounded(data, DEFAULT_ORBIT_BUDGET)
}

pub fn group_order_bounded(data: &RootSystemData, budget: u64) -> Result<u64> {
    let seed: Vec<i64> = (1..=data.rank() as i64).collect();
    Ok(orbit_points(data, &seed, budget)?.len() as u64)
}

/// Converts to the other basis. Root → weight is `a = b·C` and always
/// integral; weight → root is `b = a·C⁻¹` and integral exactly when the
/// weight lies in the root lattice.
pub fn basis_convert(data: &RootSystemData, v: &LatticeVector) -> Result<ConvertedVector> {
    check_len(data, v)?;
    let x: Vec<Rational> = v.coeffs.iter().map(|&c| Rational::from_integer(c)).collect();
    let (coeffs, basis) = match v.basis {
        Basis::Root => (data.cartan_rational().left_mul(&x), Basis::Weight),
        Basis::Weight => (cartan_inverse(data).left_mul(&x), Basis::Root),
    };
    let integral = coeffs.iter().all(|c| c.is_integer());
    Ok(ConvertedVector {
        coeffs,
        basis,
        integral,
    })
}

/// The same vector in weight coordinates (always integral).
pub fn to_weight(data: &RootSystemData, v: &LatticeVector) -> Result<LatticeVector> {
    check_len(data, v)?;
    match v.basis {
        Basis::Weight => Ok(v.clone()),
        Basis::Root => {
            let n = data.rank();
            let coeffs: Vec<i64> = (0..n)
                .map(|j| (0..n).map(|i| v.coeffs[i] * data.cartan[i][j]).sum::<i64>())
                .collect();
            Ok(LatticeVector::weight(coeffs))
        }
    }
}

/// `(u, v) = aᵀ G a′` after converting both to weight coordinates.
pub fn inner_product(data: &RootSystemData, u: &LatticeVector, v: &LatticeVector) -> Result<Rational> {
    let a = to_weight(data, u)?;
    let b = to_weight(data, v)?;
    let g = metric_tensor(data);
    let x: Vec<Rational> = a.coeffs.iter().map(|&c| Rational::from_integer(c)).collect();
    let y: Vec<Rational> = b.coeffs.iter().map(|&c| Rational::from_integer(c)).collect();
    Ok(g.bilinear(&x, &y))
}

/// Whether the Gram matrix `G` is positive definite (leading minors > 0).
pub fn is_positive_definite(m: &RationalMatrix) -> bool {
    let n = m.dim();
    (1..=n).all(|k| {
        let sub = RationalMatrix::from_fn(k, |i, j| m[(i, j)]);
        determinant(&sub) > Rational::zero()
    })
}

fn determinant(m: &RationalMatrix) -> Rational {
    let n = m.dim();
    let mut a = m.clone();
    let mut det = Rational::from_integer(1);
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[(r, col)].is_zero()) else {
            return Rational::zero();
        };
        if p != col {
            for k in 0..n {
                let t = a[(p, k)];
                a[(p, k)] = a[(col, k)];
                a[(col, k)] = t;
            }
            det = -det;
        }
        let piv = a[(col, col)];
        det *= piv;
        for r in col + 1..n {
            let f = a[(r, col)] / piv;
            for k in col..n {
                let t = a[(col, k)];
                a[(r, k)] -= f * t;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p, q)
    }

    #[test]
    fn f4_inverse_table() {
        let d = cartan_matrix(GroupId::F4);
        let inv = cartan_inverse(&d);
        let expected = [[2, 3, 4, 2], [3, 6, 8, 4], [2, 4, 6, 3], [1, 2, 3, 2]];
        for (i, row) in expected.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                assert_eq!(inv[(i, j)], r(x, 1));
            }
        }
        assert!(inv.is_integral(), "F4 lattice is self dual");
        assert_eq!(&d.cartan_rational() * &inv, RationalMatrix::identity(4));
    }

    #[test]
    fn b6_and_e6_inverse_entries() {
        let b6 = cartan_inverse(&cartan_matrix(GroupId::B6));
        assert_eq!(b6[(5, 5)], r(3, 1));
        assert_eq!(b6[(5, 0)], r(1, 2));
        let e6 = cartan_inverse(&cartan_matrix(GroupId::E6));
        assert_eq!(e6[(0, 0)], r(4, 3));
        assert_eq!(e6[(2, 2)], r(6, 1));
    }

    #[test]
    fn f4_metric() {
        let g = metric_tensor(&cartan_matrix(GroupId::F4));
        let expected = [
            [r(2, 1), r(3, 1), r(2, 1), r(1, 1)],
            [r(3, 1), r(6, 1), r(4, 1), r(2, 1)],
            [r(2, 1), r(4, 1), r(3, 1), r(3, 2)],
            [r(1, 1), r(2, 1), r(3, 2), r(1, 1)],
        ];
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(g[(i, j)], expected[i][j]);
            }
        }
        assert!(g.is_symmetric());
        assert!(is_positive_definite(&g));
    }

    #[test]
    fn simply_laced_metric_is_inverse() {
        for g in ["A4", "D5", "E6", "E7"] {
            let d = cartan_matrix(g.parse().unwrap());
            assert_eq!(metric_tensor(&d), cartan_inverse(&d));
        }
    }

    #[test]
    fn reflection_examples() {
        let a2 = cartan_matrix("A2".parse().unwrap());
        let v = simple_reflection(&a2, &LatticeVector::weight([1, 0]), 0).unwrap();
        assert_eq!(v.coeffs, vec![-1, 1]);

        let f4 = cartan_matrix(GroupId::F4);
        let v = simple_reflection(&f4, &LatticeVector::weight([0, 0, 0, 1]), 3).unwrap();
        assert_eq!(v.coeffs, vec![0, 0, 1, -1]);

        let z = LatticeVector::zero(4, Basis::Weight);
        for i in 0..4 {
            assert_eq!(simple_reflection(&f4, &z, i).unwrap(), z);
        }
    }

    #[test]
    fn reflection_errors() {
        let f4 = cartan_matrix(GroupId::F4);
        assert_eq!(
            simple_reflection(&f4, &LatticeVector::weight([0, 0, 0, 1]), 4),
            Err(Error::NodeOutOfRange { index: 4, rank: 4 })
        );
        assert_eq!(
            simple_reflection(&f4, &LatticeVector::weight([0, 1]), 0),
            Err(Error::RankMismatch { expected: 4, found: 2 })
        );
    }

    #[test]
    fn root_basis_reflection_agrees_with_weight_basis() {
        let d = cartan_matrix(GroupId::B6);
        let b = LatticeVector::root([1, -2, 0, 3, 1, -1]);
        for i in 0..6 {
            let via_root = to_weight(&d, &simple_reflection(&d, &b, i).unwrap()).unwrap();
            let via_weight = simple_reflection(&d, &to_weight(&d, &b).unwrap(), i).unwrap();
            assert_eq!(via_root, via_weight);
        }
        // r_i α_i = −α_i
        let a = LatticeVector::root([0, 0, 0, 0, 0, 1]);
        assert_eq!(simple_reflection(&d, &a, 5).unwrap().coeffs, vec![0, 0, 0, 0, 0, -1]);
    }

    #[test]
    fn orbit_sizes() {
        let f4 = cartan_matrix(GroupId::F4);
        let one = Rational::from_integer(1);
        assert_eq!(weyl_orbit(&f4, &LatticeVector::weight([1, 0, 0, 0]), one).unwrap().len(), 24);
        assert_eq!(weyl_orbit(&f4, &LatticeVector::weight([0, 0, 0, 1]), one).unwrap().len(), 24);
        let e6 = cartan_matrix(GroupId::E6);
        for (seed, size) in [
            ([1, 0, 0, 0, 0, 0], 27),
            ([0, 0, 0, 0, 0, 1], 72),
            ([0, 0, 1, 0, 0, 0], 720),
        ] {
            assert_eq!(weyl_orbit(&e6, &LatticeVector::weight(seed), one).unwrap().len(), size);
        }
        let b6 = cartan_matrix(GroupId::B6);
        assert_eq!(
            weyl_orbit(&b6, &LatticeVector::weight([0, 0, 0, 0, 0, 1]), one).unwrap().len(),
            64
        );
    }

    #[test]
    fn orbit_of_root_basis_seed() {
        // α_1 of E6 is a root: orbit of all 72 roots
        let e6 = cartan_matrix(GroupId::E6);
        let o = weyl_orbit(&e6, &LatticeVector::root([1, 0, 0, 0, 0, 0]), Rational::from_integer(1)).unwrap();
        assert_eq!(o.len(), 72);
        assert_eq!(o.seed, vec![2, -1, 0, 0, 0, 0]);
    }

    #[test]
    fn orbit_budget() {
        let e6 = cartan_matrix(GroupId::E6);
        let err = weyl_orbit_bounded(&e6, &LatticeVector::weight([0, 0, 1, 0, 0, 0]), Rational::from_integer(1), 100)
            .unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { budget: 100, .. }));
    }

    #[test]
    fn orbit_json_shape() {
        let a2 = cartan_matrix("A2".parse().unwrap());
        let o = weyl_orbit(&a2, &LatticeVector::weight([1, 0]), Rational::new(1, 3)).unwrap();
        let s = serde_json::to_string(&o).unwrap();
        assert_eq!(s, r#"{"seed":[1,0],"scale":"1/3","points":[[-1,1],[0,-1],[1,0]]}"#);
        let back: Orbit = serde_json::from_str(&s).unwrap();
        assert_eq!(back, o);
    }

    #[test]
    fn group_orders() {
        for (g, order) in [("F4", 1152), ("B6", 46080), ("E6", 51840), ("G2", 12), ("A3", 24), ("D4", 192)] {
            assert_eq!(group_order(&cartan_matrix(g.parse().unwrap())).unwrap(), order, "{g}");
        }
    }

    #[test]
    fn basis_convert_examples() {
        let e6 = cartan_matrix(GroupId::E6);
        let a = basis_convert(&e6, &LatticeVector::root([1, 0, 0, 0, 0, 0])).unwrap();
        assert!(a.integral);
        assert_eq!(a.to_lattice().unwrap(), LatticeVector::weight([2, -1, 0, 0, 0, 0]));

        let b = basis_convert(&e6, &LatticeVector::weight([1, 0, 0, 0, 0, 0])).unwrap();
        assert!(!b.integral);
        assert_eq!(b.basis, Basis::Root);
        assert_eq!(b.coeffs[0], r(4, 3));
        assert!(b.to_lattice().is_none());

        let z = basis_convert(&e6, &LatticeVector::zero(6, Basis::Weight)).unwrap();
        assert!(z.integral);
        assert!(z.to_lattice().unwrap().is_zero());
    }

    #[test]
    fn inner_product_examples() {
        let f4 = cartan_matrix(GroupId::F4);
        assert_eq!(
            inner_product(&f4, &LatticeVector::weight([1, 0, 0, 0]), &LatticeVector::weight([1, 0, 0, 0])).unwrap(),
            r(2, 1)
        );
        assert_eq!(
            inner_product(&f4, &LatticeVector::weight([0, 0, 0, 1]), &LatticeVector::weight([0, 0, 0, 1])).unwrap(),
            r(1, 1)
        );
        let z = LatticeVector::zero(4, Basis::Weight);
        assert_eq!(inner_product(&f4, &z, &z).unwrap(), r(0, 1));
        for g in ["A5", "D6", "E6"] {
            let d = cartan_matrix(g.parse().unwrap());
            for i in 0..d.rank() {
                let mut b = vec![0; d.rank()];
                b[i] = 1;
                let a = LatticeVector::root(b);
                assert_eq!(inner_product(&d, &a, &a).unwrap(), r(2, 1));
            }
        }
        assert!(inner_product(&f4, &z, &LatticeVector::weight([1])).is_err());
    }
}
