//! Spectral layer: eigenpairs of the Cartan matrix, the orthonormal frame
//! they induce, the Coxeter planes and the rotation angles of the Coxeter
//! element on each of them.
//!
//! For non-simply-laced types the Cartan matrix is not symmetric, so the
//! eigenproblem is solved for `D^{-1/2} C D^{1/2}` with `D = diag((α_i,α_i)/2)`,
//! which is symmetric and similar to `C`. Its eigenvectors `y` give the right
//! eigenvectors `X = D^{1/2} y` of `C`, and frame vectors are built from
//! coroots: `x̂_i ∝ Σ_j X_ji · 2α_j/(α_j,α_j)`. For simply-laced types the
//! coroots are the roots and this reduces to `x̂_i = λ_i^{-1/2} Σ_j X_ji α_j`.

use std::f64::consts::PI;

use nalgebra::{DMatrix, SymmetricEigen};

use crate::coxeter::{metric_tensor, ratio_to_f64, GroupId, RootSystemData};
use crate::error::{Error, Result};

/// Tolerance used to assign eigenvalues to exponents.
pub const EXPONENT_MATCH_TOL: f64 = 1e-6;
/// Tolerance for orthonormality and rotation checks.
pub const FRAME_TOL: f64 = 1e-9;

/// One eigenpair of the Cartan matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenPair {
    pub exponent: i64,
    pub eigenvalue: f64,
    /// Right eigenvector of `C` over the simple roots, unit length in the
    /// metric `D⁻¹` (plain unit length for simply-laced types).
    pub eigenvector: Vec<f64>,
}

/// How a frame vector got its length.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrameNormalization {
    /// Eigenvector scaled to last component 1 with prefactor `1/(√h √λ)`
    /// was already of unit length.
    LastComponent,
    /// Last component scaling was possible but the result had to be
    /// rescaled to unit length.
    Rescaled,
    /// The last component vanishes; the unit eigenvector was used instead.
    UnitFallback,
}

/// One orthonormal frame vector `x̂_i`.
#[derive(Debug, Clone, PartialEq)]
pub struct FrameVector {
    pub exponent: i64,
    pub eigenvalue: f64,
    /// Coefficients over the simple roots.
    pub root_coeffs: Vec<f64>,
    /// `(ω_j, x̂_i)` for each `j`, so that the component of `Σ a_j ω_j` along
    /// `x̂_i` is `Σ a_j functional[j]`.
    pub functional: Vec<f64>,
    pub normalization: FrameNormalization,
}

/// Eigen-decomposition of the Cartan matrix arranged as an orthonormal
/// frame with its plane pairing.
#[derive(Debug, Clone)]
pub struct SpectralFrame {
    pub data: RootSystemData,
    pub pairs: Vec<EigenPair>,
    pub vectors: Vec<FrameVector>,
    /// `(i, n-1-i)` 0-based index pairs.
    pub plane_pairing: Vec<(usize, usize)>,
    /// Middle index for odd rank (eigenvalue 2).
    pub unpaired: Option<usize>,
    /// `(α_i, α_j)` as floats.
    gram: Vec<Vec<f64>>,
}

impl SpectralFrame {
    pub fn group(&self) -> GroupId {
        self.data.group
    }

    pub fn rank(&self) -> usize {
        self.data.rank()
    }

    /// Bilinear form on root-coefficient vectors.
    pub fn form(&self, x: &[f64], y: &[f64]) -> f64 {
        let mut s = 0.0;
        for (i, xi) in x.iter().enumerate() {
            for (j, yj) in y.iter().enumerate() {
                s += xi * self.gram[i][j] * yj;
            }
        }
        s
    }

    /// `(x̂_i, x̂_j)` matrix.
    pub fn gram_matrix(&self) -> Vec<Vec<f64>> {
        let n = self.rank();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| self.form(&self.vectors[i].root_coeffs, &self.vectors[j].root_coeffs))
                    .collect()
            })
            .collect()
    }

    /// Largest `|(x̂_i, x̂_j) − δ_ij|`.
    pub fn orthonormality_defect(&self) -> f64 {
        let g = self.gram_matrix();
        let mut worst: f64 = 0.0;
        for (i, row) in g.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((v - target).abs());
            }
        }
        worst
    }

    /// 0-based plane index whose pair contains `axis`.
    pub fn plane_of_axis(&self, axis: usize) -> Option<usize> {
        self.plane_pairing
            .iter()
            .position(|&(a, b)| a == axis || b == axis)
    }
}

/// Eigenpairs of the Cartan matrix sorted by exponent.
pub fn eigensystem(data: &RootSystemData) -> Result<Vec<EigenPair>> {
    let n = data.rank();
    let d: Vec<f64> = data.root_norms.iter().map(|x| ratio_to_f64(x) / 2.0).collect();
    let sym = DMatrix::from_fn(n, n, |i, j| data.cartan[i][j] as f64 * (d[j] / d[i]).sqrt());
    // symmetrise away rounding in the similarity transform
    let sym = (&sym + sym.transpose()) * 0.5;
    let eig = SymmetricEigen::new(sym);

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));

    let mut pairs = Vec::with_capacity(n);
    for (slot, &k) in order.iter().enumerate() {
        let lambda = eig.eigenvalues[k];
        let exponent = data.exponents[slot];
        let expected = data.closed_form_eigenvalue(exponent);
        if (lambda - expected).abs() > EXPONENT_MATCH_TOL {
            return Err(Error::ExponentMismatch {
                exponent,
                eigenvalue: lambda,
                expected,
            });
        }
        let eigenvector: Vec<f64> = (0..n).map(|j| eig.eigenvectors[(j, k)] * d[j].sqrt()).collect();
        pairs.push(EigenPair {
            exponent,
            eigenvalue: lambda,
            eigenvector,
        });
    }
    Ok(pairs)
}

/// Orthonormal frame `x̂_1 … x̂_n` ordered by exponent.
///
/// Each vector is sign-fixed: positive coefficient on `α_n`, or, when that
/// coefficient vanishes, negative first nonzero coefficient.
pub fn orthonormal_frame(data: &RootSystemData) -> Result<SpectralFrame> {
    let pairs = eigensystem(data)?;
    let n = data.rank();
    let h = data.coxeter_number as f64;
    let gram: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| ratio_to_f64(&data.root_inner(i, j))).collect())
        .collect();
    let norms: Vec<f64> = data.root_norms.iter().map(ratio_to_f64).collect();
    let metric = metric_tensor(data).to_f64();
    let form = |x: &[f64], y: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                s += x[i] * gram[i][j] * y[j];
            }
        }
        s
    };

    let mut vectors = Vec::with_capacity(n);
    for pair in &pairs {
        let x = &pair.eigenvector;
        let scale_max = x.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        let last = x[n - 1];
        let (mut coeffs, mut normalization): (Vec<f64>, _) = if last.abs() > 1e-9 * scale_max {
            let pre = 1.0 / (h.sqrt() * pair.eigenvalue.sqrt());
            (
                (0..n).map(|j| pre * (x[j] / last) * 2.0 / norms[j]).collect(),
                FrameNormalization::LastComponent,
            )
        } else {
            let pre = 1.0 / pair.eigenvalue.sqrt();
            (
                (0..n).map(|j| pre * x[j] * 2.0 / norms[j]).collect(),
                FrameNormalization::UnitFallback,
            )
        };
        let len = form(&coeffs, &coeffs).sqrt();
        if (len - 1.0).abs() > FRAME_TOL && normalization == FrameNormalization::LastComponent {
            normalization = FrameNormalization::Rescaled;
        }
        for c in coeffs.iter_mut() {
            *c /= len;
        }
        apply_sign_rule(&mut coeffs);

        // weight coordinates of x̂, then (ω_j, x̂) = Σ_k G_jk w_k
        let w: Vec<f64> = (0..n)
            .map(|k| (0..n).map(|j| coeffs[j] * data.cartan[j][k] as f64).sum())
            .collect();
        let functional = (0..n)
            .map(|j| (0..n).map(|k| metric[j][k] * w[k]).sum())
            .collect();

        vectors.push(FrameVector {
            exponent: pair.exponent,
            eigenvalue: pair.eigenvalue,
            root_coeffs: coeffs,
            functional,
            normalization,
        });
    }

    let plane_pairing = (0..n / 2).map(|i| (i, n - 1 - i)).collect();
    let unpaired = (n % 2 == 1).then_some(n / 2);
    Ok(SpectralFrame {
        data: data.clone(),
        pairs,
        vectors,
        plane_pairing,
        unpaired,
        gram,
    })
}

fn apply_sign_rule(coeffs: &mut [f64]) {
    let n = coeffs.len();
    let tol = 1e-9 * coeffs.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let flip = if coeffs[n - 1].abs() > tol {
        coeffs[n - 1] < 0.0
    } else {
        coeffs.iter().find(|c| c.abs() > tol).is_some_and(|c| *c > 0.0)
    };
    if flip {
        for c in coeffs.iter_mut() {
            *c = -*c;
        }
    }
}

/// A Coxeter plane spanned by `x̂_i, x̂_{n+1-i}` with its pair of simple
/// roots of `I_2(h/m_i)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoxeterPlane {
    /// 0-based plane index (also the index of the first axis).
    pub index: usize,
    pub axes: (usize, usize),
    pub exponent: i64,
    /// Root coefficients of `β_i`.
    pub beta_pos: Vec<f64>,
    /// Root coefficients of `β_{n+1-i}`.
    pub beta_neg: Vec<f64>,
    /// `2π m_i / h`.
    pub rotation_angle: f64,
}

pub fn coxeter_plane_pairs(frame: &SpectralFrame) -> Vec<CoxeterPlane> {
    let h = frame.data.coxeter_number as f64;
    frame
        .plane_pairing
        .iter()
        .enumerate()
        .map(|(index, &(i, j))| {
            let m = frame.vectors[i].exponent;
            let t = m as f64 * PI / (2.0 * h);
            let (s, c) = t.sin_cos();
            let xi = &frame.vectors[i].root_coeffs;
            let xj = &frame.vectors[j].root_coeffs;
            let r2 = 2f64.sqrt();
            CoxeterPlane {
                index,
                axes: (i, j),
                exponent: m,
                beta_pos: xi.iter().zip(xj).map(|(a, b)| r2 * (s * a + c * b)).collect(),
                beta_neg: xi.iter().zip(xj).map(|(a, b)| r2 * (s * a - c * b)).collect(),
                rotation_angle: 2.0 * PI * m as f64 / h,
            }
        })
        .collect()
}

/// Two-colouring of the Coxeter diagram: nodes of one colour pairwise
/// commute.
pub fn bipartition(data: &RootSystemData) -> Result<Vec<bool>> {
    let n = data.rank();
    let mut colour: Vec<Option<bool>> = vec![None; n];
    for start in 0..n {
        if colour[start].is_some() {
            continue;
        }
        colour[start] = Some(false);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            let cu = colour[u].unwrap();
            for v in (0..n).filter(|&v| data.adjacent(u, v)) {
                match colour[v] {
                    None => {
                        colour[v] = Some(!cu);
                        stack.push(v);
                    }
                    Some(cv) if cv == cu => return Err(Error::Bipartition(data.group)),
                    Some(_) => {}
                }
            }
        }
    }
    Ok(colour.into_iter().map(|c| c.unwrap()).collect())
}

/// Matrix of the Coxeter element `R₁R₂` acting on root coordinates
/// (column convention: `c ↦ M c`). `R₁` is the product of the reflections of
/// the first colour class, `R₂` of the second.
pub fn coxeter_element(data: &RootSystemData) -> Result<DMatrix<f64>> {
    let colour = bipartition(data)?;
    let n = data.rank();
    let reflection = |k: usize| {
        // c'_k = c_k − Σ_j c_j C_jk
        let mut m = DMatrix::<f64>::identity(n, n);
        for j in 0..n {
            m[(k, j)] -= data.cartan[j][k] as f64;
        }
        m
    };
    let mut r1 = DMatrix::<f64>::identity(n, n);
    let mut r2 = DMatrix::<f64>::identity(n, n);
    for (k, &c) in colour.iter().enumerate() {
        if c {
            r2 = reflection(k) * r2;
        } else {
            r1 = reflection(k) * r1;
        }
    }
    Ok(r1 * r2)
}

/// Measured action of the Coxeter element on one plane.
#[derive(Debug, Clone, PartialEq)]
pub struct PlaneRotation {
    pub plane: usize,
    pub exponent: i64,
    /// Nominal angle `2π m / h`.
    pub angle: f64,
    /// `+1` if the block is a rotation by `+angle` in the `(x̂_i, x̂_j)`
    /// orientation, `-1` if by `-angle`.
    pub orientation: i8,
    /// Largest deviation of the measured 2×2 block from the rotation, plus
    /// any leakage out of the plane.
    pub residual: f64,
}

/// Rotation angle per plane, checked against the Coxeter element.
pub fn coxeter_rotation_angles(frame: &SpectralFrame) -> Result<Vec<PlaneRotation>> {
    let m = coxeter_element(&frame.data)?;
    let n = frame.rank();
    let h = frame.data.coxeter_number as f64;
    let apply = |x: &[f64]| -> Vec<f64> { (0..n).map(|i| (0..n).map(|j| m[(i, j)] * x[j]).sum()).collect() };

    let mut out = Vec::new();
    for (plane, &(i, j)) in frame.plane_pairing.iter().enumerate() {
        let xi = &frame.vectors[i].root_coeffs;
        let xj = &frame.vectors[j].root_coeffs;
        let exponent = frame.vectors[i].exponent;
        let angle = 2.0 * PI * exponent as f64 / h;
        let (s, c) = angle.sin_cos();

        let mut best: Option<(i8, f64)> = None;
        for orientation in [1i8, -1] {
            let s = s * orientation as f64;
            // expected images: R x̂_i = c x̂_i + s x̂_j, R x̂_j = −s x̂_i + c x̂_j
            let targets = [
                (xi, [c, s]),
                (xj, [-s, c]),
            ];
            let mut residual: f64 = 0.0;
            for (src, [a, b]) in targets {
                let img = apply(src);
                let diff: Vec<f64> = (0..n).map(|k| img[k] - a * xi[k] - b * xj[k]).collect();
                residual = residual.max(frame.form(&diff, &diff).sqrt());
            }
            if best.is_none_or(|(_, r)| residual < r) {
                best = Some((orientation, residual));
            }
        }
        let (orientation, residual) = best.unwrap();
        if residual > FRAME_TOL {
            return Err(Error::RotationMismatch { plane, residual });
        }
        out.push(PlaneRotation {
            plane,
            exponent,
            angle,
            orientation,
            residual,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::cartan_matrix;
    use approx::assert_abs_diff_eq;

    fn frame(g: &str) -> SpectralFrame {
        orthonormal_frame(&cartan_matrix(g.parse().unwrap())).unwrap()
    }

    #[test]
    fn f4_eigenvalues() {
        let pairs = eigensystem(&cartan_matrix(GroupId::F4)).unwrap();
        // 2(1 − cos(mπ/12)) for m = 1, 5, 7, 11
        let expected = [0.0681483474218635, 1.4823619097949585, 2.5176380902050415, 3.9318516525781365];
        for (p, e) in pairs.iter().zip(expected) {
            assert_abs_diff_eq!(p.eigenvalue, e, epsilon = 1e-12);
        }
        let trace: f64 = pairs.iter().map(|p| p.eigenvalue).sum();
        assert_abs_diff_eq!(trace, 8.0, epsilon = 1e-12);
    }

    #[test]
    fn b6_closed_form_values() {
        let pairs = eigensystem(&cartan_matrix(GroupId::B6)).unwrap();
        let m3 = pairs.iter().find(|p| p.exponent == 3).unwrap();
        let m9 = pairs.iter().find(|p| p.exponent == 9).unwrap();
        assert_abs_diff_eq!(m3.eigenvalue, 2.0 - 2f64.sqrt(), epsilon = 1e-12);
        assert_abs_diff_eq!(m9.eigenvalue, 2.0 + 2f64.sqrt(), epsilon = 1e-12);
    }

    #[test]
    fn a1_single_pair() {
        let pairs = eigensystem(&cartan_matrix("A1".parse().unwrap())).unwrap();
        assert_eq!(pairs.len(), 1);
        assert_eq!(pairs[0].exponent, 1);
        assert_abs_diff_eq!(pairs[0].eigenvalue, 2.0, epsilon = 1e-15);
        let f = frame("A1");
        assert!(f.plane_pairing.is_empty());
        assert_eq!(f.unpaired, Some(0));
    }

    #[test]
    fn b6_frame_vector_two() {
        let f = frame("B6");
        let s2 = 2f64.sqrt();
        let pre = 1.0 / (12f64.sqrt() * (2.0 - s2).sqrt());
        let expected = [-s2, -2.0, -s2, 0.0, s2, 2.0].map(|x| x * pre);
        for (a, b) in f.vectors[1].root_coeffs.iter().zip(expected) {
            assert_abs_diff_eq!(*a, b, epsilon = 1e-12);
        }
        // the height-scaled eigenvectors of B6 are already unit length
        assert!(f.vectors.iter().all(|v| v.normalization == FrameNormalization::LastComponent));
    }

    #[test]
    fn e6_frame_vector_two() {
        let f = frame("E6");
        let expected = [-0.5, -0.5, 0.0, 0.5, 0.5, 0.0];
        for (a, b) in f.vectors[1].root_coeffs.iter().zip(expected) {
            assert_abs_diff_eq!(*a, b, epsilon = 1e-12);
        }
        assert_eq!(f.vectors[1].normalization, FrameNormalization::UnitFallback);
    }

    #[test]
    fn frames_are_orthonormal() {
        for g in ["A1", "A2", "A5", "B2", "B6", "C3", "C6", "D4", "D5", "D6", "E6", "E7", "E8", "F4", "G2"] {
            assert!(frame(g).orthonormality_defect() < FRAME_TOL, "{g}");
        }
    }

    #[test]
    fn beta_relations() {
        for g in ["F4", "B6", "E6", "A4", "G2"] {
            let f = frame(g);
            let h = f.data.coxeter_number as f64;
            let planes = coxeter_plane_pairs(&f);
            assert_eq!(planes.len(), f.rank() / 2);
            for p in &planes {
                assert_abs_diff_eq!(f.form(&p.beta_pos, &p.beta_pos), 2.0, epsilon = 1e-9);
                assert_abs_diff_eq!(f.form(&p.beta_neg, &p.beta_neg), 2.0, epsilon = 1e-9);
                assert_abs_diff_eq!(
                    f.form(&p.beta_pos, &p.beta_neg),
                    -2.0 * (p.exponent as f64 * PI / h).cos(),
                    epsilon = 1e-9
                );
            }
            for a in &planes {
                for b in &planes {
                    if a.index == b.index {
                        continue;
                    }
                    for x in [&a.beta_pos, &a.beta_neg] {
                        for y in [&b.beta_pos, &b.beta_neg] {
                            assert_abs_diff_eq!(f.form(x, y), 0.0, epsilon = 1e-9);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn f4_plane_one_roots() {
        // The two roots of plane 1 point along α1 + (√3+1)α3 and
        // (√3+1)/√2 α2 + √2 α4; which one is called β1 depends on the sign
        // of x̂4.
        let f = frame("F4");
        let p = &coxeter_plane_pairs(&f)[0];
        let s3 = 3f64.sqrt();
        let dir_a = [1.0, 0.0, s3 + 1.0, 0.0];
        let dir_b = [0.0, (s3 + 1.0) / 2f64.sqrt(), 0.0, 2f64.sqrt()];
        let parallel = |x: &[f64], d: &[f64]| {
            let cos = f.form(x, d) / (f.form(x, x) * f.form(d, d)).sqrt();
            (cos.abs() - 1.0).abs() < 1e-9
        };
        let (a, b) = (&p.beta_pos, &p.beta_neg);
        assert!(
            (parallel(a, &dir_a) && parallel(b, &dir_b)) || (parallel(a, &dir_b) && parallel(b, &dir_a))
        );
    }

    #[test]
    fn rotation_angles() {
        let deg = |x: f64| x * 180.0 / PI;
        for (g, expected) in [
            ("F4", vec![30.0, 150.0]),
            ("B6", vec![30.0, 90.0, 150.0]),
            ("E6", vec![30.0, 120.0, 150.0]),
        ] {
            let rot = coxeter_rotation_angles(&frame(g)).unwrap();
            let got: Vec<f64> = rot.iter().map(|r| deg(r.angle)).collect();
            assert_eq!(got.len(), expected.len());
            for (a, b) in got.iter().zip(&expected) {
                assert_abs_diff_eq!(*a, *b, epsilon = 1e-9);
            }
            assert!(rot.iter().all(|r| r.residual < 1e-9));
        }
    }

    #[test]
    fn rotation_holds_for_all_types() {
        for g in ["A3", "A6", "B3", "C4", "D4", "D5", "D7", "E7", "E8", "G2"] {
            coxeter_rotation_angles(&frame(g)).unwrap();
        }
    }

    #[test]
    fn coxeter_element_has_order_h() {
        for g in ["F4", "B6", "E6", "D5"] {
            let f = frame(g);
            let m = coxeter_element(&f.data).unwrap();
            let h = f.data.coxeter_number as usize;
            let mut p = DMatrix::<f64>::identity(f.rank(), f.rank());
            for _ in 0..h {
                p = &m * p;
            }
            for v in &f.vectors {
                let img: Vec<f64> = (0..f.rank())
                    .map(|i| (0..f.rank()).map(|j| p[(i, j)] * v.root_coeffs[j]).sum())
                    .collect();
                let diff: Vec<f64> = img.iter().zip(&v.root_coeffs).map(|(a, b)| a - b).collect();
                assert!(f.form(&diff, &diff).sqrt() < 1e-8, "{g}");
            }
        }
    }

    #[test]
    fn sign_rule() {
        for g in ["F4", "B6", "E6"] {
            let f = frame(g);
            for v in &f.vectors {
                let last = *v.root_coeffs.last().unwrap();
                if last.abs() > 1e-9 {
                    assert!(last > 0.0);
                } else {
                    let first = v.root_coeffs.iter().find(|c| c.abs() > 1e-9).unwrap();
                    assert!(*first < 0.0);
                }
            }
        }
    }
}
