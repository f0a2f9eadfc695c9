use proptest::prelude::*;
use quasiproj_core::*;

const GROUPS: [GroupId; 3] = [GroupId::F4, GroupId::B6, GroupId::E6];

fn vector(n: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-6i64..=6, n)
}

fn group_and_vector() -> impl Strategy<Value = (GroupId, Vec<i64>)> {
    prop::sample::select(GROUPS.to_vec()).prop_flat_map(|g| (Just(g), vector(g.rank())))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn reflections_are_involutions((g, a) in group_and_vector(), i in 0usize..4) {
        let data = cartan_matrix(g);
        for basis in [Basis::Weight, Basis::Root] {
            let v = LatticeVector { coeffs: a.clone(), basis };
            let once = simple_reflection(&data, &v, i).unwrap();
            prop_assert_eq!(simple_reflection(&data, &once, i).unwrap(), v);
        }
    }

    #[test]
    fn reflections_preserve_the_form((g, a) in group_and_vector(), b in vector(6), i in 0usize..4) {
        let data = cartan_matrix(g);
        let u = LatticeVector::weight(a);
        let v = LatticeVector::root(b[..g.rank()].to_vec());
        let before = inner_product(&data, &u, &v).unwrap();
        let ru = simple_reflection(&data, &u, i).unwrap();
        let rv = simple_reflection(&data, &v, i).unwrap();
        prop_assert_eq!(inner_product(&data, &ru, &rv).unwrap(), before);
    }

    #[test]
    fn frame_is_an_isometry((g, a) in group_and_vector()) {
        let data = cartan_matrix(g);
        let frame = orthonormal_frame(&data).unwrap();
        let v = LatticeVector::weight(a);
        let exact = ratio_to_f64(&inner_product(&data, &v, &v).unwrap());
        let q = components(&v, &frame).unwrap();
        prop_assert!((q.norm_sq() - exact).abs() <= 1e-9 * exact.max(1.0));
    }

    #[test]
    fn coxeter_element_rotates_each_plane((g, b) in group_and_vector()) {
        let data = cartan_matrix(g);
        let frame = orthonormal_frame(&data).unwrap();
        let m = coxeter_element(&data).unwrap();
        let rotations = coxeter_rotation_angles(&frame).unwrap();
        let n = data.rank();
        let image: Vec<i64> = (0..n)
            .map(|i| (0..n).map(|j| m[(i, j)].round() as i64 * b[j]).sum())
            .collect();
        let p = components(&LatticeVector::root(b), &frame).unwrap().values;
        let q = components(&LatticeVector::root(image), &frame).unwrap().values;
        for r in &rotations {
            let (i, j) = frame.plane_pairing[r.plane];
            let t = r.angle * r.orientation as f64;
            let (s, c) = t.sin_cos();
            prop_assert!((q[i] - (c * p[i] - s * p[j])).abs() < 1e-8);
            prop_assert!((q[j] - (s * p[i] + c * p[j])).abs() < 1e-8);
        }
    }
}

#[test]
fn coxeter_element_is_integral() {
    for g in GROUPS {
        let m = coxeter_element(&cartan_matrix(g)).unwrap();
        assert!(m.iter().all(|x| x.fract() == 0.0));
    }
}
