//! Fixtures shared by the benchmarks.

use quasiproj_core::{
    cartan_matrix, complete_disc_radius, cut_and_project, enumerate_with, orthonormal_frame, voronoi_vertices,
    window_radius, GroupId, Generators, LatticeKind, ProjectedPointSet, DEFAULT_POINT_BUDGET,
};

/// Full pipeline on plane 1 with the automatic window and disc clipping.
pub fn project(group: GroupId, kind: LatticeKind, range: u32) -> ProjectedPointSet {
    let data = cartan_matrix(group);
    let frame = orthonormal_frame(&data).expect("frame");
    let n = data.rank();
    let par = [0, n - 1];
    let perp: Vec<usize> = (1..n - 1).collect();
    let window = window_radius(&voronoi_vertices(&data, kind).expect("cell"), &frame, &perp).expect("window");
    let gens = Generators::preferred(group, kind);
    let clip = complete_disc_radius(&frame, gens, range, par, &window);
    let points = enumerate_with(&data, gens, range, DEFAULT_POINT_BUDGET).expect("budget");
    cut_and_project(points, &frame, par, &window, clip).expect("projection")
}

/// A jittered square grid of about `n` points, for the planar analysis.
pub fn scattered(n: usize) -> ProjectedPointSet {
    let side = (n as f64).sqrt().ceil() as usize;
    let mut coords = Vec::with_capacity(side * side);
    let mut state = 0x2545_f491_4f6c_dd1du64;
    let mut jitter = || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        (state >> 11) as f64 / (1u64 << 53) as f64 * 0.4
    };
    for i in 0..side {
        for j in 0..side {
            coords.push([i as f64 + jitter(), j as f64 + jitter()]);
        }
    }
    ProjectedPointSet::from_coords(GroupId::F4, [0, 3], &coords)
}
