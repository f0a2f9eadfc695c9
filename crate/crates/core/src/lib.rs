//! Root systems, Weyl orbits and the cut-and-project construction of planar
//! quasicrystals with dihedral symmetry.
//!
//! The pipeline: pick a [`GroupId`], build its [`SpectralFrame`] from the
//! eigenvectors of the Cartan matrix, enumerate a box of the root or weight
//! lattice, keep the points whose perpendicular components fall in the
//! projected Voronoi cell ([`WindowSpec`]), and read off their components in
//! a Coxeter plane.
//!
//! ```
//! use quasiproj_core::*;
//!
//! let data = cartan_matrix(GroupId::F4);
//! let frame = orthonormal_frame(&data).unwrap();
//! let cell = voronoi_vertices(&data, LatticeKind::Root).unwrap();
//! let window = window_radius(&cell, &frame, &[1, 2]).unwrap();
//! let gens = Generators::preferred(GroupId::F4, LatticeKind::Root);
//! let clip = complete_disc_radius(&frame, gens, 3, [0, 3], &window);
//! let points = enumerate_with(&data, gens, 3, DEFAULT_POINT_BUDGET).unwrap();
//! let set = cut_and_project(points, &frame, [0, 3], &window, clip).unwrap();
//! assert_eq!(detect_symmetry_order(&set, 24).order, 12);
//! ```

pub mod coxeter;
pub mod error;
pub mod projector;
pub mod spectral;
pub mod window;

pub use coxeter::{
    basis_convert, cartan_inverse, cartan_matrix, group_order, group_order_bounded, inner_product,
    is_positive_definite, metric_tensor, orbit_points, parse_ratio, ratio_to_f64, simple_reflection, to_weight,
    weyl_orbit, weyl_orbit_bounded, Basis, ConvertedVector, Family, GroupId, LatticeVector, Orbit, Rational,
    RationalMatrix, RootSystemData, DEFAULT_ORBIT_BUDGET,
};
pub use error::{Error, Result};
pub use projector::{
    cmp_xy, components, components_f64, cut_and_project, detect_symmetry_order, incident_angles,
    interior_vertices, minimal_edges, vertex_degrees, ComponentVector, EdgeSet, GridIndex, ProjectedPoint,
    ProjectedPointSet, SymmetryReport, DEDUP_TOL, SYMMETRY_TOL,
};
pub use spectral::{
    bipartition, coxeter_element, coxeter_plane_pairs, coxeter_rotation_angles, eigensystem, orthonormal_frame,
    CoxeterPlane, EigenPair, FrameNormalization, FrameVector, PlaneRotation, SpectralFrame, EXPONENT_MATCH_TOL,
    FRAME_TOL,
};
pub use window::{
    complete_disc_radius, enumerate_lattice, enumerate_with, voronoi_vertices, window_radius, Generators,
    LatticeIter, LatticeKind, VoronoiSpec, WindowSpec, BOUNDARY_TOL, DEFAULT_POINT_BUDGET,
};
