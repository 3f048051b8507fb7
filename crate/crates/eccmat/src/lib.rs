//! Eccentricity matrices of finite simple connected graphs: construction,
//! exact and floating-point spectral invariants (determinant,
//! characteristic polynomial, spectral radius, ε-energy, ε-Wiener index),
//! graph family generators, exhaustive enumeration, and a verification
//! harness for the spectral-radius and energy bounds these matrices obey.

pub mod config;
pub mod ecc;
pub mod error;
pub mod generators;
pub mod graph;
pub mod graph6;
pub mod matrix;
pub mod spectra;
pub mod verify;

pub use ecc::{
    distance_matrix, eccentricity_matrix, epsilon_profile, is_diametrical, is_epsilon_regular,
    EpsilonProfile,
};
pub use error::{Error, Result};
pub use generators::{
    all_connected_graphs, all_trees, canonical_form, make_family, random_connected_graph,
    FamilySpec,
};
pub use graph::{parse_edge_list, Graph, Metric, INF};
pub use graph6::{parse_graph6, to_graph6};
pub use matrix::IntMatrix;
pub use spectra::{
    char_poly_exact, determinant_exact, eigenvalues_sym, energy, interlacing_check, is_cospectral,
    max_quotient_bound, quotient_bound, spectral_radius, CharPoly, Spectrum,
};
pub use verify::{CheckReport, Evidence};
