//! Resolvent norms, pseudospectra and numerical normality certification for
//! small dense complex matrices.
//!
//! The crate is organised bottom-up:
//!
//! * [`matrix`], [`linalg`], [`svd`], [`schur`], [`spectrum`], [`poly`],
//!   [`random`]: self-contained dense kernels and seeded generators.
//! * [`resolvent`]: `‖(zI - T)^-1‖` via the smallest singular value, and
//!   pseudospectrum grids.
//! * [`normality`]: the individual normality criteria and [`certify`].
//! * [`equivalence`]: pseudospectra, norm-behavior and unitary-similarity
//!   comparisons of matrix pairs.
//! * [`matfunc`]: polynomials of matrices, the resolvent interpolant,
//!   contour quadrature and Putzer's exponential.
//! * [`io`]: matrix files, grid CSV and argument parsers.

pub mod equivalence;
pub mod error;
pub mod io;
pub mod linalg;
pub mod matfunc;
pub mod matrix;
pub mod normality;
pub mod poly;
pub mod random;
pub mod report;
pub mod resolvent;
pub mod schur;
pub mod spectrum;
pub mod svd;

pub use num_complex::Complex64;

pub use equivalence::{
    char_poly, norm_behavior_equal, pseudospectra_equal, unitary_similarity, ComparisonDetail, ComparisonMode,
    ComparisonReport,
};
pub use error::{Error, Result};
pub use linalg::{block_lower_inverse, determinant, inverse, spectral_norm, unitary_defect};
pub use matfunc::{cauchy_contour_poly, hermite_resolvent_interpolant, poly_eval, putzer_exp};
pub use matrix::{c64, conjugate_transpose, CMatrix};
pub use normality::{
    certify, commutator_defect, default_probe_points, distance_formula_deviation, point_criterion,
    polynomial_norm_deviation, schur_departure_profile, two_by_two_criterion, CertifyConfig, NormalityReport,
    ProbeMode, Verdict,
};
pub use poly::Polynomial;
pub use random::{random_normal_matrix, random_unitary};
pub use resolvent::{
    dist_to_spectrum, epsilon_level_mask, pseudospectrum_grid, resolvent_matrix, resolvent_norm, ExtendedNorm,
    PseudospectrumGrid, Region, RegionSpec,
};
pub use schur::{schur, SchurDecomposition};
pub use spectrum::{eigenvalues, Spectrum};
pub use svd::{singular_values, svd, Svd};
