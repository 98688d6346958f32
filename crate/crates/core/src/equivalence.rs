//! Pairwise comparisons: identical pseudospectra, same norm behavior, and
//! unitary similarity with an explicit witness.
//!
//! The universally quantified conditions (all `z`, all `p`) are sampled on a
//! grid or on seeded random polynomials, so every decision here is numerical
//! and carries the tolerance it was made at.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{spectral_norm, unitary_defect};
use crate::matfunc::poly_eval;
use crate::matrix::{c64, CMatrix};
use crate::normality::{certify, CertifyConfig, Verdict};
use crate::poly::Polynomial;
use crate::random::rng_from_seed;
use crate::report::tagged_f64;
use crate::resolvent::{ExtendedNorm, RegionSpec, Resolvent};
use crate::schur::schur;
use crate::spectrum::{Spectrum, DEFAULT_CLUSTER_TOL};

/// Grid used by [`unitary_similarity`] for its pseudospectra check.
pub const SIMILARITY_GRID: (usize, usize) = (41, 41);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ComparisonMode {
    Pseudospectra,
    NormBehavior,
    UnitarySimilarity,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ComparisonDetail {
    Node {
        z: Complex64,
        a: ExtendedNorm,
        b: ExtendedNorm,
        #[serde(serialize_with = "tagged_f64")]
        deviation: f64,
    },
    Polynomial {
        coefficients: Vec<Complex64>,
        norm_a: f64,
        norm_b: f64,
        deviation: f64,
    },
    Check {
        name: String,
        #[serde(serialize_with = "tagged_f64")]
        value: f64,
        pass: bool,
    },
}

#[derive(Debug, Clone, Serialize)]
pub struct ComparisonReport {
    pub mode: ComparisonMode,
    #[serde(serialize_with = "tagged_f64")]
    pub max_deviation: f64,
    pub tol: f64,
    pub decision: bool,
    /// Unitary `W` with `A = W B W*`; only in unitary-similarity mode.
    pub witness: Option<CMatrix>,
    pub details: Vec<ComparisonDetail>,
}

/// Monic `det(zI - T)` expanded from the Schur eigenvalues.
pub fn char_poly(t: &CMatrix) -> Result<Polynomial> {
    t.ensure_square()?;
    Ok(Polynomial::from_roots(&schur(t)?.eigenvalues()))
}

fn node_deviation(a: ExtendedNorm, b: ExtendedNorm) -> f64 {
    match (a, b) {
        (ExtendedNorm::Infinite, ExtendedNorm::Infinite) => 0.0,
        (ExtendedNorm::Finite(x), ExtendedNorm::Finite(y)) => (x - y).abs() / x.max(y),
        _ => f64::INFINITY,
    }
}

/// Compares resolvent norms node by node. The matrices may differ in size.
pub fn pseudospectra_equal(
    a: &CMatrix,
    b: &CMatrix,
    region: RegionSpec,
    nx: usize,
    ny: usize,
    tol: f64,
) -> Result<ComparisonReport> {
    if nx < 2 || ny < 2 {
        return Err(Error::InvalidArgument(format!("grid must be at least 2x2, got {nx}x{ny}")));
    }
    let ra = Resolvent::new(a)?;
    let rb = Resolvent::new(b)?;
    let region = match region {
        RegionSpec::Rect(r) => r,
        RegionSpec::Auto => {
            let sa = crate::spectrum::eigenvalues(a, DEFAULT_CLUSTER_TOL)?;
            let sb = crate::spectrum::eigenvalues(b, DEFAULT_CLUSTER_TOL)?;
            crate::resolvent::Region::auto(&[&sa, &sb])
        }
    };
    let mut details = Vec::with_capacity(nx * ny);
    let mut worst: f64 = 0.0;
    for j in 0..ny {
        for i in 0..nx {
            let z = region.node(i, j, nx, ny);
            let (na, nb) = (ra.norm_at(z), rb.norm_at(z));
            let deviation = node_deviation(na, nb);
            worst = worst.max(deviation);
            details.push(ComparisonDetail::Node { z, a: na, b: nb, deviation });
        }
    }
    Ok(ComparisonReport {
        mode: ComparisonMode::Pseudospectra,
        max_deviation: worst,
        tol,
        decision: worst <= tol,
        witness: None,
        details,
    })
}

/// Compares `‖p(A)‖` with `‖p(B)‖` for the monomials `z, ..., z^degree`
/// followed by `trials` seeded random polynomials of that degree with
/// coefficients in the unit disk. Both matrices are first divided by the
/// common scale `max(‖A‖, ‖B‖, 1)`. `degree` defaults to
/// `max(n_A, n_B) - 1`, at least 1.
pub fn norm_behavior_equal(
    a: &CMatrix,
    b: &CMatrix,
    degree: Option<usize>,
    trials: usize,
    seed: u64,
    tol: f64,
) -> Result<ComparisonReport> {
    a.ensure_square()?;
    b.ensure_square()?;
    let degree = degree.unwrap_or_else(|| (a.rows().max(b.rows()) - 1).max(1));
    if degree == 0 {
        return Err(Error::InvalidArgument("degree must be at least 1".into()));
    }
    if trials == 0 {
        return Err(Error::InvalidArgument("trials must be at least 1".into()));
    }
    let s = spectral_norm(a).max(spectral_norm(b)).max(1.0);
    let a = a.scale(c64(1.0 / s, 0.0));
    let b = b.scale(c64(1.0 / s, 0.0));

    let mut rng = rng_from_seed(seed);
    let polys = (1..=degree)
        .map(Polynomial::monomial)
        .chain((0..trials).map(|_| Polynomial::random(degree, &mut rng)))
        .collect::<Vec<_>>();

    let mut details = Vec::with_capacity(polys.len());
    let mut worst: f64 = 0.0;
    for p in polys {
        let norm_a = spectral_norm(&poly_eval(&p, &a));
        let norm_b = spectral_norm(&poly_eval(&p, &b));
        let deviation = (norm_a - norm_b).abs() / norm_a.max(norm_b).max(1e-12);
        worst = worst.max(deviation);
        details.push(ComparisonDetail::Polynomial {
            coefficients: p.coefficients().to_vec(),
            norm_a,
            norm_b,
            deviation,
        });
    }
    Ok(ComparisonReport {
        mode: ComparisonMode::NormBehavior,
        max_deviation: worst,
        tol,
        decision: worst <= tol,
        witness: None,
        details,
    })
}

/// Unitary `V` with `V* T V` diagonal and its diagonal ordered by the
/// clusters of `reference` (real part, then imaginary part).
fn sorted_diagonalizer(t: &CMatrix, reference: &Spectrum) -> Result<(CMatrix, Vec<Complex64>)> {
    let d = schur(t)?;
    let eigs = d.eigenvalues();
    let mut order: Vec<usize> = (0..eigs.len()).collect();
    let key = |i: usize| reference.nearest(eigs[i]).0;
    order.sort_by(|&i, &j| {
        let (ki, kj) = (key(i), key(j));
        ki.re.total_cmp(&kj.re).then(ki.im.total_cmp(&kj.im)).then(eigs[i].im.total_cmp(&eigs[j].im)).then(i.cmp(&j))
    });
    let n = eigs.len();
    let u = &d.unitary_factor;
    let v = CMatrix::from_fn(n, n, |r, c| u[(r, order[c])]);
    Ok((v, order.iter().map(|&i| eigs[i]).collect()))
}

/// Decides unitary similarity of a normal `A` and an arbitrary `B` of the
/// same size: equal characteristic polynomials plus identical pseudospectra.
/// On success the returned witness `W` satisfies `A = W B W*`.
pub fn unitary_similarity(a: &CMatrix, b: &CMatrix, tol: f64) -> Result<ComparisonReport> {
    let n = a.ensure_square()?;
    b.ensure_square()?;
    if b.rows() != n {
        return Err(Error::DimensionMismatch(format!(
            "unitary similarity needs equal sizes, got {n} and {}",
            b.rows()
        )));
    }
    let config = CertifyConfig::default();
    let report_a = certify(a, &config)?;
    if report_a.verdict != Verdict::Normal {
        return Err(Error::HypothesisViolated("A not normal".into()));
    }

    let scale = spectral_norm(a).max(spectral_norm(b)).max(1.0);
    let chi_a = char_poly(a)?;
    let chi_b = char_poly(b)?;
    let coeff_scale = chi_a.coefficients().iter().map(|c| c.norm()).fold(1.0, f64::max);
    let chi_gap = chi_a.max_coefficient_distance(&chi_b) / coeff_scale;
    let chi_ok = chi_gap <= tol;

    let (gx, gy) = SIMILARITY_GRID;
    let pseudo = pseudospectra_equal(a, b, RegionSpec::Auto, gx, gy, tol)?;

    let mut details = vec![
        ComparisonDetail::Check { name: "char_poly".into(), value: chi_gap, pass: chi_ok },
        ComparisonDetail::Check { name: "pseudospectra".into(), value: pseudo.max_deviation, pass: pseudo.decision },
    ];
    let max_deviation = chi_gap.max(pseudo.max_deviation);
    let mut report = ComparisonReport {
        mode: ComparisonMode::UnitarySimilarity,
        max_deviation,
        tol,
        decision: false,
        witness: None,
        details: Vec::new(),
    };
    if !(chi_ok && pseudo.decision) {
        report.details = details;
        return Ok(report);
    }

    let report_b = certify(b, &config)?;
    let b_normal = report_b.verdict == Verdict::Normal;
    details.push(ComparisonDetail::Check {
        name: "b_normal".into(),
        value: report_b.commutator_defect,
        pass: b_normal,
    });
    if !b_normal {
        report.details = details;
        return Ok(report);
    }

    let reference = crate::spectrum::eigenvalues(a, DEFAULT_CLUSTER_TOL)?;
    let (ua, _) = sorted_diagonalizer(a, &reference)?;
    let (ub, _) = sorted_diagonalizer(b, &reference)?;
    let w = ua.matmul(&ub.adjoint());
    let defect = unitary_defect(&w);
    let residual = spectral_norm(&(a - &w.matmul(b).matmul(&w.adjoint())));
    details.push(ComparisonDetail::Check { name: "witness_unitarity".into(), value: defect, pass: defect <= 1e-10 });
    details.push(ComparisonDetail::Check {
        name: "witness_reconstruction".into(),
        value: residual / scale,
        pass: residual <= 1e-8 * scale,
    });
    if defect > 1e-10 || residual > 1e-8 * scale {
        return Err(Error::WitnessFailure(format!(
            "unitary defect {defect:.3e}, reconstruction residual {:.3e} (relative); eigenvalue clusters may be mismatched",
            residual / scale
        )));
    }
    report.decision = true;
    report.witness = Some(w);
    report.details = details;
    Ok(report)
}
