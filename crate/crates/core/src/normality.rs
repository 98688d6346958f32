//! Normality criteria and the aggregated certificate.
//!
//! A square matrix is normal iff any (hence all) of the following hold:
//! its resolvent norm equals `1/dist(z, σ(T))` off the spectrum; equality
//! holds at one probe point per eigenvalue where that eigenvalue is the
//! nearest one; `‖p(T)‖ = max |p(λ)|` for every polynomial; its Schur factor
//! is diagonal. Each criterion is measured here as a nonnegative deviation
//! that vanishes (up to roundoff) exactly for normal input.

use num_complex::Complex64;
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{scale_of, spectral_norm};
use crate::matfunc::poly_eval;
use crate::matrix::{c64, CMatrix, ONE};
use crate::poly::Polynomial;
use crate::random::rng_from_seed;
use crate::resolvent::{ExtendedNorm, Region, Resolvent};
use crate::schur::{schur, SchurDecomposition};
use crate::spectrum::{Spectrum, DEFAULT_CLUSTER_TOL};

/// Default relative tolerance of the point and two-by-two criteria.
pub const DEFAULT_POINT_TOL: f64 = 1e-8;

/// `‖T*T - TT*‖ / max(‖T‖², 1)`.
pub fn commutator_defect(t: &CMatrix) -> Result<f64> {
    t.ensure_square()?;
    let adj = t.adjoint();
    let c = &adj.matmul(t) - &t.matmul(&adj);
    let tn = spectral_norm(t);
    Ok(spectral_norm(&c) / (tn * tn).max(1.0))
}

/// Signed values `‖(zI-T)^-1‖ dist(z, σ) - 1` at each sample. Never below
/// `-1e-9` up to roundoff, since `dist(z, σ) ≥ 1/‖(zI-T)^-1‖`.
pub fn distance_formula_signed(t: &CMatrix, spec: &Spectrum, samples: &[Complex64]) -> Result<Vec<f64>> {
    let resolvent = Resolvent::new(t)?;
    samples
        .iter()
        .map(|&z| match resolvent.norm_at(z) {
            ExtendedNorm::Infinite => Err(Error::RejectedSample { z }),
            ExtendedNorm::Finite(r) => Ok(r * spec.distance(z) - 1.0),
        })
        .collect()
}

/// `max |‖(zI-T)^-1‖ dist(z, σ(T)) - 1|` over the samples; zero for an empty
/// sample list.
pub fn distance_formula_deviation(t: &CMatrix, samples: &[Complex64]) -> Result<f64> {
    let spec = crate::spectrum::eigenvalues(t, DEFAULT_CLUSTER_TOL)?;
    let signed = distance_formula_signed(t, &spec, samples)?;
    Ok(signed.iter().map(|v| v.abs()).fold(0.0, f64::max))
}

/// One probe per distinct eigenvalue, placed so that the eigenvalue is the
/// unique nearest point of the spectrum.
///
/// The probe for `λ_k` sits at distance `min(g_k/4, 1 + max|λ|)` from it,
/// where `g_k` is the gap to the nearest other eigenvalue, in the direction
/// pointing away from the centroid of the other eigenvalues. A lone
/// eigenvalue gets distance `1 + max(1, |λ|)` along the positive real axis.
pub fn default_probe_points(spec: &Spectrum) -> Vec<Complex64> {
    let reps: Vec<Complex64> = spec.representatives().collect();
    if reps.len() == 1 {
        let lam = reps[0];
        return vec![lam + 1.0 + lam.norm().max(1.0)];
    }
    let max_mod = spec.max_modulus();
    reps.iter()
        .enumerate()
        .map(|(k, &lam)| {
            let others = reps.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, &w)| w);
            let gap = others.clone().map(|w| (w - lam).norm()).fold(f64::INFINITY, f64::min);
            let count = (reps.len() - 1) as f64;
            let centroid = others.sum::<Complex64>() / count;
            let away = lam - centroid;
            let dir = if away.norm() > 0.0 { away / away.norm() } else { ONE };
            let delta = (gap / 4.0).min(1.0 + max_mod);
            lam + dir * delta
        })
        .collect()
}

/// How many distinct eigenvalues get a probe.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum ProbeMode {
    /// Every distinct eigenvalue.
    #[default]
    AllDistinct,
    /// Drop the probe of one simple eigenvalue (the last one in spectrum
    /// order) when such an eigenvalue exists.
    SkipOneSimple,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PointRecord {
    pub eigenvalue: Complex64,
    pub probe: Complex64,
    pub resolvent_norm: ExtendedNorm,
    /// `|z_k - λ_k|^-1`.
    pub target: f64,
    /// `|‖(z_k I - T)^-1‖ |z_k - λ_k| - 1|`.
    #[serde(serialize_with = "crate::report::tagged_f64")]
    pub relative_gap: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PointCriterion {
    pub records: Vec<PointRecord>,
    pub all_pass: bool,
}

impl PointCriterion {
    pub fn max_gap(&self) -> f64 {
        self.records.iter().map(|r| r.relative_gap).fold(0.0, f64::max)
    }
}

fn point_criterion_with(t: &CMatrix, spec: &Spectrum, tol: f64, mode: ProbeMode) -> Result<PointCriterion> {
    let resolvent = Resolvent::new(t)?;
    let reps: Vec<(Complex64, usize)> = spec.entries().to_vec();
    let mut probes: Vec<(Complex64, Complex64)> = reps.iter().map(|e| e.0).zip(default_probe_points(spec)).collect();
    if mode == ProbeMode::SkipOneSimple && reps.len() > 1 {
        if let Some(k) = reps.iter().rposition(|&(_, m)| m == 1) {
            probes.remove(k);
        }
    }
    let records: Vec<PointRecord> = probes
        .into_iter()
        .map(|(lam, z)| {
            let norm = resolvent.norm_at(z);
            let dist = (z - lam).norm();
            let gap = match norm {
                ExtendedNorm::Finite(r) => (r * dist - 1.0).abs(),
                ExtendedNorm::Infinite => f64::INFINITY,
            };
            PointRecord {
                eigenvalue: lam,
                probe: z,
                resolvent_norm: norm,
                target: 1.0 / dist,
                relative_gap: gap,
                pass: gap <= tol,
            }
        })
        .collect();
    let all_pass = records.iter().all(|r| r.pass);
    Ok(PointCriterion { records, all_pass })
}

/// Checks `‖(z_k I - T)^-1‖ = |z_k - λ_k|^-1` at the default probes.
pub fn point_criterion(t: &CMatrix, tol: f64, mode: ProbeMode) -> Result<PointCriterion> {
    let spec = crate::spectrum::eigenvalues(t, DEFAULT_CLUSTER_TOL)?;
    point_criterion_with(t, &spec, tol, mode)
}

/// Single-point test for 2x2 matrices: equality of the distance formula at
/// one point off the spectrum already forces normality.
pub fn two_by_two_criterion(t: &CMatrix, z: Complex64, tol: f64) -> Result<bool> {
    if t.rows() != 2 || t.cols() != 2 {
        return Err(Error::DimensionMismatch(format!(
            "two-by-two criterion needs a 2x2 matrix, got {}x{}",
            t.rows(),
            t.cols()
        )));
    }
    let spec = crate::spectrum::eigenvalues(t, DEFAULT_CLUSTER_TOL)?;
    let signed = distance_formula_signed(t, &spec, &[z]).map_err(|_| Error::OnSpectrum { z })?;
    Ok(signed[0].abs() <= tol)
}

/// `[‖b_1‖, ..., ‖b_{n-1}‖]` where `b_k` is the column below the diagonal
/// entry opening the trailing `(k+1) x (k+1)` block of the lower Schur factor.
pub fn departure_profile(decomposition: &SchurDecomposition) -> Vec<f64> {
    let l = &decomposition.lower_factor;
    let n = l.rows();
    (1..n)
        .map(|k| {
            let top = n - k - 1;
            (top + 1..n).map(|i| l[(i, top)].norm_sqr()).sum::<f64>().sqrt()
        })
        .collect()
}

/// Subdiagonal column norms of the lower Schur factor, see
/// [`departure_profile`].
pub fn schur_departure_profile(t: &CMatrix) -> Result<Vec<f64>> {
    let n = t.ensure_square()?;
    if n < 2 {
        return Err(Error::InvalidArgument("departure profile needs n >= 2".into()));
    }
    Ok(departure_profile(&schur(t)?))
}

/// `|‖p(T)‖ / max_λ |p(λ)| - 1|`, or `None` when `p` is negligible on the
/// spectrum and at `T` alike. Infinite when `p` vanishes on the spectrum but
/// not at `T`.
pub fn polynomial_ratio_deviation(t: &CMatrix, eigenvalues: &[Complex64], p: &Polynomial) -> Option<f64> {
    let on_spec = eigenvalues.iter().map(|&l| p.eval(l).norm()).fold(0.0, f64::max);
    let at_t = spectral_norm(&poly_eval(p, t));
    if on_spec < 1e-12 {
        if at_t < 1e-12 {
            None
        } else {
            Some(f64::INFINITY)
        }
    } else {
        Some((at_t / on_spec - 1.0).abs())
    }
}

fn polynomial_deviation_with(t: &CMatrix, eigenvalues: &[Complex64], trials: usize, seed: u64) -> f64 {
    let n = t.rows();
    let s = scale_of(t);
    let normalized = t.scale(c64(1.0 / s, 0.0));
    let scaled_eigs: Vec<Complex64> = eigenvalues.iter().map(|l| l / s).collect();
    let mut rng = rng_from_seed(seed);
    let mut worst: f64 = 0.0;
    for _ in 0..trials {
        let degree = if n > 1 { rng.gen_range(0..n) } else { 0 };
        let p = Polynomial::random(degree, &mut rng);
        if let Some(d) = polynomial_ratio_deviation(&normalized, &scaled_eigs, &p) {
            worst = worst.max(d);
        }
    }
    worst
}

/// Worst `|‖p(T)‖ / max|p(λ)| - 1|` over seeded random polynomials of
/// degree at most `n - 1` with coefficients in the unit disk. The matrix is
/// first divided by `max(‖T‖, 1)`.
pub fn polynomial_norm_deviation(t: &CMatrix, trials: usize, seed: u64) -> Result<f64> {
    t.ensure_square()?;
    if trials == 0 {
        return Err(Error::InvalidArgument("trials must be at least 1".into()));
    }
    let d = schur(t)?;
    Ok(polynomial_deviation_with(t, &d.eigenvalues(), trials, seed))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Normal,
    NotNormal,
    Inconclusive,
}

#[derive(Debug, Clone, Serialize)]
pub struct CertifyConfig {
    /// Criteria at or below this value count as satisfied.
    pub tol: f64,
    /// A criterion above `tol * refute_factor` refutes normality.
    pub refute_factor: f64,
    pub seed: u64,
    pub polynomial_trials: usize,
    /// Random samples for the distance formula, on top of four ring points
    /// per distinct eigenvalue.
    pub distance_samples: usize,
    pub cluster_tol: f64,
    pub probe_mode: ProbeMode,
}

impl Default for CertifyConfig {
    fn default() -> Self {
        Self {
            tol: 1e-8,
            refute_factor: 10.0,
            seed: 42,
            polynomial_trials: 32,
            distance_samples: 64,
            cluster_tol: DEFAULT_CLUSTER_TOL,
            probe_mode: ProbeMode::AllDistinct,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Thresholds {
    pub normal: f64,
    pub not_normal: f64,
}

/// Every criterion measurement plus the verdict.
#[derive(Debug, Clone, Serialize)]
pub struct NormalityReport {
    pub dimension: usize,
    #[serde(serialize_with = "crate::report::tagged_f64")]
    pub commutator_defect: f64,
    #[serde(serialize_with = "crate::report::tagged_f64")]
    pub distance_formula_deviation: f64,
    /// Smallest signed value `‖R(z)‖ dist(z, σ) - 1` seen; never below
    /// roundoff.
    #[serde(serialize_with = "crate::report::tagged_f64")]
    pub distance_formula_min_signed: f64,
    pub distance_samples: usize,
    pub point_criterion_results: Vec<PointRecord>,
    #[serde(serialize_with = "crate::report::tagged_f64")]
    pub point_criterion_max_gap: f64,
    pub polynomial_deviation: ExtendedNorm,
    pub schur_subdiagonal_norms: Vec<f64>,
    /// `max ‖b_k‖ / max(‖T‖, 1)`.
    #[serde(serialize_with = "crate::report::tagged_f64")]
    pub schur_departure: f64,
    pub eigenvalues: Vec<(Complex64, usize)>,
    pub schur: Option<SchurDecomposition>,
    pub thresholds: Thresholds,
    pub config: CertifyConfig,
    pub verdict: Verdict,
    pub failure_reason: Option<String>,
}

impl NormalityReport {
    /// Criteria that feed the verdict, by name.
    pub fn criteria(&self) -> [(&'static str, f64); 5] {
        [
            ("commutator_defect", self.commutator_defect),
            ("distance_formula_deviation", self.distance_formula_deviation),
            ("point_criterion_max_gap", self.point_criterion_max_gap),
            ("polynomial_deviation", self.polynomial_deviation.to_f64()),
            ("schur_departure", self.schur_departure),
        ]
    }
}

/// Applies the threshold band to a set of criterion values.
pub fn verdict_for(values: &[f64], tol: f64, refute_factor: f64) -> Verdict {
    if values.iter().any(|&v| v > tol * refute_factor || v.is_nan()) {
        Verdict::NotNormal
    } else if values.iter().all(|&v| v <= tol) {
        Verdict::Normal
    } else {
        Verdict::Inconclusive
    }
}

/// Off-spectrum sample points for the distance formula: uniform points in
/// the padded spectral box plus four ring points around every eigenvalue.
pub fn distance_samples(spec: &Spectrum, count: usize, seed: u64, scale: f64) -> Vec<Complex64> {
    let region = Region::auto(&[spec]);
    let mut rng = rng_from_seed(seed ^ 0x5eed_d157);
    let mut out = Vec::with_capacity(count + 4 * spec.distinct_count());
    for z in default_probe_points(spec) {
        let (lam, _) = spec.nearest(z);
        let offset = z - lam;
        for k in 0..4 {
            out.push(lam + offset * Complex64::i().powu(k));
        }
    }
    for _ in 0..count {
        let x = region.x_min + (region.x_max - region.x_min) * rng.gen::<f64>();
        let y = region.y_min + (region.y_max - region.y_min) * rng.gen::<f64>();
        out.push(c64(x, y));
    }
    out.retain(|&z| spec.distance(z) > 1e-6 * scale);
    out
}

/// Measures every criterion and reaches a verdict.
///
/// Only a non-square input is an error; a failed decomposition yields an
/// `Inconclusive` report carrying the reason.
pub fn certify(t: &CMatrix, config: &CertifyConfig) -> Result<NormalityReport> {
    let n = t.ensure_square()?;
    let thresholds = Thresholds { normal: config.tol, not_normal: config.tol * config.refute_factor };
    let commutator = commutator_defect(t)?;
    let scale = scale_of(t);

    let decomposition = match schur(t) {
        Ok(d) => d,
        Err(e) => {
            return Ok(NormalityReport {
                dimension: n,
                commutator_defect: commutator,
                distance_formula_deviation: f64::NAN,
                distance_formula_min_signed: f64::NAN,
                distance_samples: 0,
                point_criterion_results: vec![],
                point_criterion_max_gap: f64::NAN,
                polynomial_deviation: ExtendedNorm::Finite(f64::NAN),
                schur_subdiagonal_norms: vec![],
                schur_departure: f64::NAN,
                eigenvalues: vec![],
                schur: None,
                thresholds,
                config: config.clone(),
                verdict: Verdict::Inconclusive,
                failure_reason: Some(e.to_string()),
            })
        }
    };
    let raw_eigs = decomposition.eigenvalues();
    let spec = Spectrum::cluster(&raw_eigs, config.cluster_tol * scale)?;

    let samples = distance_samples(&spec, config.distance_samples, config.seed, scale);
    // Singular samples off the clustered spectrum count as infinite deviation.
    let resolvent = Resolvent::new(t)?;
    let signed: Vec<f64> = samples
        .iter()
        .map(|&z| match resolvent.norm_at(z) {
            ExtendedNorm::Infinite => f64::INFINITY,
            ExtendedNorm::Finite(r) => r * spec.distance(z) - 1.0,
        })
        .collect();
    let distance_dev = signed.iter().map(|v| v.abs()).fold(0.0, f64::max);
    let min_signed = signed.iter().copied().fold(f64::INFINITY, f64::min);

    let points = point_criterion_with(t, &spec, config.tol, config.probe_mode)?;
    let poly_dev = polynomial_deviation_with(t, &raw_eigs, config.polynomial_trials, config.seed);
    let profile = departure_profile(&decomposition);
    let departure = profile.iter().copied().fold(0.0, f64::max) / scale;

    let mut report = NormalityReport {
        dimension: n,
        commutator_defect: commutator,
        distance_formula_deviation: distance_dev,
        distance_formula_min_signed: min_signed,
        distance_samples: samples.len(),
        point_criterion_max_gap: points.max_gap(),
        point_criterion_results: points.records,
        polynomial_deviation: if poly_dev.is_finite() {
            ExtendedNorm::Finite(poly_dev)
        } else {
            ExtendedNorm::Infinite
        },
        schur_subdiagonal_norms: profile,
        schur_departure: departure,
        eigenvalues: spec.entries().to_vec(),
        schur: Some(decomposition),
        thresholds,
        config: config.clone(),
        verdict: Verdict::Inconclusive,
        failure_reason: None,
    };
    let values: Vec<f64> = report.criteria().iter().map(|&(_, v)| v).collect();
    report.verdict = verdict_for(&values, config.tol, config.refute_factor);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::{random_normal_matrix, random_unitary};

    const GOLDEN: f64 = 1.618_033_988_749_895;

    fn jordan() -> CMatrix {
        CMatrix::from_real_rows(&[[0.0, 1.0], [0.0, 0.0]])
    }

    fn normal_example(seed: u64) -> CMatrix {
        let spec = Spectrum::simple(&[c64(1.0, 0.0), c64(-0.5, 0.7), c64(0.2, -1.1), c64(2.0, 0.3)]);
        random_normal_matrix(&spec, seed)
    }

    #[test]
    fn commutator_examples() {
        let d = CMatrix::from_diagonal(&[c64(1.0, 2.0), c64(-3.0, 0.0)]);
        assert_eq!(commutator_defect(&d).unwrap(), 0.0);
        // N*N = diag(0,1), NN* = diag(1,0); difference diag(-1,1) has norm 1, ‖N‖ = 1.
        assert!((commutator_defect(&jordan()).unwrap() - 1.0).abs() < 1e-15);
        let t = CMatrix::from_real_rows(&[[1.0, 2.0, 0.0], [0.0, 1.0, 3.0], [1.0, 0.0, 0.0]]);
        let u = random_unitary(3, 5);
        let ut = u.matmul(&t).matmul(&u.adjoint());
        let a = commutator_defect(&t).unwrap();
        let b = commutator_defect(&ut).unwrap();
        assert!((a - b).abs() <= 1e-10 * a.max(1.0));
    }

    #[test]
    fn distance_formula_examples() {
        let t = normal_example(3);
        let spec = crate::spectrum::eigenvalues(&t, 1e-8).unwrap();
        let samples = distance_samples(&spec, 100, 1, 1.0);
        assert!(distance_formula_deviation(&t, &samples).unwrap() <= 1e-8);

        let d = distance_formula_deviation(&jordan(), &[c64(1.0, 0.0)]).unwrap();
        assert!((d - (GOLDEN - 1.0)).abs() < 1e-12);
        assert_eq!(distance_formula_deviation(&jordan(), &[]).unwrap(), 0.0);
        assert!(matches!(distance_formula_deviation(&jordan(), &[c64(0.0, 0.0)]), Err(Error::RejectedSample { .. })));
    }

    #[test]
    fn probe_examples() {
        let single = Spectrum::simple(&[c64(0.0, 0.0)]);
        assert_eq!(default_probe_points(&single), vec![c64(2.0, 0.0)]);

        let pair = Spectrum::simple(&[c64(1.0, 0.0), c64(-1.0, 0.0)]);
        let probes = default_probe_points(&pair);
        assert_eq!(probes, vec![c64(1.5, 0.0), c64(-1.5, 0.0)]);
        for (p, lam) in probes.iter().zip([c64(1.0, 0.0), c64(-1.0, 0.0)]) {
            assert_eq!(pair.distance(*p), (p - lam).norm());
        }

        let wide = Spectrum::simple(&[c64(0.0, 0.0), c64(10.0, 0.0)]);
        let probes = default_probe_points(&wide);
        assert!(((probes[0] - c64(0.0, 0.0)).norm() - 2.5).abs() < 1e-15);
    }

    #[test]
    fn probes_are_strictly_nearest() {
        let spec = Spectrum::simple(&[c64(0.0, 0.0), c64(1.0, 0.0), c64(0.5, 0.8), c64(-2.0, 1.0), c64(0.5, 0.0)]);
        let reps: Vec<Complex64> = spec.representatives().collect();
        for (k, p) in default_probe_points(&spec).iter().enumerate() {
            let own = (p - reps[k]).norm();
            for (i, r) in reps.iter().enumerate() {
                if i != k {
                    assert!((p - r).norm() > own);
                }
            }
        }
    }

    #[test]
    fn point_criterion_examples() {
        let pc = point_criterion(&normal_example(8), DEFAULT_POINT_TOL, ProbeMode::AllDistinct).unwrap();
        assert!(pc.all_pass);
        assert_eq!(pc.records.len(), 4);

        let pc = point_criterion(&jordan(), DEFAULT_POINT_TOL, ProbeMode::AllDistinct).unwrap();
        assert_eq!(pc.records.len(), 1);
        assert!(!pc.all_pass);
        // (2I - N)^-1 = [[1/2, 1/4], [0, 1/2]] has norm (1/4 + sqrt(17/16)) / 2.
        let norm = (0.25 + (17.0f64 / 16.0).sqrt()) / 2.0;
        assert!((pc.records[0].relative_gap - (2.0 * norm - 1.0)).abs() < 1e-12);
        assert!(pc.records[0].relative_gap > 0.1);

        let s = CMatrix::from_real_rows(&[[5.0]]);
        assert!(point_criterion(&s, DEFAULT_POINT_TOL, ProbeMode::AllDistinct).unwrap().all_pass);
    }

    #[test]
    fn point_criterion_skip_mode() {
        let pc = point_criterion(&normal_example(2), DEFAULT_POINT_TOL, ProbeMode::SkipOneSimple).unwrap();
        assert_eq!(pc.records.len(), 3);
        assert!(pc.all_pass);
    }

    #[test]
    fn two_by_two_examples() {
        let d = CMatrix::from_real_rows(&[[1.0, 0.0], [0.0, 2.0]]);
        assert!(two_by_two_criterion(&d, c64(0.0, 0.0), DEFAULT_POINT_TOL).unwrap());
        assert!(!two_by_two_criterion(&jordan(), c64(1.0, 0.0), DEFAULT_POINT_TOL).unwrap());
        let h = CMatrix::from_real_rows(&[[0.0, 1.0], [1.0, 0.0]]);
        assert_eq!(commutator_defect(&h).unwrap(), 0.0);
        assert!(two_by_two_criterion(&h, c64(0.0, 2.0), DEFAULT_POINT_TOL).unwrap());
        assert!(two_by_two_criterion(&CMatrix::identity(3), c64(0.0, 2.0), 1e-8).is_err());
        assert!(two_by_two_criterion(&jordan(), c64(0.0, 0.0), 1e-8).is_err());
    }

    #[test]
    fn departure_profile_examples() {
        let p = schur_departure_profile(&normal_example(1)).unwrap();
        assert_eq!(p.len(), 3);
        assert!(p.iter().all(|&b| b <= 1e-10 * 2.1));

        let p = schur_departure_profile(&jordan()).unwrap();
        assert!((p[0] - 1.0).abs() < 1e-15);

        let t = crate::random::random_complex_gaussian(6, 6, 77);
        let p = schur_departure_profile(&t).unwrap();
        let eigs = schur(&t).unwrap().eigenvalues();
        let henrici = t.frobenius_norm().powi(2) - eigs.iter().map(|l| l.norm_sqr()).sum::<f64>();
        let sum: f64 = p.iter().map(|b| b * b).sum();
        assert!((sum - henrici).abs() <= 1e-10 * henrici);

        assert!(schur_departure_profile(&CMatrix::identity(1)).is_err());
    }

    #[test]
    fn polynomial_examples() {
        assert!(polynomial_norm_deviation(&normal_example(4), 32, 9).unwrap() <= 1e-8);
        let p = Polynomial::monomial(1);
        let eigs = [c64(0.0, 0.0), c64(0.0, 0.0)];
        assert_eq!(polynomial_ratio_deviation(&jordan(), &eigs, &p), Some(f64::INFINITY));
        let c = Polynomial::constant(c64(0.3, -0.4));
        let t = crate::random::random_complex_gaussian(4, 4, 3);
        let eigs = schur(&t).unwrap().eigenvalues();
        let d = polynomial_ratio_deviation(&t, &eigs, &c).unwrap();
        assert!(d < 1e-15);
        assert_eq!(polynomial_ratio_deviation(&t, &eigs, &Polynomial::constant(c64(0.0, 0.0))), None);
    }

    #[test]
    fn certify_examples() {
        let config = CertifyConfig::default();
        let r = certify(&normal_example(11), &config).unwrap();
        assert_eq!(r.verdict, Verdict::Normal, "{:?}", r.criteria());

        let r = certify(&jordan(), &config).unwrap();
        assert_eq!(r.verdict, Verdict::NotNormal);
        assert!((r.commutator_defect - 1.0).abs() < 1e-15);
        assert!(r.point_criterion_max_gap > 0.1);
        assert!(r.polynomial_deviation.is_infinite() || r.polynomial_deviation.to_f64() > 1e-7);

        assert!(certify(&CMatrix::zeros(2, 3), &config).is_err());
    }

    #[test]
    fn certify_straddling_is_inconclusive() {
        // Tiny strictly-lower coupling on top of a diagonal: the linear
        // criteria land between the two thresholds.
        let eta = 3e-8;
        let t = CMatrix::from_rows(&[[c64(1.0, 0.0), c64(0.0, 0.0)], [c64(eta, 0.0), c64(-1.0, 0.0)]]);
        let r = certify(&t, &CertifyConfig::default()).unwrap();
        let values: Vec<f64> = r.criteria().iter().map(|c| c.1).collect();
        assert!(values.iter().all(|&v| v <= 1e-7), "{values:?}");
        assert!(values.iter().any(|&v| v > 1e-8), "{values:?}");
        assert_eq!(r.verdict, Verdict::Inconclusive);
    }

    #[test]
    fn verdict_band() {
        assert_eq!(verdict_for(&[1e-9, 1e-12], 1e-8, 10.0), Verdict::Normal);
        assert_eq!(verdict_for(&[1e-9, 5e-8], 1e-8, 10.0), Verdict::Inconclusive);
        assert_eq!(verdict_for(&[1e-9, 2e-7], 1e-8, 10.0), Verdict::NotNormal);
        assert_eq!(verdict_for(&[f64::INFINITY], 1e-8, 10.0), Verdict::NotNormal);
    }
}
