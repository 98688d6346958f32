//! Eigenvalue multisets with tolerance-based clustering.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::scale_of;
use crate::matrix::CMatrix;
use crate::schur::schur;

/// Default relative clustering tolerance.
pub const DEFAULT_CLUSTER_TOL: f64 = 1e-8;

/// Distinct eigenvalue representatives with algebraic multiplicities.
///
/// Representatives are pairwise farther apart than `cluster_tol`, which is an
/// absolute distance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    entries: Vec<(Complex64, usize)>,
    cluster_tol: f64,
}

impl Spectrum {
    pub fn new(entries: Vec<(Complex64, usize)>, cluster_tol: f64) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidArgument("spectrum must be nonempty".into()));
        }
        if cluster_tol.is_nan() || cluster_tol < 0.0 {
            return Err(Error::InvalidArgument("cluster tolerance must be nonnegative".into()));
        }
        for &(z, m) in &entries {
            if m == 0 {
                return Err(Error::InvalidArgument(format!("eigenvalue {z} has multiplicity 0")));
            }
            if !z.re.is_finite() || !z.im.is_finite() {
                return Err(Error::InvalidArgument(format!("eigenvalue {z} is not finite")));
            }
        }
        for (i, &(a, _)) in entries.iter().enumerate() {
            for &(b, _) in &entries[i + 1..] {
                if (a - b).norm() <= cluster_tol {
                    return Err(Error::InvalidArgument(format!(
                        "eigenvalues {a} and {b} are within the cluster tolerance {cluster_tol:e}"
                    )));
                }
            }
        }
        Ok(Self { entries, cluster_tol })
    }

    /// Each eigenvalue with multiplicity one. Panics on coincident values.
    pub fn simple(values: &[Complex64]) -> Self {
        Self::new(values.iter().map(|&z| (z, 1)).collect(), 0.0).expect("distinct eigenvalues")
    }

    /// Clusters a raw eigenvalue list: values closer than `cluster_tol`
    /// (absolute) are merged into their multiplicity-weighted mean, closest
    /// pair first, until all representatives are separated.
    pub fn cluster(values: &[Complex64], cluster_tol: f64) -> Result<Self> {
        let mut clusters: Vec<(Complex64, usize)> = values.iter().map(|&z| (z, 1)).collect();
        loop {
            let mut best: Option<(usize, usize, f64)> = None;
            for i in 0..clusters.len() {
                for j in i + 1..clusters.len() {
                    let d = (clusters[i].0 - clusters[j].0).norm();
                    if d <= cluster_tol && best.is_none_or(|(_, _, bd)| d < bd) {
                        best = Some((i, j, d));
                    }
                }
            }
            let Some((i, j, _)) = best else { break };
            let (zi, mi) = clusters[i];
            let (zj, mj) = clusters.remove(j);
            let m = mi + mj;
            clusters[i] = ((zi * mi as f64 + zj * mj as f64) / m as f64, m);
        }
        Self::new(clusters, cluster_tol)
    }

    pub fn entries(&self) -> &[(Complex64, usize)] {
        &self.entries
    }

    pub fn representatives(&self) -> impl Iterator<Item = Complex64> + '_ {
        self.entries.iter().map(|&(z, _)| z)
    }

    pub fn cluster_tol(&self) -> f64 {
        self.cluster_tol
    }

    pub fn distinct_count(&self) -> usize {
        self.entries.len()
    }

    /// Sum of multiplicities.
    pub fn dimension(&self) -> usize {
        self.entries.iter().map(|&(_, m)| m).sum()
    }

    /// Eigenvalues repeated by multiplicity, in representative order.
    pub fn expanded(&self) -> Vec<Complex64> {
        self.entries.iter().flat_map(|&(z, m)| std::iter::repeat_n(z, m)).collect()
    }

    pub fn max_modulus(&self) -> f64 {
        self.representatives().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Representative nearest to `z` and its multiplicity.
    pub fn nearest(&self, z: Complex64) -> (Complex64, usize) {
        *self.entries.iter().min_by(|a, b| (a.0 - z).norm().total_cmp(&(b.0 - z).norm())).expect("nonempty spectrum")
    }

    /// `dist(z, spectrum)`.
    pub fn distance(&self, z: Complex64) -> f64 {
        self.representatives().map(|w| (z - w).norm()).fold(f64::INFINITY, f64::min)
    }

    /// Axis-aligned bounding box `(x_min, x_max, y_min, y_max)`.
    pub fn bounding_box(&self) -> (f64, f64, f64, f64) {
        let mut bb = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
        for z in self.representatives() {
            bb.0 = bb.0.min(z.re);
            bb.1 = bb.1.max(z.re);
            bb.2 = bb.2.min(z.im);
            bb.3 = bb.3.max(z.im);
        }
        bb
    }
}

/// Eigenvalues of `t` from the diagonal of its Schur factor, clustered at
/// `cluster_tol * max(‖T‖, 1)`.
pub fn eigenvalues(t: &CMatrix, cluster_tol: f64) -> Result<Spectrum> {
    let decomposition = schur(t)?;
    Spectrum::cluster(&decomposition.lower_factor.diagonal(), cluster_tol * scale_of(t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::c64;

    #[test]
    fn diagonal_with_repeat() {
        let t = CMatrix::from_real_rows(&[[1.0, 0.0, 0.0], [0.0, 2.0, 0.0], [0.0, 0.0, 2.0]]);
        let s = eigenvalues(&t, 1e-8).unwrap();
        assert_eq!(s.distinct_count(), 2);
        let (one, m1) = s.nearest(c64(1.0, 0.0));
        let (two, m2) = s.nearest(c64(2.0, 0.0));
        assert!((one - c64(1.0, 0.0)).norm() < 1e-14 && m1 == 1);
        assert!((two - c64(2.0, 0.0)).norm() < 1e-14 && m2 == 2);
    }

    #[test]
    fn nilpotent_is_double_zero() {
        let t = CMatrix::from_real_rows(&[[0.0, 1.0], [0.0, 0.0]]);
        let s = eigenvalues(&t, 1e-8).unwrap();
        assert_eq!(s.entries(), &[(c64(0.0, 0.0), 2)]);
    }

    #[test]
    fn forced_merge() {
        let t = CMatrix::from_real_rows(&[[1.0, 0.0], [0.0, 1.0 + 1e-12]]);
        let s = eigenvalues(&t, 1e-8).unwrap();
        assert_eq!(s.distinct_count(), 1);
        assert_eq!(s.entries()[0].1, 2);
        assert!((s.entries()[0].0 - c64(1.0, 0.0)).norm() < 1e-11);
    }

    #[test]
    fn rejects_invalid() {
        assert!(Spectrum::new(vec![], 0.0).is_err());
        assert!(Spectrum::new(vec![(c64(1.0, 0.0), 0)], 0.0).is_err());
        assert!(Spectrum::new(vec![(c64(1.0, 0.0), 1), (c64(1.0, 1e-9), 1)], 1e-8).is_err());
    }

    #[test]
    fn distance_examples() {
        let s = Spectrum::simple(&[c64(1.0, 0.0), c64(-1.0, 0.0)]);
        assert!((s.distance(c64(0.0, 3.0)) - 10f64.sqrt()).abs() < 1e-15);
        assert_eq!(s.distance(c64(1.0, 0.0)), 0.0);
        let s = Spectrum::simple(&[c64(1.0, 0.0), c64(2.0, 0.0), c64(-3.0, 0.0)]);
        assert_eq!(s.distance(c64(0.0, 0.0)), 1.0);
    }
}
