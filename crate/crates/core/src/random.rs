//! Seeded test-matrix generators.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::linalg::reflector;
use crate::matrix::{CMatrix, ONE};
use crate::spectrum::Spectrum;

/// Deterministic generator used by every seeded routine in the crate.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Standard complex Gaussian `(x + iy)/sqrt(2)`.
pub fn complex_gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
}

/// Uniform sample from the closed complex unit disk.
pub fn unit_disk<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    let r = rng.gen::<f64>().sqrt();
    let theta = rng.gen::<f64>() * std::f64::consts::TAU;
    Complex64::from_polar(r, theta)
}

pub fn random_complex_gaussian(rows: usize, cols: usize, seed: u64) -> CMatrix {
    let mut rng = rng_from_seed(seed);
    CMatrix::from_fn(rows, cols, |_, _| complex_gaussian(&mut rng))
}

/// Haar-distributed unitary: QR of a complex Gaussian matrix with the phases
/// of `diag(R)` folded back into `Q`.
pub fn random_unitary(n: usize, seed: u64) -> CMatrix {
    assert!(n >= 1, "random_unitary needs n >= 1");
    let mut a = random_complex_gaussian(n, n, seed);
    let mut q = CMatrix::identity(n);
    for k in 0..n {
        let col: Vec<Complex64> = (k..n).map(|i| a[(i, k)]).collect();
        if let Some(h) = reflector(&col) {
            h.apply_left(&mut a, k, k, n);
            h.apply_right(&mut q, 0, n, k);
        }
    }
    for j in 0..n {
        let r = a[(j, j)];
        let phase = if r.norm() > 0.0 { r / r.norm() } else { ONE };
        for i in 0..n {
            q[(i, j)] *= phase;
        }
    }
    q
}

/// `U diag(eigenvalues) U*` with `U = random_unitary(n, seed)`.
pub fn random_normal_matrix(spec: &Spectrum, seed: u64) -> CMatrix {
    let diag = spec.expanded();
    let u = random_unitary(diag.len(), seed);
    u.matmul(&CMatrix::from_diagonal(&diag)).matmul(&u.adjoint())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::unitary_defect;
    use crate::matrix::c64;
    use crate::normality::commutator_defect;
    use crate::spectrum::eigenvalues;

    #[test]
    fn scalar_unitary_is_unimodular() {
        let u = random_unitary(1, 9);
        assert!((u[(0, 0)].norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn unitary_is_deterministic_and_unitary() {
        assert_eq!(random_unitary(5, 3), random_unitary(5, 3));
        assert_ne!(random_unitary(5, 3), random_unitary(5, 4));
        for seed in 0..20 {
            assert!(unitary_defect(&random_unitary(5, seed)) <= 1e-12);
            assert!(unitary_defect(&random_unitary(4, seed)) <= 1e-12);
        }
    }

    #[test]
    fn normal_matrix_trivial_spectra() {
        let zero = random_normal_matrix(&Spectrum::new(vec![(c64(0.0, 0.0), 4)], 0.0).unwrap(), 1);
        assert!(zero.max_abs() < 1e-15);
        let id = random_normal_matrix(&Spectrum::new(vec![(c64(1.0, 0.0), 4)], 0.0).unwrap(), 1);
        assert!((&id - &CMatrix::identity(4)).max_abs() < 1e-14);
    }

    #[test]
    fn normal_matrix_round_trip() {
        let spec = Spectrum::new(vec![(c64(1.0, 0.0), 1), (c64(-1.0, 0.0), 1), (c64(0.0, 1.0), 1)], 1e-8).unwrap();
        let t = random_normal_matrix(&spec, 17);
        assert!(commutator_defect(&t).unwrap() <= 1e-12);
        let got = eigenvalues(&t, 1e-8).unwrap();
        assert_eq!(got.distinct_count(), 3);
        for &(lam, m) in spec.entries() {
            let (hit, hm) = got.nearest(lam);
            assert_eq!(hm, m);
            assert!((hit - lam).norm() <= 1e-10);
        }
    }
}
