//! Norms, reflectors, LU-based inversion and the structured block inverse.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::{CMatrix, ONE, ZERO};
use crate::svd::singular_values;

/// Unit Householder vector `v` with `(I - 2 v v*) x = beta e_1`.
pub(crate) struct Reflector {
    pub v: Vec<Complex64>,
    pub beta: Complex64,
}

/// Returns `None` when `x` is already a multiple of `e_1`.
pub(crate) fn reflector(x: &[Complex64]) -> Option<Reflector> {
    let tail: f64 = x[1..].iter().map(|z| z.norm_sqr()).sum();
    if tail == 0.0 {
        return None;
    }
    let alpha = x[0];
    let norm = (alpha.norm_sqr() + tail).sqrt();
    let phase = if alpha.norm() == 0.0 { ONE } else { alpha / alpha.norm() };
    let beta = -phase * norm;
    let mut v = x.to_vec();
    v[0] -= beta;
    let vn = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    for z in &mut v {
        *z /= vn;
    }
    Some(Reflector { v, beta })
}

impl Reflector {
    /// `A[r0.., c0..c1] <- (I - 2vv*) A[r0.., c0..c1]`.
    pub fn apply_left(&self, a: &mut CMatrix, r0: usize, c0: usize, c1: usize) {
        for j in c0..c1 {
            let s: Complex64 = self.v.iter().enumerate().map(|(i, vi)| vi.conj() * a[(r0 + i, j)]).sum();
            if s == ZERO {
                continue;
            }
            for (i, vi) in self.v.iter().enumerate() {
                a[(r0 + i, j)] -= 2.0 * vi * s;
            }
        }
    }

    /// `A[r0..r1, c0..] <- A[r0..r1, c0..] (I - 2vv*)`.
    pub fn apply_right(&self, a: &mut CMatrix, r0: usize, r1: usize, c0: usize) {
        for i in r0..r1 {
            let s: Complex64 = self.v.iter().enumerate().map(|(k, vk)| a[(i, c0 + k)] * vk).sum();
            if s == ZERO {
                continue;
            }
            for (k, vk) in self.v.iter().enumerate() {
                a[(i, c0 + k)] -= 2.0 * s * vk.conj();
            }
        }
    }
}

/// Largest singular value.
pub fn spectral_norm(m: &CMatrix) -> f64 {
    singular_values(m)[0]
}

/// Smallest singular value, `min(rows, cols)`-th.
pub fn smallest_singular_value(m: &CMatrix) -> f64 {
    *singular_values(m).last().expect("nonempty matrix")
}

/// `‖U*U - I‖`.
pub fn unitary_defect(u: &CMatrix) -> f64 {
    let g = u.adjoint().matmul(u);
    spectral_norm(&g.shift(ONE))
}

/// `max(‖T‖, 1)`, the scale all relative tolerances refer to.
pub fn scale_of(t: &CMatrix) -> f64 {
    spectral_norm(t).max(1.0)
}

/// LU factorisation with partial pivoting, packed in one matrix.
pub(crate) struct Lu {
    lu: CMatrix,
    perm: Vec<usize>,
    sign: f64,
}

pub(crate) fn lu(m: &CMatrix) -> Result<Lu> {
    let n = m.ensure_square()?;
    let mut a = m.clone();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut sign = 1.0;
    for k in 0..n {
        let p = (k..n).max_by(|&i, &j| a[(i, k)].norm().total_cmp(&a[(j, k)].norm())).unwrap();
        if a[(p, k)] == ZERO {
            return Err(Error::Singular);
        }
        if p != k {
            for j in 0..n {
                let tmp = a[(k, j)];
                a[(k, j)] = a[(p, j)];
                a[(p, j)] = tmp;
            }
            perm.swap(k, p);
            sign = -sign;
        }
        let pivot = a[(k, k)];
        for i in k + 1..n {
            let f = a[(i, k)] / pivot;
            a[(i, k)] = f;
            if f == ZERO {
                continue;
            }
            for j in k + 1..n {
                let akj = a[(k, j)];
                a[(i, j)] -= f * akj;
            }
        }
    }
    Ok(Lu { lu: a, perm, sign })
}

impl Lu {
    pub fn solve(&self, b: &[Complex64]) -> Vec<Complex64> {
        let n = self.perm.len();
        let mut x: Vec<Complex64> = self.perm.iter().map(|&p| b[p]).collect();
        for i in 0..n {
            for k in 0..i {
                let l = self.lu[(i, k)];
                x[i] = x[i] - l * x[k];
            }
        }
        for i in (0..n).rev() {
            for k in i + 1..n {
                let u = self.lu[(i, k)];
                x[i] = x[i] - u * x[k];
            }
            x[i] /= self.lu[(i, i)];
        }
        x
    }

    pub fn determinant(&self) -> Complex64 {
        self.lu.diagonal().iter().fold(Complex64::new(self.sign, 0.0), |acc, d| acc * d)
    }
}

/// Dense inverse by LU with partial pivoting.
pub fn inverse(m: &CMatrix) -> Result<CMatrix> {
    let n = m.ensure_square()?;
    let f = lu(m)?;
    let mut inv = CMatrix::zeros(n, n);
    let mut e = vec![ZERO; n];
    for j in 0..n {
        e.iter_mut().for_each(|x| *x = ZERO);
        e[j] = ONE;
        for (i, x) in f.solve(&e).into_iter().enumerate() {
            inv[(i, j)] = x;
        }
    }
    Ok(inv)
}

pub fn determinant(m: &CMatrix) -> Result<Complex64> {
    m.ensure_square()?;
    match lu(m) {
        Ok(f) => Ok(f.determinant()),
        Err(Error::Singular) => Ok(ZERO),
        Err(e) => Err(e),
    }
}

fn check_block(m: &CMatrix, block: &'static str) -> Result<()> {
    m.ensure_square()?;
    let s = singular_values(m);
    let sigma_min = *s.last().unwrap();
    if sigma_min <= 1e-14 * s[0] {
        return Err(Error::SingularBlock { block, sigma_min });
    }
    Ok(())
}

/// Inverse of the block lower-triangular matrix `[[A, 0], [B, C]]`, assembled
/// as `[[A^-1, 0], [-C^-1 B A^-1, C^-1]]`.
pub fn block_lower_inverse(a: &CMatrix, b: &CMatrix, c: &CMatrix) -> Result<CMatrix> {
    check_block(a, "A")?;
    check_block(c, "C")?;
    let k = a.rows();
    let m = c.rows();
    if b.rows() != m || b.cols() != k {
        return Err(Error::DimensionMismatch(format!("B must be {m}x{k}, got {}x{}", b.rows(), b.cols())));
    }
    let a_inv = inverse(a)?;
    let c_inv = inverse(c)?;
    let lower = c_inv.matmul(b).matmul(&a_inv).scale(-ONE);
    let mut out = CMatrix::zeros(k + m, k + m);
    for i in 0..k {
        for j in 0..k {
            out[(i, j)] = a_inv[(i, j)];
        }
    }
    for i in 0..m {
        for j in 0..k {
            out[(k + i, j)] = lower[(i, j)];
        }
        for j in 0..m {
            out[(k + i, k + j)] = c_inv[(i, j)];
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::c64;

    #[test]
    fn spectral_norm_examples() {
        assert!((spectral_norm(&CMatrix::identity(3)) - 1.0).abs() < 1e-15);
        let n = CMatrix::from_real_rows(&[[0.0, 1.0], [0.0, 0.0]]);
        assert!((spectral_norm(&n) - 1.0).abs() < 1e-15);
        // Largest root of x^2 - 3x + 1 (characteristic polynomial of M*M), square-rooted.
        let m = CMatrix::from_real_rows(&[[1.0, 1.0], [0.0, 1.0]]);
        let lam = (3.0 + 5f64.sqrt()) / 2.0;
        let golden = 1.618_033_988_749_895;
        assert!((lam.sqrt() - golden).abs() < 1e-15);
        assert!((spectral_norm(&m) - golden).abs() <= 1e-12 * golden);
    }

    #[test]
    fn unitary_defect_examples() {
        assert!(unitary_defect(&CMatrix::identity(4)) < 1e-15);
        let two = CMatrix::identity(2).scale(c64(2.0, 0.0));
        assert!((unitary_defect(&two) - 3.0).abs() < 1e-14);
    }

    #[test]
    fn block_inverse_scalar_blocks() {
        let a = CMatrix::from_real_rows(&[[2.0]]);
        let b = CMatrix::from_real_rows(&[[3.0]]);
        let c = CMatrix::from_real_rows(&[[4.0]]);
        let inv = block_lower_inverse(&a, &b, &c).unwrap();
        let expected = CMatrix::from_real_rows(&[[0.5, 0.0], [-3.0 / 8.0, 0.25]]);
        assert!((&inv - &expected).max_abs() < 1e-15);
    }

    #[test]
    fn block_inverse_decoupled() {
        let a = CMatrix::from_real_rows(&[[2.0, 1.0], [0.0, 1.0]]);
        let c = CMatrix::from_real_rows(&[[5.0]]);
        let b = CMatrix::zeros(1, 2);
        let inv = block_lower_inverse(&a, &b, &c).unwrap();
        let a_inv = inverse(&a).unwrap();
        assert!((&inv.submatrix(0, 2, 0, 2) - &a_inv).max_abs() < 1e-15);
        assert!((inv[(2, 2)] - c64(0.2, 0.0)).norm() < 1e-15);
        assert_eq!(inv[(2, 0)], ZERO);
        assert_eq!(inv[(2, 1)], ZERO);
    }

    #[test]
    fn block_inverse_singular_block() {
        let a = CMatrix::from_real_rows(&[[1.0, 1.0], [1.0, 1.0]]);
        let b = CMatrix::zeros(1, 2);
        let c = CMatrix::from_real_rows(&[[1.0]]);
        assert!(matches!(block_lower_inverse(&a, &b, &c), Err(Error::SingularBlock { block: "A", .. })));
        let z = CMatrix::zeros(1, 1);
        assert!(matches!(
            block_lower_inverse(&c, &CMatrix::zeros(1, 1), &z),
            Err(Error::SingularBlock { block: "C", .. })
        ));
    }

    #[test]
    fn determinant_of_triangular() {
        let m = CMatrix::from_rows(&[[c64(2.0, 1.0), c64(5.0, 0.0)], [c64(0.0, 0.0), c64(0.0, 3.0)]]);
        let d = determinant(&m).unwrap();
        assert!((d - c64(2.0, 1.0) * c64(0.0, 3.0)).norm() < 1e-14);
        let s = CMatrix::from_real_rows(&[[1.0, 2.0], [2.0, 4.0]]);
        assert_eq!(determinant(&s).unwrap(), ZERO);
    }
}
