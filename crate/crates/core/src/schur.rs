//! Complex Schur decomposition `T = U L U*` with `L` lower triangular.
//!
//! The upper Schur form `T = Q R Q*` is computed by Householder reduction to
//! Hessenberg form followed by single-shift complex QR with deflation. The
//! diagonal of `R` is reordered by adjacent Givens swaps, then both factors
//! are flipped by the reversal permutation `J`: `L = J R J`, `U = Q J`.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{reflector, spectral_norm, unitary_defect};
use crate::matrix::{CMatrix, ZERO};

#[derive(Debug, Clone, Serialize)]
pub struct SchurDecomposition {
    #[serde(skip)]
    pub unitary_factor: CMatrix,
    #[serde(skip)]
    pub lower_factor: CMatrix,
    /// `‖T - U L U*‖ / max(‖T‖, 1)`.
    pub residual_reconstruction: f64,
    /// `‖U*U - I‖`.
    pub residual_unitarity: f64,
}

impl SchurDecomposition {
    /// Diagonal of `L`; the eigenvalues of `T` with multiplicity, in
    /// descending modulus from the top-left corner.
    pub fn eigenvalues(&self) -> Vec<Complex64> {
        self.lower_factor.diagonal()
    }
}

/// Schur decomposition in the lower-triangular convention.
pub fn schur(t: &CMatrix) -> Result<SchurDecomposition> {
    let n = t.ensure_square()?;
    let (mut q, mut r) = if is_upper_triangular(t) {
        (CMatrix::identity(n), t.clone())
    } else if is_lower_triangular(t) {
        (reversal(n), flip(t))
    } else {
        upper_schur(t)?
    };
    sort_ascending_modulus(&mut q, &mut r);

    let lower_factor = flip(&r);
    let unitary_factor = CMatrix::from_fn(n, n, |i, j| q[(i, n - 1 - j)]);

    let tn = spectral_norm(t);
    let recon = unitary_factor.matmul(&lower_factor).matmul(&unitary_factor.adjoint());
    let residual_reconstruction = spectral_norm(&(t - &recon)) / tn.max(1.0);
    let residual_unitarity = unitary_defect(&unitary_factor);
    Ok(SchurDecomposition { unitary_factor, lower_factor, residual_reconstruction, residual_unitarity })
}

fn is_upper_triangular(t: &CMatrix) -> bool {
    (0..t.rows()).all(|i| (0..i).all(|j| t[(i, j)] == ZERO))
}

fn is_lower_triangular(t: &CMatrix) -> bool {
    (0..t.rows()).all(|i| (i + 1..t.cols()).all(|j| t[(i, j)] == ZERO))
}

fn reversal(n: usize) -> CMatrix {
    CMatrix::from_fn(n, n, |i, j| if i + j == n - 1 { crate::matrix::ONE } else { ZERO })
}

/// `J M J`.
fn flip(m: &CMatrix) -> CMatrix {
    let n = m.rows();
    CMatrix::from_fn(n, n, |i, j| m[(n - 1 - i, n - 1 - j)])
}

/// Complex rotation `G = [[c, s], [-conj(s), c]]` with `G [x; y] = [r; 0]`.
#[derive(Clone, Copy)]
struct Rotation {
    c: f64,
    s: Complex64,
}

impl Rotation {
    fn zeroing(x: Complex64, y: Complex64) -> Self {
        if y == ZERO {
            return Self { c: 1.0, s: ZERO };
        }
        if x == ZERO {
            return Self { c: 0.0, s: y.conj() / y.norm() };
        }
        let rho = x.norm().hypot(y.norm());
        Self { c: x.norm() / rho, s: (x / x.norm()) * y.conj() / rho }
    }

    /// Rows `k, k+1` over columns `c0..`.
    fn rows(self, m: &mut CMatrix, k: usize, c0: usize) {
        for j in c0..m.cols() {
            let a = m[(k, j)];
            let b = m[(k + 1, j)];
            m[(k, j)] = a * self.c + self.s * b;
            m[(k + 1, j)] = b * self.c - self.s.conj() * a;
        }
    }

    /// Columns `k, k+1` over rows `..r1`, multiplying by `G*` on the right.
    fn cols(self, m: &mut CMatrix, k: usize, r1: usize) {
        for i in 0..r1 {
            let a = m[(i, k)];
            let b = m[(i, k + 1)];
            m[(i, k)] = a * self.c + b * self.s.conj();
            m[(i, k + 1)] = b * self.c - a * self.s;
        }
    }
}

/// Upper Schur form `T = Q R Q*`.
pub(crate) fn upper_schur(t: &CMatrix) -> Result<(CMatrix, CMatrix)> {
    let n = t.ensure_square()?;
    let mut h = t.clone();
    let mut q = CMatrix::identity(n);

    for k in 0..n.saturating_sub(2) {
        let col: Vec<Complex64> = (k + 1..n).map(|i| h[(i, k)]).collect();
        if let Some(refl) = reflector(&col) {
            refl.apply_left(&mut h, k + 1, k, n);
            refl.apply_right(&mut h, 0, n, k + 1);
            refl.apply_right(&mut q, 0, n, k + 1);
            h[(k + 1, k)] = refl.beta;
            for i in k + 2..n {
                h[(i, k)] = ZERO;
            }
        }
    }

    let eps = f64::EPSILON;
    let hnorm = h.frobenius_norm();
    let cap = 100 * n;
    let mut sweeps = 0;
    let mut since_deflation = 0;
    let mut hi = n.saturating_sub(1);
    while hi > 0 {
        let mut l = hi;
        while l > 0 {
            let mut s = h[(l - 1, l - 1)].norm() + h[(l, l)].norm();
            if s == 0.0 {
                s = hnorm;
            }
            if h[(l, l - 1)].norm() <= eps * s {
                h[(l, l - 1)] = ZERO;
                break;
            }
            l -= 1;
        }
        if l == hi {
            hi -= 1;
            since_deflation = 0;
            continue;
        }
        sweeps += 1;
        since_deflation += 1;
        if sweeps > cap {
            return Err(Error::NoConvergence { sweeps: cap });
        }

        let mu = if since_deflation % 10 == 0 {
            // Exceptional shift to break cycles.
            h[(hi, hi)] + 0.75 * h[(hi, hi - 1)].norm()
        } else {
            wilkinson_shift(h[(hi - 1, hi - 1)], h[(hi - 1, hi)], h[(hi, hi - 1)], h[(hi, hi)])
        };

        let mut x = h[(l, l)] - mu;
        let mut y = h[(l + 1, l)];
        for k in l..hi {
            let g = Rotation::zeroing(x, y);
            g.rows(&mut h, k, if k > l { k - 1 } else { l });
            if k > l {
                h[(k + 1, k - 1)] = ZERO;
            }
            g.cols(&mut h, k, (k + 3).min(hi + 1));
            g.cols(&mut q, k, n);
            if k + 1 < hi {
                x = h[(k + 1, k)];
                y = h[(k + 2, k)];
            }
        }
    }

    for i in 0..n {
        for j in 0..i {
            h[(i, j)] = ZERO;
        }
    }
    Ok((q, h))
}

/// Eigenvalue of `[[a, b], [c, d]]` closer to `d`.
fn wilkinson_shift(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Complex64 {
    let half = (a - d) * 0.5;
    let disc = (half * half + b * c).sqrt();
    let m = (a + d) * 0.5;
    let r1 = m + disc;
    let r2 = m - disc;
    if (r1 - d).norm() <= (r2 - d).norm() {
        r1
    } else {
        r2
    }
}

/// Bubble the diagonal of the upper triangular `r` into ascending modulus so
/// that the flipped lower factor reads in descending modulus.
fn sort_ascending_modulus(q: &mut CMatrix, r: &mut CMatrix) {
    let n = r.rows();
    for pass in 0..n {
        let mut swapped = false;
        for k in 0..n - 1 - pass.min(n - 1) {
            let a = r[(k, k)];
            let c = r[(k + 1, k + 1)];
            if a.norm() > c.norm() * (1.0 + 1e-12) {
                swap_adjacent(q, r, k);
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
}

fn swap_adjacent(q: &mut CMatrix, r: &mut CMatrix, k: usize) {
    let a = r[(k, k)];
    let b = r[(k, k + 1)];
    let c = r[(k + 1, k + 1)];
    let g = Rotation::zeroing(b, c - a);
    let n = r.rows();
    g.rows(r, k, k);
    g.cols(r, k, (k + 2).min(n));
    g.cols(q, k, n);
    r[(k + 1, k)] = ZERO;
}
