//! Polynomials of matrices: Horner evaluation, the Hermite interpolant that
//! reproduces the resolvent, Cauchy-integral quadrature, and Putzer's
//! polynomial form of `exp(tT)`.

use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{inverse, spectral_norm};
use crate::matrix::{c64, CMatrix, ONE, ZERO};
use crate::poly::Polynomial;
use crate::resolvent::ON_SPECTRUM_CUTOFF;
use crate::schur::schur;
use crate::spectrum::Spectrum;

/// `p(T) = c_0 I + c_1 T + ... + c_m T^m` by Horner's scheme.
pub fn poly_eval(p: &Polynomial, t: &CMatrix) -> CMatrix {
    let n = t.rows();
    assert!(t.is_square(), "poly_eval needs a square matrix");
    let coeffs = p.coefficients();
    let mut acc = CMatrix::identity(n).scale(*coeffs.last().unwrap());
    for &c in coeffs.iter().rev().skip(1) {
        acc = acc.matmul(t);
        for i in 0..n {
            acc[(i, i)] += c;
        }
    }
    acc
}

/// Newton coefficients of the Hermite interpolant on grouped nodes.
///
/// `nodes` lists each interpolation point repeated by its multiplicity, with
/// repeats adjacent. `taylor(x, u)` returns `f^(u)(x) / u!`, used wherever a
/// divided difference collapses onto a repeated node.
pub fn confluent_divided_differences(
    nodes: &[Complex64],
    taylor: impl Fn(Complex64, usize) -> Complex64,
) -> Vec<Complex64> {
    let n = nodes.len();
    let mut column: Vec<Complex64> = nodes.iter().map(|&x| taylor(x, 0)).collect();
    let mut newton = Vec::with_capacity(n);
    newton.push(column[0]);
    for k in 1..n {
        let next: Vec<Complex64> = (0..n - k)
            .map(|i| {
                if nodes[i + k] == nodes[i] {
                    taylor(nodes[i], k)
                } else {
                    (column[i + 1] - column[i]) / (nodes[i + k] - nodes[i])
                }
            })
            .collect();
        newton.push(next[0]);
        column = next;
    }
    newton
}

/// Expands `sum a_k prod_{i<k} (t - x_i)` into monomial coefficients.
pub fn newton_to_monomial(newton: &[Complex64], nodes: &[Complex64]) -> Polynomial {
    let mut acc = Polynomial::constant(*newton.last().unwrap_or(&ZERO));
    for k in (0..newton.len().saturating_sub(1)).rev() {
        acc = acc.mul(&Polynomial::new(vec![-nodes[k], ONE])).add(&Polynomial::constant(newton[k]));
    }
    acc
}

/// Polynomial `q_z` of degree below the matrix dimension that matches
/// `f(t) = (z - t)^-1` and its first `m - 1` derivatives at every eigenvalue
/// of multiplicity `m`, so that `q_z(T) = (zI - T)^-1`.
pub fn hermite_resolvent_interpolant(z: Complex64, spec: &Spectrum) -> Result<Polynomial> {
    let reach = spec.max_modulus().max(z.norm()).max(1.0);
    if spec.representatives().any(|l| (z - l).norm() < ON_SPECTRUM_CUTOFF * reach) {
        return Err(Error::IllPosedInterpolation { z });
    }
    let nodes = spec.expanded();
    // f^(u)(λ) / u! = (z - λ)^-(u+1)
    let newton = confluent_divided_differences(&nodes, |x, u| (z - x).powi(-(u as i32 + 1)));
    Ok(newton_to_monomial(&newton, &nodes))
}

fn pairwise_sum(terms: &[CMatrix]) -> CMatrix {
    match terms.len() {
        1 => terms[0].clone(),
        len => {
            let (a, b) = terms.split_at(len / 2);
            &pairwise_sum(a) + &pairwise_sum(b)
        }
    }
}

/// Trapezoidal quadrature of `(1/2πi) ∮ (zI - T)^-1 p(z) dz` on a circle
/// enclosing the spectrum.
pub fn cauchy_contour_poly(
    t: &CMatrix,
    p: &Polynomial,
    center: Complex64,
    radius: f64,
    nodes: usize,
) -> Result<CMatrix> {
    let n = t.ensure_square()?;
    if nodes < 8 {
        return Err(Error::TooFewNodes(format!("need at least 8 nodes, got {nodes}")));
    }
    if radius.is_nan() || radius <= 0.0 || radius.is_infinite() {
        return Err(Error::InvalidArgument(format!("radius must be positive, got {radius}")));
    }
    let eigs = schur(t)?.eigenvalues();
    if let Some(&l) = eigs.iter().find(|&&l| (l - center).norm() > radius * (1.0 - 1e-6)) {
        return Err(Error::NotEnclosed { eigenvalue: l });
    }
    let terms: Vec<CMatrix> = (0..nodes)
        .map(|j| {
            let w = Complex64::from_polar(radius, TAU * j as f64 / nodes as f64);
            let z = center + w;
            let r = inverse(&(&CMatrix::identity(n).scale(z) - t))?;
            Ok(r.scale(w * p.eval(z) / nodes as f64))
        })
        .collect::<Result<_>>()?;
    let result = pairwise_sum(&terms);

    let direct = poly_eval(p, t);
    let residual = spectral_norm(&(&result - &direct));
    if residual > 1e-6 * spectral_norm(&direct).max(1.0) {
        return Err(Error::TooFewNodes(format!("quadrature residual {residual:.3e} with {nodes} nodes")));
    }
    Ok(result)
}

/// Exponential of a small dense matrix by Taylor series with scaling and
/// squaring.
fn expm_small(m: &CMatrix) -> CMatrix {
    let n = m.rows();
    let row_sum = (0..n).map(|i| m.row(i).iter().map(|z| z.norm()).sum::<f64>()).fold(0.0, f64::max);
    let mut squarings = 0;
    let mut s = 1.0;
    while row_sum / s > 0.5 {
        s *= 2.0;
        squarings += 1;
    }
    let a = m.scale(c64(1.0 / s, 0.0));
    let mut term = CMatrix::identity(n);
    let mut sum = CMatrix::identity(n);
    for k in 1..=24 {
        term = term.matmul(&a).scale(c64(1.0 / k as f64, 0.0));
        sum = &sum + &term;
        if term.max_abs() <= f64::EPSILON * 1e-3 * sum.max_abs() {
            break;
        }
    }
    for _ in 0..squarings {
        sum = sum.matmul(&sum);
    }
    sum
}

/// Putzer coefficients `r_1(t), ..., r_n(t)`: the solution of
/// `r_1' = λ_1 r_1`, `r_j' = λ_j r_j + r_{j-1}`, `r(0) = e_1`, read off the
/// first column of `exp(tJ)` for the lower bidiagonal `J` with the
/// eigenvalues on its diagonal and ones below.
pub fn putzer_coefficients(eigenvalues: &[Complex64], t: f64) -> Vec<Complex64> {
    let n = eigenvalues.len();
    let j = CMatrix::from_fn(n, n, |r, c| {
        if r == c {
            eigenvalues[r] * t
        } else if r == c + 1 {
            c64(t, 0.0)
        } else {
            ZERO
        }
    });
    expm_small(&j).column(0)
}

/// `exp(tT) = sum_j r_{j+1}(t) prod_{i<=j} (T - λ_i I)`.
pub fn putzer_exp(t_mat: &CMatrix, t: f64) -> Result<CMatrix> {
    let n = t_mat.ensure_square()?;
    let eigs = schur(t_mat)?.eigenvalues();
    let r = putzer_coefficients(&eigs, t);
    let mut product = CMatrix::identity(n);
    let mut acc = CMatrix::identity(n).scale(r[0]);
    for k in 1..n {
        product = product.matmul(&t_mat.shift(eigs[k - 1]));
        acc = &acc + &product.scale(r[k]);
    }
    Ok(acc)
}
