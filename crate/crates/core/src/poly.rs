//! Dense complex polynomials in the monomial basis.

use std::fmt;

use num_complex::Complex64;
use rand::Rng;
use serde::Serialize;

use crate::matrix::{ONE, ZERO};
use crate::random::unit_disk;

/// `c_0 + c_1 z + ... + c_m z^m`, coefficients stored in ascending degree.
///
/// The leading coefficient is nonzero unless the polynomial is identically
/// zero, which is stored as `[0]`.
#[derive(Clone, PartialEq, Serialize)]
pub struct Polynomial {
    coefficients: Vec<Complex64>,
}

impl Polynomial {
    pub fn new(mut coefficients: Vec<Complex64>) -> Self {
        while coefficients.len() > 1 && *coefficients.last().unwrap() == ZERO {
            coefficients.pop();
        }
        if coefficients.is_empty() {
            coefficients.push(ZERO);
        }
        Self { coefficients }
    }

    pub fn constant(c: Complex64) -> Self {
        Self::new(vec![c])
    }

    /// `z^k`.
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![ZERO; k + 1];
        c[k] = ONE;
        Self::new(c)
    }

    /// Monic `prod (z - r)`.
    pub fn from_roots(roots: &[Complex64]) -> Self {
        let mut c = vec![ONE];
        for &r in roots {
            let mut next = vec![ZERO; c.len() + 1];
            for (k, &ck) in c.iter().enumerate() {
                next[k + 1] += ck;
                next[k] -= r * ck;
            }
            c = next;
        }
        Self::new(c)
    }

    /// Coefficients drawn uniformly from the complex unit disk, degree at
    /// most `degree`.
    pub fn random<R: Rng + ?Sized>(degree: usize, rng: &mut R) -> Self {
        Self::new((0..=degree).map(|_| unit_disk(rng)).collect())
    }

    pub fn coefficients(&self) -> &[Complex64] {
        &self.coefficients
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.len() == 1 && self.coefficients[0] == ZERO
    }

    /// Horner evaluation at a scalar.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coefficients.iter().rev().fold(ZERO, |acc, &c| acc * z + c)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut c = vec![ZERO; self.coefficients.len() + other.coefficients.len() - 1];
        for (i, &a) in self.coefficients.iter().enumerate() {
            for (j, &b) in other.coefficients.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Self::new(c)
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coefficients.len().max(other.coefficients.len());
        let get = |p: &Self, k: usize| p.coefficients.get(k).copied().unwrap_or(ZERO);
        Self::new((0..len).map(|k| get(self, k) + get(other, k)).collect())
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self::new(self.coefficients.iter().map(|&c| c * s).collect())
    }

    /// Largest coefficient-wise distance, padding the shorter with zeros.
    pub fn max_coefficient_distance(&self, other: &Self) -> f64 {
        let len = self.coefficients.len().max(other.coefficients.len());
        let get = |p: &Self, k: usize| p.coefficients.get(k).copied().unwrap_or(ZERO);
        (0..len).map(|k| (get(self, k) - get(other, k)).norm()).fold(0.0, f64::max)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial(")?;
        for (k, c) in self.coefficients.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({}{:+}i) z^{k}", c.re, c.im)?;
        }
        write!(f, ")")
    }
}
