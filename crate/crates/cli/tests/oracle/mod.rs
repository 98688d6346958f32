//! Reference computations written independently of the library kernels.
//! Matrices are plain `Vec<Vec<Complex64>>` here.

#![allow(dead_code)]

use normcheck::{CMatrix, Complex64};

pub type Dense = Vec<Vec<Complex64>>;

pub fn dense(m: &CMatrix) -> Dense {
    (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
}

pub fn zero(n: usize, m: usize) -> Dense {
    vec![vec![Complex64::new(0.0, 0.0); m]; n]
}

pub fn eye(n: usize) -> Dense {
    let mut a = zero(n, n);
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = Complex64::new(1.0, 0.0);
    }
    a
}

pub fn mul(a: &Dense, b: &Dense) -> Dense {
    let (n, k, m) = (a.len(), b.len(), b[0].len());
    let mut c = zero(n, m);
    for i in 0..n {
        for j in 0..m {
            let mut s = Complex64::new(0.0, 0.0);
            for l in 0..k {
                s += a[i][l] * b[l][j];
            }
            c[i][j] = s;
        }
    }
    c
}

pub fn adjoint(a: &Dense) -> Dense {
    let (n, m) = (a.len(), a[0].len());
    let mut c = zero(m, n);
    for i in 0..n {
        for j in 0..m {
            c[j][i] = a[i][j].conj();
        }
    }
    c
}

pub fn sub(a: &Dense, b: &Dense) -> Dense {
    a.iter().zip(b).map(|(x, y)| x.iter().zip(y).map(|(p, q)| p - q).collect()).collect()
}

pub fn add(a: &Dense, b: &Dense) -> Dense {
    a.iter().zip(b).map(|(x, y)| x.iter().zip(y).map(|(p, q)| p + q).collect()).collect()
}

pub fn scale(a: &Dense, s: Complex64) -> Dense {
    a.iter().map(|r| r.iter().map(|x| x * s).collect()).collect()
}

pub fn frob(a: &Dense) -> f64 {
    a.iter().flatten().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// `‖T*T - TT*‖_F / ‖T‖_F^2`, zero for the zero matrix.
pub fn relative_commutator(t: &Dense) -> f64 {
    let n2 = frob(t).powi(2);
    if n2 == 0.0 {
        return 0.0;
    }
    let th = adjoint(t);
    frob(&sub(&mul(&th, t), &mul(t, &th))) / n2
}

/// Gauss-Jordan elimination with partial pivoting.
pub fn gauss_jordan_inverse(a: &Dense) -> Dense {
    let n = a.len();
    let mut aug: Dense = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| Complex64::new(if i == j { 1.0 } else { 0.0 }, 0.0)));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).max_by(|&x, &y| aug[x][col].norm().total_cmp(&aug[y][col].norm())).unwrap();
        aug.swap(col, piv);
        let p = aug[col][col];
        assert!(p.norm() > 0.0, "singular matrix in oracle");
        for v in aug[col].iter_mut() {
            *v /= p;
        }
        for r in 0..n {
            if r != col {
                let f = aug[r][col];
                if f != Complex64::new(0.0, 0.0) {
                    let pivot_row = aug[col].clone();
                    for (x, p) in aug[r].iter_mut().zip(&pivot_row) {
                        *x -= f * p;
                    }
                }
            }
        }
    }
    aug.into_iter().map(|r| r[n..].to_vec()).collect()
}

fn one_norm(a: &Dense) -> f64 {
    let m = a[0].len();
    (0..m).map(|j| a.iter().map(|r| r[j].norm()).sum::<f64>()).fold(0.0, f64::max)
}

/// Matrix exponential by a 30-term Taylor series after scaling the 1-norm
/// below 1/4, then repeated squaring.
pub fn taylor_expm(a: &Dense) -> Dense {
    let n = a.len();
    let mut squarings = 0u32;
    let norm = one_norm(a);
    while norm / 2f64.powi(squarings as i32) > 0.25 {
        squarings += 1;
    }
    let x = scale(a, Complex64::new(2f64.powi(-(squarings as i32)), 0.0));
    let mut term = eye(n);
    let mut sum = eye(n);
    for k in 1..=30 {
        term = scale(&mul(&term, &x), Complex64::new(1.0 / k as f64, 0.0));
        sum = add(&sum, &term);
    }
    for _ in 0..squarings {
        sum = mul(&sum, &sum);
    }
    sum
}

/// Horner evaluation of `sum c_k T^k`.
pub fn poly_at_matrix(coefficients: &[Complex64], t: &Dense) -> Dense {
    let n = t.len();
    let mut acc = zero(n, n);
    for &c in coefficients.iter().rev() {
        acc = add(&mul(&acc, t), &scale(&eye(n), c));
    }
    acc
}

pub fn min_distance(z: Complex64, points: &[Complex64]) -> f64 {
    points.iter().map(|&l| (z - l).norm()).fold(f64::INFINITY, f64::min)
}
