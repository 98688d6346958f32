//! Resolvent `(zI - T)^-1`, its spectral norm, and pseudospectrum grids.
//!
//! Norms are reciprocals of the smallest singular value of `zI - T`. A point
//! is treated as lying on the spectrum, with norm [`ExtendedNorm::Infinite`],
//! when that singular value drops below `1e-14 * max(‖T‖, |z|, 1)`.

use num_complex::Complex64;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::{inverse, smallest_singular_value, spectral_norm};
use crate::matrix::{c64, CMatrix};
use crate::spectrum::Spectrum;

/// Relative threshold below which `σ_min(zI - T)` counts as zero.
pub const ON_SPECTRUM_CUTOFF: f64 = 1e-14;

/// A resolvent norm, infinite on the spectrum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtendedNorm {
    Finite(f64),
    Infinite,
}

impl ExtendedNorm {
    pub fn is_infinite(self) -> bool {
        matches!(self, Self::Infinite)
    }

    pub fn finite(self) -> Option<f64> {
        match self {
            Self::Finite(v) => Some(v),
            Self::Infinite => None,
        }
    }

    /// `f64` view with `INFINITY` for the infinite value.
    pub fn to_f64(self) -> f64 {
        self.finite().unwrap_or(f64::INFINITY)
    }
}

impl Serialize for ExtendedNorm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Self::Finite(v) => s.serialize_f64(*v),
            Self::Infinite => s.serialize_str("inf"),
        }
    }
}

/// Evaluates resolvent norms of a fixed matrix, caching `‖T‖`.
#[derive(Debug, Clone)]
pub struct Resolvent<'a> {
    t: &'a CMatrix,
    norm: f64,
}

impl<'a> Resolvent<'a> {
    pub fn new(t: &'a CMatrix) -> Result<Self> {
        t.ensure_square()?;
        Ok(Self { t, norm: spectral_norm(t) })
    }

    pub fn matrix_norm(&self) -> f64 {
        self.norm
    }

    pub fn cutoff(&self, z: Complex64) -> f64 {
        ON_SPECTRUM_CUTOFF * self.norm.max(z.norm()).max(1.0)
    }

    /// `σ_min(zI - T)`.
    pub fn sigma_min(&self, z: Complex64) -> f64 {
        smallest_singular_value(&self.t.shift(z))
    }

    pub fn norm_at(&self, z: Complex64) -> ExtendedNorm {
        let s = self.sigma_min(z);
        if s < self.cutoff(z) {
            ExtendedNorm::Infinite
        } else {
            ExtendedNorm::Finite(1.0 / s)
        }
    }

    pub fn matrix_at(&self, z: Complex64) -> Result<CMatrix> {
        if self.sigma_min(z) < self.cutoff(z) {
            return Err(Error::OnSpectrum { z });
        }
        let n = self.t.rows();
        let zi_minus_t = &CMatrix::identity(n).scale(z) - self.t;
        inverse(&zi_minus_t).map_err(|_| Error::OnSpectrum { z })
    }
}

/// `(zI - T)^-1`.
pub fn resolvent_matrix(t: &CMatrix, z: Complex64) -> Result<CMatrix> {
    Resolvent::new(t)?.matrix_at(z)
}

/// `‖(zI - T)^-1‖`, infinite on the spectrum.
pub fn resolvent_norm(t: &CMatrix, z: Complex64) -> Result<ExtendedNorm> {
    Ok(Resolvent::new(t)?.norm_at(z))
}

/// `dist(z, σ)` over the distinct representatives.
pub fn dist_to_spectrum(z: Complex64, spec: &Spectrum) -> f64 {
    spec.distance(z)
}

/// Closed rectangle in the complex plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Region {
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
}

impl Region {
    pub fn new(x_min: f64, x_max: f64, y_min: f64, y_max: f64) -> Result<Self> {
        if ![x_min, x_max, y_min, y_max].iter().all(|v| v.is_finite()) {
            return Err(Error::InvalidArgument("region bounds must be finite".into()));
        }
        if !(x_min < x_max && y_min < y_max) {
            return Err(Error::InvalidArgument(format!(
                "region must satisfy x_min < x_max and y_min < y_max, got [{x_min}, {x_max}] x [{y_min}, {y_max}]"
            )));
        }
        Ok(Self { x_min, x_max, y_min, y_max })
    }

    /// Bounding box of the spectra, padded on each side by
    /// `0.5 * max(diameter, 1)` where the diameter is the largest distance
    /// between eigenvalues of the union.
    pub fn auto(spectra: &[&Spectrum]) -> Self {
        let points: Vec<Complex64> = spectra.iter().flat_map(|s| s.representatives()).collect();
        let mut diameter: f64 = 0.0;
        for (i, a) in points.iter().enumerate() {
            for b in &points[i + 1..] {
                diameter = diameter.max((a - b).norm());
            }
        }
        let pad = 0.5 * diameter.max(1.0);
        let (mut x0, mut x1, mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
        for z in &points {
            x0 = x0.min(z.re);
            x1 = x1.max(z.re);
            y0 = y0.min(z.im);
            y1 = y1.max(z.im);
        }
        Self { x_min: x0 - pad, x_max: x1 + pad, y_min: y0 - pad, y_max: y1 + pad }
    }

    /// Node `(i, j)` of the closed uniform `nx x ny` lattice.
    pub fn node(&self, i: usize, j: usize, nx: usize, ny: usize) -> Complex64 {
        let x =
            if i + 1 == nx { self.x_max } else { self.x_min + (self.x_max - self.x_min) * i as f64 / (nx - 1) as f64 };
        let y =
            if j + 1 == ny { self.y_max } else { self.y_min + (self.y_max - self.y_min) * j as f64 / (ny - 1) as f64 };
        c64(x, y)
    }
}

/// Either an explicit rectangle or the padded spectral bounding box.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RegionSpec {
    Auto,
    Rect(Region),
}

impl RegionSpec {
    pub fn resolve(&self, spectra: &[&Spectrum]) -> Region {
        match self {
            Self::Auto => Region::auto(spectra),
            Self::Rect(r) => *r,
        }
    }
}

/// Resolvent norms sampled on a closed uniform lattice.
///
/// Nodes are stored row-major: `y` index outer, `x` index inner, both
/// ascending.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PseudospectrumGrid {
    pub region: Region,
    pub nx: usize,
    pub ny: usize,
    pub values: Vec<ExtendedNorm>,
}

impl PseudospectrumGrid {
    pub fn node(&self, i: usize, j: usize) -> Complex64 {
        self.region.node(i, j, self.nx, self.ny)
    }

    pub fn value(&self, i: usize, j: usize) -> ExtendedNorm {
        self.values[j * self.nx + i]
    }

    /// `(z, value)` in storage order.
    pub fn iter(&self) -> impl Iterator<Item = (Complex64, ExtendedNorm)> + '_ {
        (0..self.ny).flat_map(move |j| (0..self.nx).map(move |i| (self.node(i, j), self.value(i, j))))
    }
}

fn check_grid_dims(nx: usize, ny: usize) -> Result<()> {
    if nx < 2 || ny < 2 {
        return Err(Error::InvalidArgument(format!("grid must be at least 2x2, got {nx}x{ny}")));
    }
    Ok(())
}

/// Samples `‖(zI - T)^-1‖` on the region's lattice.
pub fn pseudospectrum_grid(t: &CMatrix, region: RegionSpec, nx: usize, ny: usize) -> Result<PseudospectrumGrid> {
    check_grid_dims(nx, ny)?;
    let resolvent = Resolvent::new(t)?;
    let region = match region {
        RegionSpec::Rect(r) => r,
        RegionSpec::Auto => {
            let spec = crate::spectrum::eigenvalues(t, crate::spectrum::DEFAULT_CLUSTER_TOL)?;
            Region::auto(&[&spec])
        }
    };
    let mut values = Vec::with_capacity(nx * ny);
    for j in 0..ny {
        for i in 0..nx {
            values.push(resolvent.norm_at(region.node(i, j, nx, ny)));
        }
    }
    Ok(PseudospectrumGrid { region, nx, ny, values })
}

/// Nodes inside the ε-pseudospectrum: `value > 1/ε`, infinite values included.
pub fn epsilon_level_mask(grid: &PseudospectrumGrid, eps: f64) -> Result<Vec<bool>> {
    if eps.is_nan() || eps <= 0.0 {
        return Err(Error::InvalidArgument(format!("epsilon must be positive, got {eps}")));
    }
    let level = 1.0 / eps;
    Ok(grid
        .values
        .iter()
        .map(|v| match v {
            ExtendedNorm::Infinite => true,
            ExtendedNorm::Finite(x) => *x > level,
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::random_normal_matrix;

    const GOLDEN: f64 = 1.618_033_988_749_895;

    fn jordan() -> CMatrix {
        CMatrix::from_real_rows(&[[0.0, 1.0], [0.0, 0.0]])
    }

    #[test]
    fn resolvent_matrix_examples() {
        let r = resolvent_matrix(&jordan(), c64(1.0, 0.0)).unwrap();
        let expected = CMatrix::from_real_rows(&[[1.0, 1.0], [0.0, 1.0]]);
        assert!((&r - &expected).max_abs() < 1e-15);
        // multiply-back
        let zi_t = CMatrix::from_real_rows(&[[1.0, -1.0], [0.0, 1.0]]);
        assert!((&zi_t.matmul(&r) - &CMatrix::identity(2)).max_abs() < 1e-15);

        let lam = [c64(1.0, 2.0), c64(-3.0, 0.5)];
        let z = c64(0.25, -1.0);
        let r = resolvent_matrix(&CMatrix::from_diagonal(&lam), z).unwrap();
        for (k, l) in lam.iter().enumerate() {
            assert!((r[(k, k)] - 1.0 / (z - l)).norm() < 1e-15);
        }
        assert!(r[(0, 1)].norm() == 0.0);

        let r = resolvent_matrix(&CMatrix::zeros(3, 3), c64(2.0, 0.0)).unwrap();
        assert!((&r - &CMatrix::identity(3).scale(c64(0.5, 0.0))).max_abs() < 1e-15);

        assert!(matches!(resolvent_matrix(&jordan(), c64(0.0, 0.0)), Err(Error::OnSpectrum { .. })));
    }

    #[test]
    fn resolvent_norm_examples() {
        let v = resolvent_norm(&jordan(), c64(1.0, 0.0)).unwrap().finite().unwrap();
        assert!((v - GOLDEN).abs() <= 1e-12);
        let d = CMatrix::from_real_rows(&[[1.0, 0.0], [0.0, -1.0]]);
        let v = resolvent_norm(&d, c64(0.0, 3.0)).unwrap().finite().unwrap();
        assert!((v - 1.0 / 10f64.sqrt()).abs() < 1e-15);
        assert_eq!(resolvent_norm(&jordan(), c64(0.0, 0.0)).unwrap(), ExtendedNorm::Infinite);
        assert!(resolvent_norm(&CMatrix::zeros(2, 3), c64(1.0, 0.0)).is_err());
    }

    #[test]
    fn scalar_grid() {
        let region = Region::new(-1.0, 1.0, -1.0, 1.0).unwrap();
        let g = pseudospectrum_grid(&CMatrix::zeros(1, 1), RegionSpec::Rect(region), 3, 3).unwrap();
        assert_eq!(g.values.len(), 9);
        for j in 0..3 {
            for i in 0..3 {
                let z = g.node(i, j);
                if i == 1 && j == 1 {
                    assert_eq!(g.value(i, j), ExtendedNorm::Infinite);
                } else {
                    assert!((g.value(i, j).to_f64() - 1.0 / z.norm()).abs() < 1e-15);
                }
            }
        }
    }

    #[test]
    fn jordan_grid_node() {
        let region = Region::new(-1.0, 1.0, -1.0, 1.0).unwrap();
        let g = pseudospectrum_grid(&jordan(), RegionSpec::Rect(region), 3, 3).unwrap();
        assert_eq!(g.node(2, 1), c64(1.0, 0.0));
        assert!((g.value(2, 1).to_f64() - GOLDEN).abs() < 1e-12);
    }

    #[test]
    fn normal_grid_matches_distance() {
        let spec = Spectrum::simple(&[c64(1.0, 0.5), c64(-0.5, 0.0), c64(0.0, -1.0)]);
        let t = random_normal_matrix(&spec, 4);
        let g = pseudospectrum_grid(&t, RegionSpec::Auto, 21, 17).unwrap();
        for (z, v) in g.iter() {
            if let Some(v) = v.finite() {
                let expected = 1.0 / spec.distance(z);
                assert!((v - expected).abs() <= 1e-8 * expected, "z = {z}");
            }
        }
    }

    #[test]
    fn grid_rejects_small_dims() {
        assert!(pseudospectrum_grid(&jordan(), RegionSpec::Auto, 1, 5).is_err());
        assert!(Region::new(1.0, 0.0, 0.0, 1.0).is_err());
    }

    #[test]
    fn auto_region_padding() {
        let spec = Spectrum::simple(&[c64(0.0, 0.0), c64(4.0, 0.0)]);
        let r = Region::auto(&[&spec]);
        assert_eq!((r.x_min, r.x_max, r.y_min, r.y_max), (-2.0, 6.0, -2.0, 2.0));
        let single = Spectrum::simple(&[c64(1.0, 1.0)]);
        let r = Region::auto(&[&single]);
        assert_eq!((r.x_min, r.x_max), (0.5, 1.5));
    }

    #[test]
    fn level_mask_examples() {
        let region = Region::new(-2.0, 2.0, -2.0, 2.0).unwrap();
        let g = pseudospectrum_grid(&jordan(), RegionSpec::Rect(region), 41, 41).unwrap();
        let all = epsilon_level_mask(&g, 1e12).unwrap();
        assert!(all.iter().all(|&b| b));

        // Jordan block: the 0.9-pseudospectrum strictly contains the disk.
        let mask = epsilon_level_mask(&g, 0.9).unwrap();
        let mut strict = false;
        for ((z, _), &m) in g.iter().zip(&mask) {
            let disk = z.norm() < 0.9;
            assert!(!disk || m, "disk node {z} missing from mask");
            strict |= m && !disk;
        }
        assert!(strict);
        assert!(epsilon_level_mask(&g, 0.0).is_err());
    }
}
