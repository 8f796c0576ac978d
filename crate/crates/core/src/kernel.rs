//! Closed-form radial interaction kernels.
//!
//! The Cartesian interaction kernel is the normalized indicator of the
//! ball `B_σ(0)`. After the radial change of variables it becomes a
//! one-dimensional kernel `L(R, r)` supported on the band `|R − r| ≤ σ`:
//!
//! * 3D: `L(R,r) = α·3/(16πσ³) · L̃(R,r)/(R·r)` with
//!   `L̃(R,r) = min{(R+r)², σ²} − min{(R−r)², σ²}`,
//! * 2D: `L(R,r) = α/(π²σ²) · [π/2 − arcsin(max((R²+r²−σ²)/(2Rr), −1))]`
//!   on the band, 0 outside.
//!
//! Two views of the 3D kernel are exposed: the physical kernel above
//! (used by the scheme) and the normalized kernel `L̂ = L̃/(R·r)` without
//! the `3/(16πσ³)` prefactor and without `α`, which is the object the
//! property suite bounds (`0 ≤ L̂ ≤ 4`, etc.).

use crate::error::Error;
use crate::Result;

/// Spatial dimension of the underlying Cartesian model.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dimension {
    Two,
    Three,
}

impl Dimension {
    pub fn as_u8(self) -> u8 {
        match self {
            Dimension::Two => 2,
            Dimension::Three => 3,
        }
    }

    pub fn from_u8(d: u8) -> Result<Self> {
        match d {
            2 => Ok(Dimension::Two),
            3 => Ok(Dimension::Three),
            _ => Err(Error::InvalidKernelParameter(format!(
                "dimension must be 2 or 3, got {d}"
            ))),
        }
    }
}

/// Radial interaction kernel with interaction radius `σ` and
/// proliferation rate `α`. Immutable; evaluations are pure.
#[derive(Debug, Clone, Copy)]
pub struct RadialKernel {
    dimension: Dimension,
    sigma: f64,
    alpha: f64,
}

impl RadialKernel {
    pub fn new(dimension: Dimension, sigma: f64, alpha: f64) -> Result<Self> {
        if !(sigma > 0.0) || !sigma.is_finite() {
            return Err(Error::InvalidKernelParameter(format!(
                "sigma must be positive, got {sigma}"
            )));
        }
        if !(alpha > 0.0) || !alpha.is_finite() {
            return Err(Error::InvalidKernelParameter(format!(
                "alpha must be positive, got {alpha}"
            )));
        }
        Ok(RadialKernel {
            dimension,
            sigma,
            alpha,
        })
    }

    pub fn dimension(&self) -> Dimension {
        self.dimension
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// `L̃(R,r) = min{(R+r)², σ²} − min{(R−r)², σ²}` (3D only).
    pub fn eval_l_tilde(&self, r_big: f64, r_small: f64) -> Result<f64> {
        if self.dimension != Dimension::Three {
            return Err(Error::UnsupportedDimension(self.dimension.as_u8()));
        }
        Ok(self.l_tilde_raw(r_big, r_small))
    }

    #[inline]
    fn l_tilde_raw(&self, r_big: f64, r_small: f64) -> f64 {
        let s2 = self.sigma * self.sigma;
        let plus = r_big + r_small;
        let minus = r_big - r_small;
        (plus * plus).min(s2) - (minus * minus).min(s2)
    }

    /// Normalized 3D kernel `L̂(R,r) = L̃(R,r)/(R·r)`, the convention of
    /// the property suite (no `3/(16πσ³)` prefactor, no `α`).
    pub fn eval_normalized(&self, r_big: f64, r_small: f64) -> Result<f64> {
        if self.dimension != Dimension::Three {
            return Err(Error::UnsupportedDimension(self.dimension.as_u8()));
        }
        if !(r_big > 0.0) || !(r_small > 0.0) {
            return Err(Error::KernelDomain { r_big, r_small });
        }
        Ok(self.l_tilde_raw(r_big, r_small) / (r_big * r_small))
    }

    /// Physical kernel `L(R, r)` with prefactor and `α`.
    pub fn eval(&self, r_big: f64, r_small: f64) -> Result<f64> {
        if !(r_big > 0.0) || !(r_small > 0.0) {
            return Err(Error::KernelDomain { r_big, r_small });
        }
        Ok(self.eval_unchecked(r_big, r_small))
    }

    /// Hot-path evaluation without the domain check; the scheme grid
    /// never touches `R = 0` or `r = 0`.
    #[inline]
    pub fn eval_unchecked(&self, r_big: f64, r_small: f64) -> f64 {
        match self.dimension {
            Dimension::Three => {
                let pref = 3.0 * self.alpha / (16.0 * std::f64::consts::PI * self.sigma.powi(3));
                pref * self.l_tilde_raw(r_big, r_small) / (r_big * r_small)
            }
            Dimension::Two => {
                if (r_big - r_small).abs() > self.sigma {
                    return 0.0;
                }
                let s2 = self.sigma * self.sigma;
                // The max with -1 is part of the formula; the clamp above
                // +1 only guards rounding when |R - r| is close to sigma.
                let arg = ((r_big * r_big + r_small * r_small - s2) / (2.0 * r_big * r_small))
                    .clamp(-1.0, 1.0);
                let bracket = std::f64::consts::FRAC_PI_2 - arg.asin();
                self.alpha / (std::f64::consts::PI * std::f64::consts::PI * s2) * bracket
            }
        }
    }

    /// Exact contiguous index range `{i in 1..=n : |i·grid_step − r| ≤ σ}`
    /// on the grid `x_i = i·grid_step`, as inclusive 1-based bounds. Ties
    /// `|x_i − r| = σ` are included (the kernel vanishes there). `None`
    /// when the band misses the grid entirely.
    pub fn band_indices(&self, r: f64, grid_step: f64, n: usize) -> Option<(usize, usize)> {
        if n == 0 || !(grid_step > 0.0) || !(r > 0.0) {
            return None;
        }
        let inside = |i: usize| -> bool {
            let x = i as f64 * grid_step;
            (x - r).abs() <= self.sigma
        };
        // Float estimates of the edges, then a local scan so the result
        // is exact with respect to the grid predicate.
        let lo_est = ((r - self.sigma) / grid_step).floor();
        let lo_est = if lo_est.is_finite() && lo_est > 0.0 {
            (lo_est as usize).saturating_sub(2).max(1)
        } else {
            1
        };
        let mut lo = lo_est.min(n);
        while lo <= n && !inside(lo) {
            lo += 1;
        }
        if lo > n {
            return None;
        }
        let hi_est = ((r + self.sigma) / grid_step).ceil();
        let hi_est = if hi_est.is_finite() && hi_est >= 1.0 {
            ((hi_est as usize) + 2).min(n)
        } else {
            n
        };
        let mut hi = hi_est.max(lo);
        while hi > lo && !inside(hi) {
            hi -= 1;
        }
        Some((lo, hi))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn kernel3(sigma: f64, alpha: f64) -> RadialKernel {
        RadialKernel::new(Dimension::Three, sigma, alpha).unwrap()
    }

    fn kernel2(sigma: f64, alpha: f64) -> RadialKernel {
        RadialKernel::new(Dimension::Two, sigma, alpha).unwrap()
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(RadialKernel::new(Dimension::Three, 0.0, 1.0).is_err());
        assert!(RadialKernel::new(Dimension::Three, 1.0, -2.0).is_err());
        assert!(Dimension::from_u8(4).is_err());
    }

    #[test]
    fn vanishes_outside_band_3d() {
        let k = kernel3(0.04, 1.0);
        assert_eq!(k.eval(1.0, 2.0).unwrap(), 0.0);
        assert_eq!(k.eval_l_tilde(1.0, 2.0).unwrap(), 0.0);
    }

    #[test]
    fn middle_branch_3d() {
        // sigma^2 - (R-r)^2 branch, hand evaluation
        let k = kernel3(0.04, 1.0);
        let lt = k.eval_l_tilde(0.5, 0.51).unwrap();
        assert!((lt - 0.0015).abs() < 1e-15);
        let l = k.eval(0.5, 0.51).unwrap();
        let expected = 3.0 / (16.0 * PI * 0.04f64.powi(3)) * 0.0015 / (0.5 * 0.51);
        assert!((l - expected).abs() < 1e-10);
        assert!((l - 5.48558).abs() < 1e-4);
    }

    #[test]
    fn full_overlap_branch_3d() {
        // both arguments below sigma: L-tilde = 4Rr
        let k = kernel3(0.04, 1.0);
        let lt = k.eval_l_tilde(0.01, 0.01).unwrap();
        assert!((lt - 4.0e-4).abs() < 1e-18);
    }

    #[test]
    fn l_tilde_requires_3d() {
        let k = kernel2(0.04, 1.0);
        assert!(matches!(
            k.eval_l_tilde(0.1, 0.1),
            Err(Error::UnsupportedDimension(2))
        ));
    }

    #[test]
    fn domain_errors() {
        let k = kernel3(0.04, 1.0);
        assert!(k.eval(0.0, 1.0).is_err());
        assert!(k.eval(1.0, -0.5).is_err());
    }

    #[test]
    fn clamped_branch_2d() {
        // arcsin(-1) forced, bracket = pi
        let k = kernel2(0.5, 1.0);
        let l = k.eval(0.1, 0.1).unwrap();
        assert!((l - 1.0 / (PI * 0.25)).abs() < 1e-12);
    }

    #[test]
    fn arcsin_branch_2d() {
        // R = r = sigma: arg = 1/2, bracket = pi/3
        let s = 0.04;
        let k = kernel2(s, 1.0);
        let l = k.eval(s, s).unwrap();
        assert!((l - 1.0 / (3.0 * PI * s * s)).abs() < 1e-9);
        assert!((l - 66.3146).abs() < 1e-3);
    }

    #[test]
    fn symmetric_in_arguments() {
        for k in [kernel3(0.3, 0.7), kernel2(0.3, 0.7)] {
            for (a, b) in [(0.2, 0.4), (0.11, 0.13), (1.7, 1.75)] {
                assert_eq!(k.eval(a, b).unwrap(), k.eval(b, a).unwrap());
            }
        }
    }

    #[test]
    fn alpha_scales_linearly() {
        let base = kernel3(0.04, 1.0);
        let scaled = kernel3(0.04, 0.5);
        let a = base.eval(0.5, 0.51).unwrap();
        let b = scaled.eval(0.5, 0.51).unwrap();
        assert!((b - 0.5 * a).abs() < 1e-12 * a.abs());
    }

    #[test]
    fn band_indices_examples() {
        let k = kernel3(0.04, 1.0);
        assert_eq!(k.band_indices(1.0, 0.01, 200), Some((96, 104)));
        assert_eq!(k.band_indices(0.005, 0.01, 200), Some((1, 4)));
        // band covering the whole grid
        let wide = kernel3(10.0, 1.0);
        assert_eq!(wide.band_indices(1.0, 0.01, 200), Some((1, 200)));
        // band entirely off the grid
        assert_eq!(k.band_indices(100.0, 0.01, 200), None);
    }

    #[test]
    fn band_size_bound() {
        let k = kernel3(0.04, 1.0);
        let step = 2.0 / 2000.0;
        for i in 1..=2000usize {
            let r = i as f64 * step;
            let (lo, hi) = k.band_indices(r, step, 2000).unwrap();
            assert!(hi - lo + 1 <= (2.0 * 0.04 / step) as usize + 2);
            // exactness of the edges
            assert!(((lo as f64) * step - r).abs() <= 0.04);
            assert!(((hi as f64) * step - r).abs() <= 0.04);
            if lo > 1 {
                assert!((((lo - 1) as f64) * step - r).abs() > 0.04);
            }
            if hi < 2000 {
                assert!((((hi + 1) as f64) * step - r).abs() > 0.04);
            }
        }
    }

    #[test]
    fn unit_mass_against_constant_density() {
        // k*n = 1 for n identically 1: the radial kernel integrates the
        // shell density 4*pi*r^2 (3D) / 2*pi*r (2D) to alpha.
        for (k, shell): (RadialKernel, fn(f64) -> f64) in [
            (kernel3(0.25, 1.0), (|r| 4.0 * PI * r * r) as fn(f64) -> f64),
            (kernel2(0.25, 1.0), (|r| 2.0 * PI * r) as fn(f64) -> f64),
        ] {
            for r_big in [0.3f64, 0.7, 1.9] {
                let a = (r_big - 0.25).max(0.0);
                let b = r_big + 0.25;
                let n = 40_000;
                let h = (b - a) / n as f64;
                let mut acc = 0.0;
                for j in 0..n {
                    let r = a + (j as f64 + 0.5) * h;
                    acc += k.eval(r_big, r).unwrap() * shell(r) * h;
                }
                assert!((acc - 1.0).abs() < 1e-4, "r_big={r_big}: got {acc}");
            }
        }
    }
}
