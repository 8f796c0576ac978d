//! Finite discrete measures on the half-line `[0, ∞)`.
//!
//! A [`DiscreteMeasure`] is a finite combination of point masses
//! `Σ mᵢ δ_{xᵢ}` with strictly increasing support points `xᵢ ≥ 0`.
//! Masses may be signed (differences of measures are needed by every
//! metric), but outputs of the particle scheme are validated
//! non-negative. Coincident support points are merged at construction so
//! that all downstream metric code can assume strictly sorted support.
//! Zero-mass points are kept, which keeps grids aligned across
//! operations; [`DiscreteMeasure::prune_zero_mass`] drops them
//! explicitly.
//!
//! Values are immutable after construction and all operations are pure.

use std::io::{self, BufRead, Write};

use crate::error::Error;
use crate::Result;

/// Weight `r^exponent` used to divide a measure, as in `μ/f` with
/// `f(r) = r^exponent`. Only the exponents used by the metrics are
/// representable.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightSpec {
    exponent: f64,
}

impl WeightSpec {
    pub const IDENTITY: WeightSpec = WeightSpec { exponent: 0.0 };
    pub const SQRT: WeightSpec = WeightSpec { exponent: 0.5 };
    pub const LINEAR: WeightSpec = WeightSpec { exponent: 1.0 };
    pub const SQUARE: WeightSpec = WeightSpec { exponent: 2.0 };

    /// Accepts exponents from the enumerated set {0, 1/2, 1, 2}.
    pub fn new(exponent: f64) -> Result<Self> {
        if exponent == 0.0 || exponent == 0.5 || exponent == 1.0 || exponent == 2.0 {
            Ok(WeightSpec { exponent })
        } else {
            Err(Error::InvalidWeightExponent(exponent))
        }
    }

    pub fn exponent(&self) -> f64 {
        self.exponent
    }
}

/// Tagged moment weight `M(r)` for tail estimates: `e^r`, `(1+r)^k`, or a
/// truncation `M^k(r) = M(min(r, k))`.
#[derive(Debug, Clone)]
pub enum MomentWeight {
    Exp,
    Poly(u32),
    Truncated(Box<MomentWeight>, f64),
}

impl MomentWeight {
    pub fn eval(&self, r: f64) -> f64 {
        match self {
            MomentWeight::Exp => r.exp(),
            MomentWeight::Poly(k) => (1.0 + r).powi(*k as i32),
            // M is increasing, so the truncation at k is M(min(r, k)).
            MomentWeight::Truncated(base, k) => base.eval(r.min(*k)),
        }
    }

    fn name(&self) -> &'static str {
        match self {
            MomentWeight::Exp => "exp",
            MomentWeight::Poly(_) => "poly",
            MomentWeight::Truncated(..) => "truncated",
        }
    }
}

/// A finite signed combination of Dirac masses on `[0, ∞)` with strictly
/// increasing support.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct DiscreteMeasure {
    points: Vec<f64>,
    masses: Vec<f64>,
}

impl DiscreteMeasure {
    /// The zero measure.
    pub fn empty() -> Self {
        DiscreteMeasure::default()
    }

    /// Builds a measure from support points and masses. Points are
    /// sorted, validated (finite, non-negative) and exactly coincident
    /// points are merged by summing their masses.
    pub fn new(points: Vec<f64>, masses: Vec<f64>) -> Result<Self> {
        if points.len() != masses.len() {
            return Err(Error::LengthMismatch {
                points: points.len(),
                masses: masses.len(),
            });
        }
        for &x in &points {
            if !x.is_finite() || x < 0.0 {
                return Err(Error::InvalidSupportPoint(x));
            }
        }
        for &m in &masses {
            if !m.is_finite() {
                return Err(Error::InvalidMass(m));
            }
        }
        let mut pairs: Vec<(f64, f64)> = points.into_iter().zip(masses).collect();
        pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
        let mut out = DiscreteMeasure {
            points: Vec::with_capacity(pairs.len()),
            masses: Vec::with_capacity(pairs.len()),
        };
        for (x, m) in pairs {
            match out.points.last() {
                Some(&last) if last == x => *out.masses.last_mut().unwrap() += m,
                _ => {
                    out.points.push(x);
                    out.masses.push(m);
                }
            }
        }
        Ok(out)
    }

    /// Single point mass `m δ_x`.
    pub fn dirac(x: f64, m: f64) -> Result<Self> {
        DiscreteMeasure::new(vec![x], vec![m])
    }

    /// Internal fast path for callers that already hold strictly sorted,
    /// validated support (the scheme's fixed grid).
    pub(crate) fn from_sorted_unchecked(points: Vec<f64>, masses: Vec<f64>) -> Self {
        debug_assert!(points.windows(2).all(|w| w[0] < w[1]));
        debug_assert_eq!(points.len(), masses.len());
        DiscreteMeasure { points, masses }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn masses(&self) -> &[f64] {
        &self.masses
    }

    pub fn iter(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.points.iter().copied().zip(self.masses.iter().copied())
    }

    /// Fixed ascending-index summation for reproducibility.
    pub fn total_mass(&self) -> f64 {
        self.masses.iter().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.masses.iter().all(|&m| m >= 0.0)
    }

    /// Sum of two measures; coincident points merge.
    pub fn add(&self, other: &DiscreteMeasure) -> DiscreteMeasure {
        self.merge_with(other, 1.0)
    }

    /// Signed difference `self − other`, the input of every norm-based
    /// distance.
    pub fn sub(&self, other: &DiscreteMeasure) -> DiscreteMeasure {
        self.merge_with(other, -1.0)
    }

    fn merge_with(&self, other: &DiscreteMeasure, sign: f64) -> DiscreteMeasure {
        let mut points = Vec::with_capacity(self.len() + other.len());
        let mut masses = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.len() || j < other.len() {
            let take_left = match (self.points.get(i), other.points.get(j)) {
                (Some(&a), Some(&b)) => {
                    if a == b {
                        points.push(a);
                        masses.push(self.masses[i] + sign * other.masses[j]);
                        i += 1;
                        j += 1;
                        continue;
                    }
                    a < b
                }
                (Some(_), None) => true,
                (None, Some(_)) => false,
                (None, None) => break,
            };
            if take_left {
                points.push(self.points[i]);
                masses.push(self.masses[i]);
                i += 1;
            } else {
                points.push(other.points[j]);
                masses.push(sign * other.masses[j]);
                j += 1;
            }
        }
        DiscreteMeasure { points, masses }
    }

    pub fn scale(&self, factor: f64) -> DiscreteMeasure {
        DiscreteMeasure {
            points: self.points.clone(),
            masses: self.masses.iter().map(|m| m * factor).collect(),
        }
    }

    /// Divides masses by `points[i]^exponent`, leaving the support
    /// unchanged. A point at 0 is allowed only while it carries exactly
    /// zero mass.
    pub fn weight_divide(&self, w: WeightSpec) -> Result<DiscreteMeasure> {
        if w.exponent == 0.0 {
            return Ok(self.clone());
        }
        let mut masses = Vec::with_capacity(self.len());
        for (x, m) in self.iter() {
            if x == 0.0 {
                if m != 0.0 {
                    return Err(Error::DivisionAtZero {
                        exponent: w.exponent,
                        mass: m,
                    });
                }
                masses.push(0.0);
            } else {
                let divisor = match w {
                    WeightSpec { exponent } if exponent == 1.0 => x,
                    WeightSpec { exponent } if exponent == 0.5 => x.sqrt(),
                    WeightSpec { exponent } if exponent == 2.0 => x * x,
                    _ => x.powf(w.exponent),
                };
                masses.push(m / divisor);
            }
        }
        Ok(DiscreteMeasure {
            points: self.points.clone(),
            masses,
        })
    }

    /// Restriction to the closed interval `[a, b]`.
    pub fn restrict(&self, a: f64, b: f64) -> Result<DiscreteMeasure> {
        if !(a <= b) {
            return Err(Error::InvalidInterval { a, b });
        }
        let mut points = Vec::new();
        let mut masses = Vec::new();
        for (x, m) in self.iter() {
            if x >= a && x <= b {
                points.push(x);
                masses.push(m);
            }
        }
        Ok(DiscreteMeasure { points, masses })
    }

    /// Drops points carrying exactly zero mass.
    pub fn prune_zero_mass(&self) -> DiscreteMeasure {
        let mut points = Vec::new();
        let mut masses = Vec::new();
        for (x, m) in self.iter() {
            if m != 0.0 {
                points.push(x);
                masses.push(m);
            }
        }
        DiscreteMeasure { points, masses }
    }

    /// Tail-estimate moment `Σ M(xᵢ)/xᵢ · mᵢ`. Rejects nonzero mass at
    /// `r = 0` and reports overflow for weights that diverge on the given
    /// support.
    pub fn moment(&self, weight: &MomentWeight) -> Result<f64> {
        let mut acc = 0.0;
        for (x, m) in self.iter() {
            if x == 0.0 && m != 0.0 {
                return Err(Error::DivisionAtZero {
                    exponent: 1.0,
                    mass: m,
                });
            }
            if x > 0.0 {
                acc += weight.eval(x) / x * m;
            }
        }
        if acc.is_finite() {
            Ok(acc)
        } else {
            Err(Error::MomentOverflow {
                weight: weight.name(),
                max_point: self.points.last().copied().unwrap_or(0.0),
            })
        }
    }

    /// Writes the snapshot CSV (`index,x,mass`, one row per support
    /// point, 17 significant digits).
    pub fn write_snapshot<W: Write>(&self, mut w: W) -> io::Result<()> {
        writeln!(w, "index,x,mass")?;
        for (i, (x, m)) in self.iter().enumerate() {
            writeln!(w, "{},{:.16e},{:.16e}", i, x, m)?;
        }
        Ok(())
    }

    /// Parses the snapshot CSV format written by [`write_snapshot`].
    ///
    /// [`write_snapshot`]: DiscreteMeasure::write_snapshot
    pub fn read_snapshot<R: BufRead>(r: R) -> Result<DiscreteMeasure> {
        let mut points = Vec::new();
        let mut masses = Vec::new();
        for (lineno, line) in r.lines().enumerate() {
            let line = line.map_err(|_| Error::InvalidMass(f64::NAN))?;
            let line = line.trim();
            if lineno == 0 || line.is_empty() {
                continue;
            }
            let mut fields = line.split(',');
            let _index = fields.next();
            let x: f64 = fields
                .next()
                .and_then(|s| s.parse().ok())
                .ok_or(Error::InvalidSupportPoint(f64::NAN))?;
            let m: f64 = fields
                .next()
                .and_then(|s| s.parse().ok())
                .ok_or(Error::InvalidMass(f64::NAN))?;
            points.push(x);
            masses.push(m);
        }
        DiscreteMeasure::new(points, masses)
    }
}
