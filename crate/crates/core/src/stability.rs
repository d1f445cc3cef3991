//! Von Neumann analysis of the Crank-Nicolson scheme with frozen
//! coefficients.
//!
//! A Fourier mode `exp(i Σ j_m z_m)` is multiplied per step by
//! `G = B̂(z) / Â(z)`, the symbols of `A = M + k/2 K` and `B = M − k/2 K`.

use num_complex::Complex;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::grid::stencil_offsets;
use crate::hoc_stencil::{weights, Scheme};
use crate::pde_model::{pair_index, CoefficientSample, Jet};
use crate::scalar::Real;

/// Constant coefficients, step `h` and time step `k`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrozenSample<T> {
    pub dim: usize,
    pub a: T,
    /// Pairs in the order (1,2), (1,3), (2,3).
    pub b: [T; 3],
    pub c: [T; 3],
    pub h: T,
    pub k: T,
}

impl<T: Real> FrozenSample<T> {
    pub fn validate(&self) -> Result<()> {
        if !(1..=3).contains(&self.dim) {
            return Err(Error::InvalidArgument(format!("dimension {} not in 1..=3", self.dim)));
        }
        if !(self.a < T::zero()) {
            return Err(Error::NotParabolic {
                axis: 0,
                value: self.a.to_f64_lossy(),
                point: vec![],
            });
        }
        if !(self.h > T::zero() && self.k > T::zero()) {
            return Err(Error::InvalidArgument("h and k must be positive".into()));
        }
        Ok(())
    }

    fn coefficient_sample(&self) -> CoefficientSample<T> {
        let mut s = CoefficientSample::zeroed(&vec![T::zero(); self.dim], T::zero());
        for i in 0..self.dim {
            s.a[i] = Jet::constant(self.a);
            s.c[i] = Jet::constant(self.c[i]);
            for j in i + 1..self.dim {
                let p = pair_index(i, j);
                s.b[p] = Jet::constant(self.b[p]);
            }
        }
        s
    }
}

/// Frequencies `z_m`, one per axis.
#[derive(Debug, Clone, PartialEq)]
pub struct FourierMode<T> {
    pub z: Vec<T>,
}

impl<T: Real> FourierMode<T> {
    pub fn new(z: Vec<T>) -> Self {
        Self { z }
    }

    /// `z_m = 2π t_m`, so that `ξ_m = cos(π t_m)`.
    pub fn from_fractions(t: &[T]) -> Self {
        Self {
            z: t.iter().map(|&t| T::TAU() * t).collect(),
        }
    }

    pub fn xi(&self) -> Vec<T> {
        self.z.iter().map(|&z| (z / T::lit(2.0)).cos()).collect()
    }

    pub fn eta(&self) -> Vec<T> {
        self.z.iter().map(|&z| (z / T::lit(2.0)).sin()).collect()
    }
}

/// Stencil weights of the two sides of one step.
#[derive(Debug, Clone)]
pub struct StepSymbol<T> {
    dim: usize,
    a: Vec<T>,
    b: Vec<T>,
    a_abs: T,
}

impl<T: Real> StepSymbol<T> {
    pub fn new(s: &FrozenSample<T>, scheme: Scheme) -> Result<Self> {
        s.validate()?;
        let w = weights(scheme, &s.coefficient_sample(), s.h)?;
        let half = s.k / T::lit(2.0);
        let a: Vec<T> = w.m.iter().zip(&w.k).map(|(&m, &k)| m + half * k).collect();
        let b = w.m.iter().zip(&w.k).map(|(&m, &k)| m - half * k).collect();
        let a_abs = a.iter().map(|v| v.abs()).sum();
        Ok(Self { dim: s.dim, a, b, a_abs })
    }

    pub fn amplification(&self, mode: &FourierMode<T>) -> Result<Complex<T>> {
        if mode.z.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: mode.z.len(),
            });
        }
        let (mut num, mut den) = (Complex::new(T::zero(), T::zero()), Complex::new(T::zero(), T::zero()));
        for (p, off) in stencil_offsets(self.dim).iter().enumerate() {
            let phase: T = off.iter().zip(&mode.z).map(|(&o, &z)| T::from_i8(o).unwrap() * z).sum();
            let e = Complex::from_polar(T::one(), phase);
            num = num + e * self.b[p];
            den = den + e * self.a[p];
        }
        self.ratio(num, den)
    }

    fn ratio(&self, num: Complex<T>, den: Complex<T>) -> Result<Complex<T>> {
        if den.norm() < T::lit(1e-14) * self.a_abs {
            return Err(Error::DegenerateSymbol(den.norm().to_f64_lossy()));
        }
        Ok(num / den)
    }

    /// Largest `|G|² − 1` over the tensor grid `zs^dim` and the mode
    /// reaching it.
    pub fn worst_on_grid(&self, zs: &[T]) -> Result<(T, Vec<T>)> {
        let m = zs.len();
        let zero = Complex::new(T::zero(), T::zero());
        // phases[j][o+1] = exp(i o z_j)
        let phases: Vec<[Complex<T>; 3]> = zs
            .iter()
            .map(|&z| [Complex::from_polar(T::one(), -z), Complex::new(T::one(), T::zero()), Complex::from_polar(T::one(), z)])
            .collect();
        let mut worst = (T::neg_infinity(), vec![]);
        // Sum out the last axis first, then the remaining ones.
        let lead = 3usize.pow(self.dim as u32 - 1);
        let mut partial_a = vec![zero; lead * m];
        let mut partial_b = vec![zero; lead * m];
        for q in 0..lead {
            for (j, ph) in phases.iter().enumerate() {
                let (mut sa, mut sb) = (zero, zero);
                for o in 0..3 {
                    sa = sa + ph[o] * self.a[3 * q + o];
                    sb = sb + ph[o] * self.b[3 * q + o];
                }
                partial_a[q * m + j] = sa;
                partial_b[q * m + j] = sb;
            }
        }
        match self.dim {
            1 => {
                for j in 0..m {
                    let g = self.ratio(partial_b[j], partial_a[j])?;
                    let e = g.norm_sqr() - T::one();
                    if e > worst.0 {
                        worst = (e, vec![zs[j]]);
                    }
                }
            }
            2 => {
                for i in 0..m {
                    for j in 0..m {
                        let (mut sa, mut sb) = (zero, zero);
                        for o in 0..3 {
                            sa = sa + phases[i][o] * partial_a[o * m + j];
                            sb = sb + phases[i][o] * partial_b[o * m + j];
                        }
                        let e = self.ratio(sb, sa)?.norm_sqr() - T::one();
                        if e > worst.0 {
                            worst = (e, vec![zs[i], zs[j]]);
                        }
                    }
                }
            }
            _ => {
                let mut mid_a = vec![zero; 3 * m];
                let mut mid_b = vec![zero; 3 * m];
                for j in 0..m {
                    for l in 0..m {
                        for o1 in 0..3 {
                            let (mut sa, mut sb) = (zero, zero);
                            for o2 in 0..3 {
                                let q = 3 * o1 + o2;
                                sa = sa + phases[j][o2] * partial_a[q * m + l];
                                sb = sb + phases[j][o2] * partial_b[q * m + l];
                            }
                            mid_a[o1 * m + l] = sa;
                            mid_b[o1 * m + l] = sb;
                        }
                    }
                    for i in 0..m {
                        for l in 0..m {
                            let (mut sa, mut sb) = (zero, zero);
                            for o in 0..3 {
                                sa = sa + phases[i][o] * mid_a[o * m + l];
                                sb = sb + phases[i][o] * mid_b[o * m + l];
                            }
                            let e = self.ratio(sb, sa)?.norm_sqr() - T::one();
                            if e > worst.0 {
                                worst = (e, vec![zs[i], zs[j], zs[l]]);
                            }
                        }
                    }
                }
            }
        }
        Ok(worst)
    }
}

/// `G` for one frozen sample and mode under the compact scheme.
pub fn amplification_factor<T: Real>(s: &FrozenSample<T>, mode: &FourierMode<T>) -> Result<Complex<T>> {
    StepSymbol::new(s, Scheme::Hoc)?.amplification(mode)
}

/// Largest `||G|² − 1|` over the `2^n` modes with every `ξ_m = ±1`.
pub fn corner_check<T: Real>(s: &FrozenSample<T>) -> Result<T> {
    let sym = StepSymbol::new(s, Scheme::Hoc)?;
    let mut worst = T::zero();
    for bits in 0..1usize << s.dim {
        let t: Vec<T> = (0..s.dim).map(|m| T::from_count((bits >> m) & 1)).collect();
        let g = sym.amplification(&FourierMode::from_fractions(&t))?;
        worst = worst.max((g.norm_sqr() - T::one()).abs());
    }
    Ok(worst)
}

/// Uniform frequencies `2π j / m`, plus `π` when `m` is odd.
pub fn mode_grid<T: Real>(m: usize) -> Vec<T> {
    let mut zs: Vec<T> = (0..m).map(|j| T::TAU() * T::from_count(j) / T::from_count(m)).collect();
    if m % 2 == 1 {
        zs.push(T::PI());
    }
    zs
}

/// Halton point `index` in base `base`.
pub fn radical_inverse(mut index: usize, base: usize) -> f64 {
    let (mut inv, mut f) = (0.0, 1.0 / base as f64);
    while index > 0 {
        inv += f * (index % base) as f64;
        index /= base;
        f /= base as f64;
    }
    inv
}

const PRIMES: [usize; 8] = [2, 3, 5, 7, 11, 13, 17, 19];

/// Parameter box of a stability scan. Mixed coefficients are
/// `b_ij = 2 a ρ_ij`, the Black-Scholes form.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct ScanConfig {
    pub dim: usize,
    pub a: (f64, f64),
    pub rho: (f64, f64),
    pub c: (f64, f64),
    pub h: (f64, f64),
    /// Mesh ratios `k / h²`.
    pub lambdas: Vec<f64>,
    pub modes: usize,
    pub samples: usize,
    /// Skips this many leading Halton points.
    #[serde(default)]
    pub offset: usize,
}

impl ScanConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::Config(m));
        if !(2..=3).contains(&self.dim) {
            return bad(format!("scan dimension {} not in 2..=3", self.dim));
        }
        for (name, (lo, hi)) in [("a", self.a), ("rho", self.rho), ("c", self.c), ("h", self.h)] {
            if !(lo <= hi) || !lo.is_finite() || !hi.is_finite() {
                return bad(format!("range {name} = [{lo}, {hi}] is empty"));
            }
        }
        if !(self.a.1 < 0.0) {
            return Err(Error::NotParabolic {
                axis: 0,
                value: self.a.1,
                point: vec![],
            });
        }
        if !(self.rho.0 > -1.0 && self.rho.1 < 1.0) {
            return bad("correlations must lie in (-1, 1)".into());
        }
        if !(self.h.0 > 0.0) {
            return bad("steps must be positive".into());
        }
        if self.lambdas.is_empty() || self.lambdas.iter().any(|&l| !(l > 0.0 && l.is_finite())) {
            return bad("mesh ratios must be positive".into());
        }
        if self.modes < 2 || self.samples == 0 {
            return bad("need at least 2 modes per axis and one sample".into());
        }
        Ok(())
    }
}

/// Worst mode for one parameter point and mesh ratio.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct ScanRow {
    pub sample: usize,
    pub a: f64,
    pub b: [f64; 3],
    pub c: [f64; 3],
    pub h: f64,
    pub lambda: f64,
    pub z: Vec<f64>,
    pub excess: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanReport {
    pub rows: Vec<ScanRow>,
    /// Halton points dropped because their correlation matrix is not
    /// positive definite.
    pub skipped: usize,
}

impl ScanReport {
    /// Row with the largest `|G|² − 1`.
    pub fn worst(&self) -> Option<&ScanRow> {
        self.rows.iter().max_by(|x, y| x.excess.total_cmp(&y.excess))
    }

    pub fn max_excess(&self) -> f64 {
        self.worst().map_or(f64::NEG_INFINITY, |r| r.excess)
    }
}

fn positive_definite(rho: &[f64; 3], dim: usize) -> bool {
    if dim == 2 {
        return rho[0].abs() < 1.0;
    }
    let (r12, r13, r23) = (rho[0], rho[1], rho[2]);
    let det = 1.0 + 2.0 * r12 * r13 * r23 - r12 * r12 - r13 * r13 - r23 * r23;
    r12.abs() < 1.0 && det > 0.0
}

/// Halton sweep of the parameter box times a uniform mode grid.
pub fn scan_stability(cfg: &ScanConfig, scheme: Scheme) -> Result<ScanReport> {
    cfg.validate()?;
    let n = cfg.dim;
    let pairs = n * (n - 1) / 2;
    let zs: Vec<f64> = mode_grid(cfg.modes);
    let lerp = |(lo, hi): (f64, f64), t: f64| lo + (hi - lo) * t;
    let points: Vec<(usize, f64, f64, [f64; 3], [f64; 3])> = (0..cfg.samples)
        .map(|s| {
            let idx = cfg.offset + s + 1;
            let u = |d: usize| radical_inverse(idx, PRIMES[d]);
            let a = lerp(cfg.a, u(0));
            let h = lerp(cfg.h, u(1));
            let mut c = [0.0; 3];
            let mut rho = [0.0; 3];
            for i in 0..n {
                c[i] = lerp(cfg.c, u(2 + i));
            }
            for p in 0..pairs {
                rho[p] = lerp(cfg.rho, u(2 + n + p));
            }
            (s, a, h, c, rho)
        })
        .collect();
    let kept: Vec<_> = points.iter().filter(|p| positive_definite(&p.4, n)).collect();
    let skipped = points.len() - kept.len();
    let jobs: Vec<_> = kept
        .iter()
        .flat_map(|p| cfg.lambdas.iter().map(move |&l| (*p, l)))
        .collect();
    let rows = jobs
        .par_iter()
        .map(|&(&(sample, a, h, c, rho), lambda)| {
            let b = rho.map(|r| 2.0 * a * r);
            let s = FrozenSample {
                dim: n,
                a,
                b,
                c,
                h,
                k: lambda * h * h,
            };
            let (excess, z) = StepSymbol::new(&s, scheme)?.worst_on_grid(&zs)?;
            Ok(ScanRow {
                sample,
                a,
                b,
                c,
                h,
                lambda,
                z,
                excess,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ScanReport { rows, skipped })
}
