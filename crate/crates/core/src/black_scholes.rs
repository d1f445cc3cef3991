//! Basket power puts under the multi-asset Black-Scholes model.
//!
//! With `x_i = γ ln(S_i/K)/σ_i`, `τ = T − t` and `u = e^{rτ} V/K` the pricing
//! equation becomes
//!
//! ```text
//! u_τ − γ²/2 Σ u_ii − γ² Σ_{i<j} ρ_ij u_ij + γ Σ ς_i u_i = 0,   ς_i = σ_i/2 − (r − δ_i)/σ_i,
//! ```
//!
//! with initial data `K^{p−1} max(1 − Σ ω_i e^{σ_i x_i/γ}, 0)^p`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::Grid;
use crate::hoc_stencil::Scheme;
use crate::linear_algebra::SolverConfig;
use crate::pde_model::{pair_index, CoefficientField, CoefficientSample, Jet, MAX_DIM};
use crate::smoothing::{detect_smoothing_points, smooth_initial};
use crate::time_integrator::{steps_for_ratio, DiscreteProblem, ReducedFaces};

/// Gauss-Legendre points per unit cell when smoothing the payoff.
pub const SMOOTHING_ORDER: usize = 8;

/// Continuous dividend yield of one asset.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Dividend {
    Constant { rate: f64 },
    /// `δ(S) = δ* (tanh(ζ(S − S*)) − tanh(−ζ S*)) / 2`: zero at `S = 0`,
    /// rising to about `δ*` around `S*`.
    Tanh { max: f64, zeta: f64, s_star: f64 },
}

impl Dividend {
    pub fn at(&self, s: f64) -> f64 {
        match *self {
            Dividend::Constant { rate } => rate,
            Dividend::Tanh { max, zeta, s_star } => max * ((zeta * (s - s_star)).tanh() - (-zeta * s_star).tanh()) / 2.0,
        }
    }

    fn jet(&self, s: &Jet<f64>) -> Jet<f64> {
        match *self {
            Dividend::Constant { rate } => Jet::constant(rate),
            Dividend::Tanh { max, zeta, s_star } => {
                ((s.scale(zeta) + (-zeta * s_star)).tanh() + (-(-zeta * s_star).tanh())).scale(max / 2.0)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MarketParams {
    pub sigma: Vec<f64>,
    /// Correlations in the order (1,2), (1,3), (2,3).
    pub rho: Vec<f64>,
    pub rate: f64,
    pub dividends: Vec<Dividend>,
    pub weights: Vec<f64>,
    pub strike: f64,
    pub maturity: f64,
    pub power: u32,
    pub gamma: f64,
}

impl MarketParams {
    pub fn dim(&self) -> usize {
        self.sigma.len()
    }

    pub fn rho(&self, i: usize, j: usize) -> f64 {
        if i == j {
            1.0
        } else {
            self.rho[pair_index(i.min(j), i.max(j))]
        }
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.dim();
        let bad = |m: String| Err(Error::InvalidArgument(m));
        if !(1..=MAX_DIM).contains(&n) {
            return bad(format!("{n} assets; 1 to 3 are supported"));
        }
        if self.rho.len() != n * (n - 1) / 2 || self.dividends.len() != n || self.weights.len() != n {
            return bad("per-asset and per-pair lists must match the number of assets".into());
        }
        if self.sigma.iter().any(|&s| !(s > 0.0 && s.is_finite())) {
            return bad("volatilities must be positive".into());
        }
        if self.rho.iter().any(|&r| !(r > -1.0 && r < 1.0)) {
            return bad("correlations must lie in (-1, 1)".into());
        }
        if (self.weights.iter().sum::<f64>() - 1.0).abs() > 1e-12 {
            return bad("basket weights must sum to 1".into());
        }
        if !(self.strike > 0.0 && self.maturity > 0.0 && self.gamma > 0.0 && self.rate.is_finite()) {
            return bad("strike, maturity and scaling must be positive".into());
        }
        if self.power < 1 {
            return bad("power must be at least 1".into());
        }
        for d in &self.dividends {
            let ok = match *d {
                Dividend::Constant { rate } => rate.is_finite(),
                Dividend::Tanh { max, zeta, s_star } => max >= 0.0 && zeta > 0.0 && s_star > 0.0,
            };
            if !ok {
                return bad(format!("invalid dividend {d:?}"));
            }
        }
        cholesky(&self.correlation())?;
        Ok(())
    }

    pub fn correlation(&self) -> Vec<Vec<f64>> {
        let n = self.dim();
        (0..n).map(|i| (0..n).map(|j| self.rho(i, j)).collect()).collect()
    }

    pub fn has_constant_dividends(&self) -> bool {
        self.dividends.iter().all(|d| matches!(d, Dividend::Constant { .. }))
    }

    /// Box `[-L, L]^n` with `L = max_i γ ln 8 / σ_i`, so every asset spans
    /// at least `K/8` to `8K` on a grid with equal steps.
    pub fn default_box(&self) -> Vec<(f64, f64)> {
        let l = self
            .sigma
            .iter()
            .map(|&s| self.gamma * 8f64.ln() / s)
            .fold(0.0, f64::max);
        vec![(-l, l); self.dim()]
    }
}

/// Lower triangular `L` with `L Lᵀ = C`, allowing a semidefinite `C`.
pub fn cholesky(c: &[Vec<f64>]) -> Result<Vec<Vec<f64>>> {
    let n = c.len();
    let mut l = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..=i {
            let s: f64 = (0..j).map(|k| l[i][k] * l[j][k]).sum();
            if i == j {
                let d = c[i][i] - s;
                if d < -1e-12 {
                    return Err(Error::NotPositiveSemidefinite);
                }
                l[i][i] = d.max(0.0).sqrt();
            } else if l[j][j] > 0.0 {
                l[i][j] = (c[i][j] - s) / l[j][j];
            } else if (c[i][j] - s).abs() > 1e-12 {
                return Err(Error::NotPositiveSemidefinite);
            }
        }
    }
    Ok(l)
}

/// Coefficients of the transformed equation.
#[derive(Debug, Clone)]
pub struct BlackScholesField {
    mp: MarketParams,
}

impl BlackScholesField {
    pub fn new(mp: MarketParams) -> Result<Self> {
        mp.validate()?;
        Ok(Self { mp })
    }

    pub fn params(&self) -> &MarketParams {
        &self.mp
    }
}

impl CoefficientField<f64> for BlackScholesField {
    fn dim(&self) -> usize {
        self.mp.dim()
    }

    fn eval(&self, x: &[f64], tau: f64) -> CoefficientSample<f64> {
        let mp = &self.mp;
        let g = mp.gamma;
        let mut s = CoefficientSample::zeroed(x, tau);
        for i in 0..mp.dim() {
            s.a[i] = Jet::constant(-g * g / 2.0);
            for j in i + 1..mp.dim() {
                s.b[pair_index(i, j)] = Jet::constant(-g * g * mp.rho(i, j));
            }
            let sig = mp.sigma[i];
            let asset = s.coord(i).scale(sig / g).exp().scale(mp.strike);
            let delta = mp.dividends[i].jet(&asset);
            // γ(σ/2 − (r − δ)/σ)
            s.c[i] = delta.scale(g / sig) + g * (sig / 2.0 - mp.rate / sig);
        }
        s
    }

    fn is_time_dependent(&self) -> bool {
        false
    }
}

/// The pricing problem in transformed variables on a box.
#[derive(Debug, Clone)]
pub struct TransformedProblem {
    pub field: BlackScholesField,
    pub bounds: Vec<(f64, f64)>,
}

pub fn transform(mp: &MarketParams, bounds: &[(f64, f64)]) -> Result<TransformedProblem> {
    let field = BlackScholesField::new(mp.clone())?;
    if bounds.len() != mp.dim() {
        return Err(Error::DimensionMismatch {
            expected: mp.dim(),
            got: bounds.len(),
        });
    }
    Ok(TransformedProblem {
        field,
        bounds: bounds.to_vec(),
    })
}

impl TransformedProblem {
    pub fn params(&self) -> &MarketParams {
        self.field.params()
    }

    pub fn grid(&self, cells: usize) -> Result<Grid<f64>> {
        Grid::new(&self.bounds, &vec![cells; self.bounds.len()])
    }

    pub fn u0(&self, x: &[f64]) -> f64 {
        payoff_u0(self.params(), x)
    }

    pub fn asset_prices(&self, x: &[f64]) -> Vec<f64> {
        let mp = self.params();
        x.iter()
            .zip(&mp.sigma)
            .map(|(&xi, &s)| mp.strike * (s * xi / mp.gamma).exp())
            .collect()
    }

    pub fn coordinates(&self, s: &[f64]) -> Vec<f64> {
        let mp = self.params();
        s.iter()
            .zip(&mp.sigma)
            .map(|(&si, &sig)| mp.gamma * (si / mp.strike).ln() / sig)
            .collect()
    }

    /// Payoff on the grid, smoothed near the kink when asked.
    pub fn initial_values(&self, grid: &Grid<f64>, smooth: bool) -> Result<Vec<f64>> {
        let mut u: Vec<f64> = (0..grid.node_count())
            .map(|l| self.u0(&grid.point(&grid.multi_index(l))))
            .collect();
        if smooth {
            let h = grid.step(0);
            let pts = detect_smoothing_points(grid, kink_cell_predicate(self.params(), h));
            smooth_initial(&|x: &[f64]| self.u0(x), grid, &mut u, &pts, SMOOTHING_ORDER)?;
        }
        Ok(u)
    }

    /// Transformed solution at maturity on a grid with `cells` per axis and
    /// `Δτ ≤ lambda h²`.
    pub fn solve(
        &self,
        cells: usize,
        scheme: Scheme,
        lambda: f64,
        smooth: bool,
        cfg: &SolverConfig<f64>,
    ) -> Result<(Grid<f64>, Vec<f64>)> {
        let grid = self.grid(cells)?;
        let h = grid
            .uniform_step(1e-12)
            .ok_or_else(|| Error::InvalidGrid("the box must give equal steps".into()))?;
        let t = self.params().maturity;
        let (_, dt) = steps_for_ratio(t, h, lambda)?;
        let u0 = self.initial_values(&grid, smooth)?;
        let problem = DiscreteProblem::new(grid.clone(), &self.field, scheme, dt, boundary_policy(self.params()), u0)?;
        let u = problem.run(t, cfg, None)?;
        Ok((grid, u))
    }

    /// `V = K e^{−rτ} u`.
    pub fn to_price(&self, u: f64, tau: f64) -> f64 {
        let mp = self.params();
        mp.strike * (-mp.rate * tau).exp() * u
    }

    pub fn from_price(&self, v: f64, tau: f64) -> f64 {
        let mp = self.params();
        (mp.rate * tau).exp() * v / mp.strike
    }
}

fn basket_gap(mp: &MarketParams, x: &[f64]) -> f64 {
    1.0 - x
        .iter()
        .enumerate()
        .map(|(i, &xi)| mp.weights[i] * (mp.sigma[i] * xi / mp.gamma).exp())
        .sum::<f64>()
}

/// `K^{p−1} max(1 − Σ ω_i e^{σ_i x_i/γ}, 0)^p`.
pub fn payoff_u0(mp: &MarketParams, x: &[f64]) -> f64 {
    let p = mp.power as i32;
    mp.strike.powi(p - 1) * basket_gap(mp, x).max(0.0).powi(p)
}

/// Flags cells of side `h`, given by their lowest corner, that the kink
/// surface `Σ ω_i e^{σ_i x_i/γ} = 1` crosses.
pub fn kink_cell_predicate(mp: &MarketParams, h: f64) -> impl Fn(&[f64]) -> bool + '_ {
    move |lo: &[f64]| {
        // The gap decreases along every axis, so two corners decide.
        let hi: Vec<f64> = lo.iter().map(|&x| x + h).collect();
        basket_gap(mp, lo) > 0.0 && basket_gap(mp, &hi) <= 0.0
    }
}

/// Faces solve the equation without the terms along their fixed axes;
/// corners keep the payoff.
pub fn boundary_policy(_mp: &MarketParams) -> ReducedFaces {
    ReducedFaces
}

/// Paths per independent random stream.
const BATCH: usize = 1 << 14;

/// Monte Carlo price and standard error at spot `s0` with exact log-normal
/// terminal sampling.
pub fn mc_reference(mp: &MarketParams, s0: &[f64], paths: usize, seed: u64) -> Result<(f64, f64)> {
    mp.validate()?;
    if !mp.has_constant_dividends() {
        return Err(Error::InvalidArgument("the Monte Carlo oracle needs constant dividends".into()));
    }
    let n = mp.dim();
    if s0.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: s0.len() });
    }
    if paths < 2 {
        return Err(Error::InvalidArgument("need at least two paths".into()));
    }
    let l = cholesky(&mp.correlation())?;
    let t = mp.maturity;
    let drift: Vec<f64> = (0..n)
        .map(|i| (mp.rate - mp.dividends[i].at(0.0) - mp.sigma[i] * mp.sigma[i] / 2.0) * t)
        .collect();
    let vol: Vec<f64> = mp.sigma.iter().map(|s| s * t.sqrt()).collect();
    let discount = (-mp.rate * t).exp();
    let batches = paths.div_ceil(BATCH);
    let sums: Vec<(f64, f64)> = (0..batches)
        .into_par_iter()
        .map(|b| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(b as u64);
            let count = BATCH.min(paths - b * BATCH);
            let (mut s1, mut s2) = (0.0, 0.0);
            let mut z = [0.0; MAX_DIM];
            for _ in 0..count {
                for zi in z.iter_mut().take(n) {
                    *zi = rng.sample(StandardNormal);
                }
                let mut basket = 0.0;
                for i in 0..n {
                    let w: f64 = (0..=i).map(|k| l[i][k] * z[k]).sum();
                    basket += mp.weights[i] * s0[i] * (drift[i] + vol[i] * w).exp();
                }
                let v = discount * (mp.strike - basket).max(0.0).powi(mp.power as i32);
                s1 += v;
                s2 += v * v;
            }
            (s1, s2)
        })
        .collect();
    let (s1, s2) = sums.iter().fold((0.0, 0.0), |acc, s| (acc.0 + s.0, acc.1 + s.1));
    let m = paths as f64;
    let mean = s1 / m;
    let var = ((s2 - m * mean * mean) / (m - 1.0)).max(0.0);
    Ok((mean, (var / m).sqrt()))
}

/// The two-asset setting used for the experiments: σ = (0.25, 0.35),
/// γ = 0.25, r = ln 1.05, ω = (0.35, 0.65), K = 10, no dividends, T = 0.25.
pub fn two_asset_example(rho: f64) -> MarketParams {
    MarketParams {
        sigma: vec![0.25, 0.35],
        rho: vec![rho],
        rate: 1.05f64.ln(),
        dividends: vec![Dividend::Constant { rate: 0.0 }; 2],
        weights: vec![0.35, 0.65],
        strike: 10.0,
        maturity: 0.25,
        power: 1,
        gamma: 0.25,
    }
}

/// Two assets with dividends switching on near `S* = 0.9 K / ω_i`.
pub fn tanh_dividend_example(rho: f64) -> MarketParams {
    let mut mp = two_asset_example(rho);
    let k = mp.strike;
    mp.dividends = vec![
        Dividend::Tanh { max: 0.02, zeta: 0.35, s_star: 0.9 * k / 0.35 },
        Dividend::Tanh { max: 0.01, zeta: 0.5, s_star: 0.9 * k / 0.65 },
    ];
    mp
}

/// Three assets: σ_i = 0.3, δ_i = 0.01, ω_i = 1/3, γ = 0.3, T = 0.25,
/// K = 10 and correlations (−0.4, −0.1, −0.2) unless `correlated` is false.
pub fn three_asset_example(power: u32, correlated: bool) -> MarketParams {
    MarketParams {
        sigma: vec![0.3; 3],
        rho: if correlated { vec![-0.4, -0.1, -0.2] } else { vec![0.0; 3] },
        rate: 1.05f64.ln(),
        dividends: vec![Dividend::Constant { rate: 0.01 }; 3],
        weights: vec![1.0 / 3.0; 3],
        strike: 10.0,
        maturity: 0.25,
        power,
        gamma: 0.3,
    }
}
