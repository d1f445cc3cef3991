//! Experiment drivers: convergence studies against a fine-grid or exact
//! solution, price checks and smoothing previews. Results are plain rows
//! ready for CSV.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::black_scholes::{
    kink_cell_predicate, mc_reference, tanh_dividend_example, three_asset_example, transform, two_asset_example,
    MarketParams, TransformedProblem, SMOOTHING_ORDER,
};
use crate::error::{Error, Result};
use crate::grid::Grid;
use crate::hoc_stencil::Scheme;
use crate::linear_algebra::SolverConfig;
use crate::pde_model::{pair_index, CoefficientField, CoefficientSample, Jet, MAX_DIM};
use crate::smoothing::{detect_smoothing_points, Smoother};
use crate::time_integrator::{steps_for_ratio, DiscreteProblem, Prescribed};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Arm {
    Hoc,
    Baseline,
    #[default]
    Both,
}

impl Arm {
    pub fn schemes(self) -> Vec<Scheme> {
        match self {
            Arm::Hoc => vec![Scheme::Hoc],
            Arm::Baseline => vec![Scheme::Baseline],
            Arm::Both => vec![Scheme::Hoc, Scheme::Baseline],
        }
    }
}

/// Error of one scheme on one grid.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LevelResult {
    pub scheme: Scheme,
    pub cells: usize,
    pub h: f64,
    pub dt: f64,
    pub steps: usize,
    /// `‖u − u_ref‖₂ / ‖u_ref‖₂` over the nodes.
    pub l2: f64,
    /// `max |u − u_ref| / max |u_ref|`.
    pub linf: f64,
    /// Wall time of the solve; kept out of serialized output so that
    /// results are reproducible byte for byte.
    #[serde(skip)]
    pub seconds: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OrderFit {
    pub scheme: Scheme,
    pub l2: f64,
    pub linf: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvergenceReport {
    pub levels: Vec<LevelResult>,
    pub orders: Vec<OrderFit>,
}

impl ConvergenceReport {
    pub fn order(&self, scheme: Scheme) -> Option<&OrderFit> {
        self.orders.iter().find(|o| o.scheme == scheme)
    }

    fn fit(levels: Vec<LevelResult>) -> Self {
        let mut orders = Vec::new();
        for scheme in [Scheme::Hoc, Scheme::Baseline] {
            let mine: Vec<&LevelResult> = levels.iter().filter(|l| l.scheme == scheme).collect();
            if mine.len() < 2 {
                continue;
            }
            let n: Vec<f64> = mine.iter().map(|l| l.cells as f64).collect();
            let l2: Vec<f64> = mine.iter().map(|l| l.l2).collect();
            let linf: Vec<f64> = mine.iter().map(|l| l.linf).collect();
            orders.push(OrderFit {
                scheme,
                l2: fitted_order(&n, &l2),
                linf: fitted_order(&n, &linf),
            });
        }
        Self { levels, orders }
    }
}

/// Minus the least-squares slope of `ln e` against `ln N`.
pub fn fitted_order(cells: &[f64], errors: &[f64]) -> f64 {
    let x: Vec<f64> = cells.iter().map(|c| c.ln()).collect();
    let y: Vec<f64> = errors.iter().map(|e| e.ln()).collect();
    let m = x.len() as f64;
    let (mx, my) = (x.iter().sum::<f64>() / m, y.iter().sum::<f64>() / m);
    let sxy: f64 = x.iter().zip(&y).map(|(a, b)| (a - mx) * (b - my)).sum();
    let sxx: f64 = x.iter().map(|a| (a - mx) * (a - mx)).sum();
    -sxy / sxx
}

/// Relative `l²` and `l∞` errors of `u` on `grid` against `reference` on a
/// finer grid over the same box whose nodes include those of `grid`.
pub fn relative_errors(grid: &Grid<f64>, u: &[f64], fine: &Grid<f64>, reference: &[f64]) -> Result<(f64, f64)> {
    let n = grid.dim();
    if fine.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, got: fine.dim() });
    }
    let mut ratio = Vec::with_capacity(n);
    for k in 0..n {
        let (c, f) = (grid.cells()[k], fine.cells()[k]);
        if f % c != 0 || grid.bounds(k) != fine.bounds(k) {
            return Err(Error::InvalidGrid(format!("{c} cells do not nest in {f} on axis {k}")));
        }
        ratio.push(f / c);
    }
    let (mut num2, mut den2, mut numi, mut deni) = (0.0, 0.0, 0.0f64, 0.0f64);
    let mut fine_idx = vec![0; n];
    for (l, &v) in u.iter().enumerate() {
        for (k, i) in grid.multi_index(l).into_iter().enumerate() {
            fine_idx[k] = i * ratio[k];
        }
        let r = reference[fine.linear_unchecked(&fine_idx)];
        num2 += (v - r) * (v - r);
        den2 += r * r;
        numi = numi.max((v - r).abs());
        deni = deni.max(r.abs());
    }
    Ok(((num2 / den2).sqrt(), numi / deni))
}

fn check_levels(grids: &[usize], reference: Option<usize>, lambda: f64) -> Result<()> {
    if grids.len() < 2 || grids.contains(&0) {
        return Err(Error::Config("need at least two grids with positive cell counts".into()));
    }
    if grids.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Config("grid sequence must be strictly increasing".into()));
    }
    if let Some(r) = reference {
        if grids.iter().any(|&g| r <= g || r % g != 0) {
            return Err(Error::Config(format!("reference grid {r} must be a finer multiple of every grid")));
        }
    }
    if !(lambda > 0.0 && lambda.is_finite()) {
        return Err(Error::Config(format!("mesh ratio {lambda} must be positive")));
    }
    Ok(())
}

/// Basket put convergence against a fine HOC solution, which serves as the
/// reference for both schemes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BasketStudy {
    pub market: MarketParams,
    /// Defaults to the market's symmetric box.
    #[serde(default)]
    pub bounds: Option<Vec<(f64, f64)>>,
    pub smooth: bool,
    /// `Δτ ≤ lambda h²`.
    pub lambda: f64,
    pub grids: Vec<usize>,
    pub reference: usize,
    #[serde(default)]
    pub solver: SolverConfig<f64>,
}

impl BasketStudy {
    pub fn two_asset(rho: f64) -> Self {
        Self {
            market: two_asset_example(rho),
            bounds: None,
            smooth: true,
            lambda: 0.4,
            grids: vec![10, 20, 40, 80],
            reference: 160,
            solver: SolverConfig::default(),
        }
    }

    pub fn tanh_dividends(rho: f64) -> Self {
        Self {
            market: tanh_dividend_example(rho),
            ..Self::two_asset(rho)
        }
    }

    pub fn three_asset(power: u32, correlated: bool) -> Self {
        Self {
            market: three_asset_example(power, correlated),
            bounds: None,
            smooth: false,
            lambda: 0.1,
            grids: vec![8, 16, 32],
            reference: 64,
            solver: SolverConfig::default(),
        }
    }

    pub fn problem(&self) -> Result<TransformedProblem> {
        let bounds = self.bounds.clone().unwrap_or_else(|| self.market.default_box());
        transform(&self.market, &bounds)
    }

    pub fn validate(&self) -> Result<()> {
        check_levels(&self.grids, Some(self.reference), self.lambda)?;
        self.solver.validate()?;
        self.problem().map(|_| ())
    }
}

pub fn run_basket_convergence(study: &BasketStudy, arm: Arm) -> Result<ConvergenceReport> {
    study.validate()?;
    let tp = study.problem()?;
    let (fine, reference) = tp.solve(study.reference, Scheme::Hoc, study.lambda, study.smooth, &study.solver)?;
    let mut levels = Vec::new();
    for scheme in arm.schemes() {
        for &cells in &study.grids {
            let start = Instant::now();
            let (grid, u) = tp.solve(cells, scheme, study.lambda, study.smooth, &study.solver)?;
            let seconds = start.elapsed().as_secs_f64();
            let h = grid.step(0);
            let (steps, dt) = steps_for_ratio(study.market.maturity, h, study.lambda)?;
            let (l2, linf) = relative_errors(&grid, &u, &fine, &reference)?;
            levels.push(LevelResult { scheme, cells, h, dt, steps, l2, linf, seconds });
        }
    }
    Ok(ConvergenceReport::fit(levels))
}

/// Known solution `u = e^{−κτ} Π sin(k_i x_i + φ_i)` of an equation with
/// constant `a`, constant mixing `b_ij = 2a ρ_ij`, drift
/// `c_i = c0_i + c1 sin(x_i + x_{i+1})` and the matching source.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ManufacturedStudy {
    pub dim: usize,
    pub a: f64,
    pub rho: Vec<f64>,
    pub c0: Vec<f64>,
    pub c1: f64,
    pub wave: Vec<f64>,
    pub phase: Vec<f64>,
    pub decay: f64,
    pub bounds: (f64, f64),
    pub horizon: f64,
    pub lambda: f64,
    pub grids: Vec<usize>,
    #[serde(default)]
    pub solver: SolverConfig<f64>,
}

impl ManufacturedStudy {
    pub fn new(dim: usize) -> Self {
        let grids = if dim == 3 { vec![8, 16, 32] } else { vec![8, 16, 32, 64] };
        Self {
            dim,
            a: -0.5,
            rho: vec![0.3, -0.2, 0.25][..dim * (dim - 1) / 2].to_vec(),
            c0: vec![0.4, -0.3, 0.2][..dim].to_vec(),
            c1: 0.5,
            wave: vec![2.1, 1.7, 1.3][..dim].to_vec(),
            phase: vec![0.3, 0.7, 1.1][..dim].to_vec(),
            decay: 0.5,
            bounds: (-1.0, 1.0),
            horizon: 0.1,
            lambda: 0.4,
            grids,
            solver: SolverConfig::default(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.dim;
        if !(1..=MAX_DIM).contains(&n) {
            return Err(Error::Config(format!("dimension {n} not in 1..=3")));
        }
        if self.rho.len() != n * (n - 1) / 2 || self.c0.len() != n || self.wave.len() != n || self.phase.len() != n {
            return Err(Error::Config("per-axis lists must match the dimension".into()));
        }
        if !(self.a < 0.0) {
            return Err(Error::NotParabolic { axis: 0, value: self.a, point: vec![] });
        }
        if !(self.bounds.0 < self.bounds.1 && self.horizon > 0.0) {
            return Err(Error::Config("empty box or horizon".into()));
        }
        check_levels(&self.grids, None, self.lambda)?;
        self.solver.validate()
    }

    fn pair(&self, i: usize, j: usize) -> f64 {
        self.rho[pair_index(i, j)]
    }

    /// `∂^α u` at `(x, τ)`.
    pub fn exact_partial(&self, alpha: [usize; MAX_DIM], x: &[f64], tau: f64) -> f64 {
        let mut v = (-self.decay * tau).exp();
        for i in 0..self.dim {
            let k = self.wave[i];
            let shift = alpha[i] as f64 * std::f64::consts::FRAC_PI_2;
            v *= k.powi(alpha[i] as i32) * (k * x[i] + self.phase[i] + shift).sin();
        }
        v
    }

    pub fn exact(&self, x: &[f64], tau: f64) -> f64 {
        self.exact_partial([0; MAX_DIM], x, tau)
    }

    /// `∂^α u` with its first and second spatial partials.
    fn partial_jet(&self, alpha: [usize; MAX_DIM], x: &[f64], tau: f64) -> Jet<f64> {
        let mut j = Jet::constant(self.exact_partial(alpha, x, tau));
        for k in 0..self.dim {
            let mut ak = alpha;
            ak[k] += 1;
            j.d[k] = self.exact_partial(ak, x, tau);
            for l in 0..self.dim {
                let mut akl = ak;
                akl[l] += 1;
                j.dd[k][l] = self.exact_partial(akl, x, tau);
            }
        }
        j
    }
}

impl CoefficientField<f64> for ManufacturedStudy {
    fn dim(&self) -> usize {
        self.dim
    }

    fn eval(&self, x: &[f64], tau: f64) -> CoefficientSample<f64> {
        let n = self.dim;
        let mut s = CoefficientSample::zeroed(x, tau);
        let unit = |i: usize| {
            let mut e = [0; MAX_DIM];
            e[i] = 1;
            e
        };
        let mut g = self.partial_jet([0; MAX_DIM], x, tau).scale(-self.decay);
        for i in 0..n {
            s.a[i] = Jet::constant(self.a);
            let mut ii = [0; MAX_DIM];
            ii[i] = 2;
            g += self.partial_jet(ii, x, tau).scale(self.a);
            for j in i + 1..n {
                let b = 2.0 * self.a * self.pair(i, j);
                s.b[pair_index(i, j)] = Jet::constant(b);
                let mut ij = unit(i);
                ij[j] = 1;
                g += self.partial_jet(ij, x, tau).scale(b);
            }
            let next = s.coord((i + 1) % n);
            let arg = if n == 1 { s.coord(i) } else { s.coord(i) + next };
            s.c[i] = arg.sin().scale(self.c1) + self.c0[i];
            g += s.c[i] * self.partial_jet(unit(i), x, tau);
        }
        s.g = g;
        s
    }
}

/// Convergence against the exact solution with Dirichlet data on the whole
/// boundary.
pub fn run_manufactured(study: &ManufacturedStudy, arm: Arm) -> Result<ConvergenceReport> {
    study.validate()?;
    let mut levels = Vec::new();
    for scheme in arm.schemes() {
        for &cells in &study.grids {
            let grid = Grid::cube(study.dim, study.bounds.0, study.bounds.1, cells)?;
            let h = grid.step(0);
            let (steps, dt) = steps_for_ratio(study.horizon, h, study.lambda)?;
            let points: Vec<Vec<f64>> = (0..grid.node_count()).map(|l| grid.point(&grid.multi_index(l))).collect();
            let u0 = points.iter().map(|x| study.exact(x, 0.0)).collect();
            let boundary = Prescribed(|x: &[f64], tau: f64| study.exact(x, tau));
            let problem = DiscreteProblem::new(grid.clone(), study, scheme, dt, boundary, u0)?;
            let start = Instant::now();
            let u = problem.run(study.horizon, &study.solver, None)?;
            let seconds = start.elapsed().as_secs_f64();
            let exact: Vec<f64> = points.iter().map(|x| study.exact(x, study.horizon)).collect();
            let (l2, linf) = relative_errors(&grid, &u, &grid, &exact)?;
            levels.push(LevelResult { scheme, cells, h, dt, steps, l2, linf, seconds });
        }
    }
    Ok(ConvergenceReport::fit(levels))
}

/// PDE price against Monte Carlo at a spot lying on a grid node.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PriceCheck {
    pub market: MarketParams,
    #[serde(default)]
    pub bounds: Option<Vec<(f64, f64)>>,
    pub spot: Vec<f64>,
    pub cells: usize,
    pub lambda: f64,
    pub smooth: bool,
    pub paths: usize,
    #[serde(default)]
    pub solver: SolverConfig<f64>,
}

impl PriceCheck {
    pub fn two_asset(rho: f64) -> Self {
        Self {
            market: two_asset_example(rho),
            bounds: None,
            spot: vec![10.0, 10.0],
            cells: 80,
            lambda: 0.4,
            smooth: true,
            paths: 1_000_000,
            solver: SolverConfig::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PriceCheckResult {
    pub scheme: Scheme,
    pub pde: f64,
    pub mc: f64,
    pub se: f64,
    /// `(pde − mc) / se`.
    pub z: f64,
}

pub fn run_price_check(check: &PriceCheck, arm: Arm, seed: u64) -> Result<Vec<PriceCheckResult>> {
    let bounds = check.bounds.clone().unwrap_or_else(|| check.market.default_box());
    let tp = transform(&check.market, &bounds)?;
    let grid = tp.grid(check.cells)?;
    let x = tp.coordinates(&check.spot);
    let mut idx = Vec::with_capacity(x.len());
    for (k, &xk) in x.iter().enumerate() {
        let t = (xk - grid.bounds(k).0) / grid.step(k);
        if (t - t.round()).abs() > 1e-9 || t < 0.0 || t.round() as usize > grid.cells()[k] {
            return Err(Error::Config(format!("spot {:?} is not a grid node", check.spot)));
        }
        idx.push(t.round() as usize);
    }
    let node = grid.linear(&idx)?;
    let (mc, se) = mc_reference(&check.market, &check.spot, check.paths, seed)?;
    let mut out = Vec::new();
    for scheme in arm.schemes() {
        let (_, u) = tp.solve(check.cells, scheme, check.lambda, check.smooth, &check.solver)?;
        let pde = tp.to_price(u[node], check.market.maturity);
        out.push(PriceCheckResult { scheme, pde, mc, se, z: (pde - mc) / se });
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PreviewRow {
    pub node: usize,
    pub x: Vec<f64>,
    pub raw: f64,
    pub smoothed: f64,
    pub in_set: bool,
}

/// Raw and smoothed payoff at every grid node, with the smoothing set.
pub fn smoothing_preview(market: &MarketParams, bounds: Option<&[(f64, f64)]>, cells: usize) -> Result<Vec<PreviewRow>> {
    let bounds = bounds.map(<[_]>::to_vec).unwrap_or_else(|| market.default_box());
    let tp = transform(market, &bounds)?;
    let grid = tp.grid(cells)?;
    let h = grid.step(0);
    let set = detect_smoothing_points(&grid, kink_cell_predicate(market, h));
    let sm = Smoother::new(SMOOTHING_ORDER)?;
    let u0 = |x: &[f64]| tp.u0(x);
    Ok((0..grid.node_count())
        .map(|node| {
            let x = grid.point(&grid.multi_index(node));
            let in_set = set.binary_search(&node).is_ok();
            let raw = tp.u0(&x);
            let smoothed = if in_set { sm.smooth_at(&u0, &x, h) } else { raw };
            PreviewRow { node, x, raw, smoothed, in_set }
        })
        .collect())
}
