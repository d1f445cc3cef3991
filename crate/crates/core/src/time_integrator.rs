//! Crank-Nicolson stepping of the semi-discrete scheme
//! `M ∂τU + K U = g̃`:
//!
//! ```text
//! (M̄ + Δτ/2 K(τ_{k+1})) U_{k+1} = (M̄ − Δτ/2 K(τ_k)) U_k + Δτ/2 (g̃(τ_k) + g̃(τ_{k+1}))
//! ```
//!
//! with `M̄` the mean of `M` over the two levels. Interior rows use the full
//! stencil; boundary rows follow a [`BoundaryPolicy`].

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::grid::{stencil_offsets, Grid, NodeClass};
use crate::hoc_stencil::{weights, Scheme, StencilWeights};
use crate::linear_algebra::{bicgstab, CsrMatrix, SolverConfig};
use crate::pde_model::{CoefficientField, CoefficientSample};
use crate::scalar::Real;

/// Treatment of one boundary node.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryRule {
    /// Solve the equation restricted to the axes that are not at a bound.
    Reduced,
    /// Keep the initial value.
    Frozen,
    /// Impose [`BoundaryPolicy::prescribed`] at every new time level.
    Prescribed,
}

pub trait BoundaryPolicy<T: Real>: Send + Sync {
    fn rule(&self, class: &NodeClass) -> BoundaryRule;

    /// Boundary value for [`BoundaryRule::Prescribed`] nodes.
    fn prescribed(&self, _x: &[T], _tau: T) -> T {
        T::nan()
    }

    /// Whether prescribed values change with `τ`.
    fn is_time_dependent(&self) -> bool {
        false
    }
}

/// Reduced equations on faces, frozen corners.
#[derive(Debug, Clone, Copy, Default)]
pub struct ReducedFaces;

impl<T: Real> BoundaryPolicy<T> for ReducedFaces {
    fn rule(&self, class: &NodeClass) -> BoundaryRule {
        match class {
            NodeClass::Corner { .. } => BoundaryRule::Frozen,
            _ => BoundaryRule::Reduced,
        }
    }
}

/// Dirichlet data from a function of `(x, τ)` on every boundary node.
pub struct Prescribed<F>(pub F);

impl<T: Real, F: Fn(&[T], T) -> T + Send + Sync> BoundaryPolicy<T> for Prescribed<F> {
    fn rule(&self, _class: &NodeClass) -> BoundaryRule {
        BoundaryRule::Prescribed
    }

    fn prescribed(&self, x: &[T], tau: T) -> T {
        (self.0)(x, tau)
    }

    fn is_time_dependent(&self) -> bool {
        true
    }
}

pub struct DiscreteProblem<T: Real, F, B> {
    grid: Grid<T>,
    h: T,
    field: F,
    scheme: Scheme,
    dt: T,
    boundary: B,
    initial: Vec<T>,
    classes: Vec<NodeClass>,
}

/// The two sides of one step.
#[derive(Debug, Clone)]
pub struct StepMatrices<T> {
    pub a: CsrMatrix<T>,
    pub b: CsrMatrix<T>,
    pub rhs_extra: Vec<T>,
}

struct Row<T> {
    cols: Vec<usize>,
    a: Vec<T>,
    b: Vec<T>,
    rhs: T,
}

impl<T, F, B> DiscreteProblem<T, F, B>
where
    T: Real,
    F: CoefficientField<T>,
    B: BoundaryPolicy<T>,
{
    pub fn new(grid: Grid<T>, field: F, scheme: Scheme, dt: T, boundary: B, initial: Vec<T>) -> Result<Self> {
        if field.dim() != grid.dim() {
            return Err(Error::DimensionMismatch {
                expected: grid.dim(),
                got: field.dim(),
            });
        }
        let h = grid
            .uniform_step(T::lit(1e-12))
            .ok_or_else(|| Error::InvalidGrid("time stepping needs equal steps on every axis".into()))?;
        if !(dt > T::zero() && dt.is_finite()) {
            return Err(Error::InvalidArgument(format!("time step {dt} must be positive")));
        }
        if initial.len() != grid.node_count() {
            return Err(Error::DimensionMismatch {
                expected: grid.node_count(),
                got: initial.len(),
            });
        }
        if initial.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("initial values"));
        }
        let classes = (0..grid.node_count())
            .map(|i| grid.classify(&grid.multi_index(i)))
            .collect::<Result<_>>()?;
        Ok(Self {
            grid,
            h,
            field,
            scheme,
            dt,
            boundary,
            initial,
            classes,
        })
    }

    pub fn grid(&self) -> &Grid<T> {
        &self.grid
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dt(&self) -> T {
        self.dt
    }

    pub fn initial(&self) -> &[T] {
        &self.initial
    }

    pub fn assemble_step(&self, tau_k: T) -> Result<StepMatrices<T>> {
        self.assemble_step_with(tau_k, self.dt)
    }

    /// Assembly with an explicit step; `dt = 0` yields `A = B = M`.
    pub fn assemble_step_with(&self, tau_k: T, dt: T) -> Result<StepMatrices<T>> {
        if !(dt >= T::zero()) {
            return Err(Error::InvalidArgument(format!("time step {dt} must not be negative")));
        }
        let n = self.grid.node_count();
        let rows: Vec<Row<T>> = (0..n)
            .into_par_iter()
            .map(|i| self.row(i, tau_k, dt))
            .collect::<Result<_>>()?;
        let mut a_rows = Vec::with_capacity(n);
        let mut b_rows = Vec::with_capacity(n);
        let mut rhs = Vec::with_capacity(n);
        for r in rows {
            a_rows.push(r.cols.iter().copied().zip(r.a).collect());
            b_rows.push(r.cols.into_iter().zip(r.b).collect());
            rhs.push(r.rhs);
        }
        Ok(StepMatrices {
            a: CsrMatrix::from_rows(n, a_rows)?,
            b: CsrMatrix::from_rows(n, b_rows)?,
            rhs_extra: rhs,
        })
    }

    fn row(&self, i: usize, tau_k: T, dt: T) -> Result<Row<T>> {
        let class = &self.classes[i];
        let rule = if class.is_interior() {
            BoundaryRule::Reduced
        } else {
            self.boundary.rule(class)
        };
        let idx = self.grid.multi_index(i);
        match rule {
            BoundaryRule::Frozen => Ok(Row {
                cols: vec![i],
                a: vec![T::one()],
                b: vec![T::one()],
                rhs: T::zero(),
            }),
            BoundaryRule::Prescribed => Ok(Row {
                cols: vec![i],
                a: vec![T::one()],
                b: vec![T::zero()],
                rhs: self.boundary.prescribed(&self.grid.point(&idx), tau_k + dt),
            }),
            BoundaryRule::Reduced => self.stencil_row(i, &idx, class, tau_k, dt).map_err(|e| Error::Stencil {
                node: idx.clone(),
                reason: e.to_string(),
            }),
        }
    }

    fn node_weights(&self, x: &[T], keep: &[usize], tau: T) -> Result<StencilWeights<T>> {
        let s = self.field.sample(x, tau)?;
        let s: CoefficientSample<T> = if keep.len() == self.grid.dim() { s } else { s.restrict(keep) };
        weights(self.scheme, &s, self.h)
    }

    fn stencil_row(&self, i: usize, idx: &[usize], class: &NodeClass, tau_k: T, dt: T) -> Result<Row<T>> {
        let n = self.grid.dim();
        let keep = class.free_axes(n);
        let x = self.grid.point(idx);
        let w0 = self.node_weights(&x, &keep, tau_k)?;
        let w1 = if self.field.is_time_dependent() && dt > T::zero() {
            self.node_weights(&x, &keep, tau_k + dt)?
        } else {
            w0.clone()
        };
        let half = dt / T::lit(2.0);
        let strides = self.grid.strides();
        let offsets = stencil_offsets(keep.len());
        let mut row = Row {
            cols: Vec::with_capacity(offsets.len()),
            a: Vec::with_capacity(offsets.len()),
            b: Vec::with_capacity(offsets.len()),
            rhs: half * (w0.g_tilde + w1.g_tilde),
        };
        for (p, off) in offsets.iter().enumerate() {
            let mut col = i as isize;
            for (&o, &axis) in off.iter().zip(&keep) {
                col += o as isize * strides[axis] as isize;
            }
            let m = (w0.m[p] + w1.m[p]) / T::lit(2.0);
            row.cols.push(col as usize);
            row.a.push(m + half * w1.k[p]);
            row.b.push(m - half * w0.k[p]);
        }
        Ok(row)
    }

    /// Number of steps reaching `tau_max`, which must be a whole multiple of
    /// the time step.
    pub fn step_count(&self, tau_max: T) -> Result<usize> {
        if !(tau_max >= T::zero()) {
            return Err(Error::InvalidArgument(format!("final time {tau_max} is negative")));
        }
        let steps = (tau_max / self.dt).round();
        if (steps * self.dt - tau_max).abs() > T::lit(1e-12) * tau_max {
            return Err(Error::InvalidArgument(format!(
                "final time {tau_max} is not a multiple of the time step {}",
                self.dt
            )));
        }
        steps
            .to_usize()
            .ok_or_else(|| Error::InvalidArgument("too many time steps".into()))
    }

    /// Advances the initial data to `tau_max`. The observer sees every level,
    /// starting with `(0, 0, U_0)`.
    pub fn run(
        &self,
        tau_max: T,
        cfg: &SolverConfig<T>,
        mut observer: Option<&mut dyn FnMut(usize, T, &[T])>,
    ) -> Result<Vec<T>> {
        let steps = self.step_count(tau_max)?;
        let mut u = self.initial.clone();
        if let Some(obs) = observer.as_mut() {
            obs(0, T::zero(), &u);
        }
        let reassemble = self.field.is_time_dependent() || self.boundary.is_time_dependent();
        let mut mats: Option<StepMatrices<T>> = None;
        for k in 0..steps {
            let tau_k = T::from_count(k) * self.dt;
            if reassemble || mats.is_none() {
                mats = Some(self.assemble_step(tau_k).map_err(|e| Error::Step {
                    step: k,
                    source: Box::new(e),
                })?);
            }
            u = step(mats.as_ref().unwrap(), &u, cfg).map_err(|e| Error::Step {
                step: k,
                source: Box::new(e),
            })?;
            if let Some(obs) = observer.as_mut() {
                obs(k + 1, T::from_count(k + 1) * self.dt, &u);
            }
        }
        Ok(u)
    }
}

/// Number of equal steps reaching `tau_max` with `Δτ` no larger than
/// `lambda h²`, and the resulting step.
pub fn steps_for_ratio<T: Real>(tau_max: T, h: T, lambda: T) -> Result<(usize, T)> {
    if !(tau_max > T::zero() && h > T::zero() && lambda > T::zero()) {
        return Err(Error::InvalidArgument("horizon, step and ratio must be positive".into()));
    }
    let n = (tau_max / (lambda * h * h) - T::lit(1e-9))
        .ceil()
        .max(T::one())
        .to_usize()
        .ok_or_else(|| Error::InvalidArgument("too many time steps".into()))?;
    Ok((n, tau_max / T::from_count(n)))
}

/// Solves `A U_{k+1} = B U_k + rhs_extra`, warm-started from `U_k`.
pub fn step<T: Real>(m: &StepMatrices<T>, u: &[T], cfg: &SolverConfig<T>) -> Result<Vec<T>> {
    let mut rhs = m.b.spmv(u)?;
    if m.rhs_extra.len() != rhs.len() {
        return Err(Error::DimensionMismatch {
            expected: rhs.len(),
            got: m.rhs_extra.len(),
        });
    }
    for (r, &e) in rhs.iter_mut().zip(&m.rhs_extra) {
        *r += e;
    }
    Ok(bicgstab(&m.a, &rhs, u, cfg)?.x)
}
