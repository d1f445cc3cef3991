//! Kreiss-Thomée-Widlund smoothing of initial data with kinks.
//!
//! The kernel has Fourier transform
//! `Φ̂₄(ω) = (sin(ω/2)/(ω/2))⁴ (1 + 2/3 sin²(ω/2))`. Writing
//! `sin²(ω/2) = (2 − e^{iω} − e^{−iω})/4` turns the bracket into
//! `4/3 − (e^{iω} + e^{−iω})/6`, and the first factor is the transform of the
//! centred cubic B-spline, so
//! `Φ₄(x) = 4/3 B₄(x) − (B₄(x − 1) + B₄(x + 1))/6`.

use std::collections::BTreeSet;
use std::num::NonZeroUsize;

use gauss_quad::GaussLegendre;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::grid::Grid;
use crate::scalar::Real;

/// Support radius of `Φ₄` in units of the step.
pub const SUPPORT: usize = 3;

/// Centred cubic B-spline, supported on `[-2, 2]`.
pub fn b4<T: Real>(x: T) -> T {
    let x = x.abs();
    let two = T::lit(2.0);
    if x >= two {
        T::zero()
    } else if x >= T::one() {
        (two - x).powi(3) / T::lit(6.0)
    } else {
        T::lit(2.0 / 3.0) - x * x + x * x * x / two
    }
}

pub fn phi4<T: Real>(x: T) -> T {
    T::lit(4.0 / 3.0) * b4(x) - (b4(x - T::one()) + b4(x + T::one())) / T::lit(6.0)
}

pub fn phi4_hat<T: Real>(omega: T) -> T {
    let half = omega / T::lit(2.0);
    let sinc = if half == T::zero() { T::one() } else { half.sin() / half };
    sinc.powi(4) * (T::one() + T::lit(2.0 / 3.0) * half.sin().powi(2))
}

/// Tensor Gauss-Legendre rule over the kernel support, one panel per unit
/// cell, with the kernel folded into the weights.
#[derive(Debug, Clone)]
pub struct Smoother<T> {
    nodes: Vec<T>,
    weights: Vec<T>,
}

impl<T: Real> Smoother<T> {
    pub fn new(order: usize) -> Result<Self> {
        let order = NonZeroUsize::new(order).ok_or_else(|| Error::InvalidArgument("quadrature order must be positive".into()))?;
        let rule = GaussLegendre::new(order);
        let mut nodes = Vec::new();
        let mut weights = Vec::new();
        for cell in -(SUPPORT as i32)..SUPPORT as i32 {
            for &(x, w) in rule.as_node_weight_pairs() {
                let s = cell as f64 + 0.5 * (x + 1.0);
                let s = T::lit(s);
                nodes.push(s);
                weights.push(T::lit(0.5 * w) * phi4(s));
            }
        }
        Ok(Self { nodes, weights })
    }

    /// `ũ₀(x) = ∫ Π_k Φ₄(s_k) u₀(x − h s) ds`.
    pub fn smooth_at<F: Fn(&[T]) -> T + ?Sized>(&self, u0: &F, x: &[T], h: T) -> T {
        let axes: Vec<usize> = (0..x.len()).collect();
        self.smooth_along(u0, x, h, &axes)
    }

    /// Smooths along `axes` only, leaving the other coordinates fixed.
    pub fn smooth_along<F: Fn(&[T]) -> T + ?Sized>(&self, u0: &F, x: &[T], h: T, axes: &[usize]) -> T {
        let q = self.nodes.len();
        let mut idx = vec![0usize; axes.len()];
        let mut y = x.to_vec();
        let mut acc = T::zero();
        loop {
            let mut w = T::one();
            for (j, &k) in axes.iter().enumerate() {
                w *= self.weights[idx[j]];
                y[k] = x[k] - h * self.nodes[idx[j]];
            }
            acc += w * u0(&y);
            let mut j = axes.len();
            loop {
                if j == 0 {
                    return acc;
                }
                j -= 1;
                idx[j] += 1;
                if idx[j] < q {
                    break;
                }
                idx[j] = 0;
            }
        }
    }
}

/// Replaces `values` at the nodes in `points` by smoothed data; other nodes
/// are left alone. Boundary nodes are smoothed along their free axes only,
/// since the reduced equations solved there never diffuse across the face;
/// corners keep their data.
pub fn smooth_initial<T, F>(u0: &F, grid: &Grid<T>, values: &mut [T], points: &[usize], order: usize) -> Result<()>
where
    T: Real,
    F: Fn(&[T]) -> T + Sync + ?Sized,
{
    let h = grid
        .uniform_step(T::lit(1e-12))
        .ok_or_else(|| Error::InvalidGrid("smoothing needs equal steps on every axis".into()))?;
    if values.len() != grid.node_count() {
        return Err(Error::DimensionMismatch {
            expected: grid.node_count(),
            got: values.len(),
        });
    }
    if let Some(&p) = points.iter().find(|&&p| p >= values.len()) {
        return Err(Error::IndexOutOfRange {
            index: vec![p],
            shape: vec![values.len()],
        });
    }
    let sm = Smoother::new(order)?;
    let smoothed: Vec<T> = points
        .par_iter()
        .map(|&p| {
            let idx = grid.multi_index(p);
            let axes = grid.classify(&idx)?.free_axes(grid.dim());
            Ok(sm.smooth_along(u0, &grid.point(&idx), h, &axes))
        })
        .collect::<Result<_>>()?;
    for (&p, v) in points.iter().zip(smoothed) {
        values[p] = v;
    }
    Ok(())
}

/// Nodes within Chebyshev distance [`SUPPORT`] of a flagged cell, sorted.
///
/// The predicate receives the lowest corner of a cell of side `h`. Cells up
/// to [`SUPPORT`] steps outside the box are offered too, since a kink there
/// still reaches nodes on the boundary.
pub fn detect_smoothing_points<T: Real, P: Fn(&[T]) -> bool>(grid: &Grid<T>, flagged: P) -> Vec<usize> {
    let n = grid.dim();
    let cells = grid.cells();
    let r = SUPPORT as i64;
    let span: Vec<i64> = cells.iter().map(|&c| c as i64 + 2 * r).collect();
    let total: i64 = span.iter().product();
    let mut out = BTreeSet::new();
    let mut cell = vec![0i64; n];
    let mut corner = vec![T::zero(); n];
    for mut lin in 0..total {
        for k in (0..n).rev() {
            cell[k] = lin % span[k] - r;
            lin /= span[k];
        }
        for k in 0..n {
            corner[k] = grid.bounds(k).0 + T::from_i64(cell[k]).unwrap() * grid.step(k);
        }
        if !flagged(&corner) {
            continue;
        }
        let lo: Vec<usize> = cell.iter().map(|&c| (c - r).max(0) as usize).collect();
        let hi: Vec<i64> = (0..n).map(|k| (cell[k] + 1 + r).min(cells[k] as i64)).collect();
        if (0..n).any(|k| hi[k] < lo[k] as i64) {
            continue;
        }
        let mut node = lo.clone();
        'block: loop {
            out.insert(grid.linear_unchecked(&node));
            let mut k = n;
            loop {
                if k == 0 {
                    break 'block;
                }
                k -= 1;
                node[k] += 1;
                if node[k] as i64 <= hi[k] {
                    break;
                }
                node[k] = lo[k];
            }
        }
    }
    out.into_iter().collect()
}
