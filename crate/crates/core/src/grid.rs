//! Uniform tensor-product grids and compact-stencil neighbourhoods.
//!
//! Nodes are addressed either by a multi-index `(i_1, .., i_n)` with
//! `0 <= i_k <= N_k` or by a row-major linear offset with axis 0 varying
//! slowest.

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Which end of an axis a boundary node sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Min,
    Max,
}

/// Position of a node relative to the boundary of the box.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NodeClass {
    Interior,
    /// At least one axis free and at least one axis on a bound. `fixed` lists
    /// the bound axes in increasing order together with their side.
    Face { fixed: Vec<(usize, Side)> },
    /// Every axis on a bound; `sides[k]` is the side of axis `k`.
    Corner { sides: Vec<Side> },
}

impl NodeClass {
    pub fn is_interior(&self) -> bool {
        matches!(self, NodeClass::Interior)
    }

    /// Axes that are not pinned to a bound.
    pub fn free_axes(&self, dim: usize) -> Vec<usize> {
        match self {
            NodeClass::Interior => (0..dim).collect(),
            NodeClass::Face { fixed } => (0..dim)
                .filter(|k| !fixed.iter().any(|(f, _)| f == k))
                .collect(),
            NodeClass::Corner { .. } => Vec::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Grid<T> {
    lower: Vec<T>,
    upper: Vec<T>,
    cells: Vec<usize>,
    steps: Vec<T>,
    strides: Vec<usize>,
}

impl<T: Real> Grid<T> {
    /// Builds a grid with `cells[k]` cells (so `cells[k] + 1` nodes) on axis `k`.
    pub fn new(bounds: &[(T, T)], cells: &[usize]) -> Result<Self> {
        if bounds.is_empty() {
            return Err(Error::InvalidGrid("at least one axis required".into()));
        }
        if bounds.len() != cells.len() {
            return Err(Error::DimensionMismatch {
                expected: bounds.len(),
                got: cells.len(),
            });
        }
        for (k, (&(lo, hi), &n)) in bounds.iter().zip(cells).enumerate() {
            if n < 2 {
                return Err(Error::InvalidGrid(format!(
                    "axis {k}: need at least 2 cells, got {n}"
                )));
            }
            if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
                return Err(Error::InvalidGrid(format!(
                    "axis {k}: bounds ({lo}, {hi}) are not an increasing finite pair"
                )));
            }
        }
        let lower: Vec<T> = bounds.iter().map(|b| b.0).collect();
        let upper: Vec<T> = bounds.iter().map(|b| b.1).collect();
        let steps = bounds
            .iter()
            .zip(cells)
            .map(|(&(lo, hi), &n)| (hi - lo) / T::from_count(n))
            .collect();
        let mut strides = vec![1usize; cells.len()];
        for k in (0..cells.len().saturating_sub(1)).rev() {
            strides[k] = strides[k + 1] * (cells[k + 1] + 1);
        }
        Ok(Self {
            lower,
            upper,
            cells: cells.to_vec(),
            steps,
            strides,
        })
    }

    /// Same bounds and cell count on every axis.
    pub fn cube(dim: usize, lo: T, hi: T, cells: usize) -> Result<Self> {
        Self::new(&vec![(lo, hi); dim], &vec![cells; dim])
    }

    pub fn dim(&self) -> usize {
        self.cells.len()
    }

    pub fn cells(&self) -> &[usize] {
        &self.cells
    }

    /// Node counts per axis.
    pub fn shape(&self) -> Vec<usize> {
        self.cells.iter().map(|n| n + 1).collect()
    }

    pub fn steps(&self) -> &[T] {
        &self.steps
    }

    pub fn step(&self, axis: usize) -> T {
        self.steps[axis]
    }

    pub fn bounds(&self, axis: usize) -> (T, T) {
        (self.lower[axis], self.upper[axis])
    }

    pub fn strides(&self) -> &[usize] {
        &self.strides
    }

    pub fn node_count(&self) -> usize {
        self.cells.iter().map(|n| n + 1).product()
    }

    /// Coordinate of node `i` on `axis`. The end nodes return the bounds exactly.
    pub fn coordinate(&self, axis: usize, i: usize) -> T {
        if i == self.cells[axis] {
            self.upper[axis]
        } else {
            self.lower[axis] + T::from_count(i) * self.steps[axis]
        }
    }

    pub fn point(&self, idx: &[usize]) -> Vec<T> {
        idx.iter()
            .enumerate()
            .map(|(k, &i)| self.coordinate(k, i))
            .collect()
    }

    pub fn point_into(&self, idx: &[usize], out: &mut [T]) {
        for (k, &i) in idx.iter().enumerate() {
            out[k] = self.coordinate(k, i);
        }
    }

    fn check_index(&self, idx: &[usize]) -> Result<()> {
        if idx.len() != self.dim() || idx.iter().zip(&self.cells).any(|(&i, &n)| i > n) {
            return Err(Error::IndexOutOfRange {
                index: idx.to_vec(),
                shape: self.shape(),
            });
        }
        Ok(())
    }

    pub fn linear(&self, idx: &[usize]) -> Result<usize> {
        self.check_index(idx)?;
        Ok(self.linear_unchecked(idx))
    }

    #[inline]
    pub fn linear_unchecked(&self, idx: &[usize]) -> usize {
        idx.iter().zip(&self.strides).map(|(i, s)| i * s).sum()
    }

    pub fn multi_index(&self, linear: usize) -> Vec<usize> {
        let mut idx = vec![0; self.dim()];
        self.multi_index_into(linear, &mut idx);
        idx
    }

    #[inline]
    pub fn multi_index_into(&self, mut linear: usize, out: &mut [usize]) {
        for (k, s) in self.strides.iter().enumerate() {
            out[k] = linear / s;
            linear %= s;
        }
    }

    /// Step shared by all axes, if the relative spread of the steps is within `rel_tol`.
    pub fn uniform_step(&self, rel_tol: T) -> Option<T> {
        let h = self.steps[0];
        self.steps
            .iter()
            .all(|&s| (s - h).abs() <= rel_tol * h)
            .then_some(h)
    }

    pub fn is_uniform(&self, rel_tol: T) -> bool {
        self.uniform_step(rel_tol).is_some()
    }

    pub fn is_interior(&self, idx: &[usize]) -> bool {
        idx.iter().zip(&self.cells).all(|(&i, &n)| i > 0 && i < n)
    }

    /// The `3^n` neighbours of an interior node, offsets in lexicographic order.
    pub fn compact_stencil(&self, idx: &[usize]) -> Result<Vec<(Vec<i8>, usize)>> {
        self.check_index(idx)?;
        if !self.is_interior(idx) {
            return Err(Error::NotInterior {
                index: idx.to_vec(),
            });
        }
        let centre = self.linear_unchecked(idx) as isize;
        Ok(stencil_offsets(self.dim())
            .into_iter()
            .map(|off| {
                let shift: isize = off
                    .iter()
                    .zip(&self.strides)
                    .map(|(&o, &s)| o as isize * s as isize)
                    .sum();
                (off, (centre + shift) as usize)
            })
            .collect())
    }

    pub fn classify(&self, idx: &[usize]) -> Result<NodeClass> {
        self.check_index(idx)?;
        let fixed: Vec<(usize, Side)> = idx
            .iter()
            .zip(&self.cells)
            .enumerate()
            .filter_map(|(k, (&i, &n))| match i {
                0 => Some((k, Side::Min)),
                i if i == n => Some((k, Side::Max)),
                _ => None,
            })
            .collect();
        Ok(if fixed.is_empty() {
            NodeClass::Interior
        } else if fixed.len() == self.dim() {
            NodeClass::Corner {
                sides: fixed.into_iter().map(|(_, s)| s).collect(),
            }
        } else {
            NodeClass::Face { fixed }
        })
    }
}

/// All offsets in `{-1, 0, 1}^dim`, lexicographic (axis 0 slowest).
pub fn stencil_offsets(dim: usize) -> Vec<Vec<i8>> {
    (0..3usize.pow(dim as u32))
        .map(|mut code| {
            let mut off = vec![0i8; dim];
            for k in (0..dim).rev() {
                off[k] = (code % 3) as i8 - 1;
                code /= 3;
            }
            off
        })
        .collect()
}

/// Position of `offset` in the ordering of [`stencil_offsets`].
#[inline]
pub fn offset_position(offset: &[i8]) -> usize {
    offset
        .iter()
        .fold(0usize, |acc, &o| acc * 3 + (o + 1) as usize)
}
