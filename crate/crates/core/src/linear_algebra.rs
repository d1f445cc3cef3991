//! Compressed sparse rows and a Jacobi-preconditioned BiCGStab.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Rows at or above this count are multiplied in parallel.
const PAR_ROWS: usize = 8192;

#[derive(Debug, Clone, PartialEq)]
pub struct CsrMatrix<T> {
    n_rows: usize,
    n_cols: usize,
    row_ptr: Vec<usize>,
    col_idx: Vec<usize>,
    values: Vec<T>,
}

impl<T: Real> CsrMatrix<T> {
    /// Sums duplicate entries and sorts every row by column.
    pub fn from_triplets(n_rows: usize, n_cols: usize, triplets: &[(usize, usize, T)]) -> Result<Self> {
        let mut rows: Vec<Vec<(usize, T)>> = vec![Vec::new(); n_rows];
        for &(r, c, v) in triplets {
            if r >= n_rows || c >= n_cols {
                return Err(Error::IndexOutOfRange {
                    index: vec![r, c],
                    shape: vec![n_rows, n_cols],
                });
            }
            rows[r].push((c, v));
        }
        Self::from_rows(n_cols, rows)
    }

    /// Builds from one entry list per row; duplicates are summed.
    pub fn from_rows(n_cols: usize, rows: Vec<Vec<(usize, T)>>) -> Result<Self> {
        let n_rows = rows.len();
        let mut row_ptr = Vec::with_capacity(n_rows + 1);
        let mut col_idx = Vec::with_capacity(rows.iter().map(Vec::len).sum());
        let mut values = Vec::with_capacity(col_idx.capacity());
        row_ptr.push(0);
        for (r, mut row) in rows.into_iter().enumerate() {
            row.sort_by_key(|e| e.0);
            let start = col_idx.len();
            for (c, v) in row {
                if c >= n_cols {
                    return Err(Error::IndexOutOfRange {
                        index: vec![r, c],
                        shape: vec![n_rows, n_cols],
                    });
                }
                if col_idx.len() > start && col_idx[col_idx.len() - 1] == c {
                    *values.last_mut().unwrap() += v;
                } else {
                    col_idx.push(c);
                    values.push(v);
                }
            }
            row_ptr.push(col_idx.len());
        }
        Ok(Self {
            n_rows,
            n_cols,
            row_ptr,
            col_idx,
            values,
        })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            n_rows: n,
            n_cols: n,
            row_ptr: (0..=n).collect(),
            col_idx: (0..n).collect(),
            values: vec![T::one(); n],
        }
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn nnz(&self) -> usize {
        self.values.len()
    }

    pub fn row_ptr(&self) -> &[usize] {
        &self.row_ptr
    }

    pub fn col_idx(&self) -> &[usize] {
        &self.col_idx
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    /// Column indices and values of one row.
    pub fn row(&self, r: usize) -> (&[usize], &[T]) {
        let span = self.row_ptr[r]..self.row_ptr[r + 1];
        (&self.col_idx[span.clone()], &self.values[span])
    }

    pub fn get(&self, r: usize, c: usize) -> T {
        let (cols, vals) = self.row(r);
        cols.binary_search(&c).map_or(T::zero(), |p| vals[p])
    }

    pub fn diagonal(&self) -> Vec<T> {
        (0..self.n_rows.min(self.n_cols)).map(|r| self.get(r, r)).collect()
    }

    pub fn spmv(&self, x: &[T]) -> Result<Vec<T>> {
        let mut y = vec![T::zero(); self.n_rows];
        self.spmv_into(x, &mut y)?;
        Ok(y)
    }

    pub fn spmv_into(&self, x: &[T], y: &mut [T]) -> Result<()> {
        if x.len() != self.n_cols {
            return Err(Error::DimensionMismatch {
                expected: self.n_cols,
                got: x.len(),
            });
        }
        if y.len() != self.n_rows {
            return Err(Error::DimensionMismatch {
                expected: self.n_rows,
                got: y.len(),
            });
        }
        let row = |(r, yr): (usize, &mut T)| {
            let (cols, vals) = self.row(r);
            *yr = cols.iter().zip(vals).map(|(&c, &v)| v * x[c]).sum();
        };
        if self.n_rows >= PAR_ROWS {
            y.par_iter_mut().enumerate().for_each(row);
        } else {
            y.iter_mut().enumerate().for_each(row);
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Preconditioner {
    None,
    Jacobi,
}

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
#[serde(default)]
pub struct SolverConfig<T: Real> {
    pub rel_tol: T,
    /// `None` means ten times the number of rows.
    pub max_iter: Option<usize>,
    pub preconditioner: Preconditioner,
}

impl<T: Real> Default for SolverConfig<T> {
    fn default() -> Self {
        Self {
            rel_tol: T::lit(1e-10),
            max_iter: None,
            preconditioner: Preconditioner::Jacobi,
        }
    }
}

impl<T: Real> SolverConfig<T> {
    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > T::zero()) {
            return Err(Error::InvalidArgument(format!("rel_tol = {} must be positive", self.rel_tol)));
        }
        if self.max_iter == Some(0) {
            return Err(Error::InvalidArgument("max_iter must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Solution<T> {
    pub x: Vec<T>,
    pub iterations: usize,
    /// `‖b − A x‖₂ / ‖b‖₂`, recomputed from the returned `x`.
    pub residual: T,
}

fn dot<T: Real>(x: &[T], y: &[T]) -> T {
    x.iter().zip(y).map(|(&a, &b)| a * b).sum()
}

fn norm<T: Real>(x: &[T]) -> T {
    dot(x, x).sqrt()
}

fn residual<T: Real>(a: &CsrMatrix<T>, b: &[T], x: &[T], r: &mut [T]) -> Result<()> {
    a.spmv_into(x, r)?;
    for (ri, &bi) in r.iter_mut().zip(b) {
        *ri = bi - *ri;
    }
    Ok(())
}

enum Outcome {
    Converged,
    Breakdown,
    Exhausted,
}

/// Solves `A x = b` from `x0`.
///
/// Stops once `‖b − A x‖₂ ≤ rel_tol·‖b‖₂` holds for the true residual. A
/// breakdown restarts once from the current iterate.
pub fn bicgstab<T: Real>(a: &CsrMatrix<T>, b: &[T], x0: &[T], cfg: &SolverConfig<T>) -> Result<Solution<T>> {
    cfg.validate()?;
    let n = a.n_rows();
    if a.n_cols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: a.n_cols(),
        });
    }
    for v in [b, x0] {
        if v.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: v.len() });
        }
    }
    if b.iter().chain(x0).any(|v| !v.is_finite()) {
        return Err(Error::NonFinite("solver input"));
    }
    let max_iter = cfg.max_iter.unwrap_or(10 * n.max(1));
    let bnorm = norm(b);
    if bnorm == T::zero() {
        return Ok(Solution {
            x: vec![T::zero(); n],
            iterations: 0,
            residual: T::zero(),
        });
    }
    let target = cfg.rel_tol * bnorm;
    let inv_diag: Vec<T> = match cfg.preconditioner {
        Preconditioner::None => vec![T::one(); n],
        Preconditioner::Jacobi => a
            .diagonal()
            .into_iter()
            .map(|d| if d == T::zero() { T::one() } else { d.recip() })
            .collect(),
    };

    let mut x = x0.to_vec();
    let mut r = vec![T::zero(); n];
    let mut work = Work::new(n);
    let mut iterations = 0;
    let mut restarts = 0;
    loop {
        residual(a, b, &x, &mut r)?;
        let rn = norm(&r);
        if !rn.is_finite() {
            return Err(Error::NonFinite("solver residual"));
        }
        if rn <= target {
            return Ok(Solution {
                x,
                iterations,
                residual: rn / bnorm,
            });
        }
        if iterations >= max_iter {
            return Err(Error::MaxIterations {
                iterations,
                residual: (rn / bnorm).to_f64_lossy(),
            });
        }
        match sweep(a, &inv_diag, &mut x, &mut r, &mut work, target, max_iter, &mut iterations)? {
            // Converged on the recursive residual; the loop re-checks the true one.
            Outcome::Converged | Outcome::Exhausted => {}
            Outcome::Breakdown => {
                if restarts == 1 {
                    return Err(Error::Breakdown { iterations });
                }
                restarts += 1;
            }
        }
    }
}

struct Work<T> {
    r_hat: Vec<T>,
    p: Vec<T>,
    v: Vec<T>,
    y: Vec<T>,
    s: Vec<T>,
    z: Vec<T>,
    t: Vec<T>,
}

impl<T: Real> Work<T> {
    fn new(n: usize) -> Self {
        let z = vec![T::zero(); n];
        Self {
            r_hat: z.clone(),
            p: z.clone(),
            v: z.clone(),
            y: z.clone(),
            s: z.clone(),
            z: z.clone(),
            t: z,
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn sweep<T: Real>(
    a: &CsrMatrix<T>,
    inv_diag: &[T],
    x: &mut [T],
    r: &mut [T],
    w: &mut Work<T>,
    target: T,
    max_iter: usize,
    iterations: &mut usize,
) -> Result<Outcome> {
    let tiny = T::epsilon() * T::epsilon();
    w.r_hat.copy_from_slice(r);
    w.p.iter_mut().for_each(|e| *e = T::zero());
    w.v.iter_mut().for_each(|e| *e = T::zero());
    let (mut rho, mut alpha, mut omega) = (T::one(), T::one(), T::one());
    while *iterations < max_iter {
        *iterations += 1;
        let rho_new = dot(&w.r_hat, r);
        if rho_new.abs() <= tiny * norm(&w.r_hat) * norm(r) {
            return Ok(Outcome::Breakdown);
        }
        let beta = (rho_new / rho) * (alpha / omega);
        rho = rho_new;
        for i in 0..r.len() {
            w.p[i] = r[i] + beta * (w.p[i] - omega * w.v[i]);
            w.y[i] = inv_diag[i] * w.p[i];
        }
        a.spmv_into(&w.y, &mut w.v)?;
        let rv = dot(&w.r_hat, &w.v);
        if rv == T::zero() || !rv.is_finite() {
            return Ok(Outcome::Breakdown);
        }
        alpha = rho / rv;
        for i in 0..r.len() {
            w.s[i] = r[i] - alpha * w.v[i];
        }
        if norm(&w.s) <= target {
            for i in 0..x.len() {
                x[i] += alpha * w.y[i];
            }
            return Ok(Outcome::Converged);
        }
        for i in 0..r.len() {
            w.z[i] = inv_diag[i] * w.s[i];
        }
        a.spmv_into(&w.z, &mut w.t)?;
        let tt = dot(&w.t, &w.t);
        if tt == T::zero() {
            return Ok(Outcome::Breakdown);
        }
        omega = dot(&w.t, &w.s) / tt;
        for i in 0..x.len() {
            x[i] += alpha * w.y[i] + omega * w.z[i];
            r[i] = w.s[i] - omega * w.t[i];
        }
        let rn = norm(r);
        if !rn.is_finite() {
            return Err(Error::NonFinite("solver iterate"));
        }
        if rn <= target {
            return Ok(Outcome::Converged);
        }
        if omega == T::zero() {
            return Ok(Outcome::Breakdown);
        }
    }
    Ok(Outcome::Exhausted)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triplets() {
        let i = CsrMatrix::from_triplets(2, 2, &[(0, 0, 1.0), (1, 1, 1.0)]).unwrap();
        assert_eq!(i, CsrMatrix::identity(2));
        let m = CsrMatrix::from_triplets(1, 1, &[(0, 0, 1.0), (0, 0, 2.0)]).unwrap();
        assert_eq!(m.nnz(), 1);
        assert_eq!(m.get(0, 0), 3.0);
        assert!(CsrMatrix::from_triplets(2, 2, &[(0, 5, 1.0)]).is_err());
    }

    #[test]
    fn identity_products() {
        let x = [1.0, -2.0, 3.5];
        assert_eq!(CsrMatrix::identity(3).spmv(&x).unwrap(), x.to_vec());
        let z = CsrMatrix::<f64>::from_triplets(3, 3, &[]).unwrap();
        assert_eq!(z.spmv(&x).unwrap(), vec![0.0; 3]);
        assert!(z.spmv(&[1.0]).is_err());
    }

    #[test]
    fn identity_solve() {
        let b = [1.0, 2.0, -3.0];
        let s = bicgstab(&CsrMatrix::identity(3), &b, &[0.0; 3], &SolverConfig::default()).unwrap();
        assert!(s.iterations <= 1);
        assert_eq!(s.x, b.to_vec());
    }

    #[test]
    fn singular_fails() {
        let z = CsrMatrix::<f64>::from_triplets(3, 3, &[]).unwrap();
        let e = bicgstab(&z, &[1.0; 3], &[0.0; 3], &SolverConfig::default()).unwrap_err();
        assert!(matches!(e, Error::Breakdown { .. } | Error::MaxIterations { .. }));
    }

    #[test]
    fn rejects_bad_config() {
        let cfg = SolverConfig {
            rel_tol: 0.0,
            ..SolverConfig::default()
        };
        assert!(bicgstab(&CsrMatrix::identity(1), &[1.0], &[0.0], &cfg).is_err());
        let nan = bicgstab(&CsrMatrix::identity(1), &[f64::NAN], &[0.0], &SolverConfig::default());
        assert_eq!(nan.unwrap_err(), Error::NonFinite("solver input"));
    }
}
