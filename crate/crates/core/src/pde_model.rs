//! PDE data for
//!
//! ```text
//! u_τ + Σ a_i u_ii + Σ_{i<j} b_ij u_ij + Σ c_i u_i = g,   a_i < 0,
//! ```
//!
//! sampled together with the spatial partial derivatives that the compact
//! stencils consume, plus the feasibility check for the fourth-order scheme.
//!
//! Coefficient derivatives are carried by [`Jet`], a second-order forward
//! mode value in up to three variables. Closures written against jets get
//! exact first and second partials for free; [`finite_difference_derivative_check`]
//! guards hand-assembled jets.

use std::marker::PhantomData;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::grid::Grid;
use crate::scalar::Real;

/// Largest spatial dimension carried by a [`CoefficientSample`].
pub const MAX_DIM: usize = 3;

/// Position of the pair `(i, j)`, `i < j`, in the `b` array: (0,1), (0,2), (1,2).
#[inline]
pub fn pair_index(i: usize, j: usize) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    debug_assert!(i != j && j < MAX_DIM);
    i + j - 1
}

/// Value with gradient and Hessian with respect to `x_0, x_1, x_2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet<T> {
    pub v: T,
    pub d: [T; MAX_DIM],
    pub dd: [[T; MAX_DIM]; MAX_DIM],
}

impl<T: Real> Default for Jet<T> {
    fn default() -> Self {
        Self::constant(T::zero())
    }
}

impl<T: Real> Jet<T> {
    pub fn constant(v: T) -> Self {
        Self {
            v,
            d: [T::zero(); MAX_DIM],
            dd: [[T::zero(); MAX_DIM]; MAX_DIM],
        }
    }

    /// The coordinate function `x_axis` evaluated at `v`.
    pub fn variable(axis: usize, v: T) -> Self {
        let mut j = Self::constant(v);
        j.d[axis] = T::one();
        j
    }

    pub fn is_constant(&self) -> bool {
        self.d.iter().all(|x| x.is_zero()) && self.dd.iter().flatten().all(|x| x.is_zero())
    }

    pub fn is_finite(&self) -> bool {
        self.v.is_finite()
            && self.d.iter().all(|x| x.is_finite())
            && self.dd.iter().flatten().all(|x| x.is_finite())
    }

    /// `φ(self)` given `φ`, `φ'` and `φ''` at `self.v`.
    pub fn chain(&self, f0: T, f1: T, f2: T) -> Self {
        let mut out = Self::constant(f0);
        for k in 0..MAX_DIM {
            out.d[k] = f1 * self.d[k];
            for p in 0..MAX_DIM {
                out.dd[k][p] = f2 * self.d[k] * self.d[p] + f1 * self.dd[k][p];
            }
        }
        out
    }

    pub fn sin(&self) -> Self {
        let (s, c) = self.v.sin_cos();
        self.chain(s, c, -s)
    }

    pub fn cos(&self) -> Self {
        let (s, c) = self.v.sin_cos();
        self.chain(c, -s, -c)
    }

    pub fn exp(&self) -> Self {
        let e = self.v.exp();
        self.chain(e, e, e)
    }

    pub fn tanh(&self) -> Self {
        let t = self.v.tanh();
        let s = T::one() - t * t;
        self.chain(t, s, -(t + t) * s)
    }

    pub fn recip(&self) -> Self {
        let r = self.v.recip();
        self.chain(r, -r * r, (r + r) * r * r)
    }

    pub fn scale(&self, s: T) -> Self {
        self.chain(s * self.v, s, T::zero())
    }
}

impl<T: Real> Add for Jet<T> {
    type Output = Self;
    fn add(mut self, o: Self) -> Self {
        self += o;
        self
    }
}

impl<T: Real> AddAssign for Jet<T> {
    fn add_assign(&mut self, o: Self) {
        self.v += o.v;
        for k in 0..MAX_DIM {
            self.d[k] += o.d[k];
            for p in 0..MAX_DIM {
                self.dd[k][p] += o.dd[k][p];
            }
        }
    }
}

impl<T: Real> Neg for Jet<T> {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(-T::one())
    }
}

impl<T: Real> Sub for Jet<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<T: Real> Mul for Jet<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let mut out = Self::constant(self.v * o.v);
        for k in 0..MAX_DIM {
            out.d[k] = self.d[k] * o.v + self.v * o.d[k];
            for p in 0..MAX_DIM {
                out.dd[k][p] = self.dd[k][p] * o.v
                    + self.d[k] * o.d[p]
                    + self.d[p] * o.d[k]
                    + self.v * o.dd[k][p];
            }
        }
        out
    }
}

impl<T: Real> Div for Jet<T> {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        self * o.recip()
    }
}

impl<T: Real> Add<T> for Jet<T> {
    type Output = Self;
    fn add(mut self, s: T) -> Self {
        self.v += s;
        self
    }
}

impl<T: Real> Mul<T> for Jet<T> {
    type Output = Self;
    fn mul(self, s: T) -> Self {
        self.scale(s)
    }
}

/// Coefficients and source at one point `(x, τ)`.
///
/// `b[pair_index(i, j)]` holds `b_ij`. Entries beyond `dim` are zero.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientSample<T> {
    pub dim: usize,
    pub point: [T; MAX_DIM],
    pub tau: T,
    pub a: [Jet<T>; MAX_DIM],
    pub b: [Jet<T>; MAX_DIM],
    pub c: [Jet<T>; MAX_DIM],
    pub g: Jet<T>,
}

impl<T: Real> CoefficientSample<T> {
    /// All coefficients zero at `(x, τ)`.
    pub fn zeroed(x: &[T], tau: T) -> Self {
        assert!(!x.is_empty() && x.len() <= MAX_DIM, "dimension must be 1..=3");
        let mut point = [T::zero(); MAX_DIM];
        point[..x.len()].copy_from_slice(x);
        Self {
            dim: x.len(),
            point,
            tau,
            a: [Jet::default(); MAX_DIM],
            b: [Jet::default(); MAX_DIM],
            c: [Jet::default(); MAX_DIM],
            g: Jet::default(),
        }
    }

    /// Coordinate `x_k` as a jet, for building coefficients in closures.
    pub fn coord(&self, k: usize) -> Jet<T> {
        Jet::variable(k, self.point[k])
    }

    pub fn b_pair(&self, i: usize, j: usize) -> &Jet<T> {
        &self.b[pair_index(i, j)]
    }

    /// Checks `a_i < 0` and finiteness of every entry.
    pub fn validate(&self) -> Result<()> {
        for k in 0..self.dim {
            let a = self.a[k].v;
            if !(a < T::zero()) {
                return Err(Error::NotParabolic {
                    axis: k,
                    value: a.to_f64_lossy(),
                    point: self.point[..self.dim].iter().map(|x| x.to_f64_lossy()).collect(),
                });
            }
        }
        let all = self.a.iter().chain(&self.b).chain(&self.c).chain(std::iter::once(&self.g));
        if all.into_iter().any(|j| !j.is_finite()) {
            return Err(Error::NonFinite("coefficient sample"));
        }
        Ok(())
    }

    /// The equation restricted to the axes in `keep` (ascending): terms along
    /// dropped axes vanish and the kept axes are renumbered from zero.
    pub fn restrict(&self, keep: &[usize]) -> Self {
        let point: Vec<T> = keep.iter().map(|&k| self.point[k]).collect();
        let mut out = Self::zeroed(&point, self.tau);
        let project = |j: &Jet<T>| {
            let mut r = Jet::constant(j.v);
            for (kn, &ko) in keep.iter().enumerate() {
                r.d[kn] = j.d[ko];
                for (pn, &po) in keep.iter().enumerate() {
                    r.dd[kn][pn] = j.dd[ko][po];
                }
            }
            r
        };
        for (kn, &ko) in keep.iter().enumerate() {
            out.a[kn] = project(&self.a[ko]);
            out.c[kn] = project(&self.c[ko]);
            for (pn, &po) in keep.iter().enumerate().skip(kn + 1) {
                out.b[pair_index(kn, pn)] = project(self.b_pair(ko, po));
            }
        }
        out.g = project(&self.g);
        out
    }
}

/// A coefficient set `a_i, b_ij, c_i, g` over space and time.
pub trait CoefficientField<T: Real>: Send + Sync {
    fn dim(&self) -> usize;

    /// Raw evaluation without validation.
    fn eval(&self, x: &[T], tau: T) -> CoefficientSample<T>;

    /// Whether any coefficient or the source depends on `τ`.
    fn is_time_dependent(&self) -> bool {
        true
    }

    /// Evaluates and checks parabolicity.
    fn sample(&self, x: &[T], tau: T) -> Result<CoefficientSample<T>> {
        if x.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: x.len(),
            });
        }
        let s = self.eval(x, tau);
        s.validate()?;
        Ok(s)
    }
}

impl<T: Real, F: CoefficientField<T> + ?Sized> CoefficientField<T> for &F {
    fn dim(&self) -> usize {
        (**self).dim()
    }
    fn eval(&self, x: &[T], tau: T) -> CoefficientSample<T> {
        (**self).eval(x, tau)
    }
    fn is_time_dependent(&self) -> bool {
        (**self).is_time_dependent()
    }
}

/// Constant coefficients; every derivative vanishes.
#[derive(Debug, Clone, PartialEq)]
pub struct ConstantField<T> {
    pub a: Vec<T>,
    /// Upper-triangle pairs in the order (0,1), (0,2), (1,2), truncated to the dimension.
    pub b: Vec<T>,
    pub c: Vec<T>,
    pub g: T,
}

impl<T: Real> ConstantField<T> {
    pub fn new(a: Vec<T>, b: Vec<T>, c: Vec<T>, g: T) -> Result<Self> {
        let n = a.len();
        if n == 0 || n > MAX_DIM {
            return Err(Error::InvalidArgument(format!("dimension {n} not in 1..=3")));
        }
        if c.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: c.len(),
            });
        }
        if b.len() != n * (n - 1) / 2 {
            return Err(Error::DimensionMismatch {
                expected: n * (n - 1) / 2,
                got: b.len(),
            });
        }
        Ok(Self { a, b, c, g })
    }

    /// Equal diffusion `a` on every axis, no mixed or convection terms.
    pub fn isotropic(dim: usize, a: T) -> Self {
        Self {
            a: vec![a; dim],
            b: vec![T::zero(); dim * dim.saturating_sub(1) / 2],
            c: vec![T::zero(); dim],
            g: T::zero(),
        }
    }
}

impl<T: Real> CoefficientField<T> for ConstantField<T> {
    fn dim(&self) -> usize {
        self.a.len()
    }

    fn eval(&self, x: &[T], tau: T) -> CoefficientSample<T> {
        let mut s = CoefficientSample::zeroed(x, tau);
        for k in 0..self.a.len() {
            s.a[k] = Jet::constant(self.a[k]);
            s.c[k] = Jet::constant(self.c[k]);
        }
        for (p, &b) in self.b.iter().enumerate() {
            s.b[p] = Jet::constant(b);
        }
        s.g = Jet::constant(self.g);
        s
    }

    fn is_time_dependent(&self) -> bool {
        false
    }
}

/// Coefficients given by a closure that fills a zeroed sample, typically
/// from jet arithmetic on [`CoefficientSample::coord`].
pub struct JetField<T, F> {
    dim: usize,
    time_dependent: bool,
    f: F,
    _scalar: PhantomData<fn() -> T>,
}

impl<T, F> JetField<T, F>
where
    T: Real,
    F: Fn(&mut CoefficientSample<T>) + Send + Sync,
{
    pub fn new(dim: usize, time_dependent: bool, f: F) -> Self {
        assert!((1..=MAX_DIM).contains(&dim), "dimension must be 1..=3");
        Self {
            dim,
            time_dependent,
            f,
            _scalar: PhantomData,
        }
    }
}

impl<T, F> CoefficientField<T> for JetField<T, F>
where
    T: Real,
    F: Fn(&mut CoefficientSample<T>) + Send + Sync,
{
    fn dim(&self) -> usize {
        self.dim
    }

    fn eval(&self, x: &[T], tau: T) -> CoefficientSample<T> {
        let mut s = CoefficientSample::zeroed(x, tau);
        (self.f)(&mut s);
        s
    }

    fn is_time_dependent(&self) -> bool {
        self.time_dependent
    }
}

/// Principal part of the operator in any dimension; all the feasibility
/// check needs.
pub trait PrincipalPart<T: Real> {
    fn dim(&self) -> usize;
    fn a(&self, i: usize, x: &[T], tau: T) -> T;
    fn b(&self, i: usize, j: usize, x: &[T], tau: T) -> T;
}

/// Views a [`CoefficientField`] as its principal part.
pub struct FieldPrincipal<'a, F: ?Sized>(pub &'a F);

impl<T: Real, F: CoefficientField<T> + ?Sized> PrincipalPart<T> for FieldPrincipal<'_, F> {
    fn dim(&self) -> usize {
        self.0.dim()
    }
    fn a(&self, i: usize, x: &[T], tau: T) -> T {
        self.0.eval(x, tau).a[i].v
    }
    fn b(&self, i: usize, j: usize, x: &[T], tau: T) -> T {
        self.0.eval(x, tau).b_pair(i, j).v
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PairVerdict<T> {
    /// `b_ij` vanishes at every sample.
    MixedZero,
    /// `a_j / a_i` equals `(Δx_j / Δx_i)^2` at every sample.
    RatioMatched,
    /// Largest observed `|a_j/a_i - (Δx_j/Δx_i)^2|`.
    Violated(T),
}

#[derive(Debug, Clone, PartialEq)]
pub struct HocFeasibilityReport<T> {
    pub feasible: bool,
    /// One verdict per pair `(i, j)`, `i < j`, in lexicographic order.
    pub pairs: Vec<((usize, usize), PairVerdict<T>)>,
    /// Some pair carries a mixed term, so the diffusion ratio is constrained.
    pub equal_a_required: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HocTolerances<T> {
    pub mixed_zero: T,
    pub ratio: T,
}

impl<T: Real> Default for HocTolerances<T> {
    fn default() -> Self {
        Self {
            mixed_zero: T::lit(1e-12),
            ratio: T::lit(1e-10),
        }
    }
}

/// Checks, at every interior node and every `τ` in `taus`, that each pair
/// either has no mixed term or a diffusion ratio matching the squared step
/// ratio.
pub fn check_hoc_conditions<T: Real, P: PrincipalPart<T> + ?Sized>(
    pde: &P,
    grid: &Grid<T>,
    taus: &[T],
    tol: &HocTolerances<T>,
) -> Result<HocFeasibilityReport<T>> {
    let n = pde.dim();
    if n != grid.dim() {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: grid.dim(),
        });
    }
    let taus: &[T] = if taus.is_empty() { &[T::zero()] } else { taus };
    let mut max_b = vec![vec![T::zero(); n]; n];
    let mut max_dev = vec![vec![T::zero(); n]; n];
    let mut idx = vec![0usize; n];
    let mut x = vec![T::zero(); n];
    for l in 0..grid.node_count() {
        grid.multi_index_into(l, &mut idx);
        if !grid.is_interior(&idx) {
            continue;
        }
        grid.point_into(&idx, &mut x);
        for &tau in taus {
            let a: Vec<T> = (0..n).map(|i| pde.a(i, &x, tau)).collect();
            for i in 0..n {
                for j in i + 1..n {
                    let b = pde.b(i, j, &x, tau).abs();
                    let r = grid.step(j) / grid.step(i);
                    let dev = (a[j] / a[i] - r * r).abs();
                    max_b[i][j] = max_b[i][j].max(b);
                    // NaN deviations must register as violations.
                    max_dev[i][j] = if dev.is_nan() { dev } else { max_dev[i][j].max(dev) };
                }
            }
        }
    }
    let mut pairs = Vec::new();
    let mut equal_a_required = false;
    for i in 0..n {
        for j in i + 1..n {
            let verdict = if max_b[i][j] <= tol.mixed_zero {
                PairVerdict::MixedZero
            } else if max_dev[i][j] <= tol.ratio {
                equal_a_required = true;
                PairVerdict::RatioMatched
            } else {
                equal_a_required = true;
                PairVerdict::Violated(max_dev[i][j])
            };
            pairs.push(((i, j), verdict));
        }
    }
    let feasible = pairs
        .iter()
        .all(|(_, v)| !matches!(v, PairVerdict::Violated(_)));
    Ok(HocFeasibilityReport {
        feasible,
        pairs,
        equal_a_required,
    })
}

/// Largest relative discrepancy between the supplied first and second
/// partials of every coefficient and central differences of the values with
/// step `h_fd`. Discrepancies are measured relative to the finite difference,
/// floored at one so that vanishing derivatives are compared absolutely.
pub fn finite_difference_derivative_check<T: Real, F: CoefficientField<T> + ?Sized>(
    field: &F,
    x: &[T],
    tau: T,
    h_fd: T,
) -> T {
    let n = field.dim();
    let at = |shift: &[(usize, T)]| {
        let mut p = x.to_vec();
        for &(k, s) in shift {
            p[k] += s;
        }
        field.eval(&p, tau)
    };
    let centre = at(&[]);
    let jets = |s: &CoefficientSample<T>| -> Vec<Jet<T>> {
        let mut v = Vec::new();
        v.extend_from_slice(&s.a[..n]);
        v.extend_from_slice(&s.b[..n * (n - 1) / 2]);
        v.extend_from_slice(&s.c[..n]);
        v.push(s.g);
        v
    };
    let c0 = jets(&centre);
    let two = T::lit(2.0);
    let rel = |supplied: T, fd: T| (supplied - fd).abs() / fd.abs().max(T::one());
    let mut worst = T::zero();
    for k in 0..n {
        let plus = jets(&at(&[(k, h_fd)]));
        let minus = jets(&at(&[(k, -h_fd)]));
        for q in 0..c0.len() {
            let d1 = (plus[q].v - minus[q].v) / (two * h_fd);
            let d2 = (plus[q].v - two * c0[q].v + minus[q].v) / (h_fd * h_fd);
            worst = worst.max(rel(c0[q].d[k], d1)).max(rel(c0[q].dd[k][k], d2));
        }
        for p in k + 1..n {
            let pp = jets(&at(&[(k, h_fd), (p, h_fd)]));
            let pm = jets(&at(&[(k, h_fd), (p, -h_fd)]));
            let mp = jets(&at(&[(k, -h_fd), (p, h_fd)]));
            let mm = jets(&at(&[(k, -h_fd), (p, -h_fd)]));
            for q in 0..c0.len() {
                let dkp = (pp[q].v - pm[q].v - mp[q].v + mm[q].v) / (T::lit(4.0) * h_fd * h_fd);
                worst = worst
                    .max(rel(c0[q].dd[k][p], dkp))
                    .max(rel(c0[q].dd[p][k], dkp));
            }
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;

    fn jet_field_2d() -> impl CoefficientField<f64> {
        JetField::new(2, false, |s: &mut CoefficientSample<f64>| {
            let (x, y) = (s.coord(0), s.coord(1));
            let a = -((x * y).sin() * 0.2 + 1.0);
            s.a = [a, a, Jet::default()];
            s.b[0] = (x + y * 2.0).cos() * 0.3;
            s.c[0] = (x * 0.5).exp();
            s.c[1] = (y - x).tanh();
            s.g = x * x * y;
        })
    }

    #[test]
    fn jet_product_and_chain_rule() {
        let x = Jet::variable(0, 0.7);
        let y = Jet::variable(1, -0.4);
        let f = (x * y).sin();
        let (s, c) = (0.7f64 * -0.4).sin_cos();
        assert!((f.v - s).abs() < 1e-15);
        assert!((f.d[0] - c * -0.4).abs() < 1e-15);
        assert!((f.dd[0][1] - (c - s * 0.7 * -0.4)).abs() < 1e-15);
        assert!((f.dd[0][0] + s * 0.16).abs() < 1e-15);
        let q = x / y;
        assert!((q.dd[1][1] - 2.0 * 0.7 / (-0.4f64).powi(3)).abs() < 1e-12);
    }

    #[test]
    fn constant_field_sample() {
        let f = ConstantField::isotropic(2, -0.5);
        let s = f.sample(&[0.3, 0.1], 0.0).unwrap();
        assert_eq!(s.a[0].v, -0.5);
        assert!(s.a.iter().chain(&s.b).chain(&s.c).all(|j| j.is_constant()));
        assert_eq!(finite_difference_derivative_check(&f, &[0.3, 0.1], 0.0, 1e-3), 0.0);
    }

    #[test]
    fn positive_diffusion_rejected() {
        let f = ConstantField::new(vec![1.0, -1.0], vec![0.0], vec![0.0; 2], 0.0).unwrap();
        assert!(matches!(
            f.sample(&[0.0, 0.0], 0.0),
            Err(Error::NotParabolic { axis: 0, .. })
        ));
    }

    #[test]
    fn fd_check_accepts_exact_jets() {
        let f = jet_field_2d();
        let e = finite_difference_derivative_check(&f, &[0.3, -0.2], 0.0, 1e-4);
        assert!(e < 1e-6, "{e}");
    }

    #[test]
    fn fd_check_catches_planted_fault() {
        let f = JetField::new(2, false, |s: &mut CoefficientSample<f64>| {
            let x = s.coord(0);
            s.a = [Jet::constant(-1.0); 3];
            s.c[0] = (x * 0.5).exp() * 4.0;
            s.c[0].d[0] *= 1.1;
        });
        let e = finite_difference_derivative_check(&f, &[0.3, -0.2], 0.0, 1e-4);
        assert!((e - 0.1).abs() < 1e-3, "{e}");
    }

    #[test]
    fn restriction_drops_fixed_axes() {
        let f = jet_field_2d();
        let s = f.sample(&[0.3, -0.2], 0.0).unwrap();
        let r = s.restrict(&[1]);
        assert_eq!(r.dim, 1);
        assert_eq!(r.point[0], -0.2);
        assert_eq!(r.a[0].v, s.a[1].v);
        assert_eq!(r.a[0].d[0], s.a[1].d[1]);
        assert_eq!(r.c[0].dd[0][0], s.c[1].dd[1][1]);
        assert_eq!(r.b[0].v, 0.0);
    }

    #[test]
    fn feasibility_mixed_zero() {
        let f = ConstantField::new(vec![-1.0, -3.0], vec![0.0], vec![0.0; 2], 0.0).unwrap();
        let g = Grid::new(&[(0.0, 1.0), (0.0, 2.0)], &[10, 10]).unwrap();
        let r = check_hoc_conditions(&FieldPrincipal(&f), &g, &[0.0], &HocTolerances::default())
            .unwrap();
        assert!(r.feasible);
        assert_eq!(r.pairs, vec![((0, 1), PairVerdict::MixedZero)]);
        assert!(!r.equal_a_required);
    }

    #[test]
    fn feasibility_ratio() {
        let f = jet_field_2d();
        let g = Grid::cube(2, -1.0, 1.0, 8).unwrap();
        let r = check_hoc_conditions(&FieldPrincipal(&f), &g, &[0.0], &HocTolerances::default())
            .unwrap();
        assert!(r.feasible);
        assert_eq!(r.pairs[0].1, PairVerdict::RatioMatched);

        let bad = JetField::new(2, false, |s: &mut CoefficientSample<f64>| {
            let x = s.coord(0);
            s.a[0] = Jet::constant(-1.0);
            s.a[1] = -(x.exp());
            s.b[0] = Jet::constant(0.2);
        });
        let r = check_hoc_conditions(&FieldPrincipal(&bad), &g, &[0.0], &HocTolerances::default())
            .unwrap();
        assert!(!r.feasible);
        assert!(matches!(r.pairs[0].1, PairVerdict::Violated(d) if d > 0.1));
    }

    struct FourDim;
    impl PrincipalPart<f64> for FourDim {
        fn dim(&self) -> usize {
            4
        }
        fn a(&self, _: usize, _: &[f64], _: f64) -> f64 {
            -2.0
        }
        fn b(&self, i: usize, j: usize, _: &[f64], _: f64) -> f64 {
            if (i, j) == (0, 3) {
                0.5
            } else {
                0.0
            }
        }
    }

    #[test]
    fn feasibility_in_four_dimensions() {
        let g = Grid::cube(4, 0.0, 1.0, 3).unwrap();
        let r = check_hoc_conditions(&FourDim, &g, &[0.0], &HocTolerances::default()).unwrap();
        assert!(r.feasible);
        assert_eq!(r.pairs.len(), 6);
        assert_eq!(r.pairs[2], ((0, 3), PairVerdict::RatioMatched));
    }
}
