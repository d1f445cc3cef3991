//! Compact stencil weights at one interior node.
//!
//! The semi-discrete scheme at a node reads
//!
//! ```text
//! Σ_o M_o ∂τU(x + o h) + Σ_o K_o U(x + o h) = g̃(x),   o ∈ {-1, 0, 1}^n,
//! ```
//!
//! with fourth-order consistency for the compact scheme when all `a_i`
//! coincide and every axis has the same step `h`. The two- and three-
//! dimensional K entries live in [`k2`] and [`k3`]; the one-dimensional
//! scheme serves the edges of the box.

mod k2;
mod k3;

use crate::error::{Error, Result};
use crate::grid::{offset_position, stencil_offsets};
use crate::pde_model::CoefficientSample;
use crate::scalar::Real;

/// Which discretisation to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Scheme {
    /// Fourth-order compact scheme.
    Hoc,
    /// Plain second-order central differences.
    Baseline,
}

/// K and M weights over the `3^dim` offsets, in the order of
/// [`stencil_offsets`], plus the right-hand side value.
#[derive(Debug, Clone, PartialEq)]
pub struct StencilWeights<T> {
    pub dim: usize,
    pub k: Vec<T>,
    pub m: Vec<T>,
    pub g_tilde: T,
}

impl<T: Real> StencilWeights<T> {
    fn zeros(dim: usize) -> Self {
        let len = 3usize.pow(dim as u32);
        Self {
            dim,
            k: vec![T::zero(); len],
            m: vec![T::zero(); len],
            g_tilde: T::zero(),
        }
    }

    pub fn k_at(&self, offset: &[i8]) -> T {
        self.k[offset_position(offset)]
    }

    pub fn m_at(&self, offset: &[i8]) -> T {
        self.m[offset_position(offset)]
    }

    /// `(offset, K, M)` triples in lexicographic offset order.
    pub fn iter(&self) -> impl Iterator<Item = (Vec<i8>, T, T)> + '_ {
        stencil_offsets(self.dim)
            .into_iter()
            .enumerate()
            .map(|(p, o)| (o, self.k[p], self.m[p]))
    }

    fn set(&mut self, offset: &[i8], k: T, m: T) {
        let p = offset_position(offset);
        self.k[p] = k;
        self.m[p] = m;
    }
}

macro_rules! locals {
    ($($jet:ident[$idx:expr] => $v:ident $d1:ident $d2:ident $d3:ident
        $d11:ident $d12:ident $d13:ident $d22:ident $d23:ident $d33:ident;)*) => {
        /// Coefficient values and partials at the node, named as in the
        /// weight formulas: `a_12` is the mixed x1-x2 derivative of `a`.
        #[derive(Debug, Clone, Copy)]
        pub(crate) struct Local<T> {
            pub h: T,
            $(pub $v: T, pub $d1: T, pub $d2: T, pub $d3: T,
              pub $d11: T, pub $d12: T, pub $d13: T, pub $d22: T, pub $d23: T, pub $d33: T,)*
        }

        impl<T: Real> Local<T> {
            fn new(s: &CoefficientSample<T>, h: T) -> Self {
                Self {
                    h,
                    $($v: s.$jet[$idx].v,
                      $d1: s.$jet[$idx].d[0],
                      $d2: s.$jet[$idx].d[1],
                      $d3: s.$jet[$idx].d[2],
                      $d11: s.$jet[$idx].dd[0][0],
                      $d12: s.$jet[$idx].dd[0][1],
                      $d13: s.$jet[$idx].dd[0][2],
                      $d22: s.$jet[$idx].dd[1][1],
                      $d23: s.$jet[$idx].dd[1][2],
                      $d33: s.$jet[$idx].dd[2][2],)*
                }
            }
        }
    };
}

locals! {
    a[0] => a a_1 a_2 a_3 a_11 a_12 a_13 a_22 a_23 a_33;
    b[0] => b12 b12_1 b12_2 b12_3 b12_11 b12_12 b12_13 b12_22 b12_23 b12_33;
    b[1] => b13 b13_1 b13_2 b13_3 b13_11 b13_12 b13_13 b13_22 b13_23 b13_33;
    b[2] => b23 b23_1 b23_2 b23_3 b23_11 b23_12 b23_13 b23_22 b23_23 b23_33;
    c[0] => c1 c1_1 c1_2 c1_3 c1_11 c1_12 c1_13 c1_22 c1_23 c1_33;
    c[1] => c2 c2_1 c2_2 c2_3 c2_11 c2_12 c2_13 c2_22 c2_23 c2_33;
    c[2] => c3 c3_1 c3_2 c3_3 c3_11 c3_12 c3_13 c3_22 c3_23 c3_33;
}

fn check_step<T: Real>(h: T) -> Result<()> {
    if h > T::zero() && h.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("step h = {h} must be positive")))
    }
}

/// Validates the sample and returns `a` after checking that every axis
/// shares it.
fn common_a<T: Real>(s: &CoefficientSample<T>, dim: usize, h: T) -> Result<T> {
    if s.dim != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            got: s.dim,
        });
    }
    check_step(h)?;
    s.validate()?;
    let a = s.a[0].v;
    for k in 1..dim {
        if (s.a[k].v - a).abs() > T::lit(1e-10) * a.abs() {
            return Err(Error::InvalidArgument(format!(
                "compact scheme needs equal diffusion on every axis, got a_1 = {a}, a_{} = {}",
                k + 1,
                s.a[k].v
            )));
        }
    }
    Ok(a)
}

/// Placeholder in a group offset for the `±` position.
const S: i8 = 2;

fn expand<T: Real, const N: usize>(
    w: &mut StencilWeights<T>,
    l: &Local<T>,
    groups: &[(fn(&Local<T>, T) -> T, [i8; N])],
) {
    for (f, pattern) in groups {
        let signs: &[i8] = if pattern.contains(&S) { &[1, -1] } else { &[1] };
        for &sg in signs {
            let off: Vec<i8> = pattern.iter().map(|&o| if o == S { sg } else { o }).collect();
            let p = offset_position(&off);
            w.k[p] = f(l, T::from_i8(sg).unwrap());
        }
    }
}

/// Compact weights in one dimension, used on the edges of the box.
pub fn hoc_weights_1d<T: Real>(s: &CoefficientSample<T>, h: T) -> Result<StencilWeights<T>> {
    let a = common_a(s, 1, h)?;
    let l = Local::new(s, h);
    let (a_1, a_11, c1, c1_1, c1_11) = (l.a_1, l.a_11, l.c1, l.c1_1, l.c1_11);
    let h2 = h * h;
    let mut w = StencilWeights::zeros(1);
    let centre = T::lit(-2.0) * a / h2 - a_11 / T::lit(6.0) - c1_1 / T::lit(3.0)
        + a_1 * a_1 / (T::lit(3.0) * a)
        + a_1 * c1 / (T::lit(6.0) * a)
        - c1 * c1 / (T::lit(6.0) * a);
    w.set(&[0], centre, T::lit(5.0 / 6.0));
    for sg in [1i8, -1] {
        let s = T::from_i8(sg).unwrap();
        let k = a / h2 + a_11 / T::lit(12.0) + s * c1 / (T::lit(2.0) * h) + c1_1 / T::lit(6.0)
            + s * c1_11 * h / T::lit(24.0)
            - a_1 * a_1 / (T::lit(6.0) * a)
            - a_1 * c1 / (T::lit(12.0) * a)
            - s * a_1 * c1_1 * h / (T::lit(12.0) * a)
            + c1 * c1 / (T::lit(12.0) * a)
            + s * c1 * c1_1 * h / (T::lit(24.0) * a);
        let m = T::lit(1.0 / 12.0) - s * a_1 * h / (T::lit(12.0) * a) + s * c1 * h / (T::lit(24.0) * a);
        w.set(&[sg], k, m);
    }
    let g = &s.g;
    w.g_tilde = g.v + h2 * g.dd[0][0] / T::lit(12.0) - a_1 * h2 * g.d[0] / (T::lit(6.0) * a)
        + c1 * h2 * g.d[0] / (T::lit(12.0) * a);
    Ok(w)
}

/// Compact 9-point weights.
pub fn hoc_weights_2d<T: Real>(s: &CoefficientSample<T>, h: T) -> Result<StencilWeights<T>> {
    common_a(s, 2, h)?;
    let l = Local::new(s, h);
    let mut w = StencilWeights::zeros(2);
    let groups: [(fn(&Local<T>, T) -> T, [i8; 2]); 5] = [
        (k2::k_z_z, [0, 0]),
        (k2::k_pm_z, [S, 0]),
        (k2::k_z_pm, [0, S]),
        (k2::k_pm_m, [S, -1]),
        (k2::k_pm_p, [S, 1]),
    ];
    expand(&mut w, &l, &groups);

    let Local { a, a_1, a_2, b12, c1, c2, .. } = l;
    let a2 = a * a;
    w.m[offset_position(&[0, 0])] = T::lit(2.0 / 3.0);
    for sg in [1i8, -1] {
        let s = T::from_i8(sg).unwrap();
        w.m[offset_position(&[1, sg])] = s * b12 / (T::lit(48.0) * a);
        w.m[offset_position(&[-1, -sg])] = s * b12 / (T::lit(48.0) * a);
        w.m[offset_position(&[0, sg])] = T::lit(1.0 / 12.0) - s * h * a_2 / (T::lit(12.0) * a)
            - s * b12 * h * a_1 / (T::lit(24.0) * a2)
            + s * c2 * h / (T::lit(24.0) * a);
        w.m[offset_position(&[sg, 0])] = T::lit(1.0 / 12.0)
            - s * b12 * h * a_2 / (T::lit(24.0) * a2)
            + s * h * c1 / (T::lit(24.0) * a)
            - s * h * a_1 / (T::lit(12.0) * a);
    }

    let g = &s.g;
    let h2 = h * h;
    w.g_tilde = (h2 * a2 * c1 - T::lit(2.0) * h2 * a2 * a_1 - b12 * h2 * a_2 * a) * g.d[0]
        / (T::lit(12.0) * a2 * a)
        + h2 * g.dd[0][0] / T::lit(12.0)
        + b12 * h2 * g.dd[0][1] / (T::lit(12.0) * a)
        + (h2 * a2 * c2 - b12 * h2 * a_1 * a - T::lit(2.0) * h2 * a2 * a_2) * g.d[1]
            / (T::lit(12.0) * a2 * a)
        + h2 * g.dd[1][1] / T::lit(12.0)
        + g.v;
    Ok(w)
}

/// Compact 27-point weights.
pub fn hoc_weights_3d<T: Real>(s: &CoefficientSample<T>, h: T) -> Result<StencilWeights<T>> {
    common_a(s, 3, h)?;
    let l = Local::new(s, h);
    let mut w = StencilWeights::zeros(3);
    let groups: [(fn(&Local<T>, T) -> T, [i8; 3]); 14] = [
        (k3::k_z_z_z, [0, 0, 0]),
        (k3::k_pm_m_z, [S, -1, 0]),
        (k3::k_pm_z_z, [S, 0, 0]),
        (k3::k_z_pm_z, [0, S, 0]),
        (k3::k_pm_p_z, [S, 1, 0]),
        (k3::k_pm_m_m, [S, -1, -1]),
        (k3::k_pm_p_p, [S, 1, 1]),
        (k3::k_pm_z_m, [S, 0, -1]),
        (k3::k_z_pm_m, [0, S, -1]),
        (k3::k_pm_p_m, [S, 1, -1]),
        (k3::k_pm_m_p, [S, -1, 1]),
        (k3::k_pm_z_p, [S, 0, 1]),
        (k3::k_z_z_pm, [0, 0, S]),
        (k3::k_z_pm_p, [0, S, 1]),
    ];
    expand(&mut w, &l, &groups);

    let Local { a, a_1, a_2, a_3, b12, b13, b23, c1, c2, c3, .. } = l;
    let a2 = a * a;
    let twelfth = T::lit(1.0 / 12.0);
    w.m[offset_position(&[0, 0, 0])] = T::lit(0.5);
    for sg in [1i8, -1] {
        let s = T::from_i8(sg).unwrap();
        let mixed = |b: T| -s * b / (T::lit(48.0) * a);
        w.m[offset_position(&[sg, -1, 0])] = mixed(b12);
        w.m[offset_position(&[-sg, 1, 0])] = mixed(b12);
        w.m[offset_position(&[sg, 0, -1])] = mixed(b13);
        w.m[offset_position(&[-sg, 0, 1])] = mixed(b13);
        w.m[offset_position(&[0, sg, -1])] = mixed(b23);
        w.m[offset_position(&[0, -sg, 1])] = mixed(b23);
        w.m[offset_position(&[sg, 0, 0])] = twelfth
            - s * h * b12 * a_2 / (T::lit(24.0) * a2)
            - s * h * b13 * a_3 / (T::lit(24.0) * a2)
            + s * h * c1 / (T::lit(24.0) * a)
            - s * h * a_1 / (T::lit(12.0) * a);
        w.m[offset_position(&[0, sg, 0])] = twelfth
            - s * h * b12 * a_1 / (T::lit(24.0) * a2)
            - s * h * b23 * a_3 / (T::lit(24.0) * a2)
            + s * h * c2 / (T::lit(24.0) * a)
            - s * h * a_2 / (T::lit(12.0) * a);
        w.m[offset_position(&[0, 0, sg])] = twelfth
            - s * h * b23 * a_2 / (T::lit(24.0) * a2)
            - s * h * b13 * a_1 / (T::lit(24.0) * a2)
            + s * h * c3 / (T::lit(24.0) * a)
            - s * h * a_3 / (T::lit(12.0) * a);
    }

    let g = &s.g;
    let h2 = h * h;
    let two = T::lit(2.0);
    w.g_tilde = (c1 * h2 * a - two * h2 * a_1 * a - b12 * h2 * a_2 - b13 * h2 * a_3) * g.d[0]
        / (T::lit(12.0) * a2)
        + b13 * h2 * g.dd[0][2] / (T::lit(12.0) * a)
        + (c2 * h2 * a - two * h2 * a_2 * a - b12 * h2 * a_1 - b23 * h2 * a_3) * g.d[1]
            / (T::lit(12.0) * a2)
        + b23 * h2 * g.dd[1][2] / (T::lit(12.0) * a)
        + (c3 * h2 * a - two * h2 * a_3 * a - b13 * h2 * a_1 - b23 * h2 * a_2) * g.d[2]
            / (T::lit(12.0) * a2)
        + h2 * g.dd[0][0] / T::lit(12.0)
        + b12 * h2 * g.dd[0][1] / (T::lit(12.0) * a)
        + h2 * g.dd[2][2] / T::lit(12.0)
        + h2 * g.dd[1][1] / T::lit(12.0)
        + g.v;
    Ok(w)
}

/// Compact weights in the sample's dimension (1, 2 or 3).
pub fn hoc_weights<T: Real>(s: &CoefficientSample<T>, h: T) -> Result<StencilWeights<T>> {
    match s.dim {
        1 => hoc_weights_1d(s, h),
        2 => hoc_weights_2d(s, h),
        3 => hoc_weights_3d(s, h),
        n => Err(Error::InvalidArgument(format!("no compact weights for dimension {n}"))),
    }
}

/// Second-order central differences: `Σ a_i D²_i + Σ b_ij D_i D_j + Σ c_i D_i`,
/// identity M and `g̃ = g`. Diffusion may differ between axes.
pub fn baseline_weights<T: Real>(s: &CoefficientSample<T>, h: T) -> Result<StencilWeights<T>> {
    check_step(h)?;
    s.validate()?;
    let n = s.dim;
    let mut w = StencilWeights::zeros(n);
    let h2 = h * h;
    let mut off = vec![0i8; n];
    w.m[offset_position(&off)] = T::one();
    for i in 0..n {
        let (a, c) = (s.a[i].v, s.c[i].v);
        let p0 = offset_position(&off);
        w.k[p0] -= T::lit(2.0) * a / h2;
        for sg in [1i8, -1] {
            off[i] = sg;
            w.k[offset_position(&off)] += a / h2 + T::from_i8(sg).unwrap() * c / (T::lit(2.0) * h);
        }
        off[i] = 0;
        for j in i + 1..n {
            let b = s.b_pair(i, j).v;
            for (si, sj) in [(1i8, 1i8), (1, -1), (-1, 1), (-1, -1)] {
                off[i] = si;
                off[j] = sj;
                w.k[offset_position(&off)] += T::from_i8(si * sj).unwrap() * b / (T::lit(4.0) * h2);
            }
            off[i] = 0;
            off[j] = 0;
        }
    }
    w.g_tilde = s.g.v;
    Ok(w)
}

/// Weights of `scheme` in the sample's dimension.
pub fn weights<T: Real>(scheme: Scheme, s: &CoefficientSample<T>, h: T) -> Result<StencilWeights<T>> {
    match scheme {
        Scheme::Hoc => hoc_weights(s, h),
        Scheme::Baseline => baseline_weights(s, h),
    }
}
