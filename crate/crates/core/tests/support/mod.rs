//! Shared test oracles.
#![allow(dead_code)]

pub mod bs3d;

use std::collections::BTreeMap;

use hoc_core::pde_model::{pair_index, CoefficientSample, Jet};
use hoc_core::Real;
use rand::Rng;

/// Unknown in a linear form: a spatial derivative of `u` or of the
/// right-hand side `f = g - u_τ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Var {
    U([u8; 3]),
    F([u8; 3]),
}

type Form = BTreeMap<Var, f64>;

fn add(form: &mut Form, key: Var, v: f64) {
    *form.entry(key).or_insert(0.0) += v;
}

fn unit(axes: &[usize]) -> [u8; 3] {
    let mut e = [0u8; 3];
    for &k in axes {
        e[k] += 1;
    }
    e
}

fn binom(n: u8, k: u8) -> f64 {
    match (n, k) {
        (_, 0) => 1.0,
        (n, k) if k == n => 1.0,
        (2, 1) => 2.0,
        _ => unreachable!(),
    }
}

fn jet_partial(j: &Jet<f64>, beta: [u8; 3]) -> f64 {
    let axes: Vec<usize> = (0..3).flat_map(|k| std::iter::repeat(k).take(beta[k] as usize)).collect();
    match axes.as_slice() {
        [] => j.v,
        [k] => j.d[*k],
        [k, p] => j.dd[*k][*p],
        _ => panic!("coefficient partial of order > 2"),
    }
}

/// Differentiation of the PDE by a dense rewrite, with the diffusion
/// coefficient taken from axis 0 for every axis.
struct Deriver<'a> {
    n: usize,
    s: &'a CoefficientSample<f64>,
}

impl Deriver<'_> {
    fn terms(&self) -> Vec<(&Jet<f64>, [u8; 3])> {
        let n = self.n;
        let mut t = Vec::new();
        for i in 0..n {
            t.push((&self.s.a[0], unit(&[i, i])));
        }
        for i in 0..n {
            for j in i + 1..n {
                t.push((&self.s.b[pair_index(i, j)], unit(&[i, j])));
            }
        }
        for i in 0..n {
            t.push((&self.s.c[i], unit(&[i])));
        }
        t
    }

    /// `D^beta (L u - f)` as a linear form.
    fn relation(&self, beta: [u8; 3]) -> Form {
        let mut r = Form::new();
        for (jet, gam) in self.terms() {
            for b0 in 0..=beta[0] {
                for b1 in 0..=beta[1] {
                    for b2 in 0..=beta[2] {
                        let bp = [b0, b1, b2];
                        let w: f64 = (0..3).map(|k| binom(beta[k], bp[k])).product();
                        let alpha = [0, 1, 2].map(|k| gam[k] + beta[k] - bp[k]);
                        add(&mut r, Var::U(alpha), w * jet_partial(jet, bp));
                    }
                }
            }
        }
        add(&mut r, Var::F(beta), -1.0);
        r
    }

    fn a(&self) -> f64 {
        self.s.a[0].v
    }

    /// `u_kkk` expressed through lower derivatives.
    fn third(&self, k: usize) -> Form {
        let mut r = self.relation(unit(&[k]));
        let co = r.remove(&Var::U(unit(&[k, k, k]))).unwrap();
        assert!((co - self.a()).abs() <= 1e-14 * co.abs());
        r.into_iter().map(|(key, v)| (key, -v / self.a())).collect()
    }

    fn subst_pure3(&self, form: Form) -> Form {
        let mut out = Form::new();
        for (key, v) in form {
            match key {
                Var::U(al) if al.iter().map(|&x| x as u32).sum::<u32>() == 3 && al.contains(&3) => {
                    let k = al.iter().position(|&x| x == 3).unwrap();
                    for (k2, v2) in self.third(k) {
                        add(&mut out, k2, v * v2);
                    }
                }
                _ => add(&mut out, key, v),
            }
        }
        out
    }

    fn fourth(&self, k: usize) -> Form {
        let mut r = self.relation(unit(&[k, k]));
        r.remove(&Var::U(unit(&[k, k, k, k])));
        for i in 0..self.n {
            if i != k {
                r.remove(&Var::U(unit(&[i, k, k, k])));
            }
        }
        let scaled = r.into_iter().map(|(key, v)| (key, -v / self.a())).collect();
        self.subst_pure3(scaled)
    }

    fn mixed(&self, k: usize, p: usize) -> Form {
        let mut r = self.relation(unit(&[k, p]));
        r.remove(&Var::U(unit(&[k, k, k, p])));
        r.remove(&Var::U(unit(&[k, p, p, p])));
        let neg = r.into_iter().map(|(key, v)| (key, -v)).collect();
        self.subst_pure3(neg)
    }

    fn scheme(&self, h: f64) -> Form {
        let n = self.n;
        let a = self.a();
        let mut s = Form::new();
        for i in 0..n {
            let c = self.s.c[i].v;
            add(&mut s, Var::U(unit(&[i, i])), a);
            for (key, v) in self.fourth(i) {
                add(&mut s, key, -a * h * h / 12.0 * v);
            }
            for (key, v) in self.third(i) {
                add(&mut s, key, -c * h * h / 6.0 * v);
            }
            add(&mut s, Var::U(unit(&[i])), c);
        }
        for i in 0..n {
            for j in i + 1..n {
                let b = self.s.b[pair_index(i, j)].v;
                add(&mut s, Var::U(unit(&[i, j])), b);
                for (key, v) in self.mixed(i, j) {
                    add(&mut s, key, -b * h * h / (12.0 * a) * v);
                }
            }
        }
        s
    }
}

fn stencil(n: usize, h: f64, alpha: [u8; 3], off: &[i8]) -> f64 {
    (0..n)
        .map(|k| {
            let o = off[k];
            match alpha[k] {
                0 => (o == 0) as u8 as f64,
                1 => o as f64 / (2.0 * h),
                2 => if o == 0 { -2.0 / (h * h) } else { 1.0 / (h * h) },
                _ => panic!("order > 2 left after substitution"),
            }
        })
        .product()
}

/// K, M (lexicographic offsets) and g̃ obtained by differentiating the
/// equation at run time instead of reading closed forms.
pub fn derived_weights(s: &CoefficientSample<f64>, h: f64) -> (Vec<f64>, Vec<f64>, f64) {
    let n = s.dim;
    let d = Deriver { n, s };
    let form = d.scheme(h);
    let mut su = Form::new();
    let mut ft = Form::new();
    add(&mut ft, Var::U([0; 3]), 1.0);
    for (key, v) in form {
        match key {
            Var::U(al) => add(&mut su, Var::U(al), v),
            Var::F(al) => add(&mut ft, Var::U(al), -v),
        }
    }
    let offs = hoc_core::grid::stencil_offsets(n);
    let apply = |form: &Form, off: &[i8]| -> f64 {
        form.iter()
            .map(|(key, v)| match key {
                Var::U(al) => v * stencil(n, h, *al, off),
                Var::F(_) => unreachable!(),
            })
            .sum()
    };
    let k = offs.iter().map(|o| apply(&su, o)).collect();
    let m = offs.iter().map(|o| apply(&ft, o)).collect();
    let g = ft
        .iter()
        .map(|(key, v)| match key {
            Var::U(al) => v * jet_partial(&s.g, *al),
            Var::F(_) => unreachable!(),
        })
        .sum();
    (k, m, g)
}

fn random_jet<R: Rng>(rng: &mut R, n: usize, v: f64, spread: f64) -> Jet<f64> {
    let mut j = Jet::constant(v);
    for k in 0..n {
        j.d[k] = spread * rng.gen_range(-1.0..1.0);
        for p in k..n {
            let x = spread * rng.gen_range(-1.0..1.0);
            j.dd[k][p] = x;
            j.dd[p][k] = x;
        }
    }
    j
}

/// Random coefficient sample with a shared diffusion coefficient, arbitrary
/// mixed and convection terms and nonzero partials throughout.
pub fn random_sample<R: Rng>(rng: &mut R, n: usize) -> CoefficientSample<f64> {
    let x: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let mut s = CoefficientSample::zeroed(&x, 0.0);
    let av = -rng.gen_range(0.05..2.0);
    let a = random_jet(rng, n, av, 0.5);
    for k in 0..n {
        s.a[k] = a;
    }
    for i in 0..n {
        for j in i + 1..n {
            let bound = 0.9 * a.v.abs();
            let bv = rng.gen_range(-bound..bound);
            s.b[pair_index(i, j)] = random_jet(rng, n, bv, 0.5);
        }
        let cv = rng.gen_range(-3.0..3.0);
        s.c[i] = random_jet(rng, n, cv, 0.5);
    }
    let gv = rng.gen_range(-1.0..1.0);
    s.g = random_jet(rng, n, gv, 1.0);
    s
}

/// Parameters of the closed-form Black-Scholes weights.
#[derive(Debug, Clone, Copy)]
pub struct BsParams<T> {
    pub h: T,
    pub gamma: T,
    pub rho12: T,
    pub rho13: T,
    pub rho23: T,
    pub vs1: T,
    pub vs2: T,
    pub vs3: T,
}

/// K weights of the three-dimensional Black-Scholes scheme, lexicographic.
/// General sample matching the three-asset specialization.
pub fn bs_sample(p: &BsParams<f64>) -> CoefficientSample<f64> {
    let mut s = CoefficientSample::zeroed(&[0.0; 3], 0.0);
    let g2 = p.gamma * p.gamma;
    s.a = [Jet::constant(-g2 / 2.0); 3];
    s.b[pair_index(0, 1)] = Jet::constant(-g2 * p.rho12);
    s.b[pair_index(0, 2)] = Jet::constant(-g2 * p.rho13);
    s.b[pair_index(1, 2)] = Jet::constant(-g2 * p.rho23);
    s.c = [p.vs1, p.vs2, p.vs3].map(|v| Jet::constant(p.gamma * v));
    s
}

pub fn bs3d_k<T: Real>(p: &BsParams<T>) -> Vec<T> {
    const S: i8 = 2;
    let groups: [(fn(&BsParams<T>, T) -> T, [i8; 3]); 14] = [
        (bs3d::k_z_z_z, [0, 0, 0]),
        (bs3d::k_pm_z_z, [S, 0, 0]),
        (bs3d::k_z_pm_z, [0, S, 0]),
        (bs3d::k_z_z_pm, [0, 0, S]),
        (bs3d::k_pm_m_z, [S, -1, 0]),
        (bs3d::k_pm_p_z, [S, 1, 0]),
        (bs3d::k_pm_z_m, [S, 0, -1]),
        (bs3d::k_pm_z_p, [S, 0, 1]),
        (bs3d::k_z_pm_m, [0, S, -1]),
        (bs3d::k_z_pm_p, [0, S, 1]),
        (bs3d::k_pm_m_m, [S, -1, -1]),
        (bs3d::k_pm_p_m, [S, 1, -1]),
        (bs3d::k_pm_m_p, [S, -1, 1]),
        (bs3d::k_pm_p_p, [S, 1, 1]),
    ];
    let mut k = vec![T::nan(); 27];
    for (f, pat) in groups {
        let signs: &[i8] = if pat.contains(&S) { &[1, -1] } else { &[1] };
        for &sg in signs {
            let off: Vec<i8> = pat.iter().map(|&o| if o == S { sg } else { o }).collect();
            k[hoc_core::grid::offset_position(&off)] = f(p, T::lit(sg as f64));
        }
    }
    k
}

/// Adaptive Simpson quadrature of `f` over `[a, b]` to absolute tolerance `tol`.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> f64 {
    fn rec<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, fa: f64, fm: f64, fb: f64, whole: f64, tol: f64, depth: u32) -> f64 {
        let m = 0.5 * (a + b);
        let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
        let (flm, frm) = (f(lm), f(rm));
        let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        let delta = left + right - whole;
        if depth == 0 || delta.abs() <= 15.0 * tol {
            return left + right + delta / 15.0;
        }
        rec(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) + rec(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1)
    }
    let (fa, fb, fm) = (f(a), f(b), f(0.5 * (a + b)));
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    rec(f, a, b, fa, fm, fb, whole, tol, 50)
}

/// `Φ₄` at each `x` by numerically inverting its Fourier transform,
/// `(1/π) ∫₀^∞ Φ̂₄(ω) cos(ωx) dω`, truncated where the tail is below 1e-12.
pub fn phi4_by_inversion(xs: &[f64]) -> Vec<f64> {
    use std::num::NonZeroUsize;
    let rule = gauss_quad::GaussLegendre::new(NonZeroUsize::new(12).unwrap());
    let cutoff = 20_000usize;
    let mut omega = Vec::with_capacity(cutoff * 12);
    let mut weight = Vec::with_capacity(cutoff * 12);
    for panel in 0..cutoff {
        for &(t, w) in rule.as_node_weight_pairs() {
            let om = panel as f64 + 0.5 * (t + 1.0);
            omega.push(om);
            weight.push(0.5 * w * hoc_core::smoothing::phi4_hat(om) / std::f64::consts::PI);
        }
    }
    xs.iter()
        .map(|&x| omega.iter().zip(&weight).map(|(&om, &w)| w * (om * x).cos()).sum())
        .collect()
}
