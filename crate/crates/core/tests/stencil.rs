mod support;

use hoc_core::hoc_stencil::{baseline_weights, hoc_weights, hoc_weights_2d, hoc_weights_3d};
use hoc_core::pde_model::{CoefficientSample, Jet};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use support::{bs3d_k, bs_sample, derived_weights, random_sample, BsParams};

fn max_abs(v: &[f64]) -> f64 {
    v.iter().fold(0.0, |m, x| m.max(x.abs()))
}

#[test]
fn closed_forms_match_derivation() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in 1..=3 {
        for _ in 0..200 {
            let s = random_sample(&mut rng, n);
            let h = 0.02 + 0.3 * rand::Rng::gen::<f64>(&mut rng);
            let w = hoc_weights(&s, h).unwrap();
            let (k, m, g) = derived_weights(&s, h);
            let scale = max_abs(&k);
            for (p, (x, y)) in w.k.iter().zip(&k).enumerate() {
                assert!((x - y).abs() <= 1e-12 * scale, "n={n} K[{p}] {x} vs {y}");
            }
            for (p, (x, y)) in w.m.iter().zip(&m).enumerate() {
                assert!((x - y).abs() <= 1e-13, "n={n} M[{p}] {x} vs {y}");
            }
            assert!((w.g_tilde - g).abs() <= 1e-12 * (1.0 + g.abs()), "n={n} g {} vs {g}", w.g_tilde);
        }
    }
}

#[test]
fn black_scholes_3d_specialisation() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    use rand::Rng;
    for _ in 0..500 {
        let p = BsParams {
            h: rng.gen_range(0.01..0.5),
            gamma: rng.gen_range(0.05..2.0),
            rho12: rng.gen_range(-0.9..0.9),
            rho13: rng.gen_range(-0.9..0.9),
            rho23: rng.gen_range(-0.9..0.9),
            vs1: rng.gen_range(-2.0..2.0),
            vs2: rng.gen_range(-2.0..2.0),
            vs3: rng.gen_range(-2.0..2.0),
        };
        let w = hoc_weights_3d(&bs_sample(&p), p.h).unwrap();
        let oracle = bs3d_k(&p);
        let scale = max_abs(&oracle);
        for (q, (x, y)) in w.k.iter().zip(&oracle).enumerate() {
            assert!((x - y).abs() <= 1e-13 * scale, "K[{q}] {x} vs {y} at {p:?}");
        }
    }
}

#[test]
fn axis_swap_transposes_2d() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..50 {
        let mut s = random_sample(&mut rng, 2);
        for j in s.a.iter_mut().chain(s.b.iter_mut()).chain(s.c.iter_mut()) {
            *j = Jet::constant(j.v);
        }
        s.g = Jet::constant(s.g.v);
        let mut t = s.clone();
        t.c.swap(0, 1);
        let (w, v) = (hoc_weights_2d(&s, 0.1).unwrap(), hoc_weights_2d(&t, 0.1).unwrap());
        for (o, k, m) in w.iter() {
            let r = [o[1], o[0]];
            assert!((k - v.k_at(&r)).abs() < 1e-10 * max_abs(&w.k));
            assert!((m - v.m_at(&r)).abs() < 1e-14);
        }
    }
}

#[test]
fn corner_leading_part_without_mixing() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut s = random_sample(&mut rng, 2);
    s.b[0] = Jet::constant(0.0);
    let a = s.a[0].v;
    let scaled = |s: &CoefficientSample<f64>, h: f64, o: [i8; 2]| h * h * hoc_weights_2d(s, h).unwrap().k_at(&o);
    // Only a/(6h²) survives at leading order; the rest is O(1/h).
    for o in [[1, 1], [1, -1], [-1, 1], [-1, -1]] {
        let e1 = scaled(&s, 2e-4, o) - a / 6.0;
        let e2 = scaled(&s, 1e-4, o) - a / 6.0;
        assert!(e2.abs() < 1e-3 * a.abs());
        assert!((e2 / e1 - 0.5).abs() < 0.01, "{o:?} {e1} {e2}");
    }
    s.b[0] = Jet::constant(0.3 * a);
    let lead = scaled(&s, 1e-6, [1, 1]);
    let b = 0.3 * a;
    assert!((lead - (a / 6.0 + b / 4.0 + b * b / (12.0 * a))).abs() < 1e-4 * a.abs(), "{lead}");
}

fn sample_strategy(n: usize) -> impl Strategy<Value = (CoefficientSample<f64>, f64)> {
    (any::<u64>(), 0.005f64..1.0).prop_map(move |(seed, h)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (random_sample(&mut rng, n), h)
    })
}

proptest! {
    #[test]
    fn weights_annihilate_constants_2d((s, h) in sample_strategy(2)) {
        for w in [hoc_weights(&s, h).unwrap(), baseline_weights(&s, h).unwrap()] {
            prop_assert!(w.k.iter().sum::<f64>().abs() <= 1e-12 * max_abs(&w.k));
            prop_assert!((w.m.iter().sum::<f64>() - 1.0).abs() <= 1e-12);
        }
    }

    #[test]
    fn weights_annihilate_constants_3d((s, h) in sample_strategy(3)) {
        for w in [hoc_weights(&s, h).unwrap(), baseline_weights(&s, h).unwrap()] {
            prop_assert!(w.k.iter().sum::<f64>().abs() <= 1e-12 * max_abs(&w.k));
            prop_assert!((w.m.iter().sum::<f64>() - 1.0).abs() <= 1e-12);
        }
    }

    #[test]
    fn double_offset_mass_vanishes_3d((s, h) in sample_strategy(3)) {
        let w = hoc_weights_3d(&s, h).unwrap();
        for o in [[1i8, -1, -1], [-1, -1, -1], [1, 1, 1], [-1, 1, 1],
                  [1, 1, -1], [-1, 1, -1], [1, -1, 1], [-1, -1, 1]] {
            prop_assert_eq!(w.m_at(&o), 0.0);
        }
    }
}
