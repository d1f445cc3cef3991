//! K entries of the 9-point stencil, one function per printed group.
//!
//! `s` selects the upper (`+1`) or lower (`-1`) reading of every `±`/`∓` in
//! the group.

use super::Local;
use crate::scalar::Real;

pub(super) fn k_z_z<T: Real>(c: &Local<T>, _s: T) -> T {
    let Local { h, a, a_1, a_11, a_12, a_2, a_22, b12, c1, c1_1, c1_2, c2, c2_1, c2_2, .. } = *c;
    - a_12 * b12 / (T::lit(3.0) * a)
        - b12 * c2_1 / (T::lit(6.0) * a)
        + a_2 * b12 * c1 / (T::lit(6.0) * a.powi(2))
        + T::lit(2.0) * a_1 * a_2 * b12 / (T::lit(3.0) * a.powi(2))
        - a_22 / T::lit(3.0)
        - c1.powi(2) / (T::lit(6.0) * a)
        + T::lit(2.0) * a_1.powi(2) / (T::lit(3.0) * a)
        - a_11 / T::lit(3.0)
        - T::lit(10.0) * a / (T::lit(3.0) * h.powi(2))
        - c2_2 / T::lit(3.0)
        - c1_1 / T::lit(3.0)
        - b12 * c1_2 / (T::lit(6.0) * a)
        + T::lit(2.0) * a_2.powi(2) / (T::lit(3.0) * a)
        - c2.powi(2) / (T::lit(6.0) * a)
        + b12.powi(2) / (T::lit(3.0) * a * h.powi(2))
        + a_1 * b12 * c2 / (T::lit(6.0) * a.powi(2))
}

pub(super) fn k_pm_z<T: Real>(c: &Local<T>, s: T) -> T {
    let Local { h, a, a_1, a_11, a_12, a_2, a_22, b12, b12_1, b12_2, c1, c1_1, c1_11, c1_12, c1_2, c1_22, c2, .. } = *c;
    a_2 * c2 / (T::lit(12.0) * a)
        - b12.powi(2) / (T::lit(6.0) * a * h.powi(2))
        + a_12 * b12 / (T::lit(12.0) * a)
        - a_1 * c1 / (T::lit(12.0) * a)
        - s * a_2 * b12 * c1_1 * h / (T::lit(24.0) * a.powi(2))
        - s * a_1 * b12 * c1_2 * h / (T::lit(24.0) * a.powi(2))
        + s * c1_11 * h / T::lit(24.0)
        + s * c1_22 * h / T::lit(24.0)
        + c1.powi(2) / (T::lit(12.0) * a)
        + s * c1 * c1_1 * h / (T::lit(24.0) * a)
        - s * a_1 * c1_1 * h / (T::lit(12.0) * a)
        + s * b12 * c1_12 * h / (T::lit(24.0) * a)
        - a_2 * b12 * c1 / (T::lit(12.0) * a.powi(2))
        + s * c1_2 * c2 * h / (T::lit(24.0) * a)
        - s * a_2 * c1_2 * h / (T::lit(12.0) * a)
        + c1_1 / T::lit(6.0)
        - a_1.powi(2) / (T::lit(6.0) * a)
        - a_2.powi(2) / (T::lit(6.0) * a)
        + a_22 / T::lit(12.0)
        + a_11 / T::lit(12.0)
        - s * b12 * c2 / (T::lit(6.0) * a * h)
        - s * b12 * b12_1 / (T::lit(12.0) * a * h)
        + b12 * c1_2 / (T::lit(12.0) * a)
        + T::lit(2.0) * a / (T::lit(3.0) * h.powi(2))
        - a_1 * a_2 * b12 / (T::lit(6.0) * a.powi(2))
        + s * a_2 * b12 / (T::lit(6.0) * a * h)
        - s * b12_2 / (T::lit(6.0) * h)
        + s * a_1 * b12.powi(2) / (T::lit(12.0) * h * a.powi(2))
        + s * c1 / (T::lit(3.0) * h)
}

pub(super) fn k_z_pm<T: Real>(c: &Local<T>, s: T) -> T {
    let Local { h, a, a_1, a_11, a_12, a_2, a_22, b12, b12_1, b12_2, c1, c2, c2_1, c2_11, c2_12, c2_2, c2_22, .. } = *c;
    - a_2 * c2 / (T::lit(12.0) * a)
        - b12.powi(2) / (T::lit(6.0) * a * h.powi(2))
        + b12 * c2_1 / (T::lit(12.0) * a)
        + a_12 * b12 / (T::lit(12.0) * a)
        + a_1 * c1 / (T::lit(12.0) * a)
        - s * a_2 * b12 * c2_1 * h / (T::lit(24.0) * a.powi(2))
        + c2_2 / T::lit(6.0)
        - s * a_1 * b12 * c2_2 * h / (T::lit(24.0) * a.powi(2))
        - a_1.powi(2) / (T::lit(6.0) * a)
        - a_2.powi(2) / (T::lit(6.0) * a)
        + c2.powi(2) / (T::lit(12.0) * a)
        + a_22 / T::lit(12.0)
        + a_11 / T::lit(12.0)
        - s * b12 * b12_2 / (T::lit(12.0) * a * h)
        + s * c2_22 * h / T::lit(24.0)
        + s * c2_11 * h / T::lit(24.0)
        + T::lit(2.0) * a / (T::lit(3.0) * h.powi(2))
        + s * c1 * c2_1 * h / (T::lit(24.0) * a)
        - s * a_1 * c2_1 * h / (T::lit(12.0) * a)
        - a_1 * a_2 * b12 / (T::lit(6.0) * a.powi(2))
        + s * b12 * c2_12 * h / (T::lit(24.0) * a)
        + s * c2 / (T::lit(3.0) * h)
        - a_1 * b12 * c2 / (T::lit(12.0) * a.powi(2))
        - s * a_2 * c2_2 * h / (T::lit(12.0) * a)
        + s * c2 * c2_2 * h / (T::lit(24.0) * a)
        + s * a_2 * b12.powi(2) / (T::lit(12.0) * h * a.powi(2))
        + s * a_1 * b12 / (T::lit(6.0) * a * h)
        - s * b12 * c1 / (T::lit(6.0) * a * h)
        - s * b12_1 / (T::lit(6.0) * h)
}

pub(super) fn k_pm_m<T: Real>(c: &Local<T>, s: T) -> T {
    let Local { h, a, a_1, a_2, b12, b12_1, b12_11, b12_12, b12_2, b12_22, c1, c1_1, c1_2, c2, c2_1, c2_2, .. } = *c;
    b12.powi(2) / (T::lit(12.0) * a * h.powi(2))
        - s * c1 * c2 / (T::lit(24.0) * a)
        + s * a_2 * c1 / (T::lit(24.0) * a)
        - s * b12 * c2_2 / (T::lit(48.0) * a)
        + s * a_2 * b12_2 / (T::lit(24.0) * a)
        + s * a_1 * c2 / (T::lit(24.0) * a)
        + s * a_1 * b12_1 / (T::lit(24.0) * a)
        - s * b12_1 * c1 / (T::lit(48.0) * a)
        - s * b12 * c1_1 / (T::lit(48.0) * a)
        - s * b12_2 * c2 / (T::lit(48.0) * a)
        - s * b12 * b12_12 / (T::lit(48.0) * a)
        - s * c1_2 / T::lit(24.0)
        - s * c2_1 / T::lit(24.0)
        - s * b12_11 / T::lit(48.0)
        - s * b12_22 / T::lit(48.0)
        - b12 * b12_2 / (T::lit(24.0) * a * h)
        + s * b12 * c2 / (T::lit(12.0) * a * h)
        + s * b12 * b12_1 / (T::lit(24.0) * a * h)
        + s * a_2 * b12 * b12_1 / (T::lit(48.0) * a.powi(2))
        + s * a_1 * b12 * c1 / (T::lit(48.0) * a.powi(2))
        + a / (T::lit(6.0) * h.powi(2))
        + a_2 * b12.powi(2) / (T::lit(24.0) * h * a.powi(2))
        + s * a_2 * b12 * c2 / (T::lit(48.0) * a.powi(2))
        + a_1 * b12 / (T::lit(12.0) * a * h)
        - s * a_2 * b12 / (T::lit(12.0) * a * h)
        - b12 * c1 / (T::lit(12.0) * a * h)
        + s * a_1 * b12 * b12_2 / (T::lit(48.0) * a.powi(2))
        - b12_1 / (T::lit(12.0) * h)
        + s * b12_2 / (T::lit(12.0) * h)
        - s * a_1 * b12.powi(2) / (T::lit(24.0) * h * a.powi(2))
        - s * b12 / (T::lit(4.0) * h.powi(2))
        - c2 / (T::lit(12.0) * h)
        + s * c1 / (T::lit(12.0) * h)
}

pub(super) fn k_pm_p<T: Real>(c: &Local<T>, s: T) -> T {
    let Local { h, a, a_1, a_2, b12, b12_1, b12_11, b12_12, b12_2, b12_22, c1, c1_1, c1_2, c2, c2_1, c2_2, .. } = *c;
    b12.powi(2) / (T::lit(12.0) * a * h.powi(2))
        + s * c1 * c2 / (T::lit(24.0) * a)
        - s * a_2 * c1 / (T::lit(24.0) * a)
        + s * b12 * c2_2 / (T::lit(48.0) * a)
        - s * a_2 * b12_2 / (T::lit(24.0) * a)
        - s * a_1 * c2 / (T::lit(24.0) * a)
        - s * a_1 * b12_1 / (T::lit(24.0) * a)
        + s * b12_1 * c1 / (T::lit(48.0) * a)
        + s * b12 * c1_1 / (T::lit(48.0) * a)
        + s * b12_2 * c2 / (T::lit(48.0) * a)
        + s * b12 * b12_12 / (T::lit(48.0) * a)
        + s * c1_2 / T::lit(24.0)
        + s * c2_1 / T::lit(24.0)
        + s * b12_11 / T::lit(48.0)
        + s * b12_22 / T::lit(48.0)
        + b12 * b12_2 / (T::lit(24.0) * a * h)
        + s * b12 * c2 / (T::lit(12.0) * a * h)
        + s * b12 * b12_1 / (T::lit(24.0) * a * h)
        - s * a_2 * b12 * b12_1 / (T::lit(48.0) * a.powi(2))
        - s * a_1 * b12 * c1 / (T::lit(48.0) * a.powi(2))
        + a / (T::lit(6.0) * h.powi(2))
        - a_2 * b12.powi(2) / (T::lit(24.0) * h * a.powi(2))
        - s * a_2 * b12 * c2 / (T::lit(48.0) * a.powi(2))
        - a_1 * b12 / (T::lit(12.0) * a * h)
        - s * a_2 * b12 / (T::lit(12.0) * a * h)
        + b12 * c1 / (T::lit(12.0) * a * h)
        - s * a_1 * b12 * b12_2 / (T::lit(48.0) * a.powi(2))
        + b12_1 / (T::lit(12.0) * h)
        + s * b12_2 / (T::lit(12.0) * h)
        - s * a_1 * b12.powi(2) / (T::lit(24.0) * h * a.powi(2))
        + s * b12 / (T::lit(4.0) * h.powi(2))
        + c2 / (T::lit(12.0) * h)
        + s * c1 / (T::lit(12.0) * h)
}
