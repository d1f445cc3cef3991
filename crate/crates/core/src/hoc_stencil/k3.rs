//! K entries of the 27-point stencil, one function per printed group.
//!
//! `s` selects the upper (`+1`) or lower (`-1`) reading of every `±`/`∓` in
//! the group; a group function called with `s` gives the entry at the offset
//! obtained by substituting `s` for `±1`.

use super::Local;
use crate::scalar::Real;

pub(super) fn k_z_z_z<T: Real>(c: &Local<T>, _s: T) -> T {
    let Local { h, a, a_1, a_11, a_12, a_13, a_2, a_22, a_23, a_3, a_33, b12, b13, b23, c1, c1_1, c1_2, c1_3, c2, c2_1, c2_2, c2_3, c3, c3_1, c3_2, c3_3, .. } = *c;
    a_2 * b23 * c3 / (T::lit(6.0) * a.powi(2))
        + a_1 * b13 * c3 / (T::lit(6.0) * a.powi(2))
        - c3_3 / T::lit(3.0)
        - c1.powi(2) / (T::lit(6.0) * a)
        - c3.powi(2) / (T::lit(6.0) * a)
        - a_11 / T::lit(2.0)
        - a_22 / T::lit(2.0)
        - a_33 / T::lit(2.0)
        + a_3 * b13 * c1 / (T::lit(6.0) * a.powi(2))
        + a_2 * b12 * c1 / (T::lit(6.0) * a.powi(2))
        - T::lit(4.0) * a / h.powi(2)
        + a_1 * a_3 * b13 / a.powi(2)
        + a_2 * a_3 * b23 / a.powi(2)
        + a_3 * b23 * c2 / (T::lit(6.0) * a.powi(2))
        + a_1 * a_2 * b12 / a.powi(2)
        + a_1 * b12 * c2 / (T::lit(6.0) * a.powi(2))
        - b13 * c3_1 / (T::lit(6.0) * a)
        - a_1 * c1 / (T::lit(6.0) * a)
        + b23.powi(2) / (T::lit(3.0) * a * h.powi(2))
        - a_12 * b12 / (T::lit(2.0) * a)
        - a_2 * c2 / (T::lit(6.0) * a)
        + b13.powi(2) / (T::lit(3.0) * a * h.powi(2))
        + b12.powi(2) / (T::lit(3.0) * a * h.powi(2))
        - a_3 * c3 / (T::lit(6.0) * a)
        - a_13 * b13 / (T::lit(2.0) * a)
        - b23 * c2_3 / (T::lit(6.0) * a)
        - b12 * c2_1 / (T::lit(6.0) * a)
        - a_23 * b23 / (T::lit(2.0) * a)
        - b13 * c1_3 / (T::lit(6.0) * a)
        - b23 * c3_2 / (T::lit(6.0) * a)
        - b12 * c1_2 / (T::lit(6.0) * a)
        - c2.powi(2) / (T::lit(6.0) * a)
        + a_1.powi(2) / a
        + a_3.powi(2) / a
        + a_2.powi(2) / a
        - c2_2 / T::lit(3.0)
        - c1_1 / T::lit(3.0)
}

pub(super) fn k_pm_m_z<T: Real>(c: &Local<T>, s: T) -> T {
    let Local { h, a, a_1, a_2, a_3, b12, b12_1, b12_11, b12_12, b12_13, b12_2, b12_22, b12_23, b12_3, b12_33, b13, b23, c1, c1_1, c1_2, c1_3, c2, c2_1, c2_2, c2_3, c3, .. } = *c;
    a_3 * b12 * b13 / (T::lit(24.0) * h * a.powi(2))
        - s * a_3 * b12 * b23 / (T::lit(24.0) * h * a.powi(2))
        - s * b12_11 / T::lit(48.0)
        - s * b12_22 / T::lit(48.0)
        - s * b12_33 / T::lit(48.0)
        + a_1 * b12 / (T::lit(12.0) * a * h)
        - b12 * c1 / (T::lit(12.0) * a * h)
        + s * b12 * c2 / (T::lit(12.0) * a * h)
        + s * a_1 * b12 * c1 / (T::lit(48.0) * a.powi(2))
        + s * a_1 * b12 * b12_2 / (T::lit(48.0) * a.powi(2))
        - s * a_1 * b12.powi(2) / (T::lit(24.0) * h * a.powi(2))
        - s * a_2 * b12 / (T::lit(12.0) * a * h)
        + s * a_2 * b12_3 * b23 / (T::lit(48.0) * a.powi(2))
        + s * a_1 * b12_3 * b13 / (T::lit(48.0) * a.powi(2))
        + s * a_2 * b12 * b12_1 / (T::lit(48.0) * a.powi(2))
        + s * a_2 * b12 * c2 / (T::lit(48.0) * a.powi(2))
        + s * a_3 * b23 * c1 / (T::lit(48.0) * a.powi(2))
        + s * a_3 * b12_2 * b23 / (T::lit(48.0) * a.powi(2))
        - b12 * b12_2 / (T::lit(24.0) * a * h)
        + s * a_3 * b12_1 * b13 / (T::lit(48.0) * a.powi(2))
        + s * a_3 * b13 * c2 / (T::lit(48.0) * a.powi(2))
        + s * b12 * b12_1 / (T::lit(24.0) * a * h)
        + s * b12_3 * b23 / (T::lit(24.0) * a * h)
        - b12_3 * b13 / (T::lit(24.0) * a * h)
        + s * b13 * b23 / (T::lit(12.0) * a * h.powi(2))
        + a_2 * b12.powi(2) / (T::lit(24.0) * h * a.powi(2))
        - c2 / (T::lit(12.0) * h)
        - s * b12 / (T::lit(6.0) * h.powi(2))
        + s * c1 / (T::lit(12.0) * h)
        + a / (T::lit(6.0) * h.powi(2))
        - b12_1 / (T::lit(12.0) * h)
        + s * b12_2 / (T::lit(12.0) * h)
        - s * b12_23 * b23 / (T::lit(48.0) * a)
        - s * b13 * c2_3 / (T::lit(48.0) * a)
        - s * b12 * b12_12 / (T::lit(48.0) * a)
        - s * b23 * c1_3 / (T::lit(48.0) * a)
        - s * b12 * c1_1 / (T::lit(48.0) * a)
        + s * a_1 * c2 / (T::lit(24.0) * a)
        - s * b12_2 * c2 / (T::lit(48.0) * a)
        + b12.powi(2) / (T::lit(12.0) * a * h.powi(2))
        - s * b12_13 * b13 / (T::lit(48.0) * a)
        - s * b12_1 * c1 / (T::lit(48.0) * a)
        + s * a_3 * b12_3 / (T::lit(24.0) * a)
        - s * b12_3 * c3 / (T::lit(48.0) * a)
        + s * a_2 * c1 / (T::lit(24.0) * a)
        - s * b12 * c2_2 / (T::lit(48.0) * a)
        + s * a_1 * b12_1 / (T::lit(24.0) * a)
        + s * a_2 * b12_2 / (T::lit(24.0) * a)
        - s * c1 * c2 / (T::lit(24.0) * a)
        - s * c1_2 / T::lit(24.0)
        - s * c2_1 / T::lit(24.0)
}

pub(super) fn k_pm_z_z<T: Real>(c: &Local<T>, s: T) -> T {
    let Local { h, a, a_1, a_11, a_12, a_13, a_2, a_22, a_23, a_3, a_33, b12, b12_1, b12_2, b12_3, b13, b13_1, b13_2, b13_3, b23, c1, c1_1, c1_11, c1_12, c1_13, c1_2, c1_22, c1_23, c1_3, c1_33, c2, c3, .. } = *c;
    s * a_3 * b12 * b23 / (T::lit(12.0) * h * a.powi(2))
        + s * a_2 * b13 * b23 / (T::lit(12.0) * h * a.powi(2))
        - s * a_1 * b12 * c1_2 * h / (T::lit(24.0) * a.powi(2))
        - s * a_2 * b23 * c1_3 * h / (T::lit(24.0) * a.powi(2))
        - s * a_1 * b13 * c1_3 * h / (T::lit(24.0) * a.powi(2))
        + c1.powi(2) / (T::lit(12.0) * a)
        - s * a_3 * b13 * c1_1 * h / (T::lit(24.0) * a.powi(2))
        - s * a_3 * b23 * c1_2 * h / (T::lit(24.0) * a.powi(2))
        + s * c1_33 * h / T::lit(24.0)
        + s * c1_22 * h / T::lit(24.0)
        + s * c1_11 * h / T::lit(24.0)
        + a_11 / T::lit(12.0)
        + a_22 / T::lit(12.0)
        + a_33 / T::lit(12.0)
        - a_3 * b13 * c1 / (T::lit(12.0) * a.powi(2))
        - s * b13 * b13_1 / (T::lit(12.0) * a * h)
        + s * c1 * c1_1 * h / (T::lit(24.0) * a)
        + s * c1_2 * c2 * h / (T::lit(24.0) * a)
        - s * a_2 * b12 * c1_1 * h / (T::lit(24.0) * a.powi(2))
        - s * b13_2 * b23 / (T::lit(12.0) * a * h)
        + s * a_1 * b13.powi(2) / (T::lit(12.0) * h * a.powi(2))
        - s * b13 * c3 / (T::lit(6.0) * a * h)
        + s * b23 * c1_23 * h / (T::lit(24.0) * a)
        + s * b13 * c1_13 * h / (T::lit(24.0) * a)
        + s * b12 * c1_12 * h / (T::lit(24.0) * a)
        + s * a_3 * b13 / (T::lit(6.0) * a * h)
        - a_2 * b12 * c1 / (T::lit(12.0) * a.powi(2))
        + s * c1_3 * c3 * h / (T::lit(24.0) * a)
        - s * a_1 * c1_1 * h / (T::lit(12.0) * a)
        - s * a_3 * c1_3 * h / (T::lit(12.0) * a)
        - s * b12 * c2 / (T::lit(6.0) * a * h)
        + s * a_1 * b12.powi(2) / (T::lit(12.0) * h * a.powi(2))
        + s * a_2 * b12 / (T::lit(6.0) * a * h)
        - s * b12 * b12_1 / (T::lit(12.0) * a * h)
        - s * b12_3 * b23 / (T::lit(12.0) * a * h)
        + s * c1 / (T::lit(6.0) * h)
        + a / (T::lit(3.0) * h.powi(2))
        - s * b12_2 / (T::lit(6.0) * h)
        - a_1 * a_3 * b13 / (T::lit(6.0) * a.powi(2))
        - a_2 * a_3 * b23 / (T::lit(6.0) * a.powi(2))
        - s * b13_3 / (T::lit(6.0) * h)
        - a_1 * a_2 * b12 / (T::lit(6.0) * a.powi(2))
        - a_1 * c1 / (T::lit(12.0) * a)
        + a_12 * b12 / (T::lit(12.0) * a)
        + a_2 * c2 / (T::lit(12.0) * a)
        - b13.powi(2) / (T::lit(6.0) * a * h.powi(2))
        - b12.powi(2) / (T::lit(6.0) * a * h.powi(2))
        + a_3 * c3 / (T::lit(12.0) * a)
        + a_13 * b13 / (T::lit(12.0) * a)
        + a_23 * b23 / (T::lit(12.0) * a)
        + b13 * c1_3 / (T::lit(12.0) * a)
        + b12 * c1_2 / (T::lit(12.0) * a)
        - a_1.powi(2) / (T::lit(6.0) * a)
        - a_3.powi(2) / (T::lit(6.0) * a)
        - a_2.powi(2) / (T::lit(6.0) * a)
        + c1_1 / T::lit(6.0)
        - s * a_2 * c1_2 * h / (T::lit(12.0) * a)
}

pub(super) fn k_z_pm_z<T: Real>(c: &Local<T>, s: T) -> T {
    let Local { h, a, a_1, a_11, a_12, a_13, a_2, a_22, a_23, a_3, a_33, b12, b12_1, b12_2, b12_3, b13, b23, b23_1, b23_2, b23_3, c1, c2, c2_1, c2_11, c2_12, c2_13, c2_2, c2_22, c2_23, c2_3, c2_33, c3, .. } = *c;
    s * a_3 * b12 * b13 / (T::lit(12.0) * h * a.powi(2))
        - s * a_1 * b13 * c2_3 * h / (T::lit(24.0) * a.powi(2))
        - s * a_1 * b12 * c2_2 * h / (T::lit(24.0) * a.powi(2))
        + s * a_1 * b13 * b23 / (T::lit(12.0) * h * a.powi(2))
        - s * a_3 * b13 * c2_1 * h / (T::lit(24.0) * a.powi(2))
        + s * c2 / (T::lit(6.0) * h)
        - s * a_3 * b23 * c2_2 * h / (T::lit(24.0) * a.powi(2))
        - s * a_2 * b12 * c2_1 * h / (T::lit(24.0) * a.powi(2))
        - s * a_2 * b23 * c2_3 * h / (T::lit(24.0) * a.powi(2))
        + a_11 / T::lit(12.0)
        + a_22 / T::lit(12.0)
        + a_33 / T::lit(12.0)
        + s * a_1 * b12 / (T::lit(6.0) * a * h)
        - s * b12 * c1 / (T::lit(6.0) * a * h)
        - s * b12 * b12_2 / (T::lit(12.0) * a * h)
        - s * b12_3 * b13 / (T::lit(12.0) * a * h)
        + s * a_2 * b12.powi(2) / (T::lit(12.0) * h * a.powi(2))
        + a / (T::lit(3.0) * h.powi(2))
        - s * b12_1 / (T::lit(6.0) * h)
        - s * b23 * c3 / (T::lit(6.0) * a * h)
        + s * b12 * c2_12 * h / (T::lit(24.0) * a)
        + s * b23 * c2_23 * h / (T::lit(24.0) * a)
        + s * b13 * c2_13 * h / (T::lit(24.0) * a)
        - a_1 * a_3 * b13 / (T::lit(6.0) * a.powi(2))
        + s * c2 * c2_2 * h / (T::lit(24.0) * a)
        + s * a_3 * b23 / (T::lit(6.0) * a * h)
        - a_3 * b23 * c2 / (T::lit(12.0) * a.powi(2))
        - s * b13 * b23_1 / (T::lit(12.0) * a * h)
        - s * b23 * b23_2 / (T::lit(12.0) * a * h)
        - s * a_2 * c2_2 * h / (T::lit(12.0) * a)
        + s * c2_3 * c3 * h / (T::lit(24.0) * a)
        - s * a_1 * c2_1 * h / (T::lit(12.0) * a)
        - s * a_3 * c2_3 * h / (T::lit(12.0) * a)
        + s * c1 * c2_1 * h / (T::lit(24.0) * a)
        + s * a_2 * b23.powi(2) / (T::lit(12.0) * h * a.powi(2))
        - a_1 * a_2 * b12 / (T::lit(6.0) * a.powi(2))
        - a_1 * b12 * c2 / (T::lit(12.0) * a.powi(2))
        + a_1 * c1 / (T::lit(12.0) * a)
        - b23.powi(2) / (T::lit(6.0) * a * h.powi(2))
        + a_12 * b12 / (T::lit(12.0) * a)
        - a_2 * c2 / (T::lit(12.0) * a)
        - b12.powi(2) / (T::lit(6.0) * a * h.powi(2))
        + a_3 * c3 / (T::lit(12.0) * a)
        + a_13 * b13 / (T::lit(12.0) * a)
        + b23 * c2_3 / (T::lit(12.0) * a)
        + b12 * c2_1 / (T::lit(12.0) * a)
        + a_23 * b23 / (T::lit(12.0) * a)
        + s * c2_22 * h / T::lit(24.0)
        + s * c2_33 * h / T::lit(24.0)
        + s * c2_11 * h / T::lit(24.0)
        + c2.powi(2) / (T::lit(12.0) * a)
        - a_1.powi(2) / (T::lit(6.0) * a)
        - a_3.powi(2) / (T::lit(6.0) * a)
        - s * b23_3 / (T::lit(6.0) * h)
        - a_2.powi(2) / (T::lit(6.0) * a)
        - a_2 * a_3 * b23 / (T::lit(6.0) * a.powi(2))
        + c2_2 / T::lit(6.0)
}

pub(super) fn k_pm_p_z<T: Real>(c: &Local<T>, s: T) -> T {
    let Local { h, a, a_1, a_2, a_3, b12, b12_1, b12_11, b12_12, b12_13, b12_2, b12_22, b12_23, b12_3, b12_33, b13, b23, c1, c1_1, c1_2, c1_3, c2, c2_1, c2_2, c2_3, c3, .. } = *c;
    - a_3 * b12 * b13 / (T::lit(24.0) * h * a.powi(2))
        - s * a_3 * b12 * b23 / (T::lit(24.0) * h * a.powi(2))
        + s * b12_11 / T::lit(48.0)
        + s * b12_22 / T::lit(48.0)
        + s * b12_33 / T::lit(48.0)
        - a_1 * b12 / (T::lit(12.0) * a * h)
        + b12 * c1 / (T::lit(12.0) * a * h)
        + s * b12 * c2 / (T::lit(12.0) * a * h)
        - s * a_1 * b12 * c1 / (T::lit(48.0) * a.powi(2))
        - s * a_1 * b12 * b12_2 / (T::lit(48.0) * a.powi(2))
        - s * a_1 * b12.powi(2) / (T::lit(24.0) * h * a.powi(2))
        - s * a_2 * b12 / (T::lit(12.0) * a * h)
        - s * a_2 * b12_3 * b23 / (T::lit(48.0) * a.powi(2))
        - s * a_1 * b12_3 * b13 / (T::lit(48.0) * a.powi(2))
        - s * a_2 * b12 * b12_1 / (T::lit(48.0) * a.powi(2))
        - s * a_2 * b12 * c2 / (T::lit(48.0) * a.powi(2))
        - s * a_3 * b23 * c1 / (T::lit(48.0) * a.powi(2))
        - s * a_3 * b12_2 * b23 / (T::lit(48.0) * a.powi(2))
        + b12 * b12_2 / (T::lit(24.0) * a * h)
        - s * a_3 * b12_1 * b13 / (T::lit(48.0) * a.powi(2))
        - s * a_3 * b13 * c2 / (T::lit(48.0) * a.powi(2))
        + s * b12 * b12_1 / (T::lit(24.0) * a * h)
        + s * b12_3 * b23 / (T::lit(24.0) * a * h)
        + b12_3 * b13 / (T::lit(24.0) * a * h)
        - s * b13 * b23 / (T::lit(12.0) * a * h.powi(2))
        - a_2 * b12.powi(2) / (T::lit(24.0) * h * a.powi(2))
        + c2 / (T::lit(12.0) * h)
        + s * b12 / (T::lit(6.0) * h.powi(2))
        + s * c1 / (T::lit(12.0) * h)
        + a / (T::lit(6.0) * h.powi(2))
        + b12_1 / (T::lit(12.0) * h)
        + s * b12_2 / (T::lit(12.0) * h)
        + s * b12_23 * b23 / (T::lit(48.0) * a)
        + s * b13 * c2_3 / (T::lit(48.0) * a)
        + s * b12 * b12_12 / (T::lit(48.0) * a)
        + s * b23 * c1_3 / (T::lit(48.0) * a)
        + s * b12 * c1_1 / (T::lit(48.0) * a)
        - s * a_1 * c2 / (T::lit(24.0) * a)
        + s * b12_2 * c2 / (T::lit(48.0) * a)
        + b12.powi(2) / (T::lit(12.0) * a * h.powi(2))
        + s * b12_13 * b13 / (T::lit(48.0) * a)
        + s * b12_1 * c1 / (T::lit(48.0) * a)
        - s * a_3 * b12_3 / (T::lit(24.0) * a)
        + s * b12_3 * c3 / (T::lit(48.0) * a)
        - s * a_2 * c1 / (T::lit(24.0) * a)
        + s * b12 * c2_2 / (T::lit(48.0) * a)
        - s * a_1 * b12_1 / (T::lit(24.0) * a)
        - s * a_2 * b12_2 / (T::lit(24.0) * a)
        + s * c1 * c2 / (T::lit(24.0) * a)
        + s * c1_2 / T::lit(24.0)
        + s * c2_1 / T::lit(24.0)
}

pub(super) fn k_pm_m_m<T: Real>(c: &Local<T>, s: T) -> T {
    let Local { h, a, a_1, a_2, a_3, b12, b12_1, b12_2, b12_3, b13, b13_1, b13_2, b13_3, b23, b23_1, b23_2, b23_3, c1, c2, c3, .. } = *c;
    s * b13_2 / (T::lit(48.0) * h)
        - s * b13 / (T::lit(24.0) * h.powi(2))
        + s * b12_3 / (T::lit(48.0) * h)
        + s * b23_1 / (T::lit(48.0) * h)
        + s * b12 * b13_1 / (T::lit(96.0) * a * h)
        + s * b12_1 * b13 / (T::lit(96.0) * a * h)
        + s * b13_3 * b23 / (T::lit(96.0) * a * h)
        - s * b12 * b23 / (T::lit(24.0) * a * h.powi(2))
        - s * a_3 * b13 * b23 / (T::lit(48.0) * h * a.powi(2))
        - s * a_2 * b12 * b23 / (T::lit(48.0) * h * a.powi(2))
        + b23 / (T::lit(24.0) * h.powi(2))
        + s * b13 * b23_3 / (T::lit(96.0) * a * h)
        + s * b23 * c1 / (T::lit(48.0) * a * h)
        + b12 * b13 / (T::lit(24.0) * a * h.powi(2))
        - s * b12 / (T::lit(24.0) * h.powi(2))
        - s * a_2 * b13 / (T::lit(48.0) * a * h)
        - s * a_3 * b12 / (T::lit(48.0) * a * h)
        - s * a_1 * b12 * b13 / (T::lit(48.0) * h * a.powi(2))
        - s * a_1 * b23 / (T::lit(48.0) * a * h)
        + s * b12 * b23_2 / (T::lit(96.0) * a * h)
        + s * b12_2 * b23 / (T::lit(96.0) * a * h)
        + s * b12 * c3 / (T::lit(48.0) * a * h)
        + s * b13 * c2 / (T::lit(48.0) * a * h)
        - s * b13 * b23 / (T::lit(24.0) * a * h.powi(2))
}

pub(super) fn k_pm_p_p<T: Real>(c: &Local<T>, s: T) -> T {
    let Local { h, a, a_1, a_2, a_3, b12, b12_1, b12_2, b12_3, b13, b13_1, b13_2, b13_3, b23, b23_1, b23_2, b23_3, c1, c2, c3, .. } = *c;
    s * b13_2 / (T::lit(48.0) * h)
        + s * b13 / (T::lit(24.0) * h.powi(2))
        + s * b12_3 / (T::lit(48.0) * h)
        + s * b23_1 / (T::lit(48.0) * h)
        + s * b12 * b13_1 / (T::lit(96.0) * a * h)
        + s * b12_1 * b13 / (T::lit(96.0) * a * h)
        + s * b13_3 * b23 / (T::lit(96.0) * a * h)
        + s * b12 * b23 / (T::lit(24.0) * a * h.powi(2))
        - s * a_3 * b13 * b23 / (T::lit(48.0) * h * a.powi(2))
        - s * a_2 * b12 * b23 / (T::lit(48.0) * h * a.powi(2))
        + b23 / (T::lit(24.0) * h.powi(2))
        + s * b13 * b23_3 / (T::lit(96.0) * a * h)
        + s * b23 * c1 / (T::lit(48.0) * a * h)
        + b12 * b13 / (T::lit(24.0) * a * h.powi(2))
        + s * b12 / (T::lit(24.0) * h.powi(2))
        - s * a_2 * b13 / (T::lit(48.0) * a * h)
        - s * a_3 * b12 / (T::lit(48.0) * a * h)
        - s * a_1 * b12 * b13 / (T::lit(48.0) * h * a.powi(2))
        - s * a_1 * b23 / (T::lit(48.0) * a * h)
        + s * b12 * b23_2 / (T::lit(96.0) * a * h)
        + s * b12_2 * b23 / (T::lit(96.0) * a * h)
        + s * b12 * c3 / (T::lit(48.0) * a * h)
        + s * b13 * c2 / (T::lit(48.0) * a * h)
        + s * b13 * b23 / (T::lit(24.0) * a * h.powi(2))
}

pub(super) fn k_pm_z_m<T: Real>(c: &Local<T>, s: T) -> T {
    let Local { h, a, a_1, a_2, a_3, b12, b13, b13_1, b13_11, b13_12, b13_13, b13_2, b13_22, b13_23, b13_3, b13_33, b23, c1, c1_1, c1_2, c1_3, c2, c3, c3_1, c3_2, c3_3, .. } = *c;
    - s * c3_1 / T::lit(24.0)
        - s * b13 / (T::lit(6.0) * h.powi(2))
        - c3 / (T::lit(12.0) * h)
        - b13_1 / (T::lit(12.0) * h)
        - s * a_2 * b13 * b23 / (T::lit(24.0) * h * a.powi(2))
        - s * b13_11 / T::lit(48.0)
        - s * b13_22 / T::lit(48.0)
        - s * b13_33 / T::lit(48.0)
        + s * b13_3 / (T::lit(12.0) * h)
        + s * a_3 * b13_3 / (T::lit(24.0) * a)
        - s * b12 * c3_2 / (T::lit(48.0) * a)
        - s * b13 * c3_3 / (T::lit(48.0) * a)
        + s * a_1 * b13_1 / (T::lit(24.0) * a)
        - s * b13_2 * c2 / (T::lit(48.0) * a)
        + a / (T::lit(6.0) * h.powi(2))
        + s * a_3 * c1 / (T::lit(24.0) * a)
        - s * b13 * c1_1 / (T::lit(48.0) * a)
        - s * b13_1 * c1 / (T::lit(48.0) * a)
        - s * b13_23 * b23 / (T::lit(48.0) * a)
        + s * a_1 * c3 / (T::lit(24.0) * a)
        - s * c1 * c3 / (T::lit(24.0) * a)
        + s * a_2 * b13_2 / (T::lit(24.0) * a)
        - s * b13_3 * c3 / (T::lit(48.0) * a)
        - s * b12 * b13_12 / (T::lit(48.0) * a)
        + s * b13 * b13_1 / (T::lit(24.0) * a * h)
        + s * b13_2 * b23 / (T::lit(24.0) * a * h)
        - s * a_1 * b13.powi(2) / (T::lit(24.0) * h * a.powi(2))
        + s * b13 * c3 / (T::lit(12.0) * a * h)
        - s * a_3 * b13 / (T::lit(12.0) * a * h)
        + a_2 * b12 * b13 / (T::lit(24.0) * h * a.powi(2))
        + s * c1 / (T::lit(12.0) * h)
        + b13.powi(2) / (T::lit(12.0) * a * h.powi(2))
        - s * b13 * b13_13 / (T::lit(48.0) * a)
        - s * b23 * c1_2 / (T::lit(48.0) * a)
        + s * b12 * b23 / (T::lit(12.0) * a * h.powi(2))
        + a_3 * b13.powi(2) / (T::lit(24.0) * h * a.powi(2))
        + s * a_1 * b13 * c1 / (T::lit(48.0) * a.powi(2))
        + s * a_1 * b12 * b13_2 / (T::lit(48.0) * a.powi(2))
        + s * a_2 * b23 * c1 / (T::lit(48.0) * a.powi(2))
        + s * a_1 * b13 * b13_3 / (T::lit(48.0) * a.powi(2))
        + s * a_3 * b13_2 * b23 / (T::lit(48.0) * a.powi(2))
        + s * a_3 * b13 * b13_1 / (T::lit(48.0) * a.powi(2))
        + s * a_2 * b13_3 * b23 / (T::lit(48.0) * a.powi(2))
        - s * c1_3 / T::lit(24.0)
        + s * a_2 * b12 * b13_1 / (T::lit(48.0) * a.powi(2))
        + a_1 * b13 / (T::lit(12.0) * a * h)
        - b13 * c1 / (T::lit(12.0) * a * h)
        + s * a_2 * b12 * c3 / (T::lit(48.0) * a.powi(2))
        - b13 * b13_3 / (T::lit(24.0) * a * h)
        + s * a_3 * b13 * c3 / (T::lit(48.0) * a.powi(2))
        - b12 * b13_2 / (T::lit(24.0) * a * h)
}

pub(super) fn k_z_pm_m<T: Real>(c: &Local<T>, s: T) -> T {
    let Local { h, a, a_1, a_2, a_3, b12, b13, b23, b23_1, b23_11, b23_12, b23_13, b23_2, b23_22, b23_23, b23_3, b23_33, c1, c2, c2_1, c2_2, c2_3, c3, c3_1, c3_2, c3_3, .. } = *c;
    - s * c3_2 / T::lit(24.0)
        - s * b23 / (T::lit(6.0) * h.powi(2))
        - b23_2 / (T::lit(12.0) * h)
        - c3 / (T::lit(12.0) * h)
        - s * a_1 * b13 * b23 / (T::lit(24.0) * h * a.powi(2))
        - s * b23_11 / T::lit(48.0)
        - s * b23_22 / T::lit(48.0)
        - s * b23_33 / T::lit(48.0)
        - s * b12 * c3_1 / (T::lit(48.0) * a)
        + s * a_3 * b23_3 / (T::lit(24.0) * a)
        - s * b23 * c2_2 / (T::lit(48.0) * a)
        - s * b23 * c3_3 / (T::lit(48.0) * a)
        + s * a_2 * c3 / (T::lit(24.0) * a)
        + s * a_1 * b23_1 / (T::lit(24.0) * a)
        - s * c2 * c3 / (T::lit(24.0) * a)
        - s * b23_3 * c3 / (T::lit(48.0) * a)
        - s * b12 * b23_12 / (T::lit(48.0) * a)
        - s * b13 * c2_1 / (T::lit(48.0) * a)
        - s * b13 * b23_13 / (T::lit(48.0) * a)
        + s * a_2 * b23_2 / (T::lit(24.0) * a)
        + s * a_3 * c2 / (T::lit(24.0) * a)
        + a_1 * b12 * b23 / (T::lit(24.0) * h * a.powi(2))
        + s * c2 / (T::lit(12.0) * h)
        + a / (T::lit(6.0) * h.powi(2))
        + s * b23 * c3 / (T::lit(12.0) * a * h)
        - s * a_3 * b23 / (T::lit(12.0) * a * h)
        + s * b13 * b23_1 / (T::lit(24.0) * a * h)
        + s * b23 * b23_2 / (T::lit(24.0) * a * h)
        + b23.powi(2) / (T::lit(12.0) * a * h.powi(2))
        - s * a_2 * b23.powi(2) / (T::lit(24.0) * h * a.powi(2))
        - s * b23 * b23_23 / (T::lit(48.0) * a)
        - s * b23_2 * c2 / (T::lit(48.0) * a)
        - s * b23_1 * c1 / (T::lit(48.0) * a)
        + s * b12 * b13 / (T::lit(12.0) * a * h.powi(2))
        - b23 * c2 / (T::lit(12.0) * a * h)
        + s * a_3 * b23 * c3 / (T::lit(48.0) * a.powi(2))
        + s * a_3 * b23 * b23_2 / (T::lit(48.0) * a.powi(2))
        + a_2 * b23 / (T::lit(12.0) * a * h)
        + s * a_1 * b12 * c3 / (T::lit(48.0) * a.powi(2))
        + s * a_1 * b13 * b23_3 / (T::lit(48.0) * a.powi(2))
        + s * a_2 * b23 * b23_3 / (T::lit(48.0) * a.powi(2))
        + s * a_2 * b23 * c2 / (T::lit(48.0) * a.powi(2))
        + s * a_1 * b12 * b23_2 / (T::lit(48.0) * a.powi(2))
        + s * a_1 * b13 * c2 / (T::lit(48.0) * a.powi(2))
        + s * a_3 * b13 * b23_1 / (T::lit(48.0) * a.powi(2))
        + s * a_2 * b12 * b23_1 / (T::lit(48.0) * a.powi(2))
        - b23 * b23_3 / (T::lit(24.0) * a * h)
        - b12 * b23_1 / (T::lit(24.0) * a * h)
        + a_3 * b23.powi(2) / (T::lit(24.0) * h * a.powi(2))
        + s * b23_3 / (T::lit(12.0) * h)
        - s * c2_3 / T::lit(24.0)
}

pub(super) fn k_pm_p_m<T: Real>(c: &Local<T>, s: T) -> T {
    let Local { h, a, a_1, a_2, a_3, b12, b12_1, b12_2, b12_3, b13, b13_1, b13_2, b13_3, b23, b23_1, b23_2, b23_3, c1, c2, c3, .. } = *c;
    - s * b13_2 / (T::lit(48.0) * h)
        - s * b13 / (T::lit(24.0) * h.powi(2))
        - s * b12_3 / (T::lit(48.0) * h)
        - s * b23_1 / (T::lit(48.0) * h)
        - s * b12 * b13_1 / (T::lit(96.0) * a * h)
        - s * b12_1 * b13 / (T::lit(96.0) * a * h)
        - s * b13_3 * b23 / (T::lit(96.0) * a * h)
        - s * b12 * b23 / (T::lit(24.0) * a * h.powi(2))
        + s * a_3 * b13 * b23 / (T::lit(48.0) * h * a.powi(2))
        + s * a_2 * b12 * b23 / (T::lit(48.0) * h * a.powi(2))
        - b23 / (T::lit(24.0) * h.powi(2))
        - s * b13 * b23_3 / (T::lit(96.0) * a * h)
        - s * b23 * c1 / (T::lit(48.0) * a * h)
        - b12 * b13 / (T::lit(24.0) * a * h.powi(2))
        + s * b12 / (T::lit(24.0) * h.powi(2))
        + s * a_2 * b13 / (T::lit(48.0) * a * h)
        + s * a_3 * b12 / (T::lit(48.0) * a * h)
        + s * a_1 * b12 * b13 / (T::lit(48.0) * h * a.powi(2))
        + s * a_1 * b23 / (T::lit(48.0) * a * h)
        - s * b12 * b23_2 / (T::lit(96.0) * a * h)
        - s * b12_2 * b23 / (T::lit(96.0) * a * h)
        - s * b12 * c3 / (T::lit(48.0) * a * h)
        - s * b13 * c2 / (T::lit(48.0) * a * h)
        + s * b13 * b23 / (T::lit(24.0) * a * h.powi(2))
}

pub(super) fn k_pm_m_p<T: Real>(c: &Local<T>, s: T) -> T {
    let Local { h, a, a_1, a_2, a_3, b12, b12_1, b12_2, b12_3, b13, b13_1, b13_2, b13_3, b23, b23_1, b23_2, b23_3, c1, c2, c3, .. } = *c;
    - s * b13_2 / (T::lit(48.0) * h)
        + s * b13 / (T::lit(24.0) * h.powi(2))
        - s * b12_3 / (T::lit(48.0) * h)
        - s * b23_1 / (T::lit(48.0) * h)
        - s * b12 * b13_1 / (T::lit(96.0) * a * h)
        - s * b12_1 * b13 / (T::lit(96.0) * a * h)
        - s * b13_3 * b23 / (T::lit(96.0) * a * h)
        + s * b12 * b23 / (T::lit(24.0) * a * h.powi(2))
        + s * a_3 * b13 * b23 / (T::lit(48.0) * h * a.powi(2))
        + s * a_2 * b12 * b23 / (T::lit(48.0) * h * a.powi(2))
        - b23 / (T::lit(24.0) * h.powi(2))
        - s * b13 * b23_3 / (T::lit(96.0) * a * h)
        - s * b23 * c1 / (T::lit(48.0) * a * h)
        - b12 * b13 / (T::lit(24.0) * a * h.powi(2))
        - s * b12 / (T::lit(24.0) * h.powi(2))
        + s * a_2 * b13 / (T::lit(48.0) * a * h)
        + s * a_3 * b12 / (T::lit(48.0) * a * h)
        + s * a_1 * b12 * b13 / (T::lit(48.0) * h * a.powi(2))
        + s * a_1 * b23 / (T::lit(48.0) * a * h)
        - s * b12 * b23_2 / (T::lit(96.0) * a * h)
        - s * b12_2 * b23 / (T::lit(96.0) * a * h)
        - s * b12 * c3 / (T::lit(48.0) * a * h)
        - s * b13 * c2 / (T::lit(48.0) * a * h)
        - s * b13 * b23 / (T::lit(24.0) * a * h.powi(2))
}

pub(super) fn k_pm_z_p<T: Real>(c: &Local<T>, s: T) -> T {
    let Local { h, a, a_1, a_2, a_3, b12, b13, b13_1, b13_11, b13_12, b13_13, b13_2, b13_22, b13_23, b13_3, b13_33, b23, c1, c1_1, c1_2, c1_3, c2, c3, c3_1, c3_2, c3_3, .. } = *c;
    s * c3_1 / T::lit(24.0)
        + s * b13 / (T::lit(6.0) * h.powi(2))
        + c3 / (T::lit(12.0) * h)
        + b13_1 / (T::lit(12.0) * h)
        - s * a_2 * b13 * b23 / (T::lit(24.0) * h * a.powi(2))
        + s * b13_11 / T::lit(48.0)
        + s * b13_22 / T::lit(48.0)
        + s * b13_33 / T::lit(48.0)
        + s * b13_3 / (T::lit(12.0) * h)
        - s * a_3 * b13_3 / (T::lit(24.0) * a)
        + s * b12 * c3_2 / (T::lit(48.0) * a)
        + s * b13 * c3_3 / (T::lit(48.0) * a)
        - s * a_1 * b13_1 / (T::lit(24.0) * a)
        + s * b13_2 * c2 / (T::lit(48.0) * a)
        + a / (T::lit(6.0) * h.powi(2))
        - s * a_3 * c1 / (T::lit(24.0) * a)
        + s * b13 * c1_1 / (T::lit(48.0) * a)
        + s * b13_1 * c1 / (T::lit(48.0) * a)
        + s * b13_23 * b23 / (T::lit(48.0) * a)
        - s * a_1 * c3 / (T::lit(24.0) * a)
        + s * c1 * c3 / (T::lit(24.0) * a)
        - s * a_2 * b13_2 / (T::lit(24.0) * a)
        + s * b13_3 * c3 / (T::lit(48.0) * a)
        + s * b12 * b13_12 / (T::lit(48.0) * a)
        + s * b13 * b13_1 / (T::lit(24.0) * a * h)
        + s * b13_2 * b23 / (T::lit(24.0) * a * h)
        - s * a_1 * b13.powi(2) / (T::lit(24.0) * h * a.powi(2))
        + s * b13 * c3 / (T::lit(12.0) * a * h)
        - s * a_3 * b13 / (T::lit(12.0) * a * h)
        - a_2 * b12 * b13 / (T::lit(24.0) * h * a.powi(2))
        + s * c1 / (T::lit(12.0) * h)
        + b13.powi(2) / (T::lit(12.0) * a * h.powi(2))
        + s * b13 * b13_13 / (T::lit(48.0) * a)
        + s * b23 * c1_2 / (T::lit(48.0) * a)
        - s * b12 * b23 / (T::lit(12.0) * a * h.powi(2))
        - a_3 * b13.powi(2) / (T::lit(24.0) * h * a.powi(2))
        - s * a_1 * b13 * c1 / (T::lit(48.0) * a.powi(2))
        - s * a_1 * b12 * b13_2 / (T::lit(48.0) * a.powi(2))
        - s * a_2 * b23 * c1 / (T::lit(48.0) * a.powi(2))
        - s * a_1 * b13 * b13_3 / (T::lit(48.0) * a.powi(2))
        - s * a_3 * b13_2 * b23 / (T::lit(48.0) * a.powi(2))
        + s * c1_3 / T::lit(24.0)
        - s * a_3 * b13 * b13_1 / (T::lit(48.0) * a.powi(2))
        - s * a_2 * b13_3 * b23 / (T::lit(48.0) * a.powi(2))
        - s * a_2 * b12 * b13_1 / (T::lit(48.0) * a.powi(2))
        - a_1 * b13 / (T::lit(12.0) * a * h)
        - s * a_2 * b12 * c3 / (T::lit(48.0) * a.powi(2))
        + b13 * b13_3 / (T::lit(24.0) * a * h)
        - s * a_3 * b13 * c3 / (T::lit(48.0) * a.powi(2))
        + b12 * b13_2 / (T::lit(24.0) * a * h)
        + b13 * c1 / (T::lit(12.0) * a * h)
}

pub(super) fn k_z_z_pm<T: Real>(c: &Local<T>, s: T) -> T {
    let Local { h, a, a_1, a_11, a_12, a_13, a_2, a_22, a_23, a_3, a_33, b12, b13, b13_1, b13_2, b13_3, b23, b23_1, b23_2, b23_3, c1, c2, c3, c3_1, c3_11, c3_12, c3_13, c3_2, c3_22, c3_23, c3_3, c3_33, .. } = *c;
    - a_2 * b23 * c3 / (T::lit(12.0) * a.powi(2))
        - a_1 * b13 * c3 / (T::lit(12.0) * a.powi(2))
        + c3_3 / T::lit(6.0)
        - s * b23_2 / (T::lit(6.0) * h)
        + s * c3 / (T::lit(6.0) * h)
        - s * b13_1 / (T::lit(6.0) * h)
        + s * c3_11 * h / T::lit(24.0)
        + s * c3_33 * h / T::lit(24.0)
        + s * c3_22 * h / T::lit(24.0)
        + c3.powi(2) / (T::lit(12.0) * a)
        + a_11 / T::lit(12.0)
        + a_22 / T::lit(12.0)
        + a_33 / T::lit(12.0)
        + s * a_1 * b12 * b23 / (T::lit(12.0) * h * a.powi(2))
        + s * a_2 * b12 * b13 / (T::lit(12.0) * h * a.powi(2))
        - s * a_1 * b13 * c3_3 * h / (T::lit(24.0) * a.powi(2))
        - s * a_1 * b12 * c3_2 * h / (T::lit(24.0) * a.powi(2))
        - s * a_2 * b23 * c3_3 * h / (T::lit(24.0) * a.powi(2))
        - s * a_3 * b23 * c3_2 * h / (T::lit(24.0) * a.powi(2))
        - a_1 * a_3 * b13 / (T::lit(6.0) * a.powi(2))
        - s * a_3 * b13 * c3_1 * h / (T::lit(24.0) * a.powi(2))
        - s * a_2 * b12 * c3_1 * h / (T::lit(24.0) * a.powi(2))
        + a / (T::lit(3.0) * h.powi(2))
        - a_2 * a_3 * b23 / (T::lit(6.0) * a.powi(2))
        - a_1 * a_2 * b12 / (T::lit(6.0) * a.powi(2))
        + b13 * c3_1 / (T::lit(12.0) * a)
        + a_1 * c1 / (T::lit(12.0) * a)
        - b23.powi(2) / (T::lit(6.0) * a * h.powi(2))
        + a_12 * b12 / (T::lit(12.0) * a)
        + a_2 * c2 / (T::lit(12.0) * a)
        - b13.powi(2) / (T::lit(6.0) * a * h.powi(2))
        - a_3 * c3 / (T::lit(12.0) * a)
        + a_13 * b13 / (T::lit(12.0) * a)
        + s * c2 * c3_2 * h / (T::lit(24.0) * a)
        + a_23 * b23 / (T::lit(12.0) * a)
        + b23 * c3_2 / (T::lit(12.0) * a)
        - s * b23 * c2 / (T::lit(6.0) * a * h)
        + s * a_2 * b23 / (T::lit(6.0) * a * h)
        - s * b23 * b23_3 / (T::lit(12.0) * a * h)
        - s * b12 * b23_1 / (T::lit(12.0) * a * h)
        + s * a_3 * b23.powi(2) / (T::lit(12.0) * h * a.powi(2))
        + s * a_3 * b13.powi(2) / (T::lit(12.0) * h * a.powi(2))
        + s * a_1 * b13 / (T::lit(6.0) * a * h)
        - s * b13 * b13_3 / (T::lit(12.0) * a * h)
        - s * b12 * b13_2 / (T::lit(12.0) * a * h)
        - s * b13 * c1 / (T::lit(6.0) * a * h)
        + s * b13 * c3_13 * h / (T::lit(24.0) * a)
        + s * c1 * c3_1 * h / (T::lit(24.0) * a)
        + s * b12 * c3_12 * h / (T::lit(24.0) * a)
        + s * b23 * c3_23 * h / (T::lit(24.0) * a)
        - s * a_1 * c3_1 * h / (T::lit(12.0) * a)
        - s * a_2 * c3_2 * h / (T::lit(12.0) * a)
        - s * a_3 * c3_3 * h / (T::lit(12.0) * a)
        + s * c3 * c3_3 * h / (T::lit(24.0) * a)
        - a_1.powi(2) / (T::lit(6.0) * a)
        - a_3.powi(2) / (T::lit(6.0) * a)
        - a_2.powi(2) / (T::lit(6.0) * a)
}

pub(super) fn k_z_pm_p<T: Real>(c: &Local<T>, s: T) -> T {
    let Local { h, a, a_1, a_2, a_3, b12, b13, b23, b23_1, b23_11, b23_12, b23_13, b23_2, b23_22, b23_23, b23_3, b23_33, c1, c2, c2_1, c2_2, c2_3, c3, c3_1, c3_2, c3_3, .. } = *c;
    s * c3_2 / T::lit(24.0)
        + s * b23 / (T::lit(6.0) * h.powi(2))
        + b23_2 / (T::lit(12.0) * h)
        + c3 / (T::lit(12.0) * h)
        - s * a_1 * b13 * b23 / (T::lit(24.0) * h * a.powi(2))
        + s * b23_11 / T::lit(48.0)
        + s * b23_22 / T::lit(48.0)
        + s * b23_33 / T::lit(48.0)
        + s * b12 * c3_1 / (T::lit(48.0) * a)
        - s * a_3 * b23_3 / (T::lit(24.0) * a)
        + s * b23 * c2_2 / (T::lit(48.0) * a)
        + s * b23 * c3_3 / (T::lit(48.0) * a)
        - s * a_2 * c3 / (T::lit(24.0) * a)
        - s * a_1 * b23_1 / (T::lit(24.0) * a)
        + s * c2 * c3 / (T::lit(24.0) * a)
        + s * b23_3 * c3 / (T::lit(48.0) * a)
        + s * b12 * b23_12 / (T::lit(48.0) * a)
        + s * b13 * c2_1 / (T::lit(48.0) * a)
        + s * b13 * b23_13 / (T::lit(48.0) * a)
        - s * a_2 * b23_2 / (T::lit(24.0) * a)
        - s * a_3 * c2 / (T::lit(24.0) * a)
        - a_1 * b12 * b23 / (T::lit(24.0) * h * a.powi(2))
        + s * c2 / (T::lit(12.0) * h)
        + a / (T::lit(6.0) * h.powi(2))
        + s * b23 * c3 / (T::lit(12.0) * a * h)
        - s * a_3 * b23 / (T::lit(12.0) * a * h)
        + s * b13 * b23_1 / (T::lit(24.0) * a * h)
        + s * b23 * b23_2 / (T::lit(24.0) * a * h)
        + b23 * c2 / (T::lit(12.0) * a * h)
        - s * a_2 * b23.powi(2) / (T::lit(24.0) * h * a.powi(2))
        + b23.powi(2) / (T::lit(12.0) * a * h.powi(2))
        + s * b23 * b23_23 / (T::lit(48.0) * a)
        + s * b23_2 * c2 / (T::lit(48.0) * a)
        + s * b23_1 * c1 / (T::lit(48.0) * a)
        - s * b12 * b13 / (T::lit(12.0) * a * h.powi(2))
        - a_2 * b23 / (T::lit(12.0) * a * h)
        - s * a_3 * b23 * b23_2 / (T::lit(48.0) * a.powi(2))
        - s * a_3 * b23 * c3 / (T::lit(48.0) * a.powi(2))
        - s * a_1 * b12 * c3 / (T::lit(48.0) * a.powi(2))
        - s * a_1 * b13 * b23_3 / (T::lit(48.0) * a.powi(2))
        - s * a_2 * b23 * b23_3 / (T::lit(48.0) * a.powi(2))
        - s * a_2 * b23 * c2 / (T::lit(48.0) * a.powi(2))
        - s * a_1 * b12 * b23_2 / (T::lit(48.0) * a.powi(2))
        - s * a_1 * b13 * c2 / (T::lit(48.0) * a.powi(2))
        - s * a_3 * b13 * b23_1 / (T::lit(48.0) * a.powi(2))
        - s * a_2 * b12 * b23_1 / (T::lit(48.0) * a.powi(2))
        + b23 * b23_3 / (T::lit(24.0) * a * h)
        + b12 * b23_1 / (T::lit(24.0) * a * h)
        - a_3 * b23.powi(2) / (T::lit(24.0) * h * a.powi(2))
        + s * b23_3 / (T::lit(12.0) * h)
        + s * c2_3 / T::lit(24.0)
}
