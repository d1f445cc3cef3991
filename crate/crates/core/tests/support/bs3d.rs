//! Black-Scholes 3D K weights in closed form, used as an oracle.

use super::BsParams;
use hoc_core::Real;

pub(super) fn k_z_z_z<T: Real>(c: &BsParams<T>, _s: T) -> T {
    let BsParams { h, gamma, rho12, rho13, rho23, vs1, vs2, vs3, .. } = *c;
    vs1.powi(2) / T::lit(3.0)
        + vs2.powi(2) / T::lit(3.0)
        + vs3.powi(2) / T::lit(3.0)
        - T::lit(2.0) * gamma.powi(2) * rho12.powi(2) / (T::lit(3.0) * h.powi(2))
        - T::lit(2.0) * gamma.powi(2) * rho13.powi(2) / (T::lit(3.0) * h.powi(2))
        - T::lit(2.0) * gamma.powi(2) * rho23.powi(2) / (T::lit(3.0) * h.powi(2))
        + T::lit(2.0) * gamma.powi(2) / h.powi(2)
}

pub(super) fn k_pm_z_z<T: Real>(c: &BsParams<T>, s: T) -> T {
    let BsParams { h, gamma, rho12, rho13, vs1, vs2, vs3, .. } = *c;
    s * gamma * vs1 / (T::lit(6.0) * h)
        - vs1.powi(2) / T::lit(6.0)
        - s * gamma * rho12 * vs2 / (T::lit(3.0) * h)
        + gamma.powi(2) * rho12.powi(2) / (T::lit(3.0) * h.powi(2))
        - gamma.powi(2) / (T::lit(6.0) * h.powi(2))
        - s * gamma * rho13 * vs3 / (T::lit(3.0) * h)
        + gamma.powi(2) * rho13.powi(2) / (T::lit(3.0) * h.powi(2))
}

pub(super) fn k_z_pm_z<T: Real>(c: &BsParams<T>, s: T) -> T {
    let BsParams { h, gamma, rho12, rho23, vs1, vs2, vs3, .. } = *c;
    s * gamma * vs2 / (T::lit(6.0) * h)
        - vs2.powi(2) / T::lit(6.0)
        - s * gamma * rho12 * vs1 / (T::lit(3.0) * h)
        + gamma.powi(2) * rho12.powi(2) / (T::lit(3.0) * h.powi(2))
        - gamma.powi(2) / (T::lit(6.0) * h.powi(2))
        - s * gamma * rho23 * vs3 / (T::lit(3.0) * h)
        + gamma.powi(2) * rho23.powi(2) / (T::lit(3.0) * h.powi(2))
}

pub(super) fn k_z_z_pm<T: Real>(c: &BsParams<T>, s: T) -> T {
    let BsParams { h, gamma, rho13, rho23, vs1, vs2, vs3, .. } = *c;
    s * gamma * vs3 / (T::lit(6.0) * h)
        - vs3.powi(2) / T::lit(6.0)
        - s * gamma * rho13 * vs1 / (T::lit(3.0) * h)
        + gamma.powi(2) * rho13.powi(2) / (T::lit(3.0) * h.powi(2))
        - gamma.powi(2) / (T::lit(6.0) * h.powi(2))
        - s * gamma * rho23 * vs2 / (T::lit(3.0) * h)
        + gamma.powi(2) * rho23.powi(2) / (T::lit(3.0) * h.powi(2))
}

pub(super) fn k_pm_m_z<T: Real>(c: &BsParams<T>, s: T) -> T {
    let BsParams { h, gamma, rho12, rho13, rho23, vs1, vs2, .. } = *c;
    - gamma * (- s * vs1 + vs2) / (T::lit(12.0) * h)
        + s * vs1 * vs2 / T::lit(12.0)
        - gamma.powi(2) / (T::lit(12.0) * h.powi(2))
        - gamma * rho12 * (- s * vs2 + vs1) / (T::lit(6.0) * h)
        - gamma.powi(2) * (rho12.powi(2) - rho12 * s + rho13 * rho23 * s) / (T::lit(6.0) * h.powi(2))
}

pub(super) fn k_pm_p_z<T: Real>(c: &BsParams<T>, s: T) -> T {
    let BsParams { h, gamma, rho12, rho13, rho23, vs1, vs2, .. } = *c;
    gamma * (s * vs1 + vs2) / (T::lit(12.0) * h)
        - s * vs1 * vs2 / T::lit(12.0)
        - gamma.powi(2) / (T::lit(12.0) * h.powi(2))
        + gamma * rho12 * (s * vs2 + vs1) / (T::lit(6.0) * h)
        - gamma.powi(2) * (rho12.powi(2) + rho12 * s - rho13 * rho23 * s) / (T::lit(6.0) * h.powi(2))
}

pub(super) fn k_pm_z_m<T: Real>(c: &BsParams<T>, s: T) -> T {
    let BsParams { h, gamma, rho12, rho13, rho23, vs1, vs3, .. } = *c;
    - gamma * (- s * vs1 + vs3) / (T::lit(12.0) * h)
        + s * vs1 * vs3 / T::lit(12.0)
        - gamma.powi(2) / (T::lit(12.0) * h.powi(2))
        - gamma * rho13 * (- s * vs3 + vs1) / (T::lit(6.0) * h)
        - gamma.powi(2) * (rho12 * rho23 * s + rho13.powi(2) - rho13 * s) / (T::lit(6.0) * h.powi(2))
}

pub(super) fn k_pm_z_p<T: Real>(c: &BsParams<T>, s: T) -> T {
    let BsParams { h, gamma, rho12, rho13, rho23, vs1, vs3, .. } = *c;
    gamma * (s * vs1 + vs3) / (T::lit(12.0) * h)
        - s * vs1 * vs3 / T::lit(12.0)
        - gamma.powi(2) / (T::lit(12.0) * h.powi(2))
        + gamma * rho13 * (s * vs3 + vs1) / (T::lit(6.0) * h)
        - gamma.powi(2) * (- rho12 * rho23 * s + rho13.powi(2) + rho13 * s) / (T::lit(6.0) * h.powi(2))
}

pub(super) fn k_z_pm_m<T: Real>(c: &BsParams<T>, s: T) -> T {
    let BsParams { h, gamma, rho12, rho13, rho23, vs2, vs3, .. } = *c;
    - gamma * (- s * vs2 + vs3) / (T::lit(12.0) * h)
        + s * vs2 * vs3 / T::lit(12.0)
        - gamma.powi(2) / (T::lit(12.0) * h.powi(2))
        - gamma * rho23 * (- s * vs3 + vs2) / (T::lit(6.0) * h)
        - gamma.powi(2) * (rho12 * rho13 * s + rho23.powi(2) - rho23 * s) / (T::lit(6.0) * h.powi(2))
}

pub(super) fn k_z_pm_p<T: Real>(c: &BsParams<T>, s: T) -> T {
    let BsParams { h, gamma, rho12, rho13, rho23, vs2, vs3, .. } = *c;
    gamma * (s * vs2 + vs3) / (T::lit(12.0) * h)
        - s * vs2 * vs3 / T::lit(12.0)
        - gamma.powi(2) / (T::lit(12.0) * h.powi(2))
        + gamma * rho23 * (s * vs3 + vs2) / (T::lit(6.0) * h)
        - gamma.powi(2) * (- rho12 * rho13 * s + rho23.powi(2) + rho23 * s) / (T::lit(6.0) * h.powi(2))
}

pub(super) fn k_pm_m_m<T: Real>(c: &BsParams<T>, s: T) -> T {
    let BsParams { h, gamma, rho12, rho13, rho23, vs1, vs2, vs3, .. } = *c;
    s * gamma * (rho12 * vs3 + rho13 * vs2 + rho23 * vs1) / (T::lit(24.0) * h)
        - gamma.powi(2) * (- rho12 * s - rho13 * s + rho23) / (T::lit(24.0) * h.powi(2))
        - gamma.powi(2) * (rho12 * rho13 - rho12 * rho23 * s - rho13 * rho23 * s) / (T::lit(12.0) * h.powi(2))
}

pub(super) fn k_pm_p_m<T: Real>(c: &BsParams<T>, s: T) -> T {
    let BsParams { h, gamma, rho12, rho13, rho23, vs1, vs2, vs3, .. } = *c;
    - s * gamma * (rho12 * vs3 + rho13 * vs2 + rho23 * vs1) / (T::lit(24.0) * h)
        + gamma.powi(2) * (- rho12 * s + rho13 * s + rho23) / (T::lit(24.0) * h.powi(2))
        + gamma.powi(2) * (rho12 * rho13 + rho12 * rho23 * s - rho13 * rho23 * s) / (T::lit(12.0) * h.powi(2))
}

pub(super) fn k_pm_m_p<T: Real>(c: &BsParams<T>, s: T) -> T {
    let BsParams { h, gamma, rho12, rho13, rho23, vs1, vs2, vs3, .. } = *c;
    - s * gamma * (rho12 * vs3 + rho13 * vs2 + rho23 * vs1) / (T::lit(24.0) * h)
        + gamma.powi(2) * (rho12 * s - rho13 * s + rho23) / (T::lit(24.0) * h.powi(2))
        + gamma.powi(2) * (rho12 * rho13 - rho12 * rho23 * s + rho13 * rho23 * s) / (T::lit(12.0) * h.powi(2))
}

pub(super) fn k_pm_p_p<T: Real>(c: &BsParams<T>, s: T) -> T {
    let BsParams { h, gamma, rho12, rho13, rho23, vs1, vs2, vs3, .. } = *c;
    s * gamma * (rho12 * vs3 + rho13 * vs2 + rho23 * vs1) / (T::lit(24.0) * h)
        - gamma.powi(2) * (rho12 * s + rho13 * s + rho23) / (T::lit(24.0) * h.powi(2))
        - gamma.powi(2) * (rho12 * rho13 + rho12 * rho23 * s + rho13 * rho23 * s) / (T::lit(12.0) * h.powi(2))
}

