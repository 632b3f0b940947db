//! Bounds on the threshold `f(Δ)`: the least chromatic number that forces
//! `vs_χ = ivs_χ` for every graph of maximum degree `Δ`.

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
pub enum FBoundsError {
    #[error("k_delta needs delta >= 2, got {0}")]
    KDeltaTooSmall(u64),
    #[error("f(delta) bounds need delta >= 3, got {0}")]
    DeltaTooSmall(u64),
}

/// Largest `k` with `(k+1)(k+2) <= delta`, in integer arithmetic.
pub fn k_delta(delta: u64) -> Result<u64, FBoundsError> {
    if delta < 2 {
        return Err(FBoundsError::KDeltaTooSmall(delta));
    }
    let fits = |k: u64| (k + 1).checked_mul(k + 2).is_some_and(|p| p <= delta);
    // start near sqrt(delta) - 1 and correct in both directions
    let mut k = delta.isqrt().saturating_sub(1);
    while k > 0 && !fits(k) {
        k -= 1;
    }
    while fits(k + 1) {
        k += 1;
    }
    Ok(k)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FBounds {
    pub delta: u64,
    pub k_delta: u64,
    /// Proven lower bound on `f(Δ)`.
    pub lower: u64,
    /// Unconditional upper bound `f(Δ) <= Δ`.
    pub upper: u64,
    /// The sharper bound `Δ + 2 - k_Δ`, known only for sufficiently large `Δ`.
    pub asymptotic_upper: Option<u64>,
    /// True when `asymptotic_upper` is present: that bound carries no
    /// explicit threshold on `Δ`.
    pub upper_is_asymptotic: bool,
    /// True when `lower == upper` is established outright.
    pub exact: bool,
}

/// Whether `delta` lies in `[(k+1)(k+2), k^2+4k+1]` for `k = k_Δ >= 1`,
/// where the lower bound improves by one.
pub fn in_improved_window(delta: u64) -> bool {
    match k_delta(delta) {
        Ok(k) if k >= 1 => (k + 1) * (k + 2) <= delta && delta <= k * k + 4 * k + 1,
        _ => false,
    }
}

pub fn f_bounds(delta: u64) -> Result<FBounds, FBoundsError> {
    if delta < 3 {
        return Err(FBoundsError::DeltaTooSmall(delta));
    }
    let k = k_delta(delta)?;
    if delta <= 10 {
        return Ok(FBounds {
            delta,
            k_delta: k,
            lower: delta,
            upper: delta,
            asymptotic_upper: None,
            upper_is_asymptotic: false,
            exact: true,
        });
    }
    let lower = if in_improved_window(delta) {
        delta + 2 - k
    } else {
        delta + 1 - k
    };
    Ok(FBounds {
        delta,
        k_delta: k,
        lower,
        upper: delta,
        asymptotic_upper: Some(delta + 2 - k),
        upper_is_asymptotic: true,
        exact: false,
    })
}
