//! Piecewise-linear attribution boosting.
//!
//! `boost_general` scales every input at or above a threshold `beta` by
//! `alpha` while leaving the rest untouched; with `beta = 0` this reduces to
//! `max(x, alpha * x)`, which amplifies positive attribution scores and
//! passes negative ones through. The derivative is `alpha` on the boosted
//! branch and `1` below it; the threshold itself belongs to the boosted
//! branch.

use crate::error::{Error, Result};
use crate::tape::{Tape, TensorId};

/// Scaling factor and threshold for the boost activation.
///
/// `alpha = 1` is the identity, which lets unboosted configurations share
/// the boosted code path.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoostParams {
    pub alpha: f64,
    pub beta: f64,
}

impl BoostParams {
    pub const DEFAULT_ALPHA: f64 = 5.0;
    pub const DEFAULT_BETA: f64 = 0.0;

    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !(alpha >= 1.0) {
            return Err(Error::Config(format!("boost alpha must be >= 1, got {alpha}")));
        }
        if !beta.is_finite() {
            return Err(Error::Config(format!("boost beta must be finite, got {beta}")));
        }
        Ok(BoostParams { alpha, beta })
    }

    pub fn identity() -> Self {
        BoostParams { alpha: 1.0, beta: 0.0 }
    }

    pub fn is_identity(&self) -> bool {
        self.alpha == 1.0
    }
}

impl Default for BoostParams {
    fn default() -> Self {
        BoostParams { alpha: Self::DEFAULT_ALPHA, beta: Self::DEFAULT_BETA }
    }
}

/// General thresholded form: `alpha * x + (1 - alpha) * beta` for
/// `x >= beta`, else `x`. Continuous at `x = beta`.
#[inline]
pub fn boost_general(x: f64, alpha: f64, beta: f64) -> f64 {
    if x >= beta {
        alpha * x + (1.0 - alpha) * beta
    } else {
        x
    }
}

/// Zero-threshold form: `max(x, alpha * x)` for `alpha >= 1`.
#[inline]
pub fn boost(x: f64, alpha: f64) -> f64 {
    f64::max(x, alpha * x)
}

/// Per-element derivative factor: `alpha` on the boosted branch
/// (`x >= beta`, threshold included), else `1`.
#[inline]
pub fn boost_grad(x: f64, alpha: f64, beta: f64) -> f64 {
    if x >= beta {
        alpha
    } else {
        1.0
    }
}

/// Applies the boost elementwise as a recorded tape operation; the backward
/// rule multiplies incoming gradients by [`boost_grad`] per element.
pub fn boost_map(tape: &mut Tape, map: TensorId, params: BoostParams) -> TensorId {
    tape.boost(map, params.alpha, params.beta)
}
