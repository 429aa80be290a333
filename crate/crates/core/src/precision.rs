//! Precision configuration and the common result type for series evaluation.

use crate::num::{Complex64, Cplx};
use serde::Serialize;

/// Controls working precision, accuracy targets, and summation cutoffs.
///
/// `ladder` may be left empty, in which case evaluators derive a geometric
/// cutoff ladder from the target error and the decay rate of the sum at hand,
/// capped by `max_cutoff`.
#[derive(Clone, Debug)]
pub struct PrecisionConfig {
    /// Mantissa bits for scalar series and coefficient arithmetic (>= 64).
    pub working_prec: u32,
    /// Requested absolute error.
    pub target_abs_error: f64,
    /// Hard cap on any summation cutoff.
    pub max_cutoff: u64,
    /// Explicit cutoff ladder (strictly increasing). Empty = choose automatically.
    pub ladder: Vec<u64>,
}

impl Default for PrecisionConfig {
    fn default() -> Self {
        PrecisionConfig {
            working_prec: 128,
            target_abs_error: 1e-10,
            max_cutoff: 100_000,
            ladder: Vec::new(),
        }
    }
}

impl PrecisionConfig {
    /// Defaults used for double (rank-2) lattice sums: 1e-10 target, cutoffs up to 1e5.
    pub fn double_sum() -> Self {
        PrecisionConfig::default()
    }

    /// Defaults used for triple (rank-3) lattice sums: 1e-4 target, cutoffs up to 2000.
    pub fn triple_sum() -> Self {
        PrecisionConfig {
            target_abs_error: 1e-4,
            max_cutoff: 2000,
            ..PrecisionConfig::default()
        }
    }

    /// Target accuracy for high-precision scalar series (zeta, polylog, ...):
    /// the configured target, but never coarser than what the working
    /// precision can hold with ~8 guard bits.
    pub fn scalar_target(&self) -> f64 {
        let eps = 2f64.powi(-(self.working_prec as i32) + 8);
        self.target_abs_error.min(1e-20).max(eps)
    }

    pub fn validate(&self) -> Result<(), String> {
        if self.working_prec < 64 {
            return Err("working precision must be at least 64 bits".into());
        }
        if !(self.target_abs_error > 0.0) {
            return Err("target_abs_error must be positive".into());
        }
        if !self.ladder.windows(2).all(|w| w[0] < w[1]) {
            return Err("ladder must be strictly increasing".into());
        }
        if let Some(&last) = self.ladder.last() {
            if last > self.max_cutoff {
                return Err("max_cutoff must be >= the last ladder entry".into());
            }
        }
        Ok(())
    }
}

/// One recorded partial sum of a cutoff ladder.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct LadderPoint {
    pub cutoff: u64,
    pub partial_re: f64,
    pub partial_im: f64,
}

impl LadderPoint {
    pub fn partial(&self) -> Complex64 {
        Complex64::new(self.partial_re, self.partial_im)
    }
}

/// Value of a series together with an error estimate and summation metadata.
#[derive(Clone, Debug)]
pub struct SeriesResult {
    pub value: Cplx,
    pub abs_error_estimate: f64,
    pub cutoff_used: u64,
    pub accelerated: bool,
    pub terms_summed: u64,
    /// Recorded ladder partials when acceleration was applied.
    pub ladder: Vec<LadderPoint>,
}

impl SeriesResult {
    pub fn exactish(value: Cplx, err: f64, terms: u64) -> Self {
        SeriesResult {
            value,
            abs_error_estimate: err,
            cutoff_used: terms,
            accelerated: false,
            terms_summed: terms,
            ladder: Vec::new(),
        }
    }

    pub fn value_c64(&self) -> Complex64 {
        self.value.to_c64()
    }

    /// Did the evaluation meet the requested target?
    pub fn met(&self, target: f64) -> bool {
        self.abs_error_estimate.is_finite() && self.abs_error_estimate <= target
    }
}

#[derive(thiserror::Error, Debug)]
pub enum SeriesError {
    #[error("pole at s = 1")]
    PoleAtOne,
    #[error("divergent series: {0}")]
    Divergent(String),
    #[error("exponents outside the documented absolute-convergence region: {0}")]
    OutsideConvergence(String),
    #[error("accuracy target {target:.3e} not reached (best estimate {achieved:.3e})")]
    AccuracyNotReached {
        target: f64,
        achieved: f64,
        best: Box<SeriesResult>,
    },
    #[error("unsupported input: {0}")]
    Unsupported(String),
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_validation() {
        assert!(PrecisionConfig::default().validate().is_ok());
        let bad = PrecisionConfig {
            ladder: vec![100, 100],
            ..Default::default()
        };
        assert!(bad.validate().is_err());
        let bad2 = PrecisionConfig {
            ladder: vec![10, 20],
            max_cutoff: 15,
            ..Default::default()
        };
        assert!(bad2.validate().is_err());
    }
}
