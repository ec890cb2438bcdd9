//! Library-wide series truncation policy.
//!
//! Summation stops once three consecutive terms are below machine epsilon
//! relative to the partial sum; hitting the term cap is a convergence error.
//! The cap defaults to 10 000 and can be overridden with the
//! `WRIGHTLAB_MAX_TERMS` environment variable.

use std::sync::OnceLock;

pub const DEFAULT_MAX_TERMS: usize = 10_000;

/// Consecutive negligible terms required before a series is declared converged.
pub const CONVERGED_STREAK: usize = 3;

static MAX_TERMS: OnceLock<usize> = OnceLock::new();

pub fn max_terms() -> usize {
    *MAX_TERMS.get_or_init(|| {
        std::env::var("WRIGHTLAB_MAX_TERMS")
            .ok()
            .and_then(|s| s.parse::<usize>().ok())
            .filter(|&n| n > 0)
            .unwrap_or(DEFAULT_MAX_TERMS)
    })
}

/// Tracks the three-consecutive-small-terms stopping rule in log space.
#[derive(Debug, Default)]
pub struct Convergence {
    streak: usize,
}

impl Convergence {
    pub fn new() -> Self {
        Convergence { streak: 0 }
    }

    /// Feed one term; returns true once the stopping rule is satisfied.
    /// `term_log` and `sum_log` are natural-log magnitudes.
    pub fn update(&mut self, term_log: f64, sum_log: f64) -> bool {
        let threshold = sum_log + f64::EPSILON.ln();
        if term_log < threshold || term_log == f64::NEG_INFINITY {
            self.streak += 1;
        } else {
            self.streak = 0;
        }
        self.streak >= CONVERGED_STREAK
    }
}
