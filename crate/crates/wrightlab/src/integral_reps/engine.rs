//! The spec-facing semi-infinite quadrature driver: decay-hinted tail
//! truncation, t = v^2 substitution on the first panel for integrable
//! endpoint behavior, adaptive Gauss-Kronrod underneath.

use crate::error::{Result, WrightError};
use crate::quad;

/// Tail-decay hint for truncating the infinite upper limit.
#[derive(Debug, Clone, Copy)]
pub enum Decay {
    /// |f(t)| eventually bounded by C e^{-rate t}
    Exponential { rate: f64 },
    /// |f(t)| eventually bounded by C e^{-(t/scale)^2}
    Gaussian { scale: f64 },
    /// |f(t)| eventually bounded by C t^{-power}, power > 1
    Algebraic { power: f64 },
}

#[derive(Debug, Clone, Copy)]
pub struct QuadResult {
    pub value: f64,
    pub abs_err_estimate: f64,
    pub evaluations: usize,
    /// upper limit substituted for infinity
    pub truncation_point: f64,
}

fn tail_bound(decay: Decay, f_at: f64, t: f64) -> f64 {
    match decay {
        Decay::Exponential { rate } => f_at.abs() / rate.max(1e-8),
        Decay::Gaussian { scale } => {
            let s = scale.max(1e-8);
            f_at.abs() * s * s / (2.0 * t.max(s))
        }
        Decay::Algebraic { power } => {
            if power <= 1.0 {
                f64::INFINITY
            } else {
                f_at.abs() * t / (power - 1.0)
            }
        }
    }
}

/// Integrates f over (0, inf) to absolute tolerance `tol`.
///
/// The integrand must be finite on (0, inf); an integrable singularity at the
/// origin is tolerated (the first panel is evaluated under t = v^2).
pub fn quad_semi_infinite<F: Fn(f64) -> f64>(f: F, decay: Decay, tol: f64) -> Result<QuadResult> {
    // locate the magnitude scale on a coarse geometric probe
    let mut peak = 0.0f64;
    let mut peak_t = 1.0f64;
    let mut t = 1.0 / 64.0;
    while t <= 64.0 {
        let v = f(t).abs();
        if v > peak {
            peak = v;
            peak_t = t;
        }
        t *= 2.0;
    }
    if peak == 0.0 {
        peak = 1.0;
    }
    // extend the truncation point until the hinted tail bound is negligible
    let mut trunc = (4.0 * peak_t).max(8.0);
    let budget = tol * peak / 10.0;
    for _ in 0..64 {
        let ft = f(trunc).abs();
        if ft < budget && tail_bound(decay, ft, trunc) < budget {
            break;
        }
        trunc *= 2.0;
        if trunc > 1e12 {
            return Err(WrightError::Accuracy {
                context: "quad_semi_infinite: truncation point ran away".into(),
                estimate: f64::INFINITY,
                requested: tol,
            });
        }
    }
    let tail_est = tail_bound(decay, f(trunc).abs(), trunc).min(budget);

    // first panel under t = v^2, remainder split geometrically
    let a = 1.0f64.min(trunc);
    let sub = |v: f64| f(v * v) * 2.0 * v;
    let r0 = quad::integrate(&sub, 0.0, a.sqrt(), tol / 4.0, 600);
    let mut value = r0.value;
    let mut err = r0.abs_err;
    let mut evals = r0.evaluations;
    if trunc > a {
        let mut pts = vec![a];
        let mut p = a.max(1.0);
        while p < trunc {
            p = (p * 4.0).min(trunc);
            pts.push(p);
        }
        let r1 = quad::integrate_segmented(&f, &pts, tol / 2.0, 2400);
        value += r1.value;
        err += r1.abs_err;
        evals += r1.evaluations;
    }
    err += tail_est;
    if !err.is_finite() || err > tol.max(1e-12 * value.abs()) * 20.0 {
        return Err(WrightError::Accuracy {
            context: format!("quad_semi_infinite: best value {value:.9e}"),
            estimate: err,
            requested: tol,
        });
    }
    Ok(QuadResult { value, abs_err_estimate: err, evaluations: evals, truncation_point: trunc })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponential_unit() {
        let r = quad_semi_infinite(|t| (-t).exp(), Decay::Exponential { rate: 1.0 }, 1e-12).unwrap();
        assert!((r.value - 1.0).abs() < 1e-12, "{}", r.value);
    }

    #[test]
    fn gaussian_moment() {
        // int_0^inf t exp(-t^2/4) dt = 2
        let r = quad_semi_infinite(
            |t| t * (-t * t / 4.0).exp(),
            Decay::Gaussian { scale: 2.0 },
            1e-12,
        )
        .unwrap();
        assert!((r.value - 2.0).abs() < 1e-12, "{}", r.value);
    }

    #[test]
    fn factorial_moment() {
        // int_0^inf e^{-t} t^19 dt = 19!
        let want = (2..=19u64).product::<u64>() as f64;
        let r = quad_semi_infinite(
            |t| (-t).exp() * t.powi(19),
            Decay::Exponential { rate: 0.5 },
            1e-6 * want,
        )
        .unwrap();
        assert!(((r.value - want) / want).abs() < 1e-10, "{}", r.value);
    }

    #[test]
    fn origin_singularity() {
        // int_0^inf t^{-1/2} e^{-t} dt = sqrt(pi)
        let r = quad_semi_infinite(
            |t| t.powf(-0.5) * (-t).exp(),
            Decay::Exponential { rate: 1.0 },
            1e-11,
        )
        .unwrap();
        assert!((r.value - std::f64::consts::PI.sqrt()).abs() < 1e-10, "{}", r.value);
    }

    #[test]
    fn honest_error_estimate() {
        let r = quad_semi_infinite(
            |t| (-t).exp() * (3.0 * t).sin().powi(2),
            Decay::Exponential { rate: 1.0 },
            1e-10,
        )
        .unwrap();
        // exact: int e^{-t} sin^2(3t) = 18/37
        let want = 18.0 / 37.0;
        assert!((r.value - want).abs() <= 10.0 * r.abs_err_estimate.max(1e-14));
    }

    #[test]
    fn algebraic_without_decay_is_rejected() {
        let r = quad_semi_infinite(|t| 1.0 / (1.0 + t), Decay::Algebraic { power: 1.0 }, 1e-8);
        assert!(r.is_err());
    }
}
