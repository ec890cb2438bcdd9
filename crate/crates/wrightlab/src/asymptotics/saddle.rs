//! Saddle point of psi(t) = log(t/(t-1)) + u t^rho (rho > 0) or its
//! negative-rho analogue: the unique root t > 1 of t^rho (t-1) = 1/(|rho| u).

use crate::asymptotics::coeffs::b_coeffs;
use crate::error::{Result, WrightError};

#[derive(Debug, Clone, Copy)]
pub struct SaddleResult {
    pub t_s: f64,
    /// psi(t_s); positive for rho > 0, negative for rho in (-1, 0)
    pub psi_value: f64,
    pub psi_dd: f64,
    /// |t_s^rho (t_s - 1) - 1/(|rho| u)|
    pub residual: f64,
    pub iterations: u32,
}

/// Solves the saddle equation for rho in (-1,0) or (0,inf), u > 0.
pub fn solve_saddle(rho: f64, u: f64) -> Result<SaddleResult> {
    if u <= 0.0 || !u.is_finite() {
        return Err(WrightError::Domain(format!("solve_saddle: u = {u} must be positive")));
    }
    if rho == 0.0 || rho <= -1.0 || !rho.is_finite() {
        return Err(WrightError::Domain(format!(
            "solve_saddle: rho = {rho} outside (-1,0) union (0,inf)"
        )));
    }
    let target = 1.0 / (rho.abs() * u);
    let g = |t: f64| t.powf(rho) * (t - 1.0) - target;
    let dg = |t: f64| t.powf(rho - 1.0) * ((1.0 + rho) * t - rho);

    let mut t = initial_guess(rho, target);
    // bisection bracket as a safety net: g is monotone increasing on (1, inf)
    let mut lo = 1.0f64;
    let mut hi = t.max(2.0);
    while g(hi) < 0.0 {
        hi *= 2.0;
        if hi > 1e300 {
            return Err(WrightError::Numerical("solve_saddle: bracket expansion failed".into()));
        }
    }
    let mut iterations = 0u32;
    let mut converged = false;
    for _ in 0..100 {
        iterations += 1;
        let gv = g(t);
        if gv > 0.0 {
            hi = t;
        } else {
            lo = lo.max(t);
        }
        let step = gv / dg(t);
        let mut next = t - step;
        if !(next > lo && next < hi) || !next.is_finite() {
            next = 0.5 * (lo + hi);
        }
        if (next - t).abs() <= 1e-16 * t {
            t = next;
            converged = true;
            break;
        }
        t = next;
    }
    if !converged && g(t).abs() > 1e-10 * target {
        return Err(WrightError::Numerical(format!(
            "solve_saddle(rho={rho}, u={u}): no convergence after {iterations} iterations, t={t}"
        )));
    }
    let tau = 1.0 / t;
    // psi(t_s) = -log(1-tau) + tau/(rho (1-tau)); the signed rho covers both branches
    let psi_value = -(1.0 - tau).ln() + tau / (rho * (1.0 - tau));
    let psi_dd = (1.0 + rho) / (t * t * (t - 1.0) * (t - 1.0)) * (t - rho / (1.0 + rho));
    let residual = g(t).abs();
    Ok(SaddleResult { t_s: t, psi_value, psi_dd, residual, iterations })
}

fn initial_guess(rho: f64, target: f64) -> f64 {
    if rho > 0.0 {
        // chi-series seed around t ~ chi = target^{1/(1+rho)}
        let chi = target.powf(1.0 / (1.0 + rho));
        if chi > 2.0 {
            let b = b_coeffs(rho, 7).expect("b_coeffs within spec range");
            let mut t = 0.0;
            for (r, br) in b.values.iter().enumerate() {
                t += br * chi.powi(1 - r as i32);
            }
            return t;
        }
        1.0 + target.min(1.0)
    } else {
        1.0 + target
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_ratio_case() {
        // rho = 1, u = 1: t(t-1) = 1
        let s = solve_saddle(1.0, 1.0).unwrap();
        assert!((s.t_s - (1.0 + 5f64.sqrt()) / 2.0).abs() < 1e-14);
    }

    #[test]
    fn bisection_reference() {
        // rho = 1/2, u = 1: t^{1/2}(t-1) = 2, 40-digit root
        let s = solve_saddle(0.5, 1.0).unwrap();
        assert!((s.t_s - 2.3145962122767519817).abs() < 1e-13, "{}", s.t_s);
    }

    #[test]
    fn negative_rho_closed_form() {
        // rho=-1/2, u=2: a = sigma u = 1, y_s = (2/(1+sqrt(5)))^2, t = 1/y
        let s = solve_saddle(-0.5, 2.0).unwrap();
        let phi_sq = ((1.0 + 5f64.sqrt()) / 2.0).powi(2);
        assert!((s.t_s - phi_sq).abs() < 1e-12, "{}", s.t_s);
        assert!(s.psi_value < 0.0);
    }

    #[test]
    fn residual_and_sign_grid() {
        for &rho in &[0.3, 0.5, 1.0, 2.0, 3.6, -0.2, -0.5, -0.8] {
            for &u in &[0.1, 1.0, 10.0] {
                let s = solve_saddle(rho, u).unwrap();
                let scale = 1.0 / (rho.abs() * u);
                assert!(s.residual < 1e-12 * scale, "rho={rho} u={u}: {}", s.residual);
                assert!(s.t_s > 1.0);
                if rho > 0.0 {
                    assert!(s.psi_value > 0.0, "rho={rho} u={u}");
                } else {
                    assert!(s.psi_value < 0.0, "rho={rho} u={u}");
                }
                assert!(s.psi_dd > 0.0);
            }
        }
    }

    #[test]
    fn chi_seed_accuracy() {
        // the 7-term seed lands within 1e-3 of the converged root for chi >= 5
        for &rho in &[0.4, 1.0, 2.5] {
            for &chi in &[5.0f64, 12.0, 40.0] {
                let target = chi.powf(1.0 + rho);
                let u = 1.0 / (rho * target);
                let s = solve_saddle(rho, u).unwrap();
                let seed = initial_guess(rho, target);
                assert!(
                    ((seed - s.t_s) / s.t_s).abs() < 1e-3,
                    "rho={rho} chi={chi}: seed {seed} vs {}",
                    s.t_s
                );
            }
        }
    }

    #[test]
    fn invalid_inputs() {
        assert!(solve_saddle(0.5, 0.0).is_err());
        assert!(solve_saddle(0.0, 1.0).is_err());
        assert!(solve_saddle(-1.5, 1.0).is_err());
    }
}
