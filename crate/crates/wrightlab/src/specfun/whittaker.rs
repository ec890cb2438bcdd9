//! Whittaker W function for non-half-integer mu (the cases here are
//! mu = +-1/6), assembled from two confluent hypergeometric values for
//! moderate z and from the 2F0 asymptotic series for large z.

use crate::error::{Result, WrightError};
use crate::logscale::LogScaledReal;
use crate::specfun::gamma::ln_gamma_signed;
use crate::specfun::kummer::kummer_1f1;

/// W_{kappa, mu}(z) for z > 0. Uses W_{kappa,-mu} = W_{kappa,mu}.
pub fn whittaker_w(kappa: f64, mu: f64, z: f64) -> Result<f64> {
    if z <= 0.0 {
        return Err(WrightError::Domain(format!("whittaker_w: z = {z} must be positive")));
    }
    if z > 700.0 {
        return Err(WrightError::Range(format!("whittaker_w: z = {z} beyond the exponent scale 700")));
    }
    let mu = mu.abs();
    let b = 2.0 * mu + 1.0;
    if (b - b.round()).abs() < 1e-10 {
        return Err(WrightError::Domain(format!(
            "whittaker_w: b = 2*mu+1 = {b} is an integer; the logarithmic case is not supported"
        )));
    }
    if z > 20.0 {
        return Ok(whittaker_w_asymptotic(kappa, mu, z));
    }
    let a = mu + 0.5 - kappa;
    // Gamma(1-b)/Gamma(a-b+1) * 1F1(a;b;z) + z^{1-b} Gamma(b-1)/Gamma(a) * 1F1(a-b+1;2-b;z)
    let t1 = ln_gamma_signed(1.0 - b)?
        .div(ln_gamma_signed(a - b + 1.0)?)?
        .mul(kummer_1f1(a, b, z)?);
    let t2 = LogScaledReal::new(1, (1.0 - b) * z.ln())
        .mul(ln_gamma_signed(b - 1.0)?.div(ln_gamma_signed(a)?)?)
        .mul(kummer_1f1(a - b + 1.0, 2.0 - b, z)?);
    let comb = t1.to_real()? + t2.to_real()?;
    Ok((-0.5 * z + 0.5 * b * z.ln()).exp() * comb)
}

/// e^{z/2} W_{kappa,mu}(z), assembled without the outer exponentials so the
/// algebraic-regime closed forms stay finite at large z.
pub(crate) fn whittaker_w_exp_scaled(kappa: f64, mu: f64, z: f64) -> Result<f64> {
    if z > 20.0 {
        let mu = mu.abs();
        let a1 = 0.5 + mu - kappa;
        let a2 = 0.5 - mu - kappa;
        let mut term = 1.0f64;
        let mut sum = 1.0f64;
        for n in 0..60 {
            let nf = n as f64;
            let next = term * (a1 + nf) * (a2 + nf) / ((nf + 1.0) * (-z));
            if next.abs() >= term.abs() {
                break;
            }
            term = next;
            sum += term;
            if term.abs() < 1e-18 * sum.abs() {
                break;
            }
        }
        Ok((kappa * z.ln()).exp() * sum)
    } else {
        Ok((0.5 * z).exp() * whittaker_w(kappa, mu, z)?)
    }
}

/// W ~ e^{-z/2} z^kappa 2F0(1/2+mu-kappa, 1/2-mu-kappa; ; -1/z), least term.
fn whittaker_w_asymptotic(kappa: f64, mu: f64, z: f64) -> f64 {
    let a1 = 0.5 + mu - kappa;
    let a2 = 0.5 - mu - kappa;
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    for n in 0..60 {
        let nf = n as f64;
        let next = term * (a1 + nf) * (a2 + nf) / ((nf + 1.0) * (-z));
        if next.abs() >= term.abs() {
            break;
        }
        term = next;
        sum += term;
        if term.abs() < 1e-18 * sum.abs() {
            break;
        }
    }
    (-0.5 * z + kappa * z.ln()).exp() * sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::bessel::bessel_k;

    const W_P_1: f64 = 0.61918721828658390513; // W_{1/2,1/6}(1)
    const W_M_1: f64 = 0.36711713034920700009; // W_{-1/2,1/6}(1)

    #[test]
    fn reference_points() {
        assert!((whittaker_w(0.5, 1.0 / 6.0, 1.0).unwrap() - W_P_1).abs() < 1e-13);
        assert!((whittaker_w(-0.5, 1.0 / 6.0, 1.0).unwrap() - W_M_1).abs() < 1e-13);
    }

    #[test]
    fn mu_sign_symmetry() {
        for &z in &[0.4, 1.0, 3.0] {
            let p = whittaker_w(0.5, 1.0 / 6.0, z).unwrap();
            let m = whittaker_w(0.5, -1.0 / 6.0, z).unwrap();
            assert_eq!(p, m);
        }
    }

    #[test]
    fn connection_to_bessel_k() {
        // W_{-1/2,1/6}(z) = 6 W_{1/2,1/6}(z) - (6z/sqrt(pi)) K_{1/3}(z/2)
        for &z in &[0.5, 1.0, 2.0] {
            let lhs = whittaker_w(-0.5, 1.0 / 6.0, z).unwrap();
            let rhs = 6.0 * whittaker_w(0.5, 1.0 / 6.0, z).unwrap()
                - 6.0 * z / std::f64::consts::PI.sqrt() * bessel_k(1.0 / 3.0, 0.5 * z);
            assert!(((lhs - rhs) / lhs).abs() < 1e-9, "z={z}: {lhs} vs {rhs}");
        }
    }

    #[test]
    fn series_asymptotic_agree() {
        // the two paths overlap around the switch point; the kappa = -1/2
        // asymptotic bottoms out near 1e-5 there (larger Pochhammer products)
        let a = whittaker_w(0.5, 1.0 / 6.0, 19.9).unwrap();
        let b = whittaker_w_asymptotic(0.5, 1.0 / 6.0, 19.9);
        assert!(((a - b) / a).abs() < 5e-9, "{a} vs {b}");
        let a = whittaker_w(-0.5, 1.0 / 6.0, 19.9).unwrap();
        let b = whittaker_w_asymptotic(-0.5, 1.0 / 6.0, 19.9);
        assert!(((a - b) / a).abs() < 5e-5, "{a} vs {b}");
    }

    #[test]
    fn integer_b_rejected() {
        assert!(whittaker_w(0.5, 0.5, 1.0).is_err());
        assert!(whittaker_w(0.5, 0.0, 1.0).is_err());
    }
}
