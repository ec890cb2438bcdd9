//! Bessel functions J, I, K of real order on desk-scale arguments.
//!
//! J and I go through the ascending series with double-double term
//! accumulation (J's cancellation at x near the top of the range would
//! otherwise eat half the mantissa). Beyond x = 15, J switches to the Hankel
//! P/Q asymptotic forms. K uses the I-connection below x = 2 and the
//! cosh-kernel integral above, which has no cancellation at all.

use crate::dd::Dd;
use crate::error::{Result, WrightError};
use crate::quad;
use crate::specfun::gamma::{recip_gamma, sin_pi};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BesselKind {
    J,
    I,
    K,
}

/// Public entry point, restricted to the supported range x in (0, 60].
pub fn bessel(kind: BesselKind, nu: f64, x: f64) -> Result<f64> {
    if x <= 0.0 {
        return Err(WrightError::Domain(format!("bessel: x = {x} must be positive")));
    }
    if x > 60.0 {
        return Err(WrightError::Range(format!("bessel: x = {x} beyond the supported range (0, 60]")));
    }
    match kind {
        BesselKind::I => Ok(bessel_i(nu, x)),
        BesselKind::J => Ok(bessel_j(nu, x)),
        BesselKind::K => Ok(bessel_k(nu, x)),
    }
}

fn is_integer(v: f64) -> bool {
    (v - v.round()).abs() < 1e-9
}

/// Ascending series for I or J; `signed` = -1 gives the alternating J series.
fn cylinder_series(nu: f64, x: f64, sign: f64) -> f64 {
    let half = 0.5 * x;
    // t0 = (x/2)^nu / Gamma(nu+1)
    let t0 = (nu * half.ln()).exp() * recip_gamma(nu + 1.0);
    let ratio = Dd::from(half).mul(Dd::from(half)).mul_f64(sign);
    let mut term = Dd::from(t0);
    let mut sum = term;
    for m in 0..400 {
        let mf = m as f64;
        let d = (mf + 1.0) * (mf + 1.0 + nu);
        if d == 0.0 {
            // only reachable for negative integer nu, which callers remap
            return f64::NAN;
        }
        term = term.mul(ratio).div_f64(d);
        sum = sum.add(term);
        if term.abs().value() < sum.abs().value() * 1e-30 + 1e-300 {
            break;
        }
    }
    sum.value()
}

pub(crate) fn bessel_i(nu: f64, x: f64) -> f64 {
    if is_integer(nu) && nu < 0.0 {
        return bessel_i(-nu.round(), x); // I_{-n} = I_n
    }
    cylinder_series(nu, x, 1.0)
}

pub(crate) fn bessel_j(nu: f64, x: f64) -> f64 {
    if is_integer(nu) && nu < 0.0 {
        let n = -nu.round();
        let v = bessel_j(n, x);
        return if (n as i64) % 2 == 0 { v } else { -v }; // J_{-n} = (-1)^n J_n
    }
    if x <= 15.0 {
        cylinder_series(nu, x, -1.0)
    } else {
        bessel_j_hankel(nu, x)
    }
}

/// Hankel asymptotic expansion, truncated at the smallest term.
fn bessel_j_hankel(nu: f64, x: f64) -> f64 {
    let mu = 4.0 * nu * nu;
    let mut t = 1.0f64;
    let mut terms = vec![t];
    for k in 1..30 {
        let kf = k as f64;
        let next = t * (mu - (2.0 * kf - 1.0).powi(2)) / (kf * 8.0 * x);
        if next.abs() >= t.abs() && k > 2 {
            break;
        }
        t = next;
        terms.push(t);
    }
    let mut p = 0.0;
    let mut q = 0.0;
    for (k, tk) in terms.iter().enumerate() {
        if k % 2 == 0 {
            p += if (k / 2) % 2 == 0 { *tk } else { -*tk };
        } else {
            q += if ((k - 1) / 2) % 2 == 0 { *tk } else { -*tk };
        }
    }
    let omega = x - (0.5 * nu + 0.25) * std::f64::consts::PI;
    (2.0 / (std::f64::consts::PI * x)).sqrt() * (omega.cos() * p - omega.sin() * q)
}

pub(crate) fn bessel_k(nu: f64, x: f64) -> f64 {
    let nu = nu.abs(); // K_{-nu} = K_nu
    if x >= 2.0 {
        return bessel_k_integral(nu, x);
    }
    if is_integer(nu) {
        // perturbation limit around the integer order
        let eps = 1e-6;
        return 0.5 * (bessel_k_connection(nu + eps, x) + bessel_k_connection((nu - eps).abs(), x));
    }
    bessel_k_connection(nu, x)
}

/// K via the I_{+-nu} connection; valid for non-integer nu, accurate for small x.
fn bessel_k_connection(nu: f64, x: f64) -> f64 {
    let im = bessel_i(-nu, x);
    let ip = bessel_i(nu, x);
    0.5 * std::f64::consts::PI * (im - ip) / sin_pi(nu)
}

/// K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt; positive smooth integrand.
fn bessel_k_integral(nu: f64, x: f64) -> f64 {
    let cap = (745.0 + 40.0) / x; // e^{-745} is the f64 floor
    let t_max = (cap + (cap * cap - 1.0).max(0.0).sqrt()).ln().max(1.0);
    let scale = (std::f64::consts::PI / (2.0 * x)).sqrt() * (-x).exp();
    let f = |t: f64| (-x * t.cosh()).exp() * (nu * t).cosh();
    let r = quad::integrate(&f, 0.0, t_max, (scale * 1e-14).max(1e-305), 400);
    r.value
}

#[cfg(test)]
mod tests {
    use super::*;

    // reference values, 20-digit arithmetic
    const I1_2: f64 = 1.5906368546373290634;
    const J1_2: f64 = 0.5767248077568733872;
    const K13_1: f64 = 0.43843063344153436171;
    const K1_1: f64 = 0.60190723019723457474;
    const I_M35_27: f64 = 0.16626471656642453579;
    const J13_344: f64 = -0.013886941598692004467;
    const K13_2236: f64 = 5.1425613785867948045e-11;

    #[test]
    fn reference_points() {
        assert!((bessel(BesselKind::I, 1.0, 2.0).unwrap() - I1_2).abs() < 1e-14);
        assert!((bessel(BesselKind::J, 1.0, 2.0).unwrap() - J1_2).abs() < 1e-14);
        assert!((bessel(BesselKind::K, 1.0 / 3.0, 1.0).unwrap() - K13_1).abs() < 1e-13);
        // integer order goes through the perturbation limit; noise ~ eps/sin(pi eps)
        assert!((bessel(BesselKind::K, 1.0, 1.0).unwrap() - K1_1).abs() < 1e-9);
        assert!((bessel(BesselKind::I, -3.5, 2.7).unwrap() - I_M35_27).abs() < 1e-13);
    }

    #[test]
    fn k_half_closed_form() {
        // K_{1/2}(x) = sqrt(pi/(2x)) e^{-x}
        for &x in &[0.3, 1.0, 2.5, 7.0, 20.0, 55.0] {
            let expect = (std::f64::consts::PI / (2.0 * x)).sqrt() * (-x as f64).exp();
            let got = bessel(BesselKind::K, 0.5, x).unwrap();
            assert!(((got - expect) / expect).abs() < 1e-11, "x={x}: {got} vs {expect}");
        }
    }

    #[test]
    fn j_series_asymptotic_agree() {
        // the two evaluation paths overlap in accuracy near the switch point
        for &nu in &[1.0 / 3.0, 1.0, 1.5] {
            let s = cylinder_series(nu, 14.9, -1.0);
            let h = bessel_j_hankel(nu, 14.9);
            assert!((s - h).abs() < 2e-10, "nu={nu}: {s} vs {h}");
        }
    }

    #[test]
    fn j_large_argument() {
        let got = bessel(BesselKind::J, 1.0 / 3.0, 34.4).unwrap();
        assert!((got - J13_344).abs() < 1e-13, "{got}");
    }

    #[test]
    fn k_large_argument_relative() {
        let got = bessel(BesselKind::K, 1.0 / 3.0, 22.36).unwrap();
        assert!(((got - K13_2236) / K13_2236).abs() < 1e-11, "{got}");
    }

    #[test]
    fn i_connection_identity() {
        // I_{-nu}(x) = I_nu(x) + (2/pi) sin(pi nu) K_nu(x)
        for &nu in &[1.0 / 3.0, 1.0 / 6.0, 5.0 / 6.0] {
            for &x in &[0.5, 1.0, 2.0] {
                let lhs = bessel_i(-nu, x);
                let rhs = bessel_i(nu, x)
                    + 2.0 / std::f64::consts::PI * sin_pi(nu) * bessel_k(nu, x);
                assert!(((lhs - rhs) / lhs).abs() < 1e-10, "nu={nu} x={x}");
            }
        }
    }

    #[test]
    fn domain_errors() {
        assert!(bessel(BesselKind::J, 1.0, 0.0).is_err());
        assert!(bessel(BesselKind::I, 1.0, -1.0).is_err());
        assert!(bessel(BesselKind::K, 1.0, 61.0).is_err());
    }
}
