//! Exact alternative representations of 1Psi1 and phi: the Stirling-number
//! polynomial form and the Bessel/Airy/Whittaker closed forms, used as
//! independent oracles against the direct series.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::dd::Dd;
use crate::error::{Result, WrightError};
use crate::logscale::LogScaledReal;
use crate::specfun::gamma::cos_pi;
use crate::specfun::whittaker::whittaker_w_exp_scaled;
use crate::specfun::{
    airy_ai, bessel, kummer_1f1, ln_gamma_signed, stirling, BesselKind, StirlingKind,
    STIRLING_MAX_INDEX,
};

/// The degree k-1 polynomial h_{k-1}(u); h(1/(rho x)) multiplies
/// (rho x)^k e^x in the exact representation.
#[derive(Debug, Clone)]
pub struct HPolynomial {
    pub rho: f64,
    pub k: u32,
    /// D_0 .. D_{k-1}
    pub coeffs: Vec<f64>,
}

/// D_n as exact integer polynomials in rho: result[n][j] is the coefficient
/// of rho^j in D_n.
pub fn d_coeff_polys(k: u32) -> Result<Vec<Vec<BigInt>>> {
    if k == 0 || k as usize > STIRLING_MAX_INDEX {
        return Err(WrightError::Range(format!(
            "d_coeff_polys: k = {k} outside 1..={STIRLING_MAX_INDEX}"
        )));
    }
    let ku = k as usize;
    let mut out = Vec::with_capacity(ku);
    for n in 0..ku {
        let mut poly = vec![BigInt::from(0); n + 1];
        for l in 0..=n {
            let s = stirling(StirlingKind::FirstSigned, ku, ku - l)?;
            let cap_s = stirling(StirlingKind::Second, ku - l, ku - n)?;
            let signed = if l % 2 == 0 { s * cap_s } else { -(s * cap_s) };
            poly[n - l] += signed;
        }
        out.push(poly);
    }
    Ok(out)
}

/// Coefficients D_0..D_{k-1} of the exact polynomial representation.
pub fn d_coeffs(rho: f64, k: u32) -> Result<HPolynomial> {
    if rho == 0.0 {
        return Err(WrightError::Domain("d_coeffs: rho must be nonzero".into()));
    }
    let polys = d_coeff_polys(k)?;
    let coeffs = polys
        .iter()
        .map(|poly| {
            // Horner in double-double; the integer coefficients convert
            // exactly below 2^53
            let mut acc = Dd::ZERO;
            for c in poly.iter().rev() {
                acc = acc.mul_f64(rho).add_f64(c.to_f64().unwrap_or(f64::INFINITY));
            }
            acc.value()
        })
        .collect();
    Ok(HPolynomial { rho, k, coeffs })
}

/// Exact representation (rho x)^k e^x sum_n D_n (rho x)^{-n}, in log scale.
pub fn psi11_polynomial(rho: f64, k: u32, x: f64) -> Result<LogScaledReal> {
    if x == 0.0 {
        return Err(WrightError::Domain(
            "psi11_polynomial: x = 0 (the series gives 0 there for k >= 1)".into(),
        ));
    }
    if k == 0 {
        // 1Psi1(rho,0;rho,0;x) = e^x
        return Ok(LogScaledReal::new(1, x));
    }
    let h = d_coeffs(rho, k)?;
    let u = 1.0 / (rho * x);
    let mut acc = Dd::ZERO;
    for c in h.coeffs.iter().rev() {
        acc = acc.mul_f64(u).add_f64(*c);
    }
    let braces = acc.value();
    let rx = rho * x;
    let sign_pref: i8 = if rx > 0.0 || k % 2 == 0 { 1 } else { -1 };
    Ok(LogScaledReal::new(sign_pref, k as f64 * rx.abs().ln() + x)
        .mul(LogScaledReal::from_real(braces)))
}

/// rho = 1 closed form x k! 1F1(k+1; 2; x).
pub fn psi11_rho1(k: u32, x: f64) -> Result<LogScaledReal> {
    let f = kummer_1f1(k as f64 + 1.0, 2.0, x)?;
    let kfac = ln_gamma_signed(k as f64 + 1.0)?;
    Ok(LogScaledReal::from_real(x).mul(kfac).mul(f))
}

/// Which side of the argument the representation is taken at.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArgSign {
    Plus,
    Minus,
}

/// rho = -1/2, integer k: the I-sum (argument +x) or K (argument -x)
/// representations, x > 0.
pub fn psi11_half_integer_neg(k: u32, x: f64, sign: ArgSign) -> Result<f64> {
    if x <= 0.0 || x > 60.0 {
        return Err(WrightError::Range(format!(
            "psi11_half_integer_neg: x = {x} outside (0, 60]"
        )));
    }
    let kf = k as f64;
    let pref = (0.5 * x).powf(kf + 0.5);
    match sign {
        ArgSign::Plus => {
            let i_sum = bessel(BesselKind::I, kf - 0.5, x)? + bessel(BesselKind::I, 0.5 - kf, x)?;
            let parity = if k % 2 == 0 { 1.0 } else { -1.0 };
            Ok(parity * std::f64::consts::PI.sqrt() * pref * i_sum)
        }
        ArgSign::Minus => {
            Ok(2.0 / std::f64::consts::PI.sqrt() * pref * bessel(BesselKind::K, kf - 0.5, x)?)
        }
    }
}

/// rho = -1/2, k > 0 excluding integers and half-integers:
/// +-(sqrt(pi)/cos(pi k)) (x/2)^{k+1/2} I_{1/2-k}(x).
pub fn psi11_nonint_k_neg_half(k: f64, x: f64, sign: ArgSign) -> Result<f64> {
    if k <= 0.0 {
        return Err(WrightError::Domain(format!(
            "psi11_nonint_k_neg_half: k = {k} must be positive"
        )));
    }
    if (2.0 * k - (2.0 * k).round()).abs() < 1e-10 {
        return Err(WrightError::Domain(format!(
            "psi11_nonint_k_neg_half: k = {k} is a half-integer; the left-hand side is undefined"
        )));
    }
    if !(0.0..=60.0).contains(&x) {
        return Err(WrightError::Range(format!(
            "psi11_nonint_k_neg_half: x = {x} outside [0, 60]"
        )));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    let s = match sign {
        ArgSign::Plus => 1.0,
        ArgSign::Minus => -1.0,
    };
    Ok(s * std::f64::consts::PI.sqrt() / cos_pi(k)
        * (0.5 * x).powf(k + 0.5)
        * bessel(BesselKind::I, 0.5 - k, x)?)
}

/// Closed forms of phi(rho, 0; x) for rho in {1, -1/2, -1/3, -2/3}, both
/// argument signs.
pub fn phi_closed(rho: f64, x: f64) -> Result<f64> {
    let close = |a: f64, b: f64| (a - b).abs() < 1e-12;
    if close(rho, 1.0) {
        if x == 0.0 {
            return Ok(0.0);
        }
        let r = x.abs().sqrt();
        if x > 0.0 {
            Ok(r * bessel(BesselKind::I, 1.0, 2.0 * r)?)
        } else {
            Ok(-r * bessel(BesselKind::J, 1.0, 2.0 * r)?)
        }
    } else if close(rho, -0.5) {
        Ok(-x / (2.0 * std::f64::consts::PI.sqrt()) * (-0.25 * x * x).exp())
    } else if close(rho, -1.0 / 3.0) {
        // phi(-1/3,0;-y) = 3^{-1/3} y Ai(3^{-1/3} y); Ai branches internally
        let y = -x;
        let c = 3f64.powf(-1.0 / 3.0);
        Ok(c * y * airy_ai(c * y)?)
    } else if close(rho, -2.0 / 3.0) {
        if x == 0.0 {
            return Ok(0.0);
        }
        let z = 4.0 * x.abs().powi(3) / 27.0;
        if x < 0.0 {
            // sqrt(3/pi) e^{-2y^3/27} W_{1/2,1/6}(4y^3/27), y = -x
            let w = whittaker_w_exp_scaled(0.5, 1.0 / 6.0, z)?; // e^{z/2} W
            Ok((3.0 / std::f64::consts::PI).sqrt() * (-z).exp() * w)
        } else {
            // -(1/(2 sqrt(3 pi))) e^{2x^3/27} W_{-1/2,1/6}(4x^3/27)
            let w = whittaker_w_exp_scaled(-0.5, 1.0 / 6.0, z)?;
            Ok(-0.5 / (3.0 * std::f64::consts::PI).sqrt() * w)
        }
    } else {
        Err(WrightError::Domain(format!(
            "phi_closed: rho = {rho} has no implemented closed form (need 1, -1/2, -1/3 or -2/3)"
        )))
    }
}
