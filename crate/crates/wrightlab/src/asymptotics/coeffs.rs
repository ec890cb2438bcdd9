//! Expansion coefficient tables: the saddle-seed B_r, the exponential-series
//! c_j(rho) built from the degree-2(j-1) polynomials, and the general-k D_j.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Result, WrightError};
use crate::specfun::gamma::rising_product;

/// An indexed coefficient sequence.
#[derive(Debug, Clone)]
pub struct CoeffTable {
    pub values: Vec<f64>,
}

impl CoeffTable {
    pub fn get(&self, i: usize) -> f64 {
        self.values[i]
    }
    pub fn len(&self) -> usize {
        self.values.len()
    }
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// B_0..B_{n-1} of the saddle-location expansion t_s0 = chi sum B_r chi^-r.
///
/// B_5 carries (1+rho)^5 in the denominator (the degree follows the B_2..B_4,
/// B_6 pattern and is what the perturbation expansion actually produces).
pub fn b_coeffs(rho: f64, n_terms: usize) -> Result<CoeffTable> {
    if n_terms > 7 {
        return Err(WrightError::Range(format!(
            "b_coeffs: n_terms = {n_terms} exceeds the 7 known coefficients"
        )));
    }
    let p = 1.0 + rho;
    let all = [
        1.0,
        1.0 / p,
        rho / (2.0 * p * p),
        rho * (rho - 1.0) / (3.0 * p.powi(3)),
        rho * (2.0 - 5.0 * rho + 2.0 * rho * rho) / (8.0 * p.powi(4)),
        rho * (-3.0 + 13.0 * rho - 13.0 * rho * rho + 3.0 * rho.powi(3)) / (15.0 * p.powi(5)),
        rho * (24.0 - 154.0 * rho + 269.0 * rho * rho - 154.0 * rho.powi(3) + 24.0 * rho.powi(4))
            / (144.0 * p.powi(6)),
    ];
    Ok(CoeffTable { values: all[..n_terms].to_vec() })
}

fn zolotarev_poly(j: usize, rho: f64) -> f64 {
    match j {
        1 => -1.0 / 3.0,
        2 => (2.0 - 19.0 * rho + 2.0 * rho * rho) / 9.0,
        3 => {
            (556.0 + 1628.0 * rho - 9093.0 * rho * rho + 1628.0 * rho.powi(3)
                + 556.0 * rho.powi(4))
                / 135.0
        }
        4 => {
            -(4568.0 - 226668.0 * rho - 465702.0 * rho * rho + 2013479.0 * rho.powi(3)
                - 465702.0 * rho.powi(4)
                - 226668.0 * rho.powi(5)
                + 4568.0 * rho.powi(6))
                / 405.0
        }
        _ => unreachable!(),
    }
}

/// c_0..c_{n-1} of the exponential expansions: c_0 = 1 and
/// c_j = (2 rho + 1)(rho + 2) / (2^{3j} rho^j j!) * p_j(rho).
pub fn c_coeffs(rho: f64, n_terms: usize) -> Result<CoeffTable> {
    if n_terms > 5 {
        return Err(WrightError::Range(format!(
            "c_coeffs: n_terms = {n_terms} exceeds the 4 known polynomial orders"
        )));
    }
    if rho == 0.0 {
        return Err(WrightError::Domain("c_coeffs: rho must be nonzero".into()));
    }
    let mut values = vec![1.0];
    let mut fact = 1.0f64;
    for j in 1..n_terms {
        fact *= j as f64;
        let c = (2.0 * rho + 1.0) * (rho + 2.0) / (8f64.powi(j as i32) * rho.powi(j as i32) * fact)
            * zolotarev_poly(j, rho);
        values.push(c);
    }
    Ok(CoeffTable { values })
}

/// Closed form c_j(-1/3) = Gamma(3j+1/2) / (54^j j! Gamma(j+1/2)), the
/// independent route for the anti-Stokes coefficients.
pub fn c_coeff_third_closed(j: usize) -> f64 {
    // Gamma(3j+1/2)/Gamma(j+1/2) = rising product (j+1/2)_{2j}
    let mut v = rising_product(j as f64 + 0.5, 2 * j as u32);
    let mut fact = 1.0f64;
    for i in 1..=j {
        fact *= i as f64;
    }
    v /= 54f64.powi(j as i32) * fact;
    v
}

/// General-k D_j for j <= 3 from the closed forms (binomials via rising
/// products, usable at non-integer k). The j = 3 braces follow the corrected
/// signs that reproduce the k = 4, 5 integer lists.
pub fn d_coeffs_general(rho: f64, k: f64, n_terms: usize) -> Result<CoeffTable> {
    if n_terms > 4 {
        return Err(WrightError::Range(format!(
            "d_coeffs_general: only D_0..D_3 have general-k closed forms, got n_terms = {n_terms}"
        )));
    }
    let binom = |k: f64, j: u32| -> f64 {
        let mut fact = 1.0;
        for i in 1..=j {
            fact *= i as f64;
        }
        rising_product(k - j as f64 + 1.0, j) / fact
    };
    let p = 1.0 + rho;
    let mut values = vec![1.0];
    if n_terms > 1 {
        values.push(p * binom(k, 2));
    }
    if n_terms > 2 {
        values.push(0.25 * p * binom(k, 3) * (3.0 * k * p - 1.0 - 5.0 * rho));
    }
    if n_terms > 3 {
        values.push(0.5 * p * binom(k, 4) * (k * p - 2.0 * rho) * (k * p - 1.0 - 3.0 * rho));
    }
    Ok(CoeffTable { values })
}

// ---- exact-rational variants for the CLI coefficient dump ----

pub use num_rational::BigRational as Rational;

/// Parses "p/q" or a plain decimal string into an exact rational.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let num: BigInt = p.trim().parse().ok()?;
        let den: BigInt = q.trim().parse().ok()?;
        if den.is_zero() {
            return None;
        }
        return Some(BigRational::new(num, den));
    }
    let (mantissa, frac_digits) = match s.split_once('.') {
        Some((whole, frac)) => {
            if frac.is_empty() || !frac.chars().all(|c| c.is_ascii_digit()) {
                return None;
            }
            (format!("{whole}{frac}"), frac.len() as u32)
        }
        None => (s.to_string(), 0),
    };
    let num: BigInt = mantissa.parse().ok()?;
    let den = BigInt::from(10u32).pow(frac_digits);
    Some(BigRational::new(num, den))
}

pub fn big_ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// B_r as exact rationals of a rational rho.
pub fn b_coeffs_rational(rho: &BigRational, n_terms: usize) -> Result<Vec<BigRational>> {
    if n_terms > 7 {
        return Err(WrightError::Range("b_coeffs_rational: n_terms > 7".into()));
    }
    let one = BigRational::one();
    let p = &one + rho;
    if p.is_zero() {
        return Err(WrightError::Domain("b_coeffs_rational: rho = -1".into()));
    }
    let r = rho.clone();
    let r2 = &r * &r;
    let r3 = &r2 * &r;
    let r4 = &r3 * &r;
    let all = vec![
        one.clone(),
        &one / &p,
        &r / (big_ratio(2, 1) * &p * &p),
        &r * (&r - &one) / (big_ratio(3, 1) * p.pow(3)),
        &r * (big_ratio(2, 1) - big_ratio(5, 1) * &r + big_ratio(2, 1) * &r2) / (big_ratio(8, 1) * p.pow(4)),
        &r * (big_ratio(-3, 1) + big_ratio(13, 1) * &r - big_ratio(13, 1) * &r2 + big_ratio(3, 1) * &r3)
            / (big_ratio(15, 1) * p.pow(5)),
        &r * (big_ratio(24, 1) - big_ratio(154, 1) * &r + big_ratio(269, 1) * &r2
            - big_ratio(154, 1) * &r3
            + big_ratio(24, 1) * &r4)
            / (big_ratio(144, 1) * p.pow(6)),
    ];
    Ok(all[..n_terms].to_vec())
}

/// c_j as exact rationals of a rational rho.
pub fn c_coeffs_rational(rho: &BigRational, n_terms: usize) -> Result<Vec<BigRational>> {
    if n_terms > 5 {
        return Err(WrightError::Range("c_coeffs_rational: n_terms > 5".into()));
    }
    if rho.is_zero() {
        return Err(WrightError::Domain("c_coeffs_rational: rho = 0".into()));
    }
    let one = BigRational::one();
    let r = rho.clone();
    let r2 = &r * &r;
    let r3 = &r2 * &r;
    let r4 = &r3 * &r;
    let r5 = &r4 * &r;
    let r6 = &r5 * &r;
    let wp: Vec<BigRational> = vec![
        big_ratio(-1, 3),
        (big_ratio(2, 1) - big_ratio(19, 1) * &r + big_ratio(2, 1) * &r2) / big_ratio(9, 1),
        (big_ratio(556, 1) + big_ratio(1628, 1) * &r - big_ratio(9093, 1) * &r2
            + big_ratio(1628, 1) * &r3
            + big_ratio(556, 1) * &r4)
            / big_ratio(135, 1),
        -(big_ratio(4568, 1) - big_ratio(226668, 1) * &r - big_ratio(465702, 1) * &r2
            + big_ratio(2013479, 1) * &r3
            - big_ratio(465702, 1) * &r4
            - big_ratio(226668, 1) * &r5
            + big_ratio(4568, 1) * &r6)
            / big_ratio(405, 1),
    ];
    let mut out = vec![one.clone()];
    let mut fact = BigRational::one();
    for j in 1..n_terms {
        fact = fact * big_ratio(j as i64, 1);
        let denom = big_ratio(8, 1).pow(j as i32) * rho.pow(j as i32) * fact.clone();
        let c = (big_ratio(2, 1) * &r + &one) * (&r + big_ratio(2, 1)) / denom * wp[j - 1].clone();
        out.push(c);
    }
    Ok(out)
}

/// D_n at rational rho, from the exact integer rho-polynomials.
pub fn d_coeffs_rational(rho: &BigRational, k: u32) -> Result<Vec<BigRational>> {
    let polys = crate::closed_forms::d_coeff_polys(k)?;
    Ok(polys
        .iter()
        .map(|poly| {
            let mut acc = BigRational::zero();
            for c in poly.iter().rev() {
                acc = acc * rho + BigRational::from(c.clone());
            }
            acc
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn b_values() {
        let b = b_coeffs(1.0, 7).unwrap();
        assert_eq!(b.get(0), 1.0);
        assert_eq!(b.get(1), 0.5);
        assert_eq!(b.get(2), 0.125);
        assert_eq!(b.get(3), 0.0); // factor (rho - 1)
        assert!(b_coeffs(1.0, 8).is_err());
    }

    #[test]
    fn b5_fits_the_saddle_expansion() {
        // numeric fit: the residual after B_0..B_4 matches B_5 chi^-5 up to
        // the B_6/chi contamination (chi small enough that f64 resolves
        // t/chi - 1 to the chi^-5 level)
        for &rho in &[0.37f64, 2.0] {
            let chi: f64 = 30.0;
            let target = chi.powf(1.0 + rho);
            let u = 1.0 / (rho * target);
            let s = crate::asymptotics::solve_saddle(rho, u).unwrap();
            let b = b_coeffs(rho, 7).unwrap();
            let mut resid = s.t_s / chi;
            for r in 0..5 {
                resid -= b.get(r) * chi.powi(-(r as i32));
            }
            let fitted = resid * chi.powi(5);
            assert!(
                ((fitted - b.get(5)) / b.get(5)).abs() < 5e-2,
                "rho={rho}: fitted {fitted} vs {}",
                b.get(5)
            );
        }
    }

    #[test]
    fn c_values() {
        let c = c_coeffs(-0.5, 5).unwrap();
        assert_eq!(c.get(0), 1.0);
        for j in 1..5 {
            assert_eq!(c.get(j), 0.0, "c_{j}(-1/2)"); // factor (2 rho + 1)
        }
        // closed-form route at rho = -1/3
        let c = c_coeffs(-1.0 / 3.0, 5).unwrap();
        for j in 0..5 {
            let closed = c_coeff_third_closed(j);
            assert!(
                (c.get(j) - closed).abs() <= 1e-12 * closed.abs().max(1.0),
                "j={j}: {} vs {closed}",
                c.get(j)
            );
        }
        assert!((c.get(1) - 5.0 / 72.0).abs() < 1e-15);
    }

    #[test]
    fn d_general_matches_exact_at_integer_k() {
        for &rho in &[0.5f64, -0.5, 2.0] {
            for &k in &[4u32, 6, 10] {
                let gen = d_coeffs_general(rho, k as f64, 4).unwrap();
                let exact = crate::closed_forms::d_coeffs(rho, k).unwrap();
                for j in 0..4usize.min(exact.coeffs.len()) {
                    let e = exact.coeffs[j];
                    assert!(
                        (gen.get(j) - e).abs() <= 1e-11 * e.abs().max(1.0),
                        "rho={rho} k={k} j={j}: {} vs {e}",
                        gen.get(j)
                    );
                }
            }
        }
    }

    #[test]
    fn rational_routes_agree_with_float() {
        let rho = big_ratio(-1, 3);
        let c = c_coeffs_rational(&rho, 5).unwrap();
        let cf = c_coeffs(-1.0 / 3.0, 5).unwrap();
        for j in 0..5 {
            let num: f64 = c[j].numer().to_string().parse().unwrap();
            let den: f64 = c[j].denom().to_string().parse().unwrap();
            assert!((num / den - cf.get(j)).abs() < 1e-12 * cf.get(j).abs().max(1.0));
        }
        // c_1(-1/3) = 5/72 exactly
        assert_eq!(c[1], big_ratio(5, 72));
    }
}
