//! Airy Ai on [-30, 30] through its Bessel connections.

use crate::error::{Result, WrightError};
use crate::specfun::bessel::{bessel_j, bessel_k};
use crate::specfun::gamma::recip_gamma;

/// Ai(x) via K_{1/3} for x > 0 and the J_{+-1/3} combination for x < 0.
pub fn airy_ai(x: f64) -> Result<f64> {
    if x.abs() > 30.0 {
        return Err(WrightError::Range(format!("airy_ai: |x| = {} beyond the supported range 30", x.abs())));
    }
    if x == 0.0 {
        // 3^{-2/3} / Gamma(2/3)
        return Ok(3f64.powf(-2.0 / 3.0) * recip_gamma(2.0 / 3.0));
    }
    let z = x.abs();
    let zeta = 2.0 / 3.0 * z.powf(1.5);
    if x > 0.0 {
        Ok((z / 3.0).sqrt() / std::f64::consts::PI * bessel_k(1.0 / 3.0, zeta))
    } else {
        Ok(z.sqrt() / 3.0 * (bessel_j(1.0 / 3.0, zeta) + bessel_j(-1.0 / 3.0, zeta)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const AI_0: f64 = 0.35502805388781723926;
    const AI_1: f64 = 0.13529241631288141552;
    const AI_M1: f64 = 0.5355608832923521188;

    #[test]
    fn reference_points() {
        assert!((airy_ai(0.0).unwrap() - AI_0).abs() < 1e-15);
        assert!((airy_ai(1.0).unwrap() - AI_1).abs() < 1e-14);
        assert!((airy_ai(-1.0).unwrap() - AI_M1).abs() < 1e-14);
    }

    #[test]
    fn maclaurin_oracle() {
        // Ai(x) = Ai(0) f(x) + Ai'(0) g(x) with the standard Maclaurin pair:
        // f = sum x^{3n} prod(3k-2)/ (3n)!, g = sum x^{3n+1} prod(3k-1)/(3n+1)!
        let ai0 = AI_0;
        let aip0 = -0.25881940379280679841; // -3^{-1/3}/Gamma(1/3)
        let oracle = |x: f64| {
            let (mut f, mut g) = (1.0f64, x);
            let (mut tf, mut tg) = (1.0f64, x);
            for n in 1..60 {
                let n3 = 3.0 * n as f64;
                tf *= x.powi(3) * (n3 - 2.0) / (n3 * (n3 - 1.0) * (n3 - 2.0));
                tg *= x.powi(3) * (n3 - 1.0) / ((n3 + 1.0) * n3 * (n3 - 1.0));
                f += tf;
                g += tg;
            }
            ai0 * f + aip0 * g
        };
        for &x in &[0.5, 1.0, 2.0, -0.5, -1.0, -2.5] {
            let got = airy_ai(x).unwrap();
            let want = oracle(x);
            assert!((got - want).abs() < 1e-12, "x={x}: {got} vs {want}");
        }
    }

    #[test]
    fn range_guard() {
        assert!(airy_ai(31.0).is_err());
        assert!(airy_ai(-30.5).is_err());
    }
}
