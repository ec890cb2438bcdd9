//! Confluent hypergeometric function 1F1(a; b; x) by Maclaurin series with
//! log-scaled terms.

use crate::error::{Result, WrightError};
use crate::logscale::{LogScaledReal, LogSum};
use crate::series::{max_terms, Convergence};

/// 1F1(a; b; x) = sum_n (a)_n / (b)_n x^n / n!.
///
/// `b` must not be a non-positive integer; |x| <= 700 keeps the result in
/// log-scale range.
pub fn kummer_1f1(a: f64, b: f64, x: f64) -> Result<LogScaledReal> {
    if b <= 0.0 && (b - b.round()).abs() < 1e-12 {
        return Err(WrightError::Domain(format!("kummer_1f1: b = {b} is a non-positive integer")));
    }
    if x.abs() > 700.0 {
        return Err(WrightError::Range(format!("kummer_1f1: |x| = {} exceeds the 700 guard", x.abs())));
    }
    let mut acc = LogSum::new();
    let mut term = LogScaledReal::from_real(1.0);
    acc.add_term(term);
    let mut conv = Convergence::new();
    let cap = max_terms();
    for n in 0..cap {
        let nf = n as f64;
        // term_{n+1} = term_n * (a+n)/(b+n) * x/(n+1)
        let num = (a + nf) * x;
        let den = (b + nf) * (nf + 1.0);
        let factor = LogScaledReal::from_real(num).div(LogScaledReal::from_real(den))?;
        term = term.mul(factor);
        acc.add_term(term);
        let sum = acc.total();
        if conv.update(term.log_abs, sum.log_abs) {
            return Ok(sum);
        }
        // (a)_n hit zero: polynomial case, series terminates
        if term.is_zero() {
            return Ok(acc.total());
        }
    }
    Err(WrightError::Convergence {
        context: format!("kummer_1f1(a={a}, b={b}, x={x})"),
        terms: cap,
        last_term_log: term.log_abs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn val(a: f64, b: f64, x: f64) -> f64 {
        kummer_1f1(a, b, x).unwrap().to_real().unwrap()
    }

    #[test]
    fn exponential_cases() {
        // 1F1(a;a;x) = e^x
        assert!((val(3.7, 3.7, 1.0) - 1f64.exp()).abs() < 1e-14 * 1f64.exp());
        // 1F1(1;2;x) = (e^x - 1)/x
        let e = std::f64::consts::E;
        assert!((val(1.0, 2.0, 1.0) - (e - 1.0)).abs() < 1e-13);
    }

    #[test]
    fn polynomial_termination() {
        // a = -2: 1F1(-2;b;x) = 1 - 2x/b + x^2/(b(b+1))
        let got = val(-2.0, 1.5, 0.7);
        let expect = 1.0 - 2.0 * 0.7 / 1.5 + 0.7 * 0.7 / (1.5 * 2.5);
        assert!((got - expect).abs() < 1e-14);
    }

    #[test]
    fn high_precision_reference() {
        // 1F1(5/6; 2/3; 1/2), reference from a 50-digit series evaluation
        let got = val(5.0 / 6.0, 2.0 / 3.0, 0.5);
        assert!(((got - REF_1F1_56_23_HALF) / REF_1F1_56_23_HALF).abs() < 1e-13, "{got}");
    }

    // frozen reference value (50-digit arithmetic)
    const REF_1F1_56_23_HALF: f64 = 1.8317387078963084393;

    #[test]
    fn pole_b_rejected() {
        assert!(kummer_1f1(1.0, 0.0, 1.0).is_err());
        assert!(kummer_1f1(1.0, -3.0, 1.0).is_err());
    }

    #[test]
    fn large_argument_log_scale() {
        // 1F1(2;2;600) = e^600, beyond double range but fine in log space
        let r = kummer_1f1(2.0, 2.0, 600.0).unwrap();
        assert_eq!(r.sign, 1);
        assert!((r.log_abs - 600.0).abs() < 1e-9);
    }
}
