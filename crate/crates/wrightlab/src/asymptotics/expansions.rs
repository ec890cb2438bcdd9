//! Large-parameter approximations of 1Psi1: the exact finite expansion, the
//! large-rho form, the algebraic+exponential form for non-integer k, the two
//! saddle-point regimes, the negative-rho large-k series, and the asymptotic
//! connection to phi.

use crate::asymptotics::coeffs::d_coeffs_general;
use crate::asymptotics::saddle::solve_saddle;
use crate::closed_forms::psi11_polynomial;
use crate::error::{Result, WrightError};
use crate::logscale::LogScaledReal;
use crate::specfun::gamma::{cos_pi, recip_gamma};
use crate::specfun::{ln_gamma, ln_gamma_signed, stirling, StirlingKind};
use crate::wright_core::{phi_series, psi11_series, PhiParams, WrightParams};

/// The exact finite expansion (the polynomial representation under the
/// asymptotics API).
pub fn psi11_exact_expansion(rho: f64, k: u32, x: f64) -> Result<LogScaledReal> {
    psi11_polynomial(rho, k, x)
}

/// Large-rho behavior rho^k e^x sum_n x^{k-n} {S_k^{(k-n)} + k(k-1)/(2 rho)
/// S_{k-1}^{(k-n)}}, truncated at `order` in 1/rho (0 or 1).
pub fn psi11_large_rho(rho: f64, k: u32, x: f64, order: u8) -> Result<LogScaledReal> {
    if k == 0 {
        return Ok(LogScaledReal::new(1, x));
    }
    let ku = k as usize;
    let mut sum = 0.0f64;
    for n in 0..ku {
        let s_k = big_to_f64(&stirling(StirlingKind::Second, ku, ku - n)?);
        let mut brace = s_k;
        if order >= 1 && ku >= 1 && ku - n <= ku - 1 {
            let s_k1 = big_to_f64(&stirling(StirlingKind::Second, ku - 1, ku - n)?);
            brace += k as f64 * (k as f64 - 1.0) / (2.0 * rho) * s_k1;
        }
        sum += x.powi((ku - n) as i32) * brace;
    }
    Ok(LogScaledReal::new(1, k as f64 * rho.abs().ln() + x)
        .mul(LogScaledReal::from_real(if rho < 0.0 && k % 2 == 1 { -sum } else { sum })))
}

fn big_to_f64(b: &num_bigint::BigInt) -> f64 {
    use num_traits::ToPrimitive;
    b.to_f64().unwrap_or(f64::INFINITY)
}

/// Algebraic-plus-exponential expansion for rho > 0, non-integer k > 0 and
/// x < 0: the descending-power series plus the exponentially small
/// x^k e^x part, evaluated as its real on-axis combination.
pub fn psi11_algebraic_expansion(rho: f64, k: f64, x: f64, n_terms: usize) -> Result<f64> {
    if rho <= 0.0 {
        return Err(WrightError::Domain(format!("psi11_algebraic_expansion: rho = {rho} must be positive")));
    }
    if (k - k.round()).abs() < 1e-10 {
        return Err(WrightError::Domain(format!(
            "psi11_algebraic_expansion: k = {k} is an integer; the exact expansion applies instead"
        )));
    }
    if k <= 0.0 {
        return Err(WrightError::Domain(format!("psi11_algebraic_expansion: k = {k} must be positive")));
    }
    if x >= 0.0 {
        return Err(WrightError::Domain(format!("psi11_algebraic_expansion: x = {x} must be negative")));
    }
    if n_terms > 20 {
        return Err(WrightError::Range(format!("psi11_algebraic_expansion: n_terms = {n_terms} > 20")));
    }
    let ax = -x;
    // algebraic component
    let mut alg = 0.0f64;
    let mut fact = 1.0f64;
    for s in 0..n_terms {
        let sf = s as f64;
        if s > 0 {
            fact *= sf;
        }
        let sign = if s % 2 == 0 { 1.0 } else { -1.0 };
        let g = ln_gamma_signed((sf + k) / rho)?;
        let term = sign / fact
            * g.sign as f64
            * (g.log_abs - (sf + k) / rho * ax.ln()).exp()
            * recip_gamma(-sf - k);
        alg += term;
    }
    alg /= rho;
    // exponentially small component: |x|^k e^{-|x|} cos(pi k) sum A_j (-|x|)^{-j},
    // A_j = rho^{k-j} D_j with the general-k D_j, capped at 4 terms
    let d = d_coeffs_general(rho, k, 4)?;
    let mut tail = 0.0f64;
    for (j, dj) in d.values.iter().enumerate() {
        let a_j = rho.powf(k - j as f64) * dj;
        tail += a_j * (-ax).powi(-(j as i32));
    }
    let expo = (k * ax.ln() - ax).exp() * cos_pi(k) * tail;
    Ok(alg + expo)
}

/// Saddle-point approximation of 1Psi1(rho,k;rho,0;x)/1 with u = |x|/k:
/// for rho > 0 at x > 0, and for rho in (-1,0) at x < 0.
pub fn psi11_saddle_approx(rho: f64, k: f64, x: f64) -> Result<LogScaledReal> {
    if k <= 0.0 {
        return Err(WrightError::Domain(format!("psi11_saddle_approx: k = {k} must be positive")));
    }
    if rho > 0.0 && x <= 0.0 {
        return Err(WrightError::Domain("psi11_saddle_approx: rho > 0 needs x > 0".into()));
    }
    if rho < 0.0 && x >= 0.0 {
        return Err(WrightError::Domain("psi11_saddle_approx: rho in (-1,0) needs x < 0".into()));
    }
    let u = x.abs() / k;
    let s = solve_saddle(rho, u)?;
    let log_pref = 0.5 * (k / (2.0 * std::f64::consts::PI * (1.0 + rho))).ln()
        - 0.5 * (s.t_s - rho / (1.0 + rho)).ln();
    Ok(LogScaledReal::new(1, ln_gamma(k)? + log_pref + k * s.psi_value))
}

/// Leading large-k behavior for rho > 0 and k/x large, built from the
/// chi-series of k psi(t_s0); `n_terms` keeps 1..=4 brace terms.
pub fn psi11_largek_smallx(rho: f64, k: f64, x: f64, n_terms: usize) -> Result<LogScaledReal> {
    if rho <= 0.0 {
        return Err(WrightError::Domain("psi11_largek_smallx: rho must be positive".into()));
    }
    if x <= 0.0 || k <= 0.0 {
        return Err(WrightError::Domain("psi11_largek_smallx: k and x must be positive".into()));
    }
    if n_terms == 0 || n_terms > 4 {
        return Err(WrightError::Range(format!(
            "psi11_largek_smallx: n_terms = {n_terms} outside 1..=4"
        )));
    }
    let p = 1.0 + rho;
    let chi = (k / (rho * x)).powf(1.0 / p);
    let lead = (rho * k.powf(rho) * x).powf(1.0 / p);
    let brace = [
        p / rho,
        0.5,
        (2.0 * rho - 1.0) / (6.0 * p),
        (3.0 * rho - 1.0) * (rho - 1.0) / (12.0 * p * p),
    ];
    let mut kpsi = 0.0;
    for (i, b) in brace.iter().take(n_terms).enumerate() {
        kpsi += b * chi.powi(-(i as i32));
    }
    kpsi *= lead;
    let log_pref = -0.5 * (2.0 * std::f64::consts::PI * p).ln()
        + (rho * x * k.powf(rho)).ln() / (2.0 * p);
    Ok(LogScaledReal::new(1, ln_gamma(k)? + log_pref + kpsi))
}

/// Negative-rho large-k series, normalized by Gamma(k):
/// x k^rho / Gamma(rho) {1 + x k^rho Gamma(rho)/(2 Gamma(2 rho))
/// - rho(1-rho)/(2k) + x^2 k^{2 rho} Gamma(rho)/(6 Gamma(3 rho))}.
pub fn psi11_negrho_largek(rho: f64, k: f64, x: f64) -> Result<f64> {
    if !(-1.0..0.0).contains(&rho) {
        return Err(WrightError::Domain(format!(
            "psi11_negrho_largek: rho = {rho} outside (-1, 0)"
        )));
    }
    if k <= 0.0 {
        return Err(WrightError::Domain("psi11_negrho_largek: k must be positive".into()));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    let g_rho = ln_gamma_signed(rho)?;
    let gamma_rho = g_rho.sign as f64 * g_rho.log_abs.exp();
    let xk = x * k.powf(rho);
    let brace = 1.0 + xk * gamma_rho * recip_gamma(2.0 * rho) / 2.0 - rho * (1.0 - rho) / (2.0 * k)
        + xk * xk * gamma_rho * recip_gamma(3.0 * rho) / 6.0;
    Ok(xk / gamma_rho * brace)
}

/// 1Psi1(rho,k;rho,0;x) / (Gamma(k) phi(rho,0;x k^rho)); tends to 1 as
/// k grows on the strict validity domain (rho < 1 positive, or rho in (-1,0)).
pub fn theorem6_ratio(rho: f64, k: f64, x: f64) -> Result<f64> {
    let p = WrightParams::new(rho, k, 0.0, x)?;
    let num = psi11_series(&p)?;
    let arg = x * k.powf(rho);
    let phi = phi_series(&PhiParams::new(rho, 0.0, arg)?)?;
    if phi == 0.0 {
        return Err(WrightError::Numerical(
            "theorem6_ratio: phi underflowed to zero; ratio undefined".into(),
        ));
    }
    let denom = ln_gamma_signed(k)?.mul(LogScaledReal::from_real(phi));
    num.div(denom)?.to_real()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wright_core::{psi11_normalized, psi11_series_diag};

    #[test]
    fn exact_expansion_spots() {
        // (rho=1, k=2, x=10) -> 100 e^10 * 1.2
        let v = psi11_exact_expansion(1.0, 2, 10.0).unwrap().to_real().unwrap();
        let want = 100.0 * 10f64.exp() * 1.2;
        assert!(((v - want) / want).abs() < 1e-13);
        // (rho=0.5, k=1, x=-3) -> -1.5 e^{-3}
        let v = psi11_exact_expansion(0.5, 1, -3.0).unwrap().to_real().unwrap();
        let want = -1.5 * (-3.0f64).exp();
        assert!(((v - want) / want).abs() < 1e-13);
        // (rho=2, k=1, x=1) -> 2e
        let v = psi11_exact_expansion(2.0, 1, 1.0).unwrap().to_real().unwrap();
        assert!(((v - 2.0 * 1f64.exp()) / v).abs() < 1e-13);
    }

    #[test]
    fn large_rho_order0_exact_at_k1() {
        for &rho in &[3.0, 50.0, 1000.0] {
            let v = psi11_large_rho(rho, 1, 2.0, 0).unwrap();
            let want = rho * 2.0 * 2f64.exp();
            assert!((v.to_real().unwrap() - want).abs() < 1e-12 * want);
        }
    }

    #[test]
    fn large_rho_accuracy_ladder() {
        // order-1 truncation: error O(rho^-2)
        let exact = |rho: f64, k: u32, x: f64| psi11_polynomial(rho, k, x).unwrap();
        let v = psi11_large_rho(50.0, 2, 1.0, 1).unwrap();
        let e = exact(50.0, 2, 1.0);
        assert!(v.rel_diff(e) < 4e-4, "{}", v.rel_diff(e));
        let v = psi11_large_rho(1000.0, 3, 2.0, 1).unwrap();
        let e = exact(1000.0, 3, 2.0);
        assert!(v.rel_diff(e) < 1e-5, "{}", v.rel_diff(e));
    }

    #[test]
    fn algebraic_expansion_vs_series() {
        // 50-digit series references: the direct f64 series is noise-bound at
        // these arguments (peak terms reach e^30), so the oracles are frozen
        const S_05_15_M30: f64 = 6.4912576059320084856e-5;
        const S_1_05_M20: f64 = -0.1164618413841543406;
        const S_1_05_M30: f64 = -0.093727973002119228448;
        const S_1_05_M40: f64 = -0.08061438097588925316;
        let a1 = psi11_algebraic_expansion(0.5, 1.5, -30.0, 4).unwrap();
        assert!(((a1 - S_05_15_M30) / S_05_15_M30).abs() < 1e-3, "{a1}");
        let a2 = psi11_algebraic_expansion(1.0, 0.5, -40.0, 6).unwrap();
        assert!(((a2 - S_1_05_M40) / S_1_05_M40).abs() < 1e-5, "{a2}");
        // error decreasing in |x|
        let rel = |x: f64, s: f64| {
            let a = psi11_algebraic_expansion(1.0, 0.5, x, 6).unwrap();
            ((a - s) / s).abs()
        };
        let (r20, r30, r40) = (
            rel(-20.0, S_1_05_M20),
            rel(-30.0, S_1_05_M30),
            rel(-40.0, S_1_05_M40),
        );
        assert!(r20 >= r30 && r30 >= r40, "{r20} {r30} {r40}");
        assert!(psi11_algebraic_expansion(1.0, 2.0, -30.0, 4).is_err());
        assert!(psi11_algebraic_expansion(1.0, 0.5, 30.0, 4).is_err());
    }

    #[test]
    fn saddle_approx_table1_style() {
        // rho=0.5, k=20, x=20: relative error 1.237e-2 against the series
        let approx = psi11_saddle_approx(0.5, 20.0, 20.0).unwrap();
        let series = psi11_normalized(&WrightParams::new(0.5, 20.0, 0.0, 20.0).unwrap()).unwrap();
        let approx_hat = approx.div(ln_gamma_signed(20.0).unwrap()).unwrap();
        let rel = (approx_hat.div(series).unwrap().to_real().unwrap() - 1.0).abs();
        assert!((rel - 1.237e-2).abs() < 2e-5, "{rel}");
    }

    #[test]
    fn saddle_approx_negative_rho() {
        // rho=-1/2: the f64 series is noise-bound here (peak terms e^324), so
        // the oracle is the K-Bessel closed form evaluated at 300 digits
        const HAT_K40: f64 = 1.444967799e-13; // 1Psi1(-1/2,40;-1/2,0;-80)/Gamma(40)
        const HAT_K80: f64 = 1.574937666e-26;
        let hat = |k: f64, x: f64| {
            psi11_saddle_approx(-0.5, k, x)
                .unwrap()
                .div(ln_gamma_signed(k).unwrap())
                .unwrap()
                .to_real()
                .unwrap()
        };
        let rel = (hat(40.0, -80.0) / HAT_K40 - 1.0).abs();
        assert!(rel < 5e-2, "{rel}");
        // and tightens as k doubles at fixed u
        let rel2 = (hat(80.0, -160.0) / HAT_K80 - 1.0).abs();
        assert!(rel2 < rel, "{rel2} vs {rel}");
    }

    #[test]
    fn largek_smallx_table2_style() {
        // rho=0.5, k=20, x=1 with the 3-term brace: error 1.117e-1
        let approx = psi11_largek_smallx(0.5, 20.0, 1.0, 3).unwrap();
        let series = psi11_normalized(&WrightParams::new(0.5, 20.0, 0.0, 1.0).unwrap()).unwrap();
        let hat = approx.div(ln_gamma_signed(20.0).unwrap()).unwrap();
        let rel = (hat.div(series).unwrap().to_real().unwrap() - 1.0).abs();
        assert!((rel - 1.117e-1).abs() < 2e-4, "{rel}");
    }

    #[test]
    fn largek_specializations() {
        // rho=1: the explicit form Gamma(k)/(2 sqrt(pi)) (kx)^{1/4}
        // exp[2 sqrt(kx)(1 + (x/k)^{1/2}/4 + (x/k)/24)] equals the generic path
        let (k, x) = (100.0f64, 1.0f64);
        let explicit = ln_gamma(k).unwrap() - (2.0 * std::f64::consts::PI.sqrt()).ln()
            + 0.25 * (k * x).ln()
            + 2.0 * (k * x).sqrt() * (1.0 + 0.25 * (x / k).sqrt() + (x / k) / 24.0);
        let generic = psi11_largek_smallx(1.0, k, x, 4).unwrap();
        assert!((generic.log_abs - explicit).abs() < 1e-12 * explicit.abs());
        // rho=2: Gamma(k)/sqrt(6 pi) (2k^2 x)^{1/6}
        // exp[(3/2) k^{2/3} (2x)^{1/3} (1 + (2x/k)^{1/3}/3 + (2x/k)^{2/3}/9)]
        let (k, x) = (60.0f64, 0.5f64);
        let explicit = ln_gamma(k).unwrap() - 0.5 * (6.0 * std::f64::consts::PI).ln()
            + (2.0 * k * k * x).ln() / 6.0
            + 1.5 * k.powf(2.0 / 3.0) * (2.0 * x).powf(1.0 / 3.0)
                * (1.0 + (2.0 * x / k).powf(1.0 / 3.0) / 3.0 + (2.0 * x / k).powf(2.0 / 3.0) / 9.0);
        let generic = psi11_largek_smallx(2.0, k, x, 3).unwrap();
        assert!((generic.log_abs - explicit).abs() < 1e-12 * explicit.abs());
    }

    #[test]
    fn negrho_largek_values() {
        // rho=-1/2, k=100, x=1: equals the specialization with the k^rho term dropped
        let v = psi11_negrho_largek(-0.5, 100.0, 1.0).unwrap();
        let want = -1.0 / (2.0 * (100.0f64 * std::f64::consts::PI).sqrt())
            * (1.0 + (3.0 / 8.0 - 0.25) / 100.0);
        assert!(((v - want) / want).abs() < 1e-12, "{v} vs {want}");
        // cross-check against the normalized series
        let s = psi11_normalized(&WrightParams::new(-0.5, 100.0, 0.0, 1.0).unwrap())
            .unwrap()
            .to_real()
            .unwrap();
        assert!(((v - s) / s).abs() < 1e-4, "{v} vs {s}");
        assert_eq!(psi11_negrho_largek(-0.5, 50.0, 0.0).unwrap(), 0.0);
        // rho=-1/3, k=200, x=-2
        let v = psi11_negrho_largek(-1.0 / 3.0, 200.0, -2.0).unwrap();
        let s = psi11_normalized(&WrightParams::new(-1.0 / 3.0, 200.0, 0.0, -2.0).unwrap())
            .unwrap()
            .to_real()
            .unwrap();
        assert!(((v - s) / s).abs() < 0.05 * 200.0f64.powf(-2.0 / 3.0) * 10.0, "{v} vs {s}");
    }

    #[test]
    fn theorem6_ratios() {
        // strict convergence for rho < 1 and negative rho
        let r = theorem6_ratio(-0.5, 400.0, 2.0).unwrap();
        assert!((r - 1.0).abs() < 0.05, "{r}");
        let r4 = theorem6_ratio(-1.0 / 3.0, 10000.0, -1.0).unwrap();
        let r2 = theorem6_ratio(-1.0 / 3.0, 100.0, -1.0).unwrap();
        assert!((r4 - 1.0).abs() < (r2 - 1.0).abs());
        // rho = 1: approaches e^{x/2}, monotonically from above
        let a = theorem6_ratio(1.0, 400.0, 1.0).unwrap();
        let b = theorem6_ratio(1.0, 100.0, 1.0).unwrap();
        assert!((a - 1.0).abs() < (b - 1.0).abs());
        assert!((a - 0.5f64.exp()).abs() < 0.02, "{a}");
    }
}
