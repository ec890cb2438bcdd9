//! Direct convergent-series evaluation of 1Psi1(rho,k;rho,delta;x) and the
//! reduced Wright function phi(rho,delta;x).
//!
//! Terms live in log space (table rows reach 1e143 with k = 1000 before
//! normalization); when the whole computation fits double range the terms are
//! instead carried in double-double so that sign cancellation at negative
//! arguments does not amplify round-off.

use crate::dd::Dd;
use crate::error::{Result, WrightError};
use crate::logscale::{LogScaledReal, LogSum};
use crate::series::{max_terms, Convergence};
use crate::specfun::gamma::recip_gamma_log;
use crate::specfun::{ln_gamma_signed, recip_gamma};

const INT_TOL: f64 = 1e-12;

fn near_nonpos_int(z: f64) -> bool {
    z < 0.5 && (z - z.round()).abs() < 1e-9
}

/// Parameters of a 1Psi1(rho, k; rho, delta; x) evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WrightParams {
    pub rho: f64,
    pub k: f64,
    pub delta: f64,
    pub x: f64,
}

impl WrightParams {
    pub fn new(rho: f64, k: f64, delta: f64, x: f64) -> Result<Self> {
        if !(rho.is_finite() && k.is_finite() && delta.is_finite() && x.is_finite()) {
            return Err(WrightError::Domain("WrightParams: non-finite input".into()));
        }
        if rho == 0.0 || rho <= -1.0 {
            return Err(WrightError::Domain(format!(
                "WrightParams: rho = {rho} violates rho in (-1,0) union (0,inf)"
            )));
        }
        if k < 0.0 {
            return Err(WrightError::Domain(format!("WrightParams: k = {k} must be >= 0")));
        }
        if rho < 0.0 && (k - k.round()).abs() > INT_TOL {
            return Err(WrightError::Domain(format!(
                "WrightParams: k = {k} must be a non-negative integer when rho = {rho} < 0"
            )));
        }
        Ok(WrightParams { rho, k, delta, x })
    }

    /// k rounded, when k is integer within tolerance.
    pub fn integer_k(&self) -> Option<u32> {
        if (self.k - self.k.round()).abs() < INT_TOL && self.k.round() >= 0.0 {
            Some(self.k.round() as u32)
        } else {
            None
        }
    }
}

/// Parameters of a phi(rho, delta; x) evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhiParams {
    pub rho: f64,
    pub delta: f64,
    pub x: f64,
}

impl PhiParams {
    pub fn new(rho: f64, delta: f64, x: f64) -> Result<Self> {
        if !(rho.is_finite() && delta.is_finite() && x.is_finite()) {
            return Err(WrightError::Domain("PhiParams: non-finite input".into()));
        }
        if rho == 0.0 || rho <= -1.0 {
            return Err(WrightError::Domain(format!(
                "PhiParams: rho = {rho} violates rho in (-1,0) union (0,inf)"
            )));
        }
        Ok(PhiParams { rho, delta, x })
    }
}

/// Series value plus the round-off noise floor of its evaluation, used by
/// quadrature drivers to budget truncation points.
#[derive(Debug, Clone, Copy)]
pub struct SeriesDiag {
    pub value: LogScaledReal,
    /// log of the absolute noise floor (eps times the peak term magnitude)
    pub noise_log: f64,
    pub terms: usize,
}

enum RatioPath {
    /// Gamma(k + rho n)/Gamma(rho n + delta) = prod_{j<m} (rho n + delta + j)
    Rising { m: u32 },
    /// exp(ln Gamma difference), denominator poles contribute zero
    LogGamma,
}

fn ratio_path(p: &WrightParams) -> RatioPath {
    let m = p.k - p.delta;
    if m >= -INT_TOL && (m - m.round()).abs() < INT_TOL {
        RatioPath::Rising { m: m.round() as u32 }
    } else {
        RatioPath::LogGamma
    }
}

/// 1Psi1(rho,k;rho,delta;x) as a log-scaled real.
pub fn psi11_series(p: &WrightParams) -> Result<LogScaledReal> {
    Ok(psi11_series_diag(p)?.value)
}

pub fn psi11_series_diag(p: &WrightParams) -> Result<SeriesDiag> {
    if p.x == 0.0 {
        // only the n = 0 term Gamma(k)/Gamma(delta) survives
        let value = match ratio_path(p) {
            RatioPath::Rising { m } => {
                let mut prod = 1.0f64;
                for j in 0..m {
                    prod *= p.delta + j as f64;
                }
                LogScaledReal::from_real(prod)
            }
            RatioPath::LogGamma => {
                if near_nonpos_int(p.delta) {
                    LogScaledReal::ZERO
                } else {
                    ln_gamma_signed(p.k)?.div(ln_gamma_signed(p.delta)?)?
                }
            }
        };
        return Ok(SeriesDiag { value, noise_log: f64::NEG_INFINITY, terms: 1 });
    }
    match ratio_path(p) {
        RatioPath::Rising { m } => {
            if let Some(diag) = psi11_rising_dd(p, m) {
                return Ok(diag);
            }
            psi11_rising_log(p, m)
        }
        RatioPath::LogGamma => psi11_loggamma(p),
    }
}

/// Double-double rising-product path; None when the magnitudes leave double range.
fn psi11_rising_dd(p: &WrightParams, m: u32) -> Option<SeriesDiag> {
    if m > 200 {
        return None;
    }
    let cap = max_terms();
    let mut pow = Dd::ONE; // x^n / n!
    let mut sum = Dd::ZERO;
    let mut peak = 0.0f64;
    let mut streak = 0;
    for n in 0..cap {
        let nf = n as f64;
        if n > 0 {
            pow = pow.mul_f64(p.x).div_f64(nf);
        }
        let mut prod = Dd::ONE;
        // rho*n exactly, then the m ascending factors
        let base = Dd::from(p.rho).mul_f64(nf).add_f64(p.delta);
        for j in 0..m {
            prod = prod.mul(base.add_f64(j as f64));
        }
        let term = prod.mul(pow);
        if !term.hi.is_finite() || term.hi.abs() > 1e290 {
            return None;
        }
        sum = sum.add(term);
        let t_abs = term.abs().value();
        if t_abs > peak {
            peak = t_abs;
        }
        if t_abs < sum.abs().value() * f64::EPSILON + 1e-305 {
            streak += 1;
            if streak >= 3 && n > 4 {
                let value = LogScaledReal::from_real(sum.value());
                let noise_log = if peak > 0.0 { peak.ln() - 106.0f64 * std::f64::consts::LN_2 } else { f64::NEG_INFINITY };
                return Some(SeriesDiag { value, noise_log, terms: n + 1 });
            }
        } else {
            streak = 0;
        }
    }
    None // cap exceeded in the dd path; log path will report properly
}

/// Log-space rising-product path for magnitudes beyond double range.
fn psi11_rising_log(p: &WrightParams, m: u32) -> Result<SeriesDiag> {
    let cap = max_terms();
    let mut acc = LogSum::new();
    let mut conv = Convergence::new();
    let lx = p.x.abs().ln();
    let xsign: i8 = if p.x >= 0.0 { 1 } else { -1 };
    let mut log_fact = 0.0f64;
    let mut last_log = f64::NEG_INFINITY;
    for n in 0..cap {
        let nf = n as f64;
        if n > 0 {
            log_fact += nf.ln();
        }
        let base = p.rho * nf + p.delta;
        let mut sign = 1i8;
        let mut log_abs = 0.0f64;
        let mut zero = false;
        for j in 0..m {
            let f = base + j as f64;
            if f == 0.0 {
                zero = true;
                break;
            }
            if f < 0.0 {
                sign = -sign;
            }
            log_abs += f.abs().ln();
        }
        if !zero {
            let term_log = log_abs + nf * lx - log_fact;
            let s = if xsign == 1 || n % 2 == 0 { sign } else { -sign };
            acc.add(s, term_log);
            last_log = term_log;
            let total = acc.total();
            let sum_log = if total.is_zero() { f64::NEG_INFINITY } else { total.log_abs };
            if conv.update(term_log, sum_log) && n > 4 {
                return Ok(SeriesDiag { value: total, noise_log: acc.noise_log(), terms: n + 1 });
            }
        }
    }
    Err(WrightError::Convergence {
        context: format!("psi11_series(rho={}, k={}, delta={}, x={})", p.rho, p.k, p.delta, p.x),
        terms: cap,
        last_term_log: last_log,
    })
}

/// ln-gamma ratio path for non-integer k - delta.
fn psi11_loggamma(p: &WrightParams) -> Result<SeriesDiag> {
    let cap = max_terms();
    let mut acc = LogSum::new();
    let mut conv = Convergence::new();
    let lx = p.x.abs().ln();
    let mut log_fact = 0.0f64;
    let mut last_log = f64::NEG_INFINITY;
    for n in 0..cap {
        let nf = n as f64;
        if n > 0 {
            log_fact += nf.ln();
        }
        let num_arg = p.k + p.rho * nf;
        let den_arg = p.rho * nf + p.delta;
        let den_pole = near_nonpos_int(den_arg);
        if near_nonpos_int(num_arg) && !den_pole {
            return Err(WrightError::Domain(format!(
                "psi11_series: numerator gamma singular at n = {n} (k + rho n = {num_arg}) with regular denominator"
            )));
        }
        if den_pole {
            continue; // reciprocal gamma vanishes: the term contributes nothing
        }
        let term = ln_gamma_signed(num_arg)?.div(ln_gamma_signed(den_arg)?)?;
        let xs: i8 = if p.x >= 0.0 || n % 2 == 0 { 1 } else { -1 };
        let full = term.mul(LogScaledReal::new(xs, nf * lx - log_fact));
        acc.add_term(full);
        last_log = full.log_abs;
        let total = acc.total();
        let sum_log = if total.is_zero() { f64::NEG_INFINITY } else { total.log_abs };
        if conv.update(full.log_abs, sum_log) && n > 4 {
            return Ok(SeriesDiag { value: total, noise_log: acc.noise_log(), terms: n + 1 });
        }
    }
    Err(WrightError::Convergence {
        context: format!("psi11_series(rho={}, k={}, delta={}, x={})", p.rho, p.k, p.delta, p.x),
        terms: cap,
        last_term_log: last_log,
    })
}

/// 1Psi1(rho,k;rho,0;x) / Gamma(k), all in log space.
pub fn psi11_normalized(p: &WrightParams) -> Result<LogScaledReal> {
    if p.k <= 0.0 {
        return Err(WrightError::Domain(format!("psi11_normalized: k = {} must be positive", p.k)));
    }
    let raw = psi11_series(p)?;
    raw.div(ln_gamma_signed(p.k)?)
}

/// phi(rho, delta; x) as an ordinary double.
pub fn phi_series(p: &PhiParams) -> Result<f64> {
    let d = phi_series_diag(p)?;
    d.value.to_real()
}

/// phi with its noise floor; integrands use the floor to budget truncation.
pub fn phi_series_diag(p: &PhiParams) -> Result<SeriesDiag> {
    if p.x == 0.0 {
        return Ok(SeriesDiag {
            value: LogScaledReal::from_real(recip_gamma(p.delta)),
            noise_log: f64::NEG_INFINITY,
            terms: 1,
        });
    }
    if let Some(diag) = phi_dd(p) {
        return Ok(diag);
    }
    phi_log(p)
}

fn phi_dd(p: &PhiParams) -> Option<SeriesDiag> {
    let cap = max_terms();
    let mut pow = Dd::ONE;
    // log of |x^n/n!|, carried alongside so under/overflow of pow or of the
    // reciprocal gamma can be classified instead of aborting
    let mut pow_log = 0.0f64;
    let lx = p.x.abs().ln();
    let mut sum = Dd::ZERO;
    let mut peak = 0.0f64;
    let mut streak = 0;
    for n in 0..cap {
        let nf = n as f64;
        if n > 0 {
            pow = pow.mul_f64(p.x).div_f64(nf);
            pow_log += lx - nf.ln();
        }
        let arg = p.rho * nf + p.delta;
        let r = recip_gamma_log(arg);
        if r.is_zero() {
            continue; // gamma-pole zero term; must not count toward the streak
        }
        let t_log = pow_log + r.log_abs;
        let sum_abs = sum.abs().value();
        let negligible = t_log < sum_abs.max(1e-300).ln() + f64::EPSILON.ln() - 6.0;
        if pow.hi == 0.0 || r.log_abs > 700.0 {
            if negligible {
                streak += 1;
                if streak >= 3 && n > 4 {
                    let noise_log =
                        if peak > 0.0 { peak.ln() + f64::EPSILON.ln() } else { f64::NEG_INFINITY };
                    return Some(SeriesDiag {
                        value: LogScaledReal::from_real(sum.value()),
                        noise_log,
                        terms: n + 1,
                    });
                }
                continue;
            }
            return None; // significant term with unrepresentable factors
        }
        // the linear reciprocal keeps 1-ulp accuracy on moderate arguments
        let r_f64 = if (-150.0..170.0).contains(&arg) {
            recip_gamma(arg)
        } else {
            r.sign as f64 * r.log_abs.exp()
        };
        let term = pow.mul_f64(r_f64);
        if !term.hi.is_finite() || term.hi.abs() > 1e290 || !pow.hi.is_finite() || pow.hi.abs() > 1e290 {
            return None;
        }
        sum = sum.add(term);
        let t_abs = term.abs().value();
        if t_abs > peak {
            peak = t_abs;
        }
        if t_abs < sum.abs().value() * f64::EPSILON + 1e-305 {
            streak += 1;
            if streak >= 3 && n > 4 {
                // noise floor: f64 eps times the peak (recip_gamma rounds in f64)
                let noise_log = if peak > 0.0 { peak.ln() + f64::EPSILON.ln() } else { f64::NEG_INFINITY };
                return Some(SeriesDiag {
                    value: LogScaledReal::from_real(sum.value()),
                    noise_log,
                    terms: n + 1,
                });
            }
        } else {
            streak = 0;
        }
    }
    None
}

fn phi_log(p: &PhiParams) -> Result<SeriesDiag> {
    let cap = max_terms();
    let mut acc = LogSum::new();
    let mut conv = Convergence::new();
    let lx = p.x.abs().ln();
    let mut log_fact = 0.0f64;
    let mut last_log = f64::NEG_INFINITY;
    for n in 0..cap {
        let nf = n as f64;
        if n > 0 {
            log_fact += nf.ln();
        }
        let r = recip_gamma_log(p.rho * nf + p.delta);
        if r.is_zero() {
            continue; // gamma-pole zero term, skipped without touching the streak
        }
        let pow_log = nf * lx - log_fact;
        let xs: i8 = if p.x >= 0.0 || n % 2 == 0 { 1 } else { -1 };
        let term = LogScaledReal::new(xs * r.sign, pow_log + r.log_abs);
        acc.add_term(term);
        last_log = term.log_abs;
        let total = acc.total();
        let sum_log = if total.is_zero() { f64::NEG_INFINITY } else { total.log_abs };
        if conv.update(term.log_abs, sum_log) && n > 4 {
            return Ok(SeriesDiag { value: total, noise_log: acc.noise_log(), terms: n + 1 });
        }
    }
    Err(WrightError::Convergence {
        context: format!("phi_series(rho={}, delta={}, x={})", p.rho, p.delta, p.x),
        terms: cap,
        last_term_log: last_log,
    })
}
