//! Named verification suites behind the CLI `verify` subcommand: each check
//! mirrors one of the library's cross-method invariants and reports its
//! worst-case residual.

use crate::asymptotics::{
    b_coeffs, c_coeffs, phi_asym_neg_rho_neg_x, psi11_saddle_approx, solve_saddle, theorem6_ratio,
};
use crate::asymptotics::coeffs::c_coeff_third_closed;
use crate::closed_forms::{phi_closed, psi11_half_integer_neg, psi11_polynomial, ArgSign};
use crate::error::Result;
use crate::integral_reps::{
    bilateral_exp_lhs, halving_relation_rhs, mellin_lhs, mixing_relation_rhs, mult_theorem_rhs,
    phi_mikusinski, phi_real_integral, positivity_scan, reflection_pair, theorem1_rhs,
    DerivedRep, MultTheorem, TheoremOneVariant,
};
use crate::integral_reps::derived_reps;
use crate::specfun::ln_gamma_signed;
use crate::wright_core::{phi_series, psi11_series, PhiParams, WrightParams};

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub worst_residual: f64,
    pub tolerance: f64,
}

fn check(name: &str, tol: f64, residual: f64) -> CheckResult {
    CheckResult { name: name.to_string(), passed: residual <= tol, worst_residual: residual, tolerance: tol }
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(1e-300)
}

fn rel_or_abs(a: f64, b: f64) -> f64 {
    let d = (a - b).abs();
    d.min(d / a.abs().max(b.abs()).max(1e-300))
}

fn phi(rho: f64, x: f64) -> f64 {
    phi_series(&PhiParams::new(rho, 0.0, x).unwrap()).unwrap()
}

/// Series-vs-closed-form identity checks.
pub fn suite_identities(tol: f64) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();

    // polynomial representation vs series across signs of rho and x
    let mut worst = 0.0f64;
    for &rho in &[-2.0 / 3.0, -0.5, -1.0 / 3.0, 1.0 / 3.0, 0.5, 1.0, 2.0, 5.0] {
        for k in 1..=8u32 {
            for &x in &[-5.0, -1.0, -0.25, 0.25, 1.0, 5.0] {
                let p = psi11_polynomial(rho, k, x)?;
                let s = psi11_series(&WrightParams::new(rho, k as f64, 0.0, x)?)?;
                worst = worst.max(p.rel_diff(s));
            }
        }
    }
    let _ = tol; // the exactness tolerance is pinned by the identity itself
    out.push(check("polynomial == series (exactness grid)", 1e-11, worst));

    // rho = -1/2 Bessel forms vs series
    let mut worst = 0.0f64;
    for k in 0..=4u32 {
        for &x in &[0.5, 1.5, 3.0, 5.0] {
            let s_neg = psi11_series(&WrightParams::new(-0.5, k as f64, 0.0, -x)?)?.to_real()?;
            let cf = psi11_half_integer_neg(k, x, ArgSign::Minus)?;
            worst = worst.max(rel(cf, s_neg));
            let s_pos = psi11_series(&WrightParams::new(-0.5, k as f64, 0.0, x)?)?.to_real()?;
            let cf = psi11_half_integer_neg(k, x, ArgSign::Plus)?;
            worst = worst.max(rel_or_abs(cf, s_pos));
        }
    }
    out.push(check("rho=-1/2 Bessel representations vs series", 1e-9, worst));

    // phi closed forms vs series on a sign-spanning grid
    let mut worst = 0.0f64;
    for &rho in &[1.0, -0.5, -1.0 / 3.0, -2.0 / 3.0] {
        for &x in &[-2.5, -1.7, -1.0, -0.4, 0.4, 1.0, 1.7, 2.5] {
            let cf = phi_closed(rho, x)?;
            let sv = phi(rho, x);
            worst = worst.max(rel_or_abs(cf, sv));
        }
    }
    out.push(check("phi closed forms vs series", 1e-9, worst));
    Ok(out)
}

/// Quadrature identity checks (each against its series/closed-form target).
pub fn suite_integrals(tol: f64) -> Result<Vec<CheckResult>> {
    let tol = tol.max(1e-6);
    let mut out = Vec::new();

    let mut worst = 0.0f64;
    for &(rho, k, x) in &[(1.0, 1.0, 0.5), (0.6, 0.0, 1.0), (2.0, 2.0, 0.7), (-0.5, 2.0, 1.0), (-1.0 / 3.0, 3.0, 2.0), (0.5, 1.0, 1.0)] {
        let eps = if rho > 0.0 { 1.0 } else { -1.0 };
        let r = mixing_relation_rhs(rho, k, x)?;
        let s = psi11_series(&WrightParams::new(rho, k, 0.0, eps * x)?)?.to_real()?;
        worst = worst.max(rel_or_abs(r.value, s));
    }
    out.push(check("mixing relation (structural)", tol, worst));

    let mut worst = 0.0f64;
    for &(k, x) in &[(1u32, 1.0), (2, 1.5), (3, 2.0)] {
        let r = theorem1_rhs(TheoremOneVariant::OneThird, k, x)?;
        let s = psi11_series(&WrightParams::new(-1.0 / 3.0, k as f64, 0.0, -x)?)?.to_real()?;
        worst = worst.max(rel_or_abs(r.value, s));
        let r = theorem1_rhs(TheoremOneVariant::TwoThirds, k, x)?;
        let s = psi11_series(&WrightParams::new(-2.0 / 3.0, k as f64, 0.0, -x)?)?.to_real()?;
        worst = worst.max(rel_or_abs(r.value, s));
    }
    out.push(check("theorem 1 kernel integrals", tol, worst));

    let mut worst = 0.0f64;
    for &(sg, x, pos) in &[(0.5, 2.0, false), (1.0 / 3.0, 1.0, false), (0.6, 1.0, true), (0.25, 2.0, false), (0.75, 1.5, true), (0.5, 1.0, true)] {
        let r = phi_real_integral(sg, x, pos)?;
        let s = phi(-sg, if pos { x } else { -x });
        worst = worst.max(rel_or_abs(r.value, s));
    }
    out.push(check("branch-cut integral (6.3)", tol, worst));

    let mut worst = 0.0f64;
    for &(sg, x) in &[(0.5, 2.0), (2.0 / 3.0, 3.0), (0.9, 1.0), (0.4, 1.5), (0.25, 1.0), (0.6, 2.0)] {
        let r = phi_mikusinski(sg, x)?;
        let s = phi(-sg, -x);
        worst = worst.max(rel_or_abs(r.value, s));
    }
    out.push(check("Mikusinski representation (6.4)", tol, worst));

    let mut worst = 0.0f64;
    for &(sg, x) in &[(0.5, 1.0), (2.0 / 3.0, 1.0), (1.0 / 3.0, 2.0), (0.8, 1.5), (0.5, 2.5), (0.4, 1.0)] {
        let r = halving_relation_rhs(sg, x)?;
        let s = phi(-sg / 2.0, -x);
        worst = worst.max(rel_or_abs(r.value, s));
    }
    out.push(check("halving relation (theorem 2)", tol, worst));

    let mut worst = 0.0f64;
    for &x in &[0.5, 1.0, 2.0, 4.0] {
        let r = derived_reps(DerivedRep::Quarter, x)?;
        worst = worst.max(rel_or_abs(r.value, phi(-0.25, -x)));
        let r = derived_reps(DerivedRep::Sixth, x)?;
        worst = worst.max(rel_or_abs(r.value, phi(-1.0 / 6.0, -x)));
    }
    out.push(check("derived representations (6.7, 6.7c)", tol, worst));

    let mut worst = 0.0f64;
    use crate::integral_reps::LaplaceVariant;
    for &(sg, d, al, z) in &[(0.5, 1.0, 1.0, 1.0), (0.5, 1.0, 2.0, 4.0), (0.4, 1.5, 1.0, 2.0)] {
        let r = laplace_transform_lhs_checked(LaplaceVariant::Neg, sg, d, al, z, true)?;
        let target = z.powf(-d) * (-al * z.powf(sg)).exp();
        worst = worst.max(rel_or_abs(r, target));
    }
    for &(rho, al, z, pos) in &[(1.0, 1.0, 2.0, true), (0.5, 1.0, 1.5, false), (1.0, 0.5, 3.0, true)] {
        let r = laplace_transform_lhs_checked(LaplaceVariant::Pos, rho, 0.0, al, z, pos)?;
        let sgn = if pos { 1.0 } else { -1.0 };
        let target = (sgn * al * z.powf(-rho)).exp() - 1.0;
        worst = worst.max(rel_or_abs(r, target));
    }
    out.push(check("Laplace transforms (6.7a, 6.7b)", tol, worst));

    let mut worst = 0.0f64;
    for &(sg, mu, x) in &[(0.5, 2.0, 1.0), (0.5, 1.0, 1.0), (2.0 / 3.0, 1.5, 2.0), (0.4, 2.5, 1.0), (0.5, 0.5, 2.0), (0.6, 2.0, 1.5)] {
        let r = mellin_lhs(sg, mu, x)?;
        let g_mu = ln_gamma_signed(mu)?;
        let g_smu = ln_gamma_signed(sg * mu)?;
        let target = x.powf(sg * mu) * g_mu.div(g_smu)?.to_real()?;
        worst = worst.max(rel_or_abs(r.value, target));
    }
    out.push(check("Mellin transform (6.8)", tol, worst));

    let mut worst = 0.0f64;
    for &(sg, s) in &[(0.5, 1.0), (0.5, 0.6), (1.0 / 3.0, 0.0), (1.0 / 3.0, 0.8), (1.0 / 3.0, 0.4), (0.6, 0.5), (0.75, 0.4)] {
        let r = bilateral_exp_lhs(sg, s)?;
        let target = (s.powf(1.0 / sg)).exp();
        worst = worst.max(rel_or_abs(r.value, target));
    }
    out.push(check("bilateral transform (6.8a/6.8b)", tol, worst));

    let mut worst = 0.0f64;
    let r = mult_theorem_rhs(MultTheorem::T3, 0.5, 0.5, 1.0, false)?;
    worst = worst.max(rel_or_abs(r.value, phi(-0.25, -1.0)));
    let r = mult_theorem_rhs(MultTheorem::T3, 0.6, 0.5, 1.5, false)?;
    worst = worst.max(rel_or_abs(r.value, phi(-0.3, -1.5)));
    let r = mult_theorem_rhs(MultTheorem::T4, 0.5, 1.0, 1.0, false)?;
    worst = worst.max(rel_or_abs(r.value, phi(-0.5, -1.0)));
    let r = mult_theorem_rhs(MultTheorem::T4, 0.5, 0.8, 1.0, false)?;
    worst = worst.max(rel_or_abs(r.value, phi(-0.4, -1.0)));
    let r = mult_theorem_rhs(MultTheorem::T5, 0.5, 1.0, 1.0, true)?;
    worst = worst.max(rel_or_abs(r.value, phi(0.5, 1.0)));
    let r = mult_theorem_rhs(MultTheorem::T5, 0.5, 1.0, 1.0, false)?;
    worst = worst.max(rel_or_abs(r.value, phi(0.5, -1.0)));
    assert!(mult_theorem_rhs(MultTheorem::T4, 1.0, 1.0, 1.0, false).is_err());
    assert!(mult_theorem_rhs(MultTheorem::T4, 1.5, 0.9, 1.0, false).is_err());
    out.push(check("multiplication theorems 3-5", tol, worst));

    let mut worst = 0.0f64;
    for &(sg, x) in &[(0.5, 1.0), (1.0 / 3.0, 0.5), (0.5, 2.0), (2.0 / 3.0, 1.0), (0.4, 1.0), (0.5, 0.5)] {
        let r = reflection_pair(sg, x, true)?;
        worst = worst.max(rel_or_abs(r.value, phi(sg, x)));
    }
    for &(sg, x) in &[(0.5, 1.0), (0.5, 0.5)] {
        let r = reflection_pair(sg, x, false)?;
        worst = worst.max(rel_or_abs(r.value, phi(-sg, -x)));
    }
    out.push(check("reflection principle (corollary 1)", tol, worst));

    let mut all_pos = true;
    let grid: Vec<f64> = (0..40)
        .map(|i| 0.05f64 * (20.0f64 / 0.05).powf(i as f64 / 39.0))
        .collect();
    for &sg in &[0.1, 0.25, 0.4, 0.5, 0.6, 0.75, 0.9] {
        let rep = positivity_scan(sg, &grid)?;
        all_pos &= rep.all_positive;
    }
    out.push(check("positivity of phi(-sigma,0;-x)", 0.5, if all_pos { 0.0 } else { 1.0 }));
    Ok(out)
}

fn laplace_transform_lhs_checked(
    v: crate::integral_reps::LaplaceVariant,
    a: f64,
    d: f64,
    al: f64,
    z: f64,
    pos: bool,
) -> Result<f64> {
    Ok(crate::integral_reps::laplace_transform_lhs(v, a, d, al, z, pos)?.value)
}

/// Saddle machinery and asymptotic-regime checks.
pub fn suite_asymptotics(tol: f64) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();

    let mut worst = 0.0f64;
    let mut sign_ok = true;
    for &rho in &[0.3, 0.5, 1.0, 2.0, 3.6, -0.2, -0.5, -0.8] {
        for &u in &[0.1, 1.0, 10.0] {
            let s = solve_saddle(rho, u)?;
            worst = worst.max(s.residual * rho.abs() * u);
            sign_ok &= (rho > 0.0) == (s.psi_value > 0.0);
        }
    }
    out.push(check("saddle residual (scaled)", 1e-12, worst));
    out.push(check("psi sign invariant", 0.5, if sign_ok { 0.0 } else { 1.0 }));

    // footnote closed forms vs Newton
    let mut worst = 0.0f64;
    for &(rho, u) in &[(1.0, 1.0), (0.5, 1.0), (2.0, 0.5)] {
        let cf = crate::integral_reps::saddle_closed_form_check(rho, u)?;
        let nw = solve_saddle(rho, u)?.t_s;
        worst = worst.max(rel(cf, nw));
    }
    for &(rho, u) in &[(-0.5, 2.0), (-0.3, 2.0), (-0.45, 1.0)] {
        let cf = crate::integral_reps::saddle_closed_form_check(rho, u)?;
        let nw = 1.0 / solve_saddle(rho, u)?.t_s;
        worst = worst.max(rel(cf, nw));
    }
    out.push(check("footnote saddle closed forms", 1e-6, worst));

    // exponentially small negative-axis form: exact at sigma = 1/2
    let mut worst = 0.0f64;
    for &x in &[1.0, 3.0, 7.0] {
        let v = phi_asym_neg_rho_neg_x(0.5, x, 5)?;
        let want = x / (2.0 * std::f64::consts::PI.sqrt()) * (-0.25 * x * x).exp();
        worst = worst.max(rel(v, want));
    }
    out.push(check("(5.8) exactness at sigma = 1/2", 1e-12, worst));

    // saddle approximation, both branches
    let approx = psi11_saddle_approx(0.5, 20.0, 20.0)?;
    let series = psi11_series(&WrightParams::new(0.5, 20.0, 0.0, 20.0)?)?;
    let r1 = (approx.div(series)?.to_real()? - 1.0).abs();
    out.push(check("saddle approx error at table-1 anchor", 1.3e-2, (r1 - 1.237e-2).abs().max(0.0)));

    let mut worst = 0.0f64;
    let a = psi11_saddle_approx(-0.5, 40.0, -80.0)?;
    let s = psi11_series(&WrightParams::new(-0.5, 40.0, 0.0, -80.0)?)?;
    worst = worst.max(a.rel_diff(s));
    out.push(check("negative-rho saddle branch", 5e-2, worst));

    // theorem 6 strict domain
    let mut worst = 0.0f64;
    worst = worst.max((theorem6_ratio(-0.5, 400.0, 2.0)? - 1.0).abs());
    worst = worst.max((theorem6_ratio(0.5, 400.0, 1.0)? - 1.0).abs());
    out.push(check("theorem 6 ratio near 1", 5e-2, worst));
    let _ = tol;
    Ok(out)
}

/// Coefficient-table checks.
pub fn suite_coeffs(_tol: f64) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();

    let b = b_coeffs(1.0, 7)?;
    let mut worst = (b.get(0) - 1.0).abs() + (b.get(1) - 0.5).abs() + (b.get(2) - 0.125).abs() + b.get(3).abs();
    let b2 = b_coeffs(2.0, 7)?;
    worst = worst.max((b2.get(1) - 1.0 / 3.0).abs());
    out.push(check("B coefficients closed forms", 1e-14, worst));

    let c = c_coeffs(-0.5, 5)?;
    let mut worst = 0.0f64;
    for j in 1..5 {
        worst = worst.max(c.get(j).abs());
    }
    out.push(check("c_j(-1/2) = 0 for j >= 1", 0.0, worst));

    let c = c_coeffs(-1.0 / 3.0, 5)?;
    let mut worst = 0.0f64;
    for j in 0..5 {
        worst = worst.max(rel(c.get(j), c_coeff_third_closed(j)));
    }
    worst = worst.max(rel(c.get(1), 5.0 / 72.0));
    out.push(check("c_j(-1/3) dual route", 1e-12, worst));

    // D-coefficient explicit lists are integer-exact; checked in unit tests,
    // revalidated here at a sample point
    let h = crate::closed_forms::d_coeffs(1.0, 4)?;
    let want = [1.0, 12.0, 36.0, 24.0];
    let mut worst = 0.0f64;
    for (a, b) in h.coeffs.iter().zip(want.iter()) {
        worst = worst.max((a - b).abs());
    }
    out.push(check("D coefficients k=4 at rho=1", 0.0, worst));
    Ok(out)
}

/// Runs the named suite ("identities", "integrals", "asymptotics", "coeffs"
/// or "all").
pub fn run_suite(name: &str, tol: f64) -> Result<Vec<CheckResult>> {
    match name {
        "identities" => suite_identities(tol),
        "integrals" => suite_integrals(tol),
        "asymptotics" => suite_asymptotics(tol),
        "coeffs" => suite_coeffs(tol),
        "all" => {
            let mut out = suite_identities(tol)?;
            out.extend(suite_integrals(tol)?);
            out.extend(suite_asymptotics(tol)?);
            out.extend(suite_coeffs(tol)?);
            Ok(out)
        }
        other => Err(crate::error::WrightError::Domain(format!(
            "verify: unknown suite '{other}' (expected identities|integrals|asymptotics|coeffs|all)"
        ))),
    }
}
