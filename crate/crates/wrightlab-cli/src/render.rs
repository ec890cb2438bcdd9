//! Deterministic CSV and JSON rendering: fixed column order, 9 significant
//! digits, LF line endings, byte-identical across runs for identical flags.

use std::io::Write;

use serde::Serialize;
use wrightlab::logscale::LogScaledReal;

#[derive(Debug, Clone, Serialize)]
pub struct EvalRow {
    pub method: String,
    pub value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub est_error: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub regime: Option<String>,
}

/// Scientific notation with 9 significant digits; magnitudes beyond double
/// range are assembled from the log representation.
pub fn format_logscaled(v: LogScaledReal) -> String {
    if v.sign == 0 {
        return "0.000000000e0".to_string();
    }
    match v.to_real() {
        Ok(x) => format!("{x:.8e}"),
        Err(_) => {
            let log10 = v.log_abs / std::f64::consts::LN_10;
            let mut e = log10.floor();
            let mut mant = 10f64.powf(log10 - e);
            if mant >= 9.999999995 {
                mant /= 10.0;
                e += 1.0;
            }
            let sign = if v.sign < 0 { "-" } else { "" };
            format!("{sign}{mant:.8}e{e}")
        }
    }
}

pub fn write_csv<W: Write>(rows: &[EvalRow], out: &mut W) -> std::io::Result<()> {
    out.write_all(b"method,value,est_error,regime\n")?;
    for r in rows {
        let est = r.est_error.map(|e| format!("{e:.8e}")).unwrap_or_default();
        let regime = r.regime.clone().unwrap_or_default();
        writeln!(out, "{},{},{},{}", r.method, r.value, est, regime)?;
    }
    Ok(())
}

pub fn write_json<W: Write>(rows: &[EvalRow], out: &mut W) -> std::io::Result<()> {
    #[derive(Serialize)]
    struct Doc<'a> {
        rows: &'a [EvalRow],
    }
    let doc = Doc { rows };
    let s = serde_json::to_string_pretty(&doc)?;
    out.write_all(s.as_bytes())?;
    out.write_all(b"\n")
}
