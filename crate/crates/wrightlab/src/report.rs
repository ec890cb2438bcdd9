//! Cross-method comparison rows.

use crate::logscale::LogScaledReal;

/// One evaluation result labelled by method, for CLI rows and regime dispatch.
#[derive(Debug, Clone)]
pub struct MethodReport {
    /// one of: series | poly | closed | saddle | largek | algebraic |
    /// regime:<name> | quad:<id>
    pub method: String,
    pub value: LogScaledReal,
    /// estimated absolute or first-omitted-term error, when available
    pub est_error: Option<f64>,
    /// asymptotic regime label, when the method dispatches on one
    pub regime: Option<String>,
    /// wall time of the evaluation; not serialized (output must be
    /// byte-identical across runs)
    pub wall_ns: u128,
}

impl MethodReport {
    pub fn new(method: &str, value: LogScaledReal) -> Self {
        MethodReport { method: method.to_string(), value, est_error: None, regime: None, wall_ns: 0 }
    }
}
