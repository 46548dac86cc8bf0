use crate::error::{Error, Result};
use crate::verifier::CheckResult;

pub const ANALYTIC_MIN_DEGREE: u64 = 906;
pub const REQUIRED_RELATIVE_MARGIN: f64 = 1e-6;

/// `sqrt((n-2) ln(n-2)) >= 3 ln(n-2)`, i.e. `e^sqrt((n-2) ln(n-2)) >= (n-2)^3`.
///
/// Evaluated in `f64`. The check passes only when the left side beats the
/// right by a relative margin of at least [`REQUIRED_RELATIVE_MARGIN`]; a
/// comparison that holds without clearing the margin is reported with
/// outcome `margin_not_cleared`, distinct from `fails`.
pub fn check_analytic_bound(n: u64) -> Result<CheckResult> {
    if n < ANALYTIC_MIN_DEGREE {
        return Err(Error::InvalidArgument(format!(
            "analytic bound applies from n = {ANALYTIC_MIN_DEGREE}, got {n}"
        )));
    }
    let x = (n - 2) as f64;
    let lhs = (x * x.ln()).sqrt();
    let rhs = 3.0 * x.ln();
    let margin = (lhs - rhs) / rhs;
    let outcome = if margin >= REQUIRED_RELATIVE_MARGIN {
        "holds"
    } else if lhs >= rhs {
        "margin_not_cleared"
    } else {
        "fails"
    };
    Ok(CheckResult::new(
        format!("analytic.n={n}"),
        format!("sqrt((n-2) ln(n-2)) >= 3 ln(n-2) at n = {n}"),
        outcome == "holds",
    )
    .with("n", n)
    .with("lhs", lhs)
    .with("rhs", rhs)
    .with("relative_margin", margin)
    .with("required_margin", REQUIRED_RELATIVE_MARGIN)
    .with("outcome", outcome))
}
