//! Locale-independent number formatting for tables and CSV output.

/// Fixed-point rendering with `digits` significant digits, e.g.
/// `fixed_sig(0.75, 8) == "0.75000000"`.
pub fn fixed_sig(x: f64, digits: usize) -> String {
    if !x.is_finite() {
        return non_finite(x);
    }
    if x == 0.0 {
        return format!("{:.*}", digits.saturating_sub(1), 0.0);
    }
    let exponent = x.abs().log10().floor() as i64;
    let decimals = (digits as i64 - 1 - exponent).max(0) as usize;
    format!("{x:.decimals$}")
}

/// Scientific rendering with `digits` significant digits, e.g.
/// `sci_sig(-0.0248, 3) == "-2.48e-2"`.
pub fn sci_sig(x: f64, digits: usize) -> String {
    if !x.is_finite() {
        return non_finite(x);
    }
    format!("{:.*e}", digits.saturating_sub(1), x)
}

fn non_finite(x: f64) -> String {
    if x.is_nan() {
        "nan".into()
    } else if x > 0.0 {
        "+inf".into()
    } else {
        "-inf".into()
    }
}
