//! Decimal formatting of coefficients.

/// Digits needed for a lossless `f64` round trip.
pub const LOSSLESS_DIGITS: usize = 17;

/// Formats `x` rounded to `digits` significant digits (clamped to 1..=17),
/// printed in the shortest form that parses back to the rounded value.
/// Negative zero prints as `0`.
pub fn format_real(x: f64, digits: usize) -> String {
    let digits = digits.clamp(1, LOSSLESS_DIGITS);
    let rounded: f64 = format!("{:.*e}", digits - 1, x).parse().unwrap_or(x);
    if rounded == 0.0 {
        return "0".to_string();
    }
    let mag = rounded.abs();
    if (1e-5..1e16).contains(&mag) || !mag.is_finite() {
        format!("{rounded}")
    } else {
        format!("{rounded:e}")
    }
}
