//! Fixed significant-digit rendering of reals.

/// Formats `x` with exactly `digits` significant digits.
///
/// Plain decimal notation is used for decimal exponents in `-5..digits`,
/// scientific (`1.23e-7`) outside it. Trailing zeros are kept so every
/// value in a column carries the same precision.
pub fn significant(x: f64, digits: usize) -> String {
    assert!(digits >= 1);
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return format!("{:.*}", digits - 1, 0.0);
    }
    // The exponent after rounding to `digits` places.
    let sci = format!("{:.*e}", digits - 1, x);
    let exp: i32 = sci[sci.find('e').expect("exponent") + 1..]
        .parse()
        .expect("integer exponent");
    if exp < -5 || exp >= digits as i32 {
        return sci;
    }
    let decimals = (digits as i32 - 1 - exp).max(0) as usize;
    format!("{x:.decimals$}")
}
