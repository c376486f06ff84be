//! `%.*g`-style number formatting.

/// Formats `x` like C's `%.{digits}g`: `digits` significant figures, trailing
/// zeros dropped, scientific notation outside `1e-4 ≤ |x| < 10^digits`.
pub fn fmt_g(x: f64, digits: usize) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return if x.is_sign_negative() {
            "-0".into()
        } else {
            "0".into()
        };
    }
    let digits = digits.max(1);
    // Round first so the exponent reflects carries (9.99… → 10).
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= digits as i32 {
        let mantissa = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_string()
    }
}

/// Shorthand for the 15-digit form used in all printed output.
pub fn g15(x: f64) -> String {
    fmt_g(x, 15)
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_printf() {
        assert_eq!(g15(std::f64::consts::E), "2.71828182845905");
        assert_eq!(g15(0.5322), "0.5322");
        assert_eq!(g15(1.0), "1");
        assert_eq!(g15(-2.5), "-2.5");
        assert_eq!(g15(1e-5), "1e-05");
        assert_eq!(g15(0.0001), "0.0001");
        assert_eq!(g15(1.6348125198274266e30), "1.63481251982743e+30");
        assert_eq!(g15(123456789012345.0), "123456789012345");
        assert_eq!(g15(1234567890123456.0), "1.23456789012346e+15");
        assert_eq!(fmt_g(9.9999, 3), "10");
        assert_eq!(fmt_g(99999.0, 3), "1e+05");
        assert_eq!(g15(0.0), "0");
    }
}
