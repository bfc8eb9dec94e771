//! Significant-digit formatting for printed results.

/// Format `v` to `sig` significant digits in plain decimal notation.
/// With `trim` set, trailing fractional zeros are dropped, so 108.000000000
/// prints as `108`.
pub fn fmt_sig(v: f64, sig: usize, trim: bool) -> String {
    assert!(sig >= 1);
    if v == 0.0 {
        return if trim {
            "0".to_string()
        } else {
            let mut s = String::from("0.");
            s.push_str(&"0".repeat(sig - 1));
            s
        };
    }
    if !v.is_finite() {
        return v.to_string();
    }
    // Round to `sig` digits through exponent notation, then lay the digits
    // out in plain decimal.
    let scientific = format!("{:.*e}", sig - 1, v);
    let (mantissa, exponent) = scientific
        .split_once('e')
        .expect("float exponent formatting always contains e");
    let exponent: i32 = exponent.parse().expect("exponent is an integer");
    let negative = mantissa.starts_with('-');
    let digits: String = mantissa.chars().filter(char::is_ascii_digit).collect();
    debug_assert_eq!(digits.len(), sig);

    // Digits before the decimal point in plain notation.
    let point = exponent + 1;
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    if point <= 0 {
        out.push_str("0.");
        out.push_str(&"0".repeat((-point) as usize));
        out.push_str(&digits);
    } else if point as usize >= digits.len() {
        out.push_str(&digits);
        out.push_str(&"0".repeat(point as usize - digits.len()));
    } else {
        out.push_str(&digits[..point as usize]);
        out.push('.');
        out.push_str(&digits[point as usize..]);
    }
    if trim && out.contains('.') {
        out = out.trim_end_matches('0').trim_end_matches('.').to_string();
    }
    out
}
