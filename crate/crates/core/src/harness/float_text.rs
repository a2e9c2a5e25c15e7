//! Decimal and hexadecimal-significand text forms of binary64 values.

use crate::error::ConfigError;

/// Parses a decimal (`0.75`, `1e-3`) or hexadecimal-significand
/// (`0x1.8p-1`) literal. Hex literals must be exactly representable.
pub fn parse_float(text: &str) -> Result<f64, ConfigError> {
    let t = text.trim();
    let unsigned = t.trim_start_matches(['+', '-']);
    let parsed = if unsigned.starts_with("0x") || unsigned.starts_with("0X") {
        hexf_parse::parse_hexf64(&t.replacen("0X", "0x", 1), false).ok()
    } else {
        t.parse::<f64>().ok()
    };
    parsed.ok_or_else(|| ConfigError::BadFloat(text.to_string()))
}

/// Hexadecimal-significand form, e.g. `0x1.6a09e667f3bcdp-1`. Subnormals
/// print as `0x0.<digits>p-1022`.
pub fn format_hex(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    let sign = if x.is_sign_negative() { "-" } else { "" };
    if x.is_infinite() {
        return format!("{sign}inf");
    }
    let bits = x.to_bits();
    let biased = ((bits >> 52) & 0x7ff) as i32;
    let frac = bits & ((1 << 52) - 1);
    if biased == 0 && frac == 0 {
        return format!("{sign}0x0p+0");
    }
    let (lead, exp) = if biased == 0 { (0, -1022) } else { (1, biased - 1023) };
    let digits = format!("{frac:013x}");
    let digits = digits.trim_end_matches('0');
    let point = if digits.is_empty() { String::new() } else { format!(".{digits}") };
    let esign = if exp >= 0 { "+" } else { "" };
    format!("{sign}0x{lead}{point}p{esign}{exp}")
}

/// `decimal (hex)` pair used in every echoed value.
pub fn format_both(x: f64) -> String {
    format!("{x:?} ({})", format_hex(x))
}
