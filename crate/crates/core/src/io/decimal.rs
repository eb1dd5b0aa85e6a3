//! Shortest round-trip decimal text for `f64`.

use num_complex::Complex;

/// Shortest digit string that parses back to the same bits. Plain notation
/// for magnitudes in `[1e-4, 1e15)` and zero, exponent notation otherwise.
pub fn format_real(x: f64) -> String {
    let a = x.abs();
    if a == 0.0 || (1e-4..1e15).contains(&a) {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

/// `a+bi` / `a-bi`, with the sign of a negative zero imaginary part kept.
pub fn format_complex(z: Complex<f64>) -> String {
    let sign = if z.im.is_sign_negative() { '-' } else { '+' };
    format!("{}{}{}i", format_real(z.re), sign, format_real(z.im.abs()))
}

pub(crate) fn parse_real(token: &str) -> Option<f64> {
    // Rust accepts "inf"/"nan" spellings; the format does not.
    if !token.bytes().all(|b| b.is_ascii_digit() || matches!(b, b'+' | b'-' | b'.' | b'e' | b'E')) {
        return None;
    }
    token.parse::<f64>().ok().filter(|x| x.is_finite())
}

/// Parses `a`, `a+bi` or `a-bi`.
pub(crate) fn parse_complex(token: &str) -> Option<Complex<f64>> {
    let Some(body) = token.strip_suffix('i') else {
        return parse_real(token).map(|re| Complex::new(re, 0.0));
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'))?;
    let re = parse_real(&body[..split])?;
    let im = parse_real(&body[split..])?;
    Some(Complex::new(re, im))
}
