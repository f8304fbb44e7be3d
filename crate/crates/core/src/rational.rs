//! Exact rationals and their `P/Q` text form.

use num::rational::Ratio;
use num::Zero;

/// Exact rational in lowest terms with a positive denominator.
pub type Rational = Ratio<i64>;

/// Always `P/Q`, even for integers (`2/1`), so every emitted number has one shape.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Accepts `P/Q` or a bare integer `P`.
pub fn parse_rational(text: &str) -> Result<Rational, String> {
    let text = text.trim();
    let (p, q) = match text.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (text, "1"),
    };
    let p: i64 = p
        .parse()
        .map_err(|_| format!("invalid rational numerator in {text:?}"))?;
    let q: i64 = q
        .parse()
        .map_err(|_| format!("invalid rational denominator in {text:?}"))?;
    if q.is_zero() {
        return Err(format!("zero denominator in {text:?}"));
    }
    Ok(Rational::new(p, q))
}

pub(crate) fn int(n: usize) -> Rational {
    Rational::from_integer(n as i64)
}
