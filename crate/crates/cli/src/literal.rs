//! Textual complex numbers: `-1-7i`, `3`, `2.5i`, `-18+1i`, `1e-3-2.5e2i`.
//!
//! A literal is an optional real part followed by an optional imaginary
//! part with a trailing `i`; at least one part must be present and the sign
//! between the two parts is mandatory. A bare `i` stands for `1i`.

use lc_core::Complex;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message} at offset {offset}")]
pub struct LiteralError {
    pub offset: usize,
    pub message: String,
}

fn err<T>(offset: usize, message: impl Into<String>) -> Result<T, LiteralError> {
    Err(LiteralError {
        offset,
        message: message.into(),
    })
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn eat_sign(&mut self) -> Option<f64> {
        if self.eat(b'+') {
            Some(1.0)
        } else if self.eat(b'-') {
            Some(-1.0)
        } else {
            None
        }
    }

    fn digits(&mut self) -> usize {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        self.pos - start
    }

    /// Unsigned decimal with optional fraction and exponent; `None` if no
    /// number starts here.
    fn unsigned(&mut self, text: &str) -> Result<Option<f64>, LiteralError> {
        let start = self.pos;
        let int = self.digits();
        let mut frac = 0;
        if self.eat(b'.') {
            frac = self.digits();
        }
        if int == 0 && frac == 0 {
            if self.pos > start {
                return err(start, "expected digits around '.'");
            }
            return Ok(None);
        }
        if matches!(self.peek(), Some(b'e' | b'E')) {
            let e_at = self.pos;
            self.pos += 1;
            self.eat_sign();
            if self.digits() == 0 {
                return err(e_at, "exponent has no digits");
            }
        }
        match text[start..self.pos].parse::<f64>() {
            Ok(v) if v.is_finite() => Ok(Some(v)),
            _ => err(start, "number out of range"),
        }
    }
}

pub fn parse_complex(text: &str) -> Result<Complex, LiteralError> {
    let mut cur = Cursor {
        bytes: text.as_bytes(),
        pos: 0,
    };
    if text.is_empty() {
        return err(0, "empty literal");
    }

    let first_at = cur.pos;
    let sign = cur.eat_sign().unwrap_or(1.0);
    let magnitude = cur.unsigned(text)?;
    if cur.eat(b'i') {
        return finish(&cur, Complex::new(0.0, sign * magnitude.unwrap_or(1.0)));
    }
    let Some(re) = magnitude.map(|m| sign * m) else {
        return err(cur.pos.max(first_at), "expected a number or 'i'");
    };
    if cur.peek().is_none() {
        return Ok(Complex::new(re, 0.0));
    }

    let sign_at = cur.pos;
    let Some(sign) = cur.eat_sign() else {
        return err(sign_at, "expected '+' or '-' before the imaginary part");
    };
    let magnitude = cur.unsigned(text)?;
    if !cur.eat(b'i') {
        return err(cur.pos, "imaginary part must end with 'i'");
    }
    finish(&cur, Complex::new(re, sign * magnitude.unwrap_or(1.0)))
}

fn finish(cur: &Cursor<'_>, value: Complex) -> Result<Complex, LiteralError> {
    match cur.peek() {
        None => Ok(value),
        Some(_) => err(cur.pos, "unexpected trailing characters"),
    }
}

fn format_real(x: f64) -> String {
    let a = x.abs();
    if x == 0.0 || (1e-5..1e16).contains(&a) {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

/// Canonical literal `a+bi` / `a-bi`; parses back to the identical value.
pub fn format_complex(z: Complex) -> String {
    let sign = if z.im.is_sign_negative() { '-' } else { '+' };
    format!("{}{}{}i", format_real(z.re), sign, format_real(z.im.abs()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    #[test]
    fn valid_forms() {
        assert_eq!(parse_complex("-1-7i").unwrap(), c(-1.0, -7.0));
        assert_eq!(parse_complex("3").unwrap(), c(3.0, 0.0));
        assert_eq!(parse_complex("2.5i").unwrap(), c(0.0, 2.5));
        assert_eq!(parse_complex("-18+1i").unwrap(), c(-18.0, 1.0));
        assert_eq!(parse_complex("1e-3-2.5e2i").unwrap(), c(1e-3, -250.0));
        assert_eq!(parse_complex("-i").unwrap(), c(0.0, -1.0));
        assert_eq!(parse_complex("3+i").unwrap(), c(3.0, 1.0));
        assert_eq!(parse_complex(".5E+1-.25i").unwrap(), c(5.0, -0.25));
        assert_eq!(parse_complex("+4.").unwrap(), c(4.0, 0.0));
    }

    #[test]
    fn invalid_forms_report_offsets() {
        let cases = [
            ("", 0),
            ("abc", 0),
            ("1+2", 3),
            ("1 2i", 1),
            ("2i+3", 2),
            ("1e+i", 1),
            ("1+2ix", 4),
            ("1++2i", 2),
            ("-", 1),
            ("1e999", 0),
            (".i", 0),
        ];
        for (text, offset) in cases {
            let e = parse_complex(text).unwrap_err();
            assert_eq!(e.offset, offset, "{text:?}: {e}");
        }
    }

    #[test]
    fn formatting() {
        assert_eq!(format_complex(c(-1.0, -7.0)), "-1-7i");
        assert_eq!(format_complex(c(-18.0, 1.0)), "-18+1i");
        assert_eq!(format_complex(c(1e-300, 0.0)), "1e-300+0i");
        assert_eq!(format_complex(c(0.0, -0.0)), "0-0i");
    }

    proptest! {
        #[test]
        fn round_trip(re in any::<f64>(), im in any::<f64>()) {
            prop_assume!(re.is_finite() && im.is_finite());
            let z = c(re, im);
            let back = parse_complex(&format_complex(z)).unwrap();
            prop_assert_eq!(back.re.to_bits(), z.re.to_bits());
            prop_assert_eq!(back.im.to_bits(), z.im.to_bits());
        }
    }
}
