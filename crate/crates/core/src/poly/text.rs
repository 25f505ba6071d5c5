use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::IntPoly;
use crate::error::{Error, Result};

const MAX_EXPONENT: usize = 10_000_000;

impl IntPoly {
    /// Human form such as `x^4 - x^2 + 1` or `-2*x^3 + 5`; `0` for zero.
    pub fn to_human(&self) -> String {
        let mut out = String::new();
        for (k, c) in self.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mag = c.abs();
            let unit = mag.is_one() && k > 0;
            if !unit {
                out.push_str(&mag.to_string());
                if k > 0 {
                    out.push('*');
                }
            }
            match k {
                0 => {}
                1 => out.push('x'),
                _ => out.push_str(&format!("x^{k}")),
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// Ascending comma-separated coefficients, `c0,c1,…,cd`; `0` for zero.
    pub fn to_coeff_list(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
    }

    /// Parses either text form produced by [`IntPoly::to_human`] or
    /// [`IntPoly::to_coeff_list`].
    pub fn parse(s: &str) -> Result<IntPoly> {
        if s.trim().is_empty() {
            return Err(Error::Parse { pos: 0, msg: "empty polynomial".into() });
        }
        if s.contains(['x', 'X']) {
            parse_human(s)
        } else {
            parse_list(s)
        }
    }
}

impl FromStr for IntPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<IntPoly> {
        IntPoly::parse(s)
    }
}

impl serde::Serialize for IntPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_coeff_list())
    }
}

impl<'de> serde::Deserialize<'de> for IntPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<IntPoly, D::Error> {
        let s = String::deserialize(d)?;
        IntPoly::parse(&s).map_err(serde::de::Error::custom)
    }
}

fn parse_list(s: &str) -> Result<IntPoly> {
    let mut coeffs = Vec::new();
    let mut offset = 0;
    for token in s.split(',') {
        let lead = token.len() - token.trim_start().len();
        let t = token.trim();
        let c: BigInt = t.parse().map_err(|_| Error::Parse {
            pos: offset + lead,
            msg: format!("expected an integer coefficient, found {t:?}"),
        })?;
        coeffs.push(c);
        offset += token.len() + 1;
    }
    Ok(IntPoly::new(coeffs))
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

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

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| String::from_utf8_lossy(&self.bytes[start..self.pos]).into_owned())
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse { pos: self.pos, msg: msg.into() }
    }
}

fn parse_human(s: &str) -> Result<IntPoly> {
    let mut cur = Cursor { bytes: s.as_bytes(), pos: 0 };
    let mut coeffs: Vec<BigInt> = Vec::new();
    let mut first = true;
    loop {
        cur.skip_ws();
        if cur.peek().is_none() {
            if first {
                return Err(cur.error("empty polynomial"));
            }
            break;
        }
        let negative = if cur.eat(b'-') {
            true
        } else if cur.eat(b'+') {
            false
        } else if first {
            false
        } else {
            return Err(cur.error("expected '+' or '-' between terms"));
        };
        first = false;
        cur.skip_ws();
        let term_start = cur.pos;
        let coeff = cur.digits().map(|d| d.parse::<BigInt>().expect("digits"));
        cur.skip_ws();
        let starred = cur.eat(b'*');
        cur.skip_ws();
        let has_x = cur.eat(b'x') || cur.eat(b'X');
        if starred && !has_x {
            return Err(cur.error("expected 'x' after '*'"));
        }
        if coeff.is_none() && !has_x {
            return Err(Error::Parse { pos: term_start, msg: "expected a coefficient or 'x'".into() });
        }
        let mut exponent = 0usize;
        if has_x {
            exponent = 1;
            cur.skip_ws();
            if cur.eat(b'^') {
                cur.skip_ws();
                let at = cur.pos;
                let Some(e) = cur.digits() else {
                    return Err(cur.error("expected an exponent after '^'"));
                };
                exponent = e
                    .parse::<usize>()
                    .ok()
                    .filter(|&e| e <= MAX_EXPONENT)
                    .ok_or(Error::Parse { pos: at, msg: format!("exponent {e} is too large") })?;
            }
        }
        let mut c = coeff.unwrap_or_else(BigInt::one);
        if negative {
            c = -c;
        }
        if coeffs.len() <= exponent {
            coeffs.resize(exponent + 1, BigInt::zero());
        }
        coeffs[exponent] += c;
        cur.skip_ws();
        if let Some(b) = cur.peek() {
            if b != b'+' && b != b'-' {
                return Err(cur.error(format!("unexpected character {:?}", b as char)));
            }
        }
    }
    Ok(IntPoly::new(coeffs))
}
