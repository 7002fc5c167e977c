//! Continued-fraction literals and number arguments.
//!
//! ```text
//! cf    := "[" item (sep item)* "]"        first sep is ";" or ",", later ones ","
//! item  := int | "(" int ("," int)* ")" "^" posint
//! ```
//!
//! Repetition groups expand in place, so `[1,(0,1)^3]` is `[1; 0, 1, 0, 1, 0, 1]`.
//! Only `a_0` may be negative. Whitespace is ignored.

use std::fmt;

use cfext_core::continued_fractions::CfExpansion;
use cfext_core::exact_arith::{Integer, Natural, Rational};
use num_traits::{Signed, Zero};

/// Longest expansion a literal may produce after repetition.
pub const MAX_TERMS: usize = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input.
    pub position: usize,
    pub expected: String,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "at position {}: expected {}, found {}",
            self.position + 1,
            self.expected,
            self.found
        )
    }
}

impl std::error::Error for ParseError {}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn error(&self, expected: &str) -> ParseError {
        let found = match self.peek() {
            Some(c) => format!("'{c}'"),
            None => "end of input".to_string(),
        };
        ParseError {
            position: self.pos,
            expected: expected.to_string(),
            found,
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("'{c}'")))
        }
    }

    fn integer(&mut self) -> Result<(usize, Integer), ParseError> {
        self.skip_ws();
        let start = self.pos;
        let mut end = start;
        let bytes = self.src.as_bytes();
        if end < bytes.len() && (bytes[end] == b'-' || bytes[end] == b'+') {
            end += 1;
        }
        let digits = end;
        while end < bytes.len() && bytes[end].is_ascii_digit() {
            end += 1;
        }
        if end == digits {
            self.pos = digits;
            return Err(self.error("an integer"));
        }
        self.pos = end;
        let value = self.src[start..end].parse().expect("sign and digits");
        Ok((start, value))
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        self.skip_ws();
        if self.pos == self.src.len() {
            Ok(())
        } else {
            Err(self.error("end of input"))
        }
    }
}

fn item(cur: &mut Cursor<'_>, out: &mut Vec<(usize, Integer)>) -> Result<(), ParseError> {
    if !cur.eat('(') {
        out.push(cur.integer()?);
        return Ok(());
    }
    let mut group = vec![cur.integer()?];
    while cur.eat(',') {
        group.push(cur.integer()?);
    }
    cur.expect(')')?;
    cur.expect('^')?;
    let (at, count) = cur.integer()?;
    if !count.is_positive() {
        return Err(ParseError {
            position: at,
            expected: "a positive repetition count".into(),
            found: count.to_string(),
        });
    }
    let total = usize::try_from(&count)
        .ok()
        .and_then(|c| c.checked_mul(group.len()))
        .and_then(|len| len.checked_add(out.len()))
        .filter(|&len| len <= MAX_TERMS);
    let Some(total) = total else {
        return Err(ParseError {
            position: at,
            expected: format!("at most {MAX_TERMS} terms after repetition"),
            found: format!("{count} repetitions"),
        });
    };
    while out.len() < total {
        out.extend(group.iter().cloned());
    }
    Ok(())
}

pub fn parse_cf(src: &str) -> Result<CfExpansion, ParseError> {
    let mut cur = Cursor::new(src);
    cur.expect('[')?;
    let mut values = Vec::new();
    item(&mut cur, &mut values)?;
    let mut first = true;
    loop {
        if cur.eat(',') || (first && cur.eat(';')) {
            item(&mut cur, &mut values)?;
            first = false;
        } else if cur.eat(']') {
            break;
        } else {
            return Err(cur.error(if first { "';', ',' or ']'" } else { "',' or ']'" }));
        }
    }
    cur.finish()?;
    let mut iter = values.into_iter();
    let (_, a0) = iter.next().expect("at least one item");
    let mut terms = Vec::with_capacity(iter.len());
    for (at, t) in iter {
        if t.is_negative() {
            return Err(ParseError {
                position: at,
                expected: "a nonnegative partial quotient".into(),
                found: t.to_string(),
            });
        }
        terms.push(t);
    }
    Ok(CfExpansion::new(a0, terms).expect("terms checked nonnegative"))
}

/// Canonical rendering: `[a0; a1, a2, ...]`.
pub fn render_cf(cf: &CfExpansion) -> String {
    cf.to_string()
}

/// `p/q` or a bare integer.
pub fn parse_rational(src: &str) -> Result<Rational, ParseError> {
    let mut cur = Cursor::new(src);
    let (_, p) = cur.integer()?;
    let q = if cur.eat('/') {
        let (at, q) = cur.integer()?;
        if q.is_zero() {
            return Err(ParseError {
                position: at,
                expected: "a nonzero denominator".into(),
                found: "0".into(),
            });
        }
        q
    } else {
        Integer::from(1)
    };
    cur.finish()?;
    Ok(Rational::new(p, q))
}

/// Comma-separated integers, e.g. `-1,1`.
pub fn parse_int_list(src: &str) -> Result<Vec<Integer>, ParseError> {
    let mut cur = Cursor::new(src);
    let mut out = vec![cur.integer()?.1];
    while cur.eat(',') {
        out.push(cur.integer()?.1);
    }
    cur.finish()?;
    Ok(out)
}

pub fn parse_int_tuple<const N: usize>(src: &str) -> Result<[Integer; N], ParseError> {
    let list = parse_int_list(src)?;
    let len = list.len();
    list.try_into().map_err(|_| ParseError {
        position: 0,
        expected: format!("{N} comma-separated integers"),
        found: format!("{len}"),
    })
}

pub fn parse_natural(src: &str) -> Result<Natural, ParseError> {
    let mut cur = Cursor::new(src);
    let (at, v) = cur.integer()?;
    cur.finish()?;
    natural(at, v)
}

pub fn parse_natural_list(src: &str) -> Result<Vec<Natural>, ParseError> {
    let mut cur = Cursor::new(src);
    let mut out = Vec::new();
    loop {
        let (at, v) = cur.integer()?;
        out.push(natural(at, v)?);
        if !cur.eat(',') {
            break;
        }
    }
    cur.finish()?;
    Ok(out)
}

fn natural(at: usize, v: Integer) -> Result<Natural, ParseError> {
    v.to_biguint().ok_or_else(|| ParseError {
        position: at,
        expected: "a nonnegative integer".into(),
        found: v.to_string(),
    })
}
