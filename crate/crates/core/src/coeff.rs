//! Exact rational scalars and the coefficient-domain trait shared by the
//! polynomial containers.

use alloc::string::String;
use core::fmt::Write;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational number.
pub type Q = BigRational;

/// Rational from an integer.
pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Rational `n / d`. Panics when `d == 0`.
pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// `k!` as a rational.
pub fn factorial(k: u32) -> Q {
    let mut acc = BigInt::one();
    for i in 2..=k {
        acc *= BigInt::from(i);
    }
    Q::from_integer(acc)
}

/// Binomial coefficient as a rational.
pub fn binomial(n: u32, k: u32) -> Q {
    if k > n {
        return Q::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// Parses `"p/q"`, `"p"`, with an optional leading sign (ASCII `-` or `−`).
pub fn parse_rational(s: &str) -> Option<Q> {
    let s = s.trim();
    let (neg, body) = if let Some(rest) = s.strip_prefix('-') {
        (true, rest)
    } else if let Some(rest) = s.strip_prefix('\u{2212}') {
        (true, rest)
    } else if let Some(rest) = s.strip_prefix('+') {
        (false, rest)
    } else {
        (false, s)
    };
    let body = body.trim();
    if body.is_empty() || body.starts_with(['-', '+']) {
        return None;
    }
    let value = match body.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Q::new(n, d)
        }
        None => Q::from_integer(body.parse().ok()?),
    };
    Some(if neg { -value } else { value })
}

/// Canonical `"p/q"` (or `"p"`) string of a rational.
pub fn format_rational(x: &Q) -> String {
    let mut s = String::new();
    let _ = write!(s, "{x}");
    s
}

/// Writes `coeff·body` as a signed term of a sum. `first` controls whether a
/// leading `+` is emitted; unit coefficients are elided when `body` is
/// non-empty.
pub(crate) fn write_term(
    f: &mut core::fmt::Formatter<'_>,
    coeff: &Q,
    body: &str,
    first: bool,
) -> core::fmt::Result {
    let neg = coeff.is_negative();
    let abs = coeff.abs();
    match (first, neg) {
        (true, false) => {}
        (true, true) => f.write_str("\u{2212}")?,
        (false, false) => f.write_str(" + ")?,
        (false, true) => f.write_str(" \u{2212} ")?,
    }
    if body.is_empty() {
        write!(f, "{abs}")
    } else if abs.is_one() {
        f.write_str(body)
    } else {
        write!(f, "{abs}\u{b7}{body}")
    }
}

/// Splits a signed sum `a·u + b·v − c·w` into `(sign-applied coefficient text,
/// body text)` pairs. Accepts `+`, `-`, `−` as separators and `·` or `*` between
/// coefficient and body. Separators inside parentheses are ignored.
pub(crate) fn split_terms(s: &str) -> Option<alloc::vec::Vec<(Q, String)>> {
    use alloc::vec::Vec;
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut current = String::new();
    let mut sign_neg = false;
    let mut have_content = false;
    let mut pending = false;
    let flush = |current: &mut String, neg: bool, out: &mut Vec<(Q, String)>| -> Option<()> {
        let t = current.trim();
        if t.is_empty() {
            return None;
        }
        let (c, body) = match t.split_once(['\u{b7}', '*']) {
            Some((c, b)) => (parse_rational(c)?, b.trim()),
            None if t.starts_with(|ch: char| ch.is_ascii_digit()) => {
                let end = t
                    .find(|ch: char| !(ch.is_ascii_digit() || ch == '/'))
                    .unwrap_or(t.len());
                (parse_rational(&t[..end])?, t[end..].trim())
            }
            None => (Q::one(), t),
        };
        let c = if neg { -c } else { c };
        out.push((c, String::from(body)));
        current.clear();
        Some(())
    };
    for ch in s.chars() {
        match ch {
            '(' => {
                depth += 1;
                current.push(ch);
                have_content = true;
                pending = false;
            }
            ')' => {
                depth -= 1;
                current.push(ch);
            }
            '+' | '-' | '\u{2212}' if depth == 0 => {
                if have_content && !current.trim().is_empty() {
                    flush(&mut current, sign_neg, &mut out)?;
                    sign_neg = false;
                }
                if ch != '+' {
                    sign_neg = !sign_neg;
                }
                have_content = false;
                pending = true;
            }
            _ => {
                if !ch.is_whitespace() {
                    have_content = true;
                    pending = false;
                }
                current.push(ch);
            }
        }
    }
    if depth != 0 {
        return None;
    }
    if current.trim().is_empty() {
        if out.is_empty() || pending {
            return None;
        }
    } else {
        flush(&mut current, sign_neg, &mut out)?;
    }
    Some(out)
}

/// A coefficient domain for sparse containers (`TPoly`, `HomogPoly`): a
/// `Q`-vector space with an explicit zero test.
pub trait Coefficient: Clone + PartialEq + core::fmt::Debug {
    fn vanishes(&self) -> bool;
    fn scale(&mut self, factor: &Q);
    /// `self += factor · other`.
    fn add_scaled(&mut self, other: &Self, factor: &Q);

    fn scaled(&self, factor: &Q) -> Self {
        let mut c = self.clone();
        c.scale(factor);
        c
    }
}

impl Coefficient for Q {
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn scale(&mut self, factor: &Q) {
        *self *= factor;
    }
    fn add_scaled(&mut self, other: &Self, factor: &Q) {
        *self += other * factor;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn rational_text_round_trip() {
        assert_eq!(parse_rational("-3/6"), Some(qf(-1, 2)));
        assert_eq!(parse_rational("\u{2212}7"), Some(q(-7)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("--1"), None);
        assert_eq!(format_rational(&qf(4, -6)), "-2/3");
    }

    #[test]
    fn term_splitting() {
        let t = split_terms("2\u{b7}z(2,1) \u{2212} 1/2\u{b7}z(3) + z(4)").unwrap();
        assert_eq!(
            t,
            vec![
                (q(2), String::from("z(2,1)")),
                (qf(-1, 2), String::from("z(3)")),
                (q(1), String::from("z(4)")),
            ]
        );
        let t = split_terms("-xy + 3").unwrap();
        assert_eq!(t, vec![(q(-1), String::from("xy")), (q(3), String::new())]);
        assert!(split_terms("2\u{b7}z(2,1) +").is_none());
        assert!(split_terms("").is_none());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 2), q(15));
        assert_eq!(binomial(2, 3), q(0));
        assert_eq!(factorial(0), q(1));
    }
}
