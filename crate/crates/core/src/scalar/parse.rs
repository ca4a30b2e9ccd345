//! Scalar grammar:
//!
//! ```text
//! scalar := term { ('+'|'-') term }
//! term   := factor { ('*'|'/') factor }
//! factor := digits ['.' digits] | 'sqrt(' digits ')' | 'root(' k ',' digits ')' | '(' scalar ')'
//! ```
//!
//! Decimal literals and `root(k,d)` with `k > 2` produce floats.

use dashu_int::IBig;
use dashu_ratio::RBig;

use super::{default_digits, BigFloat, Scalar, ScalarError, Surd};

pub fn parse_scalar(src: &str) -> Result<Scalar, ScalarError> {
    let mut c = Cursor::new(src);
    let s = c.scalar()?;
    if !c.at_end() {
        return Err(c.err("unexpected trailing input"));
    }
    Ok(s)
}

pub(crate) struct Cursor<'a> {
    src: &'a str,
    s: &'a [u8],
    pub pos: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(src: &'a str) -> Self {
        Cursor { src, s: src.as_bytes(), pos: 0 }
    }

    pub fn source(&self) -> &'a str {
        self.src
    }

    pub fn err(&self, message: &str) -> ScalarError {
        ScalarError::Parse { column: self.pos + 1, message: message.to_string() }
    }

    pub fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    pub fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    pub fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    pub fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, b: u8) -> Result<(), ScalarError> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", b as char)))
        }
    }

    /// Does the remaining input (after whitespace) start with `lit`?
    pub fn looking_at(&mut self, lit: &str) -> bool {
        self.skip_ws();
        self.s[self.pos..].starts_with(lit.as_bytes())
    }

    pub fn eat_str(&mut self, lit: &str) -> bool {
        if self.looking_at(lit) {
            self.pos += lit.len();
            true
        } else {
            false
        }
    }

    pub fn digits(&mut self) -> Result<&'a str, ScalarError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        Ok(std::str::from_utf8(&self.s[start..self.pos]).unwrap())
    }

    pub fn uint(&mut self) -> Result<u64, ScalarError> {
        let d = self.digits()?;
        d.parse().map_err(|_| self.err("integer too large"))
    }

    pub fn scalar(&mut self) -> Result<Scalar, ScalarError> {
        let mut acc = self.signed_term()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    pub fn signed_term(&mut self) -> Result<Scalar, ScalarError> {
        if self.eat(b'-') {
            Ok(-self.term()?)
        } else {
            self.eat(b'+');
            self.term()
        }
    }

    /// A product of factors; stops before a `*` that is not followed by a
    /// scalar factor, so it can prefix a basis form or a group.
    pub fn term(&mut self) -> Result<Scalar, ScalarError> {
        let mut acc = self.factor()?;
        loop {
            let save = self.pos;
            if self.eat(b'*') {
                if self.looking_at("e^") {
                    self.pos = save;
                    return Ok(acc);
                }
                match self.factor() {
                    Ok(f) => acc = &acc * &f,
                    Err(_) => {
                        // Not a scalar factor; leave the '*' for the caller.
                        self.pos = save;
                        return Ok(acc);
                    }
                }
            } else if self.eat(b'/') {
                let d = self.factor()?;
                acc = acc.checked_div(&d).map_err(|_| self.err("division by zero"))?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Scalar, ScalarError> {
        if self.eat(b'(') {
            let s = self.scalar()?;
            self.expect(b')')?;
            return Ok(s);
        }
        if self.eat_str("sqrt(") {
            let n = self.uint()?;
            self.expect(b')')?;
            return Ok(Surd::sqrt_times(RBig::ONE, n)
                .map(Scalar::Exact)
                .unwrap_or_else(|| Scalar::Approx(BigFloat::from_u64(n, default_digits()).sqrt())));
        }
        if self.eat_str("root(") {
            let k = self.uint()?;
            self.expect(b',')?;
            let n = self.uint()?;
            self.expect(b')')?;
            if k == 0 {
                return Err(self.err("root index must be positive"));
            }
            return Ok(Scalar::int(n as i64).nth_root(k as u32));
        }
        let int = self.digits()?;
        if self.s.get(self.pos) == Some(&b'.') {
            self.pos += 1;
            let start = self.pos;
            while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let frac = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
            let text = format!("{}.{}", int, frac);
            return BigFloat::from_decimal_str(&text, default_digits())
                .map(Scalar::Approx)
                .ok_or_else(|| self.err("bad decimal literal"));
        }
        let n: IBig = int.parse().map_err(|_| self.err("bad integer"))?;
        Ok(Scalar::from_rational(RBig::from(n)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn grammar_examples() {
        assert_eq!(parse_scalar("1/2").unwrap(), Scalar::ratio(1, 2));
        assert_eq!(
            parse_scalar("-1/2*sqrt(3)").unwrap(),
            Scalar::Exact(Surd::sqrt_times(rat(-1, 2), 3).unwrap())
        );
        let s = parse_scalar("2/3*sqrt(3)+1").unwrap();
        assert_eq!(s, Scalar::one() + Scalar::Exact(Surd::sqrt_times(rat(2, 3), 3).unwrap()));
    }

    #[test]
    fn extensions() {
        assert_eq!(parse_scalar("sqrt(12)").unwrap(), Scalar::int(2) * Scalar::sqrt_int(3));
        assert_eq!(parse_scalar("(1+sqrt(2))*(1-sqrt(2))").unwrap(), Scalar::int(-1));
        assert_eq!(parse_scalar("1/sqrt(2)").unwrap(), Scalar::Exact(Surd::sqrt_times(rat(1, 2), 2).unwrap()));
        let f = parse_scalar("root(4,3)").unwrap();
        assert!(!f.is_exact());
        assert_eq!(f.pow(4), Scalar::int(3));
        assert!(!parse_scalar("0.25").unwrap().is_exact());
        assert_eq!(parse_scalar("0.25").unwrap(), Scalar::ratio(1, 4));
    }

    #[test]
    fn round_trip_display() {
        for src in ["1/2", "-1/2*sqrt(3)", "1+2/3*sqrt(3)", "7/660*sqrt(330)", "0"] {
            let s = parse_scalar(src).unwrap();
            assert_eq!(parse_scalar(&s.to_string()).unwrap(), s);
            assert_eq!(s.to_string(), src);
        }
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_scalar("1/"), Err(ScalarError::Parse { .. })));
        assert!(parse_scalar("2 3").is_err());
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("sqrt(x)").is_err());
    }
}
