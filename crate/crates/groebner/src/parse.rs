//! Infix polynomial grammar: `+ - * / ^`, parentheses, integer and rational
//! literals, and the declared variable names.

use dashu_int::IBig;
use dashu_ratio::RBig;

use crate::budget::GroebnerError;
use crate::poly::{Poly, Vars};

pub fn parse_poly(src: &str, vars: &Vars) -> Result<Poly, GroebnerError> {
    let mut p = Parser { s: src.as_bytes(), pos: 0, vars };
    let out = p.expr()?;
    p.ws();
    if p.pos != p.s.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(out.with_vars(vars))
}

/// One polynomial per non-empty line; `#` starts a comment.
pub fn parse_poly_list(src: &str, vars: &Vars) -> Result<Vec<Poly>, GroebnerError> {
    src.lines()
        .enumerate()
        .filter_map(|(n, line)| {
            let line = line.split('#').next().unwrap_or("").trim();
            (!line.is_empty()).then(|| {
                parse_poly(line, vars).map_err(|e| match e {
                    GroebnerError::Parse(m) => GroebnerError::Parse(format!("line {}: {}", n + 1, m)),
                    other => other,
                })
            })
        })
        .collect()
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    vars: &'a Vars,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> GroebnerError {
        GroebnerError::Parse(format!("{} at column {}", msg, self.pos + 1))
    }

    fn ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Poly, GroebnerError> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -self.term()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly, GroebnerError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.power()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.power()?;
                    if !d.is_constant() || d.is_zero() {
                        return Err(self.err("division only by nonzero constants"));
                    }
                    acc = acc.scale(&(RBig::ONE / d.constant_term()));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Poly, GroebnerError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.ws();
            let start = self.pos;
            while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let e: u32 = std::str::from_utf8(&self.s[start..self.pos])
                .unwrap()
                .parse()
                .map_err(|_| self.err("expected exponent"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly, GroebnerError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.power()?)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let n: IBig = std::str::from_utf8(&self.s[start..self.pos]).unwrap().parse().unwrap();
                Ok(Poly::constant_in(self.vars, RBig::from(n)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.s.len() && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_') {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
                match self.vars.index_of(name) {
                    Some(i) => Ok(Poly::var(self.vars, i)),
                    None => {
                        self.pos = start;
                        Err(self.err(&format!("undeclared variable '{}'", name)))
                    }
                }
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    #[test]
    fn parses_and_prints() {
        let v = Vars::new(["a14", "a15", "a24", "a25"]);
        let p = parse_poly("a14^3 + 2*a15*a24*a25", &v).unwrap();
        assert_eq!(p.to_string(), "a14^3 + 2*a15*a24*a25");
        let q = parse_poly(&p.to_string(), &v).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn rationals_and_parentheses() {
        let v = Vars::new(["x", "y"]);
        let p = parse_poly("-(x - y)^2/2 + 3/4", &v).unwrap();
        let x = Poly::var(&v, 0);
        let y = Poly::var(&v, 1);
        let d = &x - &y;
        let expected = &(&d * &d).scale(&rat(-1, 2)) + &Poly::constant_in(&v, rat(3, 4));
        assert_eq!(p, expected);
    }

    #[test]
    fn rejects_unknown_names() {
        let v = Vars::new(["x"]);
        assert!(matches!(parse_poly("x + z", &v), Err(GroebnerError::Parse(_))));
        assert!(parse_poly("x +", &v).is_err());
        assert!(parse_poly("x/y", &Vars::new(["x", "y"])).is_err());
    }

    #[test]
    fn list_with_comments() {
        let v = Vars::new(["x", "y"]);
        let l = parse_poly_list("x^2 - 1  # first\n\n# skip\nx*y - 1\n", &v).unwrap();
        assert_eq!(l.len(), 2);
    }
}
