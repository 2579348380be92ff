//! Text form of curves: `y^2 = <polynomial in x>`.
//!
//! The polynomial grammar accepts `+ - * ^ ( )`, decimal integers, `x`, and
//! the generator `w` of F_{p^2}; the formatter writes terms by descending
//! degree with coefficients in the element encoding, e.g.
//! `y^2 = x^12+(3+2*w)*x^6+1`.

use super::hyper::HyperCurve;
use crate::error::{Error, Result};
use crate::field::{FieldTowerCtx, Fp2Elem, Poly};

pub fn parse_poly(k: &FieldTowerCtx, s: &str) -> Result<Poly> {
    let tokens: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut p = Parser {
        k,
        t: &tokens,
        pos: 0,
    };
    let f = p.expr()?;
    if p.pos != tokens.len() {
        return Err(p.err("trailing input"));
    }
    Ok(f)
}

/// Parses `y^2 = f(x)` (the `y^2 =` prefix is optional) into a curve.
pub fn parse_curve(k: &FieldTowerCtx, s: &str) -> Result<HyperCurve> {
    let rhs = match s.split_once('=') {
        Some((lhs, rhs)) => {
            let lhs: String = lhs.chars().filter(|c| !c.is_whitespace()).collect();
            if lhs != "y^2" {
                return Err(Error::Parse(format!(
                    "left-hand side must be y^2, got {lhs:?}"
                )));
            }
            rhs
        }
        None => s,
    };
    HyperCurve::new(k, parse_poly(k, rhs)?)
}

pub fn format_poly(k: &FieldTowerCtx, f: &Poly) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let mut terms = Vec::new();
    for (i, &c) in f.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let coeff = if c.c1 == 0 {
            k.encode(c)
        } else {
            format!("({})", k.encode(c))
        };
        let term = match (i, c == Fp2Elem::ONE) {
            (0, _) => k.encode(c),
            (1, true) => "x".into(),
            (1, false) => format!("{coeff}*x"),
            (_, true) => format!("x^{i}"),
            (_, false) => format!("{coeff}*x^{i}"),
        };
        terms.push(term);
    }
    terms.join("+")
}

pub fn format_curve(k: &FieldTowerCtx, h: &HyperCurve) -> String {
    format!("y^2 = {}", format_poly(k, h.f()))
}

struct Parser<'a> {
    k: &'a FieldTowerCtx,
    t: &'a [char],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {}", self.pos))
    }

    fn peek(&self) -> Option<char> {
        self.t.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add(self.k, &self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(self.k, &self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.unary()?;
        while self.eat('*') {
            acc = acc.mul(self.k, &self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Poly> {
        if self.eat('-') {
            Ok(self.unary()?.neg(self.k))
        } else if self.eat('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.eat('^') {
            let e = self.integer()?;
            let e = u64::try_from(e).map_err(|_| self.err("exponent too large"))?;
            if e > 1 << 16 {
                return Err(self.err("exponent too large"));
            }
            Ok(base.pow(self.k, e))
        } else {
            Ok(base)
        }
    }

    fn integer(&mut self) -> Result<u128> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        let digits: String = self.t[start..self.pos].iter().collect();
        digits
            .parse::<u128>()
            .map_err(|_| self.err("integer too large"))
    }

    fn atom(&mut self) -> Result<Poly> {
        match self.peek() {
            Some('x') => {
                self.pos += 1;
                Ok(Poly::x())
            }
            Some('w') => {
                self.pos += 1;
                Ok(Poly::constant(self.k.omega()))
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                let p = self.k.p() as u128;
                Ok(Poly::constant(self.k.from_u64((n % p) as u64)))
            }
            Some(c) => Err(self.err(&format!("unexpected {c:?}"))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}
