//! Text syntax for Plücker and generator polynomials.
//!
//! ```text
//! expr   := term (('+' | '-') term)*      (a leading '-' is allowed)
//! term   := factor ('*' factor)*
//! factor := atom ('^' posint)?
//! atom   := rational | 'p[' int ',' int ']' | 'x_' int | '(' expr ')'
//! ```
//!
//! A rational literal is `int` or `int/int`. Whitespace is ignored.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::formal::{FormalPolynomial, Var};
use crate::plucker::{fmt_rational, Polynomial};
use crate::weyl::PlueckerIndex;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    /// Signed terms; `true` marks subtraction. Built only with at least two
    /// terms or a negated first term.
    Sum(Vec<(bool, Expr)>),
    /// At least two factors.
    Product(Vec<Expr>),
    Power(Box<Expr>, u32),
    Rational(BigRational),
    Plucker(PlueckerIndex),
    Gen(u32),
}

impl Expr {
    fn is_atom(&self) -> bool {
        matches!(self, Expr::Rational(_) | Expr::Plucker(_) | Expr::Gen(_))
    }

    pub fn to_plucker(&self) -> Result<Polynomial> {
        Ok(match self {
            Expr::Sum(terms) => {
                let mut acc = Polynomial::zero();
                for (neg, t) in terms {
                    let v = t.to_plucker()?;
                    acc = if *neg { acc - v } else { acc + v };
                }
                acc
            }
            Expr::Product(fs) => {
                let mut acc = Polynomial::constant(BigRational::one());
                for f in fs {
                    acc = acc * f.to_plucker()?;
                }
                acc
            }
            Expr::Power(b, e) => b.to_plucker()?.pow(*e),
            Expr::Rational(r) => Polynomial::constant(r.clone()),
            Expr::Plucker(p) => Polynomial::var(*p),
            Expr::Gen(k) => return Err(Error::Index(format!("generator x_{k} in a Plücker expression"))),
        })
    }

    /// Lowers to a generator polynomial; `ngens` bounds the `x_k` indices.
    pub fn to_formal(&self, ngens: Option<usize>) -> Result<FormalPolynomial> {
        Ok(match self {
            Expr::Sum(terms) => {
                let mut acc = FormalPolynomial::zero();
                for (neg, t) in terms {
                    let v = t.to_formal(ngens)?;
                    acc = if *neg { acc - v } else { acc + v };
                }
                acc
            }
            Expr::Product(fs) => {
                let mut acc = FormalPolynomial::constant(BigRational::one());
                for f in fs {
                    acc = acc * f.to_formal(ngens)?;
                }
                acc
            }
            Expr::Power(b, e) => b.to_formal(ngens)?.pow(*e),
            Expr::Rational(r) => FormalPolynomial::constant(r.clone()),
            Expr::Gen(k) => {
                if ngens.is_some_and(|g| *k as usize > g) {
                    return Err(Error::Index(format!("x_{k} exceeds the {} generators", ngens.unwrap())));
                }
                FormalPolynomial::var(Var::X(*k))
            }
            Expr::Plucker(p) => return Err(Error::Index(format!("Plücker variable p[{},{}] in a generator expression", p.i, p.j))),
        })
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Sum(terms) => {
                for (k, (neg, t)) in terms.iter().enumerate() {
                    match (k, neg) {
                        (0, true) => f.write_str("-")?,
                        (0, false) => {}
                        (_, true) => f.write_str(" - ")?,
                        (_, false) => f.write_str(" + ")?,
                    }
                    if matches!(t, Expr::Sum(_)) {
                        write!(f, "({t})")?;
                    } else {
                        write!(f, "{t}")?;
                    }
                }
                Ok(())
            }
            Expr::Product(fs) => {
                for (k, x) in fs.iter().enumerate() {
                    if k > 0 {
                        f.write_str("*")?;
                    }
                    if matches!(x, Expr::Sum(_) | Expr::Product(_)) {
                        write!(f, "({x})")?;
                    } else {
                        write!(f, "{x}")?;
                    }
                }
                Ok(())
            }
            Expr::Power(b, e) => {
                if b.is_atom() {
                    write!(f, "{b}^{e}")
                } else {
                    write!(f, "({b})^{e}")
                }
            }
            Expr::Rational(r) => f.write_str(&fmt_rational(r)),
            Expr::Plucker(p) => write!(f, "p[{},{}]", p.i, p.j),
            Expr::Gen(k) => write!(f, "x_{k}"),
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    n: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(digits.parse().unwrap())
    }

    fn small(&mut self) -> Result<usize> {
        let start = self.pos;
        let v = self.integer()?;
        usize::try_from(v).map_err(|_| Error::Syntax { pos: start, msg: "integer too large".into() })
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut terms = Vec::new();
        let mut neg = false;
        if self.peek() == Some(b'-') {
            self.pos += 1;
            neg = true;
        }
        terms.push((neg, self.term()?));
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    terms.push((false, self.term()?));
                }
                Some(b'-') => {
                    self.pos += 1;
                    terms.push((true, self.term()?));
                }
                _ => break,
            }
        }
        Ok(if terms.len() == 1 && !terms[0].0 { terms.pop().unwrap().1 } else { Expr::Sum(terms) })
    }

    fn term(&mut self) -> Result<Expr> {
        let mut fs = vec![self.factor()?];
        while self.peek() == Some(b'*') {
            self.pos += 1;
            fs.push(self.factor()?);
        }
        Ok(if fs.len() == 1 { fs.pop().unwrap() } else { Expr::Product(fs) })
    }

    fn factor(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let start = self.pos;
            let e = self.small()?;
            if e == 0 || e > u32::MAX as usize {
                self.pos = start;
                return self.err("exponent must be a positive integer");
            }
            return Ok(Expr::Power(Box::new(base), e as u32));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(b'p') => {
                let start = self.pos;
                self.pos += 1;
                self.expect(b'[')?;
                let i = self.small()?;
                self.expect(b',')?;
                let j = self.small()?;
                self.expect(b']')?;
                if i == 0 || i >= j || j > self.n {
                    return Err(Error::Index(format!("p[{i},{j}] at position {start}: need 1 <= i < j <= {}", self.n)));
                }
                Ok(Expr::Plucker(PlueckerIndex::new(i, j)?))
            }
            Some(b'x') => {
                let start = self.pos;
                self.pos += 1;
                self.expect(b'_')?;
                let k = self.small()?;
                if k == 0 || k > u32::MAX as usize {
                    return Err(Error::Index(format!("x_{k} at position {start}: generators are numbered from 1")));
                }
                Ok(Expr::Gen(k as u32))
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let den = self.integer()?;
                    if den.is_zero() {
                        return self.err("zero denominator");
                    }
                    return Ok(Expr::Rational(BigRational::new(num, den)));
                }
                Ok(Expr::Rational(BigRational::from_integer(num)))
            }
            Some(c) => self.err(format!("unexpected '{}'", c as char)),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses an expression whose Plücker indices must satisfy `j <= n`.
pub fn parse_expr(s: &str, n: usize) -> Result<Expr> {
    let mut p = Parser { src: s.as_bytes(), pos: 0, n };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(e)
}

pub fn parse_plucker(s: &str, n: usize) -> Result<Polynomial> {
    parse_expr(s, n)?.to_plucker()
}

pub fn parse_formal(s: &str) -> Result<FormalPolynomial> {
    parse_expr(s, u8::MAX as usize)?.to_formal(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plucker::Monomial;

    #[test]
    fn parse_examples() {
        let m = parse_plucker("p[2,5]*p[3,4]", 6).unwrap();
        assert_eq!(
            m,
            Polynomial::monomial(Monomial::from_factors(vec![PlueckerIndex::of(2, 5), PlueckerIndex::of(3, 4)]))
        );
        let x12 = parse_plucker("p[1,4]*p[2,5]*p[3,6] - p[1,2]*p[3,5]*p[4,6]", 6).unwrap();
        assert_eq!(x12.to_string(), "p[1,4]*p[2,5]*p[3,6] - p[1,2]*p[3,5]*p[4,6]");
        assert!(matches!(parse_expr("p[3,3]", 6), Err(Error::Index(_))));
        assert!(matches!(parse_expr("p[1,7]", 6), Err(Error::Index(_))));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        assert_eq!(parse_expr("p[1,2] +", 4), Err(Error::Syntax { pos: 8, msg: "unexpected end of input".into() }));
        assert!(matches!(parse_expr("x_1 ** x_2", 4), Err(Error::Syntax { pos: 5, .. })));
        assert!(matches!(parse_expr("(x_1", 4), Err(Error::Syntax { .. })));
        assert!(matches!(parse_expr("1/0", 4), Err(Error::Syntax { .. })));
        assert!(matches!(parse_expr("x_1^0", 4), Err(Error::Syntax { .. })));
    }

    #[test]
    fn formal_lowering() {
        let f = parse_formal("x_3*x_4^2 - x_1*x_2*x_5 + 1/2*(x_1 - x_1)").unwrap();
        assert_eq!(f.to_string(), "-x_1*x_2*x_5 + x_3*x_4^2");
        assert!(parse_expr("x_6", 10).unwrap().to_formal(Some(5)).is_err());
        assert!(parse_expr("p[1,2]", 10).unwrap().to_formal(None).is_err());
        assert!(parse_expr("x_1", 10).unwrap().to_plucker().is_err());
    }

    #[test]
    fn whitespace_insensitive() {
        assert_eq!(parse_expr(" p [ 1 , 2 ] * x_ 3 ", 4).unwrap(), parse_expr("p[1,2]*x_3", 4).unwrap());
    }

    #[test]
    fn printed_polynomials_reparse() {
        let p = parse_plucker("(p[1,2] - 3/4*p[3,4])^2 - 2", 4).unwrap();
        assert_eq!(parse_plucker(&p.to_string(), 4).unwrap(), p);
    }
}
