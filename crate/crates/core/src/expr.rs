//! A small expression language for algebra elements.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*'? factor)*
//! factor := atom ('^' uint)?
//! atom   := rational | 'x' uint | 's' uint | '(' expr ')'
//! ```
//!
//! Whitespace is ignored and juxtaposition is a product, so `2x1 s1` and
//! `2*x1*s1` are the same. Rationals are written `a` or `a/b`. Generator
//! indices are only checked when evaluating against a concrete algebra.

use std::fmt;

use num_bigint::BigInt;

use crate::graded::GradedElement;
use crate::hecke::{HeckeAlgebra, HeckeElement};
use crate::{rational_to_string, Error, Rational, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Num(Rational),
    X(usize),
    S(usize),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(q) => write!(f, "{}", rational_to_string(q)),
            Expr::X(i) => write!(f, "x{i}"),
            Expr::S(i) => write!(f, "s{i}"),
            Expr::Neg(a) => write!(f, "-({a})"),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Mul(a, b) => write!(f, "({a} * {b})"),
            Expr::Pow(a, n) => write!(f, "({a})^{n}"),
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { offset: self.pos, message: message.into() })
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).expect("ascii"))
    }

    fn uint(&mut self, what: &str) -> Result<usize> {
        match self.digits() {
            Some(s) => s.parse().or_else(|_| self.err(format!("{what} is too large"))),
            None => self.err(format!("expected {what}")),
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = if self.peek() == Some(b'-') {
            self.pos += 1;
            Expr::Neg(Box::new(self.term()?))
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(b'-') => {
                    self.pos += 1;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
                }
                Some(c) if c.is_ascii_digit() || c == b'x' || c == b's' || c == b'(' => {
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let n = self.uint("an exponent")?;
            let n = u32::try_from(n).or_else(|_| self.err("exponent is too large"))?;
            return Ok(Expr::Pow(Box::new(base), n));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c @ (b'x' | b's')) => {
                self.pos += 1;
                let i = self.uint("a generator index")?;
                Ok(if c == b'x' { Expr::X(i) } else { Expr::S(i) })
            }
            Some(c) if c.is_ascii_digit() => {
                let num: BigInt = self.digits().expect("digit").parse().expect("digits");
                let mut den = BigInt::from(1);
                if self.src.get(self.pos) == Some(&b'/') {
                    self.pos += 1;
                    let at = self.pos;
                    den = match self.digits() {
                        Some(s) => s.parse().expect("digits"),
                        None => return self.err("expected a denominator"),
                    };
                    if den == BigInt::from(0) {
                        self.pos = at;
                        return self.err("zero denominator");
                    }
                }
                Ok(Expr::Num(Rational::new(num, den)))
            }
            Some(c) => self.err(format!("unexpected character {:?}", c as char)),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses an expression; errors carry the byte offset of the problem.
pub fn parse(source: &str) -> Result<Expr> {
    let mut p = Parser { src: source.as_bytes(), pos: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("unexpected trailing input");
    }
    Ok(e)
}

/// Evaluates in `H_d^f`, giving the PBW normal form.
pub fn evaluate(e: &Expr, h: &HeckeAlgebra) -> Result<HeckeElement> {
    Ok(match e {
        Expr::Num(q) => h.scalar(q.clone()),
        Expr::X(i) => h.x(*i)?,
        Expr::S(i) => h.s(*i)?,
        Expr::Neg(a) => -&evaluate(a, h)?,
        Expr::Add(a, b) => &evaluate(a, h)? + &evaluate(b, h)?,
        Expr::Sub(a, b) => &evaluate(a, h)? - &evaluate(b, h)?,
        Expr::Mul(a, b) => h.multiply(&evaluate(a, h)?, &evaluate(b, h)?)?,
        Expr::Pow(a, n) => h.pow(&evaluate(a, h)?, *n)?,
    })
}

/// Evaluates in the graded algebra `R_l[x_1..x_d] ⋊ Q S_d`.
pub fn evaluate_graded(e: &Expr, d: usize, l: usize) -> Result<GradedElement> {
    let range = |ok: bool, name: String| {
        if ok {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange(format!("{name} with d={d}")))
        }
    };
    Ok(match e {
        Expr::Num(q) => GradedElement::one(d, l).scale(q),
        Expr::X(i) => {
            range(*i >= 1 && *i <= d, format!("x{i}"))?;
            GradedElement::x(d, l, *i)
        }
        Expr::S(i) => {
            range(*i >= 1 && *i < d, format!("s{i}"))?;
            GradedElement::s(d, l, *i)
        }
        Expr::Neg(a) => -&evaluate_graded(a, d, l)?,
        Expr::Add(a, b) => &evaluate_graded(a, d, l)? + &evaluate_graded(b, d, l)?,
        Expr::Sub(a, b) => &evaluate_graded(a, d, l)? - &evaluate_graded(b, d, l)?,
        Expr::Mul(a, b) => evaluate_graded(a, d, l)?.multiply(&evaluate_graded(b, d, l)?)?,
        Expr::Pow(a, n) => {
            let base = evaluate_graded(a, d, l)?;
            let mut acc = GradedElement::one(d, l);
            for _ in 0..*n {
                acc = acc.multiply(&base)?;
            }
            acc
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::CyclotomicSpec;
    use crate::rational::{rat, rat_frac};

    fn alg(roots: &[i64], d: usize) -> HeckeAlgebra {
        HeckeAlgebra::new(CyclotomicSpec::from_roots(roots.iter().map(|&r| rat(r)).collect(), d).unwrap())
    }

    #[test]
    fn parse_shapes() {
        assert_eq!(
            parse("s1*x2").unwrap(),
            Expr::Mul(Box::new(Expr::S(1)), Box::new(Expr::X(2)))
        );
        assert_eq!(
            parse("x1^2 + 3/2").unwrap(),
            Expr::Add(
                Box::new(Expr::Pow(Box::new(Expr::X(1)), 2)),
                Box::new(Expr::Num(rat_frac(3, 2)))
            )
        );
        assert_eq!(parse(" s1  x2 ").unwrap(), parse("s1*x2").unwrap());
    }

    #[test]
    fn syntax_errors_have_offsets() {
        for (src, offset) in [("x1 +", 4), ("x", 1), ("(x1", 3), ("x1 ) ", 3), ("1/0", 2), ("x1 & 2", 3)] {
            match parse(src) {
                Err(Error::Syntax { offset: o, .. }) => assert_eq!(o, offset, "{src}"),
                other => panic!("{src}: {other:?}"),
            }
        }
    }

    #[test]
    fn evaluation() {
        let h = alg(&[0, 0], 2);
        let ev = |s: &str| evaluate(&parse(s).unwrap(), &h);
        assert_eq!(ev("s1*x2").unwrap().render(), "x1*s1 + 1");
        assert!(ev("x1^2").unwrap().is_zero());
        assert_eq!(ev("s1*s1").unwrap(), h.one());
        assert_eq!(ev("-x1*s1 + 1").unwrap().render(), "-x1*s1 + 1");
        let err = ev("x0").unwrap_err();
        assert!(matches!(err, Error::IndexOutOfRange(_)));
        assert!(err.to_string().contains("generator index out of range"));
        assert!(ev("s2").is_err());
        assert!(evaluate_graded(&parse("x3").unwrap(), 2, 2).is_err());
        assert_eq!(
            evaluate_graded(&parse("x1 s1 x1").unwrap(), 2, 3).unwrap().render(),
            "x1*x2*s1"
        );
    }
}
