//! Recursive-descent parser for polynomial and rational-function expressions.
//!
//! Grammar:
//! ```text
//! expr     := sum ('/' sum)?
//! sum      := term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := atom ('^' uint)?
//! atom     := rational | 'i' | VAR | '(' expr ')' | '-' atom
//! rational := int ('/' uint)?
//! ```
//! The rational `/` binds inside atoms only when both sides are integer
//! literals; any other `/` is the single top-level division of a rational
//! function. Whitespace is insignificant. The variable letter is `Z` for
//! complex inputs and `X` for real-polynomial inputs.

use std::fmt;

use num_traits::Zero;
use rectwind::scalars::GaussianRational;
use rectwind::{ComplexPoly, RationalFunction, Rational, RealPoly};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Expr {
    Rat(Rational),
    I,
    Var,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Div(Box<Expr>, Box<Expr>),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SyntaxError {
    pub pos: usize,
    pub message: String,
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at position {}: {}", self.pos, self.message)
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    var: char,
}

impl Parser {
    fn err<T>(&self, message: impl Into<String>) -> Result<T, SyntaxError> {
        Err(SyntaxError {
            pos: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).map_or(false, |c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn parse_uint(&mut self) -> Result<String, SyntaxError> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).map_or(false, |c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected a number");
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    fn parse_expr(&mut self) -> Result<Expr, SyntaxError> {
        let num = self.parse_sum()?;
        if self.eat('/') {
            let den = self.parse_sum()?;
            return Ok(Expr::Div(Box::new(num), Box::new(den)));
        }
        Ok(num)
    }

    fn parse_sum(&mut self) -> Result<Expr, SyntaxError> {
        let mut acc = self.parse_term()?;
        loop {
            if self.eat('+') {
                let rhs = self.parse_term()?;
                acc = Expr::Add(Box::new(acc), Box::new(rhs));
            } else if self.eat('-') {
                let rhs = self.parse_term()?;
                acc = Expr::Sub(Box::new(acc), Box::new(rhs));
            } else {
                return Ok(acc);
            }
        }
    }

    fn parse_term(&mut self) -> Result<Expr, SyntaxError> {
        let mut acc = self.parse_factor()?;
        while self.eat('*') {
            let rhs = self.parse_factor()?;
            acc = Expr::Mul(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn parse_factor(&mut self) -> Result<Expr, SyntaxError> {
        let base = self.parse_atom()?;
        if self.eat('^') {
            let digits = self.parse_uint()?;
            let exp: u32 = match digits.parse() {
                Ok(e) => e,
                Err(_) => return self.err("exponent too large"),
            };
            return Ok(Expr::Pow(Box::new(base), exp));
        }
        Ok(base)
    }

    fn parse_atom(&mut self) -> Result<Expr, SyntaxError> {
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                let inner = self.parse_atom()?;
                Ok(Expr::Neg(Box::new(inner)))
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.parse_expr()?;
                if !self.eat(')') {
                    return self.err("expected ')'");
                }
                Ok(inner)
            }
            Some('i') => {
                self.pos += 1;
                Ok(Expr::I)
            }
            Some(c) if c == self.var => {
                self.pos += 1;
                Ok(Expr::Var)
            }
            Some(c) if c.is_ascii_digit() => {
                let numer = self.parse_uint()?;
                // `int / uint` is a rational literal only when digits follow.
                let save = self.pos;
                if self.eat('/') {
                    if self.peek().map_or(false, |c| c.is_ascii_digit()) {
                        let denom = self.parse_uint()?;
                        let d: num_bigint::BigInt = denom.parse().unwrap();
                        if d.is_zero() {
                            return self.err("zero denominator in rational literal");
                        }
                        return Ok(Expr::Rat(Rational::new(numer.parse().unwrap(), d)));
                    }
                    self.pos = save;
                }
                Ok(Expr::Rat(Rational::from_integer(numer.parse().unwrap())))
            }
            Some(c) => self.err(format!("unexpected character '{}'", c)),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses an expression over the given variable letter.
pub fn parse_expr(text: &str, var: char) -> Result<Expr, SyntaxError> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
        var,
    };
    let e = p.parse_expr()?;
    if let Some(c) = p.peek() {
        return p.err(format!("trailing input starting at '{}'", c));
    }
    Ok(e)
}

/// Canonical printing; reparsing the output yields an identical tree.
#[cfg(test)]
pub fn print_expr(e: &Expr, var: char) -> String {
    fn atom(e: &Expr, var: char) -> String {
        match e {
            Expr::Rat(_) | Expr::I | Expr::Var | Expr::Neg(_) => print(e, var),
            _ => format!("({})", print(e, var)),
        }
    }
    fn factor(e: &Expr, var: char) -> String {
        match e {
            Expr::Pow(_, _) => print(e, var),
            _ => atom(e, var),
        }
    }
    fn term(e: &Expr, var: char) -> String {
        match e {
            Expr::Mul(_, _) => print(e, var),
            _ => factor(e, var),
        }
    }
    fn print(e: &Expr, var: char) -> String {
        match e {
            Expr::Rat(r) => format!("{}", r),
            Expr::I => "i".to_owned(),
            Expr::Var => var.to_string(),
            Expr::Neg(inner) => format!("-{}", atom(inner, var)),
            Expr::Add(a, b) => format!("{} + {}", sum_lhs(a, var), term(b, var)),
            Expr::Sub(a, b) => format!("{} - {}", sum_lhs(a, var), term(b, var)),
            Expr::Mul(a, b) => format!("{}*{}", term(a, var), factor(b, var)),
            Expr::Pow(base, n) => format!("{}^{}", atom(base, var), n),
            Expr::Div(a, b) => format!("{}/({})", sum_lhs(a, var), print(b, var)),
        }
    }
    fn sum_lhs(e: &Expr, var: char) -> String {
        match e {
            Expr::Add(_, _) | Expr::Sub(_, _) => print(e, var),
            _ => term(e, var),
        }
    }
    print(e, var)
}

/// Lowering failures: structure the grammar admits but the target domain
/// rejects.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LowerError(pub String);

impl fmt::Display for LowerError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn lower_complex_poly(e: &Expr) -> Result<ComplexPoly, LowerError> {
    Ok(match e {
        Expr::Rat(r) => ComplexPoly::constant(GaussianRational::from_rational(r.clone())),
        Expr::I => ComplexPoly::constant(GaussianRational::i()),
        Expr::Var => ComplexPoly::z(),
        Expr::Neg(inner) => -&lower_complex_poly(inner)?,
        Expr::Add(a, b) => &lower_complex_poly(a)? + &lower_complex_poly(b)?,
        Expr::Sub(a, b) => &lower_complex_poly(a)? - &lower_complex_poly(b)?,
        Expr::Mul(a, b) => &lower_complex_poly(a)? * &lower_complex_poly(b)?,
        Expr::Pow(base, n) => lower_complex_poly(base)?.pow(*n),
        Expr::Div(_, _) => {
            return Err(LowerError(
                "division is only allowed once, at the top level".to_owned(),
            ))
        }
    })
}

/// Lowers to a rational function; at most one division, at the top level.
pub fn lower_rational_function(e: &Expr) -> Result<RationalFunction, LowerError> {
    match e {
        Expr::Div(num, den) => {
            let n = lower_complex_poly(num)?;
            let d = lower_complex_poly(den)?;
            RationalFunction::new(n, d)
                .map_err(|_| LowerError("denominator is identically zero".to_owned()))
        }
        _ => Ok(RationalFunction::from_poly(lower_complex_poly(e)?)),
    }
}

/// Lowers to a complex polynomial; any division is rejected.
pub fn lower_polynomial(e: &Expr) -> Result<ComplexPoly, LowerError> {
    lower_complex_poly(e)
}

/// Lowers to a real polynomial; `i` and division are rejected.
pub fn lower_real_polynomial(e: &Expr) -> Result<RealPoly, LowerError> {
    Ok(match e {
        Expr::Rat(r) => RealPoly::constant(r.clone()),
        Expr::I => {
            return Err(LowerError(
                "the imaginary unit is not allowed in a real polynomial".to_owned(),
            ))
        }
        Expr::Var => RealPoly::x(),
        Expr::Neg(inner) => -&lower_real_polynomial(inner)?,
        Expr::Add(a, b) => &lower_real_polynomial(a)? + &lower_real_polynomial(b)?,
        Expr::Sub(a, b) => &lower_real_polynomial(a)? - &lower_real_polynomial(b)?,
        Expr::Mul(a, b) => &lower_real_polynomial(a)? * &lower_real_polynomial(b)?,
        Expr::Pow(base, n) => lower_real_polynomial(base)?.pow(*n),
        Expr::Div(_, _) => {
            return Err(LowerError(
                "division is not allowed in a polynomial argument".to_owned(),
            ))
        }
    })
}
