//! Scalar functions of arc length: parsed expressions or tabulated channels.
//!
//! Grammar (lowest to highest precedence):
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/') unary)*
//! unary   := ('-' | '+') unary | power
//! power   := primary ('^' unary)?          right associative
//! primary := number | 's' | func '(' expr ')' | '(' expr ')'
//! func    := sin | cos | tan | atan | sqrt | exp | log | abs
//! ```
//!
//! So `-s^2` is `-(s^2)` and `2^-1` is `0.5`.

use std::fmt;

use crate::error::{Error, Result};
use crate::spline::CubicSpline;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    Sin,
    Cos,
    Tan,
    Atan,
    Sqrt,
    Exp,
    Log,
    Abs,
}

impl Func {
    const ALL: [Func; 8] = [Func::Sin, Func::Cos, Func::Tan, Func::Atan, Func::Sqrt, Func::Exp, Func::Log, Func::Abs];

    pub fn name(self) -> &'static str {
        match self {
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Tan => "tan",
            Func::Atan => "atan",
            Func::Sqrt => "sqrt",
            Func::Exp => "exp",
            Func::Log => "log",
            Func::Abs => "abs",
        }
    }

    fn from_name(name: &str) -> Option<Func> {
        Func::ALL.into_iter().find(|f| f.name() == name)
    }

    fn apply(self, x: f64, s: f64) -> Result<f64> {
        let bad = |message: &str| Error::Evaluation { s, message: message.to_string() };
        Ok(match self {
            Func::Sin => x.sin(),
            Func::Cos => x.cos(),
            Func::Tan => x.tan(),
            Func::Atan => x.atan(),
            Func::Sqrt if x < 0.0 => return Err(bad("sqrt of a negative number")),
            Func::Sqrt => x.sqrt(),
            Func::Exp => x.exp(),
            Func::Log if x <= 0.0 => return Err(bad("log of a non-positive number")),
            Func::Log => x.ln(),
            Func::Abs => x.abs(),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

impl BinOp {
    fn symbol(self) -> char {
        match self {
            BinOp::Add => '+',
            BinOp::Sub => '-',
            BinOp::Mul => '*',
            BinOp::Div => '/',
            BinOp::Pow => '^',
        }
    }
}

/// Expression tree over the single variable `s`.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Num(f64),
    Var,
    Neg(Box<Expr>),
    Bin(BinOp, Box<Expr>, Box<Expr>),
    Call(Func, Box<Expr>),
}

impl Expr {
    pub fn parse(text: &str) -> Result<Expr> {
        let mut p = Parser { src: text.as_bytes(), pos: 0 };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos < p.src.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(e)
    }

    pub fn eval(&self, s: f64) -> Result<f64> {
        let v = match self {
            Expr::Num(v) => *v,
            Expr::Var => s,
            Expr::Neg(e) => -e.eval(s)?,
            Expr::Call(f, e) => f.apply(e.eval(s)?, s)?,
            Expr::Bin(op, a, b) => {
                let (a, b) = (a.eval(s)?, b.eval(s)?);
                match op {
                    BinOp::Add => a + b,
                    BinOp::Sub => a - b,
                    BinOp::Mul => a * b,
                    BinOp::Div if b == 0.0 => return Err(Error::Evaluation { s, message: "division by zero".into() }),
                    BinOp::Div => a / b,
                    BinOp::Pow => a.powf(b),
                }
            }
        };
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::Evaluation { s, message: format!("non-finite result in `{self}`") })
        }
    }

    /// `sign / (s + c)`, the reciprocal family used by the canonical profiles.
    pub fn reciprocal_shift(sign: f64, c: f64) -> Expr {
        Expr::Bin(
            BinOp::Div,
            Box::new(Expr::Num(sign)),
            Box::new(Expr::Bin(BinOp::Add, Box::new(Expr::Var), Box::new(Expr::Num(c)))),
        )
    }
}

/// Fully parenthesized form that parses back to an identical tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(v) if v.is_sign_negative() => write!(f, "(-{:?})", -v),
            Expr::Num(v) => write!(f, "{v:?}"),
            Expr::Var => f.write_str("s"),
            Expr::Neg(e) => write!(f, "(-{e})"),
            Expr::Bin(op, a, b) => write!(f, "({a} {} {b})", op.symbol()),
            Expr::Call(func, e) => write!(f, "{}({e})", func.name()),
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Parse { offset: self.pos, message: message.to_string() }
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

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek() {
                Some(b'+') => BinOp::Add,
                Some(b'-') => BinOp::Sub,
                _ => return Ok(lhs),
            };
            self.pos += 1;
            let rhs = self.term()?;
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            let op = match self.peek() {
                Some(b'*') => BinOp::Mul,
                Some(b'/') => BinOp::Div,
                _ => return Ok(lhs),
            };
            self.pos += 1;
            let rhs = self.unary()?;
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat(b'-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        if self.eat(b'+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.primary()?;
        if self.eat(b'^') {
            let exponent = self.unary()?;
            return Ok(Expr::Bin(BinOp::Pow, Box::new(base), Box::new(exponent)));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Expr> {
        match self.peek() {
            None => Err(self.error("unexpected end of input")),
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return Err(if self.peek().is_none() {
                        self.error("unexpected end of input, expected `)`")
                    } else {
                        self.error("expected `)`")
                    });
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() || c == b'.' => self.number(),
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii identifier");
                if name == "s" {
                    return Ok(Expr::Var);
                }
                let Some(func) = Func::from_name(name) else {
                    return Err(Error::Parse { offset: start, message: format!("unknown identifier `{name}`") });
                };
                if !self.eat(b'(') {
                    return Err(self.error(&format!("expected `(` after `{name}`")));
                }
                let arg = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected `)`"));
                }
                Ok(Expr::Call(func, Box::new(arg)))
            }
            Some(_) => Err(self.error("unexpected character")),
        }
    }

    fn number(&mut self) -> Result<Expr> {
        let start = self.pos;
        let digits = |p: &mut Self| {
            let from = p.pos;
            while p.pos < p.src.len() && p.src[p.pos].is_ascii_digit() {
                p.pos += 1;
            }
            p.pos - from
        };
        let mut count = digits(self);
        if self.src.get(self.pos) == Some(&b'.') {
            self.pos += 1;
            count += digits(self);
        }
        if count == 0 {
            return Err(Error::Parse { offset: start, message: "malformed number".into() });
        }
        if matches!(self.src.get(self.pos), Some(b'e' | b'E')) {
            let mark = self.pos;
            self.pos += 1;
            if matches!(self.src.get(self.pos), Some(b'+' | b'-')) {
                self.pos += 1;
            }
            if digits(self) == 0 {
                return Err(Error::Parse { offset: mark, message: "malformed exponent".into() });
            }
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii number");
        text.parse::<f64>()
            .map(Expr::Num)
            .map_err(|_| Error::Parse { offset: start, message: format!("malformed number `{text}`") })
    }
}

/// A channel sampled at strictly increasing abscissae, interpolated by a
/// natural cubic spline (derivatives are those of the interpolant).
#[derive(Debug, Clone, PartialEq)]
pub struct Tabulated {
    spline: CubicSpline,
}

impl Tabulated {
    pub fn new(s: &[f64], values: &[f64]) -> Result<Self> {
        Ok(Self { spline: CubicSpline::natural(s, values)? })
    }

    fn check_domain(&self, s: f64) -> Result<()> {
        let (lo, hi) = self.spline.domain();
        let slack = 1e-9 * (hi - lo);
        if s < lo - slack || s > hi + slack || !s.is_finite() {
            return Err(Error::Evaluation { s, message: format!("outside tabulated range [{lo}, {hi}]") });
        }
        Ok(())
    }

    pub fn eval(&self, s: f64) -> Result<f64> {
        self.derivative(s, 0)
    }

    /// Derivative of `order` (0..=3) of the interpolant.
    pub fn derivative(&self, s: f64, order: usize) -> Result<f64> {
        self.check_domain(s)?;
        Ok(self.spline.eval_derivative(s, order))
    }
}

/// A real function of arc length.
#[derive(Debug, Clone, PartialEq)]
pub enum ScalarFunction {
    Expr(Expr),
    Tabulated(Tabulated),
}

impl ScalarFunction {
    pub fn parse(text: &str) -> Result<Self> {
        Expr::parse(text).map(ScalarFunction::Expr)
    }

    pub fn constant(v: f64) -> Self {
        ScalarFunction::Expr(Expr::Num(v))
    }

    pub fn eval(&self, s: f64) -> Result<f64> {
        match self {
            ScalarFunction::Expr(e) => e.eval(s),
            ScalarFunction::Tabulated(t) => t.eval(s),
        }
    }

    pub fn sample(&self, grid: impl IntoIterator<Item = f64>) -> Result<Vec<f64>> {
        grid.into_iter().map(|s| self.eval(s)).collect()
    }
}

pub fn parse_scalar_function(text: &str) -> Result<ScalarFunction> {
    ScalarFunction::parse(text)
}
