//! Generating-function expressions: parsing, rendering and expansion.
//!
//! Grammar, loosest binding first:
//!
//! ```text
//! sum     := product (("+" | "-") product)*
//! product := unary (("*" | "/") unary)*
//! unary   := "-" unary | power
//! power   := atom ("^" INTEGER)*
//! atom    := INTEGER | symbol | func "(" sum ")" | "(" sum ")"
//! ```

use std::fmt;

use eulerforge_core::algebra::{ExactScalar, Rational, Var};
use eulerforge_core::series::{PowerSeries, SeriesVar};
use num_bigint::BigInt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Symbol {
    X,
    T,
    R,
    Y,
    A,
    B,
}

impl Symbol {
    pub const ALL: [Symbol; 6] = [Symbol::X, Symbol::T, Symbol::R, Symbol::Y, Symbol::A, Symbol::B];

    fn name(self) -> &'static str {
        match self {
            Symbol::X => "x",
            Symbol::T => "t",
            Symbol::R => "r",
            Symbol::Y => "y",
            Symbol::A => "a",
            Symbol::B => "b",
        }
    }

    fn from_name(s: &str) -> Option<Symbol> {
        Symbol::ALL.into_iter().find(|sym| sym.name() == s)
    }

    /// The polynomial variable, or `None` for the series variables `x`, `t`.
    pub fn parameter(self) -> Option<Var> {
        match self {
            Symbol::R => Some(Var::R),
            Symbol::Y => Some(Var::Y),
            Symbol::A => Some(Var::A),
            Symbol::B => Some(Var::B),
            Symbol::X | Symbol::T => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Func {
    Exp,
    Ln,
    /// Catalan composition `c(u) = (1 - sqrt(1 - 4u)) / (2u)`.
    C,
}

impl Func {
    const ALL: [Func; 3] = [Func::Exp, Func::Ln, Func::C];

    fn name(self) -> &'static str {
        match self {
            Func::Exp => "exp",
            Func::Ln => "ln",
            Func::C => "c",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl BinOp {
    fn symbol(self) -> char {
        match self {
            BinOp::Add => '+',
            BinOp::Sub => '-',
            BinOp::Mul => '*',
            BinOp::Div => '/',
        }
    }

    fn precedence(self) -> u8 {
        match self {
            BinOp::Add | BinOp::Sub => 1,
            BinOp::Mul | BinOp::Div => 2,
        }
    }
}

/// Integer literals are nonnegative; negation is always a [`Expr::Neg`] node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Sym(Symbol),
    Neg(Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Call(Func, Box<Expr>),
}

const PREC_NEG: u8 = 3;
const PREC_POW: u8 = 4;
const PREC_ATOM: u8 = 5;

impl Expr {
    fn precedence(&self) -> u8 {
        match self {
            Expr::Binary(op, ..) => op.precedence(),
            Expr::Neg(_) => PREC_NEG,
            Expr::Pow(..) => PREC_POW,
            Expr::Int(_) | Expr::Sym(_) | Expr::Call(..) => PREC_ATOM,
        }
    }

    pub fn symbols(&self) -> Vec<Symbol> {
        fn walk(e: &Expr, out: &mut Vec<Symbol>) {
            match e {
                Expr::Int(_) => {}
                Expr::Sym(s) => {
                    if !out.contains(s) {
                        out.push(*s);
                    }
                }
                Expr::Neg(a) | Expr::Pow(a, _) | Expr::Call(_, a) => walk(a, out),
                Expr::Binary(_, a, b) => {
                    walk(a, out);
                    walk(b, out);
                }
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out.sort_by_key(|s| Symbol::ALL.iter().position(|t| t == s));
        out
    }
}

fn write_operand(f: &mut fmt::Formatter<'_>, e: &Expr, min: u8) -> fmt::Result {
    if e.precedence() < min {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

/// Minimal parenthesization that parses back to the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(n) => write!(f, "{n}"),
            Expr::Sym(s) => f.write_str(s.name()),
            Expr::Neg(a) => {
                f.write_str("-")?;
                write_operand(f, a, PREC_NEG)
            }
            Expr::Binary(op, a, b) => {
                let p = op.precedence();
                write_operand(f, a, p)?;
                write!(f, "{}", op.symbol())?;
                write_operand(f, b, p + 1)
            }
            Expr::Pow(a, e) => {
                write_operand(f, a, PREC_POW)?;
                write!(f, "^{e}")
            }
            Expr::Call(func, a) => write!(f, "{}({a})", func.name()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Op(char),
    LParen,
    RParen,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "'{n}'"),
            Tok::Ident(s) => write!(f, "'{s}'"),
            Tok::Op(c) => write!(f, "'{c}'"),
            Tok::LParen => f.write_str("'('"),
            Tok::RParen => f.write_str("')'"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(src: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let (mut line, mut column) = (1, 1);
    let mut chars = src.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (tl, tc) = (line, column);
        let push = |out: &mut Vec<Token>, tok| out.push(Token { tok, line: tl, column: tc });
        if c == '\n' {
            chars.next();
            line += 1;
            column = 1;
        } else if c.is_whitespace() {
            chars.next();
            column += 1;
        } else if c.is_ascii_digit() {
            let mut digits = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                digits.push(d);
                chars.next();
                column += 1;
            }
            push(&mut out, Tok::Int(digits.parse().expect("ascii digits")));
        } else if c.is_ascii_alphabetic() {
            let mut word = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_alphanumeric() || **d == '_') {
                word.push(d);
                chars.next();
                column += 1;
            }
            push(&mut out, Tok::Ident(word));
        } else {
            let tok = match c {
                '+' | '-' | '*' | '/' | '^' => Tok::Op(c),
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                other => {
                    return Err(ParseError { line, column, message: format!("unexpected character '{other}'") })
                }
            };
            chars.next();
            column += 1;
            push(&mut out, tok);
        }
    }
    out.push(Token { tok: Tok::End, line, column });
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if t.tok != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn error(&self, at: &Token, message: String) -> ParseError {
        ParseError { line: at.line, column: at.column, message }
    }

    fn expect(&mut self, want: Tok) -> Result<(), ParseError> {
        let t = self.next();
        if t.tok == want {
            Ok(())
        } else {
            Err(self.error(&t, format!("expected {want}, found {}", t.tok)))
        }
    }

    fn sum(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.product()?;
        while let Tok::Op(c @ ('+' | '-')) = self.peek().tok {
            self.next();
            let op = if c == '+' { BinOp::Add } else { BinOp::Sub };
            lhs = Expr::Binary(op, Box::new(lhs), Box::new(self.product()?));
        }
        Ok(lhs)
    }

    fn product(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        while let Tok::Op(c @ ('*' | '/')) = self.peek().tok {
            self.next();
            let op = if c == '*' { BinOp::Mul } else { BinOp::Div };
            lhs = Expr::Binary(op, Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.peek().tok == Tok::Op('-') {
            self.next();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let mut base = self.atom()?;
        while self.peek().tok == Tok::Op('^') {
            self.next();
            let t = self.next();
            let Tok::Int(n) = &t.tok else {
                return Err(self.error(&t, format!("exponent must be a nonnegative integer literal, found {}", t.tok)));
            };
            let e = u32::try_from(n).map_err(|_| self.error(&t, format!("exponent {n} is too large")))?;
            base = Expr::Pow(Box::new(base), e);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let t = self.next();
        match &t.tok {
            Tok::Int(n) => Ok(Expr::Int(n.clone())),
            Tok::LParen => {
                let inner = self.sum()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            Tok::Ident(name) => {
                if let Some(func) = Func::ALL.into_iter().find(|f| f.name() == name) {
                    if self.peek().tok == Tok::LParen {
                        self.next();
                        let arg = self.sum()?;
                        self.expect(Tok::RParen)?;
                        return Ok(Expr::Call(func, Box::new(arg)));
                    }
                    let after = self.peek().clone();
                    return Err(self.error(&after, format!("expected '(' after function '{name}'")));
                }
                Symbol::from_name(name)
                    .map(Expr::Sym)
                    .ok_or_else(|| self.error(&t, format!("unknown name '{name}'")))
            }
            other => Err(self.error(&t, format!("expected an operand, found {other}"))),
        }
    }
}

pub fn parse(src: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { tokens: lex(src)?, pos: 0 };
    let e = p.sum()?;
    let t = p.next();
    if t.tok != Tok::End {
        return Err(p.error(&t, format!("unexpected {} after expression", t.tok)));
    }
    Ok(e)
}

/// A failed precondition, naming the subexpression it arose in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalError {
    pub subexpr: String,
    pub message: String,
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "in '{}': {}", self.subexpr, self.message)
    }
}

impl std::error::Error for EvalError {}

fn series_symbol(var: SeriesVar) -> Symbol {
    match var {
        SeriesVar::X => Symbol::X,
        SeriesVar::T => Symbol::T,
    }
}

/// Exact expansion of `e` as a power series in `var` up to `x^order`.
/// The other series symbol may not appear.
pub fn eval_to_series(e: &Expr, var: SeriesVar, order: usize) -> Result<PowerSeries, EvalError> {
    let fail = |node: &Expr, err: &dyn fmt::Display| EvalError { subexpr: node.to_string(), message: err.to_string() };
    let s = match e {
        Expr::Int(n) => {
            PowerSeries::constant(var, ExactScalar::Rat(Rational::from_integer(n.clone())), order)
        }
        Expr::Sym(sym) => match sym.parameter() {
            Some(v) => PowerSeries::constant(var, ExactScalar::var(v), order),
            None if *sym == series_symbol(var) => PowerSeries::identity(var, order),
            None => return Err(fail(e, &format!("'{}' cannot appear in a series in {var}", sym.name()))),
        },
        Expr::Neg(a) => eval_to_series(a, var, order)?.neg(),
        Expr::Binary(op, a, b) => {
            let (l, r) = (eval_to_series(a, var, order)?, eval_to_series(b, var, order)?);
            let out = match op {
                BinOp::Add => l.add(&r),
                BinOp::Sub => l.sub(&r),
                BinOp::Mul => l.mul(&r),
                BinOp::Div => l.div(&r),
            };
            out.map_err(|err| fail(e, &err))?
        }
        Expr::Pow(a, n) => eval_to_series(a, var, order)?.pow(*n),
        Expr::Call(func, a) => {
            let arg = eval_to_series(a, var, order)?;
            let out = match func {
                Func::Exp => arg.exp(),
                Func::Ln => arg.log(),
                Func::C => arg.catalan_compose(),
            };
            out.map_err(|err| fail(e, &err))?
        }
    };
    Ok(s)
}
