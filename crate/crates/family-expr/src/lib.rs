//! A small closed expression grammar used to describe parameter families.
//!
//! Expressions are built from numeric literals, the index variable `n`, the
//! constants `pi` and `e`, the operators `+ - * / ^` (with `^` binding
//! tightest and associating to the right), unary minus, parentheses, and the
//! functions `sin cos exp log sqrt atan`. There is no user code execution:
//! an expression is plain data that can be parsed, printed and evaluated.

use std::fmt;

use thiserror::Error;

/// Byte-free source span, 1-based columns `[start, end]` inclusive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    fn merge(self, other: Span) -> Span {
        Span {
            start: self.start.min(other.start),
            end: self.end.max(other.end),
        }
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

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    Sin,
    Cos,
    Exp,
    Log,
    Sqrt,
    Atan,
}

impl Func {
    fn name(self) -> &'static str {
        match self {
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Exp => "exp",
            Func::Log => "log",
            Func::Sqrt => "sqrt",
            Func::Atan => "atan",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ExprKind {
    Number(f64),
    /// The index variable `n`.
    Var,
    Pi,
    E,
    Neg(Box<Expr>),
    Binary {
        op: BinOp,
        lhs: Box<Expr>,
        rhs: Box<Expr>,
    },
    Call(Func, Box<Expr>),
}

/// A parsed expression node. Equality compares structure only, never spans,
/// so `parse(print(x)) == x` is a meaningful round-trip law.
#[derive(Debug, Clone)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Span,
}

impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

#[derive(Debug, Clone, Error, PartialEq)]
#[error("parse error at column {column}: {message}")]
pub struct ParseError {
    pub message: String,
    /// 1-based column of the offending token.
    pub column: usize,
}

#[derive(Debug, Clone, Error, PartialEq)]
#[error("evaluation error at columns {}..{}: {message}", span.start, span.end)]
pub struct EvalError {
    pub message: String,
    pub span: Span,
}

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Number(f64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

#[derive(Debug, Clone)]
struct SpannedTok {
    tok: Tok,
    span: Span,
}

fn lex(text: &str) -> Result<Vec<SpannedTok>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0usize;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
            }
            '+' | '-' | '*' | '/' | '^' | '(' | ')' => {
                let tok = match c {
                    '+' => Tok::Plus,
                    '-' => Tok::Minus,
                    '*' => Tok::Star,
                    '/' => Tok::Slash,
                    '^' => Tok::Caret,
                    '(' => Tok::LParen,
                    _ => Tok::RParen,
                };
                out.push(SpannedTok {
                    tok,
                    span: Span { start: col, end: col },
                });
                i += 1;
            }
            '0'..='9' | '.' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                if i < chars.len() && chars[i] == '.' {
                    i += 1;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                }
                // Exponent part: only when digits follow, e.g. `1e-3`.
                if i < chars.len() && (chars[i] == 'e' || chars[i] == 'E') {
                    let mut j = i + 1;
                    if j < chars.len() && (chars[j] == '+' || chars[j] == '-') {
                        j += 1;
                    }
                    if j < chars.len() && chars[j].is_ascii_digit() {
                        i = j;
                        while i < chars.len() && chars[i].is_ascii_digit() {
                            i += 1;
                        }
                    }
                }
                let s: String = chars[start..i].iter().collect();
                let value: f64 = s.parse().map_err(|_| ParseError {
                    message: format!("invalid number literal `{s}`"),
                    column: start + 1,
                })?;
                out.push(SpannedTok {
                    tok: Tok::Number(value),
                    span: Span { start: start + 1, end: i },
                });
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push(SpannedTok {
                    tok: Tok::Ident(s),
                    span: Span { start: start + 1, end: i },
                });
            }
            other => {
                return Err(ParseError {
                    message: format!("unexpected character `{other}`"),
                    column: col,
                });
            }
        }
    }
    let end_col = chars.len() + 1;
    out.push(SpannedTok {
        tok: Tok::End,
        span: Span { start: end_col, end: end_col },
    });
    Ok(out)
}

// ---------------------------------------------------------------------------
// Parser (recursive descent; precedence ^ > unary- > */ > +-)
// ---------------------------------------------------------------------------

struct Parser {
    toks: Vec<SpannedTok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &SpannedTok {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> SpannedTok {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<SpannedTok, ParseError> {
        let t = self.peek().clone();
        if t.tok == tok {
            Ok(self.bump())
        } else {
            Err(ParseError {
                message: format!("expected {what}"),
                column: t.span.start,
            })
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek().tok {
                Tok::Plus => BinOp::Add,
                Tok::Minus => BinOp::Sub,
                _ => break,
            };
            self.bump();
            let rhs = self.term()?;
            let span = lhs.span.merge(rhs.span);
            lhs = Expr {
                kind: ExprKind::Binary { op, lhs: Box::new(lhs), rhs: Box::new(rhs) },
                span,
            };
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            let op = match self.peek().tok {
                Tok::Star => BinOp::Mul,
                Tok::Slash => BinOp::Div,
                _ => break,
            };
            self.bump();
            let rhs = self.unary()?;
            let span = lhs.span.merge(rhs.span);
            lhs = Expr {
                kind: ExprKind::Binary { op, lhs: Box::new(lhs), rhs: Box::new(rhs) },
                span,
            };
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.peek().tok == Tok::Minus {
            let minus = self.bump();
            let inner = self.unary()?;
            let span = minus.span.merge(inner.span);
            return Ok(Expr { kind: ExprKind::Neg(Box::new(inner)), span });
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.peek().tok == Tok::Caret {
            self.bump();
            // Exponent parses at unary level: `2^-3` works and `2^3^2`
            // associates to the right.
            let exp = self.unary()?;
            let span = base.span.merge(exp.span);
            return Ok(Expr {
                kind: ExprKind::Binary {
                    op: BinOp::Pow,
                    lhs: Box::new(base),
                    rhs: Box::new(exp),
                },
                span,
            });
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let t = self.peek().clone();
        match t.tok {
            Tok::Number(v) => {
                self.bump();
                Ok(Expr { kind: ExprKind::Number(v), span: t.span })
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                let close = self.expect(Tok::RParen, "`)`")?;
                Ok(Expr { kind: inner.kind, span: t.span.merge(close.span) })
            }
            Tok::Ident(ref name) => {
                self.bump();
                let func = match name.as_str() {
                    "n" => return Ok(Expr { kind: ExprKind::Var, span: t.span }),
                    "pi" => return Ok(Expr { kind: ExprKind::Pi, span: t.span }),
                    "e" => return Ok(Expr { kind: ExprKind::E, span: t.span }),
                    "sin" => Func::Sin,
                    "cos" => Func::Cos,
                    "exp" => Func::Exp,
                    "log" => Func::Log,
                    "sqrt" => Func::Sqrt,
                    "atan" => Func::Atan,
                    other => {
                        return Err(ParseError {
                            message: format!("unknown identifier `{other}`"),
                            column: t.span.start,
                        })
                    }
                };
                self.expect(Tok::LParen, "`(` after function name")?;
                let arg = self.expr()?;
                let close = self.expect(Tok::RParen, "`)`")?;
                Ok(Expr {
                    kind: ExprKind::Call(func, Box::new(arg)),
                    span: t.span.merge(close.span),
                })
            }
            Tok::End => Err(ParseError {
                message: "unexpected end of input".to_string(),
                column: t.span.start,
            }),
            _ => Err(ParseError {
                message: "expected a number, name or `(`".to_string(),
                column: t.span.start,
            }),
        }
    }
}

/// Parse an expression in the family grammar.
pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0 };
    let e = p.expr()?;
    let t = p.peek();
    if t.tok != Tok::End {
        return Err(ParseError {
            message: "trailing input after expression".to_string(),
            column: t.span.start,
        });
    }
    Ok(e)
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

impl Expr {
    /// Evaluate at a value of the index variable.
    pub fn eval(&self, n: f64) -> Result<f64, EvalError> {
        let v = self.eval_inner(n)?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(EvalError {
                message: "non-finite result".to_string(),
                span: self.span,
            })
        }
    }

    fn eval_inner(&self, n: f64) -> Result<f64, EvalError> {
        match &self.kind {
            ExprKind::Number(v) => Ok(*v),
            ExprKind::Var => Ok(n),
            ExprKind::Pi => Ok(std::f64::consts::PI),
            ExprKind::E => Ok(std::f64::consts::E),
            ExprKind::Neg(inner) => Ok(-inner.eval_inner(n)?),
            ExprKind::Binary { op, lhs, rhs } => {
                let a = lhs.eval_inner(n)?;
                let b = rhs.eval_inner(n)?;
                match op {
                    BinOp::Add => Ok(a + b),
                    BinOp::Sub => Ok(a - b),
                    BinOp::Mul => Ok(a * b),
                    BinOp::Div => {
                        if b == 0.0 {
                            Err(EvalError {
                                message: "division by zero".to_string(),
                                span: self.span,
                            })
                        } else {
                            Ok(a / b)
                        }
                    }
                    BinOp::Pow => Ok(a.powf(b)),
                }
            }
            ExprKind::Call(func, arg) => {
                let x = arg.eval_inner(n)?;
                match func {
                    Func::Sin => Ok(x.sin()),
                    Func::Cos => Ok(x.cos()),
                    Func::Exp => Ok(x.exp()),
                    Func::Log => {
                        if x <= 0.0 {
                            Err(EvalError {
                                message: format!("log of non-positive value {x}"),
                                span: self.span,
                            })
                        } else {
                            Ok(x.ln())
                        }
                    }
                    Func::Sqrt => {
                        if x < 0.0 {
                            Err(EvalError {
                                message: format!("sqrt of negative value {x}"),
                                span: self.span,
                            })
                        } else {
                            Ok(x.sqrt())
                        }
                    }
                    Func::Atan => Ok(x.atan()),
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Printer (minimal parentheses; inverse of `parse` up to spans)
// ---------------------------------------------------------------------------

fn prec(kind: &ExprKind) -> u8 {
    match kind {
        ExprKind::Binary { op: BinOp::Add | BinOp::Sub, .. } => 1,
        ExprKind::Binary { op: BinOp::Mul | BinOp::Div, .. } => 2,
        ExprKind::Neg(_) => 3,
        ExprKind::Binary { op: BinOp::Pow, .. } => 4,
        _ => 5,
    }
}

fn write_child(f: &mut fmt::Formatter<'_>, child: &Expr, min_prec: u8) -> fmt::Result {
    if prec(&child.kind) < min_prec {
        write!(f, "({child})")
    } else {
        write!(f, "{child}")
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ExprKind::Number(v) => write!(f, "{v:?}"),
            ExprKind::Var => write!(f, "n"),
            ExprKind::Pi => write!(f, "pi"),
            ExprKind::E => write!(f, "e"),
            ExprKind::Neg(inner) => {
                write!(f, "-")?;
                write_child(f, inner, 3)
            }
            ExprKind::Binary { op, lhs, rhs } => match op {
                BinOp::Add => {
                    write_child(f, lhs, 1)?;
                    write!(f, "+")?;
                    write_child(f, rhs, 2)
                }
                BinOp::Sub => {
                    write_child(f, lhs, 1)?;
                    write!(f, "-")?;
                    write_child(f, rhs, 2)
                }
                BinOp::Mul => {
                    write_child(f, lhs, 2)?;
                    write!(f, "*")?;
                    write_child(f, rhs, 3)
                }
                BinOp::Div => {
                    write_child(f, lhs, 2)?;
                    write!(f, "/")?;
                    write_child(f, rhs, 3)
                }
                BinOp::Pow => {
                    // Right-associative: the base needs parens even at equal
                    // precedence, the exponent reparses at unary level.
                    write_child(f, lhs, 5)?;
                    write!(f, "^")?;
                    write_child(f, rhs, 3)
                }
            },
            ExprKind::Call(func, arg) => write!(f, "{}({arg})", func.name()),
        }
    }
}
