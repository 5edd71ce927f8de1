//! Surface syntax for polynomials, brackets and star products.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary ('*'? unary)*        juxtaposition multiplies, left first
//! unary   := '-' unary | power
//! power   := primary ('^' nat)?
//! primary := literal | name | call | '(' expr ')'
//! ```

mod eval;
mod lexer;
mod parser;

use std::fmt;

pub use eval::{evaluate, evaluate_checked, Backend, EngineBackend, OracleBackend};
pub use parser::parse_expression;

use crate::poly::Var;
use crate::star::BracketPair;
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based character column.
    pub column: usize,
    pub found: String,
    pub expected: Vec<String>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at column {}: unexpected {}",
            self.column, self.found
        )?;
        if !self.expected.is_empty() {
            write!(f, "; expected {}", self.expected.join(", "))?;
        }
        Ok(())
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    Star,
    Bracket(BracketPair),
    Comm,
    Assoc,
    Conj,
    Inv,
}

impl Func {
    pub fn from_name(name: &str) -> Option<Func> {
        match name {
            "star" => Some(Func::Star),
            "comm" => Some(Func::Comm),
            "assoc" => Some(Func::Assoc),
            "conj" => Some(Func::Conj),
            "inv" => Some(Func::Inv),
            _ => name
                .strip_prefix("pb_")
                .and_then(BracketPair::from_name)
                .map(Func::Bracket),
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Func::Conj | Func::Inv => 1,
            Func::Star | Func::Bracket(_) | Func::Comm => 2,
            Func::Assoc => 3,
        }
    }

    pub fn name(self) -> String {
        match self {
            Func::Star => "star".into(),
            Func::Bracket(p) => format!("pb_{p}"),
            Func::Comm => "comm".into(),
            Func::Assoc => "assoc".into(),
            Func::Conj => "conj".into(),
            Func::Inv => "inv".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    /// Non-negative rational literal; negation is a separate node.
    Num(Rational),
    /// `i`, `j`, `k` as 1, 2, 3.
    Unit(usize),
    Q,
    QBar,
    Var(Var),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Call(Func, Vec<Expr>),
}

impl Expr {
    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) => 2,
            Expr::Neg(_) => 3,
            Expr::Pow(..) => 4,
            _ => 5,
        }
    }

    fn write_operand(&self, f: &mut fmt::Formatter<'_>, min_prec: u8) -> fmt::Result {
        if self.precedence() < min_prec {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }
}

/// Prints an expression that parses back to the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(r) => write!(f, "{r}"),
            Expr::Unit(u) => f.write_str(crate::quat::UNIT_NAMES[*u]),
            Expr::Q => f.write_str("q"),
            Expr::QBar => f.write_str("qbar"),
            Expr::Var(v) => write!(f, "{v}"),
            Expr::Neg(x) => {
                f.write_str("-")?;
                x.write_operand(f, 3)
            }
            Expr::Add(l, r) | Expr::Sub(l, r) => {
                l.write_operand(f, 1)?;
                f.write_str(if matches!(self, Expr::Add(..)) {
                    " + "
                } else {
                    " - "
                })?;
                r.write_operand(f, 2)
            }
            Expr::Mul(l, r) => {
                l.write_operand(f, 2)?;
                f.write_str(" * ")?;
                r.write_operand(f, 3)
            }
            Expr::Pow(x, n) => {
                x.write_operand(f, 5)?;
                write!(f, "^{n}")
            }
            Expr::Call(func, args) => {
                write!(f, "{}(", func.name())?;
                for (n, a) in args.iter().enumerate() {
                    if n > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
        }
    }
}
