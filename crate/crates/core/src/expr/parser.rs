use num_traits::ToPrimitive;

use super::lexer::{tokenize, Spanned, Tok};
use super::{Expr, Func, ParseError};
use crate::poly::Var;

const PRIMARY_START: [&str; 3] = ["number", "name", "`(`"];

pub fn parse_expression(src: &str) -> Result<Expr, ParseError> {
    let mut p = Parser {
        toks: tokenize(src)?,
        pos: 0,
    };
    let e = p.expr()?;
    if p.peek() != &Tok::End {
        return Err(p.error(&["`+`", "`-`", "`*`", "number", "name", "`(`", "end of input"]));
    }
    Ok(e)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn next(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        let (tok, col) = &self.toks[self.pos];
        ParseError {
            column: *col,
            found: tok.describe(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.next();
            Ok(())
        } else {
            Err(self.error(&[what]))
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.next();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.next();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            let rhs = match self.peek() {
                Tok::Star => {
                    self.next();
                    self.unary()?
                }
                Tok::Num(_) | Tok::Ident(_) | Tok::LParen => self.unary()?,
                _ => return Ok(lhs),
            };
            lhs = Expr::Mul(Box::new(lhs), Box::new(rhs));
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() == Tok::Minus {
            self.next();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        let base = self.primary()?;
        if *self.peek() == Tok::Caret {
            self.next();
            let n = match self.peek() {
                Tok::Num(r) if r.is_integer() => r.to_integer().to_u32(),
                _ => None,
            };
            let Some(n) = n else {
                return Err(self.error(&["natural-number exponent"]));
            };
            self.next();
            return Ok(Expr::Pow(Box::new(base), n));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        match self.peek().clone() {
            Tok::Num(r) => {
                self.next();
                Ok(Expr::Num(r))
            }
            Tok::LParen => {
                self.next();
                let e = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(e)
            }
            Tok::Ident(name) => {
                if let Some(func) = Func::from_name(&name) {
                    self.next();
                    return self.call(func);
                }
                let e = match name.as_str() {
                    "i" => Expr::Unit(1),
                    "j" => Expr::Unit(2),
                    "k" => Expr::Unit(3),
                    "q" => Expr::Q,
                    "qbar" => Expr::QBar,
                    _ => match Var::from_name(&name) {
                        Some(v) => Expr::Var(v),
                        None => {
                            return Err(self.error(&[
                                "i, j, k, q, qbar, a, b, c, d, nu, Theta_mn",
                                "star, pb_mn, comm, assoc, conj, inv",
                            ]))
                        }
                    },
                };
                self.next();
                Ok(e)
            }
            _ => Err(self.error(&PRIMARY_START)),
        }
    }

    fn call(&mut self, func: Func) -> Result<Expr, ParseError> {
        self.expect(Tok::LParen, "`(`")?;
        let mut args = vec![self.expr()?];
        while *self.peek() == Tok::Comma {
            if args.len() == func.arity() {
                return Err(self.error(&["`)`"]));
            }
            self.next();
            args.push(self.expr()?);
        }
        if args.len() < func.arity() {
            return Err(self.error(&["`,`"]));
        }
        self.expect(Tok::RParen, "`)`")?;
        Ok(Expr::Call(func, args))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::star::BracketPair;

    fn b(e: Expr) -> Box<Expr> {
        Box::new(e)
    }

    #[test]
    fn calls_and_precedence() {
        assert_eq!(
            parse_expression("star(q, conj(q))").unwrap(),
            Expr::Call(
                Func::Star,
                vec![Expr::Q, Expr::Call(Func::Conj, vec![Expr::Q])]
            )
        );
        assert_eq!(
            parse_expression("q^2 * qbar").unwrap(),
            Expr::Mul(b(Expr::Pow(b(Expr::Q), 2)), b(Expr::QBar))
        );
        assert_eq!(
            parse_expression("pb_ab(q, q q)").unwrap(),
            Expr::Call(
                Func::Bracket(BracketPair::Ab),
                vec![Expr::Q, Expr::Mul(b(Expr::Q), b(Expr::Q))]
            )
        );
    }

    #[test]
    fn unary_minus_binding() {
        assert_eq!(
            parse_expression("-q^2").unwrap(),
            Expr::Neg(b(Expr::Pow(b(Expr::Q), 2)))
        );
        assert_eq!(
            parse_expression("a - b").unwrap(),
            Expr::Sub(b(Expr::Var(Var::A)), b(Expr::Var(Var::B)))
        );
        assert_eq!(
            parse_expression("2 a - 3/2 b i").unwrap().to_string(),
            "2 * a - 3/2 * b * i"
        );
    }

    #[test]
    fn diagnostics_carry_columns() {
        let e = parse_expression("q + )").unwrap_err();
        assert_eq!(e.column, 5);
        assert!(e.found.contains(')'));
        let e = parse_expression("star(q)").unwrap_err();
        assert_eq!(e.column, 7);
        assert_eq!(e.expected, vec!["`,`".to_string()]);
        let e = parse_expression("q^x").unwrap_err();
        assert_eq!(e.column, 3);
        let e = parse_expression("1/0").unwrap_err();
        assert_eq!(e.column, 3);
        let e = parse_expression("q # 2").unwrap_err();
        assert_eq!(e.column, 3);
        let e = parse_expression("zeta").unwrap_err();
        assert_eq!(e.column, 1);
        let e = parse_expression("conj(q, q)").unwrap_err();
        assert_eq!(e.column, 7);
        assert!(parse_expression("").is_err());
    }
}
