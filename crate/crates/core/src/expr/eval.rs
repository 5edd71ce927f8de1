use num_traits::Zero;

use super::{Expr, Func};
use crate::error::{Error, Result};
use crate::oracle::{bracket_oracle, star_oracle};
use crate::poly::QPolynomial;
use crate::quat::Quaternion;
use crate::star::{poisson_bracket, star, BracketPair, StarConfig};
use crate::{QPoly, Rational};

/// Largest exponent accepted by `^`.
pub const MAX_POWER: u32 = 64;

/// Which implementation supplies brackets and star products.
pub trait Backend {
    fn star(&self, f: &QPoly, g: &QPoly, cfg: &StarConfig<Rational>) -> QPoly;
    fn bracket(&self, f: &QPoly, g: &QPoly, p: BracketPair) -> QPoly;
}

pub struct EngineBackend;

impl Backend for EngineBackend {
    fn star(&self, f: &QPoly, g: &QPoly, cfg: &StarConfig<Rational>) -> QPoly {
        star(f, g, cfg)
    }

    fn bracket(&self, f: &QPoly, g: &QPoly, p: BracketPair) -> QPoly {
        poisson_bracket(f, g, p)
    }
}

pub struct OracleBackend;

impl Backend for OracleBackend {
    fn star(&self, f: &QPoly, g: &QPoly, cfg: &StarConfig<Rational>) -> QPoly {
        star_oracle(f, g, cfg)
    }

    fn bracket(&self, f: &QPoly, g: &QPoly, p: BracketPair) -> QPoly {
        bracket_oracle(f, g, p)
    }
}

pub fn evaluate<B: Backend>(e: &Expr, cfg: &StarConfig<Rational>, backend: &B) -> Result<QPoly> {
    Ok(match e {
        Expr::Num(r) => QPolynomial::real(r.clone()),
        Expr::Unit(u) => QPolynomial::constant(Quaternion::unit(*u)),
        Expr::Q => QPolynomial::q(),
        Expr::QBar => QPolynomial::qbar(),
        Expr::Var(v) => QPolynomial::var(*v),
        Expr::Neg(x) => -evaluate(x, cfg, backend)?,
        Expr::Add(l, r) => evaluate(l, cfg, backend)? + evaluate(r, cfg, backend)?,
        Expr::Sub(l, r) => evaluate(l, cfg, backend)? - evaluate(r, cfg, backend)?,
        Expr::Mul(l, r) => evaluate(l, cfg, backend)? * evaluate(r, cfg, backend)?,
        Expr::Pow(x, n) => {
            if *n > MAX_POWER {
                return Err(Error::Domain(format!(
                    "exponent {n} exceeds the limit of {MAX_POWER}"
                )));
            }
            evaluate(x, cfg, backend)?.pow(*n)
        }
        Expr::Call(func, args) => {
            let vals = args
                .iter()
                .map(|a| evaluate(a, cfg, backend))
                .collect::<Result<Vec<_>>>()?;
            match (func, vals.as_slice()) {
                (Func::Star, [f, g]) => backend.star(f, g, cfg),
                (Func::Bracket(p), [f, g]) => backend.bracket(f, g, *p),
                (Func::Comm, [f, g]) => &backend.star(f, g, cfg) - &backend.star(g, f, cfg),
                (Func::Assoc, [f, g, h]) => {
                    let left = backend.star(&backend.star(f, g, cfg), h, cfg);
                    let right = backend.star(f, &backend.star(g, h, cfg), cfg);
                    &left - &right
                }
                (Func::Conj, [f]) => f.conj(),
                (Func::Inv, [f]) => {
                    let c = f
                        .as_constant()
                        .ok_or_else(|| Error::Domain("inv() needs a constant argument".into()))?;
                    if c.norm_sq().is_zero() {
                        return Err(Error::ZeroInverse);
                    }
                    QPolynomial::constant(c.inverse()?)
                }
                _ => unreachable!("arity is checked by the parser"),
            }
        }
    })
}

/// Evaluates with both the engine and the oracle and insists they agree.
pub fn evaluate_checked(e: &Expr, cfg: &StarConfig<Rational>) -> Result<QPoly> {
    let engine = evaluate(e, cfg, &EngineBackend)?;
    let oracle = evaluate(e, cfg, &OracleBackend)?;
    if engine != oracle {
        return Err(Error::Divergence {
            context: e.to_string(),
            engine: engine.to_string(),
            oracle: oracle.to_string(),
        });
    }
    Ok(engine)
}
