#![allow(dead_code)]

use proptest::prelude::*;
use quatstar::expr::{Expr, Func};
use quatstar::oracle::sample::{self, PolyShape};
use quatstar::{BracketPair, QPoly, Quat, Rational, Scalar, Var};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| Rational::ratio(n, d))
}

pub fn quat() -> impl Strategy<Value = Quat> {
    [rational(), rational(), rational(), rational()].prop_map(|[a, b, c, d]| Quat::new(a, b, c, d))
}

pub fn nonzero_quat() -> impl Strategy<Value = Quat> {
    quat().prop_filter("nonzero", |q| !q.is_zero())
}

/// Random polynomial in the position variables, drawn from a seed so that
/// proptest shrinks over seeds rather than over polynomial structure.
pub fn poly(max_degree: u32) -> impl Strategy<Value = QPoly> {
    any::<u64>().prop_map(move |seed| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        sample::polynomial(&mut rng, PolyShape::new(max_degree))
    })
}

pub fn real_poly(max_degree: u32) -> impl Strategy<Value = QPoly> {
    any::<u64>().prop_map(move |seed| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        sample::polynomial(&mut rng, PolyShape::new(max_degree).real())
    })
}

pub fn poly_with_parameters(max_degree: u32) -> impl Strategy<Value = QPoly> {
    any::<u64>().prop_map(move |seed| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        sample::polynomial_with_parameters(&mut rng, PolyShape::new(max_degree))
    })
}

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random expression tree over the whole grammar except `inv`, kept small
/// enough to evaluate quickly.
pub fn random_expr<R: Rng>(rng: &mut R, depth: u32) -> Expr {
    let leaf = |rng: &mut R| match rng.gen_range(0..5) {
        0 => Expr::Num(Rational::ratio(rng.gen_range(0..=9), rng.gen_range(1..=4))),
        1 => Expr::Unit(rng.gen_range(1..=3)),
        2 => Expr::Q,
        3 => Expr::QBar,
        _ => Expr::Var(Var::ALL[rng.gen_range(0..Var::ALL.len())]),
    };
    if depth == 0 {
        return leaf(rng);
    }
    let sub = |rng: &mut R| Box::new(random_expr(rng, depth - 1));
    match rng.gen_range(0..10) {
        0 | 1 => leaf(rng),
        2 => Expr::Neg(sub(rng)),
        3 => Expr::Add(sub(rng), sub(rng)),
        4 => Expr::Sub(sub(rng), sub(rng)),
        5 => Expr::Mul(sub(rng), sub(rng)),
        6 => Expr::Pow(sub(rng), rng.gen_range(0..=2)),
        7 => Expr::Call(
            Func::Star,
            vec![random_expr(rng, depth - 1), random_expr(rng, depth - 1)],
        ),
        8 => {
            let p = BracketPair::ALL[rng.gen_range(0..6)];
            Expr::Call(
                Func::Bracket(p),
                vec![random_expr(rng, depth - 1), random_expr(rng, depth - 1)],
            )
        }
        _ => match rng.gen_range(0..3) {
            0 => Expr::Call(Func::Conj, vec![random_expr(rng, depth - 1)]),
            1 => Expr::Call(
                Func::Comm,
                vec![random_expr(rng, depth - 1), random_expr(rng, depth - 1)],
            ),
            _ => Expr::Call(
                Func::Assoc,
                vec![
                    random_expr(rng, depth.saturating_sub(2)),
                    random_expr(rng, depth.saturating_sub(2)),
                    random_expr(rng, depth.saturating_sub(2)),
                ],
            ),
        },
    }
}
