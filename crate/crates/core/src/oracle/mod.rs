//! Deliberately naive second implementations of the bracket and the star
//! product, and seeded random-point identity checks.
//!
//! Nothing here calls into [`crate::star`]; agreement between the two is the
//! evidence that either is right.

pub mod sample;

use std::collections::{BTreeMap, HashMap};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::poly::{EvalAssignment, Monomial, QPolynomial, Var};
use crate::quat::Quaternion;
use crate::scalar::Scalar;
use crate::star::{BracketPair, NuMode, StarConfig, ThetaSpec};

/// A linear combination `Σ left_i ⊗ right_i`; empty means zero.
#[derive(Debug, Clone)]
pub struct TensorState<T> {
    pub pairs: Vec<(QPolynomial<T>, QPolynomial<T>)>,
}

impl<T> Default for TensorState<T> {
    fn default() -> Self {
        Self { pairs: Vec::new() }
    }
}

impl<T: Scalar> TensorState<T> {
    pub fn push(&mut self, left: QPolynomial<T>, right: QPolynomial<T>) {
        if !left.is_zero() && !right.is_zero() {
            self.pairs.push((left, right));
        }
    }

    /// Multiplies each pair out, left slot first, and sums.
    pub fn contract(&self) -> QPolynomial<T> {
        self.pairs
            .iter()
            .fold(QPolynomial::zero(), |acc, (l, r)| &acc + &(l * r))
    }
}

/// Bracket computed monomial by monomial from the power rule, without
/// forming any derivative polynomial.
pub fn bracket_oracle<T: Scalar>(
    f: &QPolynomial<T>,
    g: &QPolynomial<T>,
    p: BracketPair,
) -> QPolynomial<T> {
    let (m, n) = p.vars();
    let mut out = QPolynomial::zero();
    for (fm, fq) in f.terms() {
        for (gm, gq) in g.terms() {
            let weight = i64::from(fm.exponent(m)) * i64::from(gm.exponent(n))
                - i64::from(fm.exponent(n)) * i64::from(gm.exponent(m));
            if weight == 0 {
                continue;
            }
            let mut e = *fm.mul(gm).exponents();
            e[m.index()] -= 1;
            e[n.index()] -= 1;
            out.add_term(
                Monomial::from_exponents(e),
                (fq * gq).scale(&T::from_int(weight)),
            );
        }
    }
    out
}

/// Signed `Θ_mn` for an ordered pair of distinct position variables, as a
/// central polynomial.
fn theta_value<T: Scalar>(theta: &ThetaSpec<T>, m: Var, n: Var) -> QPolynomial<T> {
    let (lo, hi, sign) = if m < n { (m, n, 1) } else { (n, m, -1) };
    let p = BracketPair::ALL
        .into_iter()
        .find(|p| p.vars() == (lo, hi))
        .expect("distinct position variables");
    let v = match theta {
        ThetaSpec::Formal => QPolynomial::var(p.theta()),
        ThetaSpec::Numeric(vals) => QPolynomial::real(vals[p as usize].clone()),
    };
    v.scale(&T::from_int(sign))
}

struct DerivativeTable<'a, T> {
    base: &'a QPolynomial<T>,
    cache: HashMap<[u16; 4], QPolynomial<T>>,
}

impl<'a, T: Scalar> DerivativeTable<'a, T> {
    fn new(base: &'a QPolynomial<T>) -> Self {
        Self {
            base,
            cache: HashMap::new(),
        }
    }

    fn get(&mut self, idx: [u16; 4]) -> QPolynomial<T> {
        if let Some(p) = self.cache.get(&idx) {
            return p.clone();
        }
        let mut p = self.base.clone();
        for (v, &e) in Var::POSITION.iter().zip(&idx) {
            for _ in 0..e {
                p = p.partial(*v).expect("position variable");
            }
        }
        self.cache.insert(idx, p.clone());
        p
    }
}

/// All ordered pairs `(m, n)` of distinct position variables.
fn ordered_pairs() -> Vec<(Var, Var)> {
    let mut out = Vec::with_capacity(12);
    for m in Var::POSITION {
        for n in Var::POSITION {
            if m != n {
                out.push((m, n));
            }
        }
    }
    out
}

type Leaves<T> = BTreeMap<([u16; 4], [u16; 4]), QPolynomial<T>>;

struct Enumerator<'a, T> {
    pairs: Vec<(Var, Var)>,
    theta: &'a ThetaSpec<T>,
    fd: DerivativeTable<'a, T>,
    gd: DerivativeTable<'a, T>,
}

impl<T: Scalar> Enumerator<'_, T> {
    /// Walks every length-`remaining` sequence of ordered pairs, collecting the
    /// product of signed `Θ` factors per resulting derivative multi-index.
    fn walk(
        &mut self,
        remaining: u32,
        alpha: [u16; 4],
        beta: [u16; 4],
        coef: QPolynomial<T>,
        leaves: &mut Leaves<T>,
    ) {
        if coef.is_zero() || self.fd.get(alpha).is_zero() || self.gd.get(beta).is_zero() {
            return;
        }
        if remaining == 0 {
            let slot = leaves.entry((alpha, beta)).or_default();
            *slot = &*slot + &coef;
            return;
        }
        for (m, n) in self.pairs.clone() {
            let mut a = alpha;
            let mut b = beta;
            a[m.index()] += 1;
            b[n.index()] += 1;
            let c = &coef * &theta_value(self.theta, m, n);
            self.walk(remaining - 1, a, b, c, leaves);
        }
    }
}

fn factorial(s: u32) -> i64 {
    (1..=i64::from(s)).product()
}

/// Star product by brute-force expansion of every ordered index sequence.
pub fn star_oracle<T: Scalar>(
    f: &QPolynomial<T>,
    g: &QPolynomial<T>,
    cfg: &StarConfig<T>,
) -> QPolynomial<T> {
    let mut e = Enumerator {
        pairs: ordered_pairs(),
        theta: &cfg.theta,
        fd: DerivativeTable::new(f),
        gd: DerivativeTable::new(g),
    };
    let mut total = QPolynomial::zero();
    let mut s = 0u32;
    loop {
        if cfg.order_cap.is_some_and(|cap| s > cap) {
            break;
        }
        let mut leaves = Leaves::new();
        e.walk(s, [0; 4], [0; 4], QPolynomial::one(), &mut leaves);
        if leaves.is_empty() {
            break;
        }
        let mut tensor = TensorState::default();
        for ((alpha, beta), coef) in leaves {
            tensor.push(&coef * &e.fd.get(alpha), e.gd.get(beta));
        }
        let denom = factorial(s) * (1i64 << s);
        let nu = match &cfg.nu {
            NuMode::Formal => QPolynomial::var(Var::Nu).pow(s),
            NuMode::Numeric(x) => QPolynomial::real(x.clone()).pow(s),
        };
        let term = &nu * &tensor.contract();
        total = &total + &term.scale(&(T::one() / T::from_int(denom)));
        s += 1;
    }
    total
}

/// Outcome of [`random_point_check`].
#[derive(Debug, Clone, PartialEq)]
pub struct PointCheck<T> {
    pub trials: usize,
    /// First assignment where the two sides differ, with both values.
    pub witness: Option<(EvalAssignment<T>, Quaternion<T>, Quaternion<T>)>,
}

impl<T> PointCheck<T> {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

/// Evaluates both sides at `trials` seeded random rational points (all
/// eleven indeterminates assigned) and compares exactly.
pub fn random_point_check<T: Scalar>(
    lhs: &QPolynomial<T>,
    rhs: &QPolynomial<T>,
    trials: usize,
    seed: u64,
) -> PointCheck<T> {
    assert!(trials >= 1, "at least one trial is required");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let sigma: EvalAssignment<T> = Var::ALL
            .into_iter()
            .map(|v| (v, sample::rational(&mut rng)))
            .collect();
        let l = lhs.eval(&sigma).expect("total assignment");
        let r = rhs.eval(&sigma).expect("total assignment");
        if l != r {
            return PointCheck {
                trials,
                witness: Some((sigma, l, r)),
            };
        }
    }
    PointCheck {
        trials,
        witness: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::star::poisson_bracket;
    use crate::{QPoly, Quat};

    #[test]
    fn oracle_matches_known_star() {
        let q = QPoly::q();
        let expected = &q.pow(2)
            + &QPoly::from_terms([
                (
                    Monomial::var(Var::Nu).mul(&Monomial::var(Var::ThetaBc)),
                    Quat::k(),
                ),
                (
                    Monomial::var(Var::Nu).mul(&Monomial::var(Var::ThetaBd)),
                    -Quat::j(),
                ),
                (
                    Monomial::var(Var::Nu).mul(&Monomial::var(Var::ThetaCd)),
                    Quat::i(),
                ),
            ]);
        assert_eq!(star_oracle(&q, &q, &StarConfig::formal()), expected);
    }

    #[test]
    fn oracle_with_zero_theta_is_point_product() {
        let f = &QPoly::q().pow(2) + &QPoly::constant(Quat::j());
        let g = QPoly::qbar().pow(2);
        let cfg = StarConfig::with_theta(ThetaSpec::zero());
        assert_eq!(star_oracle(&f, &g, &cfg), &f * &g);
    }

    #[test]
    fn bracket_oracle_agrees_on_generators() {
        let (q, qb) = (QPoly::q(), QPoly::qbar());
        let q2 = q.pow(2);
        for p in BracketPair::ALL {
            for (f, g) in [(&q, &qb), (&qb, &q), (&q, &q2), (&q2, &qb)] {
                assert_eq!(bracket_oracle(f, g, p), poisson_bracket(f, g, p));
            }
        }
    }

    #[test]
    fn point_checks() {
        let (q, qb) = (QPoly::q(), QPoly::qbar());
        let f = &q * &q;
        assert!(random_point_check(&f, &f, 20, 3).holds());
        assert!(random_point_check(&(&q * &qb), &(&qb * &q), 20, 1).holds());
        let check = random_point_check(&f, &(&qb * &qb), 20, 1);
        let (_, l, r) = check.witness.expect("q² and q̄² differ");
        assert_ne!(l, r);
    }

    #[test]
    fn point_check_is_deterministic() {
        let f = QPoly::q().pow(3);
        let g = &f + &QPoly::var(Var::ThetaAb);
        assert_eq!(
            random_point_check(&f, &g, 5, 11),
            random_point_check(&f, &g, 5, 11)
        );
    }
}
