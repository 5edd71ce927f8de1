//! Component Poisson brackets and the Moyal-Weyl star product.
//!
//! With `B = Σ_{m<n} Θ_mn (∂_m ⊗ ∂_n - ∂_n ⊗ ∂_m)` acting on the tensor square,
//! `f ★ g = Σ_s (1/s!) (ν/2)^s μ(B^s (f ⊗ g))`, where `μ(L ⊗ R) = L·R` keeps the
//! left slot on the left. For polynomials the sum stops at
//! `s = min(pdeg f, pdeg g)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::Error;
use crate::poly::{Monomial, QPolynomial, Var};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BracketPair {
    Ab,
    Ac,
    Ad,
    Bc,
    Bd,
    Cd,
}

impl BracketPair {
    pub const ALL: [BracketPair; 6] = [
        BracketPair::Ab,
        BracketPair::Ac,
        BracketPair::Ad,
        BracketPair::Bc,
        BracketPair::Bd,
        BracketPair::Cd,
    ];

    /// `(m, n)` with `m < n`.
    pub fn vars(self) -> (Var, Var) {
        match self {
            BracketPair::Ab => (Var::A, Var::B),
            BracketPair::Ac => (Var::A, Var::C),
            BracketPair::Ad => (Var::A, Var::D),
            BracketPair::Bc => (Var::B, Var::C),
            BracketPair::Bd => (Var::B, Var::D),
            BracketPair::Cd => (Var::C, Var::D),
        }
    }

    pub fn theta(self) -> Var {
        Var::from_index(Var::ThetaAb.index() + self as usize)
    }

    pub fn name(self) -> &'static str {
        match self {
            BracketPair::Ab => "ab",
            BracketPair::Ac => "ac",
            BracketPair::Ad => "ad",
            BracketPair::Bc => "bc",
            BracketPair::Bd => "bd",
            BracketPair::Cd => "cd",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|p| p.name() == s)
    }

    /// Canonical pair for two distinct position variables, in either order.
    pub fn from_vars(m: Var, n: Var) -> Option<Self> {
        let (lo, hi) = if m < n { (m, n) } else { (n, m) };
        Self::ALL.into_iter().find(|p| p.vars() == (lo, hi))
    }
}

impl fmt::Display for BracketPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The antisymmetric tensor `Θ`; only the upper triangle is stored.
#[derive(Debug, Clone, PartialEq)]
pub enum ThetaSpec<T> {
    /// Each `Θ_mn` stays an indeterminate.
    Formal,
    /// Values for `Θ_ab, Θ_ac, Θ_ad, Θ_bc, Θ_bd, Θ_cd`.
    Numeric([T; 6]),
}

impl<T: Scalar> ThetaSpec<T> {
    pub fn zero() -> Self {
        ThetaSpec::Numeric(std::array::from_fn(|_| T::zero()))
    }

    fn factor(&self, p: BracketPair) -> Central<T> {
        match self {
            ThetaSpec::Formal => Central::Var(p.theta()),
            ThetaSpec::Numeric(v) => Central::scalar(v[p as usize].clone()),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum NuMode<T> {
    Formal,
    Numeric(T),
}

#[derive(Debug, Clone, PartialEq)]
pub struct StarConfig<T> {
    pub theta: ThetaSpec<T>,
    pub nu: NuMode<T>,
    /// Highest power of `ν` kept; `None` means the exact, terminating sum.
    pub order_cap: Option<u32>,
}

impl<T: Scalar> StarConfig<T> {
    /// Formal `ν` and `Θ`, no truncation.
    pub fn formal() -> Self {
        Self {
            theta: ThetaSpec::Formal,
            nu: NuMode::Formal,
            order_cap: None,
        }
    }

    pub fn with_theta(theta: ThetaSpec<T>) -> Self {
        Self {
            theta,
            ..Self::formal()
        }
    }

    /// Multiplier `ν^s` (formal or numeric) for the order-`s` term.
    pub(crate) fn nu_power(&self, s: u32) -> Central<T> {
        match &self.nu {
            NuMode::Formal => Central::Monomial(Monomial::var_pow(
                Var::Nu,
                u16::try_from(s).expect("star order fits in u16"),
            )),
            NuMode::Numeric(x) => Central::scalar((0..s).fold(T::one(), |acc, _| acc * x.clone())),
        }
    }

    pub(crate) fn theta_factor(&self, p: BracketPair) -> Central<T> {
        self.theta.factor(p)
    }
}

/// A central multiplier: zero, a scalar, or a monomial in the parameters.
#[derive(Debug, Clone, PartialEq)]
pub(crate) enum Central<T> {
    Zero,
    Scalar(T),
    Var(Var),
    Monomial(Monomial),
}

impl<T: Scalar> Central<T> {
    pub(crate) fn scalar(x: T) -> Self {
        if x.is_zero() {
            Central::Zero
        } else {
            Central::Scalar(x)
        }
    }

    pub(crate) fn is_zero(&self) -> bool {
        matches!(self, Central::Zero)
    }

    pub(crate) fn apply(&self, p: &QPolynomial<T>) -> QPolynomial<T> {
        match self {
            Central::Zero => QPolynomial::zero(),
            Central::Scalar(x) => p.scale(x),
            Central::Var(v) => p.mul_monomial(&Monomial::var(*v)),
            Central::Monomial(m) => p.mul_monomial(m),
        }
    }
}

/// `{f, g}_mn = ∂_m f · ∂_n g - ∂_n f · ∂_m g`, derivatives of `f` on the left.
pub fn poisson_bracket<T: Scalar>(
    f: &QPolynomial<T>,
    g: &QPolynomial<T>,
    p: BracketPair,
) -> QPolynomial<T> {
    let (m, n) = p.vars();
    &(&f.d(m) * &g.d(n)) - &(&f.d(n) * &g.d(m))
}

type MultiIndex = [u16; 4];

/// Element `Σ_β L_β ⊗ ∂^β g` of the tensor square; the right slot is always
/// a derivative of the fixed right operand, so it is kept as a multi-index.
struct Tensor<'a, T> {
    right: &'a QPolynomial<T>,
    right_degrees: MultiIndex,
    left: BTreeMap<MultiIndex, QPolynomial<T>>,
    derivatives: HashMap<MultiIndex, QPolynomial<T>>,
}

impl<'a, T: Scalar> Tensor<'a, T> {
    fn new(f: &QPolynomial<T>, g: &'a QPolynomial<T>) -> Self {
        let mut left = BTreeMap::new();
        left.insert([0; 4], f.clone());
        Self {
            right: g,
            right_degrees: [0, 1, 2, 3].map(|i| g.degree_in(Var::from_index(i))),
            left,
            derivatives: HashMap::new(),
        }
    }

    fn bump(beta: &MultiIndex, v: Var) -> MultiIndex {
        let mut b = *beta;
        b[v.index()] += 1;
        b
    }

    fn right_vanishes(&self, beta: &MultiIndex) -> bool {
        beta.iter().zip(&self.right_degrees).any(|(b, d)| b > d)
    }

    /// Replaces the state by `B` applied to it.
    fn apply_bivector(&mut self, cfg: &StarConfig<T>) {
        let mut next: BTreeMap<MultiIndex, QPolynomial<T>> = BTreeMap::new();
        for (beta, l) in &self.left {
            for p in BracketPair::ALL {
                let theta = cfg.theta_factor(p);
                if theta.is_zero() {
                    continue;
                }
                let (m, n) = p.vars();
                // +Θ_mn ∂_m L ⊗ ∂_n R
                let bn = Self::bump(beta, n);
                if !self.right_vanishes(&bn) {
                    let t = theta.apply(&l.d(m));
                    if !t.is_zero() {
                        let slot = next.entry(bn).or_default();
                        *slot = &*slot + &t;
                    }
                }
                // -Θ_mn ∂_n L ⊗ ∂_m R
                let bm = Self::bump(beta, m);
                if !self.right_vanishes(&bm) {
                    let t = theta.apply(&l.d(n));
                    if !t.is_zero() {
                        let slot = next.entry(bm).or_default();
                        *slot = &*slot - &t;
                    }
                }
            }
        }
        next.retain(|_, l| !l.is_zero());
        self.left = next;
    }

    fn right_derivative(&mut self, beta: &MultiIndex) -> QPolynomial<T> {
        if let Some(d) = self.derivatives.get(beta) {
            return d.clone();
        }
        let mut d = self.right.clone();
        for (i, &e) in beta.iter().enumerate() {
            for _ in 0..e {
                d = d.d(Var::from_index(i));
            }
        }
        self.derivatives.insert(*beta, d.clone());
        d
    }

    /// `μ`: multiply every pair out, left slot first.
    fn contract(&mut self) -> QPolynomial<T> {
        let entries: Vec<_> = self.left.iter().map(|(b, l)| (*b, l.clone())).collect();
        let mut out = QPolynomial::zero();
        for (beta, l) in entries {
            let r = self.right_derivative(&beta);
            out = &out + &(&l * &r);
        }
        out
    }

    fn is_zero(&self) -> bool {
        self.left.is_empty()
    }
}

/// Coefficients `C_0 .. C_smax` of `ν^s` in `f ★ g` (with `ν` factored out).
fn expansion<T: Scalar>(
    f: &QPolynomial<T>,
    g: &QPolynomial<T>,
    cfg: &StarConfig<T>,
    s_max: u32,
) -> Vec<QPolynomial<T>> {
    let mut tensor = Tensor::new(f, g);
    let mut out = Vec::with_capacity(s_max as usize + 1);
    // 1 / (s! 2^s), built up incrementally
    let mut weight = T::one();
    for s in 0..=s_max {
        if s > 0 {
            tensor.apply_bivector(cfg);
            weight = weight / T::from_int(2 * i64::from(s));
        }
        if tensor.is_zero() {
            break;
        }
        out.push(tensor.contract().scale(&weight));
    }
    out
}

/// Highest order that can contribute to `f ★ g`.
fn terminating_order<T: Scalar>(f: &QPolynomial<T>, g: &QPolynomial<T>) -> u32 {
    f.position_degree().min(g.position_degree())
}

pub fn star<T: Scalar>(
    f: &QPolynomial<T>,
    g: &QPolynomial<T>,
    cfg: &StarConfig<T>,
) -> QPolynomial<T> {
    let mut s_max = terminating_order(f, g);
    if let Some(cap) = cfg.order_cap {
        s_max = s_max.min(cap);
    }
    expansion(f, g, cfg, s_max)
        .iter()
        .enumerate()
        .fold(QPolynomial::zero(), |acc, (s, c)| {
            &acc + &cfg.nu_power(s as u32).apply(c)
        })
}

/// Coefficient of `ν^s` in the formal expansion of `f ★ g`; `cfg.nu` and
/// `cfg.order_cap` are ignored.
pub fn star_order_term<T: Scalar>(
    f: &QPolynomial<T>,
    g: &QPolynomial<T>,
    s: u32,
    cfg: &StarConfig<T>,
) -> QPolynomial<T> {
    if s > terminating_order(f, g) {
        return QPolynomial::zero();
    }
    expansion(f, g, cfg, s)
        .into_iter()
        .nth(s as usize)
        .unwrap_or_default()
}

/// `f ★ g - g ★ f`
pub fn star_commutator<T: Scalar>(
    f: &QPolynomial<T>,
    g: &QPolynomial<T>,
    cfg: &StarConfig<T>,
) -> QPolynomial<T> {
    &star(f, g, cfg) - &star(g, f, cfg)
}

/// `(f ★ g) ★ h - f ★ (g ★ h)`
pub fn associator<T: Scalar>(
    f: &QPolynomial<T>,
    g: &QPolynomial<T>,
    h: &QPolynomial<T>,
    cfg: &StarConfig<T>,
) -> QPolynomial<T> {
    &star(&star(f, g, cfg), h, cfg) - &star(f, &star(g, h, cfg), cfg)
}

/// Parses `ab`, `ac`, ... into a pair.
impl std::str::FromStr for BracketPair {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Self::from_name(s).ok_or_else(|| Error::Domain(format!("unknown bracket pair `{s}`")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{QPoly, Quat, Rational, Scalar};

    fn q() -> QPoly {
        QPoly::q()
    }

    fn qb() -> QPoly {
        QPoly::qbar()
    }

    fn c(x: Quat) -> QPoly {
        QPoly::constant(x)
    }

    fn nu_theta(p: BracketPair) -> Monomial {
        Monomial::var(Var::Nu).mul(&Monomial::var(p.theta()))
    }

    #[test]
    fn brackets_of_generators() {
        assert_eq!(
            poisson_bracket(&q(), &q(), BracketPair::Bc),
            c(Quat::from_ints(0, 0, 0, 2))
        );
        assert_eq!(
            poisson_bracket(&q(), &qb(), BracketPair::Ab),
            c(Quat::from_ints(0, -2, 0, 0))
        );
        assert_eq!(
            poisson_bracket(&q(), &qb(), BracketPair::Bc),
            c(Quat::from_ints(0, 0, 0, -2))
        );
        let q2 = &q() * &q();
        let expected = &c(Quat::k())
            .mul_monomial(&Monomial::var(Var::C))
            .scale(&Rational::from_int(-2))
            + &c(Quat::j())
                .mul_monomial(&Monomial::var(Var::D))
                .scale(&Rational::from_int(2));
        assert_eq!(poisson_bracket(&q(), &q2, BracketPair::Ab), expected);
    }

    #[test]
    fn bracket_with_itself_vanishes_on_real_coefficients() {
        let f = &(&QPoly::var(Var::A) * &QPoly::var(Var::B)) + &QPoly::var(Var::C).pow(3);
        for p in BracketPair::ALL {
            assert!(poisson_bracket(&f, &f, p).is_zero());
        }
    }

    #[test]
    fn q_star_q() {
        let cfg = StarConfig::formal();
        let expected = QPoly::from_terms([
            (nu_theta(BracketPair::Bc), Quat::k()),
            (nu_theta(BracketPair::Bd), -Quat::j()),
            (nu_theta(BracketPair::Cd), Quat::i()),
        ]);
        assert_eq!(star(&q(), &q(), &cfg), &(&q() * &q()) + &expected);
        assert_eq!(star_order_term(&q(), &q(), 0, &cfg), &q() * &q());
        assert_eq!(
            star_order_term(&q(), &q(), 1, &cfg),
            expected.nu_coefficient(1)
        );
        assert!(star_order_term(&q(), &q(), 2, &cfg).is_zero());
    }

    #[test]
    fn q_star_qbar_keeps_all_six_pairs() {
        let cfg = StarConfig::formal();
        let first = QPoly::from_terms([
            (nu_theta(BracketPair::Ab), -Quat::i()),
            (nu_theta(BracketPair::Ac), -Quat::j()),
            (nu_theta(BracketPair::Ad), -Quat::k()),
            (nu_theta(BracketPair::Bc), -Quat::k()),
            (nu_theta(BracketPair::Bd), Quat::j()),
            (nu_theta(BracketPair::Cd), -Quat::i()),
        ]);
        assert_eq!(star(&q(), &qb(), &cfg), &(&q() * &qb()) + &first);
    }

    #[test]
    fn zero_theta_gives_point_product() {
        let cfg = StarConfig::with_theta(ThetaSpec::zero());
        let f = &q().pow(2) + &c(Quat::from_ints(0, 1, 2, 0));
        let g = &qb().pow(3) - &q();
        assert_eq!(star(&f, &g, &cfg), &f * &g);
        assert_eq!(star(&QPoly::one(), &g, &StarConfig::formal()), g);
    }

    #[test]
    fn numeric_parameters_and_cap() {
        let half = Rational::ratio(1, 2);
        let cfg = StarConfig {
            theta: ThetaSpec::Numeric(
                [0, 0, 0, 1, 0, 0].map(|x: i64| Rational::from_integer(x.into())),
            ),
            nu: NuMode::Numeric(half.clone()),
            order_cap: None,
        };
        // q ★ q = q² + ν k Θ_bc with ν = 1/2, Θ_bc = 1.
        assert_eq!(
            star(&q(), &q(), &cfg),
            &q().pow(2) + &c(Quat::k().scale(&half))
        );
        let capped = StarConfig {
            order_cap: Some(0),
            ..StarConfig::formal()
        };
        assert_eq!(star(&q(), &qb(), &capped), &q() * &qb());
    }

    #[test]
    fn commutator_and_associator_basics() {
        let cfg = StarConfig::formal();
        let f = &q().pow(2) + &c(Quat::i());
        assert!(star_commutator(&f, &f, &cfg).is_zero());
        let zero_theta = StarConfig::with_theta(ThetaSpec::zero());
        let g = &qb() * &c(Quat::j());
        assert!(associator(&f, &g, &q(), &zero_theta).is_zero());
    }

    #[test]
    fn pair_metadata() {
        assert_eq!(BracketPair::Bd.theta(), Var::ThetaBd);
        assert_eq!(
            BracketPair::from_vars(Var::D, Var::B),
            Some(BracketPair::Bd)
        );
        assert_eq!(BracketPair::from_vars(Var::A, Var::A), None);
        assert_eq!("cd".parse::<BracketPair>().unwrap(), BracketPair::Cd);
    }
}
