//! Polynomials with quaternion coefficients in commuting real indeterminates.
//!
//! The indeterminates are the four components `a, b, c, d` of `q` plus the
//! deformation parameter `nu` and the six independent `Theta_mn`. All of them
//! are central: they commute with each other and with the coefficients, so a
//! product only has to respect the order of the quaternion coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::quat::{write_components, Quaternion, UNIT_NAMES};
use crate::scalar::Scalar;

pub const NUM_VARS: usize = 11;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    A,
    B,
    C,
    D,
    Nu,
    ThetaAb,
    ThetaAc,
    ThetaAd,
    ThetaBc,
    ThetaBd,
    ThetaCd,
}

impl Var {
    pub const ALL: [Var; NUM_VARS] = [
        Var::A,
        Var::B,
        Var::C,
        Var::D,
        Var::Nu,
        Var::ThetaAb,
        Var::ThetaAc,
        Var::ThetaAd,
        Var::ThetaBc,
        Var::ThetaBd,
        Var::ThetaCd,
    ];

    pub const POSITION: [Var; 4] = [Var::A, Var::B, Var::C, Var::D];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(idx: usize) -> Var {
        Self::ALL[idx]
    }

    pub fn is_position(self) -> bool {
        self.index() < 4
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::A => "a",
            Var::B => "b",
            Var::C => "c",
            Var::D => "d",
            Var::Nu => "nu",
            Var::ThetaAb => "Theta_ab",
            Var::ThetaAc => "Theta_ac",
            Var::ThetaAd => "Theta_ad",
            Var::ThetaBc => "Theta_bc",
            Var::ThetaBd => "Theta_bd",
            Var::ThetaCd => "Theta_cd",
        }
    }

    pub fn from_name(name: &str) -> Option<Var> {
        Self::ALL.into_iter().find(|v| v.name() == name)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponent vector over [`Var::ALL`].
///
/// Ordered graded-lexicographically: total degree first, then exponents
/// compared variable by variable in `Var` order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial([u16; NUM_VARS]);

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(v: Var) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: u16) -> Self {
        let mut m = Self::default();
        m.0[v.index()] = e;
        m
    }

    pub fn from_exponents(exps: [u16; NUM_VARS]) -> Self {
        Self(exps)
    }

    pub fn exponents(&self) -> &[u16; NUM_VARS] {
        &self.0
    }

    pub fn exponent(&self, v: Var) -> u16 {
        self.0[v.index()]
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| u32::from(e)).sum()
    }

    /// Degree in `a, b, c, d` only.
    pub fn position_degree(&self) -> u32 {
        self.0[..4].iter().map(|&e| u32::from(e)).sum()
    }

    /// Product of monomials; panics on exponent overflow.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(std::array::from_fn(|i| {
            self.0[i]
                .checked_add(other.0[i])
                .expect("monomial exponent overflow")
        }))
    }

    /// Lowers the exponent of `v` by one, returning the old exponent, or
    /// `None` when `v` does not occur.
    pub fn lower(&self, v: Var) -> Option<(u16, Monomial)> {
        let e = self.0[v.index()];
        (e > 0).then(|| {
            let mut m = self.clone();
            m.0[v.index()] = e - 1;
            (e, m)
        })
    }

    pub fn vars(&self) -> impl Iterator<Item = (Var, u16)> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (Var::from_index(i), e))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (n, (v, e)) in self.vars().enumerate() {
            if n > 0 {
                f.write_str(" ")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Values for indeterminates, used by [`QPolynomial::eval`].
pub type EvalAssignment<T> = BTreeMap<Var, T>;

/// Finite sum of `coefficient * monomial` with no zero coefficients stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QPolynomial<T> {
    terms: BTreeMap<Monomial, Quaternion<T>>,
}

impl<T> Default for QPolynomial<T> {
    fn default() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }
}

impl<T: Scalar> QPolynomial<T> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Quaternion::one())
    }

    pub fn constant(q: Quaternion<T>) -> Self {
        Self::term(Monomial::one(), q)
    }

    pub fn real(x: T) -> Self {
        Self::constant(Quaternion::real(x))
    }

    pub fn var(v: Var) -> Self {
        Self::term(Monomial::var(v), Quaternion::one())
    }

    pub fn term(m: Monomial, q: Quaternion<T>) -> Self {
        let mut p = Self::zero();
        p.add_term(m, q);
        p
    }

    /// `a + b i + c j + d k`
    pub fn q() -> Self {
        Self::from_terms((0..4).map(|u| (Monomial::var(Var::from_index(u)), Quaternion::unit(u))))
    }

    /// `a - b i - c j - d k`
    pub fn qbar() -> Self {
        Self::q().conj()
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Quaternion<T>)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (m, q) in terms {
            p.add_term(m, q);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, q: Quaternion<T>) {
        if q.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(q);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &q;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Quaternion<T>)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, Quaternion<T>)> {
        self.terms.into_iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Quaternion<T> {
        self.terms.get(m).cloned().unwrap_or_else(Quaternion::zero)
    }

    /// The constant term when the polynomial has no other terms.
    pub fn as_constant(&self) -> Option<Quaternion<T>> {
        match self.terms.len() {
            0 => Some(Quaternion::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Highest degree in `a, b, c, d` over all terms; 0 for the zero polynomial.
    pub fn position_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(Monomial::position_degree)
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in(&self, v: Var) -> u16 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    /// True when every coefficient is real, so the polynomial is central.
    pub fn has_real_coefficients(&self) -> bool {
        self.terms.values().all(Quaternion::is_real)
    }

    pub fn scale(&self, s: &T) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, q)| (m.clone(), q.scale(s)))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(k, q)| (k.mul(m), q.clone()))
                .collect(),
        }
    }

    pub fn left_mul_quat(&self, q: &Quaternion<T>) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), q * c)))
    }

    pub fn right_mul_quat(&self, q: &Quaternion<T>) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), c * q)))
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Formal partial derivative; only `a, b, c, d` are differentiable.
    pub fn partial(&self, v: Var) -> Result<Self> {
        if !v.is_position() {
            return Err(Error::NotPositional(v));
        }
        Ok(self.d(v))
    }

    pub(crate) fn d(&self, v: Var) -> Self {
        Self::from_terms(self.terms.iter().filter_map(|(m, q)| {
            m.lower(v)
                .map(|(e, lowered)| (lowered, q.scale(&T::from_int(i64::from(e)))))
        }))
    }

    /// Conjugates every coefficient; all indeterminates count as real.
    pub fn conj(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, q)| (m.clone(), q.conj()))
                .collect(),
        }
    }

    pub fn eval(&self, sigma: &EvalAssignment<T>) -> Result<Quaternion<T>> {
        let mut acc = Quaternion::zero();
        for (m, q) in &self.terms {
            let mut s = T::one();
            for (v, e) in m.vars() {
                let x = sigma.get(&v).ok_or(Error::Unassigned(v))?;
                for _ in 0..e {
                    s = s * x.clone();
                }
            }
            acc += &q.scale(&s);
        }
        Ok(acc)
    }

    /// Variables with a positive exponent somewhere in the polynomial.
    pub fn variables(&self) -> Vec<Var> {
        Var::ALL
            .into_iter()
            .filter(|&v| self.degree_in(v) > 0)
            .collect()
    }

    /// The `nu^s` part of the polynomial with the `nu` factor removed.
    pub fn nu_coefficient(&self, s: u16) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| m.exponent(Var::Nu) == s)
                .map(|(m, q)| {
                    let mut e = *m.exponents();
                    e[Var::Nu.index()] = 0;
                    (Monomial::from_exponents(e), q.clone())
                }),
        )
    }
}

impl<T: Scalar> Add for &QPolynomial<T> {
    type Output = QPolynomial<T>;
    fn add(self, rhs: &QPolynomial<T>) -> QPolynomial<T> {
        let mut out = self.clone();
        for (m, q) in &rhs.terms {
            out.add_term(m.clone(), q.clone());
        }
        out
    }
}

impl<T: Scalar> Sub for &QPolynomial<T> {
    type Output = QPolynomial<T>;
    fn sub(self, rhs: &QPolynomial<T>) -> QPolynomial<T> {
        let mut out = self.clone();
        for (m, q) in &rhs.terms {
            out.add_term(m.clone(), -q);
        }
        out
    }
}

impl<T: Scalar> Neg for &QPolynomial<T> {
    type Output = QPolynomial<T>;
    fn neg(self) -> QPolynomial<T> {
        QPolynomial {
            terms: self.terms.iter().map(|(m, q)| (m.clone(), -q)).collect(),
        }
    }
}

/// Ordered product: coefficients of `self` multiply from the left.
impl<T: Scalar> Mul for &QPolynomial<T> {
    type Output = QPolynomial<T>;
    fn mul(self, rhs: &QPolynomial<T>) -> QPolynomial<T> {
        let mut out = QPolynomial::zero();
        for (lm, lq) in &self.terms {
            for (rm, rq) in &rhs.terms {
                out.add_term(lm.mul(rm), lq * rq);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $f:ident),*) => {$(
        impl<T: Scalar> $tr for QPolynomial<T> {
            type Output = QPolynomial<T>;
            fn $f(self, rhs: QPolynomial<T>) -> QPolynomial<T> {
                (&self).$f(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl<T: Scalar> Neg for QPolynomial<T> {
    type Output = QPolynomial<T>;
    fn neg(self) -> QPolynomial<T> {
        -&self
    }
}

impl<T: Scalar> From<Quaternion<T>> for QPolynomial<T> {
    fn from(q: Quaternion<T>) -> Self {
        Self::constant(q)
    }
}

/// Canonical text, terms in descending graded-lex order.
///
/// A term whose coefficient has one nonzero component prints as
/// `<scalar> <monomial> <unit>` (`2 a b i`, `-c j`, `nu Theta_bc k`), with a
/// unit scalar omitted; a coefficient with several components is
/// parenthesized and leads: `(1 + 2 i) a^2`.
impl<T: Scalar> fmt::Display for QPolynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, q) in self.terms.iter().rev() {
            let parts = q.nonzero_components();
            // A constant term needs no parentheses: its components are
            // written out as separate signed words.
            if parts.len() == 1 || m.is_one() {
                for (idx, c) in parts {
                    f.write_str(match (first, c.is_negative()) {
                        (true, true) => "-",
                        (true, false) => "",
                        (false, true) => " - ",
                        (false, false) => " + ",
                    })?;
                    first = false;
                    let mag = c.abs();
                    let mut words: Vec<String> = Vec::new();
                    if !mag.is_one() || (idx == 0 && m.is_one()) {
                        words.push(mag.to_string());
                    }
                    if !m.is_one() {
                        words.push(m.to_string());
                    }
                    if idx != 0 {
                        words.push(UNIT_NAMES[idx].to_string());
                    }
                    f.write_str(&words.join(" "))?;
                }
            } else {
                if !first {
                    f.write_str(" + ")?;
                }
                first = false;
                f.write_str("(")?;
                write_components(f, q)?;
                write!(f, ") {m}")?;
            }
        }
        Ok(())
    }
}
