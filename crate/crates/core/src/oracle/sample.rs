//! Seeded generators for rationals, quaternions and polynomials.
//!
//! Rationals have numerators in `[-9, 9]` and denominators in `[1, 4]`.

use rand::Rng;

use crate::poly::{Monomial, QPolynomial, Var, NUM_VARS};
use crate::quat::Quaternion;
use crate::scalar::Scalar;

pub fn rational<T: Scalar, R: Rng + ?Sized>(rng: &mut R) -> T {
    T::ratio(rng.gen_range(-9..=9), rng.gen_range(1..=4))
}

pub fn nonzero_rational<T: Scalar, R: Rng + ?Sized>(rng: &mut R) -> T {
    loop {
        let x: T = rational(rng);
        if !x.is_zero() {
            return x;
        }
    }
}

pub fn quaternion<T: Scalar, R: Rng + ?Sized>(rng: &mut R) -> Quaternion<T> {
    Quaternion::new(rational(rng), rational(rng), rational(rng), rational(rng))
}

pub fn nonzero_quaternion<T: Scalar, R: Rng + ?Sized>(rng: &mut R) -> Quaternion<T> {
    loop {
        let q = quaternion(rng);
        if !q.is_zero() {
            return q;
        }
    }
}

/// Shape of a random polynomial.
#[derive(Debug, Clone, Copy)]
pub struct PolyShape {
    pub max_position_degree: u32,
    pub max_terms: usize,
    /// Restrict coefficients to the real subfield.
    pub real_coefficients: bool,
    /// Force at least one term of exactly `max_position_degree`.
    pub exact_degree: bool,
}

impl PolyShape {
    pub fn new(max_position_degree: u32) -> Self {
        Self {
            max_position_degree,
            max_terms: 5,
            real_coefficients: false,
            exact_degree: false,
        }
    }

    pub fn real(mut self) -> Self {
        self.real_coefficients = true;
        self
    }

    pub fn exact(mut self) -> Self {
        self.exact_degree = true;
        self
    }

    pub fn terms(mut self, n: usize) -> Self {
        self.max_terms = n.max(1);
        self
    }
}

fn position_monomial<R: Rng + ?Sized>(rng: &mut R, degree: u32) -> Monomial {
    let mut e = [0u16; NUM_VARS];
    for _ in 0..degree {
        e[rng.gen_range(0..4)] += 1;
    }
    Monomial::from_exponents(e)
}

/// Random polynomial in `a, b, c, d`; never zero.
pub fn polynomial<T: Scalar, R: Rng + ?Sized>(rng: &mut R, shape: PolyShape) -> QPolynomial<T> {
    loop {
        let n = rng.gen_range(1..=shape.max_terms);
        let mut p = QPolynomial::zero();
        for t in 0..n {
            let deg = if shape.exact_degree && t == 0 {
                shape.max_position_degree
            } else {
                rng.gen_range(0..=shape.max_position_degree)
            };
            let coef = if shape.real_coefficients {
                Quaternion::real(nonzero_rational(rng))
            } else {
                nonzero_quaternion(rng)
            };
            p.add_term(position_monomial(rng, deg), coef);
        }
        if !p.is_zero() && (!shape.exact_degree || p.position_degree() == shape.max_position_degree)
        {
            return p;
        }
    }
}

/// Polynomial with a few central parameter factors sprinkled in.
pub fn polynomial_with_parameters<T: Scalar, R: Rng + ?Sized>(
    rng: &mut R,
    shape: PolyShape,
) -> QPolynomial<T> {
    let p: QPolynomial<T> = polynomial(rng, shape);
    QPolynomial::from_terms(p.into_terms().map(|(m, q)| {
        if rng.gen_bool(0.3) {
            let v = Var::from_index(rng.gen_range(4..NUM_VARS));
            (m.mul(&Monomial::var(v)), q)
        } else {
            (m, q)
        }
    }))
}
