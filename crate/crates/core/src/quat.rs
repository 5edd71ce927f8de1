//! The quaternion division ring over a [`Scalar`] field.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Names of the basis units, indexed like [`Quaternion::coords`].
pub const UNIT_NAMES: [&str; 4] = ["1", "i", "j", "k"];

/// `x0 + x1 i + x2 j + x3 k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Quaternion<T> {
    pub x0: T,
    pub x1: T,
    pub x2: T,
    pub x3: T,
}

/// Multiplication table of the basis: `unit[r] * unit[c] = sign * unit[idx]`.
const BASIS_TABLE: [[(i8, usize); 4]; 4] = [
    [(1, 0), (1, 1), (1, 2), (1, 3)],
    [(1, 1), (-1, 0), (1, 3), (-1, 2)],
    [(1, 2), (-1, 3), (-1, 0), (1, 1)],
    [(1, 3), (1, 2), (-1, 1), (-1, 0)],
];

impl<T: Scalar> Quaternion<T> {
    pub fn new(x0: T, x1: T, x2: T, x3: T) -> Self {
        Self { x0, x1, x2, x3 }
    }

    pub fn from_coords([x0, x1, x2, x3]: [T; 4]) -> Self {
        Self { x0, x1, x2, x3 }
    }

    pub fn from_ints(x0: i64, x1: i64, x2: i64, x3: i64) -> Self {
        Self::new(
            T::from_int(x0),
            T::from_int(x1),
            T::from_int(x2),
            T::from_int(x3),
        )
    }

    pub fn zero() -> Self {
        Self::real(T::zero())
    }

    pub fn one() -> Self {
        Self::real(T::one())
    }

    pub fn real(x0: T) -> Self {
        Self::new(x0, T::zero(), T::zero(), T::zero())
    }

    pub fn i() -> Self {
        Self::unit(1)
    }

    pub fn j() -> Self {
        Self::unit(2)
    }

    pub fn k() -> Self {
        Self::unit(3)
    }

    /// Basis element `1, i, j, k` for `idx = 0..4`.
    pub fn unit(idx: usize) -> Self {
        let mut c = [T::zero(), T::zero(), T::zero(), T::zero()];
        c[idx] = T::one();
        Self::from_coords(c)
    }

    pub fn coords(&self) -> [&T; 4] {
        [&self.x0, &self.x1, &self.x2, &self.x3]
    }

    pub fn into_coords(self) -> [T; 4] {
        [self.x0, self.x1, self.x2, self.x3]
    }

    pub fn is_zero(&self) -> bool {
        self.coords().iter().all(|c| c.is_zero())
    }

    /// True when all imaginary components vanish.
    pub fn is_real(&self) -> bool {
        self.x1.is_zero() && self.x2.is_zero() && self.x3.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(
            self.x0.clone(),
            -self.x1.clone(),
            -self.x2.clone(),
            -self.x3.clone(),
        )
    }

    pub fn norm_sq(&self) -> T {
        self.coords()
            .iter()
            .fold(T::zero(), |acc, c| acc + (*c).clone() * (*c).clone())
    }

    pub fn inverse(&self) -> Result<Self> {
        let n = self.norm_sq();
        if n.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(self.conj().scale(&(T::one() / n)))
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &Self) -> Self {
        self * other - other * self
    }

    pub fn scale(&self, s: &T) -> Self {
        Self::new(
            self.x0.clone() * s.clone(),
            self.x1.clone() * s.clone(),
            self.x2.clone() * s.clone(),
            self.x3.clone() * s.clone(),
        )
    }

    /// Nonzero components as `(unit index, coefficient)`.
    pub fn nonzero_components(&self) -> Vec<(usize, &T)> {
        self.coords()
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }
}

impl<T: Scalar> Mul for &Quaternion<T> {
    type Output = Quaternion<T>;

    fn mul(self, rhs: &Quaternion<T>) -> Quaternion<T> {
        let l = self.coords();
        let r = rhs.coords();
        let mut out = [T::zero(), T::zero(), T::zero(), T::zero()];
        for (li, lc) in l.iter().enumerate() {
            if lc.is_zero() {
                continue;
            }
            for (ri, rc) in r.iter().enumerate() {
                if rc.is_zero() {
                    continue;
                }
                let (sign, idx) = BASIS_TABLE[li][ri];
                let p = (*lc).clone() * (*rc).clone();
                let slot = std::mem::replace(&mut out[idx], T::zero());
                out[idx] = if sign > 0 { slot + p } else { slot - p };
            }
        }
        Quaternion::from_coords(out)
    }
}

impl<T: Scalar> Mul for Quaternion<T> {
    type Output = Quaternion<T>;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<T: Scalar> Add for &Quaternion<T> {
    type Output = Quaternion<T>;
    fn add(self, rhs: &Quaternion<T>) -> Quaternion<T> {
        Quaternion::new(
            self.x0.clone() + rhs.x0.clone(),
            self.x1.clone() + rhs.x1.clone(),
            self.x2.clone() + rhs.x2.clone(),
            self.x3.clone() + rhs.x3.clone(),
        )
    }
}

impl<T: Scalar> Add for Quaternion<T> {
    type Output = Quaternion<T>;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<T: Scalar> Sub for &Quaternion<T> {
    type Output = Quaternion<T>;
    fn sub(self, rhs: &Quaternion<T>) -> Quaternion<T> {
        self + &(-rhs)
    }
}

impl<T: Scalar> Sub for Quaternion<T> {
    type Output = Quaternion<T>;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<T: Scalar> Neg for &Quaternion<T> {
    type Output = Quaternion<T>;
    fn neg(self) -> Quaternion<T> {
        Quaternion::new(
            -self.x0.clone(),
            -self.x1.clone(),
            -self.x2.clone(),
            -self.x3.clone(),
        )
    }
}

impl<T: Scalar> Neg for Quaternion<T> {
    type Output = Quaternion<T>;
    fn neg(self) -> Self {
        -&self
    }
}

impl<T: Scalar> AddAssign<&Quaternion<T>> for Quaternion<T> {
    fn add_assign(&mut self, rhs: &Quaternion<T>) {
        *self = &*self + rhs;
    }
}

impl<T: Scalar> SubAssign<&Quaternion<T>> for Quaternion<T> {
    fn sub_assign(&mut self, rhs: &Quaternion<T>) {
        *self = &*self - rhs;
    }
}

/// Writes `±<scalar> <unit>` pieces joined by ` + ` / ` - `, no parentheses.
/// A unit coefficient of magnitude one on `i`, `j`, `k` prints as the bare unit.
pub(crate) fn write_components<T: Scalar>(
    f: &mut fmt::Formatter<'_>,
    q: &Quaternion<T>,
) -> fmt::Result {
    let parts = q.nonzero_components();
    if parts.is_empty() {
        return f.write_str("0");
    }
    for (n, (idx, c)) in parts.into_iter().enumerate() {
        let neg = c.is_negative();
        match (n, neg) {
            (0, true) => f.write_str("-")?,
            (0, false) => {}
            (_, true) => f.write_str(" - ")?,
            (_, false) => f.write_str(" + ")?,
        }
        let mag = c.abs();
        if idx == 0 {
            write!(f, "{mag}")?;
        } else if mag.is_one() {
            f.write_str(UNIT_NAMES[idx])?;
        } else {
            write!(f, "{mag} {}", UNIT_NAMES[idx])?;
        }
    }
    Ok(())
}

/// Canonical text: `2 i`, `-3/2`, `(1 + i - 2 k)`; parenthesized when more
/// than one component is nonzero, `0` for the zero quaternion.
impl<T: Scalar> fmt::Display for Quaternion<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.nonzero_components().len() > 1 {
            f.write_str("(")?;
            write_components(f, self)?;
            f.write_str(")")
        } else {
            write_components(f, self)
        }
    }
}

/// The eight elements `±1, ±i, ±j, ±k` of the quaternion group, with names.
pub fn group_elements<T: Scalar>() -> Vec<(&'static str, Quaternion<T>)> {
    let names = [("1", "-1"), ("i", "-i"), ("j", "-j"), ("k", "-k")];
    let mut out = Vec::with_capacity(8);
    for (idx, (pos, neg)) in names.into_iter().enumerate() {
        out.push((pos, Quaternion::unit(idx)));
        out.push((neg, -Quaternion::unit(idx)));
    }
    out
}
