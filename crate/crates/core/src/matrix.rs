//! Real 4×4 and complex 2×2 matrix images of quaternions.
//!
//! The complex embedding sends `a + b i + c j + d k` to
//! `[[a + b𝑖, c + d𝑖], [-c + d𝑖, a - b𝑖]]`; the real one is the matrix of
//! left multiplication on the coordinate vector `(x0, x1, x2, x3)`.

use std::ops::{Add, Mul};

use num_complex::Complex;

use crate::quat::Quaternion;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RepKind {
    R4,
    C2,
}

#[derive(Debug, Clone, PartialEq)]
pub enum MatrixRep<T> {
    R4([[T; 4]; 4]),
    C2([[Complex<T>; 2]; 2]),
}

pub fn to_matrix_rep<T: Scalar>(x: &Quaternion<T>, kind: RepKind) -> MatrixRep<T> {
    match kind {
        RepKind::R4 => {
            let cols = [0, 1, 2, 3].map(|idx| (x * &Quaternion::unit(idx)).into_coords());
            MatrixRep::R4(std::array::from_fn(|r| {
                std::array::from_fn(|c| cols[c][r].clone())
            }))
        }
        RepKind::C2 => {
            let [a, b, c, d] = x.clone().into_coords();
            MatrixRep::C2([
                [
                    Complex::new(a.clone(), b.clone()),
                    Complex::new(c.clone(), d.clone()),
                ],
                [Complex::new(-c, d), Complex::new(a, -b)],
            ])
        }
    }
}

impl<T: Scalar> MatrixRep<T> {
    pub fn kind(&self) -> RepKind {
        match self {
            MatrixRep::R4(_) => RepKind::R4,
            MatrixRep::C2(_) => RepKind::C2,
        }
    }

    pub fn identity(kind: RepKind) -> Self {
        to_matrix_rep(&Quaternion::one(), kind)
    }

    /// Determinant of the complex form; `None` for the real form.
    pub fn c2_determinant(&self) -> Option<Complex<T>> {
        match self {
            MatrixRep::C2(m) => {
                Some(m[0][0].clone() * m[1][1].clone() - m[0][1].clone() * m[1][0].clone())
            }
            MatrixRep::R4(_) => None,
        }
    }

    /// Inverse of the embedding; `None` if the matrix is not in the image.
    pub fn to_quaternion(&self) -> Option<Quaternion<T>> {
        let q = match self {
            MatrixRep::R4(m) => Quaternion::new(
                m[0][0].clone(),
                m[1][0].clone(),
                m[2][0].clone(),
                m[3][0].clone(),
            ),
            MatrixRep::C2(m) => Quaternion::new(
                m[0][0].re.clone(),
                m[0][0].im.clone(),
                m[0][1].re.clone(),
                m[0][1].im.clone(),
            ),
        };
        (to_matrix_rep(&q, self.kind()) == *self).then_some(q)
    }
}

fn mat_mul<E, const N: usize>(l: &[[E; N]; N], r: &[[E; N]; N], zero: E) -> [[E; N]; N]
where
    E: Clone + Add<Output = E> + Mul<Output = E>,
{
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            (0..N).fold(zero.clone(), |acc, t| {
                acc + l[i][t].clone() * r[t][j].clone()
            })
        })
    })
}

fn mat_add<E: Clone + Add<Output = E>, const N: usize>(
    l: &[[E; N]; N],
    r: &[[E; N]; N],
) -> [[E; N]; N] {
    std::array::from_fn(|i| std::array::from_fn(|j| l[i][j].clone() + r[i][j].clone()))
}

impl<T: Scalar> Mul for &MatrixRep<T> {
    type Output = MatrixRep<T>;

    /// Panics when the two representations are of different kinds.
    fn mul(self, rhs: &MatrixRep<T>) -> MatrixRep<T> {
        match (self, rhs) {
            (MatrixRep::R4(l), MatrixRep::R4(r)) => MatrixRep::R4(mat_mul(l, r, T::zero())),
            (MatrixRep::C2(l), MatrixRep::C2(r)) => {
                MatrixRep::C2(mat_mul(l, r, Complex::new(T::zero(), T::zero())))
            }
            _ => panic!("cannot multiply R4 and C2 representations"),
        }
    }
}

impl<T: Scalar> Add for &MatrixRep<T> {
    type Output = MatrixRep<T>;

    fn add(self, rhs: &MatrixRep<T>) -> MatrixRep<T> {
        match (self, rhs) {
            (MatrixRep::R4(l), MatrixRep::R4(r)) => MatrixRep::R4(mat_add(l, r)),
            (MatrixRep::C2(l), MatrixRep::C2(r)) => MatrixRep::C2(mat_add(l, r)),
            _ => panic!("cannot add R4 and C2 representations"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Quat, Rational, Scalar};

    #[test]
    fn unit_maps_to_identity() {
        for kind in [RepKind::R4, RepKind::C2] {
            let id = to_matrix_rep(&Quat::one(), kind);
            assert_eq!(
                &id * &to_matrix_rep(&Quat::from_ints(3, -1, 2, 5), kind),
                to_matrix_rep(&Quat::from_ints(3, -1, 2, 5), kind)
            );
            match id {
                MatrixRep::R4(m) => {
                    for (r, row) in m.iter().enumerate() {
                        for (c, e) in row.iter().enumerate() {
                            assert_eq!(*e, Rational::from_integer(((r == c) as i64).into()));
                        }
                    }
                }
                MatrixRep::C2(m) => {
                    assert_eq!(
                        m[0][0],
                        Complex::new(Rational::from_int(1), Rational::from_int(0))
                    );
                    assert_eq!(
                        m[0][1],
                        Complex::new(Rational::from_int(0), Rational::from_int(0))
                    );
                }
            }
        }
    }

    #[test]
    fn ij_is_k_in_both_representations() {
        for kind in [RepKind::R4, RepKind::C2] {
            let ij = &to_matrix_rep(&Quat::i(), kind) * &to_matrix_rep(&Quat::j(), kind);
            assert_eq!(ij, to_matrix_rep(&Quat::k(), kind));
            assert_eq!(ij.to_quaternion(), Some(Quat::k()));
        }
    }

    #[test]
    fn c2_determinant_is_norm_square() {
        let det = to_matrix_rep(&Quat::from_ints(1, 1, 1, 1), RepKind::C2)
            .c2_determinant()
            .unwrap();
        assert_eq!(
            det,
            Complex::new(Rational::from_int(4), Rational::from_int(0))
        );
        assert!(to_matrix_rep(&Quat::one(), RepKind::R4)
            .c2_determinant()
            .is_none());
    }
}
