//! Claims about individual quaternions, checked on seeded random rational
//! quaternions (and on the group elements where that is exhaustive).
//!
//! Every product goes through both the multiplication table and the real
//! 4×4 matrix representation; a disagreement is an internal error.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::matrix::{to_matrix_rep, RepKind};
use crate::oracle::sample;
use crate::quat::group_elements;
use crate::{Quat, Rational};

const TRIALS: usize = 64;
const SEED: u64 = 0x5eed;

#[derive(Debug, Clone)]
pub enum Law {
    GroupRelation {
        factors: &'static [&'static str],
        value: &'static str,
    },
    GroupClosure,
    ConjAdditive,
    ConjProductUnreversed,
    Triangle,
    NormMultiplicative,
    InverseUnit,
    InverseTwoSided,
    AddCommutative,
    AddAssociative,
    MulNoncommutative,
    MulAssociative,
    Distributive,
}

#[derive(Debug, Clone)]
pub struct LawOutcome {
    pub holds: bool,
    pub engine_value: String,
    pub witness: Option<String>,
}

impl LawOutcome {
    fn held(engine_value: impl Into<String>) -> Self {
        Self {
            holds: true,
            engine_value: engine_value.into(),
            witness: None,
        }
    }
}

fn mul(x: &Quat, y: &Quat) -> Result<Quat> {
    let engine = x * y;
    let oracle = (&to_matrix_rep(x, RepKind::R4) * &to_matrix_rep(y, RepKind::R4))
        .to_quaternion()
        .expect("product of representation matrices stays in the image");
    if engine != oracle {
        return Err(Error::Divergence {
            context: format!("{x} * {y}"),
            engine: engine.to_string(),
            oracle: oracle.to_string(),
        });
    }
    Ok(engine)
}

fn element(name: &str) -> Quat {
    group_elements::<Rational>()
        .into_iter()
        .find(|(n, _)| *n == name)
        .map(|(_, q)| q)
        .unwrap_or_else(|| panic!("`{name}` is not a group element"))
}

fn random_tuples<const N: usize>(nonzero: bool) -> Vec<[Quat; N]> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    (0..TRIALS)
        .map(|_| {
            std::array::from_fn(|_| {
                if nonzero {
                    sample::nonzero_quaternion(&mut rng)
                } else {
                    sample::quaternion(&mut rng)
                }
            })
        })
        .collect()
}

/// Runs `check` on every tuple, stopping at the first counterexample.
fn for_all<const N: usize>(
    tuples: Vec<[Quat; N]>,
    what: &str,
    mut check: impl FnMut(&[Quat; N]) -> Result<bool>,
) -> Result<LawOutcome> {
    let total = tuples.len();
    for t in &tuples {
        if !check(t)? {
            let shown: Vec<String> = t.iter().map(ToString::to_string).collect();
            return Ok(LawOutcome {
                holds: false,
                engine_value: format!("fails for ({})", shown.join(", ")),
                witness: Some(format!("q = ({})", shown.join(", "))),
            });
        }
    }
    Ok(LawOutcome::held(format!("{what} on {total} instances")))
}

pub fn check(law: &Law) -> Result<LawOutcome> {
    match law {
        Law::GroupRelation { factors, value } => {
            let mut acc = Quat::one();
            for f in factors.iter() {
                acc = mul(&acc, &element(f))?;
            }
            Ok(LawOutcome {
                holds: acc == element(value),
                engine_value: acc.to_string(),
                witness: (acc != element(value)).then(|| format!("product is {acc}")),
            })
        }
        Law::GroupClosure => {
            let elems = group_elements::<Rational>();
            let mut rows = Vec::new();
            for (xn, x) in &elems {
                let mut row = Vec::new();
                for (yn, y) in &elems {
                    let p = mul(x, y)?;
                    let Some((pn, _)) = elems.iter().find(|(_, e)| *e == p) else {
                        return Ok(LawOutcome {
                            holds: false,
                            engine_value: format!("{xn} * {yn} = {p}"),
                            witness: Some(format!("{xn} * {yn} = {p} leaves the set")),
                        });
                    };
                    row.push(*pn);
                }
                rows.push(format!("{xn}: {}", row.join(" ")));
            }
            let unit = elems.iter().all(|(_, x)| {
                mul(&Quat::one(), x).ok() == Some(x.clone())
                    && mul(x, &Quat::one()).ok() == Some(x.clone())
            });
            Ok(LawOutcome {
                holds: unit,
                engine_value: rows.join("; "),
                witness: (!unit).then(|| "1 is not a two-sided unit".into()),
            })
        }
        Law::ConjAdditive => for_all(random_tuples::<2>(false), "holds", |[x, y]| {
            Ok((x + y).conj() == &x.conj() + &y.conj())
        }),
        Law::ConjProductUnreversed => {
            let (i, j) = (Quat::i(), Quat::j());
            let mut candidates = vec![[i, j]];
            candidates.extend(random_tuples::<2>(false));
            for [x, y] in &candidates {
                let lhs = mul(x, y)?.conj();
                let rhs = mul(&x.conj(), &y.conj())?;
                if lhs != rhs {
                    let reversed = mul(&y.conj(), &x.conj())?;
                    return Ok(LawOutcome {
                        holds: false,
                        engine_value: format!(
                            "conj(q1 q2) = {lhs}, conj(q1) conj(q2) = {rhs}, conj(q2) conj(q1) = {reversed}"
                        ),
                        witness: Some(format!("q1 = {x}, q2 = {y}")),
                    });
                }
            }
            Ok(LawOutcome::held(format!(
                "holds on {} instances",
                candidates.len()
            )))
        }
        Law::Triangle => for_all(random_tuples::<2>(false), "holds", |[x, y]| {
            // |x+y| <= |x| + |y|  <=>  D <= 0 or D² <= 4|x|²|y|², D = |x+y|² - |x|² - |y|²
            let (nx, ny) = (x.norm_sq(), y.norm_sq());
            let d = (x + y).norm_sq() - nx.clone() - ny.clone();
            let four = Rational::from_integer(4.into());
            Ok(d <= Rational::from_integer(0.into()) || d.clone() * d <= four * nx * ny)
        }),
        Law::NormMultiplicative => for_all(random_tuples::<2>(false), "holds", |[x, y]| {
            let p = mul(x, y)?;
            let det = (&to_matrix_rep(x, RepKind::C2) * &to_matrix_rep(y, RepKind::C2))
                .c2_determinant()
                .expect("complex form");
            if det.re != p.norm_sq() {
                return Err(Error::Divergence {
                    context: format!("|{x} * {y}|^2"),
                    engine: p.norm_sq().to_string(),
                    oracle: det.re.to_string(),
                });
            }
            Ok(p.norm_sq() == x.norm_sq() * y.norm_sq())
        }),
        Law::InverseUnit => for_all(random_tuples::<1>(true), "holds", |[x]| {
            let n = x.norm_sq();
            Ok(mul(x, &x.conj())?.scale(&(Rational::from_integer(1.into()) / n)) == Quat::one())
        }),
        Law::InverseTwoSided => for_all(random_tuples::<1>(true), "holds", |[x]| {
            let inv = x.inverse()?;
            Ok(mul(x, &inv)? == Quat::one() && mul(&inv, x)? == Quat::one())
        }),
        Law::AddCommutative => for_all(random_tuples::<2>(false), "holds", |[x, y]| {
            Ok(x + y == y + x)
        }),
        Law::AddAssociative => for_all(random_tuples::<3>(false), "holds", |[x, y, z]| {
            Ok(&(x + y) + z == x + &(y + z))
        }),
        Law::MulNoncommutative => {
            let (i, j) = (Quat::i(), Quat::j());
            let (ij, ji) = (mul(&i, &j)?, mul(&j, &i)?);
            Ok(LawOutcome {
                holds: ij != ji,
                engine_value: format!("i j = {ij}, j i = {ji}"),
                witness: Some("q1 = i, q2 = j".into()),
            })
        }
        Law::MulAssociative => {
            let elems: Vec<Quat> = group_elements().into_iter().map(|(_, q)| q).collect();
            let mut tuples = Vec::new();
            for x in &elems {
                for y in &elems {
                    for z in &elems {
                        tuples.push([x.clone(), y.clone(), z.clone()]);
                    }
                }
            }
            tuples.extend(random_tuples::<3>(false));
            for_all(tuples, "holds", |[x, y, z]| {
                Ok(mul(&mul(x, y)?, z)? == mul(x, &mul(y, z)?)?)
            })
        }
        Law::Distributive => for_all(random_tuples::<3>(false), "holds", |[x, y, z]| {
            Ok(mul(x, &(y + z))? == &mul(x, y)? + &mul(x, z)?)
        }),
    }
}
