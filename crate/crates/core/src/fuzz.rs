//! Randomized cross-checks of the star product against the oracle, plus the
//! structural invariants every star product must satisfy.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::oracle::sample::{self, PolyShape};
use crate::oracle::{bracket_oracle, star_oracle};
use crate::poly::Var;
use crate::star::{
    poisson_bracket, star, star_order_term, BracketPair, NuMode, StarConfig, ThetaSpec,
};
use crate::{QPoly, Rational, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FuzzConfig {
    pub trials: usize,
    pub seed: u64,
    pub max_degree: u32,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        Self {
            trials: 200,
            seed: 0,
            max_degree: 4,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Property {
    /// Engine and oracle star products agree under formal parameters.
    OracleFormal,
    /// Engine and oracle agree with numeric ν, Θ and an order cap.
    OracleNumeric,
    /// Engine and oracle brackets agree for every pair.
    BracketOracle,
    /// The ν⁰ coefficient is the point product.
    PointProduct,
    /// The ν¹ coefficient is half the Θ-weighted bracket sum.
    FirstOrder,
    /// The expansion stops at the smaller position degree.
    Termination,
    /// `∂(f g) = ∂f g + f ∂g`, and for the bracket, with `g` kept between
    /// the derivatives: `{f g, h} = f {g, h} + ∂_m f g ∂_n h - ∂_n f g ∂_m h`.
    Leibniz,
}

impl Property {
    pub const ALL: [Property; 7] = [
        Property::OracleFormal,
        Property::OracleNumeric,
        Property::BracketOracle,
        Property::PointProduct,
        Property::FirstOrder,
        Property::Termination,
        Property::Leibniz,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::OracleFormal => "star-vs-oracle (formal)",
            Property::OracleNumeric => "star-vs-oracle (numeric)",
            Property::BracketOracle => "bracket-vs-oracle",
            Property::PointProduct => "nu^0 is the point product",
            Property::FirstOrder => "nu^1 is the bracket sum",
            Property::Termination => "nu-degree bound",
            Property::Leibniz => "Leibniz rule",
        }
    }
}

/// One random instance: three polynomials and a numeric configuration.
#[derive(Debug, Clone)]
pub struct Instance {
    pub f: QPoly,
    pub g: QPoly,
    pub h: QPoly,
    pub numeric: StarConfig<Rational>,
}

fn half() -> Rational {
    Rational::ratio(1, 2)
}

pub fn first_order_bracket_sum(f: &QPoly, g: &QPoly) -> QPoly {
    BracketPair::ALL
        .into_iter()
        .fold(QPoly::zero(), |acc, p| {
            &acc + &(&QPoly::var(p.theta()) * &poisson_bracket(f, g, p))
        })
        .scale(&half())
}

pub fn holds(p: Property, x: &Instance) -> bool {
    let formal = StarConfig::formal();
    let (f, g, h) = (&x.f, &x.g, &x.h);
    match p {
        Property::OracleFormal => star(f, g, &formal) == star_oracle(f, g, &formal),
        Property::OracleNumeric => star(f, g, &x.numeric) == star_oracle(f, g, &x.numeric),
        Property::BracketOracle => BracketPair::ALL
            .into_iter()
            .all(|bp| poisson_bracket(f, g, bp) == bracket_oracle(f, g, bp)),
        Property::PointProduct => star(f, g, &formal).nu_coefficient(0) == f * g,
        Property::FirstOrder => {
            star(f, g, &formal).nu_coefficient(1) == first_order_bracket_sum(f, g)
                && star_order_term(f, g, 1, &formal) == first_order_bracket_sum(f, g)
        }
        Property::Termination => {
            let bound = f.position_degree().min(g.position_degree());
            star(f, g, &formal).degree_in(Var::Nu) as u32 <= bound
        }
        Property::Leibniz => {
            let d = |p: &QPoly, v: Var| p.partial(v).expect("position variable");
            let fg = f * g;
            Var::POSITION
                .into_iter()
                .all(|v| d(&fg, v) == &(&d(f, v) * g) + &(f * &d(g, v)))
                && BracketPair::ALL.into_iter().all(|bp| {
                    let (m, n) = bp.vars();
                    let sandwich = &(&(&d(f, m) * g) * &d(h, n)) - &(&(&d(f, n) * g) * &d(h, m));
                    poisson_bracket(&fg, h, bp) == &(f * &poisson_bracket(g, h, bp)) + &sandwich
                })
        }
    }
}

fn instance(rng: &mut ChaCha8Rng, max_degree: u32) -> Instance {
    let shape = PolyShape::new(max_degree);
    let numeric = StarConfig {
        theta: ThetaSpec::Numeric(std::array::from_fn(|_| sample::rational(rng))),
        nu: NuMode::Numeric(sample::rational(rng)),
        order_cap: rng.gen_bool(0.5).then(|| rng.gen_range(0..=max_degree)),
    };
    Instance {
        f: sample::polynomial(rng, shape),
        g: sample::polynomial(rng, shape),
        h: sample::polynomial(rng, shape),
        numeric,
    }
}

/// Trial `n` draws from its own ChaCha stream, so any trial can be replayed
/// without generating the ones before it.
pub fn trial_instance(cfg: &FuzzConfig, n: usize) -> Instance {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(n as u64);
    instance(&mut rng, cfg.max_degree)
}

#[derive(Debug, Clone)]
pub struct Counterexample {
    pub property: Property,
    pub trial: usize,
    pub instance: Instance,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let x = &self.instance;
        writeln!(out, "property: {}", self.property.name())?;
        writeln!(out, "trial:    {}", self.trial)?;
        writeln!(out, "f = {}", x.f)?;
        writeln!(out, "g = {}", x.g)?;
        writeln!(out, "h = {}", x.h)?;
        if let (ThetaSpec::Numeric(t), NuMode::Numeric(nu)) = (&x.numeric.theta, &x.numeric.nu) {
            let shown: Vec<String> = BracketPair::ALL
                .iter()
                .zip(t)
                .map(|(p, v)| format!("{}={v}", p.name()))
                .collect();
            writeln!(out, "theta:    {}", shown.join(","))?;
            writeln!(out, "nu:       {nu}")?;
        }
        if let Some(cap) = x.numeric.order_cap {
            writeln!(out, "cap:      {cap}")?;
        }
        Ok(())
    }
}

/// Greedily drops terms from `f`, `g` and `h` while the property still fails.
pub fn minimize(p: Property, mut x: Instance) -> Instance {
    loop {
        let mut shrunk = false;
        for slot in 0..3 {
            let poly = match slot {
                0 => &x.f,
                1 => &x.g,
                _ => &x.h,
            };
            let terms: Vec<_> = poly.terms().map(|(m, q)| (m.clone(), q.clone())).collect();
            if terms.len() <= 1 {
                continue;
            }
            for skip in 0..terms.len() {
                let smaller = QPoly::from_terms(
                    terms
                        .iter()
                        .enumerate()
                        .filter(|(t, _)| *t != skip)
                        .map(|(_, mq)| mq.clone()),
                );
                let mut candidate = x.clone();
                match slot {
                    0 => candidate.f = smaller,
                    1 => candidate.g = smaller,
                    _ => candidate.h = smaller,
                }
                if !holds(p, &candidate) {
                    x = candidate;
                    shrunk = true;
                    break;
                }
            }
        }
        if !shrunk {
            return x;
        }
    }
}

#[derive(Debug, Clone)]
pub struct FuzzOutcome {
    pub config: FuzzConfig,
    pub checks: usize,
    pub failure: Option<Counterexample>,
}

impl FuzzOutcome {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

fn run_trial(cfg: &FuzzConfig, n: usize) -> Option<Counterexample> {
    let x = trial_instance(cfg, n);
    Property::ALL
        .into_iter()
        .find(|&p| !holds(p, &x))
        .map(|p| Counterexample {
            property: p,
            trial: n,
            instance: minimize(p, x),
        })
}

/// Runs all trials across worker threads; the reported failure is the one
/// with the lowest trial index, so the verdict does not depend on scheduling.
pub fn run(cfg: FuzzConfig) -> FuzzOutcome {
    let workers = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
        .clamp(1, cfg.trials.max(1));
    let failure = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                scope.spawn(move || {
                    (w..cfg.trials)
                        .step_by(workers)
                        .find_map(|n| run_trial(&cfg, n))
                })
            })
            .collect();
        handles
            .into_iter()
            .filter_map(|h| h.join().expect("fuzz worker panicked"))
            .min_by_key(|c| c.trial)
    });
    FuzzOutcome {
        config: cfg,
        checks: cfg.trials * Property::ALL.len(),
        failure,
    }
}
