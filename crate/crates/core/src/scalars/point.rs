use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::rational::{self, Rational};
use crate::error::{Error, Result};

/// A rational specialization (κ, c₀, d₀, …, d_{r−1}) of the parameters.
///
/// All r values of `d` are stored and must sum to zero. Indices into `d`
/// are read mod r.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawPoint", into = "RawPoint")]
pub struct ParamPoint {
    r: u32,
    kappa: Rational,
    c0: Rational,
    d: Vec<Rational>,
}

#[derive(Serialize, Deserialize)]
struct RawPoint {
    r: u32,
    #[serde(with = "rational::as_string")]
    kappa: Rational,
    #[serde(with = "rational::as_string")]
    c0: Rational,
    #[serde(with = "rational::vec_as_string")]
    d: Vec<Rational>,
}

impl TryFrom<RawPoint> for ParamPoint {
    type Error = Error;
    fn try_from(raw: RawPoint) -> Result<Self> {
        ParamPoint::new(raw.r, raw.kappa, raw.c0, raw.d)
    }
}

impl From<ParamPoint> for RawPoint {
    fn from(p: ParamPoint) -> Self {
        RawPoint { r: p.r, kappa: p.kappa, c0: p.c0, d: p.d }
    }
}

impl ParamPoint {
    pub fn new(r: u32, kappa: Rational, c0: Rational, d: Vec<Rational>) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidInput("r must be positive".into()));
        }
        if d.len() != r as usize {
            return Err(Error::InvalidInput(format!("expected {r} values d_0..d_{}, got {}", r - 1, d.len())));
        }
        let sum: Rational = d.iter().sum();
        if !sum.is_zero() {
            return Err(Error::InvalidInput(format!("d values must sum to zero, got {sum}")));
        }
        Ok(ParamPoint { r, kappa, c0, d })
    }

    /// Builds a point from d₁ … d_{r−1}; d₀ is reconstructed as −Σ.
    pub fn from_free_d(r: u32, kappa: Rational, c0: Rational, free_d: &[Rational]) -> Result<Self> {
        if free_d.len() + 1 != r as usize {
            return Err(Error::InvalidInput(format!("expected {} free d values, got {}", r - 1, free_d.len())));
        }
        let d0: Rational = -free_d.iter().sum::<Rational>();
        let d = std::iter::once(d0).chain(free_d.iter().cloned()).collect();
        ParamPoint::new(r, kappa, c0, d)
    }

    /// κ = 1 and all d = 0.
    pub fn with_c0(r: u32, c0: Rational) -> Self {
        ParamPoint { r, kappa: Rational::one(), c0, d: vec![Rational::zero(); r as usize] }
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn kappa(&self) -> &Rational {
        &self.kappa
    }

    pub fn c0(&self) -> &Rational {
        &self.c0
    }

    /// d_j with j read mod r.
    pub fn d(&self, j: i64) -> &Rational {
        &self.d[j.rem_euclid(self.r as i64) as usize]
    }

    pub fn d_values(&self) -> &[Rational] {
        &self.d
    }

    pub fn kappa_is_one(&self) -> bool {
        self.kappa.is_one()
    }

    /// Fails with [`Error::KappaNotOne`] unless κ = 1.
    pub fn require_kappa_one(&self) -> Result<()> {
        if self.kappa_is_one() {
            Ok(())
        } else {
            Err(Error::KappaNotOne)
        }
    }

    /// Random point with small-height rationals; κ is random too unless
    /// `kappa_one` is set.
    pub fn random<R: rand::Rng + ?Sized>(r: u32, kappa_one: bool, rng: &mut R) -> Self {
        let sample = |rng: &mut R| -> Rational {
            let num: i64 = rng.gen_range(-97..=97);
            let den: i64 = rng.gen_range(7..=113);
            let q = rational::rat(num, den);
            if q.is_zero() {
                rational::rat(1, den)
            } else {
                q
            }
        };
        let kappa = if kappa_one {
            Rational::one()
        } else {
            let k = sample(rng);
            if k < Rational::zero() {
                -k
            } else {
                k
            }
        };
        let c0 = sample(rng);
        let free: Vec<Rational> = (1..r).map(|_| sample(rng)).collect();
        ParamPoint::from_free_d(r, kappa, c0, &free).expect("sum-zero by construction")
    }
}
