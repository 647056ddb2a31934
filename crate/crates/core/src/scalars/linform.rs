use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::point::ParamPoint;
use super::rational::{self, int, Rational};
use crate::error::{Error, Result};

/// An affine-linear expression `const + a·κ + b·c₀ + Σ_{j≥1} e_j·d_j`.
///
/// d₀ is never stored: it is eliminated through d₀ = −(d₁ + ⋯ + d_{r−1}),
/// so two forms are equal iff their stored coefficients agree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawForm", into = "RawForm")]
pub struct LinearForm {
    kappa: Rational,
    c0: Rational,
    d: Vec<Rational>,
    constant: Rational,
}

#[derive(Serialize, Deserialize)]
struct RawForm {
    #[serde(rename = "const", with = "rational::as_string")]
    constant: Rational,
    #[serde(with = "rational::as_string")]
    kappa: Rational,
    #[serde(with = "rational::as_string")]
    c0: Rational,
    #[serde(with = "rational::vec_as_string")]
    d: Vec<Rational>,
}

impl TryFrom<RawForm> for LinearForm {
    type Error = Error;
    fn try_from(raw: RawForm) -> Result<Self> {
        Ok(LinearForm { kappa: raw.kappa, c0: raw.c0, d: raw.d, constant: raw.constant })
    }
}

impl From<LinearForm> for RawForm {
    fn from(f: LinearForm) -> Self {
        RawForm { constant: f.constant, kappa: f.kappa, c0: f.c0, d: f.d }
    }
}

impl LinearForm {
    pub fn zero(r: u32) -> Self {
        LinearForm {
            kappa: Rational::zero(),
            c0: Rational::zero(),
            d: vec![Rational::zero(); r as usize - 1],
            constant: Rational::zero(),
        }
    }

    pub fn constant(r: u32, q: Rational) -> Self {
        let mut f = Self::zero(r);
        f.constant = q;
        f
    }

    pub fn kappa(r: u32) -> Self {
        let mut f = Self::zero(r);
        f.kappa = Rational::one();
        f
    }

    pub fn c0(r: u32) -> Self {
        let mut f = Self::zero(r);
        f.c0 = Rational::one();
        f
    }

    /// The parameter d_j, index read mod r.
    pub fn d(r: u32, j: i64) -> Self {
        let mut f = Self::zero(r);
        let j = j.rem_euclid(r as i64) as usize;
        if j == 0 {
            for c in f.d.iter_mut() {
                *c = int(-1);
            }
        } else {
            f.d[j - 1] = Rational::one();
        }
        f
    }

    /// d_a − d_b, indices read mod r.
    pub fn d_diff(r: u32, a: i64, b: i64) -> Self {
        Self::d(r, a) - Self::d(r, b)
    }

    /// Builds `const + kappa·κ + c0·c₀` with no d part.
    pub fn from_parts(r: u32, constant: Rational, kappa: Rational, c0: Rational) -> Self {
        let mut f = Self::zero(r);
        f.constant = constant;
        f.kappa = kappa;
        f.c0 = c0;
        f
    }

    pub fn r(&self) -> u32 {
        self.d.len() as u32 + 1
    }

    pub fn kappa_coeff(&self) -> &Rational {
        &self.kappa
    }

    pub fn c0_coeff(&self) -> &Rational {
        &self.c0
    }

    /// Coefficients of d₁ … d_{r−1}.
    pub fn d_coeffs(&self) -> &[Rational] {
        &self.d
    }

    pub fn constant_term(&self) -> &Rational {
        &self.constant
    }

    pub fn is_zero(&self) -> bool {
        self.is_constant() && self.constant.is_zero()
    }

    /// True when no parameter appears.
    pub fn is_constant(&self) -> bool {
        self.kappa.is_zero() && self.c0.is_zero() && self.d.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        LinearForm {
            kappa: &self.kappa * q,
            c0: &self.c0 * q,
            d: self.d.iter().map(|c| c * q).collect(),
            constant: &self.constant * q,
        }
    }

    /// Coefficients in the order (κ, c₀, d₁, …, d_{r−1}, const).
    pub fn coefficient_vector(&self) -> Vec<&Rational> {
        std::iter::once(&self.kappa)
            .chain(std::iter::once(&self.c0))
            .chain(self.d.iter())
            .chain(std::iter::once(&self.constant))
            .collect()
    }

    /// Substitutes the point. Panics if the point has a different r.
    pub fn eval(&self, p: &ParamPoint) -> Rational {
        assert_eq!(self.r(), p.r(), "linear form and point disagree on r");
        let mut v = &self.constant + &self.kappa * p.kappa() + &self.c0 * p.c0();
        for (j, c) in self.d.iter().enumerate() {
            if !c.is_zero() {
                v += c * p.d(j as i64 + 1);
            }
        }
        v
    }

    /// Splits the form as `scale · primitive`, where `primitive` has coprime
    /// integer coefficients and a positive first nonzero coefficient in the
    /// (κ, c₀, d₁, …, const) order. Returns `None` for constant forms.
    pub fn normalize(&self) -> Option<(Rational, LinearForm)> {
        if self.is_constant() {
            return None;
        }
        use num_integer::Integer;
        let coeffs = self.coefficient_vector();
        let lcm = rational::lcm_of_denominators(coeffs.iter().copied());
        let lcm_q = Rational::from_integer(lcm.clone());
        let gcd = coeffs.iter().map(|c| (*c * &lcm_q).to_integer()).fold(num_bigint::BigInt::zero(), |g, n| g.gcd(&n));
        let first_negative = coeffs.iter().find(|c| !c.is_zero()).is_some_and(|c| c.is_negative());
        let mut scale = Rational::new(gcd, lcm);
        if first_negative {
            scale = -scale;
        }
        let primitive = self.scale(&scale.recip());
        Some((scale, primitive))
    }
}

fn subscript(k: usize) -> String {
    const DIGITS: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
    k.to_string().chars().map(|c| DIGITS[c.to_digit(10).unwrap() as usize]).collect()
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<(Rational, String)> = Vec::new();
        terms.push((self.kappa.clone(), "κ".into()));
        terms.push((self.c0.clone(), "c₀".into()));
        for (j, c) in self.d.iter().enumerate() {
            terms.push((c.clone(), format!("d{}", subscript(j + 1))));
        }
        terms.push((self.constant.clone(), String::new()));
        let mut first = true;
        for (c, name) in terms {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "−")?;
                }
            } else if c.is_negative() {
                write!(f, " − ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let abs = c.abs();
            if name.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{name}")?;
            } else {
                write!(f, "{abs}{name}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl<'a> Add<&'a LinearForm> for &'a LinearForm {
    type Output = LinearForm;
    fn add(self, rhs: &LinearForm) -> LinearForm {
        assert_eq!(self.r(), rhs.r());
        LinearForm {
            kappa: &self.kappa + &rhs.kappa,
            c0: &self.c0 + &rhs.c0,
            d: self.d.iter().zip(&rhs.d).map(|(a, b)| a + b).collect(),
            constant: &self.constant + &rhs.constant,
        }
    }
}

impl<'a> Sub<&'a LinearForm> for &'a LinearForm {
    type Output = LinearForm;
    fn sub(self, rhs: &LinearForm) -> LinearForm {
        self + &(-rhs)
    }
}

impl Neg for &LinearForm {
    type Output = LinearForm;
    fn neg(self) -> LinearForm {
        self.scale(&int(-1))
    }
}

impl Neg for LinearForm {
    type Output = LinearForm;
    fn neg(self) -> LinearForm {
        -&self
    }
}

impl Add for LinearForm {
    type Output = LinearForm;
    fn add(self, rhs: LinearForm) -> LinearForm {
        &self + &rhs
    }
}

impl Sub for LinearForm {
    type Output = LinearForm;
    fn sub(self, rhs: LinearForm) -> LinearForm {
        &self - &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rational::rat;
    use proptest::prelude::*;

    #[test]
    fn kappa_minus_c0() {
        let f = LinearForm::kappa(1) - LinearForm::c0(1);
        let p = ParamPoint::with_c0(1, rat(1, 3));
        assert_eq!(f.eval(&p), rat(2, 3));
        assert_eq!(f.to_string(), "κ − c₀");
    }

    #[test]
    fn d0_is_eliminated() {
        let f = LinearForm::d_diff(2, 0, 1);
        let p = ParamPoint::new(2, rat(1, 1), rat(1, 7), vec![rat(1, 2), rat(-1, 2)]).unwrap();
        assert_eq!(f.eval(&p), rat(1, 1));
        assert_eq!(f.d_coeffs(), &[rat(-2, 1)]);
    }

    #[test]
    fn r5_example_point() {
        let p = ParamPoint::from_free_d(5, rat(1, 1), rat(2, 7), &[rat(-17, 7), rat(-5, 7), rat(12, 7), rat(-6, 7)])
            .unwrap();
        let f = &LinearForm::d_diff(5, 1, 3) + &LinearForm::c0(5).scale(&rat(10, 1));
        assert_eq!(f.eval(&p), rat(-9, 7));
    }

    #[test]
    fn normalization() {
        let f = LinearForm::from_parts(1, rat(0, 1), rat(-2, 3), rat(4, 3));
        let (s, n) = f.normalize().unwrap();
        assert_eq!(s, rat(-2, 3));
        assert_eq!(n, LinearForm::from_parts(1, rat(0, 1), rat(1, 1), rat(-2, 1)));
        assert!(LinearForm::constant(3, rat(5, 1)).normalize().is_none());
    }

    #[test]
    fn json_shape() {
        let f = LinearForm::d_diff(3, 1, 2);
        let v = serde_json::to_value(&f).unwrap();
        assert_eq!(v["d"], serde_json::json!(["1", "-1"]));
        assert_eq!(v["const"], "0");
        assert_eq!(serde_json::from_value::<LinearForm>(v).unwrap(), f);
    }

    fn small() -> impl Strategy<Value = Rational> {
        (-50i64..50, 1i64..20).prop_map(|(n, d)| rat(n, d))
    }

    fn form(r: u32) -> impl Strategy<Value = LinearForm> {
        (small(), small(), small(), proptest::collection::vec(small(), r as usize - 1)).prop_map(
            move |(c, k, c0, d)| {
                let mut f = LinearForm::from_parts(r, c, k, c0);
                f.d = d;
                f
            },
        )
    }

    fn point(r: u32) -> impl Strategy<Value = ParamPoint> {
        (small(), small(), proptest::collection::vec(small(), r as usize - 1))
            .prop_map(move |(k, c0, d)| ParamPoint::from_free_d(r, k, c0, &d).unwrap())
    }

    proptest! {
        #[test]
        fn eval_is_linear(f in form(3), g in form(3), s in small(), p in point(3)) {
            prop_assert_eq!((&f + &g).eval(&p), f.eval(&p) + g.eval(&p));
            prop_assert_eq!(f.scale(&s).eval(&p), f.eval(&p) * &s);
        }

        #[test]
        fn normalize_recombines(f in form(4)) {
            if let Some((s, n)) = f.normalize() {
                prop_assert_eq!(n.scale(&s), f.clone());
                prop_assert_eq!(n.normalize().unwrap().0, Rational::one());
            }
        }
    }
}
