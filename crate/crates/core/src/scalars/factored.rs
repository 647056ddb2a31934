use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::linform::LinearForm;
use super::point::ParamPoint;
use super::rational::{self, Rational};
use crate::error::{Error, Result};

/// `constant · Π form^exponent` with every form primitive and pairwise
/// non-proportional, so equal products compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawFactored", into = "RawFactored")]
pub struct FactoredScalar {
    r: u32,
    constant: Rational,
    factors: BTreeMap<LinearForm, i32>,
}

#[derive(Serialize, Deserialize)]
struct RawFactor {
    form: LinearForm,
    exponent: i32,
}

#[derive(Serialize, Deserialize)]
struct RawFactored {
    r: u32,
    #[serde(with = "rational::as_string")]
    constant: Rational,
    factors: Vec<RawFactor>,
}

impl TryFrom<RawFactored> for FactoredScalar {
    type Error = Error;
    fn try_from(raw: RawFactored) -> Result<Self> {
        let mut out = FactoredScalar::from_rational(raw.r, raw.constant);
        for f in raw.factors {
            if f.form.r() != raw.r {
                return Err(Error::InvalidInput(format!("factor {} has the wrong r", f.form)));
            }
            if f.exponent == 0 {
                continue;
            }
            out = out.mul(&FactoredScalar::from_form(&f.form).pow(f.exponent)?);
        }
        Ok(out)
    }
}

impl From<FactoredScalar> for RawFactored {
    fn from(s: FactoredScalar) -> Self {
        RawFactored {
            r: s.r,
            constant: s.constant,
            factors: s.factors.into_iter().map(|(form, exponent)| RawFactor { form, exponent }).collect(),
        }
    }
}

impl FactoredScalar {
    pub fn one(r: u32) -> Self {
        Self::from_rational(r, Rational::one())
    }

    pub fn from_rational(r: u32, q: Rational) -> Self {
        FactoredScalar { r, constant: q, factors: BTreeMap::new() }
    }

    pub fn from_form(f: &LinearForm) -> Self {
        let r = f.r();
        match f.normalize() {
            None => Self::from_rational(r, f.constant_term().clone()),
            Some((scale, primitive)) => {
                let mut factors = BTreeMap::new();
                factors.insert(primitive, 1);
                FactoredScalar { r, constant: scale, factors }
            }
        }
    }

    /// (a − b)(a + b).
    pub fn diff_of_squares(a: &LinearForm, b: &LinearForm) -> Self {
        Self::from_form(&(a - b)).mul(&Self::from_form(&(a + b)))
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn constant(&self) -> &Rational {
        &self.constant
    }

    /// Primitive forms with their nonzero exponents, in canonical order.
    pub fn factors(&self) -> impl Iterator<Item = (&LinearForm, i32)> {
        self.factors.iter().map(|(f, &e)| (f, e))
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.constant.is_one() && self.factors.is_empty()
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.r, other.r, "factored scalars disagree on r");
        if self.is_zero() || other.is_zero() {
            return Self::from_rational(self.r, Rational::zero());
        }
        let mut factors = self.factors.clone();
        for (f, &e) in &other.factors {
            let slot = factors.entry(f.clone()).or_insert(0);
            *slot += e;
            if *slot == 0 {
                factors.remove(f);
            }
        }
        FactoredScalar { r: self.r, constant: &self.constant * &other.constant, factors }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(FactoredScalar {
            r: self.r,
            constant: self.constant.recip(),
            factors: self.factors.iter().map(|(f, &e)| (f.clone(), -e)).collect(),
        })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, k: i32) -> Result<Self> {
        if k < 0 {
            return self.inv()?.pow(-k);
        }
        if k == 0 {
            return Ok(Self::one(self.r));
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        let mut constant = Rational::one();
        for _ in 0..k {
            constant *= &self.constant;
        }
        Ok(FactoredScalar {
            r: self.r,
            constant,
            factors: self.factors.iter().map(|(f, &e)| (f.clone(), e * k)).collect(),
        })
    }

    /// Factors with positive exponent that vanish at `p`.
    pub fn vanishing_numerator_factors(&self, p: &ParamPoint) -> Vec<&LinearForm> {
        self.factors.iter().filter(|(f, &e)| e > 0 && f.eval(p).is_zero()).map(|(f, _)| f).collect()
    }

    fn pole_at(&self, p: &ParamPoint) -> Option<&LinearForm> {
        self.factors.iter().find(|(f, &e)| e < 0 && f.eval(p).is_zero()).map(|(f, _)| f)
    }

    pub fn eval(&self, p: &ParamPoint) -> Result<Rational> {
        if let Some(f) = self.pole_at(p) {
            return Err(Error::PoleAtPoint(f.to_string()));
        }
        let mut v = self.constant.clone();
        for (f, &e) in &self.factors {
            let x = f.eval(p);
            if e > 0 {
                for _ in 0..e {
                    v *= &x;
                }
            } else {
                let inv = x.recip();
                for _ in 0..-e {
                    v *= &inv;
                }
            }
        }
        Ok(v)
    }

    /// Total exponent of the factors vanishing at `p`: positive for a zero,
    /// negative for a pole.
    pub fn vanishing_order(&self, p: &ParamPoint) -> i32 {
        if self.is_zero() {
            return i32::MAX;
        }
        self.factors.iter().filter(|(f, _)| f.eval(p).is_zero()).map(|(_, &e)| e).sum()
    }

    /// True iff the value at `p` is zero and no denominator vanishes there.
    pub fn is_zero_at(&self, p: &ParamPoint) -> bool {
        if self.pole_at(p).is_some() {
            return false;
        }
        self.is_zero() || !self.vanishing_numerator_factors(p).is_empty()
    }
}

impl fmt::Display for FactoredScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = Vec::new();
        let neg_one = -Rational::one();
        let prefix_minus = self.constant == neg_one && !self.factors.is_empty();
        if !self.constant.is_one() && !prefix_minus {
            parts.push(self.constant.to_string());
        }
        let mut ordered: Vec<(&LinearForm, i32)> = self.factors().collect();
        ordered.sort_by_key(|&(form, e)| {
            let terms = form.coefficient_vector().iter().filter(|c| !c.is_zero()).count();
            (e < 0, terms, form.clone())
        });
        for (form, e) in ordered {
            let text = form.to_string();
            let atomic = !text.contains(' ');
            let base = if atomic { text } else { format!("({text})") };
            if e == 1 {
                parts.push(base);
            } else {
                parts.push(format!("{base}^{{{e}}}"));
            }
        }
        if parts.is_empty() {
            parts.push("1".into());
        }
        if prefix_minus {
            write!(f, "−")?;
        }
        write!(f, "{}", parts.join(" · "))
    }
}
