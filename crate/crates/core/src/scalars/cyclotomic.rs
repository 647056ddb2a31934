//! The cyclotomic field Q(ζ) with ζ = e^{2πi/r}, stored as Q[x]/(Φ_r(x)).

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::{Mutex, OnceLock};

use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::rational::{int, Rational};
use crate::error::{Error, Result};

/// Static data for Q(ζ_r): the modulus Φ_r and the reductions of x^k.
#[derive(Debug)]
pub struct CyclotomicField {
    order: u32,
    modulus: Vec<i64>,
    /// `powers[k]` is x^k reduced mod Φ_r, for 0 ≤ k < max(r, 2·degree).
    powers: Vec<Vec<Rational>>,
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    // den is monic; both are coefficient lists, lowest degree first
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0i64; num.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        for (j, &dj) in den.iter().enumerate() {
            rem[k + j] -= c * dj;
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    quot
}

fn cyclotomic_polynomial(r: u32, cache: &mut HashMap<u32, Vec<i64>>) -> Vec<i64> {
    if let Some(p) = cache.get(&r) {
        return p.clone();
    }
    let mut num = vec![0i64; r as usize + 1];
    num[0] = -1;
    num[r as usize] = 1;
    for d in 1..r {
        if r.is_multiple_of(d) {
            let phi_d = cyclotomic_polynomial(d, cache);
            num = poly_div_exact(&num, &phi_d);
        }
    }
    cache.insert(r, num.clone());
    num
}

impl CyclotomicField {
    /// Returns the (process-wide, leaked) field data for order `r`.
    pub fn get(r: u32) -> &'static CyclotomicField {
        assert!(r >= 1, "cyclotomic order must be positive");
        static FIELDS: OnceLock<Mutex<HashMap<u32, &'static CyclotomicField>>> = OnceLock::new();
        let mut fields = FIELDS.get_or_init(Default::default).lock().unwrap();
        fields.entry(r).or_insert_with(|| Box::leak(Box::new(CyclotomicField::build(r))))
    }

    fn build(r: u32) -> Self {
        let modulus = cyclotomic_polynomial(r, &mut HashMap::new());
        let degree = modulus.len() - 1;
        let count = (r as usize).max(2 * degree);
        let mut powers: Vec<Vec<Rational>> = Vec::with_capacity(count);
        let mut current = vec![Rational::zero(); degree];
        current[0] = Rational::one();
        for _ in 0..count {
            powers.push(current.clone());
            // multiply by x and reduce with x^degree = -Σ m_k x^k
            let top = current[degree - 1].clone();
            let mut next = vec![Rational::zero(); degree];
            for k in (1..degree).rev() {
                next[k] = current[k - 1].clone();
            }
            for k in 0..degree {
                next[k] -= &top * int(modulus[k]);
            }
            current = next;
        }
        CyclotomicField { order: r, modulus, powers }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Degree φ(r) of the field over Q.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    /// Coefficients of Φ_r, lowest degree first.
    pub fn modulus(&self) -> &[i64] {
        &self.modulus
    }

    fn reduce(&self, poly: &[Rational]) -> Vec<Rational> {
        let degree = self.degree();
        let mut out: Vec<Rational> = vec![Rational::zero(); degree];
        for (k, c) in poly.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k < degree {
                out[k] += c;
            } else {
                for (o, p) in out.iter_mut().zip(&self.powers[k]) {
                    if !p.is_zero() {
                        *o += c * p;
                    }
                }
            }
        }
        out
    }
}

/// An element of Q(ζ_r).
#[derive(Clone)]
pub struct Cyclotomic {
    field: &'static CyclotomicField,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    pub fn zero(r: u32) -> Self {
        let field = CyclotomicField::get(r);
        Cyclotomic { field, coeffs: vec![Rational::zero(); field.degree()] }
    }

    pub fn one(r: u32) -> Self {
        Self::from_rational(r, Rational::one())
    }

    pub fn from_rational(r: u32, q: Rational) -> Self {
        let mut z = Self::zero(r);
        z.coeffs[0] = q;
        z
    }

    /// ζ^k for any integer k (read mod r).
    pub fn zeta_pow(r: u32, k: i64) -> Self {
        let field = CyclotomicField::get(r);
        let k = k.rem_euclid(r as i64) as usize;
        Cyclotomic { field, coeffs: field.powers[k].clone() }
    }

    /// Builds an element from an arbitrary polynomial in ζ (lowest degree first).
    pub fn from_poly(r: u32, poly: &[Rational]) -> Self {
        let field = CyclotomicField::get(r);
        let mut wrapped = vec![Rational::zero(); field.powers.len().max(poly.len())];
        for (k, c) in poly.iter().enumerate() {
            wrapped[k % r as usize] += c;
        }
        Cyclotomic { field, coeffs: field.reduce(&wrapped) }
    }

    pub fn order(&self) -> u32 {
        self.field.order
    }

    /// Coordinates in the power basis 1, ζ, …, ζ^{φ(r)−1}.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, if the element lies in Q.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    /// Complex conjugation ζ ↦ ζ^{r−1}.
    pub fn conj(&self) -> Self {
        let r = self.order() as usize;
        if r <= 2 {
            return self.clone();
        }
        let mut poly = vec![Rational::zero(); r];
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                poly[(r - k) % r] += c;
            }
        }
        Cyclotomic { field: self.field, coeffs: self.field.reduce(&poly) }
    }

    pub fn is_real(&self) -> bool {
        self == &self.conj()
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Cyclotomic { field: self.field, coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }

    /// Multiplicative inverse, by the extended Euclidean algorithm against Φ_r.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(Self::from_rational(self.order(), q.recip()));
        }
        let modulus: Vec<Rational> = self.field.modulus.iter().map(|&c| int(c)).collect();
        let (gcd, s) = extended_gcd(trim(self.coeffs.clone()), modulus);
        // gcd is a nonzero constant because Φ_r is irreducible
        debug_assert_eq!(gcd.len(), 1);
        let inv_g = gcd[0].recip();
        let s: Vec<Rational> = s.into_iter().map(|c| c * &inv_g).collect();
        Ok(Cyclotomic { field: self.field, coeffs: self.field.reduce(&s) })
    }

    fn check_same_field(&self, other: &Self) {
        assert_eq!(
            self.field.order, other.field.order,
            "mixed cyclotomic orders {} and {}",
            self.field.order, other.field.order
        );
    }
}

fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_sub_mul(a: &[Rational], q: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let len = a.len().max(q.len() + b.len() - 1);
    let mut out = vec![Rational::zero(); len];
    for (k, c) in a.iter().enumerate() {
        out[k] += c;
    }
    for (i, qi) in q.iter().enumerate() {
        if qi.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] -= qi * bj;
        }
    }
    trim(out)
}

fn poly_divmod(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let b = trim(b.to_vec());
    let db = b.len() - 1;
    let mut rem = a.to_vec();
    if rem.len() < b.len() {
        return (vec![Rational::zero()], trim(rem));
    }
    let lead_inv = b[db].recip();
    let mut quot = vec![Rational::zero(); rem.len() - db];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + db] * &lead_inv;
        if !c.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                rem[k + j] -= &c * bj;
            }
        }
        quot[k] = c;
    }
    rem.truncate(db.max(1));
    (trim(quot), trim(rem))
}

/// Returns `(g, s)` with `s·a ≡ g (mod b)` and `g = gcd(a, b)`.
fn extended_gcd(a: Vec<Rational>, b: Vec<Rational>) -> (Vec<Rational>, Vec<Rational>) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (vec![Rational::one()], vec![Rational::zero()]);
    while !(r.len() == 1 && r[0].is_zero()) {
        let (q, rem) = poly_divmod(&old_r, &r);
        let new_s = poly_sub_mul(&old_s, &q, &s);
        old_r = std::mem::replace(&mut r, rem);
        old_s = std::mem::replace(&mut s, new_s);
    }
    (old_r, old_s)
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.field.order == other.field.order && self.coeffs == other.coeffs
    }
}

impl Eq for Cyclotomic {}

impl Hash for Cyclotomic {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.order.hash(state);
        self.coeffs.hash(state);
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}")?;
                    }
                    if k == 1 {
                        write!(f, "ζ")?;
                    } else {
                        write!(f, "ζ^{k}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Cyclotomic", 2)?;
        st.serialize_field("r", &self.field.order)?;
        let coeffs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.check_same_field(rhs);
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect();
        Cyclotomic { field: self.field, coeffs }
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.check_same_field(rhs);
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect();
        Cyclotomic { field: self.field, coeffs }
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.check_same_field(rhs);
        let degree = self.field.degree();
        if degree == 1 {
            return Cyclotomic { field: self.field, coeffs: vec![&self.coeffs[0] * &rhs.coeffs[0]] };
        }
        let mut prod = vec![Rational::zero(); 2 * degree - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        Cyclotomic { field: self.field, coeffs: self.field.reduce(&prod) }
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { field: self.field, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: &Cyclotomic) -> Cyclotomic { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        self.check_same_field(rhs);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl SubAssign<&Cyclotomic> for Cyclotomic {
    fn sub_assign(&mut self, rhs: &Cyclotomic) {
        self.check_same_field(rhs);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
    }
}
