use num_traits::{One, Zero};
use serde::Serialize;

use super::weights::{box_form, twisted_cell};
use crate::combinatorics::{Composition, StandardTableau};
use crate::error::{Error, Result};
use crate::scalars::{int, FactoredScalar, LinearForm, ParamPoint, Rational};

/// The result of applying an intertwiner to f_{μ,T}: `scalar · f_target`,
/// or zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransitionScalar {
    pub target: Option<(Composition, StandardTableau)>,
    pub scalar: FactoredScalar,
}

impl TransitionScalar {
    fn to(mu: Composition, t: StandardTableau, scalar: FactoredScalar) -> Self {
        TransitionScalar { target: Some((mu, t)), scalar }
    }

    fn zero(r: u32) -> Self {
        TransitionScalar { target: None, scalar: FactoredScalar::from_rational(r, Rational::zero()) }
    }

    pub fn is_zero(&self) -> bool {
        self.target.is_none() || self.scalar.is_zero()
    }

    /// True when the image is nonzero at `p` (poles count as nonzero).
    pub fn nonzero_at(&self, p: &ParamPoint) -> bool {
        !self.is_zero() && !self.scalar.is_zero_at(p)
    }
}

/// δ = α_i − α_{i+1} for a pair with matching residues.
pub fn sigma_delta(i: usize, mu: &Composition, t: &StandardTableau) -> LinearForm {
    let r = t.r() as u32;
    let (a, b) = (twisted_cell(mu, t, i), twisted_cell(mu, t, i + 1));
    let k = mu.get(i - 1) as i64 - mu.get(i) as i64;
    LinearForm::kappa(r).scale(&int(k))
        - LinearForm::d_diff(r, a.beta() as i64, b.beta() as i64)
        - LinearForm::c0(r).scale(&int(r as i64 * (a.content() - b.content())))
}

fn residues_match(i: usize, mu: &Composition, t: &StandardTableau) -> bool {
    let r = t.r() as i64;
    let (a, b) = (twisted_cell(mu, t, i), twisted_cell(mu, t, i + 1));
    let lhs = mu.get(i - 1) as i64 - mu.get(i) as i64;
    (lhs - (a.beta() as i64 - b.beta() as i64)).rem_euclid(r) == 0
}

/// σ_i.f_{μ,T} with generic parameters, 1 ≤ i ≤ n−1.
pub fn sigma_transition(i: usize, mu: &Composition, t: &StandardTableau) -> TransitionScalar {
    let r = t.r() as u32;
    let n = mu.n();
    assert!(i >= 1 && i < n, "σ_{i} needs 1 ≤ i < n = {n}");
    let (mi, mj) = (mu.get(i - 1), mu.get(i));
    let one = FactoredScalar::one(r);
    if mi < mj || (mi > mj && !residues_match(i, mu, t)) {
        return TransitionScalar::to(mu.swap(i), t.clone(), one);
    }
    if mi > mj {
        let delta = sigma_delta(i, mu, t);
        let rc0 = LinearForm::c0(r).scale(&int(r as i64));
        let num = FactoredScalar::diff_of_squares(&delta, &rc0);
        let den = FactoredScalar::from_form(&delta).pow(2).expect("nonzero δ");
        return TransitionScalar::to(mu.swap(i), t.clone(), num.div(&den).expect("nonzero δ"));
    }
    let j = mu.wmu().apply(i - 1) + 1;
    match t.swap(j - 1) {
        None => TransitionScalar::zero(r),
        Some(s) => {
            let (a, b) = (t.cell(j - 1), t.cell(j));
            if a.beta() != b.beta() {
                return TransitionScalar::to(mu.clone(), s, one);
            }
            let c = b.content() - a.content();
            let coeff = if c > 0 { Rational::one() } else { Rational::one() - Rational::new(1.into(), (c * c).into()) };
            TransitionScalar::to(mu.clone(), s, FactoredScalar::from_rational(r, coeff))
        }
    }
}

/// σ_i.f_{μ,T} at a point; refuses when δ vanishes there.
pub fn sigma_transition_at(
    i: usize,
    mu: &Composition,
    t: &StandardTableau,
    p: &ParamPoint,
) -> Result<TransitionScalar> {
    let (mi, mj) = (mu.get(i - 1), mu.get(i));
    if mi > mj && residues_match(i, mu, t) && sigma_delta(i, mu, t).eval(p).is_zero() {
        return Err(Error::SpectrumNotSimple(format!("δ vanishes for σ_{i} at ({mu}, {t})")));
    }
    Ok(sigma_transition(i, mu, t))
}

/// Φ.f_{μ,T} = f_{φ.μ,T}.
pub fn phi_transition(mu: &Composition, t: &StandardTableau) -> TransitionScalar {
    TransitionScalar::to(mu.phi(), t.clone(), FactoredScalar::one(t.r() as u32))
}

/// The Ψ scalar κμ_n − (d_β − d_{β−μ_n}) − r·ct(b)·c₀ with b = T(w_μ(n)).
pub fn psi_form(mu: &Composition, t: &StandardTableau) -> LinearForm {
    let n = mu.n();
    let b = twisted_cell(mu, t, n);
    box_form(t.r() as u32, mu.get(n - 1) as i64, b.beta() as i64, b.content())
}

pub fn psi_transition(mu: &Composition, t: &StandardTableau) -> TransitionScalar {
    match mu.psi() {
        Err(_) => TransitionScalar::zero(t.r() as u32),
        Ok(target) => TransitionScalar::to(target, t.clone(), FactoredScalar::from_form(&psi_form(mu, t))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{syt_enumerate, MultiPartition};

    fn row2() -> StandardTableau {
        syt_enumerate(&MultiPartition::from_parts(&[&[2]])).remove(0)
    }

    #[test]
    fn two_box_row() {
        let t = row2();
        let up = sigma_transition(1, &Composition::new(vec![0, 1]), &t);
        assert_eq!(up.target.as_ref().unwrap().0, Composition::new(vec![1, 0]));
        assert!(up.scalar.is_one());
        let down = sigma_transition(1, &Composition::new(vec![1, 0]), &t);
        assert_eq!(down.scalar.to_string(), "κ · (κ − 2c₀) · (κ − c₀)^{-2}");
        assert!(sigma_transition(1, &Composition::zero(2), &t).is_zero());
        let phi = phi_transition(&Composition::zero(2), &t);
        assert_eq!(phi.target.unwrap().0, Composition::new(vec![0, 1]));
        assert!(psi_transition(&Composition::zero(2), &t).is_zero());
        let psi = psi_transition(&Composition::new(vec![0, 1]), &t);
        assert_eq!(psi.scalar, FactoredScalar::from_form(&(LinearForm::kappa(1) - LinearForm::c0(1))));
    }

    #[test]
    fn specialized_refusal() {
        let t = row2();
        let p = ParamPoint::with_c0(1, int(1));
        assert!(matches!(
            sigma_transition_at(1, &Composition::new(vec![1, 0]), &t, &p),
            Err(Error::SpectrumNotSimple(_))
        ));
    }
}
