use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::combinatorics::MultiPartition;
use crate::error::{Error, Result};
use crate::scalars::rational::to_i64;
use crate::scalars::{int, LinearForm, ParamPoint, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum HyperplaneFamily {
    /// k·κ = d_l − d_{l−k} + m·r·c₀ with k ≢ 0 mod r.
    ComponentPair,
    /// k·κ = m·c₀ within one component.
    RowColumn,
}

/// One family of parallel hyperplanes k·κ = `rhs`, for every k > 0 with
/// k ≡ `residue` (mod r), or every k > 0 when `residue` is `None`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExceptionalHyperplane {
    pub family: HyperplaneFamily,
    pub l: usize,
    pub residue: Option<u32>,
    pub m: i64,
    pub rhs: LinearForm,
}

/// A hyperplane of ℰ_λ through the point.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct HyperplaneViolation {
    pub family: HyperplaneFamily,
    pub l: usize,
    pub m: i64,
    pub k: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumReport {
    pub simple: bool,
    pub violations: Vec<HyperplaneViolation>,
}

/// The finitely many hyperplane families making up ℰ_λ.
pub fn exceptional_hyperplanes(shape: &MultiPartition) -> Vec<ExceptionalHyperplane> {
    let r = shape.r();
    let ri = r as i64;
    let mut out = Vec::new();
    for l in 0..r as usize {
        let lam = shape.component(l);
        if lam.is_empty() {
            continue;
        }
        let (lo_l, hi_l) = (lam.min_content().unwrap(), lam.max_content().unwrap());
        for rho in 1..ri {
            let other = shape.component_mod(l as i64 - rho);
            if other.is_empty() {
                continue;
            }
            let (lo_o, hi_o) = (other.min_content().unwrap(), other.max_content().unwrap());
            for m in (lo_l - hi_o)..=(hi_l - lo_o) {
                let rhs = LinearForm::d_diff(r, l as i64, l as i64 - rho) + LinearForm::c0(r).scale(&int(m * ri));
                out.push(ExceptionalHyperplane {
                    family: HyperplaneFamily::ComponentPair,
                    l,
                    residue: Some(rho as u32),
                    m,
                    rhs,
                });
            }
        }
        let ms: Vec<i64> = if lam.is_single_row() {
            (1..=hi_l).collect()
        } else if lam.is_single_column() {
            (lo_l..0).collect()
        } else {
            ((lo_l - hi_l)..=(hi_l - lo_l)).filter(|&m| m != 0).collect()
        };
        for m in ms {
            out.push(ExceptionalHyperplane {
                family: HyperplaneFamily::RowColumn,
                l,
                residue: None,
                m,
                rhs: LinearForm::c0(r).scale(&int(m)),
            });
        }
    }
    out
}

/// The k > 0 (if any) for which the point lies on k·κ = rhs.
fn solve_k(h: &ExceptionalHyperplane, p: &ParamPoint, r: u32) -> Option<i64> {
    let k: Rational = h.rhs.eval(p) / p.kappa();
    let k = to_i64(&k)?;
    if k <= 0 {
        return None;
    }
    match h.residue {
        Some(rho) if k.rem_euclid(r as i64) != rho as i64 => None,
        _ => Some(k),
    }
}

/// Decides whether the point avoids every hyperplane of ℰ_λ.
pub fn is_simple_spectrum(shape: &MultiPartition, p: &ParamPoint) -> Result<SpectrumReport> {
    if p.r() != shape.r() {
        return Err(Error::SizeMismatch { left: p.r() as usize, right: shape.r() as usize });
    }
    if p.c0().is_zero() {
        return Err(Error::OutOfScope("the hyperplane criterion needs c₀ ≠ 0".into()));
    }
    if p.kappa().is_zero() || p.kappa().is_negative() {
        return Err(Error::OutOfScope("the hyperplane criterion needs κ > 0".into()));
    }
    let mut violations: Vec<HyperplaneViolation> = exceptional_hyperplanes(shape)
        .iter()
        .filter_map(|h| solve_k(h, p, shape.r()).map(|k| HyperplaneViolation { family: h.family, l: h.l, m: h.m, k }))
        .collect();
    violations.sort();
    Ok(SpectrumReport { simple: violations.is_empty(), violations })
}

pub fn require_simple_spectrum(shape: &MultiPartition, p: &ParamPoint) -> Result<()> {
    let report = is_simple_spectrum(shape, p)?;
    if !report.simple {
        let v = &report.violations[0];
        return Err(Error::SpectrumNotSimple(format!(
            "{} lies on a {:?} hyperplane (l = {}, m = {}, k = {})",
            shape, v.family, v.l, v.m, v.k
        )));
    }
    Ok(())
}
