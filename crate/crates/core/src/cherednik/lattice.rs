use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::spectrum::require_simple_spectrum;
use super::transitions::{psi_transition, sigma_transition_at};
use crate::combinatorics::{
    gamma_contains, syt_enumerate, Cell, Composition, GammaSetDescriptor, MultiPartition, StandardTableau,
};
use crate::error::Result;
use crate::scalars::rational::to_i64;
use crate::scalars::{int, LinearForm, ParamPoint};

/// A closed Γ set together with the equation that vanishes at the point.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct ClosedGenerator {
    pub descriptor: GammaSetDescriptor,
    pub defining_equation: LinearForm,
}

impl ClosedGenerator {
    pub fn contains(&self, mu: &Composition, t: &StandardTableau) -> bool {
        gamma_contains(&self.descriptor, mu, t)
    }
}

/// k − (d_i − d_{i−k}) − r·ct(b)·c₀.
pub fn single_box_equation(r: u32, b: &Cell, k: i64) -> LinearForm {
    let i = b.beta() as i64;
    LinearForm::constant(r, int(k))
        - LinearForm::d_diff(r, i, i - k)
        - LinearForm::c0(r).scale(&int(r as i64 * b.content()))
}

/// k − (d_{β₁} − d_{β₂}) − r·(ct₁ − ct₂ + sign)·c₀.
pub fn box_pair_equation(r: u32, b1: &Cell, b2: &Cell, k: i64, sign: i64) -> LinearForm {
    LinearForm::constant(r, int(k))
        - LinearForm::d_diff(r, b1.beta() as i64, b2.beta() as i64)
        - LinearForm::c0(r).scale(&int(r as i64 * (b1.content() - b2.content() + sign)))
}

fn positive_integer_with_residue(q: &crate::scalars::Rational, r: u32, residue: i64) -> Option<u32> {
    let k = to_i64(q)?;
    (k > 0 && (k - residue).rem_euclid(r as i64) == 0).then_some(k as u32)
}

/// All closed Γ_{b,k} and Γ_{b₁,b₂,k} at a simple-spectrum point with κ = 1.
pub fn closed_generators(shape: &MultiPartition, p: &ParamPoint) -> Result<Vec<ClosedGenerator>> {
    require_simple_spectrum(shape, p)?;
    solve_generator_equations(shape, p)
}

/// The Γ sets whose defining equations hold at `p`, without checking that
/// the spectrum is simple there.
pub fn solve_generator_equations(shape: &MultiPartition, p: &ParamPoint) -> Result<Vec<ClosedGenerator>> {
    p.require_kappa_one()?;
    let r = shape.r();
    let cells = shape.cells();
    let mut out = BTreeSet::new();
    for b in &cells {
        let i = b.beta() as i64;
        for rho in 0..r as i64 {
            let candidate = LinearForm::d_diff(r, i, i - rho) + LinearForm::c0(r).scale(&int(r as i64 * b.content()));
            if let Some(k) = positive_integer_with_residue(&candidate.eval(p), r, rho) {
                out.insert(ClosedGenerator {
                    descriptor: GammaSetDescriptor::SingleBox { b: *b, k },
                    defining_equation: single_box_equation(r, b, k as i64),
                });
            }
        }
    }
    for b1 in &cells {
        for b2 in &cells {
            if b1 == b2 {
                continue;
            }
            let residue = b1.beta() as i64 - b2.beta() as i64;
            for sign in [1, -1] {
                let candidate = LinearForm::d_diff(r, b1.beta() as i64, b2.beta() as i64)
                    + LinearForm::c0(r).scale(&int(r as i64 * (b1.content() - b2.content() + sign)));
                if let Some(k) = positive_integer_with_residue(&candidate.eval(p), r, residue) {
                    let descriptor = GammaSetDescriptor::BoxPair { b1: *b1, b2: *b2, k };
                    if out.iter().any(|g: &ClosedGenerator| g.descriptor == descriptor) {
                        continue;
                    }
                    out.insert(ClosedGenerator {
                        descriptor,
                        defining_equation: box_pair_equation(r, b1, b2, k as i64, sign),
                    });
                }
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// Expressions in the lattice generated by the closed sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", content = "args", rename_all = "kebab-case")]
pub enum SubmoduleExpr {
    /// The closed set with this index in the generator list.
    Generator(usize),
    Union(Vec<SubmoduleExpr>),
    Intersection(Vec<SubmoduleExpr>),
    /// The union of all generators: the maximal proper submodule.
    Radical,
    /// The whole module.
    Everything,
    /// The submodule generated by f_{μ,T}.
    Cyclic(Composition, Vec<Vec<Vec<usize>>>),
}

/// Membership of f_{ν,S} in the submodule described by `expr`.
pub fn submodule_contains(
    expr: &SubmoduleExpr,
    gens: &[ClosedGenerator],
    shape: &MultiPartition,
    mu: &Composition,
    t: &StandardTableau,
) -> Result<bool> {
    Ok(match expr {
        SubmoduleExpr::Generator(i) => gens
            .get(*i)
            .ok_or_else(|| crate::Error::InvalidInput(format!("no generator with index {i}")))?
            .contains(mu, t),
        SubmoduleExpr::Union(xs) => {
            for x in xs {
                if submodule_contains(x, gens, shape, mu, t)? {
                    return Ok(true);
                }
            }
            false
        }
        SubmoduleExpr::Intersection(xs) => {
            for x in xs {
                if !submodule_contains(x, gens, shape, mu, t)? {
                    return Ok(false);
                }
            }
            true
        }
        SubmoduleExpr::Radical => gens.iter().any(|g| g.contains(mu, t)),
        SubmoduleExpr::Everything => true,
        SubmoduleExpr::Cyclic(nu, rows) => {
            let s = StandardTableau::from_rows(shape, rows).ok_or_else(|| {
                crate::Error::InvalidInput("cyclic generator tableau is not standard on the shape".into())
            })?;
            cyclic_submodule_contains(gens, nu, &s, mu, t)
        }
    })
}

/// f_{ν,S} lies in the submodule generated by f_{μ,T} iff it lies in every
/// closed generator containing (μ,T).
pub fn cyclic_submodule_contains(
    gens: &[ClosedGenerator],
    mu: &Composition,
    t: &StandardTableau,
    nu: &Composition,
    s: &StandardTableau,
) -> bool {
    gens.iter().filter(|g| g.contains(mu, t)).all(|g| g.contains(nu, s))
}

/// Graded dimensions, degree 0 to `maxdeg`, of the span of the f_{ν,S}
/// selected by `keep`.
pub fn graded_count<F>(shape: &MultiPartition, maxdeg: u32, keep: F) -> Result<Vec<u64>>
where
    F: Fn(&Composition, &StandardTableau) -> Result<bool> + Sync,
{
    use rayon::prelude::*;
    let tableaux = syt_enumerate(shape);
    (0..=maxdeg)
        .map(|d| {
            let comps = Composition::all_of_degree(shape.n(), d);
            comps
                .par_iter()
                .map(|mu| {
                    let mut c = 0u64;
                    for t in &tableaux {
                        if keep(mu, t)? {
                            c += 1;
                        }
                    }
                    Ok(c)
                })
                .sum::<Result<u64>>()
        })
        .collect()
}

/// Graded dimensions of the submodule `expr`, of its quotient, and of M(λ).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedDims {
    pub submodule: Vec<u64>,
    pub quotient: Vec<u64>,
    pub total: Vec<u64>,
}

pub fn lattice_graded_dims(
    shape: &MultiPartition,
    p: &ParamPoint,
    gens: &[ClosedGenerator],
    expr: &SubmoduleExpr,
    maxdeg: u32,
) -> Result<GradedDims> {
    p.require_kappa_one()?;
    require_simple_spectrum(shape, p)?;
    let submodule = graded_count(shape, maxdeg, |mu, t| submodule_contains(expr, gens, shape, mu, t))?;
    let total = graded_count(shape, maxdeg, |_, _| Ok(true))?;
    let quotient = total.iter().zip(&submodule).map(|(a, b)| a - b).collect();
    Ok(GradedDims { submodule, quotient, total })
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum EdgeKind {
    Sigma { i: usize },
    Tableau { i: usize },
    Phi,
    Psi,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CalibrationEdge {
    pub kind: EdgeKind,
    pub mu: Composition,
    pub tableau: StandardTableau,
}

/// Out-edges of (μ,T) in the calibration graph at `p`, or in the generic
/// graph when `p` is `None`.
pub fn calibration_edges(
    mu: &Composition,
    t: &StandardTableau,
    p: Option<&ParamPoint>,
) -> Result<Vec<CalibrationEdge>> {
    let n = mu.n();
    let mut out = Vec::new();
    for i in 1..n {
        let (a, b) = (mu.get(i - 1), mu.get(i));
        if a != b {
            let keep = match p {
                None => true,
                Some(p) => sigma_transition_at(i, mu, t, p)?.nonzero_at(p),
            };
            if keep {
                out.push(CalibrationEdge { kind: EdgeKind::Sigma { i }, mu: mu.swap(i), tableau: t.clone() });
            }
        } else {
            let j = mu.wmu().apply(i - 1) + 1;
            if let Some(s) = t.swap(j - 1) {
                out.push(CalibrationEdge { kind: EdgeKind::Tableau { i }, mu: mu.clone(), tableau: s });
            }
        }
    }
    out.push(CalibrationEdge { kind: EdgeKind::Phi, mu: mu.phi(), tableau: t.clone() });
    if n > 0 && mu.get(n - 1) > 0 {
        let tr = psi_transition(mu, t);
        let keep = match p {
            None => true,
            Some(p) => tr.nonzero_at(p),
        };
        if keep {
            out.push(CalibrationEdge { kind: EdgeKind::Psi, mu: mu.psi()?, tableau: t.clone() });
        }
    }
    Ok(out)
}
