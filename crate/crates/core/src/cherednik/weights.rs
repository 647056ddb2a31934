use serde::Serialize;

use crate::combinatorics::{Cell, Composition, StandardTableau};
use crate::scalars::{int, LinearForm, ParamPoint, Rational};

/// The 𝔱-weight of f_{μ,T}: z_i acts by `alphas[i]`, t_{ζ_i} by ζ^{residues[i]}.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Weight {
    pub alphas: Vec<LinearForm>,
    pub residues: Vec<u32>,
}

impl Weight {
    pub fn n(&self) -> usize {
        self.alphas.len()
    }

    pub fn eval(&self, p: &ParamPoint) -> Vec<Rational> {
        self.alphas.iter().map(|a| a.eval(p)).collect()
    }

    /// φ.(α, ζ^β) = (α₂, …, α_n, α₁ + κ − d_{β₁−1} + d_{β₁−2}; β₂, …, β_n, β₁ − 1).
    pub fn phi(&self) -> Weight {
        let r = self.alphas[0].r();
        let b1 = self.residues[0] as i64;
        let mut alphas = self.alphas[1..].to_vec();
        alphas.push(&(&self.alphas[0] + &LinearForm::kappa(r)) - &LinearForm::d_diff(r, b1 - 1, b1 - 2));
        let mut residues = self.residues[1..].to_vec();
        residues.push((b1 - 1).rem_euclid(r as i64) as u32);
        Weight { alphas, residues }
    }

    /// Evaluated weight, comparable across pairs at a point.
    pub fn key_at(&self, p: &ParamPoint) -> (Vec<Rational>, Vec<u32>) {
        (self.eval(p), self.residues.clone())
    }
}

/// The box T(w_μ(i)) for 1-based i.
pub fn twisted_cell(mu: &Composition, t: &StandardTableau, i: usize) -> Cell {
    t.cell(mu.wmu().apply(i - 1) + 1)
}

/// κ·k − (d_β − d_{β−k}) − c₀·r·ct.
pub(crate) fn box_form(r: u32, k: i64, beta: i64, content: i64) -> LinearForm {
    let rr = r as i64;
    LinearForm::kappa(r).scale(&int(k))
        - LinearForm::d_diff(r, beta, beta - k)
        - LinearForm::c0(r).scale(&int(rr * content))
}

pub fn z_weight(mu: &Composition, t: &StandardTableau) -> Weight {
    let r = t.r() as u32;
    let w = mu.wmu();
    let mut alphas = Vec::with_capacity(mu.n());
    let mut residues = Vec::with_capacity(mu.n());
    for i in 0..mu.n() {
        let b = t.cell(w.apply(i) + 1);
        let m = mu.get(i) as i64;
        let beta = b.beta() as i64;
        alphas.push(box_form(r, m + 1, beta, b.content()));
        residues.push((beta - m).rem_euclid(r as i64) as u32);
    }
    Weight { alphas, residues }
}
