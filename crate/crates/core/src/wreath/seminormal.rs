use std::collections::{HashMap, VecDeque};

use num_traits::One;
use serde::Serialize;

use super::group::GroupElement;
use crate::combinatorics::tableau::{syt_enumerate, tableau_index};
use crate::combinatorics::{Composition, MultiPartition, StandardTableau};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalars::{int, Cyclotomic, Rational};

/// A rational sparse column: (row, coefficient).
type SparseColumn = Vec<(usize, Rational)>;

/// S^λ in the seminormal basis v_T, with Gram weights ⟨v_T, v_T⟩ = γ_T.
#[derive(Clone, Debug)]
pub struct SeminormalRep {
    shape: MultiPartition,
    r: u32,
    basis: Vec<StandardTableau>,
    index: HashMap<StandardTableau, usize>,
    gamma: Vec<Rational>,
    /// `simple[i-1][k]` is t_{s_i} v_{T_k}.
    simple: Vec<Vec<SparseColumn>>,
}

/// Per tableau, the Jucys–Murphy eigenvalues r·ct(T(i)) and residues β(T(i)).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JMData {
    pub contents: Vec<Vec<i64>>,
    pub residues: Vec<Vec<usize>>,
}

fn pair_delta(t: &StandardTableau, i: usize) -> i64 {
    t.content(i + 1) - t.content(i)
}

/// 1 − 1/c².
fn gamma_ratio(c: i64) -> Rational {
    Rational::one() - Rational::new(1.into(), (c * c).into())
}

pub fn build_rep(shape: &MultiPartition) -> SeminormalRep {
    let r = shape.r();
    let n = shape.n();
    let basis = syt_enumerate(shape);
    let index = tableau_index(&basis);
    let mut simple = Vec::with_capacity(n.saturating_sub(1));
    for i in 1..n {
        let cols = basis
            .iter()
            .map(|t| {
                let k = index[t];
                let (a, b) = (t.cell(i), t.cell(i + 1));
                match t.swap(i) {
                    Some(s) if a.component != b.component => vec![(index[&s], Rational::one())],
                    Some(s) => {
                        let c = pair_delta(t, i);
                        let inv_c = Rational::new(1.into(), c.into());
                        if c > 0 {
                            vec![(k, inv_c), (index[&s], Rational::one())]
                        } else {
                            vec![(k, inv_c), (index[&s], gamma_ratio(c))]
                        }
                    }
                    None => vec![(k, Rational::new(1.into(), pair_delta(t, i).into()))],
                }
            })
            .collect();
        simple.push(cols);
    }
    let gamma = compute_gamma(&basis, &index);
    SeminormalRep { shape: shape.clone(), r, basis, index, gamma, simple }
}

fn compute_gamma(basis: &[StandardTableau], index: &HashMap<StandardTableau, usize>) -> Vec<Rational> {
    let mut gamma: Vec<Option<Rational>> = vec![None; basis.len()];
    if basis.is_empty() {
        return Vec::new();
    }
    gamma[0] = Some(Rational::one());
    let mut queue = VecDeque::from([0usize]);
    while let Some(k) = queue.pop_front() {
        let t = &basis[k];
        let g = gamma[k].clone().unwrap();
        for i in 1..t.n() {
            let Some(s) = t.swap(i) else { continue };
            let j = index[&s];
            if gamma[j].is_some() {
                continue;
            }
            let next = if t.beta(i) != t.beta(i + 1) {
                g.clone()
            } else {
                let c = pair_delta(t, i);
                if c > 0 {
                    &g * gamma_ratio(c)
                } else {
                    &g / gamma_ratio(c)
                }
            };
            gamma[j] = Some(next);
            queue.push_back(j);
        }
    }
    gamma.into_iter().map(|g| g.expect("tableaux connected by adjacent swaps")).collect()
}

impl SeminormalRep {
    pub fn shape(&self) -> &MultiPartition {
        &self.shape
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn n(&self) -> usize {
        self.shape.n()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[StandardTableau] {
        &self.basis
    }

    pub fn tableau(&self, k: usize) -> &StandardTableau {
        &self.basis[k]
    }

    pub fn index_of(&self, t: &StandardTableau) -> Option<usize> {
        self.index.get(t).copied()
    }

    pub fn gamma(&self, k: usize) -> &Rational {
        &self.gamma[k]
    }

    pub fn gammas(&self) -> &[Rational] {
        &self.gamma
    }

    pub fn gram(&self) -> Matrix {
        let entries: Vec<Cyclotomic> =
            self.gamma.iter().map(|g| Cyclotomic::from_rational(self.r, g.clone())).collect();
        Matrix::diagonal(self.r, &entries)
    }

    pub fn basis_vector(&self, k: usize) -> Vec<Cyclotomic> {
        let mut v = vec![Cyclotomic::zero(self.r); self.dim()];
        v[k] = Cyclotomic::one(self.r);
        v
    }

    /// t_{s_i} applied to a coordinate vector (1-based i).
    pub fn apply_simple(&self, i: usize, v: &[Cyclotomic]) -> Vec<Cyclotomic> {
        let mut out = vec![Cyclotomic::zero(self.r); self.dim()];
        for (k, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (row, q) in &self.simple[i - 1][k] {
                out[*row] += &x.scale(q);
            }
        }
        out
    }

    /// Applies Π ζ_m^{c_m}, which is diagonal on v_T.
    fn apply_diagonal(&self, exps: &[u32], v: &mut [Cyclotomic]) {
        if exps.iter().all(|&c| c == 0) {
            return;
        }
        for (k, x) in v.iter_mut().enumerate() {
            if x.is_zero() {
                continue;
            }
            let t = &self.basis[k];
            let e: i64 = exps.iter().enumerate().map(|(m, &c)| c as i64 * t.beta(m + 1) as i64).sum();
            if e % self.r as i64 != 0 {
                *x = &*x * &Cyclotomic::zeta_pow(self.r, e);
            }
        }
    }

    /// t_g applied to a coordinate vector, through g = D·P_w and a reduced
    /// word of w.
    pub fn apply(&self, g: &GroupElement, v: &[Cyclotomic]) -> Vec<Cyclotomic> {
        assert_eq!(g.n(), self.n());
        let mut out = v.to_vec();
        for &i in g.perm().reduced_word().iter().rev() {
            out = self.apply_simple(i, &out);
        }
        self.apply_diagonal(&g.diagonal_exponents(), &mut out);
        out
    }

    pub fn matrix(&self, g: &GroupElement) -> Matrix {
        let cols: Vec<Vec<Cyclotomic>> = (0..self.dim()).map(|k| self.apply(g, &self.basis_vector(k))).collect();
        Matrix::from_columns(self.r, self.dim(), &cols)
    }

    pub fn simple_matrix(&self, i: usize) -> Matrix {
        self.matrix(&GroupElement::simple(self.r, self.n(), i))
    }

    pub fn zeta_matrix(&self, i: usize) -> Matrix {
        self.matrix(&GroupElement::zeta(self.r, self.n(), i, 1))
    }

    /// φ_i = Σ_{j<i} Σ_l t_{ζ_i^l s_{ij} ζ_i^{−l}}.
    pub fn jm_matrix(&self, i: usize) -> Matrix {
        let mut m = Matrix::zeros(self.r, self.dim(), self.dim());
        for j in 1..i {
            for l in 0..self.r as i64 {
                m = m.add(&self.matrix(&GroupElement::reflection(self.r, self.n(), i, j, l)));
            }
        }
        m
    }

    /// Tabulated eigenvalues, checked against the materialized φ_i.
    pub fn jm_eigen(&self) -> Result<JMData> {
        let n = self.n();
        let contents: Vec<Vec<i64>> =
            self.basis.iter().map(|t| (1..=n).map(|i| self.r as i64 * t.content(i)).collect()).collect();
        let residues = self.basis.iter().map(|t| (1..=n).map(|i| t.beta(i)).collect()).collect();
        for i in 1..=n {
            let phi = self.jm_matrix(i);
            let expected: Vec<Cyclotomic> =
                contents.iter().map(|c| Cyclotomic::from_rational(self.r, int(c[i - 1]))).collect();
            if phi != Matrix::diagonal(self.r, &expected) {
                return Err(Error::ConsistencyFailure(format!(
                    "φ_{i} is not diagonal with entries r·ct(T({i})) on {}",
                    self.shape
                )));
            }
        }
        Ok(JMData { contents, residues })
    }

    /// Coordinates of v_T^μ = t_{w_μ}^{-1} v_T.
    pub fn twisted_vector(&self, mu: &Composition, t: &StandardTableau) -> Result<Vec<Cyclotomic>> {
        let k = self.index_of(t).ok_or_else(|| Error::InvalidInput(format!("tableau {t} is not on {}", self.shape)))?;
        if mu.n() != self.n() {
            return Err(Error::SizeMismatch { left: mu.n(), right: self.n() });
        }
        let w_inv = GroupElement::from_perm(self.r, mu.wmu().inverse());
        Ok(self.apply(&w_inv, &self.basis_vector(k)))
    }

    /// Generator matrices t_{s_1}, …, t_{s_{n−1}}, t_{ζ_1} as nested arrays of
    /// cyclotomic coefficient vectors.
    pub fn generators_json(&self) -> serde_json::Value {
        let mut gens = serde_json::Map::new();
        let dump = |m: &Matrix| -> serde_json::Value {
            let rows: Vec<Vec<Vec<String>>> = (0..m.rows())
                .map(|i| (0..m.cols()).map(|j| m.get(i, j).coeffs().iter().map(|c| c.to_string()).collect()).collect())
                .collect();
            serde_json::to_value(rows).unwrap()
        };
        for i in 1..self.n() {
            gens.insert(format!("s{i}"), dump(&self.simple_matrix(i)));
        }
        if self.n() > 0 {
            gens.insert("zeta1".into(), dump(&self.zeta_matrix(1)));
        }
        serde_json::json!({
            "shape": self.shape,
            "gamma": self.gamma.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            "generators": gens,
        })
    }
}

/// True when every generator M satisfies M*·G·M = G for G = diag(γ).
pub fn is_gamma_unitary(rep: &SeminormalRep) -> bool {
    let g = rep.gram();
    let mut gens: Vec<Matrix> = (1..rep.n()).map(|i| rep.simple_matrix(i)).collect();
    gens.extend((1..=rep.n()).map(|i| rep.zeta_matrix(i)));
    gens.iter().all(|m| m.conj_transpose().mul(&g).mul(m) == g)
}
