use std::collections::HashMap;

use serde::Serialize;

use super::blocks::{Eigenfunction, GramBlock, ZForm};
use super::module::{Label, ModuleElement, TruncatedModule};
use crate::cherednik::{norm, phi_transition, psi_transition, sigma_transition, z_weight, TransitionScalar};
use crate::combinatorics::Composition;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalars::{Cyclotomic, ParamPoint, Rational};
use crate::wreath::GroupElement;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub check: String,
    pub status: CheckStatus,
    pub degrees: Vec<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl CheckResult {
    fn new(check: &str) -> Self {
        CheckResult { check: check.into(), status: CheckStatus::Skipped, degrees: vec![], counterexample: None }
    }

    fn covered(&mut self, d: u32) {
        if self.status == CheckStatus::Skipped {
            self.status = CheckStatus::Pass;
        }
        if !self.degrees.contains(&d) {
            self.degrees.push(d);
        }
    }

    fn fail(&mut self, d: u32, why: String) {
        self.covered(d);
        if self.status != CheckStatus::Fail {
            self.status = CheckStatus::Fail;
            self.counterexample = Some(why);
        }
    }

    fn expect(&mut self, d: u32, ok: bool, why: impl FnOnce() -> String) {
        if ok {
            self.covered(d);
        } else {
            self.fail(d, why());
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub shape: String,
    pub point: ParamPoint,
    pub maxdeg: u32,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.check == name)
    }
}

fn q(r: u32, x: &Rational) -> Cyclotomic {
    Cyclotomic::from_rational(r, x.clone())
}

/// Eigenfunctions of every degree up to the truncation, indexed by label.
pub struct Eigenbasis {
    pub by_label: HashMap<Label, Eigenfunction>,
    pub degrees: Vec<Vec<Label>>,
}

impl Eigenbasis {
    pub fn compute(m: &TruncatedModule, maxdeg: u32) -> Result<Self> {
        let mut by_label = HashMap::new();
        let mut degrees = Vec::new();
        for d in 0..=maxdeg {
            let fs = m.joint_eigenbasis(d)?;
            degrees.push(fs.iter().map(|f| f.label.clone()).collect());
            for f in fs {
                by_label.insert(f.label.clone(), f);
            }
        }
        Ok(Eigenbasis { by_label, degrees })
    }

    pub fn get(&self, mu: &Composition, k: usize) -> Option<&Eigenfunction> {
        self.by_label.get(&(mu.clone(), k))
    }
}

/// σ_i = t_{s_i} + c₀ (z_i − z_{i+1})^{-1} π_i on a vector with the given
/// z-weights; returns the image and its weights.
pub fn apply_sigma(
    m: &TruncatedModule,
    i: usize,
    v: &ModuleElement,
    zw: &[Cyclotomic],
) -> Result<(ModuleElement, Vec<Cyclotomic>)> {
    let (r, n) = (m.r(), m.n());
    let mut pv = ModuleElement::zero(r);
    for l in 0..r as i64 {
        let mut exps = vec![0i64; n];
        exps[i - 1] = l;
        exps[i] = -l;
        let g = GroupElement::new(r, crate::combinatorics::Perm::identity(n), exps);
        pv = pv.add(&m.apply_group(&g, v));
    }
    let sv = m.apply_group(&GroupElement::simple(r, n, i), v);
    let mut w = zw.to_vec();
    w.swap(i - 1, i);
    if pv.is_zero() {
        return Ok((sv, w));
    }
    if pv != v.scale(&Cyclotomic::from_rational(r, crate::scalars::int(r as i64))) {
        return Err(Error::ConsistencyFailure(format!("π_{i} does not act by 0 or r on a weight vector")));
    }
    let delta = &zw[i - 1] - &zw[i];
    if delta.is_zero() {
        return Err(Error::SpectrumNotSimple(format!("z_{i} − z_{} vanishes on a weight vector", i + 1)));
    }
    let coeff = &q(r, m.point().c0()) * &delta.inv()?;
    Ok((sv.add(&pv.scale(&coeff)), w))
}

fn expected_image(
    m: &TruncatedModule,
    basis: &Eigenbasis,
    tr: &TransitionScalar,
    p: &ParamPoint,
) -> Result<Option<ModuleElement>> {
    if tr.is_zero() {
        return Ok(Some(ModuleElement::zero(m.r())));
    }
    let (mu, t) = tr.target.as_ref().expect("nonzero transition has a target");
    let k = m.rep().index_of(t).expect("target tableau on the shape");
    let Some(f) = basis.get(mu, k) else { return Ok(None) };
    let s = tr.scalar.eval(p)?;
    Ok(Some(f.element.scale(&q(m.r(), &s))))
}

/// Runs every check up to `maxdeg` and reports per-check status.
pub fn verify_suite(m: &TruncatedModule, maxdeg: u32) -> Result<VerifyReport> {
    if maxdeg > m.maxdeg() {
        return Err(Error::TruncationExceeded { degree: maxdeg as usize, max: m.maxdeg() as usize });
    }
    let p = m.point().clone();
    let (r, n) = (m.r(), m.n());
    let mut checks = Vec::new();

    let z: Vec<Vec<Matrix>> = (0..=maxdeg).map(|d| m.z_matrices(d, ZForm::XY)).collect::<Result<_>>()?;
    let t: Vec<Vec<Matrix>> = (0..=maxdeg).map(|d| m.t_zeta_matrices(d)).collect::<Result<_>>()?;

    let mut c = CheckResult::new("z-forms-agree");
    for d in (0..=maxdeg).filter(|&d| d < m.maxdeg()) {
        let yx = m.z_matrices(d, ZForm::YX)?;
        for i in 0..n {
            c.expect(d, yx[i] == z[d as usize][i], || {
                format!("z_{} differs between the two forms in degree {d}", i + 1)
            });
        }
    }
    checks.push(c);

    let mut c = CheckResult::new("t-commutative");
    for d in 0..=maxdeg {
        let (zs, ts) = (&z[d as usize], &t[d as usize]);
        for i in 0..n {
            for j in 0..n {
                c.expect(d, zs[i].mul(&zs[j]) == zs[j].mul(&zs[i]), || {
                    format!("[z_{}, z_{}] ≠ 0 in degree {d}", i + 1, j + 1)
                });
                c.expect(d, zs[i].mul(&ts[j]) == ts[j].mul(&zs[i]), || {
                    format!("[z_{}, t_ζ{}] ≠ 0 in degree {d}", i + 1, j + 1)
                });
            }
        }
    }
    checks.push(c);

    checks.push(check_triangular(m, maxdeg)?);
    checks.extend(check_intertwiner_products(m, maxdeg, &z)?);

    let grams = m.gram_blocks(maxdeg)?;
    checks.push(check_gram(m, &grams, &z)?);

    let basis = match Eigenbasis::compute(m, maxdeg) {
        Ok(b) => b,
        Err(e @ Error::SpectrumNotSimple(_)) => {
            let mut c = CheckResult::new("eigenbasis");
            c.fail(0, e.to_string());
            checks.push(c);
            return Ok(VerifyReport { shape: m.shape().to_string(), point: p, maxdeg, checks });
        }
        Err(e) => return Err(e),
    };

    let mut c = CheckResult::new("eigen-weights");
    for (d, labels) in basis.degrees.iter().enumerate() {
        for label in labels {
            let f = &basis.by_label[label];
            let w = z_weight(&label.0, m.tableau(label.1));
            let expected: Vec<Cyclotomic> = w.eval(&p).iter().map(|x| q(r, x)).collect();
            let residues: Vec<Cyclotomic> = w.residues.iter().map(|&b| Cyclotomic::zeta_pow(r, b as i64)).collect();
            c.expect(d as u32, f.z_weight == expected && f.t_weight == residues, || {
                format!("weight of f_{{{}, {}}} differs from z_weight", label.0, m.tableau(label.1))
            });
        }
    }
    checks.push(c);

    let (orth, norms) = check_norms(m, &basis, &grams)?;
    checks.push(orth);
    checks.push(norms);
    checks.push(check_vanishing(m, &basis));
    checks.push(check_transitions(m, &basis, maxdeg)?);
    checks.push(check_sigma_relations(m, &basis)?);
    Ok(VerifyReport { shape: m.shape().to_string(), point: p, maxdeg, checks })
}

/// z_i is upper triangular in the twisted basis with diagonal z_weight;
/// t_{ζ_i} is diagonal there.
pub fn check_triangular(m: &TruncatedModule, maxdeg: u32) -> Result<CheckResult> {
    let p = m.point();
    let r = m.r();
    let mut c = CheckResult::new("triangular");
    for d in 0..=maxdeg {
        let (zs, ts) = m.twisted_weight_operators(d)?;
        let size = m.block_dim(d);
        for (i, z) in zs.iter().enumerate() {
            for col in 0..size {
                let (mu, k) = m.label(d, col);
                let w = z_weight(&mu, m.tableau(k));
                c.expect(d, z.get(col, col) == &q(r, &w.alphas[i].eval(p)), || {
                    format!("diagonal of z_{} at ({mu}, {}) is not the weight", i + 1, m.tableau(k))
                });
                c.expect(d, ts[i].get(col, col) == &Cyclotomic::zeta_pow(r, w.residues[i] as i64), || {
                    format!("t_ζ{} at ({mu}, {}) is not ζ^β", i + 1, m.tableau(k))
                });
                for row in (0..size).filter(|&row| row != col) {
                    let (nu, _) = m.label(d, row);
                    if !z.get(row, col).is_zero() {
                        c.expect(d, nu.order_lt(&mu), || format!("z_{} has an entry at ({nu}) below ({mu})", i + 1));
                    }
                    if !ts[i].get(row, col).is_zero() {
                        c.fail(d, format!("t_ζ{} is not diagonal at ({nu}, {mu})", i + 1));
                    }
                }
            }
        }
    }
    Ok(c)
}

/// ΨΦ = z₁ and ΦΨ = z_n − κ + Σ_j (d_j − d_{j−1}) e_{nj}.
pub fn check_intertwiner_products(m: &TruncatedModule, maxdeg: u32, z: &[Vec<Matrix>]) -> Result<Vec<CheckResult>> {
    let p = m.point();
    let n = m.n();
    let r = m.r();
    let mut psiphi = CheckResult::new("psi-phi");
    let mut phipsi = CheckResult::new("phi-psi");
    for d in 0..=maxdeg {
        if d < m.maxdeg() {
            let lhs = m.operator_block(d, d, |v| Ok(m.apply_psi(&m.apply_phi(v)?)))?;
            psiphi.expect(d, lhs == z[d as usize][0], || format!("ΨΦ ≠ z₁ in degree {d}"));
        }
        let lhs = m.operator_block(d, d, |v| m.apply_phi(&m.apply_psi(v)))?;
        let rhs = m.operator_block(d, d, |v| {
            let mut out = m.apply_z_xy(n, v).sub(&v.scale(&q(r, p.kappa())));
            for j in 0..r as i64 {
                out = out.add(&m.apply_idempotent(n, j, v).scale(&q(r, &(p.d(j) - p.d(j - 1)))));
            }
            Ok(out)
        })?;
        phipsi.expect(d, lhs == rhs, || format!("ΦΨ ≠ z_n − κ + Σ(d_j − d_{{j−1}})e_nj in degree {d}"));
    }
    Ok(vec![psiphi, phipsi])
}

/// Hermitian Gram blocks, self-adjoint z_i and unitary group generators.
pub fn check_gram(m: &TruncatedModule, grams: &[GramBlock], z: &[Vec<Matrix>]) -> Result<CheckResult> {
    let (r, n) = (m.r(), m.n());
    let mut c = CheckResult::new("contravariant-form");
    for g in grams {
        let d = g.degree;
        c.expect(d, g.is_hermitian(), || format!("Gram block of degree {d} is not Hermitian"));
        for (i, zi) in z[d as usize].iter().enumerate() {
            c.expect(d, g.matrix.mul(zi) == zi.conj_transpose().mul(&g.matrix), || {
                format!("z_{} is not self-adjoint in degree {d}", i + 1)
            });
        }
        let mut gens: Vec<GroupElement> = (1..n).map(|i| GroupElement::simple(r, n, i)).collect();
        gens.extend((1..=n).map(|i| GroupElement::zeta(r, n, i, 1)));
        for gen in gens {
            let mat = m.operator_block(d, d, |v| Ok(m.apply_group(&gen, v)))?;
            c.expect(d, mat.conj_transpose().mul(&g.matrix).mul(&mat) == g.matrix, || {
                format!("t_{gen} is not unitary in degree {d}")
            });
        }
    }
    Ok(c)
}

/// ⟨f_{μ,T}, f_{ν,S}⟩ = 0 off the diagonal and ⟨f_{μ,T}, f_{μ,T}⟩/γ_T = norm(μ,T).
pub fn check_norms(m: &TruncatedModule, basis: &Eigenbasis, grams: &[GramBlock]) -> Result<(CheckResult, CheckResult)> {
    let p = m.point();
    let r = m.r();
    let mut orth = CheckResult::new("orthogonality");
    let mut norms = CheckResult::new("norm-formula");
    for (d, labels) in basis.degrees.iter().enumerate() {
        let d = d as u32;
        let coords: Vec<Vec<Cyclotomic>> = labels.iter().map(|l| m.to_block(d, &basis.by_label[l].element)).collect();
        let g = &grams[d as usize];
        for (a, la) in labels.iter().enumerate() {
            for (b, lb) in labels.iter().enumerate().skip(a + 1) {
                orth.expect(d, g.pair(&coords[a], &coords[b]).is_zero(), || format!("⟨f_{:?}, f_{:?}⟩ ≠ 0", la, lb));
            }
            let value = g.pair(&coords[a], &coords[a]);
            let gamma = m.rep().gamma(la.1);
            let formula = norm(&la.0, m.tableau(la.1));
            match formula.eval(p) {
                Ok(expected) => norms.expect(d, value == q(r, &(&expected * gamma)), || {
                    format!("norm of f_{{{}, {}}}: oracle {value}, formula {expected}·γ", la.0, m.tableau(la.1))
                }),
                Err(e) => norms.fail(d, format!("norm of f_{{{}, {}}}: {e}", la.0, m.tableau(la.1))),
            }
        }
    }
    Ok((orth, norms))
}

/// y_i.f_{μ,T} = 0 when μ_j = 0 for all j ≥ i.
pub fn check_vanishing(m: &TruncatedModule, basis: &Eigenbasis) -> CheckResult {
    let mut c = CheckResult::new("y-vanishing");
    for (d, labels) in basis.degrees.iter().enumerate() {
        for label in labels {
            let mu = &label.0;
            for i in 1..=m.n() {
                if (i..=m.n()).all(|j| mu.get(j - 1) == 0) {
                    let y = m.apply_y(i, &basis.by_label[label].element);
                    c.expect(d as u32, y.is_zero(), || format!("y_{i}.f_{{{mu}, {}}} ≠ 0", m.tableau(label.1)));
                }
            }
        }
    }
    c
}

/// σ_i, Φ and Ψ map each f_{μ,T} to the predicted multiple of the predicted
/// target.
pub fn check_transitions(m: &TruncatedModule, basis: &Eigenbasis, maxdeg: u32) -> Result<CheckResult> {
    let p = m.point();
    let mut c = CheckResult::new("transitions");
    for (d, labels) in basis.degrees.iter().enumerate() {
        let d = d as u32;
        for label in labels {
            let (mu, t) = (&label.0, m.tableau(label.1));
            let f = &basis.by_label[label];
            if d < maxdeg {
                let img = m.apply_phi(&f.element)?;
                if let Some(exp) = expected_image(m, basis, &phi_transition(mu, t), p)? {
                    c.expect(d, img == exp, || format!("Φ.f_{{{mu}, {t}}} is not f_{{φμ, T}}"));
                }
            }
            let img = m.apply_psi(&f.element);
            if let Some(exp) = expected_image(m, basis, &psi_transition(mu, t), p)? {
                c.expect(d, img == exp, || format!("Ψ.f_{{{mu}, {t}}} is not the predicted multiple"));
            }
            for i in 1..m.n() {
                let img = match apply_sigma(m, i, &f.element, &f.z_weight) {
                    Ok((v, _)) => v,
                    Err(Error::SpectrumNotSimple(_)) => continue,
                    Err(e) => return Err(e),
                };
                if let Some(exp) = expected_image(m, basis, &sigma_transition(i, mu, t), p)? {
                    c.expect(d, img == exp, || format!("σ_{i}.f_{{{mu}, {t}}} is not the predicted multiple"));
                }
            }
        }
    }
    Ok(c)
}

/// σ_i² and the braid relation on eigenfunctions, where defined.
pub fn check_sigma_relations(m: &TruncatedModule, basis: &Eigenbasis) -> Result<CheckResult> {
    let r = m.r();
    let p = m.point();
    let rc0 = q(r, &(p.c0() * crate::scalars::int(r as i64)));
    let mut c = CheckResult::new("sigma-relations");
    let chain = |f: &Eigenfunction, word: &[usize]| -> Result<Option<ModuleElement>> {
        let (mut v, mut w) = (f.element.clone(), f.z_weight.clone());
        for &i in word {
            match apply_sigma(m, i, &v, &w) {
                Ok((v2, w2)) => {
                    v = v2;
                    w = w2;
                }
                Err(Error::SpectrumNotSimple(_)) => return Ok(None),
                Err(e) => return Err(e),
            }
        }
        Ok(Some(v))
    };
    for (d, labels) in basis.degrees.iter().enumerate() {
        let d = d as u32;
        for label in labels {
            let f = &basis.by_label[label];
            for i in 1..m.n() {
                if let Some(v) = chain(f, &[i, i])? {
                    let delta = &f.z_weight[i - 1] - &f.z_weight[i];
                    let same = f.t_weight[i - 1] == f.t_weight[i];
                    let factor = if same {
                        let num = &(&delta - &rc0) * &(&delta + &rc0);
                        &num * &(&delta * &delta).inv()?
                    } else {
                        Cyclotomic::one(r)
                    };
                    c.expect(d, v == f.element.scale(&factor), || format!("σ_{i}² fails on f_{:?}", label));
                }
                if i + 1 < m.n() {
                    if let (Some(a), Some(b)) = (chain(f, &[i, i + 1, i])?, chain(f, &[i + 1, i, i + 1])?) {
                        c.expect(d, a == b, || format!("braid relation for σ_{i}, σ_{} fails on f_{:?}", i + 1, label));
                    }
                }
            }
        }
    }
    Ok(c)
}
