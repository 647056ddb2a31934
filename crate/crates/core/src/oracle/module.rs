use std::collections::{BTreeMap, HashMap};

use crate::combinatorics::{Composition, MultiPartition, StandardTableau};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalars::{Cyclotomic, ParamPoint};
use crate::wreath::{build_rep, GroupElement, SeminormalRep};

/// A basis label x^μ ⊗ v_{T_k}.
pub type Label = (Composition, usize);

/// A finite combination of basis labels with nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleElement {
    r: u32,
    terms: BTreeMap<Label, Cyclotomic>,
}

impl ModuleElement {
    pub fn zero(r: u32) -> Self {
        ModuleElement { r, terms: BTreeMap::new() }
    }

    pub fn basis(r: u32, mu: Composition, k: usize) -> Self {
        let mut e = Self::zero(r);
        e.add_term((mu, k), &Cyclotomic::one(r));
        e
    }

    /// x^μ ⊗ u for a coordinate vector u.
    pub fn from_vector(r: u32, mu: &Composition, u: &[Cyclotomic]) -> Self {
        let mut e = Self::zero(r);
        for (k, c) in u.iter().enumerate() {
            e.add_term((mu.clone(), k), c);
        }
        e
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn add_term(&mut self, label: Label, c: &Cyclotomic) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&label) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.terms.remove(&label);
                }
            }
            None => {
                self.terms.insert(label, c.clone());
            }
        }
    }

    pub fn add_vector(&mut self, mu: &Composition, u: &[Cyclotomic], scale: &Cyclotomic) {
        for (k, c) in u.iter().enumerate() {
            if !c.is_zero() {
                self.add_term((mu.clone(), k), &(c * scale));
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Label, &Cyclotomic)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, label: &Label) -> Cyclotomic {
        self.terms.get(label).cloned().unwrap_or_else(|| Cyclotomic::zero(self.r))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(mu, _)| mu.degree()).max()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.add_term(l.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.add_term(l.clone(), &-c);
        }
        out
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        let mut out = Self::zero(self.r);
        if c.is_zero() {
            return out;
        }
        for (l, x) in &self.terms {
            out.terms.insert(l.clone(), x * c);
        }
        out
    }

    /// Coefficients grouped by monomial, as dense vectors in S^λ.
    pub fn by_monomial(&self, dim: usize) -> BTreeMap<Composition, Vec<Cyclotomic>> {
        let mut out: BTreeMap<Composition, Vec<Cyclotomic>> = BTreeMap::new();
        for ((mu, k), c) in &self.terms {
            out.entry(mu.clone()).or_insert_with(|| vec![Cyclotomic::zero(self.r); dim])[*k] = c.clone();
        }
        out
    }
}

/// Monomials of one degree with the matrices of t_{w_μ}^{±1} on S^λ.
#[derive(Clone, Debug)]
pub(crate) struct DegreeBlock {
    pub comps: Vec<Composition>,
    pub position: HashMap<Composition, usize>,
    /// t_{w_μ}^{-1}: columns are the v_T^μ.
    pub twist: Vec<Matrix>,
    /// t_{w_μ}.
    pub untwist: Vec<Matrix>,
}

/// M(λ) = C[x] ⊗ S^λ cut off above degree `maxdeg`, at a rational point.
#[derive(Clone, Debug)]
pub struct TruncatedModule {
    rep: SeminormalRep,
    point: ParamPoint,
    maxdeg: u32,
    blocks: Vec<DegreeBlock>,
    /// t_{ζ_i^l s_{ij} ζ_i^{-l}} on S^λ, keyed by 1-based (i, j, l).
    reflections: HashMap<(usize, usize, u32), Matrix>,
    /// e_{i,j} on S^λ, `idempotents[i-1][j]`.
    idempotents: Vec<Vec<Matrix>>,
}

impl TruncatedModule {
    pub fn new(shape: &MultiPartition, point: &ParamPoint, maxdeg: u32) -> Result<Self> {
        if shape.r() != point.r() {
            return Err(Error::SizeMismatch { left: shape.r() as usize, right: point.r() as usize });
        }
        let rep = build_rep(shape);
        let (r, n) = (rep.r(), rep.n());
        let blocks = (0..=maxdeg)
            .map(|d| {
                let mut comps = Composition::all_of_degree(n, d);
                comps.sort_by(|a, b| a.linear_cmp(b));
                let position = comps.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect();
                let twist =
                    comps.iter().map(|mu| rep.matrix(&GroupElement::from_perm(r, mu.wmu().inverse()))).collect();
                let untwist = comps.iter().map(|mu| rep.matrix(&GroupElement::from_perm(r, mu.wmu()))).collect();
                DegreeBlock { comps, position, twist, untwist }
            })
            .collect();
        let mut reflections = HashMap::new();
        for i in 1..=n {
            for j in (1..=n).filter(|&j| j != i) {
                for l in 0..r {
                    reflections.insert((i, j, l), rep.matrix(&GroupElement::reflection(r, n, i, j, l as i64)));
                }
            }
        }
        let idempotents = (1..=n)
            .map(|i| {
                let powers: Vec<Matrix> = (0..r).map(|l| rep.matrix(&GroupElement::zeta(r, n, i, l as i64))).collect();
                (0..r as i64)
                    .map(|j| {
                        let mut e = Matrix::zeros(r, rep.dim(), rep.dim());
                        for (l, m) in powers.iter().enumerate() {
                            e = e.add(&m.scale(&Cyclotomic::zeta_pow(r, -(l as i64) * j)));
                        }
                        e.scale_rational(&crate::scalars::rat(1, r as i64))
                    })
                    .collect()
            })
            .collect();
        Ok(TruncatedModule { rep, point: point.clone(), maxdeg, blocks, reflections, idempotents })
    }

    pub fn rep(&self) -> &SeminormalRep {
        &self.rep
    }

    pub fn shape(&self) -> &MultiPartition {
        self.rep.shape()
    }

    pub fn point(&self) -> &ParamPoint {
        &self.point
    }

    pub fn maxdeg(&self) -> u32 {
        self.maxdeg
    }

    pub fn n(&self) -> usize {
        self.rep.n()
    }

    pub fn r(&self) -> u32 {
        self.rep.r()
    }

    pub fn tableau(&self, k: usize) -> &StandardTableau {
        self.rep.tableau(k)
    }

    pub(crate) fn block(&self, d: u32) -> &DegreeBlock {
        &self.blocks[d as usize]
    }

    /// Monomials of degree d in basis order.
    pub fn monomials(&self, d: u32) -> &[Composition] {
        &self.blocks[d as usize].comps
    }

    pub fn block_dim(&self, d: u32) -> usize {
        self.blocks[d as usize].comps.len() * self.rep.dim()
    }

    /// #SYT(λ)·C(N+n, n).
    pub fn dim(&self) -> usize {
        (0..=self.maxdeg).map(|d| self.block_dim(d)).sum()
    }

    pub fn label(&self, d: u32, pos: usize) -> Label {
        let s = self.rep.dim();
        (self.blocks[d as usize].comps[pos / s].clone(), pos % s)
    }

    pub fn position(&self, label: &Label) -> Option<usize> {
        let d = label.0.degree();
        let block = self.blocks.get(d as usize)?;
        block.position.get(&label.0).map(|i| i * self.rep.dim() + label.1)
    }

    fn cyc(&self, q: &crate::scalars::Rational) -> Cyclotomic {
        Cyclotomic::from_rational(self.r(), q.clone())
    }

    /// t_g(x^μ ⊗ u) = (g.x^μ) ⊗ t_g u.
    pub fn apply_group(&self, g: &GroupElement, v: &ModuleElement) -> ModuleElement {
        let r = self.r();
        let mut out = ModuleElement::zero(r);
        for (mu, u) in v.by_monomial(self.rep.dim()) {
            let (nu, e) = g.act_on_monomial(&mu);
            out.add_vector(&nu, &self.rep.apply(g, &u), &Cyclotomic::zeta_pow(r, e as i64));
        }
        out
    }

    /// x_i (1-based), refusing to leave the truncation.
    pub fn apply_x(&self, i: usize, v: &ModuleElement) -> Result<ModuleElement> {
        let mut out = ModuleElement::zero(self.r());
        for ((mu, k), c) in v.terms() {
            let mut e = mu.entries().to_vec();
            e[i - 1] += 1;
            let nu = Composition::new(e);
            if nu.degree() > self.maxdeg {
                return Err(Error::TruncationExceeded { degree: nu.degree() as usize, max: self.maxdeg as usize });
            }
            out.add_term((nu, *k), c);
        }
        Ok(out)
    }

    fn lowered(mu: &Composition, i: usize) -> Composition {
        let mut e = mu.entries().to_vec();
        e[i - 1] -= 1;
        Composition::new(e)
    }

    /// y_i (1-based) by the commutation formula for y_i x^μ, with y_i S^λ = 0.
    pub fn apply_y(&self, i: usize, v: &ModuleElement) -> ModuleElement {
        let r = self.r();
        let n = self.n();
        let p = &self.point;
        let mut out = ModuleElement::zero(r);
        for (mu, u) in v.by_monomial(self.rep.dim()) {
            let a = mu.get(i - 1);
            if a > 0 {
                let low = Self::lowered(&mu, i);
                out.add_vector(&low, &u, &self.cyc(&(p.kappa() * crate::scalars::int(a as i64))));
                let mut corr = vec![Cyclotomic::zero(r); u.len()];
                for j in 0..r as i64 {
                    let diff = self.idempotents[i - 1][j as usize]
                        .sub(&self.idempotents[i - 1][(j + a as i64).rem_euclid(r as i64) as usize]);
                    let w = diff.mul_vec(&u);
                    let dj = self.cyc(p.d(j));
                    for (c, x) in corr.iter_mut().zip(&w) {
                        *c += &(x * &dj);
                    }
                }
                out.add_vector(&low, &corr, &Cyclotomic::from_rational(r, crate::scalars::int(-1)));
            }
            let mc0 = self.cyc(&-p.c0());
            for j in (1..=n).filter(|&j| j != i) {
                let b = mu.get(j - 1);
                if a == b {
                    continue;
                }
                for l in 0..r {
                    let tu = self.reflections[&(i, j, l)].mul_vec(&u);
                    let li = l as i64;
                    let (top, bot, sign) = if a > b { (a, b, 1) } else { (b, a, -1) };
                    for k in 0..(top - bot) {
                        let mut e = mu.entries().to_vec();
                        e[i - 1] = top - 1 - k;
                        e[j - 1] = bot + k;
                        let zpow = if a > b { li * k as i64 } else { li * (a as i64 + k as i64 - b as i64) };
                        let coeff = &Cyclotomic::zeta_pow(r, zpow) * &mc0;
                        let coeff = if sign < 0 { -coeff } else { coeff };
                        out.add_vector(&Composition::new(e), &tu, &coeff);
                    }
                }
            }
        }
        out
    }

    pub fn zeta(&self, i: usize, l: i64) -> GroupElement {
        GroupElement::zeta(self.r(), self.n(), i, l)
    }

    pub fn reflection(&self, i: usize, j: usize, l: u32) -> GroupElement {
        GroupElement::reflection(self.r(), self.n(), i, j, l as i64)
    }

    /// e_{ij} = (1/r) Σ_l ζ^{−lj} t_{ζ_i^l} acting on the module.
    pub fn apply_idempotent(&self, i: usize, j: i64, v: &ModuleElement) -> ModuleElement {
        let r = self.r();
        let mut out = ModuleElement::zero(r);
        for l in 0..r as i64 {
            let w = self.apply_group(&self.zeta(i, l), v);
            out = out.add(&w.scale(&Cyclotomic::zeta_pow(r, -l * j)));
        }
        out.scale(&Cyclotomic::from_rational(r, crate::scalars::rat(1, r as i64)))
    }

    /// z_i = y_i x_i + c₀ Σ_{j<i} Σ_l t_{ζ_i^l s_{ij} ζ_i^{−l}}.
    pub fn apply_z_yx(&self, i: usize, v: &ModuleElement) -> Result<ModuleElement> {
        let mut out = self.apply_y(i, &self.apply_x(i, v)?);
        let c0 = self.cyc(self.point.c0());
        for j in 1..i {
            for l in 0..self.r() {
                out = out.add(&self.apply_group(&self.reflection(i, j, l), v).scale(&c0));
            }
        }
        Ok(out)
    }

    /// z_i = x_i y_i + κ − Σ_j (d_j − d_{j−1}) e_{ij} − c₀ Σ_{j>i} Σ_l t_{ζ_i^l s_{ij} ζ_i^{−l}}.
    pub fn apply_z_xy(&self, i: usize, v: &ModuleElement) -> ModuleElement {
        let p = &self.point;
        let yv = self.apply_y(i, v);
        let mut out = self.apply_x(i, &yv).expect("x_i y_i preserves degree");
        out = out.add(&v.scale(&self.cyc(p.kappa())));
        for j in 0..self.r() as i64 {
            let coeff = self.cyc(&(p.d(j) - p.d(j - 1)));
            out = out.sub(&self.apply_idempotent(i, j, v).scale(&coeff));
        }
        let c0 = self.cyc(p.c0());
        for j in i + 1..=self.n() {
            for l in 0..self.r() {
                out = out.sub(&self.apply_group(&self.reflection(i, j, l), v).scale(&c0));
            }
        }
        out
    }

    /// Φ = x_n t_{s_{n−1}⋯s_1}.
    pub fn apply_phi(&self, v: &ModuleElement) -> Result<ModuleElement> {
        let (r, n) = (self.r(), self.n());
        let mut g = GroupElement::identity(r, n);
        for i in 1..n {
            g = GroupElement::simple(r, n, i).compose(&g);
        }
        self.apply_x(n, &self.apply_group(&g, v))
    }

    /// Ψ = y_1 t_{s_1⋯s_{n−1}}.
    pub fn apply_psi(&self, v: &ModuleElement) -> ModuleElement {
        let (r, n) = (self.r(), self.n());
        let mut g = GroupElement::identity(r, n);
        for i in (1..n).rev() {
            g = GroupElement::simple(r, n, i).compose(&g);
        }
        self.apply_y(1, &self.apply_group(&g, v))
    }

    /// Coordinates of the degree-d part of v in the block basis.
    pub fn to_block(&self, d: u32, v: &ModuleElement) -> Vec<Cyclotomic> {
        let mut out = vec![Cyclotomic::zero(self.r()); self.block_dim(d)];
        for (label, c) in v.terms() {
            if label.0.degree() == d {
                out[self.position(label).expect("label inside the truncation")] = c.clone();
            }
        }
        out
    }

    pub fn from_block(&self, d: u32, coords: &[Cyclotomic]) -> ModuleElement {
        let mut out = ModuleElement::zero(self.r());
        for (pos, c) in coords.iter().enumerate() {
            out.add_term(self.label(d, pos), c);
        }
        out
    }

    /// Matrix of a linear map from the degree-`from` block to the degree-`to`
    /// block, columns being images of basis vectors.
    pub fn operator_block<F>(&self, from: u32, to: u32, f: F) -> Result<Matrix>
    where
        F: Fn(&ModuleElement) -> Result<ModuleElement> + Sync,
    {
        use rayon::prelude::*;
        let cols: Vec<Vec<Cyclotomic>> = (0..self.block_dim(from))
            .into_par_iter()
            .map(|pos| {
                let (mu, k) = self.label(from, pos);
                let img = f(&ModuleElement::basis(self.r(), mu, k))?;
                Ok(self.to_block(to, &img))
            })
            .collect::<Result<_>>()?;
        Ok(Matrix::from_columns(self.r(), self.block_dim(to), &cols))
    }

    /// x^μ ⊗ v_T^μ.
    pub fn twisted_element(&self, mu: &Composition, k: usize) -> ModuleElement {
        let block = self.block(mu.degree());
        let m = &block.twist[block.position[mu]];
        ModuleElement::from_vector(self.r(), mu, &m.column(k))
    }

    /// Coordinates of the degree-d part of v in the twisted basis.
    pub fn to_twisted(&self, d: u32, v: &ModuleElement) -> Vec<Cyclotomic> {
        let s = self.rep.dim();
        let block = self.block(d);
        let mut out = vec![Cyclotomic::zero(self.r()); self.block_dim(d)];
        for (mu, u) in v.by_monomial(s) {
            if mu.degree() != d {
                continue;
            }
            let i = block.position[&mu];
            for (k, c) in block.untwist[i].mul_vec(&u).into_iter().enumerate() {
                out[i * s + k] = c;
            }
        }
        out
    }

    pub fn from_twisted(&self, d: u32, coords: &[Cyclotomic]) -> ModuleElement {
        let s = self.rep.dim();
        let block = self.block(d);
        let mut out = ModuleElement::zero(self.r());
        for (i, mu) in block.comps.iter().enumerate() {
            let u = &coords[i * s..(i + 1) * s];
            if u.iter().all(Cyclotomic::is_zero) {
                continue;
            }
            out.add_vector(mu, &block.twist[i].mul_vec(u), &Cyclotomic::one(self.r()));
        }
        out
    }

    /// Matrix of a degree-preserving map in the twisted basis of degree d.
    pub fn twisted_operator<F>(&self, d: u32, f: F) -> Result<Matrix>
    where
        F: Fn(&ModuleElement) -> Result<ModuleElement> + Sync,
    {
        use rayon::prelude::*;
        let s = self.rep.dim();
        let block = self.block(d);
        let cols: Vec<Vec<Cyclotomic>> = (0..self.block_dim(d))
            .into_par_iter()
            .map(|pos| {
                let img = f(&self.twisted_element(&block.comps[pos / s], pos % s))?;
                Ok(self.to_twisted(d, &img))
            })
            .collect::<Result<_>>()?;
        Ok(Matrix::from_columns(self.r(), self.block_dim(d), &cols))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{int, rat};

    fn row2(maxdeg: u32) -> TruncatedModule {
        let p = ParamPoint::new(1, rat(5, 3), rat(2, 7), vec![int(0)]).unwrap();
        TruncatedModule::new(&MultiPartition::from_parts(&[&[2]]), &p, maxdeg).unwrap()
    }

    fn c(r: u32, q: crate::scalars::Rational) -> Cyclotomic {
        Cyclotomic::from_rational(r, q)
    }

    #[test]
    fn small_actions() {
        let m = row2(2);
        let (kappa, c0) = (rat(5, 3), rat(2, 7));
        let x1 = ModuleElement::basis(1, Composition::new(vec![1, 0]), 0);
        let x2 = ModuleElement::basis(1, Composition::new(vec![0, 1]), 0);
        let v = ModuleElement::basis(1, Composition::zero(2), 0);
        assert_eq!(m.apply_y(1, &x1), v.scale(&c(1, &kappa - &c0)));
        assert_eq!(m.apply_y(1, &x2), v.scale(&c(1, c0.clone())));
        assert!(m.apply_y(1, &v).is_zero());
        assert_eq!(m.apply_x(1, &v).unwrap(), x1);
        assert_eq!(m.apply_group(&GroupElement::simple(1, 2, 1), &x1), x2);
        assert!(matches!(m.apply_x(1, &m.apply_x(1, &x1).unwrap()), Err(Error::TruncationExceeded { .. })));
        assert_eq!(m.dim(), 6);
    }

    #[test]
    fn z_block_degree_one() {
        let m = row2(2);
        let (kappa, c0) = (rat(5, 3), rat(2, 7));
        let z1 = m.operator_block(1, 1, |v| Ok(m.apply_z_xy(1, v))).unwrap();
        let two = int(2);
        let expected = Matrix::from_columns(
            1,
            2,
            &[vec![c(1, &two * &kappa - &c0), c(1, -c0.clone())], vec![c(1, int(0)), c(1, kappa.clone())]],
        );
        let order: Vec<_> = m.monomials(1).to_vec();
        if order[0] == Composition::new(vec![1, 0]) {
            assert_eq!(z1, expected);
        } else {
            assert_eq!(z1.get(1, 1), expected.get(0, 0));
            assert_eq!(z1.get(0, 1), expected.get(1, 0));
        }
        let zyx = m.operator_block(1, 1, |v| m.apply_z_yx(1, v)).unwrap();
        assert_eq!(z1, zyx);
    }

    #[test]
    fn zeta_on_monomials() {
        let p = ParamPoint::new(2, int(1), rat(1, 3), vec![rat(1, 5), rat(-1, 5)]).unwrap();
        let m = TruncatedModule::new(&MultiPartition::from_parts(&[&[1], &[]]), &p, 1).unwrap();
        let x1 = ModuleElement::basis(2, Composition::new(vec![1]), 0);
        assert_eq!(m.apply_group(&m.zeta(1, 1), &x1), x1.scale(&c(2, int(-1))));
    }
}
