use std::collections::BTreeMap;

use super::module::{Label, ModuleElement, TruncatedModule};
use crate::combinatorics::{Composition, StandardTableau};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalars::Cyclotomic;

/// Which of the two expressions for z_i to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZForm {
    /// y_i x_i + c₀φ_i; needs one degree of headroom.
    YX,
    /// x_i y_i + κ − Σ(d_j − d_{j−1})e_{ij} − c₀Σ_{j>i}; always fits.
    XY,
}

/// A Hermitian Gram matrix on the degree-d block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramBlock {
    pub degree: u32,
    pub matrix: Matrix,
}

impl GramBlock {
    pub fn is_hermitian(&self) -> bool {
        self.matrix.conj_transpose() == self.matrix
    }

    /// ⟨u, v⟩ = uᵀ G v̄.
    pub fn pair(&self, u: &[Cyclotomic], v: &[Cyclotomic]) -> Cyclotomic {
        let vbar: Vec<Cyclotomic> = v.iter().map(Cyclotomic::conj).collect();
        let gv = self.matrix.mul_vec(&vbar);
        let mut out = Cyclotomic::zero(self.matrix.r());
        for (a, b) in u.iter().zip(&gv) {
            if !a.is_zero() && !b.is_zero() {
                out += &(a * b);
            }
        }
        out
    }
}

impl TruncatedModule {
    /// z_1, …, z_n on the degree-d block in the monomial basis.
    pub fn z_matrices(&self, d: u32, form: ZForm) -> Result<Vec<Matrix>> {
        (1..=self.n())
            .map(|i| match form {
                ZForm::XY => self.operator_block(d, d, |v| Ok(self.apply_z_xy(i, v))),
                ZForm::YX => self.operator_block(d, d, |v| self.apply_z_yx(i, v)),
            })
            .collect()
    }

    pub fn t_zeta_matrices(&self, d: u32) -> Result<Vec<Matrix>> {
        (1..=self.n()).map(|i| self.operator_block(d, d, |v| Ok(self.apply_group(&self.zeta(i, 1), v)))).collect()
    }

    /// y_i from degree d to degree d − 1.
    pub fn y_matrix(&self, i: usize, d: u32) -> Result<Matrix> {
        if d == 0 {
            return Err(Error::InvalidInput("y_i has no degree −1 target".into()));
        }
        self.operator_block(d, d - 1, |v| Ok(self.apply_y(i, v)))
    }

    /// Gram blocks of degrees 0..=d via ⟨x_i a, b⟩ = ⟨a, y_i b⟩.
    pub fn gram_blocks(&self, d: u32) -> Result<Vec<GramBlock>> {
        if d > self.maxdeg() {
            return Err(Error::TruncationExceeded { degree: d as usize, max: self.maxdeg() as usize });
        }
        let r = self.r();
        let base = Matrix::diagonal(
            r,
            &self.rep().gammas().iter().map(|g| Cyclotomic::from_rational(r, g.clone())).collect::<Vec<_>>(),
        );
        let mut out = vec![GramBlock { degree: 0, matrix: base }];
        for deg in 1..=d {
            let prev = &out[deg as usize - 1].matrix;
            let size = self.block_dim(deg);
            let mut g = Matrix::zeros(r, size, size);
            let mut by_var: BTreeMap<usize, Matrix> = BTreeMap::new();
            for pos in 0..size {
                let (mu, k) = self.label(deg, pos);
                let i = mu.entries().iter().position(|&m| m > 0).expect("positive degree") + 1;
                if let std::collections::btree_map::Entry::Vacant(e) = by_var.entry(i) {
                    let y = self.y_matrix(i, deg)?;
                    e.insert(prev.mul(&y.conj()));
                }
                let h = &by_var[&i];
                let mut low = mu.entries().to_vec();
                low[i - 1] -= 1;
                let row = self.position(&(Composition::new(low), k)).expect("lowered label");
                for col in 0..size {
                    g.set(pos, col, h.get(row, col).clone());
                }
            }
            out.push(GramBlock { degree: deg, matrix: g });
        }
        Ok(out)
    }

    pub fn gram_block(&self, d: u32) -> Result<GramBlock> {
        Ok(self.gram_blocks(d)?.pop().expect("nonempty"))
    }

    /// z_i and t_{ζ_i} on the degree-d block in the twisted basis.
    pub fn twisted_weight_operators(&self, d: u32) -> Result<(Vec<Matrix>, Vec<Matrix>)> {
        let z =
            (1..=self.n()).map(|i| self.twisted_operator(d, |v| Ok(self.apply_z_xy(i, v)))).collect::<Result<_>>()?;
        let t = (1..=self.n())
            .map(|i| self.twisted_operator(d, |v| Ok(self.apply_group(&self.zeta(i, 1), v))))
            .collect::<Result<_>>()?;
        Ok((z, t))
    }

    /// The joint eigenvectors f_{μ,T}, |μ| = d, normalized to have coefficient
    /// 1 on x^μ ⊗ v_T^μ.
    pub fn joint_eigenbasis(&self, d: u32) -> Result<Vec<Eigenfunction>> {
        let (z, t) = self.twisted_weight_operators(d)?;
        let size = self.block_dim(d);
        let ops: Vec<&Matrix> = t.iter().chain(z.iter()).collect();
        let mut out = Vec::with_capacity(size);
        for j in 0..size {
            let mut c = vec![Cyclotomic::zero(self.r()); size];
            c[j] = Cyclotomic::one(self.r());
            for i in (0..j).rev() {
                let mut chosen = None;
                for op in &ops {
                    let diff = op.get(i, i) - op.get(j, j);
                    if !diff.is_zero() {
                        chosen = Some((*op, diff));
                        break;
                    }
                }
                let rhs_of = |op: &Matrix| {
                    let mut acc = Cyclotomic::zero(self.r());
                    for (k, ck) in c.iter().enumerate().take(j + 1).skip(i + 1) {
                        if !ck.is_zero() {
                            let a = op.get(i, k);
                            if !a.is_zero() {
                                acc += &(a * ck);
                            }
                        }
                    }
                    acc
                };
                match chosen {
                    Some((op, diff)) => {
                        let acc = rhs_of(op);
                        if !acc.is_zero() {
                            c[i] = -(&acc * &diff.inv()?);
                        }
                    }
                    None => {
                        return Err(Error::SpectrumNotSimple(format!(
                            "{:?} and {:?} share a weight",
                            self.label(d, i),
                            self.label(d, j)
                        )));
                    }
                }
            }
            for op in &ops {
                let lam = op.get(j, j);
                if op.mul_vec(&c) != c.iter().map(|x| x * lam).collect::<Vec<_>>() {
                    return Err(Error::SpectrumNotSimple(format!(
                        "no eigenvector with leading term {:?}: the weight space is not semisimple",
                        self.label(d, j)
                    )));
                }
            }
            let (mu, k) = self.label(d, j);
            let z_weight = z.iter().map(|m| m.get(j, j).clone()).collect();
            let t_weight = t.iter().map(|m| m.get(j, j).clone()).collect();
            out.push(Eigenfunction { label: (mu, k), element: self.from_twisted(d, &c), z_weight, t_weight });
        }
        Ok(out)
    }

    pub fn eigen_tableau(&self, f: &Eigenfunction) -> &StandardTableau {
        self.tableau(f.label.1)
    }
}

/// f_{μ,T} with its eigenvalues.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Eigenfunction {
    pub label: Label,
    pub element: ModuleElement,
    pub z_weight: Vec<Cyclotomic>,
    pub t_weight: Vec<Cyclotomic>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::MultiPartition;
    use crate::scalars::{int, rat, ParamPoint, Rational};

    fn row2() -> TruncatedModule {
        let p = ParamPoint::new(1, rat(5, 3), rat(2, 7), vec![int(0)]).unwrap();
        TruncatedModule::new(&MultiPartition::from_parts(&[&[2]]), &p, 2).unwrap()
    }

    fn c(q: Rational) -> Cyclotomic {
        Cyclotomic::from_rational(1, q)
    }

    #[test]
    fn gram_degree_one() {
        let m = row2();
        let (kappa, c0) = (rat(5, 3), rat(2, 7));
        let g = m.gram_block(1).unwrap();
        assert!(g.is_hermitian());
        assert_eq!(g.matrix.get(0, 0), &c(&kappa - &c0));
        assert_eq!(g.matrix.get(1, 1), &c(&kappa - &c0));
        assert_eq!(g.matrix.get(0, 1), &c(c0.clone()));
    }

    #[test]
    fn eigenfunctions_degree_one() {
        let m = row2();
        let (kappa, c0) = (rat(5, 3), rat(2, 7));
        let fs = m.joint_eigenbasis(1).unwrap();
        let x1 = Composition::new(vec![1, 0]);
        let x2 = Composition::new(vec![0, 1]);
        let f10 = fs.iter().find(|f| f.label.0 == x1).unwrap();
        let expected =
            ModuleElement::basis(1, x1, 0).sub(&ModuleElement::basis(1, x2.clone(), 0).scale(&c(&c0 / (&kappa - &c0))));
        assert_eq!(f10.element, expected);
        let f01 = fs.iter().find(|f| f.label.0 == x2).unwrap();
        assert_eq!(f01.element, ModuleElement::basis(1, x2, 0));
    }
}
