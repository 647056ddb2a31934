use std::fmt;

use crate::combinatorics::{Composition, Perm};

/// An element of G(r,1,n), acting on C^n by g.e_k = ζ^{a_k} e_{w(k)}.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupElement {
    r: u32,
    perm: Perm,
    exps: Vec<u32>,
}

impl GroupElement {
    pub fn new(r: u32, perm: Perm, exps: Vec<i64>) -> Self {
        assert_eq!(perm.n(), exps.len());
        let exps = exps.into_iter().map(|a| a.rem_euclid(r as i64) as u32).collect();
        GroupElement { r, perm, exps }
    }

    pub fn identity(r: u32, n: usize) -> Self {
        GroupElement { r, perm: Perm::identity(n), exps: vec![0; n] }
    }

    pub fn from_perm(r: u32, perm: Perm) -> Self {
        let n = perm.n();
        GroupElement { r, perm, exps: vec![0; n] }
    }

    /// s_i for 1-based i.
    pub fn simple(r: u32, n: usize, i: usize) -> Self {
        Self::from_perm(r, Perm::simple(n, i))
    }

    /// ζ_i^l for 1-based i.
    pub fn zeta(r: u32, n: usize, i: usize, l: i64) -> Self {
        let mut exps = vec![0; n];
        exps[i - 1] = l;
        Self::new(r, Perm::identity(n), exps)
    }

    /// The reflection ζ_i^l s_{ij} ζ_i^{−l}, 1-based i ≠ j.
    pub fn reflection(r: u32, n: usize, i: usize, j: usize, l: i64) -> Self {
        assert!(i != j);
        let mut exps = vec![0; n];
        exps[i - 1] = -l;
        exps[j - 1] = l;
        Self::new(r, Perm::transposition(n, i - 1, j - 1), exps)
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn n(&self) -> usize {
        self.perm.n()
    }

    pub fn perm(&self) -> &Perm {
        &self.perm
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    /// self · other (other acts first).
    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        assert_eq!((self.r, self.n()), (other.r, other.n()));
        let exps = (0..self.n()).map(|k| (other.exps[k] + self.exps[other.perm.apply(k)]) % self.r).collect();
        GroupElement { r: self.r, perm: self.perm.compose(&other.perm), exps }
    }

    pub fn inverse(&self) -> GroupElement {
        let mut exps = vec![0; self.n()];
        for k in 0..self.n() {
            exps[self.perm.apply(k)] = (self.r - self.exps[k]) % self.r;
        }
        GroupElement { r: self.r, perm: self.perm.inverse(), exps }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity() && self.exps.iter().all(|&a| a == 0)
    }

    /// g.x^μ = ζ^e x^{w.μ}; returns (w.μ, e mod r).
    pub fn act_on_monomial(&self, mu: &Composition) -> (Composition, u32) {
        let r = self.r as u64;
        let e: u64 = self.exps.iter().zip(mu.entries()).map(|(&a, &m)| a as u64 * m as u64).sum();
        let e = ((r - e % r) % r) as u32;
        (mu.act(&self.perm), e)
    }

    /// The diagonal part of the factorization g = D·P_w: exponent c_m of ζ_m.
    pub fn diagonal_exponents(&self) -> Vec<u32> {
        let winv = self.perm.inverse();
        (0..self.n()).map(|m| self.exps[winv.apply(m)]).collect()
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {:?})", self.perm, self.exps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn matrix_of(g: &GroupElement) -> Vec<(usize, u32)> {
        (0..g.n()).map(|k| (g.perm.apply(k), g.exps[k])).collect()
    }

    fn compose_as_monomial_matrices(a: &GroupElement, b: &GroupElement) -> Vec<(usize, u32)> {
        let (ma, mb) = (matrix_of(a), matrix_of(b));
        mb.iter().map(|&(t, e)| (ma[t].0, (e + ma[t].1) % a.r)).collect()
    }

    #[test]
    fn composition_is_matrix_product() {
        let r = 3;
        let g = GroupElement::reflection(r, 3, 1, 3, 2);
        let h = GroupElement::simple(r, 3, 2).compose(&GroupElement::zeta(r, 3, 2, 1));
        assert_eq!(matrix_of(&g.compose(&h)), compose_as_monomial_matrices(&g, &h));
        assert!(g.compose(&g.inverse()).is_identity());
        assert!(h.inverse().compose(&h).is_identity());
    }

    #[test]
    fn reflection_matches_conjugation() {
        let r = 4;
        let (zi, s) = (GroupElement::zeta(r, 3, 1, 3), GroupElement::from_perm(r, Perm::transposition(3, 0, 2)));
        let conj = zi.compose(&s).compose(&zi.inverse());
        assert_eq!(conj, GroupElement::reflection(r, 3, 1, 3, 3));
        assert!(conj.compose(&conj).is_identity());
    }

    #[test]
    fn monomial_action() {
        let r = 2;
        let (mu, e) = GroupElement::zeta(r, 1, 1, 1).act_on_monomial(&Composition::new(vec![1]));
        assert_eq!((mu.entries().to_vec(), e), (vec![1], 1));
        let (mu, e) = GroupElement::simple(1, 2, 1).act_on_monomial(&Composition::new(vec![1, 0]));
        assert_eq!((mu.entries().to_vec(), e), (vec![0, 1], 0));
        let g = GroupElement::reflection(3, 2, 1, 2, 1);
        let (mu, e) = g.act_on_monomial(&Composition::new(vec![1, 0]));
        assert_eq!((mu.entries().to_vec(), e), (vec![0, 1], 1));
    }
}
