use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of {0, …, n−1}; `w.apply(i)` is w(i).
///
/// Compositions are acted on by (w.μ)_i = μ_{w⁻¹(i)}, and products compose
/// right to left: (u·v)(i) = u(v(i)).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    /// The longest element i ↦ n−1−i.
    pub fn longest(n: usize) -> Self {
        Perm((0..n).rev().collect())
    }

    /// The simple transposition s_i swapping i−1 and i (0-based positions),
    /// i.e. s_i in 1-based notation for 1 ≤ i ≤ n−1.
    pub fn simple(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "s_{i} out of range for n = {n}");
        let mut v: Vec<usize> = (0..n).collect();
        v.swap(i - 1, i);
        Perm(v)
    }

    /// The transposition of two 0-based positions.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut v: Vec<usize> = (0..n).collect();
        v.swap(a, b);
        Perm(v)
    }

    /// The long cycle c = (1 2 ⋯ n), sending i ↦ i+1 mod n.
    pub fn long_cycle(n: usize) -> Self {
        Perm((0..n).map(|i| (i + 1) % n).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::InvalidInput(format!("not a permutation: {images:?}")));
            }
            seen[x] = true;
        }
        Ok(Perm(images))
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (i, &w) in self.0.iter().enumerate() {
            inv[w] = i;
        }
        Perm(inv)
    }

    /// u·v, applying v first.
    pub fn compose(&self, v: &Perm) -> Perm {
        Perm(v.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &w)| i == w)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let n = self.0.len();
        (0..n).map(|i| (i + 1..n).filter(|&j| self.0[i] > self.0[j]).count()).sum()
    }

    /// A reduced word: indices i₁ … i_k (1-based) with w = s_{i₁} ⋯ s_{i_k}.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.0.clone();
        let mut word = Vec::new();
        // strip right descents: w = (w s_i) s_i with ℓ(w s_i) < ℓ(w)
        while let Some(i) = (0..w.len().saturating_sub(1)).find(|&i| w[i] > w[i + 1]) {
            w.swap(i, i + 1);
            word.push(i + 1);
        }
        word.reverse();
        word
    }

    /// Acts on a sequence: (w.μ)_i = μ_{w⁻¹(i)}.
    pub fn act<T: Clone>(&self, mu: &[T]) -> Vec<T> {
        let mut out = mu.to_vec();
        for (i, x) in mu.iter().enumerate() {
            out[self.0[i]] = x.clone();
        }
        out
    }

    /// Bruhat order u ≤ v, by comparing rank matrices
    /// u[i, j] = #{a ≤ i : u(a) ≥ j}.
    pub fn bruhat_leq(&self, v: &Perm) -> bool {
        assert_eq!(self.n(), v.n());
        let n = self.n();
        for i in 0..n {
            for j in 0..n {
                let cu = (0..=i).filter(|&a| self.0[a] >= j).count();
                let cv = (0..=i).filter(|&a| v.0[a] >= j).count();
                if cu > cv {
                    return false;
                }
            }
        }
        true
    }

    pub fn bruhat_lt(&self, v: &Perm) -> bool {
        self != v && self.bruhat_leq(v)
    }

    /// All permutations of n letters, lexicographically.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (0..n).collect();
        loop {
            out.push(Perm(current.clone()));
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| current[i] < current[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).unwrap();
            current.swap(i, j);
            current[i + 1..].reverse();
        }
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: Vec<String> = self.0.iter().map(|w| (w + 1).to_string()).collect();
        write!(f, "[{}]", text.join(" "))
    }
}

/// μ ∈ Z_{≥0}^n.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(entries: Vec<u32>) -> Self {
        Composition(entries)
    }

    pub fn zero(n: usize) -> Self {
        Composition(vec![0; n])
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// μ_i with 0-based i.
    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn max(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// w_μ, the longest permutation with w_μ.μ = μ⁻:
    /// w_μ(i) = #{j < i : μ_j < μ_i} + #{j ≥ i : μ_j ≤ μ_i}.
    pub fn wmu(&self) -> Perm {
        let mu = &self.0;
        let n = mu.len();
        let images = (0..n)
            .map(|i| {
                let before = (0..i).filter(|&j| mu[j] < mu[i]).count();
                let after = (i..n).filter(|&j| mu[j] <= mu[i]).count();
                before + after - 1
            })
            .collect();
        Perm(images)
    }

    /// Non-decreasing rearrangement μ⁻.
    pub fn minus(&self) -> Composition {
        let mut v = self.0.clone();
        v.sort_unstable();
        Composition(v)
    }

    /// Non-increasing rearrangement μ⁺.
    pub fn plus(&self) -> Composition {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Composition(v)
    }

    pub fn act(&self, w: &Perm) -> Composition {
        Composition(w.act(&self.0))
    }

    /// φ.μ = (μ₂, …, μ_n, μ₁ + 1).
    pub fn phi(&self) -> Composition {
        let mut v: Vec<u32> = self.0[1..].to_vec();
        v.push(self.0[0] + 1);
        Composition(v)
    }

    /// ψ.μ = (μ_n − 1, μ₁, …, μ_{n−1}); needs μ_n ≥ 1.
    pub fn psi(&self) -> Result<Composition> {
        let n = self.0.len();
        if n == 0 || self.0[n - 1] == 0 {
            return Err(Error::OutOfDomain(format!("ψ needs μ_n ≥ 1, got {self}")));
        }
        let mut v = vec![self.0[n - 1] - 1];
        v.extend_from_slice(&self.0[..n - 1]);
        Ok(Composition(v))
    }

    /// s_i.μ for 1-based i.
    pub fn swap(&self, i: usize) -> Composition {
        let mut v = self.0.clone();
        v.swap(i - 1, i);
        Composition(v)
    }

    /// All compositions of n parts with sum `degree`, lexicographically
    /// decreasing.
    pub fn all_of_degree(n: usize, degree: u32) -> Vec<Composition> {
        fn rec(n: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
            if prefix.len() + 1 == n {
                prefix.push(left);
                out.push(Composition(prefix.clone()));
                prefix.pop();
                return;
            }
            for first in (0..=left).rev() {
                prefix.push(first);
                rec(n, left - first, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if n == 0 {
            if degree == 0 {
                out.push(Composition(vec![]));
            }
            return out;
        }
        rec(n, degree, &mut Vec::new(), &mut out);
        out
    }

    /// All compositions with every entry below `bound`.
    pub fn all_bounded(n: usize, bound: u32) -> Vec<Composition> {
        let mut out = vec![Composition(Vec::new())];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|c| {
                    (0..bound).map(move |k| {
                        let mut v = c.0.clone();
                        v.push(k);
                        Composition(v)
                    })
                })
                .collect();
        }
        out
    }

    /// The partial order of the eigenbasis: μ < ν iff μ⁺ <_d ν⁺, or
    /// μ⁺ = ν⁺ and w_μ < w_ν in Bruhat order.
    pub fn order_lt(&self, other: &Composition) -> bool {
        if self.degree() != other.degree() || self.n() != other.n() {
            return false;
        }
        let (a, b) = (self.plus(), other.plus());
        if a == b {
            return self.wmu().bruhat_lt(&other.wmu());
        }
        dominance_leq(&a.0, &b.0).unwrap_or(false)
    }

    /// A key whose lexicographic order extends `order_lt` within a degree.
    pub fn linear_key(&self) -> (u32, Vec<u32>, usize, Vec<u32>) {
        (self.degree(), self.plus().0, self.wmu().length(), self.0.clone())
    }

    /// Total order compatible with `order_lt`.
    pub fn linear_cmp(&self, other: &Composition) -> Ordering {
        self.linear_key().cmp(&other.linear_key())
    }
}

impl From<Vec<u32>> for Composition {
    fn from(v: Vec<u32>) -> Self {
        Composition(v)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", text.join(","))
    }
}

/// Dominance a ≤_d b on partition-like sequences of equal total size.
pub fn dominance_leq<T: Copy + TryInto<u64>>(a: &[T], b: &[T]) -> Result<bool> {
    let wide = |x: T| -> u64 { x.try_into().ok().expect("part does not fit in u64") };
    let sa: u64 = a.iter().map(|&x| wide(x)).sum();
    let sb: u64 = b.iter().map(|&x| wide(x)).sum();
    if sa != sb {
        return Err(Error::SizeMismatch { left: sa as usize, right: sb as usize });
    }
    let len = a.len().max(b.len());
    let (mut pa, mut pb) = (0u64, 0u64);
    for i in 0..len {
        pa += a.get(i).map(|&x| wide(x)).unwrap_or(0);
        pb += b.get(i).map(|&x| wide(x)).unwrap_or(0);
        if pa > pb {
            return Ok(false);
        }
    }
    Ok(true)
}
