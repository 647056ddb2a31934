use num_integer::Integer;
use serde::Serialize;

use crate::combinatorics::{MultiPartition, Partition};
use crate::error::{Error, Result};
use crate::scalars::ParamPoint;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliffordReport {
    pub p_div: u32,
    pub orbit_k: u32,
    pub num_summands: u32,
    /// Graded dimensions of L(λ, q), the same for every q.
    pub graded_dims_per_summand: Vec<u64>,
    /// Set when n < 3, where the fixed subalgebra need not be the
    /// Cherednik algebra of G(r,p,n).
    pub small_n_warning: bool,
}

/// Least k ≥ 1 with C^{k·r/p}.λ = λ.
pub fn orbit_k(shape: &MultiPartition, p_div: u32) -> Result<u32> {
    let r = shape.r();
    if p_div == 0 || !r.is_multiple_of(p_div) {
        return Err(Error::InvalidInput(format!("p = {p_div} does not divide r = {r}")));
    }
    let step = (r / p_div) as usize;
    Ok((1..=p_div).find(|&k| &shape.cyclic_shift(k as usize * step) == shape).unwrap_or(p_div))
}

/// d_i = d_j whenever i ≡ j (mod r/p).
pub fn require_symmetric_d(p: &ParamPoint, p_div: u32) -> Result<()> {
    let r = p.r();
    let step = (r / p_div) as i64;
    for i in 0..r as i64 {
        if p.d(i) != p.d(i + step) {
            return Err(Error::PreconditionFailed(format!("d_{i} ≠ d_{} with r/p = {step}", (i + step) % r as i64)));
        }
    }
    Ok(())
}

/// Splits the graded dimensions of L(λ) over the C^{kr/p}-eigenspaces.
pub fn clifford_split(shape: &MultiPartition, p: &ParamPoint, p_div: u32, l_graded: &[u64]) -> Result<CliffordReport> {
    if p.r() != shape.r() {
        return Err(Error::SizeMismatch { left: p.r() as usize, right: shape.r() as usize });
    }
    let k = orbit_k(shape, p_div)?;
    require_symmetric_d(p, p_div)?;
    let num_summands = p_div / k;
    let graded_dims_per_summand = l_graded
        .iter()
        .enumerate()
        .map(|(i, &d)| {
            if d % num_summands as u64 != 0 {
                return Err(Error::ConsistencyFailure(format!(
                    "dim L(λ)_{i} = {d} is not divisible by p/k = {num_summands}"
                )));
            }
            Ok(d / num_summands as u64)
        })
        .collect::<Result<_>>()?;
    Ok(CliffordReport { p_div, orbit_k: k, num_summands, graded_dims_per_summand, small_n_warning: shape.n() < 3 })
}

/// Necessary condition for [M(λ):L(μ)] ≠ 0 at c₀ = k/m: μ ≤_d λ and equal m-cores.
pub fn mcore_dominance_filter(lambda: &Partition, mu: &Partition, k: i64, m: i64) -> Result<bool> {
    if m < 1 || k.gcd(&m) != 1 {
        return Err(Error::InvalidInput(format!("need m ≥ 1 and gcd(k, m) = 1, got k = {k}, m = {m}")));
    }
    if lambda.size() != mu.size() {
        return Ok(false);
    }
    Ok(mu.dominated_by(lambda)? && mu.m_core(m as usize) == lambda.m_core(m as usize))
}
