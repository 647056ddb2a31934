use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap};

use serde::Serialize;

use super::lattice::{graded_count, ClosedGenerator};
use crate::combinatorics::{syt_count, Cell, Composition, GammaSetDescriptor, MultiPartition};
use crate::error::{Error, Result};
use crate::scalars::ParamPoint;

/// An accepting chain b₀, …, b_{2m} with k₀, …, k_m for one outside corner.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CornerChain {
    pub corner: Cell,
    pub boxes: Vec<Cell>,
    pub ks: Vec<u32>,
}

impl CornerChain {
    pub fn weight(&self) -> u32 {
        self.ks.iter().sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FinDimCertificate {
    pub chains: Vec<CornerChain>,
    pub bound: u32,
}

impl FinDimCertificate {
    /// Checks the chain conditions against a generator list.
    pub fn validate(&self, gens: &[ClosedGenerator]) -> bool {
        let closed = |d: &GammaSetDescriptor| gens.iter().any(|g| &g.descriptor == d);
        self.chains.iter().all(|c| {
            let m = c.ks.len() - 1;
            c.boxes.len() == 2 * m + 1
                && c.boxes[0] == c.corner
                && (0..m).all(|i| {
                    closed(&GammaSetDescriptor::BoxPair { b1: c.boxes[2 * i], b2: c.boxes[2 * i + 1], k: c.ks[i] })
                })
                && (1..=m).all(|i| {
                    let (a, b) = (c.boxes[2 * i - 1], c.boxes[2 * i]);
                    a.component == b.component && b.weakly_southeast_of(&a)
                })
                && closed(&GammaSetDescriptor::SingleBox { b: c.boxes[2 * m], k: c.ks[m] })
        }) && self.chains.iter().map(CornerChain::weight).max() == Some(self.bound)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Phase {
    /// At b_{2i}: take a pair edge or terminate.
    Even,
    /// At b_{2i+1}: slide within the component.
    Odd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Step {
    Start,
    Pair(Cell, Phase, u32),
    Slide(Cell, Phase),
}

/// Cheapest accepting chain from `corner`, by Dijkstra over (box, phase).
fn cheapest_chain(corner: Cell, cells: &[Cell], gens: &[ClosedGenerator]) -> Option<CornerChain> {
    let mut pairs: BTreeMap<Cell, Vec<(Cell, u32)>> = BTreeMap::new();
    let mut singles: BTreeMap<Cell, u32> = BTreeMap::new();
    for g in gens {
        match g.descriptor {
            GammaSetDescriptor::BoxPair { b1, b2, k } => pairs.entry(b1).or_default().push((b2, k)),
            GammaSetDescriptor::SingleBox { b, k } => {
                let e = singles.entry(b).or_insert(k);
                *e = (*e).min(k);
            }
        }
    }
    let mut dist: BTreeMap<(Cell, Phase), (u32, Step)> = BTreeMap::new();
    let mut heap = BinaryHeap::new();
    dist.insert((corner, Phase::Even), (0, Step::Start));
    heap.push(Reverse((0u32, corner, Phase::Even)));
    let mut best: Option<(u32, Cell)> = None;
    while let Some(Reverse((w, b, phase))) = heap.pop() {
        if dist.get(&(b, phase)).is_some_and(|&(d, _)| d < w) {
            continue;
        }
        if best.is_some_and(|(bw, _)| bw <= w) {
            break;
        }
        let mut relax = |to: (Cell, Phase), nw: u32, via: Step, heap: &mut BinaryHeap<_>| {
            if dist.get(&to).is_none_or(|&(d, _)| nw < d) {
                dist.insert(to, (nw, via));
                heap.push(Reverse((nw, to.0, to.1)));
            }
        };
        match phase {
            Phase::Even => {
                if let Some(&k) = singles.get(&b) {
                    if best.is_none_or(|(bw, _)| w + k < bw) {
                        best = Some((w + k, b));
                    }
                }
                for &(b2, k) in pairs.get(&b).into_iter().flatten() {
                    relax((b2, Phase::Odd), w + k, Step::Pair(b, Phase::Even, k), &mut heap);
                }
            }
            Phase::Odd => {
                for &c in cells.iter().filter(|c| c.component == b.component && c.weakly_southeast_of(&b)) {
                    relax((c, Phase::Even), w, Step::Slide(b, Phase::Odd), &mut heap);
                }
            }
        }
    }
    let (_, end) = best?;
    let mut boxes = vec![end];
    let mut ks = vec![singles[&end]];
    let mut at = (end, Phase::Even);
    loop {
        match dist[&at].1 {
            Step::Start => break,
            Step::Slide(prev, phase) => {
                boxes.push(prev);
                at = (prev, phase);
            }
            Step::Pair(prev, phase, k) => {
                boxes.push(prev);
                ks.push(k);
                at = (prev, phase);
            }
        }
    }
    boxes.reverse();
    ks.reverse();
    Some(CornerChain { corner, boxes, ks })
}

/// Searches for an accepting chain at every outside corner.
pub fn findim_check(shape: &MultiPartition, p: &ParamPoint, gens: &[ClosedGenerator]) -> Result<FinDimCertificate> {
    p.require_kappa_one()?;
    super::spectrum::require_simple_spectrum(shape, p)?;
    corner_chains(shape, gens)
}

/// Cheapest accepting chains for the given generators, without checking
/// the point.
pub fn corner_chains(shape: &MultiPartition, gens: &[ClosedGenerator]) -> Result<FinDimCertificate> {
    let cells = shape.cells();
    let mut chains = Vec::new();
    for corner in shape.outside_corners() {
        match cheapest_chain(corner, &cells, gens) {
            Some(c) => chains.push(c),
            None => return Err(Error::NotProven(format!("no accepting chain from the outside corner {corner}"))),
        }
    }
    let bound = chains.iter().map(CornerChain::weight).max().unwrap_or(0);
    Ok(FinDimCertificate { chains, bound })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LDimension {
    pub dim: u64,
    pub graded: Vec<u64>,
}

/// Cap on the number of (μ,T) pairs `l_dimension` will enumerate.
pub const ENUMERATION_LIMIT: u128 = 50_000_000;

/// dim L(λ) by enumerating every (μ,T) with all entries below the bound and
/// discarding the closed sets.
pub fn l_dimension(shape: &MultiPartition, cert: &FinDimCertificate, gens: &[ClosedGenerator]) -> Result<LDimension> {
    let n = shape.n();
    let b = cert.bound;
    let size = (b as u128).checked_pow(n as u32).and_then(|x| x.checked_mul(syt_count(shape)));
    if size.is_none_or(|s| s > ENUMERATION_LIMIT) {
        return Err(Error::OutOfScope(format!("{b}^{n} · #SYT pairs is beyond the enumeration limit")));
    }
    if b == 0 {
        return Ok(LDimension { dim: 0, graded: vec![] });
    }
    let maxdeg = (b - 1) * n as u32;
    let mut graded =
        graded_count(shape, maxdeg, |mu: &Composition, t| Ok(mu.max() < b && !gens.iter().any(|g| g.contains(mu, t))))?;
    while graded.last() == Some(&0) {
        graded.pop();
    }
    Ok(LDimension { dim: graded.iter().sum(), graded })
}

#[cfg(test)]
mod tests {
    use super::super::lattice::{closed_generators, solve_generator_equations};
    use super::*;
    use crate::scalars::{int, rat};

    fn point(r: u32, c0: crate::scalars::Rational, d: Vec<crate::scalars::Rational>) -> ParamPoint {
        ParamPoint::new(r, int(1), c0, d).unwrap()
    }

    #[test]
    fn single_box() {
        let shape = MultiPartition::from_parts(&[&[1], &[]]);
        let p = point(2, rat(1, 5), vec![rat(3, 2), rat(-3, 2)]);
        let gens = closed_generators(&shape, &p).unwrap();
        let cert = findim_check(&shape, &p, &gens).unwrap();
        assert_eq!(cert.bound, 3);
        assert!(cert.validate(&gens));
        let l = l_dimension(&shape, &cert, &gens).unwrap();
        assert_eq!(l, LDimension { dim: 3, graded: vec![1, 1, 1] });
    }

    #[test]
    fn one_dimensional_row() {
        let shape = MultiPartition::from_parts(&[&[2], &[]]);
        let p = point(2, rat(1, 7), vec![rat(5, 14), rat(-5, 14)]);
        let gens = closed_generators(&shape, &p).unwrap();
        let cert = findim_check(&shape, &p, &gens).unwrap();
        assert_eq!(l_dimension(&shape, &cert, &gens).unwrap().dim, 1);
    }

    #[test]
    fn not_proven_without_generators() {
        let shape = MultiPartition::from_parts(&[&[2, 1]]);
        let p = ParamPoint::with_c0(1, rat(1, 3));
        let gens = closed_generators(&shape, &p).unwrap();
        assert!(matches!(findim_check(&shape, &p, &gens), Err(Error::NotProven(_))));
    }

    #[test]
    fn rank_five_example() {
        let shape = MultiPartition::from_parts(&[&[3, 2], &[3], &[], &[5, 4, 4], &[]]);
        let p =
            ParamPoint::from_free_d(5, int(1), rat(2, 7), &[rat(-17, 7), rat(-5, 7), rat(12, 7), rat(-6, 7)]).unwrap();
        assert!(matches!(closed_generators(&shape, &p), Err(Error::SpectrumNotSimple(_))));
        let gens = solve_generator_equations(&shape, &p).unwrap();
        let cert = corner_chains(&shape, &gens).unwrap();
        assert_eq!(cert.chains.len(), 5);
        assert!(cert.validate(&gens));
    }
}
