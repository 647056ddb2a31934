use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::composition::Composition;
use super::partition::Cell;
use super::tableau::StandardTableau;

/// The index sets Γ_{b,k} and Γ_{b₁,b₂,k}.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum GammaSetDescriptor {
    SingleBox { b: Cell, k: u32 },
    BoxPair { b1: Cell, b2: Cell, k: u32 },
}

impl GammaSetDescriptor {
    pub fn k(&self) -> u32 {
        match self {
            GammaSetDescriptor::SingleBox { k, .. } | GammaSetDescriptor::BoxPair { k, .. } => *k,
        }
    }
}

impl fmt::Display for GammaSetDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GammaSetDescriptor::SingleBox { b, k } => write!(f, "Γ({b}, {k})"),
            GammaSetDescriptor::BoxPair { b1, b2, k } => write!(f, "Γ({b1}, {b2}, {k})"),
        }
    }
}

/// μ⁻ read at position T⁻¹(b).
fn minus_at(minus: &Composition, t: &StandardTableau, b: &Cell) -> u32 {
    let pos = t.entry(b).expect("box not in the tableau's shape");
    minus.get(pos - 1)
}

/// Membership of (μ, T) in a Γ set.
pub fn gamma_contains(g: &GammaSetDescriptor, mu: &Composition, t: &StandardTableau) -> bool {
    let minus = mu.minus();
    match g {
        GammaSetDescriptor::SingleBox { b, k } => minus_at(&minus, t, b) >= *k,
        GammaSetDescriptor::BoxPair { b1, b2, k } => {
            let (x, y) = (minus_at(&minus, t, b1) as i64, minus_at(&minus, t, b2) as i64);
            let diff = x - y;
            let k = *k as i64;
            if diff > k {
                return true;
            }
            if diff < k {
                return false;
            }
            let winv = mu.wmu().inverse();
            let p1 = t.entry(b1).unwrap() - 1;
            let p2 = t.entry(b2).unwrap() - 1;
            winv.apply(p1) < winv.apply(p2)
        }
    }
}

/// R(μ, T): every Γ set containing (μ, T).
pub fn inversion_set(mu: &Composition, t: &StandardTableau) -> BTreeSet<GammaSetDescriptor> {
    let minus = mu.minus();
    let winv = mu.wmu().inverse();
    let mut out = BTreeSet::new();
    let cells = t.cells();
    for (p, b) in cells.iter().enumerate() {
        for k in 1..=minus.get(p) {
            out.insert(GammaSetDescriptor::SingleBox { b: *b, k });
        }
    }
    for (p1, b1) in cells.iter().enumerate() {
        for (p2, b2) in cells.iter().enumerate() {
            if p1 == p2 {
                continue;
            }
            let diff = minus.get(p1) as i64 - minus.get(p2) as i64;
            if diff < 1 {
                continue;
            }
            for k in 1..diff as u32 {
                out.insert(GammaSetDescriptor::BoxPair { b1: *b1, b2: *b2, k });
            }
            if winv.apply(p1) < winv.apply(p2) {
                out.insert(GammaSetDescriptor::BoxPair { b1: *b1, b2: *b2, k: diff as u32 });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::partition::MultiPartition;
    use crate::combinatorics::tableau::syt_enumerate;

    #[test]
    fn membership_examples() {
        let shape = MultiPartition::from_parts(&[&[2]]);
        let t = &syt_enumerate(&shape)[0];
        let b_last = t.cell(2);
        let zero = Composition::zero(2);
        assert!(!gamma_contains(&GammaSetDescriptor::SingleBox { b: b_last, k: 1 }, &zero, t));
        let ones = Composition::new(vec![1, 1]);
        for b in shape.cells() {
            assert!(gamma_contains(&GammaSetDescriptor::SingleBox { b, k: 1 }, &ones, t));
        }
        let g = GammaSetDescriptor::BoxPair { b1: Cell::new(0, 1, 2), b2: Cell::new(0, 1, 1), k: 1 };
        assert!(gamma_contains(&g, &Composition::new(vec![1, 0]), t));
        assert!(inversion_set(&zero, t).is_empty());
    }

    #[test]
    fn inversion_set_agrees_with_membership() {
        let shape = MultiPartition::from_parts(&[&[2, 1], &[1]]);
        let cells = shape.cells();
        for t in syt_enumerate(&shape) {
            for mu in Composition::all_bounded(4, 3) {
                let r = inversion_set(&mu, &t);
                for b in &cells {
                    for k in 1..=4 {
                        let g = GammaSetDescriptor::SingleBox { b: *b, k };
                        assert_eq!(r.contains(&g), gamma_contains(&g, &mu, &t));
                        for b2 in &cells {
                            if b2 != b {
                                let g = GammaSetDescriptor::BoxPair { b1: *b, b2: *b2, k };
                                assert_eq!(r.contains(&g), gamma_contains(&g, &mu, &t));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn descriptor_json() {
        let g = GammaSetDescriptor::BoxPair { b1: Cell::new(0, 1, 2), b2: Cell::new(0, 2, 1), k: 1 };
        let text = serde_json::to_string(&g).unwrap();
        assert_eq!(serde_json::from_str::<GammaSetDescriptor>(&text).unwrap(), g);
    }
}
