use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition: a non-increasing sequence of positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl Partition {
    /// Trailing zeros are dropped; anything else out of order is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!("not a partition: {parts:?}")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of row `row` (1-based), zero past the end.
    pub fn row_len(&self, row: usize) -> usize {
        if row == 0 {
            return 0;
        }
        self.parts.get(row - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, row: usize, col: usize) -> bool {
        row >= 1 && col >= 1 && col <= self.row_len(row)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width).map(|c| self.parts.iter().filter(|&&p| p >= c).count()).collect();
        Partition { parts }
    }

    /// Largest content col − row, `None` when empty.
    pub fn max_content(&self) -> Option<i64> {
        self.parts.first().map(|&p| p as i64 - 1)
    }

    /// Smallest content, `None` when empty.
    pub fn min_content(&self) -> Option<i64> {
        if self.parts.is_empty() {
            None
        } else {
            Some(1 - self.parts.len() as i64)
        }
    }

    pub fn is_single_row(&self) -> bool {
        self.parts.len() == 1
    }

    pub fn is_single_column(&self) -> bool {
        !self.parts.is_empty() && self.parts[0] == 1
    }

    pub fn is_rectangle(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] == w[1])
    }

    /// Removable corners as (row, col), top to bottom.
    pub fn corners(&self) -> Vec<(usize, usize)> {
        (1..=self.len()).filter(|&i| self.row_len(i + 1) < self.row_len(i)).map(|i| (i, self.row_len(i))).collect()
    }

    /// Addable cells as (row, col), top to bottom.
    pub fn addable(&self) -> Vec<(usize, usize)> {
        (1..=self.len() + 1)
            .filter(|&i| i == 1 || self.row_len(i - 1) > self.row_len(i))
            .map(|i| (i, self.row_len(i) + 1))
            .collect()
    }

    /// All partitions of n, in reverse lexicographic order.
    pub fn all_of(n: usize) -> Vec<Partition> {
        fn rec(left: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if left == 0 {
                out.push(Partition { parts: prefix.clone() });
                return;
            }
            for part in (1..=left.min(max)).rev() {
                prefix.push(part);
                rec(left - part, part, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Dominance `self ≤_d other`, comparing prefix sums.
    pub fn dominated_by(&self, other: &Partition) -> Result<bool> {
        super::composition::dominance_leq(&self.parts, &other.parts)
    }

    /// The m-core, by sliding beads up the m-runner abacus.
    pub fn m_core(&self, m: usize) -> Partition {
        assert!(m >= 1, "m-core needs m ≥ 1");
        let len = self.parts.len();
        let betas: Vec<usize> = self.parts.iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
        let mut per_runner = vec![0usize; m];
        for b in &betas {
            per_runner[b % m] += 1;
        }
        let mut core_betas: Vec<usize> = Vec::with_capacity(len);
        for (runner, &count) in per_runner.iter().enumerate() {
            core_betas.extend((0..count).map(|k| runner + k * m));
        }
        core_betas.sort_unstable_by(|a, b| b.cmp(a));
        let parts = core_betas.iter().enumerate().map(|(i, &b)| b + i + 1 - len).collect();
        Partition::new(parts).expect("abacus returns a partition")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", text.join(","))
    }
}

/// A box of an r-partition, rows and columns counted from 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub component: usize,
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(component: usize, row: usize, col: usize) -> Self {
        Cell { component, row, col }
    }

    /// ct(b) = col − row.
    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }

    /// β(b), the component index.
    pub fn beta(&self) -> usize {
        self.component
    }

    /// Weakly south-east of `other` in the same component.
    pub fn weakly_southeast_of(&self, other: &Cell) -> bool {
        self.component == other.component && self.row >= other.row && self.col >= other.col
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{};{},{}]", self.component, self.row, self.col)
    }
}

/// An r-partition (λ⁰, …, λ^{r−1}).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Partition>", into = "Vec<Partition>")]
pub struct MultiPartition {
    components: Vec<Partition>,
}

impl TryFrom<Vec<Partition>> for MultiPartition {
    type Error = Error;
    fn try_from(components: Vec<Partition>) -> Result<Self> {
        MultiPartition::new(components)
    }
}

impl From<MultiPartition> for Vec<Partition> {
    fn from(m: MultiPartition) -> Self {
        m.components
    }
}

impl MultiPartition {
    pub fn new(components: Vec<Partition>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidInput("an r-partition needs r ≥ 1 components".into()));
        }
        Ok(MultiPartition { components })
    }

    /// All r-partitions of n.
    pub fn all(r: u32, n: usize) -> Vec<MultiPartition> {
        let mut out = vec![(Vec::new(), 0usize)];
        for _ in 0..r {
            out = out
                .into_iter()
                .flat_map(|(comps, used): (Vec<Partition>, usize)| {
                    (0..=n - used).flat_map(move |k| {
                        let comps = comps.clone();
                        Partition::all_of(k).into_iter().map(move |p| {
                            let mut c = comps.clone();
                            c.push(p);
                            (c, used + k)
                        })
                    })
                })
                .collect();
        }
        out.into_iter().filter(|(_, used)| *used == n).map(|(components, _)| MultiPartition { components }).collect()
    }

    /// Builds from raw part lists; panics on malformed input (test helper).
    pub fn from_parts(parts: &[&[usize]]) -> Self {
        let comps = parts.iter().map(|p| Partition::new(p.to_vec()).unwrap()).collect();
        MultiPartition::new(comps).unwrap()
    }

    pub fn parse_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("shape: {e}")))
    }

    pub fn r(&self) -> u32 {
        self.components.len() as u32
    }

    pub fn n(&self) -> usize {
        self.components.iter().map(Partition::size).sum()
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Partition {
        &self.components[i]
    }

    /// Index read mod r.
    pub fn component_mod(&self, i: i64) -> &Partition {
        &self.components[i.rem_euclid(self.components.len() as i64) as usize]
    }

    pub fn contains(&self, cell: &Cell) -> bool {
        cell.component < self.components.len() && self.components[cell.component].contains(cell.row, cell.col)
    }

    /// All boxes, ordered by (component, row, col).
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.n());
        for (c, p) in self.components.iter().enumerate() {
            for (i, &len) in p.parts().iter().enumerate() {
                out.extend((1..=len).map(|j| Cell::new(c, i + 1, j)));
            }
        }
        out
    }

    /// Boxes b admitting a standard tableau with T⁻¹(b) = n.
    pub fn outside_corners(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for (c, p) in self.components.iter().enumerate() {
            out.extend(p.corners().into_iter().map(|(i, j)| Cell::new(c, i, j)));
        }
        out
    }

    /// The cyclic shift C.(λ⁰, …, λ^{r−1}) = (λ^{r−1}, λ⁰, …, λ^{r−2}).
    pub fn cyclic_shift(&self, times: usize) -> MultiPartition {
        let r = self.components.len();
        let mut shifted = vec![Partition::empty(); r];
        for (i, p) in self.components.iter().enumerate() {
            shifted[(i + times) % r] = p.clone();
        }
        MultiPartition { components: shifted }
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: Vec<String> =
            self.components.iter().map(|p| if p.is_empty() { "∅".to_string() } else { p.to_string() }).collect();
        write!(f, "({})", text.join(", "))
    }
}
