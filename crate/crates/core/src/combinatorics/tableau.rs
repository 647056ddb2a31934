use std::collections::HashMap;
use std::fmt;

use serde::ser::Serializer;
use serde::Serialize;

use super::partition::{Cell, MultiPartition, Partition};

/// A standard filling of an r-partition, stored in both directions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardTableau {
    /// `cells[i]` is T(i+1).
    cells: Vec<Cell>,
    /// `entries[cell]` is T⁻¹(cell), 1-based.
    entries: Vec<(Cell, usize)>,
    r: usize,
}

impl StandardTableau {
    fn from_cells(r: usize, cells: Vec<Cell>) -> Self {
        let mut entries: Vec<(Cell, usize)> = cells.iter().enumerate().map(|(i, &c)| (c, i + 1)).collect();
        entries.sort_unstable();
        StandardTableau { cells, entries, r }
    }

    /// Builds a tableau from the sequence T(1), …, T(n); `None` unless the
    /// filling is a standard bijection onto `shape`.
    pub fn from_sequence(shape: &MultiPartition, cells: Vec<Cell>) -> Option<Self> {
        if cells.len() != shape.n() || cells.iter().any(|c| !shape.contains(c)) {
            return None;
        }
        let t = Self::from_cells(shape.r() as usize, cells);
        if t.entries.windows(2).any(|w| w[0].0 == w[1].0) || !t.is_standard() {
            return None;
        }
        Some(t)
    }

    /// Parses per-component row fillings, e.g. `[[[1,3],[2]],[[4]]]`.
    pub fn from_rows(shape: &MultiPartition, rows: &[Vec<Vec<usize>>]) -> Option<Self> {
        let n = shape.n();
        let mut cells = vec![None; n];
        if rows.len() != shape.r() as usize {
            return None;
        }
        for (c, comp) in rows.iter().enumerate() {
            for (i, row) in comp.iter().enumerate() {
                for (j, &e) in row.iter().enumerate() {
                    if e == 0 || e > n || cells[e - 1].is_some() {
                        return None;
                    }
                    cells[e - 1] = Some(Cell::new(c, i + 1, j + 1));
                }
            }
        }
        let cells: Option<Vec<Cell>> = cells.into_iter().collect();
        Self::from_sequence(shape, cells?)
    }

    fn is_standard(&self) -> bool {
        self.entries.iter().all(|&(c, e)| {
            let left = (c.col > 1).then(|| self.entry(&Cell::new(c.component, c.row, c.col - 1)));
            let up = (c.row > 1).then(|| self.entry(&Cell::new(c.component, c.row - 1, c.col)));
            left.is_none_or(|x| x.is_some_and(|x| x < e)) && up.is_none_or(|x| x.is_some_and(|x| x < e))
        })
    }

    pub fn n(&self) -> usize {
        self.cells.len()
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// T(i) for 1-based i.
    pub fn cell(&self, i: usize) -> Cell {
        self.cells[i - 1]
    }

    /// T⁻¹(cell), 1-based.
    pub fn entry(&self, cell: &Cell) -> Option<usize> {
        self.entries.binary_search_by(|probe| probe.0.cmp(cell)).ok().map(|k| self.entries[k].1)
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn content(&self, i: usize) -> i64 {
        self.cell(i).content()
    }

    pub fn beta(&self, i: usize) -> usize {
        self.cell(i).component
    }

    /// s_i.T (entries i and i+1 exchanged), if standard.
    pub fn swap(&self, i: usize) -> Option<StandardTableau> {
        assert!(i >= 1 && i < self.n());
        let (a, b) = (self.cells[i - 1], self.cells[i]);
        if a.component == b.component && (a.row == b.row || a.col == b.col) {
            return None;
        }
        let mut cells = self.cells.clone();
        cells.swap(i - 1, i);
        Some(Self::from_cells(self.r, cells))
    }

    /// The shape the tableau fills.
    pub fn shape(&self) -> MultiPartition {
        let mut rows: Vec<Vec<usize>> = vec![Vec::new(); self.r];
        for c in &self.cells {
            let comp = &mut rows[c.component];
            if comp.len() < c.row {
                comp.resize(c.row, 0);
            }
            comp[c.row - 1] += 1;
        }
        MultiPartition::new(rows.into_iter().map(|p| Partition::new(p).unwrap()).collect()).unwrap()
    }

    /// Entries laid out component by component, row by row.
    pub fn rows(&self) -> Vec<Vec<Vec<usize>>> {
        let mut out: Vec<Vec<Vec<usize>>> = vec![Vec::new(); self.r];
        for &(c, e) in &self.entries {
            let comp = &mut out[c.component];
            if comp.len() < c.row {
                comp.resize(c.row, Vec::new());
            }
            comp[c.row - 1].push(e);
        }
        out
    }

    /// The tableau obtained by moving each component one step to the right
    /// cyclically, matching `MultiPartition::cyclic_shift`.
    pub fn cyclic_shift(&self, times: usize) -> StandardTableau {
        let cells = self.cells.iter().map(|c| Cell::new((c.component + times) % self.r, c.row, c.col)).collect();
        Self::from_cells(self.r, cells)
    }
}

impl Serialize for StandardTableau {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let comps: Vec<String> = self
            .rows()
            .iter()
            .map(|comp| {
                if comp.is_empty() {
                    return "∅".to_string();
                }
                let rows: Vec<String> =
                    comp.iter().map(|row| row.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" ")).collect();
                rows.join(" / ")
            })
            .collect();
        write!(f, "({})", comps.join(" | "))
    }
}

/// All standard tableaux of `shape`, ordered lexicographically by the
/// sequence T(1), T(2), … of boxes.
pub fn syt_enumerate(shape: &MultiPartition) -> Vec<StandardTableau> {
    fn rec(shape: &MultiPartition, filled: &mut Vec<Vec<usize>>, seq: &mut Vec<Cell>, out: &mut Vec<StandardTableau>) {
        if seq.len() == shape.n() {
            out.push(StandardTableau::from_cells(shape.r() as usize, seq.clone()));
            return;
        }
        let mut candidates = Vec::new();
        for (c, target) in shape.components().iter().enumerate() {
            let current = &filled[c];
            for row in 1..=target.len() {
                let have = current.get(row - 1).copied().unwrap_or(0);
                let above = if row == 1 { usize::MAX } else { current.get(row - 2).copied().unwrap_or(0) };
                if have < target.row_len(row) && have < above {
                    candidates.push(Cell::new(c, row, have + 1));
                }
            }
        }
        for cell in candidates {
            let comp = &mut filled[cell.component];
            if comp.len() < cell.row {
                comp.resize(cell.row, 0);
            }
            comp[cell.row - 1] += 1;
            seq.push(cell);
            rec(shape, filled, seq, out);
            seq.pop();
            filled[cell.component][cell.row - 1] -= 1;
        }
    }
    let mut out = Vec::new();
    let mut filled = vec![Vec::new(); shape.r() as usize];
    rec(shape, &mut filled, &mut Vec::new(), &mut out);
    out
}

/// Index of each tableau in `tableaux`.
pub fn tableau_index(tableaux: &[StandardTableau]) -> HashMap<StandardTableau, usize> {
    tableaux.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect()
}

/// Number of standard tableaux by the branching rule (remove one corner).
pub fn syt_count(shape: &MultiPartition) -> u128 {
    fn count(comps: &mut Vec<Vec<usize>>, memo: &mut HashMap<Vec<Vec<usize>>, u128>) -> u128 {
        if comps.iter().all(|c| c.is_empty()) {
            return 1;
        }
        if let Some(&v) = memo.get(comps) {
            return v;
        }
        let mut total = 0;
        for c in 0..comps.len() {
            for i in 0..comps[c].len() {
                let next = comps[c].get(i + 1).copied().unwrap_or(0);
                if comps[c][i] > next {
                    comps[c][i] -= 1;
                    let popped = comps[c][i] == 0;
                    if popped {
                        comps[c].pop();
                    }
                    total += count(comps, memo);
                    if popped {
                        comps[c].push(0);
                    }
                    comps[c][i] += 1;
                }
            }
        }
        memo.insert(comps.clone(), total);
        total
    }
    let mut comps: Vec<Vec<usize>> = shape.components().iter().map(|p| p.parts().to_vec()).collect();
    count(&mut comps, &mut HashMap::new())
}
