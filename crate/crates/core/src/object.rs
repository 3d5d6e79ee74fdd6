//! Digital objects: finite sets of n-voxels, their cell censuses, blocks and
//! tandems.

use std::collections::{BTreeSet, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::cell::{self, Cell, Voxel};
use crate::error::{Error, Result};

/// What to do with a voxel listed twice when building an object.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum DuplicatePolicy {
    /// Reject the input.
    #[default]
    Strict,
    /// Keep the first occurrence and count the rest.
    Lenient,
}

/// A finite set of n-voxels over a fixed ambient dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DigitalObject {
    n: usize,
    voxels: Vec<Voxel>,
    index: HashSet<Voxel>,
}

impl DigitalObject {
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroDimension);
        }
        Ok(DigitalObject {
            n,
            voxels: Vec::new(),
            index: HashSet::new(),
        })
    }

    /// Builds an object, rejecting duplicates.
    pub fn new<I>(n: usize, points: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<i64>>,
    {
        Self::with_policy(n, points, DuplicatePolicy::Strict).map(|(obj, _)| obj)
    }

    /// Builds an object under the given duplicate policy. Returns the object
    /// and the number of dropped duplicates.
    pub fn with_policy<I>(n: usize, points: I, policy: DuplicatePolicy) -> Result<(Self, usize)>
    where
        I: IntoIterator<Item = Vec<i64>>,
    {
        let mut obj = Self::empty(n)?;
        let mut dropped = 0;
        for p in points {
            if p.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: p.len(),
                });
            }
            let v = Voxel::new(p)?;
            if obj.index.contains(&v) {
                match policy {
                    DuplicatePolicy::Strict => return Err(Error::DuplicateVoxel(v.to_string())),
                    DuplicatePolicy::Lenient => dropped += 1,
                }
                continue;
            }
            obj.index.insert(v.clone());
            obj.voxels.push(v);
        }
        obj.voxels.sort();
        Ok((obj, dropped))
    }

    pub fn ambient_n(&self) -> usize {
        self.n
    }

    /// Voxels in lexicographic order.
    pub fn voxels(&self) -> &[Voxel] {
        &self.voxels
    }

    pub fn len(&self) -> usize {
        self.voxels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.voxels.is_empty()
    }

    pub fn contains(&self, v: &Voxel) -> bool {
        self.index.contains(v)
    }

    pub fn contains_cell(&self, voxel_cell: &Cell) -> bool {
        voxel_cell.as_voxel().is_some_and(|v| self.index.contains(&v))
    }

    /// Cell census computed sequentially.
    pub fn census(&self) -> CellCensus {
        let mut cells = vec![HashSet::new(); self.n + 1];
        for v in &self.voxels {
            for f in cell::closure(&v.cell()) {
                cells[f.dimension()].insert(f);
            }
        }
        CellCensus::classify(self, cells)
    }

    /// Cell census with the face enumeration spread over the rayon pool.
    /// Produces exactly the same census as [`DigitalObject::census`].
    pub fn census_parallel(&self) -> CellCensus {
        let n = self.n;
        let cells = self
            .voxels
            .par_iter()
            .fold(
                || vec![HashSet::new(); n + 1],
                |mut acc, v| {
                    for f in cell::closure(&v.cell()) {
                        acc[f.dimension()].insert(f);
                    }
                    acc
                },
            )
            .reduce(
                || vec![HashSet::new(); n + 1],
                |mut a, b| {
                    for (x, y) in a.iter_mut().zip(b) {
                        x.extend(y);
                    }
                    a
                },
            );
        CellCensus::classify(self, cells)
    }

    /// `A_k(v)`: voxels of the object sharing at least a k-cell with `v`.
    pub fn adjacent_voxels(&self, v: &Voxel, k: usize) -> Result<Vec<Voxel>> {
        if !self.contains(v) {
            return Err(Error::VoxelNotInObject(v.to_string()));
        }
        if k >= self.n {
            return Err(Error::AdjacencyOutOfRange { k, n: self.n });
        }
        Ok(self.neighbors_unchecked(v, k))
    }

    pub(crate) fn neighbors_unchecked(&self, v: &Voxel, k: usize) -> Vec<Voxel> {
        // the 3^n closure of the voxel cell doubles as its neighbour offsets
        cell::closure(&v.cell())
            .into_iter()
            .filter_map(|f| {
                let w: Vec<i64> = f
                    .coords()
                    .iter()
                    .zip(v.coords())
                    .map(|(&d, &x)| x + (d - 2 * x))
                    .collect();
                Voxel::new(w).ok()
            })
            .filter(|w| w != v && self.contains(w) && is_adjacent(v, w, k))
            .collect()
    }

    /// `B_i(e) ∩ D`.
    pub fn block_occupancy(&self, e: &Cell) -> Result<Vec<Voxel>> {
        if e.is_voxel() {
            return Err(Error::AlreadyVoxel(e.to_string()));
        }
        Ok(cell::block_points(e)
            .filter_map(|p| self.index.get(p.as_slice()).cloned())
            .collect())
    }

    /// The i-tandem of the object over `e`, if there is one: the object meets
    /// `B_i(e)` in exactly two voxels, strictly i-adjacent, whose intersection
    /// is `e`.
    pub fn tandem_over(&self, e: &Cell) -> Result<Option<Tandem>> {
        let occupied = self.block_occupancy(e)?;
        if occupied.len() != 2 {
            return Ok(None);
        }
        let (v1, v2) = (&occupied[0], &occupied[1]);
        let i = e.dimension();
        if strictly_adjacent(v1, v2, i) && intersection_cell(v1, v2).as_ref() == Some(e) {
            Ok(Some(Tandem {
                hub: e.clone(),
                pair: [v1.clone(), v2.clone()],
            }))
        } else {
            Ok(None)
        }
    }
}

/// Distinct voxels sharing at least a k-cell.
pub fn is_adjacent(v1: &Voxel, v2: &Voxel, k: usize) -> bool {
    if v1 == v2 || v1.ambient_n() != v2.ambient_n() {
        return false;
    }
    let mut equal = 0;
    for (a, b) in v1.coords().iter().zip(v2.coords()) {
        match (a - b).abs() {
            0 => equal += 1,
            1 => {}
            _ => return false,
        }
    }
    equal >= k
}

/// `v1 ∩ v2` is an i-cell: exactly `i` equal axes, the rest differ by one.
pub fn strictly_adjacent(v1: &Voxel, v2: &Voxel, i: usize) -> bool {
    is_adjacent(v1, v2, 0)
        && v1
            .coords()
            .iter()
            .zip(v2.coords())
            .filter(|(a, b)| a == b)
            .count()
            == i
}

/// The cell shared by two distinct voxels in contact, or `None` when they are
/// equal or some axis differs by two or more.
pub fn intersection_cell(v1: &Voxel, v2: &Voxel) -> Option<Cell> {
    if !is_adjacent(v1, v2, 0) {
        return None;
    }
    let coords = v1
        .coords()
        .iter()
        .zip(v2.coords())
        .map(|(&a, &b)| a + b)
        .collect();
    Cell::from_doubled(coords).ok()
}

/// `B_i(e)`: the voxels bounded by `e`.
pub fn block(e: &Cell) -> Result<Vec<Voxel>> {
    Ok(cell::cofaces_voxels(e)?
        .iter()
        .filter_map(Cell::as_voxel)
        .collect())
}

/// A pair of strictly i-adjacent voxels meeting in the hub cell and filling
/// nothing else of the hub's block.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Tandem {
    pub hub: Cell,
    pub pair: [Voxel; 2],
}

/// Cells of an object per dimension with the free / non-free split.
///
/// An i-cell (i < n) is free when its block is not contained in the object.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellCensus {
    n: usize,
    cells: Vec<BTreeSet<Cell>>,
    free: Vec<BTreeSet<Cell>>,
    non_free: Vec<BTreeSet<Cell>>,
}

impl CellCensus {
    fn classify(obj: &DigitalObject, by_dim: Vec<HashSet<Cell>>) -> Self {
        let n = obj.n;
        let cells: Vec<BTreeSet<Cell>> = by_dim.into_iter().map(|s| s.into_iter().collect()).collect();
        let mut free = vec![BTreeSet::new(); n];
        let mut non_free = vec![BTreeSet::new(); n];
        for i in 0..n {
            for e in &cells[i] {
                let inside = cell::block_points(e).all(|p| obj.index.contains(p.as_slice()));
                if inside {
                    non_free[i].insert(e.clone());
                } else {
                    free[i].insert(e.clone());
                }
            }
        }
        CellCensus {
            n,
            cells,
            free,
            non_free,
        }
    }

    pub fn ambient_n(&self) -> usize {
        self.n
    }

    /// `C_i(D)`.
    pub fn cells(&self, i: usize) -> &BTreeSet<Cell> {
        &self.cells[i]
    }

    /// `C_i*(D)`; empty for `i = n`.
    pub fn free_cells(&self, i: usize) -> &BTreeSet<Cell> {
        static EMPTY: BTreeSet<Cell> = BTreeSet::new();
        self.free.get(i).unwrap_or(&EMPTY)
    }

    /// `C_i'(D)`; empty for `i = n`.
    pub fn non_free_cells(&self, i: usize) -> &BTreeSet<Cell> {
        static EMPTY: BTreeSet<Cell> = BTreeSet::new();
        self.non_free.get(i).unwrap_or(&EMPTY)
    }

    pub fn c(&self, i: usize) -> usize {
        self.cells[i].len()
    }

    pub fn c_free(&self, i: usize) -> usize {
        self.free_cells(i).len()
    }

    pub fn c_non_free(&self, i: usize) -> usize {
        self.non_free_cells(i).len()
    }

    /// `(c_0, ..., c_n)`.
    pub fn counts(&self) -> Vec<usize> {
        self.cells.iter().map(BTreeSet::len).collect()
    }

    pub fn contains(&self, e: &Cell) -> bool {
        e.ambient_n() == self.n && self.cells[e.dimension()].contains(e)
    }

    /// `b_j(e, D)`: the number of j-cells of the object bounded by `e`.
    pub fn b_count(&self, e: &Cell, j: usize) -> Result<usize> {
        let dim = e.dimension();
        if j <= dim || j > self.n || e.ambient_n() != self.n {
            return Err(Error::IndexOrder { i: dim, j, n: self.n });
        }
        Ok(cell::cofaces(e, j)?
            .iter()
            .filter(|f| self.cells[j].contains(f))
            .count())
    }

    pub fn rows(&self) -> Vec<CensusRow> {
        (0..=self.n)
            .map(|i| CensusRow {
                i,
                total: self.c(i),
                free: (i < self.n).then(|| self.c_free(i)),
                non_free: (i < self.n).then(|| self.c_non_free(i)),
            })
            .collect()
    }
}

/// Census counts for one dimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub i: usize,
    pub total: usize,
    pub free: Option<usize>,
    pub non_free: Option<usize>,
}
