//! Finite incidence structures `(V, B, I)` and the degree-sum identity.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::cell::{self, Cell};
use crate::error::{Error, Result};
use crate::object::CellCensus;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceStructure<P: Ord, B: Ord> {
    points: BTreeSet<P>,
    blocks: BTreeSet<B>,
    relation: BTreeSet<(P, B)>,
}

impl<P: Ord + Clone, B: Ord + Clone> IncidenceStructure<P, B> {
    pub fn new(
        points: impl IntoIterator<Item = P>,
        blocks: impl IntoIterator<Item = B>,
        relation: impl IntoIterator<Item = (P, B)>,
    ) -> Result<Self> {
        let points: BTreeSet<P> = points.into_iter().collect();
        let blocks: BTreeSet<B> = blocks.into_iter().collect();
        let relation: BTreeSet<(P, B)> = relation.into_iter().collect();
        if relation
            .iter()
            .any(|(p, b)| !points.contains(p) || !blocks.contains(b))
        {
            return Err(Error::RelationOutsideDomain);
        }
        Ok(IncidenceStructure {
            points,
            blocks,
            relation,
        })
    }

    pub fn points(&self) -> &BTreeSet<P> {
        &self.points
    }

    pub fn blocks(&self) -> &BTreeSet<B> {
        &self.blocks
    }

    pub fn relation(&self) -> &BTreeSet<(P, B)> {
        &self.relation
    }

    /// `r_p` for every point, zero-degree points included.
    pub fn point_degrees(&self) -> BTreeMap<&P, usize> {
        let mut deg: BTreeMap<&P, usize> = self.points.iter().map(|p| (p, 0)).collect();
        for (p, _) in &self.relation {
            *deg.get_mut(p).expect("relation checked on construction") += 1;
        }
        deg
    }

    /// `k_B` for every block.
    pub fn block_degrees(&self) -> BTreeMap<&B, usize> {
        let mut deg: BTreeMap<&B, usize> = self.blocks.iter().map(|b| (b, 0)).collect();
        for (_, b) in &self.relation {
            *deg.get_mut(b).expect("relation checked on construction") += 1;
        }
        deg
    }
}

impl IncidenceStructure<Cell, Cell> {
    /// `(C_i(D), C_j(D), <)` for `i < j`.
    ///
    /// The relation is built from the point side, each i-cell looking up the
    /// j-cells containing it.
    pub fn from_census(census: &CellCensus, i: usize, j: usize) -> Result<Self> {
        let n = census.ambient_n();
        if i >= j || j > n {
            return Err(Error::IndexOrder { i, j, n });
        }
        let mut relation = BTreeSet::new();
        for p in census.cells(i) {
            for b in cell::cofaces(p, j)? {
                if census.cells(j).contains(&b) {
                    relation.insert((p.clone(), b));
                }
            }
        }
        Ok(IncidenceStructure {
            points: census.cells(i).clone(),
            blocks: census.cells(j).clone(),
            relation,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeSum {
    pub left: usize,
    pub right: usize,
    pub pass: bool,
}

/// `Σ_p r_p` against `Σ_B k_B`.
pub fn degree_sum_check<P: Ord + Clone, B: Ord + Clone>(s: &IncidenceStructure<P, B>) -> DegreeSum {
    let left = s.point_degrees().values().sum();
    let right = s.block_degrees().values().sum();
    DegreeSum {
        left,
        right,
        pass: left == right,
    }
}
