//! Digital k-curves: validation and a seeded random generator.
//!
//! An object is a digital k-curve when every voxel has one or two k-adjacent
//! voxels and, for a voxel with two, those two are not k-adjacent to each
//! other. Voxels with a single neighbour are the extremes of the curve.

use std::collections::BTreeSet;

use rand::{RngExt, SeedableRng};
use rand_xoshiro::SplitMix64;
use serde::Serialize;

use crate::cell::Voxel;
use crate::error::{Error, Result};
use crate::object::{is_adjacent, DigitalObject};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Violation {
    DegreeZero,
    DegreeOverTwo,
    NeighborsMutuallyAdjacent,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurveCheck {
    pub k: usize,
    pub is_valid: bool,
    pub violations: Vec<(Voxel, Violation)>,
    pub extremes: Vec<Voxel>,
    /// Number of 0-connected components. Informational only.
    pub component_count: usize,
}

/// Checks both curve conditions for k-adjacency.
pub fn validate_curve(object: &DigitalObject, k: usize) -> Result<CurveCheck> {
    let n = object.ambient_n();
    if k >= n {
        return Err(Error::AdjacencyOutOfRange { k, n });
    }
    let mut violations = Vec::new();
    let mut extremes = Vec::new();
    for v in object.voxels() {
        let nbrs = object.neighbors_unchecked(v, k);
        match nbrs.len() {
            0 => violations.push((v.clone(), Violation::DegreeZero)),
            1 => extremes.push(v.clone()),
            2 => {
                if is_adjacent(&nbrs[0], &nbrs[1], k) {
                    violations.push((v.clone(), Violation::NeighborsMutuallyAdjacent));
                }
            }
            _ => violations.push((v.clone(), Violation::DegreeOverTwo)),
        }
    }
    Ok(CurveCheck {
        k,
        is_valid: violations.is_empty(),
        violations,
        extremes,
        component_count: component_count(object),
    })
}

fn component_count(object: &DigitalObject) -> usize {
    let mut seen: BTreeSet<&Voxel> = BTreeSet::new();
    let mut components = 0;
    for start in object.voxels() {
        if !seen.insert(start) {
            continue;
        }
        components += 1;
        let mut stack = vec![start.clone()];
        while let Some(v) = stack.pop() {
            for w in object.neighbors_unchecked(&v, 0) {
                if let Some(w) = object.voxels().iter().find(|x| **x == w) {
                    if seen.insert(w) {
                        stack.push(w.clone());
                    }
                }
            }
        }
    }
    components
}

/// Attempts (fresh walks) before [`generate_curve`] gives up.
pub const MAX_ATTEMPTS: usize = 64;

/// Steps a single walk may undo before it is abandoned.
pub const MAX_BACKTRACKS: usize = 256;

/// Grows an open digital k-curve of `length` voxels in `C_3`.
///
/// The walk starts at the origin. Each step picks, uniformly among the 26
/// offsets in lexicographic order, a voxel k-adjacent to the current end that
/// is neither equal nor k-adjacent to any other voxel already placed. A dead
/// end pops the last voxel and forbids that choice; after
/// [`MAX_BACKTRACKS`] pops the walk restarts, and after [`MAX_ATTEMPTS`]
/// restarts generation fails. The random stream is SplitMix64 seeded with
/// `seed`, so output depends only on `(length, seed, k)`.
pub fn generate_curve(length: usize, seed: u64, k: usize) -> Result<DigitalObject> {
    if length < 2 {
        return Err(Error::InvalidLength(length));
    }
    if k >= 3 {
        return Err(Error::AdjacencyOutOfRange { k, n: 3 });
    }
    let offsets: Vec<[i64; 3]> = (0..27)
        .map(|t| [t / 9 - 1, (t / 3) % 3 - 1, t % 3 - 1])
        .filter(|o| *o != [0, 0, 0])
        .filter(|o| o.iter().filter(|&&d| d == 0).count() >= k)
        .collect();
    let mut rng = SplitMix64::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        if let Some(path) = walk(length, k, &offsets, &mut rng) {
            return DigitalObject::new(3, path.into_iter().map(|p| p.to_vec()));
        }
    }
    Err(Error::GenerationFailed(MAX_ATTEMPTS))
}

/// k-adjacency on raw points; equal points do not count.
fn touches(a: &[i64; 3], b: &[i64; 3], k: usize) -> bool {
    let mut equal = 0;
    for (x, y) in a.iter().zip(b) {
        match (x - y).abs() {
            0 => equal += 1,
            1 => {}
            _ => return false,
        }
    }
    equal >= k && equal < 3
}

fn walk(length: usize, k: usize, offsets: &[[i64; 3]], rng: &mut SplitMix64) -> Option<Vec<[i64; 3]>> {
    let mut path: Vec<[i64; 3]> = vec![[0, 0, 0]];
    // choices already tried from each position of the path
    let mut tried: Vec<BTreeSet<[i64; 3]>> = vec![BTreeSet::new()];
    let mut backtracks = 0;
    while path.len() < length {
        let end = *path.last().unwrap();
        let body = &path[..path.len() - 1];
        let candidates: Vec<[i64; 3]> = offsets
            .iter()
            .map(|o| [end[0] + o[0], end[1] + o[1], end[2] + o[2]])
            .filter(|c| !tried.last().unwrap().contains(c))
            .filter(|c| body.iter().all(|b| b != c && !touches(b, c, k)))
            .collect();
        if candidates.is_empty() {
            if path.len() == 1 || backtracks == MAX_BACKTRACKS {
                return None;
            }
            backtracks += 1;
            path.pop();
            tried.pop();
            continue;
        }
        let next = candidates[rng.random_range(0..candidates.len())];
        tried.last_mut().unwrap().insert(next);
        path.push(next);
        tried.push(BTreeSet::new());
    }
    Some(path)
}
