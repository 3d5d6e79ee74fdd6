//! Gap detection by block inspection and the closed-form gap counts for 3D
//! objects.
//!
//! An object has an i-gap over the i-cell `e` (its hub) when the object meets
//! the block `B_i(e)` in exactly the pair of strictly i-adjacent voxels whose
//! intersection is `e`: the diagonal pair through `e`, with every other voxel
//! of the block empty.

use serde::Serialize;

use crate::cell::Cell;
use crate::error::{Error, Result};
use crate::object::{CellCensus, DigitalObject};

/// All i-hubs of the object, sorted.
///
/// Only cells of `C_i(D)` are scanned. A hub is a face of both voxels of its
/// tandem, so nothing outside `C_i(D)` can qualify.
pub fn detect_hubs(object: &DigitalObject, census: &CellCensus, i: usize) -> Result<Vec<Cell>> {
    let n = object.ambient_n();
    if n < 2 || i > n - 2 {
        return Err(Error::GapDimensionOutOfRange { i, n });
    }
    let mut hubs = Vec::new();
    for e in census.cells(i) {
        if object.tandem_over(e)?.is_some() {
            hubs.push(e.clone());
        }
    }
    Ok(hubs)
}

fn require_3d(n: usize) -> Result<()> {
    if n == 3 {
        Ok(())
    } else {
        Err(Error::WrongAmbientDimension { expected: 3, found: n })
    }
}

/// `g_1 = 2 c_2* - c_1*`, valid for every 3D object.
pub fn g1_closed_form(census: &CellCensus) -> Result<i64> {
    require_3d(census.ambient_n())?;
    Ok(2 * census.c_free(2) as i64 - census.c_free(1) as i64)
}

/// `g_0 = -c_0 + 2 c_1 - 4 c_2 + 8 c_3`, valid for digital 0-curves.
pub fn g0_closed_form(census: &CellCensus) -> Result<i64> {
    require_3d(census.ambient_n())?;
    Ok((0..=3)
        .map(|i| {
            let sign = if i % 2 == 0 { -1 } else { 1 };
            sign * (1i64 << i) * census.c(i) as i64
        })
        .sum())
}

/// Brute-force gap inventory with the closed forms alongside.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GapReport {
    pub n: usize,
    /// `hubs[i]` is `H_i(D)` for `i = 0..=n-2`.
    pub hubs: Vec<Vec<Cell>>,
    /// Formula values, present only for `n = 3`.
    pub g0_formula: Option<i64>,
    pub g1_formula: Option<i64>,
}

impl GapReport {
    pub fn new(object: &DigitalObject, census: &CellCensus) -> Result<Self> {
        let n = object.ambient_n();
        let hubs = if n >= 2 {
            (0..=n - 2)
                .map(|i| detect_hubs(object, census, i))
                .collect::<Result<_>>()?
        } else {
            Vec::new()
        };
        let (g0_formula, g1_formula) = if n == 3 {
            (Some(g0_closed_form(census)?), Some(g1_closed_form(census)?))
        } else {
            (None, None)
        };
        Ok(GapReport {
            n,
            hubs,
            g0_formula,
            g1_formula,
        })
    }

    pub fn compute(object: &DigitalObject) -> Result<Self> {
        Self::new(object, &object.census())
    }

    /// `g_i = |H_i|`; zero for dimensions that carry no gaps.
    pub fn g(&self, i: usize) -> usize {
        self.hubs.get(i).map_or(0, Vec::len)
    }

    /// Whether the brute-force `g_0` equals the curve formula.
    pub fn g0_agrees(&self) -> Option<bool> {
        self.g0_formula.map(|f| f == self.g(0) as i64)
    }

    pub fn g1_agrees(&self) -> Option<bool> {
        self.g1_formula.map(|f| f == self.g(1) as i64)
    }
}

/// Both sides of `3 c_0 + 4 c_2' + 4 g_1 + 3 g_0 = 2 c_1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CsiCheck {
    pub left: i64,
    pub right: i64,
    pub holds: bool,
}

pub fn csi_identity(census: &CellCensus, gaps: &GapReport) -> Result<CsiCheck> {
    require_3d(census.ambient_n())?;
    let left = 3 * census.c(0) as i64
        + 4 * census.c_non_free(2) as i64
        + 4 * gaps.g(1) as i64
        + 3 * gaps.g(0) as i64;
    let right = 2 * census.c(1) as i64;
    Ok(CsiCheck {
        left,
        right,
        holds: left == right,
    })
}

/// Evaluates the identity on a 3D object with brute-force gap counts.
pub fn csi_identity_check(object: &DigitalObject) -> Result<CsiCheck> {
    require_3d(object.ambient_n())?;
    let census = object.census();
    let gaps = GapReport::new(object, &census)?;
    csi_identity(&census, &gaps)
}

/// A vertex together with its `b_1` in the object.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassifiedVertex {
    pub vertex: Cell,
    pub b1: usize,
}

/// Partition of `C_0(D)` used when counting vertex-edge incidences on a curve.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VertexClasses {
    /// 0-hubs.
    pub hubs: Vec<ClassifiedVertex>,
    /// Vertices bounding some 1-hub.
    pub edge_hub_vertices: Vec<ClassifiedVertex>,
    /// Vertices bounding some non-free 2-cell.
    pub shared_face_vertices: Vec<ClassifiedVertex>,
    /// Everything else.
    pub rest: Vec<ClassifiedVertex>,
}

impl VertexClasses {
    pub fn total(&self) -> usize {
        self.hubs.len() + self.edge_hub_vertices.len() + self.shared_face_vertices.len() + self.rest.len()
    }
}

/// Splits the vertices of a 3D object into the four classes and records each
/// vertex's `b_1`. Fails if a vertex lands in two classes.
pub fn classify_vertices(census: &CellCensus, gaps: &GapReport) -> Result<VertexClasses> {
    require_3d(census.ambient_n())?;
    let hubs0: std::collections::BTreeSet<&Cell> = gaps.hubs[0].iter().collect();
    let mut classes = VertexClasses::default();
    for v in census.cells(0) {
        let is_hub = hubs0.contains(v);
        let on_edge_hub = gaps.hubs[1].iter().any(|h| v.is_subset_of(h));
        let on_shared_face = census.non_free_cells(2).iter().any(|f| v.is_subset_of(f));
        let memberships = [is_hub, on_edge_hub, on_shared_face]
            .iter()
            .filter(|&&m| m)
            .count();
        if memberships > 1 {
            return Err(Error::ClassificationOverlap(v.to_string()));
        }
        let entry = ClassifiedVertex {
            vertex: v.clone(),
            b1: census.b_count(v, 1)?,
        };
        let class = if is_hub {
            &mut classes.hubs
        } else if on_edge_hub {
            &mut classes.edge_hub_vertices
        } else if on_shared_face {
            &mut classes.shared_face_vertices
        } else {
            &mut classes.rest
        };
        class.push(entry);
    }
    Ok(classes)
}

pub fn vertex_classification(object: &DigitalObject) -> Result<VertexClasses> {
    require_3d(object.ambient_n())?;
    let census = object.census();
    let gaps = GapReport::new(object, &census)?;
    classify_vertices(&census, &gaps)
}
