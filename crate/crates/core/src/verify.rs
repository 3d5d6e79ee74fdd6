//! One-shot identity suite: every counting identity of the grid cell model
//! re-derived on a concrete object and on the canonical two-voxel fixtures,
//! collected into a verdict table.

use std::fmt;

use serde::Serialize;

use crate::cell;
use crate::curves::{validate_curve, CurveCheck};
use crate::error::Result;
use crate::gaps::{classify_vertices, csi_identity, ClassifiedVertex, GapReport};
use crate::incidence::{degree_sum_check, IncidenceStructure};
use crate::object::{CellCensus, DigitalObject};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerdictRow {
    pub claim: String,
    pub input: String,
    pub expected: i64,
    pub observed: i64,
    pub pass: bool,
    /// Rows outside the hypothesis of their claim. Reported, never failing.
    pub informational: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerdictTable {
    pub rows: Vec<VerdictRow>,
    pub curve: Option<CurveCheck>,
}

impl VerdictTable {
    fn push(&mut self, claim: impl Into<String>, input: &str, expected: i64, observed: i64) {
        self.rows.push(VerdictRow {
            claim: claim.into(),
            input: input.to_string(),
            expected,
            observed,
            pass: expected == observed,
            informational: false,
        });
    }

    fn note(&mut self, claim: impl Into<String>, input: &str, expected: i64, observed: i64) {
        self.push(claim, input, expected, observed);
        self.rows.last_mut().unwrap().informational = true;
    }

    /// Rows that count against the verdict and did not pass.
    pub fn failures(&self) -> impl Iterator<Item = &VerdictRow> {
        self.rows.iter().filter(|r| !r.informational && !r.pass)
    }

    pub fn all_pass(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn row(&self, claim: &str) -> Option<&VerdictRow> {
        self.rows.iter().find(|r| r.claim == claim)
    }
}

impl fmt::Display for VerdictTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.rows.iter().map(|r| r.claim.len()).max().unwrap_or(5);
        for r in &self.rows {
            let status = match (r.informational, r.pass) {
                (true, _) => "info",
                (false, true) => "pass",
                (false, false) => "FAIL",
            };
            writeln!(
                f,
                "{status}  {:<width$}  expected={:<6} observed={:<6} [{}]",
                r.claim, r.expected, r.observed, r.input
            )?;
        }
        Ok(())
    }
}

/// `num / den * c` in exact integer arithmetic. The quotient must be integral.
fn exact_scaled(num: i64, den: i64, c: u64) -> i64 {
    let scaled = num * c as i64;
    assert_eq!(scaled % den, 0, "{num}/{den} * {c} is not integral");
    scaled / den
}

fn fixture(points: &[[i64; 3]]) -> DigitalObject {
    DigitalObject::new(3, points.iter().map(|p| p.to_vec())).expect("fixture is well formed")
}

fn general_rows(table: &mut VerdictTable, census: &CellCensus) -> Result<()> {
    let n = census.ambient_n();
    for i in 0..n {
        table.push(
            format!("partition c{i}"),
            "object",
            census.c(i) as i64,
            (census.c_free(i) + census.c_non_free(i)) as i64,
        );
    }
    if n == 3 {
        table.push(
            "c2 = 6c3 - c2'",
            "object",
            census.c(2) as i64,
            6 * census.c(3) as i64 - census.c_non_free(2) as i64,
        );
    }
    table.push(
        format!("c(n-1) = 2n c(n) - c(n-1)' [n={n}]"),
        "object",
        census.c(n - 1) as i64,
        (2 * n * census.c(n)) as i64 - census.c_non_free(n - 1) as i64,
    );
    for j in 1..=n {
        for i in 0..j {
            let d = degree_sum_check(&IncidenceStructure::from_census(census, i, j)?);
            table.push(format!("degree sum (C{i},C{j})"), "object", d.left as i64, d.right as i64);
        }
    }
    Ok(())
}

fn fixture_rows(table: &mut VerdictTable) -> Result<()> {
    let face_block = fixture(&[[0, 0, 0], [1, 0, 0]]).census();
    for i in 0..=2 {
        let c = cell::const_i_to_j(i, 3, 3)?;
        table.push(
            format!("2-block c{i} = (9+i)/6 c_(i->3)"),
            "face pair {(0,0,0),(1,0,0)}",
            exact_scaled(9 + i as i64, 6, c),
            face_block.c(i) as i64,
        );
    }
    let tandem = fixture(&[[0, 0, 0], [1, 1, 0]]).census();
    for i in 0..=1i64 {
        let c = cell::const_i_to_j(i as usize, 3, 3)?;
        table.push(
            format!("1-tandem c{i} = (42+5i-i^2)/24 c_(i->3)"),
            "edge pair {(0,0,0),(1,1,0)}",
            exact_scaled(42 + 5 * i - i * i, 24, c),
            tandem.c(i as usize) as i64,
        );
    }
    let single = fixture(&[[0, 0, 0]]).census();
    for j in 1..=2 {
        for i in 0..j {
            let e = cell::canonical_cell(i, 3)?;
            let observed = single.b_count(&e, j)? as i64;
            let binom = cell::binomial((3 - i) as u64, (j - i) as u64) as i64;
            table.push(format!("b{j}({i}-cell) = C(3-i,j-i)"), "single voxel", binom, observed);
            let quotient = cell::const_i_to_j(i, j, 3)? * cell::const_i_to_j(j, 3, 3)?
                / cell::const_i_to_j(i, 3, 3)?;
            table.push(
                format!("b{j}({i}-cell) = c_(i->j) c_(j->3) / c_(i->3)"),
                "single voxel",
                quotient as i64,
                observed,
            );
        }
    }
    Ok(())
}

fn class_degree_row(table: &mut VerdictTable, claim: &str, class: &[ClassifiedVertex], b1: usize) {
    table.push(
        claim,
        "object",
        class.len() as i64,
        class.iter().filter(|v| v.b1 == b1).count() as i64,
    );
}

fn curve_rows(table: &mut VerdictTable, census: &CellCensus, gaps: &GapReport) -> Result<()> {
    let g0 = gaps.g(0) as i64;
    let g1 = gaps.g(1) as i64;
    let c2n = census.c_non_free(2) as i64;
    match classify_vertices(census, gaps) {
        Ok(classes) => {
            table.push("vertex classes disjoint", "object", 0, 0);
            table.push("|A| = g0", "object", g0, classes.hubs.len() as i64);
            table.push("|B| = 2 g1", "object", 2 * g1, classes.edge_hub_vertices.len() as i64);
            table.push("|C| = 4 c2'", "object", 4 * c2n, classes.shared_face_vertices.len() as i64);
            table.push(
                "|Rest| = c0 - g0 - 2g1 - 4c2'",
                "object",
                census.c(0) as i64 - g0 - 2 * g1 - 4 * c2n,
                classes.rest.len() as i64,
            );
            class_degree_row(table, "b1 = 6 on 0-hubs", &classes.hubs, 6);
            class_degree_row(table, "b1 = 5 on 1-hub vertices", &classes.edge_hub_vertices, 5);
            class_degree_row(table, "b1 = 4 on shared-face vertices", &classes.shared_face_vertices, 4);
            class_degree_row(table, "b1 = 3 elsewhere", &classes.rest, 3);
        }
        Err(_) => table.push("vertex classes disjoint", "object", 0, 1),
    }
    let csi = csi_identity(census, gaps)?;
    table.push("3c0 + 4c2' + 4g1 + 3g0 = 2c1", "object", csi.right, csi.left);
    table.push(
        "g0 = -c0 + 2c1 - 4c2 + 8c3",
        "object",
        g0,
        gaps.g0_formula.expect("3d"),
    );
    Ok(())
}

/// Runs every applicable identity on `object`.
///
/// Rows for general n are always present. 3D rows add the `c_2` identity,
/// `g_1 = 2c_2* - c_1*` and the two-voxel fixture constants. Vertex classes,
/// the `c_1` incidence identity and the `g_0` formula are checked only when the
/// object is a digital 0-curve; otherwise the `g_0` comparison is reported as
/// an informational row.
pub fn run_identity_suite(object: &DigitalObject) -> Result<VerdictTable> {
    let census = object.census();
    let mut table = VerdictTable::default();
    general_rows(&mut table, &census)?;
    if object.ambient_n() != 3 {
        return Ok(table);
    }
    let gaps = GapReport::new(object, &census)?;
    table.push(
        "g1 = 2c2* - c1*",
        "object",
        gaps.g(1) as i64,
        gaps.g1_formula.expect("3d"),
    );
    fixture_rows(&mut table)?;
    let curve = validate_curve(object, 0)?;
    if curve.is_valid {
        curve_rows(&mut table, &census, &gaps)?;
    } else {
        table.note(
            "g0 formula (not a 0-curve)",
            "object",
            gaps.g(0) as i64,
            gaps.g0_formula.expect("3d"),
        );
    }
    table.curve = Some(curve);
    Ok(table)
}
