//! Text and JSON renderings shared by the command-line front end.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

use crate::cell::{self, Cell};
use crate::curves::CurveCheck;
use crate::error::Result;
use crate::gaps::GapReport;
use crate::object::{CellCensus, DigitalObject};

pub fn census_text(object: &DigitalObject, census: &CellCensus) -> String {
    let mut out = format!("n={} voxels={}\n", object.ambient_n(), object.len());
    for row in census.rows() {
        match (row.free, row.non_free) {
            (Some(f), Some(nf)) => writeln!(out, "i={}: {} {} {}", row.i, row.total, f, nf),
            _ => writeln!(out, "i={}: {}", row.i, row.total),
        }
        .unwrap();
    }
    out
}

pub fn census_json(object: &DigitalObject, census: &CellCensus) -> Value {
    json!({
        "n": object.ambient_n(),
        "voxels": object.len(),
        "rows": census.rows(),
    })
}

fn hub_line(i: usize, hub: &Cell) -> String {
    let doubled: Vec<String> = hub.coords().iter().map(i64::to_string).collect();
    format!("hub{i} {} doubled=({})", hub, doubled.join(","))
}

pub fn gaps_text(object: &DigitalObject, report: &GapReport, curve: Option<&CurveCheck>) -> String {
    let mut out = format!("n={} voxels={}", object.ambient_n(), object.len());
    if let Some(c) = curve {
        out.push_str(if c.is_valid { " 0-curve=yes" } else { " 0-curve=no" });
    }
    out.push('\n');
    let counts: Vec<String> = (0..report.hubs.len())
        .map(|i| format!("g{i}={}", report.g(i)))
        .collect();
    writeln!(out, "{}", counts.join(" ")).unwrap();
    for (i, hubs) in report.hubs.iter().enumerate() {
        for h in hubs {
            writeln!(out, "{}", hub_line(i, h)).unwrap();
        }
    }
    if let (Some(f0), Some(f1)) = (report.g0_formula, report.g1_formula) {
        let in_hypothesis = curve.is_some_and(|c| c.is_valid);
        let verdict = match (in_hypothesis, report.g0_agrees() == Some(true)) {
            (false, _) => "out-of-hypothesis (not a 0-curve)",
            (true, true) => "agree",
            (true, false) => "DISAGREE",
        };
        writeln!(out, "g0={} formula={f0} {verdict}", report.g(0)).unwrap();
        let verdict = if report.g1_agrees() == Some(true) { "agree" } else { "DISAGREE" };
        writeln!(out, "g1={} formula={f1} {verdict}", report.g(1)).unwrap();
    }
    out
}

pub fn gaps_json(object: &DigitalObject, report: &GapReport, curve: Option<&CurveCheck>) -> Value {
    let hubs: Vec<Value> = report
        .hubs
        .iter()
        .enumerate()
        .map(|(i, hs)| {
            json!({
                "i": i,
                "g": hs.len(),
                "hubs": hs.iter().map(|h| json!({
                    "doubled": h.coords(),
                    "point": h.half_integer_string(),
                })).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "n": object.ambient_n(),
        "voxels": object.len(),
        "zero_curve": curve.map(|c| c.is_valid),
        "gaps": hubs,
        "g0_formula": report.g0_formula,
        "g1_formula": report.g1_formula,
        "g0_agrees": report.g0_agrees(),
        "g1_agrees": report.g1_agrees(),
    })
}

/// Closed-form and enumerated bounding constants for one `(i, j)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConstantRow {
    pub i: usize,
    pub j: usize,
    pub to_closed: u64,
    pub from_closed: u64,
    pub to_enumerated: u64,
    pub from_enumerated: u64,
}

impl ConstantRow {
    pub fn agrees(&self) -> bool {
        self.to_closed == self.to_enumerated && self.from_closed == self.from_enumerated
    }
}

/// `c_{i→j}` and `c_{i←j}` for all `0 <= i < j <= n`, each against a lattice
/// scan around a representative cell.
pub fn constants_table(n: usize) -> Result<Vec<ConstantRow>> {
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i + 1..=n {
            rows.push(ConstantRow {
                i,
                j,
                to_closed: cell::const_i_to_j(i, j, n)?,
                from_closed: cell::const_i_from_j(i, j, n)?,
                to_enumerated: cell::scan_face_count(&cell::canonical_cell(j, n)?, i) as u64,
                from_enumerated: cell::scan_coface_count(&cell::canonical_cell(i, n)?, j) as u64,
            });
        }
    }
    Ok(rows)
}

pub fn constants_text(n: usize, rows: &[ConstantRow]) -> String {
    let mut out = format!("n={n}  (i,j): c_i->j | c_i<-j  enumerated\n");
    for r in rows {
        writeln!(
            out,
            "({},{}): {} | {}  enumerated {} | {}  {}",
            r.i,
            r.j,
            r.to_closed,
            r.from_closed,
            r.to_enumerated,
            r.from_enumerated,
            if r.agrees() { "ok" } else { "MISMATCH" }
        )
        .unwrap();
    }
    out
}
