//! Voxel files.
//!
//! Text format: one voxel per line as whitespace-separated integers, `#`
//! starts a comment, blank lines are skipped. Structured format: a JSON
//! document `{"n": 3, "voxels": [[0,0,0], ...]}`, selected by the `.json`
//! extension.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::object::{DigitalObject, DuplicatePolicy};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VoxelFile {
    pub n: usize,
    pub voxels: Vec<Vec<i64>>,
}

impl VoxelFile {
    /// Parses the text format for ambient dimension `n`.
    pub fn parse_text(src: &str, n: usize) -> Result<Self> {
        let mut voxels = Vec::new();
        for (idx, raw) in src.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let parse_err = |message: String| Error::Parse {
                line: idx + 1,
                message,
            };
            let coords = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<i64>()
                        .map_err(|_| parse_err(format!("`{tok}` is not an integer")))
                })
                .collect::<Result<Vec<i64>>>()?;
            if coords.len() != n {
                return Err(parse_err(format!(
                    "expected {n} coordinates, found {}",
                    coords.len()
                )));
            }
            voxels.push(coords);
        }
        Ok(VoxelFile { n, voxels })
    }

    pub fn parse_json(src: &str) -> Result<Self> {
        let file: VoxelFile = serde_json::from_str(src)?;
        if let Some((k, v)) = file.voxels.iter().enumerate().find(|(_, v)| v.len() != file.n) {
            return Err(Error::Parse {
                line: k + 1,
                message: format!("voxel {k} has {} coordinates, expected {}", v.len(), file.n),
            });
        }
        Ok(file)
    }

    /// Reads a file, choosing the format by extension. `n` applies to text
    /// files only; JSON files carry their own.
    pub fn read(path: &Path, n: usize) -> Result<Self> {
        let src = fs::read_to_string(path)?;
        if is_json(path) {
            Self::parse_json(&src)
        } else {
            Self::parse_text(&src, n)
        }
    }

    pub fn into_object(self, policy: DuplicatePolicy) -> Result<(DigitalObject, usize)> {
        DigitalObject::with_policy(self.n, self.voxels, policy)
    }

    pub fn from_object(object: &DigitalObject) -> Self {
        VoxelFile {
            n: object.ambient_n(),
            voxels: object.voxels().iter().map(|v| v.coords().to_vec()).collect(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for v in &self.voxels {
            let line: Vec<String> = v.iter().map(i64::to_string).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        let body = if is_json(path) { self.to_json() } else { self.to_text() };
        fs::write(path, body)?;
        Ok(())
    }
}

fn is_json(path: &Path) -> bool {
    path.extension().is_some_and(|e| e.eq_ignore_ascii_case("json"))
}
