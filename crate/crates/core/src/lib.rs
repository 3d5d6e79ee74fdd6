//! Grid cell model for digital objects in `Z^n`.
//!
//! Cells are kept in doubled integer coordinates ([`cell`]), objects are finite
//! voxel sets with a per-dimension cell census ([`object`]), and gaps are found
//! by inspecting the block around every candidate hub ([`gaps`]). On digital
//! 0-curves in 3D the number of 0-gaps equals `-c_0 + 2c_1 - 4c_2 + 8c_3`;
//! [`curves`] validates and generates such curves and [`verify`] checks that
//! formula and the identities it rests on against brute force.
//!
//! ```
//! use voxgap::{gaps::GapReport, DigitalObject};
//!
//! let diagonal = DigitalObject::new(3, vec![vec![0, 0, 0], vec![1, 1, 1]]).unwrap();
//! let report = GapReport::compute(&diagonal).unwrap();
//! assert_eq!(report.g(0), 1);
//! assert_eq!(report.g0_formula, Some(1));
//! ```

pub mod cell;
pub mod curves;
pub mod error;
pub mod gaps;
pub mod incidence;
pub mod object;
pub mod report;
pub mod verify;
pub mod voxfile;

pub use cell::{Cell, Direction, Voxel};
pub use error::{Error, Result};
pub use object::{CellCensus, DigitalObject, DuplicatePolicy};
