//! Cells of the cubical grid model in doubled coordinates.
//!
//! An i-cell of `C_n` is the product of `i` closed unit intervals and `n - i`
//! half-integer singletons. Doubling every coordinate turns that into a plain
//! integer vector: an even entry `2x` stands for the interval
//! `[x - 1/2, x + 1/2]`, an odd entry `2x ± 1` for the singleton `x ± 1/2`.
//! Two cells are the same point set iff their doubled vectors are equal, so the
//! vector doubles as the identity key.
//!
//! Lattice points are limited to `|x| <= 2^61`. Doubled coordinates then stay
//! below `2^62 + 1` and every neighbour offset used here fits in an `i64`.

use std::borrow::Borrow;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest absolute lattice coordinate accepted for voxels.
pub const COORD_LIMIT: i64 = 1 << 61;

/// Largest absolute doubled coordinate accepted for cells.
pub const DOUBLED_LIMIT: i64 = (1 << 62) + 1;

/// A voxel, identified by the integer point at its center.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Voxel(Vec<i64>);

impl Voxel {
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::ZeroDimension);
        }
        if let Some(&c) = coords.iter().find(|c| c.unsigned_abs() > COORD_LIMIT as u64) {
            return Err(Error::CoordinateOutOfRange(c));
        }
        Ok(Voxel(coords))
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn ambient_n(&self) -> usize {
        self.0.len()
    }

    /// The n-cell occupied by this voxel.
    pub fn cell(&self) -> Cell {
        Cell {
            coords: self.0.iter().map(|&x| 2 * x).collect(),
        }
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.0
    }
}

impl Borrow<[i64]> for Voxel {
    fn borrow(&self) -> &[i64] {
        &self.0
    }
}

impl fmt::Display for Voxel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// A direction word over `{-1, 0, 1}`.
///
/// Zero entries keep the full unit interval of the voxel along that axis, a
/// non-zero entry picks the left or right facet.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Direction(Vec<i8>);

impl Direction {
    pub fn new(word: Vec<i8>) -> Result<Self> {
        if let Some(&t) = word.iter().find(|t| !(-1..=1).contains(*t)) {
            return Err(Error::InvalidDirection(t));
        }
        Ok(Direction(word))
    }

    pub fn word(&self) -> &[i8] {
        &self.0
    }

    /// Dimension of the cells this word selects: the number of zero entries.
    pub fn cell_dimension(&self) -> usize {
        self.0.len() - self.0.iter().map(|&t| (t as i64 * t as i64) as usize).sum::<usize>()
    }
}

/// A cell of `C_n` in doubled coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Cell {
    coords: Vec<i64>,
}

impl Cell {
    /// Builds a cell directly from doubled coordinates.
    pub fn from_doubled(coords: Vec<i64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::ZeroDimension);
        }
        if let Some(&c) = coords.iter().find(|c| c.unsigned_abs() > DOUBLED_LIMIT as u64) {
            return Err(Error::CoordinateOutOfRange(c));
        }
        Ok(Cell { coords })
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn ambient_n(&self) -> usize {
        self.coords.len()
    }

    /// Number of interval factors, i.e. the number of even coordinates.
    pub fn dimension(&self) -> usize {
        self.coords.iter().filter(|c| *c % 2 == 0).count()
    }

    pub fn is_voxel(&self) -> bool {
        self.dimension() == self.ambient_n()
    }

    /// The voxel this cell is, if it is an n-cell.
    pub fn as_voxel(&self) -> Option<Voxel> {
        self.is_voxel()
            .then(|| Voxel(self.coords.iter().map(|c| c / 2).collect()))
    }

    /// Point-set containment `self ⊆ other`.
    pub fn is_subset_of(&self, other: &Cell) -> bool {
        self.coords.len() == other.coords.len()
            && self.coords.iter().zip(&other.coords).all(|(&a, &b)| {
                if b % 2 != 0 {
                    a == b
                } else {
                    (a - b).abs() <= 1
                }
            })
    }

    /// Renders the cell with exact half-integer coordinates, e.g. `(1/2,0,-3/2)`.
    ///
    /// Even entries are written as the integer center of their interval.
    pub fn half_integer_string(&self) -> String {
        let parts: Vec<String> = self
            .coords
            .iter()
            .map(|&c| {
                if c % 2 == 0 {
                    (c / 2).to_string()
                } else {
                    format!("{c}/2")
                }
            })
            .collect();
        format!("({})", parts.join(","))
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.half_integer_string())
    }
}

/// The cell obtained from the voxel at `x` and the direction `theta`.
///
/// Doubled coordinate `j` is `2 x_j + theta_j`: the whole interval when
/// `theta_j = 0`, otherwise the facet on the side of `theta_j`.
pub fn cell_from(x: &[i64], theta: &Direction) -> Result<Cell> {
    if x.len() != theta.0.len() {
        return Err(Error::DimensionMismatch {
            expected: x.len(),
            found: theta.0.len(),
        });
    }
    let voxel = Voxel::new(x.to_vec())?;
    let coords = voxel
        .0
        .iter()
        .zip(&theta.0)
        .map(|(&xj, &tj)| 2 * xj + tj as i64)
        .collect();
    Ok(Cell { coords })
}

/// `e1 ⊆ e2` or `e2 ⊆ e1`.
pub fn incident(e1: &Cell, e2: &Cell) -> bool {
    e1.is_subset_of(e2) || e2.is_subset_of(e1)
}

/// The bounding relation `e1 < e2`: incident with strictly smaller dimension.
pub fn bounds(e1: &Cell, e2: &Cell) -> bool {
    e1.dimension() < e2.dimension() && incident(e1, e2)
}

/// Cartesian product of per-axis candidate values, in lexicographic order
/// when every candidate list is sorted.
fn product(options: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::with_capacity(options.len())];
    for axis in options {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                axis.iter().map(move |&v| {
                    let mut next = prefix.clone();
                    next.push(v);
                    next
                })
            })
            .collect();
    }
    out
}

/// Every face of `e` of every dimension, `e` included (3^dim(e) cells), in
/// lexicographic order.
pub fn closure(e: &Cell) -> Vec<Cell> {
    let even: Vec<usize> = (0..e.coords.len()).filter(|&k| e.coords[k] % 2 == 0).collect();
    let total = 3usize.pow(even.len() as u32);
    let mut out = Vec::with_capacity(total);
    for mut t in 0..total {
        let mut coords = e.coords.clone();
        for &axis in even.iter().rev() {
            coords[axis] += (t % 3) as i64 - 1;
            t /= 3;
        }
        out.push(Cell { coords });
    }
    out
}

/// The i-faces of `e` (including `e` itself when `i = dim(e)`), sorted.
pub fn faces_of(e: &Cell, i: usize) -> Result<Vec<Cell>> {
    let dim = e.dimension();
    if i > dim {
        return Err(Error::FaceDimensionOutOfRange { requested: i, dim });
    }
    Ok(closure(e).into_iter().filter(|f| f.dimension() == i).collect())
}

/// The j-cells that contain `e` (including `e` itself when `j = dim(e)`), sorted.
pub fn cofaces(e: &Cell, j: usize) -> Result<Vec<Cell>> {
    let dim = e.dimension();
    if j < dim || j > e.ambient_n() {
        return Err(Error::FaceDimensionOutOfRange { requested: j, dim });
    }
    let options: Vec<Vec<i64>> = e
        .coords
        .iter()
        .map(|&c| if c % 2 != 0 { vec![c - 1, c, c + 1] } else { vec![c] })
        .collect();
    Ok(product(&options)
        .into_iter()
        .map(|coords| Cell { coords })
        .filter(|f| f.dimension() == j)
        .collect())
}

/// The `2^(n - dim e)` voxels bounded by `e`, sorted.
pub fn cofaces_voxels(e: &Cell) -> Result<Vec<Cell>> {
    if e.is_voxel() {
        return Err(Error::AlreadyVoxel(e.to_string()));
    }
    cofaces(e, e.ambient_n())
}

/// Lattice points of the voxels bounded by `e` (or of `e` itself when it is a
/// voxel), in lexicographic order.
pub fn block_points(e: &Cell) -> impl Iterator<Item = Vec<i64>> + '_ {
    let odd: Vec<usize> = (0..e.coords.len()).filter(|&k| e.coords[k] % 2 != 0).collect();
    let base: Vec<i64> = e.coords.iter().map(|c| c.div_euclid(2)).collect();
    (0u64..1 << odd.len()).map(move |mask| {
        let mut p = base.clone();
        for (bit, &axis) in odd.iter().rev().enumerate() {
            p[axis] += ((mask >> bit) & 1) as i64;
        }
        p
    })
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, t| acc * (n - t) / (t + 1))
}

fn check_order(i: usize, j: usize, n: usize) -> Result<()> {
    if i < j && j <= n {
        Ok(())
    } else {
        Err(Error::IndexOrder { i, j, n })
    }
}

/// `c_{i→j}`: how many i-cells bound a j-cell, `2^(j-i) C(j, i)`.
pub fn const_i_to_j(i: usize, j: usize, n: usize) -> Result<u64> {
    check_order(i, j, n)?;
    Ok((1u64 << (j - i)) * binomial(j as u64, i as u64))
}

/// `c_{i←j}`: how many j-cells an i-cell bounds, `2^(j-i) C(n-i, j-i)`.
pub fn const_i_from_j(i: usize, j: usize, n: usize) -> Result<u64> {
    check_order(i, j, n)?;
    Ok((1u64 << (j - i)) * binomial((n - i) as u64, (j - i) as u64))
}

/// All cells whose doubled coordinates lie within `radius` of `center`.
fn lattice_window(center: &Cell, radius: i64) -> Vec<Cell> {
    let options: Vec<Vec<i64>> = center
        .coords
        .iter()
        .map(|&c| (c - radius..=c + radius).collect())
        .collect();
    product(&options)
        .into_iter()
        .map(|coords| Cell { coords })
        .collect()
}

/// Counts the i-cells bounding `e` by scanning a lattice window around it and
/// testing [`bounds`] directly. Independent of [`faces_of`].
pub fn scan_face_count(e: &Cell, i: usize) -> usize {
    lattice_window(e, 2)
        .iter()
        .filter(|f| f.dimension() == i && bounds(f, e))
        .count()
}

/// Counts the j-cells bounded by `e` by lattice scan. Independent of [`cofaces`].
pub fn scan_coface_count(e: &Cell, j: usize) -> usize {
    lattice_window(e, 2)
        .iter()
        .filter(|f| f.dimension() == j && bounds(e, f))
        .count()
}

/// A representative i-cell of `C_n`: intervals on the first `i` axes, the
/// positive facet of the origin voxel on the rest.
pub fn canonical_cell(i: usize, n: usize) -> Result<Cell> {
    if n == 0 {
        return Err(Error::ZeroDimension);
    }
    if i > n {
        return Err(Error::FaceDimensionOutOfRange { requested: i, dim: n });
    }
    let coords = (0..n).map(|k| if k < i { 0 } else { 1 }).collect();
    Ok(Cell { coords })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cell(c: &[i64]) -> Cell {
        Cell::from_doubled(c.to_vec()).unwrap()
    }

    fn dir(t: &[i8]) -> Direction {
        Direction::new(t.to_vec()).unwrap()
    }

    #[test]
    fn cell_from_examples() {
        let v = cell_from(&[0, 0, 0], &dir(&[0, 0, 0])).unwrap();
        assert_eq!(v.coords(), &[0, 0, 0]);
        assert_eq!(v.dimension(), 3);

        let p = cell_from(&[0, 0, 0], &dir(&[1, 1, 1])).unwrap();
        assert_eq!(p.coords(), &[1, 1, 1]);
        assert_eq!(p.dimension(), 0);

        let f = cell_from(&[2, 0, -1], &dir(&[0, -1, 0])).unwrap();
        assert_eq!(f.coords(), &[4, -1, -2]);
        assert_eq!(f.dimension(), 2);
    }

    #[test]
    fn cell_from_rejects_length_mismatch() {
        let err = cell_from(&[0, 0], &dir(&[0, 0, 0])).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { expected: 2, found: 3 }));
    }

    #[test]
    fn direction_rejects_out_of_alphabet() {
        assert!(matches!(Direction::new(vec![0, 2]), Err(Error::InvalidDirection(2))));
    }

    #[test]
    fn coordinate_range_is_checked() {
        assert!(Voxel::new(vec![COORD_LIMIT, -COORD_LIMIT]).is_ok());
        assert!(matches!(
            Voxel::new(vec![COORD_LIMIT + 1]),
            Err(Error::CoordinateOutOfRange(_))
        ));
        assert!(cell_from(&[i64::MAX], &dir(&[1])).is_err());
        assert!(Cell::from_doubled(vec![i64::MIN]).is_err());
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(cell(&[0, 0, 0]).dimension(), 3);
        assert_eq!(cell(&[1, 1, 1]).dimension(), 0);
        assert_eq!(cell(&[1, 0, 2]).dimension(), 2);
        assert_eq!(cell(&[-3, 0, -1]).dimension(), 1);
    }

    #[test]
    fn incidence_examples() {
        let v = cell(&[0, 0, 0]);
        assert!(incident(&v, &v));
        assert!(incident(&cell(&[1, 1, 1]), &v));
        assert!(incident(&v, &cell(&[1, 1, 1])));
        assert!(!incident(&cell(&[3, 1, 1]), &v));
    }

    #[test]
    fn bounding_examples() {
        assert!(bounds(&cell(&[1, 1, 1]), &cell(&[0, 0, 0])));
        assert!(!bounds(&cell(&[0, 0, 0]), &cell(&[0, 0, 0])));
        assert!(bounds(&cell(&[1, 1, 0]), &cell(&[1, 0, 0])));
        assert!(!bounds(&cell(&[1, 0, 0]), &cell(&[1, 1, 0])));
    }

    #[test]
    fn faces_of_voxel() {
        let v = cell(&[0, 0, 0]);
        assert_eq!(faces_of(&v, 3).unwrap(), vec![v.clone()]);
        assert_eq!(faces_of(&v, 0).unwrap().len(), 8);
        assert_eq!(faces_of(&v, 1).unwrap().len(), 12);
        assert_eq!(faces_of(&v, 2).unwrap().len(), 6);
        assert!(matches!(
            faces_of(&cell(&[1, 0, 1]), 2),
            Err(Error::FaceDimensionOutOfRange { requested: 2, dim: 1 })
        ));
    }

    #[test]
    fn faces_are_sorted_and_bound_the_cell() {
        let v = cell(&[2, -4, 6]);
        for i in 0..3 {
            let faces = faces_of(&v, i).unwrap();
            assert!(faces.windows(2).all(|w| w[0] < w[1]));
            assert!(faces.iter().all(|f| bounds(f, &v)));
        }
    }

    #[test]
    fn cofaces_voxels_sizes() {
        assert_eq!(cofaces_voxels(&cell(&[1, 1, 1])).unwrap().len(), 8);
        assert_eq!(cofaces_voxels(&cell(&[1, 1, 0])).unwrap().len(), 4);
        let face_block = cofaces_voxels(&cell(&[1, 0, 0])).unwrap();
        assert_eq!(face_block, vec![cell(&[0, 0, 0]), cell(&[2, 0, 0])]);
        for e in [cell(&[1, 1, 1]), cell(&[-1, 0, 3]), cell(&[1, 0, 0])] {
            let direct: Vec<Cell> = block_points(&e)
                .map(|p| Voxel::new(p).unwrap().cell())
                .collect();
            assert_eq!(direct, cofaces_voxels(&e).unwrap());
        }
        assert!(matches!(
            cofaces_voxels(&cell(&[0, 0, 0])),
            Err(Error::AlreadyVoxel(_))
        ));
    }

    #[test]
    fn constants_examples() {
        assert_eq!(const_i_to_j(0, 1, 3).unwrap(), 2);
        assert_eq!(const_i_to_j(0, 1, 7).unwrap(), 2);
        assert_eq!(const_i_from_j(0, 1, 3).unwrap(), 6);
        assert_eq!(const_i_to_j(2, 3, 3).unwrap(), 6);
        assert_eq!(const_i_from_j(2, 3, 3).unwrap(), 2);
        assert_eq!(const_i_to_j(2, 4, 4).unwrap(), 24);
        assert!(matches!(const_i_to_j(1, 1, 3), Err(Error::IndexOrder { .. })));
        assert!(matches!(const_i_from_j(0, 4, 3), Err(Error::IndexOrder { .. })));
    }

    #[test]
    fn scan_counts_match_constants_up_to_four() {
        for n in 1..=4 {
            for j in 1..=n {
                for i in 0..j {
                    let hi = canonical_cell(j, n).unwrap();
                    let lo = canonical_cell(i, n).unwrap();
                    assert_eq!(scan_face_count(&hi, i) as u64, const_i_to_j(i, j, n).unwrap());
                    assert_eq!(scan_coface_count(&lo, j) as u64, const_i_from_j(i, j, n).unwrap());
                }
            }
        }
    }

    #[test]
    fn half_integer_rendering() {
        assert_eq!(cell(&[1, 1, 1]).half_integer_string(), "(1/2,1/2,1/2)");
        assert_eq!(cell(&[-3, 4, 0]).to_string(), "(-3/2,2,0)");
    }

    #[test]
    fn voxel_round_trip() {
        let v = Voxel::new(vec![3, -2]).unwrap();
        assert_eq!(v.cell().coords(), &[6, -4]);
        assert_eq!(v.cell().as_voxel(), Some(v));
        assert_eq!(cell(&[1, 0]).as_voxel(), None);
    }
}
