// Incidence structures and the degree-sum identity, on the Fano plane and on
// the vertex/edge structure of a face pair.

use std::error::Error;

use voxgap::incidence::{degree_sum_check, IncidenceStructure};
use voxgap::DigitalObject;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let lines = [[1, 2, 3], [1, 4, 5], [1, 6, 7], [2, 4, 6], [2, 5, 7], [3, 4, 7], [3, 5, 6]];
    let relation = lines
        .iter()
        .enumerate()
        .flat_map(|(b, line)| line.iter().map(move |&p| (p, b)));
    let fano = IncidenceStructure::new(1..=7, 0..7, relation)?;
    let d = degree_sum_check(&fano);
    println!("Fano plane: sum r_p = {}, sum k_B = {}", d.left, d.right);

    let pair = DigitalObject::new(3, vec![vec![0, 0, 0], vec![1, 0, 0]])?.census();
    let s = IncidenceStructure::from_census(&pair, 0, 1)?;
    let d = degree_sum_check(&s);
    println!("face pair (C0, C1, <): sum r_p = {}, sum k_B = {}", d.left, d.right);
    let mut histogram = std::collections::BTreeMap::new();
    for r in s.point_degrees().values() {
        *histogram.entry(*r).or_insert(0) += 1;
    }
    println!("  vertex degrees (b1 -> count): {histogram:?}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
