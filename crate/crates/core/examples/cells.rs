// Cells of the grid model: construction from a voxel and a direction word,
// faces, blocks and the bounding constants.

use std::error::Error;

use voxgap::cell::{self, cell_from, Direction};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let x = [2, 0, -1];
    for word in [[0, 0, 0], [0, -1, 0], [1, 1, 0], [1, 1, 1]] {
        let e = cell_from(&x, &Direction::new(word.to_vec())?)?;
        println!(
            "x={x:?} theta={word:?} -> doubled {:?} = {e}, a {}-cell",
            e.coords(),
            e.dimension()
        );
    }

    let voxel = cell_from(&[0, 0, 0], &Direction::new(vec![0, 0, 0])?)?;
    for i in 0..3 {
        println!("the unit voxel has {} {i}-faces", cell::faces_of(&voxel, i)?.len());
    }

    let vertex = cell_from(&[0, 0, 0], &Direction::new(vec![1, 1, 1])?)?;
    let block = cell::cofaces_voxels(&vertex)?;
    println!("the vertex {vertex} bounds {} voxels:", block.len());
    for v in &block {
        println!("  {v}");
    }

    println!("n=3 bounding constants c_(i->j) | c_(i<-j):");
    for j in 1..=3 {
        for i in 0..j {
            println!(
                "  ({i},{j}): {} | {}",
                cell::const_i_to_j(i, j, 3)?,
                cell::const_i_from_j(i, j, 3)?
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
