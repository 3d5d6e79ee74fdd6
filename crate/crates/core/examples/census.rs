// Cell censuses of the three two-voxel configurations and a larger object.

use std::error::Error;

use voxgap::DigitalObject;

fn show(name: &str, object: &DigitalObject) {
    let census = object.census();
    println!("{name}: {} voxels", object.len());
    for row in census.rows() {
        match (row.free, row.non_free) {
            (Some(f), Some(nf)) => println!("  c{} = {:3}  free {:3}  non-free {:3}", row.i, row.total, f, nf),
            _ => println!("  c{} = {:3}", row.i, row.total),
        }
    }
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    show("face pair", &DigitalObject::new(3, vec![vec![0, 0, 0], vec![1, 0, 0]])?);
    show("edge pair", &DigitalObject::new(3, vec![vec![0, 0, 0], vec![1, 1, 0]])?);
    show("corner pair", &DigitalObject::new(3, vec![vec![0, 0, 0], vec![1, 1, 1]])?);

    let slab: Vec<Vec<i64>> = (0..3)
        .flat_map(|x| (0..3).map(move |y| vec![x, y, 0]))
        .collect();
    let slab = DigitalObject::new(3, slab)?;
    show("3x3 slab", &slab);
    let census = slab.census();
    println!(
        "  c2 = {} and 6 c3 - c2' = {}",
        census.c(2),
        6 * census.c(3) - census.c_non_free(2)
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
