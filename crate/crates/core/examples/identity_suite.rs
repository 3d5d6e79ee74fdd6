// The full verdict table on a generated curve and on the 2x2x2 cube, where
// the 0-gap formula is out of its hypothesis.

use std::error::Error;

use voxgap::curves::generate_curve;
use voxgap::verify::run_identity_suite;
use voxgap::DigitalObject;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let curve = generate_curve(10, 42, 0)?;
    let table = run_identity_suite(&curve)?;
    println!("generated curve (10, 42):\n{table}");
    assert!(table.all_pass());

    let cube = DigitalObject::new(3, (0..8).map(|b| vec![b & 1, (b >> 1) & 1, (b >> 2) & 1]))?;
    let table = run_identity_suite(&cube)?;
    println!("2x2x2 cube:\n{table}");
    assert!(table.all_pass());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
