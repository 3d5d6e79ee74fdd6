// Brute-force gap detection next to the closed-form counts.

use std::error::Error;

use voxgap::gaps::{csi_identity_check, GapReport};
use voxgap::DigitalObject;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let objects = [
        ("corner pair", vec![vec![0, 0, 0], vec![1, 1, 1]]),
        ("edge pair", vec![vec![0, 0, 0], vec![1, 1, 0]]),
        ("staircase", vec![vec![0, 0, 0], vec![1, 1, 0], vec![2, 2, 1], vec![3, 3, 2], vec![3, 4, 3]]),
    ];
    for (name, points) in objects {
        let object = DigitalObject::new(3, points)?;
        let report = GapReport::compute(&object)?;
        println!("{name}:");
        for (i, hubs) in report.hubs.iter().enumerate() {
            let list: Vec<String> = hubs.iter().map(ToString::to_string).collect();
            println!("  g{i} = {} {}", hubs.len(), list.join(" "));
        }
        println!(
            "  g1 formula {:?}, g0 formula {:?}",
            report.g1_formula.unwrap(),
            report.g0_formula.unwrap()
        );
        let csi = csi_identity_check(&object)?;
        println!("  3c0 + 4c2' + 4g1 + 3g0 = {} vs 2c1 = {}", csi.left, csi.right);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
