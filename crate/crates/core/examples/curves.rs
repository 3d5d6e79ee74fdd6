// Random digital 0-curves: generate, validate, and compare the 0-gap
// formula with brute force.

use std::error::Error;

use voxgap::curves::{generate_curve, validate_curve};
use voxgap::gaps::{detect_hubs, g0_closed_form};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    println!("length seed  c0  c1  c2  c3  formula  brute");
    for (length, seed) in [(2, 0), (10, 42), (25, 7), (40, 1234)] {
        let curve = generate_curve(length, seed, 0)?;
        let check = validate_curve(&curve, 0)?;
        assert!(check.is_valid);
        let census = curve.census();
        let c = census.counts();
        let brute = detect_hubs(&curve, &census, 0)?.len();
        println!(
            "{length:6} {seed:4} {:3} {:3} {:3} {:3} {:8} {:6}",
            c[0],
            c[1],
            c[2],
            c[3],
            g0_closed_form(&census)?,
            brute
        );
    }

    let curve = generate_curve(12, 5, 2)?;
    let check = validate_curve(&curve, 2)?;
    println!(
        "a 2-curve of {} voxels: valid={} extremes {} and {}",
        curve.len(),
        check.is_valid,
        check.extremes[0],
        check.extremes[1]
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
