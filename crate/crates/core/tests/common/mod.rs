#![allow(dead_code)]

use std::path::PathBuf;

use rand::{RngExt, SeedableRng};
use rand_xoshiro::SplitMix64;
use voxgap::{DigitalObject, DuplicatePolicy};

/// Up to `max_voxels` voxels drawn uniformly from the box `[0, side)^n`,
/// duplicates dropped.
pub fn random_object(n: usize, max_voxels: usize, side: i64, seed: u64) -> DigitalObject {
    let mut rng = SplitMix64::seed_from_u64(seed);
    let count = rng.random_range(1..=max_voxels);
    let points: Vec<Vec<i64>> = (0..count)
        .map(|_| (0..n).map(|_| rng.random_range(0..side)).collect())
        .collect();
    DigitalObject::with_policy(n, points, DuplicatePolicy::Lenient)
        .expect("points are in range")
        .0
}

pub fn cube_2x2x2() -> DigitalObject {
    DigitalObject::new(3, (0..8).map(|b| vec![b & 1, (b >> 1) & 1, (b >> 2) & 1])).unwrap()
}

pub fn object3(points: &[[i64; 3]]) -> DigitalObject {
    DigitalObject::new(3, points.iter().map(|p| p.to_vec())).unwrap()
}

/// A fresh path under the system temp directory.
pub fn scratch_path(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("voxgap-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}
