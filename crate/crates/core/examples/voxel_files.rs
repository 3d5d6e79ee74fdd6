// Reading and writing voxel files in both formats.

use std::error::Error;

use voxgap::voxfile::VoxelFile;
use voxgap::DuplicatePolicy;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let text = "# a diagonal staircase\n0 0 0\n1 1 1\n2 2 2   # last\n\n1 1 1\n";
    let (object, dropped) = VoxelFile::parse_text(text, 3)?.into_object(DuplicatePolicy::Lenient)?;
    println!("{} voxels read, {dropped} duplicate dropped", object.len());

    let file = VoxelFile::from_object(&object);
    print!("text:\n{}", file.to_text());
    print!("json: {}", file.to_json());

    let back = VoxelFile::parse_json(&file.to_json())?;
    assert_eq!(back, file);

    match VoxelFile::parse_text("0 0 0\n0 0\n", 3) {
        Err(e) => println!("malformed input: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
