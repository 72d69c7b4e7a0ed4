//! Counts the automorphisms of W(2) and of a few smaller geometries.

use doily::gf2::ProjectiveSpace;
use doily::{automorphism_count, build_w2_symplectic, PointLineGeometry};

fn main() -> doily::Result<()> {
    let w = build_w2_symplectic();
    println!("W(2):        {}", automorphism_count(w.geometry())?);
    println!(
        "3x3 grid:    {}",
        automorphism_count(&PointLineGeometry::grid(3)?)?
    );
    println!(
        "PG(2,2):     {}",
        automorphism_count(&ProjectiveSpace::new(2)?.geometry()?)?
    );
    Ok(())
}
