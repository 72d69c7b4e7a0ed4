//! Builds the Fano plane attached to each point of W(2) from double perps.

use doily::gf2::ProjectiveSpace;
use doily::{build_w2_symplectic, fano_plane_at, find_isomorphism};

fn main() -> doily::Result<()> {
    let w = build_w2_symplectic();
    let pg22 = ProjectiveSpace::new(2)?.geometry()?;
    for x in 0..15 {
        let plane = fano_plane_at(&w, x)?;
        let lines: Vec<String> = plane.lines().iter().map(|l| l.to_string()).collect();
        let iso = find_isomorphism(&plane, &pg22).is_some();
        println!("{} : {}  PG(2,2): {iso}", w.label(x), lines.join(" "));
    }
    Ok(())
}
