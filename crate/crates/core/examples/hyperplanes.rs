//! Enumerates the 31 geometric hyperplanes of W(2) and sorts them into
//! perps, grids and ovoids.

use doily::{build_w2_symplectic, enumerate_hyperplanes, HyperplaneKind};

fn main() -> doily::Result<()> {
    let w = build_w2_symplectic();
    let hyperplanes = enumerate_hyperplanes(w.geometry())?;
    for h in &hyperplanes {
        let detail = match h.kind {
            HyperplaneKind::Perp { center } => format!("perp of {}", w.label(center)),
            k => k.name().to_string(),
        };
        println!("{:>2} points  {:<18} {}", h.points.len(), detail, h.points);
    }
    for name in ["perp", "grid", "ovoid"] {
        let n = hyperplanes.iter().filter(|h| h.kind.name() == name).count();
        println!("{name}: {n}");
    }
    println!("total: {}", hyperplanes.len());
    Ok(())
}
