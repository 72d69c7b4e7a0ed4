//! Counts the triads of W(2) by number of centers and shows that unicentric
//! triads live in ovoids while tricentric ones do not.

use doily::{
    build_w2_symplectic, enumerate_hyperplanes, enumerate_triads, HyperplaneKind, TriadKind,
};

fn main() -> doily::Result<()> {
    let g = build_w2_symplectic().geometry().clone();
    let triads = enumerate_triads(&g);
    let ovoids: Vec<_> = enumerate_hyperplanes(&g)?
        .into_iter()
        .filter(|h| h.kind == HyperplaneKind::Ovoid)
        .collect();

    for kind in [TriadKind::Unicentric, TriadKind::Tricentric] {
        let of_kind: Vec<_> = triads.iter().filter(|t| t.kind == kind).collect();
        let in_ovoid = of_kind
            .iter()
            .filter(|t| ovoids.iter().any(|o| t.points().is_subset(o.points)))
            .count();
        println!(
            "{kind:?}: {} triads, {in_ovoid} inside an ovoid",
            of_kind.len()
        );
        if let Some(t) = of_kind.first() {
            println!("  e.g. {} with centers {}", t.points(), t.centers);
        }
    }
    println!("total: {}", triads.len());
    Ok(())
}
