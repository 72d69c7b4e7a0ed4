//! Builds W(2) from the symplectic form and from the parabolic quadric,
//! checks both are GQ(2,2), and maps one onto the other.

use doily::{build_q42, build_w2_symplectic, dual, find_isomorphism, verify_gq};

fn main() -> doily::Result<()> {
    let symplectic = build_w2_symplectic();
    let quadric = build_q42();
    for (name, w) in [("symplectic", &symplectic), ("quadric", &quadric)] {
        let g = w.geometry();
        let order = verify_gq(g).expect("both models satisfy the GQ axioms");
        println!(
            "{name:>10}: {} points, {} lines, GQ({}, {})",
            g.num_points(),
            g.num_lines(),
            order.s,
            order.t
        );
    }

    let iso = find_isomorphism(symplectic.geometry(), quadric.geometry())
        .expect("the two models are isomorphic");
    println!("\nsymplectic label -> quadric label");
    for x in 0..15 {
        println!(
            "  {} -> {}",
            symplectic.label(x),
            quadric.label(iso.image(x))
        );
    }

    let d = dual(symplectic.geometry())?;
    let self_dual = find_isomorphism(symplectic.geometry(), &d).is_some();
    println!("\nW(2) is self-dual: {self_dual}");
    Ok(())
}
