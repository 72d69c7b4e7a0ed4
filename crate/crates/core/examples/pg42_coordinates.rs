//! Identifies the Veldkamp space with PG(4,2): every hyperplane is the zero
//! set of one linear functional on the quadric coordinates.

use doily::{
    build_q42, build_veldkamp_space, build_w2_symplectic, find_isomorphism, verify_pg42_isomorphism,
};

fn main() -> doily::Result<()> {
    let w = build_w2_symplectic();
    let q = build_q42();
    let iso = find_isomorphism(w.geometry(), q.geometry()).expect("models are isomorphic");
    let coords = w.with_labels_from(&q, &iso)?;
    let v = build_veldkamp_space(&w)?;
    let report = verify_pg42_isomorphism(&v, &coords)?;

    for (h, f) in v.hyperplanes().iter().zip(&report.functionals) {
        println!(
            "{:<6} {:<10} functional {}",
            h.kind.name(),
            h.points.len(),
            f
        );
    }
    println!(
        "\n{} lines map to zero-sum triples of functionals",
        report.zero_sum_lines
    );
    let rule = doily::veldkamp::check_third_member_rule(&w, &v)?;
    println!("third-member rule agrees with the scan on {rule} pairs");
    Ok(())
}
