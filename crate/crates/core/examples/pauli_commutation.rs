//! Pairs the points of W(2) with two-qubit Pauli operators and checks that
//! collinearity is commutation.

use doily::pauli::product;
use doily::{
    build_bijection, build_w2_symplectic, commutes, enumerate_hyperplanes, interpret_hyperplane,
};

fn main() -> doily::Result<()> {
    let w = build_w2_symplectic();
    let bij = build_bijection(&w)?;
    let g = w.geometry();

    println!("points:");
    for (x, op) in bij.operators().iter().enumerate() {
        println!("  {x:>2}  {op}");
    }

    let commuting = (0..15)
        .flat_map(|x| (x + 1..15).map(move |y| (x, y)))
        .filter(|&(x, y)| commutes(bij.operator(x), bij.operator(y)))
        .count();
    println!("\ncommuting pairs: {commuting} of 105");

    println!("\nlines and their products:");
    for line in g.lines() {
        let ops: Vec<_> = line.iter().map(|x| bij.operator(x)).collect();
        let sign = product(ops.iter().copied())
            .identity_sign()
            .expect("±identity");
        let names: Vec<String> = ops.iter().map(|p| p.mnemonic()).collect();
        println!("  {}  product {:+}I", names.join(" "), sign);
    }

    println!("\nhyperplanes as operator sets:");
    for h in enumerate_hyperplanes(g)? {
        println!(
            "  {:<6} {}",
            h.kind.name(),
            interpret_hyperplane(&h, &bij)?.describe()
        );
    }
    Ok(())
}
