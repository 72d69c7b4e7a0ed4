//! Builds the Veldkamp space of W(2) and prints its census of line types.

use doily::cli::table1_text;
use doily::{build_veldkamp_space, build_w2_symplectic};

fn main() -> doily::Result<()> {
    let w = build_w2_symplectic();
    let v = build_veldkamp_space(&w)?;
    println!(
        "{} Veldkamp points, {} Veldkamp lines\n",
        v.hyperplanes().len(),
        v.lines().len()
    );
    print!("{}", table1_text(v.census()));

    println!("\none line of each type:");
    for t in doily::LineType::ALL {
        let line = v
            .lines()
            .iter()
            .find(|l| l.line_type == t)
            .expect("every type occurs");
        let kinds: Vec<&str> = line.members.iter().map(|h| h.kind.name()).collect();
        println!(
            "  {:<17} core {:<16} members {:?}",
            t.title(),
            line.core.to_string(),
            kinds
        );
    }
    Ok(())
}
