//! Lays out each grid of W(2) as a Mermin square and multiplies out the six
//! row and column signs.

use doily::cli::{mermin_report, Catalog};

fn main() -> doily::Result<()> {
    let catalog = Catalog::build()?;
    let (text, all_negative) = mermin_report(&catalog, false)?;
    print!("{text}");
    println!("every square has sign product -1: {all_negative}");
    Ok(())
}
