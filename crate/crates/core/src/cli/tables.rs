use std::collections::BTreeMap;
use std::fmt::Write;

use super::catalog::Catalog;
use crate::error::Result;
use crate::geometry::HyperplaneKind;
use crate::pauli::{mermin_square, MerminSquare};
use crate::veldkamp::Census;

pub const TABLE1_CSV_HEADER: &str = "core_set_type,perp_sets,grids,ovoids,count";

pub fn table1_text(census: &Census) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<18} {:>9} {:>6} {:>7} {:>5}",
        "Type of Core-Set", "Perp-Sets", "Grids", "Ovoids", "#"
    );
    for row in &census.rows {
        let c = row.composition;
        let _ = writeln!(
            out,
            "{:<18} {:>9} {:>6} {:>7} {:>5}",
            row.line_type.title(),
            c.perps,
            c.grids,
            c.ovoids,
            row.count
        );
    }
    let _ = writeln!(
        out,
        "{:<18} {:>9} {:>6} {:>7} {:>5}",
        "Total",
        "",
        "",
        "",
        census.total_lines()
    );
    out
}

pub fn table1_csv(census: &Census) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{TABLE1_CSV_HEADER}");
    for row in &census.rows {
        let c = row.composition;
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            row.line_type.title(),
            c.perps,
            c.grids,
            c.ovoids,
            row.count
        );
    }
    out
}

/// One square per grid, in hyperplane order.
pub fn mermin_squares(cat: &Catalog) -> Result<Vec<MerminSquare>> {
    cat.veldkamp
        .hyperplanes()
        .iter()
        .filter(|h| h.kind == HyperplaneKind::Grid)
        .map(|h| mermin_square(h, &cat.bijection))
        .collect()
}

fn sign(s: i8) -> &'static str {
    if s > 0 {
        "+"
    } else {
        "-"
    }
}

/// Returns the report and whether every square has sign product -1.
pub fn mermin_report(cat: &Catalog, quiet: bool) -> Result<(String, bool)> {
    let squares = mermin_squares(cat)?;
    let mut out = String::new();
    // minus signs per square -> number of squares
    let mut distribution: BTreeMap<usize, usize> = BTreeMap::new();
    for (k, sq) in squares.iter().enumerate() {
        let minus = sq
            .row_signs
            .iter()
            .chain(&sq.col_signs)
            .filter(|&&s| s < 0)
            .count();
        *distribution.entry(minus).or_default() += 1;
        if quiet {
            continue;
        }
        let grid = sq.row(0) | sq.row(1) | sq.row(2);
        let _ = writeln!(out, "square {k} (grid mask {:#06x})", grid.mask());
        for (i, row) in sq.cells.iter().enumerate() {
            let names: Vec<String> = row.iter().map(|p| p.mnemonic()).collect();
            let _ = writeln!(out, "  {}  | {}", names.join("  "), sign(sq.row_signs[i]));
        }
        let cols: Vec<&str> = sq.col_signs.iter().map(|&s| sign(s)).collect();
        let _ = writeln!(out, "  {}", cols.join("   "));
        let _ = writeln!(out, "  six-sign product: {}", sq.sign_product());
    }
    let all_negative = squares.iter().all(|s| s.sign_product() == -1);
    let dist: Vec<String> = distribution
        .iter()
        .map(|(minus, n)| format!("{n} with {minus} minus"))
        .collect();
    let _ = writeln!(
        out,
        "{} Mermin squares; six-sign product -1 for {}; sign distribution: {}",
        squares.len(),
        squares.iter().filter(|s| s.sign_product() == -1).count(),
        dist.join(", ")
    );
    Ok((out, all_negative))
}
