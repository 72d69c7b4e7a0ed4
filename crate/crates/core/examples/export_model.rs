//! Serializes the full model to JSON, reads it back and rebuilds it.

use doily::cli::{export_dot, Catalog, ExportModel};

fn main() -> doily::Result<()> {
    let catalog = Catalog::build()?;
    let model = ExportModel::from_catalog(&catalog);
    let json = model.to_json();
    println!("schema {}: {} bytes of JSON", model.schema, json.len());

    let parsed = ExportModel::from_json(&json)?;
    let rebuilt = parsed.reconstruct()?;
    println!("round trip preserves the model: {}", rebuilt == model);
    println!(
        "{} points, {} lines, {} hyperplanes, {} Veldkamp lines",
        parsed.points.len(),
        parsed.lines.len(),
        parsed.hyperplanes.len(),
        parsed.veldkamp_lines.len()
    );

    let dot = export_dot(&catalog);
    println!("DOT export: {} edges", dot.matches(" -- ").count());
    Ok(())
}
