//! Machine-readable exports: a JSON model that can be read back, Graphviz
//! renderings, and flat CSV census tables. Key names in the JSON model are
//! part of the interface; see the README for the schema.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use super::catalog::Catalog;
use super::tables::table1_csv;
use crate::error::{Error, Result};
use crate::geometry::{HyperplaneKind, PointLineGeometry, PointSet, TriadKind};
use crate::gf2::Gf2Vector;
use crate::w2::{LabeledW2, Model};

pub const SCHEMA: &str = "doily-model/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointRecord {
    pub index: usize,
    /// `(a1, b1, a2, b2)`.
    pub label: Vec<u8>,
    pub label_mask: u32,
    pub pauli: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineRecord {
    pub index: usize,
    pub mask: u64,
    pub points: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HyperplaneRecord {
    pub index: usize,
    pub kind: String,
    pub center: Option<usize>,
    pub mask: u64,
    pub points: Vec<usize>,
    /// Dual PG(4,2) coordinates `(f0, ..., f4)` cutting this hyperplane out of the quadric.
    pub pg42_functional: Vec<u8>,
    pub functional_mask: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VeldkampLineRecord {
    pub index: usize,
    /// Indices into `hyperplanes`.
    pub members: [usize; 3],
    pub core_mask: u64,
    pub core: Vec<usize>,
    pub line_type: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HyperplaneCensus {
    pub perp: usize,
    pub grid: usize,
    pub ovoid: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriadCensus {
    pub total: usize,
    pub unicentric: usize,
    pub tricentric: usize,
    pub acentric: usize,
    pub other: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1Record {
    pub line_type: String,
    pub perp_sets: usize,
    pub grids: usize,
    pub ovoids: usize,
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub hyperplanes: HyperplaneCensus,
    pub triads: TriadCensus,
    pub table1: Vec<Table1Record>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExportModel {
    pub schema: String,
    pub points: Vec<PointRecord>,
    pub lines: Vec<LineRecord>,
    pub hyperplanes: Vec<HyperplaneRecord>,
    pub veldkamp_lines: Vec<VeldkampLineRecord>,
    pub census: CensusRecord,
}

impl ExportModel {
    pub fn from_catalog(cat: &Catalog) -> Self {
        let g = cat.w2.geometry();
        let points = (0..g.num_points())
            .map(|x| {
                let label = cat.w2.label(x);
                PointRecord {
                    index: x,
                    label: label.bits(),
                    label_mask: label.mask(),
                    pauli: cat.bijection.operator(x).mnemonic(),
                }
            })
            .collect();
        let lines = g
            .lines()
            .iter()
            .enumerate()
            .map(|(i, l)| LineRecord {
                index: i,
                mask: l.mask(),
                points: l.to_vec(),
            })
            .collect();
        let hyperplanes = cat
            .veldkamp
            .hyperplanes()
            .iter()
            .zip(&cat.pg42.functionals)
            .enumerate()
            .map(|(i, (h, f))| HyperplaneRecord {
                index: i,
                kind: h.kind.name().to_string(),
                center: h.kind.center(),
                mask: h.points.mask(),
                points: h.points.to_vec(),
                pg42_functional: f.bits(),
                functional_mask: f.mask(),
            })
            .collect();
        let veldkamp_lines = cat
            .veldkamp
            .lines()
            .iter()
            .enumerate()
            .map(|(i, l)| VeldkampLineRecord {
                index: i,
                members: cat.veldkamp.member_indices(l),
                core_mask: l.core.mask(),
                core: l.core.to_vec(),
                line_type: l.line_type.slug().to_string(),
            })
            .collect();
        let census = cat.veldkamp.census();
        let triad_count = |k: TriadKind| cat.triads.iter().filter(|t| t.kind == k).count();
        let (uni, tri, acen) = (
            triad_count(TriadKind::Unicentric),
            triad_count(TriadKind::Tricentric),
            triad_count(TriadKind::Acentric),
        );
        let census = CensusRecord {
            hyperplanes: HyperplaneCensus {
                perp: census.perps,
                grid: census.grids,
                ovoid: census.ovoids,
            },
            triads: TriadCensus {
                total: cat.triads.len(),
                unicentric: uni,
                tricentric: tri,
                acentric: acen,
                other: cat.triads.len() - uni - tri - acen,
            },
            table1: census
                .rows
                .iter()
                .map(|r| Table1Record {
                    line_type: r.line_type.slug().to_string(),
                    perp_sets: r.composition.perps,
                    grids: r.composition.grids,
                    ovoids: r.composition.ovoids,
                    count: r.count,
                })
                .collect(),
        };
        Self {
            schema: SCHEMA.to_string(),
            points,
            lines,
            hyperplanes,
            veldkamp_lines,
            census,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("model serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let model: ExportModel = serde_json::from_str(text)
            .map_err(|e| Error::domain(format!("unreadable model: {e}")))?;
        if model.schema != SCHEMA {
            return Err(Error::domain(format!("unknown schema {}", model.schema)));
        }
        Ok(model)
    }

    /// Rebuilds W(2) from the exported points and lines alone.
    pub fn to_w2(&self) -> Result<LabeledW2> {
        let labels = self
            .points
            .iter()
            .map(|p| Gf2Vector::from_bits(&p.label))
            .collect::<Result<Vec<_>>>()?;
        let lines = self
            .lines
            .iter()
            .map(|l| PointSet::from_indices(l.points.iter().copied()))
            .collect();
        let geometry = PointLineGeometry::new(self.points.len(), lines)?;
        LabeledW2::new(geometry, labels, Model::Symplectic)
    }

    /// Recomputes every derived field from the exported W(2).
    pub fn reconstruct(&self) -> Result<ExportModel> {
        Ok(ExportModel::from_catalog(&Catalog::from_w2(self.to_w2()?)?))
    }
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Two undirected graphs: W(2) collinearity, and Veldkamp point-line incidence.
pub fn export_dot(cat: &Catalog) -> String {
    let g = cat.w2.geometry();
    let mut out = String::new();
    let _ = writeln!(out, "graph w2_collinearity {{");
    let _ = writeln!(out, "  node [shape=circle];");
    for x in 0..g.num_points() {
        let op = cat.bijection.operator(x);
        let _ = writeln!(out, "  p{x} [label=\"{}\"];", dot_escape(&op.mnemonic()));
    }
    for x in 0..g.num_points() {
        for y in x + 1..g.num_points() {
            if g.collinear(x, y) {
                let _ = writeln!(out, "  p{x} -- p{y};");
            }
        }
    }
    let _ = writeln!(out, "}}");
    let _ = writeln!(out);
    let _ = writeln!(out, "graph veldkamp_incidence {{");
    for (i, h) in cat.veldkamp.hyperplanes().iter().enumerate() {
        let label = match h.kind {
            HyperplaneKind::Perp { center } => {
                format!("perp {}", cat.bijection.operator(center).mnemonic())
            }
            k => format!("{} {}", k.name(), i),
        };
        let _ = writeln!(out, "  h{i} [shape=box, label=\"{}\"];", dot_escape(&label));
    }
    for (i, l) in cat.veldkamp.lines().iter().enumerate() {
        let _ = writeln!(
            out,
            "  l{i} [shape=point, xlabel=\"{}\"];",
            l.line_type.slug()
        );
    }
    for (i, l) in cat.veldkamp.lines().iter().enumerate() {
        for m in cat.veldkamp.member_indices(l) {
            let _ = writeln!(out, "  h{m} -- l{i};");
        }
    }
    let _ = writeln!(out, "}}");
    out
}

/// Census tables separated by blank lines; the first block is Table 1.
pub fn export_csv(cat: &Catalog) -> String {
    let model = ExportModel::from_catalog(cat);
    let mut out = table1_csv(cat.veldkamp.census());
    let _ = writeln!(out);
    let _ = writeln!(out, "hyperplane_kind,size,count");
    for kind in ["perp", "grid", "ovoid"] {
        let sel: Vec<_> = model
            .hyperplanes
            .iter()
            .filter(|h| h.kind == kind)
            .collect();
        let size = sel.first().map_or(0, |h| h.points.len());
        let _ = writeln!(out, "{kind},{size},{}", sel.len());
    }
    let _ = writeln!(out);
    let t = &model.census.triads;
    let _ = writeln!(out, "triad_kind,count");
    for (k, n) in [
        ("unicentric", t.unicentric),
        ("tricentric", t.tricentric),
        ("acentric", t.acentric),
        ("other", t.other),
    ] {
        let _ = writeln!(out, "{k},{n}");
    }
    let _ = writeln!(out);
    let _ = writeln!(out, "point,label,pauli");
    for p in &model.points {
        let bits: String = p.label.iter().map(|b| char::from(b'0' + b)).collect();
        let _ = writeln!(out, "{},{bits},{}", p.index, p.pauli);
    }
    out
}
