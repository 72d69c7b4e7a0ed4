//! The Veldkamp space of W(2): geometric hyperplanes as points, and lines
//! made of three hyperplanes sharing a common pairwise intersection (the
//! core). Also the identification of that space with PG(4,2) through the
//! dual functionals of the quadric model.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::geometry::{
    classify_triad, enumerate_hyperplanes, is_hyperplane, Hyperplane, HyperplaneKind,
    PointLineGeometry, PointSet, TriadKind,
};
use crate::gf2::Gf2Vector;
use crate::w2::{LabeledW2, Model};

/// Veldkamp line types, named after the shape of the core.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LineType {
    SinglePoint,
    CollinearTriple,
    UnicentricTriad,
    TricentricTriad,
    Pentad,
}

impl LineType {
    /// Row order of the census table.
    pub const ALL: [LineType; 5] = [
        LineType::SinglePoint,
        LineType::CollinearTriple,
        LineType::UnicentricTriad,
        LineType::TricentricTriad,
        LineType::Pentad,
    ];

    pub fn title(self) -> &'static str {
        match self {
            LineType::SinglePoint => "Single Point",
            LineType::CollinearTriple => "Collinear Triple",
            LineType::UnicentricTriad => "Unicentric Triad",
            LineType::TricentricTriad => "Tricentric Triad",
            LineType::Pentad => "Pentad",
        }
    }

    pub fn slug(self) -> &'static str {
        match self {
            LineType::SinglePoint => "single_point",
            LineType::CollinearTriple => "collinear_triple",
            LineType::UnicentricTriad => "unicentric_triad",
            LineType::TricentricTriad => "tricentric_triad",
            LineType::Pentad => "pentad",
        }
    }

    pub fn from_slug(s: &str) -> Option<LineType> {
        LineType::ALL.into_iter().find(|t| t.slug() == s)
    }
}

impl fmt::Display for LineType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.title())
    }
}

/// How many perps, grids and ovoids sit on a line.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    pub perps: usize,
    pub grids: usize,
    pub ovoids: usize,
}

impl Composition {
    pub fn new(perps: usize, grids: usize, ovoids: usize) -> Self {
        Self {
            perps,
            grids,
            ovoids,
        }
    }

    fn of(members: &[Hyperplane]) -> Result<Self> {
        let mut c = Composition::default();
        for h in members {
            match h.kind {
                HyperplaneKind::Perp { .. } => c.perps += 1,
                HyperplaneKind::Grid => c.grids += 1,
                HyperplaneKind::Ovoid => c.ovoids += 1,
                HyperplaneKind::Other => {
                    return Err(Error::Classification(format!(
                        "hyperplane {} has no perp/grid/ovoid kind",
                        h.points
                    )))
                }
            }
        }
        Ok(c)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VeldkampLine {
    /// Sorted by point mask.
    pub members: [Hyperplane; 3],
    pub core: PointSet,
    pub line_type: LineType,
}

impl VeldkampLine {
    pub fn key(&self) -> [PointSet; 3] {
        self.members.map(|h| h.points)
    }

    pub fn composition(&self) -> Composition {
        Composition::of(&self.members).expect("members were classified at construction")
    }
}

/// `P \ (h1 Δ h2)`: the third hyperplane on the line through `h1` and `h2`.
pub fn third_member(all: PointSet, h1: PointSet, h2: PointSet) -> PointSet {
    all & !(h1 ^ h2)
}

/// Classifies a core by its size and shape inside `g`.
pub fn classify_core(g: &PointLineGeometry, core: PointSet) -> Result<LineType> {
    let points = core.to_vec();
    match points.len() {
        1 => Ok(LineType::SinglePoint),
        3 if g.contains_line(core) => Ok(LineType::CollinearTriple),
        3 => match classify_triad(g, [points[0], points[1], points[2]]).map(|t| t.kind) {
            Some(TriadKind::Unicentric) => Ok(LineType::UnicentricTriad),
            Some(TriadKind::Tricentric) => Ok(LineType::TricentricTriad),
            _ => Err(Error::Classification(format!(
                "three-point core {core} is neither a line nor a centric triad"
            ))),
        },
        5 if is_pentad(g, core) => Ok(LineType::Pentad),
        _ => Err(Error::Classification(format!(
            "core {core} matches no line type"
        ))),
    }
}

/// Two distinct lines through a common point, as a point set.
fn is_pentad(g: &PointLineGeometry, core: PointSet) -> bool {
    core.iter().any(|c| {
        let through = g.lines_through(c);
        through.iter().enumerate().any(|(i, &l)| {
            through[i + 1..]
                .iter()
                .any(|&m| (g.line(l) | g.line(m)) == core)
        })
    })
}

pub fn classify_veldkamp_line(g: &LabeledW2, line: &VeldkampLine) -> Result<LineType> {
    classify_core(g.geometry(), line.core)
}

/// The Veldkamp line through `h1` and `h2`, found by scanning `hyperplanes`
/// for every `H` with `H ∩ h1 = H ∩ h2 = h1 ∩ h2`.
pub fn veldkamp_line_through(
    g: &LabeledW2,
    hyperplanes: &[Hyperplane],
    h1: &Hyperplane,
    h2: &Hyperplane,
) -> Result<VeldkampLine> {
    let geom = g.geometry();
    if h1.points == h2.points {
        return Err(Error::domain(format!("both hyperplanes are {}", h1.points)));
    }
    for h in [h1, h2] {
        if !is_hyperplane(geom, h.points) {
            return Err(Error::domain(format!(
                "{} is not a geometric hyperplane",
                h.points
            )));
        }
    }
    let core = h1.points & h2.points;
    let mut members = vec![*h1, *h2];
    members.extend(hyperplanes.iter().copied().filter(|h| {
        h.points != h1.points
            && h.points != h2.points
            && (h.points & h1.points) == core
            && (h.points & h2.points) == core
    }));
    if members.len() != 3 {
        return Err(Error::Structure(format!(
            "line through {} and {} has {} members",
            h1.points,
            h2.points,
            members.len()
        )));
    }
    members.sort_by_key(|h| h.points);
    let members = [members[0], members[1], members[2]];
    Composition::of(&members)?;
    Ok(VeldkampLine {
        members,
        core,
        line_type: classify_core(geom, core)?,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CensusRow {
    pub line_type: LineType,
    pub composition: Composition,
    pub count: usize,
    /// False when lines of this type disagree on their composition.
    pub uniform: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    pub perps: usize,
    pub grids: usize,
    pub ovoids: usize,
    pub rows: Vec<CensusRow>,
}

impl Census {
    fn compute(hyperplanes: &[Hyperplane], lines: &[VeldkampLine]) -> Self {
        let count_kind =
            |f: fn(&HyperplaneKind) -> bool| hyperplanes.iter().filter(|h| f(&h.kind)).count();
        let rows = LineType::ALL
            .into_iter()
            .map(|t| {
                let comps: Vec<Composition> = lines
                    .iter()
                    .filter(|l| l.line_type == t)
                    .map(|l| l.composition())
                    .collect();
                CensusRow {
                    line_type: t,
                    composition: comps.first().copied().unwrap_or_default(),
                    count: comps.len(),
                    uniform: comps.windows(2).all(|w| w[0] == w[1]),
                }
            })
            .collect();
        Census {
            perps: count_kind(|k| matches!(k, HyperplaneKind::Perp { .. })),
            grids: count_kind(|k| *k == HyperplaneKind::Grid),
            ovoids: count_kind(|k| *k == HyperplaneKind::Ovoid),
            rows,
        }
    }

    pub fn row(&self, t: LineType) -> &CensusRow {
        self.rows
            .iter()
            .find(|r| r.line_type == t)
            .expect("every type has a row")
    }

    pub fn total_lines(&self) -> usize {
        self.rows.iter().map(|r| r.count).sum()
    }
}

#[derive(Clone, Debug)]
pub struct VeldkampSpace {
    num_points: usize,
    hyperplanes: Vec<Hyperplane>,
    lines: Vec<VeldkampLine>,
    census: Census,
}

impl VeldkampSpace {
    /// Number of points of the underlying geometry.
    pub fn host_points(&self) -> usize {
        self.num_points
    }

    /// Sorted by mask.
    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    /// Sorted by member masks.
    pub fn lines(&self) -> &[VeldkampLine] {
        &self.lines
    }

    pub fn census(&self) -> &Census {
        &self.census
    }

    pub fn index_of(&self, points: PointSet) -> Option<usize> {
        self.hyperplanes
            .binary_search_by_key(&points, |h| h.points)
            .ok()
    }

    pub fn member_indices(&self, line: &VeldkampLine) -> [usize; 3] {
        line.key().map(|p| {
            self.index_of(p)
                .expect("line members are points of the space")
        })
    }
}

pub fn build_veldkamp_space(g: &LabeledW2) -> Result<VeldkampSpace> {
    let hyperplanes = enumerate_hyperplanes(g.geometry())?;
    let mut lines: BTreeMap<[PointSet; 3], VeldkampLine> = BTreeMap::new();
    for (i, h1) in hyperplanes.iter().enumerate() {
        for h2 in &hyperplanes[i + 1..] {
            let line = veldkamp_line_through(g, &hyperplanes, h1, h2)?;
            lines.entry(line.key()).or_insert(line);
        }
    }
    let lines: Vec<VeldkampLine> = lines.into_values().collect();
    let census = Census::compute(&hyperplanes, &lines);
    Ok(VeldkampSpace {
        num_points: g.geometry().num_points(),
        hyperplanes,
        lines,
        census,
    })
}

/// Compares the definitional scan with [`third_member`] on every pair of
/// hyperplanes; returns the number of pairs checked.
pub fn check_third_member_rule(g: &LabeledW2, v: &VeldkampSpace) -> Result<usize> {
    let all = g.geometry().all_points();
    let hs = v.hyperplanes();
    let mut pairs = 0;
    for (i, h1) in hs.iter().enumerate() {
        for h2 in &hs[i + 1..] {
            let line = veldkamp_line_through(g, hs, h1, h2)?;
            let third = line
                .key()
                .into_iter()
                .find(|&p| p != h1.points && p != h2.points)
                .expect("three distinct members");
            let fast = third_member(all, h1.points, h2.points);
            if fast != third {
                return Err(Error::Structure(format!(
                    "third member of {} and {}: scan gives {third}, rule gives {fast}",
                    h1.points, h2.points
                )));
            }
            pairs += 1;
        }
    }
    Ok(pairs)
}

/// Dual coordinates of every Veldkamp point in PG(4,2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pg42Report {
    /// `functionals[i]` cuts hyperplane `i` out of the quadric.
    pub functionals: Vec<Gf2Vector>,
    /// Lines whose functionals sum to zero.
    pub zero_sum_lines: usize,
    /// Zero-sum functional triples found among the lines.
    pub triples_matched: usize,
}

/// Sends each hyperplane `H` to the unique nonzero functional `f` on GF(2)^5
/// with `H = {p : f(p) = 0}`, and checks that this is a bijection onto the 31
/// functionals under which Veldkamp lines are exactly the triples `{f, g, f + g}`.
///
/// `q` must be a quadric-model W(2) on the same point indices as `v`.
pub fn verify_pg42_isomorphism(v: &VeldkampSpace, q: &LabeledW2) -> Result<Pg42Report> {
    if q.model() != Model::Quadric {
        return Err(Error::domain("PG(4,2) coordinates need the quadric model"));
    }
    if v.host_points() != q.geometry().num_points() {
        return Err(Error::domain(
            "Veldkamp space and quadric have different point sets",
        ));
    }
    let functionals: Vec<Gf2Vector> = (1u32..32)
        .map(|m| Gf2Vector::new(m, 5).expect("5-bit mask"))
        .collect();
    let section = |f: Gf2Vector| {
        PointSet::from_indices(
            (0..q.geometry().num_points()).filter(|&x| !f.dot(q.label(x)).expect("length 5")),
        )
    };
    let sections: Vec<PointSet> = functionals.iter().map(|&f| section(f)).collect();

    let mut assigned = Vec::with_capacity(v.hyperplanes().len());
    for h in v.hyperplanes() {
        let matches: Vec<Gf2Vector> = functionals
            .iter()
            .zip(&sections)
            .filter(|(_, &s)| s == h.points)
            .map(|(&f, _)| f)
            .collect();
        match matches.as_slice() {
            [f] => assigned.push(*f),
            _ => {
                return Err(Error::Isomorphism(format!(
                    "hyperplane {} matches {} functionals",
                    h.points,
                    matches.len()
                )))
            }
        }
    }
    let distinct: HashSet<Gf2Vector> = assigned.iter().copied().collect();
    if distinct.len() != functionals.len() || assigned.len() != functionals.len() {
        return Err(Error::Isomorphism(format!(
            "{} hyperplanes reach {} of the {} functionals",
            assigned.len(),
            distinct.len(),
            functionals.len()
        )));
    }

    let mut line_triples: HashSet<[u32; 3]> = HashSet::new();
    for line in v.lines() {
        let [a, b, c] = v.member_indices(line).map(|i| assigned[i]);
        if !(a + b + c).is_zero() {
            return Err(Error::Isomorphism(format!(
                "line with core {} maps to {a}, {b}, {c}, which do not sum to zero",
                line.core
            )));
        }
        let mut key = [a.mask(), b.mask(), c.mask()];
        key.sort_unstable();
        line_triples.insert(key);
    }
    let mut triples_matched = 0;
    for f in 1u32..32 {
        for g in f + 1..32 {
            let h = f ^ g;
            if h <= g {
                continue;
            }
            if !line_triples.contains(&[f, g, h]) {
                return Err(Error::Isomorphism(format!(
                    "functionals {f:05b}, {g:05b}, {h:05b} sum to zero but form no Veldkamp line"
                )));
            }
            triples_matched += 1;
        }
    }
    Ok(Pg42Report {
        functionals: assigned,
        zero_sum_lines: v.lines().len(),
        triples_matched,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::HyperplaneKind;
    use crate::w2::{build_q42, build_w2_symplectic, find_isomorphism};

    fn space() -> (LabeledW2, VeldkampSpace) {
        let w = build_w2_symplectic();
        let v = build_veldkamp_space(&w).unwrap();
        (w, v)
    }

    #[test]
    fn counts() {
        let (_, v) = space();
        assert_eq!(v.hyperplanes().len(), 31);
        assert_eq!(v.lines().len(), 155);
        let c = v.census();
        assert_eq!((c.perps, c.grids, c.ovoids), (15, 10, 6));
        assert_eq!(c.total_lines(), 155);
    }

    #[test]
    fn table_one() {
        let (_, v) = space();
        let expected = [
            (LineType::SinglePoint, (1, 0, 2), 15),
            (LineType::CollinearTriple, (3, 0, 0), 15),
            (LineType::UnicentricTriad, (1, 1, 1), 60),
            (LineType::TricentricTriad, (3, 0, 0), 20),
            (LineType::Pentad, (1, 2, 0), 45),
        ];
        for (t, (p, g, o), n) in expected {
            let row = v.census().row(t);
            assert!(row.uniform, "{t}");
            assert_eq!(row.composition, Composition::new(p, g, o), "{t}");
            assert_eq!(row.count, n, "{t}");
        }
    }

    #[test]
    fn line_invariants() {
        let (w, v) = space();
        let all = w.geometry().all_points();
        for line in v.lines() {
            let [a, b, c] = line.key();
            assert_eq!(a & b, line.core);
            assert_eq!(a & c, line.core);
            assert_eq!(b & c, line.core);
            assert_eq!(a | b | c, all);
            assert!(line.core.len() % 2 == 1 && line.core.len() <= 5);
            let comp = line.composition();
            assert!(comp.perps >= 1);
            let homogeneous = comp.perps == 3;
            assert_eq!(
                homogeneous,
                matches!(
                    line.line_type,
                    LineType::CollinearTriple | LineType::TricentricTriad
                )
            );
            assert_eq!(classify_veldkamp_line(&w, line).unwrap(), line.line_type);
        }
    }

    #[test]
    fn every_pair_on_exactly_one_line() {
        let (_, v) = space();
        let n = v.hyperplanes().len();
        let mut seen = vec![vec![0u8; n]; n];
        for line in v.lines() {
            let [a, b, c] = v.member_indices(line);
            for (x, y) in [(a, b), (a, c), (b, c)] {
                seen[x][y] += 1;
                seen[y][x] += 1;
            }
        }
        for (i, row) in seen.iter().enumerate() {
            for (j, &k) in row.iter().enumerate() {
                assert_eq!(k, (i != j) as u8);
            }
        }
    }

    #[test]
    fn third_member_rule_matches_scan() {
        let (w, v) = space();
        assert_eq!(check_third_member_rule(&w, &v).unwrap(), 465);
    }

    #[test]
    fn two_ovoids_meet_in_a_point_on_a_perp_line() {
        let (w, v) = space();
        let ovoids: Vec<_> = v
            .hyperplanes()
            .iter()
            .filter(|h| h.kind == HyperplaneKind::Ovoid)
            .collect();
        for (i, a) in ovoids.iter().enumerate() {
            for b in &ovoids[i + 1..] {
                let line = veldkamp_line_through(&w, v.hyperplanes(), a, b).unwrap();
                assert_eq!(line.core.len(), 1);
                assert_eq!(line.line_type, LineType::SinglePoint);
                assert_eq!(line.composition(), Composition::new(1, 0, 2));
            }
        }
    }

    #[test]
    fn pentad_cores_and_grids() {
        let (w, v) = space();
        let g = w.geometry();
        let mut pentads = HashSet::new();
        for line in v.lines().iter().filter(|l| l.line_type == LineType::Pentad) {
            let center = line.members.iter().find_map(|h| h.kind.center()).unwrap();
            assert!(line.core.contains(center));
            let others = line.core & !PointSet::singleton(center);
            assert!(others.iter().all(|y| g.collinear(center, y)));
            assert!(line.core.is_subset(g.point_perp(center)));
            pentads.insert(line.core);
        }
        assert_eq!(pentads.len(), 45);
        for x in 0..15 {
            let at = pentads
                .iter()
                .filter(|p| {
                    p.contains(x)
                        && p.is_subset(g.point_perp(x))
                        && g.lines_through(x)
                            .iter()
                            .filter(|&&l| g.line(l).is_subset(**p))
                            .count()
                            == 2
                })
                .count();
            assert_eq!(at, 3);
        }
        // two grids sharing a pentad pick up a perp as their third member
        let grids: Vec<_> = v
            .hyperplanes()
            .iter()
            .filter(|h| h.kind == HyperplaneKind::Grid)
            .collect();
        for (i, a) in grids.iter().enumerate() {
            for b in &grids[i + 1..] {
                let line = veldkamp_line_through(&w, v.hyperplanes(), a, b).unwrap();
                assert_eq!(line.line_type, LineType::Pentad);
            }
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        let (w, v) = space();
        let h = v.hyperplanes()[0];
        assert!(matches!(
            veldkamp_line_through(&w, v.hyperplanes(), &h, &h),
            Err(Error::Domain(_))
        ));
        let fake = Hyperplane {
            points: PointSet::from_indices([0, 1]),
            kind: HyperplaneKind::Other,
        };
        assert!(matches!(
            veldkamp_line_through(&w, v.hyperplanes(), &h, &fake),
            Err(Error::Domain(_))
        ));
        assert!(classify_core(w.geometry(), PointSet::from_indices([0, 1])).is_err());
    }

    #[test]
    fn pg42_identification() {
        let w = build_w2_symplectic();
        let q = build_q42();
        let iso = find_isomorphism(w.geometry(), q.geometry()).unwrap();
        let coords = w.with_labels_from(&q, &iso).unwrap();
        let v = build_veldkamp_space(&coords).unwrap();
        let report = verify_pg42_isomorphism(&v, &coords).unwrap();
        assert_eq!(report.functionals.len(), 31);
        assert_eq!(report.zero_sum_lines, 155);
        assert_eq!(report.triples_matched, 155);
        // directly on the quadric model too
        let vq = build_veldkamp_space(&q).unwrap();
        assert!(verify_pg42_isomorphism(&vq, &q).is_ok());
        // the symplectic labels are not quadric coordinates
        assert!(verify_pg42_isomorphism(&v, &w).is_err());
    }

    #[test]
    fn perp_functionals_are_tangent() {
        // a perp x⊥ is cut out by the polar of x, which passes through the nucleus e0
        let q = build_q42();
        let v = build_veldkamp_space(&q).unwrap();
        let report = verify_pg42_isomorphism(&v, &q).unwrap();
        for (h, f) in v.hyperplanes().iter().zip(&report.functionals) {
            let tangent = !f.bit(0);
            assert_eq!(tangent, h.kind.center().is_some(), "{}", h.points);
        }
    }

    #[test]
    fn line_type_slugs_round_trip() {
        for t in LineType::ALL {
            assert_eq!(LineType::from_slug(t.slug()), Some(t));
        }
    }
}
