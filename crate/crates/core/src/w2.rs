//! The generalized quadrangle W(2) in its two classical models, plus the
//! backtracking isomorphism search used to compare them.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::geometry::{perp, verify_gq, GqOrder, PointLineGeometry, PointSet};
use crate::gf2::{
    projective_points, quadratic_form_q42, symplectic_form, Gf2Vector, ProjectiveSpace,
};

/// Which coordinates the points of a [`LabeledW2`] carry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Model {
    /// Points of PG(3,2), lines totally isotropic for the symplectic form.
    Symplectic,
    /// Points and lines of the parabolic quadric in PG(4,2).
    Quadric,
}

/// W(2) together with a coordinate vector for each point.
#[derive(Clone, Debug)]
pub struct LabeledW2 {
    geometry: PointLineGeometry,
    labels: Vec<Gf2Vector>,
    model: Model,
}

impl LabeledW2 {
    /// Checks that `geometry` is a GQ(2,2) with one label per point of the
    /// model's length, labels distinct and nonzero.
    pub fn new(geometry: PointLineGeometry, labels: Vec<Gf2Vector>, model: Model) -> Result<Self> {
        match verify_gq(&geometry) {
            Ok(GqOrder { s: 2, t: 2 }) => {}
            Ok(order) => {
                return Err(Error::Structure(format!(
                    "expected a GQ(2,2), found order ({}, {})",
                    order.s, order.t
                )))
            }
            Err(v) => return Err(Error::Structure(v.to_string())),
        }
        if labels.len() != geometry.num_points() {
            return Err(Error::Structure(format!(
                "{} labels for {} points",
                labels.len(),
                geometry.num_points()
            )));
        }
        let len = match model {
            Model::Symplectic => 4,
            Model::Quadric => 5,
        };
        let mut seen = HashSet::new();
        for &l in &labels {
            if l.len() != len {
                return Err(Error::Dimension {
                    expected: len,
                    found: l.len(),
                });
            }
            if l.is_zero() || !seen.insert(l) {
                return Err(Error::Structure(format!("label {l} is zero or repeated")));
            }
        }
        Ok(Self {
            geometry,
            labels,
            model,
        })
    }

    pub fn geometry(&self) -> &PointLineGeometry {
        &self.geometry
    }

    pub fn labels(&self) -> &[Gf2Vector] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> Gf2Vector {
        self.labels[x]
    }

    pub fn model(&self) -> Model {
        self.model
    }

    pub fn point_of(&self, label: Gf2Vector) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    /// Re-coordinatizes `self` with the labels of `target`, carried over by `iso`
    /// (a map from points of `self` to points of `target`). Point and line
    /// indices of `self` are kept.
    pub fn with_labels_from(&self, target: &LabeledW2, iso: &IsomorphismMap) -> Result<LabeledW2> {
        if !iso.is_isomorphism(&self.geometry, &target.geometry) {
            return Err(Error::Isomorphism(
                "map does not carry lines onto lines".into(),
            ));
        }
        let labels = (0..self.geometry.num_points())
            .map(|x| target.labels[iso.image(x)])
            .collect();
        LabeledW2::new(self.geometry.clone(), labels, target.model)
    }
}

fn lines_from_triples(points: &[Gf2Vector], triples: &[[Gf2Vector; 3]]) -> Vec<PointSet> {
    triples
        .iter()
        .map(|t| {
            PointSet::from_indices(t.iter().map(|v| {
                points
                    .iter()
                    .position(|p| p == v)
                    .expect("line point is a point of the model")
            }))
        })
        .collect()
}

/// W(2) as the 15 points of PG(3,2) with the totally isotropic lines.
///
/// Point `i` carries the label with mask `i + 1`.
pub fn build_w2_symplectic() -> LabeledW2 {
    let points = projective_points(3).expect("PG(3,2) exists");
    let iso = |u, v| !symplectic_form(u, v).expect("length-4 labels");
    let mut triples = Vec::new();
    for (i, &u) in points.iter().enumerate() {
        for &v in &points[i + 1..] {
            let w = u + v;
            if w.mask() > v.mask() && iso(u, v) {
                triples.push([u, v, w]);
            }
        }
    }
    let lines = lines_from_triples(&points, &triples);
    let geometry = PointLineGeometry::new(points.len(), lines).expect("isotropic lines are valid");
    LabeledW2::new(geometry, points, Model::Symplectic).expect("symplectic model is a GQ(2,2)")
}

/// W(2) as the parabolic quadric `x0 + x1 x2 + x3 x4 = 0` in PG(4,2).
pub fn build_q42() -> LabeledW2 {
    let space = ProjectiveSpace::new(4).expect("PG(4,2) exists");
    let on_quadric = |v: Gf2Vector| !quadratic_form_q42(v).expect("length-5 labels");
    let points: Vec<Gf2Vector> = space
        .points()
        .iter()
        .copied()
        .filter(|&p| on_quadric(p))
        .collect();
    let triples: Vec<[Gf2Vector; 3]> = space
        .lines()
        .iter()
        .copied()
        .filter(|line| line.iter().all(|&p| on_quadric(p)))
        .collect();
    let lines = lines_from_triples(&points, &triples);
    let geometry = PointLineGeometry::new(points.len(), lines).expect("quadric lines are valid");
    LabeledW2::new(geometry, points, Model::Quadric).expect("quadric model is a GQ(2,2)")
}

/// A point bijection between two geometries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IsomorphismMap {
    pub point_bijection: Vec<usize>,
}

impl IsomorphismMap {
    pub fn image(&self, x: usize) -> usize {
        self.point_bijection[x]
    }

    pub fn map_set(&self, s: PointSet) -> PointSet {
        PointSet::from_indices(s.iter().map(|x| self.point_bijection[x]))
    }

    pub fn inverse(&self) -> IsomorphismMap {
        let mut inv = vec![0; self.point_bijection.len()];
        for (x, &y) in self.point_bijection.iter().enumerate() {
            inv[y] = x;
        }
        IsomorphismMap {
            point_bijection: inv,
        }
    }

    /// True when this is a bijection `a -> b` sending lines onto lines.
    pub fn is_isomorphism(&self, a: &PointLineGeometry, b: &PointLineGeometry) -> bool {
        let n = a.num_points();
        if n != b.num_points() || a.num_lines() != b.num_lines() || self.point_bijection.len() != n
        {
            return false;
        }
        let mut seen = vec![false; n];
        for &y in &self.point_bijection {
            if y >= n || std::mem::replace(&mut seen[y], true) {
                return false;
            }
        }
        let targets: HashSet<PointSet> = b.lines().iter().copied().collect();
        a.lines()
            .iter()
            .all(|&l| targets.contains(&self.map_set(l)))
    }
}

/// Sorted sizes of the lines through each point.
fn line_profiles(g: &PointLineGeometry) -> Vec<Vec<usize>> {
    (0..g.num_points())
        .map(|x| {
            let mut p: Vec<usize> = g
                .lines_through(x)
                .iter()
                .map(|&l| g.line(l).len())
                .collect();
            p.sort_unstable();
            p
        })
        .collect()
}

fn pair_lines(g: &PointLineGeometry) -> Vec<Vec<Option<usize>>> {
    let n = g.num_points();
    (0..n)
        .map(|x| (0..n).map(|y| g.line_through(x, y)).collect())
        .collect()
}

/// Backtracking search for line-preserving bijections. Points of `a` are
/// assigned in index order, candidates tried in ascending index order, so
/// solutions come out in lexicographic order.
struct Matcher<'g> {
    a: &'g PointLineGeometry,
    b: &'g PointLineGeometry,
    profile_a: Vec<Vec<usize>>,
    profile_b: Vec<Vec<usize>>,
    pairs_a: Vec<Vec<Option<usize>>>,
    pairs_b: Vec<Vec<Option<usize>>>,
    targets: HashSet<PointSet>,
    map: Vec<usize>,
    used: Vec<bool>,
}

impl<'g> Matcher<'g> {
    fn new(a: &'g PointLineGeometry, b: &'g PointLineGeometry) -> Option<Self> {
        if a.num_points() != b.num_points() || a.num_lines() != b.num_lines() {
            return None;
        }
        let profile_a = line_profiles(a);
        let profile_b = line_profiles(b);
        let sorted = |p: &[Vec<usize>]| {
            let mut p = p.to_vec();
            p.sort();
            p
        };
        if sorted(&profile_a) != sorted(&profile_b) {
            return None;
        }
        Some(Self {
            a,
            b,
            profile_a,
            profile_b,
            pairs_a: pair_lines(a),
            pairs_b: pair_lines(b),
            targets: b.lines().iter().copied().collect(),
            map: Vec::with_capacity(a.num_points()),
            used: vec![false; b.num_points()],
        })
    }

    fn consistent(&self, x: usize, y: usize) -> bool {
        if self.used[y] || self.profile_a[x] != self.profile_b[y] {
            return false;
        }
        // joining lines seen from x must correspond one-to-one with those from y
        let mut line_pairs: Vec<(usize, usize)> = Vec::new();
        for (p, &q) in self.map.iter().enumerate() {
            match (self.pairs_a[x][p], self.pairs_b[y][q]) {
                (None, None) => {}
                (Some(la), Some(lb)) => {
                    if self.a.line(la).len() != self.b.line(lb).len() {
                        return false;
                    }
                    for &(ka, kb) in &line_pairs {
                        if (ka == la) != (kb == lb) {
                            return false;
                        }
                    }
                    line_pairs.push((la, lb));
                }
                _ => return false,
            }
        }
        true
    }

    fn complete(&self) -> bool {
        self.a.lines().iter().all(|&l| {
            let image = PointSet::from_indices(l.iter().map(|x| self.map[x]));
            self.targets.contains(&image)
        })
    }

    /// Walks solutions; `visit` returns true to stop the search.
    fn search(&mut self, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        let x = self.map.len();
        if x == self.a.num_points() {
            return self.complete() && visit(&self.map);
        }
        for y in 0..self.b.num_points() {
            if !self.consistent(x, y) {
                continue;
            }
            self.used[y] = true;
            self.map.push(y);
            let stop = self.search(visit);
            self.map.pop();
            self.used[y] = false;
            if stop {
                return true;
            }
        }
        false
    }
}

/// The lexicographically first line-preserving bijection `a -> b`, if any.
pub fn find_isomorphism(a: &PointLineGeometry, b: &PointLineGeometry) -> Option<IsomorphismMap> {
    let mut matcher = Matcher::new(a, b)?;
    let mut found = None;
    matcher.search(&mut |m| {
        found = Some(m.to_vec());
        true
    });
    found.map(|point_bijection| IsomorphismMap { point_bijection })
}

pub const MAX_AUTOMORPHISM_POINTS: usize = 15;

/// Number of line-preserving permutations of the points of `g`.
pub fn automorphism_count(g: &PointLineGeometry) -> Result<u64> {
    if g.num_points() > MAX_AUTOMORPHISM_POINTS {
        return Err(Error::Capacity {
            what: "points for automorphism search",
            found: g.num_points(),
            limit: MAX_AUTOMORPHISM_POINTS,
        });
    }
    let mut matcher = Matcher::new(g, g).expect("a geometry matches itself");
    let mut count = 0u64;
    matcher.search(&mut |_| {
        count += 1;
        false
    });
    Ok(count)
}

/// Order `n` when `g` is a projective plane: every two points on exactly one
/// line, every two lines through exactly one point, all lines of size
/// `n + 1 >= 3`, and `n^2 + n + 1` points.
pub fn projective_plane_order(g: &PointLineGeometry) -> Option<usize> {
    let size = g.lines().first()?.len();
    if size < 3 || g.lines().iter().any(|l| l.len() != size) {
        return None;
    }
    let n = size - 1;
    if g.num_points() != n * n + n + 1 || g.num_lines() != g.num_points() {
        return None;
    }
    for x in 0..g.num_points() {
        if g.point_perp(x) != g.all_points() {
            return None;
        }
    }
    for (i, &l) in g.lines().iter().enumerate() {
        if g.lines()[i + 1..].iter().any(|&m| (l & m).len() != 1) {
            return None;
        }
    }
    Some(n)
}

/// The Fano plane at `x`: points are `x⊥` (local index `k` is the `k`-th
/// smallest member), lines the distinct sets `{u, v}⊥⊥` for `u != v` in `x⊥`.
pub fn fano_plane_at(w: &LabeledW2, x: usize) -> Result<PointLineGeometry> {
    let g = w.geometry();
    if x >= g.num_points() {
        return Err(Error::domain(format!("no point {x} in W(2)")));
    }
    let xperp = g.point_perp(x);
    let members = xperp.to_vec();
    let mut spans: Vec<PointSet> = Vec::new();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            let pair = PointSet::from_indices([u, v]);
            let span = perp(g, perp(g, pair)?)?;
            if !span.is_subset(xperp) {
                return Err(Error::Structure(format!(
                    "span of {{{u},{v}}} leaves the perp of {x}"
                )));
            }
            if !spans.contains(&span) {
                spans.push(span);
            }
        }
    }
    spans.sort();
    let local = |s: PointSet| {
        PointSet::from_indices(
            s.iter()
                .map(|p| members.iter().position(|&m| m == p).unwrap()),
        )
    };
    let plane = PointLineGeometry::new(members.len(), spans.into_iter().map(local).collect())?;
    match projective_plane_order(&plane) {
        Some(2) => Ok(plane),
        _ => Err(Error::Structure(format!(
            "lines spanned in the perp of {x} do not form a Fano plane"
        ))),
    }
}
