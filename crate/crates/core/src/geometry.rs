//! Finite point-line incidence geometries.
//!
//! Points are indices `0..num_points` and every point set is a 64-bit mask,
//! so all set algebra (perps, intersections, hyperplane tests) is bitwise.
//! The operations here are generic; nothing in this module knows about W(2).

use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor, Not};

use crate::error::{Error, Result};

/// Largest geometry a [`PointSet`] can address.
pub const MAX_POINTS: usize = 64;

/// Exhaustive hyperplane search bound (2^24 candidate subsets).
pub const MAX_HYPERPLANE_SCAN_POINTS: usize = 24;

#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointSet(u64);

impl PointSet {
    pub const EMPTY: PointSet = PointSet(0);

    pub fn from_mask(mask: u64) -> Self {
        PointSet(mask)
    }

    /// The first `n` points.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            PointSet(u64::MAX)
        } else {
            PointSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(x: usize) -> Self {
        PointSet(1 << x)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        PointSet(indices.into_iter().fold(0, |m, i| m | (1u64 << i)))
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, x: usize) -> bool {
        x < 64 && (self.0 >> x) & 1 == 1
    }

    pub fn insert(&mut self, x: usize) {
        self.0 |= 1 << x;
    }

    pub fn is_subset(self, other: PointSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: PointSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest member.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i)
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl BitAnd for PointSet {
    type Output = PointSet;
    fn bitand(self, rhs: Self) -> Self {
        PointSet(self.0 & rhs.0)
    }
}

impl BitOr for PointSet {
    type Output = PointSet;
    fn bitor(self, rhs: Self) -> Self {
        PointSet(self.0 | rhs.0)
    }
}

impl BitXor for PointSet {
    type Output = PointSet;
    fn bitxor(self, rhs: Self) -> Self {
        PointSet(self.0 ^ rhs.0)
    }
}

impl Not for PointSet {
    type Output = PointSet;
    fn not(self) -> Self {
        PointSet(!self.0)
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, x) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

/// A finite incidence structure: points `0..num_points`, lines as point sets.
///
/// Construction rejects lines with fewer than two points, repeated lines,
/// out-of-range points, and pairs of points sharing more than one line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointLineGeometry {
    num_points: usize,
    lines: Vec<PointSet>,
    lines_through: Vec<Vec<usize>>,
    // x⊥, including x itself
    neighbourhood: Vec<PointSet>,
}

impl PointLineGeometry {
    pub fn new(num_points: usize, lines: Vec<PointSet>) -> Result<Self> {
        if num_points > MAX_POINTS {
            return Err(Error::Capacity {
                what: "points in a geometry",
                found: num_points,
                limit: MAX_POINTS,
            });
        }
        let all = PointSet::full(num_points);
        let mut lines_through = vec![Vec::new(); num_points];
        let mut neighbourhood: Vec<PointSet> = (0..num_points).map(PointSet::singleton).collect();
        for (i, &line) in lines.iter().enumerate() {
            if !line.is_subset(all) {
                return Err(Error::InvalidGeometry(format!(
                    "line {i} {line} mentions a point outside 0..{num_points}"
                )));
            }
            if line.len() < 2 {
                return Err(Error::InvalidGeometry(format!(
                    "line {i} {line} has fewer than two points"
                )));
            }
            for (j, &earlier) in lines[..i].iter().enumerate() {
                let shared = (line & earlier).len();
                if shared == line.len() && shared == earlier.len() {
                    return Err(Error::InvalidGeometry(format!("line {i} repeats line {j}")));
                }
                if shared > 1 {
                    return Err(Error::InvalidGeometry(format!(
                        "lines {j} and {i} share the points {}",
                        line & earlier
                    )));
                }
            }
            for x in line.iter() {
                lines_through[x].push(i);
                neighbourhood[x] = neighbourhood[x] | line;
            }
        }
        Ok(Self {
            num_points,
            lines,
            lines_through,
            neighbourhood,
        })
    }

    /// The k × k grid: point `r * k + c`, one line per row and per column.
    pub fn grid(k: usize) -> Result<Self> {
        let rows = (0..k).map(|r| PointSet::from_indices((0..k).map(|c| r * k + c)));
        let cols = (0..k).map(|c| PointSet::from_indices((0..k).map(|r| r * k + c)));
        Self::new(k * k, rows.chain(cols).collect())
    }

    pub fn num_points(&self) -> usize {
        self.num_points
    }

    pub fn num_lines(&self) -> usize {
        self.lines.len()
    }

    pub fn lines(&self) -> &[PointSet] {
        &self.lines
    }

    pub fn line(&self, i: usize) -> PointSet {
        self.lines[i]
    }

    pub fn all_points(&self) -> PointSet {
        PointSet::full(self.num_points)
    }

    pub fn lines_through(&self, x: usize) -> &[usize] {
        &self.lines_through[x]
    }

    /// `x⊥`: every point collinear with `x`, `x` included.
    pub fn point_perp(&self, x: usize) -> PointSet {
        self.neighbourhood[x]
    }

    pub fn collinear(&self, x: usize, y: usize) -> bool {
        x != y && self.neighbourhood[x].contains(y)
    }

    pub fn line_through(&self, x: usize, y: usize) -> Option<usize> {
        if x == y {
            return None;
        }
        self.lines_through[x]
            .iter()
            .copied()
            .find(|&l| self.lines[l].contains(y))
    }

    pub fn contains_line(&self, set: PointSet) -> bool {
        self.lines.contains(&set)
    }

    /// Points of `subset` with the lines fully inside it; also returns, for
    /// each new index, the original point index.
    pub fn induced(&self, subset: PointSet) -> Result<(PointLineGeometry, Vec<usize>)> {
        let original: Vec<usize> = (subset & self.all_points()).to_vec();
        let mut local = vec![usize::MAX; self.num_points];
        for (k, &x) in original.iter().enumerate() {
            local[x] = k;
        }
        let lines = self
            .lines
            .iter()
            .filter(|l| l.is_subset(subset))
            .map(|l| PointSet::from_indices(l.iter().map(|x| local[x])))
            .collect();
        Ok((PointLineGeometry::new(original.len(), lines)?, original))
    }

    /// Copy with line `index` removed.
    pub fn without_line(&self, index: usize) -> Result<PointLineGeometry> {
        if index >= self.lines.len() {
            return Err(Error::domain(format!("no line {index}")));
        }
        let mut lines = self.lines.clone();
        lines.remove(index);
        PointLineGeometry::new(self.num_points, lines)
    }
}

/// Order `(s, t)`: `s + 1` points per line, `t + 1` lines per point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GqOrder {
    pub s: usize,
    pub t: usize,
}

/// The first generalized-quadrangle axiom a geometry was found to violate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GqViolation {
    Empty,
    /// Axiom (ii): lines of unequal size.
    LineSize {
        line: usize,
        expected: usize,
        found: usize,
    },
    /// Axiom (iii): `point` is off `line` but sees it through `transversals` pairs, not one.
    Transversal {
        point: usize,
        line: usize,
        transversals: usize,
    },
    /// Axiom (i): points on unequal numbers of lines.
    PointDegree {
        point: usize,
        expected: usize,
        found: usize,
    },
    /// Axiom (i): `t >= 1` fails.
    SingleLinePerPoint,
    Counts {
        points: usize,
        lines: usize,
        order: GqOrder,
    },
}

impl GqViolation {
    /// Number of the violated axiom, when the failure is one of the three axioms.
    pub fn axiom(&self) -> Option<u8> {
        match self {
            GqViolation::LineSize { .. } => Some(2),
            GqViolation::Transversal { .. } => Some(3),
            GqViolation::PointDegree { .. } | GqViolation::SingleLinePerPoint => Some(1),
            GqViolation::Empty | GqViolation::Counts { .. } => None,
        }
    }
}

impl fmt::Display for GqViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GqViolation::Empty => write!(f, "geometry has no points or no lines"),
            GqViolation::LineSize {
                line,
                expected,
                found,
            } => write!(
                f,
                "axiom (ii): line {line} has {found} points, expected {expected}"
            ),
            GqViolation::Transversal {
                point,
                line,
                transversals,
            } => write!(
                f,
                "axiom (iii): point {point} reaches line {line} through {transversals} transversals, expected 1"
            ),
            GqViolation::PointDegree {
                point,
                expected,
                found,
            } => write!(
                f,
                "axiom (i): point {point} is on {found} lines, expected {expected}"
            ),
            GqViolation::SingleLinePerPoint => {
                write!(f, "axiom (i): every point is on a single line (t = 0)")
            }
            GqViolation::Counts {
                points,
                lines,
                order,
            } => write!(
                f,
                "counts {points} points / {lines} lines do not fit order ({}, {})",
                order.s, order.t
            ),
        }
    }
}

/// Checks the generalized-quadrangle axioms and returns the order `(s, t)`.
///
/// Checks run as: line sizes (ii), unique transversals (iii), point degrees
/// (i), then the point and line counts. Two points on at most one line is
/// already enforced by [`PointLineGeometry::new`].
pub fn verify_gq(g: &PointLineGeometry) -> std::result::Result<GqOrder, GqViolation> {
    if g.num_points() == 0 || g.num_lines() == 0 {
        return Err(GqViolation::Empty);
    }
    let line_size = g.line(0).len();
    for (i, l) in g.lines().iter().enumerate() {
        if l.len() != line_size {
            return Err(GqViolation::LineSize {
                line: i,
                expected: line_size,
                found: l.len(),
            });
        }
    }
    for x in 0..g.num_points() {
        for (i, &l) in g.lines().iter().enumerate() {
            if l.contains(x) {
                continue;
            }
            // each collinear y on l fixes the joining line M uniquely
            let transversals = (l & g.point_perp(x)).len();
            if transversals != 1 {
                return Err(GqViolation::Transversal {
                    point: x,
                    line: i,
                    transversals,
                });
            }
        }
    }
    let degree = g.lines_through(0).len();
    for x in 0..g.num_points() {
        let found = g.lines_through(x).len();
        if found != degree {
            return Err(GqViolation::PointDegree {
                point: x,
                expected: degree,
                found,
            });
        }
    }
    if degree < 2 {
        return Err(GqViolation::SingleLinePerPoint);
    }
    let order = GqOrder {
        s: line_size - 1,
        t: degree - 1,
    };
    let st1 = order.s * order.t + 1;
    if g.num_points() != (order.s + 1) * st1 || g.num_lines() != (order.t + 1) * st1 {
        return Err(GqViolation::Counts {
            points: g.num_points(),
            lines: g.num_lines(),
            order,
        });
    }
    Ok(order)
}

/// `A⊥`: the intersection of `x⊥` over `x` in `a`.
pub fn perp(g: &PointLineGeometry, a: PointSet) -> Result<PointSet> {
    if a.is_empty() {
        return Err(Error::domain("perp of the empty set"));
    }
    if !a.is_subset(g.all_points()) {
        return Err(Error::domain(format!(
            "{a} is not a set of points of the geometry"
        )));
    }
    Ok(a.iter()
        .fold(g.all_points(), |acc, x| acc & g.point_perp(x)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TriadKind {
    Acentric,
    Unicentric,
    Tricentric,
    /// Any other nonzero number of centers; never occurs in W(2).
    OtherCentric(usize),
}

impl TriadKind {
    fn from_centers(n: usize) -> Self {
        match n {
            0 => TriadKind::Acentric,
            1 => TriadKind::Unicentric,
            3 => TriadKind::Tricentric,
            n => TriadKind::OtherCentric(n),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TriadReport {
    pub triple: [usize; 3],
    pub centers: PointSet,
    pub kind: TriadKind,
}

impl TriadReport {
    pub fn points(&self) -> PointSet {
        PointSet::from_indices(self.triple)
    }
}

/// Classifies a triple of distinct, pairwise non-collinear points; `None` otherwise.
pub fn classify_triad(g: &PointLineGeometry, triple: [usize; 3]) -> Option<TriadReport> {
    let [a, b, c] = triple;
    if a == b || b == c || a == c || [a, b, c].iter().any(|&x| x >= g.num_points()) {
        return None;
    }
    if g.collinear(a, b) || g.collinear(b, c) || g.collinear(a, c) {
        return None;
    }
    let mut sorted = triple;
    sorted.sort_unstable();
    let centers = g.point_perp(a) & g.point_perp(b) & g.point_perp(c);
    Some(TriadReport {
        triple: sorted,
        centers,
        kind: TriadKind::from_centers(centers.len()),
    })
}

/// Every triad, in lexicographic order of its sorted triple.
pub fn enumerate_triads(g: &PointLineGeometry) -> Vec<TriadReport> {
    let n = g.num_points();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if g.collinear(a, b) {
                continue;
            }
            for c in b + 1..n {
                if let Some(report) = classify_triad(g, [a, b, c]) {
                    out.push(report);
                }
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HyperplaneKind {
    Perp { center: usize },
    Grid,
    Ovoid,
    Other,
}

impl HyperplaneKind {
    pub fn name(self) -> &'static str {
        match self {
            HyperplaneKind::Perp { .. } => "perp",
            HyperplaneKind::Grid => "grid",
            HyperplaneKind::Ovoid => "ovoid",
            HyperplaneKind::Other => "other",
        }
    }

    pub fn center(self) -> Option<usize> {
        match self {
            HyperplaneKind::Perp { center } => Some(center),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Hyperplane {
    pub points: PointSet,
    pub kind: HyperplaneKind,
}

/// A proper subset met by every line in exactly one point or in all of them.
pub fn is_hyperplane(g: &PointLineGeometry, s: PointSet) -> bool {
    let all = g.all_points();
    if !s.is_subset(all) || s == all {
        return false;
    }
    g.lines().iter().all(|&l| {
        let k = (l & s).len();
        k == 1 || k == l.len()
    })
}

/// All geometric hyperplanes, classified, in ascending mask order.
///
/// A hyperplane is a perp when it equals some `x⊥` (smallest such `x` is
/// recorded), an ovoid when every line meets it once, and a grid when the
/// induced substructure is a GQ(s, t') with `t' < t` for the host order
/// `(s, t)`. The grid test only applies when the host is itself a GQ.
pub fn enumerate_hyperplanes(g: &PointLineGeometry) -> Result<Vec<Hyperplane>> {
    let n = g.num_points();
    if n > MAX_HYPERPLANE_SCAN_POINTS {
        return Err(Error::Capacity {
            what: "points for exhaustive hyperplane scan",
            found: n,
            limit: MAX_HYPERPLANE_SCAN_POINTS,
        });
    }
    let host = verify_gq(g).ok();
    let full = g.all_points().mask();
    let mut out = Vec::new();
    'candidates: for mask in 0..full {
        for &l in g.lines() {
            let k = (l.mask() & mask).count_ones() as usize;
            if k != 1 && k != l.len() {
                continue 'candidates;
            }
        }
        let points = PointSet::from_mask(mask);
        out.push(Hyperplane {
            points,
            kind: classify_hyperplane(g, host, points)?,
        });
    }
    Ok(out)
}

fn classify_hyperplane(
    g: &PointLineGeometry,
    host: Option<GqOrder>,
    h: PointSet,
) -> Result<HyperplaneKind> {
    if let Some(center) = (0..g.num_points()).find(|&x| g.point_perp(x) == h) {
        return Ok(HyperplaneKind::Perp { center });
    }
    if g.lines().iter().all(|&l| (l & h).len() == 1) {
        return Ok(HyperplaneKind::Ovoid);
    }
    if let Some(order) = host {
        let (sub, _) = g.induced(h)?;
        if let Ok(sub_order) = verify_gq(&sub) {
            if sub_order.s == order.s && sub_order.t < order.t {
                return Ok(HyperplaneKind::Grid);
            }
        }
    }
    Ok(HyperplaneKind::Other)
}

/// Swaps points and lines: dual point `i` is line `i`, dual line `j` collects
/// the lines through original point `j`.
pub fn dual(g: &PointLineGeometry) -> Result<PointLineGeometry> {
    let lines = (0..g.num_points())
        .map(|x| PointSet::from_indices(g.lines_through(x).iter().copied()))
        .collect();
    PointLineGeometry::new(g.num_lines(), lines)
}
