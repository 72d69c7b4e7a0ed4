//! Two-qubit Pauli operators with exact 4×4 Gaussian-integer matrices.
//!
//! The label `(a1, b1, a2, b2)` stands for `(X^a1 Z^b1) ⊗ (X^a2 Z^b2)`. No
//! factor of `i` is attached, so the product `XZ` (written `W` in mnemonics,
//! equal to `-iY`) keeps every matrix real with entries in `{0, 1, -1}`.
//! Signs of products are therefore bit-exact.

use std::fmt;
use std::ops::{Mul, Neg};

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::geometry::{Hyperplane, HyperplaneKind, PointLineGeometry, PointSet};
use crate::gf2::{symplectic_form, Gf2Vector};
use crate::w2::{LabeledW2, Model};

pub type GaussInt = Complex<i64>;

const ZERO: GaussInt = Complex::new(0, 0);
const ONE: GaussInt = Complex::new(1, 0);

type Mat2 = [[GaussInt; 2]; 2];

const I2: Mat2 = [[ONE, ZERO], [ZERO, ONE]];
const X2: Mat2 = [[ZERO, ONE], [ONE, ZERO]];
const Z2: Mat2 = [[ONE, ZERO], [ZERO, Complex::new(-1, 0)]];

fn mul2(a: &Mat2, b: &Mat2) -> Mat2 {
    let mut out = [[ZERO; 2]; 2];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Matrix4(pub [[GaussInt; 4]; 4]);

impl Matrix4 {
    pub fn identity() -> Self {
        Self::scalar(ONE)
    }

    pub fn scalar(s: GaussInt) -> Self {
        let mut m = [[ZERO; 4]; 4];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = s;
        }
        Matrix4(m)
    }

    /// Kronecker product, `a` acting on the first qubit.
    fn kron(a: &Mat2, b: &Mat2) -> Self {
        let mut m = [[ZERO; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                m[i][j] = a[i / 2][j / 2] * b[i % 2][j % 2];
            }
        }
        Matrix4(m)
    }

    pub fn entry(&self, i: usize, j: usize) -> GaussInt {
        self.0[i][j]
    }

    /// `Some(s)` when the matrix is `s` times the identity.
    pub fn as_scalar(&self) -> Option<GaussInt> {
        let s = self.0[0][0];
        (*self == Matrix4::scalar(s)).then_some(s)
    }

    /// `Some(±1)` when the matrix is plus or minus the identity.
    pub fn identity_sign(&self) -> Option<i8> {
        match self.as_scalar()? {
            s if s == ONE => Some(1),
            s if s == -ONE => Some(-1),
            _ => None,
        }
    }
}

impl Mul for Matrix4 {
    type Output = Matrix4;
    fn mul(self, rhs: Matrix4) -> Matrix4 {
        let mut m = [[ZERO; 4]; 4];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (0..4).map(|k| self.0[i][k] * rhs.0[k][j]).sum();
            }
        }
        Matrix4(m)
    }
}

impl Neg for Matrix4 {
    type Output = Matrix4;
    fn neg(self) -> Matrix4 {
        Matrix4(self.0.map(|row| row.map(|z| -z)))
    }
}

impl fmt::Debug for Matrix4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.0 {
            let cells: Vec<String> = row
                .iter()
                .map(|z| match (z.re, z.im) {
                    (re, 0) => format!("{re:>2}"),
                    (re, im) => format!("{re}{im:+}i"),
                })
                .collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PauliOperator {
    pub label: Gf2Vector,
    pub matrix: Matrix4,
}

fn single_qubit(a: bool, b: bool) -> Mat2 {
    let x = if a { X2 } else { I2 };
    let z = if b { Z2 } else { I2 };
    mul2(&x, &z)
}

fn qubit_letter(a: bool, b: bool) -> char {
    match (a, b) {
        (false, false) => 'I',
        (true, false) => 'X',
        (false, true) => 'Z',
        (true, true) => 'W',
    }
}

/// The operator `(X^a1 Z^b1) ⊗ (X^a2 Z^b2)` for `label = (a1, b1, a2, b2)`.
/// The zero label gives the identity.
pub fn pauli_from_label(label: Gf2Vector) -> Result<PauliOperator> {
    if label.len() != 4 {
        return Err(Error::Dimension {
            expected: 4,
            found: label.len(),
        });
    }
    let first = single_qubit(label.bit(0), label.bit(1));
    let second = single_qubit(label.bit(2), label.bit(3));
    Ok(PauliOperator {
        label,
        matrix: Matrix4::kron(&first, &second),
    })
}

impl PauliOperator {
    /// Two letters, first qubit first: `I`, `X`, `Z`, or `W` for `X·Z`.
    pub fn mnemonic(&self) -> String {
        let l = self.label;
        [
            qubit_letter(l.bit(0), l.bit(1)),
            qubit_letter(l.bit(2), l.bit(3)),
        ]
        .iter()
        .collect()
    }
}

impl fmt::Display for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.mnemonic(), self.label)
    }
}

/// Exact matrix commutation test.
pub fn commutes(p: &PauliOperator, q: &PauliOperator) -> bool {
    p.matrix * q.matrix == q.matrix * p.matrix
}

pub fn product<'a, I: IntoIterator<Item = &'a PauliOperator>>(ops: I) -> Matrix4 {
    ops.into_iter()
        .fold(Matrix4::identity(), |acc, p| acc * p.matrix)
}

/// Point `i` of the symplectic W(2) paired with the operator carrying its label.
#[derive(Clone, Debug)]
pub struct PauliBijection {
    geometry: PointLineGeometry,
    operators: Vec<PauliOperator>,
}

impl PauliBijection {
    pub fn operator(&self, x: usize) -> &PauliOperator {
        &self.operators[x]
    }

    pub fn operators(&self) -> &[PauliOperator] {
        &self.operators
    }

    pub fn geometry(&self) -> &PointLineGeometry {
        &self.geometry
    }

    pub fn point_of(&self, label: Gf2Vector) -> Option<usize> {
        self.operators.iter().position(|p| p.label == label)
    }
}

/// Pairs points with operators by label and certifies the correspondence:
/// collinear exactly when commuting, and every line a commuting triple whose
/// labels sum to zero and whose product is ±identity.
pub fn build_bijection(w: &LabeledW2) -> Result<PauliBijection> {
    if w.model() != Model::Symplectic {
        return Err(Error::domain("Pauli labels need the symplectic model"));
    }
    let g = w.geometry();
    let operators = w
        .labels()
        .iter()
        .map(|&l| pauli_from_label(l))
        .collect::<Result<Vec<_>>>()?;
    for x in 0..g.num_points() {
        for y in x + 1..g.num_points() {
            let c = commutes(&operators[x], &operators[y]);
            if c != g.collinear(x, y) {
                return Err(Error::Correspondence(format!(
                    "points {x} and {y}: collinear = {}, commuting = {c}",
                    g.collinear(x, y)
                )));
            }
            if c == symplectic_form(operators[x].label, operators[y].label)? {
                return Err(Error::Correspondence(format!(
                    "points {x} and {y}: matrix and symplectic verdicts differ"
                )));
            }
        }
    }
    for (i, line) in g.lines().iter().enumerate() {
        let ops: Vec<&PauliOperator> = line.iter().map(|x| &operators[x]).collect();
        let sum = ops.iter().fold(Gf2Vector::zero(4)?, |acc, p| acc + p.label);
        if !sum.is_zero() || product(ops.iter().copied()).identity_sign().is_none() {
            return Err(Error::Correspondence(format!(
                "line {i} {line} is not a zero-sum triple with ±identity product"
            )));
        }
    }
    Ok(PauliBijection {
        geometry: g.clone(),
        operators,
    })
}

/// Operator-side meaning of a hyperplane of W(2).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Table2Tag {
    /// Ovoid: five mutually non-commuting operators.
    MutuallyNonCommuting,
    /// Perp-set: the six operators other than `reference` all commute with it.
    CommutingWithReference { reference: usize },
    /// Grid: nine operators forming a Mermin square.
    MerminSquareSet,
}

impl Table2Tag {
    pub fn describe(self) -> &'static str {
        match self {
            Table2Tag::MutuallyNonCommuting => "set of five mutually non-commuting operators",
            Table2Tag::CommutingWithReference { .. } => {
                "set of six operators commuting with a given one"
            }
            Table2Tag::MerminSquareSet => "nine operators of a Mermin square",
        }
    }
}

pub fn interpret_hyperplane(h: &Hyperplane, bij: &PauliBijection) -> Result<Table2Tag> {
    let op = |x: usize| bij.operator(x);
    match h.kind {
        HyperplaneKind::Ovoid => {
            let pts = h.points.to_vec();
            for (i, &x) in pts.iter().enumerate() {
                for &y in &pts[i + 1..] {
                    if commutes(op(x), op(y)) {
                        return Err(Error::Correspondence(format!(
                            "ovoid {} holds commuting operators {} and {}",
                            h.points,
                            op(x),
                            op(y)
                        )));
                    }
                }
            }
            Ok(Table2Tag::MutuallyNonCommuting)
        }
        HyperplaneKind::Perp { center } => {
            let rest = h.points & !PointSet::singleton(center);
            if let Some(y) = rest.iter().find(|&y| !commutes(op(center), op(y))) {
                return Err(Error::Correspondence(format!(
                    "{} fails to commute with reference {}",
                    op(y),
                    op(center)
                )));
            }
            Ok(Table2Tag::CommutingWithReference { reference: center })
        }
        HyperplaneKind::Grid => {
            mermin_square(h, bij)?;
            Ok(Table2Tag::MerminSquareSet)
        }
        HyperplaneKind::Other => Err(Error::Classification(format!(
            "hyperplane {} has no operator interpretation",
            h.points
        ))),
    }
}

/// Nine operators on a 3×3 grid: rows and columns are commuting triples,
/// each with product `sign · identity`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MerminSquare {
    /// Point index of each cell.
    pub points: [[usize; 3]; 3],
    pub cells: [[PauliOperator; 3]; 3],
    pub row_signs: [i8; 3],
    pub col_signs: [i8; 3],
}

impl MerminSquare {
    pub fn sign_product(&self) -> i8 {
        self.row_signs.iter().chain(&self.col_signs).product()
    }

    /// Points of row `i`.
    pub fn row(&self, i: usize) -> PointSet {
        PointSet::from_indices(self.points[i])
    }

    pub fn column(&self, j: usize) -> PointSet {
        PointSet::from_indices(self.points.map(|row| row[j]))
    }
}

fn pairwise_disjoint(lines: &[PointSet]) -> bool {
    lines
        .iter()
        .enumerate()
        .all(|(i, a)| lines[i + 1..].iter().all(|b| a.is_disjoint(*b)))
}

fn sign_of(ops: [&PauliOperator; 3], what: &str) -> Result<i8> {
    product(ops)
        .identity_sign()
        .ok_or_else(|| Error::Structure(format!("{what} product is not ±identity")))
}

/// Lays out the grid `h` as a square. Rows are the parallel class holding the
/// smallest line (by mask), columns the other; both in ascending mask order.
pub fn mermin_square(h: &Hyperplane, bij: &PauliBijection) -> Result<MerminSquare> {
    if h.kind != HyperplaneKind::Grid {
        return Err(Error::domain(format!("{} is not a grid", h.points)));
    }
    let mut lines: Vec<PointSet> = bij
        .geometry()
        .lines()
        .iter()
        .copied()
        .filter(|l| l.is_subset(h.points))
        .collect();
    lines.sort();
    if lines.len() != 6 {
        return Err(Error::Structure(format!(
            "grid {} contains {} lines, expected 6",
            h.points,
            lines.len()
        )));
    }
    let first = lines[0];
    let (rows, cols): (Vec<PointSet>, Vec<PointSet>) = lines
        .iter()
        .partition(|&&l| l == first || l.is_disjoint(first));
    if rows.len() != 3 || cols.len() != 3 || !pairwise_disjoint(&rows) || !pairwise_disjoint(&cols)
    {
        return Err(Error::Structure(format!(
            "lines of {} do not split into two parallel classes",
            h.points
        )));
    }
    let mut points = [[0usize; 3]; 3];
    for (i, &r) in rows.iter().enumerate() {
        for (j, &c) in cols.iter().enumerate() {
            let meet = r & c;
            if meet.len() != 1 {
                return Err(Error::Structure(format!(
                    "row {r} meets column {c} in {} points",
                    meet.len()
                )));
            }
            points[i][j] = meet.first().expect("one point");
        }
    }
    let cells = points.map(|row| row.map(|x| *bij.operator(x)));
    let mut row_signs = [0i8; 3];
    let mut col_signs = [0i8; 3];
    for i in 0..3 {
        row_signs[i] = sign_of([&cells[i][0], &cells[i][1], &cells[i][2]], "row")?;
        col_signs[i] = sign_of([&cells[0][i], &cells[1][i], &cells[2][i]], "column")?;
    }
    Ok(MerminSquare {
        points,
        cells,
        row_signs,
        col_signs,
    })
}
