//! Vectors over the two-element field, the small projective spaces PG(n, 2),
//! and the two forms that carry W(2): the symplectic form on GF(2)^4 and the
//! parabolic quadratic form on GF(2)^5.
//!
//! Vectors are bit masks: coordinate `i` lives in bit `i`. Every enumeration
//! in this module runs in ascending mask order.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{PointLineGeometry, PointSet};

/// Widest vector this crate carries (PG(4,2) needs five coordinates).
pub const MAX_LEN: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Gf2Vector {
    mask: u32,
    len: u8,
}

#[allow(clippy::len_without_is_empty)]
impl Gf2Vector {
    pub fn new(mask: u32, len: usize) -> Result<Self> {
        if len == 0 || len > MAX_LEN {
            return Err(Error::domain(format!(
                "vector length {len} outside 1..={MAX_LEN}"
            )));
        }
        if mask >> len != 0 {
            return Err(Error::domain(format!(
                "mask {mask:#b} has bits beyond length {len}"
            )));
        }
        Ok(Self {
            mask,
            len: len as u8,
        })
    }

    pub fn zero(len: usize) -> Result<Self> {
        Self::new(0, len)
    }

    /// Builds a vector from coordinates listed first to last; each entry must be 0 or 1.
    pub fn from_bits(bits: &[u8]) -> Result<Self> {
        let mut mask = 0u32;
        for (i, &b) in bits.iter().enumerate() {
            match b {
                0 => {}
                1 => mask |= 1 << i,
                other => return Err(Error::domain(format!("coordinate {other} is not a bit"))),
            }
        }
        Self::new(mask, bits.len())
    }

    pub fn mask(self) -> u32 {
        self.mask
    }

    pub fn len(self) -> usize {
        self.len as usize
    }

    pub fn is_zero(self) -> bool {
        self.mask == 0
    }

    pub fn bit(self, i: usize) -> bool {
        i < self.len() && (self.mask >> i) & 1 == 1
    }

    pub fn bits(self) -> Vec<u8> {
        (0..self.len()).map(|i| self.bit(i) as u8).collect()
    }

    pub fn checked_add(self, other: Self) -> Result<Self> {
        check_len(other, self.len())?;
        Ok(Self {
            mask: self.mask ^ other.mask,
            len: self.len,
        })
    }

    /// Standard dot product; used to evaluate a dual functional on a point.
    pub fn dot(self, other: Self) -> Result<bool> {
        check_len(other, self.len())?;
        Ok((self.mask & other.mask).count_ones() % 2 == 1)
    }
}

impl Add for Gf2Vector {
    type Output = Gf2Vector;

    /// Panics on a length mismatch; use [`Gf2Vector::checked_add`] to get an error instead.
    fn add(self, other: Self) -> Self {
        self.checked_add(other)
            .expect("adding GF(2) vectors of different lengths")
    }
}

impl fmt::Display for Gf2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for i in 0..self.len() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", self.bit(i) as u8)?;
        }
        write!(f, ")")
    }
}

fn check_len(v: Gf2Vector, expected: usize) -> Result<()> {
    if v.len() != expected {
        return Err(Error::Dimension {
            expected,
            found: v.len(),
        });
    }
    Ok(())
}

/// The symplectic form on GF(2)^4 with coordinates `(a1, b1, a2, b2)`:
/// `a1 b1' + a1' b1 + a2 b2' + a2' b2`.
pub fn symplectic_form(u: Gf2Vector, v: Gf2Vector) -> Result<bool> {
    check_len(u, 4)?;
    check_len(v, 4)?;
    // swap each (a, b) pair of v, then take the parity of the overlap
    let swapped = ((v.mask >> 1) & 0b0101) | ((v.mask << 1) & 0b1010);
    Ok((u.mask & swapped).count_ones() % 2 == 1)
}

/// Parabolic form `x0 + x1 x2 + x3 x4` on GF(2)^5.
pub fn quadratic_form_q42(v: Gf2Vector) -> Result<bool> {
    check_len(v, 5)?;
    let x = |i: usize| v.bit(i);
    Ok(x(0) ^ (x(1) & x(2)) ^ (x(3) & x(4)))
}

/// All nonzero vectors of length `n + 1`, ascending by mask.
pub fn projective_points(n: usize) -> Result<Vec<Gf2Vector>> {
    if n < 1 {
        return Err(Error::domain("projective dimension must be at least 1"));
    }
    let len = n + 1;
    if len > MAX_LEN {
        return Err(Error::Capacity {
            what: "projective dimension",
            found: n,
            limit: MAX_LEN - 1,
        });
    }
    (1u32..(1 << len)).map(|m| Gf2Vector::new(m, len)).collect()
}

/// Projective span: every nonzero GF(2)-combination of `vs`, ascending by mask.
pub fn span_closure(vs: &[Gf2Vector]) -> Result<Vec<Gf2Vector>> {
    let first = vs
        .first()
        .ok_or_else(|| Error::domain("span of an empty set"))?;
    let len = first.len();
    let mut span: BTreeSet<u32> = BTreeSet::new();
    span.insert(0);
    for &v in vs {
        check_len(v, len)?;
        if span.contains(&v.mask) {
            continue;
        }
        let shifted: Vec<u32> = span.iter().map(|m| m ^ v.mask).collect();
        span.extend(shifted);
    }
    span.remove(&0);
    span.into_iter().map(|m| Gf2Vector::new(m, len)).collect()
}

/// PG(n, 2): points are the nonzero vectors, lines the triples `{u, v, u + v}`.
#[derive(Clone, Debug)]
pub struct ProjectiveSpace {
    dimension: usize,
    points: Vec<Gf2Vector>,
    lines: Vec<[Gf2Vector; 3]>,
}

impl ProjectiveSpace {
    pub fn new(dimension: usize) -> Result<Self> {
        if dimension > 4 {
            return Err(Error::Capacity {
                what: "projective dimension",
                found: dimension,
                limit: 4,
            });
        }
        let points = projective_points(dimension)?;
        let mut lines = Vec::new();
        for (i, &u) in points.iter().enumerate() {
            for &v in &points[i + 1..] {
                let w = u + v;
                // each line is emitted once, from its two smallest points
                if w.mask > v.mask {
                    lines.push([u, v, w]);
                }
            }
        }
        Ok(Self {
            dimension,
            points,
            lines,
        })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn points(&self) -> &[Gf2Vector] {
        &self.points
    }

    pub fn lines(&self) -> &[[Gf2Vector; 3]] {
        &self.lines
    }

    /// The incidence geometry; point `i` is `points()[i]`, i.e. mask `i + 1`.
    pub fn geometry(&self) -> Result<PointLineGeometry> {
        let lines = self
            .lines
            .iter()
            .map(|line| PointSet::from_indices(line.iter().map(|p| p.mask as usize - 1)))
            .collect();
        PointLineGeometry::new(self.points.len(), lines)
    }
}
