use crate::error::Result;
use crate::geometry::{enumerate_triads, TriadReport};
use crate::pauli::{build_bijection, PauliBijection};
use crate::veldkamp::{build_veldkamp_space, verify_pg42_isomorphism, Pg42Report, VeldkampSpace};
use crate::w2::{build_q42, build_w2_symplectic, find_isomorphism, IsomorphismMap, LabeledW2};
use crate::Error;

/// Everything the commands report on, computed once from a symplectic W(2).
#[derive(Clone, Debug)]
pub struct Catalog {
    pub w2: LabeledW2,
    pub quadric: LabeledW2,
    /// Symplectic point index to quadric point index.
    pub model_map: IsomorphismMap,
    /// The symplectic geometry carrying quadric coordinates.
    pub quadric_coords: LabeledW2,
    pub triads: Vec<TriadReport>,
    pub veldkamp: VeldkampSpace,
    pub bijection: PauliBijection,
    pub pg42: Pg42Report,
}

impl Catalog {
    pub fn build() -> Result<Self> {
        Self::from_w2(build_w2_symplectic())
    }

    pub fn from_w2(w2: LabeledW2) -> Result<Self> {
        let quadric = build_q42();
        let model_map = find_isomorphism(w2.geometry(), quadric.geometry())
            .ok_or_else(|| Error::Isomorphism("symplectic and quadric models differ".into()))?;
        let quadric_coords = w2.with_labels_from(&quadric, &model_map)?;
        let veldkamp = build_veldkamp_space(&w2)?;
        let pg42 = verify_pg42_isomorphism(&veldkamp, &quadric_coords)?;
        Ok(Self {
            triads: enumerate_triads(w2.geometry()),
            bijection: build_bijection(&w2)?,
            w2,
            quadric,
            model_map,
            quadric_coords,
            veldkamp,
            pg42,
        })
    }
}
