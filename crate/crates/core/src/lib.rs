//! Exact finite geometry of the generalized quadrangle W(2) ("the doily").
//!
//! The crate builds W(2) from the symplectic form on GF(2)^4 and from the
//! parabolic quadric in PG(4,2), enumerates its geometric hyperplanes and
//! triads, assembles the Veldkamp space and identifies it with PG(4,2), and
//! matches points with two-qubit Pauli operators using exact integer
//! matrices. Every enumeration is deterministic.
//!
//! ```
//! use doily::{build_veldkamp_space, build_w2_symplectic};
//!
//! let w2 = build_w2_symplectic();
//! let v = build_veldkamp_space(&w2).unwrap();
//! assert_eq!(v.hyperplanes().len(), 31);
//! assert_eq!(v.lines().len(), 155);
//! ```
//!
//! Runnable walkthroughs live in `examples/`; `cargo run --example <name>`.

pub mod cli;
pub mod error;
pub mod geometry;
pub mod gf2;
pub mod pauli;
pub mod veldkamp;
pub mod w2;

pub use error::{Error, Result};
pub use geometry::{
    dual, enumerate_hyperplanes, enumerate_triads, is_hyperplane, perp, verify_gq, GqOrder,
    Hyperplane, HyperplaneKind, PointLineGeometry, PointSet, TriadKind, TriadReport,
};
pub use gf2::{projective_points, quadratic_form_q42, span_closure, symplectic_form, Gf2Vector};
pub use pauli::{
    build_bijection, commutes, interpret_hyperplane, mermin_square, pauli_from_label, MerminSquare,
    PauliBijection, PauliOperator, Table2Tag,
};
pub use veldkamp::{
    build_veldkamp_space, classify_veldkamp_line, veldkamp_line_through, verify_pg42_isomorphism,
    LineType, VeldkampLine, VeldkampSpace,
};
pub use w2::{
    automorphism_count, build_q42, build_w2_symplectic, fano_plane_at, find_isomorphism,
    IsomorphismMap, LabeledW2,
};
