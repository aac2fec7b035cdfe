//! Generalized Vandermonde determinants.
//!
//! A [`DeterminantSpec`] names an element family and its parameters. For every family the
//! crate evaluates the closed form ([`DeterminantSpec::det_closed`]) and, independently, the
//! matrix itself ([`DeterminantSpec::build_matrix`]), whose determinant is taken by pivoted
//! LU ([`det_lu`], carried in double-double by [`DeterminantSpec::evaluate`]) or, on
//! rationals, by fraction-free elimination ([`det_exact`]).

mod identities;
mod json;
mod kind;
mod matrix;
mod spec;
mod triangular;

pub use identities::{
    affine_map_sides, affine_progression_sides, alternant_matrix, diagonal_rearrangement,
    inversion_sides, mobius_alternant_sides, mobius_sides, neg_complex_index_sides,
    ratio_rearrangement, Sides,
};
pub use json::{DetDocument, DetResultDocument, ParamsDocument, SCHEMA_VERSION};
pub use kind::DetKind;
pub use matrix::{det_exact, det_lu, det_oracle, Matrix};
pub use spec::{det_residual, prod_diff, DetParams, DetResult, DeterminantSpec, NodeSet};
pub use triangular::{
    triangular_entry, triangular_sides, triangular_sides_extended, TriangularKind, TriangularParams, TriangularSides,
    TRIANGULAR_TOLERANCE,
};
