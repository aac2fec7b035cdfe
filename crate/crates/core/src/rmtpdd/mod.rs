//! Mellin transforms of the determinant distribution for the unitary (`beta = 2`) ensembles
//! with Hermite, Laguerre, Gegenbauer and Jacobi weights.
//!
//! For an eigenvalue density `C_n |Δ(x)|² ∏ w(x_j)`, the Mellin transform of the even or odd
//! part of the determinant density is `½ C_n n! det[Φ^±_{j,k}(s)]`, where `Φ^±_{j,k}(s)` is the
//! moment `∫ w(x) ε^±(x) |x|^{s-1} P_j(x) Q_k(x) dx` against any monic bases `P`, `Q`.
//!
//! Every quantity has two routes: closed-form elements and block determinants
//! ([`phi_element`], [`mellin_closed`]) and numerical ones ([`quadrature_phi`], LU of the
//! element matrix, [`pair_integral`]).

mod ensemble;
mod mellin;
mod phi;
pub mod quad;

pub use ensemble::{Ensemble, EnsembleSpec, Parity};
pub use mellin::{
    block_determinant_oracle, block_matrix, checkerboard_blocks, checkerboard_determinant, determinant_closed, integer_moment,
    jacobi_inverse_normalization, jacobi_phi_determinant, mellin_closed, mellin_oracle, mellin_quadrature,
    monic_norms, normalization_const, pair_integral, phi_determinant_oracle, phi_matrix, quadrature_phi_matrix, Block, BlockKind,
    MellinResult,
};
pub use phi::{
    hankel_gamma, hankel_gamma_ratio, hankel_recip_gamma, jacobi_element_at_one, phi_element, phi_element_in, quadrature_phi,
    quadrature_phi_magnitude, quadrature_phi_with,
};
