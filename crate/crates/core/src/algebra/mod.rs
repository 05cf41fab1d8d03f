//! Exact scalars and 2×2 integer/rational/quadratic matrices.

pub mod mat;
pub mod quad;
pub mod sl2;
pub mod snf;

pub use mat::{int_mat_pow, IntMat2, Mat2, QuadMat2, RatMat2, Ring};
pub use quad::{parse_rational, QuadRat};
pub use sl2::{diagonalize_sl2, Sl2Diagonalization};
pub use snf::{smith_general, smith_normal_form, SnfGeneral, SnfResult};

/// Galois conjugate `a + b√d ↦ a − b√d`.
pub fn galois_conjugate(x: &QuadRat) -> QuadRat {
    x.conj()
}
