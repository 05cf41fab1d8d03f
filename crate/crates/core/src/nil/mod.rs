//! Nil geometry: the Heisenberg group, its lattices and their quotients.

pub mod dichotomy;
pub mod heis;
pub mod iso;
pub mod lattice;
pub mod point_group;
pub mod quotient;

pub use dichotomy::{
    nil_projection_dichotomy, nil_volume_verdict, Dichotomy, VolumeVerdict, DEFAULT_WORD_BOUND,
};
pub use heis::{heis_commutator, heis_conjugate, heis_mul, HeisPoint};
pub use iso::{twist, HeisIsometry, PlanarOrth};
pub use lattice::{nil_lattice_make, nil_normalizer, NilLattice, NilLatticeJson, NilNormalizer};
pub use point_group::{planar_point_group, PlanarPointGroup, PointGroupTag};
pub use quotient::{nil_lift, nil_lift_point_group, nil_quotient_isometry, normalizes};

/// λ/n, the generator of the lattice's centre.
pub fn nil_center_intersection(l: &NilLattice) -> crate::algebra::QuadRat {
    l.center_gen()
}
