//! Isometry groups of finite-volume quotients of the eight Thurston geometries.

pub mod algebra;
pub mod error;
pub mod euclid;
pub mod fibered;
pub mod hyperbolic;
pub mod iso;
pub mod nil;
pub mod selfcheck;
pub mod sol;
pub mod spherical;
pub mod verdict;

pub use error::{GeomError, Result};
pub use iso::{FinitePart, Geometry, GroupTag, IsoDescriptor};
