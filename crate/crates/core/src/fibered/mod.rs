//! The fibered geometries: SL₂ via T¹ℍ², S²×ℝ and ℍ²×ℝ.

pub mod psl2;
pub mod s2r;
pub mod sasaki;

pub use psl2::*;
pub use s2r::*;
pub use sasaki::*;
