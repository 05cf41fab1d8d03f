//! Rule engine for lattice actions and the per-geometry isometry summaries.

pub mod galois;
pub mod lie;
pub mod summary;
pub mod zimmer;

pub use galois::*;
pub use lie::*;
pub use summary::*;
pub use zimmer::*;
