//! Dense linear-algebra oracles: graded pieces, resolutions and Tor computed
//! degree by degree, with no Gröbner bases involved.

pub mod graded;
pub mod linalg;

pub use graded::{hilbert_function, monomials, syzygy_dims, tor_dims, DenseModule, DenseResolution, TorTable};
pub use linalg::{kernel, Echelon};
