//! Linear cyclic stabilizer codes built from σ-isotropic ideals of the
//! cyclotomic ring F_p[X]/(Xⁿ−1): construction, distance analysis,
//! algebraic decoding and channel simulation.

pub mod arith;
pub mod channel;
pub mod construct;
pub mod decode;
pub mod distance;
pub mod error;
pub mod field;
pub mod linalg;
pub mod poly;
pub mod symplectic;
pub mod table1;

pub use error::{Error, Result};
