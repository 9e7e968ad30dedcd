//! Primary decomposition of zero-dimensional ideals in `F_p[x_1..x_n]`.
//!
//! The pipeline computes a reduced Gröbner basis, the standard-monomial basis
//! of the quotient algebra, the kernel of `f ↦ f^p − f` on it, splits that
//! kernel into primitive idempotents, and recovers one primary component per
//! idempotent by saturation.

pub mod error;
pub mod gf;
pub mod groebner;
pub mod idem;
pub mod mpoly;
pub mod oracle;
pub mod primdec;
pub mod quotient;
pub mod univar;

pub use error::{Error, Result};
