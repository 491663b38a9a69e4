//! Exact computations with the quotient rings `S_{n,k} = F[x_1..x_n]/J_{n,k}`,
//! their monomial bases, 0-Hecke modules and graded characteristics.

pub mod characteristics;
pub mod combinatorics;
pub mod error;
pub mod field;
pub mod groebner;
pub mod heckemod;
pub mod linalg;
pub mod pointsets;
pub mod polyring;
pub mod verify;

pub use error::{Error, Result};
