//! Exact k-generalized Fibonacci polynomials `F_{n,k}` for every integer `n`.

pub mod closedform;
pub mod combinat;
pub mod error;
pub mod factor;
pub mod figures;
pub mod index;
pub mod poly;
pub mod recurrence;
pub mod roots;
pub mod tables;
pub mod triangle;
pub mod verify;

pub use error::{Error, Result};
pub use index::{profile, Degree, IndexProfile, Term};
pub use poly::IntPoly;
pub use recurrence::{poly, SequenceCache};
