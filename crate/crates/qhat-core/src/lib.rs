pub mod chaincat;
pub mod error;
pub mod functors;
pub mod harness;
pub mod homalg;
pub mod linalg;
pub mod pathalg;
pub mod repcore;
pub mod sampling;

pub use error::{Error, Result};
pub use linalg::{Matrix, Q};
pub use pathalg::{AlgElem, Algebra, Path, Quiver, Relation};
pub use repcore::{Rep, RepMap};
