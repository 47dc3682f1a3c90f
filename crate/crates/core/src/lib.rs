pub mod arith;
pub mod cli;
pub mod envelope;
pub mod error;
pub mod families;
pub mod fixed;
pub mod io;
pub mod linalg;
pub mod poisson;
pub mod poly;

pub use arith::{Cyclo, Rational, RationalSeries, UniPoly};
pub use error::{Error, Result};
pub use linalg::Matrix;
pub use poly::{LinearForm, Mono, Poly, PolyRing};
pub mod solver;
pub mod symmetry;
