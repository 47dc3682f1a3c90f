//! Invariant subrings under finite groups of graded Poisson automorphisms.

mod invariants;
mod presented;
mod rigidity;

pub use invariants::*;
pub use presented::{is_skew_presentation, present_subalgebra, PresentedPoisson};
pub use rigidity::*;
