//! Graded Poisson automorphisms and the groups they generate.

mod group;
mod maps;
mod reflections;
mod skew;

pub use group::*;
pub use maps::*;
pub use reflections::*;
pub use skew::*;
