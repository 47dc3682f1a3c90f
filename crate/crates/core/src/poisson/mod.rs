mod algebra;
mod normal;
mod ore;
mod structure;

pub use algebra::*;
pub use normal::*;
pub use ore::*;
pub use structure::*;
