//! Exact scalars: rationals, cyclotomic field elements and rational
//! functions in one variable.

pub mod cyclo;
pub mod roots;
pub mod series;
pub mod unipoly;

pub type Rational = num_rational::BigRational;

pub use cyclo::Cyclo;
pub use series::RationalSeries;
pub use unipoly::UniPoly;
