//! The Poisson enveloping algebra of a quadratic bracket.

use poisson_workbench::envelope::{
    envelope_dims, envelope_presentation, envelope_trace, DEFAULT_DIMS_CAP,
};
use poisson_workbench::families::skew_symmetric;
use poisson_workbench::symmetry::GradedMap;
use poisson_workbench::{Cyclo, Matrix};

fn main() -> poisson_workbench::Result<()> {
    let c = Cyclo::from_int;
    let a = skew_symmetric(&Matrix::from_rows(vec![
        vec![c(0), c(2)],
        vec![c(-2), c(0)],
    ])?)?;
    let p = envelope_presentation(&a)?;
    print!("{}", p.render());
    println!("dims {:?}", envelope_dims(&a, 3, DEFAULT_DIMS_CAP)?);

    let g = GradedMap::diagonal(&[c(-1), c(1)])?;
    let t = envelope_trace(&a, &g)?;
    println!(
        "trace on U(A): {}, quasi-reflection: {}",
        t.series, t.quasi_reflection
    );
    Ok(())
}
