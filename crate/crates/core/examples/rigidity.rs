//! Telling A and A^G apart by Poisson invariants.

use poisson_workbench::families::{f_pq, homogenized_weyl};
use poisson_workbench::fixed::{rigidity_report, Verdict};
use poisson_workbench::poisson::PoissonAlgebra;
use poisson_workbench::solver::DEFAULT_BUDGET;
use poisson_workbench::symmetry::{group_closure, GradedMap};
use poisson_workbench::Cyclo;

fn report(name: &str, a: &PoissonAlgebra, g: GradedMap) -> poisson_workbench::Result<()> {
    let r = rigidity_report(a, &group_closure(&[g], 100)?, None, DEFAULT_BUDGET)?;
    println!(
        "{name}: center dims {:?}, derived dims {:?}",
        r.a.center_dims, r.a.derived_dims
    );
    match r.verdict {
        Verdict::Distinguished { witness, a, ag } => {
            println!("  differs in {witness}: A {a}, A^G {ag}")
        }
        Verdict::NotDistinguished => println!("  no invariant differs"),
    }
    Ok(())
}

fn main() -> poisson_workbench::Result<()> {
    let c = Cyclo::from_int;
    report(
        "f_(0,1)",
        &f_pq(&c(0), &c(1))?,
        GradedMap::diagonal(&[Cyclo::zeta(3, 1), c(1), c(1)])?,
    )?;
    report(
        "H_1",
        &homogenized_weyl(1)?,
        GradedMap::diagonal(&[c(1), c(1), c(-1)])?,
    )
}
