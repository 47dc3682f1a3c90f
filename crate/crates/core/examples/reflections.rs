//! Searching for graded Poisson reflections.

use poisson_workbench::families::{f_pq, homogenized_weyl, quantum_matrices};
use poisson_workbench::poisson::PoissonAlgebra;
use poisson_workbench::solver::DEFAULT_BUDGET;
use poisson_workbench::symmetry::{classify, find_reflections, ReflectionReport};
use poisson_workbench::Cyclo;

fn show(name: &str, a: &PoissonAlgebra) -> poisson_workbench::Result<()> {
    match find_reflections(a, DEFAULT_BUDGET)? {
        ReflectionReport::NoReflections => println!("{name}: none"),
        ReflectionReport::Inconclusive(_) => println!("{name}: inconclusive"),
        ReflectionReport::Families(fams) => {
            println!("{name}: {} famil(ies)", fams.len());
            for f in &fams {
                let pr = &f.params;
                let ideal: Vec<String> = f.ideal.iter().map(|p| pr.fmt(p)).collect();
                println!("  xi = {}, constraints {ideal:?}", pr.fmt(&f.xi));
                if let Some(g) = f.sample(DEFAULT_BUDGET)? {
                    let rows: Vec<String> = g
                        .matrix()
                        .to_rows()
                        .iter()
                        .map(|r| {
                            r.iter()
                                .map(|c| c.to_string())
                                .collect::<Vec<_>>()
                                .join(", ")
                        })
                        .collect();
                    println!(
                        "  sample [{}]: {}",
                        rows.join("; "),
                        classify(a, &g)?.kind()
                    );
                }
            }
        }
    }
    Ok(())
}

fn main() -> poisson_workbench::Result<()> {
    show("f_(1,0)", &f_pq(&Cyclo::one(), &Cyclo::zero())?)?;
    show("f_(0,1)", &f_pq(&Cyclo::zero(), &Cyclo::one())?)?;
    show("O(M_2)", &quantum_matrices(2)?)?;
    show("O(M_3)", &quantum_matrices(3)?)?;
    show("H_1", &homogenized_weyl(1)?)
}
