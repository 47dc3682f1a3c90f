//! Fixed subrings with their induced brackets.

use poisson_workbench::families::quantum_matrices;
use poisson_workbench::fixed::{fixed_ring_of, is_skew_presentation, PresentedPoisson};
use poisson_workbench::solver::DEFAULT_BUDGET;
use poisson_workbench::symmetry::GradedMap;
use poisson_workbench::{Cyclo, Matrix};

fn print(p: &PresentedPoisson, ambient: &poisson_workbench::PolyRing) {
    for i in 0..p.ngens() {
        println!(
            "  {} = {}  (degree {})",
            p.ring.name(i),
            ambient.fmt(&p.expressions[i]),
            p.degrees[i]
        );
    }
    for i in 0..p.ngens() {
        for j in i + 1..p.ngens() {
            println!(
                "  {{{}, {}}} = {}",
                p.ring.name(i),
                p.ring.name(j),
                p.fmt(&p.brackets[i][j])
            );
        }
    }
    for r in &p.relations {
        println!("  relation {} = 0", p.fmt(r));
    }
    println!(
        "  certified: {}, skew: {}",
        p.certified,
        is_skew_presentation(p).is_some()
    );
}

fn main() -> poisson_workbench::Result<()> {
    let c = Cyclo::from_int;
    let a = quantum_matrices(2)?;
    // b -> 2c, c -> b/2
    let mut m = Matrix::identity(4);
    m.set(1, 1, c(0));
    m.set(2, 2, c(0));
    m.set(2, 1, c(2));
    m.set(1, 2, Cyclo::from_frac(1, 2));
    let swap = GradedMap::new(m)?;
    println!("O(M_2) under b <-> 2c:");
    print(
        &fixed_ring_of(&a, &[swap], Some(2), DEFAULT_BUDGET)?,
        a.ring(),
    );

    // not generated by reflections: relations appear
    let plane = poisson_workbench::families::skew_symmetric(&Matrix::from_rows(vec![
        vec![c(0), c(1)],
        vec![c(-1), c(0)],
    ])?)?;
    println!("skew plane under -1:");
    print(
        &fixed_ring_of(
            &plane,
            &[GradedMap::diagonal(&[c(-1), c(-1)])?],
            Some(2),
            DEFAULT_BUDGET,
        )?,
        plane.ring(),
    );
    Ok(())
}
