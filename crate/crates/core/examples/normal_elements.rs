//! Jacobi checks, Poisson normal elements and Poisson-Ore splitting.

use poisson_workbench::families::f_pq;
use poisson_workbench::poisson::{normal_check, normal_find_deg1, ore_split, PoissonAlgebra};
use poisson_workbench::solver::DEFAULT_BUDGET;
use poisson_workbench::{Cyclo, PolyRing};

fn main() -> poisson_workbench::Result<()> {
    let r = PolyRing::new(["x", "y", "z"])?;
    let entries = vec![((0, 1), r.parse("x^2")?), ((2, 0), r.parse("z^2")?)];
    let bad = PoissonAlgebra::new(r.clone(), entries, true)?;
    let j = bad.jacobi_check();
    println!(
        "Jacobi holds: {}, failing triple {:?}, cyclic sum {}",
        j.holds,
        j.failing,
        r.fmt(&j.cyclic_sum.unwrap())
    );

    // p = -q: three normal lines x + g y + g^2 z
    let q = Cyclo::from_int(1);
    let a = f_pq(&-&q, &q)?;
    println!(
        "normal elements of f_(-1,1): {:?}",
        normal_find_deg1(&a, DEFAULT_BUDGET)?.kind()
    );
    let u = a.parse("x + zeta(3)*y + zeta(3)^2*z")?;
    if let Some(pi) = normal_check(&a, &u)? {
        for (i, img) in pi.images.iter().enumerate() {
            println!("  pi_u({}) = {}", a.ring().name(i), a.fmt(img));
        }
    }

    // a skew plane splits as k[y][x; alpha]
    let r2 = PolyRing::new(["x", "y"])?;
    let plane = PoissonAlgebra::new(r2.clone(), vec![((0, 1), r2.parse("2*x*y")?)], false)?;
    let split = ore_split(&plane, &[Cyclo::one(), Cyclo::zero()])?;
    println!(
        "base has {} variables, reconstructs: {}",
        split.base.nvars(),
        split.reconstructs(&plane)
    );
    Ok(())
}
