//! Exact arithmetic in Q(zeta_N) and rational generating series.

use poisson_workbench::arith::{Cyclo, RationalSeries, UniPoly};

fn main() -> poisson_workbench::Result<()> {
    let w = Cyclo::zeta(3, 1);
    let i = Cyclo::zeta(4, 1);

    // 1 + w + w^2 = 0
    let s = &(&Cyclo::one() + &w) + &w.pow(2)?;
    println!("1 + w + w^2 = {s}");

    // mixing conductors lifts to the lcm
    let p = &w * &i;
    println!(
        "zeta(3) * zeta(4) = {p}, a root of unity of order {:?}",
        p.root_of_unity_order()?
    );
    println!("1/(1 - zeta(3)) = {}", (&Cyclo::one() - &w).inv()?);

    // Hilbert series of k[x, y] and its Taylor coefficients
    let h = RationalSeries::hilbert_polynomial_ring(2);
    println!(
        "{h} = {:?}",
        h.taylor(5)
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
    );

    // 1 / ((1 - t)(1 - w t))
    let f = RationalSeries::inverse_product(&[
        UniPoly::from_ints(&[1, -1]),
        UniPoly::new(vec![Cyclo::one(), -&w]),
    ])?;
    println!(
        "{f}: {:?}",
        f.taylor(4)
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
    );
    Ok(())
}
