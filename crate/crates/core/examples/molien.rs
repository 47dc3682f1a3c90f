//! Group closure, trace series and Molien series.

use poisson_workbench::symmetry::{
    classify_linear, group_closure, molien_series, trace_series, GradedMap,
};
use poisson_workbench::Cyclo;

fn main() -> poisson_workbench::Result<()> {
    let c = Cyclo::from_int;
    let r = GradedMap::diagonal(&[Cyclo::zeta(4, 1), c(1)])?;
    println!(
        "{}: trace series {}",
        classify_linear(&r)?.kind(),
        trace_series(&r)?
    );

    // the symmetric group on two letters and -1
    let swap = GradedMap::permutation(&[1, 0])?;
    let minus = GradedMap::diagonal(&[c(-1), c(-1)])?;
    for (name, gens) in [
        ("<swap>", vec![swap.clone()]),
        ("<-1>", vec![minus.clone()]),
        ("<swap, -1>", vec![swap, minus]),
    ] {
        let g = group_closure(&gens, 100)?;
        let m = molien_series(&g)?;
        let coeffs: Vec<String> = m.taylor(6).iter().map(ToString::to_string).collect();
        println!("{name}: |G| = {}, Molien {m} = {coeffs:?}", g.order());
    }
    Ok(())
}
