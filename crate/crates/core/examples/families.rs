//! The built-in Poisson algebra families, emitted as `.pois` text.

use poisson_workbench::families::{
    f_pq, homogenized_weyl, ph_lie, quantum_matrices, skew_symmetric, LieData,
};
use poisson_workbench::io::emit_pois;
use poisson_workbench::poisson::is_unimodular;
use poisson_workbench::{Cyclo, Matrix};

fn main() -> poisson_workbench::Result<()> {
    let c = Cyclo::from_int;
    let q = Matrix::from_rows(vec![
        vec![c(0), c(1), c(-1)],
        vec![c(-1), c(0), c(1)],
        vec![c(1), c(-1), c(0)],
    ])?;
    print!("{}", emit_pois("Skew", &skew_symmetric(&q)?));
    print!("{}", emit_pois("Jacobian", &f_pq(&c(1), &c(2))?));
    print!("{}", emit_pois("OM2", &quantum_matrices(2)?));
    print!("{}", emit_pois("H1", &homogenized_weyl(1)?));

    let b2 = LieData::with_default_names(2, vec![((0, 1), vec![c(0), c(1)])])?;
    let ph = ph_lie(&b2)?;
    print!("{}", emit_pois("PH", &ph));
    println!("PH unimodular: {}", is_unimodular(&ph));
    Ok(())
}
