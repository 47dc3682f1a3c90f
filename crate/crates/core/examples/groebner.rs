//! Parsing, Groebner bases and elimination.

use poisson_workbench::solver::{groebner, normal_form, MonomialOrder, DEFAULT_BUDGET};
use poisson_workbench::PolyRing;

fn main() -> poisson_workbench::Result<()> {
    let r = PolyRing::new(["x", "y", "z"])?;
    let f = r.parse("(x + zeta(3)*y)^2 - z/2")?;
    println!("f = {}", r.fmt(&f));

    let ideal = vec![r.parse("x^2 - y")?, r.parse("x^3 - z")?];
    let gb = groebner(&ideal, 3, MonomialOrder::Grlex, DEFAULT_BUDGET)?;
    for g in &gb {
        println!("  {}", r.fmt(g));
    }
    let nf = normal_form(&r.parse("y^3 - z^2")?, &gb, MonomialOrder::Grlex);
    println!("y^3 - z^2 mod I = {}", r.fmt(&nf));

    // eliminate x: the twisted cubic's projection
    let elim = groebner(&ideal, 3, MonomialOrder::Elim(1), DEFAULT_BUDGET)?;
    let free: Vec<_> = elim
        .iter()
        .filter(|p| p.degree_in(0) == 0)
        .map(|p| r.fmt(p))
        .collect();
    println!("I cap k[y, z] = {free:?}");
    Ok(())
}
