//! Reading the bundled data files and writing them back.

use poisson_workbench::io::{emit_map, emit_pois, parse_lie, parse_map, parse_pois};

fn data(name: &str) -> String {
    let path = format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

fn main() -> poisson_workbench::Result<()> {
    let a = parse_pois(&data("om2.pois"), false)?;
    let g = parse_map(&data("om2_swap.map"), a.algebra.ring())?;
    print!("{}", emit_pois(&a.name, &a.algebra));
    print!(
        "{}",
        emit_map(&g.name, g.on.as_deref(), &g.map, a.algebra.ring())
    );

    let bad = parse_pois(&data("bad.pois"), false);
    println!("bad.pois without --defer-jacobi: {}", bad.unwrap_err());

    let sl2 = parse_lie(&data("sl2.lie"))?;
    println!("{} has dimension {}", sl2.name, sl2.lie.dim());
    Ok(())
}
