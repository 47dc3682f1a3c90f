//! Brute-force cross-checks over small prime fields.

mod common;

use common::cross;

fn run(check: cross::Check) {
    match check {
        Ok(msg) => eprintln!("{msg}"),
        Err(e) => panic!("{e}"),
    }
}

#[test]
fn cubes_have_no_normal_elements_or_reflections() {
    run(cross::cubes_have_nothing());
}

#[test]
fn xyz_fixed_ring_matches_averaging() {
    run(cross::xyz_fixed_ring());
}

#[test]
fn quantum_2x2_normals_and_reflections() {
    run(cross::om2_normals_and_reflections());
}

#[test]
fn envelope_dims_and_traces_by_rank() {
    run(cross::envelope_small());
}

#[test]
fn oracle_sees_diagonal_reflections_of_xyz() {
    // sanity for the enumeration: f = xyz has diag(xi, 1, 1) and its
    // permutations for every xi != 0, 1
    let f = common::Fp::new(7);
    let br = common::jacobian(f, common::xyz);
    assert_eq!(br.reflections().len(), 3 * (f.p as usize - 2));
}

#[test]
fn oracle_reduction_of_roots_of_unity() {
    let f = common::Fp::new(13);
    for n in [3u32, 4, 6, 12] {
        let z = f.cyclo(&poisson_workbench::Cyclo::zeta(n, 1));
        assert_eq!(f.pow(z, n as u64), 1);
        assert!((1..n as u64).all(|k| f.pow(z, k) != 1));
    }
}
