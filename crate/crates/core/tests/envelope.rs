//! Enveloping algebra presentations: dimension counts and relation signs.

use poisson_workbench::envelope::{
    envelope_dims, envelope_presentation, expected_dims, presentation_dims, NCPoly, NCPresentation,
    DEFAULT_DIMS_CAP,
};
use poisson_workbench::families::skew_symmetric;
use poisson_workbench::{Cyclo, Matrix};

fn c(n: i64) -> Cyclo {
    Cyclo::from_int(n)
}

fn rel(terms: &[(&[usize], i64)]) -> NCPoly {
    let mut p = NCPoly::default();
    for (w, k) in terms {
        p.add_term(w.to_vec(), c(*k));
    }
    p
}

fn skew_plane(p: i64) -> poisson_workbench::poisson::PoissonAlgebra {
    skew_symmetric(&Matrix::from_rows(vec![vec![c(0), c(p)], vec![c(-p), c(0)]]).unwrap()).unwrap()
}

#[test]
fn derived_relations_have_polynomial_growth() {
    let a = skew_plane(1);
    let p = envelope_presentation(&a).unwrap();
    assert_eq!(presentation_dims(&p, 4).unwrap(), vec![1, 4, 10, 20, 35]);
    assert_eq!(presentation_dims(&p, 4).unwrap(), expected_dims(2, 4));
}

/// Generators x1, y1, x2, y2 = m_x, m_y, h_x, h_y for {x, y} = xy. Flipping
/// the signs of the [y2, x1] and [y2, x2] right-hand sides gives a
/// presentation that is too small from degree three on.
#[test]
fn sign_flipped_relations_lose_polynomial_growth() {
    let (x1, y1, x2, y2) = (0usize, 1usize, 2usize, 3usize);
    let names = ["x1", "y1", "x2", "y2"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let relations = vec![
        rel(&[(&[x1, x2], 1), (&[x2, x1], -1)]),
        rel(&[(&[y1, y2], 1), (&[y2, y1], -1)]),
        rel(&[(&[y1, x1], 1), (&[x1, y1], -1)]),
        rel(&[(&[x2, y1], 1), (&[y1, x2], -1), (&[x1, y1], -1)]),
        rel(&[(&[y2, x1], 1), (&[x1, y2], -1), (&[x1, y1], -1)]),
        rel(&[
            (&[y2, x2], 1),
            (&[x2, y2], -1),
            (&[x1, y2], -1),
            (&[x2, y1], -1),
            (&[x1, y1], -1),
        ]),
    ];
    let literal = NCPresentation::from_parts(names, relations);
    let dims = presentation_dims(&literal, 4).unwrap();
    assert_eq!(&dims[..3], &[1, 4, 10]);
    assert_ne!(dims[3], 20);
    assert_eq!(dims, vec![1, 4, 10, 19, 31]);
}

#[test]
fn short_names_render_the_derived_signs() {
    let p = envelope_presentation(&skew_plane(1))
        .unwrap()
        .with_short_aliases()
        .unwrap();
    let text = p.render();
    for line in [
        "x2*y1 - y1*x2 - x1*y1 = 0",
        "y2*x1 - x1*y2 + x1*y1 = 0",
        "x2*y2 - y2*x2 - x1*y2 - y1*x2 = 0",
    ] {
        assert!(
            text.lines().any(|l| l == line),
            "{line} missing from\n{text}"
        );
    }
}

#[test]
fn dims_cap_is_enforced() {
    assert!(envelope_dims(&skew_plane(1), DEFAULT_DIMS_CAP + 1, DEFAULT_DIMS_CAP).is_err());
}
