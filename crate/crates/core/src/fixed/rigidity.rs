use super::{fixed_group, is_skew_presentation, PresentedPoisson};
use crate::error::Result;
use crate::poisson::{center_truncated, derived_ideal_truncated, is_unimodular, PoissonAlgebra};
use crate::solver::{normal_form, MonomialOrder};
use crate::symmetry::{skew_matrix, PoissonGroup};

/// Isomorphism invariants of one Poisson algebra, truncated at a degree.
#[derive(Clone, Debug, PartialEq)]
pub struct InvariantSummary {
    pub unimodular: bool,
    /// Dimension of the Poisson center in each degree up to the bound.
    pub center_dims: Vec<usize>,
    /// Dimension of the derived ideal in each degree up to the bound.
    pub derived_dims: Vec<usize>,
    /// Whether the bracket is diagonal in the given generators.
    pub skew: bool,
    /// Number of minimal primes of the derived ideal, when it is monomial.
    pub components: Option<usize>,
    /// When the truncated center is k[c] for a single c: is c in the
    /// derived ideal?
    pub center_in_derived: Option<bool>,
}

pub fn invariant_summary(a: &PoissonAlgebra, d: u32, budget: u32) -> Result<InvariantSummary> {
    let center = center_truncated(a, d);
    let derived = derived_ideal_truncated(a, d.max(2), budget)?;
    let center_in_derived = single_center_generator(&center)
        .map(|c| normal_form(&c, &derived.groebner, MonomialOrder::Grlex).is_zero());
    Ok(InvariantSummary {
        unimodular: is_unimodular(a),
        center_dims: center.iter().map(Vec::len).collect(),
        derived_dims: derived.dims.clone(),
        skew: skew_matrix(a).is_ok(),
        components: derived.components.as_ref().map(Vec::len),
        center_in_derived,
    })
}

/// The generator c when the truncated center looks like k[c]: one
/// element in degree k0 and its multiples, nothing else.
fn single_center_generator(center: &[Vec<crate::poly::Poly>]) -> Option<crate::poly::Poly> {
    let k0 = (1..center.len()).find(|&k| !center[k].is_empty())?;
    let shape_ok = (1..center.len()).all(|k| center[k].len() == usize::from(k % k0 == 0));
    (shape_ok && center[k0].len() == 1).then(|| center[k0][0].clone())
}

#[derive(Clone, Debug, PartialEq)]
pub enum Verdict {
    /// An invariant with different values on A and A^G.
    Distinguished {
        witness: String,
        a: String,
        ag: String,
    },
    /// No computed invariant differs. This is not a proof of isomorphism.
    NotDistinguished,
}

#[derive(Clone, Debug)]
pub struct RigidityReport {
    pub a: InvariantSummary,
    /// Present when A^G is a polynomial ring.
    pub ag: Option<InvariantSummary>,
    pub fixed: PresentedPoisson,
    pub degree_bound: u32,
    pub verdict: Verdict,
}

/// Compare A with A^G on unimodularity, the number of components of the
/// derived ideal, and whether a generator of the center lies in the
/// derived ideal. All three are invariant under Poisson isomorphism.
/// Degree-wise dimensions are reported but not used: the isomorphisms in
/// question need not preserve the grading.
pub fn rigidity_report(
    a: &PoissonAlgebra,
    g: &PoissonGroup,
    degree: Option<u32>,
    budget: u32,
) -> Result<RigidityReport> {
    let fixed = fixed_group(a, g, degree, budget)?;
    let d = fixed.degree_bound;
    let sa = invariant_summary(a, d, budget)?;
    let ag_alg = fixed.to_algebra();
    let sag = match &ag_alg {
        Some(b) => Some(invariant_summary(b, d, budget).map(|mut s| {
            s.skew = is_skew_presentation(&fixed).is_some();
            s
        })?),
        None => None,
    };
    let verdict = match (&sag, g.is_trivial()) {
        (Some(s), false) => compare(&sa, s),
        _ => Verdict::NotDistinguished,
    };
    Ok(RigidityReport {
        a: sa,
        ag: sag,
        fixed,
        degree_bound: d,
        verdict,
    })
}

fn compare(a: &InvariantSummary, b: &InvariantSummary) -> Verdict {
    let show = |o: Option<_>| match o {
        Some(v) => format!("{v}"),
        None => "unknown".to_string(),
    };
    if a.unimodular != b.unimodular {
        return Verdict::Distinguished {
            witness: "unimodularity".into(),
            a: a.unimodular.to_string(),
            ag: b.unimodular.to_string(),
        };
    }
    if let (Some(x), Some(y)) = (a.components, b.components) {
        if x != y {
            return Verdict::Distinguished {
                witness: "derived-components".into(),
                a: x.to_string(),
                ag: y.to_string(),
            };
        }
    }
    if let (Some(x), Some(y)) = (a.center_in_derived, b.center_in_derived) {
        if x != y {
            return Verdict::Distinguished {
                witness: "center-in-derived".into(),
                a: show(Some(x)),
                ag: show(Some(y)),
            };
        }
    }
    Verdict::NotDistinguished
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Cyclo;
    use crate::families::{f_pq, homogenized_weyl, quantum_matrices};
    use crate::linalg::Matrix;
    use crate::solver::DEFAULT_BUDGET;
    use crate::symmetry::{group_closure, GradedMap};

    fn c(n: i64) -> Cyclo {
        Cyclo::from_int(n)
    }

    fn witness(v: &Verdict) -> &str {
        match v {
            Verdict::Distinguished { witness, .. } => witness,
            Verdict::NotDistinguished => "none",
        }
    }

    #[test]
    fn jacobian_fixed_ring_is_not_unimodular() {
        let a = f_pq(&c(0), &c(1)).unwrap();
        let g = group_closure(
            &[GradedMap::diagonal(&[Cyclo::zeta(3, 1), c(1), c(1)]).unwrap()],
            10,
        )
        .unwrap();
        let r = rigidity_report(&a, &g, None, DEFAULT_BUDGET).unwrap();
        assert_eq!(witness(&r.verdict), "unimodularity");
        assert!(r.a.unimodular && !r.ag.unwrap().unimodular);
    }

    #[test]
    fn homogenized_weyl_center() {
        let a = homogenized_weyl(1).unwrap();
        let g = group_closure(&[GradedMap::diagonal(&[c(1), c(1), c(-1)]).unwrap()], 10).unwrap();
        let r = rigidity_report(&a, &g, None, DEFAULT_BUDGET).unwrap();
        assert_eq!(witness(&r.verdict), "center-in-derived");
        assert_eq!(r.a.center_in_derived, Some(false));
    }

    #[test]
    fn quantum_matrices_components() {
        let a = quantum_matrices(2).unwrap();
        let mut m = Matrix::identity(4);
        m.set(1, 1, c(0));
        m.set(2, 2, c(0));
        m.set(2, 1, c(1));
        m.set(1, 2, c(1));
        let g = group_closure(&[GradedMap::new(m).unwrap()], 10).unwrap();
        let r = rigidity_report(&a, &g, None, DEFAULT_BUDGET).unwrap();
        assert_eq!(
            r.verdict,
            Verdict::Distinguished {
                witness: "derived-components".into(),
                a: "3".into(),
                ag: "2".into()
            }
        );
    }

    #[test]
    fn trivial_group() {
        let a = quantum_matrices(2).unwrap();
        let g = group_closure(&[GradedMap::identity(4)], 10).unwrap();
        assert_eq!(
            rigidity_report(&a, &g, None, DEFAULT_BUDGET)
                .unwrap()
                .verdict,
            Verdict::NotDistinguished
        );
    }
}
