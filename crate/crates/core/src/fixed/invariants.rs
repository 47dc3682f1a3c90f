use rayon::prelude::*;

use super::presented::{present, PresentedPoisson};
use crate::arith::{Cyclo, RationalSeries, UniPoly};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, SparseEchelon, SparseVec};
use crate::poisson::PoissonAlgebra;
use crate::poly::{monomials_of_degree, Mono, Poly};
use crate::symmetry::{
    classify, group_closure, molien_series, Classification, GradedMap, PoissonGroup,
};

/// Invariant ring of the cyclic group generated by a reflection g of
/// order m: k[y_1^m, y_2, ..., y_n] in an eigenbasis of g.
pub fn fixed_cyclic_reflection(
    a: &PoissonAlgebra,
    g: &GradedMap,
    budget: u32,
) -> Result<PresentedPoisson> {
    let Classification::Reflection {
        order, eigenbasis, ..
    } = classify(a, g)?
    else {
        return Err(Error::NotReflection);
    };
    let ys: Vec<Poly> = eigenbasis
        .iter()
        .map(|v| Poly::from_linear_form(v))
        .collect();
    let mut exprs = Vec::with_capacity(ys.len());
    let mut degrees = Vec::with_capacity(ys.len());
    exprs.push(ys[0].pow(order)?);
    degrees.push(order);
    for y in &ys[1..] {
        exprs.push(y.clone());
        degrees.push(1);
    }
    let bound = order.max(1);
    present(a, exprs, degrees, true, bound, budget)
}

/// Default truncation degree: max(4, 2 * exponent).
pub fn default_degree_bound(g: &PoissonGroup) -> u32 {
    (2 * g.exponent).max(4)
}

fn reynolds(group: &PoissonGroup, m: &Mono, n: usize) -> SparseVec<Mono> {
    let f = Poly::monomial(n, m.clone(), Cyclo::one());
    let mut acc = Poly::zero(n);
    for g in &group.elements {
        acc = &acc + &g.apply(&f);
    }
    acc.scale(&Cyclo::from_frac(1, group.order() as i64))
        .into_terms()
}

/// Tag exponent vectors of weighted degree k.
fn weighted_monomials(weights: &[u32], k: u32) -> Vec<Vec<u32>> {
    fn rec(w: &[u32], k: u32, i: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == w.len() {
            if k == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let mut e = 0;
        while e * w[i] <= k {
            cur.push(e);
            rec(w, k - e * w[i], i + 1, cur, out);
            cur.pop();
            e += 1;
        }
    }
    let mut out = Vec::new();
    rec(weights, k, 0, &mut Vec::new(), &mut out);
    out
}

fn evaluate(exprs: &[Poly], e: &[u32], n: usize) -> Result<Poly> {
    let mut acc = Poly::one(n);
    for (g, &k) in exprs.iter().zip(e) {
        if k > 0 {
            acc = &acc * &g.pow(k)?;
        }
    }
    Ok(acc)
}

/// Jacobian criterion: n polynomials in n variables are algebraically
/// independent iff their Jacobian determinant is nonzero.
fn algebraically_independent(exprs: &[Poly], n: usize) -> bool {
    if exprs.len() != n {
        return false;
    }
    let jac: Vec<Vec<Poly>> = exprs
        .iter()
        .map(|e| (0..n).map(|j| e.partial(j)).collect())
        .collect();
    // a nonzero value at some integer point proves independence
    (1..=4).any(|s| {
        let pt: Vec<Cyclo> = (0..n)
            .map(|i| Cyclo::from_int(((i as i64 + 2) * s * 7919) % 101 + 1))
            .collect();
        let rows = jac
            .iter()
            .map(|r| r.iter().map(|p| p.eval(&pt)).collect())
            .collect();
        Matrix::from_rows(rows)
            .and_then(|m| m.det())
            .map(|d| !d.is_zero())
            .unwrap_or(false)
    })
}

fn product_series(degrees: &[u32]) -> RationalSeries {
    let factors: Vec<UniPoly> = degrees
        .iter()
        .map(|&d| {
            let mut c = vec![Cyclo::zero(); d as usize + 1];
            c[0] = Cyclo::one();
            c[d as usize] = Cyclo::from_int(-1);
            UniPoly::new(c)
        })
        .collect();
    RationalSeries::inverse_product(&factors).expect("valid denominators")
}

/// Generators, relations and induced brackets of A^G.
///
/// Invariants come from Reynolds averaging degree by degree; in each degree
/// the invariants not spanned by products of earlier generators become new
/// generators. The result is certified complete when the generators are
/// algebraically independent and the Molien series equals
/// prod 1/(1 - t^{d_i}).
pub fn fixed_group(
    a: &PoissonAlgebra,
    group: &PoissonGroup,
    degree: Option<u32>,
    budget: u32,
) -> Result<PresentedPoisson> {
    let n = a.nvars();
    if group.nvars() != n {
        return Err(Error::Dimension(
            "group and algebra act on different variables".into(),
        ));
    }
    let d = degree.unwrap_or_else(|| default_degree_bound(group));
    let molien = molien_series(group)?;
    let expected = molien.taylor(d as usize);
    let mut exprs: Vec<Poly> = Vec::new();
    let mut degrees: Vec<u32> = Vec::new();
    for k in 1..=d {
        let monos = monomials_of_degree(n, k);
        let averaged: Vec<SparseVec<Mono>> =
            monos.par_iter().map(|m| reynolds(group, m, n)).collect();
        let mut inv: SparseEchelon<Mono> = SparseEchelon::new();
        for v in &averaged {
            inv.insert(v);
        }
        if Cyclo::from_int(inv.rank() as i64) != expected[k as usize] {
            return Err(Error::Input(format!(
                "invariant count in degree {k} disagrees with the Molien series"
            )));
        }
        let mut products: SparseEchelon<Mono> = SparseEchelon::new();
        for e in weighted_monomials(&degrees, k) {
            products.insert(&evaluate(&exprs, &e, n)?.term_map());
        }
        for v in inv.reduced_basis() {
            let r = products.reduce(&v);
            if r.is_empty() {
                continue;
            }
            let g = Poly::from_terms(n, r).monic();
            products.insert(&g.term_map());
            exprs.push(g);
            degrees.push(k);
        }
        // early stop; the certificate itself is checked below
        if algebraically_independent(&exprs, n) && molien == product_series(&degrees) {
            break;
        }
    }
    let mut presented = present(a, exprs, degrees.clone(), false, d, budget)?;
    presented.certified = presented.is_polynomial() && molien == product_series(&degrees);
    if presented.is_polynomial() && !presented.certified {
        // free generators whose Hilbert series misses the Molien series:
        // some generator lives above the bound
        return Err(Error::DegreeBoundTooSmall(d));
    }
    Ok(presented)
}

/// Convenience: close the generators into a group, then compute A^G.
pub fn fixed_ring_of(
    a: &PoissonAlgebra,
    gens: &[GradedMap],
    degree: Option<u32>,
    budget: u32,
) -> Result<PresentedPoisson> {
    let g = group_closure(gens, 10_000)?;
    fixed_group(a, &g, degree, budget)
}
