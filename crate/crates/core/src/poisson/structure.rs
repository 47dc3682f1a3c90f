use std::collections::BTreeMap;

use super::{PoissonAlgebra, PoissonDerivation};
use crate::arith::Cyclo;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, SparseEchelon};
use crate::poly::{monomials_of_degree, Mono, Poly};
use crate::solver::{groebner, MonomialOrder};

/// phi(x_i) = sum_j d{x_i, x_j}/dx_j
pub fn modular_derivation(a: &PoissonAlgebra) -> PoissonDerivation {
    let n = a.nvars();
    let images = (0..n)
        .map(|i| {
            let mut acc = Poly::zero(n);
            for j in 0..n {
                acc = &acc + &a.entry(i, j).partial(j);
            }
            acc
        })
        .collect();
    PoissonDerivation { images }
}

pub fn is_unimodular(a: &PoissonAlgebra) -> bool {
    modular_derivation(a).is_zero()
}

/// For each degree k <= d, a basis of the Poisson-central forms of degree k.
pub fn center_truncated(a: &PoissonAlgebra, d: u32) -> Vec<Vec<Poly>> {
    let n = a.nvars();
    (0..=d)
        .map(|k| {
            let monos = monomials_of_degree(n, k);
            // rows indexed by (generator j, result monomial)
            let mut row_index: BTreeMap<(usize, Mono), usize> = BTreeMap::new();
            let mut cols: Vec<Vec<(usize, Cyclo)>> = Vec::with_capacity(monos.len());
            for m in &monos {
                let f = Poly::monomial(n, m.clone(), Cyclo::one());
                let mut col = Vec::new();
                for j in 0..n {
                    let b = a.bracket_var(j, &f);
                    for (bm, c) in b.terms() {
                        let next = row_index.len();
                        let r = *row_index.entry((j, bm.clone())).or_insert(next);
                        col.push((r, c.clone()));
                    }
                }
                cols.push(col);
            }
            let rows = row_index.len().max(1);
            let mut mat = Matrix::zeros(rows, monos.len());
            for (ci, col) in cols.iter().enumerate() {
                for (r, c) in col {
                    mat.set(*r, ci, -c);
                }
            }
            mat.kernel()
                .into_iter()
                .map(|v| Poly::from_terms(n, monos.iter().cloned().zip(v)))
                .map(|p| p.monic())
                .collect()
        })
        .collect()
}

/// The ideal generated by all brackets, truncated at degree d.
#[derive(Clone, Debug)]
pub struct DerivedIdeal {
    /// Nonzero generator brackets {x_i, x_j}, i < j.
    pub generators: Vec<Poly>,
    /// Reduced grlex Groebner basis.
    pub groebner: Vec<Poly>,
    /// Number of monomials of each degree k <= d that are leading
    /// monomials of ideal elements, i.e. dim I_k for graded ideals.
    pub dims: Vec<usize>,
    /// Degree-wise bases, for homogeneous ideals only.
    pub bases: Option<Vec<Vec<Poly>>>,
    /// Minimal primes as variable sets, when the ideal is monomial.
    pub components: Option<Vec<Vec<usize>>>,
}

pub fn derived_ideal_truncated(a: &PoissonAlgebra, d: u32, budget: u32) -> Result<DerivedIdeal> {
    let n = a.nvars();
    let mut gens = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if !a.entry(i, j).is_zero() {
                gens.push(a.entry(i, j).clone());
            }
        }
    }
    let gb = groebner(&gens, n, MonomialOrder::Grlex, budget)?;
    let leads: Vec<Mono> = gb
        .iter()
        .filter_map(|p| p.leading().map(|(m, _)| m.clone()))
        .collect();
    let dims = (0..=d)
        .map(|k| {
            monomials_of_degree(n, k)
                .iter()
                .filter(|m| leads.iter().any(|l| l.divides(m)))
                .count()
        })
        .collect();
    let homogeneous = gens.iter().all(Poly::is_homogeneous);
    let bases = homogeneous.then(|| {
        (0..=d)
            .map(|k| {
                let mut ech: SparseEchelon<Mono> = SparseEchelon::new();
                for g in &gens {
                    let gd = g.total_degree().unwrap() as u32;
                    if gd > k {
                        continue;
                    }
                    for m in monomials_of_degree(n, k - gd) {
                        let p = g.mul_term(&m, &Cyclo::one());
                        ech.insert(p.term_map());
                    }
                }
                ech.reduced_basis()
                    .into_iter()
                    .map(|v| Poly::from_terms(n, v))
                    .collect()
            })
            .collect()
    });
    let components = monomial_components(&gb, n).ok();
    Ok(DerivedIdeal {
        generators: gens,
        groebner: gb,
        dims,
        bases,
        components,
    })
}

/// Minimal primes (x_s : s in S) of a monomial ideal given by a reduced
/// Groebner basis, as sorted variable sets S.
pub fn monomial_components(gb: &[Poly], n: usize) -> Result<Vec<Vec<usize>>> {
    if gb.iter().any(|p| p.len() != 1) {
        return Err(Error::NotMonomial);
    }
    if gb.is_empty() {
        return Ok(vec![vec![]]);
    }
    if gb.iter().any(Poly::is_constant) {
        return Ok(vec![]);
    }
    if n > 24 {
        return Err(Error::CapExceeded(n as u32, 24));
    }
    let supports: Vec<u32> = gb
        .iter()
        .map(|p| {
            let (m, _) = p.leading().unwrap();
            m.0.iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .fold(0u32, |acc, (i, _)| acc | (1 << i))
        })
        .collect();
    let mut covers: Vec<u32> = Vec::new();
    let mut masks: Vec<u32> = (0..(1u32 << n)).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    for s in masks {
        if supports.iter().all(|&sup| sup & s != 0) && !covers.iter().any(|&c| c & s == c) {
            covers.push(s);
        }
    }
    Ok(covers
        .into_iter()
        .map(|c| (0..n).filter(|&i| c & (1 << i) != 0).collect())
        .collect())
}

/// Derived-ideal components after the linear change of coordinates `g`
/// (column convention), for ideals that only become monomial there.
pub fn derived_components_in(
    a: &PoissonAlgebra,
    g: &Matrix,
    budget: u32,
) -> Result<Vec<Vec<usize>>> {
    let n = a.nvars();
    let mut gens = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if !a.entry(i, j).is_zero() {
                gens.push(a.entry(i, j).apply_linear(g)?);
            }
        }
    }
    let gb = groebner(&gens, n, MonomialOrder::Grlex, budget)?;
    monomial_components(&gb, n)
}
