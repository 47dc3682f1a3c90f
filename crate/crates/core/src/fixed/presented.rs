use crate::arith::Cyclo;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::poisson::PoissonAlgebra;
use crate::poly::{Mono, Poly, PolyRing};
use crate::solver::{groebner, normal_form, MonomialOrder};

/// A Poisson subalgebra given by generators inside an ambient algebra.
#[derive(Clone, Debug)]
pub struct PresentedPoisson {
    /// Ring on the generator names.
    pub ring: PolyRing,
    pub degrees: Vec<u32>,
    /// Each generator as a polynomial of the ambient algebra.
    pub expressions: Vec<Poly>,
    /// Reduced Groebner basis of the relations among the generators.
    pub relations: Vec<Poly>,
    /// brackets[i][j] = {u_i, u_j} written in the generators.
    pub brackets: Vec<Vec<Poly>>,
    /// True when the generators provably span the whole invariant ring.
    pub certified: bool,
    pub degree_bound: u32,
}

impl PresentedPoisson {
    pub fn ngens(&self) -> usize {
        self.expressions.len()
    }

    pub fn is_polynomial(&self) -> bool {
        self.relations.is_empty()
    }

    /// The presentation as a Poisson algebra on its generators, when there
    /// are no relations.
    pub fn to_algebra(&self) -> Option<PoissonAlgebra> {
        if !self.is_polynomial() {
            return None;
        }
        PoissonAlgebra::from_table(self.ring.clone(), self.brackets.clone(), false).ok()
    }

    /// Evaluating each generator bracket inside the ambient algebra gives
    /// back the ambient bracket of the expressions.
    pub fn is_consistent(&self, a: &PoissonAlgebra) -> bool {
        let k = self.ngens();
        (0..k).all(|i| {
            (i + 1..k).all(|j| {
                self.brackets[i][j].substitute(&self.expressions)
                    == a.bracket(&self.expressions[i], &self.expressions[j])
            })
        })
    }

    pub fn fmt(&self, p: &Poly) -> String {
        self.ring.fmt(p)
    }
}

/// Names for generators: a plain variable keeps its name, a power x^k
/// becomes `xk` (or `x_k` after a trailing digit), anything else `u<i>`.
pub(crate) fn generator_names(ambient: &PolyRing, exprs: &[Poly]) -> Vec<String> {
    let mut names: Vec<String> = exprs
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let fallback = format!("u{}", i + 1);
            if e.len() != 1 {
                return fallback;
            }
            let (m, c) = e.terms().next().unwrap();
            let vars: Vec<usize> = (0..m.0.len()).filter(|&v| m.0[v] > 0).collect();
            if !c.is_one() || vars.len() != 1 {
                return fallback;
            }
            let name = ambient.name(vars[0]);
            match m.0[vars[0]] {
                1 => name.to_string(),
                k if name.ends_with(|ch: char| ch.is_ascii_digit()) => format!("{name}_{k}"),
                k => format!("{name}{k}"),
            }
        })
        .collect();
    let mut seen = std::collections::HashSet::new();
    for (i, n) in names.iter_mut().enumerate() {
        if !seen.insert(n.clone()) {
            *n = format!("u{}", i + 1);
            while !seen.insert(n.clone()) {
                n.push('_');
            }
        }
    }
    names
}

/// Relations and induced brackets for generators `exprs` of a Poisson
/// subalgebra of `a`.
pub(crate) fn present(
    a: &PoissonAlgebra,
    exprs: Vec<Poly>,
    degrees: Vec<u32>,
    certified: bool,
    degree_bound: u32,
    budget: u32,
) -> Result<PresentedPoisson> {
    let n = a.nvars();
    let k = exprs.len();
    let total = n + k;
    let ideal: Vec<Poly> = exprs
        .iter()
        .enumerate()
        .map(|(i, g)| &Poly::var(total, n + i) - &g.embed(total, 0))
        .collect();
    let ord = MonomialOrder::Elim(n);
    let gb = groebner(&ideal, total, ord, budget)?;
    let to_tags = |p: &Poly| {
        let map: Vec<usize> = (0..total).map(|i| i.saturating_sub(n)).collect();
        p.remap(k, &map)
    };
    let involves_x = |p: &Poly| p.terms().any(|(m, _)| m.0[..n].iter().any(|&e| e > 0));
    let relations: Vec<Poly> = gb
        .iter()
        .filter(|p| !involves_x(p))
        .map(|p| to_tags(p))
        .collect();
    let ring = PolyRing::new(generator_names(a.ring(), &exprs))?;
    let mut brackets = vec![vec![Poly::zero(k); k]; k];
    for i in 0..k {
        for j in i + 1..k {
            let b = a.bracket(&exprs[i], &exprs[j]);
            let nf = normal_form(&b.embed(total, 0), &gb, ord);
            if involves_x(&nf) {
                return Err(Error::InducedBracketNotClosed(format!(
                    "{{{}, {}}} = {}",
                    ring.name(i),
                    ring.name(j),
                    a.fmt(&b)
                )));
            }
            let t = to_tags(&nf);
            brackets[j][i] = -&t;
            brackets[i][j] = t;
        }
    }
    Ok(PresentedPoisson {
        ring,
        degrees,
        expressions: exprs,
        relations,
        brackets,
        certified,
        degree_bound,
    })
}

/// The matrix q when every bracket is {u_i, u_j} = q_ij u_i u_j.
pub fn is_skew_presentation(p: &PresentedPoisson) -> Option<Matrix> {
    if !p.is_polynomial() {
        return None;
    }
    let k = p.ngens();
    let mut q = Matrix::zeros(k, k);
    for i in 0..k {
        for j in i + 1..k {
            let b = &p.brackets[i][j];
            if b.is_zero() {
                continue;
            }
            let mut m = Mono::one(k);
            m.0[i] += 1;
            m.0[j] += 1;
            let c: Cyclo = b.coeff(&m);
            if b.len() != 1 || c.is_zero() {
                return None;
            }
            q.set(i, j, c.clone());
            q.set(j, i, -&c);
        }
    }
    Some(q)
}

/// Relations and induced brackets of the subalgebra generated by `exprs`,
/// which must be closed under the bracket. Generators are graded by total
/// degree.
pub fn present_subalgebra(
    a: &PoissonAlgebra,
    exprs: Vec<Poly>,
    budget: u32,
) -> Result<PresentedPoisson> {
    let degrees = exprs
        .iter()
        .map(|e| e.total_degree().unwrap_or(0) as u32)
        .collect();
    let bound = exprs
        .iter()
        .filter_map(Poly::total_degree)
        .max()
        .unwrap_or(0) as u32;
    present(a, exprs, degrees, false, bound, budget)
}
