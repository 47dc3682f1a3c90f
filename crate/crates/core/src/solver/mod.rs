//! Groebner bases, ideal and subalgebra membership, and solution sets of
//! the polynomial systems that come up when hunting normal elements.

mod groebner;
mod solve;

pub use groebner::{groebner, leading_mono, normal_form, MonomialOrder};
pub use solve::{
    solve_affine, solve_affine_fixed, solve_projective, solve_projective_charts, AffinePiece,
    AffineSolution, SolutionSet,
};

use crate::error::Result;
use crate::poly::{Mono, Poly};

/// Default cap on the degree of S-polynomial lcms.
pub const DEFAULT_BUDGET: u32 = 24;

#[derive(Clone, Debug)]
pub struct Ideal {
    nvars: usize,
    gens: Vec<Poly>,
}

/// A reduced Groebner basis together with its order.
#[derive(Clone, Debug, PartialEq)]
pub struct GroebnerBasis {
    pub order: MonomialOrder,
    pub nvars: usize,
    pub polys: Vec<Poly>,
}

impl GroebnerBasis {
    pub fn reduce(&self, f: &Poly) -> Poly {
        normal_form(f, &self.polys, self.order)
    }

    pub fn contains(&self, f: &Poly) -> bool {
        self.reduce(f).is_zero()
    }

    /// True when the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].is_constant() && !self.polys[0].is_zero()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn leading_monos(&self) -> Vec<Mono> {
        self.polys
            .iter()
            .filter_map(|p| leading_mono(p, self.order))
            .collect()
    }
}

impl Ideal {
    pub fn new(nvars: usize, gens: Vec<Poly>) -> Self {
        Ideal {
            nvars,
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Poly] {
        &self.gens
    }

    pub fn groebner(&self, order: MonomialOrder, budget: u32) -> Result<GroebnerBasis> {
        let polys = groebner(&self.gens, self.nvars, order, budget)?;
        Ok(GroebnerBasis {
            order,
            nvars: self.nvars,
            polys,
        })
    }

    pub fn contains(&self, f: &Poly, budget: u32) -> Result<bool> {
        Ok(self.groebner(MonomialOrder::Grlex, budget)?.contains(f))
    }
}

/// Express `f` as a polynomial in `gens` (tag variable i standing for
/// gens[i]), or `None` when f is outside the generated subalgebra.
pub fn subalgebra_member(f: &Poly, gens: &[Poly], budget: u32) -> Result<Option<Poly>> {
    let n = f.nvars();
    let r = gens.len();
    let total = n + r;
    let ideal: Vec<Poly> = gens
        .iter()
        .enumerate()
        .map(|(i, g)| &Poly::var(total, n + i) - &g.embed(total, 0))
        .collect();
    let ord = MonomialOrder::Elim(n);
    let gb = groebner(&ideal, total, ord, budget)?;
    let nf = normal_form(&f.embed(total, 0), &gb, ord);
    if nf.terms().any(|(m, _)| m.0[..n].iter().any(|&e| e > 0)) {
        return Ok(None);
    }
    let map: Vec<usize> = (0..total).map(|i| i.saturating_sub(n)).collect();
    Ok(Some(nf.remap(r, &map)))
}
