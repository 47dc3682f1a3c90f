use super::PoissonAlgebra;
use crate::arith::Cyclo;
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::solver::{solve_projective_charts, SolutionSet};

/// A derivation given by its values on the generators.
#[derive(Clone, Debug, PartialEq)]
pub struct PoissonDerivation {
    pub images: Vec<Poly>,
}

impl PoissonDerivation {
    pub fn apply(&self, f: &Poly) -> Poly {
        let mut out = Poly::zero(f.nvars());
        for (i, im) in self.images.iter().enumerate() {
            let d = f.partial(i);
            if !d.is_zero() && !im.is_zero() {
                out = &out + &(&d * im);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(Poly::is_zero)
    }

    /// Checks alpha({x_i, x_j}) = {alpha(x_i), x_j} + {x_i, alpha(x_j)} on
    /// all generator pairs.
    pub fn is_poisson_derivation(&self, a: &PoissonAlgebra) -> bool {
        let n = a.nvars();
        (0..n).all(|i| {
            (i + 1..n).all(|j| {
                let lhs = self.apply(a.entry(i, j));
                let rhs =
                    &a.bracket(&self.images[i], &a.var(j)) + &a.bracket(&a.var(i), &self.images[j]);
                lhs == rhs
            })
        })
    }
}

/// If `u` is Poisson normal, the derivation pi_u with {u, a} = pi_u(a) u.
pub fn normal_check(a: &PoissonAlgebra, u: &Poly) -> Result<Option<PoissonDerivation>> {
    if u.is_zero() {
        return Err(Error::ZeroElement);
    }
    let mut images = Vec::with_capacity(a.nvars());
    for j in 0..a.nvars() {
        let b = a.bracket(u, &a.var(j));
        match Poly::divides(u, &b)? {
            Some(q) => images.push(q),
            None => return Ok(None),
        }
    }
    Ok(Some(PoissonDerivation { images }))
}

/// Degree-one Poisson normal elements up to scalars.
///
/// In the chart where the first nonzero coefficient of u is the k-th,
/// u = x_k + sum_{i>k} mu_i x_i, and u divides {u, x_j} exactly when the
/// bracket vanishes after substituting x_k = -sum_{i>k} mu_i x_i. Taking
/// coefficients in x gives equations in mu alone: the cofactors never
/// enter the system.
pub fn normal_find_deg1(a: &PoissonAlgebra, budget: u32) -> Result<SolutionSet> {
    a.require_quadratic()?;
    let n = a.nvars();
    let total = 2 * n;
    let xs: Vec<usize> = (0..n).collect();
    solve_projective_charts(n, budget, |k| {
        // mu_i sits at index n + i in the combined ring
        let mu = |i: usize| Poly::var(total, n + i);
        let mut images: Vec<Poly> = (0..n).map(|i| Poly::var(total, i)).collect();
        let mut sub = Poly::zero(total);
        for i in k + 1..n {
            sub = &sub - &(&mu(i) * &Poly::var(total, i));
        }
        images[k] = sub;
        let mut eqs = Vec::new();
        for j in 0..n {
            let mut f = a.entry(k, j).embed(total, 0);
            for i in k + 1..n {
                let p = a.entry(i, j);
                if !p.is_zero() {
                    f = &f + &(&p.embed(total, 0) * &mu(i));
                }
            }
            if f.is_zero() {
                continue;
            }
            let mut all_images = images.clone();
            all_images.extend((0..n).map(mu));
            let g = f.substitute(&all_images);
            for (_, c) in g.coefficients_in(&xs) {
                let map: Vec<usize> = (0..total).map(|v| if v >= n { v - n } else { 0 }).collect();
                eqs.push(c.remap(n, &map));
            }
        }
        Ok(eqs)
    })
}

/// Normalize a linear form so that its first nonzero coordinate is 1.
pub fn normalize_form(v: &[Cyclo]) -> Vec<Cyclo> {
    match v.iter().find(|c| !c.is_zero()) {
        None => v.to_vec(),
        Some(c) => {
            let inv = c.inv().expect("nonzero");
            v.iter().map(|x| x * &inv).collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::PolyRing;

    #[test]
    fn skew_generator_is_normal() {
        let r = PolyRing::new(["x", "y"]).unwrap();
        let a = PoissonAlgebra::new(r.clone(), vec![((0, 1), r.parse("5*x*y").unwrap())], false)
            .unwrap();
        let pi = normal_check(&a, &r.parse("x").unwrap()).unwrap().unwrap();
        assert!(pi.images[0].is_zero());
        assert_eq!(pi.images[1], r.parse("5*y").unwrap());
        assert!(pi.is_poisson_derivation(&a));
        assert_eq!(normal_check(&a, &Poly::zero(2)), Err(Error::ZeroElement));
    }

    #[test]
    fn deg1_normals_of_skew_plane() {
        let r = PolyRing::new(["x", "y"]).unwrap();
        let a =
            PoissonAlgebra::new(r.clone(), vec![((0, 1), r.parse("x*y").unwrap())], false).unwrap();
        let s = normal_find_deg1(&a, 24).unwrap();
        let SolutionSet::FinitePoints(p) = s else {
            panic!("{s:?}")
        };
        assert_eq!(p.len(), 2);
    }
}
