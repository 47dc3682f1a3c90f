use super::{normal_check, PoissonAlgebra, PoissonDerivation};
use crate::arith::Cyclo;
use crate::error::{Error, Result};
use crate::poly::{LinearForm, Poly, PolyRing};

/// A = C[u; alpha]: a normal degree-one element u, a complement spanning
/// a Poisson subalgebra C, and the derivation alpha with {u, c} = alpha(c) u.
#[derive(Clone, Debug)]
pub struct OreSplit {
    pub normal_var: LinearForm,
    pub complement: Vec<LinearForm>,
    pub base: PoissonAlgebra,
    pub alpha: PoissonDerivation,
}

/// Coordinates (u, c_1, ..., c_{n-1}) where the c's are the original
/// variables other than the pivot of u. Returns images of the original
/// variables in the new ring, u being variable 0.
fn new_coordinates(u: &[Cyclo]) -> (usize, Vec<usize>, Vec<Poly>) {
    let n = u.len();
    let k = u.iter().position(|c| !c.is_zero()).expect("nonzero form");
    let others: Vec<usize> = (0..n).filter(|&j| j != k).collect();
    let inv = u[k].inv().expect("nonzero pivot");
    let mut images = vec![Poly::zero(n); n];
    for (pos, &j) in others.iter().enumerate() {
        images[j] = Poly::var(n, pos + 1);
    }
    let mut xk = Poly::var(n, 0);
    for (pos, &j) in others.iter().enumerate() {
        xk.add_term(crate::poly::Mono::var(n, pos + 1), &-&u[j]);
    }
    images[k] = xk.scale(&inv);
    (k, others, images)
}

pub fn ore_split(a: &PoissonAlgebra, u: &[Cyclo]) -> Result<OreSplit> {
    let n = a.nvars();
    if u.len() != n {
        return Err(Error::Dimension("normal form has the wrong length".into()));
    }
    let up = Poly::from_linear_form(u);
    if up.is_zero() {
        return Err(Error::ZeroElement);
    }
    if normal_check(a, &up)?.is_none() {
        return Err(Error::NotNormal);
    }
    let (_, others, images) = new_coordinates(u);
    let in_new = |p: &Poly| p.substitute(&images);
    let depends_on_u = |p: &Poly| p.terms().any(|(m, _)| m.0[0] > 0);
    let drop_u = |p: &Poly| {
        let map: Vec<usize> = (0..n).map(|i| i.saturating_sub(1)).collect();
        p.remap(n - 1, &map)
    };
    let names: Vec<String> = others
        .iter()
        .map(|&j| a.ring().name(j).to_string())
        .collect();
    let base_ring = PolyRing::new(&names)?;
    let mut entries = Vec::new();
    for (pa, &ja) in others.iter().enumerate() {
        for (pb, &jb) in others.iter().enumerate().skip(pa + 1) {
            let b = in_new(a.entry(ja, jb));
            if depends_on_u(&b) {
                return Err(Error::NotSplittable(format!(
                    "{{{}, {}}} = {}",
                    a.ring().name(ja),
                    a.ring().name(jb),
                    a.fmt(a.entry(ja, jb))
                )));
            }
            entries.push(((pa, pb), drop_u(&b)));
        }
    }
    let mut alpha = Vec::new();
    for &j in &others {
        let b = a.bracket(&up, &a.var(j));
        let q = Poly::divides(&up, &b)?.expect("u is normal");
        let qn = in_new(&q);
        if depends_on_u(&qn) {
            return Err(Error::NotSplittable(format!(
                "{{u, {}}} = {}",
                a.ring().name(j),
                a.fmt(&b)
            )));
        }
        alpha.push(drop_u(&qn));
    }
    let base = PoissonAlgebra::new(base_ring, entries, false)?;
    let complement = others
        .iter()
        .map(|&j| {
            let mut v = vec![Cyclo::zero(); n];
            v[j] = Cyclo::one();
            v
        })
        .collect();
    Ok(OreSplit {
        normal_var: u.to_vec(),
        complement,
        base,
        alpha: PoissonDerivation { images: alpha },
    })
}

impl OreSplit {
    /// Rebuild the bracket on the original generators from (C, alpha, u)
    /// and compare with `a`.
    pub fn reconstructs(&self, a: &PoissonAlgebra) -> bool {
        let n = a.nvars();
        let (_, _, images) = new_coordinates(&self.normal_var);
        // bracket on the new coordinates (u, c_1, ...)
        let lift = |p: &Poly| p.embed(n, 1);
        let mut entries = Vec::new();
        for i in 0..n - 1 {
            let t = Poly::var(n, 0);
            entries.push(((0, i + 1), &lift(&self.alpha.images[i]) * &t));
            for j in i + 1..n - 1 {
                entries.push(((i + 1, j + 1), lift(self.base.entry(i, j))));
            }
        }
        let mut names = vec!["u_".to_string()];
        names.extend(self.base.ring().names().iter().cloned());
        let Ok(ring) = PolyRing::new(&names) else {
            return false;
        };
        let Ok(b) = PoissonAlgebra::new(ring, entries, true) else {
            return false;
        };
        let back: Vec<Poly> = std::iter::once(Poly::from_linear_form(&self.normal_var))
            .chain(self.complement.iter().map(|c| Poly::from_linear_form(c)))
            .collect();
        (0..n).all(|i| {
            (i + 1..n).all(|j| {
                let br = b.bracket(&images[i], &images[j]).substitute(&back);
                br == *a.entry(i, j)
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn skew_plane_splits() {
        let r = PolyRing::new(["x", "y"]).unwrap();
        let a = PoissonAlgebra::new(r.clone(), vec![((0, 1), r.parse("2*x*y").unwrap())], false)
            .unwrap();
        let s = ore_split(&a, &[Cyclo::one(), Cyclo::zero()]).unwrap();
        let y = PolyRing::new(["y"]).unwrap();
        assert_eq!(s.alpha.images, vec![y.parse("2*y").unwrap()]);
        assert!(s.reconstructs(&a));
        assert_eq!(
            ore_split(&a, &[Cyclo::one(), Cyclo::one()]).unwrap_err(),
            Error::NotNormal
        );
    }
}
