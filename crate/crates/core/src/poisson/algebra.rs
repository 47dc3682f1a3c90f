use crate::arith::Cyclo;
use crate::error::{Error, Result};
use crate::poly::{Poly, PolyRing};

/// A polynomial ring with a Poisson bracket given on generators.
#[derive(Clone, Debug, PartialEq)]
pub struct PoissonAlgebra {
    ring: PolyRing,
    /// Full antisymmetric table, table[i][j] = {x_i, x_j}.
    table: Vec<Vec<Poly>>,
    quadratic: bool,
    bracket_degree: Option<u64>,
}

/// Outcome of a Jacobi check: the first failing generator triple, if any.
#[derive(Clone, Debug, PartialEq)]
pub struct JacobiReport {
    pub holds: bool,
    pub failing: Option<(usize, usize, usize)>,
    pub cyclic_sum: Option<Poly>,
}

impl PoissonAlgebra {
    /// Build from brackets {x_i, x_j} for some pairs (i != j); unlisted
    /// pairs are zero. Jacobi is verified unless `defer_jacobi`.
    pub fn new(
        ring: PolyRing,
        entries: Vec<((usize, usize), Poly)>,
        defer_jacobi: bool,
    ) -> Result<Self> {
        let n = ring.nvars();
        let mut table = vec![vec![Poly::zero(n); n]; n];
        for ((i, j), p) in entries {
            if i >= n || j >= n {
                return Err(Error::Dimension(format!(
                    "bracket index ({i}, {j}) out of range"
                )));
            }
            if p.nvars() != n {
                return Err(Error::Dimension(
                    "bracket entry lives in another ring".into(),
                ));
            }
            if i == j {
                if !p.is_zero() {
                    return Err(Error::Input(format!(
                        "{{{0}, {0}}} must be zero",
                        ring.name(i)
                    )));
                }
                continue;
            }
            table[j][i] = -&p;
            table[i][j] = p;
        }
        Self::from_table(ring, table, defer_jacobi)
    }

    pub fn from_table(ring: PolyRing, table: Vec<Vec<Poly>>, defer_jacobi: bool) -> Result<Self> {
        let n = ring.nvars();
        for i in 0..n {
            for j in 0..n {
                if table[i][j] != -&table[j][i] {
                    return Err(Error::Input("bracket table is not antisymmetric".into()));
                }
            }
        }
        let mut degs: Vec<u64> = Vec::new();
        let mut homogeneous = true;
        for i in 0..n {
            for j in i + 1..n {
                let p = &table[i][j];
                if p.is_zero() {
                    continue;
                }
                if !p.is_homogeneous() {
                    homogeneous = false;
                }
                degs.push(p.total_degree().unwrap());
            }
        }
        degs.sort_unstable();
        degs.dedup();
        let bracket_degree = match (homogeneous, degs.as_slice()) {
            (true, [d]) => Some(*d),
            _ => None,
        };
        let quadratic = homogeneous && degs.iter().all(|&d| d == 2);
        let a = PoissonAlgebra {
            ring,
            table,
            quadratic,
            bracket_degree,
        };
        if !defer_jacobi {
            let j = a.jacobi_check();
            if let Some((i, k, l)) = j.failing {
                let nm = |x: usize| a.ring.name(x).to_string();
                return Err(Error::JacobiFails(nm(i), nm(k), nm(l)));
            }
        }
        Ok(a)
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    /// True when every {x_i, x_j} is homogeneous of degree 2 (or zero).
    pub fn is_quadratic(&self) -> bool {
        self.quadratic
    }

    /// The common degree of the nonzero generator brackets, if there is one.
    pub fn bracket_degree(&self) -> Option<u64> {
        self.bracket_degree
    }

    pub fn table(&self) -> &[Vec<Poly>] {
        &self.table
    }

    /// {x_i, x_j}
    pub fn entry(&self, i: usize, j: usize) -> &Poly {
        &self.table[i][j]
    }

    pub fn is_zero_bracket(&self) -> bool {
        self.table.iter().flatten().all(Poly::is_zero)
    }

    /// Same algebra, different variable names or aliases.
    pub fn with_ring(&self, ring: PolyRing) -> Result<Self> {
        if ring.nvars() != self.nvars() {
            return Err(Error::Dimension(
                "renaming must keep the number of variables".into(),
            ));
        }
        Ok(PoissonAlgebra {
            ring,
            ..self.clone()
        })
    }

    pub fn require_quadratic(&self) -> Result<()> {
        if self.quadratic {
            Ok(())
        } else {
            Err(Error::NotQuadratic)
        }
    }

    /// {f, g} = sum_{i<j} P_ij (d_i f d_j g - d_j f d_i g)
    pub fn bracket(&self, f: &Poly, g: &Poly) -> Poly {
        let n = self.nvars();
        let df: Vec<Poly> = (0..n).map(|i| f.partial(i)).collect();
        let dg: Vec<Poly> = (0..n).map(|i| g.partial(i)).collect();
        let mut out = Poly::zero(n);
        for i in 0..n {
            if df[i].is_zero() && dg[i].is_zero() {
                continue;
            }
            for j in i + 1..n {
                let p = &self.table[i][j];
                if p.is_zero() {
                    continue;
                }
                let cross = &(&df[i] * &dg[j]) - &(&df[j] * &dg[i]);
                if !cross.is_zero() {
                    out = &out + &(&cross * p);
                }
            }
        }
        out
    }

    /// {x_i, g}
    pub fn bracket_var(&self, i: usize, g: &Poly) -> Poly {
        let n = self.nvars();
        let mut out = Poly::zero(n);
        for j in 0..n {
            let d = g.partial(j);
            if !d.is_zero() && !self.table[i][j].is_zero() {
                out = &out + &(&d * &self.table[i][j]);
            }
        }
        out
    }

    pub fn jacobi_check(&self) -> JacobiReport {
        let n = self.nvars();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let s = &(&self.bracket_var(i, &self.table[j][k])
                        + &self.bracket_var(j, &self.table[k][i]))
                        + &self.bracket_var(k, &self.table[i][j]);
                    if !s.is_zero() {
                        return JacobiReport {
                            holds: false,
                            failing: Some((i, j, k)),
                            cyclic_sum: Some(s),
                        };
                    }
                }
            }
        }
        JacobiReport {
            holds: true,
            failing: None,
            cyclic_sum: None,
        }
    }

    pub fn parse(&self, src: &str) -> Result<Poly> {
        self.ring.parse(src)
    }

    pub fn fmt(&self, p: &Poly) -> String {
        self.ring.fmt(p)
    }

    pub fn var(&self, i: usize) -> Poly {
        Poly::var(self.nvars(), i)
    }

    /// Scale every bracket by `c` (still Poisson).
    pub fn scaled(&self, c: &Cyclo) -> Self {
        let table = self
            .table
            .iter()
            .map(|row| row.iter().map(|p| p.scale(c)).collect())
            .collect();
        PoissonAlgebra {
            table,
            ..self.clone()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xyz() -> PolyRing {
        PolyRing::new(["x", "y", "z"]).unwrap()
    }

    #[test]
    fn leibniz_example() {
        let r = PolyRing::new(["x", "y"]).unwrap();
        let a = PoissonAlgebra::new(r.clone(), vec![((0, 1), r.parse("3*x*y").unwrap())], false)
            .unwrap();
        let b = a.bracket(&r.parse("x^2").unwrap(), &r.parse("y").unwrap());
        assert_eq!(b, r.parse("6*x^2*y").unwrap());
        assert!(a.is_quadratic());
        assert_eq!(a.bracket_degree(), Some(2));
    }

    #[test]
    fn jacobi_failure_is_located() {
        let r = xyz();
        let entries = vec![
            ((0, 1), r.parse("x^2").unwrap()),
            ((2, 0), r.parse("z^2").unwrap()),
        ];
        let a = PoissonAlgebra::new(r.clone(), entries.clone(), true).unwrap();
        let j = a.jacobi_check();
        assert!(!j.holds);
        assert_eq!(j.failing, Some((0, 1, 2)));
        assert_eq!(j.cyclic_sum.unwrap(), r.parse("2*x*z^2").unwrap());
        assert_eq!(
            PoissonAlgebra::new(r, entries, false),
            Err(Error::JacobiFails("x".into(), "y".into(), "z".into()))
        );
    }
}
