//! Constructors for the standard Poisson families.

use crate::arith::Cyclo;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::poisson::PoissonAlgebra;
use crate::poly::{Mono, Poly, PolyRing};
use crate::solver::{solve_projective, Ideal, SolutionSet};

/// {x_i, x_j} = q_ij x_i x_j
pub fn skew_symmetric(q: &Matrix) -> Result<PoissonAlgebra> {
    let n = q.rows();
    let names: Vec<String> = if n <= 3 {
        ["x", "y", "z"][..n].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=n).map(|i| format!("x{i}")).collect()
    };
    skew_symmetric_in(PolyRing::new(names)?, q)
}

pub fn skew_symmetric_in(ring: PolyRing, q: &Matrix) -> Result<PoissonAlgebra> {
    let n = ring.nvars();
    if !q.is_square() || q.rows() != n {
        return Err(Error::Dimension(format!("expected a {n}x{n} matrix")));
    }
    for i in 0..n {
        for j in 0..n {
            if *q.get(i, j) != -q.get(j, i) {
                return Err(Error::NotSkew);
            }
        }
    }
    let mut entries = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut m = Mono::one(n);
            m.0[i] += 1;
            m.0[j] += 1;
            entries.push(((i, j), Poly::monomial(n, m, q.get(i, j).clone())));
        }
    }
    // Jacobi is automatic for diagonal brackets
    PoissonAlgebra::new(ring, entries, true)
}

/// Jacobian bracket {x,y} = f_z, {y,z} = f_x, {z,x} = f_y on C[x,y,z].
pub fn jacobian(f: &Poly) -> Result<PoissonAlgebra> {
    jacobian_in(PolyRing::new(["x", "y", "z"])?, f)
}

pub fn jacobian_in(ring: PolyRing, f: &Poly) -> Result<PoissonAlgebra> {
    if ring.nvars() != 3 || f.nvars() != 3 {
        return Err(Error::Dimension(
            "a Jacobian bracket needs three variables".into(),
        ));
    }
    if f.is_zero() {
        return Err(Error::ZeroPotential);
    }
    let entries = vec![
        ((0, 1), f.partial(2)),
        ((1, 2), f.partial(0)),
        ((2, 0), f.partial(1)),
    ];
    PoissonAlgebra::new(ring, entries, false)
}

/// The potential p/3 (x^3 + y^3 + z^3) + q xyz.
pub fn potential_pq(p: &Cyclo, q: &Cyclo) -> Poly {
    let third = p * &Cyclo::from_frac(1, 3);
    let mut f = Poly::zero(3);
    for i in 0..3 {
        let mut m = Mono::one(3);
        m.0[i] = 3;
        f.add_term(m, &third);
    }
    f.add_term(Mono(vec![1, 1, 1]), q);
    f
}

pub fn f_pq(p: &Cyclo, q: &Cyclo) -> Result<PoissonAlgebra> {
    jacobian(&potential_pq(p, q))
}

/// Name of the (i, j) entry of an n x n matrix of variables, 0-based input.
pub fn matrix_var(i: usize, j: usize) -> String {
    format!("x_{}_{}", i + 1, j + 1)
}

/// Semiclassical limit of quantum matrices on variables x_i_j.
///
/// For i < j and l < m:
/// {x_il, x_im} = x_il x_im, {x_il, x_jl} = x_il x_jl,
/// {x_im, x_jl} = 0, {x_il, x_jm} = 2 x_im x_jl.
pub fn quantum_matrices(n: usize) -> Result<PoissonAlgebra> {
    if n < 2 {
        return Err(Error::Input("quantum matrices need n >= 2".into()));
    }
    let mut names = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            names.push(matrix_var(i, j));
        }
    }
    let mut ring = PolyRing::new(names)?;
    if n == 2 {
        for (k, a) in ["a", "b", "c", "d"].iter().enumerate() {
            ring = ring.with_alias(a, k)?;
        }
    }
    let nv = n * n;
    let idx = |i: usize, j: usize| i * n + j;
    let prod = |a: usize, b: usize, c: i64| {
        let mut m = Mono::one(nv);
        m.0[a] += 1;
        m.0[b] += 1;
        Poly::monomial(nv, m, Cyclo::from_int(c))
    };
    let mut entries = Vec::new();
    for i in 0..n {
        for l in 0..n {
            for m in l + 1..n {
                entries.push(((idx(i, l), idx(i, m)), prod(idx(i, l), idx(i, m), 1)));
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for l in 0..n {
                entries.push(((idx(i, l), idx(j, l)), prod(idx(i, l), idx(j, l), 1)));
                for m in l + 1..n {
                    entries.push(((idx(i, l), idx(j, m)), prod(idx(i, m), idx(j, l), 2)));
                }
            }
        }
    }
    PoissonAlgebra::new(ring, entries, false)
}

fn weyl_names(n: usize, homogenized: bool) -> Vec<String> {
    let mut v: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    v.extend((1..=n).map(|i| format!("y{i}")));
    if homogenized {
        v.push("z".into());
    }
    v
}

/// Weyl Poisson algebra: {x_i, y_j} = delta_ij on 2n variables.
pub fn weyl(n: usize) -> Result<PoissonAlgebra> {
    if n == 0 {
        return Err(Error::Input("n must be at least 1".into()));
    }
    let nv = 2 * n;
    let entries = (0..n).map(|i| ((i, n + i), Poly::one(nv))).collect();
    PoissonAlgebra::new(PolyRing::new(weyl_names(n, false))?, entries, false)
}

/// Homogenized Weyl algebra: {x_i, y_j} = delta_ij z^2, z central.
pub fn homogenized_weyl(n: usize) -> Result<PoissonAlgebra> {
    if n == 0 {
        return Err(Error::Input("n must be at least 1".into()));
    }
    let nv = 2 * n + 1;
    let mut z2 = Mono::one(nv);
    z2.0[2 * n] = 2;
    let entries = (0..n)
        .map(|i| ((i, n + i), Poly::monomial(nv, z2.clone(), Cyclo::one())))
        .collect();
    PoissonAlgebra::new(PolyRing::new(weyl_names(n, true))?, entries, false)
}

/// A finite-dimensional Lie algebra by structure constants
/// [x_i, x_j] = sum_k c[i][j][k] x_k.
#[derive(Clone, Debug, PartialEq)]
pub struct LieData {
    names: Vec<String>,
    c: Vec<Vec<Vec<Cyclo>>>,
}

impl LieData {
    /// `entries` lists [x_i, x_j] for some i != j; the rest follow by
    /// antisymmetry or are zero.
    pub fn new(names: Vec<String>, entries: Vec<((usize, usize), Vec<Cyclo>)>) -> Result<Self> {
        let n = names.len();
        let mut c = vec![vec![vec![Cyclo::zero(); n]; n]; n];
        for ((i, j), v) in entries {
            if i >= n || j >= n || v.len() != n {
                return Err(Error::Dimension("structure constant out of range".into()));
            }
            if i == j {
                if v.iter().any(|x| !x.is_zero()) {
                    return Err(Error::Input("[x, x] must vanish".into()));
                }
                continue;
            }
            c[j][i] = v.iter().map(|x| -x).collect();
            c[i][j] = v;
        }
        let l = LieData { names, c };
        if let Some((i, j, k)) = l.jacobi_failure() {
            return Err(Error::LieJacobiFails(i + 1, j + 1, k + 1));
        }
        Ok(l)
    }

    pub fn with_default_names(
        n: usize,
        entries: Vec<((usize, usize), Vec<Cyclo>)>,
    ) -> Result<Self> {
        Self::new((1..=n).map(|i| format!("x{i}")).collect(), entries)
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Coordinates of [x_i, x_j].
    pub fn constants(&self, i: usize, j: usize) -> &[Cyclo] {
        &self.c[i][j]
    }

    pub fn bracket(&self, u: &[Cyclo], v: &[Cyclo]) -> Vec<Cyclo> {
        let n = self.dim();
        let mut out = vec![Cyclo::zero(); n];
        for i in 0..n {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if v[j].is_zero() || i == j {
                    continue;
                }
                let s = &u[i] * &v[j];
                for k in 0..n {
                    if !self.c[i][j][k].is_zero() {
                        out[k] += &(&s * &self.c[i][j][k]);
                    }
                }
            }
        }
        out
    }

    fn basis(&self, i: usize) -> Vec<Cyclo> {
        let mut e = vec![Cyclo::zero(); self.dim()];
        e[i] = Cyclo::one();
        e
    }

    fn jacobi_failure(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (a, b, c) = (self.basis(i), self.basis(j), self.basis(k));
                    let t1 = self.bracket(&a, &self.bracket(&b, &c));
                    let t2 = self.bracket(&b, &self.bracket(&c, &a));
                    let t3 = self.bracket(&c, &self.bracket(&a, &b));
                    if (0..n).any(|l| !(&(&t1[l] + &t2[l]) + &t3[l]).is_zero()) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }
}

/// PH(g): {x_i, x_j} = [x_i, x_j] z and z central, on dim g + 1 variables.
pub fn ph_lie(l: &LieData) -> Result<PoissonAlgebra> {
    let n = l.dim();
    let nv = n + 1;
    let mut names = l.names.clone();
    let z = if names.iter().any(|s| s == "z") {
        "z_"
    } else {
        "z"
    };
    names.push(z.to_string());
    let mut entries = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut p = Poly::zero(nv);
            for k in 0..n {
                let mut m = Mono::one(nv);
                m.0[k] = 1;
                m.0[n] = 1;
                p.add_term(m, &l.c[i][j][k]);
            }
            entries.push(((i, j), p));
        }
    }
    PoissonAlgebra::new(PolyRing::new(names)?, entries, false)
}

/// One-dimensional ideals span(b): b is a common eigenvector of all ad x_i.
pub fn lie_one_dim_ideals(l: &LieData, budget: u32) -> Result<SolutionSet> {
    let n = l.dim();
    let mu: Vec<Poly> = (0..n).map(|k| Poly::var(n, k)).collect();
    let mut eqs = Vec::new();
    for i in 0..n {
        // w = [x_i, b] as linear forms in mu
        let w: Vec<Poly> = (0..n)
            .map(|t| {
                let mut p = Poly::zero(n);
                for k in 0..n {
                    if !l.c[i][k][t].is_zero() {
                        p = &p + &mu[k].scale(&l.c[i][k][t]);
                    }
                }
                p
            })
            .collect();
        for a in 0..n {
            for b in a + 1..n {
                let minor = &(&w[a] * &mu[b]) - &(&w[b] * &mu[a]);
                if !minor.is_zero() {
                    eqs.push(minor);
                }
            }
        }
    }
    solve_projective(&Ideal::new(n, eqs), budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poisson::{modular_derivation, normal_find_deg1};
    use crate::solver::DEFAULT_BUDGET;

    fn q(n: i64) -> Cyclo {
        Cyclo::from_int(n)
    }

    fn sl2() -> LieData {
        // e, f, h
        let v = |a: i64, b: i64, c: i64| vec![q(a), q(b), q(c)];
        LieData::new(
            vec!["e".into(), "f".into(), "h".into()],
            vec![
                ((0, 1), v(0, 0, 1)),
                ((2, 0), v(2, 0, 0)),
                ((2, 1), v(0, -2, 0)),
            ],
        )
        .unwrap()
    }

    fn two_dim() -> LieData {
        LieData::with_default_names(2, vec![((0, 1), vec![q(0), q(1)])]).unwrap()
    }

    #[test]
    fn skew_examples() {
        let m = Matrix::from_rows(vec![vec![q(0), q(3)], vec![q(-3), q(0)]]).unwrap();
        let a = skew_symmetric(&m).unwrap();
        assert_eq!(a.entry(0, 1), &a.parse("3*x*y").unwrap());
        let bad = Matrix::from_rows(vec![vec![q(0), q(3)], vec![q(3), q(0)]]).unwrap();
        assert_eq!(skew_symmetric(&bad).unwrap_err(), Error::NotSkew);
        assert!(skew_symmetric(&Matrix::zeros(3, 3))
            .unwrap()
            .is_zero_bracket());
    }

    #[test]
    fn jacobian_examples() {
        let a = f_pq(&q(1), &q(0)).unwrap();
        assert_eq!(a.entry(0, 1), &a.parse("z^2").unwrap());
        assert_eq!(a.entry(1, 2), &a.parse("x^2").unwrap());
        assert_eq!(a.entry(2, 0), &a.parse("y^2").unwrap());
        let r = PolyRing::new(["x", "y", "z"]).unwrap();
        let b = jacobian(&r.parse("x*y*z").unwrap()).unwrap();
        assert_eq!(b.entry(2, 0), &r.parse("x*z").unwrap());
        let w = jacobian(&r.parse("z").unwrap()).unwrap();
        assert_eq!(w.entry(0, 1), &Poly::one(3));
        assert!(!w.is_quadratic());
        assert_eq!(jacobian(&Poly::zero(3)).unwrap_err(), Error::ZeroPotential);
        assert!(modular_derivation(&b).is_zero());
    }

    #[test]
    fn quantum_matrix_table() {
        let a = quantum_matrices(2).unwrap();
        let p = |s: &str| a.parse(s).unwrap();
        assert_eq!(a.bracket(&p("a"), &p("d")), p("2*b*c"));
        assert_eq!(a.bracket(&p("a"), &p("b")), p("a*b"));
        assert_eq!(a.bracket(&p("c"), &p("d")), p("c*d"));
        assert!(a.bracket(&p("b"), &p("c")).is_zero());
        let a3 = quantum_matrices(3).unwrap();
        let p3 = |s: &str| a3.parse(s).unwrap();
        assert_eq!(a3.bracket(&p3("x_1_1"), &p3("x_2_2")), p3("2*x_1_2*x_2_1"));
    }

    #[test]
    fn weyl_families() {
        let p1 = weyl(1).unwrap();
        assert_eq!(p1.entry(0, 1), &Poly::one(2));
        let h2 = homogenized_weyl(2).unwrap();
        assert!(h2.is_quadratic());
        assert!(h2.entry(0, 3).is_zero());
        assert_eq!(h2.entry(0, 2), &h2.parse("z^2").unwrap());
    }

    #[test]
    fn lie_families() {
        let a = ph_lie(&sl2()).unwrap();
        assert_eq!(a.entry(0, 1), &a.parse("h*z").unwrap());
        assert_eq!(a.entry(2, 0), &a.parse("2*e*z").unwrap());
        assert_eq!(a.entry(2, 1), &a.parse("-2*f*z").unwrap());
        let b = ph_lie(&two_dim()).unwrap();
        assert_eq!(b.entry(0, 1), &b.parse("x2*z").unwrap());
        assert_eq!(
            LieData::with_default_names(
                3,
                vec![
                    ((0, 1), vec![q(1), q(0), q(0)]),
                    ((1, 2), vec![q(0), q(1), q(0)])
                ]
            )
            .unwrap_err(),
            Error::LieJacobiFails(1, 2, 3)
        );
    }

    #[test]
    fn one_dim_ideals() {
        let pts = lie_one_dim_ideals(&two_dim(), DEFAULT_BUDGET).unwrap();
        assert_eq!(pts, SolutionSet::FinitePoints(vec![vec![q(0), q(1)]]));
        assert!(lie_one_dim_ideals(&sl2(), DEFAULT_BUDGET)
            .unwrap()
            .is_empty());
        let ab = LieData::with_default_names(2, vec![]).unwrap();
        assert!(matches!(
            lie_one_dim_ideals(&ab, DEFAULT_BUDGET).unwrap(),
            SolutionSet::LinearSubspace(_)
        ));
        // z is the only normal element of PH(sl2)
        let n = normal_find_deg1(&ph_lie(&sl2()).unwrap(), DEFAULT_BUDGET).unwrap();
        assert_eq!(
            n,
            SolutionSet::FinitePoints(vec![vec![q(0), q(0), q(0), q(1)]])
        );
    }
}
