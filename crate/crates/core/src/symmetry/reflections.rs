use super::GradedMap;
use crate::arith::Cyclo;
use crate::error::Result;
use crate::linalg::Matrix;
use crate::poisson::{normal_find_deg1, PoissonAlgebra};
use crate::poly::{LinearForm, Poly, PolyRing};
use crate::solver::{
    groebner, normal_form, solve_affine_fixed, AffineSolution, MonomialOrder, SolutionSet,
};

/// Reflections g = I + v l^T whose xi-eigenvector v runs over one chart of
/// a component of the degree-one normal elements.
///
/// Parameters: free coordinates s of v in `direction`, the functional l,
/// and an auxiliary w forcing l(v) (1 + l(v)) to be invertible.
#[derive(Clone, Debug)]
pub struct ReflectionFamily {
    /// Basis of the normal subspace containing v.
    pub direction: Vec<LinearForm>,
    /// v = direction[chart] + sum_{k > chart} s_k direction[k].
    pub chart: usize,
    pub params: PolyRing,
    /// Reduced grlex Groebner basis of the constraints on the parameters.
    pub ideal: Vec<Poly>,
    /// Matrix of g, entries in the parameter ring.
    pub matrix: Vec<Vec<Poly>>,
    /// The eigenvalue 1 + l(v) reduced modulo `ideal`.
    pub xi: Poly,
    pub order_two: bool,
}

impl ReflectionFamily {
    /// The eigenvalue when it is constant on the family.
    pub fn xi_constant(&self) -> Option<Cyclo> {
        self.xi.is_constant().then(|| self.xi.constant_term())
    }

    /// Evaluate at a parameter point.
    pub fn specialize(&self, point: &[Cyclo]) -> Result<GradedMap> {
        let rows: Vec<Vec<Cyclo>> = self
            .matrix
            .iter()
            .map(|r| r.iter().map(|p| p.eval(point)).collect())
            .collect();
        GradedMap::new(Matrix::from_rows(rows)?)
    }

    /// Some member of finite order. Free parameters are pinned depth first
    /// to -1, primitive cube and fourth roots, then small integers, until the
    /// solver returns a point whose eigenvalue is a root of unity.
    pub fn sample(&self, budget: u32) -> Result<Option<GradedMap>> {
        let mut fixed: Vec<Option<Cyclo>> = vec![None; self.params.nvars()];
        let mut calls = 0u32;
        self.search(&mut fixed, 0, budget, &mut calls)
    }

    fn search(
        &self,
        fixed: &mut Vec<Option<Cyclo>>,
        i: usize,
        budget: u32,
        calls: &mut u32,
    ) -> Result<Option<GradedMap>> {
        const MAX_CALLS: u32 = 400;
        if *calls >= MAX_CALLS {
            return Ok(None);
        }
        *calls += 1;
        match solve_affine_fixed(&self.ideal, fixed.clone(), budget)? {
            AffineSolution::Pieces(p) => {
                for piece in &p {
                    let xi = self.xi.eval(&piece.point);
                    if matches!(xi.root_of_unity_order()?, Some(k) if k > 1) {
                        return Ok(Some(self.specialize(&piece.point)?));
                    }
                }
                if p.is_empty() || i >= fixed.len() {
                    return Ok(None);
                }
            }
            _ if i >= fixed.len() => return Ok(None),
            _ => {}
        }
        if fixed[i].is_some() {
            return self.search(fixed, i + 1, budget, calls);
        }
        let candidates = [
            Cyclo::from_int(-1),
            Cyclo::zeta(3, 1),
            Cyclo::zeta(4, 1),
            Cyclo::from_int(1),
            Cyclo::from_int(2),
            Cyclo::zero(),
        ];
        for v in candidates {
            fixed[i] = Some(v);
            if let Some(g) = self.search(fixed, i + 1, budget, calls)? {
                return Ok(Some(g));
            }
        }
        fixed[i] = None;
        Ok(None)
    }
}

#[derive(Clone, Debug)]
pub enum ReflectionReport {
    NoReflections,
    Families(Vec<ReflectionFamily>),
    /// The normal elements could not be enumerated; their ideal is given.
    Inconclusive(Vec<Poly>),
}

impl ReflectionReport {
    pub fn has_reflections(&self) -> Option<bool> {
        match self {
            ReflectionReport::NoReflections => Some(false),
            ReflectionReport::Families(_) => Some(true),
            ReflectionReport::Inconclusive(_) => None,
        }
    }
}

/// Every reflection's xi-eigenvector is a degree-one normal element, so
/// candidates are drawn from [`normal_find_deg1`] and the automorphism
/// equations are solved for the rest of the map.
pub fn find_reflections(a: &PoissonAlgebra, budget: u32) -> Result<ReflectionReport> {
    let normals = normal_find_deg1(a, budget)?;
    let spaces = match normals.subspaces() {
        Some(s) => s,
        None => {
            let SolutionSet::IdealOnly(g) = normals else {
                unreachable!()
            };
            return Ok(ReflectionReport::Inconclusive(g));
        }
    };
    let mut families = Vec::new();
    for space in spaces {
        for chart in 0..space.len() {
            if let Some(f) = family_in_chart(a, &space, chart, budget)? {
                families.push(f);
            }
        }
    }
    Ok(if families.is_empty() {
        ReflectionReport::NoReflections
    } else {
        ReflectionReport::Families(families)
    })
}

fn family_in_chart(
    a: &PoissonAlgebra,
    space: &[LinearForm],
    chart: usize,
    budget: u32,
) -> Result<Option<ReflectionFamily>> {
    let n = a.nvars();
    let r_free = space.len() - chart - 1;
    let p = r_free + n + 1;
    let total = n + p;
    let s_idx = |k: usize| n + k;
    let l_idx = |i: usize| n + r_free + i;
    let w_idx = n + r_free + n;

    // v_j as polynomials in the parameters (combined ring)
    let v: Vec<Poly> = (0..n)
        .map(|j| {
            let mut vj = Poly::constant(total, space[chart][j].clone());
            for k in 0..r_free {
                let c = &space[chart + 1 + k][j];
                if !c.is_zero() {
                    vj = &vj + &Poly::var(total, s_idx(k)).scale(c);
                }
            }
            vj
        })
        .collect();
    let big_v = (0..n).fold(Poly::zero(total), |acc, j| {
        &acc + &(&v[j] * &Poly::var(total, j))
    });
    let images: Vec<Poly> = (0..n)
        .map(|i| &Poly::var(total, i) + &(&Poly::var(total, l_idx(i)) * &big_v))
        .collect();

    // bracket on the combined ring with parameters central
    let mut names: Vec<String> = a.ring().names().to_vec();
    names.extend((0..p).map(|k| format!("__p{k}")));
    let mut table = vec![vec![Poly::zero(total); total]; total];
    for i in 0..n {
        for j in 0..n {
            table[i][j] = a.entry(i, j).embed(total, 0);
        }
    }
    let big = PoissonAlgebra::from_table(PolyRing::new(&names)?, table, true)?;

    let mut all_images = images.clone();
    all_images.extend((n..total).map(|k| Poly::var(total, k)));
    let xs: Vec<usize> = (0..n).collect();
    let to_params = |f: &Poly| {
        let map: Vec<usize> = (0..total).map(|k| k.saturating_sub(n)).collect();
        f.remap(p, &map)
    };
    let mut eqs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let lhs = a.entry(i, j).embed(total, 0).substitute(&all_images);
            let rhs = big.bracket(&images[i], &images[j]);
            let diff = &lhs - &rhs;
            for (_, c) in diff.coefficients_in(&xs) {
                eqs.push(to_params(&c));
            }
        }
    }
    let lv = (0..n).fold(Poly::zero(total), |acc, i| {
        &acc + &(&Poly::var(total, l_idx(i)) * &v[i])
    });
    let one = Poly::one(total);
    let xi_big = &one + &lv;
    let nondeg = &(&(&Poly::var(total, w_idx) * &lv) * &xi_big) - &one;
    eqs.push(to_params(&nondeg));

    let gb = groebner(&eqs, p, MonomialOrder::Grlex, budget)?;
    if gb.len() == 1 && gb[0].is_constant() {
        return Ok(None);
    }
    let xi = normal_form(&to_params(&xi_big), &gb, MonomialOrder::Grlex);
    let order_two = xi == Poly::constant(p, Cyclo::from_int(-1));
    let mut pnames: Vec<String> = (0..r_free).map(|k| format!("s{}", chart + k + 2)).collect();
    pnames.extend(a.ring().names().iter().map(|x| format!("l_{x}")));
    pnames.push("w".into());
    // g[j][i] = delta_ij + v_j l_i
    let matrix = (0..n)
        .map(|j| {
            (0..n)
                .map(|i| {
                    let mut e = to_params(&(&v[j] * &Poly::var(total, l_idx(i))));
                    if i == j {
                        e = &e + &Poly::one(p);
                    }
                    normal_form(&e, &gb, MonomialOrder::Grlex)
                })
                .collect()
        })
        .collect();
    Ok(Some(ReflectionFamily {
        direction: space.to_vec(),
        chart,
        params: PolyRing::new(pnames)?,
        ideal: gb,
        matrix,
        xi,
        order_two,
    }))
}
