use crate::arith::roots::find_roots;
use crate::arith::{Cyclo, UniPoly};
use crate::error::Result;
use crate::linalg::{row_space_basis, Matrix};
use crate::poly::{LinearForm, Poly};

use super::{groebner, Ideal, MonomialOrder};

/// Zero set of a homogeneous system, up to scalars.
#[derive(Clone, Debug, PartialEq)]
pub enum SolutionSet {
    Empty,
    /// One linear subspace of dimension at least 2, rref basis.
    LinearSubspace(Vec<LinearForm>),
    /// A union of several linear subspaces, not all of them points.
    Subspaces(Vec<Vec<LinearForm>>),
    /// Finitely many projective points, first nonzero coordinate 1.
    FinitePoints(Vec<LinearForm>),
    /// Could not be enumerated; the generators are reported instead.
    IdealOnly(Vec<Poly>),
}

impl SolutionSet {
    /// Normalize a union of subspaces (each given by spanning vectors).
    pub fn from_subspaces(spaces: Vec<Vec<LinearForm>>) -> SolutionSet {
        let mut bases: Vec<Vec<LinearForm>> = spaces
            .iter()
            .map(|s| row_space_basis(s))
            .filter(|b| !b.is_empty())
            .collect();
        // drop duplicates and subspaces contained in others
        let mut keep: Vec<Vec<LinearForm>> = Vec::new();
        bases.sort_by_key(|b| std::cmp::Reverse(b.len()));
        for b in bases {
            if !keep.iter().any(|k| contains_space(k, &b)) {
                keep.push(b);
            }
        }
        keep.sort_by(|a, b| {
            a.len()
                .cmp(&b.len())
                .then_with(|| fmt_rows(b).cmp(&fmt_rows(a)))
        });
        match keep.len() {
            0 => SolutionSet::Empty,
            _ if keep.iter().all(|b| b.len() == 1) => {
                SolutionSet::FinitePoints(keep.into_iter().map(|mut b| b.remove(0)).collect())
            }
            1 => SolutionSet::LinearSubspace(keep.remove(0)),
            _ => SolutionSet::Subspaces(keep),
        }
    }

    /// The components as subspaces, or `None` for [`SolutionSet::IdealOnly`].
    pub fn subspaces(&self) -> Option<Vec<Vec<LinearForm>>> {
        match self {
            SolutionSet::Empty => Some(vec![]),
            SolutionSet::LinearSubspace(b) => Some(vec![b.clone()]),
            SolutionSet::Subspaces(s) => Some(s.clone()),
            SolutionSet::FinitePoints(p) => Some(p.iter().map(|v| vec![v.clone()]).collect()),
            SolutionSet::IdealOnly(_) => None,
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, SolutionSet::Empty)
    }

    /// Whether the nonzero vector `v` lies in the set.
    pub fn contains(&self, v: &[Cyclo]) -> Option<bool> {
        let spaces = self.subspaces()?;
        Some(spaces.iter().any(|s| contains_space(s, &[v.to_vec()])))
    }

    pub fn kind(&self) -> &'static str {
        match self {
            SolutionSet::Empty => "empty",
            SolutionSet::LinearSubspace(_) => "linear_subspace",
            SolutionSet::Subspaces(_) => "subspaces",
            SolutionSet::FinitePoints(_) => "finite_points",
            SolutionSet::IdealOnly(_) => "ideal_only",
        }
    }
}

fn fmt_rows(b: &[LinearForm]) -> String {
    b.iter()
        .map(|r| {
            r.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect::<Vec<_>>()
        .join(";")
}

/// Is span(small) contained in span(big)?
pub(crate) fn contains_space(big: &[LinearForm], small: &[LinearForm]) -> bool {
    if big.is_empty() {
        return small.iter().all(|v| v.iter().all(Cyclo::is_zero));
    }
    let r = Matrix::from_rows(big.to_vec()).unwrap().rank();
    let mut all = big.to_vec();
    all.extend_from_slice(small);
    Matrix::from_rows(all).unwrap().rank() == r
}

/// An affine linear piece point + span(dirs) of a zero set.
#[derive(Clone, Debug, PartialEq)]
pub struct AffinePiece {
    pub point: Vec<Cyclo>,
    pub dirs: Vec<Vec<Cyclo>>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum AffineSolution {
    Pieces(Vec<AffinePiece>),
    Unresolved(Vec<Poly>),
}

/// Affine zero set of `gens`, when it is a finite union of affine linear
/// pieces that can be found by splitting off variable factors and
/// univariate roots.
pub fn solve_affine(gens: &[Poly], nvars: usize, budget: u32) -> Result<AffineSolution> {
    solve_affine_fixed(gens, vec![None; nvars], budget)
}

/// As [`solve_affine`] with some coordinates already pinned.
pub fn solve_affine_fixed(
    gens: &[Poly],
    fixed: Vec<Option<Cyclo>>,
    budget: u32,
) -> Result<AffineSolution> {
    let mut out = Vec::new();
    match rec(gens.to_vec(), fixed, budget, &mut out, 0)? {
        Some(unresolved) => Ok(AffineSolution::Unresolved(unresolved)),
        None => Ok(AffineSolution::Pieces(out)),
    }
}

const MAX_DEPTH: usize = 64;

fn substitute_fixed(g: &Poly, fixed: &[Option<Cyclo>]) -> Poly {
    let n = fixed.len();
    if g.support_vars().iter().all(|&i| fixed[i].is_none()) {
        return g.clone();
    }
    let images: Vec<Poly> = fixed
        .iter()
        .enumerate()
        .map(|(i, f)| match f {
            Some(v) => Poly::constant(n, v.clone()),
            None => Poly::var(n, i),
        })
        .collect();
    g.substitute(&images)
}

fn to_unipoly(p: &Poly, var: usize) -> UniPoly {
    let d = p.degree_in(var) as usize;
    let mut c = vec![Cyclo::zero(); d + 1];
    for (m, v) in p.terms() {
        c[m.0[var] as usize] = v.clone();
    }
    UniPoly::new(c)
}

/// Returns Some(generators) when the branch cannot be resolved.
fn rec(
    gens: Vec<Poly>,
    fixed: Vec<Option<Cyclo>>,
    budget: u32,
    out: &mut Vec<AffinePiece>,
    depth: usize,
) -> Result<Option<Vec<Poly>>> {
    let n = fixed.len();
    let gens: Vec<Poly> = gens
        .iter()
        .map(|g| substitute_fixed(g, &fixed))
        .filter(|g| !g.is_zero())
        .collect();
    let gb = groebner(&gens, n, MonomialOrder::Grlex, budget)?;
    if gb.len() == 1 && gb[0].is_constant() {
        return Ok(None);
    }
    if depth > MAX_DEPTH {
        return Ok(Some(gb));
    }
    let free: Vec<usize> = (0..n).filter(|&i| fixed[i].is_none()).collect();
    if gb.iter().all(|g| g.total_degree().unwrap_or(0) <= 1) {
        out.push(linear_piece(&gb, &fixed, &free));
        return Ok(None);
    }
    // split on a variable factor
    for (gi, g) in gb.iter().enumerate() {
        for &v in &free {
            if g.terms().all(|(m, _)| m.0[v] > 0) {
                let mut f0 = fixed.clone();
                f0[v] = Some(Cyclo::zero());
                if let Some(u) = rec(gb.clone(), f0, budget, out, depth + 1)? {
                    return Ok(Some(u));
                }
                let mut rest = gb.clone();
                rest[gi] = Poly::divides(&Poly::var(n, v), g)?.expect("variable factor divides");
                return rec(rest, fixed, budget, out, depth + 1);
            }
        }
    }
    // univariate elimination
    let mut uni: Option<(usize, Poly)> = None;
    'outer: for &v in &free {
        for g in &gb {
            if g.support_vars() == [v] {
                uni = Some((v, g.clone()));
                break 'outer;
            }
        }
    }
    if uni.is_none() {
        for &v in &free {
            // move v to the last slot and eliminate everything else
            let map: Vec<usize> = (0..n)
                .map(|i| {
                    if i == v {
                        n - 1
                    } else if i < v {
                        i
                    } else {
                        i - 1
                    }
                })
                .collect();
            let inv: Vec<usize> = (0..n)
                .map(|i| {
                    if i == n - 1 {
                        v
                    } else if i < v {
                        i
                    } else {
                        i + 1
                    }
                })
                .collect();
            let moved: Vec<Poly> = gb.iter().map(|g| g.remap(n, &map)).collect();
            let egb = groebner(&moved, n, MonomialOrder::Elim(n - 1), budget)?;
            if let Some(p) = egb.iter().find(|p| p.support_vars() == [n - 1]) {
                uni = Some((v, p.remap(n, &inv)));
                break;
            }
        }
    }
    let Some((v, p)) = uni else {
        return Ok(Some(gb));
    };
    let roots = find_roots(&to_unipoly(&p, v));
    if !roots.complete {
        return Ok(Some(gb));
    }
    for r in roots.roots {
        let mut f = fixed.clone();
        f[v] = Some(r);
        if let Some(u) = rec(gb.clone(), f, budget, out, depth + 1)? {
            return Ok(Some(u));
        }
    }
    Ok(None)
}

fn linear_piece(gb: &[Poly], fixed: &[Option<Cyclo>], free: &[usize]) -> AffinePiece {
    let n = fixed.len();
    let rows: Vec<Vec<Cyclo>> = gb
        .iter()
        .map(|g| {
            free.iter()
                .map(|&v| g.coeff(&crate::poly::Mono::var(n, v)))
                .collect()
        })
        .collect();
    let rhs: Vec<Cyclo> = gb.iter().map(|g| -&g.constant_term()).collect();
    let mut point: Vec<Cyclo> = fixed
        .iter()
        .map(|f| f.clone().unwrap_or_else(Cyclo::zero))
        .collect();
    let mut dirs = Vec::new();
    if free.is_empty() {
        return AffinePiece { point, dirs };
    }
    let a = if rows.is_empty() {
        Matrix::zeros(1, free.len())
    } else {
        Matrix::from_rows(rows).expect("rectangular")
    };
    let rhs = if gb.is_empty() {
        vec![Cyclo::zero()]
    } else {
        rhs
    };
    let x = a.solve(&rhs).expect("consistent linear Groebner basis");
    for (k, &v) in free.iter().enumerate() {
        point[v] = x[k].clone();
    }
    for kv in a.kernel() {
        let mut d = vec![Cyclo::zero(); n];
        for (k, &v) in free.iter().enumerate() {
            d[v] = kv[k].clone();
        }
        dirs.push(d);
    }
    AffinePiece { point, dirs }
}

/// Projective zero set of a homogeneous ideal, chart by chart.
pub fn solve_projective(ideal: &Ideal, budget: u32) -> Result<SolutionSet> {
    let n = ideal.nvars();
    let gens = ideal.gens().to_vec();
    solve_projective_charts(n, budget, |_| Ok(gens.clone()))
}

/// Chart k pins coordinates 0..k to zero and coordinate k to one; the
/// callback supplies the equations to impose in that chart.
pub fn solve_projective_charts<F>(n: usize, budget: u32, mut chart_eqs: F) -> Result<SolutionSet>
where
    F: FnMut(usize) -> Result<Vec<Poly>>,
{
    let mut spaces: Vec<Vec<LinearForm>> = Vec::new();
    for k in 0..n {
        let eqs = chart_eqs(k)?;
        let mut fixed: Vec<Option<Cyclo>> = vec![None; n];
        for (j, f) in fixed.iter_mut().enumerate().take(k + 1) {
            *f = Some(if j == k { Cyclo::one() } else { Cyclo::zero() });
        }
        match solve_affine_fixed(&eqs, fixed, budget)? {
            AffineSolution::Unresolved(g) => return Ok(SolutionSet::IdealOnly(g)),
            AffineSolution::Pieces(pieces) => {
                for p in pieces {
                    let mut span = vec![p.point];
                    span.extend(p.dirs);
                    spaces.push(span);
                }
            }
        }
    }
    Ok(SolutionSet::from_subspaces(spaces))
}
