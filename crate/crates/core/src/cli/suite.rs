//! Bundled reference vectors with golden expectations.
//!
//! Each vector recomputes a published example from scratch and compares
//! with the expected answer. Vectors run in parallel; results come back in
//! the order listed here.

use rayon::prelude::*;

use crate::arith::Cyclo;
use crate::envelope::{envelope_dims, envelope_trace, expected_dims, DEFAULT_DIMS_CAP};
use crate::error::Result;
use crate::families::{
    f_pq, homogenized_weyl, lie_one_dim_ideals, ph_lie, quantum_matrices, skew_symmetric, LieData,
};
use crate::fixed::{
    fixed_cyclic_reflection, fixed_group, is_skew_presentation, present_subalgebra,
    rigidity_report, PresentedPoisson, Verdict,
};
use crate::linalg::Matrix;
use crate::poisson::{
    center_truncated, is_unimodular, modular_derivation, normal_find_deg1, PoissonAlgebra,
};
use crate::poly::{LinearForm, Poly, PolyRing};
use crate::solver::SolutionSet;
use crate::symmetry::{find_reflections, group_closure, trace_series, GradedMap, ReflectionReport};

#[derive(Clone, Debug, PartialEq)]
pub struct VectorResult {
    pub id: &'static str,
    pub claim: &'static str,
    pub pass: bool,
    pub detail: String,
}

type Check = fn(u32) -> Result<(bool, String)>;

struct Vector {
    id: &'static str,
    claim: &'static str,
    check: Check,
}

fn c(n: i64) -> Cyclo {
    Cyclo::from_int(n)
}

fn z(n: u32, k: i64) -> Cyclo {
    Cyclo::zeta(n, k)
}

fn ok(pass: bool, detail: impl Into<String>) -> Result<(bool, String)> {
    Ok((pass, detail.into()))
}

fn normalized(v: &[Cyclo]) -> LinearForm {
    let k = v.iter().position(|x| !x.is_zero()).expect("nonzero");
    let inv = v[k].inv().expect("nonzero");
    v.iter().map(|x| x * &inv).collect()
}

/// Is `set` exactly the given projective points?
fn same_points(set: &SolutionSet, want: &[LinearForm]) -> bool {
    let SolutionSet::FinitePoints(got) = set else {
        return false;
    };
    let got: Vec<LinearForm> = got.iter().map(|v| normalized(v)).collect();
    got.len() == want.len() && want.iter().all(|w| got.contains(&normalized(w)))
}

fn skew2(p: i64) -> PoissonAlgebra {
    skew_symmetric(&Matrix::from_rows(vec![vec![c(0), c(p)], vec![c(-p), c(0)]]).unwrap()).unwrap()
}

fn sl2() -> LieData {
    let names = ["e", "f", "h"].iter().map(|s| s.to_string()).collect();
    LieData::new(
        names,
        vec![
            ((0, 1), vec![c(0), c(0), c(1)]),
            ((2, 0), vec![c(2), c(0), c(0)]),
            ((2, 1), vec![c(0), c(-2), c(0)]),
        ],
    )
    .unwrap()
}

fn nonabelian2() -> LieData {
    LieData::with_default_names(2, vec![((0, 1), vec![c(0), c(1)])]).unwrap()
}

/// Index of the generator whose expression equals `src` in the ambient ring.
fn gen_index(p: &PresentedPoisson, a: &PoissonAlgebra, src: &str) -> Option<usize> {
    let e = a.parse(src).ok()?;
    p.expressions.iter().position(|x| *x == e)
}

/// The swap b <-> mu c on O(M_2), variables a, b, c, d.
fn qm2_swap(mu: &Cyclo) -> GradedMap {
    let mut m = Matrix::identity(4);
    m.set(1, 1, c(0));
    m.set(2, 2, c(0));
    m.set(2, 1, mu.clone());
    m.set(1, 2, mu.inv().unwrap());
    GradedMap::new(m).unwrap()
}

fn last_sign(n: usize) -> GradedMap {
    let mut d = vec![c(1); n];
    d[n - 1] = c(-1);
    GradedMap::diagonal(&d).unwrap()
}

fn vectors() -> Vec<Vector> {
    vec![
        Vector {
            id: "jacobian-cubes/normal-empty",
            claim: "f = (x^3+y^3+z^3)/3: no degree-one normal elements",
            check: |b| {
                let s = normal_find_deg1(&f_pq(&c(1), &c(0))?, b)?;
                ok(s.is_empty(), s.kind())
            },
        },
        Vector {
            id: "jacobian-cubes/no-reflections",
            claim: "f = (x^3+y^3+z^3)/3: no Poisson reflections",
            check: |b| {
                let r = find_reflections(&f_pq(&c(1), &c(0))?, b)?;
                ok(matches!(r, ReflectionReport::NoReflections), format!("{:?}", r.has_reflections()))
            },
        },
        Vector {
            id: "jacobian-xyz/fixed-cube",
            claim: "f = xyz, g = diag(zeta3,1,1): {x3,y}=3x3y, {y,z}=yz, {z,x3}=3x3z; phi(y)=-2y, phi(z)=2z; A unimodular, A^G not",
            check: |b| {
                let a = f_pq(&c(0), &c(1))?;
                let g = GradedMap::diagonal(&[z(3, 1), c(1), c(1)])?;
                let p = fixed_cyclic_reflection(&a, &g, b)?;
                let r = &p.ring;
                let brackets = p.brackets[0][1] == r.parse("3*x3*y")?
                    && p.brackets[1][2] == r.parse("y*z")?
                    && p.brackets[2][0] == r.parse("3*x3*z")?;
                let ag = p.to_algebra().expect("polynomial");
                let phi = modular_derivation(&ag);
                let phi_ok = phi.images[1] == r.parse("-2*y")? && phi.images[2] == r.parse("2*z")?;
                let flags = is_unimodular(&a) && !is_unimodular(&ag);
                ok(brackets && phi_ok && flags, format!("brackets {brackets}, phi {phi_ok}, unimodular flags {flags}"))
            },
        },
        Vector {
            id: "jacobian-p=-q/normal-lines",
            claim: "p = -q: normal elements x + g y + g^2 z (g^3 = 1); u,v,w basis is skew with rho = gq(1-g)",
            check: |b| {
                let q = c(2);
                let a = f_pq(&-&q, &q)?;
                let g = z(3, 1);
                let pts: Vec<LinearForm> = (0..3).map(|k| vec![c(1), g.pow(k).unwrap(), g.pow(2 * k).unwrap()]).collect();
                let set = normal_find_deg1(&a, b)?;
                let lines = same_points(&set, &pts);
                let uvw = ["x + y + z", "x + zeta(3)*y + zeta(3)^2*z", "x + zeta(3)^2*y + zeta(3)*z"]
                    .iter()
                    .map(|s| a.parse(s))
                    .collect::<Result<Vec<_>>>()?;
                let rho = &(&g * &q) * &(&c(1) - &g);
                let skew = skew_rho(&present_subalgebra(&a, uvw, b)?, &rho);
                ok(lines && skew, format!("lines {lines}, skew with rho {skew}"))
            },
        },
        Vector {
            id: "jacobian-p=-wq/normal-lines",
            claim: "p = -wq: normal elements w^2x+y+z, x+y+w^2z, x+w^2y+z; u,v,w basis is skew with rho = wq(w-1)",
            check: |b| {
                let q = c(3);
                let w = z(3, 1);
                let w2 = z(3, 2);
                let a = f_pq(&-&(&w * &q), &q)?;
                let pts = vec![vec![w2.clone(), c(1), c(1)], vec![c(1), c(1), w2.clone()], vec![c(1), w2, c(1)]];
                let set = normal_find_deg1(&a, b)?;
                let lines = same_points(&set, &pts);
                let uvw = ["x + zeta(3)*y + zeta(3)*z", "x + y + zeta(3)^2*z", "x + zeta(3)^2*y + z"]
                    .iter()
                    .map(|s| a.parse(s))
                    .collect::<Result<Vec<_>>>()?;
                let rho = &(&w * &q) * &(&w - &c(1));
                let skew = skew_rho(&present_subalgebra(&a, uvw, b)?, &rho);
                ok(lines && skew, format!("lines {lines}, skew with rho {skew}"))
            },
        },
        Vector {
            id: "qmatrix/normal-span",
            claim: "O(M_n): degree-one normal elements lie in span{x_1n, x_n1}; the whole span for n = 2, its two coordinate lines for n = 3",
            check: |b| {
                let e = |nn: usize, k: usize| (0..nn).map(|i| c((i == k) as i64)).collect::<LinearForm>();
                let s2 = normal_find_deg1(&quantum_matrices(2)?, b)?;
                let two = matches!(&s2, SolutionSet::LinearSubspace(basis) if same_span(basis, &[e(4, 1), e(4, 2)]));
                let s3 = normal_find_deg1(&quantum_matrices(3)?, b)?;
                let three = same_points(&s3, &[e(9, 2), e(9, 6)]);
                ok(two && three, format!("n = 2: {}, n = 3: {}", s2.kind(), s3.kind()))
            },
        },
        Vector {
            id: "qmatrix-3/no-reflections",
            claim: "O(M_3) has no Poisson reflections",
            check: |b| {
                let r = find_reflections(&quantum_matrices(3)?, b)?;
                ok(matches!(r, ReflectionReport::NoReflections), format!("{:?}", r.has_reflections()))
            },
        },
        Vector {
            id: "qmatrix-2/swap-family",
            claim: "O(M_2): the reflections are b <-> mu c with xi = -1",
            check: |b| {
                let a = quantum_matrices(2)?;
                let ReflectionReport::Families(fams) = find_reflections(&a, b)? else { return ok(false, "no family") };
                let mut good = !fams.is_empty();
                for f in &fams {
                    good &= f.order_two;
                    let Some(g) = f.sample(b)? else { return ok(false, "empty family") };
                    let m = g.matrix();
                    // a, d fixed; b and c exchanged up to scalars
                    good &= m.column(0) == vec![c(1), c(0), c(0), c(0)] && m.column(3) == vec![c(0), c(0), c(0), c(1)];
                    good &= m.get(1, 1).is_zero() && m.get(2, 2).is_zero() && !m.get(2, 1).is_zero();
                }
                ok(good, format!("{} famil(ies)", fams.len()))
            },
        },
        Vector {
            id: "qmatrix-2/fixed-swap",
            claim: "O(M_2)^<swap> = k[a, b+mu c, bc, d] with the six brackets; derived ideal components 3 vs 2",
            check: |b| {
                let a = quantum_matrices(2)?;
                let mu = c(5);
                let gr = group_closure(&[qm2_swap(&mu)], 10)?;
                let p = fixed_group(&a, &gr, Some(2), b)?;
                let idx: Option<Vec<usize>> =
                    ["a", "b + 5*c", "b*c", "d"].iter().map(|s| gen_index(&p, &a, s)).collect();
                let Some(ix) = idx else { return ok(false, "generators differ") };
                let r = &p.ring;
                let v = |k: usize| Poly::var(r.nvars(), ix[k]);
                let (ga, gu, gbc, gd) = (v(0), v(1), v(2), v(3));
                let two = c(2);
                let want = [
                    (0, 1, &ga * &gu),
                    (0, 2, (&ga * &gbc).scale(&two)),
                    (0, 3, gbc.scale(&two)),
                    (1, 3, &gu * &gd),
                    (2, 3, (&gbc * &gd).scale(&two)),
                    (1, 2, Poly::zero(r.nvars())),
                ];
                let brackets = want.iter().all(|(i, j, w)| p.brackets[ix[*i]][ix[*j]] == *w);
                let rep = rigidity_report(&a, &gr, Some(2), b)?;
                let comps = rep.verdict
                    == Verdict::Distinguished { witness: "derived-components".into(), a: "3".into(), ag: "2".into() };
                ok(brackets && p.ngens() == 4 && comps, format!("brackets {brackets}, components {comps}"))
            },
        },
        Vector {
            id: "hweyl/center",
            claim: "H_n, n = 1, 2: center up to degree 3 is spanned by powers of z",
            check: |_| {
                let mut all = true;
                for n in [1usize, 2] {
                    let a = homogenized_weyl(n)?;
                    let zv = a.var(2 * n);
                    let cen = center_truncated(&a, 3);
                    for (k, basis) in cen.iter().enumerate() {
                        all &= basis.len() == 1 && basis[0] == zv.pow(k as u32)?;
                    }
                }
                ok(all, "")
            },
        },
        Vector {
            id: "hweyl/reflections",
            claim: "H_n, n = 1, 2: every Poisson reflection sends z to -z",
            check: |b| {
                let mut all = true;
                for n in [1usize, 2] {
                    let a = homogenized_weyl(n)?;
                    let ReflectionReport::Families(fams) = find_reflections(&a, b)? else { return ok(false, "none") };
                    let zv = a.var(2 * n);
                    for f in &fams {
                        let Some(g) = f.sample(b)? else { return ok(false, "empty family") };
                        all &= f.order_two && g.apply(&zv) == zv.scale(&c(-1));
                    }
                }
                ok(all, "")
            },
        },
        Vector {
            id: "hweyl/fixed-and-rigidity",
            claim: "H_n^<z -> -z>: {x_i, y_j} = delta_ij w with w = z^2; told apart by center-in-derived",
            check: |b| {
                let mut all = true;
                for n in [1usize, 2] {
                    let a = homogenized_weyl(n)?;
                    let g = last_sign(2 * n + 1);
                    let p = fixed_cyclic_reflection(&a, &g, b)?;
                    let Some(w) = gen_index(&p, &a, "z^2") else { return ok(false, "no z^2 generator") };
                    let k = p.ring.nvars();
                    for i in 1..=n {
                        for j in 1..=n {
                            let xi = gen_index(&p, &a, &format!("x{i}")).unwrap();
                            let yj = gen_index(&p, &a, &format!("y{j}")).unwrap();
                            let want = if i == j { Poly::var(k, w) } else { Poly::zero(k) };
                            all &= p.brackets[xi][yj] == want;
                        }
                    }
                    let rep = rigidity_report(&a, &group_closure(&[g], 10)?, None, b)?;
                    all &= matches!(&rep.verdict, Verdict::Distinguished { witness, .. } if witness == "center-in-derived");
                }
                ok(all, "")
            },
        },
        Vector {
            id: "sl2/no-reflections",
            claim: "sl2 has no one-dimensional ideals; PH(sl2) has no Poisson reflections",
            check: |b| {
                let ideals = lie_one_dim_ideals(&sl2(), b)?;
                let refl = find_reflections(&ph_lie(&sl2())?, b)?;
                ok(ideals.is_empty() && matches!(refl, ReflectionReport::NoReflections), ideals.kind())
            },
        },
        Vector {
            id: "nonabelian-2d/fixed",
            claim: "[x1,x2] = x2: PH has reflections; fixed ring under x2 -> zeta_m x2 is k[x1, x2^m, z] of PH form",
            check: |b| {
                let a = ph_lie(&nonabelian2())?;
                let has = matches!(find_reflections(&a, b)?, ReflectionReport::Families(_));
                let mut all = has;
                for m in 2..=4u32 {
                    let g = GradedMap::diagonal(&[c(1), z(m, 1), c(1)])?;
                    let p = fixed_cyclic_reflection(&a, &g, b)?;
                    let (Some(i1), Some(i2), Some(iz)) =
                        (gen_index(&p, &a, "x1"), gen_index(&p, &a, &format!("x2^{m}")), gen_index(&p, &a, "z"))
                    else {
                        return ok(false, "generators differ");
                    };
                    let k = p.ring.nvars();
                    let want = (&Poly::var(k, i2) * &Poly::var(k, iz)).scale(&c(m as i64));
                    all &= p.brackets[i1][i2] == want && p.brackets[i1][iz].is_zero() && p.brackets[i2][iz].is_zero();
                }
                ok(all, format!("reflections {has}"))
            },
        },
        Vector {
            id: "envelope/dims",
            claim: "U(A) has the Hilbert series of 2n commuting variables up to degree 3",
            check: |_| {
                let r2 = PolyRing::new(["x", "y"])?;
                let r1 = PolyRing::new(["x"])?;
                let algebras = vec![
                    PoissonAlgebra::new(r1, vec![], false)?,
                    PoissonAlgebra::new(r2, vec![], false)?,
                    skew2(1),
                    skew2(2),
                    f_pq(&c(0), &c(1))?,
                    homogenized_weyl(1)?,
                ];
                let bad: Vec<usize> = algebras
                    .iter()
                    .enumerate()
                    .filter(|(_, a)| {
                        envelope_dims(a, 3, DEFAULT_DIMS_CAP).ok() != Some(expected_dims(a.nvars(), 3))
                    })
                    .map(|(i, _)| i)
                    .collect();
                ok(bad.is_empty(), format!("mismatches at {bad:?}"))
            },
        },
        Vector {
            id: "envelope/trace-square",
            claim: "Tr_U(g) = Tr_A(g)^2 for reflections g, never of quasi-reflection shape",
            check: |_| {
                let cases = vec![
                    (skew2(1), GradedMap::diagonal(&[c(-1), c(1)])?),
                    (skew2(1), GradedMap::diagonal(&[z(3, 1), c(1)])?),
                    (f_pq(&c(0), &c(1))?, GradedMap::diagonal(&[z(3, 1), c(1), c(1)])?),
                    (homogenized_weyl(1)?, last_sign(3)),
                    (quantum_matrices(2)?, qm2_swap(&c(1))),
                ];
                let mut all = true;
                for (a, g) in &cases {
                    let t = envelope_trace(a, g)?;
                    let ta = trace_series(g)?;
                    all &= t.series == ta.mul(&ta) && !t.quasi_reflection;
                }
                ok(all, format!("{} reflections", cases.len()))
            },
        },
        Vector {
            id: "x-squared/no-reflections",
            claim: "{x,y} = x^2 has no Poisson reflections",
            check: |b| {
                let r = PolyRing::new(["x", "y"])?;
                let a = PoissonAlgebra::new(r.clone(), vec![((0, 1), r.parse("x^2")?)], false)?;
                let rep = find_reflections(&a, b)?;
                ok(matches!(rep, ReflectionReport::NoReflections), format!("{:?}", rep.has_reflections()))
            },
        },
        Vector {
            id: "skew-plane/fixed-constant",
            claim: "{x,y} = pxy under diag(zeta_m, 1): fixed ring bracket constant pm",
            check: |b| {
                let mut all = true;
                for p in [1i64, 2, -3] {
                    for m in 2..=4u32 {
                        let a = skew2(p);
                        let g = GradedMap::diagonal(&[z(m, 1), c(1)])?;
                        let fixed = fixed_cyclic_reflection(&a, &g, b)?;
                        let q = is_skew_presentation(&fixed).expect("skew");
                        all &= *q.get(0, 1) == c(p * m as i64);
                    }
                }
                ok(all, "")
            },
        },
        Vector {
            id: "non-jacobi/failing-triple",
            claim: "{x,y} = x^2, {y,z} = 0, {z,x} = z^2 fails Jacobi on (x,y,z) with cyclic sum 2xz^2",
            check: |_| {
                let r = PolyRing::new(["x", "y", "z"])?;
                let a = PoissonAlgebra::new(r.clone(), vec![((0, 1), r.parse("x^2")?), ((2, 0), r.parse("z^2")?)], true)?;
                let j = a.jacobi_check();
                let sum_ok = j.cyclic_sum.as_ref().is_some_and(|s| *s == r.parse("2*x*z^2").unwrap() || *s == r.parse("-2*x*z^2").unwrap());
                ok(!j.holds && j.failing == Some((0, 1, 2)) && sum_ok, format!("{:?}", j.failing))
            },
        },
    ]
}

fn same_span(a: &[LinearForm], b: &[LinearForm]) -> bool {
    let rank = |v: Vec<LinearForm>| Matrix::from_rows(v).map(|m| m.rank()).unwrap_or(usize::MAX);
    let both: Vec<LinearForm> = a.iter().chain(b).cloned().collect();
    let r = rank(both);
    r == rank(a.to_vec()) && r == rank(b.to_vec())
}

/// Every bracket {u_i, u_j} = rho u_i u_j in cyclic order.
fn skew_rho(p: &PresentedPoisson, rho: &Cyclo) -> bool {
    let Some(q) = is_skew_presentation(p) else {
        return false;
    };
    q.get(0, 1) == rho && q.get(1, 2) == rho && q.get(2, 0) == rho
}

/// Ids of all bundled vectors, in run order.
pub fn vector_ids() -> Vec<&'static str> {
    vectors().iter().map(|v| v.id).collect()
}

pub fn run_suite(filter: Option<&str>, budget: u32) -> Vec<VectorResult> {
    let vs: Vec<Vector> = vectors()
        .into_iter()
        .filter(|v| filter.is_none_or(|f| v.id.contains(f)))
        .collect();
    vs.par_iter()
        .map(|v| {
            let (pass, detail) = match (v.check)(budget) {
                Ok(r) => r,
                Err(e) => (false, format!("error: {e}")),
            };
            VectorResult {
                id: v.id,
                claim: v.claim,
                pass,
                detail,
            }
        })
        .collect()
}

pub fn table(results: &[VectorResult]) -> String {
    let w = results.iter().map(|r| r.id.len()).max().unwrap_or(0);
    let mut out = String::new();
    for r in results {
        let mark = if r.pass { "pass" } else { "FAIL" };
        out += &format!("{mark}  {:w$}  {}\n", r.id, r.claim);
        if !r.pass && !r.detail.is_empty() {
            out += &format!("      {:w$}  {}\n", "", r.detail);
        }
    }
    let failed = results.iter().filter(|r| !r.pass).count();
    out + &format!("{} passed, {failed} failed\n", results.len() - failed)
}
