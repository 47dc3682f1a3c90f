//! Library results against the brute-force oracle. Each check returns
//! whether everything agreed plus a short account of what was compared.

use super::*;
use poisson_workbench::envelope::{envelope_dims, envelope_trace, DEFAULT_DIMS_CAP};
use poisson_workbench::families::{f_pq, homogenized_weyl, quantum_matrices};
use poisson_workbench::fixed::fixed_cyclic_reflection;
use poisson_workbench::poisson::{is_unimodular, normal_find_deg1, PoissonAlgebra};
use poisson_workbench::solver::{SolutionSet, DEFAULT_BUDGET};
use poisson_workbench::symmetry::{find_reflections, GradedMap, ReflectionReport};
use poisson_workbench::{Matrix, PolyRing};

pub type Check = Result<String, String>;

fn c(n: i64) -> Cyclo {
    Cyclo::from_int(n)
}

fn ensure(cond: bool, what: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

/// The library's bracket table, reduced mod p, equals the oracle's.
fn same_table(a: &PoissonAlgebra, br: &Bracket) -> bool {
    let n = a.nvars();
    (0..n).all(|i| (0..n).all(|j| br.ring.from_poly(a.entry(i, j)) == br.table[i][j]))
}

/// f = (x^3 + y^3 + z^3)/3: no degree-one normal elements and no
/// reflections, by exhaustive search over F_7.
pub fn cubes_have_nothing() -> Check {
    let f = Fp::new(7);
    let br = jacobian(f, cubes);
    let a = f_pq(&c(1), &c(0)).map_err(|e| e.to_string())?;
    ensure(same_table(&a, &br), "bracket tables differ")?;
    let normals = br.normal_linear_forms();
    let refl = br.reflections();
    let lib_normal = normal_find_deg1(&a, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
    let lib_refl = find_reflections(&a, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
    ensure(
        normals.is_empty(),
        format!("oracle found normal forms {normals:?}"),
    )?;
    ensure(
        refl.is_empty(),
        format!("oracle found {} reflections", refl.len()),
    )?;
    ensure(lib_normal.is_empty(), "library found normal elements")?;
    ensure(
        matches!(lib_refl, ReflectionReport::NoReflections),
        "library found reflections",
    )?;
    Ok(format!(
        "F_7: {} candidate forms, {} candidate reflections, none survive",
        projective_points(f, 3).len(),
        projective_points(f, 3).len() * (f.p.pow(3) as usize - 1)
    ))
}

/// f = xyz under diag(zeta3, 1, 1): generators, brackets, modular
/// derivation and unimodularity over F_7 (zeta3 = 2).
pub fn xyz_fixed_ring() -> Check {
    let f = Fp::new(7);
    let br = jacobian(f, xyz);
    let r = br.ring.clone();
    let a = f_pq(&c(0), &c(1)).map_err(|e| e.to_string())?;
    ensure(same_table(&a, &br), "bracket tables differ")?;
    let zeta = f.zeta(3);
    let mut gm = Mat::identity(f, 3);
    gm.a[0][0] = zeta;
    ensure(gm.order(100) == Some(3), "power iteration: order is not 3")?;

    let g = GradedMap::diagonal(&[Cyclo::zeta(3, 1), c(1), c(1)]).map_err(|e| e.to_string())?;
    let p = fixed_cyclic_reflection(&a, &g, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
    let gens: Vec<(Dense, usize)> = p
        .expressions
        .iter()
        .zip(&p.degrees)
        .map(|(e, &d)| (r.from_poly(e), d as usize))
        .collect();

    // the library generators are invariant and generate every invariant up
    // to degree 3; the oracle's own generator degrees match
    let ours = invariant_generators(&br, &gm, 3);
    let mut dl: Vec<usize> = gens.iter().map(|g| g.1).collect();
    let mut dor: Vec<usize> = ours.iter().map(|g| g.1).collect();
    dl.sort();
    dor.sort();
    ensure(
        dl == dor,
        format!("generator degrees {dl:?} vs oracle {dor:?}"),
    )?;
    for k in 1..=3 {
        let inv = invariant_basis(&br, &gm, k);
        let prods = products_of_degree(&r, &gens, k);
        let mut both = inv.clone();
        both.extend(prods.iter().cloned());
        ensure(
            rank(f, prods) == inv.len() && rank(f, both) == inv.len(),
            format!("degree {k}: generators do not span the invariants"),
        )?;
    }

    // brackets among generators, rewritten in the generators by linear algebra
    let k = gens.len();
    let t = Ring::new(f, k, 5);
    let mut entries = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            let amb = br.bracket(&gens[i].0, &gens[j].0);
            let e = express(&r, &amb, &gens, &t).ok_or("bracket outside the generated ring")?;
            ensure(
                e == t.from_poly(&p.brackets[i][j]),
                format!("bracket ({i},{j}) disagrees with the library"),
            )?;
            entries.push((i, j, e));
        }
    }
    let bt = Bracket::new(t.clone(), &entries);
    let idx = |src: &str| {
        let e = r.from_poly(&a.parse(src).unwrap());
        gens.iter().position(|g| g.0 == e)
    };
    let (ix, iy, iz) = (
        idx("x^3").ok_or("no x^3")?,
        idx("y").ok_or("no y")?,
        idx("z").ok_or("no z")?,
    );
    let (vx, vy, vz) = (t.var(ix), t.var(iy), t.var(iz));
    let printed = bt.bracket(&vx, &vy) == t.scale(&t.mul(&vx, &vy), 3)
        && bt.bracket(&vy, &vz) == t.mul(&vy, &vz)
        && bt.bracket(&vz, &vx) == t.scale(&t.mul(&vx, &vz), 3);
    ensure(printed, "printed brackets not reproduced")?;
    let phi = bt.modular_derivation();
    ensure(
        phi[iy] == t.scale(&vy, f.norm(-2)) && phi[iz] == t.scale(&vz, 2),
        "modular derivation differs",
    )?;
    let a_unimodular = br.modular_derivation().iter().all(|v| r.is_zero(v));
    let ag_unimodular = phi.iter().all(|v| t.is_zero(v));
    let ag = p.to_algebra().ok_or("library presentation has relations")?;
    ensure(
        a_unimodular && !ag_unimodular && is_unimodular(&a) && !is_unimodular(&ag),
        "unimodularity flags differ",
    )?;
    Ok("F_7: generators x^3, y, z by averaging; brackets, phi and flags agree".into())
}

/// O(M_2): normal linear forms are exactly span{b, c}; the reflections
/// are b <-> mu c with xi = -1. Exhaustive over F_5.
pub fn om2_normals_and_reflections() -> Check {
    let f = Fp::new(5);
    let br = om2(f);
    let a = quantum_matrices(2).map_err(|e| e.to_string())?;
    ensure(same_table(&a, &br), "bracket tables differ")?;
    let normals = br.normal_linear_forms();
    ensure(
        normals.len() == f.p as usize + 1 && normals.iter().all(|u| u[0] == 0 && u[3] == 0),
        format!("oracle normal forms {normals:?}"),
    )?;
    let SolutionSet::LinearSubspace(basis) =
        normal_find_deg1(&a, DEFAULT_BUDGET).map_err(|e| e.to_string())?
    else {
        return Err("library: not a single subspace".into());
    };
    let reduced: Vec<Vec<u64>> = basis
        .iter()
        .map(|v| v.iter().map(|x| f.cyclo(x)).collect())
        .collect();
    ensure(
        reduced.len() == 2
            && rank(f, reduced.clone()) == 2
            && reduced.iter().all(|u| u[0] == 0 && u[3] == 0),
        "library span differs",
    )?;

    let refl = br.reflections();
    let minus_one = f.neg(1);
    ensure(
        refl.len() == f.p as usize - 1,
        format!("oracle found {} reflections", refl.len()),
    )?;
    for (m, xi) in &refl {
        ensure(*xi == minus_one, "oracle reflection with xi != -1")?;
        ensure(m.order(100) == Some(2), "oracle reflection not of order 2")?;
        let swap = m.column(0) == vec![1, 0, 0, 0]
            && m.column(3) == vec![0, 0, 0, 1]
            && m.a[1][1] == 0
            && m.a[2][2] == 0
            && m.a[1][2] != 0
            && m.a[2][1] != 0;
        ensure(swap, format!("oracle reflection not a swap: {:?}", m.a))?;
    }
    let ReflectionReport::Families(fams) =
        find_reflections(&a, DEFAULT_BUDGET).map_err(|e| e.to_string())?
    else {
        return Err("library found no family".into());
    };
    for fam in &fams {
        ensure(fam.xi_constant() == Some(c(-1)), "library xi differs")?;
        let g = fam
            .sample(DEFAULT_BUDGET)
            .map_err(|e| e.to_string())?
            .ok_or("empty family")?;
        let m = Mat::from_library(f, g.matrix());
        ensure(
            br.is_automorphism(&m) && m.rank_minus_identity() == 1,
            "library sample fails mod 5",
        )?;
    }
    Ok(format!(
        "F_5: {} normal forms, {} reflections, all swaps with xi = -1",
        normals.len(),
        refl.len()
    ))
}

/// Envelope dimensions and traces for the one-variable trivial bracket and
/// H_1, by rank computations on the word space over F_7.
pub fn envelope_small() -> Check {
    let f = Fp::new(7);
    let r1 = PolyRing::new(["x"]).map_err(|e| e.to_string())?;
    let lib_trivial = PoissonAlgebra::new(r1, vec![], false).map_err(|e| e.to_string())?;
    let lib_h = homogenized_weyl(1).map_err(|e| e.to_string())?;
    let cases = [
        (trivial(f, 1), lib_trivial, vec![c(-1)]),
        (hweyl1(f), lib_h, vec![c(1), c(1), c(-1)]),
    ];
    let mut report = Vec::new();
    for (br, a, diag) in cases {
        ensure(same_table(&a, &br), "bracket tables differ")?;
        let n = br.ring.n;
        let env = Envelope::new(&br);
        let dims = env.dims(3);
        let want: Vec<usize> = (0..=3).map(|k| binomial(2 * n + k - 1, k)).collect();
        let lib = envelope_dims(&a, 3, DEFAULT_DIMS_CAP).map_err(|e| e.to_string())?;
        ensure(
            dims == want && lib == want,
            format!("dims oracle {dims:?}, library {lib:?}"),
        )?;

        let g = GradedMap::new(Matrix::diagonal(&diag)).map_err(|e| e.to_string())?;
        let gm = Mat::from_library(f, g.matrix());
        let tu = env.traces(&doubled(&gm), 3);
        let ta = polynomial_traces(&br, &gm, 3);
        let square: Vec<u64> = (0..=3)
            .map(|k| (0..=k).fold(0, |s, i| f.add(s, f.mul(ta[i], ta[k - i]))))
            .collect();
        let lib_t = envelope_trace(&a, &g).map_err(|e| e.to_string())?;
        let lib_taylor: Vec<u64> = lib_t.series.taylor(3).iter().map(|x| f.cyclo(x)).collect();
        ensure(
            tu == square && tu == lib_taylor,
            format!("traces {tu:?} vs {square:?} vs {lib_taylor:?}"),
        )?;
        ensure(
            doubled(&gm).rank_minus_identity() == 2 && !lib_t.quasi_reflection,
            "quasi-reflection shape",
        )?;
        report.push(format!("n={n}: dims {dims:?}"));
    }
    Ok(format!("F_7: {}", report.join("; ")))
}
