//! Roots of univariate polynomials over Q(zeta_N) of the shape r * zeta_L^k
//! with r rational. This covers rational roots, roots of unity and their
//! rational multiples, which is all the solver promises to enumerate.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::cyclo::{divisors, euler_phi, lcm};
use super::{Cyclo, Rational, UniPoly};

/// Largest |integer| whose divisors we are willing to enumerate.
const DIVISOR_CAP: u64 = 1_000_000_000_000;

/// Distinct roots found, and whether they account for every root.
#[derive(Clone, Debug)]
pub struct Roots {
    pub roots: Vec<Cyclo>,
    pub complete: bool,
}

pub fn find_roots(p: &UniPoly) -> Roots {
    let Some(deg) = p.degree() else {
        return Roots {
            roots: vec![],
            complete: false,
        };
    };
    if deg == 0 {
        return Roots {
            roots: vec![],
            complete: true,
        };
    }
    let sf = p.squarefree_part();
    let target = sf.degree().unwrap_or(0);
    let mut roots: Vec<Cyclo> = Vec::new();
    let push = |roots: &mut Vec<Cyclo>, r: Cyclo| {
        if !roots.contains(&r) {
            roots.push(r);
        }
    };
    if target == 1 {
        let r = -&(&sf.coeff(0) / &sf.coeff(1));
        return Roots {
            roots: vec![r],
            complete: true,
        };
    }
    let mut rest = sf.clone();
    if rest.coeff(0).is_zero() {
        push(&mut roots, Cyclo::zero());
        rest = rest.div_exact(&UniPoly::t()).unwrap().unwrap();
    }
    let m = rest.conductor();
    let phi_m = euler_phi(m) as usize;
    let bound = rest.degree().unwrap_or(0) * phi_m;
    // conductors L = lcm(m, d) with [Q(zeta_L) : Q(zeta_m)] <= deg
    let mut conductors: Vec<u32> = Vec::new();
    let dmax = 2 * (bound * bound).max(2) as u32;
    for d in 1..=dmax {
        let l = lcm(m, d);
        if euler_phi(l) as usize <= bound && !conductors.contains(&l) {
            conductors.push(l);
        }
    }
    conductors.sort_unstable();
    for &l in &conductors {
        if roots.len() == target {
            break;
        }
        for k in 0..l {
            if rest.degree().unwrap_or(0) == 0 {
                break;
            }
            let z = Cyclo::zeta(l, k as i64);
            // roots y of rest(z y) that are rational
            let h = rest.scale_var(&z);
            for r in rational_roots_of(&h) {
                let root = &z * &Cyclo::from_rational(r);
                if !rest.eval(&root).is_zero() {
                    continue;
                }
                push(&mut roots, root.clone());
                rest = rest
                    .div_exact(&UniPoly::new(vec![-&root, Cyclo::one()]))
                    .unwrap()
                    .unwrap();
            }
            if rest.degree() == Some(1) {
                let r = -&(&rest.coeff(0) / &rest.coeff(1));
                push(&mut roots, r);
                rest = UniPoly::one();
            }
        }
    }
    let complete = roots.len() == target;
    Roots { roots, complete }
}

/// Rational roots of a polynomial with Q(zeta_L) coefficients: the common
/// rational roots of its coordinate polynomials.
fn rational_roots_of(h: &UniPoly) -> Vec<Rational> {
    let l = h.conductor();
    let width = euler_phi(l) as usize;
    let comps: Vec<Vec<Rational>> = (0..width)
        .map(|j| {
            h.coeffs()
                .iter()
                .map(|c| {
                    let c = c.lift_to(l);
                    c.coeffs().get(j).cloned().unwrap_or_else(Rational::zero)
                })
                .collect()
        })
        .collect();
    let mut g: Option<UniPoly> = None;
    for comp in comps {
        let p = UniPoly::new(comp.into_iter().map(Cyclo::from_rational).collect());
        if p.is_zero() {
            continue;
        }
        g = Some(match g {
            None => p.monic(),
            Some(q) => q.gcd(&p),
        });
    }
    let Some(g) = g else { return vec![] };
    match g.degree() {
        None | Some(0) => vec![],
        Some(1) => vec![(-&(&g.coeff(0) / &g.coeff(1)))
            .as_rational()
            .unwrap()
            .clone()],
        Some(_) => rational_root_test(&g),
    }
}

fn rational_root_test(g: &UniPoly) -> Vec<Rational> {
    let coeffs: Vec<Rational> = g
        .coeffs()
        .iter()
        .map(|c| c.as_rational().unwrap().clone())
        .collect();
    let den_lcm = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| (c * Rational::from_integer(den_lcm.clone())).to_integer())
        .collect();
    let mut out = Vec::new();
    let mut shift = 0;
    while ints[shift].is_zero() {
        shift += 1;
    }
    if shift > 0 {
        out.push(Rational::zero());
    }
    let a0 = ints[shift].abs();
    let an = ints.last().unwrap().abs();
    let (Some(a0), Some(an)) = (a0.to_u64(), an.to_u64()) else {
        return out;
    };
    if a0 > DIVISOR_CAP || an > DIVISOR_CAP {
        return out;
    }
    let eval = |r: &Rational| -> bool {
        let mut acc = Rational::zero();
        for c in coeffs.iter().rev() {
            acc = acc * r + c;
        }
        acc.is_zero()
    };
    for p in small_divisors(a0) {
        for q in small_divisors(an) {
            for s in [1i64, -1] {
                let r = Rational::new(BigInt::from(p) * s, BigInt::from(q));
                if !out.contains(&r) && eval(&r) {
                    out.push(r);
                }
            }
        }
    }
    out
}

fn small_divisors(n: u64) -> Vec<u64> {
    if n <= u32::MAX as u64 && n < 100_000 {
        return divisors(n as u32).into_iter().map(u64::from).collect();
    }
    let mut out = Vec::new();
    let mut i = 1u64;
    while i * i <= n {
        if n % i == 0 {
            out.push(i);
            if i * i != n {
                out.push(n / i);
            }
        }
        i += 1;
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn has(roots: &[Cyclo], r: &Cyclo) -> bool {
        roots.iter().any(|x| x == r)
    }

    #[test]
    fn cube_roots_of_unity() {
        let p = UniPoly::from_ints(&[-1, 0, 0, 1]);
        let r = find_roots(&p);
        assert!(r.complete);
        assert_eq!(r.roots.len(), 3);
        for k in 0..3 {
            assert!(has(&r.roots, &Cyclo::zeta(3, k)));
        }
    }

    #[test]
    fn rational_and_scaled_roots() {
        // (2t - 1)(t^2 + 4)
        let p = &UniPoly::from_ints(&[-1, 2]) * &UniPoly::from_ints(&[4, 0, 1]);
        let r = find_roots(&p);
        assert!(r.complete, "{:?}", r);
        assert!(has(&r.roots, &Cyclo::from_frac(1, 2)));
        assert!(has(&r.roots, &(Cyclo::zeta(4, 1) * Cyclo::from_int(2))));
    }

    #[test]
    fn irrational_roots_are_reported_incomplete() {
        let r = find_roots(&UniPoly::from_ints(&[-2, 0, 1]));
        assert!(!r.complete);
        assert!(r.roots.is_empty());
    }

    #[test]
    fn cyclotomic_coefficients() {
        // (t - zeta3)(t - 2)
        let w = Cyclo::zeta(3, 1);
        let p = &UniPoly::new(vec![-&w, Cyclo::one()]) * &UniPoly::from_ints(&[-2, 1]);
        let r = find_roots(&p);
        assert!(r.complete);
        assert!(has(&r.roots, &w));
        assert!(has(&r.roots, &Cyclo::from_int(2)));
    }
}
