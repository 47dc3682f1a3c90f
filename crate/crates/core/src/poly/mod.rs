//! Sparse multivariate polynomials over Q(zeta) in graded lexicographic
//! order, with a small expression parser.

mod parse;
mod ring;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::arith::Cyclo;
use crate::error::{Error, Result};
use crate::linalg::Matrix;

pub use ring::PolyRing;

/// Degrees above this are rejected.
pub const MAX_DEGREE: u64 = 1 << 31;

/// Exponent vector, ordered graded-lexicographically (x_1 > x_2 > ...).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mono(pub Vec<u32>);

impl Mono {
    pub fn one(n: usize) -> Self {
        Mono(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Mono(e)
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        Mono(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| {
                    a.checked_add(*b)
                        .filter(|&s| (s as u64) < MAX_DEGREE)
                        .expect("exponent overflow")
                })
                .collect(),
        )
    }

    pub fn divides(&self, other: &Mono) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// other / self, assuming self divides other.
    pub fn quotient(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| b - a).collect())
    }

    pub fn lcm(&self, other: &Mono) -> Mono {
        Mono(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Mono) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials of degree `d` in `n` variables, in decreasing grlex order.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Mono> {
    fn go(n: usize, i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Mono>) {
        if i + 1 == n {
            cur.push(left);
            out.push(Mono(cur.clone()));
            cur.pop();
            return;
        }
        for e in (0..=left).rev() {
            cur.push(e);
            go(n, i + 1, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Mono(vec![]));
        }
        return out;
    }
    go(n, 0, d, &mut Vec::with_capacity(n), &mut out);
    out
}

/// A degree-one element, as its coefficient vector.
pub type LinearForm = Vec<Cyclo>;

/// Polynomial in `nvars` variables. Variable names live in [`PolyRing`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Mono, Cyclo>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Cyclo::one())
    }

    pub fn constant(nvars: usize, c: Cyclo) -> Self {
        Self::monomial(nvars, Mono::one(nvars), c)
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::monomial(nvars, Mono::var(nvars, i), Cyclo::one())
    }

    pub fn monomial(nvars: usize, m: Mono, c: Cyclo) -> Self {
        debug_assert_eq!(m.0.len(), nvars);
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { nvars, terms }
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Mono, Cyclo)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub fn from_linear_form(l: &[Cyclo]) -> Self {
        let n = l.len();
        Self::from_terms(
            n,
            l.iter()
                .enumerate()
                .map(|(i, c)| (Mono::var(n, i), c.clone())),
        )
    }

    /// Coefficients of a homogeneous degree-one polynomial.
    pub fn to_linear_form(&self) -> Option<LinearForm> {
        let mut v = vec![Cyclo::zero(); self.nvars];
        for (m, c) in &self.terms {
            if m.degree() != 1 {
                return None;
            }
            let i = m.0.iter().position(|&e| e == 1).unwrap();
            v[i] = c.clone();
        }
        Some(v)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &Cyclo)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Mono, Cyclo> {
        self.terms
    }

    pub fn term_map(&self) -> &BTreeMap<Mono, Cyclo> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Mono) -> Cyclo {
        self.terms.get(m).cloned().unwrap_or_else(Cyclo::zero)
    }

    pub fn constant_term(&self) -> Cyclo {
        self.coeff(&Mono::one(self.nvars))
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Mono::is_one)
    }

    /// Leading term in grlex order.
    pub fn leading(&self) -> Option<(&Mono, &Cyclo)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().next_back().map(Mono::degree)
    }

    pub fn min_degree(&self) -> Option<u64> {
        self.terms.keys().next().map(Mono::degree)
    }

    pub fn is_homogeneous(&self) -> bool {
        match (self.min_degree(), self.total_degree()) {
            (Some(a), Some(b)) => a == b,
            _ => true,
        }
    }

    pub fn homogeneous_component(&self, d: u64) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Degrees of the nonzero homogeneous components, ascending.
    pub fn degrees(&self) -> Vec<u64> {
        let mut d: Vec<u64> = self.terms.keys().map(Mono::degree).collect();
        d.dedup();
        d
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0)
    }

    /// Indices of variables that occur.
    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.nvars)
            .filter(|&i| self.terms.keys().any(|m| m.0[i] > 0))
            .collect()
    }

    pub fn add_term(&mut self, m: Mono, c: &Cyclo) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Poly, s: &Cyclo) {
        if s.is_zero() {
            return;
        }
        for (m, c) in &other.terms {
            self.add_term(m.clone(), &(c * s));
        }
    }

    pub fn scale(&self, s: &Cyclo) -> Poly {
        if s.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Mono, s: &Cyclo) -> Poly {
        if s.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c * s)).collect(),
        }
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv().expect("nonzero")),
        }
    }

    pub fn pow(&self, e: u32) -> Result<Poly> {
        if let Some(d) = self.total_degree() {
            if d * e as u64 >= MAX_DEGREE {
                return Err(Error::ExponentOverflow);
            }
        }
        let mut acc = Poly::one(self.nvars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    pub fn partial(&self, i: usize) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut d = m.clone();
            d.0[i] -= 1;
            out.add_term(d, &(c * &Cyclo::from_int(e as i64)));
        }
        out
    }

    /// Substitute x_i -> images[i]; the result lives in the images' ring.
    pub fn substitute(&self, images: &[Poly]) -> Poly {
        assert_eq!(images.len(), self.nvars, "one image per variable");
        let target = images.first().map_or(0, Poly::nvars);
        let mut out = Poly::zero(target);
        // cache powers per variable
        let mut powers: Vec<Vec<Poly>> = images
            .iter()
            .map(|p| vec![Poly::one(target), p.clone()])
            .collect();
        for (m, c) in &self.terms {
            let mut t = Poly::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][e as usize];
            }
            out.add_scaled(&t, &Cyclo::one());
        }
        out
    }

    pub fn eval(&self, point: &[Cyclo]) -> Cyclo {
        let mut acc = Cyclo::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = &t * &point[i].pow(e as i64).expect("nonnegative power");
                }
            }
            acc += &t;
        }
        acc
    }

    /// Re-embed into a ring with `nvars` variables, variable i going to
    /// position `offset + i`.
    pub fn embed(&self, nvars: usize, offset: usize) -> Poly {
        let mut out = Poly::zero(nvars);
        for (m, c) in &self.terms {
            let mut e = vec![0; nvars];
            e[offset..offset + self.nvars].copy_from_slice(&m.0);
            out.terms.insert(Mono(e), c.clone());
        }
        out
    }

    /// Rename variables: variable i goes to position `map[i]` in a ring
    /// with `nvars` variables.
    pub fn remap(&self, nvars: usize, map: &[usize]) -> Poly {
        let mut out = Poly::zero(nvars);
        for (m, c) in &self.terms {
            let mut e = vec![0; nvars];
            for (i, &x) in m.0.iter().enumerate() {
                e[map[i]] += x;
            }
            out.add_term(Mono(e), c);
        }
        out
    }

    /// Apply a graded map, column convention: x_i -> sum_j g[j][i] x_j.
    pub fn apply_linear(&self, g: &Matrix) -> Result<Poly> {
        if g.rows() != self.nvars || g.cols() != self.nvars {
            return Err(Error::Dimension(format!(
                "{}x{} map on {} variables",
                g.rows(),
                g.cols(),
                self.nvars
            )));
        }
        if g.det()?.is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(self.apply_linear_unchecked(g))
    }

    pub(crate) fn apply_linear_unchecked(&self, g: &Matrix) -> Poly {
        let images: Vec<Poly> = (0..self.nvars)
            .map(|i| Poly::from_linear_form(&g.column(i)))
            .collect();
        self.substitute(&images)
    }

    /// Exact quotient f / u if u divides f.
    pub fn divides(u: &Poly, f: &Poly) -> Result<Option<Poly>> {
        let (lm, lc) = u.leading().ok_or(Error::DivisorZero)?;
        let lc_inv = lc.inv()?;
        let mut r = f.clone();
        let mut q = Poly::zero(f.nvars);
        while let Some((m, c)) = r.leading().map(|(m, c)| (m.clone(), c.clone())) {
            if !lm.divides(&m) {
                return Ok(None);
            }
            let qm = lm.quotient(&m);
            let qc = &c * &lc_inv;
            r.add_scaled(&u.mul_term(&qm, &Cyclo::one()), &-&qc);
            q.add_term(qm, &qc);
        }
        Ok(Some(q))
    }

    /// Least common conductor of the coefficients.
    pub fn conductor(&self) -> u32 {
        self.terms
            .values()
            .fold(1, |m, c| crate::arith::cyclo::lcm(m, c.conductor()))
    }

    /// Coefficients of this polynomial viewed in the variables `keep`, with
    /// the remaining variables folded into coefficient polynomials.
    /// Returned keys are exponent vectors over `keep`.
    pub fn coefficients_in(&self, keep: &[usize]) -> BTreeMap<Vec<u32>, Poly> {
        let mut out: BTreeMap<Vec<u32>, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let key: Vec<u32> = keep.iter().map(|&i| m.0[i]).collect();
            let mut rest = m.clone();
            for &i in keep {
                rest.0[i] = 0;
            }
            out.entry(key)
                .or_insert_with(|| Poly::zero(self.nvars))
                .add_term(rest, c);
        }
        out.retain(|_, p| !p.is_zero());
        out
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &'a Poly) -> Poly {
        let mut out = self.clone();
        out.add_scaled(rhs, &Cyclo::one());
        out
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &'a Poly) -> Poly {
        let mut out = self.clone();
        out.add_scaled(rhs, &Cyclo::from_int(-1));
        out
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &'a Poly) -> Poly {
        let mut out = Poly::zero(self.nvars.max(rhs.nvars));
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&Cyclo::from_int(-1))
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
