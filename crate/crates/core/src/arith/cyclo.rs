use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::rc::Rc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rational;
use crate::error::{Error, Result};

thread_local! {
    static PHI_CACHE: RefCell<HashMap<u32, Rc<Vec<i64>>>> = RefCell::new(HashMap::new());
}

/// Euler's totient.
pub fn euler_phi(n: u32) -> u32 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

pub fn divisors(n: u32) -> Vec<u32> {
    let mut out: Vec<u32> = (1..=n).filter(|d| n % d == 0).collect();
    out.sort_unstable();
    out
}

pub fn lcm(a: u32, b: u32) -> u32 {
    a / a.gcd(&b) * b
}

/// Integer coefficients (constant term first) of the n-th cyclotomic
/// polynomial.
pub fn cyclotomic_poly(n: u32) -> Rc<Vec<i64>> {
    assert!(n >= 1, "cyclotomic polynomial of index 0");
    if let Some(p) = PHI_CACHE.with(|c| c.borrow().get(&n).cloned()) {
        return p;
    }
    // x^n - 1 divided by every Phi_d with d | n, d < n
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let den = cyclotomic_poly(d);
        num = exact_div_i64(&num, &den);
    }
    let p = Rc::new(num);
    PHI_CACHE.with(|c| c.borrow_mut().insert(n, p.clone()));
    p
}

fn exact_div_i64(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qlen = rem.len() - dd;
    let mut q = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dd];
        q[i] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[i + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

/// Reduce a coefficient vector modulo Phi_n in place, returning a vector of
/// length phi(n).
fn reduce_mod_phi(mut a: Vec<Rational>, n: u32) -> Vec<Rational> {
    let phi = cyclotomic_poly(n);
    let deg = phi.len() - 1;
    if a.len() <= deg {
        a.resize(deg, Rational::zero());
        return a;
    }
    for i in (deg..a.len()).rev() {
        if a[i].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut a[i], Rational::zero());
        for (j, &pj) in phi.iter().enumerate().take(deg) {
            if pj != 0 {
                a[i - deg + j] -= &c * Rational::from_integer(BigInt::from(pj));
            }
        }
    }
    a.truncate(deg);
    a
}

/// An element of the cyclotomic field Q(zeta_N), stored as coefficients of
/// 1, zeta, ..., zeta^(phi(N)-1) modulo Phi_N.
///
/// Elements whose value is rational are kept at conductor 1, and conductor
/// 2 is identified with 1. No further descent is attempted automatically;
/// see [`Cyclo::descend`].
#[derive(Clone)]
pub struct Cyclo {
    n: u32,
    c: Vec<Rational>,
}

impl Cyclo {
    pub fn zero() -> Self {
        Cyclo {
            n: 1,
            c: vec![Rational::zero()],
        }
    }

    pub fn one() -> Self {
        Cyclo {
            n: 1,
            c: vec![Rational::one()],
        }
    }

    pub fn from_rational(r: Rational) -> Self {
        Cyclo { n: 1, c: vec![r] }
    }

    pub fn from_int(i: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(i)))
    }

    pub fn from_frac(num: i64, den: i64) -> Self {
        Self::from_rational(Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// zeta_n^power in canonical form.
    pub fn zeta(n: u32, power: i64) -> Self {
        assert!(n >= 1, "conductor must be positive");
        let k = power.rem_euclid(n as i64) as usize;
        let mut a = vec![Rational::zero(); k + 1];
        a[k] = Rational::one();
        Self::from_raw(n, a)
    }

    /// Build from an arbitrary-length coefficient vector in powers of zeta_n.
    pub fn from_raw(n: u32, coeffs: Vec<Rational>) -> Self {
        let c = reduce_mod_phi(coeffs, n);
        Cyclo { n, c }.normalized()
    }

    fn normalized(mut self) -> Self {
        if self.n == 1 {
            return self;
        }
        if self.n == 2 || self.c.iter().skip(1).all(Zero::is_zero) {
            self.c.truncate(1);
            self.n = 1;
        }
        self
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.n == 1 && self.c[0].is_one()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        if self.n == 1 {
            Some(&self.c[0])
        } else {
            None
        }
    }

    /// Lift into Q(zeta_m); `m` must be a multiple of the conductor.
    pub fn lift_to(&self, m: u32) -> Cyclo {
        assert!(m % self.n == 0, "cannot lift conductor {} to {}", self.n, m);
        if m == self.n {
            return self.clone();
        }
        let step = (m / self.n) as usize;
        let mut a = vec![Rational::zero(); (self.c.len() - 1) * step + 1];
        for (k, ck) in self.c.iter().enumerate() {
            a[k * step] = ck.clone();
        }
        // keep the lifted representation even if it collapses later
        Cyclo {
            n: m,
            c: reduce_mod_phi(a, m),
        }
    }

    fn raw_lifted_pair(&self, other: &Cyclo) -> (u32, Vec<Rational>, Vec<Rational>) {
        if self.n == other.n {
            return (self.n, self.c.clone(), other.c.clone());
        }
        let m = lcm(self.n, other.n);
        (m, self.lift_to(m).c, other.lift_to(m).c)
    }

    pub fn inv(&self) -> Result<Cyclo> {
        if self.is_zero() {
            return Err(Error::ZeroElement);
        }
        if self.n == 1 {
            return Ok(Cyclo::from_rational(self.c[0].recip()));
        }
        // extended Euclid on a(x) and Phi_n(x) over Q
        let phi: Vec<Rational> = cyclotomic_poly(self.n)
            .iter()
            .map(|&v| Rational::from_integer(BigInt::from(v)))
            .collect();
        let (g, s, _) = qpoly_ext_gcd(&trim(self.c.clone()), &phi);
        debug_assert_eq!(g.len(), 1);
        let ginv = g[0].recip();
        let s: Vec<Rational> = s.into_iter().map(|v| v * &ginv).collect();
        Ok(Cyclo::from_raw(self.n, s))
    }

    pub fn pow(&self, e: i64) -> Result<Cyclo> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        let mut base = self.clone();
        let mut acc = Cyclo::one();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Least m with self^m = 1, or `None` when self is not a root of unity.
    pub fn root_of_unity_order(&self) -> Result<Option<u32>> {
        if self.is_zero() {
            return Err(Error::ZeroElement);
        }
        let bound = lcm(2, self.n);
        for d in divisors(bound) {
            if self.pow(d as i64)?.is_one() {
                return Ok(Some(d));
            }
        }
        Ok(None)
    }

    /// Smallest conductor d | N such that the value lies in Q(zeta_d).
    pub fn descend(&self) -> Cyclo {
        if self.n == 1 {
            return self.clone();
        }
        for d in divisors(self.n) {
            if d == self.n {
                break;
            }
            if let Some(y) = self.try_descend_to(d) {
                return y;
            }
        }
        self.clone()
    }

    fn try_descend_to(&self, d: u32) -> Option<Cyclo> {
        // solve lift_d(y) = self, y in Q^phi(d)
        let k = euler_phi(d) as usize;
        let cols: Vec<Vec<Rational>> = (0..k)
            .map(|i| Cyclo::zeta(d, i as i64).lift_to(self.n).c)
            .collect();
        let rows = self.c.len();
        let mut m: Vec<Vec<Rational>> = (0..rows)
            .map(|r| {
                let mut row: Vec<Rational> = cols.iter().map(|c| c[r].clone()).collect();
                row.push(self.c[r].clone());
                row
            })
            .collect();
        let mut piv_cols = Vec::new();
        let mut r = 0;
        for col in 0..k {
            let Some(p) = (r..rows).find(|&i| !m[i][col].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            let inv = m[r][col].recip();
            for v in m[r].iter_mut() {
                *v *= &inv;
            }
            for i in 0..rows {
                if i != r && !m[i][col].is_zero() {
                    let f = m[i][col].clone();
                    for j in 0..=k {
                        let t = &m[r][j] * &f;
                        m[i][j] -= t;
                    }
                }
            }
            piv_cols.push(col);
            r += 1;
        }
        if m[r..].iter().any(|row| !row[k].is_zero()) {
            return None;
        }
        let mut y = vec![Rational::zero(); k];
        for (i, &col) in piv_cols.iter().enumerate() {
            y[col] = m[i][k].clone();
        }
        Some(Cyclo::from_raw(d, y))
    }

    /// Apply the Galois automorphism zeta_N -> zeta_N^k (k coprime to N).
    pub fn galois(&self, k: u32) -> Cyclo {
        if self.n == 1 {
            return self.clone();
        }
        let n = self.n as usize;
        let mut a = vec![Rational::zero(); n];
        for (i, ci) in self.c.iter().enumerate() {
            if !ci.is_zero() {
                a[(i * k as usize) % n] += ci;
            }
        }
        Cyclo::from_raw(self.n, a)
    }

    /// Parseable literal, e.g. `-1/2`, `zeta(3)`, `1 + 2*zeta(3)`.
    pub fn to_literal(&self) -> String {
        self.to_string()
    }

    /// True when the printed literal is a single signed term.
    pub fn is_single_term(&self) -> bool {
        self.c.iter().filter(|v| !v.is_zero()).count() <= 1
    }
}

fn trim(mut v: Vec<Rational>) -> Vec<Rational> {
    while v.len() > 1 && v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn qpoly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let b = trim(b.to_vec());
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    if r.len() <= db {
        return (vec![Rational::zero()], r);
    }
    let lead_inv = b[db].recip();
    let mut q = vec![Rational::zero(); r.len() - db];
    for i in (0..q.len()).rev() {
        let c = &r[i + db] * &lead_inv;
        if c.is_zero() {
            continue;
        }
        for j in 0..=db {
            let t = &c * &b[j];
            r[i + j] -= t;
        }
        q[i] = c;
    }
    r.truncate(db.max(1));
    (trim(q), trim(r))
}

fn qpoly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    trim(out)
}

fn qpoly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, v) in a.iter().enumerate() {
        out[i] += v;
    }
    for (i, v) in b.iter().enumerate() {
        out[i] -= v;
    }
    trim(out)
}

/// Returns (g, s, t) with s*a + t*b = g over Q[x].
fn qpoly_ext_gcd(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>, Vec<Rational>) {
    let is_zero = |v: &[Rational]| v.len() == 1 && v[0].is_zero();
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    let (mut s0, mut s1) = (vec![Rational::one()], vec![Rational::zero()]);
    let (mut t0, mut t1) = (vec![Rational::zero()], vec![Rational::one()]);
    while !is_zero(&r1) {
        let (q, r) = qpoly_divrem(&r0, &r1);
        let s2 = qpoly_sub(&s0, &qpoly_mul(&q, &s1));
        let t2 = qpoly_sub(&t0, &qpoly_mul(&q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    (r0, s0, t0)
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Self) -> bool {
        if self.n == other.n {
            return self.c == other.c;
        }
        let (_, a, b) = self.raw_lifted_pair(other);
        a == b
    }
}

impl Eq for Cyclo {}

impl<'a> Add<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn add(self, rhs: &'a Cyclo) -> Cyclo {
        if self.n == 1 && rhs.n == 1 {
            return Cyclo::from_rational(&self.c[0] + &rhs.c[0]);
        }
        let (m, mut a, b) = self.raw_lifted_pair(rhs);
        for (x, y) in a.iter_mut().zip(b) {
            *x += y;
        }
        Cyclo { n: m, c: a }.normalized()
    }
}

impl<'a> Sub<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn sub(self, rhs: &'a Cyclo) -> Cyclo {
        if self.n == 1 && rhs.n == 1 {
            return Cyclo::from_rational(&self.c[0] - &rhs.c[0]);
        }
        let (m, mut a, b) = self.raw_lifted_pair(rhs);
        for (x, y) in a.iter_mut().zip(b) {
            *x -= y;
        }
        Cyclo { n: m, c: a }.normalized()
    }
}

impl<'a> Mul<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn mul(self, rhs: &'a Cyclo) -> Cyclo {
        if self.n == 1 && rhs.n == 1 {
            return Cyclo::from_rational(&self.c[0] * &rhs.c[0]);
        }
        if self.n == 1 {
            return rhs.scale(&self.c[0]);
        }
        if rhs.n == 1 {
            return self.scale(&rhs.c[0]);
        }
        let (m, a, b) = self.raw_lifted_pair(rhs);
        let mut prod = vec![Rational::zero(); a.len() + b.len() - 1];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if !bj.is_zero() {
                    prod[i + j] += ai * bj;
                }
            }
        }
        Cyclo::from_raw(m, prod)
    }
}

impl Cyclo {
    fn scale(&self, r: &Rational) -> Cyclo {
        if r.is_zero() {
            return Cyclo::zero();
        }
        Cyclo {
            n: self.n,
            c: self.c.iter().map(|v| v * r).collect(),
        }
    }
}

impl<'a> Div<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    /// Panics on division by zero; use [`Cyclo::inv`] for a fallible path.
    fn div(self, rhs: &'a Cyclo) -> Cyclo {
        self * &rhs.inv().expect("division by zero in Q(zeta)")
    }
}

impl Neg for &Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo {
            n: self.n,
            c: self.c.iter().map(|v| -v).collect(),
        }
    }
}

impl Neg for Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Cyclo> for Cyclo {
            type Output = Cyclo;
            fn $m(self, rhs: Cyclo) -> Cyclo {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Cyclo> for Cyclo {
            type Output = Cyclo;
            fn $m(self, rhs: &'a Cyclo) -> Cyclo {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&Cyclo> for Cyclo {
    fn add_assign(&mut self, rhs: &Cyclo) {
        if self.n == rhs.n {
            for (x, y) in self.c.iter_mut().zip(&rhs.c) {
                *x += y;
            }
            if self.n != 1 {
                *self = std::mem::replace(self, Cyclo::zero()).normalized();
            }
        } else {
            *self = &*self + rhs;
        }
    }
}

impl SubAssign<&Cyclo> for Cyclo {
    fn sub_assign(&mut self, rhs: &Cyclo) {
        if self.n == rhs.n {
            for (x, y) in self.c.iter_mut().zip(&rhs.c) {
                *x -= y;
            }
            if self.n != 1 {
                *self = std::mem::replace(self, Cyclo::zero()).normalized();
            }
        } else {
            *self = &*self - rhs;
        }
    }
}

impl MulAssign<&Cyclo> for Cyclo {
    fn mul_assign(&mut self, rhs: &Cyclo) {
        *self = &*self * rhs;
    }
}

impl From<i64> for Cyclo {
    fn from(v: i64) -> Self {
        Cyclo::from_int(v)
    }
}

impl From<Rational> for Cyclo {
    fn from(v: Rational) -> Self {
        Cyclo::from_rational(v)
    }
}

fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n == 1 {
            return write!(f, "{}", fmt_rational(&self.c[0]));
        }
        let mut first = true;
        for (k, ck) in self.c.iter().enumerate() {
            if ck.is_zero() {
                continue;
            }
            let zeta = match k {
                0 => String::new(),
                1 => format!("zeta({})", self.n),
                _ => format!("zeta({})^{}", self.n, k),
            };
            let neg = ck.is_negative();
            let abs = ck.abs();
            let body = if k == 0 {
                fmt_rational(&abs)
            } else if abs.is_one() {
                zeta
            } else {
                format!("{}*{}", fmt_rational(&abs), zeta)
            };
            match (first, neg) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, "{body}")?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclo[{}]({})", self.n, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polys() {
        assert_eq!(*cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_poly(3), vec![1, 1, 1]);
        assert_eq!(*cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_poly(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
        for n in 1..40 {
            assert_eq!(cyclotomic_poly(n).len() as u32 - 1, euler_phi(n));
        }
    }

    #[test]
    fn make_examples() {
        assert!(Cyclo::zeta(1, 0).is_one());
        assert_eq!(Cyclo::zeta(4, 2), Cyclo::from_int(-1));
        let s = Cyclo::zeta(3, 1) + Cyclo::zeta(3, 2);
        assert_eq!(s, Cyclo::from_int(-1));
        assert_eq!(s.conductor(), 1);
    }

    #[test]
    fn root_of_unity_examples() {
        assert_eq!(Cyclo::one().root_of_unity_order().unwrap(), Some(1));
        assert_eq!(Cyclo::zeta(3, 1).root_of_unity_order().unwrap(), Some(3));
        assert_eq!(Cyclo::from_frac(1, 2).root_of_unity_order().unwrap(), None);
        assert_eq!(Cyclo::from_int(-1).root_of_unity_order().unwrap(), Some(2));
        // -zeta_3 is a primitive sixth root
        assert_eq!((-Cyclo::zeta(3, 1)).root_of_unity_order().unwrap(), Some(6));
        assert_eq!(Cyclo::zero().root_of_unity_order(), Err(Error::ZeroElement));
        assert_eq!(
            (Cyclo::zeta(3, 1) + Cyclo::one())
                .root_of_unity_order()
                .unwrap(),
            Some(6)
        );
    }

    #[test]
    fn mixed_conductors_and_descent() {
        let i = Cyclo::zeta(4, 1);
        let w = Cyclo::zeta(3, 1);
        let p = &i * &w;
        assert_eq!(p.conductor(), 12);
        assert_eq!(p.pow(12).unwrap(), Cyclo::one());
        assert_eq!(p.root_of_unity_order().unwrap(), Some(12));
        // zeta_12^4 = zeta_3
        let z = Cyclo::zeta(12, 4);
        assert_eq!(z, w);
        assert_eq!(z.descend().conductor(), 3);
        // zeta_6 lives in Q(zeta_3)
        assert_eq!(Cyclo::zeta(6, 1).descend().conductor(), 3);
    }

    #[test]
    fn inverse_and_galois() {
        let a = Cyclo::from_int(2) + Cyclo::zeta(5, 2);
        let ai = a.inv().unwrap();
        assert!((&a * &ai).is_one());
        let w = Cyclo::zeta(3, 1);
        assert_eq!(w.galois(2), Cyclo::zeta(3, 2));
    }

    #[test]
    fn display() {
        assert_eq!(Cyclo::from_frac(-1, 2).to_string(), "-1/2");
        assert_eq!(Cyclo::zeta(3, 1).to_string(), "zeta(3)");
        assert_eq!(
            (Cyclo::from_int(1) + Cyclo::zeta(3, 1) * Cyclo::from_int(2)).to_string(),
            "1 + 2*zeta(3)"
        );
        assert_eq!(Cyclo::zeta(3, 2).to_string(), "-1 - zeta(3)");
    }
}
