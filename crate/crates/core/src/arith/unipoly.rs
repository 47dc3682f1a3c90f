use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::Cyclo;
use crate::error::{Error, Result};

/// Dense univariate polynomial over Q(zeta), constant term first.
/// The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct UniPoly {
    c: Vec<Cyclo>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { c: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Cyclo::one())
    }

    pub fn constant(v: Cyclo) -> Self {
        Self::new(vec![v])
    }

    /// The polynomial `t`.
    pub fn t() -> Self {
        Self::new(vec![Cyclo::zero(), Cyclo::one()])
    }

    /// `1 - a t`
    pub fn one_minus(a: &Cyclo) -> Self {
        Self::new(vec![Cyclo::one(), -a])
    }

    pub fn new(mut c: Vec<Cyclo>) -> Self {
        while c.last().is_some_and(Cyclo::is_zero) {
            c.pop();
        }
        UniPoly { c }
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Self::new(v.iter().map(|&x| Cyclo::from_int(x)).collect())
    }

    pub fn coeffs(&self) -> &[Cyclo] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> Cyclo {
        self.c.get(i).cloned().unwrap_or_else(Cyclo::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&Cyclo> {
        self.c.last()
    }

    pub fn scale(&self, s: &Cyclo) -> Self {
        Self::new(self.c.iter().map(|v| v * s).collect())
    }

    pub fn monic(&self) -> Self {
        match self.lead() {
            None => Self::zero(),
            Some(l) => self.scale(&l.inv().expect("nonzero lead")),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, x: &Cyclo) -> Cyclo {
        let mut acc = Cyclo::zero();
        for c in self.c.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// p(a t)
    pub fn scale_var(&self, a: &Cyclo) -> Self {
        let mut pw = Cyclo::one();
        let mut out = Vec::with_capacity(self.c.len());
        for c in &self.c {
            out.push(c * &pw);
            pw = &pw * a;
        }
        Self::new(out)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, v)| v * &Cyclo::from_int(i as i64))
                .collect(),
        )
    }

    pub fn divrem(&self, d: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let dd = d.degree().ok_or(Error::DivisorZero)?;
        let mut r = self.c.clone();
        if r.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let inv = d.c[dd].inv()?;
        let mut q = vec![Cyclo::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = &r[i + dd] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, dj) in d.c.iter().enumerate() {
                r[i + j] -= &(&c * dj);
            }
            q[i] = c;
        }
        r.truncate(dd);
        Ok((Self::new(q), Self::new(r)))
    }

    /// Exact quotient, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &UniPoly) -> Result<Option<UniPoly>> {
        let (q, r) = self.divrem(d)?;
        Ok(r.is_zero().then_some(q))
    }

    /// Monic gcd; gcd(0, 0) = 0.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn squarefree_part(&self) -> UniPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_exact(&g)
            .expect("gcd nonzero")
            .expect("gcd divides")
            .monic()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree().unwrap_or(0) == 0
    }

    /// Least common conductor of the coefficients.
    pub fn conductor(&self) -> u32 {
        self.c
            .iter()
            .fold(1, |m, v| super::cyclo::lcm(m, v.conductor()))
    }

    /// Render with the given variable name.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, c) in self.c.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mon = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            let lit = c.to_string();
            let (neg, body) = if c.is_single_term() && lit.starts_with('-') {
                (true, lit[1..].to_string())
            } else {
                (false, lit)
            };
            let body = if !c.is_single_term() {
                format!("({body})")
            } else {
                body
            };
            let term = if mon.is_empty() {
                body
            } else if body == "1" {
                mon
            } else {
                format!("{body}*{mon}")
            };
            if s.is_empty() {
                s = if neg { format!("-{term}") } else { term };
            } else {
                s.push_str(if neg { " - " } else { " + " });
                s.push_str(&term);
            }
        }
        s
    }
}

impl<'a> Add<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &'a UniPoly) -> UniPoly {
        let n = self.c.len().max(rhs.c.len());
        UniPoly::new((0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &'a UniPoly) -> UniPoly {
        let n = self.c.len().max(rhs.c.len());
        UniPoly::new((0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &'a UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Cyclo::zero(); self.c.len() + rhs.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        UniPoly::new(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.c.iter().map(|v| -v).collect())
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("t"))
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({})", self.render("t"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divrem_and_gcd() {
        // (t^2 - 1) = (t - 1)(t + 1)
        let a = UniPoly::from_ints(&[-1, 0, 1]);
        let b = UniPoly::from_ints(&[-1, 1]);
        let (q, r) = a.divrem(&b).unwrap();
        assert_eq!(q, UniPoly::from_ints(&[1, 1]));
        assert!(r.is_zero());
        let g = a.gcd(&UniPoly::from_ints(&[1, 2, 1]));
        assert_eq!(g, UniPoly::from_ints(&[1, 1]));
        assert_eq!(a.divrem(&UniPoly::zero()), Err(Error::DivisorZero));
    }

    #[test]
    fn squarefree() {
        let p = UniPoly::from_ints(&[1, 2, 1]);
        assert!(!p.is_squarefree());
        assert_eq!(p.squarefree_part(), UniPoly::from_ints(&[1, 1]));
    }

    #[test]
    fn render() {
        let p = UniPoly::new(vec![
            Cyclo::one(),
            Cyclo::zeta(3, 1) + Cyclo::one(),
            Cyclo::from_int(-2),
        ]);
        assert_eq!(p.to_string(), "1 + (1 + zeta(3))*t - 2*t^2");
    }
}
