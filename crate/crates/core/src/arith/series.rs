use std::fmt;

use super::{Cyclo, UniPoly};
use crate::error::{Error, Result};

/// A rational function num/den in t, kept reduced with den(0) = 1.
#[derive(Clone, Debug)]
pub struct RationalSeries {
    num: UniPoly,
    den: UniPoly,
}

impl RationalSeries {
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisorZero);
        }
        let c0 = den.coeff(0);
        if c0.is_zero() {
            return Err(Error::Input("series denominator vanishes at t = 0".into()));
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.degree().unwrap_or(0) > 0 {
            (
                num.div_exact(&g)?.expect("gcd divides"),
                den.div_exact(&g)?.expect("gcd divides"),
            )
        } else {
            (num, den)
        };
        let inv = den.coeff(0).inv()?;
        num = num.scale(&inv);
        den = den.scale(&inv);
        Ok(RationalSeries { num, den })
    }

    pub fn polynomial(p: UniPoly) -> Self {
        RationalSeries {
            num: p,
            den: UniPoly::one(),
        }
    }

    /// 1 / prod(factors)
    pub fn inverse_product(factors: &[UniPoly]) -> Result<Self> {
        let den = factors.iter().fold(UniPoly::one(), |acc, f| &acc * f);
        Self::new(UniPoly::one(), den)
    }

    /// 1/(1-t)^n
    pub fn hilbert_polynomial_ring(n: usize) -> Self {
        Self::inverse_product(&vec![UniPoly::from_ints(&[1, -1]); n]).expect("valid denominator")
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    /// First `order + 1` Taylor coefficients at t = 0.
    pub fn taylor(&self, order: usize) -> Vec<Cyclo> {
        // den(0) = 1, so a_k = num_k - sum_{j>=1} den_j a_{k-j}
        let mut a: Vec<Cyclo> = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let mut v = self.num.coeff(k);
            for j in 1..=k.min(self.den.degree().unwrap_or(0)) {
                let dj = self.den.coeff(j);
                if !dj.is_zero() {
                    v -= &(&dj * &a[k - j]);
                }
            }
            a.push(v);
        }
        a
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(&self.num * &other.num, &self.den * &other.den).expect("nonzero denominators")
    }

    pub fn add(&self, other: &Self) -> Self {
        let num = &(&self.num * &other.den) + &(&other.num * &self.den);
        Self::new(num, &self.den * &other.den).expect("nonzero denominators")
    }

    pub fn scale(&self, s: &Cyclo) -> Self {
        Self::new(self.num.scale(s), self.den.clone()).expect("nonzero denominator")
    }

    pub fn pow(&self, e: u32) -> Self {
        Self::new(self.num.pow(e), self.den.pow(e)).expect("nonzero denominator")
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl PartialEq for RationalSeries {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            return write!(f, "{}", self.num);
        }
        write!(f, "({})/({})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Cyclo> {
        v.iter().map(|&x| Cyclo::from_int(x)).collect()
    }

    #[test]
    fn taylor_examples() {
        let s = RationalSeries::hilbert_polynomial_ring(2);
        assert_eq!(s.taylor(3), ints(&[1, 2, 3, 4]));
        let w = Cyclo::zeta(3, 1);
        let s = RationalSeries::inverse_product(&[
            UniPoly::from_ints(&[1, -1]),
            UniPoly::one_minus(&w),
        ])
        .unwrap();
        assert_eq!(
            s.taylor(2),
            vec![Cyclo::one(), Cyclo::one() + w, Cyclo::zero()]
        );
    }

    #[test]
    fn reduction_and_equality() {
        // (1 - t^2)/(1 - t)^2 = (1 + t)/(1 - t)
        let a = RationalSeries::new(
            UniPoly::from_ints(&[1, 0, -1]),
            UniPoly::from_ints(&[1, -2, 1]),
        )
        .unwrap();
        assert_eq!(a.num(), &UniPoly::from_ints(&[1, 1]));
        assert_eq!(a.den(), &UniPoly::from_ints(&[1, -1]));
        let b =
            RationalSeries::new(UniPoly::from_ints(&[2, 2]), UniPoly::from_ints(&[2, -2])).unwrap();
        assert_eq!(a, b);
        assert!(RationalSeries::new(UniPoly::one(), UniPoly::t()).is_err());
    }

    #[test]
    fn average_of_traces() {
        // (1/(1-t)^2 + 1/(1+t)^2)/2 = (1+t^2)/(1-t^2)^2
        let a = RationalSeries::hilbert_polynomial_ring(2);
        let b = RationalSeries::inverse_product(&[
            UniPoly::from_ints(&[1, 1]),
            UniPoly::from_ints(&[1, 1]),
        ])
        .unwrap();
        let avg = a.add(&b).scale(&Cyclo::from_frac(1, 2));
        let want = RationalSeries::new(
            UniPoly::from_ints(&[1, 0, 1]),
            UniPoly::from_ints(&[1, 0, -2, 0, 1]),
        )
        .unwrap();
        assert_eq!(avg, want);
    }
}
