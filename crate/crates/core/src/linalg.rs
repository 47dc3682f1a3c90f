//! Exact linear algebra over Q(zeta): dense matrices and an incremental
//! sparse echelon form keyed by any ordered index type.

use std::collections::BTreeMap;
use std::fmt;

use crate::arith::{Cyclo, UniPoly};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Cyclo>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Cyclo::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Cyclo::one());
        }
        m
    }

    pub fn diagonal(d: &[Cyclo]) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (i, v) in d.iter().enumerate() {
            m.set(i, i, v.clone());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Cyclo>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged matrix rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Matrix whose i-th column is `cols[i]`.
    pub fn from_columns(cols: &[Vec<Cyclo>]) -> Result<Self> {
        Ok(Self::from_rows(cols.to_vec())?.transpose())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Cyclo {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Cyclo) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<Cyclo> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn column(&self, j: usize) -> Vec<Cyclo> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Cyclo>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Cyclo::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(j, i, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut m = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = m.get(i, j) + &(a * b);
                        m.set(i, j, v);
                    }
                }
            }
        }
        Ok(m)
    }

    pub fn mul_vec(&self, v: &[Cyclo]) -> Vec<Cyclo> {
        (0..self.rows)
            .map(|i| {
                let mut acc = Cyclo::zero();
                for (j, vj) in v.iter().enumerate() {
                    if !vj.is_zero() {
                        acc += &(self.get(i, j) * vj);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, s: &Cyclo) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    pub fn trace(&self) -> Cyclo {
        let mut acc = Cyclo::zero();
        for i in 0..self.rows.min(self.cols) {
            acc += self.get(i, i);
        }
        acc
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().expect("pivot nonzero");
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let v = m.get(i, j) - &(&f * m.get(r, j));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel, one vector per free column, in the
    /// standard form (free coordinate 1, other free coordinates 0).
    pub fn kernel(&self) -> Vec<Vec<Cyclo>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Cyclo::zero(); self.cols];
                v[f] = Cyclo::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(i, f);
                }
                v
            })
            .collect()
    }

    pub fn det(&self) -> Result<Cyclo> {
        if !self.is_square() {
            return Err(Error::Dimension(
                "determinant of a non-square matrix".into(),
            ));
        }
        let mut m = self.clone();
        let n = self.rows;
        let mut det = Cyclo::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return Ok(Cyclo::zero());
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let piv = m.get(c, c).clone();
            det = &det * &piv;
            let inv = piv.inv()?;
            for i in c + 1..n {
                let f = m.get(i, c) * &inv;
                if f.is_zero() {
                    continue;
                }
                for j in c..n {
                    let v = m.get(i, j) - &(&f * m.get(c, j));
                    m.set(i, j, v);
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::Dimension("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, Cyclo::one());
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::SingularMatrix);
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j).clone());
            }
        }
        Ok(inv)
    }

    pub fn pow(&self, e: u32) -> Matrix {
        let mut acc = Self::identity(self.rows);
        for _ in 0..e {
            acc = acc.mul(self).expect("square");
        }
        acc
    }

    /// det(I - t M) as a polynomial in t.
    pub fn det_one_minus_t(&self) -> Result<UniPoly> {
        let cp = self.charpoly()?;
        // det(I - tM) = t^n cp(1/t): reverse the coefficients
        let mut c = cp.coeffs().to_vec();
        c.resize(self.rows + 1, Cyclo::zero());
        c.reverse();
        Ok(UniPoly::new(c))
    }

    /// Characteristic polynomial det(tI - M) by Faddeev-LeVerrier.
    pub fn charpoly(&self) -> Result<UniPoly> {
        if !self.is_square() {
            return Err(Error::Dimension(
                "characteristic polynomial of a non-square matrix".into(),
            ));
        }
        let n = self.rows;
        let mut coeffs = vec![Cyclo::zero(); n + 1];
        coeffs[n] = Cyclo::one();
        let mut mk = Self::zeros(n, n);
        for k in 1..=n {
            // M_k = A (M_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(M_k)/k
            let mut prev = mk.clone();
            for i in 0..n {
                let v = prev.get(i, i) + &coeffs[n - k + 1];
                prev.set(i, i, v);
            }
            mk = self.mul(&prev)?;
            coeffs[n - k] = -(&mk.trace() * &Cyclo::from_frac(1, k as i64));
        }
        Ok(UniPoly::new(coeffs))
    }

    /// Minimal polynomial (monic) via the Krylov sequence of each basis
    /// vector.
    pub fn minimal_polynomial(&self) -> Result<UniPoly> {
        let n = self.rows;
        let mut acc = UniPoly::one();
        for i in 0..n {
            let mut e = vec![Cyclo::zero(); n];
            e[i] = Cyclo::one();
            let p = self.local_min_poly(&e);
            let g = acc.gcd(&p);
            acc = (&acc * &p).div_exact(&g)?.expect("lcm divides").monic();
        }
        Ok(acc)
    }

    fn local_min_poly(&self, v: &[Cyclo]) -> UniPoly {
        let mut krylov: Vec<Vec<Cyclo>> = vec![v.to_vec()];
        loop {
            let next = self.mul_vec(krylov.last().unwrap());
            // solve next = sum c_k krylov_k
            let cols: Vec<Vec<Cyclo>> = krylov.clone();
            let a = Matrix::from_columns(&cols).expect("rectangular");
            if let Some(c) = a.solve(&next) {
                let mut coeffs: Vec<Cyclo> = c.iter().map(|x| -x).collect();
                coeffs.push(Cyclo::one());
                return UniPoly::new(coeffs);
            }
            krylov.push(next);
        }
    }

    /// Some solution x of M x = b, if one exists.
    pub fn solve(&self, b: &[Cyclo]) -> Option<Vec<Cyclo>> {
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Cyclo::zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = r.get(i, self.cols).clone();
        }
        Some(x)
    }

    /// Block diagonal diag(self, other).
    pub fn block_diag(&self, other: &Matrix) -> Matrix {
        let mut m = Self::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                m.set(self.rows + i, self.cols + j, other.get(i, j).clone());
            }
        }
        m
    }

    /// Common conductor of all entries.
    pub fn conductor(&self) -> u32 {
        self.data
            .iter()
            .fold(1, |m, v| crate::arith::cyclo::lcm(m, v.conductor()))
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            write!(f, "{}", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Reduced row vectors of a normalized rref basis of the span of `vs`.
pub fn row_space_basis(vs: &[Vec<Cyclo>]) -> Vec<Vec<Cyclo>> {
    if vs.is_empty() {
        return vec![];
    }
    let m = Matrix::from_rows(vs.to_vec()).expect("rectangular");
    let (r, p) = m.rref();
    (0..p.len()).map(|i| r.row(i)).collect()
}

pub type SparseVec<K> = BTreeMap<K, Cyclo>;

/// Semi-echelon basis of a subspace of sparse vectors. Each stored row has
/// a distinct pivot (its largest key) with coefficient 1.
#[derive(Clone, Debug)]
pub struct SparseEchelon<K: Ord + Clone> {
    rows: BTreeMap<K, SparseVec<K>>,
}

impl<K: Ord + Clone> Default for SparseEchelon<K> {
    fn default() -> Self {
        SparseEchelon {
            rows: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> SparseEchelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Canonical remainder of `v` modulo the span.
    pub fn reduce(&self, v: &SparseVec<K>) -> SparseVec<K> {
        let mut work = v.clone();
        let mut out = SparseVec::new();
        while let Some((k, c)) = work.pop_last() {
            if c.is_zero() {
                continue;
            }
            match self.rows.get(&k) {
                Some(row) => {
                    for (rk, rc) in row.iter() {
                        if *rk == k {
                            continue;
                        }
                        let e = work.entry(rk.clone()).or_insert_with(Cyclo::zero);
                        *e -= &(&c * rc);
                        if e.is_zero() {
                            work.remove(rk);
                        }
                    }
                }
                None => {
                    out.insert(k, c);
                }
            }
        }
        out
    }

    /// Like [`reduce`](Self::reduce) but also records the combination of
    /// stored rows subtracted, keyed by pivot.
    pub fn reduce_with_coeffs(&self, v: &SparseVec<K>) -> (SparseVec<K>, Vec<(K, Cyclo)>) {
        let mut work = v.clone();
        let mut out = SparseVec::new();
        let mut used = Vec::new();
        while let Some((k, c)) = work.pop_last() {
            if c.is_zero() {
                continue;
            }
            match self.rows.get(&k) {
                Some(row) => {
                    for (rk, rc) in row.iter() {
                        if *rk == k {
                            continue;
                        }
                        let e = work.entry(rk.clone()).or_insert_with(Cyclo::zero);
                        *e -= &(&c * rc);
                        if e.is_zero() {
                            work.remove(rk);
                        }
                    }
                    used.push((k, c));
                }
                None => {
                    out.insert(k, c);
                }
            }
        }
        (out, used)
    }

    /// Insert `v`; returns false when it was already in the span.
    pub fn insert(&mut self, v: &SparseVec<K>) -> bool {
        self.insert_reduced(self.reduce(v)).is_some()
    }

    /// Insert an already reduced vector, returning its pivot.
    pub fn insert_reduced(&mut self, r: SparseVec<K>) -> Option<K> {
        let (k, lead) = r.iter().next_back().map(|(k, c)| (k.clone(), c.clone()))?;
        let inv = lead.inv().expect("nonzero lead");
        let row: SparseVec<K> = r.into_iter().map(|(k, c)| (k, &c * &inv)).collect();
        self.rows.insert(k.clone(), row);
        Some(k)
    }

    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        self.reduce(v).is_empty()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &K> {
        self.rows.keys()
    }

    pub fn row(&self, pivot: &K) -> Option<&SparseVec<K>> {
        self.rows.get(pivot)
    }

    /// Fully reduced basis, ordered by decreasing pivot.
    pub fn reduced_basis(&self) -> Vec<SparseVec<K>> {
        let mut out = Vec::new();
        for (k, row) in self.rows.iter().rev() {
            let mut rest = row.clone();
            let lead = rest.remove(k).expect("pivot present");
            let mut r = self.reduce(&rest);
            r.insert(k.clone(), lead);
            out.push(r);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Cyclo::from_int(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn det_inverse_rank() {
        let a = m(&[&[2, 1], &[1, 1]]);
        assert_eq!(a.det().unwrap(), Cyclo::one());
        let ai = a.inverse().unwrap();
        assert!(a.mul(&ai).unwrap().is_identity());
        let s = m(&[&[1, 2], &[2, 4]]);
        assert_eq!(s.inverse(), Err(Error::SingularMatrix));
        assert_eq!(s.rank(), 1);
        assert_eq!(s.kernel(), vec![vec![Cyclo::from_int(-2), Cyclo::one()]]);
    }

    #[test]
    fn charpoly_and_minpoly() {
        let a = m(&[&[0, 1], &[-1, 0]]);
        assert_eq!(a.charpoly().unwrap(), UniPoly::from_ints(&[1, 0, 1]));
        assert_eq!(a.det_one_minus_t().unwrap(), UniPoly::from_ints(&[1, 0, 1]));
        let d = m(&[&[-1, 0], &[0, -1]]);
        assert_eq!(d.minimal_polynomial().unwrap(), UniPoly::from_ints(&[1, 1]));
        assert_eq!(d.det_one_minus_t().unwrap(), UniPoly::from_ints(&[1, 2, 1]));
    }

    #[test]
    fn sparse_echelon() {
        let mut e: SparseEchelon<u32> = SparseEchelon::new();
        let v = |pairs: &[(u32, i64)]| {
            pairs
                .iter()
                .map(|&(k, c)| (k, Cyclo::from_int(c)))
                .collect::<SparseVec<u32>>()
        };
        assert!(e.insert(&v(&[(2, 1), (1, 1)])));
        assert!(e.insert(&v(&[(1, 1), (0, 1)])));
        assert!(!e.insert(&v(&[(2, 1), (0, -1)])));
        assert_eq!(e.rank(), 2);
        assert_eq!(e.reduce(&v(&[(2, 1)])), v(&[(0, 1)]));
    }
}
