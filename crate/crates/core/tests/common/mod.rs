#![allow(dead_code)]

//! Brute-force reference implementation over a prime field F_p.
//!
//! Nothing here calls into the library's algorithms: polynomials are dense
//! coefficient arrays, orders come from multiplying matrices until the
//! identity shows up, invariants from averaging every monomial, and
//! normal elements and reflections from enumerating all candidates.
//! Library results are reduced mod p (zeta_N goes to w^((p-1)/N) for a
//! primitive root w) and compared exactly.

use poisson_workbench::{Cyclo, Poly, Rational};

#[derive(Clone, Copy, Debug)]
pub struct Fp {
    pub p: u64,
    w: u64,
}

impl Fp {
    pub fn new(p: u64) -> Self {
        let w = (2..p)
            .find(|&g| (1..p - 1).all(|k| pow_mod(g, k, p) != 1))
            .expect("prime");
        Fp { p, w }
    }

    pub fn norm(&self, x: i64) -> u64 {
        x.rem_euclid(self.p as i64) as u64
    }
    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }
    pub fn neg(&self, a: u64) -> u64 {
        (self.p - a) % self.p
    }
    pub fn inv(&self, a: u64) -> u64 {
        assert!(!a.is_multiple_of(self.p), "inverting zero");
        pow_mod(a, self.p - 2, self.p)
    }
    pub fn pow(&self, a: u64, e: u64) -> u64 {
        pow_mod(a, e, self.p)
    }

    /// Image of a primitive N-th root of unity; N must divide p - 1.
    pub fn zeta(&self, n: u32) -> u64 {
        assert_eq!(
            (self.p - 1) % n as u64,
            0,
            "no {n}-th roots of unity mod {}",
            self.p
        );
        self.pow(self.w, (self.p - 1) / n as u64)
    }

    pub fn rational(&self, r: &Rational) -> u64 {
        let num = i64::try_from(r.numer()).expect("small numerator");
        let den = i64::try_from(r.denom()).expect("small denominator");
        self.mul(self.norm(num), self.inv(self.norm(den)))
    }

    pub fn cyclo(&self, c: &Cyclo) -> u64 {
        let z = self.zeta(c.conductor());
        c.coeffs().iter().enumerate().fold(0, |acc, (k, r)| {
            self.add(acc, self.mul(self.rational(r), self.pow(z, k as u64)))
        })
    }
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    r
}

/// Dense polynomials in n variables, each exponent below `b`.
#[derive(Clone, Debug)]
pub struct Ring {
    pub f: Fp,
    pub n: usize,
    pub b: usize,
}

pub type Dense = Vec<u64>;

impl Ring {
    pub fn new(f: Fp, n: usize, b: usize) -> Self {
        Ring { f, n, b }
    }

    fn size(&self) -> usize {
        self.b.pow(self.n as u32)
    }

    pub fn exps(&self, mut idx: usize) -> Vec<usize> {
        let mut e = vec![0; self.n];
        for x in e.iter_mut() {
            *x = idx % self.b;
            idx /= self.b;
        }
        e
    }

    pub fn index(&self, e: &[usize]) -> usize {
        e.iter().rev().fold(0, |acc, &x| {
            assert!(x < self.b, "exponent {x} beyond dense bound {}", self.b);
            acc * self.b + x
        })
    }

    pub fn zero(&self) -> Dense {
        vec![0; self.size()]
    }

    pub fn constant(&self, c: u64) -> Dense {
        let mut v = self.zero();
        v[0] = c % self.f.p;
        v
    }

    pub fn var(&self, i: usize) -> Dense {
        let mut e = vec![0; self.n];
        e[i] = 1;
        self.monomial(&e, 1)
    }

    pub fn monomial(&self, e: &[usize], c: u64) -> Dense {
        let mut v = self.zero();
        v[self.index(e)] = c % self.f.p;
        v
    }

    pub fn linear(&self, coeffs: &[u64]) -> Dense {
        let mut v = self.zero();
        for (i, &c) in coeffs.iter().enumerate() {
            v = self.add(&v, &self.scale(&self.var(i), c));
        }
        v
    }

    pub fn is_zero(&self, a: &Dense) -> bool {
        a.iter().all(|&c| c == 0)
    }

    pub fn add(&self, a: &Dense, b: &Dense) -> Dense {
        a.iter().zip(b).map(|(&x, &y)| self.f.add(x, y)).collect()
    }

    pub fn sub(&self, a: &Dense, b: &Dense) -> Dense {
        a.iter().zip(b).map(|(&x, &y)| self.f.sub(x, y)).collect()
    }

    pub fn scale(&self, a: &Dense, s: u64) -> Dense {
        a.iter().map(|&x| self.f.mul(x, s)).collect()
    }

    pub fn mul(&self, a: &Dense, b: &Dense) -> Dense {
        let mut out = self.zero();
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            let ei = self.exps(i);
            for (j, &y) in b.iter().enumerate() {
                if y == 0 {
                    continue;
                }
                let e: Vec<usize> = ei.iter().zip(self.exps(j)).map(|(u, v)| u + v).collect();
                let k = self.index(&e);
                out[k] = self.f.add(out[k], self.f.mul(x, y));
            }
        }
        out
    }

    pub fn pow(&self, a: &Dense, e: usize) -> Dense {
        (0..e).fold(self.constant(1), |acc, _| self.mul(&acc, a))
    }

    pub fn partial(&self, a: &Dense, i: usize) -> Dense {
        let mut out = self.zero();
        for (k, &c) in a.iter().enumerate() {
            let mut e = self.exps(k);
            if c == 0 || e[i] == 0 {
                continue;
            }
            let m = e[i] as u64;
            e[i] -= 1;
            let t = self.index(&e);
            out[t] = self.f.add(out[t], self.f.mul(c, m));
        }
        out
    }

    /// f(images[0], ..., images[n-1]), images in ring `to`.
    pub fn substitute(&self, a: &Dense, images: &[Dense], to: &Ring) -> Dense {
        let mut out = to.zero();
        for (k, &c) in a.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mut t = to.constant(c);
            for (i, &e) in self.exps(k).iter().enumerate() {
                t = to.mul(&t, &to.pow(&images[i], e));
            }
            out = to.add(&out, &t);
        }
        out
    }

    pub fn degree(&self, a: &Dense) -> Option<usize> {
        a.iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, _)| self.exps(k).iter().sum())
            .max()
    }

    /// Does the linear form u (nonzero) divide f? Substitute the
    /// hyperplane u = 0 and test for zero.
    pub fn divisible_by_linear(&self, f: &Dense, u: &[u64]) -> bool {
        let k = u.iter().position(|&c| c != 0).expect("nonzero form");
        let inv = self.f.inv(u[k]);
        let images: Vec<Dense> = (0..self.n)
            .map(|i| {
                if i != k {
                    return self.var(i);
                }
                let coeffs: Vec<u64> = (0..self.n)
                    .map(|j| {
                        if j == k {
                            0
                        } else {
                            self.f.neg(self.f.mul(u[j], inv))
                        }
                    })
                    .collect();
                self.linear(&coeffs)
            })
            .collect();
        self.is_zero(&self.substitute(f, &images, self))
    }

    /// Reduce a library polynomial mod p.
    pub fn from_poly(&self, p: &Poly) -> Dense {
        let mut out = self.zero();
        for (m, c) in p.terms() {
            let e: Vec<usize> = m.0.iter().map(|&x| x as usize).collect();
            let k = self.index(&e);
            out[k] = self.f.add(out[k], self.f.cyclo(c));
        }
        out
    }

    pub fn monomials_of_degree(&self, d: usize) -> Vec<Vec<usize>> {
        (0..self.size())
            .map(|k| self.exps(k))
            .filter(|e| e.iter().sum::<usize>() == d)
            .collect()
    }
}

/// A Poisson bracket given on generators.
#[derive(Clone, Debug)]
pub struct Bracket {
    pub ring: Ring,
    /// table[i][j] = {x_i, x_j}
    pub table: Vec<Vec<Dense>>,
}

impl Bracket {
    /// From (i, j, value) with i < j; the rest by antisymmetry.
    pub fn new(ring: Ring, entries: &[(usize, usize, Dense)]) -> Self {
        let n = ring.n;
        let mut table = vec![vec![ring.zero(); n]; n];
        for (i, j, v) in entries {
            table[*i][*j] = v.clone();
            table[*j][*i] = ring.scale(v, ring.f.neg(1));
        }
        Bracket { ring, table }
    }

    pub fn bracket(&self, f: &Dense, g: &Dense) -> Dense {
        let r = &self.ring;
        let mut out = r.zero();
        for i in 0..r.n {
            let fi = r.partial(f, i);
            if r.is_zero(&fi) {
                continue;
            }
            for j in 0..r.n {
                if i == j || r.is_zero(&self.table[i][j]) {
                    continue;
                }
                let gj = r.partial(g, j);
                out = r.add(&out, &r.mul(&r.mul(&fi, &gj), &self.table[i][j]));
            }
        }
        out
    }

    /// All nonzero linear forms u, up to scalars, with u | {u, x_i} for all i.
    pub fn normal_linear_forms(&self) -> Vec<Vec<u64>> {
        let r = &self.ring;
        projective_points(r.f, r.n)
            .into_iter()
            .filter(|u| {
                let lu = r.linear(u);
                (0..r.n).all(|i| r.divisible_by_linear(&self.bracket(&lu, &r.var(i)), u))
            })
            .collect()
    }

    /// Apply the linear map with columns = images of the generators.
    pub fn apply(&self, m: &Mat, f: &Dense) -> Dense {
        let r = &self.ring;
        let images: Vec<Dense> = (0..r.n).map(|i| r.linear(&m.column(i))).collect();
        r.substitute(f, &images, r)
    }

    pub fn is_automorphism(&self, m: &Mat) -> bool {
        let r = &self.ring;
        let images: Vec<Dense> = (0..r.n).map(|i| r.linear(&m.column(i))).collect();
        (0..r.n).all(|i| {
            (i + 1..r.n).all(|j| {
                r.substitute(&self.table[i][j], &images, r) == self.bracket(&images[i], &images[j])
            })
        })
    }

    /// Every Poisson reflection I + v l^T over F_p: v runs over projective
    /// points, l over all nonzero vectors, xi = 1 + l(v) not in {0, 1}.
    pub fn reflections(&self) -> Vec<(Mat, u64)> {
        let r = &self.ring;
        let f = r.f;
        let n = r.n;
        let mut out = Vec::new();
        for v in projective_points(f, n) {
            for l in all_vectors(f, n) {
                let lv = (0..n).fold(0, |acc, i| f.add(acc, f.mul(l[i], v[i])));
                let xi = f.add(1, lv);
                if xi == 0 || xi == 1 {
                    continue;
                }
                let mut m = Mat::identity(f, n);
                for j in 0..n {
                    for i in 0..n {
                        m.a[j][i] = f.add(m.a[j][i], f.mul(v[j], l[i]));
                    }
                }
                if self.is_automorphism(&m) {
                    out.push((m, xi));
                }
            }
        }
        out
    }

    /// phi(x_i) = sum_j d{x_i, x_j}/dx_j
    pub fn modular_derivation(&self) -> Vec<Dense> {
        let r = &self.ring;
        (0..r.n)
            .map(|i| {
                (0..r.n).fold(r.zero(), |acc, j| {
                    r.add(&acc, &r.partial(&self.table[i][j], j))
                })
            })
            .collect()
    }
}

pub fn projective_points(f: Fp, n: usize) -> Vec<Vec<u64>> {
    all_vectors(f, n)
        .into_iter()
        .filter(|v| v.iter().find(|&&c| c != 0) == Some(&1))
        .collect()
}

pub fn all_vectors(f: Fp, n: usize) -> Vec<Vec<u64>> {
    let total = f.p.pow(n as u32);
    (1..total)
        .map(|mut k| {
            (0..n)
                .map(|_| {
                    let c = k % f.p;
                    k /= f.p;
                    c
                })
                .collect()
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    pub f_p: u64,
    pub a: Vec<Vec<u64>>,
}

impl Mat {
    pub fn identity(f: Fp, n: usize) -> Self {
        let a = (0..n)
            .map(|i| (0..n).map(|j| u64::from(i == j)).collect())
            .collect();
        Mat { f_p: f.p, a }
    }

    pub fn from_library(f: Fp, m: &poisson_workbench::Matrix) -> Self {
        let a = m
            .to_rows()
            .iter()
            .map(|r| r.iter().map(|c| f.cyclo(c)).collect())
            .collect();
        Mat { f_p: f.p, a }
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn column(&self, i: usize) -> Vec<u64> {
        self.a.iter().map(|r| r[i]).collect()
    }

    pub fn mul(&self, o: &Mat) -> Mat {
        let n = self.n();
        let p = self.f_p;
        let a = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).fold(0, |s, k| (s + self.a[i][k] * o.a[k][j]) % p))
                    .collect()
            })
            .collect();
        Mat { f_p: p, a }
    }

    /// Multiply until the identity comes back.
    pub fn order(&self, limit: usize) -> Option<usize> {
        let id = Mat::identity(Fp::new(self.f_p), self.n());
        let mut g = self.clone();
        for k in 1..=limit {
            if g == id {
                return Some(k);
            }
            g = g.mul(self);
        }
        None
    }

    pub fn powers(&self) -> Vec<Mat> {
        let k = self.order(10_000).expect("finite order");
        let mut out = vec![Mat::identity(Fp::new(self.f_p), self.n())];
        for _ in 1..k {
            let next = out.last().unwrap().mul(self);
            out.push(next);
        }
        out
    }

    pub fn rank_minus_identity(&self) -> usize {
        let f = Fp::new(self.f_p);
        let rows: Vec<Vec<u64>> = (0..self.n())
            .map(|i| {
                (0..self.n())
                    .map(|j| f.sub(self.a[i][j], u64::from(i == j)))
                    .collect()
            })
            .collect();
        rank(f, rows)
    }
}

/// Reduced row echelon form in place; returns pivot columns.
pub fn rref(f: Fp, rows: &mut Vec<Vec<u64>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(k) = (r..rows.len()).find(|&k| rows[k][c] != 0) else {
            continue;
        };
        rows.swap(r, k);
        let inv = f.inv(rows[r][c]);
        for x in rows[r].iter_mut() {
            *x = f.mul(*x, inv);
        }
        for k in 0..rows.len() {
            if k != r && rows[k][c] != 0 {
                let s = rows[k][c];
                for j in 0..ncols {
                    rows[k][j] = f.sub(rows[k][j], f.mul(s, rows[r][j]));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank(f: Fp, mut rows: Vec<Vec<u64>>) -> usize {
    rref(f, &mut rows).len()
}

/// Invariants of the group generated by `g`, degree by degree: average
/// every monomial over all powers of g and take the span.
pub fn invariant_basis(br: &Bracket, g: &Mat, d: usize) -> Vec<Dense> {
    let r = &br.ring;
    let group = g.powers();
    let inv_order = r.f.inv(group.len() as u64 % r.f.p);
    let mut rows: Vec<Dense> = r
        .monomials_of_degree(d)
        .iter()
        .map(|e| {
            let m = r.monomial(e, 1);
            let sum = group
                .iter()
                .fold(r.zero(), |acc, h| r.add(&acc, &br.apply(h, &m)));
            r.scale(&sum, inv_order)
        })
        .collect();
    rref(r.f, &mut rows);
    rows
}

/// Generators of the invariant ring up to degree `d`: in each degree the
/// invariants outside the span of products of earlier generators.
pub fn invariant_generators(br: &Bracket, g: &Mat, d: usize) -> Vec<(Dense, usize)> {
    let r = &br.ring;
    let mut gens: Vec<(Dense, usize)> = Vec::new();
    for k in 1..=d {
        let mut span: Vec<Dense> = products_of_degree(r, &gens, k);
        for v in invariant_basis(br, g, k) {
            let before = rank(r.f, span.clone());
            span.push(v.clone());
            if rank(r.f, span.clone()) > before {
                gens.push((v, k));
            } else {
                span.pop();
            }
        }
    }
    gens
}

pub fn products_of_degree(r: &Ring, gens: &[(Dense, usize)], k: usize) -> Vec<Dense> {
    fn rec(
        r: &Ring,
        gens: &[(Dense, usize)],
        start: usize,
        k: usize,
        cur: Dense,
        out: &mut Vec<Dense>,
    ) {
        if k == 0 {
            out.push(cur);
            return;
        }
        for i in start..gens.len() {
            if gens[i].1 <= k {
                rec(r, gens, i, k - gens[i].1, r.mul(&cur, &gens[i].0), out);
            }
        }
    }
    let mut out = Vec::new();
    rec(r, gens, 0, k, r.constant(1), &mut out);
    out
}

/// Write f as a polynomial in the generators (assumed algebraically
/// independent) by solving a linear system over all products of the right
/// weighted degree. Result lives in a ring with one variable per generator.
pub fn express(r: &Ring, f: &Dense, gens: &[(Dense, usize)], target: &Ring) -> Option<Dense> {
    let d = r.degree(f).unwrap_or(0);
    let mut tags: Vec<Vec<usize>> = Vec::new();
    let mut cols: Vec<Dense> = Vec::new();
    fn rec(
        gens: &[(Dense, usize)],
        i: usize,
        k: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if i == gens.len() {
            if k == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for e in 0..=k / gens[i].1 {
            cur.push(e);
            rec(gens, i + 1, k - e * gens[i].1, cur, out);
            cur.pop();
        }
    }
    rec(gens, 0, d, &mut Vec::new(), &mut tags);
    for t in &tags {
        let mut v = r.constant(1);
        for (i, &e) in t.iter().enumerate() {
            v = r.mul(&v, &r.pow(&gens[i].0, e));
        }
        cols.push(v);
    }
    // augmented system: rows indexed by ambient monomials
    let f_p = r.f;
    let size = f.len();
    let mut rows: Vec<Vec<u64>> = (0..size)
        .map(|m| {
            let mut row: Vec<u64> = cols.iter().map(|c| c[m]).collect();
            row.push(f[m]);
            row
        })
        .collect();
    let piv = rref(f_p, &mut rows);
    if piv.last() == Some(&cols.len()) || piv.len() < cols.len() {
        return None;
    }
    let mut out = target.zero();
    for (row, &c) in rows.iter().zip(&piv) {
        let k = target.index(&tags[c]);
        out[k] = row[cols.len()];
    }
    Some(out)
}

/// Quadratic enveloping algebra of a quadratic bracket on n variables,
/// generators m_1..m_n, h_1..h_n (indices 0..2n):
/// m_i m_j = m_j m_i, h_i m_j - m_j h_i = m({x_i, x_j}),
/// h_i h_j - h_j h_i = h({x_i, x_j}) with h(x_a x_b) = m_a h_b + m_b h_a.
pub struct Envelope {
    pub f: Fp,
    pub ngens: usize,
    /// Relations as maps word -> coefficient over words of length 2.
    pub relations: Vec<Vec<(Vec<usize>, u64)>>,
}

impl Envelope {
    pub fn new(br: &Bracket) -> Self {
        let r = &br.ring;
        let f = r.f;
        let n = r.n;
        let quad_terms = |p: &Dense| -> Vec<(usize, usize, u64)> {
            p.iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(k, &c)| {
                    let e = r.exps(k);
                    assert_eq!(e.iter().sum::<usize>(), 2, "bracket must be quadratic");
                    let vars: Vec<usize> = e
                        .iter()
                        .enumerate()
                        .flat_map(|(i, &x)| std::iter::repeat_n(i, x))
                        .collect();
                    (vars[0], vars[1], c)
                })
                .collect()
        };
        let mut relations = Vec::new();
        let comm = |a: usize, b: usize| vec![(vec![a, b], 1u64), (vec![b, a], f.neg(1))];
        for i in 0..n {
            for j in i + 1..n {
                relations.push(comm(i, j));
            }
        }
        for i in 0..n {
            for j in 0..n {
                let mut rel = comm(n + i, j);
                for (a, b, c) in quad_terms(&br.table[i][j]) {
                    rel.push((vec![a, b], f.neg(c)));
                }
                relations.push(rel);
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                let mut rel = comm(n + i, n + j);
                for (a, b, c) in quad_terms(&br.table[i][j]) {
                    rel.push((vec![a, n + b], f.neg(c)));
                    rel.push((vec![b, n + a], f.neg(c)));
                }
                relations.push(rel);
            }
        }
        Envelope {
            f,
            ngens: 2 * n,
            relations,
        }
    }

    fn word_index(&self, w: &[usize]) -> usize {
        w.iter().fold(0, |acc, &x| acc * self.ngens + x)
    }

    /// Echelon basis of the ideal in degree d inside all words of length d.
    fn ideal(&self, d: usize) -> (Vec<Vec<u64>>, Vec<usize>) {
        let size = self.ngens.pow(d as u32);
        let mut rows = Vec::new();
        if d >= 2 {
            for left in 0..=d - 2 {
                let right = d - 2 - left;
                for u in 0..self.ngens.pow(left as u32) {
                    for v in 0..self.ngens.pow(right as u32) {
                        for rel in &self.relations {
                            let mut row = vec![0; size];
                            for (w, c) in rel {
                                let idx = (u * self.ngens.pow(2) + self.word_index(w))
                                    * self.ngens.pow(right as u32)
                                    + v;
                                row[idx] = self.f.add(row[idx], *c);
                            }
                            rows.push(row);
                        }
                    }
                }
            }
        }
        let piv = rref(self.f, &mut rows);
        (rows, piv)
    }

    pub fn dims(&self, d: usize) -> Vec<usize> {
        (0..=d)
            .map(|k| self.ngens.pow(k as u32) - self.ideal(k).1.len())
            .collect()
    }

    /// Trace of the algebra map acting on generators by `g` (columns are
    /// images), computed on each graded piece of the quotient.
    pub fn traces(&self, g: &Mat, d: usize) -> Vec<u64> {
        let f = self.f;
        (0..=d)
            .map(|k| {
                let (rows, piv) = self.ideal(k);
                let size = self.ngens.pow(k as u32);
                let mut tr = 0;
                for q in (0..size).filter(|q| !piv.contains(q)) {
                    // image of the word q under g, as a vector over words
                    let mut letters = Vec::with_capacity(k);
                    let mut t = q;
                    for _ in 0..k {
                        letters.push(t % self.ngens);
                        t /= self.ngens;
                    }
                    letters.reverse();
                    let mut img = vec![1u64];
                    for &x in &letters {
                        let col = g.column(x);
                        let mut next = vec![0; img.len() * self.ngens];
                        for (a, &ca) in img.iter().enumerate() {
                            if ca == 0 {
                                continue;
                            }
                            for (b, &cb) in col.iter().enumerate() {
                                next[a * self.ngens + b] =
                                    f.add(next[a * self.ngens + b], f.mul(ca, cb));
                            }
                        }
                        img = next;
                    }
                    for (row, &c) in rows.iter().zip(&piv) {
                        if img[c] != 0 {
                            let s = img[c];
                            for j in 0..size {
                                img[j] = f.sub(img[j], f.mul(s, row[j]));
                            }
                        }
                    }
                    tr = f.add(tr, img[q]);
                }
                tr
            })
            .collect()
    }
}

/// Graded traces of g on the polynomial ring, degree by degree, from its
/// action on every monomial.
pub fn polynomial_traces(br: &Bracket, g: &Mat, d: usize) -> Vec<u64> {
    let r = &br.ring;
    (0..=d)
        .map(|k| {
            r.monomials_of_degree(k).iter().fold(0, |acc, e| {
                let img = br.apply(g, &r.monomial(e, 1));
                r.f.add(acc, img[r.index(e)])
            })
        })
        .collect()
}

/// Block diagonal diag(g, g), the action on (m, h).
pub fn doubled(g: &Mat) -> Mat {
    let n = g.n();
    let mut a = vec![vec![0; 2 * n]; 2 * n];
    for i in 0..n {
        for j in 0..n {
            a[i][j] = g.a[i][j];
            a[n + i][n + j] = g.a[i][j];
        }
    }
    Mat { f_p: g.f_p, a }
}

pub mod cross;

// ---- the algebras used in cross-checks, written out by hand ----

/// Jacobian bracket of f: {x,y} = f_z, {y,z} = f_x, {z,x} = f_y.
pub fn jacobian(f: Fp, pot: impl Fn(&Ring) -> Dense) -> Bracket {
    let r = Ring::new(f, 3, 5);
    let pf = pot(&r);
    let e = [
        (0, 1, r.partial(&pf, 2)),
        (1, 2, r.partial(&pf, 0)),
        (2, 0, r.partial(&pf, 1)),
    ];
    let entries: Vec<(usize, usize, Dense)> = e
        .into_iter()
        .map(|(i, j, v)| {
            if i < j {
                (i, j, v)
            } else {
                (j, i, r.scale(&v, f.neg(1)))
            }
        })
        .collect();
    Bracket::new(r, &entries)
}

/// (x^3 + y^3 + z^3)/3
pub fn cubes(r: &Ring) -> Dense {
    let third = r.f.inv(3);
    let s = (0..3).fold(r.zero(), |acc, i| r.add(&acc, &r.pow(&r.var(i), 3)));
    r.scale(&s, third)
}

pub fn xyz(r: &Ring) -> Dense {
    r.mul(&r.mul(&r.var(0), &r.var(1)), &r.var(2))
}

/// Semiclassical quantum 2x2 matrices on a, b, c, d.
pub fn om2(f: Fp) -> Bracket {
    let r = Ring::new(f, 4, 3);
    let v = |i| r.var(i);
    let (a, b, c, d) = (v(0), v(1), v(2), v(3));
    let entries = vec![
        (0, 1, r.mul(&a, &b)),
        (0, 2, r.mul(&a, &c)),
        (1, 2, r.zero()),
        (1, 3, r.mul(&b, &d)),
        (2, 3, r.mul(&c, &d)),
        (0, 3, r.scale(&r.mul(&b, &c), 2)),
    ];
    Bracket::new(r, &entries)
}

/// {x, y} = z^2 with z central.
pub fn hweyl1(f: Fp) -> Bracket {
    let r = Ring::new(f, 3, 4);
    let z2 = r.pow(&r.var(2), 2);
    Bracket::new(r, &[(0, 1, z2)])
}

pub fn trivial(f: Fp, n: usize) -> Bracket {
    Bracket::new(Ring::new(f, n, 4), &[])
}

pub fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
