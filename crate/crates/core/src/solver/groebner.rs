use std::collections::BTreeMap;

use crate::arith::Cyclo;
use crate::error::{Error, Result};
use crate::poly::{Mono, Poly};

/// Monomial orders. Every order is encoded by a linear key map so that
/// comparing keys lexicographically compares monomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    /// Graded lexicographic.
    Grlex,
    /// Pure lexicographic, x_1 > x_2 > ...
    Lex,
    /// Block order eliminating the first k variables (grlex inside each
    /// block).
    Elim(usize),
}

impl MonomialOrder {
    pub fn key(&self, e: &[u32]) -> Vec<u32> {
        match *self {
            MonomialOrder::Grlex => {
                let mut k = Vec::with_capacity(e.len() + 1);
                k.push(e.iter().sum());
                k.extend_from_slice(e);
                k
            }
            MonomialOrder::Lex => e.to_vec(),
            MonomialOrder::Elim(b) => {
                let b = b.min(e.len());
                let mut k = Vec::with_capacity(e.len() + 2);
                k.push(e[..b].iter().sum());
                k.extend_from_slice(&e[..b]);
                k.push(e[b..].iter().sum());
                k.extend_from_slice(&e[b..]);
                k
            }
        }
    }

    pub fn exps(&self, k: &[u32]) -> Vec<u32> {
        match *self {
            MonomialOrder::Grlex => k[1..].to_vec(),
            MonomialOrder::Lex => k.to_vec(),
            MonomialOrder::Elim(b) => {
                let n = k.len() - 2;
                let b = b.min(n);
                let mut e = k[1..b + 1].to_vec();
                e.extend_from_slice(&k[b + 2..]);
                e
            }
        }
    }
}

type Key = Vec<u32>;
type OPoly = BTreeMap<Key, Cyclo>;

fn add_keys(a: &[u32], b: &[u32]) -> Key {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn to_opoly(p: &Poly, ord: MonomialOrder) -> OPoly {
    p.terms().map(|(m, c)| (ord.key(&m.0), c.clone())).collect()
}

fn from_opoly(p: &OPoly, nvars: usize, ord: MonomialOrder) -> Poly {
    Poly::from_terms(nvars, p.iter().map(|(k, c)| (Mono(ord.exps(k)), c.clone())))
}

struct Basis {
    ord: MonomialOrder,
    polys: Vec<OPoly>,
    lead: Vec<Mono>,
}

impl Basis {
    fn lead_mono(&self, p: &OPoly) -> Mono {
        Mono(self.ord.exps(p.keys().next_back().unwrap()))
    }

    fn push(&mut self, p: OPoly) {
        self.lead.push(self.lead_mono(&p));
        self.polys.push(p);
    }

    /// Full reduction of `f` modulo the polynomials whose index is not in
    /// `skip`.
    fn reduce(&self, f: OPoly, skip: Option<usize>) -> OPoly {
        let mut work = f;
        let mut out = OPoly::new();
        while let Some((k, c)) = work.pop_last() {
            let e = Mono(self.ord.exps(&k));
            let div = (0..self.polys.len()).find(|&i| Some(i) != skip && self.lead[i].divides(&e));
            match div {
                Some(i) => {
                    let g = &self.polys[i];
                    let q = self.lead[i].quotient(&e);
                    let qk = self.ord.key(&q.0);
                    let lc = g.values().next_back().unwrap();
                    let s = &c / lc;
                    for (gk, gc) in g.iter().rev().skip(1) {
                        let nk = add_keys(gk, &qk);
                        let v = work.entry(nk.clone()).or_insert_with(Cyclo::zero);
                        *v -= &(&s * gc);
                        if v.is_zero() {
                            work.remove(&nk);
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
}

fn monic(p: OPoly) -> OPoly {
    let inv = p.values().next_back().unwrap().inv().expect("nonzero lead");
    p.into_iter().map(|(k, c)| (k, &c * &inv)).collect()
}

/// Reduced Groebner basis, monic, sorted by increasing leading monomial.
pub fn groebner(gens: &[Poly], nvars: usize, ord: MonomialOrder, budget: u32) -> Result<Vec<Poly>> {
    let mut basis = Basis {
        ord,
        polys: Vec::new(),
        lead: Vec::new(),
    };
    let mut input: Vec<OPoly> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| monic(to_opoly(g, ord)))
        .collect();
    input.sort_by(|a, b| a.keys().next_back().cmp(&b.keys().next_back()));
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for g in input {
        let r = basis.reduce(g, None);
        if r.is_empty() {
            continue;
        }
        let r = monic(r);
        if r.len() == 1 && r.keys().next().unwrap().iter().all(|&x| x == 0) {
            return Ok(vec![Poly::one(nvars)]);
        }
        let j = basis.polys.len();
        basis.push(r);
        pairs.extend((0..j).map(|i| (i, j)));
    }
    let mut done: std::collections::HashSet<(usize, usize)> = std::collections::HashSet::new();
    while !pairs.is_empty() {
        // normal strategy: smallest lcm first
        let (idx, _) = pairs
            .iter()
            .enumerate()
            .min_by_key(|(_, &(i, j))| ord.key(&basis.lead[i].lcm(&basis.lead[j]).0))
            .unwrap();
        let (i, j) = pairs.swap_remove(idx);
        done.insert((i, j));
        let (li, lj) = (&basis.lead[i], &basis.lead[j]);
        if li.is_coprime(lj) {
            continue;
        }
        let l = li.lcm(lj);
        // chain criterion
        let chain = (0..basis.polys.len()).any(|k| {
            k != i
                && k != j
                && basis.lead[k].divides(&l)
                && done.contains(&(i.min(k), i.max(k)))
                && done.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        if l.degree() > budget as u64 {
            return Err(Error::DegreeBudgetExceeded(budget));
        }
        let s = spoly(&basis, i, j, &l);
        let r = basis.reduce(s, None);
        if r.is_empty() {
            continue;
        }
        let r = monic(r);
        if r.len() == 1 && r.keys().next().unwrap().iter().all(|&x| x == 0) {
            return Ok(vec![Poly::one(nvars)]);
        }
        let n = basis.polys.len();
        basis.push(r);
        pairs.extend((0..n).map(|k| (k, n)));
    }
    // minimalize
    let m = basis.polys.len();
    let mut keep: Vec<usize> = Vec::new();
    for i in 0..m {
        let redundant = (0..m).any(|j| {
            j != i
                && basis.lead[j].divides(&basis.lead[i])
                && (basis.lead[j] != basis.lead[i] || j < i)
        });
        if !redundant {
            keep.push(i);
        }
    }
    let mut min = Basis {
        ord,
        polys: Vec::new(),
        lead: Vec::new(),
    };
    for &i in &keep {
        min.push(basis.polys[i].clone());
    }
    // interreduce
    let mut reduced = Vec::new();
    for i in 0..min.polys.len() {
        let p = min.polys[i].clone();
        let r = min.reduce(p, Some(i));
        reduced.push(monic(r));
    }
    reduced.sort_by(|a, b| a.keys().next_back().cmp(&b.keys().next_back()));
    Ok(reduced.iter().map(|p| from_opoly(p, nvars, ord)).collect())
}

fn spoly(b: &Basis, i: usize, j: usize, l: &Mono) -> OPoly {
    let mut out = OPoly::new();
    for (idx, sign) in [(i, Cyclo::one()), (j, Cyclo::from_int(-1))] {
        let q = b.lead[idx].quotient(l);
        let qk = b.ord.key(&q.0);
        for (k, c) in &b.polys[idx] {
            let nk = add_keys(k, &qk);
            let v = out.entry(nk.clone()).or_insert_with(Cyclo::zero);
            *v += &(c * &sign);
            if v.is_zero() {
                out.remove(&nk);
            }
        }
    }
    out
}

/// Normal form of `f` modulo a Groebner basis in the given order.
pub fn normal_form(f: &Poly, basis: &[Poly], ord: MonomialOrder) -> Poly {
    let mut b = Basis {
        ord,
        polys: Vec::new(),
        lead: Vec::new(),
    };
    for g in basis {
        b.push(to_opoly(g, ord));
    }
    from_opoly(&b.reduce(to_opoly(f, ord), None), f.nvars(), ord)
}

/// Leading monomial in the given order.
pub fn leading_mono(f: &Poly, ord: MonomialOrder) -> Option<Mono> {
    f.terms()
        .map(|(m, _)| m)
        .max_by_key(|m| ord.key(&m.0))
        .cloned()
}
