//! Poisson enveloping algebras of quadratic Poisson algebras, by
//! presentation and truncated linear algebra on words.

use std::collections::BTreeMap;

use crate::arith::{Cyclo, RationalSeries, UniPoly};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, SparseEchelon};
use crate::poisson::PoissonAlgebra;
use crate::poly::Poly;
use crate::symmetry::{automorphism_failure, classify, trace_series, Classification, GradedMap};

/// Largest degree [`envelope_dims`] accepts unless told otherwise.
pub const DEFAULT_DIMS_CAP: u32 = 4;

pub type Word = Vec<usize>;

/// A noncommutative polynomial: words in generator indices.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct NCPoly(pub BTreeMap<Word, Cyclo>);

impl NCPoly {
    pub fn word(w: Word, c: Cyclo) -> Self {
        let mut p = NCPoly::default();
        p.add_term(w, c);
        p
    }

    pub fn add_term(&mut self, w: Word, c: Cyclo) {
        if c.is_zero() {
            return;
        }
        let e = self.0.entry(w.clone()).or_insert_with(Cyclo::zero);
        *e += &c;
        if e.is_zero() {
            self.0.remove(&w);
        }
    }

    pub fn add(&mut self, other: &NCPoly, s: &Cyclo) {
        for (w, c) in &other.0 {
            self.add_term(w.clone(), c * s);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Substitute a linear combination of generators for each generator.
    pub fn apply_linear(&self, images: &[Vec<(usize, Cyclo)>]) -> NCPoly {
        let mut out = NCPoly::default();
        for (w, c) in &self.0 {
            let mut partial: Vec<(Word, Cyclo)> = vec![(Vec::new(), c.clone())];
            for &g in w {
                let mut next = Vec::with_capacity(partial.len() * images[g].len());
                for (pw, pc) in &partial {
                    for (h, hc) in &images[g] {
                        let mut nw = pw.clone();
                        nw.push(*h);
                        next.push((nw, pc * hc));
                    }
                }
                partial = next;
            }
            for (pw, pc) in partial {
                out.add_term(pw, pc);
            }
        }
        out
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.0.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        // longest words first, then by index order
        let mut terms: Vec<(&Word, &Cyclo)> = self.0.iter().collect();
        terms.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then_with(|| a.0.cmp(b.0)));
        for (i, (w, c)) in terms.into_iter().enumerate() {
            let word = w
                .iter()
                .map(|&g| names[g].as_str())
                .collect::<Vec<_>>()
                .join("*");
            let (neg, body) = coefficient_text(c);
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            match (body.as_str(), word.is_empty()) {
                ("1", false) => s.push_str(&word),
                (_, false) => {
                    s.push_str(&body);
                    s.push('*');
                    s.push_str(&word);
                }
                (_, true) => s.push_str(&body),
            }
        }
        s
    }
}

fn coefficient_text(c: &Cyclo) -> (bool, String) {
    if let Some(r) = c.as_rational() {
        let neg = r < &num_traits::Zero::zero();
        let abs = if neg { -r.clone() } else { r.clone() };
        return (neg, abs.to_string());
    }
    (false, format!("({c})"))
}

/// Generators m_1..m_n, h_1..h_n (indices 0..n and n..2n) and quadratic
/// relations.
#[derive(Clone, Debug)]
pub struct NCPresentation {
    pub names: Vec<String>,
    pub relations: Vec<NCPoly>,
    /// The commutator [a, b] leading each relation.
    heads: Vec<(usize, usize)>,
    nvars: usize,
}

impl NCPresentation {
    pub fn ngens(&self) -> usize {
        self.names.len()
    }

    pub fn m(&self, i: usize) -> usize {
        i
    }

    pub fn h(&self, i: usize) -> usize {
        self.nvars + i
    }

    /// A presentation from explicit relations, each rendered as written.
    pub fn from_parts(names: Vec<String>, relations: Vec<NCPoly>) -> Self {
        let nvars = names.len() / 2;
        NCPresentation {
            names,
            relations,
            heads: Vec::new(),
            nvars,
        }
    }

    /// `a*b - b*a - rest`, with the commutator written first.
    pub fn render_relation(&self, i: usize) -> String {
        let Some(&(a, b)) = self.heads.get(i) else {
            return self.relations[i].render(&self.names);
        };
        let mut rest = self.relations[i].clone();
        rest.add(&commutator(a, b), &-Cyclo::one());
        let (na, nb) = (&self.names[a], &self.names[b]);
        let head = format!("{na}*{nb} - {nb}*{na}");
        if rest.is_zero() {
            return head;
        }
        let tail = rest.render(&self.names);
        match tail.strip_prefix('-') {
            Some(t) => format!("{head} - {t}"),
            None => format!("{head} + {tail}"),
        }
    }

    /// One relation per line, `... = 0`.
    pub fn render(&self) -> String {
        (0..self.relations.len())
            .map(|i| format!("{} = 0\n", self.render_relation(i)))
            .collect()
    }

    /// Names x1, x2, y1, y2 for m_x, h_x, m_y, h_y (two variables only).
    pub fn with_short_aliases(mut self) -> Result<Self> {
        if self.nvars != 2 {
            return Err(Error::Input(
                "the x1/x2/y1/y2 naming needs exactly two variables".into(),
            ));
        }
        self.names = ["x1", "y1", "x2", "y2"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        Ok(self)
    }
}

/// m-image of a quadratic form: x_k x_l -> m_k m_l.
fn m_image(p: &Poly) -> NCPoly {
    let mut out = NCPoly::default();
    for (m, c) in p.terms() {
        out.add_term(mono_vars(&m.0), c.clone());
    }
    out
}

/// h-image of a quadratic form: x_k x_l -> m_l h_k + m_k h_l.
fn h_image(p: &Poly, n: usize) -> NCPoly {
    let mut out = NCPoly::default();
    for (m, c) in p.terms() {
        let v = mono_vars(&m.0);
        let (k, l) = (v[0], v[1]);
        out.add_term(vec![l, n + k], c.clone());
        out.add_term(vec![k, n + l], c.clone());
    }
    out
}

fn mono_vars(e: &[u32]) -> Vec<usize> {
    let mut v = Vec::new();
    for (i, &k) in e.iter().enumerate() {
        for _ in 0..k {
            v.push(i);
        }
    }
    v
}

fn commutator(a: usize, b: usize) -> NCPoly {
    let mut r = NCPoly::word(vec![a, b], Cyclo::one());
    r.add_term(vec![b, a], -Cyclo::one());
    r
}

/// [m_i, m_j] = 0 (i < j), [h_i, m_j] = m({x_i, x_j}) (all i, j),
/// [h_i, h_j] = h({x_i, x_j}) (i < j).
pub fn envelope_presentation(a: &PoissonAlgebra) -> Result<NCPresentation> {
    a.require_quadratic()?;
    let n = a.nvars();
    let mut names: Vec<String> = a.ring().names().iter().map(|x| format!("m_{x}")).collect();
    names.extend(a.ring().names().iter().map(|x| format!("h_{x}")));
    let mut relations = Vec::new();
    let mut heads = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            relations.push(commutator(i, j));
            heads.push((i, j));
        }
    }
    for i in 0..n {
        for j in 0..n {
            let mut r = commutator(n + i, j);
            r.add(&m_image(a.entry(i, j)), &-Cyclo::one());
            relations.push(r);
            heads.push((n + i, j));
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let mut r = commutator(n + i, n + j);
            r.add(&h_image(a.entry(i, j), n), &-Cyclo::one());
            relations.push(r);
            heads.push((n + i, n + j));
        }
    }
    Ok(NCPresentation {
        names,
        relations,
        heads,
        nvars: n,
    })
}

/// Span of u r v over relations r and words u, v with |u| + |v| = k - 2.
fn ideal_in_degree(p: &NCPresentation, k: usize) -> SparseEchelon<Word> {
    let g = p.ngens();
    let mut ech = SparseEchelon::new();
    if k < 2 {
        return ech;
    }
    let words = |len: usize| -> Vec<Word> {
        let mut out = vec![Vec::new()];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|w| {
                    (0..g).map(move |x| {
                        let mut w2 = w.clone();
                        w2.push(x);
                        w2
                    })
                })
                .collect();
        }
        out
    };
    for left in 0..=k - 2 {
        let us = words(left);
        let vs = words(k - 2 - left);
        for r in &p.relations {
            for u in &us {
                for v in &vs {
                    let mut shifted = BTreeMap::new();
                    for (w, c) in &r.0 {
                        let mut full = u.clone();
                        full.extend_from_slice(w);
                        full.extend_from_slice(v);
                        shifted.insert(full, c.clone());
                    }
                    ech.insert(&shifted);
                }
            }
        }
    }
    ech
}

/// dim U(A)_k for k = 0..=d: words of length k modulo the two-sided ideal
/// of the relations in that degree.
pub fn envelope_dims(a: &PoissonAlgebra, d: u32, cap: u32) -> Result<Vec<usize>> {
    a.require_quadratic()?;
    if d > cap {
        return Err(Error::CapExceeded(d, cap));
    }
    let p = envelope_presentation(a)?;
    presentation_dims(&p, d)
}

pub fn presentation_dims(p: &NCPresentation, d: u32) -> Result<Vec<usize>> {
    let g = p.ngens();
    Ok((0..=d as usize)
        .map(|k| g.pow(k as u32) - ideal_in_degree(p, k).rank())
        .collect())
}

/// Coefficients of 1/(1-t)^{2n}: binomial(2n + k - 1, k).
pub fn expected_dims(n: usize, d: u32) -> Vec<usize> {
    RationalSeries::hilbert_polynomial_ring(2 * n)
        .taylor(d as usize)
        .iter()
        .map(|c| {
            c.as_rational()
                .and_then(|r| num_traits::ToPrimitive::to_usize(&r.to_integer()))
                .unwrap_or(0)
        })
        .collect()
}

/// g acts on m_a and h_a through a: diag(g, g) on the generators.
pub fn envelope_extend(a: &PoissonAlgebra, g: &GradedMap) -> Result<GradedMap> {
    if let Some((i, j)) = automorphism_failure(a, g)? {
        return Err(Error::NotAutomorphism(
            a.ring().name(i).into(),
            a.ring().name(j).into(),
        ));
    }
    let ext = GradedMap::new(g.matrix().block_diag(g.matrix()))?;
    if a.is_quadratic() {
        let p = envelope_presentation(a)?;
        if !preserves_relations(&p, &ext) {
            return Err(Error::Input(
                "extension does not preserve the relations".into(),
            ));
        }
    }
    Ok(ext)
}

/// Every relation is sent into the span of the relations.
pub fn preserves_relations(p: &NCPresentation, g: &GradedMap) -> bool {
    let m = g.matrix();
    let images: Vec<Vec<(usize, Cyclo)>> = (0..p.ngens())
        .map(|i| {
            (0..p.ngens())
                .filter(|&j| !m.get(j, i).is_zero())
                .map(|j| (j, m.get(j, i).clone()))
                .collect()
        })
        .collect();
    let mut span = SparseEchelon::new();
    for r in &p.relations {
        span.insert(&r.0);
    }
    p.relations
        .iter()
        .all(|r| span.contains(&r.apply_linear(&images).0))
}

/// Trace series of a reflection on U(A) and whether it looks like a
/// quasi-reflection there.
#[derive(Clone, Debug, PartialEq)]
pub struct EnvelopeTrace {
    pub series: RationalSeries,
    pub quasi_reflection: bool,
}

/// Tr_{U(A)}(g, t) = Tr_A(g, t)^2, since (m_a, h_a) run over a normalizing
/// sequence on which g acts through two copies of A_1.
pub fn envelope_trace(a: &PoissonAlgebra, g: &GradedMap) -> Result<EnvelopeTrace> {
    if !matches!(classify(a, g)?, Classification::Reflection { .. }) {
        return Err(Error::NotReflection);
    }
    let ta = trace_series(g)?;
    let series = ta.mul(&ta);
    debug_assert_eq!(
        series,
        trace_series(&GradedMap::new(g.matrix().block_diag(g.matrix()))?)?
    );
    let quasi_reflection = is_quasi_reflection_series(&series, 2 * a.nvars());
    Ok(EnvelopeTrace {
        series,
        quasi_reflection,
    })
}

/// Does the series have the shape 1 / ((1-t)^{N-1} (1 - c t)) with c != 1?
pub fn is_quasi_reflection_series(s: &RationalSeries, n: usize) -> bool {
    if s.num().degree() != Some(0) {
        return false;
    }
    let one_minus_t = UniPoly::from_ints(&[1, -1]);
    let Ok(Some(rest)) = s.den().div_exact(&one_minus_t.pow(n as u32 - 1)) else {
        return false;
    };
    rest.degree() == Some(1) && !rest.eval(&Cyclo::one()).is_zero()
}

/// Matrix of a graded map restricted to the m-generators, for display.
pub fn block(m: &Matrix, n: usize, offset: usize) -> Matrix {
    let mut b = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            b.set(i, j, m.get(offset + i, offset + j).clone());
        }
    }
    b
}
