use std::collections::HashSet;

use rayon::prelude::*;

use super::{trace_series, GradedMap};
use crate::arith::cyclo::lcm;
use crate::arith::{Cyclo, RationalSeries};
use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// A finite group of graded maps, generators plus (once computed) all
/// elements.
#[derive(Clone, Debug)]
pub struct PoissonGroup {
    pub generators: Vec<GradedMap>,
    pub elements: Vec<GradedMap>,
    pub exponent: u32,
}

impl PoissonGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn nvars(&self) -> usize {
        self.elements[0].nvars()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    /// True when every element is a permutation matrix times a diagonal one.
    pub fn is_monomial(&self) -> bool {
        self.elements.iter().all(|g| is_monomial_matrix(g.matrix()))
    }
}

pub(crate) fn is_monomial_matrix(m: &Matrix) -> bool {
    (0..m.cols()).all(|j| (0..m.rows()).filter(|&i| !m.get(i, j).is_zero()).count() == 1)
}

fn key(m: &Matrix) -> String {
    let mut s = String::new();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            s.push_str(&m.get(i, j).descend().to_string());
            s.push(';');
        }
    }
    s
}

/// Breadth-first closure of the generators under composition. Every
/// generator must have finite order.
pub fn group_closure(gens: &[GradedMap], bound: usize) -> Result<PoissonGroup> {
    let Some(n) = gens.first().map(GradedMap::nvars) else {
        return Err(Error::Input("a group needs at least one generator".into()));
    };
    if gens.iter().any(|g| g.nvars() != n) {
        return Err(Error::Dimension(
            "generators act on different numbers of variables".into(),
        ));
    }
    if gens.iter().any(|g| g.order().is_none()) {
        return Err(Error::InfiniteOrder);
    }
    let id = GradedMap::identity(n);
    let mut seen: HashSet<String> = HashSet::from([key(id.matrix())]);
    let mut elements = vec![id];
    let mut frontier: Vec<GradedMap> = elements.clone();
    while !frontier.is_empty() {
        let products: Vec<(String, GradedMap)> = frontier
            .par_iter()
            .flat_map_iter(|f| gens.iter().map(move |g| g.compose(f)))
            .map(|p| (key(p.matrix()), p))
            .collect();
        let mut next = Vec::new();
        for (k, p) in products {
            if seen.insert(k) {
                if elements.len() >= bound {
                    return Err(Error::BoundExceeded(bound));
                }
                elements.push(p.clone());
                next.push(p);
            }
        }
        frontier = next;
    }
    let exponent = elements
        .iter()
        .map(|g| g.order().expect("finite group"))
        .fold(1, lcm);
    Ok(PoissonGroup {
        generators: gens.to_vec(),
        elements,
        exponent,
    })
}

/// Average of the trace series over the group.
pub fn molien_series(g: &PoissonGroup) -> Result<RationalSeries> {
    let traces: Vec<RationalSeries> = g
        .elements
        .par_iter()
        .map(trace_series)
        .collect::<Result<_>>()?;
    let sum = traces
        .into_iter()
        .reduce(|a, b| a.add(&b))
        .expect("nonempty group");
    Ok(sum.scale(&Cyclo::from_frac(1, g.order() as i64)))
}
