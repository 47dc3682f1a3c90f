//! JSON encodings shared by the commands.

use serde_json::{json, Value};

use crate::arith::{Cyclo, RationalSeries, UniPoly};
use crate::fixed::{is_skew_presentation, PresentedPoisson};
use crate::linalg::Matrix;
use crate::poly::{Poly, PolyRing};
use crate::solver::SolutionSet;

/// `{"conductor": N, "coeffs": [...], "text": ...}`, coefficients of
/// 1, zeta_N, zeta_N^2, ... as exact rationals.
pub fn cyclo(c: &Cyclo) -> Value {
    let c = c.descend();
    let coeffs: Vec<String> = c.coeffs().iter().map(ToString::to_string).collect();
    json!({ "conductor": c.conductor(), "coeffs": coeffs, "text": c.to_string() })
}

pub fn poly(r: &PolyRing, p: &Poly) -> Value {
    Value::String(r.fmt(p))
}

pub fn polys(r: &PolyRing, ps: &[Poly]) -> Value {
    Value::Array(ps.iter().map(|p| poly(r, p)).collect())
}

pub fn form(r: &PolyRing, v: &[Cyclo]) -> Value {
    Value::String(r.fmt_linear(v))
}

pub fn matrix(m: &Matrix) -> Value {
    Value::Array(
        m.to_rows()
            .iter()
            .map(|row| Value::Array(row.iter().map(|c| c.to_string().into()).collect()))
            .collect(),
    )
}

fn unipoly(p: &UniPoly) -> Value {
    Value::Array(p.coeffs().iter().map(|c| c.to_string().into()).collect())
}

pub fn series(s: &RationalSeries, terms: usize) -> Value {
    let taylor: Vec<String> = s.taylor(terms).iter().map(ToString::to_string).collect();
    json!({ "num": unipoly(s.num()), "den": unipoly(s.den()), "text": s.to_string(), "taylor": taylor })
}

pub fn solution_set(r: &PolyRing, s: &SolutionSet) -> Value {
    let spaces = |b: &[Vec<Cyclo>]| Value::Array(b.iter().map(|v| form(r, v)).collect());
    let body = match s {
        SolutionSet::Empty => Value::Array(vec![]),
        SolutionSet::LinearSubspace(b) => json!([spaces(b)]),
        SolutionSet::Subspaces(bs) => Value::Array(bs.iter().map(|b| spaces(b)).collect()),
        SolutionSet::FinitePoints(ps) => {
            Value::Array(ps.iter().map(|p| json!([form(r, p)])).collect())
        }
        SolutionSet::IdealOnly(g) => return json!({ "kind": s.kind(), "ideal": polys(r, g) }),
    };
    json!({ "kind": s.kind(), "components": body })
}

pub fn presented(p: &PresentedPoisson, ambient: &PolyRing) -> Value {
    let r = &p.ring;
    let gens: Vec<Value> = (0..p.ngens())
        .map(|i| json!({ "name": r.name(i), "degree": p.degrees[i], "expression": poly(ambient, &p.expressions[i]) }))
        .collect();
    let mut brackets = serde_json::Map::new();
    for i in 0..p.ngens() {
        for j in i + 1..p.ngens() {
            brackets.insert(
                format!("{{{},{}}}", r.name(i), r.name(j)),
                poly(r, &p.brackets[i][j]),
            );
        }
    }
    json!({
        "generators": gens,
        "relations": polys(r, &p.relations),
        "brackets": brackets,
        "polynomial": p.is_polynomial(),
        "certified": p.certified,
        "degree_bound": p.degree_bound,
        "skew": is_skew_presentation(p).map(|q| matrix(&q)),
    })
}
