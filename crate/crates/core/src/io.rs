//! Text formats for algebras, maps, Lie data and matrices.
//!
//! ```text
//! # comments run to the end of the line
//! algebra A {
//!     vars: x, y, z;
//!     alias u = x;                  # optional
//!     bracket{x,y} = "x*y";         # unlisted pairs are zero
//! }
//!
//! map g on A {
//!     x -> zeta(3)*x;               # unlisted variables are fixed
//! }
//!
//! lie g {
//!     dim: 2;
//!     names: x1, x2;                # optional, default x1..xn
//!     bracket{x1,x2} = "x2";
//! }
//! ```
//!
//! A `.mat` file is whitespace-separated rows of scalars; an entry with
//! inner spaces must be parenthesized.

use crate::arith::Cyclo;
use crate::error::{Error, Result};
use crate::families::LieData;
use crate::linalg::Matrix;
use crate::poisson::PoissonAlgebra;
use crate::poly::{Poly, PolyRing};
use crate::symmetry::GradedMap;

fn strip_comments(src: &str) -> String {
    src.lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .collect::<Vec<_>>()
        .join("\n")
}

struct Block {
    header: Vec<String>,
    statements: Vec<String>,
}

fn parse_block(src: &str, keyword: &str) -> Result<Block> {
    let src = strip_comments(src);
    let open = src
        .find('{')
        .ok_or_else(|| Error::Input(format!("expected `{keyword} NAME {{`")))?;
    let close = src
        .rfind('}')
        .filter(|&c| c > open)
        .ok_or_else(|| Error::Input("missing closing `}`".into()))?;
    if !src[close + 1..].trim().is_empty() {
        return Err(Error::Input("trailing text after `}`".into()));
    }
    let header: Vec<String> = src[..open].split_whitespace().map(str::to_string).collect();
    if header.first().map(String::as_str) != Some(keyword) || header.len() < 2 {
        return Err(Error::Input(format!("expected `{keyword} NAME {{`")));
    }
    let mut statements = Vec::new();
    let mut cur = String::new();
    let mut quoted = false;
    // a `{` inside `bracket{..}` is part of the statement, so only quotes
    // and semicolons matter here
    for ch in src[open + 1..close].chars() {
        match ch {
            '"' => {
                quoted = !quoted;
                cur.push(ch);
            }
            ';' if !quoted => {
                statements.push(std::mem::take(&mut cur).trim().to_string());
            }
            _ => cur.push(ch),
        }
    }
    if quoted {
        return Err(Error::Input("unterminated string".into()));
    }
    if !cur.trim().is_empty() {
        return Err(Error::Input(format!("missing `;` after `{}`", cur.trim())));
    }
    statements.retain(|s| !s.is_empty());
    Ok(Block {
        header: header[1..].to_vec(),
        statements,
    })
}

fn unquote(s: &str) -> &str {
    let s = s.trim();
    s.strip_prefix('"')
        .and_then(|t| t.strip_suffix('"'))
        .unwrap_or(s)
}

fn split_list(s: &str) -> Vec<String> {
    s.split(',')
        .map(|t| t.trim().to_string())
        .filter(|t| !t.is_empty())
        .collect()
}

/// `bracket{a,b} = rhs` as (a, b, rhs).
fn bracket_statement(s: &str) -> Option<(String, String, String)> {
    let rest = s.strip_prefix("bracket")?.trim_start().strip_prefix('{')?;
    let (pair, rhs) = rest.split_once('}')?;
    let (a, b) = pair.split_once(',')?;
    let rhs = rhs.trim_start().strip_prefix('=')?;
    Some((
        a.trim().to_string(),
        b.trim().to_string(),
        unquote(rhs).to_string(),
    ))
}

fn keyed<'a>(s: &'a str, key: &str) -> Option<&'a str> {
    s.strip_prefix(key)?.trim_start().strip_prefix(':')
}

/// A parsed `.pois` file.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraFile {
    pub name: String,
    pub algebra: PoissonAlgebra,
}

pub fn parse_pois(src: &str, defer_jacobi: bool) -> Result<AlgebraFile> {
    let b = parse_block(src, "algebra")?;
    let mut vars: Option<Vec<String>> = None;
    let mut aliases: Vec<(String, String)> = Vec::new();
    let mut brackets: Vec<(String, String, String)> = Vec::new();
    for s in &b.statements {
        if let Some(v) = keyed(s, "vars") {
            vars = Some(split_list(v));
        } else if let Some(rest) = s.strip_prefix("alias ") {
            let (a, v) = rest
                .split_once('=')
                .ok_or_else(|| Error::Input(format!("bad alias `{s}`")))?;
            aliases.push((a.trim().to_string(), v.trim().to_string()));
        } else if let Some(t) = bracket_statement(s) {
            brackets.push(t);
        } else {
            return Err(Error::Input(format!("unrecognized statement `{s}`")));
        }
    }
    let vars = vars.ok_or_else(|| Error::Input("missing `vars:`".into()))?;
    let mut ring = PolyRing::new(&vars)?;
    for (a, v) in &aliases {
        let i = ring
            .index_of(v)
            .ok_or_else(|| Error::UnknownVariable(v.clone()))?;
        ring = ring.with_alias(a, i)?;
    }
    let mut entries = Vec::with_capacity(brackets.len());
    for (x, y, rhs) in &brackets {
        let i = ring
            .index_of(x)
            .ok_or_else(|| Error::UnknownVariable(x.clone()))?;
        let j = ring
            .index_of(y)
            .ok_or_else(|| Error::UnknownVariable(y.clone()))?;
        entries.push(((i, j), ring.parse(rhs)?));
    }
    let algebra = PoissonAlgebra::new(ring, entries, defer_jacobi)?;
    Ok(AlgebraFile {
        name: b.header[0].clone(),
        algebra,
    })
}

pub fn emit_pois(name: &str, a: &PoissonAlgebra) -> String {
    let r = a.ring();
    let mut out = format!("algebra {name} {{\n    vars: {};\n", r.names().join(", "));
    for (alias, i) in r.aliases() {
        out += &format!("    alias {alias} = {};\n", r.name(*i));
    }
    for i in 0..a.nvars() {
        for j in i + 1..a.nvars() {
            if !a.entry(i, j).is_zero() {
                out += &format!(
                    "    bracket{{{},{}}} = \"{}\";\n",
                    r.name(i),
                    r.name(j),
                    r.fmt(a.entry(i, j))
                );
            }
        }
    }
    out + "}\n"
}

/// A parsed `.map` file. `on` names the algebra the map was written for.
#[derive(Clone, Debug, PartialEq)]
pub struct MapFile {
    pub name: String,
    pub on: Option<String>,
    pub map: GradedMap,
}

pub fn parse_map(src: &str, ring: &PolyRing) -> Result<MapFile> {
    let b = parse_block(src, "map")?;
    let on = match b.header.get(1).map(String::as_str) {
        Some("on") => Some(
            b.header
                .get(2)
                .cloned()
                .ok_or_else(|| Error::Input("expected a name after `on`".into()))?,
        ),
        Some(t) => return Err(Error::Input(format!("unexpected `{t}` in map header"))),
        None => None,
    };
    let n = ring.nvars();
    let mut images: Vec<Option<Vec<Cyclo>>> = vec![None; n];
    for s in &b.statements {
        let (lhs, rhs) = s
            .split_once("->")
            .ok_or_else(|| Error::Input(format!("expected `var -> image` in `{s}`")))?;
        let lhs = lhs.trim();
        let i = ring
            .index_of(lhs)
            .ok_or_else(|| Error::UnknownVariable(lhs.to_string()))?;
        let img = ring.parse(unquote(rhs))?;
        let form = img
            .to_linear_form()
            .filter(|_| !img.is_zero())
            .ok_or_else(|| Error::Input(format!("image of {lhs} is not a nonzero linear form")))?;
        if images[i].replace(form).is_some() {
            return Err(Error::Input(format!("image of {lhs} given twice")));
        }
    }
    let images: Vec<Vec<Cyclo>> = images
        .into_iter()
        .enumerate()
        .map(|(i, v)| v.unwrap_or_else(|| Poly::var(n, i).to_linear_form().unwrap()))
        .collect();
    Ok(MapFile {
        name: b.header[0].clone(),
        on,
        map: GradedMap::from_images(&images)?,
    })
}

pub fn emit_map(name: &str, on: Option<&str>, g: &GradedMap, ring: &PolyRing) -> String {
    let mut out = match on {
        Some(a) => format!("map {name} on {a} {{\n"),
        None => format!("map {name} {{\n"),
    };
    for i in 0..g.nvars() {
        out += &format!("    {} -> {};\n", ring.name(i), ring.fmt(&g.image(i)));
    }
    out + "}\n"
}

#[derive(Clone, Debug, PartialEq)]
pub struct LieFile {
    pub name: String,
    pub lie: LieData,
}

pub fn parse_lie(src: &str) -> Result<LieFile> {
    let b = parse_block(src, "lie")?;
    let mut dim: Option<usize> = None;
    let mut names: Option<Vec<String>> = None;
    let mut brackets = Vec::new();
    for s in &b.statements {
        if let Some(v) = keyed(s, "dim") {
            dim = Some(
                v.trim()
                    .parse()
                    .map_err(|_| Error::Input(format!("bad dimension `{}`", v.trim())))?,
            );
        } else if let Some(v) = keyed(s, "names") {
            names = Some(split_list(v));
        } else if let Some(t) = bracket_statement(s) {
            brackets.push(t);
        } else {
            return Err(Error::Input(format!("unrecognized statement `{s}`")));
        }
    }
    let names = match (dim, names) {
        (Some(d), Some(ns)) if ns.len() != d => {
            return Err(Error::Dimension(format!("dim {d} but {} names", ns.len())));
        }
        (_, Some(ns)) => ns,
        (Some(d), None) => (1..=d).map(|i| format!("x{i}")).collect(),
        (None, None) => return Err(Error::Input("missing `dim:`".into())),
    };
    let ring = PolyRing::new(&names)?;
    // indices may be given by name or 1-based position
    let index = |t: &str| -> Result<usize> {
        ring.index_of(t)
            .or_else(|| {
                t.parse::<usize>()
                    .ok()
                    .filter(|&k| k >= 1 && k <= names.len())
                    .map(|k| k - 1)
            })
            .ok_or_else(|| Error::UnknownVariable(t.to_string()))
    };
    let mut entries = Vec::new();
    for (x, y, rhs) in &brackets {
        let p = ring.parse(rhs)?;
        let v = p
            .to_linear_form()
            .ok_or_else(|| Error::Input(format!("[{x}, {y}] is not linear")))?;
        entries.push(((index(x)?, index(y)?), v));
    }
    Ok(LieFile {
        name: b.header[0].clone(),
        lie: LieData::new(names, entries)?,
    })
}

pub fn emit_lie(name: &str, l: &LieData) -> String {
    let n = l.dim();
    let ring = PolyRing::new(l.names()).expect("valid names");
    let mut out = format!(
        "lie {name} {{\n    dim: {n};\n    names: {};\n",
        l.names().join(", ")
    );
    for i in 0..n {
        for j in i + 1..n {
            let v = l.constants(i, j);
            if v.iter().any(|c| !c.is_zero()) {
                out += &format!(
                    "    bracket{{{},{}}} = \"{}\";\n",
                    l.names()[i],
                    l.names()[j],
                    ring.fmt_linear(v)
                );
            }
        }
    }
    out + "}\n"
}

/// Split a row on whitespace outside parentheses.
fn mat_tokens(line: &str) -> Result<Vec<String>> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut depth = 0i32;
    for ch in line.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if c.is_whitespace() && depth == 0 => {
                if !cur.is_empty() {
                    out.push(std::mem::take(&mut cur));
                }
                continue;
            }
            _ => {}
        }
        if depth < 0 {
            return Err(Error::Input("unbalanced parentheses".into()));
        }
        cur.push(ch);
    }
    if depth != 0 {
        return Err(Error::Input("unbalanced parentheses".into()));
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    Ok(out)
}

pub fn parse_scalar(s: &str) -> Result<Cyclo> {
    let r = PolyRing::new(Vec::<String>::new())?;
    Ok(r.parse(s)?.constant_term())
}

pub fn parse_mat(src: &str) -> Result<Matrix> {
    let mut rows = Vec::new();
    for line in strip_comments(src).lines() {
        let toks = mat_tokens(line)?;
        if toks.is_empty() {
            continue;
        }
        rows.push(
            toks.iter()
                .map(|t| parse_scalar(t))
                .collect::<Result<Vec<_>>>()?,
        );
    }
    if rows.is_empty() {
        return Err(Error::Input("empty matrix".into()));
    }
    Matrix::from_rows(rows)
}

pub fn emit_mat(m: &Matrix) -> String {
    let lit = |c: &Cyclo| {
        if c.is_single_term() {
            c.to_literal()
        } else {
            format!("({c})")
        }
    };
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(lit).collect::<Vec<_>>().join(" ") + "\n")
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{f_pq, quantum_matrices};

    const SKEW: &str = "# skew plane\nalgebra P {\n  vars: x, y;\n  bracket{x,y} = \"3*x*y\";\n}\n";

    #[test]
    fn pois_round_trip() {
        let f = parse_pois(SKEW, false).unwrap();
        assert_eq!(f.name, "P");
        assert_eq!(f.algebra.entry(0, 1), &f.algebra.parse("3*x*y").unwrap());
        for a in [
            f.algebra,
            f_pq(&Cyclo::zeta(3, 1), &Cyclo::from_frac(-1, 2)).unwrap(),
            quantum_matrices(2).unwrap(),
        ] {
            let text = emit_pois("A", &a);
            assert_eq!(parse_pois(&text, false).unwrap().algebra, a, "{text}");
        }
    }

    #[test]
    fn pois_rejects_non_jacobi() {
        let src = "algebra B { vars: x, y, z; bracket{x,y} = \"x^2\"; bracket{z,x} = \"z^2\"; }";
        assert!(matches!(
            parse_pois(src, false),
            Err(Error::JacobiFails(..))
        ));
        let a = parse_pois(src, true).unwrap().algebra;
        assert!(!a.jacobi_check().holds);
    }

    #[test]
    fn pois_errors() {
        assert!(parse_pois("algebra A { vars: x; bracket{x,q} = \"x\"; }", false).is_err());
        assert!(parse_pois("algebra A { vars: x, y }", false).is_err());
        assert!(parse_pois("algebra A { frobnicate; }", false).is_err());
    }

    #[test]
    fn map_round_trip() {
        let a = parse_pois(SKEW, false).unwrap().algebra;
        let m = parse_map("map g on P { x -> zeta(3)*x; }", a.ring()).unwrap();
        assert_eq!(m.on.as_deref(), Some("P"));
        assert_eq!(
            m.map,
            GradedMap::diagonal(&[Cyclo::zeta(3, 1), Cyclo::one()]).unwrap()
        );
        let text = emit_map("g", Some("P"), &m.map, a.ring());
        assert_eq!(parse_map(&text, a.ring()).unwrap(), m);
        assert!(parse_map("map g { x -> x*y; }", a.ring()).is_err());
        assert!(parse_map("map g { x -> 0; }", a.ring()).is_err());
    }

    #[test]
    fn lie_round_trip() {
        let src = "lie sl2 { dim: 3; names: e, f, h; bracket{e,f} = h; bracket{h,e} = \"2*e\"; bracket{3,2} = \"-2*f\"; }";
        let l = parse_lie(src).unwrap().lie;
        assert_eq!(
            l.constants(2, 1),
            &[Cyclo::zero(), Cyclo::from_int(-2), Cyclo::zero()]
        );
        assert_eq!(parse_lie(&emit_lie("sl2", &l)).unwrap().lie, l);
        assert!(matches!(
            parse_lie("lie b { dim: 3; bracket{1,2} = x3; bracket{2,3} = x2; }"),
            Err(Error::LieJacobiFails(..))
        ));
    }

    #[test]
    fn mat_round_trip() {
        let m = parse_mat("0 zeta(3)\n(1 + zeta(3)) -1/2\n").unwrap();
        assert_eq!(m.get(1, 0), &(&Cyclo::one() + &Cyclo::zeta(3, 1)));
        assert_eq!(parse_mat(&emit_mat(&m)).unwrap(), m);
        assert!(parse_mat("1 2\n3\n").is_err());
    }
}
