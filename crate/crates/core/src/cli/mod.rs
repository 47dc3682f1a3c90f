//! The `pwb` command line.
//!
//! Every command prints one JSON report on stdout and a short human summary
//! on stderr (suppressed by `--json`). Exit codes: 0 success, 2 a negative
//! mathematical finding, 1 an error.

mod json;
pub mod suite;

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::arith::Cyclo;
use crate::envelope::{
    envelope_dims, envelope_extend, envelope_presentation, envelope_trace, expected_dims,
    preserves_relations, DEFAULT_DIMS_CAP,
};
use crate::error::{Error, Result};
use crate::families::{
    f_pq, homogenized_weyl, jacobian, ph_lie, potential_pq, quantum_matrices, skew_symmetric, weyl,
};
use crate::fixed::{fixed_group, rigidity_report, InvariantSummary, Verdict};
use crate::io::{emit_pois, parse_lie, parse_map, parse_mat, parse_pois, parse_scalar};
use crate::poisson::{
    is_unimodular, modular_derivation, normal_check, normal_find_deg1, ore_split, PoissonAlgebra,
};
use crate::poly::PolyRing;
use crate::solver::DEFAULT_BUDGET;
use crate::symmetry::{
    classify, find_reflections, group_closure, molien_series, trace_series, Classification,
    GradedMap, PoissonGroup, ReflectionReport,
};

pub const SCHEMA: &str = "pwb/1";
const GROUP_BOUND: usize = 10_000;
const SERIES_TERMS: usize = 8;

#[derive(Parser, Debug)]
#[command(
    name = "pwb",
    version,
    about = "Exact computations with quadratic Poisson algebras"
)]
struct Cli {
    /// JSON only: suppress the human summary on stderr.
    #[arg(long, global = true)]
    json: bool,
    /// Degree cap for S-polynomials in Groebner basis computations.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u32,
    /// Load algebras without verifying the Jacobi identity.
    #[arg(long, global = true)]
    defer_jacobi: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct AlgebraArg {
    /// A `.pois` file.
    #[arg(long)]
    algebra: PathBuf,
}

#[derive(Args, Debug)]
struct GroupArgs {
    #[command(flatten)]
    algebra: AlgebraArg,
    /// Comma-separated `.map` files generating the group.
    #[arg(long, value_delimiter = ',', required = true)]
    group: Vec<PathBuf>,
    /// Truncation degree (default max(4, 2 * exponent)).
    #[arg(long)]
    degree: Option<u32>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Verify the Jacobi identity and report basic structure.
    Check(AlgebraArg),
    /// Degree-one Poisson normal elements, or test one element.
    Normal {
        #[command(flatten)]
        algebra: AlgebraArg,
        /// Test this element instead of solving for all linear ones.
        #[arg(long)]
        element: Option<String>,
        /// Also split A as a Poisson-Ore extension over the element.
        #[arg(long, requires = "element")]
        split: bool,
    },
    /// Families of graded Poisson reflections.
    Reflections(AlgebraArg),
    /// Generators, relations and brackets of the fixed subring.
    Fixed(GroupArgs),
    /// Compare isomorphism invariants of A and A^G.
    Report(GroupArgs),
    /// Classify a graded map and give its trace series.
    Trace {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long)]
        map: PathBuf,
        /// Number of Taylor coefficients to print.
        #[arg(long, default_value_t = SERIES_TERMS as u32)]
        degree: u32,
    },
    /// Molien series of a finite group of graded automorphisms.
    Molien {
        #[command(flatten)]
        group: GroupArgs,
    },
    /// Emit a `.pois` file for one of the built-in families.
    Family {
        #[command(subcommand)]
        kind: FamilyKind,
        /// Algebra name in the emitted file.
        #[arg(long, default_value = "A", global = true)]
        name: String,
        /// Also write the `.pois` text here.
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Presentation of the Poisson enveloping algebra.
    Envelope {
        #[command(flatten)]
        algebra: AlgebraArg,
        /// Graded dimensions up to this degree.
        #[arg(long)]
        dims: Option<u32>,
        /// Largest degree `--dims` may ask for.
        #[arg(long, default_value_t = DEFAULT_DIMS_CAP)]
        dims_cap: u32,
        /// Extend a graded automorphism of A to the enveloping algebra.
        #[arg(long)]
        extend: Option<PathBuf>,
        /// Trace series of a reflection of A on the enveloping algebra.
        #[arg(long)]
        trace: Option<PathBuf>,
        /// Name the generators x1, y1, x2, y2 (two variables only).
        #[arg(long)]
        aliases_paper: bool,
    },
    /// Run the bundled reference vectors.
    PaperSuite {
        /// Only vectors whose id contains this string.
        #[arg(long)]
        filter: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
enum FamilyKind {
    /// {x_i, x_j} = q_ij x_i x_j from a `.mat` file.
    Skew {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Jacobian bracket of f_{p,q} or of an explicit potential in x, y, z.
    Jacobian {
        #[arg(long, allow_hyphen_values = true)]
        p: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        q: Option<String>,
        #[arg(long, conflicts_with_all = ["p", "q"], allow_hyphen_values = true)]
        potential: Option<String>,
    },
    /// Semiclassical limit of quantum n x n matrices.
    Qmatrix {
        #[arg(long)]
        n: usize,
    },
    /// Weyl Poisson algebra, optionally homogenized.
    Weyl {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        homogenized: bool,
    },
    /// Homogenized Lie-Poisson algebra of a `.lie` file.
    PhLie {
        #[arg(long)]
        lie: PathBuf,
    },
}

/// A finished command: the report body plus what goes to stderr.
#[derive(Debug)]
pub struct Outcome {
    pub report: Value,
    pub summary: String,
    pub code: i32,
}

struct Session {
    budget: u32,
    defer_jacobi: bool,
    inputs: Vec<Value>,
    diagnostics: Vec<String>,
}

impl Session {
    fn read(&mut self, path: &Path) -> Result<String> {
        let bytes =
            std::fs::read(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
        let digest = hex::encode(Sha256::digest(&bytes));
        self.inputs
            .push(json!({ "path": path.display().to_string(), "sha256": digest }));
        String::from_utf8(bytes).map_err(|_| Error::Input(format!("{}: not UTF-8", path.display())))
    }

    fn algebra(&mut self, arg: &AlgebraArg) -> Result<PoissonAlgebra> {
        let src = self.read(&arg.algebra)?;
        Ok(parse_pois(&src, self.defer_jacobi)?.algebra)
    }

    fn map(&mut self, path: &Path, ring: &PolyRing) -> Result<GradedMap> {
        let src = self.read(path)?;
        Ok(parse_map(&src, ring)?.map)
    }

    fn group(&mut self, args: &GroupArgs) -> Result<(PoissonAlgebra, PoissonGroup)> {
        let a = self.algebra(&args.algebra)?;
        let gens = args
            .group
            .iter()
            .map(|p| self.map(p, a.ring()))
            .collect::<Result<Vec<_>>>()?;
        let g = group_closure(&gens, GROUP_BOUND)?;
        Ok((a, g))
    }
}

/// Command result before wrapping: payload, human summary, negative flag.
type Answer = (Value, String, bool);

/// Parse arguments, run, and return the report without printing.
pub fn execute<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let report = json!({ "schema": SCHEMA, "command": "usage", "error": { "kind": "usage", "message": e.to_string() }, "exit_code": code });
            return Outcome {
                report,
                summary: e.to_string(),
                code,
            };
        }
    };
    let command = command_name(&cli.command);
    let mut s = Session {
        budget: cli.budget,
        defer_jacobi: cli.defer_jacobi,
        inputs: Vec::new(),
        diagnostics: Vec::new(),
    };
    let (result, summary, code) = match dispatch(&cli.command, &mut s) {
        Ok((v, summary, negative)) => (v, summary, if negative { 2 } else { 0 }),
        Err(e) => {
            let code = if e.is_negative_finding() { 2 } else { 1 };
            (
                json!({ "error": { "kind": e.kind(), "message": e.to_string() } }),
                format!("{command}: {e}"),
                code,
            )
        }
    };
    let report = json!({
        "schema": SCHEMA,
        "command": command,
        "inputs": s.inputs,
        "result": result,
        "diagnostics": s.diagnostics,
        "exit_code": code,
    });
    Outcome {
        report,
        summary,
        code,
    }
}

/// Run with process arguments, print, and return the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let quiet = args.iter().any(|a| a == "--json");
    let out = execute(args);
    if out.report["command"] == "usage" {
        if out.code == 0 {
            print!("{}", out.summary);
        } else {
            eprint!("{}", out.summary);
        }
        return out.code;
    }
    // a closed pipe downstream is not our failure
    let _ = writeln!(
        std::io::stdout().lock(),
        "{}",
        serde_json::to_string_pretty(&out.report).expect("serializable")
    );
    if !quiet && !out.summary.is_empty() {
        let _ = writeln!(std::io::stderr().lock(), "{}", out.summary.trim_end());
    }
    out.code
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Check(_) => "check",
        Command::Normal { .. } => "normal",
        Command::Reflections(_) => "reflections",
        Command::Fixed(_) => "fixed",
        Command::Report(_) => "report",
        Command::Trace { .. } => "trace",
        Command::Molien { .. } => "molien",
        Command::Family { .. } => "family",
        Command::Envelope { .. } => "envelope",
        Command::PaperSuite { .. } => "paper-suite",
    }
}

fn dispatch(c: &Command, s: &mut Session) -> Result<Answer> {
    match c {
        Command::Check(a) => check(s, a),
        Command::Normal {
            algebra,
            element,
            split,
        } => normal(s, algebra, element.as_deref(), *split),
        Command::Reflections(a) => reflections(s, a),
        Command::Fixed(g) => fixed(s, g),
        Command::Report(g) => report(s, g),
        Command::Trace {
            algebra,
            map,
            degree,
        } => trace(s, algebra, map, *degree as usize),
        Command::Molien { group } => molien(s, group),
        Command::Family { kind, name, out } => family(s, kind, name, out.as_deref()),
        Command::Envelope {
            algebra,
            dims,
            dims_cap,
            extend,
            trace,
            aliases_paper,
        } => envelope(
            s,
            algebra,
            *dims,
            *dims_cap,
            extend.as_deref(),
            trace.as_deref(),
            *aliases_paper,
        ),
        Command::PaperSuite { filter } => paper_suite(s, filter.as_deref()),
    }
}

fn check(s: &mut Session, arg: &AlgebraArg) -> Result<Answer> {
    let src = s.read(&arg.algebra)?;
    let a = parse_pois(&src, true)?.algebra;
    let r = a.ring();
    let jr = a.jacobi_check();
    let mut v = json!({
        "jacobi": jr.holds,
        "nvars": a.nvars(),
        "quadratic": a.is_quadratic(),
        "bracket_degree": a.bracket_degree(),
    });
    if let (Some((i, j, k)), Some(sum)) = (jr.failing, &jr.cyclic_sum) {
        v["failing"] = json!([r.name(i), r.name(j), r.name(k)]);
        v["cyclic_sum"] = json::poly(r, sum);
        let summary = format!(
            "Jacobi fails on ({}, {}, {}): cyclic sum {}",
            r.name(i),
            r.name(j),
            r.name(k),
            r.fmt(sum)
        );
        return Ok((v, summary, true));
    }
    let phi = modular_derivation(&a);
    v["unimodular"] = json!(is_unimodular(&a));
    v["modular_derivation"] = modular_images(r, &phi.images);
    let summary = format!(
        "Poisson bracket on {} variables, unimodular: {}",
        a.nvars(),
        is_unimodular(&a)
    );
    Ok((v, summary, false))
}

fn modular_images(r: &PolyRing, images: &[crate::poly::Poly]) -> Value {
    let mut m = serde_json::Map::new();
    for (i, p) in images.iter().enumerate() {
        m.insert(r.name(i).to_string(), json::poly(r, p));
    }
    Value::Object(m)
}

fn normal(s: &mut Session, arg: &AlgebraArg, element: Option<&str>, split: bool) -> Result<Answer> {
    let a = s.algebra(arg)?;
    let r = a.ring().clone();
    let Some(src) = element else {
        let set = normal_find_deg1(&a, s.budget)?;
        if matches!(set, crate::solver::SolutionSet::IdealOnly(_)) {
            s.diagnostics.push(
                "normal elements could not be enumerated; the defining ideal is reported".into(),
            );
        }
        let summary = format!("degree-one normal elements: {}", set.kind());
        return Ok((
            json!({ "normal_elements": json::solution_set(&r, &set) }),
            summary,
            false,
        ));
    };
    let u = a.parse(src)?;
    let Some(pi) = normal_check(&a, &u)? else {
        return Ok((
            json!({ "element": r.fmt(&u), "normal": false }),
            format!("{} is not Poisson normal", r.fmt(&u)),
            true,
        ));
    };
    let mut v = json!({ "element": r.fmt(&u), "normal": true, "derivation": modular_images(&r, &pi.images) });
    if split {
        let form = u
            .to_linear_form()
            .ok_or_else(|| Error::Input("--split needs a linear element".into()))?;
        let o = ore_split(&a, &form)?;
        let br = o.base.ring();
        v["ore"] = json!({
            "normal_var": json::form(&r, &o.normal_var),
            "complement": o.complement.iter().map(|c| json::form(&r, c)).collect::<Vec<_>>(),
            "base": emit_pois("B", &o.base),
            "alpha": modular_images(br, &o.alpha.images),
        });
    }
    Ok((v, format!("{} is Poisson normal", r.fmt(&u)), false))
}

fn reflections(s: &mut Session, arg: &AlgebraArg) -> Result<Answer> {
    let a = s.algebra(arg)?;
    let r = a.ring();
    Ok(match find_reflections(&a, s.budget)? {
        ReflectionReport::NoReflections => (
            json!({ "reflections": "none" }),
            "no Poisson reflections".into(),
            false,
        ),
        ReflectionReport::Inconclusive(ideal) => {
            s.diagnostics
                .push("degree-one normal elements could not be enumerated".into());
            (
                json!({ "reflections": "inconclusive", "ideal": json::polys(r, &ideal) }),
                "inconclusive".into(),
                false,
            )
        }
        ReflectionReport::Families(fams) => {
            let mut out = Vec::new();
            for f in &fams {
                let pr = &f.params;
                let sample = match f.sample(s.budget)? {
                    Some(g) => json::matrix(g.matrix()),
                    None => Value::Null,
                };
                out.push(json!({
                    "direction": f.direction.iter().map(|d| json::form(r, d)).collect::<Vec<_>>(),
                    "chart": f.chart,
                    "params": pr.names(),
                    "ideal": json::polys(pr, &f.ideal),
                    "matrix": f.matrix.iter().map(|row| json::polys(pr, row)).collect::<Vec<_>>(),
                    "xi": json::poly(pr, &f.xi),
                    "order_two": f.order_two,
                    "sample": sample,
                }));
            }
            let summary = format!(
                "{} reflection famil{}",
                fams.len(),
                if fams.len() == 1 { "y" } else { "ies" }
            );
            (json!({ "reflections": out }), summary, false)
        }
    })
}

fn fixed(s: &mut Session, args: &GroupArgs) -> Result<Answer> {
    let (a, g) = s.group(args)?;
    let p = fixed_group(&a, &g, args.degree, s.budget)?;
    if !p.certified {
        s.diagnostics.push(format!(
            "truncated at degree {}: generators are complete only up to this degree",
            p.degree_bound
        ));
    }
    let mut v = json::presented(&p, a.ring());
    v["group_order"] = json!(g.order());
    if let Some(b) = p.to_algebra() {
        v["pois"] = json!(emit_pois("AG", &b));
    }
    let names = p.ring.names().join(", ");
    Ok((
        v,
        format!(
            "A^G generated by {names}; polynomial: {}",
            p.is_polynomial()
        ),
        false,
    ))
}

fn summary_json(x: &InvariantSummary) -> Value {
    json!({
        "unimodular": x.unimodular,
        "center_dims": x.center_dims,
        "derived_dims": x.derived_dims,
        "skew": x.skew,
        "components": x.components,
        "center_in_derived": x.center_in_derived,
    })
}

fn report(s: &mut Session, args: &GroupArgs) -> Result<Answer> {
    let (a, g) = s.group(args)?;
    let rep = rigidity_report(&a, &g, args.degree, s.budget)?;
    if rep.ag.is_none() {
        s.diagnostics
            .push("A^G is not a polynomial ring; no invariants compared".into());
    }
    let pick = |f: &dyn Fn(&InvariantSummary) -> Value| json!({ "A": f(&rep.a), "AG": rep.ag.as_ref().map(f) });
    let (verdict, witness, summary) = match &rep.verdict {
        Verdict::Distinguished { witness, a, ag } => (
            "distinguished",
            json!({ "invariant": witness, "A": a, "AG": ag }),
            format!("A and A^G differ in {witness}: {a} vs {ag}"),
        ),
        Verdict::NotDistinguished => (
            "not-distinguished",
            Value::Null,
            "no computed invariant differs".to_string(),
        ),
    };
    let v = json!({
        "unimodular": pick(&|x| json!(x.unimodular)),
        "center_dims": pick(&|x| json!(x.center_dims)),
        "derived_dims": pick(&|x| json!(x.derived_dims)),
        "skew": pick(&|x| json!(x.skew)),
        "summaries": pick(&summary_json),
        "verdict": verdict,
        "witness": witness,
        "degree_bound": rep.degree_bound,
        "fixed": json::presented(&rep.fixed, a.ring()),
    });
    Ok((v, summary, false))
}

fn classification_json(r: &PolyRing, c: &Classification) -> Value {
    match c {
        Classification::NotAutomorphism(x, y) => json!({ "kind": c.kind(), "pair": [x, y] }),
        Classification::Reflection {
            xi,
            order,
            eigenbasis,
        } => json!({
            "kind": c.kind(),
            "xi": json::cyclo(xi),
            "order": order,
            "eigenbasis": eigenbasis.iter().map(|v| json::form(r, v)).collect::<Vec<_>>(),
        }),
        Classification::FiniteNonReflection { order } => {
            json!({ "kind": c.kind(), "order": order })
        }
        _ => json!({ "kind": c.kind() }),
    }
}

fn trace(s: &mut Session, arg: &AlgebraArg, map: &Path, terms: usize) -> Result<Answer> {
    let a = s.algebra(arg)?;
    let g = s.map(map, a.ring())?;
    let c = classify(&a, &g)?;
    let series = trace_series(&g)?;
    let negative = matches!(c, Classification::NotAutomorphism(..));
    let v = json!({ "classification": classification_json(a.ring(), &c), "trace_series": json::series(&series, terms) });
    Ok((v, format!("{}; trace series {series}", c.kind()), negative))
}

fn molien(s: &mut Session, args: &GroupArgs) -> Result<Answer> {
    let (_, g) = s.group(args)?;
    let m = molien_series(&g)?;
    let terms = args.degree.map_or(SERIES_TERMS, |d| d as usize);
    let v = json!({ "group_order": g.order(), "exponent": g.exponent, "molien": json::series(&m, terms) });
    Ok((v, format!("|G| = {}; Molien series {m}", g.order()), false))
}

fn family(s: &mut Session, kind: &FamilyKind, name: &str, out: Option<&Path>) -> Result<Answer> {
    let a = match kind {
        FamilyKind::Skew { matrix } => skew_symmetric(&parse_mat(&s.read(matrix)?)?)?,
        FamilyKind::Jacobian {
            potential: Some(f), ..
        } => {
            let r = PolyRing::new(["x", "y", "z"])?;
            jacobian(&r.parse(f)?)?
        }
        FamilyKind::Jacobian { p, q, .. } => {
            let sc = |v: &Option<String>| v.as_deref().map_or(Ok(Cyclo::zero()), parse_scalar);
            let (p, q) = (sc(p)?, sc(q)?);
            if potential_pq(&p, &q).is_zero() {
                return Err(Error::ZeroPotential);
            }
            f_pq(&p, &q)?
        }
        FamilyKind::Qmatrix { n } => quantum_matrices(*n)?,
        FamilyKind::Weyl {
            n,
            homogenized: false,
        } => weyl(*n)?,
        FamilyKind::Weyl {
            n,
            homogenized: true,
        } => homogenized_weyl(*n)?,
        FamilyKind::PhLie { lie } => ph_lie(&parse_lie(&s.read(lie)?)?.lie)?,
    };
    let text = emit_pois(name, &a);
    if let Some(path) = out {
        std::fs::write(path, &text)
            .map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    }
    Ok((
        json!({ "pois": text, "nvars": a.nvars(), "quadratic": a.is_quadratic() }),
        text,
        false,
    ))
}

fn envelope(
    s: &mut Session,
    arg: &AlgebraArg,
    dims: Option<u32>,
    cap: u32,
    extend: Option<&Path>,
    trace: Option<&Path>,
    aliases: bool,
) -> Result<Answer> {
    let a = s.algebra(arg)?;
    let mut p = envelope_presentation(&a)?;
    if aliases {
        p = p.with_short_aliases()?;
    }
    let relations: Vec<String> = (0..p.relations.len())
        .map(|i| format!("{} = 0", p.render_relation(i)))
        .collect();
    let mut v = json!({ "generators": p.names, "relations": relations });
    let mut summary = p.render();
    let mut negative = false;
    if let Some(d) = dims {
        let got = envelope_dims(&a, d, cap)?;
        let want = expected_dims(a.nvars(), d);
        summary += &format!("dims {got:?}\n");
        v["dims"] = json!({ "computed": got, "polynomial_growth": want, "match": got == want });
    }
    if let Some(path) = extend {
        let g = s.map(path, a.ring())?;
        let ug = envelope_extend(&a, &g)?;
        let ok = preserves_relations(&p, &ug);
        negative |= !ok;
        summary += &format!("extension preserves relations: {ok}\n");
        v["extend"] = json!({ "matrix": json::matrix(ug.matrix()), "preserves_relations": ok });
    }
    if let Some(path) = trace {
        let g = s.map(path, a.ring())?;
        let t = envelope_trace(&a, &g)?;
        let ta = trace_series(&g)?;
        summary += &format!(
            "trace on U(A): {}; quasi-reflection: {}\n",
            t.series, t.quasi_reflection
        );
        v["trace"] = json!({
            "series": json::series(&t.series, SERIES_TERMS),
            "equals_square_of_trace_on_A": t.series == ta.mul(&ta),
            "quasi_reflection": t.quasi_reflection,
        });
    }
    Ok((v, summary, negative))
}

fn paper_suite(s: &mut Session, filter: Option<&str>) -> Result<Answer> {
    let results = suite::run_suite(filter, s.budget);
    let failed = results.iter().filter(|r| !r.pass).count();
    let summary = suite::table(&results);
    let v = json!({
        "vectors": results.iter().map(|r| json!({ "id": r.id, "claim": r.claim, "pass": r.pass, "detail": r.detail })).collect::<Vec<_>>(),
        "passed": results.len() - failed,
        "failed": failed,
    });
    Ok((v, summary, failed > 0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn usage_errors_exit_one() {
        assert_eq!(execute(["pwb", "frobnicate"]).code, 1);
        assert_eq!(execute(["pwb", "fixed", "--algebra", "a.pois"]).code, 1);
        assert_eq!(execute(["pwb", "--help"]).code, 0);
    }

    #[test]
    fn missing_file_is_an_error() {
        let out = execute(["pwb", "check", "--algebra", "/nonexistent/a.pois"]);
        assert_eq!(out.code, 1);
        assert_eq!(out.report["result"]["error"]["kind"], "input");
        assert_eq!(out.report["schema"], SCHEMA);
    }

    #[test]
    fn family_output_reparses() {
        let out = execute(["pwb", "family", "jacobian", "--p", "1", "--q", "-2"]);
        assert_eq!(out.code, 0);
        let text = out.report["result"]["pois"].as_str().unwrap();
        let a = parse_pois(text, false).unwrap().algebra;
        assert_eq!(a, f_pq(&Cyclo::one(), &Cyclo::from_int(-2)).unwrap());
    }
}
