//! Command handlers. Each builds the JSON report tree for one command.

use std::ops::RangeInclusive;

use evoalg::galois::{
    algebra_signature, decide_simplicity, run_suite_batch, PropertyReport, SimplicityMethod, SuiteConfig,
};
use evoalg::ideals::{self, HyperplaneFamily};
use evoalg::oracle::{AlgebraSampler, RandomSpec};
use evoalg::{
    Digraph, EvolutionAlgebra, Field, FieldDescriptor, PrimeField, Rationals, Subspace, Vector, VertexSet,
    DEFAULT_ENUMERATION_LIMIT,
};
use serde_json::{json, Value};

use crate::document::{AlgebraDocument, AnyAlgebra};
use crate::error::{CliError, CliResult};

/// Environment variable overriding the hereditary enumeration limit.
pub const MAX_ENUM_VAR: &str = "EVOALG_MAX_ENUM";

/// A finished command: its report and its exit code.
#[derive(Debug)]
pub struct Report {
    pub value: Value,
    pub code: i32,
}

impl Report {
    fn ok(value: Value) -> Self {
        Report { value, code: 0 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    All,
    Maximal,
    Saturated,
}

impl Family {
    fn as_str(self) -> &'static str {
        match self {
            Family::All => "all",
            Family::Maximal => "maximal",
            Family::Saturated => "saturated",
        }
    }
}

/// `--limit`, else the environment variable, else the library default.
pub fn enumeration_limit(explicit: Option<usize>) -> CliResult<usize> {
    if let Some(l) = explicit {
        return Ok(l);
    }
    match std::env::var(MAX_ENUM_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{MAX_ENUM_VAR}={v:?} is not a nonnegative integer"))),
        Err(_) => Ok(DEFAULT_ENUMERATION_LIMIT),
    }
}

fn set_value<F: Field>(a: &EvolutionAlgebra<F>, h: VertexSet) -> Value {
    Value::String(h.display(a.labels()).to_string())
}

fn sets_value<F: Field>(a: &EvolutionAlgebra<F>, hs: impl IntoIterator<Item = VertexSet>) -> Value {
    Value::Array(hs.into_iter().map(|h| set_value(a, h)).collect())
}

fn subspace_value<F: Field>(s: &Subspace<F>) -> Value {
    json!({ "dim": s.dim(), "basis": s.format_basis() })
}

fn edges_value(g: &Digraph) -> Value {
    let l = g.labels();
    Value::Array(
        g.edges()
            .into_iter()
            .map(|(u, v)| Value::String(format!("{} -> {}", l[u], l[v])))
            .collect(),
    )
}

fn field_name(d: FieldDescriptor) -> String {
    d.to_string()
}

/// Parses `e2,e3` or `{e2,e3}` against the algebra's labels.
pub fn parse_set<F: Field>(a: &EvolutionAlgebra<F>, text: &str) -> CliResult<VertexSet> {
    let t = text.trim();
    let t = t.strip_prefix('{').and_then(|s| s.strip_suffix('}')).unwrap_or(t);
    let mut h = VertexSet::EMPTY;
    for label in t.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let i = a
            .index_of(label)
            .ok_or_else(|| CliError::Usage(format!("unknown basis label {label:?}")))?;
        h.insert(i);
    }
    Ok(h)
}

/// Parses `1,1;0,-1/2` into vectors of length `n`.
pub fn parse_vectors<F: Field>(a: &EvolutionAlgebra<F>, text: &str) -> CliResult<Vec<Vector<F>>> {
    let f = a.field();
    text.split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|v| {
            let coords = v.split(',').map(|x| f.parse(x.trim())).collect::<Result<Vec<_>, _>>()?;
            if coords.len() != a.dim() {
                return Err(CliError::Usage(format!(
                    "generator {v:?} has {} coordinates, expected {}",
                    coords.len(),
                    a.dim()
                )));
            }
            Ok(coords)
        })
        .collect()
}

pub fn analyze<F: Field>(a: &EvolutionAlgebra<F>) -> Report {
    let g = a.associated_graph();
    let dag = g.condensation();
    let generating = g.minimal_generating_set();
    Report::ok(json!({
        "command": "analyze",
        "field": field_name(a.field().descriptor()),
        "dim": a.dim(),
        "basis": a.labels(),
        "perfect": a.is_perfect(),
        "degenerate": a.is_degenerate(),
        "determinant": a.field().format(&a.determinant()),
        "a_squared": subspace_value(&a.a_squared()),
        "graph": {
            "edges": edges_value(&g),
            "sinks": set_value(a, g.sinks()),
            "sources": set_value(a, g.sources()),
            "bifurcations": set_value(a, g.bifurcations()),
            "components": sets_value(a, dag.components.iter().copied()),
            "source_components": sets_value(a, dag.sources().map(|c| dag.components[c])),
            "strongly_connected": g.is_strongly_connected(),
        },
        "minimal_generating_set": {
            "size": generating.min_size,
            "witness": set_value(a, generating.witness),
        },
    }))
}

pub fn hereditary<F: Field>(a: &EvolutionAlgebra<F>, family: Family, limit: usize) -> CliResult<Report> {
    let g = a.associated_graph();
    let mut list = match family {
        Family::All => g.enumerate_hereditary_sets(limit)?,
        Family::Saturated => g.enumerate_hereditary_saturated_sets(limit)?,
        Family::Maximal => g.maximal_hereditary_sets(),
    };
    list.sort();
    let sets: Vec<Value> = list
        .iter()
        .map(|&h| json!({ "set": set_value(a, h), "saturated": g.is_saturated(h) }))
        .collect();
    Ok(Report::ok(json!({
        "command": "hereditary",
        "family": family.as_str(),
        "count": list.len(),
        "sets": sets,
    })))
}

pub fn maximal_ideals<F: Field>(a: &EvolutionAlgebra<F>, limit: usize) -> Report {
    let r = ideals::maximal_ideals_report(a, limit);
    let infinite = a.field().order().is_none();
    let (containing, complete) = match &r.hyperplanes {
        HyperplaneFamily::None => (
            json!({ "kind": "none", "codim": 0, "count": "0", "infinite": false, "hyperplanes": [] }),
            true,
        ),
        HyperplaneFamily::Unique(s) => (
            json!({ "kind": "unique", "codim": 1, "count": "1", "infinite": false, "hyperplanes": [subspace_value(s)] }),
            true,
        ),
        HyperplaneFamily::Family {
            codim,
            count,
            hyperplanes,
        } => (
            json!({
                "kind": "family",
                "codim": codim,
                "count": count.map(|c| c.to_string()),
                "infinite": infinite,
                "hyperplanes": hyperplanes.as_ref().map(|hs| hs.iter().map(subspace_value).collect::<Vec<_>>()),
            }),
            hyperplanes.is_some(),
        ),
    };
    let candidates: Vec<Value> = r
        .candidates
        .iter()
        .map(|c| {
            json!({
                "set": set_value(a, c.h),
                "ideal": subspace_value(c.ideal.subspace()),
                "maximal": c.criterion.is_some(),
                "criterion": c.criterion.map(|m| m.describe()),
            })
        })
        .collect();
    let explicit: Vec<Value> = r.explicit_maximal_ideals().iter().map(subspace_value).collect();
    Report::ok(json!({
        "command": "maximal-ideals",
        "perfect": r.perfect,
        "a_squared": subspace_value(&r.a_squared),
        "codim_a_squared": r.codim_a_squared,
        "containing_a_squared": containing,
        "hereditary_candidates": candidates,
        "maximal_ideals": explicit,
        "complete": complete,
    }))
}

const NOT_PERFECT_CAVEAT: &str =
    "the algebra is not perfect; the graph criterion for simplicity is established for perfect algebras only, so only the graph verdict is reported";

pub fn simple<F: Field>(a: &EvolutionAlgebra<F>, trials: usize, seed: u64) -> CliResult<Report> {
    let graph_simple = a.associated_graph().is_simple();
    if !a.is_perfect() {
        return Ok(Report::ok(json!({
            "command": "simple",
            "perfect": false,
            "graph_simple": graph_simple,
            "simple": null,
            "caveat": NOT_PERFECT_CAVEAT,
        })));
    }
    let v = decide_simplicity(a, trials, seed)?;
    let (method, sampled) = match v.method {
        SimplicityMethod::Exhaustive => ("exhaustive", None),
        SimplicityMethod::Sampled { trials } => ("sampled", Some(trials)),
    };
    Ok(Report::ok(json!({
        "command": "simple",
        "perfect": true,
        "graph_simple": graph_simple,
        "simple": v.algebra_simple,
        "agree": v.algebra_simple == graph_simple,
        "method": method,
        "trials": sampled,
        "witness": v.witness.as_ref().map(subspace_value),
    })))
}

/// The quotient report and, unless it is the zero algebra, its document.
pub fn quotient<F: Field>(a: &EvolutionAlgebra<F>, set: &str) -> CliResult<(Report, Option<AlgebraDocument>)> {
    let h = parse_set(a, set)?;
    if !a.associated_graph().is_hereditary(h) {
        return Err(CliError::Usage(format!("{} is not hereditary", h.display(a.labels()))));
    }
    let q = a.quotient_algebra(h)?;
    let g = a.associated_graph().quotient(h)?;
    let doc = q.as_ref().map(AlgebraDocument::from_algebra);
    let report = json!({
        "command": "quotient",
        "set": set_value(a, h),
        "dim": q.as_ref().map_or(0, |q| q.dim()),
        "graph": {
            "vertices": g.labels(),
            "edges": edges_value(&g),
        },
        "document": doc.as_ref().map(|d| serde_json::to_value(d).expect("documents serialize")),
    });
    Ok((Report::ok(report), doc))
}

pub fn ideal<F: Field>(a: &EvolutionAlgebra<F>, generators: &str) -> CliResult<Report> {
    let gens = parse_vectors(a, generators)?;
    let f = a.field();
    let i = ideals::ideal_closure(a, &gens)?;
    let a2 = a.a_squared();
    let criterion = if i.is_whole() { None } else { ideals::maximality(a, &i)? };
    let gens_value: Vec<Vec<String>> = gens.iter().map(|v| v.iter().map(|x| f.format(x)).collect()).collect();
    Ok(Report::ok(json!({
        "command": "ideal",
        "generators": gens_value,
        "dim": i.dim(),
        "codim": i.codim(),
        "basis": i.subspace().format_basis(),
        "h_set": set_value(a, i.h_set()),
        "basis_vertices": set_value(a, i.basis_vertices()),
        "contains_a_squared": a2.is_subspace_of(i.subspace())?,
        "absorption": ideals::has_absorption(a, &i),
        "absorber": subspace_value(&ideals::absorber(a, &i)),
        "maximal": criterion.is_some(),
        "criterion": criterion.map(|c| c.describe()),
        "basic_span": ideals::is_spanned_by_basis_vertices(a, &i),
    })))
}

pub fn graph<F: Field>(a: &EvolutionAlgebra<F>) -> Report {
    let g = a.associated_graph();
    Report::ok(json!({
        "command": "graph",
        "vertices": g.labels(),
        "edges": edges_value(&g),
        "dot": g.to_dot(),
    }))
}

pub fn report_value(r: &PropertyReport) -> Value {
    let properties: Vec<Value> = r
        .outcomes
        .iter()
        .map(|o| {
            json!({
                "name": o.name,
                "statement": o.statement,
                "status": o.status().as_str(),
                "instances": o.instances,
                "failures": o.failures,
                "not_applicable": o.not_applicable,
                "skipped": o.skipped,
                "notice": o.notice,
                "witness": o.witness.as_ref().map(|w| json!({ "algebra": w.algebra, "detail": w.detail })),
            })
        })
        .collect();
    json!({
        "algebras": r.algebras,
        "failed": r.failed_count(),
        "all_hold": r.all_hold(),
        "properties": properties,
    })
}

fn property_report(command: &str, header: Value, r: &PropertyReport) -> Report {
    let mut value = json!({ "command": command });
    let map = value.as_object_mut().expect("object");
    if let Value::Object(h) = header {
        map.extend(h);
    }
    map.insert("report".into(), report_value(r));
    Report {
        value,
        code: if r.all_hold() { 0 } else { 1 },
    }
}

pub fn verify(a: &AnyAlgebra, cfg: &SuiteConfig, generated: Option<&AlgebraDocument>) -> Report {
    let (signature, report) =
        with_algebra!(a, x => (algebra_signature(x), run_suite_batch(std::slice::from_ref(x), cfg)));
    let header = json!({
        "algebra": signature,
        "document": generated.map(|d| serde_json::to_value(d).expect("documents serialize")),
    });
    property_report("verify", header, &report)
}

/// Which fields a random stream draws from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldChoice {
    One(FieldDescriptor),
    /// Round robin over Q, F2, F3 and F5.
    Mixed,
}

const MIXED: [FieldDescriptor; 4] = [
    FieldDescriptor::Rationals,
    FieldDescriptor::Prime(2),
    FieldDescriptor::Prime(3),
    FieldDescriptor::Prime(5),
];

impl FieldChoice {
    fn groups(&self) -> Vec<FieldDescriptor> {
        match self {
            FieldChoice::One(d) => vec![*d],
            FieldChoice::Mixed => MIXED.to_vec(),
        }
    }

    fn name(&self) -> String {
        match self {
            FieldChoice::One(d) => field_name(*d),
            FieldChoice::Mixed => "mixed".into(),
        }
    }
}

/// `Q`, `mixed`, `p` or `Fp`.
pub fn parse_field_choice(text: &str) -> CliResult<FieldChoice> {
    let t = text.trim();
    if t.eq_ignore_ascii_case("q") {
        return Ok(FieldChoice::One(FieldDescriptor::Rationals));
    }
    if t.eq_ignore_ascii_case("mixed") {
        return Ok(FieldChoice::Mixed);
    }
    let digits = t.strip_prefix(['F', 'f']).unwrap_or(t);
    let p: u64 = digits
        .parse()
        .map_err(|_| CliError::Usage(format!("unknown field {text:?}, expected Q, mixed, p or Fp")))?;
    Ok(FieldChoice::One(FieldDescriptor::Prime(PrimeField::new(p)?.modulus())))
}

/// `n` or `a-b`, within `1..=MAX_DIM`.
pub fn parse_dims(text: &str) -> CliResult<RangeInclusive<usize>> {
    let bad = || CliError::Usage(format!("invalid dimension range {text:?}, expected n or a-b"));
    let (lo, hi) = match text.split_once('-') {
        Some((a, b)) => (
            a.trim().parse().map_err(|_| bad())?,
            b.trim().parse().map_err(|_| bad())?,
        ),
        None => {
            let n = text.trim().parse().map_err(|_| bad())?;
            (n, n)
        }
    };
    if lo == 0 || lo > hi || hi > evoalg::MAX_DIM {
        return Err(bad());
    }
    Ok(lo..=hi)
}

/// Parameters of a random algebra stream.
#[derive(Clone, Debug, PartialEq)]
pub struct StreamSpec {
    pub field: FieldChoice,
    pub dims: RangeInclusive<usize>,
    pub density: f64,
    pub seed: u64,
    pub perfect: bool,
}

impl Default for StreamSpec {
    fn default() -> Self {
        StreamSpec {
            field: FieldChoice::One(FieldDescriptor::Rationals),
            dims: 2..=5,
            density: 0.5,
            seed: 0,
            perfect: false,
        }
    }
}

/// `seed=7,dims=2-4,field=F3,density=0.4,perfect`; every key is optional.
pub fn parse_stream_spec(text: &str) -> CliResult<StreamSpec> {
    let mut spec = StreamSpec::default();
    for part in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (key, value) = part.split_once('=').unwrap_or((part, ""));
        let num_err = || CliError::Usage(format!("invalid value in {part:?}"));
        match key.trim() {
            "seed" => spec.seed = value.parse().map_err(|_| num_err())?,
            "dims" | "dim" => spec.dims = parse_dims(value)?,
            "field" => spec.field = parse_field_choice(value)?,
            "density" => spec.density = parse_density(value)?,
            "perfect" if value.is_empty() || value == "true" => spec.perfect = true,
            "perfect" if value == "false" => spec.perfect = false,
            _ => return Err(CliError::Usage(format!("unknown random spec entry {part:?}"))),
        }
    }
    if spec.field == FieldChoice::Mixed {
        return Err(CliError::Usage("a single random algebra needs a single field".into()));
    }
    Ok(spec)
}

pub fn parse_density(text: &str) -> CliResult<f64> {
    match text.trim().parse::<f64>() {
        Ok(d) if (0.0..=1.0).contains(&d) => Ok(d),
        _ => Err(CliError::Usage(format!("density {text:?} is not in [0, 1]"))),
    }
}

fn sample<F: Field>(field: F, spec: &RandomSpec, count: usize, perfect: bool) -> CliResult<Vec<EvolutionAlgebra<F>>> {
    let mut sampler = AlgebraSampler::new(field, spec.clone());
    (0..count)
        .map(|_| {
            if perfect {
                Ok(sampler.next_perfect()?)
            } else {
                Ok(sampler.next_algebra())
            }
        })
        .collect()
}

/// Algebras drawn from the stream, split by field in round-robin order.
pub fn generate(spec: &StreamSpec, count: usize) -> CliResult<Vec<AnyAlgebra>> {
    let groups = spec.field.groups();
    let mut out = Vec::with_capacity(count);
    for (g, &d) in groups.iter().enumerate() {
        let share = (count + groups.len() - 1 - g) / groups.len();
        let rs = RandomSpec::new(spec.dims.clone(), spec.seed.wrapping_add(g as u64)).with_density(spec.density);
        match d {
            FieldDescriptor::Rationals => out.extend(
                sample(Rationals, &rs, share, spec.perfect)?
                    .into_iter()
                    .map(AnyAlgebra::Rational),
            ),
            FieldDescriptor::Prime(p) => out.extend(
                sample(PrimeField::new(p as u64)?, &rs, share, spec.perfect)?
                    .into_iter()
                    .map(AnyAlgebra::Prime),
            ),
        }
    }
    Ok(out)
}

/// Runs the suite over `count` algebras from the stream.
pub fn fuzz(spec: &StreamSpec, count: usize, cfg: &SuiteConfig) -> CliResult<Report> {
    let algebras = generate(spec, count)?;
    let mut rational = Vec::new();
    let mut prime: Vec<(u32, Vec<_>)> = Vec::new();
    for a in algebras {
        match a {
            AnyAlgebra::Rational(x) => rational.push(x),
            AnyAlgebra::Prime(x) => {
                let p = x.field().modulus();
                match prime.iter_mut().find(|(q, _)| *q == p) {
                    Some((_, list)) => list.push(x),
                    None => prime.push((p, vec![x])),
                }
            }
        }
    }
    let mut total = PropertyReport::new(&evoalg::galois::REGISTRY);
    if !rational.is_empty() {
        total.merge(&run_suite_batch(&rational, cfg));
    }
    for (_, list) in &prime {
        total.merge(&run_suite_batch(list, cfg));
    }
    let header = json!({
        "field": spec.field.name(),
        "dims": format!("{}-{}", spec.dims.start(), spec.dims.end()),
        "algebras": count,
        "seed": spec.seed,
        "perfect_only": spec.perfect,
    });
    Ok(property_report("fuzz", header, &total))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failed_property_exits_one() {
        let mut r = PropertyReport::new(&evoalg::galois::REGISTRY);
        let name = evoalg::galois::REGISTRY[0].0;
        r.check(name, true, "A", String::new);
        assert_eq!(property_report("verify", json!({}), &r).code, 0);
        r.check(name, false, "A", || "counterexample".into());
        let out = property_report("verify", json!({}), &r);
        assert_eq!(out.code, 1);
        assert_eq!(out.value["report"]["properties"][0]["status"], "fail");
        assert_eq!(
            out.value["report"]["properties"][0]["witness"]["detail"],
            "counterexample"
        );
    }

    #[test]
    fn parses_streams_and_sets() {
        let s = parse_stream_spec("seed=7, dims=2-4, field=F3, density=0.25, perfect").unwrap();
        assert_eq!(s.seed, 7);
        assert_eq!(s.dims, 2..=4);
        assert_eq!(s.field, FieldChoice::One(FieldDescriptor::Prime(3)));
        assert!(s.perfect);
        assert!(parse_stream_spec("colour=blue").is_err());
        assert!(parse_density("1.5").is_err());
        assert_eq!(parse_dims("3").unwrap(), 3..=3);
        assert!(parse_dims("4-2").is_err());
        assert_eq!(
            parse_field_choice("q").unwrap(),
            FieldChoice::One(FieldDescriptor::Rationals)
        );
        assert_eq!(
            parse_field_choice("7").unwrap(),
            FieldChoice::One(FieldDescriptor::Prime(7))
        );

        let a = evoalg::catalog::six_dim_degenerate(Rationals);
        assert_eq!(parse_set(&a, "{e2, e4}").unwrap(), [1, 3].into_iter().collect());
        assert_eq!(parse_set(&a, "").unwrap(), VertexSet::EMPTY);
        assert!(parse_set(&a, "e7").is_err());
    }

    #[test]
    fn mixed_stream_round_robins_fields() {
        let spec = StreamSpec {
            field: FieldChoice::Mixed,
            ..StreamSpec::default()
        };
        let all = generate(&spec, 10).unwrap();
        let rational = all.iter().filter(|a| matches!(a, AnyAlgebra::Rational(_))).count();
        assert_eq!(all.len(), 10);
        assert_eq!(rational, 3);
    }
}
