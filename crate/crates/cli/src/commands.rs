//! JSON layouts:
//!
//! | command          | output                                                        |
//! |------------------|---------------------------------------------------------------|
//! | `qfact`          | `[{"i","a","r"}, ...]`                                        |
//! | `graph`          | `{"kind","diagram","vertices":[{"id","i","a","r"}],"arrows":[[from,to]]}` |
//! | `is-prime-snake` | `{"snake","prime_snake"}`                                     |
//! | `snake-support`  | `{"snake_support","support":[{"i","a"}]}`                     |
//! | `mtos`           | `{"kind","vertices","mtos":[[id, ...]]}`                      |
//! | `quochains`      | `{"kind","vertices","quochains":[{"parts","factors"}],"pairwise_isomorphic"}` |
//! | `factorize`      | `{"status","factors":[[{"i","a"}, ...]]}`                     |
//! | `fuse`           | same as `graph`                                               |
//! | `check3`         | `{"status","factors","line"}`                                 |
//!
//! Polynomial factors are lists of fundamentals `{"i","a"}` in
//! `(node, center)` order, with repetition.

use std::collections::BTreeSet;
use std::fmt;

use qfact_core::{
    all_mtos_quochains, alternating_line, enumerate_mtos, has_snake_support, is_prime_snake_polynomial,
    is_snake_polynomial, mtos_quochain, parse_polynomial, prime_factorize_small, q_factorization, quochains_isomorphic,
    three_vertex_prime_check, DrinfeldPolynomial, Error, KrFactor, Multicut, PQGraph, VertexId,
};
use serde::Serialize;
use serde_json::json;

use crate::{EXIT_INAPPLICABLE, EXIT_INVARIANT, EXIT_PARSE};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl CliError {
    pub fn new(code: i32, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        Self {
            code: exit_code(&e),
            message: e.to_string(),
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } => EXIT_PARSE,
        Error::Invariant(_) | Error::InvalidMulticut(_) => EXIT_INVARIANT,
        _ => EXIT_INAPPLICABLE,
    }
}

type Out = Result<String, CliError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum GraphKind {
    /// one vertex per fundamental factor
    Fund,
    /// one vertex per q-factor
    Qfact,
}

impl GraphKind {
    fn name(self) -> &'static str {
        match self {
            GraphKind::Fund => "fund",
            GraphKind::Qfact => "qfact",
        }
    }

    pub fn build(self, p: &DrinfeldPolynomial) -> PQGraph {
        match self {
            GraphKind::Fund => PQGraph::fundamental(p),
            GraphKind::Qfact => PQGraph::q_factorization(p),
        }
    }
}

pub fn parse(src: &str) -> Result<DrinfeldPolynomial, CliError> {
    parse_polynomial(src.trim()).map_err(CliError::from)
}

fn to_json(value: &impl Serialize) -> Out {
    let mut s = serde_json::to_string(value).map_err(|e| CliError::new(EXIT_INVARIANT, e.to_string()))?;
    s.push('\n');
    Ok(s)
}

#[derive(Serialize)]
struct VertexJson {
    id: VertexId,
    i: usize,
    a: i64,
    r: u32,
}

fn vertices_json(g: &PQGraph) -> Vec<VertexJson> {
    g.vertices()
        .map(|(id, k)| VertexJson {
            id,
            i: k.node,
            a: k.center,
            r: k.length,
        })
        .collect()
}

fn checked(g: PQGraph) -> Result<PQGraph, CliError> {
    g.check_arrows()?;
    Ok(g)
}

pub fn graph_json(g: &PQGraph, kind: &str) -> Out {
    let arrows: Vec<[VertexId; 2]> = g.arrows().map(|(v, w)| [v, w]).collect();
    to_json(&json!({
        "kind": kind,
        "diagram": g.diagram().to_string(),
        "vertices": vertices_json(g),
        "arrows": arrows,
    }))
}

pub fn qfact(p: &DrinfeldPolynomial) -> Out {
    to_json(&q_factorization(p))
}

pub fn graph(p: &DrinfeldPolynomial, kind: GraphKind, dot: bool) -> Out {
    let g = checked(kind.build(p))?;
    if dot {
        Ok(g.to_dot())
    } else {
        graph_json(&g, kind.name())
    }
}

pub fn is_prime_snake(p: &DrinfeldPolynomial) -> Out {
    to_json(&json!({ "snake": is_snake_polynomial(p), "prime_snake": is_prime_snake_polynomial(p) }))
}

pub fn snake_support(p: &DrinfeldPolynomial) -> Out {
    to_json(&json!({ "snake_support": has_snake_support(p), "support": p.bar() }))
}

pub fn mtos(p: &DrinfeldPolynomial, kind: GraphKind) -> Out {
    let g = checked(kind.build(p))?;
    let sets = enumerate_mtos(&g)?;
    to_json(&json!({ "kind": kind.name(), "vertices": vertices_json(&g), "mtos": sets }))
}

#[derive(Serialize)]
struct QuochainJson {
    parts: Vec<BTreeSet<VertexId>>,
    factors: Vec<DrinfeldPolynomial>,
}

pub fn quochains(p: &DrinfeldPolynomial, kind: GraphKind, all: bool, bound: usize) -> Out {
    let g = checked(kind.build(p))?;
    let cuts: Vec<Multicut> = if all {
        all_mtos_quochains(&g, bound)?
    } else {
        vec![mtos_quochain(&g)?]
    };
    let mut isomorphic = true;
    for pair in cuts.windows(2) {
        isomorphic &= quochains_isomorphic(&pair[0], &pair[1], &g)?;
    }
    let chains = cuts
        .iter()
        .map(|c| {
            Ok(QuochainJson {
                parts: c.parts.clone(),
                factors: c.factors(&g)?,
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    to_json(&json!({
        "kind": kind.name(),
        "vertices": vertices_json(&g),
        "quochains": chains,
        "pairwise_isomorphic": isomorphic,
    }))
}

pub fn factorize(p: &DrinfeldPolynomial) -> Out {
    let result = prime_factorize_small(p)?;
    qfact_core::check_factorization(p, &result)?;
    to_json(&result)
}

pub fn fuse(p: &DrinfeldPolynomial, kind: GraphKind, v: u32, w: u32) -> Out {
    let g = kind.build(p);
    let fused = checked(g.fuse_vertices(VertexId(v), VertexId(w))?)?;
    if fused.polynomial() != *p {
        return Err(CliError::new(EXIT_INVARIANT, "fusion changed the polynomial"));
    }
    graph_json(&fused, "fused")
}

#[derive(Serialize)]
struct LineJson {
    middle: KrFactor,
    outer: [KrFactor; 2],
    gaps: [i64; 2],
    middle_is_sink: bool,
    split_possible: [bool; 2],
}

pub fn check3(p: &DrinfeldPolynomial) -> Out {
    let result = three_vertex_prime_check(p)?;
    qfact_core::check_factorization(p, &result)?;
    let g = PQGraph::q_factorization(p);
    let line = if g.is_connected() && !g.is_totally_ordered() {
        let l = alternating_line(&g)?;
        Some(LineJson {
            middle: l.middle,
            outer: l.outer,
            gaps: l.gaps,
            middle_is_sink: l.middle_is_sink,
            split_possible: [l.conditions[0].all(), l.conditions[1].all()],
        })
    } else {
        None
    };
    to_json(&json!({ "status": result.status, "factors": result.factors, "line": line }))
}
