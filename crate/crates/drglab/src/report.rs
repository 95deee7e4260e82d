//! JSON reports for the analysis subcommands.
//!
//! Objects are built on `serde_json::Map`, which keeps keys sorted, and
//! every float is rounded to 12 significant digits, so equal inputs give
//! byte-identical output.

use drglab_core::aut::{self, BlockSearch};
use drglab_core::connect::{self, PanconnectOutcome, WatkinsOutcome};
use drglab_core::drg::{self, Antipodality, DistanceRegularity, SrgOutcome};
use drglab_core::families;
use drglab_core::iso::SEARCH_VERTEX_LIMIT;
use drglab_core::spectra::{self, Eigenvalue, Spectrum};
use drglab_core::{Error as CoreError, Graph};
use serde_json::{json, Value};

use crate::{Error, Result};

/// Round to 12 significant digits.
pub fn round12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { 0.0 } else { x };
    }
    format!("{x:.11e}").parse().unwrap()
}

pub fn float(x: f64) -> Value {
    json!(round12(x))
}

pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).unwrap();
    s.push('\n');
    s
}

/// Structural analysis: distances, distance-regularity, strong
/// regularity and antipodality.
pub fn analyze(g: &Graph) -> Result<Value> {
    let connected = g.is_connected();
    let (array, witness) = match drg::intersection_numbers(g) {
        Ok(DistanceRegularity::Regular(a)) => (json!(a.to_string()), Value::Null),
        Ok(DistanceRegularity::NotRegular(w)) => (
            Value::Null,
            json!({
                "kind": w.kind.as_str(),
                "distance": w.distance,
                "first": [w.first.0, w.first.1],
                "second": [w.second.0, w.second.1],
                "values": [w.values.0, w.values.1],
                "detail": drg::describe_witness(&w),
            }),
        ),
        Err(CoreError::Structure(msg)) => (Value::Null, json!({ "reason": msg })),
        Err(e) => return Err(e.into()),
    };
    let srg = match drg::srg_params(g) {
        Ok(SrgOutcome::Srg(p)) => json!(p.to_string()),
        Ok(SrgOutcome::NotSrg { .. }) | Err(CoreError::Structure(_)) => Value::Null,
        Err(e) => return Err(e.into()),
    };
    let antipodal = if connected {
        match drg::is_antipodal(g)? {
            Antipodality::Antipodal => json!(true),
            Antipodality::NotAntipodal { .. } => json!(false),
        }
    } else {
        Value::Null
    };
    Ok(json!({
        "family": g.name(),
        "n_vertices": g.n_vertices(),
        "n_edges": g.n_edges(),
        "valency": g.regular_valency(),
        "diameter": if connected { json!(g.diameter()?) } else { Value::Null },
        "girth": g.girth(),
        "bipartite": g.is_bipartite(),
        "intersection_array": array,
        "dr_failure_witness": witness,
        "srg_params": srg,
        "antipodal": antipodal,
    }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Method {
    /// Character sums; Cayley graphs over Z₂ⁿ only
    Exact,
    /// Dense Jacobi iteration
    Numeric,
    /// Both, with an agreement check
    Both,
}

fn entries<T: Eigenvalue>(s: &Spectrum<T>) -> Value {
    Value::Array(
        s.entries()
            .iter()
            .map(|&(v, m)| if T::EXACT { json!([v.to_f64() as i64, m]) } else { json!([round12(v.to_f64()), m]) })
            .collect(),
    )
}

fn line_graph<T: Eigenvalue>(s: &Spectrum<T>, g: &Graph) -> Value {
    let Some(k) = g.regular_valency() else {
        return Value::Null;
    };
    let v = spectra::line_graph_verdict(s, k as u64);
    let verdict = match v.verdict {
        spectra::LineGraphVerdict::ExcludedByEigenvalue => "excluded by eigenvalue",
        spectra::LineGraphVerdict::ExcludedByArithmetic => "excluded by arithmetic",
        spectra::LineGraphVerdict::Inconclusive => "inconclusive",
    };
    json!({ "verdict": verdict, "detail": v.detail() })
}

pub fn spectrum(g: &Graph, method: Method, tol: f64) -> Result<Value> {
    let exact = || -> Result<_> {
        let s = families::as_cayley_z2n(g)
            .ok_or_else(|| Error::Usage(format!("{} is not a Cayley graph over Z2^n; use --method numeric", g.name())))?;
        Ok(spectra::cayley_z2n_spectrum(&s))
    };
    Ok(match method {
        Method::Exact => {
            let s = exact()?;
            json!({ "exact": true, "entries": entries(&s), "line_graph": line_graph(&s, g) })
        }
        Method::Numeric => {
            let s = spectra::dense_spectrum(g, tol)?;
            json!({ "exact": false, "entries": entries(&s), "line_graph": line_graph(&s, g) })
        }
        Method::Both => {
            let e = exact()?;
            let d = spectra::dense_spectrum(g, tol)?;
            json!({
                "exact": true,
                "entries": entries(&e),
                "numeric": { "exact": false, "entries": entries(&d) },
                "agree": spectra::spectra_agree(&e, &d, 100.0 * tol),
                "line_graph": line_graph(&e, g),
            })
        }
    })
}

pub fn automorphisms(g: &Graph) -> Result<Value> {
    let gens = aut::automorphisms(g)?;
    let vt = aut::is_vertex_transitive(g, &gens);
    let (primitive, block_size) = if vt {
        match aut::find_block_system(g, &gens)? {
            BlockSearch::Primitive => (true, Value::Null),
            BlockSearch::Imprimitive(b) => (false, json!(b.block_size())),
        }
    } else {
        (false, Value::Null)
    };
    Ok(json!({
        "order": gens.order().to_string(),
        "generators": gens.generators().len(),
        "vertex_transitive": vt,
        "edge_transitive": aut::is_edge_transitive(g, &gens),
        "arc_transitive": aut::is_arc_transitive(g, &gens),
        "distance_transitive": aut::is_distance_transitive(g, &gens),
        "primitive": primitive,
        "block_size": block_size,
        "automorphic_verdict": aut::classify(g, &gens)?.label(),
    }))
}

/// Connectivity, minimum degree, and the edge-transitive identity when the
/// graph is small enough for the group search.
pub fn connectivity(g: &Graph) -> Result<Value> {
    let kappa = connect::vertex_connectivity(g)?;
    let (edge_transitive, verified) = if g.n_vertices() <= SEARCH_VERTEX_LIMIT && g.is_connected() {
        let gens = aut::automorphisms(g)?;
        match connect::watkins_check(g, &gens)? {
            WatkinsOutcome::Vacuous => (json!(false), json!(false)),
            WatkinsOutcome::Verified { .. } => (json!(true), json!(true)),
        }
    } else {
        (Value::Null, Value::Null)
    };
    Ok(json!({
        "kappa": kappa,
        "delta": g.min_degree(),
        "edge_transitive": edge_transitive,
        "watkins_verified": verified,
    }))
}

pub fn panconnect(g: &Graph, budget: u64) -> Result<Value> {
    Ok(match connect::is_panconnected(g, budget)? {
        PanconnectOutcome::Panconnected => json!({ "panconnected": true, "witness": null, "inconclusive_lengths": [] }),
        PanconnectOutcome::Fails { u, v, length } => json!({
            "panconnected": false,
            "witness": { "u": u, "v": v, "length": length },
            "inconclusive_lengths": [],
        }),
        PanconnectOutcome::Inconclusive(open) => json!({
            "panconnected": null,
            "witness": null,
            "inconclusive_lengths": open.iter().map(|&(u, v, l)| json!([u, v, l])).collect::<Vec<_>>(),
        }),
    })
}
