//! The claim registry behind `drglab verify`.
//!
//! Each claim is a row of data: an id, a one-line statement, the family it
//! is about, the dimensions it sweeps and the checker to call. The runner
//! hands claims to worker threads and reports them sorted by id.

use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use drglab_core::aut::{self, AutomorphicVerdict, BlockSearch};
use drglab_core::connect::{self, PanconnectOutcome};
use drglab_core::drg::{self, DistanceRegularity, MismatchKind, SrgOutcome, SrgParams};
use drglab_core::families::{self, ConnectionSet, SphereJohnsonMap};
use drglab_core::spectra::{self, LineGraphVerdict};
use drglab_core::{binomial, iso, Error as CoreError, Graph};
use serde_json::{json, Value};

use crate::{Error, Result};

/// Largest dimension for claims that need the automorphism group.
pub const GROUP_CAP: usize = 6;
/// Largest dimension for the exhaustive path search.
pub const PANCONNECT_CAP: usize = 4;
/// Largest dimension handed to the dense eigensolver.
pub const DENSE_CAP: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    SkippedBudget,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::SkippedBudget => "SKIPPED-budget",
        })
    }
}

#[derive(Clone, Debug)]
pub struct Entry {
    pub id: &'static str,
    pub statement: &'static str,
    pub instance: String,
    pub status: Status,
    pub detail: String,
    /// Machine-readable evidence for a failure.
    pub witness: Option<Value>,
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub entries: Vec<Entry>,
}

impl VerifyReport {
    pub fn failures(&self) -> impl Iterator<Item = &Entry> {
        self.entries.iter().filter(|e| e.status == Status::Fail)
    }

    pub fn all_passed(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.entries
                .iter()
                .map(|e| {
                    json!({
                        "id": e.id,
                        "statement": e.statement,
                        "instance": e.instance,
                        "status": e.status.to_string(),
                        "detail": e.detail,
                        "witness": e.witness,
                    })
                })
                .collect(),
        )
    }

    pub fn to_text(&self) -> String {
        let width = self.entries.iter().map(|e| e.id.len()).max().unwrap_or(0);
        let mut out = String::new();
        for e in &self.entries {
            out.push_str(&format!("{:<14} {:<width$}  {}  {}\n", e.status.to_string(), e.id, e.instance, e.detail));
        }
        out
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Params {
    pub max_n: usize,
    pub budget: u64,
}

#[derive(Clone, Copy)]
enum Span {
    /// Qₙ or Qₙ² for `lo ≤ n ≤ min(max_n, cap)`.
    Dims { family: &'static str, lo: usize, cap: usize },
    Fixed(&'static str),
}

enum Outcome {
    Pass(String),
    Fail(String, Value),
    Skipped(String),
}

type Check = fn(&[usize], &Params) -> Outcome;

struct Claim {
    id: &'static str,
    statement: &'static str,
    span: Span,
    check: Check,
}

const REGISTRY: &[Claim] = &[
    Claim {
        id: "c7_square_not_dr",
        statement: "the square of C7 is not distance-regular, witness values (1, 2)",
        span: Span::Fixed("C7^2"),
        check: c7_square,
    },
    Claim {
        id: "edge_transitive_connectivity",
        statement: "edge-transitive connected graphs have connectivity equal to minimum degree",
        span: Span::Fixed("Qn^2 (n=3..6), Qn (n=2..6), CP(4), C7, J(6,2), Petersen, K1,3"),
        check: edge_transitive_connectivity,
    },
    Claim {
        id: "johnson_square_8_4",
        statement: "the square of J(8,4) is distance-regular",
        span: Span::Fixed("J(8,4)^2"),
        check: johnson_8_4,
    },
    Claim {
        id: "johnson_square_k3",
        statement: "J(6,3)^2 has array {18,1;1,18}; J(n,3)^2 for n = 7..9 has b-mismatch (C(n-4,2), C(n-4,2)+C(n-5,2))",
        span: Span::Fixed("J(n,3)^2, n=6..9"),
        check: johnson_k3,
    },
    Claim {
        id: "q3_square_cocktail_party",
        statement: "Q3^2 is isomorphic to CP(4), with automorphism group of order 384",
        span: Span::Fixed("Q3^2"),
        check: q3_square,
    },
    Claim {
        id: "qn2_antipodal_parity",
        statement: "Qn^2 is antipodal iff n is odd; for even n the triple (0, w, w+e1) breaks it",
        span: Span::Dims { family: "Qn^2", lo: 4, cap: 8 },
        check: antipodal_parity,
    },
    Claim {
        id: "qn2_aut_order",
        statement: "|Aut(Qn^2)| = 2^n (n+1)!, and the translation, coordinate and linear-extension maps generate it",
        span: Span::Dims { family: "Qn^2", lo: 4, cap: GROUP_CAP },
        check: aut_order,
    },
    Claim {
        id: "qn2_automorphic_parity",
        statement: "Qn^2 is an automorphic graph iff n is even",
        span: Span::Dims { family: "Qn^2", lo: 4, cap: GROUP_CAP },
        check: automorphic_parity,
    },
    Claim {
        id: "qn2_connectivity",
        statement: "the connectivity of Qn^2 equals its valency C(n+1,2)",
        span: Span::Dims { family: "Qn^2", lo: 4, cap: 8 },
        check: connectivity,
    },
    Claim {
        id: "qn2_distance_transitive",
        statement: "Qn^2 is distance-transitive",
        span: Span::Dims { family: "Qn^2", lo: 4, cap: GROUP_CAP },
        check: distance_transitive,
    },
    Claim {
        id: "qn2_intersection_array",
        statement: "Qn^2 has the closed-form intersection array, with c_D = C(n,2) for even n and C(n+1,2) for odd n",
        span: Span::Dims { family: "Qn^2", lo: 4, cap: 8 },
        check: qn2_array,
    },
    Claim {
        id: "qn2_line_graph_exclusion",
        statement: "Qn^2 is not a line graph: smallest eigenvalue below -2 for n >= 5, no root graph for n = 4",
        span: Span::Dims { family: "Qn^2", lo: 4, cap: 8 },
        check: line_graph_exclusion,
    },
    Claim {
        id: "qn2_panconnected",
        statement: "Qn^2 is panconnected",
        span: Span::Dims { family: "Qn^2", lo: 3, cap: PANCONNECT_CAP },
        check: panconnected,
    },
    Claim {
        id: "qn2_primitivity_parity",
        statement: "Aut(Qn^2) is primitive iff n is even; for odd n the pairs {x, x+w} form blocks",
        span: Span::Dims { family: "Qn^2", lo: 4, cap: GROUP_CAP },
        check: primitivity_parity,
    },
    Claim {
        id: "qn2_spectrum",
        statement: "the eigenvalues of Qn^2 are n(n+1)/2 - 2i(n+1) + 2i^2 with the closed-form multiplicities",
        span: Span::Dims { family: "Qn^2", lo: 4, cap: 8 },
        check: spectrum,
    },
    Claim {
        id: "qn2_sphere_johnson",
        statement: "the vertices at distance 1 and 2 from 0 in Qn induce J(n+1,2) in Qn^2",
        span: Span::Dims { family: "Qn^2", lo: 4, cap: 8 },
        check: sphere_johnson,
    },
    Claim {
        id: "qn2_square_of_qn",
        statement: "the square of Qn is the Cayley graph of Z2^n on the words of weight 1 and 2",
        span: Span::Dims { family: "Qn", lo: 2, cap: 8 },
        check: square_of_qn,
    },
    Claim {
        id: "qn_intersection_array",
        statement: "Qn has intersection array {n,...,1;1,...,n}",
        span: Span::Dims { family: "Qn", lo: 2, cap: 8 },
        check: qn_array,
    },
    Claim {
        id: "srg_chain",
        statement: "Q3^2 is (8,6,4,6), Q4^2 is (16,10,6,6), its complement is (16,5,0,2), matching the complement formula",
        span: Span::Fixed("Q3^2, Q4^2"),
        check: srg_chain,
    },
];

/// Every claim id, sorted.
pub fn claim_ids() -> Vec<&'static str> {
    let mut ids: Vec<_> = REGISTRY.iter().map(|c| c.id).collect();
    ids.sort_unstable();
    ids
}

/// Worker count from `DRGLAB_THREADS`, else the available parallelism.
pub fn thread_count() -> usize {
    std::env::var("DRGLAB_THREADS")
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .filter(|&t| t > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

pub fn run(params: Params, threads: usize) -> Result<VerifyReport> {
    if !(4..=8).contains(&params.max_n) {
        return Err(Error::Usage(format!("--max-n must lie in 4..=8, got {}", params.max_n)));
    }
    let claims: Vec<&Claim> = {
        let mut v: Vec<&Claim> = REGISTRY.iter().collect();
        v.sort_unstable_by_key(|c| c.id);
        v
    };
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<Entry>>> = Mutex::new(vec![None; claims.len()]);
    std::thread::scope(|s| {
        for _ in 0..threads.clamp(1, claims.len()) {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(claim) = claims.get(i) else { break };
                let entry = run_claim(claim, &params);
                slots.lock().unwrap()[i] = Some(entry);
            });
        }
    });
    let entries = slots.into_inner().unwrap().into_iter().map(|e| e.expect("every claim ran")).collect();
    Ok(VerifyReport { entries })
}

fn run_claim(claim: &Claim, params: &Params) -> Entry {
    let (dims, instance) = match claim.span {
        Span::Dims { family, lo, cap } => {
            let hi = params.max_n.min(cap);
            let dims: Vec<usize> = (lo..=hi).collect();
            (dims, format!("{family}, n={lo}..{hi}"))
        }
        Span::Fixed(what) => (Vec::new(), what.to_string()),
    };
    let (status, detail, witness) = match (claim.check)(&dims, params) {
        Outcome::Pass(d) => (Status::Pass, d, None),
        Outcome::Fail(d, w) => (Status::Fail, d, Some(w)),
        Outcome::Skipped(d) => (Status::SkippedBudget, d, None),
    };
    Entry { id: claim.id, statement: claim.statement, instance, status, detail, witness }
}

/// Turn a library error into a failing or skipped outcome.
fn errored(e: CoreError) -> Outcome {
    match e {
        CoreError::Resource(msg) => Outcome::Skipped(msg),
        e => Outcome::Fail(e.to_string(), json!({ "error": e.to_string() })),
    }
}

macro_rules! attempt {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(e) => return errored(e.into()),
        }
    };
}

macro_rules! ensure {
    ($cond:expr, $witness:expr, $($fmt:tt)+) => {
        if !$cond {
            return Outcome::Fail(format!($($fmt)+), $witness);
        }
    };
}

fn qn2(n: usize) -> std::result::Result<Graph, CoreError> {
    families::hypercube_square(n)
}

fn factorial(n: u64) -> u128 {
    (1..=n as u128).product()
}

fn c7_square(_: &[usize], _: &Params) -> Outcome {
    let g = attempt!(families::cycle(7)).square();
    let r = attempt!(drg::intersection_numbers(&g));
    let Some(w) = r.witness() else {
        return Outcome::Fail("C7^2 came out distance-regular".into(), json!({ "array": r.array().unwrap().to_string() }));
    };
    let wj = json!({ "kind": w.kind.as_str(), "distance": w.distance, "values": [w.values.0, w.values.1] });
    ensure!(w.values == (1, 2), wj, "witness values {:?}, expected (1, 2)", w.values);
    let gens = attempt!(aut::automorphisms(&g));
    let p = aut::distance_transitivity_failure(&g, &gens);
    ensure!(p.is_some(), wj, "C7^2 came out distance-transitive");
    let p = p.unwrap();
    Outcome::Pass(format!(
        "{}; pairs {:?} and {:?} at distance {} lie in different orbits",
        drg::describe_witness(w),
        p.first,
        p.second,
        p.distance
    ))
}

fn johnson_k3(_: &[usize], _: &Params) -> Outcome {
    let j63 = attempt!(families::johnson(6, 3)).square();
    let r = attempt!(drg::intersection_numbers(&j63));
    let got = r.array().map(|a| a.to_string());
    ensure!(got.as_deref() == Some("{18,1;1,18}"), json!({ "array": got }), "J(6,3)^2 array {got:?}");
    for n in 7..=9u64 {
        let g = attempt!(families::johnson(n as usize, 3)).square();
        let r = attempt!(drg::intersection_numbers(&g));
        let want = (binomial(n - 4, 2), binomial(n - 4, 2) + binomial(n - 5, 2));
        match r {
            DistanceRegularity::NotRegular(w) if w.kind == MismatchKind::B && w.values == want => {}
            other => {
                return Outcome::Fail(
                    format!("J({n},3)^2: expected b-mismatch {want:?}"),
                    json!({ "n": n, "result": format!("{other:?}") }),
                )
            }
        }
        if n == 7 {
            let gens = attempt!(aut::automorphisms(&g));
            ensure!(!aut::is_distance_transitive(&g, &gens), json!({ "n": 7 }), "J(7,3)^2 came out distance-transitive");
        }
    }
    Outcome::Pass("J(6,3)^2 = {18,1;1,18}; b-mismatches (3,4), (6,9), (10,16) for n = 7, 8, 9".into())
}

fn johnson_8_4(_: &[usize], _: &Params) -> Outcome {
    let g = attempt!(families::johnson(8, 4)).square();
    match attempt!(drg::intersection_numbers(&g)) {
        DistanceRegularity::Regular(a) => Outcome::Pass(format!("array {a}")),
        DistanceRegularity::NotRegular(w) => Outcome::Fail(
            drg::describe_witness(&w),
            json!({
                "kind": w.kind.as_str(),
                "distance": w.distance,
                "first": [w.first.0, w.first.1],
                "second": [w.second.0, w.second.1],
                "values": [w.values.0, w.values.1],
            }),
        ),
    }
}

fn q3_square(_: &[usize], _: &Params) -> Outcome {
    let g = attempt!(qn2(3));
    let cp = attempt!(families::cocktail_party(4));
    let map = attempt!(iso::is_isomorphic(&g, &cp));
    ensure!(map.is_some(), Value::Null, "Q3^2 and CP(4) are not isomorphic");
    let order = attempt!(aut::automorphisms(&g)).order();
    ensure!(order == 384u32.into(), json!({ "order": order.to_string() }), "|Aut(Q3^2)| = {order}");
    Outcome::Pass(format!("isomorphism {:?}; order 384", map.unwrap()))
}

fn antipodal_parity(dims: &[usize], _: &Params) -> Outcome {
    for &n in dims {
        let g = attempt!(qn2(n));
        let a = attempt!(drg::is_antipodal(&g));
        ensure!(a.is_antipodal() == (n % 2 == 1), json!({ "n": n, "result": format!("{a:?}") }), "n={n}: {a:?}");
        if n % 2 == 0 {
            let w = (1usize << n) - 1;
            let v = attempt!(drg::violates_antipodality(&g, 0, w, w ^ 1));
            ensure!(v, json!({ "n": n, "triple": [0, w, w ^ 1] }), "n={n}: (0, w, w+e1) does not break antipodality");
        }
    }
    Outcome::Pass("odd n antipodal, even n broken by (0, w, w+e1)".into())
}

fn aut_order(dims: &[usize], _: &Params) -> Outcome {
    let mut parts = Vec::new();
    for &n in dims {
        let want = (1u128 << n) * factorial(n as u64 + 1);
        let g = attempt!(qn2(n));
        let found = attempt!(aut::automorphisms(&g)).order();
        let built = attempt!(aut::claimed_generators_qn2(n)).order();
        let w = json!({ "n": n, "search": found.to_string(), "generated": built.to_string(), "expected": want.to_string() });
        ensure!(found.to_string() == want.to_string() && built == found, w, "n={n}: search {found}, generated {built}, expected {want}");
        parts.push(format!("{want}"));
    }
    Outcome::Pass(format!("orders {}", parts.join(", ")))
}

fn automorphic_parity(dims: &[usize], _: &Params) -> Outcome {
    for &n in dims {
        let v = attempt!(aut::is_automorphic_graph(&attempt!(qn2(n))));
        let ok = (v == AutomorphicVerdict::Automorphic) == (n % 2 == 0);
        ensure!(ok, json!({ "n": n, "verdict": v.label() }), "n={n}: {}", v.label());
    }
    Outcome::Pass("automorphic exactly for even n".into())
}

fn connectivity(dims: &[usize], _: &Params) -> Outcome {
    for &n in dims {
        let g = attempt!(qn2(n));
        let k = attempt!(connect::vertex_connectivity(&g));
        let want = binomial(n as u64 + 1, 2) as usize;
        ensure!(k == want && k == g.min_degree(), json!({ "n": n, "kappa": k, "valency": want }), "n={n}: kappa {k}, valency {want}");
    }
    Outcome::Pass("kappa = C(n+1,2)".into())
}

fn distance_transitive(dims: &[usize], _: &Params) -> Outcome {
    for &n in dims {
        let g = attempt!(qn2(n));
        let gens = attempt!(aut::automorphisms(&g));
        if let Some(w) = aut::distance_transitivity_failure(&g, &gens) {
            return Outcome::Fail(
                format!("n={n}: pairs {:?} and {:?} at distance {} in different orbits", w.first, w.second, w.distance),
                json!({ "n": n, "first": [w.first.0, w.first.1], "second": [w.second.0, w.second.1], "distance": w.distance }),
            );
        }
        ensure!(attempt!(drg::intersection_numbers(&g)).array().is_some(), json!({ "n": n }), "n={n}: not distance-regular");
    }
    Outcome::Pass("one pair orbit per distance".into())
}

fn qn2_array(dims: &[usize], _: &Params) -> Outcome {
    for &n in dims {
        let want = attempt!(drg::predicted_array_qn2(n));
        let got = attempt!(drg::intersection_numbers(&attempt!(qn2(n))));
        let got_s = got.array().map(|a| a.to_string());
        ensure!(got.array() == Some(&want), json!({ "n": n, "computed": got_s, "expected": want.to_string() }), "n={n}: {got_s:?} vs {want}");
    }
    Outcome::Pass("BFS arrays equal the closed form".into())
}

fn qn_array(dims: &[usize], _: &Params) -> Outcome {
    for &n in dims {
        let got = attempt!(drg::intersection_numbers(&attempt!(families::hypercube(n))));
        let b: Vec<u64> = (0..n as u64).map(|i| n as u64 - i).collect();
        let c: Vec<u64> = (1..=n as u64).collect();
        let ok = got.array().is_some_and(|a| a.b == b && a.c == c);
        ensure!(ok, json!({ "n": n, "computed": got.array().map(|a| a.to_string()) }), "n={n}");
    }
    Outcome::Pass("{n,...,1;1,...,n}".into())
}

fn line_graph_exclusion(dims: &[usize], _: &Params) -> Outcome {
    for &n in dims {
        let spec = attempt!(spectra::qn2_spectrum_closed_form(n));
        let min = spec.smallest().unwrap().0;
        let half = (n / 2) as i64;
        let want = if n % 2 == 0 { -half } else { -half - 1 };
        ensure!(min == want, json!({ "n": n, "min": min }), "n={n}: smallest eigenvalue {min}, expected {want}");
        let v = spectra::line_graph_verdict(&spec, binomial(n as u64 + 1, 2));
        let expected = if n >= 5 { LineGraphVerdict::ExcludedByEigenvalue } else { LineGraphVerdict::ExcludedByArithmetic };
        ensure!(v.verdict == expected, json!({ "n": n, "detail": v.detail() }), "n={n}: {}", v.detail());
        if n == 4 {
            let reg = v.regular.clone().unwrap();
            let ok = reg.t == Some(6) && !reg.feasible && v.divisible_pairs() == vec![(4, 8)];
            ensure!(ok, json!({ "detail": v.detail() }), "Q4^2 trace: {}", v.detail());
        }
    }
    Outcome::Pass("eigenvalue bound for n >= 5; Q4^2: t=6 infeasible, {c,d}={4,8} infeasible".into())
}

fn panconnected(dims: &[usize], params: &Params) -> Outcome {
    let mut open = 0;
    for &n in dims {
        match attempt!(connect::is_panconnected(&attempt!(qn2(n)), params.budget)) {
            PanconnectOutcome::Panconnected => {}
            PanconnectOutcome::Fails { u, v, length } => {
                return Outcome::Fail(format!("n={n}: no {u}-{v} path of length {length}"), json!({ "n": n, "u": u, "v": v, "length": length }))
            }
            PanconnectOutcome::Inconclusive(list) => open += list.len(),
        }
    }
    if open > 0 {
        return Outcome::Skipped(format!("{open} searches ran out of budget, no failures"));
    }
    Outcome::Pass("every pair has paths of every length from d(u,v) to |V|-1".into())
}

fn primitivity_parity(dims: &[usize], _: &Params) -> Outcome {
    for &n in dims {
        let g = attempt!(qn2(n));
        let gens = attempt!(aut::automorphisms(&g));
        let b = attempt!(aut::find_block_system(&g, &gens));
        let w = (1usize << n) - 1;
        let ok = match &b {
            BlockSearch::Primitive => n % 2 == 0,
            BlockSearch::Imprimitive(s) => n % 2 == 1 && s.block_size() == 2 && s.blocks().iter().all(|p| p[0] ^ p[1] == w),
        };
        ensure!(ok, json!({ "n": n, "block_size": b.system().map(|s| s.block_size()) }), "n={n}: {b:?}");
    }
    Outcome::Pass("primitive for even n, blocks {x, x+w} for odd n".into())
}

fn spectrum(dims: &[usize], _: &Params) -> Outcome {
    for &n in dims {
        let s = attempt!(ConnectionSet::weight_at_most(n, 2));
        let exact = spectra::cayley_z2n_spectrum(&s);
        let closed = attempt!(spectra::qn2_spectrum_closed_form(n));
        ensure!(exact == closed, json!({ "n": n, "exact": format!("{:?}", exact.entries()), "closed": format!("{:?}", closed.entries()) }), "n={n}: character sums differ from the closed form");
        if n <= DENSE_CAP {
            let dense = attempt!(spectra::dense_spectrum(&families::cayley_z2n(&s), 1e-10));
            ensure!(spectra::spectra_agree(&dense, &closed, 1e-8), json!({ "n": n, "dense": format!("{:?}", dense.entries()) }), "n={n}: dense spectrum disagrees");
        }
    }
    Outcome::Pass(format!("exact = closed form; dense agrees to 1e-8 for n <= {DENSE_CAP}"))
}

fn sphere_johnson(dims: &[usize], _: &Params) -> Outcome {
    for &n in dims {
        let g = attempt!(qn2(n));
        let sphere: Vec<usize> = families::sphere_words(n).iter().map(|w| w.index()).collect();
        let (t, _) = attempt!(g.induced_subgraph(&sphere));
        let j = attempt!(families::johnson(n + 1, 2));
        let map = attempt!(SphereJohnsonMap::new(n)).vertex_map();
        ensure!(iso::is_isomorphism(&t, &j, &map), json!({ "n": n }), "n={n}: explicit map is not an isomorphism");
    }
    Outcome::Pass("e_i -> {i,n+1}, e_i+e_j -> {i,j} is an isomorphism".into())
}

fn square_of_qn(dims: &[usize], _: &Params) -> Outcome {
    for &n in dims {
        let sq = attempt!(families::hypercube(n)).square();
        ensure!(sq == attempt!(qn2(n)), json!({ "n": n }), "n={n}: labelled graphs differ");
    }
    Outcome::Pass("labelled equality".into())
}

fn srg_chain(_: &[usize], _: &Params) -> Outcome {
    let srg = |g: &Graph| match drg::srg_params(g) {
        Ok(SrgOutcome::Srg(p)) => Ok(p),
        Ok(other) => Err(CoreError::Structure(format!("{}: {other:?}", g.name()))),
        Err(e) => Err(e),
    };
    let q3 = attempt!(srg(&attempt!(qn2(3))));
    let q4g = attempt!(qn2(4));
    let q4 = attempt!(srg(&q4g));
    let clebsch = attempt!(srg(&q4g.complement()));
    let formula = attempt!(drg::srg_complement_params(q4));
    let p = |n, k, lambda, mu| SrgParams { n, k, lambda, mu };
    let w = json!({ "q3": q3.to_string(), "q4": q4.to_string(), "complement": clebsch.to_string(), "formula": formula.to_string() });
    let ok = q3 == p(8, 6, 4, 6) && q4 == p(16, 10, 6, 6) && clebsch == p(16, 5, 0, 2) && formula == clebsch;
    ensure!(ok, w, "q3 {q3}, q4 {q4}, complement {clebsch}, formula {formula}");
    Outcome::Pass(format!("{q3}, {q4}, complement {clebsch}"))
}

fn edge_transitive_connectivity(_: &[usize], _: &Params) -> Outcome {
    let mut corpus: Vec<Graph> = Vec::new();
    for n in 3..=GROUP_CAP {
        corpus.push(attempt!(qn2(n)));
    }
    for n in 2..=6 {
        corpus.push(attempt!(families::hypercube(n)));
    }
    corpus.push(attempt!(families::cocktail_party(4)));
    corpus.push(attempt!(families::cycle(7)));
    corpus.push(attempt!(families::johnson(6, 2)));
    corpus.push(attempt!(families::johnson(5, 2)).complement().with_name("Petersen"));
    corpus.push(families::star(3));
    let mut checked = Vec::new();
    for g in &corpus {
        let gens = attempt!(aut::automorphisms(g));
        if let connect::WatkinsOutcome::Verified { kappa, .. } = attempt!(connect::watkins_check(g, &gens)) {
            checked.push(format!("{}:{kappa}", g.name()));
        }
    }
    Outcome::Pass(format!("verified on {}", checked.join(" ")))
}
