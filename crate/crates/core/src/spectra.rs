//! Adjacency spectra: exact character sums for Cayley graphs over Z₂ⁿ, the
//! closed form for `Qₙ²`, a dense Jacobi oracle, and the line-graph filters.
//!
//! The characters of Z₂ⁿ are `χ_a(x) = (−1)^⟨a,x⟩`, so the eigenvalue of
//! `Cay(Z₂ⁿ, S)` on `χ_a` is `Σ_{s∈S} (−1)^⟨a,s⟩`, an integer.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::families::ConnectionSet;
use crate::jacobi;
use crate::{binomial, Error, Graph, Result};

/// Largest graph handed to the dense eigensolver.
pub const DENSE_VERTEX_LIMIT: usize = 512;
/// Sweep bound for the Jacobi iteration.
pub const MAX_SWEEPS: usize = 100;
/// Slack below −2 before the eigenvalue test rules out a line graph.
pub const LINE_GRAPH_TOL: f64 = 1e-6;

pub trait Eigenvalue: Copy + PartialOrd {
    const EXACT: bool;
    fn to_f64(self) -> f64;
}

impl Eigenvalue for i64 {
    const EXACT: bool = true;
    fn to_f64(self) -> f64 {
        self as f64
    }
}

impl Eigenvalue for f64 {
    const EXACT: bool = false;
    fn to_f64(self) -> f64 {
        self
    }
}

/// Distinct eigenvalues, strictly decreasing, with multiplicities.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum<T> {
    entries: Vec<(T, usize)>,
}

pub type ExactSpectrum = Spectrum<i64>;
pub type NumericSpectrum = Spectrum<f64>;

impl<T: Eigenvalue> Spectrum<T> {
    /// Entries must be strictly decreasing with positive multiplicities.
    pub fn from_entries(entries: Vec<(T, usize)>) -> Result<Self> {
        if entries.windows(2).any(|w| w[0].0.partial_cmp(&w[1].0) != Some(core::cmp::Ordering::Greater)) || entries.iter().any(|e| e.1 == 0) {
            return Err(Error::Input("spectrum entries must strictly decrease with positive multiplicity".into()));
        }
        Ok(Spectrum { entries })
    }

    pub fn entries(&self) -> &[(T, usize)] {
        &self.entries
    }

    pub fn is_exact(&self) -> bool {
        T::EXACT
    }

    pub fn n_vertices(&self) -> usize {
        self.entries.iter().map(|e| e.1).sum()
    }

    pub fn largest(&self) -> Option<(T, usize)> {
        self.entries.first().copied()
    }

    pub fn smallest(&self) -> Option<(T, usize)> {
        self.entries.last().copied()
    }

    /// `Σ λ·m`, the adjacency trace.
    pub fn trace(&self) -> f64 {
        self.entries.iter().map(|&(v, m)| v.to_f64() * m as f64).sum()
    }

    /// `Σ λ²·m`, which equals twice the number of edges.
    pub fn second_moment(&self) -> f64 {
        self.entries.iter().map(|&(v, m)| v.to_f64() * v.to_f64() * m as f64).sum()
    }
}

impl ExactSpectrum {
    fn from_counts(counts: BTreeMap<i64, usize>) -> Self {
        Spectrum { entries: counts.into_iter().rev().collect() }
    }

    /// `Σ λ·m` in exact arithmetic.
    pub fn exact_trace(&self) -> i64 {
        self.entries.iter().map(|&(v, m)| v * m as i64).sum()
    }

    pub fn exact_second_moment(&self) -> i64 {
        self.entries.iter().map(|&(v, m)| v * v * m as i64).sum()
    }
}

/// Same multiplicity pattern and eigenvalues within `tol`.
pub fn spectra_agree<A: Eigenvalue, B: Eigenvalue>(a: &Spectrum<A>, b: &Spectrum<B>, tol: f64) -> bool {
    a.entries.len() == b.entries.len()
        && a.entries.iter().zip(&b.entries).all(|(x, y)| x.1 == y.1 && libm::fabs(x.0.to_f64() - y.0.to_f64()) <= tol)
}

/// Eigenvalue on the character indexed by `a`.
pub fn character_sum(s: &ConnectionSet, a: u32) -> i64 {
    s.members().iter().map(|w| if (w.bits() & a).count_ones().is_multiple_of(2) { 1 } else { -1 }).sum()
}

pub fn cayley_z2n_spectrum(s: &ConnectionSet) -> ExactSpectrum {
    let mut counts = BTreeMap::new();
    for a in 0u32..1 << s.dimension() {
        *counts.entry(character_sum(s, a)).or_insert(0) += 1;
    }
    Spectrum::from_counts(counts)
}

/// `λ_i = n(n+1)/2 − 2i(n+1) + 2i²`.
pub fn qn2_eigenvalue(n: u64, i: u64) -> i64 {
    let (n, i) = (n as i64, i as i64);
    n * (n + 1) / 2 - 2 * i * (n + 1) + 2 * i * i
}

/// Closed-form spectrum of `Qₙ²` for `n ≥ 4`: `λ_0` once, and for
/// `1 ≤ i ≤ ⌊(n+1)/2⌋` the eigenvalue `λ_i` with multiplicity
/// `C(n,i) + C(n,n+1−i)`, except that for odd `n` the middle index
/// `i = (n+1)/2` pairs with itself and has multiplicity `C(n,i)`.
pub fn qn2_spectrum_closed_form(n: usize) -> Result<ExactSpectrum> {
    if n < 4 {
        return Err(Error::Input(format!("closed-form spectrum needs n >= 4, got {n}")));
    }
    let n = n as u64;
    let top = n.div_ceil(2);
    let mut entries = vec![(qn2_eigenvalue(n, 0), 1usize)];
    for i in 1..=top {
        let m = if n % 2 == 1 && i == top { binomial(n, i) } else { binomial(n, i) + binomial(n, n + 1 - i) };
        entries.push((qn2_eigenvalue(n, i), m as usize));
    }
    Spectrum::from_entries(entries)
}

/// Eigenvalues of the adjacency matrix by cyclic Jacobi, clustered into
/// multiplicities with gap `10·tol`.
pub fn dense_spectrum(g: &Graph, tol: f64) -> Result<NumericSpectrum> {
    let n = g.n_vertices();
    if n > DENSE_VERTEX_LIMIT {
        return Err(Error::Resource(format!("dense eigensolver capped at {DENSE_VERTEX_LIMIT} vertices, got {n}")));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Input(format!("tolerance must be positive, got {tol}")));
    }
    let mut a = vec![0.0f64; n * n];
    for (u, v) in g.edges() {
        a[u * n + v] = 1.0;
        a[v * n + u] = 1.0;
    }
    let mut values = jacobi::symmetric_eigenvalues(&mut a, n, tol, MAX_SWEEPS)?;
    values.sort_by(|x, y| y.total_cmp(x));
    Ok(cluster(&values, 10.0 * tol))
}

/// Group a descending list into runs whose consecutive gaps are at most
/// `gap`; each run contributes its mean.
fn cluster(desc: &[f64], gap: f64) -> NumericSpectrum {
    let mut entries: Vec<(f64, usize)> = Vec::new();
    let mut sum = 0.0;
    let mut count = 0usize;
    let mut last = f64::NAN;
    for &x in desc {
        if count > 0 && last - x > gap {
            entries.push((sum / count as f64, count));
            sum = 0.0;
            count = 0;
        }
        sum += x;
        count += 1;
        last = x;
    }
    if count > 0 {
        entries.push((sum / count as f64, count));
    }
    Spectrum { entries }
}

/// `false` means the spectrum rules out a line graph (an eigenvalue below
/// −2); `true` means this test cannot decide.
pub fn line_graph_eigenvalue_test<T: Eigenvalue>(spec: &Spectrum<T>) -> bool {
    match spec.smallest() {
        Some((v, _)) => v.to_f64() >= -2.0 - LINE_GRAPH_TOL,
        None => true,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LineGraphVerdict {
    ExcludedByEigenvalue,
    ExcludedByArithmetic,
    Inconclusive,
}

/// The regular-root case: `Δ` is `t`-regular on `h` vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularRootCase {
    /// `t` from `2t − 2 = valency`, if integral.
    pub t: Option<u64>,
    /// `h = 2|E|/t`, if integral.
    pub h: Option<u64>,
    pub feasible: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BiregularObstruction {
    /// `c` does not divide `|E|`.
    CDoesNotDivide,
    /// `d` does not divide `|E|`.
    DDoesNotDivide,
    /// A part is smaller than the degree of the opposite part.
    PartTooSmall,
}

/// A `(c, d)`-biregular bipartite root with parts `A` (degree `c`) and `B`
/// (degree `d`), `c < d`, `c + d − 2 = valency`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiregularRootCase {
    pub c: u64,
    pub d: u64,
    pub part_a: Option<u64>,
    pub part_b: Option<u64>,
    pub obstruction: Option<BiregularObstruction>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RootGraphVerdict {
    pub verdict: LineGraphVerdict,
    /// Smallest eigenvalue when the eigenvalue test was run.
    pub min_eigenvalue: Option<f64>,
    pub regular: Option<RegularRootCase>,
    pub biregular: Vec<BiregularRootCase>,
}

impl RootGraphVerdict {
    /// Divisible `(c, d)` pairs, the ones that survive the first filter.
    pub fn divisible_pairs(&self) -> Vec<(u64, u64)> {
        self.biregular
            .iter()
            .filter(|b| !matches!(b.obstruction, Some(BiregularObstruction::CDoesNotDivide | BiregularObstruction::DDoesNotDivide)))
            .map(|b| (b.c, b.d))
            .collect()
    }

    /// Text trace of the case analysis.
    pub fn detail(&self) -> String {
        let mut out = String::new();
        if let Some(m) = self.min_eigenvalue {
            out.push_str(&format!("smallest eigenvalue {m}; "));
        }
        if self.verdict == LineGraphVerdict::ExcludedByEigenvalue {
            out.push_str("below -2, not a line graph");
            return out;
        }
        match &self.regular {
            Some(RegularRootCase { t: None, .. }) => out.push_str("regular root: valency + 2 is odd, no t; "),
            Some(RegularRootCase { t: Some(t), h: None, .. }) => {
                out.push_str(&format!("regular root: t={t}, 2|E|/t not integral, infeasible; "))
            }
            Some(RegularRootCase { t: Some(t), h: Some(h), feasible }) => out.push_str(&format!(
                "regular root: t={t}, h={h}, {}; ",
                if *feasible { "feasible" } else { "infeasible (h <= t)" }
            )),
            None => {}
        }
        let divisible: Vec<&BiregularRootCase> = self
            .biregular
            .iter()
            .filter(|b| !matches!(b.obstruction, Some(BiregularObstruction::CDoesNotDivide | BiregularObstruction::DDoesNotDivide)))
            .collect();
        if divisible.is_empty() {
            out.push_str("biregular root: no (c,d) with c+d-2 = valency dividing |E|; ");
        }
        for b in divisible {
            let (a, bb) = (b.part_a.unwrap(), b.part_b.unwrap());
            match b.obstruction {
                Some(_) => out.push_str(&format!(
                    "biregular root {{c,d}}={{{},{}}}: |A|={a}, |B|={bb}, part too small, infeasible; ",
                    b.c, b.d
                )),
                None => out.push_str(&format!("biregular root {{c,d}}={{{},{}}}: |A|={a}, |B|={bb}, feasible; ", b.c, b.d)),
            }
        }
        out.push_str(match self.verdict {
            LineGraphVerdict::ExcludedByArithmetic => "no root graph possible",
            _ => "inconclusive",
        });
        out
    }
}

/// Necessary conditions for a connected `valency`-regular graph on
/// `n_vertices` vertices to be the line graph `L(Δ)`: `Δ` is either
/// `t`-regular with `2t − 2 = valency` and `t·h/2 = n_vertices`, or
/// `(c,d)`-biregular bipartite with `c + d − 2 = valency`,
/// `c·|A| = d·|B| = n_vertices`, `|A| ≥ d` and `|B| ≥ c`.
pub fn regular_line_graph_root_search(n_vertices: u64, valency: u64) -> RootGraphVerdict {
    let edges = n_vertices;
    let regular = {
        let t = valency.is_multiple_of(2).then_some(valency / 2 + 1);
        let h = t.and_then(|t| (2 * edges).is_multiple_of(t).then_some(2 * edges / t));
        let feasible = matches!((t, h), (Some(t), Some(h)) if h > t);
        RegularRootCase { t, h, feasible }
    };
    let sum = valency + 2;
    let mut biregular = Vec::new();
    for c in 1..sum {
        let d = sum - c;
        if c >= d {
            break;
        }
        let case = if !edges.is_multiple_of(c) {
            BiregularRootCase { c, d, part_a: None, part_b: None, obstruction: Some(BiregularObstruction::CDoesNotDivide) }
        } else if !edges.is_multiple_of(d) {
            BiregularRootCase { c, d, part_a: None, part_b: None, obstruction: Some(BiregularObstruction::DDoesNotDivide) }
        } else {
            let (a, b) = (edges / c, edges / d);
            let obstruction = (a < d || b < c).then_some(BiregularObstruction::PartTooSmall);
            BiregularRootCase { c, d, part_a: Some(a), part_b: Some(b), obstruction }
        };
        biregular.push(case);
    }
    let any = regular.feasible || biregular.iter().any(|b| b.obstruction.is_none());
    RootGraphVerdict {
        verdict: if any { LineGraphVerdict::Inconclusive } else { LineGraphVerdict::ExcludedByArithmetic },
        min_eigenvalue: None,
        regular: Some(regular),
        biregular,
    }
}

/// Eigenvalue test first, then the root arithmetic.
pub fn line_graph_verdict<T: Eigenvalue>(spec: &Spectrum<T>, valency: u64) -> RootGraphVerdict {
    let min = spec.smallest().map(|(v, _)| v.to_f64());
    if !line_graph_eigenvalue_test(spec) {
        return RootGraphVerdict {
            verdict: LineGraphVerdict::ExcludedByEigenvalue,
            min_eigenvalue: min,
            regular: None,
            biregular: Vec::new(),
        };
    }
    let mut v = regular_line_graph_root_search(spec.n_vertices() as u64, valency);
    v.min_eigenvalue = min;
    v
}
