//! Vertex connectivity by unit-capacity max-flow, and exhaustive path
//! length searches for panconnectedness.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::aut::is_edge_transitive;
use crate::group::GeneratorSet;
use crate::{Error, Graph, Result, UNREACHABLE};

/// Default node budget for a single path search.
pub const DEFAULT_PATH_BUDGET: u64 = 50_000_000;
/// Largest graph for the exhaustive path searches.
pub const PATH_SEARCH_VERTEX_LIMIT: usize = 16;

/// Residual network for internally disjoint `s`–`t` paths. Vertex `x` is
/// split into `2x` (in) and `2x + 1` (out) joined by a unit arc.
struct SplitNetwork {
    head: Vec<usize>,
    cap: Vec<u32>,
    adj: Vec<Vec<usize>>,
}

impl SplitNetwork {
    fn new(g: &Graph, s: usize, t: usize) -> Self {
        let n = g.n_vertices();
        let big = n as u32;
        let mut net = SplitNetwork { head: Vec::new(), cap: Vec::new(), adj: vec![Vec::new(); 2 * n] };
        for x in 0..n {
            net.arc(2 * x, 2 * x + 1, if x == s || x == t { big } else { 1 });
        }
        for (u, v) in g.edges() {
            net.arc(2 * u + 1, 2 * v, big);
            net.arc(2 * v + 1, 2 * u, big);
        }
        net
    }

    fn arc(&mut self, from: usize, to: usize, cap: u32) {
        self.adj[from].push(self.head.len());
        self.head.push(to);
        self.cap.push(cap);
        self.adj[to].push(self.head.len());
        self.head.push(from);
        self.cap.push(0);
    }

    /// Breadth-first reachability in the residual graph, with parent arcs.
    fn search(&self, source: usize) -> Vec<Option<usize>> {
        let mut parent = vec![None; self.adj.len()];
        let mut seen = vec![false; self.adj.len()];
        seen[source] = true;
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            for &a in &self.adj[x] {
                let y = self.head[a];
                if self.cap[a] > 0 && !seen[y] {
                    seen[y] = true;
                    parent[y] = Some(a);
                    queue.push_back(y);
                }
            }
        }
        parent
    }

    fn max_flow(&mut self, source: usize, sink: usize) -> usize {
        let mut flow = 0;
        loop {
            let parent = self.search(source);
            if parent[sink].is_none() {
                return flow;
            }
            let mut y = sink;
            while y != source {
                let a = parent[y].unwrap();
                self.cap[a] -= 1;
                self.cap[a ^ 1] += 1;
                y = self.head[a ^ 1];
            }
            flow += 1;
        }
    }
}

/// A set of vertices whose removal separates `s` from `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexCut {
    pub s: usize,
    pub t: usize,
    pub vertices: Vec<usize>,
}

/// Maximum number of internally disjoint paths between non-adjacent `s`
/// and `t`, together with a cut of that size read off the final residual
/// network.
pub fn local_connectivity(g: &Graph, s: usize, t: usize) -> Result<(usize, VertexCut)> {
    let n = g.n_vertices();
    if s >= n || t >= n || s == t || g.has_edge(s, t) {
        return Err(Error::Input(format!("local connectivity needs distinct non-adjacent vertices, got {s} and {t}")));
    }
    let mut net = SplitNetwork::new(g, s, t);
    let flow = net.max_flow(2 * s + 1, 2 * t);
    let parent = net.search(2 * s + 1);
    let reach = |node: usize| node == 2 * s + 1 || parent[node].is_some();
    let vertices: Vec<usize> = (0..n).filter(|&x| x != s && x != t && reach(2 * x) && !reach(2 * x + 1)).collect();
    let cut = VertexCut { s, t, vertices };
    if cut.vertices.len() != flow || !separates(g, &cut) {
        return Err(Error::Integrity(format!("flow {flow} between {s} and {t} does not match its extracted cut")));
    }
    Ok((flow, cut))
}

fn separates(g: &Graph, cut: &VertexCut) -> bool {
    let n = g.n_vertices();
    let mut blocked = vec![false; n];
    for &x in &cut.vertices {
        blocked[x] = true;
    }
    blocked[cut.s] = true;
    let mut stack = vec![cut.s];
    while let Some(x) = stack.pop() {
        for y in g.neighbors(x) {
            if y == cut.t {
                return false;
            }
            if !blocked[y] {
                blocked[y] = true;
                stack.push(y);
            }
        }
    }
    true
}

/// A minimum vertex cut, or `None` for complete graphs, which have none.
/// Disconnected graphs give the empty cut.
///
/// Fix a vertex `v` of minimum degree. Some minimum cut either misses `v`,
/// so it separates `v` from a non-neighbour, or contains `v`, in which
/// case it separates two non-adjacent neighbours of `v`.
pub fn min_vertex_cut(g: &Graph) -> Result<Option<VertexCut>> {
    let n = g.n_vertices();
    if g.is_complete() {
        return Ok(None);
    }
    if !g.is_connected() {
        let row = g.bfs_distances(0);
        let t = (0..n).find(|&x| row.get(x).is_none()).unwrap();
        return Ok(Some(VertexCut { s: 0, t, vertices: Vec::new() }));
    }
    let v = (0..n).min_by_key(|&x| g.degree(x)).unwrap();
    let mut best: Option<(usize, VertexCut)> = None;
    let consider = |s: usize, t: usize, best: &mut Option<(usize, VertexCut)>| -> Result<()> {
        let (k, cut) = local_connectivity(g, s, t)?;
        if best.as_ref().is_none_or(|(b, _)| k < *b) {
            *best = Some((k, cut));
        }
        Ok(())
    };
    for u in 0..n {
        if u != v && !g.has_edge(u, v) {
            consider(v, u, &mut best)?;
        }
    }
    let nbrs: Vec<usize> = g.neighbors(v).collect();
    for (i, &x) in nbrs.iter().enumerate() {
        for &y in &nbrs[i + 1..] {
            if !g.has_edge(x, y) {
                consider(x, y, &mut best)?;
            }
        }
    }
    Ok(best.map(|(_, c)| c))
}

/// `κ(g)`: zero when disconnected and `n − 1` for complete graphs.
pub fn vertex_connectivity(g: &Graph) -> Result<usize> {
    Ok(match min_vertex_cut(g)? {
        Some(c) => c.vertices.len(),
        None => g.n_vertices().saturating_sub(1),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WatkinsOutcome {
    /// The group is not edge-transitive, so there is nothing to check.
    Vacuous,
    Verified { kappa: usize, delta: usize },
}

/// For a connected edge-transitive graph, connectivity equals minimum
/// degree. A mismatch is reported as an integrity failure.
pub fn watkins_check(g: &Graph, gens: &GeneratorSet) -> Result<WatkinsOutcome> {
    if !g.is_connected() {
        return Err(Error::Structure(format!("{} is disconnected", g.name())));
    }
    if !is_edge_transitive(g, gens) {
        return Ok(WatkinsOutcome::Vacuous);
    }
    let kappa = vertex_connectivity(g)?;
    let delta = g.min_degree();
    if kappa != delta {
        return Err(Error::Integrity(format!("edge-transitive {} has connectivity {kappa} but minimum degree {delta}", g.name())));
    }
    Ok(WatkinsOutcome::Verified { kappa, delta })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PathOutcome {
    /// A simple path, listed from `u` to `v`.
    Achievable(Vec<usize>),
    Unachievable,
    /// The node budget ran out first.
    Inconclusive,
}

/// Which lengths in `[d(u,v), n−1]` admit a simple `u`–`v` path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathSpectrumReport {
    pub u: usize,
    pub v: usize,
    /// `None` when `v` cannot be reached from `u`.
    pub distance: Option<usize>,
    pub lengths: Vec<(usize, PathOutcome)>,
}

impl PathSpectrumReport {
    pub fn achievable(&self) -> Vec<usize> {
        self.pick(|o| matches!(o, PathOutcome::Achievable(_)))
    }

    pub fn unachievable(&self) -> Vec<usize> {
        self.pick(|o| matches!(o, PathOutcome::Unachievable))
    }

    pub fn inconclusive(&self) -> Vec<usize> {
        self.pick(|o| matches!(o, PathOutcome::Inconclusive))
    }

    pub fn witness(&self, length: usize) -> Option<&[usize]> {
        self.lengths.iter().find_map(|(l, o)| match o {
            PathOutcome::Achievable(p) if *l == length => Some(p.as_slice()),
            _ => None,
        })
    }

    /// Every length in the interval is achievable.
    pub fn is_complete(&self) -> bool {
        self.distance.is_some() && self.lengths.iter().all(|(_, o)| matches!(o, PathOutcome::Achievable(_)))
    }

    fn pick(&self, f: impl Fn(&PathOutcome) -> bool) -> Vec<usize> {
        self.lengths.iter().filter(|(_, o)| f(o)).map(|(l, _)| *l).collect()
    }
}

struct PathSearch<'a> {
    g: &'a Graph,
    target: usize,
    dist_to_target: Vec<u32>,
    nodes: u64,
    budget: u64,
}

impl PathSearch<'_> {
    /// Extend `path` by exactly `left` more edges ending at the target.
    /// `None` when the budget runs out.
    fn extend(&mut self, path: &mut Vec<usize>, visited: u32, left: usize) -> Option<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        let x = *path.last().unwrap();
        if left == 0 {
            return Some(x == self.target);
        }
        let free = self.g.n_vertices() - visited.count_ones() as usize;
        if left > free {
            return Some(false);
        }
        for y in self.g.neighbors(x) {
            if visited >> y & 1 == 1 {
                continue;
            }
            let d = self.dist_to_target[y];
            if d == UNREACHABLE || d as usize > left - 1 || (y == self.target && left > 1) {
                continue;
            }
            path.push(y);
            match self.extend(path, visited | 1 << y, left - 1) {
                Some(true) => return Some(true),
                None => return None,
                Some(false) => {}
            }
            path.pop();
        }
        Some(false)
    }
}

/// Search every length from `d(u,v)` to `n − 1`; each length gets its own
/// budget of search nodes.
pub fn path_spectrum(g: &Graph, u: usize, v: usize, budget: u64) -> Result<PathSpectrumReport> {
    let n = g.n_vertices();
    if n > PATH_SEARCH_VERTEX_LIMIT {
        return Err(Error::Resource(format!("path search capped at {PATH_SEARCH_VERTEX_LIMIT} vertices, got {n}")));
    }
    if u >= n || v >= n || u == v {
        return Err(Error::Input(format!("path spectrum needs two distinct vertices, got {u} and {v}")));
    }
    let to_v = g.bfs_distances(v);
    let Some(d) = to_v.get(u) else {
        return Ok(PathSpectrumReport { u, v, distance: None, lengths: Vec::new() });
    };
    let dist_to_target: Vec<u32> = (0..n).map(|x| to_v.get(x).unwrap_or(UNREACHABLE)).collect();
    let mut lengths = Vec::new();
    for l in d as usize..n {
        let mut s = PathSearch { g, target: v, dist_to_target: dist_to_target.clone(), nodes: 0, budget };
        let mut path = vec![u];
        let outcome = match s.extend(&mut path, 1 << u, l) {
            Some(true) => PathOutcome::Achievable(path),
            Some(false) => PathOutcome::Unachievable,
            None => PathOutcome::Inconclusive,
        };
        lengths.push((l, outcome));
    }
    Ok(PathSpectrumReport { u, v, distance: Some(d as usize), lengths })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PanconnectOutcome {
    Panconnected,
    /// First pair and length with no path, scanning pairs `u < v` in order.
    Fails { u: usize, v: usize, length: usize },
    /// No failure found, but these `(u, v, length)` searches ran out of
    /// budget.
    Inconclusive(Vec<(usize, usize, usize)>),
}

/// Every pair `u < v` joined by paths of every length in `[d(u,v), n−1]`.
/// Stops at the first failure.
pub fn is_panconnected(g: &Graph, budget: u64) -> Result<PanconnectOutcome> {
    let n = g.n_vertices();
    if n > PATH_SEARCH_VERTEX_LIMIT {
        return Err(Error::Resource(format!("panconnectedness capped at {PATH_SEARCH_VERTEX_LIMIT} vertices, got {n}")));
    }
    let mut open = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let r = path_spectrum(g, u, v, budget)?;
            if r.distance.is_none() {
                return Ok(PanconnectOutcome::Fails { u, v, length: n - 1 });
            }
            if let Some(&length) = r.unachievable().first() {
                return Ok(PanconnectOutcome::Fails { u, v, length });
            }
            open.extend(r.inconclusive().into_iter().map(|l| (u, v, l)));
        }
    }
    Ok(if open.is_empty() { PanconnectOutcome::Panconnected } else { PanconnectOutcome::Inconclusive(open) })
}
