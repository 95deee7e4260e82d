//! Immutable simple undirected graphs with dense bit-row adjacency.
//!
//! Rows are `u64` words, so neighbourhood intersections cost
//! `O(n / 64)`. The internal constructors set both halves of every edge;
//! [`Graph::from_rows`] checks externally supplied rows for symmetry and
//! loops.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::{self, BitSet};
use crate::{Error, Result};

/// Distance sentinel for vertices in another component.
pub const UNREACHABLE: u32 = u32::MAX;

/// Equality compares labelled adjacency only; names are ignored.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    stride: usize,
    rows: Vec<u64>,
    name: String,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Graph) -> bool {
        self.n == other.n && self.rows == other.rows
    }
}

impl Eq for Graph {}

impl core::fmt::Debug for Graph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Graph")
            .field("name", &self.name)
            .field("n_vertices", &self.n)
            .field("n_edges", &self.n_edges())
            .finish()
    }
}

impl Graph {
    /// Build from an undirected edge list; duplicate edges collapse.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let stride = bitset::words_for(n);
        let mut rows = vec![0u64; n * stride];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Input(format!("edge ({u},{v}) has an endpoint >= {n}")));
            }
            if u == v {
                return Err(Error::Input(format!("loop edge at vertex {u}")));
            }
            bitset::set(&mut rows[u * stride..(u + 1) * stride], v);
            bitset::set(&mut rows[v * stride..(v + 1) * stride], u);
        }
        Ok(Graph { n, stride, rows, name: "graph".to_string() })
    }

    /// Build from a symmetric adjacency predicate evaluated on `u < v`.
    pub fn from_fn(n: usize, name: impl Into<String>, mut adjacent: impl FnMut(usize, usize) -> bool) -> Graph {
        let stride = bitset::words_for(n);
        let mut rows = vec![0u64; n * stride];
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    bitset::set(&mut rows[u * stride..(u + 1) * stride], v);
                    bitset::set(&mut rows[v * stride..(v + 1) * stride], u);
                }
            }
        }
        Graph { n, stride, rows, name: name.into() }
    }

    /// Build from complete adjacency rows. Fails unless the rows describe a
    /// simple undirected graph.
    pub fn from_rows(n: usize, name: impl Into<String>, rows: Vec<u64>) -> Result<Graph> {
        let stride = bitset::words_for(n);
        if rows.len() != n * stride {
            return Err(Error::Input(format!("expected {} row words, got {}", n * stride, rows.len())));
        }
        let g = Graph { n, stride, rows, name: name.into() };
        for u in 0..n {
            if g.has_edge(u, u) {
                return Err(Error::Input(format!("loop at vertex {u}")));
            }
            if let Some(i) = g.row(u).iter().enumerate().find_map(|(i, &w)| {
                let tail = n - i * 64;
                (tail < 64 && w >> tail != 0).then_some(i)
            }) {
                return Err(Error::Input(format!("row {u} has bits past the last vertex (word {i})")));
            }
            for v in g.neighbors(u) {
                if !g.has_edge(v, u) {
                    return Err(Error::Input(format!("asymmetric adjacency between {u} and {v}")));
                }
            }
        }
        Ok(g)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Graph {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn n_edges(&self) -> usize {
        self.rows.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn row(&self, u: usize) -> &[u64] {
        &self.rows[u * self.stride..(u + 1) * self.stride]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        bitset::get(self.row(u), v)
    }

    pub fn neighbors(&self, u: usize) -> bitset::Ones<'_> {
        bitset::ones(self.row(u))
    }

    pub fn degree(&self, u: usize) -> usize {
        bitset::count(self.row(u))
    }

    /// Number of common neighbours of `u` and `v`.
    pub fn common_neighbors(&self, u: usize, v: usize) -> usize {
        bitset::count_and(self.row(u), self.row(v))
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).max().unwrap_or(0)
    }

    /// The common valency, or `None` for an irregular graph.
    pub fn regular_valency(&self) -> Option<usize> {
        if self.n == 0 {
            return Some(0);
        }
        let k = self.degree(0);
        (0..self.n).all(|u| self.degree(u) == k).then_some(k)
    }

    pub fn is_complete(&self) -> bool {
        self.n_edges() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn bfs_distances(&self, source: usize) -> DistanceRow {
        assert!(source < self.n, "source {source} out of range");
        let mut dist = vec![UNREACHABLE; self.n];
        let mut queue = VecDeque::with_capacity(self.n);
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u];
            for v in self.neighbors(u) {
                if dist[v] == UNREACHABLE {
                    dist[v] = du + 1;
                    queue.push_back(v);
                }
            }
        }
        DistanceRow { source, dist }
    }

    pub fn distance_matrix(&self) -> DistanceMatrix {
        let mut d = Vec::with_capacity(self.n * self.n);
        for u in 0..self.n {
            d.extend_from_slice(&self.bfs_distances(u).dist);
        }
        DistanceMatrix { n: self.n, d }
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.bfs_distances(0).dist.iter().all(|&d| d != UNREACHABLE)
    }

    /// `u ~ v` in the square iff their distance here is one or two. Works
    /// componentwise on disconnected input.
    pub fn square(&self) -> Graph {
        let mut rows = vec![0u64; self.rows.len()];
        for u in 0..self.n {
            let out = &mut rows[u * self.stride..(u + 1) * self.stride];
            out.copy_from_slice(self.row(u));
            for v in self.neighbors(u) {
                for (o, w) in out.iter_mut().zip(self.row(v)) {
                    *o |= w;
                }
            }
            bitset::clear(out, u);
        }
        Graph { n: self.n, stride: self.stride, rows, name: format!("{}^2", self.name) }
    }

    pub fn complement(&self) -> Graph {
        let mut rows = vec![0u64; self.rows.len()];
        for u in 0..self.n {
            let out = &mut rows[u * self.stride..(u + 1) * self.stride];
            for (o, w) in out.iter_mut().zip(self.row(u)) {
                *o = !w;
            }
            let tail = self.n % 64;
            if tail != 0 {
                out[self.stride - 1] &= (1u64 << tail) - 1;
            }
            bitset::clear(out, u);
        }
        Graph { n: self.n, stride: self.stride, rows, name: format!("complement({})", self.name) }
    }

    /// Subgraph induced on `vs` (in the given order). Returns the graph and
    /// the map from new vertex ids to the original ones.
    pub fn induced_subgraph(&self, vs: &[usize]) -> Result<(Graph, Vec<usize>)> {
        if vs.is_empty() {
            return Err(Error::Input("induced subgraph on an empty vertex set".to_string()));
        }
        let mut seen = BitSet::new(self.n);
        for &v in vs {
            if v >= self.n {
                return Err(Error::Input(format!("vertex {v} out of range")));
            }
            if seen.contains(v) {
                return Err(Error::Input(format!("vertex {v} listed twice")));
            }
            seen.insert(v);
        }
        let g = Graph::from_fn(vs.len(), format!("{}[induced]", self.name), |a, b| self.has_edge(vs[a], vs[b]));
        Ok((g, vs.to_vec()))
    }

    pub fn diameter(&self) -> Result<usize> {
        let mut best = 0;
        for u in 0..self.n {
            let row = self.bfs_distances(u);
            match row.eccentricity() {
                Some(e) => best = best.max(e as usize),
                None => return Err(Error::Structure(format!("{} is disconnected", self.name))),
            }
        }
        Ok(best)
    }

    /// Length of a shortest cycle, `None` for a forest.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        let mut dist = vec![UNREACHABLE; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut queue = VecDeque::new();
        for root in 0..self.n {
            dist.fill(UNREACHABLE);
            parent.fill(usize::MAX);
            dist[root] = 0;
            queue.clear();
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                if best.is_some_and(|b| 2 * dist[u] as usize + 1 >= b) {
                    break;
                }
                for v in self.neighbors(u) {
                    if dist[v] == UNREACHABLE {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        let len = (dist[u] + dist[v] + 1) as usize;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![u8::MAX; self.n];
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Shortest-path distances from one source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceRow {
    pub source: usize,
    pub dist: Vec<u32>,
}

impl DistanceRow {
    pub fn get(&self, v: usize) -> Option<u32> {
        match self.dist[v] {
            UNREACHABLE => None,
            d => Some(d),
        }
    }

    /// Largest finite distance, `None` if some vertex is unreachable.
    pub fn eccentricity(&self) -> Option<u32> {
        self.dist.iter().try_fold(0, |m, &d| (d != UNREACHABLE).then_some(m.max(d)))
    }
}

/// All-pairs distances, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Largest finite entry.
    pub fn max_finite(&self) -> u32 {
        self.d.iter().copied().filter(|&x| x != UNREACHABLE).max().unwrap_or(0)
    }
}
