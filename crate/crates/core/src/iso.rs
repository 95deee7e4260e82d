//! Backtracking isomorphism search with colour refinement.
//!
//! Both graphs start from a shared colouring by distance profile (degree
//! and the number of vertices at each distance). Refinement splits colour
//! classes by the multiset of (distance, colour) pairs around each vertex
//! until nothing changes, using one signature table for both graphs so
//! colours stay comparable. The search individualizes a vertex of `g` and
//! a candidate of the same colour in `h`, refines, and recurses until every
//! class is a singleton; the resulting bijection is then checked edge by
//! edge.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::BitSet;
use crate::{DistanceMatrix, Error, Graph, Result, UNREACHABLE};

/// Vertex limit for the backtracking searches.
pub const SEARCH_VERTEX_LIMIT: usize = 64;

fn profile(g: &Graph, dist: &DistanceMatrix, v: usize) -> Vec<u32> {
    let mut counts = vec![g.degree(v) as u32];
    let mut unreachable = 0u32;
    for &d in dist.row(v) {
        if d == UNREACHABLE {
            unreachable += 1;
            continue;
        }
        let d = d as usize + 1;
        if counts.len() <= d {
            counts.resize(d + 1, 0);
        }
        counts[d] += 1;
    }
    counts.push(unreachable);
    counts
}

/// Rank each key among the distinct keys of both sides.
fn shared_ranks<K: Ord + Clone>(a: &[K], b: &[K]) -> (Vec<u32>, Vec<u32>) {
    let mut table: BTreeMap<K, u32> = a.iter().chain(b).map(|k| (k.clone(), 0)).collect();
    for (i, v) in table.values_mut().enumerate() {
        *v = i as u32;
    }
    (a.iter().map(|k| table[k]).collect(), b.iter().map(|k| table[k]).collect())
}

fn same_multiset(a: &[u32], b: &[u32]) -> bool {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_unstable();
    b.sort_unstable();
    a == b
}

/// Search state shared by isomorphism testing and automorphism search.
pub(crate) struct Matcher<'a> {
    g: &'a Graph,
    h: &'a Graph,
    gd: DistanceMatrix,
    hd: DistanceMatrix,
    g_class: Vec<u32>,
    h_class: Vec<u32>,
}

impl<'a> Matcher<'a> {
    pub(crate) fn new(g: &'a Graph, h: &'a Graph) -> Self {
        let gd = g.distance_matrix();
        let hd = h.distance_matrix();
        let gp: Vec<Vec<u32>> = (0..g.n_vertices()).map(|v| profile(g, &gd, v)).collect();
        let hp: Vec<Vec<u32>> = (0..h.n_vertices()).map(|v| profile(h, &hd, v)).collect();
        let (g_class, h_class) = shared_ranks(&gp, &hp);
        Matcher { g, h, gd, hd, g_class, h_class }
    }

    /// True when the invariant classes of both graphs form the same
    /// multiset.
    fn class_multisets_match(&self) -> bool {
        same_multiset(&self.g_class, &self.h_class)
    }

    /// Refine both colourings to a common stable state; `None` when the
    /// colour class sizes stop agreeing.
    fn refine(&self, mut cg: Vec<u32>, mut ch: Vec<u32>) -> Option<(Vec<u32>, Vec<u32>)> {
        let signature = |d: &DistanceMatrix, c: &[u32], v: usize| {
            let mut around: Vec<(u32, u32)> = d.row(v).iter().zip(c).map(|(&dist, &col)| (dist, col)).collect();
            around.sort_unstable();
            (c[v], around)
        };
        let mut classes = 0;
        loop {
            if !same_multiset(&cg, &ch) {
                return None;
            }
            let sg: Vec<_> = (0..cg.len()).map(|v| signature(&self.gd, &cg, v)).collect();
            let sh: Vec<_> = (0..ch.len()).map(|v| signature(&self.hd, &ch, v)).collect();
            let (ng, nh) = shared_ranks(&sg, &sh);
            let count = ng.iter().chain(&nh).max().map_or(0, |&m| m + 1);
            cg = ng;
            ch = nh;
            if count == classes {
                return same_multiset(&cg, &ch).then_some((cg, ch));
            }
            classes = count;
        }
    }

    fn individualize(cg: &mut [u32], ch: &mut [u32], x: usize, y: usize) -> bool {
        if cg[x] != ch[y] {
            return false;
        }
        let fresh = cg.iter().chain(ch.iter()).max().map_or(0, |&m| m + 1);
        cg[x] = fresh;
        ch[y] = fresh;
        true
    }

    /// Complete the partial map `prefix` (pairs `g`-vertex → `h`-vertex) to
    /// an isomorphism. Candidates are tried in ascending order.
    pub(crate) fn extend(&self, prefix: &[(usize, usize)]) -> Option<Vec<usize>> {
        if self.g.n_vertices() != self.h.n_vertices() {
            return None;
        }
        let mut cg = self.g_class.clone();
        let mut ch = self.h_class.clone();
        for &(x, y) in prefix {
            if !Self::individualize(&mut cg, &mut ch, x, y) {
                return None;
            }
        }
        let (cg, ch) = self.refine(cg, ch)?;
        self.search(cg, ch)
    }

    fn search(&self, cg: Vec<u32>, ch: Vec<u32>) -> Option<Vec<usize>> {
        let n = cg.len();
        let mut size = BTreeMap::new();
        for &c in &cg {
            *size.entry(c).or_insert(0usize) += 1;
        }
        // smallest non-singleton class, lowest colour on ties
        let target = size.iter().filter(|(_, &s)| s > 1).min_by_key(|(&c, &s)| (s, c)).map(|(&c, _)| c);
        let Some(target) = target else {
            let mut map = vec![0; n];
            let by_colour: BTreeMap<u32, usize> = ch.iter().enumerate().map(|(y, &c)| (c, y)).collect();
            for x in 0..n {
                map[x] = by_colour[&cg[x]];
            }
            return self.verify(&map).then_some(map);
        };
        let x = (0..n).find(|&v| cg[v] == target).unwrap();
        for y in (0..n).filter(|&v| ch[v] == target) {
            let (mut g2, mut h2) = (cg.clone(), ch.clone());
            Self::individualize(&mut g2, &mut h2, x, y);
            if let Some((g3, h3)) = self.refine(g2, h2) {
                if let Some(map) = self.search(g3, h3) {
                    return Some(map);
                }
            }
        }
        None
    }

    pub(crate) fn verify(&self, map: &[usize]) -> bool {
        self.g.n_edges() == self.h.n_edges() && self.g.edges().all(|(u, v)| self.h.has_edge(map[u], map[v]))
    }
}

/// Search for an isomorphism `g → h`; the returned bijection maps vertex
/// `v` of `g` to `witness[v]` of `h` and has been checked edge by edge.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<Option<Vec<usize>>> {
    is_isomorphic_with_limit(g, h, SEARCH_VERTEX_LIMIT)
}

pub fn is_isomorphic_with_limit(g: &Graph, h: &Graph, limit: usize) -> Result<Option<Vec<usize>>> {
    let n = g.n_vertices();
    if n > limit || h.n_vertices() > limit {
        return Err(Error::Resource(format!("isomorphism search capped at {limit} vertices")));
    }
    if n != h.n_vertices() || g.n_edges() != h.n_edges() {
        return Ok(None);
    }
    let m = Matcher::new(g, h);
    if !m.class_multisets_match() {
        return Ok(None);
    }
    match m.extend(&[]) {
        Some(map) if m.verify(&map) => Ok(Some(map)),
        Some(_) => Err(Error::Integrity("isomorphism witness failed verification".into())),
        None => Ok(None),
    }
}

/// Check that `map` is an isomorphism from `g` onto `h`.
pub fn is_isomorphism(g: &Graph, h: &Graph, map: &[usize]) -> bool {
    let n = g.n_vertices();
    if n != h.n_vertices() || map.len() != n || g.n_edges() != h.n_edges() {
        return false;
    }
    let mut seen = BitSet::new(n);
    for &y in map {
        if y >= n || seen.contains(y) {
            return false;
        }
        seen.insert(y);
    }
    g.edges().all(|(u, v)| h.has_edge(map[u], map[v]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    fn relabel(g: &Graph, perm: &[usize]) -> Graph {
        let edges: Vec<_> = g.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::from_edge_list(g.n_vertices(), &edges).unwrap()
    }

    #[test]
    fn relabeled_cycle() {
        let c5 = cycle(5);
        let h = relabel(&c5, &[3, 0, 4, 1, 2]);
        let w = is_isomorphic(&c5, &h).unwrap().expect("isomorphic");
        assert!(is_isomorphism(&c5, &h, &w));
    }

    #[test]
    fn non_isomorphic_same_degrees() {
        // C6 versus two triangles
        let two = Graph::from_edge_list(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(is_isomorphic(&cycle(6), &two).unwrap(), None);
    }

    #[test]
    fn size_cap() {
        let big = Graph::from_edge_list(65, &[]).unwrap();
        assert!(matches!(is_isomorphic(&big, &big), Err(Error::Resource(_))));
    }

    fn arb_graph() -> impl Strategy<Value = (Graph, Vec<usize>)> {
        (2usize..11).prop_flat_map(|n| {
            (
                proptest::collection::vec(any::<bool>(), n * (n - 1) / 2),
                Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
            )
                .prop_map(move |(bits, perm)| {
                    let mut it = bits.into_iter();
                    let mut edges = Vec::new();
                    for u in 0..n {
                        for v in u + 1..n {
                            if it.next().unwrap() {
                                edges.push((u, v));
                            }
                        }
                    }
                    (Graph::from_edge_list(n, &edges).unwrap(), perm)
                })
        })
    }

    proptest! {
        #[test]
        fn reflexive_and_symmetric((g, perm) in arb_graph()) {
            let h = relabel(&g, &perm);
            prop_assert!(is_isomorphic(&g, &g).unwrap().is_some());
            let fwd = is_isomorphic(&g, &h).unwrap();
            let back = is_isomorphic(&h, &g).unwrap();
            prop_assert!(fwd.is_some() && back.is_some());
            prop_assert!(is_isomorphism(&h, &g, &back.unwrap()));
        }
    }
}
