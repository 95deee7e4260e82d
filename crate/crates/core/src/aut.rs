//! Automorphism groups by backtracking, transitivity tests on vertices,
//! edges, arcs and distance classes, block systems, and the explicit
//! generators for the automorphism group of `Qₙ²`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::families::{self, ConnectionSet, Word};
use crate::group::{GeneratorSet, UnionFind};
use crate::iso::{Matcher, SEARCH_VERTEX_LIMIT};
use crate::spectra::{self, LineGraphVerdict};
use crate::{Error, Graph, Permutation, Result};

/// Generators of `Aut(g)`.
///
/// For each base point `b` (taken deepest first) the search fixes every
/// earlier point and looks for an automorphism sending `b` to each vertex
/// not already reached by the generators found so far. The product of the
/// orbit lengths seen on the way is compared against the stabilizer chain.
pub fn automorphisms(g: &Graph) -> Result<GeneratorSet> {
    let n = g.n_vertices();
    if n > SEARCH_VERTEX_LIMIT {
        return Err(Error::Resource(format!("automorphism search capped at {SEARCH_VERTEX_LIMIT} vertices, got {n}")));
    }
    let m = Matcher::new(g, g);
    let mut gens: Vec<Permutation> = Vec::new();
    let mut predicted = BigUint::from(1u32);
    let mut prefix: Vec<(usize, usize)> = (0..n).map(|v| (v, v)).collect();
    for b in (0..n).rev() {
        prefix.truncate(b);
        let mut orbit = orbit_from(n, &gens, b);
        for gamma in 0..n {
            if orbit[gamma] {
                continue;
            }
            prefix.push((b, gamma));
            let found = m.extend(&prefix);
            prefix.pop();
            if let Some(images) = found {
                gens.push(Permutation::from_images(images)?);
                orbit = orbit_from(n, &gens, b);
            }
        }
        predicted *= BigUint::from(orbit.iter().filter(|&&x| x).count());
    }
    let set = GeneratorSet::for_graph(g, gens)?;
    if set.order() != predicted {
        return Err(Error::Integrity(format!(
            "search orbit product {predicted} disagrees with stabilizer chain order {}",
            set.order()
        )));
    }
    Ok(set)
}

fn orbit_from(n: usize, gens: &[Permutation], v: usize) -> Vec<bool> {
    let mut seen = vec![false; n];
    seen[v] = true;
    let mut stack = vec![v];
    while let Some(x) = stack.pop() {
        for p in gens {
            let y = p.apply(x);
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen
}

/// The GF(2)-linear map of Z₂ⁿ sending `e_i` to `images[i−1]`, as a
/// permutation of word values. Fails unless the images form a basis.
pub fn linear_extension(n: usize, images: &[Word]) -> Result<Permutation> {
    if images.len() != n || images.iter().any(|w| w.dimension() != n) {
        return Err(Error::Input(format!("linear extension needs {n} images of dimension {n}")));
    }
    let map: Vec<usize> = (0u32..1 << n)
        .map(|x| images.iter().enumerate().filter(|(i, _)| x >> i & 1 == 1).fold(0u32, |acc, (_, w)| acc ^ w.bits()) as usize)
        .collect();
    Permutation::from_images(map).map_err(|_| Error::Input("images are not a basis".into()))
}

/// The translations `x ↦ x ⊕ v` for every `v`, the adjacent coordinate
/// transpositions, and for each `i` the linear extension fixing `e_i` and
/// sending `e_j` to `e_i ⊕ e_j`. That last map carries the clique
/// `{e_1, …, e_n}` onto `{e_i} ∪ {e_i ⊕ e_j}`. Each one is checked
/// against `Qₙ²`.
pub fn claimed_generators_qn2(n: usize) -> Result<GeneratorSet> {
    if n < 4 {
        return Err(Error::Input(format!("claimed generators need n >= 4, got {n}")));
    }
    let g = families::hypercube_square(n)?;
    let size = 1usize << n;
    let mut gens = Vec::new();
    for v in 1..size {
        gens.push(Permutation::from_images((0..size).map(|x| x ^ v).collect())?);
    }
    for i in 1..n {
        let mut images: Vec<Word> = (1..=n).map(|j| Word::unit(n, j)).collect();
        images.swap(i - 1, i);
        gens.push(linear_extension(n, &images)?);
    }
    for i in 1..=n {
        let ei = Word::unit(n, i);
        let images: Vec<Word> = (1..=n).map(|j| if j == i { ei } else { ei + Word::unit(n, j) }).collect();
        gens.push(linear_extension(n, &images)?);
    }
    GeneratorSet::for_graph(&g, gens)
}

pub fn is_vertex_transitive(g: &Graph, gens: &GeneratorSet) -> bool {
    g.n_vertices() <= 1 || gens.point_orbits().classes() == 1
}

/// One orbit on unordered edges. Edgeless graphs count as edge-transitive.
pub fn is_edge_transitive(g: &Graph, gens: &GeneratorSet) -> bool {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    orbit_count(g, gens, &edges, true) <= 1
}

/// One orbit on ordered adjacent pairs.
pub fn is_arc_transitive(g: &Graph, gens: &GeneratorSet) -> bool {
    let arcs: Vec<(usize, usize)> = g.edges().flat_map(|(u, v)| [(u, v), (v, u)]).collect();
    orbit_count(g, gens, &arcs, false) <= 1
}

fn orbit_count(g: &Graph, gens: &GeneratorSet, pairs: &[(usize, usize)], unordered: bool) -> usize {
    let n = g.n_vertices();
    let key = |u: usize, v: usize| if unordered && u > v { v * n + u } else { u * n + v };
    let mut index = vec![usize::MAX; n * n];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        index[key(u, v)] = i;
    }
    let mut uf = UnionFind::new(pairs.len());
    for p in gens.generators() {
        for (i, &(u, v)) in pairs.iter().enumerate() {
            uf.union(i, index[key(p.apply(u), p.apply(v))]);
        }
    }
    uf.classes()
}

/// Orbits of the group on ordered vertex pairs: distance-transitive when
/// there is exactly one orbit per distance `0..=D`. Disconnected graphs are
/// reported as not distance-transitive.
pub fn is_distance_transitive(g: &Graph, gens: &GeneratorSet) -> bool {
    g.is_connected() && distance_transitivity_failure(g, gens).is_none()
}

/// Two ordered pairs at the same distance lying in different orbits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairOrbitWitness {
    pub distance: u32,
    pub first: (usize, usize),
    pub second: (usize, usize),
}

/// Scans pairs lexicographically; for each distance the first pair seen is
/// the reference, and the first pair in another orbit is reported.
pub fn distance_transitivity_failure(g: &Graph, gens: &GeneratorSet) -> Option<PairOrbitWitness> {
    let n = g.n_vertices();
    let dist = g.distance_matrix();
    let mut uf = UnionFind::new(n * n);
    for p in gens.generators() {
        for u in 0..n {
            let pu = p.apply(u);
            for v in 0..n {
                uf.union(u * n + v, pu * n + p.apply(v));
            }
        }
    }
    let mut reference: Vec<Option<(usize, usize)>> = vec![None; dist.max_finite() as usize + 2];
    for u in 0..n {
        for v in 0..n {
            let d = dist.get(u, v);
            let slot = if d == crate::UNREACHABLE { reference.len() - 1 } else { d as usize };
            match reference[slot] {
                None => reference[slot] = Some((u, v)),
                Some((a, b)) if uf.find(a * n + b) != uf.find(u * n + v) => {
                    return Some(PairOrbitWitness { distance: d, first: (a, b), second: (u, v) });
                }
                Some(_) => {}
            }
        }
    }
    None
}

/// A non-trivial partition of the vertices preserved by the group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockSystem {
    blocks: Vec<Vec<usize>>,
    block_size: usize,
}

impl BlockSystem {
    /// Blocks sorted internally and ordered by their least vertex.
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_size(&self) -> usize {
        self.block_size
    }

    pub fn block_of(&self, v: usize) -> Option<&[usize]> {
        self.blocks.iter().find(|b| b.binary_search(&v).is_ok()).map(|b| b.as_slice())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BlockSearch {
    Imprimitive(BlockSystem),
    Primitive,
}

impl BlockSearch {
    pub fn is_primitive(&self) -> bool {
        matches!(self, BlockSearch::Primitive)
    }

    pub fn system(&self) -> Option<&BlockSystem> {
        match self {
            BlockSearch::Imprimitive(b) => Some(b),
            BlockSearch::Primitive => None,
        }
    }
}

/// Finest invariant partition in which `a` and `b` share a block.
fn minimal_block(n: usize, gens: &[Permutation], a: usize, b: usize) -> UnionFind {
    let mut uf = UnionFind::new(n);
    uf.union(a, b);
    let mut queue = vec![(a, b)];
    while let Some((x, y)) = queue.pop() {
        for p in gens {
            let (px, py) = (p.apply(x), p.apply(y));
            if uf.union(px, py) {
                queue.push((px, py));
            }
        }
    }
    uf
}

/// Among the minimal blocks containing `{0, v}` for `v ≠ 0`, the smallest
/// non-trivial one, ties going to the smallest `v`.
pub fn find_block_system(g: &Graph, gens: &GeneratorSet) -> Result<BlockSearch> {
    let n = g.n_vertices();
    if !is_vertex_transitive(g, gens) {
        return Err(Error::Structure(format!("group is not transitive on the vertices of {}", g.name())));
    }
    let mut best: Option<(usize, UnionFind)> = None;
    for v in 1..n {
        let mut uf = minimal_block(n, gens.generators(), 0, v);
        let size = uf.class_size(0);
        if size < n && best.as_ref().is_none_or(|(s, _)| size < *s) {
            best = Some((size, uf));
        }
    }
    let Some((block_size, mut uf)) = best else {
        return Ok(BlockSearch::Primitive);
    };
    let mut by_root: Vec<Vec<usize>> = vec![Vec::new(); n];
    for v in 0..n {
        by_root[uf.find(v)].push(v);
    }
    let mut blocks: Vec<Vec<usize>> = by_root.into_iter().filter(|b| !b.is_empty()).collect();
    blocks.sort_unstable_by_key(|b| b[0]);
    let system = BlockSystem { blocks, block_size };
    if system.blocks.iter().any(|b| b.len() != block_size) || !preserves_blocks(&system, gens, &mut uf) {
        return Err(Error::Integrity("block closure produced an invalid system".into()));
    }
    Ok(BlockSearch::Imprimitive(system))
}

fn preserves_blocks(system: &BlockSystem, gens: &GeneratorSet, uf: &mut UnionFind) -> bool {
    gens.generators().iter().all(|p| {
        system.blocks.iter().all(|b| {
            let r = uf.find(p.apply(b[0]));
            b.iter().all(|&x| uf.find(p.apply(x)) == r)
        })
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NotAutomorphicReason {
    Complete,
    NotDistanceTransitive,
    Imprimitive,
    LineGraph,
}

impl NotAutomorphicReason {
    pub fn as_str(self) -> &'static str {
        match self {
            NotAutomorphicReason::Complete => "complete",
            NotAutomorphicReason::NotDistanceTransitive => "not distance-transitive",
            NotAutomorphicReason::Imprimitive => "imprimitive",
            NotAutomorphicReason::LineGraph => "line graph",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AutomorphicVerdict {
    Automorphic,
    NotAutomorphic(NotAutomorphicReason),
    /// Distance-transitive, primitive and not complete, but the line-graph
    /// filters could not rule out a root graph.
    Inconclusive(String),
}

impl AutomorphicVerdict {
    pub fn label(&self) -> String {
        match self {
            AutomorphicVerdict::Automorphic => "automorphic".into(),
            AutomorphicVerdict::NotAutomorphic(r) => format!("not automorphic ({})", r.as_str()),
            AutomorphicVerdict::Inconclusive(why) => format!("inconclusive ({why})"),
        }
    }
}

/// Distance-transitive, primitive, not complete, and not a line graph.
pub fn is_automorphic_graph(g: &Graph) -> Result<AutomorphicVerdict> {
    if g.is_complete() {
        return Ok(AutomorphicVerdict::NotAutomorphic(NotAutomorphicReason::Complete));
    }
    let gens = automorphisms(g)?;
    classify(g, &gens)
}

/// As [`is_automorphic_graph`] with a precomputed group.
pub fn classify(g: &Graph, gens: &GeneratorSet) -> Result<AutomorphicVerdict> {
    use AutomorphicVerdict::*;
    if g.is_complete() {
        return Ok(NotAutomorphic(NotAutomorphicReason::Complete));
    }
    if !is_distance_transitive(g, gens) {
        return Ok(NotAutomorphic(NotAutomorphicReason::NotDistanceTransitive));
    }
    if !find_block_system(g, gens)?.is_primitive() {
        return Ok(NotAutomorphic(NotAutomorphicReason::Imprimitive));
    }
    let valency = g.regular_valency().ok_or_else(|| Error::Integrity("distance-transitive graph is not regular".into()))? as u64;
    let verdict = match families::as_cayley_z2n(g) {
        Some(s) => line_graph_check(&s, valency),
        None => spectra::line_graph_verdict(&spectra::dense_spectrum(g, 1e-10)?, valency),
    };
    Ok(match verdict.verdict {
        LineGraphVerdict::ExcludedByEigenvalue | LineGraphVerdict::ExcludedByArithmetic => Automorphic,
        LineGraphVerdict::Inconclusive => Inconclusive(verdict.detail()),
    })
}

fn line_graph_check(s: &ConnectionSet, valency: u64) -> spectra::RootGraphVerdict {
    spectra::line_graph_verdict(&spectra::cayley_z2n_spectrum(s), valency)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drg;
    use crate::families::{complete, cycle, hypercube, hypercube_square, johnson, path, star};

    fn order(g: &Graph) -> u64 {
        let s = automorphisms(g).unwrap();
        for p in s.generators() {
            assert!(p.preserves(g));
        }
        s.order().try_into().unwrap()
    }

    fn factorial(n: u64) -> u64 {
        (1..=n).product()
    }

    #[test]
    fn small_orders() {
        assert_eq!(order(&complete(4)), 24);
        assert_eq!(order(&complete(1)), 1);
        assert_eq!(order(&cycle(7).unwrap()), 14);
        assert_eq!(order(&path(3)), 2);
        assert_eq!(order(&star(3)), 6);
        assert_eq!(order(&Graph::from_edge_list(4, &[]).unwrap()), 24);
        // Petersen graph as the Kneser graph: complement of J(5,2)
        assert_eq!(order(&johnson(5, 2).unwrap().complement()), 120);
        // two disjoint triangles: Sym(3) wr Sym(2)
        let two = Graph::from_edge_list(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(order(&two), 72);
    }

    #[test]
    fn hypercube_orders() {
        for n in 2..=5u64 {
            assert_eq!(order(&hypercube(n as usize).unwrap()), (1 << n) * factorial(n));
        }
    }

    #[test]
    fn hypercube_square_orders() {
        assert_eq!(order(&hypercube_square(3).unwrap()), 384);
        assert_eq!(order(&hypercube_square(4).unwrap()), 1920);
    }

    #[test]
    fn claimed_generators_generate_everything() {
        let gens = claimed_generators_qn2(4).unwrap();
        assert_eq!(gens.order(), BigUint::from(1920u32));
        assert_eq!(gens.order(), automorphisms(&hypercube_square(4).unwrap()).unwrap().order());
        assert!(matches!(claimed_generators_qn2(3), Err(Error::Input(_))));
    }

    #[test]
    fn all_ones_translation_is_fixed_point_free() {
        let n = 5;
        let g = hypercube_square(n).unwrap();
        let w = (1usize << n) - 1;
        let t = Permutation::from_images((0..1 << n).map(|x| x ^ w).collect()).unwrap();
        assert_eq!(t.fixed_points(), 0);
        assert!(t.preserves(&g));
    }

    #[test]
    fn linear_extension_rejects_dependent_images() {
        let n = 3;
        let images = [Word::unit(n, 1), Word::unit(n, 1), Word::unit(n, 3)];
        assert!(linear_extension(n, &images).is_err());
    }

    #[test]
    fn hypercube_group_sits_inside_square_group() {
        for n in 3..=4 {
            let big = automorphisms(&hypercube_square(n).unwrap()).unwrap();
            let small = automorphisms(&hypercube(n).unwrap()).unwrap();
            assert!(small.generators().iter().all(|p| big.contains(p)));
        }
    }

    #[test]
    fn transitivity_hierarchy() {
        let p3 = path(3);
        assert!(!is_vertex_transitive(&p3, &automorphisms(&p3).unwrap()));
        let k13 = star(3);
        let s = automorphisms(&k13).unwrap();
        assert!(is_edge_transitive(&k13, &s) && !is_arc_transitive(&k13, &s) && !is_vertex_transitive(&k13, &s));
        let c6 = cycle(6).unwrap();
        let s = automorphisms(&c6).unwrap();
        assert!(is_distance_transitive(&c6, &s));
        let q4 = hypercube_square(4).unwrap();
        let s = automorphisms(&q4).unwrap();
        assert!(is_vertex_transitive(&q4, &s) && is_edge_transitive(&q4, &s) && is_arc_transitive(&q4, &s));
        assert!(is_distance_transitive(&q4, &s));
    }

    #[test]
    fn c7_square_is_not_distance_transitive() {
        let g = cycle(7).unwrap().square();
        let s = automorphisms(&g).unwrap();
        assert!(is_vertex_transitive(&g, &s));
        assert!(!is_distance_transitive(&g, &s));
        // 0→1 and 0→2 are both edges of C7², but only 0→1 is a C7 edge
        let w = distance_transitivity_failure(&g, &s).unwrap();
        assert_eq!(w, PairOrbitWitness { distance: 1, first: (0, 1), second: (0, 2) });
        assert!(drg::intersection_numbers(&g).unwrap().array().is_none());
    }

    #[test]
    fn distance_transitive_implies_distance_regular() {
        let graphs = [cycle(6).unwrap(), hypercube(4).unwrap(), johnson(6, 2).unwrap(), hypercube_square(3).unwrap(), johnson(6, 3).unwrap().square()];
        for g in &graphs {
            let s = automorphisms(g).unwrap();
            assert!(is_distance_transitive(g, &s), "{}", g.name());
            assert!(drg::intersection_numbers(g).unwrap().array().is_some(), "{}", g.name());
        }
    }

    #[test]
    fn mixed_components_are_not_edge_transitive() {
        // disjoint K2 + K3 is neither
        let g = Graph::from_edge_list(5, &[(0, 1), (2, 3), (3, 4), (2, 4)]).unwrap();
        let s = automorphisms(&g).unwrap();
        assert!(!is_edge_transitive(&g, &s) && !is_arc_transitive(&g, &s));
    }

    #[test]
    fn block_systems() {
        let q3 = hypercube(3).unwrap();
        let s = automorphisms(&q3).unwrap();
        let sys = find_block_system(&q3, &s).unwrap();
        let b = sys.system().unwrap();
        assert_eq!(b.block_size(), 2);
        // size-2 blocks of Q3 are antipodal pairs
        assert!(b.blocks().iter().all(|p| p[0] ^ p[1] == 7));

        let q4 = hypercube_square(4).unwrap();
        let s = automorphisms(&q4).unwrap();
        assert!(find_block_system(&q4, &s).unwrap().is_primitive());

        let c5 = cycle(5).unwrap();
        assert!(find_block_system(&c5, &automorphisms(&c5).unwrap()).unwrap().is_primitive());
        let c6 = cycle(6).unwrap();
        let sys = find_block_system(&c6, &automorphisms(&c6).unwrap()).unwrap();
        assert_eq!(sys.system().unwrap().block_size(), 2);
        assert_eq!(sys.system().unwrap().block_of(0), Some(&[0usize, 3][..]));

        let p3 = path(3);
        assert!(matches!(find_block_system(&p3, &automorphisms(&p3).unwrap()), Err(Error::Structure(_))));
    }

    #[test]
    fn imprimitive_distance_transitive_is_bipartite_or_antipodal() {
        let graphs = [cycle(6).unwrap(), cycle(8).unwrap(), hypercube(3).unwrap(), hypercube(4).unwrap(), hypercube_square(3).unwrap()];
        for g in &graphs {
            let s = automorphisms(g).unwrap();
            assert!(is_distance_transitive(g, &s));
            if !find_block_system(g, &s).unwrap().is_primitive() {
                assert!(g.is_bipartite() || drg::is_antipodal(g).unwrap().is_antipodal(), "{}", g.name());
            }
        }
    }

    #[test]
    fn automorphic_verdicts() {
        assert_eq!(is_automorphic_graph(&complete(5)).unwrap(), AutomorphicVerdict::NotAutomorphic(NotAutomorphicReason::Complete));
        assert_eq!(is_automorphic_graph(&hypercube_square(4).unwrap()).unwrap(), AutomorphicVerdict::Automorphic);
        assert_eq!(
            is_automorphic_graph(&cycle(7).unwrap().square()).unwrap(),
            AutomorphicVerdict::NotAutomorphic(NotAutomorphicReason::NotDistanceTransitive)
        );
        assert_eq!(
            is_automorphic_graph(&hypercube(3).unwrap()).unwrap(),
            AutomorphicVerdict::NotAutomorphic(NotAutomorphicReason::Imprimitive)
        );
        // Petersen: smallest eigenvalue −2 but no root graph on 10 edges
        assert_eq!(is_automorphic_graph(&johnson(5, 2).unwrap().complement()).unwrap(), AutomorphicVerdict::Automorphic);
        // the triangular graph J(6,2) = L(K6) cannot be excluded
        assert!(matches!(is_automorphic_graph(&johnson(6, 2).unwrap()).unwrap(), AutomorphicVerdict::Inconclusive(_)));
        // C5 is L(C5)
        assert!(matches!(is_automorphic_graph(&cycle(5).unwrap()).unwrap(), AutomorphicVerdict::Inconclusive(_)));
    }

    #[test]
    fn search_cap() {
        let g = Graph::from_edge_list(65, &[]).unwrap();
        assert!(matches!(automorphisms(&g), Err(Error::Resource(_))));
    }
}
