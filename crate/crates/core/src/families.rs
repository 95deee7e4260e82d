//! Constructors for the graph families under study.
//!
//! Labelling conventions, relied on by tests and reports:
//!
//! * Cayley graphs over Z₂ⁿ (hypercubes and their squares): vertex `x` is
//!   the word with value `x`; the unit vector `e_i` (1-based `i`) is bit
//!   `i - 1`.
//! * Johnson graphs: vertex `r` is the `r`-th `k`-subset of `{1..n}` in
//!   colex order.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use crate::{binomial, Error, Graph, Result};

/// Largest dimension accepted by the Z₂ⁿ constructors.
pub const MAX_DIMENSION: usize = 12;
/// Largest vertex count accepted by the Johnson constructor.
pub const MAX_JOHNSON_VERTICES: u64 = 4096;

/// An element of Z₂ⁿ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    n: u8,
    bits: u32,
}

impl Word {
    pub fn new(n: usize, bits: u32) -> Result<Word> {
        if n > MAX_DIMENSION || (bits as u64) >> n != 0 {
            return Err(Error::Input(format!("{bits:#b} is not a word of length {n}")));
        }
        Ok(Word { n: n as u8, bits })
    }

    pub fn zero(n: usize) -> Word {
        Word { n: n as u8, bits: 0 }
    }

    /// `e_i`, with `i` counted from 1.
    pub fn unit(n: usize, i: usize) -> Word {
        assert!((1..=n).contains(&i), "e_{i} outside dimension {n}");
        Word { n: n as u8, bits: 1 << (i - 1) }
    }

    /// The all-ones word.
    pub fn ones(n: usize) -> Word {
        Word { n: n as u8, bits: ((1u64 << n) - 1) as u32 }
    }

    pub fn dimension(self) -> usize {
        self.n as usize
    }

    pub fn bits(self) -> u32 {
        self.bits
    }

    pub fn index(self) -> usize {
        self.bits as usize
    }

    pub fn weight(self) -> u32 {
        self.bits.count_ones()
    }

    /// GF(2) inner product.
    pub fn dot(self, other: Word) -> u32 {
        (self.bits & other.bits).count_ones() & 1
    }
}

impl core::ops::Add for Word {
    type Output = Word;

    fn add(self, rhs: Word) -> Word {
        debug_assert_eq!(self.n, rhs.n);
        Word { n: self.n, bits: self.bits ^ rhs.bits }
    }
}

/// Connection set of a Cayley graph over Z₂ⁿ: nonzero words, sorted and
/// deduplicated. Every word is its own inverse, so closure under inverses
/// is automatic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectionSet {
    n: usize,
    members: Vec<Word>,
}

impl ConnectionSet {
    pub fn new(n: usize, members: impl IntoIterator<Item = Word>) -> Result<ConnectionSet> {
        if n > MAX_DIMENSION {
            return Err(Error::Resource(format!("dimension {n} exceeds {MAX_DIMENSION}")));
        }
        let mut members: Vec<Word> = members.into_iter().collect();
        for w in &members {
            if w.dimension() != n {
                return Err(Error::Input(format!("word of length {} in a set of length {n}", w.dimension())));
            }
            if w.bits == 0 {
                return Err(Error::Input("the zero word cannot be a connection".to_string()));
            }
        }
        members.sort_unstable();
        members.dedup();
        Ok(ConnectionSet { n, members })
    }

    /// All nonzero words of weight at most `k`.
    pub fn weight_at_most(n: usize, k: u32) -> Result<ConnectionSet> {
        if n > MAX_DIMENSION {
            return Err(Error::Resource(format!("dimension {n} exceeds {MAX_DIMENSION}")));
        }
        let members = (1u32..1 << n).filter(|b| b.count_ones() <= k).map(|b| Word { n: n as u8, bits: b });
        ConnectionSet::new(n, members)
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[Word] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// `k`-subsets of `{1..n}` in colex order. Elements are 1-based and each
/// subset is sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KSets {
    ground: usize,
    k: usize,
    members: Vec<Vec<usize>>,
}

impl KSets {
    pub fn new(ground: usize, k: usize) -> Result<KSets> {
        if k == 0 || k >= ground {
            return Err(Error::Resource(format!("Johnson parameters need 1 <= k < n, got n={ground}, k={k}")));
        }
        let count = binomial(ground as u64, k as u64);
        if count > MAX_JOHNSON_VERTICES {
            return Err(Error::Resource(format!("C({ground},{k}) = {count} exceeds {MAX_JOHNSON_VERTICES}")));
        }
        // colex successor: bump the lowest element that can move up
        let mut members = Vec::with_capacity(count as usize);
        let mut cur: Vec<usize> = (1..=k).collect();
        loop {
            members.push(cur.clone());
            let Some(i) = (0..k).find(|&i| cur[i] + 1 < cur.get(i + 1).copied().unwrap_or(ground + 1)) else {
                break;
            };
            cur[i] += 1;
            for (j, slot) in cur.iter_mut().enumerate().take(i) {
                *slot = j + 1;
            }
        }
        debug_assert_eq!(members.len() as u64, count);
        Ok(KSets { ground, k, members })
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn members(&self) -> &[Vec<usize>] {
        &self.members
    }

    /// Colex rank of a sorted 1-based subset: `Σ C(a_i - 1, i)`.
    pub fn rank(&self, subset: &[usize]) -> Option<usize> {
        if subset.len() != self.k || subset.windows(2).any(|w| w[0] >= w[1]) {
            return None;
        }
        if subset.first().is_some_and(|&a| a == 0) || subset.last().is_some_and(|&a| a > self.ground) {
            return None;
        }
        Some(subset.iter().enumerate().map(|(i, &a)| binomial(a as u64 - 1, i as u64 + 1) as usize).sum())
    }
}

fn intersection_size(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut c) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => {
                c += 1;
                i += 1;
                j += 1;
            }
        }
    }
    c
}

pub fn cayley_z2n(s: &ConnectionSet) -> Graph {
    let n = s.dimension();
    let mut mask = alloc::vec![false; 1 << n];
    for w in s.members() {
        mask[w.index()] = true;
    }
    Graph::from_fn(1 << n, format!("Cay(Z2^{n},{})", s.len()), |u, v| mask[u ^ v])
}

/// `Qₙ`, vertices labelled by word value.
pub fn hypercube(n: usize) -> Result<Graph> {
    if !(1..=MAX_DIMENSION).contains(&n) {
        return Err(Error::Resource(format!("hypercube dimension {n} outside 1..={MAX_DIMENSION}")));
    }
    Ok(cayley_z2n(&ConnectionSet::weight_at_most(n, 1)?).with_name(format!("Q{n}")))
}

/// `Qₙ²` as the Cayley graph on all nonzero words of weight at most two.
pub fn hypercube_square(n: usize) -> Result<Graph> {
    if !(2..=MAX_DIMENSION).contains(&n) {
        return Err(Error::Resource(format!("hypercube-square dimension {n} outside 2..={MAX_DIMENSION}")));
    }
    Ok(cayley_z2n(&ConnectionSet::weight_at_most(n, 2)?).with_name(format!("Q{n}^2")))
}

/// `J(n,k)`: `k`-subsets adjacent when they share `k − 1` elements.
/// `k > n/2` is accepted as is; `J(n,k)` and `J(n,n−k)` are isomorphic via
/// complementation but are not identified here.
pub fn johnson(n: usize, k: usize) -> Result<Graph> {
    let sets = KSets::new(n, k)?;
    let m = sets.members();
    Ok(Graph::from_fn(m.len(), format!("J({n},{k})"), |u, v| intersection_size(&m[u], &m[v]) + 1 == k))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Input(format!("cycle needs at least 3 vertices, got {n}")));
    }
    Ok(Graph::from_fn(n, format!("C{n}"), |u, v| v - u == 1 || (u == 0 && v == n - 1)))
}

/// `CP(m)`: vertices `2i, 2i+1` form the `i`-th missing matching edge.
pub fn cocktail_party(m: usize) -> Result<Graph> {
    if m < 2 {
        return Err(Error::Input(format!("cocktail party needs m >= 2, got {m}")));
    }
    Ok(Graph::from_fn(2 * m, format!("CP({m})"), |u, v| u / 2 != v / 2))
}

pub fn complete(n: usize) -> Graph {
    Graph::from_fn(n, format!("K{n}"), |_, _| true)
}

/// Path on `n` vertices `0 - 1 - … - (n−1)`.
pub fn path(n: usize) -> Graph {
    Graph::from_fn(n, format!("P{n}"), |u, v| v - u == 1)
}

/// `K_{1,m}` with centre 0.
pub fn star(m: usize) -> Graph {
    Graph::from_fn(m + 1, format!("K1,{m}"), |u, _| u == 0)
}

/// The words of weight one and two in Z₂ⁿ, ascending by value. These are
/// the neighbours of `0` in `Qₙ²`.
pub fn sphere_words(n: usize) -> Vec<Word> {
    (1u32..1 << n).filter(|b| b.count_ones() <= 2).map(|b| Word { n: n as u8, bits: b }).collect()
}

/// The bijection from the weight-≤2 sphere of `Qₙ²` onto the 2-subsets of
/// `{1..n+1}`: `e_i ↦ {i, n+1}` and `e_i + e_j ↦ {i, j}`.
#[derive(Clone, Debug)]
pub struct SphereJohnsonMap {
    n: usize,
    pairs: Vec<(Word, [usize; 2])>,
}

impl SphereJohnsonMap {
    pub fn new(n: usize) -> Result<SphereJohnsonMap> {
        if !(2..=MAX_DIMENSION).contains(&n) {
            return Err(Error::Input(format!("sphere map needs 2 <= n <= {MAX_DIMENSION}, got {n}")));
        }
        let pairs = sphere_words(n)
            .into_iter()
            .map(|w| {
                let mut ones = (0..n).filter(|&b| w.bits >> b & 1 == 1).map(|b| b + 1);
                let i = ones.next().unwrap();
                let image = match ones.next() {
                    None => [i, n + 1],
                    Some(j) => [i, j],
                };
                (w, image)
            })
            .collect();
        Ok(SphereJohnsonMap { n, pairs })
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn pairs(&self) -> &[(Word, [usize; 2])] {
        &self.pairs
    }

    pub fn image(&self, w: Word) -> Option<[usize; 2]> {
        self.pairs.iter().find(|(x, _)| *x == w).map(|&(_, p)| p)
    }

    /// The map as vertex ids: position `t` of the sphere (ascending word
    /// value, as returned by [`sphere_words`]) goes to the colex rank of its
    /// image in `J(n+1, 2)`.
    pub fn vertex_map(&self) -> Vec<usize> {
        let sets = KSets::new(self.n + 1, 2).expect("J(n+1,2) within caps");
        self.pairs.iter().map(|(_, p)| sets.rank(p).expect("image is a 2-subset")).collect()
    }
}

/// Recover the connection set of a graph labelled as a Cayley graph over
/// Z₂ⁿ, i.e. one whose adjacency is invariant under every translation.
pub fn as_cayley_z2n(g: &Graph) -> Option<ConnectionSet> {
    let order = g.n_vertices();
    if order < 2 || !order.is_power_of_two() {
        return None;
    }
    let n = order.trailing_zeros() as usize;
    if n > MAX_DIMENSION {
        return None;
    }
    let s: Vec<usize> = g.neighbors(0).collect();
    for x in 0..order {
        if g.degree(x) != s.len() || s.iter().any(|&t| !g.has_edge(x, x ^ t)) {
            return None;
        }
    }
    ConnectionSet::new(n, s.into_iter().map(|t| Word { n: n as u8, bits: t as u32 })).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso;

    #[test]
    fn word_basics() {
        let e1 = Word::unit(4, 1);
        assert_eq!(e1.bits(), 1);
        assert_eq!((e1 + Word::unit(4, 3)).weight(), 2);
        assert_eq!(Word::ones(4).bits(), 15);
        assert!(Word::new(3, 8).is_err());
        assert_eq!(Word::ones(4).dot(Word::new(4, 0b0110).unwrap()), 0);
    }

    #[test]
    fn connection_set_rejects_zero() {
        assert!(matches!(ConnectionSet::new(3, [Word::zero(3)]), Err(Error::Input(_))));
        let empty = ConnectionSet::new(3, []).unwrap();
        assert_eq!(cayley_z2n(&empty).n_edges(), 0);
    }

    #[test]
    fn hypercube_small() {
        let q1 = hypercube(1).unwrap();
        assert_eq!((q1.n_vertices(), q1.n_edges()), (2, 1));
        let q4 = hypercube(4).unwrap();
        assert_eq!(q4.regular_valency(), Some(4));
        assert!(q4.is_bipartite());
        assert_eq!(q4.diameter().unwrap(), 4);
        assert!(matches!(hypercube(0), Err(Error::Resource(_))));
        assert!(matches!(hypercube(13), Err(Error::Resource(_))));
    }

    #[test]
    fn hypercube_distance_is_hamming() {
        let q4 = hypercube(4).unwrap();
        let row = q4.bfs_distances(0);
        for x in 0..16u32 {
            assert_eq!(row.dist[x as usize], x.count_ones());
        }
    }

    #[test]
    fn hypercube_square_small_cases() {
        assert!(hypercube_square(2).unwrap().is_complete());
        let q4 = hypercube_square(4).unwrap();
        assert_eq!((q4.n_vertices(), q4.regular_valency()), (16, Some(10)));
        assert!(matches!(hypercube_square(1), Err(Error::Resource(_))));
    }

    #[test]
    fn hypercube_square_valency_and_distance() {
        for n in 2..=8 {
            let g = hypercube_square(n).unwrap();
            assert_eq!(g.regular_valency(), Some(n + n * (n - 1) / 2));
            let d = g.distance_matrix();
            for x in 0..1usize << n {
                for y in 0..1usize << n {
                    assert_eq!(d.get(x, y), ((x ^ y).count_ones()).div_ceil(2));
                }
            }
        }
    }

    #[test]
    fn square_of_hypercube_is_labelled_equal() {
        for n in 2..=8 {
            assert_eq!(hypercube(n).unwrap().square().with_name("x"), hypercube_square(n).unwrap().with_name("x"));
        }
    }

    #[test]
    fn cayley_translations_are_automorphisms() {
        for n in 2..=6 {
            let g = hypercube_square(n).unwrap();
            for v in 0..1usize << n {
                assert!(g.edges().all(|(a, b)| g.has_edge(a ^ v, b ^ v)));
            }
        }
    }

    #[test]
    fn johnson_basics() {
        assert!(johnson(4, 1).unwrap().is_complete());
        let j63 = johnson(6, 3).unwrap();
        assert_eq!((j63.n_vertices(), j63.regular_valency()), (20, Some(9)));
        assert_eq!(j63.diameter().unwrap(), 3);
        assert!(matches!(johnson(4, 4), Err(Error::Resource(_))));
        assert!(matches!(johnson(4, 0), Err(Error::Resource(_))));
        assert!(matches!(johnson(20, 10), Err(Error::Resource(_))));
    }

    #[test]
    fn johnson_distance_is_k_minus_intersection() {
        let sets = KSets::new(7, 3).unwrap();
        let g = johnson(7, 3).unwrap();
        let d = g.distance_matrix();
        for (a, sa) in sets.members().iter().enumerate() {
            for (b, sb) in sets.members().iter().enumerate() {
                assert_eq!(d.get(a, b) as usize, 3 - intersection_size(sa, sb));
            }
        }
    }

    #[test]
    fn colex_order_and_rank() {
        let sets = KSets::new(5, 3).unwrap();
        assert_eq!(sets.members()[0], vec![1, 2, 3]);
        assert_eq!(sets.members()[1], vec![1, 2, 4]);
        assert_eq!(sets.members()[3], vec![2, 3, 4]);
        assert_eq!(sets.members()[4], vec![1, 2, 5]);
        for (r, s) in sets.members().iter().enumerate() {
            assert_eq!(sets.rank(s), Some(r));
        }
        assert_eq!(sets.rank(&[1, 1, 2]), None);
    }

    #[test]
    fn johnson_complement_isomorphism() {
        for n in 3..=8 {
            for k in 1..n {
                let a = johnson(n, k).unwrap();
                let b = johnson(n, n - k).unwrap();
                if a.n_vertices() <= iso::SEARCH_VERTEX_LIMIT {
                    assert!(iso::is_isomorphic(&a, &b).unwrap().is_some(), "J({n},{k})");
                }
            }
        }
    }

    #[test]
    fn cycles_and_cocktail_party() {
        let c4 = cycle(4).unwrap();
        assert!(c4.is_bipartite() && c4.regular_valency() == Some(2));
        let cp = cocktail_party(4).unwrap();
        assert_eq!((cp.n_vertices(), cp.regular_valency()), (8, Some(6)));
        assert_eq!(cycle(7).unwrap().square().regular_valency(), Some(4));
        assert!(cycle(2).is_err() && cocktail_party(1).is_err());
    }

    #[test]
    fn sphere_map_values() {
        let map = SphereJohnsonMap::new(5).unwrap();
        assert_eq!(map.image(Word::unit(5, 1)), Some([1, 6]));
        assert_eq!(map.image(Word::unit(5, 1) + Word::unit(5, 2)), Some([1, 2]));
        assert_eq!(map.pairs().len(), 15);
    }

    #[test]
    fn sphere_map_preserves_all_pairs_n5() {
        let n = 5;
        let q = hypercube_square(n).unwrap();
        let t: Vec<usize> = sphere_words(n).iter().map(|w| w.index()).collect();
        let (induced, _) = q.induced_subgraph(&t).unwrap();
        let j = johnson(n + 1, 2).unwrap();
        let map = SphereJohnsonMap::new(n).unwrap().vertex_map();
        // every pair, adjacent or not
        for a in 0..t.len() {
            for b in a + 1..t.len() {
                assert_eq!(induced.has_edge(a, b), j.has_edge(map[a], map[b]));
            }
        }
        assert!(iso::is_isomorphism(&induced, &j, &map));
    }

    #[test]
    fn unit_vectors_form_a_clique() {
        let n = 6;
        let q = hypercube_square(n).unwrap();
        let units: Vec<usize> = (1..=n).map(|i| Word::unit(n, i).index()).collect();
        let (g, _) = q.induced_subgraph(&units).unwrap();
        assert!(g.is_complete());
    }

    #[test]
    fn cayley_detection() {
        let q = hypercube_square(4).unwrap();
        assert_eq!(as_cayley_z2n(&q), Some(ConnectionSet::weight_at_most(4, 2).unwrap()));
        assert_eq!(as_cayley_z2n(&cycle(8).unwrap()), None);
    }
}
