//! Permutation groups given by generators: a Schreier–Sims stabilizer
//! chain for exact orders and membership, plus orbit utilities.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::{Error, Graph, Permutation, Result};

/// Disjoint-set forest with path halving and union by size.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
    classes: usize,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), size: vec![1; n], classes: n }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns true when two distinct classes were merged.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            core::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        self.classes -= 1;
        true
    }

    pub fn classes(&self) -> usize {
        self.classes
    }

    pub fn class_size(&mut self, x: usize) -> usize {
        let r = self.find(x);
        self.size[r]
    }
}

struct Level {
    base: usize,
    gens: Vec<Permutation>,
    /// `transversal[x]` maps `base` to `x` when `x` lies in the basic orbit.
    transversal: Vec<Option<Permutation>>,
    orbit: Vec<usize>,
}

/// Base and strong generating set built by the incremental Schreier–Sims
/// algorithm. The order is the product of basic orbit lengths.
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabilizerChain {
    pub fn new(degree: usize, gens: &[Permutation]) -> StabilizerChain {
        let mut chain = StabilizerChain { degree, levels: Vec::new() };
        for g in gens {
            debug_assert_eq!(g.degree(), degree);
            chain.insert(0, g.clone());
        }
        chain
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> BigUint {
        self.levels.iter().fold(BigUint::from(1u32), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.sift(0, g.clone()).0.is_identity()
    }

    /// Strip `g` through levels `from..`; returns the residue and the level
    /// at which it stopped.
    fn sift(&self, from: usize, mut g: Permutation) -> (Permutation, usize) {
        for (i, level) in self.levels.iter().enumerate().skip(from) {
            let image = g.apply(level.base);
            match &level.transversal[image] {
                Some(u) => g = g.then(&u.inverse()),
                None => return (g, i),
            }
        }
        (g, self.levels.len())
    }

    fn insert(&mut self, from: usize, g: Permutation) {
        let (residue, at) = self.sift(from, g);
        if residue.is_identity() {
            return;
        }
        if at == self.levels.len() {
            let base = residue.first_moved().expect("non-identity residue moves a point");
            let mut transversal = vec![None; self.degree];
            transversal[base] = Some(Permutation::identity(self.degree));
            self.levels.push(Level { base, gens: Vec::new(), transversal, orbit: vec![base] });
        }
        // The residue fixes the base points of levels `from..at`, so it
        // belongs to each of those stabilizers as well.
        for level in (from..=at).rev() {
            self.add_generator(level, residue.clone());
        }
    }

    fn add_generator(&mut self, i: usize, g: Permutation) {
        let level = &mut self.levels[i];
        level.gens.push(g);
        let new_gen = level.gens.len() - 1;
        let old_len = level.orbit.len();
        let mut pending: Vec<(usize, usize)> = level.orbit.iter().map(|&b| (b, new_gen)).collect();

        // extend the orbit breadth-first with all generators
        let mut head = 0;
        let mut frontier: Vec<usize> = level.orbit.clone();
        while head < frontier.len() {
            let beta = frontier[head];
            head += 1;
            let is_new = head > old_len;
            let gen_range = if is_new { 0..level.gens.len() } else { new_gen..new_gen + 1 };
            for s in gen_range {
                let gamma = level.gens[s].apply(beta);
                if level.transversal[gamma].is_none() {
                    let u = level.transversal[beta].as_ref().unwrap().then(&level.gens[s]);
                    level.transversal[gamma] = Some(u);
                    level.orbit.push(gamma);
                    frontier.push(gamma);
                    for t in 0..level.gens.len() {
                        pending.push((gamma, t));
                    }
                }
            }
        }

        for (beta, s) in pending {
            let level = &self.levels[i];
            let u_beta = level.transversal[beta].as_ref().unwrap();
            let sg = &level.gens[s];
            let gamma = sg.apply(beta);
            let u_gamma = level.transversal[gamma].as_ref().unwrap();
            let schreier = u_beta.then(sg).then(&u_gamma.inverse());
            if !schreier.is_identity() {
                self.insert(i + 1, schreier);
            }
        }
    }
}

/// Generators for a group acting on the vertices of a graph, with the
/// exact group order.
pub struct GeneratorSet {
    degree: usize,
    gens: Vec<Permutation>,
    chain: StabilizerChain,
}

impl core::fmt::Debug for GeneratorSet {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("GeneratorSet")
            .field("degree", &self.degree)
            .field("generators", &self.gens.len())
            .field("order", &self.order())
            .finish()
    }
}

impl GeneratorSet {
    /// Every generator is checked against `g`; a generator that breaks
    /// adjacency is an integrity failure.
    pub fn for_graph(g: &Graph, gens: Vec<Permutation>) -> Result<GeneratorSet> {
        for (i, p) in gens.iter().enumerate() {
            if p.degree() != g.n_vertices() {
                return Err(Error::Input(format!(
                    "generator {i} has degree {} on a graph with {} vertices",
                    p.degree(),
                    g.n_vertices()
                )));
            }
            if !p.preserves(g) {
                return Err(Error::Integrity(format!("generator {i} is not an automorphism of {}", g.name())));
            }
        }
        Ok(Self::unchecked(g.n_vertices(), gens))
    }

    pub(crate) fn unchecked(degree: usize, gens: Vec<Permutation>) -> GeneratorSet {
        let gens: Vec<Permutation> = gens.into_iter().filter(|p| !p.is_identity()).collect();
        let chain = StabilizerChain::new(degree, &gens);
        GeneratorSet { degree, gens, chain }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.gens
    }

    pub fn order(&self) -> BigUint {
        self.chain.order()
    }

    pub fn chain(&self) -> &StabilizerChain {
        &self.chain
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.chain.contains(p)
    }

    /// Orbit of `v`, sorted.
    pub fn orbit(&self, v: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        let mut out = vec![v];
        seen[v] = true;
        let mut head = 0;
        while head < out.len() {
            let x = out[head];
            head += 1;
            for g in &self.gens {
                let y = g.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Vertex orbits as a union-find over points.
    pub fn point_orbits(&self) -> UnionFind {
        let mut uf = UnionFind::new(self.degree);
        for g in &self.gens {
            for v in 0..self.degree {
                uf.union(v, g.apply(v));
            }
        }
        uf
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle_perm(n: usize) -> Permutation {
        Permutation::from_images((0..n).map(|i| (i + 1) % n).collect()).unwrap()
    }

    fn transposition(n: usize, a: usize, b: usize) -> Permutation {
        let mut im: Vec<usize> = (0..n).collect();
        im.swap(a, b);
        Permutation::from_images(im).unwrap()
    }

    #[test]
    fn symmetric_group_orders() {
        for n in 2..8usize {
            let chain = StabilizerChain::new(n, &[cycle_perm(n), transposition(n, 0, 1)]);
            let fact: u64 = (1..=n as u64).product();
            assert_eq!(chain.order(), BigUint::from(fact), "Sym({n})");
        }
    }

    #[test]
    fn cyclic_and_dihedral() {
        let c = StabilizerChain::new(7, &[cycle_perm(7)]);
        assert_eq!(c.order(), BigUint::from(7u32));
        let refl = Permutation::from_images((0..7).map(|i| (7 - i) % 7).collect()).unwrap();
        let d = StabilizerChain::new(7, &[cycle_perm(7), refl.clone()]);
        assert_eq!(d.order(), BigUint::from(14u32));
        assert!(d.contains(&refl.then(&cycle_perm(7))));
        assert!(!d.contains(&transposition(7, 0, 1)));
    }

    #[test]
    fn alternating_group_via_three_cycles() {
        let n = 6;
        let gens: Vec<Permutation> = (2..n)
            .map(|k| {
                let mut im: Vec<usize> = (0..n).collect();
                im[0] = 1;
                im[1] = k;
                im[k] = 0;
                Permutation::from_images(im).unwrap()
            })
            .collect();
        let chain = StabilizerChain::new(n, &gens);
        assert_eq!(chain.order(), BigUint::from(360u32));
        assert!(!chain.contains(&transposition(n, 2, 3)));
    }

    #[test]
    fn trivial_group() {
        let chain = StabilizerChain::new(4, &[Permutation::identity(4)]);
        assert_eq!(chain.order(), BigUint::from(1u32));
        assert!(chain.base().is_empty());
    }

    #[test]
    fn union_find_counts() {
        let mut uf = UnionFind::new(5);
        assert!(uf.union(0, 1));
        assert!(!uf.union(1, 0));
        uf.union(3, 4);
        assert_eq!(uf.classes(), 3);
        assert_eq!(uf.class_size(4), 2);
    }
}
