//! Distance partitions, intersection arrays, strongly regular parameters
//! and antipodality.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::bitset;
use crate::{binomial, Error, Graph, Result, UNREACHABLE};

/// `{b₀, …, b_{D−1}; c₁, …, c_D}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionArray {
    pub b: Vec<u64>,
    pub c: Vec<u64>,
}

impl IntersectionArray {
    pub fn new(b: Vec<u64>, c: Vec<u64>) -> Result<Self> {
        if b.len() != c.len() || b.is_empty() {
            return Err(Error::Input(format!("array needs D b's and D c's, got {} and {}", b.len(), c.len())));
        }
        Ok(IntersectionArray { b, c })
    }

    pub fn diameter(&self) -> usize {
        self.b.len()
    }

    pub fn valency(&self) -> u64 {
        self.b[0]
    }

    /// Sphere sizes `k₀ = 1, k_{i+1} = k_i·b_i / c_{i+1}`; `None` if a
    /// division is inexact.
    pub fn sphere_sizes(&self) -> Option<Vec<u64>> {
        let mut k = vec![1u64];
        for i in 0..self.diameter() {
            let num = k[i] * self.b[i];
            if self.c[i] == 0 || !num.is_multiple_of(self.c[i]) {
                return None;
            }
            k.push(num / self.c[i]);
        }
        Some(k)
    }

    /// Number of vertices a graph with this array must have.
    pub fn order(&self) -> Option<u64> {
        self.sphere_sizes().map(|k| k.iter().sum())
    }
}

impl core::fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let join = |v: &[u64]| v.iter().map(|x| format!("{x}")).collect::<Vec<_>>().join(",");
        write!(f, "{{{};{}}}", join(&self.b), join(&self.c))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MismatchKind {
    /// Neighbours one step closer to the base differ.
    C,
    /// Neighbours one step further from the base differ.
    B,
}

impl MismatchKind {
    pub fn as_str(self) -> &'static str {
        match self {
            MismatchKind::C => "c-mismatch",
            MismatchKind::B => "b-mismatch",
        }
    }
}

/// Two (base, vertex) pairs at the same distance whose `c` or `b` counts
/// differ. `first` is where the reference count was taken, `second` the
/// first vertex in scan order that disagrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DrFailureWitness {
    pub first: (usize, usize),
    pub second: (usize, usize),
    pub distance: usize,
    pub kind: MismatchKind,
    pub values: (u64, u64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DistanceRegularity {
    Regular(IntersectionArray),
    NotRegular(DrFailureWitness),
}

impl DistanceRegularity {
    pub fn array(&self) -> Option<&IntersectionArray> {
        match self {
            DistanceRegularity::Regular(a) => Some(a),
            DistanceRegularity::NotRegular(_) => None,
        }
    }

    pub fn witness(&self) -> Option<&DrFailureWitness> {
        match self {
            DistanceRegularity::Regular(_) => None,
            DistanceRegularity::NotRegular(w) => Some(w),
        }
    }
}

/// `Γ₀(v), …, Γ_D(v)` where `D` is the eccentricity of `v`.
pub fn distance_partition(g: &Graph, v: usize) -> Result<Vec<Vec<usize>>> {
    let row = g.bfs_distances(v);
    let ecc = row
        .eccentricity()
        .ok_or_else(|| Error::Structure(format!("{} is disconnected", g.name())))?;
    let mut parts = vec![Vec::new(); ecc as usize + 1];
    for (u, &d) in row.dist.iter().enumerate() {
        parts[d as usize].push(u);
    }
    Ok(parts)
}

/// Count `c_i(u)` and `b_i(u)` for every base vertex and every `u`, in
/// ascending base then ascending `u` order; return the array if the counts
/// depend only on the distance, otherwise the first disagreement.
pub fn intersection_numbers(g: &Graph) -> Result<DistanceRegularity> {
    let n = g.n_vertices();
    if n == 0 || !g.is_connected() {
        return Err(Error::Structure(format!("{} is not connected", g.name())));
    }
    if g.regular_valency().is_none() {
        return Err(Error::Structure(format!("{} is not regular", g.name())));
    }
    let diameter = g.diameter()?;
    let stride = bitset::words_for(n);
    // reference (count, base, vertex) per distance
    let mut ref_c: Vec<Option<(u64, usize, usize)>> = vec![None; diameter + 1];
    let mut ref_b: Vec<Option<(u64, usize, usize)>> = vec![None; diameter + 1];
    let mut levels = vec![0u64; (diameter + 2) * stride];

    for base in 0..n {
        let row = g.bfs_distances(base);
        levels.fill(0);
        for (u, &d) in row.dist.iter().enumerate() {
            debug_assert_ne!(d, UNREACHABLE);
            bitset::set(&mut levels[d as usize * stride..(d as usize + 1) * stride], u);
        }
        for u in 0..n {
            let i = row.dist[u] as usize;
            let adj = g.row(u);
            let c = if i == 0 { 0 } else { bitset::count_and(adj, &levels[(i - 1) * stride..i * stride]) as u64 };
            let b = bitset::count_and(adj, &levels[(i + 1) * stride..(i + 2) * stride]) as u64;
            for (kind, value, slot) in [(MismatchKind::C, c, &mut ref_c[i]), (MismatchKind::B, b, &mut ref_b[i])] {
                match *slot {
                    None => *slot = Some((value, base, u)),
                    Some((r, rb, ru)) if r != value => {
                        return Ok(DistanceRegularity::NotRegular(DrFailureWitness {
                            first: (rb, ru),
                            second: (base, u),
                            distance: i,
                            kind,
                            values: (r, value),
                        }));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    let b: Vec<u64> = (0..diameter).map(|i| ref_b[i].unwrap().0).collect();
    let c: Vec<u64> = (1..=diameter).map(|i| ref_c[i].unwrap().0).collect();
    let array = IntersectionArray { b, c };
    if let Some(k) = array.sphere_sizes() {
        debug_assert_eq!(k.iter().sum::<u64>(), n as u64);
        for i in 0..diameter {
            debug_assert_eq!(k[i] * array.b[i], k[i + 1] * array.c[i]);
        }
    } else {
        return Err(Error::Integrity(format!("counted array {array} violates k_i b_i = k_(i+1) c_(i+1)")));
    }
    Ok(DistanceRegularity::Regular(array))
}

/// Closed-form intersection array of `Qₙ²`, `n ≥ 4`.
pub fn predicted_array_qn2(n: usize) -> Result<IntersectionArray> {
    if n < 4 {
        return Err(Error::Input(format!("closed form for the square needs n >= 4, got {n}")));
    }
    let n = n as u64;
    let d = n.div_ceil(2);
    let mut b = vec![binomial(n + 1, 2)];
    let mut c = Vec::new();
    for i in 1..d {
        b.push(binomial(n - 2 * i + 1, 2));
        c.push(binomial(2 * i, 2));
    }
    c.push(if n % 2 == 1 { binomial(n + 1, 2) } else { binomial(n, 2) });
    Ok(IntersectionArray { b, c })
}

/// `{n, n−1, …, 1; 1, 2, …, n}`.
pub fn predicted_array_qn(n: usize) -> Result<IntersectionArray> {
    if n < 1 {
        return Err(Error::Input("hypercube dimension must be positive".into()));
    }
    let n = n as u64;
    Ok(IntersectionArray { b: (0..n).map(|i| n - i).collect(), c: (1..=n).collect() })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SrgParams {
    pub n: u64,
    pub k: u64,
    pub lambda: u64,
    pub mu: u64,
}

impl SrgParams {
    /// `k(k − λ − 1) = (n − k − 1)μ`.
    pub fn satisfies_counting_identity(&self) -> bool {
        self.k > self.lambda
            && self.n > self.k
            && self.k * (self.k - self.lambda - 1) == (self.n - self.k - 1) * self.mu
    }

    /// Nonnegative, counting identity, and realisable by a graph of
    /// diameter two: `0 < k < n − 1`, `μ ≥ 1`.
    pub fn is_feasible(&self) -> bool {
        self.k > 0 && self.k + 1 < self.n && self.mu >= 1 && self.lambda < self.k && self.satisfies_counting_identity()
    }
}

impl core::fmt::Display for SrgParams {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "({},{},{},{})", self.n, self.k, self.lambda, self.mu)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SrgOutcome {
    Srg(SrgParams),
    /// Two pairs of the same adjacency type with different common
    /// neighbour counts.
    NotSrg { adjacent: bool, first: (usize, usize, u64), second: (usize, usize, u64) },
}

/// `(n, k, λ, μ)` from direct common-neighbour counts.
pub fn srg_params(g: &Graph) -> Result<SrgOutcome> {
    if !g.is_connected() {
        return Err(Error::Structure(format!("{} is disconnected", g.name())));
    }
    let k = g.regular_valency().ok_or_else(|| Error::Structure(format!("{} is not regular", g.name())))?;
    let d = g.diameter()?;
    if d != 2 {
        return Err(Error::Structure(format!("{} has diameter {d}, not 2", g.name())));
    }
    let n = g.n_vertices();
    let mut seen: [Option<(usize, usize, u64)>; 2] = [None, None];
    for u in 0..n {
        for v in u + 1..n {
            let adjacent = g.has_edge(u, v);
            let count = g.common_neighbors(u, v) as u64;
            let slot = &mut seen[adjacent as usize];
            match *slot {
                None => *slot = Some((u, v, count)),
                Some(first) if first.2 != count => {
                    return Ok(SrgOutcome::NotSrg { adjacent, first, second: (u, v, count) });
                }
                Some(_) => {}
            }
        }
    }
    let p = SrgParams { n: n as u64, k: k as u64, lambda: seen[1].map_or(0, |s| s.2), mu: seen[0].map_or(0, |s| s.2) };
    debug_assert!(p.satisfies_counting_identity());
    Ok(SrgOutcome::Srg(p))
}

/// Parameters of the complement: `(n, n−k−1, n−2−2k+μ, n−2k+λ)`.
pub fn srg_complement_params(p: SrgParams) -> Result<SrgParams> {
    if !p.is_feasible() {
        return Err(Error::Input(format!("{p} is not a feasible strongly regular parameter set")));
    }
    let (n, k, l, m) = (p.n as i64, p.k as i64, p.lambda as i64, p.mu as i64);
    let out = [n, n - k - 1, n - 2 - 2 * k + m, n - 2 * k + l];
    if out.iter().any(|&x| x < 0) {
        return Err(Error::Input(format!("complement of {p} has a negative parameter")));
    }
    let q = SrgParams { n: out[0] as u64, k: out[1] as u64, lambda: out[2] as u64, mu: out[3] as u64 };
    if !q.is_feasible() {
        return Err(Error::Input(format!("complement of {p} gives {q}, which is not feasible")));
    }
    Ok(q)
}

/// Antipodality verdict; the counterexample is `(u, v, w)` with
/// `d(u,v) = d(u,w) = D`, `v ≠ w` and `d(v,w) ≠ D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Antipodality {
    Antipodal,
    NotAntipodal { u: usize, v: usize, w: usize },
}

impl Antipodality {
    pub fn is_antipodal(&self) -> bool {
        matches!(self, Antipodality::Antipodal)
    }
}

/// Exhaustive check over all `u` and all pairs in `Γ_D(u)`, scanning `u`,
/// then `v`, then `w` ascending.
pub fn is_antipodal(g: &Graph) -> Result<Antipodality> {
    if !g.is_connected() {
        return Err(Error::Structure(format!("{} is disconnected", g.name())));
    }
    let dist = g.distance_matrix();
    let diameter = dist.max_finite();
    for u in 0..g.n_vertices() {
        let far: Vec<usize> = (0..g.n_vertices()).filter(|&x| dist.get(u, x) == diameter).collect();
        for (i, &v) in far.iter().enumerate() {
            for &w in &far[i + 1..] {
                if dist.get(v, w) != diameter {
                    return Ok(Antipodality::NotAntipodal { u, v, w });
                }
            }
        }
    }
    Ok(Antipodality::Antipodal)
}

/// Whether `(u, v, w)` violates antipodality in `g`.
pub fn violates_antipodality(g: &Graph, u: usize, v: usize, w: usize) -> Result<bool> {
    let d = g.diameter()? as u32;
    let du = g.bfs_distances(u);
    let dv = g.bfs_distances(v);
    Ok(v != w && du.dist[v] == d && du.dist[w] == d && dv.dist[w] != d)
}

/// Human-readable summary of a failure witness.
pub fn describe_witness(w: &DrFailureWitness) -> String {
    format!(
        "{} at distance {}: vertex {} from base {} has {}, vertex {} from base {} has {}",
        w.kind.as_str(),
        w.distance,
        w.first.1,
        w.first.0,
        w.values.0,
        w.second.1,
        w.second.0,
        w.values.1
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle, hypercube, hypercube_square, johnson, Word};

    fn array(s: &str) -> IntersectionArray {
        let (b, c) = s.trim_matches(|ch| ch == '{' || ch == '}').split_once(';').unwrap();
        let parse = |t: &str| t.split(',').map(|x| x.parse().unwrap()).collect();
        IntersectionArray::new(parse(b), parse(c)).unwrap()
    }

    #[test]
    fn display_roundtrip() {
        assert_eq!(array("{10,3;1,6}").to_string(), "{10,3;1,6}");
    }

    #[test]
    fn partitions_of_qn2() {
        let p5 = distance_partition(&hypercube_square(5).unwrap(), 0).unwrap();
        assert_eq!(p5.last().unwrap(), &vec![31]);
        let p6 = distance_partition(&hypercube_square(6).unwrap(), 0).unwrap();
        let w = Word::ones(6);
        let mut expect: Vec<usize> = (1..=6).map(|i| (w + Word::unit(6, i)).index()).collect();
        expect.push(w.index());
        expect.sort_unstable();
        assert_eq!(p6.last().unwrap(), &expect);
        let p4 = distance_partition(&hypercube_square(4).unwrap(), 0).unwrap();
        assert_eq!(p4[1].len(), 10);
    }

    #[test]
    fn partition_requires_connected() {
        let g = Graph::from_edge_list(3, &[(0, 1)]).unwrap();
        assert!(matches!(distance_partition(&g, 0), Err(Error::Structure(_))));
    }

    #[test]
    fn hypercube_arrays() {
        for n in 2..=8 {
            let got = intersection_numbers(&hypercube(n).unwrap()).unwrap();
            assert_eq!(got.array(), Some(&predicted_array_qn(n).unwrap()), "Q{n}");
        }
        let q8 = predicted_array_qn(8).unwrap();
        assert_eq!((q8.b[3], q8.c[2]), (5, 3));
        assert_eq!(predicted_array_qn(2).unwrap(), array("{2,1;1,2}"));
    }

    #[test]
    fn predicted_qn2_values() {
        assert_eq!(predicted_array_qn2(4).unwrap(), array("{10,3;1,6}"));
        assert_eq!(predicted_array_qn2(5).unwrap(), array("{15,6,1;1,6,15}"));
        assert_eq!(predicted_array_qn2(6).unwrap(), array("{21,10,3;1,6,15}"));
        assert!(predicted_array_qn2(3).is_err());
    }

    #[test]
    fn counted_qn2_arrays_match_closed_form() {
        for n in 4..=8 {
            let got = intersection_numbers(&hypercube_square(n).unwrap()).unwrap();
            let want = predicted_array_qn2(n).unwrap();
            assert_eq!(got.array(), Some(&want), "Q{n}^2");
            assert_eq!(want.order(), Some(1 << n));
        }
    }

    #[test]
    fn c7_square_witness() {
        let g = cycle(7).unwrap().square();
        let w = intersection_numbers(&g).unwrap().witness().cloned().unwrap();
        assert_eq!(w.values, (1, 2));
        assert_eq!(w.kind, MismatchKind::B);
        assert_eq!((w.first, w.second, w.distance), ((0, 1), (0, 2), 1));
    }

    #[test]
    fn c9_square_has_c_mismatch() {
        // from base 0, vertex 3 has two neighbours in Γ1, vertex 4 has one
        let g = cycle(9).unwrap().square();
        let row = g.bfs_distances(0);
        let level1: Vec<usize> = (0..9).filter(|&x| row.dist[x] == 1).collect();
        let c = |u: usize| level1.iter().filter(|&&x| g.has_edge(u, x)).count();
        assert_eq!((c(3), c(4)), (2, 1));
    }

    #[test]
    fn johnson_squares() {
        let j63 = intersection_numbers(&johnson(6, 3).unwrap().square()).unwrap();
        assert_eq!(j63.array(), Some(&array("{18,1;1,18}")));
        for n in 7..=9u64 {
            let w = intersection_numbers(&johnson(n as usize, 3).unwrap().square()).unwrap();
            let w = w.witness().cloned().expect("not distance-regular");
            assert_eq!(w.kind, MismatchKind::B);
            assert_eq!(w.values, (binomial(n - 4, 2), binomial(n - 4, 2) + binomial(n - 5, 2)));
        }
        // |v ∩ u| = 3 gives b_1 = 9 while |v ∩ w| = 2 gives b_1 = 13
        let w = intersection_numbers(&johnson(8, 4).unwrap().square()).unwrap();
        let w = w.witness().cloned().expect("not distance-regular");
        assert_eq!((w.kind, w.distance, w.values), (MismatchKind::B, 1, (9, 13)));
    }

    #[test]
    fn irregular_is_structure_error() {
        let p3 = crate::families::path(3);
        assert!(matches!(intersection_numbers(&p3), Err(Error::Structure(_))));
    }

    #[test]
    fn srg_values() {
        let p = |g: &Graph| match srg_params(g).unwrap() {
            SrgOutcome::Srg(p) => p,
            other => panic!("{other:?}"),
        };
        let q3 = p(&hypercube_square(3).unwrap());
        assert_eq!(q3, SrgParams { n: 8, k: 6, lambda: 4, mu: 6 });
        let q4 = p(&hypercube_square(4).unwrap());
        assert_eq!(q4, SrgParams { n: 16, k: 10, lambda: 6, mu: 6 });
        let clebsch = p(&hypercube_square(4).unwrap().complement());
        assert_eq!(clebsch, SrgParams { n: 16, k: 5, lambda: 0, mu: 2 });
        assert_eq!(srg_complement_params(q4).unwrap(), clebsch);
        assert_eq!(srg_complement_params(clebsch).unwrap(), q4);
    }

    #[test]
    fn cocktail_party_complement_is_not_srg() {
        // complement of Q3^2 is a perfect matching on 8 vertices
        let co = hypercube_square(3).unwrap().complement();
        assert!(matches!(srg_params(&co), Err(Error::Structure(_))));
        let q3 = SrgParams { n: 8, k: 6, lambda: 4, mu: 6 };
        assert!(matches!(srg_complement_params(q3), Err(Error::Input(_))));
    }

    #[test]
    fn srg_witness_on_c7_square() {
        // C7^2 has diameter 2 but is not strongly regular
        let g = cycle(7).unwrap().square();
        assert!(matches!(srg_params(&g).unwrap(), SrgOutcome::NotSrg { .. }));
    }

    #[test]
    fn srg_from_diameter_two_array() {
        let a = array("{10,3;1,6}");
        let from_array = SrgParams { n: 16, k: a.b[0], lambda: a.b[0] - a.b[1] - 1, mu: a.c[1] };
        assert_eq!(from_array, SrgParams { n: 16, k: 10, lambda: 6, mu: 6 });
    }

    #[test]
    fn antipodality() {
        for n in 2..=6 {
            assert!(is_antipodal(&hypercube(n).unwrap()).unwrap().is_antipodal());
        }
        assert!(is_antipodal(&hypercube_square(5).unwrap()).unwrap().is_antipodal());
        let q6 = hypercube_square(6).unwrap();
        assert!(!is_antipodal(&q6).unwrap().is_antipodal());
        let w = Word::ones(6);
        assert!(violates_antipodality(&q6, 0, w.index(), (w + Word::unit(6, 1)).index()).unwrap());
    }
}
