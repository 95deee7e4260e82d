//! Permutations of `0..n` stored as image vectors.

use alloc::format;
use alloc::vec::Vec;

use crate::{Error, Graph, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl core::fmt::Debug for Permutation {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "Permutation{:?}", self.images)
    }
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// `images[v]` is the image of `v`; must be a bijection.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = alloc::vec![false; n];
        for (v, &x) in images.iter().enumerate() {
            if x >= n || seen[x] {
                return Err(Error::Input(format!("image {x} of {v} breaks bijectivity on 0..{n}")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.images[v]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self` first, then `other`: `v ↦ other(self(v))`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation { images: self.images.iter().map(|&x| other.images[x]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = alloc::vec![0; self.degree()];
        for (v, &x) in self.images.iter().enumerate() {
            inv[x] = v;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(v, &x)| v == x)
    }

    pub fn first_moved(&self) -> Option<usize> {
        self.images.iter().enumerate().find(|&(v, &x)| v != x).map(|(v, _)| v)
    }

    pub fn fixed_points(&self) -> usize {
        self.images.iter().enumerate().filter(|&(v, &x)| v == x).count()
    }

    /// True iff the permutation maps edges to edges. Since it is a bijection
    /// on a finite vertex set, this makes it an automorphism.
    pub fn preserves(&self, g: &Graph) -> bool {
        self.degree() == g.n_vertices() && g.edges().all(|(u, v)| g.has_edge(self.apply(u), self.apply(v)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_order() {
        let a = Permutation::from_images(vec![1, 2, 0]).unwrap();
        let b = Permutation::from_images(vec![0, 2, 1]).unwrap();
        // a then b: 0 -> 1 -> 2
        assert_eq!(a.then(&b).apply(0), 2);
        assert!(a.then(&a.inverse()).is_identity());
        assert_eq!(a.first_moved(), Some(0));
        assert_eq!(b.fixed_points(), 1);
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(Permutation::from_images(vec![0, 0]).is_err());
        assert!(Permutation::from_images(vec![2, 0]).is_err());
    }
}
