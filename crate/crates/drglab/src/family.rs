//! Named graph families as selected on the command line.

use std::path::Path;

use drglab_core::families;
use drglab_core::Graph;

use crate::{edgelist, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum FamilyName {
    /// Hypercube Qₙ
    Qn,
    /// Square of the hypercube
    Qn2,
    /// Johnson graph J(n,k)
    Johnson,
    /// Cycle Cₙ
    Cycle,
    /// Cocktail-party graph CP(n)
    Cp,
    /// Square of the graph read from --in
    SquareOf,
}

/// Build a family member. `square-of` reads its base graph from `input`.
pub fn build(name: FamilyName, n: Option<usize>, k: Option<usize>, input: Option<&Path>) -> Result<Graph> {
    let need_n = || n.ok_or_else(|| Error::Usage("this family needs --n".into()));
    Ok(match name {
        FamilyName::Qn => families::hypercube(need_n()?)?,
        FamilyName::Qn2 => families::hypercube_square(need_n()?)?,
        FamilyName::Johnson => {
            let k = k.ok_or_else(|| Error::Usage("johnson needs --k".into()))?;
            families::johnson(need_n()?, k)?
        }
        FamilyName::Cycle => families::cycle(need_n()?)?,
        FamilyName::Cp => families::cocktail_party(need_n()?)?,
        FamilyName::SquareOf => {
            let path = input.ok_or_else(|| Error::Usage("square-of needs --in".into()))?;
            edgelist::read(path)?.square()
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_and_flags() {
        assert_eq!(build(FamilyName::Qn2, Some(4), None, None).unwrap().n_edges(), 80);
        assert_eq!(build(FamilyName::Johnson, Some(6), Some(3), None).unwrap().n_vertices(), 20);
        assert_eq!(build(FamilyName::Cp, Some(4), None, None).unwrap().regular_valency(), Some(6));
        assert!(matches!(build(FamilyName::Johnson, Some(6), None, None), Err(Error::Usage(_))));
        assert!(matches!(build(FamilyName::Qn, None, None, None), Err(Error::Usage(_))));
        assert!(matches!(build(FamilyName::Qn, Some(40), None, None), Err(Error::Core(drglab_core::Error::Resource(_)))));
    }
}
