//! Cayley and bi-Cayley constructors and the catalogue of named families.

mod arcgroup;
mod families;
pub mod manifest;

pub use arcgroup::{canonical_arc_group, canonical_cover_subgroup, ArcGroup, CoverSubgroup};
pub use families::{family, family_with_roots, DihAutomorphism, Family, FamilyInstance, Params, SourceGroup};
pub use manifest::{Expected, Manifest};

use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::groups::{AbelianGroup, FiniteGroup, GroupError, CLOSURE_CAP};
use crate::modarith::ModArithError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error("invalid connection set: {0}")]
    InvalidConnectionSet(String),
    #[error("{family} requires {condition}")]
    SideCondition { family: String, condition: String },
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("{0} is not applicable to this family")]
    NotApplicable(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("group of order {order} exceeds the cap {cap}")]
    TooLarge { order: usize, cap: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Arith(#[from] ModArithError),
    #[error("manifest: {0}")]
    Manifest(String),
}

/// `Cay(G, S)`: vertices are the ranks of the elements of `G`, edges `{g, s g}`.
pub fn cayley<G: FiniteGroup>(group: &G, s: &[G::Elem]) -> Result<Graph, ConstructError> {
    if group.order() > CLOSURE_CAP {
        return Err(ConstructError::TooLarge { order: group.order(), cap: CLOSURE_CAP });
    }
    let id = group.identity();
    if s.contains(&id) {
        return Err(ConstructError::InvalidConnectionSet("contains the identity".into()));
    }
    let ranks: Vec<usize> = s.iter().map(|x| group.rank(x)).collect();
    let mut sorted = ranks.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != s.len() {
        return Err(ConstructError::InvalidConnectionSet("repeated element".into()));
    }
    if let Some(x) = s.iter().find(|x| !ranks.contains(&group.rank(&group.inverse(x)))) {
        return Err(ConstructError::InvalidConnectionSet(format!("not closed under inverses: {x:?}")));
    }
    let mut edges = Vec::with_capacity(group.order() * s.len() / 2);
    for i in 0..group.order() {
        let g = group.unrank(i);
        for x in s {
            let j = group.rank(&group.multiply(x, &g));
            if i < j {
                edges.push((i, j));
            }
        }
    }
    Ok(Graph::from_edges(group.order(), edges)?)
}

/// True iff `s` generates the whole group.
pub fn generates<G: FiniteGroup>(group: &G, s: &[G::Elem]) -> bool {
    group.generated_order(s) == group.order()
}

/// `BiCay(H, R, L, S)` on `2|H|` vertices: `h_0` is `rank(h)`, `h_1` is `|H| + rank(h)`.
pub fn bicayley(
    h: &AbelianGroup,
    r: &[Vec<u64>],
    l: &[Vec<u64>],
    s: &[Vec<u64>],
) -> Result<Graph, ConstructError> {
    let n = h.order();
    if 2 * n > CLOSURE_CAP {
        return Err(ConstructError::TooLarge { order: n, cap: CLOSURE_CAP });
    }
    for (name, set) in [("R", r), ("L", l), ("S", s)] {
        if let Some(x) = set.iter().find(|x| !h.contains(x)) {
            return Err(ConstructError::InvalidConnectionSet(format!("{name} element {x:?} not in H")));
        }
    }
    let zero = h.zero();
    for (name, set) in [("R", r), ("L", l)] {
        if set.contains(&zero) {
            return Err(ConstructError::InvalidConnectionSet(format!("{name} contains the identity")));
        }
        if let Some(x) = set.iter().find(|x| !set.contains(&h.neg(x))) {
            return Err(ConstructError::InvalidConnectionSet(format!(
                "{name} not closed under inverses: {x:?}"
            )));
        }
    }
    let mut edges = Vec::new();
    for i in 0..n {
        let x = h.unrank(i);
        for y in r {
            edges.push((i, h.rank(&h.add(y, &x))));
        }
        for y in l {
            edges.push((n + i, n + h.rank(&h.add(y, &x))));
        }
        for y in s {
            edges.push((i, n + h.rank(&h.add(y, &x))));
        }
    }
    Ok(Graph::from_edges(2 * n, edges)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::GeneralizedDihedral;

    #[test]
    fn small_cayley_graphs() {
        let z6 = AbelianGroup::cyclic(6);
        let g = cayley(&z6, &[vec![1], vec![5]]).unwrap();
        assert_eq!(g, Graph::cycle(6));

        let d5 = GeneralizedDihedral::dihedral(5);
        let s: Vec<_> = (0..5).map(|k| d5.times_h(&[k])).collect();
        let g = cayley(&d5, &s).unwrap();
        assert_eq!(g.regular_valency(), Some(5));
        assert_eq!(g.edge_count(), 25);
        assert!(g.is_bipartite().is_some());

        let d12 = GeneralizedDihedral::dihedral(12);
        let s: Vec<_> = [0, 1, 2, 4, 9].iter().map(|&k| d12.h_times(&[k])).collect();
        let g = cayley(&d12, &s).unwrap();
        assert_eq!(g.vertex_count(), 24);
        assert_eq!(g.regular_valency(), Some(5));
    }

    #[test]
    fn invalid_connection_sets() {
        let z6 = AbelianGroup::cyclic(6);
        assert!(cayley(&z6, &[vec![0]]).is_err());
        assert!(cayley(&z6, &[vec![1]]).is_err());
        assert!(cayley(&z6, &[vec![1], vec![5], vec![1]]).is_err());
        assert!(!generates(&z6, &[vec![2], vec![4]]));
        assert!(bicayley(&z6, &[vec![0]], &[], &[]).is_err());
        assert!(bicayley(&z6, &[], &[vec![1]], &[]).is_err());
    }

    #[test]
    fn small_bicayley_graphs() {
        let z5 = AbelianGroup::cyclic(5);
        let all: Vec<_> = (0..5).map(|k| vec![k]).collect();
        let g = bicayley(&z5, &[], &[], &all).unwrap();
        assert_eq!(g, Graph::complete_bipartite(5, 5));

        let z6 = AbelianGroup::cyclic(6);
        let g = bicayley(&z6, &[], &[], &[vec![0], vec![1]]).unwrap();
        assert_eq!(g.regular_valency(), Some(2));
        assert!(g.is_connected());
        assert_eq!(g.girth().unwrap(), 12);
        let colour = g.is_bipartite().unwrap();
        assert!(colour[..6].iter().all(|&c| c == 0) && colour[6..].iter().all(|&c| c == 1));
    }
}
