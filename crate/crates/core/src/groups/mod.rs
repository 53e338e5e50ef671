//! Finite group substrate.
//!
//! Abstract groups (mixed-modulus abelian groups, generalized dihedral groups,
//! groups given by permutation generators) share the [`FiniteGroup`] trait,
//! which fixes an element enumeration used as the vertex numbering of Cayley
//! graphs. Permutation groups on those vertices live in [`perm`] and
//! [`permgroup`].

mod abelian;
mod fingerprint;
mod gdih;
pub mod perm;
pub mod permgroup;

pub use abelian::{abelian_automorphisms, AbelianAut, AbelianGroup, AUT_ENUMERATION_CAP};
pub use fingerprint::{catalog, fingerprint, identify, Fingerprint, FINGERPRINT_CAP};
pub use gdih::{GDihElement, GeneralizedDihedral};
pub use perm::Perm;
pub use permgroup::{
    centralizer, is_semiregular, normalizer, EnumeratedGroup, right_multiplication, right_regular, ElementSet, PermGroup,
};

use std::fmt::Debug;
use std::hash::Hash;

use thiserror::Error;

/// Default cap on the number of elements enumerated by a closure.
pub const CLOSURE_CAP: usize = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("elements belong to different groups: moduli {0:?} vs {1:?}")]
    MismatchedModuli(Vec<u64>, Vec<u64>),
    #[error("closure exceeded the cap of {cap} elements ({partial} enumerated so far)")]
    CapExceeded { cap: usize, partial: usize },
    #[error("group of order {order} exceeds the enumeration cap {cap}")]
    TooLarge { order: usize, cap: usize },
    #[error("invalid permutation: {0}")]
    InvalidPerm(String),
    #[error("permutation degrees differ: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("{0}")]
    Invalid(String),
}

/// A finite group with a fixed enumeration `0..order()` of its elements.
pub trait FiniteGroup {
    type Elem: Clone + Eq + Hash + Debug;

    fn order(&self) -> usize;
    fn identity(&self) -> Self::Elem;
    fn multiply(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn inverse(&self, x: &Self::Elem) -> Self::Elem;
    fn rank(&self, x: &Self::Elem) -> usize;
    fn unrank(&self, index: usize) -> Self::Elem;
    /// A generating set.
    fn generators(&self) -> Vec<Self::Elem>;

    fn elements(&self) -> Vec<Self::Elem> {
        (0..self.order()).map(|i| self.unrank(i)).collect()
    }

    fn element_order(&self, x: &Self::Elem) -> usize {
        let e = self.identity();
        let mut y = x.clone();
        let mut k = 1;
        while y != e {
            y = self.multiply(&y, x);
            k += 1;
        }
        k
    }

    /// Order of the subgroup generated by `gens`, by breadth-first closure.
    fn generated_order(&self, gens: &[Self::Elem]) -> usize {
        let mut seen = vec![false; self.order()];
        let e = self.identity();
        seen[self.rank(&e)] = true;
        let mut queue = vec![e];
        let mut count = 1;
        while let Some(x) = queue.pop() {
            for g in gens {
                let y = self.multiply(&x, g);
                let r = self.rank(&y);
                if !seen[r] {
                    seen[r] = true;
                    count += 1;
                    queue.push(y);
                }
            }
        }
        count
    }
}
