//! Quotients by semiregular groups and regular-cover verification.

use std::collections::HashSet;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::groups::{fingerprint, identify, is_semiregular, GroupError, Perm, PermGroup};
use crate::symmetry::{arc_orbits, isomorphism_report, AutResult, SymmetryError, DEFAULT_NODE_BUDGET};

/// `Aut` is enumerated for the fibre-preserving group only when
/// `|Aut| * |V|` stays below this.
pub const FIBRE_ENUMERATION_CAP: u128 = 50_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoverError {
    #[error("generator {index} of the group is not an automorphism")]
    NotAutomorphism { index: usize },
    #[error("group acts on {got} points, graph has {expected} vertices")]
    Degree { expected: usize, got: usize },
    #[error("automorphism group of order {order} on {vertices} vertices is too large to enumerate; supply an arc-transitive subgroup normalizing the kernel")]
    EnumerationCap { order: u128, vertices: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Symmetry(#[from] SymmetryError),
}

/// Orbits of `group` (least element first, ordered by least element), the
/// projection `vertex -> orbit index`, and the quotient graph.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub graph: Graph,
    pub projection: Vec<usize>,
    pub orbits: Vec<Vec<usize>>,
}

fn check_group(g: &Graph, group: &PermGroup) -> Result<(), CoverError> {
    if group.degree() != g.vertex_count() {
        return Err(CoverError::Degree { expected: g.vertex_count(), got: group.degree() });
    }
    if let Some(index) = group.generators().iter().position(|p| !g.is_automorphism(p)) {
        return Err(CoverError::NotAutomorphism { index });
    }
    Ok(())
}

pub fn quotient(g: &Graph, group: &PermGroup) -> Result<Quotient, CoverError> {
    check_group(g, group)?;
    let orbits = group.orbits();
    let mut projection = vec![0; g.vertex_count()];
    for (i, orbit) in orbits.iter().enumerate() {
        for &v in orbit {
            projection[v] = i;
        }
    }
    let edges: Vec<(usize, usize)> = g
        .edges()
        .map(|(u, v)| (projection[u], projection[v]))
        .filter(|(a, b)| a != b)
        .collect();
    Ok(Quotient { graph: Graph::from_edges(orbits.len(), edges)?, projection, orbits })
}

#[derive(Debug, Clone, Serialize)]
pub struct CoverReport {
    pub kernel_order: usize,
    pub semiregular: bool,
    pub orbit_count: usize,
    pub valency_preserved: bool,
    pub quotient_order: usize,
    pub iso_to_base: bool,
    pub fibre_group_order: Option<u128>,
    pub fibre_arc_transitive: Option<bool>,
    /// `enumerated`, `supplied`, or absent for a plain regular-cover check.
    pub fibre_group_source: Option<String>,
    pub checks_passed: bool,
    #[serde(skip)]
    pub quotient: Graph,
    #[serde(skip)]
    pub quotient_iso: Option<Perm>,
}

/// Checks that `cover` is a regular `K`-cover of `base`: `K` semiregular,
/// valency preserved, at least three orbits, quotient isomorphic to `base`.
pub fn verify_regular_cover(cover: &Graph, k: &PermGroup, base: &Graph) -> Result<CoverReport, CoverError> {
    let q = quotient(cover, k)?;
    let semiregular = is_semiregular(k)?;
    let kernel_order = k.order()?;
    let valency_preserved = match (cover.regular_valency(), q.graph.regular_valency()) {
        (Some(a), Some(b)) => a == b,
        _ => false,
    };
    let orbit_count = q.orbits.len();
    let iso = isomorphism_report(&q.graph, base, DEFAULT_NODE_BUDGET)?;
    let checks_passed =
        semiregular && valency_preserved && orbit_count >= 3 && orbit_count == base.vertex_count() && iso.isomorphic;
    Ok(CoverReport {
        kernel_order,
        semiregular,
        orbit_count,
        valency_preserved,
        quotient_order: orbit_count,
        iso_to_base: iso.isomorphic,
        fibre_group_order: None,
        fibre_arc_transitive: None,
        fibre_group_source: None,
        checks_passed,
        quotient: q.graph,
        quotient_iso: iso.map,
    })
}

/// Where the fibre-preserving group comes from.
pub enum FibreGroup<'a> {
    /// Enumerate `Aut(cover)` and take the normalizer of `K`.
    Enumerate(&'a AutResult),
    /// An arc-transitive group known to normalize `K`, with its order if known.
    Supplied { group: &'a PermGroup, order: Option<u128> },
}

/// [`verify_regular_cover`] plus an arc-transitive group normalizing `K`.
pub fn verify_symmetric_cover(
    cover: &Graph,
    k: &PermGroup,
    base: &Graph,
    fibre: FibreGroup,
) -> Result<CoverReport, CoverError> {
    let mut report = verify_regular_cover(cover, k, base)?;
    let (gens, order, source) = match fibre {
        FibreGroup::Enumerate(aut) => {
            let n = cover.vertex_count();
            if aut.order.saturating_mul(n as u128) > FIBRE_ENUMERATION_CAP {
                return Err(CoverError::EnumerationCap { order: aut.order, vertices: n });
            }
            let a = PermGroup::new(n, aut.generators.clone())?;
            let kset = k.closure()?;
            let normalizer: Vec<Perm> = a
                .close(aut.order as usize)?
                .iter()
                .filter(|g| k.generators().iter().all(|x| kset.contains(&x.conjugate_by(g))))
                .cloned()
                .collect();
            let order = normalizer.len() as u128;
            let gens = PermGroup::from_elements(n, normalizer)?.generators().to_vec();
            (gens, Some(order), "enumerated")
        }
        FibreGroup::Supplied { group, order } => {
            check_group(cover, group)?;
            if !group.normalizes(k)? {
                report.checks_passed = false;
            }
            (group.generators().to_vec(), order, "supplied")
        }
    };
    let arc_transitive = cover.edge_count() > 0 && arc_orbits(cover, &gens) == 1;
    report.fibre_group_order = order;
    report.fibre_arc_transitive = Some(arc_transitive);
    report.fibre_group_source = Some(source.to_string());
    report.checks_passed &= arc_transitive;
    Ok(report)
}

/// A semiregular subgroup `K` of `Aut` found by [`cover_kernels`].
#[derive(Debug, Clone)]
pub struct CoverKernel {
    pub group: PermGroup,
    /// Catalogue label (`D2`, `D5`, `Q8`, `Z8`, ...), if any.
    pub label: Option<&'static str>,
    /// `|N_Aut(K)|`, the fibre-preserving group of the cover.
    pub normalizer_order: usize,
    pub normalizer_arc_transitive: bool,
    pub normal_in_aut: bool,
}

impl CoverKernel {
    /// `D_n` of order `2n` for some `n >= 2`.
    pub fn is_dihedral(&self) -> bool {
        self.label.is_some_and(|l| l.starts_with('D'))
    }
}

/// All semiregular subgroups of `Aut` of the given order that are generated
/// by at least two elements or one, each with its normalizer in `Aut`.
/// Every dihedral group and `Q8` is 2-generated. `Aut` must be enumerable.
pub fn cover_kernels(g: &Graph, aut: &AutResult, order: usize) -> Result<Vec<CoverKernel>, CoverError> {
    let n = g.vertex_count();
    if order < 2 || !n.is_multiple_of(order) {
        return Ok(Vec::new());
    }
    if aut.order.saturating_mul(n as u128) > FIBRE_ENUMERATION_CAP {
        return Err(CoverError::EnumerationCap { order: aut.order, vertices: n });
    }
    let a = PermGroup::new(n, aut.generators.clone())?;
    let elements = a.close(aut.order as usize)?;
    // elements of a semiregular group have all non-trivial powers fixed-point-free
    let candidates: Vec<&Perm> = elements
        .iter()
        .filter(|p| {
            let k = p.order();
            !p.is_identity() && (order as u64).is_multiple_of(k) && (1..k).all(|i| p.pow(i).fixed_points() == 0)
        })
        .collect();
    let mut seen: HashSet<Vec<Vec<usize>>> = HashSet::new();
    let mut found: Vec<(CoverKernel, HashSet<Perm>)> = Vec::new();
    for (i, x) in candidates.iter().enumerate() {
        for y in &candidates[i..] {
            if found.iter().any(|(_, set)| set.contains(*x) && set.contains(*y)) {
                continue;
            }
            let sub = PermGroup::new(n, vec![(*x).clone(), (*y).clone()])?;
            let set = match sub.close(order) {
                Ok(set) if set.len() == order => set,
                Ok(_) | Err(GroupError::CapExceeded { .. }) => continue,
                Err(e) => return Err(e.into()),
            };
            if !is_semiregular(&sub)? {
                continue;
            }
            let mut key: Vec<Vec<usize>> = set.iter().map(Perm::images).collect();
            key.sort_unstable();
            if !seen.insert(key) {
                continue;
            }
            let members: HashSet<Perm> = set.iter().cloned().collect();
            let normalizer: Vec<Perm> = elements
                .iter()
                .filter(|h| sub.generators().iter().all(|z| members.contains(&z.conjugate_by(h))))
                .cloned()
                .collect();
            let normalizer_order = normalizer.len();
            let gens = PermGroup::from_elements(n, normalizer)?.generators().to_vec();
            let label = identify(&fingerprint(&sub)?);
            found.push((
                CoverKernel {
                    label,
                    normalizer_order,
                    normalizer_arc_transitive: g.edge_count() > 0 && arc_orbits(g, &gens) == 1,
                    normal_in_aut: normalizer_order as u128 == aut.order,
                    group: sub,
                },
                members,
            ));
        }
    }
    Ok(found.into_iter().map(|(k, _)| k).collect())
}

#[cfg(test)]
mod tests;
