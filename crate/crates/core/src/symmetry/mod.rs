//! Automorphism groups and isomorphisms by individualization and refinement.
//!
//! The automorphism group is built along the first path of the search tree
//! `b_1, b_2, ...`: at level `k` the orbit of `b_k` under the stabilizer of
//! `b_1..b_{k-1}` is completed by searching, for each candidate image, a
//! subtree for a leaf equivalent to the first leaf. The generators found form
//! a strong generating set and `|Aut| = prod |orbit_k|`.

mod bicayley;
mod partition;
mod transitivity;

pub use bicayley::{bicayley_f, BicayleyNormalizer};
pub use partition::Partition;
pub use transitivity::{
    arc_orbits, is_arc_transitive, s_arc_count, s_transitivity, stabilizer_report, StabilizerReport,
};

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::groups::{GroupError, Perm};

pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymmetryError {
    #[error("search budget of {budget} nodes exhausted after {nodes} nodes")]
    BudgetExceeded { budget: u64, nodes: u64 },
    #[error("emitted map failed verification: {0}")]
    Unverified(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("{0}")]
    Invalid(String),
}

#[derive(Debug, Clone, Serialize)]
pub struct AutResult {
    #[serde(skip)]
    pub generators: Vec<Perm>,
    /// Exact group order.
    pub order: u128,
    /// First-path base `b_1, b_2, ...`.
    pub base: Vec<usize>,
    /// Orbit length of `b_k` under the stabilizer of `b_1..b_{k-1}`.
    pub orbit_lengths: Vec<usize>,
    /// Generators found at levels `k` and deeper are `generators[..level_end[k]]`.
    #[serde(skip)]
    level_end: Vec<usize>,
    pub nodes: u64,
}

impl AutResult {
    /// Generators of the pointwise stabilizer of `base[..k]`.
    pub fn stabilizer_generators(&self, k: usize) -> &[Perm] {
        match self.level_end.get(k) {
            Some(&end) => &self.generators[..end],
            None => &[],
        }
    }

    /// Generators of the stabilizer of the first base point.
    pub fn vertex_stabilizer_generators(&self) -> &[Perm] {
        self.stabilizer_generators(1)
    }

    pub fn stabilizer_order(&self) -> u128 {
        self.orbit_lengths.iter().skip(1).map(|&l| l as u128).product()
    }

    /// Orbits of the whole group on vertices.
    pub fn orbits(&self, n: usize) -> Vec<Vec<usize>> {
        orbits_of(n, &self.generators)
    }

    pub fn is_vertex_transitive(&self, n: usize) -> bool {
        self.orbits(n).len() == 1
    }
}

struct Level {
    before: Partition,
    target: usize,
    base: usize,
    trace: u64,
}

struct Search {
    levels: Vec<Level>,
    first_leaf: Vec<u32>,
    root_trace: u64,
    nodes: u64,
    budget: u64,
}

fn root_and_first_path(g: &Graph) -> (u64, Vec<Level>, Vec<u32>) {
    let (mut p, root_trace) = Partition::equitable(g);
    let mut levels = Vec::new();
    while let Some(t) = p.target_cell() {
        let base = *p.cell(t).iter().min().unwrap() as usize;
        let before = p.clone();
        let trace = p.individualize(g, base);
        levels.push(Level { before, target: t, base, trace });
    }
    (root_trace, levels, p.lab().to_vec())
}

/// Union-find orbits of `gens` on `0..n`, each sorted, ordered by least element.
fn orbits_of(n: usize, gens: &[Perm]) -> Vec<Vec<usize>> {
    let label = orbit_labels(n, gens);
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for v in 0..n {
        groups.entry(label[v]).or_default().push(v);
    }
    groups.into_values().collect()
}

/// `label[v]` is the least element of the orbit of `v`.
fn orbit_labels(n: usize, gens: &[Perm]) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for g in gens {
        for v in 0..n {
            let (a, b) = (find(&mut parent, v), find(&mut parent, g.apply(v)));
            if a != b {
                let (lo, hi) = (a.min(b), a.max(b));
                parent[hi] = lo;
            }
        }
    }
    (0..n).map(|v| find(&mut parent, v)).collect()
}

/// Pruning along the first path of the target graph: orbits of the pointwise
/// stabilizer of its base prefix.
struct FirstPathPruning<'a> {
    aut: &'a AutResult,
    n: usize,
}

impl Search {
    fn new(graph: &Graph, budget: u64) -> Self {
        let (root_trace, levels, first_leaf) = root_and_first_path(graph);
        Search { levels, first_leaf, root_trace, nodes: 0, budget }
    }

    fn tick(&mut self) -> Result<(), SymmetryError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(SymmetryError::BudgetExceeded { budget: self.budget, nodes: self.nodes });
        }
        Ok(())
    }

    /// Depth-first search below `part` (in `target`) for a leaf accepted by
    /// `accept`, pruning nodes whose trace differs from the first path.
    /// `on_path` is true while the prefix equals the target graph's own first path.
    fn find_leaf(
        &mut self,
        target: &Graph,
        part: &Partition,
        depth: usize,
        on_path: bool,
        pruning: Option<&FirstPathPruning>,
        accept: &mut dyn FnMut(&[u32]) -> bool,
    ) -> Result<Option<Vec<u32>>, SymmetryError> {
        if part.is_discrete() {
            return Ok(if depth == self.levels.len() && accept(part.lab()) { Some(part.lab().to_vec()) } else { None });
        }
        if depth >= self.levels.len() || part.target_cell() != Some(self.levels[depth].target) {
            return Ok(None);
        }
        let t = self.levels[depth].target;
        let mut cell: Vec<u32> = part.cell(t).to_vec();
        cell.sort_unstable();
        let labels = match (on_path, pruning) {
            (true, Some(pr)) => Some(orbit_labels(pr.n, pr.aut.stabilizer_generators(depth))),
            _ => None,
        };
        let path_vertex = pruning.and_then(|pr| pr.aut.base.get(depth).copied());
        for &w in &cell {
            let w = w as usize;
            if labels.as_ref().is_some_and(|l| l[w] != w) {
                continue;
            }
            self.tick()?;
            let mut child = part.clone();
            if child.individualize(target, w) != self.levels[depth].trace {
                continue;
            }
            let still_on_path = on_path && path_vertex == Some(w);
            if let Some(leaf) = self.find_leaf(target, &child, depth + 1, still_on_path, pruning, accept)? {
                return Ok(Some(leaf));
            }
        }
        Ok(None)
    }
}

fn leaf_map(from: &[u32], to: &[u32]) -> Perm {
    let mut images = vec![0usize; from.len()];
    for (a, b) in from.iter().zip(to) {
        images[*a as usize] = *b as usize;
    }
    Perm::from_images(images).expect("leaves are permutations")
}

pub fn automorphism_group(g: &Graph) -> Result<AutResult, SymmetryError> {
    automorphism_group_with_budget(g, DEFAULT_NODE_BUDGET)
}

pub fn automorphism_group_with_budget(g: &Graph, budget: u64) -> Result<AutResult, SymmetryError> {
    let n = g.vertex_count();
    let mut s = Search::new(g, budget);
    let depth = s.levels.len();
    let mut gens: Vec<Perm> = Vec::new();
    let mut orbit_lengths = vec![1usize; depth];
    let mut level_end = vec![0usize; depth];
    for k in (0..depth).rev() {
        let base = s.levels[k].base;
        let mut cell: Vec<u32> = s.levels[k].before.cell(s.levels[k].target).to_vec();
        cell.sort_unstable();
        let mut labels = orbit_labels(n, &gens);
        // orbits (by least element) known not to contain base
        let mut failed: Vec<usize> = Vec::new();
        for &v in &cell {
            let v = v as usize;
            if labels[v] == labels[base] || failed.contains(&labels[v]) {
                continue;
            }
            s.tick()?;
            let mut child = s.levels[k].before.clone();
            let found = if child.individualize(g, v) == s.levels[k].trace {
                let first = s.first_leaf.clone();
                s.find_leaf(g, &child, k + 1, false, None, &mut |lab| g.is_automorphism(&leaf_map(&first, lab)))?
            } else {
                None
            };
            match found {
                Some(lab) => {
                    let perm = leaf_map(&s.first_leaf, &lab);
                    if !g.is_automorphism(&perm) {
                        return Err(SymmetryError::Unverified(format!("{perm:?}")));
                    }
                    gens.push(perm);
                    labels = orbit_labels(n, &gens);
                    failed = failed.iter().map(|&f| labels[f]).collect();
                }
                None => failed.push(labels[v]),
            }
        }
        orbit_lengths[k] = (0..n).filter(|&v| labels[v] == labels[base]).count();
        level_end[k] = gens.len();
    }
    let order = orbit_lengths.iter().map(|&l| l as u128).product();
    Ok(AutResult {
        base: s.levels.iter().map(|l| l.base).collect(),
        generators: gens,
        order,
        orbit_lengths,
        level_end,
        nodes: s.nodes,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Screen {
    pub girth: Option<usize>,
    /// Sorted multiset of per-vertex distance profiles, hashed.
    pub distance_hash: u64,
}

pub fn screen(g: &Graph) -> Screen {
    let mut profiles: Vec<Vec<usize>> = (0..g.vertex_count()).map(|v| g.distance_profile(v)).collect();
    profiles.sort_unstable();
    let mut h = std::collections::hash_map::DefaultHasher::new();
    std::hash::Hash::hash(&profiles, &mut h);
    Screen { girth: g.girth().ok(), distance_hash: std::hash::Hasher::finish(&h) }
}

#[derive(Debug, Clone, Serialize)]
pub struct IsoReport {
    #[serde(skip)]
    pub map: Option<Perm>,
    pub isomorphic: bool,
    /// The invariant screen already separated the graphs; the search still decided.
    pub screen_separated: bool,
    pub nodes: u64,
}

/// An isomorphism `g1 -> g2` or a certified absence.
pub fn are_isomorphic(g1: &Graph, g2: &Graph) -> Result<Option<Perm>, SymmetryError> {
    Ok(isomorphism_report(g1, g2, DEFAULT_NODE_BUDGET)?.map)
}

pub fn isomorphism_report(g1: &Graph, g2: &Graph, budget: u64) -> Result<IsoReport, SymmetryError> {
    let absent = |screen_separated, nodes| IsoReport { map: None, isomorphic: false, screen_separated, nodes };
    if g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return Ok(absent(true, 0));
    }
    let (mut d1, mut d2) = (g1.degree_sequence(), g2.degree_sequence());
    d1.sort_unstable();
    d2.sort_unstable();
    if d1 != d2 {
        return Ok(absent(true, 0));
    }
    let screen_separated = screen(g1) != screen(g2);
    let aut2 = automorphism_group_with_budget(g2, budget)?;
    let mut s = Search::new(g1, budget.saturating_sub(aut2.nodes));
    let (p2, trace2) = Partition::equitable(g2);
    let mut found = None;
    if trace2 == s.root_trace {
        let first = s.first_leaf.clone();
        let pruning = FirstPathPruning { aut: &aut2, n: g2.vertex_count() };
        found = s.find_leaf(g2, &p2, 0, true, Some(&pruning), &mut |lab| {
            g1.is_isomorphism_to(g2, &leaf_map(&first, lab))
        })?;
    }
    let nodes = aut2.nodes + s.nodes;
    let Some(lab) = found else {
        return Ok(absent(screen_separated, nodes));
    };
    let map = leaf_map(&s.first_leaf, &lab);
    if !g1.is_isomorphism_to(g2, &map) {
        return Err(SymmetryError::Unverified(format!("{map:?}")));
    }
    if screen_separated {
        return Err(SymmetryError::Invalid("invariant screen separated isomorphic graphs".into()));
    }
    Ok(IsoReport { map: Some(map), isomorphic: true, screen_separated, nodes })
}
