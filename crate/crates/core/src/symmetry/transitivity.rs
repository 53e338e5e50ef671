//! Orbits on arcs and `s`-arcs, and the vertex stabilizer type.

use serde::Serialize;

use super::{AutResult, SymmetryError};
use crate::construct::manifest::s_for_stabilizer;
use crate::graph::Graph;
use crate::groups::{fingerprint, identify, Fingerprint, Perm, PermGroup, FINGERPRINT_CAP};

/// No finite connected graph of valency at least 3 is 8-arc-transitive.
const MAX_S: u32 = 7;
const S_ARC_CAP: u128 = 1 << 28;

/// Number of `s`-arcs of a `k`-regular graph on `n` vertices.
pub fn s_arc_count(g: &Graph, s: u32) -> Option<u128> {
    let k = g.regular_valency()? as u128;
    let n = g.vertex_count() as u128;
    if s == 0 {
        return Some(n);
    }
    n.checked_mul(k)?.checked_mul((k.saturating_sub(1)).checked_pow(s - 1)?)
}

struct SArcs<'a> {
    g: &'a Graph,
    s: u32,
    k: usize,
}

impl SArcs<'_> {
    fn index_of(&self, u: usize, v: usize) -> usize {
        self.g.neighbors(u).binary_search(&(v as u32)).expect("consecutive vertices are adjacent")
    }

    fn decode(&self, mut id: u64) -> Vec<usize> {
        let mut digits = Vec::with_capacity(self.s as usize);
        for i in (1..=self.s).rev() {
            let base = if i == 1 { self.k } else { self.k - 1 } as u64;
            digits.push((id % base) as usize);
            id /= base;
        }
        digits.reverse();
        let mut walk = vec![id as usize];
        for (i, &d) in digits.iter().enumerate() {
            let cur = walk[i];
            let nb = self.g.neighbors(cur);
            let next = if i == 0 {
                nb[d] as usize
            } else {
                let back = self.index_of(cur, walk[i - 1]);
                nb[if d >= back { d + 1 } else { d }] as usize
            };
            walk.push(next);
        }
        walk
    }

    fn encode(&self, walk: &[usize]) -> u64 {
        let mut id = walk[0] as u64;
        for i in 1..walk.len() {
            let mut d = self.index_of(walk[i - 1], walk[i]);
            let base = if i == 1 {
                self.k
            } else {
                let back = self.index_of(walk[i - 1], walk[i - 2]);
                if d > back {
                    d -= 1;
                }
                self.k - 1
            };
            id = id * base as u64 + d as u64;
        }
        id
    }
}

/// Size of the orbit of the first `s`-arc under `gens`, or `None` when the
/// graph is not regular of valency at least 2 or the count exceeds the cap.
fn s_arc_orbit(g: &Graph, gens: &[Perm], s: u32) -> Option<u128> {
    let count = s_arc_count(g, s)?;
    let k = g.regular_valency()?;
    if k < 2 || count > S_ARC_CAP {
        return None;
    }
    let arcs = SArcs { g, s, k };
    let mut seen = vec![false; count as usize];
    let mut stack = vec![0u64];
    seen[0] = true;
    let mut size = 1u128;
    while let Some(id) = stack.pop() {
        let walk = arcs.decode(id);
        for p in gens {
            let image: Vec<usize> = walk.iter().map(|&v| p.apply(v)).collect();
            let j = arcs.encode(&image);
            if !seen[j as usize] {
                seen[j as usize] = true;
                size += 1;
                stack.push(j);
            }
        }
    }
    Some(size)
}

/// Number of orbits of `gens` on arcs (ordered adjacent pairs).
pub fn arc_orbits(g: &Graph, gens: &[Perm]) -> usize {
    let offsets: Vec<usize> = std::iter::once(0)
        .chain((0..g.vertex_count()).scan(0, |acc, v| {
            *acc += g.degree(v);
            Some(*acc)
        }))
        .collect();
    let total = offsets[g.vertex_count()];
    let arc_id = |u: usize, v: usize| offsets[u] + g.neighbors(u).binary_search(&(v as u32)).unwrap();
    let mut seen = vec![false; total];
    let mut orbits = 0;
    for start in 0..total {
        if seen[start] {
            continue;
        }
        orbits += 1;
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(a) = stack.pop() {
            let u = offsets.partition_point(|&o| o <= a) - 1;
            let v = g.neighbors(u)[a - offsets[u]] as usize;
            for p in gens {
                let b = arc_id(p.apply(u), p.apply(v));
                if !seen[b] {
                    seen[b] = true;
                    stack.push(b);
                }
            }
        }
    }
    orbits
}

pub fn is_arc_transitive(g: &Graph, aut: &AutResult) -> bool {
    g.edge_count() > 0 && arc_orbits(g, &aut.generators) == 1
}

/// The largest `s` such that the group is transitive on `s`-arcs, or `None`
/// when the graph is not arc-transitive or not regular of valency at least 3.
pub fn s_transitivity(g: &Graph, aut: &AutResult) -> Result<Option<u32>, SymmetryError> {
    if g.regular_valency().is_none_or(|k| k < 3) || !is_arc_transitive(g, aut) {
        return Ok(None);
    }
    let mut s = 1;
    while s < MAX_S {
        let count = s_arc_count(g, s + 1).unwrap();
        // a transitive group has at least as many elements as the orbit
        if count > aut.order {
            break;
        }
        let orbit = s_arc_orbit(g, &aut.generators, s + 1)
            .ok_or_else(|| SymmetryError::Invalid(format!("{count} {}-arcs exceed the cap", s + 1)))?;
        if orbit != count {
            break;
        }
        s += 1;
    }
    Ok(Some(s))
}

/// Stabilizer orders that occur for a pentavalent `(G, s)`-transitive graph.
pub fn stabilizer_orders_for_s(s: u32) -> &'static [u128] {
    match s {
        1 => &[5, 10, 20],
        2 => &[20, 40, 60, 120],
        3 => &[80, 720, 1440, 2880],
        4 => &[960, 1920, 2880, 5760],
        5 => &[23040],
        _ => &[],
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct StabilizerReport {
    pub vertex: usize,
    pub order: u128,
    pub fingerprint: Option<Fingerprint>,
    /// Catalogue name of the stabilizer, when recognised.
    pub label: Option<String>,
    /// `s` measured on `s`-arcs.
    pub s: Option<u32>,
    /// `s` implied by the stabilizer type.
    pub s_from_label: Option<u32>,
    /// The order is one listed for the measured `s`.
    pub order_consistent: bool,
}

pub fn stabilizer_report(g: &Graph, aut: &AutResult) -> Result<StabilizerReport, SymmetryError> {
    let order = aut.stabilizer_order();
    let vertex = aut.base.first().copied().unwrap_or(0);
    let (fp, label) = if order <= FINGERPRINT_CAP as u128 {
        let group = PermGroup::new(g.vertex_count(), aut.vertex_stabilizer_generators().to_vec())?;
        let fp = fingerprint(&group)?;
        if fp.order as u128 != order {
            return Err(SymmetryError::Invalid(format!(
                "stabilizer closure has {} elements, the search gave {order}",
                fp.order
            )));
        }
        let label = identify(&fp).map(str::to_string);
        (Some(fp), label)
    } else {
        (None, None)
    };
    let s = s_transitivity(g, aut)?;
    let order_consistent = s.is_some_and(|s| stabilizer_orders_for_s(s).contains(&order));
    Ok(StabilizerReport {
        vertex,
        order,
        s_from_label: label.as_deref().and_then(s_for_stabilizer),
        fingerprint: fp,
        label,
        s,
        order_consistent,
    })
}
