//! Exhaustive reference answers for graphs on at most 7 vertices.
//!
//! A graph is a bitmask over the pairs `i < j`. Every permutation of the
//! vertex set is tried, so nothing here shares code with the refinement search.

use crate::graph::Graph;

const CHUNK: usize = 7;

#[derive(Debug, Clone)]
pub struct SmallGraph {
    pub mask: u32,
    pub graph: Graph,
}

pub struct SmallGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    perms: Vec<Vec<usize>>,
    /// `tables[perm][chunk][bits]`: image of those bits of the mask.
    tables: Vec<Vec<Vec<u32>>>,
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

impl SmallGraphs {
    /// Panics for `n > 7`.
    pub fn new(n: usize) -> Self {
        assert!(n <= 7, "exhaustive tables only up to 7 vertices");
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let index = |a: usize, b: usize| pairs.iter().position(|&p| p == (a.min(b), a.max(b))).unwrap();
        let perms = permutations(n);
        let chunks = pairs.len().div_ceil(CHUNK);
        let tables = perms
            .iter()
            .map(|p| {
                let bit_image: Vec<u32> = pairs.iter().map(|&(i, j)| 1 << index(p[i], p[j])).collect();
                (0..chunks)
                    .map(|c| {
                        (0..1u32 << CHUNK)
                            .map(|bits| {
                                (0..CHUNK)
                                    .filter(|k| bits >> k & 1 == 1 && c * CHUNK + k < pairs.len())
                                    .fold(0, |acc, k| acc | bit_image[c * CHUNK + k])
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        SmallGraphs { n, pairs, perms, tables }
    }

    fn apply(&self, perm: usize, mask: u32) -> u32 {
        self.tables[perm]
            .iter()
            .enumerate()
            .fold(0, |acc, (c, t)| acc | t[(mask >> (c * CHUNK)) as usize & ((1 << CHUNK) - 1)])
    }

    /// Least image of `mask` under all vertex permutations.
    pub fn canonical(&self, mask: u32) -> u32 {
        (0..self.perms.len()).map(|p| self.apply(p, mask)).min().unwrap_or(mask)
    }

    pub fn aut_order(&self, mask: u32) -> u128 {
        (0..self.perms.len()).filter(|&p| self.apply(p, mask) == mask).count() as u128
    }

    pub fn graph(&self, mask: u32) -> Graph {
        let edges = self.pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e);
        Graph::from_edges(self.n, edges).unwrap()
    }

    /// One graph per isomorphism class, by canonical mask.
    pub fn all(&self) -> Vec<SmallGraph> {
        let mut classes = std::collections::BTreeSet::new();
        if self.n == 0 {
            classes.insert(0);
        } else {
            // every graph is a smaller one plus a vertex joined to a subset
            let smaller = SmallGraphs::new(self.n - 1);
            let last = self.n - 1;
            for g in smaller.all() {
                let mut base = 0u32;
                for (u, v) in g.graph.edges() {
                    base |= 1 << self.pairs.iter().position(|&p| p == (u, v)).unwrap();
                }
                for subset in 0..1u32 << last {
                    let mask = (0..last)
                        .filter(|&u| subset >> u & 1 == 1)
                        .fold(base, |acc, u| acc | 1 << self.pairs.iter().position(|&p| p == (u, last)).unwrap());
                    classes.insert(self.canonical(mask));
                }
            }
        }
        classes.into_iter().map(|mask| SmallGraph { mask, graph: self.graph(mask) }).collect()
    }

    /// Pairs to test with the exhaustive answer: each graph against a
    /// relabelled copy, and every two graphs sharing edge count and degree
    /// sequence.
    pub fn iso_pairs(&self, graphs: &[SmallGraph]) -> Vec<(Graph, Graph, bool)> {
        let mut out = Vec::new();
        for (i, g) in graphs.iter().enumerate() {
            let p = (i * 7919 + 1) % self.perms.len();
            let moved = self.apply(p, g.mask);
            out.push((g.graph.clone(), self.graph(moved), self.canonical(moved) == g.mask));
            for h in &graphs[i + 1..] {
                if h.graph.edge_count() == g.graph.edge_count() && h.graph.degree_sequence() == g.graph.degree_sequence() {
                    out.push((g.graph.clone(), h.graph.clone(), self.canonical(h.mask) == self.canonical(g.mask)));
                }
            }
        }
        out
    }
}
