//! Ordered partitions with equitable refinement.
//!
//! Cells are contiguous ranges of `lab`. Every decision taken during
//! refinement depends only on cell positions and neighbour counts, so two
//! graphs related by an isomorphism produce the same trace.

use std::collections::VecDeque;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    lab: Vec<u32>,
    pos: Vec<u32>,
    /// Start of the cell containing each vertex.
    start: Vec<u32>,
    /// Cell length, valid at cell starts.
    len: Vec<u32>,
    cells: usize,
}

fn mix(h: u64, x: u64) -> u64 {
    (h ^ x.wrapping_mul(0x9e37_79b9_7f4a_7c15)).rotate_left(27).wrapping_mul(0x94d0_49bb_1331_11eb)
}

impl Partition {
    pub fn unit(n: usize) -> Self {
        let mut len = vec![0; n];
        if n > 0 {
            len[0] = n as u32;
        }
        Partition {
            lab: (0..n as u32).collect(),
            pos: (0..n as u32).collect(),
            start: vec![0; n],
            len,
            cells: usize::from(n > 0),
        }
    }

    /// The coarsest equitable refinement of the unit partition and its trace.
    pub fn equitable(g: &Graph) -> (Self, u64) {
        let mut p = Partition::unit(g.vertex_count());
        let trace = p.refine(g, &[0]);
        (p, trace)
    }

    pub fn lab(&self) -> &[u32] {
        &self.lab
    }

    pub fn cell_count(&self) -> usize {
        self.cells
    }

    pub fn is_discrete(&self) -> bool {
        self.cells == self.lab.len()
    }

    pub fn cell(&self, start: usize) -> &[u32] {
        &self.lab[start..start + self.len[start] as usize]
    }

    pub fn cell_of(&self, v: usize) -> usize {
        self.start[v] as usize
    }

    /// Start of the smallest non-singleton cell, earliest on ties.
    pub fn target_cell(&self) -> Option<usize> {
        let mut best: Option<(u32, usize)> = None;
        let mut i = 0;
        while i < self.lab.len() {
            let l = self.len[i];
            if l > 1 && best.is_none_or(|(bl, _)| l < bl) {
                best = Some((l, i));
            }
            i += l as usize;
        }
        best.map(|(_, s)| s)
    }

    /// Split `v` off the front of its cell and refine; returns the trace.
    pub fn individualize(&mut self, g: &Graph, v: usize) -> u64 {
        let s = self.start[v] as usize;
        let l = self.len[s] as usize;
        if l == 1 {
            return mix(0, s as u64);
        }
        let (pv, first) = (self.pos[v] as usize, self.lab[s]);
        self.lab.swap(s, pv);
        self.pos[first as usize] = pv as u32;
        self.pos[v] = s as u32;
        self.len[s] = 1;
        self.len[s + 1] = (l - 1) as u32;
        for i in s + 1..s + l {
            self.start[self.lab[i] as usize] = (s + 1) as u32;
        }
        self.cells += 1;
        mix(self.refine(g, &[s]), s as u64)
    }

    /// Refine to equitability using the given cells as initial splitters.
    pub fn refine(&mut self, g: &Graph, splitters: &[usize]) -> u64 {
        let n = self.lab.len();
        let mut trace = 0u64;
        let mut queued = vec![false; n];
        let mut queue = VecDeque::new();
        for &s in splitters {
            if !queued[s] {
                queued[s] = true;
                queue.push_back(s);
            }
        }
        let mut count = vec![0u32; n];
        let mut touched: Vec<u32> = Vec::new();
        let mut touched_cells: Vec<usize> = Vec::new();
        while let Some(w) = queue.pop_front() {
            queued[w] = false;
            if self.cells == n {
                break;
            }
            let wl = self.len[w] as usize;
            for i in w..w + wl {
                for &y in g.neighbors(self.lab[i] as usize) {
                    if count[y as usize] == 0 {
                        touched.push(y);
                    }
                    count[y as usize] += 1;
                }
            }
            trace = mix(trace, ((w as u64) << 32) | wl as u64);
            touched_cells.clear();
            touched_cells.extend(touched.iter().map(|&y| self.start[y as usize] as usize));
            touched_cells.sort_unstable();
            touched_cells.dedup();
            for &c in &touched_cells {
                let cl = self.len[c] as usize;
                let cell = &mut self.lab[c..c + cl];
                let (lo, hi) = cell.iter().fold((u32::MAX, 0), |(lo, hi), &v| {
                    let k = count[v as usize];
                    (lo.min(k), hi.max(k))
                });
                trace = mix(trace, ((c as u64) << 40) | ((lo as u64) << 20) | hi as u64);
                if lo == hi {
                    continue;
                }
                cell.sort_unstable_by_key(|&v| count[v as usize]);
                let mut frags: Vec<(usize, usize)> = Vec::new();
                let mut i = c;
                while i < c + cl {
                    let k = count[self.lab[i] as usize];
                    let mut j = i + 1;
                    while j < c + cl && count[self.lab[j] as usize] == k {
                        j += 1;
                    }
                    frags.push((i, j - i));
                    trace = mix(trace, ((k as u64) << 32) | (j - i) as u64);
                    i = j;
                }
                for &(fs, fl) in &frags {
                    self.len[fs] = fl as u32;
                    for k in fs..fs + fl {
                        let v = self.lab[k] as usize;
                        self.pos[v] = k as u32;
                        self.start[v] = fs as u32;
                    }
                }
                self.cells += frags.len() - 1;
                if queued[c] {
                    for &(fs, _) in &frags[1..] {
                        queued[fs] = true;
                        queue.push_back(fs);
                    }
                } else {
                    let largest = frags
                        .iter()
                        .enumerate()
                        .fold(0, |best, (i, f)| if f.1 > frags[best].1 { i } else { best });
                    for (i, &(fs, _)) in frags.iter().enumerate() {
                        if i != largest {
                            queued[fs] = true;
                            queue.push_back(fs);
                        }
                    }
                }
            }
            for &y in &touched {
                count[y as usize] = 0;
            }
            touched.clear();
        }
        mix(trace, self.cells as u64)
    }

    /// Every cell has a constant number of neighbours in every cell.
    pub fn is_equitable(&self, g: &Graph) -> bool {
        let n = self.lab.len();
        let mut i = 0;
        while i < n {
            let cell = self.cell(i);
            let profile = |v: u32| {
                let mut counts = std::collections::BTreeMap::new();
                for &y in g.neighbors(v as usize) {
                    *counts.entry(self.start[y as usize]).or_insert(0) += 1;
                }
                counts
            };
            let first = profile(cell[0]);
            if cell.iter().any(|&v| profile(v) != first) {
                return false;
            }
            i += cell.len();
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::Perm;
    use proptest::prelude::*;

    fn star() -> Graph {
        Graph::from_edges(6, (1..6).map(|i| (0, i))).unwrap()
    }

    #[test]
    fn star_splits_centre() {
        let (p, _) = Partition::equitable(&star());
        assert_eq!(p.cell_count(), 2);
        assert_eq!(p.cell(0), &[1, 2, 3, 4, 5][..].iter().map(|&x| x as u32).collect::<Vec<_>>()[..]);
        assert!(p.is_equitable(&star()));
    }

    #[test]
    fn regular_graph_stays_unit() {
        let g = Graph::complete_bipartite(5, 5);
        let (p, _) = Partition::equitable(&g);
        assert_eq!(p.cell_count(), 1);
        let mut q = p.clone();
        q.individualize(&g, 0);
        // {0}, the other side, the rest of 0's side
        assert_eq!(q.cell_count(), 3);
        assert!(q.is_equitable(&g));
    }

    proptest! {
        #[test]
        fn traces_are_label_invariant(
            edges in proptest::collection::vec((0usize..12, 0usize..12), 0..30),
            shuffle in Just((0..12).collect::<Vec<usize>>()).prop_shuffle(),
            pick in 0usize..12,
        ) {
            let g = Graph::from_edges(12, edges.into_iter().filter(|(a, b)| a != b)).unwrap();
            let perm = Perm::from_images(shuffle).unwrap();
            let h = g.relabel(&perm).unwrap();
            let (mut p, t1) = Partition::equitable(&g);
            let (mut q, t2) = Partition::equitable(&h);
            prop_assert_eq!(t1, t2);
            prop_assert!(p.is_equitable(&g));
            let a = p.individualize(&g, pick);
            let b = q.individualize(&h, perm.apply(pick));
            prop_assert_eq!(a, b);
            prop_assert!(p.is_equitable(&g));
            prop_assert_eq!(p.cell_count(), q.cell_count());
        }
    }
}
