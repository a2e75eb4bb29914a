//! Union-find with parity and rollback.
//!
//! Tracks connected components of a growing forest together with the relative
//! bipartition side of every vertex. Unions are undoable (no path
//! compression), which is what the backtracking searches need: class-1 forest
//! maintenance in the embeddability CSP rolls back on every retreat.

pub struct ParityDsu {
    parent: Vec<u32>,
    /// Parity of the edge to the parent (0 = same side).
    edge_parity: Vec<u8>,
    size: Vec<u32>,
    /// (child_root, old_size_of_new_root) per successful union, for rollback.
    trail: Vec<(u32, u32)>,
}

impl ParityDsu {
    pub fn new(n: usize) -> Self {
        ParityDsu {
            parent: (0..n as u32).collect(),
            edge_parity: vec![0; n],
            size: vec![1; n],
            trail: Vec::new(),
        }
    }

    /// Root of `v`'s component and `v`'s parity relative to that root.
    pub fn find(&self, v: usize) -> (usize, u8) {
        let mut cur = v as u32;
        let mut parity = 0u8;
        while self.parent[cur as usize] != cur {
            parity ^= self.edge_parity[cur as usize];
            cur = self.parent[cur as usize];
        }
        (cur as usize, parity)
    }

    /// Joins `a` and `b` with relative parity `rel` (1 = opposite sides).
    ///
    /// Returns `false` without changing anything when the two are already in
    /// one component — for forest maintenance that means the edge closes a
    /// cycle and the caller must reject it.
    pub fn union(&mut self, a: usize, b: usize, rel: u8) -> bool {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        if ra == rb {
            return false;
        }
        let (child, root, parity) = if self.size[ra] < self.size[rb] {
            (ra, rb, pa ^ pb ^ rel)
        } else {
            (rb, ra, pa ^ pb ^ rel)
        };
        self.trail.push((child as u32, self.size[root]));
        self.parent[child] = root as u32;
        self.edge_parity[child] = parity;
        self.size[root] += self.size[child];
        true
    }

    /// Number of unions performed so far; pass to [`rollback`](Self::rollback).
    pub fn mark(&self) -> usize {
        self.trail.len()
    }

    /// Undoes every union performed after `mark`.
    pub fn rollback(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let (child, old_size) = self.trail.pop().unwrap();
            let root = self.parent[child as usize];
            self.size[root as usize] = old_size;
            self.parent[child as usize] = child;
            self.edge_parity[child as usize] = 0;
        }
    }
}
