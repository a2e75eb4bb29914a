//! Simple undirected graphs on dense vertex labels 0..order-1.
//!
//! Adjacency is one bitset row per vertex; all combinators label their output
//! in fixed lexicographic order so that emitted graph6 is bit-exact
//! reproducible across runs.

use crate::bitset::VertexSet;
use crate::error::Error;
use crate::N_MAX;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Self {
        assert!(order <= N_MAX, "order {order} exceeds N_MAX {N_MAX}");
        Graph { order, adj: (0..order).map(|_| VertexSet::new(order)).collect() }
    }

    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::empty(order);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn complete(order: usize) -> Self {
        let mut g = Graph::empty(order);
        for u in 0..order {
            for v in u + 1..order {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn cycle(order: usize) -> Self {
        assert!(order >= 3);
        let mut g = Graph::empty(order);
        for v in 0..order {
            g.add_edge(v, (v + 1) % order);
        }
        g
    }

    pub fn path(order: usize) -> Self {
        let mut g = Graph::empty(order);
        for v in 1..order {
            g.add_edge(v - 1, v);
        }
        g
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loop at {u}");
        assert!(u < self.order && v < self.order);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.len()).sum::<usize>() / 2
    }

    /// Edges as (u, v) with u < v, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.order {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Edge count of the subgraph induced on `sub`.
    pub fn edge_count_within(&self, sub: &VertexSet) -> usize {
        sub.iter().map(|v| self.adj[v].intersection_count(sub)).sum::<usize>() / 2
    }

    pub fn is_independent(&self, sub: &VertexSet) -> bool {
        sub.iter().all(|v| self.adj[v].is_disjoint(sub))
    }

    /// Union of `self` and `other` as edge sets over the same vertex count.
    pub fn edge_union(&self, other: &Graph) -> Result<Graph, Error> {
        if self.order != other.order {
            return Err(Error::InvalidArgument("edge_union: order mismatch".into()));
        }
        let mut g = self.clone();
        for v in 0..self.order {
            g.adj[v].union_with(&other.adj[v]);
        }
        Ok(g)
    }

    pub fn edge_disjoint_with(&self, other: &Graph) -> bool {
        self.order == other.order
            && (0..self.order).all(|v| self.adj[v].is_disjoint(&other.adj[v]))
    }

    /// The subgraph induced on `keep`, with vertices relabeled densely in
    /// increasing original order. Returns the graph and the old labels.
    pub fn induced(&self, keep: &VertexSet) -> (Graph, Vec<usize>) {
        let labels = keep.to_vec();
        let mut pos = vec![usize::MAX; self.order];
        for (i, &v) in labels.iter().enumerate() {
            pos[v] = i;
        }
        let mut g = Graph::empty(labels.len());
        for (i, &v) in labels.iter().enumerate() {
            for w in self.adj[v].iter() {
                if w > v && keep.contains(w) {
                    g.add_edge(i, pos[w]);
                }
            }
        }
        (g, labels)
    }

    /// Connected components as sorted vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::new(self.order);
        let mut out = Vec::new();
        for start in 0..self.order {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::new(self.order);
            let mut stack = vec![start];
            comp.insert(start);
            while let Some(v) = stack.pop() {
                for w in self.adj[v].iter() {
                    if !comp.contains(w) {
                        comp.insert(w);
                        stack.push(w);
                    }
                }
            }
            seen.union_with(&comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.order <= 1 || self.components().len() == 1
    }

    /// 2-coloring if bipartite, else a witness odd closed walk is implied;
    /// returns `None` for non-bipartite graphs.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut color = vec![u8::MAX; self.order];
        for start in 0..self.order {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for w in self.adj[v].iter() {
                    if color[w] == u8::MAX {
                        color[w] = color[v] ^ 1;
                        queue.push_back(w);
                    } else if color[w] == color[v] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    /// Exact (girth, odd girth); `None` components mean no (odd) cycle exists.
    ///
    /// Girth by BFS from every vertex: scanning a non-tree edge at distances
    /// (d, d) gives a closed walk of length 2d+1, at (d, d+1) one of 2d+2;
    /// minimizing over all start vertices is exact. Odd girth via distances
    /// in the bipartite double cover: the shortest odd closed walk is an odd
    /// cycle.
    pub fn girth_stats(&self) -> GirthStats {
        GirthStats { girth: self.girth(), odd_girth: self.odd_girth() }
    }

    fn girth(&self) -> Option<usize> {
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; self.order];
        let mut parent = vec![usize::MAX; self.order];
        for start in 0..self.order {
            dist.fill(usize::MAX);
            parent.fill(usize::MAX);
            dist[start] = 0;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                if 2 * dist[v] + 1 >= best {
                    break;
                }
                for w in self.adj[v].iter() {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        parent[w] = v;
                        queue.push_back(w);
                    } else if parent[v] != w && dist[w] >= dist[v] {
                        // Non-tree edge; cycle through the BFS tree.
                        best = best.min(dist[v] + dist[w] + 1);
                    }
                }
            }
        }
        (best != usize::MAX).then_some(best)
    }

    fn odd_girth(&self) -> Option<usize> {
        // Double cover vertex (v, p): distance from (start, 0) to (start, 1)
        // is the shortest odd closed walk through start.
        let n = self.order;
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; 2 * n];
        for start in 0..n {
            dist.fill(usize::MAX);
            dist[2 * start] = 0;
            let mut queue = std::collections::VecDeque::from([2 * start]);
            while let Some(x) = queue.pop_front() {
                let (v, p) = (x / 2, x % 2);
                if dist[x] >= best {
                    break;
                }
                for w in self.adj[v].iter() {
                    let y = 2 * w + (p ^ 1);
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        queue.push_back(y);
                    }
                }
            }
            if dist[2 * start + 1] != usize::MAX {
                best = best.min(dist[2 * start + 1]);
            }
        }
        (best != usize::MAX).then_some(best)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GirthStats {
    /// Length of the shortest cycle; `None` for forests.
    pub girth: Option<usize>,
    /// Length of the shortest odd cycle; `None` for bipartite graphs.
    pub odd_girth: Option<usize>,
}

/// The t-blowup H[t]: each vertex becomes an independent t-set, each edge a
/// complete bipartite K_{t,t}. Vertex (v, i) of the blowup is labeled v*t + i.
pub fn blowup(h: &Graph, t: usize) -> Result<Graph, Error> {
    if t == 0 {
        return Err(Error::InvalidArgument("blowup: t must be >= 1".into()));
    }
    let n = h.order() * t;
    if n > N_MAX {
        return Err(Error::InvalidArgument(format!("blowup: order {n} exceeds N_MAX")));
    }
    let mut g = Graph::empty(n);
    for (u, v) in h.edges() {
        for i in 0..t {
            for j in 0..t {
                g.add_edge(u * t + i, v * t + j);
            }
        }
    }
    Ok(g)
}

/// Disjoint union; labels are offset in list order, no cross edges.
pub fn disjoint_union(gs: &[&Graph]) -> Graph {
    let total: usize = gs.iter().map(|g| g.order()).sum();
    let mut out = Graph::empty(total);
    let mut offset = 0;
    for g in gs {
        for (u, v) in g.edges() {
            out.add_edge(offset + u, offset + v);
        }
        offset += g.order();
    }
    out
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={})", self.order, self.edge_count())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_construction() {
        let g = Graph::cycle(5);
        assert_eq!(g.order(), 5);
        assert_eq!(g.edge_count(), 5);
        assert!(g.has_edge(0, 4));
        assert!(!g.has_edge(0, 2));
        assert_eq!(g.min_degree(), 2);
    }

    #[test]
    fn blowup_counts() {
        let c5 = Graph::cycle(5);
        let b = blowup(&c5, 2).unwrap();
        assert_eq!(b.order(), 10);
        assert_eq!(b.edge_count(), 20);
        let k3 = Graph::complete(3);
        assert_eq!(blowup(&k3, 1).unwrap(), k3);
        let k3b = blowup(&k3, 2).unwrap();
        assert_eq!((k3b.order(), k3b.edge_count()), (6, 12));
        assert!(blowup(&k3, 0).is_err());
    }

    #[test]
    fn blowup_adjacency_rule() {
        let p3 = Graph::path(3);
        let b = blowup(&p3, 3).unwrap();
        // (v,i) ~ (w,j) iff v~w; classes independent
        assert!(b.has_edge(0, 4)); // (0,0)-(1,1)
        assert!(!b.has_edge(0, 1)); // same class
        assert!(!b.has_edge(0, 7)); // (0,0)-(2,1): 0 and 2 not adjacent in P3
    }

    #[test]
    fn union_and_components() {
        let u = disjoint_union(&[&Graph::complete(3), &Graph::complete(3)]);
        assert_eq!(u.order(), 6);
        assert_eq!(u.components().len(), 2);
        let empty = disjoint_union(&[]);
        assert_eq!(empty.order(), 0);
    }

    #[test]
    fn girth_odd_girth() {
        let c5 = Graph::cycle(5);
        assert_eq!(c5.girth_stats(), GirthStats { girth: Some(5), odd_girth: Some(5) });
        let c6 = Graph::cycle(6);
        assert_eq!(c6.girth_stats(), GirthStats { girth: Some(6), odd_girth: None });
        let p4 = Graph::path(4);
        assert_eq!(p4.girth_stats(), GirthStats { girth: None, odd_girth: None });
        let k3b = blowup(&Graph::complete(3), 2).unwrap();
        assert_eq!(k3b.girth_stats(), GirthStats { girth: Some(3), odd_girth: Some(3) });
    }

    #[test]
    fn bipartition_detects_odd_cycles() {
        assert!(Graph::cycle(6).bipartition().is_some());
        assert!(Graph::cycle(7).bipartition().is_none());
    }

    #[test]
    fn induced_relabels_densely() {
        let c5 = Graph::cycle(5);
        let keep = VertexSet::from_iter(5, [0, 1, 3]);
        let (sub, labels) = c5.induced(&keep);
        assert_eq!(labels, vec![0, 1, 3]);
        assert_eq!(sub.edge_count(), 1); // only the 0-1 edge survives
        assert!(sub.has_edge(0, 1));
    }
}
