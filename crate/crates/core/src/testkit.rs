//! Test-support oracles and small-graph enumeration (feature `testkit`).
//!
//! Everything here is deliberately naive and independent of the production
//! search paths: exhaustive injections, plain lexicographic colorings, direct
//! odd-cycle checks. The property suites compare the engine against these.

use crate::graph::Graph;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;

/// Column-major edge index for i < j (the graph6 bit order).
fn edge_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

pub fn mask_to_graph(n: usize, mask: u64) -> Graph {
    let mut g = Graph::empty(n);
    for j in 1..n {
        for i in 0..j {
            if mask >> edge_index(i, j) & 1 == 1 {
                g.add_edge(i, j);
            }
        }
    }
    g
}

pub fn graph_to_mask(g: &Graph) -> u64 {
    let mut mask = 0u64;
    for (i, j) in g.edges() {
        mask |= 1 << edge_index(i, j);
    }
    mask
}

/// Permutation tables mapping edge-bit positions, one per permutation of [n].
fn perm_edge_tables(n: usize) -> Vec<Vec<u8>> {
    let mut perms: Vec<Vec<usize>> = Vec::new();
    let mut idx: Vec<usize> = (0..n).collect();
    permute(&mut idx, 0, &mut perms);
    let m = n * (n - 1) / 2;
    perms
        .iter()
        .map(|p| {
            let mut table = vec![0u8; m];
            for j in 1..n {
                for i in 0..j {
                    let (a, b) = (p[i].min(p[j]), p[i].max(p[j]));
                    table[edge_index(i, j)] = edge_index(a, b) as u8;
                }
            }
            table
        })
        .collect()
}

fn permute(idx: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == idx.len() {
        out.push(idx.clone());
        return;
    }
    for i in k..idx.len() {
        idx.swap(k, i);
        permute(idx, k + 1, out);
        idx.swap(k, i);
    }
}

fn apply_table(mask: u64, table: &[u8]) -> u64 {
    let mut out = 0u64;
    let mut rest = mask;
    while rest != 0 {
        let bit = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        out |= 1 << table[bit];
    }
    out
}

/// Lexicographically smallest edge mask over all vertex relabelings.
pub fn canonical_mask(mask: u64, tables: &[Vec<u8>]) -> u64 {
    let mut best = mask;
    for t in tables {
        let y = apply_table(mask, t);
        if y < best {
            best = y;
        }
    }
    best
}

/// All graphs on exactly `n` vertices up to isomorphism (n <= 7), as edge
/// masks, grown by vertex augmentation with canonical deduplication.
pub fn graphs_up_to_iso(n: usize) -> Vec<u64> {
    assert!((1..=7).contains(&n), "enumeration supported for 1..=7 vertices");
    let mut level: HashSet<u64> = HashSet::from([0u64]);
    for k in 2..=n {
        let tables = perm_edge_tables(k);
        let mut next: HashSet<u64> = HashSet::new();
        for &mask in &level {
            // New vertex k-1; wire to any subset of the old vertices.
            for subset in 0u64..(1 << (k - 1)) {
                let mut grown = mask;
                for i in 0..k - 1 {
                    if subset >> i & 1 == 1 {
                        grown |= 1 << edge_index(i, k - 1);
                    }
                }
                next.insert(canonical_mask(grown, &tables));
            }
        }
        level = next;
    }
    let mut out: Vec<u64> = level.into_iter().collect();
    out.sort_unstable();
    out
}

/// Exhaustive all-injections subgraph containment oracle.
pub fn oracle_contains(host: &Graph, pattern: &Graph) -> bool {
    let np = pattern.order();
    let nh = host.order();
    if np == 0 {
        return true;
    }
    if np > nh {
        return false;
    }
    let mut map = vec![usize::MAX; np];
    let mut used = vec![false; nh];
    fn rec(host: &Graph, pattern: &Graph, v: usize, map: &mut [usize], used: &mut [bool]) -> bool {
        if v == pattern.order() {
            return true;
        }
        for h in 0..host.order() {
            if used[h] {
                continue;
            }
            let ok = (0..v).all(|w| !pattern.has_edge(v, w) || host.has_edge(h, map[w]));
            if ok {
                map[v] = h;
                used[h] = true;
                if rec(host, pattern, v + 1, map, used) {
                    return true;
                }
                used[h] = false;
            }
        }
        false
    }
    rec(host, pattern, 0, &mut map, &mut used)
}

/// Brute-force chromatic number by plain lexicographic assignment (n small).
pub fn oracle_chromatic(g: &Graph) -> usize {
    let n = g.order();
    if n == 0 {
        return 0;
    }
    let edges = g.edges();
    for k in 1..=n {
        let mut colors = vec![0usize; n];
        loop {
            if edges.iter().all(|&(u, v)| colors[u] != colors[v]) {
                return k;
            }
            // Advance the base-k odometer.
            let mut pos = 0;
            while pos < n {
                colors[pos] += 1;
                if colors[pos] < k {
                    break;
                }
                colors[pos] = 0;
                pos += 1;
            }
            if pos == n {
                break;
            }
        }
    }
    unreachable!("every graph is n-colorable")
}

/// Every simple cycle, each reported once (smallest vertex first, fixed
/// orientation).
pub fn all_cycles(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut out = Vec::new();
    let mut path = Vec::new();
    let mut visited = vec![false; n];
    fn dfs(
        g: &Graph,
        s: usize,
        path: &mut Vec<usize>,
        visited: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        let v = *path.last().unwrap();
        for w in g.neighbors(v).iter() {
            if w == s {
                if path.len() >= 3 && path[1] < v {
                    out.push(path.clone());
                }
            } else if w > s && !visited[w] {
                visited[w] = true;
                path.push(w);
                dfs(g, s, path, visited, out);
                path.pop();
                visited[w] = false;
            }
        }
    }
    for s in 0..n {
        path.clear();
        path.push(s);
        visited.fill(false);
        visited[s] = true;
        dfs(g, s, &mut path, &mut visited, &mut out);
    }
    out
}

/// Direct-definition near-acyclicity oracle: some independent S with H−S a
/// forest such that every odd cycle meets S in at least two vertices.
/// Exponential in |V|; for sweep-sized graphs only.
pub fn oracle_near_acyclic(h: &Graph) -> bool {
    let n = h.order();
    assert!(n <= 20);
    let odd_cycles: Vec<u32> = all_cycles(h)
        .into_iter()
        .filter(|c| c.len() % 2 == 1)
        .map(|c| c.iter().fold(0u32, |acc, &v| acc | 1 << v))
        .collect();
    let edges = h.edges();
    's: for s_mask in 0u32..(1 << n) {
        // S independent
        for &(u, v) in &edges {
            if s_mask >> u & 1 == 1 && s_mask >> v & 1 == 1 {
                continue 's;
            }
        }
        // H - S acyclic
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut Vec<usize>, mut v: usize) -> usize {
            while parent[v] != v {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            v
        }
        let mut acyclic = true;
        for &(u, v) in &edges {
            if s_mask >> u & 1 == 0 && s_mask >> v & 1 == 0 {
                let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                if ru == rv {
                    acyclic = false;
                    break;
                }
                parent[ru] = rv;
            }
        }
        if !acyclic {
            continue 's;
        }
        // every odd cycle meets S at least twice
        if odd_cycles.iter().all(|&c| (c & s_mask).count_ones() >= 2) {
            return true;
        }
    }
    false
}

/// Seeded connected 3-chromatic random graph (rejection sampling).
pub fn random_connected_chi3(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    loop {
        let mut g = Graph::empty(n);
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen_bool(0.35) {
                    g.add_edge(i, j);
                }
            }
        }
        if !g.is_connected() {
            continue;
        }
        if g.bipartition().is_some() {
            continue;
        }
        // 3-colorable?
        let mut budget = crate::search::Budget::new(10_000_000);
        match crate::chromatic::colorable(&g, 3, &mut budget) {
            Some(Some(_)) => return g,
            _ => continue,
        }
    }
}
