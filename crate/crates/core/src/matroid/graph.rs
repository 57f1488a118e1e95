use std::collections::VecDeque;

use crate::{Error, Result, Subset};

/// Cap on vertex count; vertices beyond the edge endpoints only cost memory.
pub const MAX_VERTICES: usize = 1 << 16;

/// A multigraph whose edges are the elements of its cycle matroid.
///
/// Loops and parallel edges are allowed. Vertices and edges are zero-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Graph> {
        if vertices > MAX_VERTICES {
            return Err(Error::InvalidGraph(format!(
                "{vertices} vertices exceeds the limit {MAX_VERTICES}"
            )));
        }
        for (k, &(u, v)) in edges.iter().enumerate() {
            if u >= vertices || v >= vertices {
                return Err(Error::InvalidGraph(format!(
                    "edge {} has endpoint outside 1..={vertices}",
                    k + 1
                )));
            }
        }
        Ok(Graph { vertices, edges })
    }

    /// The complete graph on `k` vertices, edges in lexicographic order.
    pub fn complete(k: usize) -> Graph {
        let edges = (0..k)
            .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
            .collect();
        Graph { vertices: k, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// `|V| - #components` of the spanning subgraph with edge set `s`.
    pub fn rank(&self, s: Subset) -> usize {
        let mut dsu = DisjointSets::new(self.vertices);
        s.iter()
            .filter(|&e| {
                let (u, v) = self.edges[e];
                dsu.union(u, v)
            })
            .count()
    }

    pub fn component_count(&self) -> usize {
        self.vertices - self.rank(Subset::full(self.edges.len()))
    }

    pub fn is_connected(&self) -> bool {
        self.vertices == 0 || self.component_count() == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|&(a, b)| usize::from(a == v) + usize::from(b == v))
            .sum()
    }

    fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.vertices];
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            adj[u].push((v, e));
            if u != v {
                adj[v].push((u, e));
            }
        }
        adj
    }

    pub fn is_bipartite(&self) -> bool {
        let adj = self.adjacency();
        let mut color = vec![u8::MAX; self.vertices];
        for start in 0..self.vertices {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &(v, _) in &adj[u] {
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Length of a shortest cycle, `None` for a forest.
    pub fn girth(&self) -> Option<usize> {
        if self.edges.iter().any(|&(u, v)| u == v) {
            return Some(1);
        }
        let adj = self.adjacency();
        let mut best: Option<usize> = None;
        for root in 0..self.vertices {
            let mut dist = vec![usize::MAX; self.vertices];
            let mut via = vec![usize::MAX; self.vertices];
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &(v, e) in &adj[u] {
                    if e == via[u] {
                        continue;
                    }
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        via[v] = e;
                        queue.push_back(v);
                    } else {
                        let len = dist[u] + dist[v] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }
}

pub(crate) struct DisjointSets {
    parent: Vec<u32>,
}

impl DisjointSets {
    pub(crate) fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n as u32).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            let p = self.parent[x] as usize;
            self.parent[x] = self.parent[p];
            x = p;
        }
        x
    }

    /// Returns `true` when `a` and `b` were in different sets.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb as u32;
        true
    }
}
