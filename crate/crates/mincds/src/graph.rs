use crate::union_find::UnionFind;
use crate::vertex_set::VertexSet;
use thiserror::Error;

/// Undirected, connected, simple graph on vertices `0..n` with `n >= 2`.
///
/// Vertices are 0-indexed everywhere in the API; the text format and the CLI
/// present them 1-indexed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<u32>>,
    edges: Vec<(u32, u32)>,
    max_degree: usize,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph needs at least 2 vertices, got {n}")]
    TooFewVertices { n: usize },
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop at vertex {v}")]
    SelfLoop { v: usize },
    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: usize, v: usize },
    #[error("graph is not connected")]
    Disconnected,
}

impl Graph {
    /// Builds a graph from undirected edges, rejecting self-loops, duplicate
    /// edges (in either orientation), out-of-range endpoints and disconnected
    /// inputs.
    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        if n < 2 {
            return Err(GraphError::TooFewVertices { n });
        }
        let mut normalized: Vec<(u32, u32)> = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { v });
            }
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            normalized.push((a as u32, b as u32));
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge {
                u: w[0].0 as usize,
                v: w[0].1 as usize,
            });
        }

        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &normalized {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let max_degree = adj.iter().map(Vec::len).max().unwrap_or(0);

        let graph = Graph {
            adj,
            edges: normalized,
            max_degree,
        };
        if !graph.is_cds(&VertexSet::from_members(n, &(0..n).collect::<Vec<_>>())) {
            return Err(GraphError::Disconnected);
        }
        Ok(graph)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    /// Number of connected components of the subgraph induced by `set`
    /// (its vertices and the edges with both endpoints inside it).
    ///
    /// The empty set has 0 components.
    pub fn induced_components(&self, set: &VertexSet) -> usize {
        let mut uf = UnionFind::new(self.vertex_count());
        for u in set.iter() {
            for &w in &self.adj[u] {
                let w = w as usize;
                if w > u && set.contains(w) {
                    uf.union(u as u32, w as u32);
                }
            }
        }
        set.len() - uf.merges()
    }

    /// Number of connected components of the spanning subgraph that keeps all
    /// vertices but only the edges covered by `set` (at least one endpoint in
    /// it).
    ///
    /// The empty set covers nothing, leaving `n` isolated vertices.
    pub fn covered_components(&self, set: &VertexSet) -> usize {
        let mut uf = UnionFind::new(self.vertex_count());
        for u in set.iter() {
            for &w in &self.adj[u] {
                uf.union(u as u32, w);
            }
        }
        self.vertex_count() - uf.merges()
    }

    /// Whether `set` is a connected dominating set: every vertex outside it
    /// has a neighbor inside, and the subgraph it induces is connected.
    ///
    /// Decided by a direct domination scan plus a traversal, independently of
    /// the component counters above.
    pub fn is_cds(&self, set: &VertexSet) -> bool {
        if set.is_empty() {
            return false;
        }
        for v in 0..self.vertex_count() {
            if !set.contains(v) && !self.adj[v].iter().any(|&w| set.contains(w as usize)) {
                return false;
            }
        }
        let start = set.iter().next().expect("set is nonempty");
        let mut seen = VertexSet::empty(self.vertex_count());
        seen.insert(start);
        let mut queue = vec![start];
        while let Some(u) = queue.pop() {
            for &w in &self.adj[u] {
                let w = w as usize;
                if set.contains(w) && seen.insert(w) {
                    queue.push(w);
                }
            }
        }
        seen.len() == set.len()
    }
}

/// Connectivity check on a raw edge list, usable before a [`Graph`] exists.
/// Out-of-range endpoints count as disconnected.
pub fn is_connected(n: usize, edges: &[(usize, usize)]) -> bool {
    if n == 0 {
        return false;
    }
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        if u >= n || v >= n {
            return false;
        }
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut queue = vec![0];
    let mut reached = 1;
    while let Some(u) = queue.pop() {
        for &w in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                reached += 1;
                queue.push(w);
            }
        }
    }
    reached == n
}
