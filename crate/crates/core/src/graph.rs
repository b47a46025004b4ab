//! Immutable simple undirected graphs on dense vertex indices.

use std::fmt;

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// Simple undirected graph on `0..n` with one adjacency bitset per vertex.
///
/// Adjacency is symmetric and irreflexive by construction. Derived graphs
/// (induced subgraphs, deletions, unions) are new values; the operations that
/// renumber vertices also hand back a map to the original labels.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        Ok(Graph { n, adj: vec![VertexSet::empty(n); n] })
    }

    /// Builds a graph from unordered pairs. Duplicate pairs collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let edges: Vec<_> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
        Self::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!("a cycle needs at least 3 vertices, got {n}")));
        }
        let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        Self::from_edges(n, &edges)
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_edges(n, &edges)
    }

    /// `K_{1,leaves}` with the center at vertex 0.
    pub fn star(leaves: usize) -> Result<Self> {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Self::from_edges(leaves + 1, &edges)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` pairs with `u < v`, ordered by `v` then `u`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |v| self.adj[v].iter().take_while(move |&u| u < v).map(move |u| (u, v)))
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v];
        s.insert(v);
        s
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// `deg_S(v) = |N(v) ∩ S|`.
    #[inline]
    pub fn degree_in(&self, v: usize, set: &VertexSet) -> usize {
        (self.adj[v] & *set).len()
    }

    /// Maximum degree; 0 for the empty graph.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::empty(self.n)
    }

    /// `N(S)`: every vertex adjacent to some member of `set`.
    pub fn open_neighborhood(&self, set: &VertexSet) -> VertexSet {
        set.iter().fold(self.empty_set(), |acc, v| acc | self.adj[v])
    }

    /// `N[S] = N(S) ∪ S`.
    pub fn closed_neighborhood(&self, set: &VertexSet) -> VertexSet {
        self.open_neighborhood(set) | *set
    }

    /// Subgraph induced by `keep`, renumbered in ascending order. The returned
    /// map sends each new index to its original label.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> (Graph, Vec<usize>) {
        let map = keep.to_vec();
        let m = map.len();
        let mut index = vec![usize::MAX; self.n];
        for (new, &old) in map.iter().enumerate() {
            index[old] = new;
        }
        let mut adj = vec![VertexSet::empty(m); m];
        for (new, &old) in map.iter().enumerate() {
            for u in (self.adj[old] & *keep).iter() {
                adj[new].insert(index[u]);
            }
        }
        (Graph { n: m, adj }, map)
    }

    /// `G − S`.
    pub fn remove_vertices(&self, set: &VertexSet) -> (Graph, Vec<usize>) {
        self.induced_subgraph(&(self.vertices() - *set))
    }

    /// `G − N[S]`.
    pub fn delete_closed_neighborhood(&self, set: &VertexSet) -> (Graph, Vec<usize>) {
        self.remove_vertices(&self.closed_neighborhood(set))
    }

    /// Places `parts` side by side. The second value holds each part's index
    /// offset in the union.
    pub fn disjoint_union(parts: &[Graph]) -> Result<(Graph, Vec<usize>)> {
        let total: usize = parts.iter().map(Graph::n).sum();
        let mut g = Graph::empty(total)?;
        let mut offsets = Vec::with_capacity(parts.len());
        let mut offset = 0;
        for part in parts {
            offsets.push(offset);
            for (u, v) in part.edges() {
                g.adj[u + offset].insert(v + offset);
                g.adj[v + offset].insert(u + offset);
            }
            offset += part.n;
        }
        Ok((g, offsets))
    }

    /// Connected components, ordered by their least vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = self.empty_set();
        let mut out = Vec::new();
        while let Some(root) = (self.vertices() - seen).first() {
            let mut comp = VertexSet::singleton(self.n, root);
            let mut frontier = comp;
            while !frontier.is_empty() {
                frontier = self.open_neighborhood(&frontier) - comp;
                comp |= frontier;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Lifts a set expressed in a derived graph's indices back to this graph.
    pub fn lift(&self, set: &VertexSet, map: &[usize]) -> VertexSet {
        set.iter().fold(self.empty_set(), |mut acc, v| {
            acc.insert(map[v]);
            acc
        })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("n", &self.n).field("edges", &self.edges().collect::<Vec<_>>()).finish()
    }
}
