//! Immutable simple graphs over contiguous vertex ids, plus vertex sets
//! and uniform hypergraphs.
//!
//! Graphs are values: every operation returns a new graph, and subgraph
//! operations return an explicit id remap so witnesses computed on the
//! subgraph can be translated back. Adjacency is stored as sorted neighbor
//! lists; nothing in this module depends on hash iteration order.

use crate::{Error, Result};
use std::fmt;

/// A sorted, duplicate-free set of vertex ids.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(vec![v])
    }

    /// Builds a set from arbitrary ids, sorting and deduplicating.
    pub fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn insert(&mut self, v: usize) -> bool {
        match self.0.binary_search(&v) {
            Ok(_) => false,
            Err(i) => {
                self.0.insert(i, v);
                true
            }
        }
    }

    pub fn remove(&mut self, v: usize) -> bool {
        match self.0.binary_search(&v) {
            Ok(i) => {
                self.0.remove(i);
                true
            }
            Err(_) => false,
        }
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn min(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn max(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet::from_iter(self.iter().chain(other.iter()))
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&v| !other.contains(v)).collect())
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&v| other.contains(v)).collect())
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn without(&self, v: usize) -> VertexSet {
        VertexSet(self.iter().filter(|&u| u != v).collect())
    }

    pub fn with(&self, v: usize) -> VertexSet {
        let mut s = self.clone();
        s.insert(v);
        s
    }

    /// All ids 0..n.
    pub fn full(n: usize) -> Self {
        VertexSet((0..n).collect())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_iter(iter)
    }
}

/// Bijection between the ids of a subgraph and the ids of its parent.
///
/// `kept[new] = old`; `kept` is sorted, so lookups in both directions are
/// binary searches and the map preserves relative order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Remap {
    kept: Vec<usize>,
}

impl Remap {
    pub fn identity(n: usize) -> Self {
        Remap {
            kept: (0..n).collect(),
        }
    }

    pub fn to_old(&self, new: usize) -> usize {
        self.kept[new]
    }

    pub fn to_new(&self, old: usize) -> Option<usize> {
        self.kept.binary_search(&old).ok()
    }

    pub fn set_to_old(&self, s: &VertexSet) -> VertexSet {
        VertexSet::from_iter(s.iter().map(|v| self.to_old(v)))
    }

    pub fn set_to_new(&self, s: &VertexSet) -> VertexSet {
        VertexSet::from_iter(s.iter().filter_map(|v| self.to_new(v)))
    }

    pub fn len(&self) -> usize {
        self.kept.len()
    }

    pub fn is_empty(&self) -> bool {
        self.kept.is_empty()
    }
}

/// A simple undirected graph on vertices `0..n`.
///
/// Invariants: no self-loops, no parallel edges, symmetric adjacency,
/// sorted neighbor lists.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list. Duplicate edges collapse;
    /// self-loops and out-of-range ids are input errors.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::OutOfRange { v: u, n });
            }
            if v >= n {
                return Err(Error::OutOfRange { v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|l| l.len()).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as ordered pairs (u, v) with u < v, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Open neighborhood of a set: all neighbors of members, minus the set.
    pub fn neighborhood(&self, s: &VertexSet) -> VertexSet {
        VertexSet::from_iter(
            s.iter()
                .flat_map(|v| self.adj[v].iter().copied())
                .filter(|&u| !s.contains(u)),
        )
    }

    pub fn is_independent_set(&self, s: &VertexSet) -> bool {
        s.iter()
            .all(|u| self.adj[u].iter().all(|&v| !s.contains(v)))
    }

    fn check_set(&self, s: &VertexSet) -> Result<()> {
        if let Some(v) = s.max() {
            if v >= self.n() {
                return Err(Error::OutOfRange { v, n: self.n() });
            }
        }
        Ok(())
    }

    /// Subgraph induced by `s`, with the old-to-new id remap.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(Graph, Remap)> {
        self.check_set(s)?;
        let remap = Remap {
            kept: s.iter().collect(),
        };
        let mut adj = vec![Vec::new(); s.len()];
        for (new_u, &old_u) in remap.kept.iter().enumerate() {
            for &old_v in &self.adj[old_u] {
                if let Some(new_v) = remap.to_new(old_v) {
                    adj[new_u].push(new_v);
                }
            }
        }
        Ok((Graph { adj }, remap))
    }

    /// The graph with the vertices of `s` deleted; equals the subgraph
    /// induced by the complement of `s`.
    pub fn remove_vertices(&self, s: &VertexSet) -> Result<(Graph, Remap)> {
        self.check_set(s)?;
        let keep = VertexSet::from_iter((0..self.n()).filter(|&v| !s.contains(v)));
        self.induced_subgraph(&keep)
    }

    /// Connected components as a partition of the vertex set, ordered by
    /// minimum vertex id.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut parts = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            let mut part = Vec::new();
            seen[start] = true;
            while let Some(v) = stack.pop() {
                part.push(v);
                for &u in &self.adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
            parts.push(VertexSet::from_iter(part));
        }
        parts
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Disjoint union: the second graph's ids are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let mut adj = self.adj.clone();
        for list in &other.adj {
            adj.push(list.iter().map(|&v| v + shift).collect());
        }
        Graph { adj }
    }

    /// The graph plus one fresh vertex (id `n`) adjacent to exactly
    /// `targets`.
    pub fn with_apex(&self, targets: &VertexSet) -> Result<Graph> {
        self.check_set(targets)?;
        let apex = self.n();
        let mut adj = self.adj.clone();
        adj.push(targets.iter().collect());
        for v in targets.iter() {
            adj[v].push(apex);
        }
        Ok(Graph { adj })
    }

    /// True if `s` covers every edge.
    pub fn is_vertex_cover(&self, s: &VertexSet) -> bool {
        self.edges().all(|(u, v)| s.contains(u) || s.contains(v))
    }

    /// 2-coloring per component (BFS from the smallest id), or None if an
    /// odd cycle exists. Color 0 is the side of each component's smallest
    /// vertex.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let n = self.n();
        let mut color = vec![usize::MAX; n];
        for start in 0..n {
            if color[start] != usize::MAX {
                continue;
            }
            color[start] = 0;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &u in &self.adj[v] {
                    if color[u] == usize::MAX {
                        color[u] = 1 - color[v];
                        queue.push_back(u);
                    } else if color[u] == color[v] {
                        return None;
                    }
                }
            }
        }
        let left = VertexSet::from_iter((0..n).filter(|&v| color[v] == 0));
        let right = VertexSet::from_iter((0..n).filter(|&v| color[v] == 1));
        Some((left, right))
    }

    pub fn is_forest(&self) -> bool {
        // A forest has exactly n - c edges for c components.
        self.edge_count() + self.connected_components().len() == self.n()
    }

    pub fn is_clique(&self) -> bool {
        let n = self.n();
        self.edge_count() == n * n.saturating_sub(1) / 2
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// A d-uniform hypergraph: every edge has exactly `arity` distinct
/// vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    arity: usize,
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    pub fn new(n: usize, arity: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        for (index, e) in edges.iter().enumerate() {
            let mut sorted = e.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != arity || e.len() != arity {
                return Err(Error::BadArity {
                    index,
                    arity,
                    got: sorted.len(),
                });
            }
            if let Some(&v) = sorted.last() {
                if v >= n {
                    return Err(Error::OutOfRange { v, n });
                }
            }
        }
        let mut edges: Vec<Vec<usize>> = edges
            .into_iter()
            .map(|mut e| {
                e.sort_unstable();
                e
            })
            .collect();
        edges.sort();
        Ok(Hypergraph { n, arity, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    /// True if `s` meets every hyperedge.
    pub fn is_cover(&self, s: &VertexSet) -> bool {
        self.edges.iter().all(|e| e.iter().any(|&v| s.contains(v)))
    }
}

/// Convenience constructors used throughout the tests.
pub mod small {
    use super::Graph;

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn clique(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Graph::from_edges(leaves + 1, &edges).unwrap()
    }

    pub fn petersen() -> Graph {
        let edges = [
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 0),
            (5, 7),
            (7, 9),
            (9, 6),
            (6, 8),
            (8, 5),
            (0, 5),
            (1, 6),
            (2, 7),
            (3, 8),
            (4, 9),
        ];
        Graph::from_edges(10, &edges).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::small::*;

    #[test]
    fn induced_subgraph_of_clique_is_clique() {
        let g = clique(3);
        let (h, remap) = g
            .induced_subgraph(&VertexSet::from_iter([0, 1]))
            .unwrap();
        assert_eq!(h.n(), 2);
        assert_eq!(h.edge_count(), 1);
        assert_eq!(remap.to_old(0), 0);
        assert_eq!(remap.to_old(1), 1);
    }

    #[test]
    fn induced_subgraph_empty_set() {
        let g = clique(4);
        let (h, _) = g.induced_subgraph(&VertexSet::new()).unwrap();
        assert_eq!(h.n(), 0);
        assert_eq!(h.edge_count(), 0);
    }

    #[test]
    fn induced_subgraph_of_path_by_definition() {
        // P4 is 0-1-2-3; keeping {0, 2, 3} leaves only the edge {2, 3}.
        let g = path(4);
        let s = VertexSet::from_iter([0, 2, 3]);
        let (h, remap) = g.induced_subgraph(&s).unwrap();
        assert_eq!(h.n(), 3);
        let mut expected: Vec<(usize, usize)> = Vec::new();
        for (iu, u) in s.iter().enumerate() {
            for (iv, v) in s.iter().enumerate() {
                if iu < iv && g.has_edge(u, v) {
                    expected.push((iu, iv));
                }
            }
        }
        assert_eq!(h.edges().collect::<Vec<_>>(), expected);
        assert_eq!(expected, vec![(1, 2)]);
        assert_eq!(remap.to_old(1), 2);
        assert_eq!(remap.to_old(2), 3);
    }

    #[test]
    fn induced_subgraph_rejects_out_of_range() {
        let g = path(3);
        let err = g.induced_subgraph(&VertexSet::from_iter([0, 3])).unwrap_err();
        assert!(matches!(err, Error::OutOfRange { v: 3, n: 3 }));
    }

    #[test]
    fn remove_middle_of_path() {
        let g = path(3);
        let (h, _) = g.remove_vertices(&VertexSet::singleton(1)).unwrap();
        assert_eq!(h.n(), 2);
        assert_eq!(h.edge_count(), 0);
    }

    #[test]
    fn remove_nothing_is_identity() {
        let g = cycle(5);
        let (h, remap) = g.remove_vertices(&VertexSet::new()).unwrap();
        assert_eq!(h, g);
        assert_eq!(remap, Remap::identity(5));
    }

    #[test]
    fn remove_vertex_from_clique() {
        let g = clique(4);
        let (h, _) = g.remove_vertices(&VertexSet::singleton(0)).unwrap();
        assert_eq!(h, clique(3));
    }

    #[test]
    fn components_of_two_disjoint_edges() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let parts = g.connected_components();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0], VertexSet::from_iter([0, 1]));
        assert_eq!(parts[1], VertexSet::from_iter([2, 3]));
    }

    #[test]
    fn components_of_connected_and_empty() {
        assert_eq!(cycle(4).connected_components().len(), 1);
        assert!(Graph::empty(0).connected_components().is_empty());
    }

    #[test]
    fn disjoint_union_shifts_ids() {
        let g = clique(2).disjoint_union(&clique(3));
        assert_eq!(g.n(), 5);
        let parts = g.connected_components();
        assert_eq!(parts[0].len(), 2);
        assert_eq!(parts[1].len(), 3);
        assert!(g.has_edge(2, 3));
        assert!(!g.has_edge(1, 2));
    }

    #[test]
    fn disjoint_union_with_empty_is_identity() {
        let g = petersen();
        assert_eq!(Graph::empty(0).disjoint_union(&g), g);
    }

    #[test]
    fn from_edges_rejects_self_loop() {
        assert!(matches!(
            Graph::from_edges(2, &[(0, 0)]).unwrap_err(),
            Error::SelfLoop(0)
        ));
    }

    #[test]
    fn bipartition_of_even_cycle() {
        let (l, r) = cycle(4).bipartition().unwrap();
        assert_eq!(l, VertexSet::from_iter([0, 2]));
        assert_eq!(r, VertexSet::from_iter([1, 3]));
        assert!(cycle(5).bipartition().is_none());
    }

    #[test]
    fn forest_and_clique_predicates() {
        assert!(path(5).is_forest());
        assert!(!cycle(4).is_forest());
        assert!(clique(4).is_clique());
        assert!(!path(3).is_clique());
    }

    #[test]
    fn hypergraph_rejects_bad_arity() {
        let err = Hypergraph::new(4, 3, vec![vec![0, 1, 1]]).unwrap_err();
        assert!(matches!(err, Error::BadArity { .. }));
        let h = Hypergraph::new(4, 3, vec![vec![2, 0, 1]]).unwrap();
        assert_eq!(h.edges()[0], vec![0, 1, 2]);
    }

    #[test]
    fn neighborhood_is_open() {
        let g = path(4);
        let s = VertexSet::from_iter([1, 2]);
        assert_eq!(g.neighborhood(&s), VertexSet::from_iter([0, 3]));
    }
}
