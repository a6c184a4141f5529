//! Elimination distance to a base class, elimination forests, and exact
//! vertex cover solving on graphs of bounded elimination distance.
//!
//! The distance of a graph to a class is 0 for members, the max over
//! connected components when disconnected, and otherwise one more than the
//! best distance achievable by deleting a single vertex. An elimination
//! forest witnesses a distance bound: internal nodes carry one deleted
//! vertex each, leaves carry base components that are class members, and
//! every edge of the graph runs inside a bag or between an ancestor and a
//! descendant.

use crate::graph::{Graph, VertexSet};
use crate::oracle::ClassOracle;
use crate::solver::Cover;
use crate::{Error, Result};
use std::collections::HashMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NodeKind {
    /// One deleted vertex.
    Internal(usize),
    /// A base component; the bag may be empty.
    Leaf(VertexSet),
}

#[derive(Clone, Debug)]
pub struct ForestNode {
    pub parent: Option<usize>,
    pub children: Vec<usize>,
    pub kind: NodeKind,
}

/// A rooted forest witnessing an elimination distance bound. The height is
/// the maximum number of internal nodes on any root-to-leaf path.
#[derive(Clone, Debug)]
pub struct EliminationForest {
    nodes: Vec<ForestNode>,
    roots: Vec<usize>,
    height: usize,
}

impl EliminationForest {
    pub fn nodes(&self) -> &[ForestNode] {
        &self.nodes
    }

    pub fn roots(&self) -> &[usize] {
        &self.roots
    }

    pub fn height(&self) -> usize {
        self.height
    }

    /// Vertices sitting at the roots of internal-rooted trees.
    pub fn root_vertices(&self) -> VertexSet {
        self.roots
            .iter()
            .filter_map(|&r| match &self.nodes[r].kind {
                NodeKind::Internal(v) => Some(*v),
                NodeKind::Leaf(_) => None,
            })
            .collect()
    }

    /// All vertices across all bags.
    pub fn vertices(&self) -> VertexSet {
        let mut out = Vec::new();
        for node in &self.nodes {
            match &node.kind {
                NodeKind::Internal(v) => out.push(*v),
                NodeKind::Leaf(bag) => out.extend(bag.iter()),
            }
        }
        VertexSet::from_iter(out)
    }

    fn is_ancestor(&self, anc: usize, node: usize) -> bool {
        let mut cur = Some(node);
        while let Some(x) = cur {
            if x == anc {
                return true;
            }
            cur = self.nodes[x].parent;
        }
        false
    }
}

/// Incremental construction of a forest; `finish` wires children and
/// computes the height.
#[derive(Default)]
pub struct ForestBuilder {
    nodes: Vec<ForestNode>,
}

impl ForestBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn internal(&mut self, parent: Option<usize>, vertex: usize) -> usize {
        self.nodes.push(ForestNode {
            parent,
            children: Vec::new(),
            kind: NodeKind::Internal(vertex),
        });
        self.nodes.len() - 1
    }

    pub fn leaf(&mut self, parent: Option<usize>, bag: VertexSet) -> usize {
        self.nodes.push(ForestNode {
            parent,
            children: Vec::new(),
            kind: NodeKind::Leaf(bag),
        });
        self.nodes.len() - 1
    }

    pub fn finish(mut self) -> EliminationForest {
        let mut roots = Vec::new();
        let ids: Vec<usize> = (0..self.nodes.len()).collect();
        for &i in &ids {
            match self.nodes[i].parent {
                Some(p) => self.nodes[p].children.push(i),
                None => roots.push(i),
            }
        }
        let mut height = 0;
        for &i in &ids {
            if matches!(self.nodes[i].kind, NodeKind::Leaf(_)) || self.nodes[i].children.is_empty()
            {
                let mut depth = 0;
                let mut cur = i;
                loop {
                    if matches!(self.nodes[cur].kind, NodeKind::Internal(_)) {
                        depth += 1;
                    }
                    match self.nodes[cur].parent {
                        Some(p) => cur = p,
                        None => break,
                    }
                }
                height = height.max(depth);
            }
        }
        EliminationForest {
            nodes: self.nodes,
            roots,
            height,
        }
    }
}

/// Memo for the exponential branch-and-recurse distance computation,
/// keyed on the exact labeled subgraph after remapping to contiguous ids.
/// Keying on labels loses cache hits across isomorphic subgraphs but never
/// correctness.
#[derive(Default)]
pub struct EdMemo {
    exact: HashMap<Graph, usize>,
    exceeds: HashMap<Graph, usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdOutcome {
    Within(usize),
    Exceeds,
}

impl EdOutcome {
    pub fn value(self) -> Option<usize> {
        match self {
            EdOutcome::Within(d) => Some(d),
            EdOutcome::Exceeds => None,
        }
    }
}

/// Exact elimination distance when it is at most `limit`, else `Exceeds`.
pub fn elimination_distance(g: &Graph, oracle: &ClassOracle, limit: usize) -> EdOutcome {
    let mut memo = EdMemo::default();
    ed_rec(g, oracle, limit, &mut memo)
}

fn ed_rec(g: &Graph, oracle: &ClassOracle, limit: usize, memo: &mut EdMemo) -> EdOutcome {
    let comps = g.connected_components();
    if comps.len() > 1 {
        let mut worst = 0;
        for comp in comps {
            let (sub, _) = g.induced_subgraph(&comp).expect("component in range");
            match ed_rec(&sub, oracle, limit, memo) {
                EdOutcome::Within(d) => worst = worst.max(d),
                EdOutcome::Exceeds => return EdOutcome::Exceeds,
            }
        }
        return EdOutcome::Within(worst);
    }
    if oracle.member(g) {
        return EdOutcome::Within(0);
    }
    if limit == 0 {
        return EdOutcome::Exceeds;
    }
    if let Some(&d) = memo.exact.get(g) {
        return if d <= limit {
            EdOutcome::Within(d)
        } else {
            EdOutcome::Exceeds
        };
    }
    if let Some(&l) = memo.exceeds.get(g) {
        if l >= limit {
            return EdOutcome::Exceeds;
        }
    }
    let mut best: Option<usize> = None;
    for v in 0..g.n() {
        let bound = match best {
            // Only a strictly better branch matters.
            Some(b) => {
                if b == 1 {
                    break;
                }
                (b - 2).min(limit - 1)
            }
            None => limit - 1,
        };
        let (sub, _) = g
            .remove_vertices(&VertexSet::singleton(v))
            .expect("vertex in range");
        if let EdOutcome::Within(d) = ed_rec(&sub, oracle, bound, memo) {
            best = Some(best.map_or(d + 1, |b| b.min(d + 1)));
        }
    }
    match best {
        Some(d) => {
            memo.exact.insert(g.clone(), d);
            EdOutcome::Within(d)
        }
        None => {
            let entry = memo.exceeds.entry(g.clone()).or_insert(limit);
            *entry = (*entry).max(limit);
            EdOutcome::Exceeds
        }
    }
}

/// A valid elimination forest of height at most `d`, or `None` exactly
/// when the distance exceeds `d`. The returned forest has optimal height
/// and is validated against all invariants before return.
pub fn elimination_forest(
    g: &Graph,
    oracle: &ClassOracle,
    d: usize,
) -> Option<EliminationForest> {
    let mut memo = EdMemo::default();
    ed_rec(g, oracle, d, &mut memo).value()?;
    let mut builder = ForestBuilder::new();
    let ids: Vec<usize> = (0..g.n()).collect();
    build_forest(g, &ids, oracle, d, None, &mut builder, &mut memo);
    let forest = builder.finish();
    debug_assert!(verify_forest(g, &forest, oracle));
    Some(forest)
}

fn build_forest(
    g: &Graph,
    old_ids: &[usize],
    oracle: &ClassOracle,
    d: usize,
    parent: Option<usize>,
    builder: &mut ForestBuilder,
    memo: &mut EdMemo,
) {
    let comps = g.connected_components();
    if comps.len() > 1 {
        for comp in comps {
            let (sub, remap) = g.induced_subgraph(&comp).expect("component in range");
            let sub_old: Vec<usize> = (0..sub.n()).map(|w| old_ids[remap.to_old(w)]).collect();
            build_forest(&sub, &sub_old, oracle, d, parent, builder, memo);
        }
        return;
    }
    if oracle.member(g) {
        builder.leaf(parent, VertexSet::from_iter(old_ids.iter().copied()));
        return;
    }
    let target = ed_rec(g, oracle, d, memo)
        .value()
        .expect("caller checked the bound");
    // Smallest vertex whose deletion achieves the optimal distance.
    for v in 0..g.n() {
        let (sub, remap) = g
            .remove_vertices(&VertexSet::singleton(v))
            .expect("vertex in range");
        if ed_rec(&sub, oracle, target - 1, memo).value().is_some() {
            let node = builder.internal(parent, old_ids[v]);
            let sub_old: Vec<usize> = (0..sub.n()).map(|w| old_ids[remap.to_old(w)]).collect();
            build_forest(&sub, &sub_old, oracle, target - 1, Some(node), builder, memo);
            return;
        }
    }
    unreachable!("some vertex must achieve the computed distance");
}

/// Checks the forest invariants: singleton internal bags (by
/// construction), class membership of every leaf bag, bags partitioning
/// the vertex set, every edge within a bag or along an ancestor-descendant
/// pair, and the stored height matching the structure.
pub fn verify_forest(g: &Graph, forest: &EliminationForest, oracle: &ClassOracle) -> bool {
    verify_forest_detail(g, forest, oracle).is_ok()
}

pub fn verify_forest_detail(
    g: &Graph,
    forest: &EliminationForest,
    oracle: &ClassOracle,
) -> Result<()> {
    let fail = |msg: String| Err(Error::InvalidForest(msg));
    // Bags partition V(G).
    let mut node_of = vec![usize::MAX; g.n()];
    for (i, node) in forest.nodes().iter().enumerate() {
        let members: Vec<usize> = match &node.kind {
            NodeKind::Internal(v) => vec![*v],
            NodeKind::Leaf(bag) => bag.iter().collect(),
        };
        for v in members {
            if v >= g.n() {
                return fail(format!("bag vertex {v} out of range"));
            }
            if node_of[v] != usize::MAX {
                return fail(format!("vertex {v} appears in two bags"));
            }
            node_of[v] = i;
        }
    }
    if let Some(v) = (0..g.n()).find(|&v| node_of[v] == usize::MAX) {
        return fail(format!("vertex {v} missing from every bag"));
    }
    // Leaf bags are class members.
    for node in forest.nodes() {
        if let NodeKind::Leaf(bag) = &node.kind {
            let (sub, _) = g.induced_subgraph(bag)?;
            if !oracle.member(&sub) {
                return fail(format!("leaf bag {bag} induces a non-member"));
            }
        }
    }
    // Edges run within a bag or between ancestor and descendant.
    for (u, v) in g.edges() {
        let (a, b) = (node_of[u], node_of[v]);
        if a != b && !forest.is_ancestor(a, b) && !forest.is_ancestor(b, a) {
            return fail(format!("edge {u}-{v} jumps between unrelated subtrees"));
        }
    }
    // Stored height matches the structure.
    let mut computed = 0;
    for (i, node) in forest.nodes().iter().enumerate() {
        if node.children.is_empty() {
            let mut depth = 0;
            let mut cur = i;
            loop {
                if matches!(forest.nodes()[cur].kind, NodeKind::Internal(_)) {
                    depth += 1;
                }
                match forest.nodes()[cur].parent {
                    Some(p) => cur = p,
                    None => break,
                }
            }
            computed = computed.max(depth);
        }
    }
    if computed != forest.height() {
        return fail(format!(
            "stored height {} but structure has height {computed}",
            forest.height()
        ));
    }
    Ok(())
}

/// Exact minimum vertex cover guided by an elimination forest.
///
/// At each internal vertex r the optimum is the better of taking r or
/// taking N(r). For hereditary classes the second branch just deletes
/// N[r]; shrunken leaf bags stay in the class. For non-hereditary classes
/// deleting bag vertices could leave the class, so instead each touched
/// base component keeps its bag vertices and gains one fresh apex adjacent
/// to the deleted-set part of the bag; the apexed component lies one
/// modulator vertex away from the class, where the oracle still solves
/// exactly, and the branch value is corrected by the apex bookkeeping.
pub fn solve_vc_bounded_ed(
    g: &Graph,
    forest: &EliminationForest,
    oracle: &ClassOracle,
) -> Result<Cover> {
    verify_forest_detail(g, forest, oracle)?;
    let internal_vertices: VertexSet = forest
        .nodes()
        .iter()
        .filter_map(|n| match &n.kind {
            NodeKind::Internal(v) => Some(*v),
            NodeKind::Leaf(_) => None,
        })
        .collect();
    let mut ctx = EdSolve {
        g,
        forest,
        oracle,
        internal_vertices,
        alive: vec![true; g.n()],
        groups: Vec::new(),
        next_handle: g.n(),
    };
    let (size, cover) = ctx.solve_nodes(forest.roots());
    debug_assert_eq!(size, cover.len());
    let set = VertexSet::from_iter(cover);
    debug_assert!(set.max().is_none_or(|v| v < g.n()), "apex handle escaped");
    Cover::new(g, set)
}

/// One apex attached to a leaf bag by a branch step; `handle` is a synthetic
/// id above the real vertex range.
struct ApexGroup {
    leaf: usize,
    targets: VertexSet,
    handle: usize,
}

struct EdSolve<'a> {
    g: &'a Graph,
    forest: &'a EliminationForest,
    oracle: &'a ClassOracle,
    internal_vertices: VertexSet,
    alive: Vec<bool>,
    groups: Vec<ApexGroup>,
    next_handle: usize,
}

impl<'a> EdSolve<'a> {
    fn solve_nodes(&mut self, nodes: &[usize]) -> (usize, Vec<usize>) {
        let mut size = 0;
        let mut cover = Vec::new();
        for &node in nodes {
            let (s, mut c) = self.solve_node(node);
            size += s;
            cover.append(&mut c);
        }
        (size, cover)
    }

    fn solve_node(&mut self, node: usize) -> (usize, Vec<usize>) {
        match &self.forest.nodes()[node].kind {
            NodeKind::Leaf(bag) => self.solve_leaf(node, bag.clone()),
            NodeKind::Internal(v) => {
                let v = *v;
                let children = self.forest.nodes()[node].children.clone();
                if !self.alive[v] {
                    return self.solve_nodes(&children);
                }
                // Branch: take v.
                self.alive[v] = false;
                let (sa, mut ca) = self.solve_nodes(&children);
                self.alive[v] = true;
                ca.push(v);
                let (sa, ca) = (sa + 1, ca);

                // Branch: take N(v). Neighbors above v are already dead, so
                // the live neighborhood sits inside this subtree.
                let nv: VertexSet = self
                    .g
                    .neighbors(v)
                    .iter()
                    .copied()
                    .filter(|&u| self.alive[u])
                    .collect();
                let (sb, cb) = if self.oracle.hereditary() {
                    self.branch_neighborhood_hereditary(v, &nv, &children)
                } else {
                    self.branch_neighborhood_apexed(v, &nv, &children)
                };
                if sa <= sb {
                    (sa, ca)
                } else {
                    (sb, cb)
                }
            }
        }
    }

    fn branch_neighborhood_hereditary(
        &mut self,
        v: usize,
        nv: &VertexSet,
        children: &[usize],
    ) -> (usize, Vec<usize>) {
        self.alive[v] = false;
        for u in nv.iter() {
            self.alive[u] = false;
        }
        let (s, mut c) = self.solve_nodes(children);
        self.alive[v] = true;
        for u in nv.iter() {
            self.alive[u] = true;
        }
        c.extend(nv.iter());
        (s + nv.len(), c)
    }

    fn branch_neighborhood_apexed(
        &mut self,
        v: usize,
        nv: &VertexSet,
        children: &[usize],
    ) -> (usize, Vec<usize>) {
        let z_int = nv.intersection(&self.internal_vertices);
        let z_bag = nv.difference(&z_int);
        self.alive[v] = false;
        for u in z_int.iter() {
            self.alive[u] = false;
        }
        let group_start = self.groups.len();
        let mut handles = VertexSet::new();
        for (leaf, node) in self.forest.nodes().iter().enumerate() {
            if let NodeKind::Leaf(bag) = &node.kind {
                let targets = bag.intersection(&z_bag);
                if !targets.is_empty() {
                    let handle = self.next_handle;
                    self.next_handle += 1;
                    handles.insert(handle);
                    self.groups.push(ApexGroup {
                        leaf,
                        targets,
                        handle,
                    });
                }
            }
        }
        let (s_hat, c_hat) = self.solve_nodes(children);
        self.groups.truncate(group_start);
        self.alive[v] = true;
        for u in z_int.iter() {
            self.alive[u] = true;
        }

        let cover_set = VertexSet::from_iter(c_hat.iter().copied());
        if z_bag.is_subset_of(&cover_set) {
            // The apexed solve paid for all of z_bag; no apex of this level
            // is in the cover, and the rest extends with N(v) directly.
            debug_assert!(handles.intersection(&cover_set).is_empty());
            let mut cover = c_hat;
            cover.extend(z_int.iter());
            (s_hat + nv.len() - z_bag.len(), cover)
        } else {
            // Some apex stood in for a bag vertex; fall back to covering
            // through v itself, which is never worse than the branch value.
            let mut cover: Vec<usize> = c_hat
                .into_iter()
                .filter(|&u| !handles.contains(u))
                .collect();
            cover.extend(nv.difference(&z_bag).iter());
            cover.push(v);
            cover.sort_unstable();
            cover.dedup();
            (cover.len(), cover)
        }
    }

    fn solve_leaf(&mut self, leaf: usize, bag: VertexSet) -> (usize, Vec<usize>) {
        let live_bag: VertexSet = bag.iter().filter(|&v| self.alive[v]).collect();
        let groups: Vec<(VertexSet, usize)> = self
            .groups
            .iter()
            .filter(|gr| gr.leaf == leaf)
            .map(|gr| (gr.targets.clone(), gr.handle))
            .collect();
        // Local graph: the live bag plus one apex vertex per group.
        let locals: Vec<usize> = live_bag.iter().collect();
        let local_of = |v: usize| locals.binary_search(&v).unwrap();
        let mut edges = Vec::new();
        for (i, &u) in locals.iter().enumerate() {
            for &w in self.g.neighbors(u) {
                if w > u && live_bag.contains(w) {
                    edges.push((i, local_of(w)));
                }
            }
        }
        let mut names: Vec<usize> = locals.clone();
        for (targets, handle) in &groups {
            let apex_local = names.len();
            names.push(*handle);
            for t in targets.iter() {
                edges.push((local_of(t), apex_local));
            }
        }
        let local = Graph::from_edges(names.len(), &edges).expect("leaf graph is simple");
        let cover = self.oracle.solve_in_class(&local);
        let mapped: Vec<usize> = cover.set().iter().map(|i| names[i]).collect();
        (mapped.len(), mapped)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::small::*;
    use crate::oracle::OracleTag;
    use crate::solver::opt_value;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn oracle(tag: OracleTag) -> ClassOracle {
        ClassOracle::new(tag)
    }

    #[test]
    fn distance_examples() {
        let indset = oracle(OracleTag::IndSet);
        assert_eq!(
            elimination_distance(&path(3), &indset, 3),
            EdOutcome::Within(1)
        );
        let forest_cls = oracle(OracleTag::Forest);
        assert_eq!(
            elimination_distance(&path(6), &forest_cls, 2),
            EdOutcome::Within(0)
        );
        let empty = oracle(OracleTag::Empty);
        assert_eq!(
            elimination_distance(&path(7), &empty, 5),
            EdOutcome::Within(3)
        );
    }

    #[test]
    fn treedepth_of_paths_matches_closed_form() {
        let empty = oracle(OracleTag::Empty);
        for n in 1..=15usize {
            let expected = (usize::BITS - n.leading_zeros()) as usize; // floor(log2 n) + 1
            assert_eq!(
                elimination_distance(&path(n), &empty, 6),
                EdOutcome::Within(expected),
                "P{n}"
            );
            assert_eq!(expected, ((n + 1) as f64).log2().ceil() as usize);
        }
    }

    #[test]
    fn clique_to_forest_needs_two_deletions() {
        let forest_cls = oracle(OracleTag::Forest);
        assert_eq!(
            elimination_distance(&clique(4), &forest_cls, 3),
            EdOutcome::Within(2)
        );
        assert!(elimination_forest(&clique(4), &forest_cls, 1).is_none());
        assert!(elimination_forest(&clique(4), &forest_cls, 2).is_some());
    }

    #[test]
    fn distance_is_max_over_components() {
        let indset = oracle(OracleTag::IndSet);
        let g = path(3).disjoint_union(&clique(3));
        let single = elimination_distance(&clique(3), &indset, 5).value().unwrap();
        assert_eq!(
            elimination_distance(&g, &indset, 5),
            EdOutcome::Within(single.max(1))
        );
    }

    #[test]
    fn forest_for_path_puts_middle_at_root() {
        let indset = oracle(OracleTag::IndSet);
        let f = elimination_forest(&path(3), &indset, 1).unwrap();
        assert_eq!(f.height(), 1);
        assert_eq!(f.roots().len(), 1);
        match &f.nodes()[f.roots()[0]].kind {
            NodeKind::Internal(v) => assert_eq!(*v, 1),
            other => panic!("expected internal root, got {other:?}"),
        }
    }

    #[test]
    fn member_gets_single_leaf() {
        let forest_cls = oracle(OracleTag::Forest);
        let g = path(4);
        let f = elimination_forest(&g, &forest_cls, 0).unwrap();
        assert_eq!(f.height(), 0);
        assert_eq!(f.nodes().len(), 1);
        assert_eq!(f.vertices(), VertexSet::full(4));
    }

    #[test]
    fn forest_exists_iff_distance_within() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for orc in [oracle(OracleTag::IndSet), oracle(OracleTag::Forest), oracle(OracleTag::Lp)] {
            for _ in 0..25 {
                let n = rng.gen_range(1..=8);
                let g = crate::verify::gen_graph(&mut rng, n, 0.35);
                for d in 0..=2 {
                    let dist_ok = elimination_distance(&g, &orc, d).value().is_some();
                    assert_eq!(
                        elimination_forest(&g, &orc, d).is_some(),
                        dist_ok,
                        "{orc} d={d} {g:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn distance_monotone_under_deletion_for_hereditary() {
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        let forest_cls = oracle(OracleTag::Forest);
        for _ in 0..40 {
            let n = rng.gen_range(1..=8);
            let g = crate::verify::gen_graph(&mut rng, n, 0.4);
            let d = elimination_distance(&g, &forest_cls, n).value().unwrap();
            let v = rng.gen_range(0..n);
            let (h, _) = g.remove_vertices(&VertexSet::singleton(v)).unwrap();
            let dh = elimination_distance(&h, &forest_cls, n).value().unwrap();
            assert!(dh <= d, "{g:?} minus {v}");
        }
    }

    #[test]
    fn verify_forest_rejects_bad_structures() {
        let indset = oracle(OracleTag::IndSet);
        let g = path(3);
        let good = elimination_forest(&g, &indset, 1).unwrap();
        assert!(verify_forest(&g, &good, &indset));

        // Leaf bag with an edge inside is not an independent set.
        let mut b = ForestBuilder::new();
        b.leaf(None, VertexSet::full(3));
        let bad = b.finish();
        assert!(!verify_forest(&g, &bad, &indset));

        // An edge between sibling subtrees violates the ancestor condition.
        let mut b = ForestBuilder::new();
        let root = b.internal(None, 0);
        b.leaf(Some(root), VertexSet::singleton(1));
        b.leaf(Some(root), VertexSet::singleton(2));
        let forest = b.finish();
        let g2 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(!verify_forest(&g2, &forest, &indset));
    }

    #[test]
    fn bounded_solver_on_member_equals_class_solver() {
        let forest_cls = oracle(OracleTag::Forest);
        let g = path(5);
        let f = elimination_forest(&g, &forest_cls, 0).unwrap();
        let c = solve_vc_bounded_ed(&g, &f, &forest_cls).unwrap();
        assert_eq!(c.size(), opt_value(&g));
    }

    #[test]
    fn bounded_solver_on_path_over_indset() {
        let indset = oracle(OracleTag::IndSet);
        let g = path(3);
        let f = elimination_forest(&g, &indset, 1).unwrap();
        let c = solve_vc_bounded_ed(&g, &f, &indset).unwrap();
        assert_eq!(c.size(), 1);
    }

    #[test]
    fn bounded_solver_on_lp_class_graphs() {
        let lp = oracle(OracleTag::Lp);
        // K3 is one deletion away from the LP-tight class.
        let g = clique(3);
        let f = elimination_forest(&g, &lp, 1).unwrap();
        assert_eq!(f.height(), 1);
        let c = solve_vc_bounded_ed(&g, &f, &lp).unwrap();
        assert_eq!(c.size(), opt_value(&g));

        // Two triangles sharing a vertex: the shared vertex roots the tree.
        let bowtie = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        let f = elimination_forest(&bowtie, &lp, 1).unwrap();
        let c = solve_vc_bounded_ed(&bowtie, &f, &lp).unwrap();
        assert_eq!(c.size(), opt_value(&bowtie));

        // A triangle with a pendant is already LP-tight (OPT = MM = 2).
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (0, 3)]).unwrap();
        assert_eq!(elimination_distance(&g, &lp, 2), EdOutcome::Within(0));
        let f = elimination_forest(&g, &lp, 0).unwrap();
        let c = solve_vc_bounded_ed(&g, &f, &lp).unwrap();
        assert_eq!(c.size(), opt_value(&g));
    }

    #[test]
    fn bounded_solver_matches_exact_on_random_planted_instances() {
        let mut rng = ChaCha8Rng::seed_from_u64(47);
        for orc in [oracle(OracleTag::Forest), oracle(OracleTag::Lp)] {
            for _ in 0..30 {
                let d = rng.gen_range(0..=2);
                let (g, f) = crate::verify::gen_planted_forest(&mut rng, &orc, d, 12);
                assert!(verify_forest(&g, &f, &orc));
                let c = solve_vc_bounded_ed(&g, &f, &orc).unwrap();
                assert_eq!(c.size(), opt_value(&g), "{orc} {g:?}");
            }
        }
    }

    #[test]
    fn bounded_solver_rejects_invalid_forest() {
        let indset = oracle(OracleTag::IndSet);
        let mut b = ForestBuilder::new();
        b.leaf(None, VertexSet::full(3));
        let bad = b.finish();
        assert!(solve_vc_bounded_ed(&path(3), &bad, &indset).is_err());
    }

    #[test]
    fn forest_round_trips_through_text() {
        let indset = oracle(OracleTag::IndSet);
        let g = path(3).disjoint_union(&path(4));
        let f = elimination_forest(&g, &indset, 2).unwrap();
        let text = crate::io::emit_forest(&f);
        let back = crate::io::parse_forest(&text).unwrap();
        assert!(verify_forest(&g, &back, &indset));
        assert_eq!(back.height(), f.height());
    }
}
