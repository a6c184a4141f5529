//! Ground-truth engines: exact vertex cover, bipartite maximum matching
//! with Hall-violator extraction, and the half-integral vertex cover LP.
//!
//! LP values are kept as doubled integers throughout; the LP optimum of a
//! graph is always a multiple of one half, so no floating point is needed.

use crate::graph::{Graph, VertexSet};
use crate::{Error, Result};
use std::collections::VecDeque;

/// A vertex cover together with its size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cover {
    set: VertexSet,
}

impl Cover {
    pub fn new(g: &Graph, set: VertexSet) -> Result<Self> {
        if !g.is_vertex_cover(&set) {
            return Err(Error::InvariantViolation(format!(
                "{set} does not cover every edge"
            )));
        }
        Ok(Cover { set })
    }

    pub fn size(&self) -> usize {
        self.set.len()
    }

    pub fn set(&self) -> &VertexSet {
        &self.set
    }

    pub fn into_set(self) -> VertexSet {
        self.set
    }
}

/// A set of pairwise vertex-disjoint edges.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Matching(Vec<(usize, usize)>);

impl Matching {
    pub fn new(g: &Graph, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = VertexSet::new();
        for &(u, v) in &edges {
            if !g.has_edge(u, v) {
                return Err(Error::InvariantViolation(format!(
                    "matching edge {u}-{v} not in graph"
                )));
            }
            if !seen.insert(u) || !seen.insert(v) {
                return Err(Error::InvariantViolation(format!(
                    "matching edges share endpoint at {u}-{v}"
                )));
            }
        }
        Ok(Matching(edges))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.0
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::from_iter(self.0.iter().flat_map(|&(u, v)| [u, v]))
    }
}

/// Outcome of the saturate-or-violator dichotomy on a bipartite graph.
#[derive(Clone, Debug)]
pub enum SaturationResult {
    /// A maximum matching saturating the whole left side.
    Saturating(Matching),
    /// A left set with |N(z)| < |z|, plus a matching of the graph minus
    /// N[z] that saturates the rest of the left side.
    Violator {
        z: VertexSet,
        matching_of_rest: Matching,
    },
}

const MAX_EXACT: usize = 128;

struct BranchBound {
    nbr: Vec<u128>,
    best_size: usize,
    best: Option<u128>,
}

impl BranchBound {
    fn lower_bound(&self, alive: u128) -> usize {
        // Greedy maximal matching: each edge needs a cover vertex.
        let mut free = alive;
        let mut lb = 0;
        let mut rest = alive;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if free & (1u128 << u) == 0 {
                continue;
            }
            let cand = self.nbr[u] & free;
            if cand != 0 {
                let v = cand.trailing_zeros() as usize;
                free &= !(1u128 << u);
                free &= !(1u128 << v);
                lb += 1;
            }
        }
        lb
    }

    fn search(&mut self, mut alive: u128, mut chosen: u128, mut count: usize) {
        // Reduction loop: drop isolated vertices, fold degree-1 vertices by
        // taking the unique neighbor. Scan ascending for determinism.
        loop {
            if count >= self.best_size {
                return;
            }
            let mut changed = false;
            let mut rest = alive;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let nv = self.nbr[v] & alive;
                if nv == 0 {
                    alive &= !(1u128 << v);
                    changed = true;
                } else if nv.count_ones() == 1 {
                    let u = nv.trailing_zeros() as usize;
                    chosen |= 1u128 << u;
                    count += 1;
                    alive &= !(1u128 << u);
                    alive &= !(1u128 << v);
                    changed = true;
                    break;
                }
            }
            if !changed {
                break;
            }
        }
        if alive == 0 {
            if count < self.best_size {
                self.best_size = count;
                self.best = Some(chosen);
            }
            return;
        }
        if count + self.lower_bound(alive) >= self.best_size {
            return;
        }
        // Branch on a maximum-degree vertex, smallest id on ties.
        let mut pick = usize::MAX;
        let mut pick_deg = 0;
        let mut rest = alive;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let d = (self.nbr[v] & alive).count_ones() as usize;
            if d > pick_deg {
                pick_deg = d;
                pick = v;
            }
        }
        let v = pick;
        let nv = self.nbr[v] & alive;
        self.search(alive & !(1u128 << v), chosen | (1u128 << v), count + 1);
        self.search(
            alive & !(1u128 << v) & !nv,
            chosen | nv,
            count + nv.count_ones() as usize,
        );
    }
}

/// Exact minimum vertex cover by branch and bound.
///
/// Branches on a maximum-degree vertex (take it / take its neighborhood),
/// folds degree-0 and degree-1 vertices, and prunes with a greedy matching
/// lower bound; ties break toward the smallest id, so the result is
/// deterministic. With a budget, returns a cover of size at most the
/// budget, or `None` when the optimum exceeds it.
pub fn solve_vc_exact(g: &Graph, budget: Option<usize>) -> Option<Cover> {
    let n = g.n();
    assert!(
        n <= MAX_EXACT,
        "exact vertex cover limited to {MAX_EXACT} vertices (got {n})"
    );
    let mut nbr = vec![0u128; n];
    for (u, v) in g.edges() {
        nbr[u] |= 1u128 << v;
        nbr[v] |= 1u128 << u;
    }
    let alive = if n == 128 { !0u128 } else { (1u128 << n) - 1 };
    let mut bb = BranchBound {
        nbr,
        best_size: budget.map_or(n + 1, |b| b.min(n) + 1),
        best: None,
    };
    bb.search(alive, 0, 0);
    let mask = match (bb.best, budget) {
        (Some(m), _) => m,
        (None, Some(_)) => return None,
        (None, None) => unreachable!("unbudgeted search always finds a cover"),
    };
    let set = VertexSet::from_iter((0..n).filter(|&v| mask & (1u128 << v) != 0));
    debug_assert!(g.is_vertex_cover(&set));
    Some(Cover { set })
}

/// Size of a minimum vertex cover.
pub fn opt_value(g: &Graph) -> usize {
    solve_vc_exact(g, None).expect("no budget").size()
}

fn check_bipartition(g: &Graph, left: &VertexSet, right: &VertexSet) -> Result<()> {
    if left.len() + right.len() != g.n() || !left.intersection(right).is_empty() {
        return Err(Error::BipartitionViolated(
            "sides do not partition the vertex set".into(),
        ));
    }
    for s in [left, right] {
        for u in s.iter() {
            if u >= g.n() {
                return Err(Error::OutOfRange { v: u, n: g.n() });
            }
            if g.neighbors(u).iter().any(|&v| s.contains(v)) {
                return Err(Error::BipartitionViolated(format!(
                    "edge inside one side at vertex {u}"
                )));
            }
        }
    }
    Ok(())
}

/// Hopcroft-Karp state over a bipartition given as id lists.
struct Bipartite<'a> {
    g: &'a Graph,
    left: Vec<usize>,
    /// match_of[v] = matched partner of v, or usize::MAX.
    match_of: Vec<usize>,
}

impl<'a> Bipartite<'a> {
    fn new(g: &'a Graph, left: &VertexSet) -> Self {
        Bipartite {
            g,
            left: left.iter().collect(),
            match_of: vec![usize::MAX; g.n()],
        }
    }

    fn hopcroft_karp(&mut self) {
        loop {
            // BFS layering from unmatched left vertices, in id order.
            let mut dist = vec![usize::MAX; self.g.n()];
            let mut queue = VecDeque::new();
            for &u in &self.left {
                if self.match_of[u] == usize::MAX {
                    dist[u] = 0;
                    queue.push_back(u);
                }
            }
            let mut found = false;
            while let Some(u) = queue.pop_front() {
                for &v in self.g.neighbors(u) {
                    let w = self.match_of[v];
                    if w == usize::MAX {
                        found = true;
                    } else if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        queue.push_back(w);
                    }
                }
            }
            if !found {
                return;
            }
            let mut visited = vec![false; self.g.n()];
            let lefts = self.left.clone();
            for u in lefts {
                if self.match_of[u] == usize::MAX {
                    self.augment(u, &dist, &mut visited);
                }
            }
        }
    }

    fn augment(&mut self, u: usize, dist: &[usize], visited: &mut [bool]) -> bool {
        for &v in self.g.neighbors(u) {
            if visited[v] {
                continue;
            }
            visited[v] = true;
            let w = self.match_of[v];
            if w == usize::MAX || (dist[w] == dist[u] + 1 && self.augment(w, dist, visited)) {
                self.match_of[u] = v;
                self.match_of[v] = u;
                return true;
            }
        }
        false
    }

    /// Kuhn's augmenting-path algorithm, processing left vertices and their
    /// neighbors strictly in id order. Slower than Hopcroft-Karp but the
    /// resulting matching never touches a right vertex it leaves unmatched,
    /// which makes reruns on a pruned graph reproduce the same matching.
    fn kuhn(&mut self) {
        let lefts = self.left.clone();
        for u in lefts {
            let mut visited = vec![false; self.g.n()];
            self.kuhn_augment(u, &mut visited);
        }
    }

    fn kuhn_augment(&mut self, u: usize, visited: &mut [bool]) -> bool {
        for &v in self.g.neighbors(u) {
            if visited[v] {
                continue;
            }
            visited[v] = true;
            let w = self.match_of[v];
            if w == usize::MAX || self.kuhn_augment(w, visited) {
                self.match_of[u] = v;
                self.match_of[v] = u;
                return true;
            }
        }
        false
    }

    fn matching(&self) -> Vec<(usize, usize)> {
        self.left
            .iter()
            .filter(|&&u| self.match_of[u] != usize::MAX)
            .map(|&u| (u, self.match_of[u]))
            .collect()
    }

    /// Left vertices reachable by alternating paths from unmatched left
    /// vertices, plus the right vertices reached on the way.
    fn alternating_reach(&self) -> (VertexSet, VertexSet) {
        let mut in_z: VertexSet = self
            .left
            .iter()
            .copied()
            .filter(|&u| self.match_of[u] == usize::MAX)
            .collect();
        let mut reached_right = VertexSet::new();
        let mut queue: VecDeque<usize> = in_z.iter().collect();
        while let Some(u) = queue.pop_front() {
            for &v in self.g.neighbors(u) {
                if reached_right.insert(v) {
                    let w = self.match_of[v];
                    if w != usize::MAX && in_z.insert(w) {
                        queue.push_back(w);
                    }
                }
            }
        }
        (in_z, reached_right)
    }
}

/// Maximum-cardinality matching of a bipartite graph via Hopcroft-Karp.
pub fn max_matching_bipartite(g: &Graph, left: &VertexSet, right: &VertexSet) -> Result<Matching> {
    check_bipartition(g, left, right)?;
    let mut bp = Bipartite::new(g, left);
    bp.hopcroft_karp();
    Matching::new(g, bp.matching())
}

/// Either a maximum matching saturating `left`, or a Hall violator
/// `z ⊆ left` with |N(z)| < |z| together with the matching restricted away
/// from N[z], which saturates `left \ z`.
///
/// Uses id-ordered augmenting paths rather than Hopcroft-Karp phases so
/// that the matching is canonical: rerunning on the graph with the
/// untouched (unmatched, non-violator-adjacent) right vertices deleted
/// reproduces it. The component reduction rule relies on this for
/// idempotence.
pub fn saturate_or_violator(
    g: &Graph,
    left: &VertexSet,
    right: &VertexSet,
) -> Result<SaturationResult> {
    check_bipartition(g, left, right)?;
    let mut bp = Bipartite::new(g, left);
    bp.kuhn();
    let matching = bp.matching();
    if matching.len() == left.len() {
        return Ok(SaturationResult::Saturating(Matching::new(g, matching)?));
    }
    let (z, n_of_z) = bp.alternating_reach();
    debug_assert!(n_of_z.len() < z.len());
    let rest: Vec<(usize, usize)> = matching
        .into_iter()
        .filter(|&(u, _)| !z.contains(u))
        .collect();
    debug_assert!(rest.iter().all(|&(_, v)| !n_of_z.contains(v)));
    Ok(SaturationResult::Violator {
        z,
        matching_of_rest: Matching::new(g, rest)?,
    })
}

/// An optimal half-integral solution to the vertex cover LP, stored as the
/// value partition (zeros, halves, ones) with the doubled objective value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfIntegralSolution {
    pub v0: VertexSet,
    pub v_half: VertexSet,
    pub v1: VertexSet,
    /// 2 * LP(G) = 2|v1| + |v_half|.
    pub doubled_value: usize,
}

impl HalfIntegralSolution {
    /// Feasibility: for every edge the assigned values sum to at least one.
    pub fn is_feasible(&self, g: &Graph) -> bool {
        let val = |v: usize| -> usize {
            if self.v1.contains(v) {
                2
            } else if self.v_half.contains(v) {
                1
            } else {
                0
            }
        };
        g.edges().all(|(u, v)| val(u) + val(v) >= 2)
    }
}

/// Doubled LP value of `g` via a minimum vertex cover of the bipartite
/// double cover, by König's theorem. Also returns the cover as
/// (hit twice, hit once) per original vertex, i.e. an optimal
/// half-integral solution.
fn lp_via_double_cover(g: &Graph) -> (usize, Vec<u8>) {
    let n = g.n();
    // Mirror copy: edge {u, v} becomes u <-> v' and v <-> u'.
    let mut edges = Vec::with_capacity(2 * g.edge_count());
    for (u, v) in g.edges() {
        edges.push((u, n + v));
        edges.push((v, n + u));
    }
    let d = Graph::from_edges(2 * n, &edges).expect("double cover is simple");
    let left = VertexSet::full(n);
    let mut bp = Bipartite::new(&d, &left);
    bp.hopcroft_karp();
    // König: cover = (left \ reachable) ∪ (right ∩ reachable).
    let (reach_left, reach_right) = bp.alternating_reach();
    let mut hits = vec![0u8; n];
    let mut size = 0;
    for v in 0..n {
        if !reach_left.contains(v) {
            hits[v] += 1;
            size += 1;
        }
        if reach_right.contains(n + v) {
            hits[v] += 1;
            size += 1;
        }
    }
    (size, hits)
}

/// Doubled LP value with some vertices forced to 0 or 1, or None when the
/// forcing is infeasible. Forcing a vertex to 0 forces its neighbors to 1.
fn lp_doubled_forced(g: &Graph, zeros: &VertexSet, ones: &VertexSet) -> Option<usize> {
    let mut ones = ones.clone();
    for v in zeros.iter() {
        for &u in g.neighbors(v) {
            if zeros.contains(u) {
                return None;
            }
            ones.insert(u);
        }
    }
    if !zeros.intersection(&ones).is_empty() {
        return None;
    }
    let removed = zeros.union(&ones);
    let (rest, _) = g.remove_vertices(&removed).expect("forced sets in range");
    let (rest_doubled, _) = lp_via_double_cover(&rest);
    Some(2 * ones.len() + rest_doubled)
}

/// Optimal half-integral solution to the vertex cover LP.
///
/// The value comes from a minimum vertex cover of the bipartite double
/// cover (König). The returned representative is canonicalized by fixing
/// vertices to integral values greedily in id order (probing 1 before 0,
/// each probe checked against the optimum), so no vertex that could be
/// integral in an optimal extension of the fixed prefix stays at one half.
/// In particular the all-half pattern is only returned when it is the
/// unique optimum.
pub fn lp_half_integral(g: &Graph) -> HalfIntegralSolution {
    let n = g.n();
    let (doubled, _) = lp_via_double_cover(g);
    let mut zeros = VertexSet::new();
    let mut ones = VertexSet::new();
    for v in 0..n {
        if zeros.contains(v) || ones.contains(v) {
            continue;
        }
        if lp_doubled_forced(g, &zeros, &ones.with(v)) == Some(doubled) {
            ones.insert(v);
            continue;
        }
        let z = zeros.with(v);
        if lp_doubled_forced(g, &z, &ones) == Some(doubled) {
            zeros = z;
            for &u in g.neighbors(v) {
                ones.insert(u);
            }
        }
    }
    let v_half = VertexSet::from_iter((0..n).filter(|&v| !zeros.contains(v) && !ones.contains(v)));
    let sol = HalfIntegralSolution {
        v0: zeros,
        v_half,
        v1: ones,
        doubled_value: doubled,
    };
    debug_assert!(sol.is_feasible(g));
    debug_assert_eq!(2 * sol.v1.len() + sol.v_half.len(), doubled);
    sol
}

/// The half-integral partition with the persistence guarantee checked:
/// OPT(G) = |V1| + OPT(G[V_half]), V0 is independent, and N(V0) ⊆ V1.
/// Panics if the exact solver contradicts the guarantee.
pub fn nemhauser_trotter(g: &Graph) -> HalfIntegralSolution {
    let sol = lp_half_integral(g);
    let (half_graph, _) = g
        .induced_subgraph(&sol.v_half)
        .expect("partition in range");
    assert_eq!(
        opt_value(g),
        sol.v1.len() + opt_value(&half_graph),
        "persistence violated: OPT != |V1| + OPT(G[V_half])"
    );
    assert!(g.is_independent_set(&sol.v0), "V0 not independent");
    assert!(
        g.neighborhood(&sol.v0).is_subset_of(&sol.v1),
        "N(V0) leaves V1"
    );
    sol
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::small::*;
    use crate::verify::{exhaustive_opt, lp_enum_doubled};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn clique_needs_all_but_one() {
        assert_eq!(opt_value(&clique(3)), 2);
        assert_eq!(opt_value(&clique(5)), 4);
    }

    #[test]
    fn path_cover_is_star_center() {
        let c = solve_vc_exact(&path(3), None).unwrap();
        assert_eq!(c.set(), &VertexSet::singleton(1));
    }

    #[test]
    fn petersen_opt_matches_brute_force() {
        let g = petersen();
        assert_eq!(opt_value(&g), 6);
        assert_eq!(exhaustive_opt(&g), 6);
    }

    #[test]
    fn empty_edge_cycle_values() {
        assert_eq!(opt_value(&Graph::empty(0)), 0);
        assert_eq!(opt_value(&clique(2)), 1);
        assert_eq!(opt_value(&cycle(5)), 3);
        assert_eq!(exhaustive_opt(&cycle(5)), 3);
    }

    #[test]
    fn budget_semantics() {
        let g = clique(4);
        assert!(solve_vc_exact(&g, Some(2)).is_none());
        let c = solve_vc_exact(&g, Some(3)).unwrap();
        assert!(c.size() <= 3);
        assert!(solve_vc_exact(&g, Some(0)).is_none());
        assert!(solve_vc_exact(&Graph::empty(3), Some(0)).is_some());
    }

    #[test]
    fn exact_matches_exhaustive_on_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..120 {
            let n = rng.gen_range(0..=12);
            let g = crate::verify::gen_graph(&mut rng, n, 0.3);
            assert_eq!(opt_value(&g), exhaustive_opt(&g), "{g:?}");
        }
    }

    #[test]
    fn matching_on_even_cycle_is_perfect() {
        let g = cycle(4);
        let m = max_matching_bipartite(
            &g,
            &VertexSet::from_iter([0, 2]),
            &VertexSet::from_iter([1, 3]),
        )
        .unwrap();
        assert_eq!(m.len(), 2);
    }

    #[test]
    fn matching_on_star() {
        let g = star(3);
        let m = max_matching_bipartite(
            &g,
            &VertexSet::singleton(0),
            &VertexSet::from_iter([1, 2, 3]),
        )
        .unwrap();
        assert_eq!(m.len(), 1);
    }

    #[test]
    fn matching_two_lefts_one_right() {
        let g = Graph::from_edges(3, &[(0, 2), (1, 2)]).unwrap();
        let m = max_matching_bipartite(
            &g,
            &VertexSet::from_iter([0, 1]),
            &VertexSet::singleton(2),
        )
        .unwrap();
        assert_eq!(m.len(), 1);
    }

    #[test]
    fn matching_rejects_bad_bipartition() {
        let g = clique(3);
        let err = max_matching_bipartite(
            &g,
            &VertexSet::from_iter([0, 1]),
            &VertexSet::singleton(2),
        );
        assert!(err.is_err());
    }

    #[test]
    fn violator_two_lefts_one_right() {
        let g = Graph::from_edges(3, &[(0, 2), (1, 2)]).unwrap();
        match saturate_or_violator(&g, &VertexSet::from_iter([0, 1]), &VertexSet::singleton(2))
            .unwrap()
        {
            SaturationResult::Violator {
                z,
                matching_of_rest,
            } => {
                assert_eq!(z, VertexSet::from_iter([0, 1]));
                assert_eq!(g.neighborhood(&z), VertexSet::singleton(2));
                assert!(matching_of_rest.is_empty());
            }
            other => panic!("expected violator, got {other:?}"),
        }
    }

    #[test]
    fn saturating_cases() {
        let g = cycle(4);
        match saturate_or_violator(&g, &VertexSet::from_iter([0, 2]), &VertexSet::from_iter([1, 3]))
            .unwrap()
        {
            SaturationResult::Saturating(m) => assert_eq!(m.len(), 2),
            other => panic!("expected saturating, got {other:?}"),
        }
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        match saturate_or_violator(&g, &VertexSet::singleton(0), &VertexSet::from_iter([1, 2]))
            .unwrap()
        {
            SaturationResult::Saturating(m) => assert_eq!(m.edges(), &[(0, 1)]),
            other => panic!("expected saturating, got {other:?}"),
        }
    }

    #[test]
    fn lp_on_triangle_is_all_half() {
        let sol = lp_half_integral(&clique(3));
        assert_eq!(sol.doubled_value, 3);
        assert_eq!(sol.v_half.len(), 3);
        assert_eq!(lp_enum_doubled(&clique(3)), 3);
    }

    #[test]
    fn lp_on_single_edge_picks_one_endpoint() {
        let sol = lp_half_integral(&clique(2));
        assert_eq!(sol.doubled_value, 2);
        assert_eq!(sol.v1, VertexSet::singleton(0));
        assert_eq!(sol.v0, VertexSet::singleton(1));
        assert!(sol.v_half.is_empty());
    }

    #[test]
    fn lp_on_even_cycle_matches_matching_and_opt() {
        let g = cycle(4);
        let sol = lp_half_integral(&g);
        assert_eq!(sol.doubled_value, 4);
        assert_eq!(opt_value(&g), 2);
        let m = max_matching_bipartite(
            &g,
            &VertexSet::from_iter([0, 2]),
            &VertexSet::from_iter([1, 3]),
        )
        .unwrap();
        assert_eq!(m.len(), 2);
        assert!(sol.v_half.is_empty());
        assert_eq!(sol.v1, VertexSet::from_iter([0, 2]));
    }

    #[test]
    fn lp_value_matches_enumeration_on_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..100 {
            let n = rng.gen_range(0..=8);
            let g = crate::verify::gen_graph(&mut rng, n, 0.35);
            assert_eq!(lp_half_integral(&g).doubled_value, lp_enum_doubled(&g), "{g:?}");
        }
    }

    #[test]
    fn lp_canonical_support_is_minimal_on_small_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..150 {
            let n = rng.gen_range(1..=7);
            let g = crate::verify::gen_graph(&mut rng, n, 0.4);
            let sol = lp_half_integral(&g);
            let best = crate::verify::lp_enum_min_half_support(&g);
            assert_eq!(sol.v_half.len(), best, "{g:?}");
        }
    }

    #[test]
    fn nt_on_path_and_triangle() {
        let sol = nemhauser_trotter(&path(3));
        assert_eq!(sol.v1, VertexSet::singleton(1));
        assert_eq!(sol.v0, VertexSet::from_iter([0, 2]));

        let sol = nemhauser_trotter(&clique(3));
        assert_eq!(sol.v_half.len(), 3);
    }

    #[test]
    fn nt_puts_isolated_vertices_in_v0() {
        let g = Graph::from_edges(4, &[(0, 1)]).unwrap();
        let sol = nemhauser_trotter(&g);
        assert!(sol.v0.contains(2));
        assert!(sol.v0.contains(3));
    }

    #[test]
    fn lp_bounds_opt_on_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(47);
        for _ in 0..150 {
            let n = rng.gen_range(0..=14);
            let g = crate::verify::gen_graph(&mut rng, n, 0.3);
            let lp2 = lp_half_integral(&g).doubled_value;
            let opt = opt_value(&g);
            assert!(lp2 <= 2 * opt && 2 * opt <= 2 * lp2, "{g:?}");
        }
    }
}
