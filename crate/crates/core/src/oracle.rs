//! The closed registry of base graph classes: membership tests,
//! class-specific vertex cover solvers, and the declared bounds on
//! minimal blocking set sizes.
//!
//! Every registered class is robust (closed under disjoint union and
//! deletion of components). The LP-tight class is the one non-hereditary
//! member; it is f-robust with f(c) = 2c + 2.

use crate::graph::{Graph, VertexSet};
use crate::solver::{self, Cover};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OracleTag {
    /// The empty graph only; elimination distance to it is treedepth.
    Empty,
    /// Edgeless graphs.
    IndSet,
    Forest,
    Bipartite,
    /// Disjoint cliques, each of size at most q.
    Cluster(usize),
    /// Graphs whose minimum vertex cover size equals the LP optimum.
    Lp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ClassOracle {
    tag: OracleTag,
}

impl fmt::Display for ClassOracle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.tag {
            OracleTag::Empty => write!(f, "empty"),
            OracleTag::IndSet => write!(f, "indset"),
            OracleTag::Forest => write!(f, "forest"),
            OracleTag::Bipartite => write!(f, "bipartite"),
            OracleTag::Cluster(q) => write!(f, "cluster:{q}"),
            OracleTag::Lp => write!(f, "lp"),
        }
    }
}

impl ClassOracle {
    pub fn new(tag: OracleTag) -> Self {
        ClassOracle { tag }
    }

    pub fn tag(&self) -> OracleTag {
        self.tag
    }

    /// Parses one of: empty | indset | forest | bipartite | cluster:<q> | lp.
    pub fn parse(s: &str) -> Option<Self> {
        let tag = match s {
            "empty" => OracleTag::Empty,
            "indset" => OracleTag::IndSet,
            "forest" => OracleTag::Forest,
            "bipartite" => OracleTag::Bipartite,
            "lp" => OracleTag::Lp,
            _ => {
                let q = s.strip_prefix("cluster:")?.parse().ok()?;
                if q == 0 {
                    return None;
                }
                OracleTag::Cluster(q)
            }
        };
        Some(ClassOracle { tag })
    }

    pub fn hereditary(&self) -> bool {
        !matches!(self.tag, OracleTag::Lp)
    }

    /// All registered classes are robust.
    pub fn robust(&self) -> bool {
        true
    }

    /// Bound on minimal blocking sets of class members added by one
    /// modulator vertex each: f with β(C + c) ≤ f(c), when declared.
    pub fn f_robust(&self, c: usize) -> Option<usize> {
        match self.tag {
            OracleTag::Lp => Some(2 * c + 2),
            _ => None,
        }
    }

    /// Declared maximum size of a minimal blocking set over class members.
    pub fn beta(&self) -> usize {
        match self.tag {
            OracleTag::Empty => 0,
            OracleTag::IndSet => 1,
            OracleTag::Forest | OracleTag::Bipartite | OracleTag::Lp => 2,
            OracleTag::Cluster(q) => q,
        }
    }

    /// Exact membership test.
    pub fn member(&self, g: &Graph) -> bool {
        match self.tag {
            OracleTag::Empty => g.n() == 0,
            OracleTag::IndSet => g.edge_count() == 0,
            OracleTag::Forest => g.is_forest(),
            OracleTag::Bipartite => g.bipartition().is_some(),
            OracleTag::Cluster(q) => g.connected_components().iter().all(|part| {
                part.len() <= q && {
                    let (h, _) = g.induced_subgraph(part).expect("component in range");
                    h.is_clique()
                }
            }),
            OracleTag::Lp => {
                2 * solver::opt_value(g) == solver::lp_half_integral(g).doubled_value
            }
        }
    }

    /// Minimum vertex cover, using the class structure when the graph is a
    /// member and falling back to the exact solver otherwise. The fallback
    /// keeps the routine total, which the callers that solve on C + c rely
    /// on.
    pub fn solve_in_class(&self, g: &Graph) -> Cover {
        let cover = match self.tag {
            OracleTag::Empty | OracleTag::IndSet if g.edge_count() == 0 => {
                Some(Cover::new(g, VertexSet::new()).expect("empty cover of edgeless graph"))
            }
            OracleTag::Forest if g.is_forest() => Some(solve_forest(g)),
            OracleTag::Bipartite => g.bipartition().map(|(l, r)| solve_bipartite(g, &l, &r)),
            OracleTag::Cluster(_) if self.member(g) => Some(solve_cluster(g)),
            OracleTag::Lp => Some(solve_with_lp_reduction(g)),
            _ => None,
        };
        cover.unwrap_or_else(|| solver::solve_vc_exact(g, None).expect("no budget"))
    }
}

/// Tree DP: for each root, min cover taking / skipping the root, skipping
/// preferred on ties. Roots are the smallest ids of their components.
fn solve_forest(g: &Graph) -> Cover {
    let n = g.n();
    let mut take = vec![0usize; n];
    let mut skip = vec![0usize; n];
    let mut parent = vec![usize::MAX; n];
    let mut chosen = VertexSet::new();
    for comp in g.connected_components() {
        let root = comp.min().expect("nonempty component");
        // Iterative postorder.
        let mut order = Vec::with_capacity(comp.len());
        let mut stack = vec![root];
        parent[root] = root;
        while let Some(v) = stack.pop() {
            order.push(v);
            for &u in g.neighbors(v) {
                if parent[u] == usize::MAX {
                    parent[u] = v;
                    stack.push(u);
                }
            }
        }
        for &v in order.iter().rev() {
            take[v] = 1;
            skip[v] = 0;
            for &u in g.neighbors(v) {
                if parent[u] == v {
                    take[v] += take[u].min(skip[u]);
                    skip[v] += take[u];
                }
            }
        }
        // Reconstruct: a skipped vertex forces all its children into the
        // cover; a taken vertex leaves its children free.
        let mut stack = vec![(root, false)];
        while let Some((v, forced_take)) = stack.pop() {
            let taken = forced_take || take[v] < skip[v];
            if taken {
                chosen.insert(v);
            }
            for &u in g.neighbors(v) {
                if parent[u] == v {
                    stack.push((u, !taken));
                }
            }
        }
    }
    Cover::new(g, chosen).expect("forest DP yields a cover")
}

/// König: minimum cover of a bipartite graph from a maximum matching.
fn solve_bipartite(g: &Graph, left: &VertexSet, right: &VertexSet) -> Cover {
    let matching =
        solver::max_matching_bipartite(g, left, right).expect("bipartition was computed");
    // Alternating reachability from unmatched left vertices.
    let matched = matching.vertices();
    let mut reach: VertexSet = left.iter().filter(|&v| !matched.contains(v)).collect();
    let mut reach_right = VertexSet::new();
    let mut queue: Vec<usize> = reach.iter().collect();
    let partner = |v: usize| {
        matching
            .edges()
            .iter()
            .find_map(|&(a, b)| match v {
                _ if a == v => Some(b),
                _ if b == v => Some(a),
                _ => None,
            })
    };
    while let Some(u) = queue.pop() {
        for &w in g.neighbors(u) {
            if reach_right.insert(w) {
                if let Some(p) = partner(w) {
                    if reach.insert(p) {
                        queue.push(p);
                    }
                }
            }
        }
    }
    let cover = left
        .iter()
        .filter(|&v| !reach.contains(v))
        .chain(right.iter().filter(|&v| reach_right.contains(v)))
        .collect();
    Cover::new(g, cover).expect("König cover")
}

/// Per clique: everything except the largest id.
fn solve_cluster(g: &Graph) -> Cover {
    let mut chosen = VertexSet::new();
    for comp in g.connected_components() {
        let drop = comp.max().expect("nonempty component");
        for v in comp.iter() {
            if v != drop {
                chosen.insert(v);
            }
        }
    }
    Cover::new(g, chosen).expect("cluster cover")
}

/// Half-integral LP reduction first: the value-one vertices join the cover
/// outright and only the half part is branched on. Valid by the
/// Nemhauser-Trotter persistence property.
fn solve_with_lp_reduction(g: &Graph) -> Cover {
    let sol = solver::lp_half_integral(g);
    let (half_graph, remap) = g.induced_subgraph(&sol.v_half).expect("partition in range");
    let inner = solver::solve_vc_exact(&half_graph, None).expect("no budget");
    let cover = sol.v1.union(&remap.set_to_old(inner.set()));
    Cover::new(g, cover).expect("NT-reduced cover")
}

/// Maximum size of a minimal blocking set among graphs of elimination
/// distance at most `d` to the class.
///
/// Hereditary classes get the exact extremal value; the LP-tight class
/// gets the f-robust bound, which evaluates to (d+1)·2^d + 1. For the
/// empty class the value is the treedepth specialization: graphs of
/// treedepth at most d are exactly the graphs of elimination distance
/// d - 1 to edgeless graphs.
pub fn beta_upper_bound(oracle: &ClassOracle, d: usize) -> usize {
    match oracle.tag() {
        OracleTag::Empty => {
            if d == 0 {
                0
            } else {
                beta_upper_bound(&ClassOracle::new(OracleTag::IndSet), d - 1)
            }
        }
        OracleTag::Lp => {
            let f = |i: usize| oracle.f_robust(i).expect("lp is f-robust");
            let sum: usize = (0..=d).map(|i| binomial(d, i) * f(i)).sum();
            sum - (1 << d) + 1
        }
        _ => {
            let beta = oracle.beta();
            if beta == 1 {
                if d == 0 {
                    1
                } else {
                    (1 << (d - 1)) + 1
                }
            } else {
                (beta - 1) * (1 << d) + 1
            }
        }
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut out = 1usize;
    for i in 0..k {
        out = out * (n - i) / (i + 1);
    }
    out
}

/// All six registered oracle kinds with a small cluster parameter, for
/// iteration in test suites.
pub fn registry() -> Vec<ClassOracle> {
    [
        OracleTag::Empty,
        OracleTag::IndSet,
        OracleTag::Forest,
        OracleTag::Bipartite,
        OracleTag::Cluster(3),
        OracleTag::Lp,
    ]
    .into_iter()
    .map(ClassOracle::new)
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::small::*;
    use crate::solver::opt_value;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn oracle(s: &str) -> ClassOracle {
        ClassOracle::parse(s).unwrap()
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["empty", "indset", "forest", "bipartite", "cluster:3", "lp"] {
            assert_eq!(oracle(s).to_string(), s);
        }
        assert!(ClassOracle::parse("cluster:0").is_none());
        assert!(ClassOracle::parse("planar").is_none());
    }

    #[test]
    fn membership_examples() {
        assert!(!oracle("forest").member(&cycle(4)));
        assert!(oracle("forest").member(&path(5)));
        assert!(oracle("lp").member(&clique(2)));
        assert!(!oracle("lp").member(&clique(3)));
        assert!(oracle("cluster:3").member(&clique(3).disjoint_union(&clique(2))));
        assert!(!oracle("cluster:3").member(&clique(4)));
        assert!(oracle("empty").member(&Graph::empty(0)));
        assert!(!oracle("empty").member(&Graph::empty(1)));
    }

    #[test]
    fn lp_membership_includes_nonbipartite_graphs() {
        // C4 plus a chord: OPT = 2 = MM <= LP <= OPT.
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        assert!(g.bipartition().is_none());
        assert!(oracle("lp").member(&g));
    }

    #[test]
    fn solve_in_class_examples() {
        let c = oracle("forest").solve_in_class(&path(3));
        assert_eq!(c.set(), &VertexSet::singleton(1));

        let c = oracle("cluster:3").solve_in_class(&clique(3).disjoint_union(&clique(2)));
        assert_eq!(c.size(), 3);

        let c = oracle("bipartite").solve_in_class(&cycle(4));
        assert_eq!(c.size(), 2);
    }

    #[test]
    fn solve_in_class_matches_exact_on_random_members() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for orc in registry() {
            for _ in 0..40 {
                let g = crate::verify::gen_member(&mut rng, &orc, 10);
                assert!(orc.member(&g), "{orc}: {g:?}");
                assert_eq!(orc.solve_in_class(&g).size(), opt_value(&g), "{orc}: {g:?}");
            }
        }
    }

    #[test]
    fn solve_in_class_is_exact_on_non_members_too() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for orc in registry() {
            for _ in 0..30 {
                let n = rng.gen_range(0..=10);
                let g = crate::verify::gen_graph(&mut rng, n, 0.35);
                assert_eq!(orc.solve_in_class(&g).size(), opt_value(&g), "{orc}: {g:?}");
            }
        }
    }

    #[test]
    fn beta_upper_bound_examples() {
        assert_eq!(beta_upper_bound(&oracle("indset"), 3), 5);
        assert_eq!(beta_upper_bound(&oracle("cluster:3"), 2), 9);
        assert_eq!(beta_upper_bound(&oracle("lp"), 2), 13);
        assert_eq!(beta_upper_bound(&oracle("lp"), 1), 5);
        assert_eq!(beta_upper_bound(&oracle("lp"), 0), 2);
        assert_eq!(beta_upper_bound(&oracle("indset"), 0), 1);
        assert_eq!(beta_upper_bound(&oracle("forest"), 0), 2);
    }

    #[test]
    fn beta_upper_bound_treedepth_specialization() {
        let empty = oracle("empty");
        assert_eq!(beta_upper_bound(&empty, 0), 0);
        assert_eq!(beta_upper_bound(&empty, 1), 1);
        assert_eq!(beta_upper_bound(&empty, 2), 2);
        assert_eq!(beta_upper_bound(&empty, 3), 3);
        assert_eq!(beta_upper_bound(&empty, 4), 5);
    }

    #[test]
    fn beta_upper_bound_is_strictly_monotone() {
        for orc in registry() {
            for d in 1..=6 {
                assert!(
                    beta_upper_bound(&orc, d - 1) < beta_upper_bound(&orc, d),
                    "{orc} at d={d}"
                );
            }
        }
    }

    #[test]
    fn hereditary_classes_survive_vertex_deletion() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for orc in registry().into_iter().filter(|o| o.hereditary()) {
            for _ in 0..25 {
                let g = crate::verify::gen_member(&mut rng, &orc, 9);
                let n = g.n();
                if n == 0 {
                    continue;
                }
                let drop: VertexSet = (0..n).filter(|_| rng.gen_bool(0.3)).collect();
                let (h, _) = g.remove_vertices(&drop).unwrap();
                assert!(orc.member(&h), "{orc}: {g:?} minus {drop}");
            }
        }
    }

    #[test]
    fn robust_classes_closed_under_union_and_component_deletion() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for orc in registry() {
            for _ in 0..20 {
                let g1 = crate::verify::gen_member(&mut rng, &orc, 7);
                let g2 = crate::verify::gen_member(&mut rng, &orc, 7);
                let u = g1.disjoint_union(&g2);
                assert!(orc.member(&u), "{orc}: union of members");
                for comp in u.connected_components() {
                    let (rest, _) = u.remove_vertices(&comp).unwrap();
                    assert!(orc.member(&rest), "{orc}: component deletion");
                }
            }
        }
    }
}
