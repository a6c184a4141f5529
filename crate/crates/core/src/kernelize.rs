//! The matching-based component reduction rule and the recursive driver
//! that turns a depth-d modulator instance into a depth-0 one.
//!
//! Given an instance (G, k, X) whose components outside X lie within
//! elimination distance d of the base class, the rule builds a bipartite
//! auxiliary graph between *chunks* (independent subsets of X of size up
//! to the blocking bound for depth d) and the components of G - X, with an
//! edge when the chunk's neighborhood inside the component blocks there.
//! Components that are neither matched nor adjacent to a Hall violator are
//! deleted and the budget drops by their optimum. Afterwards at most
//! |X|^β components survive.
//!
//! The driver alternates the rule with moving the elimination-forest roots
//! of the surviving components into the modulator, shedding one unit of
//! depth per round.

use crate::blocking;
use crate::elimination;
use crate::graph::{Graph, VertexSet};
use crate::oracle::{beta_upper_bound, ClassOracle};
use crate::solver::{self, SaturationResult};
use crate::{Error, Result};

/// Budget of a parameterized instance; `No` is the canonical unsolvable
/// marker produced when a reduction drives the budget negative.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Budget {
    Value(usize),
    No,
}

/// One parameterized vertex cover instance: a graph, a budget, a modulator
/// whose removal leaves components within elimination distance `depth` of
/// the oracle class.
#[derive(Clone, Debug)]
pub struct ModulatorInstance {
    graph: Graph,
    k: Budget,
    modulator: VertexSet,
    oracle: ClassOracle,
    depth: usize,
}

/// Above this many vertices outside the modulator, constructors trust the
/// declared depth instead of recomputing elimination distances.
const ED_CHECK_LIMIT: usize = 24;

impl ModulatorInstance {
    /// Validated construction: checks id ranges and, when the rest of the
    /// graph is small enough, the declared elimination-distance bound.
    pub fn new(
        graph: Graph,
        k: Budget,
        modulator: VertexSet,
        oracle: ClassOracle,
        depth: usize,
    ) -> Result<Self> {
        if let Some(v) = modulator.max() {
            if v >= graph.n() {
                return Err(Error::OutOfRange { v, n: graph.n() });
            }
        }
        let inst = ModulatorInstance {
            graph,
            k,
            modulator,
            oracle,
            depth,
        };
        let (rest, _) = inst.graph.remove_vertices(&inst.modulator)?;
        if rest.n() <= ED_CHECK_LIMIT
            && elimination::elimination_distance(&rest, &inst.oracle, inst.depth)
                .value()
                .is_none()
        {
            return Err(Error::InvariantViolation(format!(
                "graph minus modulator exceeds elimination distance {depth} to {}",
                inst.oracle
            )));
        }
        Ok(inst)
    }

    /// Construction without the distance check, for inputs that carry the
    /// modulator as a promise (files, large instances).
    pub fn trusted(
        graph: Graph,
        k: Budget,
        modulator: VertexSet,
        oracle: ClassOracle,
        depth: usize,
    ) -> Self {
        ModulatorInstance {
            graph,
            k,
            modulator,
            oracle,
            depth,
        }
    }

    /// The canonical unsolvable instance: empty graph, NO budget.
    pub fn canonical_no(oracle: ClassOracle, depth: usize) -> Self {
        ModulatorInstance {
            graph: Graph::empty(0),
            k: Budget::No,
            modulator: VertexSet::new(),
            oracle,
            depth,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn k(&self) -> Budget {
        self.k
    }

    pub fn modulator(&self) -> &VertexSet {
        &self.modulator
    }

    pub fn oracle(&self) -> &ClassOracle {
        &self.oracle
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    /// Decision answer by exact solving; usable at test scale.
    pub fn answer(&self) -> bool {
        match self.k {
            Budget::No => false,
            Budget::Value(k) => solver::solve_vc_exact(&self.graph, Some(k)).is_some(),
        }
    }
}

/// An independent subset of the modulator, of size between 1 and the
/// blocking bound.
pub type Chunk = VertexSet;

/// Everything one application of the reduction rule did.
#[derive(Clone, Debug, Default)]
pub struct ReductionTrace {
    pub chunk_count: usize,
    pub aux_edge_count: usize,
    /// The Hall-violator chunks (empty when a saturating matching exists).
    pub violator_chunks: Vec<Chunk>,
    /// Matched (chunk, component) pairs, as vertex sets of the instance
    /// the rule was applied to.
    pub matching: Vec<(Chunk, VertexSet)>,
    /// Deleted components, in the ids of the instance the rule was
    /// applied to.
    pub deleted_components: Vec<VertexSet>,
    pub opt_of_deleted: usize,
    pub k_decrement: usize,
}

/// All independent subsets of the modulator with size in 1..=beta, in
/// lexicographic order.
pub fn enumerate_chunks(g: &Graph, modulator: &VertexSet, beta: usize) -> Vec<Chunk> {
    // Depth-first extension produces subset-lexicographic order.
    fn extend(
        g: &Graph,
        pool: &[usize],
        beta: usize,
        current: &mut Vec<usize>,
        start: usize,
        out: &mut Vec<Chunk>,
    ) {
        for i in start..pool.len() {
            let v = pool[i];
            if current.iter().any(|&u| g.has_edge(u, v)) {
                continue;
            }
            current.push(v);
            out.push(VertexSet::from_iter(current.iter().copied()));
            if current.len() < beta {
                extend(g, pool, beta, current, i + 1, out);
            }
            current.pop();
        }
    }
    let pool: Vec<usize> = modulator.iter().collect();
    let mut out = Vec::new();
    if beta > 0 {
        let mut current = Vec::new();
        extend(g, &pool, beta, &mut current, 0, &mut out);
    }
    out
}

/// Solves a component-scale graph with whatever structure applies: the
/// class solver for members, the elimination-forest solver for small
/// bounded-depth graphs, and the exact solver as the total fallback.
fn component_opt(h: &Graph, oracle: &ClassOracle, depth: usize) -> usize {
    if oracle.member(h) {
        return oracle.solve_in_class(h).size();
    }
    if depth > 0 && h.n() <= ED_CHECK_LIMIT {
        if let Some(forest) = elimination::elimination_forest(h, oracle, depth) {
            if let Ok(c) = elimination::solve_vc_bounded_ed(h, &forest, oracle) {
                return c.size();
            }
        }
    }
    solver::opt_value(h)
}

struct ComponentSolver<'a> {
    oracle: &'a ClassOracle,
    depth: usize,
}

impl blocking::OptSolver for ComponentSolver<'_> {
    fn opt(&self, g: &Graph) -> usize {
        component_opt(g, self.oracle, self.depth)
    }
}

/// Does the chunk's neighborhood inside the component block there?
/// Hereditary classes compare the two covers directly; non-hereditary
/// classes use the apex test, which only ever solves the component or the
/// component plus one vertex.
fn chunk_blocks_component(
    comp_graph: &Graph,
    trace_of_chunk: &VertexSet,
    oracle: &ClassOracle,
    depth: usize,
) -> bool {
    let solver = ComponentSolver { oracle, depth };
    if oracle.hereditary() {
        blocking::is_blocking_set(comp_graph, trace_of_chunk, &solver)
            .expect("trace ids are in range")
            .is_blocking
    } else {
        blocking::is_blocking_set_apex(comp_graph, trace_of_chunk, &solver)
            .expect("trace ids are in range")
    }
}

/// The bipartite auxiliary graph between chunks and components: vertices
/// 0..chunks.len() are chunks, the rest are components, and an edge means
/// the chunk's neighborhood inside the component is a blocking set there.
pub fn build_chunk_component_graph(
    inst: &ModulatorInstance,
    chunks: &[Chunk],
    components: &[VertexSet],
) -> Graph {
    let g = inst.graph();
    let n_chunks = chunks.len();
    let mut edges = Vec::new();
    for (ci, comp) in components.iter().enumerate() {
        let (comp_graph, remap) = g.induced_subgraph(comp).expect("component in range");
        for (zi, chunk) in chunks.iter().enumerate() {
            let seen = remap.set_to_new(&g.neighborhood(chunk).intersection(comp));
            if seen.is_empty() {
                continue;
            }
            if chunk_blocks_component(&comp_graph, &seen, inst.oracle(), inst.depth()) {
                edges.push((zi, n_chunks + ci));
            }
        }
    }
    Graph::from_edges(n_chunks + components.len(), &edges).expect("aux graph is simple")
}

/// One application of the component reduction rule. Total: canonical NO
/// passes through, and instances whose budget would go negative collapse
/// to canonical NO.
pub fn apply_rule_1(inst: &ModulatorInstance) -> (ModulatorInstance, ReductionTrace) {
    let g = inst.graph();
    if inst.k() == Budget::No {
        return (inst.clone(), ReductionTrace::default());
    }
    let (rest, rest_remap) = g
        .remove_vertices(inst.modulator())
        .expect("modulator validated");
    let components: Vec<VertexSet> = rest
        .connected_components()
        .into_iter()
        .map(|c| rest_remap.set_to_old(&c))
        .collect();
    let beta = beta_upper_bound(inst.oracle(), inst.depth());
    let chunks = enumerate_chunks(g, inst.modulator(), beta);
    let aux = build_chunk_component_graph(inst, &chunks, &components);
    let left = VertexSet::from_iter(0..chunks.len());
    let right = VertexSet::from_iter(chunks.len()..chunks.len() + components.len());
    let (violator, matching) =
        match solver::saturate_or_violator(&aux, &left, &right).expect("aux graph is bipartite") {
            SaturationResult::Saturating(m) => (VertexSet::new(), m),
            SaturationResult::Violator {
                z,
                matching_of_rest,
            } => (z, matching_of_rest),
        };
    // Components to keep: neighbors of the violator plus matched ones.
    let mut keep = vec![false; components.len()];
    for z in violator.iter() {
        for &c in aux.neighbors(z) {
            keep[c - chunks.len()] = true;
        }
    }
    for &(_, c) in matching.edges() {
        keep[c - chunks.len()] = true;
    }
    let mut deleted_components = Vec::new();
    let mut deleted_vertices = VertexSet::new();
    let mut opt_of_deleted = 0;
    for (ci, comp) in components.iter().enumerate() {
        if keep[ci] {
            continue;
        }
        let (comp_graph, _) = g.induced_subgraph(comp).expect("component in range");
        opt_of_deleted += component_opt(&comp_graph, inst.oracle(), inst.depth());
        deleted_components.push(comp.clone());
        deleted_vertices = deleted_vertices.union(comp);
    }
    let trace = ReductionTrace {
        chunk_count: chunks.len(),
        aux_edge_count: aux.edge_count(),
        violator_chunks: violator.iter().map(|z| chunks[z].clone()).collect(),
        matching: matching
            .edges()
            .iter()
            .map(|&(z, c)| (chunks[z].clone(), components[c - chunks.len()].clone()))
            .collect(),
        deleted_components,
        opt_of_deleted,
        k_decrement: opt_of_deleted,
    };
    let Budget::Value(k) = inst.k() else {
        unreachable!()
    };
    if k < opt_of_deleted {
        return (
            ModulatorInstance::canonical_no(*inst.oracle(), inst.depth()),
            trace,
        );
    }
    let (new_graph, remap) = g
        .remove_vertices(&deleted_vertices)
        .expect("deleted sets in range");
    let out = ModulatorInstance {
        graph: new_graph,
        k: Budget::Value(k - opt_of_deleted),
        modulator: remap.set_to_new(inst.modulator()),
        oracle: *inst.oracle(),
        depth: inst.depth(),
    };
    (out, trace)
}

/// Elimination forests of the surviving components stay computable only at
/// small scale; beyond this the depth reduction reports a resource error.
const FOREST_LIMIT: usize = 24;

/// One depth-reduction round: apply the rule, then move the elimination
/// forest roots of the surviving components into the modulator.
pub fn reduce_depth_once(inst: &ModulatorInstance) -> Result<(ModulatorInstance, ReductionTrace)> {
    if inst.depth() == 0 {
        return Err(Error::InvariantViolation(
            "depth reduction needs depth at least 1".into(),
        ));
    }
    let (reduced, trace) = apply_rule_1(inst);
    if reduced.k() == Budget::No {
        return Ok((
            ModulatorInstance::canonical_no(*inst.oracle(), inst.depth() - 1),
            trace,
        ));
    }
    let (rest, remap) = reduced
        .graph()
        .remove_vertices(reduced.modulator())
        .expect("modulator validated");
    if rest.n() > FOREST_LIMIT {
        return Err(Error::ResourceLimit {
            what: "elimination forest of the component area",
            n: rest.n(),
            limit: FOREST_LIMIT,
        });
    }
    let forest = elimination::elimination_forest(&rest, inst.oracle(), inst.depth()).ok_or_else(
        || {
            Error::InvariantViolation(format!(
                "components exceed declared elimination distance {}",
                inst.depth()
            ))
        },
    )?;
    let roots = remap.set_to_old(&forest.root_vertices());
    let out = ModulatorInstance {
        graph: reduced.graph().clone(),
        k: reduced.k(),
        modulator: reduced.modulator().union(&roots),
        oracle: *reduced.oracle(),
        depth: inst.depth() - 1,
    };
    Ok((out, trace))
}

/// Full driver: d depth-reduction rounds followed by a final rule
/// application, landing on a depth-0 instance.
pub fn kernelize_to_base(
    inst: &ModulatorInstance,
) -> Result<(ModulatorInstance, Vec<ReductionTrace>)> {
    let mut traces = Vec::new();
    let mut cur = inst.clone();
    while cur.depth() > 0 {
        let (next, trace) = reduce_depth_once(&cur)?;
        traces.push(trace);
        cur = next;
    }
    let (fin, trace) = apply_rule_1(&cur);
    traces.push(trace);
    Ok((fin, traces))
}

/// A modulator to the LP-tight class of size exactly
/// 2·(OPT(G) - LP(G)), extracted from an optimal half-integral solution
/// and a minimum cover respecting it: the cover-side half vertices left
/// unmatched against the exposed half vertices.
pub fn lp_modulator(g: &Graph) -> VertexSet {
    let sol = solver::nemhauser_trotter(g);
    // Minimum cover with V1 inside and V0 outside: V1 plus an optimum
    // cover of the half part.
    let (half_graph, remap) = g.induced_subgraph(&sol.v_half).expect("partition in range");
    let inner = solver::solve_vc_exact(&half_graph, None).expect("no budget");
    let s_half = remap.set_to_old(inner.set());
    let s_out = sol.v_half.difference(&s_half);
    // Bipartite subgraph between the two half sides.
    let keep = sol.v_half.clone();
    let (bip_src, bip_remap) = g.induced_subgraph(&keep).expect("half set in range");
    let cross: Vec<(usize, usize)> = bip_src
        .edges()
        .filter(|&(u, v)| {
            let (ou, ov) = (bip_remap.to_old(u), bip_remap.to_old(v));
            s_half.contains(ou) != s_half.contains(ov)
        })
        .collect();
    let bip = Graph::from_edges(bip_src.n(), &cross).expect("subset of simple graph");
    let left = bip_remap.set_to_new(&s_out);
    let right = bip_remap.set_to_new(&s_half);
    let matching =
        solver::max_matching_bipartite(&bip, &left, &right).expect("sides partition by choice");
    assert_eq!(
        matching.len(),
        left.len(),
        "an optimal half-integral solution saturates the exposed side"
    );
    let matched_old = bip_remap.set_to_old(&matching.vertices());
    s_half.difference(&matched_old)
}

/// Brute-force comparison of three modulator notions on one graph: the
/// smallest set whose removal leaves treedepth at most d, the smallest set
/// whose removal leaves elimination distance at most d to the LP-tight
/// class, and the LP-gap bound 2·(OPT - LP).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SizeRelations {
    pub lp_depth_modulator_min: usize,
    pub treedepth_modulator_min: usize,
    pub twice_lp_gap: usize,
}

impl SizeRelations {
    pub fn holds(&self) -> bool {
        self.lp_depth_modulator_min <= self.treedepth_modulator_min
            && self.lp_depth_modulator_min <= self.twice_lp_gap
    }
}

const RELATIONS_LIMIT: usize = 12;

pub fn modulator_size_relations(g: &Graph, d: usize) -> Result<SizeRelations> {
    if g.n() > RELATIONS_LIMIT {
        return Err(Error::ResourceLimit {
            what: "modulator size comparison",
            n: g.n(),
            limit: RELATIONS_LIMIT,
        });
    }
    let lp = ClassOracle::new(crate::oracle::OracleTag::Lp);
    let empty = ClassOracle::new(crate::oracle::OracleTag::Empty);
    let min_modulator = |ok: &dyn Fn(&Graph) -> bool| -> usize {
        for size in 0..=g.n() {
            let mut found = false;
            let mut search = |s: &VertexSet| {
                if !found {
                    let (h, _) = g.remove_vertices(s).expect("subset in range");
                    found = ok(&h);
                }
            };
            for_each_subset(g.n(), size, &mut search);
            if found {
                return size;
            }
        }
        g.n()
    };
    let lp_min = min_modulator(&|h| elimination::elimination_distance(h, &lp, d).value().is_some());
    // Treedepth at most d is elimination distance at most d to the empty
    // graph.
    let td_min =
        min_modulator(&|h| elimination::elimination_distance(h, &empty, d).value().is_some());
    let sol = solver::lp_half_integral(g);
    let twice_gap = 2 * solver::opt_value(g) - sol.doubled_value;
    Ok(SizeRelations {
        lp_depth_modulator_min: lp_min,
        treedepth_modulator_min: td_min,
        twice_lp_gap: twice_gap,
    })
}

fn for_each_subset(n: usize, size: usize, visit: &mut impl FnMut(&VertexSet)) {
    fn rec(n: usize, size: usize, start: usize, cur: &mut Vec<usize>, visit: &mut impl FnMut(&VertexSet)) {
        if cur.len() == size {
            visit(&VertexSet::from_iter(cur.iter().copied()));
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(n, size, v + 1, cur, visit);
            cur.pop();
        }
    }
    let mut cur = Vec::new();
    rec(n, size, 0, &mut cur, visit);
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
    fn chunks_respect_independence() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let chunks = enumerate_chunks(&g, &VertexSet::full(2), 2);
        assert_eq!(
            chunks,
            vec![VertexSet::singleton(0), VertexSet::singleton(1)]
        );

        let g = Graph::empty(2);
        let chunks = enumerate_chunks(&g, &VertexSet::full(2), 2);
        assert_eq!(chunks.len(), 3);
    }

    #[test]
    fn chunk_count_matches_binomials() {
        let g = Graph::empty(4);
        let chunks = enumerate_chunks(&g, &VertexSet::full(4), 2);
        assert_eq!(chunks.len(), 4 + 6);
        // Lexicographic order: {0} first, then its extensions.
        assert_eq!(chunks[0], VertexSet::singleton(0));
        assert_eq!(chunks[1], VertexSet::from_iter([0, 1]));
    }

    #[test]
    fn aux_graph_edge_requires_blocking_neighborhood() {
        // Modulator {0}; component is a single edge {1, 2} touched at 1:
        // {1} extends to a minimum cover of the edge, so no aux edge.
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let inst = ModulatorInstance::new(
            g,
            Budget::Value(1),
            VertexSet::singleton(0),
            oracle(OracleTag::Forest),
            0,
        )
        .unwrap();
        let chunks = enumerate_chunks(inst.graph(), inst.modulator(), 2);
        let comps = vec![VertexSet::from_iter([1, 2])];
        let aux = build_chunk_component_graph(&inst, &chunks, &comps);
        assert_eq!(aux.edge_count(), 0);

        // A triangle component fully seen by the chunk blocks.
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let inst = ModulatorInstance::new(
            g,
            Budget::Value(2),
            VertexSet::singleton(0),
            oracle(OracleTag::Cluster(3)),
            0,
        )
        .unwrap();
        let chunks = enumerate_chunks(inst.graph(), inst.modulator(), 3);
        let comps = vec![VertexSet::from_iter([1, 2, 3])];
        let aux = build_chunk_component_graph(&inst, &chunks, &comps);
        assert_eq!(aux.edge_count(), 1);
    }

    #[test]
    fn rule_deletes_unforced_components() {
        // Modulator {0}; two pendant edges touched at one endpoint and one
        // isolated vertex: nothing blocks, everything is deleted, and the
        // budget drops by the deleted optimum (2).
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 3), (3, 4)]).unwrap();
        let inst = ModulatorInstance::new(
            g,
            Budget::Value(3),
            VertexSet::singleton(0),
            oracle(OracleTag::Forest),
            0,
        )
        .unwrap();
        let (out, trace) = apply_rule_1(&inst);
        assert_eq!(trace.deleted_components.len(), 3);
        assert_eq!(trace.k_decrement, 2);
        assert_eq!(out.k(), Budget::Value(1));
        assert_eq!(out.graph().n(), 1);
        assert_eq!(
            opt_value(inst.graph()) - opt_value(out.graph()),
            trace.k_decrement
        );
    }

    #[test]
    fn rule_on_empty_component_area_is_identity() {
        let g = clique(3);
        let inst = ModulatorInstance::new(
            g.clone(),
            Budget::Value(2),
            VertexSet::full(3),
            oracle(OracleTag::Forest),
            0,
        )
        .unwrap();
        let (out, trace) = apply_rule_1(&inst);
        assert_eq!(out.graph(), &g);
        assert_eq!(out.k(), Budget::Value(2));
        assert!(trace.deleted_components.is_empty());
    }

    #[test]
    fn rule_is_idempotent() {
        let mut rng = ChaCha8Rng::seed_from_u64(53);
        for _ in 0..60 {
            let orc = oracle(OracleTag::Forest);
            let inst = crate::verify::gen_modulator_instance(&mut rng, &orc, 0, 14, 4);
            let (once, _) = apply_rule_1(&inst);
            let (twice, trace) = apply_rule_1(&once);
            assert!(trace.deleted_components.is_empty(), "{:?}", inst.graph());
            assert_eq!(twice.graph(), once.graph());
            assert_eq!(twice.k(), once.k());
        }
    }

    #[test]
    fn rule_goes_canonical_no_on_tiny_budgets() {
        let g = Graph::from_edges(3, &[(1, 2)]).unwrap();
        let inst = ModulatorInstance::new(
            g,
            Budget::Value(0),
            VertexSet::singleton(0),
            oracle(OracleTag::Forest),
            0,
        )
        .unwrap();
        let (out, _) = apply_rule_1(&inst);
        assert_eq!(out.k(), Budget::No);
        assert_eq!(out.graph().n(), 0);
        // Canonical NO passes through unchanged.
        let (again, trace) = apply_rule_1(&out);
        assert_eq!(again.k(), Budget::No);
        assert!(trace.deleted_components.is_empty());
    }

    #[test]
    fn depth_reduction_moves_roots() {
        // Component 1-2-3 is a path; with the edgeless base class it needs
        // one elimination round rooted at the path middle.
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let inst = ModulatorInstance::new(
            g,
            Budget::Value(2),
            VertexSet::singleton(0),
            oracle(OracleTag::IndSet),
            1,
        )
        .unwrap();
        let (out, _) = reduce_depth_once(&inst).unwrap();
        assert_eq!(out.depth(), 0);
        assert!(out.modulator().len() > 1);
        let (rest, _) = out.graph().remove_vertices(out.modulator()).unwrap();
        assert!(oracle(OracleTag::IndSet).member(&rest));
    }

    #[test]
    fn depth_reduction_without_components_just_decrements() {
        let g = clique(2);
        let inst = ModulatorInstance::new(
            g,
            Budget::Value(1),
            VertexSet::full(2),
            oracle(OracleTag::Forest),
            2,
        )
        .unwrap();
        let (out, _) = reduce_depth_once(&inst).unwrap();
        assert_eq!(out.depth(), 1);
        assert_eq!(out.modulator(), inst.modulator());
    }

    #[test]
    fn driver_reaches_depth_zero_and_preserves_answers() {
        let mut rng = ChaCha8Rng::seed_from_u64(59);
        for orc in [oracle(OracleTag::Forest), oracle(OracleTag::Lp)] {
            for _ in 0..25 {
                let d = rng.gen_range(0..=2);
                let inst = crate::verify::gen_modulator_instance(&mut rng, &orc, d, 14, 4);
                let (out, traces) = kernelize_to_base(&inst).unwrap();
                assert_eq!(out.depth(), 0);
                assert_eq!(traces.len(), d + 1);
                assert_eq!(inst.answer(), out.answer(), "{:?}", inst.graph());
                if let (Budget::Value(k0), Budget::Value(k1)) = (inst.k(), out.k()) {
                    assert_eq!(
                        opt_value(inst.graph()) - opt_value(out.graph()),
                        k0 - k1
                    );
                }
            }
        }
    }

    #[test]
    fn driver_propagates_canonical_no() {
        let inst = ModulatorInstance::canonical_no(oracle(OracleTag::Forest), 2);
        let (out, _) = kernelize_to_base(&inst).unwrap();
        assert_eq!(out.k(), Budget::No);
        assert_eq!(out.depth(), 0);
    }

    #[test]
    fn lp_modulator_on_triangle() {
        let x = lp_modulator(&clique(3));
        assert_eq!(x.len(), 1);
        let (rest, _) = clique(3).remove_vertices(&x).unwrap();
        assert!(oracle(OracleTag::Lp).member(&rest));
    }

    #[test]
    fn lp_modulator_on_bipartite_is_empty() {
        assert!(lp_modulator(&cycle(4)).is_empty());
        assert!(lp_modulator(&path(5)).is_empty());
    }

    #[test]
    fn lp_modulator_on_two_triangles() {
        let g = clique(3).disjoint_union(&clique(3));
        let x = lp_modulator(&g);
        assert_eq!(x.len(), 2);
        let (rest, _) = g.remove_vertices(&x).unwrap();
        assert!(oracle(OracleTag::Lp).member(&rest));
    }

    #[test]
    fn size_relations_examples() {
        let r = modulator_size_relations(&clique(3), 0).unwrap();
        assert_eq!(r.lp_depth_modulator_min, 1);
        assert_eq!(r.twice_lp_gap, 1);
        assert!(r.holds());

        let r = modulator_size_relations(&cycle(4), 1).unwrap();
        assert_eq!(r.lp_depth_modulator_min, 0);
        assert!(r.holds());

        let r = modulator_size_relations(&clique(4), 1).unwrap();
        assert!(r.holds());
    }

    #[test]
    fn size_relations_rejects_large_inputs() {
        assert!(matches!(
            modulator_size_relations(&clique(13), 1),
            Err(Error::ResourceLimit { .. })
        ));
    }
}
