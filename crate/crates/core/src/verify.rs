//! Independent test oracles, seeded instance generators, and the named
//! self-check suites behind `vckern verify` and the acceptance tests.
//!
//! The oracles here deliberately avoid the production code paths they
//! check: covers come from plain subset enumeration and LP values from
//! enumerating all {0, 1/2, 1} assignments.

use crate::blocking::{self, ExactVc};
use crate::elimination::{self, EliminationForest, ForestBuilder};
use crate::gadgets;
use crate::graph::{Graph, Hypergraph, VertexSet};
use crate::kernelize::{self, Budget, ModulatorInstance};
use crate::oracle::{beta_upper_bound, ClassOracle, OracleTag};
use crate::solver;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

// ---------------------------------------------------------------------
// Independent oracles
// ---------------------------------------------------------------------

/// Minimum vertex cover size by plain subset enumeration.
pub fn exhaustive_opt(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 25, "exhaustive opt limited to 25 vertices");
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut best = n;
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size >= best {
            continue;
        }
        if edges
            .iter()
            .all(|&(u, v)| mask & (1 << u) != 0 || mask & (1 << v) != 0)
        {
            best = size;
        }
    }
    best
}

/// All minimum vertex covers, by enumeration.
pub fn exhaustive_min_covers(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    assert!(n <= 20, "cover enumeration limited to 20 vertices");
    let opt = exhaustive_opt(g);
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != opt {
            continue;
        }
        if edges
            .iter()
            .all(|&(u, v)| mask & (1 << u) != 0 || mask & (1 << v) != 0)
        {
            out.push(VertexSet::from_iter((0..n).filter(|&v| mask & (1 << v) != 0)));
        }
    }
    out
}

/// Minimum hypergraph cover size by subset enumeration.
pub fn hypergraph_opt(h: &Hypergraph) -> usize {
    let n = h.n();
    assert!(n <= 20, "hypergraph enumeration limited to 20 vertices");
    let mut best = n;
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size >= best {
            continue;
        }
        if h
            .edges()
            .iter()
            .all(|e| e.iter().any(|&v| mask & (1 << v) != 0))
        {
            best = size;
        }
    }
    best
}

fn for_each_half_integral(g: &Graph, mut visit: impl FnMut(&[usize], usize)) {
    let n = g.n();
    assert!(n <= 12, "LP enumeration limited to 12 vertices");
    let mut assign = vec![0usize; n]; // doubled values 0, 1, 2
    loop {
        let feasible = g.edges().all(|(u, v)| assign[u] + assign[v] >= 2);
        if feasible {
            let value = assign.iter().sum();
            visit(&assign, value);
        }
        // Odometer over {0,1,2}^n.
        let mut i = 0;
        while i < n {
            assign[i] += 1;
            if assign[i] <= 2 {
                break;
            }
            assign[i] = 0;
            i += 1;
        }
        if i == n {
            return;
        }
    }
}

/// Doubled LP optimum by enumerating every half-integral assignment.
pub fn lp_enum_doubled(g: &Graph) -> usize {
    let mut best = 2 * g.n();
    for_each_half_integral(g, |_, value| best = best.min(value));
    best
}

/// Minimum number of half-valued vertices over all optimal half-integral
/// assignments.
pub fn lp_enum_min_half_support(g: &Graph) -> usize {
    let best = lp_enum_doubled(g);
    let mut min_half = g.n();
    for_each_half_integral(g, |assign, value| {
        if value == best {
            min_half = min_half.min(assign.iter().filter(|&&a| a == 1).count());
        }
    });
    min_half
}

// ---------------------------------------------------------------------
// Seeded generators
// ---------------------------------------------------------------------

/// Erdős–Rényi-style graph with edge probability `p`.
pub fn gen_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("generated edges are simple")
}

/// Random bipartite graph: vertices split into two sides, cross edges only.
pub fn gen_bipartite(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let side: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if side[u] != side[v] && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("generated edges are simple")
}

/// A random member of the oracle's class with at most `max_n` vertices.
pub fn gen_member(rng: &mut ChaCha8Rng, oracle: &ClassOracle, max_n: usize) -> Graph {
    match oracle.tag() {
        OracleTag::Empty => Graph::empty(0),
        OracleTag::IndSet => Graph::empty(rng.gen_range(0..=max_n)),
        OracleTag::Forest => {
            let n = rng.gen_range(0..=max_n);
            let mut edges = Vec::new();
            for v in 1..n {
                if rng.gen_bool(0.75) {
                    edges.push((rng.gen_range(0..v), v));
                }
            }
            Graph::from_edges(n, &edges).expect("forest edges are simple")
        }
        OracleTag::Bipartite => {
            let n = rng.gen_range(0..=max_n);
            gen_bipartite(rng, n, 0.4)
        }
        OracleTag::Cluster(q) => {
            let mut edges = Vec::new();
            let mut next = 0;
            let target = rng.gen_range(0..=max_n);
            while next < target {
                let size = rng.gen_range(1..=q.min(target - next));
                for u in next..next + size {
                    for v in u + 1..next + size {
                        edges.push((u, v));
                    }
                }
                next += size;
            }
            Graph::from_edges(next, &edges).expect("clique edges are simple")
        }
        OracleTag::Lp => {
            for _ in 0..40 {
                let n = rng.gen_range(0..=max_n);
                let g = if rng.gen_bool(0.5) {
                    gen_bipartite(rng, n, 0.4)
                } else {
                    gen_graph(rng, n, 0.35)
                };
                if oracle.member(&g) {
                    return g;
                }
            }
            gen_bipartite(rng, max_n, 0.4)
        }
    }
}

/// A graph of elimination distance at most `depth` to the oracle class:
/// a class member with up to `depth` extra vertices layered on top, each
/// wired into the graph built so far.
fn gen_bounded_ed_graph(
    rng: &mut ChaCha8Rng,
    oracle: &ClassOracle,
    depth: usize,
    max_base: usize,
) -> Graph {
    let base = gen_member(rng, oracle, max_base);
    let mut n = base.n();
    let mut edges: Vec<(usize, usize)> = base.edges().collect();
    for _ in 0..depth {
        if rng.gen_bool(0.25) {
            continue;
        }
        let v = n;
        n += 1;
        for u in 0..v {
            if rng.gen_bool(0.4) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("layered edges are simple")
}

/// A random modulator instance: components within elimination distance
/// `depth` of the class, a modulator of up to `max_mod` fresh vertices
/// wired everywhere, and a budget near the optimum.
pub fn gen_modulator_instance(
    rng: &mut ChaCha8Rng,
    oracle: &ClassOracle,
    depth: usize,
    max_n: usize,
    max_mod: usize,
) -> ModulatorInstance {
    let mod_size = rng.gen_range(1..=max_mod);
    let area = max_n.saturating_sub(mod_size);
    let mut rest = Graph::empty(0);
    while rest.n() < area.saturating_sub(4) {
        let comp = gen_bounded_ed_graph(rng, oracle, depth, (area - rest.n()).min(5));
        rest = rest.disjoint_union(&comp);
        if rng.gen_bool(0.25) {
            break;
        }
    }
    let shift = rest.n();
    let mut edges: Vec<(usize, usize)> = rest.edges().collect();
    for x in shift..shift + mod_size {
        for u in 0..shift {
            if rng.gen_bool(0.3) {
                edges.push((u, x));
            }
        }
        for y in shift..x {
            if rng.gen_bool(0.3) {
                edges.push((y, x));
            }
        }
    }
    let g = Graph::from_edges(shift + mod_size, &edges).expect("instance edges are simple");
    let modulator = VertexSet::from_iter(shift..shift + mod_size);
    let opt = solver::opt_value(&g);
    let k = match rng.gen_range(0..3) {
        0 => opt.saturating_sub(1),
        1 => opt,
        _ => opt + 1,
    };
    ModulatorInstance::new(g, Budget::Value(k), modulator, *oracle, depth)
        .expect("construction respects the declared depth")
}

/// A graph together with a valid elimination forest of height at most `d`,
/// built jointly: leaves are class members, internal vertices wire only
/// into their own subtree.
pub fn gen_planted_forest(
    rng: &mut ChaCha8Rng,
    oracle: &ClassOracle,
    d: usize,
    max_n: usize,
) -> (Graph, EliminationForest) {
    fn build_tree(
        rng: &mut ChaCha8Rng,
        oracle: &ClassOracle,
        depth: usize,
        parent: Option<usize>,
        builder: &mut ForestBuilder,
        edges: &mut Vec<(usize, usize)>,
        next_id: &mut usize,
        budget: &mut usize,
    ) -> Vec<usize> {
        if depth == 0 || *budget == 0 || rng.gen_bool(0.3) {
            let member = gen_member(rng, oracle, (*budget).min(5));
            let shift = *next_id;
            *next_id += member.n();
            *budget = budget.saturating_sub(member.n());
            for (u, v) in member.edges() {
                edges.push((u + shift, v + shift));
            }
            let bag = VertexSet::from_iter(shift..shift + member.n());
            let ids = bag.iter().collect();
            builder.leaf(parent, bag);
            return ids;
        }
        let v = *next_id;
        *next_id += 1;
        *budget = budget.saturating_sub(1);
        let node = builder.internal(parent, v);
        let mut below = Vec::new();
        for _ in 0..rng.gen_range(1..=2) {
            below.extend(build_tree(
                rng,
                oracle,
                depth - 1,
                Some(node),
                builder,
                edges,
                next_id,
                budget,
            ));
        }
        for &u in &below {
            if rng.gen_bool(0.5) {
                edges.push((v, u));
            }
        }
        let mut ids = below;
        ids.push(v);
        ids
    }

    let mut builder = ForestBuilder::new();
    let mut edges = Vec::new();
    let mut next_id = 0;
    let mut budget = max_n;
    for _ in 0..rng.gen_range(1..=2) {
        build_tree(
            rng,
            oracle,
            d,
            None,
            &mut builder,
            &mut edges,
            &mut next_id,
            &mut budget,
        );
    }
    let g = Graph::from_edges(next_id, &edges).expect("planted edges are simple");
    let forest = builder.finish();
    debug_assert!(elimination::verify_forest(&g, &forest, oracle));
    (g, forest)
}

// ---------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------

/// Outcome of one named suite: case count plus any failures.
#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: &'static str) -> Self {
        SuiteReport {
            name,
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(msg());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn summary(&self) -> String {
        if self.passed() {
            format!("{}: pass ({} checks)", self.name, self.cases)
        } else {
            format!(
                "{}: FAIL ({} of {} checks failed; first: {})",
                self.name,
                self.failures.len(),
                self.cases,
                self.failures[0]
            )
        }
    }
}

fn rng_for(seed: u64, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ (salt.wrapping_mul(0x9e3779b97f4a7c15)))
}

/// Round-trips, component partitioning, and optimum additivity of the
/// disjoint union.
pub fn suite_graph(seed: u64) -> SuiteReport {
    let mut rep = SuiteReport::new("graph");
    let mut rng = rng_for(seed, 1);
    for _ in 0..100 {
        let n = rng.gen_range(0..=12);
        let g = gen_graph(&mut rng, n, 0.3);
        let back = crate::io::parse_graph(&crate::io::emit_graph(&g));
        rep.check(back.as_ref() == Ok(&g), || format!("round trip broke {g:?}"));

        let parts = g.connected_components();
        let mut seen = VertexSet::new();
        let mut disjoint = true;
        for p in &parts {
            disjoint &= seen.intersection(p).is_empty();
            seen = seen.union(p);
        }
        rep.check(disjoint && seen.len() == g.n(), || {
            format!("components do not partition {g:?}")
        });

        // Reassemble parts; same size, edge count, degree multiset, and
        // optimum.
        let mut rebuilt = Graph::empty(0);
        for p in &parts {
            let (sub, _) = g.induced_subgraph(p).expect("component in range");
            rebuilt = rebuilt.disjoint_union(&sub);
        }
        let mut da: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
        let mut db: Vec<usize> = (0..rebuilt.n()).map(|v| rebuilt.degree(v)).collect();
        da.sort_unstable();
        db.sort_unstable();
        rep.check(
            rebuilt.n() == g.n() && rebuilt.edge_count() == g.edge_count() && da == db,
            || format!("reassembly mismatched {g:?}"),
        );
        if n <= 10 {
            rep.check(exhaustive_opt(&rebuilt) == exhaustive_opt(&g), || {
                format!("reassembly changed the optimum of {g:?}")
            });
        }
    }
    for _ in 0..40 {
        let (n1, n2) = (rng.gen_range(0..=8), rng.gen_range(0..=8));
        let g1 = gen_graph(&mut rng, n1, 0.35);
        let g2 = gen_graph(&mut rng, n2, 0.35);
        let u = g1.disjoint_union(&g2);
        rep.check(
            solver::opt_value(&u) == solver::opt_value(&g1) + solver::opt_value(&g2),
            || format!("optimum not additive over {g1:?} + {g2:?}"),
        );
    }
    rep
}

/// Exact solver versus enumeration, König equality, violator structure,
/// and budget semantics.
pub fn suite_solver(seed: u64) -> SuiteReport {
    let mut rep = SuiteReport::new("solver");
    let mut rng = rng_for(seed, 2);
    for _ in 0..200 {
        let n = rng.gen_range(0..=12);
        let g = gen_graph(&mut rng, n, 0.3);
        let opt = solver::opt_value(&g);
        rep.check(opt == exhaustive_opt(&g), || format!("opt mismatch on {g:?}"));
        if opt > 0 {
            rep.check(solver::solve_vc_exact(&g, Some(opt - 1)).is_none(), || {
                format!("budget opt-1 should be infeasible on {g:?}")
            });
        }
        rep.check(
            solver::solve_vc_exact(&g, Some(opt)).is_some_and(|c| c.size() == opt),
            || format!("budget opt should be feasible on {g:?}"),
        );
    }
    for _ in 0..100 {
        let n = rng.gen_range(0..=8);
        let g = gen_graph(&mut rng, n, 0.35);
        rep.check(
            solver::lp_half_integral(&g).doubled_value == lp_enum_doubled(&g),
            || format!("LP value mismatch on {g:?}"),
        );
    }
    for _ in 0..100 {
        let n = rng.gen_range(2..=12);
        let g = gen_bipartite(&mut rng, n, 0.4);
        let (l, r) = g.bipartition().expect("generated bipartite");
        let mm = solver::max_matching_bipartite(&g, &l, &r).expect("valid sides").len();
        let opt = solver::opt_value(&g);
        let lp2 = solver::lp_half_integral(&g).doubled_value;
        rep.check(lp2 == 2 * mm && mm == opt, || {
            format!("König equality failed on {g:?}")
        });
        match solver::saturate_or_violator(&g, &l, &r).expect("valid sides") {
            solver::SaturationResult::Saturating(m) => {
                rep.check(m.len() == l.len(), || format!("saturation short on {g:?}"));
            }
            solver::SaturationResult::Violator {
                z,
                matching_of_rest,
            } => {
                let nz = g.neighborhood(&z);
                let rest_left: VertexSet = matching_of_rest
                    .edges()
                    .iter()
                    .map(|&(u, _)| u)
                    .collect();
                rep.check(
                    nz.len() < z.len() && rest_left == l.difference(&z),
                    || format!("violator structure broken on {g:?}"),
                );
            }
        }
    }
    rep
}

/// Class solvers against the exact optimum, closure spot checks, declared
/// blocking bounds on random members, and bound monotonicity.
pub fn suite_oracles(seed: u64) -> SuiteReport {
    let mut rep = SuiteReport::new("oracles");
    let mut rng = rng_for(seed, 3);
    for orc in crate::oracle::registry() {
        for _ in 0..40 {
            let g = gen_member(&mut rng, &orc, 10);
            rep.check(orc.member(&g), || format!("{orc}: generator left the class"));
            rep.check(
                orc.solve_in_class(&g).size() == solver::opt_value(&g),
                || format!("{orc}: class solve not optimal on {g:?}"),
            );
        }
        if orc.hereditary() {
            for _ in 0..20 {
                let g = gen_member(&mut rng, &orc, 9);
                let drop: VertexSet = (0..g.n()).filter(|_| rng.gen_bool(0.3)).collect();
                let (h, _) = g.remove_vertices(&drop).expect("subset in range");
                rep.check(orc.member(&h), || {
                    format!("{orc}: not closed under deleting {drop} from {g:?}")
                });
            }
        }
        for _ in 0..15 {
            let g1 = gen_member(&mut rng, &orc, 7);
            let g2 = gen_member(&mut rng, &orc, 7);
            rep.check(orc.member(&g1.disjoint_union(&g2)), || {
                format!("{orc}: not closed under disjoint union")
            });
        }
        for d in 1..=5 {
            rep.check(
                beta_upper_bound(&orc, d - 1) < beta_upper_bound(&orc, d),
                || format!("{orc}: bound not monotone at {d}"),
            );
        }
        if orc.beta() > 0 {
            for _ in 0..15 {
                let g = gen_member(&mut rng, &orc, 9);
                let beta = blocking::max_minimal_blocking_set_size(&g, &ExactVc, None).value;
                rep.check(beta <= orc.beta(), || {
                    format!("{orc}: member {g:?} has blocking set of size {beta}")
                });
            }
        }
    }
    rep
}

/// Treedepth closed form on paths, component decomposition, hereditary
/// monotonicity, and forest/distance agreement.
pub fn suite_elimination(seed: u64) -> SuiteReport {
    let mut rep = SuiteReport::new("elimination");
    let mut rng = rng_for(seed, 4);
    let empty = ClassOracle::new(OracleTag::Empty);
    for n in 1..=15usize {
        let expected = (usize::BITS - n.leading_zeros()) as usize;
        let got = elimination::elimination_distance(&crate::graph::small::path(n), &empty, 6);
        rep.check(got == elimination::EdOutcome::Within(expected), || {
            format!("treedepth of P{n} mismatch")
        });
    }
    let forest_cls = ClassOracle::new(OracleTag::Forest);
    for _ in 0..30 {
        let (n1, n2) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
        let g1 = gen_graph(&mut rng, n1, 0.4);
        let g2 = gen_graph(&mut rng, n2, 0.4);
        let u = g1.disjoint_union(&g2);
        let d1 = elimination::elimination_distance(&g1, &forest_cls, 6).value().unwrap();
        let d2 = elimination::elimination_distance(&g2, &forest_cls, 6).value().unwrap();
        let du = elimination::elimination_distance(&u, &forest_cls, 6).value().unwrap();
        rep.check(du == d1.max(d2), || format!("union distance on {g1:?}+{g2:?}"));
    }
    for _ in 0..30 {
        let n = rng.gen_range(1..=8);
        let g = gen_graph(&mut rng, n, 0.4);
        let d = elimination::elimination_distance(&g, &forest_cls, n).value().unwrap();
        let v = rng.gen_range(0..n);
        let (h, _) = g.remove_vertices(&VertexSet::singleton(v)).expect("in range");
        let dh = elimination::elimination_distance(&h, &forest_cls, n).value().unwrap();
        rep.check(dh <= d, || format!("deletion raised distance on {g:?}"));
    }
    for orc in [ClassOracle::new(OracleTag::IndSet), ClassOracle::new(OracleTag::Lp)] {
        for _ in 0..20 {
            let n = rng.gen_range(1..=7);
            let g = gen_graph(&mut rng, n, 0.35);
            for d in 0..=2 {
                let within = elimination::elimination_distance(&g, &orc, d).value().is_some();
                let forest = elimination::elimination_forest(&g, &orc, d);
                rep.check(within == forest.is_some(), || {
                    format!("{orc}: forest/distance disagree at d={d} on {g:?}")
                });
                if let Some(f) = forest {
                    rep.check(elimination::verify_forest(&g, &f, &orc), || {
                        format!("{orc}: invalid forest for {g:?}")
                    });
                }
            }
        }
    }
    rep
}

/// Acceptance: deficit and apex blocking tests agree; minimal sets have
/// deficit one and live in one component. Plus upward closure and the
/// bipartite bound.
pub fn suite_blocking(seed: u64) -> SuiteReport {
    let mut rep = SuiteReport::new("blocking");
    let mut rng = rng_for(seed, 5);
    for _ in 0..500 {
        let n = rng.gen_range(1..=10);
        let g = gen_graph(&mut rng, n, 0.35);
        let y: VertexSet = (0..n).filter(|_| rng.gen_bool(0.3)).collect();
        let verdict = blocking::is_blocking_set(&g, &y, &ExactVc).expect("in range");
        let apex = blocking::is_blocking_set_apex(&g, &y, &ExactVc).expect("in range");
        rep.check(verdict.is_blocking == apex, || {
            format!("blocking tests disagree on {g:?} with {y}")
        });
        rep.check(
            verdict.is_blocking == (verdict.deficit >= 1),
            || format!("deficit inconsistent on {g:?} with {y}"),
        );
        if !y.is_empty() && blocking::is_minimal_blocking_set(&g, &y, &ExactVc).expect("in range")
        {
            rep.check(
                blocking::verify_blocking_basics(&g, &y, &ExactVc).is_ok(),
                || format!("minimal set basics failed on {g:?} with {y}"),
            );
        }
        if verdict.is_blocking && n < 10 {
            let sup = y.with(rng.gen_range(0..n));
            rep.check(
                blocking::is_blocking_set(&g, &sup, &ExactVc)
                    .expect("in range")
                    .is_blocking,
                || format!("upward closure failed on {g:?}"),
            );
        }
    }
    for _ in 0..300 {
        let n = rng.gen_range(1..=10);
        let g = gen_bipartite(&mut rng, n, 0.4);
        let beta = blocking::max_minimal_blocking_set_size(&g, &ExactVc, None).value;
        rep.check(beta <= 2, || format!("bipartite blocking bound broken on {g:?}"));
    }
    rep
}

fn check_tower(
    rep: &mut SuiteReport,
    oracle: &ClassOracle,
    d: usize,
    expected: usize,
    enumerate: bool,
) {
    let base = match gadgets::base_witness(oracle) {
        Ok(b) => b,
        Err(e) => {
            rep.check(false, || format!("{oracle}: no base witness: {e}"));
            return;
        }
    };
    match gadgets::build_lb_tower(oracle, &base, d, true) {
        Ok(w) => {
            rep.check(w.blocking_set.len() == expected, || {
                format!(
                    "{oracle} d={d}: blocking set size {} expected {expected}",
                    w.blocking_set.len()
                )
            });
            rep.check(w.verify(true).is_ok(), || {
                format!("{oracle} d={d}: witness verification failed")
            });
            rep.check(w.claimed_ed <= d, || {
                format!("{oracle} d={d}: claimed distance {}", w.claimed_ed)
            });
            rep.check(expected == beta_upper_bound(oracle, d), || {
                format!("{oracle} d={d}: tower does not meet the bound")
            });
            if enumerate {
                let beta =
                    blocking::max_minimal_blocking_set_size(&w.graph, &ExactVc, None).value;
                rep.check(beta == expected, || {
                    format!("{oracle} d={d}: enumeration found beta {beta}, expected {expected}")
                });
            }
        }
        Err(e) => rep.check(false, || format!("{oracle} d={d}: tower failed: {e}")),
    }
}

/// Acceptance: extremal towers over the edgeless class hit 2, 3, 5 for
/// d = 1, 2, 3, with exhaustive confirmation at d = 1, 2.
pub fn suite_tower_indset(_seed: u64) -> SuiteReport {
    let mut rep = SuiteReport::new("tower-indset");
    let orc = ClassOracle::new(OracleTag::IndSet);
    check_tower(&mut rep, &orc, 1, 2, true);
    check_tower(&mut rep, &orc, 2, 3, true);
    check_tower(&mut rep, &orc, 3, 5, false);
    rep
}

/// Acceptance: towers over 3-clusters hit 5 and 9 for d = 1, 2.
pub fn suite_tower_cluster(_seed: u64) -> SuiteReport {
    let mut rep = SuiteReport::new("tower-cluster");
    let orc = ClassOracle::new(OracleTag::Cluster(3));
    check_tower(&mut rep, &orc, 1, 5, true);
    check_tower(&mut rep, &orc, 2, 9, true);
    rep
}

/// Acceptance: 300 seeded instances per class; the reduction preserves the
/// optimum drop exactly and leaves at most |X|^β components.
pub fn suite_rule1(seed: u64) -> SuiteReport {
    let mut rep = SuiteReport::new("rule1");
    for (salt, tag) in [
        OracleTag::Forest,
        OracleTag::Bipartite,
        OracleTag::Cluster(3),
        OracleTag::Lp,
    ]
    .into_iter()
    .enumerate()
    {
        let orc = ClassOracle::new(tag);
        let mut rng = rng_for(seed, 6 + salt as u64);
        for _ in 0..300 {
            let inst = gen_modulator_instance(&mut rng, &orc, 0, 18, 5);
            let (out, trace) = kernelize::apply_rule_1(&inst);
            let Budget::Value(k) = inst.k() else { unreachable!() };
            match out.k() {
                Budget::Value(k2) => {
                    let drop = solver::opt_value(inst.graph()) - solver::opt_value(out.graph());
                    rep.check(drop == k - k2 && drop == trace.k_decrement, || {
                        format!("{orc}: optimum drop {drop} vs budget drop {}", k - k2)
                    });
                }
                Budget::No => {
                    rep.check(trace.k_decrement > k, || {
                        format!("{orc}: spurious NO at budget {k}")
                    });
                }
            }
            let (rest, _) = out
                .graph()
                .remove_vertices(out.modulator())
                .expect("modulator in range");
            let bound = inst.modulator().len().pow(orc.beta() as u32);
            rep.check(rest.connected_components().len() <= bound, || {
                format!(
                    "{orc}: {} components exceed bound {bound}",
                    rest.connected_components().len()
                )
            });
            rep.check(inst.answer() == out.answer(), || {
                format!("{orc}: answer flipped on {:?}", inst.graph())
            });
        }
    }
    rep
}

/// Acceptance: the hypergraph transformation preserves yes/no for every
/// budget, on sampled 3-uniform hypergraphs with a triangle gadget, and
/// reproduces the worked three-edge instance with the 5-cycle gadget.
pub fn suite_transform(seed: u64) -> SuiteReport {
    let mut rep = SuiteReport::new("transform");
    let mut rng = rng_for(seed, 10);
    let orc = ClassOracle::new(OracleTag::Cluster(3));
    let triangle = crate::graph::small::clique(3);
    let b3 = VertexSet::full(3);
    for _ in 0..200 {
        let n = rng.gen_range(3..=6);
        let m = rng.gen_range(1..=3);
        let mut edges = Vec::new();
        let mut guard = 0;
        while edges.len() < m && guard < 50 {
            guard += 1;
            let mut e: Vec<usize> = Vec::new();
            while e.len() < 3 {
                let v = rng.gen_range(0..n);
                if !e.contains(&v) {
                    e.push(v);
                }
            }
            e.sort_unstable();
            if !edges.contains(&e) {
                edges.push(e);
            }
        }
        let m = edges.len();
        let hyp = Hypergraph::new(n, 3, edges).expect("sampled edges are 3-uniform");
        let hyp_opt = hypergraph_opt(&hyp);
        let inst = gadgets::transform_hypergraph_vc(&hyp, 0, &triangle, &b3, &orc)
            .expect("triangle blocks at full size");
        let inst_opt = exhaustive_opt(inst.graph());
        rep.check(inst_opt == hyp_opt + 2 * m, || {
            format!("transformed optimum off: {inst_opt} vs {hyp_opt} + {}", 2 * m)
        });
        for k in 0..=n {
            let kp = 2 * m + k;
            rep.check((hyp_opt <= k) == (inst_opt <= kp), || {
                format!("equivalence broke at k={k}")
            });
        }
    }
    // Worked instance: six vertices, three 3-edges, budget two; the
    // 5-cycle gadget has optimum 3, so the derived budget is 2 + 3*3.
    let hyp = Hypergraph::new(6, 3, vec![vec![0, 1, 2], vec![0, 2, 3], vec![3, 4, 5]])
        .expect("worked instance");
    let c5 = crate::graph::small::cycle(5);
    let b = VertexSet::from_iter([0, 1, 2]);
    let parts = gadgets::transform_parts(&hyp, 2, &c5, &b).expect("5-cycle blocks at size 3");
    rep.check(parts.k_adjusted == 2 + 3 * 3, || {
        format!("worked budget {}", parts.k_adjusted)
    });
    rep.check(hypergraph_opt(&hyp) == 2, || "worked hypergraph optimum".into());
    rep.check(exhaustive_opt(&parts.graph) == 11, || {
        "worked instance should have a minimum cover of size 11".into()
    });
    rep
}

/// Acceptance: LP bounds, König equality on bipartite graphs, and the
/// persistence identity, over 500 seeded graphs.
pub fn suite_lp(seed: u64) -> SuiteReport {
    let mut rep = SuiteReport::new("lp");
    let mut rng = rng_for(seed, 11);
    for i in 0..500 {
        let n = rng.gen_range(0..=14);
        let g = if i % 3 == 0 {
            gen_bipartite(&mut rng, n, 0.35)
        } else {
            gen_graph(&mut rng, n, 0.3)
        };
        let sol = solver::lp_half_integral(&g);
        let opt = solver::opt_value(&g);
        rep.check(
            sol.doubled_value <= 2 * opt && opt <= sol.doubled_value,
            || format!("LP bounds broken on {g:?}"),
        );
        rep.check(sol.is_feasible(&g), || format!("infeasible LP solution on {g:?}"));
        if let Some((l, r)) = g.bipartition() {
            let mm = solver::max_matching_bipartite(&g, &l, &r)
                .expect("valid sides")
                .len();
            rep.check(sol.doubled_value == 2 * mm && mm == opt, || {
                format!("König equality failed on {g:?}")
            });
        }
        let nt = solver::nemhauser_trotter(&g);
        let (half, _) = g.induced_subgraph(&nt.v_half).expect("partition in range");
        rep.check(
            opt == nt.v1.len() + solver::opt_value(&half)
                && g.is_independent_set(&nt.v0)
                && g.neighborhood(&nt.v0).is_subset_of(&nt.v1),
            || format!("persistence identity failed on {g:?}"),
        );
    }
    rep
}

/// Acceptance: the extracted LP modulator has size exactly twice the
/// integrality gap and leaves an LP-tight graph, over 200 seeded graphs.
pub fn suite_lp_modulator(seed: u64) -> SuiteReport {
    let mut rep = SuiteReport::new("lp-modulator");
    let mut rng = rng_for(seed, 12);
    let lp = ClassOracle::new(OracleTag::Lp);
    for _ in 0..200 {
        let n = rng.gen_range(0..=14);
        let g = gen_graph(&mut rng, n, 0.3);
        let x = kernelize::lp_modulator(&g);
        let gap2 = 2 * solver::opt_value(&g) - solver::lp_half_integral(&g).doubled_value;
        rep.check(x.len() == gap2, || {
            format!("modulator size {} expected {gap2} on {g:?}", x.len())
        });
        let (rest, _) = g.remove_vertices(&x).expect("modulator in range");
        rep.check(lp.member(&rest), || format!("remainder not LP-tight on {g:?}"));
    }
    rep
}

/// Acceptance: the forest-guided solver matches the enumeration optimum on
/// 200 planted instances over the forest and LP-tight classes.
pub fn suite_bounded_ed(seed: u64) -> SuiteReport {
    let mut rep = SuiteReport::new("bounded-ed");
    for (salt, tag) in [OracleTag::Forest, OracleTag::Lp].into_iter().enumerate() {
        let orc = ClassOracle::new(tag);
        let mut rng = rng_for(seed, 13 + salt as u64);
        for _ in 0..100 {
            let d = rng.gen_range(0..=2);
            let (g, f) = gen_planted_forest(&mut rng, &orc, d, 13);
            rep.check(elimination::verify_forest(&g, &f, &orc), || {
                format!("{orc}: planted forest invalid for {g:?}")
            });
            match elimination::solve_vc_bounded_ed(&g, &f, &orc) {
                Ok(c) => rep.check(c.size() == exhaustive_opt(&g), || {
                    format!("{orc}: solver got {} on {g:?}", c.size())
                }),
                Err(e) => rep.check(false, || format!("{orc}: solver failed: {e}")),
            }
        }
    }
    rep
}

/// Acceptance: the depth-reduction driver lands on depth 0, preserves the
/// answer exactly, and respects the per-level component bounds, on 100
/// seeded instances.
pub fn suite_kernelize(seed: u64) -> SuiteReport {
    let mut rep = SuiteReport::new("kernelize");
    for (salt, tag) in [
        OracleTag::Forest,
        OracleTag::Bipartite,
        OracleTag::Cluster(3),
        OracleTag::Lp,
    ]
    .into_iter()
    .enumerate()
    {
        let orc = ClassOracle::new(tag);
        let mut rng = rng_for(seed, 17 + salt as u64);
        for _ in 0..25 {
            let d = rng.gen_range(0..=2);
            let inst = gen_modulator_instance(&mut rng, &orc, d, 18, 5);
            // Per-level component bound, checked on each rule application.
            let mut cur = inst.clone();
            let mut ok_levels = true;
            loop {
                let (after, _) = kernelize::apply_rule_1(&cur);
                let (rest, _) = after
                    .graph()
                    .remove_vertices(after.modulator())
                    .expect("modulator in range");
                let beta = beta_upper_bound(&orc, cur.depth());
                let bound = cur.modulator().len().saturating_pow(beta as u32);
                ok_levels &= rest.connected_components().len() <= bound;
                if cur.depth() == 0 {
                    break;
                }
                match kernelize::reduce_depth_once(&cur) {
                    Ok((next, _)) => cur = next,
                    Err(e) => {
                        rep.check(false, || format!("{orc}: depth reduction failed: {e}"));
                        break;
                    }
                }
            }
            rep.check(ok_levels, || format!("{orc}: component bound broken"));
            match kernelize::kernelize_to_base(&inst) {
                Ok((out, traces)) => {
                    rep.check(out.depth() == 0, || format!("{orc}: depth not zero"));
                    rep.check(traces.len() == d + 1, || format!("{orc}: trace count"));
                    rep.check(inst.answer() == out.answer(), || {
                        format!("{orc}: answer flipped on {:?}", inst.graph())
                    });
                    let (rest, _) = out
                        .graph()
                        .remove_vertices(out.modulator())
                        .expect("modulator in range");
                    rep.check(
                        elimination::elimination_distance(&rest, &orc, 0).value() == Some(0),
                        || format!("{orc}: residual components not in class"),
                    );
                    if let (Budget::Value(k0), Budget::Value(k1)) = (inst.k(), out.k()) {
                        let drop =
                            solver::opt_value(inst.graph()) - solver::opt_value(out.graph());
                        rep.check(drop == k0 - k1, || {
                            format!("{orc}: optimum drop {drop} vs {}", k0 - k1)
                        });
                    }
                }
                Err(e) => rep.check(false, || format!("{orc}: driver failed: {e}")),
            }
        }
    }
    rep
}

/// Acceptance: graphs verified within elimination distance one of the
/// LP-tight class have no minimal blocking set larger than five.
pub fn suite_clp_bound(seed: u64) -> SuiteReport {
    let mut rep = SuiteReport::new("clp-bound");
    let mut rng = rng_for(seed, 21);
    let lp = ClassOracle::new(OracleTag::Lp);
    let mut produced = 0;
    while produced < 100 {
        let g = gen_bounded_ed_graph(&mut rng, &lp, 1, 11);
        if g.n() > 12 {
            continue;
        }
        if elimination::elimination_distance(&g, &lp, 1).value().is_none() {
            rep.check(false, || format!("construction left distance one: {g:?}"));
            continue;
        }
        produced += 1;
        let beta = blocking::max_minimal_blocking_set_size(&g, &ExactVc, None).value;
        rep.check(beta <= 5, || {
            format!("blocking set of size {beta} at distance one on {g:?}")
        });
    }
    rep
}

/// Structural checks on every minimum cover surviving the reduction: some
/// minimum cover of the reduced instance meets every saturated chunk.
pub fn suite_rule1_structure(seed: u64) -> SuiteReport {
    let mut rep = SuiteReport::new("rule1-structure");
    let mut rng = rng_for(seed, 22);
    let orc = ClassOracle::new(OracleTag::Forest);
    for _ in 0..40 {
        let inst = gen_modulator_instance(&mut rng, &orc, 0, 12, 3);
        let (out, trace) = kernelize::apply_rule_1(&inst);
        if out.k() == Budget::No || out.graph().n() > 14 {
            continue;
        }
        // Saturated chunks: everything outside the violator.
        let violators = &trace.violator_chunks;
        let chunks = kernelize::enumerate_chunks(
            inst.graph(),
            inst.modulator(),
            crate::oracle::beta_upper_bound(&orc, 0),
        );
        let saturated: Vec<&VertexSet> =
            chunks.iter().filter(|c| !violators.contains(c)).collect();
        if saturated.is_empty() {
            continue;
        }
        // Map the chunks into the reduced graph: the modulator ids moved.
        let covers = exhaustive_min_covers(out.graph());
        let old_of_new: Vec<usize> = {
            // Reconstruct the remap by matching modulator orders.
            let deleted: VertexSet = trace
                .deleted_components
                .iter()
                .fold(VertexSet::new(), |a, b| a.union(b));
            (0..inst.graph().n()).filter(|v| !deleted.contains(*v)).collect()
        };
        let to_new = |old: usize| old_of_new.binary_search(&old).ok();
        let hit_all = covers.iter().any(|cover| {
            saturated.iter().all(|chunk| {
                chunk
                    .iter()
                    .any(|v| to_new(v).is_some_and(|nv| cover.contains(nv)))
            })
        });
        rep.check(hit_all, || {
            format!("no minimum cover meets every saturated chunk on {:?}", inst.graph())
        });
    }
    rep
}

/// Every suite, in a deterministic order.
pub fn all_suites() -> Vec<(&'static str, fn(u64) -> SuiteReport)> {
    vec![
        ("graph", suite_graph),
        ("solver", suite_solver),
        ("oracles", suite_oracles),
        ("elimination", suite_elimination),
        ("blocking", suite_blocking),
        ("tower-indset", suite_tower_indset),
        ("tower-cluster", suite_tower_cluster),
        ("rule1", suite_rule1),
        ("rule1-structure", suite_rule1_structure),
        ("transform", suite_transform),
        ("lp", suite_lp),
        ("lp-modulator", suite_lp_modulator),
        ("bounded-ed", suite_bounded_ed),
        ("kernelize", suite_kernelize),
        ("clp-bound", suite_clp_bound),
    ]
}

/// Runs one suite by name, or all of them for "all". None for unknown
/// names.
pub fn run_suite(name: &str, seed: u64) -> Option<Vec<SuiteReport>> {
    let suites = all_suites();
    if name == "all" {
        return Some(suites.into_iter().map(|(_, f)| f(seed)).collect());
    }
    suites
        .into_iter()
        .find(|(n, _)| *n == name)
        .map(|(_, f)| vec![f(seed)])
}
