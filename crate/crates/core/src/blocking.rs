//! Blocking-set detection, minimality, and exhaustive enumeration.
//!
//! A set Y is *blocking* when no minimum vertex cover contains it,
//! equivalently when OPT(G - Y) + |Y| > OPT(G); the surplus
//! OPT(G - Y) + |Y| - OPT(G) is the *deficit* and is never negative.
//! Blocking sets are upward closed, which justifies the minimality test
//! used everywhere here: Y is minimal iff it blocks and no one-element
//! deletion Y \ {v} blocks, because any blocking strict subset would make
//! some Y \ {v} blocking by upward closure. The same closure makes the
//! enumeration pruning sound: strict supersets of a known blocking set are
//! blocking but never minimal, so they are skipped without testing.

use crate::graph::{Graph, VertexSet};
use crate::oracle::ClassOracle;
use crate::solver;
use crate::{Error, Result};
use std::cell::RefCell;
use std::collections::HashMap;

/// Something that can report minimum vertex cover sizes. The exact solver
/// always qualifies; a class oracle qualifies on the graphs its contract
/// covers (and stays correct elsewhere through its exact fallback).
pub trait OptSolver {
    fn opt(&self, g: &Graph) -> usize;
}

/// The exact branch-and-bound solver as an [`OptSolver`].
#[derive(Clone, Copy, Debug, Default)]
pub struct ExactVc;

impl OptSolver for ExactVc {
    fn opt(&self, g: &Graph) -> usize {
        solver::opt_value(g)
    }
}

impl OptSolver for ClassOracle {
    fn opt(&self, g: &Graph) -> usize {
        self.solve_in_class(g).size()
    }
}

/// Outcome of a blocking-set test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockingVerdict {
    pub y: VertexSet,
    pub is_blocking: bool,
    pub is_minimal: Option<bool>,
    /// OPT(G - Y) + |Y| - OPT(G).
    pub deficit: usize,
}

/// Caches OPT(G - removed) per removed set, so enumeration and minimality
/// probes reuse solves.
struct DeficitOracle<'a> {
    g: &'a Graph,
    opt: usize,
    solver: &'a dyn OptSolver,
    cache: RefCell<HashMap<VertexSet, usize>>,
}

impl<'a> DeficitOracle<'a> {
    fn new(g: &'a Graph, solver: &'a dyn OptSolver) -> Self {
        DeficitOracle {
            g,
            opt: solver.opt(g),
            solver,
            cache: RefCell::new(HashMap::new()),
        }
    }

    fn opt_without(&self, y: &VertexSet) -> usize {
        if let Some(&v) = self.cache.borrow().get(y) {
            return v;
        }
        let (h, _) = self.g.remove_vertices(y).expect("set validated by caller");
        let v = self.solver.opt(&h);
        self.cache.borrow_mut().insert(y.clone(), v);
        v
    }

    fn deficit(&self, y: &VertexSet) -> usize {
        (self.opt_without(y) + y.len()) - self.opt
    }

    fn blocking(&self, y: &VertexSet) -> bool {
        self.deficit(y) >= 1
    }

    fn minimal_blocking(&self, y: &VertexSet) -> bool {
        !y.is_empty() && self.blocking(y) && y.iter().all(|v| !self.blocking(&y.without(v)))
    }
}

/// Tests whether `y` blocks by comparing OPT(G) with OPT(G - Y) + |Y|.
pub fn is_blocking_set(g: &Graph, y: &VertexSet, solver: &dyn OptSolver) -> Result<BlockingVerdict> {
    if let Some(v) = y.max() {
        if v >= g.n() {
            return Err(Error::OutOfRange { v, n: g.n() });
        }
    }
    let oracle = DeficitOracle::new(g, solver);
    let deficit = oracle.deficit(y);
    Ok(BlockingVerdict {
        y: y.clone(),
        is_blocking: deficit >= 1,
        is_minimal: None,
        deficit,
    })
}

/// Apex variant: `y` blocks iff attaching one fresh vertex to exactly `y`
/// raises the optimum. Only needs a solver for the graph and the graph
/// plus one modulator vertex, so it works for non-hereditary classes.
pub fn is_blocking_set_apex(g: &Graph, y: &VertexSet, solver: &dyn OptSolver) -> Result<bool> {
    if y.is_empty() {
        return Ok(false);
    }
    let apexed = g.with_apex(y)?;
    Ok(solver.opt(&apexed) > solver.opt(g))
}

/// True iff `y` blocks and no one-element deletion blocks. Uses |y| + 1
/// solver calls; see the module docs for why one-element deletions
/// suffice.
pub fn is_minimal_blocking_set(g: &Graph, y: &VertexSet, solver: &dyn OptSolver) -> Result<bool> {
    if let Some(v) = y.max() {
        if v >= g.n() {
            return Err(Error::OutOfRange { v, n: g.n() });
        }
    }
    let oracle = DeficitOracle::new(g, solver);
    Ok(oracle.minimal_blocking(y))
}

/// Shrinks a blocking set to a minimal one by repeatedly dropping the
/// largest-id vertex whose removal keeps the set blocking, so the
/// smallest-id witnesses survive.
pub fn shrink_to_minimal(g: &Graph, y: &VertexSet, solver: &dyn OptSolver) -> Result<VertexSet> {
    let oracle = DeficitOracle::new(g, solver);
    if !oracle.blocking(y) {
        return Err(Error::NotBlocking);
    }
    let mut cur = y.clone();
    loop {
        let drop = cur
            .iter()
            .rev()
            .find(|&v| oracle.blocking(&cur.without(v)));
        match drop {
            Some(v) => {
                cur.remove(v);
            }
            None => return Ok(cur),
        }
    }
}

/// Result of the β(G) enumeration. `truncated` is set when a cap stopped
/// the search before every candidate size was examined, in which case
/// `value` is only the maximum found among sets of size at most cap + 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BetaValue {
    pub value: usize,
    pub truncated: bool,
}

/// Exact size of the largest minimal blocking set, by enumerating
/// candidate sets in increasing size and lexicographic order.
///
/// Vertices contained in every minimum cover never appear in a minimal
/// blocking set and are excluded up front. Supersets of an already-found
/// blocking set are skipped: they block but are not minimal. Every tested
/// candidate that blocks is therefore automatically minimal. The empty
/// graph has no blocking set at all and gets β = 0.
pub fn max_minimal_blocking_set_size(
    g: &Graph,
    solver: &dyn OptSolver,
    cap: Option<usize>,
) -> BetaValue {
    let n = g.n();
    if n == 0 {
        return BetaValue {
            value: 0,
            truncated: false,
        };
    }
    let oracle = DeficitOracle::new(g, solver);
    // v is in every minimum cover iff forbidding it (taking N(v) instead)
    // is strictly worse.
    let forced: VertexSet = (0..n)
        .filter(|&v| {
            let closed = VertexSet::from_iter(
                g.neighbors(v).iter().copied().chain(std::iter::once(v)),
            );
            oracle.opt_without(&closed) + g.degree(v) > oracle.opt
        })
        .collect();
    let allowed: Vec<usize> = (0..n).filter(|&v| !forced.contains(v)).collect();
    let limit = cap.map_or(allowed.len(), |c| (c + 1).min(allowed.len()));
    let mut found: Vec<VertexSet> = Vec::new();
    let mut best = 0;
    let mut current = Vec::new();
    for size in 1..=limit {
        enumerate_subsets(&allowed, size, 0, &mut current, &mut |subset| {
            let y = VertexSet::from_iter(subset.iter().copied());
            if found.iter().any(|f| f.is_subset_of(&y)) {
                return;
            }
            if oracle.blocking(&y) {
                best = best.max(y.len());
                found.push(y);
            }
        });
    }
    BetaValue {
        value: best,
        truncated: limit < allowed.len(),
    }
}

fn enumerate_subsets(
    pool: &[usize],
    size: usize,
    start: usize,
    current: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    if current.len() == size {
        visit(current);
        return;
    }
    let needed = size - current.len();
    for i in start..=pool.len().saturating_sub(needed) {
        current.push(pool[i]);
        enumerate_subsets(pool, size, i + 1, current, visit);
        current.pop();
    }
}

/// Which of the structural facts about minimal blocking sets held.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BasicsReport {
    /// No member lies in every minimum cover.
    pub avoids_forced_vertices: bool,
    /// If a member lies in no minimum cover, the set is that singleton.
    pub singleton_if_unavoidable: bool,
    /// The set touches exactly one connected component.
    pub single_component: bool,
    /// OPT(G - Y) + |Y| = OPT(G) + 1.
    pub deficit_exactly_one: bool,
}

/// Checks the four structural facts on a minimal blocking set; any failure
/// is an invariant violation carrying the counterexample.
pub fn verify_blocking_basics(
    g: &Graph,
    y: &VertexSet,
    solver: &dyn OptSolver,
) -> Result<BasicsReport> {
    let oracle = DeficitOracle::new(g, solver);
    if !oracle.minimal_blocking(y) {
        return Err(Error::NotMinimalBlocking);
    }
    let in_every = |v: usize| {
        let closed =
            VertexSet::from_iter(g.neighbors(v).iter().copied().chain(std::iter::once(v)));
        oracle.opt_without(&closed) + g.degree(v) > oracle.opt
    };
    let in_none = |v: usize| oracle.blocking(&VertexSet::singleton(v));
    let report = BasicsReport {
        avoids_forced_vertices: y.iter().all(|v| !in_every(v)),
        singleton_if_unavoidable: !y.iter().any(in_none) || y.len() == 1,
        single_component: {
            let touched = g
                .connected_components()
                .into_iter()
                .filter(|c| !c.intersection(y).is_empty())
                .count();
            touched == 1
        },
        deficit_exactly_one: oracle.deficit(y) == 1,
    };
    if !(report.avoids_forced_vertices
        && report.singleton_if_unavoidable
        && report.single_component
        && report.deficit_exactly_one)
    {
        return Err(Error::InvariantViolation(format!(
            "blocking-set basics failed on {g:?} with y = {y}: {report:?}"
        )));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::small::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn verdict(g: &Graph, ids: &[usize]) -> BlockingVerdict {
        is_blocking_set(g, &VertexSet::from_iter(ids.iter().copied()), &ExactVc).unwrap()
    }

    #[test]
    fn path_endpoint_blocks_middle_does_not() {
        let g = path(3);
        let v = verdict(&g, &[0]);
        assert!(v.is_blocking);
        assert_eq!(v.deficit, 1);
        let v = verdict(&g, &[1]);
        assert!(!v.is_blocking);
        assert_eq!(v.deficit, 0);
    }

    #[test]
    fn clique_blocks_only_at_full_vertex_set() {
        let g = clique(3);
        assert!(!verdict(&g, &[0, 1]).is_blocking);
        assert!(verdict(&g, &[0, 1, 2]).is_blocking);
        assert!(
            is_minimal_blocking_set(&g, &VertexSet::full(3), &ExactVc).unwrap(),
            "the whole clique is the unique minimal blocking set"
        );
    }

    #[test]
    fn apex_test_examples() {
        let g = path(3);
        assert!(is_blocking_set_apex(&g, &VertexSet::singleton(0), &ExactVc).unwrap());
        assert!(!is_blocking_set_apex(&g, &VertexSet::new(), &ExactVc).unwrap());
    }

    #[test]
    fn apex_agrees_with_deficit_on_random_pairs() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..150 {
            let n = rng.gen_range(1..=9);
            let g = crate::verify::gen_graph(&mut rng, n, 0.35);
            let y: VertexSet = (0..n).filter(|_| rng.gen_bool(0.3)).collect();
            let by_deficit = is_blocking_set(&g, &y, &ExactVc).unwrap().is_blocking;
            let by_apex = is_blocking_set_apex(&g, &y, &ExactVc).unwrap();
            assert_eq!(by_deficit, by_apex, "{g:?} with {y}");
        }
    }

    #[test]
    fn minimality_examples() {
        let g = path(3);
        assert!(!is_minimal_blocking_set(&g, &VertexSet::from_iter([0, 2]), &ExactVc).unwrap());
        let g = cycle(4);
        assert!(is_minimal_blocking_set(&g, &VertexSet::from_iter([0, 1]), &ExactVc).unwrap());
    }

    #[test]
    fn shrink_examples() {
        let g = path(3);
        let m = shrink_to_minimal(&g, &VertexSet::from_iter([0, 2]), &ExactVc).unwrap();
        assert_eq!(m, VertexSet::singleton(0), "smallest droppable id goes first");

        let g = clique(3);
        let m = shrink_to_minimal(&g, &VertexSet::full(3), &ExactVc).unwrap();
        assert_eq!(m, VertexSet::full(3));

        let g = cycle(4);
        let m = shrink_to_minimal(&g, &VertexSet::full(4), &ExactVc).unwrap();
        assert_eq!(m.len(), 2);
        assert!(is_minimal_blocking_set(&g, &m, &ExactVc).unwrap());

        assert!(matches!(
            shrink_to_minimal(&path(3), &VertexSet::singleton(1), &ExactVc),
            Err(Error::NotBlocking)
        ));
    }

    #[test]
    fn beta_examples() {
        assert_eq!(
            max_minimal_blocking_set_size(&clique(3), &ExactVc, None).value,
            3
        );
        assert_eq!(
            max_minimal_blocking_set_size(&cycle(4), &ExactVc, None).value,
            2
        );
        assert_eq!(
            max_minimal_blocking_set_size(&path(3), &ExactVc, None).value,
            1
        );
        assert_eq!(
            max_minimal_blocking_set_size(&Graph::empty(0), &ExactVc, None),
            BetaValue {
                value: 0,
                truncated: false
            }
        );
    }

    #[test]
    fn beta_cap_truncates() {
        let b = max_minimal_blocking_set_size(&clique(5), &ExactVc, Some(1));
        assert!(b.truncated);
        assert_eq!(b.value, 0, "cliques block only at the full vertex set");
    }

    #[test]
    fn beta_enumeration_matches_direct_minimality_scan() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..40 {
            let n = rng.gen_range(1..=8);
            let g = crate::verify::gen_graph(&mut rng, n, 0.4);
            let fast = max_minimal_blocking_set_size(&g, &ExactVc, None).value;
            // Oracle: test every nonempty subset for minimality directly.
            let mut slow = 0;
            for mask in 1u32..(1 << n) {
                let y: VertexSet = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
                if is_minimal_blocking_set(&g, &y, &ExactVc).unwrap() {
                    slow = slow.max(y.len());
                }
            }
            assert_eq!(fast, slow, "{g:?}");
        }
    }

    #[test]
    fn upward_closure_on_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(19);
        for _ in 0..80 {
            let n = rng.gen_range(1..=9);
            let g = crate::verify::gen_graph(&mut rng, n, 0.35);
            let y: VertexSet = (0..n).filter(|_| rng.gen_bool(0.3)).collect();
            if !is_blocking_set(&g, &y, &ExactVc).unwrap().is_blocking {
                continue;
            }
            let mut bigger = y.clone();
            for v in 0..n {
                bigger.insert(v);
                assert!(
                    is_blocking_set(&g, &bigger, &ExactVc).unwrap().is_blocking,
                    "superset stopped blocking: {g:?} {y} -> {bigger}"
                );
            }
        }
    }

    #[test]
    fn blocking_survives_deletion_of_cover_extendable_sets() {
        // If y blocks in g and z extends to a minimum cover, then y \ z
        // blocks in g - z.
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        let mut checked = 0;
        for _ in 0..400 {
            let n = rng.gen_range(2..=9);
            let g = crate::verify::gen_graph(&mut rng, n, 0.35);
            let y: VertexSet = (0..n).filter(|_| rng.gen_bool(0.3)).collect();
            let z: VertexSet = (0..n).filter(|_| rng.gen_bool(0.25)).collect();
            let oracle = DeficitOracle::new(&g, &ExactVc);
            if !oracle.blocking(&y) || oracle.deficit(&z) != 0 {
                continue;
            }
            let (h, remap) = g.remove_vertices(&z).unwrap();
            let y_rest = remap.set_to_new(&y.difference(&z));
            assert!(
                is_blocking_set(&h, &y_rest, &ExactVc).unwrap().is_blocking,
                "{g:?}, y = {y}, z = {z}"
            );
            checked += 1;
        }
        assert!(checked > 20, "sampled too few applicable pairs");
    }

    #[test]
    fn basics_hold_on_examples() {
        let g = cycle(4);
        let r = verify_blocking_basics(&g, &VertexSet::from_iter([0, 1]), &ExactVc).unwrap();
        assert!(r.deficit_exactly_one);

        let g = clique(3);
        let r = verify_blocking_basics(&g, &VertexSet::full(3), &ExactVc).unwrap();
        assert!(r.single_component);

        // In a disjoint union, a minimal blocking set stays inside one part.
        let g = path(3).disjoint_union(&path(3));
        let m = shrink_to_minimal(&g, &VertexSet::full(6), &ExactVc).unwrap();
        let r = verify_blocking_basics(&g, &m, &ExactVc).unwrap();
        assert!(r.single_component);
    }

    #[test]
    fn basics_reject_non_minimal_input() {
        let g = path(3);
        assert!(matches!(
            verify_blocking_basics(&g, &VertexSet::from_iter([0, 2]), &ExactVc),
            Err(Error::NotMinimalBlocking)
        ));
    }
}
