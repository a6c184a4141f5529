//! Constructions that manufacture graphs with large minimal blocking
//! sets, and the transformation from uniform-hypergraph vertex cover to
//! modulator instances.
//!
//! Three building blocks amplify blocking sets:
//! * attaching an apex to a minimal blocking set Y yields Y plus the apex
//!   as a minimal blocking set, raising the optimum by one;
//! * gluing two graphs by one edge between chosen blocking-set vertices
//!   merges the remaining blocking-set vertices, with additive optimum;
//! * doubling (apex, then glue with a fresh copy) turns a size-s minimal
//!   blocking set into one of size 2s - 1 while raising the elimination
//!   distance by at most one — the apex separates the two copies.
//!
//! Iterating the doubling from a class member of maximal blocking-set size
//! realizes the extremal sizes for bounded elimination distance.

use crate::blocking::{self, ExactVc};
use crate::elimination;
use crate::graph::{Graph, Hypergraph, VertexSet};
use crate::kernelize::{Budget, ModulatorInstance};
use crate::oracle::ClassOracle;
use crate::solver;
use crate::{Error, Result};

/// A graph, a claimed minimal blocking set, and the claims that make it a
/// checkable exhibit: the optimum cover size and an elimination-distance
/// bound for the named base class.
#[derive(Clone, Debug)]
pub struct GadgetWitness {
    pub graph: Graph,
    pub blocking_set: VertexSet,
    pub claimed_opt: usize,
    pub claimed_ed: usize,
    pub oracle: ClassOracle,
}

impl GadgetWitness {
    /// A depth-0 witness: the graph must be a class member and the set a
    /// minimal blocking set. Fully verified.
    pub fn base(oracle: ClassOracle, graph: Graph, blocking_set: VertexSet) -> Result<Self> {
        if !oracle.member(&graph) {
            return Err(Error::WitnessInvalid(format!(
                "base graph is not a member of {oracle}"
            )));
        }
        let w = GadgetWitness {
            claimed_opt: solver::opt_value(&graph),
            claimed_ed: 0,
            graph,
            blocking_set,
            oracle,
        };
        w.verify(true)?;
        Ok(w)
    }

    /// Re-checks every claim: minimal blocking set (exact solver), optimum
    /// value, and, when `check_ed` is set, the elimination-distance bound.
    pub fn verify(&self, check_ed: bool) -> Result<()> {
        if !blocking::is_minimal_blocking_set(&self.graph, &self.blocking_set, &ExactVc)? {
            return Err(Error::WitnessInvalid(format!(
                "{} is not a minimal blocking set",
                self.blocking_set
            )));
        }
        let opt = solver::opt_value(&self.graph);
        if opt != self.claimed_opt {
            return Err(Error::WitnessInvalid(format!(
                "claimed opt {} but solver found {opt}",
                self.claimed_opt
            )));
        }
        if check_ed
            && elimination::elimination_distance(&self.graph, &self.oracle, self.claimed_ed)
                .value()
                .is_none()
        {
            return Err(Error::WitnessInvalid(format!(
                "elimination distance to {} exceeds claimed {}",
                self.oracle, self.claimed_ed
            )));
        }
        Ok(())
    }
}

/// Adds a fresh vertex adjacent to exactly the witness's blocking set.
/// The new set (old set plus the apex) is minimal blocking and the optimum
/// rises by one; the distance bound rises by at most one since deleting
/// the apex restores the old graph.
pub fn attach_blocker_apex(w: &GadgetWitness) -> Result<GadgetWitness> {
    attach_impl(w, true)
}

fn attach_impl(w: &GadgetWitness, check_ed: bool) -> Result<GadgetWitness> {
    w.verify(false)?;
    let apex = w.graph.n();
    let graph = w.graph.with_apex(&w.blocking_set)?;
    let out = GadgetWitness {
        graph,
        blocking_set: w.blocking_set.with(apex),
        claimed_opt: w.claimed_opt + 1,
        claimed_ed: w.claimed_ed + 1,
        oracle: w.oracle,
    };
    out.verify(check_ed)?;
    Ok(out)
}

/// Disjoint union plus one edge between `pick1` and `pick2`; the union of
/// the two blocking sets minus the picked endpoints is minimal blocking
/// and the optimum is additive. Requires the first blocking set to have
/// size at least two. The distance claim is computed directly since
/// gluing gives no arithmetic bound for non-hereditary classes.
pub fn glue_on_blockers(
    w1: &GadgetWitness,
    pick1: usize,
    w2: &GadgetWitness,
    pick2: usize,
) -> Result<GadgetWitness> {
    if w1.blocking_set.len() < 2 {
        return Err(Error::WitnessInvalid(
            "gluing needs a first blocking set of size at least two".into(),
        ));
    }
    if !w1.blocking_set.contains(pick1) || !w2.blocking_set.contains(pick2) {
        return Err(Error::WitnessInvalid(
            "picked vertices must lie in the blocking sets".into(),
        ));
    }
    w1.verify(false)?;
    w2.verify(false)?;
    let (graph, blocking_set) = glue_parts(w1, pick1, w2, pick2);
    let claimed_ed = exact_ed(&graph, &w1.oracle);
    let out = GadgetWitness {
        graph,
        blocking_set,
        claimed_opt: w1.claimed_opt + w2.claimed_opt,
        claimed_ed,
        oracle: w1.oracle,
    };
    out.verify(true)?;
    Ok(out)
}

fn glue_parts(
    w1: &GadgetWitness,
    pick1: usize,
    w2: &GadgetWitness,
    pick2: usize,
) -> (Graph, VertexSet) {
    let shift = w1.graph.n();
    let mut union = w1.graph.disjoint_union(&w2.graph);
    // disjoint_union cannot fail to re-add one cross edge.
    let mut edges: Vec<(usize, usize)> = union.edges().collect();
    edges.push((pick1, pick2 + shift));
    union = Graph::from_edges(union.n(), &edges).expect("glue edge is simple");
    let blocking = w1
        .blocking_set
        .without(pick1)
        .union(&VertexSet::from_iter(
            w2.blocking_set.without(pick2).iter().map(|v| v + shift),
        ));
    (union, blocking)
}

fn exact_ed(g: &Graph, oracle: &ClassOracle) -> usize {
    elimination::elimination_distance(g, oracle, g.n())
        .value()
        .expect("distance is at most n")
}

/// Doubling: apex the witness, then glue the result to a fresh copy of the
/// original through the apex. The blocking set doubles to 2|Y| - 1 and the
/// distance bound rises by exactly one, because deleting the apex leaves
/// two disjoint copies of the original graph.
pub fn double_blocking_gadget(w: &GadgetWitness) -> Result<GadgetWitness> {
    double_impl(w, true)
}

fn double_impl(w: &GadgetWitness, check_ed: bool) -> Result<GadgetWitness> {
    let apexed = attach_impl(w, check_ed)?;
    let apex = w.graph.n();
    let pick2 = w
        .blocking_set
        .min()
        .ok_or_else(|| Error::WitnessInvalid("blocking set is empty".into()))?;
    let (graph, blocking_set) = glue_parts(&apexed, apex, w, pick2);
    let out = GadgetWitness {
        graph,
        blocking_set,
        claimed_opt: apexed.claimed_opt + w.claimed_opt,
        claimed_ed: w.claimed_ed + 1,
        oracle: w.oracle,
    };
    out.verify(check_ed)?;
    Ok(out)
}

/// Iterates the amplification steps d times starting from a class member
/// whose blocking set has the class-maximal size. Produces a witness at
/// distance at most d whose minimal blocking set has size 2^{d-1} + 1 when
/// the class bound is one, and (β - 1)·2^d + 1 otherwise. Every level is
/// verified; `check_ed` gates only the elimination-distance checks, the
/// one expensive step on deep towers.
pub fn build_lb_tower(
    oracle: &ClassOracle,
    base: &GadgetWitness,
    d: usize,
    check_ed: bool,
) -> Result<GadgetWitness> {
    if d == 0 {
        return Err(Error::WitnessInvalid("tower depth must be at least 1".into()));
    }
    if base.claimed_ed != 0 || !oracle.member(&base.graph) {
        return Err(Error::WitnessInvalid("tower base must be a class member".into()));
    }
    if base.blocking_set.len() != oracle.beta() {
        return Err(Error::BlockingSizeMismatch {
            got: base.blocking_set.len(),
            want: oracle.beta(),
        });
    }
    let mut w = if oracle.beta() == 1 {
        attach_impl(base, check_ed)?
    } else {
        double_impl(base, check_ed)?
    };
    for _ in 2..=d {
        let prev = w.blocking_set.len();
        w = double_impl(&w, check_ed)?;
        debug_assert_eq!(w.blocking_set.len(), 2 * prev - 1);
    }
    Ok(w)
}

/// The registry's extremal base member per class: a graph in the class
/// with a minimal blocking set of size exactly β. The empty class has no
/// nonempty member and supports no tower.
pub fn base_witness(oracle: &ClassOracle) -> Result<GadgetWitness> {
    use crate::graph::small::{clique, cycle, path};
    use crate::oracle::OracleTag;
    let (g, b) = match oracle.tag() {
        OracleTag::Empty => return Err(Error::UnsupportedOracle(oracle.to_string())),
        OracleTag::IndSet => (Graph::empty(1), VertexSet::singleton(0)),
        // P4's endpoint pair blocks minimally; checked by enumeration in
        // the tests.
        OracleTag::Forest => (path(4), VertexSet::from_iter([0, 3])),
        OracleTag::Bipartite | OracleTag::Lp => (cycle(4), VertexSet::from_iter([0, 1])),
        OracleTag::Cluster(q) => (clique(q), VertexSet::full(q)),
    };
    GadgetWitness::base(*oracle, g, b)
}

/// Raw output of the hypergraph transformation, independent of any class
/// registry: the graph, the adjusted budget, and the modulator (one vertex
/// per hypergraph vertex).
#[derive(Debug)]
pub struct TransformParts {
    pub graph: Graph,
    pub k_adjusted: usize,
    pub modulator: VertexSet,
}

/// Encodes a d-uniform hypergraph cover instance as a vertex cover
/// instance: one modulator vertex per hypergraph vertex, one copy of the
/// gadget per hyperedge, and the q-th blocking-set vertex of copy j wired
/// to the modulator vertex of the q-th vertex of hyperedge j (both in
/// ascending id order). The budget becomes m·OPT(gadget) + k.
pub fn transform_parts(
    hyp: &Hypergraph,
    k: usize,
    gadget: &Graph,
    blocking: &VertexSet,
) -> Result<TransformParts> {
    if blocking.len() != hyp.arity() {
        return Err(Error::BlockingSizeMismatch {
            got: blocking.len(),
            want: hyp.arity(),
        });
    }
    if !blocking::is_minimal_blocking_set(gadget, blocking, &ExactVc)? {
        return Err(Error::NotMinimalBlocking);
    }
    let n_mod = hyp.n();
    let gadget_n = gadget.n();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let block_ids: Vec<usize> = blocking.iter().collect();
    for (j, hedge) in hyp.edges().iter().enumerate() {
        let shift = n_mod + j * gadget_n;
        for (u, v) in gadget.edges() {
            edges.push((u + shift, v + shift));
        }
        for (q, &x) in hedge.iter().enumerate() {
            edges.push((block_ids[q] + shift, x));
        }
    }
    let graph = Graph::from_edges(n_mod + hyp.edges().len() * gadget_n, &edges)?;
    Ok(TransformParts {
        graph,
        k_adjusted: hyp.edges().len() * solver::opt_value(gadget) + k,
        modulator: VertexSet::full(n_mod),
    })
}

/// The transformation packaged as a modulator instance; the gadget must be
/// a member of the named class so the modulator really is a class
/// modulator.
pub fn transform_hypergraph_vc(
    hyp: &Hypergraph,
    k: usize,
    gadget: &Graph,
    blocking: &VertexSet,
    oracle: &ClassOracle,
) -> Result<ModulatorInstance> {
    if !oracle.member(gadget) {
        return Err(Error::WitnessInvalid(format!(
            "gadget is not a member of {oracle}"
        )));
    }
    let parts = transform_parts(hyp, k, gadget, blocking)?;
    ModulatorInstance::new(
        parts.graph,
        Budget::Value(parts.k_adjusted),
        parts.modulator,
        *oracle,
        0,
    )
}
