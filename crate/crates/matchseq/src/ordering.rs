//! Edge orderings and the sliding-window evaluators for `ms_r` and `cms_r`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// An ordering (labelling) of a graph: a bijection from its edges to
/// `0..|E|`, represented by the edge list in label order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeOrdering {
    graph: Graph,
    perm: Vec<Edge>,
}

/// A window of `len` consecutive edges (starting at label `start`) in which
/// `vertex` has degree greater than the bound that was being checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolatingWindow {
    pub start: usize,
    pub len: usize,
    pub vertex: u32,
}

/// The evaluated sequencibility of one ordering: the largest window length
/// `value` for which every window is (≤r)-regular, and, when `value < |E|`,
/// a witness window of length `value + 1` that is not.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequencibilityReport {
    pub value: usize,
    pub violating_window: Option<ViolatingWindow>,
}

impl EdgeOrdering {
    /// An ordering of `graph` given by `perm`, which must list every edge of
    /// the graph exactly once.
    pub fn new(graph: Graph, perm: Vec<Edge>) -> Result<Self> {
        let perm: Vec<Edge> = perm.into_iter().map(|e| Edge::new(e.0, e.1)).collect();
        let mut sorted = perm.clone();
        sorted.sort_unstable();
        if sorted != graph.edges() {
            return Err(Error::InvalidInput(
                "ordering is not a permutation of the graph's edges".into(),
            ));
        }
        Ok(EdgeOrdering { graph, perm })
    }

    /// Builds the graph from the listed edges and orders them as listed.
    pub fn from_edge_list(n: usize, edges: Vec<Edge>) -> Result<Self> {
        let graph = Graph::new(n, edges.iter().copied())?;
        EdgeOrdering::new(graph, edges)
    }

    /// The graph's edges in its canonical order, labelled 0, 1, 2, ...
    pub fn identity(graph: Graph) -> Self {
        let perm = graph.edges().to_vec();
        EdgeOrdering { graph, perm }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// Edges in label order: `perm()[i]` is the edge labelled `i`.
    pub fn perm(&self) -> &[Edge] {
        &self.perm
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn label_of(&self, e: &Edge) -> Option<usize> {
        self.perm.iter().position(|x| x == e)
    }

    /// Applies a vertex permutation to both the graph and the ordering.
    pub fn relabel(&self, vperm: &[u32]) -> Result<EdgeOrdering> {
        let graph = self.graph.relabel(vperm)?;
        let perm = self
            .perm
            .iter()
            .map(|e| Edge::new(vperm[e.0 as usize], vperm[e.1 as usize]))
            .collect();
        EdgeOrdering::new(graph, perm)
    }
}

/// Degree-table sweep shared by the graph and k-graph evaluators.
///
/// Returns the largest `s` such that every window of `s` consecutive edges
/// (cyclically consecutive if `cyclic`) has maximum degree at most `r`,
/// together with a violating window of length `value + 1` when one exists.
/// `vertices` yields the (distinct) vertices of an edge.
pub(crate) fn sweep_windows<E, I>(
    edges: &[E],
    n: usize,
    r: usize,
    cyclic: bool,
    vertices: impl Fn(&E) -> I,
) -> (usize, Option<ViolatingWindow>)
where
    I: IntoIterator<Item = u32>,
{
    let k = edges.len();
    debug_assert!(k >= 1 && r >= 1);
    let mut deg = vec![0usize; n];
    let mut value = k;

    // For each start l, extend the window as far as it stays (≤r)-regular.
    // Every feasible window length is bounded by the shortest maximal run
    // that stops before the array end (or by any run at all, cyclically).
    let mut right = 0usize;
    for left in 0..k {
        let cap = if cyclic { left + k } else { k };
        while right < cap {
            let e = &edges[right % k];
            let fits = vertices(e).into_iter().all(|v| deg[v as usize] < r);
            if !fits {
                break;
            }
            for v in vertices(e) {
                deg[v as usize] += 1;
            }
            right += 1;
        }
        let run = right - left;
        if cyclic || right < k {
            value = value.min(run);
        }
        // a lone edge always fits (r ≥ 1), so runs are never empty and
        // `right` stays ahead of `left`
        debug_assert!(run >= 1);
        for v in vertices(&edges[left % k]) {
            deg[v as usize] -= 1;
        }
    }

    let violating = if value < k {
        find_violation(edges, n, r, cyclic, value, &vertices)
    } else {
        None
    };
    (value, violating)
}

fn find_violation<E, I>(
    edges: &[E],
    n: usize,
    r: usize,
    cyclic: bool,
    value: usize,
    vertices: &impl Fn(&E) -> I,
) -> Option<ViolatingWindow>
where
    I: IntoIterator<Item = u32>,
{
    let k = edges.len();
    let len = value + 1;
    let starts = if cyclic { k } else { k - len + 1 };
    for start in 0..starts {
        let mut deg = vec![0usize; n];
        for off in 0..len {
            for v in vertices(&edges[(start + off) % k]) {
                deg[v as usize] += 1;
            }
        }
        if let Some(v) = deg.iter().position(|&d| d > r) {
            return Some(ViolatingWindow {
                start,
                len,
                vertex: v as u32,
            });
        }
    }
    None
}

fn check_eval_pre(ordering: &EdgeOrdering, r: usize) -> Result<()> {
    if r < 1 {
        return Err(Error::Precondition("degree bound r must be at least 1".into()));
    }
    if ordering.is_empty() {
        return Err(Error::Precondition("ordering has no edges".into()));
    }
    Ok(())
}

/// Largest `s` such that every `s` consecutive edges of the ordering form a
/// (≤r)-regular subgraph. Always at least 1.
pub fn eval_ms_r(ordering: &EdgeOrdering, r: usize) -> Result<SequencibilityReport> {
    check_eval_pre(ordering, r)?;
    let (value, violating_window) =
        sweep_windows(ordering.perm(), ordering.n(), r, false, |e| e.endpoints());
    Ok(SequencibilityReport {
        value,
        violating_window,
    })
}

/// Cyclic variant of [`eval_ms_r`]: windows wrap around modulo `|E|`.
pub fn eval_cms_r(ordering: &EdgeOrdering, r: usize) -> Result<SequencibilityReport> {
    check_eval_pre(ordering, r)?;
    let (value, violating_window) =
        sweep_windows(ordering.perm(), ordering.n(), r, true, |e| e.endpoints());
    Ok(SequencibilityReport {
        value,
        violating_window,
    })
}

/// Maximum vertex degree among the `len` edges starting at label `start`
/// (wrapping modulo `|E|` when `cyclic`).
pub fn window_max_degree(
    ordering: &EdgeOrdering,
    start: usize,
    len: usize,
    cyclic: bool,
) -> Result<usize> {
    let k = ordering.len();
    if start >= k {
        return Err(Error::Precondition(format!("start {start} out of range")));
    }
    if len < 1 || len > k {
        return Err(Error::Precondition(format!("window length {len} out of range")));
    }
    if !cyclic && start + len > k {
        return Err(Error::Precondition(
            "non-cyclic window runs past the last edge".into(),
        ));
    }
    let mut deg = vec![0usize; ordering.n()];
    for off in 0..len {
        for v in ordering.perm()[(start + off) % k].endpoints() {
            deg[v as usize] += 1;
        }
    }
    Ok(deg.into_iter().max().unwrap_or(0))
}

/// The junction measure `ms_r(ℓ, ℓ')`: the largest `s` such that the list
/// made of the last `min(s-1, |E|)` edges of `l1` followed by the first
/// `min(s-1, |E'|)` edges of `l2` has at least `s` edges and every `s`
/// consecutive of them form a (≤r)-regular subgraph.
///
/// By convention the empty join at `s = 1` is vacuously regular, so the
/// result is always at least 1. Values above `min(|E|, |E'|) + 1` arise
/// when windows longer than a whole part stay (≤r)-regular; the
/// concatenation propositions rely on those.
pub fn junction_ms_r(l1: &EdgeOrdering, l2: &EdgeOrdering, r: usize) -> Result<usize> {
    if r < 1 {
        return Err(Error::Precondition("degree bound r must be at least 1".into()));
    }
    if l1.n() != l2.n() {
        return Err(Error::InvalidInput(
            "junction orderings must share a vertex set".into(),
        ));
    }
    if l1.perm().iter().any(|e| l2.graph().contains_edge(e)) {
        return Err(Error::InvalidInput(
            "junction orderings must be edge-disjoint".into(),
        ));
    }
    let (k1, k2) = (l1.len(), l2.len());
    let n = l1.n();
    for s in (2..=k1 + k2).rev() {
        let t1 = (s - 1).min(k1);
        let t2 = (s - 1).min(k2);
        if t1 + t2 < s {
            continue;
        }
        let join: Vec<Edge> = l1.perm()[k1 - t1..]
            .iter()
            .chain(&l2.perm()[..t2])
            .copied()
            .collect();
        if all_windows_regular(&join, n, r, s) {
            return Ok(s);
        }
    }
    Ok(1)
}

fn all_windows_regular(edges: &[Edge], n: usize, r: usize, s: usize) -> bool {
    let mut deg = vec![0usize; n];
    for (i, e) in edges.iter().enumerate() {
        if i >= s {
            for v in edges[i - s].endpoints() {
                deg[v as usize] -= 1;
            }
        }
        for v in e.endpoints() {
            deg[v as usize] += 1;
            if i >= s - 1 && deg[v as usize] > r {
                return false;
            }
        }
        // degrees may spike before the first full window forms; only full
        // windows are constrained
        if i == s - 1 && deg.iter().any(|&d| d > r) {
            return false;
        }
    }
    true
}
