//! Decompositions of the complete graph into matchings or 2-regular parts.
//!
//! Three constructions, all with fixed vertex encodings so that downstream
//! orderings print deterministically:
//!
//! * [`matching_decomposition_even`] — `K_2m` into `2m-1` perfect matchings
//!   `M_{i,j}` indexed by `i ∈ [c]`, `j ∈ [d]` with `cd = 2m-1`. Vertices:
//!   the hub is `0`, `v_{a,b}` is `1 + a·d + b`.
//! * [`walecki_cycles`] — `K_{2m+1}` into `m` Hamiltonian cycles `H_i`.
//!   Vertices: residue `x` is `x`, the hub is `2m`.
//! * [`two_regular_r`] — `K_{2m+1}` (odd `m`) into `m` spanning 2-regular
//!   parts `R_i` (a triangle at the hub plus crossed 4-cycles). Vertices:
//!   the hub is `0`, `v_{a,b}` is `1 + b·m + a`.

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// `a mod m` normalized into `0..m`.
pub(crate) fn md(a: i64, m: usize) -> usize {
    a.rem_euclid(m as i64) as usize
}

/// The partition `P_{x,y}` of `{0, .., y-1}` (odd `y`) into the pairs
/// `{x+l, x-l} mod y` for `l = 1 .. (y-1)/2` and the singleton `x mod y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairPartition {
    pub y: usize,
    pub x: usize,
    pub pairs: Vec<(usize, usize)>,
    pub singleton: usize,
}

pub fn pair_partition(x: i64, y: usize) -> Result<PairPartition> {
    if y == 0 || y % 2 == 0 {
        return Err(Error::InvalidInput(format!(
            "pair partition modulus must be odd and positive, got {y}"
        )));
    }
    let pairs = (1..=(y - 1) / 2)
        .map(|l| {
            let a = md(x + l as i64, y);
            let b = md(x - l as i64, y);
            (a.min(b), a.max(b))
        })
        .collect();
    Ok(PairPartition {
        y,
        x: md(x, y),
        pairs,
        singleton: md(x, y),
    })
}

/// What a decomposition's parts are, which fixes the degree condition
/// [`verify_decomposition`] applies to them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PartKind {
    /// Every vertex has degree at most 1 in each part.
    Matching,
    /// Every vertex has degree exactly 2 in each part.
    TwoRegular,
    /// Degree exactly 2 and a single spanning cycle.
    HamiltonianCycle,
    /// No degree condition.
    Generic,
}

/// A list of edge-disjoint subgraphs that together cover every edge of the
/// host graph exactly once.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub host: Graph,
    pub kind: PartKind,
    pub parts: Vec<Graph>,
}

/// The first reason a decomposition is not valid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecompositionViolation {
    DuplicateEdge { part: usize, edge: Edge },
    MissingEdge { edge: Edge },
    ForeignEdge { part: usize, edge: Edge },
    DegreeCondition { part: usize, vertex: u32, degree: usize },
    NotConnectedCycle { part: usize },
}

/// Checks pairwise edge-disjointness, exact coverage of the host's edges,
/// and the part kind's degree condition. Failures are reported, not thrown.
pub fn verify_decomposition(d: &Decomposition) -> std::result::Result<(), DecompositionViolation> {
    let mut seen: std::collections::BTreeMap<Edge, usize> = std::collections::BTreeMap::new();
    for (pi, part) in d.parts.iter().enumerate() {
        for e in part.edges() {
            if !d.host.contains_edge(e) {
                return Err(DecompositionViolation::ForeignEdge { part: pi, edge: *e });
            }
            if seen.insert(*e, pi).is_some() {
                return Err(DecompositionViolation::DuplicateEdge { part: pi, edge: *e });
            }
        }
    }
    for e in d.host.edges() {
        if !seen.contains_key(e) {
            return Err(DecompositionViolation::MissingEdge { edge: *e });
        }
    }
    for (pi, part) in d.parts.iter().enumerate() {
        let deg = part.degrees();
        match d.kind {
            PartKind::Matching => {
                if let Some(v) = deg.iter().position(|&x| x > 1) {
                    return Err(DecompositionViolation::DegreeCondition {
                        part: pi,
                        vertex: v as u32,
                        degree: deg[v],
                    });
                }
            }
            PartKind::TwoRegular | PartKind::HamiltonianCycle => {
                if let Some(v) = deg.iter().position(|&x| x != 2) {
                    return Err(DecompositionViolation::DegreeCondition {
                        part: pi,
                        vertex: v as u32,
                        degree: deg[v],
                    });
                }
                if d.kind == PartKind::HamiltonianCycle && !is_single_cycle(part) {
                    return Err(DecompositionViolation::NotConnectedCycle { part: pi });
                }
            }
            PartKind::Generic => {}
        }
    }
    Ok(())
}

fn is_single_cycle(g: &Graph) -> bool {
    // all degrees are 2 here; a single cycle is then just connectivity
    let n = g.n();
    if n == 0 {
        return false;
    }
    let mut adj = vec![Vec::new(); n];
    for e in g.edges() {
        adj[e.0 as usize].push(e.1 as usize);
        adj[e.1 as usize].push(e.0 as usize);
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == n
}

/// Hub-based vertex code for the even-order matching decomposition.
fn mvertex(a: usize, b: usize, d: usize) -> u32 {
    (1 + a * d + b) as u32
}

/// Decomposes `K_{2m}` into the `2m-1` perfect matchings `M_{i,j}`:
/// the hub edge `{∞, v_{i,j}}` together with every pair of vertices whose
/// first coordinates pair up in `P_{i,c}` and second coordinates in
/// `P_{j,d}`. Parts are listed in lexicographic `(i, j)` order.
pub fn matching_decomposition_even(m: usize, c: usize) -> Result<Decomposition> {
    if m < 2 {
        return Err(Error::Precondition("need 2m >= 4".into()));
    }
    let t = 2 * m - 1;
    if c == 0 || t % c != 0 {
        return Err(Error::InvalidInput(format!("c={c} does not divide 2m-1={t}")));
    }
    let d = t / c;
    let n = 2 * m;
    let mut parts = Vec::with_capacity(t);
    for i in 0..c {
        for j in 0..d {
            parts.push(Graph::new(n, matching_part_edges(i, j, c, d))?);
        }
    }
    Ok(Decomposition {
        host: Graph::complete(n),
        kind: PartKind::Matching,
        parts,
    })
}

pub(crate) fn matching_part_edges(i: usize, j: usize, c: usize, d: usize) -> Vec<Edge> {
    let pi = pair_partition(i as i64, c).expect("c odd");
    let pj = pair_partition(j as i64, d).expect("d odd");
    let mut edges = vec![Edge::new(0, mvertex(i, j, d))];
    // singleton first coordinate × paired second coordinates
    for &(b1, b2) in &pj.pairs {
        edges.push(Edge::new(mvertex(i, b1, d), mvertex(i, b2, d)));
    }
    // paired first coordinates × singleton second coordinate
    for &(a1, a2) in &pi.pairs {
        edges.push(Edge::new(mvertex(a1, j, d), mvertex(a2, j, d)));
    }
    // both paired: both ways of crossing the two pairs
    for &(a1, a2) in &pi.pairs {
        for &(b1, b2) in &pj.pairs {
            edges.push(Edge::new(mvertex(a1, b1, d), mvertex(a2, b2, d)));
            edges.push(Edge::new(mvertex(a1, b2, d), mvertex(a2, b1, d)));
        }
    }
    edges
}

/// The vertex list of the Walecki cycle `H_i` of `K_{2m+1}`:
/// `∞, i, i+1, i-1, i+2, i-2, ..., i+m` with residues modulo `2m`.
pub(crate) fn walecki_cycle_vertices(i: usize, m: usize) -> Vec<u32> {
    let n2 = 2 * m;
    let ii = i as i64;
    let mut vs = vec![n2 as u32, md(ii, n2) as u32];
    for x in 1..m as i64 {
        vs.push(md(ii + x, n2) as u32);
        vs.push(md(ii - x, n2) as u32);
    }
    vs.push(md(ii + m as i64, n2) as u32);
    vs
}

pub(crate) fn walecki_cycle_edges(i: usize, m: usize) -> Vec<Edge> {
    let vs = walecki_cycle_vertices(i, m);
    (0..vs.len())
        .map(|p| Edge::new(vs[p], vs[(p + 1) % vs.len()]))
        .collect()
}

/// Decomposes `K_{2m+1}` into `m` Hamiltonian cycles `H_i`, each the
/// rotation of `H_0` by `i` on the non-hub vertices.
pub fn walecki_cycles(m: usize) -> Result<Decomposition> {
    if m < 2 {
        return Err(Error::InvalidInput("need m >= 2".into()));
    }
    let n = 2 * m + 1;
    let parts = (0..m)
        .map(|i| Graph::new(n, walecki_cycle_edges(i, m)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Decomposition {
        host: Graph::complete(n),
        kind: PartKind::HamiltonianCycle,
        parts,
    })
}

/// Hub-based vertex code for the odd-order 2-regular decomposition.
pub(crate) fn rvertex(a: i64, b: i64, m: usize) -> u32 {
    (1 + md(b, 2) * m + md(a, m)) as u32
}

pub(crate) fn two_regular_part_edges(i: usize, m: usize) -> Vec<Edge> {
    let ii = i as i64;
    let mut edges = vec![
        Edge::new(0, rvertex(ii, 0, m)),
        Edge::new(0, rvertex(ii, 1, m)),
        Edge::new(rvertex(ii, 0, m), rvertex(ii, 1, m)),
    ];
    let pi = pair_partition(ii, m).expect("m odd");
    for &(a1, a2) in &pi.pairs {
        for b1 in 0..2i64 {
            for b2 in 0..2i64 {
                edges.push(Edge::new(rvertex(a1 as i64, b1, m), rvertex(a2 as i64, b2, m)));
            }
        }
    }
    edges
}

/// Decomposes `K_{2m+1}` (odd `m ≥ 3`) into `m` spanning 2-regular parts
/// `R_i`: a triangle on the hub and `v_{i,0}, v_{i,1}` plus, for every pair
/// `{a_1, a_2}` of `P_{i,m}`, all four edges between columns `a_1` and `a_2`.
pub fn two_regular_r(m: usize) -> Result<Decomposition> {
    if m % 2 == 0 {
        return Err(Error::InvalidInput("need odd m".into()));
    }
    if m < 3 {
        return Err(Error::InvalidInput("need m >= 3".into()));
    }
    let n = 2 * m + 1;
    let parts = (0..m)
        .map(|i| Graph::new(n, two_regular_part_edges(i, m)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Decomposition {
        host: Graph::complete(n),
        kind: PartKind::TwoRegular,
        parts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_partition_of_five() {
        let p = pair_partition(0, 5).unwrap();
        assert_eq!(p.singleton, 0);
        assert_eq!(p.pairs, vec![(1, 4), (2, 3)]);
        let p1 = pair_partition(0, 1).unwrap();
        assert_eq!(p1.singleton, 0);
        assert!(p1.pairs.is_empty());
        assert!(pair_partition(0, 4).is_err());
    }

    #[test]
    fn pair_partition_family_covers_all_pairs_once() {
        // every unordered pair of [5] appears in exactly one P_{x,5}
        let mut count = std::collections::BTreeMap::new();
        for x in 0..5 {
            let p = pair_partition(x, 5).unwrap();
            for pr in p.pairs {
                *count.entry(pr).or_insert(0) += 1;
            }
        }
        assert_eq!(count.len(), 10);
        assert!(count.values().all(|&c| c == 1));
    }

    #[test]
    fn matching_decomposition_smallest() {
        // 2m-1 = 5, c = 5, d = 1: five matchings of three edges each
        let d = matching_decomposition_even(3, 5).unwrap();
        assert_eq!(d.parts.len(), 5);
        assert!(d.parts.iter().all(|p| p.edge_count() == 3));
        assert!(verify_decomposition(&d).is_ok());
        assert!(matching_decomposition_even(3, 4).is_err());
    }

    #[test]
    fn matching_decomposition_example_part() {
        // c = 5, d = 3 (K_16): M_{0,0} must contain the hub edge and the
        // column-0 ring pairs {v_{1,0}, v_{4,0}}, {v_{2,0}, v_{3,0}}
        let d = matching_decomposition_even(8, 5).unwrap();
        let m00 = &d.parts[0];
        assert_eq!(m00.edge_count(), 8);
        for e in [
            Edge::new(0, mvertex(0, 0, 3)),
            Edge::new(mvertex(1, 0, 3), mvertex(4, 0, 3)),
            Edge::new(mvertex(2, 0, 3), mvertex(3, 0, 3)),
        ] {
            assert!(m00.contains_edge(&e), "missing {e:?}");
        }
        assert!(verify_decomposition(&d).is_ok());
    }

    #[test]
    fn matching_decompositions_agree_across_coprime_c() {
        // One decomposition up to relabelling: when gcd(c, d) = 1, sending
        // v_{a,b} to the residue that is a mod c and b mod d maps the (c, d)
        // family onto the c = 2m-1 family part by part. (The naive ad+b
        // relabelling does not: second-coordinate wraparound shifts pair
        // sums by d, so it only works for c = 1 or c = 2m-1; and for
        // gcd(c, d) > 1 no additive relabelling exists at all.)
        for m in [3usize, 8, 5] {
            let t = 2 * m - 1;
            let base = matching_decomposition_even(m, t).unwrap();
            let base_sets: std::collections::BTreeSet<Vec<Edge>> =
                base.parts.iter().map(|p| p.edges().to_vec()).collect();
            for c in (1..=t).filter(|c| t % c == 0) {
                let d = t / c;
                if crate::labels::gcd(c, d) != 1 {
                    continue;
                }
                let crt = |v: u32| -> u32 {
                    if v == 0 {
                        return 0;
                    }
                    let (a, b) = (((v - 1) as usize) / d, ((v - 1) as usize) % d);
                    let z = (0..t).find(|z| z % c == a && z % d == b).unwrap();
                    (1 + z) as u32
                };
                let dec = matching_decomposition_even(m, c).unwrap();
                let sets: std::collections::BTreeSet<Vec<Edge>> = dec
                    .parts
                    .iter()
                    .map(|p| {
                        let mut es: Vec<Edge> =
                            p.edges().iter().map(|e| Edge::new(crt(e.0), crt(e.1))).collect();
                        es.sort_unstable();
                        es
                    })
                    .collect();
                assert_eq!(sets, base_sets, "m={m}, c={c}");
            }
        }
    }

    #[test]
    fn walecki_small_cases() {
        let d = walecki_cycles(3).unwrap();
        assert_eq!(d.parts.len(), 3);
        assert!(d.parts.iter().all(|p| p.edge_count() == 7));
        assert!(verify_decomposition(&d).is_ok());
        assert!(walecki_cycles(1).is_err());
    }

    #[test]
    fn walecki_h0_matches_alternating_description() {
        // n = 11: H_0 visits ∞,0,1,-1,2,-2,3,-3,4,-4,5 (hub encoded as 10)
        let vs = walecki_cycle_vertices(0, 5);
        assert_eq!(vs, vec![10, 0, 1, 9, 2, 8, 3, 7, 4, 6, 5]);
    }

    #[test]
    fn walecki_edge_lengths_spread() {
        // within each cycle: two edges of every length except m (one), plus
        // the two hub edges
        for m in 2..7 {
            let d = walecki_cycles(m).unwrap();
            for part in &d.parts {
                let mut by_len = vec![0usize; m + 1];
                let mut hub = 0;
                for e in part.edges() {
                    if e.1 == (2 * m) as u32 {
                        hub += 1;
                        continue;
                    }
                    let diff = md(e.1 as i64 - e.0 as i64, 2 * m);
                    let len = diff.min(2 * m - diff);
                    by_len[len] += 1;
                }
                assert_eq!(hub, 2);
                assert_eq!(by_len[m], 1);
                assert!(by_len[1..m].iter().all(|&c| c == 2));
            }
        }
    }

    #[test]
    fn two_regular_small_cases() {
        let d = two_regular_r(3).unwrap();
        assert_eq!(d.parts.len(), 3);
        assert!(d.parts.iter().all(|p| p.edge_count() == 7));
        assert!(verify_decomposition(&d).is_ok());

        let d5 = two_regular_r(5).unwrap();
        assert_eq!(d5.parts.len(), 5);
        assert_eq!(
            d5.parts.iter().map(Graph::edge_count).sum::<usize>(),
            d5.host.edge_count()
        );
        assert!(verify_decomposition(&d5).is_ok());
        assert!(two_regular_r(4).is_err());
    }

    #[test]
    fn two_regular_k7_parts() {
        // R_0 of K_7: triangle at the hub on column 0, and all four edges
        // between columns 1 and 2
        let d = two_regular_r(3).unwrap();
        let r0 = &d.parts[0];
        for e in [
            Edge::new(0, rvertex(0, 0, 3)),
            Edge::new(0, rvertex(0, 1, 3)),
            Edge::new(rvertex(0, 0, 3), rvertex(0, 1, 3)),
            Edge::new(rvertex(1, 0, 3), rvertex(2, 0, 3)),
            Edge::new(rvertex(1, 1, 3), rvertex(2, 1, 3)),
            Edge::new(rvertex(1, 0, 3), rvertex(2, 1, 3)),
            Edge::new(rvertex(1, 1, 3), rvertex(2, 0, 3)),
        ] {
            assert!(r0.contains_edge(&e), "missing {e:?}");
        }
    }

    #[test]
    fn verifier_reports_planted_violations() {
        let mut d = walecki_cycles(3).unwrap();
        // duplicate an edge across parts
        let stolen = d.parts[0].edges()[0];
        let mut p1 = d.parts[1].edges().to_vec();
        p1.push(stolen);
        d.parts[1] = Graph::new(d.host.n(), p1).unwrap();
        assert!(matches!(
            verify_decomposition(&d),
            Err(DecompositionViolation::DuplicateEdge { .. })
        ));

        let mut d = walecki_cycles(3).unwrap();
        // drop an edge
        let mut p0 = d.parts[0].edges().to_vec();
        p0.pop();
        d.parts[0] = Graph::new(d.host.n(), p0).unwrap();
        let err = verify_decomposition(&d).unwrap_err();
        assert!(matches!(
            err,
            DecompositionViolation::MissingEdge { .. } | DecompositionViolation::DegreeCondition { .. }
        ));
    }
}
