//! Explicit labellings of decomposition parts, and the index orderings used
//! to interleave parts so that junction bounds hold at the needed strides.
//!
//! Every labelling is built forward (edge → label) into a label table and
//! checked, at construction time, both for bijectivity and for matching the
//! corresponding decomposition part's edge set exactly.

use crate::decomp::{
    self, matching_part_edges, md, rvertex, two_regular_part_edges, walecki_cycle_edges,
};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::ordering::EdgeOrdering;

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A bijection from a block `base .. base+t` of integers to positions
/// `0 .. t` (for all constructors except the zig-zag one, `base = 0`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexOrdering {
    base: usize,
    map: Vec<usize>,
}

impl IndexOrdering {
    fn from_map(base: usize, map: Vec<usize>) -> Result<Self> {
        let t = map.len();
        let mut seen = vec![false; t];
        for &p in &map {
            if p >= t || seen[p] {
                return Err(Error::Internal("index ordering is not a bijection".into()));
            }
            seen[p] = true;
        }
        Ok(IndexOrdering { base, map })
    }

    pub fn t(&self) -> usize {
        self.map.len()
    }

    pub fn base(&self) -> usize {
        self.base
    }

    /// `α(x)` for `x` in the domain block.
    pub fn of(&self, x: usize) -> usize {
        self.map[x - self.base]
    }

    /// Domain elements listed by position: entry `p` is `α⁻¹(p)`.
    pub fn elements_in_position_order(&self) -> Vec<usize> {
        let mut inv = vec![0usize; self.map.len()];
        for (x, &p) in self.map.iter().enumerate() {
            inv[p] = self.base + x;
        }
        inv
    }
}

/// The ordering `α(a_{i,j}) = iu + j (mod t)` over the grid
/// `a_{i,j} = (i mod t/d) + j·t/d` with `d = gcd(u, t)`: stepping a part's
/// first grid index advances its position by exactly `u` modulo `t`.
pub fn index_order_cyclic(t: usize, u: usize) -> Result<IndexOrdering> {
    if u < 1 || t <= u {
        return Err(Error::Precondition(format!("need t > u >= 1, got t={t}, u={u}")));
    }
    let d = gcd(u, t);
    let c = t / d;
    let mut map = vec![0usize; t];
    for i in 0..c {
        for j in 0..d {
            map[i + j * c] = (i * u + j) % t;
        }
    }
    let ord = IndexOrdering::from_map(0, map)?;
    for j in 0..d {
        for i in 0..c {
            let a = i % c + j * c;
            let a_next = (i + 1) % c + j * c;
            if ord.of(a_next) != (ord.of(a) + u) % t {
                return Err(Error::Internal("cyclic displacement property failed".into()));
            }
        }
    }
    Ok(ord)
}

/// The same table as [`index_order_cyclic`], which also satisfies the
/// non-cyclic displacement rule: whenever `α(a) ≤ t-u-1`, the successor
/// integer sits exactly `u` positions later (`α(a+1) = α(a) + u`).
pub fn index_order_noncyclic(t: usize, u: usize) -> Result<IndexOrdering> {
    let ord = index_order_cyclic(t, u)?;
    for a in 0..t - 1 {
        if ord.of(a) <= t - u - 1 && ord.of(a + 1) != ord.of(a) + u {
            return Err(Error::Internal("non-cyclic displacement property failed".into()));
        }
    }
    Ok(ord)
}

/// The piecewise ordering of `[t]` for `t/2 ≤ u ≤ t-1` with
/// `α(i+u) = α(i) - 1` and `α(i+u+1) = α(i) + 1` on the applicable ranges.
pub fn index_order_alpha_u(t: usize, u: usize) -> Result<IndexOrdering> {
    if 2 * u < t || u > t - 1 {
        return Err(Error::Precondition(format!(
            "need t/2 <= u <= t-1, got t={t}, u={u}"
        )));
    }
    let mut map = vec![0usize; t];
    for (i, slot) in map.iter_mut().enumerate() {
        *slot = if i <= t - u - 1 {
            2 * i + 1
        } else if i < u {
            i + (t - u)
        } else {
            2 * (i - u)
        };
    }
    let ord = IndexOrdering::from_map(0, map)?;
    for i in 0..t - u {
        if ord.of(i + u) as i64 != ord.of(i) as i64 - 1 {
            return Err(Error::Internal("alpha_u property (1) failed".into()));
        }
    }
    for i in 0..t.saturating_sub(u + 1) {
        if ord.of(i + u + 1) != ord.of(i) + 1 {
            return Err(Error::Internal("alpha_u property (2) failed".into()));
        }
    }
    Ok(ord)
}

/// The zig-zag ordering of the block `{l, .., l+t-1}`: up by twos, then back
/// down through the skipped values. Consecutive positions hold elements at
/// distance at most 2, including across the cyclic seam.
pub fn index_order_zigzag(l: usize, t: usize, m: usize) -> Result<IndexOrdering> {
    if t < 1 || t > m {
        return Err(Error::Precondition(format!("need 1 <= t <= m, got t={t}, m={m}")));
    }
    if l > m - t {
        return Err(Error::Precondition(format!("need l <= m-t, got l={l}")));
    }
    let mut list: Vec<usize> = (0..t).step_by(2).map(|x| l + x).collect();
    let mut x = if t % 2 == 0 { t as i64 - 1 } else { t as i64 - 2 };
    while x >= 1 {
        list.push(l + x as usize);
        x -= 2;
    }
    let mut map = vec![0usize; t];
    for (pos, &elem) in list.iter().enumerate() {
        map[elem - l] = pos;
    }
    let ord = IndexOrdering::from_map(l, map)?;
    for pos in 0..t {
        let a = list[pos] as i64;
        let b = list[(pos + 1) % t] as i64;
        if (a - b).abs() > 2 {
            return Err(Error::Internal("zig-zag displacement bound failed".into()));
        }
    }
    Ok(ord)
}

/// `β(i) = -2i (mod m)` for odd `m`: the inverse of `u = (m-1)/2`, so that
/// `β(i+u) = β(i) + 1` and `β(i+u+1) = β(i) - 1` modulo `m`.
pub fn index_order_beta(m: usize) -> Result<IndexOrdering> {
    if m % 2 == 0 {
        return Err(Error::InvalidInput("need odd m".into()));
    }
    let map: Vec<usize> = (0..m).map(|i| md(-2 * i as i64, m)).collect();
    let ord = IndexOrdering::from_map(0, map)?;
    let u = (m - 1) / 2;
    for i in 0..m {
        if ord.of((i + u) % m) != (ord.of(i) + 1) % m
            || ord.of((i + u + 1) % m) != md(ord.of(i) as i64 - 1, m)
        {
            return Err(Error::Internal("beta displacement property failed".into()));
        }
    }
    Ok(ord)
}

/// Assembles an ordering from a full label table, then checks it against
/// the decomposition part it is supposed to order.
fn ordering_from_labels(n: usize, labels: Vec<Option<Edge>>, part_edges: Vec<Edge>) -> Result<EdgeOrdering> {
    let perm: Vec<Edge> = labels
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::Internal("label formula left a gap".into()))?;
    let part = Graph::new(n, part_edges)?;
    let ordering = EdgeOrdering::new(part, perm)
        .map_err(|_| Error::Internal("label formula does not order the part's edge set".into()))?;
    Ok(ordering)
}

fn set_label(labels: &mut [Option<Edge>], label: usize, e: Edge) -> Result<()> {
    if labels[label].is_some() {
        return Err(Error::Internal(format!("label {label} assigned twice")));
    }
    labels[label] = Some(e);
    Ok(())
}

/// Labels the perfect matching `M_{i,j}` of `K_{2m}`: the hub edge gets 0,
/// the column-`j` ring pairs get `1 .. (c+1)/2`, and the crossed pairs fill
/// the remaining labels column-pair by column-pair with an `i`-dependent
/// rotation.
pub fn label_matching_even(i: usize, j: usize, m: usize, c: usize) -> Result<EdgeOrdering> {
    if m < 2 || c == 0 || (2 * m - 1) % c != 0 {
        return Err(Error::InvalidInput(format!("c={c} must divide 2m-1")));
    }
    let d = (2 * m - 1) / c;
    if i >= c || j >= d {
        return Err(Error::Precondition(format!("part index ({i}, {j}) out of range")));
    }
    let n = 2 * m;
    let vert = |a: i64, b: i64| -> u32 { (1 + md(a, c) * d + md(b, d)) as u32 };
    let (ii, jj) = (i as i64, j as i64);
    let mut labels = vec![None; m];
    set_label(&mut labels, 0, Edge::new(0, vert(ii, jj)))?;
    for x in 1..=(c - 1) / 2 {
        let e = Edge::new(vert(ii + x as i64, jj), vert(ii - x as i64, jj));
        set_label(&mut labels, x, e)?;
    }
    for y in 1..=(d - 1) / 2 {
        for x in 0..c {
            let label = (y - 1) * c + (c + 1) / 2 + (x + i * (c - 1) / 2) % c;
            let e = Edge::new(
                vert(ii + 2 * x as i64, jj + y as i64),
                vert(ii - 2 * x as i64, jj - y as i64),
            );
            set_label(&mut labels, label, e)?;
        }
    }
    ordering_from_labels(n, labels, matching_part_edges(i, j, c, d))
}

/// Labels the Walecki cycle `H_i` at stride `r` (odd, coprime to `2m`):
/// hub edges get 0 and `m`; the diameter pair at `±rx` gets `x`; the offset
/// pairs fill `m+1 .. 2m`.
pub fn label_walecki_gcd1(i: usize, r: usize, m: usize) -> Result<EdgeOrdering> {
    if m < 2 {
        return Err(Error::Precondition("need m >= 2".into()));
    }
    if gcd(r, 2 * m) != 1 {
        return Err(Error::InvalidInput(format!("need gcd(r, 2m) = 1, got r={r}, m={m}")));
    }
    if i >= m {
        return Err(Error::Precondition(format!("cycle index {i} out of range")));
    }
    let n2 = 2 * m;
    let (ii, rr) = (i as i64, r as i64);
    let hub = n2 as u32;
    let res = |a: i64| -> u32 { md(a, n2) as u32 };
    let mut labels = vec![None; n2 + 1];
    set_label(&mut labels, 0, Edge::new(hub, res(ii)))?;
    set_label(&mut labels, m, Edge::new(hub, res(ii + m as i64)))?;
    for x in 1..m {
        let e = Edge::new(res(ii + rr * x as i64), res(ii - rr * x as i64));
        set_label(&mut labels, x, e)?;
    }
    for x in 0..m {
        let e = Edge::new(
            res(ii + rr * x as i64 + (rr + 1) / 2),
            res(ii - rr * x as i64 - (rr - 1) / 2),
        );
        set_label(&mut labels, m + x + 1, e)?;
    }
    ordering_from_labels(n2 + 1, labels, walecki_cycle_edges(i, m))
}

/// The alternating labelling of the Walecki cycle `H_i`: every other edge
/// starting from the hub edge `{∞, i}`, so labels `0..m` and `m..2m+1` each
/// form a matching.
pub fn label_walecki_alternating(i: usize, m: usize) -> Result<EdgeOrdering> {
    if m < 2 {
        return Err(Error::Precondition("need m >= 2".into()));
    }
    if i >= m {
        return Err(Error::Precondition(format!("cycle index {i} out of range")));
    }
    let n2 = 2 * m;
    let ii = i as i64;
    let hub = n2 as u32;
    let res = |a: i64| -> u32 { md(a, n2) as u32 };
    let mut labels = vec![None; n2 + 1];
    set_label(&mut labels, 0, Edge::new(hub, res(ii)))?;
    set_label(&mut labels, m, Edge::new(hub, res(ii + m as i64)))?;
    for x in 1..m {
        set_label(&mut labels, x, Edge::new(res(ii + x as i64), res(ii - x as i64)))?;
    }
    for x in 1..=m {
        let e = Edge::new(res(ii + x as i64), res(ii - x as i64 + 1));
        set_label(&mut labels, m + x, e)?;
    }
    ordering_from_labels(n2 + 1, labels, walecki_cycle_edges(i, m))
}

/// Labels the 2-regular part `R_i` of `K_{2m+1}` (odd `m`): hub edges get 0
/// and `m`, the same-column pairs get `1 .. m`, the cross-column pairs get
/// `m+1 .. 2m+1`; again the first and last `m` edges each form a matching.
pub fn label_r_center(i: usize, m: usize) -> Result<EdgeOrdering> {
    if m % 2 == 0 || m < 3 {
        return Err(Error::InvalidInput("need odd m >= 3".into()));
    }
    if i >= m {
        return Err(Error::Precondition(format!("part index {i} out of range")));
    }
    let n = 2 * m + 1;
    let ii = i as i64;
    let mut labels = vec![None; n];
    set_label(&mut labels, 0, Edge::new(0, rvertex(ii, 0, m)))?;
    set_label(&mut labels, m, Edge::new(0, rvertex(ii, 1, m)))?;
    for x in 1..m {
        let xx = x as i64;
        let e = Edge::new(rvertex(ii + 2 * xx, xx, m), rvertex(ii - 2 * xx, xx, m));
        set_label(&mut labels, x, e)?;
    }
    for x in 1..=m {
        let xx = x as i64;
        let e = Edge::new(
            rvertex(ii + 2 * xx - 1, xx, m),
            rvertex(ii - (2 * xx - 1), xx + 1, m),
        );
        set_label(&mut labels, m + x, e)?;
    }
    ordering_from_labels(n, labels, two_regular_part_edges(i, m))
}

/// Orderings of all parts of [`decomp::matching_decomposition_even`] in
/// lexicographic `(i, j)` order.
pub fn label_all_matchings(m: usize, c: usize) -> Result<Vec<EdgeOrdering>> {
    let d = if c > 0 && (2 * m - 1) % c == 0 {
        (2 * m - 1) / c
    } else {
        return Err(Error::InvalidInput(format!("c={c} must divide 2m-1")));
    };
    let mut out = Vec::with_capacity(2 * m - 1);
    for i in 0..c {
        for j in 0..d {
            out.push(label_matching_even(i, j, m, c)?);
        }
    }
    Ok(out)
}
