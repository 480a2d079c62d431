use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use super::{Hypergraph, DUALIZE_BOUND};
use crate::error::{Error, Result};
use crate::sets::VertexSet;

/// The Fano plane on `o0..o6`: seven lines of three points, self-dual.
pub fn gen_fano() -> Hypergraph {
    const LINES: [[usize; 3]; 7] = [
        [0, 1, 6],
        [0, 2, 5],
        [0, 3, 4],
        [1, 2, 4],
        [1, 3, 5],
        [2, 3, 6],
        [4, 5, 6],
    ];
    let edges = LINES.iter().map(|l| VertexSet::from_indices(*l)).collect();
    Hypergraph::with_numbered_ground("o", 0, 7, edges).expect("fano plane is well formed")
}

/// The k-wheel on `o0..ok`: spokes `{o0, oi}` and the rim `{o1..ok}`.
pub fn gen_wheel(k: usize) -> Result<Hypergraph> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!("wheel needs k >= 2, got {k}")));
    }
    let mut edges: Vec<VertexSet> = (1..=k).map(|i| VertexSet::from_indices([0, i])).collect();
    edges.push(VertexSet::from_indices(1..=k));
    Hypergraph::with_numbered_ground("o", 0, k + 1, edges)
}

/// All `size`-subsets of `{0..p-1}` in lexicographic order.
pub(crate) fn subsets_of_size(p: usize, size: usize) -> Vec<VertexSet> {
    let mut out = Vec::new();
    if size > p {
        return out;
    }
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        out.push(VertexSet::from_indices(idx.iter().copied()));
        let Some(pos) = (0..size).rev().find(|&t| idx[t] < p - size + t) else {
            break;
        };
        idx[pos] += 1;
        for t in pos + 1..size {
            idx[t] = idx[t - 1] + 1;
        }
    }
    out
}

/// All `k`-subsets and all `l`-subsets of `o1..op` with `p = k + l - 1`.
pub fn gen_symmetric(k: usize, l: usize) -> Result<(Hypergraph, Hypergraph)> {
    if k == 0 || l == 0 {
        return Err(Error::InvalidArgument("k and l must be positive".into()));
    }
    let p = k + l - 1;
    if p > DUALIZE_BOUND {
        return Err(Error::BoundExceeded {
            what: "k + l - 1",
            limit: DUALIZE_BOUND as u128,
            actual: p as u128,
        });
    }
    let c = Hypergraph::with_numbered_ground("o", 1, p, subsets_of_size(p, k))?;
    let d = Hypergraph::with_numbered_ground("o", 1, p, subsets_of_size(p, l))?;
    Ok((c, d))
}

/// `{C + c : C in 𝒞} ∪ {D + d : D in 𝒟} ∪ {{c, d}}` with labels `"c"` and `"d"`.
///
/// The result is self-dual exactly when `𝒞` and `𝒟` are dual.
pub fn seymour_join(c: &Hypergraph, d: &Hypergraph) -> Result<Hypergraph> {
    seymour_join_with_labels(c, d, "c", "d")
}

pub fn seymour_join_with_labels(c: &Hypergraph, d: &Hypergraph, c_label: &str, d_label: &str) -> Result<Hypergraph> {
    c.require_same_ground(d)?;
    for label in [c_label, d_label] {
        if c.index_of(label).is_some() {
            return Err(Error::LabelCollision(label.to_string()));
        }
    }
    if c_label == d_label {
        return Err(Error::LabelCollision(c_label.to_string()));
    }
    let p = c.ground_size();
    let (cv, dv) = (p, p + 1);
    let mut ground = c.ground().to_vec();
    ground.push(c_label.to_string());
    ground.push(d_label.to_string());
    let mut edges: Vec<VertexSet> = c.edges().iter().map(|e| e.with(cv)).collect();
    edges.extend(d.edges().iter().map(|e| e.with(dv)));
    edges.push(VertexSet::from_indices([cv, dv]));
    Hypergraph::new(ground, edges)
}
