use alloc::vec;
use alloc::vec::Vec;

use super::{minimize, Hypergraph};
use crate::error::{Error, Result};
use crate::sets::VertexSet;

/// Largest ground set accepted by exact dualization.
pub const DUALIZE_BOUND: usize = 20;

/// Why two hypergraphs fail to be dual.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DualityWitness {
    /// Edge `c_edge` of the first and `d_edge` of the second family are disjoint.
    Disjoint { c_edge: usize, d_edge: usize },
    /// A transversal of the first family containing no edge of the second.
    TransversalOfFirst(VertexSet),
    /// A transversal of the second family containing no edge of the first.
    TransversalOfSecond(VertexSet),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DualityVerdict {
    pub dual: bool,
    /// Present exactly when `dual` is false.
    pub witness: Option<DualityWitness>,
}

impl DualityVerdict {
    const DUAL: DualityVerdict = DualityVerdict {
        dual: true,
        witness: None,
    };

    fn refuted(w: DualityWitness) -> Self {
        DualityVerdict {
            dual: false,
            witness: Some(w),
        }
    }
}

fn check_bound(h: &Hypergraph) -> Result<()> {
    if h.ground_size() > DUALIZE_BOUND {
        return Err(Error::BoundExceeded {
            what: "ground set size for dualization",
            limit: DUALIZE_BOUND as u128,
            actual: h.ground_size() as u128,
        });
    }
    if h.edges().is_empty() {
        return Err(Error::InvalidArgument("hypergraph has no edges".into()));
    }
    Ok(())
}

/// Minimal transversals by sequential Berge multiplication.
pub(crate) fn minimal_transversals(edges: &[VertexSet]) -> Vec<VertexSet> {
    let mut acc = vec![VertexSet::EMPTY];
    for &e in &minimize(edges) {
        let mut next = Vec::with_capacity(acc.len() * 2);
        for &t in &acc {
            if t.intersects(e) {
                next.push(t);
            } else {
                next.extend(e.iter().map(|v| t.with(v)));
            }
        }
        acc = minimize(&next);
    }
    acc
}

/// The dual hypergraph: all inclusion-minimal transversals, canonical order.
pub fn dualize(h: &Hypergraph) -> Result<Hypergraph> {
    check_bound(h)?;
    Ok(h.with_edges(minimal_transversals(h.edges())))
}

/// Decide whether `c` and `d` are dual; inputs need not be Sperner.
pub fn check_dual(c: &Hypergraph, d: &Hypergraph) -> Result<DualityVerdict> {
    c.require_same_ground(d)?;
    check_bound(c)?;
    check_bound(d)?;
    for (ci, &ce) in c.edges().iter().enumerate() {
        if let Some(di) = d.edges().iter().position(|de| !de.intersects(ce)) {
            return Ok(DualityVerdict::refuted(DualityWitness::Disjoint {
                c_edge: ci,
                d_edge: di,
            }));
        }
    }
    let c_dual = minimal_transversals(c.edges());
    let d_min = minimize(d.edges());
    if c_dual == d_min {
        return Ok(DualityVerdict::DUAL);
    }
    // With (i) in place every D-edge is a transversal of C, so a mismatch means
    // some minimal transversal of C holds no D-edge.
    if let Some(&t) = c_dual.iter().find(|t| !d_min.iter().any(|e| e.is_subset(**t))) {
        return Ok(DualityVerdict::refuted(DualityWitness::TransversalOfFirst(t)));
    }
    let c_min = minimize(c.edges());
    if let Some(t) = minimal_transversals(&d_min)
        .into_iter()
        .find(|t| !c_min.iter().any(|e| e.is_subset(*t)))
    {
        return Ok(DualityVerdict::refuted(DualityWitness::TransversalOfSecond(t)));
    }
    Err(Error::ValidationFailure(
        "families differ but no duality witness found".into(),
    ))
}

/// Property (r): each `o` in `C_x ∩ D_y` is isolated as `C_x' ∩ D_y = C_x ∩ D_y' = {o}`
/// for some edges `C_x'`, `D_y'`.
pub fn satisfies_property_r(c: &Hypergraph, d: &Hypergraph) -> bool {
    c.edges().iter().all(|&cx| {
        d.edges().iter().all(|&dy| {
            cx.intersection(dy).iter().all(|o| {
                let single = VertexSet::singleton(o);
                c.edges().iter().any(|&cx2| cx2.intersection(dy) == single)
                    && d.edges().iter().any(|&dy2| cx.intersection(dy2) == single)
            })
        })
    })
}
