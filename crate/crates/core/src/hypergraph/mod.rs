//! Hypergraphs over a labelled ground set, duality, and the tight families.

mod duality;
mod families;

pub use duality::{check_dual, dualize, satisfies_property_r, DualityVerdict, DualityWitness, DUALIZE_BOUND};
pub use families::{gen_fano, gen_symmetric, gen_wheel, seymour_join, seymour_join_with_labels};

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::sets::{canonicalize, VertexSet, MAX_VERTICES};

/// A family of subsets (edges) of an ordered, labelled ground set.
///
/// Edges may repeat or nest; [`Hypergraph::sperner_reduce`] removes both.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    ground: Vec<String>,
    edges: Vec<VertexSet>,
}

impl Hypergraph {
    pub fn new(ground: Vec<String>, edges: Vec<VertexSet>) -> Result<Self> {
        if ground.len() > MAX_VERTICES {
            return Err(Error::BoundExceeded {
                what: "ground set size",
                limit: MAX_VERTICES as u128,
                actual: ground.len() as u128,
            });
        }
        let mut seen = BTreeMap::new();
        for (idx, label) in ground.iter().enumerate() {
            if seen.insert(label.as_str(), idx).is_some() {
                return Err(Error::LabelCollision(label.clone()));
            }
        }
        let full = VertexSet::full(ground.len());
        if let Some(edge) = edges.iter().position(|e| e.is_empty() || !e.is_subset(full)) {
            return Err(Error::InvalidEdge { edge });
        }
        Ok(Hypergraph { ground, edges })
    }

    /// Build from label lists, e.g. `[["o1", "o2"], ["o2", "o3"]]`.
    pub fn from_labels<S: AsRef<str>, T: AsRef<str>>(ground: &[S], edges: &[&[T]]) -> Result<Self> {
        let ground: Vec<String> = ground.iter().map(|s| s.as_ref().to_string()).collect();
        let mut sets = Vec::with_capacity(edges.len());
        for (k, edge) in edges.iter().enumerate() {
            let mut s = VertexSet::EMPTY;
            for label in edge.iter() {
                let v = ground
                    .iter()
                    .position(|g| g == label.as_ref())
                    .ok_or(Error::InvalidEdge { edge: k })?;
                s = s.with(v);
            }
            sets.push(s);
        }
        Hypergraph::new(ground, sets)
    }

    /// Ground `o1..op` (or any prefix labelling) with index-based edges.
    pub fn with_numbered_ground(prefix: &str, first: usize, p: usize, edges: Vec<VertexSet>) -> Result<Self> {
        let ground = (first..first + p).map(|k| format!("{prefix}{k}")).collect();
        Hypergraph::new(ground, edges)
    }

    pub fn ground(&self) -> &[String] {
        &self.ground
    }

    pub fn ground_size(&self) -> usize {
        self.ground.len()
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn label(&self, v: usize) -> &str {
        &self.ground[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.ground.iter().position(|g| g == label)
    }

    pub fn labels_of(&self, s: VertexSet) -> Vec<&str> {
        s.iter().map(|v| self.ground[v].as_str()).collect()
    }

    pub fn set_of<S: AsRef<str>>(&self, labels: &[S]) -> Option<VertexSet> {
        labels
            .iter()
            .map(|l| self.index_of(l.as_ref()))
            .try_fold(VertexSet::EMPTY, |s, v| Some(s.with(v?)))
    }

    pub(crate) fn with_edges(&self, edges: Vec<VertexSet>) -> Self {
        Hypergraph {
            ground: self.ground.clone(),
            edges,
        }
    }

    /// Drop duplicate edges and edges containing another edge; canonical order.
    pub fn sperner_reduce(&self) -> Hypergraph {
        self.with_edges(minimize(&self.edges))
    }

    pub fn is_sperner(&self) -> bool {
        self.edges
            .iter()
            .enumerate()
            .all(|(a, &e)| self.edges.iter().enumerate().all(|(b, &f)| a == b || !f.is_subset(e)))
    }

    /// Same ground and the same edge family, ignoring order and multiplicity.
    pub fn same_family(&self, other: &Hypergraph) -> bool {
        let mut a = self.edges.clone();
        let mut b = other.edges.clone();
        canonicalize(&mut a);
        canonicalize(&mut b);
        self.ground == other.ground && a == b
    }

    /// Edges in canonical order, duplicates removed.
    pub fn canonical(&self) -> Hypergraph {
        let mut e = self.edges.clone();
        canonicalize(&mut e);
        self.with_edges(e)
    }

    pub fn is_transversal(&self, s: VertexSet) -> bool {
        is_transversal(s, &self.edges)
    }

    /// Some edge lies inside `s`.
    pub fn contains_edge_within(&self, s: VertexSet) -> bool {
        self.edges.iter().any(|e| e.is_subset(s))
    }

    /// Both hypergraphs over the same labelled ground set.
    pub(crate) fn require_same_ground(&self, other: &Hypergraph) -> Result<()> {
        if self.ground != other.ground {
            return Err(Error::InvalidArgument("hypergraphs have different ground sets".into()));
        }
        Ok(())
    }
}

/// `s` meets every edge.
pub fn is_transversal(s: VertexSet, edges: &[VertexSet]) -> bool {
    edges.iter().all(|e| e.intersects(s))
}

/// Inclusion-minimal members of `edges`, deduplicated, in canonical order.
pub fn minimize(edges: &[VertexSet]) -> Vec<VertexSet> {
    let mut sorted = edges.to_vec();
    canonicalize(&mut sorted);
    // Canonical order is by size first, so any subset of an edge precedes it.
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sorted.len());
    for e in sorted {
        if !kept.iter().any(|k| k.is_subset(e)) {
            kept.push(e);
        }
    }
    kept
}

/// Identify each group of the partition into a single fresh outcome.
///
/// `partition` lists groups of ground labels; every label must occur in exactly
/// one group. Singleton groups keep their label, larger groups get the member
/// labels joined with `+`.
pub fn merge_outcomes<S: AsRef<str>>(
    c: &Hypergraph,
    d: &Hypergraph,
    partition: &[Vec<S>],
) -> Result<(Hypergraph, Hypergraph)> {
    c.require_same_ground(d)?;
    let p = c.ground_size();
    let mut group_of = alloc::vec![usize::MAX; p];
    let mut labels = Vec::with_capacity(partition.len());
    for (g, group) in partition.iter().enumerate() {
        if group.is_empty() {
            return Err(Error::MalformedPartition(format!("group {g} is empty")));
        }
        for label in group {
            let v = c
                .index_of(label.as_ref())
                .ok_or_else(|| Error::MalformedPartition(format!("unknown label {:?}", label.as_ref())))?;
            if group_of[v] != usize::MAX {
                return Err(Error::MalformedPartition(format!(
                    "label {:?} appears twice",
                    label.as_ref()
                )));
            }
            group_of[v] = g;
        }
        let joined: Vec<&str> = group.iter().map(|s| s.as_ref()).collect();
        labels.push(joined.join("+"));
    }
    if let Some(v) = group_of.iter().position(|&g| g == usize::MAX) {
        return Err(Error::MalformedPartition(format!("label {:?} not covered", c.label(v))));
    }
    let image = |e: &VertexSet| e.iter().map(|v| group_of[v]).collect::<VertexSet>();
    let c2 = Hypergraph::new(labels.clone(), c.edges.iter().map(image).collect())?;
    let d2 = Hypergraph::new(labels, d.edges.iter().map(image).collect())?;
    Ok((c2, d2))
}
