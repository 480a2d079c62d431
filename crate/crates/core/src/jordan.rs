//! Jordan game correspondences on a disc cut into areas.
//!
//! A map is given combinatorially: areas, which pairs share a border, and which
//! areas meet each of the four sides. Alice picks a minimal set of areas linking
//! two opposite sides, Bob one linking the other two; the cell is their overlap.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::hypergraph::{minimize, Hypergraph};
use crate::sets::VertexSet;
use crate::table::{induced_correspondence, CellTable};

/// Largest number of areas handled by connector enumeration.
pub const MAX_AREAS: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    N,
    E,
    S,
    W,
}

impl Side {
    pub const ALL: [Side; 4] = [Side::N, Side::E, Side::S, Side::W];

    fn slot(self) -> usize {
        self as usize
    }
}

/// A pair of opposite sides.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SidePair {
    NorthSouth,
    EastWest,
}

impl SidePair {
    pub fn sides(self) -> (Side, Side) {
        match self {
            SidePair::NorthSouth => (Side::N, Side::S),
            SidePair::EastWest => (Side::E, Side::W),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarMap {
    areas: Vec<String>,
    /// Neighbour sets, one per area.
    adjacent: Vec<VertexSet>,
    /// Areas meeting N, E, S, W.
    touches: [VertexSet; 4],
}

impl PlanarMap {
    /// Build and validate a map: at most [`MAX_AREAS`] distinct areas, no
    /// self-adjacency, a connected area graph, every side touched.
    pub fn new<S: AsRef<str>>(areas: &[S], adjacency: &[(S, S)], touches: [&[S]; 4]) -> Result<Self> {
        let p = areas.len();
        if p > MAX_AREAS {
            return Err(Error::BoundExceeded {
                what: "area count",
                limit: MAX_AREAS as u128,
                actual: p as u128,
            });
        }
        if p == 0 {
            return Err(Error::InvalidMap("no areas".into()));
        }
        let areas: Vec<String> = areas.iter().map(|s| s.as_ref().to_string()).collect();
        for (k, a) in areas.iter().enumerate() {
            if areas[..k].contains(a) {
                return Err(Error::InvalidMap(format!("area {a:?} listed twice")));
            }
        }
        let find = |label: &S| {
            areas
                .iter()
                .position(|a| a == label.as_ref())
                .ok_or_else(|| Error::InvalidMap(format!("unknown area {:?}", label.as_ref())))
        };
        let mut adjacent = vec![VertexSet::EMPTY; p];
        for (u, v) in adjacency {
            let (u, v) = (find(u)?, find(v)?);
            if u == v {
                return Err(Error::InvalidMap(format!("area {:?} borders itself", areas[u])));
            }
            adjacent[u] = adjacent[u].with(v);
            adjacent[v] = adjacent[v].with(u);
        }
        let mut side_sets = [VertexSet::EMPTY; 4];
        for side in Side::ALL {
            for label in touches[side.slot()] {
                side_sets[side.slot()] = side_sets[side.slot()].with(find(label)?);
            }
            if side_sets[side.slot()].is_empty() {
                return Err(Error::InvalidMap(format!("side {side:?} touches no area")));
            }
        }
        let map = PlanarMap {
            areas,
            adjacent,
            touches: side_sets,
        };
        if map.reach(VertexSet::full(p), 0) != VertexSet::full(p) {
            return Err(Error::InvalidMap("area graph is disconnected".into()));
        }
        Ok(map)
    }

    pub fn areas(&self) -> &[String] {
        &self.areas
    }

    pub fn area_count(&self) -> usize {
        self.areas.len()
    }

    pub fn neighbours(&self, area: usize) -> VertexSet {
        self.adjacent[area]
    }

    pub fn touching(&self, side: Side) -> VertexSet {
        self.touches[side.slot()]
    }

    /// Sorted adjacency pairs `(u, v)` with `u < v`.
    pub fn adjacency_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.area_count())
            .flat_map(|u| self.adjacent[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    /// Areas of `within` reachable from `start` inside `within`.
    fn reach(&self, within: VertexSet, start: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for v in self.adjacent[u].intersection(within).difference(seen).iter() {
                seen = seen.with(v);
                stack.push(v);
            }
        }
        seen
    }

    /// `s` is connected and meets both sides of `pair`.
    pub fn connects(&self, s: VertexSet, pair: SidePair) -> bool {
        let (a, b) = pair.sides();
        match s.first() {
            None => false,
            Some(v) => s.intersects(self.touching(a)) && s.intersects(self.touching(b)) && self.reach(s, v) == s,
        }
    }
}

/// Inclusion-minimal connected area sets meeting both sides of `pair`, in
/// canonical order.
///
/// A minimal connector is a path, so simple paths are grown from the first
/// side and cut as soon as they reach the second; the results are minimized.
pub fn minimal_connectors(map: &PlanarMap, pair: SidePair) -> Vec<VertexSet> {
    let (from, to) = pair.sides();
    let goal = map.touching(to);
    let mut found = Vec::new();
    let mut stack: Vec<(usize, VertexSet)> = map
        .touching(from)
        .iter()
        .map(|v| (v, VertexSet::singleton(v)))
        .collect();
    while let Some((v, path)) = stack.pop() {
        if goal.contains(v) {
            found.push(path);
            continue;
        }
        for w in map.neighbours(v).difference(path).iter() {
            // A neighbour of an earlier path area would allow a shortcut.
            if map.neighbours(w).intersection(path) == VertexSet::singleton(v) {
                stack.push((w, path.with(w)));
            }
        }
    }
    minimize(&found)
}

/// Connector hypergraphs `(E-W connectors, N-S connectors)` over the areas.
pub fn connector_hypergraphs(map: &PlanarMap) -> Result<(Hypergraph, Hypergraph)> {
    let rows = Hypergraph::new(map.areas.clone(), minimal_connectors(map, SidePair::EastWest))?;
    let cols = Hypergraph::new(map.areas.clone(), minimal_connectors(map, SidePair::NorthSouth))?;
    Ok((rows, cols))
}

/// The Jordan correspondence: rows are E-W connectors, columns N-S connectors,
/// cells their intersections. An empty cell means the map is not a valid
/// cubic disc subdivision.
pub fn jordan_correspondence(map: &PlanarMap) -> Result<CellTable> {
    let (rows, cols) = connector_hypergraphs(map)?;
    induced_correspondence(&rows, &cols)
}

/// Five areas: four corners `o1..o4` around a centre `o5`.
///
/// `o1`, `o2` meet the north side, `o3`, `o4` the south; `o1`, `o3` meet the
/// east side and `o2`, `o4` the west. The centre meets no side and borders
/// every corner.
pub fn five_area_map() -> PlanarMap {
    PlanarMap::new(
        &["o1", "o2", "o3", "o4", "o5"],
        &[
            ("o1", "o2"),
            ("o1", "o3"),
            ("o2", "o4"),
            ("o3", "o4"),
            ("o1", "o5"),
            ("o2", "o5"),
            ("o3", "o5"),
            ("o4", "o5"),
        ],
        [&["o1", "o2"], &["o1", "o3"], &["o3", "o4"], &["o2", "o4"]],
    )
    .expect("five-area map is valid")
}
