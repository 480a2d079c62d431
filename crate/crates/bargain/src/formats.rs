//! JSON file formats. Outcomes of `G_{m,n}` are `[i, j]` pairs, strategies
//! are 1-based value arrays, utilities are row-major `m x n` matrices.

use std::collections::BTreeMap;

use bargain_core::jordan::{PlanarMap, Side};
use bargain_core::monotone::{Correspondence, MonotoneMap, Outcome};
use bargain_core::solver::{Move, SimpleEquilibrium, UtilityProfile};
use bargain_core::{GameForm, Hypergraph, Result as CoreResult};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HypergraphJson {
    pub ground: Vec<String>,
    pub edges: Vec<Vec<String>>,
}

impl HypergraphJson {
    pub fn from_core(h: &Hypergraph) -> Self {
        HypergraphJson {
            ground: h.ground().to_vec(),
            edges: h
                .edges()
                .iter()
                .map(|e| h.labels_of(*e).into_iter().map(String::from).collect())
                .collect(),
        }
    }

    pub fn to_core(&self) -> CoreResult<Hypergraph> {
        let edges: Vec<&[String]> = self.edges.iter().map(Vec::as_slice).collect();
        Hypergraph::from_labels(&self.ground, &edges)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UtilityJson {
    pub m: usize,
    pub n: usize,
    #[serde(rename = "uA")]
    pub ua: Vec<Vec<i64>>,
    #[serde(rename = "uB")]
    pub ub: Vec<Vec<i64>>,
}

impl UtilityJson {
    pub fn from_profile(m: usize, n: usize, u: &UtilityProfile) -> Self {
        let rows = |v: &[i64]| v.chunks(n).map(<[i64]>::to_vec).collect();
        UtilityJson {
            m,
            n,
            ua: rows(&u.ua),
            ub: rows(&u.ub),
        }
    }

    pub fn to_profile(&self) -> Result<UtilityProfile, String> {
        if self.m == 0 || self.n == 0 {
            return Err("m and n must be positive".into());
        }
        for (name, t) in [("uA", &self.ua), ("uB", &self.ub)] {
            if t.len() != self.m || t.iter().any(|r| r.len() != self.n) {
                return Err(format!("{name} must be a {}x{} matrix", self.m, self.n));
            }
        }
        UtilityProfile::new(self.ua.concat(), self.ub.concat()).map_err(|e| e.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TraceStep {
    #[serde(rename = "W_A")]
    IntoWA([usize; 2]),
    #[serde(rename = "W_B")]
    IntoWB(Vec<[usize; 2]>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EquilibriumJson {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    pub outcome: [usize; 2],
    #[serde(default)]
    pub trace: Vec<TraceStep>,
}

pub fn pair(o: Outcome) -> [usize; 2] {
    [o.i, o.j]
}

impl EquilibriumJson {
    pub fn from_core(n: usize, eq: &SimpleEquilibrium<MonotoneMap, MonotoneMap>) -> Self {
        let at = |o: usize| pair(Outcome::from_index(o, n));
        let trace = eq
            .trace
            .iter()
            .map(|mv| match mv {
                Move::IntoWA(o) => TraceStep::IntoWA(at(*o)),
                Move::IntoWB(set) => TraceStep::IntoWB(set.iter().map(|&o| at(o)).collect()),
            })
            .collect();
        EquilibriumJson {
            x: eq.x_star.values().to_vec(),
            y: eq.y_star.values().to_vec(),
            outcome: at(eq.outcome),
            trace,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorrespondenceJson {
    pub m: usize,
    pub n: usize,
    pub rows: Vec<Vec<usize>>,
    pub cols: Vec<Vec<usize>>,
    /// Row-major; each cell lists its deals.
    pub cells: Vec<Vec<[usize; 2]>>,
}

impl CorrespondenceJson {
    pub fn from_core(g: &Correspondence) -> Self {
        CorrespondenceJson {
            m: g.m,
            n: g.n,
            rows: g.rows.iter().map(|x| x.values().to_vec()).collect(),
            cols: g.cols.iter().map(|y| y.values().to_vec()).collect(),
            cells: g
                .cells
                .iter()
                .map(|cell| cell.iter().map(|&o| pair(o)).collect())
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Touches {
    #[serde(rename = "N")]
    pub n: Vec<String>,
    #[serde(rename = "E")]
    pub e: Vec<String>,
    #[serde(rename = "S")]
    pub s: Vec<String>,
    #[serde(rename = "W")]
    pub w: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapJson {
    pub areas: Vec<String>,
    pub adjacency: Vec<[String; 2]>,
    pub touches: Touches,
}

impl MapJson {
    pub fn to_core(&self) -> CoreResult<PlanarMap> {
        let adjacency: Vec<(String, String)> = self.adjacency.iter().map(|[a, b]| (a.clone(), b.clone())).collect();
        let t = &self.touches;
        PlanarMap::new(&self.areas, &adjacency, [&t.n, &t.e, &t.s, &t.w])
    }

    pub fn from_core(map: &PlanarMap) -> Self {
        let names = |s: bargain_core::VertexSet| s.iter().map(|v| map.areas()[v].clone()).collect();
        MapJson {
            areas: map.areas().to_vec(),
            adjacency: map
                .adjacency_pairs()
                .into_iter()
                .map(|(u, v)| [map.areas()[u].clone(), map.areas()[v].clone()])
                .collect(),
            touches: Touches {
                n: names(map.touching(Side::N)),
                e: names(map.touching(Side::E)),
                s: names(map.touching(Side::S)),
                w: names(map.touching(Side::W)),
            },
        }
    }
}

/// A game form over labelled outcomes: `cells[r][c]` is an outcome label.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormJson {
    pub outcomes: Vec<String>,
    pub cells: Vec<Vec<String>>,
}

impl FormJson {
    pub fn to_core(&self) -> Result<GameForm, String> {
        let rows = self.cells.len();
        let cols = self.cells.first().map_or(0, Vec::len);
        if rows == 0 || cols == 0 || self.cells.iter().any(|r| r.len() != cols) {
            return Err("cells must be a non-empty rectangular matrix".into());
        }
        let cells = self
            .cells
            .iter()
            .flatten()
            .map(|l| {
                self.outcomes
                    .iter()
                    .position(|o| o == l)
                    .ok_or_else(|| format!("unknown outcome {l:?}"))
            })
            .collect::<Result<Vec<_>, _>>()?;
        GameForm::new(self.outcomes.clone(), rows, cols, cells).map_err(|e| e.to_string())
    }
}

/// Utilities keyed by outcome label, for [`FormJson`] games.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LabelUtilityJson {
    #[serde(rename = "uA")]
    pub ua: BTreeMap<String, i64>,
    #[serde(rename = "uB")]
    pub ub: BTreeMap<String, i64>,
}

impl LabelUtilityJson {
    pub fn to_profile(&self, outcomes: &[String]) -> Result<UtilityProfile, String> {
        let pick = |m: &BTreeMap<String, i64>, name: &str| -> Result<Vec<i64>, String> {
            if let Some(extra) = m.keys().find(|k| !outcomes.contains(k)) {
                return Err(format!("{name} names unknown outcome {extra:?}"));
            }
            outcomes
                .iter()
                .map(|o| m.get(o).copied().ok_or_else(|| format!("{name} misses outcome {o:?}")))
                .collect()
        };
        UtilityProfile::new(pick(&self.ua, "uA")?, pick(&self.ub, "uB")?).map_err(|e| e.to_string())
    }
}
