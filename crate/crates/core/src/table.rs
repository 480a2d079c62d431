//! Two-player tables over a labelled outcome set: correspondences (set-valued
//! cells) and game forms (one outcome per cell).

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::monotone::Correspondence;
use crate::sets::{VertexSet, MAX_VERTICES};

/// A game correspondence `G: X x Y -> 2^O` with `|O| <= 64`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellTable {
    pub outcomes: Vec<String>,
    pub row_names: Vec<String>,
    pub col_names: Vec<String>,
    /// Row-major.
    pub cells: Vec<VertexSet>,
}

impl CellTable {
    pub fn new(
        outcomes: Vec<String>,
        row_names: Vec<String>,
        col_names: Vec<String>,
        cells: Vec<VertexSet>,
    ) -> Result<Self> {
        if outcomes.len() > MAX_VERTICES {
            return Err(Error::BoundExceeded {
                what: "outcome count",
                limit: MAX_VERTICES as u128,
                actual: outcomes.len() as u128,
            });
        }
        if cells.len() != row_names.len() * col_names.len() {
            return Err(Error::InvalidArgument(format!(
                "{} cells for a {}x{} table",
                cells.len(),
                row_names.len(),
                col_names.len()
            )));
        }
        let full = VertexSet::full(outcomes.len());
        let cols = col_names.len();
        if let Some(k) = cells.iter().position(|c| c.is_empty() || !c.is_subset(full)) {
            return Err(Error::EmptyCell {
                row: k / cols,
                col: k % cols,
            });
        }
        Ok(CellTable {
            outcomes,
            row_names,
            col_names,
            cells,
        })
    }

    pub fn rows(&self) -> usize {
        self.row_names.len()
    }

    pub fn cols(&self) -> usize {
        self.col_names.len()
    }

    pub fn outcome_count(&self) -> usize {
        self.outcomes.len()
    }

    #[inline]
    pub fn cell(&self, row: usize, col: usize) -> VertexSet {
        self.cells[row * self.cols() + col]
    }

    /// `C_x` for every row: the union of its cells.
    pub fn row_unions(&self) -> Vec<VertexSet> {
        (0..self.rows())
            .map(|r| (0..self.cols()).fold(VertexSet::EMPTY, |s, c| s.union(self.cell(r, c))))
            .collect()
    }

    /// `D_y` for every column.
    pub fn col_unions(&self) -> Vec<VertexSet> {
        (0..self.cols())
            .map(|c| (0..self.rows()).fold(VertexSet::EMPTY, |s, r| s.union(self.cell(r, c))))
            .collect()
    }

    /// The row and column hypergraphs `(𝒞, 𝒟)`, one edge per strategy, unreduced.
    pub fn hypergraphs(&self) -> (Hypergraph, Hypergraph) {
        let c = Hypergraph::new(self.outcomes.clone(), self.row_unions()).expect("row unions are valid edges");
        let d = Hypergraph::new(self.outcomes.clone(), self.col_unions()).expect("column unions are valid edges");
        (c, d)
    }

    /// Every cell is a single outcome.
    pub fn is_game_form(&self) -> bool {
        self.cells.iter().all(|c| c.len() == 1)
    }

    pub fn to_game_form(&self) -> Option<GameForm> {
        let cells = self
            .cells
            .iter()
            .map(|c| (c.len() == 1).then(|| c.first().unwrap()))
            .collect::<Option<Vec<_>>>()?;
        Some(GameForm {
            outcomes: self.outcomes.clone(),
            rows: self.rows(),
            cols: self.cols(),
            cells,
        })
    }
}

/// Outcome label `o_i_j` for a bargaining outcome.
pub fn outcome_label(i: usize, j: usize) -> String {
    format!("o_{i}_{j}")
}

impl From<&Correspondence> for CellTable {
    fn from(g: &Correspondence) -> Self {
        let outcomes = (1..=g.m)
            .flat_map(|i| (1..=g.n).map(move |j| outcome_label(i, j)))
            .collect();
        let names = |maps: &[crate::monotone::MonotoneMap]| maps.iter().map(|x| format!("{:?}", x.values())).collect();
        let cells = g
            .cells
            .iter()
            .map(|cell| cell.iter().map(|o| o.index(g.n)).collect())
            .collect();
        CellTable::new(outcomes, names(&g.rows), names(&g.cols), cells).expect("bargaining cells are non-empty")
    }
}

/// `(𝒞, 𝒟)` of a correspondence: `C_x = ∪_y G(x,y)`, `D_y = ∪_x G(x,y)`.
pub fn row_column_hypergraphs(g: &Correspondence) -> (Hypergraph, Hypergraph) {
    CellTable::from(g).hypergraphs()
}

/// `G(x, y) = C_x ∩ D_y`; fails on the first empty intersection.
pub fn induced_correspondence(c: &Hypergraph, d: &Hypergraph) -> Result<CellTable> {
    c.require_same_ground(d)?;
    let mut cells = Vec::with_capacity(c.edges().len() * d.edges().len());
    for (r, &ce) in c.edges().iter().enumerate() {
        for (col, &de) in d.edges().iter().enumerate() {
            let cell = ce.intersection(de);
            if cell.is_empty() {
                return Err(Error::EmptyCell { row: r, col });
            }
            cells.push(cell);
        }
    }
    let name = |h: &Hypergraph, e: &VertexSet| h.labels_of(*e).join(" ");
    let rows = c.edges().iter().map(|e| name(c, e)).collect();
    let cols = d.edges().iter().map(|e| name(d, e)).collect();
    CellTable::new(c.ground().to_vec(), rows, cols, cells)
}

/// A game form `g: X x Y -> O`; rows and columns are plain indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GameForm {
    pub outcomes: Vec<String>,
    pub rows: usize,
    pub cols: usize,
    /// Row-major outcome indices.
    pub cells: Vec<usize>,
}

impl GameForm {
    pub fn new(outcomes: Vec<String>, rows: usize, cols: usize, cells: Vec<usize>) -> Result<Self> {
        let g = GameForm {
            outcomes,
            rows,
            cols,
            cells,
        };
        if g.cells.len() != rows * cols || rows == 0 || cols == 0 {
            return Err(Error::InvalidArgument(format!(
                "{} cells for a {rows}x{cols} form",
                g.cells.len()
            )));
        }
        if g.outcomes.len() > MAX_VERTICES {
            return Err(Error::BoundExceeded {
                what: "outcome count",
                limit: MAX_VERTICES as u128,
                actual: g.outcomes.len() as u128,
            });
        }
        if let Some(&o) = g.cells.iter().find(|&&o| o >= g.outcomes.len()) {
            return Err(Error::InvalidArgument(format!("outcome index {o} out of range")));
        }
        Ok(g)
    }

    /// Outcomes labelled `o1..op`.
    pub fn numbered(p: usize, rows: usize, cols: usize, cells: Vec<usize>) -> Result<Self> {
        GameForm::new((1..=p).map(|k| format!("o{k}")).collect(), rows, cols, cells)
    }

    #[inline]
    pub fn cell(&self, row: usize, col: usize) -> usize {
        self.cells[row * self.cols + col]
    }

    pub fn outcome_count(&self) -> usize {
        self.outcomes.len()
    }

    pub fn as_table(&self) -> CellTable {
        let names = |k: usize| (0..k).map(|i| format!("{}", i + 1)).collect();
        CellTable::new(
            self.outcomes.clone(),
            names(self.rows),
            names(self.cols),
            self.cells.iter().map(|&o| VertexSet::singleton(o)).collect(),
        )
        .expect("game form cells are singletons")
    }

    pub fn hypergraphs(&self) -> (Hypergraph, Hypergraph) {
        self.as_table().hypergraphs()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::{gen_fano, gen_symmetric, gen_wheel};
    use crate::monotone::build_correspondence;

    fn vs(v: &[usize]) -> VertexSet {
        VertexSet::from_indices(v.iter().copied())
    }

    #[test]
    fn g22_hypergraphs_match_listed_pair() {
        let (c, d) = row_column_hypergraphs(&build_correspondence(2, 2).unwrap());
        let expect_c = Hypergraph::from_labels(
            c.ground(),
            &[&["o_1_1", "o_2_1"], &["o_1_1", "o_2_2"], &["o_1_2", "o_2_2"]],
        )
        .unwrap();
        let expect_d = Hypergraph::from_labels(
            c.ground(),
            &[&["o_1_1", "o_1_2"], &["o_1_1", "o_2_2"], &["o_2_1", "o_2_2"]],
        )
        .unwrap();
        assert!(c.same_family(&expect_c));
        assert!(d.same_family(&expect_d));
    }

    #[test]
    fn four_by_six_hypergraph_shapes() {
        let (c, d) = row_column_hypergraphs(&build_correspondence(3, 2).unwrap());
        assert_eq!(c.edges().len(), 4);
        assert!(c.edges().iter().all(|e| e.len() == 3));
        assert_eq!(d.edges().len(), 6);
        assert!(d.edges().iter().all(|e| e.len() == 2));
    }

    #[test]
    fn trivial_table() {
        let (c, d) = row_column_hypergraphs(&build_correspondence(1, 1).unwrap());
        assert_eq!(c.edges(), [vs(&[0])]);
        assert_eq!(d.edges(), [vs(&[0])]);
    }

    #[test]
    fn fano_induced_table() {
        let f = gen_fano();
        let t = induced_correspondence(&f, &f).unwrap();
        assert_eq!((t.rows(), t.cols()), (7, 7));
        for r in 0..7 {
            for c in 0..7 {
                let expect = if r == c { 3 } else { 1 };
                assert_eq!(t.cell(r, c).len(), expect);
            }
        }
        assert_eq!(t.row_names[0], "o0 o1 o6");
    }

    #[test]
    fn induced_reports_empty_cell() {
        let c = Hypergraph::with_numbered_ground("o", 1, 2, vec![vs(&[0])]).unwrap();
        let d = Hypergraph::with_numbered_ground("o", 1, 2, vec![vs(&[0]), vs(&[1])]).unwrap();
        assert_eq!(induced_correspondence(&c, &d), Err(Error::EmptyCell { row: 0, col: 1 }));
    }

    #[test]
    fn wheel_and_symmetric_tables() {
        let w = gen_wheel(3).unwrap();
        let t = induced_correspondence(&w, &w).unwrap();
        assert_eq!(t.cell(3, 3), vs(&[1, 2, 3]));
        assert_eq!(t.cell(0, 1), vs(&[0]));
        let (c, d) = gen_symmetric(3, 2).unwrap();
        let t = induced_correspondence(&c, &d).unwrap();
        assert_eq!((t.rows(), t.cols()), (4, 6));
    }

    #[test]
    fn game_form_validation() {
        assert!(GameForm::numbered(2, 2, 2, vec![0, 1, 1, 0]).is_ok());
        assert!(GameForm::numbered(2, 2, 2, vec![0, 1, 1]).is_err());
        assert!(GameForm::numbered(2, 2, 2, vec![0, 1, 1, 2]).is_err());
        let g = GameForm::numbered(2, 2, 2, vec![0, 1, 1, 0]).unwrap();
        assert!(g.as_table().is_game_form());
        assert_eq!(g.as_table().to_game_form().unwrap(), g);
    }
}
