//! Simple Nash equilibria of tight game correspondences, plus brute-force
//! equilibrium and solvability checks used as oracles.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use fixedbitset::FixedBitSet;

use crate::effectivity::{EffectivityOracle, GreedyOracle, HypergraphOracle};
use crate::error::{Error, Result};
use crate::hypergraph::{check_dual, DualityVerdict};
use crate::monotone::{deals, MonotoneMap, Player};
use crate::sets::OutcomeSet;
use crate::table::{CellTable, GameForm};

/// Limit on exhaustive enumerations (game forms, strategy profiles).
pub const ENUMERATION_BOUND: u128 = 1_000_000;

/// Largest outcome set for the ±1 solvability sweep.
pub const PM1_BOUND: usize = 20;

/// Integer utilities of both players, indexed by outcome.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UtilityProfile {
    pub ua: Vec<i64>,
    pub ub: Vec<i64>,
}

impl UtilityProfile {
    pub fn new(ua: Vec<i64>, ub: Vec<i64>) -> Result<Self> {
        if ua.len() != ub.len() {
            return Err(Error::InvalidArgument(format!(
                "utility tables have {} and {} entries",
                ua.len(),
                ub.len()
            )));
        }
        Ok(UtilityProfile { ua, ub })
    }

    /// `u_B = -u_A`.
    pub fn zero_sum(ua: Vec<i64>) -> Self {
        let ub = ua.iter().map(|v| -v).collect();
        UtilityProfile { ua, ub }
    }

    pub fn zero(p: usize) -> Self {
        UtilityProfile {
            ua: vec![0; p],
            ub: vec![0; p],
        }
    }

    pub fn is_zero_sum(&self) -> bool {
        self.ua.iter().zip(&self.ub).all(|(a, b)| a + b == 0)
    }

    pub fn outcome_count(&self) -> usize {
        self.ua.len()
    }

    fn require_len(&self, p: usize) -> Result<()> {
        if self.ua.len() != p || self.ub.len() != p {
            return Err(Error::InvalidArgument(format!(
                "utilities cover {} outcomes, game has {p}",
                self.ua.len()
            )));
        }
        Ok(())
    }
}

/// One step of the partition process.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Move {
    /// Bob cannot force `W_A ∪ {o*}`; `o*` joins `W_A`.
    IntoWA(usize),
    /// Alice cannot force `W_B ∪ W_B(o*)`; the whole set joins `W_B`.
    IntoWB(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleEquilibrium<X, Y> {
    pub x_star: X,
    pub y_star: Y,
    /// `o*`, the single outcome of the cell `(x*, y*)`.
    pub outcome: usize,
    pub trace: Vec<Move>,
}

/// Run the partition process on a tight correspondence.
///
/// `cell(x, y)` must return the outcome indices of `G(x, y)`. Ties in `u_A`
/// are broken by the smallest outcome index. Fails with [`Error::NotTight`]
/// when `W` runs out or the final cell is not `{o*}`.
pub fn solve_tight<OA, OB, F>(
    oracle_a: &OA,
    oracle_b: &OB,
    u: &UtilityProfile,
    cell: F,
) -> Result<SimpleEquilibrium<OA::Strategy, OB::Strategy>>
where
    OA: EffectivityOracle,
    OB: EffectivityOracle,
    F: Fn(&OA::Strategy, &OB::Strategy) -> Vec<usize>,
{
    let p = oracle_a.outcome_count();
    if oracle_b.outcome_count() != p {
        return Err(Error::InvalidArgument("oracles disagree on the outcome set".into()));
    }
    u.require_len(p)?;
    let mut by_a: Vec<usize> = (0..p).collect();
    by_a.sort_by_key(|&o| (u.ua[o], o));
    let mut by_b: Vec<usize> = (0..p).collect();
    by_b.sort_by_key(|&o| (u.ub[o], o));

    let mut w = FixedBitSet::with_capacity(p);
    w.insert_range(..);
    let mut w_a = OutcomeSet::with_capacity(p);
    let mut w_b = OutcomeSet::with_capacity(p);
    let (mut pa, mut pb) = (0, 0);
    let mut trace = Vec::new();

    loop {
        while pa < p && !w.contains(by_a[pa]) {
            pa += 1;
        }
        let Some(&o_star) = by_a.get(pa) else {
            return Err(Error::NotTight("every outcome was eliminated".into()));
        };

        w_a.insert(o_star);
        let Some(y_star) = oracle_b.effective(&w_a) else {
            w.set(o_star, false);
            trace.push(Move::IntoWA(o_star));
            continue;
        };
        w_a.set(o_star, false);

        // Earlier moves into W_B removed every W-outcome below their threshold,
        // so W_B(o*) is the next stretch of `by_b` still inside W.
        let threshold = u.ub[o_star];
        let mut q = pb;
        let mut w_b_star = Vec::new();
        while q < p && u.ub[by_b[q]] <= threshold {
            if w.contains(by_b[q]) {
                w_b_star.push(by_b[q]);
            }
            q += 1;
        }
        debug_assert!(w_b_star.contains(&o_star));
        for &o in &w_b_star {
            w_b.insert(o);
        }
        match oracle_a.effective(&w_b) {
            None => {
                for &o in &w_b_star {
                    w.set(o, false);
                }
                pb = q;
                w_b_star.sort_unstable();
                trace.push(Move::IntoWB(w_b_star));
            }
            Some(x_star) => {
                let got = cell(&x_star, &y_star);
                if got != [o_star] {
                    return Err(Error::NotTight(format!(
                        "cell at the final profile is {got:?}, expected [{o_star}]"
                    )));
                }
                return Ok(SimpleEquilibrium {
                    x_star,
                    y_star,
                    outcome: o_star,
                    trace,
                });
            }
        }
    }
}

/// [`solve_tight`] on `G_{m,n}` with greedy oracles; no table is built.
/// Utilities are indexed row-major by `(i - 1) * n + (j - 1)`.
pub fn solve_monotone(m: usize, n: usize, u: &UtilityProfile) -> Result<SimpleEquilibrium<MonotoneMap, MonotoneMap>> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidArgument("m and n must be positive".into()));
    }
    let a = GreedyOracle::new(Player::Alice, m, n);
    let b = GreedyOracle::new(Player::Bob, m, n);
    solve_tight(&a, &b, u, |x, y| deals(x, y).into_iter().map(|o| o.index(n)).collect())
}

/// [`solve_tight`] on an explicit table; strategies are row and column indices.
pub fn solve_table(table: &CellTable, u: &UtilityProfile) -> Result<SimpleEquilibrium<usize, usize>> {
    let (c, d) = table.hypergraphs();
    let a = HypergraphOracle::new(&c);
    let b = HypergraphOracle::new(&d);
    solve_tight(&a, &b, u, |&r, &col| table.cell(r, col).to_vec())
}

/// Whether `(row, col)` is a Nash equilibrium. Multi-outcome cells are read
/// through `selection`; without one, consulting such a cell is an error.
pub fn verify_equilibrium(
    table: &CellTable,
    u: &UtilityProfile,
    (row, col): (usize, usize),
    selection: Option<&GameForm>,
) -> Result<bool> {
    u.require_len(table.outcome_count())?;
    if row >= table.rows() || col >= table.cols() {
        return Err(Error::InvalidArgument(format!("profile ({row}, {col}) out of range")));
    }
    if let Some(g) = selection {
        if g.rows != table.rows() || g.cols != table.cols() {
            return Err(Error::InvalidArgument("selection has the wrong shape".into()));
        }
        if let Some(k) = (0..g.cells.len()).find(|&k| !table.cells[k].contains(g.cells[k])) {
            return Err(Error::InvalidArgument(format!("selection leaves cell {k}")));
        }
    }
    let at = |r: usize, c: usize| -> Result<usize> {
        if let Some(g) = selection {
            return Ok(g.cell(r, c));
        }
        let s = table.cell(r, c);
        if s.len() == 1 {
            Ok(s.first().unwrap())
        } else {
            Err(Error::AmbiguousCell { row: r, col: c })
        }
    };
    let here = at(row, col)?;
    for r in 0..table.rows() {
        if u.ua[at(r, col)?] > u.ua[here] {
            return Ok(false);
        }
    }
    for c in 0..table.cols() {
        if u.ub[at(row, c)?] > u.ub[here] {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `(row, col)` is a Nash equilibrium of every game form selected
/// from `table`. The cell `(row, col)` must be a singleton.
///
/// Only row `row` and column `col` are read, and each deviation cell may be
/// selected independently, so this checks every outcome of every such cell.
pub fn is_equilibrium_in_every_form(table: &CellTable, u: &UtilityProfile, (row, col): (usize, usize)) -> Result<bool> {
    u.require_len(table.outcome_count())?;
    let here = table.cell(row, col);
    if here.len() != 1 {
        return Err(Error::AmbiguousCell { row, col });
    }
    let o = here.first().unwrap();
    let a_ok = (0..table.rows()).all(|r| table.cell(r, col).iter().all(|v| u.ua[v] <= u.ua[o]));
    let b_ok = (0..table.cols()).all(|c| table.cell(row, c).iter().all(|v| u.ub[v] <= u.ub[o]));
    Ok(a_ok && b_ok)
}

/// Every pure Nash equilibrium of `g`, row-major.
pub fn brute_force_equilibria(g: &GameForm, u: &UtilityProfile) -> Result<Vec<(usize, usize)>> {
    u.require_len(g.outcome_count())?;
    let profiles = (g.rows as u128) * (g.cols as u128);
    if profiles > ENUMERATION_BOUND {
        return Err(Error::BoundExceeded {
            what: "strategy profiles",
            limit: ENUMERATION_BOUND,
            actual: profiles,
        });
    }
    Ok(equilibria_unchecked(g, &u.ua, &u.ub))
}

fn equilibria_unchecked(g: &GameForm, ua: &[i64], ub: &[i64]) -> Vec<(usize, usize)> {
    let col_best: Vec<i64> = (0..g.cols)
        .map(|c| (0..g.rows).map(|r| ua[g.cell(r, c)]).max().unwrap())
        .collect();
    let row_best: Vec<i64> = (0..g.rows)
        .map(|r| (0..g.cols).map(|c| ub[g.cell(r, c)]).max().unwrap())
        .collect();
    let mut out = Vec::new();
    for (r, &rb) in row_best.iter().enumerate() {
        for (c, &cb) in col_best.iter().enumerate() {
            let o = g.cell(r, c);
            if ua[o] == cb && ub[o] == rb {
                out.push((r, c));
            }
        }
    }
    out
}

/// Mixed-radix iterator over selections of a correspondence.
#[derive(Clone, Debug)]
pub struct GameForms {
    outcomes: Vec<alloc::string::String>,
    rows: usize,
    cols: usize,
    base: Vec<usize>,
    /// Varying cells and their members.
    free: Vec<(usize, Vec<usize>)>,
    digits: Vec<usize>,
    done: bool,
}

impl GameForms {
    fn new(table: &CellTable, free_cells: Vec<usize>) -> Result<Self> {
        let count = free_cells
            .iter()
            .try_fold(1u128, |acc, &k| acc.checked_mul(table.cells[k].len() as u128))
            .unwrap_or(u128::MAX);
        if count > ENUMERATION_BOUND {
            return Err(Error::BoundExceeded {
                what: "game forms",
                limit: ENUMERATION_BOUND,
                actual: count,
            });
        }
        let base = table.cells.iter().map(|c| c.first().unwrap()).collect();
        let free: Vec<_> = free_cells
            .into_iter()
            .filter(|&k| table.cells[k].len() > 1)
            .map(|k| (k, table.cells[k].to_vec()))
            .collect();
        Ok(GameForms {
            outcomes: table.outcomes.clone(),
            rows: table.rows(),
            cols: table.cols(),
            base,
            digits: vec![0; free.len()],
            free,
            done: false,
        })
    }

    /// Number of forms this iterator yields.
    pub fn count_forms(&self) -> u128 {
        self.free.iter().map(|(_, v)| v.len() as u128).product()
    }
}

impl Iterator for GameForms {
    type Item = GameForm;

    fn next(&mut self) -> Option<GameForm> {
        if self.done {
            return None;
        }
        let mut cells = self.base.clone();
        for ((k, members), &d) in self.free.iter().zip(&self.digits) {
            cells[*k] = members[d];
        }
        // Advance, last free cell fastest.
        self.done = true;
        for t in (0..self.free.len()).rev() {
            self.digits[t] += 1;
            if self.digits[t] < self.free[t].1.len() {
                self.done = false;
                break;
            }
            self.digits[t] = 0;
        }
        Some(GameForm {
            outcomes: self.outcomes.clone(),
            rows: self.rows,
            cols: self.cols,
            cells,
        })
    }
}

/// All game forms `g ∈ G`, in mixed-radix order over the multi-outcome cells
/// (row-major, members ascending, last cell varying fastest).
pub fn enumerate_game_forms(table: &CellTable) -> Result<GameForms> {
    GameForms::new(table, (0..table.cells.len()).collect())
}

/// Game forms that vary only on row `row` and column `col`, every other cell
/// fixed to its smallest outcome.
///
/// Whether `(row, col)` is an equilibrium depends on those cells alone, so this
/// family decides "equilibrium in every `g ∈ G`" when the full set is too big.
pub fn enumerate_game_forms_through(table: &CellTable, (row, col): (usize, usize)) -> Result<GameForms> {
    let cols = table.cols();
    let mut free: Vec<usize> = (0..cols).map(|c| row * cols + c).collect();
    free.extend((0..table.rows()).filter(|&r| r != row).map(|r| r * cols + col));
    free.sort_unstable();
    GameForms::new(table, free)
}

/// Solvability of `g` for every zero-sum `±1` utility.
///
/// Masks run from 0 to `2^p - 1`; bit `k` set gives outcome `k` the value
/// `+1` for Alice. Returns the first assignment with no saddle point.
pub fn check_pm1_solvability(g: &GameForm) -> Result<(bool, Option<Vec<i8>>)> {
    let p = g.outcome_count();
    if p > PM1_BOUND {
        return Err(Error::BoundExceeded {
            what: "outcome count for the ±1 sweep",
            limit: PM1_BOUND as u128,
            actual: p as u128,
        });
    }
    let profiles = (g.rows as u128) * (g.cols as u128);
    if profiles > ENUMERATION_BOUND {
        return Err(Error::BoundExceeded {
            what: "strategy profiles",
            limit: ENUMERATION_BOUND,
            actual: profiles,
        });
    }
    let mut ua = vec![0i64; p];
    let mut ub = vec![0i64; p];
    for mask in 0u32..(1u32 << p) {
        for k in 0..p {
            let s = if mask >> k & 1 == 1 { 1 } else { -1 };
            ua[k] = s;
            ub[k] = -s;
        }
        if equilibria_unchecked(g, &ua, &ub).is_empty() {
            return Ok((false, Some(ua.iter().map(|&v| v as i8).collect())));
        }
    }
    Ok((true, None))
}

/// Tightness of a table: duality of its row and column hypergraphs.
pub fn check_tight(table: &CellTable) -> Result<DualityVerdict> {
    let (c, d) = table.hypergraphs();
    check_dual(&c, &d)
}
