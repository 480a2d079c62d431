//! Three-player monotone bargaining.
//!
//! Alice maps `A -> B` (`x`), Bob maps `B -> C` (`y`), Claire maps `C -> A`
//! (`z`). A triple `(a_i, b_j, c_l)` is a deal when `x(i) = j`, `y(j) = l` and
//! `z(l) = i`. Deals always exist, but for `m = n = k = 2` the correspondence is
//! neither tight nor Nash-solvable; [`certify_not_tight`] and
//! [`certify_no_ne`] check both facts directly.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::hypergraph::{check_dual, dualize, DualityVerdict, Hypergraph};
use crate::monotone::{enumerate_monotone_maps, MonotoneMap};
use crate::sets::{VertexSet, MAX_VERTICES};
use crate::solver::ENUMERATION_BOUND;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Outcome3 {
    pub i: usize,
    pub j: usize,
    pub l: usize,
}

impl Outcome3 {
    pub const fn new(i: usize, j: usize, l: usize) -> Self {
        Outcome3 { i, j, l }
    }

    /// Row-major index in `A x B x C`.
    pub fn index(self, n: usize, k: usize) -> usize {
        ((self.i - 1) * n + (self.j - 1)) * k + (self.l - 1)
    }

    pub fn from_index(idx: usize, n: usize, k: usize) -> Self {
        Outcome3::new(idx / (n * k) + 1, idx / k % n + 1, idx % k + 1)
    }
}

impl fmt::Debug for Outcome3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "o{}{}{}", self.i, self.j, self.l)
    }
}

/// Label `o_i_j_l` of an outcome.
pub fn outcome_label3(o: Outcome3) -> String {
    format!("o_{}_{}_{}", o.i, o.j, o.l)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Player3 {
    Alice,
    Bob,
    Claire,
}

impl Player3 {
    pub const ALL: [Player3; 3] = [Player3::Alice, Player3::Bob, Player3::Claire];

    pub fn letter(self) -> char {
        match self {
            Player3::Alice => 'A',
            Player3::Bob => 'B',
            Player3::Claire => 'C',
        }
    }

    fn slot(self) -> usize {
        self as usize
    }
}

/// All deals of `(x, y, z)`, sorted.
pub fn deals3(x: &MonotoneMap, y: &MonotoneMap, z: &MonotoneMap) -> Vec<Outcome3> {
    (1..=x.domain())
        .filter_map(|i| {
            let j = x.at(i);
            let l = y.at(j);
            (z.at(l) == i).then_some(Outcome3::new(i, j, l))
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Vertex3 {
    A(usize),
    B(usize),
    C(usize),
}

/// Follow `A -> B -> C -> A` arcs from `start` until a vertex repeats and
/// return the cycle reached.
pub fn lasso3(x: &MonotoneMap, y: &MonotoneMap, z: &MonotoneMap, start: Vertex3) -> Vec<Vertex3> {
    let mut seen: Vec<Vertex3> = Vec::new();
    let mut v = start;
    loop {
        if let Some(pos) = seen.iter().position(|&w| w == v) {
            return seen.split_off(pos);
        }
        seen.push(v);
        v = match v {
            Vertex3::A(i) => Vertex3::B(x.at(i)),
            Vertex3::B(j) => Vertex3::C(y.at(j)),
            Vertex3::C(l) => Vertex3::A(z.at(l)),
        };
    }
}

/// `G(x, y, z)` over all monotone strategy triples, in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Correspondence3 {
    pub m: usize,
    pub n: usize,
    pub k: usize,
    pub xs: Vec<MonotoneMap>,
    pub ys: Vec<MonotoneMap>,
    pub zs: Vec<MonotoneMap>,
    /// Indexed by [`Correspondence3::profile_index`].
    pub cells: Vec<Vec<Outcome3>>,
}

impl Correspondence3 {
    pub fn dims(&self) -> [usize; 3] {
        [self.xs.len(), self.ys.len(), self.zs.len()]
    }

    pub fn profile_index(&self, [a, b, c]: [usize; 3]) -> usize {
        (a * self.ys.len() + b) * self.zs.len() + c
    }

    pub fn profiles(&self) -> impl Iterator<Item = [usize; 3]> + '_ {
        let [dx, dy, dz] = self.dims();
        (0..dx).flat_map(move |a| (0..dy).flat_map(move |b| (0..dz).map(move |c| [a, b, c])))
    }

    pub fn cell(&self, p: [usize; 3]) -> &[Outcome3] {
        &self.cells[self.profile_index(p)]
    }

    pub fn outcome_count(&self) -> usize {
        self.m * self.n * self.k
    }

    pub fn outcome_labels(&self) -> Vec<String> {
        (0..self.outcome_count())
            .map(|t| outcome_label3(Outcome3::from_index(t, self.n, self.k)))
            .collect()
    }

    fn cell_set(&self, p: [usize; 3]) -> VertexSet {
        self.cell(p).iter().map(|o| o.index(self.n, self.k)).collect()
    }
}

pub fn build3(m: usize, n: usize, k: usize) -> Result<Correspondence3> {
    if m == 0 || n == 0 || k == 0 {
        return Err(Error::InvalidArgument("m, n and k must be positive".into()));
    }
    let size = m.saturating_mul(n).saturating_mul(k);
    if size > MAX_VERTICES {
        return Err(Error::BoundExceeded {
            what: "m*n*k",
            limit: MAX_VERTICES as u128,
            actual: size as u128,
        });
    }
    let xs = enumerate_monotone_maps(m, n);
    let ys = enumerate_monotone_maps(n, k);
    let zs = enumerate_monotone_maps(k, m);
    let mut cells = Vec::with_capacity(xs.len() * ys.len() * zs.len());
    for x in &xs {
        for y in &ys {
            for z in &zs {
                cells.push(deals3(x, y, z));
            }
        }
    }
    Ok(Correspondence3 {
        m,
        n,
        k,
        xs,
        ys,
        zs,
        cells,
    })
}

/// Effectivity hypergraphs of every nonempty proper coalition, unreduced.
///
/// The edge of a coalition strategy is the union of its cells over all
/// strategies of the complement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalitionHypergraphs {
    pub a: Hypergraph,
    pub b: Hypergraph,
    pub c: Hypergraph,
    pub ab: Hypergraph,
    pub ac: Hypergraph,
    pub bc: Hypergraph,
}

pub fn coalition_hypergraphs(g: &Correspondence3) -> CoalitionHypergraphs {
    let labels = g.outcome_labels();
    let dims = g.dims();
    // `fixed[t]` marks the coordinates owned by the coalition.
    let build = |fixed: [bool; 3]| {
        let key = |p: [usize; 3]| (0..3).filter(|&t| fixed[t]).fold(0usize, |acc, t| acc * dims[t] + p[t]);
        let count = (0..3).filter(|&t| fixed[t]).map(|t| dims[t]).product::<usize>();
        let mut edges = vec![VertexSet::EMPTY; count];
        for p in g.profiles() {
            let e = &mut edges[key(p)];
            *e = e.union(g.cell_set(p));
        }
        Hypergraph::new(labels.clone(), edges).expect("coalition edges are non-empty")
    };
    CoalitionHypergraphs {
        a: build([true, false, false]),
        b: build([false, true, false]),
        c: build([false, false, true]),
        ab: build([true, true, false]),
        ac: build([true, false, true]),
        bc: build([false, true, true]),
    }
}

/// Non-tightness of `G_{2,2,2}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotTightCertificate {
    pub h_a: Hypergraph,
    pub h_bc: Hypergraph,
    pub verdict: DualityVerdict,
    /// A two-outcome transversal of `H_A` containing no edge of `H_BC`.
    pub witness: VertexSet,
}

pub fn certify_not_tight() -> Result<NotTightCertificate> {
    let g = build3(2, 2, 2)?;
    let hs = coalition_hypergraphs(&g);
    let verdict = check_dual(&hs.a, &hs.bc)?;
    if verdict.dual {
        return Err(Error::ValidationFailure("H_A and H_BC came out dual".into()));
    }
    let witness = dualize(&hs.a)?
        .edges()
        .iter()
        .copied()
        .find(|&t| t.len() == 2 && !hs.bc.contains_edge_within(t))
        .ok_or_else(|| Error::ValidationFailure("no two-outcome witness".into()))?;
    Ok(NotTightCertificate {
        h_a: hs.a,
        h_bc: hs.bc,
        verdict,
        witness,
    })
}

/// Integer utilities of the three players, indexed by outcome.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Utilities3 {
    pub u: [Vec<i64>; 3],
}

impl Utilities3 {
    pub fn of(&self, p: Player3) -> &[i64] {
        &self.u[p.slot()]
    }

    pub fn zero(p: usize) -> Self {
        Utilities3 {
            u: [vec![0; p], vec![0; p], vec![0; p]],
        }
    }
}

/// One outcome per profile, indexed like [`Correspondence3::cells`].
pub type GameForm3 = Vec<usize>;

/// Every selection from `g`, varying the multi-deal cells in profile order
/// with the last one fastest.
pub fn enumerate_game_forms3(g: &Correspondence3) -> Result<Vec<GameForm3>> {
    let multi: Vec<usize> = (0..g.cells.len()).filter(|&t| g.cells[t].len() > 1).collect();
    let count = multi
        .iter()
        .try_fold(1u128, |acc, &t| acc.checked_mul(g.cells[t].len() as u128))
        .unwrap_or(u128::MAX);
    if count > ENUMERATION_BOUND {
        return Err(Error::BoundExceeded {
            what: "game forms",
            limit: ENUMERATION_BOUND,
            actual: count,
        });
    }
    let base: Vec<usize> = g.cells.iter().map(|c| c[0].index(g.n, g.k)).collect();
    let mut forms = Vec::with_capacity(count as usize);
    let mut digits = vec![0usize; multi.len()];
    loop {
        let mut f = base.clone();
        for (&t, &d) in multi.iter().zip(&digits) {
            f[t] = g.cells[t][d].index(g.n, g.k);
        }
        forms.push(f);
        let mut carry = true;
        for s in (0..multi.len()).rev() {
            digits[s] += 1;
            if digits[s] < g.cells[multi[s]].len() {
                carry = false;
                break;
            }
            digits[s] = 0;
        }
        if carry {
            return Ok(forms);
        }
    }
}

/// Whether `player` gains by changing only their own strategy at `profile`.
pub fn can_improve(
    g: &Correspondence3,
    form: &GameForm3,
    u: &Utilities3,
    profile: [usize; 3],
    player: Player3,
) -> bool {
    let s = player.slot();
    let u = u.of(player);
    let here = u[form[g.profile_index(profile)]];
    (0..g.dims()[s]).any(|d| {
        let mut q = profile;
        q[s] = d;
        u[form[g.profile_index(q)]] > here
    })
}

/// A player who can improve at `profile`, trying `prefer` first and then
/// Alice, Bob, Claire; `None` exactly at a Nash equilibrium.
pub fn improver(
    g: &Correspondence3,
    form: &GameForm3,
    u: &Utilities3,
    profile: [usize; 3],
    prefer: Option<Player3>,
) -> Option<Player3> {
    prefer
        .into_iter()
        .chain(Player3::ALL)
        .find(|&p| can_improve(g, form, u, profile, p))
}

/// Pure equilibria of one game form, in profile order.
pub fn equilibria3(g: &Correspondence3, form: &GameForm3, u: &Utilities3) -> Vec<[usize; 3]> {
    g.profiles()
        .filter(|&p| improver(g, form, u, p, None).is_none())
        .collect()
}

/// One annotated profile of `G_{2,2,2}`: the outcome shown and the player
/// marked as able to improve.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AnnotatedProfile {
    /// Strategy positions `[x, y, z]` in lexicographic order.
    pub profile: [usize; 3],
    pub outcome: Outcome3,
    pub improver: Player3,
}

/// Tables by Claire's strategy, rows by Alice's, columns by Bob's; each entry
/// is the outcome `ijl` and the marked player.
const ANNOTATED: [[[&str; 3]; 3]; 3] = [
    [
        ["111B", "111B", "112A"],
        ["111B", "111B", "112A"],
        ["121C", "122B", "122B"],
    ],
    [
        ["111A", "111A", "212C"],
        ["111A", "111A", "222A"],
        ["121C", "222C", "222A"],
    ],
    [
        ["211B", "211B", "212C"],
        ["221B", "222C", "222A"],
        ["221B", "222C", "222C"],
    ],
];

pub fn annotated_profiles() -> Vec<AnnotatedProfile> {
    let mut out = Vec::with_capacity(27);
    for (z, table) in ANNOTATED.iter().enumerate() {
        for (x, row) in table.iter().enumerate() {
            for (y, s) in row.iter().enumerate() {
                let b = s.as_bytes();
                let d = |t: usize| (b[t] - b'0') as usize;
                let improver = match b[3] {
                    b'A' => Player3::Alice,
                    b'B' => Player3::Bob,
                    _ => Player3::Claire,
                };
                out.push(AnnotatedProfile {
                    profile: [x, y, z],
                    outcome: Outcome3::new(d(0), d(1), d(2)),
                    improver,
                });
            }
        }
    }
    out.sort_by_key(|a| a.profile);
    out
}

/// Strict preferences `(better, worse)` required of each player, as stated.
/// Claire's list carries a comparison of an outcome with itself.
pub const STATED_PREFERENCES: [(Player3, [usize; 3], [usize; 3]); 12] = [
    (Player3::Alice, [2, 1, 2], [2, 2, 2]),
    (Player3::Alice, [2, 2, 2], [1, 1, 1]),
    (Player3::Alice, [1, 2, 1], [1, 1, 1]),
    (Player3::Alice, [1, 2, 2], [1, 1, 2]),
    (Player3::Bob, [1, 1, 2], [1, 1, 1]),
    (Player3::Bob, [1, 2, 1], [1, 2, 2]),
    (Player3::Bob, [2, 2, 2], [2, 2, 1]),
    (Player3::Bob, [2, 1, 2], [2, 1, 1]),
    (Player3::Claire, [1, 1, 1], [2, 2, 2]),
    (Player3::Claire, [1, 2, 2], [1, 2, 2]),
    (Player3::Claire, [1, 1, 2], [2, 1, 2]),
    (Player3::Claire, [2, 2, 1], [1, 2, 1]),
];

/// Strict preferences of `player` over outcome indices of `G_{2,2,2}` with
/// self-comparisons dropped. Fails if the rest contain a cycle.
pub fn preference_order(player: Player3) -> Result<Vec<(usize, usize)>> {
    let idx = |t: [usize; 3]| Outcome3::new(t[0], t[1], t[2]).index(2, 2);
    let pairs: Vec<(usize, usize)> = STATED_PREFERENCES
        .iter()
        .filter(|(p, a, b)| *p == player && a != b)
        .map(|(_, a, b)| (idx(*a), idx(*b)))
        .collect();
    // Repeatedly peel outcomes that are better than nothing left.
    let mut left = pairs.clone();
    while !left.is_empty() {
        let sinks: Vec<usize> = left
            .iter()
            .map(|&(_, b)| b)
            .filter(|&b| !left.iter().any(|&(a, _)| a == b))
            .collect();
        if sinks.is_empty() {
            return Err(Error::RealizationInfeasible(format!(
                "{player:?}'s preferences contain a cycle"
            )));
        }
        left.retain(|&(_, b)| !sinks.contains(&b));
    }
    Ok(pairs)
}

/// Largest utility value tried by [`realize_utilities`].
pub const REALIZATION_MAX_VALUE: i64 = 8;

/// Search for utilities on `G_{2,2,2}` meeting the stated preferences, under
/// which every annotated player improves at their profile in the drawn game
/// form, and no game form of the correspondence has a pure equilibrium.
///
/// Value ranges `0..=v` are tried for `v = 1, 2, ..`; within a range each
/// player's vectors run in lexicographic order over outcomes `111..222`, and
/// the first combination (Alice slowest) is returned.
pub fn realize_utilities() -> Result<Utilities3> {
    let g = build3(2, 2, 2)?;
    let forms = enumerate_game_forms3(&g)?;
    let annotated = annotated_profiles();
    let drawn: GameForm3 = annotated.iter().map(|a| a.outcome.index(2, 2)).collect();
    if !forms.contains(&drawn) || annotated.iter().any(|a| !g.cell(a.profile).contains(&a.outcome)) {
        return Err(Error::RealizationInfeasible(
            "annotated table is not a selection".into(),
        ));
    }
    let orders = [
        preference_order(Player3::Alice)?,
        preference_order(Player3::Bob)?,
        preference_order(Player3::Claire)?,
    ];
    let p = g.outcome_count();
    for v in 1..=REALIZATION_MAX_VALUE {
        let mut cands: [Vec<Vec<i64>>; 3] = Default::default();
        for player in Player3::ALL {
            let s = player.slot();
            let mut vals = vec![0i64; p];
            loop {
                let ok = orders[s].iter().all(|&(a, b)| vals[a] > vals[b]) && {
                    let mut u = Utilities3::zero(p);
                    u.u[s] = vals.clone();
                    annotated
                        .iter()
                        .filter(|a| a.improver == player)
                        .all(|a| can_improve(&g, &drawn, &u, a.profile, player))
                };
                if ok {
                    cands[s].push(vals.clone());
                }
                // Odometer, last outcome fastest.
                let mut t = p;
                loop {
                    if t == 0 {
                        break;
                    }
                    t -= 1;
                    if vals[t] < v {
                        vals[t] += 1;
                        break;
                    }
                    vals[t] = 0;
                }
                if vals.iter().all(|&x| x == 0) {
                    break;
                }
            }
        }
        for ua in &cands[0] {
            for ub in &cands[1] {
                for uc in &cands[2] {
                    let u = Utilities3 {
                        u: [ua.clone(), ub.clone(), uc.clone()],
                    };
                    if forms.iter().all(|f| equilibria3(&g, f, &u).is_empty()) {
                        return Ok(u);
                    }
                }
            }
        }
    }
    Err(Error::RealizationInfeasible(format!(
        "no utilities with values up to {REALIZATION_MAX_VALUE}"
    )))
}

/// The first solution of [`realize_utilities`], found with values in `0..=2`.
/// Outcomes in order `111, 112, 121, 122, 211, 212, 221, 222`.
pub fn frozen_utilities() -> Utilities3 {
    Utilities3 {
        u: [
            vec![0, 0, 1, 1, 0, 2, 0, 1],
            vec![0, 1, 1, 0, 0, 1, 0, 1],
            vec![1, 1, 0, 1, 0, 0, 1, 0],
        ],
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormReport {
    /// Outcome chosen at each multi-deal cell, in profile order.
    pub selection: Vec<Outcome3>,
    pub equilibria: Vec<[usize; 3]>,
    /// An improving player per profile, preferring the annotated one.
    pub improvers: Vec<Option<Player3>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NoNeReport {
    pub utilities: Utilities3,
    pub forms: Vec<FormReport>,
}

impl NoNeReport {
    pub fn total_forms(&self) -> usize {
        self.forms.len()
    }

    pub fn ne_found(&self) -> usize {
        self.forms.iter().map(|f| f.equilibria.len()).sum()
    }
}

/// Check every game form of `G_{2,2,2}` for pure equilibria under `u`.
pub fn certify_no_ne(u: &Utilities3) -> Result<NoNeReport> {
    let g = build3(2, 2, 2)?;
    if u.u.iter().any(|v| v.len() != g.outcome_count()) {
        return Err(Error::InvalidArgument("utilities must cover 8 outcomes".into()));
    }
    let annotated = annotated_profiles();
    let forms = enumerate_game_forms3(&g)?
        .into_iter()
        .map(|f| {
            let selection = (0..g.cells.len())
                .filter(|&t| g.cells[t].len() > 1)
                .map(|t| Outcome3::from_index(f[t], g.n, g.k))
                .collect();
            let improvers = annotated
                .iter()
                .map(|a| improver(&g, &f, u, a.profile, Some(a.improver)))
                .collect();
            FormReport {
                selection,
                equilibria: equilibria3(&g, &f, u),
                improvers,
            }
        })
        .collect();
    Ok(NoNeReport {
        utilities: u.clone(),
        forms,
    })
}
