//! Effectivity: can a player force the outcome into `W ⊆ O`?
//!
//! For `G_{m,n}` this is decided greedily without enumerating strategies.
//! When the greedy test fails, [`blocking_strategy`] builds the opponent's
//! certificate that keeps every deal outside `W`.

use alloc::format;
use alloc::vec::Vec;
use core::fmt::Debug;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::monotone::{count_monotone_maps, deals, enumerate_monotone_maps, MonotoneMap, Player};
use crate::sets::{OutcomeSet, VertexSet};

/// Opponent strategies checked exhaustively up to this many, sampled beyond.
pub const VALIDATION_LIMIT: usize = 10_000;

const VALIDATION_SEED: u64 = 0x5eed_b10c;

/// Answers `E(P, W)` for one fixed player `P`.
pub trait EffectivityOracle {
    type Strategy: Clone + Debug;

    fn outcome_count(&self) -> usize;

    /// A strategy whose every attainable outcome lies in `w`, if one exists.
    fn effective(&self, w: &OutcomeSet) -> Option<Self::Strategy>;
}

#[inline]
fn idx(i: usize, j: usize, n: usize) -> usize {
    (i - 1) * n + (j - 1)
}

/// Greedy effectivity on `G_{m,n}`; the witness is the lexicographically
/// smallest monotone strategy that stays inside `w`.
///
/// `w` is indexed row-major over the `m x n` outcomes. Runs in `O(m + n)`.
pub fn greedy_effective(player: Player, w: &OutcomeSet, m: usize, n: usize) -> Option<MonotoneMap> {
    match player {
        Player::Alice => {
            let mut j = 1;
            let mut x = Vec::with_capacity(m);
            for i in 1..=m {
                while j <= n && !w.contains(idx(i, j, n)) {
                    j += 1;
                }
                if j > n {
                    return None;
                }
                x.push(j);
            }
            Some(MonotoneMap::from_raw(x, n))
        }
        Player::Bob => {
            let mut i = 1;
            let mut y = Vec::with_capacity(n);
            for j in 1..=n {
                while i <= m && !w.contains(idx(i, j, n)) {
                    i += 1;
                }
                if i > m {
                    return None;
                }
                y.push(i);
            }
            Some(MonotoneMap::from_raw(y, m))
        }
    }
}

/// First domain element the greedy cannot serve, or `None` if it succeeds.
fn greedy_failure(player: Player, w: &OutcomeSet, m: usize, n: usize) -> Option<usize> {
    let (rows, cols) = match player {
        Player::Alice => (m, n),
        Player::Bob => (n, m),
    };
    let at = |r: usize, c: usize| match player {
        Player::Alice => w.contains(idx(r, c, n)),
        Player::Bob => w.contains(idx(c, r, n)),
    };
    let mut c = 1;
    for r in 1..=rows {
        while c <= cols && !at(r, c) {
            c += 1;
        }
        if c > cols {
            return Some(r);
        }
    }
    None
}

/// A strategy of `player`'s opponent under which no deal lands in `w`,
/// whatever `player` does. Requires that `player` is not effective for `w`.
///
/// If some item of `player` has no outcome in `w` at all, the opponent maps
/// everything onto that item. Otherwise the opponent assigns to each of its
/// own items, in order, the smallest partner not below the previous one
/// whose outcome lies outside `w`. The result is validated before return.
pub fn blocking_strategy(player: Player, w: &OutcomeSet, m: usize, n: usize) -> Result<MonotoneMap> {
    let Some(stuck) = greedy_failure(player, w, m, n) else {
        return Err(Error::InvalidArgument(format!("{player:?} is effective for W")));
    };
    // Dimensions seen from the player: own items `rows`, partner items `cols`.
    let (rows, cols) = match player {
        Player::Alice => (m, n),
        Player::Bob => (n, m),
    };
    let in_w = |own: usize, other: usize| match player {
        Player::Alice => w.contains(idx(own, other, n)),
        Player::Bob => w.contains(idx(other, own, n)),
    };
    let blocker = if (1..=cols).all(|c| !in_w(stuck, c)) {
        MonotoneMap::constant(cols, rows, stuck)
    } else {
        let mut r = 1;
        let mut vals = Vec::with_capacity(cols);
        for c in 1..=cols {
            while r <= rows && in_w(r, c) {
                r += 1;
            }
            if r > rows {
                return Err(Error::ValidationFailure(format!(
                    "no blocking assignment for item {c} of {:?}",
                    player.opponent()
                )));
            }
            vals.push(r);
        }
        MonotoneMap::from_raw(vals, rows)
    };
    validate_blocker(player, w, m, n, &blocker)?;
    Ok(blocker)
}

/// Check that no strategy of `player` reaches a deal in `w` against `blocker`:
/// exhaustively when `player` has at most [`VALIDATION_LIMIT`] strategies,
/// otherwise on that many seeded random strategies.
pub fn validate_blocker(player: Player, w: &OutcomeSet, m: usize, n: usize, blocker: &MonotoneMap) -> Result<()> {
    let (dom, cod) = match player {
        Player::Alice => (m, n),
        Player::Bob => (n, m),
    };
    let hits = |t: &MonotoneMap| -> bool {
        let ds = match player {
            Player::Alice => deals(t, blocker),
            Player::Bob => deals(blocker, t),
        };
        ds.iter().any(|o| w.contains(o.index(n)))
    };
    let fail = |t: &MonotoneMap| {
        Error::ValidationFailure(format!(
            "{:?} strategy {t:?} reaches W against blocker {blocker:?}",
            player
        ))
    };
    match count_monotone_maps(dom, cod) {
        Some(total) if total <= VALIDATION_LIMIT as u128 => {
            if let Some(t) = enumerate_monotone_maps(dom, cod).iter().find(|t| hits(t)) {
                return Err(fail(t));
            }
        }
        _ => {
            let mut rng = ChaCha8Rng::seed_from_u64(VALIDATION_SEED);
            for _ in 0..VALIDATION_LIMIT {
                let t = random_monotone_map(&mut rng, dom, cod);
                if hits(&t) {
                    return Err(fail(&t));
                }
            }
        }
    }
    Ok(())
}

/// Uniform non-decreasing map `{1..domain} -> {1..codomain}` (stars and bars).
pub fn random_monotone_map<R: rand::Rng + ?Sized>(rng: &mut R, domain: usize, codomain: usize) -> MonotoneMap {
    let mut pos = rand::seq::index::sample(rng, domain + codomain - 1, domain).into_vec();
    pos.sort_unstable();
    let values = pos.iter().enumerate().map(|(k, &p)| p - k + 1).collect();
    MonotoneMap::from_raw(values, codomain)
}

/// Greedy oracle for one player of `G_{m,n}`.
#[derive(Clone, Copy, Debug)]
pub struct GreedyOracle {
    pub player: Player,
    pub m: usize,
    pub n: usize,
}

impl GreedyOracle {
    pub fn new(player: Player, m: usize, n: usize) -> Self {
        GreedyOracle { player, m, n }
    }
}

impl EffectivityOracle for GreedyOracle {
    type Strategy = MonotoneMap;

    fn outcome_count(&self) -> usize {
        self.m * self.n
    }

    fn effective(&self, w: &OutcomeSet) -> Option<MonotoneMap> {
        greedy_effective(self.player, w, self.m, self.n)
    }
}

/// Index of the first edge (in canonical order) contained in `w`.
pub fn hypergraph_effective(h: &Hypergraph, w: VertexSet) -> Option<usize> {
    let mut order: Vec<usize> = (0..h.edges().len()).collect();
    order.sort_by(|&a, &b| h.edges()[a].canonical_cmp(&h.edges()[b]).then(a.cmp(&b)));
    order.into_iter().find(|&k| h.edges()[k].is_subset(w))
}

/// Effectivity read off a player's hypergraph; strategies are edge indices.
#[derive(Clone, Debug)]
pub struct HypergraphOracle {
    edges: Vec<VertexSet>,
    order: Vec<usize>,
    outcomes: usize,
}

impl HypergraphOracle {
    pub fn new(h: &Hypergraph) -> Self {
        let mut order: Vec<usize> = (0..h.edges().len()).collect();
        order.sort_by(|&a, &b| h.edges()[a].canonical_cmp(&h.edges()[b]).then(a.cmp(&b)));
        HypergraphOracle {
            edges: h.edges().to_vec(),
            order,
            outcomes: h.ground_size(),
        }
    }
}

impl EffectivityOracle for HypergraphOracle {
    type Strategy = usize;

    fn outcome_count(&self) -> usize {
        self.outcomes
    }

    fn effective(&self, w: &OutcomeSet) -> Option<usize> {
        self.order
            .iter()
            .copied()
            .find(|&k| self.edges[k].iter().all(|v| w.contains(v)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::gen_fano;
    use crate::monotone::Outcome;

    fn set(m: usize, n: usize, outs: &[(usize, usize)]) -> OutcomeSet {
        let mut w = OutcomeSet::with_capacity(m * n);
        for &(i, j) in outs {
            w.insert(Outcome::new(i, j).index(n));
        }
        w
    }

    fn full(m: usize, n: usize) -> OutcomeSet {
        let mut w = OutcomeSet::with_capacity(m * n);
        w.insert_range(..);
        w
    }

    #[test]
    fn crossing_pair_is_not_effective() {
        let w = set(2, 2, &[(1, 2), (2, 1)]);
        assert!(greedy_effective(Player::Alice, &w, 2, 2).is_none());
        let y = blocking_strategy(Player::Alice, &w, 2, 2).unwrap();
        assert_eq!(y.values(), [1, 2]);
    }

    #[test]
    fn whole_outcome_set() {
        for (m, n) in [(1, 1), (3, 2), (4, 4)] {
            let x = greedy_effective(Player::Alice, &full(m, n), m, n).unwrap();
            assert!(x.values().iter().all(|&v| v == 1));
            let y = greedy_effective(Player::Bob, &full(m, n), m, n).unwrap();
            assert!(y.values().iter().all(|&v| v == 1));
        }
    }

    #[test]
    fn single_row_set() {
        let w = set(2, 3, &[(2, 1), (2, 2), (2, 3)]);
        assert!(greedy_effective(Player::Alice, &w, 2, 3).is_none());
        // Bob can force row 2 by always answering a_2.
        assert_eq!(greedy_effective(Player::Bob, &w, 2, 3).unwrap().values(), [2, 2, 2]);
        // Row 1 has no outcome of W: the blocker is the constant map onto a_1.
        assert_eq!(blocking_strategy(Player::Alice, &w, 2, 3).unwrap().values(), [1, 1, 1]);
    }

    #[test]
    fn empty_set_blocked_by_constant() {
        let w = OutcomeSet::with_capacity(9);
        assert_eq!(blocking_strategy(Player::Alice, &w, 3, 3).unwrap().values(), [1, 1, 1]);
        assert_eq!(blocking_strategy(Player::Bob, &w, 3, 3).unwrap().values(), [1, 1, 1]);
    }

    #[test]
    fn blocker_requires_failure() {
        assert!(matches!(
            blocking_strategy(Player::Alice, &full(2, 2), 2, 2),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn greedy_witness_stays_inside() {
        let w = set(3, 3, &[(1, 2), (2, 2), (2, 3), (3, 3), (3, 1)]);
        let x = greedy_effective(Player::Alice, &w, 3, 3).unwrap();
        assert_eq!(x.values(), [2, 2, 3]);
        for i in 1..=3 {
            assert!(w.contains(Outcome::new(i, x.at(i)).index(3)));
        }
    }

    #[test]
    fn sampled_validation_for_large_sides() {
        // 12 -> 12 maps: C(23, 12) > VALIDATION_LIMIT, so sampling kicks in.
        let (m, n) = (12, 12);
        let mut w = OutcomeSet::with_capacity(m * n);
        for i in 1..=m {
            for j in (1..=n).filter(|&j| j != i) {
                w.insert(Outcome::new(i, j).index(n));
            }
        }
        // Greedy climbs the superdiagonal and stalls on row 12; the blocker
        // keeps every deal on the diagonal.
        let y = blocking_strategy(Player::Alice, &w, m, n).unwrap();
        assert_eq!(y.values(), (1..=n).collect::<Vec<_>>());
    }

    #[test]
    fn random_maps_are_monotone() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let x = random_monotone_map(&mut rng, 5, 3);
            assert!(MonotoneMap::new(x.values().to_vec(), 3).is_ok());
        }
    }

    #[test]
    fn hypergraph_oracle_examples() {
        let f = gen_fano();
        assert_eq!(hypergraph_effective(&f, VertexSet::EMPTY), None);
        let line = f.edges()[3];
        assert_eq!(hypergraph_effective(&f, line), Some(3));
        // Complement of a line of the Fano plane holds no line.
        assert_eq!(hypergraph_effective(&f, line.complement(7)), None);
        let oracle = HypergraphOracle::new(&f);
        assert_eq!(oracle.effective(&line.to_outcome_set(7)), Some(3));
        assert_eq!(oracle.effective(&VertexSet::full(7).to_outcome_set(7)), Some(0));
    }
}
