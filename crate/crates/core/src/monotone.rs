//! Monotone strategies, deals and the bargaining correspondence `G_{m,n}`.
//!
//! Indices are 1-based throughout, matching `o_{ij} = (a_i, b_j)`. Alice
//! holds `A = {a_1..a_m}` and plays `x: A -> B`; Bob holds `B = {b_1..b_n}`
//! and plays `y: B -> A`. An outcome `(i, j)` is a deal for `(x, y)` when
//! `x(i) = j` and `y(j) = i`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// Default limit on `m * n` for materializing the full correspondence table.
pub const DEFAULT_TABLE_BOUND: usize = 36;

/// A non-decreasing map `{1..domain} -> {1..codomain}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonotoneMap {
    values: Vec<usize>,
    codomain: usize,
}

impl MonotoneMap {
    pub fn new(values: Vec<usize>, codomain: usize) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidStrategy("empty domain".into()));
        }
        if let Some(v) = values.iter().find(|&&v| v == 0 || v > codomain) {
            return Err(Error::InvalidStrategy(format!("value {v} outside 1..={codomain}")));
        }
        if values.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidStrategy(format!("{values:?} is not non-decreasing")));
        }
        Ok(MonotoneMap { values, codomain })
    }

    /// The constant map onto `value`.
    pub fn constant(domain: usize, codomain: usize, value: usize) -> Self {
        debug_assert!(domain >= 1 && (1..=codomain).contains(&value));
        MonotoneMap {
            values: vec![value; domain],
            codomain,
        }
    }

    pub(crate) fn from_raw(values: Vec<usize>, codomain: usize) -> Self {
        debug_assert!(values.windows(2).all(|w| w[0] <= w[1]));
        MonotoneMap { values, codomain }
    }

    /// Image of the 1-based element `i`.
    #[inline]
    pub fn at(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn domain(&self) -> usize {
        self.values.len()
    }

    pub fn codomain(&self) -> usize {
        self.codomain
    }
}

impl fmt::Debug for MonotoneMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.values)
    }
}

/// An outcome `o_{ij} = (a_i, b_j)`, 1-based.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Outcome {
    pub i: usize,
    pub j: usize,
}

impl Outcome {
    pub const fn new(i: usize, j: usize) -> Self {
        Outcome { i, j }
    }

    /// Row-major, 0-based position in `O` for an `m x n` outcome grid.
    #[inline]
    pub fn index(self, n: usize) -> usize {
        (self.i - 1) * n + (self.j - 1)
    }

    #[inline]
    pub fn from_index(idx: usize, n: usize) -> Self {
        Outcome {
            i: idx / n + 1,
            j: idx % n + 1,
        }
    }
}

impl fmt::Debug for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "o{}{}", self.i, self.j)
    }
}

/// `binomial(n, k)` in exact arithmetic.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    let mut acc = BigUint::from(1u32);
    for t in 0..k {
        acc *= n - t;
        acc /= t + 1;
    }
    acc
}

/// `(|X|, |Y|) = (C(m+n-1, m), C(m+n-1, n))`.
pub fn count_strategies(m: usize, n: usize) -> (BigUint, BigUint) {
    let total = (m + n - 1) as u64;
    (binomial(total, m as u64), binomial(total, n as u64))
}

/// Number of non-decreasing maps `domain -> codomain`, if it fits in `u128`.
pub fn count_monotone_maps(domain: usize, codomain: usize) -> Option<u128> {
    let total = (domain + codomain - 1) as u128;
    let k = domain.min(codomain - 1) as u128;
    let mut acc: u128 = 1;
    for t in 0..k {
        acc = acc.checked_mul(total - t)? / (t + 1);
    }
    Some(acc)
}

/// All non-decreasing maps in lexicographic order of their value sequences.
pub fn enumerate_monotone_maps(domain_size: usize, codomain_size: usize) -> Vec<MonotoneMap> {
    assert!(domain_size >= 1 && codomain_size >= 1);
    let mut out = Vec::new();
    let mut cur = vec![1usize; domain_size];
    loop {
        out.push(MonotoneMap::from_raw(cur.clone(), codomain_size));
        // Rightmost position that can still grow; everything after it resets to its value.
        let Some(pos) = cur.iter().rposition(|&v| v < codomain_size) else {
            break;
        };
        let next = cur[pos] + 1;
        for v in &mut cur[pos..] {
            *v = next;
        }
    }
    out
}

fn check_pair(x: &MonotoneMap, y: &MonotoneMap) {
    assert_eq!(x.codomain(), y.domain(), "x codomain must be y domain");
    assert_eq!(y.codomain(), x.domain(), "y codomain must be x domain");
}

/// All deals of `(x, y)`, sorted; never empty for monotone inputs.
pub fn deals(x: &MonotoneMap, y: &MonotoneMap) -> Vec<Outcome> {
    check_pair(x, y);
    let out: Vec<Outcome> = (1..=x.domain())
        .filter(|&i| y.at(x.at(i)) == i)
        .map(|i| Outcome::new(i, x.at(i)))
        .collect();
    assert!(!out.is_empty(), "monotone strategies always produce a deal");
    out
}

/// A vertex of the bipartite strategy digraph `Γ(x, y)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Vertex {
    A(usize),
    B(usize),
}

/// Walk `Γ(x, y)` from `start` until a vertex repeats; returns the cycle
/// the walk settles into, starting from its first repeated vertex.
pub fn lasso_cycle(x: &MonotoneMap, y: &MonotoneMap, start: Vertex) -> Vec<Vertex> {
    check_pair(x, y);
    let mut seen: Vec<Vertex> = Vec::new();
    let mut v = start;
    loop {
        if let Some(pos) = seen.iter().position(|&w| w == v) {
            return seen.split_off(pos);
        }
        seen.push(v);
        v = match v {
            Vertex::A(i) => Vertex::B(x.at(i)),
            Vertex::B(j) => Vertex::A(y.at(j)),
        };
    }
}

/// The table `G(x, y)` over all monotone strategy pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Correspondence {
    pub m: usize,
    pub n: usize,
    pub rows: Vec<MonotoneMap>,
    pub cols: Vec<MonotoneMap>,
    /// Row-major cells, each a sorted non-empty list of deals.
    pub cells: Vec<Vec<Outcome>>,
}

impl Correspondence {
    pub fn cell(&self, row: usize, col: usize) -> &[Outcome] {
        &self.cells[row * self.cols.len() + col]
    }
}

pub fn build_correspondence(m: usize, n: usize) -> Result<Correspondence> {
    build_correspondence_with_bound(m, n, DEFAULT_TABLE_BOUND)
}

pub fn build_correspondence_with_bound(m: usize, n: usize, bound: usize) -> Result<Correspondence> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidArgument("m and n must be positive".into()));
    }
    let size = m.saturating_mul(n);
    // Tables feed 64-bit vertex sets downstream.
    let limit = bound.min(crate::sets::MAX_VERTICES);
    if size > limit {
        return Err(Error::BoundExceeded {
            what: "m*n",
            limit: limit as u128,
            actual: size as u128,
        });
    }
    let rows = enumerate_monotone_maps(m, n);
    let cols = enumerate_monotone_maps(n, m);
    let cells = rows
        .iter()
        .flat_map(|x| cols.iter().map(move |y| deals(x, y)))
        .collect();
    Ok(Correspondence {
        m,
        n,
        rows,
        cols,
        cells,
    })
}

/// Strategies `(x, y)` whose deal set is exactly `deal_set`.
///
/// `x(a) = j_t` for `i_{t-1} < a <= i_t` and symmetrically for `y`; elements
/// past the last deal map to the last deal's partner.
pub fn realize_deals(m: usize, n: usize, deal_set: &[Outcome]) -> Result<(MonotoneMap, MonotoneMap)> {
    let mut chain = deal_set.to_vec();
    chain.sort();
    if chain.is_empty() {
        return Err(Error::InvalidDealSet("empty".into()));
    }
    if let Some(o) = chain
        .iter()
        .find(|o| !(1..=m).contains(&o.i) || !(1..=n).contains(&o.j))
    {
        return Err(Error::InvalidDealSet(format!("{o:?} out of range")));
    }
    if let Some(w) = chain.windows(2).find(|w| w[0].i >= w[1].i || w[0].j >= w[1].j) {
        return Err(Error::InvalidDealSet(format!(
            "{:?} and {:?} cross or share an item",
            w[0], w[1]
        )));
    }
    let last = *chain.last().unwrap();
    let mut x = Vec::with_capacity(m);
    let mut t = 0;
    for a in 1..=m {
        while t < chain.len() && chain[t].i < a {
            t += 1;
        }
        x.push(chain.get(t).map_or(last.j, |o| o.j));
    }
    let mut y = Vec::with_capacity(n);
    let mut t = 0;
    for b in 1..=n {
        while t < chain.len() && chain[t].j < b {
            t += 1;
        }
        y.push(chain.get(t).map_or(last.i, |o| o.i));
    }
    Ok((MonotoneMap::from_raw(x, n), MonotoneMap::from_raw(y, m)))
}

/// One of the two bargaining players.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Player {
    /// Owns `A`, chooses rows `x: A -> B`.
    Alice,
    /// Owns `B`, chooses columns `y: B -> A`.
    Bob,
}

impl Player {
    pub fn opponent(self) -> Player {
        match self {
            Player::Alice => Player::Bob,
            Player::Bob => Player::Alice,
        }
    }
}

/// The constant strategy of `player` that pins every cell through `deal` to `{deal}`.
pub fn punishing_strategy(deal: Outcome, player: Player, m: usize, n: usize) -> MonotoneMap {
    assert!((1..=m).contains(&deal.i) && (1..=n).contains(&deal.j));
    match player {
        Player::Alice => MonotoneMap::constant(m, n, deal.j),
        Player::Bob => MonotoneMap::constant(n, m, deal.i),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mm(v: &[usize], c: usize) -> MonotoneMap {
        MonotoneMap::new(v.to_vec(), c).unwrap()
    }

    fn o(i: usize, j: usize) -> Outcome {
        Outcome::new(i, j)
    }

    #[test]
    fn strategy_counts() {
        assert_eq!(count_strategies(2, 2), (3u32.into(), 3u32.into()));
        assert_eq!(count_strategies(3, 2), (4u32.into(), 6u32.into()));
        assert_eq!(count_strategies(3, 3), (10u32.into(), 10u32.into()));
        for n in 1..8 {
            assert_eq!(count_strategies(1, n), ((n as u32).into(), 1u32.into()));
        }
        let (x, _) = count_strategies(60, 60);
        assert_eq!(x, binomial(119, 60));
        assert!(x > BigUint::from(u64::MAX));
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let maps = enumerate_monotone_maps(2, 2);
        let vals: Vec<&[usize]> = maps.iter().map(|x| x.values()).collect();
        assert_eq!(vals, [&[1, 1][..], &[1, 2], &[2, 2]]);
        assert_eq!(enumerate_monotone_maps(3, 3).len(), 10);
        assert_eq!(enumerate_monotone_maps(2, 3).len(), 6);
        assert_eq!(enumerate_monotone_maps(1, 1).len(), 1);
        assert_eq!(enumerate_monotone_maps(4, 1).len(), 1);
        for d in 1..=8 {
            for c in 1..=8 {
                let maps = enumerate_monotone_maps(d, c);
                assert_eq!(maps.len() as u128, count_monotone_maps(d, c).unwrap());
                assert!(maps.windows(2).all(|w| w[0].values() < w[1].values()));
            }
        }
    }

    #[test]
    fn invalid_maps_rejected() {
        assert!(MonotoneMap::new(vec![2, 1], 2).is_err());
        assert!(MonotoneMap::new(vec![0, 1], 2).is_err());
        assert!(MonotoneMap::new(vec![1, 3], 2).is_err());
        assert!(MonotoneMap::new(vec![], 2).is_err());
    }

    #[test]
    fn deal_examples() {
        assert_eq!(deals(&mm(&[1, 2], 2), &mm(&[1, 2], 2)), [o(1, 1), o(2, 2)]);
        for (m, n) in [(1, 1), (2, 3), (4, 2)] {
            let x = MonotoneMap::constant(m, n, n);
            let y = MonotoneMap::constant(n, m, m);
            assert_eq!(deals(&x, &y), [o(m, n)]);
        }
        // Brute-force fixed-point scan over all (i, j) pairs.
        let x = mm(&[1, 1, 2], 3);
        let y = mm(&[1, 3, 3], 3);
        let brute: Vec<Outcome> = (1..=3)
            .flat_map(|i| (1..=3).map(move |j| o(i, j)))
            .filter(|d| x.at(d.i) == d.j && y.at(d.j) == d.i)
            .collect();
        assert_eq!(brute, [o(1, 1), o(3, 2)]);
        assert_eq!(deals(&x, &y), brute);
    }

    #[test]
    fn lasso_ends_in_a_deal() {
        let x = mm(&[1, 2, 3], 3);
        let y = mm(&[2, 2, 3], 3);
        let cyc = lasso_cycle(&x, &y, Vertex::A(1));
        assert_eq!(cyc, [Vertex::A(2), Vertex::B(2)]);
    }

    #[test]
    fn g22_table() {
        let g = build_correspondence(2, 2).unwrap();
        let expect = [
            vec![o(1, 1)],
            vec![o(1, 1)],
            vec![o(2, 1)],
            vec![o(1, 1)],
            vec![o(1, 1), o(2, 2)],
            vec![o(2, 2)],
            vec![o(1, 2)],
            vec![o(2, 2)],
            vec![o(2, 2)],
        ];
        assert_eq!(g.cells, expect);
    }

    #[test]
    fn four_by_six_table_two_deal_cell() {
        // A has three items, B two: rows are the four maps 3 -> 2.
        let g = build_correspondence(3, 2).unwrap();
        assert_eq!((g.rows.len(), g.cols.len()), (4, 6));
        let row = g.rows.iter().position(|x| x.values() == [1, 2, 2]).unwrap();
        assert_eq!(g.cols[2].values(), [1, 3]);
        assert_eq!(g.cell(row, 2), [o(1, 1), o(3, 2)]);
    }

    #[test]
    fn trivial_and_bounded_tables() {
        let g = build_correspondence(1, 1).unwrap();
        assert_eq!(g.cells, [vec![o(1, 1)]]);
        assert!(matches!(
            build_correspondence(6, 7),
            Err(Error::BoundExceeded {
                limit: 36,
                actual: 42,
                ..
            })
        ));
        assert!(build_correspondence_with_bound(6, 7, 42).is_ok());
    }

    #[test]
    fn realize_examples() {
        let (x, y) = realize_deals(3, 3, &[o(1, 1), o(2, 2), o(3, 3)]).unwrap();
        assert_eq!((x.values(), y.values()), (&[1, 2, 3][..], &[1, 2, 3][..]));
        let (x, y) = realize_deals(2, 2, &[o(2, 1)]).unwrap();
        assert_eq!(deals(&x, &y), [o(2, 1)]);
        assert!(matches!(
            realize_deals(2, 2, &[o(1, 1), o(2, 1)]),
            Err(Error::InvalidDealSet(_))
        ));
        assert!(realize_deals(2, 2, &[]).is_err());
        assert!(realize_deals(2, 2, &[o(3, 1)]).is_err());
    }

    #[test]
    fn punishing_examples() {
        let x = punishing_strategy(o(1, 1), Player::Alice, 2, 2);
        assert_eq!(x.values(), [1, 1]);
        assert_eq!(deals(&x, &mm(&[1, 2], 2)), [o(1, 1)]);
        assert_eq!(punishing_strategy(o(2, 2), Player::Bob, 3, 3).values(), [2, 2, 2]);
        let x = punishing_strategy(o(2, 3), Player::Alice, 2, 3);
        assert_eq!(x.values(), [3, 3]);
        assert_eq!(deals(&x, &mm(&[1, 2, 2], 2)), [o(2, 3)]);
    }

    #[test]
    fn outcome_indexing_round_trips() {
        for idx in 0..12 {
            assert_eq!(Outcome::from_index(idx, 4).index(4), idx);
        }
        assert_eq!(o(2, 3).index(3), 5);
    }
}
