//! Printed coalition lists for `G_{2,2,2}` against the computed ones.
//!
//! The printed lists write `o_{ijl}` with coordinates rotated relative to
//! this crate: the printed label of our outcome `(i, j, l)` is `j l i`.
//! Matching edge cardinalities singles out this rotation.

use std::collections::BTreeSet;

use bargain_core::multiplayer::{build3, coalition_hypergraphs, Outcome3};
use bargain_core::Hypergraph;

type Family = BTreeSet<BTreeSet<String>>;

fn printed(edges: &[&[&str]]) -> Family {
    edges
        .iter()
        .map(|e| e.iter().map(|s| s.to_string()).collect())
        .collect()
}

fn rotated(h: &Hypergraph, rot: [usize; 3]) -> Family {
    h.edges()
        .iter()
        .map(|e| {
            e.iter()
                .map(|v| {
                    let o = Outcome3::from_index(v, 2, 2);
                    let c = [o.i, o.j, o.l];
                    format!("{}{}{}", c[rot[0]], c[rot[1]], c[rot[2]])
                })
                .collect()
        })
        .collect()
}

fn printed_h_a() -> Family {
    printed(&[
        &["111", "112", "121", "122"],
        &["111", "121", "212", "222"],
        &["211", "212", "221", "222"],
    ])
}

fn printed_h_bc() -> Family {
    printed(&[
        &["111", "211"],
        &["112", "212"],
        &["111", "221"],
        &["111", "222"],
        &["112", "222"],
        &["121", "221"],
        &["121", "222"],
    ])
}

const ROTATIONS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

#[test]
fn rotation_is_determined_by_h_a() {
    let hs = coalition_hypergraphs(&build3(2, 2, 2).unwrap());
    let matching: Vec<_> = ROTATIONS
        .iter()
        .filter(|&&r| rotated(&hs.a, r) == printed_h_a())
        .collect();
    assert_eq!(matching, [&[1, 2, 0]]);
}

#[test]
fn h_bc_differs_in_one_edge() {
    let hs = coalition_hypergraphs(&build3(2, 2, 2).unwrap());
    let ours = rotated(&hs.bc.sperner_reduce(), [1, 2, 0]);
    let theirs = printed_h_bc();
    let only_ours: Vec<_> = ours.difference(&theirs).collect();
    let only_printed: Vec<_> = theirs.difference(&ours).collect();
    assert_eq!(only_ours, [&printed(&[&["122", "222"]]).into_iter().next().unwrap()]);
    assert_eq!(only_printed, [&printed(&[&["121", "222"]]).into_iter().next().unwrap()]);
}

#[test]
fn printed_witnesses_hold() {
    let h_a = printed_h_a();
    let hs = coalition_hypergraphs(&build3(2, 2, 2).unwrap());
    let h_bc = rotated(&hs.bc.sperner_reduce(), [1, 2, 0]);
    for pair in [["121", "211"], ["121", "212"]] {
        let w: BTreeSet<String> = pair.iter().map(|s| s.to_string()).collect();
        assert!(h_a.iter().all(|e| !e.is_disjoint(&w)));
        assert!(!h_bc.iter().any(|e| e.is_subset(&w)));
        assert!(!printed_h_bc().iter().any(|e| e.is_subset(&w)));
    }
}

#[test]
fn claire_hypergraph_matches_unrotated() {
    // The same list read without rotation is Claire's hypergraph.
    let hs = coalition_hypergraphs(&build3(2, 2, 2).unwrap());
    assert_eq!(rotated(&hs.c, [0, 1, 2]), printed_h_a());
}
