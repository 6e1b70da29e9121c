//! Brute-force reference implementations used only by tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

/// First `(x, y)` with `x <= y` non-gaps and `x + y` a gap, scanning pairs
/// of non-gaps directly from the complement.
pub fn naive_closure_witness(gaps: &[u32]) -> Option<(u32, u32)> {
    let gap_set: BTreeSet<u32> = gaps.iter().copied().collect();
    let max = match gap_set.iter().next_back() {
        Some(&m) => m,
        None => return None,
    };
    let nongaps: Vec<u32> = (1..=max).filter(|n| !gap_set.contains(n)).collect();
    for &x in &nongaps {
        for &y in nongaps.iter().filter(|&&y| y >= x) {
            if gap_set.contains(&(x + y)) {
                return Some((x, y));
            }
        }
    }
    None
}

/// Every gap set of size `g` inside `1..=2g-1` whose complement is closed
/// under addition, found by filtering all subsets.
pub fn naive_semigroup_gap_sets(genus: u32) -> Vec<Vec<u32>> {
    if genus == 0 {
        return vec![Vec::new()];
    }
    let universe: Vec<u32> = (1..2 * genus).collect();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << universe.len()) {
        if mask.count_ones() != genus {
            continue;
        }
        let gaps: Vec<u32> = universe
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        if naive_closure_witness(&gaps).is_none() {
            out.push(gaps);
        }
    }
    out
}

/// Symmetric semigroups of genus `g >= 2` as vanishing sequences: gap sets
/// containing 1 and `2g-1`, choosing the remaining `g-2` gaps from
/// `2..=2g-2`, filtered by the naive closure check.
pub fn naive_subcanonical_candidates(genus: u32) -> BTreeSet<Vec<u32>> {
    let inner: Vec<u32> = (2..=2 * genus - 2).collect();
    let mut out = BTreeSet::new();
    for mask in 0u64..(1u64 << inner.len()) {
        if mask.count_ones() != genus - 2 {
            continue;
        }
        let mut gaps = vec![1];
        gaps.extend(
            inner
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &v)| v),
        );
        gaps.push(2 * genus - 1);
        if naive_closure_witness(&gaps).is_none() {
            out.insert(gaps.iter().map(|s| s - 1).collect());
        }
    }
    out
}

/// All vanishing sequences `0 = a_0 < ... < a_{g-1} = 2g-2`, admissible or
/// not.
pub fn all_subcanonical_vanishing(genus: u32) -> Vec<Vec<u32>> {
    if genus == 1 {
        return vec![vec![0]];
    }
    let inner: Vec<u32> = (1..2 * genus - 2).collect();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << inner.len()) {
        if mask.count_ones() != genus - 2 {
            continue;
        }
        let mut seq = vec![0];
        seq.extend(
            inner
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &v)| v),
        );
        seq.push(2 * genus - 2);
        out.push(seq);
    }
    out
}

/// Base vanishing sequences used on the cover grid: every admissible
/// sequence for `h <= 3`.
pub fn base_sequences(h: u32) -> Vec<Vec<u32>> {
    match h {
        0 => vec![vec![]],
        1 => vec![vec![0]],
        2 => vec![vec![0, 1], vec![0, 2]],
        3 => vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 1, 4], vec![0, 2, 4]],
        _ => unreachable!(),
    }
}

/// Genus, vanishing, ramification, odd parity, weight.
pub type TableRow = (u32, &'static [u32], &'static [u32], bool, u32);

/// The 14 low-genus rows.
pub const TABLE_ROWS: [TableRow; 14] = [
    (2, &[0, 2], &[0, 1], true, 1),
    (3, &[0, 1, 4], &[0, 0, 2], true, 2),
    (3, &[0, 2, 4], &[0, 1, 2], false, 3),
    (4, &[0, 1, 2, 6], &[0, 0, 0, 3], true, 3),
    (4, &[0, 1, 3, 6], &[0, 0, 1, 3], false, 4),
    (4, &[0, 2, 4, 6], &[0, 1, 2, 3], false, 6),
    (5, &[0, 1, 2, 3, 8], &[0, 0, 0, 0, 4], true, 4),
    (5, &[0, 1, 2, 4, 8], &[0, 0, 0, 1, 4], false, 5),
    (5, &[0, 2, 4, 6, 8], &[0, 1, 2, 3, 4], true, 10),
    (6, &[0, 1, 2, 3, 4, 10], &[0, 0, 0, 0, 0, 5], true, 5),
    (6, &[0, 1, 2, 3, 5, 10], &[0, 0, 0, 0, 1, 5], false, 6),
    (6, &[0, 1, 2, 4, 6, 10], &[0, 0, 0, 1, 2, 5], false, 8),
    (6, &[0, 1, 2, 5, 6, 10], &[0, 0, 0, 2, 2, 5], true, 9),
    (6, &[0, 2, 4, 6, 8, 10], &[0, 1, 2, 3, 4, 5], true, 15),
];
