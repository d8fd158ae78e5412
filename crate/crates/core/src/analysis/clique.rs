use crate::error::{Error, Result};
use crate::graph::IdealGraph;

/// Largest order accepted by [`clique_number`].
pub const CLIQUE_ORDER_LIMIT: usize = 32;

/// Exact clique number by branch and bound over bitset neighbourhoods.
pub fn clique_number(g: &IdealGraph) -> Result<usize> {
    let n = g.order();
    if n > CLIQUE_ORDER_LIMIT {
        return Err(Error::OrderTooLarge {
            order: n,
            limit: CLIQUE_ORDER_LIMIT,
        });
    }
    let nbr: Vec<u64> = (0..n).map(|i| g.row(i)[0]).collect();
    let all = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
    let mut best = 0;
    expand(&nbr, 0, all, &mut best);
    Ok(best)
}

fn expand(nbr: &[u64], size: usize, mut cand: u64, best: &mut usize) {
    if cand == 0 {
        *best = (*best).max(size);
        return;
    }
    while cand != 0 {
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        expand(nbr, size + 1, cand & nbr[v], best);
    }
    *best = (*best).max(size);
}

/// `n/2 + 1` for even `n`, `(n + 1)/2` for odd `n`.
pub fn clique_formula(n: usize) -> usize {
    if n.is_multiple_of(2) {
        n / 2 + 1
    } else {
        n.div_ceil(2)
    }
}

/// Finds a clique of exactly `k` vertices in a graph of any order, trying
/// high-index vertices first. Returns vertex indices in descending order.
pub fn find_clique(g: &IdealGraph, k: usize) -> Option<Vec<usize>> {
    if k == 0 {
        return Some(Vec::new());
    }
    let words = g.words_per_row();
    let mut all = vec![0u64; words];
    for i in 0..g.order() {
        all[i / 64] |= 1 << (i % 64);
    }
    let mut chosen = Vec::with_capacity(k);
    grow(g, k, &all, &mut chosen).then_some(chosen)
}

fn grow(g: &IdealGraph, k: usize, cand: &[u64], chosen: &mut Vec<usize>) -> bool {
    if chosen.len() == k {
        return true;
    }
    let need = k - chosen.len();
    if cand.iter().map(|w| w.count_ones() as usize).sum::<usize>() < need {
        return false;
    }
    for w in (0..cand.len()).rev() {
        let mut bits = cand[w];
        while bits != 0 {
            let b = 63 - bits.leading_zeros() as usize;
            bits &= !(1 << b);
            let v = w * 64 + b;
            // Restrict to lower indices so each clique is visited once.
            let next: Vec<u64> = cand
                .iter()
                .zip(g.row(v))
                .enumerate()
                .map(|(i, (&c, &r))| {
                    let below = match i.cmp(&w) {
                        std::cmp::Ordering::Less => u64::MAX,
                        std::cmp::Ordering::Equal => (1u64 << b) - 1,
                        std::cmp::Ordering::Greater => 0,
                    };
                    c & r & below
                })
                .collect();
            chosen.push(v);
            if grow(g, k, &next, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}
