use crate::error::{Error, Result};
use crate::graph::IdealGraph;

/// Largest order accepted by [`isomorphic`].
pub const ISOMORPHISM_ORDER_LIMIT: usize = 10;

pub fn isomorphic(g: &IdealGraph, h: &IdealGraph) -> Result<bool> {
    Ok(find_isomorphism(g, h)?.is_some())
}

/// An adjacency-preserving bijection `map[i_g] = i_h`, if one exists.
///
/// Vertices of `g` are assigned in ascending label order, each to the
/// lowest-labelled unused vertex of `h` with the same degree that is
/// consistent with all earlier assignments.
pub fn find_isomorphism(g: &IdealGraph, h: &IdealGraph) -> Result<Option<Vec<usize>>> {
    for x in [g, h] {
        if x.order() > ISOMORPHISM_ORDER_LIMIT {
            return Err(Error::OrderTooLarge {
                order: x.order(),
                limit: ISOMORPHISM_ORDER_LIMIT,
            });
        }
    }
    if g.order() != h.order()
        || g.edge_count() != h.edge_count()
        || g.degree_sequence() != h.degree_sequence()
    {
        return Ok(None);
    }
    let n = g.order();
    let dg: Vec<usize> = (0..n).map(|i| g.degree(i)).collect();
    let dh: Vec<usize> = (0..n).map(|i| h.degree(i)).collect();
    let mut map = vec![usize::MAX; n];
    let mut taken = vec![false; n];
    Ok(extend(g, h, &dg, &dh, 0, &mut map, &mut taken).then_some(map))
}

fn extend(
    g: &IdealGraph,
    h: &IdealGraph,
    dg: &[usize],
    dh: &[usize],
    i: usize,
    map: &mut [usize],
    taken: &mut [bool],
) -> bool {
    if i == map.len() {
        return true;
    }
    for c in 0..map.len() {
        if taken[c] || dh[c] != dg[i] {
            continue;
        }
        if (0..i).any(|j| g.has_edge(i, j) != h.has_edge(c, map[j])) {
            continue;
        }
        map[i] = c;
        taken[c] = true;
        if extend(g, h, dg, dh, i + 1, map, taken) {
            return true;
        }
        taken[c] = false;
    }
    map[i] = usize::MAX;
    false
}
