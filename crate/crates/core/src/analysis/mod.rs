//! Graph-theoretic oracles that know nothing about semigroups: connectivity,
//! clique number, Kuratowski-certificate planarity and isomorphism.

pub mod clique;
pub mod isomorphism;
pub mod planarity;

pub use clique::{clique_formula, clique_number, find_clique, CLIQUE_ORDER_LIMIT};
pub use isomorphism::{find_isomorphism, isomorphic, ISOMORPHISM_ORDER_LIMIT};
pub use planarity::{
    is_planar, validate_certificate, KuratowskiCertificate, KuratowskiKind, PlanarityVerdict,
    PLANARITY_ORDER_LIMIT,
};

use crate::graph::IdealGraph;

/// Breadth-first reachability from vertex 0. The empty graph is connected.
pub fn is_connected(g: &IdealGraph) -> bool {
    let n = g.order();
    if n == 0 {
        return true;
    }
    let words = g.words_per_row();
    let mut seen = vec![0u64; words];
    seen[0] = 1;
    let mut queue = vec![0usize];
    let mut reached = 1;
    while let Some(v) = queue.pop() {
        for (w, &bits) in g.row(v).iter().enumerate() {
            let mut fresh = bits & !seen[w];
            seen[w] |= fresh;
            while fresh != 0 {
                let b = fresh.trailing_zeros() as usize;
                fresh &= fresh - 1;
                queue.push(w * 64 + b);
                reached += 1;
            }
        }
    }
    reached == n
}

#[cfg(test)]
pub(crate) mod fixtures {
    use crate::graph::IdealGraph;

    pub fn complete(n: u32) -> IdealGraph {
        IdealGraph::from_predicate((1..=n).collect(), |_, _| true)
    }

    pub fn k33() -> IdealGraph {
        IdealGraph::from_predicate((1..=6).collect(), |a, b| (a <= 3) != (b <= 3))
    }

    pub fn cycle(n: u32) -> IdealGraph {
        let edges: Vec<(u32, u32)> = (1..=n).map(|i| (i, i % n + 1)).collect();
        IdealGraph::from_edges((1..=n).collect(), &edges)
    }

    pub fn petersen() -> IdealGraph {
        let mut edges = Vec::new();
        for i in 0..5u32 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        IdealGraph::from_edges((0..10).collect(), &edges)
    }
}
