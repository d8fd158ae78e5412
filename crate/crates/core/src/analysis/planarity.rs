//! Planarity by exhaustive search for a Kuratowski subdivision.
//!
//! A graph is non-planar iff it contains a subdivision of `K3,3` or `K5`.
//! Branch vertices are chosen in descending-degree order (ties by ascending
//! label), then the required connections are realised as internally disjoint
//! paths by backtracking, shortest paths first. `K3,3` is searched before
//! `K5`. When no witness exists the graph is planar.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::IdealGraph;

/// Largest order accepted by [`is_planar`].
pub const PLANARITY_ORDER_LIMIT: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum KuratowskiKind {
    K5,
    K33,
}

/// A Kuratowski subdivision inside a host graph, in vertex labels.
///
/// For `K33`, `parts` holds the two sides (each ascending); for `K5` it holds
/// a single part of five branch vertices. `paths[k]` runs between the `k`-th
/// required pair of branch vertices, endpoints included.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KuratowskiCertificate {
    pub kind: KuratowskiKind,
    pub parts: Vec<Vec<u32>>,
    pub paths: Vec<Vec<u32>>,
}

impl KuratowskiCertificate {
    /// Pairs of branch vertices that must be joined, in path order.
    pub fn required_pairs(&self) -> Vec<(u32, u32)> {
        match self.kind {
            KuratowskiKind::K33 => {
                let (a, b) = (&self.parts[0], &self.parts[1]);
                a.iter()
                    .flat_map(|&u| b.iter().map(move |&v| (u, v)))
                    .collect()
            }
            KuratowskiKind::K5 => {
                let p = &self.parts[0];
                (0..p.len())
                    .flat_map(|i| (i + 1..p.len()).map(move |j| (p[i], p[j])))
                    .collect()
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlanarityVerdict {
    pub planar: bool,
    /// `edges > 3·order − 6` with `order ≥ 3`.
    pub euler_bound_exceeded: bool,
    pub certificate: Option<KuratowskiCertificate>,
}

pub fn is_planar(g: &IdealGraph) -> Result<PlanarityVerdict> {
    let n = g.order();
    if n > PLANARITY_ORDER_LIMIT {
        return Err(Error::OrderTooLarge {
            order: n,
            limit: PLANARITY_ORDER_LIMIT,
        });
    }
    let euler_bound_exceeded = n >= 3 && g.edge_count() > 3 * n - 6;
    let certificate = Search::new(g).find();
    Ok(PlanarityVerdict {
        planar: certificate.is_none() && !euler_bound_exceeded,
        euler_bound_exceeded,
        certificate,
    })
}

/// Checks a certificate against the host graph without reusing the search:
/// branch vertices distinct and present, every path joins its required pair
/// along existing edges, and path interiors are disjoint from each other and
/// from the branch set.
pub fn validate_certificate(g: &IdealGraph, cert: &KuratowskiCertificate) -> bool {
    let expected_shape = match cert.kind {
        KuratowskiKind::K33 => cert.parts.len() == 2 && cert.parts.iter().all(|p| p.len() == 3),
        KuratowskiKind::K5 => cert.parts.len() == 1 && cert.parts[0].len() == 5,
    };
    if !expected_shape {
        return false;
    }
    let mut branch: Vec<u32> = cert.parts.concat();
    branch.sort_unstable();
    if branch.windows(2).any(|w| w[0] == w[1]) || branch.iter().any(|&v| g.index_of(v).is_none()) {
        return false;
    }
    let pairs = cert.required_pairs();
    if pairs.len() != cert.paths.len() {
        return false;
    }
    let mut interior: Vec<u32> = Vec::new();
    for (&(u, v), path) in pairs.iter().zip(&cert.paths) {
        if path.len() < 2 {
            return false;
        }
        let ends = (path[0], path[path.len() - 1]);
        if ends != (u, v) && ends != (v, u) {
            return false;
        }
        for step in path.windows(2) {
            match (g.index_of(step[0]), g.index_of(step[1])) {
                (Some(i), Some(j)) if g.has_edge(i, j) => {}
                _ => return false,
            }
        }
        interior.extend_from_slice(&path[1..path.len() - 1]);
    }
    interior.sort_unstable();
    let disjoint = interior.windows(2).all(|w| w[0] != w[1]);
    disjoint && interior.iter().all(|v| branch.binary_search(v).is_err())
}

struct Search<'a> {
    g: &'a IdealGraph,
    n: usize,
    // Vertex indices by descending degree, ties by ascending label.
    ranked: Vec<usize>,
    used: Vec<bool>,
}

impl<'a> Search<'a> {
    fn new(g: &'a IdealGraph) -> Self {
        let n = g.order();
        let mut ranked: Vec<usize> = (0..n).collect();
        ranked.sort_by_key(|&i| (std::cmp::Reverse(g.degree(i)), i));
        Self {
            g,
            n,
            ranked,
            used: vec![false; n],
        }
    }

    fn find(&mut self) -> Option<KuratowskiCertificate> {
        self.find_k33().or_else(|| self.find_k5())
    }

    fn candidates(&self, min_degree: usize) -> Vec<usize> {
        self.ranked
            .iter()
            .copied()
            .filter(|&v| self.g.degree(v) >= min_degree)
            .collect()
    }

    fn find_k33(&mut self) -> Option<KuratowskiCertificate> {
        let cands = self.candidates(3);
        for six in combinations(&cands, 6) {
            // The first chosen vertex always sits on side A.
            for rest in combinations(&six[1..], 2) {
                let side_a = [six[0], rest[0], rest[1]];
                let side_b: Vec<usize> = six[1..]
                    .iter()
                    .copied()
                    .filter(|v| !rest.contains(v))
                    .collect();
                let pairs: Vec<(usize, usize)> = side_a
                    .iter()
                    .flat_map(|&u| side_b.iter().map(move |&v| (u, v)))
                    .collect();
                if let Some(paths) = self.connect(&six, &pairs) {
                    let mut a: Vec<u32> = side_a.iter().map(|&v| self.g.label(v)).collect();
                    let mut b: Vec<u32> = side_b.iter().map(|&v| self.g.label(v)).collect();
                    a.sort_unstable();
                    b.sort_unstable();
                    let (a, b) = if a[0] < b[0] { (a, b) } else { (b, a) };
                    return Some(self.certificate(KuratowskiKind::K33, vec![a, b], &pairs, paths));
                }
            }
        }
        None
    }

    fn find_k5(&mut self) -> Option<KuratowskiCertificate> {
        let cands = self.candidates(4);
        for five in combinations(&cands, 5) {
            let pairs: Vec<(usize, usize)> = (0..5)
                .flat_map(|i| (i + 1..5).map(move |j| (i, j)))
                .map(|(i, j)| (five[i], five[j]))
                .collect();
            if let Some(paths) = self.connect(&five, &pairs) {
                let mut part: Vec<u32> = five.iter().map(|&v| self.g.label(v)).collect();
                part.sort_unstable();
                return Some(self.certificate(KuratowskiKind::K5, vec![part], &pairs, paths));
            }
        }
        None
    }

    /// Orders paths to match `cert.required_pairs()` and converts to labels.
    fn certificate(
        &self,
        kind: KuratowskiKind,
        parts: Vec<Vec<u32>>,
        pairs: &[(usize, usize)],
        paths: Vec<Vec<usize>>,
    ) -> KuratowskiCertificate {
        let mut cert = KuratowskiCertificate {
            kind,
            parts,
            paths: Vec::new(),
        };
        for (u, v) in cert.required_pairs() {
            let k = pairs
                .iter()
                .position(|&(a, b)| {
                    let (a, b) = (self.g.label(a), self.g.label(b));
                    (a, b) == (u, v) || (a, b) == (v, u)
                })
                .expect("pair present");
            let mut path: Vec<u32> = paths[k].iter().map(|&i| self.g.label(i)).collect();
            if path[0] != u {
                path.reverse();
            }
            cert.paths.push(path);
        }
        cert
    }

    /// Finds internally disjoint paths for every pair, avoiding all branch
    /// vertices except the pair's own endpoints.
    fn connect(&mut self, branch: &[usize], pairs: &[(usize, usize)]) -> Option<Vec<Vec<usize>>> {
        // A direct edge never hurts: it frees every interior vertex a longer
        // path would have consumed.
        let (direct, indirect): (Vec<_>, Vec<_>) =
            (0..pairs.len()).partition(|&k| self.g.has_edge(pairs[k].0, pairs[k].1));
        self.used.iter_mut().for_each(|u| *u = false);
        for &v in branch {
            self.used[v] = true;
        }
        let mut paths: Vec<Option<Vec<usize>>> = vec![None; pairs.len()];
        for &k in &direct {
            paths[k] = Some(vec![pairs[k].0, pairs[k].1]);
        }
        let todo: Vec<(usize, usize, usize)> = indirect
            .iter()
            .map(|&k| (k, pairs[k].0, pairs[k].1))
            .collect();
        if self.route(&todo, &mut paths) {
            Some(paths.into_iter().map(|p| p.expect("routed")).collect())
        } else {
            None
        }
    }

    fn route(&mut self, todo: &[(usize, usize, usize)], paths: &mut [Option<Vec<usize>>]) -> bool {
        let Some((&(k, s, t), rest)) = todo.split_first() else {
            return true;
        };
        if !rest.iter().all(|&(_, a, b)| self.reachable(a, b)) || !self.reachable(s, t) {
            return false;
        }
        let free = self.used.iter().filter(|&&u| !u).count();
        let mut path = vec![s];
        for len in 2..=free + 1 {
            if self.paths_of_length(t, len, &mut path, rest, paths, k) {
                return true;
            }
        }
        false
    }

    /// Extends `path` to simple paths ending at `t` with exactly `len` edges through free
    /// vertices; for each, recurses on the remaining pairs.
    fn paths_of_length(
        &mut self,
        t: usize,
        len: usize,
        path: &mut Vec<usize>,
        rest: &[(usize, usize, usize)],
        paths: &mut [Option<Vec<usize>>],
        k: usize,
    ) -> bool {
        let here = *path.last().expect("non-empty");
        if path.len() == len {
            if !self.g.has_edge(here, t) {
                return false;
            }
            let mut done = path.clone();
            done.push(t);
            paths[k] = Some(done);
            if self.route(rest, paths) {
                return true;
            }
            paths[k] = None;
            return false;
        }
        for v in 0..self.n {
            if self.used[v] || !self.g.has_edge(here, v) {
                continue;
            }
            self.used[v] = true;
            path.push(v);
            let found = self.paths_of_length(t, len, path, rest, paths, k);
            path.pop();
            self.used[v] = false;
            if found {
                return true;
            }
        }
        false
    }

    /// Whether `s` reaches `t` through free vertices only.
    fn reachable(&self, s: usize, t: usize) -> bool {
        if self.g.has_edge(s, t) {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(v) = stack.pop() {
            for w in self.g.neighbors(v) {
                if w == t {
                    return true;
                }
                if !seen[w] && !self.used[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        false
    }
}

/// `k`-element combinations of `items`, preserving their order.
fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn rec(
        items: &[usize],
        k: usize,
        start: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(items, k, 0, &mut Vec::with_capacity(k), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::fixtures::*;
    use crate::ideal::build_graph;
    use crate::semigroup::NumericalSemigroup;

    fn nonplanar_with_valid_certificate(g: &IdealGraph) -> KuratowskiCertificate {
        let v = is_planar(g).unwrap();
        assert!(!v.planar);
        let cert = v.certificate.expect("certificate");
        assert!(validate_certificate(g, &cert), "{cert:?}");
        cert
    }

    #[test]
    fn fixtures() {
        assert!(is_planar(&complete(4)).unwrap().planar);
        assert!(is_planar(&cycle(8)).unwrap().planar);

        let c = nonplanar_with_valid_certificate(&complete(5));
        assert_eq!(c.kind, KuratowskiKind::K5);
        let c = nonplanar_with_valid_certificate(&k33());
        assert_eq!(c.kind, KuratowskiKind::K33);
        assert_eq!(c.parts, vec![vec![1, 2, 3], vec![4, 5, 6]]);
        let c = nonplanar_with_valid_certificate(&petersen());
        assert_eq!(c.kind, KuratowskiKind::K33);
        assert!(c.paths.iter().any(|p| p.len() > 2));
    }

    #[test]
    fn euler_flag() {
        let v = is_planar(&complete(6)).unwrap();
        assert!(v.euler_bound_exceeded && !v.planar);
        assert!(!is_planar(&complete(4)).unwrap().euler_bound_exceeded);
    }

    #[test]
    fn semigroup_k33_instance() {
        let s = NumericalSemigroup::new(&[3, 4]).unwrap();
        let g = build_graph(&s, 12).unwrap();
        let c = nonplanar_with_valid_certificate(&g);
        assert_eq!(c.kind, KuratowskiKind::K33);
        assert_eq!(c.parts, vec![vec![3, 6, 9], vec![4, 8, 12]]);
        assert!(c.paths.iter().all(|p| p.len() == 2));
    }

    #[test]
    fn subdivided_k5_needs_paths() {
        // K5 on 1..=5 with every edge subdivided once.
        let mut edges = Vec::new();
        let mut next = 6;
        for i in 1..=5u32 {
            for j in i + 1..=5 {
                edges.push((i, next));
                edges.push((next, j));
                next += 1;
            }
        }
        let g = IdealGraph::from_edges((1..next).collect(), &edges);
        let c = nonplanar_with_valid_certificate(&g);
        assert_eq!(c.kind, KuratowskiKind::K5);
        assert!(c.paths.iter().all(|p| p.len() == 3));
    }

    #[test]
    fn validator_rejects_tampering() {
        let g = k33();
        let mut c = is_planar(&g).unwrap().certificate.unwrap();
        c.paths[0] = vec![1, 2];
        assert!(!validate_certificate(&g, &c));
        let mut c = is_planar(&petersen()).unwrap().certificate.unwrap();
        c.parts.swap(0, 1);
        c.parts[0].push(99);
        assert!(!validate_certificate(&petersen(), &c));
    }

    #[test]
    fn order_limit() {
        let g = cycle(17);
        assert_eq!(
            is_planar(&g),
            Err(Error::OrderTooLarge {
                order: 17,
                limit: 16
            })
        );
    }
}
