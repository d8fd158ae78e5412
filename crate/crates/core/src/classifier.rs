//! Order 6 and order 7 classification.
//!
//! Factorization profiles decide which orders are impossible, the factorization
//! list is matched against the admissible shapes of `x`, the degree sequence
//! picks one of six table types per order, and the type decides planarity.
//! The graph oracles in [`crate::analysis`] then cross-check the verdict.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::analysis::{self, PlanarityVerdict};
use crate::error::{Error, Result};
use crate::graph::IdealGraph;
use crate::ideal::{
    build_graph_general, divisors, graph_on_divisors, is_irreducible, GeneratedIdeal,
};
use crate::semigroup::{Factorization, FactorizationProfile, NumericalSemigroup};

/// Degree sequences of the six order-6 types, by type index `1..=6`.
pub const ORDER_6_TYPES: [[usize; 6]; 6] = [
    [1, 2, 3, 3, 4, 5],
    [2, 3, 3, 4, 5, 5],
    [2, 3, 4, 4, 4, 5],
    [3, 3, 4, 4, 5, 5],
    [3, 4, 4, 4, 4, 5],
    [4, 4, 4, 4, 5, 5],
];

/// Degree sequences of the six order-7 types, by type index `1..=6`.
pub const ORDER_7_TYPES: [[usize; 7]; 6] = [
    [1, 2, 3, 3, 4, 5, 6],
    [2, 3, 3, 4, 5, 5, 6],
    [3, 3, 3, 5, 5, 5, 6],
    [3, 4, 4, 5, 5, 5, 6],
    [4, 4, 5, 5, 5, 5, 6],
    [5, 5, 5, 5, 5, 5, 6],
];

/// A frozen type representative and the instance it was taken from.
pub struct Representative {
    pub order: usize,
    pub type_index: usize,
    pub generators: &'static [u32],
    pub x: u32,
    pub edges: &'static [(u32, u32)],
}

impl Representative {
    pub fn graph(&self) -> IdealGraph {
        let mut labels: Vec<u32> = self.edges.iter().flat_map(|&(a, b)| [a, b]).collect();
        labels.sort_unstable();
        labels.dedup();
        IdealGraph::from_edges(labels, self.edges)
    }
}

// Order 6 type 1 is pinned to <2,15>, x = 12; the others are the first
// instance of each type met by a lexicographic sweep.
pub const REPRESENTATIVES: [Representative; 12] = [
    Representative {
        order: 6,
        type_index: 1,
        generators: &[2, 15],
        x: 12,
        edges: &[
            (2, 12),
            (4, 10),
            (4, 12),
            (6, 8),
            (6, 10),
            (6, 12),
            (8, 10),
            (8, 12),
            (10, 12),
        ],
    },
    Representative {
        order: 6,
        type_index: 2,
        generators: &[2, 5],
        x: 10,
        edges: &[
            (2, 5),
            (2, 10),
            (4, 5),
            (4, 8),
            (4, 10),
            (5, 6),
            (5, 8),
            (5, 10),
            (6, 8),
            (6, 10),
            (8, 10),
        ],
    },
    Representative {
        order: 6,
        type_index: 3,
        generators: &[2, 3],
        x: 8,
        edges: &[
            (2, 5),
            (2, 8),
            (3, 4),
            (3, 6),
            (3, 8),
            (4, 5),
            (4, 6),
            (4, 8),
            (5, 6),
            (5, 8),
            (6, 8),
        ],
    },
    Representative {
        order: 6,
        type_index: 4,
        generators: &[3, 4, 5],
        x: 10,
        edges: &[
            (3, 5),
            (3, 6),
            (3, 10),
            (4, 5),
            (4, 7),
            (4, 10),
            (5, 6),
            (5, 7),
            (5, 10),
            (6, 7),
            (6, 10),
            (7, 10),
        ],
    },
    Representative {
        order: 6,
        type_index: 5,
        generators: &[3, 4],
        x: 12,
        edges: &[
            (3, 4),
            (3, 8),
            (3, 12),
            (4, 6),
            (4, 9),
            (4, 12),
            (6, 8),
            (6, 9),
            (6, 12),
            (8, 9),
            (8, 12),
            (9, 12),
        ],
    },
    Representative {
        order: 6,
        type_index: 6,
        generators: &[4, 5, 6, 7],
        x: 12,
        edges: &[
            (4, 5),
            (4, 6),
            (4, 7),
            (4, 12),
            (5, 6),
            (5, 8),
            (5, 12),
            (6, 7),
            (6, 8),
            (6, 12),
            (7, 8),
            (7, 12),
            (8, 12),
        ],
    },
    Representative {
        order: 7,
        type_index: 1,
        generators: &[2, 9],
        x: 14,
        edges: &[
            (2, 14),
            (4, 12),
            (4, 14),
            (6, 10),
            (6, 12),
            (6, 14),
            (8, 10),
            (8, 12),
            (8, 14),
            (10, 12),
            (10, 14),
            (12, 14),
        ],
    },
    Representative {
        order: 7,
        type_index: 2,
        generators: &[2, 3],
        x: 9,
        edges: &[
            (2, 6),
            (2, 9),
            (3, 5),
            (3, 7),
            (3, 9),
            (4, 6),
            (4, 7),
            (4, 9),
            (5, 6),
            (5, 7),
            (5, 9),
            (6, 7),
            (6, 9),
            (7, 9),
        ],
    },
    Representative {
        order: 7,
        type_index: 3,
        generators: &[4, 5, 6],
        x: 15,
        edges: &[
            (4, 9),
            (4, 10),
            (4, 15),
            (5, 9),
            (5, 11),
            (5, 15),
            (6, 10),
            (6, 11),
            (6, 15),
            (9, 10),
            (9, 11),
            (9, 15),
            (10, 11),
            (10, 15),
            (11, 15),
        ],
    },
    Representative {
        order: 7,
        type_index: 4,
        generators: &[3, 4, 5],
        x: 11,
        edges: &[
            (3, 6),
            (3, 7),
            (3, 11),
            (4, 5),
            (4, 6),
            (4, 8),
            (4, 11),
            (5, 7),
            (5, 8),
            (5, 11),
            (6, 7),
            (6, 8),
            (6, 11),
            (7, 8),
            (7, 11),
            (8, 11),
        ],
    },
    Representative {
        order: 7,
        type_index: 5,
        generators: &[4, 5, 6, 7],
        x: 13,
        edges: &[
            (4, 6),
            (4, 7),
            (4, 8),
            (4, 13),
            (5, 6),
            (5, 7),
            (5, 9),
            (5, 13),
            (6, 8),
            (6, 9),
            (6, 13),
            (7, 8),
            (7, 9),
            (7, 13),
            (8, 9),
            (8, 13),
            (9, 13),
        ],
    },
    Representative {
        order: 7,
        type_index: 6,
        generators: &[5, 6, 7, 8, 9],
        x: 15,
        edges: &[
            (5, 6),
            (5, 7),
            (5, 8),
            (5, 9),
            (5, 15),
            (6, 7),
            (6, 8),
            (6, 10),
            (6, 15),
            (7, 9),
            (7, 10),
            (7, 15),
            (8, 9),
            (8, 10),
            (8, 15),
            (9, 10),
            (9, 15),
            (10, 15),
        ],
    },
];

pub fn representative(order: usize, type_index: usize) -> Option<&'static Representative> {
    REPRESENTATIVES
        .iter()
        .find(|r| r.order == order && r.type_index == type_index)
}

/// A clause of the order-exclusion propositions: `Prop1(k)` rules out order 6,
/// `Prop2(k)` rules out order 7.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExclusionRule {
    Prop1(u8),
    Prop2(u8),
}

impl fmt::Display for ExclusionRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExclusionRule::Prop1(k) => write!(f, "P1.{k}"),
            ExclusionRule::Prop2(k) => write!(f, "P2.{k}"),
        }
    }
}

impl Serialize for ExclusionRule {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn any_support_at_least(p: &FactorizationProfile, min: usize) -> bool {
    p.max_support() >= min
}

/// Clauses that forbid order 6.
pub fn prop1_exclusions(p: &FactorizationProfile) -> Vec<ExclusionRule> {
    let (c1, c2) = (p.count(1), p.count(2));
    let clauses = [
        any_support_at_least(p, 3),
        c1 >= 3,
        c2 > 0 && c1 == 0,
        c1 >= 2 && c2 >= 2,
    ];
    fired(&clauses, ExclusionRule::Prop1)
}

/// Clauses that forbid order 7.
pub fn prop2_exclusions(p: &FactorizationProfile) -> Vec<ExclusionRule> {
    let (c1, c2, c3) = (p.count(1), p.count(2), p.count(3));
    let clauses = [
        any_support_at_least(p, 4),
        c3 >= 2,
        c3 == 1 && (c1 > 0 || c2 > 0),
        c2 >= 4,
        c2 == 3 && c1 > 0,
        c2 == 2 && c1 >= 2,
        c2 == 1 && c1 >= 2,
        c1 >= 3,
    ];
    fired(&clauses, ExclusionRule::Prop2)
}

fn fired(clauses: &[bool], rule: fn(u8) -> ExclusionRule) -> Vec<ExclusionRule> {
    clauses
        .iter()
        .enumerate()
        .filter(|(_, &c)| c)
        .map(|(k, _)| rule(k as u8 + 1))
        .collect()
}

/// A matched admissible shape of `x`. Every witness factorization evaluates
/// to `x`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremCase {
    /// 1 for the order-6 list, 2 for the order-7 list.
    pub theorem: u8,
    pub order_target: usize,
    pub case_index: usize,
    pub witness: Vec<Factorization>,
}

/// Factorizations bucketed by shape.
struct Shapes<'a> {
    // (generator index, coefficient)
    singles: Vec<(usize, u32, &'a Factorization)>,
    // sorted coefficient pair
    pairs: Vec<((u32, u32), &'a Factorization)>,
    unit_triples: Vec<&'a Factorization>,
}

impl<'a> Shapes<'a> {
    fn new(fs: &'a [Factorization]) -> Self {
        let mut singles = Vec::new();
        let mut pairs = Vec::new();
        let mut unit_triples = Vec::new();
        for f in fs {
            let sup: Vec<(usize, u32)> = f.support().collect();
            match sup.as_slice() {
                [(i, u)] => singles.push((*i, *u, f)),
                [(_, u), (_, v)] => pairs.push(((*u.min(v), *u.max(v)), f)),
                [(_, 1), (_, 1), (_, 1)] => unit_triples.push(f),
                _ => {}
            }
        }
        Self {
            singles,
            pairs,
            unit_triples,
        }
    }

    fn single(&self, coeff: u32) -> Option<&'a Factorization> {
        self.singles.iter().find(|s| s.1 == coeff).map(|s| s.2)
    }

    fn pairs_with(&self, coeffs: (u32, u32), k: usize) -> Option<Vec<&'a Factorization>> {
        let found: Vec<_> = self
            .pairs
            .iter()
            .filter(|p| p.0 == coeffs)
            .map(|p| p.1)
            .take(k)
            .collect();
        (found.len() == k).then_some(found)
    }
}

fn gather(parts: &[Option<Vec<&Factorization>>]) -> Option<Vec<Factorization>> {
    let mut out = Vec::new();
    for p in parts {
        out.extend(p.as_ref()?.iter().map(|&f| f.clone()));
    }
    Some(out)
}

fn one(f: Option<&Factorization>) -> Option<Vec<&Factorization>> {
    f.map(|f| vec![f])
}

/// Witnesses for every case of the order-6 list, indexed `1..=8`.
fn order6_cases(gens: &[u32], fs: &[Factorization]) -> Vec<(usize, Option<Vec<Factorization>>)> {
    let sh = Shapes::new(fs);
    // x = 4a_i and 3a_i = 2a_k, witnessed by x = a_i + 2a_k.
    let case5 = sh
        .singles
        .iter()
        .filter(|s| s.1 == 4)
        .find_map(|&(i, _, f)| {
            let k = (0..gens.len()).find(|&k| k != i && 3 * gens[i] == 2 * gens[k])?;
            let mut c = vec![0; gens.len()];
            c[i] = 1;
            c[k] = 2;
            Some(vec![f.clone(), Factorization::new(gens, c)])
        });
    vec![
        (1, gather(&[one(sh.single(6))])),
        (2, gather(&[one(sh.single(4)), one(sh.single(3))])),
        (3, gather(&[one(sh.single(5)), one(sh.single(2))])),
        (4, gather(&[one(sh.single(4)), sh.pairs_with((1, 1), 1)])),
        (5, case5),
        (6, gather(&[one(sh.single(2)), sh.pairs_with((1, 2), 1)])),
        (
            7,
            gather(&[
                one(sh.single(3)),
                one(sh.single(2)),
                sh.pairs_with((1, 1), 1),
            ]),
        ),
        (8, gather(&[one(sh.single(2)), sh.pairs_with((1, 1), 2)])),
    ]
}

/// Witnesses for every case of the order-7 list, indexed `1..=9`.
fn order7_cases(fs: &[Factorization]) -> Vec<(usize, Option<Vec<Factorization>>)> {
    let sh = Shapes::new(fs);
    vec![
        (1, gather(&[one(sh.single(7))])),
        (2, gather(&[one(sh.single(5)), one(sh.single(3))])),
        (3, gather(&[sh.pairs_with((1, 3), 1)])),
        (4, gather(&[one(sh.single(5)), sh.pairs_with((1, 1), 1)])),
        (5, gather(&[one(sh.single(3)), sh.pairs_with((1, 2), 1)])),
        (
            6,
            gather(&[sh.pairs_with((1, 1), 1), sh.pairs_with((1, 2), 1)]),
        ),
        (7, gather(&[one(sh.single(3)), sh.pairs_with((1, 1), 2)])),
        (8, gather(&[sh.pairs_with((1, 1), 3)])),
        (9, gather(&[sh.unit_triples.first().map(|&f| vec![f])])),
    ]
}

/// Every case of the list for `order` that the factorizations of `x` match,
/// in listed order.
pub fn matching_cases(
    s: &NumericalSemigroup,
    profile: &FactorizationProfile,
    order: usize,
) -> Result<Vec<TheoremCase>> {
    let (theorem, cases) = match order {
        6 => (1, order6_cases(s.generators(), profile.factorizations())),
        7 => (2, order7_cases(profile.factorizations())),
        other => return Err(Error::OrderMismatch(other)),
    };
    Ok(cases
        .into_iter()
        .filter_map(|(case_index, w)| {
            w.map(|witness| TheoremCase {
                theorem,
                order_target: order,
                case_index,
                witness,
            })
        })
        .collect())
}

/// First matching case of the order-6 or order-7 list. `None` means no listed
/// shape fits, which contradicts the classification.
pub fn theorem_case(
    s: &NumericalSemigroup,
    x: u32,
    profile: &FactorizationProfile,
    order: usize,
) -> Result<Option<TheoremCase>> {
    if order != 6 && order != 7 {
        return Err(Error::OrderMismatch(order));
    }
    if divisors(s, x)?.nonzero_elements().len() != order || profile.x() != x {
        return Err(Error::OrderMismatch(order));
    }
    Ok(matching_cases(s, profile, order)?.into_iter().next())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableType {
    pub order: usize,
    pub type_index: usize,
    pub degree_sequence: Vec<usize>,
    /// Whether the graph is isomorphic to the frozen representative of its
    /// type. `false` means the degree sequence alone does not pin the
    /// isomorphism class.
    pub matches_representative: bool,
}

/// Looks up the degree sequence in the order-6 or order-7 table and compares
/// against the frozen representative. `None` when no row matches.
pub fn table_type(g: &IdealGraph) -> Result<Option<TableType>> {
    let ds = g.degree_sequence();
    let index = match g.order() {
        6 => ORDER_6_TYPES.iter().position(|row| row[..] == ds[..]),
        7 => ORDER_7_TYPES.iter().position(|row| row[..] == ds[..]),
        other => return Err(Error::OrderMismatch(other)),
    };
    let Some(index) = index else {
        return Ok(None);
    };
    let type_index = index + 1;
    let rep = representative(g.order(), type_index).expect("every type has a representative");
    let matches_representative = analysis::isomorphic(g, &rep.graph())?;
    Ok(Some(TableType {
        order: g.order(),
        type_index,
        degree_sequence: ds,
        matches_representative,
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoremPlanarity {
    Planar,
    NonPlanar,
    OutOfRange,
}

impl TheoremPlanarity {
    pub fn as_bool(self) -> Option<bool> {
        match self {
            TheoremPlanarity::Planar => Some(true),
            TheoremPlanarity::NonPlanar => Some(false),
            TheoremPlanarity::OutOfRange => None,
        }
    }
}

/// Planar for order ≤ 5, order-6 types 1–4 and order-7 types 1–3;
/// non-planar for order ≥ 8, order-6 types 5–6 and order-7 types 4–6.
pub fn planarity_by_theorem(order: usize, t: Option<&TableType>) -> Result<TheoremPlanarity> {
    use TheoremPlanarity::*;
    Ok(match order {
        0..=5 => Planar,
        6 | 7 => {
            let t = t.ok_or(Error::MissingType(order))?;
            let planar_types = if order == 6 { 4 } else { 3 };
            if t.type_index <= planar_types {
                Planar
            } else {
                NonPlanar
            }
        }
        _ => NonPlanar,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub semigroup: NumericalSemigroup,
    pub x: u32,
    pub order: usize,
    pub degree_sequence: Vec<usize>,
    pub theorem_case: Option<TheoremCase>,
    /// Indices of every matching case, for diagnostics.
    pub all_cases: Vec<usize>,
    pub table_type: Option<TableType>,
    pub planarity_by_theorem: TheoremPlanarity,
    /// Full oracle up to its order bound; above it, a five-clique search
    /// (a clique is its own K5 certificate). `None` when neither applies.
    pub planarity_by_oracle: Option<PlanarityVerdict>,
    pub agreement: bool,
    pub exclusions: Vec<ExclusionRule>,
}

/// Oracle verdict for a graph of any order.
pub fn oracle_verdict(g: &IdealGraph) -> Option<PlanarityVerdict> {
    use analysis::{KuratowskiCertificate, KuratowskiKind};
    if g.order() <= analysis::PLANARITY_ORDER_LIMIT {
        return analysis::is_planar(g).ok();
    }
    let clique = analysis::find_clique(g, 5)?;
    let mut part: Vec<u32> = clique.iter().map(|&i| g.label(i)).collect();
    part.sort_unstable();
    let paths = (0..5)
        .flat_map(|i| (i + 1..5).map(move |j| (i, j)))
        .map(|(i, j)| vec![part[i], part[j]])
        .collect();
    Some(PlanarityVerdict {
        planar: false,
        euler_bound_exceeded: g.edge_count() > 3 * g.order() - 6,
        certificate: Some(KuratowskiCertificate {
            kind: KuratowskiKind::K5,
            parts: vec![part],
            paths,
        }),
    })
}

pub fn classify(s: &NumericalSemigroup, x: u32) -> Result<ClassificationReport> {
    let b = divisors(s, x)?;
    let g = graph_on_divisors(s, &b);
    classify_graph(s, x, &g)
}

/// Classification given the already-built graph of `Λ \ B(x)`.
pub(crate) fn classify_graph(
    s: &NumericalSemigroup,
    x: u32,
    g: &IdealGraph,
) -> Result<ClassificationReport> {
    let order = g.order();
    let profile = s.profile(x)?;
    let mut exclusions = prop1_exclusions(&profile);
    exclusions.extend(prop2_exclusions(&profile));

    let (theorem_case, all_cases, table_type) = if order == 6 || order == 7 {
        let cases = matching_cases(s, &profile, order)?;
        let all: Vec<usize> = cases.iter().map(|c| c.case_index).collect();
        (cases.into_iter().next(), all, table_type(g)?)
    } else {
        (None, Vec::new(), None)
    };

    let planarity_by_theorem = if s.embedding_dimension() < 2 {
        TheoremPlanarity::OutOfRange
    } else {
        match planarity_by_theorem(order, table_type.as_ref()) {
            Ok(p) => p,
            Err(Error::MissingType(_)) => TheoremPlanarity::OutOfRange,
            Err(e) => return Err(e),
        }
    };
    let planarity_by_oracle = oracle_verdict(g);
    let agreement = match (planarity_by_theorem.as_bool(), &planarity_by_oracle) {
        (Some(t), Some(v)) => t == v.planar,
        (Some(_), None) => false,
        // Nothing claimed, nothing to contradict.
        (None, _) => s.embedding_dimension() < 2,
    };

    Ok(ClassificationReport {
        semigroup: s.clone(),
        x,
        order,
        degree_sequence: g.degree_sequence(),
        theorem_case,
        all_cases,
        table_type,
        planarity_by_theorem,
        planarity_by_oracle,
        agreement,
        exclusions,
    })
}

/// Structure of an explicitly generated ideal: irreducible ideals are
/// classified through their `x`, others only get the oracle verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealReport {
    pub ideal: GeneratedIdeal,
    pub irreducible_at: Option<u32>,
    pub graph: IdealGraph,
    pub planarity_by_oracle: Option<PlanarityVerdict>,
    pub classification: Option<ClassificationReport>,
}

pub fn classify_ideal(s: &NumericalSemigroup, ideal: &GeneratedIdeal) -> Result<IdealReport> {
    let graph = build_graph_general(s, ideal);
    let irreducible_at = is_irreducible(s, ideal);
    let classification = irreducible_at.map(|x| classify(s, x)).transpose()?;
    Ok(IdealReport {
        ideal: ideal.clone(),
        irreducible_at,
        planarity_by_oracle: oracle_verdict(&graph),
        graph,
        classification,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::KuratowskiKind;
    use crate::ideal::{build_graph, make_ideal};

    fn sg(g: &[u32]) -> NumericalSemigroup {
        NumericalSemigroup::new(g).unwrap()
    }

    #[test]
    fn representatives_reproduce_their_instances() {
        for r in &REPRESENTATIVES {
            let g = build_graph(&sg(r.generators), r.x).unwrap();
            assert_eq!(g, r.graph(), "order {} type {}", r.order, r.type_index);
            let table: &[usize] = if r.order == 6 {
                &ORDER_6_TYPES[r.type_index - 1]
            } else {
                &ORDER_7_TYPES[r.type_index - 1]
            };
            assert_eq!(g.degree_sequence(), table);
        }
    }

    #[test]
    fn order6_exclusion_examples() {
        let p = |c: &[(usize, usize)]| prop1_exclusions(&FactorizationProfile::from_counts(0, c));
        assert_eq!(p(&[(1, 3)]), vec![ExclusionRule::Prop1(2)]);
        assert!(p(&[(1, 1), (2, 1)]).is_empty());
        assert_eq!(p(&[(3, 1)]), vec![ExclusionRule::Prop1(1)]);
        assert_eq!(p(&[(2, 1)]), vec![ExclusionRule::Prop1(3)]);
        assert_eq!(p(&[(1, 2), (2, 2)]), vec![ExclusionRule::Prop1(4)]);
    }

    #[test]
    fn order7_exclusion_examples() {
        let p = |c: &[(usize, usize)]| prop2_exclusions(&FactorizationProfile::from_counts(0, c));
        assert_eq!(p(&[(3, 1), (1, 1)]), vec![ExclusionRule::Prop2(3)]);
        assert!(p(&[(3, 1)]).is_empty());
        assert_eq!(p(&[(2, 4)]), vec![ExclusionRule::Prop2(4)]);
        assert_eq!(p(&[(4, 1)]), vec![ExclusionRule::Prop2(1)]);
        assert_eq!(p(&[(1, 3)]), vec![ExclusionRule::Prop2(8)]);
        assert_eq!(p(&[(1, 2), (2, 1)]), vec![ExclusionRule::Prop2(7)]);
        assert_eq!(ExclusionRule::Prop2(7).to_string(), "P2.7");
    }

    fn case_of(g: &[u32], x: u32) -> TheoremCase {
        let s = sg(g);
        let order = divisors(&s, x).unwrap().nonzero_elements().len();
        let c = theorem_case(&s, x, &s.profile(x).unwrap(), order)
            .unwrap()
            .unwrap();
        for w in &c.witness {
            assert_eq!(w.evaluate(s.generators()), x);
        }
        c
    }

    #[test]
    fn theorem_case_examples() {
        assert_eq!(
            (
                case_of(&[2, 15], 12).theorem,
                case_of(&[2, 15], 12).case_index
            ),
            (1, 1)
        );
        assert_eq!(case_of(&[3, 4], 12).case_index, 2);
        let c = case_of(&[2, 3], 8);
        assert_eq!(c.case_index, 5);
        assert_eq!(c.witness.len(), 2);
        assert_eq!(
            (
                case_of(&[2, 15], 14).theorem,
                case_of(&[2, 15], 14).case_index
            ),
            (2, 1)
        );
        assert_eq!(case_of(&[5, 6, 9, 13], 18).case_index, 7);
        assert_eq!(case_of(&[4, 5, 6], 15).case_index, 9);
        assert_eq!(case_of(&[5, 6, 7, 8, 9], 15).case_index, 7);
        assert_eq!(case_of(&[7, 8, 9, 10, 11, 12], 19).case_index, 8);
    }

    #[test]
    fn theorem_case_errors() {
        let s = sg(&[3, 4]);
        let p = s.profile(12).unwrap();
        assert_eq!(theorem_case(&s, 12, &p, 5), Err(Error::OrderMismatch(5)));
        assert_eq!(theorem_case(&s, 12, &p, 7), Err(Error::OrderMismatch(7)));
    }

    #[test]
    fn table_type_examples() {
        let t = |g: &[u32], x| {
            table_type(&build_graph(&sg(g), x).unwrap())
                .unwrap()
                .unwrap()
        };
        assert_eq!((t(&[2, 15], 12).order, t(&[2, 15], 12).type_index), (6, 1));
        assert_eq!(t(&[3, 4], 12).type_index, 5);
        assert_eq!(t(&[5, 6, 9, 13], 18).type_index, 6);
        assert!(t(&[5, 6, 9, 13], 18).matches_representative);
        assert_eq!(t(&[2, 15], 14).type_index, 1);
        let g = build_graph(&sg(&[3, 4]), 8).unwrap();
        assert_eq!(table_type(&g), Err(Error::OrderMismatch(g.order())));
    }

    #[test]
    fn theorem_planarity() {
        let ty = |order, type_index| TableType {
            order,
            type_index,
            degree_sequence: vec![],
            matches_representative: true,
        };
        assert_eq!(
            planarity_by_theorem(4, None).unwrap(),
            TheoremPlanarity::Planar
        );
        assert_eq!(
            planarity_by_theorem(6, Some(&ty(6, 5))).unwrap(),
            TheoremPlanarity::NonPlanar
        );
        assert_eq!(
            planarity_by_theorem(6, Some(&ty(6, 4))).unwrap(),
            TheoremPlanarity::Planar
        );
        assert_eq!(
            planarity_by_theorem(7, Some(&ty(7, 3))).unwrap(),
            TheoremPlanarity::Planar
        );
        assert_eq!(
            planarity_by_theorem(7, Some(&ty(7, 4))).unwrap(),
            TheoremPlanarity::NonPlanar
        );
        assert_eq!(
            planarity_by_theorem(9, None).unwrap(),
            TheoremPlanarity::NonPlanar
        );
        assert_eq!(planarity_by_theorem(6, None), Err(Error::MissingType(6)));
    }

    #[test]
    fn classify_examples() {
        let r = classify(&sg(&[3, 4]), 12).unwrap();
        assert_eq!(r.order, 6);
        assert_eq!(r.theorem_case.as_ref().unwrap().case_index, 2);
        assert_eq!(r.table_type.as_ref().unwrap().type_index, 5);
        assert_eq!(r.planarity_by_theorem, TheoremPlanarity::NonPlanar);
        let v = r.planarity_by_oracle.as_ref().unwrap();
        assert!(!v.planar && r.agreement);
        let cert = v.certificate.as_ref().unwrap();
        assert_eq!(cert.kind, KuratowskiKind::K33);
        assert_eq!(cert.parts, vec![vec![3, 6, 9], vec![4, 8, 12]]);

        let r = classify(&sg(&[2, 3]), 8).unwrap();
        assert_eq!((r.order, r.table_type.as_ref().unwrap().type_index), (6, 3));
        assert_eq!(r.theorem_case.as_ref().unwrap().case_index, 5);
        assert!(r.planarity_by_oracle.as_ref().unwrap().planar && r.agreement);

        let r = classify(&sg(&[2, 15]), 14).unwrap();
        assert_eq!((r.order, r.table_type.as_ref().unwrap().type_index), (7, 1));
        assert_eq!(r.theorem_case.as_ref().unwrap().case_index, 1);
        assert_eq!(r.planarity_by_theorem, TheoremPlanarity::Planar);
        assert!(r.agreement);

        assert_eq!(classify(&sg(&[3, 4]), 5), Err(Error::NotAMember(5)));
    }

    #[test]
    fn classify_large_order_uses_clique_oracle() {
        let r = classify(&sg(&[3, 5]), 60).unwrap();
        assert!(r.order > analysis::PLANARITY_ORDER_LIMIT);
        assert_eq!(r.planarity_by_theorem, TheoremPlanarity::NonPlanar);
        let v = r.planarity_by_oracle.as_ref().unwrap();
        let g = build_graph(&sg(&[3, 5]), 60).unwrap();
        assert!(analysis::validate_certificate(
            &g,
            v.certificate.as_ref().unwrap()
        ));
        assert!(r.agreement);
    }

    #[test]
    fn general_ideals() {
        let s = sg(&[2, 3]);
        let rep = classify_ideal(&s, &make_ideal(&s, &[7]).unwrap()).unwrap();
        assert_eq!(rep.irreducible_at, Some(8));
        assert_eq!(
            rep.classification.unwrap().table_type.unwrap().type_index,
            3
        );
        let rep = classify_ideal(&s, &make_ideal(&s, &[6, 7]).unwrap()).unwrap();
        assert_eq!(rep.irreducible_at, None);
        assert!(rep.classification.is_none());
        assert!(rep.planarity_by_oracle.unwrap().planar);
    }
}
