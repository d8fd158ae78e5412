//! Divisor sets, irreducible and explicitly generated ideals, and the graphs
//! attached to them.
//!
//! Every irreducible ideal has the form `Λ \ B(x)` with
//! `B(x) = {y ∈ Λ : x - y ∈ Λ}`. The graph of an ideal `I` has the nonzero
//! elements of `Λ \ I` as vertices and joins `y`, `z` when `y + z ∈ I`.

use crate::error::{Error, Result};
use crate::graph::IdealGraph;
use crate::semigroup::NumericalSemigroup;

/// `B(x)`, sorted ascending. Always contains `0` and `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorSet {
    x: u32,
    elements: Vec<u32>,
}

impl DivisorSet {
    pub fn x(&self) -> u32 {
        self.x
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    /// `B*(x)`: the vertex set of the graph.
    pub fn nonzero_elements(&self) -> &[u32] {
        &self.elements[1..]
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, y: u32) -> bool {
        self.elements.binary_search(&y).is_ok()
    }
}

fn require_member(s: &NumericalSemigroup, x: u32) -> Result<()> {
    if s.contains(x as i64) {
        Ok(())
    } else {
        Err(Error::NotAMember(x as i64))
    }
}

pub fn divisors(s: &NumericalSemigroup, x: u32) -> Result<DivisorSet> {
    require_member(s, x)?;
    let xi = x as i64;
    let elements = (0..=x)
        .filter(|&y| s.contains(y as i64) && s.contains(xi - y as i64))
        .collect();
    Ok(DivisorSet { x, elements })
}

/// Membership in the irreducible ideal `Λ \ B(x)`.
pub fn irreducible_ideal_contains(s: &NumericalSemigroup, x: u32, t: i64) -> Result<bool> {
    require_member(s, x)?;
    Ok(s.contains(t) && !s.contains(x as i64 - t))
}

/// The graph of `Λ \ B(x)`: vertices `B*(x)`, `y ~ z` iff `x - (y + z) ∉ Λ`.
pub fn build_graph(s: &NumericalSemigroup, x: u32) -> Result<IdealGraph> {
    let b = divisors(s, x)?;
    Ok(graph_on_divisors(s, &b))
}

pub(crate) fn graph_on_divisors(s: &NumericalSemigroup, b: &DivisorSet) -> IdealGraph {
    let x = b.x() as i64;
    IdealGraph::from_predicate(b.nonzero_elements().to_vec(), |y, z| {
        !s.contains(x - y as i64 - z as i64)
    })
}

/// An integral ideal `I = ∪ (g + Λ)` over a finite generator list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratedIdeal {
    generators: Vec<u32>,
    complement: Vec<u32>,
}

impl GeneratedIdeal {
    /// Minimal ideal generators, ascending.
    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    /// `Λ \ I`, ascending.
    pub fn complement(&self) -> &[u32] {
        &self.complement
    }

    pub fn contains(&self, s: &NumericalSemigroup, t: i64) -> bool {
        s.contains(t)
            && (t > u32::MAX as i64 || self.complement.binary_search(&(t as u32)).is_err())
    }
}

pub fn make_ideal(s: &NumericalSemigroup, gens: &[u32]) -> Result<GeneratedIdeal> {
    if gens.is_empty() {
        return Err(Error::EmptyIdealGenerators);
    }
    for &g in gens {
        require_member(s, g)?;
        if g == 0 {
            return Err(Error::ZeroIdealGenerator);
        }
    }
    let mut sorted = gens.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    // g is redundant when g ∈ h + Λ for another generator h.
    let generators: Vec<u32> = sorted
        .iter()
        .copied()
        .filter(|&g| {
            !sorted
                .iter()
                .any(|&h| h != g && s.contains(g as i64 - h as i64))
        })
        .collect();

    let in_ideal = |t: i64| generators.iter().any(|&g| s.contains(t - g as i64));
    // Anything above frobenius + min(gens) is min(gens) plus a member.
    let bound = (s.frobenius() + generators[0] as i64 + 1).max(0);
    let complement = (0..=bound)
        .filter(|&t| s.contains(t) && !in_ideal(t))
        .map(|t| t as u32)
        .collect();
    Ok(GeneratedIdeal {
        generators,
        complement,
    })
}

/// Graph of a generated ideal: vertices `(Λ \ I)*`, `y ~ z` iff `y + z ∈ I`.
pub fn build_graph_general(s: &NumericalSemigroup, ideal: &GeneratedIdeal) -> IdealGraph {
    let labels: Vec<u32> = ideal
        .complement
        .iter()
        .copied()
        .filter(|&t| t != 0)
        .collect();
    IdealGraph::from_predicate(labels, |y, z| ideal.contains(s, y as i64 + z as i64))
}

/// Returns `x` when the ideal equals `Λ \ B(x)`. The maximum of `B(x)` is `x`,
/// so `max(Λ \ I)` is the only candidate.
pub fn is_irreducible(s: &NumericalSemigroup, ideal: &GeneratedIdeal) -> Option<u32> {
    let &x = ideal.complement.last()?;
    let b = divisors(s, x).ok()?;
    (b.elements() == ideal.complement.as_slice()).then_some(x)
}
