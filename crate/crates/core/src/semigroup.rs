//! Numerical semigroup arithmetic.
//!
//! A [`NumericalSemigroup`] is stored through its minimal generating system
//! together with a membership table covering `0..=frobenius`. Every value above
//! the Frobenius number is a member, so membership is a single lookup.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    raw_generators: Vec<u32>,
    generators: Vec<u32>,
    frobenius: i64,
    gaps: Vec<u32>,
    membership: Vec<bool>,
}

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Whether `target` is a non-negative integer combination of `gens`.
fn representable(target: u32, gens: &[u32]) -> bool {
    if gens.is_empty() {
        return target == 0;
    }
    let target = target as usize;
    let mut reach = vec![false; target + 1];
    reach[0] = true;
    for t in 1..=target {
        reach[t] = gens
            .iter()
            .any(|&g| (g as usize) <= t && reach[t - g as usize]);
    }
    reach[target]
}

/// Reduces a sorted, deduplicated list to its minimal generating system.
pub(crate) fn minimalize(sorted: &[u32]) -> Vec<u32> {
    let mut kept: Vec<u32> = Vec::with_capacity(sorted.len());
    for &a in sorted {
        if !representable(a, &kept) {
            kept.push(a);
        }
    }
    kept
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `raw`, reducing the input to its
    /// unique minimal system of generators.
    pub fn new(raw: &[u32]) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::EmptyGeneratorList);
        }
        if raw.contains(&0) {
            return Err(Error::InvalidGenerator(0));
        }
        let g = raw.iter().copied().fold(0, gcd);
        if g != 1 {
            return Err(Error::NonCoprimeGenerators {
                generators: raw.to_vec(),
                gcd: g,
            });
        }
        let mut sorted = raw.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let generators = minimalize(&sorted);

        // Ascending DP; once `smallest` consecutive members appear, every
        // larger value is a member as well.
        let smallest = generators[0] as usize;
        let mut table: Vec<bool> = Vec::new();
        let mut run = 0usize;
        let mut t = 0usize;
        while run < smallest {
            let member = t == 0
                || generators
                    .iter()
                    .any(|&a| (a as usize) <= t && table[t - a as usize]);
            table.push(member);
            run = if member { run + 1 } else { 0 };
            t += 1;
        }
        let frobenius = table.iter().rposition(|&m| !m).map_or(-1, |f| f as i64);
        table.truncate((frobenius + 1) as usize);
        let gaps = (1..table.len())
            .filter(|&t| !table[t])
            .map(|t| t as u32)
            .collect();

        Ok(Self {
            raw_generators: raw.to_vec(),
            generators,
            frobenius,
            gaps,
            membership: table,
        })
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    /// The generators as originally supplied, before minimalization.
    pub fn raw_generators(&self) -> &[u32] {
        &self.raw_generators
    }

    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    /// Largest gap, or `-1` for the semigroup of all non-negative integers.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn gaps(&self) -> &[u32] {
        &self.gaps
    }

    pub fn frobenius_and_gaps(&self) -> (i64, &[u32]) {
        (self.frobenius, &self.gaps)
    }

    #[inline]
    pub fn contains(&self, t: i64) -> bool {
        if t < 0 {
            false
        } else if t > self.frobenius {
            true
        } else {
            self.membership[t as usize]
        }
    }

    /// Least element of each residue class modulo `m`, indexed by residue.
    pub fn apery_set(&self, m: u32) -> Result<Vec<u32>> {
        if m == 0 || !self.contains(m as i64) {
            return Err(Error::NotAMember(m as i64));
        }
        let mut least: Vec<Option<u32>> = vec![None; m as usize];
        let mut missing = m as usize;
        let mut t = 0u32;
        while missing > 0 {
            let r = (t % m) as usize;
            if least[r].is_none() && self.contains(t as i64) {
                least[r] = Some(t);
                missing -= 1;
            }
            t += 1;
        }
        Ok(least
            .into_iter()
            .map(|v| v.expect("every residue filled"))
            .collect())
    }

    /// All factorizations of `x` over the minimal generators, in ascending
    /// lexicographic order of coefficient vectors. Empty when `x` is not a
    /// member.
    pub fn factorizations(&self, x: u32) -> Vec<Factorization> {
        let n = self.generators.len();
        let mut out = Vec::new();
        if !self.contains(x as i64) {
            return out;
        }
        let mut coeffs = vec![0u32; n];
        self.factor_dfs(n - 1, x, x, &mut coeffs, &mut out);
        out.sort_by(|a, b| a.coefficients.cmp(&b.coefficients));
        out
    }

    // Generators are consumed from the largest down; the smallest one takes
    // whatever remains if it divides evenly.
    fn factor_dfs(
        &self,
        idx: usize,
        rem: u32,
        value: u32,
        coeffs: &mut [u32],
        out: &mut Vec<Factorization>,
    ) {
        let a = self.generators[idx];
        if idx == 0 {
            if rem.is_multiple_of(a) {
                coeffs[0] = rem / a;
                out.push(Factorization::from_parts(coeffs.to_vec(), value));
                coeffs[0] = 0;
            }
            return;
        }
        for u in 0..=rem / a {
            let next = rem - u * a;
            if !self.contains(next as i64) {
                continue;
            }
            coeffs[idx] = u;
            self.factor_dfs(idx - 1, next, value, coeffs, out);
        }
        coeffs[idx] = 0;
    }

    pub fn profile(&self, x: u32) -> Result<FactorizationProfile> {
        if !self.contains(x as i64) {
            return Err(Error::NotAMember(x as i64));
        }
        let factorizations = self.factorizations(x);
        let mut counts = vec![0usize; self.generators.len() + 1];
        for f in &factorizations {
            counts[f.support_size()] += 1;
        }
        Ok(FactorizationProfile {
            x,
            factorizations,
            counts,
        })
    }

    /// For every `v` in `0..=max_x`, the largest [`lemma1_lower_bound`] over
    /// all factorizations of `v`; `0` for non-members and for `v = 0`.
    ///
    /// The bound of a factorization is `prod(u_i + 1) - 1`, so this is a
    /// max-product knapsack over the generators.
    pub fn max_product_bounds(&self, max_x: u32) -> Vec<u64> {
        let len = max_x as usize + 1;
        // best[v] = max prod(u_i + 1) over factorizations of v using the
        // generators seen so far; 0 marks "not representable".
        let mut best = vec![0u64; len];
        best[0] = 1;
        for &a in &self.generators {
            let a = a as usize;
            let prev = best.clone();
            for v in a..len {
                let mut top = best[v];
                let mut u = 1usize;
                while u * a <= v {
                    let base = prev[v - u * a];
                    if base > 0 {
                        top = top.max(base * (u as u64 + 1));
                    }
                    u += 1;
                }
                best[v] = top;
            }
        }
        best.into_iter().map(|b| b.saturating_sub(1)).collect()
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

#[derive(Serialize)]
struct SemigroupSummary<'a> {
    generators: &'a [u32],
    frobenius: i64,
    gaps: &'a [u32],
}

impl Serialize for NumericalSemigroup {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SemigroupSummary {
            generators: &self.generators,
            frobenius: self.frobenius,
            gaps: &self.gaps,
        }
        .serialize(serializer)
    }
}

/// A coefficient vector `u` with `value = sum u_i * a_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Factorization {
    coefficients: Vec<u32>,
    value: u32,
    support_size: usize,
}

impl Factorization {
    /// Builds a factorization from coefficients aligned with `generators`.
    pub fn new(generators: &[u32], coefficients: Vec<u32>) -> Self {
        assert_eq!(
            generators.len(),
            coefficients.len(),
            "coefficient vector length"
        );
        let value = generators
            .iter()
            .zip(&coefficients)
            .map(|(a, u)| a * u)
            .sum();
        Self::from_parts(coefficients, value)
    }

    fn from_parts(coefficients: Vec<u32>, value: u32) -> Self {
        let support_size = coefficients.iter().filter(|&&u| u > 0).count();
        Self {
            coefficients,
            value,
            support_size,
        }
    }

    pub fn coefficients(&self) -> &[u32] {
        &self.coefficients
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn support_size(&self) -> usize {
        self.support_size
    }

    /// Positive coefficients with their generator index.
    pub fn support(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.coefficients
            .iter()
            .enumerate()
            .filter(|(_, &u)| u > 0)
            .map(|(i, &u)| (i, u))
    }

    pub fn evaluate(&self, generators: &[u32]) -> u32 {
        generators
            .iter()
            .zip(&self.coefficients)
            .map(|(a, u)| a * u)
            .sum()
    }
}

/// All factorizations of `x`, bucketed by support size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationProfile {
    x: u32,
    factorizations: Vec<Factorization>,
    counts: Vec<usize>,
}

impl FactorizationProfile {
    /// Builds a profile directly from support-size counts, indexed by `p`.
    /// Used where only the `|L^(p)_x|` numbers matter.
    pub fn from_counts(x: u32, counts: &[(usize, usize)]) -> Self {
        let len = counts.iter().map(|&(p, _)| p + 1).max().unwrap_or(1);
        let mut c = vec![0; len];
        for &(p, k) in counts {
            c[p] = k;
        }
        Self {
            x,
            factorizations: Vec::new(),
            counts: c,
        }
    }

    pub fn x(&self) -> u32 {
        self.x
    }

    pub fn factorizations(&self) -> &[Factorization] {
        &self.factorizations
    }

    /// Number of factorizations with support exactly `p`.
    pub fn count(&self, p: usize) -> usize {
        self.counts.get(p).copied().unwrap_or(0)
    }

    /// Largest support size with a non-zero count.
    pub fn max_support(&self) -> usize {
        self.counts.iter().rposition(|&c| c > 0).unwrap_or(0)
    }
}

/// `e_1 + e_2 + ... + e_p` of the positive coefficients, i.e.
/// `prod(u_i + 1) - 1`.
pub fn lemma1_lower_bound(f: &Factorization) -> Result<u64> {
    if f.support_size == 0 {
        return Err(Error::ZeroFactorization);
    }
    Ok(f.support().map(|(_, u)| u as u64 + 1).product::<u64>() - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(g: &[u32]) -> NumericalSemigroup {
        NumericalSemigroup::new(g).unwrap()
    }

    // Independent representability check: plain recursion over generators.
    fn brute_member(t: i64, gens: &[u32]) -> bool {
        if t == 0 {
            return true;
        }
        if t < 0 || gens.is_empty() {
            return false;
        }
        let (a, rest) = (gens[0] as i64, &gens[1..]);
        (0..=t / a).any(|u| brute_member(t - u * a, rest))
    }

    #[test]
    fn construction_examples() {
        let s = sg(&[2, 3]);
        assert_eq!(s.generators(), &[2, 3]);
        assert_eq!(s.frobenius_and_gaps(), (1, &[1u32][..]));

        assert_eq!(sg(&[3, 4, 7]).generators(), &[3, 4]);
        assert_eq!(sg(&[3, 4, 7]).raw_generators(), &[3, 4, 7]);
        assert_eq!(sg(&[7, 4, 4, 3]).generators(), &[3, 4]);

        assert!(matches!(
            NumericalSemigroup::new(&[4, 6]),
            Err(Error::NonCoprimeGenerators { gcd: 2, .. })
        ));
        assert_eq!(NumericalSemigroup::new(&[]), Err(Error::EmptyGeneratorList));
        assert_eq!(
            NumericalSemigroup::new(&[0, 3]),
            Err(Error::InvalidGenerator(0))
        );
    }

    #[test]
    fn frobenius_examples() {
        assert_eq!(sg(&[3, 4]).frobenius_and_gaps(), (5, &[1u32, 2, 5][..]));
        assert_eq!(
            sg(&[2, 15]).frobenius_and_gaps(),
            (13, &[1u32, 3, 5, 7, 9, 11, 13][..])
        );
        assert_eq!(sg(&[1]).frobenius_and_gaps(), (-1, &[][..]));
        assert_eq!(sg(&[1, 5]).generators(), &[1]);
    }

    #[test]
    fn membership_examples() {
        let s = sg(&[3, 4]);
        assert!(!s.contains(5));
        assert!(s.contains(10));
        assert!(sg(&[2, 3]).contains(0));
        assert!(!s.contains(-3));
        assert!(s.contains(1_000_000));
    }

    #[test]
    fn membership_matches_brute_force() {
        for gens in [
            &[2u32, 3][..],
            &[3, 4],
            &[5, 6, 9, 13],
            &[7, 11, 13],
            &[4, 9, 14, 19],
        ] {
            let s = sg(gens);
            for t in -2..120i64 {
                assert_eq!(s.contains(t), brute_member(t, gens), "{gens:?} {t}");
            }
            assert!(!s.contains(s.frobenius()) || s.frobenius() == -1);
        }
    }

    #[test]
    fn apery_examples() {
        assert_eq!(sg(&[3, 4]).apery_set(3).unwrap(), vec![0, 4, 8]);
        assert_eq!(sg(&[2, 3]).apery_set(2).unwrap(), vec![0, 3]);
        assert_eq!(sg(&[3, 4]).apery_set(5), Err(Error::NotAMember(5)));
        assert_eq!(sg(&[3, 4]).apery_set(0), Err(Error::NotAMember(0)));
        let w = sg(&[5, 6, 9, 13]).apery_set(6).unwrap();
        assert_eq!(w.len(), 6);
        for (r, &v) in w.iter().enumerate() {
            assert_eq!(v as usize % 6, r);
        }
    }

    #[test]
    fn factorization_examples() {
        let coeffs = |s: &NumericalSemigroup, x| -> Vec<Vec<u32>> {
            s.factorizations(x)
                .iter()
                .map(|f| f.coefficients().to_vec())
                .collect()
        };
        assert_eq!(coeffs(&sg(&[2, 3]), 8), vec![vec![1, 2], vec![4, 0]]);
        assert_eq!(coeffs(&sg(&[3, 4]), 12), vec![vec![0, 3], vec![4, 0]]);
        assert_eq!(coeffs(&sg(&[3, 4]), 0), vec![vec![0, 0]]);
        assert!(sg(&[3, 4]).factorizations(5).is_empty());
    }

    #[test]
    fn profile_examples() {
        let p = sg(&[3, 4]).profile(12).unwrap();
        assert_eq!((p.count(1), p.count(2)), (2, 0));
        let p = sg(&[2, 3]).profile(8).unwrap();
        assert_eq!((p.count(1), p.count(2)), (1, 1));
        let p = sg(&[5, 6, 9, 13]).profile(18).unwrap();
        assert_eq!((p.count(1), p.count(2), p.count(3)), (2, 1, 0));
        let got: Vec<_> = p
            .factorizations()
            .iter()
            .map(|f| f.coefficients().to_vec())
            .collect();
        assert_eq!(
            got,
            vec![vec![0, 0, 2, 0], vec![0, 3, 0, 0], vec![1, 0, 0, 1]]
        );
        assert_eq!(sg(&[3, 4]).profile(5), Err(Error::NotAMember(5)));
    }

    // e_1 + ... + e_p via the elementary symmetric recurrence.
    fn elementary_sum(us: &[u64]) -> u64 {
        let mut e = vec![0u64; us.len() + 1];
        e[0] = 1;
        for &u in us {
            for k in (1..e.len()).rev() {
                e[k] += e[k - 1] * u;
            }
        }
        e[1..].iter().sum()
    }

    #[test]
    fn product_bound_examples() {
        let gens = [2, 3, 5];
        let f = |c: Vec<u32>| Factorization::new(&gens, c);
        assert_eq!(lemma1_lower_bound(&f(vec![1, 1, 0])).unwrap(), 3);
        assert_eq!(lemma1_lower_bound(&f(vec![2, 1, 0])).unwrap(), 5);
        assert_eq!(lemma1_lower_bound(&f(vec![1, 1, 1])).unwrap(), 7);
        assert_eq!(
            lemma1_lower_bound(&f(vec![0, 0, 0])),
            Err(Error::ZeroFactorization)
        );
        for c in [vec![3, 0, 2], vec![1, 4, 2], vec![0, 7, 0]] {
            let us: Vec<u64> = c.iter().filter(|&&u| u > 0).map(|&u| u as u64).collect();
            assert_eq!(
                lemma1_lower_bound(&f(c.clone())).unwrap(),
                elementary_sum(&us)
            );
        }
    }

    #[test]
    fn max_product_bounds_match_enumeration() {
        for gens in [&[2u32, 3][..], &[3, 4], &[5, 6, 9, 13], &[4, 7, 10]] {
            let s = sg(gens);
            let dp = s.max_product_bounds(60);
            for x in 0..=60u32 {
                let brute = s
                    .factorizations(x)
                    .iter()
                    .filter(|f| f.support_size() > 0)
                    .map(|f| lemma1_lower_bound(f).unwrap())
                    .max()
                    .unwrap_or(0);
                assert_eq!(dp[x as usize], brute, "{gens:?} x={x}");
            }
        }
    }
}
