//! Exhaustive verification over a finite family of semigroups.
//!
//! Every semigroup with `2..=max_embedding_dim` minimal generators, all at
//! most `max_generator`, is paired with every member `x` in `1..=max_x`. Each
//! instance runs the checks in [`Check`]; results are merged in semigroup
//! order so reports do not depend on the worker count.

use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::analysis::{self, clique_formula};
use crate::classifier::{classify_graph, ClassificationReport, ExclusionRule};
use crate::error::{Error, Result};
use crate::export::CsvRow;
use crate::graph::IdealGraph;
use crate::ideal::{divisors, graph_on_divisors};
use crate::semigroup::NumericalSemigroup;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepConfig {
    pub max_embedding_dim: usize,
    pub max_generator: u32,
    pub max_x: u32,
    /// Worker threads; `0` lets rayon decide. Left out of reports.
    #[serde(skip)]
    pub jobs: usize,
    /// Pairs checked per (order, degree sequence) bucket.
    pub bucket_pair_cap: usize,
    /// Violation records kept per check in the report. Counts are always exact.
    pub recorded_violations_per_check: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            max_embedding_dim: 6,
            max_generator: 30,
            max_x: 200,
            jobs: 0,
            bucket_pair_cap: 50,
            recorded_violations_per_check: 20,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_embedding_dim < 2 {
            return Err(Error::InvalidConfig(format!(
                "max_embedding_dim must be at least 2, got {}",
                self.max_embedding_dim
            )));
        }
        if self.max_generator < 3 {
            return Err(Error::InvalidConfig(format!(
                "max_generator must be at least 3, got {}",
                self.max_generator
            )));
        }
        if self.max_x < self.max_generator {
            return Err(Error::InvalidConfig(format!(
                "max_x ({}) must be at least max_generator ({})",
                self.max_x, self.max_generator
            )));
        }
        Ok(())
    }
}

/// Every semigroup whose minimal generating set has between 2 and
/// `max_embedding_dim` elements, all at most `max_generator`, in ascending
/// lexicographic order of generator lists.
///
/// Generating sets are grown in increasing order; an element representable
/// by the smaller ones already chosen would be redundant, so every emitted
/// coprime set is its own minimal system and no semigroup appears twice.
pub fn enumerate_semigroups(cfg: &SweepConfig) -> Result<Vec<NumericalSemigroup>> {
    cfg.validate()?;
    let limit = cfg.max_generator as usize;
    let mut out = Vec::new();
    let mut reach = vec![false; limit + 1];
    reach[0] = true;
    grow_sets(cfg, 2, &mut Vec::new(), &reach, 0, &mut out)?;
    Ok(out)
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn grow_sets(
    cfg: &SweepConfig,
    start: u32,
    cur: &mut Vec<u32>,
    reach: &[bool],
    cur_gcd: u32,
    out: &mut Vec<NumericalSemigroup>,
) -> Result<()> {
    if cur.len() >= 2 && cur_gcd == 1 {
        out.push(NumericalSemigroup::new(cur)?);
    }
    if cur.len() == cfg.max_embedding_dim {
        return Ok(());
    }
    for a in start..=cfg.max_generator {
        if reach[a as usize] {
            continue;
        }
        let mut next = reach.to_vec();
        for t in a as usize..next.len() {
            if next[t - a as usize] {
                next[t] = true;
            }
        }
        cur.push(a);
        grow_sets(cfg, a + 1, cur, &next, gcd(cur_gcd, a), out)?;
        cur.pop();
    }
    Ok(())
}

/// A claim checked on every instance where it applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    /// `|B(x)| ≥ prod(u_i + 1) - 1` for every factorization `u` of `x`.
    ProductBound,
    /// No order-6 graph has a firing order-6 exclusion clause.
    Order6Exclusion,
    /// No order-7 graph has a firing order-7 exclusion clause.
    Order7Exclusion,
    /// Every order-6 instance matches a listed shape of `x`.
    Order6Cases,
    /// Every order-7 instance matches a listed shape of `x`.
    Order7Cases,
    /// Order-6/7 degree sequences are table rows.
    TypeDegreeSequence,
    /// Order-6/7 graphs are isomorphic to their type's representative.
    TypeRepresentative,
    /// Sampled pairs in an (order, degree sequence) bucket are isomorphic.
    TypeBucketIsomorphism,
    /// Brute-force clique number equals the closed form, orders 2–10.
    CliqueFormula,
    Connectivity,
    /// Order ≥ 3 graphs are not complete.
    NonCompleteness,
    /// Theorem planarity verdict equals the oracle, orders ≤ 7.
    PlanarityAgreement,
    /// Non-planar oracle verdicts carry a certificate that validates.
    CertificateValidity,
    /// Order ≥ 8 graphs contain a five-clique.
    CliqueAtLeastFive,
}

impl Check {
    pub const ALL: [Check; 14] = [
        Check::ProductBound,
        Check::Order6Exclusion,
        Check::Order7Exclusion,
        Check::Order6Cases,
        Check::Order7Cases,
        Check::TypeDegreeSequence,
        Check::TypeRepresentative,
        Check::TypeBucketIsomorphism,
        Check::CliqueFormula,
        Check::Connectivity,
        Check::NonCompleteness,
        Check::PlanarityAgreement,
        Check::CertificateValidity,
        Check::CliqueAtLeastFive,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Check::ProductBound => "product_bound",
            Check::Order6Exclusion => "order6_exclusion",
            Check::Order7Exclusion => "order7_exclusion",
            Check::Order6Cases => "order6_cases",
            Check::Order7Cases => "order7_cases",
            Check::TypeDegreeSequence => "type_degree_sequence",
            Check::TypeRepresentative => "type_representative",
            Check::TypeBucketIsomorphism => "type_bucket_isomorphism",
            Check::CliqueFormula => "clique_formula",
            Check::Connectivity => "connectivity",
            Check::NonCompleteness => "non_completeness",
            Check::PlanarityAgreement => "planarity_agreement",
            Check::CertificateValidity => "certificate_validity",
            Check::CliqueAtLeastFive => "clique_at_least_five",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub generators: Vec<u32>,
    pub x: u32,
    pub check: Check,
}

/// Outcome of every per-instance check on one `(S, x)`.
#[derive(Debug, Clone)]
pub struct InstanceOutcome {
    pub x: u32,
    pub order: usize,
    pub failed: Vec<Check>,
    /// Present for orders ≤ 7, where the full classification runs.
    pub report: Option<ClassificationReport>,
    pub graph: IdealGraph,
}

/// Runs every per-instance check on `(s, x)`. This is exactly what the
/// sweep does for one instance, so any recorded violation replays here.
pub fn check_instance(s: &NumericalSemigroup, x: u32) -> Result<InstanceOutcome> {
    let bound = s.max_product_bounds(x)[x as usize];
    check_instance_with_bound(s, x, bound)
}

fn check_instance_with_bound(
    s: &NumericalSemigroup,
    x: u32,
    lemma_bound: u64,
) -> Result<InstanceOutcome> {
    let b = divisors(s, x)?;
    let g = graph_on_divisors(s, &b);
    let n = g.order();
    let mut failed = Vec::new();

    if (b.len() as u64) < lemma_bound {
        failed.push(Check::ProductBound);
    }
    if n >= 1 && !analysis::is_connected(&g) {
        failed.push(Check::Connectivity);
    }
    if n >= 3 && g.is_complete() {
        failed.push(Check::NonCompleteness);
    }

    let mut report = None;
    if n <= 7 {
        let r = classify_graph(s, x, &g)?;
        let fired_for = |order| {
            r.exclusions.iter().any(|e| match e {
                ExclusionRule::Prop1(_) => order == 6,
                ExclusionRule::Prop2(_) => order == 7,
            })
        };
        if n == 6 && fired_for(6) {
            failed.push(Check::Order6Exclusion);
        }
        if n == 7 && fired_for(7) {
            failed.push(Check::Order7Exclusion);
        }
        if n == 6 && r.theorem_case.is_none() {
            failed.push(Check::Order6Cases);
        }
        if n == 7 && r.theorem_case.is_none() {
            failed.push(Check::Order7Cases);
        }
        if n == 6 || n == 7 {
            match &r.table_type {
                None => failed.push(Check::TypeDegreeSequence),
                Some(t) if !t.matches_representative => failed.push(Check::TypeRepresentative),
                Some(_) => {}
            }
        }
        if n >= 2 && analysis::clique_number(&g)? != clique_formula(n) {
            failed.push(Check::CliqueFormula);
        }
        if r.planarity_by_theorem.as_bool().is_some() && !r.agreement {
            failed.push(Check::PlanarityAgreement);
        }
        if let Some(v) = r.planarity_by_oracle.as_ref().filter(|v| !v.planar) {
            if !v
                .certificate
                .as_ref()
                .is_some_and(|c| analysis::validate_certificate(&g, c))
            {
                failed.push(Check::CertificateValidity);
            }
        }
        report = Some(r);
    } else {
        let five = if n <= 10 {
            let cl = analysis::clique_number(&g)?;
            if cl != clique_formula(n) {
                failed.push(Check::CliqueFormula);
            }
            cl >= 5
        } else {
            analysis::find_clique(&g, 5).is_some()
        };
        if !five {
            failed.push(Check::CliqueAtLeastFive);
        }
    }
    failed.sort();
    Ok(InstanceOutcome {
        x,
        order: n,
        failed,
        report,
        graph: g,
    })
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct TypeCounts {
    /// Instances per type, index `type - 1`.
    pub order6: [u64; 6],
    pub order7: [u64; 6],
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CaseCounts {
    /// Instances whose first matching case is `k`, index `k - 1`.
    pub order6: [u64; 8],
    pub order7: [u64; 9],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub config: SweepConfig,
    pub semigroups: u64,
    pub instances_scanned: u64,
    pub order_counts: BTreeMap<usize, u64>,
    pub type_counts: TypeCounts,
    pub case_counts: CaseCounts,
    /// Exact number of failures per check, every check listed.
    pub violation_counts: BTreeMap<Check, u64>,
    pub total_violations: u64,
    /// First recorded failures per check, in sweep order.
    pub violations: Vec<Violation>,
    #[serde(skip)]
    pub duration: Duration,
}

impl VerificationReport {
    pub fn is_clean(&self) -> bool {
        self.total_violations == 0
    }

    pub fn count(&self, check: Check) -> u64 {
        self.violation_counts.get(&check).copied().unwrap_or(0)
    }
}

/// Generators, `x` and graph of one sampled bucket member.
type BucketMember = (Vec<u32>, u32, IdealGraph);

/// Per-semigroup results, merged in order.
struct SemigroupOutcome {
    generators: Vec<u32>,
    instances: u64,
    orders: Vec<usize>,
    rows: Vec<CsvRow>,
    failures: Vec<(u32, Check)>,
    types: Vec<(usize, usize)>,
    cases: Vec<(usize, usize)>,
    bucket_members: Vec<(Vec<usize>, u32, IdealGraph)>,
}

fn run_semigroup(s: &NumericalSemigroup, max_x: u32) -> Result<SemigroupOutcome> {
    let bounds = s.max_product_bounds(max_x);
    let mut out = SemigroupOutcome {
        generators: s.generators().to_vec(),
        instances: 0,
        orders: Vec::new(),
        rows: Vec::new(),
        failures: Vec::new(),
        types: Vec::new(),
        cases: Vec::new(),
        bucket_members: Vec::new(),
    };
    for x in 1..=max_x {
        if !s.contains(x as i64) {
            continue;
        }
        let inst = check_instance_with_bound(s, x, bounds[x as usize])?;
        out.instances += 1;
        out.orders.push(inst.order);
        out.failures.extend(inst.failed.iter().map(|&c| (x, c)));
        if let Some(r) = &inst.report {
            out.rows.push(CsvRow::from_report(r));
            if let Some(t) = &r.table_type {
                out.types.push((t.order, t.type_index));
            }
            if let Some(c) = &r.theorem_case {
                out.cases.push((c.order_target, c.case_index));
            }
            if inst.order == 6 || inst.order == 7 {
                out.bucket_members
                    .push((r.degree_sequence.clone(), x, inst.graph));
            }
        }
    }
    Ok(out)
}

/// Runs the sweep over every enumerated semigroup.
pub fn sweep(cfg: &SweepConfig) -> Result<VerificationReport> {
    sweep_to(cfg, None, None)
}

/// Like [`sweep`], streaming the per-instance CSV and the full violation list
/// to the given writers.
pub fn sweep_to(
    cfg: &SweepConfig,
    csv_out: Option<&mut dyn Write>,
    violations_out: Option<&mut dyn Write>,
) -> Result<VerificationReport> {
    let semigroups = enumerate_semigroups(cfg)?;
    sweep_semigroups(&semigroups, cfg, csv_out, violations_out)
}

const CHUNK: usize = 512;

/// Sweeps an explicit list of semigroups with the bounds from `cfg`.
pub fn sweep_semigroups(
    semigroups: &[NumericalSemigroup],
    cfg: &SweepConfig,
    csv_out: Option<&mut dyn Write>,
    violations_out: Option<&mut dyn Write>,
) -> Result<VerificationReport> {
    let started = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| Error::InvalidConfig(e.to_string()))?;

    let mut csv_writer = csv_out.map(|w| csv::WriterBuilder::new().delimiter(b';').from_writer(w));
    let mut violation_writer =
        violations_out.map(|w| csv::WriterBuilder::new().delimiter(b';').from_writer(w));
    if let Some(w) = violation_writer.as_mut() {
        w.write_record(["generators", "x", "check"])?;
    }

    let mut report = VerificationReport {
        config: cfg.clone(),
        semigroups: semigroups.len() as u64,
        instances_scanned: 0,
        order_counts: BTreeMap::new(),
        type_counts: TypeCounts::default(),
        case_counts: CaseCounts::default(),
        violation_counts: Check::ALL.iter().map(|&c| (c, 0)).collect(),
        total_violations: 0,
        violations: Vec::new(),
        duration: Duration::ZERO,
    };
    let mut recorded: BTreeMap<Check, Vec<Violation>> = BTreeMap::new();
    let bucket_cap = bucket_size_for(cfg.bucket_pair_cap);
    let mut buckets: BTreeMap<(usize, Vec<usize>), Vec<BucketMember>> = BTreeMap::new();

    let per_check = cfg.recorded_violations_per_check;

    for chunk in semigroups.chunks(CHUNK) {
        let outcomes: Vec<Result<SemigroupOutcome>> = pool.install(|| {
            chunk
                .par_iter()
                .map(|s| run_semigroup(s, cfg.max_x))
                .collect()
        });
        for outcome in outcomes {
            let o = outcome?;
            report.instances_scanned += o.instances;
            for &n in &o.orders {
                *report.order_counts.entry(n).or_default() += 1;
            }
            for &(order, t) in &o.types {
                let slot = if order == 6 {
                    &mut report.type_counts.order6
                } else {
                    &mut report.type_counts.order7
                };
                slot[t - 1] += 1;
            }
            for &(order, c) in &o.cases {
                if order == 6 {
                    report.case_counts.order6[c - 1] += 1;
                } else {
                    report.case_counts.order7[c - 1] += 1;
                }
            }
            if let Some(w) = csv_writer.as_mut() {
                for row in &o.rows {
                    w.serialize(row)?;
                }
            }
            let gens = crate::export::join(&o.generators);
            for &(x, check) in &o.failures {
                note(
                    &mut report,
                    &mut recorded,
                    per_check,
                    &o.generators,
                    x,
                    check,
                );
                if let Some(w) = violation_writer.as_mut() {
                    w.write_record([gens.as_str(), &x.to_string(), check.id()])?;
                }
            }
            for (ds, x, g) in o.bucket_members {
                let key = (g.order(), ds);
                let members = buckets.entry(key).or_default();
                if members.len() < bucket_cap {
                    members.push((o.generators.clone(), x, g));
                }
            }
        }
    }

    // Pairwise isomorphism inside each bucket, first pairs in index order.
    for members in buckets.values() {
        let pairs = (0..members.len())
            .flat_map(|i| (i + 1..members.len()).map(move |j| (i, j)))
            .take(cfg.bucket_pair_cap);
        for (i, j) in pairs {
            if !analysis::isomorphic(&members[i].2, &members[j].2)? {
                let (gens, x, _) = &members[j];
                note(
                    &mut report,
                    &mut recorded,
                    per_check,
                    gens,
                    *x,
                    Check::TypeBucketIsomorphism,
                );
                if let Some(w) = violation_writer.as_mut() {
                    w.write_record([
                        crate::export::join(gens).as_str(),
                        &x.to_string(),
                        Check::TypeBucketIsomorphism.id(),
                    ])?;
                }
            }
        }
    }

    if let Some(mut w) = csv_writer {
        w.flush()?;
    }
    if let Some(mut w) = violation_writer {
        w.flush()?;
    }
    report.violations = recorded.into_values().flatten().collect();
    report.duration = started.elapsed();
    Ok(report)
}

fn note(
    report: &mut VerificationReport,
    recorded: &mut BTreeMap<Check, Vec<Violation>>,
    per_check: usize,
    generators: &[u32],
    x: u32,
    check: Check,
) {
    *report.violation_counts.entry(check).or_default() += 1;
    report.total_violations += 1;
    let list = recorded.entry(check).or_default();
    if list.len() < per_check {
        list.push(Violation {
            generators: generators.to_vec(),
            x,
            check,
        });
    }
}

/// Smallest member count whose pair count reaches `pairs`.
fn bucket_size_for(pairs: usize) -> usize {
    let mut k = 1;
    while k * (k - 1) / 2 < pairs {
        k += 1;
    }
    k
}
