//! Extremal searches over explicit families and exhaustive enumerations,
//! and the verifiers that check the distance lemmas and entropy conjectures
//! computationally.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::entropy::{
    class_entropy, entropy_with_fill, optimal_integer_fill, x_log2_x, CompensatedSum, EntropyBits,
    WeightSequence, ENTROPY_TIE_TOLERANCE,
};
use crate::enumerate::{connected_graphs_shard, free_trees, MAX_TREE_ORDER};
use crate::error::{domain, Error, Result};
use crate::families::{
    broom_class_profile, diametral_path_eccentricities, gnkj_class_profile, make_diam_tree,
    make_star, make_t3, make_t5, min_leaf_eccentricity, ClassProfile, GnkjSpec,
};
use crate::graph::{distance_profile, Graph};
use crate::io::write_edge_list;

/// Which graph entropy a record refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Measure {
    Wiener,
    Eccentricity,
}

/// Family parameters of an extremal object.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Params {
    Gnkj { k: usize, j: usize },
    UniversalVertices { k: usize },
    LeafEccentricity { b: usize },
    None,
}

/// Evidence from which a record's value can be recomputed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    Graph(Graph),
    Profile(ClassProfile),
    /// `(value, multiplicity)` pairs of a per-vertex invariant.
    Classes(Vec<(u64, u64)>),
}

impl Witness {
    fn value(&self, measure: Measure) -> Result<f64> {
        Ok(match (self, measure) {
            (Witness::Graph(g), Measure::Wiener) => distance_profile(g).wiener_entropy()?.value(),
            (Witness::Graph(g), Measure::Eccentricity) => distance_profile(g).eccentricity_entropy()?.value(),
            (Witness::Profile(p), _) => p.wiener_entropy()?.value(),
            (Witness::Classes(c), _) => class_entropy(c.iter().map(|&(v, m)| (v as f64, m)))?.value(),
        })
    }
}

/// One row of an extremal table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchRecord {
    pub n: usize,
    pub measure: Measure,
    pub params: Params,
    pub value: EntropyBits,
    /// All extremal objects found (ties within `1e-12` are kept).
    pub witnesses: Vec<Witness>,
}

impl SearchRecord {
    /// Largest deviation between `value` and the value recomputed from each
    /// witness.
    pub fn witness_deviation(&self) -> Result<f64> {
        let mut worst = 0.0f64;
        for w in &self.witnesses {
            worst = worst.max((w.value(self.measure)? - self.value.value()).abs());
        }
        Ok(worst)
    }
}

/// Range of path lengths `k` scanned by [`min_iw_gnkj`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum KRange {
    /// `[1, min(n − 1, ⌈4 √n log2 n⌉)]`; assumes the optimum is not at larger k.
    Heuristic,
    /// Every `k` in `[1, n − 1]`.
    Full,
    Explicit { lo: usize, hi: usize },
}

impl KRange {
    pub fn bounds(self, n: usize) -> Result<(usize, usize)> {
        if n < 2 {
            return Err(domain(format!("G(n,k,j) needs n >= 2, got {n}")));
        }
        let (lo, hi) = match self {
            KRange::Heuristic => {
                let nf = n as f64;
                let cap = (4.0 * nf.sqrt() * nf.log2()).ceil() as usize;
                (1, cap.clamp(1, n - 1))
            }
            KRange::Full => (1, n - 1),
            KRange::Explicit { lo, hi } => (lo.max(1), hi.min(n - 1)),
        };
        if lo > hi {
            return Err(domain(format!("empty k range for n = {n}")));
        }
        Ok((lo, hi))
    }
}

/// Result of [`min_iw_gnkj`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GnkjSearch {
    pub record: SearchRecord,
    pub k: usize,
    pub j: usize,
    pub k_range: (usize, usize),
    /// The minimizing `k` sits on the upper end of a range that stops short
    /// of `n − 1`, so a larger `k` was never examined.
    pub touches_boundary: bool,
}

/// Entropy of `G(n,k,j)` for every `j` in `1..=n−k`, in order.
///
/// Works from the closed-form class transmissions, so each value costs
/// `O(k)`.
pub fn gnkj_entropies(n: usize, k: usize) -> Result<Vec<f64>> {
    GnkjSpec::new(n, k, 1)?;
    let c = (n - k) as u64;
    let ku = k as u64;
    // path transmission with j = 0; the actual value is base - j
    let base: Vec<u64> = (0..ku)
        .map(|i| i * (i + 1) / 2 + (ku - 1 - i) * (ku - i) / 2 + c * (i + 2))
        .collect();
    let base_sum: u64 = base.iter().sum();
    let attached = ku * (ku + 1) / 2 + c - 1;
    let unattached = attached + ku;
    let phi_a = x_log2_x(attached as f64);
    let phi_u = x_log2_x(unattached as f64);
    let mut out = Vec::with_capacity(c as usize);
    for j in 1..=c {
        let total = base_sum - ku * j + j * attached + (c - j) * unattached;
        let mut acc = CompensatedSum::new();
        for &b in &base {
            acc += x_log2_x((b - j) as f64);
        }
        acc += j as f64 * phi_a;
        acc += (c - j) as f64 * phi_u;
        let s = total as f64;
        out.push(s.log2() - acc.value() / s);
    }
    Ok(out)
}

/// Lexicographically first `(k, j)` minimizing the Wiener-entropy of
/// `G(n,k,j)` over the given `k` range and every valid `j`; values within
/// `1e-12` of the running minimum count as ties.
pub fn min_iw_gnkj(n: usize, range: KRange) -> Result<GnkjSearch> {
    if n < 3 {
        return Err(domain(format!("min_iw_gnkj needs n >= 3, got {n}")));
    }
    let (lo, hi) = range.bounds(n)?;
    let per_k: Vec<(usize, usize, f64)> = (lo..=hi)
        .into_par_iter()
        .map(|k| {
            let values = gnkj_entropies(n, k).expect("k is in range");
            let (j, v) = first_min(&values);
            (k, j + 1, v)
        })
        .collect();
    let mut best = per_k[0];
    for &cand in &per_k[1..] {
        if cand.2 < best.2 - ENTROPY_TIE_TOLERANCE {
            best = cand;
        }
    }
    let (k, j, _) = best;
    let spec = GnkjSpec::new(n, k, j)?;
    let profile = gnkj_class_profile(spec)?;
    let value = profile.wiener_entropy()?;
    Ok(GnkjSearch {
        record: SearchRecord {
            n,
            measure: Measure::Wiener,
            params: Params::Gnkj { k, j },
            value,
            witnesses: vec![Witness::Profile(profile)],
        },
        k,
        j,
        k_range: (lo, hi),
        touches_boundary: k == hi && hi < n - 1,
    })
}

/// Index and value of the first minimum, with the tie tolerance.
fn first_min(values: &[f64]) -> (usize, f64) {
    let mut best = (0, values[0]);
    for (i, &v) in values.iter().enumerate().skip(1) {
        if v < best.1 - ENTROPY_TIE_TOLERANCE {
            best = (i, v);
        }
    }
    best
}

/// One point of an `I_w(G(n,k,j))` curve.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CurvePoint {
    pub j: usize,
    pub value: f64,
    /// Strictly below both neighbours (or the single neighbour at an end).
    pub local_min: bool,
}

/// `I_w(G(n,k,j))` as a function of `j`, with local minima marked.
pub fn gnkj_curve(n: usize, k: usize) -> Result<Vec<CurvePoint>> {
    let values = gnkj_entropies(n, k)?;
    let len = values.len();
    Ok(values
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            let left = i == 0 || v < values[i - 1];
            let right = i + 1 == len || v < values[i + 1];
            CurvePoint { j: i + 1, value: v, local_min: len > 1 && left && right }
        })
        .collect())
}

/// Whether the curve is monotone (nonincreasing or nondecreasing) in `j`.
pub fn is_monotone(points: &[CurvePoint]) -> bool {
    let up = points.windows(2).all(|w| w[1].value >= w[0].value);
    let down = points.windows(2).all(|w| w[1].value <= w[0].value);
    up || down
}

/// Minimum Wiener-entropy over all trees of order `n` (`3 <= n <= 18`),
/// with every minimizing tree as a witness.
pub fn min_iw_tree(n: usize) -> Result<SearchRecord> {
    if !(3..=MAX_TREE_ORDER).contains(&n) {
        return Err(domain(format!("min_iw_tree needs 3 <= n <= {MAX_TREE_ORDER}, got {n}")));
    }
    let mut best = f64::INFINITY;
    let mut witnesses: Vec<Graph> = Vec::new();
    for t in free_trees(n)? {
        let v = distance_profile(&t).wiener_entropy()?.value();
        if v < best - ENTROPY_TIE_TOLERANCE {
            best = v;
            witnesses.clear();
            witnesses.push(t);
        } else if (v - best).abs() <= ENTROPY_TIE_TOLERANCE {
            witnesses.push(t);
        }
    }
    Ok(SearchRecord {
        n,
        measure: Measure::Wiener,
        params: Params::None,
        value: EntropyBits::clamped(best, n),
        witnesses: witnesses.into_iter().map(Witness::Graph).collect(),
    })
}

/// Eccentricity-entropy of a radius-1 graph of order `n` with `k` universal
/// vertices: `log2(2n − k) − 2(n − k)/(2n − k)`.
pub fn radius_one_entropy(n: usize, k: usize) -> f64 {
    let (n, k) = (n as f64, k as f64);
    (2.0 * n - k).log2() - 2.0 * (n - k) / (2.0 * n - k)
}

/// `{⌊(2 − 2 ln 2) n⌋, ⌈(2 − 2 ln 2) n⌉}`.
pub fn radius_one_candidates(n: usize) -> (usize, usize) {
    let x = (2.0 - 2.0 * std::f64::consts::LN_2) * n as f64;
    (x.floor() as usize, x.ceil() as usize)
}

fn argmin_radius_one<I: Iterator<Item = usize>>(n: usize, ks: I) -> (usize, f64) {
    let mut best = (0usize, f64::INFINITY);
    for k in ks {
        let v = radius_one_entropy(n, k);
        // exact comparison: near the optimum neighbours differ by < 1e-12 once n ~ 1e6
        if v < best.1 {
            best = (k, v);
        }
    }
    best
}

/// Minimizes the radius-1 eccentricity-entropy over `k ∈ [1, n]` by a full
/// scan and checks that the minimizer is one of the two integers nearest
/// `(2 − 2 ln 2) n`.
pub fn min_iecc_radius1(n: usize) -> Result<SearchRecord> {
    if n < 2 {
        return Err(domain(format!("min_iecc_radius1 needs n >= 2, got {n}")));
    }
    let (k, v) = argmin_radius_one(n, 1..=n);
    let (lo, hi) = radius_one_candidates(n);
    if k != lo && k != hi {
        return Err(Error::Invariant(format!(
            "radius-1 argmin {k} for n = {n} is not in {{{lo}, {hi}}}"
        )));
    }
    Ok(SearchRecord {
        n,
        measure: Measure::Eccentricity,
        params: Params::UniversalVertices { k },
        value: EntropyBits::clamped(v, n),
        witnesses: vec![Witness::Classes(radius_one_classes(n, k))],
    })
}

fn radius_one_classes(n: usize, k: usize) -> Vec<(u64, u64)> {
    [(1u64, k as u64), (2, (n - k) as u64)].into_iter().filter(|c| c.1 > 0).collect()
}

/// Outcome of the exhaustive minimum-eccentricity-entropy scan.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IeccBruteForce {
    pub record: SearchRecord,
    pub minimizer_count: usize,
    pub radius_one_only: bool,
    /// Universal-vertex counts seen among the minimizers.
    pub universal_counts: BTreeSet<usize>,
    /// Minimizer of the closed form over the realizable counts
    /// `k ∈ [1, n] \ {n − 1}`.
    pub expected_k: usize,
}

impl IeccBruteForce {
    pub fn passes(&self) -> bool {
        self.radius_one_only && self.universal_counts.iter().all(|&k| k == self.expected_k)
    }
}

/// Number of shards the labeled graph scans are split into.
const GRAPH_SHARDS: usize = 64;

/// Minimum eccentricity-entropy over every connected labeled graph of
/// order `n` (`2 <= n <= 7`).
pub fn min_iecc_graph_bruteforce(n: usize) -> Result<IeccBruteForce> {
    if !(2..=7).contains(&n) {
        return Err(domain(format!("min_iecc_graph_bruteforce needs 2 <= n <= 7, got {n}")));
    }
    struct Acc {
        best: f64,
        count: usize,
        radius_one_only: bool,
        counts: BTreeSet<usize>,
        witness: Option<Graph>,
    }
    let empty = || Acc { best: f64::INFINITY, count: 0, radius_one_only: true, counts: BTreeSet::new(), witness: None };
    let merge = |mut a: Acc, b: Acc| -> Acc {
        if b.best < a.best - ENTROPY_TIE_TOLERANCE {
            b
        } else if (b.best - a.best).abs() <= ENTROPY_TIE_TOLERANCE {
            a.count += b.count;
            a.radius_one_only &= b.radius_one_only;
            a.counts.extend(b.counts);
            a
        } else {
            a
        }
    };
    let shards: Vec<Acc> = (0..GRAPH_SHARDS)
        .into_par_iter()
        .map(|shard| {
            let mut acc = empty();
            for g in connected_graphs_shard(n, shard, GRAPH_SHARDS).expect("valid shard") {
                let prof = distance_profile(&g);
                let v = prof.eccentricity_entropy().expect("n >= 2").value();
                let one = Acc {
                    best: v,
                    count: 1,
                    radius_one_only: prof.radius == 1,
                    counts: BTreeSet::from([g.universal_vertex_count()]),
                    witness: None,
                };
                let replaced = v < acc.best - ENTROPY_TIE_TOLERANCE;
                acc = merge(acc, one);
                if replaced {
                    acc.witness = Some(g);
                }
            }
            acc
        })
        .collect();
    let acc = shards.into_iter().reduce(merge).expect("at least one shard");
    let (expected_k, _) = argmin_radius_one(n, (1..=n).filter(|&k| k + 1 != n));
    let witness = acc.witness.expect("every order has a connected graph");
    Ok(IeccBruteForce {
        record: SearchRecord {
            n,
            measure: Measure::Eccentricity,
            params: Params::UniversalVertices { k: witness.universal_vertex_count() },
            value: EntropyBits::clamped(acc.best, n),
            witnesses: vec![Witness::Graph(witness)],
        },
        minimizer_count: acc.count,
        radius_one_only: acc.radius_one_only,
        universal_counts: acc.counts,
        expected_k,
    })
}

/// The three largest eccentricity-entropy values over all trees.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Top3Report {
    pub records: Vec<SearchRecord>,
    /// Each rank is achieved only by the expected eccentricity class:
    /// diameter 3, then `(3,3,4,…,4,5,5)`, then the star.
    pub classes_match: bool,
    /// The values agree with the explicit constructions to `1e-12`.
    pub constructions_match: bool,
    pub strictly_decreasing: bool,
}

impl Top3Report {
    pub fn passes(&self) -> bool {
        self.records.len() == 3 && self.classes_match && self.constructions_match && self.strictly_decreasing
    }
}

fn ecc_classes(multiset: &[u32]) -> Vec<(u64, u64)> {
    let mut out: Vec<(u64, u64)> = Vec::new();
    for &e in multiset {
        match out.last_mut() {
            Some((v, m)) if *v == e as u64 => *m += 1,
            _ => out.push((e as u64, 1)),
        }
    }
    out
}

/// Exhaustive top-3 eccentricity-entropy values over trees of order `n`
/// (`6 <= n <= 18`).
pub fn max_iecc_trees_top3(n: usize) -> Result<Top3Report> {
    if !(6..=MAX_TREE_ORDER).contains(&n) {
        return Err(domain(format!("max_iecc_trees_top3 needs 6 <= n <= {MAX_TREE_ORDER}, got {n}")));
    }
    struct Group {
        value: f64,
        witness: Graph,
        multisets: BTreeSet<Vec<u32>>,
    }
    let mut groups: Vec<Group> = Vec::new();
    for t in free_trees(n)? {
        let prof = distance_profile(&t);
        let v = prof.eccentricity_entropy()?.value();
        let ms = prof.ecc_multiset();
        if let Some(g) = groups.iter_mut().find(|g| (g.value - v).abs() <= ENTROPY_TIE_TOLERANCE) {
            g.multisets.insert(ms);
            continue;
        }
        groups.push(Group { value: v, witness: t, multisets: BTreeSet::from([ms]) });
        groups.sort_by(|a, b| b.value.total_cmp(&a.value));
        groups.truncate(3);
    }
    let expected_graphs = [make_t3(n)?, make_t5(n)?, make_star(n)?];
    let mut classes_match = groups.len() == 3;
    let mut constructions_match = groups.len() == 3;
    for (g, e) in groups.iter().zip(&expected_graphs) {
        let prof = distance_profile(e);
        let expected = prof.ecc_multiset();
        classes_match &= g.multisets.len() == 1 && g.multisets.contains(&expected);
        let ev = prof.eccentricity_entropy()?.value();
        constructions_match &= (ev - g.value).abs() <= ENTROPY_TIE_TOLERANCE;
    }
    let strictly_decreasing = groups.windows(2).all(|w| w[0].value > w[1].value + ENTROPY_TIE_TOLERANCE);
    let records = groups
        .into_iter()
        .map(|g| SearchRecord {
            n,
            measure: Measure::Eccentricity,
            params: Params::None,
            value: EntropyBits::clamped(g.value, n),
            witnesses: vec![Witness::Graph(g.witness)],
        })
        .collect();
    Ok(Top3Report { records, classes_match, constructions_match, strictly_decreasing })
}

/// Maximum eccentricity-entropy among trees of order `n` and diameter `d`:
/// the diametral-path eccentricities are fixed and the remaining
/// `n − d − 1` vertices all take the best feasible integer fill value `b`
/// in `[⌈d/2⌉ + 1, d]`.
pub fn max_iecc_tree_given_diam(n: usize, d: usize) -> Result<SearchRecord> {
    if d < 3 || d + 2 > n {
        return Err(domain(format!("need 3 <= d and n - d - 1 >= 1, got n={n}, d={d}")));
    }
    let path_ecc = diametral_path_eccentricities(d);
    let fixed = WeightSequence::new(path_ecc.iter().map(|&e| e as f64).collect())?;
    let copies = (n - d - 1) as u64;
    let lo = min_leaf_eccentricity(d);
    let free = optimal_integer_fill(&fixed, copies)? as usize;
    // entropy is unimodal in a constant fill, so clamping keeps optimality
    let b = free.clamp(lo, d);
    let value = entropy_with_fill(&fixed, b as f64, copies)?;
    let mut classes: Vec<u64> = path_ecc;
    classes.extend(std::iter::repeat(b as u64).take(copies as usize));
    classes.sort_unstable();
    let ms: Vec<u32> = classes.iter().map(|&e| e as u32).collect();
    Ok(SearchRecord {
        n,
        measure: Measure::Eccentricity,
        params: Params::LeafEccentricity { b },
        value,
        witnesses: vec![Witness::Classes(ecc_classes(&ms))],
    })
}

/// Like [`max_iecc_tree_given_diam`], but witnessed by the caterpillar
/// itself; only sensible for moderate `n`.
pub fn max_iecc_tree_given_diam_graph(n: usize, d: usize) -> Result<(SearchRecord, Graph)> {
    let rec = max_iecc_tree_given_diam(n, d)?;
    let Params::LeafEccentricity { b } = rec.params else {
        unreachable!("diameter search always reports a fill value")
    };
    Ok((rec, make_diam_tree(n, d, b)?))
}

/// Exhaustive maximum eccentricity-entropy over all trees of order `n` and
/// diameter `d`; `None` when no such tree exists.
pub fn max_iecc_tree_given_diam_bruteforce(n: usize, d: usize) -> Result<Option<SearchRecord>> {
    let mut best: Option<(f64, Vec<Graph>)> = None;
    for t in free_trees(n)? {
        let prof = distance_profile(&t);
        if prof.diameter as usize != d {
            continue;
        }
        let v = prof.eccentricity_entropy()?.value();
        match &mut best {
            Some((bv, ws)) if (v - *bv).abs() <= ENTROPY_TIE_TOLERANCE => ws.push(t),
            Some((bv, _)) if v <= *bv => {}
            _ => best = Some((v, vec![t])),
        }
    }
    Ok(best.map(|(v, ws)| SearchRecord {
        n,
        measure: Measure::Eccentricity,
        params: Params::None,
        value: EntropyBits::clamped(v, n),
        witnesses: ws.into_iter().map(Witness::Graph).collect(),
    }))
}

/// Outcome of a single verification.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub check: String,
    pub n: Option<usize>,
    pub pass: bool,
    pub detail: String,
    /// Counterexample or supporting graph as an edge list.
    pub witness: Option<String>,
}

/// A named collection of checks, PASS/FAIL per entry.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<CheckOutcome>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report { suite: suite.into(), checks: Vec::new() }
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    fn push(&mut self, check: &str, n: Option<usize>, pass: bool, detail: String, witness: Option<String>) {
        self.checks.push(CheckOutcome { check: check.to_string(), n, pass, detail, witness });
    }
}

/// Checks that every non-star tree of each order in `range` has strictly
/// smaller Wiener-entropy than the star.
pub fn verify_conjecture_star_iw(range: std::ops::RangeInclusive<usize>) -> Result<Report> {
    if *range.start() < 5 || *range.end() > MAX_TREE_ORDER {
        return Err(domain(format!("star conjecture range must lie in [5, {MAX_TREE_ORDER}]")));
    }
    let mut report = Report::new("star-iw");
    for n in range {
        let star_value = broom_class_profile(n, 1)?.wiener_entropy()?.value();
        let mut runner_up: Option<(f64, Graph)> = None;
        let mut trees = 0usize;
        for t in free_trees(n)? {
            trees += 1;
            if t.is_star_centered_at((0..n).max_by_key(|&v| t.degree(v)).unwrap_or(0)) {
                continue;
            }
            let v = distance_profile(&t).wiener_entropy()?.value();
            if runner_up.as_ref().map_or(true, |(best, _)| v > *best) {
                runner_up = Some((v, t));
            }
        }
        let (v, t) = runner_up.expect("n >= 5 has non-star trees");
        let margin = star_value - v;
        let pass = margin > ENTROPY_TIE_TOLERANCE;
        report.push(
            "star-iw",
            Some(n),
            pass,
            format!("{trees} trees; I_w(star) = {star_value:.10}, best non-star = {v:.10}, margin {margin:.3e}"),
            Some(write_edge_list(&t)),
        );
    }
    Ok(report)
}

/// Per-order tallies of the transmission-lemma checks.
#[derive(Debug, Default, Clone)]
struct LemmaTally {
    graphs: usize,
    bound_failures: usize,
    equality_mismatches: usize,
    min_sigma_failures: usize,
    edge_failures: usize,
    edge_equality_mismatches: usize,
    counterexample: Option<Graph>,
}

impl LemmaTally {
    fn merge(mut self, other: LemmaTally) -> LemmaTally {
        self.graphs += other.graphs;
        self.bound_failures += other.bound_failures;
        self.equality_mismatches += other.equality_mismatches;
        self.min_sigma_failures += other.min_sigma_failures;
        self.edge_failures += other.edge_failures;
        self.edge_equality_mismatches += other.edge_equality_mismatches;
        self.counterexample = self.counterexample.or(other.counterexample);
        self
    }

    fn check(&mut self, g: &Graph) {
        let n = g.order() as u64;
        let prof = distance_profile(g);
        let before = self.failures();
        for v in 0..g.order() {
            let lhs = (n - 1) * prof.sigma[v];
            if lhs < prof.wiener {
                self.bound_failures += 1;
            }
            if (lhs == prof.wiener) != g.is_star_centered_at(v) {
                self.equality_mismatches += 1;
            }
            if prof.sigma[v] < n - 1 {
                self.min_sigma_failures += 1;
            }
        }
        for (u, v) in g.edges() {
            let diff = prof.sigma[u].abs_diff(prof.sigma[v]);
            if diff + 2 > n {
                self.edge_failures += 1;
            }
            if (diff + 2 == n) != (g.is_pendant(u) || g.is_pendant(v)) {
                self.edge_equality_mismatches += 1;
            }
        }
        self.graphs += 1;
        if self.failures() > before && self.counterexample.is_none() {
            self.counterexample = Some(g.clone());
        }
    }

    fn failures(&self) -> usize {
        self.bound_failures
            + self.equality_mismatches
            + self.min_sigma_failures
            + self.edge_failures
            + self.edge_equality_mismatches
    }
}

/// Exhaustive check over every connected labeled graph of each order in
/// `range` (within `[2, 7]`) of: `(n−1)σ(v) ≥ W` with equality exactly at
/// star centers; `σ(v) ≥ n − 1`; and `|σ(u) − σ(v)| ≤ n − 2` on every edge
/// with equality exactly when an endpoint is pendant.
pub fn verify_distance_lemmas(range: std::ops::RangeInclusive<usize>) -> Result<Report> {
    if *range.start() < 2 || *range.end() > 7 {
        return Err(domain("distance lemma range must lie in [2, 7]"));
    }
    let mut report = Report::new("lemmas");
    for n in range {
        let tally = (0..GRAPH_SHARDS)
            .into_par_iter()
            .map(|shard| {
                let mut t = LemmaTally::default();
                for g in connected_graphs_shard(n, shard, GRAPH_SHARDS).expect("valid shard") {
                    t.check(&g);
                }
                t
            })
            .reduce(LemmaTally::default, LemmaTally::merge);
        let wit = tally.counterexample.as_ref().map(write_edge_list);
        report.push(
            "transmission-vs-wiener",
            Some(n),
            tally.bound_failures == 0 && tally.equality_mismatches == 0,
            format!(
                "{} graphs; {} bound failures, {} equality/star-center mismatches",
                tally.graphs, tally.bound_failures, tally.equality_mismatches
            ),
            wit.clone(),
        );
        report.push(
            "transmission-differences",
            Some(n),
            tally.min_sigma_failures == 0 && tally.edge_failures == 0 && tally.edge_equality_mismatches == 0,
            format!(
                "{} graphs; {} sigma < n-1, {} edge bound failures, {} equality/pendant mismatches",
                tally.graphs, tally.min_sigma_failures, tally.edge_failures, tally.edge_equality_mismatches
            ),
            wit,
        );
    }
    Ok(report)
}

/// One row of the lower-bound trend table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrendRow {
    pub n: usize,
    pub k: usize,
    pub j: usize,
    pub value: f64,
    pub ratio: f64,
}

/// `min_iw_gnkj(n) / log2 n` for each order, checking that every ratio
/// exceeds `3/4` and that the ratios decrease as `n` grows.
pub fn lower_bound_trend(n_list: &[usize]) -> Result<(Vec<TrendRow>, Report)> {
    let mut ns = n_list.to_vec();
    ns.sort_unstable();
    ns.dedup();
    let mut rows = Vec::with_capacity(ns.len());
    for &n in &ns {
        let s = min_iw_gnkj(n, KRange::Heuristic)?;
        let value = s.record.value.value();
        rows.push(TrendRow { n, k: s.k, j: s.j, value, ratio: value / (n as f64).log2() });
    }
    let mut report = Report::new("lower-bound-trend");
    for r in &rows {
        report.push("ratio-above-three-quarters", Some(r.n), r.ratio > 0.75, format!("ratio {:.10}", r.ratio), None);
    }
    for w in rows.windows(2) {
        report.push(
            "ratio-decreasing",
            Some(w[1].n),
            w[1].ratio < w[0].ratio,
            format!("ratio({}) = {:.10} vs ratio({}) = {:.10}", w[0].n, w[0].ratio, w[1].n, w[1].ratio),
            None,
        );
    }
    Ok((rows, report))
}

/// Checks that the minimizing `G(n,k,j)` has `j = 1` at each sampled order.
pub fn verify_gnkj_j_one(n_list: &[usize]) -> Result<Report> {
    let mut report = Report::new("gnkj-j-one");
    for &n in n_list {
        let s = min_iw_gnkj(n, KRange::Heuristic)?;
        report.push(
            "gnkj-j-one",
            Some(n),
            s.j == 1,
            format!("argmin (k, j) = ({}, {}), value {:.10}", s.k, s.j, s.record.value.value()),
            None,
        );
    }
    Ok(report)
}

/// Wiener-entropy of the broom with path length `k`, relative to `log2 n`.
pub fn broom_ratio(n: usize, k: usize) -> Result<f64> {
    Ok(broom_class_profile(n, k)?.wiener_entropy()?.value() / (n as f64).log2())
}

/// Eccentricity-entropy of the star, from its two eccentricity classes.
pub fn star_iecc(n: usize) -> Result<f64> {
    if n < 3 {
        return Err(domain("star eccentricity-entropy formula needs n >= 3"));
    }
    Ok(class_entropy([(1.0, 1), (2.0, (n - 1) as u64)])?.value())
}

/// `log2(n − (1 − ln 2)/2)`.
pub fn star_iecc_lower_bound(n: usize) -> f64 {
    (n as f64 - (1.0 - std::f64::consts::LN_2) / 2.0).log2()
}

/// Verifies the radius-1 characterization of minimum eccentricity-entropy
/// for each order in `range` (within `[2, 7]`).
pub fn verify_min_iecc(range: std::ops::RangeInclusive<usize>) -> Result<Report> {
    let mut report = Report::new("min-iecc");
    for n in range {
        let r = min_iecc_graph_bruteforce(n)?;
        let pass = r.passes();
        let witness = match &r.record.witnesses[0] {
            Witness::Graph(g) => Some(write_edge_list(g)),
            _ => None,
        };
        report.push(
            "min-iecc-radius-one",
            Some(n),
            pass,
            format!(
                "min {:.10} by {} labeled graphs; universal counts {:?}, expected {}",
                r.record.value.value(),
                r.minimizer_count,
                r.universal_counts,
                r.expected_k
            ),
            witness,
        );
    }
    Ok(report)
}

/// Verifies the top-3 tree ordering for each order in `range`.
pub fn verify_top3(range: std::ops::RangeInclusive<usize>) -> Result<Report> {
    let mut report = Report::new("top3");
    for n in range {
        let r = max_iecc_trees_top3(n)?;
        let values: Vec<String> = r.records.iter().map(|x| format!("{:.10}", x.value.value())).collect();
        report.push(
            "top3-iecc-trees",
            Some(n),
            r.passes(),
            format!(
                "values [{}]; classes {} constructions {} decreasing {}",
                values.join(", "),
                r.classes_match,
                r.constructions_match,
                r.strictly_decreasing
            ),
            None,
        );
    }
    Ok(report)
}

/// Compares the closed-form diameter-constrained maximum with brute force
/// for every feasible diameter at each order in `range`.
pub fn verify_diam_trees(range: std::ops::RangeInclusive<usize>) -> Result<Report> {
    let mut report = Report::new("diam-trees");
    for n in range {
        for d in 3..=n.saturating_sub(2) {
            let formula = max_iecc_tree_given_diam(n, d)?;
            let Params::LeafEccentricity { b } = formula.params else {
                unreachable!("diameter search always reports a fill value")
            };
            let Some(brute) = max_iecc_tree_given_diam_bruteforce(n, d)? else {
                continue;
            };
            let diff = (formula.value.value() - brute.value.value()).abs();
            report.push(
                "diam-tree-max-iecc",
                Some(n),
                diff <= ENTROPY_TIE_TOLERANCE,
                format!(
                    "d = {d}: formula {:.12} (b = {b}), brute force {:.12}",
                    formula.value.value(),
                    brute.value.value()
                ),
                None,
            );
        }
    }
    Ok(report)
}
