//! Shannon entropy of positive weight sequences and the fill machinery built
//! on it: majorization, the entropy-maximizing fill value, its integer
//! counterpart and the padded entropy `H^n`.
//!
//! Every logarithm is base 2 and every entropy is reported in bits.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::AddAssign;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};

/// Ties in entropy comparisons are resolved at this absolute tolerance.
pub const ENTROPY_TIE_TOLERANCE: f64 = 1e-12;

/// Neumaier (improved Kahan) summation.
#[derive(Debug, Default, Clone, Copy)]
pub struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

impl AddAssign<f64> for CompensatedSum {
    fn add_assign(&mut self, rhs: f64) {
        self.add(rhs);
    }
}

impl Sum<f64> for CompensatedSum {
    fn sum<I: Iterator<Item = f64>>(iter: I) -> Self {
        let mut acc = CompensatedSum::new();
        for x in iter {
            acc.add(x);
        }
        acc
    }
}

/// `x · log2 x`, with the usual convention `0 · log 0 = 0`.
#[inline]
pub fn x_log2_x(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x * x.log2()
    }
}

/// A nonempty finite sequence of strictly positive weights.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct WeightSequence(Vec<f64>);

impl WeightSequence {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(domain("weight sequence must be nonempty"));
        }
        if let Some(bad) = values.iter().find(|x| !(x.is_finite() && **x > 0.0)) {
            return Err(domain(format!("weights must be finite and > 0, got {bad}")));
        }
        let total: f64 = values.iter().copied().sum::<CompensatedSum>().value();
        if !total.is_finite() {
            return Err(domain("sum of weights overflows"));
        }
        Ok(Self(values))
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn total(&self) -> f64 {
        self.0.iter().copied().sum::<CompensatedSum>().value()
    }

    /// `Σ a_j log2 a_j`.
    pub fn sum_x_log2_x(&self) -> f64 {
        self.0.iter().map(|&x| x_log2_x(x)).sum::<CompensatedSum>().value()
    }

    /// Values sorted from largest to smallest.
    pub fn sorted_descending(&self) -> Vec<f64> {
        let mut v = self.0.clone();
        v.sort_by(|a, b| b.partial_cmp(a).unwrap_or(Ordering::Equal));
        v
    }

    /// Whether the two sequences are equal as multisets.
    pub fn same_multiset(&self, other: &WeightSequence) -> bool {
        self.len() == other.len() && self.sorted_descending() == other.sorted_descending()
    }
}

impl TryFrom<Vec<f64>> for WeightSequence {
    type Error = Error;

    fn try_from(values: Vec<f64>) -> Result<Self> {
        Self::new(values)
    }
}

impl From<WeightSequence> for Vec<f64> {
    fn from(w: WeightSequence) -> Self {
        w.0
    }
}

/// An entropy value in bits.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EntropyBits(f64);

impl EntropyBits {
    /// Wraps a raw value, clamping rounding noise into `[0, log2 len]`.
    pub fn clamped(value: f64, len: usize) -> Self {
        let ceiling = (len as f64).log2();
        Self(value.clamp(0.0, ceiling))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl fmt::Display for EntropyBits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match f.precision() {
            Some(p) => write!(f, "{:.*}", p, self.0),
            None => write!(f, "{:.10}", self.0),
        }
    }
}

/// Entropy of the normalized sequence, `−Σ p_i log2 p_i` with `p = a / Σa`.
pub fn shannon_entropy(a: &WeightSequence) -> EntropyBits {
    let total = a.total();
    let h = a
        .values()
        .iter()
        .map(|&x| {
            let p = x / total;
            -p * p.log2()
        })
        .sum::<CompensatedSum>()
        .value();
    EntropyBits::clamped(h, a.len())
}

/// Entropy of a multiset given as `(value, multiplicity)` pairs, evaluated as
/// `log2 S − (Σ m·v·log2 v) / S`. Pairs with zero multiplicity are ignored.
pub fn class_entropy<I>(classes: I) -> Result<EntropyBits>
where
    I: IntoIterator<Item = (f64, u64)>,
{
    let mut total = CompensatedSum::new();
    let mut weighted = CompensatedSum::new();
    let mut count: u64 = 0;
    for (value, mult) in classes {
        if mult == 0 {
            continue;
        }
        if !(value.is_finite() && value > 0.0) {
            return Err(domain(format!("class value must be > 0, got {value}")));
        }
        let m = mult as f64;
        total += m * value;
        weighted += m * x_log2_x(value);
        count += mult;
    }
    if count == 0 {
        return Err(domain("empty multiset"));
    }
    let s = total.value();
    let h = s.log2() - weighted.value() / s;
    Ok(EntropyBits::clamped(h, count as usize))
}

/// Whether `a` majorizes `b`: equal totals and, for every `k`, the `k`
/// largest entries of `a` sum to at least the `k` largest of `b`.
///
/// The relation is non-strict, so every sequence majorizes itself. Sums are
/// compared with a relative tolerance of `1e-12`.
pub fn majorizes(a: &WeightSequence, b: &WeightSequence) -> Result<bool> {
    if a.len() != b.len() {
        return Err(domain(format!(
            "majorization needs equal lengths, got {} and {}",
            a.len(),
            b.len()
        )));
    }
    let sa = a.sorted_descending();
    let sb = b.sorted_descending();
    let scale = a.total().max(b.total());
    let tol = 1e-12 * scale;
    if (a.total() - b.total()).abs() > tol {
        return Ok(false);
    }
    let mut pa = CompensatedSum::new();
    let mut pb = CompensatedSum::new();
    for (x, y) in sa.iter().zip(&sb) {
        pa += *x;
        pb += *y;
        if pa.value() < pb.value() - tol {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Result of padding a fixed sequence with copies of its optimal fill value.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FillSolution {
    /// The fill value: `log2 beta = Σ a log2 a / Σ a`.
    pub beta: f64,
    /// `r = s − (Σ a) / beta`, where `s` is the length of the fixed part.
    pub r: f64,
    /// Number of appended copies of `beta`.
    pub fill_count: usize,
}

/// Closed-form entropy-maximizing fill value of a fixed sequence.
///
/// `fill_count` is zero; use [`fill_to`] to pad up to a given length.
pub fn beta_fill(a: &WeightSequence) -> FillSolution {
    let total = a.total();
    let log_beta = a.sum_x_log2_x() / total;
    let beta = log_beta.exp2();
    FillSolution {
        beta,
        r: a.len() as f64 - total / beta,
        fill_count: 0,
    }
}

/// [`beta_fill`] padded up to total length `n`.
pub fn fill_to(a: &WeightSequence, n: usize) -> Result<FillSolution> {
    if n < a.len() {
        return Err(domain(format!("target length {n} is below sequence length {}", a.len())));
    }
    Ok(FillSolution {
        fill_count: n - a.len(),
        ..beta_fill(a)
    })
}

/// Entropy of `a` followed by `copies` copies of `fill`, without
/// materializing the padded sequence.
pub fn entropy_with_fill(a: &WeightSequence, fill: f64, copies: u64) -> Result<EntropyBits> {
    let fixed = a.values().iter().map(|&x| (x, 1u64));
    class_entropy(fixed.chain(std::iter::once((fill, copies))))
}

/// Padded entropy `H^n(a)`, evaluated through the identity `log2(n − r)`.
pub fn h_n(a: &WeightSequence, n: usize) -> Result<EntropyBits> {
    let fill = fill_to(a, n)?;
    Ok(EntropyBits::clamped((n as f64 - fill.r).log2(), n))
}

/// Padded entropy `H^n(a)`, evaluated as the entropy of the filled sequence.
pub fn h_n_direct(a: &WeightSequence, n: usize) -> Result<EntropyBits> {
    let fill = fill_to(a, n)?;
    entropy_with_fill(a, fill.beta, fill.fill_count as u64)
}

/// The integer `b ∈ {⌊β⌋, ⌈β⌉}` maximizing the entropy of `a` followed by
/// `t` copies of `b`. Ties (within `1e-12`) go to `⌊β⌋`.
///
/// Every entry of `a` must exceed 1.
pub fn optimal_integer_fill(a: &WeightSequence, t: u64) -> Result<u64> {
    if t == 0 {
        return Err(domain("fill count must be at least 1"));
    }
    if let Some(bad) = a.values().iter().find(|&&x| x <= 1.0) {
        return Err(Error::Precondition(format!(
            "integer fill requires every fixed entry > 1, got {bad}"
        )));
    }
    let beta = beta_fill(a).beta;
    let lo = beta.floor();
    let hi = beta.ceil();
    if lo == hi {
        return Ok(lo as u64);
    }
    let h_lo = entropy_with_fill(a, lo, t)?.value();
    let h_hi = entropy_with_fill(a, hi, t)?.value();
    if h_hi > h_lo + ENTROPY_TIE_TOLERANCE {
        Ok(hi as u64)
    } else {
        Ok(lo as u64)
    }
}

/// `h(c) = log2(nb + c) − (c(b+1)log2(b+1) + (n−c) b log2 b) / (nb + c)`,
/// the auxiliary function whose strict convexity on `[0, n]` rules out mixed
/// floor/ceiling integer fills.
pub fn h_claim_convexity(c: f64, n: f64, b: f64) -> Result<f64> {
    if !(n > 0.0) || !n.is_finite() {
        return Err(domain(format!("n must be positive, got {n}")));
    }
    if !(b >= 1.0) || !b.is_finite() {
        return Err(domain(format!("b must be at least 1, got {b}")));
    }
    if !(0.0..=n).contains(&c) {
        return Err(domain(format!("c must lie in [0, {n}], got {c}")));
    }
    let denom = n * b + c;
    Ok(denom.log2() - (c * x_log2_x(b + 1.0) + (n - c) * x_log2_x(b)) / denom)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[f64]) -> WeightSequence {
        WeightSequence::new(v.to_vec()).unwrap()
    }

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn rejects_invalid_sequences() {
        assert!(WeightSequence::new(vec![]).is_err());
        assert!(WeightSequence::new(vec![1.0, 0.0]).is_err());
        assert!(WeightSequence::new(vec![1.0, -2.0]).is_err());
        assert!(WeightSequence::new(vec![f64::NAN]).is_err());
        assert!(WeightSequence::new(vec![f64::MAX, f64::MAX]).is_err());
    }

    #[test]
    fn shannon_examples() {
        assert!(close(shannon_entropy(&w(&[1.0, 1.0, 1.0, 1.0])).value(), 2.0, 1e-15));
        assert!(close(shannon_entropy(&w(&[5.0, 5.0])).value(), 1.0, 1e-15));
        assert!(close(shannon_entropy(&w(&[1.0, 3.0])).value(), 0.811_278_124_459_132_9, 1e-14));
        assert_eq!(shannon_entropy(&w(&[7.0])).value(), 0.0);
    }

    #[test]
    fn class_entropy_matches_expanded_sequence() {
        let expanded = shannon_entropy(&w(&[1.0, 2.0, 2.0, 2.0, 5.0])).value();
        let grouped = class_entropy([(1.0, 1), (2.0, 3), (5.0, 1), (9.0, 0)]).unwrap().value();
        assert!(close(expanded, grouped, 1e-14));
        assert!(class_entropy([(1.0, 0)]).is_err());
        assert!(class_entropy([(0.0, 2)]).is_err());
    }

    #[test]
    fn majorization_examples() {
        assert!(majorizes(&w(&[3.0, 1.0]), &w(&[2.0, 2.0])).unwrap());
        assert!(majorizes(&w(&[2.0, 2.0]), &w(&[2.0, 2.0])).unwrap());
        assert!(!majorizes(&w(&[3.0, 2.0]), &w(&[2.0, 2.0])).unwrap());
        assert!(!majorizes(&w(&[2.0, 2.0]), &w(&[3.0, 1.0])).unwrap());
        // order inside the sequences is irrelevant
        assert!(majorizes(&w(&[1.0, 3.0]), &w(&[2.0, 2.0])).unwrap());
        assert!(matches!(
            majorizes(&w(&[1.0]), &w(&[1.0, 1.0])),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn beta_fill_examples() {
        let f = beta_fill(&w(&[2.0, 2.0, 2.0]));
        assert!(close(f.beta, 2.0, 1e-14));
        assert!(close(f.r, 0.0, 1e-14));
        assert!(close(beta_fill(&w(&[1.0, 1.0])).beta, 1.0, 1e-15));
        assert!(close(beta_fill(&w(&[2.0, 8.0])).beta, 6.062_866_266_041_592, 1e-13));
    }

    #[test]
    fn fill_solution_invariants() {
        let a = w(&[2.0, 3.0, 7.5]);
        let f = fill_to(&a, 9).unwrap();
        assert_eq!(f.fill_count, 6);
        assert!(close(f.beta.log2(), a.sum_x_log2_x() / a.total(), 1e-14));
        assert!(close(f.r, 3.0 - a.total() / f.beta, 1e-14));
        assert!(f.r < 3.0);
    }

    #[test]
    fn h_n_examples() {
        let a = w(&[2.0, 2.0]);
        assert!(close(h_n(&a, 5).unwrap().value(), 5f64.log2(), 1e-14));
        let a = w(&[2.0, 8.0]);
        assert!(close(h_n(&a, 10).unwrap().value(), 3.270_436_978_997_951_8, 1e-13));
        assert!(close(h_n_direct(&a, 10).unwrap().value(), 3.270_436_978_997_951_8, 1e-13));
        assert!(h_n(&a, 1).is_err());
        assert!(h_n_direct(&a, 1).is_err());
    }

    #[test]
    fn residual_for_diameter_six_bound() {
        let a = w(&[3.0, 4.0, 4.0, 5.0, 5.0, 6.0, 6.0]);
        let r = beta_fill(&a).r;
        assert!(close(r, 0.170_134_365_449_681_3, 1e-12));
        for n in [7usize, 8, 20, 1000] {
            assert!(h_n(&a, n).unwrap().value() < (n as f64 - 0.17).log2());
        }
    }

    #[test]
    fn integer_fill_examples() {
        assert_eq!(optimal_integer_fill(&w(&[4.0, 4.0]), 2).unwrap(), 4);
        assert_eq!(optimal_integer_fill(&w(&[2.0, 8.0]), 3).unwrap(), 6);
        assert_eq!(optimal_integer_fill(&w(&[2.0, 3.0, 3.0, 4.0, 4.0]), 15).unwrap(), 3);
        assert!(matches!(
            optimal_integer_fill(&w(&[1.0, 3.0]), 2),
            Err(Error::Precondition(_))
        ));
        assert!(optimal_integer_fill(&w(&[2.0, 3.0]), 0).is_err());
    }

    #[test]
    fn integer_fill_entropies_match_oracle() {
        let a = w(&[2.0, 8.0]);
        assert!(close(entropy_with_fill(&a, 6.0, 3).unwrap().value(), 2.217_021_885_879_718, 1e-13));
        assert!(close(entropy_with_fill(&a, 7.0, 3).unwrap().value(), 2.213_730_072_863_982, 1e-13));
        let a = w(&[2.0, 3.0, 3.0, 4.0, 4.0]);
        assert!(close(entropy_with_fill(&a, 3.0, 15).unwrap().value(), 4.310_522_787_779_625, 1e-13));
        assert!(close(entropy_with_fill(&a, 4.0, 15).unwrap().value(), 4.307_009_421_281_389, 1e-13));
    }

    #[test]
    fn convexity_function_examples() {
        assert!(close(h_claim_convexity(0.0, 2.0, 1.0).unwrap(), 1.0, 1e-15));
        assert!(close(h_claim_convexity(2.0, 2.0, 1.0).unwrap(), 1.0, 1e-15));
        let h1 = h_claim_convexity(1.0, 4.0, 2.0).unwrap();
        let h2 = h_claim_convexity(2.0, 4.0, 2.0).unwrap();
        let h3 = h_claim_convexity(3.0, 4.0, 2.0).unwrap();
        assert!(close(h2, 1.970_950_594_454_668_6, 1e-14));
        assert!(h2 < (h1 + h3) / 2.0);
        assert!(h_claim_convexity(2.5, 2.0, 1.0).is_err());
        assert!(h_claim_convexity(-0.1, 2.0, 1.0).is_err());
        assert!(h_claim_convexity(1.0, 2.0, 0.5).is_err());
    }

    #[test]
    fn compensated_sum_beats_naive() {
        let mut acc = CompensatedSum::new();
        acc += 1e16;
        acc += 1.0;
        acc += -1e16;
        assert_eq!(acc.value(), 1.0);
    }

    #[test]
    fn display_uses_ten_decimals() {
        assert_eq!(EntropyBits::clamped(2.0, 4).to_string(), "2.0000000000");
        assert_eq!(format!("{:.3}", EntropyBits::clamped(1.5, 4)), "1.500");
    }
}
