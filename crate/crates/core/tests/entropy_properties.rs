use graph_entropy::entropy::{
    beta_fill, entropy_with_fill, h_claim_convexity, h_n, h_n_direct, majorizes, optimal_integer_fill,
    shannon_entropy,
};
use graph_entropy::WeightSequence;
use proptest::prelude::*;

const TOL: f64 = 1e-12;

fn seq(values: Vec<f64>) -> WeightSequence {
    WeightSequence::new(values).unwrap()
}

fn h(values: &[f64]) -> f64 {
    shannon_entropy(&seq(values.to_vec())).value()
}

fn weights(len: std::ops::Range<usize>) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(1.0f64..100.0, len)
}

/// Applies reverse Robin Hood transfers (poorer to richer), yielding a
/// sequence that majorizes the input.
fn spread(mut b: Vec<f64>, moves: &[(usize, usize, f64)]) -> Vec<f64> {
    let n = b.len();
    for &(x, y, frac) in moves {
        let (i, j) = (x % n, y % n);
        if i == j {
            continue;
        }
        let (rich, poor) = if b[i] >= b[j] { (i, j) } else { (j, i) };
        let delta = b[poor] * frac * 0.9;
        b[rich] += delta;
        b[poor] -= delta;
    }
    b
}

fn moves() -> impl Strategy<Value = Vec<(usize, usize, f64)>> {
    prop::collection::vec((0usize..64, 0usize..64, 0.05f64..1.0), 1..6)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 1000, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn entropy_is_at_most_log_length(a in weights(1..40)) {
        let n = a.len() as f64;
        prop_assert!(h(&a) <= n.log2() + TOL);
    }

    #[test]
    fn constant_sequences_reach_log_length(x in 0.5f64..1e6, n in 1usize..200) {
        let v = h(&vec![x; n]);
        prop_assert!((v - (n as f64).log2()).abs() < TOL);
    }

    #[test]
    fn majorization_strictly_lowers_entropy(b in weights(2..20), mv in moves()) {
        let a = spread(b.clone(), &mv);
        let (sa, sb) = (seq(a.clone()), seq(b.clone()));
        prop_assert!(majorizes(&sa, &sb).unwrap());
        if !sa.same_multiset(&sb) && a.iter().zip(&b).any(|(x, y)| (x - y).abs() > 1e-9) {
            prop_assert!(h(&a) < h(&b), "H(a) = {} vs H(b) = {}", h(&a), h(&b));
        }
    }

    #[test]
    fn segment_minimum_sits_at_an_endpoint(
        pairs in prop::collection::vec((1.0f64..50.0, -0.95f64..0.95), 2..12)
    ) {
        let s: Vec<f64> = pairs.iter().map(|p| p.0).collect();
        let t: Vec<f64> = pairs.iter().map(|p| p.0 * p.1).collect();
        let point = |lambda: f64| -> Vec<f64> {
            s.iter().zip(&t).map(|(x, y)| x + lambda * y).collect()
        };
        let ends = h(&point(-1.0)).min(h(&point(1.0)));
        let interior = (1..100)
            .map(|i| h(&point(-1.0 + 2.0 * i as f64 / 100.0)))
            .fold(f64::INFINITY, f64::min);
        prop_assert!(interior >= ends - TOL, "interior {interior} below endpoints {ends}");
    }

    #[test]
    fn beta_maximizes_constant_fill(a in weights(1..10), t in 1u64..30) {
        let a = seq(a);
        let beta = beta_fill(&a).beta;
        let at = |b: f64| entropy_with_fill(&a, b, t).unwrap().value();
        let peak = at(beta);
        for delta in [0.01, 0.1] {
            prop_assert!(peak >= at(beta * (1.0 + delta)) - TOL);
            prop_assert!(peak >= at(beta * (1.0 - delta)) - TOL);
        }
        let below: Vec<f64> = (0..=20).map(|i| at(beta * (0.25 + 0.75 * i as f64 / 20.0))).collect();
        let above: Vec<f64> = (0..=20).map(|i| at(beta * (1.0 + 3.0 * i as f64 / 20.0))).collect();
        prop_assert!(below.windows(2).all(|w| w[1] >= w[0] - TOL));
        prop_assert!(above.windows(2).all(|w| w[1] <= w[0] + TOL));
    }

    #[test]
    fn integer_fill_is_optimal(
        a in prop::collection::vec(2u32..30, 1..8),
        t in 1u64..12,
        samples in prop::collection::vec(prop::collection::vec(0u32..1000, 12), 8),
    ) {
        let a = seq(a.iter().map(|&x| x as f64).collect());
        let best = optimal_integer_fill(&a, t).unwrap();
        let best_h = entropy_with_fill(&a, best as f64, t).unwrap().value();
        let top = 2 * a.values().iter().cloned().fold(0.0, f64::max) as u64;
        for b in 2..=top {
            prop_assert!(best_h >= entropy_with_fill(&a, b as f64, t).unwrap().value() - TOL, "b = {b}");
        }
        let beta = beta_fill(&a).beta;
        let lo = (beta.floor() as i64 - 2).max(1) as u32;
        let hi = beta.ceil() as u32 + 2;
        for sample in &samples {
            let mut v = a.values().to_vec();
            v.extend(sample.iter().take(t as usize).map(|x| (lo + x % (hi - lo + 1)) as f64));
            prop_assert!(h(&v) <= best_h + TOL);
        }
    }

    #[test]
    fn padded_entropy_identity(a in weights(1..20), extra in 0usize..200) {
        let a = seq(a);
        let n = a.len() + extra;
        let closed = h_n(&a, n).unwrap().value();
        let direct = h_n_direct(&a, n).unwrap().value();
        prop_assert!((closed - direct).abs() < TOL, "{closed} vs {direct}");
    }

    #[test]
    fn majorization_lowers_padded_entropy(c in weights(2..15), mv in moves(), extra in 0usize..100) {
        let a = spread(c.clone(), &mv);
        let n = c.len() + extra;
        let ha = h_n(&seq(a), n).unwrap().value();
        let hc = h_n(&seq(c), n).unwrap().value();
        prop_assert!(ha <= hc + TOL, "{ha} > {hc}");
    }

    #[test]
    fn dropping_entries_raises_padded_entropy(
        a in weights(2..15),
        keep in prop::collection::vec(any::<bool>(), 15),
        extra in 0usize..100,
    ) {
        let c: Vec<f64> = a.iter().zip(&keep).filter(|p| *p.1).map(|p| *p.0).collect();
        prop_assume!(!c.is_empty());
        let n = a.len() + extra;
        let ha = h_n(&seq(a), n).unwrap().value();
        let hc = h_n(&seq(c), n).unwrap().value();
        prop_assert!(ha <= hc + TOL, "{ha} > {hc}");
    }

    #[test]
    fn mixed_fill_function_is_strictly_convex(
        (n, c) in (2u32..60).prop_flat_map(|n| (Just(n), 1..n)),
        b in 1u32..60,
    ) {
        let f = |x: u32| h_claim_convexity(x as f64, n as f64, b as f64).unwrap();
        prop_assert!(f(c) < (f(c - 1) + f(c + 1)) / 2.0);
    }
}
