#![no_main]

use graph_entropy::entropy::{beta_fill, h_n, h_n_direct, shannon_entropy};
use graph_entropy::WeightSequence;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|input: (Vec<f64>, u8)| {
    let (values, extra) = input;
    let Ok(a) = WeightSequence::new(values) else { return };
    let h = shannon_entropy(&a).value();
    assert!(h.is_finite() && h >= 0.0 && h <= (a.len() as f64).log2() + 1e-9);
    let beta = beta_fill(&a).beta;
    if !beta.is_finite() {
        return;
    }
    let n = a.len() + extra as usize;
    if let (Ok(x), Ok(y)) = (h_n(&a, n), h_n_direct(&a, n)) {
        assert!(x.value().is_finite() && y.value().is_finite());
    }
});
