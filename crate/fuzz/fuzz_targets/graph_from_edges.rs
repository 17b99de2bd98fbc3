#![no_main]

use graph_entropy::graph::{bfs_distances, distance_profile, eccentricity_entropy, wiener_entropy};
use graph_entropy::Graph;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|input: (u8, Vec<(u8, u8)>)| {
    let (order, pairs) = input;
    let n = order as usize % 64;
    let edges = pairs.into_iter().map(|(u, v)| (u as usize, v as usize));
    let Ok(g) = Graph::from_edges(n, edges) else { return };
    let p = distance_profile(&g);
    for v in 0..n {
        let d = bfs_distances(&g, v).unwrap();
        assert_eq!(d.iter().map(|&x| x as u64).sum::<u64>(), p.sigma[v]);
        assert_eq!(d.iter().copied().max().unwrap_or(0), p.ecc[v]);
    }
    if n >= 2 {
        let log_n = (n as f64).log2();
        for h in [wiener_entropy(&g).unwrap().value(), eccentricity_entropy(&g).unwrap().value()] {
            assert!(h >= 0.0 && h <= log_n + 1e-12);
        }
    }
});
