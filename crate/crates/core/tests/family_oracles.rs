use graph_entropy::entropy::ENTROPY_TIE_TOLERANCE;
use graph_entropy::families::{
    broom_class_profile, diametral_path_eccentricities, gnkj_class_profile, make_broom,
    make_complete, make_diam_tree, make_gnkj, make_path, make_t3, make_t5, min_leaf_eccentricity,
};
use graph_entropy::graph::{bfs_distances, distance_profile};
use graph_entropy::search::{gnkj_curve, min_iw_gnkj, KRange};
use graph_entropy::{GnkjSpec, Graph};

fn sorted_sigma(g: &Graph) -> Vec<u64> {
    let mut s = distance_profile(g).sigma;
    s.sort_unstable();
    s
}

/// Every `G(n,k,j)` with `n <= 200` against BFS; for `n <= 120` the BFS
/// values also give an independent argmin for the search.
#[test]
fn gnkj_profiles_and_search_match_bfs() {
    for n in 3..=200 {
        let mut bfs_best: Option<(usize, usize, f64)> = None;
        for k in 1..n {
            for j in 1..=n - k {
                let spec = GnkjSpec::new(n, k, j).unwrap();
                let g = make_gnkj(spec).unwrap();
                assert_eq!(g.size(), spec.size());
                let profile = gnkj_class_profile(spec).unwrap();
                let bfs = distance_profile(&g);
                let mut sigma = bfs.sigma.clone();
                sigma.sort_unstable();
                assert_eq!(profile.sorted_transmissions(), sigma, "({n},{k},{j})");
                assert_eq!(profile.wiener, bfs.wiener);
                if n <= 120 {
                    let v = bfs.wiener_entropy().unwrap().value();
                    if bfs_best.map_or(true, |b| v < b.2 - ENTROPY_TIE_TOLERANCE) {
                        bfs_best = Some((k, j, v));
                    }
                }
            }
        }
        if let Some((k, j, v)) = bfs_best {
            let s = min_iw_gnkj(n, KRange::Full).unwrap();
            assert_eq!((s.k, s.j), (k, j), "n = {n}");
            assert!((s.record.value.value() - v).abs() < 1e-12);
        }
    }
}

#[test]
fn gnkj_boundary_identities() {
    for n in 2..=30 {
        let spec = GnkjSpec::new(n, 1, n - 1).unwrap();
        let v = gnkj_class_profile(spec).unwrap().wiener_entropy().unwrap().value();
        assert!((v - (n as f64).log2()).abs() < 1e-12);
        assert_eq!(sorted_sigma(&make_gnkj(spec).unwrap()), sorted_sigma(&make_complete(n).unwrap()));
        let spec = GnkjSpec::new(n, n - 1, 1).unwrap();
        assert!(make_gnkj(spec).unwrap().is_tree());
        assert_eq!(gnkj_class_profile(spec).unwrap().sorted_transmissions(), sorted_sigma(&make_path(n).unwrap()));
    }
}

#[test]
fn broom_profiles_match_bfs() {
    for n in 1..=200 {
        for k in 1..=n {
            let g = make_broom(n, k).unwrap();
            let p = broom_class_profile(n, k).unwrap();
            assert_eq!(p.sorted_transmissions(), sorted_sigma(&g), "broom({n},{k})");
        }
    }
}

fn sorted_ecc(g: &Graph) -> Vec<u32> {
    distance_profile(g).ecc_multiset()
}

#[test]
fn named_trees_have_expected_eccentricities() {
    for n in 4..=60 {
        let mut expected = vec![2, 2];
        expected.extend(std::iter::repeat(3).take(n - 2));
        assert_eq!(sorted_ecc(&make_t3(n).unwrap()), expected);
    }
    for n in 6..=60 {
        let mut expected = vec![3, 3];
        expected.extend(std::iter::repeat(4).take(n - 4));
        expected.extend([5, 5]);
        assert_eq!(sorted_ecc(&make_t5(n).unwrap()), expected);
    }
}

#[test]
fn caterpillars_follow_path_eccentricities() {
    for n in 5..=40 {
        for d in 3..n {
            let bs: Vec<usize> = if n == d + 1 { vec![0] } else { (min_leaf_eccentricity(d)..=d).collect() };
            for b in bs {
                let g = make_diam_tree(n, d, b).unwrap();
                assert!(g.is_tree());
                let prof = distance_profile(&g);
                assert_eq!(prof.diameter as usize, d);
                let path_ecc = diametral_path_eccentricities(d);
                for (i, &e) in path_ecc.iter().enumerate() {
                    assert_eq!(prof.ecc[i] as u64, e, "n={n} d={d} b={b} i={i}");
                    assert_eq!(bfs_distances(&g, 0).unwrap()[i] as usize, i);
                }
                assert!(prof.ecc[d + 1..].iter().all(|&e| e as usize == b));
            }
        }
    }
}

#[test]
fn chosen_j_steps_down_within_each_k() {
    let mut prev: Option<(usize, usize)> = None;
    for n in 16..=46 {
        let s = min_iw_gnkj(n, KRange::Heuristic).unwrap();
        if let Some((k, j)) = prev {
            if k == s.k {
                assert!(s.j <= j, "n = {n}: j rose from {j} to {}", s.j);
            }
        }
        prev = Some((s.k, s.j));
    }
}

#[test]
fn curve_at_48_38_is_not_monotone() {
    let curve = gnkj_curve(48, 38).unwrap();
    let up = curve.windows(2).all(|w| w[1].value >= w[0].value);
    let down = curve.windows(2).all(|w| w[1].value <= w[0].value);
    assert!(!up && !down);
}

#[test]
fn heuristic_and_full_ranges_agree() {
    for n in (3..=60).chain([97, 128, 199, 256, 331, 400, 500]) {
        let h = min_iw_gnkj(n, KRange::Heuristic).unwrap();
        let f = min_iw_gnkj(n, KRange::Full).unwrap();
        assert_eq!((h.k, h.j), (f.k, f.j), "n = {n}");
        assert_eq!(h.record.value, f.record.value);
        assert!(!h.touches_boundary);
    }
}
