//! Named graph families and closed-form transmission profiles.
//!
//! Vertex numbering is fixed so that dumps and tests can refer to vertices
//! by role:
//!
//! * paths, brooms and `G(n,k,j)` put the path on `0..k`, vertex 0 being the
//!   end that carries the pendants (broom) or the clique attachments
//!   (`G(n,k,j)`);
//! * in `G(n,k,j)` the clique occupies `k..n` and its first `j` vertices are
//!   the ones joined to vertex 0.
//!
//! The closed forms below are cross-checked against BFS for every parameter
//! choice up to order 200 in the acceptance suite.
//!
//! For the broom, the decomposition `W = C(k+1,3) + (n−k)² + (n−k)·C(k+1,2)`
//! that is sometimes quoted overcounts lower-order terms (it gives 19 for
//! the broom with `n = 5, k = 2`, whose Wiener index is 16); the profile
//! here sums exact per-class transmissions instead.

use serde::{Deserialize, Serialize};

use crate::entropy::{class_entropy, EntropyBits};
use crate::error::{domain, Result};
use crate::graph::Graph;

/// Vertices sharing one transmission value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexClass {
    pub transmission: u64,
    pub multiplicity: u64,
}

/// Transmissions grouped by vertex class; enough to evaluate the
/// Wiener-entropy in time proportional to the number of classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassProfile {
    pub classes: Vec<VertexClass>,
    pub wiener: u64,
}

impl ClassProfile {
    fn from_classes(classes: Vec<VertexClass>) -> Self {
        let classes: Vec<VertexClass> = classes.into_iter().filter(|c| c.multiplicity > 0).collect();
        let total: u64 = classes.iter().map(|c| c.transmission * c.multiplicity).sum();
        ClassProfile { classes, wiener: total / 2 }
    }

    pub fn order(&self) -> u64 {
        self.classes.iter().map(|c| c.multiplicity).sum()
    }

    pub fn wiener_entropy(&self) -> Result<EntropyBits> {
        if self.order() < 2 {
            return Err(domain("Wiener-entropy needs at least two vertices"));
        }
        class_entropy(self.classes.iter().map(|c| (c.transmission as f64, c.multiplicity)))
    }

    /// Every transmission, expanded and sorted ascending.
    pub fn sorted_transmissions(&self) -> Vec<u64> {
        let mut out: Vec<u64> = self
            .classes
            .iter()
            .flat_map(|c| std::iter::repeat(c.transmission).take(c.multiplicity as usize))
            .collect();
        out.sort_unstable();
        out
    }
}

/// Sum of distances from the vertex at position `i` of `P_k` to the other
/// path vertices.
fn path_internal(k: u64, i: u64) -> u64 {
    i * (i + 1) / 2 + (k - 1 - i) * (k - i) / 2
}

pub fn make_path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(domain("path needs at least one vertex"));
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// Star `S_n`: center 0 joined to `n − 1` leaves.
pub fn make_star(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(domain("star needs at least one vertex"));
    }
    Graph::from_edges(n, (1..n).map(|i| (0, i)))
}

pub fn make_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(domain(format!("cycle needs at least 3 vertices, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn make_complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(domain("complete graph needs at least one vertex"));
    }
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

fn check_broom(n: usize, k: usize) -> Result<()> {
    if k == 0 || k > n {
        return Err(domain(format!("broom needs 1 <= k <= n, got n={n}, k={k}")));
    }
    Ok(())
}

/// Broom: path `P_k` on `0..k` with `n − k` pendants on vertex 0.
pub fn make_broom(n: usize, k: usize) -> Result<Graph> {
    check_broom(n, k)?;
    let path = (1..k).map(|i| (i - 1, i));
    let leaves = (k..n).map(|l| (0, l));
    Graph::from_edges(n, path.chain(leaves))
}

pub fn broom_class_profile(n: usize, k: usize) -> Result<ClassProfile> {
    check_broom(n, k)?;
    let (n, k) = (n as u64, k as u64);
    let leaves = n - k;
    let mut classes: Vec<VertexClass> = (0..k)
        .map(|i| VertexClass {
            transmission: path_internal(k, i) + leaves * (i + 1),
            multiplicity: 1,
        })
        .collect();
    if leaves > 0 {
        classes.push(VertexClass {
            transmission: k * (k + 1) / 2 + 2 * (leaves - 1),
            multiplicity: leaves,
        });
    }
    Ok(ClassProfile::from_classes(classes))
}

/// Parameters of `G(n,k,j)`: a path `P_k` and a clique `K_{n−k}` with one
/// path end joined to `j` clique vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GnkjSpec {
    pub n: usize,
    pub k: usize,
    pub j: usize,
}

impl GnkjSpec {
    pub fn new(n: usize, k: usize, j: usize) -> Result<Self> {
        if k == 0 || k >= n || j == 0 || j > n - k {
            return Err(domain(format!(
                "G(n,k,j) needs k >= 1, n - k >= 1 and 1 <= j <= n - k; got ({n},{k},{j})"
            )));
        }
        Ok(GnkjSpec { n, k, j })
    }

    pub fn clique_order(&self) -> usize {
        self.n - self.k
    }

    /// `C(n−k, 2) + j + k − 1`.
    pub fn size(&self) -> usize {
        let c = self.clique_order();
        c * (c - 1) / 2 + self.j + self.k - 1
    }
}

pub fn make_gnkj(spec: GnkjSpec) -> Result<Graph> {
    let GnkjSpec { n, k, j } = GnkjSpec::new(spec.n, spec.k, spec.j)?;
    let path = (1..k).map(|i| (i - 1, i));
    let clique = (k..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)));
    let joins = (k..k + j).map(|u| (0, u));
    Graph::from_edges(n, path.chain(joins).chain(clique))
}

/// Transmissions of `G(n,k,j)` by class: each path position, the `j`
/// attached clique vertices and the `n − k − j` unattached ones.
pub fn gnkj_class_profile(spec: GnkjSpec) -> Result<ClassProfile> {
    let GnkjSpec { n, k, j } = GnkjSpec::new(spec.n, spec.k, spec.j)?;
    let (k, j, c) = (k as u64, j as u64, (n - k) as u64);
    let mut classes: Vec<VertexClass> = (0..k)
        .map(|i| VertexClass {
            // attached clique vertices sit at distance i + 1, the rest at i + 2
            transmission: path_internal(k, i) + c * (i + 2) - j,
            multiplicity: 1,
        })
        .collect();
    let to_path = k * (k + 1) / 2;
    classes.push(VertexClass { transmission: to_path + c - 1, multiplicity: j });
    classes.push(VertexClass { transmission: to_path + k + c - 1, multiplicity: c - j });
    Ok(ClassProfile::from_classes(classes))
}

/// Diameter-3 tree: path `0-1-2`, with the remaining `n − 3` vertices as
/// pendants on vertex 2.
pub fn make_t3(n: usize) -> Result<Graph> {
    if n < 4 {
        return Err(domain(format!("T3 needs n >= 4, got {n}")));
    }
    let edges = [(0, 1), (1, 2)].into_iter().chain((3..n).map(|l| (2, l)));
    Graph::from_edges(n, edges)
}

/// Diameter-5 tree with eccentricities `(3,3,4,…,4,5,5)`: path `0..6` with
/// the remaining `n − 6` vertices as pendants on vertex 2.
pub fn make_t5(n: usize) -> Result<Graph> {
    if n < 6 {
        return Err(domain(format!("T5 needs n >= 6, got {n}")));
    }
    let edges = (1..6).map(|i| (i - 1, i)).chain((6..n).map(|l| (2, l)));
    Graph::from_edges(n, edges)
}

/// Eccentricities of a diametral path of length `d`: `max(i, d − i)`.
pub fn diametral_path_eccentricities(d: usize) -> Vec<u64> {
    (0..=d).map(|i| i.max(d - i) as u64).collect()
}

/// Smallest eccentricity a pendant on a diametral path of length `d` can
/// have: `⌈d/2⌉ + 1`.
pub fn min_leaf_eccentricity(d: usize) -> usize {
    d.div_ceil(2) + 1
}

/// Caterpillar on a diametral path `0..=d` whose `n − d − 1` pendants all
/// have eccentricity `b`; they hang on path vertex `d − b + 1`.
///
/// When `n = d + 1` the result is the path and `b` is ignored.
pub fn make_diam_tree(n: usize, d: usize, b: usize) -> Result<Graph> {
    if d < 3 || d + 1 > n {
        return Err(domain(format!("diameter tree needs 3 <= d <= n - 1, got n={n}, d={d}")));
    }
    let path = (1..=d).map(|i| (i - 1, i));
    if n == d + 1 {
        return Graph::from_edges(n, path);
    }
    if b < min_leaf_eccentricity(d) || b > d {
        return Err(domain(format!(
            "leaf eccentricity {b} outside [{}, {d}]",
            min_leaf_eccentricity(d)
        )));
    }
    let anchor = d - b + 1;
    Graph::from_edges(n, path.chain((d + 1..n).map(|l| (anchor, l))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{distance_profile, eccentricity_entropy, wiener_entropy};

    fn bfs_sorted(g: &Graph) -> Vec<u64> {
        let mut s = distance_profile(g).sigma;
        s.sort_unstable();
        s
    }

    #[test]
    fn gnkj_endpoints() {
        let k5 = make_gnkj(GnkjSpec::new(5, 1, 4).unwrap()).unwrap();
        assert_eq!(k5.size(), 10);
        assert!((wiener_entropy(&k5).unwrap().value() - 5f64.log2()).abs() < 1e-15);
        let p = make_gnkj(GnkjSpec::new(7, 6, 1).unwrap()).unwrap();
        assert!(p.is_tree());
        assert_eq!(bfs_sorted(&p), bfs_sorted(&make_path(7).unwrap()));
    }

    #[test]
    fn gnkj_figure_example() {
        let spec = GnkjSpec::new(14, 6, 4).unwrap();
        let g = make_gnkj(spec).unwrap();
        assert_eq!((g.order(), g.size(), spec.size()), (14, 37, 37));
        assert_eq!(bfs_sorted(&g), gnkj_class_profile(spec).unwrap().sorted_transmissions());
        // far path end: path positions 5..0, then attached and unattached clique vertices
        let d = crate::graph::bfs_distances(&g, 5).unwrap();
        assert_eq!(&d[..6], &[5, 4, 3, 2, 1, 0]);
        assert!(d[6..10].iter().all(|&x| x == 6));
        assert!(d[10..].iter().all(|&x| x == 7));
    }

    #[test]
    fn gnkj_spec_validation() {
        assert!(GnkjSpec::new(5, 0, 1).is_err());
        assert!(GnkjSpec::new(5, 5, 1).is_err());
        assert!(GnkjSpec::new(5, 2, 0).is_err());
        assert!(GnkjSpec::new(5, 2, 4).is_err());
        assert!(make_gnkj(GnkjSpec { n: 4, k: 4, j: 1 }).is_err());
    }

    #[test]
    fn gnkj_profile_examples() {
        let p = gnkj_class_profile(GnkjSpec::new(5, 1, 4).unwrap()).unwrap();
        assert!(p.sorted_transmissions().iter().all(|&s| s == 4));
        assert_eq!(p.wiener, 10);
        let p = gnkj_class_profile(GnkjSpec::new(32, 8, 22).unwrap()).unwrap();
        assert!((p.wiener_entropy().unwrap().value() - 4.841_878_299_4).abs() < 1e-10);
    }

    #[test]
    fn small_closed_forms_match_bfs() {
        for n in 2..=24 {
            for k in 1..n {
                for j in 1..=n - k {
                    let spec = GnkjSpec::new(n, k, j).unwrap();
                    let g = make_gnkj(spec).unwrap();
                    let p = gnkj_class_profile(spec).unwrap();
                    assert_eq!(bfs_sorted(&g), p.sorted_transmissions(), "{spec:?}");
                    assert_eq!(distance_profile(&g).wiener, p.wiener);
                }
            }
            for k in 1..=n {
                let g = make_broom(n, k).unwrap();
                assert_eq!(bfs_sorted(&g), broom_class_profile(n, k).unwrap().sorted_transmissions());
            }
        }
    }

    #[test]
    fn broom_examples() {
        assert_eq!(make_broom(5, 1).unwrap(), make_star(5).unwrap());
        let star = broom_class_profile(5, 1).unwrap();
        assert_eq!(star.sorted_transmissions(), vec![4, 7, 7, 7, 7]);
        assert_eq!(broom_class_profile(5, 2).unwrap().wiener, 16);
        assert_eq!(distance_profile(&make_broom(5, 2).unwrap()).wiener, 16);
        assert_eq!(make_broom(6, 6).unwrap(), make_path(6).unwrap());
        assert!(make_broom(5, 0).is_err());
        assert!(broom_class_profile(5, 6).is_err());
    }

    #[test]
    fn t3_and_t5_eccentricities() {
        for n in 4..=12 {
            let mut expected = vec![2u32, 2];
            expected.extend(std::iter::repeat(3).take(n - 2));
            assert_eq!(distance_profile(&make_t3(n).unwrap()).ecc_multiset(), expected);
        }
        for n in 6..=12 {
            let mut expected = vec![3u32, 3];
            expected.extend(std::iter::repeat(4).take(n - 4));
            expected.extend([5, 5]);
            assert_eq!(distance_profile(&make_t5(n).unwrap()).ecc_multiset(), expected);
        }
        assert_eq!(distance_profile(&make_t3(4).unwrap()).ecc, vec![3, 2, 2, 3]);
        assert_eq!(make_t5(6).unwrap(), make_path(6).unwrap());
        assert!(make_t3(3).is_err());
        assert!(make_t5(5).is_err());
        let h = eccentricity_entropy(&make_t3(8).unwrap()).unwrap().value();
        let closed = 22f64.log2() - (4.0 + 18.0 * 3f64.log2()) / 22.0;
        assert!((h - closed).abs() < 1e-14);
        assert!((h - 2.980_825_936_229_078_5).abs() < 1e-14);
    }

    #[test]
    fn diam_tree_examples() {
        assert_eq!(make_diam_tree(6, 5, 0).unwrap(), make_path(6).unwrap());
        let g = make_diam_tree(20, 4, 3).unwrap();
        let mut expected = vec![2u32, 3, 3, 4, 4];
        expected.extend(std::iter::repeat(3).take(15));
        expected.sort_unstable();
        assert_eq!(distance_profile(&g).ecc_multiset(), expected);
        assert!(make_diam_tree(20, 4, 2).is_err());
        assert!(make_diam_tree(20, 4, 5).is_err());
        assert!(make_diam_tree(20, 2, 2).is_err());
        assert!(make_diam_tree(4, 4, 3).is_err());
    }

    #[test]
    fn caterpillar_path_eccentricities() {
        for d in 3..=9 {
            for b in min_leaf_eccentricity(d)..=d {
                let n = d + 4;
                let g = make_diam_tree(n, d, b).unwrap();
                let prof = distance_profile(&g);
                let path = diametral_path_eccentricities(d);
                for (i, &e) in path.iter().enumerate() {
                    assert_eq!(prof.ecc[i] as u64, e);
                }
                assert!(prof.ecc[d + 1..].iter().all(|&e| e as usize == b));
                assert_eq!(prof.diameter as usize, d);
            }
        }
    }

    #[test]
    fn small_family_constructors() {
        assert_eq!(make_cycle(5).unwrap().size(), 5);
        assert!(make_cycle(2).is_err());
        assert_eq!(make_complete(5).unwrap().size(), 10);
        assert!(make_path(0).is_err());
        assert!(make_star(0).is_err());
    }
}
