//! Simple connected undirected graphs, exact distance profiles and the
//! Wiener-, eccentricity- and degree-entropies.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::entropy::{class_entropy, shannon_entropy, x_log2_x, CompensatedSum, EntropyBits, WeightSequence};
use crate::error::{domain, Error, Result};

/// Largest order accepted by [`Graph::from_edges`].
pub const MAX_ORDER: usize = 1 << 22;

/// A simple, connected, undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "EdgeListRepr", try_from = "EdgeListRepr")]
pub struct Graph {
    adj: Vec<Vec<u32>>,
    size: usize,
}

impl Graph {
    /// Builds a graph, rejecting loops, repeated edges, out-of-range
    /// endpoints and disconnected results.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(domain("a graph needs at least one vertex"));
        }
        if n > MAX_ORDER {
            return Err(domain(format!("order {n} exceeds the supported maximum {MAX_ORDER}")));
        }
        let mut adj: Vec<Vec<u32>> = vec![Vec::new(); n];
        let mut size = 0usize;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(domain(format!("edge ({u}, {v}) has an endpoint outside 0..{n}")));
            }
            if u == v {
                return Err(domain(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v as u32);
            adj[v].push(u as u32);
            size += 1;
        }
        for (v, nb) in adj.iter_mut().enumerate() {
            nb.sort_unstable();
            if let Some(w) = nb.windows(2).find(|w| w[0] == w[1]) {
                return Err(domain(format!("repeated edge ({v}, {})", w[0])));
            }
        }
        let g = Graph { adj, size };
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(g)
    }

    /// Order `n`.
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges `m`.
    pub fn size(&self) -> usize {
        self.size
    }

    /// Sorted neighbours of `v`.
    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.adj[u].binary_search(&(v as u32)).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, nb)| {
            nb.iter().map(|&v| v as usize).filter(move |&v| u < v).map(move |v| (u, v))
        })
    }

    pub fn is_tree(&self) -> bool {
        self.size + 1 == self.order()
    }

    /// Vertices of degree `n − 1`.
    pub fn universal_vertex_count(&self) -> usize {
        let n = self.order();
        self.adj.iter().filter(|nb| nb.len() + 1 == n).count()
    }

    /// Pendant (degree-one) vertex test.
    pub fn is_pendant(&self, v: usize) -> bool {
        self.degree(v) == 1
    }

    /// A star with `v` as its center (every other vertex is a leaf on `v`).
    pub fn is_star_centered_at(&self, v: usize) -> bool {
        self.is_tree() && self.degree(v) + 1 == self.order()
    }

    fn is_connected(&self) -> bool {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                let w = w as usize;
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }
}

#[derive(Serialize, Deserialize)]
struct EdgeListRepr {
    order: usize,
    edges: Vec<(usize, usize)>,
}

impl From<Graph> for EdgeListRepr {
    fn from(g: Graph) -> Self {
        EdgeListRepr { order: g.order(), edges: g.edges().collect() }
    }
}

impl TryFrom<EdgeListRepr> for Graph {
    type Error = Error;

    fn try_from(r: EdgeListRepr) -> Result<Self> {
        Graph::from_edges(r.order, r.edges)
    }
}

/// Shortest-path distances from `v` to every vertex.
pub fn bfs_distances(g: &Graph, v: usize) -> Result<Vec<u32>> {
    if v >= g.order() {
        return Err(domain(format!("vertex {v} is outside 0..{}", g.order())));
    }
    Ok(bfs_lists(g, v))
}

fn bfs_lists(g: &Graph, source: usize) -> Vec<u32> {
    let mut dist = vec![u32::MAX; g.order()];
    let mut queue = VecDeque::with_capacity(g.order());
    dist[source] = 0;
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let next = dist[u] + 1;
        for &w in g.neighbors(u) {
            let w = w as usize;
            if dist[w] == u32::MAX {
                dist[w] = next;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Adjacency rows as bitsets, used for BFS on dense graphs.
struct BitRows {
    words: usize,
    bits: Vec<u64>,
}

impl BitRows {
    fn new(g: &Graph) -> Self {
        let n = g.order();
        let words = n.div_ceil(64);
        let mut bits = vec![0u64; n * words];
        for u in 0..n {
            let row = &mut bits[u * words..(u + 1) * words];
            for &w in g.neighbors(u) {
                row[w as usize / 64] |= 1 << (w % 64);
            }
        }
        BitRows { words, bits }
    }

    fn row(&self, u: usize) -> &[u64] {
        &self.bits[u * self.words..(u + 1) * self.words]
    }

    /// Returns `(eccentricity, transmission)` of `source`.
    fn bfs_summary(&self, n: usize, source: usize, visited: &mut [u64], next: &mut [u64]) -> (u32, u64) {
        visited.fill(0);
        visited[source / 64] |= 1 << (source % 64);
        let mut frontier = vec![source];
        let mut level = 0u32;
        let mut sigma = 0u64;
        let mut reached = 1usize;
        while reached < n {
            next.fill(0);
            for &u in &frontier {
                for (acc, r) in next.iter_mut().zip(self.row(u)) {
                    *acc |= *r;
                }
            }
            level += 1;
            frontier.clear();
            for (i, (acc, vis)) in next.iter_mut().zip(visited.iter_mut()).enumerate() {
                let mut fresh = *acc & !*vis;
                *vis |= fresh;
                while fresh != 0 {
                    let b = fresh.trailing_zeros() as usize;
                    frontier.push(i * 64 + b);
                    fresh &= fresh - 1;
                }
            }
            if frontier.is_empty() {
                break;
            }
            reached += frontier.len();
            sigma += level as u64 * frontier.len() as u64;
        }
        (level, sigma)
    }
}

/// Per-vertex eccentricities and transmissions plus the global distance
/// invariants, all in exact integer arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceProfile {
    pub ecc: Vec<u32>,
    pub sigma: Vec<u64>,
    pub diameter: u32,
    pub radius: u32,
    pub wiener: u64,
}

impl DistanceProfile {
    fn from_parts(ecc: Vec<u32>, sigma: Vec<u64>) -> Self {
        let diameter = ecc.iter().copied().max().unwrap_or(0);
        let radius = ecc.iter().copied().min().unwrap_or(0);
        let total: u64 = sigma.iter().sum();
        DistanceProfile { ecc, sigma, diameter, radius, wiener: total / 2 }
    }

    pub fn order(&self) -> usize {
        self.ecc.len()
    }

    /// Wiener-entropy via `log2(2W) − (1 / 2W) Σ σ log2 σ`.
    pub fn wiener_entropy(&self) -> Result<EntropyBits> {
        let n = self.order();
        if n < 2 {
            return Err(domain("Wiener-entropy needs at least two vertices"));
        }
        let two_w = (2 * self.wiener) as f64;
        let weighted = self
            .sigma
            .iter()
            .map(|&s| x_log2_x(s as f64))
            .sum::<CompensatedSum>()
            .value();
        Ok(EntropyBits::clamped(two_w.log2() - weighted / two_w, n))
    }

    pub fn eccentricity_entropy(&self) -> Result<EntropyBits> {
        if self.order() < 2 {
            return Err(domain("eccentricity-entropy needs at least two vertices"));
        }
        class_entropy(self.ecc.iter().map(|&e| (e as f64, 1)))
    }

    pub fn is_transmission_regular(&self) -> bool {
        self.sigma.windows(2).all(|w| w[0] == w[1])
    }

    /// Eccentricities sorted ascending.
    pub fn ecc_multiset(&self) -> Vec<u32> {
        let mut e = self.ecc.clone();
        e.sort_unstable();
        e
    }
}

/// Graphs up to this order with enough edges use the bitset BFS.
const BITSET_MAX_ORDER: usize = 4096;

/// Exact distance profile via a BFS from every vertex.
pub fn distance_profile(g: &Graph) -> DistanceProfile {
    let n = g.order();
    let words = n.div_ceil(64);
    if n <= BITSET_MAX_ORDER && 2 * g.size() >= n * words {
        distance_profile_bitset(g)
    } else {
        distance_profile_lists(g)
    }
}

pub(crate) fn distance_profile_lists(g: &Graph) -> DistanceProfile {
    let n = g.order();
    let mut ecc = Vec::with_capacity(n);
    let mut sigma = Vec::with_capacity(n);
    for v in 0..n {
        let d = bfs_lists(g, v);
        ecc.push(d.iter().copied().max().unwrap_or(0));
        sigma.push(d.iter().map(|&x| x as u64).sum());
    }
    DistanceProfile::from_parts(ecc, sigma)
}

pub(crate) fn distance_profile_bitset(g: &Graph) -> DistanceProfile {
    let n = g.order();
    let rows = BitRows::new(g);
    let mut visited = vec![0u64; rows.words];
    let mut next = vec![0u64; rows.words];
    let (ecc, sigma) = (0..n)
        .map(|v| rows.bfs_summary(n, v, &mut visited, &mut next))
        .unzip();
    DistanceProfile::from_parts(ecc, sigma)
}

/// Entropy of an arbitrary positive per-vertex functional.
pub fn generic_entropy<F>(g: &Graph, f: F) -> Result<EntropyBits>
where
    F: Fn(usize) -> f64,
{
    let values: Vec<f64> = (0..g.order()).map(f).collect();
    let seq = WeightSequence::new(values)?;
    Ok(shannon_entropy(&seq))
}

pub fn wiener_entropy(g: &Graph) -> Result<EntropyBits> {
    distance_profile(g).wiener_entropy()
}

pub fn eccentricity_entropy(g: &Graph) -> Result<EntropyBits> {
    distance_profile(g).eccentricity_entropy()
}

pub fn degree_entropy(g: &Graph) -> Result<EntropyBits> {
    if g.order() < 2 {
        return Err(domain("degree-entropy needs at least two vertices"));
    }
    class_entropy(g.degrees().into_iter().map(|d| (d as f64, 1)))
}
