//! Exhaustive generation of small trees and connected graphs.
//!
//! Free trees come from the Beyer–Hedetniemi successor on canonical level
//! sequences of rooted trees. A rooted tree is kept only when its root is a
//! center of the underlying free tree; for bicentral trees the rooting with
//! the larger rooted canonical form wins, so every free tree is produced
//! exactly once.
//!
//! Connected graphs are enumerated over labeled upper-triangle adjacency
//! masks, or, when isomorphism classes are wanted, by one-vertex extension
//! of canonical representatives.

use std::collections::HashSet;

use crate::error::{domain, Result};
use crate::graph::Graph;

/// Largest tree order supported by [`free_trees`].
pub const MAX_TREE_ORDER: usize = 18;
/// Largest graph order supported by [`connected_graphs`].
pub const MAX_GRAPH_ORDER: usize = 8;

/// Iterator over one representative of every free tree on `n` vertices.
#[derive(Debug, Clone)]
pub struct TreeIterator {
    order: usize,
    levels: Vec<usize>,
    done: bool,
}

pub fn free_trees(n: usize) -> Result<TreeIterator> {
    if n == 0 || n > MAX_TREE_ORDER {
        return Err(domain(format!("tree order must lie in 1..={MAX_TREE_ORDER}, got {n}")));
    }
    Ok(TreeIterator { order: n, levels: (0..n).collect(), done: false })
}

impl TreeIterator {
    pub fn order(&self) -> usize {
        self.order
    }

    /// Beyer–Hedetniemi successor; returns false after the star.
    fn advance(&mut self) -> bool {
        let l = &mut self.levels;
        let Some(p) = (0..l.len()).rev().find(|&i| l[i] > 1) else {
            return false;
        };
        let q = (0..p).rev().find(|&i| l[i] == l[p] - 1).expect("level sequence has a parent");
        let shift = p - q;
        for i in p..l.len() {
            l[i] = l[i - shift];
        }
        true
    }
}

impl Iterator for TreeIterator {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while !self.done {
            let parents = parents_from_levels(&self.levels);
            let keep = root_is_canonical_center(&self.levels, &parents);
            if !self.advance() {
                self.done = true;
            }
            if keep {
                return Some(tree_from_parents(&parents));
            }
        }
        None
    }
}

fn parents_from_levels(levels: &[usize]) -> Vec<usize> {
    let mut parents = vec![0usize; levels.len()];
    let mut last_at_level: Vec<usize> = vec![0; levels.len() + 1];
    for (i, &lv) in levels.iter().enumerate() {
        if i > 0 {
            parents[i] = last_at_level[lv - 1];
        }
        last_at_level[lv] = i;
    }
    parents
}

fn tree_from_parents(parents: &[usize]) -> Graph {
    Graph::from_edges(parents.len(), (1..parents.len()).map(|i| (parents[i], i)))
        .expect("parent array describes a tree")
}

/// Whether the root of this rooted tree is the center chosen to represent
/// the free tree.
fn root_is_canonical_center(levels: &[usize], parents: &[usize]) -> bool {
    let n = levels.len();
    if n <= 2 {
        return true;
    }
    // deepest level reached inside each root-child subtree
    let mut top = 0usize;
    let mut first = 0usize;
    let mut second = 0usize;
    let mut first_child = 0usize;
    let mut depth = 0usize;
    for i in 1..n {
        if levels[i] == 1 {
            if i > 1 {
                record(&mut first, &mut second, &mut first_child, depth, top);
            }
            top = i;
            depth = 1;
        } else {
            depth = depth.max(levels[i]);
        }
    }
    record(&mut first, &mut second, &mut first_child, depth, top);

    if first == second {
        return true;
    }
    if first == second + 1 {
        // bicentral: the other center is the child whose subtree is deepest
        let other = first_child;
        return rooted_form(parents, 0) >= rooted_form(parents, other);
    }
    false
}

fn record(first: &mut usize, second: &mut usize, first_child: &mut usize, depth: usize, child: usize) {
    if depth > *first {
        *second = *first;
        *first = depth;
        *first_child = child;
    } else if depth > *second {
        *second = depth;
    }
}

/// AHU-style canonical string of the tree described by `parents`, rerooted
/// at `root`.
fn rooted_form(parents: &[usize], root: usize) -> Vec<u8> {
    let n = parents.len();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for i in 1..n {
        adj[i].push(parents[i]);
        adj[parents[i]].push(i);
    }
    rooted_form_adj(&adj, root)
}

fn rooted_form_adj(adj: &[Vec<usize>], root: usize) -> Vec<u8> {
    fn rec(adj: &[Vec<usize>], v: usize, parent: usize) -> Vec<u8> {
        let mut kids: Vec<Vec<u8>> = adj[v]
            .iter()
            .filter(|&&w| w != parent)
            .map(|&w| rec(adj, w, v))
            .collect();
        kids.sort_unstable();
        let mut out = Vec::with_capacity(2 + kids.iter().map(Vec::len).sum::<usize>());
        out.push(b'(');
        for k in kids {
            out.extend(k);
        }
        out.push(b')');
        out
    }
    rec(adj, root, usize::MAX)
}

/// Centers of a tree (one or two vertices), by repeated leaf stripping.
pub fn tree_centers(g: &Graph) -> Result<Vec<usize>> {
    if !g.is_tree() {
        return Err(domain("centers are only defined here for trees"));
    }
    let n = g.order();
    if n <= 2 {
        return Ok((0..n).collect());
    }
    let mut degree = g.degrees();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for &w in g.neighbors(leaf) {
                let w = w as usize;
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    Ok(layer)
}

/// Canonical form of a free tree: two trees are isomorphic exactly when
/// their forms are equal.
pub fn tree_canonical_form(g: &Graph) -> Result<Vec<u8>> {
    let centers = tree_centers(g)?;
    let adj: Vec<Vec<usize>> = (0..g.order())
        .map(|v| g.neighbors(v).iter().map(|&w| w as usize).collect())
        .collect();
    Ok(centers
        .into_iter()
        .map(|c| rooted_form_adj(&adj, c))
        .max()
        .expect("a tree has a center"))
}

/// Number of upper-triangle slots for order `n`.
fn slot_count(n: usize) -> u32 {
    (n * (n - 1) / 2) as u32
}

fn masks_from_code(n: usize, code: u64) -> [u16; 16] {
    let mut rows = [0u16; 16];
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if code >> bit & 1 == 1 {
                rows[u] |= 1 << v;
                rows[v] |= 1 << u;
            }
            bit += 1;
        }
    }
    rows
}

fn code_connected(n: usize, rows: &[u16]) -> bool {
    let full: u16 = if n == 16 { u16::MAX } else { (1 << n) - 1 };
    let mut seen: u16 = 1;
    let mut frontier: u16 = 1;
    while frontier != 0 {
        let mut next = 0u16;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            next |= rows[v];
            f &= f - 1;
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen == full
}

fn graph_from_rows(n: usize, rows: &[u16]) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).filter(move |&v| rows[u] >> v & 1 == 1).map(move |v| (u, v)));
    Graph::from_edges(n, edges).expect("rows describe a connected simple graph")
}

/// Labeled connected graphs on `n` vertices, optionally restricted to one
/// shard of the mask space.
#[derive(Debug, Clone)]
pub struct GraphIterator {
    order: usize,
    next_code: u64,
    end_code: u64,
}

impl GraphIterator {
    pub fn order(&self) -> usize {
        self.order
    }
}

impl Iterator for GraphIterator {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next_code < self.end_code {
            let code = self.next_code;
            self.next_code += 1;
            let rows = masks_from_code(self.order, code);
            if code_connected(self.order, &rows[..self.order]) {
                return Some(graph_from_rows(self.order, &rows));
            }
        }
        None
    }
}

fn check_graph_order(n: usize) -> Result<()> {
    if n == 0 || n > MAX_GRAPH_ORDER {
        return Err(domain(format!("graph order must lie in 1..={MAX_GRAPH_ORDER}, got {n}")));
    }
    Ok(())
}

/// Every connected labeled graph on `n` vertices.
pub fn connected_graphs(n: usize) -> Result<GraphIterator> {
    connected_graphs_shard(n, 0, 1)
}

/// Shard `index` of `count` contiguous, disjoint pieces of the labeled
/// mask space; the shards together cover it exactly once.
pub fn connected_graphs_shard(n: usize, index: usize, count: usize) -> Result<GraphIterator> {
    check_graph_order(n)?;
    if count == 0 || index >= count {
        return Err(domain(format!("shard {index} of {count} is invalid")));
    }
    let total = 1u64 << slot_count(n);
    let count = count as u64;
    let index = index as u64;
    let start = total / count * index + index.min(total % count);
    let len = total / count + u64::from(index < total % count);
    Ok(GraphIterator { order: n, next_code: start, end_code: start + len })
}

/// Canonical code of a graph given by adjacency rows (`n <= 11`): the
/// largest upper-triangle code over relabelings that order vertices by
/// nonincreasing degree.
pub fn canonical_code(n: usize, rows: &[u16]) -> u64 {
    let mut verts: Vec<usize> = (0..n).collect();
    verts.sort_by_key(|&v| std::cmp::Reverse(rows[v].count_ones()));
    // cells of equal degree, in order
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for &v in &verts {
        match cells.last_mut() {
            Some(cell) if rows[cell[0]].count_ones() == rows[v].count_ones() => cell.push(v),
            _ => cells.push(vec![v]),
        }
    }
    let mut order = Vec::with_capacity(n);
    let mut best = 0u64;
    search_cells(&mut cells, 0, &mut order, rows, &mut best);
    best
}

fn search_cells(cells: &mut [Vec<usize>], ci: usize, order: &mut Vec<usize>, rows: &[u16], best: &mut u64) {
    if ci == cells.len() {
        let code = code_under(order, rows);
        if code > *best {
            *best = code;
        }
        return;
    }
    if cells[ci].is_empty() {
        search_cells(cells, ci + 1, order, rows, best);
        return;
    }
    for idx in 0..cells[ci].len() {
        let v = cells[ci].swap_remove(idx);
        order.push(v);
        search_cells(cells, ci, order, rows, best);
        order.pop();
        cells[ci].push(v);
        let last = cells[ci].len() - 1;
        cells[ci].swap(idx, last);
    }
}

/// Code of the relabeling sending `order[i]` to `i`; slot `(0,1)` is the
/// most significant bit.
fn code_under(order: &[usize], rows: &[u16]) -> u64 {
    let n = order.len();
    let mut code = 0u64;
    for a in 0..n {
        for b in a + 1..n {
            code = code << 1 | u64::from(rows[order[a]] >> order[b] & 1);
        }
    }
    code
}

fn rows_from_canonical(n: usize, code: u64) -> [u16; 16] {
    let mut rows = [0u16; 16];
    let mut bit = slot_count(n);
    for a in 0..n {
        for b in a + 1..n {
            bit -= 1;
            if code >> bit & 1 == 1 {
                rows[a] |= 1 << b;
                rows[b] |= 1 << a;
            }
        }
    }
    rows
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, in increasing canonical-code order.
pub fn connected_graph_classes(n: usize) -> Result<Vec<Graph>> {
    check_graph_order(n)?;
    let mut layer: HashSet<u64> = HashSet::from([0u64]);
    for order in 2..=n {
        let mut next = HashSet::new();
        for &code in &layer {
            let base = rows_from_canonical(order - 1, code);
            for nb in 0u16..(1 << (order - 1)) {
                let mut rows = base;
                rows[order - 1] = nb;
                for u in 0..order - 1 {
                    if nb >> u & 1 == 1 {
                        rows[u] |= 1 << (order - 1);
                    }
                }
                next.insert(canonical_code(order, &rows[..order]));
            }
        }
        layer = next;
    }
    let mut codes: Vec<u64> = layer.into_iter().collect();
    codes.sort_unstable();
    Ok(codes
        .into_iter()
        .filter_map(|code| {
            let rows = rows_from_canonical(n, code);
            code_connected(n, &rows[..n]).then(|| graph_from_rows(n, &rows))
        })
        .collect())
}

/// Adjacency rows of a graph with at most 16 vertices.
pub fn adjacency_rows(g: &Graph) -> Result<Vec<u16>> {
    if g.order() > 16 {
        return Err(domain("adjacency rows need at most 16 vertices"));
    }
    Ok((0..g.order())
        .map(|v| g.neighbors(v).iter().fold(0u16, |acc, &w| acc | 1 << w))
        .collect())
}
