//! Undirected simple graphs on up to 64 vertices, stored as adjacency bitset rows.
//!
//! `adj[i]` holds the full neighbor bitset of vertex `i`, so common-neighbor
//! counting is a single AND + popcount. Graphs are immutable once built and
//! cheap to clone.

use std::fmt;

use thiserror::Error;

/// Largest supported vertex count: one machine word per adjacency row.
pub const MAX_ORDER: usize = 64;

#[inline(always)]
const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the lowest `n` bits set.
#[inline(always)]
pub(crate) const fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Errors from graph construction and adjacency-matrix parsing.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph order {n} exceeds the supported maximum {MAX_ORDER}")]
    OrderTooLarge { n: usize },
    #[error("adjacency matrix is empty")]
    EmptyMatrix,
    #[error("adjacency matrix is not square: row {row} has {got} entries, expected {expected}")]
    NonSquare {
        row: usize,
        expected: usize,
        got: usize,
    },
    #[error("invalid matrix entry {token:?} at row {row}, column {col} (expected 0 or 1)")]
    InvalidEntry {
        row: usize,
        col: usize,
        token: String,
    },
    #[error("adjacency matrix is not symmetric at ({i},{j})")]
    NotSymmetric { i: usize, j: usize },
    #[error("nonzero diagonal entry at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("vertex index {index} out of range for order {order}")]
    VertexOutOfRange { index: usize, order: usize },
}

/// A subset of the vertices `0..n`, as a bitset.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    /// The empty set.
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn from_indices(indices: &[usize]) -> Self {
        let mut bits = 0u64;
        for &v in indices {
            assert!(v < MAX_ORDER, "vertex index {v} out of range");
            bits |= bit(v);
        }
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_ORDER && self.0 & bit(v) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Member vertices in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(v)
            }
        })
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut bits = 0u64;
        for v in iter {
            assert!(v < MAX_ORDER, "vertex index {v} out of range");
            bits |= bit(v);
        }
        VertexSet(bits)
    }
}

/// Undirected simple graph with vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    ///
    /// Panics if `n > MAX_ORDER`.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_ORDER, "order {n} exceeds maximum {MAX_ORDER}");
        Graph { n, adj: vec![0; n] }
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        let mask = low_mask(n);
        for i in 0..n {
            g.adj[i] = mask & !bit(i);
        }
        g
    }

    /// Graph with the given edge list. Panics on loops or out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Path on `n` vertices: 0-1-2-...-(n-1).
    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for i in 1..n {
            g.add_edge(i - 1, i);
        }
        g
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut g = Graph::path(n);
        g.add_edge(n - 1, 0);
        g
    }

    /// Star on `n` vertices: vertex 0 joined to all others.
    pub fn star(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for i in 1..n {
            g.add_edge(0, i);
        }
        g
    }

    /// Wheel on `n >= 4` vertices: hub 0 joined to every vertex of the cycle 1..n.
    pub fn wheel(n: usize) -> Self {
        assert!(n >= 4, "a wheel needs at least 4 vertices");
        let mut g = Graph::star(n);
        for i in 1..n {
            let j = if i == n - 1 { 1 } else { i + 1 };
            g.add_edge(i, j);
        }
        g
    }

    /// Builds a graph directly from adjacency rows. Validates symmetry and the
    /// zero diagonal.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self, GraphError> {
        let n = rows.len();
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge { n });
        }
        let mask = low_mask(n);
        for (i, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return Err(GraphError::VertexOutOfRange {
                    index: (row & !mask).trailing_zeros() as usize,
                    order: n,
                });
            }
            if row & bit(i) != 0 {
                return Err(GraphError::SelfLoop { vertex: i });
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if (rows[i] >> j) & 1 != (rows[j] >> i) & 1 {
                    return Err(GraphError::NotSymmetric { i, j });
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    /// Parses a whitespace-separated 0/1 adjacency matrix. Rows may also be
    /// written as contiguous digit strings. Rejects non-square, asymmetric, or
    /// loop-bearing input.
    pub fn from_adjacency_text(text: &str) -> Result<Self, GraphError> {
        let lines: Vec<&str> = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .collect();
        if lines.is_empty() {
            return Err(GraphError::EmptyMatrix);
        }
        let n = lines.len();
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge { n });
        }
        let mut rows = Vec::with_capacity(n);
        for (i, line) in lines.iter().enumerate() {
            let tokens: Vec<&str> = if line.contains(char::is_whitespace) {
                line.split_whitespace().collect()
            } else {
                // contiguous row like "0101"
                line.split("").filter(|s| !s.is_empty()).collect()
            };
            if tokens.len() != n {
                return Err(GraphError::NonSquare {
                    row: i,
                    expected: n,
                    got: tokens.len(),
                });
            }
            let mut row = 0u64;
            for (j, tok) in tokens.iter().enumerate() {
                match *tok {
                    "0" => {}
                    "1" => row |= bit(j),
                    other => {
                        return Err(GraphError::InvalidEntry {
                            row: i,
                            col: j,
                            token: other.to_string(),
                        })
                    }
                }
            }
            rows.push(row);
        }
        Graph::from_rows(rows)
    }

    /// Renders the adjacency matrix as space-separated 0/1 rows.
    pub fn to_adjacency_text(&self) -> String {
        let mut out = String::with_capacity(self.n * (2 * self.n));
        for i in 0..self.n {
            for j in 0..self.n {
                if j > 0 {
                    out.push(' ');
                }
                out.push(if self.has_edge_unchecked(i, j) {
                    '1'
                } else {
                    '0'
                });
            }
            out.push('\n');
        }
        out
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Neighbor bitset of vertex `v`.
    #[inline(always)]
    pub fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline(always)]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        assert!(u < self.n && v < self.n);
        self.adj[u] & bit(v) != 0
    }

    #[inline(always)]
    fn has_edge_unchecked(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    /// Inserts edge {u,v}. Panics on loops or out-of-range endpoints.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "edge endpoint out of range");
        assert!(u != v, "loops are not allowed");
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
    }

    #[inline(always)]
    pub fn degree(&self, v: usize) -> u32 {
        self.adj[v].count_ones()
    }

    /// Largest vertex degree; 0 for the graph with no vertices.
    pub fn max_degree(&self) -> u32 {
        self.adj.iter().map(|r| r.count_ones()).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        let total: u32 = self.adj.iter().map(|r| r.count_ones()).sum();
        (total / 2) as usize
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Edges as pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            let mut rest = self.adj[u] & !low_mask(u + 1);
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let v = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some((u, v))
                }
            })
        })
    }

    /// The graph with exactly the non-edges of `self`.
    pub fn complement(&self) -> Graph {
        let mask = low_mask(self.n);
        let adj = (0..self.n).map(|i| !self.adj[i] & mask & !bit(i)).collect();
        Graph { n: self.n, adj }
    }

    /// Induced subgraph on the vertices of `set`, relabeled by increasing
    /// original index.
    pub fn induced_subgraph(&self, set: VertexSet) -> Result<Graph, GraphError> {
        if let Some(index) = set.iter().find(|&v| v >= self.n) {
            return Err(GraphError::VertexOutOfRange {
                index,
                order: self.n,
            });
        }
        let verts: Vec<usize> = set.iter().collect();
        Ok(self.induced_on_sorted(&verts))
    }

    /// Induced subgraph on strictly increasing, in-range vertex indices.
    pub(crate) fn induced_on_sorted(&self, verts: &[usize]) -> Graph {
        let k = verts.len();
        let mut adj = vec![0u64; k];
        for (a, &va) in verts.iter().enumerate() {
            let row = self.adj[va];
            for (b, &vb) in verts.iter().enumerate().skip(a + 1) {
                if row & bit(vb) != 0 {
                    adj[a] |= bit(b);
                    adj[b] |= bit(a);
                }
            }
        }
        Graph { n: k, adj }
    }

    /// Upper-triangle adjacency bits packed row-major, most significant bit
    /// first: pair (0,1) occupies the top bit, then (0,2), ..., (n-2,n-1).
    /// Requires `n <= 16` so the result fits in 128 bits.
    pub fn upper_triangle_bits(&self) -> u128 {
        assert!(self.n <= 16, "upper_triangle_bits requires order <= 16");
        let total = self.n * (self.n.saturating_sub(1)) / 2;
        let mut bits = 0u128;
        let mut pos = 0;
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.has_edge_unchecked(i, j) {
                    bits |= 1u128 << (total - 1 - pos);
                }
                pos += 1;
            }
        }
        bits
    }

    /// Inverse of [`Graph::upper_triangle_bits`].
    pub fn from_upper_triangle_bits(n: usize, bits: u128) -> Graph {
        assert!(n <= 16, "from_upper_triangle_bits requires order <= 16");
        let total = n * n.saturating_sub(1) / 2;
        let mut g = Graph::empty(n);
        let mut pos = 0;
        for i in 0..n {
            for j in i + 1..n {
                if bits >> (total - 1 - pos) & 1 != 0 {
                    g.add_edge(i, j);
                }
                pos += 1;
            }
        }
        g
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, edges={:?})",
            self.n,
            self.edges().collect::<Vec<_>>()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_graph_orders() {
        assert_eq!(Graph::empty(0).order(), 0);
        let g = Graph::empty(3);
        assert_eq!(g.order(), 3);
        assert_eq!(g.edge_count(), 0);
        let g = Graph::empty(8);
        assert_eq!(g.complement().edge_count(), 28);
    }

    #[test]
    fn constructors() {
        assert_eq!(Graph::complete(4).edge_count(), 6);
        assert_eq!(Graph::path(4).edge_count(), 3);
        assert_eq!(Graph::cycle(5).edge_count(), 5);
        assert_eq!(Graph::star(4).edge_count(), 3);
        let w = Graph::wheel(8);
        assert_eq!(w.edge_count(), 14);
        assert_eq!(w.degree(0), 7);
        for v in 1..8 {
            assert_eq!(w.degree(v), 3);
        }
    }

    #[test]
    fn complement_is_involution() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (3, 4)]);
        assert_eq!(g.complement().complement(), g);
        assert_eq!(g.edge_count() + g.complement().edge_count(), 5 * 4 / 2);
    }

    #[test]
    fn complement_examples() {
        assert_eq!(Graph::complete(3).complement(), Graph::empty(3));
        // P3 -> single edge plus isolated vertex
        let p3c = Graph::path(3).complement();
        assert_eq!(p3c.edge_count(), 1);
        assert!(p3c.has_edge(0, 2));
    }

    #[test]
    fn induced_subgraphs() {
        let k4 = Graph::complete(4);
        let sub = k4
            .induced_subgraph(VertexSet::from_indices(&[0, 2, 3]))
            .unwrap();
        assert_eq!(sub, Graph::complete(3));

        // hub + two adjacent rim vertices of the wheel form a triangle
        let w = Graph::wheel(8);
        let sub = w
            .induced_subgraph(VertexSet::from_indices(&[0, 1, 2]))
            .unwrap();
        assert_eq!(sub, Graph::complete(3));

        let none = k4.induced_subgraph(VertexSet::EMPTY).unwrap();
        assert_eq!(none.order(), 0);

        assert!(matches!(
            k4.induced_subgraph(VertexSet::from_indices(&[0, 5])),
            Err(GraphError::VertexOutOfRange { index: 5, .. })
        ));
    }

    #[test]
    fn induced_commutes_with_complement() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (1, 4)]);
        let s = VertexSet::from_indices(&[0, 1, 3, 4]);
        assert_eq!(
            g.induced_subgraph(s).unwrap().complement(),
            g.complement().induced_subgraph(s).unwrap()
        );
    }

    #[test]
    fn matrix_text_round_trip() {
        let g = Graph::from_adjacency_text("0 1\n1 0\n").unwrap();
        assert_eq!(g, Graph::complete(2));
        let text = g.to_adjacency_text();
        assert_eq!(Graph::from_adjacency_text(&text).unwrap(), g);
        // contiguous rows parse too
        assert_eq!(Graph::from_adjacency_text("01\n10\n").unwrap(), g);
    }

    #[test]
    fn matrix_text_errors() {
        assert_eq!(Graph::from_adjacency_text(""), Err(GraphError::EmptyMatrix));
        assert!(matches!(
            Graph::from_adjacency_text("0 1\n1"),
            Err(GraphError::NonSquare { .. })
        ));
        assert!(matches!(
            Graph::from_adjacency_text("0 2\n2 0"),
            Err(GraphError::InvalidEntry { .. })
        ));
        assert!(matches!(
            Graph::from_adjacency_text("0 1\n0 0"),
            Err(GraphError::NotSymmetric { .. })
        ));
        assert!(matches!(
            Graph::from_adjacency_text("1 0\n0 0"),
            Err(GraphError::SelfLoop { vertex: 0 })
        ));
    }

    #[test]
    fn upper_triangle_round_trip() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 3), (2, 4)]);
        let bits = g.upper_triangle_bits();
        assert_eq!(Graph::from_upper_triangle_bits(5, bits), g);
        // pair (0,1) is the most significant bit
        let k2 = Graph::complete(2);
        assert_eq!(k2.upper_triangle_bits(), 1);
        let first = Graph::from_edges(3, &[(0, 1)]);
        assert_eq!(first.upper_triangle_bits(), 0b100);
    }

    #[test]
    fn vertex_set_basics() {
        let s = VertexSet::from_indices(&[3, 1, 5]);
        assert_eq!(s.len(), 3);
        assert!(s.contains(1) && s.contains(3) && s.contains(5));
        assert!(!s.contains(0));
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![1, 3, 5]);
    }

    #[test]
    fn edge_iteration() {
        let g = Graph::from_edges(4, &[(2, 0), (3, 1)]);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 2), (1, 3)]);
    }
}
