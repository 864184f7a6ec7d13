//! Exact induced-subgraph density computation: fast 2- and 3-vertex profiles,
//! general small-k densities, and expected densities in the uniform random
//! graph.
//!
//! All densities are exact rationals. Counting is over induced subgraphs on
//! vertex subsets, so the isomorphism classes on k vertices partition all
//! k-subsets and their densities sum to 1.

use std::sync::OnceLock;

use thiserror::Error;

use crate::canon::{automorphism_count, canonical_code, CanonicalCode};
use crate::graph::Graph;
use crate::rational::{binomial_u128, Rational};

/// Largest subgraph order supported by [`density`] and [`expected_density`];
/// bounded by the precomputed class tables.
pub const MAX_SUBGRAPH_ORDER: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DensityError {
    #[error("subgraph order {k} exceeds the supported bound {MAX_SUBGRAPH_ORDER}")]
    SubgraphOrderTooLarge { k: usize },
}

/// Counts of edges and non-edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Profile2 {
    pub edges: u64,
    pub nonedges: u64,
}

impl Profile2 {
    pub fn total(&self) -> u64 {
        self.edges + self.nonedges
    }
}

/// Counts of induced 3-vertex subgraphs by isomorphism class.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Profile3 {
    /// Triangles (K3).
    pub triangles: u64,
    /// Paths on 3 vertices (two edges).
    pub paths: u64,
    /// One edge plus an isolated vertex.
    pub single_edge: u64,
    /// Three isolated vertices.
    pub empty: u64,
}

impl Profile3 {
    pub fn total(&self) -> u64 {
        self.triangles + self.paths + self.single_edge + self.empty
    }
}

/// Exact edge/non-edge counts of `g`.
pub fn profile2(g: &Graph) -> Profile2 {
    let n = g.order();
    let edges = g.edge_count() as u64;
    Profile2 {
        edges,
        nonedges: binomial_u128(n, 2) as u64 - edges,
    }
}

/// Exact 3-vertex profile in O(n·m) bit operations: triangles from
/// common-neighbor popcounts, paths from degree pairs, the rest from the
/// edge-triple identity `3·tri + 2·paths + single = (n-2)·m` and the C(n,3)
/// partition.
pub fn profile3(g: &Graph) -> Profile3 {
    let n = g.order();
    let m = g.edge_count() as u64;
    let mut triple_triangles = 0u64;
    for (u, v) in g.edges() {
        triple_triangles += (g.row(u) & g.row(v)).count_ones() as u64;
    }
    debug_assert_eq!(triple_triangles % 3, 0);
    let triangles = triple_triangles / 3;
    let cherries: u64 = (0..n)
        .map(|v| {
            let d = g.degree(v) as u64;
            d * d.saturating_sub(1) / 2
        })
        .sum();
    let paths = cherries - 3 * triangles;
    let single_edge = (n as u64).saturating_sub(2) * m - 3 * triangles - 2 * paths;
    let empty = binomial_u128(n, 3) as u64 - triangles - paths - single_edge;
    Profile3 {
        triangles,
        paths,
        single_edge,
        empty,
    }
}

/// One isomorphism class of k-vertex graphs.
#[derive(Clone, Debug)]
pub struct ClassInfo {
    pub code: CanonicalCode,
    pub representative: Graph,
    /// Number of labeled k-vertex graphs in the class, `k!/|Aut|`.
    pub labeled_count: u64,
    pub automorphisms: u64,
    pub edges: usize,
}

/// All isomorphism classes on `k` vertices with a lookup table from packed
/// upper-triangle bits to class index.
#[derive(Debug)]
pub struct ClassTable {
    pub k: usize,
    pub classes: Vec<ClassInfo>,
    class_of_bits: Vec<u16>,
}

impl ClassTable {
    fn build(k: usize) -> ClassTable {
        let pair_count = k * k.saturating_sub(1) / 2;
        let patterns = 1usize << pair_count;
        let mut codes: Vec<CanonicalCode> = Vec::new();
        let mut class_of_bits = vec![u16::MAX; patterns];
        let mut labeled: Vec<u64> = Vec::new();
        #[allow(clippy::needless_range_loop)] // bits is the graph, not just an index
        for bits in 0..patterns {
            let g = Graph::from_upper_triangle_bits(k, bits as u128);
            let code = canonical_code(&g).expect("k is tiny");
            let idx = match codes.iter().position(|c| *c == code) {
                Some(i) => i,
                None => {
                    codes.push(code);
                    labeled.push(0);
                    codes.len() - 1
                }
            };
            class_of_bits[bits] = idx as u16;
            labeled[idx] += 1;
        }
        // reorder classes by code so the table layout is canonical
        let mut order: Vec<usize> = (0..codes.len()).collect();
        order.sort_by_key(|&i| codes[i]);
        let mut rank = vec![0usize; codes.len()];
        for (new_idx, &old_idx) in order.iter().enumerate() {
            rank[old_idx] = new_idx;
        }
        for slot in class_of_bits.iter_mut() {
            *slot = rank[*slot as usize] as u16;
        }
        let classes = order
            .iter()
            .map(|&old| {
                let representative = crate::canon::graph_from_code(&codes[old]);
                let automorphisms = automorphism_count(&representative).expect("k is tiny");
                ClassInfo {
                    code: codes[old],
                    edges: representative.edge_count(),
                    labeled_count: labeled[old],
                    automorphisms,
                    representative,
                }
            })
            .collect();
        ClassTable {
            k,
            classes,
            class_of_bits,
        }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Class index of a graph with exactly `k` vertices.
    pub fn class_of_graph(&self, g: &Graph) -> usize {
        assert_eq!(g.order(), self.k);
        self.class_of_bits[g.upper_triangle_bits() as usize] as usize
    }

    /// Class index by packed upper-triangle bits.
    #[inline(always)]
    pub fn class_of_bits(&self, bits: usize) -> usize {
        self.class_of_bits[bits] as usize
    }

    /// Index of the unique class with `edges` edges; only meaningful for
    /// `k <= 3` where edge count determines the class.
    pub fn index_with_edges(&self, edges: usize) -> usize {
        debug_assert!(self.k <= 3);
        self.classes
            .iter()
            .position(|c| c.edges == edges)
            .expect("every edge count 0..=C(k,2) occurs for k<=3")
    }
}

static TABLES: [OnceLock<ClassTable>; 4] = [
    OnceLock::new(),
    OnceLock::new(),
    OnceLock::new(),
    OnceLock::new(),
];

/// The shared class table for `k` in `2..=5`.
pub fn class_table(k: usize) -> &'static ClassTable {
    assert!(
        (2..=MAX_SUBGRAPH_ORDER).contains(&k),
        "class tables exist for k in 2..=5, got {k}"
    );
    TABLES[k - 2].get_or_init(|| ClassTable::build(k))
}

/// Calls `f` with every strictly increasing k-tuple of `0..n`.
pub(crate) fn for_each_combination(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        // advance odometer
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Counts of induced k-subsets of `g` per isomorphism class, aligned with
/// `class_table(k).classes`. Fast paths cover k = 2 and 3; k = 4 and 5
/// enumerate subsets with a packed-bits table lookup.
pub fn class_counts(g: &Graph, k: usize) -> Result<Vec<u64>, DensityError> {
    if !(2..=MAX_SUBGRAPH_ORDER).contains(&k) {
        return Err(DensityError::SubgraphOrderTooLarge { k });
    }
    let table = class_table(k);
    let mut counts = vec![0u64; table.len()];
    let n = g.order();
    if n < k {
        return Ok(counts);
    }
    match k {
        2 => {
            let p = profile2(g);
            counts[table.index_with_edges(1)] = p.edges;
            counts[table.index_with_edges(0)] = p.nonedges;
        }
        3 => {
            let p = profile3(g);
            counts[table.index_with_edges(3)] = p.triangles;
            counts[table.index_with_edges(2)] = p.paths;
            counts[table.index_with_edges(1)] = p.single_edge;
            counts[table.index_with_edges(0)] = p.empty;
        }
        _ => {
            for_each_combination(n, k, |verts| {
                let mut bits = 0usize;
                for (a, &va) in verts.iter().enumerate() {
                    let row = g.row(va);
                    for &vb in &verts[a + 1..] {
                        bits = (bits << 1) | ((row >> vb) & 1) as usize;
                    }
                }
                counts[table.class_of_bits(bits)] += 1;
            });
        }
    }
    Ok(counts)
}

/// Density `t(H, G)`: the fraction of |H|-subsets of V(G) inducing a copy of
/// H. Returns 0 when `|G| < |H|`. Supports `|H| <= 5`.
pub fn density(h: &Graph, g: &Graph) -> Result<Rational, DensityError> {
    let k = h.order();
    if k > MAX_SUBGRAPH_ORDER {
        return Err(DensityError::SubgraphOrderTooLarge { k });
    }
    if g.order() < k {
        return Ok(Rational::from_integer(0.into()));
    }
    if k < 2 {
        return Ok(Rational::from_integer(1.into()));
    }
    let counts = class_counts(g, k)?;
    let idx = class_table(k).class_of_graph(h);
    Ok(Rational::new(
        counts[idx].into(),
        (binomial_u128(g.order(), k) as u64).into(),
    ))
}

/// Probability that a uniform labeled |H|-vertex graph is isomorphic to H:
/// `(k!/|Aut(H)|) / 2^C(k,2)`. Supports `|H| <= 5`.
pub fn expected_density(h: &Graph) -> Result<Rational, DensityError> {
    let k = h.order();
    if k > MAX_SUBGRAPH_ORDER {
        return Err(DensityError::SubgraphOrderTooLarge { k });
    }
    if k < 2 {
        return Ok(Rational::from_integer(1.into()));
    }
    let table = class_table(k);
    let info = &table.classes[table.class_of_graph(h)];
    Ok(Rational::new(
        info.labeled_count.into(),
        (1u64 << (k * (k - 1) / 2)).into(),
    ))
}
