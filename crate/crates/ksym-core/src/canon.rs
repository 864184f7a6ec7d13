//! Canonical codes, isomorphism testing, and automorphism counting for small
//! graphs.
//!
//! The canonical form is found by exhaustive search over vertex orderings,
//! restricted to orderings compatible with an isomorphism-invariant vertex
//! partition (degree first, then the sorted multiset of neighbor degrees) and
//! pruned by comparing partially built encodings against the best complete one.
//! Orderings are explored so that small encodings are tried first. This is
//! exact and fast for the orders used here; the bound is enforced by
//! precondition rather than silently degrading.

use thiserror::Error;

use crate::graph::Graph;

/// Largest order accepted by [`canonical_code`]; beyond this the factorial
/// search space is not worth supporting.
pub const MAX_CANON_ORDER: usize = 16;

/// Largest order accepted by [`automorphism_count`].
pub const MAX_AUT_ORDER: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CanonError {
    #[error("order {n} exceeds the supported bound {max} for this operation")]
    OrderTooLarge { n: usize, max: usize },
}

/// A labeling-invariant encoding of a graph: two graphs have equal codes iff
/// they are isomorphic. `bits` holds the upper-triangle adjacency bits of the
/// canonical relabeling, packed row-major.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode {
    n: u8,
    bits: u128,
}

impl CanonicalCode {
    pub fn order(&self) -> usize {
        self.n as usize
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }
}

/// Rebuilds the canonical representative graph from its code.
pub fn graph_from_code(code: &CanonicalCode) -> Graph {
    Graph::from_upper_triangle_bits(code.order(), code.bits)
}

/// Relabels `g` so that original vertex `v` becomes `perm[v]`.
pub fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    assert_eq!(perm.len(), g.order());
    let mut h = Graph::empty(g.order());
    for (u, v) in g.edges() {
        h.add_edge(perm[u], perm[v]);
    }
    h
}

/// Vertex partition by (degree, sorted neighbor degrees); classes are sorted
/// ascending and vertices listed per class.
fn invariant_classes(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let degrees: Vec<u32> = (0..n).map(|v| g.degree(v)).collect();
    let mut keyed: Vec<(u32, Vec<u32>, usize)> = (0..n)
        .map(|v| {
            let mut nbr: Vec<u32> = (0..n)
                .filter(|&u| g.has_edge(v, u))
                .map(|u| degrees[u])
                .collect();
            nbr.sort_unstable();
            (degrees[v], nbr, v)
        })
        .collect();
    keyed.sort();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut last_key: Option<(u32, Vec<u32>)> = None;
    for (d, nbr, v) in keyed {
        let key = (d, nbr);
        if last_key.as_ref() == Some(&key) {
            classes.last_mut().unwrap().push(v);
        } else {
            classes.push(vec![v]);
            last_key = Some(key);
        }
    }
    classes
}

/// Search state for the minimal-encoding DFS. The partial encoding is packed
/// column by column (pair (i,j) ordered by (j,i)), which makes every placement
/// extend a strict prefix of the final bit string.
///
/// Two pruning rules keep highly symmetric graphs tractable: twins of an
/// already-tried candidate are skipped at every depth (a transposition
/// automorphism makes their subtrees identical), and at depth 0 whole
/// automorphism orbits are skipped, with orbits learned from orderings that
/// tie the best encoding exactly.
struct CanonSearch<'a> {
    g: &'a Graph,
    total_bits: u32,
    class_of_position: Vec<usize>,
    classes: Vec<Vec<usize>>,
    used: Vec<bool>,
    placed: Vec<usize>,
    best: Option<u128>,
    best_placed: Vec<usize>,
    orbit: Vec<usize>,
}

impl CanonSearch<'_> {
    fn column_bits(&self, v: usize) -> u128 {
        let mut col = 0u128;
        for &u in &self.placed {
            col = (col << 1) | (self.g.has_edge(u, v) as u128);
        }
        col
    }

    fn orbit_root(&mut self, v: usize) -> usize {
        let mut root = v;
        while self.orbit[root] != root {
            root = self.orbit[root];
        }
        let mut cur = v;
        while self.orbit[cur] != root {
            let next = self.orbit[cur];
            self.orbit[cur] = root;
            cur = next;
        }
        root
    }

    fn orbit_union(&mut self, a: usize, b: usize) {
        let ra = self.orbit_root(a);
        let rb = self.orbit_root(b);
        if ra != rb {
            self.orbit[ra] = rb;
        }
    }

    /// `acc` holds the first `bits` bits of the candidate encoding. Branches
    /// whose prefix exceeds the matching prefix of the best complete encoding
    /// are pruned; a strictly smaller prefix keeps every later comparison
    /// strictly smaller too, so comparing against the current best at every
    /// step is sound even as the best improves mid-search.
    fn descend(&mut self, acc: u128, bits: u32) {
        let pos = self.placed.len();
        if pos == self.g.order() {
            debug_assert_eq!(bits, self.total_bits);
            match self.best {
                Some(best) if acc == best => {
                    // two orderings with the same encoding differ by an
                    // automorphism; remember the orbits it merges
                    for i in 0..self.placed.len() {
                        self.orbit_union(self.best_placed[i], self.placed[i]);
                    }
                }
                Some(best) if acc > best => {}
                _ => {
                    self.best = Some(acc);
                    self.best_placed = self.placed.clone();
                }
            }
            return;
        }
        let class = self.class_of_position[pos];
        let mut tried = 0u64;
        for idx in 0..self.classes[class].len() {
            let v = self.classes[class][idx];
            if self.used[v] {
                continue;
            }
            let mut interchangeable = false;
            let mut rest = tried;
            while rest != 0 {
                let u = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if pos == 0 && self.orbit_root(u) == self.orbit_root(v) {
                    interchangeable = true;
                    break;
                }
                let mask = !((1u64 << u) | (1u64 << v));
                if self.g.row(u) & mask == self.g.row(v) & mask {
                    interchangeable = true;
                    break;
                }
            }
            if interchangeable {
                continue;
            }
            tried |= 1u64 << v;
            let col = self.column_bits(v);
            let acc2 = (acc << pos) | col;
            let bits2 = bits + pos as u32;
            if let Some(best) = self.best {
                if acc2 > best >> (self.total_bits - bits2) {
                    continue;
                }
            }
            self.used[v] = true;
            self.placed.push(v);
            self.descend(acc2, bits2);
            self.placed.pop();
            self.used[v] = false;
        }
    }
}

/// Minimal column-packed encoding over all partition-compatible orderings.
fn minimal_column_bits(g: &Graph) -> u128 {
    let n = g.order();
    if n < 2 {
        return 0;
    }
    let classes = invariant_classes(g);
    let mut class_of_position = Vec::with_capacity(n);
    for (c, members) in classes.iter().enumerate() {
        class_of_position.extend(std::iter::repeat_n(c, members.len()));
    }
    let mut search = CanonSearch {
        g,
        total_bits: (n * (n - 1) / 2) as u32,
        class_of_position,
        classes,
        used: vec![false; n],
        placed: Vec::with_capacity(n),
        best: None,
        best_placed: Vec::new(),
        orbit: (0..n).collect(),
    };
    search.descend(0, 0);
    search.best.expect("search visits at least one ordering")
}

/// The canonical relabeling of `g`.
pub fn canonical_form(g: &Graph) -> Result<Graph, CanonError> {
    let n = g.order();
    if n > MAX_CANON_ORDER {
        return Err(CanonError::OrderTooLarge {
            n,
            max: MAX_CANON_ORDER,
        });
    }
    let col = minimal_column_bits(g);
    // unpack column-major, repack through Graph
    let mut h = Graph::empty(n);
    let total = n * n.saturating_sub(1) / 2;
    let mut pos = 0;
    for j in 1..n {
        for i in 0..j {
            if col >> (total - 1 - pos) & 1 != 0 {
                h.add_edge(i, j);
            }
            pos += 1;
        }
    }
    Ok(h)
}

/// Computes the labeling-invariant code of `g`. Requires `order <= 16`.
pub fn canonical_code(g: &Graph) -> Result<CanonicalCode, CanonError> {
    let form = canonical_form(g)?;
    Ok(CanonicalCode {
        n: g.order() as u8,
        bits: form.upper_triangle_bits(),
    })
}

/// True iff `a` and `b` are isomorphic. Cheap invariants (order, edge count)
/// are checked before any canonical labeling.
pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool, CanonError> {
    if a.order() != b.order() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    Ok(canonical_code(a)? == canonical_code(b)?)
}

/// Number of vertex permutations fixing the edge set. Requires `order <= 10`.
pub fn automorphism_count(g: &Graph) -> Result<u64, CanonError> {
    let n = g.order();
    if n > MAX_AUT_ORDER {
        return Err(CanonError::OrderTooLarge {
            n,
            max: MAX_AUT_ORDER,
        });
    }
    if n == 0 {
        return Ok(1);
    }
    let classes = invariant_classes(g);
    let mut class_of = vec![0usize; n];
    for (c, members) in classes.iter().enumerate() {
        for &v in members {
            class_of[v] = c;
        }
    }
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut count = 0u64;
    fn go(
        g: &Graph,
        class_of: &[usize],
        classes: &[Vec<usize>],
        image: &mut [usize],
        used: &mut [bool],
        v: usize,
        count: &mut u64,
    ) {
        let n = g.order();
        if v == n {
            *count += 1;
            return;
        }
        for &w in &classes[class_of[v]] {
            if used[w] {
                continue;
            }
            let consistent = (0..v).all(|u| g.has_edge(u, v) == g.has_edge(image[u], w));
            if consistent {
                used[w] = true;
                image[v] = w;
                go(g, class_of, classes, image, used, v + 1, count);
                used[w] = false;
            }
        }
    }
    go(g, &class_of, &classes, &mut image, &mut used, 0, &mut count);
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    /// Exhaustive isomorphism check over all |V|! permutations; the
    /// independent oracle for the canonical machinery.
    fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
        let n = a.order();
        if n != b.order() || a.edge_count() != b.edge_count() {
            return false;
        }
        let mut perm: Vec<usize> = (0..n).collect();
        permute_check(a, b, &mut perm, 0)
    }

    fn permute_check(a: &Graph, b: &Graph, perm: &mut Vec<usize>, k: usize) -> bool {
        let n = a.order();
        if k == n {
            return (0..n).all(|i| {
                (0..n).all(|j| i == j || a.has_edge(i, j) == b.has_edge(perm[i], perm[j]))
            });
        }
        for i in k..n {
            perm.swap(k, i);
            if permute_check(a, b, perm, k + 1) {
                perm.swap(k, i);
                return true;
            }
            perm.swap(k, i);
        }
        false
    }

    fn all_permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in all_permutations(n - 1) {
            for i in 0..=p.len() {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn code_invariant_under_relabeling() {
        let p3 = Graph::path(3);
        let base = canonical_code(&p3).unwrap();
        for perm in all_permutations(3) {
            assert_eq!(canonical_code(&relabel(&p3, &perm)).unwrap(), base);
        }
    }

    #[test]
    fn order4_half_edge_graphs_have_three_codes() {
        let path = Graph::path(4);
        let star = Graph::star(4);
        let tri_plus = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2)]);
        let codes = [
            canonical_code(&path).unwrap(),
            canonical_code(&star).unwrap(),
            canonical_code(&tri_plus).unwrap(),
        ];
        assert_ne!(codes[0], codes[1]);
        assert_ne!(codes[0], codes[2]);
        assert_ne!(codes[1], codes[2]);
    }

    #[test]
    fn all_labeled_order4_graphs_form_eleven_classes() {
        // brute-force pairwise-isomorphism oracle, then compare against codes
        let graphs: Vec<Graph> = (0..64u128)
            .map(|bits| Graph::from_upper_triangle_bits(4, bits))
            .collect();
        let mut reps: Vec<&Graph> = Vec::new();
        for g in &graphs {
            if !reps.iter().any(|r| brute_isomorphic(r, g)) {
                reps.push(g);
            }
        }
        assert_eq!(reps.len(), 11);
        let mut codes: Vec<CanonicalCode> =
            reps.iter().map(|g| canonical_code(g).unwrap()).collect();
        codes.sort();
        codes.dedup();
        assert_eq!(codes.len(), 11);
        // and codes agree with the oracle on every labeled graph
        for g in &graphs {
            let rep = reps.iter().find(|r| brute_isomorphic(r, g)).unwrap();
            assert_eq!(canonical_code(g).unwrap(), canonical_code(rep).unwrap());
        }
    }

    #[test]
    fn labeled_graph_class_counts_up_to_six() {
        // distinct codes over all labeled graphs, with the permutation oracle
        // spot-checking that codes and isomorphism agree
        use rand::prelude::*;
        use rand_chacha::ChaCha8Rng;
        let expected = [1usize, 2, 4, 11, 34, 156];
        let mut rng = ChaCha8Rng::seed_from_u64(0x156);
        for (n, &want) in (1..=6).zip(&expected) {
            let pair_count = n * (n - 1) / 2;
            let graphs: Vec<Graph> = (0..1u128 << pair_count)
                .map(|bits| Graph::from_upper_triangle_bits(n, bits))
                .collect();
            let codes: Vec<CanonicalCode> =
                graphs.iter().map(|g| canonical_code(g).unwrap()).collect();
            let mut distinct = codes.clone();
            distinct.sort();
            distinct.dedup();
            assert_eq!(distinct.len(), want, "n={n}");
            for _ in 0..200 {
                let a = &graphs[rng.random_range(0..graphs.len())];
                let b = &graphs[rng.random_range(0..graphs.len())];
                assert_eq!(
                    canonical_code(a).unwrap() == canonical_code(b).unwrap(),
                    brute_isomorphic(a, b),
                    "n={n}"
                );
            }
        }
    }

    #[test]
    fn isomorphism_examples() {
        let p4 = Graph::path(4);
        assert!(is_isomorphic(&p4, &p4.complement()).unwrap());
        let star = Graph::star(4);
        let tri_plus = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2)]);
        assert!(!is_isomorphic(&star, &tri_plus).unwrap());
        assert!(is_isomorphic(&star, &tri_plus.complement()).unwrap());
        assert!(is_isomorphic(&tri_plus, &star.complement()).unwrap());
        let g = Graph::wheel(8);
        assert!(is_isomorphic(&g, &g).unwrap());
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(automorphism_count(&Graph::complete(3)).unwrap(), 6);
        assert_eq!(automorphism_count(&Graph::path(3)).unwrap(), 2);
        assert_eq!(automorphism_count(&Graph::cycle(4)).unwrap(), 8);
        assert_eq!(automorphism_count(&Graph::empty(0)).unwrap(), 1);
        assert_eq!(automorphism_count(&Graph::empty(4)).unwrap(), 24);
        // oracle: count identity-preserving permutations directly
        let g = Graph::wheel(5);
        let brute = all_permutations(5)
            .into_iter()
            .filter(|p| relabel(&g, p) == g)
            .count() as u64;
        assert_eq!(automorphism_count(&g).unwrap(), brute);
    }

    #[test]
    fn canonical_form_is_stable() {
        let g = Graph::from_edges(6, &[(0, 3), (3, 1), (1, 4), (4, 2), (2, 5), (5, 0)]);
        let form = canonical_form(&g).unwrap();
        assert!(is_isomorphic(&g, &form).unwrap());
        assert_eq!(canonical_code(&form).unwrap(), canonical_code(&g).unwrap());
        let code = canonical_code(&g).unwrap();
        assert_eq!(graph_from_code(&code), form);
    }

    #[test]
    fn order_bounds_enforced() {
        let g = Graph::empty(17);
        assert!(matches!(
            canonical_code(&g),
            Err(CanonError::OrderTooLarge { n: 17, max: 16 })
        ));
        let g = Graph::empty(11);
        assert!(matches!(
            automorphism_count(&g),
            Err(CanonError::OrderTooLarge { n: 11, max: 10 })
        ));
    }

    #[test]
    fn regular_graphs_are_distinguished() {
        // degree invariants cannot separate these; the search itself must
        let c6 = Graph::cycle(6);
        let two_triangles = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]);
        assert!(!is_isomorphic(&c6, &two_triangles).unwrap());

        let c8 = Graph::cycle(8);
        let two_squares = Graph::from_edges(8, &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4)]);
        let c3_c5 = Graph::from_edges(8, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 6), (6, 7), (7, 3)]);
        let codes = [
            canonical_code(&c8).unwrap(),
            canonical_code(&two_squares).unwrap(),
            canonical_code(&c3_c5).unwrap(),
        ];
        assert!(codes[0] != codes[1] && codes[0] != codes[2] && codes[1] != codes[2]);

        // a vertex-transitive order-10 graph keeps one code across relabelings
        let petersen = Graph::from_edges(
            10,
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0), // outer cycle
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5), // inner pentagram
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9), // spokes
            ],
        );
        assert_eq!(automorphism_count(&petersen).unwrap(), 120);
        let base = canonical_code(&petersen).unwrap();
        use rand::prelude::*;
        use rand_chacha::ChaCha8Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(0x9e7e);
        for _ in 0..10 {
            let mut perm: Vec<usize> = (0..10).collect();
            perm.shuffle(&mut rng);
            assert_eq!(canonical_code(&relabel(&petersen, &perm)).unwrap(), base);
        }
    }

    #[test]
    fn random_relabelings_share_codes() {
        use rand::prelude::*;
        use rand_chacha::ChaCha8Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(0xc0de);
        for _ in 0..150 {
            let n = rng.random_range(1..=9);
            let mut g = Graph::empty(n);
            for i in 0..n {
                for j in i + 1..n {
                    if rng.random_bool(0.5) {
                        g.add_edge(i, j);
                    }
                }
            }
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let relabeled = relabel(&g, &perm);
            assert_eq!(
                canonical_code(&g).unwrap(),
                canonical_code(&relabeled).unwrap()
            );
            // the complement's code is a class invariant too
            assert_eq!(
                canonical_code(&g.complement()).unwrap(),
                canonical_code(&relabeled.complement()).unwrap()
            );
        }
    }
}
