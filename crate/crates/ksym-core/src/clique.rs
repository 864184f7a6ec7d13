//! Exact maximum clique via branch and bound with greedy-coloring upper
//! bounds over bitset candidate sets.

use crate::graph::Graph;

/// Size of the largest clique of `g`. Exact for every supported order.
pub fn max_clique(g: &Graph) -> u32 {
    let n = g.order();
    if n == 0 {
        return 0;
    }
    let adj: Vec<u64> = (0..n).map(|v| g.row(v)).collect();
    let mut best = 1u32;
    let full = crate::graph::low_mask(n);
    expand(&adj, full, 0, &mut best);
    best
}

/// Greedy coloring of the candidate set; returns vertices ordered by
/// increasing color along with their color numbers. A vertex of color c can
/// extend a clique to size at most `size + c`.
fn color_order(adj: &[u64], cand: u64) -> (Vec<u32>, Vec<u32>) {
    let mut order = Vec::with_capacity(cand.count_ones() as usize);
    let mut colors = Vec::with_capacity(order.capacity());
    let mut uncolored = cand;
    let mut color = 0u32;
    while uncolored != 0 {
        color += 1;
        let mut avail = uncolored;
        while avail != 0 {
            let v = avail.trailing_zeros();
            avail &= !(adj[v as usize] | (1u64 << v));
            uncolored &= !(1u64 << v);
            order.push(v);
            colors.push(color);
        }
    }
    (order, colors)
}

fn expand(adj: &[u64], cand: u64, size: u32, best: &mut u32) {
    let (order, colors) = color_order(adj, cand);
    let mut pool = cand;
    for i in (0..order.len()).rev() {
        if size + colors[i] <= *best {
            return;
        }
        let v = order[i];
        let next = pool & adj[v as usize];
        if next == 0 {
            if size + 1 > *best {
                *best = size + 1;
            }
        } else {
            expand(adj, next, size + 1, best);
        }
        pool &= !(1u64 << v);
    }
}
