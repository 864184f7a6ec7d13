//! The inflation (lexicographic product) constructor and its closed-form
//! density predictions.
//!
//! `inflate(G, H)` replaces every vertex of G with a copy of H and completely
//! joins copies whose base vertices are adjacent. The closed forms predict the
//! edge density and all four 3-vertex class densities of the product from the
//! profiles of the factors; construction-based measurement must agree exactly.

use thiserror::Error;

use crate::density::{profile2, profile3};
use crate::graph::{Graph, MAX_ORDER};
use crate::rational::{binomial_u128, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum InflationError {
    #[error("inflated order {total} exceeds the supported maximum {MAX_ORDER}")]
    OrderCapExceeded { total: usize },
    #[error("operation needs a total order of at least {needed}, got {total}")]
    OrderTooSmall { total: usize, needed: usize },
    #[error("the specialized formula requires 2-symmetric factors")]
    NotTwoSymmetric,
    #[error("the 3-vertex pattern must have exactly 3 vertices, got {order}")]
    BadPatternOrder { order: usize },
    #[error("the excess formula requires both orders >= 2, got {g_order} and {h_order}")]
    OrdersTooSmall { g_order: usize, h_order: usize },
}

/// Predicted densities of `inflate(G, H)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InflationPrediction {
    pub edge_density: Rational,
    pub triangle: Rational,
    pub path: Rational,
    pub single_edge: Rational,
    pub empty: Rational,
}

impl InflationPrediction {
    pub fn three_classes(&self) -> [&Rational; 4] {
        [&self.triangle, &self.path, &self.single_edge, &self.empty]
    }
}

/// Builds the inflation of `g` with respect to `h`: block `i` (vertices
/// `i*|H| .. (i+1)*|H|-1`) induces a copy of H, and blocks `i`, `j` are
/// completely joined iff `{i,j}` is an edge of G. The block layout is fixed so
/// constructions are reproducible byte for byte.
pub fn inflate(g: &Graph, h: &Graph) -> Result<Graph, InflationError> {
    let total = g.order() * h.order();
    if total > MAX_ORDER {
        return Err(InflationError::OrderCapExceeded { total });
    }
    let hn = h.order();
    let mut out = Graph::empty(total);
    for block in 0..g.order() {
        let base = block * hn;
        for (a, b) in h.edges() {
            out.add_edge(base + a, base + b);
        }
    }
    for (i, j) in g.edges() {
        for a in 0..hn {
            for b in 0..hn {
                out.add_edge(i * hn + a, j * hn + b);
            }
        }
    }
    debug_assert_eq!(
        out.edge_count(),
        g.order() * h.edge_count() + g.edge_count() * hn * hn
    );
    Ok(out)
}

/// Closed-form edge density of `inflate(G, H)`:
/// `(|G|·e(H) + e(G)·|H|²) / C(|G||H|, 2)`.
pub fn predict_edge_density(g: &Graph, h: &Graph) -> Result<Rational, InflationError> {
    let total = g.order() * h.order();
    if total < 2 {
        return Err(InflationError::OrderTooSmall { total, needed: 2 });
    }
    let numer = g.order() as u128 * h.edge_count() as u128
        + g.edge_count() as u128 * (h.order() as u128).pow(2);
    Ok(Rational::new(
        i128::try_from(numer).expect("fits").into(),
        i128::try_from(binomial_u128(total, 2))
            .expect("fits")
            .into(),
    ))
}

fn ratio_u128(num: u128, den: u128) -> Rational {
    Rational::new(
        i128::try_from(num).expect("fits").into(),
        i128::try_from(den).expect("fits").into(),
    )
}

/// Closed-form densities of all four 3-vertex classes in `inflate(G, H)`.
///
/// Each class splits over the placement of the three vertices: all in one
/// copy of H, two in one copy and one in an adjacent/non-adjacent copy, or
/// three in distinct copies inducing the class in G.
pub fn predict_3profile(g: &Graph, h: &Graph) -> Result<InflationPrediction, InflationError> {
    let total = g.order() * h.order();
    if total < 3 {
        return Err(InflationError::OrderTooSmall { total, needed: 3 });
    }
    let edge_density = predict_edge_density(g, h)?;
    let gn = g.order() as u128;
    let hn = h.order() as u128;
    let ge = g.edge_count() as u128;
    let he = h.edge_count() as u128;
    let g_non = binomial_u128(g.order(), 2) - ge;
    let h_non = binomial_u128(h.order(), 2) - he;
    let gp = profile3(g);
    let hp = profile3(h);
    let denom = binomial_u128(total, 3);
    let h3 = hn * hn * hn;
    // middle term: ordered adjacent (resp. non-adjacent) block pairs times the
    // matching within-copy pair count times |H| choices in the second copy
    let class = |hc: u64, g_pairs: u128, h_pairs: u128, gc: u64| {
        ratio_u128(
            gn * hc as u128 + 2 * g_pairs * h_pairs * hn + gc as u128 * h3,
            denom,
        )
    };
    Ok(InflationPrediction {
        edge_density,
        triangle: class(hp.triangles, ge, he, gp.triangles),
        path: class(hp.paths, ge, h_non, gp.paths),
        single_edge: class(hp.single_edge, g_non, he, gp.single_edge),
        empty: class(hp.empty, g_non, h_non, gp.empty),
    })
}

/// Single simplified formula for the density of a 3-vertex pattern `s` in
/// `inflate(G, H)` when both factors are 2-symmetric:
/// `(|G|·count(s,H) + ½·C(|G|,2)·C(|H|,2)·|H| + count(s,G)·|H|³) / C(|G||H|,3)`.
pub fn predict_3density_2sym(s: &Graph, g: &Graph, h: &Graph) -> Result<Rational, InflationError> {
    if s.order() != 3 {
        return Err(InflationError::BadPatternOrder { order: s.order() });
    }
    let p2g = profile2(g);
    let p2h = profile2(h);
    if p2g.edges != p2g.nonedges || p2h.edges != p2h.nonedges {
        return Err(InflationError::NotTwoSymmetric);
    }
    let total = g.order() * h.order();
    if total < 3 {
        return Err(InflationError::OrderTooSmall { total, needed: 3 });
    }
    let count_in = |graph: &Graph| -> u64 {
        let p = profile3(graph);
        match s.edge_count() {
            3 => p.triangles,
            2 => p.paths,
            1 => p.single_edge,
            _ => p.empty,
        }
    };
    let half = Rational::new(1.into(), 2.into());
    let gn = g.order() as i128;
    let hn = h.order() as i128;
    let term_h = Rational::from_integer((gn * count_in(h) as i128).into());
    let term_mid = half
        * Rational::from_integer(
            (binomial_u128(g.order(), 2) as i128 * binomial_u128(h.order(), 2) as i128 * hn).into(),
        );
    let term_g = Rational::from_integer((count_in(g) as i128 * hn * hn * hn).into());
    let denom = Rational::from_integer((binomial_u128(total, 3) as i128).into());
    Ok((term_h + term_mid + term_g) / denom)
}

/// Exact triangle-density excess of the inflation of two 3-symmetric graphs:
/// `(1/8)·3·|H|·(|H|−1)·(|G|−1) / ((|G||H|−1)(|G||H|−2))`. Strictly positive
/// whenever both orders are at least 2, so such an inflation is never
/// 3-symmetric.
pub fn triangle_excess(g_order: usize, h_order: usize) -> Result<Rational, InflationError> {
    if g_order < 2 || h_order < 2 {
        return Err(InflationError::OrdersTooSmall { g_order, h_order });
    }
    let g = g_order as i128;
    let h = h_order as i128;
    Ok(Rational::new(
        (3 * h * (h - 1) * (g - 1)).into(),
        (8 * (g * h - 1) * (g * h - 2)).into(),
    ))
}

/// Measured 3-class densities of a constructed graph, as rationals.
pub fn measured_3profile(g: &Graph) -> InflationPrediction {
    let p2 = profile2(g);
    let p3 = profile3(g);
    let pairs = p2.total();
    let triples = binomial_u128(g.order(), 3) as u64;
    let d = |count: u64, total: u64| Rational::new(count.into(), total.into());
    InflationPrediction {
        edge_density: d(p2.edges, pairs),
        triangle: d(p3.triangles, triples),
        path: d(p3.paths, triples),
        single_edge: d(p3.single_edge, triples),
        empty: d(p3.empty, triples),
    }
}
