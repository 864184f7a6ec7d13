//! Symmetry predicates and reports: k-symmetric, almost-3-symmetric, and
//! self-complementary.
//!
//! A graph is k-symmetric when every isomorphism class of k-vertex induced
//! subgraphs appears with exactly its expected density in the uniform random
//! graph. Equality is tested as the integer identity
//! `count(H) * 2^C(k,2) == C(n,k) * (k!/|Aut(H)|)`, so no rounding is ever
//! involved. Graphs with fewer than k vertices are vacuously k-symmetric and
//! reported with a `trivial` flag.

use thiserror::Error;

use crate::canon::{is_isomorphic, CanonError, CanonicalCode};
use crate::density::{class_counts, class_table, profile2, profile3};
use crate::graph::Graph;
use crate::rational::{binomial_u128, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SymmetryError {
    #[error("k-symmetry checks support k in 2..=4, got {k}")]
    KOutOfRange { k: usize },
    #[error(transparent)]
    Canon(#[from] CanonError),
}

/// Per-class row of a symmetry report.
#[derive(Clone, Debug)]
pub struct SymmetryEntry {
    pub class: CanonicalCode,
    /// Edge count of the class representative, a convenient human label.
    pub edges: usize,
    pub count: u64,
    pub measured: Rational,
    pub expected: Rational,
    /// `measured - expected`; zero for every class iff the graph is
    /// k-symmetric.
    pub deviation: Rational,
}

/// Measured vs expected densities of all k-vertex classes.
#[derive(Clone, Debug)]
pub struct SymmetryReport {
    pub order: usize,
    pub k: usize,
    /// True when `order < k`, where the definition holds vacuously; `entries`
    /// is empty in that case.
    pub trivial: bool,
    pub entries: Vec<SymmetryEntry>,
    pub is_symmetric: bool,
}

impl SymmetryReport {
    pub fn to_json(&self) -> serde_json::Value {
        use crate::rational::rational_json;
        serde_json::json!({
            "schema_version": crate::JSON_SCHEMA_VERSION,
            "order": self.order,
            "k": self.k,
            "trivial": self.trivial,
            "is_symmetric": self.is_symmetric,
            "classes": self.entries.iter().map(|e| serde_json::json!({
                "edges": e.edges,
                "count": e.count,
                "measured": rational_json(&e.measured),
                "expected": rational_json(&e.expected),
                "deviation": rational_json(&e.deviation),
            })).collect::<Vec<_>>(),
        })
    }
}

fn check_k(k: usize) -> Result<(), SymmetryError> {
    if (2..=4).contains(&k) {
        Ok(())
    } else {
        Err(SymmetryError::KOutOfRange { k })
    }
}

/// True iff every k-vertex class density equals its expected value, for
/// `k` in 2..=4. Graphs with fewer than k vertices are vacuously symmetric.
pub fn is_k_symmetric(g: &Graph, k: usize) -> Result<bool, SymmetryError> {
    check_k(k)?;
    let n = g.order();
    if n < k {
        return Ok(true);
    }
    let table = class_table(k);
    let counts = class_counts(g, k).expect("k validated");
    let subsets = binomial_u128(n, k);
    let scale = 1u128 << (k * (k - 1) / 2);
    Ok(table
        .classes
        .iter()
        .zip(&counts)
        .all(|(class, &count)| count as u128 * scale == subsets * class.labeled_count as u128))
}

/// Full per-class report for `k` in 2..=4.
pub fn symmetry_report(g: &Graph, k: usize) -> Result<SymmetryReport, SymmetryError> {
    check_k(k)?;
    let n = g.order();
    if n < k {
        return Ok(SymmetryReport {
            order: n,
            k,
            trivial: true,
            entries: Vec::new(),
            is_symmetric: true,
        });
    }
    let table = class_table(k);
    let counts = class_counts(g, k).expect("k validated");
    let subsets = binomial_u128(n, k) as u64;
    let mut entries = Vec::with_capacity(table.len());
    for (class, &count) in table.classes.iter().zip(&counts) {
        let measured = Rational::new(count.into(), subsets.into());
        let expected = Rational::new(
            class.labeled_count.into(),
            (1u64 << (k * (k - 1) / 2)).into(),
        );
        let deviation = &measured - &expected;
        entries.push(SymmetryEntry {
            class: class.code,
            edges: class.edges,
            count,
            measured,
            expected,
            deviation,
        });
    }
    let is_symmetric = entries
        .iter()
        .all(|e| num_traits::Zero::is_zero(&e.deviation));
    Ok(SymmetryReport {
        order: n,
        k,
        trivial: false,
        entries,
        is_symmetric,
    })
}

/// True iff `g` is 2-symmetric with triangle density equal to empty density
/// and path density equal to single-edge density. Any two of the three
/// conditions imply the third; all three are computed and their consistency
/// asserted.
pub fn is_almost_3_symmetric(g: &Graph) -> bool {
    let p2 = profile2(g);
    let p3 = profile3(g);
    let two_symmetric = p2.edges == p2.nonedges;
    let ends_balanced = p3.triangles == p3.empty;
    let middles_balanced = p3.paths == p3.single_edge;
    let holding = two_symmetric as u8 + ends_balanced as u8 + middles_balanced as u8;
    assert_ne!(
        holding, 2,
        "two of the almost-3-symmetry conditions must imply the third"
    );
    two_symmetric && ends_balanced && middles_balanced
}

/// True iff `g` is isomorphic to its complement.
pub fn is_self_complementary(g: &Graph) -> Result<bool, SymmetryError> {
    Ok(is_isomorphic(g, &g.complement())?)
}
