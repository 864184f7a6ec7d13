//! Randomized sampling experiments: draw uniform graphs with exactly half the
//! possible edges, filter for 3-symmetry with integer profile identities, and
//! summarize clique/degree statistics.
//!
//! Trials are embarrassingly parallel. Every trial owns an independent RNG
//! derived from `(seed, trial index)` with a splitmix64 step, so runs are bit
//! reproducible regardless of thread scheduling.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, ToPrimitive};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::clique::max_clique;
use crate::density::profile3;
use crate::graph::{Graph, MAX_ORDER};
use crate::graph6::emit_graph6;
use crate::rational::{binomial_u128, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("order {order} has an odd number of vertex pairs; exactly-half-edges sampling needs C(n,2) even")]
    OddPairCount { order: usize },
    #[error("order {order} exceeds the supported maximum {MAX_ORDER}")]
    OrderTooLarge { order: usize },
    #[error("a sampling run needs at least one trial")]
    ZeroTrials,
    #[error("statistics need a nonempty batch of graphs")]
    EmptyBatch,
    #[error("statistics need a uniform order, found both {first} and {other}")]
    MixedOrders { first: usize, other: usize },
}

/// Parameters of a sampling run. Construction validates that the order admits
/// exactly-half-edges graphs and that at least one trial is requested.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SampleConfig {
    order: usize,
    trials: u64,
    seed: u64,
    collect_limit: usize,
}

impl SampleConfig {
    pub fn new(
        order: usize,
        trials: u64,
        seed: u64,
        collect_limit: usize,
    ) -> Result<Self, SearchError> {
        if order > MAX_ORDER {
            return Err(SearchError::OrderTooLarge { order });
        }
        if !binomial_u128(order, 2).is_multiple_of(2) {
            return Err(SearchError::OddPairCount { order });
        }
        if trials == 0 {
            return Err(SearchError::ZeroTrials);
        }
        Ok(SampleConfig {
            order,
            trials,
            seed,
            collect_limit,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn trials(&self) -> u64 {
        self.trials
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn collect_limit(&self) -> usize {
        self.collect_limit
    }
}

fn splitmix64(state: u64) -> u64 {
    let mut z = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Deterministic per-trial generator: trial `index` of a run with `seed` gets
/// its own stream no matter how trials are sharded across threads.
pub fn trial_rng(seed: u64, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(splitmix64(seed ^ index.wrapping_mul(0xA24B_AED4_963E_E407)))
}

/// Draws a graph uniformly from all labeled `n`-vertex graphs with exactly
/// `C(n,2)/2` edges, via a partial shuffle of the vertex-pair slots.
pub fn sample_2symmetric(n: usize, rng: &mut impl Rng) -> Result<Graph, SearchError> {
    if n > MAX_ORDER {
        return Err(SearchError::OrderTooLarge { order: n });
    }
    let total = (binomial_u128(n, 2)) as usize;
    if !total.is_multiple_of(2) {
        return Err(SearchError::OddPairCount { order: n });
    }
    let half = total / 2;
    let mut slots: Vec<(u8, u8)> = Vec::with_capacity(total);
    for i in 0..n {
        for j in i + 1..n {
            slots.push((i as u8, j as u8));
        }
    }
    for i in 0..half {
        let j = rng.random_range(i..total);
        slots.swap(i, j);
    }
    let mut g = Graph::empty(n);
    for &(u, v) in &slots[..half] {
        g.add_edge(u as usize, v as usize);
    }
    Ok(g)
}

/// 3-symmetry filter from integer profile identities alone; no canonical
/// labeling, suitable for the sampling hot loop. Agrees with
/// `is_k_symmetric(g, 3)` on every graph.
pub fn is_3symmetric_fast(g: &Graph) -> bool {
    let triples = binomial_u128(g.order(), 3) as u64;
    let p = profile3(g);
    p.triangles * 8 == triples
        && p.paths * 8 == 3 * triples
        && p.single_edge * 8 == 3 * triples
        && p.empty * 8 == triples
}

/// Seed-deterministic record of a sampling run.
#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub config: SampleConfig,
    /// Number of 3-symmetric samples among all trials.
    pub hits: u64,
    /// The first `collect_limit` hits in trial order.
    pub found: Vec<Graph>,
    pub elapsed: Duration,
}

impl SearchOutcome {
    pub fn hit_rate(&self) -> Rational {
        Rational::new(self.hits.into(), self.config.trials.into())
    }

    /// The sampling-based population estimate: `round(hit_rate × population)`.
    pub fn estimate_population(&self, population_2sym: &BigUint) -> BigUint {
        estimate_from_rate(&self.hit_rate(), population_2sym)
    }

    /// Stable JSON form. Timing is deliberately excluded so identical
    /// (seed, config) runs serialize identically.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "schema_version": crate::JSON_SCHEMA_VERSION,
            "order": self.config.order,
            "trials": self.config.trials,
            "seed": self.config.seed,
            "collect_limit": self.config.collect_limit,
            "hits": self.hits,
            "hit_rate_num": rational_parts(&self.hit_rate()).0,
            "hit_rate_den": rational_parts(&self.hit_rate()).1,
            "hit_rate_decimal": crate::rational::decimal_string(&self.hit_rate(), 12),
            "found": self.found.iter().map(emit_graph6).collect::<Vec<_>>(),
        })
    }
}

fn rational_parts(r: &Rational) -> (u64, u64) {
    (
        r.numer().to_u64().expect("hit counts fit in u64"),
        r.denom().to_u64().expect("trial counts fit in u64"),
    )
}

/// Rounds `rate × population` to the nearest integer.
pub fn estimate_from_rate(rate: &Rational, population: &BigUint) -> BigUint {
    let value = rate * Rational::from_integer(BigInt::from(population.clone()));
    value
        .round()
        .to_integer()
        .abs()
        .to_biguint()
        .expect("non-negative estimate")
}

/// Runs `config.trials` independent sampling trials, counting and collecting
/// 3-symmetric hits. Bit-reproducible for a fixed config.
pub fn run_search(config: &SampleConfig) -> SearchOutcome {
    let start = Instant::now();
    let mut hits_list: Vec<(u64, Graph)> = (0..config.trials)
        .into_par_iter()
        .filter_map(|index| {
            let mut rng = trial_rng(config.seed, index);
            let g = sample_2symmetric(config.order, &mut rng).expect("config validated the order");
            is_3symmetric_fast(&g).then_some((index, g))
        })
        .collect();
    hits_list.sort_by_key(|(index, _)| *index);
    let hits = hits_list.len() as u64;
    let found = hits_list
        .into_iter()
        .take(config.collect_limit)
        .map(|(_, g)| g)
        .collect();
    SearchOutcome {
        config: *config,
        hits,
        found,
        elapsed: start.elapsed(),
    }
}

/// First 3-symmetric sample by trial index within a budget, or None if the
/// budget is exhausted. Deterministic for fixed (order, seed, budget).
pub fn find_first_3symmetric(
    order: usize,
    seed: u64,
    max_trials: u64,
) -> Result<Option<(u64, Graph)>, SearchError> {
    // validate the order once up front
    SampleConfig::new(order, 1, seed, 0)?;
    Ok((0..max_trials).into_par_iter().find_map_first(|index| {
        let mut rng = trial_rng(seed, index);
        let g = sample_2symmetric(order, &mut rng).expect("order validated");
        is_3symmetric_fast(&g).then_some((index, g))
    }))
}

/// Histograms of maximum clique size and maximum degree over a batch of
/// graphs of uniform order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StatsReport {
    pub sample_count: usize,
    pub max_clique_histogram: BTreeMap<u32, u64>,
    pub max_degree_histogram: BTreeMap<u32, u64>,
}

impl StatsReport {
    pub fn to_json(&self) -> serde_json::Value {
        let map = |h: &BTreeMap<u32, u64>| {
            h.iter()
                .map(|(k, v)| (k.to_string(), serde_json::json!(v)))
                .collect::<serde_json::Map<_, _>>()
        };
        serde_json::json!({
            "schema_version": crate::JSON_SCHEMA_VERSION,
            "sample_count": self.sample_count,
            "max_clique_histogram": map(&self.max_clique_histogram),
            "max_degree_histogram": map(&self.max_degree_histogram),
        })
    }

    pub fn clique_csv(&self) -> String {
        let mut out = String::from("max_clique,frequency\n");
        for (k, v) in &self.max_clique_histogram {
            out.push_str(&format!("{k},{v}\n"));
        }
        out
    }

    pub fn degree_csv(&self) -> String {
        let mut out = String::from("max_degree,frequency\n");
        for (k, v) in &self.max_degree_histogram {
            out.push_str(&format!("{k},{v}\n"));
        }
        out
    }
}

/// Exact clique and degree histograms for a nonempty batch of graphs of
/// uniform order.
pub fn batch_stats(graphs: &[Graph]) -> Result<StatsReport, SearchError> {
    let first = graphs.first().ok_or(SearchError::EmptyBatch)?.order();
    if let Some(other) = graphs.iter().find(|g| g.order() != first) {
        return Err(SearchError::MixedOrders {
            first,
            other: other.order(),
        });
    }
    let pairs: Vec<(u32, u32)> = graphs
        .par_iter()
        .map(|g| (max_clique(g), g.max_degree()))
        .collect();
    let mut max_clique_histogram = BTreeMap::new();
    let mut max_degree_histogram = BTreeMap::new();
    for (clique, degree) in pairs {
        *max_clique_histogram.entry(clique).or_insert(0) += 1;
        *max_degree_histogram.entry(degree).or_insert(0) += 1;
    }
    Ok(StatsReport {
        sample_count: graphs.len(),
        max_clique_histogram,
        max_degree_histogram,
    })
}
