//! 2-adic order theory: which vertex counts can carry k-symmetric graphs.
//!
//! An order `n > k` is k-admissible when `C(n,k)` is divisible by
//! `2^C(k,2)`, a necessary condition since the complete-graph class must have
//! density `1/2^C(k,2)`. The valuation of `C(n,k)` is computed by counting
//! carries in the base-2 addition `(n-k) + k`; Legendre's factorial formula
//! serves as a test oracle, not the implementation.

use num_bigint::BigUint;
use thiserror::Error;

use crate::rational::pow2_big;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum AdmissibilityError {
    #[error("2-adic valuation of 0 is undefined")]
    ZeroValuation,
    #[error("binomial parameters out of range: n={n}, k={k}")]
    BadBinomial { n: u64, k: u64 },
    #[error("admissibility is defined for n > k >= 2, got n={n}, k={k}")]
    BadOrderPair { n: u64, k: u64 },
    #[error("order listings support k in 2..=4, got {k}")]
    UnsupportedK { k: u64 },
    #[error("listing limit {limit} exceeds the supported maximum {max}")]
    LimitTooLarge { limit: u64, max: u64 },
}

/// Largest `limit` accepted by the order listings.
pub const MAX_LISTING_LIMIT: u64 = 1_000_000;

/// One row of an admissibility table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AdmissibilityRecord {
    pub n: u64,
    pub k: u64,
    /// ν₂(C(n,k)).
    pub nu2_binom: u32,
    /// C(k,2), the valuation required for admissibility.
    pub required: u32,
    pub admissible: bool,
}

/// Largest `e` with `2^e | n`. Errors on `n = 0`.
pub fn nu2(n: u64) -> Result<u32, AdmissibilityError> {
    if n == 0 {
        return Err(AdmissibilityError::ZeroValuation);
    }
    Ok(n.trailing_zeros())
}

/// ν₂(C(n,k)) as the number of carries when adding `n-k` and `k` in base 2.
pub fn nu2_binomial(n: u64, k: u64) -> Result<u32, AdmissibilityError> {
    if k > n {
        return Err(AdmissibilityError::BadBinomial { n, k });
    }
    let a = n - k;
    let b = k;
    let mut carries = 0u32;
    let mut carry = 0u64;
    for bit in 0..64 {
        let sum = ((a >> bit) & 1) + ((b >> bit) & 1) + carry;
        carry = sum >> 1;
        carries += carry as u32;
    }
    Ok(carries)
}

/// Full admissibility record for `(n, k)` with `n > k >= 2`.
pub fn admissibility_record(n: u64, k: u64) -> Result<AdmissibilityRecord, AdmissibilityError> {
    if k < 2 || n <= k {
        return Err(AdmissibilityError::BadOrderPair { n, k });
    }
    let nu2_binom = nu2_binomial(n, k)?;
    let required = (k * (k - 1) / 2) as u32;
    Ok(AdmissibilityRecord {
        n,
        k,
        nu2_binom,
        required,
        admissible: nu2_binom >= required,
    })
}

/// True iff `ν₂(C(n,k)) >= C(k,2)`. Requires `n > k >= 2`.
pub fn is_k_admissible(n: u64, k: u64) -> Result<bool, AdmissibilityError> {
    Ok(admissibility_record(n, k)?.admissible)
}

/// An order in a listing; `trivial` marks orders `n < k` where every graph is
/// vacuously k-symmetric. Listings include those (for `n >= 1`) to match the
/// conventional presentation of the sequences while keeping the
/// [`is_k_admissible`] predicate itself restricted to `n > k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrderEntry {
    pub n: u64,
    pub trivial: bool,
}

fn check_listing_params(k: u64, limit: u64) -> Result<(), AdmissibilityError> {
    if !(2..=4).contains(&k) {
        return Err(AdmissibilityError::UnsupportedK { k });
    }
    if limit > MAX_LISTING_LIMIT {
        return Err(AdmissibilityError::LimitTooLarge {
            limit,
            max: MAX_LISTING_LIMIT,
        });
    }
    Ok(())
}

/// All orders up to `limit` that can carry a k-symmetric graph: the trivial
/// orders `1 <= n < k` plus every `n > k` with `ν₂(C(n,k)) >= C(k,2)`.
pub fn admissible_orders(k: u64, limit: u64) -> Result<Vec<OrderEntry>, AdmissibilityError> {
    check_listing_params(k, limit)?;
    let mut out = Vec::new();
    for n in 1..k.min(limit + 1) {
        out.push(OrderEntry { n, trivial: true });
    }
    for n in k + 1..=limit {
        if is_k_admissible(n, k)? {
            out.push(OrderEntry { n, trivial: false });
        }
    }
    Ok(out)
}

/// Orders admissible for every `j` with `2 <= j <= k` (so a graph that is
/// j-symmetric for all those j simultaneously could exist), plus the orders
/// `n < 2` that are trivial for every j.
pub fn joint_admissible_orders(k: u64, limit: u64) -> Result<Vec<OrderEntry>, AdmissibilityError> {
    check_listing_params(k, limit)?;
    let mut out = Vec::new();
    if limit >= 1 {
        out.push(OrderEntry {
            n: 1,
            trivial: true,
        });
    }
    for n in k + 1..=limit {
        let mut all = true;
        for j in 2..=k {
            if !is_k_admissible(n, j)? {
                all = false;
                break;
            }
        }
        if all {
            out.push(OrderEntry { n, trivial: false });
        }
    }
    Ok(out)
}

/// Exponent of the smallest k-admissible order: `C(k,2) + ν₂(k)`.
pub fn smallest_admissible_exponent(k: u64) -> Result<u64, AdmissibilityError> {
    if k < 2 {
        return Err(AdmissibilityError::BadOrderPair { n: 0, k });
    }
    Ok(k * (k - 1) / 2 + nu2(k)? as u64)
}

/// The smallest k-admissible order, `2^(C(k,2) + ν₂(k))`.
pub fn smallest_admissible(k: u64) -> Result<BigUint, AdmissibilityError> {
    Ok(pow2_big(smallest_admissible_exponent(k)?))
}
