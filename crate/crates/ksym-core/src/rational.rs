//! Exact rational arithmetic helpers. Densities are always [`Rational`]s;
//! floating point appears only in human-readable reporting.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::json;

/// Arbitrary-precision fraction, kept reduced with positive denominator.
pub type Rational = num_rational::BigRational;

/// Exact `num/den` as a [`Rational`].
pub fn ratio(num: i128, den: i128) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Exact integer value as a [`Rational`].
pub fn ratio_int(value: i128) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Binomial coefficient in fixed precision; callers keep `n <= 64`, `k <= 5`
/// well inside the u128 range.
pub fn binomial_u128(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Arbitrary-precision binomial coefficient.
pub fn binomial_big(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    num_integer::binomial(BigUint::from(n), BigUint::from(k))
}

/// `2^exponent` as a big integer.
pub fn pow2_big(exponent: u64) -> BigUint {
    BigUint::one() << exponent
}

/// Decimal rendering of a rational to `digits` fractional digits, truncated
/// toward zero (exactness lives in the numerator/denominator pair, this is a
/// convenience preview).
pub fn decimal_string(r: &Rational, digits: usize) -> String {
    let sign = if r.is_negative() { "-" } else { "" };
    let num = r.numer().abs().to_biguint().expect("abs is non-negative");
    let den = r.denom().to_biguint().expect("denominator is positive");
    let int_part = &num / &den;
    let mut rem = &num % &den;
    let mut frac = String::with_capacity(digits);
    for _ in 0..digits {
        if rem.is_zero() {
            break;
        }
        rem *= 10u32;
        frac.push(char::from(
            b'0' + (&rem / &den).to_u8().expect("single digit"),
        ));
        rem %= &den;
    }
    if frac.is_empty() {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac}")
    }
}

/// JSON view of an exact rational: numerator/denominator as strings (never
/// truncated) plus a decimal preview.
pub fn rational_json(r: &Rational) -> serde_json::Value {
    json!({
        "num": r.numer().to_string(),
        "den": r.denom().to_string(),
        "decimal": decimal_string(r, 12),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial_u128(8, 2), 28);
        assert_eq!(binomial_u128(16, 3), 560);
        assert_eq!(binomial_u128(64, 5), 7_624_512);
        assert_eq!(binomial_u128(3, 5), 0);
        assert_eq!(binomial_big(28, 14).to_string(), "40116600");
    }

    #[test]
    fn reduction_invariants() {
        let r = ratio(14, 56);
        assert_eq!(r, ratio(1, 4));
        assert_eq!(r.denom().to_string(), "4");
        let neg = ratio(3, -6);
        assert!(neg.denom().is_positive());
        assert_eq!(neg, ratio(-1, 2));
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(decimal_string(&ratio(1, 8), 6), "0.125");
        assert_eq!(decimal_string(&ratio(-1, 3), 5), "-0.33333");
        assert_eq!(decimal_string(&ratio_int(42), 4), "42");
        assert_eq!(decimal_string(&ratio(7, 186), 8), "0.03763440");
    }

    #[test]
    fn json_view_is_exact() {
        let v = rational_json(&ratio(451, 10_000));
        assert_eq!(v["num"], "451");
        assert_eq!(v["den"], "10000");
        assert_eq!(v["decimal"], "0.0451");
    }
}
