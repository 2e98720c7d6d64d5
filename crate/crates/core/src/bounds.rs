//! Numeric bounds on derived length and on minimal normal subgroups of
//! groups with a supercomplemented cyclic `p`-subgroup of order `m`.
//!
//! Every bracket `[·]` in the formulas is an exact floor. Floors of
//! logarithms are computed by integer comparison where that is cheap, and
//! otherwise in `f64` with an error guard; values inside the guard fall back
//! to exact big-integer arithmetic.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::group::is_prime;

/// Largest `m` accepted by [`n_of_m`]; beyond it `m^m` is too large for the
/// exact fallback to be practical.
pub const MAX_M: u64 = 1 << 24;

/// Minimum half-width of the band around an integer in which a floating
/// value is not trusted.
pub const FLOOR_GUARD: f64 = 1e-9;

fn guard_for(x: f64) -> f64 {
    // f64 log2 is accurate to about one ulp, and the product adds another.
    FLOOR_GUARD.max(x.abs() * 8.0 * f64::EPSILON)
}

/// `floor(x)` when `x` is clear of the guard band around every integer.
fn certified_floor(x: f64) -> Option<u64> {
    let f = x.floor();
    let g = guard_for(x);
    (x - f > g && f + 1.0 - x > g).then_some(f as u64)
}

/// `floor(m·log₂ m)`, i.e. the bit length of `m^m` minus one.
fn floor_m_log2_m(m: u64) -> u64 {
    if m.is_power_of_two() {
        return m * u64::from(m.trailing_zeros());
    }
    let x = m as f64 * (m as f64).log2();
    certified_floor(x).unwrap_or_else(|| BigUint::from(m).pow(m as u32).bits() - 1)
}

/// `n = [m(m−1) + m·log₂ m]`, with `n = 1` for `m = 1`.
///
/// # Panics
/// If `m` is zero or exceeds [`MAX_M`].
pub fn n_of_m(m: u64) -> u64 {
    assert!((1..=MAX_M).contains(&m), "m = {m} outside 1..={MAX_M}");
    if m == 1 {
        return 1;
    }
    m * (m - 1) + floor_m_log2_m(m)
}

/// The estimate for `ζ(n)`: `2n` for `n ≤ 6`, 14 for `7 ≤ n ≤ 73`, and
/// `[5·log₉((n−2)/8) + 10]` beyond.
///
/// The last piece is `10 + k` for the largest `k` with `9^k·8^5 ≤ (n−2)^5`;
/// the integer comparison is only needed near a boundary.
pub fn zeta_bound(n: u64) -> u64 {
    match n {
        0..=6 => 2 * n,
        7..=73 => 14,
        _ => {
            let x = 5.0 * ((n - 2) as f64 / 8.0).ln() / 9f64.ln();
            10 + certified_floor(x).unwrap_or_else(|| floor_five_log9((n - 2) as u128))
        }
    }
}

/// Largest `k` with `9^k · 8^5 ≤ y^5`, for `y ≥ 72`.
fn floor_five_log9(y: u128) -> u64 {
    const EIGHT_5: u128 = 32768;
    if y < 1 << 25 {
        let rhs = y.pow(5);
        let mut k = 0;
        let mut lhs = EIGHT_5;
        while lhs * 9 <= rhs {
            lhs *= 9;
            k += 1;
        }
        k
    } else {
        let rhs = BigUint::from(y).pow(5);
        let mut k = 0;
        let mut lhs = BigUint::from(EIGHT_5);
        loop {
            let next = &lhs * 9u32;
            if next > rhs {
                return k;
            }
            lhs = next;
            k += 1;
        }
    }
}

/// A real-valued bound together with its exact floor.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RealBound {
    pub value: f64,
    pub floor: u64,
}

/// Upper bound on the derived length: 2, 11, 18 for `m = 1`, `m = 2`,
/// `2 < m < 8`, and `5·log₉((n−2)/8) + 13` for `m ≥ 8`.
pub fn derived_length_bound(m: u64) -> RealBound {
    match m {
        0 | 1 => RealBound { value: 2.0, floor: 2 },
        2 => RealBound { value: 11.0, floor: 11 },
        3..=7 => RealBound { value: 18.0, floor: 18 },
        _ => {
            let n = n_of_m(m);
            RealBound {
                value: 5.0 * ((n - 2) as f64 / 8.0).ln() / 9f64.ln() + 13.0,
                floor: zeta_bound(n) + 3,
            }
        }
    }
}

/// The general form `ζ(n) + 3`.
pub fn prop2_bound(m: u64) -> u64 {
    zeta_bound(n_of_m(m)) + 3
}

/// `q^((m−1)m) · m^m`, or `q` itself when `m = 1`.
pub fn prop1_bound(q: u64, m: u64) -> Result<BigUint> {
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    if m <= 1 {
        return Ok(BigUint::from(q));
    }
    let exponent = u32::try_from((m - 1) * m)
        .map_err(|_| Error::Precondition(format!("m = {m} is too large")))?;
    Ok(BigUint::from(q).pow(exponent) * BigUint::from(m).pow(m as u32))
}

/// `m!`
pub fn factorial_index_bound(m: u64) -> BigUint {
    (2..=m).fold(BigUint::one(), |acc, k| acc * k)
}

/// All bounds attached to a given `m` (and optionally a prime `q`).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub m: u64,
    pub n: u64,
    pub zeta: u64,
    #[serde(serialize_with = "integral_if_whole")]
    pub d_bound: f64,
    pub d_bound_floor: u64,
    pub prop2_bound: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<u64>,
    /// Decimal string; these overflow every machine integer quickly.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prop1_bound: Option<String>,
    pub factorial_index_bound: String,
}

fn integral_if_whole<S: Serializer>(x: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
    if x.fract() == 0.0 {
        s.serialize_u64(*x as u64)
    } else {
        s.serialize_f64(*x)
    }
}

impl BoundReport {
    pub fn new(m: u64, q: Option<u64>) -> Result<BoundReport> {
        if !(1..=MAX_M).contains(&m) {
            return Err(Error::Precondition(format!("m must lie in 1..={MAX_M}")));
        }
        let n = n_of_m(m);
        let d = derived_length_bound(m);
        let prop1 = q.map(|q| prop1_bound(q, m)).transpose()?;
        Ok(BoundReport {
            m,
            n,
            zeta: zeta_bound(n),
            d_bound: d.value,
            d_bound_floor: d.floor,
            prop2_bound: prop2_bound(m),
            q,
            prop1_bound: prop1.map(|b| b.to_string()),
            factorial_index_bound: factorial_index_bound(m).to_string(),
        })
    }
}

/// Number of decimal digits of a big integer.
pub fn decimal_digits(x: &BigUint) -> usize {
    x.to_string().len()
}

/// `log10` of a big integer, good to a few ulps.
pub fn log10(x: &BigUint) -> f64 {
    let bits = x.bits();
    let shift = bits.saturating_sub(64);
    let top = (x >> shift).to_f64().unwrap_or(f64::MAX);
    top.log10() + shift as f64 * 2f64.log10()
}
