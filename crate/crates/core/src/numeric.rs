//! Exact counting helpers.
//!
//! Products run in `u128` and promote to [`BigUint`] on the first overflow,
//! so factorial quotients never wrap.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

/// Product of `lo..=hi` (empty product is 1).
pub fn rising_product(lo: u64, hi: u64) -> BigUint {
    let mut acc: u128 = 1;
    let mut k = lo.max(1);
    while k <= hi {
        match acc.checked_mul(k as u128) {
            Some(v) => acc = v,
            None => {
                let mut big = BigUint::from(acc);
                for j in k..=hi {
                    big *= j;
                }
                return big;
            }
        }
        k += 1;
    }
    BigUint::from(acc)
}

pub fn factorial(n: u64) -> BigUint {
    rising_product(1, n)
}

/// `n!` for `n ≤ 20`, which always fits in `u64`.
pub fn small_factorial(n: usize) -> u64 {
    assert!(n <= 20, "small_factorial({n}) exceeds u64");
    (1..=n as u64).product()
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    rising_product(n - k + 1, n) / factorial(k)
}

pub fn to_u64(x: &BigUint) -> Option<u64> {
    x.to_u64()
}

pub fn one() -> BigUint {
    BigUint::one()
}

pub(crate) fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a as i128
}
