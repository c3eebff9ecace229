//! Exact integer helpers shared by the closed-form evaluators.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

pub fn factorial(n: u64) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// Falling product `n (n-1) ... (n-len+1)`.
fn falling(n: u64, len: u64) -> BigUint {
    (0..len).fold(BigUint::one(), |acc, i| acc * (n - i))
}

/// Binomial coefficient extended by zero: `C(a, b) = 0` when `a < 0`, `b < 0`
/// or `b > a`.
pub fn binom(a: i64, b: i64) -> BigInt {
    if a < 0 || b < 0 || b > a {
        return BigInt::zero();
    }
    let (a, b) = (a as u64, b as u64);
    let b = b.min(a - b);
    BigInt::from(falling(a, b) / factorial(b))
}

/// `base^exp` with `0^0 = 1`.
pub fn pow(base: i64, exp: u64) -> BigInt {
    num_traits::pow::pow(BigInt::from(base), exp as usize)
}

/// Integer power for a term whose coefficient may already vanish. Negative
/// exponents are only legal when the coefficient is zero.
pub(crate) fn coeff_pow(coeff: BigInt, base: i64, exp: i64) -> BigInt {
    if coeff.is_zero() {
        return coeff;
    }
    assert!(exp >= 0, "negative exponent {exp} with nonzero coefficient");
    coeff * pow(base, exp as u64)
}

pub fn sign(j: u64) -> BigInt {
    if j.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_support() {
        assert_eq!(binom(5, 2), BigInt::from(10));
        assert_eq!(binom(0, 0), BigInt::from(1));
        assert_eq!(binom(-1, 0), BigInt::zero());
        assert_eq!(binom(3, -1), BigInt::zero());
        assert_eq!(binom(3, 4), BigInt::zero());
    }

    #[test]
    fn pascal_rule() {
        for a in 1..40 {
            for b in 1..=a {
                assert_eq!(binom(a, b), binom(a - 1, b) + binom(a - 1, b - 1));
            }
        }
    }

    #[test]
    fn zero_to_the_zero() {
        assert_eq!(pow(0, 0), BigInt::one());
        assert_eq!(pow(0, 3), BigInt::zero());
        assert_eq!(pow(-2, 3), BigInt::from(-8));
    }

    #[test]
    fn large_factorial() {
        let f = factorial(500);
        assert_eq!(f.to_string().len(), 1135);
        assert_eq!(&f / factorial(499), BigUint::from(500u32));
    }
}
