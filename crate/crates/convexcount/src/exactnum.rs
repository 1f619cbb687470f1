//! Arbitrary-precision integers and rationals, extended binomial
//! coefficients, Pochhammer symbols, and the Chu-Vandermonde checker.
//!
//! Binomials follow the lattice-path vanishing convention: `C(n,k) = 0`
//! unless `0 <= k <= n`. The falling-factorial extension (which would give
//! `C(-2,0) = 1`) is deliberately not used; the single degenerate point-path
//! case is handled inside the quadruple-sum evaluator instead.

use num_traits::{One, Signed, Zero};

use crate::Error;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Convenience constructor for an exact rational `p/q`.
///
/// Panics if `q == 0`.
pub fn rational(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Binomial coefficient with the vanishing convention:
/// `C(n,k) = n! / (k! (n-k)!)` for `0 <= k <= n`, and `0` otherwise
/// (including every case with `n < 0`).
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

/// Rising factorial `(x)_n = x (x+1) ... (x+n-1)`, with `(x)_0 = 1`.
pub fn pochhammer(x: &BigRational, n: u32) -> BigRational {
    let mut acc = BigRational::one();
    for i in 0..n {
        acc *= x + BigRational::from_integer(BigInt::from(i));
    }
    acc
}

/// Checks the Chu-Vandermonde evaluation
/// `sum_k (-n)_k (a)_k / ((c)_k k!) = (c-a)_n / (c)_n`
/// by exact summation of the terminating left side.
///
/// Returns an error if `c` puts a pole in the sum, i.e. `(c)_k = 0` for
/// some `1 <= k <= n`.
pub fn chu_vandermonde_check(n: u32, a: &BigRational, c: &BigRational) -> Result<bool, Error> {
    for k in 1..=n {
        if pochhammer(c, k).is_zero() {
            return Err(Error::Pole { c: c.clone(), k });
        }
    }
    let minus_n = BigRational::from_integer(-BigInt::from(n));
    let mut lhs = BigRational::zero();
    let mut factorial = BigRational::one();
    for k in 0..=n {
        if k > 0 {
            factorial *= BigRational::from_integer(BigInt::from(k));
        }
        lhs += pochhammer(&minus_n, k) * pochhammer(a, k) / (pochhammer(c, k) * &factorial);
    }
    let rhs = pochhammer(&(c - a), n) / pochhammer(c, n);
    Ok(lhs == rhs)
}

/// Converts an exact rational known to be integral; panics otherwise.
///
/// Used by the closed-form evaluators whose rational prefactors must cancel;
/// a non-integer result signals a transcribed formula is wrong.
pub(crate) fn expect_integer(value: BigRational, what: &str) -> BigInt {
    assert!(
        value.is_integer(),
        "{what}: expected an integer, got {value}"
    );
    value.to_integer()
}

/// `4^n` as a big integer.
pub(crate) fn pow4(n: u32) -> BigInt {
    BigInt::from(4).pow(n)
}

/// True if `value` is a non-negative integer.
pub fn is_nonneg_integer(value: &BigRational) -> bool {
    value.is_integer() && !value.is_negative()
}
