//! Closed-form counts of convex polyominoes, the quadruple binomial sum,
//! and its decomposition into the pieces S0..S5 with both raw-sum and
//! closed-form evaluators.
//!
//! All closed forms are computed in exact rationals and asserted integral
//! before returning, so a transcription slip in one of the `m+n`
//! denominators is caught immediately.

use num_traits::{One, Zero};

use crate::exactnum::{binomial, expect_integer, pow4, BigInt, BigRational};

fn rat(i: BigInt) -> BigRational {
    BigRational::from_integer(i)
}

/// Number of convex polyominoes with an `(m+1) x (n+1)` minimal bounding
/// rectangle:
/// `(m+n+mn)/(m+n) C(2m+2n,2m) - 2mn/(m+n) C(m+n,m)^2`,
/// with the single-cell convention `count_rect(0,0) = 1`.
pub fn count_rect(m: i64, n: i64) -> BigInt {
    assert!(m >= 0 && n >= 0, "m and n must be non-negative");
    if m + n == 0 {
        return BigInt::one();
    }
    let c = rat(binomial(2 * m + 2 * n, 2 * m));
    let sq = rat(binomial(m + n, m).pow(2));
    let value = BigRational::new(BigInt::from(m + n + m * n), BigInt::from(m + n)) * c
        - BigRational::new(BigInt::from(2 * m * n), BigInt::from(m + n)) * sq;
    expect_integer(value, "count_rect")
}

/// Number of convex polyominoes with perimeter `2N+8`:
/// `(2N+11) 4^N - 4(2N+1) C(2N,N)`.
pub fn count_perimeter(n: i64) -> BigInt {
    assert!(n >= 0, "N must be non-negative");
    BigInt::from(2 * n + 11) * pow4(n as u32) - BigInt::from(4 * (2 * n + 1)) * binomial(2 * n, n)
}

/// The determinant factor for the bottom-left/top-right path pair, with the
/// point-path convention: `f(0,0) = 1` (a point path), otherwise
/// `C(a+b-2, a-1)` under the vanishing convention (so mixed cases with
/// exactly one of `a, b` zero give 0).
fn corner_factor(a: i64, b: i64) -> BigInt {
    if a == 0 && b == 0 {
        BigInt::one()
    } else {
        binomial(a + b - 2, a - 1)
    }
}

/// The full quadruple sum for the cardinality of `P_{m,n}`: a product of
/// two 2x2 path-pair determinants summed over all four corner parameters.
pub fn quadruple_sum(m: i64, n: i64) -> BigInt {
    assert!(m >= 1 && n >= 1, "quadruple_sum requires m, n >= 1");
    let mut total = BigInt::zero();
    for a1 in 0..=m {
        for b1 in 0..=n {
            let f1 = corner_factor(a1, b1);
            for a2 in 0..=m {
                for b2 in 0..=n {
                    let first = &f1 * corner_factor(a2, b2)
                        - binomial(a1 + a2 + n - m - 2, n - 1)
                            * binomial(b1 + b2 + m - n - 2, m - 1);
                    if first.is_zero() {
                        continue;
                    }
                    let second = binomial(m + n - a2 - b1, m - a2)
                        * binomial(m + n - a1 - b2, m - a1)
                        - binomial(m + n - a1 - a2, n + 1) * binomial(m + n - b1 - b2, m + 1);
                    total += first * second;
                }
            }
        }
    }
    total
}

// --- the S0..S5 pieces ------------------------------------------------------

/// The `a1=a2=b1=b2=0` term: `C(m+n,m)^2 - C(m+n,m-1) C(m+n,n-1)`.
pub fn s0(m: i64, n: i64) -> BigInt {
    binomial(m + n, m).pow(2) - binomial(m + n, m - 1) * binomial(m + n, n - 1)
}

/// The `a1=b1=0` or `a2=b2=0` terms, summed directly.
pub fn s1_raw(m: i64, n: i64) -> BigInt {
    let mut total = BigInt::zero();
    for a in 1..=m {
        for b in 1..=n {
            total += binomial(a + b - 2, a - 1)
                * (binomial(m + n - a, m - a) * binomial(m + n - b, m)
                    - binomial(m + n - a, n + 1) * binomial(m + n - b, m + 1));
        }
    }
    total * BigInt::from(2)
}

/// Closed form after telescoping: `2 C(m+n,n+1) C(m+n,n-1)`.
pub fn s1_closed(m: i64, n: i64) -> BigInt {
    BigInt::from(2) * binomial(m + n, n + 1) * binomial(m + n, n - 1)
}

/// Defining quadruple sum of S2.
pub fn s2_raw(m: i64, n: i64) -> BigInt {
    let mut total = BigInt::zero();
    for a1 in 1..=m {
        for b1 in 1..=n {
            let left = binomial(a1 + b1 - 2, a1 - 1);
            if left.is_zero() {
                continue;
            }
            for a2 in 1..=m {
                for b2 in 1..=n {
                    total += &left
                        * binomial(a2 + b2 - 2, a2 - 1)
                        * binomial(m + n - a2 - b1, m - a2)
                        * binomial(m + n - a1 - b2, m - a1);
                }
            }
        }
    }
    total
}

/// Closed form: `mn/(m+n) C(2m+2n,2m) - mn/(m+n) C(m+n,m)^2`.
pub fn s2_closed(m: i64, n: i64) -> BigInt {
    let pre = BigRational::new(BigInt::from(m * n), BigInt::from(m + n));
    expect_integer(
        pre * (rat(binomial(2 * m + 2 * n, 2 * m)) - rat(binomial(m + n, m).pow(2))),
        "s2_closed",
    )
}

/// S3 as the rewritten double sum:
/// `sum_{a,b} C(m+n+a-b-1, m+a-1) C(m+n-a+b-1, n+b-1)`.
pub fn s3_raw(m: i64, n: i64) -> BigInt {
    let mut total = BigInt::zero();
    for a in 1..=m {
        for b in 1..=n {
            total += binomial(m + n + a - b - 1, m + a - 1) * binomial(m + n - a + b - 1, n + b - 1);
        }
    }
    total
}

/// Closed form: `mn/(2(m+n)) C(m+n,m)^2`.
pub fn s3_closed(m: i64, n: i64) -> BigInt {
    let pre = BigRational::new(BigInt::from(m * n), BigInt::from(2 * (m + n)));
    expect_integer(pre * rat(binomial(m + n, m).pow(2)), "s3_closed")
}

/// S4 as a double sum over the full range `1..m, 1..n`; the summand
/// vanishes for `a = m-1, m` or `b = n-1, n`, which is checked as a
/// property rather than assumed.
pub fn s4_raw(m: i64, n: i64) -> BigInt {
    let mut total = BigInt::zero();
    for a in 1..=m {
        for b in 1..=n {
            total += binomial(m + n + a - b - 1, m + a + 1) * binomial(m + n - a + b - 1, n + b + 1);
        }
    }
    total
}

/// Closed form:
/// `C(m+n,m)^2 + C(m+n,m-1) C(m+n,n-1) + mn/(2(m+n)) C(m+n,m)^2 - C(2m+2n,2n)`.
pub fn s4_closed(m: i64, n: i64) -> BigInt {
    binomial(m + n, m).pow(2) + binomial(m + n, m - 1) * binomial(m + n, n - 1) + s3_closed(m, n)
        - binomial(2 * m + 2 * n, 2 * n)
}

/// The remainder piece of the product expansion; always 0 because the sum
/// of the numerator parameters falls short of the denominator parameters.
pub fn s5_raw(m: i64, n: i64) -> BigInt {
    let mut total = BigInt::zero();
    for a1 in 1..=m {
        for b1 in 1..=n {
            for a2 in 1..=m {
                for b2 in 1..=n {
                    total += binomial(a1 + a2 + n - m - 2, n - 1)
                        * binomial(b1 + b2 + m - n - 2, m - 1)
                        * binomial(m + n - a1 - a2, n + 1)
                        * binomial(m + n - b1 - b2, m + 1);
                }
            }
        }
    }
    total
}

/// The S0..S5 values for one `(m,n)`, raw and closed, together with the
/// quadruple sum and the closed-form count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumBreakdown {
    pub m: i64,
    pub n: i64,
    pub s0: BigInt,
    pub s1_raw: BigInt,
    pub s1_closed: BigInt,
    pub s2_raw: BigInt,
    pub s2_closed: BigInt,
    pub s3_raw: BigInt,
    pub s3_closed: BigInt,
    pub s4_raw: BigInt,
    pub s4_closed: BigInt,
    pub s5_raw: BigInt,
    pub quadruple: BigInt,
    pub closed: BigInt,
}

impl SumBreakdown {
    /// Every raw sum equals its closed form and S5 vanishes.
    pub fn raw_matches_closed(&self) -> bool {
        self.s1_raw == self.s1_closed
            && self.s2_raw == self.s2_closed
            && self.s3_raw == self.s3_closed
            && self.s4_raw == self.s4_closed
            && self.s5_raw.is_zero()
    }

    /// `S0 + S1 + S2 - S3 - S4 = quadruple = closed`.
    pub fn decomposition_holds(&self) -> bool {
        &self.s0 + &self.s1_raw + &self.s2_raw - &self.s3_raw - &self.s4_raw == self.quadruple
            && self.quadruple == self.closed
    }

    pub fn all_consistent(&self) -> bool {
        self.raw_matches_closed() && self.decomposition_holds()
    }
}

/// Evaluates every piece for one `(m,n)` with `m, n >= 1`.
pub fn breakdown(m: i64, n: i64) -> SumBreakdown {
    assert!(m >= 1 && n >= 1, "breakdown requires m, n >= 1");
    SumBreakdown {
        m,
        n,
        s0: s0(m, n),
        s1_raw: s1_raw(m, n),
        s1_closed: s1_closed(m, n),
        s2_raw: s2_raw(m, n),
        s2_closed: s2_closed(m, n),
        s3_raw: s3_raw(m, n),
        s3_closed: s3_closed(m, n),
        s4_raw: s4_raw(m, n),
        s4_closed: s4_closed(m, n),
        s5_raw: s5_raw(m, n),
        quadruple: quadruple_sum(m, n),
        closed: count_rect(m, n),
    }
}

// --- identity checkers for the intermediate steps ---------------------------

/// The difference rewriting that telescopes the S1 sum:
/// `C(m+n-a,n) C(m+n+a-1,n-1) - C(m+n-a,n+1) C(m+n+a-1,n-2)`
/// `= C(m+n-a+1,n+1) C(m+n+a-1,n-1) - C(m+n-a,n+1) C(m+n+a,n-1)`.
pub fn check_s1_telescoping(m: i64, n: i64, a: i64) -> bool {
    binomial(m + n - a, n) * binomial(m + n + a - 1, n - 1)
        - binomial(m + n - a, n + 1) * binomial(m + n + a - 1, n - 2)
        == binomial(m + n - a + 1, n + 1) * binomial(m + n + a - 1, n - 1)
            - binomial(m + n - a, n + 1) * binomial(m + n + a, n - 1)
}

/// The difference rewriting that telescopes the S2 sum:
/// `2a C(m+n+a-1,n-1) C(m+n-a-1,n-1)`
/// `= n C(m+n+a-1,n) C(m+n-a,n) - n C(m+n+a,n) C(m+n-a-1,n)`.
pub fn check_s2_telescoping(m: i64, n: i64, a: i64) -> bool {
    BigInt::from(2 * a) * binomial(m + n + a - 1, n - 1) * binomial(m + n - a - 1, n - 1)
        == BigInt::from(n)
            * (binomial(m + n + a - 1, n) * binomial(m + n - a, n)
                - binomial(m + n + a, n) * binomial(m + n - a - 1, n))
}

/// The Chu-Vandermonde evaluations of the two b-sums inside S1.
pub fn check_s1_reduction(m: i64, n: i64, a: i64) -> bool {
    let sum1: BigInt = (1..=n)
        .map(|b| binomial(a + b - 2, a - 1) * binomial(m + n - b, m))
        .sum();
    let sum2: BigInt = (1..=n)
        .map(|b| binomial(a + b - 2, a - 1) * binomial(m + n - b, m + 1))
        .sum();
    sum1 == binomial(m + n + a - 1, n - 1) && sum2 == binomial(m + n + a - 1, n - 2)
}

/// The Chu-Vandermonde evaluations of the two b-sums inside S2.
pub fn check_s2_reduction(m: i64, n: i64, a1: i64, a2: i64) -> bool {
    let sum1: BigInt = (1..=n)
        .map(|b1| binomial(a1 + b1 - 2, a1 - 1) * binomial(m + n - a2 - b1, m - a2))
        .sum();
    let sum2: BigInt = (1..=n)
        .map(|b2| binomial(a2 + b2 - 2, a2 - 1) * binomial(m + n - a1 - b2, m - a1))
        .sum();
    sum1 == binomial(m + n + a1 - a2 - 1, n - 1) && sum2 == binomial(m + n - a1 + a2 - 1, n - 1)
}

/// The Chu-Vandermonde evaluations of the a2-sum and b2-sum inside S3.
pub fn check_s3_reduction(m: i64, n: i64, a1: i64, b1: i64) -> bool {
    let sum1: BigInt = (1..=m)
        .map(|a2| binomial(a1 + a2 + n - m - 2, n - 1) * binomial(m + n - a2 - b1, m - a2))
        .sum();
    let sum2: BigInt = (1..=n)
        .map(|b2| binomial(b1 + b2 + m - n - 2, m - 1) * binomial(m + n - a1 - b2, m - a1))
        .sum();
    sum1 == binomial(2 * n + a1 - b1 - 1, a1 - 1) && sum2 == binomial(2 * m - a1 + b1 - 1, b1 - 1)
}

/// The Chu-Vandermonde evaluations of the a1-sum and b2-sum inside S4.
pub fn check_s4_reduction(m: i64, n: i64, b1: i64, a2: i64) -> bool {
    let sum1: BigInt = (1..=m)
        .map(|a1| binomial(a1 + b1 - 2, a1 - 1) * binomial(m + n - a1 - a2, n + 1))
        .sum();
    let sum2: BigInt = (1..=n)
        .map(|b2| binomial(a2 + b2 - 2, a2 - 1) * binomial(m + n - b1 - b2, m + 1))
        .sum();
    sum1 == binomial(m + n - a2 + b1 - 1, n + b1 + 1)
        && sum2 == binomial(m + n + a2 - b1 - 1, m + a2 + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn count_rect_anchor_values() {
        assert_eq!(count_rect(0, 0), BigInt::one());
        assert_eq!(count_rect(1, 1), BigInt::from(5));
        assert_eq!(count_rect(1, 2), BigInt::from(13));
        assert_eq!(count_rect(2, 2), BigInt::from(68));
        for k in 0..=20 {
            assert_eq!(count_rect(k, 0), BigInt::one());
            assert_eq!(count_rect(0, k), BigInt::one());
        }
    }

    #[test]
    fn count_perimeter_anchor_values() {
        assert_eq!(count_perimeter(0), BigInt::from(7));
        assert_eq!(count_perimeter(1), BigInt::from(28));
        assert_eq!(count_perimeter(2), BigInt::from(120));
    }

    #[test]
    fn refinement_small() {
        for big_n in 0..=8 {
            let sum: BigInt = (0..=big_n + 2).map(|m| count_rect(m, big_n + 2 - m)).sum();
            assert_eq!(sum, count_perimeter(big_n), "N={big_n}");
        }
    }

    #[test]
    fn quadruple_sum_anchor_values() {
        assert_eq!(quadruple_sum(1, 1), BigInt::from(5));
        assert_eq!(quadruple_sum(1, 2), BigInt::from(13));
        assert_eq!(quadruple_sum(3, 2), count_rect(3, 2));
    }

    #[test]
    fn breakdown_at_1_1() {
        let b = breakdown(1, 1);
        assert_eq!(b.s0, BigInt::from(3));
        assert_eq!(b.s1_raw, BigInt::from(2));
        assert_eq!(b.s1_closed, BigInt::from(2));
        assert_eq!(b.s2_raw, BigInt::one());
        assert_eq!(b.s3_raw, BigInt::one());
        assert_eq!(b.s3_closed, BigInt::one());
        assert_eq!(b.s4_raw, BigInt::zero());
        assert_eq!(b.s4_closed, BigInt::zero());
        assert_eq!(b.s5_raw, BigInt::zero());
        assert_eq!(b.quadruple, BigInt::from(5));
        assert_eq!(b.closed, BigInt::from(5));
        assert!(b.all_consistent());
    }

    #[test]
    fn breakdown_symmetry() {
        for (m, n) in [(1, 3), (2, 5), (4, 2)] {
            assert_eq!(breakdown(m, n).closed, breakdown(n, m).closed);
        }
    }

    #[test]
    fn decomposition_grid_small() {
        for m in 1..=6 {
            for n in 1..=6 {
                let b = breakdown(m, n);
                assert!(b.all_consistent(), "breakdown inconsistent at ({m},{n})");
            }
        }
    }

    #[test]
    fn s4_raw_restriction_is_vacuous() {
        // The full-range sum equals the sum restricted to a <= m-2, b <= n-2.
        for m in 1..=8 {
            for n in 1..=8 {
                let restricted: BigInt = (1..=m - 2)
                    .flat_map(|a| {
                        (1..=n - 2).map(move |b| {
                            binomial(m + n + a - b - 1, m + a + 1)
                                * binomial(m + n - a + b - 1, n + b + 1)
                        })
                    })
                    .sum();
                assert_eq!(s4_raw(m, n), restricted, "({m},{n})");
            }
        }
    }

    #[test]
    fn telescoping_grids() {
        for m in 1..=10 {
            for n in 1..=10 {
                for a in 1..=m {
                    assert!(check_s1_telescoping(m, n, a), "s1 at ({m},{n},{a})");
                    assert!(check_s2_telescoping(m, n, a), "s2 at ({m},{n},{a})");
                }
            }
        }
    }

    #[test]
    fn chu_vandermonde_reductions() {
        for m in 1..=8 {
            for n in 1..=8 {
                for a in 1..=m {
                    assert!(check_s1_reduction(m, n, a), "s1 at ({m},{n},{a})");
                    for a2 in 1..=m {
                        assert!(check_s2_reduction(m, n, a, a2), "s2 at ({m},{n},{a},{a2})");
                    }
                    for b in 1..=n {
                        assert!(check_s3_reduction(m, n, a, b), "s3 at ({m},{n},{a},{b})");
                        assert!(check_s4_reduction(m, n, b, a), "s4 at ({m},{n},{b},{a})");
                    }
                }
            }
        }
    }
}
