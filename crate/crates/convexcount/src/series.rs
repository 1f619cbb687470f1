//! Truncated bivariate formal power series over exact rationals, with
//! reciprocal, square root, the Euler-type operator, and double bisection,
//! plus builders and verifiers for the generating-function identities that
//! evaluate S3 and S4.
//!
//! Series are truncated by total degree: exactly the coefficients with
//! `i + j <= D` are stored (triangular layout) and operations never consult
//! or produce terms beyond `D`.

use num_traits::{One, Signed, Zero};

use crate::counting;
use crate::exactnum::{binomial, BigInt, BigRational};
use crate::Error;

/// Default truncation degree for the identity suite.
pub const DEFAULT_DEGREE: usize = 12;

/// Default truncation degree for the double-bisection identity.
pub const DEFAULT_BISECTION_DEGREE: usize = 14;

fn rat(i: BigInt) -> BigRational {
    BigRational::from_integer(i)
}

/// A truncated power series in two variables with exact rational
/// coefficients. Equality is coefficient-wise up to the truncation degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariateSeries {
    trunc: usize,
    /// Triangular storage: degree blocks 0..=trunc, block `d` holding
    /// `(i, d-i)` for `i = 0..=d`.
    coeffs: Vec<BigRational>,
}

fn tri(d: usize) -> usize {
    d * (d + 1) / 2
}

impl BivariateSeries {
    pub fn zero(trunc: usize) -> Self {
        // blocks 0..=trunc of sizes 1..=trunc+1 sum to tri(trunc+1)
        BivariateSeries {
            trunc,
            coeffs: vec![BigRational::zero(); tri(trunc + 1)],
        }
    }

    pub fn one(trunc: usize) -> Self {
        let mut s = Self::zero(trunc);
        s.coeffs[0] = BigRational::one();
        s
    }

    /// Embeds a polynomial given as `(i, j, coefficient)` terms; duplicate
    /// `(i, j)` entries are summed.
    pub fn from_polynomial(
        terms: &[(usize, usize, BigRational)],
        trunc: usize,
    ) -> Result<Self, Error> {
        let mut s = Self::zero(trunc);
        for (i, j, c) in terms {
            if i + j > trunc {
                return Err(Error::ExponentOutOfRange { i: *i, j: *j, degree: trunc });
            }
            s.coeffs[tri(i + j) + i] += c;
        }
        Ok(s)
    }

    /// Builds a series from integer polynomial terms; panics if an exponent
    /// exceeds the truncation (convenience for fixed internal kernels).
    fn from_int_terms(terms: &[(usize, usize, i64)], trunc: usize) -> Self {
        let terms: Vec<(usize, usize, BigRational)> = terms
            .iter()
            .map(|&(i, j, c)| (i, j, rat(BigInt::from(c))))
            .collect();
        Self::from_polynomial(&terms, trunc).expect("kernel exponent within truncation")
    }

    /// Fills every stored coefficient from a function of `(i, j)`.
    pub fn from_fn(trunc: usize, mut f: impl FnMut(usize, usize) -> BigRational) -> Self {
        let mut s = Self::zero(trunc);
        for d in 0..=trunc {
            for i in 0..=d {
                s.coeffs[tri(d) + i] = f(i, d - i);
            }
        }
        s
    }

    pub fn truncation(&self) -> usize {
        self.trunc
    }

    /// Coefficient of `x^i y^j`; zero outside the stored triangle.
    pub fn coeff(&self, i: usize, j: usize) -> BigRational {
        if i + j > self.trunc {
            BigRational::zero()
        } else {
            self.coeffs[tri(i + j) + i].clone()
        }
    }

    fn assert_same_trunc(&self, other: &Self) {
        assert_eq!(
            self.trunc, other.trunc,
            "truncation mismatch: {} vs {}",
            self.trunc, other.trunc
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_trunc(other);
        BivariateSeries {
            trunc: self.trunc,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.assert_same_trunc(other);
        BivariateSeries {
            trunc: self.trunc,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        BivariateSeries {
            trunc: self.trunc,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        BivariateSeries {
            trunc: self.trunc,
            coeffs: self.coeffs.iter().map(|a| a * factor).collect(),
        }
    }

    /// Truncated ring product.
    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_trunc(other);
        let mut out = Self::zero(self.trunc);
        for d1 in 0..=self.trunc {
            for i in 0..=d1 {
                let a = &self.coeffs[tri(d1) + i];
                if a.is_zero() {
                    continue;
                }
                for d2 in 0..=self.trunc - d1 {
                    for k in 0..=d2 {
                        let b = &other.coeffs[tri(d2) + k];
                        if !b.is_zero() {
                            out.coeffs[tri(d1 + d2) + i + k] += a * b;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut out = Self::one(self.trunc);
        for _ in 0..exp {
            out = out.mul(self);
        }
        out
    }

    /// Multiplicative inverse up to the truncation; requires a non-zero
    /// constant term. Computed order by order from `self * t = 1`.
    pub fn reciprocal(&self) -> Result<Self, Error> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let mut out = Self::zero(self.trunc);
        out.coeffs[0] = c0.recip();
        for d in 1..=self.trunc {
            for i in 0..=d {
                let j = d - i;
                let mut acc = BigRational::zero();
                for dd in 0..d {
                    for k in 0..=dd.min(i) {
                        let l = dd - k;
                        if l > j {
                            continue;
                        }
                        let t = &out.coeffs[tri(dd) + k];
                        if !t.is_zero() {
                            acc += &self.coeffs[tri(i - k + j - l) + (i - k)] * t;
                        }
                    }
                }
                out.coeffs[tri(d) + i] = -acc / c0;
            }
        }
        Ok(out)
    }

    /// Square root with constant term 1, computed by the coefficient
    /// recurrence from `t^2 = self`; each order is uniquely determined.
    pub fn sqrt(&self) -> Result<Self, Error> {
        if !self.coeffs[0].is_one() {
            return Err(Error::SqrtConstantTerm(self.coeffs[0].clone()));
        }
        let mut out = Self::zero(self.trunc);
        out.coeffs[0] = BigRational::one();
        let two = rat(BigInt::from(2));
        for d in 1..=self.trunc {
            for i in 0..=d {
                let j = d - i;
                // cross terms t_{k,l} t_{i-k,j-l} with both degrees in 1..d
                let mut acc = BigRational::zero();
                for dd in 1..d {
                    for k in 0..=dd.min(i) {
                        let l = dd - k;
                        if l > j {
                            continue;
                        }
                        let t = &out.coeffs[tri(dd) + k];
                        if !t.is_zero() {
                            acc += t * &out.coeffs[tri(i - k + j - l) + (i - k)];
                        }
                    }
                }
                out.coeffs[tri(d) + i] = (&self.coeffs[tri(d) + i] - acc) / &two;
            }
        }
        Ok(out)
    }

    /// Applies `x d/dx + y d/dy + 2`: multiplies the `(m,n)` coefficient by
    /// `m + n + 2`.
    pub fn euler_plus2(&self) -> Self {
        let mut out = self.clone();
        for d in 0..=self.trunc {
            let factor = rat(BigInt::from(d as i64 + 2));
            for i in 0..=d {
                out.coeffs[tri(d) + i] *= &factor;
            }
        }
        out
    }

    /// Double bisection: keeps the even-even coefficients and substitutes
    /// `x^2 -> x`, `y^2 -> y`, so `coeff(m,n)` of the result is
    /// `coeff(2m,2n)` of the input. The result is truncated at `D/2`.
    pub fn even_even_part(&self) -> Self {
        let half = self.trunc / 2;
        Self::from_fn(half, |i, j| self.coeff(2 * i, 2 * j))
    }

    /// First coefficient position where the two series differ, scanning by
    /// total degree then by the `x` exponent.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)> {
        self.assert_same_trunc(other);
        for d in 0..=self.trunc {
            for i in 0..=d {
                if self.coeffs[tri(d) + i] != other.coeffs[tri(d) + i] {
                    return Some((i, d - i));
                }
            }
        }
        None
    }

    /// Coefficient dump: lines `m n numerator/denominator`, sorted
    /// lexicographically by `(m+n, m)`.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for d in 0..=self.trunc {
            for i in 0..=d {
                let c = &self.coeffs[tri(d) + i];
                out.push_str(&format!("{} {} {}/{}\n", i, d - i, c.numer(), c.denom()));
            }
        }
        out
    }
}

/// A mismatch found by a verifier: the first differing coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub context: &'static str,
    pub m: usize,
    pub n: usize,
    pub lhs: BigRational,
    pub rhs: BigRational,
}

impl std::fmt::Display for Mismatch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}: first difference at x^{} y^{}: {} vs {}",
            self.context, self.m, self.n, self.lhs, self.rhs
        )
    }
}

fn compare(context: &'static str, lhs: &BivariateSeries, rhs: &BivariateSeries) -> Result<(), Mismatch> {
    match lhs.first_difference(rhs) {
        None => Ok(()),
        Some((m, n)) => Err(Mismatch {
            context,
            m,
            n,
            lhs: lhs.coeff(m, n),
            rhs: rhs.coeff(m, n),
        }),
    }
}

// --- fixed kernels ----------------------------------------------------------

/// `sqrt(1 - 2x - 2y - 2xy + x^2 + y^2)`, the kernel of the Jacobi
/// generating function.
pub fn delta(trunc: usize) -> BivariateSeries {
    BivariateSeries::from_int_terms(
        &[(0, 0, 1), (1, 0, -2), (0, 1, -2), (1, 1, -2), (2, 0, 1), (0, 2, 1)],
        trunc,
    )
    .sqrt()
    .expect("constant term is 1")
}

fn one_minus_x_minus_y(trunc: usize) -> BivariateSeries {
    BivariateSeries::from_int_terms(&[(0, 0, 1), (1, 0, -1), (0, 1, -1)], trunc)
}

fn xy(trunc: usize) -> BivariateSeries {
    monomial(1, 1, 1, trunc)
}

/// `c x^i y^j` as a truncated series; zero if the monomial's degree
/// exceeds the truncation (a prefactor, not user input).
fn monomial(i: usize, j: usize, c: i64, trunc: usize) -> BivariateSeries {
    let mut s = BivariateSeries::zero(trunc);
    if i + j <= trunc {
        s.coeffs[tri(i + j) + i] = rat(BigInt::from(c));
    }
    s
}

/// `1 - x + y + delta`
fn kernel_a(trunc: usize, d: &BivariateSeries) -> BivariateSeries {
    BivariateSeries::from_int_terms(&[(0, 0, 1), (1, 0, -1), (0, 1, 1)], trunc).add(d)
}

/// `1 + x - y + delta`
fn kernel_b(trunc: usize, d: &BivariateSeries) -> BivariateSeries {
    BivariateSeries::from_int_terms(&[(0, 0, 1), (1, 0, 1), (0, 1, -1)], trunc).add(d)
}

/// `1 - x - y + delta`
fn kernel_c(trunc: usize, d: &BivariateSeries) -> BivariateSeries {
    one_minus_x_minus_y(trunc).add(d)
}

// --- Jacobi generating function ---------------------------------------------

/// Left side of the Jacobi generating-function identity:
/// `sum C(m+n+alpha, m) C(m+n+beta, n) x^m y^n`.
pub fn jacobi_lhs(alpha: u32, beta: u32, trunc: usize) -> BivariateSeries {
    BivariateSeries::from_fn(trunc, |m, n| {
        rat(binomial((m + n) as i64 + i64::from(alpha), m as i64)
            * binomial((m + n) as i64 + i64::from(beta), n as i64))
    })
}

/// Right side:
/// `2^(alpha+beta) / (delta (1-x+y+delta)^alpha (1+x-y+delta)^beta)`.
/// The two kernels have constant term 2, so the denominator is invertible.
pub fn jacobi_gf_rhs(alpha: u32, beta: u32, trunc: usize) -> BivariateSeries {
    let d = delta(trunc);
    let denom = d
        .mul(&kernel_a(trunc, &d).pow(alpha))
        .mul(&kernel_b(trunc, &d).pow(beta));
    denom
        .reciprocal()
        .expect("denominator has constant term 2^(alpha+beta)")
        .scale(&rat(BigInt::from(2).pow(alpha + beta)))
}

/// Verifies the Jacobi generating-function identity coefficient-wise.
pub fn verify_jacobi_gf(alpha: u32, beta: u32, trunc: usize) -> Result<(), Mismatch> {
    compare(
        "jacobi generating function",
        &jacobi_lhs(alpha, beta, trunc),
        &jacobi_gf_rhs(alpha, beta, trunc),
    )
}

// --- the S3 / S4 identities -------------------------------------------------

/// `sum_{m,n>=1} (m+n)/2 C(m+n-1,m) C(m+n-1,n) x^m y^n = xy / delta^3`,
/// and the right side's coefficients reproduce the closed form of S3.
pub fn verify_eq_delta(trunc: usize) -> Result<(), Mismatch> {
    let lhs = BivariateSeries::from_fn(trunc, |m, n| {
        if m == 0 || n == 0 {
            return BigRational::zero();
        }
        BigRational::new(BigInt::from((m + n) as i64), BigInt::from(2))
            * rat(binomial((m + n) as i64 - 1, m as i64) * binomial((m + n) as i64 - 1, n as i64))
    });
    let d = delta(trunc);
    let rhs = xy(trunc).mul(&d.pow(3).reciprocal().expect("constant term 1"));
    compare("euler operator identity", &lhs, &rhs)?;
    for m in 1..=trunc.saturating_sub(1) {
        for n in 1..=trunc - m {
            let closed = rat(counting::s3_closed(m as i64, n as i64));
            let c = rhs.coeff(m, n);
            if c != closed {
                return Err(Mismatch {
                    context: "xy/delta^3 vs closed S3",
                    m,
                    n,
                    lhs: c,
                    rhs: closed,
                });
            }
        }
    }
    Ok(())
}

/// Direct generating function of the S3 summand:
/// `sum_{m,n} [sum_{a,b} C(m+n-a+b-1, m-a) C(m+n+a-b-1, n-b)] x^m y^n`.
fn s3_direct_gf(trunc: usize) -> BivariateSeries {
    BivariateSeries::from_fn(trunc, |m, n| {
        let (m, n) = (m as i64, n as i64);
        let mut acc = BigInt::zero();
        for a in 1..=m {
            for b in 1..=n {
                acc += binomial(m + n - a + b - 1, m - a) * binomial(m + n + a - b - 1, n - b);
            }
        }
        rat(acc)
    })
}

/// The kernel sum `sum_{a,b>=1} x^a y^b 2^(2a+2b-2) /
/// (delta (1-x+y+delta)^(2b-1) (1+x-y+delta)^(2a-1))`, summed term by
/// term. The `x^a y^b` prefactor pushes every term with `a+b > D` beyond
/// the truncation, so the sum over `a+b <= D` is exact.
fn s3_kernel_sum(trunc: usize) -> BivariateSeries {
    let d = delta(trunc);
    let a_ker = kernel_a(trunc, &d);
    let b_ker = kernel_b(trunc, &d);
    // odd powers 1, 3, 5, ... up to 2*trunc-3
    let max_odd = if trunc >= 2 { 2 * trunc - 3 } else { 1 };
    let mut a_pows = vec![a_ker.clone()];
    let mut b_pows = vec![b_ker.clone()];
    let a_sq = a_ker.mul(&a_ker);
    let b_sq = b_ker.mul(&b_ker);
    while 2 * a_pows.len() - 1 < max_odd {
        a_pows.push(a_pows.last().unwrap().mul(&a_sq));
        b_pows.push(b_pows.last().unwrap().mul(&b_sq));
    }
    let mut total = BivariateSeries::zero(trunc);
    for a in 1..trunc.max(1) {
        for b in 1..=trunc.saturating_sub(a) {
            let denom = d.mul(&a_pows[b - 1]).mul(&b_pows[a - 1]);
            let term = monomial(a, b, 1, trunc)
                .mul(&denom.reciprocal().expect("constant term is a power of 2"))
                .scale(&rat(BigInt::from(2).pow(2 * (a + b) as u32 - 2)));
            total = total.add(&term);
        }
    }
    total
}

/// Verifies that the direct S3 generating function, the kernel sum, and
/// `xy / delta^3` all agree up to the truncation.
pub fn verify_s3_gf(trunc: usize) -> Result<(), Mismatch> {
    let d = delta(trunc);
    let closed = xy(trunc).mul(&d.pow(3).reciprocal().expect("constant term 1"));
    compare("S3 direct sum vs xy/delta^3", &s3_direct_gf(trunc), &closed)?;
    compare("S3 kernel sum vs xy/delta^3", &s3_kernel_sum(trunc), &closed)
}

/// `16 x^3 y^3 / (delta^3 (1-x-y+delta)^4)`, the closed generating
/// function of the S4 summand.
fn s4_closed_gf(trunc: usize) -> BivariateSeries {
    let d = delta(trunc);
    let denom = d.pow(3).mul(&kernel_c(trunc, &d).pow(4));
    monomial(3, 3, 16, trunc).mul(&denom.reciprocal().expect("constant term 16"))
}

/// Verifies the S4 generating function three ways: the direct double sum
/// equals the closed kernel form; the closed form splits into the four-term
/// decomposition; and the shifted `alpha = beta = 2` instance holds.
pub fn verify_s4_gf(trunc: usize) -> Result<(), Mismatch> {
    let d = delta(trunc);
    let g = s4_closed_gf(trunc);

    let direct = BivariateSeries::from_fn(trunc, |m, n| {
        let (m, n) = (m as i64, n as i64);
        let mut acc = BigInt::zero();
        for a in 1..=m - 2 {
            for b in 1..=n - 2 {
                acc += binomial(m + n - a + b - 1, m - a - 2) * binomial(m + n + a - b - 1, n - b - 2);
            }
        }
        rat(acc)
    });
    compare("S4 direct sum vs closed kernel form", &direct, &g)?;

    let inv_d = d.reciprocal().expect("constant term 1");
    let inv_d2 = d.pow(2).reciprocal().expect("constant term 1");
    let inv_d3 = d.pow(3).reciprocal().expect("constant term 1");
    let c_ker2_inv = d
        .mul(&kernel_c(trunc, &d).pow(2))
        .reciprocal()
        .expect("constant term 4");
    let alpha2_term = xy(trunc).mul(&c_ker2_inv).scale(&rat(BigInt::from(4)));
    let four_term = inv_d
        .add(&alpha2_term)
        .add(&xy(trunc).mul(&inv_d3))
        .sub(&one_minus_x_minus_y(trunc).mul(&inv_d2));
    compare("S4 four-term decomposition", &g, &four_term)?;

    let alpha2_lhs = BivariateSeries::from_fn(trunc, |m, n| {
        let (m, n) = (m as i64, n as i64);
        rat(binomial(m + n, m - 1) * binomial(m + n, n - 1))
    });
    compare("alpha=beta=2 instance", &alpha2_lhs, &alpha2_term)
}

/// Verifies the double-bisection identity
/// `sum C(2m+2n,2m) x^m y^n = (1-x-y)/delta^2`, building the left side by
/// actually bisecting `1/(1-x-y)` at twice the truncation.
pub fn verify_bisection(trunc: usize) -> Result<(), Mismatch> {
    let f = one_minus_x_minus_y(2 * trunc)
        .reciprocal()
        .expect("constant term 1");
    let lhs = f.even_even_part();
    let expected = BivariateSeries::from_fn(trunc, |m, n| {
        rat(binomial(2 * (m + n) as i64, 2 * m as i64))
    });
    compare("bisected 1/(1-x-y) vs C(2m+2n,2m)", &lhs, &expected)?;
    let d = delta(trunc);
    let rhs = one_minus_x_minus_y(trunc).mul(&d.pow(2).reciprocal().expect("constant term 1"));
    compare("bisection identity", &lhs, &rhs)
}

/// True if every coefficient is an integer and non-negative (used by the
/// CLI dump sanity path and tests).
pub fn all_nonneg_integers(s: &BivariateSeries) -> bool {
    (0..=s.truncation()).all(|d| {
        (0..=d).all(|i| {
            let c = s.coeff(i, d - i);
            c.is_integer() && !c.is_negative()
        })
    })
}

/// Builds the series a `verify` caller would want dumped: the closed-form
/// right side of the named identity.
pub fn closed_form_series(name: &str, trunc: usize, alpha: u32, beta: u32) -> Option<BivariateSeries> {
    let d = delta(trunc);
    match name {
        "jacobi" => Some(jacobi_gf_rhs(alpha, beta, trunc)),
        "eq-delta" | "s3-gf" => Some(xy(trunc).mul(&d.pow(3).reciprocal().ok()?)),
        "s4-gf" => Some(s4_closed_gf(trunc)),
        "bisection" => {
            Some(one_minus_x_minus_y(trunc).mul(&d.pow(2).reciprocal().ok()?))
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational;
    use proptest::prelude::*;

    fn int_terms(terms: &[(usize, usize, i64)], trunc: usize) -> BivariateSeries {
        BivariateSeries::from_int_terms(terms, trunc)
    }

    #[test]
    fn from_polynomial_cases() {
        let s = int_terms(&[(0, 0, 1), (1, 0, -1), (0, 1, -1)], 4);
        assert_eq!(s.coeff(0, 0), rational(1, 1));
        assert_eq!(s.coeff(1, 0), rational(-1, 1));
        assert_eq!(s.coeff(2, 2), rational(0, 1));
        assert_eq!(BivariateSeries::from_polynomial(&[], 3).unwrap(), BivariateSeries::zero(3));
        // duplicates are summed
        let dup = int_terms(&[(1, 1, 2), (1, 1, 3)], 4);
        assert_eq!(dup.coeff(1, 1), rational(5, 1));
        assert!(matches!(
            BivariateSeries::from_polynomial(&[(3, 2, rational(1, 1))], 4),
            Err(Error::ExponentOutOfRange { .. })
        ));
    }

    #[test]
    fn mul_and_reciprocal() {
        let omxy = one_minus_x_minus_y(8);
        let inv = omxy.reciprocal().unwrap();
        assert_eq!(omxy.mul(&inv), BivariateSeries::one(8));
        for m in 0..=8usize {
            for n in 0..=8 - m {
                assert_eq!(inv.coeff(m, n), rat(binomial((m + n) as i64, m as i64)));
            }
        }
        let sq = int_terms(&[(1, 0, 1), (0, 1, 1)], 6).pow(2);
        assert_eq!(sq.coeff(2, 0), rational(1, 1));
        assert_eq!(sq.coeff(1, 1), rational(2, 1));
        assert_eq!(sq.coeff(0, 2), rational(1, 1));
        assert_eq!(
            int_terms(&[(0, 0, 2), (1, 0, 1)], 5).reciprocal().unwrap().coeff(0, 0),
            rational(1, 2)
        );
        assert!(matches!(
            int_terms(&[(1, 0, 1)], 5).reciprocal(),
            Err(Error::ZeroConstantTerm)
        ));
    }

    #[test]
    fn sqrt_cases() {
        assert_eq!(BivariateSeries::one(6).sqrt().unwrap(), BivariateSeries::one(6));
        let omxy = one_minus_x_minus_y(6);
        assert_eq!(omxy.mul(&omxy).sqrt().unwrap(), omxy);
        assert!(matches!(
            int_terms(&[(0, 0, 2)], 4).sqrt(),
            Err(Error::SqrtConstantTerm(_))
        ));
    }

    #[test]
    fn delta_cases() {
        let d = delta(10);
        assert_eq!(d.coeff(0, 0), rational(1, 1));
        assert_eq!(d.coeff(1, 0), rational(-1, 1));
        let sq = d.mul(&d);
        let poly = int_terms(
            &[(0, 0, 1), (1, 0, -2), (0, 1, -2), (1, 1, -2), (2, 0, 1), (0, 2, 1)],
            10,
        );
        assert_eq!(sq, poly);
        let inv = d.reciprocal().unwrap();
        for m in 0..=10usize {
            for n in 0..=10 - m {
                assert_eq!(
                    inv.coeff(m, n),
                    rat(binomial((m + n) as i64, m as i64).pow(2)),
                    "1/delta at ({m},{n})"
                );
            }
        }
    }

    #[test]
    fn euler_operator() {
        let s = int_terms(&[(2, 1, 1)], 6);
        assert_eq!(s.euler_plus2().coeff(2, 1), rational(5, 1));
        assert_eq!(BivariateSeries::one(6).euler_plus2().coeff(0, 0), rational(2, 1));
        // Applying the operator to the alpha=beta=1 instance, halving and
        // shifting by xy reproduces the euler-identity left side.
        let trunc = 10;
        let shifted = xy(trunc)
            .mul(&jacobi_lhs(1, 1, trunc).euler_plus2())
            .scale(&rational(1, 2));
        let direct = BivariateSeries::from_fn(trunc, |m, n| {
            if m == 0 || n == 0 {
                return BigRational::zero();
            }
            BigRational::new(BigInt::from((m + n) as i64), BigInt::from(2))
                * rat(binomial((m + n) as i64 - 1, m as i64)
                    * binomial((m + n) as i64 - 1, n as i64))
        });
        assert_eq!(shifted, direct);
    }

    #[test]
    fn even_even_cases() {
        let f = one_minus_x_minus_y(12).reciprocal().unwrap();
        let ee = f.even_even_part();
        assert_eq!(ee.truncation(), 6);
        assert_eq!(ee.coeff(1, 1), rational(6, 1)); // C(4,2)
        let odd = int_terms(&[(1, 0, 1), (0, 1, 5), (1, 2, -3)], 8);
        assert_eq!(odd.even_even_part(), BivariateSeries::zero(4));
    }

    #[test]
    fn jacobi_small_degrees() {
        assert!(verify_jacobi_gf(0, 0, 8).is_ok());
        assert!(verify_jacobi_gf(1, 1, 8).is_ok());
        assert!(verify_jacobi_gf(3, 5, 6).is_ok());
        assert_eq!(jacobi_gf_rhs(1, 1, 6).coeff(0, 0), rational(1, 1));
        // alpha=beta=0 is exactly 1/delta
        assert_eq!(jacobi_gf_rhs(0, 0, 8), delta(8).reciprocal().unwrap());
        // alpha=beta=2 coefficients
        let r = jacobi_gf_rhs(2, 2, 8);
        for m in 0..=8usize {
            for n in 0..=8 - m {
                assert_eq!(
                    r.coeff(m, n),
                    rat(binomial((m + n) as i64 + 2, m as i64)
                        * binomial((m + n) as i64 + 2, n as i64))
                );
            }
        }
    }

    #[test]
    fn identity_suite_small_degrees() {
        for trunc in [4, 8] {
            assert!(verify_eq_delta(trunc).is_ok(), "eq-delta at {trunc}");
            assert!(verify_s3_gf(trunc).is_ok(), "s3 at {trunc}");
            assert!(verify_s4_gf(trunc).is_ok(), "s4 at {trunc}");
            assert!(verify_bisection(trunc).is_ok(), "bisection at {trunc}");
        }
    }

    #[test]
    fn mismatch_reports_first_difference() {
        let lhs = jacobi_lhs(1, 1, 6);
        let wrong = jacobi_gf_rhs(1, 2, 6);
        let err = compare("deliberate", &lhs, &wrong).unwrap_err();
        assert_eq!((err.m, err.n), (0, 1));
    }

    #[test]
    fn dump_format() {
        let s = int_terms(&[(0, 0, 1), (1, 0, -1)], 1);
        assert_eq!(s.dump(), "0 0 1/1\n0 1 0/1\n1 0 -1/1\n");
    }

    fn small_series(trunc: usize) -> impl Strategy<Value = BivariateSeries> {
        let len = tri(trunc + 1);
        proptest::collection::vec((-6i64..=6, 1i64..=3), len).prop_map(move |v| {
            let mut s = BivariateSeries::zero(trunc);
            for (slot, (p, q)) in s.coeffs.iter_mut().zip(v) {
                *slot = rational(p, q);
            }
            s
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn ring_axioms(a in small_series(5), b in small_series(5), c in small_series(5)) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        }

        #[test]
        fn euler_is_linear(a in small_series(5), b in small_series(5)) {
            prop_assert_eq!(a.add(&b).euler_plus2(), a.euler_plus2().add(&b.euler_plus2()));
        }

        #[test]
        fn reciprocal_inverts(a in small_series(4)) {
            prop_assume!(!a.coeff(0, 0).is_zero());
            prop_assert_eq!(a.mul(&a.reciprocal().unwrap()), BivariateSeries::one(4));
        }

        #[test]
        fn sqrt_squares_back(a in small_series(4)) {
            let mut s = a.clone();
            s.coeffs[0] = BigRational::one();
            let r = s.sqrt().unwrap();
            prop_assert_eq!(r.mul(&r), s);
            prop_assert!(r.coeff(0, 0).is_one());
        }
    }
}
