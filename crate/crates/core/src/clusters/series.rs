//! Truncated bivariate power series in `z` and `t` over exact rationals.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::counting::factorial;

/// Coefficients `[z^n t^k]` for `n, k <= degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalSeries {
    degree: usize,
    coeffs: Vec<Vec<BigRational>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeriesKind {
    /// `sqrt((1 + z) / (1 - z))`, the exponential generating function of
    /// ballot (and odd order) permutations.
    BEgf,
    /// `sqrt((1 - z + zt) / (1 - z - zt))`, counting odd order
    /// cluster-permutations by size (`z`) and number of clusters (`t`).
    OcpEgf,
}

fn q(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

impl RationalSeries {
    pub fn zero(degree: usize) -> Self {
        RationalSeries { degree, coeffs: vec![vec![BigRational::zero(); degree + 1]; degree + 1] }
    }

    pub fn one(degree: usize) -> Self {
        let mut s = Self::zero(degree);
        s.coeffs[0][0] = BigRational::one();
        s
    }

    /// Series from `(n, k, c)` terms `c z^n t^k`.
    pub fn from_terms(degree: usize, terms: &[(usize, usize, i64)]) -> Self {
        let mut s = Self::zero(degree);
        for &(n, k, c) in terms {
            if n <= degree && k <= degree {
                s.coeffs[n][k] += q(c);
            }
        }
        s
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeff(&self, n: usize, k: usize) -> &BigRational {
        &self.coeffs[n][k]
    }

    /// `n! [z^n t^k]`, which must be a nonnegative integer.
    pub fn count(&self, n: usize, k: usize) -> BigUint {
        let v = &self.coeffs[n][k] * BigRational::from_integer(BigInt::from(factorial(n as u64)));
        assert!(v.is_integer() && !v.is_negative(), "n! [z^{n} t^{k}] = {v} is not a count");
        v.to_integer().to_biguint().unwrap()
    }

    /// `n! [z^n t^k]` for `k = 0..=n`.
    pub fn counts_by_order(&self, n: usize) -> Vec<BigUint> {
        (0..=n).map(|k| self.count(n, k)).collect()
    }

    /// Product truncated to z-degree below `prec`.
    fn mul_prec(&self, other: &Self, prec: usize) -> Self {
        let d = self.degree;
        let mut out = Self::zero(d);
        for n1 in 0..prec.min(d + 1) {
            for k1 in 0..=d {
                let a = &self.coeffs[n1][k1];
                if a.is_zero() {
                    continue;
                }
                for n2 in 0..prec.min(d + 1) - n1 {
                    for k2 in 0..=d - k1 {
                        let b = &other.coeffs[n2][k2];
                        if !b.is_zero() {
                            out.coeffs[n1 + n2][k1 + k2] += a * b;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.mul_prec(other, self.degree + 1)
    }

    fn combine(&self, other: &Self, a: &BigRational, b: &BigRational) -> Self {
        let mut out = self.clone();
        for (ro, (rs, rt)) in out.coeffs.iter_mut().zip(self.coeffs.iter().zip(&other.coeffs)) {
            for (o, (x, y)) in ro.iter_mut().zip(rs.iter().zip(rt)) {
                *o = a * x + b * y;
            }
        }
        out
    }

    fn z0_is_one(&self) -> bool {
        self.coeffs[0][0].is_one() && self.coeffs[0][1..].iter().all(Zero::is_zero)
    }

    /// Multiplicative inverse by Newton iteration `h <- h (2 - a h)`,
    /// doubling the z-precision each round. The `z^0` coefficient must be 1.
    pub fn inverse(&self) -> Self {
        assert!(self.z0_is_one(), "inverse needs constant term 1");
        let d = self.degree;
        let mut h = Self::one(d);
        let mut prec = 1;
        while prec < d + 1 {
            prec = (2 * prec).min(d + 1);
            let ah = self.mul_prec(&h, prec);
            let two_minus = Self::one(d).combine(&ah, &q(2), &q(-1));
            h = h.mul_prec(&two_minus, prec);
        }
        h
    }

    /// Square root with constant term 1 by Newton iteration
    /// `g <- (g + f / g) / 2`, doubling the z-precision each round.
    pub fn sqrt(&self) -> Self {
        assert!(self.z0_is_one(), "sqrt needs constant term 1");
        let d = self.degree;
        let mut g = Self::one(d);
        let mut prec = 1;
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        while prec < d + 1 {
            prec = (2 * prec).min(d + 1);
            let fg = self.mul_prec(&g.inverse_prec(prec), prec);
            g = g.combine(&fg, &half, &half);
        }
        g
    }

    fn inverse_prec(&self, prec: usize) -> Self {
        let mut h = Self::one(self.degree);
        let mut p = 1;
        while p < prec {
            p = (2 * p).min(prec);
            let ah = self.mul_prec(&h, p);
            let two_minus = Self::one(self.degree).combine(&ah, &q(2), &q(-1));
            h = h.mul_prec(&two_minus, p);
        }
        h
    }
}

pub fn series_coefficients(kind: SeriesKind, degree: usize) -> RationalSeries {
    let (num, den) = match kind {
        SeriesKind::BEgf => (
            RationalSeries::from_terms(degree, &[(0, 0, 1), (1, 0, 1)]),
            RationalSeries::from_terms(degree, &[(0, 0, 1), (1, 0, -1)]),
        ),
        SeriesKind::OcpEgf => (
            RationalSeries::from_terms(degree, &[(0, 0, 1), (1, 0, -1), (1, 1, 1)]),
            RationalSeries::from_terms(degree, &[(0, 0, 1), (1, 0, -1), (1, 1, -1)]),
        ),
    };
    num.mul(&den.inverse()).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ballot_numbers() {
        let s = series_coefficients(SeriesKind::BEgf, 10);
        let got: Vec<u64> = (0..=10).map(|n| s.count(n, 0).try_into().unwrap()).collect();
        assert_eq!(got, [1, 1, 1, 3, 9, 45, 225, 1575, 11025, 99225, 893025]);
    }

    #[test]
    fn diagonal_is_ballot_and_total_is_double_factorial() {
        let s = series_coefficients(SeriesKind::OcpEgf, 8);
        let b = series_coefficients(SeriesKind::BEgf, 8);
        for n in 0..=8 {
            assert_eq!(s.count(n, n), b.count(n, 0), "n={n}");
            let total: BigUint = s.counts_by_order(n).into_iter().sum();
            let want = if n == 0 { BigUint::one() } else { super::super::double_factorial(2 * n as i64 - 1) };
            assert_eq!(total, want, "n={n}");
        }
    }

    #[test]
    fn inverse_and_sqrt() {
        let f = RationalSeries::from_terms(6, &[(0, 0, 1), (1, 1, 3), (2, 0, -2)]);
        assert_eq!(f.mul(&f.inverse()), RationalSeries::one(6));
        let g = f.sqrt();
        assert_eq!(g.mul(&g), f);
    }
}
