use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::IntegerPolynomial;
use crate::complex::SimplicialComplex;
use crate::{Error, Result};

/// The rational function `numerator(λ) / (1 - λ)^dpow`, kept in lowest
/// terms: `(1 - λ)` is cancelled while it divides the numerator and
/// `dpow > 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HilbertSeries {
    numerator: IntegerPolynomial,
    dpow: usize,
}

impl HilbertSeries {
    pub fn new(numerator: IntegerPolynomial, dpow: usize) -> Self {
        let mut h = HilbertSeries { numerator, dpow };
        h.normalize();
        h
    }

    fn normalize(&mut self) {
        if self.numerator.is_zero() {
            self.dpow = 0;
            return;
        }
        while self.dpow > 0 {
            match self.numerator.div_one_minus_lambda() {
                Some(q) => {
                    self.numerator = q;
                    self.dpow -= 1;
                }
                None => break,
            }
        }
    }

    /// Series of a Stanley–Reisner ring with face counts `f` (`f[i]` faces
    /// of cardinality `i`, top entry nonzero).
    pub fn from_f_vector(f: &[u64]) -> Result<Self> {
        if f.is_empty() {
            return Err(Error::VoidComplex);
        }
        let d = f.len() - 1;
        let mut num = IntegerPolynomial::zero();
        for (i, &c) in f.iter().enumerate() {
            let term = IntegerPolynomial::new(alloc::vec![BigInt::from(c)])
                .shift(i)
                .mul_one_minus_lambda_pow(d - i);
            num = &num + &term;
        }
        // N(1) counts the faces of maximum cardinality
        assert_eq!(num.eval_at_one(), BigInt::from(f[d]));
        assert!(f[d] > 0, "top face count must be positive");
        Ok(HilbertSeries {
            numerator: num,
            dpow: d,
        })
    }

    pub fn numerator(&self) -> &IntegerPolynomial {
        &self.numerator
    }

    pub fn dpow(&self) -> usize {
        self.dpow
    }

    /// The h-polynomial and its degree `s` (`0` for the zero series).
    pub fn h_polynomial(&self) -> (&IntegerPolynomial, usize) {
        (&self.numerator, self.numerator.degree().unwrap_or(0))
    }

    pub fn degree(&self) -> usize {
        self.h_polynomial().1
    }

    pub fn add(&self, other: &HilbertSeries) -> HilbertSeries {
        let d = self.dpow.max(other.dpow);
        let a = self.numerator.mul_one_minus_lambda_pow(d - self.dpow);
        let b = other.numerator.mul_one_minus_lambda_pow(d - other.dpow);
        HilbertSeries::new(&a + &b, d)
    }

    pub fn mul(&self, other: &HilbertSeries) -> HilbertSeries {
        HilbertSeries::new(&self.numerator * &other.numerator, self.dpow + other.dpow)
    }

    /// Multiplication by `λ^k`.
    pub fn shift(&self, k: usize) -> HilbertSeries {
        HilbertSeries::new(self.numerator.shift(k), self.dpow)
    }

    /// Power-series coefficients of degrees `0..=degree`.
    pub fn expansion(&self, degree: usize) -> Vec<BigInt> {
        // 1/(1-λ)^d = sum_t C(t+d-1, d-1) λ^t
        let d = self.dpow;
        let mut series = Vec::with_capacity(degree + 1);
        let mut c = BigInt::one();
        for t in 0..=degree {
            if d == 0 {
                series.push(if t == 0 {
                    BigInt::one()
                } else {
                    BigInt::zero()
                });
            } else {
                series.push(c.clone());
                c = c * BigInt::from(t + d) / BigInt::from(t + 1);
            }
        }
        (0..=degree)
            .map(|t| {
                self.numerator
                    .coeffs()
                    .iter()
                    .enumerate()
                    .take_while(|(i, _)| *i <= t)
                    .map(|(i, a)| a * &series[t - i])
                    .sum()
            })
            .collect()
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/(1 - λ)^{}", self.numerator, self.dpow)
    }
}

impl fmt::Debug for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Hilbert series of the Stanley–Reisner ring of `k`.
pub fn hilbert_series_of_complex(k: &SimplicialComplex) -> Result<HilbertSeries> {
    if k.is_void() {
        return Err(Error::VoidComplex);
    }
    HilbertSeries::from_f_vector(k.f_vector().as_slice())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, k2};

    fn p(c: &[i64]) -> IntegerPolynomial {
        IntegerPolynomial::from_i64s(c)
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn series_of_small_complexes() {
        let h = hilbert_series_of_complex(
            &SimplicialComplex::independence_complex(&cycle(5).unwrap()).unwrap(),
        )
        .unwrap();
        assert_eq!((h.numerator(), h.dpow()), (&p(&[1, 3, 1]), 2));
        assert_eq!(h.h_polynomial().1, 2);
        let h = hilbert_series_of_complex(&SimplicialComplex::independence_complex(&k2()).unwrap())
            .unwrap();
        assert_eq!((h.numerator(), h.dpow()), (&p(&[1, 1]), 1));
        let h = hilbert_series_of_complex(
            &SimplicialComplex::independence_complex(&cycle(8).unwrap()).unwrap(),
        )
        .unwrap();
        assert_eq!((h.numerator(), h.dpow()), (&p(&[1, 4, 2, -4, -1]), 4));
        assert_eq!(
            hilbert_series_of_complex(&SimplicialComplex::void(3).unwrap()),
            Err(Error::VoidComplex)
        );
    }

    #[test]
    fn expansions() {
        assert_eq!(
            HilbertSeries::new(p(&[1, 3, 1]), 2).expansion(3),
            big(&[1, 5, 10, 15])
        );
        assert_eq!(
            HilbertSeries::new(p(&[1, 1]), 1).expansion(2),
            big(&[1, 2, 2])
        );
        assert_eq!(HilbertSeries::new(p(&[1]), 0).expansion(2), big(&[1, 0, 0]));
    }

    #[test]
    fn normalization_and_sums() {
        let h = HilbertSeries::new(p(&[1, 0, -1]), 3);
        assert_eq!((h.numerator(), h.dpow()), (&p(&[1, 1]), 2));
        // 1/(1-λ) + λ/(1-λ) = (1+λ)/(1-λ)
        let one = HilbertSeries::new(p(&[1]), 1);
        assert_eq!(one.add(&one.shift(1)), HilbertSeries::new(p(&[1, 1]), 1));
        let k2s = HilbertSeries::new(p(&[1, 1]), 1);
        assert_eq!(k2s.mul(&k2s), HilbertSeries::new(p(&[1, 2, 1]), 2));
    }
}
