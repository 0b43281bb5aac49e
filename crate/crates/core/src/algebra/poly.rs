use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Polynomial in `λ` with arbitrary-precision integer coefficients.
///
/// `coeffs[i]` is the coefficient of `λ^i`; the last stored coefficient is
/// nonzero, so the zero polynomial is the empty list.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntegerPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntegerPolynomial {
    pub fn zero() -> Self {
        IntegerPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntegerPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `c λ^k`.
    pub fn monomial(c: i64, k: usize) -> Self {
        let mut coeffs = alloc::vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::from(c);
        Self::new(coeffs)
    }

    /// `(1 - λ)^k`.
    pub fn one_minus_lambda_pow(k: usize) -> Self {
        let mut coeffs = Vec::with_capacity(k + 1);
        let mut c = BigInt::one();
        for i in 0..=k {
            coeffs.push(if i % 2 == 0 { c.clone() } else { -c.clone() });
            c = c * BigInt::from(k - i) / BigInt::from(i + 1);
        }
        Self::new(coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `λ^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Multiplication by `λ^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = alloc::vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntegerPolynomial { coeffs }
    }

    pub fn mul_one_minus_lambda_pow(&self, k: usize) -> Self {
        let mut out = self.clone();
        for _ in 0..k {
            let mut next = alloc::vec![BigInt::zero(); out.coeffs.len() + 1];
            for (i, c) in out.coeffs.iter().enumerate() {
                next[i] += c;
                next[i + 1] -= c;
            }
            out = Self::new(next);
        }
        out
    }

    /// Exact quotient by `1 - λ`, or `None` when `λ = 1` is not a root.
    pub fn div_one_minus_lambda(&self) -> Option<Self> {
        if !self.eval_at_one().is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        // p = (1 - λ) q  ⇒  q_i = sum_{j <= i} p_j
        let mut q = Vec::with_capacity(self.coeffs.len() - 1);
        let mut acc = BigInt::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            acc += c;
            q.push(acc.clone());
        }
        Some(Self::new(q))
    }
}

impl From<Vec<i64>> for IntegerPolynomial {
    fn from(v: Vec<i64>) -> Self {
        Self::from_i64s(&v)
    }
}

impl Add for &IntegerPolynomial {
    type Output = IntegerPolynomial;

    fn add(self, rhs: &IntegerPolynomial) -> IntegerPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntegerPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntegerPolynomial {
    type Output = IntegerPolynomial;

    fn sub(self, rhs: &IntegerPolynomial) -> IntegerPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntegerPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntegerPolynomial {
    type Output = IntegerPolynomial;

    fn mul(self, rhs: &IntegerPolynomial) -> IntegerPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntegerPolynomial::zero();
        }
        let mut out = alloc::vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntegerPolynomial::new(out)
    }
}

impl Neg for &IntegerPolynomial {
    type Output = IntegerPolynomial;

    fn neg(self) -> IntegerPolynomial {
        IntegerPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntegerPolynomial {
            type Output = IntegerPolynomial;
            fn $m(self, rhs: IntegerPolynomial) -> IntegerPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for IntegerPolynomial {
    /// Writes e.g. `1 + 4λ - λ^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            if i == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("λ")?,
                _ => write!(f, "λ^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntegerPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::format;

    fn p(c: &[i64]) -> IntegerPolynomial {
        IntegerPolynomial::from_i64s(c)
    }

    #[test]
    fn arithmetic() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert_eq!(&p(&[1, 1]) * &p(&[1, -1]), p(&[1, 0, -1]));
        assert_eq!(&p(&[1, 1]) - &p(&[1, 1]), IntegerPolynomial::zero());
        assert_eq!(
            IntegerPolynomial::one_minus_lambda_pow(3),
            p(&[1, -3, 3, -1])
        );
        assert_eq!(p(&[1, 1]).mul_one_minus_lambda_pow(2), p(&[1, -1, -1, 1]));
        assert_eq!(p(&[1, 0, -1]).div_one_minus_lambda(), Some(p(&[1, 1])));
        assert_eq!(p(&[1, 3, 1]).div_one_minus_lambda(), None);
        assert_eq!(p(&[1, 3, 1]).eval_at_one(), BigInt::from(5));
        assert_eq!(p(&[1, 4]).shift(2), p(&[0, 0, 1, 4]));
    }

    #[test]
    fn display() {
        assert_eq!(
            format!("{}", p(&[1, 4, 2, -4, -1])),
            "1 + 4λ + 2λ^2 - 4λ^3 - λ^4"
        );
        assert_eq!(format!("{}", p(&[0, -2])), "-2λ");
        assert_eq!(format!("{}", IntegerPolynomial::zero()), "0");
    }
}
