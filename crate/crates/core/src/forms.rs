//! Binary forms in Cayley notation and their transvectants.
//!
//! A form of degree `n` is stored as its Cayley coefficients `z_0..z_n`,
//! representing `sum_i z_i * C(n, i) * x1^(n-i) * x2^i`. The zero form keeps
//! its declared degree.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{checked_div, Ring, Scalar};

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

fn binom_scalar(n: usize, k: usize) -> Scalar {
    Scalar::from_integer(binomial(n, k))
}

#[derive(Clone, PartialEq)]
pub struct BinaryForm<R> {
    coeffs: Vec<R>,
}

/// Quadratic (or any-degree) form over the rationals.
pub type QForm = BinaryForm<Scalar>;

impl<R: Ring> BinaryForm<R> {
    /// Builds the form `(z_0, ..., z_n ; x1, x2)^n`.
    pub fn cayley(coeffs: Vec<R>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptyCoefficients);
        }
        Ok(BinaryForm { coeffs })
    }

    pub fn zero(degree: usize) -> Self {
        BinaryForm { coeffs: vec![R::zero(); degree + 1] }
    }

    /// The degree-0 form `1`.
    pub fn unit() -> Self {
        BinaryForm { coeffs: vec![R::one()] }
    }

    /// The linear form `p*x1 + q*x2`.
    pub fn linear(p: R, q: R) -> Self {
        BinaryForm { coeffs: vec![p, q] }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &R {
        &self.coeffs[i]
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Coefficients of the plain monomials `x1^(n-i) x2^i`.
    pub fn raw_coeffs(&self) -> Vec<R> {
        let n = self.degree();
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, z)| z.scaled(&binom_scalar(n, i)))
            .collect()
    }

    /// Inverse of [`raw_coeffs`](Self::raw_coeffs).
    pub fn from_raw(raw: Vec<R>) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::EmptyCoefficients);
        }
        let n = raw.len() - 1;
        let coeffs = raw
            .into_iter()
            .enumerate()
            .map(|(i, c)| c.scaled(&(Scalar::one() / binom_scalar(n, i))))
            .collect();
        Ok(BinaryForm { coeffs })
    }

    fn check_same_degree(&self, other: &Self) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch { expected: self.degree(), found: other.degree() });
        }
        Ok(())
    }

    pub fn plus(&self, other: &Self) -> Result<Self> {
        self.check_same_degree(other)?;
        Ok(BinaryForm {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.plus(b)).collect(),
        })
    }

    pub fn minus(&self, other: &Self) -> Result<Self> {
        self.check_same_degree(other)?;
        Ok(BinaryForm {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.minus(b)).collect(),
        })
    }

    pub fn negated(&self) -> Self {
        self.map(Ring::negated)
    }

    pub fn scaled(&self, k: &Scalar) -> Self {
        self.map(|c| c.scaled(k))
    }

    /// Multiplies every coefficient by a ring element.
    pub fn mul_coeff(&self, k: &R) -> Self {
        self.map(|c| c.times(k))
    }

    pub fn map(&self, f: impl Fn(&R) -> R) -> Self {
        BinaryForm { coeffs: self.coeffs.iter().map(f).collect() }
    }

    /// Product of forms, re-expressed in Cayley normalization.
    pub fn multiply(&self, other: &Self) -> Self {
        let a = self.raw_coeffs();
        let b = other.raw_coeffs();
        let mut raw = vec![R::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                raw[i + j] = raw[i + j].plus(&x.times(y));
            }
        }
        Self::from_raw(raw).expect("product has at least one coefficient")
    }

    /// `d^(p+q) / dx1^p dx2^q`.
    ///
    /// In Cayley normalization this is a window of the coefficient list
    /// times `n! / (n - p - q)!`.
    pub fn partial(&self, p: usize, q: usize) -> Self {
        let n = self.degree();
        let r = p + q;
        if r > n {
            return Self::zero(0);
        }
        let factor = Scalar::from_integer(factorial(n) / factorial(n - r));
        BinaryForm {
            coeffs: self.coeffs[q..=q + n - r].iter().map(|c| c.scaled(&factor)).collect(),
        }
    }

    /// The `r`-th transvectant `(self, other)_r`, a form of degree
    /// `m + n - 2r`.
    pub fn transvectant(&self, other: &Self, r: usize) -> Result<Self> {
        let (m, n) = (self.degree(), other.degree());
        if r > m.min(n) {
            return Err(Error::OrderOutOfRange { order: r, max: m.min(n) });
        }
        let mut total = Self::zero(m + n - 2 * r);
        for i in 0..=r {
            let term = self.partial(r - i, i).multiply(&other.partial(i, r - i));
            let mut k = binom_scalar(r, i);
            if i % 2 == 1 {
                k = -k;
            }
            total = total.plus(&term.scaled(&k))?;
        }
        let norm = Scalar::new(
            factorial(m - r) * factorial(n - r),
            factorial(m) * factorial(n),
        );
        Ok(total.scaled(&norm))
    }

    /// True iff the forms are equal up to a nonzero scalar, i.e. every 2x2
    /// minor of the coefficient pair vanishes. For quadratics this is the
    /// vanishing of the first transvectant.
    pub fn proportional(&self, other: &Self) -> Result<bool> {
        self.check_same_degree(other)?;
        match (self.is_zero(), other.is_zero()) {
            (true, true) => return Err(Error::BothZero),
            (true, false) | (false, true) => return Ok(false),
            _ => {}
        }
        let (g, h) = (&self.coeffs, &other.coeffs);
        for i in 0..g.len() {
            for j in i + 1..g.len() {
                if !g[i].times(&h[j]).minus(&g[j].times(&h[i])).is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

impl BinaryForm<Scalar> {
    /// The unique `P` with `self = divisor * P`, for a nonzero linear divisor.
    pub fn divide_exact(&self, divisor: &Self) -> Result<Self> {
        if divisor.degree() != 1 {
            return Err(Error::DegreeMismatch { expected: 1, found: divisor.degree() });
        }
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.degree();
        if n == 0 {
            return Err(Error::NotDivisible);
        }
        // divisor = p*x1 + q*x2 in plain monomials
        let p = divisor.coeffs[0].clone();
        let q = divisor.coeffs[1].clone();
        let raw = self.raw_coeffs();
        let mut quot = vec![Scalar::zero(); n];
        if !p.is_zero() {
            // long division from the x1^n end
            let mut rem = raw;
            for i in 0..n {
                let c = checked_div(&rem[i], &p)?;
                rem[i + 1] -= &c * &q;
                rem[i] = Scalar::zero();
                quot[i] = c;
            }
            if !rem[n].is_zero() {
                return Err(Error::NotDivisible);
            }
        } else {
            // divisor is q*x2: the x1^n coefficient must vanish
            if !raw[0].is_zero() {
                return Err(Error::NotDivisible);
            }
            for i in 0..n {
                quot[i] = checked_div(&raw[i + 1], &q)?;
            }
        }
        Self::from_raw(quot)
    }

    /// Scales so that the coefficient at `index` becomes one.
    pub fn normalized_at(&self, index: usize) -> Option<Self> {
        let c = self.coeffs.get(index)?;
        if c.is_zero() {
            return None;
        }
        let inv = Scalar::one() / c;
        Some(self.scaled(&inv))
    }
}

impl<R: fmt::Debug> fmt::Debug for BinaryForm<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c:?}")?;
        }
        write!(f, "; x1, x2)^{}", self.coeffs.len() - 1)
    }
}

impl fmt::Display for BinaryForm<Scalar> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "; x1, x2)^{}", self.coeffs.len() - 1)
    }
}

/// Shorthand for building a rational form from integer-ratio pairs in tests
/// and fixtures.
pub fn qform(coeffs: &[Scalar]) -> QForm {
    BinaryForm::cayley(coeffs.to_vec()).expect("nonempty coefficient list")
}
