//! Exact integer power series and products of linear factors `(1 + a t)^{±1}`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Truncation order used when none is given.
pub const DEFAULT_ORDER: usize = 10;

/// Power series `c_0 + c_1 t + ... + c_N t^N` with exact integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    /// The series `1` truncated at `order`.
    pub fn one(order: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); order + 1];
        coeffs[0] = BigInt::one();
        Self { coeffs }
    }

    /// An empty coefficient list is read as the zero series of order 0.
    pub fn from_coeffs<I, T>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut coeffs: Vec<BigInt> = coeffs.into_iter().map(Into::into).collect();
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &BigInt {
        &self.coeffs[k]
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self {
            coeffs: self.coeffs[..=order.min(self.order())].to_vec(),
        }
    }

    /// Cauchy product truncated to the smaller order.
    pub fn multiply(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let coeffs = (0..=n)
            .map(|k| {
                (0..=k)
                    .filter(|&j| !self.coeffs[j].is_zero())
                    .map(|j| &self.coeffs[j] * &other.coeffs[k - j])
                    .sum()
            })
            .collect();
        Self { coeffs }
    }

    /// Multiplicative inverse to the same order; the constant term must be `±1`.
    pub fn invert(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.abs() != BigInt::one() {
            return Err(Error::NotInvertible(c0.clone()));
        }
        // c0 is its own inverse.
        let mut inv: Vec<BigInt> = Vec::with_capacity(self.coeffs.len());
        inv.push(c0.clone());
        for k in 1..self.coeffs.len() {
            let acc: BigInt = (1..=k).map(|j| &self.coeffs[j] * &inv[k - j]).sum();
            inv.push(-(c0 * acc));
        }
        Ok(Self { coeffs: inv })
    }

    /// `n! * c_n` for every `n`: the values recovered from an exponential
    /// generating function.
    pub fn chi_values(&self) -> Vec<BigInt> {
        let mut factorial = BigInt::one();
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| {
                if n > 0 {
                    factorial *= n;
                }
                c * &factorial
            })
            .collect()
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// Exponent of a linear factor; only `+1` and `-1` occur.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Exponent {
    Inverse,
    Direct,
}

impl Exponent {
    pub fn from_parity(dim: usize) -> Self {
        if dim.is_multiple_of(2) {
            Exponent::Direct
        } else {
            Exponent::Inverse
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Exponent::Direct => 1,
            Exponent::Inverse => -1,
        }
    }

    pub fn from_value(e: i64) -> Option<Self> {
        match e {
            1 => Some(Exponent::Direct),
            -1 => Some(Exponent::Inverse),
            _ => None,
        }
    }
}

/// `(1 + a t)^exponent`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LinearFactor {
    pub a: i64,
    pub exponent: Exponent,
}

impl LinearFactor {
    pub fn new(a: i64, exponent: Exponent) -> Self {
        Self { a, exponent }
    }
}

impl PartialOrd for LinearFactor {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LinearFactor {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.a, self.exponent.value()).cmp(&(other.a, other.exponent.value()))
    }
}

/// A product of linear factors in canonical form: no `a = 0` factors, no
/// factor together with its inverse, sorted by `(a, exponent)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LinearFactorProduct {
    factors: Vec<LinearFactor>,
}

impl LinearFactorProduct {
    /// The empty product.
    pub fn one() -> Self {
        Self::default()
    }

    pub fn from_factors(factors: impl IntoIterator<Item = LinearFactor>) -> Self {
        let mut net: BTreeMap<i64, i64> = BTreeMap::new();
        for f in factors {
            if f.a != 0 {
                *net.entry(f.a).or_insert(0) += f.exponent.value();
            }
        }
        Self::from_net(net)
    }

    fn from_net(net: BTreeMap<i64, i64>) -> Self {
        let mut factors = Vec::new();
        for (a, e) in net {
            let exponent = if e > 0 {
                Exponent::Direct
            } else {
                Exponent::Inverse
            };
            factors.extend(std::iter::repeat_n(
                LinearFactor::new(a, exponent),
                e.unsigned_abs() as usize,
            ));
        }
        Self { factors }
    }

    pub fn factors(&self) -> &[LinearFactor] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// `(a, net exponent)` pairs with nonzero exponent, increasing in `a`.
    pub fn grouped(&self) -> Vec<(i64, i64)> {
        let mut out: Vec<(i64, i64)> = Vec::new();
        for f in &self.factors {
            match out.last_mut() {
                Some((a, e)) if *a == f.a => *e += f.exponent.value(),
                _ => out.push((f.a, f.exponent.value())),
            }
        }
        out
    }

    /// Coefficients of the product through `t^order`.
    pub fn expand(&self, order: usize) -> TruncatedSeries {
        let mut c = TruncatedSeries::one(order).coeffs;
        for f in &self.factors {
            let a = BigInt::from(f.a);
            match f.exponent {
                Exponent::Direct => {
                    for k in (1..=order).rev() {
                        let prev = &a * &c[k - 1];
                        c[k] += prev;
                    }
                }
                // Division by 1 + a t.
                Exponent::Inverse => {
                    for k in 1..=order {
                        let prev = &a * &c[k - 1];
                        c[k] -= prev;
                    }
                }
            }
        }
        TruncatedSeries { coeffs: c }
    }
}

impl Mul for &LinearFactorProduct {
    type Output = LinearFactorProduct;

    fn mul(self, rhs: Self) -> LinearFactorProduct {
        LinearFactorProduct::from_factors(self.factors.iter().chain(&rhs.factors).copied())
    }
}

impl fmt::Display for LinearFactorProduct {
    /// Renders as e.g. `(1-t)^-1 (1+t)^2`; the empty product is `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let groups = self.grouped();
        if groups.is_empty() {
            return write!(f, "1");
        }
        for (i, (a, e)) in groups.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            let sign = if *a < 0 { '-' } else { '+' };
            match a.unsigned_abs() {
                1 => write!(f, "(1{sign}t)")?,
                m => write!(f, "(1{sign}{m}t)")?,
            }
            if *e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}
