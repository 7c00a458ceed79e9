//! Exact one-variable polynomials and the (conjectural) Hilbert series of the
//! tangent cone, `turn_polynomial(z) / (1 - z)^T`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::grassmannian::Instance;
use crate::paths;
use crate::reflections;

/// Polynomial in `z` with nonnegative integer coefficients; index `t` holds
/// the coefficient of `z^t`. No trailing zeros are stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coefficients: Vec<BigUint>,
}

impl IntPolynomial {
    pub fn new(mut coefficients: Vec<BigUint>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        IntPolynomial { coefficients }
    }

    pub fn from_u64(coefficients: &[u64]) -> Self {
        IntPolynomial::new(coefficients.iter().map(|&c| BigUint::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial::default()
    }

    pub fn one() -> Self {
        IntPolynomial { coefficients: vec![BigUint::one()] }
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    #[inline]
    pub fn coefficients(&self) -> &[BigUint] {
        &self.coefficients
    }

    /// Coefficient of `z^t` (zero beyond the degree).
    pub fn coefficient(&self, t: usize) -> BigUint {
        self.coefficients.get(t).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn eval(&self, z: &BigUint) -> BigUint {
        self.coefficients.iter().rev().fold(BigUint::zero(), |acc, c| acc * z + c)
    }

    /// Value at `z = 1`, i.e. the sum of the coefficients.
    pub fn eval_at_one(&self) -> BigUint {
        self.coefficients.iter().sum()
    }

    pub fn add(&self, other: &IntPolynomial) -> IntPolynomial {
        let len = self.coefficients.len().max(other.coefficients.len());
        IntPolynomial::new((0..len).map(|t| self.coefficient(t) + other.coefficient(t)).collect())
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigUint::zero(); self.coefficients.len() + other.coefficients.len() - 1];
        for (a, ca) in self.coefficients.iter().enumerate() {
            for (b, cb) in other.coefficients.iter().enumerate() {
                out[a + b] += ca * cb;
            }
        }
        IntPolynomial::new(out)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (t, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (t, c.is_one()) {
                (0, _) => write!(f, "{c}")?,
                (1, true) => write!(f, "z")?,
                (1, false) => write!(f, "{c}z")?,
                (_, true) => write!(f, "z^{t}")?,
                (_, false) => write!(f, "{c}z^{t}")?,
            }
        }
        Ok(())
    }
}

/// `numerator / (1 - z)^pole_order`.
///
/// Series built by [`hilbert_series`] are flagged conjectural: the formula is
/// only known to give the Hilbert series of the tangent cone under an open
/// conjecture, while its value at `z = 1` (the multiplicity) is a theorem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    pub numerator: IntPolynomial,
    pub pole_order: usize,
    pub conjectural: bool,
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/(1-z)^{}", self.numerator, self.pole_order)
    }
}

/// `T = sum(i_l) - d(d+1)/2`, the dimension of `X(w)`.
pub fn pole_order(inst: &Instance) -> usize {
    inst.w().dimension()
}

pub fn hilbert_series(inst: &Instance) -> HilbertSeries {
    HilbertSeries { numerator: paths::turn_polynomial(inst), pole_order: pole_order(inst), conjectural: true }
}

/// Number of multisets of size `size` drawn from `kinds` kinds.
pub fn multiset_count(kinds: usize, size: usize) -> BigUint {
    if kinds == 0 {
        return if size == 0 { BigUint::one() } else { BigUint::zero() };
    }
    num_integer::binomial(BigUint::from(kinds + size - 1), BigUint::from(size))
}

/// Coefficient of `z^m` in the series: `sum_t h_t * C(T+m-t-1, m-t)`.
pub fn hilbert_function(hs: &HilbertSeries, m: usize) -> BigUint {
    hs.numerator
        .coefficients()
        .iter()
        .enumerate()
        .take_while(|(t, _)| *t <= m)
        .map(|(t, h)| h * multiset_count(hs.pole_order, m - t))
        .sum()
}

/// Coefficients of `z^0 .. z^max_m`, by repeated prefix sums (multiplying by
/// `1/(1-z)` once per pole).
pub fn series_expansion(hs: &HilbertSeries, max_m: usize) -> Vec<BigUint> {
    let mut coeffs: Vec<BigUint> = (0..=max_m).map(|t| hs.numerator.coefficient(t)).collect();
    for _ in 0..hs.pole_order {
        for k in 1..coeffs.len() {
            let prev = coeffs[k - 1].clone();
            coeffs[k] += prev;
        }
    }
    coeffs
}

/// Number of multisets of size `m` over the reflection rectangle whose
/// support passes the chain condition, by direct enumeration.
pub fn hilbert_function_oracle(inst: &Instance, m: usize) -> BigUint {
    let rect = inst.rectangle();
    let mut count = 0u64;
    let mut chosen: Vec<usize> = Vec::with_capacity(m);
    // nondecreasing index sequences of length m
    fn rec(inst: &Instance, rect: &[crate::grassmannian::GridPoint], from: usize, m: usize, chosen: &mut Vec<usize>, count: &mut u64) {
        if chosen.len() == m {
            let s: crate::shadow::ReflectionMultiset = chosen.iter().map(|&k| rect[k]).collect();
            if reflections::chain_condition(&s, inst) {
                *count += 1;
            }
            return;
        }
        for k in from..rect.len() {
            chosen.push(k);
            rec(inst, rect, k, m, chosen, count);
            chosen.pop();
        }
    }
    rec(inst, &rect, 0, m, &mut chosen, &mut count);
    BigUint::from(count)
}

pub fn multiplicity_from_series(hs: &HilbertSeries) -> BigUint {
    hs.numerator.eval_at_one()
}
