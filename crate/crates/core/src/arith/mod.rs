//! Exact arithmetic: rationals, the five-variable polynomial ring, binomial
//! coefficients, and the [`CommRing`] abstraction shared by the polynomial
//! ring and the quadratic extension.

mod poly;
mod rational;

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

pub use poly::{
    poly_arith, poly_pow, poly_substitute, Bindings, Monomial, MultiPoly, PolyOp, Var, NVARS,
};
pub use rational::{rat_arith, RatOp, Rational};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomial division leaves a remainder")]
    NotDivisible,
    #[error("polynomial is not constant")]
    NotConstant,
    #[error("cannot parse rational: {0:?}")]
    Parse(String),
}

/// C(n, k), and 0 whenever `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::from(0);
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `binomial` as a rational scalar.
pub fn binomial_q(n: u64, k: i64) -> Rational {
    Rational::from_int(binomial(n, k))
}

/// A commutative ring with rational scalars, in which every identity is
/// evaluated. Zero and one are produced from an existing element because the
/// quadratic extension needs its discriminant to build them.
pub trait CommRing: Clone + PartialEq + fmt::Display + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    fn scaled(&self, c: &Rational) -> Self;
    fn is_zero(&self) -> bool;
    /// Embeds a polynomial as an element of the same ring as `self`.
    fn embed(&self, p: &MultiPoly) -> Self;

    fn constant_like(&self, c: &Rational) -> Self {
        self.embed(&MultiPoly::constant(c.clone()))
    }

    fn power(&self, e: u32) -> Self {
        let mut result = self.one_like();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.times(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.times(&base);
            }
        }
        result
    }
}

impl CommRing for MultiPoly {
    fn zero_like(&self) -> Self {
        MultiPoly::zero()
    }
    fn one_like(&self) -> Self {
        MultiPoly::one()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn scaled(&self, c: &Rational) -> Self {
        self.scale(c)
    }
    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }
    fn embed(&self, p: &MultiPoly) -> Self {
        p.clone()
    }
    fn power(&self, e: u32) -> Self {
        self.pow(e)
    }
}
