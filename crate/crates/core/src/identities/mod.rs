//! Registry and exact checker for the convolution identities.
//!
//! Theorems are evaluated over the free letters `x1, x2` (plus `x` for the
//! polynomial families). Corollaries are evaluated in the quadratic extension
//! with the Binet roots of one of the two families substituted for the
//! letters. Every check is an exact ring equality at a single index.

mod catalog;
mod corollaries;
mod env;
mod extras;
mod theorems;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::{ArithError, Bindings, CommRing, MultiPoly, Rational, Var};
use crate::quadext::{QuadExtElem, QuadExtError};

pub use catalog::{
    check_identity, check_identity_specialized, derive_corollary, parity_restriction_equivalence,
    register_catalog, Catalog, IdentityRecord, RecordSource,
};
pub use corollaries::{CorollaryEnv, PrintedCorollary};
pub use env::TheoremEnv;
pub use theorems::{theorem_sides, TheoremId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    AsPrinted,
    Corrected,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::AsPrinted => "as_printed",
            Variant::Corrected => "corrected",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = IdentityError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "as_printed" => Ok(Variant::AsPrinted),
            "corrected" => Ok(Variant::Corrected),
            other => Err(IdentityError::UnknownVariant(other.to_string())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RingKind {
    Indeterminate,
    FibonacciRoots,
    BalancingRoots,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// Substitution applied to `y, t` before a root-ring check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Specialization {
    Symbolic,
    /// `t = 1`
    TOne,
    /// `y = t = 1`
    YTOne,
}

impl Specialization {
    pub const ALL: [Specialization; 3] = [
        Specialization::Symbolic,
        Specialization::TOne,
        Specialization::YTOne,
    ];

    pub fn bindings(self) -> Bindings {
        let one = MultiPoly::one();
        match self {
            Specialization::Symbolic => Bindings::new(),
            Specialization::TOne => [(Var::T, one)].into(),
            Specialization::YTOne => [(Var::Y, one.clone()), (Var::T, one)].into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum IdentityError {
    #[error("unknown identity: {0}")]
    Unknown(String),
    #[error("unknown variant: {0}")]
    UnknownVariant(String),
    #[error("unknown family: {0}")]
    UnknownFamily(String),
    #[error("{0} is not a theorem over indeterminates")]
    NotATheorem(String),
}

/// Failure to produce a value at one index.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    /// A divided term `X_0/0` with `X_0 ≠ 0`.
    #[error("undefined term: {0}")]
    Undefined(String),
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    QuadExt(#[from] QuadExtError),
}

/// One index, one record.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityVerdict {
    pub id: String,
    pub variant: Variant,
    pub n: i64,
    pub status: Status,
    pub lhs: Option<String>,
    pub rhs: Option<String>,
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Sides<R> {
    pub lhs: R,
    pub rhs: R,
}

impl<R> Sides<R> {
    pub fn new(lhs: R, rhs: R) -> Self {
        Sides { lhs, rhs }
    }

    pub fn map<S>(self, f: impl Fn(R) -> S) -> Sides<S> {
        Sides {
            lhs: f(self.lhs),
            rhs: f(self.rhs),
        }
    }
}

impl<R: CommRing> Sides<R> {
    pub fn holds(&self) -> bool {
        self.lhs.minus(&self.rhs).is_zero()
    }
}

/// Either kind of ring element a record can produce.
#[derive(Clone, Debug, PartialEq)]
pub enum RingValue {
    Poly(MultiPoly),
    Quad(QuadExtElem),
}

impl RingValue {
    pub fn is_zero(&self) -> bool {
        match self {
            RingValue::Poly(p) => p.is_zero(),
            RingValue::Quad(q) => q.is_zero(),
        }
    }
}

impl fmt::Display for RingValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingValue::Poly(p) => p.fmt(f),
            RingValue::Quad(q) => q.fmt(f),
        }
    }
}

impl Sides<RingValue> {
    pub fn holds_exactly(&self) -> Result<bool, EvalError> {
        match (&self.lhs, &self.rhs) {
            (RingValue::Poly(a), RingValue::Poly(b)) => Ok((a - b).is_zero()),
            (RingValue::Quad(a), RingValue::Quad(b)) => Ok(a.checked_sub(b)?.is_zero()),
            (RingValue::Quad(a), RingValue::Poly(b)) | (RingValue::Poly(b), RingValue::Quad(a)) => {
                Ok(a.minus(&a.embed(b)).is_zero())
            }
        }
    }
}

/// The common left-hand-side shape `Σ_k [C(n,k)]·w(n,k)·a(k)·b(n−k)`.
///
/// The weight is a rational scalar and may carry number factors such as
/// `B_(n−k)`; terms whose weight vanishes are never multiplied out.
pub struct ConvolutionShape<R, W, A, B> {
    pub binomial: bool,
    pub zero: R,
    pub weight: W,
    pub term_a: A,
    pub term_b: B,
}

/// Sums the shape over `0 ≤ k ≤ n`, keeping only `k ≡ n (mod 2)` when
/// `same_parity` is set.
pub fn eval_convolution_sum<R, W, A, B>(
    shape: &ConvolutionShape<R, W, A, B>,
    n: i64,
    same_parity: bool,
) -> Result<R, EvalError>
where
    R: CommRing,
    W: Fn(i64, i64) -> Result<Rational, EvalError>,
    A: Fn(i64) -> R,
    B: Fn(i64) -> R,
{
    let mut acc = shape.zero.clone();
    for k in 0..=n.max(-1) {
        if same_parity && (n - k) % 2 != 0 {
            continue;
        }
        let mut c = (shape.weight)(n, k)?;
        if shape.binomial {
            c = c * crate::arith::binomial_q(n as u64, k);
        }
        if c.is_zero() {
            continue;
        }
        let term = (shape.term_a)(k).times(&(shape.term_b)(n - k));
        acc = acc.plus(&term.scaled(&c));
    }
    Ok(acc)
}

/// `X_j / j` under the degenerate-index conventions: zero for `j < 0`, zero
/// for `j = 0` when `X_0 = 0`, and undefined otherwise at `j = 0`.
pub(crate) fn divided(
    x: impl Fn(usize) -> Rational,
    j: i64,
    what: &str,
) -> Result<Rational, EvalError> {
    if j < 0 {
        return Ok(Rational::zero());
    }
    let v = x(j as usize);
    if j == 0 {
        if v.is_zero() {
            return Ok(v);
        }
        return Err(EvalError::Undefined(format!(
            "{what}_0/0 with {what}_0 = {v}"
        )));
    }
    Ok(v.checked_div(&Rational::from_int(j))?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfun::{sym_phi, sym_s, LetterPair};

    #[test]
    fn convolution_examples() {
        let p = LetterPair::indeterminates();
        // Σ C(1,k) S_(−k) φ_k at n = 1 leaves S_0 φ_0
        let shape = ConvolutionShape {
            binomial: true,
            zero: MultiPoly::zero(),
            weight: |_, _| Ok(Rational::one()),
            term_a: |k| sym_phi(&p, k as u32),
            term_b: |j| sym_s(&p, j - 1),
        };
        assert_eq!(
            eval_convolution_sum(&shape, 1, false).unwrap(),
            MultiPoly::int(2)
        );
        let shape = ConvolutionShape {
            binomial: false,
            zero: MultiPoly::zero(),
            weight: |_, _| Ok(Rational::one()),
            term_a: |k| sym_phi(&p, k as u32),
            term_b: |j| sym_phi(&p, j as u32),
        };
        assert_eq!(
            eval_convolution_sum(&shape, 0, false).unwrap(),
            MultiPoly::int(4)
        );
    }

    #[test]
    fn parity_filter_drops_terms() {
        let shape = ConvolutionShape {
            binomial: false,
            zero: MultiPoly::zero(),
            weight: |_, _| Ok(Rational::one()),
            term_a: |_| MultiPoly::one(),
            term_b: |_| MultiPoly::one(),
        };
        assert_eq!(
            eval_convolution_sum(&shape, 5, false).unwrap(),
            MultiPoly::int(6)
        );
        assert_eq!(
            eval_convolution_sum(&shape, 5, true).unwrap(),
            MultiPoly::int(3)
        );
        assert!(eval_convolution_sum(&shape, -1, false).unwrap().is_zero());
    }

    #[test]
    fn divided_conventions() {
        let zero_at_0 = |j: usize| Rational::from_int(j as i64);
        let one_at_0 = |_: usize| Rational::one();
        assert!(divided(one_at_0, -3, "B").unwrap().is_zero());
        assert!(divided(zero_at_0, 0, "G").unwrap().is_zero());
        assert!(matches!(
            divided(one_at_0, 0, "B"),
            Err(EvalError::Undefined(_))
        ));
        assert_eq!(
            divided(one_at_0, 4, "B").unwrap(),
            Rational::new(1, 4).unwrap()
        );
    }
}
