//! The quadratic extension `R[δ]/(δ² − d)` over the polynomial ring, used to
//! hold the Binet roots of the bivariate Fibonacci and balancing recurrences
//! without any floating point.

use std::fmt;
use std::sync::Arc;

use crate::arith::{Bindings, CommRing, MultiPoly, Rational, Var};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum QuadExtError {
    #[error("discriminant mismatch")]
    DiscriminantMismatch,
    #[error("discriminant must be a polynomial in y and t only, got {0}")]
    BadDiscriminant(String),
    #[error("radical part did not cancel: {0}")]
    UncancelledRadical(String),
}

/// The radicand `d` with `δ² = d`. Shared behind an `Arc` so that equality of
/// elements built from one root pair is a pointer comparison.
#[derive(Clone)]
pub struct Discriminant(Arc<MultiPoly>);

impl Discriminant {
    pub fn new(d: MultiPoly) -> Result<Self, QuadExtError> {
        if !d.only_uses(&[Var::Y, Var::T]) {
            return Err(QuadExtError::BadDiscriminant(d.to_string()));
        }
        Ok(Discriminant(Arc::new(d)))
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.0
    }
}

impl PartialEq for Discriminant {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}

impl Eq for Discriminant {}

impl fmt::Debug for Discriminant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Discriminant({})", self.0)
    }
}

/// `a + b·δ`.
#[derive(Clone, PartialEq, Eq)]
pub struct QuadExtElem {
    a: MultiPoly,
    b: MultiPoly,
    disc: Discriminant,
}

impl QuadExtElem {
    pub fn new(a: MultiPoly, b: MultiPoly, disc: Discriminant) -> Self {
        QuadExtElem { a, b, disc }
    }

    pub fn from_poly(a: MultiPoly, disc: &Discriminant) -> Self {
        QuadExtElem::new(a, MultiPoly::zero(), disc.clone())
    }

    /// The element `δ` itself.
    pub fn delta(disc: &Discriminant) -> Self {
        QuadExtElem::new(MultiPoly::zero(), MultiPoly::one(), disc.clone())
    }

    pub fn a(&self) -> &MultiPoly {
        &self.a
    }

    pub fn b(&self) -> &MultiPoly {
        &self.b
    }

    pub fn disc(&self) -> &Discriminant {
        &self.disc
    }

    /// `a − b·δ`.
    pub fn conj(&self) -> Self {
        QuadExtElem::new(self.a.clone(), -&self.b, self.disc.clone())
    }

    fn check(&self, other: &Self) -> Result<(), QuadExtError> {
        if self.disc == other.disc {
            Ok(())
        } else {
            Err(QuadExtError::DiscriminantMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, QuadExtError> {
        self.check(other)?;
        Ok(QuadExtElem::new(
            &self.a + &other.a,
            &self.b + &other.b,
            self.disc.clone(),
        ))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, QuadExtError> {
        self.check(other)?;
        Ok(QuadExtElem::new(
            &self.a - &other.a,
            &self.b - &other.b,
            self.disc.clone(),
        ))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, QuadExtError> {
        self.check(other)?;
        let bb = &self.b * &other.b;
        let a = &(&self.a * &other.a) + &(&bb * self.disc.poly());
        let b = &(&self.a * &other.b) + &(&self.b * &other.a);
        Ok(QuadExtElem::new(a, b, self.disc.clone()))
    }

    /// Applies a polynomial substitution to both parts and to the
    /// discriminant.
    pub fn specialize(&self, bindings: &Bindings) -> Result<Self, QuadExtError> {
        let disc = Discriminant::new(self.disc.poly().substitute(bindings))?;
        Ok(QuadExtElem::new(
            self.a.substitute(bindings),
            self.b.substitute(bindings),
            disc,
        ))
    }

    fn with_disc(&self, disc: &Discriminant) -> Self {
        QuadExtElem::new(self.a.clone(), self.b.clone(), disc.clone())
    }
}

impl fmt::Display for QuadExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else {
            write!(f, "({}) + ({})*sqrt({})", self.a, self.b, self.disc.poly())
        }
    }
}

impl fmt::Debug for QuadExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl CommRing for QuadExtElem {
    fn zero_like(&self) -> Self {
        QuadExtElem::from_poly(MultiPoly::zero(), &self.disc)
    }
    fn one_like(&self) -> Self {
        QuadExtElem::from_poly(MultiPoly::one(), &self.disc)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.checked_add(rhs).expect("discriminant mismatch")
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.checked_sub(rhs).expect("discriminant mismatch")
    }
    fn times(&self, rhs: &Self) -> Self {
        self.checked_mul(rhs).expect("discriminant mismatch")
    }
    fn negated(&self) -> Self {
        QuadExtElem::new(-&self.a, -&self.b, self.disc.clone())
    }
    fn scaled(&self, c: &Rational) -> Self {
        QuadExtElem::new(self.a.scale(c), self.b.scale(c), self.disc.clone())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn embed(&self, p: &MultiPoly) -> Self {
        QuadExtElem::from_poly(p.clone(), &self.disc)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum QeOp {
    Add,
    Sub,
    Mul,
}

pub fn qe_arith(op: QeOp, u: &QuadExtElem, v: &QuadExtElem) -> Result<QuadExtElem, QuadExtError> {
    match op {
        QeOp::Add => u.checked_add(v),
        QeOp::Sub => u.checked_sub(v),
        QeOp::Mul => u.checked_mul(v),
    }
}

/// `u^n` by repeated squaring; each product reduces `δ²` to `d`.
pub fn qe_pow(u: &QuadExtElem, n: u32) -> QuadExtElem {
    u.power(n)
}

pub fn qe_rational_part(u: &QuadExtElem) -> MultiPoly {
    u.a.clone()
}

/// The two second-order families whose characteristic roots are substituted
/// for the letters `x1, x2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    /// Roots of `λ² − yλ − t`.
    Fibonacci,
    /// Roots of `λ² − 6yλ + t`.
    Balancing,
}

impl Family {
    pub const ALL: [Family; 2] = [Family::Fibonacci, Family::Balancing];

    pub fn name(self) -> &'static str {
        match self {
            Family::Fibonacci => "fibonacci",
            Family::Balancing => "balancing",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| format!("unknown family: {s}"))
    }
}

/// Conjugate roots `λ1 = (trace + c·δ)/2`, `λ2 = (trace − c·δ)/2` with
/// `λ1 + λ2 = trace` and `λ1·λ2 = norm`.
#[derive(Clone, Debug)]
pub struct RootPair {
    pub family: Family,
    pub lambda1: QuadExtElem,
    pub lambda2: QuadExtElem,
    pub trace: MultiPoly,
    pub norm: MultiPoly,
}

impl RootPair {
    pub fn disc(&self) -> &Discriminant {
        self.lambda1.disc()
    }

    /// `λ1 − λ2` as a rational multiple of `δ`.
    pub fn gap(&self) -> QuadExtElem {
        self.lambda1.minus(&self.lambda2)
    }

    /// Substitutes into every component, keeping one shared discriminant.
    pub fn specialize(&self, bindings: &Bindings) -> Result<RootPair, QuadExtError> {
        let l1 = self.lambda1.specialize(bindings)?;
        let disc = l1.disc().clone();
        let l2 = self.lambda2.specialize(bindings)?.with_disc(&disc);
        Ok(RootPair {
            family: self.family,
            lambda1: l1,
            lambda2: l2,
            trace: self.trace.substitute(bindings),
            norm: self.norm.substitute(bindings),
        })
    }
}

pub fn make_root_pair(family: Family) -> RootPair {
    let y = MultiPoly::var(Var::Y);
    let t = MultiPoly::var(Var::T);
    let half = Rational::new(1, 2).unwrap();
    match family {
        Family::Fibonacci => {
            let disc = Discriminant::new(&y.pow(2) + &t.scale(&Rational::from_int(4)))
                .expect("y^2 + 4t uses only y, t");
            let a = y.scale(&half);
            let b = MultiPoly::constant(half);
            RootPair {
                family,
                lambda1: QuadExtElem::new(a.clone(), b.clone(), disc.clone()),
                lambda2: QuadExtElem::new(a, -&b, disc),
                trace: y,
                norm: -&t,
            }
        }
        Family::Balancing => {
            let disc = Discriminant::new(&y.pow(2).scale(&Rational::from_int(9)) - &t)
                .expect("9y^2 - t uses only y, t");
            let a = y.scale(&Rational::from_int(3));
            RootPair {
                family,
                lambda1: QuadExtElem::new(a.clone(), MultiPoly::one(), disc.clone()),
                lambda2: QuadExtElem::new(a, -MultiPoly::one(), disc),
                trace: y.scale(&Rational::from_int(6)),
                norm: t,
            }
        }
    }
}

/// `(λ1^n − λ2^n)/(λ1 − λ2)`, which must land in the base ring.
pub fn qe_binet_ratio(pair: &RootPair, n: u32) -> Result<MultiPoly, QuadExtError> {
    let num = qe_pow(&pair.lambda1, n).minus(&qe_pow(&pair.lambda2, n));
    let gap = pair.gap();
    // gap = c·δ with c a nonzero rational constant for both families
    let c = gap
        .b()
        .as_constant()
        .filter(|c| !c.is_zero() && gap.a().is_zero())
        .ok_or_else(|| QuadExtError::UncancelledRadical(gap.to_string()))?;
    if !num.a().is_zero() {
        return Err(QuadExtError::UncancelledRadical(num.to_string()));
    }
    Ok(num.b().scale(&c.recip().expect("nonzero")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Monomial;
    use proptest::prelude::*;

    fn y() -> MultiPoly {
        MultiPoly::var(Var::Y)
    }
    fn t() -> MultiPoly {
        MultiPoly::var(Var::T)
    }

    #[test]
    fn norm_form_and_defining_relation() {
        let pair = make_root_pair(Family::Fibonacci);
        let d = pair.disc().clone();
        let u = QuadExtElem::new(y(), t(), d.clone());
        let prod = qe_arith(QeOp::Mul, &u, &u.conj()).unwrap();
        assert_eq!(prod.a(), &(&y().pow(2) - &(&t().pow(2) * d.poly())));
        assert!(prod.b().is_zero());
        let dd = qe_arith(QeOp::Mul, &QuadExtElem::delta(&d), &QuadExtElem::delta(&d)).unwrap();
        assert_eq!(dd, QuadExtElem::from_poly(d.poly().clone(), &d));
    }

    #[test]
    fn mixing_discriminants_fails() {
        let f = make_root_pair(Family::Fibonacci);
        let b = make_root_pair(Family::Balancing);
        let err = qe_arith(QeOp::Add, &f.lambda1, &b.lambda1).unwrap_err();
        assert_eq!(err.to_string(), "discriminant mismatch");
    }

    #[test]
    fn discriminant_must_avoid_letters() {
        assert!(Discriminant::new(MultiPoly::var(Var::X1)).is_err());
    }

    #[test]
    fn root_pair_invariants() {
        for fam in Family::ALL {
            let p = make_root_pair(fam);
            let sum = p.lambda1.plus(&p.lambda2);
            let prod = p.lambda1.times(&p.lambda2);
            assert_eq!(sum, p.lambda1.embed(&p.trace), "{fam}");
            assert_eq!(prod, p.lambda1.embed(&p.norm), "{fam}");
            // (λ1 − λ2)² = trace² − 4·norm
            assert_eq!(
                p.gap().power(2),
                p.lambda1
                    .embed(&(&p.trace.pow(2) - &p.norm.scale(&Rational::from_int(4))))
            );
        }
        let fib = make_root_pair(Family::Fibonacci);
        assert_eq!(fib.trace, y());
        assert_eq!(fib.gap(), QuadExtElem::delta(fib.disc()));
        let bal = make_root_pair(Family::Balancing);
        assert_eq!(bal.norm, t());
        assert_eq!(
            bal.gap(),
            QuadExtElem::delta(bal.disc()).scaled(&Rational::from_int(2))
        );
    }

    #[test]
    fn powers() {
        let fib = make_root_pair(Family::Fibonacci);
        assert_eq!(qe_pow(&fib.lambda1, 0), fib.lambda1.one_like());
        let l2 = qe_pow(&fib.lambda1, 2).plus(&qe_pow(&fib.lambda2, 2));
        assert!(l2.b().is_zero());
        assert_eq!(
            qe_rational_part(&l2),
            &y().pow(2) + &t().scale(&Rational::from_int(2))
        );
        let prod = fib.lambda1.times(&fib.lambda2);
        assert_eq!(prod, fib.lambda1.embed(&-&t()));
    }

    #[test]
    fn binet_ratio_small_values() {
        let fib = make_root_pair(Family::Fibonacci);
        assert!(qe_binet_ratio(&fib, 0).unwrap().is_zero());
        assert_eq!(qe_binet_ratio(&fib, 3).unwrap(), &y().pow(2) + &t());
        let bal = make_root_pair(Family::Balancing);
        assert_eq!(
            qe_binet_ratio(&bal, 2).unwrap(),
            y().scale(&Rational::from_int(6))
        );
    }

    #[test]
    fn rational_part_examples() {
        let bal = make_root_pair(Family::Balancing);
        let c1 = bal
            .lambda1
            .plus(&bal.lambda2)
            .scaled(&Rational::new(1, 2).unwrap());
        assert_eq!(qe_rational_part(&c1), y().scale(&Rational::from_int(3)));
        assert!(qe_rational_part(&QuadExtElem::delta(bal.disc())).is_zero());
    }

    #[test]
    fn lucas_side_satisfies_family_recurrence() {
        for fam in Family::ALL {
            let p = make_root_pair(fam);
            let v: Vec<QuadExtElem> = (0..12)
                .map(|n| qe_pow(&p.lambda1, n).plus(&qe_pow(&p.lambda2, n)))
                .collect();
            for n in 2..12 {
                let rhs = v[n - 1]
                    .times(&p.lambda1.embed(&p.trace))
                    .minus(&v[n - 2].times(&p.lambda1.embed(&p.norm)));
                assert_eq!(v[n], rhs);
            }
        }
    }

    #[test]
    fn specialization_to_numbers() {
        let b: Bindings = [(Var::Y, MultiPoly::one()), (Var::T, MultiPoly::one())].into();
        let fib = make_root_pair(Family::Fibonacci).specialize(&b).unwrap();
        assert_eq!(fib.disc().poly(), &MultiPoly::int(5));
        assert_eq!(qe_binet_ratio(&fib, 6).unwrap(), MultiPoly::int(8));
    }

    fn small_yt() -> impl Strategy<Value = MultiPoly> {
        prop::collection::vec((0u32..3, 0u32..3, -3i64..4), 0..4).prop_map(|ts| {
            MultiPoly::from_terms(
                ts.into_iter()
                    .map(|(ey, et, c)| (Monomial::new([0, 0, 0, ey, et]), Rational::from_int(c))),
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn conjugation_is_multiplicative(a1 in small_yt(), b1 in small_yt(), a2 in small_yt(), b2 in small_yt()) {
            let d = make_root_pair(Family::Balancing).disc().clone();
            let u = QuadExtElem::new(a1, b1, d.clone());
            let v = QuadExtElem::new(a2, b2, d);
            prop_assert_eq!(u.times(&v).conj(), u.conj().times(&v.conj()));
            prop_assert_eq!(u.plus(&v).conj(), u.conj().plus(&v.conj()));
        }
    }
}
