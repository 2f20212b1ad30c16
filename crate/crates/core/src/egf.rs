//! Truncated exponential generating series `Σ a_n z^n/n!` with polynomial
//! coefficients.
//!
//! Coefficients are stored in the `z^n/n!` normalisation, so the product is
//! the binomial convolution `(u·v)_n = Σ C(n,k) u_k v_(n−k)`. These series are
//! the independent route for every number family and for the left-hand sides
//! of the convolution identities.

use crate::arith::{binomial_q, ArithError, MultiPoly, Rational, Var};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum EgfError {
    #[error("constant term not invertible")]
    NotInvertible,
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// Coefficients `a_0..=a_N`; `N` is the truncation order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EgfSeries {
    coeffs: Vec<MultiPoly>,
}

impl EgfSeries {
    /// Panics on an empty coefficient list.
    pub fn new(coeffs: Vec<MultiPoly>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least a constant term");
        EgfSeries { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> MultiPoly) -> Self {
        EgfSeries::new((0..=order).map(f).collect())
    }

    pub fn one(order: usize) -> Self {
        EgfSeries::from_fn(order, |n| {
            if n == 0 {
                MultiPoly::one()
            } else {
                MultiPoly::zero()
            }
        })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &MultiPoly {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        EgfSeries::new(self.coeffs[..=order.min(self.order())].to_vec())
    }

    pub fn add(&self, other: &EgfSeries) -> EgfSeries {
        let n = self.order().min(other.order());
        EgfSeries::from_fn(n, |i| &self.coeffs[i] + &other.coeffs[i])
    }

    pub fn sub(&self, other: &EgfSeries) -> EgfSeries {
        let n = self.order().min(other.order());
        EgfSeries::from_fn(n, |i| &self.coeffs[i] - &other.coeffs[i])
    }

    pub fn scale(&self, c: &Rational) -> EgfSeries {
        EgfSeries::from_fn(self.order(), |i| self.coeffs[i].scale(c))
    }

    /// Coefficient-wise map, e.g. an exact division by a polynomial.
    pub fn try_map(
        &self,
        mut f: impl FnMut(&MultiPoly) -> Result<MultiPoly, ArithError>,
    ) -> Result<EgfSeries, ArithError> {
        Ok(EgfSeries::new(
            self.coeffs.iter().map(&mut f).collect::<Result<_, _>>()?,
        ))
    }
}

pub fn egf_mul(u: &EgfSeries, v: &EgfSeries) -> EgfSeries {
    let order = u.order().min(v.order());
    EgfSeries::from_fn(order, |n| {
        let mut acc = MultiPoly::zero();
        for k in 0..=n {
            if u.coeffs[k].is_zero() || v.coeffs[n - k].is_zero() {
                continue;
            }
            let term = &u.coeffs[k] * &v.coeffs[n - k];
            acc = &acc + &term.scale(&binomial_q(n as u64, k as i64));
        }
        acc
    })
}

/// Multiplicative inverse; the constant term must be a nonzero rational.
pub fn egf_invert(u: &EgfSeries) -> Result<EgfSeries, EgfError> {
    let a0 = u.coeffs[0]
        .as_constant()
        .filter(|c| !c.is_zero())
        .ok_or(EgfError::NotInvertible)?;
    let inv0 = a0.recip()?;
    let mut out: Vec<MultiPoly> = vec![MultiPoly::constant(inv0.clone())];
    for n in 1..=u.order() {
        // Σ_{k=0}^{n} C(n,k) a_k v_{n−k} = 0
        let mut acc = MultiPoly::zero();
        for k in 1..=n {
            if u.coeffs[k].is_zero() || out[n - k].is_zero() {
                continue;
            }
            let term = &u.coeffs[k] * &out[n - k];
            acc = &acc + &term.scale(&binomial_q(n as u64, k as i64));
        }
        out.push(acc.scale(&-&inv0));
    }
    Ok(EgfSeries::new(out))
}

/// `exp(c·z)`: coefficients `c^n`.
pub fn egf_exp_linear(c: &MultiPoly, order: usize) -> EgfSeries {
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(MultiPoly::one());
    for n in 1..=order {
        let next = &coeffs[n - 1] * c;
        coeffs.push(next);
    }
    EgfSeries::new(coeffs)
}

/// `z·u`: coefficients `b_n = n·a_(n−1)`, `b_0 = 0`, same order.
pub fn egf_mul_by_z(u: &EgfSeries) -> EgfSeries {
    EgfSeries::from_fn(u.order(), |n| {
        if n == 0 {
            MultiPoly::zero()
        } else {
            u.coeffs[n - 1].scale(&Rational::from_int(n as i64))
        }
    })
}

/// Change of variable `z → c·z`: coefficient `n` is multiplied by `c^n`.
pub fn egf_rescale(u: &EgfSeries, c: &MultiPoly) -> EgfSeries {
    let mut pw = MultiPoly::one();
    EgfSeries::from_fn(u.order(), |n| {
        if n > 0 {
            pw = &pw * c;
        }
        &u.coeffs[n] * &pw
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SpecialEgf {
    /// `z/(e^z − 1)`
    Bernoulli,
    /// `2e^z/(e^(2z) + 1)`
    Euler,
    /// `2z/(e^z + 1)`
    Genocchi,
    /// `z·e^(xz)/(e^z − 1)`
    BernoulliPoly,
    /// `2e^(xz)/(e^z + 1)`
    EulerPoly,
    /// `2z·e^(xz)/(e^z + 1)`
    GenocchiPoly,
}

/// `(e^z − 1)/z = Σ z^n/(n+1)!`, i.e. EGF coefficients `1/(n+1)`.
fn expm1_over_z(order: usize) -> EgfSeries {
    EgfSeries::from_fn(order, |n| {
        MultiPoly::constant(Rational::new(1, n as i64 + 1).expect("n + 1 > 0"))
    })
}

/// `(e^z + 1)/2`: `1, 1/2, 1/2, …`.
fn half_exp_plus_one(order: usize) -> EgfSeries {
    let half = Rational::new(1, 2).unwrap();
    EgfSeries::from_fn(order, |n| {
        if n == 0 {
            MultiPoly::one()
        } else {
            MultiPoly::constant(half.clone())
        }
    })
}

/// `(e^(2z) + 1)/2`: `1, 1, 2, 4, …, 2^(n−1)`.
fn half_exp2_plus_one(order: usize) -> EgfSeries {
    EgfSeries::from_fn(order, |n| {
        if n == 0 {
            MultiPoly::one()
        } else {
            MultiPoly::constant(Rational::pow2(n as i64 - 1))
        }
    })
}

/// The named generating function truncated at `order`. With `arg = Some(c)`
/// the series is taken at `c·z`.
pub fn egf_special(which: SpecialEgf, order: usize, arg: Option<&MultiPoly>) -> EgfSeries {
    let x = MultiPoly::var(Var::X);
    let inv = |s: EgfSeries| egf_invert(&s).expect("unit constant term");
    let series = match which {
        SpecialEgf::Bernoulli => inv(expm1_over_z(order)),
        SpecialEgf::Euler => egf_mul(
            &inv(half_exp2_plus_one(order)),
            &egf_exp_linear(&MultiPoly::one(), order),
        ),
        SpecialEgf::Genocchi => egf_mul_by_z(&inv(half_exp_plus_one(order))),
        SpecialEgf::BernoulliPoly => egf_mul(&inv(expm1_over_z(order)), &egf_exp_linear(&x, order)),
        SpecialEgf::EulerPoly => {
            egf_mul(&inv(half_exp_plus_one(order)), &egf_exp_linear(&x, order))
        }
        SpecialEgf::GenocchiPoly => egf_mul_by_z(&egf_mul(
            &inv(half_exp_plus_one(order)),
            &egf_exp_linear(&x, order),
        )),
    };
    match arg {
        Some(c) => egf_rescale(&series, c),
        None => series,
    }
}

/// `Σ S_(n−1)(x1 + x2) z^n/n! = (exp(x1 z) − exp(x2 z))/(x1 − x2)`, with the
/// division carried out exactly on each coefficient.
pub fn symmetric_s_series(order: usize) -> EgfSeries {
    let (x1, x2) = (MultiPoly::var(Var::X1), MultiPoly::var(Var::X2));
    let d = &x1 - &x2;
    egf_exp_linear(&x1, order)
        .sub(&egf_exp_linear(&x2, order))
        .try_map(|c| c.div_exact(&d))
        .expect("x1^n - x2^n is divisible by x1 - x2")
}

/// `Σ φ_n(x1 + x2) z^n/n! = exp(x1 z) + exp(x2 z)`.
pub fn symmetric_phi_series(order: usize) -> EgfSeries {
    let (x1, x2) = (MultiPoly::var(Var::X1), MultiPoly::var(Var::X2));
    egf_exp_linear(&x1, order).add(&egf_exp_linear(&x2, order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::binomial;
    use crate::symfun::{sym_phi, sym_s, LetterPair};
    use proptest::prelude::*;

    fn q(s: &str) -> MultiPoly {
        MultiPoly::constant(s.parse().unwrap())
    }

    #[test]
    fn product_of_exponentials_is_binomial_power() {
        let (x1, x2) = (MultiPoly::var(Var::X1), MultiPoly::var(Var::X2));
        let p = egf_mul(&egf_exp_linear(&x1, 8), &egf_exp_linear(&x2, 8));
        for n in 0..=8 {
            assert_eq!(p.coeff(n), &(&x1 + &x2).pow(n as u32));
        }
    }

    #[test]
    fn one_is_the_identity() {
        let u = egf_exp_linear(&MultiPoly::var(Var::Y), 6);
        assert_eq!(egf_mul(&u, &EgfSeries::one(6)), u);
        assert_eq!(egf_invert(&EgfSeries::one(6)).unwrap(), EgfSeries::one(6));
    }

    #[test]
    fn mul_uses_min_order() {
        let a = EgfSeries::one(3);
        let b = EgfSeries::one(7);
        assert_eq!(egf_mul(&a, &b).order(), 3);
    }

    #[test]
    fn square_of_s_series_at_two() {
        // (x1 - x2)^2 · [z^2/2!] S(z)^2 = 2^2 φ_2 - 2 (x1 + x2)^2
        let s = symmetric_s_series(4);
        let sq = egf_mul(&s, &s);
        assert_eq!(sq.coeff(2), &MultiPoly::int(2));
        let p = LetterPair::indeterminates();
        let d2 = p.difference().pow(2);
        let rhs = &sym_phi(&p, 2).scale(&Rational::from_int(4))
            - &p.sum().pow(2).scale(&Rational::from_int(2));
        assert_eq!(&d2 * sq.coeff(2), rhs);
    }

    #[test]
    fn invert_rejects_zero_constant() {
        let u = egf_mul_by_z(&EgfSeries::one(4));
        assert_eq!(
            egf_invert(&u).unwrap_err().to_string(),
            "constant term not invertible"
        );
        let v = egf_exp_linear(&MultiPoly::var(Var::X), 3);
        let w = EgfSeries::from_fn(3, |n| {
            if n == 0 {
                MultiPoly::var(Var::X)
            } else {
                v.coeff(n).clone()
            }
        });
        assert_eq!(egf_invert(&w).unwrap_err(), EgfError::NotInvertible);
    }

    #[test]
    fn exp_linear_coefficients() {
        assert_eq!(egf_exp_linear(&MultiPoly::zero(), 4), EgfSeries::one(4));
        let x1 = MultiPoly::var(Var::X1);
        let e = egf_exp_linear(&x1, 5);
        assert_eq!(e.coeff(5), &x1.pow(5));
    }

    #[test]
    fn mul_by_z_shifts() {
        let one = EgfSeries::one(4);
        let z = egf_mul_by_z(&one);
        assert_eq!(z.coeffs(), &[q("0"), q("1"), q("0"), q("0"), q("0")]);
        let z2 = egf_mul_by_z(&z);
        assert_eq!(z2.coeffs(), &[q("0"), q("0"), q("2"), q("0"), q("0")]);
    }

    #[test]
    fn special_series_examples() {
        assert_eq!(
            egf_special(SpecialEgf::Bernoulli, 4, None).coeff(2),
            &q("1/6")
        );
        assert_eq!(
            egf_special(SpecialEgf::Bernoulli, 12, None).coeff(12),
            &q("-691/2730")
        );
        assert_eq!(egf_special(SpecialEgf::Euler, 4, None).coeff(4), &q("5"));
        assert_eq!(egf_special(SpecialEgf::Euler, 4, None).coeff(0), &q("1"));
        assert_eq!(egf_special(SpecialEgf::Genocchi, 4, None).coeff(1), &q("1"));
        assert_eq!(
            egf_special(SpecialEgf::Genocchi, 4, None).coeff(2),
            &q("-1")
        );
        let x = MultiPoly::var(Var::X);
        assert_eq!(
            egf_special(SpecialEgf::EulerPoly, 3, None).coeff(1),
            &(&x - &q("1/2"))
        );
        assert_eq!(
            egf_special(SpecialEgf::GenocchiPoly, 3, None).coeff(2),
            &(&x.scale(&Rational::from_int(2)) - &q("1"))
        );
        assert_eq!(
            egf_special(SpecialEgf::BernoulliPoly, 3, None).coeff(0),
            &q("1")
        );
    }

    #[test]
    fn change_of_variable_law() {
        let (x1, x2) = (MultiPoly::var(Var::X1), MultiPoly::var(Var::X2));
        let c = &x1 - &x2;
        for kind in [
            SpecialEgf::Genocchi,
            SpecialEgf::Bernoulli,
            SpecialEgf::EulerPoly,
        ] {
            let plain = egf_special(kind, 10, None);
            let scaled = egf_special(kind, 10, Some(&c));
            for n in 0..=10 {
                assert_eq!(scaled.coeff(n), &(plain.coeff(n) * &c.pow(n as u32)));
            }
        }
    }

    #[test]
    fn defining_products() {
        let n = 40;
        let b = egf_special(SpecialEgf::Bernoulli, n, None);
        assert_eq!(egf_mul(&b, &expm1_over_z(n)), EgfSeries::one(n));

        let e = egf_special(SpecialEgf::Euler, n, None);
        assert_eq!(
            egf_mul(&e, &half_exp2_plus_one(n)),
            egf_exp_linear(&MultiPoly::one(), n)
        );

        // G · (e^z + 1)/2 = z
        let g = egf_special(SpecialEgf::Genocchi, n, None);
        assert_eq!(
            egf_mul(&g, &half_exp_plus_one(n)),
            egf_mul_by_z(&EgfSeries::one(n))
        );
    }

    #[test]
    fn lemma_series_realise_s_and_phi() {
        let p = LetterPair::indeterminates();
        let s = symmetric_s_series(40);
        let phi = symmetric_phi_series(40);
        for n in 0..=40 {
            assert_eq!(s.coeff(n), &sym_s(&p, n as i64 - 1), "n={n}");
            assert_eq!(phi.coeff(n), &sym_phi(&p, n as u32), "n={n}");
        }
    }

    fn small_series() -> impl Strategy<Value = EgfSeries> {
        prop::collection::vec((-3i64..4, 0u32..2), 4..=6).prop_map(|cs| {
            EgfSeries::new(
                cs.into_iter()
                    .map(|(c, e)| MultiPoly::var(Var::Y).pow(e).scale(&Rational::from_int(c)))
                    .collect(),
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn mul_commutes_and_associates(a in small_series(), b in small_series(), c in small_series()) {
            prop_assert_eq!(egf_mul(&a, &b), egf_mul(&b, &a));
            prop_assert_eq!(egf_mul(&egf_mul(&a, &b), &c), egf_mul(&a, &egf_mul(&b, &c)));
        }

        #[test]
        fn invert_is_inverse(mut a in small_series(), c0 in 1i64..5) {
            a.coeffs[0] = MultiPoly::int(c0);
            let inv = egf_invert(&a).unwrap();
            prop_assert_eq!(egf_mul(&a, &inv), EgfSeries::one(a.order()));
        }
    }

    #[test]
    fn binomial_weights_are_used() {
        // (1 + z)·(1 + z) in EGF form: z has coefficient 1 at n=1, so z² = 2·z²/2!
        let u = EgfSeries::new(vec![q("1"), q("1"), q("0")]);
        let sq = egf_mul(&u, &u);
        assert_eq!(
            sq.coeff(2),
            &MultiPoly::constant(Rational::from_int(binomial(2, 1)))
        );
    }
}
