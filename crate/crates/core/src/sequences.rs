//! Bernoulli, Euler and Genocchi numbers and polynomials, and the four
//! bivariate second-order families.
//!
//! Numbers come from recurrences; the polynomials are read off truncated
//! generating series over the polynomial ring. The [`crate::egf`] module
//! provides the independent series route used to cross-check the numbers.
//!
//! Caches are append-only. Readers take a shared lock and only ever see a
//! fully computed prefix; extension happens under the write lock.

use std::fmt;
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

use crate::arith::{binomial_q, MultiPoly, Rational, Var};
use crate::egf::{egf_special, SpecialEgf};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NumberKind {
    Bernoulli,
    Euler,
    Genocchi,
}

/// Append-only table of one number family.
#[derive(Debug)]
pub struct NumberFamily {
    kind: NumberKind,
    cache: RwLock<Vec<Rational>>,
}

impl NumberFamily {
    pub fn new(kind: NumberKind) -> Self {
        NumberFamily {
            kind,
            cache: RwLock::new(Vec::new()),
        }
    }

    pub fn kind(&self) -> NumberKind {
        self.kind
    }

    pub fn get(&self, n: usize) -> Rational {
        if let Some(v) = self.cache.read().expect("cache lock").get(n) {
            return v.clone();
        }
        let mut cache = self.cache.write().expect("cache lock");
        while cache.len() <= n {
            let next = self.next_value(&cache);
            cache.push(next);
        }
        cache[n].clone()
    }

    /// Values `0..=n`.
    pub fn prefix(&self, n: usize) -> Vec<Rational> {
        self.get(n);
        self.cache.read().expect("cache lock")[..=n].to_vec()
    }

    fn next_value(&self, prev: &[Rational]) -> Rational {
        let n = prev.len();
        match self.kind {
            NumberKind::Bernoulli => {
                if n == 0 {
                    return Rational::one();
                }
                // Σ_{k=0}^{n} C(n+1, k) B_k = 0
                let s: Rational = (0..n)
                    .map(|k| binomial_q(n as u64 + 1, k as i64) * &prev[k])
                    .sum();
                -(s.checked_div(&Rational::from_int(n as i64 + 1))
                    .expect("n + 1 > 0"))
            }
            NumberKind::Euler => {
                if n == 0 {
                    return Rational::one();
                }
                // cosh(z)·sech(z) = 1: Σ_{k ≡ n (2)} C(n,k) E_k = 0 for n ≥ 1
                -(0..n)
                    .filter(|k| (n - k).is_multiple_of(2))
                    .map(|k| binomial_q(n as u64, k as i64) * &prev[k])
                    .sum::<Rational>()
            }
            NumberKind::Genocchi => {
                let b = bernoulli_number(n);
                b * (Rational::one() - Rational::pow2(n as i64)) * Rational::from_int(2)
            }
        }
    }
}

fn families() -> &'static [NumberFamily; 3] {
    static F: OnceLock<[NumberFamily; 3]> = OnceLock::new();
    F.get_or_init(|| {
        [
            NumberFamily::new(NumberKind::Bernoulli),
            NumberFamily::new(NumberKind::Euler),
            NumberFamily::new(NumberKind::Genocchi),
        ]
    })
}

pub fn number_family(kind: NumberKind) -> &'static NumberFamily {
    &families()[kind as usize]
}

pub fn bernoulli_number(n: usize) -> Rational {
    number_family(NumberKind::Bernoulli).get(n)
}

pub fn euler_number(n: usize) -> Rational {
    number_family(NumberKind::Euler).get(n)
}

/// `G_n = 2(1 − 2^n) B_n`.
pub fn genocchi_number(n: usize) -> Rational {
    number_family(NumberKind::Genocchi).get(n)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PolyKind {
    BernoulliPoly,
    EulerPoly,
    GenocchiPoly,
    BivFibonacci,
    BivLucas,
    BivBalancing,
    BivLucasBalancing,
}

impl PolyKind {
    pub const ALL: [PolyKind; 7] = [
        PolyKind::BernoulliPoly,
        PolyKind::EulerPoly,
        PolyKind::GenocchiPoly,
        PolyKind::BivFibonacci,
        PolyKind::BivLucas,
        PolyKind::BivBalancing,
        PolyKind::BivLucasBalancing,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PolyKind::BernoulliPoly => "bernoulli_poly",
            PolyKind::EulerPoly => "euler_poly",
            PolyKind::GenocchiPoly => "genocchi_poly",
            PolyKind::BivFibonacci => "biv_fibonacci",
            PolyKind::BivLucas => "biv_lucas",
            PolyKind::BivBalancing => "biv_balancing",
            PolyKind::BivLucasBalancing => "biv_lucas_balancing",
        }
    }

    fn series(self) -> Option<SpecialEgf> {
        match self {
            PolyKind::BernoulliPoly => Some(SpecialEgf::BernoulliPoly),
            PolyKind::EulerPoly => Some(SpecialEgf::EulerPoly),
            PolyKind::GenocchiPoly => Some(SpecialEgf::GenocchiPoly),
            _ => None,
        }
    }

    /// `(u_0, u_1, p, q)` for `u_n = p·u_(n−1) + q·u_(n−2)`.
    fn recurrence(self) -> Option<(MultiPoly, MultiPoly, MultiPoly, MultiPoly)> {
        let y = MultiPoly::var(Var::Y);
        let t = MultiPoly::var(Var::T);
        let six_y = y.scale(&Rational::from_int(6));
        match self {
            PolyKind::BivFibonacci => Some((MultiPoly::zero(), MultiPoly::one(), y, t)),
            PolyKind::BivLucas => Some((MultiPoly::int(2), y.clone(), y, t)),
            PolyKind::BivBalancing => Some((MultiPoly::zero(), MultiPoly::one(), six_y, -&t)),
            PolyKind::BivLucasBalancing => Some((
                MultiPoly::one(),
                y.scale(&Rational::from_int(3)),
                six_y,
                -&t,
            )),
            _ => None,
        }
    }
}

impl fmt::Display for PolyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PolyKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PolyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown polynomial family: {s}"))
    }
}

/// Append-only table of one polynomial family.
#[derive(Debug)]
pub struct PolyFamily {
    kind: PolyKind,
    cache: RwLock<Vec<MultiPoly>>,
}

impl PolyFamily {
    pub fn new(kind: PolyKind) -> Self {
        PolyFamily {
            kind,
            cache: RwLock::new(Vec::new()),
        }
    }

    pub fn get(&self, n: usize) -> MultiPoly {
        if let Some(v) = self.cache.read().expect("cache lock").get(n) {
            return v.clone();
        }
        let mut cache = self.cache.write().expect("cache lock");
        if cache.len() <= n {
            self.extend(&mut cache, n);
        }
        cache[n].clone()
    }

    pub fn prefix(&self, n: usize) -> Vec<MultiPoly> {
        self.get(n);
        self.cache.read().expect("cache lock")[..=n].to_vec()
    }

    fn extend(&self, cache: &mut Vec<MultiPoly>, n: usize) {
        if let Some((u0, u1, p, q)) = self.kind.recurrence() {
            while cache.len() <= n {
                let next = match cache.len() {
                    0 => u0.clone(),
                    1 => u1.clone(),
                    m => &(&p * &cache[m - 1]) + &(&q * &cache[m - 2]),
                };
                cache.push(next);
            }
        } else if let Some(series) = self.kind.series() {
            // regrow geometrically; earlier coefficients are unchanged
            let order = n.max(2 * cache.len()).max(8);
            let s = egf_special(series, order, None);
            let have = cache.len();
            cache.extend(s.coeffs()[have..].iter().cloned());
        }
    }
}

fn poly_families() -> &'static [PolyFamily; 7] {
    static F: OnceLock<[PolyFamily; 7]> = OnceLock::new();
    F.get_or_init(|| PolyKind::ALL.map(PolyFamily::new))
}

pub fn poly_family(kind: PolyKind) -> &'static PolyFamily {
    &poly_families()[kind as usize]
}

/// `B_n(x)`, `E_n(x)` or `G_n(x)` as a polynomial in `x`.
///
/// Panics when `kind` is a bivariate family.
pub fn number_polynomial(kind: PolyKind, n: usize) -> MultiPoly {
    assert!(kind.series().is_some(), "{kind} is not a number polynomial");
    poly_family(kind).get(n)
}

/// One of the bivariate families in `y, t`.
///
/// Panics when `kind` is a number polynomial.
pub fn bivariate_sequence(kind: PolyKind, n: usize) -> MultiPoly {
    assert!(
        kind.recurrence().is_some(),
        "{kind} is not a bivariate family"
    );
    poly_family(kind).get(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Bindings;
    use std::collections::BTreeMap;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn bernoulli_values() {
        assert_eq!(bernoulli_number(0), q("1"));
        assert_eq!(bernoulli_number(1), q("-1/2"));
        assert_eq!(bernoulli_number(2), q("1/6"));
        assert_eq!(bernoulli_number(12), q("-691/2730"));
        for k in 1..30 {
            assert!(bernoulli_number(2 * k + 1).is_zero());
        }
    }

    #[test]
    fn euler_values() {
        assert_eq!(euler_number(0), q("1"));
        assert_eq!(euler_number(2), q("-1"));
        assert_eq!(euler_number(3), q("0"));
        assert_eq!(euler_number(4), q("5"));
        assert_eq!(euler_number(6), q("-61"));
        for k in 0..30 {
            assert!(euler_number(2 * k + 1).is_zero());
        }
    }

    #[test]
    fn genocchi_values() {
        assert_eq!(genocchi_number(0), q("0"));
        assert_eq!(genocchi_number(1), q("1"));
        assert_eq!(genocchi_number(2), q("-1"));
        assert_eq!(genocchi_number(4), q("1"));
        assert_eq!(genocchi_number(6), q("-3"));
        for k in 1..30 {
            assert!(genocchi_number(2 * k + 1).is_zero());
        }
    }

    #[test]
    fn number_polynomials() {
        let x = MultiPoly::var(Var::X);
        assert_eq!(
            number_polynomial(PolyKind::BernoulliPoly, 0),
            MultiPoly::one()
        );
        assert_eq!(
            number_polynomial(PolyKind::EulerPoly, 1),
            &x - &MultiPoly::constant(q("1/2"))
        );
        assert_eq!(
            number_polynomial(PolyKind::GenocchiPoly, 2),
            &x.scale(&q("2")) - &MultiPoly::one()
        );
        assert_eq!(
            number_polynomial(PolyKind::BernoulliPoly, 2).to_string(),
            "x^2 - x + 1/6"
        );
    }

    #[test]
    fn bernoulli_polynomial_at_zero() {
        let at0: BTreeMap<Var, Rational> = [(Var::X, Rational::zero())].into();
        for n in 0..=40 {
            let v = number_polynomial(PolyKind::BernoulliPoly, n)
                .eval(&at0)
                .unwrap();
            assert_eq!(v, bernoulli_number(n), "n={n}");
        }
    }

    #[test]
    fn number_polynomials_are_appell() {
        // B_n(x) = Σ C(n,k) B_k x^(n−k); same shape for E_n(x) with E_k(0)
        let x = MultiPoly::var(Var::X);
        for n in 0..=16usize {
            let expected = (0..=n).fold(MultiPoly::zero(), |acc, k| {
                &acc + &x
                    .pow((n - k) as u32)
                    .scale(&(binomial_q(n as u64, k as i64) * bernoulli_number(k)))
            });
            assert_eq!(number_polynomial(PolyKind::BernoulliPoly, n), expected);
        }
    }

    #[test]
    fn genocchi_polynomial_degree() {
        for n in 1..=12 {
            assert_eq!(
                number_polynomial(PolyKind::GenocchiPoly, n).total_degree(),
                Some(n as u32 - 1)
            );
        }
        assert!(number_polynomial(PolyKind::GenocchiPoly, 0).is_zero());
    }

    #[test]
    fn bivariate_examples() {
        assert_eq!(
            bivariate_sequence(PolyKind::BivLucas, 1),
            MultiPoly::var(Var::Y)
        );
        assert_eq!(
            bivariate_sequence(PolyKind::BivFibonacci, 3).to_string(),
            "y^2 + t"
        );
        assert_eq!(
            bivariate_sequence(PolyKind::BivLucas, 2).to_string(),
            "y^2 + 2*t"
        );
        let ones: Bindings = [(Var::Y, MultiPoly::one()), (Var::T, MultiPoly::one())].into();
        assert_eq!(
            bivariate_sequence(PolyKind::BivBalancing, 3).substitute(&ones),
            MultiPoly::int(35)
        );
        assert_eq!(
            bivariate_sequence(PolyKind::BivLucasBalancing, 2).substitute(&ones),
            MultiPoly::int(17)
        );
    }

    #[test]
    fn fibonacci_specialisations() {
        let t1: Bindings = [(Var::T, MultiPoly::one())].into();
        let y1: Bindings = [(Var::Y, MultiPoly::one())].into();
        let fibs: Vec<MultiPoly> = (0..7)
            .map(|n| {
                bivariate_sequence(PolyKind::BivFibonacci, n)
                    .substitute(&t1)
                    .substitute(&y1)
            })
            .collect();
        let expected: Vec<MultiPoly> = [0, 1, 1, 2, 3, 5, 8]
            .iter()
            .map(|&v| MultiPoly::int(v))
            .collect();
        assert_eq!(fibs, expected);
        // t = 1: Fibonacci polynomials F_n(y) = y F_(n−1)(y) + F_(n−2)(y)
        let f: Vec<MultiPoly> = (0..10)
            .map(|n| bivariate_sequence(PolyKind::BivFibonacci, n).substitute(&t1))
            .collect();
        for n in 2..10 {
            assert_eq!(f[n], &(&MultiPoly::var(Var::Y) * &f[n - 1]) + &f[n - 2]);
        }
    }

    #[test]
    fn concurrent_readers_see_consistent_values() {
        let fam = NumberFamily::new(NumberKind::Bernoulli);
        std::thread::scope(|s| {
            let handles: Vec<_> = (0..8)
                .map(|i| {
                    let fam = &fam;
                    s.spawn(move || (0..40 + i).map(|n| fam.get(n)).collect::<Vec<_>>())
                })
                .collect();
            for h in handles {
                let vals = h.join().unwrap();
                for (n, v) in vals.iter().enumerate() {
                    assert_eq!(v, &bernoulli_number(n));
                }
            }
        });
    }
}
