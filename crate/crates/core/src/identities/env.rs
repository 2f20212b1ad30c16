//! Precomputed tables shared by every theorem evaluation in one ring.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use crate::arith::{CommRing, MultiPoly, Rational, Var};
use crate::quadext::{make_root_pair, Family, QuadExtElem};
use crate::sequences::{number_polynomial, PolyKind};
use crate::symfun::{sym_phi_table, sym_s_table, LetterPair};

use super::{EvalError, Specialization};

/// Tables indexed `0..=capacity` for one choice of letters.
///
/// `d = x1 − x2`, `s = x1 + x2`, `A±_k = 2^k φ_k ± 2 s^k`,
/// `u = s + x·d`, `v = 2·x2 + x·d`.
#[derive(Debug)]
pub struct TheoremEnv<R> {
    pair: LetterPair<R>,
    capacity: usize,
    zero: R,
    d_pow: Vec<R>,
    half_d_pow: Vec<R>,
    s_pow: Vec<R>,
    phi: Vec<R>,
    sym_s: Vec<R>,
    a_plus: Vec<R>,
    a_minus: Vec<R>,
    u_pow: Vec<R>,
    v_pow: Vec<R>,
    sum3_pow: Vec<R>,
    diff3_pow: Vec<R>,
    bernoulli_poly: Vec<R>,
    euler_poly: Vec<R>,
    genocchi_poly: Vec<R>,
}

fn powers<R: CommRing>(base: &R, n: usize) -> Vec<R> {
    let mut out = vec![base.one_like()];
    for i in 1..=n {
        let next = out[i - 1].times(base);
        out.push(next);
    }
    out
}

impl<R: CommRing> TheoremEnv<R> {
    pub fn build(pair: LetterPair<R>, capacity: usize) -> Self {
        let one = pair.first.one_like();
        let x = one.embed(&MultiPoly::var(Var::X));
        let d = pair.difference();
        let s = pair.sum();
        let half = Rational::new(1, 2).expect("nonzero");
        let d_pow = powers(&d, capacity);
        let half_d_pow = powers(&d.scaled(&half), capacity);
        let s_pow = powers(&s, capacity);
        let phi = sym_phi_table(&pair, capacity);
        let sym_s = sym_s_table(&pair, capacity);
        let (a_plus, a_minus) = (0..=capacity)
            .map(|k| {
                let p = phi[k].scaled(&Rational::pow2(k as i64));
                let t = s_pow[k].scaled(&Rational::from_int(2));
                (p.plus(&t), p.minus(&t))
            })
            .unzip();
        let xd = x.times(&d);
        let u_pow = powers(&s.plus(&xd), capacity);
        let v_pow = powers(
            &pair.second.scaled(&Rational::from_int(2)).plus(&xd),
            capacity,
        );
        let two_s = s.scaled(&Rational::from_int(2));
        let sum3_pow = powers(&two_s.plus(&d), capacity);
        let diff3_pow = powers(&two_s.minus(&d), capacity);
        let embed_all = |kind| {
            (0..=capacity)
                .map(|j| one.embed(&number_polynomial(kind, j)))
                .collect::<Vec<_>>()
        };
        TheoremEnv {
            capacity,
            zero: one.zero_like(),
            d_pow,
            half_d_pow,
            s_pow,
            phi,
            sym_s,
            a_plus,
            a_minus,
            u_pow,
            v_pow,
            sum3_pow,
            diff3_pow,
            bernoulli_poly: embed_all(PolyKind::BernoulliPoly),
            euler_poly: embed_all(PolyKind::EulerPoly),
            genocchi_poly: embed_all(PolyKind::GenocchiPoly),
            pair,
        }
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn pair(&self) -> &LetterPair<R> {
        &self.pair
    }

    pub fn zero(&self) -> R {
        self.zero.clone()
    }

    pub fn embed(&self, p: &MultiPoly) -> R {
        self.zero.embed(p)
    }

    pub fn d_pow(&self, j: i64) -> &R {
        &self.d_pow[j as usize]
    }

    pub fn half_d_pow(&self, j: i64) -> &R {
        &self.half_d_pow[j as usize]
    }

    pub fn s_pow(&self, j: i64) -> &R {
        &self.s_pow[j as usize]
    }

    pub fn phi(&self, j: i64) -> &R {
        &self.phi[j as usize]
    }

    /// `S_j`, zero for `j < 0`.
    pub fn sym_s(&self, j: i64) -> R {
        if j < 0 {
            self.zero()
        } else {
            self.sym_s[j as usize].clone()
        }
    }

    pub fn a_plus(&self, k: i64) -> &R {
        &self.a_plus[k as usize]
    }

    pub fn a_minus(&self, k: i64) -> &R {
        &self.a_minus[k as usize]
    }

    pub fn u_pow(&self, j: i64) -> &R {
        &self.u_pow[j as usize]
    }

    pub fn v_pow(&self, j: i64) -> &R {
        &self.v_pow[j as usize]
    }

    /// `(3x1 + x2)^j = (2s + d)^j`
    pub fn sum3_pow(&self, j: i64) -> &R {
        &self.sum3_pow[j as usize]
    }

    /// `(x1 + 3x2)^j = (2s − d)^j`
    pub fn diff3_pow(&self, j: i64) -> &R {
        &self.diff3_pow[j as usize]
    }

    pub fn number_poly(&self, kind: PolyKind, j: i64) -> &R {
        let table = match kind {
            PolyKind::BernoulliPoly => &self.bernoulli_poly,
            PolyKind::EulerPoly => &self.euler_poly,
            PolyKind::GenocchiPoly => &self.genocchi_poly,
            other => panic!("{other} is not a number polynomial"),
        };
        &table[j as usize]
    }
}

/// Smallest capacity ever built; small checks share one table.
const MIN_CAPACITY: usize = 32;

type Cache<K, V> = Mutex<BTreeMap<K, Arc<V>>>;

fn cached<K: Ord + Copy, V>(
    cache: &Cache<K, V>,
    key: K,
    fits: impl Fn(&V) -> bool,
    build: impl FnOnce() -> Result<V, EvalError>,
) -> Result<Arc<V>, EvalError> {
    let mut map = cache.lock().expect("env cache lock");
    if let Some(env) = map.get(&key) {
        if fits(env) {
            return Ok(env.clone());
        }
    }
    let env = Arc::new(build()?);
    map.insert(key, env.clone());
    Ok(env)
}

pub(crate) fn indeterminate_env(capacity: usize) -> Arc<TheoremEnv<MultiPoly>> {
    static CACHE: Cache<(), TheoremEnv<MultiPoly>> = Mutex::new(BTreeMap::new());
    let cap = capacity.max(MIN_CAPACITY);
    cached(
        &CACHE,
        (),
        |e| e.capacity >= capacity,
        || Ok(TheoremEnv::build(LetterPair::indeterminates(), cap)),
    )
    .expect("indeterminate tables cannot fail")
}

/// Letters replaced by the family's Binet roots.
pub(crate) fn root_env(
    family: Family,
    spec: Specialization,
    capacity: usize,
) -> Result<Arc<TheoremEnv<QuadExtElem>>, EvalError> {
    static CACHE: Cache<(Family, Specialization), TheoremEnv<QuadExtElem>> =
        Mutex::new(BTreeMap::new());
    let cap = capacity.max(MIN_CAPACITY);
    cached(
        &CACHE,
        (family, spec),
        |e| e.capacity >= capacity,
        || {
            let roots = make_root_pair(family).specialize(&spec.bindings())?;
            Ok(TheoremEnv::build(
                LetterPair::new(roots.lambda1, roots.lambda2),
                cap,
            ))
        },
    )
}

pub(crate) fn cached_printed_env<V>(
    cache: &Cache<(Family, Specialization), V>,
    family: Family,
    spec: Specialization,
    fits: impl Fn(&V) -> bool,
    build: impl FnOnce() -> Result<V, EvalError>,
) -> Result<Arc<V>, EvalError> {
    cached(cache, (family, spec), fits, build)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfun::{sym_phi, sym_s};

    #[test]
    fn tables_match_direct_evaluation() {
        let env = indeterminate_env(10);
        let p = LetterPair::indeterminates();
        for j in 0..=10 {
            assert_eq!(env.sym_s(j), sym_s(&p, j));
            assert_eq!(env.phi(j), &sym_phi(&p, j as u32));
            assert_eq!(env.d_pow(j), &p.difference().pow(j as u32));
        }
        assert!(env.sym_s(-1).is_zero());
        let three =
            &MultiPoly::var(Var::X1).scale(&Rational::from_int(3)) + &MultiPoly::var(Var::X2);
        assert_eq!(env.sum3_pow(4), &three.pow(4));
    }

    #[test]
    fn root_tables_respect_the_family() {
        let env = root_env(Family::Fibonacci, Specialization::Symbolic, 8).unwrap();
        // λ1 + λ2 = y
        assert_eq!(env.s_pow(1), &env.embed(&MultiPoly::var(Var::Y)));
        let env = root_env(Family::Balancing, Specialization::YTOne, 8).unwrap();
        assert_eq!(env.s_pow(1), &env.embed(&MultiPoly::int(6)));
    }
}
