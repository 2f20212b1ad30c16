//! Corollaries transcribed as printed, evaluated with the Binet roots.
//!
//! Every fraction is cleared before evaluation. A printed `x` or `y` is
//! taken literally; in the balancing statements of the Genocchi, Bernoulli
//! and Euler corollaries the printed pair `(x, y)` is renamed to `(y, t)`,
//! matching the root substitution those statements are derived from.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use crate::arith::{Bindings, CommRing, MultiPoly, Rational, Var};
use crate::quadext::{make_root_pair, Family, QuadExtElem};
use crate::sequences::{
    bernoulli_number, bivariate_sequence, euler_number, genocchi_number, number_polynomial,
    PolyKind,
};

use super::env::cached_printed_env;
use super::theorems::TheoremId;
use super::{divided, eval_convolution_sum, ConvolutionShape, EvalError, Sides, Specialization};

type Qe = QuadExtElem;

/// Family-specific values in the extension ring.
#[derive(Debug)]
pub struct CorollaryEnv {
    family: Family,
    capacity: usize,
    zero: Qe,
    delta: Qe,
    disc: Qe,
    y: Qe,
    x: Qe,
    /// `F_n` or `B*_n`
    fib: Vec<Qe>,
    /// `L_n` or `C_n`
    lucas: Vec<Qe>,
    bindings: Bindings,
}

impl CorollaryEnv {
    pub fn build(family: Family, spec: Specialization, capacity: usize) -> Result<Self, EvalError> {
        let bindings = spec.bindings();
        let roots = make_root_pair(family).specialize(&bindings)?;
        let disc = roots.disc().clone();
        let embed = |p: &MultiPoly| Qe::from_poly(p.substitute(&bindings), &disc);
        let (fk, lk) = match family {
            Family::Fibonacci => (PolyKind::BivFibonacci, PolyKind::BivLucas),
            Family::Balancing => (PolyKind::BivBalancing, PolyKind::BivLucasBalancing),
        };
        let table = |kind| {
            (0..=capacity)
                .map(|i| embed(&bivariate_sequence(kind, i)))
                .collect::<Vec<_>>()
        };
        Ok(CorollaryEnv {
            family,
            capacity,
            zero: Qe::from_poly(MultiPoly::zero(), &disc),
            delta: Qe::delta(&disc),
            disc: Qe::from_poly(disc.poly().clone(), &disc),
            y: embed(&MultiPoly::var(Var::Y)),
            x: embed(&MultiPoly::var(Var::X)),
            fib: table(fk),
            lucas: table(lk),
            bindings,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    fn embed(&self, p: &MultiPoly) -> Qe {
        self.zero.embed(&p.substitute(&self.bindings))
    }

    #[cfg(test)]
    fn int(&self, c: i64) -> Qe {
        self.zero.constant_like(&Rational::from_int(c))
    }

    fn f(&self, i: i64) -> Qe {
        self.fib[i as usize].clone()
    }

    fn l(&self, i: i64) -> Qe {
        self.lucas[i as usize].clone()
    }

    fn d(&self) -> &Qe {
        &self.disc
    }

    fn delta_pow(&self, scale: i64, j: i64) -> Qe {
        self.delta
            .scaled(&Rational::from_int(scale))
            .power(j as u32)
    }

    fn half_delta_pow(&self, j: i64) -> Qe {
        self.delta
            .scaled(&Rational::new(1, 2).expect("nonzero"))
            .power(j as u32)
    }

    fn y_pow(&self, scale: i64, j: i64) -> Qe {
        self.y.scaled(&Rational::from_int(scale)).power(j as u32)
    }

    fn x_pow(&self, j: i64) -> Qe {
        self.x.power(j as u32)
    }

    fn npoly(&self, kind: PolyKind, j: i64) -> Qe {
        self.embed(&number_polynomial(kind, j as usize))
    }

    /// `2^(k+shift)·L_k + c·(b·y)^k` (or with `x` in place of `y`).
    fn mix(&self, k: i64, shift: i64, c: i64, base: &Qe) -> Qe {
        self.l(k)
            .scaled(&Rational::pow2(k + shift))
            .plus(&base.power(k as u32).scaled(&Rational::from_int(c)))
    }

    fn scaled_y(&self, b: i64) -> Qe {
        self.y.scaled(&Rational::from_int(b))
    }

    fn guarded(&self, c: Rational, f: impl FnOnce() -> Qe) -> Qe {
        if c.is_zero() {
            self.zero.clone()
        } else {
            f().scaled(&c)
        }
    }

    fn conv(
        &self,
        n: i64,
        binomial: bool,
        parity: bool,
        weight: impl Fn(i64, i64) -> Result<Rational, EvalError>,
        a: impl Fn(i64) -> Qe,
        b: impl Fn(i64) -> Qe,
    ) -> Result<Qe, EvalError> {
        let shape = ConvolutionShape {
            binomial,
            zero: self.zero.clone(),
            weight,
            term_a: a,
            term_b: b,
        };
        eval_convolution_sum(&shape, n, parity)
    }
}

pub(crate) fn printed_env(
    family: Family,
    spec: Specialization,
    capacity: usize,
) -> Result<Arc<CorollaryEnv>, EvalError> {
    static CACHE: Mutex<BTreeMap<(Family, Specialization), Arc<CorollaryEnv>>> =
        Mutex::new(BTreeMap::new());
    cached_printed_env(
        &CACHE,
        family,
        spec,
        |e| e.capacity >= capacity,
        || CorollaryEnv::build(family, spec, capacity.max(32)),
    )
}

type EvalFn = fn(&CorollaryEnv, i64) -> Result<Sides<Qe>, EvalError>;

/// One corollary as typeset, plus the theorem it specializes.
#[derive(Clone)]
pub struct PrintedCorollary {
    pub id: &'static str,
    pub family: Family,
    pub theorem: TheoremId,
    pub parity_restriction: bool,
    pub anchor: &'static str,
    pub description: &'static str,
    eval: EvalFn,
}

impl std::fmt::Debug for PrintedCorollary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PrintedCorollary")
            .field("id", &self.id)
            .field("family", &self.family)
            .field("theorem", &self.theorem)
            .finish()
    }
}

impl PrintedCorollary {
    pub fn sides(&self, env: &CorollaryEnv, n: i64) -> Result<Sides<Qe>, EvalError> {
        assert_eq!(
            env.family, self.family,
            "{} evaluated in the wrong family",
            self.id
        );
        assert!(
            n >= 0 && (n + 2) as usize <= env.capacity,
            "index {n} outside table capacity {}",
            env.capacity
        );
        (self.eval)(env, n)
    }
}

fn one(_: i64, _: i64) -> Result<Rational, EvalError> {
    Ok(Rational::one())
}

fn q(n: i64) -> Rational {
    Rational::from_int(n)
}

fn p2(e: i64) -> Rational {
    Rational::pow2(e)
}

fn bern(j: i64) -> Rational {
    bernoulli_number(j as usize)
}

fn geno(j: i64) -> Rational {
    genocchi_number(j as usize)
}

fn eul(j: i64) -> Rational {
    euler_number(j as usize)
}

fn div_bern(j: i64) -> Result<Rational, EvalError> {
    divided(bernoulli_number, j, "B")
}

fn div_gen(j: i64) -> Result<Rational, EvalError> {
    divided(genocchi_number, j, "G")
}

fn sides(lhs: Qe, rhs: Qe) -> Result<Sides<Qe>, EvalError> {
    Ok(Sides::new(lhs, rhs))
}

#[allow(clippy::too_many_arguments)]
fn entry(
    id: &'static str,
    family: Family,
    theorem: TheoremId,
    parity_restriction: bool,
    anchor: &'static str,
    description: &'static str,
    eval: EvalFn,
) -> PrintedCorollary {
    PrintedCorollary {
        id,
        family,
        theorem,
        parity_restriction,
        anchor,
        description,
        eval,
    }
}

/// All printed corollaries in catalog order.
pub fn printed_corollaries() -> Vec<PrintedCorollary> {
    use Family::{Balancing as Bal, Fibonacci as Fib};
    use TheoremId as T;
    vec![
        // binomial and plain convolutions of the second-order families
        entry("C2.1.1", Fib, T::T21a, false,
            r"\frac{1}{y^{2}+4t}\left(2^{n}L_{n}(y,t)-2y^{n}\right)",
            "(y^2+4t) * sum C(n,k) F_{n-k} F_k = 2^n L_n - 2 y^n",
            |e, n| {
                let s = e.conv(n, true, false, one, |k| e.f(k), |j| e.f(j))?;
                sides(e.d().times(&s), e.l(n).scaled(&p2(n)).minus(&e.y_pow(1, n).scaled(&q(2))))
            }),
        entry("C2.1.2", Fib, T::T21b, false,
            r"2^{n}F_{n}(y,t)+2y^{n}",
            "sum C(n,k) L_{n-k} L_k = 2^n F_n + 2 y^n",
            |e, n| {
                let s = e.conv(n, true, false, one, |k| e.l(k), |j| e.l(j))?;
                sides(s, e.f(n).scaled(&p2(n)).plus(&e.y_pow(1, n).scaled(&q(2))))
            }),
        entry("C2.1.3", Fib, T::T21c, false,
            r"F_{n-k}(y,t)L_{k}(y,t)=2^{n}F_{n}(y,t)",
            "sum C(n,k) F_{n-k} L_k = 2^n F_n",
            |e, n| {
                let s = e.conv(n, true, false, one, |k| e.l(k), |j| e.f(j))?;
                sides(s, e.f(n).scaled(&p2(n)))
            }),
        entry("C2.2.1", Fib, T::T22b, false,
            r"\frac{1}{y^{2}+4t}\left((n+1)L_{n}(y,t)-2F_{n+1}(y,t)\right)",
            "(y^2+4t) * sum F_{n-k} F_k = (n+1) L_n - 2 F_{n+1}",
            |e, n| {
                let s = e.conv(n, false, false, one, |k| e.f(k), |j| e.f(j))?;
                sides(e.d().times(&s), e.l(n).scaled(&q(n + 1)).minus(&e.f(n + 1).scaled(&q(2))))
            }),
        entry("C2.2.2", Fib, T::T22a, false,
            r"(n+1)L_{n}(y,t)+2F_{n+1}(y,t)",
            "sum L_{n-k} L_k = (n+1) L_n + 2 F_{n+1}",
            |e, n| {
                let s = e.conv(n, false, false, one, |k| e.l(k), |j| e.l(j))?;
                sides(s, e.l(n).scaled(&q(n + 1)).plus(&e.f(n + 1).scaled(&q(2))))
            }),
        entry("C2.2.3", Fib, T::T22c, false,
            r"F_{n-k}(y,t)L_{k}(y,t)=(n+1)F_{n}(y,t)",
            "sum F_{n-k} L_k = (n+1) F_n",
            |e, n| {
                let s = e.conv(n, false, false, one, |k| e.l(k), |j| e.f(j))?;
                sides(s, e.f(n).scaled(&q(n + 1)))
            }),
        entry("C2.3.1", Bal, T::T21a, false,
            r"\frac{1}{2(9y^{2}-t)}\left(2^{n}C_{n}(y,t)-(6y)^{n}\right)",
            "2(9y^2-t) * sum C(n,k) B*_{n-k} B*_k = 2^n C_n - (6y)^n",
            |e, n| {
                let s = e.conv(n, true, false, one, |k| e.f(k), |j| e.f(j))?;
                sides(e.d().times(&s).scaled(&q(2)), e.l(n).scaled(&p2(n)).minus(&e.y_pow(6, n)))
            }),
        entry("C2.3.2", Bal, T::T21b, false,
            r"2C_{n-k}(y,t)C_{k}(y,t)=2^{n}C_{n}(y,t)+(6y)^{n}",
            "sum C(n,k) 2 C_{n-k} C_k = 2^n C_n + (6y)^n",
            |e, n| {
                let s = e.conv(n, true, false, one, |k| e.l(k), |j| e.l(j))?;
                sides(s.scaled(&q(2)), e.l(n).scaled(&p2(n)).plus(&e.y_pow(6, n)))
            }),
        entry("C2.3.3", Bal, T::T21c, false,
            r"B^{*}_{n-k}(y,t)C_{k}(y,t)=2^{n-1}B^{*}_{n}(y,t)",
            "sum C(n,k) B*_{n-k} C_k = 2^{n-1} B*_n",
            |e, n| {
                let s = e.conv(n, true, false, one, |k| e.l(k), |j| e.f(j))?;
                sides(s, e.f(n).scaled(&p2(n - 1)))
            }),
        entry("C2.4.1", Bal, T::T22b, false,
            r"\frac{1}{2(9y^{2}-t)}\left((n+1)C_{n}(y,t)-B^{*}_{n+1}(y,t)\right)",
            "2(9y^2-t) * sum B*_{n-k} B*_k = (n+1) C_n - B*_{n+1}",
            |e, n| {
                let s = e.conv(n, false, false, one, |k| e.f(k), |j| e.f(j))?;
                sides(e.d().times(&s).scaled(&q(2)), e.l(n).scaled(&q(n + 1)).minus(&e.f(n + 1)))
            }),
        entry("C2.4.2", Bal, T::T22a, false,
            r"(n+1)C_{n}(y,t)+B^{*}_{n+1}(x,y)",
            "sum 2 C_{n-k} C_k = (n+1) C_n + B*_{n+1}(x,y)",
            |e, n| {
                let s = e.conv(n, false, false, one, |k| e.l(k), |j| e.l(j))?;
                // arguments exactly as printed: first x, second y
                let renamed: Bindings = [
                    (Var::Y, MultiPoly::var(Var::X)),
                    (Var::T, MultiPoly::var(Var::Y)),
                ]
                .into();
                let b = e.embed(&bivariate_sequence(PolyKind::BivBalancing, (n + 1) as usize).substitute(&renamed));
                sides(s.scaled(&q(2)), e.l(n).scaled(&q(n + 1)).plus(&b))
            }),
        entry("C2.4.3", Bal, T::T22c, false,
            r"2B^{*}_{n-k}(y,t)C_{k}(y,t)=(n+1)B^{*}_{n}(y,t)",
            "sum 2 B*_{n-k} C_k = (n+1) B*_n",
            |e, n| {
                let s = e.conv(n, false, false, one, |k| e.l(k), |j| e.f(j))?;
                sides(s.scaled(&q(2)), e.f(n).scaled(&q(n + 1)))
            }),
        // Genocchi, Bernoulli and Euler numbers, Fibonacci roots
        entry("C3.1", Fib, T::T31, true,
            r"\left(2^{k}L_{k}(y,t)+2x^{k}\right)G_{n-k}",
            "sum_{k=n mod 2} C(n,k) delta^{n-k} (2^k L_k + 2 x^k) G_{n-k} = -n 2^{n-1} (y^2+4t) F_{n-1}",
            |e, n| {
                let s = e.conv(n, true, true, |n, k| Ok(geno(n - k)), |k| e.mix(k, 0, 2, &e.x), |j| e.delta_pow(1, j))?;
                sides(s, e.guarded(-q(n) * p2(n - 1), || e.d().times(&e.f(n - 1))))
            }),
        entry("C3.2", Fib, T::T32, false,
            r"2n(1-n)(y^{2}+4t)x^{n-2}",
            "sum C(n,k) delta^{n-k} (n-k-1)(2^k L_k + 2 x^k) G_{n-k} = 2n(1-n)(y^2+4t) x^{n-2}",
            |e, n| {
                let s = e.conv(n, true, false, |n, k| Ok(q(n - k - 1) * geno(n - k)), |k| e.mix(k, 0, 2, &e.x), |j| e.delta_pow(1, j))?;
                sides(s, e.guarded(q(2 * n * (1 - n)), || e.d().times(&e.x_pow(n - 2))))
            }),
        entry("C3.3", Fib, T::T33, true,
            r"\frac{G_{m-k-2}}{n-k-2}",
            "sum_{k=m mod 2} C(m,k) delta^{m-k} G_{m-k-2}/(m-k-2) (2^k L_k + 2 y^k) = -2 (y^2+4t) x^m",
            |e, m| {
                let s = e.conv(m, true, true, |m, k| div_gen(m - k - 2), |k| e.mix(k, 0, 2, &e.y), |j| e.delta_pow(1, j))?;
                sides(s, e.d().times(&e.x_pow(m)).scaled(&q(-2)))
            }),
        entry("C3.4.1", Fib, T::T34a, false,
            r"n2^{n-2}(y^{2}+4t)L_{n-1}(y,t)",
            "sum C(n,k) delta^{n-k} (2^k L_k - 2 y^k) B_{n-k} = n 2^{n-2} (y^2+4t) L_{n-1}",
            |e, n| {
                let s = e.conv(n, true, false, |n, k| Ok(bern(n - k)), |k| e.mix(k, 0, -2, &e.y), |j| e.delta_pow(1, j))?;
                sides(s, e.guarded(q(n) * p2(n - 2), || e.d().times(&e.l(n - 1))))
            }),
        entry("C3.4.2", Fib, T::T34b, false,
            r"-n2^{n-2}(y^{2}+4t)L_{n-1}(y,t)",
            "sum C(n,k) delta^{n-k} (1-2^{n-k})(2^k L_k + 2 y^k) B_{n-k} = -n 2^{n-2} (y^2+4t) L_{n-1}",
            |e, n| {
                let s = e.conv(n, true, false, |n, k| Ok((Rational::one() - p2(n - k)) * bern(n - k)), |k| e.mix(k, 0, 2, &e.y), |j| e.delta_pow(1, j))?;
                sides(s, e.guarded(-q(n) * p2(n - 2), || e.d().times(&e.l(n - 1))))
            }),
        entry("C3.5.1", Fib, T::T35a, true,
            r"n(1-n)(y^{2}+4t)^{2}x^{n-2}",
            "sum_{k=n mod 2} C(n,k) delta^{n-k} (n-k-1)(2^k L_k - 2 y^k) B_{n-k} = n(1-n)(y^2+4t)^2 x^{n-2}",
            |e, n| {
                let s = e.conv(n, true, true, |n, k| Ok(q(n - k - 1) * bern(n - k)), |k| e.mix(k, 0, -2, &e.y), |j| e.delta_pow(1, j))?;
                sides(s, e.guarded(q(n * (1 - n)), || e.d().power(2).times(&e.x_pow(n - 2))))
            }),
        entry("C3.5.2", Fib, T::T35b, true,
            r"-n(1-n)(y^{2}+4t)^{2}y^{n-2}",
            "sum_{k=n mod 2} C(n,k) delta^{n-k} (2^{n-k}-1)(n-k-1)(2^k L_k + 2 y^k) B_{n-k} = -n(1-n)(y^2+4t)^2 y^{n-2}",
            |e, n| {
                let s = e.conv(n, true, true, |n, k| Ok((p2(n - k) - Rational::one()) * q(n - k - 1) * bern(n - k)), |k| e.mix(k, 0, 2, &e.y), |j| e.delta_pow(1, j))?;
                sides(s, e.guarded(-q(n * (1 - n)), || e.d().power(2).times(&e.y_pow(1, n - 2))))
            }),
        entry("C3.6.1", Fib, T::T36a, true,
            r"\frac{2^{m+2}(L_{m+2}(y,t)-2x^{m+2})}{(y^{2}+4t)(m+2)(m+1)}-y^{m}",
            "(y^2+4t) * sum_{k=m mod 2} C(m,k) delta^{m-k} B_{m-k-2}/(m-k-2)(2^k L_k - 2 y^k) = 2^{m+2}(L_{m+2} - 2 x^{m+2})/((m+2)(m+1)) - (y^2+4t) y^m",
            |e, m| {
                let s = e.conv(m, true, true, |m, k| div_bern(m - k - 2), |k| e.mix(k, 0, -2, &e.y), |j| e.delta_pow(1, j))?;
                let c = p2(m + 2).checked_div(&q((m + 2) * (m + 1)))?;
                let first = e.l(m + 2).minus(&e.x_pow(m + 2).scaled(&q(2))).scaled(&c);
                sides(e.d().times(&s), first.minus(&e.d().times(&e.y_pow(1, m))))
            }),
        entry("C3.6.2", Fib, T::T36b, true,
            r"(2^{n-k}-1)\sqrt{y^{2}+4t}^{n-k}\frac{B_{n-k-2}}{n-k-2}",
            "sum_{k=m mod 2} C(m,k) (2^{m-k}-1) delta^{m-k} B_{m-k-2}/(m-k-2)(2^k L_k + 2 y^k) = y^m",
            |e, m| {
                let s = e.conv(m, true, true, |m, k| Ok((p2(m - k) - Rational::one()) * div_bern(m - k - 2)?), |k| e.mix(k, 0, 2, &e.y), |j| e.delta_pow(1, j))?;
                sides(s, e.y_pow(1, m))
            }),
        entry("C3.7", Fib, T::T37, true,
            r"2^{1-n}\left((2y+\sqrt{y^{2}+4t})^{n}+(2y-\sqrt{y^{2}+4t})^{n}\right)",
            "sum_{k=n mod 2} C(n,k) (delta/2)^{n-k} (2^k L_k + 2 y^k) E_{n-k} = 2^{1-n}((2y+delta)^n + (2y-delta)^n)",
            |e, n| {
                let s = e.conv(n, true, true, |n, k| Ok(eul(n - k)), |k| e.mix(k, 0, 2, &e.y), |j| e.half_delta_pow(j))?;
                let two_y = e.scaled_y(2);
                let rhs = two_y.plus(&e.delta).power(n as u32).plus(&two_y.minus(&e.delta).power(n as u32));
                sides(s, rhs.scaled(&p2(1 - n)))
            }),
        // Genocchi, Bernoulli and Euler numbers, balancing roots
        entry("C3.8", Bal, T::T31, true,
            r"-n2^{n+1}(9x^{2}-y)^{2}B^{*}_{n-1}(x,y)",
            "sum_{k=n mod 2} C(n,k) (2 delta)^{n-k} (2^{k+1} C_k + 2 (6y)^k) G_{n-k} = -n 2^{n+1} (9y^2-t)^2 B*_{n-1}",
            |e, n| {
                let six_y = e.scaled_y(6);
                let s = e.conv(n, true, true, |n, k| Ok(geno(n - k)), |k| e.mix(k, 1, 2, &six_y), |j| e.delta_pow(2, j))?;
                sides(s, e.guarded(-q(n) * p2(n + 1), || e.d().power(2).times(&e.f(n - 1))))
            }),
        entry("C3.9", Bal, T::T32, false,
            r"8n(1-n)(9x^{2}-y)(6x)^{n-2}",
            "sum C(n,k) (2 delta)^{n-k} (n-k-1)(2^{k+1} C_k + 2 (6y)^k) G_{n-k} = 8n(1-n)(9y^2-t)(6y)^{n-2}",
            |e, n| {
                let six_y = e.scaled_y(6);
                let s = e.conv(n, true, false, |n, k| Ok(q(n - k - 1) * geno(n - k)), |k| e.mix(k, 1, 2, &six_y), |j| e.delta_pow(2, j))?;
                sides(s, e.guarded(q(8 * n * (1 - n)), || e.d().times(&e.y_pow(6, n - 2))))
            }),
        entry("C3.10", Bal, T::T33, true,
            r"\frac{G_{n-k-2}}{n-k-2}\left(2^{k+1}C_{k}(x,y)+2(6x)^{k}\right)=-8(9x^{2}-y)(6x)^{n}",
            "sum_{k=n mod 2} C(n,k) (2 delta)^{n-k} G_{n-k-2}/(n-k-2)(2^{k+1} C_k + 2 (6y)^k) = -8 (9y^2-t)(6y)^n",
            |e, n| {
                let six_y = e.scaled_y(6);
                let s = e.conv(n, true, true, |n, k| div_gen(n - k - 2), |k| e.mix(k, 1, 2, &six_y), |j| e.delta_pow(2, j))?;
                sides(s, e.d().times(&e.y_pow(6, n)).scaled(&q(-8)))
            }),
        entry("C3.11.1", Bal, T::T34a, false,
            r"n2^{n-1}(9x^{2}-y)B^{*}_{n-1}(x,y)",
            "sum C(n,k) (2 delta)^{n-k} (2^k C_k - (6y)^k) B_{n-k} = n 2^{n-1} (9y^2-t) B*_{n-1}",
            |e, n| {
                let six_y = e.scaled_y(6);
                let s = e.conv(n, true, false, |n, k| Ok(bern(n - k)), |k| e.mix(k, 0, -1, &six_y), |j| e.delta_pow(2, j))?;
                sides(s, e.guarded(q(n) * p2(n - 1), || e.d().times(&e.f(n - 1))))
            }),
        entry("C3.11.2", Bal, T::T34b, false,
            r"(1-2^{n-k})\sqrt{9x^{2}-y}^{n-k}",
            "sum C(n,k) (1-2^{n-k}) delta^{n-k} (2^k C_k + (6y)^k) B_{n-k} = -n 2^{n-1} (9y^2-t) B*_{n-1}",
            |e, n| {
                let six_y = e.scaled_y(6);
                let s = e.conv(n, true, false, |n, k| Ok((Rational::one() - p2(n - k)) * bern(n - k)), |k| e.mix(k, 0, 1, &six_y), |j| e.delta_pow(1, j))?;
                sides(s, e.guarded(-q(n) * p2(n - 1), || e.d().times(&e.f(n - 1))))
            }),
        entry("C3.12.1", Bal, T::T35a, true,
            r"2n(1-n)(9x^{2}-y)(6x)^{n-2}",
            "sum_{k=n mod 2} C(n,k) (2 delta)^{n-k} (n-k-1)(2^k C_k - (6y)^k) B_{n-k} = 2n(1-n)(9y^2-t)(6y)^{n-2}",
            |e, n| {
                let six_y = e.scaled_y(6);
                let s = e.conv(n, true, true, |n, k| Ok(q(n - k - 1) * bern(n - k)), |k| e.mix(k, 0, -1, &six_y), |j| e.delta_pow(2, j))?;
                sides(s, e.guarded(q(2 * n * (1 - n)), || e.d().times(&e.y_pow(6, n - 2))))
            }),
        entry("C3.12.2", Bal, T::T35b, true,
            r"-2n(1-n)(9x^{2}-y)(6x)^{n-2}",
            "sum_{k=n mod 2} C(n,k) (1-2^{n-k})(2 delta)^{n-k} (n-k-1)(2^k C_k + (6y)^k) B_{n-k} = -2n(1-n)(9y^2-t)(6y)^{n-2}",
            |e, n| {
                let six_y = e.scaled_y(6);
                let s = e.conv(n, true, true, |n, k| Ok((Rational::one() - p2(n - k)) * q(n - k - 1) * bern(n - k)), |k| e.mix(k, 0, 1, &six_y), |j| e.delta_pow(2, j))?;
                sides(s, e.guarded(-q(2 * n * (1 - n)), || e.d().times(&e.y_pow(6, n - 2))))
            }),
        entry("C3.13.1", Bal, T::T36a, true,
            r"\frac{2^{m+2}(C_{m+2}(x,y)-(6x)^{m+2})}{4(9x^{2}-y)(m+2)(m+1)}-(6x)^{n}",
            "4(9y^2-t) * sum_{k=m mod 2} C(m,k) (2 delta)^{m-k} B_{m-k-2}/(m-k-2)(2^k C_k - (6y)^k) = 2^{m+2}(C_{m+2} - (6y)^{m+2})/((m+2)(m+1)) - 4(9y^2-t)(6y)^m",
            |e, m| {
                let six_y = e.scaled_y(6);
                let s = e.conv(m, true, true, |m, k| div_bern(m - k - 2), |k| e.mix(k, 0, -1, &six_y), |j| e.delta_pow(2, j))?;
                let c = p2(m + 2).checked_div(&q((m + 2) * (m + 1)))?;
                let first = e.l(m + 2).minus(&e.y_pow(6, m + 2)).scaled(&c);
                let four_d = e.d().scaled(&q(4));
                sides(four_d.times(&s), first.minus(&four_d.times(&e.y_pow(6, m))))
            }),
        entry("C3.13.2", Bal, T::T36b, true,
            r"(2^{m-k+2}-1)(2\sqrt{9x^{2}-y})^{m-k}\frac{B_{m-k-2}}{m-k-2}",
            "sum_{k=m mod 2} C(m,k) (2^{m-k+2}-1)(2 delta)^{m-k} B_{m-k-2}/(m-k-2)(2^{k+1} C_k + 2 (6y)^k) = -2 (6y)^m",
            |e, m| {
                let six_y = e.scaled_y(6);
                let s = e.conv(m, true, true, |m, k| Ok((p2(m - k + 2) - Rational::one()) * div_bern(m - k - 2)?), |k| e.mix(k, 1, 2, &six_y), |j| e.delta_pow(2, j))?;
                sides(s, e.y_pow(6, m).scaled(&q(-2)))
            }),
        entry("C3.14", Bal, T::T37, true,
            r"(6x+\sqrt{9x^{2}-y})^{n}+(6x-\sqrt{9x^{2}-y})^{n}",
            "sum_{k=n mod 2} C(n,k) delta^{n-k} (2^k C_k + (6y)^k) E_{n-k} = (6y+delta)^n + (6y-delta)^n",
            |e, n| {
                let six_y = e.scaled_y(6);
                let s = e.conv(n, true, true, |n, k| Ok(eul(n - k)), |k| e.mix(k, 0, 1, &six_y), |j| e.delta_pow(1, j))?;
                let rhs = six_y.plus(&e.delta).power(n as u32).plus(&six_y.minus(&e.delta).power(n as u32));
                sides(s, rhs)
            }),
        // Genocchi, Bernoulli and Euler polynomials
        entry("C4.1", Fib, T::T41, false,
            r"2n\left((y+x\sqrt{y^{2}+4t})^{n-1}+(y+(x-1)\sqrt{y^{2}+4t})^{n-1}\right)",
            "sum C(n,k) delta^{n-k} (2^k L_k + 2 y^k) G_{n-k}(x) = 2n((y + x delta)^{n-1} + (y + (x-1) delta)^{n-1})",
            |e, n| {
                let s = e.conv(n, true, false, one, |k| e.mix(k, 0, 2, &e.y), |j| e.delta_pow(1, j).times(&e.npoly(PolyKind::GenocchiPoly, j)))?;
                let rhs = e.guarded(q(2 * n), || {
                    let xd = e.x.times(&e.delta);
                    e.y.plus(&xd).power((n - 1) as u32).plus(&e.y.plus(&xd).minus(&e.delta).power((n - 1) as u32))
                });
                sides(s, rhs)
            }),
        entry("C4.2", Fib, T::T42, false,
            r"n(y+\sqrt{y^{2}+4t}x)^{n-1}",
            "sum C(n,k) delta^{n-k} (2^k L_k - 2 y^k) B_{n-k}(x) = delta n ((y + delta x)^{n-1} - (y + (x-1) delta)^{n-1})",
            |e, n| {
                let s = e.conv(n, true, false, one, |k| e.mix(k, 0, -2, &e.y), |j| e.delta_pow(1, j).times(&e.npoly(PolyKind::BernoulliPoly, j)))?;
                let rhs = e.guarded(q(n), || {
                    let xd = e.x.times(&e.delta);
                    let diff = e.y.plus(&xd).power((n - 1) as u32).minus(&e.y.plus(&xd).minus(&e.delta).power((n - 1) as u32));
                    e.delta.times(&diff)
                });
                sides(s, rhs)
            }),
        entry("C4.3", Fib, T::T43, false,
            r"2(y+\sqrt{y^{2}+4t}x)^{n}",
            "sum C(n,k) delta^{n-k} (2^k L_k + 2 y^k) E_{n-k}(x) = 2(y + delta x)^n + 2(y + (x-1) delta)^n",
            |e, n| {
                let s = e.conv(n, true, false, one, |k| e.mix(k, 0, 2, &e.y), |j| e.delta_pow(1, j).times(&e.npoly(PolyKind::EulerPoly, j)))?;
                let xd = e.x.times(&e.delta);
                let rhs = e.y.plus(&xd).power(n as u32).plus(&e.y.plus(&xd).minus(&e.delta).power(n as u32));
                sides(s, rhs.scaled(&q(2)))
            }),
        entry("C4.4", Bal, T::T41, false,
            r"n2^{n+1}\sqrt{9y^{2}-t}\left((3y+x\sqrt{9y^{2}-t})^{n-1}",
            "sum C(n,k) (2 delta)^{n-k} (2^{k+1} C_k + 2 (6y)^k) G_{n-k}(x) = n 2^{n+1} delta ((3y + x delta)^{n-1} + (3y + (x-1) delta)^{n-1})",
            |e, n| {
                let six_y = e.scaled_y(6);
                let s = e.conv(n, true, false, one, |k| e.mix(k, 1, 2, &six_y), |j| e.delta_pow(2, j).times(&e.npoly(PolyKind::GenocchiPoly, j)))?;
                let rhs = e.guarded(q(n) * p2(n + 1), || {
                    let base = e.scaled_y(3).plus(&e.x.times(&e.delta));
                    let sum = base.power((n - 1) as u32).plus(&base.minus(&e.delta).power((n - 1) as u32));
                    e.delta.times(&sum)
                });
                sides(s, rhs)
            }),
        entry("C4.5", Bal, T::T42, false,
            r"n(6y+2x\sqrt{9y^{2}-t})^{n-1}",
            "sum C(n,k) (2 delta)^{n-k} (2^{k+1} C_k - (6y)^k) B_{n-k}(x) = 2 delta n ((6y + 2x delta)^{n-1} - (6y + (2x-2) delta)^{n-1})",
            |e, n| {
                let six_y = e.scaled_y(6);
                let s = e.conv(n, true, false, one, |k| e.mix(k, 1, -1, &six_y), |j| e.delta_pow(2, j).times(&e.npoly(PolyKind::BernoulliPoly, j)))?;
                let rhs = e.guarded(q(n), || {
                    let two_xd = e.x.times(&e.delta).scaled(&q(2));
                    let a = six_y.plus(&two_xd);
                    let b = a.minus(&e.delta.scaled(&q(2)));
                    let diff = a.power((n - 1) as u32).minus(&b.power((n - 1) as u32));
                    e.delta.scaled(&q(2)).times(&diff)
                });
                sides(s, rhs)
            }),
        entry("C4.6", Bal, T::T43, false,
            r"2(6y+(x-2)\sqrt{9y^{2}-t})^{n}",
            "sum C(n,k) (2 delta)^{n-k} (2^{k+1} C_k + 2 (6y)^k) E_{n-k}(x) = 2(6y + 2 delta x)^n + 2(6y + (x-2) delta)^n",
            |e, n| {
                let six_y = e.scaled_y(6);
                let s = e.conv(n, true, false, one, |k| e.mix(k, 1, 2, &six_y), |j| e.delta_pow(2, j).times(&e.npoly(PolyKind::EulerPoly, j)))?;
                let xd = e.x.times(&e.delta);
                let a = six_y.plus(&xd.scaled(&q(2)));
                let b = six_y.plus(&xd).minus(&e.delta.scaled(&q(2)));
                sides(s, a.power(n as u32).plus(&b.power(n as u32)).scaled(&q(2)))
            }),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn find(id: &str) -> PrintedCorollary {
        printed_corollaries()
            .into_iter()
            .find(|c| c.id == id)
            .unwrap()
    }

    fn holds(id: &str, spec: Specialization, n: i64) -> bool {
        let c = find(id);
        let env = printed_env(c.family, spec, 24).unwrap();
        c.sides(&env, n).unwrap().holds()
    }

    #[test]
    fn catalog_shape() {
        let all = printed_corollaries();
        assert_eq!(all.len(), 38);
        let mut ids: Vec<_> = all.iter().map(|c| c.id).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), 38);
        assert_eq!(all.iter().filter(|c| c.id.starts_with("C2.")).count(), 12);
    }

    #[test]
    fn fibonacci_numbers_anchor() {
        // y = t = 1, n = 3: both sides of the first line equal 6 before clearing
        let c = find("C2.1.1");
        let env = printed_env(Family::Fibonacci, Specialization::YTOne, 24).unwrap();
        let s = c.sides(&env, 3).unwrap();
        assert_eq!(s.lhs, env.int(30));
        assert_eq!(s.rhs, env.int(30));
        assert_eq!(env.d(), &env.int(5));
    }

    #[test]
    fn true_as_printed() {
        for id in [
            "C2.1.1", "C2.1.3", "C2.2.1", "C2.3.1", "C3.7", "C3.9", "C3.14", "C4.2", "C4.3", "C4.4",
        ] {
            for n in 0..=8 {
                assert!(holds(id, Specialization::Symbolic, n), "{id} n={n}");
            }
        }
    }

    #[test]
    fn known_misprints_fail() {
        assert!(!holds("C2.1.2", Specialization::Symbolic, 1));
        assert!(holds("C2.4.2", Specialization::Symbolic, 0));
        assert!(!holds("C2.4.2", Specialization::Symbolic, 1));
        assert!(!holds("C4.1", Specialization::Symbolic, 2));
        assert!(!holds("C3.3", Specialization::Symbolic, 0));
    }
}
