//! The theorems over a two-letter alphabet, generic over the ring the letters
//! live in.

use std::fmt;
use std::str::FromStr;

use crate::arith::{binomial_q, CommRing, Rational};
use crate::sequences::{bernoulli_number, euler_number, genocchi_number, NumberKind, PolyKind};

use super::env::TheoremEnv;
use super::{
    divided, eval_convolution_sum, ConvolutionShape, EvalError, IdentityError, Sides, Variant,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremId {
    T21a,
    T21b,
    T21c,
    T22a,
    T22b,
    T22c,
    T31,
    T32,
    T33,
    T34a,
    T34b,
    T35a,
    T35b,
    T36a,
    T36b,
    T37,
    T41,
    T42,
    T43,
}

impl TheoremId {
    pub const ALL: [TheoremId; 19] = [
        TheoremId::T21a,
        TheoremId::T21b,
        TheoremId::T21c,
        TheoremId::T22a,
        TheoremId::T22b,
        TheoremId::T22c,
        TheoremId::T31,
        TheoremId::T32,
        TheoremId::T33,
        TheoremId::T34a,
        TheoremId::T34b,
        TheoremId::T35a,
        TheoremId::T35b,
        TheoremId::T36a,
        TheoremId::T36b,
        TheoremId::T37,
        TheoremId::T41,
        TheoremId::T42,
        TheoremId::T43,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::T21a => "T2.1a",
            TheoremId::T21b => "T2.1b",
            TheoremId::T21c => "T2.1c",
            TheoremId::T22a => "T2.2a",
            TheoremId::T22b => "T2.2b",
            TheoremId::T22c => "T2.2c",
            TheoremId::T31 => "T3.1",
            TheoremId::T32 => "T3.2",
            TheoremId::T33 => "T3.3",
            TheoremId::T34a => "T3.4a",
            TheoremId::T34b => "T3.4b",
            TheoremId::T35a => "T3.5a",
            TheoremId::T35b => "T3.5b",
            TheoremId::T36a => "T3.6a",
            TheoremId::T36b => "T3.6b",
            TheoremId::T37 => "T3.7",
            TheoremId::T41 => "T4.1",
            TheoremId::T42 => "T4.2",
            TheoremId::T43 => "T4.3",
        }
    }

    /// Identities whose printed form and corrected form differ.
    pub fn is_disputed(self) -> bool {
        matches!(
            self,
            TheoremId::T33 | TheoremId::T35b | TheoremId::T36a | TheoremId::T36b
        )
    }

    /// Verified identity the corrected form is re-indexed from (`n = m + 2`).
    pub fn reindex_base(self) -> Option<TheoremId> {
        match self {
            TheoremId::T33 => Some(TheoremId::T32),
            TheoremId::T36a => Some(TheoremId::T35a),
            TheoremId::T36b => Some(TheoremId::T35b),
            _ => None,
        }
    }

    pub fn default_max(self) -> i64 {
        if self.reindex_base().is_some() {
            24
        } else {
            30
        }
    }

    /// Whether the registered sum runs over `k ≡ n (mod 2)` only.
    pub fn parity_restricted(self) -> bool {
        matches!(
            self,
            TheoremId::T31
                | TheoremId::T33
                | TheoremId::T34a
                | TheoremId::T34b
                | TheoremId::T36a
                | TheoremId::T36b
                | TheoremId::T37
        )
    }

    /// Printed fragment of the disputed statement.
    pub fn anchor(self) -> Option<&'static str> {
        match self {
            TheoremId::T33 => Some(r"\frac{G_{m-k-2}}{m-k-2}"),
            TheoremId::T35b => Some(r"-n(1-n)(x_{1}-x_{2})^{2}(x_{1}+x_{2})^{n-2}"),
            TheoremId::T36a => Some(r"\frac{B_{m-k-2}}{m-k-2}"),
            TheoremId::T36b => Some(r"(e_{1}+e_{2})^{m}"),
            _ => None,
        }
    }

    pub fn description(self, variant: Variant) -> &'static str {
        use Variant::*;
        match (self, variant) {
            (TheoremId::T21a, _) => "d^2 * sum C(n,k) S_{n-k-1} S_{k-1} = 2^n phi_n - 2 s^n",
            (TheoremId::T21b, _) => "sum C(n,k) phi_{n-k} phi_k = 2^n phi_n + 2 s^n",
            (TheoremId::T21c, _) => "sum C(n,k) S_{n-k-1} phi_k = 2^n S_{n-1}",
            (TheoremId::T22a, _) => "sum phi_k phi_{n-k} = (n+1) phi_n + 2 S_n",
            (TheoremId::T22b, _) => "d^2 * sum S_{k-1} S_{n-k-1} = (n+1) phi_n - 2 S_n",
            (TheoremId::T22c, _) => "sum phi_k S_{n-k-1} = (n+1) S_{n-1}",
            (TheoremId::T31, _) => {
                "sum_{k=n mod 2} C(n,k) d^{n-k} A+_k G_{n-k} = -n 2^{n-1} d^2 S_{n-2}"
            }
            (TheoremId::T32, _) => {
                "sum C(n,k) d^{n-k} (n-k-1) A+_k G_{n-k} = -2n(n-1) d^2 s^{n-2}"
            }
            (TheoremId::T33, AsPrinted) => {
                "sum_{k=m mod 2} C(m,k) d^{m-k} G_{m-k-2}/(m-k-2) A+_k = -2 d^2 s^m"
            }
            (TheoremId::T33, Corrected) => {
                "sum_{k=m mod 2} C(m,k) d^{m-k+2} G_{m-k+2}/(m-k+2) A+_k, re-indexed from T3.2"
            }
            (TheoremId::T34a, _) => {
                "sum_{k=n mod 2} C(n,k) d^{n-k} A-_k B_{n-k} = n 2^{n-2} d^2 S_{n-2}"
            }
            (TheoremId::T34b, _) => {
                "sum_{k=n mod 2} C(n,k) d^{n-k} (1-2^{n-k}) A+_k B_{n-k} = -n 2^{n-2} d^2 S_{n-2}"
            }
            (TheoremId::T35a, _) => {
                "sum C(n,k) d^{n-k} (n-k-1) A-_k B_{n-k} = n(1-n) d^2 s^{n-2}"
            }
            (TheoremId::T35b, AsPrinted) => {
                "sum C(n,k) d^{n-k} (n-k-1) A+_k B_{n-k} = -n(1-n) d^2 s^{n-2}"
            }
            (TheoremId::T35b, Corrected) => {
                "sum C(n,k) d^{n-k} (n-k-1)(1-2^{n-k}) A+_k B_{n-k}, half of T3.2 via G_j = 2(1-2^j) B_j"
            }
            (TheoremId::T36a, AsPrinted) => {
                "d^2 * sum_{k=m mod 2} C(m,k) d^{m-k} B_{m-k-2}/(m-k-2) A-_k = 2^{m+2}(phi_{m+2} - 2 s^{m+2})/((m+2)(m+1)) - 2 d^2 s^m"
            }
            (TheoremId::T36a, Corrected) => {
                "sum_{k=m mod 2} C(m,k) d^{m-k+2} B_{m-k+2}/(m-k+2) A-_k, re-indexed from T3.5a"
            }
            (TheoremId::T36b, AsPrinted) => {
                "sum_{k=m mod 2} C(m,k) d^{m-k} (2^{m-k+2}-1) B_{m-k-2}/(m-k-2) A+_k = (e1 + e2)^m"
            }
            (TheoremId::T36b, Corrected) => {
                "sum_{k=m mod 2} C(m,k) d^{m-k+2} (1-2^{m-k+2}) B_{m-k+2}/(m-k+2) A+_k, re-indexed from T3.5b"
            }
            (TheoremId::T37, _) => {
                "sum_{k=n mod 2} C(n,k) (d/2)^{n-k} A+_k E_{n-k} = 2^{1-n}((3x1+x2)^n + (x1+3x2)^n)"
            }
            (TheoremId::T41, _) => {
                "sum C(n,k) d^{n-k} A+_k G_{n-k}(x) = 2n d ((s + x d)^{n-1} + (2 x2 + x d)^{n-1})"
            }
            (TheoremId::T42, _) => {
                "sum C(n,k) d^{n-k} A-_k B_{n-k}(x) = n d ((s + x d)^{n-1} - (2 x2 + x d)^{n-1})"
            }
            (TheoremId::T43, _) => {
                "sum C(n,k) d^{n-k} A+_k E_{n-k}(x) = 2((s + x d)^n + (2 x2 + x d)^n)"
            }
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = IdentityError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| IdentityError::NotATheorem(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug)]
enum Weight {
    One,
    /// `n − k − 1`
    JMinusOne,
    /// `1 − 2^(n−k)`
    OneMinus2J,
    JMinusOneOneMinus2J,
}

impl Weight {
    fn value(self, j: i64) -> Rational {
        let jm1 = || Rational::from_int(j - 1);
        let om = || Rational::one() - Rational::pow2(j);
        match self {
            Weight::One => Rational::one(),
            Weight::JMinusOne => jm1(),
            Weight::OneMinus2J => om(),
            Weight::JMinusOneOneMinus2J => jm1() * om(),
        }
    }
}

#[derive(Clone, Copy, Debug)]
enum TermA {
    Phi,
    /// `S_(k−1)`
    SymS,
    APlus,
    AMinus,
}

#[derive(Clone, Copy, Debug)]
enum TermB {
    Phi,
    /// `S_(j−1)`
    SymS,
    /// `d^j X_j`
    Number(NumberKind),
    /// `(d/2)^j X_j`
    HalfNumber(NumberKind),
    /// `d^j X_j(x)`
    Poly(PolyKind),
}

#[derive(Clone, Copy, Debug)]
struct Shape {
    binomial: bool,
    parity: bool,
    d2_prefactor: bool,
    weight: Weight,
    a: TermA,
    b: TermB,
}

fn number(kind: NumberKind, j: usize) -> Rational {
    match kind {
        NumberKind::Bernoulli => bernoulli_number(j),
        NumberKind::Euler => euler_number(j),
        NumberKind::Genocchi => genocchi_number(j),
    }
}

/// Summation shape of every theorem stated directly over `n`.
fn base_shape(id: TheoremId, variant: Variant) -> Option<Shape> {
    use NumberKind::*;
    use TermA as A;
    use TermB as B;
    let sh = |binomial, parity, d2_prefactor, weight, a, b| {
        Some(Shape {
            binomial,
            parity,
            d2_prefactor,
            weight,
            a,
            b,
        })
    };
    match id {
        TheoremId::T21a => sh(true, false, true, Weight::One, A::SymS, B::SymS),
        TheoremId::T21b => sh(true, false, false, Weight::One, A::Phi, B::Phi),
        TheoremId::T21c => sh(true, false, false, Weight::One, A::Phi, B::SymS),
        TheoremId::T22a => sh(false, false, false, Weight::One, A::Phi, B::Phi),
        TheoremId::T22b => sh(false, false, true, Weight::One, A::SymS, B::SymS),
        TheoremId::T22c => sh(false, false, false, Weight::One, A::Phi, B::SymS),
        TheoremId::T31 => sh(
            true,
            true,
            false,
            Weight::One,
            A::APlus,
            B::Number(Genocchi),
        ),
        TheoremId::T32 => sh(
            true,
            false,
            false,
            Weight::JMinusOne,
            A::APlus,
            B::Number(Genocchi),
        ),
        TheoremId::T34a => sh(
            true,
            true,
            false,
            Weight::One,
            A::AMinus,
            B::Number(Bernoulli),
        ),
        TheoremId::T34b => sh(
            true,
            true,
            false,
            Weight::OneMinus2J,
            A::APlus,
            B::Number(Bernoulli),
        ),
        TheoremId::T35a => sh(
            true,
            false,
            false,
            Weight::JMinusOne,
            A::AMinus,
            B::Number(Bernoulli),
        ),
        TheoremId::T35b => {
            let w = match variant {
                Variant::AsPrinted => Weight::JMinusOne,
                Variant::Corrected => Weight::JMinusOneOneMinus2J,
            };
            sh(true, false, false, w, A::APlus, B::Number(Bernoulli))
        }
        TheoremId::T37 => sh(
            true,
            true,
            false,
            Weight::One,
            A::APlus,
            B::HalfNumber(Euler),
        ),
        TheoremId::T41 => sh(
            true,
            false,
            false,
            Weight::One,
            A::APlus,
            B::Poly(PolyKind::GenocchiPoly),
        ),
        TheoremId::T42 => sh(
            true,
            false,
            false,
            Weight::One,
            A::AMinus,
            B::Poly(PolyKind::BernoulliPoly),
        ),
        TheoremId::T43 => sh(
            true,
            false,
            false,
            Weight::One,
            A::APlus,
            B::Poly(PolyKind::EulerPoly),
        ),
        TheoremId::T33 | TheoremId::T36a | TheoremId::T36b => None,
    }
}

#[allow(clippy::type_complexity)]
fn convolution<'a, R: CommRing>(
    env: &'a TheoremEnv<R>,
    sh: Shape,
) -> ConvolutionShape<
    R,
    impl Fn(i64, i64) -> Result<Rational, EvalError> + 'a,
    impl Fn(i64) -> R + 'a,
    impl Fn(i64) -> R + 'a,
> {
    ConvolutionShape {
        binomial: sh.binomial,
        zero: env.zero(),
        weight: move |n: i64, k: i64| {
            let j = n - k;
            let w = sh.weight.value(j);
            Ok(match sh.b {
                TermB::Number(kind) | TermB::HalfNumber(kind) => w * number(kind, j as usize),
                _ => w,
            })
        },
        term_a: move |k: i64| match sh.a {
            TermA::Phi => env.phi(k).clone(),
            TermA::SymS => env.sym_s(k - 1),
            TermA::APlus => env.a_plus(k).clone(),
            TermA::AMinus => env.a_minus(k).clone(),
        },
        term_b: move |j: i64| match sh.b {
            TermB::Phi => env.phi(j).clone(),
            TermB::SymS => env.sym_s(j - 1),
            TermB::Number(_) => env.d_pow(j).clone(),
            TermB::HalfNumber(_) => env.half_d_pow(j).clone(),
            TermB::Poly(kind) => env.d_pow(j).times(env.number_poly(kind, j)),
        },
    }
}

fn single_term<R, W, A, B>(
    shape: &ConvolutionShape<R, W, A, B>,
    n: i64,
    k: i64,
) -> Result<R, EvalError>
where
    R: CommRing,
    W: Fn(i64, i64) -> Result<Rational, EvalError>,
    A: Fn(i64) -> R,
    B: Fn(i64) -> R,
{
    if k < 0 || k > n {
        return Ok(shape.zero.clone());
    }
    let mut c = (shape.weight)(n, k)?;
    if shape.binomial {
        c = c * binomial_q(n as u64, k);
    }
    if c.is_zero() {
        return Ok(shape.zero.clone());
    }
    Ok((shape.term_a)(k).times(&(shape.term_b)(n - k)).scaled(&c))
}

fn int(n: i64) -> Rational {
    Rational::from_int(n)
}

/// `c · f()`, never evaluating `f` when `c = 0`.
fn guarded<R: CommRing>(env: &TheoremEnv<R>, c: Rational, f: impl FnOnce() -> R) -> R {
    if c.is_zero() {
        env.zero()
    } else {
        f().scaled(&c)
    }
}

fn base_rhs<R: CommRing>(env: &TheoremEnv<R>, id: TheoremId, variant: Variant, n: i64) -> R {
    let two_n = Rational::pow2(n);
    let two = int(2);
    let d2 = env.d_pow(2);
    match id {
        TheoremId::T21a => env.phi(n).scaled(&two_n).minus(&env.s_pow(n).scaled(&two)),
        TheoremId::T21b => env.phi(n).scaled(&two_n).plus(&env.s_pow(n).scaled(&two)),
        TheoremId::T21c => env.sym_s(n - 1).scaled(&two_n),
        TheoremId::T22a => env
            .phi(n)
            .scaled(&int(n + 1))
            .plus(&env.sym_s(n).scaled(&two)),
        TheoremId::T22b => env
            .phi(n)
            .scaled(&int(n + 1))
            .minus(&env.sym_s(n).scaled(&two)),
        TheoremId::T22c => env.sym_s(n - 1).scaled(&int(n + 1)),
        TheoremId::T31 => guarded(env, -int(n) * Rational::pow2(n - 1), || {
            d2.times(&env.sym_s(n - 2))
        }),
        TheoremId::T32 => guarded(env, int(-2 * n * (n - 1)), || d2.times(env.s_pow(n - 2))),
        TheoremId::T34a => guarded(env, int(n) * Rational::pow2(n - 2), || {
            d2.times(&env.sym_s(n - 2))
        }),
        TheoremId::T34b => guarded(env, -int(n) * Rational::pow2(n - 2), || {
            d2.times(&env.sym_s(n - 2))
        }),
        TheoremId::T35a => guarded(env, int(n * (1 - n)), || d2.times(env.s_pow(n - 2))),
        TheoremId::T35b => match variant {
            Variant::AsPrinted => guarded(env, int(-n * (1 - n)), || d2.times(env.s_pow(n - 2))),
            Variant::Corrected => base_rhs(env, TheoremId::T32, Variant::Corrected, n)
                .scaled(&Rational::new(1, 2).expect("nonzero")),
        },
        TheoremId::T37 => env
            .sum3_pow(n)
            .plus(env.diff3_pow(n))
            .scaled(&Rational::pow2(1 - n)),
        TheoremId::T41 => guarded(env, int(2 * n), || {
            env.d_pow(1).times(&env.u_pow(n - 1).plus(env.v_pow(n - 1)))
        }),
        TheoremId::T42 => guarded(env, int(n), || {
            env.d_pow(1)
                .times(&env.u_pow(n - 1).minus(env.v_pow(n - 1)))
        }),
        TheoremId::T43 => env.u_pow(n).plus(env.v_pow(n)).scaled(&two),
        TheoremId::T33 | TheoremId::T36a | TheoremId::T36b => {
            unreachable!("{id} has no direct right-hand side")
        }
    }
}

fn direct_sides<R: CommRing>(
    env: &TheoremEnv<R>,
    sh: Shape,
    id: TheoremId,
    variant: Variant,
    n: i64,
) -> Result<Sides<R>, EvalError> {
    let conv = convolution(env, sh);
    let mut lhs = eval_convolution_sum(&conv, n, sh.parity)?;
    if sh.d2_prefactor {
        lhs = env.d_pow(2).times(&lhs);
    }
    Ok(Sides::new(lhs, base_rhs(env, id, variant, n)))
}

/// Corrected re-indexed form: the base identity at `n = m + 2`, with
/// `C(n,k)(n−k−1) = C(m,k)(m+1)(m+2)/(m−k+2)` and the terms outside the new
/// summation range moved to the right.
fn reindexed_sides<R: CommRing>(
    env: &TheoremEnv<R>,
    id: TheoremId,
    m: i64,
) -> Result<Sides<R>, EvalError> {
    let base = id.reindex_base().expect("re-indexed theorem");
    let sh = base_shape(base, Variant::Corrected).expect("base has a direct shape");
    let kind = match sh.b {
        TermB::Number(kind) => kind,
        other => unreachable!("re-indexing needs a number column, got {other:?}"),
    };
    let n = m + 2;
    let base_conv = convolution(env, sh);
    let scale = int((m + 1) * (m + 2))
        .recip()
        .expect("m ≥ 0 keeps (m+1)(m+2) nonzero");

    let reindexed = ConvolutionShape {
        binomial: true,
        zero: env.zero(),
        weight: |m: i64, k: i64| {
            let j = m - k + 2;
            // base weight with the (n − k − 1) factor absorbed into the binomial
            let w = sh.weight.value(j).checked_div(&int(j - 1))?;
            Ok(w * divided(|i| number(kind, i), j, "X")?)
        },
        term_a: &base_conv.term_a,
        term_b: |jm: i64| env.d_pow(jm + 2).clone(),
    };
    let lhs = eval_convolution_sum(&reindexed, m, true)?;

    let mut rhs = base_rhs(env, base, Variant::Corrected, n);
    for k in 0..=n {
        let kept = k <= m && (m - k) % 2 == 0;
        if !kept {
            rhs = rhs.minus(&single_term(&base_conv, n, k)?);
        }
    }
    Ok(Sides::new(lhs, rhs.scaled(&scale)))
}

/// Printed forms of the three re-indexed statements.
fn printed_reindexed_sides<R: CommRing>(
    env: &TheoremEnv<R>,
    id: TheoremId,
    m: i64,
) -> Result<Sides<R>, EvalError> {
    let d2 = env.d_pow(2);
    let (kind, a_plus) = match id {
        TheoremId::T33 => (NumberKind::Genocchi, true),
        TheoremId::T36a => (NumberKind::Bernoulli, false),
        _ => (NumberKind::Bernoulli, true),
    };
    let shape = ConvolutionShape {
        binomial: true,
        zero: env.zero(),
        weight: |m: i64, k: i64| {
            let j = m - k;
            let extra = if id == TheoremId::T36b {
                Rational::pow2(j + 2) - Rational::one()
            } else {
                Rational::one()
            };
            Ok(extra * divided(|i| number(kind, i), j - 2, "X")?)
        },
        term_a: |k: i64| {
            if a_plus {
                env.a_plus(k).clone()
            } else {
                env.a_minus(k).clone()
            }
        },
        term_b: |j: i64| env.d_pow(j).clone(),
    };
    let sum = eval_convolution_sum(&shape, m, true)?;
    Ok(match id {
        TheoremId::T33 => Sides::new(sum, d2.times(env.s_pow(m)).scaled(&int(-2))),
        TheoremId::T36a => {
            let c = Rational::pow2(m + 2).checked_div(&int((m + 2) * (m + 1)))?;
            let first = env
                .phi(m + 2)
                .minus(&env.s_pow(m + 2).scaled(&int(2)))
                .scaled(&c);
            let rhs = first.minus(&d2.times(env.s_pow(m)).scaled(&int(2)));
            Sides::new(d2.times(&sum), rhs)
        }
        _ => {
            let pair = env.pair();
            let e1_plus_e2 = pair.sum().plus(&pair.product());
            Sides::new(sum, e1_plus_e2.power(m as u32))
        }
    })
}

/// Both sides of one theorem at index `n` (or `m` for the re-indexed ones).
pub fn theorem_sides<R: CommRing>(
    env: &TheoremEnv<R>,
    id: TheoremId,
    variant: Variant,
    n: i64,
) -> Result<Sides<R>, EvalError> {
    assert!(
        n >= 0 && (n + 3) as usize <= env.capacity() + 1,
        "index {n} outside table capacity {}",
        env.capacity()
    );
    match (base_shape(id, variant), id.reindex_base(), variant) {
        (Some(sh), _, _) => direct_sides(env, sh, id, variant, n),
        (None, Some(_), Variant::Corrected) => reindexed_sides(env, id, n),
        (None, Some(_), Variant::AsPrinted) => printed_reindexed_sides(env, id, n),
        (None, None, _) => unreachable!("every theorem has a shape or a base"),
    }
}

/// Restricted sum against the unrestricted sum minus the boundary term
/// `k = n − 1`. `None` when the theorem has no direct parity-restricted form.
pub(crate) fn parity_sides<R: CommRing>(
    env: &TheoremEnv<R>,
    id: TheoremId,
    n: i64,
) -> Option<Result<Sides<R>, EvalError>> {
    let sh = base_shape(id, Variant::Corrected).filter(|s| s.parity)?;
    let conv = convolution(env, sh);
    Some((|| {
        let restricted = eval_convolution_sum(&conv, n, true)?;
        let full = eval_convolution_sum(&conv, n, false)?;
        let boundary = single_term(&conv, n, n - 1)?;
        Ok(Sides::new(restricted, full.minus(&boundary)))
    })())
}
