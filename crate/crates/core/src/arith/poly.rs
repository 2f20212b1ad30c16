//! Sparse multivariate polynomials over `Rational` in the fixed variable set
//! `x1, x2, x, y, t`.
//!
//! Terms live in a `BTreeMap` keyed by exponent vector and never store a zero
//! coefficient, so two polynomials are equal exactly when their maps are.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{ArithError, Rational};

pub const NVARS: usize = 5;

/// The five indeterminates, in canonical order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X1,
    X2,
    X,
    Y,
    T,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::X1, Var::X2, Var::X, Var::Y, Var::T];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::X1 => "x1",
            Var::X2 => "x2",
            Var::X => "x",
            Var::Y => "y",
            Var::T => "t",
        }
    }

    pub fn from_name(s: &str) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.name() == s)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponent vector. Ordered by total degree, then lexicographically.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial([u32; NVARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NVARS]);

    pub fn new(exps: [u32; NVARS]) -> Self {
        Monomial(exps)
    }

    pub fn var(v: Var, e: u32) -> Self {
        let mut exps = [0; NVARS];
        exps[v.index()] = e;
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[u32; NVARS] {
        &self.0
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.0[v.index()]
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0; NVARS]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.0;
        for (e, o) in exps.iter_mut().zip(other.0.iter()) {
            *e += o;
        }
        Monomial(exps)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = self.0;
        for (e, o) in exps.iter_mut().zip(other.0.iter()) {
            *e = e.checked_sub(*o)?;
        }
        Some(Monomial(exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for v in Var::ALL {
            let e = self.exp(v);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Variable assignments for [`MultiPoly::substitute`]. Unbound variables are
/// left alone.
pub type Bindings = BTreeMap<Var, MultiPoly>;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        MultiPoly::term(c, Monomial::ONE)
    }

    pub fn int(n: i64) -> Self {
        MultiPoly::constant(Rational::from_int(n))
    }

    pub fn var(v: Var) -> Self {
        MultiPoly::term(Rational::one(), Monomial::var(v, 1))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    /// Builds from arbitrary `(monomial, coefficient)` pairs, merging duplicates.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(iter: I) -> Self {
        let mut p = MultiPoly::zero();
        for (m, c) in iter {
            p.add_term(m, &c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// The value of a constant polynomial (zero included).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::total_degree)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// True when no variable outside `allowed` appears.
    pub fn only_uses(&self, allowed: &[Var]) -> bool {
        self.terms.keys().all(|m| {
            Var::ALL
                .iter()
                .all(|v| m.exp(*v) == 0 || allowed.contains(v))
        })
    }

    fn add_term(&mut self, m: Monomial, c: &Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    /// `self^e`, with `p^0 = 1` for every `p` including zero.
    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut result = MultiPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Simultaneous substitution of polynomials for variables.
    pub fn substitute(&self, bindings: &Bindings) -> MultiPoly {
        if bindings.is_empty() {
            return self.clone();
        }
        // cache powers per bound variable
        let mut powers: BTreeMap<(Var, u32), MultiPoly> = BTreeMap::new();
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut kept = *m;
            let mut factor = MultiPoly::constant(c.clone());
            for (v, target) in bindings {
                let e = m.exp(*v);
                kept.0[v.index()] = 0;
                if e == 0 {
                    continue;
                }
                let pw = powers
                    .entry((*v, e))
                    .or_insert_with(|| target.pow(e))
                    .clone();
                factor = &factor * &pw;
            }
            let shifted = MultiPoly::term(Rational::one(), kept);
            out = &out + &(&factor * &shifted);
        }
        out
    }

    /// Evaluates at rational values for every variable that occurs.
    pub fn eval(&self, point: &BTreeMap<Var, Rational>) -> Result<Rational, ArithError> {
        let bindings: Bindings = point
            .iter()
            .map(|(v, r)| (*v, MultiPoly::constant(r.clone())))
            .collect();
        self.substitute(&bindings)
            .as_constant()
            .ok_or(ArithError::NotConstant)
    }

    /// Exact quotient `self / divisor` in the polynomial ring. Fails when the
    /// division leaves a remainder.
    pub fn div_exact(&self, divisor: &MultiPoly) -> Result<MultiPoly, ArithError> {
        let (lead_m, lead_c) = divisor.leading_term().ok_or(ArithError::DivisionByZero)?;
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero();
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.div(lead_m).ok_or(ArithError::NotDivisible)?;
            let qc = c.checked_div(lead_c)?;
            let step = MultiPoly::term(qc, qm);
            rem = &rem - &(&step * divisor);
            quot = &quot + &step;
        }
        Ok(quot)
    }
}

impl From<Rational> for MultiPoly {
    fn from(c: Rational) -> Self {
        MultiPoly::constant(c)
    }
}

impl From<Var> for MultiPoly {
    fn from(v: Var) -> Self {
        MultiPoly::var(v)
    }
}

impl Add<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let (big, small) = if self.len() >= rhs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(*m, c);
        }
        out
    }
}

impl Sub<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, &-c);
        }
        out
    }
}

impl Mul<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        if self.is_zero() || rhs.is_zero() {
            return MultiPoly::zero();
        }
        let mut out = MultiPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$method(rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

/// Canonical form: highest total degree first, ties broken by exponent
/// vector `(x1, x2, x, y, t)` descending; `" - "` for negative coefficients.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Ring operation selector for [`poly_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
    /// Negates `p`; `q` is ignored.
    Neg,
}

pub fn poly_arith(op: PolyOp, p: &MultiPoly, q: &MultiPoly) -> MultiPoly {
    match op {
        PolyOp::Add => p + q,
        PolyOp::Sub => p - q,
        PolyOp::Mul => p * q,
        PolyOp::Neg => -p,
    }
}

pub fn poly_pow(p: &MultiPoly, e: u32) -> MultiPoly {
    p.pow(e)
}

pub fn poly_substitute(p: &MultiPoly, bindings: &Bindings) -> MultiPoly {
    p.substitute(bindings)
}
