//! Symmetric functions of a two-letter alphabet `{x1, x2}`.
//!
//! `S_n` is the complete homogeneous sum `Σ x1^i x2^(n−i)` (zero for `n < 0`)
//! and `φ_n = x1^n + x2^n`. Everything is generic over [`CommRing`] so the
//! same code runs on indeterminates and on Binet roots.

use crate::arith::{CommRing, MultiPoly, Var};

#[derive(Clone, Debug, PartialEq)]
pub struct LetterPair<R> {
    pub first: R,
    pub second: R,
}

impl<R: CommRing> LetterPair<R> {
    pub fn new(first: R, second: R) -> Self {
        LetterPair { first, second }
    }

    pub fn sum(&self) -> R {
        self.first.plus(&self.second)
    }

    pub fn difference(&self) -> R {
        self.first.minus(&self.second)
    }

    pub fn product(&self) -> R {
        self.first.times(&self.second)
    }
}

impl LetterPair<MultiPoly> {
    /// The alphabet of free indeterminates `x1, x2`.
    pub fn indeterminates() -> Self {
        LetterPair::new(MultiPoly::var(Var::X1), MultiPoly::var(Var::X2))
    }
}

fn powers<R: CommRing>(x: &R, n: usize) -> Vec<R> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(x.one_like());
    for i in 1..=n {
        let next = out[i - 1].times(x);
        out.push(next);
    }
    out
}

/// `S_n(x1 + x2)`.
pub fn sym_s<R: CommRing>(pair: &LetterPair<R>, n: i64) -> R {
    if n < 0 {
        return pair.first.zero_like();
    }
    let n = n as usize;
    let p1 = powers(&pair.first, n);
    let p2 = powers(&pair.second, n);
    (0..=n).fold(pair.first.zero_like(), |acc, i| {
        acc.plus(&p1[i].times(&p2[n - i]))
    })
}

/// `φ_n(x1 + x2) = x1^n + x2^n`.
pub fn sym_phi<R: CommRing>(pair: &LetterPair<R>, n: u32) -> R {
    pair.first.power(n).plus(&pair.second.power(n))
}

/// `S_0..=S_n` from shared power tables.
pub fn sym_s_table<R: CommRing>(pair: &LetterPair<R>, n: usize) -> Vec<R> {
    let p1 = powers(&pair.first, n);
    let p2 = powers(&pair.second, n);
    (0..=n)
        .map(|m| {
            (0..=m).fold(pair.first.zero_like(), |acc, i| {
                acc.plus(&p1[i].times(&p2[m - i]))
            })
        })
        .collect()
}

/// `φ_0..=φ_n`.
pub fn sym_phi_table<R: CommRing>(pair: &LetterPair<R>, n: usize) -> Vec<R> {
    let p1 = powers(&pair.first, n);
    let p2 = powers(&pair.second, n);
    p1.iter().zip(&p2).map(|(a, b)| a.plus(b)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymKind {
    /// elementary `e_k`
    E,
    /// complete homogeneous `h_k`
    H,
    /// power sum `p_k`
    P,
}

/// Two-variable `e_k`, `h_k`, `p_k`, written out from their defining
/// exponent-vector sums. `e_k` is zero for `k > 2`.
pub fn sym_ehp<R: CommRing>(kind: SymKind, k: u32, pair: &LetterPair<R>) -> R {
    let (a, b) = (&pair.first, &pair.second);
    match kind {
        SymKind::E => match k {
            0 => a.one_like(),
            1 => a.plus(b),
            2 => a.times(b),
            _ => a.zero_like(),
        },
        SymKind::H => {
            // all (i1, i2) with i1 + i2 = k
            let mut acc = a.zero_like();
            for i1 in 0..=k {
                acc = acc.plus(&a.power(i1).times(&b.power(k - i1)));
            }
            acc
        }
        SymKind::P => a.power(k).plus(&b.power(k)),
    }
}
