//! Lemma, remark and Binet-formula records.

use std::fmt;
use std::sync::{Arc, Mutex};

use crate::arith::{CommRing, MultiPoly, Rational};
use crate::egf::{egf_exp_linear, symmetric_phi_series, symmetric_s_series, EgfSeries};
use crate::quadext::{make_root_pair, qe_binet_ratio, qe_pow, Family, QuadExtElem};
use crate::sequences::{bivariate_sequence, PolyKind};
use crate::symfun::{sym_ehp, sym_phi, sym_s, LetterPair, SymKind};

use super::{EvalError, RingKind, RingValue, Sides, Specialization, Variant};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtraId {
    L11a,
    L11b,
    L11c,
    L12a,
    L12b,
    R11,
    R12,
    BinetF,
    BinetL,
    BinetB,
    BinetC,
}

impl ExtraId {
    pub const ALL: [ExtraId; 11] = [
        ExtraId::L11a,
        ExtraId::L11b,
        ExtraId::L11c,
        ExtraId::L12a,
        ExtraId::L12b,
        ExtraId::R11,
        ExtraId::R12,
        ExtraId::BinetF,
        ExtraId::BinetL,
        ExtraId::BinetB,
        ExtraId::BinetC,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ExtraId::L11a => "L1.1a",
            ExtraId::L11b => "L1.1b",
            ExtraId::L11c => "L1.1c",
            ExtraId::L12a => "L1.2a",
            ExtraId::L12b => "L1.2b",
            ExtraId::R11 => "R1.1",
            ExtraId::R12 => "R1.2",
            ExtraId::BinetF => "BINET.F",
            ExtraId::BinetL => "BINET.L",
            ExtraId::BinetB => "BINET.B",
            ExtraId::BinetC => "BINET.C",
        }
    }

    pub fn is_disputed(self) -> bool {
        matches!(
            self,
            ExtraId::L12a | ExtraId::R11 | ExtraId::R12 | ExtraId::BinetC
        )
    }

    pub fn ring(self) -> RingKind {
        match self {
            ExtraId::BinetF | ExtraId::BinetL => RingKind::FibonacciRoots,
            ExtraId::BinetB | ExtraId::BinetC => RingKind::BalancingRoots,
            _ => RingKind::Indeterminate,
        }
    }

    pub fn range(self) -> (i64, i64) {
        match self {
            // stated for positive n; at n = 0 the convention S_(−2) = 0 breaks it
            ExtraId::L11a => (1, 40),
            ExtraId::BinetF | ExtraId::BinetL | ExtraId::BinetB | ExtraId::BinetC => (0, 30),
            _ => (0, 40),
        }
    }

    pub fn anchor(self) -> Option<&'static str> {
        match self {
            ExtraId::L12a => Some(r"\frac{1}{e_{1}-e_{2}}"),
            ExtraId::R11 => Some(r"S_{n}(x_{1}+x_{2})=h_{2}(x_{1},x_{2})"),
            ExtraId::R12 => Some(r"\phi_{n}(x_{1}+x_{2})=p_{2}(x_{1},x_{2})"),
            ExtraId::BinetC => Some(r"C_{n}(y,t)=\frac{1}{2}(\lambda_{1}^{n}-\lambda_{2}^{n})"),
            _ => None,
        }
    }

    pub fn description(self, variant: Variant) -> &'static str {
        use Variant::*;
        match (self, variant) {
            (ExtraId::L11a, _) => "S_n - x1 x2 S_{n-2} = phi_n",
            (ExtraId::L11b, _) => "(phi_n + d S_{n-1})/2 = x1^n",
            (ExtraId::L11c, _) => "(phi_n - d S_{n-1})/2 = x2^n",
            (ExtraId::L12a, AsPrinted) => "(e1 - e2) S_{n-1} = [z^n/n!](exp(x1 z) - exp(x2 z))",
            (ExtraId::L12a, Corrected) => "[z^n/n!](exp(x1 z) - exp(x2 z))/(x1 - x2) = S_{n-1}",
            (ExtraId::L12b, _) => "[z^n/n!](exp(x1 z) + exp(x2 z)) = phi_n",
            (ExtraId::R11, AsPrinted) => "S_n = h_2(x1, x2)",
            (ExtraId::R11, Corrected) => "S_n = h_n(x1, x2)",
            (ExtraId::R12, AsPrinted) => "phi_n = p_2(x1, x2)",
            (ExtraId::R12, Corrected) => "phi_n = p_n(x1, x2)",
            (ExtraId::BinetF, _) => "F_n = (l1^n - l2^n)/(l1 - l2)",
            (ExtraId::BinetL, _) => "L_n = l1^n + l2^n",
            (ExtraId::BinetB, _) => "B*_n = (l1^n - l2^n)/(l1 - l2)",
            (ExtraId::BinetC, AsPrinted) => "C_n = (l1^n - l2^n)/2",
            (ExtraId::BinetC, Corrected) => "C_n = (l1^n + l2^n)/2",
        }
    }
}

impl fmt::Display for ExtraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

struct LemmaSeries {
    s: EgfSeries,
    phi: EgfSeries,
    exp_diff: EgfSeries,
}

fn lemma_series(order: usize) -> Arc<LemmaSeries> {
    static CACHE: Mutex<Option<Arc<LemmaSeries>>> = Mutex::new(None);
    let mut slot = CACHE.lock().expect("series cache lock");
    if let Some(s) = slot.as_ref().filter(|s| s.s.order() >= order) {
        return s.clone();
    }
    let order = order.max(40);
    let x1 = MultiPoly::var(crate::arith::Var::X1);
    let x2 = MultiPoly::var(crate::arith::Var::X2);
    let built = Arc::new(LemmaSeries {
        s: symmetric_s_series(order),
        phi: symmetric_phi_series(order),
        exp_diff: egf_exp_linear(&x1, order).sub(&egf_exp_linear(&x2, order)),
    });
    *slot = Some(built.clone());
    built
}

fn poly_sides(lhs: MultiPoly, rhs: MultiPoly) -> Sides<RingValue> {
    Sides::new(RingValue::Poly(lhs), RingValue::Poly(rhs))
}

fn quad_sides(lhs: QuadExtElem, rhs: QuadExtElem) -> Sides<RingValue> {
    Sides::new(RingValue::Quad(lhs), RingValue::Quad(rhs))
}

pub(crate) fn extra_sides(
    id: ExtraId,
    variant: Variant,
    spec: Specialization,
    n: i64,
) -> Result<Sides<RingValue>, EvalError> {
    let p = LetterPair::indeterminates();
    let half = Rational::new(1, 2).expect("nonzero");
    let nu = n as u32;
    Ok(match id {
        ExtraId::L11a => poly_sides(
            &sym_s(&p, n) - &(&p.product() * &sym_s(&p, n - 2)),
            sym_phi(&p, nu),
        ),
        ExtraId::L11b => poly_sides(
            (&sym_phi(&p, nu) + &(&p.difference() * &sym_s(&p, n - 1))).scale(&half),
            p.first.pow(nu),
        ),
        ExtraId::L11c => poly_sides(
            (&sym_phi(&p, nu) - &(&p.difference() * &sym_s(&p, n - 1))).scale(&half),
            p.second.pow(nu),
        ),
        ExtraId::L12a => {
            let series = lemma_series(n as usize);
            match variant {
                Variant::AsPrinted => {
                    let e1_minus_e2 = &p.sum() - &p.product();
                    poly_sides(
                        &e1_minus_e2 * &sym_s(&p, n - 1),
                        series.exp_diff.coeff(n as usize).clone(),
                    )
                }
                Variant::Corrected => {
                    poly_sides(series.s.coeff(n as usize).clone(), sym_s(&p, n - 1))
                }
            }
        }
        ExtraId::L12b => poly_sides(
            lemma_series(n as usize).phi.coeff(n as usize).clone(),
            sym_phi(&p, nu),
        ),
        ExtraId::R11 => {
            let k = if variant == Variant::AsPrinted { 2 } else { nu };
            poly_sides(sym_s(&p, n), sym_ehp(SymKind::H, k, &p))
        }
        ExtraId::R12 => {
            let k = if variant == Variant::AsPrinted { 2 } else { nu };
            poly_sides(sym_phi(&p, nu), sym_ehp(SymKind::P, k, &p))
        }
        ExtraId::BinetF | ExtraId::BinetL | ExtraId::BinetB | ExtraId::BinetC => {
            let (family, kind) = match id {
                ExtraId::BinetF => (Family::Fibonacci, PolyKind::BivFibonacci),
                ExtraId::BinetL => (Family::Fibonacci, PolyKind::BivLucas),
                ExtraId::BinetB => (Family::Balancing, PolyKind::BivBalancing),
                _ => (Family::Balancing, PolyKind::BivLucasBalancing),
            };
            let bindings = spec.bindings();
            let roots = make_root_pair(family).specialize(&bindings)?;
            let seq = roots
                .lambda1
                .embed(&bivariate_sequence(kind, n as usize).substitute(&bindings));
            let (p1, p2) = (qe_pow(&roots.lambda1, nu), qe_pow(&roots.lambda2, nu));
            let binet = match (id, variant) {
                (ExtraId::BinetF | ExtraId::BinetB, _) => {
                    roots.lambda1.embed(&qe_binet_ratio(&roots, nu)?)
                }
                (ExtraId::BinetL, _) => p1.plus(&p2),
                (_, Variant::AsPrinted) => p1.minus(&p2).scaled(&half),
                (_, Variant::Corrected) => p1.plus(&p2).scaled(&half),
            };
            quad_sides(seq, binet)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn holds(id: ExtraId, variant: Variant, n: i64) -> bool {
        extra_sides(id, variant, Specialization::Symbolic, n)
            .unwrap()
            .holds_exactly()
            .unwrap()
    }

    #[test]
    fn corrected_extras_hold() {
        for id in ExtraId::ALL {
            let (lo, hi) = id.range();
            for n in lo..=hi.min(12) {
                assert!(holds(id, Variant::Corrected, n), "{id} n={n}");
            }
        }
    }

    #[test]
    fn printed_extras_fail_somewhere() {
        assert!(!holds(ExtraId::L12a, Variant::AsPrinted, 1));
        assert!(!holds(ExtraId::R11, Variant::AsPrinted, 3));
        assert!(holds(ExtraId::R11, Variant::AsPrinted, 2));
        assert!(!holds(ExtraId::BinetC, Variant::AsPrinted, 0));
    }

    #[test]
    fn relation_one_breaks_at_zero() {
        assert!(!holds(ExtraId::L11a, Variant::Corrected, 0));
    }
}
