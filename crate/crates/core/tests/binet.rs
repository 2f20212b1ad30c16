//! Second-order families against hand-rolled arithmetic in Q(√D) at
//! rational points.

use symconv::arith::{Bindings, MultiPoly, Rational, Var};
use symconv::identities::{check_identity, check_identity_specialized, Specialization, Status};
use symconv::sequences::{bivariate_sequence, PolyKind};

/// `a + b√D` for a fixed rational `D`.
#[derive(Clone)]
struct Surd {
    a: Rational,
    b: Rational,
}

fn mul(u: &Surd, v: &Surd, d: &Rational) -> Surd {
    Surd {
        a: &u.a * &v.a + &(&u.b * &v.b) * d,
        b: &u.a * &v.b + &u.b * &v.a,
    }
}

fn pow(u: &Surd, n: usize, d: &Rational) -> Surd {
    let mut acc = Surd {
        a: Rational::one(),
        b: Rational::zero(),
    };
    for _ in 0..n {
        acc = mul(&acc, u, d);
    }
    acc
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d).unwrap()
}

const POINTS: [(i64, i64, i64, i64); 5] = [
    (1, 1, 1, 1),
    (2, 1, 3, 1),
    (-1, 1, 2, 1),
    (1, 2, 1, 3),
    (3, 1, -1, 1),
];

fn at(y: &Rational, t: &Rational) -> Bindings {
    [
        (Var::Y, MultiPoly::constant(y.clone())),
        (Var::T, MultiPoly::constant(t.clone())),
    ]
    .into_iter()
    .collect()
}

fn value(kind: PolyKind, n: usize, point: &Bindings) -> Rational {
    bivariate_sequence(kind, n)
        .substitute(point)
        .as_constant()
        .expect("fully specialized")
}

#[test]
fn fibonacci_and_lucas() {
    let two = Rational::from_int(2);
    for (yn, yd, tn, td) in POINTS {
        let (y, t) = (q(yn, yd), q(tn, td));
        let d = &y * &y + Rational::from_int(4) * &t;
        // λ1 = y/2 + (1/2)√D
        let lambda = Surd {
            a: &y * &q(1, 2),
            b: q(1, 2),
        };
        let point = at(&y, &t);
        for n in 0..=30 {
            let p = pow(&lambda, n, &d);
            // λ1^n − λ2^n = 2b√D and λ1 − λ2 = √D
            assert_eq!(
                value(PolyKind::BivFibonacci, n, &point),
                &two * &p.b,
                "F_{n}({y},{t})"
            );
            assert_eq!(
                value(PolyKind::BivLucas, n, &point),
                &two * &p.a,
                "L_{n}({y},{t})"
            );
        }
    }
}

#[test]
fn balancing_and_lucas_balancing() {
    for (yn, yd, tn, td) in POINTS {
        let (y, t) = (q(yn, yd), q(tn, td));
        let d = Rational::from_int(9) * &y * &y - &t;
        let lambda = Surd {
            a: Rational::from_int(3) * &y,
            b: Rational::one(),
        };
        let point = at(&y, &t);
        for n in 0..=30 {
            let p = pow(&lambda, n, &d);
            // λ1 − λ2 = 2√D
            assert_eq!(
                value(PolyKind::BivBalancing, n, &point),
                p.b,
                "B*_{n}({y},{t})"
            );
            assert_eq!(
                value(PolyKind::BivLucasBalancing, n, &point),
                p.a,
                "C_{n}({y},{t})"
            );
        }
    }
}

#[test]
fn recurrence_forced_values() {
    let one = at(&Rational::one(), &Rational::one());
    assert_eq!(
        value(PolyKind::BivBalancing, 3, &one),
        Rational::from_int(35)
    );
    assert_eq!(
        value(PolyKind::BivLucasBalancing, 2, &one),
        Rational::from_int(17)
    );
    assert_eq!(
        value(PolyKind::BivFibonacci, 10, &one),
        Rational::from_int(55)
    );
    assert_eq!(value(PolyKind::BivLucas, 10, &one), Rational::from_int(123));
}

#[test]
fn binet_records_hold_symbolically() {
    for id in ["BINET.F", "BINET.L", "BINET.B", "BINET.C:corrected"] {
        let verdicts = check_identity(id, (0, 30)).unwrap();
        assert!(verdicts.iter().all(|v| v.status == Status::Pass), "{id}");
    }
    for spec in [Specialization::TOne, Specialization::YTOne] {
        let verdicts = check_identity_specialized("BINET.F", (0, 12), spec).unwrap();
        assert!(verdicts.iter().all(|v| v.status == Status::Pass));
    }
}

#[test]
fn printed_lucas_balancing_binet_fails() {
    let verdicts = check_identity("BINET.C:as_printed", (0, 5)).unwrap();
    assert!(verdicts.iter().all(|v| v.status == Status::Fail));
}
