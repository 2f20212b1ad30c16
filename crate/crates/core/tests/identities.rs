use symconv::arith::{Monomial, MultiPoly, Rational, Var};
use symconv::identities::{
    check_identity, derive_corollary, parity_restriction_equivalence, Catalog, IdentityRecord,
    RingValue, Specialization, Status, TheoremId, Variant,
};
use symconv::sequences::{bivariate_sequence, PolyKind};

fn all_pass(id: &str, range: (i64, i64)) -> bool {
    check_identity(id, range)
        .unwrap()
        .iter()
        .all(|v| v.status == Status::Pass)
}

fn first_fail(id: &str, range: (i64, i64)) -> Option<i64> {
    check_identity(id, range)
        .unwrap()
        .into_iter()
        .find(|v| v.status == Status::Fail)
        .map(|v| v.n)
}

/// `h_n(x1, x2)` written out monomial by monomial.
fn complete_homogeneous(n: u32) -> MultiPoly {
    MultiPoly::from_terms((0..=n).map(|i| (Monomial::new([i, n - i, 0, 0, 0]), Rational::one())))
}

#[test]
fn every_record_key_is_unique_and_resolvable() {
    let cat = Catalog::global();
    let mut keys: Vec<String> = cat.records().iter().map(IdentityRecord::key).collect();
    let n = keys.len();
    keys.dedup();
    assert_eq!(keys.len(), n);
    for k in &keys {
        assert_eq!(&cat.lookup(k).unwrap().key(), k);
    }
}

#[test]
fn disputed_records_have_anchors_and_a_corrected_twin() {
    let cat = Catalog::global();
    for r in cat.records().iter().filter(|r| r.disputed) {
        assert!(
            r.anchor.as_deref().is_some_and(|a| !a.is_empty()),
            "{}",
            r.id
        );
        assert!(cat.get(&r.id, Variant::Corrected).is_some(), "{}", r.id);
    }
}

#[test]
fn theorems_hold_on_a_short_range() {
    for t in TheoremId::ALL {
        let key = format!("{t}");
        assert!(all_pass(&key, (0, 10)), "{key}");
    }
}

#[test]
fn printed_misprints_are_caught() {
    assert!(first_fail("T3.3:as_printed", (0, 8)).is_some());
    assert_eq!(first_fail("T3.5b:as_printed", (0, 8)), Some(0));
    assert!(first_fail("C2.1.2:as_printed", (0, 8)).is_some());
    assert!(first_fail("R1.1:as_printed", (0, 8)).is_some());
    assert_eq!(first_fail("C2.1.1:as_printed", (0, 20)), None);
}

#[test]
fn remark_closed_forms_against_monomials() {
    let s = Catalog::global().lookup("R1.1").unwrap();
    for n in 0..=12 {
        let lhs = match s.lhs_eval(n).unwrap() {
            RingValue::Poly(p) => p,
            other => panic!("unexpected ring value {other}"),
        };
        assert_eq!(lhs, complete_homogeneous(n as u32), "S_{n}");
    }
}

#[test]
fn corollary_spot_value() {
    // F = 0, 1, 1, 2 and L_3 = 4 at y = t = 1
    let (fib, binom, lucas3) = ([0, 1, 1, 2], [1, 3, 3, 1], 4);
    let lhs: i64 = (0..=3).map(|k| binom[k] * fib[3 - k] * fib[k]).sum();
    let rhs = (8 * lucas3 - 2) / 5;
    assert_eq!(lhs, 6);
    assert_eq!(rhs, 6);
    let record = Catalog::global().lookup("C2.1.1:as_printed").unwrap();
    let sides = record.sides(3, Specialization::YTOne).unwrap();
    // both sides carry the cleared factor y^2 + 4t = 5
    assert_eq!(sides.lhs.to_string(), "30");
    assert_eq!(sides.rhs.to_string(), "30");
}

#[test]
fn derived_corollaries_specialize() {
    for fam in ["fibonacci", "balancing"] {
        let r = derive_corollary("T2.2b", fam).unwrap();
        for spec in Specialization::ALL {
            let v = r.check_range(0, 8, spec);
            assert!(v.iter().all(|v| v.status == Status::Pass), "{fam} {spec:?}");
        }
    }
}

#[test]
fn parity_forms_agree() {
    for id in ["T3.1", "T3.4a", "T3.4b", "T3.7"] {
        let v = parity_restriction_equivalence(id, (0, 14)).unwrap();
        assert!(v.iter().all(|v| v.status == Status::Pass), "{id}");
    }
}

#[test]
fn lucas_balancing_is_an_integer_sequence_at_one() {
    let one = [(Var::Y, MultiPoly::one()), (Var::T, MultiPoly::one())]
        .into_iter()
        .collect();
    let c: Vec<_> = (0..5)
        .map(|n| {
            bivariate_sequence(PolyKind::BivLucasBalancing, n)
                .substitute(&one)
                .to_string()
        })
        .collect();
    assert_eq!(c, ["1", "3", "17", "99", "577"]);
}
