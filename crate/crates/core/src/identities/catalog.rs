//! The registry of identity records and the per-index checker.

use std::sync::OnceLock;

use rayon::prelude::*;

use crate::quadext::Family;

use super::corollaries::{printed_corollaries, printed_env, PrintedCorollary};
use super::env::{indeterminate_env, root_env};
use super::extras::{extra_sides, ExtraId};
use super::theorems::{parity_sides, theorem_sides, TheoremId};
use super::{
    EvalError, IdentityError, IdentityVerdict, RingKind, RingValue, Sides, Specialization, Status,
    Variant,
};

/// Default upper index for identities evaluated with Binet roots.
pub const COROLLARY_MAX_N: i64 = 20;

/// Where a record's two sides come from.
#[derive(Clone, Debug)]
pub enum RecordSource {
    Theorem(TheoremId),
    /// A theorem with the letters replaced by a family's roots.
    Derived {
        theorem: TheoremId,
        family: Family,
    },
    Printed(PrintedCorollary),
    Extra(ExtraId),
}

#[derive(Clone, Debug)]
pub struct IdentityRecord {
    pub id: String,
    pub description: String,
    pub ring: RingKind,
    pub variant: Variant,
    pub range: (i64, i64),
    pub parity_restriction: bool,
    /// An as-printed record that has a corrected counterpart.
    pub disputed: bool,
    /// Printed fragment, for errata.
    pub anchor: Option<String>,
    pub source: RecordSource,
}

fn ring_of(family: Family) -> RingKind {
    match family {
        Family::Fibonacci => RingKind::FibonacciRoots,
        Family::Balancing => RingKind::BalancingRoots,
    }
}

impl IdentityRecord {
    /// `id:variant`
    pub fn key(&self) -> String {
        format!("{}:{}", self.id, self.variant)
    }

    /// Builds any tables a check up to `max_n` needs, so parallel cells
    /// share them instead of racing to build their own.
    pub fn prepare(&self, max_n: i64, spec: Specialization) -> Result<(), EvalError> {
        let cap = (max_n.max(0) + 2) as usize;
        match &self.source {
            RecordSource::Theorem(_) => {
                indeterminate_env(cap);
            }
            RecordSource::Derived { family, .. } => {
                root_env(*family, spec, cap)?;
            }
            RecordSource::Printed(c) => {
                printed_env(c.family, spec, cap)?;
            }
            RecordSource::Extra(_) => {}
        }
        Ok(())
    }

    pub fn sides(&self, n: i64, spec: Specialization) -> Result<Sides<RingValue>, EvalError> {
        let cap = (n + 2) as usize;
        match &self.source {
            RecordSource::Theorem(t) => {
                let env = indeterminate_env(cap);
                Ok(theorem_sides(&*env, *t, self.variant, n)?.map(RingValue::Poly))
            }
            RecordSource::Derived { theorem, family } => {
                let env = root_env(*family, spec, cap)?;
                Ok(theorem_sides(&*env, *theorem, Variant::Corrected, n)?.map(RingValue::Quad))
            }
            RecordSource::Printed(c) => {
                let env = printed_env(c.family, spec, cap)?;
                Ok(c.sides(&env, n)?.map(RingValue::Quad))
            }
            RecordSource::Extra(id) => extra_sides(*id, self.variant, spec, n),
        }
    }

    pub fn lhs_eval(&self, n: i64) -> Result<RingValue, EvalError> {
        Ok(self.sides(n, Specialization::Symbolic)?.lhs)
    }

    pub fn rhs_eval(&self, n: i64) -> Result<RingValue, EvalError> {
        Ok(self.sides(n, Specialization::Symbolic)?.rhs)
    }

    fn verdict(&self, n: i64, status: Status) -> IdentityVerdict {
        IdentityVerdict {
            id: self.id.clone(),
            variant: self.variant,
            n,
            status,
            lhs: None,
            rhs: None,
            note: None,
        }
    }

    pub fn check(&self, n: i64, spec: Specialization) -> IdentityVerdict {
        if spec != Specialization::Symbolic && self.ring == RingKind::Indeterminate {
            return IdentityVerdict {
                note: Some("specialization applies to root rings only".into()),
                ..self.verdict(n, Status::Skipped)
            };
        }
        verdict_from(self.verdict(n, Status::Pass), self.sides(n, spec))
    }

    /// One verdict per index, in index order; cells run in parallel.
    pub fn check_range(&self, lo: i64, hi: i64, spec: Specialization) -> Vec<IdentityVerdict> {
        let lo = lo.max(0);
        if let Err(e) = self.prepare(hi, spec) {
            return (lo..=hi)
                .map(|n| IdentityVerdict {
                    note: Some(e.to_string()),
                    ..self.verdict(n, Status::Fail)
                })
                .collect();
        }
        (lo..=hi)
            .into_par_iter()
            .map(|n| self.check(n, spec))
            .collect()
    }
}

fn verdict_from(
    base: IdentityVerdict,
    sides: Result<Sides<RingValue>, EvalError>,
) -> IdentityVerdict {
    match sides.and_then(|s| s.holds_exactly().map(|ok| (ok, s))) {
        Ok((true, _)) => base,
        Ok((false, s)) => IdentityVerdict {
            status: Status::Fail,
            lhs: Some(s.lhs.to_string()),
            rhs: Some(s.rhs.to_string()),
            ..base
        },
        Err(EvalError::Undefined(why)) => IdentityVerdict {
            status: Status::Skipped,
            note: Some(why),
            ..base
        },
        Err(e) => IdentityVerdict {
            status: Status::Fail,
            note: Some(e.to_string()),
            ..base
        },
    }
}

fn theorem_record(t: TheoremId, variant: Variant) -> IdentityRecord {
    IdentityRecord {
        id: t.name().to_string(),
        description: t.description(variant).to_string(),
        ring: RingKind::Indeterminate,
        variant,
        range: (0, t.default_max()),
        parity_restriction: t.parity_restricted(),
        disputed: t.is_disputed() && variant == Variant::AsPrinted,
        anchor: t.anchor().map(str::to_string),
        source: RecordSource::Theorem(t),
    }
}

fn derived_record(id: String, theorem: TheoremId, family: Family) -> IdentityRecord {
    IdentityRecord {
        description: format!("{theorem} with the {family} roots substituted for x1, x2"),
        id,
        ring: ring_of(family),
        variant: Variant::Corrected,
        range: (0, COROLLARY_MAX_N),
        parity_restriction: theorem.parity_restricted(),
        disputed: false,
        anchor: None,
        source: RecordSource::Derived { theorem, family },
    }
}

fn extra_record(id: ExtraId, variant: Variant) -> IdentityRecord {
    IdentityRecord {
        id: id.name().to_string(),
        description: id.description(variant).to_string(),
        ring: id.ring(),
        variant,
        range: id.range(),
        parity_restriction: false,
        disputed: id.is_disputed() && variant == Variant::AsPrinted,
        anchor: id.anchor().map(str::to_string),
        source: RecordSource::Extra(id),
    }
}

/// Every record, sorted by id and then variant.
///
/// Statements without a known misprint are registered once, as printed.
/// Disputed theorems and all corollaries carry both variants; corrected
/// corollaries are the machine-derived specializations of their theorem.
pub fn register_catalog() -> Vec<IdentityRecord> {
    let mut out = Vec::new();
    for t in TheoremId::ALL {
        out.push(theorem_record(t, Variant::AsPrinted));
        if t.is_disputed() {
            out.push(theorem_record(t, Variant::Corrected));
        }
    }
    for c in printed_corollaries() {
        out.push(derived_record(c.id.to_string(), c.theorem, c.family));
        out.push(IdentityRecord {
            id: c.id.to_string(),
            description: c.description.to_string(),
            ring: ring_of(c.family),
            variant: Variant::AsPrinted,
            range: (0, COROLLARY_MAX_N),
            parity_restriction: c.parity_restriction,
            disputed: true,
            anchor: Some(c.anchor.to_string()),
            source: RecordSource::Printed(c),
        });
    }
    for id in ExtraId::ALL {
        out.push(extra_record(id, Variant::AsPrinted));
        if id.is_disputed() {
            out.push(extra_record(id, Variant::Corrected));
        }
    }
    out.sort_by(|a, b| (&a.id, a.variant).cmp(&(&b.id, b.variant)));
    out
}

#[derive(Debug)]
pub struct Catalog {
    records: Vec<IdentityRecord>,
}

impl Default for Catalog {
    fn default() -> Self {
        Catalog {
            records: register_catalog(),
        }
    }
}

impl Catalog {
    pub fn global() -> &'static Catalog {
        static CATALOG: OnceLock<Catalog> = OnceLock::new();
        CATALOG.get_or_init(Catalog::default)
    }

    pub fn records(&self) -> &[IdentityRecord] {
        &self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn get(&self, id: &str, variant: Variant) -> Option<&IdentityRecord> {
        self.records
            .iter()
            .find(|r| r.id == id && r.variant == variant)
    }

    /// All variants registered under `id`.
    pub fn variants(&self, id: &str) -> Vec<&IdentityRecord> {
        self.records.iter().filter(|r| r.id == id).collect()
    }

    /// Resolves `ID` or `ID:variant`. A bare id picks the corrected variant
    /// when there is one.
    pub fn lookup(&self, key: &str) -> Result<&IdentityRecord, IdentityError> {
        let unknown = || IdentityError::Unknown(key.to_string());
        match key.split_once(':') {
            Some((id, v)) => {
                let variant: Variant = v.parse()?;
                self.get(id, variant).ok_or_else(unknown)
            }
            None => self
                .get(key, Variant::Corrected)
                .or_else(|| self.get(key, Variant::AsPrinted))
                .ok_or_else(unknown),
        }
    }
}

pub fn check_identity(key: &str, range: (i64, i64)) -> Result<Vec<IdentityVerdict>, IdentityError> {
    check_identity_specialized(key, range, Specialization::Symbolic)
}

pub fn check_identity_specialized(
    key: &str,
    range: (i64, i64),
    spec: Specialization,
) -> Result<Vec<IdentityVerdict>, IdentityError> {
    let record = Catalog::global().lookup(key)?;
    Ok(record.check_range(range.0, range.1, spec))
}

/// The theorem evaluated with the roots of `family` in place of the letters.
pub fn derive_corollary(theorem_id: &str, family: &str) -> Result<IdentityRecord, IdentityError> {
    let theorem: TheoremId = theorem_id.parse()?;
    let family: Family = family
        .parse()
        .map_err(|_| IdentityError::UnknownFamily(family.to_string()))?;
    Ok(derived_record(
        format!("{theorem}@{family}"),
        theorem,
        family,
    ))
}

/// Restricted sum against unrestricted sum minus the moved boundary term,
/// for every theorem stated with a parity restriction; other ids get
/// skipped verdicts.
pub fn parity_restriction_equivalence(
    key: &str,
    range: (i64, i64),
) -> Result<Vec<IdentityVerdict>, IdentityError> {
    let record = Catalog::global().lookup(key)?;
    let env = indeterminate_env((range.1.max(0) + 2) as usize);
    let base = |n| IdentityVerdict {
        id: record.id.clone(),
        variant: record.variant,
        n,
        status: Status::Pass,
        lhs: None,
        rhs: None,
        note: None,
    };
    Ok((range.0.max(0)..=range.1)
        .into_par_iter()
        .map(|n| {
            let found = match &record.source {
                RecordSource::Theorem(t) => parity_sides(&*env, *t, n),
                _ => None,
            };
            match found {
                Some(sides) => verdict_from(base(n), sides.map(|s| s.map(RingValue::Poly))),
                None => IdentityVerdict {
                    status: Status::Skipped,
                    note: Some("no parity-restricted form".into()),
                    ..base(n)
                },
            }
        })
        .collect())
}
