//! Exhaustive scans of the inequalities, arithmetic-progression equalities,
//! positivity statements and conjectures about 7-core counts.
//!
//! `a7(n)` counts 7-cores of `n`; `a7j(j, n)` restricts to BG-rank `j`;
//! `b(n)` is the coefficient of `q^n` in `E^3(q) E^3(q^7)`. All of them are
//! read from closed-form series, so scans reach far past the oracle bound.

use std::fmt;
use std::sync::Arc;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::expr::eval_str;
use crate::identities::id_order;
use crate::series::TruncSeries;
use crate::theta::euler_e;

pub const DEFAULT_DEPTH: usize = 2000;

/// Coefficient tables for 7-cores up to a fixed order.
#[derive(Clone, Debug)]
pub struct CoreTables {
    order: usize,
    a7: TruncSeries,
    by_rank: [TruncSeries; 4],
    b: TruncSeries,
}

impl CoreTables {
    pub fn new(order: usize) -> Result<Self> {
        let e = |k| euler_e(k, order);
        let a7 = e(7).pow(7).div(&e(1))?;
        let rank_m1 = (e(28).pow(3) * e(14).pow(2) * e(4).pow(3))
            .div(&e(2).pow(2))?
            .shift(3);
        let rank_2 = e(28).pow(7).div(&e(4))?.shift(6);
        let rank_0 = a7.even_part() - &rank_2;
        let rank_1 = a7.odd_part() - &rank_m1;
        let b = e(1).pow(3) * e(7).pow(3);
        Ok(CoreTables {
            order,
            a7,
            by_rank: [rank_m1, rank_0, rank_1, rank_2],
            b,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn a7(&self, n: usize) -> &BigInt {
        self.a7.coeff(n)
    }

    /// Panics unless `-1 <= rank <= 2`.
    pub fn a7j(&self, rank: i64, n: usize) -> &BigInt {
        assert!(
            (-1..=2).contains(&rank),
            "BG-rank of a 7-core lies in -1..=2"
        );
        self.by_rank[(rank + 1) as usize].coeff(n)
    }

    pub fn b(&self, n: usize) -> &BigInt {
        self.b.coeff(n)
    }

    pub fn rank_series(&self, rank: i64) -> &TruncSeries {
        &self.by_rank[(rank + 1) as usize]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClaimKind {
    Theorem,
    Conjecture,
}

impl fmt::Display for ClaimKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            ClaimKind::Theorem => "theorem",
            ClaimKind::Conjecture => "conjecture",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    AtLeast,
    Equal,
}

/// One checked instance: at index `n` the claim compares `lhs` against `rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub n: usize,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScanStatus {
    Holds,
    /// First failing index. Positivity claims report the coefficient as `lhs` and `0` as `rhs`.
    Violation(Instance),
}

#[derive(Clone, Debug)]
pub struct ScanReport {
    pub claim: String,
    pub kind: ClaimKind,
    pub statement: String,
    /// Inclusive range of indices checked; `None` when the order is too small for any instance.
    pub range: Option<(usize, usize)>,
    pub checked: usize,
    pub first_instance: Option<Instance>,
    pub status: ScanStatus,
    pub millis: u128,
}

impl ScanReport {
    pub fn holds(&self) -> bool {
        self.status == ScanStatus::Holds
    }

    /// First negative exponent, for positivity claims that fail.
    pub fn first_negative(&self) -> Option<usize> {
        match &self.status {
            ScanStatus::Violation(i) if i.rhs.is_zero() && i.lhs.is_negative() => Some(i.n),
            _ => None,
        }
    }
}

type Terms = Arc<dyn Fn(&CoreTables, usize) -> (BigInt, BigInt) + Send + Sync>;

/// Indices `n >= start` with `step * n + offset <= order`, optionally filtered.
#[derive(Clone, Copy)]
struct Domain {
    start: usize,
    step: usize,
    offset: usize,
    filter: Option<fn(usize) -> bool>,
}

impl Domain {
    fn linear(start: usize, step: usize, offset: usize) -> Self {
        Domain {
            start,
            step,
            offset,
            filter: None,
        }
    }

    fn last(&self, order: usize) -> Option<usize> {
        let last = order.checked_sub(self.offset)? / self.step;
        (last >= self.start).then_some(last)
    }
}

#[derive(Clone)]
enum Check {
    Relation {
        relation: Relation,
        domain: Domain,
        terms: Terms,
    },
    Positive {
        text: String,
    },
}

#[derive(Clone)]
pub struct Claim {
    pub id: String,
    pub kind: ClaimKind,
    pub statement: String,
    check: Check,
}

impl Claim {
    /// Expression text for positivity claims.
    pub fn expression(&self) -> Option<&str> {
        match &self.check {
            Check::Positive { text } => Some(text),
            Check::Relation { .. } => None,
        }
    }

    pub fn scan(&self, tables: &CoreTables) -> Result<ScanReport> {
        let start = Instant::now();
        let order = tables.order();
        let mut report = match &self.check {
            Check::Relation {
                relation,
                domain,
                terms,
            } => scan_relation(self, *relation, *domain, terms, tables),
            Check::Positive { text } => positivity(
                &self.id,
                self.kind,
                &self.statement,
                &eval_str(text, order)?,
            ),
        };
        report.millis = start.elapsed().as_millis();
        Ok(report)
    }
}

fn scan_relation(
    claim: &Claim,
    relation: Relation,
    domain: Domain,
    terms: &Terms,
    tables: &CoreTables,
) -> ScanReport {
    let mut report = ScanReport {
        claim: claim.id.clone(),
        kind: claim.kind,
        statement: claim.statement.clone(),
        range: None,
        checked: 0,
        first_instance: None,
        status: ScanStatus::Holds,
        millis: 0,
    };
    let Some(last) = domain.last(tables.order()) else {
        return report;
    };
    report.range = Some((domain.start, last));
    for n in domain.start..=last {
        if domain.filter.is_some_and(|keep| !keep(n)) {
            continue;
        }
        let (lhs, rhs) = terms(tables, n);
        report.checked += 1;
        let ok = match relation {
            Relation::AtLeast => lhs >= rhs,
            Relation::Equal => lhs == rhs,
        };
        let instance = Instance { n, lhs, rhs };
        if report.first_instance.is_none() {
            report.first_instance = Some(instance.clone());
        }
        if !ok {
            report.status = ScanStatus::Violation(instance);
            break;
        }
    }
    report
}

/// Scans every coefficient of `series` for a negative value.
pub fn positivity(
    claim: &str,
    kind: ClaimKind,
    statement: &str,
    series: &TruncSeries,
) -> ScanReport {
    let status = match series.first_negative() {
        None => ScanStatus::Holds,
        Some(n) => ScanStatus::Violation(Instance {
            n,
            lhs: series.coeff(n).clone(),
            rhs: BigInt::zero(),
        }),
    };
    let checked = match &status {
        ScanStatus::Holds => series.order() + 1,
        ScanStatus::Violation(i) => i.n + 1,
    };
    ScanReport {
        claim: claim.to_string(),
        kind,
        statement: statement.to_string(),
        range: Some((0, series.order())),
        checked,
        first_instance: Some(Instance {
            n: 0,
            lhs: series.coeff(0).clone(),
            rhs: BigInt::zero(),
        }),
        status,
        millis: 0,
    }
}

fn relation(
    id: &str,
    kind: ClaimKind,
    statement: &str,
    relation: Relation,
    domain: Domain,
    terms: impl Fn(&CoreTables, usize) -> (BigInt, BigInt) + Send + Sync + 'static,
) -> Claim {
    Claim {
        id: id.to_string(),
        kind,
        statement: statement.to_string(),
        check: Check::Relation {
            relation,
            domain,
            terms: Arc::new(terms),
        },
    }
}

fn positive(id: &str, kind: ClaimKind, statement: &str, text: &str) -> Claim {
    Claim {
        id: id.to_string(),
        kind,
        statement: statement.to_string(),
        check: Check::Positive {
            text: text.to_string(),
        },
    }
}

fn scaled(c: i64, v: &BigInt) -> BigInt {
    v * c
}

/// Every claim, sorted by id.
pub fn standard_claims() -> Vec<Claim> {
    use ClaimKind::{Conjecture, Theorem};
    use Relation::{AtLeast, Equal};
    let mut v = vec![
        relation(
            "thm-1.11",
            Theorem,
            "a7(2n+2) >= 2 a7(n)",
            AtLeast,
            Domain::linear(0, 2, 2),
            |t, n| (t.a7(2 * n + 2).clone(), scaled(2, t.a7(n))),
        ),
        relation(
            "thm-1.12",
            Theorem,
            "a7(4n+6) >= 10 a7(n)",
            AtLeast,
            Domain::linear(0, 4, 6),
            |t, n| (t.a7(4 * n + 6).clone(), scaled(10, t.a7(n))),
        ),
        relation(
            "thm-1.13",
            Theorem,
            "a7,0(n) >= 9 a7,2(n)",
            AtLeast,
            Domain::linear(0, 1, 0),
            |t, n| (t.a7j(0, n).clone(), scaled(9, t.a7j(2, n))),
        ),
        relation(
            "thm-1.14",
            Theorem,
            "a7,1(n) >= 2 a7,-1(n)",
            AtLeast,
            Domain::linear(0, 1, 0),
            |t, n| (t.a7j(1, n).clone(), scaled(2, t.a7j(-1, n))),
        ),
        relation(
            "cor-4.1",
            Theorem,
            "3 a7(n-1) + b(n) >= 0 for n >= 1",
            AtLeast,
            Domain::linear(1, 1, 0),
            |t, n| (scaled(3, t.a7(n - 1)) + t.b(n), BigInt::zero()),
        ),
        relation(
            "b-vanishing",
            Theorem,
            "b(n) = 0 for n = 2, 4, 5 (mod 7)",
            Equal,
            Domain {
                filter: Some(|n| matches!(n % 7, 2 | 4 | 5)),
                ..Domain::linear(0, 1, 0)
            },
            |t, n| (t.b(n).clone(), BigInt::zero()),
        ),
        relation(
            "conj-6-refined-3",
            Conjecture,
            "a7(2n+2) >= 3 a7(n) for n >= 1",
            AtLeast,
            Domain::linear(1, 2, 2),
            |t, n| (t.a7(2 * n + 2).clone(), scaled(3, t.a7(n))),
        ),
        relation(
            "conj-6-refined-15",
            Conjecture,
            "a7(4n+6) >= 15 a7(n) for n >= 1",
            AtLeast,
            Domain::linear(1, 4, 6),
            |t, n| (t.a7(4 * n + 6).clone(), scaled(15, t.a7(n))),
        ),
        relation(
            "conj-6-refined-11",
            Conjecture,
            "a7(4n+6) >= 11 a7(n) for n >= 0",
            AtLeast,
            Domain::linear(0, 4, 6),
            |t, n| (t.a7(4 * n + 6).clone(), scaled(11, t.a7(n))),
        ),
    ];

    for r in [1usize, 2, 6] {
        v.push(relation(
            &format!("thm-1.15-r{r}"),
            Theorem,
            &format!("a7(28n+{}) = 5 a7(14n+{})", 4 * r, 2 * r - 1),
            Equal,
            Domain::linear(0, 28, 4 * r),
            move |t, n| {
                (
                    t.a7(28 * n + 4 * r).clone(),
                    scaled(5, t.a7(14 * n + 2 * r - 1)),
                )
            },
        ));
    }
    for r in [2usize, 4, 5] {
        v.push(relation(
            &format!("thm-1.16-r{r}"),
            Theorem,
            &format!(
                "a7(28n+{}) + 4 a7(7n+{}) = 5 a7(14n+{})",
                4 * r + 2,
                r - 1,
                2 * r
            ),
            Equal,
            Domain::linear(0, 28, 4 * r + 2),
            move |t, n| {
                (
                    t.a7(28 * n + 4 * r + 2) + scaled(4, t.a7(7 * n + r - 1)),
                    scaled(5, t.a7(14 * n + 2 * r)),
                )
            },
        ));
    }
    for r in [10usize, 17, 45] {
        v.push(relation(
            &format!("conj-progression-r{r}"),
            Conjecture,
            &format!("a7(196n+{}) = 5 a7(98n+{})", 4 * r, 2 * r - 1),
            Equal,
            Domain::linear(0, 196, 4 * r),
            move |t, n| {
                (
                    t.a7(196 * n + 4 * r).clone(),
                    scaled(5, t.a7(98 * n + 2 * r - 1)),
                )
            },
        ));
    }

    let positives = [
        (
            "pos-4.6",
            Theorem,
            "E^4(q^14)/(E(q^4)E(q^28)) omega(q^2) is positive",
            "E(q^14)^4/(E(q^4)*E(q^28))*omega(q^2)",
        ),
        (
            "pos-4.7",
            Theorem,
            "E^7(q^7)/E(q) - 2q^2 E^7(q^14)/E(q^2) is positive",
            "E(q^7)^7/E(q) - 2*q^2*E(q^14)^7/E(q^2)",
        ),
        (
            "pos-4.8",
            Theorem,
            "f(q^4,q^24) f^3(q^12,q^16) + q^6 f(q^10,q^18) f^3(q^2,q^26) is positive",
            "f(q^4, q^24)*f(q^12, q^16)^3 + q^6*f(q^10, q^18)*f(q^2, q^26)^3",
        ),
        (
            "pos-4.12",
            Theorem,
            "odd part of E^7(q^7)/E(q) minus 3 C_{7,-1}(q) is positive",
            "odd(E(q^7)^7/E(q)) - 3*q^3*E(q^28)^3*E(q^14)^2*E(q^4)^3/E(q^2)^2",
        ),
        (
            "pos-4.18",
            Theorem,
            "10q^3 E^7(q^14)/E(q^2) + sigma(q^2) omega(q) E^4(q^7)/(E(q^2)E(q^14)) is positive",
            "10*q^3*E(q^14)^7/E(q^2) + sigma(q^2)*omega(q)*E(q^7)^4/(E(q^2)*E(q^14))",
        ),
        (
            "pos-1.23-a",
            Theorem,
            "sigma(q^4) f(q,q^13) f(q^3,q^11) f(q^5,q^9) phi(q^7) is positive",
            "sigma(q^4)*f(q, q^13)*f(q^3, q^11)*f(q^5, q^9)*phi(q^7)",
        ),
        (
            "pos-1.23-b",
            Theorem,
            "2q^3 E^3(q^28) E^2(q^14) E^3(q^4)/E^2(q^2) is positive",
            "2*q^3*E(q^28)^3*E(q^14)^2*E(q^4)^3/E(q^2)^2",
        ),
        (
            "pos-1.23-c",
            Theorem,
            "6q^6 E^7(q^28)/E(q^4) is positive",
            "6*q^6*E(q^28)^7/E(q^4)",
        ),
        (
            "pos-1.23-d",
            Theorem,
            "2q^2 E^7(q^14)/E(q^2) is positive",
            "2*q^2*E(q^14)^7/E(q^2)",
        ),
        (
            "conj-6.1",
            Conjecture,
            "psi(q)(psi^2(q) - psi^2(q^7)) is positive",
            "psi(q)*(psi(q)^2 - psi(q^7)^2)",
        ),
        (
            "conj-6.2",
            Conjecture,
            "psi(q)(phi^2(q) - phi^2(q^7)) is positive",
            "psi(q)*(phi(q)^2 - phi(q^7)^2)",
        ),
        (
            "conj-6.3",
            Conjecture,
            "phi(q)(psi^2(q) - psi^2(q^7)) is positive",
            "phi(q)*(psi(q)^2 - psi(q^7)^2)",
        ),
        (
            "conj-6.4",
            Conjecture,
            "psi(q)(phi^2(q) - psi^2(q^7)) is positive",
            "psi(q)*(phi(q)^2 - psi(q^7)^2)",
        ),
    ];
    for (id, kind, statement, text) in positives {
        v.push(positive(id, kind, statement, text));
    }

    v.sort_by(|a, b| id_order(&a.id, &b.id));
    v
}

/// Runs claims against shared tables built once per order.
pub struct Scanner {
    claims: Vec<Claim>,
    tables: CoreTables,
}

impl Scanner {
    pub fn new(order: usize) -> Result<Self> {
        Ok(Scanner {
            claims: standard_claims(),
            tables: CoreTables::new(order)?,
        })
    }

    pub fn claims(&self) -> &[Claim] {
        &self.claims
    }

    pub fn tables(&self) -> &CoreTables {
        &self.tables
    }

    pub fn scan(&self, id: &str) -> Result<ScanReport> {
        let claim = self
            .claims
            .iter()
            .find(|c| c.id == id)
            .ok_or_else(|| Error::UnknownClaim(id.to_string()))?;
        claim.scan(&self.tables)
    }

    /// Scans the selected claims in parallel; reports come back sorted by id.
    pub fn scan_where(&self, keep: impl Fn(&Claim) -> bool + Sync) -> Result<Vec<ScanReport>> {
        self.claims
            .par_iter()
            .filter(|c| keep(c))
            .map(|c| c.scan(&self.tables))
            .collect()
    }

    pub fn scan_all(&self) -> Result<Vec<ScanReport>> {
        self.scan_where(|_| true)
    }

    pub fn scan_kind(&self, kind: ClaimKind) -> Result<Vec<ScanReport>> {
        self.scan_where(|c| c.kind == kind)
    }
}

/// (1.11) through (1.16), with (1.15) and (1.16) split by residue.
pub fn check_theorem_1_1(order: usize) -> Result<Vec<ScanReport>> {
    Scanner::new(order)?.scan_where(|c| c.id.starts_with("thm-1.1"))
}

pub fn check_corollary_4_1(order: usize) -> Result<ScanReport> {
    Scanner::new(order)?.scan("cor-4.1")
}

pub fn check_b_vanishing(order: usize) -> Result<ScanReport> {
    Scanner::new(order)?.scan("b-vanishing")
}

pub fn check_extended_progressions(order: usize) -> Result<Vec<ScanReport>> {
    Scanner::new(order)?.scan_where(|c| c.id.starts_with("conj-progression"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn instance(n: usize, lhs: i64, rhs: i64) -> Instance {
        Instance {
            n,
            lhs: lhs.into(),
            rhs: rhs.into(),
        }
    }

    #[test]
    fn first_instances_match_small_values() {
        let scanner = Scanner::new(60).unwrap();
        let first = |id| scanner.scan(id).unwrap().first_instance.unwrap();
        assert_eq!(first("thm-1.11"), instance(0, 2, 2));
        assert_eq!(first("thm-1.12"), instance(0, 11, 10));
        assert_eq!(first("thm-1.15-r1"), instance(0, 5, 5));
        assert_eq!(first("cor-4.1"), instance(1, 0, 0));
    }

    #[test]
    fn b_coefficients() {
        let t = CoreTables::new(20).unwrap();
        assert_eq!(*t.b(1), BigInt::from(-3));
        assert!(t.b(2).is_zero());
        assert!(t.b(9).is_zero());
        assert!(check_b_vanishing(20).unwrap().holds());
    }

    #[test]
    fn rank_tables_sum_to_a7() {
        let t = CoreTables::new(100).unwrap();
        for n in 0..=100 {
            let sum: BigInt = (-1..=2).map(|j| t.a7j(j, n)).sum();
            assert_eq!(&sum, t.a7(n));
        }
        assert_eq!(*t.a7j(2, 6), BigInt::from(1));
        assert_eq!(*t.a7j(-1, 3), BigInt::from(1));
    }

    #[test]
    fn positivity_negative_control() {
        let report = positivity("e", ClaimKind::Theorem, "E(q)", &euler_e(1, 50));
        assert_eq!(report.first_negative(), Some(1));
        assert_eq!(report.checked, 2);
    }

    #[test]
    fn domain_bounds() {
        assert_eq!(Domain::linear(0, 2, 2).last(10), Some(4));
        assert_eq!(Domain::linear(0, 28, 24).last(23), None);
        assert_eq!(Domain::linear(1, 4, 6).last(9), None);
    }

    #[test]
    fn everything_holds_to_300() {
        let reports = Scanner::new(300).unwrap().scan_all().unwrap();
        for r in &reports {
            assert!(r.holds(), "{} failed: {:?}", r.claim, r.status);
        }
        assert_eq!(reports.len(), standard_claims().len());
    }

    #[test]
    fn too_strong_constant_is_caught() {
        let claim = relation(
            "x",
            ClaimKind::Conjecture,
            "a7(4n+6) >= 15 a7(n)",
            Relation::AtLeast,
            Domain::linear(0, 4, 6),
            |t, n| (t.a7(4 * n + 6).clone(), scaled(15, t.a7(n))),
        );
        let report = claim.scan(&CoreTables::new(50).unwrap()).unwrap();
        assert_eq!(report.status, ScanStatus::Violation(instance(0, 11, 15)));
        assert_eq!(report.first_negative(), None);
    }

    #[test]
    fn unknown_claim() {
        assert!(matches!(
            Scanner::new(5).unwrap().scan("nope"),
            Err(Error::UnknownClaim(_))
        ));
    }
}
