//! Registry of q-series identities, each checked coefficientwise to a
//! requested order, plus the Hecke operator `T2`.
//!
//! Every side of an identity carries a programmatic builder. Sides that the
//! expression language can state also carry their text, so the two
//! transcriptions can be checked against each other.

use std::sync::Arc;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::{lattice_theta, LatticeSpec, Oracle};
use crate::series::{Comparison, TruncSeries};
use crate::theta::{self, Sign, ThetaArgs};

pub const DEFAULT_ORDER: usize = 200;

/// Highest exponent compared for entries whose side comes from the brute-force oracle.
pub const ORACLE_DEPTH: usize = 30;

/// `T2(sum a(n) q^n) = sum (a(2n) + 4 a(n/2)) q^n`, with `a(n/2) = 0` for odd `n`.
/// The result has order `floor(order / 2)`.
pub fn hecke_t2(a: &TruncSeries) -> TruncSeries {
    let order = a.order() / 2;
    let coeffs = (0..=order)
        .map(|n| {
            let mut c = a.coeff(2 * n).clone();
            if n % 2 == 0 {
                c += a.coeff(n / 2) * 4;
            }
            c
        })
        .collect();
    TruncSeries::from_coeffs(coeffs)
}

pub type Builder = Arc<dyn Fn(usize) -> Result<TruncSeries> + Send + Sync>;

/// One side of an identity.
#[derive(Clone)]
pub struct Side {
    pub text: Option<String>,
    pub build: Builder,
}

impl Side {
    pub fn new(
        text: Option<&str>,
        build: impl Fn(usize) -> Result<TruncSeries> + Send + Sync + 'static,
    ) -> Self {
        Side {
            text: text.map(str::to_string),
            build: Arc::new(build),
        }
    }
}

#[derive(Clone)]
pub struct IdentityRecord {
    pub id: String,
    /// Human-readable statement of where the identity comes from.
    pub reference: String,
    pub lhs: Side,
    pub rhs: Side,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail {
        exponent: usize,
        lhs: BigInt,
        rhs: BigInt,
    },
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub id: String,
    pub reference: String,
    /// Highest exponent compared.
    pub order: usize,
    pub status: Status,
    pub millis: u128,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// One line-delimited JSON record with the frozen field set.
    pub fn to_record(&self) -> ReportRecord {
        let (status, mismatch_exponent, lhs_coeff, rhs_coeff) = match &self.status {
            Status::Pass => ("pass", None, None, None),
            Status::Fail { exponent, lhs, rhs } => (
                "fail",
                Some(*exponent),
                Some(lhs.to_string()),
                Some(rhs.to_string()),
            ),
        };
        ReportRecord {
            id: self.id.clone(),
            paper_ref: self.reference.clone(),
            order: self.order,
            status,
            mismatch_exponent,
            lhs_coeff,
            rhs_coeff,
            millis: self.millis,
        }
    }
}

/// Serialized form of a [`VerificationReport`]. Coefficients are decimal strings.
#[derive(Clone, Debug, Serialize)]
pub struct ReportRecord {
    pub id: String,
    pub paper_ref: String,
    pub order: usize,
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mismatch_exponent: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs_coeff: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs_coeff: Option<String>,
    pub millis: u128,
}

#[derive(Clone, Default)]
pub struct Registry {
    records: Vec<IdentityRecord>,
}

impl Registry {
    /// Records are kept sorted by [`id_order`]. Panics on duplicate ids.
    pub fn new(mut records: Vec<IdentityRecord>) -> Self {
        records.sort_by(|a, b| id_order(&a.id, &b.id));
        for pair in records.windows(2) {
            assert!(
                pair[0].id != pair[1].id,
                "duplicate identity id {}",
                pair[0].id
            );
        }
        Registry { records }
    }

    pub fn standard() -> Self {
        Self::new(standard_records())
    }

    pub fn records(&self) -> &[IdentityRecord] {
        &self.records
    }

    pub fn get(&self, id: &str) -> Option<&IdentityRecord> {
        self.records.iter().find(|r| r.id == id)
    }

    pub fn verify(&self, id: &str, order: usize) -> Result<VerificationReport> {
        let record = self
            .get(id)
            .ok_or_else(|| Error::UnknownIdentity(id.to_string()))?;
        verify_record(record, order)
    }

    /// Verifies every identity; reports come back in registry order.
    pub fn verify_all(&self, order: usize) -> Result<Vec<VerificationReport>> {
        self.records
            .par_iter()
            .map(|r| verify_record(r, order))
            .collect()
    }
}

/// Natural ordering of ids: digit runs compare numerically, so `eq-1.7` sorts before `eq-1.17`.
pub fn id_order(a: &str, b: &str) -> std::cmp::Ordering {
    fn chunks(s: &str) -> Vec<(bool, &str)> {
        let mut out = Vec::new();
        let mut start = 0;
        let bytes = s.as_bytes();
        for i in 1..=bytes.len() {
            if i == bytes.len() || bytes[i].is_ascii_digit() != bytes[start].is_ascii_digit() {
                out.push((bytes[start].is_ascii_digit(), &s[start..i]));
                start = i;
            }
        }
        out
    }
    let key = |s| {
        chunks(s)
            .into_iter()
            .map(|(digits, c)| match digits {
                true => (
                    c.trim_start_matches('0').len(),
                    c.trim_start_matches('0').to_string(),
                    String::new(),
                ),
                false => (0, String::new(), c.to_string()),
            })
            .collect::<Vec<_>>()
    };
    key(a).cmp(&key(b)).then_with(|| a.cmp(b))
}

pub fn verify_record(record: &IdentityRecord, order: usize) -> Result<VerificationReport> {
    let start = Instant::now();
    let lhs = (record.lhs.build)(order)?;
    let rhs = (record.rhs.build)(order)?;
    let status = match lhs.compare(&rhs) {
        Comparison::Equal { .. } => Status::Pass,
        Comparison::Mismatch { exponent, lhs, rhs } => Status::Fail { exponent, lhs, rhs },
    };
    Ok(VerificationReport {
        id: record.id.clone(),
        reference: record.reference.clone(),
        order: lhs.order().min(rhs.order()),
        status,
        millis: start.elapsed().as_millis(),
    })
}

// ---------------------------------------------------------------------------
// programmatic building blocks

/// Shorthands for series at a fixed truncation order.
#[derive(Clone, Copy)]
struct At(usize);

impl At {
    fn e(self, k: usize) -> TruncSeries {
        theta::euler_e(k, self.0)
    }
    fn phi(self, k: usize) -> TruncSeries {
        theta::phi(k, self.0)
    }
    fn psi(self, k: usize) -> TruncSeries {
        theta::psi(k, self.0)
    }
    fn chi(self, k: usize) -> TruncSeries {
        theta::chi_neg(k, self.0)
    }
    fn sigma(self, k: usize) -> TruncSeries {
        theta::sigma(k, self.0)
    }
    fn omega(self, k: usize) -> TruncSeries {
        theta::omega(k, self.0)
    }
    fn f(self, r: usize, s: usize) -> TruncSeries {
        theta::theta_f(ThetaArgs::positive(r, s), self.0)
    }
    fn f_neg(self, r: usize, s: usize) -> TruncSeries {
        theta::theta_f(
            ThetaArgs::new(Sign::Minus, r, Sign::Minus, s).expect("r + s >= 1"),
            self.0,
        )
    }
    fn q(self, k: usize) -> TruncSeries {
        TruncSeries::monomial(k, self.0)
    }
    #[cfg(test)]
    fn c(self, v: i64) -> TruncSeries {
        TruncSeries::constant(BigInt::from(v), self.0)
    }

    /// `E^7(q^7) / E(q)`
    fn cores(self) -> Result<TruncSeries> {
        Ok(self.e(7).pow(7).div(&self.e(1))?)
    }
    /// `E^7(q^14) / E(q^2)`
    fn cores2(self) -> Result<TruncSeries> {
        Ok(self.e(14).pow(7).div(&self.e(2))?)
    }
    /// `E^7(q^28) / E(q^4)`
    fn cores4(self) -> Result<TruncSeries> {
        Ok(self.e(28).pow(7).div(&self.e(4))?)
    }
    /// `E^3(q^28) E^2(q^14) E^3(q^4) / E^2(q^2)`
    fn rank_m1_quotient(self) -> Result<TruncSeries> {
        let num = self.e(28).pow(3) * self.e(14).pow(2) * self.e(4).pow(3);
        Ok(num.div(&self.e(2).pow(2))?)
    }
    /// `q^3 E^3(q^28) E^2(q^14) E^3(q^4) / E^2(q^2)`
    fn rank_m1(self) -> Result<TruncSeries> {
        Ok(self.q(3) * self.rank_m1_quotient()?)
    }
    /// `q^6 E^7(q^28) / E(q^4)`
    fn rank_2(self) -> Result<TruncSeries> {
        Ok(self.q(6) * self.cores4()?)
    }
    /// `E(q^28) E^3(q^14) E(q^4) / E(q^2)`
    fn g(self) -> Result<TruncSeries> {
        let num = self.e(28) * self.e(14).pow(3) * self.e(4);
        Ok(num.div(&self.e(2))?)
    }
    /// `E^4(q^14) / (E(q^4) E(q^28))`
    fn h(self) -> Result<TruncSeries> {
        Ok(self.e(14).pow(4).div(&(self.e(4) * self.e(28)))?)
    }
    /// `E(q^14) E^3(q^7) E(q^2) / E(q)`
    fn j(self) -> Result<TruncSeries> {
        let num = self.e(14) * self.e(7).pow(3) * self.e(2);
        Ok(num.div(&self.e(1))?)
    }
    /// `f(q, q^13) f(q^3, q^11) f(q^5, q^9)`
    fn fff13(self) -> TruncSeries {
        self.f(1, 13) * self.f(3, 11) * self.f(5, 9)
    }
    /// `f(q, q^6) f(q^2, q^5) f(q^3, q^4)`
    fn fff7(self) -> TruncSeries {
        self.f(1, 6) * self.f(2, 5) * self.f(3, 4)
    }
    fn lattice(self, rank: i64) -> TruncSeries {
        lattice_theta(
            &LatticeSpec::septic_rank(rank).expect("rank in -1..=2"),
            self.0,
        )
    }
}

fn oracle_rank_series(rank: i64, order: usize) -> Result<TruncSeries> {
    let oracle = Oracle::default();
    let coeffs = (0..=order.min(ORACLE_DEPTH))
        .map(|n| Ok(BigInt::from(oracle.count_cores_by_rank(n, 7, rank)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(TruncSeries::from_coeffs(coeffs))
}

fn record(id: &str, reference: &str, lhs: Side, rhs: Side) -> IdentityRecord {
    IdentityRecord {
        id: id.to_string(),
        reference: reference.to_string(),
        lhs,
        rhs,
        note: String::new(),
    }
}

fn with_note(mut r: IdentityRecord, note: &str) -> IdentityRecord {
    r.note = note.to_string();
    r
}

fn side(text: &str, build: impl Fn(At) -> Result<TruncSeries> + Send + Sync + 'static) -> Side {
    Side::new(Some(text), move |n| build(At(n)))
}

fn untexted(build: impl Fn(At) -> Result<TruncSeries> + Send + Sync + 'static) -> Side {
    Side::new(None, move |n| build(At(n)))
}

const CORES: &str = "E(q^7)^7/E(q)";

fn standard_records() -> Vec<IdentityRecord> {
    let mut v = Vec::new();

    for t in [2usize, 3, 5, 7] {
        let text = format!("E(q^{t})^{t}/E(q)");
        v.push(record(
            &format!("eq-1.3-t{t}"),
            &format!("(1.3): lattice sum over Z^{t} equals E^{t}(q^{t})/E(q)"),
            untexted(move |a| Ok(lattice_theta(&LatticeSpec::unrestricted(t)?, a.0))),
            Side::new(Some(&text), move |n| {
                let a = At(n);
                Ok(a.e(t).pow(t as u32).div(&a.e(1))?)
            }),
        ));
    }

    v.push(record(
        "eq-1.7",
        "(1.7): phi(q) as an eta-quotient",
        side("phi(q)", |a| Ok(a.phi(1))),
        side("E(q^2)^5/(E(q^4)^2*E(q)^2)", |a| {
            Ok(a.e(2).pow(5).div(&(a.e(4).pow(2) * a.e(1).pow(2)))?)
        }),
    ));
    v.push(record(
        "eq-1.8",
        "(1.8): psi(q) as an eta-quotient",
        side("psi(q)", |a| Ok(a.psi(1))),
        side("E(q^2)^2/E(q)", |a| Ok(a.e(2).pow(2).div(&a.e(1))?)),
    ));

    v.push(with_note(
        record(
            "eq-1.17",
            "(1.17): C_{7,1} as a sum of products of positive theta functions",
            untexted(|a| Ok(a.lattice(1))),
            side(
                "q*E(q^28)*E(q^14)^3*E(q^4)/E(q^2)*(sigma(q^4) + q^2*psi(q^2)*psi(q^14))",
                |a| Ok(a.q(1) * a.g()? * (a.sigma(4) + a.q(2) * a.psi(2) * a.psi(14))),
            ),
        ),
        "lhs is the lattice sum over the 21 rank-1 residue classes",
    ));
    v.push(with_note(
        record(
            "eq-1.18",
            "(1.18): C_{7,0} as printed, with the brace closing after the third term",
            side(
                "even(E(q^7)^7/E(q)) - q^6*E(q^28)^7/E(q^4)",
                |a| Ok(a.cores()?.even_part() - a.rank_2()?),
            ),
            side(
                "omega(q^2)*(psi(q^4)^2*phi(q^14)^2 + q^6*psi(q^28)^2*phi(q^2)^2 + q^2*E(q^28)*E(q^14)^3*E(q^4)/E(q^2)) + q^2*psi(q^4)*psi(q^14)^2*phi(q^14)^3 + 2*q^4*psi(q^2)^3*psi(q^14)^3 + 4*q^12*psi(q^14)^2*psi(q^28)^3*phi(q^2)",
                |a| {
                    let braced = a.psi(4).pow(2) * a.phi(14).pow(2)
                        + a.q(6) * a.psi(28).pow(2) * a.phi(2).pow(2)
                        + a.q(2) * a.g()?;
                    Ok(a.omega(2) * braced
                        + a.q(2) * a.psi(4) * a.psi(14).pow(2) * a.phi(14).pow(3)
                        + 2 * (a.q(4) * a.psi(2).pow(3) * a.psi(14).pow(3))
                        + 4 * (a.q(12) * a.psi(14).pow(2) * a.psi(28).pow(3) * a.phi(2)))
                },
            ),
        ),
        "lhs is C_{7,0} from the even-part dissection",
    ));
    v.push(record(
        "eq-1.20",
        "(1.20): triple-product form of E(q^28)E^3(q^14)E(q^4)/E(q^2)",
        side("E(q^28)*E(q^14)^3*E(q^4)/E(q^2)", |a| a.g()),
        side("f(q^2, q^12)*f(q^4, q^10)*f(q^6, q^8)*psi(q^14)", |a| {
            Ok(a.f(2, 12) * a.f(4, 10) * a.f(6, 8) * a.psi(14))
        }),
    ));
    v.push(record(
        "eq-1.21",
        "(1.21): 7-core generating function via sigma(q^2)",
        side(CORES, |a| a.cores()),
        side(
            "f(q, q^13)*f(q^3, q^11)*f(q^5, q^9)*phi(q^7)*sigma(q^2) + 8*q^6*E(q^28)^7/E(q^4)",
            |a| Ok(a.fff13() * a.phi(7) * a.sigma(2) + 8 * (a.q(6) * a.cores4()?)),
        ),
    ));
    v.push(record(
        "eq-1.22",
        "(1.22): 7-core generating function via omega(q)",
        side(CORES, |a| a.cores()),
        side(
            "f(q, q^6)*f(q^2, q^5)*f(q^3, q^4)*psi(q^7)*omega(q) + q^2*E(q^14)^7/E(q^2)",
            |a| Ok(a.fff7() * a.psi(7) * a.omega(1) + a.q(2) * a.cores2()?),
        ),
    ));
    v.push(record(
        "eq-1.23",
        "(1.23): manifestly positive representation of the 7-core generating function",
        side(CORES, |a| a.cores()),
        side(
            "sigma(q^4)*f(q, q^13)*f(q^3, q^11)*f(q^5, q^9)*phi(q^7) + 2*q^3*E(q^28)^3*E(q^14)^2*E(q^4)^3/E(q^2)^2 + 6*q^6*E(q^28)^7/E(q^4) + 2*q^2*E(q^14)^7/E(q^2)",
            |a| {
                Ok(a.sigma(4) * a.fff13() * a.phi(7)
                    + 2 * (a.q(3) * a.rank_m1_quotient()?)
                    + 6 * (a.q(6) * a.cores4()?)
                    + 2 * (a.q(2) * a.cores2()?))
            },
        ),
    ));
    v.push(record(
        "eq-1.24",
        "(1.24): triple-product form of the rank -1 eta-quotient",
        side("E(q^28)^3*E(q^14)^2*E(q^4)^3/E(q^2)^2", |a| {
            a.rank_m1_quotient()
        }),
        side(
            "f(q^2, q^12)*f(q^6, q^8)*f(q^4, q^10)*psi(q^2)*psi(q^14)^2",
            |a| Ok(a.f(2, 12) * a.f(6, 8) * a.f(4, 10) * a.psi(2) * a.psi(14).pow(2)),
        ),
    ));
    v.push(record(
        "eq-1.25",
        "(1.25): f(q,q^13)f(q^3,q^11)f(q^5,q^9)phi(q^7) as an eta-quotient",
        side("f(q, q^13)*f(q^3, q^11)*f(q^5, q^9)*phi(q^7)", |a| {
            Ok(a.fff13() * a.phi(7))
        }),
        side("psi(q)*psi(q^7)*E(q^14)^4/(E(q^4)*E(q^28))", |a| {
            Ok(a.psi(1) * a.psi(7) * a.h()?)
        }),
    ));
    v.push(with_note(
        record(
            "eq-1.31",
            "(1.26) = (1.31): C_{7,-1} lattice sum equals its eta-quotient",
            untexted(|a| Ok(a.lattice(-1))),
            side("q^3*E(q^28)^3*E(q^14)^2*E(q^4)^3/E(q^2)^2", |a| a.rank_m1()),
        ),
        "lattice over the 7 classes B + e_i",
    ));
    v.push(with_note(
        record(
            "eq-1.32",
            "(1.29) = (1.32): C_{7,2} lattice sum equals its eta-quotient",
            untexted(|a| Ok(a.lattice(2))),
            side("q^6*E(q^28)^7/E(q^4)", |a| a.rank_2()),
        ),
        "lattice over the single class B~",
    ));
    v.push(with_note(
        record(
            "eq-1.31-oracle",
            "(1.31): brute-force count of rank -1 7-cores equals the eta-quotient",
            untexted(|a| oracle_rank_series(-1, a.0)),
            side("q^3*E(q^28)^3*E(q^14)^2*E(q^4)^3/E(q^2)^2", |a| a.rank_m1()),
        ),
        "compared up to the oracle depth only",
    ));
    v.push(with_note(
        record(
            "eq-1.32-oracle",
            "(1.32): brute-force count of rank 2 7-cores equals the eta-quotient",
            untexted(|a| oracle_rank_series(2, a.0)),
            side("q^6*E(q^28)^7/E(q^4)", |a| a.rank_2()),
        ),
        "compared up to the oracle depth only",
    ));
    v.push(with_note(
        record(
            "eq-1.34",
            "(1.34): the four BG-rank generating functions sum to E^7(q^7)/E(q)",
            side(CORES, |a| a.cores()),
            untexted(|a| Ok(a.lattice(-1) + a.lattice(0) + a.lattice(1) + a.lattice(2))),
        ),
        "rhs sums the lattice representations of all four ranks",
    ));
    v.push(record(
        "eq-1.35",
        "(1.27) = (1.35): C_{7,0} lattice sum equals the even part minus C_{7,2}",
        untexted(|a| Ok(a.lattice(0))),
        side("even(E(q^7)^7/E(q)) - q^6*E(q^28)^7/E(q^4)", |a| {
            Ok(a.cores()?.even_part() - a.rank_2()?)
        }),
    ));
    v.push(record(
        "eq-1.35-halves",
        "(1.35): the even part is half of f(q) + f(-q)",
        side("2*even(E(q^7)^7/E(q))", |a| Ok(2 * a.cores()?.even_part())),
        side("E(q^7)^7/E(q) + altq(E(q^7)^7/E(q))", |a| {
            let x = a.cores()?;
            Ok(&x + &x.alternate())
        }),
    ));
    v.push(record(
        "eq-1.36",
        "(1.28) = (1.36): C_{7,1} lattice sum equals the odd part minus C_{7,-1}",
        untexted(|a| Ok(a.lattice(1))),
        side(
            "odd(E(q^7)^7/E(q)) - q^3*E(q^28)^3*E(q^14)^2*E(q^4)^3/E(q^2)^2",
            |a| Ok(a.cores()?.odd_part() - a.rank_m1()?),
        ),
    ));
    v.push(record(
        "eq-1.36-halves",
        "(1.36): the odd part is half of f(q) - f(-q)",
        side("2*odd(E(q^7)^7/E(q))", |a| Ok(2 * a.cores()?.odd_part())),
        side("E(q^7)^7/E(q) - altq(E(q^7)^7/E(q))", |a| {
            let x = a.cores()?;
            Ok(&x - &x.alternate())
        }),
    ));

    v.push(record(
        "eq-3.1",
        "(3.1): sigma(q^2) via phi and psi at -q",
        side("sigma(q^2)", |a| Ok(a.sigma(2))),
        side("phi(q)*phi(q^7) - 2*q*altq(psi(q))*altq(psi(q^7))", |a| {
            Ok(a.phi(1) * a.phi(7) - 2 * (a.q(1) * a.psi(1).alternate() * a.psi(7).alternate()))
        }),
    ));
    v.push(record(
        "eq-3.2",
        "(3.2): sigma(q) = sigma(q^2) + 2q psi(q) psi(q^7)",
        side("sigma(q)", |a| Ok(a.sigma(1))),
        side("sigma(q^2) + 2*q*psi(q)*psi(q^7)", |a| {
            Ok(a.sigma(2) + 2 * (a.q(1) * a.psi(1) * a.psi(7)))
        }),
    ));
    v.push(record(
        "eq-3.3",
        "(3.3): omega^2(q) in terms of psi and sigma",
        side("omega(q)^2", |a| Ok(a.omega(1).pow(2))),
        side("psi(q)*psi(q^7)*(sigma(q^2) - q*psi(q)*psi(q^7))", |a| {
            let pp = a.psi(1) * a.psi(7);
            Ok(&pp * &(a.sigma(2) - a.q(1) * &pp))
        }),
    ));
    v.push(record(
        "eq-3.4",
        "(3.4): sigma^2(q^2) = 4q omega^2(q) + phi^2(-q) phi^2(-q^7)",
        side("sigma(q^2)^2", |a| Ok(a.sigma(2).pow(2))),
        side("4*q*omega(q)^2 + altq(phi(q))^2*altq(phi(q^7))^2", |a| {
            Ok(4 * (a.q(1) * a.omega(1).pow(2))
                + a.phi(1).alternate().pow(2) * a.phi(7).alternate().pow(2))
        }),
    ));
    v.push(record(
        "eq-3.5",
        "(3.5): phi(-q^2) phi(-q^14) = phi(-q) phi(-q^7) + 2q psi(-q) psi(-q^7)",
        side("f(-q^2, -q^2)*f(-q^14, -q^14)", |a| {
            Ok(a.f_neg(2, 2) * a.f_neg(14, 14))
        }),
        side(
            "altq(phi(q))*altq(phi(q^7)) + 2*q*altq(psi(q))*altq(psi(q^7))",
            |a| {
                Ok(a.phi(1).alternate() * a.phi(7).alternate()
                    + 2 * (a.q(1) * a.psi(1).alternate() * a.psi(7).alternate()))
            },
        ),
    ));
    v.push(record(
        "eq-3.6",
        "(3.6): 2-dissection of psi(q) psi(q^7)",
        side("psi(q)*psi(q^7)", |a| Ok(a.psi(1) * a.psi(7))),
        side(
            "psi(q^8)*phi(q^28) + q^6*psi(q^56)*phi(q^4) + q*psi(q^2)*psi(q^14)",
            |a| {
                Ok(a.psi(8) * a.phi(28)
                    + a.q(6) * a.psi(56) * a.phi(4)
                    + a.q(1) * a.psi(2) * a.psi(14))
            },
        ),
    ));
    v.push(record(
        "eq-3.7",
        "(3.7): psi(q) psi(q^7) = omega(q^2) + q psi(q^2) psi(q^14)",
        side("psi(q)*psi(q^7)", |a| Ok(a.psi(1) * a.psi(7))),
        side("omega(q^2) + q*psi(q^2)*psi(q^14)", |a| {
            Ok(a.omega(2) + a.q(1) * a.psi(2) * a.psi(14))
        }),
    ));
    v.push(record(
        "eq-3.8",
        "(3.8): 2-dissection of phi(q) phi(q^7)",
        side("phi(q)*phi(q^7)", |a| Ok(a.phi(1) * a.phi(7))),
        side(
            "phi(q^4)*phi(q^28) + 4*q^8*psi(q^8)*psi(q^56) + 2*q*(psi(q^8)*phi(q^28) + q^6*psi(q^56)*phi(q^4))",
            |a| {
                Ok(a.phi(4) * a.phi(28)
                    + 4 * (a.q(8) * a.psi(8) * a.psi(56))
                    + 2 * (a.q(1) * (a.psi(8) * a.phi(28) + a.q(6) * a.psi(56) * a.phi(4))))
            },
        ),
    ));
    v.push(record(
        "eq-3.8-sigma",
        "(3.8): phi(q) phi(q^7) = sigma(q^4) + 2q omega(q^2)",
        side("phi(q)*phi(q^7)", |a| Ok(a.phi(1) * a.phi(7))),
        side("sigma(q^4) + 2*q*omega(q^2)", |a| {
            Ok(a.sigma(4) + 2 * (a.q(1) * a.omega(2)))
        }),
    ));
    v.push(record(
        "eq-3.14",
        "(3.14): f(q,q^6)f(q^2,q^5)f(q^3,q^4) = q^2 psi^3(q^7) + psi(q) omega(q)",
        side("f(q, q^6)*f(q^2, q^5)*f(q^3, q^4)", |a| Ok(a.fff7())),
        side("q^2*psi(q^7)^3 + psi(q)*omega(q)", |a| {
            Ok(a.q(2) * a.psi(7).pow(3) + a.psi(1) * a.omega(1))
        }),
    ));
    v.push(record(
        "eq-3.15",
        "(3.15): triple-product form of f(q,q^6)f(q^2,q^5)f(q^3,q^4)",
        side("f(q, q^6)*f(q^2, q^5)*f(q^3, q^4)", |a| Ok(a.fff7())),
        side("chi(-q^7)/chi(-q)*E(q^7)^3", |a| {
            Ok(a.chi(7).div(&a.chi(1))? * a.e(7).pow(3))
        }),
    ));
    v.push(record(
        "eq-3.16",
        "(3.16): (3.14) at q^2 rewritten with (3.7)",
        side("chi(-q^14)/chi(-q^2)*E(q^14)^3", |a| {
            Ok(a.chi(14).div(&a.chi(2))? * a.e(14).pow(3))
        }),
        side(
            "q^4*psi(q^14)^3 + psi(q^2)*(psi(q)*psi(q^7) - q*psi(q^2)*psi(q^14))",
            |a| {
                Ok(a.q(4) * a.psi(14).pow(3)
                    + a.psi(2) * (a.psi(1) * a.psi(7) - a.q(1) * a.psi(2) * a.psi(14)))
            },
        ),
    ));
    v.push(record(
        "eq-3.22",
        "(3.22): E(q^14)E^3(q^7)E(q^2)/E(q) = q^2 psi^4(q^7) + psi(q) psi(q^7) omega(q)",
        side("E(q^14)*E(q^7)^3*E(q^2)/E(q)", |a| a.j()),
        side("q^2*psi(q^7)^4 + psi(q)*psi(q^7)*omega(q)", |a| {
            Ok(a.q(2) * a.psi(7).pow(4) + a.psi(1) * a.psi(7) * a.omega(1))
        }),
    ));
    v.push(record(
        "eq-3.23",
        "(3.23): 7-core generating function via E(q^14)E^3(q^7)E(q^2)/E(q)",
        side(CORES, |a| a.cores()),
        side(
            "q^2*E(q^14)^7/E(q^2) + E(q^14)*E(q^7)^3*E(q^2)/E(q)*omega(q)",
            |a| Ok(a.q(2) * a.cores2()? + a.j()? * a.omega(1)),
        ),
    ));
    v.push(with_note(
        record(
            "eq-3.24",
            "(3.24): even part of the 7-core generating function",
            side("even(E(q^7)^7/E(q))", |a| Ok(a.cores()?.even_part())),
            side(
                "5*q^2*E(q^14)^7/E(q^2) - 4*q^6*E(q^28)^7/E(q^4) + E(q^2)^3*E(q^14)^3",
                |a| {
                    Ok(5 * (a.q(2) * a.cores2()?) - 4 * (a.q(6) * a.cores4()?)
                        + a.e(2).pow(3) * a.e(14).pow(3))
                },
            ),
        ),
        "half of f(q) + f(-q) is taken as the even part; see eq-1.35-halves",
    ));
    v.push(record(
        "eq-3.28",
        "(3.28): T2(q^2 E^7(q^7)/E(q)) = 5q^2 E^7(q^7)/E(q) + q E^3(q) E^3(q^7)",
        Side::new(Some("T2(q^2*E(q^7)^7/E(q))"), |n| {
            let inner = At(2 * n);
            Ok(hecke_t2(&(inner.q(2) * inner.cores()?)))
        }),
        side("5*q^2*E(q^7)^7/E(q) + q*E(q)^3*E(q^7)^3", |a| {
            Ok(5 * (a.q(2) * a.cores()?) + a.q(1) * a.e(1).pow(3) * a.e(7).pow(3))
        }),
    ));

    v.push(record(
        "eq-4.4",
        "(4.4): E^7(q^7)/E(q) - 8q^6 E^7(q^28)/E(q^4) via sigma(q^2)",
        side("E(q^7)^7/E(q) - 8*q^6*E(q^28)^7/E(q^4)", |a| {
            Ok(a.cores()? - 8 * (a.q(6) * a.cores4()?))
        }),
        side(
            "psi(q)*psi(q^7)*E(q^14)^4/(E(q^4)*E(q^28))*sigma(q^2)",
            |a| Ok(a.psi(1) * a.psi(7) * a.h()? * a.sigma(2)),
        ),
    ));
    v.push(record(
        "eq-4.5",
        "(4.5): even part of the 7-core generating function, first = last member",
        side("even(E(q^7)^7/E(q))", |a| Ok(a.cores()?.even_part())),
        side(
            "2*q^2*E(q^14)^7/E(q^2) + 6*q^6*E(q^28)^7/E(q^4) + E(q^14)^4/(E(q^4)*E(q^28))*omega(q^2)*sigma(q^4)",
            |a| {
                Ok(2 * (a.q(2) * a.cores2()?)
                    + 6 * (a.q(6) * a.cores4()?)
                    + a.h()? * a.omega(2) * a.sigma(4))
            },
        ),
    ));
    v.push(record(
        "eq-4.6",
        "(4.6): E^4(q^14)/(E(q^4)E(q^28)) omega(q^2) as an even part",
        side("E(q^14)^4/(E(q^4)*E(q^28))*omega(q^2)", |a| {
            Ok(a.h()? * a.omega(2))
        }),
        side("even(psi(q)*psi(q^7)*E(q^14)^4/(E(q^4)*E(q^28)))", |a| {
            Ok((a.psi(1) * a.psi(7) * a.h()?).even_part())
        }),
    ));
    v.push(with_note(
        record(
            "eq-4.8",
            "(4.8): E^4(q^14)/(E(q^4)E(q^28)) omega(q^2) as a sum of theta products",
            side("E(q^14)^4/(E(q^4)*E(q^28))*omega(q^2)", |a| {
                Ok(a.h()? * a.omega(2))
            }),
            side(
                "f(q^4, q^24)*f(q^12, q^16)^3 + q^6*f(q^10, q^18)*f(q^2, q^26)^3",
                |a| Ok(a.f(4, 24) * a.f(12, 16).pow(3) + a.q(6) * a.f(10, 18) * a.f(2, 26).pow(3)),
            ),
        ),
        "stated without proof; verified numerically only",
    ));
    v.push(record(
        "eq-4.11",
        "(4.11): odd part minus 3 C_{7,-1}, first = last member",
        side(
            "odd(E(q^7)^7/E(q)) - 3*q^3*E(q^28)^3*E(q^14)^2*E(q^4)^3/E(q^2)^2",
            |a| Ok(a.cores()?.odd_part() - 3 * a.rank_m1()?),
        ),
        side("q*omega(q^2)^2*E(q^14)^4/(E(q^4)*E(q^28))", |a| {
            Ok(a.q(1) * a.omega(2).pow(2) * a.h()?)
        }),
    ));
    v.push(record(
        "eq-4.14",
        "(4.14): sum a_7(2n) q^n = 5q sum a_7(n) q^n - 4q^3 sum a_7(n) q^{2n} + sum b(n) q^n",
        Side::new(Some("T2(E(q^7)^7/E(q)) - 4*E(q^14)^7/E(q^2)"), |n| {
            let wide = At(2 * n);
            let a = At(n);
            Ok(hecke_t2(&wide.cores()?) - 4 * a.cores2()?)
        }),
        side(
            "5*q*E(q^7)^7/E(q) - 4*q^3*E(q^14)^7/E(q^2) + E(q)^3*E(q^7)^3",
            |a| {
                Ok(5 * (a.q(1) * a.cores()?) - 4 * (a.q(3) * a.cores2()?)
                    + a.e(1).pow(3) * a.e(7).pow(3))
            },
        ),
    ));
    v.push(with_note(
        record(
            "eq-4.15",
            "(4.13)/(4.15): a_7(4n) - 5 a_7(2n-1) = b(2n) with sum b(n) q^n = E^3(q) E^3(q^7)",
            untexted(|a| {
                let n = a.0;
                let cores = At(4 * n).cores()?;
                let coeffs = (0..=n)
                    .map(|k| {
                        let back = if k == 0 {
                            BigInt::zero()
                        } else {
                            cores.coeff(2 * k - 1).clone()
                        };
                        cores.coeff(4 * k) - back * 5
                    })
                    .collect();
                Ok(TruncSeries::from_coeffs(coeffs))
            }),
            untexted(|a| {
                let n = a.0;
                let wide = At(2 * n);
                let b = wide.e(1).pow(3) * wide.e(7).pow(3);
                Ok(TruncSeries::from_coeffs(
                    (0..=n).map(|k| b.coeff(2 * k).clone()).collect(),
                ))
            }),
        ),
        "series in n: coefficient n holds the relation at index n",
    ));
    v.push(record(
        "eq-4.16",
        "(4.16): Jacobi's identity for E^3(q)",
        side("E(q)^3", |a| Ok(a.e(1).pow(3))),
        untexted(|a| Ok(theta::jacobi_cube(a.0))),
    ));
    v.push(record(
        "eq-4.18",
        "(4.18): equivalent form of (3.24) with a manifestly positive right side",
        side("3*q*E(q^7)^7/E(q) + E(q)^3*E(q^7)^3", |a| {
            Ok(3 * (a.q(1) * a.cores()?) + a.e(1).pow(3) * a.e(7).pow(3))
        }),
        side(
            "10*q^3*E(q^14)^7/E(q^2) + sigma(q^2)*omega(q)*E(q^7)^4/(E(q^2)*E(q^14))",
            |a| {
                Ok(10 * (a.q(3) * a.cores2()?)
                    + a.sigma(2) * a.omega(1) * a.e(7).pow(4).div(&(a.e(2) * a.e(14)))?)
            },
        ),
    ));

    v.push(record(
        "eq-5.1",
        "(5.1): C_{7,1} from the odd part, first = last member",
        side(
            "odd(E(q^7)^7/E(q)) - q^3*E(q^28)^3*E(q^14)^2*E(q^4)^3/E(q^2)^2",
            |a| Ok(a.cores()?.odd_part() - a.rank_m1()?),
        ),
        side(
            "q*E(q^28)*E(q^14)^3*E(q^4)/E(q^2)*(sigma(q^4) + q^2*psi(q^2)*psi(q^14))",
            |a| Ok(a.q(1) * a.g()? * (a.sigma(4) + a.q(2) * a.psi(2) * a.psi(14))),
        ),
    ));
    v.push(record(
        "eq-5.2",
        "(5.2): 7-core generating function via omega(q) and omega^2(q)",
        side(CORES, |a| a.cores()),
        side(
            "q^2*E(q^14)^7/E(q^2) + q^2*psi(q^7)^4*omega(q) + psi(q)*psi(q^7)*omega(q)^2",
            |a| {
                Ok(a.q(2) * a.cores2()?
                    + a.q(2) * a.psi(7).pow(4) * a.omega(1)
                    + a.psi(1) * a.psi(7) * a.omega(1).pow(2))
            },
        ),
    ));
    v.push(record(
        "eq-5.3",
        "(5.3): (5.2) with (3.23) applied at q^2, first = last member",
        side(CORES, |a| a.cores()),
        side(
            "q^6*E(q^28)^7/E(q^4) + q^2*E(q^28)*E(q^14)^3*E(q^4)/E(q^2)*omega(q^2) + q^2*psi(q^7)^4*omega(q) + psi(q)*psi(q^7)*omega(q)^2",
            |a| {
                Ok(a.q(6) * a.cores4()?
                    + a.q(2) * a.g()? * a.omega(2)
                    + a.q(2) * a.psi(7).pow(4) * a.omega(1)
                    + a.psi(1) * a.psi(7) * a.omega(1).pow(2))
            },
        ),
    ));
    v.push(record(
        "eq-5.4",
        "(5.4): psi^4(q) = psi^2(q^2)(phi^2(q^2) + 4q psi^2(q^4))",
        side("psi(q)^4", |a| Ok(a.psi(1).pow(4))),
        side("psi(q^2)^2*(phi(q^2)^2 + 4*q*psi(q^4)^2)", |a| {
            Ok(a.psi(2).pow(2) * (a.phi(2).pow(2) + 4 * (a.q(1) * a.psi(4).pow(2))))
        }),
    ));
    v.push(record(
        "eq-5.5",
        "(5.5): odd part minus 2 C_{7,-1}, first = last member",
        side(
            "odd(E(q^7)^7/E(q)) - 2*q^3*E(q^28)^3*E(q^14)^2*E(q^4)^3/E(q^2)^2",
            |a| Ok(a.cores()?.odd_part() - 2 * a.rank_m1()?),
        ),
        side("q*E(q^28)*E(q^14)^3*E(q^4)/E(q^2)*sigma(q^4)", |a| {
            Ok(a.q(1) * a.g()? * a.sigma(4))
        }),
    ));
    v.push(record(
        "eq-5.6",
        "(5.6): 7-core generating function, first = last member",
        side(CORES, |a| a.cores()),
        side(
            "2*q^3*E(q^28)^3*E(q^14)^2*E(q^4)^3/E(q^2)^2 + 2*q^2*E(q^14)^7/E(q^2) + 6*q^6*E(q^28)^7/E(q^4) + sigma(q^4)*f(q, q^13)*f(q^3, q^11)*f(q^5, q^9)*phi(q^7)",
            |a| {
                Ok(2 * a.rank_m1()?
                    + 2 * (a.q(2) * a.cores2()?)
                    + 6 * (a.q(6) * a.cores4()?)
                    + a.sigma(4) * a.fff13() * a.phi(7))
            },
        ),
    ));

    v.push(record(
        "aux-phi-dissection",
        "phi(q) = phi(q^4) + 2q psi(q^8)",
        side("phi(q)", |a| Ok(a.phi(1))),
        side("phi(q^4) + 2*q*psi(q^8)", |a| {
            Ok(a.phi(4) + 2 * (a.q(1) * a.psi(8)))
        }),
    ));
    v.push(record(
        "aux-psi-square",
        "psi^2(q) = psi(q^2) phi(q)",
        side("psi(q)^2", |a| Ok(a.psi(1).pow(2))),
        side("psi(q^2)*phi(q)", |a| Ok(a.psi(2) * a.phi(1))),
    ));
    v
}
