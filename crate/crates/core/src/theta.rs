//! Constructors for the named q-series: Euler products, Ramanujan's general
//! theta function `f(a, b)` and its specializations, eta-quotients, the
//! auxiliary combinations `sigma` and `omega`, and Jacobi's cube.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{SeriesError, SpecError};
use crate::series::TruncSeries;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn pow(self, e: usize) -> Sign {
        match self {
            Sign::Minus if e % 2 == 1 => Sign::Minus,
            _ => Sign::Plus,
        }
    }

    fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// Formal arguments `a = sign_a * q^r`, `b = sign_b * q^s` of `f(a, b)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ThetaArgs {
    sign_a: Sign,
    r: usize,
    sign_b: Sign,
    s: usize,
}

impl ThetaArgs {
    pub fn new(sign_a: Sign, r: usize, sign_b: Sign, s: usize) -> Result<Self, SpecError> {
        if r + s == 0 {
            return Err(SpecError::DegenerateTheta { r, s });
        }
        Ok(ThetaArgs {
            sign_a,
            r,
            sign_b,
            s,
        })
    }

    /// `f(q^r, q^s)` with both signs positive. Panics if `r + s == 0`.
    pub fn positive(r: usize, s: usize) -> Self {
        Self::new(Sign::Plus, r, Sign::Plus, s).expect("r + s >= 1")
    }

    pub fn sign_a(&self) -> Sign {
        self.sign_a
    }
    pub fn r(&self) -> usize {
        self.r
    }
    pub fn sign_b(&self) -> Sign {
        self.sign_b
    }
    pub fn s(&self) -> usize {
        self.s
    }
}

/// `E(q^m) = prod_{j>=1} (1 - q^{mj})` from the pentagonal number theorem.
pub fn euler_e(m: usize, order: usize) -> TruncSeries {
    assert!(m >= 1, "E(q^m) needs m >= 1");
    let mut coeffs = vec![BigInt::zero(); order + 1];
    coeffs[0] = BigInt::from(1);
    // generalized pentagonal numbers k(3k-1)/2 for k = 1, -1, 2, -2, ...
    for k in 1usize.. {
        let sign = if k % 2 == 1 { -1 } else { 1 };
        let p1 = m * (k * (3 * k - 1) / 2);
        if p1 > order {
            break;
        }
        coeffs[p1] += sign;
        let p2 = m * (k * (3 * k + 1) / 2);
        if p2 <= order {
            coeffs[p2] += sign;
        }
    }
    TruncSeries::from_coeffs(coeffs)
}

/// `(c q^a; d q^m)_inf = prod_{n>=0} (1 - c d^n q^{a + m n})` for signs `c`, `d`.
pub fn pochhammer(c: Sign, a: usize, d: Sign, m: usize, order: usize) -> TruncSeries {
    assert!(m >= 1, "Pochhammer step must be positive");
    let mut coeffs = vec![BigInt::zero(); order + 1];
    coeffs[0] = BigInt::from(1);
    for n in 0usize.. {
        let e = a + m * n;
        if e > order {
            break;
        }
        // multiply in place by (1 + coef q^e)
        let coef = -c.times(d.pow(n)).as_i64();
        if e == 0 {
            for x in coeffs.iter_mut() {
                *x *= 1 + coef;
            }
            continue;
        }
        for i in (e..=order).rev() {
            let (lo, hi) = coeffs.split_at_mut(i);
            if coef == 1 {
                hi[0] += &lo[i - e];
            } else {
                hi[0] -= &lo[i - e];
            }
        }
    }
    TruncSeries::from_coeffs(coeffs)
}

/// Ramanujan's `f(a, b) = sum_{n in Z} a^{n(n+1)/2} b^{n(n-1)/2}` as a bilateral sum.
pub fn theta_f(args: ThetaArgs, order: usize) -> TruncSeries {
    let mut coeffs = vec![BigInt::zero(); order + 1];
    let term = |n: i64| -> (usize, i64) {
        let ta = (n * (n + 1) / 2) as usize;
        let tb = (n * (n - 1) / 2) as usize;
        let exponent = args.r * ta + args.s * tb;
        let sign = args.sign_a.pow(ta).times(args.sign_b.pow(tb)).as_i64();
        (exponent, sign)
    };
    // the exponent is nondecreasing in |n| on each side of 0
    for direction in [1i64, -1] {
        let mut n = if direction == 1 { 0 } else { -1 };
        loop {
            let (exponent, sign) = term(n);
            if exponent > order {
                break;
            }
            coeffs[exponent] += sign;
            n += direction;
        }
    }
    TruncSeries::from_coeffs(coeffs)
}

/// `f(a, b)` through the Jacobi triple product `(-a; ab)(-b; ab)(ab; ab)`.
pub fn theta_f_product(args: ThetaArgs, order: usize) -> TruncSeries {
    let step = args.r + args.s;
    let ab = args.sign_a.times(args.sign_b);
    let neg = |s: Sign| s.times(Sign::Minus);
    let first = pochhammer(neg(args.sign_a), args.r, ab, step, order);
    let second = pochhammer(neg(args.sign_b), args.s, ab, step, order);
    let third = pochhammer(ab, step, ab, step, order);
    &(&first * &second) * &third
}

/// `phi(q^m) = sum q^{m n^2}`.
pub fn phi(m: usize, order: usize) -> TruncSeries {
    theta_f(ThetaArgs::positive(m, m), order)
}

/// `psi(q^m) = sum_{n>=0} q^{m n(n+1)/2}`.
pub fn psi(m: usize, order: usize) -> TruncSeries {
    theta_f(ThetaArgs::positive(m, 3 * m), order)
}

/// `chi(-q^m) = (q^m; q^{2m})_inf`.
pub fn chi_neg(m: usize, order: usize) -> TruncSeries {
    pochhammer(Sign::Plus, m, Sign::Plus, 2 * m, order)
}

/// `phi(q^m) = E^5(q^{2m}) / (E^2(q^{4m}) E^2(q^m))`.
pub fn phi_eta(m: usize, order: usize) -> TruncSeries {
    eta_quotient(
        &EtaQuotientSpec::from_pairs(&[(2 * m, 5), (4 * m, -2), (m, -2)]),
        order,
    )
    .expect("eta-quotients have unit constant term")
}

/// `psi(q^m) = E^2(q^{2m}) / E(q^m)`.
pub fn psi_eta(m: usize, order: usize) -> TruncSeries {
    eta_quotient(&EtaQuotientSpec::from_pairs(&[(2 * m, 2), (m, -1)]), order)
        .expect("eta-quotients have unit constant term")
}

/// `chi(-q^m) = E(q^m) / E(q^{2m})`.
pub fn chi_neg_eta(m: usize, order: usize) -> TruncSeries {
    eta_quotient(&EtaQuotientSpec::from_pairs(&[(m, 1), (2 * m, -1)]), order)
        .expect("eta-quotients have unit constant term")
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Cached {
    Sigma,
    Omega,
}

type CacheMap = HashMap<(Cached, usize, usize), TruncSeries>;

fn cache() -> &'static Mutex<CacheMap> {
    static CACHE: OnceLock<Mutex<CacheMap>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn cached(
    kind: Cached,
    k: usize,
    order: usize,
    build: impl FnOnce() -> TruncSeries,
) -> TruncSeries {
    if let Some(hit) = cache().lock().unwrap().get(&(kind, k, order)) {
        return hit.clone();
    }
    let value = build();
    cache()
        .lock()
        .unwrap()
        .entry((kind, k, order))
        .or_insert(value)
        .clone()
}

/// `sigma(q^k)` where `sigma(q) = phi(q) phi(q^7) + 4 q^2 psi(q^2) psi(q^14)`.
pub fn sigma(k: usize, order: usize) -> TruncSeries {
    cached(Cached::Sigma, k, order, || {
        let base = &(&phi(1, order) * &phi(7, order))
            + &(4 * &(&psi(2, order) * &psi(14, order))).shift(2);
        base.compose_power(k).expect("k >= 1")
    })
}

/// `omega(q^k)` where `omega(q) = psi(q^4) phi(q^14) + q^3 psi(q^28) phi(q^2)`.
pub fn omega(k: usize, order: usize) -> TruncSeries {
    cached(Cached::Omega, k, order, || {
        let base =
            &(&psi(4, order) * &phi(14, order)) + &(&psi(28, order) * &phi(2, order)).shift(3);
        base.compose_power(k).expect("k >= 1")
    })
}

/// `prod_i E^{delta_i}(q^i)`, keyed by step `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EtaQuotientSpec {
    factors: BTreeMap<usize, i32>,
}

impl EtaQuotientSpec {
    pub fn new(factors: impl IntoIterator<Item = (usize, i32)>) -> Result<Self, SpecError> {
        let mut map = BTreeMap::new();
        for (step, exp) in factors {
            if step == 0 {
                return Err(SpecError::ZeroEtaStep);
            }
            *map.entry(step).or_insert(0) += exp;
        }
        if map.is_empty() {
            return Err(SpecError::EmptyEtaQuotient);
        }
        Ok(EtaQuotientSpec { factors: map })
    }

    /// Panics on an invalid factor list; meant for literal tables.
    pub fn from_pairs(pairs: &[(usize, i32)]) -> Self {
        Self::new(pairs.iter().copied()).expect("valid eta-quotient")
    }

    pub fn factors(&self) -> &BTreeMap<usize, i32> {
        &self.factors
    }
}

pub fn eta_quotient(spec: &EtaQuotientSpec, order: usize) -> Result<TruncSeries, SeriesError> {
    let mut numerator = TruncSeries::one(order);
    let mut denominator = TruncSeries::one(order);
    for (&step, &exp) in &spec.factors {
        let e = euler_e(step, order).pow(exp.unsigned_abs());
        if exp >= 0 {
            numerator = &numerator * &e;
        } else {
            denominator = &denominator * &e;
        }
    }
    numerator.div(&denominator)
}

/// `E^3(q) = sum_{k>=1} (-1)^{k-1} (2k - 1) q^{k(k-1)/2}`.
pub fn jacobi_cube(order: usize) -> TruncSeries {
    let mut coeffs = vec![BigInt::zero(); order + 1];
    for k in 1usize.. {
        let e = k * (k - 1) / 2;
        if e > order {
            break;
        }
        let magnitude = BigInt::from(2 * k - 1);
        coeffs[e] = if k % 2 == 1 { magnitude } else { -magnitude };
    }
    TruncSeries::from_coeffs(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Expand `prod_{j=1}^{J} (1 - q^{mj})` directly, one binomial at a time.
    fn finite_product_oracle(m: usize, order: usize) -> Vec<i64> {
        let mut c = vec![0i64; order + 1];
        c[0] = 1;
        let mut j = 1;
        while m * j <= order {
            let e = m * j;
            for i in (e..=order).rev() {
                c[i] -= c[i - e];
            }
            j += 1;
        }
        c
    }

    fn ints(s: &TruncSeries) -> Vec<i64> {
        s.coeffs()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn euler_matches_finite_product() {
        let e = euler_e(1, 12);
        let support: Vec<(usize, i64)> = ints(&e)
            .into_iter()
            .enumerate()
            .filter(|(_, c)| *c != 0)
            .collect();
        assert_eq!(
            support,
            vec![(0, 1), (1, -1), (2, -1), (5, 1), (7, 1), (12, -1)]
        );
        for m in [1, 2, 3, 7] {
            assert_eq!(
                ints(&euler_e(m, 300)),
                finite_product_oracle(m, 300),
                "m = {m}"
            );
        }
    }

    #[test]
    fn euler_small_and_substituted() {
        assert_eq!(euler_e(7, 6), TruncSeries::one(6));
        assert_eq!(euler_e(2, 10), euler_e(1, 10).compose_power(2).unwrap());
    }

    #[test]
    fn theta_named_cases() {
        assert_eq!(
            theta_f(ThetaArgs::positive(1, 1), 9),
            TruncSeries::from_i64s(9, &[1, 2, 0, 0, 2, 0, 0, 0, 0, 2])
        );
        assert_eq!(
            theta_f(ThetaArgs::positive(1, 3), 10),
            TruncSeries::from_i64s(10, &[1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1])
        );
        assert_eq!(phi(1, 9), theta_f(ThetaArgs::positive(1, 1), 9));
        let args = ThetaArgs::positive(1, 13);
        assert_eq!(theta_f(args, 60), theta_f_product(args, 60));
    }

    #[test]
    fn theta_degenerate_args_rejected() {
        assert_eq!(
            ThetaArgs::new(Sign::Plus, 0, Sign::Minus, 0),
            Err(SpecError::DegenerateTheta { r: 0, s: 0 })
        );
        // r = 0 is allowed as long as s >= 1: f(1, q) = 2 psi(q)
        let f = theta_f(ThetaArgs::new(Sign::Plus, 0, Sign::Plus, 1).unwrap(), 30);
        assert_eq!(f, psi(1, 30).scale(&2.into()));
        assert_eq!(
            f,
            theta_f_product(ThetaArgs::new(Sign::Plus, 0, Sign::Plus, 1).unwrap(), 30)
        );
    }

    #[test]
    fn signed_theta_agrees_with_product() {
        for (sa, r, sb, s) in [
            (Sign::Minus, 1, Sign::Minus, 1),
            (Sign::Minus, 2, Sign::Minus, 2),
            (Sign::Minus, 1, Sign::Minus, 3),
            (Sign::Minus, 1, Sign::Minus, 2),
            (Sign::Plus, 2, Sign::Minus, 5),
        ] {
            let args = ThetaArgs::new(sa, r, sb, s).unwrap();
            assert_eq!(theta_f(args, 150), theta_f_product(args, 150), "{args:?}");
        }
        // f(-q, -q^2) = E(q)
        let e = theta_f(ThetaArgs::new(Sign::Minus, 1, Sign::Minus, 2).unwrap(), 150);
        assert_eq!(e, euler_e(1, 150));
    }

    #[test]
    fn phi_psi_chi_two_ways() {
        for m in [1, 2, 4, 7, 14] {
            assert_eq!(phi(m, 200), phi_eta(m, 200), "phi m={m}");
            assert_eq!(psi(m, 200), psi_eta(m, 200), "psi m={m}");
            assert_eq!(chi_neg(m, 200), chi_neg_eta(m, 200), "chi m={m}");
        }
        assert_eq!(phi(1, 3).odd_part(), TruncSeries::from_i64s(3, &[0, 2]));
    }

    #[test]
    fn chi_ratio_matches_septic_product() {
        let n = 80;
        let lhs = chi_neg(7, n).div(&chi_neg(1, n)).unwrap() * euler_e(7, n).pow(3);
        let rhs = theta_f(ThetaArgs::positive(1, 6), n)
            * theta_f(ThetaArgs::positive(2, 5), n)
            * theta_f(ThetaArgs::positive(3, 4), n);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn sigma_omega_leading_terms() {
        assert_eq!(ints(&omega(1, 3)), vec![1, 0, 0, 1]);
        assert_eq!(ints(&sigma(1, 2)), vec![1, 2, 4]);
        let n = 100;
        let lhs = &sigma(1, n) - &sigma(2, n);
        let rhs = (2 * &(&psi(1, n) * &psi(7, n))).shift(1);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn cache_is_transparent() {
        let first = sigma(3, 64);
        let second = sigma(3, 64);
        assert_eq!(first, second);
        let direct = (&(&phi(1, 64) * &phi(7, 64)) + &(4 * &(&psi(2, 64) * &psi(14, 64))).shift(2))
            .compose_power(3)
            .unwrap();
        assert_eq!(first, direct);
    }

    #[test]
    fn eta_quotient_cases() {
        let cores = eta_quotient(&EtaQuotientSpec::from_pairs(&[(7, 7), (1, -1)]), 6).unwrap();
        // every partition of n <= 6 is a 7-core, so these are p(0..=6)
        assert_eq!(ints(&cores), vec![1, 1, 2, 3, 5, 7, 11]);
        let top = eta_quotient(&EtaQuotientSpec::from_pairs(&[(28, 7), (4, -1)]), 20)
            .unwrap()
            .shift(6);
        assert_eq!(top.coeff(6), &BigInt::from(1));
        assert!(top.coeffs()[..6].iter().all(Zero::is_zero));
        assert_eq!(EtaQuotientSpec::new([]), Err(SpecError::EmptyEtaQuotient));
        assert_eq!(EtaQuotientSpec::new([(0, 1)]), Err(SpecError::ZeroEtaStep));
    }

    #[test]
    fn jacobi_cube_values() {
        let j = jacobi_cube(10);
        assert_eq!(ints(&j)[..7], [1, -3, 0, 5, 0, 0, -7]);
        assert_eq!(jacobi_cube(200), euler_e(1, 200).pow(3));
    }

    #[test]
    fn classical_dissections() {
        let n = 200;
        assert_eq!(psi(1, n).pow(2), &psi(2, n) * &phi(1, n));
        assert_eq!(phi(1, n), &phi(4, n) + &(2 * &psi(8, n)).shift(1));
        let inner = &phi(2, n).pow(2) + &(4 * &psi(4, n).pow(2)).shift(1);
        assert_eq!(psi(1, n).pow(4), &psi(2, n).pow(2) * &inner);
    }
}
