//! Brute-force ground truth: partition enumeration, BG-rank, t-core tests,
//! and exact evaluation of constrained lattice theta sums over `Z^t`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{OracleError, SpecError};
use crate::series::TruncSeries;

pub const DEFAULT_ORACLE_BOUND: usize = 45;

/// A nonincreasing sequence of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Returns `None` unless the parts are positive and nonincreasing.
    pub fn new(parts: Vec<usize>) -> Option<Self> {
        let ordered = parts.windows(2).all(|w| w[0] >= w[1]);
        let positive = parts.iter().all(|&p| p > 0);
        (ordered && positive).then_some(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Column lengths of the Young diagram.
    pub fn conjugate(&self) -> Vec<usize> {
        let width = self.0.first().copied().unwrap_or(0);
        (0..width)
            .map(|j| self.0.iter().take_while(|&&p| p > j).count())
            .collect()
    }

    /// Hook length of every cell, row by row.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut hooks = Vec::with_capacity(self.size());
        for (i, &row) in self.0.iter().enumerate() {
            for (j, &col) in conj.iter().enumerate().take(row) {
                hooks.push(row - j + col - i - 1);
            }
        }
        hooks
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Alternating sum of part parities: `sum_j (-1)^{j+1} (lambda_j mod 2)`.
pub fn bg_rank(partition: &Partition) -> i64 {
    partition
        .parts()
        .iter()
        .enumerate()
        .map(|(j, &p)| {
            let par = (p % 2) as i64;
            if j % 2 == 0 {
                par
            } else {
                -par
            }
        })
        .sum()
}

/// True iff no hook length is divisible by `t` (equivalently, no rim hook of length `t`).
pub fn is_t_core(partition: &Partition, t: usize) -> bool {
    assert!(t >= 1, "t must be positive");
    partition.hook_lengths().iter().all(|h| h % t != 0)
}

/// Exhaustive enumerator with a hard size bound.
#[derive(Clone, Copy, Debug)]
pub struct Oracle {
    bound: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            bound: DEFAULT_ORACLE_BOUND,
        }
    }
}

impl Oracle {
    pub fn with_bound(bound: usize) -> Self {
        Oracle { bound }
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    fn check(&self, n: usize) -> Result<(), OracleError> {
        if n > self.bound {
            Err(OracleError::BoundExceeded {
                n,
                bound: self.bound,
            })
        } else {
            Ok(())
        }
    }

    /// All partitions of `n`, largest parts first.
    pub fn enumerate(&self, n: usize) -> Result<Vec<Partition>, OracleError> {
        self.check(n)?;
        let mut out = Vec::new();
        let mut current = Vec::new();
        extend(n, n, &mut current, &mut out);
        Ok(out)
    }

    /// `a_t(n)`: number of t-cores of `n`.
    pub fn count_cores(&self, n: usize, t: usize) -> Result<u64, OracleError> {
        Ok(self
            .enumerate(n)?
            .iter()
            .filter(|p| is_t_core(p, t))
            .count() as u64)
    }

    /// `a_{t,j}(n)`: number of t-cores of `n` with BG-rank `j`.
    pub fn count_cores_by_rank(&self, n: usize, t: usize, j: i64) -> Result<u64, OracleError> {
        Ok(self.cores_by_rank(n, t)?.get(&j).copied().unwrap_or(0))
    }

    /// Histogram of BG-ranks over the t-cores of `n`.
    pub fn cores_by_rank(&self, n: usize, t: usize) -> Result<BTreeMap<i64, u64>, OracleError> {
        let mut hist = BTreeMap::new();
        for p in self.enumerate(n)?.iter().filter(|p| is_t_core(p, t)) {
            *hist.entry(bg_rank(p)).or_insert(0) += 1;
        }
        Ok(hist)
    }
}

fn extend(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        extend(remaining - part, part, current, out);
        current.pop();
    }
}

pub fn enumerate_partitions(n: usize) -> Result<Vec<Partition>, OracleError> {
    Oracle::default().enumerate(n)
}

pub fn count_cores(n: usize, t: usize) -> Result<u64, OracleError> {
    Oracle::default().count_cores(n, t)
}

pub fn count_cores_by_rank(n: usize, t: usize, j: i64) -> Result<u64, OracleError> {
    Oracle::default().count_cores_by_rank(n, t, j)
}

/// A sum over `n in Z^t` with `n . 1 = 0`, `n mod 2` in a residue set, weighted
/// by `q^{(t/2)|n|^2 + b_t . n}` with `b_t = (0, 1, ..., t-1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeSpec {
    t: usize,
    residues: BTreeSet<Vec<u8>>,
}

impl LatticeSpec {
    pub fn new(t: usize, residues: impl IntoIterator<Item = Vec<u8>>) -> Result<Self, SpecError> {
        if !(1..=16).contains(&t) {
            return Err(SpecError::LatticeDimension(t));
        }
        let mut set = BTreeSet::new();
        for r in residues {
            if r.len() != t {
                return Err(SpecError::ResidueLength {
                    expected: t,
                    found: r.len(),
                });
            }
            if let Some(&bad) = r.iter().find(|&&x| x > 1) {
                return Err(SpecError::ResidueEntry(bad));
            }
            set.insert(r);
        }
        Ok(LatticeSpec { t, residues: set })
    }

    /// No congruence condition: every class in `{0,1}^t` is admitted.
    pub fn unrestricted(t: usize) -> Result<Self, SpecError> {
        if !(1..=16).contains(&t) {
            return Err(SpecError::LatticeDimension(t));
        }
        Self::new(t, (0..1u32 << t).map(|mask| mask_to_vec(mask, t)))
    }

    /// Residue classes whose lattice sum is the generating function of 7-cores
    /// with BG-rank `rank`, for `rank` in `-1..=2`.
    pub fn septic_rank(rank: i64) -> Option<Self> {
        const B: u32 = 0b0101010; // (0,1,0,1,0,1,0), bit i = coordinate i
        const B_TILDE: u32 = 0b1010101; // (1,0,1,0,1,0,1)
        let masks: Vec<u32> = match rank {
            -1 => (0..7).map(|i| B ^ (1 << i)).collect(),
            0 => choose(7, 3).into_iter().map(|m| B ^ m).collect(),
            1 => choose(7, 2).into_iter().map(|m| B_TILDE ^ m).collect(),
            2 => vec![B_TILDE],
            _ => return None,
        };
        Some(
            Self::new(7, masks.into_iter().map(|m| mask_to_vec(m, 7)))
                .expect("valid septic residues"),
        )
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn residues(&self) -> &BTreeSet<Vec<u8>> {
        &self.residues
    }

    pub fn offset(&self) -> Vec<i64> {
        (0..self.t as i64).collect()
    }
}

fn mask_to_vec(mask: u32, t: usize) -> Vec<u8> {
    (0..t).map(|i| ((mask >> i) & 1) as u8).collect()
}

fn vec_to_mask(v: &[u8]) -> u32 {
    v.iter()
        .enumerate()
        .fold(0, |m, (i, &b)| m | ((b as u32) << i))
}

/// All `k`-subsets of `0..n` as bitmasks.
fn choose(n: usize, k: usize) -> Vec<u32> {
    (0..1u32 << n)
        .filter(|m| m.count_ones() as usize == k)
        .collect()
}

/// Enumeration plan for one lattice sum. All quantities are doubled exponents
/// `t x^2 + 2 b_i x`, which are integers for every `t`.
struct LatticePlan {
    t: usize,
    limit: i64,
    /// `suffix_min[i]` = sum of `min_term[i..]`.
    suffix_min: Vec<i64>,
    /// Admissible values for each free coordinate.
    ranges: Vec<(i64, i64)>,
    /// `prefix_ok[k][mask]`: some residue agrees with `mask` on its first `k` bits.
    prefix_ok: Vec<Vec<bool>>,
    residue_ok: Vec<bool>,
}

fn doubled_term(t: usize, i: usize, x: i64) -> i64 {
    t as i64 * x * x + 2 * i as i64 * x
}

impl LatticePlan {
    fn new(spec: &LatticeSpec, order: usize) -> Self {
        let t = spec.t;
        let limit = 2 * order as i64;
        // minimum over integers of coordinate i's doubled contribution
        let min_term: Vec<i64> = (0..t)
            .map(|i| {
                // the real minimum sits at x = -i/t, so one of its two integer neighbours wins
                let lo = (-(i as f64) / t as f64).floor() as i64;
                doubled_term(t, i, lo).min(doubled_term(t, i, lo + 1))
            })
            .collect();
        let mut suffix_min = vec![0i64; t + 1];
        for i in (0..t).rev() {
            suffix_min[i] = suffix_min[i + 1] + min_term[i];
        }
        let total_min = suffix_min[0];
        let ranges = (0..t)
            .map(|i| {
                // coordinate i alone may use whatever the other coordinates leave over
                let budget = limit - (total_min - min_term[i]);
                let fits = |x: i64| doubled_term(t, i, x) <= budget;
                let mut hi = 0i64;
                while fits(hi + 1) {
                    hi += 1;
                }
                let mut lo = 0i64;
                while fits(lo - 1) {
                    lo -= 1;
                }
                assert!(
                    !fits(hi + 1) && !fits(lo - 1),
                    "lattice bound too small for coordinate {i}"
                );
                (lo, hi)
            })
            .collect();
        let residue_masks: Vec<u32> = spec.residues.iter().map(|r| vec_to_mask(r)).collect();
        let mut residue_ok = vec![false; 1 << t];
        for &m in &residue_masks {
            residue_ok[m as usize] = true;
        }
        let prefix_ok = (0..=t)
            .map(|k| {
                let mut ok = vec![false; 1 << k];
                for &m in &residue_masks {
                    ok[(m & ((1u32 << k) - 1)) as usize] = true;
                }
                ok
            })
            .collect();
        LatticePlan {
            t,
            limit,
            suffix_min,
            ranges,
            prefix_ok,
            residue_ok,
        }
    }

    fn walk(&self, depth: usize, partial: i64, coord_sum: i64, parity: u32, counts: &mut [u64]) {
        let t = self.t;
        if depth == t - 1 {
            let last = -coord_sum;
            let total = partial + doubled_term(t, t - 1, last);
            let mask = parity | (((last & 1) as u32) << (t - 1));
            if total <= self.limit && self.residue_ok[mask as usize] {
                debug_assert!(total >= 0 && total % 2 == 0);
                counts[(total / 2) as usize] += 1;
            }
            return;
        }
        let (lo, hi) = self.ranges[depth];
        for x in lo..=hi {
            let next = partial + doubled_term(t, depth, x);
            if next + self.suffix_min[depth + 1] > self.limit {
                continue;
            }
            let bits = parity | (((x & 1) as u32) << depth);
            if !self.prefix_ok[depth + 1][bits as usize] {
                continue;
            }
            self.walk(depth + 1, next, coord_sum + x, bits, counts);
        }
    }
}

/// Evaluates the constrained lattice sum to order `order`.
pub fn lattice_theta(spec: &LatticeSpec, order: usize) -> TruncSeries {
    let plan = LatticePlan::new(spec, order);
    let t = plan.t;
    let counts = if t == 1 {
        let mut counts = vec![0u64; order + 1];
        if plan.residue_ok[0] {
            counts[0] = 1;
        }
        counts
    } else {
        let (lo, hi) = plan.ranges[0];
        (lo..=hi)
            .into_par_iter()
            .map(|x| {
                let mut counts = vec![0u64; order + 1];
                let partial = doubled_term(t, 0, x);
                let bits = (x & 1) as u32;
                if partial + plan.suffix_min[1] <= plan.limit && plan.prefix_ok[1][bits as usize] {
                    plan.walk(1, partial, x, bits, &mut counts);
                }
                counts
            })
            .reduce(
                || vec![0u64; order + 1],
                |mut a, b| {
                    a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                    a
                },
            )
    };
    TruncSeries::from_coeffs(counts.into_iter().map(BigInt::from).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![3, 1, 2]).is_none());
        assert!(Partition::new(vec![2, 0]).is_none());
        assert_eq!(Partition::new(vec![]), Some(Partition::empty()));
        assert_eq!(part(&[3, 2, 1]).conjugate(), vec![3, 2, 1]);
        assert_eq!(part(&[4, 1]).conjugate(), vec![2, 1, 1, 1]);
    }

    #[test]
    fn enumeration_counts() {
        let o = Oracle::default();
        assert_eq!(o.enumerate(0).unwrap(), vec![Partition::empty()]);
        assert_eq!(o.enumerate(4).unwrap().len(), 5);
        assert_eq!(o.enumerate(10).unwrap().len(), 42);
        let all = o.enumerate(12).unwrap();
        let distinct: BTreeSet<_> = all.iter().collect();
        assert_eq!(distinct.len(), all.len());
        assert!(all.iter().all(|p| p.size() == 12));
    }

    #[test]
    fn enumeration_bound() {
        let err = Oracle::default().enumerate(46).unwrap_err();
        assert_eq!(err, OracleError::BoundExceeded { n: 46, bound: 45 });
        assert!(err.to_string().contains("45"));
        assert!(Oracle::with_bound(5).count_cores(6, 7).is_err());
    }

    #[test]
    fn bg_rank_examples() {
        assert_eq!(bg_rank(&Partition::empty()), 0);
        assert_eq!(bg_rank(&part(&[2, 1])), -1);
        assert_eq!(bg_rank(&part(&[3, 2, 1])), 2);
    }

    #[test]
    fn hook_lengths_and_cores() {
        let mut hooks = part(&[3, 2, 1]).hook_lengths();
        hooks.sort_unstable();
        assert_eq!(hooks, vec![1, 1, 1, 3, 3, 5]);
        assert!(is_t_core(&Partition::empty(), 7));
        assert!(!is_t_core(&part(&[7]), 7));
        assert!(is_t_core(&part(&[3, 2, 1]), 7));
        // (3,2,1) is the 2-staircase core
        assert!(is_t_core(&part(&[3, 2, 1]), 2));
    }

    #[test]
    fn core_counts() {
        assert_eq!(count_cores(6, 7).unwrap(), 11);
        assert_eq!(count_cores(7, 7).unwrap(), 8);
        assert_eq!(count_cores_by_rank(6, 7, 2).unwrap(), 1);
        assert_eq!(count_cores_by_rank(3, 7, -1).unwrap(), 1);
        let witnesses: Vec<Partition> = enumerate_partitions(6)
            .unwrap()
            .into_iter()
            .filter(|p| is_t_core(p, 7) && bg_rank(p) == 2)
            .collect();
        assert_eq!(witnesses, vec![part(&[3, 2, 1])]);
    }

    #[test]
    fn septic_residue_sets() {
        let sizes: Vec<usize> = (-1..=2)
            .map(|j| LatticeSpec::septic_rank(j).unwrap().residues().len())
            .collect();
        assert_eq!(sizes, vec![7, 35, 21, 1]);
        assert!(LatticeSpec::septic_rank(3).is_none());
        let top = LatticeSpec::septic_rank(2).unwrap();
        assert_eq!(
            top.residues().iter().next().unwrap(),
            &vec![1, 0, 1, 0, 1, 0, 1]
        );
        assert_eq!(top.offset(), vec![0, 1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn lattice_spec_validation() {
        assert_eq!(LatticeSpec::new(0, []), Err(SpecError::LatticeDimension(0)));
        assert_eq!(
            LatticeSpec::new(3, [vec![0, 1]]),
            Err(SpecError::ResidueLength {
                expected: 3,
                found: 2
            })
        );
        assert_eq!(
            LatticeSpec::new(2, [vec![0, 2]]),
            Err(SpecError::ResidueEntry(2))
        );
    }

    #[test]
    fn lattice_constant_term() {
        let s = lattice_theta(&LatticeSpec::unrestricted(7).unwrap(), 6);
        assert_eq!(s.coeff(0), &BigInt::from(1));
    }

    #[test]
    fn lattice_counts_match_oracle() {
        for t in [2, 3, 5, 7] {
            let s = lattice_theta(&LatticeSpec::unrestricted(t).unwrap(), 20);
            for n in 0..=20 {
                assert_eq!(
                    s.coeff(n),
                    &BigInt::from(count_cores(n, t).unwrap()),
                    "t={t} n={n}"
                );
            }
        }
        for j in -1..=2 {
            let s = lattice_theta(&LatticeSpec::septic_rank(j).unwrap(), 20);
            for n in 0..=20 {
                assert_eq!(
                    s.coeff(n),
                    &BigInt::from(count_cores_by_rank(n, 7, j).unwrap()),
                    "j={j} n={n}"
                );
            }
        }
    }
}
