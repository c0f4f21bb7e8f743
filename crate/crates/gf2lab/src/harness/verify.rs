//! Exact verifiers for the three counting inequalities everything else
//! rests on: the spectral lower bound on sum-tuple counts, the crude upper
//! bound on degenerate tuples, and the triple-count lower bound. Each runs
//! on a concrete instance and returns a report whose sides are exact.

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::gf2::GF2Vector;
use crate::harness::{IneqCheck, Relation, VerifierReport};
use crate::matroid::count_s0_bruteforce;
use crate::pointset::PointSet;
use crate::spectral::{count_sum_tuples, count_zero_triples, uniformity};

/// At most this many individual violations are kept as rows; the totals in
/// `checked` and `pass` always reflect every comparison.
const MAX_VIOLATION_ROWS: usize = 64;

/// Checks 2^n·N_k(x) >= |A|^k - U^(k-2)·2^(2n) for every x, where N_k(x)
/// counts ordered k-tuples over A summing to x and U is the uniformity
/// defect of A. Requires k >= 3. The report records the worst x (smallest
/// slack) and every violating x up to a cap; zero violations is the
/// expected outcome on all inputs, the empty set and the full space
/// included.
pub fn verify_sum_bound(a: &PointSet, k: u32) -> Result<VerifierReport> {
    if k < 3 {
        return Err(Error::InvalidInput(format!(
            "the sum-count bound needs k >= 3, got {k}"
        )));
    }
    let started = Instant::now();
    let n = a.ambient_dim();
    let counts = count_sum_tuples(a, k)?;
    let defect = uniformity(a).max_abs_correlation;
    let rhs = BigInt::from(a.len()).pow(k)
        - BigInt::from(defect).pow(k - 2) * (BigInt::one() << (2 * n));
    let mut worst: Option<(BigInt, usize, BigInt)> = None;
    let mut violations = Vec::new();
    for (x, count) in counts.iter().enumerate() {
        let lhs = count << n;
        let slack = &lhs - &rhs;
        if lhs < rhs && violations.len() < MAX_VIOLATION_ROWS {
            violations.push((x, lhs.clone()));
        }
        if worst.as_ref().is_none_or(|(s, _, _)| slack < *s) {
            worst = Some((slack, x, lhs));
        }
    }
    let (_, worst_x, worst_lhs) = worst.expect("count table is never empty");
    let mut report = VerifierReport::new(
        "sum-count lower bound: 2^n*N_k(x) >= |A|^k - U^(k-2)*2^(2n) for every x",
        format!("n = {n}, |A| = {}, k = {k}, U = {defect}", a.len()),
    );
    report.tally(counts.len() as u64, violations.is_empty());
    report.record(IneqCheck::new(
        format!("worst x = {}", GF2Vector::new(worst_x as u32, n)?),
        worst_lhs,
        Relation::Ge,
        rhs.clone(),
    ));
    for (x, lhs) in violations {
        if x == worst_x {
            continue;
        }
        report.record(IneqCheck::new(
            format!("violated at x = {}", GF2Vector::new(x as u32, n)?),
            lhs,
            Relation::Ge,
            rhs.clone(),
        ));
    }
    report.runtime_ms = Some(started.elapsed().as_millis());
    Ok(report)
}

/// Checks the degenerate-tuple upper bound |S0(A,k;x)| <= 2^k·|A|^(k-2) by
/// literal enumeration of S0. Supports 2 <= k <= 8 within the enumeration
/// budget.
pub fn verify_degenerate_bound(a: &PointSet, k: usize, x: GF2Vector) -> Result<VerifierReport> {
    let started = Instant::now();
    let s0 = count_s0_bruteforce(a, k, x)?;
    let bound = (BigInt::one() << k) * BigInt::from(a.len()).pow(k as u32 - 2);
    let mut report = VerifierReport::new(
        "degenerate-tuple upper bound: |S0(A,k;x)| <= 2^k*|A|^(k-2)",
        format!(
            "n = {}, |A| = {}, k = {k}, x = {x}",
            a.ambient_dim(),
            a.len()
        ),
    );
    report.push(IneqCheck::new(
        "degenerate ordered tuples",
        s0,
        Relation::Le,
        bound,
    ));
    report.runtime_ms = Some(started.elapsed().as_millis());
    Ok(report)
}

/// Checks 2^n·T(A1,A2,A3) >= |A1||A2||A3| - U1·2^(2n), where T counts
/// ordered zero-sum triples across the three sets and U1 is the uniformity
/// defect of the first.
pub fn verify_triangle_bound(
    a1: &PointSet,
    a2: &PointSet,
    a3: &PointSet,
) -> Result<VerifierReport> {
    let started = Instant::now();
    let t = count_zero_triples(a1, a2, a3)?;
    let n = a1.ambient_dim();
    let defect = uniformity(a1).max_abs_correlation;
    let lhs = t << n;
    let rhs = BigInt::from(a1.len()) * BigInt::from(a2.len()) * BigInt::from(a3.len())
        - BigInt::from(defect) * (BigInt::one() << (2 * n));
    let mut report = VerifierReport::new(
        "zero-triple lower bound: 2^n*T(A1,A2,A3) >= |A1||A2||A3| - U1*2^(2n)",
        format!(
            "n = {n}, |A1| = {}, |A2| = {}, |A3| = {}, U1 = {defect}",
            a1.len(),
            a2.len(),
            a3.len()
        ),
    );
    report.push(IneqCheck::new(
        "ordered zero-sum triples",
        lhs,
        Relation::Ge,
        rhs,
    ));
    report.runtime_ms = Some(started.elapsed().as_millis());
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pointset::projective;

    fn set(n: usize, members: &[&str]) -> PointSet {
        PointSet::from_members(
            n,
            members.iter().map(|s| GF2Vector::parse_bits(s).unwrap()),
        )
        .unwrap()
    }

    fn v(s: &str) -> GF2Vector {
        GF2Vector::parse_bits(s).unwrap()
    }

    #[test]
    fn sum_bound_on_the_three_point_set() {
        // A = {01,10,11}: N_3 = [6,7,7,7], |A|^3 - U·2^4 = 27 - 16 = 11,
        // worst at x = 00 with 4·6 = 24 >= 11
        let report = verify_sum_bound(&set(2, &["01", "10", "11"]), 3).unwrap();
        assert!(report.pass);
        assert_eq!(report.checked, 4);
        let worst = &report.checks[0];
        assert_eq!(worst.label, "worst x = 00");
        assert_eq!(worst.lhs, BigInt::from(24));
        assert_eq!(worst.rhs, BigInt::from(11));
    }

    #[test]
    fn sum_bound_is_tight_on_the_full_space() {
        let full = PointSet::from_members(
            3,
            (0..8).map(|b| GF2Vector::new(b, 3).unwrap()),
        )
        .unwrap();
        let report = verify_sum_bound(&full, 3).unwrap();
        assert!(report.pass);
        // U = 0 and N_3(x) = 8^3/8 exactly: equality at every x
        let worst = &report.checks[0];
        assert_eq!(worst.lhs, worst.rhs);
        assert_eq!(worst.lhs, BigInt::from(512));
    }

    #[test]
    fn sum_bound_accepts_the_empty_set_and_zero_member() {
        let report = verify_sum_bound(&PointSet::empty(3).unwrap(), 4).unwrap();
        assert!(report.pass);
        let with_zero = set(2, &["00", "11"]);
        assert!(verify_sum_bound(&with_zero, 3).unwrap().pass);
    }

    #[test]
    fn sum_bound_rejects_small_k() {
        assert!(matches!(
            verify_sum_bound(&set(2, &["01"]), 2),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn degenerate_bound_on_the_three_point_set() {
        // S0({01,10,11}, 3; 01) = 7 <= 2^3·3 = 24
        let report = verify_degenerate_bound(&set(2, &["01", "10", "11"]), 3, v("01")).unwrap();
        assert!(report.pass);
        assert_eq!(report.checks[0].lhs, BigInt::from(7));
        assert_eq!(report.checks[0].rhs, BigInt::from(24));
    }

    #[test]
    fn degenerate_bound_on_the_seven_point_plane() {
        // S0(PG(2,2), 4; 001) = 300 <= 2^4·49 = 784
        let report = verify_degenerate_bound(&projective(3).unwrap(), 4, v("001")).unwrap();
        assert!(report.pass);
        assert_eq!(report.checks[0].lhs, BigInt::from(300));
        assert_eq!(report.checks[0].rhs, BigInt::from(784));
    }

    #[test]
    fn degenerate_bound_on_the_empty_set() {
        let report =
            verify_degenerate_bound(&PointSet::empty(2).unwrap(), 3, v("01")).unwrap();
        assert!(report.pass);
        assert_eq!(report.checks[0].lhs, BigInt::from(0));
        assert_eq!(report.checks[0].rhs, BigInt::from(0));
    }

    #[test]
    fn triangle_bound_on_the_three_point_set() {
        let a = set(2, &["01", "10", "11"]);
        // T = 6, 4·6 = 24 >= 27 - 1·16 = 11
        let report = verify_triangle_bound(&a, &a, &a).unwrap();
        assert!(report.pass);
        assert_eq!(report.checks[0].lhs, BigInt::from(24));
        assert_eq!(report.checks[0].rhs, BigInt::from(11));
    }

    #[test]
    fn triangle_bound_is_tight_when_the_first_set_is_the_full_space() {
        let full = PointSet::from_members(
            2,
            (0..4).map(|b| GF2Vector::new(b, 2).unwrap()),
        )
        .unwrap();
        let report = verify_triangle_bound(&full, &full, &full).unwrap();
        assert!(report.pass);
        assert_eq!(report.checks[0].lhs, report.checks[0].rhs);
        assert_eq!(report.checks[0].lhs, BigInt::from(64));
    }

    #[test]
    fn triangle_bound_rejects_mismatched_dimensions() {
        let a = set(2, &["01"]);
        let b = set(3, &["001"]);
        assert!(verify_triangle_bound(&a, &a, &b).is_err());
    }
}
