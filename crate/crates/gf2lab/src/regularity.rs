//! Regular subspaces: a subspace H is ε-regular for X when the cosets
//! whose sections of X fail ε-uniformity fill at most an ε-fraction of the
//! space. Sections of one coset are translates of each other, so every
//! coset has a well-defined section spectrum; refinement repeatedly cuts H
//! by the most frequently violated character until regularity holds, which
//! takes at most dim(V) steps because dimension-zero sections are uniform
//! vacuously.

use crate::error::{Error, Result};
use crate::gf2::{GF2Vector, Subspace};
use crate::pointset::PointSet;
use crate::spectral::fwht_i64;
use crate::Rational;
use num_bigint::BigInt;
use num_traits::Signed;
use rayon::prelude::*;
use std::collections::BTreeMap;

/// Per-coset section summary: how many members land in the coset and the
/// worst section character. Anchoring at any point of the coset yields the
/// same absolute correlations, so the summary is anchor-free.
#[derive(Clone, Debug)]
pub struct CosetScan {
    /// Ambient coset representative (the minimum of the coset).
    pub rep: GF2Vector,
    /// |(rep + H) ∩ X|.
    pub cardinality: usize,
    /// max_{γ≠0} |c(γ)| over the section, 0 for dimension-zero sections.
    pub max_abs_correlation: i64,
    /// Smallest section character attaining the maximum, in H coordinates.
    pub witness: Option<GF2Vector>,
}

/// Scans every coset of H, in ascending representative order. The section
/// of coset a+H is {coords(h) : h ∈ H, h + a ∈ X} ⊆ GF(2)^dim(H).
pub(crate) fn scan_cosets(x: &PointSet, h: &Subspace) -> Result<Vec<CosetScan>> {
    if x.ambient_dim() != h.ambient_dim() {
        return Err(Error::DimensionMismatch {
            left: x.ambient_dim(),
            right: h.ambient_dim(),
        });
    }
    let d = h.dim();
    let map = h.section_coordinates();
    let scans: Vec<CosetScan> = h
        .coset_reps()
        .into_par_iter()
        .map(|rep| {
            let mut table = vec![0i64; 1 << d];
            for elem in h.elements() {
                if x.contains_bits(elem.bits() ^ rep.bits()) {
                    table[map.gather(elem.bits()) as usize] = 1;
                }
            }
            let cardinality = table.iter().filter(|&&v| v == 1).count();
            fwht_i64(&mut table);
            let mut max_abs = 0i64;
            let mut witness = None;
            for (gamma, &c) in table.iter().enumerate().skip(1) {
                if c.abs() > max_abs {
                    max_abs = c.abs();
                    witness = Some(gamma as u32);
                }
            }
            CosetScan {
                rep,
                cardinality,
                max_abs_correlation: max_abs,
                witness: witness.map(|bits| GF2Vector::new(bits, d).expect("index in range")),
            }
        })
        .collect();
    let total: usize = scans.iter().map(|s| s.cardinality).sum();
    assert_eq!(total, x.len(), "cosets partition the space");
    Ok(scans)
}

/// One coset whose section fails ε-uniformity.
#[derive(Clone, Debug)]
pub struct BadCoset {
    pub rep: GF2Vector,
    /// Violating section character, in H coordinates.
    pub witness: GF2Vector,
    pub correlation_abs: i64,
}

#[derive(Clone, Debug)]
pub struct RegularityCert {
    pub subspace: Subspace,
    pub epsilon: Rational,
    pub regular: bool,
    pub bad_cosets: Vec<BadCoset>,
    /// Number of points lying in irregular cosets: #bad · |H|.
    pub bad_mass: u64,
}

fn check_epsilon(epsilon: &Rational) -> Result<()> {
    if epsilon.is_negative() {
        return Err(Error::InvalidInput(format!(
            "regularity parameter {epsilon} must be nonnegative"
        )));
    }
    Ok(())
}

/// The coset sections failing ε-uniformity: section defect · q > p · 2^d.
pub(crate) fn collect_bad(scans: &[CosetScan], d: usize, epsilon: &Rational) -> Vec<BadCoset> {
    let section_budget = epsilon.numer() * (BigInt::from(1u64) << d);
    scans
        .iter()
        .filter(|scan| BigInt::from(scan.max_abs_correlation) * epsilon.denom() > section_budget)
        .map(|scan| BadCoset {
            rep: scan.rep,
            witness: scan.witness.expect("a violating section has a witness"),
            correlation_abs: scan.max_abs_correlation,
        })
        .collect()
}

/// Whether `bad_count` cosets of dimension d carry at most an ε-fraction of
/// the ambient space: bad_count · 2^d · q <= p · 2^n.
pub(crate) fn mass_within_budget(
    bad_count: usize,
    d: usize,
    n: usize,
    epsilon: &Rational,
) -> bool {
    (BigInt::from(bad_count) << d) * epsilon.denom() <= epsilon.numer() << n
}

/// Decides ε-regularity of H for X exactly: a coset is bad when its
/// section's largest correlation exceeds ε·2^dim(H), and H is regular when
/// the bad cosets cover at most ε·2^n points.
pub fn is_regular(x: &PointSet, h: &Subspace, epsilon: &Rational) -> Result<RegularityCert> {
    check_epsilon(epsilon)?;
    let scans = scan_cosets(x, h)?;
    let d = h.dim();
    let bad_cosets = collect_bad(&scans, d, epsilon);
    let bad_mass = bad_cosets.len() as u64 * h.len();
    let regular = mass_within_budget(bad_cosets.len(), d, x.ambient_dim(), epsilon);
    Ok(RegularityCert {
        subspace: h.clone(),
        epsilon: epsilon.clone(),
        regular,
        bad_cosets,
        bad_mass,
    })
}

/// The most common violating character across bad cosets, ties to the
/// smallest; None when the list is empty.
pub(crate) fn most_frequent_witness(bad_cosets: &[BadCoset], d: usize) -> Option<GF2Vector> {
    let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
    for bad in bad_cosets {
        *counts.entry(bad.witness.bits()).or_default() += 1;
    }
    let mut best: Option<(u32, usize)> = None;
    for (&bits, &count) in &counts {
        if best.is_none_or(|(_, c)| count > c) {
            best = Some((bits, count));
        }
    }
    best.map(|(bits, _)| GF2Vector::new(bits, d).expect("witness in range"))
}

/// One refinement step: the subspace was cut by the lifted witness.
#[derive(Clone, Debug)]
pub struct RefineStep {
    pub dim_before: usize,
    pub bad_cosets: usize,
    pub bad_mass: u64,
    /// Most frequent violating character, in the coordinates of the
    /// subspace being refined.
    pub section_witness: GF2Vector,
    /// The same character lifted to the ambient space.
    pub lifted_witness: GF2Vector,
}

#[derive(Clone, Debug)]
pub struct RefinementTrace {
    pub steps: Vec<RefineStep>,
    /// Certificate for the final subspace; always regular.
    pub certificate: RegularityCert,
}

impl RefinementTrace {
    pub fn subspace(&self) -> &Subspace {
        &self.certificate.subspace
    }
}

/// Descends from the full space, cutting by the most frequent violating
/// character until ε-regularity holds. Terminates in at most n steps: each
/// cut drops the dimension by exactly one, and dimension zero is regular.
pub fn find_regular_subspace(x: &PointSet, epsilon: &Rational) -> Result<RefinementTrace> {
    check_epsilon(epsilon)?;
    let mut h = Subspace::full(x.ambient_dim());
    let mut steps = Vec::new();
    loop {
        let cert = is_regular(x, &h, epsilon)?;
        if cert.regular {
            return Ok(RefinementTrace {
                steps,
                certificate: cert,
            });
        }
        let section_witness =
            most_frequent_witness(&cert.bad_cosets, h.dim())
                .expect("an irregular certificate has bad cosets");
        let lifted_witness = h.section_coordinates().lift_character(section_witness)?;
        let refined = h.intersect_kernel(lifted_witness)?;
        assert_eq!(refined.dim() + 1, h.dim(), "each cut removes one dimension");
        steps.push(RefineStep {
            dim_before: h.dim(),
            bad_cosets: cert.bad_cosets.len(),
            bad_mass: cert.bad_mass,
            section_witness,
            lifted_witness,
        });
        h = refined;
    }
}
