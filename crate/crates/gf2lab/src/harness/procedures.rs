//! Anchored counting procedures. Both experiments share one mechanism:
//! find a subspace whose coset sections behave uniformly, anchor on a dense
//! uniform coset, and convert spectral counts inside that coset into
//! structural conclusions about the whole set, checking every inequality
//! exactly along the way.

use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::gf2::{GF2Vector, Subspace};
use crate::harness::constants::{pow2, theorem_constants, ConstantsLedger, MAX_DYADIC_EXPONENT};
use crate::harness::{dump_instance, IneqCheck, Relation, VerifierReport};
use crate::matroid::{census, count_circuits_through, count_s0_bruteforce, Circuit};
use crate::pointset::PointSet;
use crate::regularity::{
    collect_bad, find_regular_subspace, mass_within_budget, most_frequent_witness, scan_cosets,
    CosetScan,
};
use crate::spectral::{count_sum_tuples, count_zero_triples, uniformity};
use crate::Rational;

/// An anchor a with the section A = {h in H : h+a in X} in H coordinates,
/// plus the exact comparisons that qualified the choice.
#[derive(Clone, Debug)]
pub struct AnchorChoice {
    pub anchor: GF2Vector,
    pub section: PointSet,
    pub report: VerifierReport,
}

/// Density and uniformity qualification of one coset, exactly:
/// |(a+H) ∩ X| >= threshold·|H| and section defect <= bound·|H|.
fn scan_qualifies(scan: &CosetScan, d: usize, threshold: &Rational, bound: &Rational) -> bool {
    let size = BigInt::one() << d;
    let dense =
        BigInt::from(scan.cardinality) * threshold.denom() >= threshold.numer() * &size;
    let uniform =
        BigInt::from(scan.max_abs_correlation) * bound.denom() <= bound.numer() * &size;
    dense && uniform
}

fn scan_table_json(scans: &[CosetScan]) -> serde_json::Value {
    serde_json::Value::Array(
        scans
            .iter()
            .map(|s| {
                serde_json::json!({
                    "rep": s.rep.to_string(),
                    "cardinality": s.cardinality,
                    "max_abs_correlation": s.max_abs_correlation,
                })
            })
            .collect(),
    )
}

/// Picks the first coset of H (by ascending representative, so a = 0 is
/// preferred) whose section is both dense, |A| >= (alpha - epsilon)·|H| for
/// alpha = |X|/2^n, and epsilon-uniform. Requires H epsilon-regular for X:
/// under regularity the bad cosets carry at most epsilon·2^n points, so the
/// remaining at least (alpha - epsilon)·2^n points spread over at most
/// 2^(n-d) uniform cosets and one of them must be dense. A miss would
/// falsify that pigeonhole argument and aborts with a counterexample dump.
pub fn pick_anchor(x: &PointSet, h: &Subspace, epsilon: &Rational) -> Result<AnchorChoice> {
    if epsilon.is_negative() {
        return Err(Error::InvalidInput(format!(
            "uniformity parameter {epsilon} must be nonnegative"
        )));
    }
    let started = Instant::now();
    let alpha = x.density();
    let threshold = &alpha - epsilon;
    if !threshold.is_positive() {
        return Err(Error::NonPositiveThreshold(format!(
            "anchor density threshold alpha - epsilon = {threshold}"
        )));
    }
    let n = x.ambient_dim();
    let d = h.dim();
    let scans = scan_cosets(x, h)?;
    if !mass_within_budget(collect_bad(&scans, d, epsilon).len(), d, n, epsilon) {
        return Err(Error::InvalidInput(format!(
            "anchor selection needs an {epsilon}-regular subspace; refine first"
        )));
    }
    // Σ over all v of |H_v(X)| = |X|·|H|: each coset contributes its
    // cardinality once per anchor in it.
    let coset_total: u64 = scans.iter().map(|s| s.cardinality as u64).sum();
    let identity = IneqCheck::new(
        "anchor-sum identity: sum over cosets of 2^d·|(a+H) ∩ X| = |X|·2^d",
        BigInt::from(coset_total) << d,
        Relation::Eq,
        BigInt::from(x.len()) << d,
    );
    if !identity.holds {
        let dump = dump_instance(
            "anchor-identity",
            x,
            &serde_json::json!({ "subspace": h.to_text(), "cosets": scan_table_json(&scans) }),
        );
        return Err(Error::Counterexample {
            what: "coset cardinalities do not add up to |X|".into(),
            dump,
        });
    }
    let Some(scan) = scans
        .iter()
        .find(|s| scan_qualifies(s, d, &threshold, epsilon))
    else {
        let dump = dump_instance(
            "anchor-miss",
            x,
            &serde_json::json!({
                "epsilon": epsilon.to_string(),
                "alpha": alpha.to_string(),
                "subspace": h.to_text(),
                "cosets": scan_table_json(&scans),
            }),
        );
        return Err(Error::Counterexample {
            what: format!(
                "no coset of the {epsilon}-regular subspace (dim {d}) is both \
                 (alpha-epsilon)-dense and epsilon-uniform, contradicting the pigeonhole bound"
            ),
            dump,
        });
    };
    let section = x.section(h, scan.rep)?.points;
    debug_assert_eq!(section.len(), scan.cardinality);
    let size = BigInt::one() << d;
    let mut report = VerifierReport::new(
        "anchored section selection: dense uniform coset of a regular subspace",
        format!(
            "n = {n}, |X| = {}, dim H = {d}, epsilon = {epsilon}, anchor = {}",
            x.len(),
            scan.rep
        ),
    );
    report.push(identity);
    report.push(IneqCheck::new(
        format!(
            "section density at a = {}: q·|A| >= p·2^d for alpha - epsilon = p/q",
            scan.rep
        ),
        BigInt::from(scan.cardinality) * threshold.denom(),
        Relation::Ge,
        threshold.numer() * &size,
    ));
    report.push(IneqCheck::new(
        format!(
            "section uniformity at a = {}: q·defect <= p·2^d for epsilon = p/q",
            scan.rep
        ),
        BigInt::from(scan.max_abs_correlation) * epsilon.denom(),
        Relation::Le,
        epsilon.numer() * &size,
    ));
    debug_assert!(report.pass);
    report.runtime_ms = Some(started.elapsed().as_millis());
    Ok(AnchorChoice {
        anchor: scan.rep,
        section,
        report,
    })
}

/// Which side of the dichotomy a set landed on.
#[derive(Clone, Debug)]
pub enum DichotomyBranch {
    /// The regular subspace misses X entirely; the refinement characters
    /// cover X, so the critical number is at most their count.
    CriticalBound {
        codim: usize,
        cover: Vec<GF2Vector>,
    },
    /// X meets the regular subspace; exact circuit statistics through the
    /// smallest common element, counted inside the anchored coset.
    CircuitCount {
        element: GF2Vector,
        anchor: GF2Vector,
        codim: usize,
        /// Ordered (k-1)-tuples over the anchored coset that sum to the
        /// element and have no zero-sum proper sub-tuple.
        nondegenerate: BigInt,
        /// nondegenerate / (k-1)!: the circuits of size k through the
        /// element inside the coset.
        circuits: BigInt,
        /// Independent depth-first recount, when the enumeration budget
        /// allows one.
        enumerated: Option<u64>,
        /// Full-census recount of the same quantity, when affordable.
        census_count: Option<u64>,
        /// circuits / 2^((k-2)·n), the scale the asymptotic statement
        /// speaks about.
        scaled_ratio: Rational,
    },
}

/// Result of the dichotomy experiment: the branch taken, the exact checks
/// behind it, and the symbolic constants for (density, k) when feasible.
#[derive(Clone, Debug)]
pub struct DichotomyOutcome {
    pub branch: DichotomyBranch,
    pub report: VerifierReport,
    pub constants: Option<ConstantsLedger>,
}

/// Runs the structure dichotomy on a simple set: refine to an
/// epsilon-regular subspace H; if H ∩ X is empty the refinement characters
/// certify a critical number of at most codim(H), otherwise anchor on a
/// dense uniform coset and count the size-k circuits through the smallest
/// element of H ∩ X exactly. Requires odd k >= 5 and density(X) > epsilon.
pub fn dichotomy_experiment(
    x: &PointSet,
    k: u32,
    epsilon: &Rational,
) -> Result<DichotomyOutcome> {
    if x.contains_zero() {
        return Err(Error::NotSimple);
    }
    if k < 5 || k.is_multiple_of(2) {
        return Err(Error::InvalidInput(format!(
            "the dichotomy needs an odd tuple length >= 5, got {k}"
        )));
    }
    let alpha = x.density();
    if alpha <= *epsilon {
        return Err(Error::NonPositiveThreshold(format!(
            "the dichotomy needs density {alpha} > epsilon {epsilon}"
        )));
    }
    let started = Instant::now();
    let n = x.ambient_dim();
    let trace = find_regular_subspace(x, epsilon)?;
    let h = trace.subspace();
    let codim = h.codim();
    debug_assert_eq!(codim, trace.steps.len());
    let inside = x.members_in_subspace(h)?;
    let constants = theorem_constants(&alpha, k).ok();

    if inside.is_empty() {
        let cover: Vec<GF2Vector> = trace.steps.iter().map(|s| s.lifted_witness).collect();
        let covered = x
            .iter()
            .filter(|&v| cover.iter().any(|&g| g.dot(v)))
            .count();
        let mut report = VerifierReport::new(
            "structure dichotomy: bounded critical number",
            format!(
                "n = {n}, |X| = {}, k = {k}, epsilon = {epsilon}, codim = {codim}",
                x.len()
            ),
        );
        report.push(IneqCheck::new(
            "the regular subspace misses X: |X ∩ H|",
            BigInt::from(inside.len()),
            Relation::Eq,
            BigInt::zero(),
        ));
        report.push(IneqCheck::new(
            format!("{codim} refinement characters cover X"),
            BigInt::from(covered),
            Relation::Eq,
            BigInt::from(x.len()),
        ));
        report.runtime_ms = Some(started.elapsed().as_millis());
        return Ok(DichotomyOutcome {
            branch: DichotomyBranch::CriticalBound { codim, cover },
            report,
            constants,
        });
    }

    let element = inside[0];
    let choice = pick_anchor(x, h, epsilon)?;
    let anchor = choice.anchor;
    // the anchored coset's members back in ambient coordinates
    let map = h.section_coordinates();
    let coset_members = choice
        .section
        .iter()
        .map(|p| Ok(map.backward(p)?.add(anchor)))
        .collect::<Result<Vec<GF2Vector>>>()?;
    let restricted = PointSet::from_members(n, coset_members.iter().copied())?;
    debug_assert_eq!(restricted.len(), choice.section.len());

    // Ordered (k-1)-tuples over the coset summing to the element lift to
    // w' = (w_1, ..., w_{k-1}, element); the nondegenerate ones hit each
    // size-k circuit through the element exactly (k-1)! times. Degeneracy
    // is judged on the lifted ambient tuples.
    let tuple_len = k - 1;
    let counts = count_sum_tuples(&restricted, tuple_len)?;
    let total = counts[element.bits() as usize].clone();
    let degenerate = count_s0_bruteforce(&restricted, tuple_len as usize, element)?;
    let nondegenerate = &total - &degenerate;
    let factorial: BigInt = (1..=u64::from(tuple_len)).map(BigInt::from).product();
    let (circuits, remainder) = nondegenerate.div_rem(&factorial);

    let mut report = VerifierReport::new(
        "structure dichotomy: exact circuit count through an element",
        format!(
            "n = {n}, |X| = {}, k = {k}, epsilon = {epsilon}, codim = {codim}, \
             element = {element}, anchor = {anchor}, |coset section| = {}",
            x.len(),
            restricted.len()
        ),
    );
    report.absorb(choice.report);
    let defect = uniformity(&restricted).max_abs_correlation;
    report.push(IneqCheck::new(
        "coset sum-count bound: 2^n·N_{k-1}(element) >= |A|^(k-1) - U^(k-3)·2^(2n)",
        &total << n,
        Relation::Ge,
        BigInt::from(restricted.len()).pow(tuple_len)
            - BigInt::from(defect).pow(tuple_len - 2) * (BigInt::one() << (2 * n)),
    ));
    report.push(IneqCheck::new(
        "nondegenerate tuples are nonnegative",
        nondegenerate.clone(),
        Relation::Ge,
        BigInt::zero(),
    ));
    report.push(IneqCheck::new(
        "nondegenerate tuples divisible by (k-1)!",
        remainder,
        Relation::Eq,
        BigInt::zero(),
    ));

    let mut with_element = coset_members;
    with_element.push(element);
    let through_set = PointSet::from_members(n, with_element)?;
    // budget or size limits make the recounts optional, never wrong
    let enumerated = match count_circuits_through(&through_set, element, k as usize) {
        Ok(c) => Some(c),
        Err(Error::Scale { .. } | Error::InvalidInput(_)) => None,
        Err(e) => return Err(e),
    };
    if let Some(c) = enumerated {
        report.push(IneqCheck::new(
            "lifted tuples equal (k-1)! times the enumerated circuits",
            nondegenerate.clone(),
            Relation::Eq,
            &factorial * BigInt::from(c),
        ));
    }
    let census_count = match census(&through_set, k as usize) {
        Ok(c) => c
            .per_element
            .iter()
            .find(|(e, _)| *e == element)
            .map(|&(_, count)| count),
        Err(Error::Scale { .. } | Error::InvalidInput(_)) => None,
        Err(e) => return Err(e),
    };
    if let Some(c) = census_count {
        report.push(IneqCheck::new(
            "census recount through the element",
            circuits.clone(),
            Relation::Eq,
            BigInt::from(c),
        ));
    }

    let log2_scale = (k - 2) as u64 * n as u64;
    let scaled_ratio = Rational::new(circuits.clone(), BigInt::one() << log2_scale);
    report.instance = format!(
        "{}, circuits = {circuits}, circuits/2^((k-2)n) = {scaled_ratio}",
        report.instance
    );
    report.runtime_ms = Some(started.elapsed().as_millis());
    Ok(DichotomyOutcome {
        branch: DichotomyBranch::CircuitCount {
            element,
            anchor,
            codim,
            nondegenerate,
            circuits,
            enumerated,
            census_count,
            scaled_ratio,
        },
        report,
        constants,
    })
}

/// One round of the flat-or-triangle loop.
#[derive(Clone, Debug)]
pub struct WeakerRound {
    pub dim: usize,
    /// |X ∩ H| at the start of the round.
    pub members_inside: u64,
    /// Anchor chosen this round (triangle extraction follows).
    pub anchor: Option<GF2Vector>,
    /// Ambient character the subspace was cut by (refinement rounds).
    pub refined_by: Option<GF2Vector>,
}

/// Terminal result of the flat-or-triangle procedure.
#[derive(Clone, Debug)]
pub enum WeakerOutcome {
    /// A subspace F with |F ∩ X| <= epsilon·|F|.
    Flat(Subspace),
    /// Three distinct members summing to zero: a size-3 circuit.
    Triangle(Circuit),
}

/// Full trace of one flat-or-triangle run.
#[derive(Clone, Debug)]
pub struct WeakerRun {
    pub epsilon: Rational,
    pub delta: Rational,
    pub rounds: Vec<WeakerRound>,
    pub outcome: WeakerOutcome,
}

impl WeakerRun {
    /// Dimensions cut away before terminating.
    pub fn achieved_codim(&self) -> usize {
        self.rounds.iter().filter(|r| r.refined_by.is_some()).count()
    }
}

/// Largest delta = 2^-j, j <= MAX_DYADIC_EXPONENT, with
/// epsilon·(epsilon - delta)^2 > delta.
fn select_delta(epsilon: &Rational) -> Result<Rational> {
    for j in 0..=MAX_DYADIC_EXPONENT {
        let delta = pow2(-i64::from(j));
        let gap = epsilon - &delta;
        if gap.is_positive() && epsilon * gap.pow(2) > delta {
            return Ok(delta);
        }
    }
    Err(Error::Infeasible(format!(
        "no delta = 2^-j with j <= {MAX_DYADIC_EXPONENT} satisfies \
         epsilon·(epsilon-delta)^2 > delta for epsilon = {epsilon}"
    )))
}

/// Finds either a flat almost disjoint from X or a triangle inside X.
///
/// Each round on the current subspace H: if |X ∩ H| <= epsilon·|H| that is
/// the flat; otherwise scan the cosets for an anchor whose section is
/// delta-uniform with |A| >= (epsilon - delta)·|H|. If one exists, the
/// triple count T(A, A, X ∩ H) is at least
/// (epsilon·(epsilon-delta)^2 - delta)·2^(2·dim H) > 0 by the choice of
/// delta, and any counted triple lifts to a genuine triangle of X because
/// the anchor is a coset representative. If none exists H cannot be
/// delta-regular: past the first round |X| > epsilon·2^n, while a regular
/// scan with no anchor caps |X| below (delta + epsilon - delta)·2^n; so
/// refine by the most frequent violating character and repeat. Dimension
/// zero always ends in the flat branch, hence termination.
pub fn weaker_procedure(x: &PointSet, epsilon: &Rational) -> Result<WeakerRun> {
    if x.contains_zero() {
        return Err(Error::NotSimple);
    }
    let delta = select_delta(epsilon)?;
    let anchor_threshold = epsilon - &delta;
    let n = x.ambient_dim();
    let mut h = Subspace::full(n);
    let mut rounds = Vec::new();
    let finish = |rounds: Vec<WeakerRound>, outcome| {
        Ok(WeakerRun {
            epsilon: epsilon.clone(),
            delta: delta.clone(),
            rounds,
            outcome,
        })
    };
    loop {
        let d = h.dim();
        let middle = x.section(&h, GF2Vector::zero(n))?.points;
        let inside = middle.len() as u64;
        if BigInt::from(inside) * epsilon.denom() <= epsilon.numer() * (BigInt::one() << d) {
            rounds.push(WeakerRound {
                dim: d,
                members_inside: inside,
                anchor: None,
                refined_by: None,
            });
            return finish(rounds, WeakerOutcome::Flat(h));
        }
        let scans = scan_cosets(x, &h)?;
        if let Some(scan) = scans
            .iter()
            .find(|s| scan_qualifies(s, d, &anchor_threshold, &delta))
        {
            let anchor = scan.rep;
            let section = x.section(&h, anchor)?.points;
            let cex = |what: String| {
                let dump = dump_instance(
                    "triangle-miss",
                    x,
                    &serde_json::json!({
                        "epsilon": epsilon.to_string(),
                        "delta": delta.to_string(),
                        "subspace": h.to_text(),
                        "anchor": anchor.to_string(),
                    }),
                );
                Error::Counterexample { what, dump }
            };
            let triples = count_zero_triples(&section, &section, &middle)?;
            if !triples.is_positive() {
                return Err(cex(format!(
                    "zero-sum triple count {triples} vanished although the counting \
                     bound forces it positive"
                )));
            }
            // lexicographically first witness (u, v, u+v)
            let witness = section.iter().find_map(|u| {
                section.iter().find_map(|v| {
                    let z = u.add(v);
                    middle
                        .contains(z)
                        .expect("section coordinates share one dimension")
                        .then_some((u, v, z))
                })
            });
            let Some((u, v, z)) = witness else {
                return Err(cex("positive triple count but no witness found".into()));
            };
            let map = h.section_coordinates();
            let t1 = map.backward(u)?.add(anchor);
            let t2 = map.backward(v)?.add(anchor);
            let t3 = map.backward(z)?;
            let lifted = [t1, t2, t3];
            if t1 == t2 || t1 == t3 || t2 == t3 {
                return Err(cex(format!("lifted triple {t1},{t2},{t3} is not distinct")));
            }
            if !t1.add(t2).add(t3).is_zero() {
                return Err(cex(format!("lifted triple {t1},{t2},{t3} does not sum to zero")));
            }
            for t in lifted {
                if !x.contains(t)? {
                    return Err(cex(format!("lifted member {t} is outside X")));
                }
            }
            let circuit = Circuit::new(lifted.to_vec())?;
            rounds.push(WeakerRound {
                dim: d,
                members_inside: inside,
                anchor: Some(anchor),
                refined_by: None,
            });
            return finish(rounds, WeakerOutcome::Triangle(circuit));
        }
        let bad = collect_bad(&scans, d, &delta);
        if mass_within_budget(bad.len(), d, n, &delta) {
            let dump = dump_instance(
                "regular-no-anchor",
                x,
                &serde_json::json!({
                    "epsilon": epsilon.to_string(),
                    "delta": delta.to_string(),
                    "subspace": h.to_text(),
                    "cosets": scan_table_json(&scans),
                }),
            );
            return Err(Error::Counterexample {
                what: format!(
                    "a delta-regular subspace (dim {d}) offered no dense uniform coset \
                     although |X| > epsilon·2^n"
                ),
                dump,
            });
        }
        let section_witness =
            most_frequent_witness(&bad, d).expect("an irregular scan has bad cosets");
        let lifted = h.section_coordinates().lift_character(section_witness)?;
        let refined = h.intersect_kernel(lifted)?;
        assert_eq!(refined.dim() + 1, h.dim(), "each cut removes one dimension");
        rounds.push(WeakerRound {
            dim: d,
            members_inside: inside,
            anchor: None,
            refined_by: Some(lifted),
        });
        h = refined;
    }
}
