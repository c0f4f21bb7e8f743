//! Critical number of a simple point set: the least number of characters
//! γ₁, …, γ_c such that every member fails some ⟨γᵢ, x⟩ = 0, equivalently
//! the least codimension of a subspace disjoint from X. The exact solver
//! runs iterative deepening over canonical character sequences; the greedy
//! variant picks the most-covering character each round and certifies an
//! upper bound.

use crate::error::{Error, Result};
use crate::gf2::{enumerate_subspaces, GF2Vector, Subspace, MAX_ENUM_DIM};
use crate::pointset::PointSet;
use crate::spectral::correlations;
use std::fmt;

/// Cap for the exact branch-and-bound search.
pub const MAX_CRITICAL_DIM: usize = 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CriticalMethod {
    Exact,
    Greedy,
}

impl fmt::Display for CriticalMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CriticalMethod::Exact => "exact",
            CriticalMethod::Greedy => "greedy",
        })
    }
}

#[derive(Clone, Debug)]
pub struct CriticalResult {
    pub value: usize,
    /// Characters witnessing the cover, as an ascending canonical sequence
    /// for the exact method and in selection order for the greedy one.
    pub witness_basis: Vec<GF2Vector>,
    pub method: CriticalMethod,
    pub nodes_expanded: u64,
}

fn msb(bits: u32) -> usize {
    debug_assert!(bits != 0);
    31 - bits.leading_zeros() as usize
}

fn floor_log2(value: u64) -> usize {
    debug_assert!(value != 0);
    63 - value.leading_zeros() as usize
}

struct Search {
    n: usize,
    target: usize,
    nodes: u64,
}

impl Search {
    /// Depth-first search over canonical sequences: each new character is
    /// larger than the last and free of all chosen pivot positions, so its
    /// leading bit strictly exceeds every earlier one and each candidate
    /// subspace is generated once. Returns the lexicographically first
    /// cover of size at most `target`, ascending.
    fn run(&mut self, uncovered: &[u32], pivot_mask: u32, last: u32, depth: usize) -> Option<Vec<u32>> {
        if uncovered.is_empty() {
            return Some(Vec::new());
        }
        if depth == self.target {
            return None;
        }
        // Any final avoiding kernel lives inside the current one and misses
        // every uncovered member, which bounds the cover size from below.
        let free = (1u64 << (self.n - depth)) - uncovered.len() as u64;
        let needed = self.n - floor_log2(free);
        if needed > self.target {
            return None;
        }
        let last_level = depth + 1 == self.target;
        for c in (last + 1)..(1u32 << self.n) {
            if c & pivot_mask != 0 {
                continue;
            }
            let m = msb(c);
            // Leading bits only grow, so this candidate's subtree tops out
            // at depth + (n - m) dimensions.
            if depth + 1 + (self.n - 1 - m) < needed {
                break;
            }
            self.nodes += 1;
            if last_level {
                // The final character must cover everything left; probe
                // with early exit instead of materializing the remainder.
                if uncovered.iter().all(|&v| (v & c).count_ones() & 1 == 1) {
                    return Some(vec![c]);
                }
                continue;
            }
            let next: Vec<u32> = uncovered
                .iter()
                .copied()
                .filter(|&v| (v & c).count_ones() & 1 == 0)
                .collect();
            if let Some(mut tail) = self.run(&next, pivot_mask | (1 << m), c, depth + 1) {
                tail.insert(0, c);
                return Some(tail);
            }
        }
        None
    }
}

/// Exact critical number with a deterministic lexicographically-first
/// witness, found by iterative deepening from the kernel-size lower bound.
pub fn critical_number(x: &PointSet) -> Result<CriticalResult> {
    let n = x.ambient_dim();
    if n > MAX_CRITICAL_DIM {
        return Err(Error::Scale {
            what: "exact critical number",
            n,
            cap: MAX_CRITICAL_DIM,
        });
    }
    if x.contains_zero() {
        return Err(Error::NotSimple);
    }
    let members = x.member_bits();
    if members.is_empty() {
        return Ok(CriticalResult {
            value: 0,
            witness_basis: Vec::new(),
            method: CriticalMethod::Exact,
            nodes_expanded: 0,
        });
    }
    let free = (1u64 << n) - members.len() as u64;
    let start = (n - floor_log2(free)).max(1);
    let mut search = Search {
        n,
        target: start,
        nodes: 0,
    };
    for target in start..=n {
        search.target = target;
        if let Some(chars) = search.run(&members, 0, 0, 0) {
            let witness_basis = chars
                .into_iter()
                .map(|c| GF2Vector::new(c, n).expect("candidate in range"))
                .collect::<Vec<_>>();
            return Ok(CriticalResult {
                value: witness_basis.len(),
                witness_basis,
                method: CriticalMethod::Exact,
                nodes_expanded: search.nodes,
            });
        }
    }
    unreachable!("the unit characters always cover a simple set")
}

/// One greedy round: the chosen character, how many members it covered,
/// and how many remained afterwards.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreedyRound {
    pub character: GF2Vector,
    pub covered: usize,
    pub remaining: usize,
}

/// A greedy cover certificate: the chosen characters are independent, so
/// their common kernel avoids X and has codimension exactly `size()`.
#[derive(Clone, Debug)]
pub struct GreedyCover {
    pub rounds: Vec<GreedyRound>,
    /// Common kernel of the chosen characters; disjoint from X.
    pub avoiding: Subspace,
}

impl GreedyCover {
    pub fn characters(&self) -> Vec<GF2Vector> {
        self.rounds.iter().map(|r| r.character).collect()
    }

    pub fn size(&self) -> usize {
        self.rounds.len()
    }

    pub fn to_result(&self) -> CriticalResult {
        CriticalResult {
            value: self.size(),
            witness_basis: self.characters(),
            method: CriticalMethod::Greedy,
            nodes_expanded: self.size() as u64,
        }
    }
}

/// Repeatedly picks the character with the most negative correlation on
/// the uncovered remainder (ties to the smallest), covering at least half
/// of it each round. The remainder always lies in the kernel of every
/// chosen character, which keeps the choices independent.
pub fn greedy_cover(x: &PointSet) -> Result<GreedyCover> {
    let n = x.ambient_dim();
    if x.contains_zero() {
        return Err(Error::NotSimple);
    }
    let mut remaining = x.clone();
    let mut rounds = Vec::new();
    while !remaining.is_empty() {
        let spectrum = correlations(&remaining);
        let mut best = None::<(i64, u32)>;
        for (gamma, &c) in spectrum.table().iter().enumerate().skip(1) {
            if best.is_none_or(|(bc, _)| c < bc) {
                best = Some((c, gamma as u32));
            }
        }
        let (c, gamma_bits) = best.expect("nonzero characters exist for a nonempty simple set");
        let before = remaining.len();
        let covered = ((before as i64 - c) / 2) as usize;
        remaining = PointSet::from_bits(
            n,
            remaining
                .member_bits()
                .into_iter()
                .filter(|&b| (b & gamma_bits).count_ones() & 1 == 0),
        )?;
        assert_eq!(covered, before - remaining.len(), "correlation bookkeeping");
        assert!(covered * 2 >= before, "a simple remainder is at least half covered");
        rounds.push(GreedyRound {
            character: GF2Vector::new(gamma_bits, n).expect("index in range"),
            covered,
            remaining: remaining.len(),
        });
    }
    let characters: Vec<GF2Vector> = rounds.iter().map(|r| r.character).collect();
    let avoiding = Subspace::kernel_of(n, &characters)?;
    assert_eq!(
        avoiding.codim(),
        rounds.len(),
        "greedy characters are independent"
    );
    Ok(GreedyCover { rounds, avoiding })
}

/// Reference value by exhausting subspaces in descending dimension; only
/// for small ambient dimensions.
pub fn critical_by_enumeration(x: &PointSet) -> Result<usize> {
    let n = x.ambient_dim();
    if n > MAX_ENUM_DIM {
        return Err(Error::Scale {
            what: "critical number by enumeration",
            n,
            cap: MAX_ENUM_DIM,
        });
    }
    if x.contains_zero() {
        return Err(Error::NotSimple);
    }
    for d in (0..=n).rev() {
        for h in enumerate_subspaces(n, d)? {
            if h.elements().all(|v| !x.contains(v).expect("same dimension")) {
                return Ok(n - d);
            }
        }
    }
    unreachable!("the zero subspace avoids every simple set")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pointset::{affine_layer, projective, random_density};
    use crate::Rational;

    fn v(s: &str) -> GF2Vector {
        GF2Vector::parse_bits(s).unwrap()
    }

    fn covers(x: &PointSet, chars: &[GF2Vector]) -> bool {
        x.iter().all(|p| chars.iter().any(|&g| p.dot(g)))
    }

    #[test]
    fn projective_sets_need_full_codimension() {
        let r = critical_number(&projective(3).unwrap()).unwrap();
        assert_eq!(r.value, 3);
        assert_eq!(r.witness_basis, vec![v("001"), v("010"), v("100")]);
        assert_eq!(r.method, CriticalMethod::Exact);
        assert!(r.nodes_expanded > 0);

        let r4 = critical_number(&projective(4).unwrap()).unwrap();
        assert_eq!(r4.value, 4);
        assert!(covers(&projective(4).unwrap(), &r4.witness_basis));
    }

    #[test]
    fn affine_layers_have_critical_one() {
        for n in [3usize, 5, 8] {
            for gbits in [1u32, 3, (1 << n) - 1] {
                let gamma = GF2Vector::new(gbits, n).unwrap();
                let layer = affine_layer(gamma).unwrap();
                let r = critical_number(&layer).unwrap();
                assert_eq!(r.value, 1);
                assert_eq!(r.witness_basis, vec![gamma]);
            }
        }
    }

    #[test]
    fn exact_agrees_with_enumeration() {
        for seed in 0..6 {
            for denom in [2i64, 4] {
                let x = random_density(5, &Rational::new(1.into(), denom.into()), seed).unwrap();
                if x.contains_zero() {
                    continue;
                }
                let exact = critical_number(&x).unwrap();
                assert_eq!(exact.value, critical_by_enumeration(&x).unwrap());
                assert!(covers(&x, &exact.witness_basis));
                assert_eq!(exact.witness_basis.len(), exact.value);
            }
        }
    }

    #[test]
    fn exact_never_exceeds_greedy() {
        for seed in 0..6 {
            let x = random_density(7, &Rational::new(1.into(), 3.into()), seed).unwrap();
            if x.contains_zero() {
                continue;
            }
            let exact = critical_number(&x).unwrap();
            let greedy = greedy_cover(&x).unwrap();
            assert!(exact.value <= greedy.size());
            assert!(covers(&x, &greedy.characters()));
        }
    }

    #[test]
    fn critical_is_monotone_under_inclusion() {
        let y = random_density(6, &Rational::new(1.into(), 2.into()), 13).unwrap();
        let big = critical_number(&y);
        if y.contains_zero() {
            assert!(matches!(big, Err(Error::NotSimple)));
            return;
        }
        let big = big.unwrap().value;
        let half: Vec<GF2Vector> = y.iter().step_by(2).collect();
        let x = PointSet::from_members(6, half).unwrap();
        assert!(critical_number(&x).unwrap().value <= big);
    }

    #[test]
    fn greedy_trace_on_the_fano_plane() {
        let cover = greedy_cover(&projective(3).unwrap()).unwrap();
        let trace: Vec<(GF2Vector, usize)> = cover
            .rounds
            .iter()
            .map(|r| (r.character, r.covered))
            .collect();
        assert_eq!(
            trace,
            vec![(v("001"), 4), (v("010"), 2), (v("100"), 1)]
        );
        assert_eq!(cover.rounds.last().unwrap().remaining, 0);
        assert_eq!(cover.avoiding.dim(), 0);
        let result = cover.to_result();
        assert_eq!(result.value, 3);
        assert_eq!(result.method, CriticalMethod::Greedy);
    }

    #[test]
    fn greedy_kernel_avoids_the_set() {
        for seed in [1u64, 4, 11] {
            let x = random_density(8, &Rational::new(1.into(), 5.into()), seed).unwrap();
            if x.contains_zero() {
                continue;
            }
            let cover = greedy_cover(&x).unwrap();
            assert_eq!(cover.avoiding.codim(), cover.size());
            for h in cover.avoiding.elements() {
                assert!(!x.contains(h).unwrap());
            }
        }
    }

    #[test]
    fn degenerate_and_error_cases() {
        let empty = PointSet::empty(5).unwrap();
        let r = critical_number(&empty).unwrap();
        assert_eq!((r.value, r.nodes_expanded), (0, 0));
        assert!(r.witness_basis.is_empty());
        let g = greedy_cover(&empty).unwrap();
        assert_eq!(g.size(), 0);
        assert_eq!(g.avoiding.dim(), 5);

        let with_zero =
            PointSet::from_members(3, [GF2Vector::zero(3), v("001")]).unwrap();
        assert!(matches!(critical_number(&with_zero), Err(Error::NotSimple)));
        assert!(matches!(greedy_cover(&with_zero), Err(Error::NotSimple)));
        assert!(matches!(
            critical_by_enumeration(&with_zero),
            Err(Error::NotSimple)
        ));

        let too_big = PointSet::empty(15).unwrap();
        assert!(matches!(critical_number(&too_big), Err(Error::Scale { .. })));
        let oracle_cap = PointSet::empty(7).unwrap();
        assert!(matches!(
            critical_by_enumeration(&oracle_cap),
            Err(Error::Scale { .. })
        ));
    }

    #[test]
    fn exact_handles_a_wide_structured_instance() {
        // Union of two affine layers in dimension 12; the two defining
        // characters cover it and no single character does.
        let n = 12;
        let g1 = GF2Vector::new(0b011, n).unwrap();
        let g2 = GF2Vector::new(0b101, n).unwrap();
        let union = PointSet::from_members(
            n,
            affine_layer(g1)
                .unwrap()
                .iter()
                .chain(affine_layer(g2).unwrap().iter()),
        )
        .unwrap();
        let r = critical_number(&union).unwrap();
        assert_eq!(r.value, 2);
        assert!(covers(&union, &r.witness_basis));
    }
}
