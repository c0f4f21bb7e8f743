//! Character sums of point sets: fast Walsh-Hadamard transforms, uniformity
//! reports, and exact tuple counting through the transform. Everything here
//! is integer-exact; the inverse transform divides by 2^n and asserts a zero
//! remainder instead of ever rounding.

use crate::error::{Error, Result};
use crate::gf2::GF2Vector;
use crate::pointset::PointSet;
use crate::Rational;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Pow, Signed, Zero};
use rayon::prelude::*;

/// Below this table length the transform runs serially.
const PAR_MIN_LEN: usize = 1 << 15;

/// In-place unnormalized Walsh-Hadamard butterfly. Applying it twice
/// multiplies the input by the table length.
pub(crate) fn fwht_i64(data: &mut [i64]) {
    assert!(data.len().is_power_of_two());
    let len = data.len();
    let mut half = 1;
    while half < len {
        let stride = 2 * half;
        if len < PAR_MIN_LEN {
            data.chunks_mut(stride).for_each(|c| butterfly_i64(c, half));
        } else if len / stride >= 8 {
            data.par_chunks_mut(stride)
                .for_each(|c| butterfly_i64(c, half));
        } else {
            // Few wide chunks near the end: parallelize inside each one.
            for chunk in data.chunks_mut(stride) {
                let (lo, hi) = chunk.split_at_mut(half);
                lo.par_iter_mut()
                    .zip(hi.par_iter_mut())
                    .with_min_len(1 << 12)
                    .for_each(|(a, b)| {
                        let (x, y) = (*a, *b);
                        *a = x + y;
                        *b = x - y;
                    });
            }
        }
        half = stride;
    }
}

fn butterfly_i64(chunk: &mut [i64], half: usize) {
    let (lo, hi) = chunk.split_at_mut(half);
    for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
        let (x, y) = (*a, *b);
        *a = x + y;
        *b = x - y;
    }
}

/// Serial transform over arbitrary-precision entries, used for the k-th
/// power pipeline whose values outgrow i64.
pub(crate) fn fwht_bigint(data: &mut [BigInt]) {
    assert!(data.len().is_power_of_two());
    let len = data.len();
    let mut half = 1;
    while half < len {
        for chunk in data.chunks_mut(2 * half) {
            let (lo, hi) = chunk.split_at_mut(half);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let x = std::mem::take(a);
                let y = std::mem::take(b);
                *a = &x + &y;
                *b = x - y;
            }
        }
        half *= 2;
    }
}

/// The table of character sums c_X(γ) = Σ_{x ∈ X} (−1)^{⟨γ,x⟩}, indexed by
/// γ as an integer. c_X(0) = |X|, and |c_X(γ)| ≤ |X| throughout.
#[derive(Clone, Debug)]
pub struct Spectrum {
    ambient_dim: usize,
    table: Vec<i64>,
}

impl Spectrum {
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn table(&self) -> &[i64] {
        &self.table
    }

    pub fn cardinality(&self) -> i64 {
        self.table[0]
    }

    pub fn value(&self, gamma: GF2Vector) -> Result<i64> {
        if gamma.dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                left: self.ambient_dim,
                right: gamma.dim(),
            });
        }
        Ok(self.table[gamma.bits() as usize])
    }
}

/// Transforms the indicator of X into its full character-sum table.
pub fn correlations(x: &PointSet) -> Spectrum {
    let n = x.ambient_dim();
    let mut table = vec![0i64; 1 << n];
    for bits in x.member_bits() {
        table[bits as usize] = 1;
    }
    fwht_i64(&mut table);
    Spectrum {
        ambient_dim: n,
        table,
    }
}

/// The worst character of a set: U = max_{γ≠0} |c_X(γ)| together with the
/// smallest γ attaining it and the exact ratio ε* = U / 2^n. A set is
/// ε-uniform exactly when ε* ≤ ε. In dimension 0 there are no nonzero
/// characters, so every set is uniform vacuously.
#[derive(Clone, Debug)]
pub struct UniformityReport {
    pub ambient_dim: usize,
    pub cardinality: usize,
    pub max_abs_correlation: i64,
    pub witness: Option<GF2Vector>,
    pub epsilon_star: Rational,
    pub vacuously_uniform: bool,
}

impl UniformityReport {
    pub fn is_uniform(&self, epsilon: &Rational) -> bool {
        self.epsilon_star <= *epsilon
    }
}

pub fn uniformity(x: &PointSet) -> UniformityReport {
    let n = x.ambient_dim();
    let spectrum = correlations(x);
    let mut max_abs = 0i64;
    let mut witness: Option<u32> = None;
    for (gamma, &c) in spectrum.table.iter().enumerate().skip(1) {
        if c.abs() > max_abs {
            max_abs = c.abs();
            witness = Some(gamma as u32);
        }
    }
    // A witness can be absent beyond the vacuous dimension-0 case: the full
    // space and the empty set have c(γ) = 0 for every γ ≠ 0.
    let witness = witness.map(|bits| GF2Vector::new(bits, n).expect("index in range"));
    UniformityReport {
        ambient_dim: n,
        cardinality: x.len(),
        max_abs_correlation: max_abs,
        witness,
        epsilon_star: Rational::new(BigInt::from(max_abs), BigInt::from(1u64) << n),
        vacuously_uniform: n == 0,
    }
}

/// N_k(y) = #{(x_1, …, x_k) ∈ X^k : x_1 + … + x_k = y} for every y, via
/// the k-th power of the spectrum and one inverse transform. Exact: the
/// final division by 2^n is asserted to leave no remainder.
pub fn count_sum_tuples(x: &PointSet, k: u32) -> Result<Vec<BigInt>> {
    if k == 0 {
        return Err(Error::InvalidInput(
            "tuple length k must be at least 1".into(),
        ));
    }
    let n = x.ambient_dim();
    let spectrum = correlations(x);
    let mut table: Vec<BigInt> = spectrum
        .table
        .iter()
        .map(|&c| Pow::pow(BigInt::from(c), k))
        .collect();
    fwht_bigint(&mut table);
    let size = BigInt::from(1u64) << n;
    table
        .into_iter()
        .map(|v| {
            let (q, r) = v.div_rem(&size);
            assert!(r.is_zero(), "inverse transform must divide exactly");
            assert!(!q.is_negative(), "tuple counts are nonnegative");
            Ok(q)
        })
        .collect()
}

/// T(X₁, X₂, X₃) = #{(x, y, z) ∈ X₁ × X₂ × X₃ : x + y + z = 0}, counted
/// with multiplicity (degenerate triples included). Equals
/// 2^{-n} Σ_γ c₁(γ) c₂(γ) c₃(γ); each summand fits in i128 because every
/// factor is bounded by 2^n ≤ 2^24.
pub fn count_zero_triples(x1: &PointSet, x2: &PointSet, x3: &PointSet) -> Result<BigInt> {
    let n = x1.ambient_dim();
    for other in [x2.ambient_dim(), x3.ambient_dim()] {
        if other != n {
            return Err(Error::DimensionMismatch {
                left: n,
                right: other,
            });
        }
    }
    let (s1, s2, s3) = (correlations(x1), correlations(x2), correlations(x3));
    let sum: i128 = s1
        .table
        .par_iter()
        .zip(s2.table.par_iter())
        .zip(s3.table.par_iter())
        .with_min_len(1 << 12)
        .map(|((&a, &b), &c)| a as i128 * b as i128 * c as i128)
        .sum();
    let size = 1i128 << n;
    assert!(sum.rem_euclid(size) == 0, "triple sum must divide exactly");
    let count = sum.div_euclid(size);
    assert!(count >= 0, "triple counts are nonnegative");
    Ok(BigInt::from(count))
}
