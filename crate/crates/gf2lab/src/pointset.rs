//! Point sets X ⊆ GF(2)^n: bit-indexed membership, densities, translations,
//! coset sections, deterministic generators, and the `.gf2set` file format.

use crate::error::{Error, Result};
use crate::gf2::{GF2Vector, Subspace, MAX_AMBIENT_DIM};
use crate::Rational;
use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;
use std::path::{Path, PathBuf};

/// A subset of GF(2)^n with O(1) membership and cached cardinality.
#[derive(Clone, PartialEq, Eq)]
pub struct PointSet {
    ambient_dim: usize,
    blocks: Vec<u64>,
    cardinality: usize,
}

impl PointSet {
    pub fn empty(ambient_dim: usize) -> Result<Self> {
        if ambient_dim > MAX_AMBIENT_DIM {
            return Err(Error::Scale {
                what: "ambient dimension",
                n: ambient_dim,
                cap: MAX_AMBIENT_DIM,
            });
        }
        let bits = 1usize << ambient_dim;
        Ok(PointSet {
            ambient_dim,
            blocks: vec![0; bits.div_ceil(64).max(1)],
            cardinality: 0,
        })
    }

    pub fn from_members(
        ambient_dim: usize,
        members: impl IntoIterator<Item = GF2Vector>,
    ) -> Result<Self> {
        let mut set = PointSet::empty(ambient_dim)?;
        for v in members {
            if v.dim() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    left: ambient_dim,
                    right: v.dim(),
                });
            }
            set.insert_bits(v.bits());
        }
        Ok(set)
    }

    pub(crate) fn from_bits(
        ambient_dim: usize,
        members: impl IntoIterator<Item = u32>,
    ) -> Result<Self> {
        let mut set = PointSet::empty(ambient_dim)?;
        for bits in members {
            if u64::from(bits) >= 1u64 << ambient_dim {
                return Err(Error::OutOfRange {
                    bits,
                    dim: ambient_dim,
                });
            }
            set.insert_bits(bits);
        }
        Ok(set)
    }

    pub(crate) fn insert_bits(&mut self, bits: u32) {
        let (block, bit) = (bits as usize / 64, bits % 64);
        if (self.blocks[block] >> bit) & 1 == 0 {
            self.blocks[block] |= 1 << bit;
            self.cardinality += 1;
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn len(&self) -> usize {
        self.cardinality
    }

    pub fn is_empty(&self) -> bool {
        self.cardinality == 0
    }

    pub fn space_size(&self) -> u64 {
        1u64 << self.ambient_dim
    }

    pub fn contains(&self, v: GF2Vector) -> Result<bool> {
        if v.dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                left: self.ambient_dim,
                right: v.dim(),
            });
        }
        Ok(self.contains_bits(v.bits()))
    }

    pub(crate) fn contains_bits(&self, bits: u32) -> bool {
        (self.blocks[bits as usize / 64] >> (bits % 64)) & 1 == 1
    }

    pub fn contains_zero(&self) -> bool {
        self.contains_bits(0)
    }

    /// Members ascending as raw words.
    pub fn member_bits(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.cardinality);
        for (i, &block) in self.blocks.iter().enumerate() {
            let mut b = block;
            while b != 0 {
                let t = b.trailing_zeros();
                out.push(i as u32 * 64 + t);
                b &= b - 1;
            }
        }
        out
    }

    /// Members ascending.
    pub fn iter(&self) -> impl Iterator<Item = GF2Vector> + '_ {
        let dim = self.ambient_dim;
        self.blocks.iter().enumerate().flat_map(move |(i, &block)| {
            BlockBits { block, base: i as u32 * 64 }
                .map(move |bits| GF2Vector::new(bits, dim).expect("member in range"))
        })
    }

    /// |X| / 2^n as an exact rational.
    pub fn density(&self) -> Rational {
        Rational::new(
            BigInt::from(self.cardinality),
            BigInt::from(1u64) << self.ambient_dim,
        )
    }

    /// {x + v : x ∈ X}; a bijection, so the cardinality is preserved.
    pub fn translate(&self, v: GF2Vector) -> Result<PointSet> {
        if v.dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                left: self.ambient_dim,
                right: v.dim(),
            });
        }
        PointSet::from_bits(self.ambient_dim, self.member_bits().iter().map(|&b| b ^ v.bits()))
    }

    /// The section {h ∈ H : h + v ∈ X}, expressed in H's coordinates.
    pub fn section(&self, subspace: &Subspace, anchor: GF2Vector) -> Result<SectionResult> {
        if subspace.ambient_dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                left: self.ambient_dim,
                right: subspace.ambient_dim(),
            });
        }
        if anchor.dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                left: self.ambient_dim,
                right: anchor.dim(),
            });
        }
        let map = subspace.section_coordinates();
        let mut points = PointSet::empty(subspace.dim())?;
        for h in subspace.elements() {
            if self.contains_bits(h.bits() ^ anchor.bits()) {
                points.insert_bits(map.gather(h.bits()));
            }
        }
        Ok(SectionResult {
            subspace: subspace.clone(),
            anchor,
            points,
        })
    }

    /// Members of the subspace that lie in X, ascending.
    pub fn members_in_subspace(&self, subspace: &Subspace) -> Result<Vec<GF2Vector>> {
        if subspace.ambient_dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                left: self.ambient_dim,
                right: subspace.ambient_dim(),
            });
        }
        let mut hits: Vec<u32> = subspace
            .elements()
            .filter(|h| self.contains_bits(h.bits()))
            .map(|h| h.bits())
            .collect();
        hits.sort_unstable();
        Ok(hits
            .into_iter()
            .map(|b| GF2Vector::new(b, self.ambient_dim).expect("member in range"))
            .collect())
    }

    /// Exhaustive scan for a zero-sum triple of distinct members.
    pub fn has_zero_sum_triple(&self) -> bool {
        let members = self.member_bits();
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                // Any distinct triple sorted a < b < c is seen at its two
                // smallest members; c > b also rules out a = 0 (c = b then).
                let c = a ^ b;
                if c > b && self.contains_bits(c) {
                    return true;
                }
            }
        }
        false
    }

    pub fn to_gf2set_string(&self) -> String {
        let mut out = format!("n={}\n", self.ambient_dim);
        for v in self.iter() {
            out.push_str(&v.to_string());
            out.push('\n');
        }
        out
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_gf2set_string()).map_err(Error::io(path.display().to_string()))
    }

    pub fn load(path: &Path) -> Result<PointSet> {
        let text =
            std::fs::read_to_string(path).map_err(Error::io(path.display().to_string()))?;
        PointSet::parse_gf2set(&text)
    }

    /// Parses the `.gf2set` format: a `n=<dim>` header, then one MSB-first
    /// 0/1 line per member (coordinate 0 is the last character). `#` lines
    /// are comments. Duplicate members and wrong-length lines are rejected.
    pub fn parse_gf2set(text: &str) -> Result<PointSet> {
        let mut dim: Option<usize> = None;
        let mut set: Option<PointSet> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            match dim {
                None => {
                    let value = line.strip_prefix("n=").ok_or_else(|| Error::Parse {
                        line: idx + 1,
                        msg: format!("expected header n=<dim>, found {line:?}"),
                    })?;
                    let n: usize = value.trim().parse().map_err(|_| Error::Parse {
                        line: idx + 1,
                        msg: format!("invalid dimension {value:?}"),
                    })?;
                    set = Some(PointSet::empty(n)?);
                    dim = Some(n);
                }
                Some(n) => {
                    if line.len() != n {
                        return Err(Error::Parse {
                            line: idx + 1,
                            msg: format!("expected {n} characters, found {}", line.len()),
                        });
                    }
                    let v = GF2Vector::parse_bits(line).map_err(|e| match e {
                        Error::Parse { msg, .. } => Error::Parse { line: idx + 1, msg },
                        other => other,
                    })?;
                    let set = set.as_mut().expect("header parsed");
                    if set.contains_bits(v.bits()) {
                        return Err(Error::Parse {
                            line: idx + 1,
                            msg: format!("duplicate vector {line}"),
                        });
                    }
                    set.insert_bits(v.bits());
                }
            }
        }
        set.ok_or_else(|| Error::Parse {
            line: 0,
            msg: "missing n=<dim> header".into(),
        })
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PointSet(n={}, |X|={})", self.ambient_dim, self.cardinality)
    }
}

struct BlockBits {
    block: u64,
    base: u32,
}

impl Iterator for BlockBits {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        if self.block == 0 {
            return None;
        }
        let t = self.block.trailing_zeros();
        self.block &= self.block - 1;
        Some(self.base + t)
    }
}

/// A section H_v(X) = {h ∈ H : h + v ∈ X} carried in H's coordinates.
#[derive(Clone, Debug)]
pub struct SectionResult {
    pub subspace: Subspace,
    pub anchor: GF2Vector,
    pub points: PointSet,
}

/// Deterministic point-set generators. Every kind is a pure function of its
/// parameters and the seed (the RNG is ChaCha8 seeded with the given word).
#[derive(Clone, Debug)]
pub enum Generator {
    /// All 2^n − 1 nonzero vectors.
    Projective { n: usize },
    /// {x : ⟨γ, x⟩ = 1} for a nonzero γ.
    AffineLayer { gamma: GF2Vector },
    /// Each nonzero vector independently with probability p (exact within
    /// 2^-64 via integer threshold comparison).
    RandomDensity { n: usize, p: Rational },
    /// Greedy insertion over a seeded shuffle, rejecting any x that would
    /// complete a zero-sum triple {a, b, a+b}.
    RandomTriangleFree { n: usize },
    /// Loads a `.gf2set` file; the seed is ignored.
    FromFile { path: PathBuf },
}

/// Cap for the greedy triangle-free generator (quadratic insertion cost).
pub const MAX_TRIANGLE_FREE_DIM: usize = 16;

pub fn generate(kind: &Generator, seed: u64) -> Result<PointSet> {
    match kind {
        Generator::Projective { n } => projective(*n),
        Generator::AffineLayer { gamma } => affine_layer(*gamma),
        Generator::RandomDensity { n, p } => random_density(*n, p, seed),
        Generator::RandomTriangleFree { n } => random_triangle_free(*n, seed),
        Generator::FromFile { path } => PointSet::load(path),
    }
}

/// All nonzero vectors of GF(2)^n.
pub fn projective(n: usize) -> Result<PointSet> {
    PointSet::from_bits(n, 1..1u32 << n)
}

/// The affine layer {x : ⟨γ, x⟩ = 1}; never contains 0.
pub fn affine_layer(gamma: GF2Vector) -> Result<PointSet> {
    if gamma.is_zero() {
        return Err(Error::ZeroCharacter);
    }
    let n = gamma.dim();
    PointSet::from_bits(
        n,
        (1..1u32 << n).filter(|&x| (x & gamma.bits()).count_ones() & 1 == 1),
    )
}

/// Independent inclusion of each nonzero vector with probability p.
pub fn random_density(n: usize, p: &Rational, seed: u64) -> Result<PointSet> {
    use num_traits::{One, Signed, Zero};
    if p.is_negative() || p > &Rational::one() {
        return Err(Error::BadProbability(p.to_string()));
    }
    let mut set = PointSet::empty(n)?;
    if p.is_zero() {
        return Ok(set);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // Include x iff draw < threshold where threshold = ⌊(a·2^64 − 1)/q⌋ + 1
    // for p = a/q, i.e. ⌈a·2^64/q⌉: the inclusion probability is within
    // 2^-64 of p, and the same seed yields nested sets as p grows.
    let threshold: BigInt = ((p.numer() << 64u32) - 1) / p.denom() + 1;
    let threshold_u64: Option<u64> = if threshold > BigInt::from(u64::MAX) {
        None // p = 1: include everything
    } else {
        Some(u64::try_from(threshold).expect("threshold fits"))
    };
    for x in 1..1u32 << n {
        let draw: u64 = rng.gen();
        let include = match threshold_u64 {
            None => true,
            Some(t) => draw < t,
        };
        if include {
            set.insert_bits(x);
        }
    }
    Ok(set)
}

/// Greedy random maximal set with no zero-sum triple.
pub fn random_triangle_free(n: usize, seed: u64) -> Result<PointSet> {
    if n > MAX_TRIANGLE_FREE_DIM {
        return Err(Error::Scale {
            what: "triangle-free generation",
            n,
            cap: MAX_TRIANGLE_FREE_DIM,
        });
    }
    let mut order: Vec<u32> = (1..1u32 << n).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    order.shuffle(&mut rng);
    let mut set = PointSet::empty(n)?;
    let mut members: Vec<u32> = Vec::new();
    'candidates: for x in order {
        for &a in &members {
            if set.contains_bits(a ^ x) {
                continue 'candidates;
            }
        }
        set.insert_bits(x);
        members.push(x);
    }
    Ok(set)
}
