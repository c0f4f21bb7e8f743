//! Exact linear algebra over GF(2)^n.
//!
//! Vectors are n-bit machine words: bit `i` is coordinate `i`, addition is
//! XOR, and a nonzero vector doubles as a character via the parity dot
//! product. Subspaces are stored as a canonical reduced-row-echelon basis:
//! the pivot of a row is its most significant set bit, rows are sorted by
//! pivot, and every pivot bit is cleared from all other rows. The normal
//! form buys several things at once: structural equality and hashing are
//! cheap, the coset representatives are exactly the pivot-free integers
//! (each the minimum of its coset), and coordinates on a subspace are plain
//! bit gathers from the pivot positions.

use crate::error::{Error, Result};
use std::fmt;

/// Hard cap on ambient dimension: membership tables elsewhere are 2^n long.
pub const MAX_AMBIENT_DIM: usize = 24;

/// Cap for exhaustive subspace enumeration (used as a test oracle).
pub const MAX_ENUM_DIM: usize = 6;

/// An element of GF(2)^n carried together with its ambient dimension.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GF2Vector {
    bits: u32,
    dim: usize,
}

impl GF2Vector {
    pub fn new(bits: u32, dim: usize) -> Result<Self> {
        if dim > MAX_AMBIENT_DIM {
            return Err(Error::Scale {
                what: "ambient dimension",
                n: dim,
                cap: MAX_AMBIENT_DIM,
            });
        }
        if dim < 32 && bits >= 1u32 << dim {
            return Err(Error::OutOfRange { bits, dim });
        }
        Ok(GF2Vector { bits, dim })
    }

    pub fn zero(dim: usize) -> Self {
        assert!(dim <= MAX_AMBIENT_DIM);
        GF2Vector { bits: 0, dim }
    }

    /// Standard basis vector e_i.
    pub fn unit(i: usize, dim: usize) -> Self {
        assert!(i < dim && dim <= MAX_AMBIENT_DIM);
        GF2Vector { bits: 1 << i, dim }
    }

    pub fn bits(self) -> u32 {
        self.bits
    }

    pub fn dim(self) -> usize {
        self.dim
    }

    pub fn is_zero(self) -> bool {
        self.bits == 0
    }

    pub fn coordinate(self, i: usize) -> bool {
        assert!(i < self.dim);
        (self.bits >> i) & 1 == 1
    }

    /// Sum in GF(2)^n. Panics on mismatched ambient dimensions; boundary
    /// operations validate dimensions before entering hot loops.
    #[allow(clippy::should_implement_trait)]
    pub fn add(self, other: Self) -> Self {
        assert_eq!(self.dim, other.dim, "ambient dimension mismatch");
        GF2Vector {
            bits: self.bits ^ other.bits,
            dim: self.dim,
        }
    }

    /// Parity dot product ⟨u, v⟩.
    pub fn dot(self, other: Self) -> bool {
        assert_eq!(self.dim, other.dim, "ambient dimension mismatch");
        (self.bits & other.bits).count_ones() & 1 == 1
    }

    /// Parses an MSB-first 0/1 string; the last character is coordinate 0.
    pub fn parse_bits(s: &str) -> Result<Self> {
        let dim = s.len();
        if dim == 0 || dim > MAX_AMBIENT_DIM {
            return Err(Error::Parse {
                line: 0,
                msg: format!("bitstring length {dim} not in 1..={MAX_AMBIENT_DIM}"),
            });
        }
        let mut bits = 0u32;
        for c in s.chars() {
            bits = (bits << 1)
                | match c {
                    '0' => 0,
                    '1' => 1,
                    _ => {
                        return Err(Error::Parse {
                            line: 0,
                            msg: format!("invalid character {c:?} in bitstring {s:?}"),
                        })
                    }
                };
        }
        Ok(GF2Vector { bits, dim })
    }
}

impl std::str::FromStr for GF2Vector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GF2Vector::parse_bits(s)
    }
}

impl fmt::Display for GF2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in (0..self.dim).rev() {
            f.write_str(if (self.bits >> i) & 1 == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for GF2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}₍{}₎", self.dim)
    }
}

fn msb(bits: u32) -> u32 {
    debug_assert!(bits != 0);
    31 - bits.leading_zeros()
}

/// A subspace of GF(2)^n in canonical reduced-row-echelon form.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient_dim: usize,
    /// RREF rows, sorted ascending (equivalently: by pivot, the MSB).
    basis: Vec<GF2Vector>,
    /// OR of all pivot bits; reps of cosets are exactly the pivot-free words.
    pivot_mask: u32,
}

impl Subspace {
    fn from_rref_rows(ambient_dim: usize, mut rows: Vec<u32>) -> Self {
        rows.sort_unstable();
        let pivot_mask = rows.iter().fold(0, |m, &r| m | (1 << msb(r)));
        Subspace {
            ambient_dim,
            basis: rows
                .into_iter()
                .map(|bits| GF2Vector {
                    bits,
                    dim: ambient_dim,
                })
                .collect(),
            pivot_mask,
        }
    }

    /// The zero subspace {0}.
    pub fn zero(ambient_dim: usize) -> Self {
        assert!(ambient_dim <= MAX_AMBIENT_DIM);
        Subspace {
            ambient_dim,
            basis: Vec::new(),
            pivot_mask: 0,
        }
    }

    /// The full space GF(2)^n.
    pub fn full(ambient_dim: usize) -> Self {
        assert!(ambient_dim <= MAX_AMBIENT_DIM);
        Subspace::from_rref_rows(ambient_dim, (0..ambient_dim).map(|i| 1u32 << i).collect())
    }

    /// Canonical span of any list of vectors (Gaussian elimination).
    pub fn span(ambient_dim: usize, vectors: &[GF2Vector]) -> Result<Self> {
        if ambient_dim > MAX_AMBIENT_DIM {
            return Err(Error::Scale {
                what: "ambient dimension",
                n: ambient_dim,
                cap: MAX_AMBIENT_DIM,
            });
        }
        let mut rows: Vec<u32> = Vec::new();
        for v in vectors {
            if v.dim != ambient_dim {
                return Err(Error::DimensionMismatch {
                    left: ambient_dim,
                    right: v.dim,
                });
            }
            let mut b = v.bits;
            for &r in &rows {
                if (b >> msb(r)) & 1 == 1 {
                    b ^= r;
                }
            }
            if b != 0 {
                let p = msb(b);
                for r in rows.iter_mut() {
                    if (*r >> p) & 1 == 1 {
                        *r ^= b;
                    }
                }
                rows.push(b);
            }
        }
        Ok(Subspace::from_rref_rows(ambient_dim, rows))
    }

    /// The kernel {v : ⟨γ, v⟩ = 0 for every given character γ}.
    pub fn kernel_of(ambient_dim: usize, characters: &[GF2Vector]) -> Result<Self> {
        let row_space = Subspace::span(ambient_dim, characters)?;
        let mut generators = Vec::with_capacity(ambient_dim - row_space.dim());
        for f in 0..ambient_dim {
            if (row_space.pivot_mask >> f) & 1 == 1 {
                continue;
            }
            let mut v = 1u32 << f;
            for row in &row_space.basis {
                if (row.bits >> f) & 1 == 1 {
                    v |= 1 << msb(row.bits);
                }
            }
            generators.push(GF2Vector {
                bits: v,
                dim: ambient_dim,
            });
        }
        Subspace::span(ambient_dim, &generators)
    }

    /// The hyperplane {v : ⟨γ, v⟩ = 0} of a nonzero character γ.
    pub fn hyperplane_of(gamma: GF2Vector) -> Result<Self> {
        if gamma.is_zero() {
            return Err(Error::ZeroCharacter);
        }
        Subspace::kernel_of(gamma.dim, &[gamma])
    }

    /// {h ∈ self : ⟨γ, h⟩ = 0}. Drops the dimension by one exactly when γ
    /// does not vanish on the whole subspace.
    pub fn intersect_kernel(&self, gamma: GF2Vector) -> Result<Self> {
        if gamma.dim != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                left: self.ambient_dim,
                right: gamma.dim,
            });
        }
        let (dirty, clean): (Vec<_>, Vec<_>) = self.basis.iter().partition(|b| b.dot(gamma));
        match dirty.split_first() {
            None => Ok(self.clone()),
            Some((&&r0, rest)) => {
                let mut generators: Vec<GF2Vector> = clean.into_iter().copied().collect();
                generators.extend(rest.iter().map(|&&r| r.add(r0)));
                Subspace::span(self.ambient_dim, &generators)
            }
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn codim(&self) -> usize {
        self.ambient_dim - self.basis.len()
    }

    pub fn basis(&self) -> &[GF2Vector] {
        &self.basis
    }

    pub fn pivot_mask(&self) -> u32 {
        self.pivot_mask
    }

    pub fn len(&self) -> u64 {
        1u64 << self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Membership test by pivot reduction.
    pub fn contains(&self, v: GF2Vector) -> Result<bool> {
        if v.dim != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                left: self.ambient_dim,
                right: v.dim,
            });
        }
        Ok(self.reduce_bits(v.bits) == 0)
    }

    fn reduce_bits(&self, mut b: u32) -> u32 {
        // Fully reduced rows hold no foreign pivot bits, so one pass suffices.
        for row in &self.basis {
            if (b >> msb(row.bits)) & 1 == 1 {
                b ^= row.bits;
            }
        }
        b
    }

    /// Canonical representative of v's coset: the pivot-free word, which is
    /// the minimum of the coset as an integer.
    pub fn coset_rep_of(&self, v: GF2Vector) -> Result<GF2Vector> {
        if v.dim != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                left: self.ambient_dim,
                right: v.dim,
            });
        }
        Ok(GF2Vector {
            bits: self.reduce_bits(v.bits),
            dim: self.ambient_dim,
        })
    }

    /// One representative per coset, ascending; the first is always 0.
    pub fn coset_reps(&self) -> Vec<GF2Vector> {
        let mut reps = Vec::with_capacity(1usize << self.codim());
        for v in 0..1u32 << self.ambient_dim {
            if v & self.pivot_mask == 0 {
                reps.push(GF2Vector {
                    bits: v,
                    dim: self.ambient_dim,
                });
            }
        }
        reps
    }

    /// All 2^dim elements, Gray-code order (starts at 0).
    pub fn elements(&self) -> Elements<'_> {
        Elements {
            basis: &self.basis,
            ambient_dim: self.ambient_dim,
            current: 0,
            index: 0,
            total: 1u64 << self.basis.len(),
        }
    }

    /// Linear coordinates on the subspace: basis row i ↦ e_i.
    pub fn section_coordinates(&self) -> SectionMap {
        SectionMap {
            ambient_dim: self.ambient_dim,
            pivots: self.basis.iter().map(|b| msb(b.bits)).collect(),
            basis: self.basis.iter().map(|b| b.bits).collect(),
        }
    }

    /// Basis rows as MSB-first bitstrings, one per line, blank-terminated.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for row in &self.basis {
            out.push_str(&row.to_string());
            out.push('\n');
        }
        out.push('\n');
        out
    }

    /// Parses the blank-terminated text form. Rows may be any spanning list;
    /// they are canonicalized. `ambient_hint` supplies the dimension when no
    /// rows precede the terminator (the zero subspace).
    pub fn parse_text(s: &str, ambient_hint: Option<usize>) -> Result<Self> {
        let mut rows = Vec::new();
        for (idx, line) in s.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                break;
            }
            if line.starts_with('#') {
                continue;
            }
            let v = GF2Vector::parse_bits(line).map_err(|e| match e {
                Error::Parse { msg, .. } => Error::Parse { line: idx + 1, msg },
                other => other,
            })?;
            rows.push(v);
        }
        let n = match (rows.first(), ambient_hint) {
            (Some(v), _) => v.dim(),
            (None, Some(n)) => n,
            (None, None) => {
                return Err(Error::InvalidInput(
                    "empty basis text and no ambient dimension supplied".into(),
                ))
            }
        };
        if let Some(hint) = ambient_hint {
            if hint != n {
                return Err(Error::DimensionMismatch {
                    left: hint,
                    right: n,
                });
            }
        }
        Subspace::span(n, &rows)
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.basis.is_empty() {
            return write!(f, "{{0}} in dim {}", self.ambient_dim);
        }
        let rows: Vec<String> = self.basis.iter().map(|b| b.to_string()).collect();
        write!(f, "span{{{}}}", rows.join(", "))
    }
}

/// Gray-code iterator over a subspace's elements.
pub struct Elements<'a> {
    basis: &'a [GF2Vector],
    ambient_dim: usize,
    current: u32,
    index: u64,
    total: u64,
}

impl Iterator for Elements<'_> {
    type Item = GF2Vector;

    fn next(&mut self) -> Option<GF2Vector> {
        if self.index == self.total {
            return None;
        }
        let out = GF2Vector {
            bits: self.current,
            dim: self.ambient_dim,
        };
        self.index += 1;
        if self.index < self.total {
            let flip = self.index.trailing_zeros() as usize;
            self.current ^= self.basis[flip].bits();
        }
        Some(out)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.index) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for Elements<'_> {}

/// Invertible coordinate map between a subspace and GF(2)^dim.
///
/// Because each basis row owns its pivot bit exclusively, the coefficient of
/// row i in any element h is just bit p_i of h, so `forward` is a bit gather
/// and `backward` an XOR of rows.
#[derive(Clone, Debug)]
pub struct SectionMap {
    ambient_dim: usize,
    pivots: Vec<u32>,
    basis: Vec<u32>,
}

impl SectionMap {
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn section_dim(&self) -> usize {
        self.pivots.len()
    }

    /// Coordinates of an element of the subspace; errors if `h` lies outside.
    pub fn forward(&self, h: GF2Vector) -> Result<GF2Vector> {
        if h.dim != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                left: self.ambient_dim,
                right: h.dim,
            });
        }
        let y = self.gather(h.bits);
        if self.scatter(y) != h.bits {
            return Err(Error::NotInSubspace);
        }
        Ok(GF2Vector {
            bits: y,
            dim: self.pivots.len(),
        })
    }

    /// The subspace element with the given coordinates.
    pub fn backward(&self, y: GF2Vector) -> Result<GF2Vector> {
        if y.dim != self.pivots.len() {
            return Err(Error::DimensionMismatch {
                left: self.pivots.len(),
                right: y.dim,
            });
        }
        Ok(GF2Vector {
            bits: self.scatter(y.bits),
            dim: self.ambient_dim,
        })
    }

    pub(crate) fn gather(&self, h: u32) -> u32 {
        self.pivots
            .iter()
            .enumerate()
            .fold(0, |y, (i, &p)| y | (((h >> p) & 1) << i))
    }

    pub(crate) fn scatter(&self, y: u32) -> u32 {
        self.basis
            .iter()
            .enumerate()
            .fold(0, |x, (i, &b)| if (y >> i) & 1 == 1 { x ^ b } else { x })
    }

    /// Lifts a character of the coordinate space to a character of the
    /// ambient space supported on the pivot positions: the lift γ satisfies
    /// ⟨lift(γ'), h⟩ = ⟨γ', forward(h)⟩ for every h in the subspace.
    pub fn lift_character(&self, gamma: GF2Vector) -> Result<GF2Vector> {
        if gamma.dim != self.pivots.len() {
            return Err(Error::DimensionMismatch {
                left: self.pivots.len(),
                right: gamma.dim,
            });
        }
        let bits = self
            .pivots
            .iter()
            .enumerate()
            .fold(0, |acc, (i, &p)| acc | (((gamma.bits >> i) & 1) << p));
        Ok(GF2Vector {
            bits,
            dim: self.ambient_dim,
        })
    }
}

/// Every d-dimensional subspace of GF(2)^n exactly once, via canonical RREF
/// shapes: choose pivot positions, then fill the free entries below each
/// pivot. Capped at n ≤ 6; this is the oracle other solvers are tested
/// against, so it stays brute force on purpose.
pub fn enumerate_subspaces(n: usize, d: usize) -> Result<Vec<Subspace>> {
    if n > MAX_ENUM_DIM {
        return Err(Error::Scale {
            what: "exhaustive subspace enumeration",
            n,
            cap: MAX_ENUM_DIM,
        });
    }
    if d > n {
        return Err(Error::InvalidInput(format!(
            "subspace dimension {d} exceeds ambient dimension {n}"
        )));
    }
    let mut out = Vec::new();
    let mut pivots = Vec::with_capacity(d);
    choose_pivots(n, d, 0, &mut pivots, &mut out);
    Ok(out)
}

fn choose_pivots(n: usize, d: usize, start: usize, pivots: &mut Vec<u32>, out: &mut Vec<Subspace>) {
    if pivots.len() == d {
        fill_free_entries(n, pivots, out);
        return;
    }
    // Ensure enough positions remain above `p` for the rest of the pivots.
    for p in start..=(n - (d - pivots.len())) {
        pivots.push(p as u32);
        choose_pivots(n, d, p + 1, pivots, out);
        pivots.pop();
    }
}

fn fill_free_entries(n: usize, pivots: &[u32], out: &mut Vec<Subspace>) {
    let pivot_mask: u32 = pivots.iter().fold(0, |m, &p| m | (1 << p));
    // Free slots: positions below each row's pivot that are not pivots.
    let mut slots: Vec<(usize, u32)> = Vec::new();
    for (i, &p) in pivots.iter().enumerate() {
        for j in 0..p {
            if (pivot_mask >> j) & 1 == 0 {
                slots.push((i, j));
            }
        }
    }
    for assignment in 0..1u64 << slots.len() {
        let mut rows: Vec<u32> = pivots.iter().map(|&p| 1 << p).collect();
        for (slot, &(row, bit)) in slots.iter().enumerate() {
            if (assignment >> slot) & 1 == 1 {
                rows[row] |= 1 << bit;
            }
        }
        out.push(Subspace::from_rref_rows(n, rows));
    }
}

/// Number of d-dimensional subspaces of GF(2)^n (the Gaussian binomial).
pub fn gaussian_binomial(n: usize, d: usize) -> u64 {
    if d > n {
        return 0;
    }
    let mut num = 1u128;
    let mut den = 1u128;
    for i in 0..d {
        num *= (1u128 << (n - i)) - 1;
        den *= (1u128 << (d - i)) - 1;
    }
    (num / den) as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashSet;

    fn v(s: &str) -> GF2Vector {
        GF2Vector::parse_bits(s).unwrap()
    }

    #[test]
    fn vector_basics() {
        let a = v("0101");
        assert_eq!(a.bits(), 0b0101);
        assert_eq!(a.dim(), 4);
        assert!(a.coordinate(0));
        assert!(!a.coordinate(1));
        assert_eq!(a.to_string(), "0101");
        assert_eq!(a.add(v("0011")).to_string(), "0110");
        assert!(a.dot(v("0011"))); // one shared bit
        assert!(!a.dot(v("0101"))); // two shared bits
        assert!(GF2Vector::new(4, 2).is_err());
        assert!(GF2Vector::new(3, 25).is_err());
        assert!(GF2Vector::parse_bits("012").is_err());
        assert!(GF2Vector::parse_bits("").is_err());
        assert_eq!(GF2Vector::unit(2, 4).to_string(), "0100");
    }

    #[test]
    fn span_examples() {
        let empty = Subspace::span(3, &[]).unwrap();
        assert_eq!(empty.dim(), 0);
        assert_eq!(empty, Subspace::zero(3));

        let h = Subspace::span(3, &[v("110"), v("011"), v("101")]).unwrap();
        assert_eq!(h.dim(), 2);
        let members: HashSet<u32> = h.elements().map(|e| e.bits()).collect();
        assert_eq!(members, HashSet::from([0b000, 0b110, 0b011, 0b101]));
        // Canonical basis: MSB pivots, ascending rows.
        assert_eq!(
            h.basis().iter().map(|b| b.to_string()).collect::<Vec<_>>(),
            vec!["011", "101"]
        );

        let all: Vec<GF2Vector> = (0..8).map(|b| GF2Vector::new(b, 3).unwrap()).collect();
        assert_eq!(Subspace::span(3, &all).unwrap(), Subspace::full(3));

        assert!(Subspace::span(3, &[v("01")]).is_err());
    }

    #[test]
    fn contains_examples() {
        assert!(Subspace::zero(3).contains(v("000")).unwrap());
        assert!(!Subspace::zero(3).contains(v("100")).unwrap());
        let h = Subspace::span(3, &[v("110"), v("011")]).unwrap();
        assert!(h.contains(v("101")).unwrap());
        assert!(!h.contains(v("100")).unwrap());
        assert!(h.contains(v("10")).is_err());
    }

    #[test]
    fn hyperplane_examples() {
        let h = Subspace::hyperplane_of(v("100")).unwrap();
        assert_eq!(h.dim(), 2);
        let members: HashSet<u32> = h.elements().map(|e| e.bits()).collect();
        assert_eq!(members, HashSet::from([0b000, 0b001, 0b010, 0b011]));

        let h = Subspace::hyperplane_of(v("111")).unwrap();
        let members: HashSet<u32> = h.elements().map(|e| e.bits()).collect();
        assert_eq!(members, HashSet::from([0b000, 0b011, 0b101, 0b110]));

        let h = Subspace::hyperplane_of(v("01")).unwrap();
        let members: HashSet<u32> = h.elements().map(|e| e.bits()).collect();
        assert_eq!(members, HashSet::from([0b00, 0b10]));

        assert!(matches!(
            Subspace::hyperplane_of(GF2Vector::zero(3)),
            Err(Error::ZeroCharacter)
        ));
    }

    #[test]
    fn hyperplanes_are_distinct_and_halving() {
        let n = 4;
        let mut seen = HashSet::new();
        for g in 1..1u32 << n {
            let h = Subspace::hyperplane_of(GF2Vector::new(g, n).unwrap()).unwrap();
            assert_eq!(h.dim(), n - 1);
            assert_eq!(h.elements().count(), 1 << (n - 1));
            for e in h.elements() {
                assert!(!e.dot(GF2Vector::new(g, n).unwrap()));
            }
            seen.insert(h);
        }
        assert_eq!(seen.len(), (1 << n) - 1);
    }

    #[test]
    fn enumerate_counts() {
        assert_eq!(enumerate_subspaces(3, 0).unwrap().len(), 1);
        assert_eq!(enumerate_subspaces(3, 1).unwrap().len(), 7);
        assert_eq!(enumerate_subspaces(4, 2).unwrap().len(), 35);
        for n in 0..=5 {
            for d in 0..=n {
                let subs = enumerate_subspaces(n, d).unwrap();
                assert_eq!(subs.len() as u64, gaussian_binomial(n, d), "({n},{d})");
                let unique: HashSet<&Subspace> = subs.iter().collect();
                assert_eq!(unique.len(), subs.len());
                for s in &subs {
                    assert_eq!(s.dim(), d);
                }
            }
        }
        assert!(enumerate_subspaces(7, 2).is_err());
        assert!(enumerate_subspaces(3, 4).is_err());
    }

    #[test]
    fn coset_rep_examples() {
        let full = Subspace::full(2);
        assert_eq!(full.coset_reps(), vec![GF2Vector::zero(2)]);

        let zero = Subspace::zero(2);
        let reps: Vec<u32> = zero.coset_reps().iter().map(|r| r.bits()).collect();
        assert_eq!(reps, vec![0b00, 0b01, 0b10, 0b11]);

        let h = Subspace::span(2, &[v("01")]).unwrap();
        let reps: Vec<u32> = h.coset_reps().iter().map(|r| r.bits()).collect();
        assert_eq!(reps, vec![0b00, 0b10]);
    }

    #[test]
    fn coset_reps_are_coset_minima() {
        for n in 1..=5usize {
            for d in 0..=n {
                for sub in enumerate_subspaces(n, d).unwrap() {
                    let reps = sub.coset_reps();
                    assert_eq!(reps.len() as u64 * sub.len(), 1u64 << n);
                    assert_eq!(reps[0], GF2Vector::zero(n));
                    for r in &reps {
                        assert_eq!(sub.coset_rep_of(*r).unwrap(), *r);
                        let min = sub
                            .elements()
                            .map(|h| h.bits() ^ r.bits())
                            .min()
                            .unwrap();
                        assert_eq!(min, r.bits());
                    }
                }
            }
        }
    }

    #[test]
    fn section_map_canonical_example() {
        let h = Subspace::span(3, &[v("110"), v("011")]).unwrap();
        let map = h.section_coordinates();
        assert_eq!(map.forward(v("011")).unwrap().to_string(), "01");
        assert_eq!(map.forward(v("101")).unwrap().to_string(), "10");
        assert_eq!(map.forward(v("110")).unwrap().to_string(), "11");
        assert!(matches!(map.forward(v("100")), Err(Error::NotInSubspace)));

        let full = Subspace::full(3);
        let map = full.section_coordinates();
        for b in 0..8 {
            let x = GF2Vector::new(b, 3).unwrap();
            assert_eq!(map.forward(x).unwrap().bits(), b);
        }
    }

    #[test]
    fn character_lift_agrees_with_forward() {
        let h = Subspace::span(4, &[v("0111"), v("1010"), v("1100")]).unwrap();
        let map = h.section_coordinates();
        for g in 0..1u32 << h.dim() {
            let gamma = GF2Vector::new(g, h.dim()).unwrap();
            let lifted = map.lift_character(gamma).unwrap();
            for e in h.elements() {
                assert_eq!(e.dot(lifted), map.forward(e).unwrap().dot(gamma));
            }
        }
    }

    #[test]
    fn intersect_kernel_matches_filter() {
        for n in 2..=5usize {
            for d in 1..=n {
                for sub in enumerate_subspaces(n, d).unwrap() {
                    for g in 1..1u32 << n {
                        let gamma = GF2Vector::new(g, n).unwrap();
                        let inter = sub.intersect_kernel(gamma).unwrap();
                        let expect: HashSet<u32> = sub
                            .elements()
                            .filter(|h| !h.dot(gamma))
                            .map(|h| h.bits())
                            .collect();
                        let got: HashSet<u32> = inter.elements().map(|h| h.bits()).collect();
                        assert_eq!(expect, got);
                    }
                }
            }
        }
    }

    #[test]
    fn kernel_orthogonality() {
        let chars = [v("10110"), v("01100"), v("11010")];
        let k = Subspace::kernel_of(5, &chars).unwrap();
        let rank = Subspace::span(5, &chars).unwrap().dim();
        assert_eq!(k.dim(), 5 - rank);
        for e in k.elements() {
            for c in &chars {
                assert!(!e.dot(*c));
            }
        }
        assert_eq!(Subspace::kernel_of(4, &[]).unwrap(), Subspace::full(4));
    }

    #[test]
    fn text_round_trip() {
        let h = Subspace::span(4, &[v("1011"), v("0110")]).unwrap();
        let text = h.to_text();
        assert!(text.ends_with("\n\n"));
        let back = Subspace::parse_text(&text, None).unwrap();
        assert_eq!(back, h);
        let zero = Subspace::parse_text("\n", Some(3)).unwrap();
        assert_eq!(zero, Subspace::zero(3));
        assert!(Subspace::parse_text("\n", None).is_err());
        assert!(Subspace::parse_text("10\n0x\n", None).is_err());
        assert!(Subspace::parse_text("10\n\n", Some(3)).is_err());
    }

    proptest! {
        #[test]
        fn span_is_idempotent(bits in proptest::collection::vec(0u32..64, 0..6)) {
            let vecs: Vec<GF2Vector> = bits.iter().map(|&b| GF2Vector::new(b, 6).unwrap()).collect();
            let s = Subspace::span(6, &vecs).unwrap();
            let again = Subspace::span(6, s.basis()).unwrap();
            prop_assert_eq!(&again, &s);
            for v in &vecs {
                prop_assert!(s.contains(*v).unwrap());
            }
        }

        #[test]
        fn membership_matches_enumeration(bits in proptest::collection::vec(0u32..32, 0..5), probe in 0u32..32) {
            let vecs: Vec<GF2Vector> = bits.iter().map(|&b| GF2Vector::new(b, 5).unwrap()).collect();
            let s = Subspace::span(5, &vecs).unwrap();
            let members: HashSet<u32> = s.elements().map(|e| e.bits()).collect();
            prop_assert_eq!(members.len() as u64, s.len());
            prop_assert_eq!(
                s.contains(GF2Vector::new(probe, 5).unwrap()).unwrap(),
                members.contains(&probe)
            );
        }

        #[test]
        fn section_round_trip(bits in proptest::collection::vec(0u32..256, 1..6)) {
            let vecs: Vec<GF2Vector> = bits.iter().map(|&b| GF2Vector::new(b, 8).unwrap()).collect();
            let s = Subspace::span(8, &vecs).unwrap();
            let map = s.section_coordinates();
            for h in s.elements() {
                let y = map.forward(h).unwrap();
                prop_assert_eq!(y.dim(), s.dim());
                prop_assert_eq!(map.backward(y).unwrap(), h);
            }
        }
    }
}
