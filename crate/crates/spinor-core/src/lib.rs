//! Two-component spinor index calculus over exact symbolic entries.
//!
//! A [`SpinorObject`] is a dense array of 2^rank [`Expr`] entries indexed by
//! an ordered list of [`IndexSpec`]s, each either undotted or dotted and
//! either upper or lower. The two families never mix: raising and lowering
//! act within a family via the Levi-Civita symbols
//!
//! ```text
//! (eps_{AB}) = (eps^{AB}) = | 0  1 |        m_A = eps_{AB} m^B
//!                           |-1  0 |        m^A = m_B eps^{BA}
//! ```
//!
//! and identically for the dotted family. With these conventions lowering
//! and raising are mutually inverse (eps_{AC} eps^{AB} = delta^B_C), and a
//! simultaneous variance swap flips the sign of a contraction:
//! `a^B b_B = -a_B b^B`.
//!
//! Dense storage is deliberate: the geometric layers need rank at most six
//! (64 entries) transiently and rank four persistently, so symmetry-aware
//! compression would buy nothing but indexing bugs. Symmetries can instead
//! be *declared* on an object and verified entrywise on demand.

use std::fmt;

use symkernel::Expr;
use thiserror::Error;

/// Which of the two spinor families an index belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IndexFamily {
    /// Plain indices A, B, … (self-dual side).
    Undotted,
    /// Dotted indices ˙A, ˙B, … (anti-self-dual side).
    Dotted,
}

/// Upper or lower position of one index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variance {
    Upper,
    Lower,
}

/// Family and variance of a single index slot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IndexSpec {
    pub family: IndexFamily,
    pub variance: Variance,
}

impl IndexSpec {
    pub const fn new(family: IndexFamily, variance: Variance) -> Self {
        IndexSpec { family, variance }
    }

    /// Undotted upper index.
    pub const fn up() -> Self {
        IndexSpec::new(IndexFamily::Undotted, Variance::Upper)
    }

    /// Undotted lower index.
    pub const fn low() -> Self {
        IndexSpec::new(IndexFamily::Undotted, Variance::Lower)
    }

    /// Dotted upper index.
    pub const fn dup() -> Self {
        IndexSpec::new(IndexFamily::Dotted, Variance::Upper)
    }

    /// Dotted lower index.
    pub const fn dlow() -> Self {
        IndexSpec::new(IndexFamily::Dotted, Variance::Lower)
    }

    fn flipped(self) -> Self {
        IndexSpec {
            family: self.family,
            variance: match self.variance {
                Variance::Upper => Variance::Lower,
                Variance::Lower => Variance::Upper,
            },
        }
    }
}

/// Errors from index-structure mismatches.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpinorError {
    #[error("index families do not match")]
    FamilyMismatch,
    #[error("index variances do not match")]
    VarianceMismatch,
    #[error("index structures do not match")]
    SpecMismatch,
    #[error("index position {0} out of range for rank {1}")]
    PositionOutOfRange(usize, usize),
    #[error("positions must be distinct")]
    DuplicatePosition,
}

/// A dense spinor-indexed array of symbolic entries, with optional declared
/// symmetries.
#[derive(Debug, Clone)]
pub struct SpinorObject {
    specs: Vec<IndexSpec>,
    entries: Vec<Expr>,
    declared_symmetries: Vec<Vec<usize>>,
}

/// Offset of an index assignment (values 1 or 2 per slot, first slot most
/// significant).
fn offset(indices: &[u8]) -> usize {
    let mut off = 0usize;
    for &i in indices {
        assert!(i == 1 || i == 2, "spinor indices take the values 1 and 2");
        off = (off << 1) | usize::from(i - 1);
    }
    off
}

/// All index assignments of the given rank, in storage order.
pub fn index_range(rank: usize) -> impl Iterator<Item = Vec<u8>> {
    (0..(1usize << rank)).map(move |raw| {
        (0..rank)
            .map(|k| ((raw >> (rank - 1 - k)) & 1) as u8 + 1)
            .collect()
    })
}

impl SpinorObject {
    // ----- construction -----------------------------------------------------

    /// A zero-filled object with the given index structure.
    pub fn zeros(specs: Vec<IndexSpec>) -> Self {
        let n = 1usize << specs.len();
        SpinorObject {
            specs,
            entries: vec![Expr::zero(); n],
            declared_symmetries: Vec::new(),
        }
    }

    /// A rank-0 object holding one scalar.
    pub fn scalar(value: Expr) -> Self {
        SpinorObject {
            specs: Vec::new(),
            entries: vec![value],
            declared_symmetries: Vec::new(),
        }
    }

    /// Build entrywise from a function of the index assignment.
    pub fn from_fn(specs: Vec<IndexSpec>, mut f: impl FnMut(&[u8]) -> Expr) -> Self {
        let rank = specs.len();
        let entries = index_range(rank).map(|idx| f(&idx)).collect();
        SpinorObject {
            specs,
            entries,
            declared_symmetries: Vec::new(),
        }
    }

    /// A rank-1 object from its two components.
    pub fn vector(spec: IndexSpec, first: Expr, second: Expr) -> Self {
        SpinorObject {
            specs: vec![spec],
            entries: vec![first, second],
            declared_symmetries: Vec::new(),
        }
    }

    /// The Levi-Civita symbol with two lower indices of one family:
    /// entries [[0, 1], [-1, 0]].
    pub fn epsilon_lower(family: IndexFamily) -> Self {
        Self::epsilon(IndexSpec::new(family, Variance::Lower))
    }

    /// The Levi-Civita symbol with two upper indices of one family:
    /// the same numerical table [[0, 1], [-1, 0]].
    pub fn epsilon_upper(family: IndexFamily) -> Self {
        Self::epsilon(IndexSpec::new(family, Variance::Upper))
    }

    fn epsilon(spec: IndexSpec) -> Self {
        let mut s = SpinorObject::zeros(vec![spec, spec]);
        s.set(&[1, 2], Expr::from_int(1));
        s.set(&[2, 1], Expr::from_int(-1));
        s
    }

    /// The Kronecker delta `delta^A_B` of one family (upper then lower
    /// index), entries diag(1, 1).
    pub fn kronecker(family: IndexFamily) -> Self {
        let mut s = SpinorObject::zeros(vec![
            IndexSpec::new(family, Variance::Upper),
            IndexSpec::new(family, Variance::Lower),
        ]);
        s.set(&[1, 1], Expr::one());
        s.set(&[2, 2], Expr::one());
        s
    }

    /// Record that the object is claimed symmetric in the given positions;
    /// verify later with [`SpinorObject::verify_declared_symmetries`].
    pub fn with_symmetry(mut self, positions: Vec<usize>) -> Self {
        self.declared_symmetries.push(positions);
        self
    }

    // ----- inspection -------------------------------------------------------

    /// Number of indices.
    pub fn rank(&self) -> usize {
        self.specs.len()
    }

    /// The index structure.
    pub fn specs(&self) -> &[IndexSpec] {
        &self.specs
    }

    /// Entry at an index assignment (values 1 or 2 per slot).
    pub fn get(&self, indices: &[u8]) -> &Expr {
        assert_eq!(indices.len(), self.rank(), "index count must equal rank");
        &self.entries[offset(indices)]
    }

    /// Overwrite one entry.
    pub fn set(&mut self, indices: &[u8], value: Expr) {
        assert_eq!(indices.len(), self.rank(), "index count must equal rank");
        let off = offset(indices);
        self.entries[off] = value;
    }

    /// The scalar value of a rank-0 object.
    pub fn scalar_value(&self) -> &Expr {
        assert_eq!(self.rank(), 0, "scalar_value on object of positive rank");
        &self.entries[0]
    }

    /// True iff every entry is identically zero.
    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Expr::is_zero)
    }

    /// Entrywise equality as functions; requires identical index structure.
    pub fn equivalent(&self, other: &SpinorObject) -> Result<bool, SpinorError> {
        if self.specs != other.specs {
            return Err(SpinorError::SpecMismatch);
        }
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .all(|(a, b)| a.equivalent(b)))
    }

    /// Check every declared symmetry entrywise; true iff all hold.
    pub fn verify_declared_symmetries(&self) -> Result<bool, SpinorError> {
        for positions in &self.declared_symmetries {
            let sym = self.symmetrize(positions)?;
            if !self.equivalent(&sym.forget_symmetries())? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn forget_symmetries(mut self) -> Self {
        self.declared_symmetries.clear();
        self
    }

    // ----- pointwise algebra -------------------------------------------------

    /// Apply a function to every entry (index structure unchanged).
    pub fn map(&self, f: impl Fn(&Expr) -> Expr) -> Self {
        SpinorObject {
            specs: self.specs.clone(),
            entries: self.entries.iter().map(f).collect(),
            declared_symmetries: self.declared_symmetries.clone(),
        }
    }

    /// Entrywise sum; index structures must match exactly.
    pub fn add(&self, other: &SpinorObject) -> Result<SpinorObject, SpinorError> {
        if self.specs != other.specs {
            return Err(SpinorError::SpecMismatch);
        }
        Ok(SpinorObject {
            specs: self.specs.clone(),
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
            declared_symmetries: Vec::new(),
        })
    }

    /// Entrywise difference; index structures must match exactly.
    pub fn sub(&self, other: &SpinorObject) -> Result<SpinorObject, SpinorError> {
        self.add(&other.map(|e| -e))
    }

    /// Multiply every entry by a scalar.
    pub fn scale(&self, factor: &Expr) -> SpinorObject {
        self.map(|e| e * factor)
    }

    // ----- index operations ---------------------------------------------------

    /// Flip the variance of the index at `position` by contracting with the
    /// appropriate Levi-Civita symbol:
    ///
    /// * lowering: `m_A = eps_{AB} m^B`  →  `new[1] = old[2]`, `new[2] = -old[1]`;
    /// * raising:  `m^A = m_B eps^{BA}`  →  `new[1] = -old[2]`, `new[2] = old[1]`.
    ///
    /// Applying the operation twice returns the original object.
    pub fn raise_lower(&self, position: usize) -> SpinorObject {
        assert!(
            position < self.rank(),
            "index position {position} out of range for rank {}",
            self.rank()
        );
        let mut specs = self.specs.clone();
        let old = specs[position];
        specs[position] = old.flipped();
        let raising = old.variance == Variance::Lower;
        let out = SpinorObject::from_fn(specs, |idx| {
            let mut src = idx.to_vec();
            src[position] = 3 - idx[position]; // the opposite value
            let entry = self.get(&src);
            // lowering: new[1] = +old[2], new[2] = -old[1]
            // raising:  new[1] = -old[2], new[2] = +old[1]
            let keep = (idx[position] == 1) ^ raising;
            if keep {
                entry.clone()
            } else {
                -entry
            }
        });
        out
    }

    /// Average over all permutations of the chosen positions (weight 1/n!).
    /// The positions must share family and variance.
    pub fn symmetrize(&self, positions: &[usize]) -> Result<SpinorObject, SpinorError> {
        self.check_positions(positions)?;
        if positions.len() > 1 {
            let spec0 = self.specs[positions[0]];
            for &p in &positions[1..] {
                if self.specs[p].family != spec0.family {
                    return Err(SpinorError::FamilyMismatch);
                }
                if self.specs[p].variance != spec0.variance {
                    return Err(SpinorError::VarianceMismatch);
                }
            }
        }
        let perms = permutations(positions.len());
        let weight = Expr::ratio(1, perms.len() as i64);
        let out = SpinorObject::from_fn(self.specs.clone(), |idx| {
            let mut sum = Expr::zero();
            for perm in &perms {
                let mut src = idx.to_vec();
                for (slot, &from) in perm.iter().enumerate() {
                    src[positions[slot]] = idx[positions[from]];
                }
                sum += self.get(&src).clone();
            }
            &sum * &weight
        });
        Ok(out)
    }

    /// Contract two index positions of the same family and opposite
    /// variance: plain sum over the paired value, rank drops by two.
    pub fn contract(&self, pos1: usize, pos2: usize) -> Result<SpinorObject, SpinorError> {
        self.check_positions(&[pos1, pos2])?;
        if pos1 == pos2 {
            return Err(SpinorError::DuplicatePosition);
        }
        let s1 = self.specs[pos1];
        let s2 = self.specs[pos2];
        if s1.family != s2.family {
            return Err(SpinorError::FamilyMismatch);
        }
        if s1.variance == s2.variance {
            return Err(SpinorError::VarianceMismatch);
        }
        let keep: Vec<usize> = (0..self.rank())
            .filter(|&i| i != pos1 && i != pos2)
            .collect();
        let specs: Vec<IndexSpec> = keep.iter().map(|&i| self.specs[i]).collect();
        let out = SpinorObject::from_fn(specs, |idx| {
            let mut sum = Expr::zero();
            for k in 1u8..=2 {
                let mut src = vec![0u8; self.rank()];
                for (slot, &i) in keep.iter().enumerate() {
                    src[i] = idx[slot];
                }
                src[pos1] = k;
                src[pos2] = k;
                sum += self.get(&src).clone();
            }
            sum
        });
        Ok(out)
    }

    /// Tensor product; index lists concatenate in order.
    pub fn outer(&self, other: &SpinorObject) -> SpinorObject {
        let mut specs = self.specs.clone();
        specs.extend_from_slice(&other.specs);
        let r1 = self.rank();
        SpinorObject::from_fn(specs, |idx| {
            self.get(&idx[..r1]) * other.get(&idx[r1..])
        })
    }

    fn check_positions(&self, positions: &[usize]) -> Result<(), SpinorError> {
        for &p in positions {
            if p >= self.rank() {
                return Err(SpinorError::PositionOutOfRange(p, self.rank()));
            }
        }
        let mut sorted = positions.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != positions.len() {
            return Err(SpinorError::DuplicatePosition);
        }
        Ok(())
    }
}

/// All permutations of `0..n` (n! entries), in a deterministic order.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    heap_permute(&mut current, n, &mut out);
    out
}

fn heap_permute(arr: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(arr.clone());
        return;
    }
    for i in 0..k {
        heap_permute(arr, k - 1, out);
        if k % 2 == 0 {
            arr.swap(i, k - 1);
        } else {
            arr.swap(0, k - 1);
        }
    }
}

impl fmt::Display for SpinorObject {
    /// Lists the nonzero entries as `[i, ˙j, …] = value`, dotted indices
    /// rendered with the paper-style overdot.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rank() == 0 {
            return write!(f, "{}", self.entries[0]);
        }
        let mut any = false;
        for idx in index_range(self.rank()) {
            let e = self.get(&idx);
            if e.is_zero() {
                continue;
            }
            if any {
                writeln!(f)?;
            }
            let labels: Vec<String> = idx
                .iter()
                .zip(&self.specs)
                .map(|(&i, spec)| match spec.family {
                    IndexFamily::Undotted => format!("{i}"),
                    IndexFamily::Dotted => format!("˙{i}"),
                })
                .collect();
            write!(f, "[{}] = {}", labels.join(","), e)?;
            any = true;
        }
        if !any {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn offsets_are_big_endian() {
        assert_eq!(offset(&[1, 1]), 0);
        assert_eq!(offset(&[1, 2]), 1);
        assert_eq!(offset(&[2, 1]), 2);
        assert_eq!(offset(&[2, 2]), 3);
    }

    #[test]
    fn permutation_count_is_factorial() {
        assert_eq!(permutations(1).len(), 1);
        assert_eq!(permutations(2).len(), 2);
        assert_eq!(permutations(3).len(), 6);
        assert_eq!(permutations(4).len(), 24);
    }
}
