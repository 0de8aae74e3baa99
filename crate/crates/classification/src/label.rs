//! Label types: the base Petrov-Penrose type of the self-dual Weyl spinor,
//! expansion marks for its degenerate congruences, and the anti-self-dual
//! side of the product label.

use std::fmt;

use crate::error::ClassificationError;

/// The base Petrov-Penrose type of a self-dual Weyl spinor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PetrovBase {
    I,
    II,
    D,
    III,
    N,
    /// Identically vanishing Weyl spinor, written [−].
    Minus,
}

impl fmt::Display for PetrovBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PetrovBase::I => "I",
            PetrovBase::II => "II",
            PetrovBase::D => "D",
            PetrovBase::III => "III",
            PetrovBase::N => "N",
            PetrovBase::Minus => "[-]",
        };
        f.write_str(s)
    }
}

impl PetrovBase {
    /// How many expansion marks the base admits: two for D (one per
    /// degenerate congruence family), one for N, none otherwise.
    pub fn allowed_marks(self) -> usize {
        match self {
            PetrovBase::D => 2,
            PetrovBase::N => 1,
            _ => 0,
        }
    }
}

/// Expansion verdict of one congruence family, rendered as a superscript
/// mark: `n` for nonexpanding, `e` for expanding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExpansionMark {
    Expanding,
    Nonexpanding,
}

impl fmt::Display for ExpansionMark {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExpansionMark::Expanding => "e",
            ExpansionMark::Nonexpanding => "n",
        })
    }
}

/// The anti-self-dual side of the label: either the dotted Weyl spinor
/// vanishes — giving [−] with a mark read from the curvature scalar
/// (`e` when R ≢ 0, `n` when R ≡ 0) — or the space is not self-dual at all.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AsdLabel {
    Minus(ExpansionMark),
    NotSelfDual,
}

impl fmt::Display for AsdLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AsdLabel::Minus(mark) => write!(f, "[-]^{mark}"),
            AsdLabel::NotSelfDual => f.write_str("not-SD"),
        }
    }
}

/// A complete two-sided label: base type with its expansion marks on the
/// undotted side, and the [−]-type verdict on the dotted side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PetrovLabel {
    base: PetrovBase,
    marks: Vec<ExpansionMark>,
    asd: AsdLabel,
}

impl PetrovLabel {
    /// Assembles a label, enforcing the decoration scheme: at most two marks
    /// on D, at most one on N, none elsewhere.
    pub fn new(
        base: PetrovBase,
        marks: Vec<ExpansionMark>,
        asd: AsdLabel,
    ) -> Result<Self, ClassificationError> {
        let allowed = base.allowed_marks();
        if marks.len() > allowed {
            return Err(ClassificationError::TooManyMarks {
                base,
                allowed,
                got: marks.len(),
            });
        }
        Ok(PetrovLabel { base, marks, asd })
    }

    pub fn base(&self) -> PetrovBase {
        self.base
    }

    pub fn marks(&self) -> &[ExpansionMark] {
        &self.marks
    }

    pub fn asd(&self) -> AsdLabel {
        self.asd
    }
}

/// Renders e.g. `D^nn x [-]^e`. A fully degenerate label — vanishing Weyl
/// spinor on both sides with R ≡ 0 — collapses to `[-] x [-]`, since the
/// expansion mark carries no information there.
impl fmt::Display for PetrovLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.base == PetrovBase::Minus
            && self.asd == AsdLabel::Minus(ExpansionMark::Nonexpanding)
        {
            return f.write_str("[-] x [-]");
        }
        write!(f, "{}", self.base)?;
        if !self.marks.is_empty() {
            f.write_str("^")?;
            for mark in &self.marks {
                write!(f, "{mark}")?;
            }
        }
        write!(f, " x {}", self.asd)
    }
}
