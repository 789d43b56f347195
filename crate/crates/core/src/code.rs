//! Family-agnostic view over the two code families.

use std::fmt;
use std::str::FromStr;

use crate::azinv::AzinvParams;
use crate::error::{Error, Result};
use crate::monotone::MonotoneParams;
use crate::outcome::DecodeOutcome;
use crate::words::Word;

/// Which single-error classes a parameter set is guaranteed to correct.
///
/// For azinv codes "deletion" and "reversal" mean the balanced adjacent
/// variants (BAD and BAR).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Guarantee {
    None,
    Deletion,
    DeletionAndReversal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ErrorClass {
    Del,
    Rev,
    Bad,
    Bar,
}

impl ErrorClass {
    pub const ALL: [ErrorClass; 4] = [ErrorClass::Del, ErrorClass::Rev, ErrorClass::Bad, ErrorClass::Bar];

    /// Applies the error map at 1-based position `i`.
    pub fn apply(self, x: &Word, i: usize) -> Result<Word> {
        match self {
            ErrorClass::Del => x.del(i),
            ErrorClass::Rev => x.rev(i),
            ErrorClass::Bad => x.bad(i),
            ErrorClass::Bar => x.bar(i),
        }
    }

    /// All positions at which the map is defined for `x`, ascending.
    pub fn valid_positions(self, x: &Word) -> Vec<usize> {
        match self {
            ErrorClass::Del | ErrorClass::Rev => (1..=x.len()).collect(),
            ErrorClass::Bad | ErrorClass::Bar => (1..x.len()).filter(|&i| x.is_balanced_at(i)).collect(),
        }
    }

    /// Length change caused by one error of this class.
    pub fn length_drop(self) -> usize {
        match self {
            ErrorClass::Del => 1,
            ErrorClass::Bad => 2,
            ErrorClass::Rev | ErrorClass::Bar => 0,
        }
    }

    pub fn is_reversal(self) -> bool {
        self.length_drop() == 0
    }
}

impl fmt::Display for ErrorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ErrorClass::Del => "Del",
            ErrorClass::Rev => "Rev",
            ErrorClass::Bad => "BAD",
            ErrorClass::Bar => "BAR",
        })
    }
}

impl FromStr for ErrorClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "del" => Ok(ErrorClass::Del),
            "rev" => Ok(ErrorClass::Rev),
            "bad" => Ok(ErrorClass::Bad),
            "bar" => Ok(ErrorClass::Bar),
            _ => Err(Error::Argument(format!("unknown error class {s:?} (expected Del, Rev, BAD or BAR)"))),
        }
    }
}

/// Parameters of either family.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CodeParams {
    Monotone(MonotoneParams),
    Azinv(AzinvParams),
}

impl CodeParams {
    pub fn n(&self) -> usize {
        match self {
            CodeParams::Monotone(p) => p.n(),
            CodeParams::Azinv(p) => p.n(),
        }
    }

    pub fn m(&self) -> u64 {
        match self {
            CodeParams::Monotone(p) => p.m(),
            CodeParams::Azinv(p) => p.m(),
        }
    }

    pub fn a(&self) -> u64 {
        match self {
            CodeParams::Monotone(p) => p.a(),
            CodeParams::Azinv(p) => p.a(),
        }
    }

    pub fn is_codeword(&self, x: &Word) -> bool {
        match self {
            CodeParams::Monotone(p) => p.is_codeword(x),
            CodeParams::Azinv(p) => p.is_codeword(x),
        }
    }

    pub fn decode(&self, y: &Word) -> DecodeOutcome {
        match self {
            CodeParams::Monotone(p) => p.decode(y),
            CodeParams::Azinv(p) => p.decode(y),
        }
    }

    pub fn guarantee(&self) -> Guarantee {
        match self {
            CodeParams::Monotone(p) => p.guarantee(),
            CodeParams::Azinv(p) => p.guarantee(),
        }
    }

    /// The deletion-type and reversal-type classes native to the family.
    pub fn native_classes(&self) -> [ErrorClass; 2] {
        match self {
            CodeParams::Monotone(_) => [ErrorClass::Del, ErrorClass::Rev],
            CodeParams::Azinv(_) => [ErrorClass::Bad, ErrorClass::Bar],
        }
    }

    /// Whether the parameters guarantee correction of `class`.
    pub fn guarantees(&self, class: ErrorClass) -> bool {
        let [del, rev] = self.native_classes();
        let g = self.guarantee();
        (class == del && g >= Guarantee::Deletion) || (class == rev && g >= Guarantee::DeletionAndReversal)
    }

    pub fn with_a(&self, a: i64) -> Self {
        match self {
            CodeParams::Monotone(p) => CodeParams::Monotone(p.with_a(a)),
            CodeParams::Azinv(p) => CodeParams::Azinv(p.with_a(a)),
        }
    }

    /// Same parameters with the residue `a` chosen so that `x` is a codeword
    /// (membership may still fail for azinv if `x` is constant).
    pub fn with_residue_of(&self, x: &Word) -> Self {
        match self {
            CodeParams::Monotone(p) => CodeParams::Monotone(p.with_residue_of(x)),
            CodeParams::Azinv(p) => CodeParams::Azinv(p.with_residue_of(x)),
        }
    }
}

impl From<MonotoneParams> for CodeParams {
    fn from(p: MonotoneParams) -> Self {
        CodeParams::Monotone(p)
    }
}

impl From<AzinvParams> for CodeParams {
    fn from(p: AzinvParams) -> Self {
        CodeParams::Azinv(p)
    }
}
