use std::fmt;

use crate::words::Word;

/// Why a decoder answered `?`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FailureReason {
    /// Received length is neither the code length nor a single-error image length.
    WrongLength,
    /// The position search came back empty (or produced an unusable position).
    PositionNotFound,
    /// The repaired candidate is not a codeword.
    MembershipCheckFailed,
    /// A binding's partial repair map was undefined at the chosen position.
    PartialMapViolation,
}

impl fmt::Display for FailureReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FailureReason::WrongLength => "WrongLength",
            FailureReason::PositionNotFound => "PositionNotFound",
            FailureReason::MembershipCheckFailed => "MembershipCheckFailed",
            FailureReason::PartialMapViolation => "PartialMapViolation",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Decoded {
    Codeword(Word),
    Failure(FailureReason),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    Passthrough,
    ReversalRepair,
    DeletionRepair,
    Rejected,
}

/// Internal values of a decoder run: residue `r`, weight `w`, position `p`
/// and inserted word `b`. Fields a branch never computes stay `None`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DecodeTrace {
    pub branch: Branch,
    pub r: Option<u64>,
    pub w: Option<u64>,
    pub p: Option<usize>,
    pub b: Option<Word>,
}

impl DecodeTrace {
    pub(crate) fn rejected() -> Self {
        DecodeTrace { branch: Branch::Rejected, r: None, w: None, p: None, b: None }
    }
}

impl fmt::Display for DecodeTrace {
    /// Space-separated `key=value` pairs for the fields that are present.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if let Some(r) = self.r {
            parts.push(format!("r={r}"));
        }
        if let Some(w) = self.w {
            parts.push(format!("w={w}"));
        }
        if let Some(p) = self.p {
            parts.push(format!("p={p}"));
        }
        if let Some(b) = &self.b {
            parts.push(format!("b={b}"));
        }
        f.write_str(&parts.join(" "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DecodeOutcome {
    pub result: Decoded,
    pub trace: DecodeTrace,
}

impl DecodeOutcome {
    pub fn codeword(&self) -> Option<&Word> {
        match &self.result {
            Decoded::Codeword(w) => Some(w),
            Decoded::Failure(_) => None,
        }
    }

    pub fn failure(&self) -> Option<FailureReason> {
        match self.result {
            Decoded::Codeword(_) => None,
            Decoded::Failure(reason) => Some(reason),
        }
    }

    pub(crate) fn fail(reason: FailureReason, trace: DecodeTrace) -> Self {
        DecodeOutcome { result: Decoded::Failure(reason), trace }
    }
}
