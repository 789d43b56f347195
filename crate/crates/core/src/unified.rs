//! Generic decoding engines shared by both code families.
//!
//! The engine owns the control flow: length dispatch, the `r = 0` shortcut,
//! the `r <= w` split and the final membership gate. A binding supplies the
//! arithmetic. [`monotone`](crate::monotone) and [`azinv`](crate::azinv)
//! ship the two bindings; a new family plugs in by implementing the two
//! traits below.

use crate::outcome::{Branch, DecodeOutcome, DecodeTrace, Decoded, FailureReason};
use crate::words::Word;

/// Function table for deletion-type repair.
pub trait DeletionBinding {
    /// Length `n` of the codewords.
    fn code_length(&self) -> usize;

    /// Length of a received word carrying one deletion-type error.
    fn expected_received_length(&self) -> usize;

    fn modulus(&self) -> u64;

    /// Syndrome residue in `[0, modulus)`.
    fn remainder(&self, y: &Word) -> u64;

    fn weight(&self, y: &Word) -> u64;

    /// Position used when `r <= w`.
    fn position1(&self, r: u64, y: &Word) -> Option<usize>;

    /// Position used when `r > w`.
    fn position2(&self, r: u64, w: u64, y: &Word) -> Option<usize>;

    fn sequence1(&self, p: usize) -> Word;

    fn sequence2(&self, p: usize) -> Word;

    fn inserted(&self, p: usize, b: &Word, y: &Word) -> Option<Word> {
        y.ins(p, b).ok()
    }

    fn membership(&self, x: &Word) -> bool;
}

/// Function table for reversal-type repair.
pub trait ReversalBinding {
    fn code_length(&self) -> usize;

    fn modulus(&self) -> u64;

    fn remainder(&self, y: &Word) -> u64;

    fn position(&self, r: u64, y: &Word) -> Option<usize>;

    /// `None` when the reversal map is undefined at `p`.
    fn reversed(&self, p: usize, y: &Word) -> Option<Word>;

    fn membership(&self, x: &Word) -> bool;
}

fn gate(candidate: Word, membership: impl FnOnce(&Word) -> bool, trace: DecodeTrace) -> DecodeOutcome {
    if membership(&candidate) {
        DecodeOutcome { result: Decoded::Codeword(candidate), trace }
    } else {
        DecodeOutcome::fail(FailureReason::MembershipCheckFailed, trace)
    }
}

/// Deletion flowchart: residue, weight, one of two position searches, insertion, membership gate.
pub fn run_deletion_flowchart<B: DeletionBinding + ?Sized>(y: &Word, binding: &B) -> DecodeOutcome {
    if y.len() != binding.expected_received_length() {
        return DecodeOutcome::fail(FailureReason::WrongLength, DecodeTrace::rejected());
    }
    let r = binding.remainder(y);
    debug_assert!(r < binding.modulus());
    let w = binding.weight(y);
    let mut trace = DecodeTrace { branch: Branch::DeletionRepair, r: Some(r), w: Some(w), p: None, b: None };

    let (p, b) = if r <= w {
        match binding.position1(r, y) {
            Some(p) => (p, binding.sequence1(p)),
            None => return DecodeOutcome::fail(FailureReason::PositionNotFound, trace),
        }
    } else {
        match binding.position2(r, w, y) {
            Some(p) => (p, binding.sequence2(p)),
            None => return DecodeOutcome::fail(FailureReason::PositionNotFound, trace),
        }
    };
    trace.p = Some(p);
    let candidate = binding.inserted(p, &b, y);
    trace.b = Some(b);
    match candidate {
        Some(x) => gate(x, |x| binding.membership(x), trace),
        None => DecodeOutcome::fail(FailureReason::PositionNotFound, trace),
    }
}

/// Reversal flowchart: residue, `r = 0` passthrough, position, reversal, membership gate.
pub fn run_reversal_flowchart<B: ReversalBinding + ?Sized>(y: &Word, binding: &B) -> DecodeOutcome {
    if y.len() != binding.code_length() {
        return DecodeOutcome::fail(FailureReason::WrongLength, DecodeTrace::rejected());
    }
    let r = binding.remainder(y);
    debug_assert!(r < binding.modulus());
    if r == 0 {
        let trace = DecodeTrace { branch: Branch::Passthrough, r: Some(0), w: None, p: None, b: None };
        return DecodeOutcome { result: Decoded::Codeword(y.clone()), trace };
    }
    let mut trace = DecodeTrace { branch: Branch::ReversalRepair, r: Some(r), w: None, p: None, b: None };
    let Some(p) = binding.position(r, y) else {
        return DecodeOutcome::fail(FailureReason::PositionNotFound, trace);
    };
    trace.p = Some(p);
    match binding.reversed(p, y) {
        Some(x) => gate(x, |x| binding.membership(x), trace),
        None => DecodeOutcome::fail(FailureReason::PartialMapViolation, trace),
    }
}

/// Full decoder: words of length `n` go through the reversal flowchart,
/// words of the deletion image length through the deletion flowchart, and
/// anything else is rejected.
pub fn decode_with<D, R>(y: &Word, deletion: &D, reversal: &R) -> DecodeOutcome
where
    D: DeletionBinding + ?Sized,
    R: ReversalBinding + ?Sized,
{
    if y.len() == reversal.code_length() {
        run_reversal_flowchart(y, reversal)
    } else if y.len() == deletion.expected_received_length() {
        run_deletion_flowchart(y, deletion)
    } else {
        DecodeOutcome::fail(FailureReason::WrongLength, DecodeTrace::rejected())
    }
}
