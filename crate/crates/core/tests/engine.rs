//! The flowchart engine against the direct decoders and the step-by-step
//! reference transcriptions.

mod common;

use common::*;
use syncode::azinv::{self, AzinvParams};
use syncode::monotone::{self, MonotoneParams};
use syncode::unified::{decode_with, run_deletion_flowchart, run_reversal_flowchart, DeletionBinding, ReversalBinding};
use syncode::{reference, Branch, FailureReason, Word};

fn lengths(n: usize) -> Vec<usize> {
    let mut ls = vec![n, n + 1, n + 2];
    ls.extend((0..n).rev().take(4));
    ls
}

fn residues(m: u64) -> Vec<u64> {
    let mut a = vec![0, 1, m / 2, m - 1];
    a.sort();
    a.dedup();
    a
}

#[test]
fn monotone_engine_matches_direct_and_reference() {
    for n in 1..=8 {
        for (_, k) in k_families(n) {
            for m in [k[n - 1], k[n - 1] + 1, 2 * k[n - 1]] {
                if m < 2 {
                    continue;
                }
                for a in residues(m) {
                    let params = MonotoneParams::new(m, a as i64, k.clone()).unwrap();
                    let (del, rev) = monotone::binding(&params);
                    for len in lengths(n) {
                        for y in all_words(len) {
                            let direct = params.decode(&y);
                            assert_eq!(decode_with(&y, &del, &rev), direct);
                            assert_eq!(reference::decode_monotone(&y, &params), direct, "{y:?} {params:?}");
                            if len == n {
                                assert_eq!(run_reversal_flowchart(&y, &rev), direct);
                            } else if len + 1 == n {
                                assert_eq!(run_deletion_flowchart(&y, &del), direct);
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn azinv_engine_matches_direct_and_reference() {
    for n in 2..=10 {
        for m in [n as u64 - 1, n as u64, 2 * (n as u64 - 1), 3 * n as u64] {
            if m < 2 {
                continue;
            }
            for a in residues(m) {
                let params = AzinvParams::new(n, m, a as i64).unwrap();
                let (del, rev) = azinv::binding(&params);
                for len in lengths(n) {
                    for y in all_words(len) {
                        let direct = params.decode(&y);
                        assert_eq!(decode_with(&y, &del, &rev), direct);
                        assert_eq!(reference::decode_azinv(&y, &params), direct, "{y:?} {params:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn binding_tables() {
    let params = MonotoneParams::new(9, 0, vec![1, 3, 6, 8]).unwrap();
    let (del, rev) = monotone::binding(&params);
    for p in 1..=4 {
        assert_eq!(del.sequence1(p), w("0"));
        assert_eq!(del.sequence2(p), w("1"));
    }
    assert_eq!(del.expected_received_length(), 3);
    assert_eq!(del.remainder(&w("101")), 2);
    assert_eq!(del.weight(&w("101")), 4);
    assert_eq!(del.position1(2, &w("101")), Some(3));
    // k_j = min(r, m - r): r = 3 or r = 6 both point at k_2 = 3.
    assert_eq!(rev.position(3, &w("0000")), Some(2));
    assert_eq!(rev.position(6, &w("0000")), Some(2));
    assert_eq!(rev.position(2, &w("0000")), None);

    let params = AzinvParams::new(5, 5, 0).unwrap();
    let (del, _) = azinv::binding(&params);
    assert_eq!(del.sequence1(4), w("10"));
    assert_eq!(del.sequence1(3), w("01"));
    assert_eq!(del.sequence2(4), w("01"));
    assert_eq!(del.sequence2(3), w("10"));
    assert_eq!(del.weight(&w("101")), 3);
    assert_eq!(del.position1(3, &w("101")), Some(4));

    let params = AzinvParams::new(6, 10, 0).unwrap();
    let (_, rev) = azinv::binding(&params);
    assert_eq!(rev.position(5, &w("100000")), Some(1));
}

#[test]
fn flowcharts_on_worked_examples() {
    let mono = MonotoneParams::new(9, 0, vec![1, 3, 6, 8]).unwrap();
    let (del, _) = monotone::binding(&mono);
    assert_eq!(run_deletion_flowchart(&w("101"), &del).codeword(), Some(&w("1001")));

    let mono = MonotoneParams::new(20, 0, vec![1, 2, 3, 8, 9, 10]).unwrap();
    let (_, rev) = monotone::binding(&mono);
    assert_eq!(run_reversal_flowchart(&w("111110"), &rev).codeword(), Some(&w("110110")));
    assert_eq!(run_reversal_flowchart(&w("110110"), &rev).trace.branch, Branch::Passthrough);

    let az = AzinvParams::new(5, 5, 0).unwrap();
    let (del, _) = azinv::binding(&az);
    assert_eq!(run_deletion_flowchart(&w("101"), &del).codeword(), Some(&w("10110")));

    let az = AzinvParams::new(6, 10, 0).unwrap();
    let (_, rev) = azinv::binding(&az);
    assert_eq!(run_reversal_flowchart(&w("100000"), &rev).codeword(), Some(&w("010000")));
    assert_eq!(run_reversal_flowchart(&w("010000"), &rev).trace.branch, Branch::Passthrough);

    assert_eq!(run_deletion_flowchart(&w("1"), &del).failure(), Some(FailureReason::WrongLength));
}

/// Wraps a real binding but tampers with the repaired word.
struct Tampered<B>(B);

impl<B: DeletionBinding> DeletionBinding for Tampered<B> {
    fn code_length(&self) -> usize {
        self.0.code_length()
    }
    fn expected_received_length(&self) -> usize {
        self.0.expected_received_length()
    }
    fn modulus(&self) -> u64 {
        self.0.modulus()
    }
    fn remainder(&self, y: &Word) -> u64 {
        self.0.remainder(y)
    }
    fn weight(&self, y: &Word) -> u64 {
        self.0.weight(y)
    }
    fn position1(&self, r: u64, y: &Word) -> Option<usize> {
        self.0.position1(r, y)
    }
    fn position2(&self, r: u64, w: u64, y: &Word) -> Option<usize> {
        self.0.position2(r, w, y)
    }
    fn sequence1(&self, p: usize) -> Word {
        self.0.sequence1(p)
    }
    fn sequence2(&self, p: usize) -> Word {
        self.0.sequence2(p)
    }
    fn inserted(&self, p: usize, b: &Word, y: &Word) -> Option<Word> {
        let x = self.0.inserted(p, b, y)?;
        x.rev(1).ok()
    }
    fn membership(&self, x: &Word) -> bool {
        self.0.membership(x)
    }
}

impl<B: ReversalBinding> ReversalBinding for Tampered<B> {
    fn code_length(&self) -> usize {
        self.0.code_length()
    }
    fn modulus(&self) -> u64 {
        self.0.modulus()
    }
    fn remainder(&self, y: &Word) -> u64 {
        self.0.remainder(y)
    }
    fn position(&self, r: u64, y: &Word) -> Option<usize> {
        self.0.position(r, y)
    }
    fn reversed(&self, _p: usize, _y: &Word) -> Option<Word> {
        None
    }
    fn membership(&self, x: &Word) -> bool {
        self.0.membership(x)
    }
}

#[test]
fn engine_never_emits_words_failing_membership() {
    let params = MonotoneParams::new(16, 0, vec![1, 2, 3, 4, 5, 6, 7, 8]).unwrap();
    let (del, rev) = monotone::binding(&params);
    let (del, rev) = (Tampered(del), Tampered(rev));
    for len in [7, 8] {
        for y in all_words(len) {
            let out = decode_with(&y, &del, &rev);
            if let Some(z) = out.codeword() {
                assert!(params.is_codeword(z));
                assert_eq!(out.trace.branch, Branch::Passthrough);
            } else if len == 8 {
                assert!(matches!(
                    out.failure(),
                    Some(FailureReason::PartialMapViolation | FailureReason::PositionNotFound)
                ));
            }
        }
    }
    // ρ(10000111) = 1 + 6 + 7 + 8 = 22 ≡ 6 (mod 16); the tampered repair flips symbol 1.
    let params = params.with_residue_of(&w("10000111"));
    let (del, rev) = monotone::binding(&params);
    let (del, rev) = (Tampered(del), Tampered(rev));
    let y = w("10000111").del(3).unwrap();
    assert_eq!(decode_with(&y, &del, &rev).failure(), Some(FailureReason::MembershipCheckFailed));
    assert_eq!(params.decode(&y).codeword(), Some(&w("10000111")));
}

/// A code the engine was never written for: even-weight parity words, repaired
/// after one deletion by appending the parity bit. Shows a new family plugs in
/// without engine changes.
struct ParityDeletion {
    n: usize,
}

impl DeletionBinding for ParityDeletion {
    fn code_length(&self) -> usize {
        self.n
    }
    fn expected_received_length(&self) -> usize {
        self.n - 1
    }
    fn modulus(&self) -> u64 {
        2
    }
    fn remainder(&self, y: &Word) -> u64 {
        y.weight() % 2
    }
    fn weight(&self, _y: &Word) -> u64 {
        0
    }
    fn position1(&self, _r: u64, y: &Word) -> Option<usize> {
        Some(y.len() + 1)
    }
    fn position2(&self, _r: u64, _w: u64, y: &Word) -> Option<usize> {
        Some(y.len() + 1)
    }
    fn sequence1(&self, _p: usize) -> Word {
        w("0")
    }
    fn sequence2(&self, _p: usize) -> Word {
        w("1")
    }
    fn membership(&self, x: &Word) -> bool {
        x.len() == self.n && x.weight().is_multiple_of(2)
    }
}

#[test]
fn third_party_binding() {
    let binding = ParityDeletion { n: 4 };
    assert_eq!(run_deletion_flowchart(&w("110"), &binding).codeword(), Some(&w("1100")));
    assert_eq!(run_deletion_flowchart(&w("100"), &binding).codeword(), Some(&w("1001")));
}
