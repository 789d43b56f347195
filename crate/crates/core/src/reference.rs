//! Step-by-step transcriptions of the two decoding algorithms, written from
//! the definitions and independent of the flowchart engine: statistics come
//! from [`stat`], inversions from pair counting, `σ⁻¹` from its recursion.
//! Quadratic time; used to cross-check the fast decoders.

use crate::azinv::{inv_naive, AzinvParams};
use crate::monotone::{rho_k, stat, wt_k, MonotoneParams, Stat};
use crate::outcome::{Branch, DecodeOutcome, DecodeTrace, Decoded, FailureReason};
use crate::words::Word;

fn residue(a: u64, value: u64, m: u64) -> u64 {
    (i128::from(a) - i128::from(value)).rem_euclid(i128::from(m)) as u64
}

fn finish(
    candidate: Option<Word>,
    undefined: FailureReason,
    is_member: impl Fn(&Word) -> bool,
    trace: DecodeTrace,
) -> DecodeOutcome {
    match candidate {
        Some(x) if is_member(&x) => DecodeOutcome { result: Decoded::Codeword(x), trace },
        Some(_) => DecodeOutcome::fail(FailureReason::MembershipCheckFailed, trace),
        None => DecodeOutcome::fail(undefined, trace),
    }
}

fn passthrough(y: &Word) -> DecodeOutcome {
    DecodeOutcome {
        result: Decoded::Codeword(y.clone()),
        trace: DecodeTrace { branch: Branch::Passthrough, r: Some(0), w: None, p: None, b: None },
    }
}

pub fn decode_monotone(y: &Word, params: &MonotoneParams) -> DecodeOutcome {
    let (n, m, a, k) = (params.n(), params.m(), params.a(), params.k());
    let member = |x: &Word| x.len() == n && rho_k(x, k).unwrap() % m == a;
    let r = residue(a, rho_k(y, k).unwrap_or(0), m);

    if y.len() == n {
        if r == 0 {
            return passthrough(y);
        }
        let mut trace = DecodeTrace { branch: Branch::ReversalRepair, r: Some(r), w: None, p: None, b: None };
        let target = r.min(m - r);
        let Some(p) = (1..=n).find(|&j| k[j - 1] == target) else {
            return DecodeOutcome::fail(FailureReason::PositionNotFound, trace);
        };
        trace.p = Some(p);
        finish(y.rev(p).ok(), FailureReason::PartialMapViolation, member, trace)
    } else if y.len() + 1 == n {
        let k = &k[..n];
        let w = wt_k(y, k).unwrap();
        let mut trace = DecodeTrace { branch: Branch::DeletionRepair, r: Some(r), w: Some(w), p: None, b: None };
        let found = if r <= w {
            (1..=n).filter(|&j| stat(Stat::R1, j, y, k).unwrap() == r).max().map(|p| (p, "0"))
        } else {
            let target = i128::from(r) - i128::from(w) - i128::from(k[0]);
            (1..=n).find(|&j| i128::from(stat(Stat::L0, j, y, k).unwrap()) == target).map(|p| (p, "1"))
        };
        let Some((p, b)) = found else {
            return DecodeOutcome::fail(FailureReason::PositionNotFound, trace);
        };
        let b: Word = b.parse().unwrap();
        trace.p = Some(p);
        let candidate = y.ins(p, &b).ok();
        trace.b = Some(b);
        finish(candidate, FailureReason::PositionNotFound, member, trace)
    } else {
        DecodeOutcome::fail(FailureReason::WrongLength, DecodeTrace::rejected())
    }
}

/// `σ⁻¹(y_1 y_2 ... y_n) = y_1 σ⁻¹(y_{[3,n]}) y_2`.
pub fn sigma_inv_recursive(y: &Word) -> Word {
    if y.len() <= 1 {
        return y.clone();
    }
    let mut bits = vec![y.get(1).unwrap()];
    bits.extend(sigma_inv_recursive(&y.subrange(3, y.len()).unwrap()).into_bits());
    bits.push(y.get(2).unwrap());
    Word::from_bits(bits).unwrap()
}

fn tau_naive(y: &Word) -> u64 {
    inv_naive(&sigma_inv_recursive(y))
}

pub fn decode_azinv(y: &Word, params: &AzinvParams) -> DecodeOutcome {
    let (n, m, a) = (params.n(), params.m(), params.a());
    let member = |x: &Word| {
        let constant = x.as_slice().iter().all(|&b| b == 0) || x.as_slice().iter().all(|&b| b == 1);
        x.len() == n && !constant && tau_naive(x) % m == a
    };
    let r = residue(a, tau_naive(y), m);

    if y.len() == n {
        if r == 0 {
            return passthrough(y);
        }
        let mut trace = DecodeTrace { branch: Branch::ReversalRepair, r: Some(r), w: None, p: None, b: None };
        let shift = r.min(m - r);
        let p = n as i128 - i128::from(shift);
        if p < 1 || p > n as i128 - 1 || y.get(p as usize) == y.get(p as usize + 1) {
            return DecodeOutcome::fail(FailureReason::PositionNotFound, trace);
        }
        let p = p as usize;
        trace.p = Some(p);
        finish(y.bar(p).ok(), FailureReason::PartialMapViolation, member, trace)
    } else if y.len() + 2 == n {
        let yt = y.tilde();
        let unit: Vec<u64> = (1..=(n - 1) as u64).collect();
        let w = yt.as_slice().iter().filter(|&&b| b == 1).count() as u64;
        let mut trace = DecodeTrace { branch: Branch::DeletionRepair, r: Some(r), w: Some(w), p: None, b: None };
        let found = if r <= w {
            (1..n)
                .filter(|&j| stat(Stat::L1, j, &yt, &unit).unwrap() == r)
                .max()
                .map(|p| (p, if p % 2 == 0 { "10" } else { "01" }))
        } else {
            let target = i128::from(r) - i128::from(w) - 1;
            (1..n)
                .find(|&j| i128::from(stat(Stat::R0, j, &yt, &unit).unwrap()) == target)
                .map(|p| (p, if p % 2 == 0 { "01" } else { "10" }))
        };
        let Some((p, b)) = found else {
            return DecodeOutcome::fail(FailureReason::PositionNotFound, trace);
        };
        let b: Word = b.parse().unwrap();
        trace.p = Some(p);
        let candidate = y.ins(p, &b).ok();
        trace.b = Some(b);
        finish(candidate, FailureReason::PositionNotFound, member, trace)
    } else {
        DecodeOutcome::fail(FailureReason::WrongLength, DecodeTrace::rejected())
    }
}
