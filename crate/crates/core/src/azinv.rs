//! Azinv codes `A_{a,m}(n)`: non-constant words whose permuted inversion
//! number `τ = inv ∘ σ⁻¹` is `a` mod `m`.
//!
//! With `n <= m` the code corrects one balanced adjacent deletion (BAD);
//! with `2(n-1) <= m` it also corrects one balanced adjacent reversal (BAR).

use crate::code::Guarantee;
use crate::error::{Error, Result};
use crate::outcome::DecodeOutcome;
use crate::unified::{self, DeletionBinding, ReversalBinding};
use crate::words::Word;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AzinvParams {
    n: usize,
    m: u64,
    a: u64,
}

impl AzinvParams {
    /// Requires `n >= 2` and `m >= 2`; `a` is reduced mod `m`.
    pub fn new(n: usize, m: u64, a: i64) -> Result<Self> {
        if n < 2 {
            return Err(Error::Argument(format!("azinv block length must be at least 2, got {n}")));
        }
        if m < 2 {
            return Err(Error::Argument(format!("modulus must be at least 2, got {m}")));
        }
        let a = i128::from(a).rem_euclid(i128::from(m)) as u64;
        Ok(AzinvParams { n, m, a })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn guarantee(&self) -> Guarantee {
        let n = self.n as u128;
        let m = u128::from(self.m);
        if 2 * (n - 1) <= m {
            Guarantee::DeletionAndReversal
        } else if n <= m {
            Guarantee::Deletion
        } else {
            Guarantee::None
        }
    }

    /// `τ(x) mod m`.
    pub fn residue(&self, x: &Word) -> u64 {
        tau(x) % self.m
    }

    pub fn with_a(&self, a: i64) -> Self {
        let a = i128::from(a).rem_euclid(i128::from(self.m)) as u64;
        AzinvParams { a, ..self.clone() }
    }

    pub fn with_residue_of(&self, x: &Word) -> Self {
        AzinvParams { a: self.residue(x), ..self.clone() }
    }

    pub fn is_codeword(&self, x: &Word) -> bool {
        x.len() == self.n && !x.is_constant() && self.residue(x) == self.a
    }

    pub fn decode(&self, y: &Word) -> DecodeOutcome {
        let (del, rev) = binding(self);
        unified::decode_with(y, &del, &rev)
    }

    fn syndrome(&self, y: &Word) -> u64 {
        let m = u128::from(self.m);
        ((u128::from(self.a) + m - u128::from(self.residue(y))) % m) as u64
    }
}

/// Source index (0-based, into the argument) of each output symbol of `σ⁻¹`.
///
/// Unrolling `σ⁻¹(y_1 y_2 ... y_n) = y_1 σ⁻¹(y_{[3,n]}) y_2` places the odd
/// positions first in order, then the even positions in reverse.
fn sigma_inv_sources(n: usize) -> impl Iterator<Item = usize> {
    let evens_from_top = (1..n).step_by(2).rev();
    (0..n).step_by(2).chain(evens_from_top)
}

/// `σ⁻¹`, the inverse of the interleaving permutation.
pub fn sigma_inv(y: &Word) -> Word {
    let bits = y.as_slice();
    Word::from_bits_unchecked(sigma_inv_sources(y.len()).map(|j| bits[j]).collect())
}

/// `σ(x_1 ... x_n) = x_1 x_n x_2 x_{n-1} x_3 ...`, built as the inverse of [`sigma_inv`].
pub fn sigma(x: &Word) -> Word {
    let mut out = vec![0u8; x.len()];
    for (&b, dst) in x.as_slice().iter().zip(sigma_inv_sources(x.len())) {
        out[dst] = b;
    }
    Word::from_bits_unchecked(out)
}

/// Inversion number by direct pair counting. Quadratic; kept as a reference.
pub fn inv_naive(y: &Word) -> u64 {
    let bits = y.as_slice();
    let mut count = 0u64;
    for i in 0..bits.len() {
        for j in i + 1..bits.len() {
            if bits[i] > bits[j] {
                count += 1;
            }
        }
    }
    count
}

/// `Σ y_i (n - i + 1) - C(wt(y) + 1, 2)` over a length-`n` symbol stream.
fn inversions(n: usize, bits: impl Iterator<Item = u8>) -> u64 {
    let n = n as u64;
    let (rho, wt) = bits.enumerate().fold((0u64, 0u64), |(rho, wt), (i, b)| {
        let b = u64::from(b);
        (rho + b * (n - i as u64), wt + b)
    });
    rho - wt * (wt + 1) / 2
}

/// Inversion number in one pass: `Σ y_i (n - i + 1) - C(wt(y) + 1, 2)`.
pub fn inv_fast(y: &Word) -> u64 {
    inversions(y.len(), y.as_slice().iter().copied())
}

/// `τ(y) = inv(σ⁻¹(y))`, streamed without materializing `σ⁻¹(y)`.
pub fn tau(y: &Word) -> u64 {
    let bits = y.as_slice();
    inversions(y.len(), sigma_inv_sources(y.len()).map(|j| bits[j]))
}

/// Symbols of `ỹ` without allocating it.
fn tilde_bits(y: &Word) -> impl Iterator<Item = u8> + '_ {
    y.as_slice().iter().enumerate().map(|(j, &b)| b ^ (j % 2) as u8)
}

pub fn binding(params: &AzinvParams) -> (AzinvDeletion<'_>, AzinvReversal<'_>) {
    (AzinvDeletion { params }, AzinvReversal { params })
}

fn alternating_pair(first_one: bool) -> Word {
    Word::from_bits_unchecked(if first_one { vec![1, 0] } else { vec![0, 1] })
}

/// BAD repair. The left/right statistics run over `ỹ` (length `n - 2`) with
/// unit gaps and search range `[1, n - 1]`.
#[derive(Debug, Clone, Copy)]
pub struct AzinvDeletion<'a> {
    params: &'a AzinvParams,
}

impl DeletionBinding for AzinvDeletion<'_> {
    fn code_length(&self) -> usize {
        self.params.n
    }

    fn expected_received_length(&self) -> usize {
        self.params.n - 2
    }

    fn modulus(&self) -> u64 {
        self.params.m
    }

    fn remainder(&self, y: &Word) -> u64 {
        self.params.syndrome(y)
    }

    fn weight(&self, y: &Word) -> u64 {
        tilde_bits(y).map(u64::from).sum()
    }

    /// `max { j in [n-1] : L1(j, ỹ) = r }`.
    fn position1(&self, r: u64, y: &Word) -> Option<usize> {
        let mut bits = tilde_bits(y);
        let mut left_ones = 0u64;
        let mut found = None;
        for j in 1..self.params.n {
            if left_ones == r {
                found = Some(j);
            } else if left_ones > r {
                break;
            }
            left_ones += bits.next().map_or(0, u64::from);
        }
        found
    }

    /// `min { j in [n-1] : R0(j, ỹ) = r - w - 1 }`.
    fn position2(&self, r: u64, w: u64, y: &Word) -> Option<usize> {
        let target = r.checked_sub(w)?.checked_sub(1)?;
        let mut right_zeros = y.len() as u64 - self.weight(y);
        let mut bits = tilde_bits(y);
        for j in 1..self.params.n {
            if right_zeros == target {
                return Some(j);
            }
            if right_zeros < target {
                break;
            }
            right_zeros -= bits.next().map_or(0, |b| u64::from(1 - b));
        }
        None
    }

    fn sequence1(&self, p: usize) -> Word {
        alternating_pair(p.is_multiple_of(2))
    }

    fn sequence2(&self, p: usize) -> Word {
        alternating_pair(p % 2 == 1)
    }

    fn membership(&self, x: &Word) -> bool {
        self.params.is_codeword(x)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct AzinvReversal<'a> {
    params: &'a AzinvParams,
}

impl ReversalBinding for AzinvReversal<'_> {
    fn code_length(&self) -> usize {
        self.params.n
    }

    fn modulus(&self) -> u64 {
        self.params.m
    }

    fn remainder(&self, y: &Word) -> u64 {
        self.params.syndrome(y)
    }

    /// `n - min(r, m - r)`, kept only if it lies in `[1, n-1]` and the BAR map is defined there.
    fn position(&self, r: u64, y: &Word) -> Option<usize> {
        let shift = r.min(self.params.m - r);
        let p = (self.params.n as u64).checked_sub(shift)? as usize;
        (p >= 1 && y.is_balanced_at(p)).then_some(p)
    }

    fn reversed(&self, p: usize, y: &Word) -> Option<Word> {
        y.bar(p).ok()
    }

    fn membership(&self, x: &Word) -> bool {
        self.params.is_codeword(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::outcome::{Branch, Decoded, FailureReason};

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn all_words(n: usize) -> impl Iterator<Item = Word> {
        (0..1u64 << n).map(move |v| Word::from_index(v, n))
    }

    /// `x_1 x_n x_2 x_{n-1} ...`, written straight from the two-case closed form.
    fn sigma_closed_form(x: &Word) -> Word {
        let n = x.len();
        let bits = x.as_slice();
        let (mut lo, mut hi) = (0usize, n);
        let mut out = Vec::with_capacity(n);
        while lo < hi {
            out.push(bits[lo]);
            lo += 1;
            if lo < hi {
                hi -= 1;
                out.push(bits[hi]);
            }
        }
        Word::from_bits(out).unwrap()
    }

    fn sigma_inv_recursive(y: &Word) -> Word {
        if y.len() <= 1 {
            return y.clone();
        }
        let mut bits = vec![y.get(1).unwrap()];
        bits.extend(sigma_inv_recursive(&y.subrange(3, y.len()).unwrap()).into_bits());
        bits.push(y.get(2).unwrap());
        Word::from_bits(bits).unwrap()
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma(&w("100000")), w("100000"));
        assert_eq!(sigma(&w("110000")), w("101000"));
        assert_eq!(sigma(&w("10")), w("10"));
        assert_eq!(sigma_inv(&w("101")), w("110"));
        assert_eq!(sigma_inv(&Word::empty()), Word::empty());
        assert_eq!(sigma_inv(&w("1")), w("1"));
        assert_eq!(sigma_inv(&w("100000")), w("100000"));
    }

    #[test]
    fn sigma_matches_closed_form_and_recursion() {
        for n in 0..=12 {
            for x in all_words(n) {
                assert_eq!(sigma(&x), sigma_closed_form(&x), "{x:?}");
                assert_eq!(sigma_inv(&x), sigma_inv_recursive(&x), "{x:?}");
                assert_eq!(sigma_inv(&sigma(&x)), x);
                assert_eq!(sigma(&sigma_inv(&x)), x);
            }
        }
    }

    #[test]
    fn inversion_examples() {
        assert_eq!(inv_naive(&w("10")), 1);
        assert_eq!(inv_naive(&w("0000")), 0);
        assert_eq!(inv_naive(&w("000111")), 0);
        assert_eq!(inv_naive(&w("110")), 2);
        assert_eq!(inv_fast(&w("110")), 2);
        assert_eq!(inv_fast(&Word::empty()), 0);
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau(&w("100000")), 5);
        assert_eq!(tau(&w("101")), 2);
        for n in 0..8 {
            assert_eq!(tau(&Word::zeros(n)), 0);
            assert_eq!(tau(&Word::ones(n)), 0);
        }
    }

    #[test]
    fn tilde_makes_balanced_pairs_equal() {
        for n in 2..=10 {
            for x in all_words(n) {
                let xt = x.tilde();
                for i in 1..n {
                    if x.is_balanced_at(i) {
                        assert_eq!(xt.get(i), xt.get(i + 1));
                        let yt = x.bar(i).unwrap().tilde();
                        assert_eq!(yt.get(i), yt.get(i + 1));
                    }
                }
            }
        }
    }

    #[test]
    fn params_and_membership() {
        let p = AzinvParams::new(6, 10, 0).unwrap();
        assert!(p.is_codeword(&w("010000")));
        assert!(!p.is_codeword(&w("000000")));
        assert!(!p.is_codeword(&w("100000")));
        assert!(!p.is_codeword(&w("01000")));
        assert_eq!(p.guarantee(), Guarantee::DeletionAndReversal);
        assert_eq!(AzinvParams::new(6, 9, 0).unwrap().guarantee(), Guarantee::Deletion);
        assert_eq!(AzinvParams::new(6, 5, 0).unwrap().guarantee(), Guarantee::None);
        assert!(AzinvParams::new(1, 5, 0).is_err());
        assert!(AzinvParams::new(4, 1, 0).is_err());
        assert_eq!(AzinvParams::new(4, 5, -1).unwrap().a(), 4);
    }

    #[test]
    fn decode_bad_example() {
        let p = AzinvParams::new(5, 5, 0).unwrap();
        let out = p.decode(&w("101"));
        assert_eq!(out.result, Decoded::Codeword(w("10110")));
        assert_eq!(out.trace.branch, Branch::DeletionRepair);
        assert_eq!((out.trace.r, out.trace.w, out.trace.p), (Some(3), Some(3), Some(4)));
        assert_eq!(out.trace.b, Some(w("10")));
    }

    #[test]
    fn decode_bar_example() {
        let p = AzinvParams::new(6, 10, 0).unwrap();
        let out = p.decode(&w("100000"));
        assert_eq!(out.result, Decoded::Codeword(w("010000")));
        assert_eq!(out.trace.branch, Branch::ReversalRepair);
        assert_eq!((out.trace.r, out.trace.p), (Some(5), Some(1)));

        let out = p.decode(&w("010000"));
        assert_eq!(out.trace.branch, Branch::Passthrough);
        assert_eq!(out.trace.r, Some(0));

        assert_eq!(p.decode(&w("10100")).failure(), Some(FailureReason::WrongLength));
    }

    #[test]
    fn bar_position_guards() {
        let p = AzinvParams::new(6, 10, 0).unwrap();
        // τ(000000) = 0 but the constant word is not a codeword.
        let out = p.decode(&w("000000"));
        assert_eq!(out.trace.branch, Branch::Passthrough);
        // r = 5 -> p = 1, but y_1 = y_2, so BAR is undefined there.
        let (_, rev) = binding(&p);
        assert_eq!(rev.position(5, &w("000000")), None);
        // Modulus far larger than n pushes the position below 1.
        let big = AzinvParams::new(4, 100, 0).unwrap();
        let (_, rev) = binding(&big);
        assert_eq!(rev.position(10, &w("0101")), None);
    }

    #[test]
    fn n_equals_two() {
        let p = AzinvParams::new(2, 2, 1).unwrap();
        assert!(p.is_codeword(&w("10")));
        assert_eq!(p.decode(&Word::empty()).codeword(), Some(&w("10")));
        assert_eq!(p.decode(&w("01")).codeword(), Some(&w("10")));
    }
}
