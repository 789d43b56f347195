//! Monotone codes `M_{a,m,k}(n)`: words whose `k`-weighted sum is `a` mod `m`.
//!
//! With `k_n < m` the code corrects one deletion; with `2 k_n <= m` it also
//! corrects one reversal. `k = (1, ..., n)` gives the Levenshtein codes.

use crate::code::Guarantee;
use crate::error::{Error, Result};
use crate::outcome::DecodeOutcome;
use crate::unified::{self, DeletionBinding, ReversalBinding};
use crate::words::Word;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonotoneParams {
    m: u64,
    a: u64,
    k: Vec<u64>,
}

impl MonotoneParams {
    /// Validates `k` (non-empty, `k_1 >= 1`, strictly increasing, sum fits in
    /// `u64`) and `m >= 2`. `a` may be any integer and is reduced mod `m`.
    pub fn new(m: u64, a: i64, k: Vec<u64>) -> Result<Self> {
        if m < 2 {
            return Err(Error::Argument(format!("modulus must be at least 2, got {m}")));
        }
        if k.is_empty() {
            return Err(Error::Argument("weight sequence k must be non-empty".into()));
        }
        if k[0] == 0 {
            return Err(Error::Argument("k_1 must be positive".into()));
        }
        if let Some(j) = k.windows(2).position(|w| w[0] >= w[1]) {
            return Err(Error::Argument(format!(
                "k must be strictly increasing: k_{} = {} >= k_{} = {}",
                j + 1,
                k[j],
                j + 2,
                k[j + 1]
            )));
        }
        if k.iter().try_fold(0u64, |acc, &v| acc.checked_add(v)).is_none() {
            return Err(Error::Argument("sum of k overflows 64-bit arithmetic".into()));
        }
        let a = i128::from(a).rem_euclid(i128::from(m)) as u64;
        Ok(MonotoneParams { m, a, k })
    }

    pub fn n(&self) -> usize {
        self.k.len()
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn k(&self) -> &[u64] {
        &self.k
    }

    fn k_n(&self) -> u64 {
        self.k[self.k.len() - 1]
    }

    pub fn guarantee(&self) -> Guarantee {
        let k_n = u128::from(self.k_n());
        let m = u128::from(self.m);
        if 2 * k_n <= m {
            Guarantee::DeletionAndReversal
        } else if k_n < m {
            Guarantee::Deletion
        } else {
            Guarantee::None
        }
    }

    /// `ρ_k(x) mod m` for any `|x| <= n`. The construction bound on `Σ k`
    /// keeps the unreduced sum inside `u64`.
    pub fn residue(&self, x: &Word) -> u64 {
        let rho: u64 = x.as_slice().iter().zip(&self.k).map(|(&b, &k)| u64::from(b) * k).sum();
        rho % self.m
    }

    /// Same `n`, `m`, `k` with a different residue.
    pub fn with_a(&self, a: i64) -> Self {
        let a = i128::from(a).rem_euclid(i128::from(self.m)) as u64;
        MonotoneParams { a, ..self.clone() }
    }

    /// Same `n`, `m`, `k`, with `a` chosen so that `x` is a codeword.
    pub fn with_residue_of(&self, x: &Word) -> Self {
        MonotoneParams { a: self.residue(x), ..self.clone() }
    }

    pub fn is_codeword(&self, x: &Word) -> bool {
        x.len() == self.n() && self.residue(x) == self.a
    }

    /// Decodes a received word of any length.
    pub fn decode(&self, y: &Word) -> DecodeOutcome {
        let (del, rev) = binding(self);
        unified::decode_with(y, &del, &rev)
    }

    fn syndrome(&self, y: &Word) -> u64 {
        let m = u128::from(self.m);
        ((u128::from(self.a) + m - u128::from(self.residue(y))) % m) as u64
    }
}

/// Levenshtein code parameters: `k = (1, 2, ..., n)`. A VT code when `m = n + 1`.
pub fn levenshtein_params(n: usize, m: u64, a: i64) -> Result<MonotoneParams> {
    if n == 0 {
        return Err(Error::Argument("block length must be at least 1".into()));
    }
    MonotoneParams::new(m, a, (1..=n as u64).collect())
}

/// `ρ_k(x) = Σ k_i x_i`.
pub fn rho_k(x: &Word, k: &[u64]) -> Result<u64> {
    if k.len() < x.len() {
        return Err(Error::Argument(format!("|k| = {} is shorter than |x| = {}", k.len(), x.len())));
    }
    x.as_slice()
        .iter()
        .zip(k)
        .try_fold(0u64, |acc, (&b, &kv)| if b == 1 { acc.checked_add(kv) } else { Some(acc) })
        .ok_or_else(|| Error::Argument("ρ_k overflows 64-bit arithmetic".into()))
}

/// Which of the four left/right gap statistics to compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stat {
    /// Gap-weighted count of zeros before position `i`.
    L0,
    /// Gap-weighted count of ones before position `i`.
    L1,
    /// Gap-weighted count of zeros from position `i` on.
    R0,
    /// Gap-weighted count of ones from position `i` on.
    R1,
}

fn gaps(k: &[u64], y_len: usize) -> Result<impl Iterator<Item = u64> + '_> {
    if k.len() != y_len + 1 {
        return Err(Error::Argument(format!("expected |k| = |y| + 1 = {}, got {}", y_len + 1, k.len())));
    }
    if k.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Argument("k must be strictly increasing".into()));
    }
    Ok(k.windows(2).map(|w| w[1] - w[0]))
}

/// `wt_k(y) = Σ y_j (k_{j+1} - k_j)`; the Hamming weight when `k = (1, ..., n)`.
pub fn wt_k(y: &Word, k: &[u64]) -> Result<u64> {
    stat(Stat::R1, 1, y, k)
}

/// Left/right statistic at 1-based position `i in [1, |y| + 1]`, with `|k| = |y| + 1`.
pub fn stat(kind: Stat, i: usize, y: &Word, k: &[u64]) -> Result<u64> {
    let n = y.len() + 1;
    let gaps = gaps(k, y.len())?;
    if i == 0 || i > n {
        return Err(Error::Range { pos: i, lo: 1, hi: n });
    }
    let (want, left) = match kind {
        Stat::L0 => (0, true),
        Stat::L1 => (1, true),
        Stat::R0 => (0, false),
        Stat::R1 => (1, false),
    };
    Ok(y.as_slice()
        .iter()
        .zip(gaps)
        .enumerate()
        .filter(|&(j, (&b, _))| b == want && ((j + 1 < i) == left))
        .map(|(_, (_, g))| g)
        .sum())
}

/// Builds the deletion and reversal function tables for these parameters.
pub fn binding(params: &MonotoneParams) -> (MonotoneDeletion<'_>, MonotoneReversal<'_>) {
    (MonotoneDeletion { params }, MonotoneReversal { params })
}

#[derive(Debug, Clone, Copy)]
pub struct MonotoneDeletion<'a> {
    params: &'a MonotoneParams,
}

impl DeletionBinding for MonotoneDeletion<'_> {
    fn code_length(&self) -> usize {
        self.params.n()
    }

    fn expected_received_length(&self) -> usize {
        self.params.n() - 1
    }

    fn modulus(&self) -> u64 {
        self.params.m
    }

    fn remainder(&self, y: &Word) -> u64 {
        self.params.syndrome(y)
    }

    fn weight(&self, y: &Word) -> u64 {
        y.as_slice()
            .iter()
            .zip(self.params.k.windows(2))
            .map(|(&b, gap)| u64::from(b) * (gap[1] - gap[0]))
            .sum()
    }

    /// `max { j in [n] : R1(j, y) = r }`.
    fn position1(&self, r: u64, y: &Word) -> Option<usize> {
        let k = &self.params.k;
        let bits = y.as_slice();
        let mut right_ones = 0u64;
        if r == 0 {
            return Some(self.params.n());
        }
        for j in (1..self.params.n()).rev() {
            right_ones += u64::from(bits[j - 1]) * (k[j] - k[j - 1]);
            if right_ones == r {
                return Some(j);
            }
            if right_ones > r {
                return None;
            }
        }
        None
    }

    /// `min { j in [n] : L0(j, y) = r - w - k_1 }`.
    fn position2(&self, r: u64, w: u64, y: &Word) -> Option<usize> {
        let k = &self.params.k;
        let target = r.checked_sub(w)?.checked_sub(k[0])?;
        let bits = y.as_slice();
        let mut left_zeros = 0u64;
        for j in 1..=self.params.n() {
            if left_zeros == target {
                return Some(j);
            }
            if left_zeros > target || j == self.params.n() {
                break;
            }
            left_zeros += u64::from(1 - bits[j - 1]) * (k[j] - k[j - 1]);
        }
        None
    }

    fn sequence1(&self, _p: usize) -> Word {
        Word::from_bits_unchecked(vec![0])
    }

    fn sequence2(&self, _p: usize) -> Word {
        Word::from_bits_unchecked(vec![1])
    }

    fn membership(&self, x: &Word) -> bool {
        self.params.is_codeword(x)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct MonotoneReversal<'a> {
    params: &'a MonotoneParams,
}

impl ReversalBinding for MonotoneReversal<'_> {
    fn code_length(&self) -> usize {
        self.params.n()
    }

    fn modulus(&self) -> u64 {
        self.params.m
    }

    fn remainder(&self, y: &Word) -> u64 {
        self.params.syndrome(y)
    }

    /// `min { j in [n] : k_j = min(r, m - r) }`.
    fn position(&self, r: u64, _y: &Word) -> Option<usize> {
        let target = r.min(self.params.m - r);
        self.params.k.binary_search(&target).ok().map(|j| j + 1)
    }

    fn reversed(&self, p: usize, y: &Word) -> Option<Word> {
        y.rev(p).ok()
    }

    fn membership(&self, x: &Word) -> bool {
        self.params.is_codeword(x)
    }
}
