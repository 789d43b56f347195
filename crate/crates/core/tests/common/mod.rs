#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use syncode::Word;

pub fn w(s: &str) -> Word {
    s.parse().unwrap()
}

pub fn all_words(n: usize) -> impl Iterator<Item = Word> {
    (0..1u64 << n).map(move |v| Word::from_index(v, n))
}

pub fn levenshtein_k(n: usize) -> Vec<u64> {
    (1..=n as u64).collect()
}

/// Triangular numbers 1, 3, 6, 10, ...: gaps grow by one at each step.
pub fn gap_growing_k(n: usize) -> Vec<u64> {
    (1..=n as u64).map(|i| i * (i + 1) / 2).collect()
}

/// Strictly increasing sequence with `k_1 in [1, 3]` and gaps in `[1, 4]`.
pub fn random_k(n: usize, seed: u64) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut k = Vec::with_capacity(n);
    let mut cur = rng.gen_range(1..=3u64);
    for _ in 0..n {
        k.push(cur);
        cur += rng.gen_range(1..=4u64);
    }
    k
}

pub const RANDOM_K_SEEDS: [u64; 5] = [11, 23, 37, 41, 59];

/// The k families exercised at length `n`: Levenshtein, gap-growing and
/// five seeded random strictly increasing sequences.
pub fn k_families(n: usize) -> Vec<(String, Vec<u64>)> {
    let mut fams = vec![("levenshtein".to_string(), levenshtein_k(n)), ("gap-growing".to_string(), gap_growing_k(n))];
    for seed in RANDOM_K_SEEDS {
        fams.push((format!("random-{seed}"), random_k(n, seed)));
    }
    fams
}
