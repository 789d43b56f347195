//! Brute-force ground truth: codebook enumeration, error balls, ball
//! disjointness and a ball-intersection decoder.
//!
//! Everything here is exponential in `n` and guarded by an enumeration limit.

use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;

use crate::code::{CodeParams, ErrorClass};
use crate::error::{Error, Result};
use crate::words::Word;

/// Largest block length enumerated unless the caller overrides it.
pub const DEFAULT_GUARD: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Codebook {
    params: CodeParams,
    words: Vec<Word>,
}

impl Codebook {
    pub fn params(&self) -> &CodeParams {
        &self.params
    }

    /// Codewords in strictly ascending lexicographic order.
    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, x: &Word) -> bool {
        self.words.binary_search(x).is_ok()
    }

    /// Every codeword whose error ball (or identity, at equal length) contains `y`.
    pub fn preimages(&self, y: &Word, class: ErrorClass) -> Vec<Word> {
        self.words
            .iter()
            .filter(|x| *x == y || (x.len() == y.len() + class.length_drop() && error_ball(x, class).contains(y)))
            .cloned()
            .collect()
    }

    pub fn oracle_decode(&self, y: &Word, class: ErrorClass) -> OracleVerdict {
        OracleVerdict::from_candidates(self.preimages(y, class))
    }

    /// Precomputes every codeword's closed ball for repeated lookups.
    pub fn ball_index(&self, class: ErrorClass) -> BallIndex {
        let mut owners: HashMap<Word, Vec<Word>> = HashMap::new();
        for x in &self.words {
            owners.entry(x.clone()).or_default().push(x.clone());
            for image in error_ball(x, class) {
                if image != *x {
                    owners.entry(image).or_default().push(x.clone());
                }
            }
        }
        for list in owners.values_mut() {
            list.sort();
            list.dedup();
        }
        BallIndex { class, owners }
    }

    /// Checks that the error balls of distinct codewords never meet. For
    /// same-length classes the balls are closed (they include the codeword
    /// itself), so a codeword one error away from another also counts.
    pub fn certify(&self, class: ErrorClass) -> BallReport {
        let mut owner: HashMap<Word, usize> = HashMap::new();
        for (idx, x) in self.words.iter().enumerate() {
            let mut ball = error_ball(x, class);
            if class.is_reversal() {
                ball.insert(x.clone());
            }
            for image in ball {
                if let Some(&prev) = owner.get(&image) {
                    let witness = Witness { first: self.words[prev].clone(), second: x.clone(), image };
                    return BallReport { error_class: class, disjoint: false, witness: Some(witness) };
                }
                owner.insert(image, idx);
            }
        }
        BallReport { error_class: class, disjoint: true, witness: None }
    }
}

/// Two distinct codewords whose balls share `image`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub first: Word,
    pub second: Word,
    pub image: Word,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BallReport {
    pub error_class: ErrorClass,
    pub disjoint: bool,
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleVerdict {
    Unique(Word),
    Ambiguous(Vec<Word>),
    NoPreimage,
}

impl OracleVerdict {
    fn from_candidates(mut found: Vec<Word>) -> Self {
        match found.len() {
            0 => OracleVerdict::NoPreimage,
            1 => OracleVerdict::Unique(found.pop().unwrap()),
            _ => OracleVerdict::Ambiguous(found),
        }
    }
}

/// Map from each received word to the codewords that can produce it.
/// Lookups agree with [`Codebook::oracle_decode`].
#[derive(Debug, Clone)]
pub struct BallIndex {
    class: ErrorClass,
    owners: HashMap<Word, Vec<Word>>,
}

impl BallIndex {
    pub fn class(&self) -> ErrorClass {
        self.class
    }

    pub fn verdict(&self, y: &Word) -> OracleVerdict {
        OracleVerdict::from_candidates(self.owners.get(y).cloned().unwrap_or_default())
    }

    /// Received words reachable from at least one codeword, sorted.
    pub fn images(&self) -> Vec<&Word> {
        let mut all: Vec<&Word> = self.owners.keys().collect();
        all.sort();
        all
    }
}

pub fn enumerate(params: &CodeParams) -> Result<Codebook> {
    enumerate_with_guard(params, DEFAULT_GUARD)
}

/// Scans all of `B^n` for codewords. Fails if `n > guard`.
pub fn enumerate_with_guard(params: &CodeParams, guard: usize) -> Result<Codebook> {
    let n = params.n();
    if n > guard || n >= 64 {
        return Err(Error::Resource { n, limit: guard.min(63) });
    }
    let words = (0..1u64 << n)
        .into_par_iter()
        .map(|v| Word::from_index(v, n))
        .filter(|x| params.is_codeword(x))
        .collect();
    Ok(Codebook { params: params.clone(), words })
}

/// All images of `x` under one error of `class`, deduplicated.
pub fn error_ball(x: &Word, class: ErrorClass) -> BTreeSet<Word> {
    class
        .valid_positions(x)
        .into_iter()
        .map(|i| class.apply(x, i).expect("valid position"))
        .collect()
}

pub fn certify(params: &CodeParams, class: ErrorClass) -> Result<BallReport> {
    Ok(enumerate(params)?.certify(class))
}

pub fn oracle_decode(y: &Word, params: &CodeParams, class: ErrorClass) -> Result<OracleVerdict> {
    Ok(enumerate(params)?.oracle_decode(y, class))
}
