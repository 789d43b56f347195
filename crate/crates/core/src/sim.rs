//! Seeded channel simulator: uniform single errors and random codewords.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::code::{CodeParams, ErrorClass};
use crate::words::Word;

/// Deterministic error injector backed by ChaCha8, so a seed reproduces the
/// same sequence on every platform.
#[derive(Debug, Clone)]
pub struct Channel {
    rng: ChaCha8Rng,
}

impl Channel {
    pub fn new(seed: u64) -> Self {
        Channel { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn random_word(&mut self, n: usize) -> Word {
        Word::from_bits_unchecked((0..n).map(|_| self.rng.gen_range(0..=1u8)).collect())
    }

    /// Applies one error of `class` at a uniformly chosen valid position.
    /// Returns `None` if the class has no valid position on `x`.
    pub fn corrupt(&mut self, x: &Word, class: ErrorClass) -> Option<(Word, usize)> {
        let positions = class.valid_positions(x);
        let &i = positions.choose(&mut self.rng)?;
        Some((class.apply(x, i).expect("valid position"), i))
    }

    /// Samples `x` uniformly from `B^n` (non-constant for azinv codes) and
    /// returns it with `template`'s parameters re-targeted so that `x` is a codeword.
    pub fn random_codeword(&mut self, template: &CodeParams) -> (Word, CodeParams) {
        let n = template.n();
        loop {
            let x = self.random_word(n);
            if matches!(template, CodeParams::Azinv(_)) && x.is_constant() {
                continue;
            }
            let params = template.with_residue_of(&x);
            debug_assert!(params.is_codeword(&x));
            return (x, params);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::azinv::AzinvParams;

    #[test]
    fn same_seed_same_errors() {
        let x: Word = "0101101001".parse().unwrap();
        let mut a = Channel::new(7);
        let mut b = Channel::new(7);
        for class in ErrorClass::ALL {
            assert_eq!(a.corrupt(&x, class), b.corrupt(&x, class));
        }
    }

    #[test]
    fn corruption_uses_valid_positions() {
        let mut ch = Channel::new(1);
        let x: Word = "0011".parse().unwrap();
        for _ in 0..50 {
            let (y, i) = ch.corrupt(&x, ErrorClass::Bad).unwrap();
            assert_eq!(i, 2);
            assert_eq!(y, "01".parse().unwrap());
        }
        assert_eq!(ch.corrupt(&Word::zeros(4), ErrorClass::Bar), None);
        assert_eq!(ch.corrupt(&Word::empty(), ErrorClass::Del), None);
    }

    #[test]
    fn random_codewords_are_members() {
        let mut ch = Channel::new(3);
        let template: CodeParams = AzinvParams::new(9, 16, 0).unwrap().into();
        for _ in 0..100 {
            let (x, p) = ch.random_codeword(&template);
            assert!(p.is_codeword(&x));
            assert!(!x.is_constant());
        }
    }
}
