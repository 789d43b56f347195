//! Binary words and the channel/repair maps shared by both code families.
//!
//! Every position taken or returned here is 1-based.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An immutable binary sequence. The empty word is a legal value.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn zeros(n: usize) -> Self {
        Word(vec![0; n])
    }

    pub fn ones(n: usize) -> Self {
        Word(vec![1; n])
    }

    /// Builds a word from symbols, rejecting anything other than 0 and 1.
    pub fn from_bits(bits: Vec<u8>) -> Result<Self> {
        if let Some(&bad) = bits.iter().find(|&&b| b > 1) {
            return Err(Error::Parse(char::from(b'0'.wrapping_add(bad))));
        }
        Ok(Word(bits))
    }

    /// The length-`n` word whose symbols are the binary digits of `value`,
    /// most significant first. Numeric order of `value` matches lexicographic
    /// order of the words.
    pub fn from_index(value: u64, n: usize) -> Self {
        debug_assert!(n <= 64);
        Word((0..n).map(|i| ((value >> (n - 1 - i)) & 1) as u8).collect())
    }

    pub(crate) fn from_bits_unchecked(bits: Vec<u8>) -> Self {
        debug_assert!(bits.iter().all(|&b| b <= 1));
        Word(bits)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.0
    }

    pub fn into_bits(self) -> Vec<u8> {
        self.0
    }

    /// Symbol at 1-based position `i`.
    pub fn get(&self, i: usize) -> Option<u8> {
        i.checked_sub(1).and_then(|j| self.0.get(j).copied())
    }

    /// Hamming weight.
    pub fn weight(&self) -> u64 {
        self.0.iter().map(|&b| u64::from(b)).sum()
    }

    /// True for the all-zero and all-one words (including ε and single symbols).
    pub fn is_constant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }

    fn check(&self, i: usize, lo: usize, hi: usize) -> Result<()> {
        if i < lo || i > hi {
            Err(Error::Range { pos: i, lo, hi })
        } else {
            Ok(())
        }
    }

    /// `del_i`: removes the `i`-th symbol.
    pub fn del(&self, i: usize) -> Result<Word> {
        self.check(i, 1, self.len())?;
        let mut bits = Vec::with_capacity(self.len() - 1);
        bits.extend_from_slice(&self.0[..i - 1]);
        bits.extend_from_slice(&self.0[i..]);
        Ok(Word(bits))
    }

    /// `ins_{i,b}`: places `b` so that its first symbol lands at position `i`.
    pub fn ins(&self, i: usize, b: &Word) -> Result<Word> {
        if b.is_empty() {
            return Err(Error::Argument("inserted word must be non-empty".into()));
        }
        self.check(i, 1, self.len() + 1)?;
        let mut bits = Vec::with_capacity(self.len() + b.len());
        bits.extend_from_slice(&self.0[..i - 1]);
        bits.extend_from_slice(&b.0);
        bits.extend_from_slice(&self.0[i - 1..]);
        Ok(Word(bits))
    }

    /// `rev_i`: complements the `i`-th symbol.
    pub fn rev(&self, i: usize) -> Result<Word> {
        self.check(i, 1, self.len())?;
        let mut bits = self.0.clone();
        bits[i - 1] ^= 1;
        Ok(Word(bits))
    }

    fn check_balanced(&self, i: usize) -> Result<()> {
        self.check(i, 1, self.len().saturating_sub(1))?;
        if self.0[i - 1] == self.0[i] {
            return Err(Error::Domain { pos: i });
        }
        Ok(())
    }

    /// Whether a balanced adjacent error (BAD/BAR) is defined at `i`.
    pub fn is_balanced_at(&self, i: usize) -> bool {
        self.check_balanced(i).is_ok()
    }

    /// Balanced adjacent deletion: removes symbols `i` and `i+1`, which must differ.
    pub fn bad(&self, i: usize) -> Result<Word> {
        self.check_balanced(i)?;
        let mut bits = Vec::with_capacity(self.len() - 2);
        bits.extend_from_slice(&self.0[..i - 1]);
        bits.extend_from_slice(&self.0[i + 1..]);
        Ok(Word(bits))
    }

    /// Balanced adjacent reversal: complements (equivalently swaps) symbols
    /// `i` and `i+1`, which must differ.
    pub fn bar(&self, i: usize) -> Result<Word> {
        self.check_balanced(i)?;
        let mut bits = self.0.clone();
        bits.swap(i - 1, i);
        Ok(Word(bits))
    }

    /// Complements every symbol at an even (1-based) position.
    pub fn tilde(&self) -> Word {
        Word(
            self.0
                .iter()
                .enumerate()
                .map(|(j, &b)| if j % 2 == 1 { b ^ 1 } else { b })
                .collect(),
        )
    }

    /// `y_i y_{i+1} ... y_j`; empty whenever `i > j`.
    pub fn subrange(&self, i: usize, j: usize) -> Result<Word> {
        if i == 0 {
            return Err(Error::Range { pos: i, lo: 1, hi: self.len() });
        }
        if i > j {
            return Ok(Word::empty());
        }
        self.check(j, 1, self.len())?;
        Ok(Word(self.0[i - 1..j].to_vec()))
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                other => Err(Error::Parse(other)),
            })
            .collect::<Result<Vec<u8>>>()
            .map(Word)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.0.iter().map(|&b| if b == 0 { '0' } else { '1' }).collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            f.write_str("Word(ε)")
        } else {
            write!(f, "Word({self})")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn all_words(max_len: usize) -> impl Iterator<Item = Word> {
        (0..=max_len).flat_map(|n| (0..1u64 << n).map(move |v| Word::from_index(v, n)))
    }

    #[test]
    fn deletion_examples() {
        assert_eq!(w("1001").del(2).unwrap(), w("101"));
        assert_eq!(w("1").del(1).unwrap(), Word::empty());
        // all four deletions of 1001, by hand: 001, 101, 101, 100
        let expected = ["001", "101", "101", "100"];
        for (i, e) in expected.iter().enumerate() {
            assert_eq!(w("1001").del(i + 1).unwrap(), w(e));
        }
        assert_eq!(w("1001").del(3).unwrap(), w("101"));
        assert!(matches!(w("1001").del(0), Err(Error::Range { .. })));
        assert!(matches!(w("1001").del(5), Err(Error::Range { .. })));
        assert!(Word::empty().del(1).is_err());
    }

    #[test]
    fn insertion_examples() {
        assert_eq!(w("101").ins(3, &w("0")).unwrap(), w("1001"));
        assert_eq!(w("101").ins(4, &w("10")).unwrap(), w("10110"));
        assert_eq!(Word::empty().ins(1, &w("1")).unwrap(), w("1"));
        assert!(matches!(w("101").ins(1, &Word::empty()), Err(Error::Argument(_))));
        assert!(matches!(w("101").ins(5, &w("1")), Err(Error::Range { .. })));
    }

    #[test]
    fn reversal_examples() {
        assert_eq!(w("111110").rev(3).unwrap(), w("110110"));
        assert_eq!(w("0").rev(1).unwrap(), w("1"));
        assert!(w("0").rev(2).is_err());
    }

    #[test]
    fn balanced_adjacent_maps() {
        assert_eq!(w("10110").bad(4).unwrap(), w("101"));
        assert_eq!(w("1001").bad(2), Err(Error::Domain { pos: 2 }));
        assert_eq!(w("01").bad(1).unwrap(), Word::empty());
        assert_eq!(w("010000").bar(1).unwrap(), w("100000"));
        assert_eq!(w("00").bar(1), Err(Error::Domain { pos: 1 }));
        assert!(matches!(w("01").bar(2), Err(Error::Range { .. })));
        assert!(matches!(w("0").bad(1), Err(Error::Range { .. })));
    }

    #[test]
    fn tilde_and_subrange() {
        assert_eq!(w("101").tilde(), w("111"));
        assert_eq!(Word::empty().tilde(), Word::empty());
        assert_eq!(w("1010").tilde(), w("1111"));

        let y = w("10110");
        assert_eq!(y.subrange(3, 5).unwrap(), w("110"));
        assert_eq!(y.subrange(4, 3).unwrap(), Word::empty());
        assert_eq!(w("101").subrange(1, 3).unwrap(), w("101"));
        assert!(y.subrange(0, 2).is_err());
        assert!(y.subrange(2, 6).is_err());
    }

    #[test]
    fn text_form() {
        assert_eq!("".parse::<Word>().unwrap(), Word::empty());
        assert_eq!(w("0110").to_string(), "0110");
        assert_eq!("01x".parse::<Word>(), Err(Error::Parse('x')));
        assert!(Word::from_bits(vec![0, 2]).is_err());
        assert_eq!(Word::from_index(0b1001, 4), w("1001"));
    }

    #[test]
    fn map_identities_exhaustive() {
        for x in all_words(12) {
            let n = x.len();
            assert_eq!(x.tilde().tilde(), x);
            for i in 1..=n {
                let xi = Word::from_bits_unchecked(vec![x.get(i).unwrap()]);
                assert_eq!(x.del(i).unwrap().ins(i, &xi).unwrap(), x);
                assert_eq!(x.rev(i).unwrap().rev(i).unwrap(), x);
            }
            for i in 1..=n + 1 {
                for b in [w("0"), w("1")] {
                    assert_eq!(x.ins(i, &b).unwrap().del(i).unwrap(), x);
                }
            }
            for i in 1..n {
                match x.bad(i) {
                    Ok(y) => {
                        assert_eq!(y, x.del(i).unwrap().del(i).unwrap());
                        assert_eq!(x.bar(i).unwrap().bar(i).unwrap(), x);
                    }
                    Err(e) => {
                        assert_eq!(e, Error::Domain { pos: i });
                        assert!(x.bar(i).is_err());
                    }
                }
            }
        }
    }
}
