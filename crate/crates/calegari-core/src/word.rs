//! Reduced words in a free group of arbitrary rank.
//!
//! A [`Letter`] is a generator `x_k` (k >= 1) or its inverse; a [`Word`] is a
//! freely reduced sequence of letters. Words are immutable values: every
//! operation returns a fresh word and unreduced sequences never escape.
//!
//! Text grammar: whitespace-separated tokens, `xK` for the generator `K` and
//! `XK` for its inverse (`K` a decimal >= 1). The empty string is the identity.
//! The JSON form is an array of signed integers, `+K` for `x_K` and `-K` for
//! `x_K^{-1}`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WordError {
    #[error("generator index must be a positive integer, got {0}")]
    InvalidIndex(i64),
    #[error("unknown token {0:?} in word (expected xK or XK, K >= 1)")]
    UnknownToken(String),
    #[error("generator index {index} exceeds declared rank {rank}")]
    IndexOutOfRank { index: u32, rank: usize },
}

/// One generator occurrence: `x_k` or `x_k^{-1}`, stored as a signed index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(i32);

impl Letter {
    /// Generator `x_index` (`sign = +1`) or its inverse (`sign = -1`).
    pub fn new(index: u32, sign: i32) -> Result<Self, WordError> {
        if index == 0 || index > i32::MAX as u32 {
            return Err(WordError::InvalidIndex(index as i64));
        }
        match sign {
            1 => Ok(Letter(index as i32)),
            -1 => Ok(Letter(-(index as i32))),
            _ => Err(WordError::InvalidIndex(index as i64)),
        }
    }

    /// From the signed JSON convention: `+k` is `x_k`, `-k` is `x_k^{-1}`.
    pub fn from_signed(v: i32) -> Result<Self, WordError> {
        if v == 0 || v == i32::MIN {
            return Err(WordError::InvalidIndex(v as i64));
        }
        Ok(Letter(v))
    }

    pub fn generator(index: u32) -> Self {
        Letter::new(index, 1).expect("valid generator index")
    }

    pub fn index(self) -> u32 {
        self.0.unsigned_abs()
    }

    /// `+1` for `x_k`, `-1` for `x_k^{-1}`.
    pub fn sign(self) -> i32 {
        self.0.signum()
    }

    pub fn inverse(self) -> Self {
        Letter(-self.0)
    }

    pub fn signed(self) -> i32 {
        self.0
    }
}

/// A freely reduced word; the empty word is the group identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity() -> Self {
        Word { letters: Vec::new() }
    }

    /// The one-letter word `x_index`.
    pub fn generator(index: u32) -> Self {
        Word { letters: alloc::vec![Letter::generator(index)] }
    }

    /// Free reduction of an arbitrary letter sequence.
    pub fn reduce(raw: impl IntoIterator<Item = Letter>) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in raw {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word { letters: out }
    }

    /// Reduce a signed-integer sequence (the JSON convention).
    pub fn from_signed(raw: &[i32]) -> Result<Self, WordError> {
        let letters = raw
            .iter()
            .map(|&v| Letter::from_signed(v))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Word::reduce(letters))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn signed(&self) -> Vec<i32> {
        self.letters.iter().map(|l| l.signed()).collect()
    }

    /// Largest generator index occurring in the word (0 for the identity).
    pub fn max_index(&self) -> u32 {
        self.letters.iter().map(|l| l.index()).max().unwrap_or(0)
    }

    /// Reduced product `self * other`.
    pub fn multiply(&self, other: &Word) -> Word {
        let mut out = self.letters.clone();
        for &l in &other.letters {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word { letters: out }
    }

    /// Reversed sequence with flipped signs; reduced by construction.
    pub fn inverse(&self) -> Word {
        Word { letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    /// Signed count of occurrences of `x_index`.
    pub fn exponent_sum(&self, index: u32) -> i64 {
        self.letters
            .iter()
            .filter(|l| l.index() == index)
            .map(|l| l.sign() as i64)
            .sum()
    }

    /// Commutator `[self, other] = self other self^{-1} other^{-1}`.
    pub fn commutator(&self, other: &Word) -> Word {
        self.multiply(other).multiply(&self.inverse()).multiply(&other.inverse())
    }

    /// Strip matching first/last letters: the cyclically reduced core.
    pub fn cyclically_reduced(&self) -> Word {
        let mut lo = 0;
        let mut hi = self.letters.len();
        while hi - lo >= 2 && self.letters[lo] == self.letters[hi - 1].inverse() {
            lo += 1;
            hi -= 1;
        }
        Word { letters: self.letters[lo..hi].to_vec() }
    }

    /// Rotation by `by` positions: `w[by..] w[..by]`. Only meaningful on
    /// cyclically reduced words, where the result stays reduced.
    pub fn rotated(&self, by: usize) -> Word {
        if self.letters.is_empty() {
            return self.clone();
        }
        let by = by % self.letters.len();
        let mut out = Vec::with_capacity(self.letters.len());
        out.extend_from_slice(&self.letters[by..]);
        out.extend_from_slice(&self.letters[..by]);
        Word::reduce(out)
    }

    /// Least representative of the cyclic class of `self` and its inverse,
    /// comparing signed-integer sequences lexicographically.
    pub fn dihedral_canonical(&self) -> Word {
        let core = self.cyclically_reduced();
        if core.is_empty() {
            return core;
        }
        let mut best: Option<Word> = None;
        for w in [&core, &core.inverse()] {
            for k in 0..w.letters.len() {
                let rot = w.rotated(k);
                if best.as_ref().is_none_or(|b| rot < *b) {
                    best = Some(rot);
                }
            }
        }
        best.expect("nonempty cyclic class")
    }

    /// Parse, then check every index against a declared rank.
    pub fn parse_in_rank(text: &str, rank: usize) -> Result<Self, WordError> {
        let w: Word = text.parse()?;
        if w.max_index() as usize > rank {
            return Err(WordError::IndexOutOfRank { index: w.max_index(), rank });
        }
        Ok(w)
    }
}

impl FromStr for Word {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            let (sign, digits) = match tok.split_at(1) {
                ("x", d) => (1, d),
                ("X", d) => (-1, d),
                _ => return Err(WordError::UnknownToken(String::from(tok))),
            };
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(WordError::UnknownToken(String::from(tok)));
            }
            let index: u32 = digits
                .parse()
                .map_err(|_| WordError::UnknownToken(String::from(tok)))?;
            letters.push(Letter::new(index, sign)?);
        }
        Ok(Word::reduce(letters))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            let c = if l.sign() > 0 { 'x' } else { 'X' };
            write!(f, "{}{}", c, l.index())?;
        }
        Ok(())
    }
}

#[cfg(feature = "serde")]
mod serde_impls {
    use super::*;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    impl Serialize for Word {
        fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
            serializer.collect_seq(self.letters.iter().map(|l| l.signed()))
        }
    }

    impl<'de> Deserialize<'de> for Word {
        fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
            let raw = Vec::<i32>::deserialize(deserializer)?;
            Word::from_signed(&raw).map_err(D::Error::custom)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn reduce_cancels_to_identity() {
        let raw = [Letter::generator(1), Letter::generator(1).inverse()];
        assert!(Word::reduce(raw).is_empty());
    }

    #[test]
    fn reduce_cancels_inner_pair() {
        let got = Word::from_signed(&[1, 2, -2, 1]).unwrap();
        assert_eq!(got.signed(), [1, 1]);
    }

    #[test]
    fn reduce_rejects_zero_index() {
        assert!(matches!(Word::from_signed(&[1, 0]), Err(WordError::InvalidIndex(0))));
    }

    #[test]
    fn multiply_identities() {
        let u = w("x1 X2 x3");
        assert_eq!(Word::identity().multiply(&u), u);
        assert!(u.multiply(&u.inverse()).is_empty());
    }

    #[test]
    fn invert_is_reverse_flip() {
        assert_eq!(w("x1 X2").inverse(), w("x2 X1"));
        let u = w("x1 x1 X2 x3");
        assert_eq!(u.inverse().inverse(), u);
    }

    #[test]
    fn exponent_sums() {
        assert_eq!(w("x1 x1").exponent_sum(1), 2);
        assert_eq!(Word::from_signed(&[1, -1]).unwrap().exponent_sum(1), 0);
        assert_eq!(w("x1 X2 x1").exponent_sum(2), -1);
    }

    #[test]
    fn parse_format_round_trip() {
        assert_eq!(w("x1 X2").signed(), [1, -2]);
        assert!(w("").is_empty());
        assert!(w("x1 X1").is_empty());
        let u = w("x3 X1 x2");
        assert_eq!(u.to_string().parse::<Word>().unwrap(), u);
        assert_eq!(Word::identity().to_string(), "");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("y1".parse::<Word>().is_err());
        assert!("x".parse::<Word>().is_err());
        assert!("x0".parse::<Word>().is_err());
        assert!("x1b".parse::<Word>().is_err());
        assert!(Word::parse_in_rank("x3", 2).is_err());
        assert!(Word::parse_in_rank("x2", 2).is_ok());
    }

    #[test]
    fn cyclic_reduction_strips_conjugation() {
        assert_eq!(w("x1 x2 X1").cyclically_reduced(), w("x2"));
        assert_eq!(w("x1 x2 x1 X2 X1 X1").cyclically_reduced().len(), 2);
        assert!(w("").cyclically_reduced().is_empty());
        // already cyclically reduced words are untouched
        let u = w("x1 x2 X1 X2");
        assert_eq!(u.cyclically_reduced(), u);
    }

    #[test]
    fn dihedral_canonical_identifies_rotations_and_inverse() {
        let u = w("x1 x2 X1 x3");
        for k in 0..4 {
            assert_eq!(u.rotated(k).dihedral_canonical(), u.dihedral_canonical());
        }
        assert_eq!(u.inverse().dihedral_canonical(), u.dihedral_canonical());
    }

    #[test]
    fn commutator_of_generators() {
        let c = Word::generator(1).commutator(&Word::generator(2));
        assert_eq!(c.signed(), [1, 2, -1, -2]);
    }
}
