use std::fmt;
use std::ops::{BitXor, BitXorAssign};
use std::str::FromStr;

use crate::Error;

/// A vector over GF(2) of length at most 64.
///
/// Coordinate `i` (0-based) lives in bit `i` of the backing word. The text
/// form is leftmost-first: the first character is coordinate 0.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct BitVector {
    bits: u64,
    len: u8,
}

impl BitVector {
    pub const MAX_LEN: usize = 64;

    pub fn zeros(len: usize) -> Self {
        assert!(
            len <= Self::MAX_LEN,
            "bit vectors hold at most 64 coordinates"
        );
        BitVector {
            bits: 0,
            len: len as u8,
        }
    }

    /// Wraps a packed word. Bits at or above `len` must be clear.
    pub fn from_bits(bits: u64, len: usize) -> Result<Self, Error> {
        if len > Self::MAX_LEN {
            return Err(Error::TooLong {
                len,
                max: Self::MAX_LEN,
            });
        }
        if bits & !mask(len) != 0 {
            return Err(Error::Parse(format!(
                "word {bits:#x} has bits beyond length {len}"
            )));
        }
        Ok(BitVector {
            bits,
            len: len as u8,
        })
    }

    pub(crate) fn from_bits_unchecked(bits: u64, len: usize) -> Self {
        debug_assert!(len <= Self::MAX_LEN && bits & !mask(len) == 0);
        BitVector {
            bits,
            len: len as u8,
        }
    }

    /// Unit vector with a single one at `i`.
    pub fn unit(i: usize, len: usize) -> Self {
        assert!(i < len);
        BitVector::from_bits_unchecked(1 << i, len)
    }

    pub fn from_positions(positions: &[usize], len: usize) -> Self {
        let mut v = BitVector::zeros(len);
        for &p in positions {
            v.flip(p);
        }
        v
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(
            i < self.len(),
            "index {i} out of range for length {}",
            self.len
        );
        self.bits >> i & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(
            i < self.len(),
            "index {i} out of range for length {}",
            self.len
        );
        if value {
            self.bits |= 1 << i;
        } else {
            self.bits &= !(1 << i);
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(
            i < self.len(),
            "index {i} out of range for length {}",
            self.len
        );
        self.bits ^= 1 << i;
    }

    /// Hamming weight.
    #[inline]
    pub fn weight(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    /// Standard inner product over GF(2).
    #[inline]
    pub fn dot(&self, other: &BitVector) -> bool {
        (self.bits & other.bits).count_ones() & 1 == 1
    }

    pub fn distance(&self, other: &BitVector) -> usize {
        (*self ^ *other).weight()
    }

    /// Positions of the ones, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        let mut rest = self.bits;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i)
        })
    }

    pub fn try_add(&self, other: &BitVector) -> Result<BitVector, Error> {
        if self.len != other.len {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(BitVector::from_bits_unchecked(
            self.bits ^ other.bits,
            self.len(),
        ))
    }

    /// Text form with a space after every `group` characters.
    pub fn to_grouped_string(&self, group: usize) -> String {
        let mut s = String::with_capacity(self.len() + self.len() / group.max(1));
        for i in 0..self.len() {
            if i > 0 && group > 0 && i % group == 0 {
                s.push(' ');
            }
            s.push(if self.get(i) { '1' } else { '0' });
        }
        s
    }
}

#[inline]
pub(crate) fn mask(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

impl BitXor for BitVector {
    type Output = BitVector;

    /// Panics on a length mismatch; see [`BitVector::try_add`].
    fn bitxor(self, rhs: BitVector) -> BitVector {
        assert_eq!(self.len, rhs.len, "length mismatch in bit vector sum");
        BitVector::from_bits_unchecked(self.bits ^ rhs.bits, self.len())
    }
}

impl BitXorAssign for BitVector {
    fn bitxor_assign(&mut self, rhs: BitVector) {
        *self = *self ^ rhs;
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_grouped_string(0))
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({})", self.to_grouped_string(4))
    }
}

/// Parses `0`/`1` characters, ignoring whitespace.
impl FromStr for BitVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut bits = 0u64;
        let mut len = 0usize;
        for c in s.chars().filter(|c| !c.is_whitespace()) {
            let bit = match c {
                '0' => 0,
                '1' => 1,
                other => return Err(Error::Parse(format!("invalid bit {other:?}"))),
            };
            if len == Self::MAX_LEN {
                return Err(Error::TooLong {
                    len: len + 1,
                    max: Self::MAX_LEN,
                });
            }
            bits |= bit << len;
            len += 1;
        }
        Ok(BitVector::from_bits_unchecked(bits, len))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_and_format() {
        let v: BitVector = "1000 0100 0010".parse().unwrap();
        assert_eq!(v.len(), 12);
        assert!(v.get(0) && v.get(5) && v.get(10));
        assert_eq!(v.weight(), 3);
        assert_eq!(v.to_string(), "100001000010");
        assert_eq!(v.to_grouped_string(4), "1000 0100 0010");
        assert_eq!(v.ones().collect::<Vec<_>>(), vec![0, 5, 10]);
        assert!("10a".parse::<BitVector>().is_err());
        assert!("1".repeat(65).parse::<BitVector>().is_err());
    }

    #[test]
    fn full_width_vectors() {
        let v: BitVector = "1".repeat(64).parse().unwrap();
        assert_eq!(v.weight(), 64);
        assert!(BitVector::from_bits(u64::MAX, 64).is_ok());
        assert!(BitVector::from_bits(0b100, 2).is_err());
    }

    #[test]
    fn mismatched_lengths() {
        let a = BitVector::zeros(3);
        let b = BitVector::zeros(4);
        assert!(a.try_add(&b).is_err());
    }

    proptest! {
        #[test]
        fn self_sum_is_zero(bits in any::<u64>(), len in 0usize..=64) {
            let v = BitVector::from_bits(bits & mask(len), len).unwrap();
            prop_assert_eq!((v ^ v).weight(), 0);
            prop_assert_eq!(v.to_string().parse::<BitVector>().unwrap(), v);
        }
    }
}
