//! Arithmetic in GF(4) = {0, 1, ω, ω̄} with ω̄ = ω² = ω + 1.
//!
//! Elements are stored as 2-bit patterns: `0 ↦ 00`, `1 ↦ 01`, `ω ↦ 10`,
//! `ω̄ ↦ 11`. With this encoding addition is XOR and the multiplicative
//! group {1, ω, ω̄} is cyclic of order 3.
//!
//! ```text
//!  + | 0 1 w W        × | 0 1 w W
//! ---+---------      ---+---------
//!  0 | 0 1 w W        0 | 0 0 0 0
//!  1 | 1 0 W w        1 | 0 1 w W
//!  w | w W 0 1        w | 0 w W 1
//!  W | W w 1 0        W | 0 W 1 w
//! ```
//!
//! The text form uses `0`, `1`, `w` (ω) and `W` (ω̄).

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Deref, Mul, MulAssign};
use std::str::FromStr;

use crate::Error;

/// An element of GF(4).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(u8)]
pub enum Gf4 {
    #[default]
    Zero = 0,
    One = 1,
    /// ω, a root of x² + x + 1.
    Omega = 2,
    /// ω̄ = ω² = ω + 1.
    OmegaBar = 3,
}

const MUL_TABLE: [u8; 16] = [
    0, 0, 0, 0, //
    0, 1, 2, 3, //
    0, 2, 3, 1, //
    0, 3, 1, 2, //
];

impl Gf4 {
    pub const ALL: [Gf4; 4] = [Gf4::Zero, Gf4::One, Gf4::Omega, Gf4::OmegaBar];
    pub const NONZERO: [Gf4; 3] = [Gf4::One, Gf4::Omega, Gf4::OmegaBar];

    /// Builds an element from the low two bits of `bits`.
    #[inline]
    pub const fn from_bits(bits: u8) -> Self {
        match bits & 0b11 {
            0 => Gf4::Zero,
            1 => Gf4::One,
            2 => Gf4::Omega,
            _ => Gf4::OmegaBar,
        }
    }

    #[inline]
    pub const fn bits(self) -> u8 {
        self as u8
    }

    #[inline]
    pub const fn is_zero(self) -> bool {
        matches!(self, Gf4::Zero)
    }

    /// Conjugation ā = a². Fixes 0 and 1, swaps ω and ω̄.
    #[inline]
    pub const fn conj(self) -> Self {
        match self {
            Gf4::Omega => Gf4::OmegaBar,
            Gf4::OmegaBar => Gf4::Omega,
            other => other,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub const fn inv(self) -> Option<Self> {
        match self {
            Gf4::Zero => None,
            // a⁻¹ = a² for a in the cyclic group of order 3
            other => Some(other.conj()),
        }
    }

    pub const fn symbol(self) -> char {
        match self {
            Gf4::Zero => '0',
            Gf4::One => '1',
            Gf4::Omega => 'w',
            Gf4::OmegaBar => 'W',
        }
    }

    pub fn from_symbol(c: char) -> Result<Self, Error> {
        match c {
            '0' => Ok(Gf4::Zero),
            '1' => Ok(Gf4::One),
            'w' => Ok(Gf4::Omega),
            'W' => Ok(Gf4::OmegaBar),
            other => Err(Error::Parse(format!("invalid GF(4) symbol {other:?}"))),
        }
    }
}

impl Add for Gf4 {
    type Output = Gf4;
    #[inline]
    // Characteristic 2: addition is XOR of the bit pairs.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Gf4) -> Gf4 {
        Gf4::from_bits(self.bits() ^ rhs.bits())
    }
}

impl AddAssign for Gf4 {
    #[inline]
    fn add_assign(&mut self, rhs: Gf4) {
        *self = *self + rhs;
    }
}

impl Mul for Gf4 {
    type Output = Gf4;
    #[inline]
    fn mul(self, rhs: Gf4) -> Gf4 {
        Gf4::from_bits(MUL_TABLE[((self.bits() << 2) | rhs.bits()) as usize])
    }
}

impl MulAssign for Gf4 {
    #[inline]
    fn mul_assign(&mut self, rhs: Gf4) {
        *self = *self * rhs;
    }
}

impl Sum for Gf4 {
    fn sum<I: Iterator<Item = Gf4>>(iter: I) -> Gf4 {
        iter.fold(Gf4::Zero, Add::add)
    }
}

impl fmt::Display for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut buf = [0; 4];
        f.pad(self.symbol().encode_utf8(&mut buf))
    }
}

impl FromStr for Gf4 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut chars = s.trim().chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) => Gf4::from_symbol(c),
            _ => Err(Error::Parse(format!(
                "expected one GF(4) symbol, got {s:?}"
            ))),
        }
    }
}

pub fn add(a: Gf4, b: Gf4) -> Gf4 {
    a + b
}

pub fn mul(a: Gf4, b: Gf4) -> Gf4 {
    a * b
}

pub fn conj(a: Gf4) -> Gf4 {
    a.conj()
}

/// A vector over GF(4).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Gf4Vector(Vec<Gf4>);

impl Gf4Vector {
    pub fn new(entries: Vec<Gf4>) -> Self {
        Gf4Vector(entries)
    }

    pub fn zeros(len: usize) -> Self {
        Gf4Vector(vec![Gf4::Zero; len])
    }

    /// Number of nonzero entries.
    pub fn weight(&self) -> usize {
        self.0.iter().filter(|a| !a.is_zero()).count()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|a| a.is_zero())
    }

    pub fn set(&mut self, i: usize, value: Gf4) {
        self.0[i] = value;
    }

    pub fn into_inner(self) -> Vec<Gf4> {
        self.0
    }

    fn check_len(&self, other: &Gf4Vector) -> Result<(), Error> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(())
    }

    /// Componentwise sum.
    pub fn try_add(&self, other: &Gf4Vector) -> Result<Gf4Vector, Error> {
        self.check_len(other)?;
        Ok(self.0.iter().zip(&other.0).map(|(&a, &b)| a + b).collect())
    }

    pub fn scale(&self, c: Gf4) -> Gf4Vector {
        self.0.iter().map(|&a| c * a).collect()
    }

    /// Hermitian form ⟨x, y⟩ = Σ xᵢ·ȳᵢ.
    pub fn hermitian_inner(&self, other: &Gf4Vector) -> Result<Gf4, Error> {
        self.check_len(other)?;
        Ok(self
            .0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| a * b.conj())
            .sum())
    }

    /// Plain bilinear form Σ xᵢ·yᵢ.
    pub fn dot(&self, other: &Gf4Vector) -> Result<Gf4, Error> {
        self.check_len(other)?;
        Ok(self.0.iter().zip(&other.0).map(|(&a, &b)| a * b).sum())
    }

    /// Packs the vector two bits per entry, entry `i` in bits `2i..2i+2`.
    ///
    /// Panics if the vector is longer than 32.
    pub fn pack(&self) -> u64 {
        assert!(
            self.len() <= 32,
            "packed GF(4) vectors hold at most 32 entries"
        );
        self.0
            .iter()
            .enumerate()
            .fold(0u64, |acc, (i, a)| acc | (u64::from(a.bits()) << (2 * i)))
    }

    pub fn unpack(packed: u64, len: usize) -> Gf4Vector {
        (0..len)
            .map(|i| Gf4::from_bits((packed >> (2 * i)) as u8))
            .collect()
    }
}

/// Weight of a vector in packed form.
#[inline]
pub(crate) fn packed_weight(packed: u64) -> u32 {
    const LOW: u64 = 0x5555_5555_5555_5555;
    ((packed | (packed >> 1)) & LOW).count_ones()
}

impl Deref for Gf4Vector {
    type Target = [Gf4];

    fn deref(&self) -> &[Gf4] {
        &self.0
    }
}

impl FromIterator<Gf4> for Gf4Vector {
    fn from_iter<I: IntoIterator<Item = Gf4>>(iter: I) -> Self {
        Gf4Vector(iter.into_iter().collect())
    }
}

impl From<Vec<Gf4>> for Gf4Vector {
    fn from(v: Vec<Gf4>) -> Self {
        Gf4Vector(v)
    }
}

impl fmt::Display for Gf4Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

/// Parses symbols separated by optional whitespace: `"1 0 w W"` and `"10wW"`
/// are the same vector.
impl FromStr for Gf4Vector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        s.chars()
            .filter(|c| !c.is_whitespace())
            .map(Gf4::from_symbol)
            .collect()
    }
}

pub fn hermitian_inner(x: &Gf4Vector, y: &Gf4Vector) -> Result<Gf4, Error> {
    x.hermitian_inner(y)
}

pub fn scale(c: Gf4, x: &Gf4Vector) -> Gf4Vector {
    x.scale(c)
}

pub fn vadd(x: &Gf4Vector, y: &Gf4Vector) -> Result<Gf4Vector, Error> {
    x.try_add(y)
}

/// Parses a GF(4) matrix, one row per non-empty line.
pub fn parse_matrix(text: &str) -> Result<Vec<Gf4Vector>, Error> {
    let rows: Vec<Gf4Vector> = text
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(str::parse)
        .collect::<Result<_, _>>()?;
    if let Some(first) = rows.first() {
        if let Some(bad) = rows.iter().find(|r| r.len() != first.len()) {
            return Err(Error::LengthMismatch {
                expected: first.len(),
                found: bad.len(),
            });
        }
    }
    Ok(rows)
}

pub fn format_matrix(rows: &[Gf4Vector]) -> String {
    rows.iter().map(|r| format!("{r}\n")).collect()
}
