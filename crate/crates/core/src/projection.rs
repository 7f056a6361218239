//! The 4×m array view of a binary word and the projection onto GF(4)^m.
//!
//! Coordinates `4i, 4i+1, 4i+2, 4i+3` of a flat word form column `i` of
//! the array, top to bottom, and the rows carry the labels `0, 1, ω, ω̄`.
//! The projection of a column `(a₀, a₁, a_ω, a_ω̄)` is
//! `a₁·1 + a_ω·ω + a_ω̄·ω̄`.
//!
//! Constructions O and E turn an additive `(m, 2^r)` code `C4` into a binary
//! `[4m, m + r]` code by stacking `φ(C4)` with a small parity code:
//!
//! | block | `φ` |
//! |-------|-----|
//! | `0`   | `0000` |
//! | `1`   | `0011` |
//! | `ω`   | `0101` |
//! | `ω̄`   | `0110` |

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bitlin::{BinaryLinearCode, BitMatrix, BitVector};
use crate::gf4::{Gf4, Gf4Vector};
use crate::quaternary::QuaternaryCode;
use crate::Error;

/// One column of the array: four bits, top row (label 0) first.
///
/// Stored as a nibble with the top row in bit 3, so `Column(0b0111)` reads
/// `0111` top to bottom.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Column(u8);

impl Column {
    pub const ZERO: Column = Column(0);
    /// `1111`, an all-ones column.
    pub const ALL_ONES: Column = Column(0b1111);
    /// `1000`, the first-row unit.
    pub const FIRST: Column = Column(0b1000);

    pub const fn new(nibble: u8) -> Self {
        Column(nibble & 0xF)
    }

    pub const fn nibble(self) -> u8 {
        self.0
    }

    /// Entry in row `r` (0 = top).
    pub const fn bit(self, r: usize) -> bool {
        self.0 >> (3 - r) & 1 == 1
    }

    pub const fn first_bit(self) -> bool {
        self.bit(0)
    }

    pub const fn weight(self) -> u32 {
        self.0.count_ones()
    }

    pub const fn parity(self) -> Parity {
        Parity::of(self.0.count_ones() as usize)
    }

    pub const fn distance(self, other: Column) -> u32 {
        (self.0 ^ other.0).count_ones()
    }

    pub const fn flip_first(self) -> Column {
        Column(self.0 ^ 0b1000)
    }

    /// Inner product with the row labels.
    pub const fn project(self) -> Gf4 {
        let mut v = 0;
        if self.bit(1) {
            v ^= Gf4::One.bits();
        }
        if self.bit(2) {
            v ^= Gf4::Omega.bits();
        }
        if self.bit(3) {
            v ^= Gf4::OmegaBar.bits();
        }
        Gf4::from_bits(v)
    }
}

impl std::ops::BitXor for Column {
    type Output = Column;
    fn bitxor(self, rhs: Column) -> Column {
        Column(self.0 ^ rhs.0)
    }
}

impl fmt::Display for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:04b}", self.0)
    }
}

impl fmt::Debug for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Column({:04b})", self.0)
    }
}

impl std::str::FromStr for Column {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let v: BitVector = s.parse()?;
        if v.len() != 4 {
            return Err(Error::LengthMismatch {
                expected: 4,
                found: v.len(),
            });
        }
        Ok(column_from_low_nibble(v.bits() as u8))
    }
}

impl Serialize for Column {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Column {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Bit-reversal of a nibble: flat coordinate order (top row in bit 0) to
/// `Column` order (top row in bit 3) and back.
const REVERSE: [u8; 16] = [
    0b0000, 0b1000, 0b0100, 0b1100, 0b0010, 0b1010, 0b0110, 0b1110, //
    0b0001, 0b1001, 0b0101, 0b1101, 0b0011, 0b1011, 0b0111, 0b1111,
];

#[inline]
fn column_from_low_nibble(raw: u8) -> Column {
    Column(REVERSE[(raw & 0xF) as usize])
}

#[inline]
fn column_at(bits: u64, i: usize) -> Column {
    column_from_low_nibble((bits >> (4 * i)) as u8)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub const fn of(count: usize) -> Parity {
        if count.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub const fn flipped(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    pub const fn is_odd(self) -> bool {
        matches!(self, Parity::Odd)
    }
}

impl std::ops::BitXor for Parity {
    type Output = Parity;
    fn bitxor(self, rhs: Parity) -> Parity {
        if self == rhs {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// Which first-row rule a code obeys.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variant {
    /// First-row parity equals the common column parity.
    O,
    /// First-row parity is always even.
    E,
}

impl Variant {
    /// First-row parity a codeword must have when its columns have `column_parity`.
    pub const fn expected_first_row(self, column_parity: Parity) -> Parity {
        match self {
            Variant::O => column_parity,
            Variant::E => Parity::Even,
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::O => "O",
            Variant::E => "E",
        })
    }
}

/// A binary word of length `4m` viewed as a 4×m array.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CodewordArray {
    columns: Vec<Column>,
}

impl CodewordArray {
    pub fn from_columns(columns: Vec<Column>) -> Self {
        CodewordArray { columns }
    }

    pub fn zeros(m: usize) -> Self {
        CodewordArray {
            columns: vec![Column::ZERO; m],
        }
    }

    /// Number of columns.
    pub fn m(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[Column] {
        &self.columns
    }

    pub fn column(&self, i: usize) -> Column {
        self.columns[i]
    }

    pub fn set_column(&mut self, i: usize, c: Column) {
        self.columns[i] = c;
    }

    pub fn flip_first(&mut self, i: usize) {
        self.columns[i] = self.columns[i].flip_first();
    }

    pub fn first_row_parity(&self) -> Parity {
        Parity::of(self.columns.iter().filter(|c| c.first_bit()).count())
    }

    /// `Proj(v)`.
    pub fn project(&self) -> Gf4Vector {
        self.columns.iter().map(|c| c.project()).collect()
    }

    pub fn parity_profile(&self) -> ParityProfile {
        let column_parities: Vec<Parity> = self.columns.iter().map(|c| c.parity()).collect();
        let odd_count = column_parities.iter().filter(|p| p.is_odd()).count();
        let even_count = column_parities.len() - odd_count;
        ParityProfile {
            first_row_parity: self.first_row_parity(),
            odd_count,
            even_count,
            p: odd_count.min(even_count),
            column_parities,
        }
    }

    /// Labelled table as printed in the literature, one row per label.
    pub fn render(&self) -> String {
        self.render_marked(None)
    }

    /// Like [`render`](Self::render), with a `*` after every entry that
    /// differs from `before`.
    pub fn render_against(&self, before: &CodewordArray) -> String {
        self.render_marked(Some(before))
    }

    fn render_marked(&self, before: Option<&CodewordArray>) -> String {
        use std::fmt::Write;
        let m = self.m();
        let rule = format!("------+{}\n", "-".repeat(4 * m));
        let mut out = String::from("      |");
        for i in 1..=m {
            let _ = write!(out, "{i:>3} ");
        }
        trim_line_end(&mut out);
        out.push_str(&rule);
        for (r, label) in ["0", "1", "w", "W"].iter().enumerate() {
            let _ = write!(out, "  {label:<3} |");
            for (i, c) in self.columns.iter().enumerate() {
                let changed = before.is_some_and(|b| b.columns[i].bit(r) != c.bit(r));
                let _ = write!(
                    out,
                    "{:>3}{}",
                    u8::from(c.bit(r)),
                    if changed { '*' } else { ' ' }
                );
            }
            trim_line_end(&mut out);
        }
        out.push_str(&rule);
        out.push_str(" proj |");
        for (i, c) in self.columns.iter().enumerate() {
            let changed = before.is_some_and(|b| b.columns[i].project() != c.project());
            let _ = write!(out, "{:>3}{}", c.project(), if changed { '*' } else { ' ' });
        }
        trim_line_end(&mut out);
        out
    }
}

fn trim_line_end(out: &mut String) {
    out.truncate(out.trim_end_matches(' ').len());
    out.push('\n');
}

impl TryFrom<&BitVector> for CodewordArray {
    type Error = Error;

    fn try_from(v: &BitVector) -> Result<Self, Error> {
        to_array(v)
    }
}

impl From<&CodewordArray> for BitVector {
    fn from(a: &CodewordArray) -> BitVector {
        from_array(a)
    }
}

impl fmt::Display for CodewordArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Column parities and the counts derived from them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParityProfile {
    pub column_parities: Vec<Parity>,
    pub first_row_parity: Parity,
    pub odd_count: usize,
    pub even_count: usize,
    /// `min(odd_count, even_count)`.
    pub p: usize,
}

impl ParityProfile {
    /// The parity shared by more than half of the columns.
    pub fn majority(&self) -> Option<Parity> {
        use std::cmp::Ordering::*;
        match self.odd_count.cmp(&self.even_count) {
            Greater => Some(Parity::Odd),
            Less => Some(Parity::Even),
            Equal => None,
        }
    }

    /// Columns whose parity differs from the majority, ascending.
    pub fn minority_columns(&self) -> Vec<usize> {
        let Some(majority) = self.majority() else {
            return Vec::new();
        };
        self.column_parities
            .iter()
            .enumerate()
            .filter(|&(_, &p)| p != majority)
            .map(|(i, _)| i)
            .collect()
    }
}

pub fn to_array(v: &BitVector) -> Result<CodewordArray, Error> {
    if !v.len().is_multiple_of(4) {
        return Err(Error::NotMultipleOfFour(v.len()));
    }
    let bits = v.bits();
    Ok(CodewordArray {
        columns: (0..v.len() / 4).map(|i| column_at(bits, i)).collect(),
    })
}

pub fn from_array(a: &CodewordArray) -> BitVector {
    assert!(
        a.m() <= 16,
        "arrays wider than 16 columns do not fit in a bit vector"
    );
    let bits = a.columns.iter().enumerate().fold(0u64, |acc, (i, c)| {
        acc | u64::from(REVERSE[c.0 as usize]) << (4 * i)
    });
    BitVector::from_bits_unchecked(bits, 4 * a.m())
}

pub fn project(a: &CodewordArray) -> Gf4Vector {
    a.project()
}

pub fn parity_profile(a: &CodewordArray) -> ParityProfile {
    a.parity_profile()
}

/// Block image of a single symbol.
pub const fn phi_column(a: Gf4) -> Column {
    match a {
        Gf4::Zero => Column(0b0000),
        Gf4::One => Column(0b0011),
        Gf4::Omega => Column(0b0101),
        Gf4::OmegaBar => Column(0b0110),
    }
}

/// `φ(x)`: blockwise substitution of each symbol.
pub fn phi(x: &Gf4Vector) -> BitVector {
    from_array(&CodewordArray {
        columns: x.iter().map(|&a| phi_column(a)).collect(),
    })
}

fn column_block(m: usize, i: usize, c: Column) -> BitVector {
    let mut a = CodewordArray::zeros(m);
    a.set_column(i, c);
    from_array(&a)
}

/// Generators of the parity code `d` (variant O) or `d′` (variant E).
///
/// The first `m − 1` rows are the pair sums `q_i + q_{i+1}`, where `q_i` is
/// `1111` in column `i`; they span all even sums of the `q_i`. The last row
/// is `d₁ = (1000 … 1000)` or `d₂ = (1000 … 1000 0111)`: variant O takes
/// `d₁` for odd `m` and `d₂` for even `m`, variant E the other one.
pub fn d_code_generators(m: usize, variant: Variant) -> Result<BitMatrix, Error> {
    if m < 2 {
        return Err(Error::InvalidArgument(format!(
            "parity code needs m >= 2, got {m}"
        )));
    }
    if 4 * m > BitVector::MAX_LEN {
        return Err(Error::TooLong {
            len: 4 * m,
            max: BitVector::MAX_LEN,
        });
    }
    let n = 4 * m;
    let mut rows = BitMatrix::empty(n);
    for i in 0..m - 1 {
        rows.push_row(
            column_block(m, i, Column::ALL_ONES) ^ column_block(m, i + 1, Column::ALL_ONES),
        )?;
    }
    let d1 = from_array(&CodewordArray {
        columns: vec![Column::FIRST; m],
    });
    // d₂ = d₁ + q_m
    let d2 = d1 ^ column_block(m, m - 1, Column::ALL_ONES);
    let use_d1 = match variant {
        Variant::O => m % 2 == 1,
        Variant::E => m.is_multiple_of(2),
    };
    rows.push_row(if use_d1 { d1 } else { d2 })?;
    Ok(rows)
}

/// `ρ_O(C4)` or `ρ_E(C4)`: `φ` of the generators of `C4` stacked with the
/// parity code generators.
pub fn construct(c4: &QuaternaryCode, variant: Variant) -> Result<BinaryLinearCode, Error> {
    let m = c4.m();
    let mut rows = BitMatrix::empty(4 * m);
    for g in c4.generators() {
        rows.push_row(phi(g))?;
    }
    let rows = rows.stack(&d_code_generators(m, variant)?)?;
    BinaryLinearCode::new(rows)
}

/// Whether `a` meets all three projection conditions for `C4` and `variant`.
pub fn satisfies_projection(a: &CodewordArray, c4: &QuaternaryCode, variant: Variant) -> bool {
    if a.m() != c4.m() {
        return false;
    }
    let Some(&first) = a.columns.first() else {
        return true;
    };
    let parity = first.parity();
    a.columns.iter().all(|c| c.parity() == parity)
        && a.first_row_parity() == variant.expected_first_row(parity)
        && c4.contains(&a.project())
}

/// Packed variant of [`satisfies_projection`] used for enumeration.
fn word_satisfies_projection(bits: u64, c4: &QuaternaryCode, variant: Variant) -> bool {
    let mut odd_columns = 0;
    let mut first_row = 0;
    let mut syndrome = 0;
    for i in 0..c4.m() {
        let c = column_at(bits, i);
        odd_columns += c.weight() & 1;
        first_row ^= u32::from(c.first_bit());
        syndrome ^= c4.scaled_column(i, c.project());
    }
    let m = c4.m() as u32;
    let parity = match odd_columns {
        0 => Parity::Even,
        x if x == m => Parity::Odd,
        _ => return false,
    };
    syndrome == 0 && Parity::of(first_row as usize) == variant.expected_first_row(parity)
}

/// Checks every codeword of `code` against the projection conditions.
pub fn has_projection(
    code: &BinaryLinearCode,
    c4: &QuaternaryCode,
    variant: Variant,
) -> Result<bool, Error> {
    if code.n() != 4 * c4.m() {
        return Err(Error::LengthMismatch {
            expected: 4 * c4.m(),
            found: code.n(),
        });
    }
    Ok(code
        .codewords()?
        .all(|c| word_satisfies_projection(c.bits(), c4, variant)))
}

/// First codeword of `code` violating the projection conditions, if any.
pub fn projection_violation(
    code: &BinaryLinearCode,
    c4: &QuaternaryCode,
    variant: Variant,
) -> Result<Option<BitVector>, Error> {
    if code.n() != 4 * c4.m() {
        return Err(Error::LengthMismatch {
            expected: 4 * c4.m(),
            found: code.n(),
        });
    }
    Ok(code
        .codewords()?
        .find(|c| !word_satisfies_projection(c.bits(), c4, variant)))
}

/// The four columns projecting to `value`, ascending.
pub fn coset_of(value: Gf4) -> [Column; 4] {
    let mut out = [Column::ZERO; 4];
    let mut k = 0;
    for nibble in 0..16u8 {
        if Column(nibble).project() == value {
            out[k] = Column(nibble);
            k += 1;
        }
    }
    out
}

/// The unique column projecting to `value` with the given parity and first bit.
pub fn select_candidate(value: Gf4, parity: Parity, first_bit: bool) -> Column {
    coset_of(value)
        .into_iter()
        .find(|c| c.parity() == parity && c.first_bit() == first_bit)
        .expect("each coset has one column per (parity, first bit)")
}
