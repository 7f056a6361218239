use serde::{Deserialize, Serialize};

use super::{BitMatrix, BitVector};
use crate::Error;

/// Largest dimension for which codewords are enumerated exhaustively.
pub const MAX_ENUM_DIMENSION: usize = 26;

/// A binary linear `[n, k]` code given by a full-rank generator matrix.
///
/// A systematic parity-check matrix is derived at construction so that
/// membership and syndromes cost `n − k` word operations.
#[derive(Clone, Debug)]
pub struct BinaryLinearCode {
    generator: BitMatrix,
    parity_check: BitMatrix,
    /// Syndrome of each unit vector, packed.
    column_syndromes: Vec<u64>,
}

impl BinaryLinearCode {
    /// Wraps a generator matrix whose rows must be linearly independent.
    pub fn new(generator: BitMatrix) -> Result<Self, Error> {
        let (reduced, rank) = generator.rref();
        if rank != generator.nrows() {
            return Err(Error::RankDeficient {
                expected: generator.nrows(),
                found: rank,
            });
        }
        let parity_check = parity_check_from_rref(&reduced, rank);
        let n = generator.ncols();
        let column_syndromes = (0..n)
            .map(|i| {
                parity_check
                    .rows()
                    .iter()
                    .enumerate()
                    .filter(|(_, h)| h.get(i))
                    .fold(0u64, |acc, (r, _)| acc | 1 << r)
            })
            .collect();
        Ok(BinaryLinearCode {
            generator,
            parity_check,
            column_syndromes,
        })
    }

    /// The code spanned by `rows`, which may be dependent.
    pub fn from_spanning_rows(rows: &BitMatrix) -> Result<Self, Error> {
        let (reduced, rank) = rows.rref();
        let basis = reduced.rows()[..rank].to_vec();
        BinaryLinearCode::new(BitMatrix::from_rows(rows.ncols(), basis)?)
    }

    pub fn n(&self) -> usize {
        self.generator.ncols()
    }

    pub fn k(&self) -> usize {
        self.generator.nrows()
    }

    pub fn generator(&self) -> &BitMatrix {
        &self.generator
    }

    /// Systematic parity-check matrix with `n − k` rows.
    pub fn parity_check(&self) -> &BitMatrix {
        &self.parity_check
    }

    /// The message `msg` (length `k`) times the generator.
    pub fn encode(&self, msg: &BitVector) -> Result<BitVector, Error> {
        self.generator.left_mul(msg)
    }

    /// Packed syndrome `H·yᵀ`; bit `r` is parity-check row `r`.
    #[inline]
    pub fn syndrome_bits(&self, y: &BitVector) -> u64 {
        let mut s = 0;
        let mut rest = y.bits();
        while rest != 0 {
            s ^= self.column_syndromes[rest.trailing_zeros() as usize];
            rest &= rest - 1;
        }
        s
    }

    pub fn syndrome(&self, y: &BitVector) -> Result<BitVector, Error> {
        if y.len() != self.n() {
            return Err(Error::LengthMismatch {
                expected: self.n(),
                found: y.len(),
            });
        }
        Ok(BitVector::from_bits_unchecked(
            self.syndrome_bits(y),
            self.n() - self.k(),
        ))
    }

    pub fn contains(&self, y: &BitVector) -> bool {
        y.len() == self.n() && self.syndrome_bits(y) == 0
    }

    pub(crate) fn column_syndromes(&self) -> &[u64] {
        &self.column_syndromes
    }

    fn check_budget(&self) -> Result<(), Error> {
        if self.k() > MAX_ENUM_DIMENSION {
            return Err(Error::BudgetExceeded {
                what: "codeword enumeration dimension",
                value: self.k(),
                limit: MAX_ENUM_DIMENSION,
            });
        }
        Ok(())
    }

    /// All `2^k` codewords in Gray-code order, starting with zero.
    pub fn codewords(&self) -> Result<Codewords<'_>, Error> {
        self.check_budget()?;
        Ok(Codewords {
            rows: self.generator.rows(),
            current: BitVector::zeros(self.n()),
            index: 0,
            total: 1u64 << self.k(),
        })
    }

    pub fn weight_distribution(&self) -> Result<WeightDistribution, Error> {
        let mut counts = vec![0u64; self.n() + 1];
        for c in self.codewords()? {
            counts[c.weight()] += 1;
        }
        Ok(WeightDistribution::new(counts))
    }

    pub fn min_distance(&self) -> Result<usize, Error> {
        Ok(self.weight_distribution()?.min_distance().unwrap_or(0))
    }

    /// Whether the two codes have the same row space.
    pub fn same_code(&self, other: &BinaryLinearCode) -> bool {
        code_equal(self, other)
    }
}

/// Parity checks `e_j + Σ_r G_r[j]·e_{pivot_r}` for each non-pivot column `j`.
fn parity_check_from_rref(reduced: &BitMatrix, rank: usize) -> BitMatrix {
    let n = reduced.ncols();
    let pivots = reduced.pivots();
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut h = BitMatrix::empty(n);
    for j in (0..n).filter(|&j| !is_pivot[j]) {
        let mut row = BitVector::unit(j, n);
        for (r, &p) in pivots.iter().enumerate().take(rank) {
            if reduced.row(r).get(j) {
                row.flip(p);
            }
        }
        h.push_row(row).expect("row length matches");
    }
    h
}

/// Gray-code traversal of a code: each step adds one generator row.
pub struct Codewords<'a> {
    rows: &'a [BitVector],
    current: BitVector,
    index: u64,
    total: u64,
}

impl Iterator for Codewords<'_> {
    type Item = BitVector;

    fn next(&mut self) -> Option<BitVector> {
        if self.index == self.total {
            return None;
        }
        if self.index > 0 {
            self.current ^= self.rows[self.index.trailing_zeros() as usize];
        }
        self.index += 1;
        Some(self.current)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.index) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for Codewords<'_> {}

/// Codeword counts `A_0 … A_n` by Hamming weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightDistribution {
    counts: Vec<u64>,
}

impl WeightDistribution {
    pub fn new(counts: Vec<u64>) -> Self {
        WeightDistribution { counts }
    }

    /// `A_i`, zero past the length.
    pub fn get(&self, i: usize) -> u64 {
        self.counts.get(i).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn length(&self) -> usize {
        self.counts.len().saturating_sub(1)
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// `(i, A_i)` for every nonzero `A_i`.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.counts
            .iter()
            .copied()
            .enumerate()
            .filter(|&(_, a)| a > 0)
    }

    /// Smallest positive weight present.
    pub fn min_distance(&self) -> Option<usize> {
        self.nonzero().map(|(i, _)| i).find(|&i| i > 0)
    }

    /// `A_i = A_{n−i}` for all `i`.
    pub fn is_symmetric(&self) -> bool {
        self.counts.iter().eq(self.counts.iter().rev())
    }
}

pub fn encode(code: &BinaryLinearCode, msg: &BitVector) -> Result<BitVector, Error> {
    code.encode(msg)
}

pub fn weight_distribution(code: &BinaryLinearCode) -> Result<WeightDistribution, Error> {
    code.weight_distribution()
}

pub fn min_distance(code: &BinaryLinearCode) -> Result<usize, Error> {
    code.min_distance()
}

/// True iff `a` and `b` have the same length and row space.
pub fn code_equal(a: &BinaryLinearCode, b: &BinaryLinearCode) -> bool {
    if a.n() != b.n() || a.k() != b.k() {
        return false;
    }
    a.generator()
        .stack(b.generator())
        .map(|m| m.rank() == a.k())
        .unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn repetition4() -> BinaryLinearCode {
        BinaryLinearCode::new("1111".parse().unwrap()).unwrap()
    }

    fn hamming74() -> BinaryLinearCode {
        BinaryLinearCode::new("1000110\n0100101\n0010011\n0001111\n".parse().unwrap()).unwrap()
    }

    #[test]
    fn encode_examples() {
        let code = hamming74();
        let zero = BitVector::zeros(4);
        assert!(code.encode(&zero).unwrap().is_zero());
        let e1 = BitVector::unit(0, 4);
        assert_eq!(code.encode(&e1).unwrap(), code.generator().row(0));
        let e12: BitVector = "1100".parse().unwrap();
        assert_eq!(
            code.encode(&e12).unwrap(),
            code.generator().row(0) ^ code.generator().row(1)
        );
        assert!(code.encode(&BitVector::zeros(3)).is_err());
    }

    #[test]
    fn toy_distances() {
        assert_eq!(repetition4().min_distance().unwrap(), 4);
        let wd = hamming74().weight_distribution().unwrap();
        assert_eq!(wd.counts(), &[1, 0, 0, 7, 7, 0, 0, 1]);
        assert!(wd.is_symmetric());
        assert_eq!(wd.total(), 16);
    }

    #[test]
    fn parity_check_annihilates_generator() {
        let code = hamming74();
        assert_eq!(code.parity_check().nrows(), 3);
        for c in code.codewords().unwrap() {
            assert!(code.contains(&c));
        }
        let non: BitVector = "1000000".parse().unwrap();
        assert!(!code.contains(&non));
    }

    #[test]
    fn dependent_generators_are_rejected() {
        let m: BitMatrix = "110\n011\n101\n".parse().unwrap();
        assert!(matches!(
            BinaryLinearCode::new(m.clone()),
            Err(Error::RankDeficient {
                expected: 3,
                found: 2
            })
        ));
        assert_eq!(BinaryLinearCode::from_spanning_rows(&m).unwrap().k(), 2);
    }

    #[test]
    fn row_permutation_gives_equal_code() {
        let code = hamming74();
        let mut rows = code.generator().rows().to_vec();
        rows.reverse();
        let permuted = BinaryLinearCode::new(BitMatrix::from_rows(7, rows).unwrap()).unwrap();
        assert!(code_equal(&code, &permuted));
        assert!(!code_equal(&code, &repetition4()));
    }

    #[test]
    fn gray_code_visits_every_codeword_once() {
        let code = hamming74();
        let mut seen: Vec<u64> = code.codewords().unwrap().map(|c| c.bits()).collect();
        assert_eq!(seen[0], 0);
        seen.sort_unstable();
        seen.dedup();
        assert_eq!(seen.len(), 16);
    }

    #[test]
    fn enumeration_budget() {
        let big = BinaryLinearCode::new(BitMatrix::identity(27)).unwrap();
        assert!(matches!(big.codewords(), Err(Error::BudgetExceeded { .. })));
        assert!(big.weight_distribution().is_err());
    }
}
