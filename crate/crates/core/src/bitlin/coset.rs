//! Syndrome-indexed coset leaders, the brute-force reference decoder.

use itertools::Itertools;

use super::{BinaryLinearCode, BitVector};
use crate::Error;

/// Largest redundancy `n − k` for which a full syndrome table is built.
pub const MAX_TABLE_REDUNDANCY: usize = 20;

/// Minimum-weight coset leader for each syndrome.
///
/// Built by enumerating error patterns by increasing weight, positions in
/// lexicographic order; the first pattern to reach a syndrome keeps it.
#[derive(Clone, Debug)]
pub struct CosetTable {
    n: usize,
    redundancy: usize,
    leaders: Vec<Option<u64>>,
    filled: usize,
    max_weight: usize,
}

impl CosetTable {
    /// Complete table: weights are enumerated until every syndrome has a leader.
    pub fn build(code: &BinaryLinearCode) -> Result<Self, Error> {
        Self::build_up_to(code, code.n())
    }

    /// Table restricted to error patterns of weight at most `max_weight`.
    pub fn build_up_to(code: &BinaryLinearCode, max_weight: usize) -> Result<Self, Error> {
        let n = code.n();
        let redundancy = n - code.k();
        if redundancy > MAX_TABLE_REDUNDANCY {
            return Err(Error::BudgetExceeded {
                what: "coset table redundancy",
                value: redundancy,
                limit: MAX_TABLE_REDUNDANCY,
            });
        }
        let size = 1usize << redundancy;
        let mut leaders = vec![None; size];
        leaders[0] = Some(0);
        let mut filled = 1;
        let mut reached = 0;
        let cols = code.column_syndromes();
        for w in 1..=max_weight.min(n) {
            if filled == size {
                break;
            }
            reached = w;
            for positions in (0..n).combinations(w) {
                let s = positions.iter().fold(0u64, |acc, &p| acc ^ cols[p]) as usize;
                if leaders[s].is_none() {
                    leaders[s] = Some(positions.iter().fold(0u64, |acc, &p| acc | 1 << p));
                    filled += 1;
                }
            }
        }
        Ok(CosetTable {
            n,
            redundancy,
            leaders,
            filled,
            max_weight: reached,
        })
    }

    /// Leader for a packed syndrome, if the table reached it.
    pub fn leader_bits(&self, syndrome: u64) -> Option<BitVector> {
        self.leaders
            .get(syndrome as usize)
            .copied()
            .flatten()
            .map(|bits| BitVector::from_bits_unchecked(bits, self.n))
    }

    pub fn leader(&self, syndrome: &BitVector) -> Option<BitVector> {
        if syndrome.len() != self.redundancy {
            return None;
        }
        self.leader_bits(syndrome.bits())
    }

    /// Whether every syndrome has a leader.
    pub fn is_complete(&self) -> bool {
        self.filled == self.leaders.len()
    }

    pub fn filled(&self) -> usize {
        self.filled
    }

    /// Heaviest weight that was enumerated while building.
    pub fn max_weight(&self) -> usize {
        self.max_weight
    }

    /// Largest leader weight in the table (the covering radius when complete).
    pub fn max_leader_weight(&self) -> usize {
        self.leaders
            .iter()
            .flatten()
            .map(|b| b.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    /// Leaders of exactly the given weight.
    pub fn leaders_of_weight(&self, weight: usize) -> impl Iterator<Item = BitVector> + '_ {
        self.leaders
            .iter()
            .flatten()
            .filter(move |b| b.count_ones() as usize == weight)
            .map(|&b| BitVector::from_bits_unchecked(b, self.n))
    }

    /// `y + leader(syndrome(y))`, or `None` when the syndrome is absent.
    pub fn decode(&self, code: &BinaryLinearCode, y: &BitVector) -> Option<BitVector> {
        if y.len() != self.n {
            return None;
        }
        self.leader_bits(code.syndrome_bits(y)).map(|e| *y ^ e)
    }
}

pub fn build_coset_table(code: &BinaryLinearCode) -> Result<CosetTable, Error> {
    CosetTable::build(code)
}

pub fn oracle_decode(
    table: &CosetTable,
    code: &BinaryLinearCode,
    y: &BitVector,
) -> Option<BitVector> {
    table.decode(code, y)
}
