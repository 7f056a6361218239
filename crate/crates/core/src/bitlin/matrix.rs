use std::fmt;
use std::str::FromStr;

use super::BitVector;
use crate::Error;

/// A dense GF(2) matrix whose rows are [`BitVector`]s of a common length.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BitMatrix {
    ncols: usize,
    rows: Vec<BitVector>,
}

impl BitMatrix {
    pub fn empty(ncols: usize) -> Self {
        assert!(ncols <= BitVector::MAX_LEN);
        BitMatrix {
            ncols,
            rows: Vec::new(),
        }
    }

    pub fn from_rows(ncols: usize, rows: Vec<BitVector>) -> Result<Self, Error> {
        if ncols > BitVector::MAX_LEN {
            return Err(Error::TooLong {
                len: ncols,
                max: BitVector::MAX_LEN,
            });
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != ncols) {
            return Err(Error::LengthMismatch {
                expected: ncols,
                found: bad.len(),
            });
        }
        Ok(BitMatrix { ncols, rows })
    }

    pub fn identity(n: usize) -> Self {
        BitMatrix {
            ncols: n,
            rows: (0..n).map(|i| BitVector::unit(i, n)).collect(),
        }
    }

    pub fn push_row(&mut self, row: BitVector) -> Result<(), Error> {
        if row.len() != self.ncols {
            return Err(Error::LengthMismatch {
                expected: self.ncols,
                found: row.len(),
            });
        }
        self.rows.push(row);
        Ok(())
    }

    pub fn rows(&self) -> &[BitVector] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> BitVector {
        self.rows[i]
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn stack(&self, other: &BitMatrix) -> Result<BitMatrix, Error> {
        if self.ncols != other.ncols {
            return Err(Error::LengthMismatch {
                expected: self.ncols,
                found: other.ncols,
            });
        }
        let mut rows = self.rows.clone();
        rows.extend_from_slice(&other.rows);
        Ok(BitMatrix {
            ncols: self.ncols,
            rows,
        })
    }

    /// Reduced row echelon form and rank.
    ///
    /// Pivots are taken left to right (coordinate 0 first). The returned
    /// matrix has the same shape; zero rows end up at the bottom.
    pub fn rref(&self) -> (BitMatrix, usize) {
        let mut rows = self.rows.clone();
        let mut rank = 0;
        for col in 0..self.ncols {
            let Some(pivot) = (rank..rows.len()).find(|&r| rows[r].get(col)) else {
                continue;
            };
            rows.swap(rank, pivot);
            let p = rows[rank];
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && row.get(col) {
                    *row ^= p;
                }
            }
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        (
            BitMatrix {
                ncols: self.ncols,
                rows,
            },
            rank,
        )
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Pivot column of each nonzero row, assuming `self` is in RREF.
    pub(crate) fn pivots(&self) -> Vec<usize> {
        self.rows
            .iter()
            .take_while(|r| !r.is_zero())
            .map(|r| r.bits().trailing_zeros() as usize)
            .collect()
    }

    /// `v · self` for a row vector `v` of length `nrows`.
    pub fn left_mul(&self, v: &BitVector) -> Result<BitVector, Error> {
        if v.len() != self.nrows() {
            return Err(Error::LengthMismatch {
                expected: self.nrows(),
                found: v.len(),
            });
        }
        let mut acc = BitVector::zeros(self.ncols);
        for i in v.ones() {
            acc ^= self.rows[i];
        }
        Ok(acc)
    }

    /// `self · vᵀ`: one bit per row.
    pub fn mul_vec(&self, v: &BitVector) -> Result<BitVector, Error> {
        if v.len() != self.ncols {
            return Err(Error::LengthMismatch {
                expected: self.ncols,
                found: v.len(),
            });
        }
        let mut out = BitVector::zeros(self.nrows());
        for (i, row) in self.rows.iter().enumerate() {
            if row.dot(v) {
                out.flip(i);
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> BitMatrix {
        let nrows = self.nrows();
        let rows = (0..self.ncols)
            .map(|c| {
                let mut col = BitVector::zeros(nrows);
                for (r, row) in self.rows.iter().enumerate() {
                    if row.get(c) {
                        col.flip(r);
                    }
                }
                col
            })
            .collect();
        BitMatrix { ncols: nrows, rows }
    }

    /// Text form, optionally with a space every `group` characters.
    pub fn to_text(&self, group: usize) -> String {
        self.rows
            .iter()
            .map(|r| format!("{}\n", r.to_grouped_string(group)))
            .collect()
    }
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(0))
    }
}

/// One row per non-empty line of `0`/`1` characters; spaces are ignored.
impl FromStr for BitMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let rows: Vec<BitVector> = s
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(str::parse)
            .collect::<Result<_, _>>()?;
        let ncols = rows.first().map_or(0, BitVector::len);
        BitMatrix::from_rows(ncols, rows)
    }
}

pub fn rref(m: &BitMatrix) -> (BitMatrix, usize) {
    m.rref()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn identity_is_reduced() {
        let id = BitMatrix::identity(3);
        let (r, rank) = id.rref();
        assert_eq!(r, id);
        assert_eq!(rank, 3);
    }

    #[test]
    fn rref_of_dependent_rows() {
        let m: BitMatrix = "110\n011\n101\n".parse().unwrap();
        let (r, rank) = m.rref();
        assert_eq!(rank, 2);
        assert_eq!(r.to_text(0), "101\n011\n000\n");
        assert_eq!(r.pivots(), vec![0, 1]);
    }

    #[test]
    fn parse_ignores_block_spaces() {
        let m: BitMatrix = "1000 0111\n0000 1111\n".parse().unwrap();
        assert_eq!(m.ncols(), 8);
        assert_eq!(m.nrows(), 2);
        assert!("10\n1\n".parse::<BitMatrix>().is_err());
    }

    #[test]
    fn products() {
        let m: BitMatrix = "110\n011\n".parse().unwrap();
        let msg: BitVector = "11".parse().unwrap();
        assert_eq!(m.left_mul(&msg).unwrap().to_string(), "101");
        let v: BitVector = "100".parse().unwrap();
        assert_eq!(m.mul_vec(&v).unwrap().to_string(), "10");
        assert_eq!(m.transpose().to_text(0), "10\n11\n01\n");
        assert!(m.left_mul(&v).is_err());
    }

    fn matrix() -> impl Strategy<Value = BitMatrix> {
        (1usize..12, 1usize..20).prop_flat_map(|(nrows, ncols)| {
            prop::collection::vec(any::<u64>(), nrows).prop_map(move |ws| {
                let rows = ws
                    .into_iter()
                    .map(|w| {
                        BitVector::from_bits(w & super::super::vector::mask(ncols), ncols).unwrap()
                    })
                    .collect();
                BitMatrix::from_rows(ncols, rows).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn rref_preserves_row_space(m in matrix()) {
            let (r, rank) = m.rref();
            prop_assert!(rank <= m.nrows().min(m.ncols()));
            prop_assert_eq!(m.stack(&r).unwrap().rank(), rank);
            prop_assert_eq!(r.rank(), rank);
            // pivots strictly increase and each pivot column is a unit column
            let pivots = r.pivots();
            prop_assert_eq!(pivots.len(), rank);
            for (i, &p) in pivots.iter().enumerate() {
                for (j, row) in r.rows().iter().enumerate() {
                    prop_assert_eq!(row.get(p), i == j);
                }
            }
        }
    }
}
