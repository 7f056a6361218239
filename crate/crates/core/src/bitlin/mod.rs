//! Linear algebra over GF(2): bit vectors, matrices, binary linear codes,
//! weight enumeration and a syndrome-table reference decoder.
//!
//! Vectors are limited to 64 coordinates and packed into one machine word.

mod code;
mod coset;
mod matrix;
mod vector;

pub use code::{
    code_equal, encode, min_distance, weight_distribution, BinaryLinearCode, Codewords,
    WeightDistribution, MAX_ENUM_DIMENSION,
};
pub use coset::{build_coset_table, oracle_decode, CosetTable, MAX_TABLE_REDUNDANCY};
pub use matrix::{rref, BitMatrix};
pub use vector::BitVector;
