//! Reference data: the published generator matrices of the four binary
//! codes, their weight distributions, and four hand-worked decodings.
//!
//! Matrices are in the block text format (`0`/`1`, a space every four
//! characters), one row per line.

use crate::bitlin::{BinaryLinearCode, BitMatrix, BitVector};
use crate::decoder::Branch;
use crate::projection::{from_array, CodewordArray, Variant};
use crate::quaternary::{c4_10, c4_9, QuaternaryCode};

const PRINTED_O36: &str = "
1000 0001 0001 0001 0001 0010 0100 0111 0010
0100 0001 0001 0001 0001 0100 0111 0100 1110
0010 0001 0001 0001 0001 0001 0001 0010 1000
0001 0001 0001 0001 0001 0111 0010 0001 1011
0000 1001 0000 0000 0000 0110 0011 0101 1111
0000 0101 0000 0000 0000 0101 0110 0011 0000
0000 0011 0000 0000 0000 0011 0101 0110 0000
0000 0000 1001 0000 0000 0000 0110 0011 1010
0000 0000 0101 0000 0000 0000 0101 0110 0011
0000 0000 0011 0000 0000 0000 0011 0101 0110
0000 0000 0000 1001 0000 0101 0101 0000 1001
0000 0000 0000 0101 0000 0011 0011 0000 0101
0000 0000 0000 0011 0000 0110 0110 0000 0011
0000 0000 0000 0000 1001 0110 0011 0110 1001
0000 0000 0000 0000 0101 0101 0110 0101 0101
0000 0000 0000 0000 0011 0011 0101 0011 0011
0000 0000 0000 0000 0000 1111 0000 0000 1111
0000 0000 0000 0000 0000 0000 1111 0000 1111
0000 0000 0000 0000 0000 0000 0000 1111 1111
";

const PRINTED_E36: &str = "
1000 0001 0001 0001 0001 0010 0100 0111 1101
0100 0001 0001 0001 0001 0100 0111 0100 0001
0010 0001 0001 0001 0001 0001 0001 0010 0111
0001 0001 0001 0001 0001 0111 0010 0001 0100
0000 1001 0000 0000 0000 0110 0011 0101 1111
0000 0101 0000 0000 0000 0101 0110 0011 0000
0000 0011 0000 0000 0000 0011 0101 0110 0000
0000 0000 1001 0000 0000 0000 0110 0011 1010
0000 0000 0101 0000 0000 0000 0101 0110 0011
0000 0000 0011 0000 0000 0000 0011 0101 0110
0000 0000 0000 1001 0000 0101 0101 0000 1001
0000 0000 0000 0101 0000 0011 0011 0000 0101
0000 0000 0000 0011 0000 0110 0110 0000 0011
0000 0000 0000 0000 1001 0110 0011 0110 1001
0000 0000 0000 0000 0101 0101 0110 0101 0101
0000 0000 0000 0000 0011 0011 0101 0011 0011
0000 0000 0000 0000 0000 1111 0000 0000 1111
0000 0000 0000 0000 0000 0000 1111 0000 1111
0000 0000 0000 0000 0000 0000 0000 1111 1111
";

const PRINTED_O40: &str = "
1000 0001 0001 0001 0001 0001 0111 0010 0001 0100
0100 0001 0001 0001 0001 0001 0010 0010 0100 1101
0010 0001 0001 0001 0001 0001 0001 0010 0111 1000
0001 0001 0001 0001 0001 0001 0100 0010 0010 1110
0000 1001 0000 0000 0000 0000 0101 0110 0110 1001
0000 0101 0000 0000 0000 0000 0011 0101 0101 0101
0000 0011 0000 0000 0000 0000 0110 0011 0011 0011
0000 0000 1001 0000 0000 0000 0110 0011 0101 1111
0000 0000 0101 0000 0000 0000 0101 0110 0011 0000
0000 0000 0011 0000 0000 0000 0011 0101 0110 0000
0000 0000 0000 1001 0000 0000 0000 0110 0011 1010
0000 0000 0000 0101 0000 0000 0000 0101 0110 0011
0000 0000 0000 0011 0000 0000 0000 0011 0101 0110
0000 0000 0000 0000 1001 0000 0101 0101 0000 1001
0000 0000 0000 0000 0101 0000 0011 0011 0000 0101
0000 0000 0000 0000 0011 0000 0110 0110 0000 0011
0000 0000 0000 0000 0000 1001 0110 0011 0110 1001
0000 0000 0000 0000 0000 0101 0101 0110 0101 0101
0000 0000 0000 0000 0000 0011 0011 0101 0011 0011
0000 0000 0000 0000 0000 0000 1111 0000 0000 1111
0000 0000 0000 0000 0000 0000 0000 1111 0000 1111
0000 0000 0000 0000 0000 0000 0000 0000 1111 1111
";

const PRINTED_E40: &str = "
1000 0001 0001 0001 0001 0001 0111 0010 0001 1011
0100 0001 0001 0001 0001 0001 0010 0010 0100 0010
0010 0001 0001 0001 0001 0001 0001 0010 0111 0111
0001 0001 0001 0001 0001 0001 0100 0010 0010 0001
0000 1001 0000 0000 0000 0000 0101 0110 0110 1001
0000 0101 0000 0000 0000 0000 0011 0101 0101 0101
0000 0011 0000 0000 0000 0000 0110 0011 0011 0011
0000 0000 1001 0000 0000 0000 0110 0011 0101 1111
0000 0000 0101 0000 0000 0000 0101 0110 0011 0000
0000 0000 0011 0000 0000 0000 0011 0101 0110 0000
0000 0000 0000 1001 0000 0000 0000 0110 0011 1010
0000 0000 0000 0101 0000 0000 0000 0101 0110 0011
0000 0000 0000 0011 0000 0000 0000 0011 0101 0110
0000 0000 0000 0000 1001 0000 0101 0101 0000 1001
0000 0000 0000 0000 0101 0000 0011 0011 0000 0101
0000 0000 0000 0000 0011 0000 0110 0110 0000 0011
0000 0000 0000 0000 0000 1001 0110 0011 0110 1001
0000 0000 0000 0000 0000 0101 0101 0110 0101 0101
0000 0000 0000 0000 0000 0011 0011 0101 0011 0011
0000 0000 0000 0000 0000 0000 1111 0000 0000 1111
0000 0000 0000 0000 0000 0000 0000 1111 0000 1111
0000 0000 0000 0000 0000 0000 0000 0000 1111 1111
";

/// One of the four binary codes `ρ_O(C4^9)`, `ρ_E(C4^9)`, `ρ_O(C4^10)`, `ρ_E(C4^10)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PublishedCode {
    pub name: &'static str,
    pub variant: Variant,
    /// 9 for `C4^9`, 10 for `C4^10`.
    pub m: usize,
    pub n: usize,
    pub k: usize,
    generator: &'static str,
    /// Nonzero `(i, A_i)` pairs.
    pub weight_distribution: &'static [(usize, u64)],
}

impl PublishedCode {
    pub fn c4(&self) -> QuaternaryCode {
        if self.m == 9 {
            c4_9()
        } else {
            c4_10()
        }
    }

    pub fn generator_text(&self) -> &'static str {
        self.generator
    }

    pub fn generator(&self) -> BitMatrix {
        self.generator.parse().expect("published matrix parses")
    }

    pub fn code(&self) -> BinaryLinearCode {
        BinaryLinearCode::new(self.generator()).expect("published matrix has full rank")
    }

    /// Full `A_0 … A_n` vector.
    pub fn weight_counts(&self) -> Vec<u64> {
        let mut counts = vec![0; self.n + 1];
        for &(i, a) in self.weight_distribution {
            counts[i] = a;
        }
        counts
    }
}

pub const O36: PublishedCode = PublishedCode {
    name: "o36",
    variant: Variant::O,
    m: 9,
    n: 36,
    k: 19,
    generator: PRINTED_O36,
    weight_distribution: &[
        (0, 1),
        (8, 444),
        (9, 496),
        (10, 2160),
        (11, 4752),
        (12, 8760),
        (13, 17856),
        (14, 28992),
        (15, 44352),
        (16, 54318),
        (17, 62496),
        (18, 72864),
        (19, 66528),
        (20, 54192),
        (21, 41664),
        (22, 28992),
        (23, 19008),
        (24, 8844),
        (25, 4464),
        (26, 2160),
        (27, 528),
        (28, 408),
        (32, 9),
    ],
};

pub const E36: PublishedCode = PublishedCode {
    name: "e36",
    variant: Variant::E,
    m: 9,
    n: 36,
    k: 19,
    generator: PRINTED_E36,
    weight_distribution: &[
        (0, 1),
        (8, 444),
        (9, 528),
        (10, 2160),
        (11, 4464),
        (12, 8760),
        (13, 19008),
        (14, 28992),
        (15, 41664),
        (16, 54318),
        (17, 66528),
        (18, 72864),
        (19, 62496),
        (20, 54192),
        (21, 44352),
        (22, 28992),
        (23, 17856),
        (24, 8844),
        (25, 4752),
        (26, 2160),
        (27, 496),
        (28, 408),
        (32, 9),
    ],
};

pub const O40: PublishedCode = PublishedCode {
    name: "o40",
    variant: Variant::O,
    m: 10,
    n: 40,
    k: 22,
    generator: PRINTED_O40,
    weight_distribution: &[
        (0, 1),
        (8, 741),
        (10, 6144),
        (12, 42736),
        (14, 176640),
        (16, 484890),
        (18, 849408),
        (20, 1073184),
        (22, 849408),
        (24, 484890),
        (26, 176640),
        (28, 42736),
        (30, 6144),
        (32, 741),
        (40, 1),
    ],
};

pub const E40: PublishedCode = PublishedCode {
    name: "e40",
    variant: Variant::E,
    m: 10,
    n: 40,
    k: 22,
    generator: PRINTED_E40,
    weight_distribution: &[
        (0, 1),
        (8, 741),
        (10, 6208),
        (12, 42096),
        (14, 179520),
        (16, 477210),
        (18, 862848),
        (20, 1057056),
        (22, 862848),
        (24, 477210),
        (26, 179520),
        (28, 42096),
        (30, 6208),
        (32, 741),
        (40, 1),
    ],
};

pub const PUBLISHED: [PublishedCode; 4] = [O36, E36, O40, E40];

/// Weight distribution `A_0 … A_9` of `C4^9`.
pub const C4_9_WEIGHTS: [u64; 10] = [1, 0, 0, 0, 51, 135, 210, 318, 234, 75];

/// Weight distribution `A_0 … A_10` of `C4^10`.
pub const C4_10_WEIGHTS: [u64; 11] = [1, 0, 0, 0, 87, 258, 555, 1020, 1200, 738, 237];

/// A received array and its hand decoding.
#[derive(Clone, Debug)]
pub struct WorkedExample {
    pub name: &'static str,
    pub variant: Variant,
    pub m: usize,
    /// Rows labelled 0, 1, ω, ω̄.
    pub received_rows: [&'static str; 4],
    pub decoded_rows: [&'static str; 4],
    pub branch: Branch,
    /// Syndrome in compact symbol form.
    pub syndrome: &'static str,
    /// 1-based indices of the changed columns.
    pub corrected_columns: Vec<usize>,
    pub error_weight: usize,
}

impl WorkedExample {
    pub fn c4(&self) -> QuaternaryCode {
        if self.m == 9 {
            c4_9()
        } else {
            c4_10()
        }
    }

    pub fn received_array(&self) -> CodewordArray {
        array_from_rows(&self.received_rows)
    }

    pub fn decoded_array(&self) -> CodewordArray {
        array_from_rows(&self.decoded_rows)
    }

    pub fn received(&self) -> BitVector {
        from_array(&self.received_array())
    }

    pub fn decoded(&self) -> BitVector {
        from_array(&self.decoded_array())
    }
}

/// Builds an array from its four rows written as `0`/`1` strings.
pub fn array_from_rows(rows: &[&str; 4]) -> CodewordArray {
    let rows: Vec<Vec<char>> = rows
        .iter()
        .map(|r| r.chars().filter(|c| !c.is_whitespace()).collect())
        .collect();
    let columns = (0..rows[0].len())
        .map(|i| {
            rows.iter()
                .map(|r| r[i])
                .collect::<String>()
                .parse()
                .expect("array entries are bits")
        })
        .collect();
    CodewordArray::from_columns(columns)
}

/// The four hand-worked decodings: `ρ_O(C4^9)`, `ρ_E(C4^9)`, `ρ_O(C4^10)`, `ρ_E(C4^10)`.
pub fn worked_examples() -> Vec<WorkedExample> {
    vec![
        WorkedExample {
            name: "example 1",
            variant: Variant::O,
            m: 9,
            received_rows: ["010101010", "011010011", "110001100", "000010010"],
            decoded_rows: ["010100010", "011010011", "110011100", "000010010"],
            branch: Branch::OneFirstRowOneColumn,
            syndrome: "wwWw",
            corrected_columns: vec![5, 6],
            error_weight: 2,
        },
        WorkedExample {
            name: "example 2",
            variant: Variant::E,
            m: 9,
            received_rows: ["010001010", "011000001", "101001000", "011111110"],
            decoded_rows: ["010001000", "011010001", "101011000", "011111110"],
            branch: Branch::FirstRowPlusDouble,
            syndrome: "WW1W",
            corrected_columns: vec![5, 8],
            error_weight: 3,
        },
        WorkedExample {
            name: "example 3",
            variant: Variant::O,
            m: 10,
            received_rows: ["1010000111", "0010111001", "0010101000", "0101101001"],
            decoded_rows: ["1010000111", "0011111001", "0011101000", "0101101001"],
            branch: Branch::DoubleInColumn,
            syndrome: "000W",
            corrected_columns: vec![4],
            error_weight: 2,
        },
        WorkedExample {
            name: "example 4",
            variant: Variant::E,
            m: 10,
            received_rows: ["0010100100", "1000001110", "0111010101", "1111111010"],
            decoded_rows: ["0000100100", "1000001010", "0111010101", "1111111011"],
            branch: Branch::TwoColumnsOneFirstRow,
            syndrome: "www0",
            corrected_columns: vec![3, 8, 10],
            error_weight: 3,
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn published_matrices_have_stated_shape() {
        for code in PUBLISHED {
            let g = code.generator();
            assert_eq!((g.ncols(), g.nrows()), (code.n, code.k), "{}", code.name);
            assert_eq!(g.rank(), code.k);
            assert_eq!(
                code.weight_counts().iter().sum::<u64>(),
                1 << code.k,
                "{}",
                code.name
            );
        }
    }

    #[test]
    fn decoded_examples_are_codewords() {
        for ex in worked_examples() {
            let code = PUBLISHED
                .iter()
                .find(|c| c.m == ex.m && c.variant == ex.variant)
                .unwrap()
                .code();
            assert!(code.contains(&ex.decoded()), "{}", ex.name);
            assert!(!code.contains(&ex.received()), "{}", ex.name);
            assert_eq!(ex.decoded().distance(&ex.received()), ex.error_weight);
        }
    }
}
