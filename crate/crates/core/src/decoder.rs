//! Projection decoding: correct up to three bit errors in a code with
//! projection O or E by decoding the projected word in the short GF(4) code.
//!
//! Errors are located from two independent pieces of information:
//!
//! * the columns whose parity differs from the majority carry an odd number
//!   of errors, so with at most three errors there are `p ≤ 3` of them;
//! * the GF(4) syndrome `s = Proj(y)·Hᵀ` is a combination of at most three
//!   columns of `H`, and any three columns are independent, so the
//!   combination is unique.
//!
//! An error on the first row of the array leaves the projection unchanged,
//! and so does a triple error on rows 2–4 of one column. Both are
//! recovered from the first-row parity, which a codeword fixes: it equals
//! the column parity for variant O and is even for variant E.
//!
//! The decision tree is labelled by the number `p` of minority columns:
//!
//! | label   | `p` | situation |
//! |---------|-----|-----------|
//! | `a.i`   | 0 | no error |
//! | `a.ii`  | 0 | two errors in one column |
//! | `b.i.1` | 1 | one error on the first row of the odd column |
//! | `b.i.2` | 1 | three errors on rows 2–4 of the odd column |
//! | `b.ii`  | 1 | one or three errors in the odd column, projection changed |
//! | `b.iii` | 1 | first-row error in the odd column, two errors in another |
//! | `b.iv`  | 1 | non-first-row error in the odd column, two errors in another |
//! | `c.i`   | 2 | first-row errors in both odd columns |
//! | `c.ii`  | 2 | one first-row error, one error changing the projection |
//! | `c.iii` | 2 | both errors change the projection |
//! | `d.i`–`d.iv` | 3 | zero to three of the single errors change the projection |

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitlin::{BinaryLinearCode, BitVector};
use crate::gf4::Gf4;
use crate::projection::{
    construct, from_array, satisfies_projection, select_candidate, to_array, CodewordArray, Column,
    Parity, ParityProfile, Variant,
};
use crate::quaternary::{QuatSyndrome, QuaternaryCode};
use crate::Error as CodeError;

/// Largest number of bit errors the decoder corrects.
pub const CORRECTION_RADIUS: usize = 3;

/// Leaf of the decision tree that produced a correction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Branch {
    #[serde(rename = "a.i")]
    NoError,
    #[serde(rename = "a.ii")]
    DoubleInColumn,
    #[serde(rename = "b.i.1")]
    FirstRowSingle,
    #[serde(rename = "b.i.2")]
    LowerRowsTriple,
    #[serde(rename = "b.ii")]
    OddColumn,
    #[serde(rename = "b.iii")]
    FirstRowPlusDouble,
    #[serde(rename = "b.iv")]
    SinglePlusDouble,
    #[serde(rename = "c.i")]
    TwoFirstRow,
    #[serde(rename = "c.ii")]
    OneFirstRowOneColumn,
    #[serde(rename = "c.iii")]
    TwoColumns,
    #[serde(rename = "d.i")]
    ThreeFirstRow,
    #[serde(rename = "d.ii")]
    OneColumnTwoFirstRow,
    #[serde(rename = "d.iii")]
    TwoColumnsOneFirstRow,
    #[serde(rename = "d.iv")]
    ThreeColumns,
}

impl Branch {
    pub const ALL: [Branch; 14] = [
        Branch::NoError,
        Branch::DoubleInColumn,
        Branch::FirstRowSingle,
        Branch::LowerRowsTriple,
        Branch::OddColumn,
        Branch::FirstRowPlusDouble,
        Branch::SinglePlusDouble,
        Branch::TwoFirstRow,
        Branch::OneFirstRowOneColumn,
        Branch::TwoColumns,
        Branch::ThreeFirstRow,
        Branch::OneColumnTwoFirstRow,
        Branch::TwoColumnsOneFirstRow,
        Branch::ThreeColumns,
    ];

    pub const fn label(self) -> &'static str {
        match self {
            Branch::NoError => "a.i",
            Branch::DoubleInColumn => "a.ii",
            Branch::FirstRowSingle => "b.i.1",
            Branch::LowerRowsTriple => "b.i.2",
            Branch::OddColumn => "b.ii",
            Branch::FirstRowPlusDouble => "b.iii",
            Branch::SinglePlusDouble => "b.iv",
            Branch::TwoFirstRow => "c.i",
            Branch::OneFirstRowOneColumn => "c.ii",
            Branch::TwoColumns => "c.iii",
            Branch::ThreeFirstRow => "d.i",
            Branch::OneColumnTwoFirstRow => "d.ii",
            Branch::TwoColumnsOneFirstRow => "d.iii",
            Branch::ThreeColumns => "d.iv",
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Branch {
    type Err = CodeError;

    fn from_str(s: &str) -> Result<Self, CodeError> {
        Branch::ALL
            .into_iter()
            .find(|b| b.label() == s)
            .ok_or_else(|| CodeError::Parse(format!("unknown branch label {s:?}")))
    }
}

/// A replaced column (0-based index).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Correction {
    pub column: usize,
    pub old: Column,
    pub new: Column,
}

impl Correction {
    pub fn flips(&self) -> u32 {
        self.old.distance(self.new)
    }
}

/// What the decoder saw and did for one received word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecodeTrace {
    pub profile: ParityProfile,
    pub syndrome: QuatSyndrome,
    pub branch: Branch,
    pub corrections: Vec<Correction>,
    pub error_weight: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decoded {
    pub codeword: BitVector,
    pub error: BitVector,
    pub trace: DecodeTrace,
}

impl Decoded {
    pub fn received(&self) -> BitVector {
        self.codeword ^ self.error
    }

    /// Received and decoded arrays, corrected entries marked with `*`.
    pub fn render_trace(&self) -> String {
        let before = to_array(&self.received()).expect("length is a multiple of 4");
        let after = to_array(&self.codeword).expect("length is a multiple of 4");
        let t = &self.trace;
        format!(
            "received:\n{}\np = {} (odd columns: {}, even columns: {}), first row {}\nsyndrome s = {}\nbranch {}, {} error(s)\n\ndecoded:\n{}",
            before.render(),
            t.profile.p,
            t.profile.odd_count,
            t.profile.even_count,
            t.profile.first_row_parity,
            t.syndrome,
            t.branch,
            t.error_weight,
            after.render_against(&before),
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DecodeFailure {
    #[error("received word has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
    /// More than three minority columns, or no majority parity at all.
    #[error("column parities are inconsistent with at most three errors (p = {p})")]
    ParityInconsistent { p: usize },
    #[error("no correction of weight at most 3 is consistent with the received word")]
    Uncorrectable,
}

impl DecodeFailure {
    pub fn reason(&self) -> &'static str {
        match self {
            DecodeFailure::LengthMismatch { .. } => "length-mismatch",
            DecodeFailure::ParityInconsistent { .. } => "parity-inconsistent",
            DecodeFailure::Uncorrectable => "uncorrectable",
        }
    }
}

pub type DecodeOutcome = Result<Decoded, DecodeFailure>;

/// A binary code with projection O or E onto `C4`, ready to decode.
#[derive(Clone, Debug)]
pub struct DecoderContext {
    c4: QuaternaryCode,
    variant: Variant,
    code: BinaryLinearCode,
}

/// Planned change to one column.
#[derive(Clone, Copy, Debug)]
enum Step {
    /// Error on the first row only.
    FlipFirst(usize),
    /// Single error off the first row: nearest column with the new value.
    Nearest(usize, Gf4),
    /// New value; the first bit is fixed by the first-row rule. Applied last.
    FirstRowRule(usize, Gf4),
}

impl DecoderContext {
    /// Builds the binary code by the construction matching `variant`.
    pub fn new(c4: QuaternaryCode, variant: Variant) -> Result<Self, CodeError> {
        let code = construct(&c4, variant)?;
        Ok(DecoderContext { c4, variant, code })
    }

    pub fn c4(&self) -> &QuaternaryCode {
        &self.c4
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn code(&self) -> &BinaryLinearCode {
        &self.code
    }

    pub fn n(&self) -> usize {
        self.code.n()
    }

    pub fn decode(&self, y: &BitVector) -> DecodeOutcome {
        if y.len() != self.n() {
            return Err(DecodeFailure::LengthMismatch {
                expected: self.n(),
                found: y.len(),
            });
        }
        let received = to_array(y).expect("length is a multiple of 4");
        let profile = received.parity_profile();
        let target = match profile.majority() {
            Some(parity) if profile.p <= CORRECTION_RADIUS => parity,
            _ => return Err(DecodeFailure::ParityInconsistent { p: profile.p }),
        };
        let first_row = self.variant.expected_first_row(target);
        let ybar = received.project();
        let syndrome = self.c4.syndrome(&ybar).expect("projection has length m");
        let minority = profile.minority_columns();
        let shifted = |i: usize, e: Gf4| ybar[i] + e;

        let (branch, steps) = match *minority.as_slice() {
            [] => {
                if syndrome.is_zero() {
                    (Branch::NoError, vec![])
                } else {
                    let (i, e) = self
                        .c4
                        .match_single_column(&syndrome)
                        .ok_or(DecodeFailure::Uncorrectable)?;
                    (
                        Branch::DoubleInColumn,
                        vec![Step::FirstRowRule(i, shifted(i, e))],
                    )
                }
            }
            [i] => {
                if syndrome.is_zero() {
                    let branch = if profile.first_row_parity != first_row {
                        Branch::FirstRowSingle
                    } else {
                        Branch::LowerRowsTriple
                    };
                    (branch, vec![Step::FirstRowRule(i, ybar[i])])
                } else if let Some((j, e)) = self.c4.match_single_column(&syndrome) {
                    if j == i {
                        (
                            Branch::OddColumn,
                            vec![Step::FirstRowRule(i, shifted(i, e))],
                        )
                    } else {
                        (
                            Branch::FirstRowPlusDouble,
                            vec![Step::FlipFirst(i), Step::FirstRowRule(j, shifted(j, e))],
                        )
                    }
                } else {
                    let (ei, j, ej) = (0..self.c4.m())
                        .filter(|&j| j != i)
                        .find_map(|j| match self.c4.solve_columns(&syndrome, &[i, j])?[..] {
                            [(_, ei), (_, ej)] if !ei.is_zero() && !ej.is_zero() => {
                                Some((ei, j, ej))
                            }
                            _ => None,
                        })
                        .ok_or(DecodeFailure::Uncorrectable)?;
                    (
                        Branch::SinglePlusDouble,
                        vec![
                            Step::Nearest(i, shifted(i, ei)),
                            Step::FirstRowRule(j, shifted(j, ej)),
                        ],
                    )
                }
            }
            _ => {
                let coeffs = self
                    .c4
                    .solve_columns(&syndrome, &minority)
                    .ok_or(DecodeFailure::Uncorrectable)?;
                let nonzero = coeffs.iter().filter(|(_, e)| !e.is_zero()).count();
                let branch = match (minority.len(), nonzero) {
                    (2, 0) => Branch::TwoFirstRow,
                    (2, 1) => Branch::OneFirstRowOneColumn,
                    (2, _) => Branch::TwoColumns,
                    (_, 0) => Branch::ThreeFirstRow,
                    (_, 1) => Branch::OneColumnTwoFirstRow,
                    (_, 2) => Branch::TwoColumnsOneFirstRow,
                    _ => Branch::ThreeColumns,
                };
                let steps = coeffs
                    .into_iter()
                    .map(|(i, e)| {
                        if e.is_zero() {
                            Step::FlipFirst(i)
                        } else {
                            Step::Nearest(i, shifted(i, e))
                        }
                    })
                    .collect();
                (branch, steps)
            }
        };

        let corrected = self.apply(&received, &steps, target, first_row);
        let corrections: Vec<Correction> = received
            .columns()
            .iter()
            .zip(corrected.columns())
            .enumerate()
            .filter(|(_, (old, new))| old != new)
            .map(|(column, (&old, &new))| Correction { column, old, new })
            .collect();
        let error_weight = corrections.iter().map(|c| c.flips() as usize).sum();
        let codeword = from_array(&corrected);
        if error_weight > CORRECTION_RADIUS
            || !satisfies_projection(&corrected, &self.c4, self.variant)
            || !self.code.contains(&codeword)
        {
            return Err(DecodeFailure::Uncorrectable);
        }
        Ok(Decoded {
            codeword,
            error: codeword ^ *y,
            trace: DecodeTrace {
                profile,
                syndrome,
                branch,
                corrections,
                error_weight,
            },
        })
    }

    fn apply(
        &self,
        received: &CodewordArray,
        steps: &[Step],
        target: Parity,
        first_row: Parity,
    ) -> CodewordArray {
        let mut out = received.clone();
        for step in steps {
            match *step {
                Step::FlipFirst(i) => out.flip_first(i),
                Step::Nearest(i, value) => {
                    let current = out.column(i);
                    let best = [false, true]
                        .map(|first| select_candidate(value, target, first))
                        .into_iter()
                        .min_by_key(|c| c.distance(current))
                        .expect("two candidates");
                    out.set_column(i, best);
                }
                Step::FirstRowRule(..) => {}
            }
        }
        for step in steps {
            if let Step::FirstRowRule(i, value) = *step {
                out = apply_column_correction(&out, i, value, target, first_row);
            }
        }
        out
    }
}

/// Replaces column `i` by the member of `value`'s coset with parity
/// `target_parity` whose first bit makes the array's first-row parity
/// equal to `expected_first_row`.
pub fn apply_column_correction(
    a: &CodewordArray,
    i: usize,
    value: Gf4,
    target_parity: Parity,
    expected_first_row: Parity,
) -> CodewordArray {
    let others = a.first_row_parity() ^ Parity::of(usize::from(a.column(i).first_bit()));
    let first_bit = (others ^ expected_first_row).is_odd();
    let mut out = a.clone();
    out.set_column(i, select_candidate(value, target_parity, first_bit));
    out
}

pub fn decode(ctx: &DecoderContext, y: &BitVector) -> DecodeOutcome {
    ctx.decode(y)
}
