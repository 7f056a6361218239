//! Planted error shapes, one per decoder branch. The branch depends only
//! on the error, so each shape is planted on several codewords.

mod common;

use common::{contexts, sample_codewords};
use projdec::bitlin::BitVector;
use projdec::decoder::Branch;

/// Array cell `(row, column)`, both 0-based; row 0 is the first row.
fn cells(cells: &[(usize, usize)], n: usize) -> BitVector {
    let pos: Vec<usize> = cells.iter().map(|&(r, c)| 4 * c + r).collect();
    BitVector::from_positions(&pos, n)
}

fn planted() -> Vec<(Branch, Vec<(usize, usize)>)> {
    use Branch::*;
    vec![
        (NoError, vec![]),
        (DoubleInColumn, vec![(1, 2), (2, 2)]),
        (DoubleInColumn, vec![(0, 7), (3, 7)]),
        (FirstRowSingle, vec![(0, 3)]),
        (LowerRowsTriple, vec![(1, 3), (2, 3), (3, 3)]),
        (OddColumn, vec![(2, 4)]),
        (OddColumn, vec![(0, 4), (1, 4), (3, 4)]),
        (FirstRowPlusDouble, vec![(0, 1), (1, 5), (2, 5)]),
        (SinglePlusDouble, vec![(1, 1), (1, 5), (2, 5)]),
        (SinglePlusDouble, vec![(3, 8), (0, 0), (2, 0)]),
        (TwoFirstRow, vec![(0, 0), (0, 6)]),
        (OneFirstRowOneColumn, vec![(0, 0), (1, 6)]),
        (TwoColumns, vec![(1, 0), (3, 6)]),
        (ThreeFirstRow, vec![(0, 0), (0, 4), (0, 8)]),
        (OneColumnTwoFirstRow, vec![(2, 0), (0, 4), (0, 8)]),
        (TwoColumnsOneFirstRow, vec![(2, 0), (1, 4), (0, 8)]),
        (ThreeColumns, vec![(1, 0), (2, 4), (3, 8)]),
    ]
}

#[test]
fn every_branch_is_reached_by_its_shape() {
    for (name, ctx) in contexts() {
        let mut hit = Vec::new();
        for c in sample_codewords(&ctx, 5, 21) {
            for (branch, shape) in planted() {
                let e = cells(&shape, ctx.n());
                let d = ctx.decode(&(c ^ e)).unwrap();
                assert_eq!(d.trace.branch, branch, "{name}: {shape:?}");
                assert_eq!(d.codeword, c);
                hit.push(branch);
            }
        }
        for b in Branch::ALL {
            assert!(hit.contains(&b), "{name}: branch {b} never planted");
        }
    }
}

#[test]
fn branch_labels_serialize_as_step_labels() {
    for b in Branch::ALL {
        let json = serde_json::to_string(&b).unwrap();
        assert_eq!(json, format!("\"{}\"", b.label()));
        assert_eq!(serde_json::from_str::<Branch>(&json).unwrap(), b);
    }
}
