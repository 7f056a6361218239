//! Additive codes over GF(4) with a GF(4) parity-check matrix, and the two
//! codes `C4^9` (a `(9, 2^10)` code) and `C4^10` (a `(10, 2^12)` code).
//!
//! Syndromes use the plain product `s_j = Σ_i H[j][i]·y_i`. Both shipped
//! codes are GF(4)-linear with minimum distance 4, so any three columns of
//! `H` are linearly independent and the column solvers below return at most
//! one solution.

use std::fmt;

use crate::bitlin::WeightDistribution;
use crate::gf4::{packed_weight, parse_matrix, Gf4, Gf4Vector};
use crate::Error;

/// Largest GF(2) dimension `r` for which all `2^r` codewords are enumerated.
pub const MAX_QUAT_ENUM_DIMENSION: usize = 12;

const C4_9_GENERATOR: &str = "
1 0 0 0 0 W 1 1 1
w 0 0 0 0 1 w w w
0 1 0 0 0 1 w W 0
0 w 0 0 0 w W 1 0
0 0 1 0 0 0 1 w W
0 0 w 0 0 0 w W 1
0 0 0 1 0 W W 0 1
0 0 0 w 0 1 1 0 w
0 0 0 0 1 1 w 1 1
0 0 0 0 w w W w w
";

const C4_9_PARITY_CHECK: &str = "
1 0 0 0 1 1 W 0 1
0 1 0 0 1 0 w W 1
0 0 1 0 w W 1 w 1
0 0 0 1 1 W 0 1 W
";

const C4_10_GENERATOR: &str = "
1 0 0 0 0 0 w 0 w W
w 0 0 0 0 0 W 0 W 1
0 1 0 0 0 0 W 1 1 1
0 w 0 0 0 0 1 w w w
0 0 1 0 0 0 1 w W 0
0 0 w 0 0 0 w W 1 0
0 0 0 1 0 0 0 1 w W
0 0 0 w 0 0 0 w W 1
0 0 0 0 1 0 W W 0 1
0 0 0 0 w 0 1 1 0 w
0 0 0 0 0 1 1 w 1 1
0 0 0 0 0 w w W w w
";

const C4_10_PARITY_CHECK: &str = "
1 0 0 0 1 1 W 0 1 W
0 1 0 0 1 0 w W 1 w
0 0 1 0 w W 1 w 1 0
0 0 0 1 1 W 0 1 W w
";

/// Syndrome of a GF(4) word, one entry per parity-check row.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuatSyndrome(Gf4Vector);

impl QuatSyndrome {
    pub fn new(entries: Gf4Vector) -> Self {
        QuatSyndrome(entries)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn entries(&self) -> &Gf4Vector {
        &self.0
    }

    /// Symbols without separators, e.g. `wwWw`.
    pub fn compact(&self) -> String {
        self.0.iter().map(|a| a.symbol()).collect()
    }
}

impl fmt::Display for QuatSyndrome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            self.0
                .iter()
                .map(|a| a.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// An additive `(m, 2^r)` code over GF(4) together with a parity-check
/// matrix whose kernel is exactly the code.
#[derive(Clone, Debug)]
pub struct QuaternaryCode {
    m: usize,
    generators: Vec<Gf4Vector>,
    parity_check: Vec<Gf4Vector>,
    columns: Vec<Gf4Vector>,
    packed_generators: Vec<u64>,
    /// `scaled_columns[i][e]` is `e·H_i`, packed.
    scaled_columns: Vec<[u64; 4]>,
}

impl QuaternaryCode {
    /// Checks that every generator lies in the kernel of `H`, that the
    /// generators are GF(2)-independent, and that the kernel of `H` has
    /// exactly `2^r` words.
    pub fn new(generators: Vec<Gf4Vector>, parity_check: Vec<Gf4Vector>) -> Result<Self, Error> {
        let m = parity_check
            .first()
            .map(|r| r.len())
            .ok_or_else(|| Error::InvalidArgument("empty parity-check matrix".into()))?;
        if m > 32 {
            return Err(Error::TooLong { len: m, max: 32 });
        }
        if parity_check.len() > 32 {
            return Err(Error::TooLong {
                len: parity_check.len(),
                max: 32,
            });
        }
        for row in parity_check.iter().chain(&generators) {
            if row.len() != m {
                return Err(Error::LengthMismatch {
                    expected: m,
                    found: row.len(),
                });
            }
        }
        let columns: Vec<Gf4Vector> = (0..m)
            .map(|i| parity_check.iter().map(|row| row[i]).collect())
            .collect();
        let scaled_columns = columns
            .iter()
            .map(|col| Gf4::ALL.map(|e| col.scale(e).pack()))
            .collect();
        let code = QuaternaryCode {
            m,
            packed_generators: generators.iter().map(Gf4Vector::pack).collect(),
            generators,
            parity_check,
            columns,
            scaled_columns,
        };

        for (i, g) in code.generators.iter().enumerate() {
            if !code.syndrome_unchecked(g).is_zero() {
                return Err(Error::SelfCheck(format!(
                    "generator row {} has nonzero syndrome",
                    i + 1
                )));
            }
        }
        let r = gf2_rank(&code.packed_generators);
        if r != code.generators.len() {
            return Err(Error::RankDeficient {
                expected: code.generators.len(),
                found: r,
            });
        }
        let h_rank = gf4_rank(&code.parity_check);
        if 2 * (m - h_rank) != r {
            return Err(Error::SelfCheck(format!(
                "parity-check kernel has 2^{} words but the code has 2^{r}",
                2 * (m - h_rank)
            )));
        }
        Ok(code)
    }

    /// Parses generator and parity-check matrices in the `0/1/w/W` text form.
    pub fn from_text(generator: &str, parity_check: &str) -> Result<Self, Error> {
        QuaternaryCode::new(parse_matrix(generator)?, parse_matrix(parity_check)?)
    }

    /// Length.
    pub fn m(&self) -> usize {
        self.m
    }

    /// GF(2) dimension: the code has `2^r` words.
    pub fn r(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[Gf4Vector] {
        &self.generators
    }

    pub fn parity_check(&self) -> &[Gf4Vector] {
        &self.parity_check
    }

    /// Column `i` of `H` (0-based).
    pub fn column(&self, i: usize) -> &Gf4Vector {
        &self.columns[i]
    }

    /// Whether generator row `2j+1` equals `ω` times row `2j` for every pair.
    pub fn has_omega_pairing(&self) -> bool {
        self.generators.len().is_multiple_of(2)
            && self
                .generators
                .chunks(2)
                .all(|pair| pair[1] == pair[0].scale(Gf4::Omega))
    }

    /// `e·H_i`, packed.
    #[inline]
    pub(crate) fn scaled_column(&self, i: usize, e: Gf4) -> u64 {
        self.scaled_columns[i][e.bits() as usize]
    }

    fn syndrome_unchecked(&self, y: &Gf4Vector) -> QuatSyndrome {
        QuatSyndrome(Gf4Vector::unpack(
            self.syndrome_packed(y),
            self.parity_check.len(),
        ))
    }

    #[inline]
    fn syndrome_packed(&self, y: &[Gf4]) -> u64 {
        y.iter()
            .zip(&self.scaled_columns)
            .fold(0, |acc, (a, col)| acc ^ col[a.bits() as usize])
    }

    /// `s = y·Hᵀ`.
    pub fn syndrome(&self, y: &Gf4Vector) -> Result<QuatSyndrome, Error> {
        if y.len() != self.m {
            return Err(Error::LengthMismatch {
                expected: self.m,
                found: y.len(),
            });
        }
        Ok(self.syndrome_unchecked(y))
    }

    pub fn contains(&self, y: &Gf4Vector) -> bool {
        y.len() == self.m && self.syndrome_packed(y) == 0
    }

    /// The unique `(i, e)` with `s = e·H_i` and `e ≠ 0`, if any.
    pub fn match_single_column(&self, s: &QuatSyndrome) -> Option<(usize, Gf4)> {
        let target = s.0.pack();
        if target == 0 {
            return None;
        }
        self.scaled_columns.iter().enumerate().find_map(|(i, col)| {
            Gf4::NONZERO
                .into_iter()
                .find(|e| col[e.bits() as usize] == target)
                .map(|e| (i, e))
        })
    }

    /// Coefficients (zeros allowed) on at most three given columns whose
    /// combination equals `s`, searching all `4^|columns|` assignments.
    ///
    /// Panics if more than three columns are given.
    pub fn solve_columns(&self, s: &QuatSyndrome, columns: &[usize]) -> Option<Vec<(usize, Gf4)>> {
        assert!(
            columns.len() <= 3,
            "column solver handles at most three columns"
        );
        let target = s.0.pack();
        let k = columns.len();
        (0u32..1 << (2 * k)).find_map(|assignment| {
            let coeffs: Vec<Gf4> = (0..k)
                .map(|t| Gf4::from_bits((assignment >> (2 * t)) as u8))
                .collect();
            let sum = columns.iter().zip(&coeffs).fold(0, |acc, (&i, e)| {
                acc ^ self.scaled_columns[i][e.bits() as usize]
            });
            (sum == target).then(|| columns.iter().copied().zip(coeffs).collect())
        })
    }

    fn check_budget(&self) -> Result<(), Error> {
        if self.r() > MAX_QUAT_ENUM_DIMENSION {
            return Err(Error::BudgetExceeded {
                what: "additive code dimension",
                value: self.r(),
                limit: MAX_QUAT_ENUM_DIMENSION,
            });
        }
        Ok(())
    }

    /// All `2^r` codewords, packed two bits per entry, in Gray-code order.
    pub fn packed_codewords(&self) -> Result<impl Iterator<Item = u64> + '_, Error> {
        self.check_budget()?;
        let mut current = 0u64;
        Ok((0u64..1 << self.r()).map(move |i| {
            if i > 0 {
                current ^= self.packed_generators[i.trailing_zeros() as usize];
            }
            current
        }))
    }

    pub fn codewords(&self) -> Result<impl Iterator<Item = Gf4Vector> + '_, Error> {
        let m = self.m;
        Ok(self
            .packed_codewords()?
            .map(move |c| Gf4Vector::unpack(c, m)))
    }

    pub fn weight_distribution(&self) -> Result<WeightDistribution, Error> {
        let mut counts = vec![0u64; self.m + 1];
        for c in self.packed_codewords()? {
            counts[packed_weight(c) as usize] += 1;
        }
        Ok(WeightDistribution::new(counts))
    }

    pub fn min_distance(&self) -> Result<usize, Error> {
        Ok(self.weight_distribution()?.min_distance().unwrap_or(0))
    }
}

/// The `(9, 2^10)` code `C4^9`.
pub fn c4_9() -> QuaternaryCode {
    shipped(C4_9_GENERATOR, C4_9_PARITY_CHECK, "C4^9")
}

/// The `(10, 2^12)` code `C4^10`.
pub fn c4_10() -> QuaternaryCode {
    shipped(C4_10_GENERATOR, C4_10_PARITY_CHECK, "C4^10")
}

fn shipped(generator: &str, parity_check: &str, name: &str) -> QuaternaryCode {
    let code = QuaternaryCode::from_text(generator, parity_check)
        .unwrap_or_else(|e| panic!("{name} data is inconsistent: {e}"));
    assert!(
        code.has_omega_pairing(),
        "{name} generator rows are not ω-paired"
    );
    code
}

pub fn syndrome(code: &QuaternaryCode, y: &Gf4Vector) -> Result<QuatSyndrome, Error> {
    code.syndrome(y)
}

pub fn match_single_column(code: &QuaternaryCode, s: &QuatSyndrome) -> Option<(usize, Gf4)> {
    code.match_single_column(s)
}

pub fn solve_columns(
    code: &QuaternaryCode,
    s: &QuatSyndrome,
    columns: &[usize],
) -> Option<Vec<(usize, Gf4)>> {
    code.solve_columns(s, columns)
}

pub fn quat_weight_distribution(code: &QuaternaryCode) -> Result<WeightDistribution, Error> {
    code.weight_distribution()
}

fn gf2_rank(rows: &[u64]) -> usize {
    let mut basis: Vec<u64> = Vec::new();
    for &row in rows {
        let reduced = basis.iter().fold(row, |v, &b| v.min(v ^ b));
        if reduced != 0 {
            basis.push(reduced);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis.len()
}

fn gf4_rank(rows: &[Gf4Vector]) -> usize {
    let mut rows: Vec<Vec<Gf4>> = rows.iter().map(|r| r.to_vec()).collect();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][col].inv().expect("pivot is nonzero");
        let pivot: Vec<Gf4> = rows[rank].iter().map(|&a| a * inv).collect();
        for (r, row) in rows.iter_mut().enumerate() {
            let factor = row[col];
            if r != rank && !factor.is_zero() {
                for (a, &b) in row.iter_mut().zip(&pivot) {
                    *a += factor * b;
                }
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;
    use Gf4::*;

    fn v(s: &str) -> Gf4Vector {
        s.parse().unwrap()
    }

    fn syn(s: &str) -> QuatSyndrome {
        QuatSyndrome::new(v(s))
    }

    #[test]
    fn shipped_codes_have_expected_shape() {
        let c9 = c4_9();
        assert_eq!((c9.m(), c9.r()), (9, 10));
        assert_eq!(c9.generators()[0], v("1 0 0 0 0 W 1 1 1"));
        let c10 = c4_10();
        assert_eq!((c10.m(), c10.r()), (10, 12));
        assert_eq!(c10.column(4), &v("1 1 w 1"));
        assert_eq!(c10.column(9), &v("W w 0 w"));
    }

    #[test]
    fn worked_syndromes() {
        let c9 = c4_9();
        assert_eq!(
            c9.syndrome(&v("w W 1 0 w w w w 1")).unwrap(),
            syn("w w W w")
        );
        let c10 = c4_10();
        assert_eq!(
            c10.syndrome(&v("w 1 1 1 W 1 w W w w")).unwrap(),
            syn("w w w 0")
        );
        for g in c9.generators() {
            assert!(c9.syndrome(g).unwrap().is_zero());
        }
        assert!(c9.syndrome(&v("0 0 0")).is_err());
    }

    #[test]
    fn single_column_matches() {
        assert_eq!(
            c4_9().match_single_column(&syn("w w W w")),
            Some((4, Omega))
        );
        assert_eq!(
            c4_10().match_single_column(&syn("0 0 0 W")),
            Some((3, OmegaBar))
        );
        assert_eq!(c4_9().match_single_column(&syn("0 0 0 0")), None);
    }

    #[test]
    fn three_column_solve() {
        let c10 = c4_10();
        let sol = c10.solve_columns(&syn("w w w 0"), &[2, 7, 9]).unwrap();
        assert_eq!(sol, vec![(2, Zero), (7, One), (9, OmegaBar)]);
        let zero = c10.solve_columns(&syn("0 0 0 0"), &[0, 5, 8]).unwrap();
        assert!(zero.iter().all(|(_, e)| e.is_zero()));
        // a weight-4 syndrome cannot be explained by three columns
        let four = c10
            .column(0)
            .try_add(c10.column(1))
            .unwrap()
            .try_add(c10.column(2))
            .unwrap();
        let four = four.try_add(c10.column(3)).unwrap();
        assert_eq!(
            c10.solve_columns(&QuatSyndrome::new(four), &[0, 1, 2]),
            None
        );
    }

    #[test]
    fn solvers_agree_on_single_columns() {
        for code in [c4_9(), c4_10()] {
            for i in 0..code.m() {
                for e in Gf4::NONZERO {
                    let s = QuatSyndrome::new(code.column(i).scale(e));
                    assert_eq!(code.match_single_column(&s), Some((i, e)));
                    assert_eq!(code.solve_columns(&s, &[i]), Some(vec![(i, e)]));
                }
            }
        }
    }

    #[test]
    fn any_three_columns_are_independent() {
        for code in [c4_9(), c4_10()] {
            let m = code.m();
            for i in 0..m {
                for j in i + 1..m {
                    for k in j + 1..m {
                        for a in Gf4::NONZERO {
                            for b in Gf4::ALL {
                                for c in Gf4::ALL {
                                    let sum = code
                                        .column(i)
                                        .scale(a)
                                        .try_add(&code.column(j).scale(b))
                                        .unwrap()
                                        .try_add(&code.column(k).scale(c))
                                        .unwrap();
                                    assert!(!sum.is_zero(), "columns {i},{j},{k}");
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn weight_distributions() {
        let wd9 = c4_9().weight_distribution().unwrap();
        assert_eq!(wd9.counts(), &[1, 0, 0, 0, 51, 135, 210, 318, 234, 75]);
        let wd10 = c4_10().weight_distribution().unwrap();
        assert_eq!(
            wd10.counts(),
            &[1, 0, 0, 0, 87, 258, 555, 1020, 1200, 738, 237]
        );
        assert_eq!(wd9.total(), 1 << 10);
        assert_eq!(wd10.total(), 1 << 12);
        assert_eq!(c4_9().min_distance().unwrap(), 4);
        assert_eq!(c4_10().min_distance().unwrap(), 4);
    }

    #[test]
    fn codes_are_gf4_linear() {
        for code in [c4_9(), c4_10()] {
            assert!(code.has_omega_pairing());
            for c in code.codewords().unwrap() {
                assert!(code.contains(&c.scale(Omega)));
            }
        }
    }

    #[test]
    fn odd_rows_span_the_same_code_over_gf4() {
        for code in [c4_9(), c4_10()] {
            let odd: Vec<&Gf4Vector> = code.generators().iter().step_by(2).collect();
            let mut span = HashSet::new();
            let n = odd.len();
            for coeffs in 0u32..1 << (2 * n) {
                let mut acc = Gf4Vector::zeros(code.m());
                for (t, row) in odd.iter().enumerate() {
                    acc = acc
                        .try_add(&row.scale(Gf4::from_bits((coeffs >> (2 * t)) as u8)))
                        .unwrap();
                }
                span.insert(acc.pack());
            }
            let additive: HashSet<u64> = code.packed_codewords().unwrap().collect();
            assert_eq!(span, additive);
        }
    }

    #[test]
    fn construction_rejects_bad_data() {
        // flip one symbol of the first generator row
        let corrupted = C4_9_GENERATOR.replacen("1 0 0 0 0 W 1 1 1", "1 0 0 0 0 W 1 1 w", 1);
        assert!(matches!(
            QuaternaryCode::from_text(&corrupted, C4_9_PARITY_CHECK),
            Err(Error::SelfCheck(_))
        ));
        // dropping generators leaves the kernel of H bigger than the code
        let truncated: String = C4_9_GENERATOR
            .lines()
            .take(5)
            .collect::<Vec<_>>()
            .join("\n");
        assert!(matches!(
            QuaternaryCode::from_text(&truncated, C4_9_PARITY_CHECK),
            Err(Error::SelfCheck(_))
        ));
        let doubled = format!("{C4_9_GENERATOR}\n1 0 0 0 0 W 1 1 1\n");
        assert!(matches!(
            QuaternaryCode::from_text(&doubled, C4_9_PARITY_CHECK),
            Err(Error::RankDeficient { .. })
        ));
    }

    #[test]
    fn enumeration_budget() {
        // 13 independent rows of the length-10 kernel do not exist, so build
        // a long code instead: identity-like rows over 14 coordinates.
        let m = 14;
        let gens: Vec<Gf4Vector> = (0..m)
            .flat_map(|i| {
                let mut a = Gf4Vector::zeros(m);
                a.set(i, One);
                [a.clone(), a.scale(Omega)]
            })
            .collect();
        let h = vec![Gf4Vector::zeros(m)];
        let code = QuaternaryCode::new(gens, h).unwrap();
        assert!(matches!(
            code.weight_distribution(),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
