use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::One;

use super::{invariant_factors, IntMatrix};

/// Column-major sparse integer matrix, used for simplicial boundary maps.
#[derive(Clone, Debug, Default)]
pub struct SparseIntMatrix {
    rows: usize,
    columns: Vec<BTreeMap<usize, i64>>,
}

impl SparseIntMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        Self { rows, columns: vec![BTreeMap::new(); cols] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    /// Adds `value` to the entry at `(row, col)`.
    pub fn add_entry(&mut self, row: usize, col: usize, value: i64) {
        assert!(row < self.rows, "row {row} out of range");
        let e = self.columns[col].entry(row).or_insert(0);
        *e += value;
        if *e == 0 {
            self.columns[col].remove(&row);
        }
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(BTreeMap::len).sum()
    }

    pub fn to_dense(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.rows, self.cols());
        for (c, col) in self.columns.iter().enumerate() {
            for (&r, &v) in col {
                m.set(r, c, BigInt::from(v));
            }
        }
        m
    }

    /// Nonzero invariant factors. Unit pivots are eliminated sparsely in
    /// machine integers; whatever is left is finished densely in `BigInt`.
    /// Any overflow restarts the whole computation densely.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        match self.eliminate_units() {
            Some((units, rest)) => {
                let mut out = vec![BigInt::one(); units];
                out.extend(invariant_factors(&rest));
                out
            }
            None => invariant_factors(&self.to_dense()),
        }
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }

    fn eliminate_units(&self) -> Option<(usize, IntMatrix)> {
        let mut cols = self.columns.clone();
        let mut row_index: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); self.rows];
        for (c, col) in cols.iter().enumerate() {
            for &r in col.keys() {
                row_index[r].insert(c);
            }
        }
        let mut alive = vec![true; cols.len()];
        let mut units = 0;
        loop {
            let mut progressed = false;
            for c in 0..cols.len() {
                if !alive[c] {
                    continue;
                }
                let Some((r, p)) = cols[c]
                    .iter()
                    .filter(|(_, v)| v.abs() == 1)
                    .min_by_key(|(r, _)| row_index[**r].len())
                    .map(|(&r, &v)| (r, v))
                else {
                    continue;
                };
                let others: Vec<usize> = row_index[r].iter().copied().filter(|&o| o != c).collect();
                let pivot_col = cols[c].clone();
                for o in others {
                    let f = cols[o][&r].checked_mul(p)?;
                    for (&pr, &pv) in &pivot_col {
                        let delta = pv.checked_mul(f)?;
                        let e = cols[o].entry(pr).or_insert(0);
                        *e = e.checked_sub(delta)?;
                        if *e == 0 {
                            cols[o].remove(&pr);
                            row_index[pr].remove(&o);
                        } else {
                            row_index[pr].insert(o);
                        }
                    }
                }
                for &pr in pivot_col.keys() {
                    row_index[pr].remove(&c);
                }
                cols[c].clear();
                alive[c] = false;
                units += 1;
                progressed = true;
            }
            if !progressed {
                break;
            }
        }
        let live: Vec<usize> = (0..cols.len()).filter(|&c| alive[c] && !cols[c].is_empty()).collect();
        let live_rows: Vec<usize> = (0..self.rows).filter(|&r| !row_index[r].is_empty()).collect();
        let mut rest = IntMatrix::zeros(live_rows.len(), live.len());
        for (j, &c) in live.iter().enumerate() {
            for (&r, &v) in &cols[c] {
                let i = live_rows.binary_search(&r).expect("row tracked");
                rest.set(i, j, BigInt::from(v));
            }
        }
        Some((units, rest))
    }
}
