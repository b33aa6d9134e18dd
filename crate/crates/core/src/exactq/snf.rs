use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// `d = u * a * v` with `u`, `v` unimodular and `d` diagonal, `d_1 | d_2 | ...`.
#[derive(Clone, Debug)]
pub struct Smith {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl Smith {
    /// The diagonal of `d` (length `min(rows, cols)`).
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols())).map(|i| self.d.get(i, i).clone()).collect()
    }
}

struct Work {
    a: Vec<Vec<BigInt>>,
    u: Option<Vec<Vec<BigInt>>>,
    // Stored transposed so column operations are row operations.
    vt: Option<Vec<Vec<BigInt>>>,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap(i, j);
        if let Some(u) = &mut self.u {
            u.swap(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for row in &mut self.a {
            row.swap(i, j);
        }
        if let Some(vt) = &mut self.vt {
            vt.swap(i, j);
        }
    }

    /// row[dst] -= q * row[src]
    fn row_axpy(&mut self, dst: usize, src: usize, q: &BigInt) {
        axpy_rows(&mut self.a, dst, src, q);
        if let Some(u) = &mut self.u {
            axpy_rows(u, dst, src, q);
        }
    }

    /// col[dst] -= q * col[src]
    fn col_axpy(&mut self, dst: usize, src: usize, q: &BigInt) {
        for row in &mut self.a {
            let s = &row[src] * q;
            row[dst] -= s;
        }
        if let Some(vt) = &mut self.vt {
            axpy_rows(vt, dst, src, q);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in &mut self.a[i] {
            *x = -std::mem::take(x);
        }
        if let Some(u) = &mut self.u {
            for x in &mut u[i] {
                *x = -std::mem::take(x);
            }
        }
    }
}

fn axpy_rows(m: &mut [Vec<BigInt>], dst: usize, src: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    let (d, s) = if dst < src {
        let (lo, hi) = m.split_at_mut(src);
        (&mut lo[dst], &hi[0])
    } else {
        let (lo, hi) = m.split_at_mut(dst);
        (&mut hi[0], &lo[src])
    };
    for (x, y) in d.iter_mut().zip(s) {
        if !y.is_zero() {
            *x -= y * q;
        }
    }
}

fn reduce(w: &mut Work) {
    let m = w.a.len();
    let n = w.a.first().map_or(0, Vec::len);
    for t in 0..m.min(n) {
        // Smallest nonzero absolute value in the trailing block.
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                let x = &w.a[i][j];
                if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < w.a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);

        loop {
            let mut clean = true;
            for i in t + 1..m {
                if w.a[i][t].is_zero() {
                    continue;
                }
                let q = w.a[i][t].div_floor(&w.a[t][t]);
                w.row_axpy(i, t, &q);
                clean &= w.a[i][t].is_zero();
            }
            for j in t + 1..n {
                if w.a[t][j].is_zero() {
                    continue;
                }
                let q = w.a[t][j].div_floor(&w.a[t][t]);
                w.col_axpy(j, t, &q);
                clean &= w.a[t][j].is_zero();
            }
            if !clean {
                let mut best = (t, t);
                for i in t + 1..m {
                    let x = &w.a[i][t];
                    if !x.is_zero() && x.abs() < w.a[best.0][best.1].abs() {
                        best = (i, t);
                    }
                }
                for j in t + 1..n {
                    let x = &w.a[t][j];
                    if !x.is_zero() && x.abs() < w.a[best.0][best.1].abs() {
                        best = (t, j);
                    }
                }
                w.swap_rows(t, best.0);
                w.swap_cols(t, best.1);
                continue;
            }
            let p = w.a[t][t].clone();
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !w.a[i][j].is_multiple_of(&p)));
            match bad {
                Some(i) => {
                    let minus_one = BigInt::from(-1);
                    w.row_axpy(t, i, &minus_one);
                }
                None => break,
            }
        }
        if w.a[t][t].is_negative() {
            w.negate_row(t);
        }
    }
}

fn to_rows(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    (0..a.rows()).map(|i| (0..a.cols()).map(|j| a.get(i, j).clone()).collect()).collect()
}

fn from_rows(rows: usize, cols: usize, data: Vec<Vec<BigInt>>) -> IntMatrix {
    IntMatrix::new(rows, cols, data.into_iter().flatten().collect()).expect("shape preserved")
}

/// Smith normal form with the unimodular transforms. Pivots are chosen by
/// smallest nonzero absolute value.
pub fn smith_normal_form(a: &IntMatrix) -> Smith {
    let (m, n) = (a.rows(), a.cols());
    let mut w = Work {
        a: to_rows(a),
        u: Some(to_rows(&IntMatrix::identity(m))),
        vt: Some(to_rows(&IntMatrix::identity(n))),
    };
    reduce(&mut w);
    let vt = from_rows(n, n, w.vt.take().unwrap_or_default());
    let mut v = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            v.set(i, j, vt.get(j, i).clone());
        }
    }
    Smith {
        u: from_rows(m, m, w.u.take().unwrap_or_default()),
        d: from_rows(m, n, w.a),
        v,
    }
}

/// The nonzero diagonal entries of the Smith normal form, in divisibility order.
pub fn invariant_factors(a: &IntMatrix) -> Vec<BigInt> {
    let mut w = Work { a: to_rows(a), u: None, vt: None };
    reduce(&mut w);
    let k = a.rows().min(a.cols());
    (0..k).map(|i| w.a[i][i].clone()).filter(|x| !x.is_zero()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn check(a: &IntMatrix) -> Smith {
        let s = smith_normal_form(a);
        assert_eq!(s.u.mul(a).unwrap().mul(&s.v).unwrap(), s.d, "recomposition");
        assert_eq!(s.u.determinant().unwrap().abs(), BigInt::from(1));
        assert_eq!(s.v.determinant().unwrap().abs(), BigInt::from(1));
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    assert!(s.d.get(i, j).is_zero());
                }
            }
        }
        let diag = s.diagonal();
        for w in diag.windows(2) {
            assert!(!w[0].is_negative());
            if w[0].is_zero() {
                assert!(w[1].is_zero());
            } else {
                assert!(w[1].is_multiple_of(&w[0]));
            }
        }
        s
    }

    #[test]
    fn identity_is_fixed() {
        let id = IntMatrix::identity(3);
        let s = check(&id);
        assert_eq!(s.d, id);
        assert_eq!(s.u, id);
        assert_eq!(s.v, id);
    }

    #[test]
    fn two_by_two() {
        // gcd of entries 2, |det| = 8.
        let a = IntMatrix::from_i64(2, 2, &[2, 4, 6, 8]).unwrap();
        assert_eq!(check(&a).diagonal(), big(&[2, 4]));
        assert_eq!(invariant_factors(&a), big(&[2, 4]));
    }

    #[test]
    fn zero_and_empty() {
        let z = IntMatrix::zeros(3, 2);
        assert_eq!(check(&z).diagonal(), big(&[0, 0]));
        assert!(invariant_factors(&z).is_empty());
        check(&IntMatrix::zeros(0, 3));
    }

    #[test]
    fn torsion_example() {
        // Boundary of a 2-cell attached by degree 2: Z/2.
        let a = IntMatrix::from_i64(1, 1, &[-2]).unwrap();
        assert_eq!(invariant_factors(&a), big(&[2]));
        let a = IntMatrix::from_i64(2, 3, &[4, 6, 0, 6, 4, 10]).unwrap();
        let d = check(&a).diagonal();
        assert_eq!(d, big(&[2, 10]));
    }

    proptest! {
        #[test]
        fn snf_properties(rows in 0usize..6, cols in 0usize..6, seed in prop::collection::vec(-9i64..10, 36)) {
            let a = IntMatrix::from_i64(rows, cols, &seed[..rows * cols]).unwrap();
            let s = check(&a);
            let nz: Vec<BigInt> = s.diagonal().into_iter().filter(|x| !x.is_zero()).collect();
            prop_assert_eq!(nz, invariant_factors(&a));
        }
    }
}
