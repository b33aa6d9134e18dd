//! Exact rational linear algebra and integer normal forms.
//!
//! Everything here works over `BigRational` / `BigInt`; there is no floating
//! point anywhere in the crate.

mod snf;
mod sparse;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use snf::{invariant_factors, smith_normal_form, Smith};
pub use sparse::SparseIntMatrix;

pub type Rational = BigRational;
pub type QVector = Vec<Rational>;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn qvec(xs: &[i64]) -> QVector {
    xs.iter().map(|&x| rat(x)).collect()
}

/// Parses `"p"` or `"p/q"` with `q > 0`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::BadRational(s.to_string());
    let t = s.trim();
    match t.split_once('/') {
        None => t.parse::<BigInt>().map(Rational::from_integer).map_err(|_| bad()),
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if !q.is_positive() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
    }
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

pub fn sub(a: &[Rational], b: &[Rational]) -> QVector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add(a: &[Rational], b: &[Rational]) -> QVector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn scale(a: &[Rational], s: &Rational) -> QVector {
    a.iter().map(|x| x * s).collect()
}

pub fn is_zero_vec(a: &[Rational]) -> bool {
    a.iter().all(Zero::is_zero)
}

/// The positive rational multiple of `v` that is a primitive integer vector.
/// Returns the zero vector unchanged.
pub fn primitive_integer(v: &[Rational]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &lcm).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

/// Dense row-major rational matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Shape { rows, cols, found: entries.len() });
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![Rational::zero(); rows * cols] }
    }

    /// Builds a matrix from equal-length rows. An empty slice gives a 0x0 matrix.
    pub fn from_rows(rows: &[QVector]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: r.len() });
            }
            entries.extend(r.iter().cloned());
        }
        Ok(Self { rows: rows.len(), cols, entries })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                entries.push(self.get(r, c).clone());
            }
        }
        Self { rows: self.cols, cols: self.rows, entries }
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(p, r);
            let inv = m.get(r, c).recip();
            for j in c..m.cols {
                let x = &m.entries[r * m.cols + j] * &inv;
                m.entries[r * m.cols + j] = x;
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    let x = &m.entries[r * m.cols + j] * &f;
                    m.entries[i * m.cols + j] -= x;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

/// Dense row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Shape { rows, cols, found: entries.len() });
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Result<Self> {
        Self::new(rows, cols, entries.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out.entries[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        Ok(out)
    }

    /// Exact determinant via fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Option<BigInt> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(BigInt::one());
        }
        let mut a = self.entries.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k * n + k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[i * n + k].is_zero()) else {
                    return Some(BigInt::zero());
                };
                for j in 0..n {
                    a.swap(k * n + j, p * n + j);
                }
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[i * n + j] * &a[k * n + k] - &a[i * n + k] * &a[k * n + j]) / &prev;
                    a[i * n + j] = v;
                }
            }
            prev = a[k * n + k].clone();
        }
        Some(sign * &a[n * n - 1])
    }
}

/// Dimension of the row space.
pub fn rank(m: &RatMatrix) -> usize {
    m.rref().1.len()
}

/// Rank of a list of vectors (as rows).
pub fn rank_of(vectors: &[QVector]) -> usize {
    match RatMatrix::from_rows(vectors) {
        Ok(m) => rank(&m),
        Err(_) => 0,
    }
}

/// Basis of the null space `{x : m x = 0}`.
pub fn nullspace(m: &RatMatrix) -> Vec<QVector> {
    let (r, pivots) = m.rref();
    let free: Vec<usize> = (0..m.cols()).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Rational::zero(); m.cols()];
            x[f] = Rational::one();
            for (i, &p) in pivots.iter().enumerate() {
                x[p] = -r.get(i, f).clone();
            }
            x
        })
        .collect()
}

/// Unique solution of a square system, or `None` when singular.
pub fn solve_square(m: &RatMatrix, rhs: &[Rational]) -> Option<QVector> {
    let n = m.rows();
    if m.cols() != n || rhs.len() != n {
        return None;
    }
    let mut aug = Vec::with_capacity(n * (n + 1));
    for i in 0..n {
        aug.extend(m.row(i).iter().cloned());
        aug.push(rhs[i].clone());
    }
    let (r, pivots) = RatMatrix { rows: n, cols: n + 1, entries: aug }.rref();
    if pivots.len() != n || pivots.iter().any(|&p| p >= n) {
        return None;
    }
    Some((0..n).map(|i| r.get(i, n).clone()).collect())
}

/// Affine hull of a point set: a base point and a basis of the direction space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineHull {
    pub basepoint: QVector,
    pub direction_basis: Vec<QVector>,
}

impl AffineHull {
    pub fn dim(&self) -> usize {
        self.direction_basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basepoint.len()
    }

    pub fn contains_direction(&self, v: &[Rational]) -> bool {
        lattice_membership(v, &self.direction_basis)
    }
}

/// The base point is the first point; the direction basis is the reduced row
/// echelon basis of the differences, so it depends only on the span.
pub fn solve_affine(points: &[QVector]) -> Result<AffineHull> {
    let first = points.first().ok_or(Error::NoPoints)?;
    let n = first.len();
    let mut diffs = Vec::with_capacity(points.len());
    for p in points {
        if p.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: p.len() });
        }
        diffs.push(sub(p, first));
    }
    Ok(AffineHull { basepoint: first.clone(), direction_basis: span_basis(&diffs, n) })
}

/// Canonical (RREF) basis of the span of `vectors` in `Q^n`.
pub fn span_basis(vectors: &[QVector], n: usize) -> Vec<QVector> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let m = RatMatrix::from_rows(vectors).expect("equal lengths");
    let (r, pivots) = m.rref();
    debug_assert_eq!(r.cols(), n);
    (0..pivots.len()).map(|i| r.row(i).to_vec()).collect()
}

/// True iff `v` lies in the rational span of `basis`.
pub fn lattice_membership(v: &[Rational], basis: &[QVector]) -> bool {
    if is_zero_vec(v) {
        return true;
    }
    if basis.is_empty() {
        return false;
    }
    let mut rows = basis.to_vec();
    let r0 = rank_of(&rows);
    rows.push(v.to_vec());
    rank_of(&rows) == r0
}

/// Coordinates of `v` with respect to an independent `basis`, if `v` is in the span.
pub fn coordinates(v: &[Rational], basis: &[QVector]) -> Option<QVector> {
    let k = basis.len();
    if k == 0 {
        return is_zero_vec(v).then(Vec::new);
    }
    // Eliminate the augmented system B^T x = v.
    let n = v.len();
    let mut entries = Vec::with_capacity(n * (k + 1));
    for i in 0..n {
        for b in basis {
            entries.push(b[i].clone());
        }
        entries.push(v[i].clone());
    }
    let (r, pivots) = RatMatrix { rows: n, cols: k + 1, entries }.rref();
    if pivots.contains(&k) || pivots.len() != k {
        return None;
    }
    Some((0..k).map(|i| r.get(i, k).clone()).collect())
}

/// A vector spanning the part of `space` orthogonal to every vector in `against`,
/// when that part is one-dimensional.
pub fn normal_within(space: &[QVector], against: &[QVector]) -> Option<QVector> {
    let d = space.len();
    if d == 0 {
        return None;
    }
    let mut entries = Vec::with_capacity(against.len() * d);
    for f in against {
        for b in space {
            entries.push(dot(b, f));
        }
    }
    let m = RatMatrix { rows: against.len(), cols: d, entries };
    let ns = nullspace(&m);
    if ns.len() != 1 {
        return None;
    }
    let n = space[0].len();
    let mut c = vec![Rational::zero(); n];
    for (y, b) in ns[0].iter().zip(space) {
        for (ci, bi) in c.iter_mut().zip(b) {
            *ci += y * bi;
        }
    }
    Some(c)
}

pub fn to_rational_vec(v: &[BigInt]) -> QVector {
    v.iter().cloned().map(Rational::from_integer).collect()
}

pub fn i64_to_rational_vec(v: &[i64]) -> QVector {
    v.iter().map(|&x| rat(x)).collect()
}

pub fn abs_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    a.abs().gcd(&b.abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit(n: usize, i: usize) -> QVector {
        (0..n).map(|j| rat(i64::from(i == j))).collect()
    }

    #[test]
    fn rank_examples() {
        let id = RatMatrix::from_rows(&[qvec(&[1, 0, 0]), qvec(&[0, 1, 0]), qvec(&[0, 0, 1])]).unwrap();
        assert_eq!(rank(&id), 3);
        let m = RatMatrix::from_rows(&[qvec(&[1, 2]), qvec(&[2, 4])]).unwrap();
        assert_eq!(rank(&m), 1);
        let gr = RatMatrix::from_rows(&[
            qvec(&[-1, 0, 1, 0]),
            qvec(&[-1, 0, 0, 1]),
            qvec(&[0, -1, 1, 0]),
            qvec(&[0, -1, 0, 1]),
        ])
        .unwrap();
        assert_eq!(rank(&gr), 3);
        assert_eq!(rank(&RatMatrix::zeros(0, 0)), 0);
    }

    #[test]
    fn affine_examples() {
        let h = solve_affine(&[qvec(&[0, 0]), qvec(&[1, 0]), qvec(&[0, 1])]).unwrap();
        assert_eq!(h.dim(), 2);
        let h = solve_affine(&[qvec(&[1, 1]), qvec(&[2, 2]), qvec(&[3, 3])]).unwrap();
        assert_eq!(h.basepoint, qvec(&[1, 1]));
        assert_eq!(h.direction_basis, vec![qvec(&[1, 1])]);
        let mut pts = Vec::new();
        for i in 0..4 {
            for j in i + 1..4 {
                pts.push(add(&unit(4, i), &unit(4, j)));
            }
        }
        assert_eq!(solve_affine(&pts).unwrap().dim(), 3);
        assert!(matches!(solve_affine(&[]), Err(Error::NoPoints)));
    }

    #[test]
    fn membership_examples() {
        assert!(lattice_membership(&qvec(&[0, -1]), &[qvec(&[0, 1])]));
        assert!(!lattice_membership(&qvec(&[-1, 0]), &[qvec(&[0, 1])]));
        // Hypersimplex facet through e1+e2, e1+e3, e2+e3 (the facet x4 = 0).
        let pts = [qvec(&[1, 1, 0, 0]), qvec(&[1, 0, 1, 0]), qvec(&[0, 1, 1, 0])];
        let h = solve_affine(&pts).unwrap();
        // e3 - e1 = (e2+e3) - (e1+e2): inside the facet direction space.
        assert!(lattice_membership(&qvec(&[-1, 0, 1, 0]), &h.direction_basis));
        assert!(!lattice_membership(&qvec(&[-1, 0, 0, 1]), &h.direction_basis));
    }

    #[test]
    fn parse_rationals() {
        assert_eq!(parse_rational("3").unwrap(), rat(3));
        assert_eq!(parse_rational("-2/4").unwrap(), rat_frac(-1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1/-2").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn primitive_vectors() {
        let v = vec![rat_frac(1, 2), rat_frac(-3, 4)];
        assert_eq!(primitive_integer(&v), vec![BigInt::from(2), BigInt::from(-3)]);
        assert_eq!(primitive_integer(&qvec(&[0, 0])), vec![BigInt::zero(), BigInt::zero()]);
    }

    #[test]
    fn coordinates_and_normals() {
        let basis = vec![qvec(&[1, 0, -1]), qvec(&[0, 1, -1])];
        assert_eq!(coordinates(&qvec(&[2, 3, -5]), &basis), Some(qvec(&[2, 3])));
        assert_eq!(coordinates(&qvec(&[1, 1, 1]), &basis), None);
        let n = normal_within(&basis, &[qvec(&[1, 0, -1])]).unwrap();
        assert!(dot(&n, &qvec(&[1, 0, -1])).is_zero());
        assert!(lattice_membership(&n, &basis));
    }

    #[test]
    fn determinant_bareiss() {
        let m = IntMatrix::from_i64(3, 3, &[2, 0, 1, 1, 3, 2, 1, 1, 2]).unwrap();
        assert_eq!(m.determinant(), Some(BigInt::from(6)));
        let m = IntMatrix::from_i64(2, 2, &[0, 1, 1, 0]).unwrap();
        assert_eq!(m.determinant(), Some(BigInt::from(-1)));
    }
}
