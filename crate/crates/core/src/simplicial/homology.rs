use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use super::OrderedComplex;
use crate::exactq::SparseIntMatrix;

/// Free chain groups with boundary maps; `boundaries[d]` maps degree `d`
/// to degree `d - 1` (the degree-0 map has no rows).
#[derive(Clone, Debug)]
pub struct ChainComplex {
    pub sizes: Vec<usize>,
    pub boundaries: Vec<SparseIntMatrix>,
}

impl ChainComplex {
    pub fn new(sizes: Vec<usize>, boundaries: Vec<SparseIntMatrix>) -> Self {
        assert_eq!(sizes.len(), boundaries.len());
        for (d, b) in boundaries.iter().enumerate() {
            assert_eq!(b.cols(), sizes[d]);
            assert_eq!(b.rows(), if d == 0 { 0 } else { sizes[d - 1] });
        }
        Self { sizes, boundaries }
    }

    pub(super) fn from_ordered(k: &OrderedComplex) -> Self {
        let top = k.dim().map_or(0, |d| d + 1);
        let sizes: Vec<usize> = (0..top).map(|d| k.simplices(d).len()).collect();
        let mut boundaries = vec![SparseIntMatrix::new(0, sizes.first().copied().unwrap_or(0))];
        for d in 1..top {
            let mut b = SparseIntMatrix::new(sizes[d - 1], sizes[d]);
            for (c, s) in k.simplices(d).iter().enumerate() {
                for i in 0..s.len() {
                    let mut f = s.clone();
                    f.remove(i);
                    let r = k.index_of(&f).expect("complex is downward closed");
                    b.add_entry(r, c, if i % 2 == 0 { 1 } else { -1 });
                }
            }
            boundaries.push(b);
        }
        if top == 0 {
            boundaries.clear();
        }
        Self { sizes, boundaries }
    }

    pub fn cell_count(&self) -> usize {
        self.sizes.iter().sum()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.sizes.iter().enumerate().map(|(d, &n)| if d % 2 == 0 { n as i64 } else { -(n as i64) }).sum()
    }

    pub fn homology(&self) -> HomologyProfile {
        let factors: Vec<Vec<BigInt>> = self.boundaries.iter().map(SparseIntMatrix::invariant_factors).collect();
        let rank = |d: usize| factors.get(d).map_or(0, Vec::len);
        let mut betti = Vec::new();
        let mut torsion = Vec::new();
        for d in 0..self.sizes.len() {
            betti.push(self.sizes[d] - rank(d) - rank(d + 1));
            torsion.push(
                factors.get(d + 1).map_or_else(Vec::new, |f| f.iter().filter(|x| !x.is_one()).cloned().collect()),
            );
        }
        HomologyProfile::new(betti, torsion)
    }
}

/// Betti numbers and torsion coefficients per degree, trailing zero degrees trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct HomologyProfile {
    betti: Vec<usize>,
    torsion: Vec<Vec<BigInt>>,
}

impl HomologyProfile {
    pub fn new(mut betti: Vec<usize>, mut torsion: Vec<Vec<BigInt>>) -> Self {
        let n = betti.len().max(torsion.len());
        betti.resize(n, 0);
        torsion.resize(n, Vec::new());
        while betti.last() == Some(&0) && torsion.last().is_some_and(Vec::is_empty) {
            betti.pop();
            torsion.pop();
        }
        Self { betti, torsion }
    }

    pub fn from_betti(betti: &[usize]) -> Self {
        Self::new(betti.to_vec(), Vec::new())
    }

    /// `S^m`; `S^0` has two components.
    pub fn sphere(m: usize) -> Self {
        let mut b = vec![0; m + 1];
        b[0] += 1;
        b[m] += 1;
        Self::from_betti(&b)
    }

    pub fn point() -> Self {
        Self::from_betti(&[1])
    }

    /// Closed oriented surface of genus `g`.
    pub fn surface(g: u32) -> Self {
        Self::from_betti(&[1, 2 * g as usize, 1])
    }

    pub fn betti(&self) -> &[usize] {
        &self.betti
    }

    pub fn betti_at(&self, d: usize) -> usize {
        self.betti.get(d).copied().unwrap_or(0)
    }

    pub fn torsion(&self) -> &[Vec<BigInt>] {
        &self.torsion
    }

    pub fn has_torsion(&self) -> bool {
        self.torsion.iter().any(|t| !t.is_empty())
    }

    pub fn is_empty_space(&self) -> bool {
        self.betti.is_empty()
    }

    /// Reduced Betti numbers (the space is assumed nonempty).
    pub fn reduced_betti(&self) -> Vec<usize> {
        let mut b = self.betti.clone();
        if let Some(b0) = b.first_mut() {
            *b0 -= 1;
        }
        while b.last() == Some(&0) {
            b.pop();
        }
        b
    }

    /// Nonempty with the homology of a point.
    pub fn is_acyclic(&self) -> bool {
        *self == Self::point()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.betti.iter().enumerate().map(|(d, &b)| if d % 2 == 0 { b as i64 } else { -(b as i64) }).sum()
    }

    /// Homology of the `k`-fold suspension of a nonempty space with this
    /// homology: reduced groups shift up by `k`.
    pub fn suspend(&self, k: usize) -> Self {
        if k == 0 {
            return self.clone();
        }
        let mut betti = vec![0; k];
        let mut torsion = vec![Vec::new(); k];
        betti[0] = 1;
        let reduced = {
            let mut b = self.betti.clone();
            if let Some(b0) = b.first_mut() {
                *b0 = b0.saturating_sub(1);
            }
            b
        };
        betti.extend(reduced);
        torsion.extend(self.torsion.iter().cloned());
        Self::new(betti, torsion)
    }
}

impl fmt::Display for HomologyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "betti ({})", self.betti.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "))?;
        if self.has_torsion() {
            let parts: Vec<String> = self
                .torsion
                .iter()
                .enumerate()
                .filter(|(_, t)| !t.is_empty())
                .map(|(d, t)| {
                    let zs: Vec<String> = t.iter().map(|x| format!("Z/{x}")).collect();
                    format!("H_{d}: {}", zs.join(" + "))
                })
                .collect();
            write!(f, ", torsion {}", parts.join("; "))?;
        }
        Ok(())
    }
}
