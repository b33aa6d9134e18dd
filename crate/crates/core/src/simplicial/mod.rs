//! Ordered simplicial complexes, their products and joins, quotients that
//! crush fibers, and integral homology.

mod homology;
mod quotient;
mod verify;

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::hamspace::StratifiedPolytope;

pub use homology::{ChainComplex, HomologyProfile};
pub use quotient::collapse_fibers;
pub use verify::{
    estimate_product_size, join_model, verify_report, ModelCheck, VerificationResult, VerificationStatus,
    DEFAULT_MAX_SIMPLICES,
};

/// A simplicial complex on vertices `0..vertex_count`. Simplices are strictly
/// increasing vertex tuples, stored sorted per dimension.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OrderedComplex {
    vertex_count: usize,
    labels: Option<Vec<String>>,
    simplices: Vec<Vec<Vec<usize>>>,
}

impl OrderedComplex {
    /// The downward closure of `facets`.
    pub fn from_facets<I, S>(vertex_count: usize, facets: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: AsRef<[usize]>,
    {
        let mut by_dim: Vec<BTreeSet<Vec<usize>>> = Vec::new();
        for f in facets {
            let mut f = f.as_ref().to_vec();
            f.sort_unstable();
            f.dedup();
            if f.is_empty() {
                continue;
            }
            assert!(*f.last().unwrap() < vertex_count, "vertex out of range");
            if by_dim.len() < f.len() {
                by_dim.resize(f.len(), BTreeSet::new());
            }
            if by_dim[f.len() - 1].contains(&f) {
                continue;
            }
            for k in 1..=f.len() {
                for s in f.iter().copied().combinations(k) {
                    by_dim[k - 1].insert(s);
                }
            }
        }
        Self::from_sets(vertex_count, by_dim)
    }

    fn from_sets(vertex_count: usize, by_dim: Vec<BTreeSet<Vec<usize>>>) -> Self {
        let mut simplices: Vec<Vec<Vec<usize>>> = by_dim.into_iter().map(|s| s.into_iter().collect()).collect();
        while simplices.last().is_some_and(Vec::is_empty) {
            simplices.pop();
        }
        Self { vertex_count, labels: None, simplices }
    }

    pub fn empty(vertex_count: usize) -> Self {
        Self { vertex_count, labels: None, simplices: Vec::new() }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.vertex_count);
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.simplices.len().checked_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    /// Simplices of dimension `d`, sorted.
    pub fn simplices(&self, d: usize) -> &[Vec<usize>] {
        self.simplices.get(d).map_or(&[], Vec::as_slice)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.simplices.iter().flatten()
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.simplices.iter().map(Vec::len).collect()
    }

    pub fn len(&self) -> usize {
        self.simplices.iter().map(Vec::len).sum()
    }

    pub fn contains(&self, s: &[usize]) -> bool {
        !s.is_empty() && self.simplices(s.len() - 1).binary_search(&s.to_vec()).is_ok()
    }

    pub fn index_of(&self, s: &[usize]) -> Option<usize> {
        self.simplices(s.len().checked_sub(1)?).binary_search(&s.to_vec()).ok()
    }

    pub fn is_subcomplex_of(&self, other: &Self) -> bool {
        self.iter().all(|s| other.contains(s))
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.simplices.iter().enumerate().map(|(d, s)| if d % 2 == 0 { s.len() as i64 } else { -(s.len() as i64) }).sum()
    }

    /// Maximal simplices.
    pub fn facets(&self) -> Vec<Vec<usize>> {
        let mut covered: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut out = Vec::new();
        for d in (0..self.simplices.len()).rev() {
            for s in &self.simplices[d] {
                if !covered.contains(s) {
                    out.push(s.clone());
                }
                if d > 0 {
                    for i in 0..s.len() {
                        let mut f = s.clone();
                        f.remove(i);
                        covered.insert(f);
                    }
                }
            }
        }
        out.sort();
        out
    }

    pub fn chain_complex(&self) -> ChainComplex {
        ChainComplex::from_ordered(self)
    }

    pub fn homology(&self) -> HomologyProfile {
        homology(self)
    }
}

pub fn homology(k: &OrderedComplex) -> HomologyProfile {
    k.chain_complex().homology()
}

/// All proper faces of the simplex on `m + 1` vertices, a model of `S^(m-1)`.
pub fn simplex_boundary_sphere(m: usize) -> Result<OrderedComplex> {
    if m == 0 {
        return Err(Error::Precondition("the 0-simplex has no proper faces".into()));
    }
    Ok(OrderedComplex::from_facets(m + 1, (0..=m).combinations(m)))
}

/// The full simplex on `m + 1` vertices.
pub fn simplex(m: usize) -> OrderedComplex {
    OrderedComplex::from_facets(m + 1, [(0..=m).collect::<Vec<_>>()])
}

/// A closed oriented surface of genus `g`: the tetrahedron boundary for
/// `g = 0`, otherwise a chain of 7-vertex tori glued along removed
/// triangles, on `4g + 3` vertices.
pub fn surface_complex(g: u32) -> OrderedComplex {
    if g == 0 {
        return simplex_boundary_sphere(3).expect("m > 0");
    }
    let torus: Vec<[usize; 3]> =
        (0..7).flat_map(|i| [[i, (i + 1) % 7, (i + 3) % 7], [i, (i + 2) % 7, (i + 3) % 7]]).collect();
    let is = |t: &[usize; 3], s: [usize; 3]| {
        let mut t = *t;
        t.sort_unstable();
        t == s
    };
    let (glue_in, glue_out) = ([0, 1, 3], [2, 4, 5]);
    let mut facets = Vec::new();
    let mut next = 0;
    let mut previous_out: Option<[usize; 3]> = None;
    for k in 0..g {
        let mut map = [usize::MAX; 7];
        if let Some(prev) = previous_out {
            for (local, global) in glue_in.iter().zip(prev) {
                map[*local] = global;
            }
        }
        for m in map.iter_mut().filter(|m| **m == usize::MAX) {
            *m = next;
            next += 1;
        }
        for t in &torus {
            if (k > 0 && is(t, glue_in)) || (k + 1 < g && is(t, glue_out)) {
                continue;
            }
            facets.push(t.map(|v| map[v]));
        }
        previous_out = Some(glue_out.map(|v| map[v]));
    }
    OrderedComplex::from_facets(next, facets)
}

/// Delannoy number: lattice paths from `(0,0)` to `(p,q)` with steps
/// `(1,0)`, `(0,1)`, `(1,1)`. Counts the staircase simplices projecting onto
/// a given `p`-simplex and `q`-simplex.
pub fn delannoy(p: usize, q: usize) -> u128 {
    let mut row = vec![1u128; q + 1];
    for _ in 0..p {
        let mut next = vec![1u128; q + 1];
        for j in 1..=q {
            next[j] = next[j - 1] + row[j] + row[j - 1];
        }
        row = next;
    }
    row[q]
}

/// Staircase chains in `sigma × tau` that project onto both factors.
pub(crate) fn staircases(sigma: &[usize], tau: &[usize], mut visit: impl FnMut(&[(usize, usize)])) {
    fn go(
        sigma: &[usize],
        tau: &[usize],
        i: usize,
        j: usize,
        path: &mut Vec<(usize, usize)>,
        visit: &mut dyn FnMut(&[(usize, usize)]),
    ) {
        path.push((sigma[i], tau[j]));
        if i + 1 == sigma.len() && j + 1 == tau.len() {
            visit(path);
        } else {
            if i + 1 < sigma.len() {
                go(sigma, tau, i + 1, j, path, visit);
            }
            if j + 1 < tau.len() {
                go(sigma, tau, i, j + 1, path, visit);
            }
            if i + 1 < sigma.len() && j + 1 < tau.len() {
                go(sigma, tau, i + 1, j + 1, path, visit);
            }
        }
        path.pop();
    }
    go(sigma, tau, 0, 0, &mut Vec::new(), &mut visit);
}

/// Staircase triangulation of `k × l` on vertices `v * |V(l)| + w`.
pub fn product(k: &OrderedComplex, l: &OrderedComplex) -> OrderedComplex {
    let m = l.vertex_count;
    let mut by_dim: Vec<BTreeSet<Vec<usize>>> = Vec::new();
    for s in k.iter() {
        for t in l.iter() {
            staircases(s, t, |path| {
                if by_dim.len() < path.len() {
                    by_dim.resize(path.len(), BTreeSet::new());
                }
                by_dim[path.len() - 1].insert(path.iter().map(|&(v, w)| v * m + w).collect());
            });
        }
    }
    let mut out = OrderedComplex::from_sets(k.vertex_count * m, by_dim);
    if let (Some(a), Some(b)) = (&k.labels, &l.labels) {
        out.labels = Some(a.iter().cartesian_product(b).map(|(x, y)| format!("({x}, {y})")).collect());
    }
    out
}

/// Join with all vertices of `k` before those of `l`.
pub fn join(k: &OrderedComplex, l: &OrderedComplex) -> OrderedComplex {
    let off = k.vertex_count;
    let mut by_dim: Vec<BTreeSet<Vec<usize>>> = Vec::new();
    let mut add = |s: Vec<usize>| {
        if by_dim.len() < s.len() {
            by_dim.resize(s.len(), BTreeSet::new());
        }
        by_dim[s.len() - 1].insert(s);
    };
    let shifted: Vec<Vec<usize>> = l.iter().map(|t| t.iter().map(|v| v + off).collect()).collect();
    for s in k.iter() {
        add(s.clone());
    }
    for t in &shifted {
        add(t.clone());
    }
    for s in k.iter() {
        for t in &shifted {
            add(s.iter().chain(t).copied().collect());
        }
    }
    OrderedComplex::from_sets(off + l.vertex_count, by_dim)
}

/// Pulling triangulation of the polytope in vertex order, together with the
/// subcomplex covering the selected faces.
pub fn boundary_subcomplex_of_polytope(
    sp: &StratifiedPolytope,
    face_ids: &[usize],
) -> Result<(OrderedComplex, OrderedComplex)> {
    let lattice = &sp.lattice;
    let selected: BTreeSet<usize> = face_ids.iter().copied().collect();
    if let Some(&bad) = selected.iter().find(|&&f| f >= lattice.faces.len()) {
        return Err(Error::Precondition(format!("unknown face {bad}")));
    }
    lattice.is_downward_closed(&selected)?;

    let mut memo: BTreeMap<usize, Vec<Vec<usize>>> = BTreeMap::new();
    let n = sp.polytope.vertices.len();
    let labels: Vec<String> =
        sp.polytope.vertices.iter().map(|v| format!("({})", v.iter().map(ToString::to_string).join(", "))).collect();
    let full = OrderedComplex::from_facets(n, pulling(lattice, lattice.top_id(), &mut memo)).with_labels(labels.clone());
    let sub_facets: Vec<Vec<usize>> =
        selected.iter().flat_map(|&f| pulling(lattice, f, &mut memo)).collect();
    let sub = OrderedComplex::from_facets(n, sub_facets).with_labels(labels);
    debug_assert!(sub.is_subcomplex_of(&full));
    Ok((full, sub))
}

fn pulling(
    lattice: &crate::polytope::FaceLattice,
    id: usize,
    memo: &mut BTreeMap<usize, Vec<Vec<usize>>>,
) -> Vec<Vec<usize>> {
    if let Some(t) = memo.get(&id) {
        return t.clone();
    }
    let face = lattice.face(id);
    let out = if face.dim == 0 {
        vec![face.vertices.clone()]
    } else {
        let apex = face.vertices[0];
        let mut out = Vec::new();
        for g in lattice.facets_of(id) {
            if lattice.face(g).contains_vertex(apex) {
                continue;
            }
            for s in pulling(lattice, g, memo) {
                out.push(std::iter::once(apex).chain(s).collect());
            }
        }
        out
    };
    memo.insert(id, out.clone());
    out
}

#[cfg(test)]
mod tests;
