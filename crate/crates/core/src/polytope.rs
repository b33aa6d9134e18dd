//! Exact rational convex polytopes: hull, irredundant facets, the face
//! lattice and vertex tangent cones.
//!
//! Polytopes need not be full-dimensional. Everything is computed inside the
//! affine hull of the input and facet conormals are taken within its
//! direction space.

use std::collections::BTreeSet;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactq::{
    dot, normal_within, primitive_integer, rank_of, solve_affine, sub, to_rational_vec,
    AffineHull, QVector, Rational,
};

/// The half-space `<conormal, x> >= offset`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Facet {
    pub conormal: Vec<BigInt>,
    pub offset: Rational,
}

impl Facet {
    /// `<conormal, x> - offset`.
    pub fn slack(&self, x: &[Rational]) -> Rational {
        dot(&to_rational_vec(&self.conormal), x) - &self.offset
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        !self.slack(x).is_negative()
    }

    pub fn is_tight(&self, x: &[Rational]) -> bool {
        self.slack(x).is_zero()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPolytope {
    pub ambient_dim: usize,
    /// Sorted lexicographically.
    pub vertices: Vec<QVector>,
    pub facets: Vec<Facet>,
    /// Vertex indices on each facet, parallel to `facets`.
    pub facet_vertices: Vec<Vec<usize>>,
    pub affine_hull: AffineHull,
}

impl RationalPolytope {
    pub fn dim(&self) -> usize {
        self.affine_hull.dim()
    }

    pub fn vertex_index(&self, x: &[Rational]) -> Option<usize> {
        self.vertices.binary_search_by(|v| v.as_slice().cmp(x)).ok()
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        x.len() == self.ambient_dim
            && self.affine_hull.contains_direction(&sub(x, &self.affine_hull.basepoint))
            && self.facets.iter().all(|f| f.contains(x))
    }

    /// Indices of facets whose hyperplane passes through `x`.
    pub fn tight_facets(&self, x: &[Rational]) -> Vec<usize> {
        (0..self.facets.len()).filter(|&i| self.facets[i].is_tight(x)).collect()
    }

    /// True when vertices `a` and `b` span an edge.
    pub fn is_edge(&self, a: usize, b: usize) -> bool {
        if a == b {
            return false;
        }
        let common: Vec<QVector> = self
            .facet_vertices
            .iter()
            .zip(&self.facets)
            .filter(|(vs, _)| vs.contains(&a) && vs.contains(&b))
            .map(|(_, f)| to_rational_vec(&f.conormal))
            .collect();
        rank_of(&common) + 1 == self.dim()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.vertices.len())
            .tuple_combinations()
            .filter(|&(a, b)| self.is_edge(a, b))
            .collect()
    }
}

/// Convex hull by enumerating candidate supporting hyperplanes through
/// affinely independent point subsets. Duplicate points are ignored.
pub fn convex_hull(points: &[QVector]) -> Result<RationalPolytope> {
    let first = points.first().ok_or(Error::NoPoints)?;
    let n = first.len();
    if let Some(p) = points.iter().find(|p| p.len() != n) {
        return Err(Error::DimensionMismatch { expected: n, found: p.len() });
    }
    let pts: Vec<QVector> = points.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
    let hull = solve_affine(&pts)?;
    let d = hull.dim();
    if d == 0 {
        return Ok(RationalPolytope {
            ambient_dim: n,
            vertices: pts,
            facets: Vec::new(),
            facet_vertices: Vec::new(),
            affine_hull: hull,
        });
    }

    let mut facets = BTreeSet::new();
    for subset in (0..pts.len()).combinations(d) {
        let base = &pts[subset[0]];
        let diffs: Vec<QVector> = subset[1..].iter().map(|&i| sub(&pts[i], base)).collect();
        if rank_of(&diffs) != d - 1 {
            continue;
        }
        let Some(normal) = normal_within(&hull.direction_basis, &diffs) else {
            continue;
        };
        let mut conormal = primitive_integer(&normal);
        let c = to_rational_vec(&conormal);
        let at_base = dot(&c, base);
        let slacks: Vec<Rational> = pts.iter().map(|p| dot(&c, p) - &at_base).collect();
        let offset = if slacks.iter().all(|s| !s.is_negative()) {
            at_base
        } else if slacks.iter().all(|s| !s.is_positive()) {
            conormal = conormal.into_iter().map(|x| -x).collect();
            -at_base
        } else {
            continue;
        };
        facets.insert(Facet { conormal, offset });
    }
    let facets: Vec<Facet> = facets.into_iter().collect();

    let vertices: Vec<QVector> = pts
        .into_iter()
        .filter(|p| {
            let tight: Vec<QVector> =
                facets.iter().filter(|f| f.is_tight(p)).map(|f| to_rational_vec(&f.conormal)).collect();
            rank_of(&tight) == d
        })
        .collect();

    let mut with_sets: Vec<(Vec<usize>, Facet)> = facets
        .into_iter()
        .map(|f| ((0..vertices.len()).filter(|&i| f.is_tight(&vertices[i])).collect(), f))
        .collect();
    with_sets.sort();
    let (facet_vertices, facets) = with_sets.into_iter().unzip();

    let hull = solve_affine(&vertices)?;
    Ok(RationalPolytope { ambient_dim: n, vertices, facets, facet_vertices, affine_hull: hull })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub id: usize,
    pub dim: usize,
    /// Sorted vertex indices.
    pub vertices: Vec<usize>,
    pub direction_basis: Vec<QVector>,
    /// `None` only for the polytope itself.
    pub supporting: Option<Facet>,
}

impl Face {
    pub fn contains_vertex(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn is_subface_of(&self, other: &Face) -> bool {
        self.vertices.iter().all(|v| other.contains_vertex(*v))
    }

    /// Whether the point lies in the face (assuming it lies in the polytope).
    pub fn contains_point(&self, x: &[Rational]) -> bool {
        self.supporting.as_ref().is_none_or(|h| h.is_tight(x))
    }

    pub fn is_parallel(&self, v: &[Rational]) -> bool {
        crate::exactq::lattice_membership(v, &self.direction_basis)
    }
}

/// All nonempty faces, sorted by `(dim, vertices)`; the polytope itself is last.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceLattice {
    pub faces: Vec<Face>,
    /// Every strict inclusion `(sub, super)`.
    pub containment: Vec<(usize, usize)>,
}

impl FaceLattice {
    pub fn top(&self) -> &Face {
        self.faces.last().expect("lattice always contains the polytope")
    }

    pub fn top_id(&self) -> usize {
        self.faces.len() - 1
    }

    pub fn face(&self, id: usize) -> &Face {
        &self.faces[id]
    }

    pub fn find(&self, vertices: &[usize]) -> Option<usize> {
        self.faces.iter().position(|f| f.vertices == vertices)
    }

    pub fn vertex_face(&self, v: usize) -> Option<usize> {
        self.find(&[v])
    }

    pub fn proper_faces(&self) -> impl Iterator<Item = &Face> {
        let top = self.top_id();
        self.faces.iter().filter(move |f| f.id != top)
    }

    pub fn faces_of_dim(&self, dim: usize) -> impl Iterator<Item = &Face> {
        self.faces.iter().filter(move |f| f.dim == dim)
    }

    /// Faces strictly contained in `id`.
    pub fn subfaces(&self, id: usize) -> Vec<usize> {
        self.containment.iter().filter(|(_, sup)| *sup == id).map(|(s, _)| *s).collect()
    }

    /// Facets of the face `id` (its subfaces of one lower dimension).
    pub fn facets_of(&self, id: usize) -> Vec<usize> {
        let d = self.faces[id].dim;
        self.subfaces(id).into_iter().filter(|&s| self.faces[s].dim + 1 == d).collect()
    }

    pub fn is_downward_closed(&self, ids: &BTreeSet<usize>) -> Result<()> {
        for &id in ids {
            for s in self.subfaces(id) {
                if !ids.contains(&s) {
                    return Err(Error::NotDownwardClosed(s));
                }
            }
        }
        Ok(())
    }
}

pub fn face_lattice(p: &RationalPolytope) -> FaceLattice {
    let all: Vec<usize> = (0..p.vertices.len()).collect();
    let mut sets: BTreeSet<Vec<usize>> = p.facet_vertices.iter().cloned().collect();
    let mut frontier: Vec<Vec<usize>> = sets.iter().cloned().collect();
    while let Some(f) = frontier.pop() {
        for g in &p.facet_vertices {
            let meet: Vec<usize> = f.iter().copied().filter(|v| g.binary_search(v).is_ok()).collect();
            if !meet.is_empty() && sets.insert(meet.clone()) {
                frontier.push(meet);
            }
        }
    }
    sets.insert(all.clone());

    let mut faces: Vec<Face> = sets
        .into_iter()
        .map(|vs| {
            let pts: Vec<QVector> = vs.iter().map(|&i| p.vertices[i].clone()).collect();
            let hull = solve_affine(&pts).expect("nonempty");
            let supporting = (vs != all).then(|| supporting_hyperplane(p, &vs));
            Face { id: 0, dim: hull.dim(), vertices: vs, direction_basis: hull.direction_basis, supporting }
        })
        .collect();
    faces.sort_by(|a, b| (a.dim, &a.vertices).cmp(&(b.dim, &b.vertices)));
    for (i, f) in faces.iter_mut().enumerate() {
        f.id = i;
    }
    let mut containment = Vec::new();
    for a in &faces {
        for b in &faces {
            if a.id != b.id && a.vertices.len() < b.vertices.len() && a.is_subface_of(b) {
                containment.push((a.id, b.id));
            }
        }
    }
    FaceLattice { faces, containment }
}

/// Sum of the facets through a proper face: tight exactly on that face.
fn supporting_hyperplane(p: &RationalPolytope, vs: &[usize]) -> Facet {
    let mut c = vec![BigInt::zero(); p.ambient_dim];
    let mut o = Rational::zero();
    for (f, fvs) in p.facets.iter().zip(&p.facet_vertices) {
        if vs.iter().all(|v| fvs.binary_search(v).is_ok()) {
            for (ci, x) in c.iter_mut().zip(&f.conormal) {
                *ci += x;
            }
            o += &f.offset;
        }
    }
    let g = c.iter().fold(BigInt::zero(), |acc, x| num_integer::Integer::gcd(&acc, x));
    if !g.is_zero() {
        c = c.into_iter().map(|x| x / &g).collect();
        o /= Rational::from_integer(g);
    }
    Facet { conormal: c, offset: o }
}

/// Primitive integer edge directions leaving vertex `v`.
pub fn tangent_cone(p: &RationalPolytope, v: usize) -> Vec<Vec<BigInt>> {
    let mut gens: Vec<Vec<BigInt>> = (0..p.vertices.len())
        .filter(|&w| p.is_edge(v, w))
        .map(|w| primitive_integer(&sub(&p.vertices[w], &p.vertices[v])))
        .collect();
    gens.sort();
    gens
}

/// Barycenter of the face's vertices.
pub fn relative_interior_point(p: &RationalPolytope, f: &Face) -> QVector {
    let k = Rational::from_integer(BigInt::from(f.vertices.len()));
    let mut acc = vec![Rational::zero(); p.ambient_dim];
    for &v in &f.vertices {
        for (a, x) in acc.iter_mut().zip(&p.vertices[v]) {
            *a += x;
        }
    }
    acc.into_iter().map(|x| x / &k).collect()
}

/// Whether `w` lies in the cone `{d : <c, d> >= 0}` cut out by the facets at vertex `v`,
/// restricted to the direction space of the polytope.
pub fn in_tangent_cone(p: &RationalPolytope, v: usize, w: &[Rational]) -> bool {
    if !p.affine_hull.contains_direction(w) {
        return false;
    }
    let x = &p.vertices[v];
    p.facets
        .iter()
        .filter(|f| f.is_tight(x))
        .all(|f| !dot(&to_rational_vec(&f.conormal), w).is_negative())
}
