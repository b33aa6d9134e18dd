//! Combinatorial model of a compact Hamiltonian torus space: fixed
//! components with their momentum values and isotropy weights.
//!
//! The momentum polytope is the hull of the fixed-component moments. The
//! complexity of the face `F` is the number of weights at a fixed point over
//! `F` that are parallel to `F`, minus `dim F`. A fixed surface contributes
//! one implicit zero weight, which is parallel to every face.

pub mod validate;

use std::collections::BTreeMap;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::exactq::{i64_to_rational_vec, rank_of, QVector};
use crate::polytope::{convex_hull, face_lattice, Face, FaceLattice, RationalPolytope};

pub use validate::{validate, CheckResult, CheckStatus, ValidationReport};

/// An element of the weight lattice, one coordinate per circle factor.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightVector(pub Vec<i64>);

impl WeightVector {
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn to_rational(&self) -> QVector {
        i64_to_rational_vec(&self.0)
    }

    pub fn neg(&self) -> Self {
        Self(self.0.iter().map(|x| -x).collect())
    }
}

impl From<Vec<i64>> for WeightVector {
    fn from(v: Vec<i64>) -> Self {
        Self(v)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ComponentKind {
    Point,
    Surface { genus: u32 },
}

impl ComponentKind {
    pub fn is_surface(self) -> bool {
        matches!(self, Self::Surface { .. })
    }

    pub fn genus(self) -> Option<u32> {
        match self {
            Self::Point => None,
            Self::Surface { genus } => Some(genus),
        }
    }
}

/// A connected component of the fixed point set. Only the nonzero isotropy
/// weights are stored; a surface's two tangent directions are implied by its kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedComponent {
    pub kind: ComponentKind,
    pub moment: QVector,
    pub weights: Vec<WeightVector>,
}

impl FixedComponent {
    pub fn point(moment: QVector, weights: Vec<WeightVector>) -> Self {
        Self { kind: ComponentKind::Point, moment, weights }
    }

    pub fn surface(genus: u32, moment: QVector, weights: Vec<WeightVector>) -> Self {
        Self { kind: ComponentKind::Surface { genus }, moment, weights }
    }

    /// Number of weights (including the implicit zero of a surface) lying in
    /// the direction space of `face`, counted with multiplicity.
    pub fn parallel_count(&self, face: &Face) -> usize {
        let explicit = self.weights.iter().filter(|w| face.is_parallel(&w.to_rational())).count();
        explicit + usize::from(self.kind.is_surface())
    }

    pub fn parallel_weights(&self, face: &Face) -> Vec<QVector> {
        self.weights.iter().map(WeightVector::to_rational).filter(|w| face.is_parallel(w)).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HamSpec {
    pub name: String,
    pub torus_rank: usize,
    /// Half the real dimension of the manifold.
    pub half_dim: usize,
    pub components: Vec<FixedComponent>,
}

impl HamSpec {
    pub fn moments(&self) -> Vec<QVector> {
        self.components.iter().map(|c| c.moment.clone()).collect()
    }

    /// Structural problems: weight counts per kind, vector lengths, zero weights.
    pub fn structural_problems(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.components.is_empty() {
            out.push("the fixed point set is empty".to_string());
        }
        for (i, c) in self.components.iter().enumerate() {
            if c.moment.len() != self.torus_rank {
                out.push(format!(
                    "component {i}: moment has length {}, torus rank is {}",
                    c.moment.len(),
                    self.torus_rank
                ));
            }
            let expected = match c.kind {
                ComponentKind::Point => self.half_dim,
                ComponentKind::Surface { .. } => self.half_dim.saturating_sub(1),
            };
            if c.kind.is_surface() && self.half_dim == 0 {
                out.push(format!("component {i}: a fixed surface needs half dimension at least 1"));
            }
            if c.weights.len() != expected {
                out.push(format!(
                    "component {i}: {} weights, expected {expected} for a {}",
                    c.weights.len(),
                    if c.kind.is_surface() { "surface" } else { "point" }
                ));
            }
            for (j, w) in c.weights.iter().enumerate() {
                if w.0.len() != self.torus_rank {
                    out.push(format!("component {i}: weight {j} has length {}", w.0.len()));
                } else if w.is_zero() {
                    out.push(format!("component {i}: weight {j} is zero"));
                }
            }
        }
        out
    }
}

pub fn moment_polytope(spec: &HamSpec) -> Result<RationalPolytope> {
    convex_hull(&spec.moments())
}

/// Half dimension minus the dimension of the momentum polytope.
pub fn complexity(spec: &HamSpec) -> Result<usize> {
    let d = moment_polytope(spec)?.dim();
    spec.half_dim.checked_sub(d).ok_or_else(|| {
        Error::InconsistentSpec(format!(
            "momentum polytope has dimension {d}, more than half the dimension {}",
            spec.half_dim
        ))
    })
}

/// Indices of components whose moment lies in `face`.
pub fn components_in_face(spec: &HamSpec, face: &Face) -> Vec<usize> {
    (0..spec.components.len()).filter(|&i| face.contains_point(&spec.components[i].moment)).collect()
}

/// Complexity of the preimage of `face`, evaluated at every fixed component
/// over the face; all of them must agree.
pub fn face_complexity(spec: &HamSpec, polytope: &RationalPolytope, face: &Face) -> Result<usize> {
    let mut value: Option<(usize, i64)> = None;
    let carriers = components_in_face(spec, face);
    // Evaluate at a vertex carrier first; report it as the reference value.
    let ordered = carriers.iter().copied().sorted_by_key(|&i| {
        let at_vertex = polytope
            .vertex_index(&spec.components[i].moment)
            .is_some_and(|v| face.contains_vertex(v));
        (!at_vertex, i)
    });
    for i in ordered {
        let k = spec.components[i].parallel_count(face) as i64 - face.dim as i64;
        if k < 0 {
            return Err(Error::FaceComplexity(format!(
                "face {} gets {k} at component {i}",
                face.id
            )));
        }
        match value {
            None => value = Some((i, k)),
            Some((j, v)) if v != k => {
                return Err(Error::FaceComplexity(format!(
                    "face {}: component {j} gives {v}, component {i} gives {k}",
                    face.id
                )))
            }
            Some(_) => {}
        }
    }
    value
        .map(|(_, k)| k as usize)
        .ok_or_else(|| Error::FaceComplexity(format!("face {} carries no fixed component", face.id)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratifiedPolytope {
    pub polytope: RationalPolytope,
    pub lattice: FaceLattice,
    pub half_dim: usize,
    /// Indexed by face id.
    pub face_complexity: Vec<usize>,
    pub delta_k: BTreeMap<usize, Vec<usize>>,
    /// Faces of complexity zero.
    pub short_faces: Vec<usize>,
    pub complexity: usize,
}

impl StratifiedPolytope {
    pub fn dim(&self) -> usize {
        self.polytope.dim()
    }

    /// Faces whose relative interiors make up the points of complexity at most `k`.
    pub fn delta_le(&self, k: usize) -> Vec<usize> {
        self.delta_k.range(..=k).flat_map(|(_, v)| v.iter().copied()).sorted().collect()
    }

    /// Whether the short set is exactly the boundary.
    pub fn boundary_is_short(&self) -> bool {
        let top = self.lattice.top_id();
        self.lattice.proper_faces().all(|f| self.face_complexity[f.id] == 0) && self.face_complexity[top] > 0
    }

    /// Short faces not contained in a larger short face.
    pub fn maximal_short_faces(&self) -> Vec<usize> {
        self.short_faces
            .iter()
            .copied()
            .filter(|&a| {
                !self
                    .short_faces
                    .iter()
                    .any(|&b| b != a && self.lattice.containment.contains(&(a, b)))
            })
            .collect()
    }
}

pub fn stratify(spec: &HamSpec) -> Result<StratifiedPolytope> {
    let polytope = moment_polytope(spec)?;
    let lattice = face_lattice(&polytope);
    let complexity = spec.half_dim.checked_sub(polytope.dim()).ok_or_else(|| {
        Error::InconsistentSpec("momentum polytope dimension exceeds half dimension".to_string())
    })?;
    let face_complexity = lattice
        .faces
        .iter()
        .map(|f| face_complexity(spec, &polytope, f))
        .collect::<Result<Vec<_>>>()?;
    let top = face_complexity[lattice.top_id()];
    if top != complexity {
        return Err(Error::FaceComplexity(format!(
            "top face has complexity {top}, the action has complexity {complexity}"
        )));
    }
    let mut delta_k: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (id, &k) in face_complexity.iter().enumerate() {
        delta_k.entry(k).or_default().push(id);
    }
    let short_faces = delta_k.get(&0).cloned().unwrap_or_default();
    Ok(StratifiedPolytope {
        polytope,
        lattice,
        half_dim: spec.half_dim,
        face_complexity,
        delta_k,
        short_faces,
        complexity,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralPosition {
    pub per_component: Vec<bool>,
    pub overall: bool,
}

/// Weights at a component are in general position when all of them are
/// nonzero (so fixed surfaces never are) and every sub-collection of at most
/// `dim Δ` of them is linearly independent.
pub fn general_position(spec: &HamSpec) -> Result<GeneralPosition> {
    let d = moment_polytope(spec)?.dim();
    let per_component: Vec<bool> = spec
        .components
        .iter()
        .map(|c| {
            if c.kind.is_surface() || c.weights.iter().any(WeightVector::is_zero) {
                return false;
            }
            let ws: Vec<QVector> = c.weights.iter().map(WeightVector::to_rational).collect();
            let k = d.min(ws.len());
            ws.iter().cloned().combinations(k).all(|sub| rank_of(&sub) == k)
        })
        .collect();
    let overall = per_component.iter().all(|&b| b);
    Ok(GeneralPosition { per_component, overall })
}
