//! Topology of the orbit space `M/T` read off the stratified momentum polytope.

use std::fmt;

use crate::error::{Error, Result};
use crate::gallery;
use crate::hamspace::{general_position, stratify, validate, HamSpec, StratifiedPolytope};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Fiber {
    Sphere2,
    SurfaceOfGenus(u32),
}

impl fmt::Display for Fiber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Sphere2 => f.write_str("S^2"),
            Self::SurfaceOfGenus(g) => write!(f, "Sigma_{g}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Sphere(usize),
    Disk(usize),
    /// `Δ × Σ_g`.
    ProductPolytopeSurface(u32),
    /// `(Δ × fiber) / ~`, crushing fibers over the short faces. Lists the
    /// maximal short faces by face id.
    CollapsedProduct { short_faces: Vec<usize>, fiber: Fiber },
    StratificationOnly { complexity: usize },
}

impl Verdict {
    pub fn kind(&self) -> &'static str {
        match self {
            Self::Sphere(_) => "Sphere",
            Self::Disk(_) => "Disk",
            Self::ProductPolytopeSurface(_) => "ProductPolytopeSurface",
            Self::CollapsedProduct { .. } => "CollapsedProduct",
            Self::StratificationOnly { .. } => "StratificationOnly",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Sphere(m) => write!(f, "Sphere({m})"),
            Self::Disk(m) => write!(f, "Disk({m})"),
            Self::ProductPolytopeSurface(g) => write!(f, "ProductPolytopeSurface({g})"),
            Self::CollapsedProduct { short_faces, fiber } => {
                write!(f, "CollapsedProduct(short faces {short_faces:?}, fiber {fiber})")
            }
            Self::StratificationOnly { complexity } => write!(f, "StratificationOnly(complexity {complexity})"),
        }
    }
}

/// Which result produced the verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    /// Complexity zero: the quotient is the polytope.
    ToricDisk,
    /// Complexity one with every proper face short: `∂Δ * S²`, a sphere.
    ShortBoundaryJoin,
    /// Complexity one without short faces: `Δ × Σ`.
    TallProduct,
    /// Complexity one, some but not all boundary short: fibers over the short set are crushed.
    CollapsedSphereFibers,
    /// Circle action on a 4-manifold, interval polytope with a single short endpoint.
    FourDimensionalOneShortEnd,
    /// Circle action on a 4-manifold, split by the number of fixed surfaces.
    FourDimensionalSurfaceCount,
    /// Complexity two or more: no topological statement.
    ComplexityAboveOne,
}

impl Provenance {
    pub fn describe(self) -> &'static str {
        match self {
            Self::ToricDisk => "complexity zero: quotient is the momentum polytope, a disk",
            Self::ShortBoundaryJoin => "complexity one, short set is the boundary: join of the boundary with S^2",
            Self::TallProduct => "complexity one, no short faces: product of the polytope with a surface",
            Self::CollapsedSphereFibers => "complexity one, short set nonempty: sphere fibers crushed over short faces",
            Self::FourDimensionalOneShortEnd => "circle on a 4-manifold with one short endpoint: three-disk",
            Self::FourDimensionalSurfaceCount => "circle on a 4-manifold: split by number of fixed surfaces",
            Self::ComplexityAboveOne => "complexity above one: stratification only",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.describe())
    }
}

#[derive(Clone, Debug)]
pub struct TopologyReport {
    pub spec_name: String,
    pub verdict: Verdict,
    pub provenance: Provenance,
    /// Set when the quotient is presented as `∂Δ * S²`.
    pub join_presentation: bool,
    pub general_position: bool,
    /// Expected homeomorphism type for a named catalog example.
    pub claimed_quotient: Option<&'static str>,
    pub stratification: StratifiedPolytope,
}

impl TopologyReport {
    pub fn complexity(&self) -> usize {
        self.stratification.complexity
    }

    pub fn half_dim(&self) -> usize {
        self.stratification.half_dim
    }
}

/// Validates, stratifies and classifies.
pub fn classify(spec: &HamSpec) -> Result<TopologyReport> {
    let report = validate(spec);
    if !report.passed() {
        return Err(Error::Validation(Box::new(report)));
    }
    classify_unvalidated(spec)
}

/// Classifies without running the validator first. Stratification errors
/// still surface.
pub fn classify_unvalidated(spec: &HamSpec) -> Result<TopologyReport> {
    let sp = stratify(spec)?;
    let n = sp.half_dim;
    let d = sp.dim();
    let gp = general_position(spec)?.overall;

    let (verdict, provenance, join) = match sp.complexity {
        0 => (Verdict::Disk(n), Provenance::ToricDisk, false),
        1 if sp.short_faces.is_empty() => {
            let genus = common_genus(spec)?;
            (Verdict::ProductPolytopeSurface(genus), Provenance::TallProduct, false)
        }
        1 if d > 0 && sp.boundary_is_short() => (Verdict::Sphere(n + 1), Provenance::ShortBoundaryJoin, true),
        1 if n == 2 && d == 1 && sp.short_faces.len() == 1 => {
            (Verdict::Disk(3), Provenance::FourDimensionalOneShortEnd, false)
        }
        1 => (
            Verdict::CollapsedProduct { short_faces: sp.maximal_short_faces(), fiber: Fiber::Sphere2 },
            Provenance::CollapsedSphereFibers,
            false,
        ),
        k => (Verdict::StratificationOnly { complexity: k }, Provenance::ComplexityAboveOne, false),
    };
    Ok(TopologyReport {
        spec_name: spec.name.clone(),
        verdict,
        provenance,
        join_presentation: join,
        general_position: gp,
        claimed_quotient: gallery::entry_for(spec).map(|e| e.claimed_quotient),
        stratification: sp,
    })
}

fn common_genus(spec: &HamSpec) -> Result<u32> {
    let mut genera = spec.components.iter().filter_map(|c| c.kind.genus());
    let g = genera
        .next()
        .ok_or_else(|| Error::InvalidSpec("no short faces but no fixed surface to read the genus from".into()))?;
    if genera.any(|h| h != g) {
        return Err(Error::InvalidSpec("fixed surfaces of different genera".into()));
    }
    Ok(g)
}

/// The dedicated classification of circle actions on 4-manifolds, by the
/// number of fixed surfaces.
pub fn classify_m4(spec: &HamSpec) -> Result<TopologyReport> {
    let report = validate(spec);
    if !report.passed() {
        return Err(Error::Validation(Box::new(report)));
    }
    let sp = stratify(spec)?;
    if sp.dim() != 1 || sp.half_dim != 2 || sp.complexity != 1 {
        return Err(Error::Precondition(format!(
            "needs an interval polytope in half dimension 2, got dimension {} in half dimension {}",
            sp.dim(),
            sp.half_dim
        )));
    }
    let genera: Vec<u32> = spec.components.iter().filter_map(|c| c.kind.genus()).collect();
    let verdict = match genera.as_slice() {
        [] => Verdict::Sphere(3),
        [0] => Verdict::Disk(3),
        [g] => return Err(Error::InvalidSpec(format!("a single fixed surface must be a sphere, got genus {g}"))),
        [g, h] if g == h => Verdict::ProductPolytopeSurface(*g),
        [g, h] => return Err(Error::InvalidSpec(format!("fixed surfaces of genus {g} and {h}"))),
        more => return Err(Error::InvalidSpec(format!("{} fixed surfaces, at most two possible", more.len()))),
    };
    Ok(TopologyReport {
        spec_name: spec.name.clone(),
        join_presentation: verdict == Verdict::Sphere(3),
        verdict,
        provenance: Provenance::FourDimensionalSurfaceCount,
        general_position: general_position(spec)?.overall,
        claimed_quotient: gallery::entry_for(spec).map(|e| e.claimed_quotient),
        stratification: sp,
    })
}

/// The two factors of `∂Δ * S²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JoinPresentation {
    /// Proper faces of the polytope, making up its boundary.
    pub boundary_faces: Vec<usize>,
    /// Dimension of the boundary sphere.
    pub boundary_dim: usize,
    pub fiber: Fiber,
}

impl fmt::Display for JoinPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S^{} * {} (boundary of the polytope, {} faces)", self.boundary_dim, self.fiber, self.boundary_faces.len())
    }
}

pub fn join_presentation(report: &TopologyReport) -> Result<JoinPresentation> {
    if !report.join_presentation {
        return Err(Error::Precondition(format!("verdict {} has no join presentation", report.verdict)));
    }
    let sp = &report.stratification;
    Ok(JoinPresentation {
        boundary_faces: sp.lattice.proper_faces().map(|f| f.id).collect(),
        boundary_dim: sp.dim() - 1,
        fiber: Fiber::Sphere2,
    })
}
