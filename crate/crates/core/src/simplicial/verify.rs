use std::fmt;

use super::{
    boundary_subcomplex_of_polytope, collapse_fibers, delannoy, join, simplex, simplex_boundary_sphere,
    surface_complex, HomologyProfile, OrderedComplex,
};
use crate::classify::{join_presentation, JoinPresentation, Provenance, TopologyReport, Verdict};
use crate::error::Result;
use crate::hamspace::StratifiedPolytope;

pub const DEFAULT_MAX_SIMPLICES: usize = 200_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VerificationStatus {
    Pass,
    Fail,
    Skipped(String),
}

impl fmt::Display for VerificationStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Pass => f.write_str("pass"),
            Self::Fail => f.write_str("fail"),
            Self::Skipped(why) => write!(f, "skipped: {why}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelCheck {
    pub model: &'static str,
    pub cells: usize,
    pub computed: HomologyProfile,
    pub expected: HomologyProfile,
}

impl ModelCheck {
    pub fn passed(&self) -> bool {
        self.computed == self.expected
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationResult {
    pub status: VerificationStatus,
    pub estimated_simplices: u128,
    pub checks: Vec<ModelCheck>,
}

impl VerificationResult {
    pub fn passed(&self) -> bool {
        self.status == VerificationStatus::Pass
    }

    fn skipped(why: String, estimated_simplices: u128) -> Self {
        Self { status: VerificationStatus::Skipped(why), estimated_simplices, checks: Vec::new() }
    }
}

/// Upper bound on the simplices of the staircase product.
pub fn estimate_product_size(base: &OrderedComplex, fiber: &OrderedComplex) -> u128 {
    let (fb, ff) = (base.f_vector(), fiber.f_vector());
    let mut total = 0u128;
    for (p, &a) in fb.iter().enumerate() {
        for (q, &b) in ff.iter().enumerate() {
            total += a as u128 * b as u128 * delannoy(p, q);
        }
    }
    total
}

/// `∂Δ * S²` with the boundary triangulated by pulling.
pub fn join_model(sp: &StratifiedPolytope, jp: &JoinPresentation) -> Result<OrderedComplex> {
    let (_, boundary) = boundary_subcomplex_of_polytope(sp, &jp.boundary_faces)?;
    Ok(join(&boundary, &simplex_boundary_sphere(3)?))
}

/// Builds the crushed-product model of the claimed quotient, computes its
/// homology and compares with the homology of the claimed space. Sphere
/// verdicts are also checked on the join model. Agreement is a necessary
/// condition only.
pub fn verify_report(report: &TopologyReport, max_simplices: usize) -> Result<VerificationResult> {
    let sp = &report.stratification;
    let (fiber, expected_of_sub): (OrderedComplex, Option<usize>) = match (&report.verdict, report.provenance) {
        (Verdict::StratificationOnly { complexity }, _) => {
            return Ok(VerificationResult::skipped(format!("StratificationOnly: complexity {complexity}"), 0));
        }
        (Verdict::Disk(_), Provenance::ToricDisk) => (simplex(0), None),
        (Verdict::ProductPolytopeSurface(g), _) => (surface_complex(*g), None),
        (Verdict::CollapsedProduct { .. }, _) => (simplex_boundary_sphere(3)?, Some(3)),
        _ => (simplex_boundary_sphere(3)?, None),
    };
    let collapsed: Vec<usize> = if report.provenance == Provenance::ToricDisk {
        (0..sp.lattice.faces.len()).collect()
    } else {
        sp.short_faces.clone()
    };
    let (full, sub) = boundary_subcomplex_of_polytope(sp, &collapsed)?;

    let join_complex = if report.join_presentation {
        Some(join_model(sp, &join_presentation(report)?)?)
    } else {
        None
    };
    let estimate = estimate_product_size(&full, &fiber) + join_complex.as_ref().map_or(0, |j| j.len() as u128);
    if estimate > max_simplices as u128 {
        return Ok(VerificationResult::skipped(
            format!("size cap: estimated {estimate} simplices exceeds {max_simplices}"),
            estimate,
        ));
    }

    let expected = match (&report.verdict, expected_of_sub) {
        (Verdict::Sphere(m), _) => HomologyProfile::sphere(*m),
        (Verdict::Disk(_), _) => HomologyProfile::point(),
        (Verdict::ProductPolytopeSurface(g), _) => HomologyProfile::surface(*g),
        (_, Some(k)) => sub.homology().suspend(k),
        (v, None) => unreachable!("verdict {v} has no expected profile"),
    };

    let quotient = collapse_fibers(&full, &sub, &fiber)?;
    let mut checks = vec![ModelCheck {
        model: "quotient",
        cells: quotient.cell_count(),
        computed: quotient.homology(),
        expected: expected.clone(),
    }];
    if let Some(j) = join_complex {
        checks.push(ModelCheck { model: "join", cells: j.len(), computed: j.homology(), expected });
    }
    let agree = checks.windows(2).all(|w| w[0].computed == w[1].computed);
    let status = if agree && checks.iter().all(ModelCheck::passed) {
        VerificationStatus::Pass
    } else {
        VerificationStatus::Fail
    };
    Ok(VerificationResult { status, estimated_simplices: estimate, checks })
}
