//! Consistency checks on a [`HamSpec`] before it is stratified or classified.
//!
//! Checks run in order. A check whose prerequisites failed is reported as
//! skipped rather than run on data it cannot interpret.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use num_traits::{Signed, Zero};

use super::{stratify, ComponentKind, HamSpec, WeightVector};
use crate::exactq::{
    dot, normal_within, primitive_integer, rank_of, solve_square, sub, AffineHull, QVector, RatMatrix,
    Rational,
};
use crate::polytope::{face_lattice, in_tangent_cone, tangent_cone, RationalPolytope};

pub const V1: &str = "V1-structure";
pub const V2: &str = "V2-vertex-coverage";
pub const V3: &str = "V3-weight-span";
pub const V4: &str = "V4-vertex-cone";
pub const V5: &str = "V5-face-complexity";
pub const V6: &str = "V6-monotonicity";
pub const V7: &str = "V7-surface-genus";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Pass => "pass",
            Self::Fail => "fail",
            Self::Skipped => "skipped",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub checks: Vec<CheckResult>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == CheckStatus::Pass)
    }

    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.status == CheckStatus::Fail)
    }

    pub fn failures(&self) -> Vec<&'static str> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail).map(|c| c.name).collect()
    }

    pub fn status(&self, name: &str) -> Option<CheckStatus> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.status)
    }

    fn push(&mut self, name: &'static str, outcome: Outcome) -> bool {
        let (status, detail) = match outcome {
            Outcome::Pass(d) => (CheckStatus::Pass, d),
            Outcome::Fail(d) => (CheckStatus::Fail, d),
        };
        self.checks.push(CheckResult { name, status, detail });
        status == CheckStatus::Pass
    }

    fn skip(&mut self, name: &'static str, because: &[&str]) {
        self.checks.push(CheckResult {
            name,
            status: CheckStatus::Skipped,
            detail: format!("requires {}", because.join(", ")),
        });
    }
}

enum Outcome {
    Pass(String),
    Fail(String),
}

fn outcome(problems: Vec<String>, ok: &str) -> Outcome {
    if problems.is_empty() {
        Outcome::Pass(ok.to_string())
    } else {
        Outcome::Fail(problems.join("; "))
    }
}

pub fn validate(spec: &HamSpec) -> ValidationReport {
    let mut report = ValidationReport::default();
    let names = [V2, V3, V4, V5, V6, V7];

    if !report.push(V1, outcome(spec.structural_problems(), "weight counts and lengths consistent")) {
        for n in names {
            report.skip(n, &[V1]);
        }
        return report;
    }
    let polytope = match super::moment_polytope(spec) {
        Ok(p) => p,
        Err(e) => {
            report.checks[0] = CheckResult { name: V1, status: CheckStatus::Fail, detail: e.to_string() };
            for n in names {
                report.skip(n, &[V1]);
            }
            return report;
        }
    };

    let v2 = report.push(V2, vertex_coverage(spec, &polytope));
    let v3 = report.push(V3, weight_span(spec, &polytope));
    if !(v2 && v3) {
        for n in [V4, V5, V6, V7] {
            report.skip(n, &[V2, V3]);
        }
        return report;
    }
    report.push(V4, vertex_cones(spec, &polytope));

    let v5 = report.push(V5, face_consistency(spec, &polytope));
    if !v5 {
        report.skip(V6, &[V5]);
        report.skip(V7, &[V5]);
        return report;
    }
    let strat = match stratify(spec) {
        Ok(s) => s,
        Err(e) => {
            report.push(V6, Outcome::Fail(e.to_string()));
            report.skip(V7, &[V6]);
            return report;
        }
    };
    let bad: Vec<String> = strat
        .lattice
        .containment
        .iter()
        .filter(|(a, b)| strat.face_complexity[*a] > strat.face_complexity[*b])
        .map(|(a, b)| {
            format!(
                "face {a} (complexity {}) inside face {b} (complexity {})",
                strat.face_complexity[*a], strat.face_complexity[*b]
            )
        })
        .collect();
    report.push(V6, outcome(bad, "face complexity is monotone"));

    let genus = if strat.complexity == 1 && strat.short_faces.is_empty() {
        let genera: BTreeSet<u32> = spec.components.iter().filter_map(|c| c.kind.genus()).collect();
        match genera.len() {
            1 => Outcome::Pass(format!("all fixed surfaces have genus {}", genera.first().unwrap())),
            0 => Outcome::Fail("no short faces but no fixed surfaces".to_string()),
            _ => Outcome::Fail(format!("fixed surfaces of different genera {genera:?}")),
        }
    } else {
        Outcome::Pass("not applicable".to_string())
    };
    report.push(V7, genus);
    report
}

/// Every vertex of the region cut out by the local weight cones must carry a
/// fixed component.
fn vertex_coverage(spec: &HamSpec, polytope: &RationalPolytope) -> Outcome {
    let hull = &polytope.affine_hull;
    let leaves = spec
        .components
        .iter()
        .flat_map(|c| &c.weights)
        .any(|w| !hull.contains_direction(&w.to_rational()));
    if leaves {
        return Outcome::Pass("skipped cone reconstruction: weights leave the affine hull (see V3)".into());
    }
    let predicted = local_cone_vertices(spec, hull);
    let moments: BTreeSet<QVector> = spec.moments().into_iter().collect();
    let missing: Vec<String> =
        predicted.iter().filter(|v| !moments.contains(*v)).map(|v| format_point(v)).collect();
    if missing.is_empty() {
        Outcome::Pass(format!("{} vertices, each carries a fixed component", polytope.vertices.len()))
    } else {
        Outcome::Fail(format!("vertex without fixed component: {}", missing.join(", ")))
    }
}

fn weight_span(spec: &HamSpec, polytope: &RationalPolytope) -> Outcome {
    let hull = &polytope.affine_hull;
    let d = hull.dim();
    let mut problems = Vec::new();
    for (i, c) in spec.components.iter().enumerate() {
        let ws: Vec<QVector> = c.weights.iter().map(WeightVector::to_rational).collect();
        if let Some(j) = ws.iter().position(|w| !hull.contains_direction(w)) {
            problems.push(format!("component {i}: weight {j} is not parallel to the polytope"));
            continue;
        }
        let r = rank_of(&ws);
        if r != d {
            problems.push(format!("component {i}: weights span dimension {r}, polytope has dimension {d}"));
        }
    }
    outcome(problems, &format!("weights span the {d}-dimensional direction space at every component"))
}

fn vertex_cones(spec: &HamSpec, polytope: &RationalPolytope) -> Outcome {
    let mut problems = Vec::new();
    for (i, c) in spec.components.iter().enumerate() {
        let Some(v) = polytope.vertex_index(&c.moment) else { continue };
        let ws: Vec<QVector> = c.weights.iter().map(WeightVector::to_rational).collect();
        if let Some(j) = ws.iter().position(|w| !in_tangent_cone(polytope, v, w)) {
            problems.push(format!("component {i}: weight {j} points out of the polytope"));
            continue;
        }
        let rays: BTreeSet<_> = ws.iter().map(|w| primitive_integer(w)).collect();
        for e in tangent_cone(polytope, v) {
            if !rays.contains(&e) {
                problems.push(format!("component {i}: no weight along edge direction {e:?}"));
            }
        }
    }
    outcome(problems, "weight cones match the tangent cones at vertices")
}

fn face_consistency(spec: &HamSpec, polytope: &RationalPolytope) -> Outcome {
    let lattice = face_lattice(polytope);
    let mut problems = Vec::new();
    for face in &lattice.faces {
        let mut seen: Option<(usize, i64)> = None;
        for i in super::components_in_face(spec, face) {
            let c = &spec.components[i];
            let k = c.parallel_count(face) as i64 - face.dim as i64;
            if k < 0 {
                problems.push(format!("face {}: component {i} gives negative complexity {k}", face.id));
            }
            match seen {
                None => seen = Some((i, k)),
                Some((j, v)) if v != k => problems.push(format!(
                    "face {}: component {j} gives complexity {v}, component {i} gives {k}",
                    face.id
                )),
                Some(_) => {}
            }
            let r = rank_of(&c.parallel_weights(face));
            if r != face.dim {
                problems.push(format!(
                    "face {}: parallel weights at component {i} span dimension {r}, face has dimension {}",
                    face.id, face.dim
                ));
            }
        }
        if seen.is_none() {
            problems.push(format!("face {} carries no fixed component", face.id));
        }
    }
    outcome(problems, "face complexities agree across components")
}

/// Vertices of `{x in aff : <n, x - μ(c)> >= 0}` over all components `c` and
/// all facet normals `n` of the cone spanned by the weights at `c`.
fn local_cone_vertices(spec: &HamSpec, hull: &AffineHull) -> Vec<QVector> {
    let d = hull.dim();
    if d == 0 {
        return vec![hull.basepoint.clone()];
    }
    let basis = &hull.direction_basis;
    // Inequalities a . t >= b in affine coordinates x = base + sum t_j basis_j.
    let mut ineqs: BTreeSet<(QVector, Rational)> = BTreeSet::new();
    for c in &spec.components {
        let ws: Vec<QVector> = c.weights.iter().map(WeightVector::to_rational).collect();
        for subset in ws.iter().cloned().combinations(d - 1) {
            if rank_of(&subset) != d - 1 {
                continue;
            }
            let Some(n) = normal_within(basis, &subset) else { continue };
            let signs: Vec<Rational> = ws.iter().map(|w| dot(&n, w)).collect();
            let nonneg = signs.iter().all(|s| !s.is_negative());
            let nonpos = signs.iter().all(|s| !s.is_positive());
            for (ok, sign) in [(nonneg, Rational::from_integer(1.into())), (nonpos, Rational::from_integer((-1).into()))] {
                if !ok {
                    continue;
                }
                let a: QVector = basis.iter().map(|b| dot(&n, b) * &sign).collect();
                let rhs = dot(&n, &sub(&c.moment, &hull.basepoint)) * &sign;
                ineqs.insert(normalize(a, rhs));
            }
        }
    }
    let ineqs: Vec<(QVector, Rational)> = ineqs.into_iter().collect();
    let mut out = BTreeSet::new();
    for pick in (0..ineqs.len()).combinations(d) {
        let rows: Vec<QVector> = pick.iter().map(|&i| ineqs[i].0.clone()).collect();
        let rhs: Vec<Rational> = pick.iter().map(|&i| ineqs[i].1.clone()).collect();
        let m = RatMatrix::from_rows(&rows).expect("equal lengths");
        let Some(t) = solve_square(&m, &rhs) else { continue };
        if ineqs.iter().all(|(a, b)| dot(a, &t) >= *b) {
            let mut x = hull.basepoint.clone();
            for (tj, bj) in t.iter().zip(basis) {
                for (xi, bi) in x.iter_mut().zip(bj) {
                    *xi += tj * bi;
                }
            }
            out.insert(x);
        }
    }
    out.into_iter().collect()
}

fn normalize(a: QVector, b: Rational) -> (QVector, Rational) {
    let Some(lead) = a.iter().find(|x| !x.is_zero()).map(|x| x.abs()) else {
        return (a, b);
    };
    (a.iter().map(|x| x / &lead).collect(), b / lead)
}

fn format_point(v: &[Rational]) -> String {
    format!("({})", v.iter().map(ToString::to_string).join(", "))
}

impl ComponentKind {
    pub fn label(self) -> &'static str {
        match self {
            Self::Point => "point",
            Self::Surface { .. } => "surface",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::qvec;
    use crate::gallery;

    #[test]
    fn gallery_specs_validate() {
        for entry in gallery::catalog() {
            let spec = entry.build(1);
            let r = validate(&spec);
            assert!(r.passed(), "{}: {:?}", entry.name, r);
        }
    }

    #[test]
    fn flipped_weight_sign_fails_only_vertex_cone() {
        let mut spec = gallery::s2_cubed();
        let c = spec.components.iter_mut().find(|c| c.moment == qvec(&[2, 1])).unwrap();
        c.weights[0] = c.weights[0].neg();
        let r = validate(&spec);
        assert_eq!(r.failures(), vec![V4], "{r:?}");
        assert!(r.checks.iter().all(|c| c.status != CheckStatus::Skipped));
    }

    #[test]
    fn deleted_vertex_component_fails_coverage() {
        let mut spec = gallery::s2_cubed();
        spec.components.retain(|c| c.moment != qvec(&[2, 1]));
        let r = validate(&spec);
        assert_eq!(r.failures(), vec![V2], "{r:?}");
        assert!(r.first_failure().unwrap().detail.contains("(2, 1)"));
    }

    #[test]
    fn wrong_weight_count_fails_structure() {
        let mut spec = gallery::gr2c4();
        spec.components[3].weights.pop();
        let r = validate(&spec);
        assert_eq!(r.failures(), vec![V1]);
        assert_eq!(r.status(V7), Some(CheckStatus::Skipped));
    }

    #[test]
    fn surfaces_of_different_genus() {
        let mut spec = gallery::surface_times_sphere(1);
        spec.components[1].kind = ComponentKind::Surface { genus: 2 };
        let r = validate(&spec);
        assert_eq!(r.failures(), vec![V7]);
    }

    #[test]
    fn weights_off_the_hull_fail_span() {
        let mut spec = gallery::s2xs2_diag();
        spec.torus_rank = 2;
        for c in &mut spec.components {
            c.moment.push(Rational::zero());
            for w in &mut c.weights {
                w.0.push(1);
            }
        }
        let r = validate(&spec);
        assert_eq!(r.status(V3), Some(CheckStatus::Fail));
    }
}
