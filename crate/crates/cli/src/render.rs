use std::fmt::Write as _;

use hamquot::polytope::RationalPolytope;
use hamquot::simplicial::ModelCheck;
use hamquot::{
    join_presentation, CheckStatus, HamSpec, HomologyProfile, Rational, StratifiedPolytope, TopologyReport,
    ValidationReport, Verdict, VerificationResult,
};
use serde_json::{json, Map, Value};

fn rat(x: &Rational) -> Value {
    Value::String(x.to_string())
}

fn point(v: &[Rational]) -> String {
    format!("({})", v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "))
}

/// `[a, b] x [c, d]` when the polytope is a full-dimensional box.
pub fn box_form(p: &RationalPolytope) -> Option<String> {
    let n = p.ambient_dim;
    if p.dim() != n || p.vertices.len() != 1 << n {
        return None;
    }
    let lo: Vec<&Rational> = (0..n).map(|i| p.vertices.iter().map(|v| &v[i]).min().unwrap()).collect();
    let hi: Vec<&Rational> = (0..n).map(|i| p.vertices.iter().map(|v| &v[i]).max().unwrap()).collect();
    let corner = |v: &Vec<Rational>| (0..n).all(|i| v[i] == *lo[i] || v[i] == *hi[i]);
    if !p.vertices.iter().all(corner) {
        return None;
    }
    Some((0..n).map(|i| format!("[{}, {}]", lo[i], hi[i])).collect::<Vec<_>>().join(" x "))
}

pub fn validation_json(r: &ValidationReport) -> Value {
    json!({
        "passed": r.passed(),
        "checks": r.checks.iter().map(|c| json!({
            "name": c.name,
            "status": c.status.to_string(),
            "detail": c.detail,
        })).collect::<Vec<_>>(),
    })
}

pub fn validation_text(r: &ValidationReport) -> String {
    let mut s = String::from("validation:\n");
    for c in &r.checks {
        let _ = writeln!(s, "  {:<20} {:<7} {}", c.name, c.status, c.detail);
    }
    s
}

fn polytope_json(p: &RationalPolytope) -> Value {
    json!({
        "dim": p.dim(),
        "vertices": p.vertices.iter().map(|v| v.iter().map(rat).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "facets": p.facets.iter().zip(&p.facet_vertices).map(|(f, vs)| json!({
            "conormal": f.conormal.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "offset": rat(&f.offset),
            "vertices": vs,
        })).collect::<Vec<_>>(),
    })
}

fn stratification_json(sp: &StratifiedPolytope) -> Value {
    let delta_k: Map<String, Value> = sp.delta_k.iter().map(|(k, ids)| (k.to_string(), json!(ids))).collect();
    json!({
        "complexity": sp.complexity,
        "half_dim": sp.half_dim,
        "faces": sp.lattice.faces.iter().map(|f| json!({
            "id": f.id,
            "dim": f.dim,
            "vertices": f.vertices,
            "complexity": sp.face_complexity[f.id],
        })).collect::<Vec<_>>(),
        "delta_k": delta_k,
        "short_faces": sp.short_faces,
    })
}

fn verdict_json(v: &Verdict) -> Value {
    let mut m = Map::new();
    m.insert("kind".into(), json!(v.kind()));
    m.insert("display".into(), json!(v.to_string()));
    match v {
        Verdict::Sphere(d) | Verdict::Disk(d) => {
            m.insert("dim".into(), json!(d));
        }
        Verdict::ProductPolytopeSurface(g) => {
            m.insert("genus".into(), json!(g));
        }
        Verdict::CollapsedProduct { short_faces, fiber } => {
            m.insert("short_faces".into(), json!(short_faces));
            m.insert("fiber".into(), json!(fiber.to_string()));
        }
        Verdict::StratificationOnly { complexity } => {
            m.insert("complexity".into(), json!(complexity));
        }
    }
    Value::Object(m)
}

pub fn report_json(validation: Option<&ValidationReport>, r: &TopologyReport) -> Value {
    json!({
        "spec": r.spec_name,
        "validation": validation.map(validation_json),
        "polytope": polytope_json(&r.stratification.polytope),
        "stratification": stratification_json(&r.stratification),
        "general_position": r.general_position,
        "verdict": verdict_json(&r.verdict),
        "provenance": r.provenance.describe(),
        "join_presentation": join_presentation(r).ok().map(|j| j.to_string()),
        "claimed_quotient": r.claimed_quotient,
    })
}

fn face_text(sp: &StratifiedPolytope, id: usize) -> String {
    let f = sp.lattice.face(id);
    let pts: Vec<String> = f.vertices.iter().map(|&v| point(&sp.polytope.vertices[v])).collect();
    format!("face {id} (dim {}): {}", f.dim, pts.join(" "))
}

pub fn polytope_text(p: &RationalPolytope) -> String {
    let mut s = format!("polytope: dimension {}, {} vertices\n", p.dim(), p.vertices.len());
    if let Some(b) = box_form(p) {
        let _ = writeln!(s, "  = {b}");
    }
    for v in &p.vertices {
        let _ = writeln!(s, "  vertex {}", point(v));
    }
    s
}

pub fn report_text(validation: Option<&ValidationReport>, r: &TopologyReport) -> String {
    let sp = &r.stratification;
    let mut s = format!("spec: {}\n", r.spec_name);
    if let Some(v) = validation {
        s.push_str(&validation_text(v));
    }
    s.push_str(&polytope_text(&sp.polytope));
    let _ = writeln!(s, "complexity: {} (half dimension {})", sp.complexity, sp.half_dim);
    s.push_str("face complexities:\n");
    for f in &sp.lattice.faces {
        let _ = writeln!(s, "  {:>3}  {}", sp.face_complexity[f.id], face_text(sp, f.id));
    }
    let _ = writeln!(s, "general position: {}", r.general_position);
    let _ = writeln!(s, "verdict: {}", r.verdict);
    if let Verdict::CollapsedProduct { short_faces, .. } = &r.verdict {
        for &f in short_faces {
            let _ = writeln!(s, "  short {}", face_text(sp, f));
        }
    }
    let _ = writeln!(s, "provenance: {}", r.provenance);
    if let Ok(j) = join_presentation(r) {
        let _ = writeln!(s, "join presentation: {j}");
    }
    if let Some(c) = r.claimed_quotient {
        let _ = writeln!(s, "expected quotient: {c}");
    }
    s
}

fn profile_json(p: &HomologyProfile) -> Value {
    json!({
        "betti": p.betti(),
        "torsion": p.torsion().iter().map(|t| t.iter().map(ToString::to_string).collect::<Vec<_>>()).collect::<Vec<_>>(),
    })
}

fn check_json(c: &ModelCheck) -> Value {
    json!({
        "model": c.model,
        "cells": c.cells,
        "computed": profile_json(&c.computed),
        "expected": profile_json(&c.expected),
        "passed": c.passed(),
    })
}

pub fn verification_json(v: &VerificationResult) -> Value {
    json!({
        "status": v.status.to_string(),
        "estimated_simplices": v.estimated_simplices.to_string(),
        "checks": v.checks.iter().map(check_json).collect::<Vec<_>>(),
        "note": "equal homology is necessary, not sufficient, for the claimed homeomorphism type",
    })
}

pub fn verification_text(v: &VerificationResult) -> String {
    let mut s = format!("verification: {}\n", v.status);
    let _ = writeln!(s, "  estimated simplices: {}", v.estimated_simplices);
    for c in &v.checks {
        let _ = writeln!(
            s,
            "  {} model ({} cells): computed {}, expected {} [{}]",
            c.model,
            c.cells,
            c.computed,
            c.expected,
            if c.passed() { "ok" } else { "mismatch" }
        );
    }
    s
}

pub fn spec_text(spec: &HamSpec, p: &RationalPolytope) -> String {
    let mut s = format!(
        "{}: torus rank {}, half dimension {}, {} fixed components\n",
        spec.name,
        spec.torus_rank,
        spec.half_dim,
        spec.components.len()
    );
    s.push_str(&polytope_text(p));
    s.push_str("components:\n");
    for c in &spec.components {
        let kind = match c.kind.genus() {
            Some(g) => format!("surface genus {g}"),
            None => "point".to_string(),
        };
        let ws: Vec<String> = c.weights.iter().map(|w| format!("{:?}", w.0)).collect();
        let _ = writeln!(s, "  {kind:<16} at {:<16} weights {}", point(&c.moment), ws.join(" "));
    }
    s
}

pub fn first_failed(r: &ValidationReport) -> Option<&'static str> {
    r.checks.iter().find(|c| c.status == CheckStatus::Fail).map(|c| c.name)
}
