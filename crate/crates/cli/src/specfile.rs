//! JSON spec files. Rationals are written as strings `"p/q"`; on input bare
//! integers are accepted too.

use std::path::Path;

use anyhow::{bail, Context, Result};
use hamquot::exactq::parse_rational;
use hamquot::{ComponentKind, FixedComponent, HamSpec, Rational, WeightVector};
use serde::{Deserialize, Serialize};

// Fields are declared in key order so the output is sorted.
#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    pub fixed_components: Vec<ComponentEntry>,
    pub half_dim: usize,
    pub name: String,
    pub torus_rank: usize,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentEntry {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub genus: Option<u32>,
    pub kind: Kind,
    pub moment: Vec<RationalEntry>,
    pub weights: Vec<Vec<i64>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Point,
    Surface,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RationalEntry {
    Int(i64),
    Text(String),
}

impl RationalEntry {
    fn value(&self) -> Result<Rational> {
        match self {
            Self::Int(n) => Ok(Rational::from_integer((*n).into())),
            Self::Text(s) => Ok(parse_rational(s)?),
        }
    }
}

impl SpecFile {
    pub fn from_spec(spec: &HamSpec) -> Self {
        let fixed_components = spec
            .components
            .iter()
            .map(|c| ComponentEntry {
                genus: c.kind.genus(),
                kind: if c.kind.is_surface() { Kind::Surface } else { Kind::Point },
                moment: c.moment.iter().map(|x| RationalEntry::Text(x.to_string())).collect(),
                weights: c.weights.iter().map(|w| w.0.clone()).collect(),
            })
            .collect();
        Self { fixed_components, half_dim: spec.half_dim, name: spec.name.clone(), torus_rank: spec.torus_rank }
    }

    pub fn into_spec(self) -> Result<HamSpec> {
        let mut components = Vec::with_capacity(self.fixed_components.len());
        for (i, c) in self.fixed_components.into_iter().enumerate() {
            let kind = match (c.kind, c.genus) {
                (Kind::Point, None) => ComponentKind::Point,
                (Kind::Point, Some(_)) => bail!("component {i}: a point has no genus"),
                (Kind::Surface, Some(genus)) => ComponentKind::Surface { genus },
                (Kind::Surface, None) => bail!("component {i}: surface without genus"),
            };
            let moment = c
                .moment
                .iter()
                .map(RationalEntry::value)
                .collect::<Result<Vec<_>>>()
                .with_context(|| format!("component {i}: moment"))?;
            components.push(FixedComponent { kind, moment, weights: c.weights.into_iter().map(WeightVector).collect() });
        }
        Ok(HamSpec { name: self.name, torus_rank: self.torus_rank, half_dim: self.half_dim, components })
    }
}

pub fn parse(text: &str) -> Result<HamSpec> {
    let file: SpecFile = serde_json::from_str(text).context("malformed spec file")?;
    file.into_spec()
}

pub fn read(path: &Path) -> Result<HamSpec> {
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    parse(&text)
}

/// Pretty JSON with a trailing newline; identical across runs.
pub fn export(spec: &HamSpec) -> String {
    let mut s = serde_json::to_string_pretty(&SpecFile::from_spec(spec)).expect("spec serializes");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use hamquot::gallery;
    use proptest::prelude::*;

    #[test]
    fn round_trip_gallery() {
        for e in gallery::catalog() {
            let spec = e.build(2);
            let text = export(&spec);
            assert_eq!(parse(&text).unwrap(), spec, "{}", e.name);
            assert_eq!(export(&parse(&text).unwrap()), text);
        }
    }

    #[test]
    fn accepts_bare_integers_and_fractions() {
        let text = r#"{"name": "x", "torus_rank": 1, "half_dim": 1,
            "fixed_components": [
                {"kind": "point", "moment": [0], "weights": [[1]]},
                {"kind": "point", "moment": ["3/2"], "weights": [[-1]]}]}"#;
        let spec = parse(text).unwrap();
        assert_eq!(spec.components[1].moment[0], Rational::new(3.into(), 2.into()));
    }

    #[test]
    fn rejects_bad_input() {
        let bad_q = r#"{"name": "x", "torus_rank": 1, "half_dim": 0,
            "fixed_components": [{"kind": "point", "moment": ["1/0"], "weights": []}]}"#;
        assert!(parse(bad_q).is_err());
        let no_genus = r#"{"name": "x", "torus_rank": 1, "half_dim": 1,
            "fixed_components": [{"kind": "surface", "moment": [0], "weights": []}]}"#;
        assert!(parse(no_genus).is_err());
        assert!(parse("{").is_err());
    }

    fn arb_spec() -> impl Strategy<Value = HamSpec> {
        let component = (
            prop::option::of(0u32..4),
            prop::collection::vec((-20i64..20, 1i64..7), 2),
            prop::collection::vec(prop::collection::vec(-3i64..4, 2), 0..4),
        )
            .prop_map(|(genus, moment, weights)| FixedComponent {
                kind: genus.map_or(ComponentKind::Point, |genus| ComponentKind::Surface { genus }),
                moment: moment.into_iter().map(|(p, q)| Rational::new(p.into(), q.into())).collect(),
                weights: weights.into_iter().map(WeightVector).collect(),
            });
        (prop::collection::vec(component, 1..6), 0usize..5, "[a-z0-9-]{1,12}").prop_map(|(components, half_dim, name)| {
            HamSpec { name, torus_rank: 2, half_dim, components }
        })
    }

    proptest! {
        #[test]
        fn export_import_is_exact(spec in arb_spec()) {
            let text = export(&spec);
            prop_assert_eq!(parse(&text).unwrap(), spec);
        }
    }
}
