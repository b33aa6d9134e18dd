//! Generators for standard examples: coadjoint orbits, products of rotated
//! spheres, surfaces times spheres and projective spaces.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use itertools::Itertools;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactq::{dot, i64_to_rational_vec, rat, rat_frac, QVector, Rational};
use crate::hamspace::{FixedComponent, HamSpec, WeightVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootSystemType {
    A(usize),
    B2,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystemData {
    pub type_label: RootSystemType,
    /// Number of coordinates the roots live in.
    pub rank: usize,
    pub positive_roots: Vec<Vec<i64>>,
    pub simple_roots: Vec<Vec<i64>>,
    /// Integer reflection matrices, row-major.
    pub weyl_generators: Vec<Vec<Vec<i64>>>,
}

impl RootSystemData {
    /// `A_n` in the `n + 1` coordinates of the sum-zero hyperplane.
    pub fn a(n: usize) -> Self {
        let k = n + 1;
        let e = |i: usize| (0..k).map(|j| i64::from(i == j)).collect::<Vec<i64>>();
        let diff = |i: usize, j: usize| e(i).iter().zip(e(j)).map(|(a, b)| a - b).collect::<Vec<_>>();
        let positive_roots = (0..k).tuple_combinations().map(|(i, j)| diff(i, j)).collect();
        let simple_roots = (0..n).map(|i| diff(i, i + 1)).collect();
        let weyl_generators = (0..n)
            .map(|i| {
                (0..k)
                    .map(|r| {
                        let src = if r == i { i + 1 } else if r == i + 1 { i } else { r };
                        e(src)
                    })
                    .collect()
            })
            .collect();
        Self { type_label: RootSystemType::A(n), rank: k, positive_roots, simple_roots, weyl_generators }
    }

    pub fn b2() -> Self {
        Self {
            type_label: RootSystemType::B2,
            rank: 2,
            positive_roots: vec![vec![1, -1], vec![0, 1], vec![1, 1], vec![1, 0]],
            simple_roots: vec![vec![1, -1], vec![0, 1]],
            weyl_generators: vec![vec![vec![0, 1], vec![1, 0]], vec![vec![1, 0], vec![0, -1]]],
        }
    }
}

fn apply_int(m: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    m.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
}

fn apply_rat(m: &[Vec<i64>], v: &[Rational]) -> QVector {
    m.iter().map(|row| dot(&i64_to_rational_vec(row), v)).collect()
}

/// The orbit of `lambda` under the Weyl group, with the isotropy weights
/// `-w(alpha)` at `w(lambda)` for positive roots `alpha` not orthogonal to `lambda`.
pub fn coadjoint_orbit(rs: &RootSystemData, lambda: &[Rational]) -> Result<HamSpec> {
    if lambda.len() != rs.rank {
        return Err(Error::DimensionMismatch { expected: rs.rank, found: lambda.len() });
    }
    for a in &rs.simple_roots {
        if dot(lambda, &i64_to_rational_vec(a)).is_negative() {
            return Err(Error::NotDominant(format!("pairing with simple root {a:?} is negative")));
        }
    }
    let base: Vec<Vec<i64>> = rs
        .positive_roots
        .iter()
        .filter(|a| !dot(lambda, &i64_to_rational_vec(a)).is_zero())
        .map(|a| a.iter().map(|x| -x).collect())
        .collect();
    if base.is_empty() {
        return Err(Error::DegenerateOrbit);
    }

    let mut seen: BTreeMap<QVector, Vec<Vec<i64>>> = BTreeMap::new();
    let mut queue = VecDeque::from([(lambda.to_vec(), base)]);
    while let Some((p, ws)) = queue.pop_front() {
        if seen.contains_key(&p) {
            continue;
        }
        for s in &rs.weyl_generators {
            let q = apply_rat(s, &p);
            if !seen.contains_key(&q) {
                queue.push_back((q, ws.iter().map(|w| apply_int(s, w)).collect()));
            }
        }
        seen.insert(p, ws);
    }
    let half_dim = seen.values().next().map_or(0, Vec::len);
    let components = seen
        .into_iter()
        .map(|(p, ws)| FixedComponent::point(p, ws.into_iter().sorted().map(WeightVector).collect()))
        .collect();
    Ok(HamSpec { name: "coadjoint-orbit".into(), torus_rank: rs.rank, half_dim, components })
}

/// A product of 2-spheres, each rotated by the given weight. Fixed points are
/// all pole choices; at the pole `s = ±1` of a factor with weight `w` the
/// moment contribution is `s w` and the isotropy weight is `-s w`.
pub fn sphere_product(actions: &[Vec<i64>], r: usize) -> Result<HamSpec> {
    for (i, w) in actions.iter().enumerate() {
        if w.len() != r {
            return Err(Error::DimensionMismatch { expected: r, found: w.len() });
        }
        if w.iter().all(|&x| x == 0) {
            return Err(Error::ZeroSphereWeight(i));
        }
    }
    let mut components = Vec::new();
    for signs in (0..actions.len()).map(|_| [1i64, -1]).multi_cartesian_product() {
        let mut moment = vec![0i64; r];
        let mut weights = Vec::new();
        for (s, w) in signs.iter().zip(actions) {
            for (m, x) in moment.iter_mut().zip(w) {
                *m += s * x;
            }
            weights.push(WeightVector(w.iter().map(|x| -s * x).collect()));
        }
        components.push(FixedComponent::point(i64_to_rational_vec(&moment), weights));
    }
    if actions.is_empty() {
        components.push(FixedComponent::point(vec![Rational::zero(); r], vec![]));
    }
    Ok(HamSpec { name: "sphere-product".into(), torus_rank: r, half_dim: actions.len(), components })
}

/// `Σ_g × S²` with the circle rotating the sphere.
pub fn surface_times_sphere(g: u32) -> HamSpec {
    HamSpec {
        name: "sigma-g-x-s2".into(),
        torus_rank: 1,
        half_dim: 2,
        components: vec![
            FixedComponent::surface(g, vec![rat(0)], vec![WeightVector(vec![1])]),
            FixedComponent::surface(g, vec![rat(1)], vec![WeightVector(vec![-1])]),
        ],
    }
}

/// `Σ_g × S²` blown up at a fixed point, leaving an interior isolated fixed point.
pub fn blowup_example(g: u32) -> HamSpec {
    let mut spec = surface_times_sphere(g);
    spec.name = "blowup-g".into();
    spec.components.push(FixedComponent::point(
        vec![rat_frac(1, 2)],
        vec![WeightVector(vec![1]), WeightVector(vec![-1])],
    ));
    spec
}

/// Linear torus action on `CP^m` with weight `weights[i]` on the `i`-th
/// homogeneous coordinate.
pub fn projective_space(weights: &[Vec<i64>]) -> Result<HamSpec> {
    let r = weights.first().map_or(0, Vec::len);
    if let Some(w) = weights.iter().find(|w| w.len() != r) {
        return Err(Error::DimensionMismatch { expected: r, found: w.len() });
    }
    if weights.is_empty() {
        return Err(Error::InvalidSpec("projective space needs at least one coordinate".into()));
    }
    let groups: BTreeMap<&Vec<i64>, Vec<usize>> = weights.iter().enumerate().fold(BTreeMap::new(), |mut m, (i, w)| {
        m.entry(w).or_insert_with(Vec::new).push(i);
        m
    });
    let mut components = Vec::new();
    for (w, members) in &groups {
        let normal: Vec<WeightVector> = weights
            .iter()
            .filter(|v| v != w)
            .map(|v| WeightVector(v.iter().zip(w.iter()).map(|(a, b)| a - b).collect()))
            .sorted()
            .collect();
        let moment = i64_to_rational_vec(w);
        match members.len() {
            1 => components.push(FixedComponent::point(moment, normal)),
            2 => components.push(FixedComponent::surface(0, moment, normal)),
            k => {
                return Err(Error::UnsupportedFixedComponent(format!(
                    "coordinates {members:?} span a fixed CP^{} of complex dimension {}",
                    k - 1,
                    k - 1
                )))
            }
        }
    }
    Ok(HamSpec { name: "projective-space".into(), torus_rank: r, half_dim: weights.len() - 1, components })
}

pub fn gr2c4() -> HamSpec {
    let lambda = vec![rat_frac(1, 2), rat_frac(1, 2), rat_frac(-1, 2), rat_frac(-1, 2)];
    named(coadjoint_orbit(&RootSystemData::a(3), &lambda), "gr2c4")
}

pub fn flag_su3() -> HamSpec {
    named(coadjoint_orbit(&RootSystemData::a(2), &[rat(1), rat(0), rat(-1)]), "flag-su3")
}

pub fn so5_orbit() -> HamSpec {
    named(coadjoint_orbit(&RootSystemData::b2(), &[rat(1), rat(0)]), "so5-orbit")
}

pub fn s2xs2_diag() -> HamSpec {
    named(sphere_product(&[vec![1], vec![1]], 1), "s2xs2-diag")
}

pub fn s2_cubed() -> HamSpec {
    named(sphere_product(&[vec![1, 0], vec![1, 0], vec![0, 1]], 2), "s2cubed")
}

pub fn cp2_s1() -> HamSpec {
    named(projective_space(&[vec![1], vec![0], vec![0]]), "cp2-s1")
}

/// `CP^5` as the projectivized second exterior power of `C^4`.
pub fn cp5_t3() -> HamSpec {
    let ws: Vec<Vec<i64>> = (0..4)
        .tuple_combinations()
        .map(|(i, j)| (0..4).map(|k| i64::from(k == i || k == j)).collect())
        .collect();
    named(projective_space(&ws), "cp5-t3")
}

fn named(spec: Result<HamSpec>, name: &str) -> HamSpec {
    let mut spec = spec.expect("fixed catalog parameters are valid");
    spec.name = name.to_string();
    spec
}

/// A named catalog example.
#[derive(Clone, Copy, Debug)]
pub struct GalleryEntry {
    pub name: &'static str,
    /// Number of the example in the standard catalog of quotients; some numbers have no generator.
    pub catalog_index: u8,
    pub description: &'static str,
    /// The expected homeomorphism type of `M/T`.
    pub claimed_quotient: &'static str,
    /// Whether the example depends on a genus parameter.
    pub takes_genus: bool,
    build: fn(u32) -> HamSpec,
}

impl GalleryEntry {
    /// Builds the spec; `genus` is ignored unless [`Self::takes_genus`].
    pub fn build(&self, genus: u32) -> HamSpec {
        (self.build)(genus)
    }
}

pub fn catalog() -> Vec<GalleryEntry> {
    vec![
        GalleryEntry {
            name: "gr2c4",
            catalog_index: 1,
            description: "Gr(2, C^4) as a coadjoint orbit of SU(4), maximal torus T^3",
            claimed_quotient: "S^5",
            takes_genus: false,
            build: |_| gr2c4(),
        },
        GalleryEntry {
            name: "flag-su3",
            catalog_index: 2,
            description: "complete flags in C^3, coadjoint orbit of SU(3), T^2",
            claimed_quotient: "S^4",
            takes_genus: false,
            build: |_| flag_su3(),
        },
        GalleryEntry {
            name: "so5-orbit",
            catalog_index: 3,
            description: "coadjoint orbit of SO(5) through (1, 0), T^2",
            claimed_quotient: "S^4",
            takes_genus: false,
            build: |_| so5_orbit(),
        },
        GalleryEntry {
            name: "s2xs2-diag",
            catalog_index: 5,
            description: "S^2 x S^2 with the diagonal circle action",
            claimed_quotient: "S^3",
            takes_genus: false,
            build: |_| s2xs2_diag(),
        },
        GalleryEntry {
            name: "cp2-s1",
            catalog_index: 6,
            description: "CP^2 with a circle rotating one homogeneous coordinate",
            claimed_quotient: "D^3",
            takes_genus: false,
            build: |_| cp2_s1(),
        },
        GalleryEntry {
            name: "sigma-g-x-s2",
            catalog_index: 7,
            description: "Sigma_g x S^2 with the circle rotating S^2",
            claimed_quotient: "I x Sigma_g",
            takes_genus: true,
            build: surface_times_sphere,
        },
        GalleryEntry {
            name: "blowup-g",
            catalog_index: 7,
            description: "Sigma_g x S^2 blown up equivariantly at a fixed point",
            claimed_quotient: "I x Sigma_g",
            takes_genus: true,
            build: blowup_example,
        },
        GalleryEntry {
            name: "s2cubed",
            catalog_index: 8,
            description: "(S^2)^3 with T^2 rotating the factors by (1,0), (1,0), (0,1)",
            claimed_quotient: "S^3 x I",
            takes_genus: false,
            build: |_| s2_cubed(),
        },
        GalleryEntry {
            name: "cp5-t3",
            catalog_index: 10,
            description: "CP^5 = P(wedge^2 C^4) with the torus of SU(4)",
            claimed_quotient: "S^2 * CP^2",
            takes_genus: false,
            build: |_| cp5_t3(),
        },
    ]
}

pub fn lookup(name: &str) -> Option<GalleryEntry> {
    catalog().into_iter().find(|e| e.name == name)
}

/// Catalog entry whose example the spec was built from, matched by name.
pub fn entry_for(spec: &HamSpec) -> Option<GalleryEntry> {
    lookup(&spec.name)
}

/// Moments of the components, deduplicated.
pub fn distinct_moments(spec: &HamSpec) -> BTreeSet<QVector> {
    spec.moments().into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::qvec;
    use crate::hamspace::{moment_polytope, validate};

    fn w(xs: &[i64]) -> WeightVector {
        WeightVector(xs.to_vec())
    }

    #[test]
    fn weyl_reflections_permute_roots() {
        for rs in [RootSystemData::a(1), RootSystemData::a(2), RootSystemData::a(3), RootSystemData::b2()] {
            let roots: BTreeSet<Vec<i64>> = rs
                .positive_roots
                .iter()
                .flat_map(|a| [a.clone(), a.iter().map(|x| -x).collect()])
                .collect();
            for s in &rs.weyl_generators {
                let image: BTreeSet<Vec<i64>> = roots.iter().map(|a| apply_int(s, a)).collect();
                assert_eq!(image, roots);
            }
        }
    }

    #[test]
    fn flag_hexagon() {
        let spec = flag_su3();
        assert_eq!(spec.components.len(), 6);
        assert!(spec.components.iter().all(|c| c.weights.len() == 3));
        let p = moment_polytope(&spec).unwrap();
        assert_eq!((p.dim(), p.vertices.len()), (2, 6));
    }

    #[test]
    fn grassmannian_octahedron() {
        let spec = gr2c4();
        assert_eq!(spec.components.len(), 6);
        assert_eq!(spec.half_dim, 4);
        let p = moment_polytope(&spec).unwrap();
        assert_eq!((p.dim(), p.vertices.len(), p.facets.len()), (3, 6, 8));
        let top = spec
            .components
            .iter()
            .find(|c| c.moment == vec![rat_frac(1, 2), rat_frac(1, 2), rat_frac(-1, 2), rat_frac(-1, 2)])
            .unwrap();
        let expected: Vec<WeightVector> =
            vec![w(&[-1, 0, 1, 0]), w(&[-1, 0, 0, 1]), w(&[0, -1, 1, 0]), w(&[0, -1, 0, 1])].into_iter().sorted().collect();
        assert_eq!(top.weights, expected);
    }

    #[test]
    fn so5_diamond() {
        let spec = so5_orbit();
        let moments = distinct_moments(&spec);
        let expected: BTreeSet<QVector> =
            [qvec(&[1, 0]), qvec(&[-1, 0]), qvec(&[0, 1]), qvec(&[0, -1])].into_iter().collect();
        assert_eq!(moments, expected);
        let e1 = spec.components.iter().find(|c| c.moment == qvec(&[1, 0])).unwrap();
        let expected: Vec<WeightVector> = vec![w(&[-1, 0]), w(&[-1, 1]), w(&[-1, -1])].into_iter().sorted().collect();
        assert_eq!(e1.weights, expected);
    }

    #[test]
    fn orbit_errors() {
        let a2 = RootSystemData::a(2);
        assert!(matches!(coadjoint_orbit(&a2, &qvec(&[0, 0, 0])), Err(Error::DegenerateOrbit)));
        assert!(matches!(coadjoint_orbit(&a2, &qvec(&[-1, 0, 1])), Err(Error::NotDominant(_))));
        // Non-generic: stabilizer roots are dropped, CP^2 as an orbit.
        let cp2 = coadjoint_orbit(&a2, &[rat_frac(2, 3), rat_frac(-1, 3), rat_frac(-1, 3)]).unwrap();
        assert_eq!((cp2.components.len(), cp2.half_dim), (3, 2));
    }

    #[test]
    fn sphere_products() {
        let spec = s2_cubed();
        assert_eq!(spec.components.len(), 8);
        let p = moment_polytope(&spec).unwrap();
        let mut corners = vec![qvec(&[-2, -1]), qvec(&[-2, 1]), qvec(&[2, -1]), qvec(&[2, 1])];
        corners.sort();
        assert_eq!(p.vertices, corners);
        let cp1 = sphere_product(&[vec![1]], 1).unwrap();
        assert_eq!(cp1.components.len(), 2);
        assert!(matches!(sphere_product(&[vec![0, 0]], 2), Err(Error::ZeroSphereWeight(0))));
    }

    #[test]
    fn projective_spaces() {
        let spec = cp2_s1();
        assert_eq!(spec.components.len(), 2);
        let sphere = spec.components.iter().find(|c| c.kind.is_surface()).unwrap();
        assert_eq!((sphere.moment.clone(), sphere.weights.clone()), (qvec(&[0]), vec![w(&[1])]));
        let pt = spec.components.iter().find(|c| !c.kind.is_surface()).unwrap();
        assert_eq!((pt.moment.clone(), pt.weights.clone()), (qvec(&[1]), vec![w(&[-1]), w(&[-1])]));

        let cp5 = cp5_t3();
        assert_eq!(cp5.components.len(), 6);
        assert!(cp5.components.iter().all(|c| c.weights.len() == 5));
        assert!(matches!(
            projective_space(&[vec![1], vec![0], vec![0], vec![0]]),
            Err(Error::UnsupportedFixedComponent(_))
        ));
    }

    #[test]
    fn catalog_names_unique_and_valid() {
        let names: Vec<&str> = catalog().iter().map(|e| e.name).collect();
        assert_eq!(names.iter().unique().count(), names.len());
        for e in catalog() {
            for g in 0..=3 {
                let spec = e.build(g);
                assert_eq!(spec.name, e.name);
                assert!(validate(&spec).passed(), "{} g={g}", e.name);
            }
        }
    }
}
