//! Coordinate systems on a polygon: chordal, cartographic and convex
//! mixtures, with verification and interpolation.

use std::collections::BTreeMap;

use crate::algebra::Weight;
use crate::decomposition::{orbit, ChordalDecomposition, Orbit};
use crate::error::{Error, Result};
use crate::geometry::{triangle_coords, Point2, Polygon};
use crate::locator::Locator;
use crate::scalar::Scalar;
use crate::Rational;

/// Per-vertex weights of a point, indexed by label - 1. Entries lie in
/// `[0, 1]` and sum to one; zeros are kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordinateVector<S = Rational> {
    weights: Vec<S>,
}

impl<S: Scalar> CoordinateVector<S> {
    pub fn new(weights: Vec<S>) -> Result<Self> {
        let mut total = S::zero();
        for w in &weights {
            Weight::new(w.clone())?;
            total = total + w.clone();
        }
        if !total.is_one() {
            return Err(Error::WeightSum(total.to_string()));
        }
        Ok(CoordinateVector { weights })
    }

    /// The coordinate vector of vertex `label`.
    pub fn unit(n: usize, label: usize) -> Self {
        let mut weights = vec![S::zero(); n];
        weights[label - 1] = S::one();
        CoordinateVector { weights }
    }

    pub fn weights(&self) -> &[S] {
        &self.weights
    }

    pub fn weight(&self, label: usize) -> &S {
        &self.weights[label - 1]
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn nonzero_count(&self) -> usize {
        self.weights.iter().filter(|w| !w.is_zero()).count()
    }

    pub fn into_weights(self) -> Vec<S> {
        self.weights
    }
}

/// The chordal coordinate system of one decomposition.
#[derive(Debug, Clone)]
pub struct ChordalSystem<S = Rational> {
    locator: Locator<S>,
}

impl<S: Scalar> ChordalSystem<S> {
    pub fn new(polygon: Polygon<S>, decomposition: ChordalDecomposition) -> Result<Self> {
        Ok(ChordalSystem { locator: Locator::new(polygon, decomposition)? })
    }

    pub fn polygon(&self) -> &Polygon<S> {
        self.locator.polygon()
    }

    pub fn decomposition(&self) -> &ChordalDecomposition {
        self.locator.decomposition()
    }

    pub fn locator(&self) -> &Locator<S> {
        &self.locator
    }

    pub fn eval(&self, a: &Point2<S>) -> Result<CoordinateVector<S>> {
        chordal_eval(a, self)
    }
}

/// Areal coordinates of `a` in any region containing it, zero elsewhere.
///
/// When `a` lies in several regions (on a chord or at a vertex) every
/// containing region must give the same vector; a disagreement is reported
/// as an invariant error.
pub fn chordal_eval<S: Scalar>(a: &Point2<S>, sys: &ChordalSystem<S>) -> Result<CoordinateVector<S>> {
    let poly = sys.polygon();
    let n = poly.n();
    let location = sys.locator.locate(a)?;
    let regions = sys.locator.tree().nodes();
    let mut result: Option<Vec<S>> = None;
    for &idx in &location.regions {
        let tri = &regions[idx].triangle;
        let coords = triangle_coords(a, tri, poly)?;
        let mut weights = vec![S::zero(); n];
        for (label, w) in tri.labels().into_iter().zip(coords) {
            weights[label - 1] = w.into_inner();
        }
        match &result {
            None => result = Some(weights),
            Some(prev) if *prev != weights => {
                return Err(Error::Invariant(format!(
                    "regions disagree at {a}: {prev:?} vs {weights:?}"
                )))
            }
            Some(_) => {}
        }
    }
    let weights = result.expect("locate returns at least one region");
    Ok(CoordinateVector { weights })
}

/// Literal evaluation of the pointwise recursion defining the chordal
/// coordinate function of vertex `v` at `a`:
///
/// `F(S ∪ {τ}) = F(S) + 1_τ ⟨v⟩_τ - 1_{τ ∩ ⋃S} ⟨v⟩_τ`, `F(∅) = 0`,
///
/// taken over the regions containing `v` in parsing-tree order, with closed
/// indicator functions. Independent of the locate-based evaluation.
pub fn chordal_eval_recursive<S: Scalar>(
    a: &Point2<S>,
    v: usize,
    sys: &ChordalSystem<S>,
) -> Result<Weight<S>> {
    let poly = sys.polygon();
    poly.vertex(v)?;
    poly.check_contains(a)?;
    let mut accumulated = S::zero();
    let mut seen = Vec::new();
    for tri in sys.locator.regions().into_iter().filter(|t| t.contains_label(v)) {
        let in_tau = tri.contains(a, poly)?;
        let mut in_overlap = false;
        if in_tau {
            for sigma in &seen {
                if crate::geometry::OrientedTriangle::contains(sigma, a, poly)? {
                    in_overlap = true;
                    break;
                }
            }
        }
        let pos = tri.labels().iter().position(|&l| l == v).expect("filtered on v");
        let coord = tri.affine_coords(a, poly)?[pos].clone();
        if in_tau {
            accumulated = accumulated + coord.clone();
        }
        if in_overlap {
            accumulated = accumulated - coord;
        }
        seen.push(tri);
    }
    Weight::new(accumulated)
}

/// The average of chordal systems over the dihedral orbit of a
/// representative decomposition, weighted by orbit multiplicity / 2n.
#[derive(Debug, Clone)]
pub struct CartographicSystem<S = Rational> {
    representative: ChordalDecomposition,
    orbit: Orbit,
    members: Vec<(ChordalSystem<S>, S)>,
}

impl<S: Scalar> CartographicSystem<S> {
    pub fn new(polygon: Polygon<S>, representative: ChordalDecomposition) -> Result<Self> {
        if polygon.n() != representative.n() {
            return Err(Error::SizeMismatch { expected: polygon.n(), got: representative.n() });
        }
        let orbit = orbit(&representative);
        let order = count::<S>(orbit.group_order());
        let members = orbit
            .multiplicities
            .iter()
            .map(|(d, &m)| {
                let sys = ChordalSystem::new(polygon.clone(), d.clone())?;
                Ok((sys, count::<S>(m) / order.clone()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CartographicSystem { representative, orbit, members })
    }

    pub fn representative(&self) -> &ChordalDecomposition {
        &self.representative
    }

    pub fn orbit(&self) -> &Orbit {
        &self.orbit
    }

    /// Distinct orbit members with their normalized weights.
    pub fn members(&self) -> &[(ChordalSystem<S>, S)] {
        &self.members
    }

    pub fn polygon(&self) -> &Polygon<S> {
        self.members[0].0.polygon()
    }

    pub fn eval(&self, a: &Point2<S>) -> Result<CoordinateVector<S>> {
        cartographic_eval(a, self)
    }
}

fn count<S: Scalar>(k: usize) -> S {
    (0..k).fold(S::zero(), |acc, _| acc + S::one())
}

pub fn cartographic_eval<S: Scalar>(
    a: &Point2<S>,
    sys: &CartographicSystem<S>,
) -> Result<CoordinateVector<S>> {
    let parts: Vec<(&ChordalSystem<S>, S)> = sys.members.iter().map(|(c, w)| (c, w.clone())).collect();
    combine(a, sys.polygon().n(), &parts)
}

/// A finite convex combination of coordinate systems on one polygon.
#[derive(Debug, Clone)]
pub struct MixtureSystem<S = Rational> {
    parts: Vec<(CoordinateSystem<S>, Weight<S>)>,
}

impl<S: Scalar> MixtureSystem<S> {
    pub fn parts(&self) -> &[(CoordinateSystem<S>, Weight<S>)] {
        &self.parts
    }
}

#[derive(Debug, Clone)]
pub enum CoordinateSystem<S = Rational> {
    Chordal(ChordalSystem<S>),
    Cartographic(CartographicSystem<S>),
    Mixture(MixtureSystem<S>),
}

impl<S: Scalar> CoordinateSystem<S> {
    pub fn chordal(polygon: Polygon<S>, d: ChordalDecomposition) -> Result<Self> {
        Ok(CoordinateSystem::Chordal(ChordalSystem::new(polygon, d)?))
    }

    pub fn cartographic(polygon: Polygon<S>, representative: ChordalDecomposition) -> Result<Self> {
        Ok(CoordinateSystem::Cartographic(CartographicSystem::new(polygon, representative)?))
    }

    pub fn polygon(&self) -> &Polygon<S> {
        match self {
            CoordinateSystem::Chordal(c) => c.polygon(),
            CoordinateSystem::Cartographic(c) => c.polygon(),
            CoordinateSystem::Mixture(m) => m.parts[0].0.polygon(),
        }
    }

    /// The system as a flat convex combination of chordal systems. Weights
    /// of repeated chordal systems are not merged.
    pub fn components(&self) -> Vec<(&ChordalSystem<S>, S)> {
        match self {
            CoordinateSystem::Chordal(c) => vec![(c, S::one())],
            CoordinateSystem::Cartographic(c) => c.members.iter().map(|(s, w)| (s, w.clone())).collect(),
            CoordinateSystem::Mixture(m) => m
                .parts
                .iter()
                .flat_map(|(sys, w)| {
                    sys.components()
                        .into_iter()
                        .map(move |(c, inner)| (c, inner * w.value().clone()))
                })
                .collect(),
        }
    }

    pub fn eval(&self, a: &Point2<S>) -> Result<CoordinateVector<S>> {
        match self {
            CoordinateSystem::Chordal(c) => chordal_eval(a, c),
            _ => combine(a, self.polygon().n(), &self.components()),
        }
    }
}

fn combine<S: Scalar>(
    a: &Point2<S>,
    n: usize,
    parts: &[(&ChordalSystem<S>, S)],
) -> Result<CoordinateVector<S>> {
    let mut weights = vec![S::zero(); n];
    for (sys, w) in parts {
        let v = chordal_eval(a, sys)?;
        for (acc, x) in weights.iter_mut().zip(v.weights) {
            *acc = acc.clone() + x * w.clone();
        }
    }
    Ok(CoordinateVector { weights })
}

/// Convex combination of systems sharing one polygon.
pub fn mix_systems<S: Scalar>(parts: Vec<(CoordinateSystem<S>, S)>) -> Result<CoordinateSystem<S>> {
    let Some((first, _)) = parts.first() else {
        return Err(Error::EmptyMixture);
    };
    let polygon = first.polygon().clone();
    let mut total = S::zero();
    let mut checked = Vec::with_capacity(parts.len());
    for (sys, w) in parts {
        if *sys.polygon() != polygon {
            return Err(Error::PolygonMismatch);
        }
        total = total + w.clone();
        checked.push((sys, Weight::new(w)?));
    }
    if !total.is_one() {
        return Err(Error::WeightSum(total.to_string()));
    }
    Ok(CoordinateSystem::Mixture(MixtureSystem { parts: checked }))
}

#[derive(Debug, Clone, PartialEq)]
pub enum ViolationKind<S = Rational> {
    /// Weights do not sum to one.
    PartitionOfUnity { sum: S },
    /// The weighted vertex sum is not the point.
    LinearPrecision { reproduced: Point2<S> },
    /// A weight left `[0, 1]`.
    WeightRange { label: usize, value: S },
    /// Evaluation itself failed.
    Evaluation(Error),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Violation<S = Rational> {
    pub point: Point2<S>,
    pub kind: ViolationKind<S>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport<S = Rational> {
    pub samples: usize,
    pub violations: Vec<Violation<S>>,
}

impl<S> VerificationReport<S> {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks one weight vector at `a`: range, partition of unity and linear
/// precision, each independently.
pub fn verify_vector<S: Scalar>(poly: &Polygon<S>, a: &Point2<S>, weights: &[S]) -> Vec<Violation<S>> {
    let mut out = Vec::new();
    let violation = |kind| Violation { point: a.clone(), kind };
    let mut sum = S::zero();
    let mut reproduced = Point2::origin();
    for (i, (w, v)) in weights.iter().zip(poly.vertices()).enumerate() {
        if *w < S::zero() || *w > S::one() {
            out.push(violation(ViolationKind::WeightRange { label: i + 1, value: w.clone() }));
        }
        sum = sum + w.clone();
        reproduced = reproduced.add(&v.scale(w));
    }
    if weights.len() != poly.n() || !sum.is_one() {
        out.push(violation(ViolationKind::PartitionOfUnity { sum }));
    }
    if reproduced != *a {
        out.push(violation(ViolationKind::LinearPrecision { reproduced }));
    }
    out
}

/// Evaluates `sys` at every sample and collects all violations.
pub fn verify_system<S: Scalar>(sys: &CoordinateSystem<S>, samples: &[Point2<S>]) -> VerificationReport<S> {
    let mut violations = Vec::new();
    for a in samples {
        match sys.eval(a) {
            Ok(v) => violations.extend(verify_vector(sys.polygon(), a, v.weights())),
            Err(e) => violations.push(Violation { point: a.clone(), kind: ViolationKind::Evaluation(e) }),
        }
    }
    VerificationReport { samples: samples.len(), violations }
}

/// `Σ_v ⟨a|v⟩ f(v)` for vector-valued vertex data keyed by label.
pub fn interpolate<S: Scalar>(
    a: &Point2<S>,
    sys: &CoordinateSystem<S>,
    values: &BTreeMap<usize, Vec<S>>,
) -> Result<Vec<S>> {
    let n = sys.polygon().n();
    let dim = values.get(&1).ok_or(Error::MissingValue(1))?.len();
    for label in 1..=n {
        let got = values.get(&label).ok_or(Error::MissingValue(label))?.len();
        if got != dim {
            return Err(Error::DimensionMismatch { label, expected: dim, got });
        }
    }
    if let Some(&extra) = values.keys().find(|&&l| l == 0 || l > n) {
        return Err(Error::UnknownLabel { label: extra, n });
    }
    let coords = sys.eval(a)?;
    let mut out = vec![S::zero(); dim];
    for (label, w) in (1..=n).zip(coords.weights()) {
        if w.is_zero() {
            continue;
        }
        for (acc, f) in out.iter_mut().zip(&values[&label]) {
            *acc = acc.clone() + w.clone() * f.clone();
        }
    }
    Ok(out)
}
