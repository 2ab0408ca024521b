//! Weights, weighted means, and the distribution normal form of iterated
//! means.

use std::fmt;

use crate::error::{Error, Result};
use crate::geometry::Point2;
use crate::scalar::Scalar;
use crate::Rational;

/// A value in the closed unit interval `[0, 1]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd)]
pub struct Weight<S = Rational>(S);

impl<S: Scalar> Weight<S> {
    pub fn new(value: S) -> Result<Self> {
        if value < S::zero() || value > S::one() {
            return Err(Error::WeightOutOfRange(value.to_string()));
        }
        Ok(Weight(value))
    }

    pub fn zero() -> Self {
        Weight(S::zero())
    }

    pub fn one() -> Self {
        Weight(S::one())
    }

    pub fn value(&self) -> &S {
        &self.0
    }

    pub fn into_inner(self) -> S {
        self.0
    }
}

impl<S: Scalar> fmt::Display for Weight<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// A value in the open unit interval `(0, 1)`: an operator of the
/// barycentric algebra.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd)]
pub struct OpenWeight<S = Rational>(S);

impl<S: Scalar> OpenWeight<S> {
    pub fn new(value: S) -> Result<Self> {
        if value <= S::zero() || value >= S::one() {
            return Err(Error::WeightOutOfRange(value.to_string()));
        }
        Ok(OpenWeight(value))
    }

    pub fn value(&self) -> &S {
        &self.0
    }

    pub fn into_inner(self) -> S {
        self.0
    }
}

impl<S: Scalar> From<OpenWeight<S>> for Weight<S> {
    fn from(p: OpenWeight<S>) -> Self {
        Weight(p.0)
    }
}

impl<S: Scalar> fmt::Display for OpenWeight<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// `p' = 1 - p`.
pub fn complement<S: Scalar>(p: &OpenWeight<S>) -> OpenWeight<S> {
    OpenWeight(S::one() - p.0.clone())
}

/// `p ∘ q = p + q - pq`, which equals `(p'q')'` and stays inside `(0, 1)`.
pub fn dual_product<S: Scalar>(p: &OpenWeight<S>, q: &OpenWeight<S>) -> OpenWeight<S> {
    OpenWeight(p.0.clone() + q.0.clone() - p.0.clone() * q.0.clone())
}

/// `x(1 - p) + y p`, the binary operation of the algebra.
pub fn weighted_mean<S: Scalar>(x: &Point2<S>, y: &Point2<S>, p: &OpenWeight<S>) -> Point2<S> {
    x.lerp(y, p.value())
}

/// A finitely supported probability distribution over labels.
///
/// Entries keep insertion order. Zero weights are dropped unless the
/// distribution was built with [`Distribution::with_zeros`].
#[derive(Debug, Clone, PartialEq)]
pub struct Distribution<L, S = Rational> {
    entries: Vec<(L, Weight<S>)>,
}

impl<L: PartialEq + fmt::Debug, S: Scalar> Distribution<L, S> {
    /// Builds a distribution, pruning zero weights.
    pub fn new(entries: Vec<(L, S)>) -> Result<Self> {
        let mut d = Self::with_zeros(entries)?;
        d.entries.retain(|(_, w)| !w.value().is_zero());
        Ok(d)
    }

    /// Builds a distribution and keeps explicit zero weights.
    pub fn with_zeros(entries: Vec<(L, S)>) -> Result<Self> {
        let mut out: Vec<(L, Weight<S>)> = Vec::with_capacity(entries.len());
        let mut total = S::zero();
        for (label, w) in entries {
            if out.iter().any(|(l, _)| *l == label) {
                return Err(Error::DuplicateLabel(format!("{label:?}")));
            }
            total = total + w.clone();
            out.push((label, Weight::new(w)?));
        }
        if !total.is_one() {
            return Err(Error::WeightSum(total.to_string()));
        }
        Ok(Distribution { entries: out })
    }

    pub fn entries(&self) -> &[(L, Weight<S>)] {
        &self.entries
    }

    pub fn weight_of(&self, label: &L) -> Weight<S> {
        self.entries
            .iter()
            .find(|(l, _)| l == label)
            .map(|(_, w)| w.clone())
            .unwrap_or_else(Weight::zero)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Converts the normal form `(..((x0 x1 q1) x2 q2) .. xr qr)` into the
/// weights `p_k = q_k (1 - q_{k+1}) .. (1 - q_r)` with `q_0 = 1`.
pub fn distribution_from_operators<L, S>(
    labels: Vec<L>,
    operators: &[OpenWeight<S>],
) -> Result<Distribution<L, S>>
where
    L: PartialEq + fmt::Debug,
    S: Scalar,
{
    if labels.is_empty() || operators.len() + 1 != labels.len() {
        return Err(Error::OperatorCount {
            labels: labels.len(),
            expected: labels.len().saturating_sub(1),
            got: operators.len(),
        });
    }
    for (i, l) in labels.iter().enumerate() {
        if labels[..i].contains(l) {
            return Err(Error::DuplicateLabel(format!("{l:?}")));
        }
    }
    // Walk from the outermost operator inwards, carrying the product of
    // complements seen so far.
    let r = operators.len();
    let mut weights = vec![S::zero(); r + 1];
    let mut tail = S::one();
    for k in (1..=r).rev() {
        let q = operators[k - 1].value().clone();
        weights[k] = q.clone() * tail.clone();
        tail = tail * (S::one() - q);
    }
    weights[0] = tail;
    Distribution::new(labels.into_iter().zip(weights).collect())
}
