//! Exact planar primitives: points, strictly convex polygons, signed areas,
//! areal functions and triangle areal coordinates.

use std::fmt;

use crate::algebra::Weight;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Point2<S = Rational> {
    pub x: S,
    pub y: S,
}

impl<S: Scalar> Point2<S> {
    pub fn new(x: S, y: S) -> Self {
        Point2 { x, y }
    }

    pub fn origin() -> Self {
        Point2::new(S::zero(), S::zero())
    }

    /// `self (1 - t) + other t`.
    pub fn lerp(&self, other: &Self, t: &S) -> Self {
        let s = S::one() - t.clone();
        Point2::new(
            self.x.clone() * s.clone() + other.x.clone() * t.clone(),
            self.y.clone() * s + other.y.clone() * t.clone(),
        )
    }

    pub fn scale(&self, t: &S) -> Self {
        Point2::new(self.x.clone() * t.clone(), self.y.clone() * t.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        Point2::new(self.x.clone() + other.x.clone(), self.y.clone() + other.y.clone())
    }
}

impl<S: Scalar> fmt::Display for Point2<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Signed area of the triangle `v0 v1 v2`: half the determinant of the
/// homogeneous 3x3 matrix. Positive iff counterclockwise.
pub fn signed_area<S: Scalar>(v0: &Point2<S>, v1: &Point2<S>, v2: &Point2<S>) -> S {
    let ax = v1.x.clone() - v0.x.clone();
    let ay = v1.y.clone() - v0.y.clone();
    let bx = v2.x.clone() - v0.x.clone();
    let by = v2.y.clone() - v0.y.clone();
    (ax * by - ay * bx) / S::two()
}

/// Affine coordinates of `x` with respect to the triangle `a b c`, which
/// must be non-degenerate. Entries may be negative when `x` is outside.
pub fn barycentric<S: Scalar>(
    x: &Point2<S>,
    a: &Point2<S>,
    b: &Point2<S>,
    c: &Point2<S>,
) -> [S; 3] {
    let total = signed_area(a, b, c);
    [
        signed_area(x, b, c) / total.clone(),
        signed_area(a, x, c) / total.clone(),
        signed_area(a, b, x) / total,
    ]
}

/// A strictly convex polygon with counterclockwise vertices labelled 1..=n.
#[derive(Debug, Clone, PartialEq)]
pub struct Polygon<S = Rational> {
    vertices: Vec<Point2<S>>,
}

impl<S: Scalar> Polygon<S> {
    /// Same as [`validate_polygon`].
    pub fn new(points: Vec<Point2<S>>) -> Result<Self> {
        validate_polygon(points)
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[Point2<S>] {
        &self.vertices
    }

    pub fn vertex(&self, label: usize) -> Result<&Point2<S>> {
        if label == 0 || label > self.n() {
            return Err(Error::UnknownLabel { label, n: self.n() });
        }
        Ok(&self.vertices[label - 1])
    }

    /// Label following `label` on the boundary cycle.
    pub fn next_label(&self, label: usize) -> usize {
        label % self.n() + 1
    }

    pub fn area(&self) -> S {
        let v0 = &self.vertices[0];
        self.vertices[1..]
            .windows(2)
            .fold(S::zero(), |acc, w| acc + signed_area(v0, &w[0], &w[1]))
    }

    /// The first boundary edge `i∧(i+1)` having `x` strictly on its right,
    /// or `None` when `x` lies in the closed polygon.
    pub fn outside_witness(&self, x: &Point2<S>) -> Option<(usize, usize)> {
        (1..=self.n()).map(|i| (i, self.next_label(i))).find(|&(i, j)| {
            signed_area(x, &self.vertices[i - 1], &self.vertices[j - 1]).is_negative()
        })
    }

    pub fn contains(&self, x: &Point2<S>) -> bool {
        self.outside_witness(x).is_none()
    }

    /// Rejects points outside the closed polygon with the offending edge.
    pub fn check_contains(&self, x: &Point2<S>) -> Result<()> {
        match self.outside_witness(x) {
            None => Ok(()),
            Some(edge) => Err(Error::OutsidePolygon { point: x.to_string(), edge }),
        }
    }
}

/// Checks strict convexity and counterclockwise order.
///
/// Rejects fewer than three points, repeated points, collinear or clockwise
/// consecutive triples, and vertex cycles that wind around more than once.
pub fn validate_polygon<S: Scalar>(points: Vec<Point2<S>>) -> Result<Polygon<S>> {
    let n = points.len();
    if n < 3 {
        return Err(Error::TooFewVertices(n));
    }
    for i in 0..n {
        for j in i + 1..n {
            if points[i] == points[j] {
                return Err(Error::RepeatedVertex(i + 1, j + 1));
            }
        }
    }
    for i in 0..n {
        let (j, k) = ((i + 1) % n, (i + 2) % n);
        match signed_area(&points[i], &points[j], &points[k]).sign() {
            0 => return Err(Error::Collinear(i + 1, j + 1, k + 1)),
            -1 => return Err(Error::Clockwise(i + 1, j + 1, k + 1)),
            _ => {}
        }
    }
    // All left turns still admit star-shaped cycles winding several times;
    // the fan from vertex 1 must sweep monotonically.
    for i in 1..n - 1 {
        if !signed_area(&points[0], &points[i], &points[i + 1]).is_positive() {
            return Err(Error::NotSimple(i + 1, i + 2));
        }
    }
    Ok(Polygon { vertices: points })
}

/// Orders a label set: increasing, except that `{1, n}` is ordered `n < 1`.
pub fn standard_order(labels: &[usize], n: usize) -> Result<Vec<usize>> {
    let mut sorted = labels.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() < 2 {
        return Err(Error::TooFewLabels(sorted.len()));
    }
    if let Some(&bad) = sorted.iter().find(|&&l| l == 0 || l > n) {
        return Err(Error::UnknownLabel { label: bad, n });
    }
    if sorted == [1, n] {
        sorted.reverse();
    }
    Ok(sorted)
}

/// The directed segment `j∧k` from `v_j` to `v_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrientedSegment {
    pub j: usize,
    pub k: usize,
}

impl OrientedSegment {
    pub fn new(j: usize, k: usize) -> Result<Self> {
        if j == k {
            return Err(Error::DegenerateSegment(j));
        }
        Ok(OrientedSegment { j, k })
    }

    pub fn reversed(self) -> Self {
        OrientedSegment { j: self.k, k: self.j }
    }
}

impl fmt::Display for OrientedSegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}∧{}", self.j, self.k)
    }
}

/// A triangle `i1∧i2∧i3` of polygon labels in counterclockwise order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrientedTriangle(pub [usize; 3]);

impl OrientedTriangle {
    /// Checks distinct labels and positive orientation on `poly`.
    pub fn new<S: Scalar>(labels: [usize; 3], poly: &Polygon<S>) -> Result<Self> {
        let [a, b, c] = labels;
        let (pa, pb, pc) = (poly.vertex(a)?, poly.vertex(b)?, poly.vertex(c)?);
        if a == b || b == c || a == c || !signed_area(pa, pb, pc).is_positive() {
            return Err(Error::TriangleOrientation(a, b, c));
        }
        Ok(OrientedTriangle(labels))
    }

    /// Rotates the cyclic order so the smallest label comes first.
    pub fn normalized(self) -> Self {
        let [a, b, c] = self.0;
        let m = a.min(b).min(c);
        OrientedTriangle(if m == a {
            [a, b, c]
        } else if m == b {
            [b, c, a]
        } else {
            [c, a, b]
        })
    }

    pub fn labels(&self) -> [usize; 3] {
        self.0
    }

    pub fn contains_label(&self, label: usize) -> bool {
        self.0.contains(&label)
    }

    /// The three directed edges `i1∧i2`, `i2∧i3`, `i3∧i1`.
    pub fn edges(&self) -> [OrientedSegment; 3] {
        let [a, b, c] = self.0;
        [
            OrientedSegment { j: a, k: b },
            OrientedSegment { j: b, k: c },
            OrientedSegment { j: c, k: a },
        ]
    }

    pub fn area<S: Scalar>(&self, poly: &Polygon<S>) -> Result<S> {
        let [a, b, c] = self.0;
        Ok(signed_area(poly.vertex(a)?, poly.vertex(b)?, poly.vertex(c)?))
    }

    /// Closed-set membership via the three edge signs.
    pub fn contains<S: Scalar>(&self, x: &Point2<S>, poly: &Polygon<S>) -> Result<bool> {
        for e in self.edges() {
            if side_of(x, e, poly)? < 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Affine coordinates of `x` in this triangle without a membership check.
    pub fn affine_coords<S: Scalar>(&self, x: &Point2<S>, poly: &Polygon<S>) -> Result<[S; 3]> {
        let [a, b, c] = self.0;
        Ok(barycentric(x, poly.vertex(a)?, poly.vertex(b)?, poly.vertex(c)?))
    }
}

impl fmt::Display for OrientedTriangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}∧{}∧{}", self.0[0], self.0[1], self.0[2])
    }
}

/// The areal function `⟨x | j∧k⟩ = A(x, v_j, v_k)`.
pub fn areal_value<S: Scalar>(x: &Point2<S>, seg: OrientedSegment, poly: &Polygon<S>) -> Result<S> {
    Ok(signed_area(x, poly.vertex(seg.j)?, poly.vertex(seg.k)?))
}

/// +1 when `x` is left of the directed line `v_j → v_k`, 0 on it, -1 right.
pub fn side_of<S: Scalar>(x: &Point2<S>, seg: OrientedSegment, poly: &Polygon<S>) -> Result<i8> {
    Ok(areal_value(x, seg, poly)?.sign())
}

/// Areal coordinates of `x` with respect to the vertices of `tri`, in the
/// triangle's own vertex order. `x` must lie in the closed triangle.
pub fn triangle_coords<S: Scalar>(
    x: &Point2<S>,
    tri: &OrientedTriangle,
    poly: &Polygon<S>,
) -> Result<[Weight<S>; 3]> {
    let [a, b, c] = tri.affine_coords(x, poly)?;
    if a.is_negative() || b.is_negative() || c.is_negative() {
        let [i, j, k] = tri.0;
        return Err(Error::OutsideTriangle { point: x.to_string(), tri: (i, j, k) });
    }
    Ok([Weight::new(a)?, Weight::new(b)?, Weight::new(c)?])
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use num_traits::Signed;

    pub(crate) fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    pub(crate) fn p(x: i64, y: i64) -> Point2 {
        Point2::new(q(x, 1), q(y, 1))
    }

    pub(crate) fn hexagon() -> Polygon {
        Polygon::new(vec![p(2, 1), p(2, 2), p(1, 2), p(0, 1), p(0, 0), p(1, 0)]).unwrap()
    }

    fn seg(j: usize, k: usize) -> OrientedSegment {
        OrientedSegment::new(j, k).unwrap()
    }

    #[test]
    fn signed_area_examples() {
        assert_eq!(signed_area(&p(0, 0), &p(1, 0), &p(0, 1)), q(1, 2));
        assert_eq!(signed_area(&p(0, 0), &p(1, 1), &p(2, 2)), q(0, 1));
        // hexagon v1 v2 v3: det [[1,2,1],[1,2,2],[1,1,2]] = 1
        assert_eq!(signed_area(&p(2, 1), &p(2, 2), &p(1, 2)), q(1, 2));
    }

    #[test]
    fn standard_order_examples() {
        assert_eq!(standard_order(&[1, 6], 6).unwrap(), vec![6, 1]);
        assert_eq!(standard_order(&[5, 2], 6).unwrap(), vec![2, 5]);
        assert_eq!(standard_order(&[5, 1, 3], 6).unwrap(), vec![1, 3, 5]);
        assert_eq!(standard_order(&[1, 2, 6], 6).unwrap(), vec![1, 2, 6]);
        assert!(matches!(standard_order(&[3], 6), Err(Error::TooFewLabels(1))));
        assert!(matches!(standard_order(&[3, 3], 6), Err(Error::TooFewLabels(1))));
        assert!(matches!(standard_order(&[3, 7], 6), Err(Error::UnknownLabel { label: 7, .. })));
    }

    #[test]
    fn areal_value_examples() {
        let h = hexagon();
        for j in 1..=6 {
            for k in 1..=6 {
                if j != k {
                    assert_eq!(areal_value(h.vertex(j).unwrap(), seg(j, k), &h).unwrap(), q(0, 1));
                }
            }
        }
        let inside = Point2::new(q(1, 1), q(1, 1));
        for i in 1..=6 {
            assert!(areal_value(&inside, seg(i, h.next_label(i)), &h).unwrap().is_positive());
        }
        assert!(areal_value(h.vertex(4).unwrap(), seg(3, 6), &h).unwrap().is_negative());
        assert!(matches!(
            areal_value(&inside, seg(1, 9), &h),
            Err(Error::UnknownLabel { label: 9, n: 6 })
        ));
    }

    #[test]
    fn reversal_negates() {
        let h = hexagon();
        let x = Point2::new(q(1, 3), q(7, 5));
        let v = areal_value(&x, seg(2, 5), &h).unwrap();
        assert_eq!(areal_value(&x, seg(2, 5).reversed(), &h).unwrap(), -v);
    }

    #[test]
    fn vertex_chord_table_signs() {
        // Rows <1|..<6|, columns per decomposition as printed in the hexagon table.
        type Column<'a> = (&'a [(usize, usize)], [[i8; 3]; 6]);
        let h = hexagon();
        let table: [Column; 3] = [
            (
                &[(1, 3), (1, 4), (1, 5)],
                [[0, 0, 0], [-1, -1, -1], [0, -1, -1], [1, 0, -1], [1, 1, 0], [1, 1, 1]],
            ),
            (
                &[(1, 3), (3, 6), (4, 6)],
                [[0, 1, 1], [-1, 1, 1], [0, 0, 1], [1, -1, 0], [1, -1, -1], [1, 0, 0]],
            ),
            (
                &[(1, 3), (1, 5), (3, 5)],
                [[0, 0, 1], [-1, -1, 1], [0, -1, 0], [1, -1, -1], [1, 0, 0], [1, 1, 1]],
            ),
        ];
        for (chords, rows) in table {
            for (i, row) in rows.iter().enumerate() {
                for (c, &(j, k)) in chords.iter().enumerate() {
                    let s = side_of(h.vertex(i + 1).unwrap(), seg(j, k), &h).unwrap();
                    assert_eq!(s, row[c], "vertex {} chord {j}{k}", i + 1);
                }
            }
        }
        assert_eq!(side_of(h.vertex(6).unwrap(), seg(1, 5), &h).unwrap(), 1);
    }

    #[test]
    fn triangle_coords_examples() {
        let h = hexagon();
        let tri = OrientedTriangle::new([1, 2, 3], &h).unwrap();
        let a = Point2::new(q(7, 4), q(3, 2));
        let w = triangle_coords(&a, &tri, &h).unwrap().map(Weight::into_inner);
        assert_eq!(w, [q(1, 2), q(1, 4), q(1, 4)]);

        let centroid = Point2::new(q(5, 3), q(5, 3));
        let w = triangle_coords(&centroid, &tri, &h).unwrap().map(Weight::into_inner);
        assert_eq!(w, [q(1, 3), q(1, 3), q(1, 3)]);

        let w = triangle_coords(h.vertex(1).unwrap(), &tri, &h).unwrap().map(Weight::into_inner);
        assert_eq!(w, [q(1, 1), q(0, 1), q(0, 1)]);

        assert!(matches!(
            triangle_coords(&p(0, 0), &tri, &h),
            Err(Error::OutsideTriangle { .. })
        ));
    }

    #[test]
    fn triangle_orientation_checked() {
        let h = hexagon();
        assert!(OrientedTriangle::new([1, 3, 2], &h).is_err());
        assert!(OrientedTriangle::new([1, 1, 2], &h).is_err());
        assert_eq!(OrientedTriangle([5, 3, 4]).normalized(), OrientedTriangle([3, 4, 5]));
        assert_eq!(OrientedTriangle([4, 5, 3]).normalized(), OrientedTriangle([3, 4, 5]));
    }

    #[test]
    fn validate_polygon_cases() {
        assert_eq!(hexagon().n(), 6);
        assert_eq!(hexagon().area(), q(3, 1));
        assert!(matches!(
            validate_polygon(vec![p(0, 0), p(1, 0), p(2, 0)]),
            Err(Error::Collinear(1, 2, 3))
        ));
        assert!(matches!(
            validate_polygon(vec![p(0, 0), p(0, 1), p(1, 0)]),
            Err(Error::Clockwise(..))
        ));
        assert!(matches!(validate_polygon(vec![p(0, 0), p(0, 1)]), Err(Error::TooFewVertices(2))));
        assert!(matches!(
            validate_polygon(vec![p(0, 0), p(1, 0), p(0, 0), p(0, 1)]),
            Err(Error::RepeatedVertex(1, 3))
        ));
        // reflex vertex
        assert!(matches!(
            validate_polygon(vec![p(0, 0), p(4, 0), p(1, 1), p(0, 4)]),
            Err(Error::Clockwise(..))
        ));
        // pentagram: every turn is left but the cycle winds twice
        let star = vec![p(10, 0), p(-8, 6), p(3, -10), p(3, 10), p(-8, -6)];
        assert!(matches!(validate_polygon(star), Err(Error::NotSimple(..))));
    }

    #[test]
    fn containment_witness() {
        let h = hexagon();
        assert!(h.contains(&Point2::new(q(3, 2), q(3, 2))));
        assert!(h.contains(h.vertex(4).unwrap()));
        assert_eq!(h.outside_witness(&p(3, 1)), Some((1, 2)));
        assert!(matches!(h.check_contains(&p(2, 2)), Ok(())));
        assert!(matches!(
            h.check_contains(&p(-1, 0)),
            Err(Error::OutsidePolygon { edge: (4, 5), .. })
        ));
    }
}
