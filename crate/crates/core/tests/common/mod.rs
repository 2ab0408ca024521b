#![allow(dead_code)]

use polycoords::{
    enumerate_decompositions, ChordalDecomposition, Point2, Polygon, Rational, Scalar,
};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn q(n: i64, d: i64) -> Rational {
    Rational::from_ratio(n, d)
}

pub fn pt(x: (i64, i64), y: (i64, i64)) -> Point2 {
    Point2::new(q(x.0, x.1), q(y.0, y.1))
}

pub fn qs(v: &[(i64, i64)]) -> Vec<Rational> {
    v.iter().map(|&(a, b)| q(a, b)).collect()
}

pub fn hexagon() -> Polygon {
    Polygon::new(vec![
        pt((2, 1), (1, 1)),
        pt((2, 1), (2, 1)),
        pt((1, 1), (2, 1)),
        pt((0, 1), (1, 1)),
        pt((0, 1), (0, 1)),
        pt((1, 1), (0, 1)),
    ])
    .unwrap()
}

pub fn quadrilateral() -> Polygon {
    Polygon::new(vec![pt((0, 1), (0, 1)), pt((1, 1), (0, 1)), pt((0, 1), (1, 1)), pt((-1, 1), (1, 2))])
        .unwrap()
}

pub fn dec(n: usize, pairs: &[(usize, usize)]) -> ChordalDecomposition {
    ChordalDecomposition::from_pairs(n, pairs).unwrap()
}

pub fn random_rational<R: Rng>(rng: &mut R, span: i64, max_den: i64) -> Rational {
    q(rng.gen_range(-span..=span), rng.gen_range(1..=max_den))
}

/// A random strictly convex counterclockwise n-gon with rational vertices:
/// rational points of the unit circle in angular order, pushed through a
/// random orientation-preserving affine map.
pub fn random_polygon<R: Rng>(rng: &mut R, n: usize) -> Polygon {
    let mut ts: Vec<Rational> = Vec::new();
    while ts.len() < n {
        let t = random_rational(rng, 30, 7);
        if !ts.contains(&t) {
            ts.push(t);
        }
    }
    ts.sort();
    let (a, b, c, d) = loop {
        let m: [i64; 4] = std::array::from_fn(|_| rng.gen_range(-4..=4));
        if m[0] * m[3] - m[1] * m[2] > 0 {
            break (q(m[0], 1), q(m[1], 1), q(m[2], 1), q(m[3], 1));
        }
    };
    let (e, f) = (random_rational(rng, 10, 3), random_rational(rng, 10, 3));
    let one = q(1, 1);
    let points = ts
        .into_iter()
        .map(|t| {
            let den = one.clone() + t.clone() * t.clone();
            let x = (one.clone() - t.clone() * t.clone()) / den.clone();
            let y = (t.clone() + t) / den;
            Point2::new(
                a.clone() * x.clone() + b.clone() * y.clone() + e.clone(),
                c.clone() * x + d.clone() * y + f.clone(),
            )
        })
        .collect();
    Polygon::new(points).expect("rational circle points are in strictly convex position")
}

pub fn random_decomposition<R: Rng>(rng: &mut R, n: usize) -> ChordalDecomposition {
    enumerate_decompositions(n).unwrap().choose(rng).unwrap().clone()
}

/// Convex combination of `points` with random positive integer weights.
pub fn random_combination<R: Rng>(rng: &mut R, points: &[&Point2]) -> Point2 {
    let weights: Vec<i64> = points.iter().map(|_| rng.gen_range(1..=9)).collect();
    let total: i64 = weights.iter().sum();
    points.iter().zip(&weights).fold(Point2::origin(), |acc, (p, &w)| acc.add(&p.scale(&q(w, total))))
}

/// A mix of the point families that matter for chordal coordinates:
/// interiors, chord interiors, boundary-edge interiors and vertices.
pub fn sample_points<R: Rng>(rng: &mut R, poly: &Polygon, d: &ChordalDecomposition, count: usize) -> Vec<Point2> {
    let n = poly.n();
    let v = |l: usize| poly.vertex(l).unwrap();
    (0..count)
        .map(|i| match i % 8 {
            0..=3 => {
                let all: Vec<&Point2> = poly.vertices().iter().collect();
                random_combination(rng, &all)
            }
            4 => {
                let mut labels: Vec<usize> = (1..=n).collect();
                labels.shuffle(rng);
                random_combination(rng, &[v(labels[0]), v(labels[1]), v(labels[2])])
            }
            5 if !d.chords().is_empty() => {
                let c = d.chords().choose(rng).unwrap();
                random_combination(rng, &[v(c.a()), v(c.b())])
            }
            5 | 6 => {
                let l = rng.gen_range(1..=n);
                random_combination(rng, &[v(l), v(poly.next_label(l))])
            }
            _ => v(rng.gen_range(1..=n)).clone(),
        })
        .collect()
}
