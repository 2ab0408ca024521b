//! Acceptance runner. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

mod common;

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use num_traits::{One, Signed};
use polycoords::commands;
use polycoords::decomposition::orbits;
use polycoords::io::{DecompositionDoc, PointsDoc, PolygonDoc};
use polycoords::{
    cds, chords_cross, complement, dihedral_apply, dual_product, enumerate_decompositions, mix_systems,
    validate_decomposition, weighted_mean, CartographicSystem, Chord, ChordalSystem, CoordinateSystem,
    DihedralElement, ErrorClass, Locator, OpenWeight, Point2, Polygon, Rational,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome, Option<Duration>);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn strs(ws: &[Rational]) -> Vec<String> {
    ws.iter().map(|w| w.to_string()).collect()
}

fn expect_weights(label: &str, got: &[Rational], want: &[(i64, i64)]) -> Outcome {
    let want = qs(want);
    ensure!(got == want.as_slice(), "{label}: got {:?}, want {:?}", strs(got), strs(&want));
    Ok(())
}

fn hex_points() -> [Point2; 3] {
    [pt((7, 4), (3, 2)), pt((3, 2), (3, 2)), pt((1, 1), (1, 1))]
}

fn hexagon_golden() -> Outcome {
    let sys = ChordalSystem::new(hexagon(), dec(6, &[(1, 3), (1, 5), (3, 5)])).map_err(|e| e.to_string())?;
    let [a, b, c] = hex_points();
    let eval = |x: &Point2| sys.eval(x).map(|v| v.into_weights()).map_err(|e| e.to_string());
    expect_weights("a", &eval(&a)?, &[(1, 2), (1, 4), (1, 4), (0, 1), (0, 1), (0, 1)])?;
    expect_weights("b", &eval(&b)?, &[(1, 2), (0, 1), (1, 2), (0, 1), (0, 1), (0, 1)])?;
    expect_weights("c", &eval(&c)?, &[(1, 3), (0, 1), (1, 3), (0, 1), (1, 3), (0, 1)])
}

fn quadrilateral_golden() -> Outcome {
    let a = pt((0, 1), (3, 8));
    let s1 = ChordalSystem::new(quadrilateral(), dec(4, &[(1, 3)])).map_err(|e| e.to_string())?;
    let s2 = ChordalSystem::new(quadrilateral(), dec(4, &[(2, 4)])).map_err(|e| e.to_string())?;
    expect_weights("1∧3", s1.eval(&a).unwrap().weights(), &[(5, 8), (0, 1), (3, 8), (0, 1)])?;
    expect_weights("2∧4", s2.eval(&a).unwrap().weights(), &[(0, 1), (5, 12), (2, 12), (5, 12)])?;
    let mix = mix_systems(vec![
        (CoordinateSystem::Chordal(s1), q(1, 2)),
        (CoordinateSystem::Chordal(s2), q(1, 2)),
    ])
    .map_err(|e| e.to_string())?;
    expect_weights("mixture", mix.eval(&a).unwrap().weights(), &[(15, 48), (10, 48), (13, 48), (10, 48)])
}

fn hexagon_cartography() -> Outcome {
    let [a, b, c] = hex_points();
    let d2 = ChordalSystem::new(hexagon(), dec(6, &[(2, 4), (2, 6), (4, 6)])).unwrap();
    expect_weights("δ₂ a", d2.eval(&a).unwrap().weights(), &[(0, 1), (3, 4), (0, 1), (0, 1), (0, 1), (1, 4)])?;
    expect_weights("δ₂ b", d2.eval(&b).unwrap().weights(), &[(0, 1), (2, 3), (0, 1), (1, 6), (0, 1), (1, 6)])?;
    expect_weights("δ₂ c", d2.eval(&c).unwrap().weights(), &[(0, 1), (1, 3), (0, 1), (1, 3), (0, 1), (1, 3)])?;
    let carto = CartographicSystem::new(hexagon(), dec(6, &[(1, 3), (1, 5), (3, 5)])).unwrap();
    expect_weights("ā", carto.eval(&a).unwrap().weights(), &[(1, 4), (1, 2), (1, 8), (0, 1), (0, 1), (1, 8)])?;
    expect_weights("b̄", carto.eval(&b).unwrap().weights(), &[(1, 4), (2, 6), (1, 4), (1, 12), (0, 1), (1, 12)])?;
    expect_weights("c̄", carto.eval(&c).unwrap().weights(), &[(1, 6); 6])
}

fn location_codes() -> Outcome {
    let polygon: PolygonDoc = serde_json::from_str(
        r#"{"vertices": [["2","1"],["2","2"],["1","2"],["0","1"],["0","0"],["1","0"]]}"#,
    )
    .unwrap();
    let decomposition: DecompositionDoc = serde_json::from_str(r#"{"n": 6, "chords": [[1,3],[1,5],[3,5]]}"#).unwrap();
    let points: PointsDoc = serde_json::from_str(r#"{"points": [["7/4","3/2"],["3/2","3/2"],["1","1"]]}"#).unwrap();

    let located = commands::locate(&polygon, &decomposition, &points).map_err(|e| e.to_string())?;
    let codes: Vec<String> = located.body["results"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| serde_json::to_string(&r["codes"]).unwrap())
        .collect();
    ensure!(
        codes == [r#"["001"]"#, r#"["001","101"]"#, r#"["101"]"#],
        "point codes were {codes:?}"
    );

    let tree = commands::tree(&polygon, &decomposition).map_err(|e| e.to_string())?;
    let rows: Vec<String> = tree.body["sign_codes"]["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["code"].as_str().unwrap().to_owned())
        .collect();
    ensure!(rows == ["001", "101", "111", "100"], "region codes were {rows:?}");
    Ok(())
}

fn brute_force_count(n: usize) -> usize {
    let mut chords = Vec::new();
    for a in 1..=n {
        for b in a + 2..=n {
            if !(a == 1 && b == n) {
                chords.push(Chord::new(a, b, n).unwrap());
            }
        }
    }
    let k = n - 3;
    let mut count = 0;
    for mask in 0u32..(1 << chords.len()) {
        if mask.count_ones() as usize != k {
            continue;
        }
        let chosen: Vec<Chord> = (0..chords.len()).filter(|i| mask & (1 << i) != 0).map(|i| chords[i]).collect();
        let ok = chosen.iter().enumerate().all(|(i, c)| chosen[i + 1..].iter().all(|d| !chords_cross(*c, *d)));
        count += ok as usize;
    }
    count
}

fn catalan_counts() -> Outcome {
    let expected = [1, 2, 5, 14, 42, 132, 429, 1430];
    for (n, &want) in (3..=10).zip(&expected) {
        let got = enumerate_decompositions(n).map_err(|e| e.to_string())?.len();
        ensure!(got == want, "n={n}: enumerated {got}, expected {want}");
        if n <= 8 {
            let brute = brute_force_count(n);
            ensure!(brute == want, "n={n}: brute force found {brute}");
        }
    }
    Ok(())
}

fn dihedral_orbits() -> Outcome {
    let found: Vec<(usize, String)> =
        orbits(6).unwrap().iter().map(|o| (o.len(), cds(o.representative()).to_string())).collect();
    let want = [(6, "1^3 3".to_owned()), (6, "1^2 2^2".to_owned()), (2, "2^3".to_owned())];
    ensure!(found == want, "orbits were {found:?}");
    let d = dec(6, &[(1, 3), (3, 6), (4, 6)]);
    let rho = dihedral_apply(&d, &DihedralElement::rotation(6, 1));
    let sigma = dihedral_apply(&d, &DihedralElement::reflection(6, 0));
    ensure!(rho == dec(6, &[(1, 4), (1, 5), (2, 4)]), "ρ image was {rho}");
    ensure!(sigma == dec(6, &[(2, 6), (3, 5), (3, 6)]), "σ image was {sigma}");
    Ok(())
}

fn check_system(poly: &Polygon, d: &polycoords::ChordalDecomposition, points: &[Point2]) -> Outcome {
    let n = poly.n();
    let loc = Locator::new(poly.clone(), d.clone()).map_err(|e| e.to_string())?;
    let area = loc.regions().iter().fold(q(0, 1), |acc, t| acc + t.area(poly).unwrap());
    ensure!(area == poly.area(), "{d}: region areas sum to {area}, polygon area {}", poly.area());
    ensure!(
        loc.tree().nodes().len() == n - 2 && loc.tree().leaves().len() == n,
        "{d}: tree has {} nodes and {} leaves",
        loc.tree().nodes().len(),
        loc.tree().leaves().len()
    );
    let mut codes = loc.table().codes();
    codes.sort();
    codes.dedup();
    ensure!(codes.len() == n - 2, "{d}: sign codes are not distinct");

    let sys = ChordalSystem::new(poly.clone(), d.clone()).unwrap();
    for x in points {
        let w = sys.eval(x).map_err(|e| format!("{d} at {x}: {e}"))?;
        let total = w.weights().iter().fold(q(0, 1), |acc, w| acc + w);
        ensure!(total.is_one(), "{d} at {x}: weights sum to {total}");
        let back = (1..=n).fold(Point2::origin(), |acc, l| acc.add(&poly.vertex(l).unwrap().scale(w.weight(l))));
        ensure!(&back == x, "{d} at {x}: reproduces {back}");
        ensure!(w.weights().iter().all(|v| !v.is_negative()), "{d} at {x}: negative weight");
        ensure!(w.nonzero_count() <= 3, "{d} at {x}: {} nonzero weights", w.nonzero_count());
        for l in 1..=n {
            let r = polycoords::chordal_eval_recursive(x, l, &sys).map_err(|e| e.to_string())?;
            ensure!(r.value() == w.weight(l), "{d} at {x}: recursive weight of {l} differs");
        }
    }
    Ok(())
}

fn property_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let hex = hexagon();
    let all = enumerate_decompositions(6).unwrap();
    ensure!(all.len() == 14, "expected 14 hexagon decompositions");
    for d in &all {
        check_system(&hex, d, &sample_points(&mut rng, &hex, d, 200))?;
    }
    for _ in 0..20 {
        let n = rng.gen_range(3..=8);
        let poly = random_polygon(&mut rng, n);
        let d = random_decomposition(&mut rng, n);
        check_system(&poly, &d, &sample_points(&mut rng, &poly, &d, 200))?;
    }
    Ok(())
}

fn open_weight<R: Rng>(rng: &mut R) -> OpenWeight {
    let den = rng.gen_range(2..=60);
    OpenWeight::new(q(rng.gen_range(1..den), den)).unwrap()
}

fn axiom_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let point = |rng: &mut ChaCha8Rng| Point2::new(random_rational(rng, 40, 16), random_rational(rng, 40, 16));
    for i in 0..1000 {
        let (x, y, z) = (point(&mut rng), point(&mut rng), point(&mut rng));
        let (p, r) = (open_weight(&mut rng), open_weight(&mut rng));
        ensure!(weighted_mean(&x, &x, &p) == x, "instance {i}: idempotence");
        ensure!(
            weighted_mean(&x, &y, &p) == weighted_mean(&y, &x, &complement(&p)),
            "instance {i}: skew-commutativity"
        );
        let pr = dual_product(&p, &r);
        let inner = OpenWeight::new(r.value() / pr.value()).map_err(|e| e.to_string())?;
        ensure!(
            weighted_mean(&weighted_mean(&x, &y, &p), &z, &r)
                == weighted_mean(&x, &weighted_mean(&y, &z, &inner), &pr),
            "instance {i}: skew-associativity"
        );
        let one = q(1, 1);
        let expected = &one - (&one - p.value()) * (&one - r.value());
        ensure!(*pr.value() == expected, "instance {i}: dual product");
        ensure!(dual_product(&r, &p) == pr, "instance {i}: dual product symmetry");
        ensure!(pr.value().is_positive() && *pr.value() < one, "instance {i}: dual product range");
    }
    Ok(())
}

fn expect_class<T>(label: &str, r: polycoords::Result<T>, class: ErrorClass) -> Outcome {
    match r {
        Ok(_) => Err(format!("{label}: accepted")),
        Err(e) if e.class() == class => Ok(()),
        Err(e) => Err(format!("{label}: rejected as {} ({e})", e.class().as_str())),
    }
}

fn negative_controls() -> Outcome {
    let square = vec![pt((0, 1), (0, 1)), pt((0, 1), (1, 1)), pt((1, 1), (1, 1)), pt((1, 1), (0, 1))];
    expect_class("clockwise polygon", Polygon::new(square), ErrorClass::Polygon)?;
    let crossing = vec![Chord::new(1, 4, 6).unwrap(), Chord::new(2, 5, 6).unwrap(), Chord::new(3, 6, 6).unwrap()];
    expect_class("crossing chords", validate_decomposition(6, crossing), ErrorClass::Decomposition)?;
    let short = vec![Chord::new(1, 3, 6).unwrap(), Chord::new(1, 4, 6).unwrap()];
    expect_class("wrong chord count", validate_decomposition(6, short), ErrorClass::Decomposition)?;
    let sys = ChordalSystem::new(hexagon(), dec(6, &[(1, 3), (1, 5), (3, 5)])).unwrap();
    expect_class("outside point", sys.eval(&pt((3, 1), (3, 1))), ErrorClass::OutsidePoint)?;
    Ok(())
}

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        ("golden hexagon chordal coordinates", hexagon_golden, Some(Duration::from_millis(100))),
        ("golden quadrilateral and mixture", quadrilateral_golden, None),
        ("golden hexagon cartography", hexagon_cartography, None),
        ("golden location codes via locate/tree", location_codes, None),
        ("Catalan counts n=3..10 with brute-force cross-check", catalan_counts, Some(Duration::from_secs(5))),
        ("dihedral orbit structure on n=6", dihedral_orbits, None),
        ("coordinate property suite", property_suite, Some(Duration::from_secs(60))),
        ("barycentric axioms on 1000 instances", axiom_suite, None),
        ("negative controls", negative_controls, None),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|p| {
                let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
                Err(format!("panicked: {}", msg.unwrap_or_default()))
            })
            .and_then(|()| match limit {
                Some(limit) if start.elapsed() > limit => {
                    Err(format!("took {:.3}s, limit {:.3}s", start.elapsed().as_secs_f64(), limit.as_secs_f64()))
                }
                _ => Ok(()),
            });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("PASS {}. {name} ({secs:.3}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {}. {name} ({secs:.3}s): {why}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
