//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Exact comparisons throughout; each criterion also has a
//! wall-clock budget.

use std::io::Write;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use lctpoly::fixtures::{cusp_pair, smooth_and_tangent_parabola};
use lctpoly::geom::{enumerate_vertices, HPolyhedron};
use lctpoly::lct::{lct_polytope_from_resolution, lct_polytope_monomial, lct_threshold};
use lctpoly::rational::{int, rat};
use lctpoly::sequence::{detect_stationary_limit, ex11_family, strictly_decreasing_positive};
use lctpoly::verify::{run_suite, Suite, SuiteReport};
use lctpoly::{MonomialIdeal, RatVec, Rational};

const SEED: u64 = 20_240_611;

fn rows(rows: &[([i64; 2], Rational)]) -> HPolyhedron {
    HPolyhedron::from_rows(
        2,
        rows.iter()
            .map(|(a, b)| (RatVec::from_ints(*a), b.clone()))
            .collect(),
        true,
    )
    .unwrap()
    .canonicalize()
    .unwrap()
}

fn vertices(h: &HPolyhedron) -> Vec<RatVec> {
    enumerate_vertices(h).unwrap().vertices().to_vec()
}

fn points(pts: &[(Rational, Rational)]) -> Vec<RatVec> {
    let mut v: Vec<RatVec> = pts
        .iter()
        .map(|(a, b)| RatVec::new(vec![a.clone(), b.clone()]))
        .collect();
    v.sort();
    v
}

fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
    MonomialIdeal::new(n, gens.iter().map(|g| g.to_vec()).collect()).unwrap()
}

fn resolution_a() -> Result<(), String> {
    let p = lct_polytope_from_resolution(&smooth_and_tangent_parabola().unwrap(), true)
        .map_err(|e| e.to_string())?;
    let expected = rows(&[([1, 0], int(1)), ([0, 1], int(1)), ([1, 1], rat(3, 2))]);
    if p.h() != &expected {
        return Err(format!("got {}", p.h()));
    }
    let want = points(&[
        (int(0), int(0)),
        (int(1), int(0)),
        (int(0), int(1)),
        (int(1), rat(1, 2)),
        (rat(1, 2), int(1)),
    ]);
    if vertices(p.h()) != want {
        return Err("vertex set differs".into());
    }
    Ok(())
}

fn resolution_b() -> Result<(), String> {
    let p = lct_polytope_from_resolution(&cusp_pair().unwrap(), true).map_err(|e| e.to_string())?;
    let expected = rows(&[
        ([1, 0], int(1)),
        ([0, 1], int(1)),
        ([10, 4], int(7)),
        ([4, 10], int(7)),
    ]);
    if p.h() != &expected {
        return Err(format!("got {}", p.h()));
    }
    let want = points(&[
        (int(0), int(0)),
        (rat(7, 10), int(0)),
        (int(0), rat(7, 10)),
        (rat(1, 2), rat(1, 2)),
    ]);
    if vertices(p.h()) != want {
        return Err("vertex set differs".into());
    }
    Ok(())
}

fn unit_square() -> Result<(), String> {
    let p = lct_polytope_monomial(&[ideal(2, &[&[1, 0]]), ideal(2, &[&[0, 1]])])
        .map_err(|e| e.to_string())?;
    if p.h() != &rows(&[([1, 0], int(1)), ([0, 1], int(1))]) {
        return Err(format!("got {}", p.h()));
    }
    let want = points(&[
        (int(0), int(0)),
        (int(1), int(0)),
        (int(0), int(1)),
        (int(1), int(1)),
    ]);
    if vertices(p.h()) != want {
        return Err("vertex set differs".into());
    }
    Ok(())
}

fn thresholds() -> Result<(), String> {
    for n in 1..=3usize {
        for d in 1..=5u32 {
            let got =
                lct_threshold(&MonomialIdeal::maximal_power(n, d)).map_err(|e| e.to_string())?;
            if got != rat(n as i64, d as i64) {
                return Err(format!("lct(m^{d}) in {n} vars = {got}"));
            }
        }
    }
    for m in 2..=6u32 {
        let p =
            lct_polytope_monomial(&[ideal(2, &[&[2, 0], &[0, m]])]).map_err(|e| e.to_string())?;
        let want = rat(1, 2) + rat(1, m as i64);
        let expected = HPolyhedron::box_from_origin(std::slice::from_ref(&want))
            .canonicalize()
            .unwrap();
        if p.h() != &expected {
            return Err(format!(
                "LCT((x^2, y^{m})) = {}, expected [0, {want}]",
                p.h()
            ));
        }
    }
    Ok(())
}

fn suite(s: Suite, count: usize) -> impl Fn() -> Result<(), String> {
    move || {
        let rep: SuiteReport = run_suite(s, SEED, count);
        if rep.passed() {
            Ok(())
        } else {
            Err(rep.to_string())
        }
    }
}

fn ex11() -> Result<(), String> {
    suite(Suite::Ex11, 50)()?;
    let base = [ideal(2, &[&[1, 0]]), ideal(2, &[&[0, 1]])];
    let seq = ex11_family(&base, 8, 0).map_err(|e| e.to_string())?;
    let rep = detect_stationary_limit(&seq, 5).map_err(|e| e.to_string())?;
    let expected: Vec<Rational> = (1..=8).map(|d| rat(1, d * d)).collect();
    if rep.stationary || rep.sq_distance_profile != expected {
        return Err(format!("profile {:?}", rep.sq_distance_profile));
    }
    if !strictly_decreasing_positive(&rep.sq_distance_profile) {
        return Err("profile not strictly decreasing".into());
    }
    Ok(())
}

fn main() -> ExitCode {
    let fixture = Duration::from_secs(1);
    let batch = Duration::from_secs(60);
    type Check = Box<dyn Fn() -> Result<(), String>>;
    let criteria: Vec<(&str, Duration, Check)> = vec![
        (
            "resolution fixture: smooth curve and tangent parabola",
            fixture,
            Box::new(resolution_a),
        ),
        (
            "resolution fixture: pair of cusps",
            fixture,
            Box::new(resolution_b),
        ),
        (
            "monomial fixture: coordinate hyperplanes give the unit square",
            fixture,
            Box::new(unit_square),
        ),
        ("threshold values", fixture, Box::new(thresholds)),
        (
            "oracle agreement, 100 tuples",
            batch,
            Box::new(suite(Suite::Oracle, 100)),
        ),
        (
            "polytope properties, 100 tuples",
            batch,
            Box::new(suite(Suite::Prop1, 100)),
        ),
        (
            "truncation distance bound, 50 pairs",
            batch,
            Box::new(suite(Suite::Cor2, 50)),
        ),
        (
            "truncation chains and limits, 50 tuples",
            batch,
            Box::new(suite(Suite::Truncation, 50)),
        ),
        ("prism family, 50 tuples", batch, Box::new(ex11)),
        (
            "geometry kernel, 200 instances",
            batch,
            Box::new(suite(Suite::Geometry, 200)),
        ),
    ];

    let mut out = std::io::stdout().lock();
    let mut failures = 0;
    for (i, (name, budget, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let verdict = match (&outcome, elapsed <= *budget) {
            (Ok(()), true) => "PASS".to_string(),
            (Ok(()), false) => format!("FAIL (over budget of {budget:?})"),
            (Err(e), _) => format!("FAIL\n{e}"),
        };
        if !verdict.starts_with("PASS") {
            failures += 1;
        }
        writeln!(
            out,
            "criterion {:>2} [{:>8.3}s] {name}: {verdict}",
            i + 1,
            elapsed.as_secs_f64()
        )
        .unwrap();
    }
    writeln!(
        out,
        "acceptance seed {SEED}: {} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    )
    .unwrap();
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
