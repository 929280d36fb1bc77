//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//! All arithmetic is exact, so every comparison is equality.
//!
//! Run with `cargo test -p qml-core --test acceptance -- --nocapture` to see
//! the per-criterion lines.

use num_bigint::BigInt;
use qml_core::curve::{kontsevich_with_order, SumOrder};
use qml_core::ideal::GradedIdeal;
use qml_core::kronecker::{hb_minors, kronecker_fiber, verify_complex_exactness};
use qml_core::pipeline::{
    cubic_warmup, flat_limit_over_d5, normal_space_check, quartics_with_multiplicity, sbar_map,
    FamilyIdeal,
};
use qml_core::poly::{rat, ratio};
use qml_core::report::run_suite;
use qml_core::scheme::sample::SampleRng;
use qml_core::scheme::tangent_space_dim;
use qml_core::sl3;
use qml_core::walls::{circle_points, slope, wall_scan, ChernCharacter};
use qml_core::{MonomialOrder, PointScheme, ProjPoint, Stratum, VarSet};

fn verdict(name: &str, pass: bool) -> bool {
    println!(
        "[acceptance] {:<44} {}",
        name,
        if pass { "PASS" } else { "FAIL" }
    );
    pass
}

#[test]
fn c01_curve_counts() {
    let n = kontsevich_with_order(5, SumOrder::Forward);
    let anchors = n[0] == BigInt::from(1)
        && n[1] == BigInt::from(1)
        && n[2] == BigInt::from(12)
        && n[3] == BigInt::from(620);
    let stable = kontsevich_with_order(5, SumOrder::Reversed) == n
        && kontsevich_with_order(5, SumOrder::Symmetrized) == n;
    assert!(verdict("01 curve counts 1, 1, 12, 620; stable N5", anchors && stable));
}

#[test]
fn c02_symmetric_square_decomposition() {
    let m = sl3::mult_map();
    let w = sl3::wedge_embedding();
    let dims = m.ncols() == 21 && m.rank() == 15 && m.kernel().dim() == 6 && w.rank() == 6;
    let (image, kernel) = sl3::decomposition_subspaces();
    // the worked identity, coordinate-exact
    let vars = VarSet::xyz();
    let x2 = qml_core::parse("x^2", &vars).unwrap();
    let y2 = qml_core::parse("y^2", &vars).unwrap();
    let xy = qml_core::parse("x*y", &vars).unwrap();
    let diff: Vec<_> = sl3::expand_pair(&x2, &y2)
        .into_iter()
        .zip(sl3::expand_pair(&xy, &xy))
        .map(|(a, b)| a - b)
        .collect();
    let wcol: Vec<_> = (0..21).map(|i| w.get(i, 0).clone()).collect();
    assert!(verdict(
        "02 Sym² decomposition 21 = 15 + 6",
        dims && image == kernel && diff == wcol
    ));
}

#[test]
fn c03_rank_stratification() {
    let run = run_suite("mainprop1", 7, 200).expect("suite");
    let zero_failures = run.results.iter().all(|r| r.pass);
    assert!(
        verdict("03 rank stratification, 200 samples", run.pass && zero_failures),
        "failed checks: {:?}",
        run.results
            .iter()
            .filter(|r| !r.pass)
            .map(|r| &r.name)
            .collect::<Vec<_>>()
    );
}

#[test]
fn c04_flatness_dichotomy() {
    let mut colengths_nine = true;
    for i in 0..10u64 {
        let mut rng = SampleRng::for_sample(11, i);
        let z = rng.triangle();
        let h = z.vanishing_ideal().unwrap().power(2).hilbert().unwrap();
        colengths_nine &= h.constant_value() == Some(rat(9));
    }
    let fat4 = GradedIdeal::from_strs(&VarSet::xyz(), &["x", "y"])
        .unwrap()
        .power(4);
    let ten = fat4.hilbert().unwrap().constant_value() == Some(rat(10));
    // the report must carry the flag about the quoted pair
    let run = run_suite("mainprop2", 7, 5).expect("suite");
    let flagged = run.results.iter().any(|r| {
        r.detail
            .get("reference_order_inconsistent_with_computation")
            .and_then(|v| v.as_bool())
            .unwrap_or(false)
    });
    assert!(verdict(
        "04 flatness dichotomy 9 vs 10, flagged",
        colengths_nine && ten && flagged && run.pass
    ));
}

#[test]
fn c05_flat_limit_containment_chain() {
    let family = FamilyIdeal::from_strs(&["x^2", "x*y", "y^2 + t*z*x"]).unwrap();
    let report = flat_limit_over_d5(&family, (4, 8), &[]).unwrap();
    // membership is checked through Gröbner normal forms inside; reassert
    // the chain here explicitly on the reported generators
    let vars = VarSet::xyz();
    let limit = GradedIdeal::from_strs(
        &vars,
        &report
            .limit_gens
            .iter()
            .map(|s| s.as_str())
            .collect::<Vec<_>>(),
    )
    .unwrap();
    let pencil = GradedIdeal::from_strs(&vars, &["x", "y"]).unwrap();
    let gb = limit.groebner(MonomialOrder::Grevlex);
    let chain_lower = pencil
        .power(4)
        .generators()
        .iter()
        .all(|g| gb.contains(g));
    let square_gb = pencil.power(2).groebner(MonomialOrder::Grevlex);
    let chain_upper = limit.generators().iter().all(|g| square_gb.contains(g));
    assert!(verdict(
        "05 flat limit: colength 9 and the chain",
        report.colength == "9" && chain_lower && chain_upper
    ));
}

#[test]
fn c06_tangent_and_normal_dimensions() {
    let report = normal_space_check().unwrap();
    let mut triangles_ok = true;
    for i in 0..5u64 {
        let mut rng = SampleRng::for_sample(23, i);
        let z = rng.triangle();
        triangles_ok &= tangent_space_dim(&z.vanishing_ideal().unwrap()).unwrap() == 6;
    }
    assert!(verdict(
        "06 tangent 6, normal 4 = Sym³(rank 2), 2+4=6",
        report.pass && triangles_ok
    ));
}

#[test]
fn c07_fiber_dimension_ledger() {
    let pt = |a, b, c| ProjPoint::from_ints(a, b, c).unwrap();
    let mut ok = true;
    for i in 0..10u64 {
        let mut rng = SampleRng::for_sample(31, i);
        let z = rng.triangle();
        let ideal = z.vanishing_ideal().unwrap();
        ok &= ideal.graded_piece(2).dim() == 3;
        ok &= ideal.graded_piece(4).dim() == 12;
        ok &= ideal.power(2).graded_piece(4).dim() == 6;
        let (_, sbar) = sbar_map(&z).unwrap();
        ok &= sbar.fiber_dim == 5;
    }
    let q = pt(0, 0, 1);
    ok &= quartics_with_multiplicity(&q, 3).dim() == 9;
    ok &= quartics_with_multiplicity(&q, 2).dim() == 12;
    let (_, sbar_fat) = sbar_map(&PointScheme::fat_point(q)).unwrap();
    ok &= sbar_fat.fiber_dim == 8;
    let collinear = PointScheme::triangle([pt(0, 1, 0), pt(0, 0, 1), pt(0, 1, 1)]);
    let fiber = kronecker_fiber(&collinear).unwrap();
    let additivity = verify_complex_exactness(&fiber, &collinear, 4).unwrap();
    ok &= additivity.additivity == Some((2, 10)) && additivity.pass;
    assert!(verdict("07 fiber ledger (3, 12, 6 | 9, 12 | 2+10)", ok));
}

#[test]
fn c08_cubic_warmup() {
    let report = cubic_warmup(&ProjPoint::from_ints(0, 0, 1).unwrap()).unwrap();
    let ok = report.cubics_through == 9
        && report.cubics_singular_at == 7
        && report.quotient_rank == 2
        && report.singular_fiber_dim == 6
        && report.pass;
    assert!(verdict("08 cubic warm-up 9, 7, quotient 2", ok));
}

#[test]
fn c09_wall_geometry() {
    let v = ChernCharacter::new(0, 4, rat(-5)).unwrap();
    let groups = wall_scan(&v, (1, 5, 10));
    let centered = !groups.is_empty() && groups.iter().all(|g| g.center == "-5/4");
    let big = groups
        .iter()
        .any(|g| g.radius.as_deref() == Some("7/4"));
    let w = ChernCharacter::new(1, 1, ratio(-1, 2)).unwrap();
    let on_circle = circle_points(
        &ratio(-5, 4),
        &ratio(7, 4),
        &[ratio(1, 2), ratio(1, 3), ratio(2, 3)],
    )
    .iter()
    .all(|(s, t)| slope(&v, s, t) == slope(&w, s, t));
    assert!(verdict(
        "09 walls centered at -5/4, radius 7/4 present",
        centered && big && on_circle
    ));
}

#[test]
fn c10_kronecker_fibers() {
    // 200 generic samples: kernel rank 2 and mutual membership of the
    // Hilbert-Burch minors with the vanishing ideal
    let mut ok = true;
    for i in 0..200u64 {
        let mut rng = SampleRng::for_sample(47, i);
        let z = rng.triangle();
        let fiber = kronecker_fiber(&z).unwrap();
        if fiber.kernel_e.dim() != 2 {
            ok = false;
            break;
        }
        let ideal = z.vanishing_ideal().unwrap();
        let minors = hb_minors(fiber.hb_matrix.as_ref().unwrap());
        let gb = ideal.groebner(MonomialOrder::Grevlex);
        let minor_ideal = GradedIdeal::new(ideal.vars(), minors.to_vec()).unwrap();
        let minor_gb = minor_ideal.groebner(MonomialOrder::Grevlex);
        ok &= minors.iter().all(|m| gb.contains(m))
            && ideal.generators().iter().all(|g| minor_gb.contains(g));
        if !ok {
            break;
        }
    }
    // collinear: rank jumps to 3
    for i in 0..20u64 {
        let mut rng = SampleRng::for_sample(53, i);
        let z = rng.collinear_triple();
        ok &= kronecker_fiber(&z).unwrap().kernel_e.dim() == 3;
    }
    assert!(verdict("10 kronecker fibers, 200 + 20 samples", ok));
}

#[test]
fn c11_deterministic_reports() {
    let mut ok = true;
    for (suite, samples) in [
        ("kontsevich", 1),
        ("reps", 1),
        ("mainprop1", 3),
        ("kronecker", 3),
        ("sum2", 3),
        ("mainprop2", 2),
        ("norbundle", 2),
        ("cubic", 2),
        ("walls", 3),
    ] {
        let a = run_suite(suite, 99, samples).unwrap().to_json_string();
        let b = run_suite(suite, 99, samples).unwrap().to_json_string();
        ok &= a == b;
        if a != b {
            eprintln!("suite {suite} is not byte-deterministic");
        }
    }
    assert!(verdict("11 byte-identical reruns, all suites", ok));
}
