use mirrorknot_core::algebra::{canonical_representation, product};
use mirrorknot_core::catalog::{named_codes, table_3_3, table_4_2};
use mirrorknot_core::codes::{decode_four, minimal_four_code, FourCode};
use mirrorknot_core::enumerate::{classify_table, code_at, enumerate_all, isometry_classes, unlink_distance};
use mirrorknot_core::grid::edge_count;
use mirrorknot_core::invariants::{
    bracket, bracket_by_negative_expansion, bracket_recursive, bracket_states, l_family, l_polynomial,
    normalized_polynomial, KnownFamily,
};
use mirrorknot_core::isometry::{IsometryGroup, LABEL_ACTION};
use mirrorknot_core::mosaic::to_mosaic;
use mirrorknot_core::moves::{apply_all_over, default_budget, reduce};
use mirrorknot_core::{parse_matrix, serialize_matrix, trace, EdgeLabel, GridCode, LaurentPoly, LaurentPoly2};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn code(text: &str) -> GridCode {
    parse_matrix(text).unwrap()
}

fn ensure(ok: bool, why: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(why())
    }
}

fn random_codes(p: usize, q: usize, count: usize, seed: u64) -> Vec<GridCode> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let v = edge_count(p, q);
    (0..count).map(|_| code_at(p, q, rng.gen_range(0..1u64 << (2 * v)))).collect()
}

fn same_up_to_mirror2(a: &LaurentPoly2, b: &LaurentPoly2) -> bool {
    a == b || &a.mirror_substitute() == b
}

fn component_theorem() -> Check {
    for p in 1..=6 {
        for q in 1..=6 {
            let c = GridCode::filled(p, q, EdgeLabel::Pos).unwrap();
            let got = trace(&c).unwrap().components;
            let want = mirrorknot_core::grid::gcd(p, q);
            ensure(got == want, || format!("RG[{p},{q}] traced {got}, gcd {want}"))?;
        }
    }
    Ok(())
}

fn worked_bracket() -> Check {
    let c = code("{{1,1},{-1,-2}}");
    let b = bracket(&c).map_err(|e| e.to_string())?;
    ensure(b == LaurentPoly::monomial(-1, 3), || format!("bracket {b}"))?;
    let pairs: Vec<(i32, usize)> = bracket_states(&c).unwrap().iter().map(|s| (s.weight, s.circles)).collect();
    let want = vec![(3, 1), (1, 2), (1, 2), (-1, 1), (1, 2), (-1, 1), (-1, 3), (-3, 2)];
    ensure(pairs == want, || format!("states {pairs:?}"))
}

fn non_alternating_bracket() -> Check {
    let b = bracket(&code("{{1,1,-1},{1,1,-1},{-2,2,-2},{-2,2,-2}}")).unwrap();
    let want = LaurentPoly::from_terms([(-10, 1), (-2, 1), (6, 2)]);
    ensure(b == want || b.mirror() == want, || format!("bracket {b}"))
}

fn l_fixtures() -> Check {
    let hopf = LaurentPoly2::from_terms([(-1, -1, -1), (1, -1, -1), (0, 0, 1), (-1, 1, 1), (1, 1, 1)]);
    let trefoil = LaurentPoly2::from_terms([(-1, 0, -1), (1, 0, -2), (-2, 1, 1), (0, 1, 1), (-1, 2, 1), (1, 2, 1)]);
    let four_one_two = LaurentPoly2::from_terms([
        (-1, -1, -1),
        (1, -1, -1),
        (0, 0, -1),
        (-3, 1, 1),
        (-1, 1, -2),
        (1, 1, -3),
        (-2, 2, 1),
        (0, 2, 1),
        (-1, 3, 1),
        (1, 3, 1),
    ]);
    let figure_eight = LaurentPoly2::from_terms([
        (-2, 0, -1),
        (0, 0, -1),
        (2, 0, -1),
        (-1, 1, -1),
        (1, 1, -1),
        (-2, 2, 1),
        (0, 2, 2),
        (2, 2, 1),
        (-1, 3, 1),
        (1, 3, 1),
    ]);
    let mut bad = Vec::new();
    for (name, text, want) in [
        ("Hopf", "{{1,-2},{1,-2}}", hopf),
        ("trefoil", "{{-2,1},{1,1}}", trefoil),
        ("4_1^2", "{{1,1},{1,1}}", four_one_two),
        ("4_1", "{{-2,1,1},{1,1},{-2,-2}}", figure_eight),
    ] {
        let got = l_polynomial(&code(text)).unwrap();
        if !same_up_to_mirror2(&got, &want) {
            bad.push(format!("{name}: got {got}, printed {want}"));
        }
    }
    ensure(bad.is_empty(), || bad.join("; "))
}

fn families() -> Check {
    let p_codes = [
        "RG[2,1]{{1}}",
        "{{1,-2},{1,-2}}",
        "{{1,1},{1,-2}}",
        "{{1,1},{1,1}}",
        "{{1,2,1},{-2,1},{1,1}}",
        "{{1,2,1},{1,1},{1,1}}",
    ];
    let p2_codes = [
        "{{1,1},{1,-2}}",
        "{{-2,1,1},{1,1},{-2,-2}}",
        "{{1,1,1},{1,1},{-2,-2}}",
        "RG[4,2]{{1,2,1,1},{1,1},{1,-2},{-2,-2}}",
        "{{-2,-1,2,-1},{-2,-1},{-1,-1},{-1,-1}}",
    ];
    let cases = p_codes
        .iter()
        .enumerate()
        .map(|(i, t)| (KnownFamily::P(i as u32 + 1), *t))
        .chain(p2_codes.iter().enumerate().map(|(i, t)| (KnownFamily::P2(i as u32 + 1), *t)));
    for (f, text) in cases {
        let rec = l_family(f).unwrap();
        let direct = l_polynomial(&code(text)).unwrap();
        ensure(same_up_to_mirror2(&rec, &direct), || format!("{f:?}: recursion {rec}, code {direct}"))?;
    }
    Ok(())
}

fn class_count() -> Check {
    let classes = isometry_classes(2, 2).unwrap();
    let burnside = IsometryGroup::new(2, 2).burnside_count(LABEL_ACTION);
    let orbit_sum: usize = classes.iter().map(|c| c.orbit_size).sum();
    ensure(classes.len() == 55 && burnside == 55 && orbit_sum == 256, || {
        format!("{} classes, Burnside {burnside}, orbit sum {orbit_sum}", classes.len())
    })
}

fn code_arithmetic() -> Check {
    let t = decode_four(FourCode::new(2, 2, 1, 15).unwrap()).unwrap();
    ensure(serialize_matrix(&t) == "RG[2,2]{{1,1},{1,-2}}", || format!("(2,2,1,15) decodes to {t}"))?;
    let hopf = code("{{1,1},{1,-1}}");
    let m = minimal_four_code(&hopf).unwrap();
    ensure(m == FourCode { p: 2, q: 2, m: 1, n: 14 }, || format!("minimal code {m:?}"))?;
    let canon = canonical_representation(&code("{{1,-2},{1,-2}}")).unwrap();
    ensure(canon == FourCode { p: 2, q: 2, m: 5, n: 15 }, || format!("canonical {canon:?}"))?;
    let k = decode_four(FourCode::new(3, 2, 7, 127).unwrap()).unwrap();
    let tr = trace(&k).unwrap();
    ensure(tr.crossings.len() == 4 && tr.components == 1, || {
        format!("(3,2,7,127): {} crossings, {} components", tr.crossings.len(), tr.components)
    })
}

fn products() -> Check {
    let m1 = code("{{-2,-2,1,1},{1,2},{-1,1},{-1,-2}}");
    let m2 = code("{{-2,-2,1,1},{-1,-2},{1,-1},{2,-1}}");
    let pr = serialize_matrix(&product(&m1, &m2).unwrap());
    ensure(pr == "RG[4,2]{{-2,-2,1,1},{2,1},{-2,2},{-1,-1}}", || format!("product {pr}"))?;
    let all: Vec<GridCode> = enumerate_all(2, 2).unwrap().chain(random_codes(3, 3, 1000, 7)).collect();
    for m in &all {
        ensure(&product(m, m).unwrap() == m, || format!("{m} * itself differs"))?;
    }
    Ok(())
}

fn polynomial_constant(codes: &[GridCode]) -> Check {
    let first = normalized_polynomial(&codes[0]).unwrap();
    for c in codes {
        let x = normalized_polynomial(c).unwrap();
        ensure(x == first, || format!("{c} has {x}, start has {first}"))?;
    }
    Ok(())
}

fn reduction() -> Check {
    let example = code("{{-2,-1,-1,2},{1,2,-1,1},{2,1,-1},{1,-2,-1},{1,-2,-1}}");
    let log = reduce(&example, default_budget(&example)).unwrap();
    ensure(!log.budget_exceeded && log.final_code.is_crossing_free(), || {
        format!("reduction stopped at {}", log.final_code)
    })?;
    polynomial_constant(&log.codes().unwrap())?;

    let start = code("{{-1,1,-1},{-1,-1},{-1,-1}}");
    let log = reduce(&start, default_budget(&start)).unwrap();
    let last = &log.final_code;
    ensure((last.p(), last.q()) == (2, 2) && last.crossing_count() == 3, || format!("shrink ended at {last}"))?;
    polynomial_constant(&log.codes().unwrap())?;

    let before = code("{{-2,1,-2},{1,-2},{1,-2}}");
    let after = apply_all_over(&before).unwrap();
    ensure((after.p(), after.q()) == (2, 2), || format!("all-over gave {after}"))?;
    polynomial_constant(&[before, after])
}

fn unlink_numbers() -> Check {
    for p in 2..=4 {
        let c = GridCode::filled(p, 2, EdgeLabel::Pos).unwrap();
        let got = unlink_distance(&c).map_err(|e| e.to_string())?;
        ensure(got == (p - 1, 3 * p - 4), || format!("RG[{p},2]: {got:?}"))?;
    }
    Ok(())
}

fn tables() -> Check {
    for (name, entries, size) in [("RG[4,2]", table_4_2(), 25), ("RG[3,3]", table_3_3(), 64)] {
        let report = classify_table(&entries);
        ensure(report.rows.len() == size && report.parsed() == size, || {
            format!("{name}: {} of {size} parsed", report.parsed())
        })?;
        ensure(report.mismatches().is_empty(), || format!("{name}: component mismatches {:?}", report.mismatches()))?;
        for e in &entries {
            let c = e.code().unwrap();
            let traced = trace(&c).unwrap().crossings.len();
            ensure(traced == c.crossing_count(), || format!("{name} row {}: {traced} traced crossings", e.index))?;
        }
        ensure(report.unexplained_collisions().is_empty(), || {
            format!("{name}: collisions {:?}", report.unexplained_collisions())
        })?;
    }
    Ok(())
}

fn oracles() -> Check {
    let all: Vec<GridCode> = enumerate_all(2, 2).unwrap().chain(random_codes(3, 3, 200, 11)).collect();
    for c in &all {
        let b = bracket(c).unwrap();
        let neg = bracket_by_negative_expansion(c).unwrap();
        let rec = bracket_recursive(&trace(c).unwrap().diagram);
        ensure(b == neg && b == rec, || format!("{c}: state sum {b}, expansion {neg}, recursion {rec}"))?;
    }
    Ok(())
}

fn mosaics() -> Check {
    let (_, text) = named_codes().into_iter().find(|(n, _)| n.classical == "6_3").unwrap();
    let m = to_mosaic(&code(text)).unwrap();
    ensure(m.n == 6 && m.suitably_connected(), || format!("6_3 mosaic:\n{m}"))?;
    for c in enumerate_all(2, 2).unwrap() {
        let m = to_mosaic(&c).unwrap();
        let got = m.component_count().map_err(|e| format!("{c}: {e}"))?;
        let want = trace(&c).unwrap().components;
        ensure(got == want, || format!("{c}: mosaic {got}, grid {want}"))?;
    }
    Ok(())
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 13] = [
        ("component count of all-crossing grids is gcd(p,q)", component_theorem),
        ("worked bracket example and its eight states", worked_bracket),
        ("non-alternating bracket", non_alternating_bracket),
        ("L-polynomials of Hopf, trefoil, 4_1^2, 4_1", l_fixtures),
        ("family recursions against grid codes", families),
        ("55 isometry classes on RG[2,2]", class_count),
        ("four-number codes", code_arithmetic),
        ("product fixture and idempotence", products),
        ("normalized polynomial constant along reductions", reduction),
        ("unlink distances of all-crossing RG[p,2]", unlink_numbers),
        ("census tables", tables),
        ("bracket oracles agree", oracles),
        ("mosaics", mosaics),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(()) => println!("criterion {:>2} PASS {name}", i + 1),
            Err(why) => {
                println!("criterion {:>2} FAIL {name}: {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
