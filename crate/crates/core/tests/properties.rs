use mirrorknot_core::algebra::{decompose, mirror_image, product};
use mirrorknot_core::codes::{decode_four, decode_state, four_code};
use mirrorknot_core::enumerate::{code_at, enumerate_all};
use mirrorknot_core::grid::edge_count;
use mirrorknot_core::invariants::{bracket, bracket_recursive, l_polynomial, normalized_polynomial};
use mirrorknot_core::isometry::IsometryGroup;
use mirrorknot_core::mosaic::{from_mosaic, to_mosaic, Mosaic};
use mirrorknot_core::moves::{find_mirror_moves, next_move, reduce, simplify_diagram, MIRROR_MOVE_CHANGES};
use mirrorknot_core::{parse_matrix, serialize_matrix, trace, GridCode};
use proptest::prelude::*;

fn grid_code(max: usize) -> impl Strategy<Value = GridCode> {
    (1..=max, 1..=max).prop_flat_map(|(p, q)| {
        let v = edge_count(p, q);
        (0..1u64 << (2 * v)).prop_map(move |i| code_at(p, q, i))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn text_round_trip(c in grid_code(4)) {
        prop_assert_eq!(parse_matrix(&serialize_matrix(&c)).unwrap(), c);
    }

    #[test]
    fn four_code_round_trip(c in grid_code(3)) {
        let f = four_code(&c).unwrap();
        prop_assert_eq!(decode_four(f).unwrap(), c.clone());
        let (s1, s2) = decompose(&c).unwrap();
        let back = product(&decode_state(s1).unwrap(), &decode_state(s2).unwrap()).unwrap();
        prop_assert_eq!(back, c);
    }

    #[test]
    fn isometries_keep_invariants(c in grid_code(3)) {
        let t = trace(&c).unwrap();
        let x = normalized_polynomial(&c).unwrap();
        for image in IsometryGroup::new(c.p(), c.q()).orbit(&c) {
            prop_assert_eq!(trace(&image).unwrap().components, t.components);
            let y = normalized_polynomial(&image).unwrap();
            prop_assert!(y == x || y == x.mirror());
        }
    }

    #[test]
    fn mirror_image_mirrors_bracket(c in grid_code(3)) {
        prop_assert_eq!(bracket(&mirror_image(&c)).unwrap(), bracket(&c).unwrap().mirror());
    }

    #[test]
    fn mosaic_round_trip(c in grid_code(4)) {
        let m = to_mosaic(&c).unwrap();
        prop_assert!(m.suitably_connected());
        prop_assert_eq!(m.component_count().unwrap(), trace(&c).unwrap().components);
        prop_assert_eq!(m.crossing_tiles(), c.crossing_count());
        prop_assert_eq!(from_mosaic(&m).unwrap(), c);
        prop_assert_eq!(m.to_string().parse::<Mosaic>().unwrap(), m);
    }

    #[test]
    fn r3_keeps_bracket(c in grid_code(3)) {
        let d = trace(&c).unwrap().diagram;
        let b = bracket_recursive(&d);
        for t in d.triangles().iter().filter(|t| d.r3_valid(t)) {
            let after = d.r3(t);
            prop_assert_eq!(bracket_recursive(&after), b.clone());
            prop_assert_eq!(after.writhe(), d.writhe());
        }
    }

    #[test]
    fn simplification_keeps_polynomial(c in grid_code(3)) {
        let t = trace(&c).unwrap();
        let s = simplify_diagram(&t.diagram);
        prop_assert!(s.crossing_count() <= t.diagram.crossing_count());
        prop_assert_eq!(s.component_count(), t.components);
        let norm = |d: &mirrorknot_core::Diagram| {
            mirrorknot_core::invariants::normalized_from_bracket(&bracket_recursive(d), d.self_writhe())
        };
        prop_assert_eq!(norm(&s), norm(&t.diagram));
    }

    #[test]
    fn reduction_is_sound(c in grid_code(3)) {
        let log = reduce(&c, 40).unwrap();
        let x = normalized_polynomial(&c).unwrap();
        let codes = log.codes().unwrap();
        prop_assert_eq!(codes.last().unwrap(), &log.final_code);
        for k in &codes {
            prop_assert_eq!(normalized_polynomial(k).unwrap(), x.clone());
            prop_assert_eq!(trace(k).unwrap().components, trace(&c).unwrap().components);
        }
    }

    #[test]
    fn l_polynomial_specializes_to_bracket(c in grid_code(3)) {
        prop_assume!(c.crossing_count() <= 8);
        let l = l_polynomial(&c).unwrap();
        let shift = (-l.min_z().unwrap_or(0)).max(0);
        // z^shift L(-A^3, A + A^-1) = (A + A^-1)^shift <L> with the circle value -A^2 - A^-2.
        let lhs = l.bracket_specialization(shift);
        let zpow = mirrorknot_core::LaurentPoly::from_terms([(1, 1), (-1, 1)]).pow(shift as u32);
        let rhs = &zpow * &bracket(&c).unwrap();
        prop_assert_eq!(lhs, rhs, "{}", c);
    }
}

#[test]
fn every_move_on_small_grids_is_sound() {
    let codes: Vec<GridCode> = enumerate_all(2, 2).unwrap().chain(enumerate_all(3, 2).unwrap().step_by(7)).collect();
    for c in codes {
        let x = normalized_polynomial(&c).unwrap();
        let comps = trace(&c).unwrap().components;
        let mut moves = find_mirror_moves(&c, MIRROR_MOVE_CHANGES).unwrap();
        moves.extend(next_move(&c).unwrap());
        for m in moves {
            let after = m.apply(&c).unwrap();
            assert_eq!(normalized_polynomial(&after).unwrap(), x, "{m} on {c}");
            assert_eq!(trace(&after).unwrap().components, comps, "{m} on {c}");
        }
    }
}

#[test]
fn idempotent_products() {
    for c in enumerate_all(2, 2).unwrap() {
        assert_eq!(product(&c, &c).unwrap(), c);
    }
}
