use mirrorknot_core::catalog::named_codes;
use mirrorknot_core::invariants::{normalized_polynomial, unlink_polynomial};
use mirrorknot_core::mosaic::{grid_diagram_dimension, mosaic_number_upper_bound, to_mosaic};
use mirrorknot_core::moves::{apply_all_over, default_budget, is_unlink, reduce, ReductionLog, UnlinkStatus};
use mirrorknot_core::render::drawing;
use mirrorknot_core::{parse_matrix, trace, GridCode};

fn code(text: &str) -> GridCode {
    parse_matrix(text).unwrap()
}

fn named(classical: &str) -> GridCode {
    code(named_codes().into_iter().find(|(n, _)| n.classical == classical).unwrap().1)
}

const EXAMPLE: &str = "{{-2,-1,-1,2},{1,2,-1,1},{2,1,-1},{1,-2,-1},{1,-2,-1}}";

#[test]
fn example_reduces_to_two_circles() {
    let c = code(EXAMPLE);
    assert_eq!((c.p(), c.q(), c.edge_count()), (4, 3, 17));
    assert_eq!(trace(&c).unwrap().components, 2);
    let log = reduce(&c, default_budget(&c)).unwrap();
    assert!(log.final_code.is_crossing_free());
    assert_eq!(trace(&log.final_code).unwrap().components, 2);
    assert_eq!(is_unlink(&c).unwrap(), UnlinkStatus::Yes(2));
    assert_eq!(normalized_polynomial(&c).unwrap(), unlink_polynomial(2));
}

#[test]
fn printed_example_codes_are_unlinks() {
    for text in [
        "{{-2,-2,-1,2},{-2,2,2,-2},{2,1,-2},{-2,-2,-1},{-2,-2,-2}}",
        "{{-2,-2,-1,2},{-2,2,-1,-2},{2,1,-1},{-2,-2,-2},{-2,-2,-2}}",
        "{{-2,-2,-1,2},{-2,2,2,-2},{2,1,-1},{-2,-2,-2},{-2,-2,-2}}",
        "{{-2,-2,2,2},{-2,2,2,-2},{2,1,-1},{-2,-2,-2},{-2,-2,-2}}",
        "{{-2,-2,2,2},{-2,2,2,-2},{2,2,2},{-2,-2,-2},{-2,-2,-2}}",
    ] {
        let c = code(text);
        assert_eq!(trace(&c).unwrap().components, 2, "{text}");
        assert_eq!(normalized_polynomial(&c).unwrap(), unlink_polynomial(2), "{text}");
    }
}

#[test]
fn log_text_replays() {
    let c = code(EXAMPLE);
    let log = reduce(&c, default_budget(&c)).unwrap();
    let steps = ReductionLog::parse_steps(&c, &log.to_string()).unwrap();
    assert_eq!(steps, log.steps);
    assert_eq!(log.replay().unwrap(), log.final_code);
}

#[test]
fn trefoil_shrinks_to_two_by_two() {
    let start = code("{{-1,1,-1},{-1,-1},{-1,-1}}");
    let log = reduce(&start, default_budget(&start)).unwrap();
    let last = &log.final_code;
    assert_eq!((last.p(), last.q(), last.crossing_count()), (2, 2, 3));
    assert_eq!(normalized_polynomial(last).unwrap(), normalized_polynomial(&start).unwrap());

    let before = code("{{-2,1,-2},{1,-2},{1,-2}}");
    let after = apply_all_over(&before).unwrap();
    assert_eq!((after.p(), after.q()), (2, 2));
    assert_eq!(normalized_polynomial(&after).unwrap(), normalized_polynomial(&before).unwrap());
}

#[test]
fn minimal_trefoil_stays() {
    let t = named("3_1");
    let log = reduce(&t, default_budget(&t)).unwrap();
    assert!(log.steps.is_empty());
    assert_eq!(is_unlink(&t).unwrap(), UnlinkStatus::No);
}

#[test]
fn figure_eight_mosaic() {
    let c = named("4_1");
    let m = to_mosaic(&c).unwrap();
    assert_eq!((m.n, m.crossing_tiles()), (5, 4));
    assert_eq!(m.component_count().unwrap(), 1);
    assert_eq!(mosaic_number_upper_bound(&c), 5);
    assert_eq!(grid_diagram_dimension(&c), 6);
}

#[test]
fn borromean_mosaic() {
    let c = named("6_2^3");
    let m = to_mosaic(&c).unwrap();
    assert_eq!((m.n, m.crossing_tiles()), (6, 6));
    assert!(m.suitably_connected());
    assert_eq!(m.component_count().unwrap(), 3);
}

#[test]
fn six_three_mosaic() {
    let m = to_mosaic(&named("6_3")).unwrap();
    assert_eq!((m.n, m.crossing_tiles()), (6, 6));
    assert_eq!(m.component_count().unwrap(), 1);
}

#[test]
fn drawings() {
    let d = drawing(&named("3_1")).unwrap();
    assert_eq!((d.components.len(), d.crossings.len()), (1, 3));
    let d = drawing(&named("2_1^2")).unwrap();
    assert_eq!((d.components.len(), d.crossings.len()), (2, 2));
    let owners: Vec<usize> = d.crossings.iter().map(|c| c.component).collect();
    assert!(owners.contains(&0) && owners.contains(&1));
    let svg = d.to_svg();
    assert!(svg.starts_with("<svg") && svg.ends_with("</svg>\n"));
    assert_eq!(svg.matches("<path").count(), 2);
}

#[test]
fn named_codes_have_named_component_counts() {
    for (name, text) in named_codes() {
        let got = trace(&code(text)).unwrap().components;
        assert_eq!(Some(got), name.components(), "{name}");
    }
}
