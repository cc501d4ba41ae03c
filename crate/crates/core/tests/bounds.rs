use num_rational::Ratio;
use rdrd::analysis::{check_frame_equality, evaluate_bounds};
use rdrd::constructions::*;
use rdrd::fuzz::{generate_instance, FuzzMode};
use rdrd::graph::{disjoint_union, join};
use rdrd::Graph;

#[test]
fn no_applicable_bound_fails_on_the_corpus() {
    for mode in [
        FuzzMode::Graphs,
        FuzzMode::Trees,
        FuzzMode::Regular,
        FuzzMode::TriangleFree,
    ] {
        for i in 0..120 {
            let g = generate_instance(mode, 1, 9, 3, i);
            let r = evaluate_bounds(&g, None).unwrap();
            let bad: Vec<_> = r.violations().collect();
            assert!(bad.is_empty(), "{g:?}: {bad:?}");
        }
    }
}

#[test]
fn rest_lower_bound_is_attained_by_the_sharpness_family() {
    for (s, p, q) in [(4, 1, 1), (4, 2, 1), (5, 1, 1)] {
        let g = sharpness_h(s, p, q).unwrap();
        let r = evaluate_bounds(&g, None).unwrap();
        let e = r.entry("rest_lower").unwrap();
        assert!(e.applicable);
        assert_eq!(e.lhs, Ratio::from_integer(3 * p as i64 + 4 * q as i64));
        assert_eq!(r.params.gamma_rdr, 3 * p as u32 + 4 * q as u32);
    }
}

#[test]
fn frame_equality_condition_matches() {
    for i in 0..250 {
        let g = generate_instance(FuzzMode::Graphs, 1, 9, 11, i);
        let f = check_frame_equality(&g, None).unwrap();
        assert_eq!(f.equality_holds, f.condition_holds, "{g:?}: {f:?}");
        assert!(f.gamma_rdr >= f.gamma + f.gamma_r);
    }
}

#[test]
fn frame_equality_on_named_graphs() {
    let yes = [
        Graph::empty(1),
        path(2).unwrap(),
        path(3).unwrap(),
        h_n(6).unwrap(),
        h_n(8).unwrap(),
        h_n(10).unwrap(),
        hamming(3).unwrap(),
        hamming(4).unwrap(),
        star(7).unwrap(),
    ];
    for g in yes {
        let f = check_frame_equality(&g, None).unwrap();
        assert!(f.equality_holds && f.condition_holds, "{g:?}");
    }
    for g in [
        cycle(4).unwrap(),
        path(4).unwrap(),
        complete(4).unwrap(),
        petersen(),
    ] {
        let f = check_frame_equality(&g, None).unwrap();
        assert!(!f.equality_holds && !f.condition_holds, "{g:?}");
    }
}

/// Connected regular claw-free graphs attain `γ + γ_r` only inside the named
/// families. Graphs whose order and degree match `K_p □ K_p` are skipped,
/// since telling them apart would need an isomorphism test.
#[test]
fn regular_claw_free_sweep() {
    let mut checked = 0;
    for i in 0..600 {
        let g = generate_instance(FuzzMode::Regular, 3, 10, 19, i);
        let pred = g.predicates();
        if !pred.is_connected || !pred.is_claw_free {
            continue;
        }
        let n = g.order();
        let r = pred.regular_degree.unwrap();
        let in_family =
            (n <= 3 && g.size() + 1 == n) || (r + 2 == n && n >= 6 && n.is_multiple_of(2));
        let rook_shaped = (3..=4).any(|p| p * p == n && r == 2 * (p - 1));
        let f = check_frame_equality(&g, None).unwrap();
        if in_family {
            assert!(f.equality_holds, "{g:?}");
        } else if !rook_shaped {
            assert!(!f.equality_holds, "{g:?}");
        }
        checked += 1;
    }
    assert!(checked >= 50, "only {checked} claw-free instances");
}

#[test]
fn regular_girth_six_bound_on_heawood_is_tight() {
    let r = evaluate_bounds(&heawood(), None).unwrap();
    let e = r.entry("regular_girth6").unwrap();
    assert!(e.applicable && e.holds);
    assert_eq!(e.lhs, e.rhs);
}

#[test]
fn precondition_reasons_are_reported() {
    let r = evaluate_bounds(&petersen(), None).unwrap();
    assert_eq!(
        r.entry("regular_girth6")
            .unwrap()
            .precondition_failed
            .as_deref(),
        Some("girth 5 < 6")
    );
    let g = join(
        &Graph::empty(1),
        &disjoint_union(&complete(2).unwrap(), &complete(2).unwrap()),
    );
    let r = evaluate_bounds(&g, None).unwrap();
    assert_eq!(
        r.entry("triangle_free")
            .unwrap()
            .precondition_failed
            .as_deref(),
        Some("contains a triangle")
    );
    assert!(r.params.gamma_rdr > 2 * r.params.gamma_rroman - 2);
    let r = evaluate_bounds(&Graph::empty(3), None).unwrap();
    assert!(!r.entry("rest_lower").unwrap().applicable);
    assert!(!r.entry("nontrivial_rroman").unwrap().applicable);
}
