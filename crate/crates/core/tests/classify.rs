mod common;

use rdrd::analysis::{classify_small, Classification};
use rdrd::constructions::{expected_classification, small_value_family_instances};
use rdrd::exact;
use rdrd::fuzz::{generate_instance, FuzzMode};
use rdrd::Graph;

fn assert_consistent(g: &Graph) {
    let v = exact::gamma_rdrd(g, None).unwrap().value;
    let tag = classify_small(g).unwrap();
    match tag.classification.implied_value() {
        Some(implied) => assert_eq!(
            implied, v,
            "{} ({}) on {g:?}",
            tag.classification, tag.evidence
        ),
        None => assert!(v > 5, "OTHER but value {v} on {g:?}"),
    }
}

#[test]
fn every_connected_graph_up_to_six() {
    for n in 1..=6 {
        for g in common::all_connected_graphs(n) {
            assert_consistent(&g);
        }
    }
}

#[test]
fn seeded_connected_graphs_up_to_nine() {
    for i in 0..400 {
        assert_consistent(&generate_instance(FuzzMode::Graphs, 2, 9, 77, i));
    }
}

#[test]
fn constructed_family_members() {
    let instances = small_value_family_instances();
    assert!(instances.len() >= 20);
    for (spec, g) in instances {
        let v = exact::gamma_rdrd(&g, None).unwrap().value;
        let tag = classify_small(&g).unwrap().classification;
        let expected = expected_classification(&spec).unwrap();
        assert_eq!(Some(v), expected.implied_value(), "{spec}");
        assert_eq!(tag.implied_value(), Some(v), "{spec}: tagged {tag}");
        if let Classification::Rdrd5Omega(_) = expected {
            assert!(
                matches!(tag, Classification::Rdrd5Omega(_)),
                "{spec}: tagged {tag}"
            );
        }
    }
}

#[test]
fn evidence_names_the_decomposition() {
    let g = rdrd::constructions::family_theta(
        rdrd::constructions::ThetaVariant::K1JoinK1PlusH,
        Some(&rdrd::constructions::complete(3).unwrap()),
    )
    .unwrap();
    let tag = classify_small(&g).unwrap();
    assert_eq!(tag.classification, Classification::Rdrd4Theta);
    let pendant = tag.evidence.role("pendant").unwrap();
    assert_eq!(g.degree(pendant[0]), 1);
}
