use superkit::families::FamilySpec;
use superkit::io::{parse_algebra, parse_module, parse_supercomm, write_algebra, write_module, write_supercomm};
use superkit::reps::{induced_trivial, SuperModule};
use superkit::verify::splitting_catalog;
use superkit::Error;

const FAMILIES: &[&str] = &[
    "gl:1:1",
    "gl:2:1",
    "gl:2:0",
    "sl:2:1",
    "sl:3:1",
    "osp1:1",
    "osp1:2",
    "osp1:3",
    "torus:3",
    "toy_odd_nilpotent",
    "toy_odd_semisimple",
    "product:osp1:1,gl:1:1,torus:1",
    "product",
];

#[test]
fn every_family_round_trips_exactly() {
    for spec in FAMILIES {
        let g: FamilySpec = spec.parse().unwrap();
        let g = g.build();
        let text = write_algebra(&g);
        let back = parse_algebra(&text).unwrap_or_else(|e| panic!("{spec}: {e}"));
        assert_eq!(back, g, "{spec}");
        assert_eq!(back.structure_entries(), g.structure_entries(), "{spec}");
        assert_eq!(write_algebra(&back), text, "{spec}");
    }
}

#[test]
fn modules_round_trip() {
    for spec in ["gl:1:1", "osp1:1", "toy_odd_semisimple"] {
        let g = spec.parse::<FamilySpec>().unwrap().build();
        for m in [SuperModule::adjoint(&g), induced_trivial(&g), SuperModule::trivial(&g)] {
            assert_eq!(parse_module(&write_module(&g, &m), &g).unwrap(), m, "{spec}");
        }
    }
}

#[test]
fn splitting_catalog_round_trips() {
    for (name, a, u) in splitting_catalog() {
        let (b, v) = parse_supercomm(&write_supercomm(&a, Some(&u))).unwrap();
        assert_eq!(b, a, "{name}");
        assert_eq!(v, Some(u), "{name}");
    }
}

#[test]
fn malformed_input_names_the_line() {
    let text = "name broken\nbasis x even\n\nbasis y odd\nrep_parity even\nrep x 1 2\n";
    match parse_algebra(text) {
        Err(Error::Parse(msg)) => assert!(msg.starts_with("line 6:"), "{msg}"),
        other => panic!("expected parse error, got {other:?}"),
    }
    let g = "gl:1:1".parse::<FamilySpec>().unwrap().build();
    match parse_module("parity even odd\naction E99 0 0 ; 0 0\n", &g) {
        Err(Error::Parse(msg)) => assert!(msg.starts_with("line 2:"), "{msg}"),
        other => panic!("expected parse error, got {other:?}"),
    }
}
