mod common;

use common::{enumeration_matches, operators_match, small_rings};
use deltan::{enumerate_ideals, parse_ring, Ring};

#[test]
fn enumeration_matches_all_subsets() {
    let rings = small_rings();
    assert!(rings.len() >= 20);
    for r in rings {
        assert!(enumeration_matches(&r), "{r}");
    }
}

#[test]
fn radical_and_colon_match_elementwise() {
    for r in small_rings() {
        assert!(operators_match(&r), "{r}");
    }
}

#[test]
fn known_lattice_sizes() {
    let count = |text: &str| enumerate_ideals(&Ring::new(&parse_ring(text).unwrap()).unwrap()).unwrap().len();
    assert_eq!(count("Z12"), 6);
    assert_eq!(count("Z4 x Z9"), 9);
    assert_eq!(count("Z2 x Z2"), 4);
    assert_eq!(count("Z4[x]/(x^3)"), 13);
    assert_eq!(count("Z2[x]/(x^2+x+1)"), 2);
}
