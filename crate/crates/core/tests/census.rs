use std::collections::BTreeMap;

use preproj_core::census::{census, census_entries, diff_entries, parse_fixture, shape_count, ShapeSigma};
use preproj_core::coxeter::DEFAULT_CAP;
use preproj_core::DynkinType;

const FIXTURE: &str = include_str!("fixtures/d5_appendix.txt");

#[test]
fn d5_census_matches_fixture() {
    let expected = parse_fixture(FIXTURE).unwrap();
    let actual = census_entries(&census(DynkinType::d(5), DEFAULT_CAP).unwrap());
    let diff = diff_entries(&expected, &actual);
    assert!(diff.is_empty(), "{}", diff.join("\n"));
}

#[test]
fn fixture_group_sizes() {
    let expected = parse_fixture(FIXTURE).unwrap();
    let mut sizes: BTreeMap<ShapeSigma, u64> = BTreeMap::new();
    for e in &expected {
        *sizes.entry(e.sigma).or_default() += 1;
    }
    assert_eq!(sizes.len(), 40);
    assert_eq!(sizes.values().sum::<u64>(), 157);
    assert_eq!(sizes[&ShapeSigma::new(2, -5, 0)], 4);
    assert_eq!(sizes[&ShapeSigma::new(5, -4, 3)], 8);
    assert_eq!(sizes[&ShapeSigma::new(5, 1, 0)], 8);
    for (s, k) in sizes {
        assert_eq!(shape_count(s, 5).unwrap(), k, "{s}");
    }
}
