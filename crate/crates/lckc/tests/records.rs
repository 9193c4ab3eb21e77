use lckc::core::{Center, Clustering, PointSet};
use lckc::records::*;
use proptest::prelude::*;

fn budget() -> impl Strategy<Value = Option<Budget>> {
    prop_oneof![
        Just(None),
        (0usize..100_000).prop_map(|b| Some(Budget::Absolute(b))),
        (0u32..=100).prop_map(|p| Some(Budget::Fraction(p as f64 / 100.0))),
    ]
}

fn real() -> impl Strategy<Value = f64> {
    prop_oneof![Just(0.0), 1e-12f64..1e12, (0.0f64..1.0).prop_map(|v| v * 1e-6)]
}

prop_compose! {
    fn record()(
        setup in "setup1|setup2|bench|solve",
        dataset in "[a-z]{1,8}(, \"x\")?",
        hist_algo in "carve|fft|file",
        algo in "gap|overcover|overcover-exact|carve|fft",
        k in 1usize..500,
        b in budget(),
        slice in proptest::option::of(1usize..50),
        cost in real(),
        updates in 0usize..100_000,
        runtime in real(),
        seed in any::<u64>(),
        radius_used in real(),
    ) -> ExperimentRecord {
        ExperimentRecord { setup, dataset, hist_algo, algo, k, b, slice, cost, updates, runtime, seed, radius_used }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn records_round_trip(records in proptest::collection::vec(record(), 1000)) {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("results.csv");
        write_records(&records, &path).unwrap();
        let back = read_records(&path).unwrap();
        let expected: Vec<_> = records.iter().map(ExperimentRecord::rounded).collect();
        prop_assert_eq!(back, expected);
    }
}

#[test]
fn header_is_checked_on_read() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.csv");
    std::fs::write(&path, "setup,dataset,algo\n").unwrap();
    assert!(read_records(&path).is_err());
}

#[test]
fn unwritable_path_is_an_io_error() {
    let err = write_records(&[], std::path::Path::new("/nonexistent-dir/x.csv")).unwrap_err();
    assert!(matches!(err, lckc::Error::Io { .. }));
}

#[test]
fn labels_round_trip() {
    let ps = PointSet::from_rows(&[[0.0, 0.0], [1.0, 0.0], [5.0, 5.0], [6.0, 5.0]]).unwrap();
    let centers = vec![Center::from_point(&ps, 1), Center::external(vec![5.5, 5.0])];
    let c = Clustering::new(centers, vec![0, 0, 1, 1]).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("labels.csv");
    write_labels(&path, &ps, &c).unwrap();
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("point,center,coord_0,coord_1\n0,0,1,0\n"));
    let back = read_labels(&path, 4, 2).unwrap();
    assert_eq!(back.labels, c.labels);
    assert!(back.centers.iter().zip(&c.centers).all(|(a, b)| a.same_site(b)));

    assert!(read_labels(&path, 5, 2).is_err(), "point 4 has no label");
    assert!(read_labels(&path, 4, 3).is_err(), "wrong dimension");
    std::fs::write(&path, "point,center,coord_0,coord_1\n0,0,1,0\n1,0,2,0\n").unwrap();
    assert!(read_labels(&path, 2, 2).is_err(), "center 0 has two coordinate sets");
}
