//! Round trips through the JSON and CSV formats.

use framekit::catalog::{build, FrameSource, Named};
use framekit::framekit_core::cutproject::{build_scheme, build_window, generate_quasicrystal};
use framekit::framekit_core::frames::{Frame, NormalizedFrame};
use framekit::framekit_core::groupframes::{named_frame, NamedFrame};
use framekit::framekit_core::numlin::Vector;
use framekit::framekit_core::Complex64;
use framekit::json::{read_frame, write_frame};
use framekit::tables::{points_csv, read_observable, read_points, real};
use proptest::prelude::*;

fn finite() -> impl Strategy<Value = f64> {
    prop_oneof![
        -1e3f64..1e3,
        any::<f64>().prop_filter("finite", |x| x.is_finite())
    ]
}

fn frame(complex: bool) -> impl Strategy<Value = Frame> {
    (1usize..5, 0usize..4).prop_flat_map(move |(n, extra)| {
        let entries = proptest::collection::vec((finite(), finite()), n);
        proptest::collection::vec(entries, n + extra).prop_map(move |rows| {
            let vectors = rows
                .into_iter()
                .map(|r| {
                    Vector::new(
                        r.into_iter()
                            .map(|(a, b)| Complex64::new(a, if complex { b } else { 0.0 }))
                            .collect(),
                    )
                    .unwrap()
                })
                .collect();
            Frame::new(n, vectors).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn raw_frames_round_trip_exactly(f in prop_oneof![frame(false), frame(true)]) {
        let text = write_frame(&FrameSource::from_frame(f.clone()));
        let back = read_frame(&text).unwrap();
        prop_assert_eq!(back.frame, f);
    }

    #[test]
    fn reals_round_trip_through_csv(x in finite()) {
        prop_assert_eq!(real(x).parse::<f64>().unwrap(), x);
        let digits = real(x).split('e').next().unwrap().replace(['-', '.'], "");
        prop_assert_eq!(digits.len(), 17);
    }

    #[test]
    fn observables_round_trip(values in proptest::collection::vec(finite(), 1..20)) {
        let csv: String = values.iter().enumerate().map(|(i, v)| format!("{i},{}\n", real(*v))).collect();
        prop_assert_eq!(read_observable(&csv).unwrap().values().to_vec(), values.clone());
        let json = serde_json::to_string(&values).unwrap();
        prop_assert_eq!(read_observable(&json).unwrap().values().to_vec(), values);
    }
}

#[test]
fn weighted_frames_round_trip() {
    for named in [
        Named::Simplex(4),
        Named::Dft(7, 3),
        Named::Weyl(3),
        Named::Cluster(3),
    ] {
        let src = build(named).unwrap();
        let text = write_frame(&src);
        assert!(text.contains("\"weights\""));
        let back = read_frame(&text).unwrap();
        let (a, b): (&NormalizedFrame, &NormalizedFrame) = (
            src.normalized.as_ref().unwrap(),
            back.normalized.as_ref().unwrap(),
        );
        assert_eq!(a.units(), b.units());
        assert_eq!(a.weights(), b.weights());
        assert_eq!(write_frame(&back), text);
    }
}

#[test]
fn invalid_weighted_frames_are_rejected() {
    let not_unit = r#"{"field":"R","dim":1,"vectors":[[2]],"weights":[1]}"#;
    assert!(read_frame(not_unit).is_err());
    let short = r#"{"field":"R","dim":2,"vectors":[[1,0],[0,1]],"weights":[1]}"#;
    assert!(read_frame(short).is_err());
    let ragged = r#"{"field":"R","dim":2,"vectors":[[1,0],[0]]}"#;
    assert!(read_frame(ragged).is_err());
}

#[test]
fn point_csv_preserves_physical_coordinates() {
    let f = named_frame(NamedFrame::Icosahedral6).unwrap();
    let scheme = build_scheme(&f).unwrap();
    let set = generate_quasicrystal(&scheme, &build_window(&scheme).unwrap(), 1).unwrap();
    let text = points_csv(&set, 6, 3);
    assert!(text.starts_with("n1,n2,n3,n4,n5,n6,x1,x2,x3,s1,s2,s3,count\n"));
    let back = read_points(text.as_bytes()).unwrap();
    let physical: Vec<Vec<f64>> = set
        .points
        .iter()
        .map(|p| p.point.physical.iter().map(|x| x + 0.0).collect())
        .collect();
    assert_eq!(back, physical);
}
