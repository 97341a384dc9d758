use monocurve_core::verify::socle_dimension_artinian_reduction;
use monocurve_core::{CurveCache, Error, FieldChoice, Suite, SuiteRequest, VerificationReport, Verifier};

fn quick(suite: Suite, d: usize) -> SuiteRequest {
    let n_max = match suite {
        Suite::Leading | Suite::Sanity => 3,
        _ => 4,
    };
    SuiteRequest { n_max: Some(n_max), ..SuiteRequest::new(suite, d) }
}

#[test]
fn every_suite_passes_small_grids() {
    let v = Verifier::default();
    for d in 2..=4 {
        for suite in Suite::ALL {
            let report = v.run(&quick(suite, d)).unwrap();
            assert!(report.all_passed(), "{suite} d = {d}: {:?}", report.failures().collect::<Vec<_>>());
            assert!(report.summary.total > 0);
            assert_eq!(report.summary.total, report.cases.len());
            assert_eq!(report.summary.passed + report.summary.failed, report.summary.total);
        }
    }
}

#[test]
fn leading_with_f_over_a_prime() {
    let v = Verifier::new("fp:32003".parse().unwrap());
    let req = SuiteRequest { with_f: true, n_max: Some(3), ..SuiteRequest::new(Suite::Leading, 3) };
    let report = v.run(&req).unwrap();
    assert!(report.all_passed());
    assert_eq!(report.params.field, "fp:32003");
}

#[test]
fn reports_are_deterministic() {
    for suite in Suite::ALL {
        let a = Verifier::default().with_timing(false).run(&quick(suite, 3)).unwrap().to_json();
        let b = Verifier::default().with_timing(false).run(&quick(suite, 3)).unwrap().to_json();
        assert_eq!(a, b, "{suite}");
    }
}

#[test]
fn json_round_trip() {
    let report = Verifier::default().run(&quick(Suite::Alternating, 3)).unwrap();
    let json = report.to_json();
    let parsed = VerificationReport::from_json(&json).unwrap();
    assert_eq!(parsed, report);
    assert_eq!(parsed.to_json(), json);
    let value: serde_json::Value = serde_json::from_str(&json).unwrap();
    for key in ["suite", "params", "cases", "summary"] {
        assert!(value.get(key).is_some(), "missing {key}");
    }
    for key in ["inputs", "expected", "actual", "pass"] {
        assert!(value["cases"][0].get(key).is_some(), "missing case field {key}");
    }
}

#[test]
fn groebner_suites_refuse_large_d() {
    let v = Verifier::default();
    for suite in [Suite::Leading, Suite::Sanity] {
        assert!(matches!(v.run(&SuiteRequest::new(suite, 6)), Err(Error::Range(_))));
    }
    assert!(v.run(&quick(Suite::Length, 6)).unwrap().all_passed());
}

#[test]
fn suite_names_parse() {
    for suite in Suite::ALL {
        assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
    }
    assert!("bogus".parse::<Suite>().is_err());
    assert_eq!("rational".parse::<FieldChoice>().unwrap(), FieldChoice::default());
    assert!("fp:12".parse::<FieldChoice>().is_err());
}

#[test]
fn socle_is_one_dimensional() {
    let cache = CurveCache::new();
    for d in 2..=4 {
        assert_eq!(socle_dimension_artinian_reduction(d, &cache).unwrap().dimension, 1, "d = {d}");
    }
}
