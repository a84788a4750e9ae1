use sieve_core::verify::{
    catalogue, known_check, run_suite, Class, GridOverride, ReportFormat, CHECK_IDS,
};

#[test]
fn every_catalogue_check_is_registered() {
    for s in catalogue() {
        assert!(!s.checks.is_empty(), "{}", s.name);
        for c in &s.checks {
            assert!(known_check(&c.id), "{}", c.id);
        }
    }
    assert!(CHECK_IDS.len() >= 40);
}

#[test]
fn suites_report_only_known_failures() {
    for s in catalogue() {
        let r = run_suite(&s.name, &GridOverride::default()).unwrap();
        let failing: Vec<&str> = r.must_pass_failures().map(|c| c.id.as_str()).collect();
        match s.name.as_str() {
            "squares" => assert_eq!(failing, ["squares.tower"]),
            "extraction" => assert_eq!(failing, ["hiccup.shift-zero-large"]),
            _ => assert!(failing.is_empty(), "{}: {failing:?}", s.name),
        }
    }
}

#[test]
fn report_only_checks_never_fail_a_suite() {
    let r = run_suite("oeis", &GridOverride::default()).unwrap();
    assert!(r.ok());
    assert!(r.checks.iter().any(|c| c.class == Class::ReportOnly));
}

#[test]
fn reports_render_in_every_format() {
    let r = run_suite("cf", &GridOverride::default()).unwrap();
    let text = r.render(ReportFormat::Text).unwrap();
    assert!(text.lines().last().unwrap().starts_with("ok:"), "{text}");
    let csv = r.render(ReportFormat::Csv).unwrap();
    assert_eq!(csv.lines().count(), r.checks.len() + 1);
    let json: serde_json::Value =
        serde_json::from_str(&r.render(ReportFormat::Json).unwrap()).unwrap();
    assert_eq!(json["suite"], "cf");
    assert_eq!(json["checks"].as_array().unwrap().len(), r.checks.len());
}

#[test]
fn reports_are_deterministic() {
    let g: GridOverride = "a=2..3,n=150".parse().unwrap();
    let a = run_suite("golden-core", &g)
        .unwrap()
        .render(ReportFormat::Csv)
        .unwrap();
    let b = run_suite("golden-core", &g)
        .unwrap()
        .render(ReportFormat::Csv)
        .unwrap();
    assert_eq!(a, b);
}

#[test]
fn unknown_suite_and_bad_grid() {
    assert!(run_suite("nope", &GridOverride::default()).is_err());
    assert!("q=3".parse::<GridOverride>().is_err());
    assert!("a=5..2".parse::<GridOverride>().is_err());
}
