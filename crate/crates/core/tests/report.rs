use std::collections::BTreeSet;

use k3pencil::checks::{self, MODEL_SPECS, REFERENCES};
use k3pencil::pencil::SValue;
use k3pencil::picard::Fiber;
use k3pencil::report::{CheckRecord, Report, Status, SCHEMA};

const DOC: &str = include_str!("../../../docs/checks.md");

/// Every registered check except the slow generic-sextic certificate,
/// which shares its key with the special fibres.
fn quick_records() -> Vec<CheckRecord> {
    let mut out = vec![checks::quartic_singularities(), checks::branch_intersections()];
    for s in [1, -1] {
        out.extend(checks::branch_singularities(&SValue::at(s)));
    }
    for s in [SValue::Generic, SValue::at(1), SValue::at(-1), SValue::at(2)] {
        out.extend(checks::lines(&s));
    }
    out.extend(MODEL_SPECS.iter().map(|s| checks::lattice(s)));
    for f in [Fiber::Generic, Fiber::S1, Fiber::SMinus1] {
        out.extend(checks::picard(f, 20));
    }
    out.extend(checks::reflections());
    out.extend(checks::sequence_checks());
    for op in ["apery", "fermi", "domb"] {
        out.extend(checks::series(op, 20, false));
    }
    out.extend(checks::identities(None));
    out
}

fn stripped(recs: &[CheckRecord]) -> String {
    let mut v = serde_json::to_value(recs).unwrap();
    for r in v.as_array_mut().unwrap() {
        r.as_object_mut().unwrap().remove("runtime_ms");
    }
    v.to_string()
}

#[test]
fn references_are_registered_and_documented() {
    let known: BTreeSet<&str> = REFERENCES.iter().map(|r| r.0).collect();
    assert_eq!(known.len(), REFERENCES.len(), "duplicate key");
    for key in &known {
        assert!(DOC.contains(&format!("`{key}`")), "{key} missing from docs/checks.md");
    }
    let recs = quick_records();
    let used: BTreeSet<&str> = recs.iter().map(|r| r.paper_ref.as_str()).collect();
    for key in &used {
        assert!(known.contains(key), "{key} not in REFERENCES");
    }
    assert_eq!(used, known, "registered but never emitted");
}

#[test]
fn ids_unique_and_deterministic() {
    let a = quick_records();
    let ids: BTreeSet<&str> = a.iter().map(|r| r.check_id.as_str()).collect();
    assert_eq!(ids.len(), a.len());
    assert_eq!(stripped(&a), stripped(&quick_records()));
}

#[test]
fn report_shape() {
    let recs = checks::identities(Some("symmetry_group"));
    let rep = Report::new(recs);
    assert!(rep.all_ok());
    let v = serde_json::to_value(&rep).unwrap();
    assert_eq!(v["schema"], SCHEMA);
    let c = &v["checks"][0];
    for k in ["check_id", "paper_ref", "status", "details", "runtime_ms"] {
        assert!(c.get(k).is_some(), "{k}");
    }
    assert_eq!(c["status"], "pass");
    let flagged = Report::new(checks::series("domb", 10, false));
    assert_eq!(flagged.checks[0].status, Status::Flagged);
    assert!(flagged.all_ok());
}
