//! The bundled fixture corpus. Each fixture is an input file with an `expect` table.

use anyhow::{Context, Result};

use dgforge::report::{AnalysisReport, CheckEntry, Status};

use crate::commands::{Command, Overrides, Session};
use crate::spec::parse_spec;

pub const FIXTURES: &[(&str, &str)] = &[
    ("dual-dg", include_str!("../fixtures/dual-dg.json")),
    ("field", include_str!("../fixtures/field.json")),
    ("kx", include_str!("../fixtures/kx.json")),
    ("kxk", include_str!("../fixtures/kxk.json")),
    ("mat2-dg", include_str!("../fixtures/mat2-dg.json")),
    ("mat2-graded", include_str!("../fixtures/mat2-graded.json")),
];

/// What a check produced: the value of a computed entry, otherwise the status label.
pub fn observed(c: &CheckEntry) -> String {
    match &c.value {
        Some(v) if c.provenance == "computed" && c.status == Status::Pass => v.clone(),
        _ => c.status.label().to_string(),
    }
}

/// Runs `all` on one fixture and compares against its expectations. Failures the
/// fixture expects are not counted as unexpected.
pub fn check_fixture(text: &str) -> Result<AnalysisReport> {
    let (spec, _) = parse_spec(text, true)?;
    let expect = spec.expect.clone();
    let session = Session::new(spec, &Overrides::default())?;
    let full = session.run(Command::All)?;
    let mut out = AnalysisReport::new();
    for (name, want) in &expect {
        let entry = match full.get(name) {
            Some(c) => {
                let got = observed(c);
                let e = CheckEntry::new(name.clone(), Status::from_bool(&got == want), "example").with_value(got.clone());
                if got == *want {
                    e
                } else {
                    e.with_witness(Some(format!("expected `{want}`, got `{got}`")))
                }
            }
            None => CheckEntry::new(name.clone(), Status::Fail, "example")
                .with_witness(Some(format!("expected `{want}`, check not produced"))),
        };
        out.push(entry);
    }
    let unexpected: Vec<&str> = full
        .checks
        .iter()
        .filter(|c| c.status == Status::Fail && expect.get(&c.name).map(String::as_str) != Some("fail"))
        .map(|c| c.name.as_str())
        .collect();
    out.push(
        CheckEntry::law("no-unexpected-failures", unexpected.is_empty())
            .with_witness((!unexpected.is_empty()).then(|| unexpected.join(", "))),
    );
    Ok(out)
}

pub fn run_fixtures() -> Result<AnalysisReport> {
    let mut out = AnalysisReport::new();
    for (name, text) in FIXTURES {
        let r = check_fixture(text).with_context(|| format!("fixture `{name}`"))?;
        out.extend_prefixed(name, r);
    }
    out.normalize();
    Ok(out)
}
