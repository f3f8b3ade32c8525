//! Report rendering: one line per check, `NAME PASS` or
//! `NAME FAIL x=a y=b`, with witness variables bound to element names so
//! the output diffs cleanly against printed tables. The JSON form carries
//! the same fields under the same names.

use orthokit_core::{CheckReport, Groupoid, RelationalSystem};
use serde_json::{json, Map, Value};

/// Element names in index order, the lookup every renderer needs.
pub fn groupoid_names(g: &Groupoid) -> Vec<String> {
    (0..g.size()).map(|i| g.name(i).to_string()).collect()
}

pub fn system_names(s: &RelationalSystem) -> Vec<String> {
    (0..s.size()).map(|i| s.name(i).to_string()).collect()
}

pub fn report_text(report: &CheckReport, names: &[String]) -> String {
    let mut out = String::new();
    for check in &report.checks {
        out.push_str(check.name);
        out.push_str(if check.passed { " PASS" } else { " FAIL" });
        if let Some(witness) = check.witnesses.first() {
            for (var, elem) in &witness.bindings {
                out.push(' ');
                out.push_str(var);
                out.push('=');
                out.push_str(&names[*elem]);
            }
        }
        out.push('\n');
    }
    out
}

pub fn report_json(report: &CheckReport, names: &[String]) -> Value {
    let checks: Vec<Value> = report
        .checks
        .iter()
        .map(|check| {
            let witnesses: Vec<Value> = check
                .witnesses
                .iter()
                .map(|w| {
                    let mut bindings = Map::new();
                    for (var, elem) in &w.bindings {
                        bindings.insert(var.to_string(), Value::String(names[*elem].clone()));
                    }
                    Value::Object(bindings)
                })
                .collect();
            json!({
                "name": check.name,
                "passed": check.passed,
                "witnesses": witnesses,
            })
        })
        .collect();
    json!({ "checks": checks, "passed": report.passed() })
}
