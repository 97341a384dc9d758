//! Text, JSON, and CSV renderings of verification reports.

use monocurve_core::VerificationReport;
use serde_json::Value;

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn inputs_line(inputs: &std::collections::BTreeMap<String, Value>) -> String {
    inputs.iter().map(|(k, v)| format!("{k}={}", plain(v))).collect::<Vec<_>>().join(" ")
}

pub fn text(reports: &[VerificationReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let p = &r.params;
        let mut head = format!("suite {} (d={}", r.suite, p.d);
        if let Some(m) = p.m {
            head.push_str(&format!(", m={m}"));
        }
        if let Some(n) = p.n_max {
            head.push_str(&format!(", n_max={n}"));
        }
        if let Some(k) = p.k {
            head.push_str(&format!(", k={k}"));
        }
        if p.with_f == Some(true) {
            head.push_str(", with_f");
        }
        out.push_str(&format!("{head}, field={})\n", p.field));
        for c in &r.cases {
            let mark = if c.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!("  [{mark}] {}: expected {}", inputs_line(&c.inputs), plain(&c.expected)));
            if c.pass {
                out.push('\n');
            } else {
                out.push_str(&format!(", actual {}\n", plain(&c.actual)));
            }
        }
        let s = &r.summary;
        out.push_str(&format!("  {}/{} passed, {} failed, {} ms\n", s.passed, s.total, s.failed, s.millis));
    }
    out
}

/// A single report as an object, several as an array; pretty-printed with a trailing newline.
pub fn json(reports: &[VerificationReport]) -> String {
    match reports {
        [one] => one.to_json(),
        many => {
            let mut s = serde_json::to_string_pretty(many).expect("reports serialize");
            s.push('\n');
            s
        }
    }
}

pub fn csv(reports: &[VerificationReport]) -> anyhow::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["suite", "case", "inputs", "expected", "actual", "pass"])?;
    for r in reports {
        for (idx, c) in r.cases.iter().enumerate() {
            w.write_record([
                r.suite.clone(),
                idx.to_string(),
                serde_json::to_string(&c.inputs)?,
                plain(&c.expected),
                plain(&c.actual),
                c.pass.to_string(),
            ])?;
        }
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}
