//! Report rendering: exact rational serialization, optional ANSI styling
//! and the JSON document builders. No value is ever printed through
//! floating point; rationals appear as decimal integers when exact and as
//! "p/q" strings otherwise.

use branecharge_core::charges::{ChargeReport, OracleOutcome};
use branecharge_core::intersection::GradedClass;
use branecharge_core::linalg::Rat;
use num_traits::One;
use serde_json::{json, Value};

/// "34" when the rational is an integer, "p/q" otherwise.
pub fn rational_string(value: &Rat) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

pub fn rational_json(value: &Rat) -> Value {
    Value::String(rational_string(value))
}

pub fn rationals_json(values: &[Rat]) -> Value {
    Value::Array(values.iter().map(rational_json).collect())
}

/// ANSI styling, disabled by BRANECHARGE_NO_COLOR.
#[derive(Debug, Clone, Copy)]
pub struct Style {
    enabled: bool,
}

impl Style {
    pub fn from_env() -> Self {
        Self {
            enabled: std::env::var_os("BRANECHARGE_NO_COLOR").is_none(),
        }
    }

    pub fn plain() -> Self {
        Self { enabled: false }
    }

    pub fn heading(&self, text: &str) -> String {
        if self.enabled {
            format!("\x1b[1m{text}\x1b[0m")
        } else {
            text.to_string()
        }
    }

    pub fn verdict(&self, pass: bool) -> String {
        match (pass, self.enabled) {
            (true, true) => "\x1b[32mPASS\x1b[0m".into(),
            (false, true) => "\x1b[31mFAIL\x1b[0m".into(),
            (true, false) => "PASS".into(),
            (false, false) => "FAIL".into(),
        }
    }
}

/// One line per graded component: `codim k: c*[V(0,1)] + ...`.
pub fn graded_class_lines(class: &GradedClass) -> Vec<String> {
    let mut lines = Vec::new();
    for codim in 0..=class.dim() {
        let part = class.part(codim);
        if part.is_empty() {
            continue;
        }
        let terms: Vec<String> = part
            .iter()
            .map(|(cone, coeff)| {
                let rays: Vec<String> = cone.iter().map(usize::to_string).collect();
                format!("{}*[V({})]", rational_string(coeff), rays.join(","))
            })
            .collect();
        lines.push(format!("codim {codim}: {}", terms.join(" + ")));
    }
    if lines.is_empty() {
        lines.push("zero class".into());
    }
    lines
}

pub fn graded_class_json(class: &GradedClass) -> Value {
    let mut parts = serde_json::Map::new();
    for codim in 0..=class.dim() {
        let part = class.part(codim);
        if part.is_empty() {
            continue;
        }
        let terms: Vec<Value> = part
            .iter()
            .map(|(cone, coeff)| {
                json!({
                    "cone": cone,
                    "coefficient": rational_string(coeff),
                })
            })
            .collect();
        parts.insert(codim.to_string(), Value::Array(terms));
    }
    Value::Object(parts)
}

pub fn oracle_outcome_json(outcome: &OracleOutcome) -> Value {
    match outcome {
        OracleOutcome::Checked {
            expected,
            got,
            pass,
        } => json!({
            "status": "checked",
            "expected": rational_string(expected),
            "got": rational_string(got),
            "pass": pass,
        }),
        OracleOutcome::SkippedNotNef => json!({ "status": "skipped:not-nef" }),
        OracleOutcome::SkippedNotBig => json!({ "status": "skipped:not-big" }),
        OracleOutcome::SkippedNonIntegral => json!({ "status": "skipped:not-integral" }),
    }
}

pub fn oracle_outcome_text(outcome: &OracleOutcome, style: &Style) -> String {
    match outcome {
        OracleOutcome::Checked {
            expected,
            got,
            pass,
        } => format!(
            "expected {} got {} {}",
            rational_string(expected),
            rational_string(got),
            style.verdict(*pass)
        ),
        OracleOutcome::SkippedNotNef => "skipped (divisor not nef)".into(),
        OracleOutcome::SkippedNotBig => {
            "skipped (divisor polytope not full-dimensional)".into()
        }
        OracleOutcome::SkippedNonIntegral => "skipped (divisor not integral)".into(),
    }
}

pub fn charge_report_json(report: &ChargeReport) -> Value {
    json!({
        "variety": {
            "hash": format!("{:016x}", report.polytope_hash),
            "dim": report.dim,
            "rays": report.ray_count,
        },
        "divisor": rationals_json(&report.divisor),
        "charge": graded_class_json(&report.charge),
        "coefficient_sums": rationals_json(&report.charge.coefficient_sums()),
        "anticanonical_pairings": rationals_json(&report.anticanonical_pairings),
        "genus": rational_string(&report.genus),
        "identities": report.identities.iter().map(|check| json!({
            "name": check.name,
            "pass": check.pass,
        })).collect::<Vec<_>>(),
        "oracles": report.oracles.iter().map(|check| {
            let mut row = serde_json::Map::new();
            row.insert("name".into(), Value::String(check.name.clone()));
            row.insert("outcome".into(), oracle_outcome_json(&check.outcome));
            Value::Object(row)
        }).collect::<Vec<_>>(),
        "all_pass": report.all_pass(),
    })
}

pub fn charge_report_text(report: &ChargeReport, style: &Style) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{} dim={} rays={} hash={:016x}\n",
        style.heading("variety:"),
        report.dim,
        report.ray_count,
        report.polytope_hash
    ));
    let divisor: Vec<String> = report.divisor.iter().map(rational_string).collect();
    out.push_str(&format!(
        "divisor (canonical facet order): [{}]\n",
        divisor.join(", ")
    ));
    out.push_str(&style.heading("charge (cone-basis components):"));
    out.push('\n');
    for line in graded_class_lines(&report.charge) {
        out.push_str("  ");
        out.push_str(&line);
        out.push('\n');
    }
    let sums: Vec<String> = report
        .charge
        .coefficient_sums()
        .iter()
        .map(rational_string)
        .collect();
    out.push_str(&format!(
        "coefficient sums by codim: [{}]\n",
        sums.join(", ")
    ));
    let pairings: Vec<String> = report
        .anticanonical_pairings
        .iter()
        .map(rational_string)
        .collect();
    out.push_str(&format!(
        "degree pairings vs (-K)^(n-k): [{}]\n",
        pairings.join(", ")
    ));
    out.push_str(&format!(
        "genus chi(Y, brane) = {}\n",
        rational_string(&report.genus)
    ));
    for check in &report.identities {
        out.push_str(&format!(
            "identity: {} {}\n",
            check.name,
            style.verdict(check.pass)
        ));
    }
    for check in &report.oracles {
        out.push_str(&format!(
            "oracle: {} {}\n",
            check.name,
            oracle_outcome_text(&check.outcome, style)
        ));
    }
    out
}
