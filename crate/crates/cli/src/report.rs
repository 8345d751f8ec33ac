//! Report assembly and rendering.

use std::collections::BTreeMap;

use circinv_core::cyclotomic::CycElement;
use circinv_core::{Error, ExpVec, Poly, Rational, SparsePoly};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Error,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub command: &'static str,
    pub params: Value,
    pub verdict: Verdict,
    pub details: Value,
    pub timings_ms: BTreeMap<String, f64>,
    /// Human-readable lines; never contains timings.
    #[serde(skip)]
    pub lines: Vec<String>,
}

impl Report {
    pub fn new(command: &'static str, params: Value) -> Self {
        Report {
            command,
            params,
            verdict: Verdict::Pass,
            details: json!({}),
            timings_ms: BTreeMap::new(),
            lines: Vec::new(),
        }
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    pub fn detail(&mut self, key: &str, v: Value) {
        self.details.as_object_mut().expect("details is an object").insert(key.to_string(), v);
    }

    pub fn error(command: &'static str, params: Value, e: &Error) -> Self {
        let mut r = Report::new(command, params);
        r.verdict = Verdict::Error;
        r.detail("error", json!(error_kind(e)));
        r.detail("message", json!(e.to_string()));
        r
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for l in &self.lines {
            out.push_str(l);
            out.push('\n');
        }
        let v = match self.verdict {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Error => "error",
        };
        out.push_str(&format!("verdict: {v}\n"));
        out
    }

    pub fn render_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// The variant name of an error, e.g. `NotADivisor`.
pub fn error_kind(e: &Error) -> String {
    let dbg = format!("{e:?}");
    dbg.split(|c: char| !c.is_alphanumeric()).next().unwrap_or_default().to_string()
}

fn rational(r: &Rational) -> Value {
    json!(r.to_string())
}

pub fn coeff(c: &[Rational]) -> Value {
    let rational_value = c.iter().skip(1).all(Rational::is_zero);
    let (num, den) = if rational_value {
        (json!(c[0].numer().to_string()), json!(c[0].denom().to_string()))
    } else {
        (Value::Null, Value::Null)
    };
    json!({
        "num": num,
        "den": den,
        "zeta_coords": c.iter().map(rational).collect::<Vec<_>>(),
    })
}

pub fn element(c: &CycElement) -> Value {
    coeff(c.coords())
}

pub fn exponents(e: &ExpVec) -> Value {
    json!(e.entries())
}

/// Terms in descending graded-lex order.
pub fn sparse(p: &SparsePoly) -> Value {
    Value::Array(
        p.sorted_terms().into_iter().map(|(e, c)| json!({ "exponents": exponents(e), "coeff": coeff(c) })).collect(),
    )
}

pub fn poly(p: &Poly) -> Value {
    json!({ "basis": p.basis().name(), "terms": sparse(p.sparse()) })
}
