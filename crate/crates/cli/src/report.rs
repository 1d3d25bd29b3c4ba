//! Versioned JSON report schema. Reports are deterministic: with
//! `--no-timestamp` the same inputs produce byte-identical output.

use serde::Serialize;
use serde_json::{json, Value};
use srlab_core::classify::{Evidence, Witness};
use srlab_core::ideal::Ideal;
use srlab_core::multset::MultSet;
use srlab_core::{Elem, FiniteRing};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize)]
pub struct ElemJson {
    pub index: usize,
    pub name: String,
}

pub fn elem_json(r: &FiniteRing, e: Elem) -> ElemJson {
    ElemJson {
        index: e.idx(),
        name: r.name(e).to_string(),
    }
}

pub fn elems_json(r: &FiniteRing, elems: impl IntoIterator<Item = Elem>) -> Vec<ElemJson> {
    elems.into_iter().map(|e| elem_json(r, e)).collect()
}

pub fn ideal_json(i: &Ideal) -> Value {
    json!({
        "generators": i.generators().iter().map(|g| g.idx()).collect::<Vec<_>>(),
        "members": elems_json(i.ring(), i.elems()),
    })
}

pub fn mult_set_json(s: &MultSet) -> Value {
    json!({
        "generators": s.generators().iter().map(|g| g.idx()).collect::<Vec<_>>(),
        "members": elems_json(s.ring(), s.elems()),
    })
}

/// Witness payloads, tagged by kind.
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum WitnessJson {
    None,
    UniformS {
        s: ElemJson,
    },
    Exponent {
        s: ElemJson,
        n: usize,
    },
    PowerWitness {
        s: ElemJson,
        m: usize,
    },
    ShiftAnnihilator {
        t: ElemJson,
        a: ElemJson,
    },
    PairCounterexample {
        a: ElemJson,
        b: ElemJson,
    },
    TripleCounterexample {
        a: ElemJson,
        b: ElemJson,
        c: ElemJson,
    },
    IdealCounterexample {
        ideal: Value,
    },
    MeetsS {
        elem: ElemJson,
    },
    Annihilator {
        s: ElemJson,
    },
    Element {
        r: ElemJson,
    },
    SFinite {
        s: ElemJson,
        ideal: Value,
    },
}

pub fn witness_json(r: &FiniteRing, w: &Witness) -> (WitnessJson, Vec<String>) {
    let e = |x: Elem| elem_json(r, x);
    let payload = match &w.evidence {
        Evidence::None => WitnessJson::None,
        Evidence::UniformS { s } => WitnessJson::UniformS { s: e(*s) },
        Evidence::Exponent { s, n } => WitnessJson::Exponent { s: e(*s), n: *n },
        Evidence::PowerWitness { s, m } => WitnessJson::PowerWitness { s: e(*s), m: *m },
        Evidence::ShiftAnnihilator { t, a } => WitnessJson::ShiftAnnihilator { t: e(*t), a: e(*a) },
        Evidence::Pair { a, b } => WitnessJson::PairCounterexample { a: e(*a), b: e(*b) },
        Evidence::Triple { a, b, c } => WitnessJson::TripleCounterexample {
            a: e(*a),
            b: e(*b),
            c: e(*c),
        },
        Evidence::IdealCounterexample { ideal } => WitnessJson::IdealCounterexample {
            ideal: ideal_json(ideal),
        },
        Evidence::MeetsS { elem } => WitnessJson::MeetsS { elem: e(*elem) },
        Evidence::Annihilator { s } => WitnessJson::Annihilator { s: e(*s) },
        Evidence::Element { r: x } => WitnessJson::Element { r: e(*x) },
        Evidence::SFinite { s, ideal } => WitnessJson::SFinite {
            s: e(*s),
            ideal: ideal_json(ideal),
        },
    };
    let mut flags = Vec::new();
    if w.degenerate_zero_in_s {
        flags.push("degenerate: 0 ∈ S".to_string());
    }
    if w.finite_trivial {
        flags.push("trivial: finite ring".to_string());
    }
    (payload, flags)
}

/// One named check with its verdict and certifying data.
#[derive(Debug, Clone, Serialize)]
pub struct RecordJson {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inputs: Option<Value>,
    pub verdict: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<bool>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessJson>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub flags: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub data: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl RecordJson {
    pub fn new(name: impl Into<String>, verdict: bool) -> Self {
        RecordJson {
            name: name.into(),
            inputs: None,
            verdict,
            expected: None,
            pass: verdict,
            witness: None,
            flags: Vec::new(),
            data: None,
            detail: None,
        }
    }

    /// A reported fact rather than a pass/fail criterion: the verdict is
    /// informational and the record passes unless re-validation fails.
    pub fn info(name: impl Into<String>, verdict: bool) -> Self {
        let mut rec = Self::new(name, verdict);
        rec.pass = true;
        rec
    }

    pub fn expect_verdict(mut self, expected: bool) -> Self {
        self.expected = Some(expected);
        self.pass = self.verdict == expected;
        self
    }

    pub fn with_inputs(mut self, inputs: Value) -> Self {
        self.inputs = Some(inputs);
        self
    }

    pub fn with_witness(mut self, r: &FiniteRing, w: &Witness) -> Self {
        let (payload, flags) = witness_json(r, w);
        self.witness = Some(payload);
        self.flags.extend(flags);
        self
    }

    pub fn with_data(mut self, data: Value) -> Self {
        self.data = Some(data);
        self
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    pub fn with_flag(mut self, flag: impl Into<String>) -> Self {
        self.flags.push(flag.into());
        self
    }

    /// Mark failed regardless of verdict (revalidation failures).
    pub fn force_fail(mut self, why: impl Into<String>) -> Self {
        self.pass = false;
        self.detail = Some(why.into());
        self
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub tool: &'static str,
    pub tool_version: &'static str,
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generated_at_unix_ms: Option<u128>,
    pub inputs: Value,
    pub records: Vec<RecordJson>,
    pub summary: Summary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
}

impl Report {
    pub fn new(command: &str, inputs: Value, records: Vec<RecordJson>, timestamp: bool) -> Self {
        let passed = records.iter().filter(|r| r.pass).count();
        let summary = Summary {
            total: records.len(),
            passed,
            failed: records.len() - passed,
        };
        Report {
            schema_version: SCHEMA_VERSION,
            tool: "srlab",
            tool_version: env!("CARGO_PKG_VERSION"),
            command: command.to_string(),
            generated_at_unix_ms: timestamp.then(|| {
                std::time::SystemTime::now()
                    .duration_since(std::time::UNIX_EPOCH)
                    .map(|d| d.as_millis())
                    .unwrap_or(0)
            }),
            inputs,
            records,
            summary,
            elapsed_ms: None,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn set_elapsed(&mut self, elapsed: std::time::Duration, timestamp: bool) {
        if timestamp {
            self.elapsed_ms = Some(elapsed.as_millis());
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Human-readable pass/fail lines.
    pub fn print_summary(&self) {
        for r in &self.records {
            let status = if r.pass { "PASS" } else { "FAIL" };
            let mut line = format!("{status} {}", r.name);
            if let Some(d) = &r.detail {
                line.push_str(&format!(" — {d}"));
            }
            if !r.flags.is_empty() {
                line.push_str(&format!(" [{}]", r.flags.join("; ")));
            }
            println!("{line}");
        }
        println!(
            "{}/{} checks passed ({} failed)",
            self.summary.passed, self.summary.total, self.summary.failed
        );
    }
}
