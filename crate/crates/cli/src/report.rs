//! Command results in human and structured form.

use std::time::Duration;

use mgbracket::{Counters, LaurentPoly, Monomial, VarSym};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub struct InputDigest {
    pub name: String,
    pub sha256: String,
}

impl InputDigest {
    pub fn of(name: &str, contents: &str) -> Self {
        InputDigest {
            name: name.to_string(),
            sha256: hex::encode(Sha256::digest(contents.as_bytes())),
        }
    }
}

/// A named field of the report: either a polynomial or plain text.
#[derive(Debug, Clone, PartialEq)]
pub enum Field {
    Poly(LaurentPoly),
    Text(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunReport {
    pub command: String,
    pub inputs: Vec<InputDigest>,
    pub engine: Option<String>,
    pub result: Option<LaurentPoly>,
    pub fields: Vec<(String, Field)>,
    pub counters: Counters,
    pub wall: Duration,
}

impl RunReport {
    pub fn new(command: &str) -> Self {
        RunReport {
            command: command.to_string(),
            inputs: Vec::new(),
            engine: None,
            result: None,
            fields: Vec::new(),
            counters: Counters::default(),
            wall: Duration::ZERO,
        }
    }

    pub fn poly(&mut self, name: &str, p: LaurentPoly) {
        self.fields.push((name.to_string(), Field::Poly(p)));
    }

    pub fn text(&mut self, name: &str, s: impl Into<String>) {
        self.fields.push((name.to_string(), Field::Text(s.into())));
    }

    pub fn field(&self, name: &str) -> Option<&Field> {
        self.fields.iter().find(|(n, _)| n == name).map(|(_, f)| f)
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Text => self.to_text(),
            OutputFormat::Json => {
                serde_json::to_string_pretty(&self.to_json()).expect("serializable") + "\n"
            }
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (name, f) in &self.fields {
            match f {
                Field::Poly(p) => out.push_str(&format!("{name}: {p}\n")),
                Field::Text(s) => out.push_str(&format!("{name}: {s}\n")),
            }
        }
        if let Some(r) = &self.result {
            out.push_str(&format!("{r}\n"));
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let fields: Map<String, Value> = self
            .fields
            .iter()
            .map(|(n, f)| {
                let v = match f {
                    Field::Poly(p) => poly_to_json(p),
                    Field::Text(s) => Value::String(s.clone()),
                };
                (n.clone(), v)
            })
            .collect();
        json!({
            "command": self.command,
            "inputs": self.inputs.iter().map(|d| json!({"name": d.name, "sha256": d.sha256})).collect::<Vec<_>>(),
            "engine": self.engine,
            "result": self.result.as_ref().map(poly_to_json),
            "fields": fields,
            "counters": {
                "subsets": self.counters.subsets,
                "recursion_nodes": self.counters.recursion_nodes,
                "reductions": self.counters.reductions,
            },
            "wall_ms": self.wall.as_secs_f64() * 1000.0,
        })
    }
}

/// `{"text": ..., "terms": [{"coefficient": "<int>", "exponents": {var: exp}}]}`.
pub fn poly_to_json(p: &LaurentPoly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(m, c)| {
            let exps: Map<String, Value> = m
                .factors()
                .map(|(v, e)| (v.as_str().to_string(), json!(e)))
                .collect();
            json!({"coefficient": c.to_string(), "exponents": exps})
        })
        .collect();
    json!({"text": p.to_string(), "terms": terms})
}

pub fn poly_from_json(v: &Value) -> Option<LaurentPoly> {
    let mut out = LaurentPoly::zero();
    for t in v.get("terms")?.as_array()? {
        let c: BigInt = t.get("coefficient")?.as_str()?.parse().ok()?;
        let mut m = Monomial::one();
        for (name, e) in t.get("exponents")?.as_object()? {
            let e = i32::try_from(e.as_i64()?).ok()?;
            m = m.mul(&Monomial::var(VarSym::new(name).ok()?, e));
        }
        out.add_term(c, m);
    }
    Some(out)
}
