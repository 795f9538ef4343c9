//! Reports shared by the table and JSON renderers.

use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::qalg::{LaurentPoly, Rat, RatFunc};
use crate::quiver::parse_rat;

#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    Text(String),
    Poly(RatFunc),
    Flag(bool),
    Int(i64),
    Rational(Rat),
}

impl Cell {
    pub fn laurent(p: &LaurentPoly) -> Self {
        Cell::Poly(RatFunc::from(p.clone()))
    }

    fn to_json(&self) -> Value {
        match self {
            Cell::Text(s) => Value::String(s.clone()),
            Cell::Poly(f) => ratfunc_to_json(f),
            Cell::Flag(b) => Value::Bool(*b),
            Cell::Int(n) => json!(n),
            Cell::Rational(r) => Value::String(r.to_string()),
        }
    }

    fn render(&self) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Poly(f) => match f.as_laurent() {
                Some(p) => p.to_string(),
                None => f.to_string(),
            },
            Cell::Flag(true) => "yes".into(),
            Cell::Flag(false) => "no".into(),
            Cell::Int(n) => n.to_string(),
            Cell::Rational(r) => r.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Table {
    pub title: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(title: &str, columns: &[&str]) -> Self {
        Self {
            title: title.into(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

/// A verdict; only asserted checks decide the exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub asserted: bool,
    pub detail: String,
}

impl Check {
    pub fn asserted(name: &str, passed: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            passed,
            asserted: true,
            detail: detail.into(),
        }
    }

    pub fn reported(name: &str, passed: bool, detail: impl Into<String>) -> Self {
        Self {
            asserted: false,
            ..Self::asserted(name, passed, detail)
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub command: String,
    pub arrow_matrix: Vec<Vec<u32>>,
    pub max_degree: u32,
    pub tables: Vec<Table>,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn failed(&self) -> bool {
        self.checks.iter().any(|c| c.asserted && !c.passed)
    }

    pub fn status(&self) -> &'static str {
        if self.failed() {
            "assertion failure"
        } else {
            "ok"
        }
    }

    pub fn to_json(&self) -> Value {
        let tables: Vec<Value> = self
            .tables
            .iter()
            .map(|t| {
                json!({
                    "title": t.title,
                    "columns": t.columns,
                    "rows": t.rows.iter()
                        .map(|r| r.iter().map(Cell::to_json).collect::<Vec<_>>())
                        .collect::<Vec<_>>(),
                })
            })
            .collect();
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| json!({"name": c.name, "passed": c.passed, "asserted": c.asserted, "detail": c.detail}))
            .collect();
        json!({
            "command": self.command,
            "quiver": {"vertices": self.arrow_matrix.len(), "arrow_matrix": self.arrow_matrix},
            "max_degree": self.max_degree,
            "tables": tables,
            "checks": checks,
            "notes": self.notes,
            "status": self.status(),
        })
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{}: {} {}, arrows {:?}, max degree {}",
            self.command,
            self.arrow_matrix.len(),
            if self.arrow_matrix.len() == 1 { "vertex" } else { "vertices" },
            self.arrow_matrix,
            self.max_degree
        );
        for t in &self.tables {
            let _ = writeln!(out, "\n{}", t.title);
            let cells: Vec<Vec<String>> = t.rows.iter().map(|r| r.iter().map(Cell::render).collect()).collect();
            let widths: Vec<usize> = (0..t.columns.len())
                .map(|i| {
                    cells
                        .iter()
                        .map(|r| r[i].chars().count())
                        .chain([t.columns[i].chars().count()])
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            let line = |row: &[String]| {
                let padded: Vec<String> = row
                    .iter()
                    .zip(&widths)
                    .map(|(c, &w)| format!("{c:<w$}"))
                    .collect();
                padded.join("  ").trim_end().to_string()
            };
            let _ = writeln!(out, "{}", line(&t.columns));
            for r in &cells {
                let _ = writeln!(out, "{}", line(r));
            }
        }
        if !self.checks.is_empty() {
            let _ = writeln!(out, "\nchecks");
            for c in &self.checks {
                let verdict = if c.passed { "pass" } else { "FAIL" };
                let kind = if c.asserted { "asserted" } else { "reported" };
                let _ = write!(out, "  [{verdict}] {} ({kind})", c.name);
                if !c.detail.is_empty() {
                    let _ = write!(out, ": {}", c.detail);
                }
                out.push('\n');
            }
        }
        for n in &self.notes {
            let _ = writeln!(out, "note: {n}");
        }
        let _ = writeln!(out, "status: {}", self.status());
        out
    }
}

/// `{"variable": "q^(1/2)", "terms": [[exp, "coeff"], ...]}`, ascending.
pub fn laurent_to_json(p: &LaurentPoly) -> Value {
    let terms: Vec<Value> = p.terms().map(|(e, c)| json!([e, c.to_string()])).collect();
    json!({"variable": "q^(1/2)", "terms": terms})
}

/// Laurent polynomials as above; other rational functions as a
/// numerator/denominator pair.
pub fn ratfunc_to_json(f: &RatFunc) -> Value {
    match f.as_laurent() {
        Some(p) => laurent_to_json(p),
        None => json!({"numerator": laurent_to_json(f.num()), "denominator": laurent_to_json(f.den())}),
    }
}

pub fn laurent_from_json(v: &Value) -> Result<LaurentPoly> {
    let bad = |what: &str| Error::Invalid(format!("polynomial JSON: {what}"));
    if v.get("variable").and_then(Value::as_str) != Some("q^(1/2)") {
        return Err(bad("variable must be \"q^(1/2)\""));
    }
    let terms = v.get("terms").and_then(Value::as_array).ok_or_else(|| bad("missing terms"))?;
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        let pair = t.as_array().filter(|a| a.len() == 2).ok_or_else(|| bad("term is not a pair"))?;
        let e = pair[0].as_i64().ok_or_else(|| bad("exponent is not an integer"))?;
        let c = pair[1].as_str().ok_or_else(|| bad("coefficient is not a string"))?;
        out.push((e, parse_rat(c)?));
    }
    Ok(LaurentPoly::from_terms(out))
}

pub fn ratfunc_from_json(v: &Value) -> Result<RatFunc> {
    match (v.get("numerator"), v.get("denominator")) {
        (Some(n), Some(d)) => RatFunc::new(laurent_from_json(n)?, laurent_from_json(d)?),
        _ => Ok(RatFunc::from(laurent_from_json(v)?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let p = LaurentPoly::from_terms([
            (-3, Rat::new((-2).into(), 3.into())),
            (4, Rat::from_integer(7.into())),
        ]);
        let v = laurent_to_json(&p);
        assert_eq!(v["terms"][0], json!([-3, "-2/3"]));
        assert_eq!(laurent_from_json(&v).unwrap(), p);
        let f = RatFunc::new(LaurentPoly::one(), LaurentPoly::from_int_terms(&[(0, 1), (2, -1)])).unwrap();
        assert_eq!(ratfunc_from_json(&ratfunc_to_json(&f)).unwrap(), f);
    }

    #[test]
    fn failing_asserted_check_sets_status() {
        let mut r = Report {
            command: "dt".into(),
            arrow_matrix: vec![vec![1]],
            max_degree: 1,
            tables: vec![],
            checks: vec![Check::reported("x", false, "")],
            notes: vec![],
        };
        assert!(!r.failed());
        r.checks.push(Check::asserted("y", false, "bad"));
        assert!(r.failed());
        assert!(r.to_table().contains("[FAIL] y (asserted): bad"));
    }
}
