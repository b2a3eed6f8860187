//! Table model shared by all artifacts and its csv, markdown and json renderings.

use crate::error::{CliError, Result};
use panelbreak_core::report::fmt_df;
use serde_json::{json, Value};
use std::path::Path;

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Text(String),
    /// Statistic, coefficient or probability: 4 decimals.
    Num(f64),
    /// t-ratio: 4 decimals in brackets.
    T(f64),
    Int(i64),
    /// Degrees of freedom: integer or one decimal.
    Df(f64),
    /// F degrees of freedom pair, printed `(df1, df2)`.
    DfPair(f64, f64),
}

pub fn text(s: impl Into<String>) -> Cell {
    Cell::Text(s.into())
}

/// Fixed 4-decimal rendering; negative zero prints as zero and NaN as `NA`.
pub fn fmt4(x: f64) -> String {
    if x.is_nan() {
        return "NA".into();
    }
    let s = format!("{x:.4}");
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        s.trim_start_matches('-').to_string()
    } else {
        s
    }
}

impl Cell {
    pub fn render(&self) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Num(x) => fmt4(*x),
            Cell::T(x) => format!("[{}]", fmt4(*x)),
            Cell::Int(i) => i.to_string(),
            Cell::Df(d) => fmt_df(*d),
            Cell::DfPair(a, b) => format!("({}, {})", fmt_df(*a), fmt_df(*b)),
        }
    }

    fn json(&self) -> Value {
        let num = |x: f64| if x.is_finite() { json!(x) } else { Value::Null };
        match self {
            Cell::Text(s) => json!(s),
            Cell::Num(x) | Cell::T(x) | Cell::Df(x) => num(*x),
            Cell::Int(i) => json!(i),
            Cell::DfPair(a, b) => json!([num(*a), num(*b)]),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Section {
    pub title: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Section {
    pub fn new(title: impl Into<String>, columns: &[&str]) -> Self {
        Self {
            title: title.into(),
            columns: columns.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len(), "row width in `{}`", self.title);
        self.rows.push(row);
    }
}

/// One emitted table or plot-data file.
#[derive(Debug, Clone, PartialEq)]
pub struct Artifact {
    pub id: String,
    pub title: String,
    /// Ordered `(key, value)` header lines: version, hashes, settings, context.
    pub meta: Vec<(String, String)>,
    pub sections: Vec<Section>,
    pub notes: Vec<String>,
}

impl Artifact {
    pub fn new(id: &str, title: &str) -> Self {
        Self {
            id: id.into(),
            title: title.into(),
            meta: Vec::new(),
            sections: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn section(&self, title: &str) -> Option<&Section> {
        self.sections.iter().find(|s| s.title == title)
    }
}

pub fn to_csv(a: &Artifact) -> String {
    let mut out = String::new();
    out.push_str(&format!("# {}\n", a.title));
    for (k, v) in &a.meta {
        out.push_str(&format!("# {k}: {v}\n"));
    }
    for n in &a.notes {
        out.push_str(&format!("# note: {n}\n"));
    }
    for s in &a.sections {
        out.push_str(&format!("# section: {}\n", s.title));
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
        w.write_record(&s.columns).expect("in-memory write");
        for row in &s.rows {
            w.write_record(row.iter().map(Cell::render)).expect("in-memory write");
        }
        out.push_str(&String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 cells"));
        out.push('\n');
    }
    out
}

fn md_escape(s: &str) -> String {
    s.replace('|', "\\|")
}

pub fn to_markdown(a: &Artifact) -> String {
    let mut out = format!("# {}\n\n", a.title);
    for (k, v) in &a.meta {
        out.push_str(&format!("- {k}: {}\n", md_escape(v)));
    }
    for s in &a.sections {
        out.push_str(&format!("\n## {}\n\n", s.title));
        out.push_str(&format!("| {} |\n", s.columns.iter().map(|c| md_escape(c)).collect::<Vec<_>>().join(" | ")));
        out.push_str(&format!("|{}\n", "---|".repeat(s.columns.len())));
        for row in &s.rows {
            let cells: Vec<String> = row.iter().map(|c| md_escape(&c.render())).collect();
            out.push_str(&format!("| {} |\n", cells.join(" | ")));
        }
    }
    if !a.notes.is_empty() {
        out.push('\n');
        for n in &a.notes {
            out.push_str(&format!("Note: {n}\n"));
        }
    }
    out
}

pub fn to_json_value(a: &Artifact) -> Value {
    let meta: serde_json::Map<String, Value> = a.meta.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
    let sections: Vec<Value> = a
        .sections
        .iter()
        .map(|s| {
            json!({
                "title": s.title,
                "columns": s.columns,
                "rows": s.rows.iter().map(|r| r.iter().map(Cell::json).collect::<Vec<_>>()).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "artifact": a.id,
        "title": a.title,
        "meta": meta,
        "notes": a.notes,
        "sections": sections,
    })
}

pub fn to_json(a: &Artifact) -> String {
    let mut s = serde_json::to_string_pretty(&to_json_value(a)).expect("json values serialize");
    s.push('\n');
    s
}

pub fn extension(format: &str) -> &'static str {
    match format {
        "csv" => "csv",
        "markdown" => "md",
        _ => "json",
    }
}

pub fn render(a: &Artifact, format: &str) -> String {
    match format {
        "csv" => to_csv(a),
        "markdown" => to_markdown(a),
        _ => to_json(a),
    }
}

/// Writes one file per format, `<dir>/<id>.<ext>`.
pub fn write_artifact(dir: &Path, a: &Artifact, formats: &[String]) -> Result<()> {
    for f in formats {
        let path = dir.join(format!("{}.{}", a.id, extension(f)));
        std::fs::write(&path, render(a, f)).map_err(|e| CliError::io(&path, e))?;
    }
    Ok(())
}

/// Sections of a rendered csv artifact: `(title, columns, rows)`.
pub fn parse_csv(text: &str) -> Vec<(String, Vec<String>, Vec<Vec<String>>)> {
    let mut out: Vec<(String, Vec<String>, Vec<Vec<String>>)> = Vec::new();
    let mut block = String::new();
    let mut title = None;
    let mut flush = |title: &mut Option<String>, block: &mut String| {
        if let Some(t) = title.take() {
            let mut r = csv::ReaderBuilder::new().has_headers(true).from_reader(block.as_bytes());
            let cols = r.headers().map(|h| h.iter().map(String::from).collect()).unwrap_or_default();
            let rows = r
                .records()
                .filter_map(|x| x.ok())
                .map(|x| x.iter().map(String::from).collect())
                .collect();
            out.push((t, cols, rows));
        }
        block.clear();
    };
    for line in text.lines() {
        if let Some(t) = line.strip_prefix("# section: ") {
            flush(&mut title, &mut block);
            title = Some(t.to_string());
        } else if !line.starts_with('#') && !line.is_empty() {
            block.push_str(line);
            block.push('\n');
        }
    }
    flush(&mut title, &mut block);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Artifact {
        let mut a = Artifact::new("t", "Sample");
        a.meta.push(("version".into(), "x".into()));
        let mut s = Section::new("main", &["Name", "Value", "t", "df", "F df"]);
        s.push(vec![text("a,b"), Cell::Num(1.234_56), Cell::T(-12.559_63), Cell::Df(16.0), Cell::DfPair(16.0, 11_099.63)]);
        s.push(vec![text("b"), Cell::Num(-0.000_01), Cell::T(0.5), Cell::Df(2.5), Cell::DfPair(1.0, 2.0)]);
        a.sections.push(s);
        a
    }

    #[test]
    fn formatting() {
        assert_eq!(fmt4(0.957_56), "0.9576");
        assert_eq!(fmt4(-0.000_01), "0.0000");
        assert_eq!(fmt4(f64::NAN), "NA");
        assert_eq!(Cell::T(-12.559_63).render(), "[-12.5596]");
        assert_eq!(Cell::DfPair(16.0, 11_099.63).render(), "(16, 11099.6)");
    }

    #[test]
    fn json_csv_round_trip_matches_four_decimals() {
        let a = sample();
        let parsed = parse_csv(&to_csv(&a));
        let json = to_json_value(&a);
        assert_eq!(parsed.len(), 1);
        let (title, cols, rows) = &parsed[0];
        assert_eq!(title, "main");
        assert_eq!(cols, &a.sections[0].columns);
        for (r, row) in rows.iter().enumerate() {
            let v = &json["sections"][0]["rows"][r][1];
            assert_eq!(row[1], fmt4(v.as_f64().unwrap()));
            assert_eq!(row[1].parse::<f64>().unwrap(), (v.as_f64().unwrap() * 1e4).round() / 1e4 + 0.0);
        }
        assert_eq!(rows[0][0], "a,b");
    }

    #[test]
    fn markdown_layout() {
        let md = to_markdown(&sample());
        assert!(md.contains("| Name | Value | t | df | F df |"));
        assert!(md.contains("| a,b | 1.2346 | [-12.5596] | 16 | (16, 11099.6) |"));
    }
}
