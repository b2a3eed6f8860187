//! Long-format CSV input and output, and the policy dummy.

use crate::error::{CliError, Result};
use panelbreak_core::Panel;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::io::{Read, Write};
use std::path::Path;

pub const HEADER: [&str; 4] = ["entity", "year", "variable", "value"];

/// Reads `entity,year,variable,value` rows and pivots them into a panel
/// whose variables are the mapping's targets, in their order of first
/// appearance in `order`. Empty values are missing cells.
pub fn parse_long_csv(path: &Path, mapping: &BTreeMap<String, String>, order: &[&str]) -> Result<Panel> {
    let file = std::fs::File::open(path).map_err(|e| CliError::io(path, e))?;
    parse_long_reader(file, mapping, order)
}

pub fn parse_long_reader<R: Read>(reader: R, mapping: &BTreeMap<String, String>, order: &[&str]) -> Result<Panel> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(reader);
    let header = rdr.headers().map_err(|e| malformed(1, e.to_string()))?.clone();
    if header.iter().collect::<Vec<_>>() != HEADER {
        return Err(malformed(1, format!("header must be `{}`", HEADER.join(","))));
    }
    let var_index: HashMap<&str, usize> = order.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    let mut cells: HashMap<(String, i32, usize), (u64, Option<f64>)> = HashMap::new();
    let mut entities = BTreeSet::new();
    let mut years = BTreeSet::new();
    let mut seen_vars = BTreeSet::new();
    for rec in rdr.records() {
        let rec = rec.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line());
            malformed(line, e.to_string())
        })?;
        let line = rec.position().map_or(0, |p| p.line());
        if rec.len() != 4 {
            return Err(malformed(line, format!("expected 4 fields, found {}", rec.len())));
        }
        let entity = rec[0].to_string();
        if entity.is_empty() {
            return Err(malformed(line, "empty entity".into()));
        }
        let year: i32 = rec[1]
            .parse()
            .map_err(|_| malformed(line, format!("year `{}` is not an integer", &rec[1])))?;
        let target = mapping
            .get(&rec[2])
            .ok_or_else(|| CliError::UnmappedVariable(rec[2].to_string()))?;
        let v = *var_index
            .get(target.as_str())
            .ok_or_else(|| CliError::UnmappedVariable(target.clone()))?;
        let value = if rec[3].is_empty() {
            None
        } else {
            let x: f64 = rec[3]
                .parse()
                .map_err(|_| malformed(line, format!("value `{}` is not a number", &rec[3])))?;
            if !x.is_finite() {
                return Err(malformed(line, format!("value `{}` is not finite", &rec[3])));
            }
            Some(x)
        };
        let key = (entity.clone(), year, v);
        if cells.contains_key(&key) {
            return Err(CliError::DuplicateObservation {
                line,
                entity,
                year,
                variable: rec[2].to_string(),
            });
        }
        cells.insert(key, (line, value));
        entities.insert(entity);
        years.insert(year);
        seen_vars.insert(v);
    }
    if let Some(missing) = (0..order.len()).find(|v| !seen_vars.contains(v)) {
        return Err(CliError::Config(format!("input has no rows for variable `{}`", order[missing])));
    }
    let (first, last) = match (years.first(), years.last()) {
        (Some(&a), Some(&b)) => (a, b),
        _ => return Err(malformed(2, "no data rows".into())),
    };
    let entities: Vec<String> = entities.into_iter().collect();
    let n_years = (last - first + 1) as usize;
    let variables = order.iter().map(|s| s.to_string()).collect();
    let panel = Panel::from_fn(entities.clone(), first, n_years, variables, |e, t, v| {
        cells
            .get(&(entities[e].clone(), first + t as i32, v))
            .and_then(|(_, x)| *x)
    })?;
    Ok(panel)
}

fn malformed(line: u64, reason: String) -> CliError {
    CliError::MalformedRow { line, reason }
}

/// Writes every cell of `variables` in long format; missing cells get an
/// empty value. Numbers use the shortest representation that reads back
/// to the same value.
pub fn write_long_csv<W: Write>(p: &Panel, variables: &[&str], out: W) -> Result<()> {
    let idx = variables
        .iter()
        .map(|v| p.var_index(v))
        .collect::<panelbreak_core::Result<Vec<_>>>()?;
    let mut w = csv::Writer::from_writer(out);
    let io = |e: csv::Error| CliError::io("<csv output>", std::io::Error::other(e));
    w.write_record(HEADER).map_err(io)?;
    for (e, entity) in p.entities().iter().enumerate() {
        for t in 0..p.n_years() {
            let year = p.year(t).to_string();
            for (&v, name) in idx.iter().zip(variables) {
                let value = p.value(e, t, v).map(|x| x.to_string()).unwrap_or_default();
                w.write_record([entity.as_str(), &year, name, &value]).map_err(io)?;
            }
        }
    }
    w.flush().map_err(|e| CliError::io("<csv output>", e))?;
    Ok(())
}

/// Adds `name` equal to 1 from `threshold` onwards and 0 before.
pub fn build_policy_dummy(p: &Panel, name: &str, threshold: i32) -> Result<Panel> {
    let (first, last) = (p.first_year(), p.last_year());
    if threshold < first || threshold > last {
        return Err(CliError::ThresholdOutOfRange { threshold, first, last });
    }
    Ok(p.with_variable(name, |_, t| Some(if p.year(t) >= threshold { 1.0 } else { 0.0 })))
}

#[cfg(test)]
mod tests {
    use super::*;
    use panelbreak_core::synth::{generate, DgpKind, DgpSpec, VARIABLES};

    fn identity() -> BTreeMap<String, String> {
        VARIABLES.iter().map(|v| (v.to_string(), v.to_string())).collect()
    }

    fn small_csv() -> String {
        let mut s = String::from("entity,year,variable,value\n");
        for e in ["AAA", "BBB"] {
            for y in 2000..2003 {
                for (i, v) in VARIABLES.iter().enumerate() {
                    s.push_str(&format!("{e},{y},{v},{}\n", y as f64 + i as f64 / 10.0));
                }
            }
        }
        s
    }

    #[test]
    fn complete_panel_round_trips() {
        let p = parse_long_reader(small_csv().as_bytes(), &identity(), &VARIABLES).unwrap();
        assert!(p.is_complete());
        assert_eq!(p.entities(), ["AAA", "BBB"]);
        assert_eq!((p.first_year(), p.n_years()), (2000, 3));
        assert_eq!(p.get("BBB", 2001, "gdp"), Some(2001.2));
    }

    #[test]
    fn duplicate_row_names_its_line() {
        let text = small_csv() + "AAA,2001,gdp,5\n";
        match parse_long_reader(text.as_bytes(), &identity(), &VARIABLES) {
            Err(CliError::DuplicateObservation { line, entity, year, .. }) => {
                assert_eq!((line, entity.as_str(), year), (26, "AAA", 2001));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn error_paths() {
        let bad_header = "country,year,variable,value\nA,2000,co2,1\n";
        assert!(matches!(
            parse_long_reader(bad_header.as_bytes(), &identity(), &VARIABLES),
            Err(CliError::MalformedRow { line: 1, .. })
        ));
        let bad_year = small_csv() + "AAA,20x1,gdp,5\n";
        assert!(matches!(
            parse_long_reader(bad_year.as_bytes(), &identity(), &VARIABLES),
            Err(CliError::MalformedRow { line: 26, .. })
        ));
        let unmapped = small_csv() + "AAA,2001,trade,5\n";
        assert!(matches!(
            parse_long_reader(unmapped.as_bytes(), &identity(), &VARIABLES),
            Err(CliError::UnmappedVariable(v)) if v == "trade"
        ));
    }

    #[test]
    fn empty_values_are_missing_and_mapping_renames() {
        let text = small_csv().replace("AAA,2001,gdp,2001.2", "AAA,2001,gdp,").replace(",co2,", ",CO2E,");
        let mut map = identity();
        map.remove("co2");
        map.insert("CO2E".into(), "co2".into());
        let p = parse_long_reader(text.as_bytes(), &map, &VARIABLES).unwrap();
        assert_eq!(p.get("AAA", 2001, "gdp"), None);
        assert_eq!(p.get("AAA", 2001, "co2"), Some(2001.0));
    }

    #[test]
    fn synthetic_panel_round_trips_exactly() {
        let p = generate(&DgpSpec::new(DgpKind::VecmCalibrated, 5, 20, 4)).unwrap();
        let mut buf = Vec::new();
        write_long_csv(&p, &VARIABLES, &mut buf).unwrap();
        let q = parse_long_reader(buf.as_slice(), &identity(), &VARIABLES).unwrap();
        assert_eq!(q.entities(), p.entities());
        for v in VARIABLES {
            let (a, b) = (p.var_index(v).unwrap(), q.var_index(v).unwrap());
            for e in 0..p.n_entities() {
                for t in 0..p.n_years() {
                    let (x, y) = (p.value(e, t, a).unwrap(), q.value(e, t, b).unwrap());
                    assert!((x - y).abs() <= 1e-12 * x.abs().max(1.0));
                }
            }
        }
    }

    #[test]
    fn policy_dummy() {
        let p = parse_long_reader(small_csv().as_bytes(), &identity(), &VARIABLES).unwrap();
        let p = p.select_years(2000, 2002).unwrap();
        let d = build_policy_dummy(&p, "d", 2001).unwrap();
        let v = d.var_index("d").unwrap();
        assert_eq!((0..3).map(|t| d.value(1, t, v).unwrap()).collect::<Vec<_>>(), [0.0, 1.0, 1.0]);
        let all = build_policy_dummy(&p, "d", 2000).unwrap();
        assert!((0..3).all(|t| all.value(0, t, v).unwrap() == 1.0));
        assert!(matches!(
            build_policy_dummy(&p, "d", 2003),
            Err(CliError::ThresholdOutOfRange { threshold: 2003, .. })
        ));
    }

    #[test]
    fn dummy_matches_definition_years() {
        let text: String = std::iter::once("entity,year,variable,value\n".to_string())
            .chain((2013..=2017).flat_map(|y| VARIABLES.iter().map(move |v| format!("A,{y},{v},1\n"))))
            .collect();
        let p = parse_long_reader(text.as_bytes(), &identity(), &VARIABLES).unwrap();
        let d = build_policy_dummy(&p, "paris_2015", 2015).unwrap();
        let v = d.var_index("paris_2015").unwrap();
        let got: Vec<f64> = (0..5).map(|t| d.value(0, t, v).unwrap()).collect();
        assert_eq!(got, [0.0, 0.0, 1.0, 1.0, 1.0]);
    }
}
