use std::path::Path;

use clap::ValueEnum;

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    /// A JSON array of numbers.
    JsonArray,
    /// One number per line; a non-numeric first line is taken as a header.
    CsvColumn,
}

pub fn read_values(path: &Path, format: InputFormat) -> Result<Vec<f64>, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    match format {
        InputFormat::JsonArray => parse_json(&text),
        InputFormat::CsvColumn => parse_csv(&text),
    }
}

pub fn parse_json(text: &str) -> Result<Vec<f64>, CliError> {
    serde_json::from_str(text)
        .map_err(|e| CliError::Input(format!("expected a JSON array of numbers: {e}")))
}

pub fn parse_csv(text: &str) -> Result<Vec<f64>, CliError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut values = Vec::new();
    for (line, record) in reader.records().enumerate() {
        let record = record.map_err(|e| CliError::Input(format!("csv: {e}")))?;
        if record.len() != 1 {
            return Err(CliError::Input(format!(
                "csv row {} has {} fields, expected 1",
                line + 1,
                record.len()
            )));
        }
        let field = &record[0];
        match field.parse::<f64>() {
            Ok(v) => values.push(v),
            Err(_) if line == 0 => continue,
            Err(_) => {
                return Err(CliError::Input(format!(
                    "csv row {}: {field:?} is not a number",
                    line + 1
                )))
            }
        }
    }
    Ok(values)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_array() {
        assert_eq!(parse_json("[1, -2.5, 3e2]").unwrap(), vec![1.0, -2.5, 300.0]);
        assert!(parse_json("{\"a\": 1}").is_err());
        assert!(parse_json("[1, \"x\"]").is_err());
    }

    #[test]
    fn csv_column_with_and_without_header() {
        assert_eq!(parse_csv("1\n2\n3\n4\n").unwrap(), vec![1.0, 2.0, 3.0, 4.0]);
        assert_eq!(parse_csv("amplitude\n 0.5\n-0.5 \n").unwrap(), vec![0.5, -0.5]);
        assert!(parse_csv("1\nfoo\n").is_err());
        assert!(parse_csv("1,2\n").is_err());
    }
}
