//! Observation files and output writers.

use std::path::Path;

use fracgrow_core::ObservationSeries;

use crate::error::CliError;

/// Reads a `month,length` CSV with a mandatory header row. Blank lines and
/// lines starting with `#` are skipped.
pub fn load_observations(path: &Path) -> Result<ObservationSeries<f64>, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    parse_observations(&text).map_err(|e| match e {
        CliError::Input(msg) => CliError::Input(format!("{}: {msg}", path.display())),
        other => other,
    })
}

pub fn parse_observations(text: &str) -> Result<ObservationSeries<f64>, CliError> {
    let err = |line: usize, msg: String| CliError::Input(format!("line {line}: {msg}"));
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines
        .next()
        .ok_or_else(|| CliError::Input("empty observation file".into()))?;
    let cols: Vec<String> = header
        .split(',')
        .map(|c| c.trim().to_ascii_lowercase())
        .collect();
    if cols != ["month", "length"] {
        return Err(err(
            hline,
            format!("expected header 'month,length', found '{header}'"),
        ));
    }

    let mut points = Vec::new();
    let mut prev: Option<u32> = None;
    for (n, line) in lines {
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if fields.len() != 2 {
            return Err(err(n, format!("expected 2 fields, found {}", fields.len())));
        }
        let month: u32 = fields[0].parse().map_err(|_| {
            err(
                n,
                format!("month '{}' is not a positive integer", fields[0]),
            )
        })?;
        let length: f64 = fields[1]
            .parse()
            .map_err(|_| err(n, format!("length '{}' is not a number", fields[1])))?;
        if month == 0 {
            return Err(err(n, "months must be positive".into()));
        }
        if !(length > 0.0 && length.is_finite()) {
            return Err(err(n, format!("lengths must be positive, got {length}")));
        }
        if let Some(p) = prev {
            if month == p {
                return Err(err(n, format!("duplicate month {month}")));
            }
            if month < p {
                return Err(err(
                    n,
                    format!("months must be strictly increasing ({month} after {p})"),
                ));
            }
        }
        prev = Some(month);
        points.push((month, length));
    }
    if points.is_empty() {
        return Err(CliError::Input(
            "no observation rows after the header".into(),
        ));
    }
    Ok(ObservationSeries::new(points)?)
}

pub fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents)
        .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))
}
