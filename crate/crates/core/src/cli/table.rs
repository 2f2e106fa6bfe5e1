//! The one CSV dialect every subcommand reads and writes.
//!
//! Comma separated, LF lines, `#` lines ignored, surrounding whitespace
//! trimmed. A first row whose leading field is not a number is a header.

use std::fmt::Write as _;

use super::CliError;

/// Parsed numeric table with optional header and `# key=value` metadata.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub header: Option<Vec<String>>,
    pub rows: Vec<Vec<f64>>,
    pub meta: Vec<(String, String)>,
}

impl Table {
    pub fn parse(text: &str, source: &str) -> Result<Self, CliError> {
        let meta = text
            .lines()
            .filter_map(|l| l.trim_start().strip_prefix('#'))
            .filter_map(|l| l.split_once('='))
            .map(|(k, v)| (k.trim().to_string(), v.trim().to_string()))
            .collect();

        let mut reader = csv::ReaderBuilder::new()
            .has_headers(false)
            .comment(Some(b'#'))
            .trim(csv::Trim::All)
            .flexible(true)
            .from_reader(text.as_bytes());

        let mut header = None;
        let mut rows = Vec::new();
        let mut width = None;
        for (i, record) in reader.records().enumerate() {
            let record = record.map_err(|e| CliError::input(format!("{source}: {e}")))?;
            let line = record.position().map_or(0, |p| p.line());
            if record.len() == 1 && record[0].is_empty() {
                continue;
            }
            if i == 0 && record.get(0).is_some_and(|f| f.parse::<f64>().is_err()) {
                header = Some(record.iter().map(str::to_string).collect::<Vec<_>>());
                width = Some(record.len());
                continue;
            }
            if let Some(w) = width {
                if record.len() != w {
                    return Err(CliError::input(format!(
                        "{source}: line {line}: expected {w} fields, found {}",
                        record.len()
                    )));
                }
            }
            width = Some(record.len());
            let row = record
                .iter()
                .enumerate()
                .map(|(c, f)| match f.parse::<f64>() {
                    Ok(v) if v.is_finite() => Ok(v),
                    _ => Err(CliError::input(format!(
                        "{source}: line {line}: field {} '{f}' is not a finite number",
                        c + 1
                    ))),
                })
                .collect::<Result<Vec<_>, _>>()?;
            rows.push(row);
        }
        Ok(Table { header, rows, meta })
    }

    pub fn width(&self) -> usize {
        self.rows.first().map(Vec::len).or_else(|| self.header.as_ref().map(Vec::len)).unwrap_or(0)
    }

    pub fn column(&self, c: usize) -> Vec<f64> {
        self.rows.iter().map(|r| r[c]).collect()
    }

    pub fn meta(&self, key: &str) -> Option<&str> {
        self.meta.iter().rev().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    /// The table's only column, or an error naming the source.
    pub fn single_column(&self, source: &str) -> Result<Vec<f64>, CliError> {
        match self.width() {
            1 => Ok(self.column(0)),
            0 => Err(CliError::input(format!("{source}: no data rows"))),
            w => Err(CliError::input(format!("{source}: expected one column, found {w}"))),
        }
    }
}

/// Shortest decimal that round-trips, switching to exponent form outside
/// `[1e-5, 1e16)`. Negative zero prints as `0`.
pub fn fmt_f64(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let a = x.abs();
    if (1e-5..1e16).contains(&a) {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

/// CSV text builder with fixed formatting.
#[derive(Debug, Default)]
pub struct Writer {
    buf: String,
}

impl Writer {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn comment(&mut self, text: &str) -> &mut Self {
        let _ = writeln!(self.buf, "# {text}");
        self
    }

    pub fn header(&mut self, names: &[&str]) -> &mut Self {
        self.buf.push_str(&names.join(","));
        self.buf.push('\n');
        self
    }

    pub fn row<I, S>(&mut self, fields: I) -> &mut Self
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut first = true;
        for f in fields {
            if !first {
                self.buf.push(',');
            }
            self.buf.push_str(f.as_ref());
            first = false;
        }
        self.buf.push('\n');
        self
    }

    pub fn nums(&mut self, values: &[f64]) -> &mut Self {
        self.row(values.iter().map(|&v| fmt_f64(v)))
    }

    pub fn finish(self) -> String {
        self.buf
    }
}
