use std::fmt::Write as _;
use std::str::FromStr;

use eulerforge_core::algebra::{ExactScalar, Var};
use serde_json::json;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        <Format as clap::ValueEnum>::from_str(s, true)
    }
}

/// Rows of exact entries, optionally labelled.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Table {
    pub rows: Vec<Vec<ExactScalar>>,
    pub labels: Vec<String>,
}

impl Table {
    pub fn new(rows: Vec<Vec<ExactScalar>>) -> Self {
        Table { rows, labels: Vec::new() }
    }

    pub fn labelled(rows: Vec<(String, Vec<ExactScalar>)>) -> Self {
        let (labels, rows) = rows.into_iter().unzip();
        Table { rows, labels }
    }

    pub fn vars(&self) -> Vec<Var> {
        let mut vars: Vec<Var> = self.rows.iter().flatten().flat_map(ExactScalar::variables).collect();
        vars.sort();
        vars.dedup();
        vars
    }

    fn cells(&self) -> Vec<Vec<String>> {
        self.rows.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect()
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Table => self.render_table(),
            Format::Csv => self.render_csv(),
            Format::Json => self.render_json(),
        }
    }

    /// Right-aligned columns.
    fn render_table(&self) -> String {
        let cells = self.cells();
        let columns = cells.iter().map(Vec::len).max().unwrap_or(0);
        let widths: Vec<usize> = (0..columns)
            .map(|k| cells.iter().filter_map(|r| r.get(k)).map(String::len).max().unwrap_or(0))
            .collect();
        let label_width = self.labels.iter().map(String::len).max().unwrap_or(0);
        let mut out = String::new();
        for (i, row) in cells.iter().enumerate() {
            let mut line = String::new();
            if let Some(label) = self.labels.get(i) {
                let _ = write!(line, "{label:<label_width$} |");
            }
            for (k, c) in row.iter().enumerate() {
                if k > 0 || !line.is_empty() {
                    line.push_str("  ");
                }
                let _ = write!(line, "{c:>w$}", w = widths[k]);
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }

    fn render_csv(&self) -> String {
        let mut out = String::new();
        for (i, row) in self.cells().into_iter().enumerate() {
            let mut fields = row;
            if let Some(label) = self.labels.get(i) {
                fields.insert(0, label.clone());
            }
            out.push_str(&fields.join(","));
            out.push('\n');
        }
        out
    }

    fn render_json(&self) -> String {
        let vars: Vec<String> = self.vars().iter().map(|v| v.symbol().to_string()).collect();
        let mut value = json!({ "rows": self.cells(), "depth": self.rows.len(), "vars": vars });
        if !self.labels.is_empty() {
            value["labels"] = json!(self.labels);
        }
        let mut s = serde_json::to_string_pretty(&value).expect("json value serializes");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Table {
        let e = |s: &str| s.parse::<ExactScalar>().unwrap();
        Table::new(vec![vec![e("1")], vec![e("-r+1"), e("r")], vec![e("1"), e("12"), e("y^2")]])
    }

    #[test]
    fn formats() {
        let t = sample();
        assert_eq!(t.render(Format::Table), "   1\n-r+1   r\n   1  12  y^2\n");
        assert_eq!(t.render(Format::Csv), "1\n-r+1,r\n1,12,y^2\n");
        let v: serde_json::Value = serde_json::from_str(&t.render(Format::Json)).unwrap();
        assert_eq!(v["depth"], 3);
        assert_eq!(v["vars"], json!(["r", "y"]));
        assert_eq!(v["rows"][1], json!(["-r+1", "r"]));
    }

    #[test]
    fn labelled_rows() {
        let t = Table::labelled(vec![("b".into(), vec![ExactScalar::int(1)]), ("lambda".into(), vec![])]);
        assert_eq!(t.render(Format::Table), "b      |  1\nlambda |\n");
        assert_eq!(t.render(Format::Csv), "b,1\nlambda\n");
    }
}
