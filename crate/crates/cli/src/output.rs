use serde::Serialize;
use wlpoly::partitions::Partition;
use wlpoly::polyalg::MPoly;

use crate::CliError;

/// One tabulated polynomial.
#[derive(Debug, Serialize)]
pub struct Row {
    pub partition: Partition,
    #[serde(rename = "F")]
    pub f: String,
    pub degree_vector: Vec<usize>,
    pub polynomial: MPoly,
}

impl Row {
    pub fn new(partition: Partition, polynomial: MPoly) -> Self {
        Row {
            f: partition.f_count().to_string(),
            degree_vector: partition.degree_vector().entries().to_vec(),
            partition,
            polynomial,
        }
    }

    fn degree_vector_text(&self) -> String {
        let inner: Vec<String> = self.degree_vector.iter().map(ToString::to_string).collect();
        format!("({})", inner.join(","))
    }
}

pub fn csv(rows: &[Row]) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let internal = |e: csv::Error| CliError::Internal(e.to_string());
    w.write_record(["partition", "F", "degree_vector", "polynomial"]).map_err(internal)?;
    for r in rows {
        w.write_record([
            r.partition.to_string(),
            r.f.clone(),
            r.degree_vector_text(),
            r.polynomial.to_string(),
        ])
        .map_err(internal)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Internal(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Internal(e.to_string()))
}

pub fn json(rows: &[Row]) -> String {
    serde_json::to_string(rows).expect("rows always serialize") + "\n"
}

pub fn latex(rows: &[Row]) -> String {
    let mut out = String::from("\\begin{tabular}{llll}\n\\hline\n");
    out.push_str("$\\lambda$ & $F_\\lambda$ & $n_\\lambda$ & polynomial \\\\\n\\hline\n");
    for r in rows {
        let lambda = if r.partition.is_empty() {
            "\\emptyset".to_string()
        } else {
            r.partition.to_string()
        };
        out.push_str(&format!(
            "${lambda}$ & {} & ${}$ & ${}$ \\\\\n",
            r.f,
            r.degree_vector_text(),
            r.polynomial.to_latex()
        ));
    }
    out.push_str("\\hline\n\\end{tabular}\n");
    out
}

pub fn human(rows: &[Row]) -> String {
    let width = rows.iter().map(|r| r.partition.to_string().chars().count()).max().unwrap_or(0);
    let mut out = String::new();
    for r in rows {
        let p = r.partition.to_string();
        let pad = width - p.chars().count();
        out.push_str(&format!(
            "{p}{}  F={}  n={}  {}\n",
            " ".repeat(pad),
            r.f,
            r.degree_vector_text(),
            r.polynomial
        ));
    }
    out
}
