//! Result rendering: per-degree computation reports and degree-2 reports
//! in human table, JSON and CSV form.

use serde::Serialize;

use quadlie::cohomology::{BettiTable, CochainComplex};

use crate::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Table,
    Json,
    Csv,
}

impl std::str::FromStr for OutputFormat {
    type Err = CliError;
    fn from_str(s: &str) -> CliResult<Self> {
        match s {
            "table" => Ok(OutputFormat::Table),
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            other => Err(CliError::Input(format!("unknown format {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DegreeRow {
    pub degree: usize,
    pub space_dim: usize,
    pub rank: usize,
    pub kernel_dim: usize,
    pub betti: u64,
}

/// A Betti computation result: per-degree data when a complex was built,
/// plus provenance and timing.
#[derive(Debug, Clone, Serialize)]
pub struct ResultReport {
    pub algebra: String,
    pub method: String,
    pub differential: Option<String>,
    pub rows: Vec<DegreeRow>,
    pub betti: Vec<u64>,
    /// Set when --max-degree truncated the computation.
    pub truncated_at: Option<usize>,
    pub elapsed_ms: u128,
}

impl ResultReport {
    /// Per-degree report from a computed complex.
    pub fn from_complex(
        label: &str,
        differential: &str,
        complex: &CochainComplex,
        elapsed_ms: u128,
    ) -> Self {
        let rows: Vec<DegreeRow> = (0..=complex.max_degree())
            .map(|k| DegreeRow {
                degree: k,
                space_dim: complex.space_dim(k),
                rank: complex.rank(k),
                kernel_dim: complex.kernel_dim(k),
                betti: complex.betti(k),
            })
            .collect();
        // b_k = dim ker d_k - rank d_{k-1}, and the Euler characteristic
        // vanishes on a full table
        for w in rows.windows(2) {
            assert_eq!(
                w[1].betti as i64,
                w[1].kernel_dim as i64 - w[0].rank as i64
            );
        }
        if complex.is_full() {
            let euler: i64 = rows
                .iter()
                .map(|r| if r.degree % 2 == 0 { r.betti as i64 } else { -(r.betti as i64) })
                .sum();
            assert_eq!(euler, 0, "Euler characteristic must vanish");
        }
        ResultReport {
            algebra: label.to_string(),
            method: "bruteforce".to_string(),
            differential: Some(differential.to_string()),
            rows: rows.clone(),
            betti: rows.iter().map(|r| r.betti).collect(),
            truncated_at: (!complex.is_full()).then_some(complex.max_degree()),
            elapsed_ms,
        }
    }

    /// Formula-route report: a bare table without rank data.
    pub fn from_table(table: &BettiTable, elapsed_ms: u128) -> Self {
        ResultReport {
            algebra: table.label().to_string(),
            method: table.method().as_str().to_string(),
            differential: None,
            rows: Vec::new(),
            betti: table.values().to_vec(),
            truncated_at: None,
            elapsed_ms,
        }
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => serde_json::to_string_pretty(self).expect("serializable"),
            OutputFormat::Csv => {
                let mut out = String::from("degree,space_dim,rank,kernel_dim,betti\n");
                if self.rows.is_empty() {
                    for (k, b) in self.betti.iter().enumerate() {
                        out.push_str(&format!("{k},,,,{b}\n"));
                    }
                } else {
                    for r in &self.rows {
                        out.push_str(&format!(
                            "{},{},{},{},{}\n",
                            r.degree, r.space_dim, r.rank, r.kernel_dim, r.betti
                        ));
                    }
                }
                out
            }
            OutputFormat::Table => {
                let mut out = String::new();
                out.push_str(&format!(
                    "algebra: {}   method: {}{}\n",
                    self.algebra,
                    self.method,
                    match &self.differential {
                        Some(d) => format!(" ({d} differential)"),
                        None => String::new(),
                    }
                ));
                if let Some(cap) = self.truncated_at {
                    out.push_str(&format!("(truncated at degree {cap})\n"));
                }
                if self.rows.is_empty() {
                    out.push_str(&format!(
                        "betti: [{}]\n",
                        self.betti
                            .iter()
                            .map(u64::to_string)
                            .collect::<Vec<_>>()
                            .join(", ")
                    ));
                } else {
                    out.push_str("  k   dim Λ^k   rank ∂_k   dim ker ∂_k   b_k\n");
                    for r in &self.rows {
                        out.push_str(&format!(
                            "{:>3}   {:>7}   {:>8}   {:>11}   {:>3}\n",
                            r.degree, r.space_dim, r.rank, r.kernel_dim, r.betti
                        ));
                    }
                    out.push_str(&format!(
                        "betti: [{}]\n",
                        self.betti
                            .iter()
                            .map(u64::to_string)
                            .collect::<Vec<_>>()
                            .join(", ")
                    ));
                }
                out.push_str(&format!("elapsed: {} ms\n", self.elapsed_ms));
                out
            }
        }
    }
}

/// Degree-2 cohomology report with echelon bases rendered as forms.
#[derive(Debug, Clone, Serialize)]
pub struct H2Report {
    pub algebra: String,
    pub z2_dim: usize,
    pub b2_dim: usize,
    pub h2_dim: usize,
    pub z2_basis: Vec<String>,
    pub b2_basis: Vec<String>,
}

impl H2Report {
    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => serde_json::to_string_pretty(self).expect("serializable"),
            OutputFormat::Csv => {
                let mut out = String::from("quantity,value\n");
                out.push_str(&format!("dim Z2,{}\n", self.z2_dim));
                out.push_str(&format!("dim B2,{}\n", self.b2_dim));
                out.push_str(&format!("dim H2,{}\n", self.h2_dim));
                out
            }
            OutputFormat::Table => {
                let mut out = format!(
                    "algebra: {}\ndim Z² = {}   dim B² = {}   dim H² = {}\n",
                    self.algebra, self.z2_dim, self.b2_dim, self.h2_dim
                );
                out.push_str("cocycle basis:\n");
                for s in &self.z2_basis {
                    out.push_str(&format!("  {s}\n"));
                }
                out.push_str("coboundary basis:\n");
                for s in &self.b2_basis {
                    out.push_str(&format!("  {s}\n"));
                }
                out
            }
        }
    }
}
