//! Convergence reports for constant approximations and their JSON/text forms.

use serde::Serialize;

use crate::coefficient::{self, Coefficient};
use crate::real::Real;

/// One evaluated truncation of a series that converges to a known constant.
#[derive(Debug, Clone)]
pub struct ConvergenceReport {
    term_count: usize,
    partial_exact: Coefficient,
    partial_value: Real,
    target: Real,
    per_term: Option<Vec<Coefficient>>,
}

impl ConvergenceReport {
    pub fn new(term_count: usize, partial_exact: Coefficient, target: Real, per_term: Option<Vec<Coefficient>>) -> Self {
        let partial_value = Real::from_rational(&partial_exact, target.precision_bits());
        ConvergenceReport { term_count, partial_exact, partial_value, target, per_term }
    }

    pub fn term_count(&self) -> usize {
        self.term_count
    }

    /// The partial sum as an exact rational.
    pub fn partial_exact(&self) -> &Coefficient {
        &self.partial_exact
    }

    pub fn partial_value(&self) -> &Real {
        &self.partial_value
    }

    pub fn target(&self) -> &Real {
        &self.target
    }

    pub fn precision_bits(&self) -> usize {
        self.target.precision_bits()
    }

    /// `|partial − target|`, recomputed on every call.
    pub fn abs_error(&self) -> Real {
        self.partial_value.sub(&self.target).abs()
    }

    pub fn per_term(&self) -> Option<&[Coefficient]> {
        self.per_term.as_deref()
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Wire {
            terms: usize,
            partial_value: String,
            target: String,
            abs_error: String,
            #[serde(skip_serializing_if = "Option::is_none")]
            per_term: Option<Vec<String>>,
        }
        let wire = Wire {
            terms: self.term_count,
            partial_value: self.partial_value.to_full_decimal(),
            target: self.target.to_full_decimal(),
            abs_error: self.abs_error().to_scientific(self.partial_value.decimal_digits()),
            per_term: self.per_term.as_ref().map(|v| v.iter().map(coefficient::format).collect()),
        };
        serde_json::to_value(wire).expect("serialize report")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("serialize report")
    }
}

/// JSON array of reports, one per sweep point.
pub fn sweep_to_json(reports: &[ConvergenceReport]) -> String {
    let values: Vec<serde_json::Value> = reports.iter().map(ConvergenceReport::to_json_value).collect();
    serde_json::to_string_pretty(&values).expect("serialize reports")
}

/// Plain-text table, one row per report, decimals at `digits` significant digits.
pub fn render_table(reports: &[ConvergenceReport], digits: usize) -> String {
    let rows: Vec<[String; 4]> = reports
        .iter()
        .map(|r| {
            [
                r.term_count.to_string(),
                r.partial_value.to_decimal(digits),
                r.target.to_decimal(digits),
                r.abs_error().to_scientific(digits.min(6)),
            ]
        })
        .collect();
    let header = ["terms", "partial_value", "target", "abs_error"];
    let mut widths = header.map(str::len);
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: [&str; 4]| {
        let padded: Vec<String> = cells
            .iter()
            .zip(widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(header);
    for row in &rows {
        out.push_str(&line([&row[0], &row[1], &row[2], &row[3]]));
    }
    out
}

/// Comma-separated form of [`render_table`].
pub fn render_csv(reports: &[ConvergenceReport], digits: usize) -> String {
    let mut out = String::from("terms,partial_value,target,abs_error\n");
    for r in reports {
        out.push_str(&format!(
            "{},{},{},{}\n",
            r.term_count,
            r.partial_value.to_decimal(digits),
            r.target.to_decimal(digits),
            r.abs_error().to_scientific(digits)
        ));
    }
    out
}
