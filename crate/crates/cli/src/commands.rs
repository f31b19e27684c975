use std::path::Path;

use riordan::coefficient::format as rational;
use riordan::report::{render_csv, render_table, sweep_to_json};
use riordan::{
    euler_sweep, euler_triple, gamma_sweep, gregory_coefficients, ConvergenceReport, Error, RiordanElement,
    RiordanMatrixView, StandardPair, TruncatedSeries,
};

use crate::error::CliError;
use crate::{Format, Notation};

pub struct Render {
    pub format: Format,
    pub precision_bits: usize,
    pub digits: usize,
}

pub struct RunPlan {
    pub sweep: Vec<usize>,
    pub per_term: Option<usize>,
    pub render: Render,
}

pub struct GregoryListing {
    pub data: String,
    pub check: Option<String>,
    pub failed: bool,
}

pub fn gamma(plan: &RunPlan) -> Result<String, CliError> {
    let reports = gamma_sweep(&plan.sweep, plan.render.precision_bits, plan.per_term)?;
    Ok(render_reports(&reports, &plan.render))
}

pub fn check_euler(p: i64, q: i64, d: i64) -> Result<(), CliError> {
    euler_triple(p, q, d, 0)?;
    Ok(())
}

pub fn euler(p: i64, q: i64, d: i64, plan: &RunPlan) -> Result<String, CliError> {
    let reports = euler_sweep(p, q, d, &plan.sweep, plan.render.precision_bits, plan.per_term)?;
    Ok(render_reports(&reports, &plan.render))
}

fn render_reports(reports: &[ConvergenceReport], render: &Render) -> String {
    match render.format {
        Format::Table => render_table(reports, render.digits),
        Format::Csv => render_csv(reports, render.digits),
        Format::Json if reports.len() == 1 => reports[0].to_json() + "\n",
        Format::Json => sweep_to_json(reports) + "\n",
    }
}

pub fn gregory(terms: usize, format: Format, check: bool) -> Result<GregoryListing, CliError> {
    let l = gregory_coefficients(terms);
    let values: Vec<String> = l.values().iter().map(rational).collect();
    let data = match format {
        Format::Json => {
            let quoted: Vec<String> = values.iter().map(|v| format!("\"{v}\"")).collect();
            format!("[{}]\n", quoted.join(", "))
        }
        Format::Csv => {
            let mut out = String::from("n,L_n\n");
            for (n, v) in values.iter().enumerate() {
                out.push_str(&format!("{n},{v}\n"));
            }
            out
        }
        Format::Table => {
            let n_width = terms.to_string().len().max(1);
            let v_width = values.iter().map(String::len).max().unwrap_or(0).max(3);
            let mut out = format!("{:>n_width$}  {:>v_width$}\n", "n", "L_n");
            for (n, v) in values.iter().enumerate() {
                out.push_str(&format!("{n:>n_width$}  {v:>v_width$}\n"));
            }
            out
        }
    };
    let (check, failed) = if !check {
        (None, false)
    } else if terms < 2 {
        (Some("recursion check needs --terms >= 2".to_string()), false)
    } else {
        match l.first_recursion_failure() {
            None => (Some(format!("recursion OK for n = 2..{terms}")), false),
            Some(n) => (Some(format!("recursion FAILED at n = {n}")), true),
        }
    };
    Ok(GregoryListing { data, check, failed })
}

fn read_series(path: &Path) -> Result<TruncatedSeries, CliError> {
    let context = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: context.clone(), source })?;
    TruncatedSeries::from_json(&text).map_err(|source| CliError::Input { context, source })
}

/// Brings a multiplier to order `dim`. Its `x^dim` coefficient never reaches
/// the N×N matrix, so `dim` coefficients suffice and the last one is padded.
fn fit_multiplier(s: TruncatedSeries, dim: usize, path: &Path) -> Result<TruncatedSeries, CliError> {
    let context = || path.display().to_string();
    if s.order() + 1 == dim {
        let mut coeffs = s.into_coefficients();
        coeffs.push(riordan::Coefficient::ZERO);
        return TruncatedSeries::new(coeffs).map_err(|source| CliError::Input { context: context(), source });
    }
    s.truncate(dim).map_err(|_| CliError::Input {
        context: context(),
        source: Error::InsufficientOrder { required: dim - 1, available: s.order() },
    })
}

fn fit_generator(path: Option<&Path>, dim: usize) -> Result<TruncatedSeries, CliError> {
    match path {
        None => Ok(TruncatedSeries::identity(dim)),
        Some(path) => read_series(path)?
            .truncate(dim)
            .map_err(|source| CliError::Input { context: path.display().to_string(), source }),
    }
}

/// Reads a (multiplier, generator) pair and validates it as a group element.
pub fn load_element(
    multiplier: &Path,
    generator: Option<&Path>,
    dim: usize,
    notation: Notation,
) -> Result<RiordanElement, CliError> {
    let lead = fit_multiplier(read_series(multiplier)?, dim, multiplier)?;
    let step = fit_generator(generator, dim)?;
    let blame = |source: Error| {
        let context = match source {
            Error::ZeroConstantTerm => multiplier.display().to_string(),
            _ => generator.map_or_else(|| "x".to_string(), |p| p.display().to_string()),
        };
        CliError::Input { context, source }
    };
    match notation {
        Notation::Group => RiordanElement::new(lead, step).map_err(blame),
        Notation::Standard => StandardPair::new(lead, step).and_then(|p| p.to_element()).map_err(blame),
    }
}

pub fn matrix(element: &RiordanElement, dim: usize, invert: bool, render: &Render) -> Result<String, CliError> {
    let element = if invert { element.group_inverse()? } else { element.clone() };
    render_matrix(&element.to_matrix(dim)?, render)
}

pub fn product(left: &RiordanElement, right: &RiordanElement, dim: usize, render: &Render) -> Result<String, CliError> {
    render_matrix(&left.group_multiply(right)?.to_matrix(dim)?, render)
}

fn render_matrix(m: &RiordanMatrixView, render: &Render) -> Result<String, CliError> {
    Ok(match render.format {
        Format::Json => m.to_json() + "\n",
        Format::Csv => m.to_csv(render.precision_bits, render.digits)?,
        Format::Table => {
            let cells: Vec<Vec<String>> =
                m.to_square_rows().iter().map(|row| row.iter().map(rational).collect()).collect();
            let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
            let mut out = String::new();
            for row in &cells {
                let padded: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
                out.push_str(&padded.join("  "));
                out.push('\n');
            }
            out
        }
    })
}
