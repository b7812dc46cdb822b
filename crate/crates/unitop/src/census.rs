//! Census reports in JSON and CSV.

use serde::Serialize;
use unitop_core::census::{check_finite_cardinalities, CardinalityReport};
use unitop_core::Limits;

use crate::AppError;

#[derive(Debug, Serialize)]
pub struct CheckOut {
    pub label: &'static str,
    pub lhs: u128,
    pub relation: &'static str,
    pub rhs: u128,
    pub holds: bool,
    pub asserted: bool,
}

#[derive(Debug, Serialize)]
pub struct CensusRow {
    pub n: usize,
    /// Labelled topologies.
    pub sigma_count: u128,
    pub sigma_count_closure_operators: u128,
    /// Directed families counting the empty family.
    pub dx_count: u128,
    pub dx_count_nonempty: u128,
    pub dx_closed_form: u128,
    pub two_pow_n: u128,
    pub beth2: u128,
    pub discrete_lattice_size: u128,
    /// Lattice size per labelled topology, indexed by enumeration id.
    pub ux_sizes: Vec<usize>,
    pub inequality_checks: Vec<CheckOut>,
}

impl From<CardinalityReport> for CensusRow {
    fn from(r: CardinalityReport) -> Self {
        CensusRow {
            n: r.n,
            sigma_count: r.sigma_count,
            sigma_count_closure_operators: r.sigma_count_closure,
            dx_count: r.directed.with_empty,
            dx_count_nonempty: r.directed.nonempty,
            dx_closed_form: r.directed_closed_form,
            two_pow_n: r.two_pow_n,
            beth2: r.beth2,
            discrete_lattice_size: r.discrete_lattice_size,
            ux_sizes: r.lattice_sizes,
            inequality_checks: r
                .checks
                .into_iter()
                .map(|c| CheckOut {
                    label: c.label,
                    lhs: c.lhs,
                    relation: c.relation.symbol(),
                    rhs: c.rhs,
                    holds: c.holds,
                    asserted: c.asserted,
                })
                .collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CensusReport {
    pub rows: Vec<CensusRow>,
    pub passed: bool,
    /// Informational only.
    pub notes: Vec<&'static str>,
}

impl CensusReport {
    pub fn failed_checks(&self) -> Vec<String> {
        self.rows
            .iter()
            .flat_map(|r| {
                r.inequality_checks
                    .iter()
                    .filter(|c| c.asserted && !c.holds)
                    .map(move |c| format!("n={}: {} ({} {} {})", r.n, c.label, c.lhs, c.relation, c.rhs))
            })
            .collect()
    }
}

/// Rows for `0..=max_n` points.
pub fn run_census(max_n: usize, limits: &Limits) -> Result<CensusReport, AppError> {
    let rows = (0..=max_n)
        .map(|n| check_finite_cardinalities(n, limits).map(CensusRow::from))
        .collect::<Result<Vec<_>, _>>()?;
    let passed = rows
        .iter()
        .all(|r| r.inequality_checks.iter().all(|c| c.holds || !c.asserted));
    Ok(CensusReport {
        rows,
        passed,
        notes: vec![
            "sigma_count: labelled topologies, OEIS A000798",
            "dx_count includes the empty family; dx_count_nonempty does not",
        ],
    })
}

pub fn census_json(report: &CensusReport) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("plain data serializes");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct CsvRow {
    n: usize,
    sigma_count: String,
    sigma_count_closure_operators: String,
    dx_count: String,
    dx_count_nonempty: String,
    dx_closed_form: String,
    two_pow_n: String,
    beth2: String,
    discrete_lattice_size: String,
    checks_passed: bool,
}

/// One line per `n`. Counts are written as decimal strings since csv has
/// no 128-bit integers.
pub fn census_csv(report: &CensusReport) -> Result<String, AppError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in &report.rows {
        w.serialize(CsvRow {
            n: r.n,
            sigma_count: r.sigma_count.to_string(),
            sigma_count_closure_operators: r.sigma_count_closure_operators.to_string(),
            dx_count: r.dx_count.to_string(),
            dx_count_nonempty: r.dx_count_nonempty.to_string(),
            dx_closed_form: r.dx_closed_form.to_string(),
            two_pow_n: r.two_pow_n.to_string(),
            beth2: r.beth2.to_string(),
            discrete_lattice_size: r.discrete_lattice_size.to_string(),
            checks_passed: r.inequality_checks.iter().all(|c| c.holds || !c.asserted),
        })
        .map_err(|e| AppError::Io(format!("csv: {e}")))?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| AppError::Io(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_census() {
        let r = run_census(2, &Limits::DEFAULT).unwrap();
        assert!(r.passed);
        assert_eq!(r.rows[1].dx_count, 4);
        assert_eq!(r.rows[2].dx_count, 14);
        assert_eq!(r.rows[2].ux_sizes, vec![4, 3, 3, 2]);
        let csv = census_csv(&r).unwrap();
        assert_eq!(csv.lines().count(), 4);
        assert!(csv.starts_with("n,sigma_count,"));
    }
}
