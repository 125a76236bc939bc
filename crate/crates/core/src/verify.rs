//! Self-checks behind `charpoly verify`: each suite recomputes a family of
//! identities and reports one line per identity.

use std::fmt;

use crate::charpoly::{tau, weyl_poly, weyl_poly_jt_e, weyl_poly_jt_h};
use crate::error::{Error, Result};
use crate::moments::{
    as_hook, criterion_hook, criterion_two_column, criterion_two_row, restriction_coeff_at,
    restriction_table, stable_weyl_moment, verify_genfun, GenfunBounds, GenfunIdentity,
};
use crate::oracle::oracle_restriction;
use crate::partitions::{partitions_of, partitions_up_to, Partition};
use crate::poly::Polynomial;
use crate::reference::{RESTRICTION_MATRIX, WEYL_TABLE};

/// A group of checks selectable on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Table1,
    Matrix,
    Genfun,
    Oracle,
    Duality,
    Criteria,
}

impl Suite {
    pub const ALL: [Suite; 6] =
        [Suite::Table1, Suite::Matrix, Suite::Genfun, Suite::Oracle, Suite::Duality, Suite::Criteria];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Table1 => "table1",
            Suite::Matrix => "matrix",
            Suite::Genfun => "genfun",
            Suite::Oracle => "oracle",
            Suite::Duality => "duality",
            Suite::Criteria => "criteria",
        }
    }

    /// Size bound used when `--max` is not given.
    pub fn default_max(self) -> u32 {
        match self {
            Suite::Table1 | Suite::Matrix => 5,
            Suite::Genfun | Suite::Oracle | Suite::Duality => 6,
            Suite::Criteria => 10,
        }
    }

    /// Largest accepted bound; anything above is refused before work starts.
    pub fn feasible_max(self) -> u32 {
        match self {
            Suite::Table1 => 5,
            Suite::Matrix => 7,
            Suite::Genfun => 8,
            Suite::Oracle => 8,
            Suite::Duality => 9,
            Suite::Criteria => 14,
        }
    }
}

/// Outcome of one identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}: {}", self.name, self.detail)
    }
}

fn check(name: impl Into<String>, failures: Vec<String>, checked: usize, what: &str) -> Check {
    let passed = failures.is_empty();
    let detail = if passed {
        format!("{checked} {what}")
    } else {
        let shown: Vec<&str> = failures.iter().take(5).map(String::as_str).collect();
        format!("{} of {checked} {what} failed; {}", failures.len(), shown.join("; "))
    };
    Check { name: name.into(), passed, detail }
}

/// Runs one suite with bound `max`, or its default.
pub fn run_suite(suite: Suite, max: Option<u32>) -> Result<Vec<Check>> {
    let max = max.unwrap_or(suite.default_max());
    if max > suite.feasible_max() {
        return Err(Error::Infeasible(format!(
            "suite {} accepts --max up to {}, got {max}",
            suite.name(),
            suite.feasible_max()
        )));
    }
    match suite {
        Suite::Table1 => table1(max),
        Suite::Matrix => matrix(max),
        Suite::Genfun => genfun(max),
        Suite::Oracle => oracle(max),
        Suite::Duality => duality(max),
        Suite::Criteria => criteria(max),
    }
}

fn table1(max: u32) -> Result<Vec<Check>> {
    let mut failures = Vec::new();
    let mut checked = 0;
    for (shape, expected) in WEYL_TABLE {
        let lambda: Partition = shape.parse()?;
        if lambda.size() > max {
            continue;
        }
        checked += 1;
        let expected: Polynomial = expected.parse()?;
        let got = weyl_poly(&lambda);
        if got != expected {
            failures.push(format!("S{lambda} = {got}, table has {expected}"));
        }
    }
    Ok(vec![check("table1", failures, checked, "Weyl character polynomials")])
}

fn matrix(max: u32) -> Result<Vec<Check>> {
    let table = restriction_table(max, None)?;
    let known = partitions_up_to(max.min(5)).len();
    let mut failures = Vec::new();
    for (i, expected_row) in RESTRICTION_MATRIX.iter().enumerate().take(known) {
        for (j, &expected) in expected_row.iter().enumerate().take(known) {
            if table.entries[i][j] != expected {
                failures.push(format!(
                    "r[{}, {}] = {}, matrix has {expected}",
                    table.rows[i], table.cols[j], table.entries[i][j]
                ));
            }
        }
    }
    let mut checks = vec![check("matrix", failures, known * known, "stable restriction coefficients")];
    // the diagonal blocks are unitriangular at every size
    let mut failures = Vec::new();
    for (i, row) in table.entries.iter().enumerate() {
        for (j, &r) in row.iter().enumerate() {
            let (a, b) = (&table.rows[i], &table.cols[j]);
            let bad = match a.size().cmp(&b.size()) {
                std::cmp::Ordering::Equal if i == j => r != 1,
                std::cmp::Ordering::Equal if j > i => r != 0,
                std::cmp::Ordering::Less => r != 0,
                _ => false,
            };
            if bad {
                failures.push(format!("r[{a}, {b}] = {r}"));
            }
        }
    }
    checks.push(check("matrix-unitriangular", failures, table.rows.len(), "rows"));
    Ok(checks)
}

fn genfun(max: u32) -> Result<Vec<Check>> {
    let bounds = GenfunBounds { max_exp: max, ..GenfunBounds::default() };
    let mut checks = Vec::new();
    for id in GenfunIdentity::ALL {
        let report = verify_genfun(id, bounds)?;
        let failures = report.mismatches.iter().map(ToString::to_string).collect();
        checks.push(check(format!("genfun-{id}"), failures, report.checked, "coefficients"));
    }
    Ok(checks)
}

fn oracle(max: u32) -> Result<Vec<Check>> {
    let mut failures = Vec::new();
    let mut checked = 0;
    for lambda in partitions_up_to(4) {
        for mu in partitions_up_to(3) {
            let lo = (mu.size() + mu.first()).max(lambda.len() as u32);
            for n in lo..=max {
                checked += 1;
                let fast = restriction_coeff_at(&lambda, &mu, n)?;
                let slow = oracle_restriction(&lambda, &mu, n)?;
                if fast != slow {
                    failures.push(format!("r[{lambda}, {mu}]({n}): moments {fast}, enumeration {slow}"));
                }
            }
        }
    }
    Ok(vec![check("oracle", failures, checked, "restriction multiplicities")])
}

fn duality(max: u32) -> Result<Vec<Check>> {
    let mut jt = Vec::new();
    let mut tw = Vec::new();
    let mut checked = 0;
    for d in 0..=max {
        for lambda in partitions_of(d) {
            checked += 1;
            let h = weyl_poly_jt_h(&lambda);
            if h != weyl_poly_jt_e(&lambda) {
                jt.push(format!("S{lambda}"));
            }
            if tau(d, &h) != weyl_poly(&lambda.conjugate()) {
                tw.push(format!("S{lambda}"));
            }
        }
    }
    Ok(vec![
        check("duality-jacobi-trudi", jt, checked, "partitions"),
        check("duality-involution", tw, checked, "partitions"),
    ])
}

fn criteria(max: u32) -> Result<Vec<Check>> {
    let mut rows = (Vec::new(), 0);
    let mut cols = (Vec::new(), 0);
    let mut hooks = (Vec::new(), 0);
    for d in 1..=max {
        for lambda in partitions_of(d) {
            let moment = if lambda.len() <= 2 || lambda.first() <= 2 || as_hook(&lambda).is_some() {
                stable_weyl_moment(&lambda)?
            } else {
                continue;
            };
            if lambda.len() <= 2 {
                rows.1 += 1;
                if criterion_two_row(&lambda)? != (moment > 0) {
                    rows.0.push(format!("<S{lambda}> = {moment}"));
                }
            }
            if lambda.first() <= 2 {
                cols.1 += 1;
                if criterion_two_column(&lambda)? != moment {
                    cols.0.push(format!("<S{lambda}> = {moment}"));
                }
            }
            if let Some((a, b)) = as_hook(&lambda) {
                hooks.1 += 1;
                if criterion_hook(a, b) != (moment > 0) {
                    hooks.0.push(format!("<S{lambda}> = {moment}"));
                }
            }
        }
    }
    Ok(vec![
        check("criteria-two-row", rows.0, rows.1, "shapes"),
        check("criteria-two-column", cols.0, cols.1, "shapes"),
        check("criteria-hook", hooks.0, hooks.1, "shapes"),
    ])
}
