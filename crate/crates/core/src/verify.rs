//! Cross-checks between the closed forms and the Hochster oracle.

use std::fmt;
use std::ops::RangeInclusive;

use serde::Serialize;

use crate::betti::{
    betti_closed_cycle, betti_closed_line, betti_hochster_with_cap, homology_cycle_complement,
    nonzero_criterion, pd_reg, BettiTable, DEFAULT_MAX_SUBSET_BITS,
};
use crate::error::Result;
use crate::homology::{reduced_homology_dims, FieldSpec};
use crate::path_complex::{build_path_complex, PathFamilySpec, PathKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    OracleVsClosed,
    FieldIndependence,
    VanishingSoundness,
    PdReg,
    ComplementHomology,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Check::OracleVsClosed => "oracle_vs_closed",
            Check::FieldIndependence => "field_independence",
            Check::VanishingSoundness => "vanishing_soundness",
            Check::PdReg => "pd_reg",
            Check::ComplementHomology => "complement_homology",
        })
    }
}

/// Outcome of one check on one `(kind, n, t)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CellReport {
    pub kind: PathKind,
    pub n: usize,
    pub t: usize,
    pub check: Check,
    pub passed: bool,
    /// Offending `(i, j)` entries or a short explanation.
    pub detail: String,
}

impl fmt::Display for CellReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {} n={} t={} {}", self.kind, self.n, self.t, self.check)?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub max_n: usize,
    pub t_range: RangeInclusive<usize>,
    /// The first field is the reference for the closed-form comparisons.
    pub fields: Vec<FieldSpec>,
    /// Oracle vertex cap, see [`betti_hochster_with_cap`].
    pub max_subset_bits: u32,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_n: 10,
            t_range: 2..=5,
            fields: vec![FieldSpec::RATIONALS, FieldSpec::GF2, FieldSpec::GF32003],
            max_subset_bits: DEFAULT_MAX_SUBSET_BITS,
        }
    }
}

/// Every `(kind, n, t)` cell covered by `config`: cycles with `3 <= n`,
/// lines with `2 <= n`, and `t <= n` throughout.
pub fn cells(config: &VerifyConfig) -> Vec<PathFamilySpec> {
    let mut out = Vec::new();
    for kind in [PathKind::Cycle, PathKind::Line] {
        for n in 2..=config.max_n {
            for t in config.t_range.clone() {
                if let Ok(spec) = PathFamilySpec::new(kind, n, t) {
                    out.push(spec);
                }
            }
        }
    }
    out
}

pub fn verify_matrix(config: &VerifyConfig) -> Result<Vec<CellReport>> {
    let fields = if config.fields.is_empty() { vec![FieldSpec::RATIONALS] } else { config.fields.clone() };
    let mut reports = Vec::new();
    for spec in cells(config) {
        reports.extend(verify_cell(spec, &fields, config.max_subset_bits)?);
    }
    Ok(reports)
}

/// All checks for one cell. `fields` must be nonempty; the first is the reference.
pub fn verify_cell(spec: PathFamilySpec, fields: &[FieldSpec], max_subset_bits: u32) -> Result<Vec<CellReport>> {
    let cx = build_path_complex(spec);
    let oracles: Vec<BettiTable> = fields
        .iter()
        .map(|&f| betti_hochster_with_cap(&cx, f, max_subset_bits))
        .collect::<Result<_>>()?;
    let oracle = &oracles[0];
    let report = |check, passed, detail: String| CellReport {
        kind: spec.kind(),
        n: spec.n(),
        t: spec.t(),
        check,
        passed,
        detail,
    };
    let mut out = Vec::new();

    let closed = match spec.kind() {
        PathKind::Cycle => betti_closed_cycle(spec)?,
        PathKind::Line => betti_closed_line(spec)?,
    };
    let diff = closed.diff(oracle);
    out.push(report(Check::OracleVsClosed, diff.is_empty(), format_diff(&diff, "closed", "oracle")));

    if fields.len() > 1 {
        let mut detail = Vec::new();
        for (f, table) in fields.iter().zip(&oracles).skip(1) {
            let d = table.diff(oracle);
            if !d.is_empty() {
                detail.push(format!("{f} vs {}: {}", fields[0], format_diff(&d, "this", "reference")));
            }
        }
        out.push(report(Check::FieldIndependence, detail.is_empty(), detail.join("; ")));
    }

    if spec.kind() == PathKind::Cycle {
        let mut bad = Vec::new();
        for e in oracle.iter() {
            let in_range_violation = e.j < spec.n() && !nonzero_criterion(spec, e.i, e.j)?;
            if in_range_violation || e.j > spec.t() * e.i {
                bad.push(format!("(i={}, j={})", e.i, e.j));
            }
        }
        out.push(report(Check::VanishingSoundness, bad.is_empty(), bad.join(" ")));

        let expected = pd_reg(spec)?;
        let observed = (oracle.projective_dimension(), oracle.regularity());
        out.push(report(
            Check::PdReg,
            expected == observed,
            format!("formula (pd, reg) = {expected:?}, oracle = {observed:?}"),
        ));

        let predicted = homology_cycle_complement(spec)?.to_vector();
        let complement = cx.complement(cx.ambient())?;
        let mut detail = Vec::new();
        for &f in fields {
            let h = reduced_homology_dims(&complement, f);
            if h != predicted {
                detail.push(format!("{f}: explicit {h}, closed {predicted}"));
            }
        }
        out.push(report(Check::ComplementHomology, detail.is_empty(), detail.join("; ")));
    }
    Ok(out)
}

fn format_diff(diff: &[(usize, usize, u64, u64)], left: &str, right: &str) -> String {
    diff.iter()
        .map(|(i, j, a, b)| format!("(i={i}, j={j}) {left}={a} {right}={b}"))
        .collect::<Vec<_>>()
        .join("; ")
}
