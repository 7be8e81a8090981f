//! Verdict and report types shared by the identity-checking suites.
//!
//! A check is either load-bearing (`flagged = false`, expected to PASS and
//! counted by the exit-code contract) or an adjudication of a formula that is
//! checked as printed and reported as-is (`flagged = true`). Downstream
//! tooling can tell errata findings from implementation failures by looking
//! at the `adjudications` section instead of parsing verdict lists.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "MISMATCH")]
    Mismatch,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Mismatch => "MISMATCH",
        })
    }
}

/// A single failing cell of an identity check: which instance, and the
/// nonzero residual polynomial (right side minus left side).
#[derive(Debug, Clone, Serialize)]
pub struct CellMismatch {
    pub n: u32,
    pub params: String,
    pub residual: String,
}

/// Outcome of one identity checked over a grid of instances.
#[derive(Debug, Clone, Serialize)]
pub struct IdentityCheck {
    pub id: String,
    pub statement: String,
    /// Adjudication-only checks record the paper's formula as printed; their
    /// verdict is report content, not a failure of the artifact.
    pub flagged: bool,
    pub cells: u64,
    pub mismatches: Vec<CellMismatch>,
}

impl IdentityCheck {
    pub fn verdict(&self) -> Verdict {
        if self.mismatches.is_empty() {
            Verdict::Pass
        } else {
            Verdict::Mismatch
        }
    }
}

/// A recorded resolution of a formula-as-printed discrepancy.
#[derive(Debug, Clone, Serialize)]
pub struct Adjudication {
    pub id: String,
    pub finding: String,
    pub evidence: Vec<String>,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
    pub adjudications: Vec<Adjudication>,
}

impl IdentityReport {
    pub fn merge(&mut self, other: IdentityReport) {
        self.checks.extend(other.checks);
        self.adjudications.extend(other.adjudications);
    }

    /// Exit-code contract: every non-flagged identity passed.
    pub fn all_unflagged_pass(&self) -> bool {
        self.checks
            .iter()
            .filter(|c| !c.flagged)
            .all(|c| c.verdict() == Verdict::Pass)
    }

    pub fn find(&self, id: &str) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| c.id == id)
    }
}

/// Parameter grid over which the identity suites run.
#[derive(Debug, Clone)]
pub struct GridConfig {
    /// Identities are checked for all 0 <= n <= n_max.
    pub n_max: u32,
    /// Values taken by the block parameter (β for Bell, m for Dowling).
    pub ms: Vec<i64>,
    pub rs: Vec<i64>,
    /// Degeneracy values; 0 is the non-degenerate case.
    pub alphas: Vec<i64>,
    /// Evaluation points for checks that specialize x.
    pub xs: Vec<i64>,
    /// Specializations for checks that need an integer λ.
    pub lambdas: Vec<i64>,
}

impl Default for GridConfig {
    fn default() -> Self {
        Self {
            n_max: 12,
            ms: vec![1, 2, 3],
            rs: vec![0, 1, 2],
            alphas: vec![0, 1, 2],
            xs: vec![0, 1, 2, 3],
            lambdas: vec![1, 2, 3],
        }
    }
}

impl GridConfig {
    pub fn with_n_max(n_max: u32) -> Self {
        Self {
            n_max,
            ..Self::default()
        }
    }
}

/// Helper that accumulates per-cell outcomes for one identity.
pub struct CheckBuilder {
    check: IdentityCheck,
}

impl CheckBuilder {
    pub fn new(id: &str, statement: &str, flagged: bool) -> Self {
        Self {
            check: IdentityCheck {
                id: id.to_string(),
                statement: statement.to_string(),
                flagged,
                cells: 0,
                mismatches: Vec::new(),
            },
        }
    }

    /// Record one cell: `residual` is RHS − LHS, zero meaning the cell passes.
    pub fn cell(&mut self, n: u32, params: String, residual: &crate::bipoly::BiPoly) {
        self.check.cells += 1;
        if !residual.is_zero() {
            self.check.mismatches.push(CellMismatch {
                n,
                params,
                residual: residual.render(),
            });
        }
    }

    pub fn finish(self) -> IdentityCheck {
        self.check
    }
}
