//! Check results and the campaign report.

use std::io::Write;
use std::path::Path;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::config::VerificationConfig;
use crate::error::Result;
use crate::susy::ClaimStatus;

/// Which side of the tolerance a passing metric lies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Bound {
    /// `metric <= tolerance`
    Below,
    /// `metric > tolerance`
    Above,
}

impl Bound {
    pub fn accepts(&self, metric: f64, tolerance: f64) -> bool {
        match self {
            Bound::Below => metric <= tolerance,
            Bound::Above => metric > tolerance,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub paper_eq: String,
    pub params: Value,
    pub status: ClaimStatus,
    /// `null` when the measurement is not finite.
    pub metric: f64,
    pub tolerance: f64,
    pub bound: Bound,
    pub runtime_ms: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<Value>,
}

impl CheckResult {
    /// A pass/fail check. A non-finite metric always fails.
    pub fn checked(
        id: impl Into<String>,
        claim: impl Into<String>,
        params: Value,
        metric: f64,
        tolerance: f64,
        bound: Bound,
    ) -> Self {
        let ok = metric.is_finite() && bound.accepts(metric, tolerance);
        CheckResult {
            id: id.into(),
            paper_eq: claim.into(),
            params,
            status: if ok {
                ClaimStatus::Pass
            } else {
                ClaimStatus::Fail
            },
            metric,
            tolerance,
            bound,
            runtime_ms: 0.0,
            detail: None,
        }
    }

    /// A measurement that is recorded without a verdict.
    pub fn reported(
        id: impl Into<String>,
        claim: impl Into<String>,
        params: Value,
        metric: f64,
        tolerance: f64,
    ) -> Self {
        CheckResult {
            status: ClaimStatus::Reported,
            ..Self::checked(id, claim, params, metric, tolerance, Bound::Below)
        }
    }

    /// A check whose computation itself errored.
    pub fn errored(
        id: impl Into<String>,
        claim: impl Into<String>,
        params: Value,
        err: &crate::Error,
    ) -> Self {
        CheckResult {
            detail: Some(serde_json::json!({ "error": err.to_string() })),
            ..Self::checked(id, claim, params, f64::NAN, 0.0, Bound::Below)
        }
    }

    pub fn with_detail(mut self, detail: Value) -> Self {
        self.detail = Some(detail);
        self
    }

    pub fn timed(mut self, start: Instant) -> Self {
        self.runtime_ms = start.elapsed().as_secs_f64() * 1e3;
        self
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub reported: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub tool: String,
    pub version: String,
    pub config: VerificationConfig,
    pub checks: Vec<CheckResult>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn new(config: VerificationConfig, checks: Vec<CheckResult>) -> Self {
        let mut summary = Summary {
            total: checks.len(),
            ..Summary::default()
        };
        for c in &checks {
            match c.status {
                ClaimStatus::Pass => summary.pass += 1,
                ClaimStatus::Fail => summary.fail += 1,
                ClaimStatus::Reported => summary.reported += 1,
            }
        }
        VerificationReport {
            tool: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            config,
            checks,
            summary,
        }
    }

    pub fn has_failures(&self) -> bool {
        self.summary.fail > 0
    }

    /// 0 when nothing failed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        i32::from(self.has_failures())
    }

    pub fn find(&self, id: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    /// Same report with every runtime zeroed, for byte comparisons.
    pub fn without_runtimes(&self) -> Self {
        let mut r = self.clone();
        for c in &mut r.checks {
            c.runtime_ms = 0.0;
        }
        r
    }
}

/// Writes `contents` next to `path` and renames it into place.
pub fn write_atomic(path: &Path, contents: &[u8]) -> Result<()> {
    let dir = path
        .parent()
        .filter(|d| !d.as_os_str().is_empty())
        .unwrap_or_else(|| Path::new("."));
    let name = path
        .file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_default();
    let tmp = dir.join(format!(".{name}.{}.tmp", std::process::id()));
    let result = (|| {
        let mut f = std::fs::File::create(&tmp)?;
        f.write_all(contents)?;
        f.sync_all()?;
        std::fs::rename(&tmp, path)
    })();
    if result.is_err() {
        let _ = std::fs::remove_file(&tmp);
    }
    Ok(result?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::config::Suite;

    #[test]
    fn statuses_and_exit_code() {
        let a = CheckResult::checked("a", "", Value::Null, 1e-12, 1e-9, Bound::Below);
        let b = CheckResult::checked("b", "", Value::Null, 0.5, 1e-2, Bound::Above);
        let c = CheckResult::checked("c", "", Value::Null, f64::NAN, 1.0, Bound::Below);
        let d = CheckResult::reported("d", "", Value::Null, 3.0, 1e-8);
        assert_eq!(a.status, ClaimStatus::Pass);
        assert_eq!(b.status, ClaimStatus::Pass);
        assert_eq!(c.status, ClaimStatus::Fail);
        assert_eq!(d.status, ClaimStatus::Reported);
        let cfg = VerificationConfig::with_suites(vec![Suite::Xop]);
        let r = VerificationReport::new(cfg.clone(), vec![a.clone(), b, d]);
        assert_eq!(r.exit_code(), 0);
        assert_eq!(r.summary.reported, 1);
        let r = VerificationReport::new(cfg, vec![a, c]);
        assert_eq!(r.exit_code(), 1);
    }

    #[test]
    fn atomic_write_replaces_contents() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("r.json");
        write_atomic(&p, b"one").unwrap();
        write_atomic(&p, b"two").unwrap();
        assert_eq!(std::fs::read_to_string(&p).unwrap(), "two");
        assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    }
}
