//! Verification campaigns: configuration, the check suites and the report.

pub mod config;
pub mod report;
pub mod suites;

use rayon::prelude::*;

pub use config::{
    GridSettings, JacobiPair, OutputSettings, ParamGrid, ScarfParams, Suite, Tolerances,
    VerificationConfig,
};
pub use report::{write_atomic, Bound, CheckResult, Summary, VerificationReport};
pub use suites::{negative_control_check, run_suite};

use crate::error::{Error, Result};

/// Environment variable capping worker threads.
pub const THREADS_ENV: &str = "XOP_THREADS";

/// Thread cap from `XOP_THREADS`; `None` when unset.
pub fn thread_cap() -> Result<Option<usize>> {
    match std::env::var(THREADS_ENV) {
        Err(_) => Ok(None),
        Ok(v) if v.trim().is_empty() => Ok(None),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n >= 1 => Ok(Some(n)),
            _ => Err(Error::config(
                THREADS_ENV,
                format!("expected a positive integer, got {v:?}"),
            )),
        },
    }
}

/// Runs `f` inside a rayon pool honoring the thread cap.
pub fn in_pool<T: Send>(f: impl FnOnce() -> T + Send) -> Result<T> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = thread_cap()? {
        builder = builder.num_threads(n);
    }
    let pool = builder
        .build()
        .map_err(|e| Error::config(THREADS_ENV, e.to_string()))?;
    Ok(pool.install(f))
}

/// Runs every selected suite. Check order depends only on the config.
pub fn run_verification(config: &VerificationConfig) -> Result<VerificationReport> {
    config.validate()?;
    let suites = config.selected_suites();
    let mut checks: Vec<CheckResult> = in_pool(|| {
        suites
            .par_iter()
            .map(|&s| run_suite(s, config))
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect()
    })?;
    if config.negative_control {
        checks.push(negative_control_check());
    }
    Ok(VerificationReport::new(config.clone(), checks))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn xop_suite_passes_and_ids_are_unique() {
        let mut cfg = VerificationConfig::with_suites(vec![Suite::Xop]);
        cfg.params.max_degree = 4;
        cfg.params.exact_max_degree = 5;
        let r = run_verification(&cfg).unwrap();
        assert_eq!(r.summary.fail, 0, "{}", r.to_json().unwrap());
        assert_eq!(r.checks.len(), 18);
        let ids: HashSet<_> = r.checks.iter().map(|c| c.id.as_str()).collect();
        assert_eq!(ids.len(), r.checks.len());
    }

    #[test]
    fn negative_control_fails_the_run() {
        let c = negative_control_check();
        assert_eq!(c.status, crate::susy::ClaimStatus::Fail);
        let mut cfg = VerificationConfig::with_suites(vec![Suite::Xop]);
        cfg.params.k.truncate(1);
        cfg.params.jacobi.truncate(1);
        cfg.params.max_degree = 2;
        cfg.params.exact_max_degree = 2;
        cfg.negative_control = true;
        assert_eq!(run_verification(&cfg).unwrap().exit_code(), 1);
    }
}
