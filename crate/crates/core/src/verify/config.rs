//! Verification campaign settings.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polycore::{int, rat, Exact};
use crate::potentials::Preset;
use crate::solver::MIN_INTERIOR;
use crate::xop::XFamilySpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Xop,
    Theorem,
    Spectra,
    Susy,
    All,
}

impl Suite {
    pub const CONCRETE: [Suite; 4] = [Suite::Xop, Suite::Theorem, Suite::Spectra, Suite::Susy];

    pub fn tag(&self) -> &'static str {
        match self {
            Suite::Xop => "xop",
            Suite::Theorem => "theorem",
            Suite::Spectra => "spectra",
            Suite::Susy => "susy",
            Suite::All => "all",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JacobiPair {
    pub alpha: Exact,
    pub beta: Exact,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScarfParams {
    #[serde(rename = "A")]
    pub a: f64,
    #[serde(rename = "B")]
    pub b: f64,
    pub alpha: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ParamGrid {
    /// Laguerre parameters.
    pub k: Vec<Exact>,
    pub jacobi: Vec<JacobiPair>,
    /// Angular momenta for the oscillator and Coulomb presets.
    pub l: Vec<u32>,
    pub scarf: Vec<ScarfParams>,
    /// Codimensions probed beyond `j = 1`.
    pub xj: Vec<u32>,
    /// Largest degree for the exact eigen-equation checks.
    pub exact_max_degree: usize,
    /// Largest degree for route agreement and orthogonality.
    pub max_degree: usize,
}

impl Default for ParamGrid {
    fn default() -> Self {
        ParamGrid {
            k: vec![Exact(int(1)), Exact(int(2)), Exact(rat(7, 2))],
            jacobi: vec![
                JacobiPair {
                    alpha: Exact(int(1)),
                    beta: Exact(int(2)),
                },
                JacobiPair {
                    alpha: Exact(int(2)),
                    beta: Exact(int(5)),
                },
                JacobiPair {
                    alpha: Exact(rat(1, 2)),
                    beta: Exact(rat(3, 2)),
                },
            ],
            l: vec![0, 1],
            scarf: vec![ScarfParams {
                a: 3.0,
                b: 1.0,
                alpha: 1.0,
            }],
            xj: vec![2],
            exact_max_degree: 10,
            max_degree: 8,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Tolerances {
    pub route_agreement: f64,
    pub orthogonality: f64,
    pub theorem: f64,
    /// Smallest residual a wrong polynomial must leave.
    pub negative_control: f64,
    pub spectrum: f64,
    /// Allowed distance of the measured convergence order from 2.
    pub convergence_order: f64,
    pub isospectral: f64,
    pub construction: f64,
    pub commutator: f64,
    pub intertwine: f64,
    /// Smallest residual of a mismatched intertwining pair.
    pub mismatch: f64,
    /// How far below zero the factorized operators may dip.
    pub positivity: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            route_agreement: 1e-9,
            orthogonality: 1e-10,
            theorem: 1e-8,
            negative_control: 1e-2,
            spectrum: 1e-4,
            convergence_order: 0.2,
            isospectral: 1e-6,
            construction: 1e-8,
            commutator: 1e-5,
            intertwine: 1e-5,
            mismatch: 1e-1,
            positivity: 1e-6,
        }
    }
}

impl Tolerances {
    fn entries(&self) -> [(&'static str, f64); 12] {
        [
            ("route_agreement", self.route_agreement),
            ("orthogonality", self.orthogonality),
            ("theorem", self.theorem),
            ("negative_control", self.negative_control),
            ("spectrum", self.spectrum),
            ("convergence_order", self.convergence_order),
            ("isospectral", self.isospectral),
            ("construction", self.construction),
            ("commutator", self.commutator),
            ("intertwine", self.intertwine),
            ("mismatch", self.mismatch),
            ("positivity", self.positivity),
        ]
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct GridSettings {
    /// Interior points for eigenvalue solves.
    pub spectrum_n: usize,
    /// Interior points for Rayleigh quotients of closed-form states.
    pub rayleigh_n: usize,
    /// Interior points for the first-order operator checks.
    pub operator_n: usize,
    /// Interior points for wavefunction mapping under the intertwiner.
    pub intertwine_n: usize,
    /// Seed of the random test functions.
    pub seed: u64,
}

impl Default for GridSettings {
    fn default() -> Self {
        GridSettings {
            spectrum_n: 8000,
            rayleigh_n: 100_000,
            operator_n: 20_000,
            intertwine_n: 40_000,
            seed: 2024,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct OutputSettings {
    /// Where the JSON report goes; stdout when absent.
    pub report: Option<PathBuf>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerificationConfig {
    pub suites: Vec<Suite>,
    #[serde(default)]
    pub params: ParamGrid,
    #[serde(default)]
    pub tolerances: Tolerances,
    #[serde(default)]
    pub grid: GridSettings,
    #[serde(default)]
    pub output: OutputSettings,
    /// Adds a deliberately corrupted check that must fail.
    #[serde(default)]
    pub negative_control: bool,
}

impl VerificationConfig {
    pub fn with_suites(suites: Vec<Suite>) -> Self {
        VerificationConfig {
            suites,
            params: ParamGrid::default(),
            tolerances: Tolerances::default(),
            grid: GridSettings::default(),
            output: OutputSettings::default(),
            negative_control: false,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let de = &mut serde_json::Deserializer::from_str(text);
        let cfg: VerificationConfig = serde_path_to_error::deserialize(de).map_err(|e| {
            let path = e.path().to_string();
            let message = e.into_inner().to_string();
            Error::config(error_field(&path, &message), message)
        })?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::config("config", format!("cannot read {}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    /// Concrete suites in canonical order, with `all` expanded.
    pub fn selected_suites(&self) -> Vec<Suite> {
        if self.suites.contains(&Suite::All) {
            return Suite::CONCRETE.to_vec();
        }
        Suite::CONCRETE
            .into_iter()
            .filter(|s| self.suites.contains(s))
            .collect()
    }

    pub fn validate(&self) -> Result<()> {
        if self.suites.is_empty() {
            return Err(Error::config("suites", "at least one suite is required"));
        }
        for (name, v) in self.tolerances.entries() {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::config(
                    format!("tolerances.{name}"),
                    format!("must be positive, got {v}"),
                ));
            }
        }
        let p = &self.params;
        let suites = self.selected_suites();
        let needs = |s: Suite| suites.contains(&s);
        if (needs(Suite::Xop) || needs(Suite::Theorem)) && p.k.is_empty() {
            return Err(Error::config("params.k", "must not be empty"));
        }
        if (needs(Suite::Xop) || needs(Suite::Theorem)) && p.jacobi.is_empty() {
            return Err(Error::config("params.jacobi", "must not be empty"));
        }
        if (needs(Suite::Spectra) || needs(Suite::Susy)) && p.l.is_empty() {
            return Err(Error::config("params.l", "must not be empty"));
        }
        if (needs(Suite::Spectra) || needs(Suite::Susy)) && p.scarf.is_empty() {
            return Err(Error::config("params.scarf", "must not be empty"));
        }
        for (i, k) in p.k.iter().enumerate() {
            XFamilySpec::x1_laguerre(k.0.clone())
                .validate()
                .map_err(|e| Error::config(format!("params.k[{i}]"), e.to_string()))?;
        }
        for (i, pair) in p.jacobi.iter().enumerate() {
            XFamilySpec::Jacobi {
                alpha: pair.alpha.0.clone(),
                beta: pair.beta.0.clone(),
            }
            .validate()
            .map_err(|e| Error::config(format!("params.jacobi[{i}]"), e.to_string()))?;
        }
        for (i, s) in p.scarf.iter().enumerate() {
            let preset = Preset::Scarf {
                a: s.a,
                b: s.b,
                alpha: s.alpha,
            };
            preset
                .validate()
                .and_then(|_| preset.scarf_pole().map(|_| ()))
                .map_err(|e| Error::config(format!("params.scarf[{i}]"), e.to_string()))?;
        }
        if let Some(i) = p.xj.iter().position(|&j| j < 2) {
            return Err(Error::config(
                format!("params.xj[{i}]"),
                "codimensions here must be at least 2",
            ));
        }
        if p.max_degree == 0 {
            return Err(Error::config("params.max_degree", "must be at least 1"));
        }
        if p.exact_max_degree == 0 {
            return Err(Error::config(
                "params.exact_max_degree",
                "must be at least 1",
            ));
        }
        for (name, n) in [
            ("grid.spectrum_n", self.grid.spectrum_n),
            ("grid.rayleigh_n", self.grid.rayleigh_n),
            ("grid.operator_n", self.grid.operator_n),
            ("grid.intertwine_n", self.grid.intertwine_n),
        ] {
            if n < MIN_INTERIOR {
                return Err(Error::config(
                    name,
                    format!("needs at least {MIN_INTERIOR} interior points"),
                ));
            }
        }
        Ok(())
    }
}

/// Dotted path of the offending field. Serde reports missing and unknown
/// keys against their parent, so the key name is appended from the message.
fn error_field(path: &str, message: &str) -> String {
    let key = ["missing field `", "unknown field `"]
        .iter()
        .find_map(|p| message.split(p).nth(1))
        .and_then(|rest| rest.split('`').next());
    match (path, key) {
        (".", Some(k)) => k.to_string(),
        (".", None) => "config".to_string(),
        (p, Some(k)) if !p.ends_with(k) => format!("{p}.{k}"),
        (p, _) => p.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn arbitrary_valid_configs_round_trip(
            ks in prop::collection::vec((1i64..40, 1i64..6), 1..4),
            ls in prop::collection::vec(0u32..5, 1..3),
            theorem in 1e-14f64..1.0,
            seed in any::<u64>(),
            n in 16usize..5000,
        ) {
            let mut cfg = VerificationConfig::with_suites(vec![Suite::All]);
            cfg.params.k = ks.iter().map(|&(p, q)| Exact(rat(p, q))).collect();
            cfg.params.l = ls;
            cfg.tolerances.theorem = theorem;
            cfg.grid.seed = seed;
            cfg.grid.spectrum_n = n;
            prop_assert!(cfg.validate().is_ok());
            let back = VerificationConfig::from_json(&serde_json::to_string(&cfg).unwrap()).unwrap();
            prop_assert_eq!(back, cfg);
        }
    }

    #[test]
    fn round_trips_losslessly() {
        let cfg = VerificationConfig::with_suites(vec![Suite::Xop, Suite::Susy]);
        let text = serde_json::to_string_pretty(&cfg).unwrap();
        let back = VerificationConfig::from_json(&text).unwrap();
        assert_eq!(cfg, back);
        assert_eq!(serde_json::to_string_pretty(&back).unwrap(), text);
    }

    #[test]
    fn minimal_config_uses_defaults() {
        let cfg = VerificationConfig::from_json(r#"{"suites": ["all"]}"#).unwrap();
        assert_eq!(cfg.selected_suites(), Suite::CONCRETE.to_vec());
        assert_eq!(cfg.params.k.len(), 3);
    }

    #[test]
    fn errors_name_the_field() {
        let field = |text: &str| match VerificationConfig::from_json(text) {
            Err(Error::Config { field, .. }) => field,
            other => panic!("{other:?}"),
        };
        assert_eq!(field(r#"{"suites": []}"#), "suites");
        assert_eq!(
            field(r#"{"suites": ["xop"], "tolerances": {"theorem": -1}}"#),
            "tolerances.theorem"
        );
        assert_eq!(
            field(r#"{"suites": ["xop"], "params": {"k": ["1", "-2"]}}"#),
            "params.k[1]"
        );
        assert_eq!(field(r#"{"suites": ["xop"], "bogus": 1}"#), "bogus");
        assert_eq!(field(r#"{"params": {}}"#), "suites");
        assert_eq!(
            field(r#"{"suites": ["spectra"], "grid": {"spectrum_n": 3}}"#),
            "grid.spectrum_n"
        );
        assert_eq!(
            field(r#"{"suites": ["xop"], "params": {"k": ["x/y"]}}"#),
            "params.k[0]"
        );
        assert_eq!(
            field(r#"{"suites": ["xop"], "grid": {"seed": "s"}}"#),
            "grid.seed"
        );
        assert_eq!(field("not json"), "config");
        assert_eq!(
            field(r#"{"suites": ["xop"], "params": {"scarf": [{"A": 3, "B": 1}]}}"#),
            "params.scarf[0].alpha"
        );
    }

    #[test]
    fn error_exit_code_is_two() {
        let e = VerificationConfig::from_json(r#"{"suites": []}"#).unwrap_err();
        assert_eq!(e.exit_code(), 2);
    }
}
