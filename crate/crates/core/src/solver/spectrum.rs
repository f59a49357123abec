//! Spectra of grid Hamiltonians and level mappings between two of them.

use serde::{Deserialize, Serialize};

use super::grid::{discretize, Grid, GridFunction};
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Level {
    #[serde(rename = "E")]
    pub energy: f64,
    pub residual: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatchedPair {
    pub a_index: usize,
    pub b_index: usize,
    pub a_energy: f64,
    pub b_energy: f64,
    pub diff: f64,
}

/// Which side's lowest level went unmatched, if any.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MissingGround {
    None,
    A,
    B,
    Both,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LevelMapping {
    pub tol: f64,
    pub pairs: Vec<MatchedPair>,
    pub unmatched_a: Vec<usize>,
    pub unmatched_b: Vec<usize>,
    pub max_diff: f64,
    pub ground_state_unmatched: MissingGround,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub preset: String,
    pub params: serde_json::Value,
    pub grid: Grid,
    pub levels: Vec<Level>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mapping: Option<LevelMapping>,
}

impl SpectrumReport {
    pub fn energies(&self) -> Vec<f64> {
        self.levels.iter().map(|l| l.energy).collect()
    }
}

/// Lowest `count` levels of `-d²/dx² + V` on `grid`, with eigenvectors.
pub fn solve_levels(
    potential: impl Fn(f64) -> f64,
    grid: &Grid,
    count: usize,
) -> Result<(Vec<Level>, Vec<GridFunction>)> {
    let t = discretize(potential, grid)?;
    let pairs = t.eigen_lowest(count)?;
    let mut levels = Vec::with_capacity(count);
    let mut states = Vec::with_capacity(count);
    for p in pairs {
        levels.push(Level {
            energy: p.value,
            residual: p.residual,
        });
        let scale = 1.0 / grid.h().sqrt();
        states.push(GridFunction::new(
            *grid,
            p.vector.iter().map(|v| v * scale).collect(),
        )?);
    }
    Ok((levels, states))
}

/// Greedy nearest matching: candidate pairs within `tol` are accepted in
/// order of increasing energy difference, each level used at most once.
pub fn spectrum_compare(a: &[f64], b: &[f64], tol: f64) -> LevelMapping {
    let mut candidates = Vec::new();
    for (i, ea) in a.iter().enumerate() {
        for (j, eb) in b.iter().enumerate() {
            let d = (ea - eb).abs();
            if d <= tol {
                candidates.push((d, i, j));
            }
        }
    }
    candidates.sort_by(|x, y| x.0.total_cmp(&y.0).then(x.1.cmp(&y.1)).then(x.2.cmp(&y.2)));
    let mut used_a = vec![false; a.len()];
    let mut used_b = vec![false; b.len()];
    let mut pairs = Vec::new();
    for (d, i, j) in candidates {
        if used_a[i] || used_b[j] {
            continue;
        }
        used_a[i] = true;
        used_b[j] = true;
        pairs.push(MatchedPair {
            a_index: i,
            b_index: j,
            a_energy: a[i],
            b_energy: b[j],
            diff: d,
        });
    }
    pairs.sort_by_key(|p| p.b_index);
    let unmatched_a: Vec<usize> = (0..a.len()).filter(|&i| !used_a[i]).collect();
    let unmatched_b: Vec<usize> = (0..b.len()).filter(|&j| !used_b[j]).collect();
    let lowest_unmatched = |e: &[f64], used: &[bool]| {
        e.iter()
            .enumerate()
            .min_by(|x, y| x.1.total_cmp(y.1))
            .is_some_and(|(i, _)| !used[i])
    };
    let ground_state_unmatched = match (lowest_unmatched(a, &used_a), lowest_unmatched(b, &used_b))
    {
        (false, false) => MissingGround::None,
        (true, false) => MissingGround::A,
        (false, true) => MissingGround::B,
        (true, true) => MissingGround::Both,
    };
    let max_diff = pairs.iter().fold(0.0, |m: f64, p| m.max(p.diff));
    LevelMapping {
        tol,
        pairs,
        unmatched_a,
        unmatched_b,
        max_diff,
        ground_state_unmatched,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identical_spectra_map_to_identity() {
        let e = [1.5, 3.5, 5.5];
        let m = spectrum_compare(&e, &e, 1e-8);
        assert!(m.unmatched_a.is_empty() && m.unmatched_b.is_empty());
        assert!(m.pairs.iter().all(|p| p.a_index == p.b_index));
        assert_eq!(m.max_diff, 0.0);
        assert_eq!(m.ground_state_unmatched, MissingGround::None);
    }

    #[test]
    fn removed_ground_state_shifts_mapping() {
        let a = [1.5, 3.5, 5.5, 7.5];
        let b = [3.5, 5.5, 7.5];
        let m = spectrum_compare(&a, &b, 1e-8);
        assert_eq!(m.unmatched_a, vec![0]);
        assert!(m.unmatched_b.is_empty());
        assert!(m.pairs.iter().all(|p| p.a_index == p.b_index + 1));
        assert_eq!(m.ground_state_unmatched, MissingGround::A);
    }

    #[test]
    fn report_json_shape() {
        let r = SpectrumReport {
            preset: "oscillator3d".into(),
            params: serde_json::json!({"l": 0}),
            grid: Grid::new(0.0, 12.0, 100).unwrap(),
            levels: vec![Level {
                energy: 1.5,
                residual: 1e-12,
            }],
            mapping: None,
        };
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["grid"]["N"], 100);
        assert_eq!(v["levels"][0]["E"], 1.5);
        assert!(v.get("mapping").is_none());
        let back: SpectrumReport = serde_json::from_value(v).unwrap();
        assert_eq!(back, r);
    }
}
