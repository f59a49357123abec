//! Superpotentials: analytic closures or values sampled on a grid.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::solver::{Grid, GridFunction};

/// Where a superpotential came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// The printed candidate `-l/x - 1/2 - 1/(x+k)`.
    #[serde(rename = "paper-eq-imp")]
    PrintedCandidate,
    /// `-ψ₀'/ψ₀` of a sampled ground state.
    GroundStateDerived,
    /// Built so that its partners are exactly a classical and an extended potential.
    OperatorDerived,
    User,
}

/// How the variable `x` of the printed candidate relates to the radius `r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ImpReading {
    /// `W(r) = w(r)`.
    Literal,
    /// `W(r) = w(ξ)` with `ξ = r²/2`.
    Composed,
    /// `W(r) = r·w(ξ)`, i.e. `d/dξ + w` rewritten as `(1/r)(d/dr + r w)`.
    ChainRule,
    /// As [`ImpReading::ChainRule`] with `l/2` in place of `l`, which makes the
    /// candidate coincide with the operator-derived oscillator superpotential.
    ChainRuleHalfL,
}

impl ImpReading {
    pub const ALL: [ImpReading; 4] = [
        ImpReading::Literal,
        ImpReading::Composed,
        ImpReading::ChainRule,
        ImpReading::ChainRuleHalfL,
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            ImpReading::Literal => "literal",
            ImpReading::Composed => "composed",
            ImpReading::ChainRule => "chain-rule",
            ImpReading::ChainRuleHalfL => "chain-rule-half-l",
        }
    }
}

type WFn = Arc<dyn Fn(f64) -> (f64, f64) + Send + Sync>;

#[derive(Clone)]
enum Repr {
    Analytic(WFn),
    Sampled {
        grid: Grid,
        w: Vec<f64>,
        dw: Vec<f64>,
    },
}

/// `W` together with `W'`.
#[derive(Clone)]
pub struct Superpotential {
    label: String,
    provenance: Provenance,
    repr: Repr,
}

impl fmt::Debug for Superpotential {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Superpotential")
            .field("label", &self.label)
            .field("provenance", &self.provenance)
            .field("sampled", &self.is_sampled())
            .finish()
    }
}

impl Superpotential {
    /// `f(x)` must return `(W(x), W'(x))`.
    pub fn analytic(
        label: impl Into<String>,
        provenance: Provenance,
        f: impl Fn(f64) -> (f64, f64) + Send + Sync + 'static,
    ) -> Self {
        Superpotential {
            label: label.into(),
            provenance,
            repr: Repr::Analytic(Arc::new(f)),
        }
    }

    pub fn user(
        label: impl Into<String>,
        f: impl Fn(f64) -> (f64, f64) + Send + Sync + 'static,
    ) -> Self {
        Self::analytic(label, Provenance::User, f)
    }

    pub fn sampled(
        label: impl Into<String>,
        provenance: Provenance,
        w: GridFunction,
        dw: GridFunction,
    ) -> Result<Self> {
        if w.grid != dw.grid {
            return Err(Error::GridMismatch);
        }
        Ok(Superpotential {
            label: label.into(),
            provenance,
            repr: Repr::Sampled {
                grid: w.grid,
                w: w.values,
                dw: dw.values,
            },
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn is_sampled(&self) -> bool {
        matches!(self.repr, Repr::Sampled { .. })
    }

    /// `(W(x), W'(x))`. Sampled superpotentials interpolate linearly between
    /// their nodes and refuse points outside them.
    pub fn eval(&self, x: f64) -> Result<(f64, f64)> {
        match &self.repr {
            Repr::Analytic(f) => Ok(f(x)),
            Repr::Sampled { grid, w, dw } => {
                let t = (x - grid.a) / grid.h() - 1.0;
                let last = (grid.n - 1) as f64;
                if !(t >= -1e-9 && t <= last + 1e-9) {
                    return Err(Error::invalid(format!(
                        "x = {x} is outside the sampled range [{}, {}]",
                        grid.x(0),
                        grid.x(grid.n - 1)
                    )));
                }
                let i = (t.floor().max(0.0) as usize).min(grid.n - 2);
                let frac = (t - i as f64).clamp(0.0, 1.0);
                let lerp = |v: &[f64]| v[i] + frac * (v[i + 1] - v[i]);
                Ok((lerp(w), lerp(dw)))
            }
        }
    }

    /// `W` and `W'` at the interior nodes of `grid`.
    pub fn sample(&self, grid: &Grid) -> Result<(Vec<f64>, Vec<f64>)> {
        let (w, dw) = match &self.repr {
            Repr::Analytic(f) => grid.nodes().into_iter().map(|x| f(x)).unzip(),
            Repr::Sampled { grid: own, w, dw } => {
                if own != grid {
                    return Err(Error::GridMismatch);
                }
                (w.clone(), dw.clone())
            }
        };
        if let Some(i) = (0..grid.n).find(|&i| !w[i].is_finite() || !dw[i].is_finite()) {
            return Err(Error::NonFinitePotential {
                index: i,
                x: grid.x(i),
            });
        }
        Ok((w, dw))
    }

    /// `W(r) = -l/r - r/2 - 2r/(r²+2l+1)`. Its partners are the classical
    /// oscillator with angular momentum `l-1` and the extended oscillator with
    /// `l`, both shifted by the same constant (see
    /// [`oscillator_factorization_energy`]).
    pub fn oscillator_extension(l: u32) -> Self {
        let lf = l as f64;
        let c = 2.0 * lf + 1.0;
        Self::analytic(
            format!("oscillator l={l}"),
            Provenance::OperatorDerived,
            move |r| {
                let q = r * r + c;
                let w = -lf / r - r / 2.0 - 2.0 * r / q;
                let dw = lf / (r * r) - 0.5 - 2.0 * (c - r * r) / (q * q);
                (w, dw)
            },
        )
    }

    /// `W = α[(s-½) sec u - (λ+½) tan u - cos u/(sin u - b)]` with `u = αx`,
    /// `s = A/α`, `λ = B/α` and `b = (2s-1)/(2λ)`. Its partners are the
    /// classical Scarf potential with `(A, B+α)` and the extended one with `(A, B)`.
    pub fn scarf_extension(a: f64, b: f64, alpha: f64) -> Result<Self> {
        if !(alpha > 0.0 && b > 0.0 && a > 0.0) {
            return Err(Error::invalid("scarf superpotential needs A, B, alpha > 0"));
        }
        let (s, lam) = (a / alpha, b / alpha);
        let pole = (2.0 * s - 1.0) / (2.0 * lam);
        if pole.abs() <= 1.0 {
            return Err(Error::PoleInDomain { location: pole });
        }
        Ok(Self::analytic(
            format!("scarf A={a} B={b} alpha={alpha}"),
            Provenance::OperatorDerived,
            move |x| {
                let u = alpha * x;
                let (sn, cs) = u.sin_cos();
                let (sec, tan) = (1.0 / cs, sn / cs);
                let q = sn - pole;
                let w = alpha * ((s - 0.5) * sec - (lam + 0.5) * tan - cs / q);
                let dw = alpha
                    * alpha
                    * ((s - 0.5) * sec * tan - (lam + 0.5) * sec * sec
                        + (1.0 - pole * sn) / (q * q));
                (w, dw)
            },
        ))
    }

    /// The printed candidate `w(x) = -l/x - 1/2 - 1/(x+k)` under one reading
    /// of its variable.
    pub fn imp_candidate(l: u32, k: f64, reading: ImpReading) -> Self {
        let lf = match reading {
            ImpReading::ChainRuleHalfL => l as f64 / 2.0,
            _ => l as f64,
        };
        let w = move |x: f64| -lf / x - 0.5 - 1.0 / (x + k);
        let dw = move |x: f64| lf / (x * x) + 1.0 / ((x + k) * (x + k));
        let label = format!("candidate l={l} k={k} ({})", reading.tag());
        Self::analytic(
            label,
            Provenance::PrintedCandidate,
            move |r| match reading {
                ImpReading::Literal => (w(r), dw(r)),
                ImpReading::Composed => {
                    let xi = r * r / 2.0;
                    (w(xi), r * dw(xi))
                }
                ImpReading::ChainRule | ImpReading::ChainRuleHalfL => {
                    let xi = r * r / 2.0;
                    (r * w(xi), w(xi) + r * r * dw(xi))
                }
            },
        )
    }
}

/// `E` such that `W² - W' + E` is exactly the classical oscillator with
/// angular momentum `l-1`; then `W² + W' + E` is the extended oscillator with
/// `l` minus one.
pub fn oscillator_factorization_energy(l: u32) -> f64 {
    -(l as f64 + 2.5)
}

/// `E` such that `W² - W' + E` is exactly the classical Scarf potential with
/// `(A, B+α)`; `W² + W' + E` is then the extended Scarf potential with `(A, B)`.
pub fn scarf_factorization_energy(a: f64, b: f64, alpha: f64) -> f64 {
    -(a * a - (b - alpha / 2.0).powi(2))
}

/// First derivative by centered differences, second-order one-sided at both ends.
pub fn grid_derivative(values: &[f64], h: f64) -> Vec<f64> {
    let n = values.len();
    if n < 3 {
        return vec![0.0; n];
    }
    let mut d = Vec::with_capacity(n);
    d.push((-3.0 * values[0] + 4.0 * values[1] - values[2]) / (2.0 * h));
    for i in 1..n - 1 {
        d.push((values[i + 1] - values[i - 1]) / (2.0 * h));
    }
    d.push((3.0 * values[n - 1] - 4.0 * values[n - 2] + values[n - 3]) / (2.0 * h));
    d
}

/// `W = -ψ₀'/ψ₀` by finite differences, with `W'` differenced again.
///
/// Fails if `ψ₀` vanishes or changes sign at a node.
pub fn superpotential_from_ground_state(psi0: &GridFunction) -> Result<Superpotential> {
    let sign = psi0.values.first().copied().unwrap_or(0.0).signum();
    if let Some(i) = psi0.values.iter().position(|v| !(v * sign > 0.0)) {
        return Err(Error::NodeInGroundState {
            index: i,
            x: psi0.grid.x(i),
        });
    }
    let h = psi0.grid.h();
    let dpsi = grid_derivative(&psi0.values, h);
    let w: Vec<f64> = dpsi.iter().zip(&psi0.values).map(|(d, p)| -d / p).collect();
    let dw = grid_derivative(&w, h);
    Superpotential::sampled(
        "ground state",
        Provenance::GroundStateDerived,
        GridFunction::new(psi0.grid, w)?,
        GridFunction::new(psi0.grid, dw)?,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn numeric_derivative(w: &Superpotential, x: f64) -> f64 {
        let h = 1e-5;
        (w.eval(x + h).unwrap().0 - w.eval(x - h).unwrap().0) / (2.0 * h)
    }

    #[test]
    fn analytic_derivatives_match_differences() {
        let ws = [
            Superpotential::oscillator_extension(2),
            Superpotential::scarf_extension(3.0, 1.0, 1.0).unwrap(),
            Superpotential::imp_candidate(1, 1.5, ImpReading::Literal),
            Superpotential::imp_candidate(1, 1.5, ImpReading::Composed),
            Superpotential::imp_candidate(1, 1.5, ImpReading::ChainRule),
            Superpotential::imp_candidate(1, 1.5, ImpReading::ChainRuleHalfL),
        ];
        for w in &ws {
            for x in [0.3, 0.7, 1.2] {
                let (_, dw) = w.eval(x).unwrap();
                let fd = numeric_derivative(w, x);
                assert!(
                    (dw - fd).abs() < 1e-7 * (1.0 + dw.abs()),
                    "{w:?} at {x}: {dw} vs {fd}"
                );
            }
        }
    }

    #[test]
    fn candidate_value_at_one() {
        let w = Superpotential::imp_candidate(0, 1.0, ImpReading::Literal);
        let (v, dv) = w.eval(1.0).unwrap();
        assert_eq!(v, -1.0);
        assert_eq!(dv, 0.25);
    }

    #[test]
    fn half_l_chain_rule_candidate_is_the_operator_w() {
        for l in 0..4 {
            let op = Superpotential::oscillator_extension(l);
            let imp = Superpotential::imp_candidate(l, l as f64 + 0.5, ImpReading::ChainRuleHalfL);
            for r in [0.2, 1.0, 3.7] {
                let (a, b) = (op.eval(r).unwrap(), imp.eval(r).unwrap());
                assert!((a.0 - b.0).abs() < 1e-13 && (a.1 - b.1).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn scarf_rejects_pole_inside() {
        assert!(matches!(
            Superpotential::scarf_extension(1.0, 2.0, 1.0),
            Err(Error::PoleInDomain { .. })
        ));
    }

    #[test]
    fn gaussian_ground_state_gives_linear_w() {
        let g = Grid::new(-4.0, 4.0, 8000).unwrap();
        let psi = GridFunction::from_fn(g, |x| (-x * x / 2.0).exp()).unwrap();
        let w = superpotential_from_ground_state(&psi).unwrap();
        let (vals, dvals) = w.sample(&g).unwrap();
        let h = g.h();
        for (i, x) in g.nodes().into_iter().enumerate() {
            assert!((vals[i] - x).abs() < 2.0 * h * h * (1.0 + x * x), "{x}");
            // W' near the ends differences the one-sided values of W
            if i > 1 && i + 2 < g.n {
                assert!((dvals[i] - 1.0).abs() < 1e-4, "{x}");
            }
        }
    }

    #[test]
    fn node_is_rejected() {
        let g = Grid::new(-1.0, 2.0, 99).unwrap();
        let psi = GridFunction::from_fn(g, |x| x).unwrap();
        assert!(matches!(
            superpotential_from_ground_state(&psi),
            Err(Error::NodeInGroundState { .. })
        ));
    }

    #[test]
    fn sampled_rejects_other_grids_and_interpolates() {
        let g = Grid::new(0.0, 1.0, 99).unwrap();
        let w = Superpotential::sampled(
            "lin",
            Provenance::User,
            GridFunction::from_fn(g, |x| 2.0 * x).unwrap(),
            GridFunction::from_fn(g, |_| 2.0).unwrap(),
        )
        .unwrap();
        assert!(matches!(w.sample(&g.refined(2)), Err(Error::GridMismatch)));
        let (v, _) = w.eval(0.505).unwrap();
        assert!((v - 1.01).abs() < 1e-12);
        assert!(w.eval(0.0).is_err());
    }
}
