//! Preset potentials, their rational extensions and closed-form eigenstates.
//!
//! Units: `ħ = 2m = 1`, so every Hamiltonian is `-d²/dx² + V(x)`.

use std::f64::consts::FRAC_PI_2;

use serde::{Deserialize, Serialize};

use super::ve::{ve_jacobi_consistent, ve_laguerre};
use crate::error::{Error, Result};
use crate::polycore::rational::from_f64_decimal;
use crate::polycore::{int, jacobi_classical, laguerre_classical, rat, to_f64, Poly, Rational};
use crate::solver::{Grid, GridFunction};
use crate::xop::{apply_o_hat, x1_jacobi_op_route};

/// Distance by which the Scarf box is shrunk inside its singular ends.
pub const SCARF_EDGE: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "preset", rename_all = "lowercase")]
pub enum Preset {
    /// `r²/4 + l(l+1)/r²` on `r > 0`
    #[serde(rename = "oscillator3d")]
    Oscillator3d { l: u32 },
    /// `-2/r + l(l+1)/r²` on `r > 0`
    Coulomb { l: u32 },
    /// `A² + B²e^{-2αx} - 2B(A+α/2)e^{-αx}`
    Morse {
        #[serde(rename = "A")]
        a: f64,
        #[serde(rename = "B")]
        b: f64,
        alpha: f64,
    },
    /// `-A² + (A²+B²-Aα)sec²(αx) - B(2A-α)tan(αx)sec(αx)` on `|αx| < π/2`
    Scarf {
        #[serde(rename = "A")]
        a: f64,
        #[serde(rename = "B")]
        b: f64,
        alpha: f64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StateKind {
    Classical,
    Exceptional,
}

impl Preset {
    /// Looks a preset up by its registry id, using the parameters that apply.
    pub fn from_id(id: &str, l: u32, a: f64, b: f64, alpha: f64) -> Result<Self> {
        let p = match id {
            "oscillator3d" | "oscillator" => Preset::Oscillator3d { l },
            "coulomb" => Preset::Coulomb { l },
            "morse" => Preset::Morse { a, b, alpha },
            "scarf" => Preset::Scarf { a, b, alpha },
            other => {
                return Err(Error::invalid(format!(
                    "unknown preset {other:?} (expected one of {})",
                    REGISTRY.join(", ")
                )))
            }
        };
        p.validate()?;
        Ok(p)
    }

    pub fn id(&self) -> &'static str {
        match self {
            Preset::Oscillator3d { .. } => "oscillator3d",
            Preset::Coulomb { .. } => "coulomb",
            Preset::Morse { .. } => "morse",
            Preset::Scarf { .. } => "scarf",
        }
    }

    /// `oscillator3d(l=1)`, `scarf(A=3,B=1,alpha=1)`
    pub fn label(&self) -> String {
        match *self {
            Preset::Oscillator3d { l } | Preset::Coulomb { l } => format!("{}(l={l})", self.id()),
            Preset::Morse { a, b, alpha } | Preset::Scarf { a, b, alpha } => {
                format!("{}(A={a},B={b},alpha={alpha})", self.id())
            }
        }
    }

    pub fn params_json(&self) -> serde_json::Value {
        let mut v = serde_json::to_value(self).unwrap_or_default();
        if let Some(m) = v.as_object_mut() {
            m.remove("preset");
        }
        v
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            Preset::Oscillator3d { .. } | Preset::Coulomb { .. } => Ok(()),
            Preset::Morse { a, b, alpha } => {
                if !(a > 0.0 && b > 0.0 && alpha > 0.0) {
                    return Err(Error::invalid(format!(
                        "morse needs A, B, alpha > 0, got ({a}, {b}, {alpha})"
                    )));
                }
                Ok(())
            }
            Preset::Scarf { a, b, alpha } => {
                if !(alpha > 0.0 && a > b.abs()) {
                    return Err(Error::invalid(format!(
                        "scarf needs alpha > 0 and A > |B|, got ({a}, {b}, {alpha})"
                    )));
                }
                Ok(())
            }
        }
    }

    /// Whether the rational extension changes with the level it is built for.
    pub fn level_dependent(&self) -> bool {
        matches!(self, Preset::Coulomb { .. } | Preset::Morse { .. })
    }

    /// Number of bound levels, when finite.
    pub fn level_count(&self) -> Option<usize> {
        match *self {
            Preset::Morse { a, alpha, .. } => Some((a / alpha).ceil() as usize),
            _ => None,
        }
    }

    fn check_level(&self, level: usize) -> Result<()> {
        if let Some(n) = self.level_count() {
            if level >= n {
                return Err(Error::invalid(format!(
                    "{} has {n} bound levels; level {level} does not exist",
                    self.id()
                )));
            }
        }
        Ok(())
    }

    /// Energy of level `level`, shared by the classical and exceptional states.
    pub fn energy(&self, level: usize) -> Result<f64> {
        self.check_level(level)?;
        let n = level as f64;
        Ok(match *self {
            Preset::Oscillator3d { l } => 2.0 * n + l as f64 + 1.5,
            Preset::Coulomb { l } => {
                let big_n = n + l as f64 + 1.0;
                -1.0 / (big_n * big_n)
            }
            Preset::Morse { a, alpha, .. } => a * a - (a - n * alpha).powi(2),
            Preset::Scarf { a, alpha, .. } => (a + n * alpha).powi(2) - a * a,
        })
    }

    pub fn potential(&self, x: f64) -> f64 {
        match *self {
            Preset::Oscillator3d { l } => {
                let c = (l * (l + 1)) as f64;
                x * x / 4.0 + c / (x * x)
            }
            Preset::Coulomb { l } => {
                let c = (l * (l + 1)) as f64;
                -2.0 / x + c / (x * x)
            }
            Preset::Morse { a, b, alpha } => {
                let e = (-alpha * x).exp();
                a * a + b * b * e * e - 2.0 * b * (a + alpha / 2.0) * e
            }
            Preset::Scarf { a, b, alpha } => {
                let (s, c) = (alpha * x).sin_cos();
                let sec = 1.0 / c;
                -a * a + (a * a + b * b - a * alpha) * sec * sec
                    - b * (2.0 * a - alpha) * s * sec * sec
            }
        }
    }

    /// The variable the polynomials live in: `r²/2`, `2r/N`, `(2B/α)e^{-αx}` or `sin αx`.
    pub fn natural(&self, x: f64, level: usize) -> f64 {
        match *self {
            Preset::Oscillator3d { .. } => x * x / 2.0,
            Preset::Coulomb { l } => 2.0 * x / (level as f64 + l as f64 + 1.0),
            Preset::Morse { b, alpha, .. } => 2.0 * b / alpha * (-alpha * x).exp(),
            Preset::Scarf { alpha, .. } => (alpha * x).sin(),
        }
    }

    /// Laguerre parameter of the exceptional states at `level`.
    pub fn laguerre_k(&self, level: usize) -> Result<Option<Rational>> {
        Ok(match *self {
            Preset::Oscillator3d { l } => Some(rat(2 * l as i64 + 1, 2)),
            Preset::Coulomb { l } => Some(int(2 * l as i64 + 1)),
            Preset::Morse { a, alpha, .. } => {
                let s = from_f64_decimal(a)? / from_f64_decimal(alpha)?;
                Some(int(2) * (s - int(level as i64)))
            }
            Preset::Scarf { .. } => None,
        })
    }

    /// Jacobi parameters `(s-λ-1/2, s+λ-1/2)` of the Scarf states.
    pub fn jacobi_params(&self) -> Result<Option<(Rational, Rational)>> {
        Ok(match *self {
            Preset::Scarf { a, b, alpha } => {
                let al = from_f64_decimal(alpha)?;
                let s = from_f64_decimal(a)? / &al;
                let lam = from_f64_decimal(b)? / &al;
                let half = rat(1, 2);
                Some((&s - &lam - &half, &s + &lam - &half))
            }
            _ => None,
        })
    }

    /// Scarf pole `b = (2s-1)/(2λ)` of the exceptional states.
    pub fn scarf_pole(&self) -> Result<f64> {
        match *self {
            Preset::Scarf { a, b, alpha } => {
                if b == 0.0 {
                    return Err(Error::invalid("scarf extension needs B != 0"));
                }
                let pole = (2.0 * a / alpha - 1.0) / (2.0 * b / alpha);
                if pole.abs() <= 1.0 {
                    return Err(Error::PoleInDomain { location: pole });
                }
                Ok(pole)
            }
            _ => Err(Error::invalid(format!("{} has no Jacobi pole", self.id()))),
        }
    }

    /// The extension added to `V` so that the exceptional state of `level`
    /// is an eigenstate; `level` only matters for level-dependent presets.
    pub fn extension(&self, x: f64, level: usize) -> Result<f64> {
        Ok(match *self {
            Preset::Oscillator3d { l } => 2.0 * ve_laguerre(x * x / 2.0, l as f64 + 0.5, 1),
            Preset::Coulomb { l } => {
                let big_n = level as f64 + l as f64 + 1.0;
                2.0 / (big_n * x) * ve_laguerre(2.0 * x / big_n, 2.0 * l as f64 + 1.0, 1)
            }
            Preset::Morse { a, alpha, .. } => {
                self.check_level(level)?;
                let k = 2.0 * (a / alpha - level as f64);
                let y = self.natural(x, level);
                alpha * alpha * y * ve_laguerre(y, k, 1)
            }
            Preset::Scarf { alpha, .. } => {
                let pole = self.scarf_pole()?;
                alpha * alpha * ve_jacobi_consistent((alpha * x).sin(), pole)?
            }
        })
    }

    /// Working interval covering the lowest `levels` states.
    pub fn default_domain(&self, levels: usize) -> Result<(f64, f64)> {
        let top = levels.max(1) - 1;
        Ok(match *self {
            Preset::Oscillator3d { .. } => {
                let e = self.energy(top)?;
                (0.0, (2.0 * e.sqrt() + 8.0).max(12.0))
            }
            Preset::Coulomb { l } => {
                let big_n = (top + l as usize + 1) as f64;
                (0.0, big_n * (36.0 + 2.0 * big_n))
            }
            Preset::Morse { a, b, alpha } => {
                self.check_level(top)?;
                let s = a / alpha;
                let y_max = 4.0 * s + 80.0;
                let y_min = (-36.0 / (s - top as f64)).exp();
                let x_of = |y: f64| -(alpha * y / (2.0 * b)).ln() / alpha;
                (x_of(y_max), x_of(y_min))
            }
            Preset::Scarf { alpha, .. } => {
                let edge = FRAC_PI_2 / alpha - SCARF_EDGE;
                (-edge, edge)
            }
        })
    }
}

/// Registry ids accepted by [`Preset::from_id`].
pub const REGISTRY: [&str; 4] = ["oscillator3d", "coulomb", "morse", "scarf"];

/// A preset with or without its extension.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PotentialSpec {
    #[serde(flatten)]
    pub preset: Preset,
    pub extended: bool,
    /// Level the extension is built for (level-dependent presets only).
    #[serde(default)]
    pub level: usize,
    /// Constant added to the potential.
    #[serde(default)]
    pub shift: f64,
}

impl PotentialSpec {
    pub fn classical(preset: Preset) -> Self {
        PotentialSpec {
            preset,
            extended: false,
            level: 0,
            shift: 0.0,
        }
    }

    pub fn extended(preset: Preset, level: usize) -> Self {
        PotentialSpec {
            preset,
            extended: true,
            level,
            shift: 0.0,
        }
    }

    pub fn eval(&self, x: f64) -> f64 {
        let base = self.preset.potential(x) + self.shift;
        if self.extended {
            base + self.preset.extension(x, self.level).unwrap_or(f64::NAN)
        } else {
            base
        }
    }

    /// Fails early if the extension cannot be built for these parameters.
    pub fn validate(&self) -> Result<()> {
        self.preset.validate()?;
        if self.extended {
            let (a, b) = self.preset.default_domain(self.level + 1)?;
            self.preset.extension(0.5 * (a + b), self.level)?;
        }
        Ok(())
    }
}

/// A closed-form eigenstate: `prefactor × polynomial(variable)`, optionally
/// divided by the pole factor for the exceptional kind.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EigenstateClosedForm {
    pub preset: Preset,
    pub kind: StateKind,
    pub level: usize,
    pub energy: f64,
    pub polynomial: Poly,
    pub prefactor: String,
    pub change_of_variable: String,
    /// Pole of the exceptional denominator (`-k` or `b`) in the natural variable.
    pub pole: Option<f64>,
    #[serde(skip)]
    poly_f64: Vec<f64>,
    #[serde(skip)]
    exponents: (f64, f64),
}

impl EigenstateClosedForm {
    /// Value of the state at the physical coordinate `x`.
    pub fn eval(&self, x: f64) -> f64 {
        let v = self.preset.natural(x, self.level);
        let p = self.poly_f64.iter().rev().fold(0.0, |acc, c| acc * v + c);
        let (e1, e2) = self.exponents;
        let pre = match self.preset {
            Preset::Oscillator3d { .. } => x.powf(e1) * (-v / 2.0).exp(),
            Preset::Coulomb { .. } | Preset::Morse { .. } => v.powf(e1) * (-v / 2.0).exp(),
            Preset::Scarf { .. } => (1.0 - v).powf(e1) * (1.0 + v).powf(e2),
        };
        let den = match (self.kind, self.pole) {
            (StateKind::Exceptional, Some(pole)) => v - pole,
            _ => 1.0,
        };
        pre * p / den
    }

    pub fn sample(&self, grid: &Grid) -> Result<GridFunction> {
        GridFunction::from_fn(*grid, |x| self.eval(x))
    }
}

/// The classical or exceptional state of `level` for `preset`.
pub fn closed_form_eigenstate(
    preset: &Preset,
    level: usize,
    kind: StateKind,
) -> Result<EigenstateClosedForm> {
    preset.validate()?;
    let energy = preset.energy(level)?;
    let exceptional = kind == StateKind::Exceptional;
    let laguerre_member = |k: &Rational| {
        if exceptional {
            apply_o_hat(&laguerre_classical(level, &(k - int(1))), k)
        } else {
            laguerre_classical(level, k)
        }
    };
    let (polynomial, prefactor, cov, pole, exponents) = match *preset {
        Preset::Oscillator3d { l } => {
            let k = rat(2 * l as i64 + 1, 2);
            let pole = exceptional.then(|| -to_f64(&k));
            (
                laguerre_member(&k),
                format!("r^{} exp(-xi/2)", l + 1),
                "xi = r^2/2".to_string(),
                pole,
                (l as f64 + 1.0, 0.0),
            )
        }
        Preset::Coulomb { l } => {
            let k = int(2 * l as i64 + 1);
            let big_n = level + l as usize + 1;
            (
                laguerre_member(&k),
                format!("rho^{} exp(-rho/2)", l + 1),
                format!("rho = 2r/{big_n}"),
                exceptional.then(|| -to_f64(&k)),
                (l as f64 + 1.0, 0.0),
            )
        }
        Preset::Morse { b, alpha, .. } => {
            let k = preset
                .laguerre_k(level)?
                .ok_or_else(|| Error::invalid("morse without laguerre parameter"))?;
            let half_k = to_f64(&k) / 2.0;
            (
                laguerre_member(&k),
                format!("y^{half_k} exp(-y/2)"),
                format!("y = ({}/{}) exp(-{alpha} x)", 2.0 * b, alpha),
                exceptional.then(|| -to_f64(&k)),
                (half_k, 0.0),
            )
        }
        Preset::Scarf { a, b, alpha } => {
            let (ja, jb) = preset
                .jacobi_params()?
                .ok_or_else(|| Error::invalid("scarf without jacobi parameters"))?;
            let (s, lam) = (a / alpha, b / alpha);
            let (polynomial, pole) = if exceptional {
                (
                    x1_jacobi_op_route(level, &ja, &jb)?,
                    Some(preset.scarf_pole()?),
                )
            } else {
                (jacobi_classical(level, &ja, &jb), None)
            };
            (
                polynomial,
                format!("(1-z)^{} (1+z)^{}", (s - lam) / 2.0, (s + lam) / 2.0),
                format!("z = sin({alpha} x)"),
                pole,
                ((s - lam) / 2.0, (s + lam) / 2.0),
            )
        }
    };
    let poly_f64 = polynomial.to_f64_coeffs();
    Ok(EigenstateClosedForm {
        preset: *preset,
        kind,
        level,
        energy,
        polynomial,
        prefactor,
        change_of_variable: cov,
        pole,
        poly_f64,
        exponents,
    })
}

/// The extension as printed for each preset, in the preset's own variable:
/// `ξ = r²` (oscillator), `r` (Coulomb), `y` at level `n` (Morse), `z` (Scarf).
pub fn ve_preset(preset: &Preset, coordinate: f64, level: usize) -> Result<f64> {
    Ok(match *preset {
        Preset::Oscillator3d { l } => ve_laguerre(coordinate, (2 * l + 1) as f64 / 2.0, 1),
        Preset::Coulomb { l } => ve_laguerre(coordinate, (2 * l + 1) as f64, 1),
        Preset::Morse { a, alpha, .. } => {
            let shift = a / alpha - level as f64;
            if shift <= 0.0 {
                return Err(Error::PoleInDomain { location: -shift });
            }
            let q = coordinate + shift;
            1.0 / q - 2.0 * shift / (q * q)
        }
        Preset::Scarf { a, b, .. } => {
            let t = 2.0 * a - 1.0;
            if b == 0.0 || (t / (2.0 * b)).abs() <= 1.0 {
                return Err(Error::PoleInDomain {
                    location: t / (2.0 * b),
                });
            }
            let w = t - 2.0 * b * coordinate;
            a * t / w - (a * t * t - 4.0 * b * b) / (w * w)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::{discretize, hamiltonian_residual, rayleigh_quotient};

    fn presets() -> Vec<Preset> {
        vec![
            Preset::Oscillator3d { l: 0 },
            Preset::Oscillator3d { l: 1 },
            Preset::Oscillator3d { l: 2 },
            Preset::Coulomb { l: 0 },
            Preset::Coulomb { l: 1 },
            Preset::Morse {
                a: 5.0,
                b: 5.0,
                alpha: 1.0,
            },
            Preset::Scarf {
                a: 3.0,
                b: 1.0,
                alpha: 1.0,
            },
            Preset::Scarf {
                a: 4.0,
                b: 1.5,
                alpha: 0.5,
            },
        ]
    }

    #[test]
    fn printed_extension_values() {
        assert_eq!(
            ve_preset(&Preset::Oscillator3d { l: 0 }, 0.5, 0).unwrap(),
            0.0
        );
        assert_eq!(ve_preset(&Preset::Coulomb { l: 0 }, 1.0, 0).unwrap(), 0.0);
        for (a, b) in [(3.0, 1.0), (4.0, 0.5), (2.5, 1.7)] {
            let p = Preset::Scarf { a, b, alpha: 1.0 };
            let want = 4.0 * b * b / ((2.0 * a - 1.0) * (2.0 * a - 1.0));
            assert!((ve_preset(&p, 0.0, 0).unwrap() - want).abs() < 1e-14);
        }
        let m = Preset::Morse {
            a: 2.0,
            b: 1.0,
            alpha: 1.0,
        };
        assert!(matches!(
            ve_preset(&m, 1.0, 2),
            Err(Error::PoleInDomain { .. })
        ));
    }

    #[test]
    fn oscillator_ground_state() {
        let s = closed_form_eigenstate(&Preset::Oscillator3d { l: 0 }, 0, StateKind::Classical)
            .unwrap();
        assert_eq!(s.polynomial, Poly::one());
        assert_eq!(s.energy, 1.5);
        let e = closed_form_eigenstate(&Preset::Oscillator3d { l: 0 }, 0, StateKind::Exceptional)
            .unwrap();
        let v1 = Poly::linear(int(1), rat(3, 2));
        assert!(e.polynomial.ratio_to(&v1).is_some());
        assert_eq!(e.pole, Some(-0.5));
    }

    #[test]
    fn morse_energies() {
        let p = Preset::Morse {
            a: 5.0,
            b: 5.0,
            alpha: 1.0,
        };
        for n in 0..5 {
            assert_eq!(p.energy(n).unwrap(), 25.0 - (5.0 - n as f64).powi(2));
        }
        assert!(p.energy(5).is_err());
    }

    #[test]
    fn registry_round_trip() {
        for id in REGISTRY {
            let p = Preset::from_id(id, 1, 3.0, 1.0, 1.0).unwrap();
            assert_eq!(p.id(), id);
            let json = serde_json::to_string(&p).unwrap();
            assert_eq!(serde_json::from_str::<Preset>(&json).unwrap(), p);
        }
        assert!(Preset::from_id("hermite", 0, 1.0, 1.0, 1.0).is_err());
    }

    // Residual of the discrete Hamiltonian on the closed-form state at two
    // spacings; the ratio shows second-order convergence.
    fn residual(state: &EigenstateClosedForm, spec: &PotentialSpec, grid: &Grid) -> f64 {
        let t = discretize(|x| spec.eval(x), grid).unwrap();
        let psi = state.sample(grid).unwrap();
        hamiltonian_residual(&t, &psi, state.energy).unwrap()
    }

    #[test]
    fn closed_forms_solve_their_hamiltonians() {
        for p in presets() {
            for kind in [StateKind::Classical, StateKind::Exceptional] {
                for level in 0..3 {
                    let state = closed_form_eigenstate(&p, level, kind).unwrap();
                    let spec = match kind {
                        StateKind::Classical => PotentialSpec::classical(p),
                        StateKind::Exceptional => PotentialSpec::extended(p, level),
                    };
                    let (a, b) = p.default_domain(level + 1).unwrap();
                    let g = Grid::new(a, b, 4000).unwrap();
                    let r1 = residual(&state, &spec, &g);
                    let r2 = residual(&state, &spec, &g.refined(2));
                    let ratio = r1 / r2;
                    assert!(
                        r2 < 1e-3 * (1.0 + state.energy.abs()),
                        "{p:?} {kind:?} {level}: {r2}"
                    );
                    assert!(
                        ratio > 3.0 && ratio < 5.0,
                        "{p:?} {kind:?} {level}: ratio {ratio}"
                    );
                }
            }
        }
    }

    #[test]
    fn exceptional_oscillator_ground_rayleigh() {
        let p = Preset::Oscillator3d { l: 0 };
        let state = closed_form_eigenstate(&p, 0, StateKind::Exceptional).unwrap();
        let g = Grid::new(0.0, 12.0, 100_000).unwrap();
        let t = discretize(|x| PotentialSpec::extended(p, 0).eval(x), &g).unwrap();
        let rq = rayleigh_quotient(&t, &state.sample(&g).unwrap()).unwrap();
        assert!((rq - 1.5).abs() / 1.5 < 1e-6, "{rq}");
    }

    #[test]
    fn states_are_square_integrable() {
        for p in presets() {
            let (a, b) = p.default_domain(3).unwrap();
            let state = closed_form_eigenstate(&p, 2, StateKind::Exceptional).unwrap();
            let n1 = state
                .sample(&Grid::new(a, b, 20_000).unwrap())
                .unwrap()
                .norm();
            let span = b - a;
            let wider = match p {
                Preset::Scarf { .. } => (a, b),
                Preset::Morse { .. } => (a - 0.5 * span, b + 0.5 * span),
                _ => (a, b + 0.5 * span),
            };
            let g2 = Grid::new(wider.0, wider.1, 30_000).unwrap();
            let n2 = state.sample(&g2).unwrap().norm();
            assert!(n1.is_finite() && n1 > 0.0);
            assert!((n1 - n2).abs() / n1 < 1e-3, "{p:?}: {n1} vs {n2}");
        }
    }
}
