// Rationally extended potentials, their closed-form states, and the
// quotient identity they rest on.

use xop::polycore::int;
use xop::potentials::{
    closed_form_eigenstate, quotient_identity_check, xj_quotient_identity_check, PotentialSpec,
    Preset, QuotientConvention, StateKind,
};
use xop::solver::{discretize, rayleigh_quotient, Grid};
use xop::xop::x1_laguerre_op_route;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let presets = [
        Preset::Oscillator3d { l: 1 },
        Preset::Coulomb { l: 0 },
        Preset::Morse {
            a: 6.0,
            b: 1.0,
            alpha: 1.0,
        },
        Preset::Scarf {
            a: 3.0,
            b: 1.0,
            alpha: 1.0,
        },
    ];
    for p in presets {
        let state = closed_form_eigenstate(&p, 1, StateKind::Exceptional)?;
        let (a, b) = p.default_domain(3)?;
        let grid = Grid::new(a, b, 20_000)?;
        let spec = PotentialSpec::extended(p, 1);
        let t = discretize(|x| spec.eval(x), &grid)?;
        let rq = rayleigh_quotient(&t, &state.sample(&grid)?)?;
        println!(
            "{:<32} level 1: E = {:<8} Rayleigh quotient {rq:.6}  ({}, {})",
            p.label(),
            state.energy,
            state.prefactor,
            state.change_of_variable
        );
    }

    let k = int(2);
    let grid = Grid::new(0.01, 30.0, 3000)?;
    let f = x1_laguerre_op_route(2, &k)?;
    for conv in [
        QuotientConvention::Consistent,
        QuotientConvention::AsPrinted,
    ] {
        println!(
            "quotient identity, {conv:?}: {:.2e}",
            quotient_identity_check(&f, &k, &grid, conv)?
        );
    }
    let rep = xj_quotient_identity_check(&k, 2, &int(3), &Grid::new(0.0, 1.6, 400)?)?;
    println!(
        "codimension 2 quotient residual {:.3} (best constant {:.3})",
        rep.consistent, rep.best_residual
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
