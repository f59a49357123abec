// A superpotential for the extended oscillator, its partners, and the
// first-order operator carrying classical states onto exceptional ones.

use xop::potentials::{closed_form_eigenstate, Preset, StateKind};
use xop::solver::Grid;
use xop::susy::{
    commutator_residual, intertwine_check, oscillator_factorization_energy, partner_potentials,
    random_smooth_states, Superpotential,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let l = 1;
    let w = Superpotential::oscillator_extension(l);
    let pair = partner_potentials(&w, oscillator_factorization_energy(l));
    println!("W = {}, E = {}", w.label(), pair.energy);
    for x in [0.5, 1.0, 2.0, 4.0] {
        println!(
            "  x={x}: V+ = {:.6}  V- = {:.6}",
            pair.v_plus(x)?,
            pair.v_minus(x)?
        );
    }

    let grid = Grid::new(0.0, 14.0, 20_000)?;
    let targets = (0..4)
        .map(|m| {
            closed_form_eigenstate(&Preset::Oscillator3d { l }, m, StateKind::Exceptional)?
                .sample(&grid)
        })
        .collect::<Result<Vec<_>, _>>()?;
    for nu in 0..4 {
        let src =
            closed_form_eigenstate(&Preset::Oscillator3d { l: l - 1 }, nu, StateKind::Classical)?
                .sample(&grid)?;
        let res: Vec<String> = targets
            .iter()
            .map(|t| intertwine_check(&w, &src, t).map(|r| format!("{:.1e}", r.rel_residual)))
            .collect::<Result<_, _>>()?;
        println!(
            "  classical level {nu} against exceptional levels 0..4: {}",
            res.join("  ")
        );
    }

    let g = Grid::new(0.5, 10.0, 20_000)?;
    for (i, psi) in random_smooth_states(&g, 3, 7)?.iter().enumerate() {
        println!(
            "  commutator on random state {i}: {:.2e}",
            commutator_residual(&w, psi)?
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
