// Grid spectra of a classical potential and its extension, and the level
// mapping between them.

use xop::potentials::{PotentialSpec, Preset};
use xop::solver::{solve_levels, spectrum_compare, Grid};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for p in [
        Preset::Oscillator3d { l: 0 },
        Preset::Scarf {
            a: 3.0,
            b: 1.0,
            alpha: 1.0,
        },
    ] {
        let (a, b) = p.default_domain(5)?;
        let grid = Grid::new(a, b, 6000)?;
        let classical = PotentialSpec::classical(p);
        let extended = PotentialSpec::extended(p, 0);
        let (c, _) = solve_levels(|x| classical.eval(x), &grid, 4)?;
        let (e, _) = solve_levels(|x| extended.eval(x), &grid, 4)?;
        let ce: Vec<f64> = c.iter().map(|l| l.energy).collect();
        let ee: Vec<f64> = e.iter().map(|l| l.energy).collect();
        let exact: Vec<f64> = (0..4).map(|n| p.energy(n)).collect::<Result<_, _>>()?;
        println!("{}", p.label());
        println!("  exact     {exact:?}");
        println!("  classical {ce:?}");
        println!("  extended  {ee:?}");
        let m = spectrum_compare(&ce, &ee, 1e-3 * exact[3].abs().max(1.0));
        println!(
            "  matched {} pairs, max diff {:.1e}, unmatched ground state: {:?}",
            m.pairs.len(),
            m.max_diff,
            m.ground_state_unmatched
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
