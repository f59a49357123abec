// Gauss rules from recurrences, and integrals against the rational weights.

use xop::polycore::{int, FloatPoly};
use xop::quad::{
    golub_welsch, gram_matrix, max_normalized_off_diagonal, Integrator, Recurrence, WeightSpec,
};
use xop::xop::{exact_member, Route, XFamilySpec};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let rule = golub_welsch(&Recurrence::legendre(5), 5)?;
    println!("5-point Legendre nodes {:?}", rule.nodes);
    // exact through degree 9
    let x8 = rule.apply(|x| x.powi(8));
    println!("integral of x^8 over [-1,1]: {x8} (exact {})", 2.0 / 9.0);

    let lag = golub_welsch(&Recurrence::laguerre(12, 1.5), 12)?;
    println!("12-point Laguerre(k=1.5) total mass {}", lag.apply(|_| 1.0));

    let spec = XFamilySpec::x1_laguerre(int(1));
    let integrator = Integrator::new(spec.weight())?;
    let mass = integrator.integrate(|_| 1.0)?;
    println!(
        "mass of {}: {mass}",
        WeightSpec::X1Laguerre { k: 1.0 }.label()
    );

    let members = (1..=6)
        .map(|n| exact_member(&spec, n, Route::Operator).map(|p| FloatPoly::from(&p)))
        .collect::<Result<Vec<_>, _>>()?;
    let g = gram_matrix(&members, &integrator)?;
    println!(
        "largest normalized off-diagonal: {:.2e}",
        max_normalized_off_diagonal(&g)
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
