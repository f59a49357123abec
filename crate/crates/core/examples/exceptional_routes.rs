// Three independent constructions of the same exceptional family.

use xop::polycore::{int, rat};
use xop::quad::Integrator;
use xop::xop::{
    coefficient_rel_diff, exact_member, gram_schmidt_family, xj_admissible_degrees, Route,
    XFamilySpec,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let specs = [
        XFamilySpec::x1_laguerre(int(2)),
        XFamilySpec::Jacobi {
            alpha: rat(1, 2),
            beta: rat(3, 2),
        },
    ];
    for spec in &specs {
        let integrator = Integrator::new(spec.weight())?;
        let gs = gram_schmidt_family(spec, &integrator, 6)?;
        println!("{} {}", spec.id(), spec.params_label());
        for n in 1..=6 {
            let op = exact_member(spec, n, Route::Operator)?.to_f64_coeffs();
            let ns = exact_member(spec, n, Route::NullSpace)?.to_f64_coeffs();
            println!(
                "  n={n}: operator vs null-space {:.1e}, operator vs gram-schmidt {:.1e}",
                coefficient_rel_diff(&op, &ns),
                coefficient_rel_diff(&op, gs[n - 1].coeffs())
            );
        }
        match exact_member(spec, 0, Route::Operator) {
            Err(e) => println!("  degree 0: {e}"),
            Ok(_) => return Err("an exceptional family has no constant member".into()),
        }
    }

    // the codimension-2 equation as written admits no polynomial solutions
    let scan = xj_admissible_degrees(&int(3), 2, 6)?;
    println!("codimension 2, k=3: solution dimensions by degree {scan:?}");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
