// Exact rational polynomials: classical families, X1 members and their
// eigen-equations checked with no rounding at all.

use xop::polycore::{format_rational, int, jacobi_classical, laguerre_classical, rat, Poly};
use xop::xop::{
    x1_jacobi_ode_residual, x1_jacobi_op_route, x1_laguerre_ode_residual, x1_laguerre_op_route,
};

fn show(p: &Poly) -> String {
    p.coeffs()
        .iter()
        .map(format_rational)
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let k = rat(7, 2);
    println!("L_3^(7/2) = [{}]", show(&laguerre_classical(3, &k)));
    println!(
        "P_2^(1,2) = [{}]",
        show(&jacobi_classical(2, &int(1), &int(2)))
    );

    for n in 1..=5 {
        let f = x1_laguerre_op_route(n - 1, &k)?;
        let r = x1_laguerre_ode_residual(&f, &k, n);
        println!(
            "x1-laguerre k=7/2 n={n}: [{}]  residual zero: {}",
            show(&f),
            r.is_zero()
        );
        if !r.is_zero() {
            return Err("nonzero residual".into());
        }
    }

    let (a, b) = (int(2), int(5));
    for n in 1..=4 {
        let f = x1_jacobi_op_route(n - 1, &a, &b)?;
        let zero = x1_jacobi_ode_residual(&f, &a, &b, n)?.is_zero();
        println!(
            "x1-jacobi (2,5) n={n}: degree {:?}, residual zero: {zero}",
            f.degree()
        );
    }

    // a shifted member is no longer an eigenfunction
    let wrong = &x1_laguerre_op_route(2, &k)? + &Poly::one();
    println!(
        "perturbed member residual zero: {}",
        x1_laguerre_ode_residual(&wrong, &k, 3).is_zero()
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
