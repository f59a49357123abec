// A small verification campaign driven from a JSON config, plus the same
// front end the binary uses.

use xop::verify::{run_verification, VerificationConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = VerificationConfig::from_json(
        r#"{
            "suites": ["xop", "spectra"],
            "params": { "k": ["1", "7/2"], "jacobi": [{"alpha": "1", "beta": "2"}], "l": [0], "max_degree": 5 },
            "grid": { "rayleigh_n": 20000 }
        }"#,
    )?;
    let report = run_verification(&cfg)?;
    for c in &report.checks {
        println!(
            "{:<9} {:<55} {:.2e}",
            format!("{:?}", c.status),
            c.id,
            c.metric
        );
    }
    println!("{:?}", report.summary);

    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = xop::cli::run(
        [
            "xop",
            "poly",
            "--family",
            "x1-laguerre",
            "--k",
            "1",
            "--n",
            "3",
            "--upto",
        ],
        &mut out,
        &mut err,
    );
    print!("{}", String::from_utf8_lossy(&out));
    if code != 0 {
        return Err(String::from_utf8_lossy(&err).into_owned().into());
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
