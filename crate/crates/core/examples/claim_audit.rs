// Audit of the printed supersymmetry statements for three presets.

use xop::potentials::Preset;
use xop::susy::{audit_claims, ClaimStatus};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let presets = [
        Preset::Oscillator3d { l: 1 },
        Preset::Coulomb { l: 1 },
        Preset::Scarf {
            a: 3.0,
            b: 1.0,
            alpha: 1.0,
        },
    ];
    let rows = audit_claims(&presets)?;
    for r in &rows {
        let status = match r.status {
            ClaimStatus::Pass => "pass",
            ClaimStatus::Fail => "FAIL",
            ClaimStatus::Reported => "reported",
        };
        println!(
            "{:<28} {:<40} {:>10.3e}  {status}",
            r.preset, r.claim_id, r.max_abs_dev
        );
    }
    if rows.iter().any(|r| r.status == ClaimStatus::Fail) {
        return Err("a construction identity failed".into());
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
