mod exact_polynomials_example {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/exact_polynomials.rs"
    ));
}

#[test]
fn exact_polynomials_example_runs() {
    exact_polynomials_example::run_example().expect("exact_polynomials example failed");
}

mod exceptional_routes_example {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/exceptional_routes.rs"
    ));
}

#[test]
fn exceptional_routes_example_runs() {
    exceptional_routes_example::run_example().expect("exceptional_routes example failed");
}

mod quadrature_example {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/quadrature.rs"
    ));
}

#[test]
fn quadrature_example_runs() {
    quadrature_example::run_example().expect("quadrature example failed");
}

mod extended_potentials_example {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/extended_potentials.rs"
    ));
}

#[test]
fn extended_potentials_example_runs() {
    extended_potentials_example::run_example().expect("extended_potentials example failed");
}

mod spectra_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/spectra.rs"));
}

#[test]
fn spectra_example_runs() {
    spectra_example::run_example().expect("spectra example failed");
}

mod susy_intertwining_example {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/susy_intertwining.rs"
    ));
}

#[test]
fn susy_intertwining_example_runs() {
    susy_intertwining_example::run_example().expect("susy_intertwining example failed");
}

mod claim_audit_example {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/claim_audit.rs"
    ));
}

#[test]
fn claim_audit_example_runs() {
    claim_audit_example::run_example().expect("claim_audit example failed");
}

mod verification_campaign_example {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/verification_campaign.rs"
    ));
}

#[test]
fn verification_campaign_example_runs() {
    verification_campaign_example::run_example().expect("verification_campaign example failed");
}
