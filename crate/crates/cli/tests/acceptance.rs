//! Acceptance criteria: one PASS/FAIL line per criterion, non-zero exit on any failure.

use std::time::{Duration, Instant};

use natanzon::ginocchio::spectrum_closed_form;
use natanzon::verify::{run_verify, VerifyConfig, VerifyReport};
use natanzon_cli::{cmd_verify, Flags, RunConfig};

struct Criterion {
    id: u32,
    title: &'static str,
    passed: bool,
    detail: String,
}

fn suite(name: &str, spectrum_points: usize) -> (VerifyReport, Duration) {
    let start = Instant::now();
    let config = VerifyConfig { only: vec![name.to_string()], spectrum_points, ..VerifyConfig::default() };
    let report = run_verify(&config).expect("known suite");
    (report, start.elapsed())
}

/// All named hard checks pass, plus the combined runtime budget.
fn checks(report: &VerifyReport, suite: &str, names: &[&str], elapsed: Duration, budget: f64) -> (bool, String) {
    let mut ok = elapsed.as_secs_f64() < budget;
    let mut parts = Vec::new();
    for name in names {
        match report.check(suite, name) {
            Some(c) => {
                ok &= c.passed;
                let value = c.value.map_or("-".to_string(), |v| format!("{v:.3e}"));
                let threshold = c.threshold.map_or(String::new(), |t| format!(" ≤ {t:.0e}"));
                parts.push(format!("{name}={value}{threshold}{}", if c.passed { "" } else { " (failed)" }));
            }
            None => {
                ok = false;
                parts.push(format!("{name} missing"));
            }
        }
    }
    parts.push(format!("{:.2}s < {budget}s", elapsed.as_secs_f64()));
    (ok, parts.join(", "))
}

fn main() {
    let mut results = Vec::new();

    let (conformal, t) = suite("conformal", 2001);
    let (ok, detail) = checks(&conformal, "conformal", &["strip_to_disk_equals_tan", "a4_triple", "xi_unit_modulus", "cauchy_riemann"], t, 1.0);
    results.push(Criterion { id: 1, title: "conformal suite", passed: ok, detail });

    let (ginocchio, t_g) = suite("ginocchio", 2001);
    let (ok, detail) = checks(&ginocchio, "ginocchio", &["mu_closed_form_vs_quadrature", "invert_mu_round_trip"], t_g, 5.0);
    results.push(Criterion { id: 2, title: "mass integral closed form vs quadrature", passed: ok, detail });

    let (natanzon, t) = suite("natanzon", 2001);
    let (ok, detail) = checks(&natanzon, "natanzon", &["natanzon_matches_hyperbolic"], t, 1.0);
    results.push(Criterion { id: 3, title: "Natanzon form equals the hyperbolic Ginocchio form", passed: ok, detail });

    let (pdm, t_pdm) = suite("pdmsolver", 2001);
    let closed: Vec<f64> = (0..=2).map(|n| spectrum_closed_form(1.0, 2.0, n).expect("n ≤ j")).collect();
    let closed_ok = closed.iter().zip([-4.0, 0.0, -4.0]).all(|(a, b)| (a - b).abs() < 1e-12);
    let index_map = pdm.check("pdmsolver", "closed_form_index_map");
    let alpha_ok = index_map.and_then(|c| c.value) == Some(2.0);
    let (ok, detail) = checks(&pdm, "pdmsolver", &["poschl_teller_reduction"], t_pdm, 30.0);
    results.push(Criterion {
        id: 4,
        title: "γ = 1 Pöschl–Teller reduction",
        passed: ok && closed_ok && alpha_ok,
        detail: format!("{detail}, closed form {closed:?}, index map α = {:?}", index_map.and_then(|c| c.value)),
    });

    let (ok, detail) = checks(&ginocchio, "ginocchio", &["eq27_vs_eq34"], t_g, 1.0);
    results.push(Criterion { id: 5, title: "quantization roots equal the closed form", passed: ok, detail });

    let (ok, mut detail) = checks(&pdm, "pdmsolver", &["mass_independence"], t_pdm, 60.0);
    if let Some(c) = pdm.check("pdmsolver", "mass_independence") {
        detail.push_str(&format!(", {}", c.detail.clone().unwrap_or_default()));
    }
    results.push(Criterion { id: 6, title: "mass independence of the winning assembly", passed: ok, detail });

    let (algebra, t) = suite("algebra", 2001);
    let (ok, mut detail) = checks(
        &algebra,
        "algebra",
        &["commutator_raise_lower", "casimir_ladder_vs_closed_form", "h_identity_residual", "f_identity_constancy"],
        t,
        5.0,
    );
    if let Some(v) = algebra.check("algebra", "f_identity_constant").and_then(|c| c.value) {
        detail.push_str(&format!(", logged constant {v:.12}"));
    }
    results.push(Criterion { id: 7, title: "su(1,1) algebra residuals", passed: ok, detail });

    let (ok, detail) = checks(&pdm, "pdmsolver", &["box_oracle", "harmonic_oracle", "convergence_order", "matrix_symmetry"], t_pdm, 10.0);
    results.push(Criterion { id: 8, title: "discretization quality", passed: ok, detail });

    let config = RunConfig::resolve(&Flags { seed: Some(7), format: Some(natanzon_cli::Format::Json), ..Flags::default() })
        .expect("default configuration");
    let first = cmd_verify(&config).expect("verify runs");
    let second = cmd_verify(&config).expect("verify runs");
    results.push(Criterion {
        id: 9,
        title: "deterministic verify output",
        passed: first.text == second.text,
        detail: format!("two runs with seed 7, {} bytes each", first.text.len()),
    });

    let mut failed = 0;
    for c in &results {
        println!("{} criterion {}: {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.id, c.title, c.detail);
        failed += usize::from(!c.passed);
    }
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
