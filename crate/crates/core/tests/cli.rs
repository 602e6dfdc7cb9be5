use std::process::{Command, Output};

fn ngqm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ngqm"))
        .args(args)
        .env_remove("NGQM_CONFIG")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn column(csv_text: &str, name: &str) -> Vec<String> {
    let mut r = csv::Reader::from_reader(csv_text.as_bytes());
    let idx = r.headers().unwrap().iter().position(|h| h == name).expect("column");
    r.records().map(|rec| rec.unwrap()[idx].to_string()).collect()
}

fn num(s: &str) -> f64 {
    s.parse().unwrap()
}

#[test]
fn spectrum_three_g() {
    let o = ngqm(&["spectrum", "--geometry", "3G", "--width", "1.0", "--levels", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("n,k_n_per_nm,energy_ev,normalization,dispersion_ratio\n"));
    let e = num(&column(&text, "energy_ev")[0]);
    assert!((e - 0.375).abs() / 0.375 < 0.01);
}

#[test]
fn spectrum_five_g_narrow() {
    let o = ngqm(&["spectrum", "--geometry", "5G", "--width", "0.05", "--levels", "1"]);
    let e = num(&column(&stdout(&o), "energy_ev")[0]);
    assert!((e - 0.0055).abs() / 0.0055 < 0.02);
}

#[test]
fn spectrum_two_g_has_no_bound_states() {
    let o = ngqm(&["spectrum", "--geometry", "2G"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("no bound states"));
    assert!(o.stdout.is_empty());
}

#[test]
fn geometry_spellings_agree() {
    let a = ngqm(&["spectrum", "--geometry", "4G", "--levels", "3"]);
    let b = ngqm(&["spectrum", "--geometry", "j=3", "--levels", "3"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(column(&stdout(&a), "n").len(), 3);
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(ngqm(&["spectrum", "--geometry", "7X"]).status.code(), Some(1));
    assert_eq!(ngqm(&["spectrum", "--levels", "0"]).status.code(), Some(1));
    assert_eq!(ngqm(&["spectrum", "--paper-constants"]).status.code(), Some(1));
    assert_eq!(ngqm(&["spectrum", "--mass", "proton"]).status.code(), Some(1));
    assert_eq!(ngqm(&["state-dump", "--samples", "10"]).status.code(), Some(1));
    assert_eq!(ngqm(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(ngqm(&["--help"]).status.code(), Some(0));
}

#[test]
fn state_dump_walls() {
    let o = ngqm(&["state-dump", "--geometry", "5G", "--n", "0"]);
    let phi: Vec<f64> = column(&stdout(&o), "phi").iter().map(|s| num(s)).collect();
    assert!(phi.len() >= 256);
    assert_eq!(phi[0], 0.0);
    assert!(phi[phi.len() - 1].abs() < 1e-12);

    let o = ngqm(&["state-dump", "--geometry", "4G", "--n", "0"]);
    let phi: Vec<f64> = column(&stdout(&o), "phi").iter().map(|s| num(s)).collect();
    let n = ngqm::normalization_constant(ngqm::GeometryOrder::FOUR_G, 0, 1.0).unwrap();
    assert!((phi[0] - n).abs() < 1e-12);
}

#[test]
fn state_dump_density_column_is_phi_to_the_j() {
    let o = ngqm(&["state-dump", "--geometry", "4G", "--n", "1", "--samples", "300"]);
    let text = stdout(&o);
    let phi = column(&text, "phi");
    let rho = column(&text, "density");
    assert_eq!(phi.len(), 300);
    for (p, r) in phi.iter().zip(&rho) {
        let (p, r) = (num(p), num(r));
        assert!((p.powi(3) - r).abs() <= 1e-12 * r.abs().max(1.0));
    }
    assert!(rho.iter().any(|r| num(r) < 0.0));
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let o = ngqm(&["spectrum", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["meta"]["command"], "spectrum");
    assert!(v["rows"][0]["energy_ev"].is_number());
}

#[test]
fn config_flag_and_env_fallback() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("lab.conf");
    std::fs::write(&path, "# test\nhbar_c_ev_nm = 200.0\n").unwrap();
    let o = ngqm(&["spectrum", "--format", "json", "--config", path.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["meta"]["constants"]["hbar_c_ev_nm"], 200.0);

    let o = Command::new(env!("CARGO_BIN_EXE_ngqm"))
        .args(["spectrum", "--format", "json"])
        .env("NGQM_CONFIG", &path)
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["meta"]["constants"]["hbar_c_ev_nm"], 200.0);

    let missing = dir.path().join("nope.conf");
    let o = ngqm(&["spectrum", "--config", missing.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn mass_flag_changes_energies() {
    let e = |mass: &str| num(&column(&stdout(&ngqm(&["spectrum", "--mass", mass])), "energy_ev")[0]);
    let ratio = e("electron") / e("1021997.9");
    assert!((ratio - 2.0).abs() < 1e-12);
}

#[test]
fn dispersion_slopes_and_two_g_phase_velocity() {
    let o = ngqm(&["dispersion", "--geometry", "5G", "--points", "10"]);
    let slopes = column(&stdout(&o), "log_slope");
    assert_eq!(slopes.len(), 10);
    assert!(slopes.iter().all(|s| (num(s) - 4.0).abs() < 1e-6));

    let o = ngqm(&["dispersion", "--geometry", "2G"]);
    assert!(column(&stdout(&o), "phase_velocity_over_c").iter().all(|s| num(s) == 1.0));
}

#[test]
fn uncertainty_rows() {
    let o = ngqm(&["uncertainty", "--textbook-3g"]);
    let p = num(&column(&stdout(&o), "product_over_hbar")[0]);
    assert!((p - 0.568).abs() < 0.01);

    let o = ngqm(&["uncertainty", "--geometry", "5G"]);
    let text = stdout(&o);
    assert_eq!(column(&text, "satisfies_heisenberg")[0], "true");
    assert_eq!(num(&column(&text, "paper_product")[0]), 1.07);

    let o = ngqm(&["uncertainty", "--geometry", "4G"]);
    let text = stdout(&o);
    assert!(num(&column(&text, "product_over_hbar")[0]) > 0.5);
    assert!(num(&column(&text, "raw_product_over_hbar")[0]) > 0.5);
    assert_eq!(num(&column(&text, "published_jth_p")[0]), 21.6);
}

#[test]
fn table_audit_rows() {
    let o = ngqm(&["table-audit"]);
    let text = stdout(&o);
    let follows = column(&text, "follows");
    assert_eq!(follows.len(), 45);
    let geo = column(&text, "geometry");
    let q = column(&text, "q");
    for ((g, q), f) in geo.iter().zip(&q).zip(&follows) {
        if q != "0" {
            assert_eq!(f, "(2q+1)^(j-1)", "{g} q={q}");
        }
    }
}

#[test]
fn verify_exits_zero_and_is_deterministic() {
    let a = ngqm(&["verify"]);
    let b = ngqm(&["verify"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    let status = column(&text, "status");
    assert!(!status.iter().any(|s| s == "FAIL"));
    let checks = column(&text, "check");
    let i = checks.iter().position(|c| c == "boundary_left/j2/n0").unwrap();
    assert_eq!(status[i], "expected_deviation");
}

#[test]
fn identical_requests_identical_files() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.csv"), dir.path().join("b.csv"));
    for p in [&a, &b] {
        ngqm(&["uncertainty", "--geometry", "4G", "--out", p.to_str().unwrap()]);
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}
