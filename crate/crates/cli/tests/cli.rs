use std::process::Command;

use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::Value;

use subcanonical_cli::documents::{
    CheckDocument, EnumerationDocument, LimitDocument, ProfileDocument, RhoDocument,
    TableRowDocument,
};
use subcanonical_cli::run;

struct Outcome {
    code: i32,
    stdout: String,
    stderr: String,
}

fn invoke(args: &str) -> Outcome {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("subcanonical").chain(args.split_whitespace());
    let code = run(argv, &mut out, &mut err);
    Outcome {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn json(args: &str) -> Value {
    let o = invoke(args);
    assert_eq!(o.code, 0, "{args}: {}", o.stderr);
    serde_json::from_str(&o.stdout).unwrap()
}

/// Emit, parse into the typed document, re-emit: bytes must match.
fn assert_round_trip<T: Serialize + DeserializeOwned>(args: &str) {
    let o = invoke(args);
    assert_eq!(o.code, 0, "{args}: {}", o.stderr);
    let parsed: T = serde_json::from_str(&o.stdout).unwrap();
    let again = serde_json::to_string_pretty(&parsed).unwrap() + "\n";
    assert_eq!(again, o.stdout, "{args}");
}

#[test]
fn check_hyperelliptic_gaps() {
    let v = json("check --gaps 1,3,5,7");
    assert_eq!(v["subcanonical"], true);
    assert_eq!(v["genus"], 4);
    assert_eq!(v["theta_h0"], 2);
    assert_eq!(v["parity"], "even");
    assert_eq!(v["component"], "hyperelliptic");
    assert_eq!(v["semigroup_closed"], true);
    assert_eq!(v["generators"], serde_json::json!([2, 9]));
}

#[test]
fn check_reports_closure_violation_as_verdict() {
    let v = json("check --gaps 1,2,5,7");
    assert_eq!(v["semigroup_closed"], false);
    assert_eq!(
        v["violation"],
        serde_json::json!({"x": 3, "y": 4, "sum": 7})
    );
}

#[test]
fn check_accepts_each_encoding() {
    let a = json("check --vanishing 0,1,3,6");
    let b = json("check --ramification 0,0,1,3");
    let c = json("check --gaps 1,2,4,7");
    assert_eq!(a, b);
    assert_eq!(a, c);
    assert_eq!(a["weight"], 4);
}

#[test]
fn non_subcanonical_profile_has_null_theta_fields() {
    let v = json("check --vanishing 0,1,3");
    assert_eq!(v["subcanonical"], false);
    assert!(v["theta_h0"].is_null() && v["parity"].is_null() && v["component"].is_null());
}

#[test]
fn bielliptic_cover() {
    let v = json("cover double --genus 6 --base-genus 1 --base-vanishing 0");
    assert_eq!(v["ramification"], serde_json::json!([0, 0, 0, 1, 2, 5]));
}

#[test]
fn hyperelliptic_and_cyclic_covers() {
    let v = json("cover double --genus 5 --base-genus 0 --base-vanishing none");
    assert_eq!(v["vanishing"], serde_json::json!([0, 2, 4, 6, 8]));
    assert_eq!(v["parity"], "odd");
    let v = json("cover cyclic --sheets 3 --ell 3 --base-genus 0 --base-vanishing none");
    assert_eq!(v["ramification"], serde_json::json!([0, 0, 1, 1, 2, 4, 6]));
    let v = json("cover named --name genus2-base-weierstrass --genus 7");
    assert_eq!(v["ramification"], serde_json::json!([0, 0, 0, 1, 1, 3, 6]));
}

#[test]
fn limit_series_document() {
    let v = json("limit --genus 6 --alpha-q 0,0,0,0,4 --torsion half");
    assert_eq!(v["gamma"], serde_json::json!([0, 0, 0, 0, 1, 5]));
    assert_eq!(v["exceptional_index"], 3);
    assert_eq!(v["eh_star"], true);
    assert_eq!(v["crude_limit"]["passes"], true);
    assert_eq!(v["theta_parity"], "even");
    assert_eq!(v["rho"], -5);
    assert_eq!(
        v["expected_dimensions"],
        serde_json::json!({"dim_g_lower": 11, "dim_d": 10, "dim_b": 16})
    );
    let v = json("limit --genus 6 --alpha-q 0,0,0,0,4 --torsion full");
    assert_eq!(v["gamma"], serde_json::json!([0, 0, 0, 0, 0, 5]));
    assert_eq!(v["theta_parity"], "odd");
}

#[test]
fn rho_document() {
    let v = json("rho --genus 4 --rank 3 --degree 6 --alpha 0,0,0,3");
    assert_eq!(v["rho"], -3);
}

#[test]
fn table_and_enumeration() {
    let rows = json("table --genus 6");
    assert_eq!(rows.as_array().unwrap().len(), 5);
    assert_eq!(json("table").as_array().unwrap().len(), 14);

    let v = json("enumerate --genus 6 --compare-table");
    assert_eq!(v["count"], 6);
    assert_eq!(v["missing"], serde_json::json!([]));
    assert_eq!(v["extras"], serde_json::json!([[0, 1, 3, 4, 7, 10]]));

    let v = json("enumerate --genus 10");
    assert!(v["extras"].is_null());
    assert_eq!(v["count"], 20);
}

#[test]
fn json_round_trips_are_byte_identical() {
    assert_round_trip::<CheckDocument>("check --gaps 1,3,5,7");
    assert_round_trip::<CheckDocument>("check --gaps 1,2,5,7");
    assert_round_trip::<CheckDocument>("check --vanishing 0,1,3");
    assert_round_trip::<ProfileDocument>("cover named --name bielliptic --genus 9");
    assert_round_trip::<LimitDocument>("limit --genus 7 --alpha-q 0,0,0,0,1,5 --torsion half");
    assert_round_trip::<LimitDocument>("limit --genus 5 --alpha-q 0,1,2,3 --torsion full");
    assert_round_trip::<RhoDocument>("rho --genus 3 --rank 1 --degree 2 --alpha 0,1");
    assert_round_trip::<Vec<TableRowDocument>>("table");
    assert_round_trip::<EnumerationDocument>("enumerate --genus 5 --compare-table");
    assert_round_trip::<EnumerationDocument>("enumerate --genus 12");
}

#[test]
fn csv_and_markdown_formats() {
    let o = invoke("table --genus 3 --format csv");
    assert_eq!(o.code, 0);
    let mut lines = o.stdout.lines();
    assert!(lines
        .next()
        .unwrap()
        .starts_with("genus,vanishing,ramification,parity"));
    assert!(lines
        .next()
        .unwrap()
        .starts_with("3,\"0,1,4\",\"0,0,2\",odd,2,2,"));

    let o = invoke("enumerate --genus 4 --format md");
    assert_eq!(o.code, 0);
    let lines: Vec<_> = o.stdout.lines().collect();
    assert_eq!(lines.len(), 5);
    assert!(lines[1].starts_with("| --- |"));
}

#[test]
fn invalid_input_exits_one_with_reason() {
    for args in [
        "check --vanishing 0,2,1",
        "check --gaps 2,3",
        "check --gaps 1,x",
        "check --gaps 1 --vanishing 0",
        "cover double --genus 5 --base-genus 2 --base-vanishing 0,2",
        "cover double --genus 6 --base-genus 1 --base-vanishing 0,1",
        "cover cyclic --sheets 3 --ell 1 --base-genus 2 --base-vanishing 0,2",
        "cover cyclic --sheets 3 --ell 2 --base-genus 2 --base-vanishing 0,1",
        "cover named --name trigonal-rational --genus 8",
        "limit --genus 5 --alpha-q 0,0,1,2 --torsion full",
        "rho --genus 3 --rank 1 --degree 2 --alpha 0",
        "enumerate --genus 30",
        "enumerate --genus 7 --compare-table",
        "frobnicate",
    ] {
        let o = invoke(args);
        assert_eq!(o.code, 1, "{args}");
        assert!(o.stdout.is_empty(), "{args}");
        assert!(!o.stderr.trim().is_empty(), "{args}");
    }
}

#[test]
fn help_exits_zero() {
    let o = invoke("--help");
    assert_eq!(o.code, 0);
    assert!(o.stdout.contains("enumerate"));
}

#[test]
fn table_file_override_is_validated() {
    let dir = std::env::temp_dir().join(format!("subcanonical-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("table.tsv");
    std::fs::write(
        &path,
        "genus\tvanishing\tparity\tweight\tcodim\trealization\tprovenance\n\
         4\t0,1,3,6\todd\t4\t3\tmislabelled\ttest\n",
    )
    .unwrap();
    let args = format!(
        "enumerate --genus 4 --compare-table --table-file {}",
        path.display()
    );
    let o = invoke(&args);
    assert_eq!(o.code, 1);
    assert!(o.stderr.contains("parity"), "{}", o.stderr);

    let o = invoke(&format!(
        "table --table-file {}",
        dir.join("absent.tsv").display()
    ));
    assert_eq!(o.code, 1);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn binary_reports_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_subcanonical");
    let ok = Command::new(bin)
        .args(["check", "--gaps", "1,3,5,7"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&ok.stdout).unwrap();
    assert_eq!(v["parity"], "even");

    let bad = Command::new(bin)
        .args(["check", "--gaps", "0,1"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stderr).starts_with("error:"));
}

#[test]
fn compare_flag_has_an_alias() {
    assert_eq!(
        json("enumerate --genus 5 --compare-paper"),
        json("enumerate --genus 5 --compare-table")
    );
}
