//! End-to-end command tests through the in-process runner: report content,
//! exit-code contract, JSON shape and byte reproducibility, and the
//! presentation round trip through real files.

use clap::Parser;
use serde_json::Value;

use skewcy::{execute, Cli, Outcome};

fn run(args: &[&str]) -> Outcome {
    let mut argv = vec!["skewcy"];
    argv.extend_from_slice(args);
    let cli = Cli::try_parse_from(argv).expect("arguments parse");
    execute(&cli)
}

fn write_temp(name: &str, content: &str) -> String {
    let dir = std::env::temp_dir().join("skewcy-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, content).unwrap();
    path.to_string_lossy().into_owned()
}

const QUANTUM_PLANE: &str = r#"
[field]
rationals

[generators]
x = (1)
y = (1)

[relations]
y*x - 3*x*y

[automorphism dilate]
x = 2*x
y = 5*y

[options]
degree_bound = 6
"#;

#[test]
fn nakayama_report_matches_skew_formula() {
    let path = write_temp("qplane.alg", QUANTUM_PLANE);
    let out = run(&["nakayama", &path]);
    assert_eq!(out.exit, 0, "{}", out.stderr);
    assert!(out.stdout.contains("x -> 1/3*x"));
    assert!(out.stdout.contains("y -> 3*y"));
    assert!(out.stdout.contains("certified to degree 6"));
}

#[test]
fn verify_hi3_reports_equal_and_exits_zero() {
    let path = write_temp("qplane_hi3.alg", QUANTUM_PLANE);
    let out = run(&["verify", "hi3", &path]);
    assert_eq!(out.exit, 0, "{}", out.stderr);
    assert!(out.stdout.contains("HI3 [verification] EQUAL"));
    assert!(out.stdout.contains("lhs = 1 ; rhs = 1"));
}

#[test]
fn verify_unequal_exits_one() {
    // Forged registry on a non-quadratic algebra (so the registry is what
    // gets used): claiming the identity as Nakayama for the down-up
    // algebra makes the twist consistency check come out unequal.
    let forged = r#"
[field]
cyclotomic 4

[generators]
x = (1)
y = (1)

[relations]
x^2*y - y*x^2
y^2*x - x*y^2

[automorphism claimed]
x = x
y = y

[automorphism sigma]
x = x
y = z*y

[options]
degree_bound = 6

[known]
nakayama = claimed provenance "forged for the exit-code test"
as_index = 4 provenance "forged for the exit-code test"
hdet_rule = det_squared provenance "forged for the exit-code test"
"#;
    let path = write_temp("forged.alg", forged);
    let out = run(&["verify", "hi2", &path, "--auto", "sigma", "--expect-cy"]);
    assert_eq!(out.exit, 1, "stdout: {}", out.stdout);
    assert!(out.stdout.contains("UNEQUAL"));
}

#[test]
fn usage_and_validation_errors_exit_two() {
    let out = run(&["gb", "/no/such/file.alg"]);
    assert_eq!(out.exit, 2);

    let bad = write_temp("bad.alg", "[field]\nrationals\n[generators]\nx = nope\n");
    let out = run(&["validate", &bad]);
    assert_eq!(out.exit, 2);
    assert!(out.stderr.contains("line 4"));
}

#[test]
fn gb_and_hilbert_reports() {
    let path = write_temp("qplane_gb.alg", QUANTUM_PLANE);
    let out = run(&["gb", &path]);
    assert_eq!(out.exit, 0);
    assert!(out.stdout.contains("y*x - 3*x*y"));
    let out = run(&["hilbert", &path]);
    assert!(out.stdout.contains("1, 2, 3, 4, 5, 6, 7"));
}

#[test]
fn dual_of_the_plane_is_exterior_like() {
    let path = write_temp("qplane_dual.alg", QUANTUM_PLANE);
    let out = run(&["dual", &path]);
    assert_eq!(out.exit, 0);
    assert!(out.stdout.contains("x*^2"), "{}", out.stdout);
    assert!(out.stdout.contains("y*^2"));
}

#[test]
fn hdet_uses_named_automorphism() {
    let path = write_temp("qplane_hdet.alg", QUANTUM_PLANE);
    let out = run(&["hdet", &path, "--auto", "dilate"]);
    assert_eq!(out.exit, 0);
    assert!(out.stdout.contains("hdet(dilate) = 10"), "{}", out.stdout);
}

#[test]
fn ore_and_verify_ore_hdet() {
    let path = write_temp("qplane_ore.alg", QUANTUM_PLANE);
    let out = run(&["ore", &path, "--auto", "dilate"]);
    assert_eq!(out.exit, 0);
    assert!(out.stdout.contains("t*x - 2*x*t"), "{}", out.stdout);
    let out = run(&["verify", "ore-hdet", &path, "--auto", "dilate"]);
    assert_eq!(out.exit, 0, "{}", out.stdout);
    assert!(out.stdout.contains("lhs = 10 ; rhs = 10"));
}

#[test]
fn normal_and_quotient_commands() {
    let path = write_temp("qplane_norm.alg", QUANTUM_PLANE);
    let out = run(&["normal", &path, "--elem", "x"]);
    assert_eq!(out.exit, 0);
    assert!(out.stdout.contains("normal with witness"));
    assert!(out.stdout.contains("y -> 1/3*y"));
    let out = run(&["quotient", &path, "--elem", "x"]);
    assert_eq!(out.exit, 0);
    assert!(out.stdout.contains("[\"y\"]"), "{}", out.stdout);
}

#[test]
fn twist_on_catalog_down_up() {
    let out = run(&["twist", "catalog:downup_010", "--auto", "sigma"]);
    assert_eq!(out.exit, 0, "{}", out.stderr);
    assert!(out.stdout.contains("y*x^2 + x^2*y"), "{}", out.stdout);
}

#[test]
fn smash_and_verify_hi1_on_catalog_down_up() {
    let out = run(&["smash", "catalog:downup_010", "--group", "nakayama_group"]);
    assert_eq!(out.exit, 0, "{}", out.stderr);
    assert!(out.stdout.contains("order 2"));
    let out = run(&["verify", "hi1", "catalog:downup_010", "--group", "nakayama_group"]);
    assert_eq!(out.exit, 0, "{}", out.stdout);
    assert!(out.stdout.contains("witness"), "{}", out.stdout);
}

#[test]
fn verify_hi2_consistency_on_down_up() {
    let out = run(&[
        "verify",
        "hi2",
        "catalog:downup_010",
        "--auto",
        "sigma",
        "--expect-cy",
    ]);
    assert_eq!(out.exit, 0, "{}", out.stdout);
    assert!(out.stdout.contains("HI2 [consistency] EQUAL"));
}

#[test]
fn verify_tensor_via_files() {
    let plane = write_temp("tensor_a.alg", QUANTUM_PLANE);
    let line = write_temp(
        "tensor_b.alg",
        "[field]\nrationals\n[generators]\nt = (1)\n[relations]\n[automorphism stretch]\nt = 7*t\n[options]\ndegree_bound = 6\n",
    );
    let out = run(&[
        "verify", "tensor", &plane, &line, "--auto", "dilate", "--auto2", "stretch",
    ]);
    assert_eq!(out.exit, 0, "{}", out.stdout);
    assert!(out.stdout.contains("TENSOR [verification] EQUAL"));
}

#[test]
fn verify_descent_on_commutative_plane() {
    let plane = write_temp(
        "descent.alg",
        "[field]\nrationals\n[generators]\nx = (1)\ny = (1)\n[relations]\ny*x - x*y\n[automorphism diag]\nx = 2*x\ny = 5*y\n[options]\ndegree_bound = 6\n",
    );
    let out = run(&["verify", "descent", &plane, "--elem", "x", "--auto", "diag"]);
    assert_eq!(out.exit, 0, "{}", out.stdout);
    assert!(out.stdout.contains("lhs = 10 ; rhs = 10"));
}

#[test]
fn json_documents_are_byte_identical_across_runs() {
    for args in [
        vec!["--json", "verify", "hi3", "catalog:quantum_plane(4)"],
        vec!["--json", "catalog", "selftest"],
        vec!["--json", "nakayama", "catalog:skewpoly(3,2,3,5)"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(a.stdout, b.stdout, "args {args:?}");
        assert_eq!(a.exit, b.exit);
        let doc: Value = serde_json::from_str(&a.stdout).unwrap();
        for key in [
            "command",
            "inputs",
            "certificate",
            "result",
            "verdict",
            "provenance",
            "seed",
        ] {
            assert!(doc.get(key).is_some(), "missing {key} for {args:?}");
        }
    }
}

#[test]
fn json_scalars_are_strings_never_floats() {
    let out = run(&["--json", "nakayama", "catalog:quantum_plane(3)"]);
    let doc: Value = serde_json::from_str(&out.stdout).unwrap();
    let matrix = &doc["result"]["nakayama"]["matrix"];
    assert_eq!(matrix[0][0], Value::String("1/3".into()));
    assert_eq!(matrix[1][1], Value::String("3".into()));
}

#[test]
fn catalog_show_round_trips_through_a_file() {
    let out = run(&["catalog", "show", "downup_010"]);
    assert_eq!(out.exit, 0);
    let text: String = out
        .stdout
        .lines()
        .filter(|l| !l.starts_with("# fact:"))
        .collect::<Vec<_>>()
        .join("\n");
    let path = write_temp("downup_roundtrip.alg", &text);
    let out = run(&["validate", &path]);
    assert_eq!(out.exit, 0, "{}", out.stderr);
    assert!(out.stdout.contains("automorphism: sigma"));
    // The registry survives the round trip: the consistency HI2 run works.
    let out = run(&[
        "verify", "hi2", &path, "--auto", "sigma", "--expect-cy",
    ]);
    assert_eq!(out.exit, 0, "{}", out.stdout);
}

#[test]
fn certify_reports_both_outcomes() {
    let out = run(&["certify", "catalog:quantum_plane(3)"]);
    assert_eq!(out.exit, 0);
    assert!(out.stdout.contains("numerically certified to degree 8"));
    // The cubic down-up algebra is outside the quadratic machinery: the
    // command still succeeds and says why certification does not apply.
    let out = run(&["certify", "catalog:downup_010"]);
    assert_eq!(out.exit, 0, "{}", out.stderr);
    assert!(out.stdout.contains("not certified"), "{}", out.stdout);
}

#[test]
fn catalog_list_names_every_entry() {
    let out = run(&["catalog", "list"]);
    assert_eq!(out.exit, 0);
    for name in ["polynomial", "skewpoly", "quantum_plane", "kminus1_plane", "downup_010"] {
        assert!(out.stdout.contains(name), "missing {name}");
    }
}

#[test]
fn verify_center_defaults_to_all_named_automorphisms() {
    let out = run(&["verify", "center", "catalog:downup_010"]);
    assert_eq!(out.exit, 0, "{}", out.stdout);
    assert!(out.stdout.contains("CENTER"));
    assert!(out.stdout.contains("lhs = 3 ; rhs = 3"), "{}", out.stdout);
}

#[test]
fn catalog_selftest_is_green() {
    let out = run(&["catalog", "selftest"]);
    assert_eq!(out.exit, 0, "{}", out.stdout);
    assert!(out.stdout.contains("all checks passed"));
    assert!(!out.stdout.contains("FAIL "));
}

#[test]
fn degree_bound_overrun_fails_loudly() {
    let path = write_temp("qplane_deg.alg", QUANTUM_PLANE);
    let out = run(&["normal", &path, "--elem", "x^4*y^4*x"]);
    assert_eq!(out.exit, 2);
    assert!(out.stderr.contains("needed degree 9"), "{}", out.stderr);
    assert!(out.stderr.contains("complete to 6"));
    // Raising the bound makes the same element answerable.
    let out = run(&["--deg", "10", "normal", &path, "--elem", "x^4*y^4*x"]);
    assert_eq!(out.exit, 0, "{}", out.stderr);
}

#[test]
fn hdet_on_down_up_uses_registry_rule() {
    let out = run(&["hdet", "catalog:downup_010", "--auto", "sigma"]);
    assert_eq!(out.exit, 0, "{}", out.stderr);
    assert!(out.stdout.contains("hdet(sigma) = -1"), "{}", out.stdout);
    let json = run(&["--json", "hdet", "catalog:downup_010", "--auto", "sigma"]);
    let doc: Value = serde_json::from_str(&json.stdout).unwrap();
    let prov = doc["provenance"].as_array().unwrap();
    assert!(
        prov.iter().any(|p| p.as_str().unwrap().contains("registry")),
        "{prov:?}"
    );
}

#[test]
fn seed_is_echoed_in_reports() {
    let out = run(&["--json", "--seed", "99", "smash", "catalog:downup_010", "--group", "nakayama_group"]);
    let doc: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(doc["seed"], Value::from(99u64));
}
