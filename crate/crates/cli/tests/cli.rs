//! End-to-end tests driving the binary: check, construct, verify-suite,
//! exit codes, and report determinism.

use std::path::{Path, PathBuf};
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_starcat"))
}

fn temp_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("starcat-cli-{tag}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn write_one_plus(path: &Path) {
    let one = starcat::star::classifier(starcat::star::ClassifierKind::MarkedUnitary);
    let j = starcat::json::marked_star_to_json(&one);
    std::fs::write(path, serde_json::to_string_pretty(&j).unwrap()).unwrap();
}

#[test]
fn check_valid_and_invalid_files() {
    let dir = temp_dir("check");
    let good = dir.join("one_plus.json");
    write_one_plus(&good);
    let status = bin().arg("check").arg(&good).status().unwrap();
    assert_eq!(status.code(), Some(0));

    // Marked non-unitary: mark u but not u* — star closure fails.
    let text = std::fs::read_to_string(&good).unwrap();
    let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
    v["marked"] = serde_json::json!([0, 1, 3]);
    let bad = dir.join("bad.json");
    std::fs::write(&bad, serde_json::to_string(&v).unwrap()).unwrap();
    let status = bin().arg("check").arg(&bad).status().unwrap();
    assert_eq!(status.code(), Some(1));

    // Unparseable input.
    let ugly = dir.join("ugly.json");
    std::fs::write(&ugly, "{ not json").unwrap();
    let status = bin().arg("check").arg(&ugly).status().unwrap();
    assert_eq!(status.code(), Some(2));
}

#[test]
fn construct_outputs_revalidate() {
    let dir = temp_dir("construct");
    let cat = dir.join("one_plus.json");
    write_one_plus(&cat);

    // orbit: 𝟙⁺ ♯ BZ₂.
    let out = dir.join("orbit.json");
    let status = bin()
        .args(["construct", "orbit", "--cyclic", "2", "-o"])
        .arg(&out)
        .arg("--category")
        .arg(&cat)
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    let status = bin().arg("check").arg(&out).status().unwrap();
    assert_eq!(status.code(), Some(0), "construct output must re-validate");

    // Deterministic across runs.
    let first = std::fs::read(&out).unwrap();
    bin()
        .args(["construct", "orbit", "--cyclic", "2", "-o"])
        .arg(&out)
        .arg("--category")
        .arg(&cat)
        .status()
        .unwrap();
    assert_eq!(first, std::fs::read(&out).unwrap());

    // Linear orbit: the group algebra of Z/2.
    let lin_out = dir.join("group_algebra.json");
    let pt = dir.join("pt.json");
    let j = starcat::json::marked_star_to_json(&starcat::star::MarkedStarCategory::point());
    std::fs::write(&pt, serde_json::to_string(&j).unwrap()).unwrap();
    let status = bin()
        .args(["construct", "orbit", "--cyclic", "2", "--linear", "-o"])
        .arg(&lin_out)
        .arg("--category")
        .arg(&pt)
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    let status = bin().arg("check").arg(&lin_out).status().unwrap();
    assert_eq!(status.code(), Some(0));
    let lin_text = std::fs::read_to_string(&lin_out).unwrap();
    let parsed: starcat::json::LinearCategoryJson = serde_json::from_str(&lin_text).unwrap();
    assert_eq!(parsed.hom_bases, vec![vec![2]]);

    // funu and fixed-points constructions validate too.
    let funu_out = dir.join("funu.json");
    let status = bin()
        .args(["construct", "funu", "-o"])
        .arg(&funu_out)
        .arg("--category")
        .arg(&cat)
        .arg("--groupoid")
        .arg(&cat)
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    assert_eq!(bin().arg("check").arg(&funu_out).status().unwrap().code(), Some(0));

    // DOT export.
    let dot_out = dir.join("orbit.dot");
    bin()
        .args(["construct", "orbit", "--cyclic", "2", "--format", "dot", "-o"])
        .arg(&dot_out)
        .arg("--category")
        .arg(&pt)
        .status()
        .unwrap();
    let dot = std::fs::read_to_string(&dot_out).unwrap();
    assert!(dot.starts_with("digraph"));
}

#[test]
fn construct_cylinder_from_morphism_file() {
    let dir = temp_dir("cylinder");
    let pt = starcat::star::MarkedStarCategory::point();
    let one = starcat::star::classifier(starcat::star::ClassifierKind::MarkedUnitary);
    let mf = serde_json::json!({
        "dom": starcat::json::marked_star_to_json(&pt),
        "cod": starcat::json::marked_star_to_json(&one),
        "obj": [0],
        "mor": [0],
    });
    let morphism = dir.join("incl.json");
    std::fs::write(&morphism, serde_json::to_string(&mf).unwrap()).unwrap();
    let out = dir.join("cylinder.json");
    let status = bin()
        .args(["construct", "cylinder", "-o"])
        .arg(&out)
        .arg("--morphism")
        .arg(&morphism)
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    assert_eq!(bin().arg("check").arg(&out).status().unwrap().code(), Some(0));
    // Mapping cylinder of pt → 𝟙⁺ has three objects.
    let parsed: starcat::json::CategoryJson =
        serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(parsed.objects.len(), 3);
}

#[test]
fn verify_suite_pi_is_deterministic() {
    let dir = temp_dir("suite");
    let out1 = dir.join("r1.json");
    let out2 = dir.join("r2.json");
    for out in [&out1, &out2] {
        let status = bin()
            .args(["verify-suite", "--suite", "pi", "--seed", "7", "--json-out"])
            .arg(out)
            .status()
            .unwrap();
        assert_eq!(status.code(), Some(0));
    }
    assert_eq!(std::fs::read(&out1).unwrap(), std::fs::read(&out2).unwrap());
}

#[test]
fn empty_corpus_dir_yields_zero_checks() {
    let dir = temp_dir("empty");
    let corpus = dir.join("corpus");
    std::fs::create_dir_all(&corpus).unwrap();
    let output = bin()
        .args(["verify-suite", "--suite", "model", "--corpus-dir"])
        .arg(&corpus)
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&output.stdout);
    assert!(stdout.contains("total: 0 checks"), "{stdout}");
}

#[test]
fn corpus_dir_runs_representability() {
    let dir = temp_dir("dircorpus");
    let corpus = dir.join("corpus");
    std::fs::create_dir_all(&corpus).unwrap();
    write_one_plus(&corpus.join("one_plus.json"));
    let output = bin()
        .args(["verify-suite", "--suite", "representability", "--corpus-dir"])
        .arg(&corpus)
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&output.stdout);
    assert!(stdout.contains("total: 3 checks"), "{stdout}");
}
