//! The shipped fixture corpus is generated from `valab_core::samples`; this
//! test keeps the files and the builders in lockstep. Run
//! `cargo test -p valab-cli --test fixtures -- --ignored regenerate` after
//! changing a builder, then commit the diff.

use std::collections::BTreeMap;
use std::path::PathBuf;
use valab_cli::format::AlgebroidFile;
use valab_core::exactnum::qi;
use valab_core::samples::{
    anchor_zero, semisimple_l1_fixture, three_dim_noncyclic_fixture, trunc_poly,
    two_dim_cyclic_fixture,
};

pub fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

/// Every generated fixture file, by name.
pub fn corpus() -> BTreeMap<&'static str, AlgebroidFile> {
    let mut out: BTreeMap<&'static str, AlgebroidFile> = BTreeMap::new();
    for (name, k) in [
        ("ex61_k1", 1usize),
        ("ex61_k2", 2),
        ("ex61_k3", 3),
        ("ex61_k4", 4),
        ("ex61_k5", 5),
    ] {
        let (a, g) = trunc_poly(k);
        out.insert(name, AlgebroidFile::from_algebra(&a, Some(&g)));
    }
    for (name, alpha) in [
        ("ex62_alpha0", 0i64),
        ("ex62_alpha1", 1),
        ("ex62_alpha2", 2),
        ("ex62_alpha3", 3),
    ] {
        out.insert(name, AlgebroidFile::from_fixture(&two_dim_cyclic_fixture(&qi(alpha))));
    }
    for (name, rho) in [
        ("ex63_rho-1", -1i64),
        ("ex63_rho0", 0),
        ("ex63_rho1", 1),
    ] {
        out.insert(
            name,
            AlgebroidFile::from_fixture(&three_dim_noncyclic_fixture(&qi(rho))),
        );
    }
    out.insert(
        "semisimple_l1",
        AlgebroidFile::from_fixture(&semisimple_l1_fixture()),
    );
    out.insert("anchor_zero", AlgebroidFile::from_fixture(&anchor_zero()));

    // Adversarial mutants: single structure constants moved off their
    // consistent values.
    let mut bad_bracket = three_dim_noncyclic_fixture(&qi(1));
    bad_bracket.algebroid.bracket.set(2, 1, 0, qi(1));
    out.insert(
        "mutant_ex63_bracket",
        AlgebroidFile::from_fixture(&bad_bracket),
    );

    let mut bad_action = two_dim_cyclic_fixture(&qi(1));
    bad_action.algebroid.action.set(1, 1, 1, qi(1));
    out.insert("mutant_ex62_action", AlgebroidFile::from_fixture(&bad_action));

    let mut bad_pairing = two_dim_cyclic_fixture(&qi(1));
    bad_pairing.algebroid.pairing.set(0, 1, 0, qi(0));
    bad_pairing.algebroid.pairing.set(0, 1, 1, qi(2));
    bad_pairing.algebroid.pairing.set(1, 0, 0, qi(0));
    bad_pairing.algebroid.pairing.set(1, 0, 1, qi(2));
    out.insert(
        "mutant_ex62_pairing",
        AlgebroidFile::from_fixture(&bad_pairing),
    );

    out
}

/// A file whose `mul` tensor is short by one entry; kept as raw text because
/// it must not round-trip.
pub const TRUNCATED_MUL: &str = r#"{
  "format_version": "1",
  "algebra": {
    "dim": 2,
    "names": ["1", "a"],
    "unit": ["1", "0"],
    "mul": [[["1", "0"], ["0", "1"]], [["0", "1"]]]
  }
}
"#;

#[test]
#[ignore = "regenerates the fixture corpus in place"]
fn regenerate() {
    let dir = fixtures_dir();
    std::fs::create_dir_all(&dir).unwrap();
    for (name, file) in corpus() {
        std::fs::write(dir.join(format!("{name}.json")), file.to_json()).unwrap();
    }
    std::fs::write(dir.join("mutant_truncated_mul.json"), TRUNCATED_MUL).unwrap();
}

#[test]
fn shipped_files_match_builders() {
    for (name, expected) in corpus() {
        let path = fixtures_dir().join(format!("{name}.json"));
        let text = std::fs::read_to_string(&path)
            .unwrap_or_else(|e| panic!("{name}: {e}; run the regenerate test"));
        assert_eq!(text, expected.to_json(), "{name} is out of sync");
    }
}

#[test]
fn fixture_files_round_trip() {
    for (name, file) in corpus() {
        let parsed = AlgebroidFile::parse(&file.to_json()).unwrap();
        assert_eq!(parsed, file, "{name}");
        assert_eq!(parsed.to_json(), file.to_json(), "{name}");
        parsed.to_core().unwrap_or_else(|e| panic!("{name}: {e}"));
    }
}

#[test]
fn truncated_mul_is_a_dimension_error() {
    let parsed = AlgebroidFile::parse(TRUNCATED_MUL).unwrap();
    let err = parsed.to_core().unwrap_err();
    assert!(matches!(
        err,
        valab_cli::format::FileError::DimensionMismatch(_)
    ));
}
